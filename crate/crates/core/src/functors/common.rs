use crate::error::{Error, Result};
use crate::homcore::{check_axioms, CertReport, Certified, HomAlgebra, Kind, Provenance};

/// An algebra produced by a construction, with its certification.
pub type FunctorResult = Certified<HomAlgebra>;

pub(crate) fn require_kind(a: &HomAlgebra, kind: Kind) -> Result<()> {
    if a.kind() == kind {
        Ok(())
    } else {
        Err(Error::Input(format!("expected a {kind} algebra, found {}", a.kind())))
    }
}

/// Kind check plus certification of the input.
pub(crate) fn require_certified(a: &HomAlgebra, kind: Kind) -> Result<()> {
    require_kind(a, kind)?;
    let report = check_axioms(a)?;
    if report.passed {
        Ok(())
    } else {
        Err(Error::precondition(
            format!("input is a certified {kind} algebra"),
            report,
        ))
    }
}

pub(crate) fn require_report(check: &str, report: CertReport) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::precondition(check, report))
    }
}

pub(crate) fn certified(a: HomAlgebra, provenance: Provenance) -> Result<FunctorResult> {
    let cert = check_axioms(&a)?;
    Ok(Certified {
        value: a,
        cert,
        provenance,
    })
}
