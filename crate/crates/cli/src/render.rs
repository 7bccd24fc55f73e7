use std::io::IsTerminal;

use homcert_core::exactlin::Rational;
use homcert_core::homcore::CertReport;

/// ANSI colouring, off when `NO_COLOR` is set or stdout is not a terminal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    pub fn detect() -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Style {
            color: !no_color && std::io::stdout().is_terminal(),
        }
    }

    pub fn plain() -> Self {
        Style { color: false }
    }

    fn paint(self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn good(self, s: &str) -> String {
        self.paint("32", s)
    }

    pub fn bad(self, s: &str) -> String {
        self.paint("31", s)
    }
}

pub fn vector_text(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// One line per axiom, with the witness of each failure.
pub fn report_text(report: &CertReport, style: Style) -> String {
    let mut out = String::new();
    for a in &report.axioms {
        if a.passed {
            out.push_str(&format!("{}  {}\n", style.good("PASS"), a.name));
        } else {
            out.push_str(&format!("{}  {}", style.bad("FAIL"), a.name));
            if let Some(w) = &a.witness {
                out.push_str(&format!(
                    " at {}: lhs = {}, rhs = {}",
                    w.label(),
                    vector_text(&w.lhs),
                    vector_text(&w.rhs)
                ));
            }
            out.push('\n');
        }
    }
    let verdict = if report.passed {
        style.good("PASSED")
    } else {
        style.bad("FAILED")
    };
    out.push_str(&verdict);
    out.push('\n');
    out
}
