//! Exhaustive search for small integer O-operators.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational};
use crate::hommod::{check_module_axioms, check_oop, HomModule};
use crate::search::postlie::{box_point, box_size};

/// Largest number of candidate operators [`brute_force_oop_search`] tries by default.
pub const DEFAULT_OOP_BUDGET: u128 = 100_000;

/// Every `T : M → A` with integer entries in `[−bound, bound]` that is an
/// O-operator for `md`, in lexicographic order of the row-major entries.
pub fn brute_force_oop_search(md: &HomModule, bound: u32, budget: u128) -> Result<Vec<Matrix>> {
    let report = check_module_axioms(md)?;
    if !report.passed {
        return Err(Error::precondition(
            format!("input is a certified {}", md.kind()),
            report,
        ));
    }
    let (n, m) = (md.algebra().dim(), md.mdim());
    let cells = n * m;
    let total = box_size(bound, cells)
        .filter(|&t| t <= budget)
        .ok_or_else(|| Error::Budget {
            what: format!("O-operator search over {n}x{m} matrices at bound {bound}"),
            needed: box_size(bound, cells).map_or_else(|| format!("(2·{bound}+1)^{cells}"), |t| t.to_string()),
            limit: budget,
        })?;
    let found: Vec<Option<Matrix>> = (0..total as usize)
        .into_par_iter()
        .map(|idx| {
            let entries = box_point(bound, cells, idx as u128)
                .into_iter()
                .map(Rational::from)
                .collect();
            let t = Matrix::new(n, m, entries).expect("shape");
            match check_oop(&t, md) {
                Ok(r) if r.passed => Some(Ok(t)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .map(|r| r.transpose())
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}
