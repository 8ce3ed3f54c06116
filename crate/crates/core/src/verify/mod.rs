//! The verification suite: one named check per claim, each producing a
//! [`CheckReport`].

mod checks;
mod report;
mod table;

pub use checks::{
    check_ccr, check_central_term, check_degeneracy, check_ground_state, check_number_operators,
    check_oracle_equivalence, check_r_symmetry, check_sector_maps, check_superisation,
    check_table1, check_theorem1, check_witten, random_word, sector_containments, Containment,
    Provenance,
};
pub use report::{CheckReport, Exactness, ReportRecord, Status};
pub use table::{compare_table1, table1_fixture, table1_mismatches, LevelRow, LevelTable};

use crate::fock::Cutoff;
use crate::Error;

/// Random words checked by [`run_all`].
pub const ORACLE_SAMPLES: usize = 100;
/// Longest random word checked by [`run_all`].
pub const ORACLE_MAX_LEN: usize = 4;

/// Check names in report order.
pub const CHECKS: [&str; 12] = [
    "ccr",
    "number_operators",
    "theorem1",
    "central_term",
    "ground_state",
    "degeneracy",
    "table1",
    "witten",
    "superisation",
    "sector_maps",
    "r_symmetry",
    "oracle_equivalence",
];

/// Runs every check. Numeric checks use `cutoff`; the degeneracy count
/// covers levels `1..=n_max`.
pub fn run_all(cutoff: usize, n_max: u32, seed: u64) -> Result<Vec<CheckReport>, Error> {
    let cutoff = Cutoff::at_least(cutoff, (n_max as usize + 1).max(3))?;
    Ok(vec![
        check_ccr(cutoff)?,
        check_number_operators(),
        check_theorem1(),
        check_central_term(cutoff)?,
        check_ground_state(cutoff),
        check_degeneracy(n_max)?,
        check_table1(),
        check_witten(cutoff)?,
        check_superisation(cutoff)?,
        check_sector_maps(cutoff)?,
        check_r_symmetry(),
        check_oracle_equivalence(cutoff, ORACLE_SAMPLES, ORACLE_MAX_LEN, seed)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_matches_run_order() {
        let reports = run_all(4, 3, 0).unwrap();
        let names: Vec<_> = reports.iter().map(|r| r.check.as_str()).collect();
        assert_eq!(names, CHECKS);
    }

    #[test]
    fn small_cutoff_is_rejected() {
        assert_eq!(
            run_all(2, 5, 0),
            Err(Error::CutoffTooSmall {
                cutoff: 2,
                minimum: 6
            })
        );
    }
}
