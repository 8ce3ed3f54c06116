//! The transcribed energy-level table and its comparison against the
//! enumerated spectrum.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;

use crate::fock::{BasisState, Spectrum};
use crate::grading::Degree;
use crate::Error;

const TABLE1_JSON: &str = include_str!("../../fixtures/table1.json");

#[derive(Debug, Clone, Deserialize)]
pub struct LevelTable {
    pub version: u32,
    pub description: String,
    pub levels: Vec<LevelRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct LevelRow {
    pub level: u32,
    pub cells: BTreeMap<Degree, Vec<[u32; 4]>>,
}

impl LevelRow {
    pub fn cell(&self, sector: Degree) -> BTreeSet<BasisState> {
        self.cells
            .get(&sector)
            .into_iter()
            .flatten()
            .map(|&[b, e, f1, f2]| BasisState::new(b, e, f1 as u8, f2 as u8))
            .collect()
    }
}

/// Levels 0 through 4, one cell per sector.
pub fn table1_fixture() -> LevelTable {
    serde_json::from_str(TABLE1_JSON).expect("bundled table fixture parses")
}

/// Every `(level, sector)` cell whose state set differs from the spectrum.
pub fn table1_mismatches(spectrum: &Spectrum, table: &LevelTable) -> Vec<(u32, Degree)> {
    let mut out = Vec::new();
    for row in &table.levels {
        for sector in Degree::ALL {
            let generated: BTreeSet<BasisState> = spectrum
                .sector_states(row.level, sector)
                .into_iter()
                .collect();
            if generated != row.cell(sector) {
                out.push((row.level, sector));
            }
        }
    }
    out
}

pub fn compare_table1(spectrum: &Spectrum, table: &LevelTable) -> Result<(), Error> {
    match table1_mismatches(spectrum, table).first() {
        Some(&(level, sector)) => Err(Error::FixtureMismatch { level, sector }),
        None => Ok(()),
    }
}
