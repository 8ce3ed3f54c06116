//! Coordinate-format complex sparse matrices.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::Error;

/// A square complex matrix stored as sorted `(row, col, value)` triplets.
///
/// Entries are unique, sorted by `(row, col)`, in range, and never exactly
/// zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOperator {
    dim: usize,
    entries: Vec<(usize, usize, Complex64)>,
}

impl SparseOperator {
    pub fn zero(dim: usize) -> Self {
        SparseOperator {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| Complex64::new(1.0, 0.0)).collect())
    }

    pub fn diagonal(values: Vec<Complex64>) -> Self {
        let dim = values.len();
        Self::from_triplets(dim, values.into_iter().enumerate().map(|(i, v)| (i, i, v)))
    }

    /// Builds from arbitrary triplets; duplicates are summed.
    ///
    /// Panics if an index is out of range.
    pub fn from_triplets<I>(dim: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Complex64)>,
    {
        let mut acc: BTreeMap<(usize, usize), Complex64> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(
                r < dim && c < dim,
                "entry ({r}, {c}) outside dimension {dim}"
            );
            *acc.entry((r, c)).or_default() += v;
        }
        SparseOperator {
            dim,
            entries: acc
                .into_iter()
                .filter(|(_, v)| *v != Complex64::new(0.0, 0.0))
                .map(|((r, c), v)| (r, c, v))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, usize, Complex64)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries
            .binary_search_by(|&(r, c, _)| (r, c).cmp(&(row, col)))
            .map(|i| self.entries[i].2)
            .unwrap_or_default()
    }

    /// Largest entry modulus; zero for the zero matrix.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.2.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_triplets(
            self.dim,
            self.entries.iter().map(|&(r, k, v)| (r, k, v * c)),
        )
    }

    pub fn adjoint(&self) -> Self {
        Self::from_triplets(
            self.dim,
            self.entries.iter().map(|&(r, c, v)| (c, r, v.conj())),
        )
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.dim);
        let mut y = vec![Complex64::default(); self.dim];
        for &(r, c, v) in &self.entries {
            y[r] += v * x[c];
        }
        y
    }

    /// Column `col` as a sparse list of `(row, value)`.
    pub fn column(&self, col: usize) -> Vec<(usize, Complex64)> {
        self.entries
            .iter()
            .filter(|e| e.1 == col)
            .map(|&(r, _, v)| (r, v))
            .collect()
    }

    /// `M·P` where `P` keeps the columns flagged in `keep`.
    pub fn restrict_columns(&self, keep: &[bool]) -> Self {
        assert_eq!(keep.len(), self.dim);
        SparseOperator {
            dim: self.dim,
            entries: self.entries.iter().copied().filter(|e| keep[e.1]).collect(),
        }
    }

    /// `P·M·P` for the coordinate projector flagged by `keep`.
    pub fn compress(&self, keep: &[bool]) -> Self {
        assert_eq!(keep.len(), self.dim);
        SparseOperator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|e| keep[e.0] && keep[e.1])
                .collect(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SparseJson::from(self)).expect("sparse operator serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let raw: SparseJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(bad) = raw
            .entries
            .iter()
            .find(|e| e.0 >= raw.dim || e.1 >= raw.dim)
        {
            return Err(Error::Parse(format!(
                "entry ({}, {}) outside dimension {}",
                bad.0, bad.1, raw.dim
            )));
        }
        Ok(Self::from_triplets(
            raw.dim,
            raw.entries
                .into_iter()
                .map(|(r, c, re, im)| (r, c, Complex64::new(re, im))),
        ))
    }
}

/// `{dim, entries: [[row, col, re, im], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
struct SparseJson {
    dim: usize,
    entries: Vec<(usize, usize, f64, f64)>,
}

impl From<&SparseOperator> for SparseJson {
    fn from(m: &SparseOperator) -> Self {
        SparseJson {
            dim: m.dim,
            entries: m
                .entries
                .iter()
                .map(|&(r, c, v)| (r, c, v.re, v.im))
                .collect(),
        }
    }
}

impl Add for &SparseOperator {
    type Output = SparseOperator;

    fn add(self, rhs: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, rhs.dim);
        SparseOperator::from_triplets(
            self.dim,
            self.entries.iter().chain(rhs.entries.iter()).copied(),
        )
    }
}

impl Sub for &SparseOperator {
    type Output = SparseOperator;

    fn sub(self, rhs: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, rhs.dim);
        SparseOperator::from_triplets(
            self.dim,
            self.entries
                .iter()
                .copied()
                .chain(rhs.entries.iter().map(|&(r, c, v)| (r, c, -v))),
        )
    }
}

impl Mul for &SparseOperator {
    type Output = SparseOperator;

    fn mul(self, rhs: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, rhs.dim);
        let mut rows: Vec<Vec<(usize, Complex64)>> = vec![Vec::new(); rhs.dim];
        for &(r, c, v) in &rhs.entries {
            rows[r].push((c, v));
        }
        let triplets = self
            .entries
            .iter()
            .flat_map(|&(r, k, a)| rows[k].iter().map(move |&(c, b)| (r, c, a * b)));
        SparseOperator::from_triplets(self.dim, triplets)
    }
}
