//! Matrix representation of the algebra on the truncated Fock space.
//!
//! Tensor factors are ordered `(b, e, f1, f2)`. A ladder operator on factor
//! `i` carries the sign `(-1)^(Σ_{j<i} ⟨deg_i|deg_j⟩ n_j)`; with the degrees
//! of this model that leaves `(-1)^{n_e}` on `f1`, `f2` and their adjoints and
//! no string on `b`, `e`. Klein generators are the diagonal parities
//! `K_i = (-1)^(n_e + n_fi)`.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use super::basis::{basis, index_of, BasisState, Cutoff, SectorLabel};
use super::sparse::SparseOperator;
use crate::algebra::{Polynomial, Word};
use crate::grading::{scalar_product, Generator, Mode};
use crate::Error;

/// Entries below this modulus count as zero when reading off supports.
pub const SUPPORT_TOLERANCE: f64 = 1e-12;

/// Max entrywise residual accepted for matrix identities.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

/// Max entrywise residual accepted when comparing symbolic results with
/// matrices (phase specialization included).
pub const ORACLE_TOLERANCE: f64 = 1e-10;

fn string_sign(m: Mode, s: &BasisState) -> f64 {
    let exponent: u32 = Mode::ALL
        .into_iter()
        .take_while(|&j| j != m)
        .map(|j| scalar_product(m.degree(), j.degree()) as u32 * s.occupation(j))
        .sum();
    if exponent.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Image of a single basis state under one generator, or `None` if it is
/// annihilated (including by truncation).
pub fn apply_generator(g: Generator, s: &BasisState, cutoff: Cutoff) -> Option<(BasisState, f64)> {
    let max_occ = |m: Mode| {
        if m.is_fermionic() {
            1
        } else {
            cutoff.get() as u32 - 1
        }
    };
    match g {
        Generator::Klein(k) => {
            let parity = s.n_e + s.occupation(k.fermion());
            Some((*s, if parity.is_multiple_of(2) { 1.0 } else { -1.0 }))
        }
        Generator::Create(m) => {
            let n = s.occupation(m);
            if n >= max_occ(m) {
                return None;
            }
            let amp = ((n + 1) as f64).sqrt() * string_sign(m, s);
            Some((s.with_occupation(m, n + 1), amp))
        }
        Generator::Annihilate(m) => {
            let n = s.occupation(m);
            if n == 0 {
                return None;
            }
            let amp = (n as f64).sqrt() * string_sign(m, s);
            Some((s.with_occupation(m, n - 1), amp))
        }
    }
}

pub fn generator_matrix(g: Generator, cutoff: Cutoff) -> SparseOperator {
    let states = basis(cutoff);
    let triplets = states.iter().enumerate().filter_map(|(col, s)| {
        apply_generator(g, s, cutoff).map(|(t, amp)| {
            let row = index_of(&t, cutoff).expect("image stays under cutoff");
            (row, col, Complex64::new(amp, 0.0))
        })
    });
    SparseOperator::from_triplets(cutoff.dim(), triplets)
}

/// Product of generator matrices, leftmost factor first.
pub fn word_matrix(w: &Word, cutoff: Cutoff) -> SparseOperator {
    w.generators()
        .iter()
        .fold(SparseOperator::identity(cutoff.dim()), |acc, &g| {
            &acc * &generator_matrix(g, cutoff)
        })
}

/// Matrix of `x` with the formal phase `u` set to `phase`.
pub fn matrix_of_with_phase(x: &Polynomial, cutoff: Cutoff, phase: Complex64) -> SparseOperator {
    let generators: BTreeMap<Generator, SparseOperator> = Generator::ALL
        .into_iter()
        .map(|g| (g, generator_matrix(g, cutoff)))
        .collect();
    let dim = cutoff.dim();
    let mut triplets = Vec::new();
    for (w, c) in x.terms() {
        let m = w
            .generators()
            .iter()
            .fold(SparseOperator::identity(dim), |acc, g| {
                &acc * &generators[g]
            });
        let scale = c.specialize(phase);
        triplets.extend(m.entries().iter().map(|&(r, k, v)| (r, k, v * scale)));
    }
    SparseOperator::from_triplets(dim, triplets)
}

/// Matrix of `x` with `u = 1`.
pub fn matrix_of(x: &Polynomial, cutoff: Cutoff) -> SparseOperator {
    matrix_of_with_phase(x, cutoff, Complex64::new(1.0, 0.0))
}

/// Largest number of creators of a single bosonic mode in `w`: the most
/// any boson occupation can rise while the word acts.
pub fn word_truncation_margin(w: &Word) -> usize {
    [Mode::B, Mode::E]
        .into_iter()
        .map(|m| {
            w.generators()
                .iter()
                .filter(|&&g| g == Generator::Create(m))
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// [`word_truncation_margin`] over all terms, at least 1.
pub fn truncation_margin(x: &Polynomial) -> usize {
    x.terms()
        .map(|(w, _)| word_truncation_margin(w))
        .max()
        .unwrap_or(0)
        .max(1)
}

/// Flags states with both boson occupations `≤ Λ − 1 − margin`.
///
/// Requires `Λ ≥ margin + 2` so that at least the first excited boson level
/// survives.
pub fn safe_mask_with_margin(cutoff: Cutoff, margin: usize) -> Result<Vec<bool>, Error> {
    let l = cutoff.get();
    Cutoff::at_least(l, margin + 2)?;
    let top = (l - 1 - margin) as u32;
    Ok(basis(cutoff)
        .iter()
        .map(|s| s.n_b <= top && s.n_e <= top)
        .collect())
}

/// States with `n_b, n_e ≤ Λ − 2`: every identity between words of length
/// at most two holds exactly there.
pub fn safe_mask(cutoff: Cutoff) -> Result<Vec<bool>, Error> {
    safe_mask_with_margin(cutoff, 1)
}

pub fn safe_projector_with_margin(cutoff: Cutoff, margin: usize) -> Result<SparseOperator, Error> {
    let mask = safe_mask_with_margin(cutoff, margin)?;
    Ok(SparseOperator::diagonal(
        mask.into_iter()
            .map(|k| Complex64::new(if k { 1.0 } else { 0.0 }, 0.0))
            .collect(),
    ))
}

pub fn safe_projector(cutoff: Cutoff) -> Result<SparseOperator, Error> {
    safe_projector_with_margin(cutoff, 1)
}

/// Basis states grouped by energy. `H00` is diagonal in the occupation
/// basis, so this is the exact spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    cutoff: Cutoff,
    levels: BTreeMap<u32, Vec<BasisState>>,
}

impl Spectrum {
    pub fn cutoff(&self) -> Cutoff {
        self.cutoff
    }

    pub fn levels(&self) -> &BTreeMap<u32, Vec<BasisState>> {
        &self.levels
    }

    /// Levels `0..=Λ−1`, the ones not cut by truncation.
    pub fn complete_levels(&self) -> impl Iterator<Item = (u32, &[BasisState])> {
        let top = self.cutoff.max_complete_level();
        self.levels.range(..=top).map(|(n, v)| (*n, v.as_slice()))
    }

    pub fn degeneracy(&self, level: u32) -> usize {
        self.levels.get(&level).map_or(0, Vec::len)
    }

    pub fn states(&self, level: u32) -> impl Iterator<Item = (BasisState, SectorLabel)> + '_ {
        self.levels
            .get(&level)
            .into_iter()
            .flatten()
            .map(|s| (*s, s.sector()))
    }

    pub fn sector_states(&self, level: u32, sector: SectorLabel) -> Vec<BasisState> {
        self.states(level)
            .filter(|(_, d)| *d == sector)
            .map(|(s, _)| s)
            .collect()
    }
}

pub fn spectrum(cutoff: Cutoff) -> Spectrum {
    let mut levels: BTreeMap<u32, Vec<BasisState>> = BTreeMap::new();
    for s in basis(cutoff) {
        levels.entry(s.energy()).or_default().push(s);
    }
    Spectrum { cutoff, levels }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectorImage {
    Into(SectorLabel),
    Mixed(Vec<SectorLabel>),
}

/// Where `x` sends the safe states of sector `s`.
///
/// The safe region is widened by [`truncation_margin`] so that no image
/// component is lost to the cutoff.
pub fn sector_image(x: &Polynomial, s: SectorLabel, cutoff: Cutoff) -> Result<SectorImage, Error> {
    let mask = safe_mask_with_margin(Cutoff::at_least(cutoff.get(), 3)?, truncation_margin(x))?;
    let m = matrix_of(x, cutoff).restrict_columns(&mask);
    let states = basis(cutoff);
    let targets: BTreeSet<SectorLabel> = m
        .entries()
        .iter()
        .filter(|&&(_, c, v)| states[c].sector() == s && v.norm() > SUPPORT_TOLERANCE)
        .map(|&(r, _, _)| states[r].sector())
        .collect();
    let mut targets: Vec<_> = targets.into_iter().collect();
    targets.sort_by_key(|d| d.canonical_index());
    match targets.len() {
        0 => Err(Error::ZeroImage(s)),
        1 => Ok(SectorImage::Into(targets[0])),
        _ => Ok(SectorImage::Mixed(targets)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::operators::*;
    use crate::grading::{Degree, Witten};
    use Generator::*;

    fn cut(n: usize) -> Cutoff {
        Cutoff::new(n).unwrap()
    }

    fn idx(s: BasisState, c: Cutoff) -> usize {
        index_of(&s, c).unwrap()
    }

    #[test]
    fn boson_number_operator_is_diagonal() {
        let c = cut(3);
        let n = &generator_matrix(Create(Mode::B), c) * &generator_matrix(Annihilate(Mode::B), c);
        for &(r, k, v) in n.entries() {
            assert_eq!(r, k);
            assert!((v.re - basis(c)[r].n_b as f64).abs() < IDENTITY_TOLERANCE);
        }
    }

    #[test]
    fn fermion_string_signs() {
        let c = cut(2);
        let f1d = generator_matrix(Create(Mode::F1), c);
        let vac = BasisState::VACUUM;
        assert_eq!(
            f1d.get(idx(BasisState::new(0, 0, 1, 0), c), idx(vac, c)).re,
            1.0
        );
        assert_eq!(
            f1d.get(
                idx(BasisState::new(0, 1, 1, 0), c),
                idx(BasisState::new(0, 1, 0, 0), c)
            )
            .re,
            -1.0
        );
    }

    #[test]
    fn exotic_and_fermion_moves_anticommute() {
        // oracle for the (−1)^{n_e} string: e† then f1† versus f1† then e†
        let c = cut(3);
        let ed = generator_matrix(Create(Mode::E), c);
        let f1d = generator_matrix(Create(Mode::F1), c);
        let sum = &(&ed * &f1d) + &(&f1d * &ed);
        assert_eq!(sum.max_abs(), 0.0);
        let f2 = generator_matrix(Annihilate(Mode::F2), c);
        let f1 = generator_matrix(Annihilate(Mode::F1), c);
        assert_eq!(&f1 * &f2, &f2 * &f1);
    }

    #[test]
    fn identity_and_h00() {
        let c = cut(4);
        assert_eq!(
            matrix_of(&Polynomial::identity(), c),
            SparseOperator::identity(c.dim())
        );
        let h = matrix_of(&hamiltonian_h00(), c);
        let states = basis(c);
        for &(r, k, v) in h.entries() {
            assert_eq!(r, k);
            assert!((v.re - states[r].energy() as f64).abs() < IDENTITY_TOLERANCE);
        }
        assert_eq!(h.nnz(), states.len() - 1);
    }

    #[test]
    fn q01_moves_boson_to_fermion() {
        let c = cut(2);
        let q = matrix_of(&charge_q01(), c);
        let mut x = vec![Complex64::default(); c.dim()];
        x[idx(BasisState::new(1, 0, 0, 0), c)] = Complex64::new(1.0, 0.0);
        let y = q.apply(&x);
        let target = idx(BasisState::new(0, 0, 1, 0), c);
        for (i, v) in y.iter().enumerate() {
            let expected = if i == target { 1.0 } else { 0.0 };
            assert_eq!(*v, Complex64::new(expected, 0.0), "component {i}");
        }
    }

    #[test]
    fn witten_matrices_are_parities() {
        let c = cut(3);
        for k in [Witten::K1, Witten::K2] {
            let m = matrix_of(&witten(k), c);
            for (i, s) in basis(c).iter().enumerate() {
                let p = s.n_e + s.occupation(k.fermion());
                assert_eq!(m.get(i, i).re, if p % 2 == 0 { 1.0 } else { -1.0 });
            }
            assert_eq!(m.nnz(), c.dim());
        }
    }

    #[test]
    fn safe_projector_rank_and_ccr() {
        assert_eq!(safe_projector(cut(3)).unwrap().nnz(), 16);
        assert!(safe_projector(cut(2)).is_err());
        let c = cut(4);
        let mask = safe_mask(c).unwrap();
        let b = generator_matrix(Annihilate(Mode::B), c);
        let bd = generator_matrix(Create(Mode::B), c);
        let ccr = &b.commutator(&bd) - &SparseOperator::identity(c.dim());
        assert!(ccr.compress(&mask).max_abs() < IDENTITY_TOLERANCE);
        // the top level breaks it
        assert!(ccr.max_abs() > 1.0);
    }

    #[test]
    fn z11_vanishes_on_safe_subspace() {
        let c = cut(4);
        let mask = safe_mask(c).unwrap();
        assert!(matrix_of(&central_z11(), c).compress(&mask).max_abs() < IDENTITY_TOLERANCE);
    }

    #[test]
    fn spectrum_levels() {
        let sp = spectrum(cut(5));
        assert_eq!(sp.degeneracy(0), 1);
        assert_eq!(sp.states(0).next().unwrap().1, Degree::ZERO);
        assert_eq!(sp.degeneracy(2), 8);
        for d in Degree::ALL {
            assert_eq!(sp.sector_states(2, d).len(), 2);
        }
        assert_eq!(sp.degeneracy(4), 16);
        assert_eq!(sp.complete_levels().count(), 5);
    }

    #[test]
    fn sector_image_examples() {
        let c = cut(4);
        assert_eq!(
            sector_image(&charge_q01(), Degree::ZERO, c),
            Ok(SectorImage::Into(Degree::ZERO_ONE))
        );
        let q10q01 = &charge_q10() * &charge_q01();
        assert_eq!(
            sector_image(&q10q01, Degree::ZERO, c),
            Ok(SectorImage::Into(Degree::ONE_ONE))
        );
        for d in Degree::ALL {
            assert_eq!(
                sector_image(&hamiltonian_h00(), d, c),
                Ok(SectorImage::Into(d))
            );
        }
        let mixed = charge_q01() + charge_q10();
        assert!(matches!(
            sector_image(&mixed, Degree::ZERO, c),
            Ok(SectorImage::Mixed(_))
        ));
        assert_eq!(
            sector_image(&Polynomial::zero(), Degree::ZERO, c),
            Err(Error::ZeroImage(Degree::ZERO))
        );
        assert!(sector_image(&charge_q01(), Degree::ZERO, cut(2)).is_err());
    }
}
