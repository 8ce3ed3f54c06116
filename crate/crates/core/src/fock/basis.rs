//! Occupation-number basis of the truncated Fock space.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grading::{Degree, Mode};
use crate::Error;

/// Sector label: the ℤ₂²-degree of a homogeneous state, equivalently the
/// pair of Witten parity eigenvalues.
pub type SectorLabel = Degree;

/// Bosonic occupations range over `0..cutoff` for both `b` and `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cutoff(usize);

impl Cutoff {
    pub const MIN: usize = 2;

    pub fn new(value: usize) -> Result<Cutoff, Error> {
        Self::at_least(value, Self::MIN)
    }

    /// Validates against a caller-specific minimum (never below [`Cutoff::MIN`]).
    pub fn at_least(value: usize, minimum: usize) -> Result<Cutoff, Error> {
        let minimum = minimum.max(Self::MIN);
        if value < minimum {
            return Err(Error::CutoffTooSmall {
                cutoff: value,
                minimum,
            });
        }
        Ok(Cutoff(value))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Dimension `4Λ²` of the truncated space.
    pub fn dim(self) -> usize {
        4 * self.0 * self.0
    }

    /// Largest level all of whose states fit under the cutoff.
    pub fn max_complete_level(self) -> u32 {
        (self.0 - 1) as u32
    }
}

/// `|n_b, n_e, n_f1, n_f2⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisState {
    pub n_b: u32,
    pub n_e: u32,
    pub n_f1: u8,
    pub n_f2: u8,
}

impl BasisState {
    pub const VACUUM: BasisState = BasisState::new(0, 0, 0, 0);

    pub const fn new(n_b: u32, n_e: u32, n_f1: u8, n_f2: u8) -> BasisState {
        BasisState {
            n_b,
            n_e,
            n_f1,
            n_f2,
        }
    }

    pub fn occupation(&self, m: Mode) -> u32 {
        match m {
            Mode::B => self.n_b,
            Mode::E => self.n_e,
            Mode::F1 => self.n_f1 as u32,
            Mode::F2 => self.n_f2 as u32,
        }
    }

    pub fn with_occupation(mut self, m: Mode, n: u32) -> BasisState {
        match m {
            Mode::B => self.n_b = n,
            Mode::E => self.n_e = n,
            Mode::F1 => self.n_f1 = n as u8,
            Mode::F2 => self.n_f2 = n as u8,
        }
        self
    }

    pub fn energy(&self) -> u32 {
        self.n_b + self.n_e + self.n_f1 as u32 + self.n_f2 as u32
    }

    /// `n_e·(1,1) + n_f1·(0,1) + n_f2·(1,0)` in ℤ₂².
    pub fn degree(&self) -> Degree {
        Mode::ALL
            .into_iter()
            .filter(|&m| self.occupation(m) % 2 == 1)
            .map(Mode::degree)
            .sum()
    }

    pub fn sector(&self) -> SectorLabel {
        self.degree()
    }

    pub fn as_array(&self) -> [u32; 4] {
        [self.n_b, self.n_e, self.n_f1 as u32, self.n_f2 as u32]
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{},{},{}⟩", self.n_b, self.n_e, self.n_f1, self.n_f2)
    }
}

/// Position of `s` in [`basis`] order, if it lies under the cutoff.
pub fn index_of(s: &BasisState, cutoff: Cutoff) -> Option<usize> {
    let l = cutoff.get();
    let (nb, ne) = (s.n_b as usize, s.n_e as usize);
    if nb >= l || ne >= l || s.n_f1 > 1 || s.n_f2 > 1 {
        return None;
    }
    Some(((nb * l + ne) * 2 + s.n_f1 as usize) * 2 + s.n_f2 as usize)
}

/// All `4Λ²` states in lexicographic `(n_b, n_e, n_f1, n_f2)` order.
pub fn basis(cutoff: Cutoff) -> Vec<BasisState> {
    let l = cutoff.get() as u32;
    let mut out = Vec::with_capacity(cutoff.dim());
    for n_b in 0..l {
        for n_e in 0..l {
            for n_f1 in 0..2 {
                for n_f2 in 0..2 {
                    out.push(BasisState::new(n_b, n_e, n_f1, n_f2));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let b2 = basis(Cutoff::new(2).unwrap());
        assert_eq!(b2.len(), 16);
        assert_eq!(b2[0], BasisState::VACUUM);
        assert_eq!(b2.iter().filter(|s| s.energy() == 1).count(), 4);
        assert_eq!(basis(Cutoff::new(3).unwrap()).len(), 36);
    }

    #[test]
    fn cutoff_too_small() {
        assert_eq!(
            Cutoff::new(1),
            Err(Error::CutoffTooSmall {
                cutoff: 1,
                minimum: 2
            })
        );
        assert!(Cutoff::at_least(2, 3).is_err());
    }

    #[test]
    fn index_matches_position() {
        let c = Cutoff::new(4).unwrap();
        for (i, s) in basis(c).iter().enumerate() {
            assert_eq!(index_of(s, c), Some(i));
        }
        assert_eq!(index_of(&BasisState::new(4, 0, 0, 0), c), None);
    }

    #[test]
    fn sector_is_witten_pair() {
        let c = Cutoff::new(3).unwrap();
        for s in basis(c) {
            let d = s.sector();
            assert_eq!(d.a as u32, (s.n_e + s.n_f2 as u32) % 2);
            assert_eq!(d.b as u32, (s.n_e + s.n_f1 as u32) % 2);
        }
        assert_eq!(BasisState::new(0, 1, 1, 1).sector(), Degree::ZERO);
        assert_eq!(BasisState::new(0, 0, 1, 1).sector(), Degree::ONE_ONE);
    }
}
