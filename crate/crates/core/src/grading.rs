//! ℤ₂² degrees and the sign rule they induce.
//!
//! Every generator of the oscillator algebra carries a degree `(a, b)` with
//! `a, b ∈ {0, 1}`. Exchanging two homogeneous operators of degrees `p` and
//! `q` costs the sign `(-1)^⟨p|q⟩`, where `⟨p|q⟩ = p.a·q.a + p.b·q.b mod 2`.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// An element of ℤ₂ × ℤ₂.
///
/// The derived `Ord` is *not* the canonical ordering; use [`Degree::ALL`]
/// or [`Degree::canonical_index`] for that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    pub a: u8,
    pub b: u8,
}

impl Degree {
    pub const ZERO: Degree = Degree { a: 0, b: 0 };
    pub const ONE_ONE: Degree = Degree { a: 1, b: 1 };
    pub const ZERO_ONE: Degree = Degree { a: 0, b: 1 };
    pub const ONE_ZERO: Degree = Degree { a: 1, b: 0 };

    /// The four elements in canonical order: (0,0), (1,1), (0,1), (1,0).
    pub const ALL: [Degree; 4] = [
        Degree::ZERO,
        Degree::ONE_ONE,
        Degree::ZERO_ONE,
        Degree::ONE_ZERO,
    ];

    pub const fn new(a: u8, b: u8) -> Degree {
        Degree { a: a & 1, b: b & 1 }
    }

    /// Position in [`Degree::ALL`].
    pub fn canonical_index(self) -> usize {
        match (self.a, self.b) {
            (0, 0) => 0,
            (1, 1) => 1,
            (0, 1) => 2,
            _ => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        ["00", "11", "01", "10"][self.canonical_index()]
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        Degree::new(self.a ^ rhs.a, self.b ^ rhs.b)
    }
}

impl std::iter::Sum for Degree {
    fn sum<I: Iterator<Item = Degree>>(iter: I) -> Degree {
        iter.fold(Degree::ZERO, Add::add)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Degree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Degree, Error> {
        match s {
            "00" => Ok(Degree::ZERO),
            "11" => Ok(Degree::ONE_ONE),
            "01" => Ok(Degree::ZERO_ONE),
            "10" => Ok(Degree::ONE_ZERO),
            other => Err(Error::Parse(format!("invalid degree {other:?}"))),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Degree, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `⟨p|q⟩ = p.a·q.a + p.b·q.b mod 2`.
pub fn scalar_product(p: Degree, q: Degree) -> u8 {
    (p.a * q.a + p.b * q.b) & 1
}

/// `(-1)^⟨p|q⟩`: the sign picked up when swapping homogeneous operators of
/// degrees `p` and `q`.
pub fn koszul_sign(p: Degree, q: Degree) -> i8 {
    if scalar_product(p, q) == 0 {
        1
    } else {
        -1
    }
}

/// Parity of `a + b`. Zero means even in the collapsed ℤ₂ (super) grading.
pub fn total_degree(p: Degree) -> u8 {
    (p.a + p.b) & 1
}

/// The four oscillator modes, in tensor-factor order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Standard boson, degree (0,0).
    B,
    /// Exotic boson, degree (1,1).
    E,
    /// Fermion of type 1, degree (0,1).
    F1,
    /// Fermion of type 2, degree (1,0).
    F2,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::B, Mode::E, Mode::F1, Mode::F2];

    pub fn degree(self) -> Degree {
        match self {
            Mode::B => Degree::ZERO,
            Mode::E => Degree::ONE_ONE,
            Mode::F1 => Degree::ZERO_ONE,
            Mode::F2 => Degree::ONE_ZERO,
        }
    }

    /// Self-exchange sign is −1, so occupations are restricted to {0, 1}.
    pub fn is_fermionic(self) -> bool {
        koszul_sign(self.degree(), self.degree()) < 0
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::B => "b",
            Mode::E => "e",
            Mode::F1 => "f1",
            Mode::F2 => "f2",
        }
    }
}

/// Which Witten parity operator: `K1 = (-1)^(N_e + N_f1)`, `K2 = (-1)^(N_e + N_f2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witten {
    K1,
    K2,
}

impl Witten {
    /// The fermion whose number enters the parity alongside `N_e`.
    pub fn fermion(self) -> Mode {
        match self {
            Witten::K1 => Mode::F1,
            Witten::K2 => Mode::F2,
        }
    }

    pub fn anticommutes_with(self, mode: Mode) -> bool {
        mode == Mode::E || mode == self.fermion()
    }
}

/// A single generator of the algebra.
///
/// Variant and field order make the derived `Ord` the canonical normal
/// order: `b† < e† < f1† < f2† < b < e < f1 < f2 < K1 < K2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Create(Mode),
    Annihilate(Mode),
    Klein(Witten),
}

impl Generator {
    pub const ALL: [Generator; 10] = [
        Generator::Create(Mode::B),
        Generator::Create(Mode::E),
        Generator::Create(Mode::F1),
        Generator::Create(Mode::F2),
        Generator::Annihilate(Mode::B),
        Generator::Annihilate(Mode::E),
        Generator::Annihilate(Mode::F1),
        Generator::Annihilate(Mode::F2),
        Generator::Klein(Witten::K1),
        Generator::Klein(Witten::K2),
    ];

    pub fn degree(self) -> Degree {
        match self {
            Generator::Create(m) | Generator::Annihilate(m) => m.degree(),
            Generator::Klein(_) => Degree::ZERO,
        }
    }

    pub fn mode(self) -> Option<Mode> {
        match self {
            Generator::Create(m) | Generator::Annihilate(m) => Some(m),
            Generator::Klein(_) => None,
        }
    }

    pub fn is_dagger(self) -> bool {
        matches!(self, Generator::Create(_))
    }

    pub fn adjoint(self) -> Generator {
        match self {
            Generator::Create(m) => Generator::Annihilate(m),
            Generator::Annihilate(m) => Generator::Create(m),
            k @ Generator::Klein(_) => k,
        }
    }

    /// Token used in serialized words: `"b"`, `"b+"`, ..., `"K1"`, `"K2"`.
    pub fn token(self) -> &'static str {
        match self {
            Generator::Create(Mode::B) => "b+",
            Generator::Create(Mode::E) => "e+",
            Generator::Create(Mode::F1) => "f1+",
            Generator::Create(Mode::F2) => "f2+",
            Generator::Annihilate(Mode::B) => "b",
            Generator::Annihilate(Mode::E) => "e",
            Generator::Annihilate(Mode::F1) => "f1",
            Generator::Annihilate(Mode::F2) => "f2",
            Generator::Klein(Witten::K1) => "K1",
            Generator::Klein(Witten::K2) => "K2",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Generator, Error> {
        Generator::ALL
            .into_iter()
            .find(|g| g.token() == s)
            .ok_or_else(|| Error::Parse(format!("unknown generator token {s:?}")))
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.token())
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Generator, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_product_examples() {
        assert_eq!(scalar_product(Degree::ZERO_ONE, Degree::ONE_ZERO), 0);
        assert_eq!(scalar_product(Degree::ONE_ONE, Degree::ZERO_ONE), 1);
        for q in Degree::ALL {
            assert_eq!(scalar_product(Degree::ZERO, q), 0);
        }
    }

    #[test]
    fn koszul_sign_examples() {
        assert_eq!(koszul_sign(Degree::ONE_ONE, Degree::ONE_ONE), 1);
        assert_eq!(koszul_sign(Degree::ZERO_ONE, Degree::ZERO_ONE), -1);
        assert_eq!(koszul_sign(Degree::ONE_ONE, Degree::ONE_ZERO), -1);
    }

    #[test]
    fn total_degree_examples() {
        assert_eq!(total_degree(Degree::ONE_ONE), 0);
        assert_eq!(total_degree(Degree::ZERO), 0);
        assert_eq!(total_degree(Degree::ZERO_ONE), 1);
    }

    #[test]
    fn exhaustive_group_and_form_laws() {
        for p in Degree::ALL {
            assert_eq!(p + Degree::ZERO, p);
            assert_eq!(p + p, Degree::ZERO);
            for q in Degree::ALL {
                assert_eq!(p + q, q + p);
                assert_eq!(scalar_product(p, q), scalar_product(q, p));
                assert_eq!(koszul_sign(p, q) * koszul_sign(q, p), 1);
                assert_eq!(total_degree(p + q), (total_degree(p) + total_degree(q)) % 2);
                for r in Degree::ALL {
                    assert_eq!((p + q) + r, p + (q + r));
                    assert_eq!(
                        scalar_product(p + q, r),
                        (scalar_product(p, r) + scalar_product(q, r)) % 2
                    );
                }
            }
        }
    }

    #[test]
    fn canonical_order_and_strings() {
        let strs: Vec<_> = Degree::ALL.iter().map(|d| d.to_string()).collect();
        assert_eq!(strs, ["00", "11", "01", "10"]);
        for d in Degree::ALL {
            assert_eq!(d.as_str().parse::<Degree>().unwrap(), d);
            assert_eq!(Degree::ALL[d.canonical_index()], d);
        }
        assert!("2x".parse::<Degree>().is_err());
    }

    #[test]
    fn generator_degrees() {
        assert_eq!(Generator::Create(Mode::B).degree(), Degree::ZERO);
        assert_eq!(Generator::Annihilate(Mode::E).degree(), Degree::ONE_ONE);
        assert_eq!(Generator::Create(Mode::F1).degree(), Degree::ZERO_ONE);
        assert_eq!(Generator::Annihilate(Mode::F2).degree(), Degree::ONE_ZERO);
        assert_eq!(Generator::Klein(Witten::K1).degree(), Degree::ZERO);
        assert_eq!(Generator::Klein(Witten::K2).degree(), Degree::ZERO);
        for g in Generator::ALL {
            assert_eq!(g.adjoint().degree(), g.degree());
            assert_eq!(g.adjoint().adjoint(), g);
            assert_eq!(g.token().parse::<Generator>().unwrap(), g);
        }
    }

    #[test]
    fn derived_order_is_canonical() {
        let mut sorted = Generator::ALL;
        sorted.sort();
        assert_eq!(sorted, Generator::ALL);
    }

    #[test]
    fn statistics() {
        assert!(!Mode::B.is_fermionic());
        assert!(!Mode::E.is_fermionic());
        assert!(Mode::F1.is_fermionic());
        assert!(Mode::F2.is_fermionic());
    }
}
