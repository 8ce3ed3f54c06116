//! Exact linear combinations of normal-ordered words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::word::{normal_form_terms, Word};
use crate::grading::{koszul_sign, total_degree, Degree, Generator};
use crate::scalar::{Gaussian, PhaseCoefficient};
use crate::Error;

/// An element of the oscillator algebra in normal form.
///
/// Every stored word is normal and every stored coefficient is nonzero, so
/// two polynomials are equal exactly when their maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, PhaseCoefficient>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn identity() -> Polynomial {
        Polynomial::scalar(PhaseCoefficient::one())
    }

    pub fn scalar(c: PhaseCoefficient) -> Polynomial {
        Polynomial::term(Word::identity(), c)
    }

    pub fn generator(g: Generator) -> Polynomial {
        Polynomial::word(Word::from([g]))
    }

    /// The normal form of a (not necessarily normal) word.
    pub fn word(w: impl Into<Word>) -> Polynomial {
        Polynomial::term(w.into(), PhaseCoefficient::one())
    }

    /// The normal form of `c · w`.
    pub fn term(w: Word, c: PhaseCoefficient) -> Polynomial {
        Polynomial {
            terms: normal_form_terms(&w, &c),
        }
    }

    /// Normal form of a sum of arbitrary words.
    pub fn from_terms<I>(terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Word, PhaseCoefficient)>,
    {
        let mut out = Polynomial::zero();
        for (w, c) in terms {
            out.accumulate_normal(normal_form_terms(&w, &c));
        }
        out
    }

    /// Wraps terms that are already normal. Callers must guarantee it.
    pub(crate) fn from_normal_terms(terms: BTreeMap<Word, PhaseCoefficient>) -> Polynomial {
        debug_assert!(terms.keys().all(Word::is_normal));
        let mut terms = terms;
        terms.retain(|_, c| !c.is_zero());
        Polynomial { terms }
    }

    fn accumulate_normal(&mut self, terms: BTreeMap<Word, PhaseCoefficient>) {
        for (w, c) in terms {
            self.add_normal_term(w, &c);
        }
    }

    fn add_normal_term(&mut self, w: Word, c: &PhaseCoefficient) {
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &PhaseCoefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> PhaseCoefficient {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// True when every coefficient is free of the formal phase.
    pub fn is_phase_free(&self) -> bool {
        self.terms.values().all(PhaseCoefficient::is_phase_free)
    }

    /// The common degree of all terms; `None` if the terms disagree. The zero
    /// polynomial is treated as degree (0,0).
    pub fn homogeneous_degree(&self) -> Option<Degree> {
        let mut degrees = self.terms.keys().map(Word::degree);
        let first = degrees.next().unwrap_or(Degree::ZERO);
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &PhaseCoefficient) -> Polynomial {
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        Polynomial::from_normal_terms(terms)
    }

    pub fn scale_gaussian(&self, z: Gaussian) -> Polynomial {
        self.scale(&PhaseCoefficient::from_gaussian(z))
    }

    /// Antilinear anti-involution: `(xy)† = y†x†` regardless of degree.
    pub fn adjoint(&self) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(w, c)| (w.adjoint(), c.conj())))
    }

    /// `⟨0|x|0⟩`, read off the normal form.
    ///
    /// A normal word containing a ladder generator vanishes on the vacuum: it
    /// either ends (before its Klein tail) in an annihilator or is a pure
    /// product of creators. Pure Klein words act as `+1` on `|0⟩`, so their
    /// coefficients add to the identity coefficient.
    pub fn vacuum_expectation(&self) -> PhaseCoefficient {
        let mut total = PhaseCoefficient::zero();
        for (w, c) in &self.terms {
            if w.generators().iter().all(|g| g.mode().is_none()) {
                total += c;
            }
        }
        total
    }

    /// `x·y − (−1)^⟨deg x|deg y⟩ y·x`.
    pub fn graded_commutator(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        let p = self
            .homogeneous_degree()
            .ok_or(Error::NonHomogeneousOperand)?;
        let q = other
            .homogeneous_degree()
            .ok_or(Error::NonHomogeneousOperand)?;
        let xy = self * other;
        let yx = other * self;
        Ok(if koszul_sign(p, q) > 0 {
            xy - yx
        } else {
            xy + yx
        })
    }

    /// The bracket of the collapsed ℤ₂ grading: sign `(−1)^(|x|·|y|)` with
    /// `|·|` the total degree.
    pub fn super_commutator(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        let p = self
            .homogeneous_degree()
            .ok_or(Error::NonHomogeneousOperand)?;
        let q = other
            .homogeneous_degree()
            .ok_or(Error::NonHomogeneousOperand)?;
        let xy = self * other;
        let yx = other * self;
        Ok(if total_degree(p) * total_degree(q) == 0 {
            xy - yx
        } else {
            xy + yx
        })
    }

    /// `x·y − y·x`.
    pub fn commutator(&self, other: &Polynomial) -> Polynomial {
        &(self * other) - &(other * self)
    }

    /// `x·y + y·x`.
    pub fn anticommutator(&self, other: &Polynomial) -> Polynomial {
        &(self * other) + &(other * self)
    }

    /// Replaces every generator by a polynomial and re-normal-orders.
    pub fn substitute<F>(&self, mut image: F) -> Polynomial
    where
        F: FnMut(Generator) -> Polynomial,
    {
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            let mut acc = Polynomial::scalar(c.clone());
            for &g in w.generators() {
                acc = &acc * &image(g);
            }
            out = out + acc;
        }
        out
    }

    /// The set of powers of `u` present in any coefficient.
    pub fn phase_powers(&self) -> Vec<i32> {
        let mut powers: Vec<i32> = self
            .terms
            .values()
            .flat_map(|c| c.terms().map(|(k, _)| k))
            .collect();
        powers.sort_unstable();
        powers.dedup();
        powers
    }
}

impl From<Generator> for Polynomial {
    fn from(g: Generator) -> Polynomial {
        Polynomial::generator(g)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_normal_term(w.clone(), c);
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (w, c) in rhs.terms {
            self.add_normal_term(w, &c);
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (wx, cx) in &self.terms {
            for (wy, cy) in &rhs.terms {
                out.accumulate_normal(normal_form_terms(&wx.concat(wy), &(cx * cy)));
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            if !w.is_empty() {
                write!(f, " {w}")?;
            }
        }
        Ok(())
    }
}
