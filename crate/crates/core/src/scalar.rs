//! Exact coefficients: Gaussian rationals times integer powers of a formal
//! unit phase `u = e^{iλ}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::{Complex, Complex64};
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

/// `p + q·i` with `p, q ∈ ℚ`.
pub type Gaussian = Complex<Rational64>;

pub fn gaussian(re: i64, im: i64) -> Gaussian {
    Complex::new(Rational64::from_integer(re), Rational64::from_integer(im))
}

fn gaussian_to_f64(z: &Gaussian) -> Complex64 {
    Complex64::new(
        z.re.to_f64().unwrap_or(f64::NAN),
        z.im.to_f64().unwrap_or(f64::NAN),
    )
}

/// A Laurent polynomial in `u` with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so the empty map is zero and
/// structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PhaseCoefficient {
    terms: BTreeMap<i32, Gaussian>,
}

impl PhaseCoefficient {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_gaussian(Gaussian::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_gaussian(gaussian(0, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gaussian(gaussian(n, 0))
    }

    pub fn from_rational(re: Rational64, im: Rational64) -> Self {
        Self::from_gaussian(Complex::new(re, im))
    }

    pub fn from_gaussian(z: Gaussian) -> Self {
        Self::monomial(z, 0)
    }

    /// `z · u^power`.
    pub fn monomial(z: Gaussian, power: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !z.is_zero() {
            terms.insert(power, z);
        }
        PhaseCoefficient { terms }
    }

    /// `u^power`.
    pub fn phase(power: i32) -> Self {
        Self::monomial(Gaussian::one(), power)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(power of u, coefficient)` in ascending power.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Gaussian)> {
        self.terms.iter().map(|(k, z)| (*k, z))
    }

    pub fn coefficient(&self, power: i32) -> Gaussian {
        self.terms
            .get(&power)
            .copied()
            .unwrap_or_else(Gaussian::zero)
    }

    /// True when no power of `u` other than `u^0` appears.
    pub fn is_phase_free(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }

    /// The `u^0` part, if the coefficient is phase-free.
    pub fn as_gaussian(&self) -> Option<Gaussian> {
        self.is_phase_free().then(|| self.coefficient(0))
    }

    /// Complex conjugation with `|u| = 1`: `c·u^k ↦ conj(c)·u^(−k)`.
    pub fn conj(&self) -> Self {
        PhaseCoefficient {
            terms: self.terms.iter().map(|(k, z)| (-k, z.conj())).collect(),
        }
    }

    pub fn scale(&self, z: Gaussian) -> Self {
        if z.is_zero() {
            return Self::zero();
        }
        PhaseCoefficient {
            terms: self.terms.iter().map(|(k, c)| (*k, c * z)).collect(),
        }
    }

    /// Multiplies by `u^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        PhaseCoefficient {
            terms: self.terms.iter().map(|(k, c)| (k + shift, *c)).collect(),
        }
    }

    /// Evaluates at a concrete value of `u`.
    pub fn specialize(&self, u: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(k, z)| gaussian_to_f64(z) * u.powi(*k))
            .sum()
    }

    fn add_term(&mut self, power: i32, z: Gaussian) {
        if z.is_zero() {
            return;
        }
        let entry = self.terms.entry(power).or_insert_with(Gaussian::zero);
        *entry += z;
        if entry.is_zero() {
            self.terms.remove(&power);
        }
    }
}

impl From<i64> for PhaseCoefficient {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Gaussian> for PhaseCoefficient {
    fn from(z: Gaussian) -> Self {
        Self::from_gaussian(z)
    }
}

impl AddAssign<&PhaseCoefficient> for PhaseCoefficient {
    fn add_assign(&mut self, rhs: &PhaseCoefficient) {
        for (k, z) in &rhs.terms {
            self.add_term(*k, *z);
        }
    }
}

impl Add for &PhaseCoefficient {
    type Output = PhaseCoefficient;

    fn add(self, rhs: &PhaseCoefficient) -> PhaseCoefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for PhaseCoefficient {
    type Output = PhaseCoefficient;

    fn add(mut self, rhs: PhaseCoefficient) -> PhaseCoefficient {
        self += &rhs;
        self
    }
}

impl Neg for &PhaseCoefficient {
    type Output = PhaseCoefficient;

    fn neg(self) -> PhaseCoefficient {
        PhaseCoefficient {
            terms: self.terms.iter().map(|(k, z)| (*k, -z)).collect(),
        }
    }
}

impl Neg for PhaseCoefficient {
    type Output = PhaseCoefficient;

    fn neg(self) -> PhaseCoefficient {
        -&self
    }
}

impl Sub for &PhaseCoefficient {
    type Output = PhaseCoefficient;

    fn sub(self, rhs: &PhaseCoefficient) -> PhaseCoefficient {
        self + &(-rhs)
    }
}

impl Sub for PhaseCoefficient {
    type Output = PhaseCoefficient;

    fn sub(self, rhs: PhaseCoefficient) -> PhaseCoefficient {
        &self - &rhs
    }
}

impl Mul for &PhaseCoefficient {
    type Output = PhaseCoefficient;

    fn mul(self, rhs: &PhaseCoefficient) -> PhaseCoefficient {
        let mut out = PhaseCoefficient::zero();
        for (j, x) in &self.terms {
            for (k, y) in &rhs.terms {
                out.add_term(j + k, x * y);
            }
        }
        out
    }
}

impl Mul for PhaseCoefficient {
    type Output = PhaseCoefficient;

    fn mul(self, rhs: PhaseCoefficient) -> PhaseCoefficient {
        &self * &rhs
    }
}

fn fmt_gaussian(z: &Gaussian, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => write!(f, "{}", z.re),
        (true, false) => write!(f, "{}i", z.im),
        (false, false) => write!(f, "({} + {}i)", z.re, z.im),
    }
}

impl fmt::Display for PhaseCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, z)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            fmt_gaussian(z, f)?;
            if *k != 0 {
                write!(f, "·u^{k}")?;
            }
        }
        Ok(())
    }
}
