//! The one-parameter R-symmetry on generators.
//!
//! With `u = e^{iλ}`:
//! `b ↦ u e`, `e ↦ u⁻¹ b`, `f1 ↦ u f2`, `f2 ↦ u⁻¹ f1`, the adjoint map on
//! creators (`b† ↦ u⁻¹ e†`, ...), and `K1 ↔ K2`.
//!
//! The map is applied word by word to the normal form and the result is
//! renormal-ordered. It does not preserve the exchange relations (it sends
//! the commuting pair `b, f1` to the anticommuting pair `e, f2`), so it is
//! only defined on normal forms, not on arbitrary representatives.

use super::operators::{annihilate, create, witten};
use super::polynomial::Polynomial;
use crate::grading::{Generator, Mode, Witten};
use crate::scalar::PhaseCoefficient;

/// Partner mode and the sign of the phase exponent on the annihilator.
fn partner(m: Mode) -> (Mode, i32) {
    match m {
        Mode::B => (Mode::E, 1),
        Mode::E => (Mode::B, -1),
        Mode::F1 => (Mode::F2, 1),
        Mode::F2 => (Mode::F1, -1),
    }
}

/// R-symmetry with phase `u^power` on each generator.
pub fn r_symmetry_with_power(x: &Polynomial, power: i32) -> Polynomial {
    x.substitute(|g| match g {
        Generator::Annihilate(m) => {
            let (p, s) = partner(m);
            annihilate(p).scale(&PhaseCoefficient::phase(s * power))
        }
        Generator::Create(m) => {
            let (p, s) = partner(m);
            create(p).scale(&PhaseCoefficient::phase(-s * power))
        }
        Generator::Klein(Witten::K1) => witten(Witten::K2),
        Generator::Klein(Witten::K2) => witten(Witten::K1),
    })
}

/// R-symmetry with the formal phase `u`.
pub fn substitute_r_symmetry(x: &Polynomial) -> Polynomial {
    r_symmetry_with_power(x, 1)
}

/// The diagonal U(1) rotation `b ↦ u^p b`, `e ↦ u^−p e`, `f1 ↦ u^p f1`,
/// `f2 ↦ u^−p f2` (adjoints conjugated, Klein generators fixed).
///
/// Two R-maps compose to one of these: `R_{u^q} ∘ R_{u^p} = P_{u^(p−q)}`.
pub fn phase_rotation(x: &Polynomial, power: i32) -> Polynomial {
    let sign = |m: Mode| match m {
        Mode::B | Mode::F1 => 1,
        Mode::E | Mode::F2 => -1,
    };
    x.substitute(|g| match g {
        Generator::Annihilate(m) => annihilate(m).scale(&PhaseCoefficient::phase(sign(m) * power)),
        Generator::Create(m) => create(m).scale(&PhaseCoefficient::phase(-sign(m) * power)),
        k @ Generator::Klein(_) => Polynomial::generator(k),
    })
}
