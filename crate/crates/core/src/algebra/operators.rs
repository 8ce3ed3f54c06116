//! Named operators of the model.

use super::polynomial::Polynomial;
use crate::grading::{Generator, Mode, Witten};
use crate::scalar::{Gaussian, PhaseCoefficient};
use num_rational::Rational64;

pub fn create(m: Mode) -> Polynomial {
    Polynomial::generator(Generator::Create(m))
}

pub fn annihilate(m: Mode) -> Polynomial {
    Polynomial::generator(Generator::Annihilate(m))
}

/// `N_m = m† m`.
pub fn number_op(m: Mode) -> Polynomial {
    &create(m) * &annihilate(m)
}

/// `H00 = b†b + e†e + f1†f1 + f2†f2`.
pub fn hamiltonian_h00() -> Polynomial {
    Mode::ALL
        .into_iter()
        .map(number_op)
        .fold(Polynomial::zero(), |acc, n| acc + n)
}

/// `x† y + y† x`
fn hopping(x: Mode, y: Mode) -> Polynomial {
    &(&create(x) * &annihilate(y)) + &(&create(y) * &annihilate(x))
}

/// `Q01 = f1†b + b†f1 + f2†e + e†f2`, degree (0,1).
pub fn charge_q01() -> Polynomial {
    hopping(Mode::F1, Mode::B) + hopping(Mode::F2, Mode::E)
}

/// `Q10 = f2†b + b†f2 + f1†e + e†f1`, degree (1,0).
pub fn charge_q10() -> Polynomial {
    hopping(Mode::F2, Mode::B) + hopping(Mode::F1, Mode::E)
}

/// The abstract Witten parity generator `K_i`.
pub fn witten(k: Witten) -> Polynomial {
    Polynomial::generator(Generator::Klein(k))
}

/// Fermion species, used to pick `a1` or `a2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fermion {
    One,
    Two,
}

impl Fermion {
    pub fn mode(self) -> Mode {
        match self {
            Fermion::One => Mode::F1,
            Fermion::Two => Mode::F2,
        }
    }
}

/// `a_i = f_i K1`.
pub fn klein_fermion(i: Fermion) -> Polynomial {
    &annihilate(i.mode()) * &witten(Witten::K1)
}

/// `a_i† = K1 f_i†`.
pub fn klein_fermion_dagger(i: Fermion) -> Polynomial {
    klein_fermion(i).adjoint()
}

/// `H = b†b + e†e + a1†a1 + a2†a2`.
pub fn hamiltonian_h() -> Polynomial {
    let dressed = [Fermion::One, Fermion::Two]
        .into_iter()
        .map(|i| &klein_fermion_dagger(i) * &klein_fermion(i))
        .fold(Polynomial::zero(), |acc, n| acc + n);
    number_op(Mode::B) + number_op(Mode::E) + dressed
}

/// `Q1 = i K1 Q01`.
pub fn charge_q1() -> Polynomial {
    (&witten(Witten::K1) * &charge_q01()).scale(&PhaseCoefficient::i())
}

/// `Q2 = K1 Q10`.
pub fn charge_q2() -> Polynomial {
    &witten(Witten::K1) * &charge_q10()
}

/// `Z11` defined through `[Q10, Q01] = 2i Z11`, i.e. `Z11 = (1/2i)[Q10, Q01]`.
pub fn central_z11() -> Polynomial {
    let half = Rational64::new(1, 2);
    // 1/(2i) = −i/2
    let factor = Gaussian::new(Rational64::from_integer(0), -half);
    charge_q10()
        .commutator(&charge_q01())
        .scale_gaussian(factor)
}

/// Names accepted by [`operator_by_name`], in display order.
pub const OPERATOR_NAMES: [&str; 11] = [
    "H00", "Q01", "Q10", "K1", "K2", "H", "Q1", "Q2", "a1", "a2", "Z11",
];

pub fn operator_by_name(name: &str) -> Option<Polynomial> {
    Some(match name {
        "H00" => hamiltonian_h00(),
        "Q01" => charge_q01(),
        "Q10" => charge_q10(),
        "K1" => witten(Witten::K1),
        "K2" => witten(Witten::K2),
        "H" => hamiltonian_h(),
        "Q1" => charge_q1(),
        "Q2" => charge_q2(),
        "a1" => klein_fermion(Fermion::One),
        "a2" => klein_fermion(Fermion::Two),
        "Z11" => central_z11(),
        _ => return None,
    })
}
