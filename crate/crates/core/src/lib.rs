//! Verification engine for the ℤ₂²-graded supersymmetric oscillator.
//!
//! Four modes (a boson `b`, an exotic boson `e`, two fermions `f1`, `f2`)
//! carry ℤ₂² degrees (0,0), (1,1), (0,1), (1,0). The crate offers two
//! independent views of the same algebra:
//!
//! * [`algebra`]: exact symbolic polynomials in the generators, reduced to a
//!   canonical normal order by a terminating rewrite system;
//! * [`fock`]: sparse complex matrices on a truncated Fock space with graded
//!   sign strings.
//!
//! [`verify`] runs every algebraic claim about the model through both.

pub mod algebra;
pub mod fock;
pub mod grading;
pub mod scalar;
pub mod verify;

pub use algebra::Polynomial;
pub use grading::{koszul_sign, scalar_product, total_degree, Degree, Generator, Mode, Witten};
pub use scalar::PhaseCoefficient;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operand is not homogeneous in Z2xZ2 degree")]
    NonHomogeneousOperand,
    #[error("CutoffTooSmall: cutoff {cutoff} is below the minimum {minimum}")]
    CutoffTooSmall { cutoff: usize, minimum: usize },
    #[error("operator annihilates every safe state of sector {0}")]
    ZeroImage(Degree),
    #[error("energy-level table mismatch at level {level}, sector {sector}")]
    FixtureMismatch { level: u32, sector: Degree },
    #[error("unknown operator {0:?}")]
    UnknownOperator(String),
    #[error("parse error: {0}")]
    Parse(String),
}
