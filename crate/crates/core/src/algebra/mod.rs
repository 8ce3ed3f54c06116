//! Symbolic *-algebra of the oscillator generators modulo the graded
//! CCR/CAR and Klein relations.

pub mod operators;
mod polynomial;
pub mod rsym;
mod serial;
mod word;

pub use polynomial::Polynomial;
pub use rsym::{phase_rotation, r_symmetry_with_power, substitute_r_symmetry};
pub use serial::{format_rational, parse_rational, CoeffRecord, TermRecord};
pub use word::{normal_form_by, normal_form_terms, rule_for, Rewrite, RewriteRule, Word};

use crate::scalar::PhaseCoefficient;

/// Normal form of `c · w` as a polynomial.
pub fn normal_form(w: &Word, c: &PhaseCoefficient) -> Polynomial {
    Polynomial::term(w.clone(), c.clone())
}
