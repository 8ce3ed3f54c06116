//! Words in the generators and the normal-ordering rewrite system.
//!
//! Canonical order is `b† < e† < f1† < f2† < b < e < f1 < f2 < K1 < K2`
//! (the derived order on [`Generator`]). A word is in normal form when it is
//! non-decreasing in that order, has no repeated fermionic generator and at
//! most one of each Klein generator.
//!
//! Every rule strictly decreases `(inversions, length)` lexicographically, so
//! rewriting terminates.

use std::collections::BTreeMap;
use std::fmt;

use crate::grading::{koszul_sign, Degree, Generator};
use crate::scalar::PhaseCoefficient;

/// An ordered product of generators. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn new(gens: Vec<Generator>) -> Word {
        Word(gens)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Degree {
        self.0.iter().map(|g| g.degree()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut gens = Vec::with_capacity(self.len() + other.len());
        gens.extend_from_slice(&self.0);
        gens.extend_from_slice(&other.0);
        Word(gens)
    }

    /// Reversed word with each generator replaced by its adjoint. Not
    /// renormalized.
    pub fn adjoint(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.adjoint()).collect())
    }

    /// Positions `i` where some rule applies to `(w[i], w[i+1])`.
    pub fn redexes(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| rule_for(pair[0], pair[1]).is_some())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_normal(&self) -> bool {
        self.redexes().is_empty()
    }

    /// Number of pairs `i < j` with `w[i] > w[j]`.
    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }
}

impl From<Vec<Generator>> for Word {
    fn from(gens: Vec<Generator>) -> Word {
        Word(gens)
    }
}

impl<const N: usize> From<[Generator; N]> for Word {
    fn from(gens: [Generator; N]) -> Word {
        Word(gens.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Right-hand side of a rewrite rule for an adjacent pair `x y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rewrite {
    /// `x y → sign · y x`, plus `1` when `x y` is an annihilator followed by
    /// its own creator.
    Exchange { sign: i8, contraction: bool },
    /// `x y → 0` (a fermionic generator squared).
    Vanish,
    /// `x y → 1` (a Klein generator squared).
    Cancel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RewriteRule {
    pub left: (Generator, Generator),
    pub right: Rewrite,
}

/// The rule applicable to the adjacent pair `x y`, if any.
pub fn rule_for(x: Generator, y: Generator) -> Option<RewriteRule> {
    use Generator::*;
    let right = if x == y {
        match x {
            Klein(_) => Rewrite::Cancel,
            Create(m) | Annihilate(m) if m.is_fermionic() => Rewrite::Vanish,
            _ => return None,
        }
    } else if x > y {
        match (x, y) {
            (Klein(k), Create(m) | Annihilate(m)) => Rewrite::Exchange {
                sign: if k.anticommutes_with(m) { -1 } else { 1 },
                contraction: false,
            },
            // K2 K1 → K1 K2
            (Klein(_), Klein(_)) => Rewrite::Exchange {
                sign: 1,
                contraction: false,
            },
            _ => Rewrite::Exchange {
                sign: koszul_sign(x.degree(), y.degree()),
                contraction: matches!((x, y), (Annihilate(a), Create(c)) if a == c),
            },
        }
    } else {
        return None;
    };
    Some(RewriteRule {
        left: (x, y),
        right,
    })
}

/// Applies `rule` at position `pos` of `w` (scaled by `c`), returning the
/// resulting terms.
fn apply_at(
    w: &[Generator],
    pos: usize,
    c: &PhaseCoefficient,
    rule: RewriteRule,
) -> Vec<(Vec<Generator>, PhaseCoefficient)> {
    let without_pair = || {
        let mut v = Vec::with_capacity(w.len() - 2);
        v.extend_from_slice(&w[..pos]);
        v.extend_from_slice(&w[pos + 2..]);
        v
    };
    match rule.right {
        Rewrite::Vanish => Vec::new(),
        Rewrite::Cancel => vec![(without_pair(), c.clone())],
        Rewrite::Exchange { sign, contraction } => {
            let mut swapped = w.to_vec();
            swapped.swap(pos, pos + 1);
            let coeff = if sign < 0 { -c } else { c.clone() };
            let mut out = vec![(swapped, coeff)];
            if contraction {
                out.push((without_pair(), c.clone()));
            }
            out
        }
    }
}

/// Rewrites `c · w` to normal form, picking among the available redexes with
/// `choose` (which receives the redex positions and returns an index into
/// that slice).
pub fn normal_form_by<F>(
    w: &Word,
    c: &PhaseCoefficient,
    mut choose: F,
) -> BTreeMap<Word, PhaseCoefficient>
where
    F: FnMut(&[usize]) -> usize,
{
    let mut out: BTreeMap<Word, PhaseCoefficient> = BTreeMap::new();
    if c.is_zero() {
        return out;
    }
    let mut pending = vec![(w.0.clone(), c.clone())];
    while let Some((gens, coeff)) = pending.pop() {
        let word = Word(gens);
        let redexes = word.redexes();
        if redexes.is_empty() {
            let slot = out.entry(word).or_default();
            *slot += &coeff;
            continue;
        }
        let pos = redexes[choose(&redexes) % redexes.len()];
        let rule = rule_for(word.0[pos], word.0[pos + 1]).expect("redex has a rule");
        pending.extend(apply_at(&word.0, pos, &coeff, rule));
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Normal form of `c · w` using leftmost-redex rewriting.
pub fn normal_form_terms(w: &Word, c: &PhaseCoefficient) -> BTreeMap<Word, PhaseCoefficient> {
    normal_form_by(w, c, |_| 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{Mode, Witten};
    use Generator::*;

    const B: Generator = Annihilate(Mode::B);
    const BD: Generator = Create(Mode::B);
    const E: Generator = Annihilate(Mode::E);
    const F1: Generator = Annihilate(Mode::F1);
    const F1D: Generator = Create(Mode::F1);
    const F2: Generator = Annihilate(Mode::F2);
    const K1: Generator = Klein(Witten::K1);
    const K2: Generator = Klein(Witten::K2);

    fn one() -> PhaseCoefficient {
        PhaseCoefficient::one()
    }

    #[test]
    fn boson_contraction() {
        let nf = normal_form_terms(&Word::from([B, BD]), &one());
        assert_eq!(nf.len(), 2);
        assert_eq!(nf[&Word::from([BD, B])], one());
        assert_eq!(nf[&Word::identity()], one());
    }

    #[test]
    fn fermion_contraction_has_minus_sign() {
        let nf = normal_form_terms(&Word::from([F1, F1D]), &one());
        assert_eq!(nf[&Word::from([F1D, F1])], PhaseCoefficient::from_int(-1));
        assert_eq!(nf[&Word::identity()], one());
    }

    #[test]
    fn fermion_square_vanishes() {
        assert!(normal_form_terms(&Word::from([F1, F1]), &one()).is_empty());
        assert!(normal_form_terms(&Word::from([F1D, BD, F1D]), &one()).is_empty());
    }

    #[test]
    fn distinct_fermions_commute() {
        let nf = normal_form_terms(&Word::from([F2, F1]), &one());
        assert_eq!(nf.len(), 1);
        assert_eq!(nf[&Word::from([F1, F2])], one());
    }

    #[test]
    fn exotic_anticommutes_with_fermions() {
        let nf = normal_form_terms(&Word::from([F1, E]), &one());
        assert_eq!(nf[&Word::from([E, F1])], PhaseCoefficient::from_int(-1));
        // already ordered
        let nf = normal_form_terms(&Word::from([E, F1]), &one());
        assert_eq!(nf[&Word::from([E, F1])], one());
    }

    #[test]
    fn klein_moves_right_with_sign() {
        let nf = normal_form_terms(&Word::from([K1, F1]), &one());
        assert_eq!(nf[&Word::from([F1, K1])], PhaseCoefficient::from_int(-1));
        let nf = normal_form_terms(&Word::from([K1, F2]), &one());
        assert_eq!(nf[&Word::from([F2, K1])], one());
        let nf = normal_form_terms(&Word::from([K2, F2]), &one());
        assert_eq!(nf[&Word::from([F2, K2])], PhaseCoefficient::from_int(-1));
        let nf = normal_form_terms(&Word::from([K1, B]), &one());
        assert_eq!(nf[&Word::from([B, K1])], one());
        let nf = normal_form_terms(&Word::from([K2, E]), &one());
        assert_eq!(nf[&Word::from([E, K2])], PhaseCoefficient::from_int(-1));
    }

    #[test]
    fn klein_squares_and_commutes() {
        let nf = normal_form_terms(&Word::from([K1, K1]), &one());
        assert_eq!(nf[&Word::identity()], one());
        let nf = normal_form_terms(&Word::from([K2, K1]), &one());
        assert_eq!(nf[&Word::from([K1, K2])], one());
        let nf = normal_form_terms(&Word::from([K1, K2, K1]), &one());
        assert_eq!(nf.len(), 1);
        assert_eq!(nf[&Word::from([K2])], one());
    }

    #[test]
    fn rules_decrease_measure() {
        for x in Generator::ALL {
            for y in Generator::ALL {
                let Some(rule) = rule_for(x, y) else { continue };
                let w = vec![x, y];
                let before = (Word(w.clone()).inversions(), 2);
                for (v, _) in apply_at(&w, 0, &one(), rule) {
                    let after = (Word(v.clone()).inversions(), v.len());
                    assert!(after < before, "{x} {y} -> {v:?}");
                }
            }
        }
    }

    #[test]
    fn normal_words_have_no_redex() {
        assert!(Word::from([BD, BD, E, F1, K1, K2]).is_normal());
        assert!(!Word::from([F1, F1]).is_normal());
        assert!(!Word::from([B, BD]).is_normal());
        assert!(Word::identity().is_normal());
    }

    #[test]
    fn display() {
        assert_eq!(Word::identity().to_string(), "1");
        assert_eq!(Word::from([F1D, B]).to_string(), "f1+ b");
    }
}
