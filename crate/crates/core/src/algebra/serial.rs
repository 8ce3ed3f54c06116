//! Stable JSON form of polynomials.
//!
//! A polynomial is a list of `{word, coeff: {re, im, upow}}` records sorted by
//! word and then by `upow`; rationals are written as `"p/q"`.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::polynomial::Polynomial;
use super::word::Word;
use crate::grading::Generator;
use crate::scalar::{Gaussian, PhaseCoefficient};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub re: String,
    pub im: String,
    pub upow: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub word: Vec<Generator>,
    pub coeff: CoeffRecord,
}

pub fn format_rational(r: &Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational64, Error> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(n, d))
        }
        None => s
            .trim()
            .parse::<i64>()
            .map(Rational64::from_integer)
            .map_err(|_| bad()),
    }
}

impl Polynomial {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms()
            .flat_map(|(w, c)| {
                c.terms().map(move |(k, z)| TermRecord {
                    word: w.generators().to_vec(),
                    coeff: CoeffRecord {
                        re: format_rational(&z.re),
                        im: format_rational(&z.im),
                        upow: k,
                    },
                })
            })
            .collect()
    }

    /// Rebuilds a polynomial; words need not be normal.
    pub fn from_records(records: &[TermRecord]) -> Result<Polynomial, Error> {
        let mut grouped: BTreeMap<Word, PhaseCoefficient> = BTreeMap::new();
        for r in records {
            let z = Gaussian::new(parse_rational(&r.coeff.re)?, parse_rational(&r.coeff.im)?);
            *grouped.entry(Word::new(r.word.clone())).or_default() +=
                &PhaseCoefficient::monomial(z, r.coeff.upow);
        }
        Ok(Polynomial::from_terms(grouped))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_records()).expect("records serialize")
    }

    pub fn from_json(json: &str) -> Result<Polynomial, Error> {
        let records: Vec<TermRecord> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        Polynomial::from_records(&records)
    }
}
