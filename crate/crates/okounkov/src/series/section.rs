//! Sections as finite rational combinations of monomials in the chart
//! coordinates. The zero section is the empty term map; stored coefficients
//! are never zero.

use super::flag::Flag;
use super::SeriesError;
use crate::rational::{jsonrat, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSection {
    ambient_dim: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl LaurentSection {
    pub fn new(
        ambient_dim: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, Rat)>,
    ) -> LaurentSection {
        assert!(ambient_dim > 0);
        let mut map: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
        for (exp, coef) in terms {
            assert_eq!(exp.len(), ambient_dim, "exponent length mismatch");
            if coef.is_zero() {
                continue;
            }
            let entry = map.entry(exp).or_insert_with(Rat::zero);
            *entry += coef;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentSection { ambient_dim, terms: map }
    }

    pub fn zero(ambient_dim: usize) -> LaurentSection {
        LaurentSection::new(ambient_dim, [])
    }

    pub fn monomial(ambient_dim: usize, exp: &[i64]) -> LaurentSection {
        LaurentSection::new(ambient_dim, [(exp.to_vec(), Rat::from_integer(1.into()))])
    }

    pub fn constant(ambient_dim: usize, value: Rat) -> LaurentSection {
        LaurentSection::new(ambient_dim, [(vec![0; ambient_dim], value)])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64]) -> Option<&Rat> {
        self.terms.get(exp)
    }

    /// True when the section is a single monomial term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.keys()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    pub fn add(&self, other: &LaurentSection) -> LaurentSection {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        LaurentSection::new(
            self.ambient_dim,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone()))
                .chain(other.terms.iter().map(|(e, c)| (e.clone(), c.clone()))),
        )
    }

    pub fn scaled(&self, by: &Rat) -> LaurentSection {
        LaurentSection::new(
            self.ambient_dim,
            self.terms.iter().map(|(e, c)| (e.clone(), c * by)),
        )
    }

    /// `self - c * other`, the echelon elimination step.
    pub fn eliminate(&self, c: &Rat, other: &LaurentSection) -> LaurentSection {
        self.add(&other.scaled(&-c.clone()))
    }

    pub fn mul(&self, other: &LaurentSection) -> LaurentSection {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut terms: Vec<(Vec<i64>, Rat)> = Vec::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                terms.push((exp, ca * cb));
            }
        }
        LaurentSection::new(self.ambient_dim, terms)
    }

    /// The flag valuation: lexicographically minimal exponent vector among
    /// the terms, in the flag's variable order. Undefined for the zero
    /// section, and the chart convention requires nonnegative exponents.
    pub fn valuation(&self, flag: &Flag) -> Result<Vec<i64>, SeriesError> {
        let positions = flag.comparison_positions();
        self.valuation_at(&positions, flag.space_dim())
    }

    pub(super) fn valuation_at(
        &self,
        positions: &[usize],
        expected_len: usize,
    ) -> Result<Vec<i64>, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::ZeroSection);
        }
        if self.ambient_dim != expected_len {
            return Err(SeriesError::LengthMismatch {
                expected: expected_len,
                got: self.ambient_dim,
            });
        }
        if self.has_negative_exponent() {
            return Err(SeriesError::NegativeExponent);
        }
        let mut best: Option<&Vec<i64>> = None;
        for exp in self.terms.keys() {
            match best {
                None => best = Some(exp),
                Some(b) => {
                    for &pos in positions {
                        match exp[pos].cmp(&b[pos]) {
                            std::cmp::Ordering::Less => {
                                best = Some(exp);
                                break;
                            }
                            std::cmp::Ordering::Greater => break,
                            std::cmp::Ordering::Equal => continue,
                        }
                    }
                }
            }
        }
        Ok(best.expect("nonzero section").clone())
    }

    /// Substitute `x_i = 0` for the masked coordinates and express the image
    /// in the surviving coordinates (ascending original index).
    pub fn restrict(&self, mask: &std::collections::BTreeSet<usize>) -> LaurentSection {
        let survivors: Vec<usize> = (0..self.ambient_dim).filter(|i| !mask.contains(i)).collect();
        assert!(!survivors.is_empty(), "restriction must keep a coordinate");
        let terms = self.terms.iter().filter_map(|(exp, c)| {
            if mask.iter().any(|&i| exp[i] != 0) {
                None
            } else {
                Some((survivors.iter().map(|&i| exp[i]).collect::<Vec<i64>>(), c.clone()))
            }
        });
        LaurentSection::new(survivors.len(), terms)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "terms": self.terms.iter().map(|(e, c)| serde_json::json!({
                "exp": e,
                "coef": jsonrat::to_value(c),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for LaurentSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{}*x^{:?}", crate::rational::fraction_string(c), e))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
