//! Points and directions with exact rational coordinates.

use crate::rational::{Int, Rat};
use num_traits::Zero;
use std::fmt;

/// A point of `Q^d`. Dimension is always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec {
    coords: Vec<Rat>,
}

impl RatVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        assert!(!coords.is_empty(), "RatVec dimension must be positive");
        RatVec { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec::new(coords.iter().map(|&c| crate::rational::rat_int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        RatVec::new(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim());
        RatVec::new(
            self.coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim());
        RatVec::new(
            self.coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, t: &Rat) -> RatVec {
        RatVec::new(self.coords.iter().map(|c| c * t).collect())
    }

    /// The integer coordinate vector, when every entry is an integer fitting
    /// in `i64`.
    pub fn as_integer(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coords
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect()
    }

    pub fn as_bigint(&self) -> Option<Vec<Int>> {
        self.coords
            .iter()
            .map(|c| if c.is_integer() { Some(c.numer().clone()) } else { None })
            .collect()
    }

    /// Keep only the listed coordinates, in the given order.
    pub fn project(&self, keep: &[usize]) -> RatVec {
        RatVec::new(keep.iter().map(|&i| self.coords[i].clone()).collect())
    }

    /// Concatenate coordinates.
    pub fn concat(&self, tail: &RatVec) -> RatVec {
        let mut coords = self.coords.clone();
        coords.extend(tail.coords.iter().cloned());
        RatVec::new(coords)
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::rational::fraction_string(c))?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
