//! Coordinate flags: a variable order for the lexicographic valuation at the
//! chart origin, optionally restricted to a coordinate subvariety.

use super::SeriesError;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// A full flag of coordinate subvarieties through the chart origin, encoded
/// as the priority order of the variables. With a restriction mask the flag
/// lives inside the flat `V({x_i : i in mask})` and orders only the
/// surviving coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    ambient_dim: usize,
    variable_order: Vec<usize>,
    restriction_mask: Option<BTreeSet<usize>>,
}

impl Flag {
    pub fn standard(ambient_dim: usize) -> Flag {
        assert!(ambient_dim > 0);
        Flag {
            ambient_dim,
            variable_order: (0..ambient_dim).collect(),
            restriction_mask: None,
        }
    }

    pub fn with_order(ambient_dim: usize, order: Vec<usize>) -> Result<Flag, SeriesError> {
        let as_set: BTreeSet<usize> = order.iter().copied().collect();
        if order.len() != ambient_dim || as_set != (0..ambient_dim).collect() {
            return Err(SeriesError::BadFlag(format!(
                "order {order:?} is not a permutation of 0..{ambient_dim}"
            )));
        }
        Ok(Flag {
            ambient_dim,
            variable_order: order,
            restriction_mask: None,
        })
    }

    /// A flag inside the flat `V({x_i : i in mask})`; `order` permutes the
    /// surviving coordinates.
    pub fn restricted(
        ambient_dim: usize,
        mask: BTreeSet<usize>,
        order: Vec<usize>,
    ) -> Result<Flag, SeriesError> {
        if mask.iter().any(|&i| i >= ambient_dim) || mask.len() >= ambient_dim {
            return Err(SeriesError::BadFlag(format!(
                "mask {mask:?} must be a strict subset of 0..{ambient_dim}"
            )));
        }
        let survivors: BTreeSet<usize> = (0..ambient_dim).filter(|i| !mask.contains(i)).collect();
        let as_set: BTreeSet<usize> = order.iter().copied().collect();
        if order.len() != survivors.len() || as_set != survivors {
            return Err(SeriesError::BadFlag(format!(
                "order {order:?} must permute the surviving coordinates {survivors:?}"
            )));
        }
        Ok(Flag {
            ambient_dim,
            variable_order: order,
            restriction_mask: Some(mask),
        })
    }

    /// The canonical partial flag inside a flat: surviving coordinates keep
    /// their relative priority.
    pub fn restriction_to(&self, mask: &BTreeSet<usize>) -> Result<Flag, SeriesError> {
        if self.restriction_mask.is_some() {
            return Err(SeriesError::BadFlag("flag is already restricted".into()));
        }
        let order: Vec<usize> = self
            .variable_order
            .iter()
            .copied()
            .filter(|i| !mask.contains(i))
            .collect();
        Flag::restricted(self.ambient_dim, mask.clone(), order)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn variable_order(&self) -> &[usize] {
        &self.variable_order
    }

    pub fn restriction_mask(&self) -> Option<&BTreeSet<usize>> {
        self.restriction_mask.as_ref()
    }

    /// Length of the exponent vectors this flag compares.
    pub fn space_dim(&self) -> usize {
        self.ambient_dim - self.restriction_mask.as_ref().map_or(0, |m| m.len())
    }

    /// Positions into the (restricted) exponent vector, in priority order.
    /// Restricted exponent vectors lay out the surviving coordinates in
    /// ascending original index.
    pub fn comparison_positions(&self) -> Vec<usize> {
        match &self.restriction_mask {
            None => self.variable_order.clone(),
            Some(mask) => {
                let survivors: Vec<usize> =
                    (0..self.ambient_dim).filter(|i| !mask.contains(i)).collect();
                self.variable_order
                    .iter()
                    .map(|orig| survivors.iter().position(|s| s == orig).expect("survivor"))
                    .collect()
            }
        }
    }
}

/// Lexicographic comparison of exponent vectors in the flag's variable
/// order.
pub fn lex_compare(a: &[i64], b: &[i64], flag: &Flag) -> Result<Ordering, SeriesError> {
    let n = flag.space_dim();
    if a.len() != n {
        return Err(SeriesError::LengthMismatch { expected: n, got: a.len() });
    }
    if b.len() != n {
        return Err(SeriesError::LengthMismatch { expected: n, got: b.len() });
    }
    for &pos in &flag.comparison_positions() {
        match a[pos].cmp(&b[pos]) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_examples() {
        let f = Flag::standard(2);
        assert_eq!(lex_compare(&[1, 3], &[2, 0], &f).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&[0, 3], &[0, 3], &f).unwrap(), Ordering::Equal);
        assert_eq!(lex_compare(&[1, 1], &[1, 3], &f).unwrap(), Ordering::Less);
        assert!(lex_compare(&[1], &[1, 2], &f).is_err());
    }

    #[test]
    fn custom_order_changes_the_winner() {
        let f = Flag::with_order(2, vec![1, 0]).unwrap();
        // Second coordinate decides first under the swapped order.
        assert_eq!(lex_compare(&[1, 3], &[2, 0], &f).unwrap(), Ordering::Greater);
        assert!(Flag::with_order(2, vec![0, 0]).is_err());
    }

    #[test]
    fn restricted_flag_positions() {
        let mask: BTreeSet<usize> = [1].into_iter().collect();
        let f = Flag::restricted(3, mask.clone(), vec![2, 0]).unwrap();
        assert_eq!(f.space_dim(), 2);
        // Survivors are [0, 2]; priority [2, 0] maps to positions [1, 0].
        assert_eq!(f.comparison_positions(), vec![1, 0]);
        let g = Flag::standard(3).restriction_to(&mask).unwrap();
        assert_eq!(g.comparison_positions(), vec![0, 1]);
        assert!(Flag::restricted(3, [0, 1, 2].into_iter().collect(), vec![]).is_err());
    }
}
