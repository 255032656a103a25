//! Materialization of the global semigroup over a truncated grid of
//! divisor combinations: points `(v(s), n a1, n a2)` for sections of degree
//! `n` of `a1 D + a2 E`, the cone over them, and its support projection.
//! The computed cone is an inner approximation of the limit object; all
//! exact assertions downstream are confined to toric-exact instances.

use super::fibers::{fiber_check_restricted, FiberReport};
use super::GlobalError;
use crate::adelic::{augmented_base_locus, limit_series, ModelDivisor, ToricAdelicDivisor};
use crate::body::semigroup_slice;
use crate::geometry::{RatCone, RatVec};
use crate::rational::{rat_int, Rat};
use crate::series::Flag;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone)]
pub struct GlobalSemigroup {
    body_dim: usize,
    amax: i64,
    degree_bound: usize,
    pair: (String, String),
    /// `(valuation vector, grid height)` with a section witness count.
    points: BTreeMap<(Vec<i64>, (i64, i64)), usize>,
}

impl GlobalSemigroup {
    pub fn body_dim(&self) -> usize {
        self.body_dim
    }

    pub fn amax(&self) -> i64 {
        self.amax
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn pair(&self) -> (&str, &str) {
        (&self.pair.0, &self.pair.1)
    }

    pub fn points(&self) -> impl Iterator<Item = (&(Vec<i64>, (i64, i64)), &usize)> {
        self.points.iter()
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    /// Points as vectors of `Z^(d+2)`.
    pub fn graded_vectors(&self) -> Vec<Vec<i64>> {
        self.points
            .keys()
            .map(|(v, (h1, h2))| {
                let mut w = v.clone();
                w.push(*h1);
                w.push(*h2);
                w
            })
            .collect()
    }

    /// Grid heights that carry at least one section.
    pub fn support_heights(&self) -> BTreeSet<(i64, i64)> {
        self.points.keys().map(|(_, h)| *h).collect()
    }
}

#[derive(Debug, Clone)]
pub struct GlobalCone {
    /// Cone over the graded points, split into body and grading parts.
    pub cone: RatCone,
    /// Projection to the grading plane.
    pub support: RatCone,
}

fn cone_from_points(dim: usize, vectors: &[Vec<i64>]) -> GlobalCone {
    let gens: Vec<RatVec> = vectors
        .iter()
        .filter(|v| v.iter().any(|&c| c != 0))
        .map(|v| RatVec::from_ints(v))
        .collect();
    let cone = if gens.is_empty() {
        RatCone::new(vec![], (dim, 2))
    } else {
        RatCone::new(gens, (dim, 2))
    };
    let support = cone.support();
    GlobalCone { cone, support }
}

/// Enumerate the grid `|a_i| <= amax`, degrees `n <= degree_bound`, and
/// collect valuation vectors of the combined divisors. Requires the first
/// divisor to be big.
pub fn build_global(
    d: &ToricAdelicDivisor,
    e: &ToricAdelicDivisor,
    flag: &Flag,
    amax: i64,
    degree_bound: usize,
) -> Result<(GlobalSemigroup, GlobalCone), GlobalError> {
    if !d.is_big()? {
        return Err(GlobalError::Hypothesis(format!(
            "global body needs a big first divisor; {} has volume zero",
            d.name()
        )));
    }
    assert!(amax >= 1 && degree_bound >= 1);
    let dim = d.frame().dim();
    let mut points: BTreeMap<(Vec<i64>, (i64, i64)), usize> = BTreeMap::new();
    for a1 in -amax..=amax {
        for a2 in -amax..=amax {
            let combined = combine_pair(d, e, &rat_int(a1), &rat_int(a2))?;
            let series = limit_series(&combined);
            for n in 1..=degree_bound {
                let slice = semigroup_slice(&series, n, flag)?;
                let height = (a1 * n as i64, a2 * n as i64);
                for v in slice {
                    *points.entry((v, height)).or_insert(0) += 1;
                }
            }
        }
    }
    points.insert((vec![0; dim], (0, 0)), 1);
    let semigroup = GlobalSemigroup {
        body_dim: dim,
        amax,
        degree_bound,
        pair: (d.name().to_string(), e.name().to_string()),
        points,
    };
    let cone = cone_from_points(dim, &semigroup.graded_vectors());
    Ok((semigroup, cone))
}

/// The combined adelic divisor `a1 D + a2 E`.
pub fn combine_pair(
    d: &ToricAdelicDivisor,
    e: &ToricAdelicDivisor,
    a1: &Rat,
    a2: &Rat,
) -> Result<ToricAdelicDivisor, GlobalError> {
    Ok(ToricAdelicDivisor::combine(
        format!(
            "{}*{} + {}*{}",
            crate::rational::fraction_string(a1),
            d.name(),
            crate::rational::fraction_string(a2),
            e.name()
        ),
        vec![(a1.clone(), d.clone()), (a2.clone(), e.clone())],
    )?)
}

/// The restricted global pipeline along a flat: the same grid enumeration
/// over restricted image spaces, gated by the augmented-base-locus
/// hypothesis for the base divisor, plus fiber reports for the sampled
/// directions (each gated by the hypothesis for its own combination).
#[allow(clippy::too_many_arguments)]
pub fn restricted_global(
    d: &ToricAdelicDivisor,
    e: &ToricAdelicDivisor,
    flat: &BTreeSet<usize>,
    flag_in_flat: &Flag,
    ample: &ModelDivisor,
    bplus_bound: usize,
    amax: i64,
    degree_bound: usize,
    fiber_samples: &[(Rat, Rat)],
) -> Result<(GlobalSemigroup, GlobalCone, Vec<FiberReport>), GlobalError> {
    let dim = d.frame().dim();
    if flat.is_empty() || flat.len() >= dim {
        return Err(GlobalError::BadInput(format!("flat {flat:?} must be strict and nonempty")));
    }
    let (bplus, _) = augmented_base_locus(d, ample, bplus_bound)?;
    if bplus.contains_flat(flat) {
        return Err(GlobalError::Hypothesis(format!(
            "restricted global body undefined: V({flat:?}) lies inside the augmented base locus of {}",
            d.name()
        )));
    }
    let k = dim - flat.len();
    let mut points: BTreeMap<(Vec<i64>, (i64, i64)), usize> = BTreeMap::new();
    for a1 in -amax..=amax {
        for a2 in -amax..=amax {
            let combined = combine_pair(d, e, &rat_int(a1), &rat_int(a2))?;
            let restricted = limit_series(&combined).restricted(flat.clone())?;
            for n in 1..=degree_bound {
                let slice = semigroup_slice(&restricted, n, flag_in_flat)?;
                let height = (a1 * n as i64, a2 * n as i64);
                for v in slice {
                    *points.entry((v, height)).or_insert(0) += 1;
                }
            }
        }
    }
    points.insert((vec![0; k], (0, 0)), 1);
    let semigroup = GlobalSemigroup {
        body_dim: k,
        amax,
        degree_bound,
        pair: (d.name().to_string(), e.name().to_string()),
        points,
    };
    let cone = cone_from_points(k, &semigroup.graded_vectors());
    let mut reports = Vec::with_capacity(fiber_samples.len());
    for a in fiber_samples {
        reports.push(fiber_check_restricted(
            d,
            e,
            a.clone(),
            flat,
            flag_in_flat,
            ample,
            bplus_bound,
            &cone,
            degree_bound,
        )?);
    }
    Ok((semigroup, cone, reports))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::adelic::{BoundaryDivisor, ToricFrame};
    use crate::rational::rat;

    /// The interval pair: both divisors of limit-[0,1] type on the line,
    /// one approaching from below, one from above.
    pub(crate) fn interval_pair() -> (ToricAdelicDivisor, ToricAdelicDivisor) {
        let frame = ToricFrame::new(vec![vec![1], vec![-1]], [1].into_iter().collect()).unwrap();
        let boundary = BoundaryDivisor::new(&frame, vec![rat_int(0), rat_int(1)]).unwrap();
        let limit = ModelDivisor::new(&frame, vec![rat_int(0), rat_int(1)]).unwrap();
        let d = ToricAdelicDivisor::closed_form(
            "D",
            frame.clone(),
            boundary.clone(),
            limit.clone(),
            vec![rat_int(0), rat_int(1)],
            rat(1, 2),
            rat_int(1),
        )
        .unwrap();
        let e = ToricAdelicDivisor::closed_form(
            "E",
            frame.clone(),
            boundary,
            limit,
            vec![rat_int(0), rat_int(-1)],
            rat(1, 3),
            rat_int(1),
        )
        .unwrap();
        (d, e)
    }

    #[test]
    fn interval_pair_support_is_a_halfplane() {
        let (d, e) = interval_pair();
        let (semigroup, cone) = build_global(&d, &e, &Flag::standard(1), 2, 3).unwrap();
        // Sections exist exactly when a1 + a2 >= 0 on this pair.
        for h in semigroup.support_heights() {
            assert!(h.0 + h.1 >= 0, "height {h:?}");
        }
        // Support contains both halfplane boundary directions.
        assert!(cone
            .support
            .contains(&RatVec::from_ints(&[1, -1]))
            .unwrap());
        assert!(cone
            .support
            .contains(&RatVec::from_ints(&[-1, 1]))
            .unwrap());
        assert!(cone.support.contains(&RatVec::from_ints(&[1, 1])).unwrap());
        assert!(!cone.support.contains(&RatVec::from_ints(&[-1, -1])).unwrap());
        // Valuations are bounded by total height: x <= h1 + h2.
        for ((v, (h1, h2)), _) in semigroup.points() {
            assert!(v[0] <= h1 + h2);
            assert!(v[0] >= 0);
        }
    }

    #[test]
    fn non_big_first_divisor_rejected() {
        let (d, _) = interval_pair();
        let frame = d.frame().clone();
        let boundary = d.boundary().clone();
        let zero =
            ToricAdelicDivisor::constant("Z", frame.clone(), boundary, ModelDivisor::zero(&frame))
                .unwrap();
        let err = build_global(&zero, &d, &Flag::standard(1), 2, 2);
        assert!(matches!(err, Err(GlobalError::Hypothesis(_))));
    }

    #[test]
    fn zero_second_divisor_support_is_right_halfplane() {
        let (d, _) = interval_pair();
        let frame = d.frame().clone();
        let boundary = d.boundary().clone();
        let zero =
            ToricAdelicDivisor::constant("Z", frame.clone(), boundary, ModelDivisor::zero(&frame))
                .unwrap();
        let (_, cone) = build_global(&d, &zero, &Flag::standard(1), 2, 3).unwrap();
        // The zero divisor has the single section 1 at every degree, so the
        // support is the closed right halfplane together with both vertical
        // directions.
        for dir in [[1, 0], [1, 5], [1, -5], [0, 1], [0, -1]] {
            assert!(cone.support.contains(&RatVec::from_ints(&dir)).unwrap(), "{dir:?}");
        }
        assert!(!cone.support.contains(&RatVec::from_ints(&[-1, 0])).unwrap());
    }

    #[test]
    fn diagonal_pair_collapses() {
        let (d, _) = interval_pair();
        let (semigroup, _) = build_global(&d, &d, &Flag::standard(1), 2, 3).unwrap();
        for h in semigroup.support_heights() {
            assert!(h.0 + h.1 >= 0);
        }
    }
}
