//! The graded semigroup of flag valuation vectors of a series, sliced by
//! degree, and the structural conditions on it: the origin alone at degree
//! zero, a degree-linear coordinate bound, and generation of the full
//! lattice.

use super::BodyError;
use crate::geometry::{lattice_index, LatticeIndex};
use crate::rational::Rat;
use crate::series::{Flag, GradedSeries};
use std::collections::{BTreeMap, BTreeSet};

/// Valuation vectors of the degree-`m` slice: leading exponents of the
/// echelonized space, one per dimension.
pub fn semigroup_slice(
    series: &GradedSeries,
    degree: usize,
    flag: &Flag,
) -> Result<BTreeSet<Vec<i64>>, BodyError> {
    let space = series.space(degree)?;
    let lead = space.leading_exponents(flag)?;
    if lead.len() != space.dim() {
        return Err(BodyError::Inconsistent(format!(
            "degree {degree}: {} leading exponents for dimension {}",
            lead.len(),
            space.dim()
        )));
    }
    Ok(lead)
}

#[derive(Debug, Clone)]
pub struct GradedSemigroup {
    ambient_dim: usize,
    slices: BTreeMap<usize, BTreeSet<Vec<i64>>>,
    source: String,
}

impl GradedSemigroup {
    pub fn materialize(
        series: &GradedSeries,
        flag: &Flag,
        bound: usize,
    ) -> Result<GradedSemigroup, BodyError> {
        let mut slices = BTreeMap::new();
        for m in 0..=bound {
            slices.insert(m, semigroup_slice(series, m, flag)?);
        }
        Ok(GradedSemigroup {
            ambient_dim: flag.space_dim(),
            slices,
            source: series.describe(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn bound(&self) -> usize {
        self.slices.keys().next_back().copied().unwrap_or(0)
    }

    pub fn slice(&self, degree: usize) -> Option<&BTreeSet<Vec<i64>>> {
        self.slices.get(&degree)
    }

    pub fn count(&self, degree: usize) -> usize {
        self.slice(degree).map_or(0, |s| s.len())
    }

    pub fn slices(&self) -> impl Iterator<Item = (&usize, &BTreeSet<Vec<i64>>)> {
        self.slices.iter()
    }

    /// The materialized points `(v, m)` of `Z^(d+1)`, degree zero included.
    pub fn graded_vectors(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for (m, slice) in &self.slices {
            for v in slice {
                let mut w = v.clone();
                w.push(*m as i64);
                out.push(w);
            }
        }
        out
    }

    /// Additivity spot check: `slice_a + slice_b ⊆ slice_{a+b}` for all
    /// materialized degree pairs. Exact; quadratic in slice sizes.
    pub fn additivity_holds(&self, max_pair_degree: usize) -> bool {
        for (a, sa) in &self.slices {
            for (b, sb) in &self.slices {
                if *a == 0 || *b == 0 || a + b > max_pair_degree {
                    continue;
                }
                let Some(target) = self.slices.get(&(a + b)) else {
                    continue;
                };
                for va in sa {
                    for vb in sb {
                        let sum: Vec<i64> = va.iter().zip(vb).map(|(x, y)| x + y).collect();
                        if !target.contains(&sum) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct ConditionsReport {
    /// Degree zero is exactly the origin.
    pub origin_at_zero: bool,
    /// `max_i v_i / m` over materialized slices; `None` when all positive
    /// degrees are empty.
    pub coordinate_bound: Option<Rat>,
    /// Every slice fits in `[0, m * ceil(bound)]^d`, certifying containment
    /// in the semigroup spanned by `{(a, 1) : 0 <= a_i <= ceil(bound)}`.
    pub bounding_certified: bool,
    /// Index in `Z^(d+1)` of the group generated by the graded vectors.
    pub index: LatticeIndex,
    /// Positive degrees all empty: the non-big degenerate case.
    pub degenerate: bool,
}

impl ConditionsReport {
    pub fn passed(&self) -> bool {
        self.origin_at_zero && self.bounding_certified && self.index.is_one() && !self.degenerate
    }
}

/// Check the three structural conditions on a materialized semigroup.
pub fn check_conditions(semigroup: &GradedSemigroup, bound: usize) -> ConditionsReport {
    let origin_at_zero = semigroup
        .slice(0)
        .map(|s| s.len() == 1 && s.contains(&vec![0; semigroup.ambient_dim()]))
        .unwrap_or(false);

    let mut coordinate_bound: Option<Rat> = None;
    let mut degenerate = true;
    for (m, slice) in semigroup.slices() {
        if *m == 0 || *m > bound {
            continue;
        }
        if !slice.is_empty() {
            degenerate = false;
        }
        for v in slice {
            for &c in v {
                let ratio = crate::rational::rat(c, *m as i64);
                if coordinate_bound.as_ref().map_or(true, |b| &ratio > b) {
                    coordinate_bound = Some(ratio);
                }
            }
        }
    }

    let bounding_certified = match &coordinate_bound {
        None => true,
        Some(b) => {
            let ceil = crate::rational::ceil_int(b);
            semigroup.slices().all(|(m, slice)| {
                slice.iter().all(|v| {
                    v.iter().all(|&c| {
                        c >= 0 && Rat::from_integer(c.into()) <= Rat::from_integer(&ceil * *m as i64)
                    })
                })
            })
        }
    };

    let vectors = semigroup.graded_vectors();
    let nonzero: Vec<Vec<i64>> = vectors
        .into_iter()
        .filter(|v| v.iter().any(|&c| c != 0))
        .collect();
    let index = lattice_index(&nonzero);

    ConditionsReport {
        origin_at_zero,
        coordinate_bound,
        bounding_certified,
        index,
        degenerate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adelic::{limit_series, BoundaryDivisor, ModelDivisor, ToricAdelicDivisor, ToricFrame};
    use crate::rational::{rat, rat_int};
    use crate::series::SectionSpace;

    fn p2_o1_series() -> GradedSeries {
        let frame = ToricFrame::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            [2].into_iter().collect(),
        )
        .unwrap();
        let boundary =
            BoundaryDivisor::new(&frame, vec![rat_int(0), rat_int(0), rat_int(1)]).unwrap();
        let d = ToricAdelicDivisor::constant(
            "O(1)",
            frame.clone(),
            boundary,
            ModelDivisor::new(&frame, vec![rat_int(0), rat_int(0), rat_int(1)]).unwrap(),
        )
        .unwrap();
        limit_series(&d)
    }

    #[test]
    fn projective_plane_slices() {
        let s = p2_o1_series();
        let flag = Flag::standard(2);
        let g1 = semigroup_slice(&s, 1, &flag).unwrap();
        let expect: BTreeSet<Vec<i64>> =
            [vec![0, 0], vec![1, 0], vec![0, 1]].into_iter().collect();
        assert_eq!(g1, expect);
        // Closed form (m+1)(m+2)/2 at m = 4.
        assert_eq!(semigroup_slice(&s, 4, &flag).unwrap().len(), 15);
    }

    #[test]
    fn conditions_pass_on_projective_plane() {
        let s = p2_o1_series();
        let g = GradedSemigroup::materialize(&s, &Flag::standard(2), 3).unwrap();
        let report = check_conditions(&g, 3);
        assert!(report.origin_at_zero);
        assert_eq!(report.coordinate_bound, Some(rat_int(1)));
        assert!(report.bounding_certified);
        assert!(report.index.is_one());
        assert!(report.passed());
        assert!(g.additivity_holds(3));
    }

    #[test]
    fn even_degree_subseries_has_index_two() {
        // Slices {0..m} at even degrees only: the graded vectors span a
        // sublattice of index 2 (determinant of (1,0),(0,2) on the even
        // part).
        let spaces: Vec<SectionSpace> = (0..=6usize)
            .map(|m| {
                if m % 2 == 0 {
                    SectionSpace::monomials(m, 1, (0..=(m as i64 / 2)).map(|k| vec![k]))
                } else {
                    SectionSpace::zero(m, 1)
                }
            })
            .collect();
        let s = GradedSeries::explicit(1, spaces).unwrap();
        let g = GradedSemigroup::materialize(&s, &Flag::standard(1), 6).unwrap();
        let report = check_conditions(&g, 6);
        assert!(report.origin_at_zero);
        assert_eq!(report.index, LatticeIndex::Finite(2.into()));
        assert!(!report.passed());
    }

    #[test]
    fn empty_series_is_degenerate() {
        let spaces: Vec<SectionSpace> = (0..=4usize)
            .map(|m| {
                if m == 0 {
                    SectionSpace::one(1)
                } else {
                    SectionSpace::zero(m, 1)
                }
            })
            .collect();
        let s = GradedSeries::explicit(1, spaces).unwrap();
        let g = GradedSemigroup::materialize(&s, &Flag::standard(1), 4).unwrap();
        let report = check_conditions(&g, 4);
        assert!(report.degenerate);
        assert!(!report.passed());
        assert_eq!(report.coordinate_bound, None);
    }

    #[test]
    fn fractional_bound_certified() {
        // Limit polytope [0, 3/2]: the coordinate bound is 3/2, certified by
        // the integer cap 2.
        let frame = ToricFrame::new(vec![vec![1], vec![-1]], [1].into_iter().collect()).unwrap();
        let boundary = BoundaryDivisor::new(&frame, vec![rat_int(0), rat_int(1)]).unwrap();
        let d = ToricAdelicDivisor::constant(
            "C",
            frame.clone(),
            boundary,
            ModelDivisor::new(&frame, vec![rat_int(0), rat(3, 2)]).unwrap(),
        )
        .unwrap();
        let s = limit_series(&d);
        let g = GradedSemigroup::materialize(&s, &Flag::standard(1), 4).unwrap();
        let report = check_conditions(&g, 4);
        assert_eq!(report.coordinate_bound, Some(rat(3, 2)));
        assert!(report.bounding_certified);
        assert!(report.passed());
    }
}
