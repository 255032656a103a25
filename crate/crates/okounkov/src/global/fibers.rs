//! Fibers of the global cone at rational grading directions compared with
//! directly computed bodies, and strict interior tests on the support cone
//! by exact linear programming.

use super::build::{combine_pair, GlobalCone};
use super::GlobalError;
use crate::adelic::{augmented_base_locus, limit_series, ModelDivisor, ToricAdelicDivisor};
use crate::body::okounkov_truncated;
use crate::geometry::{
    hausdorff_distance, solve_lp, LpConstraint, LpOutcome, LpProblem, RatCone, RatPolytope, Rel,
};
use crate::rational::{fraction_string, Rat};
use crate::series::Flag;
use num_traits::Zero;
use std::collections::BTreeSet;

/// Strict interior membership for a two-dimensional support cone: `a` is
/// interior iff some cross of radius `eps > 0` around it stays inside, which
/// is one exact linear program over generator combinations.
pub fn interior_contains(support: &RatCone, a: &[Rat]) -> Result<bool, GlobalError> {
    assert_eq!(support.ambient_dim(), 2, "support cones live in the grading plane");
    assert_eq!(a.len(), 2);
    if support.is_zero_cone() {
        return Ok(false);
    }
    let gens = support.generators();
    let n = gens.len();
    let directions: [[i64; 2]; 4] = [[1, 0], [-1, 0], [0, 1], [0, -1]];
    // Variables: 4 blocks of generator coefficients, then eps.
    let num_vars = 4 * n + 1;
    let mut constraints = Vec::new();
    for (b, dir) in directions.iter().enumerate() {
        for row in 0..2 {
            let mut coeffs = vec![Rat::zero(); num_vars];
            for (g, gen) in gens.iter().enumerate() {
                coeffs[b * n + g] = gen.get(row).clone();
            }
            coeffs[4 * n] = -Rat::from_integer(dir[row].into());
            constraints.push(LpConstraint {
                coeffs,
                rel: Rel::Eq,
                rhs: a[row].clone(),
            });
        }
    }
    // Cap eps so the program stays bounded.
    let mut cap = vec![Rat::zero(); num_vars];
    cap[4 * n] = Rat::from_integer(1.into());
    constraints.push(LpConstraint {
        coeffs: cap,
        rel: Rel::Le,
        rhs: Rat::from_integer(1.into()),
    });
    let mut objective = vec![Rat::zero(); num_vars];
    objective[4 * n] = Rat::from_integer(1.into());
    let lp = LpProblem {
        num_vars,
        maximize: objective,
        constraints,
    };
    match solve_lp(&lp)? {
        LpOutcome::Optimal { value, .. } => Ok(value > Rat::zero()),
        LpOutcome::Infeasible => Ok(false),
        LpOutcome::Unbounded => Err(GlobalError::BadInput("capped interior program unbounded".into())),
    }
}

#[derive(Debug, Clone)]
pub enum FiberStatus {
    Checked {
        /// Exact equality of the direct body and the cone fiber; present
        /// when the direct body is toric-exact.
        exact_equal: Option<bool>,
        /// Hausdorff gap, when both bodies are nonempty.
        gap: Option<Rat>,
    },
    Skipped { reason: String },
}

#[derive(Debug, Clone)]
pub struct FiberReport {
    pub at: (Rat, Rat),
    pub direct: Option<RatPolytope>,
    pub sliced: Option<RatPolytope>,
    pub status: FiberStatus,
}

impl FiberReport {
    pub fn passed_exactly(&self) -> bool {
        matches!(
            &self.status,
            FiberStatus::Checked { exact_equal: Some(true), .. }
        )
    }

    pub fn skipped(&self) -> bool {
        matches!(&self.status, FiberStatus::Skipped { .. })
    }
}

/// Compare the Okounkov body of `a1 D + a2 E`, computed directly, with the
/// fiber of the global cone at `a`. Non-big combinations are skipped, never
/// reported as failures.
pub fn fiber_check(
    d: &ToricAdelicDivisor,
    e: &ToricAdelicDivisor,
    a: (Rat, Rat),
    flag: &Flag,
    cone: &GlobalCone,
    truncation: usize,
) -> Result<FiberReport, GlobalError> {
    let combined = combine_pair(d, e, &a.0, &a.1)?;
    if !combined.is_big()? {
        return Ok(FiberReport {
            at: a,
            direct: None,
            sliced: None,
            status: FiberStatus::Skipped {
                reason: "combination is not big; the fiber identity assumes bigness".into(),
            },
        });
    }
    let approx = okounkov_truncated(&limit_series(&combined), flag, truncation)?;
    let is_exact = approx.exact_body.is_some();
    let direct = approx.body().clone();
    let sliced = cone.cone.slice(&[a.0.clone(), a.1.clone()])?;
    finish_report(a, direct, sliced, is_exact)
}

/// The restricted analogue: direct restricted body against the restricted
/// global cone fiber, gated per-direction by the augmented-base-locus
/// hypothesis for the combination.
#[allow(clippy::too_many_arguments)]
pub fn fiber_check_restricted(
    d: &ToricAdelicDivisor,
    e: &ToricAdelicDivisor,
    a: (Rat, Rat),
    flat: &BTreeSet<usize>,
    flag_in_flat: &Flag,
    ample: &ModelDivisor,
    bplus_bound: usize,
    cone: &GlobalCone,
    truncation: usize,
) -> Result<FiberReport, GlobalError> {
    let combined = combine_pair(d, e, &a.0, &a.1)?;
    if !combined.is_big()? {
        return Ok(FiberReport {
            at: a,
            direct: None,
            sliced: None,
            status: FiberStatus::Skipped {
                reason: "combination is not big".into(),
            },
        });
    }
    let (bplus, _) = augmented_base_locus(&combined, ample, bplus_bound)?;
    if bplus.contains_flat(flat) {
        return Ok(FiberReport {
            at: a,
            direct: None,
            sliced: None,
            status: FiberStatus::Skipped {
                reason: format!(
                    "V({flat:?}) lies inside the augmented base locus of {}",
                    combined.name()
                ),
            },
        });
    }
    let restricted = limit_series(&combined).restricted(flat.clone())?;
    let approx = okounkov_truncated(&restricted, flag_in_flat, truncation)?;
    let is_exact = approx.exact_body.is_some();
    let direct = approx.body().clone();
    let sliced = cone.cone.slice(&[a.0.clone(), a.1.clone()])?;
    finish_report(a, direct, sliced, is_exact)
}

fn finish_report(
    a: (Rat, Rat),
    direct: RatPolytope,
    sliced: RatPolytope,
    direct_is_exact: bool,
) -> Result<FiberReport, GlobalError> {
    let gap = if direct.is_empty() || sliced.is_empty() {
        None
    } else {
        Some(hausdorff_distance(&direct, &sliced)?)
    };
    let exact_equal = direct_is_exact.then(|| direct == sliced);
    Ok(FiberReport {
        at: (a.0.clone(), a.1.clone()),
        direct: Some(direct),
        sliced: Some(sliced),
        status: FiberStatus::Checked { exact_equal, gap },
    })
}

impl std::fmt::Display for FiberReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let at = format!("({}, {})", fraction_string(&self.at.0), fraction_string(&self.at.1));
        match &self.status {
            FiberStatus::Skipped { reason } => write!(f, "fiber at {at}: skipped ({reason})"),
            FiberStatus::Checked { exact_equal, gap } => {
                let eq = match exact_equal {
                    Some(true) => "exactly equal",
                    Some(false) => "MISMATCH",
                    None => "compared",
                };
                match gap {
                    Some(g) => write!(f, "fiber at {at}: {eq}, gap {}", fraction_string(g)),
                    None => write!(f, "fiber at {at}: {eq}"),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::build::tests::interval_pair;
    use super::super::build::build_global;
    use super::*;
    use crate::geometry::RatVec;
    use crate::rational::{rat, rat_int};

    #[test]
    fn interior_of_the_first_quadrant() {
        let quadrant = RatCone::new(
            vec![RatVec::from_ints(&[1, 0]), RatVec::from_ints(&[0, 1])],
            (2, 0),
        );
        assert!(interior_contains(&quadrant, &[rat_int(1), rat_int(1)]).unwrap());
        assert!(!interior_contains(&quadrant, &[rat_int(1), rat_int(0)]).unwrap());
        assert!(!interior_contains(&quadrant, &[rat_int(-1), rat_int(1)]).unwrap());
        assert!(!interior_contains(&quadrant, &[rat_int(0), rat_int(0)]).unwrap());
        let plane = RatCone::new(
            vec![
                RatVec::from_ints(&[1, 0]),
                RatVec::from_ints(&[-1, 0]),
                RatVec::from_ints(&[0, 1]),
                RatVec::from_ints(&[0, -1]),
            ],
            (2, 0),
        );
        assert!(interior_contains(&plane, &[rat_int(0), rat_int(0)]).unwrap());
    }

    #[test]
    fn interval_pair_fibers_match_exactly() {
        let (d, e) = interval_pair();
        let flag = Flag::standard(1);
        let (_, cone) = build_global(&d, &e, &flag, 2, 3).unwrap();
        for (a1, a2, hi) in [(1i64, 0i64, 1i64), (1, 1, 2), (2, 1, 3), (1, 2, 3)] {
            let rep = fiber_check(&d, &e, (rat_int(a1), rat_int(a2)), &flag, &cone, 3).unwrap();
            assert!(rep.passed_exactly(), "at ({a1},{a2}): {rep}");
            let expect = RatPolytope::from_points(&[
                RatVec::from_ints(&[0]),
                RatVec::from_ints(&[hi]),
            ])
            .unwrap();
            assert_eq!(rep.direct.as_ref(), Some(&expect));
        }
    }

    #[test]
    fn boundary_direction_skipped_not_failed() {
        let (d, e) = interval_pair();
        let flag = Flag::standard(1);
        let (_, cone) = build_global(&d, &e, &flag, 2, 3).unwrap();
        let rep = fiber_check(&d, &e, (rat_int(1), rat_int(-1)), &flag, &cone, 3).unwrap();
        assert!(rep.skipped());
        // On the boundary of the support: not interior.
        assert!(!interior_contains(&cone.support, &[rat_int(1), rat_int(-1)]).unwrap());
        // Big directions are interior.
        assert!(interior_contains(&cone.support, &[rat_int(1), rat_int(1)]).unwrap());
        assert!(interior_contains(&cone.support, &[rat(1, 2), rat(1, 3)]).unwrap());
    }
}
