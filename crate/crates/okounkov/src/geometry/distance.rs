//! The Hausdorff metric on nonempty rational polytopes, with the L-infinity
//! unit ball so every distance is an exact rational. Point-to-polytope
//! distances are small exact linear programs over convex coefficients.

use super::lp::{solve_lp, LpConstraint, LpOutcome, LpProblem, Rel};
use super::polytope::RatPolytope;
use super::{GeomError, RatVec};
use crate::rational::Rat;
use num_traits::Zero;

/// Exact `min_{q in P} |v - q|_oo` via a linear program over the convex
/// coefficients of the vertices.
pub fn point_polytope_distance(v: &RatVec, p: &RatPolytope) -> Result<Rat, GeomError> {
    if p.is_empty() {
        return Err(GeomError::EmptyBody);
    }
    if v.dim() != p.ambient_dim() {
        return Err(GeomError::DimensionMismatch {
            expected: p.ambient_dim(),
            got: v.dim(),
        });
    }
    let n = p.vertices().len();
    let d = p.ambient_dim();
    // Variables: lambda_1..lambda_n, t. Minimize t.
    let mut constraints = Vec::with_capacity(2 * d + 1);
    let mut ones = vec![Rat::from_integer(1.into()); n];
    ones.push(Rat::zero());
    constraints.push(LpConstraint {
        coeffs: ones,
        rel: Rel::Eq,
        rhs: Rat::from_integer(1.into()),
    });
    for i in 0..d {
        // (V lambda)_i - t <= v_i  and  -(V lambda)_i - t <= -v_i
        for sign in [1i64, -1] {
            let s = Rat::from_integer(sign.into());
            let mut coeffs: Vec<Rat> = p
                .vertices()
                .iter()
                .map(|w| w.get(i) * &s)
                .collect();
            coeffs.push(Rat::from_integer((-1).into()));
            constraints.push(LpConstraint {
                coeffs,
                rel: Rel::Le,
                rhs: v.get(i) * &s,
            });
        }
    }
    let mut objective = vec![Rat::zero(); n];
    objective.push(Rat::from_integer((-1).into()));
    let lp = LpProblem {
        num_vars: n + 1,
        maximize: objective,
        constraints,
    };
    match solve_lp(&lp)? {
        LpOutcome::Optimal { value, .. } => Ok(-value),
        other => Err(GeomError::Lp(format!(
            "distance program did not optimize: {other:?}"
        ))),
    }
}

/// Exact Hausdorff distance under the L-infinity unit ball:
/// `inf { eps : P ⊆ Q + eps B, Q ⊆ P + eps B }`, realized as the maximum
/// vertex-to-body distance in both directions.
pub fn hausdorff_distance(p: &RatPolytope, q: &RatPolytope) -> Result<Rat, GeomError> {
    if p.is_empty() || q.is_empty() {
        return Err(GeomError::EmptyBody);
    }
    if p.ambient_dim() != q.ambient_dim() {
        return Err(GeomError::DimensionMismatch {
            expected: p.ambient_dim(),
            got: q.ambient_dim(),
        });
    }
    let mut best = Rat::zero();
    for v in p.vertices() {
        let d = point_polytope_distance(v, q)?;
        if d > best {
            best = d;
        }
    }
    for w in q.vertices() {
        let d = point_polytope_distance(w, p)?;
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn hull(data: &[&[i64]]) -> RatPolytope {
        let pts: Vec<RatVec> = data.iter().map(|p| RatVec::from_ints(p)).collect();
        RatPolytope::from_points(&pts).unwrap()
    }

    #[test]
    fn interval_gap() {
        let a = hull(&[&[0], &[1]]);
        let pts = vec![RatVec::new(vec![rat(0, 1)]), RatVec::new(vec![rat(3, 2)])];
        let b = RatPolytope::from_points(&pts).unwrap();
        assert_eq!(hausdorff_distance(&a, &b).unwrap(), rat(1, 2));
    }

    #[test]
    fn identity_and_symmetry() {
        let p = hull(&[&[0, 0], &[2, 0], &[1, 2]]);
        assert_eq!(hausdorff_distance(&p, &p).unwrap(), rat_int(0));
        let q = hull(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(
            hausdorff_distance(&p, &q).unwrap(),
            hausdorff_distance(&q, &p).unwrap()
        );
    }

    #[test]
    fn nested_squares() {
        // Farthest vertex (2,2) has L-infinity distance 1 to the unit square.
        let a = hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let b = hull(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        assert_eq!(hausdorff_distance(&a, &b).unwrap(), rat_int(1));
    }

    #[test]
    fn empty_body_is_an_error() {
        let a = hull(&[&[0]]);
        assert_eq!(
            hausdorff_distance(&a, &RatPolytope::empty(1)),
            Err(GeomError::EmptyBody)
        );
    }

    #[test]
    fn point_distance_inside_is_zero() {
        let p = hull(&[&[0, 0], &[4, 0], &[0, 4]]);
        assert_eq!(
            point_polytope_distance(&RatVec::from_ints(&[1, 1]), &p).unwrap(),
            rat_int(0)
        );
        assert_eq!(
            point_polytope_distance(&RatVec::from_ints(&[5, 0]), &p).unwrap(),
            rat_int(1)
        );
    }
}
