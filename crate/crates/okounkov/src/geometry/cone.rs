//! Rational cones given by generator lists, with a recorded split of the
//! ambient space into body coordinates and grading coordinates. Cones are
//! never hulled in their own ambient space; slices at fixed grading heights
//! are computed by enumerating basic nonnegative generator combinations,
//! which stays exact in any ambient dimension.

use super::lp::{solve_lp, LpConstraint, LpOutcome, LpProblem, Rel};
use super::polytope::RatPolytope;
use super::{GeomError, RatVec};
use crate::rational::{primitive_from_rational, Rat};
use num_traits::Zero;
use std::collections::BTreeSet;

/// The set of nonnegative rational combinations of the generators, living in
/// `R^(d+k)` where `d` counts body coordinates and `k` grading coordinates.
/// An empty generator list is the zero cone.
#[derive(Clone, Debug)]
pub struct RatCone {
    generators: Vec<RatVec>,
    split: (usize, usize),
}

/// Result of slicing a cone at a grading height.
pub type ConeSlice = RatPolytope;

impl RatCone {
    /// Generators are normalized to primitive integer directions and
    /// deduplicated; zero vectors are dropped.
    pub fn new(generators: Vec<RatVec>, split: (usize, usize)) -> RatCone {
        let ambient = split.0 + split.1;
        assert!(ambient > 0);
        let mut seen = BTreeSet::new();
        let mut gens = Vec::new();
        for g in generators {
            assert_eq!(g.dim(), ambient, "generator dimension mismatch");
            if let Some(prim) = primitive_from_rational(g.coords()) {
                if seen.insert(prim.clone()) {
                    gens.push(RatVec::new(
                        prim.into_iter().map(Rat::from_integer).collect(),
                    ));
                }
            }
        }
        RatCone {
            generators: gens,
            split,
        }
    }

    pub fn generators(&self) -> &[RatVec] {
        &self.generators
    }

    pub fn split(&self) -> (usize, usize) {
        self.split
    }

    pub fn ambient_dim(&self) -> usize {
        self.split.0 + self.split.1
    }

    pub fn is_zero_cone(&self) -> bool {
        self.generators.is_empty()
    }

    /// Projection to the grading coordinates, as a cone in `R^k`.
    pub fn support(&self) -> RatCone {
        let (d, k) = self.split;
        assert!(k > 0, "support needs grading coordinates");
        let gens: Vec<RatVec> = self
            .generators
            .iter()
            .filter_map(|g| {
                let tail: Vec<Rat> = g.coords()[d..].to_vec();
                if tail.iter().all(|c| c.is_zero()) {
                    None
                } else {
                    Some(RatVec::new(tail))
                }
            })
            .collect();
        RatCone::new(gens, (k, 0))
    }

    /// Exact membership: is `x` a nonnegative combination of the generators?
    pub fn contains(&self, x: &RatVec) -> Result<bool, GeomError> {
        assert_eq!(x.dim(), self.ambient_dim());
        if x.is_zero() {
            return Ok(true);
        }
        if self.generators.is_empty() {
            return Ok(false);
        }
        let n = self.generators.len();
        let constraints = (0..self.ambient_dim())
            .map(|row| LpConstraint {
                coeffs: self
                    .generators
                    .iter()
                    .map(|g| g.get(row).clone())
                    .collect(),
                rel: Rel::Eq,
                rhs: x.get(row).clone(),
            })
            .collect();
        let lp = LpProblem {
            num_vars: n,
            maximize: vec![Rat::zero(); n],
            constraints,
        };
        Ok(!matches!(solve_lp(&lp)?, LpOutcome::Infeasible))
    }

    /// The fiber `{x in R^d : (x, height) in cone}` at a nonzero grading
    /// height. The fiber must be bounded; an unbounded fiber signals a
    /// defective graded input and is an error. Enumerates the basic feasible
    /// combinations (supports of size at most k) whose heights hit the
    /// target, then hulls their body parts.
    pub fn slice(&self, height: &[Rat]) -> Result<ConeSlice, GeomError> {
        let (d, k) = self.split;
        assert_eq!(height.len(), k);
        if height.iter().all(|c| c.is_zero()) {
            return Err(GeomError::ZeroHeight);
        }
        if self.generators.is_empty() {
            return Ok(RatPolytope::empty(d));
        }
        let n = self.generators.len();
        let heights: Vec<Vec<Rat>> = self
            .generators
            .iter()
            .map(|g| g.coords()[d..].to_vec())
            .collect();
        let bodies: Vec<Vec<Rat>> = self
            .generators
            .iter()
            .map(|g| g.coords()[..d].to_vec())
            .collect();

        // Feasibility of the height system.
        let height_rows = |rhs: &[Rat]| -> Vec<LpConstraint> {
            (0..k)
                .map(|row| LpConstraint {
                    coeffs: heights.iter().map(|h| h[row].clone()).collect(),
                    rel: Rel::Eq,
                    rhs: rhs[row].clone(),
                })
                .collect()
        };
        let feas = LpProblem {
            num_vars: n,
            maximize: vec![Rat::zero(); n],
            constraints: height_rows(height),
        };
        if matches!(solve_lp(&feas)?, LpOutcome::Infeasible) {
            return Ok(RatPolytope::empty(d));
        }

        // Boundedness: the fiber recedes along {X mu : H mu = 0, mu >= 0};
        // that set is {0} iff every coordinate of it is maximized at 0.
        let zero = vec![Rat::zero(); k];
        for coord in 0..d {
            for sign in [1i64, -1] {
                let lp = LpProblem {
                    num_vars: n,
                    maximize: bodies
                        .iter()
                        .map(|b| &b[coord] * Rat::from_integer(sign.into()))
                        .collect(),
                    constraints: height_rows(&zero),
                };
                match solve_lp(&lp)? {
                    LpOutcome::Unbounded => return Err(GeomError::UnboundedSlice),
                    LpOutcome::Optimal { value, .. } if !value.is_zero() => {
                        return Err(GeomError::UnboundedSlice)
                    }
                    _ => {}
                }
            }
        }

        // Basic feasible points of {mu >= 0 : H mu = height} have supports of
        // at most k independent height columns, and generators sharing a
        // height class contribute through the hull of their body parts, so
        // enumeration runs over height classes rather than raw generators.
        let mut classes: std::collections::BTreeMap<Vec<Rat>, Vec<usize>> =
            std::collections::BTreeMap::new();
        for (i, h) in heights.iter().enumerate() {
            classes.entry(h.clone()).or_default().push(i);
        }
        let class_heights: Vec<Vec<Rat>> = classes.keys().cloned().collect();
        let class_hulls: Vec<Vec<RatVec>> = classes
            .values()
            .map(|members| {
                let pts: Vec<RatVec> = members
                    .iter()
                    .map(|&i| RatVec::new(bodies[i].clone()))
                    .collect();
                RatPolytope::from_points(&pts)
                    .map(|p| p.vertices().to_vec())
                    .unwrap_or(pts)
            })
            .collect();

        let mut points: BTreeSet<RatVec> = BTreeSet::new();
        let mut support: Vec<usize> = Vec::new();
        let num_classes = class_heights.len();
        enumerate_supports(&mut support, 0, num_classes, k, &mut |sup: &[usize]| {
            if let Some(coeffs) = solve_support(&class_heights, sup, height) {
                // Cross product of the class hull vertices, scaled.
                let mut stack: Vec<Vec<Rat>> = vec![vec![Rat::zero(); d]];
                for (t, &ci) in sup.iter().enumerate() {
                    let mut next = Vec::with_capacity(stack.len() * class_hulls[ci].len());
                    for partial in &stack {
                        for v in &class_hulls[ci] {
                            let mut x = partial.clone();
                            for (c, b) in x.iter_mut().zip(v.coords()) {
                                *c += &coeffs[t] * b;
                            }
                            next.push(x);
                        }
                    }
                    stack = next;
                }
                for x in stack {
                    points.insert(RatVec::new(x));
                }
            }
        });
        if points.is_empty() {
            return Ok(RatPolytope::empty(d));
        }
        let pts: Vec<RatVec> = points.into_iter().collect();
        RatPolytope::from_points(&pts)
    }
}

fn enumerate_supports(
    current: &mut Vec<usize>,
    start: usize,
    n: usize,
    max_size: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if !current.is_empty() {
        visit(current);
    }
    if current.len() == max_size {
        return;
    }
    for i in start..n {
        current.push(i);
        enumerate_supports(current, i + 1, n, max_size, visit);
        current.pop();
    }
}

/// Solve `sum_i coeffs_i * heights[sup[i]] = target` with nonnegative
/// coefficients when the selected height columns are independent.
fn solve_support(heights: &[Vec<Rat>], sup: &[usize], target: &[Rat]) -> Option<Vec<Rat>> {
    use super::linalg;
    let k = target.len();
    let s = sup.len();
    // Columns must be independent for a basic solution.
    let cols: linalg::Matrix = sup.iter().map(|&i| heights[i].clone()).collect();
    if linalg::rank(&cols) < s {
        return None;
    }
    // Pick s independent rows of the k x s system and solve there.
    let mut rows: Vec<usize> = Vec::new();
    let mut sub: linalg::Matrix = Vec::new();
    for r in 0..k {
        let row: Vec<Rat> = sup.iter().map(|&i| heights[i][r].clone()).collect();
        sub.push(row);
        if linalg::rank(&sub) == sub.len() {
            rows.push(r);
            if rows.len() == s {
                break;
            }
        } else {
            sub.pop();
        }
    }
    if rows.len() < s {
        return None;
    }
    let rhs: Vec<Rat> = rows.iter().map(|&r| target[r].clone()).collect();
    let coeffs = linalg::solve_square(&sub, &rhs)?;
    if coeffs.iter().any(|c| c < &Rat::zero()) {
        return None;
    }
    // Verify the remaining rows.
    for r in 0..k {
        let lhs: Rat = sup
            .iter()
            .zip(&coeffs)
            .map(|(&i, c)| &heights[i][r] * c)
            .sum();
        if lhs != target[r] {
            return None;
        }
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn cone(gens: &[&[i64]], split: (usize, usize)) -> RatCone {
        RatCone::new(gens.iter().map(|g| RatVec::from_ints(g)).collect(), split)
    }

    #[test]
    fn interval_cone_slices() {
        let c = cone(&[&[0, 1], &[1, 1]], (1, 1));
        let s1 = c.slice(&[rat_int(1)]).unwrap();
        assert_eq!(s1.vertices(), &[RatVec::from_ints(&[0]), RatVec::from_ints(&[1])]);
        let s2 = c.slice(&[rat_int(2)]).unwrap();
        assert_eq!(s2.vertices(), &[RatVec::from_ints(&[0]), RatVec::from_ints(&[2])]);
    }

    #[test]
    fn two_grading_coordinates() {
        let c = cone(
            &[&[0, 1, 0], &[1, 1, 0], &[0, 0, 1], &[2, 1, 1]],
            (1, 2),
        );
        let s = c.slice(&[rat_int(1), rat_int(1)]).unwrap();
        // Basic combinations at height (1,1): max body coordinate is 2, from
        // the generator (2,1,1) alone.
        assert_eq!(s.vertices(), &[RatVec::from_ints(&[0]), RatVec::from_ints(&[2])]);
    }

    #[test]
    fn slice_homogeneity() {
        let c = cone(&[&[0, 1], &[3, 2]], (1, 1));
        let s1 = c.slice(&[rat_int(2)]).unwrap();
        let s2 = c.slice(&[rat_int(1)]).unwrap().scale(&rat_int(2)).unwrap();
        assert_eq!(s1, s2);
        let s3 = c.slice(&[rat(1, 3)]).unwrap();
        assert_eq!(s3, c.slice(&[rat_int(1)]).unwrap().scale(&rat(1, 3)).unwrap());
    }

    #[test]
    fn empty_and_zero_height() {
        let c = cone(&[&[1, 1]], (1, 1));
        assert!(c.slice(&[rat_int(-1)]).unwrap().is_empty());
        assert_eq!(c.slice(&[rat_int(0)]), Err(GeomError::ZeroHeight));
        let z = RatCone::new(vec![], (1, 1));
        assert!(z.slice(&[rat_int(1)]).unwrap().is_empty());
    }

    #[test]
    fn unbounded_slice_is_a_defect() {
        // Height coordinate can cancel: (1,1) and (1,-1) recede in the body.
        let c = cone(&[&[1, 1], &[1, -1], &[0, 1]], (1, 1));
        assert_eq!(c.slice(&[rat_int(1)]), Err(GeomError::UnboundedSlice));
    }

    #[test]
    fn membership_and_support() {
        let c = cone(&[&[0, 1, 1], &[1, 1, 0]], (1, 2));
        assert!(c.contains(&RatVec::from_ints(&[1, 2, 1])).unwrap());
        assert!(!c.contains(&RatVec::from_ints(&[0, 0, -1])).unwrap());
        let sup = c.support();
        assert_eq!(sup.split(), (2, 0));
        assert_eq!(sup.generators().len(), 2);
    }
}
