//! Bounded rational polytopes carrying both a minimal vertex description and
//! a halfspace description, cross-checked against each other on
//! construction. The empty polytope is a first-class value.

use super::dd;
use super::hull;
use super::{GeomError, RatVec};
use crate::rational::{jsonrat, primitive_from_rational, Int, Rat};
use num_traits::{Signed, Zero};
use std::fmt;

/// The closed halfspace `{x : normal.x + offset >= 0}`, stored with a
/// primitive integer normal so equal halfspaces compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    normal: Vec<Int>,
    offset: Rat,
}

impl Halfspace {
    /// Canonicalize from rational data. `None` when the normal is zero.
    pub fn new(normal: &[Rat], offset: &Rat) -> Option<Halfspace> {
        let prim = primitive_from_rational(normal)?;
        let i = normal.iter().position(|c| !c.is_zero()).expect("nonzero normal");
        let factor = Rat::from_integer(prim[i].clone()) / &normal[i];
        debug_assert!(factor.is_positive());
        Some(Halfspace {
            normal: prim,
            offset: offset * &factor,
        })
    }

    pub fn from_ints(normal: &[i64], offset: Rat) -> Halfspace {
        let normal: Vec<Rat> = normal.iter().map(|&x| crate::rational::rat_int(x)).collect();
        Halfspace::new(&normal, &offset).expect("nonzero normal")
    }

    pub fn normal(&self) -> &[Int] {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn eval(&self, x: &RatVec) -> Rat {
        let mut acc = self.offset.clone();
        for (n, c) in self.normal.iter().zip(x.coords()) {
            acc += Rat::from_integer(n.clone()) * c;
        }
        acc
    }

    /// Evaluate at an integer point of the `m`-fold dilation, i.e. the sign
    /// of `normal.u + m*offset`.
    pub fn eval_dilated_int(&self, u: &[i64], m: u64) -> Rat {
        let mut acc: Int = Int::zero();
        for (n, &c) in self.normal.iter().zip(u) {
            acc += n * Int::from(c);
        }
        Rat::from_integer(acc) + &self.offset * Rat::from_integer(Int::from(m))
    }

    pub fn satisfied(&self, x: &RatVec) -> bool {
        !self.eval(x).is_negative()
    }

    pub fn tight(&self, x: &RatVec) -> bool {
        self.eval(x).is_zero()
    }

    pub fn flipped(&self) -> Halfspace {
        Halfspace {
            normal: self.normal.iter().map(|n| -n).collect(),
            offset: -self.offset.clone(),
        }
    }

    /// Same normal, offset scaled: the halfspace of the `t`-fold dilation.
    pub fn dilated(&self, t: &Rat) -> Halfspace {
        Halfspace {
            normal: self.normal.clone(),
            offset: &self.offset * t,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "normal": self.normal.iter()
                .map(|n| serde_json::Value::Array(vec![
                    serde_json::Value::Number(jsonrat::int_to_number(n)),
                    serde_json::Value::Number(jsonrat::int_to_number(&Int::from(1))),
                ]))
                .collect::<Vec<_>>(),
            "offset": jsonrat::to_value(&self.offset),
        })
    }
}

impl fmt::Debug for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}.x + {} >= 0",
            self.normal,
            crate::rational::fraction_string(&self.offset)
        )
    }
}

/// A bounded rational polytope. Vertices are minimal and sorted; halfspaces
/// include a pair of opposite inequalities for every affine-hull equality
/// when the polytope is lower dimensional.
#[derive(Clone)]
pub struct RatPolytope {
    ambient: usize,
    vertices: Vec<RatVec>,
    halfspaces: Vec<Halfspace>,
    affine_dim: Option<usize>,
}

impl RatPolytope {
    pub fn empty(ambient: usize) -> RatPolytope {
        assert!(ambient > 0);
        RatPolytope {
            ambient,
            vertices: vec![],
            halfspaces: vec![],
            affine_dim: None,
        }
    }

    pub(super) fn assemble(
        ambient: usize,
        mut vertices: Vec<RatVec>,
        mut halfspaces: Vec<Halfspace>,
        affine_dim: usize,
    ) -> RatPolytope {
        vertices.sort();
        vertices.dedup();
        halfspaces.sort();
        halfspaces.dedup();
        RatPolytope {
            ambient,
            vertices,
            halfspaces,
            affine_dim: Some(affine_dim),
        }
    }

    /// Convex hull of a point set; the standard constructor.
    pub fn from_points(points: &[RatVec]) -> Result<RatPolytope, GeomError> {
        hull::convex_hull(points)
    }

    /// Vertex enumeration of `{x : all halfspaces}`. Errors when the region
    /// is unbounded; an infeasible system yields the empty polytope.
    pub fn from_halfspaces(
        ambient: usize,
        halfspaces: &[Halfspace],
    ) -> Result<RatPolytope, GeomError> {
        assert!(ambient > 0);
        if ambient > super::MAX_HULL_DIM {
            return Err(GeomError::AmbientDimTooLarge(ambient));
        }
        // Homogenize: rays (t, x) with normal.x + offset*t >= 0 and t >= 0.
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(halfspaces.len() + 1);
        for h in halfspaces {
            assert_eq!(h.dim(), ambient);
            let mut row = Vec::with_capacity(ambient + 1);
            row.push(h.offset.clone());
            row.extend(h.normal.iter().map(|n| Rat::from_integer(n.clone())));
            rows.push(row);
        }
        let mut t_row = vec![Rat::zero(); ambient + 1];
        t_row[0] = Rat::from_integer(1.into());
        rows.push(t_row);
        let rays = dd::extreme_rays(&rows, ambient + 1)?;
        let mut vertices = Vec::new();
        let mut recession = false;
        for ray in rays {
            if ray[0].is_zero() {
                if ray[1..].iter().any(|c| !c.is_zero()) {
                    recession = true;
                }
            } else {
                let t = ray[0].clone();
                vertices.push(RatVec::new(ray[1..].iter().map(|c| c / &t).collect()));
            }
        }
        if vertices.is_empty() {
            return Ok(RatPolytope::empty(ambient));
        }
        if recession {
            return Err(GeomError::Unbounded);
        }
        let poly = RatPolytope::from_points(&vertices)?;
        for h in halfspaces {
            for v in poly.vertices() {
                if !h.satisfied(v) {
                    return Err(GeomError::Inconsistent(format!(
                        "vertex {v:?} escapes input halfspace {h:?}"
                    )));
                }
            }
        }
        Ok(poly)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Affine dimension; `None` for the empty polytope.
    pub fn affine_dim(&self) -> Option<usize> {
        self.affine_dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_full_dim(&self) -> bool {
        self.affine_dim == Some(self.ambient)
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        !self.is_empty() && self.halfspaces.iter().all(|h| h.satisfied(x))
    }

    pub fn contains_polytope(&self, other: &RatPolytope) -> bool {
        other.is_empty() || other.vertices.iter().all(|v| self.contains(v))
    }

    /// `{t x : x in self}` for `t >= 0`. Scaling the empty set keeps it
    /// empty; scaling by zero collapses to the origin.
    pub fn scale(&self, t: &Rat) -> Result<RatPolytope, GeomError> {
        if t.is_negative() {
            return Err(GeomError::NegativeScale);
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        if t.is_zero() {
            return RatPolytope::from_points(&[RatVec::zero(self.ambient)]);
        }
        Ok(RatPolytope {
            ambient: self.ambient,
            vertices: {
                let mut vs: Vec<RatVec> = self.vertices.iter().map(|v| v.scale(t)).collect();
                vs.sort();
                vs
            },
            halfspaces: self.halfspaces.iter().map(|h| h.dilated(t)).collect(),
            affine_dim: self.affine_dim,
        })
    }

    pub fn translate(&self, by: &RatVec) -> RatPolytope {
        if self.is_empty() {
            return self.clone();
        }
        assert_eq!(by.dim(), self.ambient);
        let mut vertices: Vec<RatVec> = self.vertices.iter().map(|v| v.add(by)).collect();
        vertices.sort();
        let halfspaces = self
            .halfspaces
            .iter()
            .map(|h| {
                let shift: Rat = h
                    .normal
                    .iter()
                    .zip(by.coords())
                    .map(|(n, c)| Rat::from_integer(n.clone()) * c)
                    .sum();
                Halfspace {
                    normal: h.normal.clone(),
                    offset: &h.offset - shift,
                }
            })
            .collect();
        RatPolytope {
            ambient: self.ambient,
            vertices,
            halfspaces,
            affine_dim: self.affine_dim,
        }
    }

    /// Minkowski sum as the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &RatPolytope) -> Result<RatPolytope, GeomError> {
        if self.ambient != other.ambient {
            return Err(GeomError::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if self.is_empty() || other.is_empty() {
            return Ok(RatPolytope::empty(self.ambient));
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.add(b));
            }
        }
        RatPolytope::from_points(&sums)
    }

    pub fn bounding_box(&self) -> Option<(Vec<Rat>, Vec<Rat>)> {
        if self.is_empty() {
            return None;
        }
        let mut lo = self.vertices[0].coords().to_vec();
        let mut hi = lo.clone();
        for v in &self.vertices[1..] {
            for (i, c) in v.coords().iter().enumerate() {
                if c < &lo[i] {
                    lo[i] = c.clone();
                }
                if c > &hi[i] {
                    hi[i] = c.clone();
                }
            }
        }
        Some((lo, hi))
    }

    /// Intersect with coordinate hyperplanes `{x_i = 0 : i in zeroed}` and
    /// project to the remaining coordinates (ascending order).
    pub fn coordinate_slice(&self, zeroed: &[usize]) -> Result<RatPolytope, GeomError> {
        let keep: Vec<usize> = (0..self.ambient).filter(|i| !zeroed.contains(i)).collect();
        assert!(!keep.is_empty(), "slice must keep at least one coordinate");
        if self.is_empty() {
            return Ok(RatPolytope::empty(keep.len()));
        }
        let mut hs = self.halfspaces.clone();
        for &i in zeroed {
            let mut normal = vec![0i64; self.ambient];
            normal[i] = 1;
            hs.push(Halfspace::from_ints(&normal, Rat::zero()));
            normal[i] = -1;
            hs.push(Halfspace::from_ints(&normal, Rat::zero()));
        }
        let sliced = RatPolytope::from_halfspaces(self.ambient, &hs)?;
        if sliced.is_empty() {
            return Ok(RatPolytope::empty(keep.len()));
        }
        let projected: Vec<RatVec> = sliced.vertices.iter().map(|v| v.project(&keep)).collect();
        RatPolytope::from_points(&projected)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ambient_dim": self.ambient,
            "empty": self.is_empty(),
            "affine_dim": self.affine_dim,
            "vertices": self.vertices.iter()
                .map(|v| v.coords().iter().map(jsonrat::to_value).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "halfspaces": self.halfspaces.iter().map(|h| h.to_json()).collect::<Vec<_>>(),
        })
    }

    /// Internal consistency: vertices satisfy every halfspace, every point of
    /// `must_contain` lies inside, and each facet is tight on enough
    /// vertices to be a face of the right dimension.
    pub(super) fn cross_check(&self, must_contain: &[RatVec]) -> Result<(), GeomError> {
        let Some(k) = self.affine_dim else {
            return Ok(());
        };
        for v in &self.vertices {
            for h in &self.halfspaces {
                if !h.satisfied(v) {
                    return Err(GeomError::Inconsistent(format!(
                        "vertex {v:?} violates {h:?}"
                    )));
                }
            }
        }
        for p in must_contain {
            if !self.contains(p) {
                return Err(GeomError::Inconsistent(format!(
                    "hull input point {p:?} escapes halfspace description"
                )));
            }
        }
        for h in &self.halfspaces {
            let tight = self.vertices.iter().filter(|v| h.tight(v)).count();
            let is_equality = tight == self.vertices.len();
            if !is_equality && tight < k {
                return Err(GeomError::Inconsistent(format!(
                    "facet {h:?} tight at only {tight} vertices (affine dim {k})"
                )));
            }
        }
        Ok(())
    }
}

/// Polytope identity is vertex-set identity: the minimal vertex description
/// is unique, while lower-dimensional halfspace descriptions are not.
impl PartialEq for RatPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.vertices == other.vertices
    }
}

impl Eq for RatPolytope {}

impl fmt::Debug for RatPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "Polytope(empty, R^{})", self.ambient);
        }
        write!(
            f,
            "Polytope(dim {} in R^{}, vertices {:?})",
            self.affine_dim.unwrap(),
            self.ambient,
            self.vertices
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn pts(data: &[&[i64]]) -> Vec<RatVec> {
        data.iter().map(|p| RatVec::from_ints(p)).collect()
    }

    #[test]
    fn halfspace_canonical_form() {
        let a = Halfspace::new(&[rat(1, 2), rat(-1, 3)], &rat(1, 6)).unwrap();
        let b = Halfspace::new(&[rat(3, 1), rat(-2, 1)], &rat_int(1)).unwrap();
        assert_eq!(a, b);
        assert!(Halfspace::new(&[rat(0, 1)], &rat_int(1)).is_none());
    }

    #[test]
    fn from_halfspaces_unit_square() {
        let hs = vec![
            Halfspace::from_ints(&[1, 0], rat_int(0)),
            Halfspace::from_ints(&[0, 1], rat_int(0)),
            Halfspace::from_ints(&[-1, 0], rat_int(1)),
            Halfspace::from_ints(&[0, -1], rat_int(1)),
        ];
        let p = RatPolytope::from_halfspaces(2, &hs).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert!(p.is_full_dim());
        assert!(p.contains(&RatVec::new(vec![rat(1, 2), rat(1, 2)])));
        assert!(!p.contains(&RatVec::from_ints(&[2, 0])));
    }

    #[test]
    fn from_halfspaces_infeasible_is_empty() {
        let hs = vec![
            Halfspace::from_ints(&[1], rat_int(0)),
            Halfspace::from_ints(&[-1], rat_int(-1)),
        ];
        let p = RatPolytope::from_halfspaces(1, &hs).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn from_halfspaces_unbounded_is_error() {
        let hs = vec![Halfspace::from_ints(&[1, 0], rat_int(0)), Halfspace::from_ints(&[0, 1], rat_int(0))];
        assert_eq!(RatPolytope::from_halfspaces(2, &hs), Err(GeomError::Unbounded));
    }

    #[test]
    fn minkowski_box_plus_box() {
        let a = RatPolytope::from_points(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let b = a.scale(&rat_int(2)).unwrap();
        let sum = a.minkowski_sum(&b).unwrap();
        let expect = RatPolytope::from_points(&pts(&[&[0, 0], &[3, 0], &[0, 3], &[3, 3]])).unwrap();
        assert_eq!(sum, expect);
    }

    #[test]
    fn minkowski_point_translates() {
        let p = RatPolytope::from_points(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let q = RatPolytope::from_points(&pts(&[&[5, 7]])).unwrap();
        let sum = p.minkowski_sum(&q).unwrap();
        assert_eq!(sum, p.translate(&RatVec::from_ints(&[5, 7])));
    }

    #[test]
    fn scale_by_zero_and_one() {
        let p = RatPolytope::from_points(&pts(&[&[1, 1], &[2, 1], &[1, 2]])).unwrap();
        assert_eq!(p.scale(&rat_int(1)).unwrap(), p);
        let origin = p.scale(&rat_int(0)).unwrap();
        assert_eq!(origin.vertices(), &[RatVec::from_ints(&[0, 0])]);
        assert!(p.scale(&rat(-1, 2)).is_err());
        let empty = RatPolytope::empty(2);
        assert!(empty.scale(&rat_int(0)).unwrap().is_empty());
    }

    #[test]
    fn coordinate_slice_of_rectangle() {
        let p = RatPolytope::from_points(&pts(&[&[0, 0], &[1, 0], &[0, 2], &[1, 2]])).unwrap();
        let s = p.coordinate_slice(&[0]).unwrap();
        assert_eq!(s.ambient_dim(), 1);
        assert_eq!(s.vertices(), &[RatVec::from_ints(&[0]), RatVec::from_ints(&[2])]);
    }
}
