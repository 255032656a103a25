//! Exact Lebesgue volume by fan triangulation from a vertex: each facet not
//! through the apex is triangulated recursively and contributes a simplex
//! determinant over d factorial. Lower-dimensional polytopes have volume
//! zero by convention.

use super::linalg;
use super::polytope::RatPolytope;
use super::{GeomError, RatVec};
use crate::rational::Rat;
use num_traits::{Signed, Zero};

impl RatPolytope {
    /// Exact volume in the ambient dimension; zero for empty or
    /// lower-dimensional polytopes.
    pub fn volume(&self) -> Rat {
        if !self.is_full_dim() {
            return Rat::zero();
        }
        let d = self.ambient_dim();
        let verts = self.vertices();
        let idx: Vec<usize> = (0..verts.len()).collect();
        let simplices = triangulate(verts, &idx).expect("full-dimensional triangulation");
        let mut total = Rat::zero();
        let fact: i64 = (1..=d as i64).product();
        for s in simplices {
            let apex = &verts[s[0]];
            let rows: linalg::Matrix = s[1..]
                .iter()
                .map(|&i| verts[i].sub(apex).coords().to_vec())
                .collect();
            total += linalg::determinant(&rows).abs();
        }
        total / Rat::from_integer(fact.into())
    }
}

/// Triangulate the hull of `points[subset]` into simplices of its affine
/// dimension, returned as index tuples into `points`.
fn triangulate(points: &[RatVec], subset: &[usize]) -> Result<Vec<Vec<usize>>, GeomError> {
    let selected: Vec<RatVec> = subset.iter().map(|&i| points[i].clone()).collect();
    let hull = RatPolytope::from_points(&selected)?;
    let k = hull.affine_dim().expect("nonempty");
    if k == 0 {
        return Ok(vec![vec![subset[0]]]);
    }
    // Map hull vertices back to indices into `points`.
    let vert_idx: Vec<usize> = hull
        .vertices()
        .iter()
        .map(|v| {
            subset
                .iter()
                .copied()
                .find(|&i| &points[i] == v)
                .expect("hull vertex is an input point")
        })
        .collect();
    if k == 1 {
        return Ok(vec![vert_idx]);
    }
    let apex_global = vert_idx[0];
    let apex = &points[apex_global];
    let mut out = Vec::new();
    for h in hull.halfspaces() {
        if h.tight(apex) {
            continue;
        }
        let facet: Vec<usize> = hull
            .vertices()
            .iter()
            .zip(&vert_idx)
            .filter(|(v, _)| h.tight(v))
            .map(|(_, &i)| i)
            .collect();
        if facet.is_empty() {
            continue;
        }
        for sub in triangulate(points, &facet)? {
            let mut simplex = vec![apex_global];
            simplex.extend(sub);
            out.push(simplex);
        }
    }
    Ok(out)
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
    fn unit_square_has_volume_one() {
        assert_eq!(hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).volume(), rat_int(1));
    }

    #[test]
    fn standard_simplex_half() {
        assert_eq!(hull(&[&[0, 0], &[1, 0], &[0, 1]]).volume(), rat(1, 2));
    }

    #[test]
    fn embedded_segment_has_volume_zero() {
        assert_eq!(hull(&[&[0, 0], &[1, 0]]).volume(), rat_int(0));
        assert_eq!(RatPolytope::empty(2).volume(), rat_int(0));
    }

    #[test]
    fn cube_and_octahedron_in_three_dims() {
        let cube = hull(&[
            &[0, 0, 0],
            &[2, 0, 0],
            &[0, 2, 0],
            &[0, 0, 2],
            &[2, 2, 0],
            &[2, 0, 2],
            &[0, 2, 2],
            &[2, 2, 2],
        ]);
        assert_eq!(cube.volume(), rat_int(8));
        let octa = hull(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]);
        assert_eq!(octa.volume(), rat(4, 3));
    }

    #[test]
    fn four_dimensional_simplex_volume() {
        let s = hull(&[
            &[0, 0, 0, 0],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(s.volume(), rat(1, 24));
    }

    #[test]
    fn scale_law_exact() {
        let p = hull(&[&[0, 0], &[2, 1], &[1, 3], &[-1, 1]]);
        let v = p.volume();
        let t = rat(3, 2);
        let scaled = p.scale(&t).unwrap();
        assert_eq!(scaled.volume(), &v * &t * &t);
    }

    #[test]
    fn shear_preserves_volume() {
        // Unimodular image of the unit square.
        let p = hull(&[&[0, 0], &[1, 1], &[1, 2], &[2, 3]]);
        assert_eq!(p.volume(), rat_int(1));
    }
}
