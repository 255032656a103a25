//! Exact convex hulls in ambient dimension up to four. Dimension one and two
//! get direct algorithms (min/max, monotone chain); three and four go
//! through double description on the polar side. Lower-dimensional input is
//! reduced to exact coordinates on its affine hull and lifted back, with the
//! affine hull recorded as paired opposite halfspaces.

use super::dd;
use super::linalg;
use super::polytope::{Halfspace, RatPolytope};
use super::{GeomError, RatVec, MAX_HULL_DIM};
use crate::rational::Rat;
use num_traits::Zero;

pub fn convex_hull(points: &[RatVec]) -> Result<RatPolytope, GeomError> {
    let Some(first) = points.first() else {
        return Err(GeomError::Inconsistent("convex hull of no points".into()));
    };
    let ambient = first.dim();
    if ambient > MAX_HULL_DIM {
        return Err(GeomError::AmbientDimTooLarge(ambient));
    }
    for p in points {
        if p.dim() != ambient {
            return Err(GeomError::DimensionMismatch {
                expected: ambient,
                got: p.dim(),
            });
        }
    }
    let mut dedup: Vec<RatVec> = points.to_vec();
    dedup.sort();
    dedup.dedup();

    // Affine basis: directions from the base point that increase the rank.
    let base = dedup[0].clone();
    let mut dirs: Vec<Vec<Rat>> = Vec::new();
    for p in &dedup[1..] {
        let d: Vec<Rat> = p.sub(&base).coords().to_vec();
        dirs.push(d);
        if linalg::rank(&dirs) < dirs.len() {
            dirs.pop();
        }
        if dirs.len() == ambient {
            break;
        }
    }
    let k = dirs.len();

    let mut halfspaces: Vec<Halfspace> = Vec::new();
    // Affine-hull equalities: directions orthogonal to every spanning one.
    if k < ambient {
        let orthogonal = if dirs.is_empty() {
            (0..ambient)
                .map(|i| {
                    let mut e = vec![Rat::zero(); ambient];
                    e[i] = Rat::from_integer(1.into());
                    e
                })
                .collect()
        } else {
            linalg::kernel(&dirs)
        };
        for nu in orthogonal {
            let rhs: Rat = nu
                .iter()
                .zip(base.coords())
                .map(|(n, c)| n * c)
                .sum();
            let h = Halfspace::new(&nu, &-rhs.clone()).expect("kernel vector nonzero");
            halfspaces.push(h.flipped());
            halfspaces.push(h);
        }
    }

    if k == 0 {
        return finish(ambient, vec![base], halfspaces, 0, &dedup);
    }

    // Exact coordinates on the affine hull: pick k coordinate rows where the
    // direction matrix is invertible and invert there.
    let dir_cols: linalg::Matrix = (0..ambient)
        .map(|i| dirs.iter().map(|d| d[i].clone()).collect())
        .collect(); // ambient x k
    let mut rows_i: Vec<usize> = Vec::new();
    let mut sub: linalg::Matrix = Vec::new();
    for (i, row) in dir_cols.iter().enumerate() {
        sub.push(row.clone());
        if linalg::rank(&sub) == sub.len() {
            rows_i.push(i);
            if rows_i.len() == k {
                break;
            }
        } else {
            sub.pop();
        }
    }
    debug_assert_eq!(rows_i.len(), k);
    let m_inv = linalg::invert(&sub).expect("independent rows invert");
    let to_sub = |p: &RatVec| -> Vec<Rat> {
        let diff: Vec<Rat> = rows_i
            .iter()
            .map(|&i| p.get(i) - base.get(i))
            .collect();
        (0..k)
            .map(|r| m_inv[r].iter().zip(&diff).map(|(a, b)| a * b).sum())
            .collect()
    };
    let sub_points: Vec<Vec<Rat>> = dedup.iter().map(|p| to_sub(p)).collect();

    let (vertex_idx, sub_halfspaces) = hull_full_dim(&sub_points, k)?;

    // Lift subspace inequalities y.z + a >= 0 back through z = M (x-base)_I.
    for (y, a) in sub_halfspaces {
        let w: Vec<Rat> = (0..k)
            .map(|j| y.iter().zip(m_inv.iter().map(|row| &row[j])).map(|(yi, mij)| yi * mij).sum())
            .collect();
        let mut normal = vec![Rat::zero(); ambient];
        let mut offset = a.clone();
        for (t, &i) in rows_i.iter().enumerate() {
            normal[i] = w[t].clone();
            offset -= &w[t] * base.get(i);
        }
        let h = Halfspace::new(&normal, &offset).expect("facet normal nonzero");
        halfspaces.push(h);
    }

    let vertices: Vec<RatVec> = vertex_idx.into_iter().map(|i| dedup[i].clone()).collect();
    finish(ambient, vertices, halfspaces, k, &dedup)
}

fn finish(
    ambient: usize,
    vertices: Vec<RatVec>,
    halfspaces: Vec<Halfspace>,
    affine_dim: usize,
    inputs: &[RatVec],
) -> Result<RatPolytope, GeomError> {
    let poly = RatPolytope::assemble(ambient, vertices, halfspaces, affine_dim);
    poly.cross_check(inputs)?;
    Ok(poly)
}

/// Hull of a full-dimensional point set given in its own coordinates.
/// Returns indices of the extreme points and the facet inequalities
/// `(normal, offset)` meaning `normal.z + offset >= 0`.
type SubHull = (Vec<usize>, Vec<(Vec<Rat>, Rat)>);

fn hull_full_dim(points: &[Vec<Rat>], k: usize) -> Result<SubHull, GeomError> {
    // Large point sets in dimension three and four are reduced in rounds:
    // hull a chunk together with the extreme points found so far, keeping
    // the double description inputs small. The final pass recovers facets
    // and the vertex index set against the full input.
    const CHUNK: usize = 96;
    if k >= 3 && points.len() > 2 * CHUNK {
        let mut survivors: Vec<usize> = Vec::new();
        let mut start = 0usize;
        while start < points.len() {
            let end = (start + CHUNK).min(points.len());
            let mut batch_idx: Vec<usize> = survivors.clone();
            batch_idx.extend(start..end);
            let batch: Vec<Vec<Rat>> = batch_idx.iter().map(|&i| points[i].clone()).collect();
            // Batches can be lower dimensional before enough points arrive;
            // keep everything in that case and proceed.
            match affine_rank(&batch) {
                r if r == k => {
                    let (vidx, _) = dd_hull(&batch, k)?;
                    survivors = vidx.into_iter().map(|i| batch_idx[i]).collect();
                }
                _ => survivors = batch_idx,
            }
            start = end;
        }
        let reduced: Vec<Vec<Rat>> = survivors.iter().map(|&i| points[i].clone()).collect();
        let (vidx, facets) = dd_hull(&reduced, k)?;
        return Ok((vidx.into_iter().map(|i| survivors[i]).collect(), facets));
    }
    match k {
        1 => {
            let (mut imin, mut imax) = (0, 0);
            for (i, p) in points.iter().enumerate() {
                if p[0] < points[imin][0] {
                    imin = i;
                }
                if p[0] > points[imax][0] {
                    imax = i;
                }
            }
            let lo = points[imin][0].clone();
            let hi = points[imax][0].clone();
            Ok((
                vec![imin, imax],
                vec![
                    (vec![Rat::from_integer(1.into())], -lo),
                    (vec![Rat::from_integer((-1).into())], hi),
                ],
            ))
        }
        2 => Ok(monotone_chain(points)),
        _ => dd_hull(points, k),
    }
}

fn cross(o: &[Rat], a: &[Rat], b: &[Rat]) -> Rat {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Andrew's monotone chain; input points are distinct. Returns hull indices
/// in counterclockwise order and the edge inequalities.
fn monotone_chain(points: &[Vec<Rat>]) -> SubHull {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));
    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2
            && cross(
                &points[lower[lower.len() - 2]],
                &points[lower[lower.len() - 1]],
                &points[i],
            ) <= Rat::zero()
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && cross(
                &points[upper[upper.len() - 2]],
                &points[upper[upper.len() - 1]],
                &points[i],
            ) <= Rat::zero()
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let hull = lower;
    let n = hull.len();
    let mut facets = Vec::with_capacity(n);
    for t in 0..n {
        let a = &points[hull[t]];
        let b = &points[hull[(t + 1) % n]];
        // Interior lies left of each counterclockwise edge.
        let normal = vec![&a[1] - &b[1], &b[0] - &a[0]];
        let offset = -(&normal[0] * &a[0] + &normal[1] * &a[1]);
        facets.push((normal, offset));
    }
    (hull, facets)
}

fn affine_rank(points: &[Vec<Rat>]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let dirs: linalg::Matrix = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&dirs)
}

/// Facets via extreme rays of the polar cone, then vertices by the
/// active-constraint rank criterion.
fn dd_hull(points: &[Vec<Rat>], k: usize) -> Result<SubHull, GeomError> {
    let rows: Vec<Vec<Rat>> = points
        .iter()
        .map(|p| {
            let mut row = Vec::with_capacity(k + 1);
            row.push(Rat::from_integer(1.into()));
            row.extend(p.iter().cloned());
            row
        })
        .collect();
    let rays = dd::extreme_rays(&rows, k + 1)?;
    let mut facets: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for ray in rays {
        let (a, y) = (ray[0].clone(), ray[1..].to_vec());
        if y.iter().all(|c| c.is_zero()) {
            continue; // the trivial 1 >= 0 direction
        }
        facets.push((y, a));
    }
    let mut vertex_idx = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let active: linalg::Matrix = facets
            .iter()
            .filter(|(y, a)| {
                let v: Rat = y.iter().zip(p).map(|(u, w)| u * w).sum::<Rat>() + a;
                v.is_zero()
            })
            .map(|(y, _)| y.clone())
            .collect();
        if !active.is_empty() && linalg::rank(&active) == k {
            vertex_idx.push(i);
        }
    }
    Ok((vertex_idx, facets))
}
