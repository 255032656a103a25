//! Extreme rays of pointed polyhedral cones, by the double description
//! method with the combinatorial adjacency test. This single routine backs
//! both facet enumeration (on the polar side) and vertex enumeration (on the
//! homogenization) for polytopes of ambient dimension at most five.
//!
//! Rays and constraints are scaled to primitive integer vectors once, so the
//! inner loops run on integers; scaling a constraint or a ray by a positive
//! factor changes neither the cone nor its extreme rays.

use super::linalg;
use super::GeomError;
use crate::rational::{primitive_direction, primitive_from_rational, Int, Rat};
use num_traits::Zero;
use std::collections::BTreeSet;

#[derive(Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn is_subset_of(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    dir: Vec<Int>,
    zero: BitSet,
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

fn make_ray(dir: Vec<Int>, constraints: &[Vec<Int>]) -> Option<Ray> {
    let dir = primitive_direction(&dir)?;
    let mut zero = BitSet::new(constraints.len());
    for (i, c) in constraints.iter().enumerate() {
        if dot(c, &dir).is_zero() {
            zero.set(i);
        }
    }
    Some(Ray { dir, zero })
}

/// Extreme rays of `{x in R^n : a.x >= 0 for every row a}`.
///
/// The constraint rows must have rank `n` (the cone is pointed); otherwise
/// the cone contains a line and `GeomError::Unbounded` is returned.
pub fn extreme_rays(constraints: &[Vec<Rat>], n: usize) -> Result<Vec<Vec<Rat>>, GeomError> {
    assert!(n > 0);
    for c in constraints {
        assert_eq!(c.len(), n, "constraint dimension mismatch");
    }
    let matrix: linalg::Matrix = constraints.to_vec();
    if linalg::rank(&matrix) < n {
        return Err(GeomError::Unbounded);
    }
    let int_constraints: Vec<Vec<Int>> = constraints
        .iter()
        .map(|row| primitive_from_rational(row).unwrap_or_else(|| vec![Int::zero(); n]))
        .collect();

    // Greedily pick n independent rows for the initial simplicial cone.
    let mut chosen: Vec<usize> = Vec::new();
    let mut partial: linalg::Matrix = Vec::new();
    for (i, row) in constraints.iter().enumerate() {
        partial.push(row.clone());
        if linalg::rank(&partial) == partial.len() {
            chosen.push(i);
            if chosen.len() == n {
                break;
            }
        } else {
            partial.pop();
        }
    }
    debug_assert_eq!(chosen.len(), n);
    let basis_inv = linalg::invert(&partial).expect("independent rows invert");

    let mut rays: Vec<Ray> = Vec::new();
    let mut seen: BTreeSet<Vec<Int>> = BTreeSet::new();
    for k in 0..n {
        let col: Vec<Rat> = (0..n).map(|r| basis_inv[r][k].clone()).collect();
        if let Some(prim) = primitive_from_rational(&col) {
            if let Some(ray) = make_ray(prim, &int_constraints) {
                if seen.insert(ray.dir.clone()) {
                    rays.push(ray);
                }
            }
        }
    }

    let mut processed = BitSet::new(int_constraints.len());
    for &i in &chosen {
        processed.set(i);
    }

    for (ci, cons) in int_constraints.iter().enumerate() {
        if chosen.contains(&ci) {
            continue;
        }
        let values: Vec<Int> = rays.iter().map(|r| dot(cons, &r.dir)).collect();
        let pos: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i] > Int::zero())
            .collect();
        let neg: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i] < Int::zero())
            .collect();
        if neg.is_empty() {
            processed.set(ci);
            continue;
        }
        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zero.and(&rays[q].zero).and(&processed);
                if common.count() + 2 < n {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, w)| k == p || k == q || !common.is_subset_of(&w.zero));
                if !adjacent {
                    continue;
                }
                let dir: Vec<Int> = rays[p]
                    .dir
                    .iter()
                    .zip(rays[q].dir.iter())
                    .map(|(u, v)| &values[p] * v - &values[q] * u)
                    .collect();
                if let Some(ray) = make_ray(dir, &int_constraints) {
                    if seen.insert(ray.dir.clone()) {
                        new_rays.push(ray);
                    }
                }
            }
        }
        let keep: Vec<bool> = values.iter().map(|v| !(v < &Int::zero())).collect();
        let mut kept: Vec<Ray> = Vec::new();
        for (i, r) in rays.into_iter().enumerate() {
            if keep[i] {
                kept.push(r);
            } else {
                seen.remove(&r.dir);
            }
        }
        kept.extend(new_rays);
        rays = kept;
        processed.set(ci);
    }

    let mut out: Vec<Vec<Rat>> = rays
        .into_iter()
        .map(|r| r.dir.into_iter().map(Rat::from_integer).collect())
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rat>> {
        data.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect()
    }

    #[test]
    fn orthant_rays() {
        let rays = extreme_rays(&rows(&[&[1, 0], &[0, 1]]), 2).unwrap();
        assert_eq!(rays, rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn redundant_constraint_ignored() {
        // x >= 0, y >= 0, x + y >= 0 (redundant)
        let rays = extreme_rays(&rows(&[&[1, 0], &[0, 1], &[1, 1]]), 2).unwrap();
        assert_eq!(rays.len(), 2);
    }

    #[test]
    fn cube_homogenization_has_eight_vertices() {
        // {(t,x,y,z): 0 <= x,y,z <= t, t >= 0}: rays are the 8 cube vertices.
        let mut cs = vec![];
        for i in 1..=3usize {
            let mut lo = vec![0i64; 4];
            lo[i] = 1;
            cs.push(lo);
            let mut hi = vec![0i64; 4];
            hi[0] = 1;
            hi[i] = -1;
            cs.push(hi);
        }
        cs.push(vec![1, 0, 0, 0]);
        let cons: Vec<Vec<Rat>> = cs
            .iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect();
        let rays = extreme_rays(&cons, 4).unwrap();
        assert_eq!(rays.len(), 8);
        for r in &rays {
            assert_eq!(r[0], rat_int(1));
        }
    }

    #[test]
    fn line_detected_as_unbounded() {
        // {x + y >= 0} in R^2 contains a line.
        assert_eq!(
            extreme_rays(&rows(&[&[1, 1]]), 2),
            Err(GeomError::Unbounded)
        );
    }

    #[test]
    fn degenerate_pyramid_apex() {
        // Square pyramid cone in R^3: apex ray meets 4 facets (degeneracy).
        let cons = rows(&[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]);
        let rays = extreme_rays(&cons, 3).unwrap();
        assert_eq!(rays.len(), 4);
    }

    #[test]
    fn rational_constraints_rescaled() {
        use crate::rational::rat;
        // {x/2 >= 0, y/3 - x/6 >= 0}: same cone as {x >= 0, 2y >= x}.
        let cons = vec![
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(-1, 6), rat(1, 3)],
        ];
        let rays = extreme_rays(&cons, 2).unwrap();
        assert_eq!(rays.len(), 2);
        assert!(rays.contains(&vec![rat_int(0), rat_int(1)]));
        assert!(rays.contains(&vec![rat_int(2), rat_int(1)]));
    }
}
