//! Lattice point enumeration in dilated polytopes and the index of the
//! subgroup of `Z^n` generated by a family of integer vectors.

use super::polytope::RatPolytope;
use super::GeomError;
use crate::rational::{ceil_int, floor_int, Int, Rat};
use num_traits::{Signed, ToPrimitive, Zero};

/// The set `(m P) ∩ Z^d`, enumerated by a bounding box scan filtered
/// through the halfspace description. Sorted; empty for the empty polytope.
pub fn lattice_points(p: &RatPolytope, m: u64) -> Result<Vec<Vec<i64>>, GeomError> {
    if p.is_empty() || m == 0 {
        return Ok(if m == 0 && !p.is_empty() {
            vec![vec![0; p.ambient_dim()]]
        } else {
            vec![]
        });
    }
    let d = p.ambient_dim();
    let (lo, hi) = p.bounding_box().expect("nonempty");
    let m_rat = Rat::from_integer(Int::from(m));
    let mut lo_i = Vec::with_capacity(d);
    let mut hi_i = Vec::with_capacity(d);
    for i in 0..d {
        let l = ceil_int(&(&lo[i] * &m_rat));
        let h = floor_int(&(&hi[i] * &m_rat));
        let l = l.to_i64().ok_or(GeomError::LatticeOverflow)?;
        let h = h.to_i64().ok_or(GeomError::LatticeOverflow)?;
        if l > h {
            return Ok(vec![]);
        }
        lo_i.push(l);
        hi_i.push(h);
    }
    let mut out = Vec::new();
    let mut u = lo_i.clone();
    'scan: loop {
        if p.halfspaces()
            .iter()
            .all(|h| !h.eval_dilated_int(&u, m).is_negative())
        {
            out.push(u.clone());
        }
        for i in (0..d).rev() {
            if u[i] < hi_i[i] {
                u[i] += 1;
                for j in (i + 1)..d {
                    u[j] = lo_i[j];
                }
                continue 'scan;
            }
        }
        break;
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(Int),
    Infinite,
}

impl LatticeIndex {
    pub fn is_one(&self) -> bool {
        matches!(self, LatticeIndex::Finite(i) if i == &Int::from(1))
    }
}

impl std::fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LatticeIndex::Finite(i) => write!(f, "{i}"),
            LatticeIndex::Infinite => write!(f, "infinite"),
        }
    }
}

/// Index in `Z^n` of the subgroup generated by the given integer vectors,
/// by integer row reduction with unimodular operations. Rank-deficient
/// families (including the empty one) have infinite index.
pub fn lattice_index(vectors: &[Vec<i64>]) -> LatticeIndex {
    let Some(first) = vectors.first() else {
        return LatticeIndex::Infinite;
    };
    let n = first.len();
    assert!(vectors.iter().all(|v| v.len() == n), "mixed dimensions");
    let mut m: Vec<Vec<Int>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| Int::from(x)).collect())
        .collect();
    let rows = m.len();
    let mut pivot_row = 0usize;
    let mut index = Int::from(1);
    for col in 0..n {
        if pivot_row >= rows {
            return LatticeIndex::Infinite;
        }
        // Euclidean elimination below the pivot row in this column.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                if !m[r][col].is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => m[r][col].abs() < m[b][col].abs(),
                    };
                    if better {
                        best = Some(r);
                    }
                }
            }
            let Some(b) = best else {
                break;
            };
            m.swap(pivot_row, b);
            let mut done = true;
            for r in (pivot_row + 1)..rows {
                if !m[r][col].is_zero() {
                    let q = &m[r][col] / &m[pivot_row][col];
                    if !q.is_zero() {
                        for j in col..n {
                            let sub = &m[pivot_row][j] * &q;
                            m[r][j] -= sub;
                        }
                    }
                    if !m[r][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[pivot_row][col].is_zero() {
            return LatticeIndex::Infinite;
        }
        index *= m[pivot_row][col].abs();
        pivot_row += 1;
    }
    LatticeIndex::Finite(index)
}
