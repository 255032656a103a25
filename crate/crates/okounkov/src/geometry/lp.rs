//! Exact rational linear programming by a dense two-phase simplex.
//!
//! All variables are nonnegative (callers split free variables), the
//! objective is maximized, and pivoting uses Bland's rule throughout: the
//! entering column is the lowest eligible index and ratio-test ties break to
//! the lowest basic variable index, which rules out cycling. Every
//! comparison is an exact rational one.

use super::GeomError;
use crate::rational::Rat;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct LpConstraint {
    pub coeffs: Vec<Rat>,
    pub rel: Rel,
    pub rhs: Rat,
}

#[derive(Debug, Clone)]
pub struct LpProblem {
    pub num_vars: usize,
    /// Objective coefficients; the solver maximizes.
    pub maximize: Vec<Rat>,
    pub constraints: Vec<LpConstraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rat, point: Vec<Rat> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// `m x (n+1)` rows, last column is the right-hand side.
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    ncols: usize,
    banned: Vec<bool>,
}

enum Step {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rat {
        &self.rows[r][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..self.rows.len() {
            if i != r && !self.rows[i][c].is_zero() {
                let f = self.rows[i][c].clone();
                for j in 0..=self.ncols {
                    let sub = &self.rows[r][j] * &f;
                    self.rows[i][j] = &self.rows[i][j] - &sub;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced cost of column `c` under the given cost vector.
    fn reduced_cost(&self, cost: &[Rat], c: usize) -> Rat {
        let mut d = cost[c].clone();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.rows[i][c].is_zero() {
                let sub = &cost[b] * &self.rows[i][c];
                d = &d - &sub;
            }
        }
        d
    }

    fn optimize(&mut self, cost: &[Rat]) -> Step {
        loop {
            let mut entering = None;
            for c in 0..self.ncols {
                if self.banned[c] || self.basis.contains(&c) {
                    continue;
                }
                if self.reduced_cost(cost, c) > Rat::zero() {
                    entering = Some(c);
                    break; // Bland: lowest index wins
                }
            }
            let Some(c) = entering else {
                return Step::Optimal;
            };
            let mut leaving: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][c] > Rat::zero() {
                    let ratio = self.rhs(r) / &self.rows[r][c];
                    let better = match &leaving {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio
                                || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leaving = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leaving else {
                return Step::Unbounded;
            };
            self.pivot(r, c);
        }
    }
}

/// Solve `maximize c.x subject to constraints, x >= 0`.
pub fn solve_lp(p: &LpProblem) -> Result<LpOutcome, GeomError> {
    let n = p.num_vars;
    if p.maximize.len() != n {
        return Err(GeomError::Lp("objective length mismatch".into()));
    }
    for c in &p.constraints {
        if c.coeffs.len() != n {
            return Err(GeomError::Lp("constraint length mismatch".into()));
        }
    }
    let m = p.constraints.len();
    // Column layout: structural vars, then one slack/surplus per inequality,
    // then one artificial per Ge/Eq row (and per Le row with flipped sign).
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rels: Vec<Rel> = Vec::with_capacity(m);
    for c in &p.constraints {
        let mut row = c.coeffs.clone();
        let mut rel = c.rel;
        let mut rhs = c.rhs.clone();
        if rhs < Rat::zero() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            rhs = -rhs;
            rel = match rel {
                Rel::Le => Rel::Ge,
                Rel::Ge => Rel::Le,
                Rel::Eq => Rel::Eq,
            };
        }
        row.push(rhs);
        rows.push(row);
        rels.push(rel);
    }

    let num_slack = rels.iter().filter(|r| !matches!(r, Rel::Eq)).count();
    let num_artificial = rels
        .iter()
        .filter(|r| matches!(r, Rel::Ge | Rel::Eq))
        .count();
    let ncols = n + num_slack + num_artificial;

    let mut tableau_rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut slack_idx = n;
    let mut art_idx = n + num_slack;
    let mut artificials = Vec::new();
    for (i, row) in rows.into_iter().enumerate() {
        let rhs = row[n].clone();
        let mut full = row[..n].to_vec();
        full.resize(ncols, Rat::zero());
        full.push(rhs);
        match rels[i] {
            Rel::Le => {
                full[slack_idx] = Rat::from_integer(1.into());
                basis.push(slack_idx);
                slack_idx += 1;
            }
            Rel::Ge => {
                full[slack_idx] = Rat::from_integer((-1).into());
                slack_idx += 1;
                full[art_idx] = Rat::from_integer(1.into());
                basis.push(art_idx);
                artificials.push(art_idx);
                art_idx += 1;
            }
            Rel::Eq => {
                full[art_idx] = Rat::from_integer(1.into());
                basis.push(art_idx);
                artificials.push(art_idx);
                art_idx += 1;
            }
        }
        tableau_rows.push(full);
    }

    let mut t = Tableau {
        rows: tableau_rows,
        basis,
        ncols,
        banned: vec![false; ncols],
    };

    if !artificials.is_empty() {
        let mut phase1 = vec![Rat::zero(); ncols];
        for &a in &artificials {
            phase1[a] = Rat::from_integer((-1).into());
        }
        match t.optimize(&phase1) {
            Step::Optimal => {}
            Step::Unbounded => return Err(GeomError::Lp("phase 1 unbounded".into())),
        }
        let p1_value: Rat = artificials
            .iter()
            .map(|&a| {
                t.basis
                    .iter()
                    .position(|&b| b == a)
                    .map(|r| t.rhs(r).clone())
                    .unwrap_or_else(Rat::zero)
            })
            .sum();
        if !p1_value.is_zero() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive any artificial still basic (at zero level) out of the basis.
        let art_set: std::collections::BTreeSet<usize> = artificials.iter().copied().collect();
        for r in 0..t.basis.len() {
            if art_set.contains(&t.basis[r]) {
                if let Some(c) = (0..ncols)
                    .find(|&c| !art_set.contains(&c) && !t.rows[r][c].is_zero())
                {
                    t.pivot(r, c);
                }
                // A row with no structural pivot is a redundant constraint;
                // the artificial stays basic at zero and its column is banned
                // below, so it never re-enters.
            }
        }
        for a in artificials {
            t.banned[a] = true;
        }
    }

    let mut cost = p.maximize.clone();
    cost.resize(ncols, Rat::zero());
    match t.optimize(&cost) {
        Step::Unbounded => Ok(LpOutcome::Unbounded),
        Step::Optimal => {
            let mut point = vec![Rat::zero(); n];
            for (r, &b) in t.basis.iter().enumerate() {
                if b < n {
                    point[b] = t.rhs(r).clone();
                }
            }
            let value = p
                .maximize
                .iter()
                .zip(point.iter())
                .map(|(c, x)| c * x)
                .sum();
            Ok(LpOutcome::Optimal { value, point })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn c(coeffs: &[i64], rel: Rel, rhs: i64) -> LpConstraint {
        LpConstraint {
            coeffs: coeffs.iter().map(|&x| rat_int(x)).collect(),
            rel,
            rhs: rat_int(rhs),
        }
    }

    #[test]
    fn textbook_maximum() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
        let p = LpProblem {
            num_vars: 2,
            maximize: vec![rat_int(3), rat_int(5)],
            constraints: vec![
                c(&[1, 0], Rel::Le, 4),
                c(&[0, 2], Rel::Le, 12),
                c(&[3, 2], Rel::Le, 18),
            ],
        };
        match solve_lp(&p).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rat_int(36));
                assert_eq!(point, vec![rat_int(2), rat_int(6)]);
            }
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn equality_and_ge_rows() {
        // max x + y with x + y = 1, x >= 1/3 -> value 1
        let p = LpProblem {
            num_vars: 2,
            maximize: vec![rat_int(1), rat_int(1)],
            constraints: vec![
                c(&[1, 1], Rel::Eq, 1),
                LpConstraint { coeffs: vec![rat_int(1), rat_int(0)], rel: Rel::Ge, rhs: rat(1, 3) },
            ],
        };
        match solve_lp(&p).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat_int(1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_detected() {
        let p = LpProblem {
            num_vars: 1,
            maximize: vec![rat_int(0)],
            constraints: vec![c(&[1], Rel::Ge, 2), c(&[1], Rel::Le, 1)],
        };
        assert_eq!(solve_lp(&p).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let p = LpProblem {
            num_vars: 1,
            maximize: vec![rat_int(1)],
            constraints: vec![c(&[1], Rel::Ge, 0)],
        };
        assert_eq!(solve_lp(&p).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_cycling_guard() {
        // Classic degenerate instance; Bland's rule must terminate.
        let p = LpProblem {
            num_vars: 4,
            maximize: vec![rat(3, 4), rat_int(-150), rat(1, 50), rat_int(-6)],
            constraints: vec![
                LpConstraint {
                    coeffs: vec![rat(1, 4), rat_int(-60), rat(-1, 25), rat_int(9)],
                    rel: Rel::Le,
                    rhs: rat_int(0),
                },
                LpConstraint {
                    coeffs: vec![rat(1, 2), rat_int(-90), rat(-1, 50), rat_int(3)],
                    rel: Rel::Le,
                    rhs: rat_int(0),
                },
                c(&[0, 0, 1, 0], Rel::Le, 1),
            ],
        };
        match solve_lp(&p).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1, 20)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_level_equalities() {
        // Feasibility system with only equalities through the origin.
        let p = LpProblem {
            num_vars: 2,
            maximize: vec![rat_int(0), rat_int(0)],
            constraints: vec![c(&[1, -1], Rel::Eq, 0), c(&[1, 1], Rel::Le, 3)],
        };
        assert!(matches!(solve_lp(&p).unwrap(), LpOutcome::Optimal { .. }));
    }
}
