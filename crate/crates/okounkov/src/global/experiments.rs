//! Experiment suites around the global theory: Hausdorff convergence of the
//! model bodies to the limit body, volume continuity under rational
//! perturbations, log-concavity of volumes decided by exact root
//! comparisons, and the toric inner-approximation sanity check.
//!
//! The Hausdorff metric uses the L-infinity unit ball, so the reported
//! convergence constants are norm-dependent; tables carry that note.

use super::GlobalError;
use crate::adelic::ToricAdelicDivisor;
use crate::body::scaled_volume;
use crate::geometry::{hausdorff_distance, RatPolytope, RatVec};
use crate::rational::{cmp_root_sum, rat, rat_int, Rat};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

pub const METRIC_NOTE: &str =
    "Hausdorff distances use the L-infinity unit ball; constants are norm-dependent";

#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    pub stage: usize,
    pub tolerance: Rat,
    pub hausdorff_gap: Rat,
    /// Euclidean volume of the stage body.
    pub body_volume: Rat,
    /// `d!` times the euclidean volume.
    pub scaled_volume: Rat,
}

#[derive(Debug, Clone)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
    pub limit_body_volume: Rat,
    pub limit_scaled_volume: Rat,
    /// Largest `gap / q_j` over stages with positive tolerance.
    pub ratio_bound: Option<Rat>,
    pub gaps_monotone: bool,
    pub volumes_monotone: bool,
    pub metric_note: &'static str,
}

/// Stage bodies against the limit body: `(j, d_H, q_j, volumes)` rows with
/// exact monotonicity verdicts.
pub fn model_convergence(
    d: &ToricAdelicDivisor,
    stages: usize,
) -> Result<ConvergenceTable, GlobalError> {
    assert!(stages >= 2);
    let limit_body = d.limit_polytope()?;
    if limit_body.is_empty() {
        return Err(GlobalError::BadInput(
            "limit body is empty; convergence table undefined".into(),
        ));
    }
    let mut rows = Vec::with_capacity(stages);
    for j in 1..=stages {
        let (dj, qj) = d.stage(j)?;
        let body = dj.polytope(d.frame())?;
        if body.is_empty() {
            return Err(GlobalError::BadInput(format!(
                "stage {j} body is empty; convergence table undefined"
            )));
        }
        let gap = hausdorff_distance(&limit_body, &body)?;
        rows.push(ConvergenceRow {
            stage: j,
            tolerance: qj,
            hausdorff_gap: gap,
            body_volume: body.volume(),
            scaled_volume: scaled_volume(&body),
        });
    }
    let mut ratio_bound: Option<Rat> = None;
    for r in &rows {
        if r.tolerance.is_positive() {
            let ratio = &r.hausdorff_gap / &r.tolerance;
            if ratio_bound.as_ref().map_or(true, |b| &ratio > b) {
                ratio_bound = Some(ratio);
            }
        }
    }
    let gaps_monotone = rows
        .windows(2)
        .all(|w| w[1].hausdorff_gap <= w[0].hausdorff_gap);
    let limit_volume = limit_body.volume();
    let volumes_monotone = rows.windows(2).all(|w| {
        (&w[1].body_volume - &limit_volume).abs() <= (&w[0].body_volume - &limit_volume).abs()
    });
    Ok(ConvergenceTable {
        rows,
        limit_body_volume: limit_volume,
        limit_scaled_volume: scaled_volume(&limit_body),
        ratio_bound,
        gaps_monotone,
        volumes_monotone,
        metric_note: METRIC_NOTE,
    })
}

#[derive(Debug, Clone)]
pub struct ContinuityRow {
    pub t: Rat,
    pub body_volume: Rat,
    pub scaled_volume: Rat,
    pub hausdorff_gap: Rat,
}

#[derive(Debug, Clone)]
pub struct ContinuityTable {
    pub rows: Vec<ContinuityRow>,
    pub base_body_volume: Rat,
    pub base_scaled_volume: Rat,
    pub gaps_monotone: bool,
    pub volumes_converge: bool,
    pub metric_note: &'static str,
}

/// Volumes and body gaps of `D + t M` along a rational sequence `t -> 0`.
pub fn continuity_experiment(
    d: &ToricAdelicDivisor,
    perturbation: &crate::adelic::ModelDivisor,
    ts: &[Rat],
) -> Result<ContinuityTable, GlobalError> {
    let base_body = d.limit_polytope()?;
    if base_body.is_empty() {
        return Err(GlobalError::BadInput("base body is empty".into()));
    }
    let mut rows = Vec::with_capacity(ts.len());
    for t in ts {
        let perturbed = d.perturbed(format!("{} + t*M", d.name()), perturbation, t)?;
        let body = perturbed.limit_polytope()?;
        let gap = if body.is_empty() {
            return Err(GlobalError::BadInput(format!(
                "perturbed body at t = {} is empty",
                crate::rational::fraction_string(t)
            )));
        } else {
            hausdorff_distance(&base_body, &body)?
        };
        rows.push(ContinuityRow {
            t: t.clone(),
            body_volume: body.volume(),
            scaled_volume: scaled_volume(&body),
            hausdorff_gap: gap,
        });
    }
    let gaps_monotone = rows
        .windows(2)
        .all(|w| w[1].hausdorff_gap <= w[0].hausdorff_gap);
    let base_volume = base_body.volume();
    let volumes_converge = rows.windows(2).all(|w| {
        (&w[1].body_volume - &base_volume).abs() <= (&w[0].body_volume - &base_volume).abs()
    });
    Ok(ContinuityTable {
        rows,
        base_body_volume: base_volume,
        base_scaled_volume: scaled_volume(&base_body),
        gaps_monotone,
        volumes_converge,
        metric_note: METRIC_NOTE,
    })
}

#[derive(Debug, Clone)]
pub struct LogConcavityRow {
    pub dim: usize,
    pub vol_p: Rat,
    pub vol_q: Rat,
    pub vol_sum: Rat,
    pub holds: bool,
}

/// Decide `vol(P+Q)^(1/d) >= vol(P)^(1/d) + vol(Q)^(1/d)` exactly, with the
/// root comparison done on integers (no floating point in the decision).
pub fn log_concavity_check(
    p: &RatPolytope,
    q: &RatPolytope,
) -> Result<LogConcavityRow, GlobalError> {
    let d = p.ambient_dim();
    if q.ambient_dim() != d {
        return Err(GlobalError::BadInput("dimension mismatch".into()));
    }
    let sum = p.minkowski_sum(q)?;
    let vol_p = p.volume();
    let vol_q = q.volume();
    let vol_sum = sum.volume();
    let holds = cmp_root_sum(&vol_p, &vol_q, &vol_sum, d as u32) != Ordering::Greater;
    Ok(LogConcavityRow {
        dim: d,
        vol_p,
        vol_q,
        vol_sum,
        holds,
    })
}

#[derive(Debug, Clone)]
pub struct FujitaWitness {
    /// Shrink factor toward the barycenter.
    pub shrink: Rat,
    pub inner: RatPolytope,
    pub inner_volume: Rat,
    /// The required lower bound `vol(P) - epsilon`.
    pub target: Rat,
}

/// A rational inner polytope `Q ⊆ P` with `vol(Q) >= vol(P) - epsilon`,
/// produced by shrinking the vertices toward the barycenter. A sanity check
/// for the approximation statement on toric instances, not a general
/// construction.
pub fn fujita_inner_body(p: &RatPolytope, epsilon: &Rat) -> Result<FujitaWitness, GlobalError> {
    if !p.is_full_dim() {
        return Err(GlobalError::BadInput(
            "inner approximation needs a full-dimensional body".into(),
        ));
    }
    if !epsilon.is_positive() {
        return Err(GlobalError::BadInput("epsilon must be positive".into()));
    }
    let d = p.ambient_dim();
    let vol = p.volume();
    let target = &vol - epsilon;
    let n = rat_int(p.vertices().len() as i64);
    let barycenter = RatVec::new(
        (0..d)
            .map(|i| {
                p.vertices()
                    .iter()
                    .map(|v| v.get(i).clone())
                    .sum::<Rat>()
                    / &n
            })
            .collect(),
    );
    // Smallest dyadic shrink with t^d vol >= vol - epsilon.
    let mut shrink = Rat::zero();
    if target.is_positive() {
        let mut k = 1;
        loop {
            let t = rat_int(1) - rat(1, 1 << k);
            if crate::rational::rat_pow(&t, d as i32) * &vol >= target {
                shrink = t;
                break;
            }
            k += 1;
            assert!(k < 62, "shrink search failed");
        }
    }
    let shifted: Vec<RatVec> = p
        .vertices()
        .iter()
        .map(|v| barycenter.add(&v.sub(&barycenter).scale(&shrink)))
        .collect();
    let inner = RatPolytope::from_points(&shifted)?;
    if !p.contains_polytope(&inner) {
        return Err(GlobalError::BadInput("inner body escaped".into()));
    }
    let inner_volume = inner.volume();
    if inner_volume < target {
        return Err(GlobalError::BadInput("inner body volume below target".into()));
    }
    Ok(FujitaWitness {
        shrink,
        inner,
        inner_volume,
        target,
    })
}

#[cfg(test)]
mod tests {
    use super::super::build::tests::interval_pair;
    use super::*;
    use crate::rational::rat;

    #[test]
    fn interval_convergence_is_exactly_geometric() {
        let (d, _) = interval_pair();
        let table = model_convergence(&d, 10).unwrap();
        for row in &table.rows {
            // d_H = 2^{-j} exactly; volume 1 - 2^{-j}.
            let expect = crate::rational::rat_pow(&rat(1, 2), row.stage as i32);
            assert_eq!(row.hausdorff_gap, expect);
            assert_eq!(row.body_volume, rat_int(1) - expect);
        }
        assert!(table.gaps_monotone);
        assert!(table.volumes_monotone);
        assert_eq!(table.ratio_bound, Some(rat_int(1)));
        assert_eq!(table.limit_body_volume, rat_int(1));
    }

    #[test]
    fn continuity_rows_are_one_plus_t() {
        let (d, _) = interval_pair();
        let d0 = d.boundary().divisor().clone();
        let ts: Vec<Rat> = (1..=6).map(|n| rat(1, 1 << n)).collect();
        let table = continuity_experiment(&d, &d0, &ts).unwrap();
        for row in &table.rows {
            assert_eq!(row.body_volume, rat_int(1) + &row.t);
            assert_eq!(row.hausdorff_gap, row.t);
        }
        assert!(table.gaps_monotone && table.volumes_converge);
        // Negative perturbation converges from below.
        let neg: Vec<Rat> = ts.iter().map(|t| -t.clone()).collect();
        let table2 = continuity_experiment(&d, &d0, &neg).unwrap();
        for row in &table2.rows {
            assert_eq!(row.body_volume, rat_int(1) + &row.t);
        }
    }

    #[test]
    fn zero_perturbation_row_is_exact() {
        let (d, _) = interval_pair();
        let d0 = d.boundary().divisor().clone();
        let table = continuity_experiment(&d, &d0, &[rat_int(0)]).unwrap();
        assert_eq!(table.rows[0].body_volume, rat_int(1));
        assert_eq!(table.rows[0].hausdorff_gap, rat_int(0));
    }

    #[test]
    fn log_concavity_on_boxes_and_simplices() {
        use crate::geometry::RatVec;
        let hull = |pts: &[&[i64]]| {
            RatPolytope::from_points(&pts.iter().map(|p| RatVec::from_ints(p)).collect::<Vec<_>>())
                .unwrap()
        };
        let square = hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let simplex = hull(&[&[0, 0], &[2, 0], &[0, 2]]);
        let row = log_concavity_check(&square, &simplex).unwrap();
        assert!(row.holds);
        // Homothetic bodies give exact equality and still hold.
        let double = square.scale(&rat_int(2)).unwrap();
        let row2 = log_concavity_check(&square, &double).unwrap();
        assert!(row2.holds);
        assert_eq!(row2.vol_sum, rat_int(9));
    }

    #[test]
    fn fujita_witness_on_the_simplex() {
        use crate::geometry::RatVec;
        let p = RatPolytope::from_points(&[
            RatVec::from_ints(&[0, 0]),
            RatVec::from_ints(&[1, 0]),
            RatVec::from_ints(&[0, 1]),
        ])
        .unwrap();
        let w = fujita_inner_body(&p, &rat(1, 100)).unwrap();
        assert!(w.inner_volume >= w.target);
        assert!(p.contains_polytope(&w.inner));
        assert!(w.shrink < rat_int(1));
        // Large epsilon collapses to the barycenter.
        let w2 = fujita_inner_body(&p, &rat_int(1)).unwrap();
        assert_eq!(w2.shrink, rat_int(0));
    }
}
