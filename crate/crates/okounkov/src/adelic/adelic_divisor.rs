//! Adelic divisors on the fixed frame: a Cauchy sequence of model divisors
//! with an explicit rational limit, measured against the boundary divisor.
//! Closed-form sequences `limit - rate * base^j` carry an algebraic Cauchy
//! certificate valid for the whole sequence; explicit lists are checked
//! pairwise at load; combinations inherit validity with the coarse bound
//! `q = sum |a_i| q_i`.

use super::divisor::{BoundaryDivisor, ModelDivisor};
use super::frame::ToricFrame;
use super::AdelicError;
use crate::geometry::RatPolytope;
use crate::rational::{fraction_string, rat_pow, Rat};
use num_traits::{Signed, Zero};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub enum StageSeq {
    /// Every stage equals the limit; `q_j = 0`.
    Constant,
    /// `D_j = limit - rate * base^j`, `q_j = q0 * base^j`, for `j >= 1`.
    ClosedForm { rate: Vec<Rat>, base: Rat, q0: Rat },
    /// Explicit stages `(D_j, q_j)` for `j = 1..=len`.
    Explicit { stages: Vec<(ModelDivisor, Rat)> },
    /// Stage-wise rational combination of other adelic divisors.
    Combination { parts: Vec<(Rat, ToricAdelicDivisor)> },
}

#[derive(Debug, Clone)]
pub struct ToricAdelicDivisor {
    name: String,
    frame: Arc<ToricFrame>,
    boundary: Arc<BoundaryDivisor>,
    limit: ModelDivisor,
    stages: StageSeq,
}

impl ToricAdelicDivisor {
    /// The completion of a constant sequence: a model divisor viewed
    /// adelically.
    pub fn constant(
        name: impl Into<String>,
        frame: Arc<ToricFrame>,
        boundary: Arc<BoundaryDivisor>,
        limit: ModelDivisor,
    ) -> Result<ToricAdelicDivisor, AdelicError> {
        let d = ToricAdelicDivisor {
            name: name.into(),
            frame,
            boundary,
            limit,
            stages: StageSeq::Constant,
        };
        d.validate_chart_zero()?;
        Ok(d)
    }

    pub fn closed_form(
        name: impl Into<String>,
        frame: Arc<ToricFrame>,
        boundary: Arc<BoundaryDivisor>,
        limit: ModelDivisor,
        rate: Vec<Rat>,
        base: Rat,
        q0: Rat,
    ) -> Result<ToricAdelicDivisor, AdelicError> {
        if rate.len() != frame.num_rays() {
            return Err(AdelicError::BadDivisor("rate coefficient count mismatch".into()));
        }
        if !(base > Rat::zero() && base < Rat::from_integer(1.into())) {
            return Err(AdelicError::BadDivisor(format!(
                "closed-form base must lie in (0,1), got {}",
                fraction_string(&base)
            )));
        }
        if q0.is_negative() {
            return Err(AdelicError::BadDivisor("q0 must be nonnegative".into()));
        }
        for (i, r) in rate.iter().enumerate() {
            if frame.is_boundary(i) {
                // Whole-sequence Cauchy certificate: |D_i - D_j| and
                // |limit - D_j| are rate * base^j at worst, so rate <= q0 * b
                // bounds them by q_j * D0 for every pair.
                let cap = &q0 * boundary.coeff(i);
                if r.abs() > cap {
                    return Err(AdelicError::CauchyViolation(format!(
                        "|rate| = {} exceeds q0 * D0 = {} on boundary ray {i}",
                        fraction_string(&r.abs()),
                        fraction_string(&cap)
                    )));
                }
            } else if !r.is_zero() {
                return Err(AdelicError::BadDivisor(format!(
                    "stages must agree with the limit off the boundary (ray {i})"
                )));
            }
        }
        if q0.is_zero() && rate.iter().any(|r| !r.is_zero()) {
            return Err(AdelicError::CauchyViolation(
                "q0 = 0 forces a constant sequence".into(),
            ));
        }
        let d = ToricAdelicDivisor {
            name: name.into(),
            frame,
            boundary,
            limit,
            stages: StageSeq::ClosedForm { rate, base, q0 },
        };
        d.validate_chart_zero()?;
        Ok(d)
    }

    /// Explicit stage list; the finite Cauchy checks run at construction.
    pub fn explicit(
        name: impl Into<String>,
        frame: Arc<ToricFrame>,
        boundary: Arc<BoundaryDivisor>,
        limit: ModelDivisor,
        stages: Vec<(ModelDivisor, Rat)>,
    ) -> Result<ToricAdelicDivisor, AdelicError> {
        if stages.is_empty() {
            return Err(AdelicError::BadDivisor("explicit stage list is empty".into()));
        }
        for w in stages.windows(2) {
            let (ref qa, ref qb) = (&w[0].1, &w[1].1);
            let strictly_down = qb < qa;
            let both_zero = qa.is_zero() && qb.is_zero();
            if !(strictly_down || both_zero) {
                return Err(AdelicError::BadDivisor(
                    "stage tolerances must decrease strictly (or be identically zero)".into(),
                ));
            }
        }
        for (d_j, q_j) in &stages {
            if q_j.is_negative() {
                return Err(AdelicError::BadDivisor("negative stage tolerance".into()));
            }
            if !d_j.agrees_off_boundary(&limit, &frame) {
                return Err(AdelicError::BadDivisor(
                    "stages must agree with the limit off the boundary".into(),
                ));
            }
        }
        let d = ToricAdelicDivisor {
            name: name.into(),
            frame,
            boundary,
            limit,
            stages: StageSeq::Explicit { stages },
        };
        d.validate_chart_zero()?;
        let report = verify_cauchy(&d, d.materialized_stages().unwrap_or(1))?;
        if !report.violations.is_empty() {
            let v = &report.violations[0];
            return Err(AdelicError::CauchyViolation(v.to_string()));
        }
        Ok(d)
    }

    /// `sum a_i * D_i` with the coarse tolerance `q_j = sum |a_i| * q_i(j)`.
    pub fn combine(
        name: impl Into<String>,
        parts: Vec<(Rat, ToricAdelicDivisor)>,
    ) -> Result<ToricAdelicDivisor, AdelicError> {
        let Some(first) = parts.first() else {
            return Err(AdelicError::BadDivisor("empty combination".into()));
        };
        let frame = first.1.frame.clone();
        let boundary = first.1.boundary.clone();
        for (_, d) in &parts {
            if d.frame != frame || d.boundary.divisor() != boundary.divisor() {
                return Err(AdelicError::FrameMismatch);
            }
        }
        let mut limit = ModelDivisor::zero(&frame);
        for (a, d) in &parts {
            limit = limit.add(&d.limit.scaled(a));
        }
        Ok(ToricAdelicDivisor {
            name: name.into(),
            frame,
            boundary,
            limit,
            stages: StageSeq::Combination { parts },
        })
    }

    pub fn scaled(&self, name: impl Into<String>, t: &Rat) -> Result<ToricAdelicDivisor, AdelicError> {
        ToricAdelicDivisor::combine(name, vec![(t.clone(), self.clone())])
    }

    /// `self + t * M` for a model divisor `M` (a constant perturbation).
    pub fn perturbed(
        &self,
        name: impl Into<String>,
        m: &ModelDivisor,
        t: &Rat,
    ) -> Result<ToricAdelicDivisor, AdelicError> {
        let constant = ToricAdelicDivisor::constant(
            "perturbation",
            self.frame.clone(),
            self.boundary.clone(),
            m.clone(),
        )?;
        ToricAdelicDivisor::combine(
            name,
            vec![(Rat::from_integer(1.into()), self.clone()), (t.clone(), constant)],
        )
    }

    fn validate_chart_zero(&self) -> Result<(), AdelicError> {
        for (i, &ray_idx) in self.frame.chart_rays().iter().enumerate() {
            if !self.limit.coeff(ray_idx).is_zero() {
                return Err(AdelicError::BadDivisor(format!(
                    "limit carries chart ray e_{i}: normalize the instance first"
                )));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn frame(&self) -> &Arc<ToricFrame> {
        &self.frame
    }

    pub fn boundary(&self) -> &Arc<BoundaryDivisor> {
        &self.boundary
    }

    pub fn limit(&self) -> &ModelDivisor {
        &self.limit
    }

    /// Number of explicitly materialized stages, when the sequence is a
    /// finite list (or contains one).
    pub fn materialized_stages(&self) -> Option<usize> {
        match &self.stages {
            StageSeq::Explicit { stages } => Some(stages.len()),
            StageSeq::Combination { parts } => parts
                .iter()
                .filter_map(|(_, d)| d.materialized_stages())
                .min(),
            _ => None,
        }
    }

    /// The pair `(D_j, q_j)` for `j >= 1`.
    pub fn stage(&self, j: usize) -> Result<(ModelDivisor, Rat), AdelicError> {
        if j == 0 {
            return Err(AdelicError::StageUnavailable(0));
        }
        match &self.stages {
            StageSeq::Constant => Ok((self.limit.clone(), Rat::zero())),
            StageSeq::ClosedForm { rate, base, q0 } => {
                let factor = rat_pow(base, j as i32);
                let coeffs: Vec<Rat> = self
                    .limit
                    .coeffs()
                    .iter()
                    .zip(rate)
                    .map(|(l, r)| l - r * &factor)
                    .collect();
                Ok((
                    ModelDivisor::new(&self.frame, coeffs)?,
                    &q0.clone() * &factor,
                ))
            }
            StageSeq::Explicit { stages } => stages
                .get(j - 1)
                .cloned()
                .ok_or(AdelicError::StageUnavailable(j)),
            StageSeq::Combination { parts } => {
                let mut coeffs = ModelDivisor::zero(&self.frame);
                let mut q = Rat::zero();
                for (a, d) in parts {
                    let (dj, qj) = d.stage(j)?;
                    coeffs = coeffs.add(&dj.scaled(a));
                    q += a.abs() * qj;
                }
                Ok((coeffs, q))
            }
        }
    }

    pub fn limit_polytope(&self) -> Result<RatPolytope, AdelicError> {
        self.limit.polytope(&self.frame)
    }

    /// Bigness at desk scale: the exact body of the limit has positive
    /// volume.
    pub fn is_big(&self) -> Result<bool, AdelicError> {
        Ok(self.limit_polytope()?.is_full_dim())
    }
}

/// Value of the boundary norm distance: finite on divisors that agree off
/// the boundary, infinite otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormValue {
    Finite(Rat),
    Infinite,
}

impl NormValue {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            NormValue::Finite(r) => Some(r),
            NormValue::Infinite => None,
        }
    }
}

impl std::fmt::Display for NormValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NormValue::Finite(r) => write!(f, "{}", fraction_string(r)),
            NormValue::Infinite => write!(f, "infinite"),
        }
    }
}

/// `max over boundary rays of |a - b| / D0`, infinite when the difference
/// touches a ray the boundary divisor cannot measure.
pub fn boundary_distance(
    a: &ModelDivisor,
    b: &ModelDivisor,
    d0: &BoundaryDivisor,
    frame: &ToricFrame,
) -> NormValue {
    let mut best = Rat::zero();
    for i in 0..frame.num_rays() {
        let diff = (a.coeff(i) - b.coeff(i)).abs();
        if frame.is_boundary(i) {
            let scaled = diff / d0.coeff(i);
            if scaled > best {
                best = scaled;
            }
        } else if !diff.is_zero() {
            return NormValue::Infinite;
        }
    }
    NormValue::Finite(best)
}

#[derive(Debug, Clone)]
pub struct CauchyViolation {
    pub stage_j: usize,
    pub stage_i: usize,
    pub detail: String,
}

impl std::fmt::Display for CauchyViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "stages (j={}, i={}): {}", self.stage_j, self.stage_i, self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct CauchyReport {
    pub checked_pairs: usize,
    pub violations: Vec<CauchyViolation>,
    /// `(j, |limit - D_j| in the boundary norm, q_j)` per stage.
    pub limit_distances: Vec<(usize, NormValue, Rat)>,
}

impl CauchyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check, for all `j <= i <= bound`, the coefficient-wise sandwich
/// `D_j - q_j D0 <= D_i <= D_j + q_j D0` and per-stage `|limit - D_j| <=
/// q_j D0`. Violations are report rows, not errors.
pub fn verify_cauchy(d: &ToricAdelicDivisor, bound: usize) -> Result<CauchyReport, AdelicError> {
    let frame = d.frame();
    let d0 = d.boundary();
    let mut report = CauchyReport {
        checked_pairs: 0,
        violations: vec![],
        limit_distances: vec![],
    };
    let mut stages = Vec::with_capacity(bound);
    for j in 1..=bound {
        stages.push(d.stage(j)?);
    }
    for j in 1..=bound {
        let (dj, qj) = &stages[j - 1];
        let margin = d0.scaled(qj);
        for i in j..=bound {
            let (di, _) = &stages[i - 1];
            report.checked_pairs += 1;
            if !di.le_within(dj, &margin) || !dj.le_within(di, &margin) {
                report.violations.push(CauchyViolation {
                    stage_j: j,
                    stage_i: i,
                    detail: format!(
                        "|D_{i} - D_{j}| exceeds q_{j} D0 = {} * D0",
                        fraction_string(qj)
                    ),
                });
            }
        }
        let dist = boundary_distance(d.limit(), dj, d0, frame);
        let ok = match &dist {
            NormValue::Finite(r) => r <= qj,
            NormValue::Infinite => false,
        };
        if !ok {
            report.violations.push(CauchyViolation {
                stage_j: j,
                stage_i: j,
                detail: format!(
                    "|limit - D_{j}| = {dist} exceeds q_{j} = {}",
                    fraction_string(qj)
                ),
            });
        }
        report.limit_distances.push((j, dist, qj.clone()));
    }
    Ok(report)
}
