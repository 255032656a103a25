//! The fixed toric frame: primitive rays of a complete fan, a nonempty set
//! of boundary rays whose divisors cover the complement of the open part,
//! and the affine chart at the smooth cone spanned by the standard basis
//! rays. The flag point is the chart origin, so divisors are required to
//! avoid the chart: coefficients on the standard-basis rays are normalized
//! to zero at load by a monomial twist.

use super::AdelicError;
use crate::geometry::{GeomError, Halfspace, RatPolytope};
use crate::rational::Rat;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricFrame {
    dim: usize,
    rays: Vec<Vec<i64>>,
    boundary: BTreeSet<usize>,
    /// `chart_rays[i]` is the index of the ray `e_i`.
    chart_rays: Vec<usize>,
}

impl ToricFrame {
    pub fn new(rays: Vec<Vec<i64>>, boundary: BTreeSet<usize>) -> Result<Arc<ToricFrame>, AdelicError> {
        if rays.is_empty() {
            return Err(AdelicError::BadFrame("no rays".into()));
        }
        let dim = rays[0].len();
        if dim == 0 || dim > crate::geometry::MAX_HULL_DIM {
            return Err(AdelicError::BadFrame(format!(
                "frame dimension {dim} outside 1..={}",
                crate::geometry::MAX_HULL_DIM
            )));
        }
        for r in &rays {
            if r.len() != dim {
                return Err(AdelicError::BadFrame("ray dimension mismatch".into()));
            }
            let ints: Vec<crate::rational::Int> = r.iter().map(|&x| x.into()).collect();
            match crate::rational::primitive_direction(&ints) {
                None => return Err(AdelicError::BadFrame("zero ray".into())),
                Some(prim) => {
                    if prim != ints {
                        return Err(AdelicError::BadFrame(format!("ray {r:?} is not primitive")));
                    }
                }
            }
        }
        let distinct: BTreeSet<&Vec<i64>> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return Err(AdelicError::BadFrame("duplicate rays".into()));
        }
        if boundary.is_empty() {
            return Err(AdelicError::BadFrame("boundary ray set is empty".into()));
        }
        if boundary.iter().any(|&i| i >= rays.len()) {
            return Err(AdelicError::BadFrame("boundary index out of range".into()));
        }
        let mut chart_rays = Vec::with_capacity(dim);
        for i in 0..dim {
            let e: Vec<i64> = (0..dim).map(|j| i64::from(j == i)).collect();
            let idx = rays
                .iter()
                .position(|r| r == &e)
                .ok_or_else(|| AdelicError::BadFrame(format!(
                    "standard basis ray e_{i} missing: the chart cone must be spanned by e_1..e_d"
                )))?;
            if boundary.contains(&idx) {
                return Err(AdelicError::BadFrame(format!(
                    "chart ray e_{i} cannot be a boundary ray"
                )));
            }
            chart_rays.push(idx);
        }
        let frame = ToricFrame { dim, rays, boundary, chart_rays };
        // Completeness surrogate: ray inequalities with any offsets cut out a
        // bounded set iff the rays positively span.
        let ones = vec![Rat::from_integer(1.into()); frame.rays.len()];
        match frame.divisor_polytope(&ones) {
            Ok(_) => Ok(Arc::new(frame)),
            Err(AdelicError::Geometry(GeomError::Unbounded)) => Err(AdelicError::BadFrame(
                "rays do not positively span: the fan is not complete".into(),
            )),
            Err(e) => Err(e),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn boundary(&self) -> &BTreeSet<usize> {
        &self.boundary
    }

    pub fn is_boundary(&self, idx: usize) -> bool {
        self.boundary.contains(&idx)
    }

    pub fn chart_rays(&self) -> &[usize] {
        &self.chart_rays
    }

    /// `{u : <u, ray> >= -coeff}` over all rays; bounded because the fan is
    /// complete.
    pub fn divisor_polytope(&self, coeffs: &[Rat]) -> Result<RatPolytope, AdelicError> {
        if coeffs.len() != self.rays.len() {
            return Err(AdelicError::BadDivisor(format!(
                "expected {} ray coefficients, got {}",
                self.rays.len(),
                coeffs.len()
            )));
        }
        let halfspaces: Vec<Halfspace> = self
            .rays
            .iter()
            .zip(coeffs)
            .map(|(ray, a)| Halfspace::from_ints(ray, a.clone()))
            .collect();
        Ok(RatPolytope::from_halfspaces(self.dim, &halfspaces)?)
    }

    /// Twist coefficients by a monomial so the chart rays carry zero; the
    /// twist must be integral. Returns the normalized coefficients and the
    /// twist exponent (the body translation is its negative).
    pub fn normalize_chart_coeffs(&self, coeffs: &[Rat]) -> Result<(Vec<Rat>, Vec<i64>), AdelicError> {
        if coeffs.len() != self.rays.len() {
            return Err(AdelicError::BadDivisor("coefficient count mismatch".into()));
        }
        let mut twist = vec![0i64; self.dim];
        for (i, &ray_idx) in self.chart_rays.iter().enumerate() {
            let a = &coeffs[ray_idx];
            if a.is_zero() {
                continue;
            }
            if !a.is_integer() {
                return Err(AdelicError::BadDivisor(format!(
                    "chart ray e_{i} carries non-integral coefficient {}; \
                     the monomial twist off the flag point needs integral chart coefficients",
                    crate::rational::fraction_string(a)
                )));
            }
            use num_traits::ToPrimitive;
            twist[i] = -a.numer().to_i64().ok_or_else(|| {
                AdelicError::BadDivisor("chart coefficient overflows".into())
            })?;
        }
        if twist.iter().all(|&t| t == 0) {
            return Ok((coeffs.to_vec(), twist));
        }
        let normalized: Vec<Rat> = self
            .rays
            .iter()
            .zip(coeffs)
            .map(|(ray, a)| {
                let shift: i64 = ray.iter().zip(&twist).map(|(r, t)| r * t).sum();
                a + Rat::from_integer(shift.into())
            })
            .collect();
        Ok((normalized, twist))
    }
}
