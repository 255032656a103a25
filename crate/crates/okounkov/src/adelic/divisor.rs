//! Model divisors as ray-coefficient vectors on the fixed frame, the
//! effective boundary divisor measuring the boundary norm, and the toric
//! ampleness surrogate used for augmented-base-locus reference divisors.

use super::frame::ToricFrame;
use super::AdelicError;
use crate::geometry::RatPolytope;
use crate::rational::Rat;
use num_traits::{Signed, Zero};
use std::sync::Arc;

/// A Q-divisor on the frame: one exact rational coefficient per ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelDivisor {
    coeffs: Vec<Rat>,
}

impl ModelDivisor {
    pub fn new(frame: &ToricFrame, coeffs: Vec<Rat>) -> Result<ModelDivisor, AdelicError> {
        if coeffs.len() != frame.num_rays() {
            return Err(AdelicError::BadDivisor(format!(
                "expected {} coefficients, got {}",
                frame.num_rays(),
                coeffs.len()
            )));
        }
        Ok(ModelDivisor { coeffs })
    }

    pub fn zero(frame: &ToricFrame) -> ModelDivisor {
        ModelDivisor {
            coeffs: vec![Rat::zero(); frame.num_rays()],
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, ray: usize) -> &Rat {
        &self.coeffs[ray]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &ModelDivisor) -> ModelDivisor {
        ModelDivisor {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModelDivisor) -> ModelDivisor {
        ModelDivisor {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, t: &Rat) -> ModelDivisor {
        ModelDivisor {
            coeffs: self.coeffs.iter().map(|a| a * t).collect(),
        }
    }

    /// Coefficient-wise `self <= other + bound`, the one-sided effectivity
    /// comparison used by the Cauchy condition.
    pub fn le_within(&self, other: &ModelDivisor, bound: &ModelDivisor) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .zip(&bound.coeffs)
            .all(|((a, b), c)| a <= &(b + c))
    }

    pub fn agrees_off_boundary(&self, other: &ModelDivisor, frame: &ToricFrame) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .all(|(i, (a, b))| frame.is_boundary(i) || a == b)
    }

    pub fn supported_on_boundary(&self, frame: &ToricFrame) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, a)| frame.is_boundary(i) || a.is_zero())
    }

    pub fn polytope(&self, frame: &ToricFrame) -> Result<RatPolytope, AdelicError> {
        frame.divisor_polytope(&self.coeffs)
    }

    /// Desk-scale toric ampleness surrogate: the polytope is full
    /// dimensional and every ray inequality is tight at some vertex.
    pub fn is_ample_surrogate(&self, frame: &ToricFrame) -> Result<bool, AdelicError> {
        let p = self.polytope(frame)?;
        if !p.is_full_dim() {
            return Ok(false);
        }
        for (ray, a) in frame.rays().iter().zip(&self.coeffs) {
            let h = crate::geometry::Halfspace::from_ints(ray, a.clone());
            if !p.vertices().iter().any(|v| h.tight(v)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// An effective divisor supported exactly on the boundary rays; the
/// yardstick of the boundary norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDivisor {
    divisor: ModelDivisor,
}

impl BoundaryDivisor {
    pub fn new(frame: &ToricFrame, coeffs: Vec<Rat>) -> Result<Arc<BoundaryDivisor>, AdelicError> {
        let divisor = ModelDivisor::new(frame, coeffs)?;
        for (i, c) in divisor.coeffs().iter().enumerate() {
            if frame.is_boundary(i) {
                if !c.is_positive() {
                    return Err(AdelicError::BadDivisor(format!(
                        "boundary divisor must be positive on boundary ray {i}"
                    )));
                }
            } else if !c.is_zero() {
                return Err(AdelicError::BadDivisor(format!(
                    "boundary divisor must vanish off the boundary (ray {i})"
                )));
            }
        }
        Ok(Arc::new(BoundaryDivisor { divisor }))
    }

    pub fn divisor(&self) -> &ModelDivisor {
        &self.divisor
    }

    pub fn coeff(&self, ray: usize) -> &Rat {
        self.divisor.coeff(ray)
    }

    pub fn scaled(&self, t: &Rat) -> ModelDivisor {
        self.divisor.scaled(t)
    }
}

#[cfg(test)]
mod tests {
    use super::super::frame::tests::{p1_frame, p1xp1_frame, p2_frame};
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn boundary_divisor_support_checked() {
        let f = p1_frame();
        assert!(BoundaryDivisor::new(&f, vec![rat_int(0), rat_int(1)]).is_ok());
        assert!(BoundaryDivisor::new(&f, vec![rat_int(1), rat_int(1)]).is_err());
        assert!(BoundaryDivisor::new(&f, vec![rat_int(0), rat_int(0)]).is_err());
    }

    #[test]
    fn ampleness_surrogate() {
        let f = p2_frame();
        let o1 = ModelDivisor::new(&f, vec![rat_int(0), rat_int(0), rat_int(1)]).unwrap();
        assert!(o1.is_ample_surrogate(&f).unwrap());
        let zero = ModelDivisor::zero(&f);
        assert!(!zero.is_ample_surrogate(&f).unwrap());

        let g = p1xp1_frame();
        let o11 = ModelDivisor::new(&g, vec![rat_int(0), rat_int(0), rat_int(1), rat(1, 2)]).unwrap();
        assert!(o11.is_ample_surrogate(&g).unwrap());
        // O(1,0) misses the second factor: not ample.
        let o10 = ModelDivisor::new(&g, vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)]).unwrap();
        assert!(!o10.is_ample_surrogate(&g).unwrap());
    }

    #[test]
    fn effectivity_comparisons() {
        let f = p1_frame();
        let a = ModelDivisor::new(&f, vec![rat_int(0), rat(9, 10)]).unwrap();
        let b = ModelDivisor::new(&f, vec![rat_int(0), rat(3, 4)]).unwrap();
        let bound = ModelDivisor::new(&f, vec![rat_int(0), rat(1, 5)]).unwrap();
        assert!(a.le_within(&b, &bound));
        assert!(!a.le_within(&b, &ModelDivisor::zero(&f)));
        assert!(a.agrees_off_boundary(&b, &f));
    }
}
