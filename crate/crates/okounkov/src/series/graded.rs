//! Graded linear series: a degree-indexed family of section spaces with
//! `W_0 = span{1}`. Sources are pluggable (toric limits, toric models,
//! explicit lists); restriction to a flat and passage to the t-fold
//! subseries are generic combinators. Degree slices are memoized behind a
//! thread-safe cache and evaluation is deterministic.

use super::space::SectionSpace;
use super::SeriesError;
use crate::geometry::RatPolytope;
use crate::rational::Rat;
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    ToricLimit,
    ToricModel,
    ExplicitList,
    RestrictedImage,
}

pub trait SeriesSource: Send + Sync {
    fn ambient_dim(&self) -> usize;
    fn kind(&self) -> SeriesKind;
    fn space(&self, degree: usize) -> Result<SectionSpace, SeriesError>;
    /// The exact Okounkov body when the source knows it (toric cases).
    fn exact_body(&self) -> Option<RatPolytope>;
    fn describe(&self) -> String;
}

#[derive(Clone)]
pub struct GradedSeries {
    source: Arc<dyn SeriesSource>,
    cache: Arc<Mutex<HashMap<usize, Arc<SectionSpace>>>>,
}

impl GradedSeries {
    pub fn from_source(source: Arc<dyn SeriesSource>) -> GradedSeries {
        GradedSeries {
            source,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    /// An explicit list of spaces for degrees `0..spaces.len()`. Degree zero
    /// must be the constants.
    pub fn explicit(ambient_dim: usize, spaces: Vec<SectionSpace>) -> Result<GradedSeries, SeriesError> {
        if spaces.is_empty() {
            return Err(SeriesError::DegreeUnavailable(0));
        }
        let w0 = &spaces[0];
        let one = SectionSpace::one(ambient_dim);
        if w0.dim() != 1 || !w0.is_subspace_of(&one)? {
            return Err(SeriesError::BadFlag(
                "explicit series must start with the constants at degree zero".into(),
            ));
        }
        for (m, s) in spaces.iter().enumerate() {
            if s.ambient_dim() != ambient_dim {
                return Err(SeriesError::LengthMismatch {
                    expected: ambient_dim,
                    got: s.ambient_dim(),
                });
            }
            if s.degree() != m {
                return Err(SeriesError::DegreeUnavailable(m));
            }
        }
        Ok(GradedSeries::from_source(Arc::new(ExplicitSource {
            ambient_dim,
            spaces,
        })))
    }

    pub fn ambient_dim(&self) -> usize {
        self.source.ambient_dim()
    }

    pub fn kind(&self) -> SeriesKind {
        self.source.kind()
    }

    pub fn describe(&self) -> String {
        self.source.describe()
    }

    pub fn exact_body(&self) -> Option<RatPolytope> {
        self.source.exact_body()
    }

    pub fn space(&self, degree: usize) -> Result<Arc<SectionSpace>, SeriesError> {
        if let Some(hit) = self.cache.lock().expect("series cache").get(&degree) {
            return Ok(hit.clone());
        }
        let computed = Arc::new(self.source.space(degree)?);
        let mut guard = self.cache.lock().expect("series cache");
        Ok(guard.entry(degree).or_insert(computed).clone())
    }

    /// The t-fold subseries `m -> W_{t m}`, the series of the t-fold divisor.
    pub fn multiple(&self, factor: usize) -> GradedSeries {
        assert!(factor >= 1);
        GradedSeries::from_source(Arc::new(MultipleSource {
            base: self.clone(),
            factor,
        }))
    }

    /// The image series on the flat `V({x_i : i in mask})`.
    pub fn restricted(&self, mask: BTreeSet<usize>) -> Result<GradedSeries, SeriesError> {
        if mask.is_empty() || mask.len() >= self.ambient_dim() {
            return Err(SeriesError::BadFlat);
        }
        if mask.iter().any(|&i| i >= self.ambient_dim()) {
            return Err(SeriesError::BadFlat);
        }
        Ok(GradedSeries::from_source(Arc::new(RestrictedSource {
            base: self.clone(),
            mask,
        })))
    }
}

struct ExplicitSource {
    ambient_dim: usize,
    spaces: Vec<SectionSpace>,
}

impl SeriesSource for ExplicitSource {
    fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    fn kind(&self) -> SeriesKind {
        SeriesKind::ExplicitList
    }
    fn space(&self, degree: usize) -> Result<SectionSpace, SeriesError> {
        self.spaces
            .get(degree)
            .cloned()
            .ok_or(SeriesError::DegreeUnavailable(degree))
    }
    fn exact_body(&self) -> Option<RatPolytope> {
        None
    }
    fn describe(&self) -> String {
        format!("explicit list of {} degrees", self.spaces.len())
    }
}

struct MultipleSource {
    base: GradedSeries,
    factor: usize,
}

impl SeriesSource for MultipleSource {
    fn ambient_dim(&self) -> usize {
        self.base.ambient_dim()
    }
    fn kind(&self) -> SeriesKind {
        self.base.kind()
    }
    fn space(&self, degree: usize) -> Result<SectionSpace, SeriesError> {
        let inner = self.base.space(degree * self.factor)?;
        Ok(SectionSpace::span(
            degree,
            inner.ambient_dim(),
            inner.basis().to_vec(),
        )?)
    }
    fn exact_body(&self) -> Option<RatPolytope> {
        let t = Rat::from_integer((self.factor as i64).into());
        self.base.exact_body().and_then(|b| b.scale(&t).ok())
    }
    fn describe(&self) -> String {
        format!("{} (degree scaled by {})", self.base.describe(), self.factor)
    }
}

struct RestrictedSource {
    base: GradedSeries,
    mask: BTreeSet<usize>,
}

impl SeriesSource for RestrictedSource {
    fn ambient_dim(&self) -> usize {
        self.base.ambient_dim() - self.mask.len()
    }
    fn kind(&self) -> SeriesKind {
        SeriesKind::RestrictedImage
    }
    fn space(&self, degree: usize) -> Result<SectionSpace, SeriesError> {
        self.base.space(degree)?.restrict(&self.mask)
    }
    fn exact_body(&self) -> Option<RatPolytope> {
        let body = self.base.exact_body()?;
        let zeroed: Vec<usize> = self.mask.iter().copied().collect();
        body.coordinate_slice(&zeroed).ok()
    }
    fn describe(&self) -> String {
        format!("{} restricted to V({:?})", self.base.describe(), self.mask)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn explicit_series(
        ambient: usize,
        max_degree: usize,
        f: impl Fn(usize) -> SectionSpace,
    ) -> GradedSeries {
        let spaces: Vec<SectionSpace> = (0..=max_degree)
            .map(|m| if m == 0 { SectionSpace::one(ambient) } else { f(m) })
            .collect();
        GradedSeries::explicit(ambient, spaces).unwrap()
    }

    #[test]
    fn explicit_series_validates_degree_zero() {
        let bad = GradedSeries::explicit(
            1,
            vec![SectionSpace::monomials(0, 1, [vec![1]])],
        );
        assert!(bad.is_err());
        let good = explicit_series(1, 3, |m| {
            SectionSpace::monomials(m, 1, (0..=m as i64).map(|k| vec![k]))
        });
        assert_eq!(good.space(2).unwrap().dim(), 3);
        assert!(good.space(9).is_err());
    }

    #[test]
    fn multiple_reindexes_degrees() {
        let s = explicit_series(1, 6, |m| {
            SectionSpace::monomials(m, 1, (0..=m as i64).map(|k| vec![k]))
        });
        let doubled = s.multiple(2);
        assert_eq!(doubled.space(3).unwrap().dim(), 7);
        assert_eq!(doubled.space(3).unwrap().degree(), 3);
        assert_eq!(doubled.kind(), SeriesKind::ExplicitList);
    }

    #[test]
    fn restricted_image_series() {
        let s = explicit_series(2, 4, |m| {
            let mut exps = Vec::new();
            for a in 0..=m as i64 {
                for b in 0..=(2 * m) as i64 {
                    exps.push(vec![a, b]);
                }
            }
            SectionSpace::monomials(m, 2, exps)
        });
        let r = s.restricted([0].into_iter().collect()).unwrap();
        assert_eq!(r.ambient_dim(), 1);
        assert_eq!(r.kind(), SeriesKind::RestrictedImage);
        // Substituting x0 = 0 keeps the 2m+1 powers of the other variable.
        assert_eq!(r.space(3).unwrap().dim(), 7);
        assert!(r.restricted([0].into_iter().collect()).is_err());
        assert!(s.restricted([0, 1].into_iter().collect()).is_err());
    }

    #[test]
    fn cache_returns_shared_slices() {
        let s = explicit_series(1, 2, |m| {
            SectionSpace::monomials(m, 1, [vec![m as i64]])
        });
        let a = s.space(1).unwrap();
        let b = s.space(1).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
