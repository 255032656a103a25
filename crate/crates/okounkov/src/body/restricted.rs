//! Restricted linear series along a coordinate flat, gated by the
//! augmented-base-locus hypothesis, and their volume estimates normalized by
//! the flat's dimension.

use super::approx::{adelic_volume_estimate, VolumeEstimate};
use super::BodyError;
use crate::adelic::{augmented_base_locus, limit_series, ModelDivisor, ToricAdelicDivisor};
use crate::series::{Flag, GradedSeries, SeriesKind};
use std::collections::BTreeSet;

/// The image series `m -> image of H0(U, m D) on V({x_i : i in flat})`.
///
/// Defined only when the flat is not inside the augmented base locus of the
/// divisor (checked against the given ample reference up to the given
/// degree); otherwise the restricted theory carries no guarantees and the
/// call is an error.
pub fn restricted_series(
    d: &ToricAdelicDivisor,
    flat: &BTreeSet<usize>,
    ample: &ModelDivisor,
    bplus_bound: usize,
) -> Result<GradedSeries, BodyError> {
    let dim = d.frame().dim();
    if flat.is_empty() || flat.iter().any(|&i| i >= dim) {
        return Err(BodyError::Degenerate(format!(
            "flat {flat:?} is not a strict nonempty subset of the coordinates"
        )));
    }
    if flat.len() >= dim {
        return Err(BodyError::Degenerate(
            "restriction to a point is rejected as degenerate".into(),
        ));
    }
    let (bplus, _) = augmented_base_locus(d, ample, bplus_bound)?;
    if bplus.contains_flat(flat) {
        return Err(BodyError::Hypothesis(format!(
            "restricted theory undefined: V({flat:?}) lies inside the augmented base locus"
        )));
    }
    Ok(limit_series(d).restricted(flat.clone())?)
}

/// Volume estimate of a restricted series, normalized by the dimension of
/// the flat (the ambient dimension of the image series).
pub fn restricted_volume_estimate(
    series: &GradedSeries,
    flag: &Flag,
    bound: usize,
) -> Result<VolumeEstimate, BodyError> {
    if series.kind() != SeriesKind::RestrictedImage {
        return Err(BodyError::Degenerate(
            "restricted volume needs a restricted-image series".into(),
        ));
    }
    if series.ambient_dim() == 0 {
        return Err(BodyError::Degenerate("zero-dimensional restriction".into()));
    }
    adelic_volume_estimate(series, flag, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adelic::{BoundaryDivisor, ToricAdelicDivisor, ToricFrame};
    use crate::body::{okounkov_truncated, semigroup_slice};
    use crate::geometry::RatVec;
    use crate::rational::{rat, rat_int};

    /// Limit polytope [0,1] x [0,2] on the product of two lines, adelic.
    fn rect() -> ToricAdelicDivisor {
        let frame = ToricFrame::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]],
            [2, 3].into_iter().collect(),
        )
        .unwrap();
        let boundary =
            BoundaryDivisor::new(&frame, vec![rat_int(0), rat_int(0), rat_int(1), rat_int(1)])
                .unwrap();
        ToricAdelicDivisor::closed_form(
            "D",
            frame.clone(),
            boundary,
            ModelDivisor::new(&frame, vec![rat_int(0), rat_int(0), rat_int(1), rat_int(2)])
                .unwrap(),
            vec![rat_int(0), rat_int(0), rat_int(1), rat_int(1)],
            rat(1, 2),
            rat_int(1),
        )
        .unwrap()
    }

    fn rect_ample(d: &ToricAdelicDivisor) -> ModelDivisor {
        ModelDivisor::new(
            d.frame(),
            vec![rat_int(0), rat_int(0), rat_int(1), rat_int(1)],
        )
        .unwrap()
    }

    #[test]
    fn restricted_slice_counts() {
        let d = rect();
        let flat: BTreeSet<usize> = [0].into_iter().collect();
        let series = restricted_series(&d, &flat, &rect_ample(&d), 8).unwrap();
        let flag = Flag::standard(2).restriction_to(&flat).unwrap();
        // Substituting x0 = 0 keeps the powers of the second variable:
        // dimension 2m + 1 per degree.
        for m in 1..=8usize {
            assert_eq!(semigroup_slice(&series, m, &flag).unwrap().len(), 2 * m + 1);
        }
    }

    #[test]
    fn restricted_body_and_volume() {
        let d = rect();
        let flat: BTreeSet<usize> = [0].into_iter().collect();
        let series = restricted_series(&d, &flat, &rect_ample(&d), 8).unwrap();
        let flag = Flag::standard(2).restriction_to(&flat).unwrap();
        let approx = okounkov_truncated(&series, &flag, 6).unwrap();
        let expect = crate::geometry::RatPolytope::from_points(&[
            RatVec::from_ints(&[0]),
            RatVec::from_ints(&[2]),
        ])
        .unwrap();
        assert_eq!(approx.exact_body.as_ref(), Some(&expect));
        assert_eq!(approx.inner_body, expect);
        let est = restricted_volume_estimate(&series, &flag, 10).unwrap();
        assert_eq!(est.estimate, rat(21, 10));
        assert_eq!(est.certified_upper, Some(rat_int(2)));
    }

    #[test]
    fn hypothesis_gate_on_limit_zero() {
        let d = rect();
        let frame = d.frame().clone();
        let boundary = d.boundary().clone();
        let zero = ToricAdelicDivisor::constant(
            "Z",
            frame.clone(),
            boundary,
            ModelDivisor::zero(&frame),
        )
        .unwrap();
        let flat: BTreeSet<usize> = [0].into_iter().collect();
        let err = restricted_series(&zero, &flat, &rect_ample(&d), 6);
        assert!(matches!(err, Err(BodyError::Hypothesis(_))));
    }

    #[test]
    fn degenerate_flats_rejected() {
        let d = rect();
        let a = rect_ample(&d);
        let full: BTreeSet<usize> = [0, 1].into_iter().collect();
        assert!(matches!(
            restricted_series(&d, &full, &a, 4),
            Err(BodyError::Degenerate(_))
        ));
        let empty: BTreeSet<usize> = BTreeSet::new();
        assert!(matches!(
            restricted_series(&d, &empty, &a, 4),
            Err(BodyError::Degenerate(_))
        ));
    }

    #[test]
    fn plane_restricted_to_a_line() {
        // O(1) on the projective plane restricted to a chart line: dimension
        // m + 1 per degree, limit volume 1.
        let frame = ToricFrame::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            [2].into_iter().collect(),
        )
        .unwrap();
        let boundary =
            BoundaryDivisor::new(&frame, vec![rat_int(0), rat_int(0), rat_int(1)]).unwrap();
        let d = ToricAdelicDivisor::constant(
            "O(1)",
            frame.clone(),
            boundary,
            ModelDivisor::new(&frame, vec![rat_int(0), rat_int(0), rat_int(1)]).unwrap(),
        )
        .unwrap();
        let ample = ModelDivisor::new(&frame, vec![rat_int(0), rat_int(0), rat_int(1)]).unwrap();
        let flat: BTreeSet<usize> = [0].into_iter().collect();
        let series = restricted_series(&d, &flat, &ample, 6).unwrap();
        let flag = Flag::standard(2).restriction_to(&flat).unwrap();
        for m in 1..=6usize {
            assert_eq!(semigroup_slice(&series, m, &flag).unwrap().len(), m + 1);
        }
        let est = restricted_volume_estimate(&series, &flag, 10).unwrap();
        assert_eq!(est.estimate, rat(11, 10));
        assert_eq!(est.certified_upper, Some(rat_int(1)));
    }
}
