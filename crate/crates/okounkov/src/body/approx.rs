//! Truncated Okounkov bodies and certified volume data. The truncation at
//! degree `M` is always reported as two-sided data: the inner hull of the
//! scaled slices (a lower bound) and the exact body when the source knows
//! it (toric cases), rather than pretending the truncation is the limit.

use super::semigroup::semigroup_slice;
use super::BodyError;
use crate::geometry::{hausdorff_distance, RatPolytope, RatVec};
use crate::rational::{rat_int, Rat};
use crate::series::{Flag, GradedSeries};

#[derive(Debug, Clone)]
pub struct VolumeRow {
    pub degree: usize,
    pub count: usize,
    /// `count / degree^d`, the unnormalized density.
    pub density: Rat,
}

#[derive(Debug, Clone)]
pub struct OkounkovApprox {
    pub truncation: usize,
    pub ambient_dim: usize,
    /// Hull of the scaled slices up to the truncation; empty when every
    /// positive slice is empty.
    pub inner_body: RatPolytope,
    /// The exact body, when the series knows it.
    pub exact_body: Option<RatPolytope>,
    pub volume_sequence: Vec<VolumeRow>,
    /// Positive volume observed (exact body when present, else the inner
    /// hull). Never evidence of non-bigness on its own.
    pub observed_big: bool,
}

impl OkounkovApprox {
    /// The best body available: exact when known, inner otherwise.
    pub fn body(&self) -> &RatPolytope {
        self.exact_body.as_ref().unwrap_or(&self.inner_body)
    }
}

/// Materialize slices up to the bound and hull their scalings.
pub fn okounkov_truncated(
    series: &GradedSeries,
    flag: &Flag,
    bound: usize,
) -> Result<OkounkovApprox, BodyError> {
    assert!(bound >= 1);
    let d = flag.space_dim();
    if series.ambient_dim() != d {
        return Err(BodyError::Degenerate(format!(
            "flag compares {d} coordinates but the series lives in {}",
            series.ambient_dim()
        )));
    }
    let mut points: Vec<RatVec> = Vec::new();
    let mut volume_sequence = Vec::with_capacity(bound);
    for m in 1..=bound {
        let slice = semigroup_slice(series, m, flag)?;
        let count = slice.len();
        let denom = rat_int(m as i64);
        for v in &slice {
            points.push(RatVec::new(
                v.iter().map(|&c| rat_int(c) / &denom).collect(),
            ));
        }
        volume_sequence.push(VolumeRow {
            degree: m,
            count,
            density: rat_int(count as i64) / crate::rational::rat_pow(&denom, d as i32),
        });
    }
    let inner_body = if points.is_empty() {
        RatPolytope::empty(d)
    } else {
        RatPolytope::from_points(&points)?
    };
    let exact_body = series.exact_body();
    if let Some(exact) = &exact_body {
        if !exact.contains_polytope(&inner_body) {
            return Err(BodyError::Inconsistent(
                "inner truncation escapes the exact body".into(),
            ));
        }
    }
    let observed_big = exact_body
        .as_ref()
        .map(|b| b.is_full_dim())
        .unwrap_or_else(|| inner_body.is_full_dim());
    Ok(OkounkovApprox {
        truncation: bound,
        ambient_dim: d,
        inner_body,
        exact_body,
        volume_sequence,
        observed_big,
    })
}

#[derive(Debug, Clone)]
pub struct VolumeEstimate {
    pub truncation: usize,
    pub ambient_dim: usize,
    /// `d! * #slice_M / M^d`.
    pub estimate: Rat,
    /// `d! * vol(inner hull at M)`: a certified lower bound.
    pub certified_lower: Rat,
    /// `d! * vol(exact body)` when the series knows its body; then the
    /// scaled counts converge to this value and the estimate is within
    /// `O(1/M)` of it.
    pub certified_upper: Option<Rat>,
    pub approx: OkounkovApprox,
}

pub fn adelic_volume_estimate(
    series: &GradedSeries,
    flag: &Flag,
    bound: usize,
) -> Result<VolumeEstimate, BodyError> {
    if bound < 2 {
        return Err(BodyError::Degenerate("volume estimates need degree >= 2".into()));
    }
    let approx = okounkov_truncated(series, flag, bound)?;
    let d = approx.ambient_dim;
    let fact = rat_int((1..=d as i64).product());
    let last = approx
        .volume_sequence
        .last()
        .expect("bound >= 2 materializes rows");
    let estimate = &fact * &last.density;
    let certified_lower = &fact * approx.inner_body.volume();
    let certified_upper = approx.exact_body.as_ref().map(|b| &fact * b.volume());
    Ok(VolumeEstimate {
        truncation: bound,
        ambient_dim: d,
        estimate,
        certified_lower,
        certified_upper,
        approx,
    })
}

#[derive(Debug, Clone)]
pub struct HomogeneityReport {
    pub factor: usize,
    pub truncation: usize,
    /// Exact equality of the t-fold truncated body (computed from slices of
    /// the t-fold series) with the scaled reference body; only demanded on
    /// toric-exact sources.
    pub exact_equal: Option<bool>,
    /// Hausdorff gap between the t-fold inner body and the scaled inner
    /// body, when both are nonempty.
    pub inner_gap: Option<Rat>,
}

impl HomogeneityReport {
    pub fn holds_exactly(&self) -> bool {
        self.exact_equal == Some(true)
    }
}

/// Compare the truncated body of the t-fold series against the scaled body
/// of the base series. The t-fold inner hull is computed independently from
/// its own slices, so agreement is a genuine two-route check.
pub fn homogeneity_check(
    series: &GradedSeries,
    flag: &Flag,
    factor: usize,
    bound: usize,
) -> Result<HomogeneityReport, BodyError> {
    assert!(factor >= 1);
    let t = rat_int(factor as i64);
    let base = okounkov_truncated(series, flag, bound)?;
    // Compatible degrees: the t-fold truncation reads base degrees up to
    // t * folded_bound <= bound.
    let folded_bound = (bound / factor).max(1);
    let folded = okounkov_truncated(&series.multiple(factor), flag, folded_bound)?;
    let exact_equal = match &base.exact_body {
        Some(exact) => {
            let scaled = exact.scale(&t)?;
            // The folded inner hull must reproduce the scaled exact body.
            Some(folded.inner_body == scaled && folded.exact_body.as_ref() == Some(&scaled))
        }
        None => None,
    };
    let inner_gap = if base.inner_body.is_empty() || folded.inner_body.is_empty() {
        None
    } else {
        let scaled_inner = base.inner_body.scale(&t)?;
        Some(hausdorff_distance(&folded.inner_body, &scaled_inner)?)
    };
    Ok(HomogeneityReport {
        factor,
        truncation: folded_bound,
        exact_equal,
        inner_gap,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventualNonvanishing {
    /// Least `r0` with nonzero spaces for all `r0 < r <= bound`, when the
    /// nonvanishing tail is long enough to be trusted (at least half the
    /// horizon); `None` otherwise.
    pub threshold: Option<usize>,
    pub zero_degrees: Vec<usize>,
    pub bound: usize,
}

pub fn eventual_nonvanishing(
    series: &GradedSeries,
    bound: usize,
) -> Result<EventualNonvanishing, BodyError> {
    assert!(bound >= 1);
    let mut zero_degrees = Vec::new();
    for m in 1..=bound {
        if series.space(m)?.is_zero() {
            zero_degrees.push(m);
        }
    }
    let threshold = match zero_degrees.last() {
        None => Some(0),
        Some(&last_zero) => {
            if last_zero >= bound || last_zero > bound / 2 {
                None
            } else {
                Some(last_zero)
            }
        }
    };
    Ok(EventualNonvanishing {
        threshold,
        zero_degrees,
        bound,
    })
}

/// Convenience: `d! * vol(body)` as the scaled volume of a polytope.
pub fn scaled_volume(body: &RatPolytope) -> Rat {
    let d = body.ambient_dim() as i64;
    let fact: i64 = (1..=d).product();
    rat_int(fact) * body.volume()
}

/// True when the gap `|d! count_m / m^d - limit|` is nonincreasing over the
/// materialized degrees (sampled on the full sequence).
pub fn volume_gaps_decay(rows: &[VolumeRow], d: usize, limit: &Rat) -> bool {
    let fact = rat_int((1..=d as i64).product());
    let mut prev: Option<Rat> = None;
    for row in rows {
        let gap = (&fact * &row.density - limit).abs();
        if let Some(p) = &prev {
            if &gap > p {
                return false;
            }
        }
        prev = Some(gap);
    }
    true
}

use num_traits::Signed;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adelic::{limit_series, BoundaryDivisor, ModelDivisor, ToricAdelicDivisor, ToricFrame};
    use crate::rational::rat;
    use crate::series::{GradedSeries, SectionSpace};
    use num_traits::Zero;

    fn interval() -> crate::adelic::ToricAdelicDivisor {
        let frame = ToricFrame::new(vec![vec![1], vec![-1]], [1].into_iter().collect()).unwrap();
        let boundary = BoundaryDivisor::new(&frame, vec![rat_int(0), rat_int(1)]).unwrap();
        ToricAdelicDivisor::closed_form(
            "D",
            frame.clone(),
            boundary,
            ModelDivisor::new(&frame, vec![rat_int(0), rat_int(1)]).unwrap(),
            vec![rat_int(0), rat_int(1)],
            rat(1, 2),
            rat_int(1),
        )
        .unwrap()
    }

    fn p2_o1() -> crate::adelic::ToricAdelicDivisor {
        let frame = ToricFrame::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            [2].into_iter().collect(),
        )
        .unwrap();
        let boundary =
            BoundaryDivisor::new(&frame, vec![rat_int(0), rat_int(0), rat_int(1)]).unwrap();
        ToricAdelicDivisor::constant(
            "O(1)",
            frame.clone(),
            boundary,
            ModelDivisor::new(&frame, vec![rat_int(0), rat_int(0), rat_int(1)]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn truncated_body_of_the_plane() {
        let s = limit_series(&p2_o1());
        let approx = okounkov_truncated(&s, &Flag::standard(2), 4).unwrap();
        // Hull stabilizes at degree one: the unit simplex, which is also the
        // exact body.
        assert_eq!(approx.inner_body, approx.exact_body.clone().unwrap());
        assert_eq!(approx.inner_body.volume(), rat(1, 2));
        assert!(approx.observed_big);
        assert_eq!(approx.volume_sequence[3].count, 15);
    }

    #[test]
    fn volume_estimate_on_the_plane() {
        let s = limit_series(&p2_o1());
        let est = adelic_volume_estimate(&s, &Flag::standard(2), 10).unwrap();
        // 2 * 66 / 100 at degree 10; exact value 1; gap 8/25 <= (3*10+2)/100.
        assert_eq!(est.estimate, rat(33, 25));
        assert_eq!(est.certified_lower, rat_int(1));
        assert_eq!(est.certified_upper, Some(rat_int(1)));
        let gap = (&est.estimate - rat_int(1)).abs();
        assert_eq!(gap, rat(8, 25));
        assert!(gap <= rat(32, 100));
    }

    #[test]
    fn interval_estimates_and_bodies() {
        let s = limit_series(&interval());
        let approx = okounkov_truncated(&s, &Flag::standard(1), 4).unwrap();
        assert_eq!(approx.inner_body, approx.exact_body.clone().unwrap());
        let est = adelic_volume_estimate(&s, &Flag::standard(1), 8).unwrap();
        assert_eq!(est.estimate, rat(9, 8));
        assert_eq!(est.certified_upper, Some(rat_int(1)));
    }

    #[test]
    fn empty_series_has_empty_body() {
        let spaces: Vec<SectionSpace> = (0..=3usize)
            .map(|m| {
                if m == 0 {
                    SectionSpace::one(1)
                } else {
                    SectionSpace::zero(m, 1)
                }
            })
            .collect();
        let s = GradedSeries::explicit(1, spaces).unwrap();
        let approx = okounkov_truncated(&s, &Flag::standard(1), 3).unwrap();
        assert!(approx.inner_body.is_empty());
        assert!(!approx.observed_big);
        let est = adelic_volume_estimate(&s, &Flag::standard(1), 3).unwrap();
        assert!(est.estimate.is_zero());
    }

    #[test]
    fn homogeneity_exact_on_toric_sources() {
        let s = limit_series(&p2_o1());
        let flag = Flag::standard(2);
        for t in [1usize, 2, 3, 5] {
            let rep = homogeneity_check(&s, &flag, t, 3).unwrap();
            assert_eq!(rep.exact_equal, Some(true), "factor {t}");
            assert_eq!(rep.inner_gap, Some(rat_int(0)));
        }
        let i = limit_series(&interval());
        let rep = homogeneity_check(&i, &Flag::standard(1), 3, 4).unwrap();
        assert!(rep.holds_exactly());
    }

    #[test]
    fn eventual_nonvanishing_cases() {
        // All degrees nonzero: threshold 0.
        let s = limit_series(&interval());
        assert_eq!(eventual_nonvanishing(&s, 10).unwrap().threshold, Some(0));

        // Nonzero only at even degrees: odd gaps persist, not found.
        let spaces: Vec<SectionSpace> = (0..=10usize)
            .map(|m| {
                if m % 2 == 0 {
                    SectionSpace::monomials(m, 1, [vec![0]])
                } else {
                    SectionSpace::zero(m, 1)
                }
            })
            .collect();
        let even = GradedSeries::explicit(1, spaces).unwrap();
        assert_eq!(eventual_nonvanishing(&even, 10).unwrap().threshold, None);

        // Lattice counts of the interval [1/4, 1/2]: degree 1 is empty, all
        // later degrees have a point, so the threshold is 1.
        let spaces: Vec<SectionSpace> = (0..=10usize)
            .map(|m| {
                let lo = (m as i64 + 3) / 4; // ceil(m/4)
                let hi = m as i64 / 2; // floor(m/2)
                if m == 0 {
                    SectionSpace::one(1)
                } else {
                    SectionSpace::monomials(m, 1, (lo..=hi).map(|k| vec![k]))
                }
            })
            .collect();
        let shifted = GradedSeries::explicit(1, spaces).unwrap();
        let rep = eventual_nonvanishing(&shifted, 10).unwrap();
        assert_eq!(rep.zero_degrees, vec![1]);
        assert_eq!(rep.threshold, Some(1));
    }

    #[test]
    fn gap_decay_check() {
        let s = limit_series(&interval());
        let approx = okounkov_truncated(&s, &Flag::standard(1), 12).unwrap();
        assert!(volume_gaps_decay(&approx.volume_sequence, 1, &rat_int(1)));
    }
}
