//! The augmented base locus of an adelic divisor: the stabilized running
//! intersection of the base loci of `m D - A` for an ample reference
//! divisor `A`. Independence of the reference is consumed as a license, not
//! re-proved: callers cross-check two distinct amples.

use super::adelic_divisor::ToricAdelicDivisor;
use super::divisor::ModelDivisor;
use super::sections::adelic_sections;
use super::AdelicError;
use crate::series::{base_locus, CoordinateFlatSet};

#[derive(Debug, Clone)]
pub struct BasePlusReport {
    /// Least degree after which the running intersection never changed.
    pub stabilized_at: usize,
    pub checked_to: usize,
    /// `(m, locus of m D - A)` rows.
    pub per_degree: Vec<(usize, CoordinateFlatSet)>,
}

/// `B+(D) = intersection over m <= bound of Bs(m D - A)`, with the twisted
/// space formed stage-wise (`m D_j - A`, tolerance `m q_j`).
pub fn augmented_base_locus(
    d: &ToricAdelicDivisor,
    ample: &ModelDivisor,
    bound: usize,
) -> Result<(CoordinateFlatSet, BasePlusReport), AdelicError> {
    assert!(bound >= 1);
    if !ample.is_ample_surrogate(d.frame())? {
        return Err(AdelicError::NonAmple(
            "polytope must be full-dimensional with every ray inequality tight".into(),
        ));
    }
    let dim = d.frame().dim();
    let mut running = CoordinateFlatSet::all(dim);
    let mut last_change = 1usize;
    let mut per_degree = Vec::with_capacity(bound);
    for m in 1..=bound {
        let twisted = twisted_divisor(d, ample, m)?;
        let space = adelic_sections(&twisted, 1)?;
        let bs = base_locus(&space)?;
        per_degree.push((m, bs.clone()));
        let next = running.intersect(&bs);
        if next != running {
            last_change = m;
        }
        running = next;
    }
    Ok((
        running,
        BasePlusReport {
            stabilized_at: last_change,
            checked_to: bound,
            per_degree,
        },
    ))
}

/// The adelic divisor `m D - A` with stages `m D_j - A` and tolerances
/// `m q_j`.
pub fn twisted_divisor(
    d: &ToricAdelicDivisor,
    ample: &ModelDivisor,
    m: usize,
) -> Result<ToricAdelicDivisor, AdelicError> {
    let minus_a = ToricAdelicDivisor::constant(
        "ample reference",
        d.frame().clone(),
        d.boundary().clone(),
        ample.clone(),
    )?;
    ToricAdelicDivisor::combine(
        format!("{}*{} - A", m, d.name()),
        vec![
            (crate::rational::rat_int(m as i64), d.clone()),
            (crate::rational::rat_int(-1), minus_a),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::super::adelic_divisor::tests::{interval_divisor, limit_zero_divisor, rect_divisor};
    use super::super::divisor::ModelDivisor;
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn big_interval_has_empty_augmented_locus() {
        let d = interval_divisor();
        let frame = d.frame().clone();
        let a1 = ModelDivisor::new(&frame, vec![rat_int(0), rat_int(1)]).unwrap();
        let (b1, rep1) = augmented_base_locus(&d, &a1, 10).unwrap();
        assert!(b1.is_empty_locus());
        assert_eq!(rep1.stabilized_at, 1);

        // Independence of the ample reference: A' = 2[inf] agrees, even
        // though its degree-1 twist is empty (stabilization moves to 2).
        let a2 = ModelDivisor::new(&frame, vec![rat_int(0), rat_int(2)]).unwrap();
        let (b2, rep2) = augmented_base_locus(&d, &a2, 10).unwrap();
        assert_eq!(b1, b2);
        assert_eq!(rep2.stabilized_at, 2);
    }

    #[test]
    fn limit_zero_has_full_augmented_locus() {
        let z = limit_zero_divisor();
        let frame = z.frame().clone();
        let a = ModelDivisor::new(&frame, vec![rat_int(0), rat_int(1)]).unwrap();
        let (b, _) = augmented_base_locus(&z, &a, 8).unwrap();
        assert!(b.is_all());
    }

    #[test]
    fn non_ample_reference_rejected() {
        let d = rect_divisor();
        let frame = d.frame().clone();
        let flat = ModelDivisor::new(
            &frame,
            vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)],
        )
        .unwrap();
        assert!(matches!(
            augmented_base_locus(&d, &flat, 4),
            Err(AdelicError::NonAmple(_))
        ));
    }

    #[test]
    fn stable_locus_contained_in_augmented() {
        use crate::adelic::sections::limit_series;
        use crate::series::stable_base_locus;
        for d in [interval_divisor(), limit_zero_divisor(), rect_divisor()] {
            let frame = d.frame().clone();
            let ample_coeffs: Vec<_> = (0..frame.num_rays())
                .map(|i| {
                    if frame.is_boundary(i) {
                        rat_int(1)
                    } else {
                        rat_int(0)
                    }
                })
                .collect();
            let a = ModelDivisor::new(&frame, ample_coeffs).unwrap();
            let series = limit_series(&d);
            let (sb, _) = stable_base_locus(&series, 8).unwrap();
            let (bplus, _) = augmented_base_locus(&d, &a, 8).unwrap();
            assert!(bplus.contains_set(&sb), "divisor {}", d.name());
        }
    }
}
