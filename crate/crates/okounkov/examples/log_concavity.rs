//! Log-concavity of volumes under Minkowski sums, decided by exact integer
//! root comparisons, plus the shrink-toward-the-barycenter inner witness for
//! volume approximation from inside.
//!
//! Run with: cargo run --example log_concavity

use okounkov::geometry::{RatPolytope, RatVec};
use okounkov::global::{fujita_inner_body, log_concavity_check};
use okounkov::rational::{fraction_string, rat};

fn hull(points: &[&[i64]]) -> RatPolytope {
    let pts: Vec<RatVec> = points.iter().map(|p| RatVec::from_ints(p)).collect();
    RatPolytope::from_points(&pts).unwrap()
}

fn main() {
    let pairs = [
        (hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), hull(&[&[0, 0], &[2, 0], &[0, 2]])),
        (hull(&[&[0, 0], &[3, 0], &[0, 1], &[3, 1]]), hull(&[&[0, 0], &[1, 0], &[0, 3], &[1, 3]])),
        (
            hull(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            hull(&[
                &[0, 0, 0],
                &[2, 0, 0],
                &[0, 2, 0],
                &[0, 0, 2],
                &[2, 2, 0],
                &[2, 0, 2],
                &[0, 2, 2],
                &[2, 2, 2],
            ]),
        ),
    ];
    for (p, q) in &pairs {
        let row = log_concavity_check(p, q).unwrap();
        println!(
            "dim {}: vol(P) = {}, vol(Q) = {}, vol(P+Q) = {}  log-concave: {}",
            row.dim,
            fraction_string(&row.vol_p),
            fraction_string(&row.vol_q),
            fraction_string(&row.vol_sum),
            row.holds
        );
    }

    let body = hull(&[&[0, 0], &[4, 0], &[0, 4]]);
    for eps in [rat(1, 2), rat(1, 10), rat(1, 100)] {
        let w = fujita_inner_body(&body, &eps).unwrap();
        println!(
            "inner witness at epsilon {}: shrink {}, volume {} >= {}",
            fraction_string(&eps),
            fraction_string(&w.shrink),
            fraction_string(&w.inner_volume),
            fraction_string(&w.target)
        );
    }
}
