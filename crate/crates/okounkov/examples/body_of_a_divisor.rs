//! Compute the Okounkov body of an adelic divisor: the truncated inner hull
//! from the valuation slices, the exact body when the instance is toric,
//! and the certified volume data.
//!
//! Run with: cargo run --example body_of_a_divisor

use okounkov::adelic::limit_series;
use okounkov::body::{adelic_volume_estimate, okounkov_truncated};
use okounkov::instance::Instance;
use okounkov::rational::fraction_string;
use std::path::PathBuf;

fn main() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances/p2_o1.json");
    let inst = Instance::load(&path).expect("instance loads");
    let d = inst.divisor("D").expect("divisor D");
    let flag = inst.flag(None).expect("default flag");

    let series = limit_series(d);
    let approx = okounkov_truncated(&series, flag, 8).expect("truncated body");
    println!("instance: {} — {}", inst.name, inst.description);
    println!("inner body at degree 8:");
    for v in approx.inner_body.vertices() {
        println!("  vertex {v}");
    }
    if let Some(exact) = &approx.exact_body {
        println!(
            "exact body: {} vertices, volume {}",
            exact.vertices().len(),
            fraction_string(&exact.volume())
        );
    }

    let est = adelic_volume_estimate(&series, flag, 12).expect("estimate");
    println!(
        "volume estimate at degree 12: {} (certified in [{}, {}])",
        fraction_string(&est.estimate),
        fraction_string(&est.certified_lower),
        est.certified_upper
            .as_ref()
            .map(fraction_string)
            .unwrap_or_else(|| "?".into()),
    );
    for row in est.approx.volume_sequence.iter().take(6) {
        println!(
            "  degree {:2}: {:4} sections, density {}",
            row.degree,
            row.count,
            fraction_string(&row.density)
        );
    }
}
