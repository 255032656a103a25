//! Restricted linear series along a coordinate flat: image spaces, slice
//! counts, the restricted body and its volume, gated by the
//! augmented-base-locus hypothesis.
//!
//! Run with: cargo run --example restricted_volumes

use okounkov::body::{restricted_series, restricted_volume_estimate, semigroup_slice};
use okounkov::instance::Instance;
use okounkov::rational::fraction_string;
use std::path::PathBuf;

fn main() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances/p1xp1_rect.json");
    let inst = Instance::load(&path).expect("instance loads");
    let d = inst.divisor("D").expect("divisor D");
    let flat = inst.flat("F").expect("flat F");
    let ample = inst.ample(None).expect("ample reference");

    let series =
        restricted_series(d, flat, ample, inst.params.bplus_degree).expect("hypothesis holds");
    let flag = inst
        .flag(None)
        .unwrap()
        .clone()
        .restriction_to(flat)
        .expect("restricted flag");

    println!("restricted image series of {} along V({flat:?}):", d.name());
    for m in 1..=6usize {
        let slice = semigroup_slice(&series, m, &flag).unwrap();
        println!("  degree {m}: dimension {}", slice.len());
    }
    let est = restricted_volume_estimate(&series, &flag, 20).expect("estimate");
    println!(
        "restricted volume estimate at degree 20: {} (exact limit {})",
        fraction_string(&est.estimate),
        est.certified_upper
            .as_ref()
            .map(fraction_string)
            .unwrap_or_else(|| "?".into())
    );
    println!("restricted body: {:?}", est.approx.body());

    // The hypothesis gate: the limit-zero divisor contains every flat in
    // its augmented base locus, so the restricted theory refuses it.
    let z = inst.divisor("Z").expect("divisor Z");
    match restricted_series(z, flat, ample, inst.params.bplus_degree) {
        Err(e) => println!("limit-zero divisor rejected as expected: {e}"),
        Ok(_) => println!("unexpected: hypothesis gate did not trigger"),
    }
}
