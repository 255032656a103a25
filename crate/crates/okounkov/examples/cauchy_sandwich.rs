//! The boundary norm and the stage sandwich: every adelic section space is
//! squeezed between the classical section spaces of the stage divisor
//! shifted down and up by the stage tolerance times the boundary divisor.
//!
//! Run with: cargo run --example cauchy_sandwich

use okounkov::adelic::{boundary_distance, sandwich_spaces, verify_cauchy};
use okounkov::instance::Instance;
use std::path::PathBuf;

fn main() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances/interval.json");
    let inst = Instance::load(&path).expect("instance loads");
    let d = inst.divisor("D").expect("divisor D");

    let report = verify_cauchy(d, 8).expect("stages materialize");
    println!(
        "Cauchy check: {} pairs, {} violations",
        report.checked_pairs,
        report.violations.len()
    );
    for (j, dist, q) in report.limit_distances.iter().take(4) {
        println!("  stage {j}: |limit - D_j| = {dist}, tolerance q_j = {q}",
            q = okounkov::rational::fraction_string(q));
    }

    let (d1, _) = d.stage(1).unwrap();
    let (d3, _) = d.stage(3).unwrap();
    println!(
        "boundary distance between stages 1 and 3: {}",
        boundary_distance(&d1, &d3, d.boundary(), d.frame())
    );

    for (j, m) in [(1usize, 2u64), (2, 5), (4, 10)] {
        let t = sandwich_spaces(d, j, m).expect("sandwich");
        println!(
            "stage {j}, degree {m}: dims {} <= {} <= {}  (inclusions hold: {})",
            t.lower.dim(),
            t.middle.dim(),
            t.upper.dim(),
            t.holds()
        );
    }
}
