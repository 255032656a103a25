//! Volume continuity under rational perturbations: the interval divisor
//! perturbed by t times the boundary divisor has volume exactly 1 + t, so
//! the table converges monotonically as t -> 0 from either side.
//!
//! Run with: cargo run --example continuity

use okounkov::global::continuity_experiment;
use okounkov::instance::Instance;
use okounkov::rational::{fraction_string, rat, Rat};
use std::path::PathBuf;

fn main() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances/interval.json");
    let inst = Instance::load(&path).expect("instance loads");
    let d = inst.divisor("D").expect("divisor D");
    let d0 = d.boundary().divisor().clone();

    for sign in [1i64, -1] {
        let ts: Vec<Rat> = (1..=8).map(|n| rat(sign, 1 << n)).collect();
        let table = continuity_experiment(d, &d0, &ts).expect("table");
        println!(
            "perturbation by {}D0 (base volume {}):",
            if sign > 0 { "+" } else { "-" },
            fraction_string(&table.base_body_volume)
        );
        println!("        t | volume | gap to base body");
        for row in &table.rows {
            println!(
                "  {:>7} | {:>6} | {}",
                fraction_string(&row.t),
                fraction_string(&row.body_volume),
                fraction_string(&row.hausdorff_gap)
            );
        }
        println!(
            "  monotone: gaps {}, volumes {}\n",
            table.gaps_monotone, table.volumes_converge
        );
    }
}
