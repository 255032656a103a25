//! Hausdorff convergence of the stage bodies to the limit body, with exact
//! per-stage gaps and volumes. On the square instance both shrink
//! geometrically: gap 2^-j, volume (1 - 2^-j)^2.
//!
//! Run with: cargo run --example stage_convergence

use okounkov::global::model_convergence;
use okounkov::instance::Instance;
use okounkov::rational::fraction_string;
use std::path::PathBuf;

fn main() {
    for name in ["interval", "square2d"] {
        let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("instances/{name}.json"));
        let inst = Instance::load(&path).expect("instance loads");
        let d = inst.divisor("D").expect("divisor D");
        let table = model_convergence(d, 8).expect("convergence table");
        println!("{name}: limit volume {}", fraction_string(&table.limit_body_volume));
        println!("  stage |        q_j | Hausdorff gap | body volume");
        for row in &table.rows {
            println!(
                "  {:5} | {:>10} | {:>13} | {}",
                row.stage,
                fraction_string(&row.tolerance),
                fraction_string(&row.hausdorff_gap),
                fraction_string(&row.body_volume)
            );
        }
        println!(
            "  gaps monotone: {}, volumes monotone: {} ({})",
            table.gaps_monotone, table.volumes_monotone, table.metric_note
        );
        println!();
    }
}
