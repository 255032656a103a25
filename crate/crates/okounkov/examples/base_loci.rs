//! Base loci of monomial series: the common vanishing set at one degree,
//! the stable locus over all degrees, and the augmented locus twisted by an
//! ample reference, cross-checked against a second ample.
//!
//! Run with: cargo run --example base_loci

use okounkov::adelic::{augmented_base_locus, limit_series};
use okounkov::instance::Instance;
use okounkov::series::{base_locus, stable_base_locus};
use std::path::PathBuf;

fn main() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances/interval.json");
    let inst = Instance::load(&path).expect("instance loads");

    for name in ["D", "Z"] {
        let d = inst.divisor(name).expect("divisor");
        let series = limit_series(d);
        let bs = base_locus(&series.space(1).unwrap()).unwrap();
        let (sb, stab) = stable_base_locus(&series, 10).unwrap();
        println!("divisor {name}:");
        println!("  Bs(W_1) = {bs}");
        println!("  SB = {sb} (stabilized at degree {})", stab.stabilized_at);
        let (n1, a1, n2, a2) = inst.ample_pair().expect("two amples");
        let (b1, rep) = augmented_base_locus(d, a1, 10).unwrap();
        let (b2, _) = augmented_base_locus(d, a2, 10).unwrap();
        println!("  B+ = {b1} with ample {n1} (stabilized at degree {})", rep.stabilized_at);
        println!("  B+ agreement with ample {n2}: {}", b1 == b2);
        println!("  SB inside B+: {}", b1.contains_set(&sb));
    }
}
