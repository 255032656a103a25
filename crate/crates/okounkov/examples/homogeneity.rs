//! Homogeneity of the bodies: the t-fold series, computed from its own
//! lattice slices, reproduces the t-scaled body exactly on toric instances.
//!
//! Run with: cargo run --example homogeneity

use okounkov::adelic::limit_series;
use okounkov::body::homogeneity_check;
use okounkov::instance::Instance;
use std::path::PathBuf;

fn main() {
    for name in ["interval", "p2_o1", "cube3"] {
        let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("instances/{name}.json"));
        let inst = Instance::load(&path).expect("instance loads");
        let d = inst.divisor("D").expect("divisor D");
        let flag = inst.flag(None).unwrap();
        let series = limit_series(d);
        for t in [2usize, 3, 5] {
            let rep = homogeneity_check(&series, flag, t, 10).unwrap();
            println!(
                "{name}: t = {t}: exact equality {:?} (t-fold truncation at degree {})",
                rep.exact_equal, rep.truncation
            );
        }
    }
}
