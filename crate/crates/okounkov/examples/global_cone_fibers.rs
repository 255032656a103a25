//! The two-parameter global semigroup and cone of a divisor pair. Fibers of
//! the cone over big rational directions reproduce the Okounkov bodies of
//! the combinations exactly; non-big directions are skipped by policy.
//!
//! Run with: cargo run --example global_cone_fibers

use okounkov::global::{build_global, fiber_check, interior_contains};
use okounkov::instance::Instance;
use okounkov::rational::{rat, rat_int};
use std::path::PathBuf;

fn main() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances/interval.json");
    let inst = Instance::load(&path).expect("instance loads");
    let d = inst.divisor("D").expect("divisor D");
    let e = inst.divisor("E").expect("divisor E");
    let flag = inst.flag(None).expect("default flag");

    let (semigroup, cone) = build_global(d, e, flag, 2, 3).expect("global build");
    println!(
        "global semigroup of ({}, {}): {} points over grid |a| <= {} and degree <= {}",
        semigroup.pair().0,
        semigroup.pair().1,
        semigroup.num_points(),
        semigroup.amax(),
        semigroup.degree_bound()
    );
    println!("grid heights with sections: {:?}", semigroup.support_heights());

    for (a1, a2) in [(1i64, 1i64), (2, 1), (1, -1)] {
        let report = fiber_check(d, e, (rat_int(a1), rat_int(a2)), flag, &cone, 3).unwrap();
        println!("{report}");
    }

    for a in [
        [rat_int(1), rat_int(1)],
        [rat_int(1), rat_int(-1)],
        [rat(1, 2), rat(1, 3)],
    ] {
        println!(
            "direction ({}, {}) interior to the support: {}",
            okounkov::rational::fraction_string(&a[0]),
            okounkov::rational::fraction_string(&a[1]),
            interior_contains(&cone.support, &a).unwrap()
        );
    }
}
