//! Flags, valuations and echelon bases built by hand: the valuation of a
//! section is the lex-minimal exponent in the flag order, products add
//! valuations, and echelonization gives one distinct leading exponent per
//! dimension regardless of the presented basis.
//!
//! Run with: cargo run --example echelon_valuations

use okounkov::rational::rat_int;
use okounkov::series::{Flag, LaurentSection, SectionSpace};

fn main() {
    let flag = Flag::standard(2);

    let f = LaurentSection::new(2, [(vec![1, 0], rat_int(1)), (vec![0, 2], rat_int(1))]);
    let g = LaurentSection::monomial(2, &[1, 0]);
    println!("v(f) = {:?}", f.valuation(&flag).unwrap());
    println!("v(g) = {:?}", g.valuation(&flag).unwrap());
    println!("v(fg) = {:?} (valuations add)", f.mul(&g).valuation(&flag).unwrap());

    // span{x + y, x - y}: both presented vectors have valuation (0,1); the
    // echelon basis separates them into leading exponents (0,1) and (1,0).
    let w = SectionSpace::span(
        1,
        2,
        vec![
            LaurentSection::new(2, [(vec![1, 0], rat_int(1)), (vec![0, 1], rat_int(1))]),
            LaurentSection::new(2, [(vec![1, 0], rat_int(1)), (vec![0, 1], rat_int(-1))]),
        ],
    )
    .unwrap();
    println!("dim = {}", w.dim());
    println!("leading exponents: {:?}", w.leading_exponents(&flag).unwrap());

    // A different flag order picks different minima.
    let swapped = Flag::with_order(2, vec![1, 0]).unwrap();
    println!(
        "leading exponents under the swapped order: {:?}",
        w.leading_exponents(&swapped).unwrap()
    );

    // The leading set only depends on the span, not on the basis.
    let shuffled = SectionSpace::span(
        1,
        2,
        vec![
            w.basis()[0].add(&w.basis()[1].scaled(&rat_int(3))),
            w.basis()[1].clone(),
        ],
    )
    .unwrap();
    assert_eq!(
        shuffled.leading_exponents(&flag).unwrap(),
        w.leading_exponents(&flag).unwrap()
    );
    println!("leading set invariant under change of basis: true");
}
