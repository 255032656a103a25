//! Exact rational scalars and the few numeric utilities the rest of the
//! crate leans on: canonical rendering, strict JSON (de)serialization as
//! `[numerator, denominator]` pairs, and exact comparison of sums of d-th
//! roots (used by the log-concavity decision).
//!
//! No floating point leaves this module except through [`decimal_string`],
//! which is rendering only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

pub type Rat = BigRational;
pub type Int = BigInt;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact integer power with rational base and signed exponent.
pub fn rat_pow(base: &Rat, exp: i32) -> Rat {
    base.pow(exp)
}

/// Largest integer `<= r`.
pub fn floor_int(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Smallest integer `>= r`.
pub fn ceil_int(r: &Rat) -> Int {
    r.ceil().to_integer()
}

/// Canonical textual form: reduced fraction, sign on the numerator,
/// denominator omitted when 1.
pub fn fraction_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering for reports. Lossy by design; never used in decisions.
pub fn decimal_string(r: &Rat) -> String {
    match r.to_f64() {
        Some(v) => format!("{v:.6}"),
        None => "overflow".to_string(),
    }
}

/// `r^(1/d)` when it is rational, i.e. when numerator and denominator of the
/// reduced fraction are both perfect d-th powers.
pub fn rational_nth_root(r: &Rat, d: u32) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if d == 0 {
        return None;
    }
    let rn = r.numer().nth_root(d);
    let rd = r.denom().nth_root(d);
    if &num_traits::pow(rn.clone(), d as usize) == r.numer()
        && &num_traits::pow(rd.clone(), d as usize) == r.denom()
    {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Floor of `(r)^(1/d) * 2^shift` as an integer, for nonnegative `r`.
fn scaled_root_floor(r: &Rat, d: u32, shift: usize) -> Int {
    // floor( (numer * 2^(d*shift) / denom)^(1/d) )
    let scaled: Int = (r.numer() << (d as usize * shift)) / r.denom();
    scaled.nth_root(d)
}

/// Exactly compare `a^(1/d) + b^(1/d)` with `c^(1/d)` for nonnegative
/// rationals. Used to decide Brunn-Minkowski style inequalities without
/// floating-point roots: equality is recognized algebraically (it forces the
/// root of `b/a` to be rational), and strict comparisons terminate by
/// doubling the binary precision of integer floor roots.
pub fn cmp_root_sum(a: &Rat, b: &Rat, c: &Rat, d: u32) -> Ordering {
    assert!(d >= 1, "root order must be positive");
    assert!(
        !a.is_negative() && !b.is_negative() && !c.is_negative(),
        "root comparison needs nonnegative inputs"
    );
    if d == 1 {
        return (a + b).cmp(c);
    }
    if a.is_zero() {
        return cmp_root(b, c, d);
    }
    if b.is_zero() {
        return cmp_root(a, c, d);
    }
    if c.is_zero() {
        return Ordering::Greater;
    }
    // Equality test: a^(1/d) + b^(1/d) = c^(1/d) implies (b/a)^(1/d) and
    // (c/a)^(1/d) are rational (conjugation argument over Q), so it is
    // decidable by exact root extraction.
    if let Some(t) = rational_nth_root(&(b / a), d) {
        let lhs_scaled = rat_pow(&(Rat::one() + t), d as i32) * a; // (a^(1/d)+b^(1/d))^d
        if lhs_scaled == *c {
            return Ordering::Equal;
        }
    }
    let mut shift = 16usize;
    loop {
        let ra = scaled_root_floor(a, d, shift);
        let rb = scaled_root_floor(b, d, shift);
        let rc = scaled_root_floor(c, d, shift);
        // ra <= 2^s a^(1/d) < ra+1, same for b, c.
        if &ra + &rb >= &rc + 1u32 {
            return Ordering::Greater;
        }
        if &ra + &rb + 2u32 <= rc {
            return Ordering::Less;
        }
        shift *= 2;
        assert!(shift <= 1 << 20, "root comparison failed to separate");
    }
}

/// Exactly compare `a^(1/d)` with `c^(1/d)` for nonnegative rationals.
pub fn cmp_root(a: &Rat, c: &Rat, d: u32) -> Ordering {
    assert!(d >= 1);
    a.cmp(c)
}

/// Parse a strict integer out of a JSON number; decimal or exponent
/// literals are rejected so instance files stay exact end to end.
pub fn int_from_json_number(n: &serde_json::Number) -> Result<Int, String> {
    let s = n.to_string();
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(format!("decimal literal `{s}` rejected: use [num, den] integer pairs"));
    }
    s.parse::<Int>().map_err(|e| format!("bad integer `{s}`: {e}"))
}

/// Strict JSON encoding of rationals as two-element `[num, den]` arrays.
pub mod jsonrat {
    use super::*;
    use serde::de::Error as DeError;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn int_to_number(i: &Int) -> serde_json::Number {
        use std::str::FromStr;
        serde_json::Number::from_str(&i.to_string()).expect("integer literal")
    }

    pub fn to_value(r: &Rat) -> serde_json::Value {
        serde_json::Value::Array(vec![
            serde_json::Value::Number(int_to_number(r.numer())),
            serde_json::Value::Number(int_to_number(r.denom())),
        ])
    }

    pub fn from_value(v: &serde_json::Value) -> Result<Rat, String> {
        let arr = v.as_array().ok_or("rational must be a [num, den] pair")?;
        if arr.len() != 2 {
            return Err(format!("rational pair must have 2 entries, got {}", arr.len()));
        }
        let num = match &arr[0] {
            serde_json::Value::Number(n) => int_from_json_number(n)?,
            _ => return Err("rational numerator must be an integer".into()),
        };
        let den = match &arr[1] {
            serde_json::Value::Number(n) => int_from_json_number(n)?,
            _ => return Err("rational denominator must be an integer".into()),
        };
        if den.is_zero() {
            return Err("rational denominator must be nonzero".into());
        }
        Ok(Rat::new(num, den))
    }

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&int_to_number(r.numer()))?;
        seq.serialize_element(&int_to_number(r.denom()))?;
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        from_value(&v).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::*;
        pub fn serialize<S: Serializer>(rs: &[Rat], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(rs.len()))?;
            for r in rs {
                seq.serialize_element(&super::to_value(r))?;
            }
            seq.end()
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
            let v = serde_json::Value::deserialize(d)?;
            let arr = v.as_array().ok_or_else(|| D::Error::custom("expected array of rationals"))?;
            arr.iter().map(|x| super::from_value(x).map_err(D::Error::custom)).collect()
        }
    }
}

/// Normalize an integer vector to a primitive one pointing the same way.
/// Returns `None` for the zero vector.
pub fn primitive_direction(v: &[Int]) -> Option<Vec<Int>> {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

/// Clear denominators of a rational vector into a primitive integer vector
/// with the same direction. `None` for the zero vector.
pub fn primitive_from_rational(v: &[Rat]) -> Option<Vec<Int>> {
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive_direction(&ints)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_rendering_is_canonical() {
        assert_eq!(fraction_string(&rat(2, 4)), "1/2");
        assert_eq!(fraction_string(&rat(-2, 4)), "-1/2");
        assert_eq!(fraction_string(&rat(2, -4)), "-1/2");
        assert_eq!(fraction_string(&rat(6, 3)), "2");
        assert_eq!(fraction_string(&rat(0, 5)), "0");
    }

    #[test]
    fn rational_roots_detected_exactly() {
        assert_eq!(rational_nth_root(&rat(8, 27), 3), Some(rat(2, 3)));
        assert_eq!(rational_nth_root(&rat(4, 9), 2), Some(rat(2, 3)));
        assert_eq!(rational_nth_root(&rat(2, 1), 2), None);
        assert_eq!(rational_nth_root(&rat(8, 26), 3), None);
    }

    #[test]
    fn root_sum_comparison_strict_cases() {
        // sqrt(1) + sqrt(1) vs sqrt(4): equal
        assert_eq!(cmp_root_sum(&rat_int(1), &rat_int(1), &rat_int(4), 2), Ordering::Equal);
        // sqrt(1) + sqrt(2) vs sqrt(6): 1 + 1.414… < 2.449…
        assert_eq!(cmp_root_sum(&rat_int(1), &rat_int(2), &rat_int(6), 2), Ordering::Less);
        // sqrt(2) + sqrt(2) vs sqrt(7): 2.828… > 2.645…
        assert_eq!(cmp_root_sum(&rat_int(2), &rat_int(2), &rat_int(7), 2), Ordering::Greater);
        // cbrt(1) + cbrt(8) = 3 = cbrt(27)
        assert_eq!(cmp_root_sum(&rat_int(1), &rat_int(8), &rat_int(27), 3), Ordering::Equal);
        // cbrt(2) + cbrt(2) vs cbrt(16) = 2 cbrt(2): equal
        assert_eq!(cmp_root_sum(&rat_int(2), &rat_int(2), &rat_int(16), 3), Ordering::Equal);
        // cbrt(2) + cbrt(3) vs cbrt(30): 1.2599+1.4422=2.7021 < 3.1072
        assert_eq!(cmp_root_sum(&rat_int(2), &rat_int(3), &rat_int(30), 3), Ordering::Less);
        // degenerate summand
        assert_eq!(cmp_root_sum(&rat_int(0), &rat(1, 8), &rat(1, 8), 3), Ordering::Equal);
    }

    #[test]
    fn json_rationals_round_trip_and_reject_decimals() {
        let v = jsonrat::to_value(&rat(-3, 6));
        assert_eq!(v.to_string(), "[-1,2]");
        assert_eq!(jsonrat::from_value(&v).unwrap(), rat(-1, 2));
        let bad: serde_json::Value = serde_json::from_str("[0.5, 1]").unwrap();
        assert!(jsonrat::from_value(&bad).is_err());
        let bad2: serde_json::Value = serde_json::from_str("[1, 0]").unwrap();
        assert!(jsonrat::from_value(&bad2).is_err());
    }

    #[test]
    fn primitive_directions() {
        let v = vec![Int::from(4), Int::from(-6)];
        assert_eq!(primitive_direction(&v).unwrap(), vec![Int::from(2), Int::from(-3)]);
        assert_eq!(primitive_direction(&[Int::zero(), Int::zero()]), None);
        let r = vec![rat(1, 2), rat(-1, 3)];
        assert_eq!(
            primitive_from_rational(&r).unwrap(),
            vec![Int::from(3), Int::from(-2)]
        );
    }
}
