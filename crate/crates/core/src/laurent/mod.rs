//! Sparse Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! The variable names are const generic parameters, so adding a polynomial
//! in `t` to one in `x` is a type error rather than a runtime failure.
//! Exponents are `i32` and every constructor checks them against
//! [`MAX_EXPONENT`]; an exponent that would leave that range panics instead
//! of wrapping.

mod poly1;
mod poly2;

pub use poly1::LaurentPoly1;
pub use poly2::{LaurentPoly2, Monomial, Variable};

/// Largest exponent magnitude accepted anywhere in the crate (2^30).
pub const MAX_EXPONENT: i64 = 1 << 30;

#[inline]
pub(crate) fn checked_exponent(e: i64) -> i32 {
    assert!(
        e.abs() <= MAX_EXPONENT,
        "Laurent exponent {e} exceeds the supported range ±2^30"
    );
    e as i32
}

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Writes one signed term of a polynomial in display form.
///
/// `monomial` is the already rendered variable part, empty for a constant.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &BigInt,
    monomial: &str,
) -> fmt::Result {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if monomial.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        f.write_str(monomial)
    } else {
        write!(f, "{magnitude}*{monomial}")
    }
}

pub(crate) fn render_power(var: char, e: i32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

pub(crate) fn insert_term<K: Ord>(
    map: &mut std::collections::BTreeMap<K, BigInt>,
    key: K,
    coeff: BigInt,
) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// A coefficient as a JSON number when it fits in `i64`, else a decimal string.
pub(crate) struct JsonCoefficient<'a>(pub &'a BigInt);

impl serde::Serialize for JsonCoefficient<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        match self.0.to_i64() {
            Some(c) => s.serialize_i64(c),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}
