use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{checked_exponent, insert_term, render_power, write_term};
use crate::error::{Error, Result};

/// A Laurent polynomial in the single variable `X` over the integers.
///
/// Stored as a map from exponent to nonzero coefficient; the zero
/// polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly1<const X: char> {
    terms: BTreeMap<i32, BigInt>,
}

impl<const X: char> LaurentPoly1<X> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, checked_exponent(e as i64), c.into());
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            insert_term(&mut map, checked_exponent(e as i64), c.into());
        }
        Self { terms: map }
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `X^(low + k)`.
    pub fn from_coefficients(low: i32, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (low + k as i32, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `max_degree - min_degree`, or `None` for zero.
    pub fn span(&self) -> Option<i32> {
        Some(self.max_degree()? - self.min_degree()?)
    }

    /// Value at `X = 1`, i.e. the sum of coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (checked_exponent(e as i64 + k as i64), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, a)| (e, a * c)).collect(),
        }
    }

    /// `p(X^k)`; `k = -1` gives the mirror `p(1/X)`.
    pub fn substitute_power(&self, k: i32) -> Self {
        if k == 0 {
            return Self::constant(self.eval_one());
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (checked_exponent(e as i64 * k as i64), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The same coefficients read in another variable.
    pub fn rename<const Y: char>(&self) -> LaurentPoly1<Y> {
        LaurentPoly1 {
            terms: self.terms.clone(),
        }
    }

    /// Exact quotient `self / denominator`.
    ///
    /// Fails with [`Error::InexactDivision`] when the remainder is nonzero
    /// or when an intermediate integer quotient is not exact.
    pub fn exact_div(&self, denominator: &Self) -> Result<Self> {
        let (Some(den_lo), Some(den_hi)) = (denominator.min_degree(), denominator.max_degree())
        else {
            return Err(Error::DivisionByZero);
        };
        let (Some(num_lo), Some(num_hi)) = (self.min_degree(), self.max_degree()) else {
            return Ok(Self::zero());
        };
        let num_len = (num_hi - num_lo) as usize + 1;
        let den_len = (den_hi - den_lo) as usize + 1;
        if num_len < den_len {
            return Err(Error::InexactDivision);
        }
        let mut rem: Vec<BigInt> = (num_lo..=num_hi).map(|e| self.coeff(e)).collect();
        let den: Vec<BigInt> = (den_lo..=den_hi).map(|e| denominator.coeff(e)).collect();
        let lead = &den[den_len - 1];
        let mut quot = vec![BigInt::zero(); num_len - den_len + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + den_len - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let q = top / lead;
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        let shift = num_lo - den_lo;
        Ok(Self::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(k, c)| (shift + k as i32, c)),
        ))
    }

    /// Removes the unit ambiguity `±X^k` of an Alexander polynomial.
    ///
    /// The result has minimum exponent 0. Its sign makes the value at 1
    /// positive; when that value is 0 the constant term is made positive.
    pub fn normalize_alexander(&self) -> Result<Self> {
        let lo = self.min_degree().ok_or(Error::ZeroPolynomial)?;
        let shifted = self.shift(-lo);
        let at_one = shifted.eval_one();
        let flip = if at_one.is_zero() {
            shifted.coeff(0).is_negative()
        } else {
            at_one.is_negative()
        };
        Ok(if flip { -shifted } else { shifted })
    }

    /// `p(X) == X^d p(1/X)` for `d` the degree span, after moving the
    /// minimum exponent to 0.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => self
                .terms
                .iter()
                .all(|(&e, c)| self.terms.get(&(hi + lo - e)) == Some(c)),
            _ => true,
        }
    }
}

impl<const X: char> fmt::Display for LaurentPoly1<X> {
    /// Decreasing exponents, caret powers, ` + ` / ` - ` separators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, i == 0, c, &render_power(X, e))?;
        }
        Ok(())
    }
}

impl<const X: char> fmt::Debug for LaurentPoly1<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const X: char> From<i64> for LaurentPoly1<X> {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<const X: char> AddAssign<&LaurentPoly1<X>> for LaurentPoly1<X> {
    fn add_assign(&mut self, rhs: &LaurentPoly1<X>) {
        for (&e, c) in &rhs.terms {
            insert_term(&mut self.terms, e, c.clone());
        }
    }
}

impl<const X: char> SubAssign<&LaurentPoly1<X>> for LaurentPoly1<X> {
    fn sub_assign(&mut self, rhs: &LaurentPoly1<X>) {
        for (&e, c) in &rhs.terms {
            insert_term(&mut self.terms, e, -c);
        }
    }
}

impl<const X: char> Neg for LaurentPoly1<X> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<const X: char> Neg for &LaurentPoly1<X> {
    type Output = LaurentPoly1<X>;
    fn neg(self) -> LaurentPoly1<X> {
        -self.clone()
    }
}

impl<const X: char> Mul for &LaurentPoly1<X> {
    type Output = LaurentPoly1<X>;
    fn mul(self, rhs: &LaurentPoly1<X>) -> LaurentPoly1<X> {
        let mut terms = BTreeMap::new();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                insert_term(&mut terms, checked_exponent(a as i64 + b as i64), ca * cb);
            }
        }
        LaurentPoly1 { terms }
    }
}

macro_rules! forward_binops {
    ($ty:ident < $($g:ident),+ >) => {
        impl<$(const $g: char),+> Add for &$ty<$($g),+> {
            type Output = $ty<$($g),+>;
            fn add(self, rhs: Self) -> Self::Output {
                let mut out = self.clone();
                out += rhs;
                out
            }
        }
        impl<$(const $g: char),+> Sub for &$ty<$($g),+> {
            type Output = $ty<$($g),+>;
            fn sub(self, rhs: Self) -> Self::Output {
                let mut out = self.clone();
                out -= rhs;
                out
            }
        }
        impl<$(const $g: char),+> Add for $ty<$($g),+> {
            type Output = Self;
            fn add(mut self, rhs: Self) -> Self {
                self += &rhs;
                self
            }
        }
        impl<$(const $g: char),+> Sub for $ty<$($g),+> {
            type Output = Self;
            fn sub(mut self, rhs: Self) -> Self {
                self -= &rhs;
                self
            }
        }
        impl<$(const $g: char),+> Mul for $ty<$($g),+> {
            type Output = Self;
            fn mul(self, rhs: Self) -> Self {
                &self * &rhs
            }
        }
        impl<$(const $g: char),+> AddAssign for $ty<$($g),+> {
            fn add_assign(&mut self, rhs: Self) {
                *self += &rhs;
            }
        }
        impl<$(const $g: char),+> SubAssign for $ty<$($g),+> {
            fn sub_assign(&mut self, rhs: Self) {
                *self -= &rhs;
            }
        }
        impl<$(const $g: char),+> std::iter::Sum for $ty<$($g),+> {
            fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
                iter.fold(Self::zero(), |acc, p| acc + p)
            }
        }
    };
}
pub(crate) use forward_binops;

forward_binops!(LaurentPoly1<X>);

impl<const X: char> serde::Serialize for LaurentPoly1<X> {
    /// `{"vars": ["t"], "terms": [[[e], c], ...]}`, ascending exponents.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(&e, c)| ([e], super::JsonCoefficient(c)))
            .collect();
        let mut st = s.serialize_struct("LaurentPoly1", 2)?;
        st.serialize_field("vars", &[X.to_string()])?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly1<'t'>;

    fn t() -> P {
        P::var()
    }

    #[test]
    fn difference_of_squares() {
        let p = &(t() - P::one()) * &(t() + P::one());
        assert_eq!(p, P::from_terms([(2, 1), (0, -1)]));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = P::from_terms([(4, 1), (3, -1), (0, 1)]);
        let b = P::from_terms([(3, 1), (4, -1)]);
        let s = a + b;
        assert_eq!(s, P::one());
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn telescoping_product() {
        let sum = P::one() + P::monomial(1, 3);
        assert_eq!(
            &(t() - P::one()) * &sum,
            P::from_terms([(4, 1), (3, -1), (1, 1), (0, -1)])
        );
    }

    #[test]
    fn cyclotomic_quotient() {
        let q = P::from_terms([(3, 1), (0, -1)])
            .exact_div(&(t() - P::one()))
            .unwrap();
        assert_eq!(q, P::from_terms([(2, 1), (1, 1), (0, 1)]));
    }

    #[test]
    fn division_recovers_k1_alexander() {
        let num = P::from_terms([
            (14, 1),
            (11, -1),
            (10, 1),
            (8, 1),
            (7, -1),
            (6, 1),
            (4, 1),
            (3, -1),
            (0, 1),
        ]);
        let num = &num * &(t() - P::one());
        let q = num.exact_div(&P::from_terms([(3, 1), (0, -1)])).unwrap();
        assert_eq!(
            q.to_string(),
            "t^12 - t^11 + t^8 - t^7 + t^6 - t^5 + t^4 - t + 1"
        );
    }

    #[test]
    fn inexact_division_is_reported() {
        let num = P::from_terms([(2, 1), (0, 1)]);
        assert_eq!(
            num.exact_div(&(t() - P::one())),
            Err(Error::InexactDivision)
        );
        assert_eq!(num.exact_div(&P::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            P::one().exact_div(&P::constant(2)),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn laurent_division_tracks_shift() {
        let den = P::from_terms([(-1, 1), (0, 1)]);
        let q = P::from_terms([(5, 3), (-2, -1)]);
        assert_eq!((&q * &den).exact_div(&den).unwrap(), q);
    }

    #[test]
    fn normalization_examples() {
        let p = P::from_terms([(6, 1), (5, -1), (3, 1), (1, -1), (0, 1)]);
        assert_eq!((-p.shift(-2)).normalize_alexander().unwrap(), p);
        let balanced = P::from_terms([(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(
            balanced.normalize_alexander().unwrap().to_string(),
            "t^2 - t + 1"
        );
        assert_eq!(
            P::constant(-3).normalize_alexander().unwrap(),
            P::constant(3)
        );
        assert_eq!(P::zero().normalize_alexander(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn value_at_one_wins_over_constant_sign() {
        // 6_1: -2t^2 + 5t - 2 has value 1 at t = 1.
        let p = P::from_terms([(2, 2), (1, -5), (0, 2)]);
        assert_eq!(
            p.normalize_alexander().unwrap(),
            P::from_terms([(2, -2), (1, 5), (0, -2)])
        );
    }

    #[test]
    fn display() {
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(
            P::from_terms([(-2, 3), (0, -1), (1, -2)]).to_string(),
            "-2*t - 1 + 3*t^-2"
        );
        assert_eq!(P::constant(-1).to_string(), "-1");
    }

    #[test]
    #[should_panic(expected = "exceeds the supported range")]
    fn exponent_guard() {
        let _ = P::monomial(1, 1 << 30).shift(1);
    }

    #[test]
    fn palindromes() {
        assert!(P::from_terms([(2, 1), (1, -1), (0, 1)]).is_palindromic());
        assert!(!P::from_terms([(2, 1), (0, -1)]).is_palindromic());
    }
}
