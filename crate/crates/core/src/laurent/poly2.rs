use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;

use super::poly1::forward_binops;
use super::{checked_exponent, insert_term, render_power, write_term, LaurentPoly1};

/// Selects one of the two variables of a [`LaurentPoly2`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    X,
    Y,
}

/// The unit-coefficient monomial `X^x Y^y` used as a substitution image.
/// `Monomial::ONE` is the constant 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub x: i32,
    pub y: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: i32, y: i32) -> Self {
        Self { x, y }
    }
}

/// A Laurent polynomial in the two variables `X`, `Y` over the integers.
/// Keys are `(x exponent, y exponent)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2<const X: char, const Y: char> {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl<const X: char, const Y: char> LaurentPoly2<X, Y> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, x: i32, y: i32) -> Self {
        Self::from_terms([((x, y), c)])
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((i32, i32), C)>) -> Self {
        let mut map = BTreeMap::new();
        for ((x, y), c) in terms {
            let key = (checked_exponent(x as i64), checked_exponent(y as i64));
            insert_term(&mut map, key, c.into());
        }
        Self { terms: map }
    }

    /// Embeds a polynomial in `X` alone.
    pub fn lift_x(p: &LaurentPoly1<X>) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((e, 0), c.clone())))
    }

    /// Embeds a polynomial in `Y` alone.
    pub fn lift_y(p: &LaurentPoly1<Y>) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((0, e), c.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(x, y)` exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((i32, i32), &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, x: i32, y: i32) -> BigInt {
        self.terms.get(&(x, y)).cloned().unwrap_or_default()
    }

    /// `(min, max)` exponent of the chosen variable over all terms.
    pub fn degree_range(&self, which: Variable) -> Option<(i32, i32)> {
        let pick = |&(x, y): &(i32, i32)| match which {
            Variable::X => x,
            Variable::Y => y,
        };
        let min = self.terms.keys().map(pick).min()?;
        let max = self.terms.keys().map(pick).max()?;
        Some((min, max))
    }

    /// The coefficient of `Y^k`, a polynomial in `X`.
    pub fn y_coefficient(&self, k: i32) -> LaurentPoly1<X> {
        LaurentPoly1::from_terms(
            self.terms
                .iter()
                .filter(|((_, y), _)| *y == k)
                .map(|(&(x, _), c)| (x, c.clone())),
        )
    }

    /// Sum of coefficients, the value at `X = Y = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Replaces one variable by a unit monomial, e.g. `Y ↦ Y·X^3`.
    ///
    /// This is a ring homomorphism; exponents transform linearly.
    pub fn substitute(&self, which: Variable, image: Monomial) -> Self {
        let map = |x: i32, y: i32| -> (i64, i64) {
            let (x, y) = (x as i64, y as i64);
            match which {
                Variable::X => (image.x as i64 * x, y + image.y as i64 * x),
                Variable::Y => (x + image.x as i64 * y, image.y as i64 * y),
            }
        };
        let mut terms = BTreeMap::new();
        for (&(x, y), c) in &self.terms {
            let (nx, ny) = map(x, y);
            insert_term(
                &mut terms,
                (checked_exponent(nx), checked_exponent(ny)),
                c.clone(),
            );
        }
        Self { terms }
    }

    /// Sets `Y = 1`, collecting coefficients.
    pub fn specialize_y_one(&self) -> LaurentPoly1<X> {
        LaurentPoly1::from_terms(self.terms.iter().map(|(&(x, _), c)| (x, c.clone())))
    }

    /// Sets `X = 1`, collecting coefficients.
    pub fn specialize_x_one(&self) -> LaurentPoly1<Y> {
        LaurentPoly1::from_terms(self.terms.iter().map(|(&(_, y), c)| (y, c.clone())))
    }

    pub fn shift(&self, dx: i32, dy: i32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&(x, y), c)| ((x + dx, y + dy), c.clone())),
        )
    }
}

impl<const X: char, const Y: char> fmt::Display for LaurentPoly2<X, Y> {
    /// Terms by decreasing `Y` exponent, then decreasing `X` exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|((ax, ay), _), ((bx, by), _)| (by, bx).cmp(&(ay, ax)));
        for (i, (&(x, y), c)) in keys.into_iter().enumerate() {
            let mono = match (render_power(X, x), render_power(Y, y)) {
                (a, b) if a.is_empty() => b,
                (a, b) if b.is_empty() => a,
                (a, b) => format!("{a}*{b}"),
            };
            write_term(f, i == 0, c, &mono)?;
        }
        Ok(())
    }
}

impl<const X: char, const Y: char> fmt::Debug for LaurentPoly2<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const X: char, const Y: char> AddAssign<&LaurentPoly2<X, Y>> for LaurentPoly2<X, Y> {
    fn add_assign(&mut self, rhs: &LaurentPoly2<X, Y>) {
        for (&k, c) in &rhs.terms {
            insert_term(&mut self.terms, k, c.clone());
        }
    }
}

impl<const X: char, const Y: char> SubAssign<&LaurentPoly2<X, Y>> for LaurentPoly2<X, Y> {
    fn sub_assign(&mut self, rhs: &LaurentPoly2<X, Y>) {
        for (&k, c) in &rhs.terms {
            insert_term(&mut self.terms, k, -c);
        }
    }
}

impl<const X: char, const Y: char> Neg for LaurentPoly2<X, Y> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<const X: char, const Y: char> Mul for &LaurentPoly2<X, Y> {
    type Output = LaurentPoly2<X, Y>;
    fn mul(self, rhs: &LaurentPoly2<X, Y>) -> LaurentPoly2<X, Y> {
        let mut terms = BTreeMap::new();
        for (&(ax, ay), ca) in &self.terms {
            for (&(bx, by), cb) in &rhs.terms {
                let key = (
                    checked_exponent(ax as i64 + bx as i64),
                    checked_exponent(ay as i64 + by as i64),
                );
                insert_term(&mut terms, key, ca * cb);
            }
        }
        LaurentPoly2 { terms }
    }
}

forward_binops!(LaurentPoly2<X, Y>);

impl<const X: char, const Y: char> serde::Serialize for LaurentPoly2<X, Y> {
    /// `{"vars": ["x", "y"], "terms": [[[ex, ey], c], ...]}`, ascending `(ex, ey)`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(&(x, y), c)| ([x, y], super::JsonCoefficient(c)))
            .collect();
        let mut st = s.serialize_struct("LaurentPoly2", 2)?;
        st.serialize_field("vars", &[X.to_string(), Y.to_string()])?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P2 = LaurentPoly2<'x', 'y'>;

    fn base() -> P2 {
        P2::from_terms([
            ((8, 2), 1),
            ((5, 2), -1),
            ((4, 2), 1),
            ((5, 1), 1),
            ((4, 1), -1),
            ((3, 1), 1),
            ((4, 0), 1),
            ((3, 0), -1),
            ((0, 0), 1),
        ])
    }

    #[test]
    fn twist_substitution_at_one() {
        let got = base().substitute(Variable::Y, Monomial::new(3, 1));
        let want = P2::from_terms([
            ((14, 2), 1),
            ((11, 2), -1),
            ((10, 2), 1),
            ((8, 1), 1),
            ((7, 1), -1),
            ((6, 1), 1),
            ((4, 0), 1),
            ((3, 0), -1),
            ((0, 0), 1),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn identity_substitution() {
        assert_eq!(base().substitute(Variable::Y, Monomial::new(0, 1)), base());
        assert_eq!(base().substitute(Variable::X, Monomial::new(1, 0)), base());
    }

    #[test]
    fn setting_y_to_one() {
        let p = P2::from_terms([((4, 2), 1), ((3, 1), -1), ((0, 0), 1)]);
        assert_eq!(
            p.specialize_y_one(),
            LaurentPoly1::<'x'>::from_terms([(4, 1), (3, -1), (0, 1)])
        );
        let collapsed = p.substitute(Variable::Y, Monomial::ONE);
        assert_eq!(collapsed.degree_range(Variable::Y), Some((0, 0)));
    }

    #[test]
    fn coefficient_extraction_and_display() {
        let p = base();
        assert_eq!(p.y_coefficient(2).to_string(), "x^8 - x^5 + x^4");
        assert_eq!(
            p.to_string(),
            "x^8*y^2 - x^5*y^2 + x^4*y^2 + x^5*y - x^4*y + x^3*y + x^4 - x^3 + 1"
        );
        assert_eq!(p.eval_one(), BigInt::from(3));
    }
}
