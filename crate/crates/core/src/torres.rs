//! Alexander polynomials of a twist family.
//!
//! Twisting `n` times along an unknot `c` with `lk(K, c) = w` changes the
//! meridian of `c` by `w·n` meridians of `K`, so the two-variable Alexander
//! polynomial transforms by `y ↦ y·x^{wn}`. The Torres condition
//! `Δ_{K∪c}(x, 1) = (x^w - 1)/(x - 1) · Δ_K(x)` then recovers the knot.

use crate::alexander::{FormalSemigroup, TPoly};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly1, LaurentPoly2, Monomial, Variable};

pub type XYPoly = LaurentPoly2<'x', 'y'>;

/// A two-component link `K ∪ c` and the linking number driving the twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistFamilySpec {
    /// Multivariable Alexander polynomial, `x` for `K` and `y` for `c`.
    pub base_poly: XYPoly,
    /// `lk(K, c)`; the twist parameter `n` acts as `y ↦ y·x^{winding·n}`.
    pub winding: u32,
}

impl TwistFamilySpec {
    /// `base_poly` after `n` twists.
    pub fn twisted(&self, n: u32) -> XYPoly {
        let shift =
            i32::try_from(self.winding as u64 * n as u64).expect("twist exponent fits in i32");
        self.base_poly
            .substitute(Variable::Y, Monomial::new(shift, 1))
    }
}

/// The link `K_0 ∪ c` whose twists produce `K_n`:
/// `(x^8 - x^5 + x^4) y^2 + (x^5 - x^4 + x^3) y + x^4 - x^3 + 1`, `lk = 3`.
pub fn paper_base_link() -> TwistFamilySpec {
    TwistFamilySpec {
        base_poly: XYPoly::from_terms([
            ((8, 2), 1),
            ((5, 2), -1),
            ((4, 2), 1),
            ((5, 1), 1),
            ((4, 1), -1),
            ((3, 1), 1),
            ((4, 0), 1),
            ((3, 0), -1),
            ((0, 0), 1),
        ]),
        winding: 3,
    }
}

/// Normalized `Δ_{K_n}(t)` through substitution and the Torres condition.
pub fn twist_alexander(spec: &TwistFamilySpec, n: u32) -> Result<TPoly> {
    let at_y_one: LaurentPoly1<'x'> = spec.twisted(n).specialize_y_one();
    let x_minus_one = LaurentPoly1::<'x'>::var() - LaurentPoly1::one();
    let cyclotomic = LaurentPoly1::<'x'>::monomial(1, spec.winding as i32) - LaurentPoly1::one();
    (&at_y_one * &x_minus_one)
        .exact_div(&cyclotomic)?
        .rename::<'t'>()
        .normalize_alexander()
}

/// Term-by-term evaluation of the closed form, valid for `n ≥ 1`:
///
/// ```text
/// (t^{6n+6} - t^{6n+5}) + Σ_{i<n} (t^{3n+3i+5} - t^{3n+3i+4}) + t^{3n+3}
///     - Σ_{i<n} (t^{3i+5} - t^{3i+4}) - t + 1
/// ```
pub fn closed_form_kn_alexander(n: u32) -> Result<TPoly> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange {
            what: "closed-form Kn Alexander polynomial",
            value: 0,
        });
    }
    let n = n as i32;
    let mut terms = vec![
        (6 * n + 6, 1),
        (6 * n + 5, -1),
        (3 * n + 3, 1),
        (1, -1),
        (0, 1),
    ];
    for i in 0..n {
        terms.push((3 * n + 3 * i + 5, 1));
        terms.push((3 * n + 3 * i + 4, -1));
        terms.push((3 * i + 5, -1));
        terms.push((3 * i + 4, 1));
    }
    Ok(TPoly::from_terms(terms))
}

/// The formal semigroup of `K_n`, `n ≥ 1`, assembled from its runs:
///
/// * `0` and `4, 7, ..., 3n+1`,
/// * `3n+3`,
/// * the pairs `{3n+5, 3n+6}, {3n+8, 3n+9}, ..., {6n-1, 6n}`,
/// * `6n+2, 6n+3, 6n+4`,
///
/// with everything from `6n+6` on. For `n = 1` the pair run is empty.
pub fn closed_form_kn_semigroup(n: u32) -> Result<FormalSemigroup> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange {
            what: "closed-form Kn semigroup",
            value: 0,
        });
    }
    let n = n as u64;
    let mut members = vec![0];
    members.extend((1..=n).map(|k| 3 * k + 1));
    members.push(3 * n + 3);
    members.extend((1..n).flat_map(|k| [3 * n + 3 * k + 2, 3 * n + 3 * k + 3]));
    members.extend([6 * n + 2, 6 * n + 3, 6 * n + 4]);
    Ok(FormalSemigroup::new(members, 6 * n + 6))
}
