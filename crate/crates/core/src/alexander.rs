//! Alexander polynomials of braid closures through the reduced Burau
//! representation, and the formal semigroup read off from them.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly1;

pub type TPoly = LaurentPoly1<'t'>;

/// Square matrix over `Z[t, t^-1]`, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BurauMatrix {
    size: usize,
    entries: Vec<TPoly>,
}

impl BurauMatrix {
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![TPoly::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = TPoly::one();
        }
        Self { size, entries }
    }

    pub fn from_rows(rows: Vec<Vec<TPoly>>) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "matrix must be square"
        );
        Self {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &TPoly {
        &self.entries[row * self.size + col]
    }

    fn rows(&self) -> Vec<Vec<TPoly>> {
        self.entries
            .chunks(self.size.max(1))
            .map(<[TPoly]>::to_vec)
            .collect()
    }

    /// Right multiplication by the reduced Burau image of one letter.
    ///
    /// The image of `σ_i` differs from the identity only in row `i`, which
    /// reads `(t, -t, 1)` in columns `i-1, i, i+1` (1-based, truncated at
    /// the borders). The inverse has `(1, -t^-1, t^-1)` there instead.
    fn apply_letter(&mut self, letter: i32) {
        let n = self.size;
        let r = letter.unsigned_abs() as usize - 1;
        let (left, diag, right) = if letter > 0 {
            (TPoly::var(), TPoly::monomial(-1, 1), TPoly::one())
        } else {
            (
                TPoly::one(),
                TPoly::monomial(-1, -1),
                TPoly::monomial(1, -1),
            )
        };
        for row in 0..n {
            let pivot = self.entries[row * n + r].clone();
            if pivot.is_zero() {
                continue;
            }
            if r > 0 {
                self.entries[row * n + r - 1] += &(&pivot * &left);
            }
            if r + 1 < n {
                self.entries[row * n + r + 1] += &(&pivot * &right);
            }
            self.entries[row * n + r] = &pivot * &diag;
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut entries = vec![TPoly::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = TPoly::zero();
                for k in 0..n {
                    acc += &(self.get(i, k) * other.get(k, j));
                }
                entries[i * n + j] = acc;
            }
        }
        Self { size: n, entries }
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.size {
            out.entries[i * self.size + i] -= &TPoly::one();
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each elimination step divides exactly by the previous pivot, so all
    /// intermediate entries stay in `Z[t, t^-1]`.
    pub fn determinant(&self) -> TPoly {
        let m = self.size;
        if m == 0 {
            return TPoly::one();
        }
        let mut a = self.rows();
        let mut negate = false;
        let mut prev = TPoly::one();
        for k in 0..m - 1 {
            if a[k][k].is_zero() {
                match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return TPoly::zero(),
                }
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    let cross = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = cross
                        .exact_div(&prev)
                        .expect("Bareiss step divides exactly");
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[m - 1][m - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

/// Product of the reduced Burau images of the letters, in word order.
pub fn reduced_burau(word: &BraidWord) -> BurauMatrix {
    let mut m = BurauMatrix::identity(word.strands() - 1);
    for &l in word.letters() {
        m.apply_letter(l);
    }
    m
}

/// Normalized Alexander polynomial of a knot closure.
///
/// `det(ρ(β) - I) = ±t^k (1 + t + ... + t^{n-1}) Δ(t)`, so the determinant is
/// multiplied by `1 - t` and divided exactly by `1 - t^n`.
pub fn alexander_poly(word: &BraidWord) -> Result<TPoly> {
    word.require_knot()?;
    let det = reduced_burau(word).minus_identity().determinant();
    let one_minus_t = TPoly::one() - TPoly::var();
    let cyclotomic = TPoly::one() - TPoly::monomial(1, word.strands() as i32);
    (&det * &one_minus_t)
        .exact_div(&cyclotomic)?
        .normalize_alexander()
}

/// The set `S ⊂ Z≥0` with `Δ(t)/(1-t) = Σ_{s∈S} t^s`.
///
/// Everything from `threshold` on is a member; below it, exactly the
/// elements of `finite_part`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FormalSemigroup {
    pub finite_part: Vec<u64>,
    pub threshold: u64,
}

impl FormalSemigroup {
    pub fn new(mut finite_part: Vec<u64>, threshold: u64) -> Self {
        finite_part.sort_unstable();
        finite_part.dedup();
        assert!(
            finite_part.last().is_none_or(|&m| m < threshold),
            "finite part must lie below the threshold"
        );
        Self {
            finite_part,
            threshold,
        }
    }

    pub fn contains(&self, s: u64) -> bool {
        s >= self.threshold || self.finite_part.binary_search(&s).is_ok()
    }

    /// Nonnegative integers missing from the set.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.threshold).filter(|&s| !self.contains(s)).collect()
    }

    /// A pair `a <= b` of members whose sum is not a member, preferring
    /// the smallest sum, then the smallest `a`.
    ///
    /// Only pairs from the finite part need checking: any sum involving a
    /// tail element is at least `threshold`.
    pub fn addition_witness(&self) -> Option<(u64, u64)> {
        let mut best: Option<(u64, u64)> = None;
        for (i, &a) in self.finite_part.iter().enumerate() {
            for &b in &self.finite_part[i..] {
                if !self.contains(a + b) && best.is_none_or(|(x, y)| a + b < x + y) {
                    best = Some((a, b));
                }
            }
        }
        best
    }

    pub fn is_closed_under_addition(&self) -> bool {
        self.addition_witness().is_none()
    }
}

/// Reads the formal semigroup off an Alexander polynomial.
///
/// The coefficients of `Δ(t)/(1-t)` are the prefix sums of Δ's coefficient
/// sequence; for an L-space knot they are all 0 or 1 and stabilize at 1
/// from `t^{2g}` on.
pub fn formal_semigroup(delta: &TPoly) -> Result<FormalSemigroup> {
    let delta = delta.normalize_alexander()?;
    let degree = delta.max_degree().expect("nonzero after normalization");
    if degree % 2 != 0 {
        return Err(Error::OddDegree {
            degree: degree as i64,
        });
    }
    let mut running = BigInt::zero();
    let mut members = Vec::new();
    for s in 0..degree {
        running += delta.coeff(s);
        if running.is_one() {
            members.push(s as u64);
        } else if !running.is_zero() {
            return Err(Error::NotLSpaceForm {
                exponent: s as i64,
                coefficient: running.to_string(),
            });
        }
    }
    let total = delta.eval_one();
    if !total.is_one() {
        return Err(Error::NotLSpaceForm {
            exponent: degree as i64,
            coefficient: total.to_string(),
        });
    }
    Ok(FormalSemigroup::new(members, degree as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{family_word, parse_braid, Family};

    fn word(s: &str) -> BraidWord {
        parse_braid(s, None).unwrap()
    }

    fn laplace(m: &BurauMatrix) -> TPoly {
        fn rec(rows: &[Vec<TPoly>]) -> TPoly {
            if rows.is_empty() {
                return TPoly::one();
            }
            let mut acc = TPoly::zero();
            for (j, entry) in rows[0].iter().enumerate() {
                let minor: Vec<Vec<TPoly>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = entry * &rec(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
        rec(&m.rows())
    }

    #[test]
    fn burau_small_cases() {
        assert_eq!(
            reduced_burau(&BraidWord::identity(4).unwrap()),
            BurauMatrix::identity(3)
        );
        let s1 = reduced_burau(&word("[1]"));
        assert_eq!(
            s1,
            BurauMatrix::from_rows(vec![vec![TPoly::monomial(-1, 1)]])
        );
        assert_eq!(
            reduced_burau(&word("[1,1,1]")),
            BurauMatrix::from_rows(vec![vec![TPoly::monomial(-1, 3)]])
        );
    }

    #[test]
    fn burau_letters_invert_and_braid() {
        for n in 3..=5 {
            for i in 1..n as i32 {
                let w = BraidWord::new(n, vec![i, -i]).unwrap();
                assert_eq!(reduced_burau(&w), BurauMatrix::identity(n - 1));
                let w = BraidWord::new(n, vec![-i, i]).unwrap();
                assert_eq!(reduced_burau(&w), BurauMatrix::identity(n - 1));
            }
            for i in 1..n as i32 - 1 {
                let lhs = BraidWord::new(n, vec![i, i + 1, i]).unwrap();
                let rhs = BraidWord::new(n, vec![i + 1, i, i + 1]).unwrap();
                assert_eq!(reduced_burau(&lhs), reduced_burau(&rhs));
            }
        }
    }

    #[test]
    fn letter_update_matches_matrix_product() {
        let a = reduced_burau(&word("[1,-2,3]"));
        let b = reduced_burau(&word("[2,2,-1,3]"));
        assert_eq!(a.mul(&b), reduced_burau(&word("[1,-2,3,2,2,-1,3]")));
    }

    #[test]
    fn bareiss_agrees_with_laplace() {
        for s in [
            "[1,2,3,1,2]",
            "[3,2,2,1,3,2,2,3,2]",
            "[-1,2,-3,4,1,1]",
            "[2,2,2,2]",
            "[1,3]",
        ] {
            let m = reduced_burau(&word(s)).minus_identity();
            assert_eq!(m.determinant(), laplace(&m), "{s}");
        }
        let singular = BurauMatrix::from_rows(vec![
            vec![TPoly::zero(), TPoly::one()],
            vec![TPoly::zero(), TPoly::var()],
        ]);
        assert!(singular.determinant().is_zero());
        let swap = BurauMatrix::from_rows(vec![
            vec![TPoly::zero(), TPoly::one()],
            vec![TPoly::one(), TPoly::zero()],
        ]);
        assert_eq!(swap.determinant(), -TPoly::one());
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(
            alexander_poly(&word("[1,1,1]")).unwrap().to_string(),
            "t^2 - t + 1"
        );
        let k0 = alexander_poly(&family_word(Family::Kn, 0).unwrap()).unwrap();
        assert_eq!(k0.to_string(), "t^6 - t^5 + t^3 - t + 1");
        let k1 = alexander_poly(&family_word(Family::Kn, 1).unwrap()).unwrap();
        assert_eq!(
            k1.to_string(),
            "t^12 - t^11 + t^8 - t^7 + t^6 - t^5 + t^4 - t + 1"
        );
        assert_eq!(alexander_poly(&word("[1]")).unwrap(), TPoly::one());
        assert_eq!(
            alexander_poly(&BraidWord::identity(1).unwrap()).unwrap(),
            TPoly::one()
        );
        // figure eight
        assert_eq!(
            alexander_poly(&word("[1,-2,1,-2]")).unwrap().to_string(),
            "-t^2 + 3*t - 1"
        );
        assert_eq!(
            alexander_poly(&word("[1,1]")),
            Err(Error::NotAKnot { components: 2 })
        );
    }

    #[test]
    fn semigroup_of_k1_and_k2() {
        let k1 = TPoly::from_coefficients(0, &[1, -1, 0, 0, 1, -1, 1, -1, 1, 0, 0, -1, 1]);
        let s = formal_semigroup(&k1).unwrap();
        assert_eq!(s, FormalSemigroup::new(vec![0, 4, 6, 8, 9, 10], 12));
        assert!(s.is_closed_under_addition());

        let k2 = alexander_poly(&family_word(Family::Kn, 2).unwrap()).unwrap();
        let s = formal_semigroup(&k2).unwrap();
        assert_eq!(s.finite_part, vec![0, 4, 7, 9, 11, 12, 14, 15, 16]);
        assert_eq!(s.threshold, 18);
        assert_eq!(s.addition_witness(), Some((4, 4)));
    }

    #[test]
    fn unknot_semigroup_is_everything() {
        let s = formal_semigroup(&TPoly::one()).unwrap();
        assert_eq!(s, FormalSemigroup::new(vec![], 0));
        assert!(s.is_closed_under_addition());
        assert!(s.contains(0) && s.contains(17));
    }

    #[test]
    fn non_lspace_polynomials_are_rejected() {
        // figure eight: prefix sums -1, 2, ...
        let fig8 = TPoly::from_coefficients(0, &[-1, 3, -1]);
        assert!(matches!(
            formal_semigroup(&fig8),
            Err(Error::NotLSpaceForm { .. })
        ));
        assert!(matches!(
            formal_semigroup(&TPoly::from_coefficients(0, &[1, -1])),
            Err(Error::OddDegree { degree: 1 })
        ));
        assert!(matches!(
            formal_semigroup(&TPoly::from_coefficients(0, &[1, 0, 1])),
            Err(Error::NotLSpaceForm { .. })
        ));
    }

    #[test]
    fn semigroup_membership_and_gaps() {
        let s = FormalSemigroup::new(vec![0, 3], 5);
        assert_eq!(s.gaps(), vec![1, 2, 4]);
        assert_eq!(s.addition_witness(), None);
        let s = FormalSemigroup::new(vec![0, 2], 5);
        assert_eq!(s.addition_witness(), Some((2, 2)));
    }
}
