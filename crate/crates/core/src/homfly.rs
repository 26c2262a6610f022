//! HOMFLY-PT polynomials of braid closures through the Hecke algebra.
//!
//! Convention: `v⁻¹ P(L₊) - v P(L₋) = z P(L₀)`, `P(unknot) = 1`.
//!
//! The braid generator `σ_i` maps to `v·g_i` in the Hecke algebra `H_n`
//! with `g_i² = z g_i + 1` (so `g_i - g_i⁻¹ = z`). A basis of `H_n` is
//! `{T_w}` for `w ∈ S_n`, `T_w` the positive permutation braid of `w`.
//! The Markov trace used here satisfies
//!
//! * `tr(x g_{n-1} y) = v⁻¹ tr(x y)` for `x, y ∈ H_{n-1}`,
//! * `tr(x) = δ tr_{n-1}(x)` for `x ∈ H_{n-1}`, `δ = (v⁻¹ - v) / z`,
//!
//! and `P(β̂) = v^{writhe(β)} tr(g(β))`. Every `T_w` factors as
//! `T_{w'} g_{n-1} g_{n-2} ... g_k` with `w' ∈ S_{n-1}`, which turns the
//! two rules into a recursion over strand counts. The basis has `n!`
//! elements, so this is practical up to about six strands.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::alexander::TPoly;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly1, LaurentPoly2};

pub type VZPoly = LaurentPoly2<'v', 'z'>;
pub type ZPoly = LaurentPoly1<'z'>;

/// Multiplication and trace tables of `H_n`.
struct HeckeTables {
    perms: Vec<Vec<u8>>,
    /// `right[w][i]`: index of `w·s_i` and whether the length goes up.
    right: Vec<Vec<(usize, bool)>>,
    traces: Vec<VZPoly>,
}

impl HeckeTables {
    fn build(n: usize) -> Self {
        let perms = permutations(n);
        let index: HashMap<&[u8], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let right = perms
            .iter()
            .map(|p| {
                (0..n.saturating_sub(1))
                    .map(|i| {
                        let mut q = p.clone();
                        q.swap(i, i + 1);
                        (index[q.as_slice()], p[i] < p[i + 1])
                    })
                    .collect()
            })
            .collect();
        let mut tables = Self {
            perms,
            right,
            traces: Vec::new(),
        };
        tables.traces = if n <= 1 {
            vec![VZPoly::one()]
        } else {
            let lower = tables_for(n - 1);
            tables
                .perms
                .iter()
                .map(|p| lower.relative_trace(p))
                .collect()
        };
        tables
    }

    /// Trace in `H_{n+1}` of the basis element of `w ∈ S_{n+1}`, computed
    /// from this (size `n`) table.
    fn relative_trace(&self, w: &[u8]) -> VZPoly {
        let n = w.len() - 1;
        let k = w
            .iter()
            .position(|&x| x as usize == n)
            .expect("w is a permutation");
        let reduced: Vec<u8> = w.iter().copied().filter(|&x| x as usize != n).collect();
        let base = self
            .perms
            .iter()
            .position(|p| *p == reduced)
            .expect("reduced word is a permutation");
        if k == n {
            return &delta() * &self.traces[base];
        }
        let mut coeffs = vec![ZPoly::zero(); self.perms.len()];
        coeffs[base] = ZPoly::one();
        let mut elem = HeckeElement { strands: n, coeffs };
        for j in (k..n.saturating_sub(1)).rev() {
            elem = elem.mul_generator(self, j, true);
        }
        self.trace_of(&elem).shift(-1, 0)
    }

    fn trace_of(&self, elem: &HeckeElement) -> VZPoly {
        elem.coeffs
            .iter()
            .zip(&self.traces)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, tr)| &VZPoly::lift_y(c) * tr)
            .sum()
    }
}

/// `(v⁻¹ - v) z⁻¹`, the trace of the identity on one extra strand.
fn delta() -> VZPoly {
    VZPoly::from_terms([((-1, -1), 1), ((1, -1), -1)])
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for m in 0..n as u8 {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, m);
                    q
                })
            })
            .collect();
    }
    out.sort();
    out
}

fn tables_for(n: usize) -> Arc<HeckeTables> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<HeckeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("table cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    // Built without holding the lock: construction recurses into n - 1.
    let built = Arc::new(HeckeTables::build(n));
    let mut guard = cache.lock().expect("table cache poisoned");
    Arc::clone(guard.entry(n).or_insert(built))
}

/// An element of `H_n` in the permutation-braid basis, coefficients in `Z[z^±]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    strands: usize,
    coeffs: Vec<ZPoly>,
}

impl HeckeElement {
    pub fn identity(strands: usize) -> Self {
        let tables = tables_for(strands);
        let mut coeffs = vec![ZPoly::zero(); tables.perms.len()];
        coeffs[0] = ZPoly::one();
        Self { strands, coeffs }
    }

    /// Image of a braid word, without the `v^{writhe}` factor.
    pub fn from_word(word: &BraidWord) -> Self {
        let tables = tables_for(word.strands());
        let mut elem = Self::identity(word.strands());
        for &l in word.letters() {
            elem = elem.mul_generator(&tables, l.unsigned_abs() as usize - 1, l > 0);
        }
        elem
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Nonzero coefficients keyed by permutation in one-line notation (0-based).
    pub fn terms(&self) -> Vec<(Vec<u8>, ZPoly)> {
        let tables = tables_for(self.strands);
        self.coeffs
            .iter()
            .zip(&tables.perms)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, p)| (p.clone(), c.clone()))
            .collect()
    }

    /// Right multiplication by `g_i` or `g_i⁻¹ = g_i - z` (0-based `i`).
    ///
    /// `T_w g = T_{ws}` when the length goes up, otherwise
    /// `T_w g = z T_w + T_{ws}`; for the inverse the roles swap:
    /// `T_w g⁻¹ = T_{ws} - z T_w` going up and `T_{ws}` going down.
    fn mul_generator(&self, tables: &HeckeTables, i: usize, positive: bool) -> Self {
        let mut out = vec![ZPoly::zero(); self.coeffs.len()];
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (ws, up) = tables.right[w][i];
            out[ws] += c;
            match (up, positive) {
                (false, true) => out[w] += &c.shift(1),
                (true, false) => out[w] -= &c.shift(1),
                _ => {}
            }
        }
        Self {
            strands: self.strands,
            coeffs: out,
        }
    }

    pub fn trace(&self) -> VZPoly {
        tables_for(self.strands).trace_of(self)
    }
}

/// HOMFLY-PT polynomial `P(v, z)` of the closure of `word`.
pub fn homfly(word: &BraidWord) -> VZPoly {
    let writhe = i32::try_from(word.writhe()).expect("writhe fits in i32");
    HeckeElement::from_word(word).trace().shift(writhe, 0)
}

/// Morton–Franks–Williams data: the `v`-degree extremes of `P` and the
/// resulting bracket `lower_bound ≤ braid index ≤ upper_bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MfwBracket {
    pub d_plus: i64,
    pub d_minus: i64,
    pub lower_bound: i64,
    pub upper_bound: i64,
}

impl MfwBracket {
    pub fn from_homfly(p: &VZPoly, strands: usize) -> Self {
        let (d_minus, d_plus) = p
            .degree_range(crate::laurent::Variable::X)
            .expect("HOMFLY-PT polynomial is nonzero");
        let (d_minus, d_plus) = (d_minus as i64, d_plus as i64);
        Self {
            d_plus,
            d_minus,
            lower_bound: (d_plus - d_minus) / 2 + 1,
            upper_bound: strands as i64,
        }
    }
}

pub fn mfw_bracket(word: &BraidWord) -> MfwBracket {
    MfwBracket::from_homfly(&homfly(word), word.strands())
}

/// Alexander polynomial from `P` via `v = 1`, `z = t^{1/2} - t^{-1/2}`.
pub fn alexander_specialization(p: &VZPoly) -> Result<TPoly> {
    let conway: ZPoly = p.specialize_x_one();
    if conway.min_degree().is_some_and(|e| e < 0) {
        return Err(Error::NegativeZPower);
    }
    let s_minus_inverse = LaurentPoly1::<'s'>::from_terms([(1, 1), (-1, -1)]);
    let in_s: LaurentPoly1<'s'> = conway
        .terms()
        .map(|(e, c)| s_minus_inverse.pow(e as u32).scale(c))
        .sum();
    let parity = in_s
        .min_degree()
        .ok_or(Error::ZeroPolynomial)?
        .rem_euclid(2);
    if in_s.terms().any(|(e, _)| e.rem_euclid(2) != parity) {
        return Err(Error::OddExponent);
    }
    TPoly::from_terms(in_s.terms().map(|(e, c)| ((e - parity) / 2, c.clone())))
        .normalize_alexander()
}
