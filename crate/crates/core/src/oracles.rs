//! Slow, independent reference computations used to cross-check the main
//! engines. Compiled only with the `oracles` feature.

use rand::Rng;

use crate::alexander::{FormalSemigroup, TPoly};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::homfly::VZPoly;

/// Parameters of the torus knot `T(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusKnotSpec {
    pub p: u32,
    pub q: u32,
}

impl TorusKnotSpec {
    /// `p, q ≥ 1` and coprime; `T(p, 1)` is the unknot.
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 || gcd(p, q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(Self { p, q })
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, normalized.
pub fn torus_alexander(spec: TorusKnotSpec) -> Result<TPoly> {
    let (p, q) = (spec.p as i32, spec.q as i32);
    let minus_one = |e: i32| TPoly::monomial(1, e) - TPoly::one();
    let num = &minus_one(p * q) * &minus_one(1);
    let den = &minus_one(p) * &minus_one(q);
    num.exact_div(&den)?.normalize_alexander()
}

/// Alexander polynomial of the `(2, q)`-cable of a knot with Alexander
/// polynomial `companion`: `Δ_companion(t²) · Δ_{T(2,q)}(t)`.
pub fn cable_alexander(companion: &TPoly, cable_p: u32, cable_q: u32) -> Result<TPoly> {
    if cable_p != 2 {
        return Err(Error::UnsupportedCable { p: cable_p });
    }
    let pattern = torus_alexander(TorusKnotSpec::new(2, cable_q)?)?;
    (&companion.substitute_power(2) * &pattern).normalize_alexander()
}

/// Largest word the exponential skein resolution accepts.
pub const SKEIN_LETTER_LIMIT: usize = 14;

/// HOMFLY-PT polynomial by resolving crossings until the diagram is
/// descending.
///
/// Components are traversed in order of their smallest top position,
/// each from that position. The first crossing met from below is
/// switched with the skein relation, which either reduces the number of
/// such crossings (switch) or the number of crossings (smoothing, i.e.
/// deleting the letter). A descending diagram of `c` components is an
/// unlink with `P = δ^{c-1}`.
pub fn skein_homfly_naive(word: &BraidWord, max_letters: usize) -> Result<VZPoly> {
    let limit = max_letters.min(SKEIN_LETTER_LIMIT);
    if word.len() > limit {
        return Err(Error::WordTooLong {
            len: word.len(),
            limit,
        });
    }
    Ok(resolve(word))
}

fn resolve(word: &BraidWord) -> VZPoly {
    let (components, bad) = descending_scan(word);
    let Some(j) = bad else {
        let delta = VZPoly::from_terms([((-1, -1), 1), ((1, -1), -1)]);
        return (1..components).fold(VZPoly::one(), |acc, _| &acc * &delta);
    };
    let switched = resolve(&word.with_letter_inverted(j));
    let smoothed = resolve(&word.without_letter(j));
    if word.letters()[j] > 0 {
        // P(L+) = v² P(L-) + v z P(L0)
        switched.shift(2, 0) + smoothed.shift(1, 1)
    } else {
        // P(L-) = v⁻² P(L+) - v⁻¹ z P(L0)
        switched.shift(-2, 0) - smoothed.shift(-1, 1)
    }
}

/// Returns the component count and the first letter met as an
/// under-crossing, if any.
///
/// At a positive letter the strand entering at the right position
/// (`i + 1`) passes over; at a negative letter the left one does.
fn descending_scan(word: &BraidWord) -> (usize, Option<usize>) {
    let n = word.strands();
    let mut visited = vec![false; n];
    let mut seen = vec![false; word.len()];
    let mut components = 0;
    let mut bad = None;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        components += 1;
        let mut pos = start;
        loop {
            visited[pos] = true;
            for (j, &l) in word.letters().iter().enumerate() {
                let i = l.unsigned_abs() as usize - 1;
                if pos != i && pos != i + 1 {
                    continue;
                }
                let over = (pos == i + 1) == (l > 0);
                if !seen[j] {
                    seen[j] = true;
                    if !over && bad.is_none() {
                        bad = Some(j);
                    }
                }
                pos = if pos == i { i + 1 } else { i };
            }
            if pos == start {
                break;
            }
        }
    }
    (components, bad)
}

/// Closure test that walks every sum up to twice the threshold instead
/// of reasoning about the tail.
pub fn semigroup_closed_brute(s: &FormalSemigroup) -> bool {
    let bound = 2 * s.threshold + 2;
    (0..=bound).filter(|&a| s.contains(a)).all(|a| {
        (a..=bound)
            .filter(|&b| s.contains(b))
            .all(|b| s.contains(a + b))
    })
}

/// The numerical semigroup generated by `generators`, as a
/// [`FormalSemigroup`] whose threshold is one past the Frobenius number.
pub fn numerical_semigroup(generators: &[u64]) -> FormalSemigroup {
    let g = generators.iter().copied().fold(0, num_gcd);
    assert_eq!(g, 1, "generators must be coprime");
    let largest = *generators.iter().max().expect("at least one generator");
    let mut member = vec![true];
    let mut run = 1u64;
    let mut s = 0usize;
    while run < largest {
        s += 1;
        let m = generators
            .iter()
            .any(|&g| g as usize <= s && member[s - g as usize]);
        member.push(m);
        run = if m { run + 1 } else { 0 };
    }
    let threshold = (member.len() as u64).saturating_sub(largest);
    FormalSemigroup::new(
        (0..threshold).filter(|&k| member[k as usize]).collect(),
        threshold,
    )
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// All positive words of length `0..=max_len` on exactly `strands` strands.
pub fn all_positive_words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let gens = strands.saturating_sub(1) as i32;
    let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
    let mut out = Vec::new();
    for len in 0..=max_len {
        out.extend(
            layer
                .iter()
                .map(|l| BraidWord::new(strands, l.clone()).expect("letters in range")),
        );
        if len == max_len || gens == 0 {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|l| {
                (1..=gens).map(move |g| {
                    let mut next = l.clone();
                    next.push(g);
                    next
                })
            })
            .collect();
    }
    out
}

/// A uniformly random word; negative letters only when `signed`.
pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize, signed: bool) -> BraidWord {
    let gens = strands as i32 - 1;
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=gens);
            if signed && rng.gen_bool(0.5) {
                -g
            } else {
                g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

/// Random positive word whose closure is a knot.
pub fn random_positive_knot<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    loop {
        let len = rng.gen_range(strands - 1..=max_len);
        let w = random_word(rng, strands, len, false);
        if w.component_count() == 1 {
            return w;
        }
    }
}

/// Knot-closure words used for corpus-wide property checks: every
/// positive knot word of length ≤ 7 on 2 or 3 strands, the `K_n` family for
/// `n ≤ 8`, the `A`/`B` candidates, and `random` signed words on 3 and 4
/// strands.
pub fn knot_corpus<R: Rng>(rng: &mut R, random: usize) -> Vec<BraidWord> {
    use crate::braid::{family_word, Family};
    let mut out: Vec<BraidWord> = (2..=3)
        .flat_map(|n| all_positive_words(n, 7))
        .filter(|w| w.component_count() == 1)
        .collect();
    out.extend((0..=8).map(|n| family_word(Family::Kn, n).expect("valid parameter")));
    out.extend((1..=3).map(|m| family_word(Family::A, m).expect("valid parameter")));
    out.push(family_word(Family::B, 1).expect("valid parameter"));
    let mut added = 0;
    while added < random {
        let strands = rng.gen_range(3..=4);
        let len = rng.gen_range(2..=12);
        let w = random_word(rng, strands, len, true);
        if w.component_count() == 1 {
            out.push(w);
            added += 1;
        }
    }
    out
}
