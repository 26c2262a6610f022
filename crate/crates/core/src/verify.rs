//! The full cross-check sweep behind `braidknot verify --paper`.
//!
//! Each check compares exact polynomial or set equality between
//! independent routes; nothing is approximate.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alexander::{alexander_poly, formal_semigroup, TPoly};
use crate::braid::{family_word, BraidWord, Family};
use crate::homfly::{alexander_specialization, homfly, mfw_bracket};
use crate::laurent::Variable;
use crate::oracles::{
    all_positive_words, cable_alexander, knot_corpus, random_word, skein_homfly_naive,
    torus_alexander, TorusKnotSpec, SKEIN_LETTER_LIMIT,
};
use crate::report::{invariant_report, ReportOptions};
use crate::torres::{
    closed_form_kn_alexander, closed_form_kn_semigroup, paper_base_link, twist_alexander,
};

/// Seed for the randomized parts of the sweep.
pub const SWEEP_SEED: u64 = 0x4b6e_2025;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type CheckResult = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn kn(n: u32) -> BraidWord {
    family_word(Family::Kn, n).expect("Kn is defined for n >= 0")
}

fn alex(w: &BraidWord) -> Result<TPoly, String> {
    alexander_poly(w).map_err(|e| format!("{w}: {e}"))
}

fn alexander_routes() -> CheckResult {
    for n in 1..=8 {
        let burau = alex(&kn(n))?;
        let torres = twist_alexander(&paper_base_link(), n).map_err(|e| e.to_string())?;
        let closed = closed_form_kn_alexander(n).map_err(|e| e.to_string())?;
        ensure(burau == torres && torres == closed, || {
            format!("n={n}: burau {burau}, torres {torres}, closed form {closed}")
        })?;
    }
    Ok("Burau = Torres = closed form for n = 1..8".into())
}

fn baseline_identifications() -> CheckResult {
    let k0 = alex(&kn(0))?;
    let t34 = torus_alexander(TorusKnotSpec::new(3, 4).unwrap()).map_err(|e| e.to_string())?;
    ensure(k0 == t34, || format!("K_0 {k0} vs T(3,4) {t34}"))?;
    let k1 = closed_form_kn_alexander(1).map_err(|e| e.to_string())?;
    let trefoil = torus_alexander(TorusKnotSpec::new(2, 3).unwrap()).map_err(|e| e.to_string())?;
    let cable = cable_alexander(&trefoil, 2, 9).map_err(|e| e.to_string())?;
    ensure(k1 == cable, || format!("K_1 {k1} vs (2,9)-cable {cable}"))?;
    Ok(format!(
        "Δ(K_0) = Δ(T(3,4)) = {k0}; Δ(K_1) = Δ(C(2,9;T(2,3)))"
    ))
}

fn genus() -> CheckResult {
    for n in 0..=8 {
        let g = kn(n).positive_braid_genus().map_err(|e| e.to_string())?;
        let span = alex(&kn(n))?.span().unwrap_or(0) as u64;
        ensure(g == 3 * n as u64 + 3 && span == 2 * g, || {
            format!("n={n}: genus {g}, degree {span}")
        })?;
    }
    Ok("g(K_n) = 3n+3 = deg Δ / 2 for n = 0..8".into())
}

fn semigroups() -> CheckResult {
    for n in 1..=8 {
        let from_delta = formal_semigroup(&alex(&kn(n))?).map_err(|e| e.to_string())?;
        let closed = closed_form_kn_semigroup(n).map_err(|e| e.to_string())?;
        ensure(from_delta == closed, || {
            format!("n={n}: {from_delta:?} vs {closed:?}")
        })?;
        if n == 1 {
            ensure(
                from_delta.finite_part == [0, 4, 6, 8, 9, 10] && from_delta.threshold == 12,
                || format!("n=1: {from_delta:?}"),
            )?;
        }
    }
    Ok("expansion of Δ/(1-t) = closed form for n = 1..8".into())
}

fn non_closure() -> CheckResult {
    for n in 1..=8 {
        let s = formal_semigroup(&alex(&kn(n))?).map_err(|e| e.to_string())?;
        match (n, s.addition_witness()) {
            (1, None) => {}
            (1, Some(w)) => return Err(format!("n=1 unexpectedly not closed: {w:?}")),
            (_, Some((a, b))) => ensure(
                a + b == 8 && !s.contains(8) && s.contains(a) && s.contains(b),
                || format!("n={n}: witness ({a},{b})"),
            )?,
            (_, None) => return Err(format!("n={n}: unexpectedly closed")),
        }
    }
    Ok("closed at n = 1; witness 4+4 = 8 ∉ S for n = 2..8".into())
}

fn mfw_degrees() -> CheckResult {
    let p = homfly(&kn(2));
    let range = p.degree_range(Variable::X);
    ensure(range == Some((18, 24)), || {
        format!("v-degree range {range:?}")
    })?;
    let b = mfw_bracket(&kn(2));
    ensure(b.lower_bound == 4 && b.upper_bound == 4, || {
        format!("{b:?}")
    })?;
    Ok("K_2: d- = 18, d+ = 24, 4 ≤ braid index ≤ 4".into())
}

fn torus_semigroups() -> CheckResult {
    let mut count = 0;
    for p in 2..=6u32 {
        for q in p + 1..=40 / p {
            let Ok(spec) = TorusKnotSpec::new(p, q) else {
                continue;
            };
            let s = torus_alexander(spec)
                .and_then(|d| formal_semigroup(&d))
                .map_err(|e| format!("T({p},{q}): {e}"))?;
            ensure(s.is_closed_under_addition(), || {
                format!("T({p},{q}) not closed")
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} torus knots with pq ≤ 40 have additively closed semigroups"
    ))
}

fn candidate_coincidence() -> CheckResult {
    let opts = ReportOptions { homfly: true };
    let a = invariant_report(&family_word(Family::A, 3).unwrap(), opts);
    let b = invariant_report(&family_word(Family::B, 1).unwrap(), opts);
    ensure(a.alexander == b.alexander, || "alexander differs".into())?;
    ensure(a.genus == b.genus && a.genus.value() == Some(&10), || {
        format!("genus {:?} vs {:?}", a.genus, b.genus)
    })?;
    ensure(a.formal_semigroup == b.formal_semigroup, || {
        "formal semigroup differs".into()
    })?;
    ensure(a.homfly == b.homfly && a.homfly.value().is_some(), || {
        "homfly differs".into()
    })?;
    Ok("A(3) and B(1) agree on Δ, genus 10, S and P".into())
}

fn property_suite() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(SWEEP_SEED);
    let mut pairs = 0;
    while pairs < 240 {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(1..=12);
        let w = random_word(&mut rng, strands, len, true);
        let g = rng.gen_range(1..strands as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let moved = [w.conjugate(g).unwrap(), w.stabilize(rng.gen_bool(0.5))];
        let p = homfly(&w);
        let knot = w.component_count() == 1;
        let delta = if knot { Some(alex(&w)?) } else { None };
        for m in &moved {
            ensure(homfly(m) == p, || {
                format!("HOMFLY Markov failure: {w} vs {m}")
            })?;
            if let Some(d) = &delta {
                ensure(alex(m)? == *d, || {
                    format!("Alexander Markov failure: {w} vs {m}")
                })?;
            }
            pairs += 1;
        }
    }

    let corpus = knot_corpus(&mut rng, 60);
    for w in &corpus {
        let d = alex(w)?;
        ensure(d.is_palindromic() && d.eval_one() == 1.into(), || {
            format!("{w}: Δ = {d}")
        })?;
        let spec = alexander_specialization(&homfly(w)).map_err(|e| format!("{w}: {e}"))?;
        ensure(spec == d, || {
            format!("{w}: specialization {spec} vs Burau {d}")
        })?;
    }

    let mut skein = 0;
    for n in 1..=3 {
        for w in all_positive_words(n, 7) {
            let naive = skein_homfly_naive(&w, SKEIN_LETTER_LIMIT).map_err(|e| e.to_string())?;
            ensure(naive == homfly(&w), || {
                format!("{w} on {n} strands: Hecke vs skein")
            })?;
            skein += 1;
        }
    }
    Ok(format!(
        "{pairs} Markov pairs, {} corpus knots, {skein} Hecke/skein words",
        corpus.len()
    ))
}

/// Runs every check in order.
pub fn paper_checks() -> Vec<CheckOutcome> {
    type Check = (&'static str, fn() -> CheckResult);
    let checks: [Check; 9] = [
        (
            "Alexander routes agree (Burau, Torres, closed form)",
            alexander_routes,
        ),
        (
            "K_0 = T(3,4) and K_1 = (2,9)-cable of T(2,3)",
            baseline_identifications,
        ),
        ("positive-braid genus 3n+3", genus),
        ("formal semigroup closed form", semigroups),
        ("non-closure witness 4+4=8", non_closure),
        ("MFW degrees of K_2", mfw_degrees),
        ("torus-knot semigroups are closed", torus_semigroups),
        ("A(3) and B(1) coincide", candidate_coincidence),
        (
            "Markov, palindromicity, Hecke/skein, specialization",
            property_suite,
        ),
    ];
    checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, run))| {
            let start = Instant::now();
            let result = run();
            CheckOutcome {
                id: i as u32 + 1,
                name,
                passed: result.is_ok(),
                detail: result.unwrap_or_else(|e| e),
                millis: start.elapsed().as_millis(),
            }
        })
        .collect()
}
