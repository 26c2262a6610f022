use braidknot::oracles::random_positive_knot;
use braidknot::{
    alexander_poly, homfly, parse_braid, reduced_burau, render_braid, BraidWord, LaurentPoly1,
    LaurentPoly2, Monomial, Variable,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type P = LaurentPoly1<'t'>;
type P2 = LaurentPoly2<'x', 'y'>;

fn poly() -> impl Strategy<Value = P> {
    prop::collection::vec((-6i32..=6, -5i64..=5), 0..6).prop_map(P::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = P> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn poly2() -> impl Strategy<Value = P2> {
    prop::collection::vec(((-4i32..=4, -3i32..=3), -4i64..=4), 0..6).prop_map(P2::from_terms)
}

fn word(
    strands: std::ops::RangeInclusive<usize>,
    max_len: usize,
    signed: bool,
) -> impl Strategy<Value = BraidWord> {
    strands.prop_flat_map(move |n| {
        let g = n as i32 - 1;
        let letter = if signed {
            prop_oneof![1..=g, -g..=-1].boxed()
        } else {
            (1..=g).boxed()
        };
        prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

/// Applies one braid relation at `at` if one fits there.
fn braid_move(w: &BraidWord, at: usize) -> Option<BraidWord> {
    let l = w.letters();
    if l.is_empty() {
        return None;
    }
    let at = at % l.len();
    let mut out = l.to_vec();
    if at + 2 < l.len()
        && l[at] == l[at + 2]
        && (l[at] - l[at + 1]).abs() == 1
        && l[at].signum() == l[at + 1].signum()
    {
        out[at] = l[at + 1];
        out[at + 1] = l[at];
        out[at + 2] = l[at + 1];
    } else if at + 1 < l.len() && (l[at].abs() - l[at + 1].abs()).abs() >= 2 {
        out.swap(at, at + 1);
    } else {
        return None;
    }
    Some(BraidWord::new(w.strands(), out).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in poly2(), b in poly2(), ex in -3i32..=3, ey in -2i32..=2) {
        let img = Monomial::new(ex, ey);
        for which in [Variable::X, Variable::Y] {
            let s = |p: &P2| p.substitute(which, img);
            prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
            prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        }
        prop_assert_eq!((&a * &b).specialize_y_one(), &a.specialize_y_one() * &b.specialize_y_one());
    }

    #[test]
    fn normalization_is_idempotent_and_unit_invariant(p in nonzero_poly(), k in -5i32..=5, neg: bool) {
        let n = p.normalize_alexander().unwrap();
        prop_assert_eq!(n.normalize_alexander().unwrap(), n.clone());
        let unit = if neg { -p.shift(k) } else { p.shift(k) };
        prop_assert_eq!(unit.normalize_alexander().unwrap(), n.clone());
        prop_assert_eq!(n.min_degree(), Some(0));
    }

    #[test]
    fn render_parse_round_trip(w in word(2..=6, 20, true)) {
        prop_assert_eq!(parse_braid(&render_braid(&w), Some(w.strands())).unwrap(), w);
    }

    #[test]
    fn braid_relations_preserve_closure_data(w in word(4..=4, 14, false), at in 0usize..14) {
        if let Some(m) = braid_move(&w, at) {
            let (a, b) = (w.closure_summary(), m.closure_summary());
            prop_assert_eq!(a.component_count, b.component_count);
            prop_assert_eq!(a.writhe, b.writhe);
            prop_assert_eq!(reduced_burau(&w), reduced_burau(&m));
        }
    }

    #[test]
    fn braid_relations_preserve_homfly(w in word(3..=4, 10, true), at in 0usize..10) {
        if let Some(m) = braid_move(&w, at) {
            prop_assert_eq!(homfly(&w), homfly(&m));
        }
    }

    #[test]
    fn conjugation_preserves_component_count(w in word(2..=5, 12, true), g in 1i32..=4, neg: bool) {
        let g = 1 + (g - 1) % (w.strands() as i32 - 1);
        let g = if neg { -g } else { g };
        prop_assert_eq!(w.conjugate(g).unwrap().component_count(), w.component_count());
    }

    #[test]
    fn rotation_preserves_invariants(w in word(3..=4, 10, true), k in 0usize..10) {
        let r = w.rotate(k);
        prop_assert_eq!(homfly(&r), homfly(&w));
        prop_assert_eq!(alexander_poly(&r).ok(), alexander_poly(&w).ok());
    }
}

#[test]
fn positive_knots_have_genus_matching_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..150 {
        let strands = 3 + (rand::Rng::gen_range(&mut rng, 0..2));
        let w = random_positive_knot(&mut rng, strands, 16);
        let d = alexander_poly(&w).unwrap();
        let g = w.positive_braid_genus().unwrap();
        assert_eq!(d.span(), Some(2 * g as i32), "{w:?}");
        // Markov moves on positive words
        let stab = w.stabilize(true);
        assert_eq!(alexander_poly(&stab).unwrap(), d);
        assert_eq!(stab.positive_braid_genus().unwrap(), g);
        assert_eq!(alexander_poly(&w.conjugate(1).unwrap()).unwrap(), d);
    }
}
