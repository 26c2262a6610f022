//! Fixtures shared by the benchmarks.

use braidknot::{family_word, BraidWord, Family};

/// The `Kn` words for the given parameters.
pub fn kn_words(ns: &[u32]) -> Vec<(u32, BraidWord)> {
    ns.iter()
        .map(|&n| {
            (
                n,
                family_word(Family::Kn, n).expect("Kn is defined for n >= 0"),
            )
        })
        .collect()
}
