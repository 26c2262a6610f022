//! Exact knot invariants of braid closures.
//!
//! * [`braid`]: braid words, their text syntax, closure combinatorics,
//!   positive-braid genus and the `K_n`, `A`, `B` families.
//! * [`laurent`]: integer Laurent polynomials in one and two variables.
//! * [`alexander`]: reduced Burau matrices, Alexander polynomials and
//!   formal semigroups.
//! * [`torres`]: the twist-family route to `Δ_{K_n}` and its closed forms.
//! * [`homfly`]: HOMFLY-PT through the Hecke algebra, MFW bounds.
//! * [`report`]: aggregated per-knot reports and family sweeps.
//!
//! With the `oracles` feature, [`oracles`] adds slow independent reference
//! computations and [`verify`] the full cross-check sweep.

pub mod alexander;
pub mod braid;
pub mod error;
pub mod homfly;
pub mod laurent;
#[cfg(feature = "oracles")]
pub mod oracles;
pub mod report;
pub mod torres;
#[cfg(feature = "oracles")]
pub mod verify;

pub use alexander::{
    alexander_poly, formal_semigroup, reduced_burau, BurauMatrix, FormalSemigroup, TPoly,
};
pub use braid::{family_word, parse_braid, render_braid, BraidWord, ClosureSummary, Family};
pub use error::{Error, Result};
pub use homfly::{alexander_specialization, homfly, mfw_bracket, HeckeElement, MfwBracket, VZPoly};
pub use laurent::{LaurentPoly1, LaurentPoly2, Monomial, Variable};
pub use report::{
    invariant_report, verify_family, FamilyVerdict, Field, InvariantReport, ReportOptions,
};
pub use torres::{
    closed_form_kn_alexander, closed_form_kn_semigroup, paper_base_link, twist_alexander,
    TwistFamilySpec,
};
