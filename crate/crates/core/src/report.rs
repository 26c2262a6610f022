//! Per-knot invariant reports and family sweeps.
//!
//! A report never fails as a whole. Each field whose computation does not
//! apply is serialized as `{"absent": <reason>, "detail": <message>}`.

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::alexander::{alexander_poly, formal_semigroup, FormalSemigroup, TPoly};
use crate::braid::{family_word, BraidWord, Family};
use crate::error::{Error, Result};
use crate::homfly::{alexander_specialization, homfly, MfwBracket, VZPoly};
use crate::torres::{
    closed_form_kn_alexander, closed_form_kn_semigroup, paper_base_link, twist_alexander,
};

/// A report field: a value, or the reason it is missing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field<T> {
    Value(T),
    Absent {
        reason: &'static str,
        detail: String,
    },
}

impl<T> Field<T> {
    pub fn disabled() -> Self {
        Field::Absent {
            reason: "Disabled",
            detail: "not requested".into(),
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Field::Value(v) => Some(v),
            Field::Absent { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<&'static str> {
        match self {
            Field::Value(_) => None,
            Field::Absent { reason, .. } => Some(reason),
        }
    }

    fn and_then<U>(&self, f: impl FnOnce(&T) -> Result<U>) -> Field<U> {
        match self {
            Field::Value(v) => f(v).into(),
            Field::Absent { reason, detail } => Field::Absent {
                reason,
                detail: detail.clone(),
            },
        }
    }
}

impl<T> From<Result<T>> for Field<T> {
    fn from(r: Result<T>) -> Self {
        match r {
            Ok(v) => Field::Value(v),
            Err(e) => Field::Absent {
                reason: e.reason(),
                detail: e.to_string(),
            },
        }
    }
}

impl<T: Serialize> Serialize for Field<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Field::Value(v) => v.serialize(s),
            Field::Absent { reason, detail } => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("absent", reason)?;
                m.serialize_entry("detail", detail)?;
                m.end()
            }
        }
    }
}

/// Whether the formal semigroup is additively closed, with a failing pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupClosure {
    pub closed: bool,
    pub witness: Option<(u64, u64)>,
}

impl SemigroupClosure {
    pub fn of(s: &FormalSemigroup) -> Self {
        let witness = s.addition_witness();
        Self {
            closed: witness.is_none(),
            witness,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// Compute the HOMFLY-PT polynomial and the MFW bracket.
    pub homfly: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub braid: String,
    pub strands: usize,
    pub writhe: i64,
    pub components: usize,
    pub genus: Field<u64>,
    pub alexander: Field<TPoly>,
    pub formal_semigroup: Field<FormalSemigroup>,
    pub semigroup_closed: Field<SemigroupClosure>,
    pub homfly: Field<VZPoly>,
    pub mfw: Field<MfwBracket>,
}

pub fn invariant_report(word: &BraidWord, options: ReportOptions) -> InvariantReport {
    let summary = word.closure_summary();
    let knot: Field<()> = word.require_knot().into();
    let alexander = knot.and_then(|_| alexander_poly(word));
    let semigroup = alexander.and_then(formal_semigroup);
    let homfly_field = if options.homfly {
        knot.and_then(|_| Ok(homfly(word)))
    } else {
        Field::disabled()
    };
    InvariantReport {
        braid: word.to_string(),
        strands: word.strands(),
        writhe: summary.writhe,
        components: summary.component_count,
        genus: word.positive_braid_genus().into(),
        semigroup_closed: semigroup.and_then(|s| Ok(SemigroupClosure::of(s))),
        formal_semigroup: semigroup,
        mfw: homfly_field.and_then(|p| Ok(MfwBracket::from_homfly(p, word.strands()))),
        homfly: homfly_field,
        alexander,
    }
}

/// Per-parameter outcome of a family sweep. All comparisons are exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyVerdict {
    pub n: u32,
    pub braid: String,
    pub alexander: TPoly,
    /// Names of the Alexander routes that were compared.
    pub routes: Vec<&'static str>,
    pub route_agreement: bool,
    pub formal_semigroup: Option<FormalSemigroup>,
    /// `None` when the family has no closed-form semigroup at this parameter.
    pub semigroup_agreement: Option<bool>,
    pub semigroup_closed: Option<SemigroupClosure>,
    pub genus: u64,
    pub genus_ok: bool,
    pub mfw_lower: Option<i64>,
}

impl FamilyVerdict {
    pub fn consistent(&self) -> bool {
        self.route_agreement && self.semigroup_agreement != Some(false) && self.genus_ok
    }
}

/// Runs every applicable check for each parameter in `from..=to`.
///
/// Parameters are evaluated in parallel; the output is ordered by `n`.
pub fn verify_family(
    family: Family,
    from: u32,
    to: u32,
    options: ReportOptions,
) -> Result<Vec<FamilyVerdict>> {
    if from > to {
        return Err(Error::EmptyRange { from, to });
    }
    if from < family.min_parameter() {
        return Err(Error::ParameterOutOfRange {
            what: family.name(),
            value: from as i64,
        });
    }
    (from..=to)
        .into_par_iter()
        .map(|n| family_verdict(family, n, options))
        .collect()
}

fn family_verdict(family: Family, n: u32, options: ReportOptions) -> Result<FamilyVerdict> {
    let word = family_word(family, n)?;
    let burau = alexander_poly(&word)?;
    let mut routes = vec!["burau"];
    let mut others: Vec<TPoly> = Vec::new();
    if family == Family::Kn {
        routes.push("torres");
        others.push(twist_alexander(&paper_base_link(), n)?);
        if n >= 1 {
            routes.push("closed_form");
            others.push(closed_form_kn_alexander(n)?);
        }
    }
    let mut mfw_lower = None;
    if options.homfly {
        let p = homfly(&word);
        routes.push("homfly");
        others.push(alexander_specialization(&p)?);
        mfw_lower = Some(MfwBracket::from_homfly(&p, word.strands()).lower_bound);
    }
    let route_agreement = others.iter().all(|o| *o == burau);

    let semigroup = formal_semigroup(&burau).ok();
    let semigroup_agreement = match (family, n) {
        (Family::Kn, 1..) => Some(semigroup.as_ref() == Some(&closed_form_kn_semigroup(n)?)),
        _ => None,
    };
    let genus = word.positive_braid_genus()?;
    Ok(FamilyVerdict {
        n,
        braid: word.to_string(),
        routes,
        route_agreement,
        semigroup_closed: semigroup.as_ref().map(SemigroupClosure::of),
        formal_semigroup: semigroup,
        semigroup_agreement,
        genus_ok: burau.span() == Some(2 * genus as i32),
        genus,
        mfw_lower,
        alexander: burau,
    })
}
