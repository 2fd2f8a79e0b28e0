//! `R/J(R)` and its split into a Boolean factor and a Yaqub factor.

use std::collections::HashSet;

use serde::Serialize;

use crate::classify::{is_boolean, is_sdt, is_yaqub, RingDescriptor};
use crate::error::{Error, Result};
use crate::invariants::{ideal_generated_by, jacobson_radical};
use crate::ring::{Caps, Elem, FiniteRing};
use crate::subset::{ElementSubset, SubsetLabel};
use crate::tables::TableRing;

/// Factor rings up to this order carry their tables in the report.
pub const TABLE_REPORT_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BooleanFactor {
    pub order: usize,
    pub boolean: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tables: Option<TableRing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YaqubFactor {
    pub order: usize,
    /// Yaqub, or the zero ring.
    pub yaqub: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tables: Option<TableRing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub source: RingDescriptor,
    pub quotient_order: usize,
    pub ideal2: Vec<Elem>,
    pub ideal3: Vec<Elem>,
    pub r1: BooleanFactor,
    pub r2: YaqubFactor,
    pub crt_bijective: bool,
    pub verdict: bool,
}

/// `R/J(R)` with its projection; the quotient is checked to be semiprimitive.
pub fn mod_jacobson(r: &FiniteRing) -> Result<(FiniteRing, Vec<Elem>)> {
    let j = jacobson_radical(r)?;
    let (q, proj) = Caps::default().quotient(r, j)?;
    if jacobson_radical(&q)?.len() != 1 {
        return Err(Error::InternalInvariant(format!(
            "J(R/J) is non-zero for {}",
            r.name()
        )));
    }
    Ok((q, proj))
}

fn tables_if_small(r: &FiniteRing) -> Option<TableRing> {
    (r.order() <= TABLE_REPORT_LIMIT).then(|| TableRing::of(r))
}

/// Splits a ring with `6·1 = 0` along `x -> (x + 2R, x + 3R)`.
pub fn crt_split_mod6(rbar: &FiniteRing) -> Result<DecompositionReport> {
    if rbar.from_int(6) != rbar.zero() {
        return Err(Error::CharacteristicError {
            ring: rbar.name().to_string(),
        });
    }
    let caps = Caps::default();
    let seed = |k: i64| ElementSubset::from_elems(rbar, SubsetLabel::Custom, [rbar.from_int(k)]);
    let i2 = ideal_generated_by(rbar, &seed(2));
    let i3 = ideal_generated_by(rbar, &seed(3));
    let (r1, p1) = caps.quotient(rbar, &i2)?;
    let (r2, p2) = caps.quotient(rbar, &i3)?;

    let images: HashSet<(Elem, Elem)> = (0..rbar.order()).map(|x| (p1[x], p2[x])).collect();
    let injective = images.len() == rbar.order();
    let crt_bijective = injective && rbar.order() == r1.order() * r2.order();
    let r1_boolean = is_boolean(&r1);
    let r2_yaqub = r2.order() == 1 || is_yaqub(&r2);
    let verdict = crt_bijective && r1_boolean && r2_yaqub;
    if verdict && i2.intersection(&i3).len() != 1 {
        return Err(Error::InternalInvariant(format!(
            "2R and 3R meet non-trivially in bijective split of {}",
            rbar.name()
        )));
    }
    Ok(DecompositionReport {
        source: RingDescriptor::of(rbar),
        quotient_order: rbar.order(),
        ideal2: i2.to_vec(),
        ideal3: i3.to_vec(),
        r1: BooleanFactor {
            order: r1.order(),
            boolean: r1_boolean,
            tables: tables_if_small(&r1),
        },
        r2: YaqubFactor {
            order: r2.order(),
            yaqub: r2_yaqub,
            tables: tables_if_small(&r2),
        },
        crt_bijective,
        verdict,
    })
}

/// For an SDT ring, checks that `R/J(R)` is Boolean × Yaqub.
pub fn verify_boolean_yaqub(r: &FiniteRing) -> Result<DecompositionReport> {
    if !is_sdt(r).0 {
        return Err(Error::PreconditionNotSdt {
            ring: r.name().to_string(),
        });
    }
    let (rbar, _) = mod_jacobson(r)?;
    let violation = |conclusion: &str| Error::ImplicationViolation {
        premise: "sdt".into(),
        conclusion: conclusion.into(),
        ring: r.name().to_string(),
    };
    let mut report = match crt_split_mod6(&rbar) {
        Err(Error::CharacteristicError { .. }) => return Err(violation("6 = 0 in R/J")),
        other => other?,
    };
    if !report.verdict {
        return Err(violation("R/J is Boolean x Yaqub"));
    }
    report.source = RingDescriptor::of(r);
    Ok(report)
}
