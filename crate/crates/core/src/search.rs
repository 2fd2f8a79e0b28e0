//! Catalog scans for questions the theory leaves open. Findings are
//! reported as data; nothing here asserts an answer.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classify::{is_c_delta, is_sdt, is_semi_tripotent, is_strongly_delta_npotent};
use crate::error::{Error, Result};
use crate::invariants::idempotents;
use crate::ring::{Caps, Elem, FiniteRing};

/// Most non-trivial idempotents visited per ring by the corner scan.
pub const MAX_CORNER_IDEMPOTENTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    SemitripotentVsSdt,
    CornerConverse,
    NpotentHierarchy,
    CDelta,
}

impl Problem {
    pub const ALL: [Problem; 4] = [
        Problem::SemitripotentVsSdt,
        Problem::CornerConverse,
        Problem::NpotentHierarchy,
        Problem::CDelta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::SemitripotentVsSdt => "semitripotent-vs-sdt",
            Problem::CornerConverse => "corner-converse",
            Problem::NpotentHierarchy => "npotent-hierarchy",
            Problem::CDelta => "c-delta",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown problem `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiFinding {
    pub ring: String,
    pub semi_tripotent: bool,
    pub sdt: bool,
}

/// A ring and an idempotent `e` for which `eRe` and `(1-e)R(1-e)` are SDT.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerFinding {
    pub ring: String,
    pub idempotent: Elem,
    pub complement: Elem,
    pub sdt: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NpotentRow {
    pub ring: String,
    pub flags: BTreeMap<u32, bool>,
    pub first_true: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CDeltaRow {
    pub ring: String,
    pub c_delta: bool,
    pub sdt: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "problem", rename_all = "kebab-case")]
pub enum SearchReport {
    SemitripotentVsSdt {
        scanned: Vec<String>,
        discrepancies: Vec<SemiFinding>,
    },
    CornerConverse {
        scanned: Vec<String>,
        instances: Vec<CornerFinding>,
        /// Instances where `R` itself is not SDT.
        non_sdt: usize,
    },
    NpotentHierarchy {
        scanned: Vec<String>,
        rows: Vec<NpotentRow>,
    },
    CDelta {
        scanned: Vec<String>,
        rows: Vec<CDeltaRow>,
    },
}

fn names(rings: &[FiniteRing]) -> Vec<String> {
    rings.iter().map(|r| r.name().to_string()).collect()
}

/// Rings where semi-tripotence and SDT disagree.
pub fn semitripotent_vs_sdt(rings: &[FiniteRing]) -> Result<SearchReport> {
    let mut discrepancies = Vec::new();
    for r in rings {
        let (semi, sdt) = (is_semi_tripotent(r)?, is_sdt(r).0);
        if semi != sdt {
            discrepancies.push(SemiFinding {
                ring: r.name().to_string(),
                semi_tripotent: semi,
                sdt,
            });
        }
    }
    Ok(SearchReport::SemitripotentVsSdt {
        scanned: names(rings),
        discrepancies,
    })
}

/// Pairs of complementary corners that are both SDT, with the verdict on `R`.
pub fn corner_converse(rings: &[FiniteRing]) -> Result<SearchReport> {
    let caps = Caps::default();
    let mut instances = Vec::new();
    for r in rings {
        let mut sdt = None;
        let nontrivial = idempotents(r)
            .iter()
            .filter(|&e| e != r.zero() && e != r.one())
            .take(MAX_CORNER_IDEMPOTENTS);
        for e in nontrivial {
            let f = r.sub(r.one(), e);
            // Each unordered pair once.
            if f < e {
                continue;
            }
            if is_sdt(&caps.corner(r, e)?).0 && is_sdt(&caps.corner(r, f)?).0 {
                let s = *sdt.get_or_insert_with(|| is_sdt(r).0);
                instances.push(CornerFinding {
                    ring: r.name().to_string(),
                    idempotent: e,
                    complement: f,
                    sdt: s,
                });
            }
        }
    }
    let non_sdt = instances.iter().filter(|i| !i.sdt).count();
    Ok(SearchReport::CornerConverse {
        scanned: names(rings),
        instances,
        non_sdt,
    })
}

/// Strongly Δ n-potent flags for `n` in `ns`.
pub fn npotent_hierarchy(rings: &[FiniteRing], ns: std::ops::RangeInclusive<u32>) -> SearchReport {
    let rows = rings
        .iter()
        .map(|r| {
            let flags: BTreeMap<u32, bool> = ns
                .clone()
                .map(|n| (n, is_strongly_delta_npotent(r, n)))
                .collect();
            let first_true = flags.iter().find(|(_, &v)| v).map(|(&n, _)| n);
            NpotentRow {
                ring: r.name().to_string(),
                flags,
                first_true,
            }
        })
        .collect();
    SearchReport::NpotentHierarchy {
        scanned: names(rings),
        rows,
    }
}

pub fn c_delta(rings: &[FiniteRing]) -> SearchReport {
    let rows = rings
        .iter()
        .map(|r| CDeltaRow {
            ring: r.name().to_string(),
            c_delta: is_c_delta(r),
            sdt: is_sdt(r).0,
        })
        .collect();
    SearchReport::CDelta {
        scanned: names(rings),
        rows,
    }
}

pub fn run(problem: Problem, rings: &[FiniteRing]) -> Result<SearchReport> {
    match problem {
        Problem::SemitripotentVsSdt => semitripotent_vs_sdt(rings),
        Problem::CornerConverse => corner_converse(rings),
        Problem::NpotentHierarchy => Ok(npotent_hierarchy(rings, 2..=8)),
        Problem::CDelta => Ok(c_delta(rings)),
    }
}
