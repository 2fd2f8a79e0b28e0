//! The built-in catalog of small rings, with pinned classification flags.

use crate::classify::Flags;
use crate::error::{Error, Result};
use crate::parser::{ring_from_str, ExprError};
use crate::ring::{Caps, Elem, FiniteRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Expr(&'static str),
    /// `eRe` for the ring of `expr` and the idempotent with index `idempotent`.
    Corner {
        expr: &'static str,
        idempotent: Elem,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub source: Source,
    /// Expected flag values, keyed by their JSON names.
    pub pinned: &'static [(&'static str, bool)],
}

fn expr_error(e: ExprError) -> Error {
    match e {
        ExprError::Parse(p) => Error::InvalidArgument(p.to_string()),
        ExprError::Build(b) => b.source,
    }
}

impl CatalogEntry {
    pub fn build(&self, caps: &Caps) -> Result<FiniteRing> {
        match self.source {
            Source::Expr(text) => ring_from_str(text, caps).map_err(expr_error),
            Source::Corner { expr, idempotent } => {
                let r = ring_from_str(expr, caps).map_err(expr_error)?;
                caps.corner(&r, idempotent)
            }
        }
    }

    /// Order of the ring without building it.
    pub fn order(&self) -> Option<usize> {
        ORDERS
            .iter()
            .find(|(name, _)| *name == self.name)
            .map(|&(_, o)| o)
    }

    pub fn pin(&self, key: &str) -> Option<bool> {
        self.pinned.iter().find(|(k, _)| *k == key).map(|&(_, v)| v)
    }

    /// Pins that disagree with `flags`, as `(key, expected, actual)`.
    pub fn mismatches(&self, flags: &Flags) -> Vec<(&'static str, bool, Option<bool>)> {
        let value = serde_json::to_value(flags).expect("flags serialize");
        self.pinned
            .iter()
            .filter_map(|&(key, expected)| {
                let actual = value.get(key).and_then(serde_json::Value::as_bool);
                (actual != Some(expected)).then_some((key, expected, actual))
            })
            .collect()
    }
}

const SDT: &[(&str, bool)] = &[("sdt", true)];
const NOT_SDT: &[(&str, bool)] = &[("sdt", false)];

macro_rules! entry {
    ($name:literal, $pins:expr) => {
        CatalogEntry {
            name: $name,
            source: Source::Expr($name),
            pinned: $pins,
        }
    };
}

const CATALOG: &[CatalogEntry] = &[
    entry!("Z1", SDT),
    entry!("Z2", &[("sdt", true), ("boolean", true)]),
    entry!("Z3", &[("sdt", true), ("yaqub", true)]),
    entry!(
        "Z4",
        &[
            ("sdt", true),
            ("sdi", true),
            ("semi_tripotent", true),
            ("uniquely_clean", true),
            ("delta_u", true),
            ("local", true),
        ]
    ),
    entry!("Z5", NOT_SDT),
    entry!("Z6", &[("sdt", true), ("tripotent_ring", true)]),
    entry!("Z7", NOT_SDT),
    entry!("Z8", SDT),
    entry!("Z9", SDT),
    entry!("Z10", NOT_SDT),
    entry!("Z11", NOT_SDT),
    entry!("Z12", SDT),
    entry!("Z16", SDT),
    entry!("Z27", SDT),
    entry!(
        "GF4",
        &[
            ("sdt", false),
            ("local", true),
            ("reduced", true),
            ("domain", true)
        ]
    ),
    entry!(
        "Z2 x Z3",
        &[("sdt", true), ("boolean", false), ("tripotent_ring", true)]
    ),
    entry!("Z4 x Z3", SDT),
    entry!("Z2 x Z9", SDT),
    entry!("T2(Z2)", SDT),
    entry!("T3(Z2)", SDT),
    entry!("T2(Z3)", SDT),
    entry!("T3(Z3)", SDT),
    entry!("T2(Z4)", &[]),
    entry!("T3(Z4)", SDT),
    entry!("T2(Z9)", &[]),
    entry!("T3(Z9)", &[]),
    entry!("T2(Z5)", NOT_SDT),
    entry!("M2(Z2)", NOT_SDT),
    entry!("TE(Z2)", SDT),
    entry!("TE(Z3)", SDT),
    entry!("TE(Z4)", SDT),
    entry!("P2(Z2)", SDT),
    entry!("P2(Z3)", SDT),
    entry!("P3(Z3)", SDT),
    CatalogEntry {
        name: "corner(T2(Z2), 1)",
        source: Source::Corner {
            expr: "T2(Z2)",
            idempotent: 1,
        },
        pinned: SDT,
    },
    CatalogEntry {
        name: "corner(T2(Z2), 4)",
        source: Source::Corner {
            expr: "T2(Z2)",
            idempotent: 4,
        },
        pinned: SDT,
    },
    CatalogEntry {
        name: "corner(T2(Z2), 3)",
        source: Source::Corner {
            expr: "T2(Z2)",
            idempotent: 3,
        },
        pinned: SDT,
    },
];

const ORDERS: &[(&str, usize)] = &[
    ("Z1", 1),
    ("Z2", 2),
    ("Z3", 3),
    ("Z4", 4),
    ("Z5", 5),
    ("Z6", 6),
    ("Z7", 7),
    ("Z8", 8),
    ("Z9", 9),
    ("Z10", 10),
    ("Z11", 11),
    ("Z12", 12),
    ("Z16", 16),
    ("Z27", 27),
    ("GF4", 4),
    ("Z2 x Z3", 6),
    ("Z4 x Z3", 12),
    ("Z2 x Z9", 18),
    ("T2(Z2)", 8),
    ("T3(Z2)", 64),
    ("T2(Z3)", 27),
    ("T3(Z3)", 729),
    ("T2(Z4)", 64),
    ("T3(Z4)", 4096),
    ("T2(Z9)", 729),
    ("T3(Z9)", 531_441),
    ("T2(Z5)", 125),
    ("M2(Z2)", 16),
    ("TE(Z2)", 4),
    ("TE(Z3)", 9),
    ("TE(Z4)", 16),
    ("P2(Z2)", 4),
    ("P2(Z3)", 9),
    ("P3(Z3)", 27),
    ("corner(T2(Z2), 1)", 2),
    ("corner(T2(Z2), 4)", 2),
    ("corner(T2(Z2), 3)", 2),
];

pub fn builtin_catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

/// Catalog entries of order at most `max_order`, in catalog order.
pub fn entries_up_to(max_order: usize) -> impl Iterator<Item = &'static CatalogEntry> {
    CATALOG
        .iter()
        .filter(move |e| e.order().is_some_and(|o| o <= max_order))
}
