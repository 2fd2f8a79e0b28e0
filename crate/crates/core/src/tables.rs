//! The JSON table format for user-supplied rings, and table export.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Caps, Elem, FiniteRing};

/// Largest ring whose tables are exported.
pub const EXPORT_LIMIT: usize = 4096;

/// `{"order", "zero", "one", "add", "mul", "neg"}` with row-major tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRing {
    pub order: usize,
    pub zero: Elem,
    pub one: Elem,
    pub add: Vec<Vec<Elem>>,
    pub mul: Vec<Vec<Elem>>,
    pub neg: Vec<Elem>,
}

impl TableRing {
    /// Full operation tables of `r`, without a size check.
    pub fn of(r: &FiniteRing) -> Self {
        let n = r.order();
        TableRing {
            order: n,
            zero: r.zero(),
            one: r.one(),
            add: (0..n)
                .map(|x| (0..n).map(|y| r.add(x, y)).collect())
                .collect(),
            mul: (0..n)
                .map(|x| (0..n).map(|y| r.mul(x, y)).collect())
                .collect(),
            neg: (0..n).map(|x| r.neg(x)).collect(),
        }
    }

    /// Validates the tables and builds the ring.
    pub fn build(&self, caps: &Caps, name: &str) -> Result<FiniteRing> {
        caps.table_ring(
            name, self.order, &self.add, &self.mul, &self.neg, self.zero, self.one,
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("bad table-ring JSON: {e}")))
    }
}

/// Tables for export, refused above [`EXPORT_LIMIT`].
pub fn export_tables(r: &FiniteRing) -> Result<TableRing> {
    if r.order() > EXPORT_LIMIT {
        return Err(Error::PreconditionFailed(format!(
            "table export is limited to order {EXPORT_LIMIT}, {} has order {}",
            r.name(),
            r.order()
        )));
    }
    Ok(TableRing::of(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants;

    #[test]
    fn z4_round_trip() {
        let caps = Caps::default();
        let z4 = caps.zmod(4).unwrap();
        let text = serde_json::to_string(&export_tables(&z4).unwrap()).unwrap();
        let back = TableRing::from_json(&text)
            .unwrap()
            .build(&caps, "Z4")
            .unwrap();
        assert_eq!(invariants::units(&back).to_vec(), vec![1, 3]);
        assert_eq!(invariants::delta(&back).to_vec(), vec![0, 2]);
    }

    #[test]
    fn gf4_matches_catalog_tables() {
        let g = crate::ring::gf4();
        let t = export_tables(&g).unwrap();
        assert_eq!(t.mul[2], vec![0, 2, 3, 1]);
        assert_eq!(t.add[2], vec![2, 3, 0, 1]);
    }

    #[test]
    fn export_guard_boundary() {
        let caps = Caps::default();
        assert!(export_tables(&caps.zmod(EXPORT_LIMIT).unwrap()).is_ok());
        assert!(matches!(
            export_tables(&caps.zmod(EXPORT_LIMIT + 1).unwrap()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn malformed_json_rejected() {
        assert!(TableRing::from_json("{\"order\": 2}").is_err());
    }
}
