//! SDT-ness of `T_n(R)` for a local `R`, brute force against the
//! structural condition on `R`.

use std::time::Instant;

use serde::Serialize;

use crate::classify::{delta_shift_surjectivity, is_bleached, is_local, is_sdt};
use crate::error::{Error, Result};
use crate::invariants::jacobson_radical;
use crate::ring::{Caps, FiniteRing};

/// Which half of the structural condition holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// Bleached with `R/J ≅ Z_2`.
    #[serde(rename = "2.1")]
    ResidueTwo,
    /// Bleached with `R/J ≅ Z_3` and `l_a - r_b` onto for `a ∈ 1 + Δ`, `b ∈ -1 + Δ`.
    #[serde(rename = "2.2")]
    ResidueThree,
    #[serde(rename = "neither")]
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremLocalReport {
    pub lhs_sdt: bool,
    pub rhs_condition: bool,
    pub branch: Branch,
    pub elapsed_ms: u64,
}

/// The branch of the structural condition satisfied by a local ring.
pub fn structural_branch(r: &FiniteRing) -> Result<Branch> {
    if !is_bleached(r)? {
        return Ok(Branch::Neither);
    }
    let (q, _) = Caps::default().quotient(r, jacobson_radical(r)?)?;
    Ok(match q.order() {
        2 => Branch::ResidueTwo,
        3 if delta_shift_surjectivity(r) => Branch::ResidueThree,
        _ => Branch::Neither,
    })
}

/// Compares `is_sdt(T_n(R))` with the structural condition on `R`.
pub fn check_theorem_local(r: &FiniteRing, n: usize) -> Result<TheoremLocalReport> {
    if n <= 2 {
        return Err(Error::InvalidArgument(format!("n must exceed 2, got {n}")));
    }
    if !is_local(r)? {
        return Err(Error::PreconditionFailed(format!(
            "{} is not local",
            r.name()
        )));
    }
    let start = Instant::now();
    let t = Caps::default().upper_triangular(r, n)?;
    let lhs_sdt = is_sdt(&t).0;
    let branch = structural_branch(r)?;
    let rhs_condition = branch != Branch::Neither;
    if lhs_sdt != rhs_condition {
        return Err(Error::ImplicationViolation {
            premise: format!("sdt(T_{n}) = {lhs_sdt}"),
            conclusion: format!("structural condition = {rhs_condition}"),
            ring: r.name().to_string(),
        });
    }
    Ok(TheoremLocalReport {
        lhs_sdt,
        rhs_condition,
        branch,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
