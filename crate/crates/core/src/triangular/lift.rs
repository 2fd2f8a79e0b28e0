//! Tripotents of `T_n(R)` commuting with a given matrix, with a prescribed
//! diagonal, and SDT representations built from them.

use serde::Serialize;

use crate::classify::{delta_shift_surjectivity, is_bleached, is_local};
use crate::error::{Error, Result};
use crate::invariants::{is_unit, jacobson_radical, lr_surjective};
use crate::ring::{Caps, Elem, FiniteRing};

use super::workhorse::{sign_of, workhorse_idempotent_z, workhorse_z, Variant, WorkhorseCase};
use super::Matrix;

fn variant_for(base: &FiniteRing) -> Result<Variant> {
    if !is_local(base)? {
        return Err(Error::PreconditionFailed(format!(
            "{} is not local",
            base.name()
        )));
    }
    let two = base.from_int(2);
    Ok(if is_unit(base, two) {
        Variant::Tripotent
    } else {
        Variant::Idempotent
    })
}

/// A tripotent `E ∈ T_n(R)` with `AE = EA` and `E_ii = diag[i]`.
///
/// `R` must be local. When `2` is a unit the diagonal entries must be in
/// `{0, 1, -1}`; otherwise they must be in `{0, 1}` and `E` is built as an
/// idempotent. Diagonal entries may differ at `i < j` only where
/// `l_{a_ii} - r_{a_jj}` is onto. Entries above the diagonal are filled one
/// superdiagonal at a time, each from the principal block it closes.
pub fn lift_commuting_tripotent(t: &FiniteRing, a: Elem, diag: &[Elem]) -> Result<Elem> {
    let (base, n) = t
        .as_upper_triangular()
        .ok_or_else(|| Error::InvalidArgument(format!("{} is not T_n(R)", t.name())))?;
    if diag.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} diagonal entries, got {}",
            diag.len()
        )));
    }
    let variant = variant_for(base)?;
    for &d in diag {
        let ok = match variant {
            Variant::Tripotent => sign_of(base, d).is_some(),
            Variant::Idempotent => d == base.zero() || d == base.one(),
        };
        if !ok {
            return Err(Error::PreconditionFailed(format!(
                "diagonal entry {d} is not an admissible {variant:?} value"
            )));
        }
    }
    let am = Matrix::from_triangular(t, a);
    for i in 0..n {
        for j in i + 1..n {
            if diag[i] != diag[j] && !lr_surjective(base, am.get(i, i), am.get(j, j)) {
                return Err(Error::CompatibilityViolation { i: i + 1, j: j + 1 });
            }
        }
    }

    let mut e = Matrix::zero(base, n);
    for (i, &d) in diag.iter().enumerate() {
        e.set(i, i, d);
    }
    for dist in 1..n {
        for i in 0..n - dist {
            let j = i + dist;
            let sub_a = am.principal(i, j);
            let sub_e = e.principal(i, j);
            let z = match variant {
                Variant::Tripotent => {
                    let case = WorkhorseCase::from_corners(base, diag[i], diag[j])
                        .expect("diagonal checked above");
                    workhorse_z(base, case, &sub_a, &sub_e)?
                }
                Variant::Idempotent => workhorse_idempotent_z(base, &sub_a, &sub_e)?,
            };
            let z = z.ok_or(Error::LiftFailed {
                row: i + 1,
                col: j + 1,
            })?;
            e.set(i, j, z);
        }
    }

    if e.pow(base, variant.power()) != e || am.mul(base, &e) != e.mul(base, &am) {
        return Err(Error::InternalInvariant(format!(
            "lifted E = {e:?} is not a {variant:?} commuting with A"
        )));
    }
    e.to_triangular(t)
}

/// How the diagonal of `E` is chosen from the diagonal of `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalRule {
    /// `R/J ≅ Z_2`: `0` on `J`, `1` on `1 + J`.
    Idempotent,
    /// `R/J ≅ Z_3`: `0` on `J`, `1` on `1 + J`, `-1` on `-1 + J`.
    Tripotent,
}

/// `A = E + D` with `E³ = E`, `D ∈ J(T_n(R))` and `ED = DE`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdtRepresentation {
    pub e: Elem,
    pub d: Elem,
}

/// Builds SDT representations in `T_n(R)` for a local `R` that is bleached,
/// has `|R/J| ∈ {2, 3}`, and in the second case satisfies the Δ-shift
/// surjectivity condition.
#[derive(Debug, Clone)]
pub struct SdtBuilder {
    t: FiniteRing,
    base: FiniteRing,
    rule: DiagonalRule,
    minus_one: Elem,
}

impl SdtBuilder {
    pub fn new(t: &FiniteRing) -> Result<Self> {
        let (base, _) = t
            .as_upper_triangular()
            .ok_or_else(|| Error::InvalidArgument(format!("{} is not T_n(R)", t.name())))?;
        let fail = |what: &str| {
            Err(Error::PreconditionFailed(format!(
                "{}: {what}",
                base.name()
            )))
        };
        if !is_local(base)? {
            return fail("not local");
        }
        if !is_bleached(base)? {
            return fail("not bleached");
        }
        let (quotient, _) = Caps::default().quotient(base, jacobson_radical(base)?)?;
        let rule = match quotient.order() {
            2 => DiagonalRule::Idempotent,
            3 => {
                if !delta_shift_surjectivity(base) {
                    return fail("l_a - r_b is not onto for some a ∈ 1 + Δ, b ∈ -1 + Δ");
                }
                DiagonalRule::Tripotent
            }
            k => return fail(&format!("R/J has order {k}, not 2 or 3")),
        };
        Ok(SdtBuilder {
            t: t.clone(),
            base: base.clone(),
            rule,
            minus_one: base.neg(base.one()),
        })
    }

    pub fn rule(&self) -> DiagonalRule {
        self.rule
    }

    /// Diagonal of `E` for the matrix `a`.
    pub fn diagonal(&self, a: Elem) -> Result<Vec<Elem>> {
        let (base, n) = (&self.base, self.t.as_upper_triangular().unwrap().1);
        let j = jacobson_radical(base)?;
        (0..n)
            .map(|i| {
                let x = self.t.triangular_entry(a, i, i).unwrap();
                if j.contains(x) {
                    Ok(base.zero())
                } else if j.contains(base.sub(x, base.one())) {
                    Ok(base.one())
                } else if self.rule == DiagonalRule::Tripotent
                    && j.contains(base.sub(x, self.minus_one))
                {
                    Ok(self.minus_one)
                } else {
                    Err(Error::InternalInvariant(format!(
                        "diagonal entry {x} lies in no admissible coset of J"
                    )))
                }
            })
            .collect()
    }

    pub fn represent(&self, a: Elem) -> Result<SdtRepresentation> {
        let diag = self.diagonal(a)?;
        let e = lift_commuting_tripotent(&self.t, a, &diag)?;
        let d = self.t.sub(a, e);
        // J(T_n(R)) is the set of matrices whose diagonal lies in J(R).
        let j = jacobson_radical(&self.base)?;
        let n = diag.len();
        let in_radical = (0..n).all(|i| j.contains(self.t.triangular_entry(d, i, i).unwrap()));
        if !in_radical || !self.t.commute(e, d) {
            return Err(Error::InternalInvariant(format!(
                "representation of {a} in {} is invalid",
                self.t.name()
            )));
        }
        Ok(SdtRepresentation { e, d })
    }
}
