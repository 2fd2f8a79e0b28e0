//! The `(1, n)` entry of a tripotent (or idempotent) commuting with `A`,
//! given all its other entries.
//!
//! Write `A` and `E` in block form with corners `a, c, b` / `e, z, f`,
//! border rows `α`, `γ`, border columns `β`, `δ` and inner blocks `B`, `F`.
//! Then
//!
//! ```text
//! (E³)_{1n}      = z(e² + ef + f²) + γδ(e + f) + γFδ
//! (AE - EA)_{1n} = az - zb + αδ - γβ + cf - ec
//! ```
//!
//! so for diagonal corners in `{0, 1, -1}` each case is either a closed
//! form for `z` or a Sylvester equation `az - zb = γβ - αδ + (ec - cf)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::is_unit;
use crate::ring::{Elem, FiniteRing};

use super::{dot, row_times, sylvester_solve, BlockView, Matrix};

/// Whether `E` is built as a tripotent or as an idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Tripotent,
    Idempotent,
}

impl Variant {
    pub fn power(self) -> u32 {
        match self {
            Variant::Tripotent => 3,
            Variant::Idempotent => 2,
        }
    }
}

/// The nine corner patterns `(e, f)` of a tripotent with entries in `{0, 1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WorkhorseCase {
    /// `(1, 1)`
    I,
    /// `(-1, -1)`
    II,
    /// `(0, 0)`
    III,
    /// `(1, -1)`
    IV,
    /// `(-1, 1)`
    V,
    /// `(1, 0)`
    VI,
    /// `(0, 1)`
    VII,
    /// `(-1, 0)`
    VIII,
    /// `(0, -1)`
    W,
}

impl WorkhorseCase {
    pub const ALL: [WorkhorseCase; 9] = [
        WorkhorseCase::I,
        WorkhorseCase::II,
        WorkhorseCase::III,
        WorkhorseCase::IV,
        WorkhorseCase::V,
        WorkhorseCase::VI,
        WorkhorseCase::VII,
        WorkhorseCase::VIII,
        WorkhorseCase::W,
    ];

    pub fn signs(self) -> (i8, i8) {
        match self {
            WorkhorseCase::I => (1, 1),
            WorkhorseCase::II => (-1, -1),
            WorkhorseCase::III => (0, 0),
            WorkhorseCase::IV => (1, -1),
            WorkhorseCase::V => (-1, 1),
            WorkhorseCase::VI => (1, 0),
            WorkhorseCase::VII => (0, 1),
            WorkhorseCase::VIII => (-1, 0),
            WorkhorseCase::W => (0, -1),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            WorkhorseCase::I => "i",
            WorkhorseCase::II => "ii",
            WorkhorseCase::III => "iii",
            WorkhorseCase::IV => "iv",
            WorkhorseCase::V => "v",
            WorkhorseCase::VI => "vi",
            WorkhorseCase::VII => "vii",
            WorkhorseCase::VIII => "viii",
            WorkhorseCase::W => "w",
        }
    }

    pub fn from_signs(e: i8, f: i8) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.signs() == (e, f))
    }

    /// The case for corner values `e`, `f` of a ring where `1 ≠ -1`.
    pub fn from_corners(r: &FiniteRing, e: Elem, f: Elem) -> Option<Self> {
        Self::from_signs(sign_of(r, e)?, sign_of(r, f)?)
    }

    /// Closed-form cases; the rest go through a Sylvester equation.
    pub fn is_closed_form(self) -> bool {
        matches!(
            self,
            WorkhorseCase::I | WorkhorseCase::II | WorkhorseCase::III
        )
    }

    /// Cases whose derivation divides by 2 or cancels `2γFδ`.
    pub fn needs_two_unit(self) -> bool {
        matches!(
            self,
            WorkhorseCase::I | WorkhorseCase::II | WorkhorseCase::IV | WorkhorseCase::V
        )
    }
}

/// Corner patterns of an idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdempotentCase {
    OneOne,
    ZeroZero,
    OneZero,
    ZeroOne,
}

impl IdempotentCase {
    pub fn from_corners(r: &FiniteRing, e: Elem, f: Elem) -> Option<Self> {
        let bit = |x: Elem| {
            if x == r.zero() {
                Some(0)
            } else if x == r.one() {
                Some(1)
            } else {
                None
            }
        };
        Some(match (bit(e)?, bit(f)?) {
            (1, 1) => IdempotentCase::OneOne,
            (0, 0) => IdempotentCase::ZeroZero,
            (1, 0) => IdempotentCase::OneZero,
            _ => IdempotentCase::ZeroOne,
        })
    }
}

pub(crate) fn sign_of(r: &FiniteRing, x: Elem) -> Option<i8> {
    if x == r.zero() {
        Some(0)
    } else if x == r.one() {
        Some(1)
    } else if x == r.neg(r.one()) {
        Some(-1)
    } else {
        None
    }
}

pub(crate) fn sign_elem(r: &FiniteRing, s: i8) -> Elem {
    match s {
        0 => r.zero(),
        1 => r.one(),
        _ => r.neg(r.one()),
    }
}

/// First `(i, j) ≠ (1, n)` (one-based) where `E^p = E` or `AE = EA` fails.
fn hypothesis_violation(r: &FiniteRing, a: &Matrix, e: &Matrix, p: u32) -> Option<(usize, usize)> {
    let n = a.size();
    let ep = e.pow(r, p);
    let ae = a.mul(r, e);
    let ea = e.mul(r, a);
    for i in 0..n {
        for j in i..n {
            if (i, j) == (0, n - 1) {
                continue;
            }
            if ep.get(i, j) != e.get(i, j) || ae.get(i, j) != ea.get(i, j) {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

/// Pieces of the `(1, n)` equations shared by every case.
struct Terms {
    a: Elem,
    b: Elem,
    c: Elem,
    /// `γFδ`
    gfd: Elem,
    /// `γδ`
    gd: Elem,
    /// `γβ - αδ`
    border: Elem,
}

fn terms(r: &FiniteRing, a: &Matrix, e: &Matrix) -> Terms {
    let ab = BlockView::of(a);
    let eb = BlockView::of(e);
    let gf = row_times(r, &eb.top_row, &eb.inner);
    Terms {
        a: ab.top_left,
        b: ab.bottom_right,
        c: ab.top_right,
        gfd: dot(r, &gf, &eb.right_col),
        gd: dot(r, &eb.top_row, &eb.right_col),
        border: r.sub(
            dot(r, &eb.top_row, &ab.right_col),
            dot(r, &ab.top_row, &eb.right_col),
        ),
    }
}

fn check_shape(a: &Matrix, e: &Matrix) -> Result<()> {
    if a.size() != e.size() || a.size() < 2 {
        return Err(Error::InvalidArgument(format!(
            "workhorse needs two matrices of the same size >= 2, got {} and {}",
            a.size(),
            e.size()
        )));
    }
    Ok(())
}

/// Checks `E^p = E` and `AE = EA` for the completed matrix.
fn post_verify(r: &FiniteRing, a: &Matrix, e: &Matrix, p: u32, what: &str) -> Result<()> {
    if e.pow(r, p) != *e {
        return Err(Error::InternalInvariant(format!(
            "{what}: E^{p} != E for E = {e:?}"
        )));
    }
    if a.mul(r, e) != e.mul(r, a) {
        return Err(Error::InternalInvariant(format!(
            "{what}: AE != EA for A = {a:?}, E = {e:?}"
        )));
    }
    Ok(())
}

/// The `(1, n)` entry `z` making `E` a tripotent commuting with `A`.
///
/// `E`'s own `(1, n)` entry is ignored. Returns `None` when the case's
/// Sylvester equation has no solution; the smallest solution is used
/// otherwise. Every returned `z` has been checked by direct multiplication.
pub fn workhorse_z(
    r: &FiniteRing,
    case: WorkhorseCase,
    a: &Matrix,
    e: &Matrix,
) -> Result<Option<Elem>> {
    check_shape(a, e)?;
    let n = a.size();
    let (se, sf) = case.signs();
    if e.get(0, 0) != sign_elem(r, se) || e.get(n - 1, n - 1) != sign_elem(r, sf) {
        return Err(Error::InvalidArgument(format!(
            "corners of E do not match case ({})",
            case.label()
        )));
    }
    let two = r.from_int(2);
    if case.needs_two_unit() && !is_unit(r, two) {
        return Err(Error::TwoNotUnit);
    }
    if let Some((row, col)) = hypothesis_violation(r, a, e, 3) {
        return Err(Error::HypothesisViolation { row, col });
    }
    let t = terms(r, a, e);
    let half = || {
        (0..r.order())
            .find(|&h| r.mul(h, two) == r.one())
            .expect("2 is a unit")
    };
    let two_gd = r.add(t.gd, t.gd);
    let two_c = r.add(t.c, t.c);
    let z = match case {
        WorkhorseCase::I => Some(r.neg(r.mul(half(), r.add(t.gfd, two_gd)))),
        WorkhorseCase::II => Some(r.neg(r.mul(half(), r.sub(t.gfd, two_gd)))),
        WorkhorseCase::III => Some(t.gfd),
        WorkhorseCase::IV => sylvester_solve(r, t.a, t.b, r.add(t.border, two_c)),
        WorkhorseCase::V => sylvester_solve(r, t.a, t.b, r.sub(t.border, two_c)),
        WorkhorseCase::VI | WorkhorseCase::W => sylvester_solve(r, t.a, t.b, r.add(t.border, t.c)),
        WorkhorseCase::VII | WorkhorseCase::VIII => {
            sylvester_solve(r, t.a, t.b, r.sub(t.border, t.c))
        }
    };
    if let Some(z) = z {
        let mut full = e.clone();
        full.set(0, n - 1, z);
        post_verify(
            r,
            a,
            &full,
            3,
            &format!("workhorse case ({})", case.label()),
        )?;
    }
    Ok(z)
}

/// The idempotent analogue: `z` making `E` an idempotent commuting with `A`.
///
/// `(1,1)` gives `z = -γδ`, `(0,0)` gives `z = γδ`, and the mixed corners
/// solve `az - zb = γβ - αδ ± c`.
pub fn workhorse_idempotent_z(r: &FiniteRing, a: &Matrix, e: &Matrix) -> Result<Option<Elem>> {
    check_shape(a, e)?;
    let n = a.size();
    let case = IdempotentCase::from_corners(r, e.get(0, 0), e.get(n - 1, n - 1))
        .ok_or_else(|| Error::InvalidArgument("corners of E must be 0 or 1".into()))?;
    if let Some((row, col)) = hypothesis_violation(r, a, e, 2) {
        return Err(Error::HypothesisViolation { row, col });
    }
    let t = terms(r, a, e);
    let z = match case {
        IdempotentCase::OneOne => Some(r.neg(t.gd)),
        IdempotentCase::ZeroZero => Some(t.gd),
        IdempotentCase::OneZero => sylvester_solve(r, t.a, t.b, r.add(t.border, t.c)),
        IdempotentCase::ZeroOne => sylvester_solve(r, t.a, t.b, r.sub(t.border, t.c)),
    };
    if let Some(z) = z {
        let mut full = e.clone();
        full.set(0, n - 1, z);
        post_verify(r, a, &full, 2, "idempotent workhorse")?;
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Caps;

    fn z9() -> FiniteRing {
        Caps::default().zmod(9).unwrap()
    }

    #[test]
    fn case_i_example() {
        let r = z9();
        let a = Matrix::identity(&r, 3);
        let e = Matrix::from_rows(&[vec![1, 1, 0], vec![0, 0, 1], vec![0, 0, 1]]);
        let z = workhorse_z(&r, WorkhorseCase::I, &a, &e).unwrap();
        assert_eq!(z, Some(8));
    }

    #[test]
    fn case_iii_zero_row() {
        let r = z9();
        let a = Matrix::from_rows(&[vec![4, 0, 5], vec![0, 3, 0], vec![0, 0, 6]]);
        let e = Matrix::zero(&r, 3);
        assert_eq!(
            workhorse_z(&r, WorkhorseCase::III, &a, &e).unwrap(),
            Some(0)
        );
    }

    #[test]
    fn case_iv_diagonal() {
        let r = z9();
        let a = Matrix::from_rows(&[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 8]]);
        let e = Matrix::from_rows(&[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 8]]);
        assert_eq!(workhorse_z(&r, WorkhorseCase::IV, &a, &e).unwrap(), Some(0));
    }

    #[test]
    fn hypothesis_and_unit_checks() {
        let r = z9();
        let a = Matrix::identity(&r, 3);
        // (1,2) entry of E breaks E³ = E when F = 1 and e = 1.
        let e = Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(
            workhorse_z(&r, WorkhorseCase::I, &a, &e),
            Err(Error::HypothesisViolation { row: 1, col: 2 })
        );
        let z4 = Caps::default().zmod(4).unwrap();
        let a = Matrix::identity(&z4, 2);
        let e = Matrix::identity(&z4, 2);
        assert_eq!(
            workhorse_z(&z4, WorkhorseCase::I, &a, &e),
            Err(Error::TwoNotUnit)
        );
    }

    #[test]
    fn cases_are_distinct() {
        let r = z9();
        for case in WorkhorseCase::ALL {
            let (e, f) = case.signs();
            let got = WorkhorseCase::from_corners(&r, sign_elem(&r, e), sign_elem(&r, f));
            assert_eq!(got, Some(case));
        }
    }

    #[test]
    fn idempotent_branch_over_z4() {
        let r = Caps::default().zmod(4).unwrap();
        let a = Matrix::from_rows(&[vec![1, 2], vec![0, 2]]);
        let e = Matrix::from_rows(&[vec![1, 0], vec![0, 0]]);
        let z = workhorse_idempotent_z(&r, &a, &e).unwrap().unwrap();
        let mut full = e.clone();
        full.set(0, 1, z);
        assert_eq!(full.mul(&r, &full), full);
        assert_eq!(a.mul(&r, &full), full.mul(&r, &a));
    }
}
