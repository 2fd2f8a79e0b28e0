use crate::error::{Error, Result};
use crate::invariants;
use crate::subset::ElementSubset;

use super::validate::{validate_ring, ValidationMode};
use super::{Elem, FiniteRing, Structure, Tables, DEFAULT_ORDER_CAP, DEFAULT_VALIDATION_CAP};

/// Size limits applied by every constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest order any constructed ring may have.
    pub order: usize,
    /// Largest order for which the cubic axiom loops run in full.
    pub validation: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: DEFAULT_ORDER_CAP,
            validation: DEFAULT_VALIDATION_CAP,
        }
    }
}

/// Wraps `s` in parentheses when it is a product, so it can be nested.
fn term(s: &str) -> String {
    if s.contains(" x ") && !(s.starts_with('(') && s.ends_with(')')) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

impl Caps {
    pub fn with_order_cap(order: usize) -> Self {
        Caps {
            order,
            ..Caps::default()
        }
    }

    fn checked_order(&self, base: usize, exponent: usize) -> Result<usize> {
        let overflow = Error::OrderOverflow { cap: self.order };
        let exp = u32::try_from(exponent).map_err(|_| overflow.clone())?;
        match base.checked_pow(exp) {
            Some(o) if o <= self.order => Ok(o),
            _ => Err(overflow),
        }
    }

    /// `Z_n`; `n = 1` gives the zero ring.
    pub fn zmod(&self, n: usize) -> Result<FiniteRing> {
        if n == 0 {
            return Err(Error::InvalidArgument("Z_n needs n >= 1".into()));
        }
        if n > self.order {
            return Err(Error::OrderOverflow { cap: self.order });
        }
        Ok(FiniteRing::assemble(
            format!("Z{n}"),
            n,
            0,
            1 % n,
            Structure::Zmod { modulus: n },
        ))
    }

    /// A ring given by explicit tables, validated before it is returned.
    pub fn table_ring(
        &self,
        name: &str,
        order: usize,
        add: &[Vec<Elem>],
        mul: &[Vec<Elem>],
        neg: &[Elem],
        zero: Elem,
        one: Elem,
    ) -> Result<FiniteRing> {
        if order == 0 {
            return Err(Error::InvalidArgument("order must be positive".into()));
        }
        if order > self.order {
            return Err(Error::OrderOverflow { cap: self.order });
        }
        let shape_ok = add.len() == order
            && mul.len() == order
            && neg.len() == order
            && add.iter().chain(mul).all(|row| row.len() == order);
        if !shape_ok {
            return Err(Error::InvalidArgument(format!(
                "tables must be {order}x{order} (add, mul) and length {order} (neg)"
            )));
        }
        let in_range = |v: &Elem| *v < order;
        if zero >= order || one >= order {
            return Err(Error::AxiomViolation {
                kind: "closure".into(),
                witness: vec![zero, one],
            });
        }
        for (i, row) in add.iter().enumerate() {
            if let Some(j) = row.iter().position(|v| !in_range(v)) {
                return Err(Error::AxiomViolation {
                    kind: "closure".into(),
                    witness: vec![i, j],
                });
            }
        }
        for (i, row) in mul.iter().enumerate() {
            if let Some(j) = row.iter().position(|v| !in_range(v)) {
                return Err(Error::AxiomViolation {
                    kind: "closure".into(),
                    witness: vec![i, j],
                });
            }
        }
        if let Some(i) = neg.iter().position(|v| !in_range(v)) {
            return Err(Error::AxiomViolation {
                kind: "closure".into(),
                witness: vec![i],
            });
        }
        let flat = |t: &[Vec<Elem>]| t.iter().flatten().map(|&v| v as u32).collect::<Vec<_>>();
        let tables = Tables::new(
            order,
            flat(add),
            flat(mul),
            neg.iter().map(|&v| v as u32).collect(),
        );
        let ring =
            FiniteRing::assemble(name.to_string(), order, zero, one, Structure::Table(tables));
        let mode = if order <= self.validation {
            ValidationMode::Full
        } else {
            ValidationMode::Sampled {
                samples: 200_000,
                seed: 0,
            }
        };
        let report = validate_ring(&ring, mode, self.validation)?;
        if let Some((axiom, witness)) = report.first_failure() {
            return Err(Error::AxiomViolation {
                kind: axiom.to_string(),
                witness: witness.to_vec(),
            });
        }
        Ok(ring)
    }

    /// `R × S`, encoded as `i_R + |R| * i_S`.
    pub fn product(&self, r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing> {
        let order = r
            .order()
            .checked_mul(s.order())
            .filter(|&o| o <= self.order)
            .ok_or(Error::OrderOverflow { cap: self.order })?;
        let q = r.order();
        Ok(FiniteRing::assemble(
            format!("{} x {}", r.name(), term(s.name())),
            order,
            r.zero() + q * s.zero(),
            r.one() + q * s.one(),
            Structure::Product {
                left: r.clone(),
                right: s.clone(),
            },
        ))
    }

    /// `T_n(R)`.
    pub fn upper_triangular(&self, base: &FiniteRing, n: usize) -> Result<FiniteRing> {
        if n == 0 {
            return Err(Error::InvalidArgument("T_n needs n >= 1".into()));
        }
        let q = base.order();
        let order = self.checked_order(q, n * (n + 1) / 2)?;
        let mut diag = vec![base.zero(); n * (n + 1) / 2];
        for i in 0..n {
            diag[super::tri_pos(n, i, i)] = base.one();
        }
        Ok(FiniteRing::assemble(
            format!("T{n}({})", base.name()),
            order,
            super::undigits(&vec![base.zero(); n * (n + 1) / 2], q),
            super::undigits(&diag, q),
            Structure::UpperTriangular {
                base: base.clone(),
                n,
            },
        ))
    }

    /// `M_n(R)`.
    pub fn full_matrix(&self, base: &FiniteRing, n: usize) -> Result<FiniteRing> {
        if n == 0 {
            return Err(Error::InvalidArgument("M_n needs n >= 1".into()));
        }
        let q = base.order();
        let order = self.checked_order(q, n * n)?;
        let mut id = vec![base.zero(); n * n];
        for i in 0..n {
            id[i * n + i] = base.one();
        }
        Ok(FiniteRing::assemble(
            format!("M{n}({})", base.name()),
            order,
            super::undigits(&vec![base.zero(); n * n], q),
            super::undigits(&id, q),
            Structure::FullMatrix {
                base: base.clone(),
                n,
            },
        ))
    }

    /// `T(R, R)`: pairs `(a, v)` with `(a,v)(b,w) = (ab, aw + vb)`.
    pub fn trivial_extension(&self, base: &FiniteRing) -> Result<FiniteRing> {
        let q = base.order();
        let order = self.checked_order(q, 2)?;
        Ok(FiniteRing::assemble(
            format!("TE({})", base.name()),
            order,
            base.zero() + q * base.zero(),
            base.one() + q * base.zero(),
            Structure::TrivialExtension { base: base.clone() },
        ))
    }

    /// `R[x]/(x^m)`.
    pub fn truncated_poly(&self, base: &FiniteRing, m: usize) -> Result<FiniteRing> {
        if m == 0 {
            return Err(Error::InvalidArgument("R[x]/(x^m) needs m >= 1".into()));
        }
        let q = base.order();
        let order = self.checked_order(q, m)?;
        let mut one = vec![base.zero(); m];
        one[0] = base.one();
        Ok(FiniteRing::assemble(
            format!("P{m}({})", base.name()),
            order,
            super::undigits(&vec![base.zero(); m], q),
            super::undigits(&one, q),
            Structure::TruncatedPoly {
                base: base.clone(),
                m,
            },
        ))
    }

    /// `R/I` together with the projection `R -> R/I`.
    ///
    /// Cosets are numbered in increasing order of their smallest member,
    /// which is also the representative used for arithmetic.
    pub fn quotient(
        &self,
        r: &FiniteRing,
        ideal: &ElementSubset,
    ) -> Result<(FiniteRing, Vec<Elem>)> {
        if !ideal.belongs_to(r) {
            return Err(Error::InvalidArgument(
                "ideal belongs to a different ring".into(),
            ));
        }
        check_ideal(r, ideal)?;
        let members = ideal.to_vec();
        let mut class_of = vec![u32::MAX; r.order()];
        let mut reps = Vec::with_capacity(r.order() / members.len());
        for x in 0..r.order() {
            if class_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &i in &members {
                class_of[r.add(x, i)] = c;
            }
        }
        let q = reps.len();
        let radical = match r.cache().jacobson.get() {
            Some(j) => ideal.is_subset(j),
            None => ideal.len() == 1,
        };
        // Arithmetic on representatives must not depend on the representative.
        for (ci, &x) in reps.iter().enumerate() {
            for &y in &reps {
                let sum = class_of[r.add(x, y)];
                let prod = class_of[r.mul(x, y)];
                for &i in &members {
                    let xi = r.add(x, i);
                    if class_of[r.add(xi, y)] != sum
                        || class_of[r.mul(xi, y)] != prod
                        || class_of[r.mul(y, xi)] != class_of[r.mul(y, x)]
                    {
                        return Err(Error::InternalInvariant(format!(
                            "coset arithmetic not well defined at class {ci}"
                        )));
                    }
                }
            }
        }
        let ring = FiniteRing::assemble(
            format!("{}/I", term(r.name())),
            q,
            class_of[r.zero()] as Elem,
            class_of[r.one()] as Elem,
            Structure::Quotient {
                parent: r.clone(),
                reps,
                class_of: class_of.clone(),
                radical,
            },
        );
        Ok((ring, class_of.into_iter().map(|c| c as Elem).collect()))
    }

    /// The corner ring `eRe` with identity `e`.
    pub fn corner(&self, r: &FiniteRing, e: Elem) -> Result<FiniteRing> {
        if e >= r.order() {
            return Err(Error::InvalidArgument(format!("element {e} out of range")));
        }
        if r.mul(e, e) != e {
            return Err(Error::NotIdempotent(e));
        }
        let mut seen = vec![false; r.order()];
        for x in 0..r.order() {
            seen[r.mul(r.mul(e, x), e)] = true;
        }
        let members: Vec<Elem> = (0..r.order()).filter(|&x| seen[x]).collect();
        let mut index_of = vec![u32::MAX; r.order()];
        for (i, &m) in members.iter().enumerate() {
            index_of[m] = i as u32;
        }
        Ok(FiniteRing::assemble(
            format!("corner({}, {e})", r.name()),
            members.len(),
            index_of[r.zero()] as Elem,
            index_of[e] as Elem,
            Structure::Corner {
                parent: r.clone(),
                idempotent: e,
                complement: r.sub(r.one(), e),
                members,
                index_of,
            },
        ))
    }
}

pub(crate) fn check_ideal(r: &FiniteRing, ideal: &ElementSubset) -> Result<()> {
    match invariants::ideal_violation(r, ideal) {
        Some(pair) => Err(Error::NotAnIdeal { pair }),
        None => Ok(()),
    }
}

/// The field with four elements `{0, 1, ω, ω+1}` indexed `0..4`, `ω² = ω + 1`.
pub fn gf4() -> FiniteRing {
    let add: Vec<Vec<Elem>> = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
    // ω = 2, ω+1 = 3 in the bit encoding; multiply as polynomials mod ω²+ω+1.
    let mul_poly = |x: Elem, y: Elem| {
        let mut p = 0usize;
        for bit in 0..2 {
            if y >> bit & 1 == 1 {
                p ^= x << bit;
            }
        }
        if p & 4 != 0 {
            p ^= 0b111;
        }
        p
    };
    let mul: Vec<Vec<Elem>> = (0..4)
        .map(|x| (0..4).map(|y| mul_poly(x, y)).collect())
        .collect();
    let neg: Vec<Elem> = (0..4).collect();
    Caps::default()
        .table_ring("GF4", 4, &add, &mul, &neg, 0, 1)
        .expect("GF(4) tables are a field")
}
