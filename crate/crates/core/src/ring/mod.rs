//! The finite-ring abstraction and its canonical element encodings.
//!
//! Every ring is a handle around immutable arithmetic data. Elements are
//! plain indices `0..order`. Structured rings (products, matrix rings,
//! extensions) compute their operations from the base ring through a
//! mixed-radix encoding that is part of the public contract:
//!
//! | structure          | digits (least significant first)                  |
//! |--------------------|---------------------------------------------------|
//! | `zmod`             | the residue itself                                |
//! | `product`          | `i_R + |R| * i_S`                                 |
//! | `upper_triangular` | `(1,1),(1,2),…,(1,n),(2,2),…,(n,n)`, base `|R|`   |
//! | `full_matrix`      | row-major `(1,1),(1,2),…,(n,n)`, base `|R|`        |
//! | `trivial_extension`| `a + |R| * v` for the pair `(a, v)`               |
//! | `truncated_poly`   | coefficients `c_0, c_1, …, c_{m-1}`, base `|R|`    |
//! | `quotient`         | cosets numbered by their smallest representative |
//! | `corner`           | members of `eRe` in ascending parent index        |
//!
//! Rings of order at most [`TABLE_THRESHOLD`] additionally materialize
//! their addition and multiplication tables on construction.

mod build;
mod validate;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::subset::ElementSubset;

pub use build::{gf4, Caps};
pub use validate::{validate_ring, Axiom, AxiomCheck, Outcome, ValidationMode, ValidationReport};

/// Index of an element inside its ring.
pub type Elem = usize;

pub const DEFAULT_ORDER_CAP: usize = 1 << 20;
pub const DEFAULT_VALIDATION_CAP: usize = 512;
pub const TABLE_THRESHOLD: usize = 1024;

pub(crate) type Digits = SmallVec<[Elem; 24]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureTag {
    Zmod,
    Table,
    Product,
    UpperTriangular,
    FullMatrix,
    TrivialExtension,
    TruncatedPoly,
    Quotient,
    Corner,
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureTag::Zmod => "zmod",
            StructureTag::Table => "table",
            StructureTag::Product => "product",
            StructureTag::UpperTriangular => "upper_triangular",
            StructureTag::FullMatrix => "full_matrix",
            StructureTag::TrivialExtension => "trivial_extension",
            StructureTag::TruncatedPoly => "truncated_poly",
            StructureTag::Quotient => "quotient",
            StructureTag::Corner => "corner",
        };
        f.write_str(s)
    }
}

/// Decoded form of an element, one variant per encoding family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coordinates {
    /// Residue or table index.
    Scalar(Elem),
    /// Product components `(r, s)` or trivial-extension pair `(a, v)`.
    Pair(Elem, Elem),
    /// Matrix entries or polynomial coefficients in encoding order.
    Digits(Vec<Elem>),
    /// Representative (quotient) or member (corner) in the parent ring.
    Parent(Elem),
}

#[derive(Clone)]
pub(crate) struct Tables {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

impl Tables {
    pub(crate) fn new(order: usize, add: Vec<u32>, mul: Vec<u32>, neg: Vec<u32>) -> Self {
        Tables {
            order,
            add,
            mul,
            neg,
        }
    }
}

pub(crate) enum Structure {
    Zmod {
        modulus: usize,
    },
    Table(Tables),
    Product {
        left: FiniteRing,
        right: FiniteRing,
    },
    UpperTriangular {
        base: FiniteRing,
        n: usize,
    },
    FullMatrix {
        base: FiniteRing,
        n: usize,
    },
    TrivialExtension {
        base: FiniteRing,
    },
    TruncatedPoly {
        base: FiniteRing,
        m: usize,
    },
    Quotient {
        parent: FiniteRing,
        reps: Vec<Elem>,
        class_of: Vec<u32>,
        /// Set when the ideal is known to sit inside J(parent).
        radical: bool,
    },
    Corner {
        parent: FiniteRing,
        idempotent: Elem,
        /// `1 - e` in the parent.
        complement: Elem,
        members: Vec<Elem>,
        index_of: Vec<u32>,
    },
}

/// Per-ring memo of the structural subsets.
#[derive(Default)]
pub(crate) struct Cache {
    pub(crate) units: OnceLock<ElementSubset>,
    pub(crate) jacobson: OnceLock<ElementSubset>,
    pub(crate) delta: OnceLock<ElementSubset>,
    pub(crate) nilpotents: OnceLock<ElementSubset>,
    pub(crate) idempotents: OnceLock<ElementSubset>,
    pub(crate) tripotents: OnceLock<ElementSubset>,
    pub(crate) center: OnceLock<ElementSubset>,
    pub(crate) generators: OnceLock<Vec<Elem>>,
}

struct Inner {
    id: u64,
    name: String,
    order: usize,
    zero: Elem,
    one: Elem,
    structure: Structure,
    tables: Option<Tables>,
    cache: Cache,
}

/// A finite unital ring. Cloning is cheap; the ring itself is immutable.
#[derive(Clone)]
pub struct FiniteRing(Arc<Inner>);

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

impl FiniteRing {
    pub(crate) fn assemble(
        name: String,
        order: usize,
        zero: Elem,
        one: Elem,
        structure: Structure,
    ) -> FiniteRing {
        let ring = FiniteRing(Arc::new(Inner {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name,
            order,
            zero,
            one,
            structure,
            tables: None,
            cache: Cache::default(),
        }));
        let materialize = order <= TABLE_THRESHOLD
            && !matches!(
                ring.0.structure,
                Structure::Zmod { .. } | Structure::Table(_)
            );
        if !materialize {
            return ring;
        }
        let tables = ring.materialize();
        let mut inner = match Arc::try_unwrap(ring.0) {
            Ok(inner) => inner,
            Err(_) => unreachable!("freshly assembled ring is not shared"),
        };
        inner.tables = Some(tables);
        FiniteRing(Arc::new(inner))
    }

    fn materialize(&self) -> Tables {
        let n = self.order();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                add.push(self.add(x, y) as u32);
                mul.push(self.mul(x, y) as u32);
            }
        }
        let neg = (0..n).map(|x| self.neg(x) as u32).collect();
        Tables::new(n, add, mul, neg)
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn zero(&self) -> Elem {
        self.0.zero
    }

    pub fn one(&self) -> Elem {
        self.0.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.0.order == 1
    }

    pub fn tag(&self) -> StructureTag {
        match &self.0.structure {
            Structure::Zmod { .. } => StructureTag::Zmod,
            Structure::Table(_) => StructureTag::Table,
            Structure::Product { .. } => StructureTag::Product,
            Structure::UpperTriangular { .. } => StructureTag::UpperTriangular,
            Structure::FullMatrix { .. } => StructureTag::FullMatrix,
            Structure::TrivialExtension { .. } => StructureTag::TrivialExtension,
            Structure::TruncatedPoly { .. } => StructureTag::TruncatedPoly,
            Structure::Quotient { .. } => StructureTag::Quotient,
            Structure::Corner { .. } => StructureTag::Corner,
        }
    }

    pub(crate) fn cache(&self) -> &Cache {
        &self.0.cache
    }

    /// Parent ring and idempotent when this is a corner ring `eRe`.
    pub fn as_corner(&self) -> Option<(&FiniteRing, Elem)> {
        match &self.0.structure {
            Structure::Corner {
                parent, idempotent, ..
            } => Some((parent, *idempotent)),
            _ => None,
        }
    }

    /// Parent-ring element behind a quotient class or corner member.
    pub fn parent_element(&self, x: Elem) -> Option<Elem> {
        match &self.0.structure {
            Structure::Quotient { reps, .. } => Some(reps[x]),
            Structure::Corner { members, .. } => Some(members[x]),
            _ => None,
        }
    }

    /// Machine-readable description of the element encoding, recursively
    /// including the encodings of the constituent rings.
    pub fn encoding(&self) -> serde_json::Value {
        use serde_json::json;
        let mut v = json!({
            "name": self.name(),
            "order": self.order(),
            "structure": self.tag(),
            "zero": self.zero(),
            "one": self.one(),
        });
        let extra = match &self.0.structure {
            Structure::Zmod { modulus } => json!({
                "modulus": modulus,
                "index": "residue",
            }),
            Structure::Table(_) => json!({ "index": "table row" }),
            Structure::Product { left, right } => json!({
                "index": "i_left + |left| * i_right",
                "left": left.encoding(),
                "right": right.encoding(),
            }),
            Structure::UpperTriangular { base, n } => {
                let positions: Vec<[usize; 2]> = (0..*n)
                    .flat_map(|i| (i..*n).map(move |j| [i + 1, j + 1]))
                    .collect();
                json!({
                    "index": "mixed radix, least significant digit first",
                    "radix": base.order(),
                    "n": n,
                    "digits": positions,
                    "base": base.encoding(),
                })
            }
            Structure::FullMatrix { base, n } => {
                let positions: Vec<[usize; 2]> = (0..*n)
                    .flat_map(|i| (0..*n).map(move |j| [i + 1, j + 1]))
                    .collect();
                json!({
                    "index": "mixed radix, least significant digit first",
                    "radix": base.order(),
                    "n": n,
                    "digits": positions,
                    "base": base.encoding(),
                })
            }
            Structure::TrivialExtension { base } => json!({
                "index": "a + |base| * v for the pair (a, v)",
                "base": base.encoding(),
            }),
            Structure::TruncatedPoly { base, m } => json!({
                "index": "mixed radix over coefficients c_0 .. c_{m-1}, least significant first",
                "radix": base.order(),
                "m": m,
                "base": base.encoding(),
            }),
            Structure::Quotient { parent, reps, .. } => json!({
                "index": "cosets by increasing smallest representative",
                "representatives": reps,
                "parent": parent.encoding(),
            }),
            Structure::Corner {
                parent,
                idempotent,
                members,
                ..
            } => json!({
                "index": "members of eRe by increasing parent index",
                "idempotent": idempotent,
                "members": members,
                "parent": parent.encoding(),
            }),
        };
        if let (Some(obj), serde_json::Value::Object(more)) = (v.as_object_mut(), extra) {
            obj.extend(more);
        }
        v
    }

    /// Base ring and dimension when this is `T_n(R)`.
    pub fn as_upper_triangular(&self) -> Option<(&FiniteRing, usize)> {
        match &self.0.structure {
            Structure::UpperTriangular { base, n } => Some((base, *n)),
            _ => None,
        }
    }

    /// Factors when this is a direct product.
    pub fn as_product(&self) -> Option<(&FiniteRing, &FiniteRing)> {
        match &self.0.structure {
            Structure::Product { left, right } => Some((left, right)),
            _ => None,
        }
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        if let Some(t) = &self.0.tables {
            return t.add[x * t.order + y] as Elem;
        }
        match &self.0.structure {
            Structure::Zmod { modulus } => {
                let s = x + y;
                if s >= *modulus {
                    s - modulus
                } else {
                    s
                }
            }
            Structure::Table(t) => t.add[x * t.order + y] as Elem,
            Structure::Product { left, right } => {
                let q = left.order();
                let l = left.add(x % q, y % q);
                let r = right.add(x / q, y / q);
                l + q * r
            }
            Structure::UpperTriangular { base, .. }
            | Structure::FullMatrix { base, .. }
            | Structure::TrivialExtension { base }
            | Structure::TruncatedPoly { base, .. } => {
                let q = base.order();
                let len = self.digit_len();
                let a = digits(x, q, len);
                let b = digits(y, q, len);
                let sum: Digits = a.iter().zip(&b).map(|(&u, &v)| base.add(u, v)).collect();
                undigits(&sum, q)
            }
            Structure::Quotient {
                parent,
                reps,
                class_of,
                ..
            } => class_of[parent.add(reps[x], reps[y])] as Elem,
            Structure::Corner {
                parent,
                members,
                index_of,
                ..
            } => index_of[parent.add(members[x], members[y])] as Elem,
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        if let Some(t) = &self.0.tables {
            return t.neg[x] as Elem;
        }
        match &self.0.structure {
            Structure::Zmod { modulus } => {
                if x == 0 {
                    0
                } else {
                    modulus - x
                }
            }
            Structure::Table(t) => t.neg[x] as Elem,
            Structure::Product { left, right } => {
                let q = left.order();
                left.neg(x % q) + q * right.neg(x / q)
            }
            Structure::UpperTriangular { base, .. }
            | Structure::FullMatrix { base, .. }
            | Structure::TrivialExtension { base }
            | Structure::TruncatedPoly { base, .. } => {
                let q = base.order();
                let a = digits(x, q, self.digit_len());
                let n: Digits = a.iter().map(|&u| base.neg(u)).collect();
                undigits(&n, q)
            }
            Structure::Quotient {
                parent,
                reps,
                class_of,
                ..
            } => class_of[parent.neg(reps[x])] as Elem,
            Structure::Corner {
                parent,
                members,
                index_of,
                ..
            } => index_of[parent.neg(members[x])] as Elem,
        }
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if let Some(t) = &self.0.tables {
            return t.mul[x * t.order + y] as Elem;
        }
        match &self.0.structure {
            Structure::Zmod { modulus } => (x * y) % modulus,
            Structure::Table(t) => t.mul[x * t.order + y] as Elem,
            Structure::Product { left, right } => {
                let q = left.order();
                left.mul(x % q, y % q) + q * right.mul(x / q, y / q)
            }
            Structure::UpperTriangular { base, n } => {
                let q = base.order();
                let len = self.digit_len();
                let a = digits(x, q, len);
                let b = digits(y, q, len);
                let n = *n;
                let mut c: Digits = smallvec::smallvec![base.zero(); len];
                for i in 0..n {
                    for j in i..n {
                        let mut acc = base.zero();
                        for k in i..=j {
                            let p = base.mul(a[tri_pos(n, i, k)], b[tri_pos(n, k, j)]);
                            acc = base.add(acc, p);
                        }
                        c[tri_pos(n, i, j)] = acc;
                    }
                }
                undigits(&c, q)
            }
            Structure::FullMatrix { base, n } => {
                let q = base.order();
                let n = *n;
                let a = digits(x, q, n * n);
                let b = digits(y, q, n * n);
                let mut c: Digits = smallvec::smallvec![base.zero(); n * n];
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = base.zero();
                        for k in 0..n {
                            acc = base.add(acc, base.mul(a[i * n + k], b[k * n + j]));
                        }
                        c[i * n + j] = acc;
                    }
                }
                undigits(&c, q)
            }
            Structure::TrivialExtension { base } => {
                let q = base.order();
                let (a, v) = (x % q, x / q);
                let (b, w) = (y % q, y / q);
                let first = base.mul(a, b);
                let second = base.add(base.mul(a, w), base.mul(v, b));
                first + q * second
            }
            Structure::TruncatedPoly { base, m } => {
                let q = base.order();
                let m = *m;
                let a = digits(x, q, m);
                let b = digits(y, q, m);
                let mut c: Digits = smallvec::smallvec![base.zero(); m];
                for i in 0..m {
                    if a[i] == base.zero() {
                        continue;
                    }
                    for j in 0..m - i {
                        c[i + j] = base.add(c[i + j], base.mul(a[i], b[j]));
                    }
                }
                undigits(&c, q)
            }
            Structure::Quotient {
                parent,
                reps,
                class_of,
                ..
            } => class_of[parent.mul(reps[x], reps[y])] as Elem,
            Structure::Corner {
                parent,
                members,
                index_of,
                ..
            } => index_of[parent.mul(members[x], members[y])] as Elem,
        }
    }

    /// `x^k` by repeated squaring; `x^0 = 1`.
    pub fn pow(&self, x: Elem, mut k: u64) -> Elem {
        let mut acc = self.one();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// `k · 1`, the image of the integer `k` (reduced modulo nothing).
    pub fn from_int(&self, k: i64) -> Elem {
        let mut acc = self.zero();
        let mut step = if k >= 0 {
            self.one()
        } else {
            self.neg(self.one())
        };
        let mut m = k.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(acc, step);
            }
            m >>= 1;
            step = self.add(step, step);
        }
        acc
    }

    /// `k · x` for a non-negative integer `k`.
    pub fn scale(&self, k: u64, x: Elem) -> Elem {
        let mut acc = self.zero();
        let mut step = x;
        let mut m = k;
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(acc, step);
            }
            m >>= 1;
            step = self.add(step, step);
        }
        acc
    }

    #[inline]
    pub fn commute(&self, x: Elem, y: Elem) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// Structural unit test, when the constructor provides one.
    pub fn is_unit_fast(&self, x: Elem) -> Option<bool> {
        match &self.0.structure {
            Structure::Zmod { modulus } => Some(*modulus == 1 || gcd(x, *modulus) == 1),
            Structure::Product { left, right } => {
                let q = left.order();
                let l = crate::invariants::is_unit(left, x % q);
                let r = crate::invariants::is_unit(right, x / q);
                Some(l && r)
            }
            Structure::UpperTriangular { base, n } => {
                let q = base.order();
                let a = digits(x, q, self.digit_len());
                Some((0..*n).all(|i| crate::invariants::is_unit(base, a[tri_pos(*n, i, i)])))
            }
            Structure::TrivialExtension { base } => {
                Some(crate::invariants::is_unit(base, x % base.order()))
            }
            Structure::TruncatedPoly { base, .. } => {
                Some(crate::invariants::is_unit(base, x % base.order()))
            }
            Structure::Quotient {
                parent,
                reps,
                radical: true,
                ..
            } => Some(crate::invariants::is_unit(parent, reps[x])),
            Structure::Corner {
                parent,
                complement,
                members,
                ..
            } => Some(crate::invariants::is_unit(
                parent,
                parent.add(members[x], *complement),
            )),
            Structure::Table(_) | Structure::FullMatrix { .. } | Structure::Quotient { .. } => None,
        }
    }

    pub(crate) fn digit_len(&self) -> usize {
        match &self.0.structure {
            Structure::UpperTriangular { n, .. } => n * (n + 1) / 2,
            Structure::FullMatrix { n, .. } => n * n,
            Structure::TrivialExtension { .. } => 2,
            Structure::TruncatedPoly { m, .. } => *m,
            _ => 1,
        }
    }

    pub fn decode(&self, x: Elem) -> Coordinates {
        assert!(x < self.order(), "element {x} out of range");
        match &self.0.structure {
            Structure::Zmod { .. } | Structure::Table(_) => Coordinates::Scalar(x),
            Structure::Product { left, .. } => {
                let q = left.order();
                Coordinates::Pair(x % q, x / q)
            }
            Structure::TrivialExtension { base } => {
                let q = base.order();
                Coordinates::Pair(x % q, x / q)
            }
            Structure::UpperTriangular { base, .. }
            | Structure::FullMatrix { base, .. }
            | Structure::TruncatedPoly { base, .. } => {
                Coordinates::Digits(digits(x, base.order(), self.digit_len()).to_vec())
            }
            Structure::Quotient { reps, .. } => Coordinates::Parent(reps[x]),
            Structure::Corner { members, .. } => Coordinates::Parent(members[x]),
        }
    }

    pub fn encode(&self, c: &Coordinates) -> Result<Elem> {
        let bad =
            || Error::InvalidArgument(format!("coordinates {c:?} do not fit {}", self.name()));
        let x = match (&self.0.structure, c) {
            (Structure::Zmod { .. } | Structure::Table(_), Coordinates::Scalar(x)) => *x,
            (Structure::Product { left, right }, Coordinates::Pair(a, b)) => {
                if *a >= left.order() || *b >= right.order() {
                    return Err(bad());
                }
                a + left.order() * b
            }
            (Structure::TrivialExtension { base }, Coordinates::Pair(a, v)) => {
                if *a >= base.order() || *v >= base.order() {
                    return Err(bad());
                }
                a + base.order() * v
            }
            (
                Structure::UpperTriangular { base, .. }
                | Structure::FullMatrix { base, .. }
                | Structure::TruncatedPoly { base, .. },
                Coordinates::Digits(d),
            ) => {
                if d.len() != self.digit_len() || d.iter().any(|&v| v >= base.order()) {
                    return Err(bad());
                }
                undigits(d, base.order())
            }
            (
                Structure::Quotient {
                    parent, class_of, ..
                },
                Coordinates::Parent(p),
            ) => {
                if *p >= parent.order() {
                    return Err(bad());
                }
                class_of[*p] as Elem
            }
            (Structure::Corner { index_of, .. }, Coordinates::Parent(p)) => {
                match index_of.get(*p) {
                    Some(&i) if i != u32::MAX => i as Elem,
                    _ => return Err(bad()),
                }
            }
            _ => return Err(bad()),
        };
        if x >= self.order() {
            return Err(bad());
        }
        Ok(x)
    }

    /// Matrix entry `(i, j)` (zero-based) of an element of `T_n(R)`.
    pub fn triangular_entry(&self, x: Elem, i: usize, j: usize) -> Option<Elem> {
        let (base, n) = self.as_upper_triangular()?;
        if i > j || j >= n {
            return Some(base.zero());
        }
        let q = base.order();
        let d = digits(x, q, self.digit_len());
        Some(d[tri_pos(n, i, j)])
    }

    /// Human-readable element description in terms of the base structure.
    pub fn describe(&self, x: Elem) -> String {
        match &self.0.structure {
            Structure::Zmod { .. } | Structure::Table(_) => x.to_string(),
            Structure::Product { left, right } => {
                let q = left.order();
                format!("({}, {})", left.describe(x % q), right.describe(x / q))
            }
            Structure::TrivialExtension { base } => {
                let q = base.order();
                format!("({}, {})", base.describe(x % q), base.describe(x / q))
            }
            Structure::UpperTriangular { base, n } => {
                let d = digits(x, base.order(), self.digit_len());
                let rows: Vec<String> = (0..*n)
                    .map(|i| {
                        let row: Vec<String> = (0..*n)
                            .map(|j| {
                                if j < i {
                                    base.describe(base.zero())
                                } else {
                                    base.describe(d[tri_pos(*n, i, j)])
                                }
                            })
                            .collect();
                        format!("[{}]", row.join(", "))
                    })
                    .collect();
                format!("[{}]", rows.join(", "))
            }
            Structure::FullMatrix { base, n } => {
                let d = digits(x, base.order(), n * n);
                let rows: Vec<String> = d
                    .chunks(*n)
                    .map(|r| {
                        let row: Vec<String> = r.iter().map(|&v| base.describe(v)).collect();
                        format!("[{}]", row.join(", "))
                    })
                    .collect();
                format!("[{}]", rows.join(", "))
            }
            Structure::TruncatedPoly { base, .. } => {
                let d = digits(x, base.order(), self.digit_len());
                let c: Vec<String> = d.iter().map(|&v| base.describe(v)).collect();
                format!("poly[{}]", c.join(", "))
            }
            Structure::Quotient { parent, reps, .. } => format!("{} + I", parent.describe(reps[x])),
            Structure::Corner {
                parent, members, ..
            } => parent.describe(members[x]),
        }
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.name(), self.order())
    }
}

/// Position of `(i, j)`, `i <= j`, in the upper-triangular digit order.
/// Row `i` starts after rows `0..i`, which hold `n, n-1, …, n-i+1` entries.
#[inline]
pub(crate) fn tri_pos(n: usize, i: usize, j: usize) -> usize {
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

pub(crate) fn digits(mut x: Elem, q: usize, len: usize) -> Digits {
    let mut out = Digits::with_capacity(len);
    for _ in 0..len {
        out.push(x % q);
        x /= q;
    }
    out
}

pub(crate) fn undigits(d: &[Elem], q: usize) -> Elem {
    d.iter().rev().fold(0, |acc, &v| acc * q + v)
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
