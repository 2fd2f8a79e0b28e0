//! Upper-triangular matrix rings: block decompositions, the `(1,n)` entry
//! rules for tripotents commuting with a given matrix, lifting of diagonal
//! tripotent patterns, and SDT representations in `T_n(R)`.

mod lift;
mod theorem;
mod workhorse;

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

pub use lift::{lift_commuting_tripotent, DiagonalRule, SdtBuilder, SdtRepresentation};
pub use theorem::{check_theorem_local, structural_branch, Branch, TheoremLocalReport};
pub use workhorse::{workhorse_idempotent_z, workhorse_z, IdempotentCase, Variant, WorkhorseCase};

/// Dense `n × n` matrix over a base ring, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn zero(base: &FiniteRing, n: usize) -> Self {
        Matrix {
            n,
            entries: vec![base.zero(); n * n],
        }
    }

    pub fn identity(base: &FiniteRing, n: usize) -> Self {
        let mut m = Self::zero(base, n);
        for i in 0..n {
            m.set(i, i, base.one());
        }
        m
    }

    /// Upper-triangular matrix from rows given as full-length vectors.
    pub fn from_rows(rows: &[Vec<Elem>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.concat(),
        }
    }

    /// The matrix of an element of `T_n(R)`.
    pub fn from_triangular(t: &FiniteRing, x: Elem) -> Self {
        let (base, n) = t
            .as_upper_triangular()
            .expect("not a triangular matrix ring");
        let mut m = Self::zero(base, n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, t.triangular_entry(x, i, j).unwrap());
            }
        }
        m
    }

    /// Index of this matrix in `T_n(R)`; entries below the diagonal must be zero.
    pub fn to_triangular(&self, t: &FiniteRing) -> Result<Elem> {
        let (base, n) = t
            .as_upper_triangular()
            .ok_or_else(|| Error::InvalidArgument(format!("{} is not T_n(R)", t.name())))?;
        if n != self.n {
            return Err(Error::InvalidArgument(format!(
                "matrix of size {} does not belong to {}",
                self.n,
                t.name()
            )));
        }
        let mut digits = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j);
                if j < i {
                    if v != base.zero() {
                        return Err(Error::InvalidArgument(
                            "matrix is not upper triangular".into(),
                        ));
                    }
                } else {
                    digits.push(v);
                }
            }
        }
        t.encode(&crate::ring::Coordinates::Digits(digits))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, base: &FiniteRing, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Matrix::zero(base, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = base.zero();
                for k in 0..n {
                    acc = base.add(acc, base.mul(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, base: &FiniteRing, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&x, &y)| base.add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, base: &FiniteRing, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&x, &y)| base.sub(x, y))
                .collect(),
        }
    }

    pub fn pow(&self, base: &FiniteRing, k: u32) -> Matrix {
        let mut acc = Matrix::identity(base, self.n);
        for _ in 0..k {
            acc = acc.mul(base, self);
        }
        acc
    }

    /// Rows and columns `i..=j`.
    pub fn principal(&self, i: usize, j: usize) -> Matrix {
        let m = j + 1 - i;
        let mut entries = Vec::with_capacity(m * m);
        for r in i..=j {
            entries.extend_from_slice(&self.entries[r * self.n + i..=r * self.n + j]);
        }
        Matrix { n: m, entries }
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[Elem]>::to_vec)
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// The corner/border decomposition of an `n × n` upper-triangular matrix,
/// `n >= 2`:
///
/// ```text
/// | top_left  top_row  top_right    |
/// |           inner    right_col    |
/// |                    bottom_right |
/// ```
///
/// For `n = 2` the row, column and inner block are empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockView {
    pub top_left: Elem,
    pub top_row: Vec<Elem>,
    pub top_right: Elem,
    pub inner: Matrix,
    pub right_col: Vec<Elem>,
    pub bottom_right: Elem,
}

impl BlockView {
    pub fn of(m: &Matrix) -> Self {
        let n = m.size();
        assert!(n >= 2, "block view needs n >= 2");
        BlockView {
            top_left: m.get(0, 0),
            top_row: (1..n - 1).map(|j| m.get(0, j)).collect(),
            top_right: m.get(0, n - 1),
            inner: if n > 2 {
                m.principal(1, n - 2)
            } else {
                Matrix {
                    n: 0,
                    entries: Vec::new(),
                }
            },
            right_col: (1..n - 1).map(|i| m.get(i, n - 1)).collect(),
            bottom_right: m.get(n - 1, n - 1),
        }
    }

    pub fn size(&self) -> usize {
        self.inner.size() + 2
    }

    /// Rebuilds the matrix; the entries below the diagonal are `zero`.
    pub fn assemble(&self, zero: Elem) -> Matrix {
        let n = self.size();
        let mut m = Matrix {
            n,
            entries: vec![zero; n * n],
        };
        m.set(0, 0, self.top_left);
        m.set(0, n - 1, self.top_right);
        m.set(n - 1, n - 1, self.bottom_right);
        for k in 0..n - 2 {
            m.set(0, k + 1, self.top_row[k]);
            m.set(k + 1, n - 1, self.right_col[k]);
            for l in 0..n - 2 {
                m.set(k + 1, l + 1, self.inner.get(k, l));
            }
        }
        m
    }
}

/// `Σ row_k col_k`, keeping the factor order.
pub(crate) fn dot(base: &FiniteRing, row: &[Elem], col: &[Elem]) -> Elem {
    row.iter()
        .zip(col)
        .fold(base.zero(), |acc, (&x, &y)| base.add(acc, base.mul(x, y)))
}

/// `row · M`.
pub(crate) fn row_times(base: &FiniteRing, row: &[Elem], m: &Matrix) -> Vec<Elem> {
    (0..m.size())
        .map(|j| {
            (0..m.size()).fold(base.zero(), |acc, k| {
                base.add(acc, base.mul(row[k], m.get(k, j)))
            })
        })
        .collect()
}

/// Smallest `x` with `ax - xb = v`, if any.
pub fn sylvester_solve(r: &FiniteRing, a: Elem, b: Elem, v: Elem) -> Option<Elem> {
    (0..r.order()).find(|&x| r.sub(r.mul(a, x), r.mul(x, b)) == v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Caps;

    #[test]
    fn sylvester_examples() {
        let caps = Caps::default();
        let z4 = caps.zmod(4).unwrap();
        assert_eq!(sylvester_solve(&z4, 3, 2, 1), Some(1));
        let z9 = caps.zmod(9).unwrap();
        assert_eq!(sylvester_solve(&z9, 1, 8, 4), Some(2));
        let z2 = caps.zmod(2).unwrap();
        assert_eq!(sylvester_solve(&z2, 1, 1, 1), None);
    }

    #[test]
    fn block_view_round_trip() {
        let caps = Caps::default();
        let z3 = caps.zmod(3).unwrap();
        let t = caps.upper_triangular(&z3, 4).unwrap();
        for x in [0, 1, 12345, 40_000, t.order() - 1] {
            let m = Matrix::from_triangular(&t, x);
            assert_eq!(BlockView::of(&m).assemble(0), m);
            assert_eq!(m.to_triangular(&t).unwrap(), x);
        }
        let z5 = caps.zmod(5).unwrap();
        let t2 = caps.upper_triangular(&z5, 2).unwrap();
        let m = Matrix::from_triangular(&t2, 77);
        let b = BlockView::of(&m);
        assert!(b.top_row.is_empty() && b.inner.size() == 0);
        assert_eq!(b.assemble(0), m);
    }

    #[test]
    fn matrix_product_matches_ring() {
        let caps = Caps::default();
        let z3 = caps.zmod(3).unwrap();
        let t = caps.upper_triangular(&z3, 3).unwrap();
        for x in (0..t.order()).step_by(37) {
            for y in (0..t.order()).step_by(41) {
                let p = Matrix::from_triangular(&t, x).mul(&z3, &Matrix::from_triangular(&t, y));
                assert_eq!(p.to_triangular(&t).unwrap(), t.mul(x, y));
            }
        }
    }
}
