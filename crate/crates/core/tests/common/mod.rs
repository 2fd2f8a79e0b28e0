//! Brute-force reference rings for the integration tests.
//!
//! Everything here is computed from first principles: the rings carry their
//! own arithmetic, and units, radicals and decompositions come straight from
//! the definitions by exhaustive search. Element indices follow the same
//! documented encoding as the library, so whole sets can be compared.

#![allow(dead_code)]

/// Description of a ring, built without the library.
#[derive(Debug, Clone)]
pub enum Shape {
    Zn(usize),
    Gf4,
    Prod(Box<Shape>, Box<Shape>),
    Tri(usize, Box<Shape>),
    Mat(usize, Box<Shape>),
    Te(Box<Shape>),
    Poly(usize, Box<Shape>),
    /// `eRe` for the element with index `e`.
    Corner(Box<Shape>, usize),
}

pub fn zn(n: usize) -> Shape {
    Shape::Zn(n)
}

pub fn prod(a: Shape, b: Shape) -> Shape {
    Shape::Prod(Box::new(a), Box::new(b))
}

pub fn tri(n: usize, a: Shape) -> Shape {
    Shape::Tri(n, Box::new(a))
}

pub fn mat(n: usize, a: Shape) -> Shape {
    Shape::Mat(n, Box::new(a))
}

pub fn te(a: Shape) -> Shape {
    Shape::Te(Box::new(a))
}

pub fn poly(m: usize, a: Shape) -> Shape {
    Shape::Poly(m, Box::new(a))
}

pub fn corner(a: Shape, e: usize) -> Shape {
    Shape::Corner(Box::new(a), e)
}

/// A ring given by full operation tables.
pub struct Oracle {
    pub n: usize,
    pub zero: usize,
    pub one: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

impl Oracle {
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y] as usize
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y] as usize
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    pub fn int(&self, k: usize) -> usize {
        (0..k).fold(self.zero, |acc, _| self.add(acc, self.one))
    }

    pub fn commute(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    fn from_ops(
        n: usize,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Oracle {
        assert!(n <= u16::MAX as usize + 1);
        let mut a = vec![0u16; n * n];
        let mut m = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                a[x * n + y] = add(x, y) as u16;
                m[x * n + y] = mul(x, y) as u16;
            }
        }
        let neg = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| a[x * n + y] as usize == zero)
                    .expect("additive inverse") as u16
            })
            .collect();
        Oracle {
            n,
            zero,
            one,
            add: a,
            mul: m,
            neg,
        }
    }

    pub fn build(shape: &Shape) -> Oracle {
        match shape {
            Shape::Zn(k) => {
                let k = *k;
                Oracle::from_ops(k, 0, 1 % k, |x, y| (x + y) % k, |x, y| (x * y) % k)
            }
            Shape::Gf4 => {
                // 0, 1, w, w + 1 as bit pairs; w^2 = w + 1.
                let mul = |x: usize, y: usize| {
                    let (a1, a0) = (x >> 1, x & 1);
                    let (b1, b0) = (y >> 1, y & 1);
                    let c2 = a1 & b1;
                    let c1 = (a1 & b0) ^ (a0 & b1) ^ c2;
                    let c0 = (a0 & b0) ^ c2;
                    (c1 << 1) | c0
                };
                Oracle::from_ops(4, 0, 1, |x, y| x ^ y, mul)
            }
            Shape::Prod(a, b) => {
                let (ra, rb) = (Oracle::build(a), Oracle::build(b));
                let na = ra.n;
                let split = |x: usize| (x % na, x / na);
                Oracle::from_ops(
                    na * rb.n,
                    ra.zero + na * rb.zero,
                    ra.one + na * rb.one,
                    |x, y| {
                        let ((x0, x1), (y0, y1)) = (split(x), split(y));
                        ra.add(x0, y0) + na * rb.add(x1, y1)
                    },
                    |x, y| {
                        let ((x0, x1), (y0, y1)) = (split(x), split(y));
                        ra.mul(x0, y0) + na * rb.mul(x1, y1)
                    },
                )
            }
            Shape::Tri(k, a) => matrices(&Oracle::build(a), *k, true),
            Shape::Mat(k, a) => matrices(&Oracle::build(a), *k, false),
            Shape::Te(a) => {
                let r = Oracle::build(a);
                let q = r.n;
                let split = |x: usize| (x % q, x / q);
                Oracle::from_ops(
                    q * q,
                    r.zero + q * r.zero,
                    r.one + q * r.zero,
                    |x, y| {
                        let ((a, v), (b, w)) = (split(x), split(y));
                        r.add(a, b) + q * r.add(v, w)
                    },
                    |x, y| {
                        let ((a, v), (b, w)) = (split(x), split(y));
                        r.mul(a, b) + q * r.add(r.mul(a, w), r.mul(v, b))
                    },
                )
            }
            Shape::Poly(m, a) => {
                let r = Oracle::build(a);
                let (q, m) = (r.n, *m);
                let digits = |mut x: usize| {
                    let mut d = vec![0; m];
                    for slot in d.iter_mut() {
                        *slot = x % q;
                        x /= q;
                    }
                    d
                };
                let index = |d: &[usize]| d.iter().rev().fold(0, |acc, &v| acc * q + v);
                let mut zero = vec![r.zero; m];
                let zero_i = index(&zero);
                zero[0] = r.one;
                let one_i = index(&zero);
                Oracle::from_ops(
                    q.pow(m as u32),
                    zero_i,
                    one_i,
                    |x, y| {
                        let (a, b) = (digits(x), digits(y));
                        index(
                            &a.iter()
                                .zip(&b)
                                .map(|(&s, &t)| r.add(s, t))
                                .collect::<Vec<_>>(),
                        )
                    },
                    |x, y| {
                        let (a, b) = (digits(x), digits(y));
                        let mut c = vec![r.zero; m];
                        for i in 0..m {
                            for j in 0..m - i {
                                c[i + j] = r.add(c[i + j], r.mul(a[i], b[j]));
                            }
                        }
                        index(&c)
                    },
                )
            }
            Shape::Corner(a, e) => {
                let r = Oracle::build(a);
                let e = *e;
                assert_eq!(r.mul(e, e), e, "corner needs an idempotent");
                let mut members: Vec<usize> = (0..r.n).map(|x| r.mul(r.mul(e, x), e)).collect();
                members.sort_unstable();
                members.dedup();
                let pos = |x: usize| members.binary_search(&x).expect("closed under operations");
                Oracle::from_ops(
                    members.len(),
                    pos(r.zero),
                    pos(e),
                    |x, y| pos(r.add(members[x], members[y])),
                    |x, y| pos(r.mul(members[x], members[y])),
                )
            }
        }
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| {
                (0..self.n).any(|y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
            })
            .collect()
    }

    fn unit_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for u in self.units() {
            mask[u] = true;
        }
        mask
    }

    /// `{x : x + u ∈ U for every unit u}`.
    pub fn delta(&self) -> Vec<usize> {
        let mask = self.unit_mask();
        let units = self.units();
        (0..self.n)
            .filter(|&x| units.iter().all(|&u| mask[self.add(x, u)]))
            .collect()
    }

    /// `{x : 1 - rx ∈ U for every r}`.
    pub fn jacobson(&self) -> Vec<usize> {
        let mask = self.unit_mask();
        (0..self.n)
            .filter(|&x| (0..self.n).all(|r| mask[self.sub(self.one, self.mul(r, x))]))
            .collect()
    }

    pub fn potents(&self, k: u32) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| {
                let mut p = x;
                for _ in 1..k {
                    p = self.mul(p, x);
                }
                p == x
            })
            .collect()
    }

    pub fn nilpotents(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| {
                let mut p = x;
                for _ in 0..self.n {
                    if p == self.zero {
                        return true;
                    }
                    p = self.mul(p, x);
                }
                p == self.zero
            })
            .collect()
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| self.commute(x, y)))
            .collect()
    }

    /// Every `(p, q)` with `p ∈ ps`, `q ∈ qs`, `p + q = a`, `pq = qp`.
    pub fn commuting_splits(&self, a: usize, ps: &[usize], q_mask: &[bool]) -> Vec<(usize, usize)> {
        ps.iter()
            .filter_map(|&p| {
                let q = self.sub(a, p);
                (q_mask[q] && self.commute(p, q)).then_some((p, q))
            })
            .collect()
    }

    pub fn mask(&self, xs: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.n];
        for &x in xs {
            m[x] = true;
        }
        m
    }

    /// Every element is a tripotent plus a commuting element of Δ.
    pub fn is_sdt(&self) -> bool {
        let trip = self.potents(3);
        let dm = self.mask(&self.delta());
        (0..self.n).all(|a| {
            trip.iter().any(|&e| {
                let d = self.sub(a, e);
                dm[d] && self.commute(e, d)
            })
        })
    }
}

/// `k × k` matrices over `r`, upper-triangular when `upper`; digits in
/// row-major order over the stored positions, least significant first.
fn matrices(r: &Oracle, k: usize, upper: bool) -> Oracle {
    let positions: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| !upper || i <= j)
        .collect();
    let q = r.n;
    let len = positions.len();
    let to_matrix = |mut x: usize| {
        let mut m = vec![r.zero; k * k];
        for &(i, j) in &positions {
            m[i * k + j] = x % q;
            x /= q;
        }
        m
    };
    let to_index = |m: &[usize]| {
        positions
            .iter()
            .rev()
            .fold(0, |acc, &(i, j)| acc * q + m[i * k + j])
    };
    let mut id = vec![r.zero; k * k];
    for i in 0..k {
        id[i * k + i] = r.one;
    }
    let zero = to_index(&vec![r.zero; k * k]);
    let one = to_index(&id);
    Oracle::from_ops(
        q.pow(len as u32),
        zero,
        one,
        |x, y| {
            let (a, b) = (to_matrix(x), to_matrix(y));
            to_index(
                &a.iter()
                    .zip(&b)
                    .map(|(&s, &t)| r.add(s, t))
                    .collect::<Vec<_>>(),
            )
        },
        |x, y| {
            let (a, b) = (to_matrix(x), to_matrix(y));
            let mut c = vec![r.zero; k * k];
            for i in 0..k {
                for j in 0..k {
                    let mut acc = r.zero;
                    for l in 0..k {
                        acc = r.add(acc, r.mul(a[i * k + l], b[l * k + j]));
                    }
                    c[i * k + j] = acc;
                }
            }
            to_index(&c)
        },
    )
}
