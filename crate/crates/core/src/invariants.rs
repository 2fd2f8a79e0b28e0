//! Structural subsets of a finite ring: units, radical, Δ, nilpotents,
//! n-potents, center, generated ideals and images of `l_a - r_b`.
//!
//! The cached sets are computed once per ring and returned by reference.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};
use crate::subset::{ElementSubset, SubsetLabel};

/// Brute-force two-sided inverse search.
pub fn is_unit_brute(r: &FiniteRing, x: Elem) -> bool {
    let one = r.one();
    (0..r.order()).any(|y| r.mul(x, y) == one && r.mul(y, x) == one)
}

/// Unit test using the structural predicate when there is one.
pub fn is_unit(r: &FiniteRing, x: Elem) -> bool {
    if let Some(u) = r.cache().units.get() {
        return u.contains(x);
    }
    match r.is_unit_fast(x) {
        Some(b) => b,
        None => units(r).contains(x),
    }
}

pub fn units(r: &FiniteRing) -> &ElementSubset {
    r.cache().units.get_or_init(|| {
        if r.is_unit_fast(r.zero()).is_some() {
            return ElementSubset::filter(r, SubsetLabel::Units, |x| {
                r.is_unit_fast(x) == Some(true)
            });
        }
        // Pair each element with its inverse; every unit is found once.
        let n = r.order();
        let one = r.one();
        let mut out = ElementSubset::empty(r, SubsetLabel::Units);
        for x in 0..n {
            if out.contains(x) {
                continue;
            }
            if let Some(y) = (0..n).find(|&y| r.mul(x, y) == one) {
                if r.mul(y, x) == one {
                    out.insert(x);
                    out.insert(y);
                }
            }
        }
        out
    })
}

/// Extends the subgroup `h` by `g`, adding every new element to `fresh`.
///
/// Fails with a pair `(y, g)` whose sum leaves `within`.
fn join_cyclic(
    r: &FiniteRing,
    h: &mut ElementSubset,
    g: Elem,
    within: Option<&ElementSubset>,
    fresh: &mut Vec<Elem>,
) -> std::result::Result<(), (Elem, Elem)> {
    if h.contains(g) {
        return Ok(());
    }
    let mut queue: VecDeque<Elem> = h.iter().collect();
    while let Some(y) = queue.pop_front() {
        let z = r.add(y, g);
        if h.contains(z) {
            continue;
        }
        if within.is_some_and(|w| !w.contains(z)) {
            return Err((y, g));
        }
        h.insert(z);
        fresh.push(z);
        queue.push_back(z);
    }
    Ok(())
}

/// Greedy additive generating set: each generator is the smallest element
/// not yet in the span of the previous ones.
pub fn additive_generators(r: &FiniteRing) -> &[Elem] {
    r.cache().generators.get_or_init(|| {
        let mut span = ElementSubset::from_elems(r, SubsetLabel::Custom, [r.zero()]);
        let mut gens = Vec::new();
        let mut scratch = Vec::new();
        for x in 0..r.order() {
            if !span.contains(x) {
                gens.push(x);
                join_cyclic(r, &mut span, x, None, &mut scratch).expect("unbounded join");
                scratch.clear();
            }
        }
        gens
    })
}

/// The additive subgroup generated by `elems`.
pub fn additive_span<I: IntoIterator<Item = Elem>>(r: &FiniteRing, elems: I) -> ElementSubset {
    let mut span = ElementSubset::from_elems(r, SubsetLabel::Custom, [r.zero()]);
    let mut scratch = Vec::new();
    for g in elems {
        join_cyclic(r, &mut span, g, None, &mut scratch).expect("unbounded join");
        scratch.clear();
    }
    span
}

/// Whether `s` is an additive subgroup; on failure returns `(x, y)` in `s`
/// with `x + y` outside it.
pub fn subgroup_violation(r: &FiniteRing, s: &ElementSubset) -> Option<(Elem, Elem)> {
    if !s.contains(r.zero()) {
        return Some((r.zero(), r.zero()));
    }
    let mut span = ElementSubset::from_elems(r, SubsetLabel::Custom, [r.zero()]);
    let mut scratch = Vec::new();
    for x in s.iter() {
        if let Err(pair) = join_cyclic(r, &mut span, x, Some(s), &mut scratch) {
            return Some(pair);
        }
        scratch.clear();
    }
    None
}

/// Two-sided ideal test; returns a violating pair.
pub fn ideal_violation(r: &FiniteRing, s: &ElementSubset) -> Option<(Elem, Elem)> {
    if let Some(pair) = subgroup_violation(r, s) {
        return Some(pair);
    }
    // Absorbing the additive generators on both sides absorbs all of R.
    for &g in additive_generators(r) {
        for x in s.iter() {
            if !s.contains(r.mul(g, x)) {
                return Some((g, x));
            }
            if !s.contains(r.mul(x, g)) {
                return Some((x, g));
            }
        }
    }
    None
}

/// `J(R) = {x : 1 - rx ∈ U(R) for all r}`.
pub fn jacobson_radical(r: &FiniteRing) -> Result<&ElementSubset> {
    if let Some(j) = r.cache().jacobson.get() {
        return Ok(j);
    }
    let one = r.one();
    let nil = nilpotents(r);
    // Elements of J are nilpotent in a finite ring, so only those are scanned.
    let j = ElementSubset::filter(r, SubsetLabel::Jacobson, |x| {
        nil.contains(x) && (0..r.order()).all(|y| is_unit(r, r.sub(one, r.mul(y, x))))
    });
    if let Some(pair) = ideal_violation(r, &j) {
        return Err(Error::InternalInvariant(format!(
            "J({}) is not an ideal: {pair:?}",
            r.name()
        )));
    }
    Ok(r.cache().jacobson.get_or_init(|| j))
}

/// `Δ(R) = {x : x + u ∈ U(R) for all u ∈ U(R)}`.
pub fn delta(r: &FiniteRing) -> &ElementSubset {
    r.cache().delta.get_or_init(|| {
        let u = units(r).to_vec();
        ElementSubset::filter(r, SubsetLabel::Delta, |x| {
            u.iter().all(|&v| is_unit(r, r.add(x, v)))
        })
    })
}

/// `{x : 1 - xu ∈ U(R) for all u ∈ U(R)}`.
pub fn delta_alt1(r: &FiniteRing) -> ElementSubset {
    let u = units(r).to_vec();
    let one = r.one();
    ElementSubset::filter(r, SubsetLabel::Delta, |x| {
        u.iter().all(|&v| is_unit(r, r.sub(one, r.mul(x, v))))
    })
}

/// `{x : 1 - ux ∈ U(R) for all u ∈ U(R)}`.
pub fn delta_alt2(r: &FiniteRing) -> ElementSubset {
    let u = units(r).to_vec();
    let one = r.one();
    ElementSubset::filter(r, SubsetLabel::Delta, |x| {
        u.iter().all(|&v| is_unit(r, r.sub(one, r.mul(v, x))))
    })
}

/// Largest possible nilpotency index in a ring of this order.
///
/// For nilpotent `x` with index `k` the left ideals `R ⊋ Rx ⊋ … ⊋ Rx^k = 0`
/// strictly decrease, and each step at least halves the subgroup, so
/// `k <= log2 |R|`.
pub fn nilpotency_bound(r: &FiniteRing) -> u64 {
    (usize::BITS - 1 - r.order().leading_zeros()).max(1) as u64
}

pub fn nilpotents(r: &FiniteRing) -> &ElementSubset {
    r.cache().nilpotents.get_or_init(|| {
        let k = nilpotency_bound(r);
        ElementSubset::filter(r, SubsetLabel::Nilpotents, |x| r.pow(x, k) == r.zero())
    })
}

pub fn is_nilpotent(r: &FiniteRing, x: Elem) -> bool {
    r.pow(x, nilpotency_bound(r)) == r.zero()
}

/// `{x : x^n = x}`.
pub fn potents(r: &FiniteRing, n: u32) -> ElementSubset {
    assert!(n >= 2, "potents needs n >= 2");
    match n {
        2 => idempotents(r).clone(),
        3 => tripotents(r).clone(),
        _ => ElementSubset::filter(r, SubsetLabel::Potents(n), |x| r.pow(x, n as u64) == x),
    }
}

pub fn idempotents(r: &FiniteRing) -> &ElementSubset {
    r.cache()
        .idempotents
        .get_or_init(|| ElementSubset::filter(r, SubsetLabel::Potents(2), |x| r.mul(x, x) == x))
}

pub fn tripotents(r: &FiniteRing) -> &ElementSubset {
    r.cache()
        .tripotents
        .get_or_init(|| ElementSubset::filter(r, SubsetLabel::Potents(3), |x| r.pow(x, 3) == x))
}

pub fn center(r: &FiniteRing) -> &ElementSubset {
    r.cache().center.get_or_init(|| {
        let gens = additive_generators(r);
        ElementSubset::filter(r, SubsetLabel::Center, |x| {
            gens.iter().all(|&g| r.commute(x, g))
        })
    })
}

/// Smallest two-sided ideal containing `seed`.
pub fn ideal_generated_by(r: &FiniteRing, seed: &ElementSubset) -> ElementSubset {
    let gens = additive_generators(r).to_vec();
    let mut ideal = ElementSubset::from_elems(r, SubsetLabel::Ideal, [r.zero()]);
    let mut pending: Vec<Elem> = Vec::new();
    for s in seed.iter() {
        join_cyclic(r, &mut ideal, s, None, &mut pending).expect("unbounded join");
    }
    while let Some(y) = pending.pop() {
        for &g in &gens {
            for p in [r.mul(g, y), r.mul(y, g)] {
                join_cyclic(r, &mut ideal, p, None, &mut pending).expect("unbounded join");
            }
        }
    }
    ideal.with_label(SubsetLabel::Ideal)
}

/// Additive span of all products `ab` with `a ∈ i`, `b ∈ k`.
pub fn ideal_product(r: &FiniteRing, i: &ElementSubset, k: &ElementSubset) -> ElementSubset {
    let mut span = ElementSubset::from_elems(r, SubsetLabel::Ideal, [r.zero()]);
    let mut scratch = Vec::new();
    for a in i.iter() {
        for b in k.iter() {
            join_cyclic(r, &mut span, r.mul(a, b), None, &mut scratch).expect("unbounded join");
            scratch.clear();
        }
    }
    span.with_label(SubsetLabel::Ideal)
}

/// `{ax - xb : x ∈ R}`, the image of `l_a - r_b`.
pub fn lr_image(r: &FiniteRing, a: Elem, b: Elem) -> ElementSubset {
    // The map is additive, so the image is spanned by the generator images.
    let images: Vec<Elem> = additive_generators(r)
        .iter()
        .map(|&g| r.sub(r.mul(a, g), r.mul(g, b)))
        .collect();
    additive_span(r, images).with_label(SubsetLabel::Image)
}

pub fn lr_surjective(r: &FiniteRing, a: Elem, b: Elem) -> bool {
    lr_image(r, a, b).is_full()
}
