//! Ring-class membership tests built on a generic sum-decomposition engine.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{
    self, center, delta, idempotents, is_nilpotent, is_unit, jacobson_radical, lr_surjective,
    nilpotents, potents, tripotents, units,
};
use crate::ring::{Elem, FiniteRing, StructureTag};
use crate::subset::{ElementSubset, SubsetLabel};

/// Which sets a decomposition query draws its two summands from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Query {
    pub p: SubsetLabelName,
    pub q: SubsetLabelName,
    pub commute: bool,
}

/// Serializable wrapper around [`SubsetLabel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetLabelName(pub SubsetLabel);

impl Serialize for SubsetLabelName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

/// Per-element witnesses `a = p + q` for one decomposition query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTable {
    pub query: Query,
    witnesses: Vec<Option<(Elem, Elem)>>,
}

impl WitnessTable {
    pub fn get(&self, a: Elem) -> Option<(Elem, Elem)> {
        self.witnesses[a]
    }

    pub fn is_complete(&self) -> bool {
        self.witnesses.iter().all(Option::is_some)
    }

    /// Smallest element without a witness.
    pub fn first_missing(&self) -> Option<Elem> {
        self.witnesses.iter().position(Option::is_none)
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Elem, Option<(Elem, Elem)>)> + '_ {
        self.witnesses.iter().copied().enumerate()
    }

    pub fn to_map(&self) -> BTreeMap<Elem, [Elem; 2]> {
        self.iter()
            .filter_map(|(a, w)| w.map(|(p, q)| (a, [p, q])))
            .collect()
    }
}

/// For every `a`, the first `p ∈ P` (by index) with `a - p ∈ Q` and, when
/// `commute` is set, `p(a - p) = (a - p)p`.
pub fn sum_decomposition(
    r: &FiniteRing,
    p: &ElementSubset,
    q: &ElementSubset,
    commute: bool,
) -> WitnessTable {
    assert!(p.belongs_to(r) && q.belongs_to(r));
    let ps = p.to_vec();
    let witnesses = (0..r.order())
        .map(|a| {
            ps.iter().find_map(|&e| {
                let d = r.sub(a, e);
                (q.contains(d) && (!commute || r.commute(e, d))).then_some((e, d))
            })
        })
        .collect();
    WitnessTable {
        query: Query {
            p: SubsetLabelName(p.label()),
            q: SubsetLabelName(q.label()),
            commute,
        },
        witnesses,
    }
}

/// Number of valid `(p, q)` splittings of every element.
pub fn count_decompositions(
    r: &FiniteRing,
    p: &ElementSubset,
    q: &ElementSubset,
    commute: bool,
) -> Vec<usize> {
    let ps = p.to_vec();
    (0..r.order())
        .map(|a| {
            ps.iter()
                .filter(|&&e| {
                    let d = r.sub(a, e);
                    q.contains(d) && (!commute || r.commute(e, d))
                })
                .count()
        })
        .collect()
}

pub fn is_sdt(r: &FiniteRing) -> (bool, WitnessTable) {
    let t = sum_decomposition(r, tripotents(r), delta(r), true);
    (t.is_complete(), t)
}

pub fn is_sdi(r: &FiniteRing) -> (bool, WitnessTable) {
    let t = sum_decomposition(r, idempotents(r), delta(r), true);
    (t.is_complete(), t)
}

pub fn is_semi_tripotent(r: &FiniteRing) -> Result<bool> {
    let j = jacobson_radical(r)?;
    Ok(sum_decomposition(r, tripotents(r), j, false).is_complete())
}

pub fn is_strongly_delta_npotent(r: &FiniteRing, n: u32) -> bool {
    sum_decomposition(r, &potents(r, n), delta(r), true).is_complete()
}

pub fn is_c_delta(r: &FiniteRing) -> bool {
    sum_decomposition(r, center(r), delta(r), false).is_complete()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CleanFlags {
    pub clean: bool,
    pub uniquely_clean: bool,
    pub strongly_nil_clean: bool,
    pub strongly_2_nil_clean: bool,
    pub strongly_j_clean: bool,
}

pub fn clean_family(r: &FiniteRing) -> Result<CleanFlags> {
    let id = idempotents(r);
    let u = units(r);
    let counts = count_decompositions(r, id, u, false);
    Ok(CleanFlags {
        clean: counts.iter().all(|&c| c >= 1),
        uniquely_clean: counts.iter().all(|&c| c == 1),
        strongly_nil_clean: sum_decomposition(r, id, nilpotents(r), true).is_complete(),
        strongly_2_nil_clean: sum_decomposition(r, tripotents(r), nilpotents(r), true)
            .is_complete(),
        strongly_j_clean: sum_decomposition(r, id, jacobson_radical(r)?, true).is_complete(),
    })
}

pub fn is_boolean(r: &FiniteRing) -> bool {
    (0..r.order()).all(|x| r.mul(x, x) == x)
}

pub fn is_tripotent_ring(r: &FiniteRing) -> bool {
    (0..r.order()).all(|x| r.pow(x, 3) == x)
}

/// Non-zero, every element tripotent, and `3·1` nilpotent.
pub fn is_yaqub(r: &FiniteRing) -> bool {
    r.order() > 1 && is_tripotent_ring(r) && is_nilpotent(r, r.from_int(3))
}

pub fn is_reduced(r: &FiniteRing) -> bool {
    nilpotents(r).len() == 1
}

/// No zero divisors. A finite ring without zero divisors has bijective
/// multiplication maps, so this is the same as every non-zero element
/// being a unit.
pub fn is_domain(r: &FiniteRing) -> bool {
    r.order() > 1 && units(r).len() == r.order() - 1
}

pub fn is_local(r: &FiniteRing) -> Result<bool> {
    let j = jacobson_radical(r)?;
    Ok(units(r).union(j).is_full())
}

/// Local, with `l_a - r_b` and `l_b - r_a` onto for all units `a` and
/// radical elements `b`.
pub fn is_bleached(r: &FiniteRing) -> Result<bool> {
    if !is_local(r)? {
        return Ok(false);
    }
    let j = jacobson_radical(r)?.to_vec();
    Ok(units(r).iter().all(|a| {
        j.iter()
            .all(|&b| lr_surjective(r, a, b) && lr_surjective(r, b, a))
    }))
}

/// `1 + Δ(R) = U(R)`.
pub fn is_delta_u(r: &FiniteRing) -> bool {
    let shifted = delta(r).translate(r, r.one());
    &shifted == units(r)
}

/// `l_a - r_b` onto for every `a ∈ 1 + Δ(R)` and `b ∈ -1 + Δ(R)`.
pub fn delta_shift_surjectivity(r: &FiniteRing) -> bool {
    let d = delta(r);
    let a_set = d.translate(r, r.one());
    let b_set = d.translate(r, r.neg(r.one()));
    let ok = a_set
        .iter()
        .all(|a| b_set.iter().all(|b| lr_surjective(r, a, b)));
    ok
}

/// Nil(R) = J(R); the finite-ring form of 2-primality.
pub fn is_two_primal(r: &FiniteRing) -> Result<bool> {
    Ok(nilpotents(r) == jacobson_radical(r)?)
}

/// Whether `R/J(R)` is reduced, decided without building the quotient:
/// `x + J` is nilpotent iff some power of `x` lies in `J`.
pub fn reduced_mod_jacobson(r: &FiniteRing) -> Result<bool> {
    let j = jacobson_radical(r)?;
    let k = invariants::nilpotency_bound(r);
    Ok((0..r.order()).all(|x| j.contains(x) || !j.contains(r.pow(x, k))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Membership {
    U,
    J,
    #[serde(rename = "neither")]
    Neither,
}

fn membership(r: &FiniteRing, x: Elem) -> Result<Membership> {
    Ok(if is_unit(r, x) {
        Membership::U
    } else if jacobson_radical(r)?.contains(x) {
        Membership::J
    } else {
        Membership::Neither
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharData {
    pub two_in: Membership,
    pub three_in: Membership,
    pub six_in: Membership,
    /// Additive order of `1 + J` in `R/J`.
    pub char_mod_j: usize,
}

pub fn char_data(r: &FiniteRing) -> Result<CharData> {
    let j = jacobson_radical(r)?;
    let mut k = 1;
    let mut x = r.one();
    while !j.contains(x) {
        x = r.add(x, r.one());
        k += 1;
    }
    Ok(CharData {
        two_in: membership(r, r.from_int(2))?,
        three_in: membership(r, r.from_int(3))?,
        six_in: membership(r, r.from_int(6))?,
        char_mod_j: k,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub boolean: bool,
    pub yaqub: bool,
    pub tripotent_ring: bool,
    pub reduced: bool,
    pub domain: bool,
    pub local: bool,
    pub bleached: bool,
    pub two_primal: bool,
    pub clean: bool,
    pub uniquely_clean: bool,
    pub strongly_nil_clean: bool,
    pub strongly_2_nil_clean: bool,
    pub strongly_j_clean: bool,
    pub semi_tripotent: bool,
    pub sdt: bool,
    pub sdi: bool,
    pub delta_u: bool,
    pub c_delta: bool,
    /// `strongly_delta_npotent_<n>` for each requested `n`.
    #[serde(flatten)]
    pub npotent: BTreeMap<String, bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingDescriptor {
    pub name: String,
    pub order: usize,
    pub structure: StructureTag,
}

impl RingDescriptor {
    pub fn of(r: &FiniteRing) -> Self {
        RingDescriptor {
            name: r.name().to_string(),
            order: r.order(),
            structure: r.tag(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub ring: RingDescriptor,
    pub flags: Flags,
    /// SDT witnesses `element -> [tripotent, delta part]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<Elem, [Elem; 2]>>,
    pub char_data: CharData,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub witnesses: bool,
    pub npotent: Vec<u32>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            witnesses: false,
            npotent: vec![2, 3],
        }
    }
}

pub fn npotent_key(n: u32) -> String {
    format!("strongly_delta_npotent_{n}")
}

/// Fills every flag and checks the unconditional implications between them.
pub fn classify_ring(r: &FiniteRing, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let (sdt, sdt_table) = is_sdt(r);
    let (sdi, _) = is_sdi(r);
    let clean = clean_family(r)?;
    let mut npotent = BTreeMap::new();
    for &n in &opts.npotent {
        let v = match n {
            2 => sdi,
            3 => sdt,
            _ => is_strongly_delta_npotent(r, n),
        };
        npotent.insert(npotent_key(n), v);
    }
    let flags = Flags {
        boolean: is_boolean(r),
        yaqub: is_yaqub(r),
        tripotent_ring: is_tripotent_ring(r),
        reduced: is_reduced(r),
        domain: is_domain(r),
        local: is_local(r)?,
        bleached: is_bleached(r)?,
        two_primal: is_two_primal(r)?,
        clean: clean.clean,
        uniquely_clean: clean.uniquely_clean,
        strongly_nil_clean: clean.strongly_nil_clean,
        strongly_2_nil_clean: clean.strongly_2_nil_clean,
        strongly_j_clean: clean.strongly_j_clean,
        semi_tripotent: is_semi_tripotent(r)?,
        sdt,
        sdi,
        delta_u: is_delta_u(r),
        c_delta: is_c_delta(r),
        npotent,
    };
    let char_data = char_data(r)?;
    check_implications(r, &flags, &char_data)?;
    Ok(ClassificationReport {
        ring: RingDescriptor::of(r),
        flags,
        witnesses: opts.witnesses.then(|| sdt_table.to_map()),
        char_data,
    })
}

fn violation(r: &FiniteRing, premise: &str, conclusion: &str) -> Error {
    Error::ImplicationViolation {
        premise: premise.into(),
        conclusion: conclusion.into(),
        ring: r.name().into(),
    }
}

fn check_implications(r: &FiniteRing, f: &Flags, c: &CharData) -> Result<()> {
    let require = |ok: bool, premise: &str, conclusion: &str| -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(violation(r, premise, conclusion))
        }
    };
    let j = jacobson_radical(r)?;
    require(j.is_subset(delta(r)), "always", "J(R) ⊆ Δ(R)")?;
    require(!f.boolean || f.sdi, "boolean", "sdi")?;
    require(!f.tripotent_ring || f.sdt, "tripotent_ring", "sdt")?;
    require(!f.yaqub || f.tripotent_ring, "yaqub", "tripotent_ring")?;
    require(!f.sdi || f.sdt, "sdi", "sdt")?;
    require(!f.sdi || f.delta_u, "sdi", "delta_u")?;
    require(f.delta_u == units_sum_in_delta(r), "delta_u", "U + U ⊆ Δ")?;
    // In the zero ring U = J, so the memberships below cannot separate them.
    if f.sdt && !r.is_zero_ring() {
        require(c.six_in == Membership::J, "sdt", "6 ∈ J")?;
        require(reduced_mod_jacobson(r)?, "sdt", "R/J reduced")?;
        require(
            (c.two_in == Membership::U) == (c.three_in == Membership::J),
            "sdt",
            "2 ∈ U ⟺ 3 ∈ J",
        )?;
        require(
            (c.three_in == Membership::U) == (c.two_in == Membership::J),
            "sdt",
            "3 ∈ U ⟺ 2 ∈ J",
        )?;
        if c.two_in == Membership::U {
            require(delta(r) == j, "sdt and 2 ∈ U", "Δ = J")?;
        }
        if c.three_in == Membership::U {
            require(f.sdi, "sdt and 3 ∈ U", "sdi")?;
        }
        if f.domain {
            require(f.local, "sdt and domain", "local")?;
        }
    }
    let idem_central = idempotents(r).is_subset(center(r));
    require(
        f.uniquely_clean == (f.sdi && idem_central),
        "uniquely_clean",
        "sdi with central idempotents",
    )?;
    if f.local {
        require(
            !f.strongly_2_nil_clean || f.sdt,
            "strongly_2_nil_clean and local",
            "sdt",
        )?;
        require(
            !f.semi_tripotent || f.sdt,
            "semi_tripotent and local",
            "sdt",
        )?;
    }
    for (key, &v) in &f.npotent {
        if key == &npotent_key(2) {
            require(v == f.sdi, key, "sdi")?;
        }
        if key == &npotent_key(3) {
            require(v == f.sdt, key, "sdt")?;
        }
    }
    Ok(())
}

/// `U(R) + U(R) ⊆ Δ(R)`.
pub fn units_sum_in_delta(r: &FiniteRing) -> bool {
    let u = units(r).to_vec();
    let d = delta(r);
    u.iter()
        .all(|&a| u.iter().all(|&b| d.contains(r.add(a, b))))
}

/// `U(R) + U(R)` as a subset.
pub fn units_sum(r: &FiniteRing) -> ElementSubset {
    units(r)
        .sum_set(r, units(r))
        .with_label(SubsetLabel::Custom)
}
