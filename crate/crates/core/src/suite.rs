//! Executable forms of the structural results about SDT rings, run against
//! a single ring.
//!
//! Each check either passes, fails with a counterexample, or is skipped
//! because its hypotheses do not hold for the ring. A skip is never counted
//! as a pass.

use std::cell::OnceCell;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{
    clean_family, is_delta_u, is_domain, is_local, is_sdi, is_sdt, is_semi_tripotent,
    reduced_mod_jacobson, units_sum, CleanFlags, WitnessTable,
};
use crate::decompose::verify_boolean_yaqub;
use crate::error::{Error, Result};
use crate::invariants::{
    center, delta, delta_alt1, delta_alt2, ideal_generated_by, ideal_product, idempotents, is_unit,
    jacobson_radical, subgroup_violation, tripotents, units,
};
use crate::ring::{Caps, Elem, FiniteRing};
use crate::subset::{ElementSubset, SubsetLabel};
use crate::triangular::{check_theorem_local, workhorse_z, Matrix, SdtBuilder, WorkhorseCase};

/// Every check, in the order they run.
pub const CHECK_IDS: &[&str] = &[
    "delta-machinery",
    "nil-radical",
    "lemma0-product",
    "lemma0-quotient",
    "lemma1",
    "lemma2",
    "lemma3",
    "lemma4",
    "lemma5",
    "cor1",
    "pro3",
    "pro4",
    "sdi-delta-u",
    "sum-unit",
    "cor2",
    "prop-local",
    "cor-s2nc-local",
    "prop-semitrip",
    "lemma-ann",
    "corner-inclusion",
    "cor-corner-ring",
    "lemma-trivial-tripotent",
    "thm-boolean-yaqub",
    "te-proposition",
    "final-example",
    "theorem-local",
    "sdt-builder",
    "workhorse-i",
    "workhorse-ii",
    "workhorse-iii",
    "workhorse-iv",
    "workhorse-v",
    "workhorse-vi",
    "workhorse-vii",
    "workhorse-viii",
    "workhorse-w",
];

/// One-line description of each check.
pub fn describe(id: &str) -> Option<&'static str> {
    Some(match id {
        "delta-machinery" => "three descriptions of Δ agree; J ⊆ Δ; Δ is a subring closed under unit multiples; Δ ∩ Id = {0}; 1 + Δ ⊆ U",
        "nil-radical" => "J is nilpotent and J(R/J) = 0",
        "lemma0-product" => "a product is SDT iff both factors are",
        "lemma0-quotient" => "SDT passes to quotients by ideals inside J",
        "lemma1" => "SDT: (e ± e²)d, d(e ± e²), 2ed, 2e²d ∈ Δ for tripotent e, d ∈ Δ",
        "lemma2" => "SDT: a² ∈ Δ implies a ∈ Δ",
        "lemma3" => "SDT: a - a³ ∈ Δ",
        "lemma4" => "SDT: R/J is reduced",
        "lemma5" => "SDT: 6 ∈ J",
        "cor1" => "SDT: 2 ∈ U iff 3 ∈ J, and 3 ∈ U iff 2 ∈ J",
        "pro3" => "SDT with 2 ∈ U: Δ = J",
        "pro4" => "SDT with 3 ∈ U: SDI",
        "sdi-delta-u" => "SDI implies ΔU",
        "sum-unit" => "ΔU iff U + U ⊆ Δ, and then U + U = Δ",
        "cor2" => "uniquely clean iff SDI with central idempotents",
        "prop-local" => "SDT domain: local and R = U ∪ Δ",
        "cor-s2nc-local" => "local strongly 2-nil-clean implies SDT",
        "prop-semitrip" => "local semi-tripotent implies SDT",
        "lemma-ann" => "SDT witness a = e + d: ann(a) ⊆ ann(e) on both sides",
        "corner-inclusion" => "eRe ∩ Δ(R) ⊆ Δ(eRe)",
        "cor-corner-ring" => "corners of an SDT ring are SDT",
        "lemma-trivial-tripotent" => "local with 2 ∈ U: the tripotents are 0, 1, -1",
        "thm-boolean-yaqub" => "SDT: R/J is Boolean x Yaqub",
        "te-proposition" => "trivial tripotents: TE(R) is SDT iff |R/J| ∈ {2, 3}",
        "final-example" => "central tripotents: R, P2(R), P3(R), TE(R) are SDT together",
        "theorem-local" => "local R: T3(R) is SDT iff the structural condition holds",
        "sdt-builder" => "constructive SDT representations in T2(R)",
        "workhorse-i" | "workhorse-ii" | "workhorse-iii" | "workhorse-iv" | "workhorse-v"
        | "workhorse-vi" | "workhorse-vii" | "workhorse-viii" | "workhorse-w" => {
            "(1,3) entry of a tripotent commuting with A, sampled in T3(R)"
        }
        _ => return None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub ring: String,
    pub order: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteResult {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn status(&self, id: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.id == id).map(|c| c.status)
    }
}

/// Check ids that did not pass on any of `results`.
pub fn uncovered(results: &[SuiteResult]) -> Vec<&'static str> {
    CHECK_IDS
        .iter()
        .copied()
        .filter(|id| !results.iter().any(|r| r.status(id) == Some(Status::Pass)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Checks to run; `None` runs all.
    pub only: Option<Vec<String>>,
    pub seed: u64,
    /// Largest ring a check may build from the one under test.
    pub construct_limit: usize,
    /// Pair scans above this size are sampled.
    pub pair_budget: usize,
    /// Most idempotents a corner check visits.
    pub max_corners: usize,
    /// Configurations tried per workhorse case.
    pub workhorse_samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            only: None,
            seed: 0,
            construct_limit: 4096,
            pair_budget: 1 << 20,
            max_corners: 12,
            workhorse_samples: 300,
        }
    }
}

/// Rejects ids that are not checks.
pub fn validate_ids<S: AsRef<str>>(ids: &[S]) -> Result<()> {
    for id in ids {
        if !CHECK_IDS.contains(&id.as_ref()) {
            return Err(Error::InvalidArgument(format!(
                "unknown check `{}`",
                id.as_ref()
            )));
        }
    }
    Ok(())
}

enum Outcome {
    Pass,
    Fail(Value),
    Skip(String),
}

fn skip(reason: &str) -> Result<Outcome> {
    Ok(Outcome::Skip(reason.to_string()))
}

fn verdict(ok: bool, witness: impl FnOnce() -> Value) -> Result<Outcome> {
    Ok(if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(witness())
    })
}

/// First element of `xs` failing `pred`.
fn first_failure<I: IntoIterator<Item = Elem>>(
    xs: I,
    mut pred: impl FnMut(Elem) -> bool,
) -> Option<Elem> {
    xs.into_iter().find(|&x| !pred(x))
}

struct Ctx<'a> {
    r: &'a FiniteRing,
    opts: &'a SuiteOptions,
    caps: Caps,
    sdt: OnceCell<(bool, WitnessTable)>,
    sdi: OnceCell<bool>,
    local: OnceCell<bool>,
    clean: OnceCell<CleanFlags>,
    corner_idempotents: OnceCell<Vec<Elem>>,
}

impl<'a> Ctx<'a> {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.opts.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn sdt(&self) -> bool {
        self.sdt.get_or_init(|| is_sdt(self.r)).0
    }

    fn witnesses(&self) -> &WitnessTable {
        &self.sdt.get_or_init(|| is_sdt(self.r)).1
    }

    fn sdi(&self) -> bool {
        *self.sdi.get_or_init(|| is_sdi(self.r).0)
    }

    fn local(&self) -> Result<bool> {
        if let Some(&l) = self.local.get() {
            return Ok(l);
        }
        let l = is_local(self.r)?;
        Ok(*self.local.get_or_init(|| l))
    }

    fn clean(&self) -> Result<CleanFlags> {
        if let Some(&c) = self.clean.get() {
            return Ok(c);
        }
        let c = clean_family(self.r)?;
        Ok(*self.clean.get_or_init(|| c))
    }

    fn two_unit(&self) -> bool {
        is_unit(self.r, self.r.from_int(2))
    }

    fn within(&self, order: Option<usize>) -> bool {
        order.is_some_and(|o| o <= self.opts.construct_limit)
    }

    fn power_order(&self, exp: u32) -> Option<usize> {
        self.r.order().checked_pow(exp)
    }

    /// All pairs of `xs × ys`, or a seeded sample of `pair_budget` of them.
    fn pairs(&self, xs: &[Elem], ys: &[Elem], salt: u64) -> Vec<(Elem, Elem)> {
        let total = xs.len().saturating_mul(ys.len());
        if total <= self.opts.pair_budget {
            xs.iter()
                .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
                .collect()
        } else {
            let mut rng = self.rng(salt);
            (0..self.opts.pair_budget)
                .map(|_| {
                    (
                        xs[rng.gen_range(0..xs.len())],
                        ys[rng.gen_range(0..ys.len())],
                    )
                })
                .collect()
        }
    }

    /// Idempotents visited by the corner checks, `0` and `1` first.
    fn corner_idempotents(&self) -> &[Elem] {
        self.corner_idempotents.get_or_init(|| {
            let r = self.r;
            let mut rest: Vec<Elem> = idempotents(r)
                .iter()
                .filter(|&e| e != r.zero() && e != r.one())
                .collect();
            let room = self.opts.max_corners.saturating_sub(2);
            if rest.len() > room {
                rest.shuffle(&mut self.rng(17));
                rest.truncate(room);
                rest.sort_unstable();
            }
            let mut out = vec![r.zero()];
            if r.one() != r.zero() {
                out.push(r.one());
            }
            out.extend(rest);
            out
        })
    }
}

fn delta_machinery(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    let d = delta(r);
    let (a1, a2) = (delta_alt1(r), delta_alt2(r));
    if &a1 != d || &a2 != d {
        return Ok(Outcome::Fail(json!({
            "delta": d, "delta_alt1": a1, "delta_alt2": a2
        })));
    }
    let j = jacobson_radical(r)?;
    if let Some(x) = first_failure(j.iter(), |x| d.contains(x)) {
        return Ok(Outcome::Fail(json!({ "radical_element_outside_delta": x })));
    }
    if let Some(pair) = subgroup_violation(r, d) {
        return Ok(Outcome::Fail(json!({ "not_additive_subgroup": pair })));
    }
    let dv = d.to_vec();
    for (x, y) in cx.pairs(&dv, &dv, 1) {
        if !d.contains(r.mul(x, y)) {
            return Ok(Outcome::Fail(json!({ "product_outside_delta": [x, y] })));
        }
    }
    let uv = units(r).to_vec();
    for (u, x) in cx.pairs(&uv, &dv, 2) {
        if !d.contains(r.mul(u, x)) || !d.contains(r.mul(x, u)) {
            return Ok(Outcome::Fail(
                json!({ "unit_multiple_outside_delta": [u, x] }),
            ));
        }
    }
    if let Some(e) = first_failure(idempotents(r).iter(), |e| e == r.zero() || !d.contains(e)) {
        return Ok(Outcome::Fail(json!({ "nonzero_idempotent_in_delta": e })));
    }
    let u = units(r);
    verdict(
        d.iter().all(|x| u.contains(r.add(r.one(), x))),
        || json!({ "one_plus_delta_not_unit": first_failure(d.iter(), |x| u.contains(r.add(r.one(), x))) }),
    )
}

fn nil_radical(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    let j = jacobson_radical(r)?;
    let mut power = j.clone();
    let mut k = 1;
    while power.len() > 1 {
        if k > r.order() {
            return Ok(Outcome::Fail(json!({ "radical_not_nilpotent": j })));
        }
        power = ideal_product(r, &power, j);
        k += 1;
    }
    // Nil_* ⊆ J, so J(R/J) = 0 makes the prime radical of R/J vanish.
    let (q, _) = cx.caps.quotient(r, j)?;
    let jq = jacobson_radical(&q)?;
    verdict(jq.len() == 1, || json!({ "radical_of_quotient": jq }))
}

fn lemma0_product(cx: &Ctx) -> Result<Outcome> {
    let Some((a, b)) = cx.r.as_product() else {
        return skip("not a product");
    };
    let (sa, sb) = (is_sdt(a).0, is_sdt(b).0);
    verdict(
        cx.sdt() == (sa && sb),
        || json!({ "product": cx.sdt(), "left": sa, "right": sb }),
    )
}

fn lemma0_quotient(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() {
        return skip("not SDT");
    }
    let j = jacobson_radical(r)?;
    if j.len() <= 1 {
        return skip("J = 0");
    }
    // J itself and the largest principal ideals inside it; the smaller
    // quotients keep the scan cheap.
    let mut principal: Vec<ElementSubset> = Vec::new();
    for x in j.iter().filter(|&x| x != r.zero()).take(64) {
        let seed = ElementSubset::from_elems(r, SubsetLabel::Custom, [x]);
        let i = ideal_generated_by(r, &seed);
        if &i != j && !principal.contains(&i) {
            principal.push(i);
        }
    }
    principal.sort_by_key(|i| std::cmp::Reverse(i.len()));
    principal.truncate(5);
    let mut ideals = vec![j.clone()];
    ideals.extend(principal);
    for i in &ideals {
        let (q, _) = cx.caps.quotient(r, i)?;
        if !is_sdt(&q).0 {
            return Ok(Outcome::Fail(json!({ "ideal": i })));
        }
    }
    Ok(Outcome::Pass)
}

fn lemma1(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() {
        return skip("not SDT");
    }
    let d = delta(r);
    let pairs = cx.pairs(&tripotents(r).to_vec(), &d.to_vec(), 3);
    for (e, x) in pairs {
        let e2 = r.mul(e, e);
        let (plus, minus) = (r.add(e, e2), r.sub(e, e2));
        let two_e = r.add(e, e);
        let two_e2 = r.add(e2, e2);
        let products = [
            r.mul(plus, x),
            r.mul(minus, x),
            r.mul(x, plus),
            r.mul(x, minus),
            r.mul(two_e, x),
            r.mul(two_e2, x),
        ];
        if !products.iter().all(|&p| d.contains(p)) {
            return Ok(Outcome::Fail(json!({ "tripotent": e, "delta_element": x })));
        }
    }
    Ok(Outcome::Pass)
}

fn lemma2(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() {
        return skip("not SDT");
    }
    let d = delta(r);
    let bad = first_failure(0..r.order(), |a| !d.contains(r.mul(a, a)) || d.contains(a));
    verdict(bad.is_none(), || json!({ "element": bad }))
}

fn lemma3(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() {
        return skip("not SDT");
    }
    let d = delta(r);
    let bad = first_failure(0..r.order(), |a| d.contains(r.sub(a, r.pow(a, 3))));
    verdict(bad.is_none(), || json!({ "element": bad }))
}

fn lemma4(cx: &Ctx) -> Result<Outcome> {
    if !cx.sdt() {
        return skip("not SDT");
    }
    verdict(
        reduced_mod_jacobson(cx.r)?,
        || json!({ "quotient_not_reduced": true }),
    )
}

fn lemma5(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() {
        return skip("not SDT");
    }
    let six = r.from_int(6);
    verdict(jacobson_radical(r)?.contains(six), || json!({ "six": six }))
}

fn cor1(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() {
        return skip("not SDT");
    }
    let j = jacobson_radical(r)?;
    let (two, three) = (r.from_int(2), r.from_int(3));
    let first = is_unit(r, two) == j.contains(three);
    let second = is_unit(r, three) == j.contains(two);
    verdict(
        first && second,
        || json!({ "two_unit_iff_three_radical": first, "three_unit_iff_two_radical": second }),
    )
}

fn pro3(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() || !cx.two_unit() {
        return skip("needs SDT with 2 a unit");
    }
    let (d, j) = (delta(r), jacobson_radical(r)?);
    verdict(d == j, || json!({ "delta": d, "jacobson": j }))
}

fn pro4(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() || !is_unit(r, r.from_int(3)) {
        return skip("needs SDT with 3 a unit");
    }
    verdict(cx.sdi(), || json!({ "sdi": false }))
}

fn sdi_delta_u(cx: &Ctx) -> Result<Outcome> {
    if !cx.sdi() {
        return skip("not SDI");
    }
    verdict(is_delta_u(cx.r), || json!({ "delta_u": false }))
}

fn sum_unit(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    let d = delta(r);
    let sums = units_sum(r);
    let contained = sums.is_subset(d);
    let du = is_delta_u(r);
    if du != contained {
        return Ok(Outcome::Fail(
            json!({ "delta_u": du, "sums_in_delta": contained }),
        ));
    }
    verdict(
        !du || &sums == d,
        || json!({ "unit_sums": sums, "delta": d }),
    )
}

fn cor2(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    let uc = cx.clean()?.uniquely_clean;
    let central = idempotents(r).is_subset(center(r));
    let rhs = cx.sdi() && central;
    verdict(
        uc == rhs,
        || json!({ "uniquely_clean": uc, "sdi": cx.sdi(), "central_idempotents": central }),
    )
}

fn prop_local(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() || !is_domain(r) {
        return skip("needs an SDT domain");
    }
    let covered = units(r).union(delta(r)).is_full();
    verdict(
        cx.local()? && covered,
        || json!({ "local": cx.local().ok(), "units_and_delta_cover": covered }),
    )
}

fn cor_s2nc_local(cx: &Ctx) -> Result<Outcome> {
    if !cx.local()? || !cx.clean()?.strongly_2_nil_clean {
        return skip("needs a local strongly 2-nil-clean ring");
    }
    verdict(cx.sdt(), || json!({ "sdt": false }))
}

fn prop_semitrip(cx: &Ctx) -> Result<Outcome> {
    if !cx.local()? || !is_semi_tripotent(cx.r)? {
        return skip("needs a local semi-tripotent ring");
    }
    verdict(cx.sdt(), || json!({ "sdt": false }))
}

fn lemma_ann(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.sdt() {
        return skip("not SDT");
    }
    let mut elems: Vec<Elem> = (0..r.order()).collect();
    let budget = (cx.opts.pair_budget / r.order()).max(1);
    if elems.len() > budget {
        elems.shuffle(&mut cx.rng(5));
        elems.truncate(budget);
        elems.sort_unstable();
    }
    let table = cx.witnesses();
    for a in elems {
        let (e, _) = table.get(a).expect("complete witness table");
        for x in 0..r.order() {
            let left = r.mul(x, a) == r.zero() && r.mul(x, e) != r.zero();
            let right = r.mul(a, x) == r.zero() && r.mul(e, x) != r.zero();
            if left || right {
                return Ok(Outcome::Fail(json!({ "a": a, "e": e, "annihilator": x })));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `eRe` and the map from its elements to the parent.
fn corner_of(cx: &Ctx, e: Elem) -> Result<(FiniteRing, Vec<Elem>)> {
    let c = cx.caps.corner(cx.r, e)?;
    let to_parent = (0..c.order())
        .map(|y| c.parent_element(y).expect("corner element"))
        .collect();
    Ok((c, to_parent))
}

fn corner_inclusion(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    let d = delta(r);
    for &e in cx.corner_idempotents() {
        let (c, to_parent) = corner_of(cx, e)?;
        let dc = delta(&c);
        for (y, &x) in to_parent.iter().enumerate() {
            if d.contains(x) && !dc.contains(y) {
                return Ok(Outcome::Fail(json!({ "idempotent": e, "element": x })));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn cor_corner_ring(cx: &Ctx) -> Result<Outcome> {
    if !cx.sdt() {
        return skip("not SDT");
    }
    for &e in cx.corner_idempotents() {
        let (c, _) = corner_of(cx, e)?;
        if !is_sdt(&c).0 {
            return Ok(Outcome::Fail(json!({ "idempotent": e })));
        }
    }
    Ok(Outcome::Pass)
}

fn lemma_trivial_tripotent(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !cx.local()? || !cx.two_unit() {
        return skip("needs a local ring with 2 a unit");
    }
    let trivial = [r.zero(), r.one(), r.neg(r.one())];
    let t = tripotents(r);
    verdict(
        t.iter().all(|x| trivial.contains(&x)),
        || json!({ "tripotents": t }),
    )
}

fn thm_boolean_yaqub(cx: &Ctx) -> Result<Outcome> {
    if !cx.sdt() {
        return skip("not SDT");
    }
    match verify_boolean_yaqub(cx.r) {
        Ok(rep) => verdict(rep.verdict, || json!(rep)),
        Err(e @ Error::ImplicationViolation { .. }) => Ok(Outcome::Fail(json!(e.to_string()))),
        Err(e) => Err(e),
    }
}

fn residue_order(cx: &Ctx) -> Result<usize> {
    let (q, _) = cx.caps.quotient(cx.r, jacobson_radical(cx.r)?)?;
    Ok(q.order())
}

fn te_proposition(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    let trivial = [r.zero(), r.one(), r.neg(r.one())];
    if r.is_zero_ring() || !tripotents(r).iter().all(|x| trivial.contains(&x)) {
        return skip("needs a non-zero ring with only trivial tripotents");
    }
    if !cx.within(cx.power_order(2)) {
        return skip("TE(R) is above the construction limit");
    }
    let te = cx.caps.trivial_extension(r)?;
    let lhs = is_sdt(&te).0;
    let k = residue_order(cx)?;
    verdict(
        lhs == (k == 2 || k == 3),
        || json!({ "te_sdt": lhs, "residue_order": k }),
    )
}

fn final_example(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if !tripotents(r).is_subset(center(r)) {
        return skip("tripotents are not central");
    }
    let mut tried = 0;
    for (label, exp) in [("P2", 2), ("P3", 3), ("TE", 2)] {
        if !cx.within(cx.power_order(exp)) {
            continue;
        }
        let ext = match label {
            "P2" => cx.caps.truncated_poly(r, 2)?,
            "P3" => cx.caps.truncated_poly(r, 3)?,
            _ => cx.caps.trivial_extension(r)?,
        };
        tried += 1;
        let s = is_sdt(&ext).0;
        if s != cx.sdt() {
            return Ok(Outcome::Fail(
                json!({ "extension": label, "sdt": s, "base_sdt": cx.sdt() }),
            ));
        }
    }
    if tried == 0 {
        return skip("every extension is above the construction limit");
    }
    Ok(Outcome::Pass)
}

fn theorem_local(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if r.is_zero_ring() || !cx.local()? {
        return skip("not local");
    }
    if !cx.within(cx.power_order(6)) {
        return skip("T3(R) is above the construction limit");
    }
    match check_theorem_local(r, 3) {
        Ok(_) => Ok(Outcome::Pass),
        Err(e @ Error::ImplicationViolation { .. }) => Ok(Outcome::Fail(json!(e.to_string()))),
        Err(e) => Err(e),
    }
}

fn sdt_builder(cx: &Ctx) -> Result<Outcome> {
    let r = cx.r;
    if r.is_zero_ring() || !cx.local()? {
        return skip("not local");
    }
    if !cx.within(cx.power_order(3)) {
        return skip("T2(R) is above the construction limit");
    }
    let t = cx.caps.upper_triangular(r, 2)?;
    let builder = match SdtBuilder::new(&t) {
        Ok(b) => b,
        Err(Error::PreconditionFailed(why)) => return skip(&why),
        Err(e) => return Err(e),
    };
    let dt = delta(&t);
    for a in 0..t.order() {
        let rep = builder.represent(a)?;
        let ok = t.pow(rep.e, 3) == rep.e
            && t.add(rep.e, rep.d) == a
            && t.commute(rep.e, rep.d)
            && dt.contains(rep.d);
        if !ok {
            return Ok(Outcome::Fail(json!({ "a": a, "e": rep.e, "d": rep.d })));
        }
    }
    Ok(Outcome::Pass)
}

/// Draws `A` and `E` in `T3(R)` meeting the hypotheses of `case` away from
/// the `(1,3)` entry, or `None` if this draw has none.
fn draw_workhorse_config(
    r: &FiniteRing,
    case: WorkhorseCase,
    rng: &mut ChaCha8Rng,
) -> Option<(Matrix, Matrix)> {
    let n = r.order();
    let sign = |s: i8| match s {
        0 => r.zero(),
        1 => r.one(),
        _ => r.neg(r.one()),
    };
    let (se, sf) = case.signs();
    let (e, f) = (sign(se), sign(sf));
    let trip = tripotents(r).to_vec();
    let big_f = trip[rng.gen_range(0..trip.len())];
    let pick = |rng: &mut ChaCha8Rng, pred: &dyn Fn(Elem) -> bool| {
        let sols: Vec<Elem> = (0..n).filter(|&x| pred(x)).collect();
        (!sols.is_empty()).then(|| sols[rng.gen_range(0..sols.len())])
    };
    // E^3 = E at (1,2) and (2,3); e and f are central.
    let left = r.add(r.add(r.mul(e, e), r.mul(e, big_f)), r.mul(big_f, big_f));
    let right = r.add(r.add(r.mul(big_f, big_f), r.mul(big_f, f)), r.mul(f, f));
    let gamma = pick(rng, &|g| r.mul(g, left) == g)?;
    let delta_ = pick(rng, &|d| r.mul(right, d) == d)?;
    let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
    let bb = pick(rng, &|x| r.commute(x, big_f))?;
    if !r.commute(a, e) || !r.commute(b, f) {
        return None;
    }
    // AE = EA at (1,2) and (2,3).
    let alpha = pick(rng, &|al| {
        r.add(r.mul(a, gamma), r.mul(al, big_f)) == r.add(r.mul(e, al), r.mul(gamma, bb))
    })?;
    let beta = pick(rng, &|be| {
        r.add(r.mul(bb, delta_), r.mul(be, f)) == r.add(r.mul(big_f, be), r.mul(delta_, b))
    })?;
    let c = rng.gen_range(0..n);
    let z = r.zero();
    let am = Matrix::from_rows(&[vec![a, alpha, c], vec![z, bb, beta], vec![z, z, b]]);
    let em = Matrix::from_rows(&[vec![e, gamma, z], vec![z, big_f, delta_], vec![z, z, f]]);
    Some((am, em))
}

fn workhorse(cx: &Ctx, case: WorkhorseCase) -> Result<Outcome> {
    let r = cx.r;
    if r.is_zero_ring() || !cx.two_unit() {
        return skip("needs 2 to be a unit");
    }
    let mut rng = cx.rng(100 + case as u64);
    let mut solved = 0;
    for _ in 0..cx.opts.workhorse_samples {
        let Some((a, e)) = draw_workhorse_config(r, case, &mut rng) else {
            continue;
        };
        if case == WorkhorseCase::IV {
            let gfd = r.mul(r.mul(e.get(0, 1), e.get(1, 1)), e.get(1, 2));
            if gfd != r.zero() {
                return Ok(Outcome::Fail(
                    json!({ "a": a.rows(), "e": e.rows(), "gamma_f_delta": gfd }),
                ));
            }
        }
        match workhorse_z(r, case, &a, &e) {
            Ok(Some(_)) => solved += 1,
            Ok(None) => {}
            Err(err @ Error::InternalInvariant(_)) => {
                return Ok(Outcome::Fail(
                    json!({ "a": a.rows(), "e": e.rows(), "error": err.to_string() }),
                ))
            }
            Err(err) => return Err(err),
        }
    }
    if solved == 0 {
        return skip("no sampled configuration was solvable");
    }
    Ok(Outcome::Pass)
}

fn run_check(cx: &Ctx, id: &str) -> Result<Outcome> {
    match id {
        "delta-machinery" => delta_machinery(cx),
        "nil-radical" => nil_radical(cx),
        "lemma0-product" => lemma0_product(cx),
        "lemma0-quotient" => lemma0_quotient(cx),
        "lemma1" => lemma1(cx),
        "lemma2" => lemma2(cx),
        "lemma3" => lemma3(cx),
        "lemma4" => lemma4(cx),
        "lemma5" => lemma5(cx),
        "cor1" => cor1(cx),
        "pro3" => pro3(cx),
        "pro4" => pro4(cx),
        "sdi-delta-u" => sdi_delta_u(cx),
        "sum-unit" => sum_unit(cx),
        "cor2" => cor2(cx),
        "prop-local" => prop_local(cx),
        "cor-s2nc-local" => cor_s2nc_local(cx),
        "prop-semitrip" => prop_semitrip(cx),
        "lemma-ann" => lemma_ann(cx),
        "corner-inclusion" => corner_inclusion(cx),
        "cor-corner-ring" => cor_corner_ring(cx),
        "lemma-trivial-tripotent" => lemma_trivial_tripotent(cx),
        "thm-boolean-yaqub" => thm_boolean_yaqub(cx),
        "te-proposition" => te_proposition(cx),
        "final-example" => final_example(cx),
        "theorem-local" => theorem_local(cx),
        "sdt-builder" => sdt_builder(cx),
        other => {
            let label = other.strip_prefix("workhorse-").unwrap_or_default();
            let case = WorkhorseCase::ALL
                .into_iter()
                .find(|c| c.label() == label)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{other}`")))?;
            workhorse(cx, case)
        }
    }
}

/// Runs the selected checks on `r`, in [`CHECK_IDS`] order.
pub fn run_suite(r: &FiniteRing, opts: &SuiteOptions) -> Result<SuiteResult> {
    if let Some(only) = &opts.only {
        validate_ids(only)?;
    }
    let cx = Ctx {
        r,
        opts,
        caps: Caps::default(),
        sdt: OnceCell::new(),
        sdi: OnceCell::new(),
        local: OnceCell::new(),
        clean: OnceCell::new(),
        corner_idempotents: OnceCell::new(),
    };
    let mut checks = Vec::new();
    for &id in CHECK_IDS {
        if let Some(only) = &opts.only {
            if !only.iter().any(|o| o == id) {
                continue;
            }
        }
        let (status, reason, counterexample) = match run_check(&cx, id)? {
            Outcome::Pass => (Status::Pass, None, None),
            Outcome::Fail(v) => (Status::Fail, None, Some(v)),
            Outcome::Skip(why) => (Status::Skipped, Some(why), None),
        };
        checks.push(CheckResult {
            id,
            status,
            reason,
            counterexample,
        });
    }
    Ok(SuiteResult {
        ring: r.name().to_string(),
        order: r.order(),
        checks,
    })
}
