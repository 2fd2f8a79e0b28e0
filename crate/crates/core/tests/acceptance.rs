//! Acceptance gate: each criterion prints one PASS/FAIL line and the binary
//! exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{corner, mat, poly, prod, te, tri, zn, Oracle, Shape};
use finring::catalog::{self, CatalogEntry};
use finring::classify::{classify_ring, count_decompositions, is_sdt, ClassifyOptions};
use finring::decompose::verify_boolean_yaqub;
use finring::invariants::{
    delta, delta_alt1, delta_alt2, idempotents, jacobson_radical, tripotents, units,
};
use finring::parser::{format, parse_ring_expr, ExprKind, RingExpr};
use finring::suite::{run_suite, uncovered, SuiteOptions};
use finring::tables::{export_tables, TableRing};
use finring::triangular::{check_theorem_local, workhorse_z, Matrix, SdtBuilder, WorkhorseCase};
use finring::{Caps, FiniteRing};

/// Rings swept by the catalog criteria. The only larger entry, T3(Z9), has
/// 531441 elements and is out of reach for every exhaustive scan.
const SWEEP_ORDER: usize = 4096;

fn oracle_shape(name: &str) -> Option<Shape> {
    let z = zn;
    let t22 = || tri(2, z(2));
    Some(match name {
        "GF4" => Shape::Gf4,
        "Z2 x Z3" => prod(z(2), z(3)),
        "Z4 x Z3" => prod(z(4), z(3)),
        "Z2 x Z9" => prod(z(2), z(9)),
        "T2(Z2)" => t22(),
        "T3(Z2)" => tri(3, z(2)),
        "T2(Z3)" => tri(2, z(3)),
        "T3(Z3)" => tri(3, z(3)),
        "T2(Z4)" => tri(2, z(4)),
        "T3(Z4)" => tri(3, z(4)),
        "T2(Z9)" => tri(2, z(9)),
        "T2(Z5)" => tri(2, z(5)),
        "M2(Z2)" => mat(2, z(2)),
        "TE(Z2)" => te(z(2)),
        "TE(Z3)" => te(z(3)),
        "TE(Z4)" => te(z(4)),
        "P2(Z2)" => poly(2, z(2)),
        "P2(Z3)" => poly(2, z(3)),
        "P3(Z3)" => poly(3, z(3)),
        "corner(T2(Z2), 1)" => corner(t22(), 1),
        "corner(T2(Z2), 4)" => corner(t22(), 4),
        "corner(T2(Z2), 3)" => corner(t22(), 3),
        _ => z(name.strip_prefix('Z')?.parse().ok()?),
    })
}

fn sweep() -> impl Iterator<Item = (&'static CatalogEntry, FiniteRing)> {
    catalog::entries_up_to(SWEEP_ORDER)
        .map(|e| (e, e.build(&Caps::default()).expect("catalog ring builds")))
}

const SDT_TRUE: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z12", "Z16", "Z27", "Z2 x Z3", "Z4 x Z3", "Z2 x Z9",
    "P2(Z2)", "P2(Z3)", "P3(Z3)", "TE(Z2)", "TE(Z3)", "TE(Z4)", "T2(Z2)", "T2(Z3)", "T3(Z2)",
    "T3(Z3)", "T3(Z4)",
];
const SDT_FALSE: &[&str] = &["Z5", "Z7", "Z10", "Z11", "GF4", "M2(Z2)", "T2(Z5)"];

fn sdt_pins() -> Result<String, String> {
    let mut checked = 0;
    for (names, expected) in [(SDT_TRUE, true), (SDT_FALSE, false)] {
        for &name in names {
            let entry = catalog::find(name).ok_or(format!("{name} missing from catalog"))?;
            if entry.pin("sdt") != Some(expected) {
                return Err(format!("{name}: catalog pin is {:?}", entry.pin("sdt")));
            }
            let oracle = Oracle::build(&oracle_shape(name).unwrap()).is_sdt();
            let lib = is_sdt(&entry.build(&Caps::default()).unwrap()).0;
            if oracle != expected || lib != expected {
                return Err(format!(
                    "{name}: expected {expected}, oracle {oracle}, library {lib}"
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} pins"))
}

fn boolean_yaqub() -> Result<String, String> {
    let mut n = 0;
    for (e, r) in sweep() {
        if !is_sdt(&r).0 {
            continue;
        }
        let rep = verify_boolean_yaqub(&r).map_err(|err| format!("{}: {err}", e.name))?;
        if !(rep.verdict && rep.crt_bijective && rep.r1.boolean && rep.r2.yaqub) {
            return Err(format!("{}: {rep:?}", e.name));
        }
        n += 1;
    }
    Ok(format!("{n} SDT rings"))
}

fn lemma_suite() -> Result<String, String> {
    let opts = SuiteOptions::default();
    let mut results = Vec::new();
    for (e, r) in sweep() {
        let res = run_suite(&r, &opts).map_err(|err| format!("{}: {err}", e.name))?;
        if let Some(f) = res.failures().next() {
            return Err(format!("{}: {} failed: {:?}", e.name, f.id, f.reason));
        }
        results.push(res);
    }
    let gaps = uncovered(&results);
    if !gaps.is_empty() {
        return Err(format!("never passed: {gaps:?}"));
    }
    Ok(format!("{} rings", results.len()))
}

fn delta_machinery() -> Result<String, String> {
    let mut n = 0;
    for (e, r) in sweep() {
        let o = Oracle::build(&oracle_shape(e.name).unwrap());
        let d = delta(&r);
        let fail = |what: &str| Err(format!("{}: {what}", e.name));
        if d.to_vec() != o.delta() {
            return fail("Δ differs from the oracle");
        }
        if delta_alt1(&r).to_vec() != d.to_vec() || delta_alt2(&r).to_vec() != d.to_vec() {
            return fail("characterizations of Δ disagree");
        }
        let j = jacobson_radical(&r).unwrap();
        if j.to_vec() != o.jacobson() || !j.is_subset(d) {
            return fail("J is wrong or not inside Δ");
        }
        let dv = d.to_vec();
        let (us, one) = (o.units(), o.one);
        let mask = o.mask(&dv);
        let closed = dv.iter().all(|&x| {
            dv.iter().all(|&y| mask[o.sub(x, y)] && mask[o.mul(x, y)])
                && us.iter().all(|&u| mask[o.mul(u, x)] && mask[o.mul(x, u)])
        });
        if !closed || (o.n > 1 && mask[one]) {
            return fail("Δ is not closed under differences, products and unit multiples");
        }
        if idempotents(&r)
            .iter()
            .any(|x| x != r.zero() && d.contains(x))
        {
            return fail("Δ meets the non-zero idempotents");
        }
        n += 1;
    }
    Ok(format!("{n} rings"))
}

fn theorem_local() -> Result<String, String> {
    let caps = Caps::default();
    let mut lines = Vec::new();
    for name in ["Z2", "Z3", "Z4", "GF4", "Z5"] {
        let r = catalog::find(name).unwrap().build(&caps).unwrap();
        let rep = check_theorem_local(&r, 3).map_err(|err| format!("{name}: {err}"))?;
        if rep.lhs_sdt != rep.rhs_condition {
            return Err(format!("{name}: {rep:?}"));
        }
        lines.push(format!("{name} {} {}ms", rep.lhs_sdt, rep.elapsed_ms));
    }
    Ok(lines.join(", "))
}

/// 3 × 3 upper-triangular arithmetic mod 9.
type M3 = [[u32; 3]; 3];

fn m3_mul(a: &M3, b: &M3) -> M3 {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum::<u32>() % 9;
        }
    }
    c
}

fn to_matrix(m: &M3) -> Matrix {
    Matrix::from_rows(
        &m.iter()
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect::<Vec<_>>(),
    )
}

/// `E³ = E` and `AE = EA` at every entry, optionally skipping `(1,3)`.
fn tripotent_commuting(a: &M3, e: &M3, skip_corner: bool) -> bool {
    let cube = m3_mul(&m3_mul(e, e), e);
    let (ae, ea) = (m3_mul(a, e), m3_mul(e, a));
    (0..3).all(|i| {
        (i..3).all(|j| {
            (skip_corner && (i, j) == (0, 2)) || (cube[i][j] == e[i][j] && ae[i][j] == ea[i][j])
        })
    })
}

fn sign9(s: i8) -> u32 {
    match s {
        1 => 1,
        -1 => 8,
        _ => 0,
    }
}

struct CaseTally {
    configs: usize,
    solved: usize,
}

/// Runs the workhorse on one configuration and checks any returned `z`.
fn run_config(case: WorkhorseCase, a: &M3, mut e: M3, tally: &mut CaseTally) -> Result<(), String> {
    let z9 = Caps::default().zmod(9).unwrap();
    tally.configs += 1;
    let z = workhorse_z(&z9, case, &to_matrix(a), &to_matrix(&e))
        .map_err(|err| format!("case {}: {err} for A={a:?} E={e:?}", case.label()))?;
    if let Some(z) = z {
        e[0][2] = z as u32;
        if !tripotent_commuting(a, &e, false) {
            return Err(format!(
                "case {}: z={z} fails for A={a:?} E={e:?}",
                case.label()
            ));
        }
        tally.solved += 1;
    }
    Ok(())
}

fn solutions(pred: impl Fn(u32) -> bool) -> Vec<u32> {
    (0..9).filter(|&x| pred(x)).collect()
}

fn workhorse() -> Result<String, String> {
    let mut out = Vec::new();
    // Closed-form cases: every (γ, δ, F) meeting the hypotheses, with every
    // diagonal of A and every compatible (α, β).
    for case in [WorkhorseCase::I, WorkhorseCase::II, WorkhorseCase::III] {
        let (se, sf) = case.signs();
        let (ef, ff) = (sign9(se), sign9(sf));
        let mut tally = CaseTally {
            configs: 0,
            solved: 0,
        };
        let mut triples = 0;
        for g in 0..9 {
            for d in 0..9 {
                for f in 0..9 {
                    let e = [[ef, g, 0], [0, f, d], [0, 0, ff]];
                    let zero = [[0; 3]; 3];
                    if !tripotent_commuting(&zero, &e, true) {
                        continue;
                    }
                    triples += 1;
                    for x in 0..729u32 {
                        let (ad, bd, cd) = (x % 9, x / 9 % 9, x / 81);
                        let alphas =
                            solutions(|al| (ad * g + al * f) % 9 == (ef * al + g * bd) % 9);
                        let betas = solutions(|be| (bd * d + be * ff) % 9 == (f * be + d * cd) % 9);
                        for &al in &alphas {
                            for &be in &betas {
                                let a = [[ad, al, (al + be) % 9], [0, bd, be], [0, 0, cd]];
                                run_config(case, &a, e, &mut tally)?;
                            }
                        }
                    }
                }
            }
        }
        if tally.solved != tally.configs {
            return Err(format!("case {}: closed form returned None", case.label()));
        }
        out.push(format!(
            "({}) {triples} triples/{} configs",
            case.label(),
            tally.configs
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in WorkhorseCase::ALL
        .into_iter()
        .filter(|c| !c.is_closed_form())
    {
        let (se, sf) = case.signs();
        let (ef, ff) = (sign9(se), sign9(sf));
        let mut tally = CaseTally {
            configs: 0,
            solved: 0,
        };
        while tally.configs < 10_000 {
            let f = [0, 1, 8][rng.gen_range(0..3)];
            let gs = solutions(|g| {
                let e = [[ef, g, 0], [0, f, 0], [0, 0, ff]];
                tripotent_commuting(&[[0; 3]; 3], &e, true)
            });
            let ds = solutions(|d| {
                let e = [[ef, 0, 0], [0, f, d], [0, 0, ff]];
                tripotent_commuting(&[[0; 3]; 3], &e, true)
            });
            let (g, d) = (
                gs[rng.gen_range(0..gs.len())],
                ds[rng.gen_range(0..ds.len())],
            );
            let e = [[ef, g, 0], [0, f, d], [0, 0, ff]];
            if !tripotent_commuting(&[[0; 3]; 3], &e, true) {
                continue;
            }
            if case == WorkhorseCase::IV && g * f * d % 9 != 0 {
                return Err(format!("case (iv): γFδ ≠ 0 for E={e:?}"));
            }
            let (ad, bd, cd, c) = (
                rng.gen_range(0..9),
                rng.gen_range(0..9),
                rng.gen_range(0..9),
                rng.gen_range(0..9),
            );
            let alphas = solutions(|al| (ad * g + al * f) % 9 == (ef * al + g * bd) % 9);
            let betas = solutions(|be| (bd * d + be * ff) % 9 == (f * be + d * cd) % 9);
            if alphas.is_empty() || betas.is_empty() {
                continue;
            }
            let al = alphas[rng.gen_range(0..alphas.len())];
            let be = betas[rng.gen_range(0..betas.len())];
            let a = [[ad, al, c], [0, bd, be], [0, 0, cd]];
            run_config(case, &a, e, &mut tally)?;
        }
        if tally.solved == 0 {
            return Err(format!("case {}: nothing solvable", case.label()));
        }
        out.push(format!(
            "({}) {}/{} solved",
            case.label(),
            tally.solved,
            tally.configs
        ));
    }
    Ok(out.join(", "))
}

fn sdt_representations() -> Result<String, String> {
    let caps = Caps::default();
    let mut lines = Vec::new();
    for (n, m, shape) in [(3, 3, tri(3, zn(3))), (2, 9, tri(2, zn(9)))] {
        let t = caps.upper_triangular(&caps.zmod(m).unwrap(), n).unwrap();
        let o = Oracle::build(&shape);
        let dmask = o.mask(&o.delta());
        let builder = SdtBuilder::new(&t).map_err(|err| format!("{}: {err}", t.name()))?;
        for a in 0..t.order() {
            let rep = builder
                .represent(a)
                .map_err(|err| format!("{} at {a}: {err}", t.name()))?;
            let (e, d) = (rep.e, rep.d);
            let cube = o.mul(o.mul(e, e), e);
            if cube != e || !dmask[d] || !o.commute(e, d) || o.add(e, d) != a {
                return Err(format!(
                    "{} at {a}: bad representation ({e}, {d})",
                    t.name()
                ));
            }
        }
        lines.push(format!("{} {} elements", t.name(), t.order()));
    }
    let z9 = caps.zmod(9).unwrap();
    let counts = count_decompositions(&z9, tripotents(&z9), delta(&z9), true);
    let o = Oracle::build(&zn(9));
    let dmask = o.mask(&o.delta());
    let trip = o.potents(3);
    for (a, &count) in counts.iter().enumerate() {
        let oracle = o.commuting_splits(a, &trip, &dmask).len();
        if count != 1 || oracle != 1 {
            return Err(format!(
                "Z9 element {a}: {count} library / {oracle} oracle representations"
            ));
        }
    }
    lines.push("Z9 unique".into());
    Ok(lines.join(", "))
}

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> RingExpr {
    let nat = |rng: &mut ChaCha8Rng| rng.gen_range(1..=20usize);
    let leaf = depth == 0 || rng.gen_bool(0.3);
    let kind = if leaf {
        if rng.gen_bool(0.15) {
            ExprKind::Gf4
        } else {
            ExprKind::Zmod(rng.gen_range(1..=1000))
        }
    } else {
        let sub = |rng: &mut ChaCha8Rng| Box::new(random_expr(rng, depth - 1));
        match rng.gen_range(0..5) {
            0 => ExprKind::Product(sub(rng), sub(rng)),
            1 => ExprKind::Triangular(nat(rng), sub(rng)),
            2 => ExprKind::FullMatrix(nat(rng), sub(rng)),
            3 => ExprKind::TrivialExt(sub(rng)),
            _ => ExprKind::TruncPoly(nat(rng), sub(rng)),
        }
    };
    RingExpr::new(kind)
}

const MALFORMED: &[(&str, usize)] = &[
    ("", 0),
    ("T0(Z2)", 1),
    ("Zx", 1),
    ("Z2 Z3", 3),
    ("Z2x", 3),
    ("Z1048577", 1),
    ("Z2 x", 4),
    ("T3(Z2", 5),
    ("(Z2", 3),
    ("Z2)", 2),
    ("GF5", 0),
    ("Q", 0),
];

fn parser() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..1000 {
        let ast = random_expr(&mut rng, 4);
        let text = format(&ast);
        let back = parse_ring_expr(&text).map_err(|e| format!("#{i} `{text}`: {e}"))?;
        if back != ast || format(&back) != text {
            return Err(format!("#{i} `{text}` does not round-trip"));
        }
    }
    for &(input, offset) in MALFORMED {
        match parse_ring_expr(input) {
            Err(e) if e.byte_offset == offset => {}
            other => {
                return Err(format!(
                    "`{input}`: expected error at {offset}, got {other:?}"
                ))
            }
        }
    }
    Ok(format!("1000 ASTs, {} malformed inputs", MALFORMED.len()))
}

fn export_round_trip() -> Result<String, String> {
    let caps = Caps::default();
    let opts = ClassifyOptions {
        witnesses: true,
        ..ClassifyOptions::default()
    };
    let mut n = 0;
    for e in catalog::entries_up_to(256) {
        let r = e.build(&caps).unwrap();
        let json = serde_json::to_string(&export_tables(&r).unwrap()).unwrap();
        let back = TableRing::from_json(&json)
            .and_then(|t| t.build(&caps, e.name))
            .map_err(|err| format!("{}: {err}", e.name))?;
        let (a, b) = (classify_ring(&r, &opts), classify_ring(&back, &opts));
        let (a, b) = match (a, b) {
            (Ok(a), Ok(b)) => (a, b),
            (a, b) => return Err(format!("{}: {:?} vs {:?}", e.name, a.err(), b.err())),
        };
        if a.flags != b.flags
            || a.witnesses != b.witnesses
            || a.char_data != b.char_data
            || a.ring.order != b.ring.order
        {
            return Err(format!("{}: reports differ", e.name));
        }
        if units(&r).to_vec() != units(&back).to_vec() {
            return Err(format!("{}: unit sets differ", e.name));
        }
        n += 1;
    }
    Ok(format!("{n} rings"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<String, String>); 9] = [
        ("catalog sdt pins", sdt_pins),
        ("boolean x yaqub split of SDT rings", boolean_yaqub),
        ("verification suite over the catalog", lemma_suite),
        ("delta machinery", delta_machinery),
        ("T3(R) for local R", theorem_local),
        ("workhorse soundness over Z9", workhorse),
        ("constructive SDT representations", sdt_representations),
        ("parser round trip and error offsets", parser),
        ("table export round trip", export_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
