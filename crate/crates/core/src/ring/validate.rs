//! Exhaustive (or sampled) checking of the ring axioms.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants;

use super::{Coordinates, Elem, FiniteRing, StructureTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddIdentity,
    AddInverse,
    AbelianAdd,
    AddAssociative,
    MulIdentity,
    OneNotZero,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
    Encoding,
    FastUnitPredicate,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AddIdentity => "add-identity",
            Axiom::AddInverse => "add-inverse",
            Axiom::AbelianAdd => "abelian-add",
            Axiom::AddAssociative => "add-associative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::OneNotZero => "one-not-zero",
            Axiom::MulAssociative => "mul-associative",
            Axiom::LeftDistributive => "left-distributive",
            Axiom::RightDistributive => "right-distributive",
            Axiom::Encoding => "encoding",
            Axiom::FastUnitPredicate => "fast-unit-predicate",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Passed,
    Failed { witness: Vec<Elem> },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub order: usize,
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.outcome, Outcome::Failed { .. }))
    }

    pub fn outcome(&self, axiom: Axiom) -> Option<&Outcome> {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .map(|c| &c.outcome)
    }

    /// First failed axiom in check order.
    pub fn first_failure(&self) -> Option<(Axiom, &[Elem])> {
        self.checks.iter().find_map(|c| match &c.outcome {
            Outcome::Failed { witness } => Some((c.axiom, witness.as_slice())),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    /// Every pair and triple; refused above the validation cap.
    Full,
    /// Random triples for the cubic axioms, plus a fast-predicate sample.
    Sampled { samples: usize, seed: u64 },
}

/// Elements checked exhaustively against the fast unit predicate.
const UNIT_CHECK_LIMIT: usize = 1024;

pub fn validate_ring(r: &FiniteRing, mode: ValidationMode, cap: usize) -> Result<ValidationReport> {
    if mode == ValidationMode::Full && r.order() > cap {
        return Err(Error::CapExceeded {
            order: r.order(),
            cap,
        });
    }
    let n = r.order();
    let mut checks = Vec::new();
    let mut push = |axiom: Axiom, witness: Option<Vec<Elem>>| {
        checks.push(AxiomCheck {
            axiom,
            outcome: match witness {
                None => Outcome::Passed,
                Some(witness) => Outcome::Failed { witness },
            },
        })
    };

    // Commutativity of addition goes first: a single bad entry in an
    // addition table is reported as such rather than as a broken identity.
    let pairs = |f: &dyn Fn(Elem, Elem) -> bool| -> Option<Vec<Elem>> {
        for x in 0..n {
            for y in 0..n {
                if !f(x, y) {
                    return Some(vec![x, y]);
                }
            }
        }
        None
    };
    push(Axiom::AbelianAdd, pairs(&|x, y| r.add(x, y) == r.add(y, x)));

    let (zero, one) = (r.zero(), r.one());
    push(
        Axiom::AddIdentity,
        (0..n)
            .find(|&x| r.add(x, zero) != x || r.add(zero, x) != x)
            .map(|x| vec![x]),
    );
    push(
        Axiom::AddInverse,
        (0..n)
            .find(|&x| r.add(x, r.neg(x)) != zero)
            .map(|x| vec![x]),
    );
    push(
        Axiom::MulIdentity,
        (0..n)
            .find(|&x| r.mul(x, one) != x || r.mul(one, x) != x)
            .map(|x| vec![x]),
    );
    push(Axiom::OneNotZero, (n > 1 && one == zero).then(|| vec![one]));

    let triple_laws: [(Axiom, &dyn Fn(Elem, Elem, Elem) -> bool); 4] = [
        (Axiom::AddAssociative, &|x, y, z| {
            r.add(r.add(x, y), z) == r.add(x, r.add(y, z))
        }),
        (Axiom::MulAssociative, &|x, y, z| {
            r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z))
        }),
        (Axiom::LeftDistributive, &|x, y, z| {
            r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z))
        }),
        (Axiom::RightDistributive, &|x, y, z| {
            r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z))
        }),
    ];
    match mode {
        ValidationMode::Full => {
            for (axiom, law) in triple_laws {
                let mut witness = None;
                'outer: for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            if !law(x, y, z) {
                                witness = Some(vec![x, y, z]);
                                break 'outer;
                            }
                        }
                    }
                }
                push(axiom, witness);
            }
        }
        ValidationMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let draws: Vec<[Elem; 3]> = (0..samples)
                .map(|_| {
                    [
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                    ]
                })
                .collect();
            for (axiom, law) in triple_laws {
                let witness = draws
                    .iter()
                    .find(|t| !law(t[0], t[1], t[2]))
                    .map(|t| t.to_vec());
                push(axiom, witness);
            }
        }
    }

    let encoding_ok = (0..n).find(|&x| r.encode(&r.decode(x)) != Ok(x));
    push(Axiom::Encoding, encoding_ok.map(|x| vec![x]));

    if r.is_unit_fast(0).is_some() {
        let candidates: Vec<Elem> = if n <= UNIT_CHECK_LIMIT {
            (0..n).collect()
        } else {
            let seed = match mode {
                ValidationMode::Sampled { seed, .. } => seed,
                ValidationMode::Full => 0,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
            (0..UNIT_CHECK_LIMIT).map(|_| rng.gen_range(0..n)).collect()
        };
        let bad = candidates
            .into_iter()
            .find(|&x| r.is_unit_fast(x) != Some(invariants::is_unit_brute(r, x)));
        push(Axiom::FastUnitPredicate, bad.map(|x| vec![x]));
    } else {
        checks.push(AxiomCheck {
            axiom: Axiom::FastUnitPredicate,
            outcome: Outcome::Skipped {
                reason: format!("{} rings use the brute-force unit scan", r.tag()),
            },
        });
    }

    // Structured rings get their digits checked explicitly as well.
    if matches!(
        r.tag(),
        StructureTag::UpperTriangular | StructureTag::FullMatrix | StructureTag::TruncatedPoly
    ) {
        debug_assert!(matches!(r.decode(0), Coordinates::Digits(_)));
    }

    Ok(ValidationReport { order: n, checks })
}
