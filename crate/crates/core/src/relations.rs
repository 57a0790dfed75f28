//! The catalog of defining relations and the verification driver.
//!
//! The presented algebra is generated by a central element, diagonal
//! currents `alpha_i(z)` and ladder currents `X(±alpha_i, z)` for
//! `0 <= i <= n`, subject to ten families of relations:
//!
//! 1. `[alpha_0(z), alpha_0(w)]` is central with weight `k1`.
//! 2. `[alpha_i(z), alpha_j(w)]` is central with a tabulated weight, for
//!    the stated pairs `i <= j`, `j >= 1`, excluding the two tail pairs.
//! 3. The same with the tail-pair weights, for `(n-1, n)` and `(n, n)`.
//! 4. `[alpha_i(z), X(±alpha_j, w)] = ±a_ij X(±alpha_j, z) d(z-w)`.
//! 5. `[X(±alpha_i, z), X(±alpha_i, w)] = 0` (same sign on both).
//! 6. `[X(alpha_i, z), X(-alpha_j, w)] = delta_ij {alpha_i(z) d(z-w) +
//!    c6(i) d'_w(z-w) central}`.
//! 7.–10. Nilpotency: `1 - a_ij` iterated adjoint actions of
//!    `X(±alpha_i)` annihilate `X(±alpha_j)` for `i != j`, keyed by
//!    `a_ij = 0, -1, -2, -3` (one sign choice shared by the whole chain).
//!
//! Ordered diagonal pairs outside the stated domains of (2)/(3) are
//! enumerated as *completion* cases under the mirror pair's relation
//! number: they must agree with the mirrored bracket under the
//! antisymmetry flip and carry the symmetrically extended central weight.
//!
//! [`verify`] runs every enumerated case (optionally filtered by relation
//! number) against a [`Realization`] and aggregates a serializable
//! [`Report`]. Cases are independent pure computations and run in
//! parallel; the report is sorted, so its content is deterministic up to
//! the elapsed-time stamp.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cartan::ConstantTables;
use crate::error::Error;
use crate::fields::{FieldQuadratic, VarId};
use crate::lattice::AlgebraType;
use crate::realization::{GeneratorSymbol, Realization, Variant};
use crate::scalar::Scalar;
use crate::wick::{ad_chain, bracket, BracketResult};

/// One enumerated instance of a defining relation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RelationCase {
    /// Relation number, 1–10.
    pub relation: u8,
    /// The index tuple: `[i, j]` for pair relations, `[i]` for relation 5.
    pub indices: Vec<usize>,
    /// Sign choices for the ladder generators involved: `""` for diagonal
    /// relations, `"+"`/`"-"` for a shared sign, `"+-"` for relation 6's
    /// fixed raising/lowering orientation.
    pub signs: String,
}

/// Verification status of one case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The verdict on one case: the case key plus status and, on failure, a
/// rendering of computed versus expected values.
#[derive(Clone, Debug, Serialize)]
pub struct CaseOutcome {
    pub relation: u8,
    pub indices: Vec<usize>,
    pub signs: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub elapsed_ms: u128,
}

/// A full verification run over one algebra type and variant.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    #[serde(rename = "type")]
    pub type_token: String,
    pub n: u32,
    pub variant: String,
    pub cases: Vec<CaseOutcome>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }
}

/// Every case of every relation for one algebra type, sorted by
/// `(relation, indices, signs)`.
pub fn enumerate_cases(t: AlgebraType) -> Vec<RelationCase> {
    let tables =
        ConstantTables::new(t).expect("generator tables produce an integer Cartan matrix");
    let n = t.n() as usize;
    let mut cases = Vec::new();

    // (1): the head pair.
    cases.push(RelationCase {
        relation: 1,
        indices: vec![0, 0],
        signs: String::new(),
    });
    // (2)/(3) stated pairs, and completions for the remaining ordered
    // pairs
    // under the mirror's relation number.
    for i in 0..=n {
        for j in 0..=n {
            if (i, j) == (0, 0) {
                continue;
            }
            let relation = if tables.is_tail_pair(i, j) || tables.is_tail_pair(j, i) {
                3
            } else {
                2
            };
            cases.push(RelationCase {
                relation,
                indices: vec![i, j],
                signs: String::new(),
            });
        }
    }
    // (4): every pair, both signs.
    for i in 0..=n {
        for j in 0..=n {
            for sign in ["+", "-"] {
                cases.push(RelationCase {
                    relation: 4,
                    indices: vec![i, j],
                    signs: sign.to_string(),
                });
            }
        }
    }
    // (5): every index, both (shared) signs.
    for i in 0..=n {
        for sign in ["+", "-"] {
            cases.push(RelationCase {
                relation: 5,
                indices: vec![i],
                signs: sign.to_string(),
            });
        }
    }
    // (6): every pair in the fixed raising/lowering orientation.
    for i in 0..=n {
        for j in 0..=n {
            cases.push(RelationCase {
                relation: 6,
                indices: vec![i, j],
                signs: "+-".to_string(),
            });
        }
    }
    // (7)–(10): ordered pairs i != j, keyed by the Cartan entry, with one
    // shared sign choice.
    for i in 0..=n {
        for j in 0..=n {
            if i == j {
                continue;
            }
            let a = tables.a(i, j);
            assert!(
                (-3..=0).contains(&a),
                "off-diagonal Cartan entries lie in -3..=0"
            );
            let relation = (7 - a) as u8;
            for sign in ["+", "-"] {
                cases.push(RelationCase {
                    relation,
                    indices: vec![i, j],
                    signs: sign.to_string(),
                });
            }
        }
    }
    cases.sort();
    cases
}

/// Renders a bracket outcome for failure diagnostics.
fn render_bracket(r: &BracketResult) -> String {
    format!(
        "field(z) = {}; central d'-weight = {}",
        r.field,
        r.central.pretty()
    )
}

/// Checks one bracket against an expected field part and central weight.
fn expect_bracket(
    computed: &BracketResult,
    field: &FieldQuadratic,
    central: &Scalar,
) -> Result<(), String> {
    if &computed.field == field && &computed.central == central {
        return Ok(())
    }
    Err(format!(
        "computed: {}; expected: field(z) = {}; central d'-weight = {}",
        render_bracket(computed),
        field,
        central.pretty()
    ))
}

/// The central weight a diagonal-pair case must carry: `k1 * level` for the
/// head pair, `k23(i, j) * level` otherwise.
fn diagonal_weight(
    tables: &ConstantTables,
    level: &Scalar,
    i: usize,
    j: usize,
) -> Result<Scalar, Error> {
    if (i, j) == (0, 0) {
        Ok(&tables.k1() * level)
    } else {
        Ok(&tables.k23(i, j)? * level)
    }
}

fn ladder(sign: char, i: usize) -> GeneratorSymbol {
    match sign {
        '+' => GeneratorSymbol::XPlus(i),
        _ => GeneratorSymbol::XMinus(i),
    }
}

/// Runs one case. Internal errors (out-of-range indices in a hand-built
/// case, rank mismatches) are reported as failures with diagnostics rather
/// than panics.
pub fn verify_case(
    rho: &Realization,
    tables: &ConstantTables,
    case: &RelationCase,
) -> CaseOutcome {
    let verdict = run_case(rho, tables, case);
    let (status, detail) = match verdict {
        Ok(()) => (Status::Pass, String::new()),
        Err(msg) => (Status::Fail, msg),
    };
    CaseOutcome {
        relation: case.relation,
        indices: case.indices.clone(),
        signs: case.signs.clone(),
        status,
        detail,
    }
}

fn run_case(rho: &Realization, tables: &ConstantTables, case: &RelationCase) -> Result<(), String> {
    let err = |e: Error| format!("internal error: {e}");
    let level = rho.level().clone();
    let zero_field = FieldQuadratic::zero(rho.algebra().n());
    match case.relation {
        1..=3 => {
            let &[i, j] = case.indices.as_slice() else {
                return Err("diagonal relations take an index pair".into());
            };
            let lhs = bracket(rho.alpha(i).map_err(err)?, rho.alpha(j).map_err(err)?)
                .map_err(err)?;
            let weight = diagonal_weight(tables, &level, i, j).map_err(err)?;
            expect_bracket(&lhs, &zero_field, &weight)?;
            // Completion pairs must also be the antisymmetric flip of their
            // stated mirror.
            if !tables.is_stated_alpha_pair(i, j) && (i, j) != (0, 0) {
                let mirror = bracket(rho.alpha(j).map_err(err)?, rho.alpha(i).map_err(err)?)
                    .map_err(err)?;
                if lhs.field != mirror.field.neg() || lhs.central != mirror.central {
                    return Err(format!(
                        "completion pair is not the antisymmetric flip of its mirror: \
                         computed: {}; mirror: {}",
                        render_bracket(&lhs),
                        render_bracket(&mirror)
                    ));
                }
            }
            Ok(())
        }
        4 => {
            let &[i, j] = case.indices.as_slice() else {
                return Err("relation 4 takes an index pair".into());
            };
            let sign = case.signs.chars().next().ok_or("relation 4 takes a sign")?;
            let x = rho.x_field(ladder(sign, j)).map_err(err)?;
            let lhs = bracket(rho.alpha(i).map_err(err)?, x).map_err(err)?;
            let signed_a = match sign {
                '+' => tables.a(i, j),
                _ => -tables.a(i, j),
            };
            let expected = x.scale(&Scalar::from_int(signed_a));
            expect_bracket(&lhs, &expected, &Scalar::zero())
        }
        5 => {
            let &[i] = case.indices.as_slice() else {
                return Err("relation 5 takes a single index".into());
            };
            let sign = case.signs.chars().next().ok_or("relation 5 takes a sign")?;
            let x = rho.x_field(ladder(sign, i)).map_err(err)?;
            let lhs = bracket(x, x).map_err(err)?;
            expect_bracket(&lhs, &zero_field, &Scalar::zero())
        }
        6 => {
            let &[i, j] = case.indices.as_slice() else {
                return Err("relation 6 takes an index pair".into());
            };
            let lhs = bracket(
                rho.x_plus(i).map_err(err)?,
                rho.x_minus(j).map_err(err)?,
            )
            .map_err(err)?;
            if i == j {
                let weight = &tables.c6(i).map_err(err)? * &level;
                expect_bracket(&lhs, rho.alpha(i).map_err(err)?, &weight)
            } else {
                expect_bracket(&lhs, &zero_field, &Scalar::zero())
            }
        }
        7..=10 => {
            let &[i, j] = case.indices.as_slice() else {
                return Err("nilpotency relations take an index pair".into());
            };
            let sign = case
                .signs
                .chars()
                .next()
                .ok_or("nilpotency relations take a sign")?;
            let ads = (case.relation - 6) as usize;
            let vars = [VarId::Z2, VarId::Z3, VarId::Z4, VarId::Z5];
            let gens: Vec<(GeneratorSymbol, VarId)> = vars[..ads]
                .iter()
                .map(|v| (ladder(sign, i), *v))
                .collect();
            let expr = ad_chain(rho, &gens, (ladder(sign, j), VarId::Z1)).map_err(err)?;
            if expr.is_zero() {
                Ok(())
            } else {
                Err(format!("expected 0, computed: {expr}"))
            }
        }
        other => Err(format!("unknown relation number {other}")),
    }
}

/// Verifies every enumerated case of `t` in `variant`, keeping only the
/// relation numbers in `filter` when one is given.
pub fn verify(
    t: AlgebraType,
    variant: Variant,
    filter: Option<&[u8]>,
) -> Result<Report, Error> {
    let started = Instant::now();
    let tables = ConstantTables::new(t)?;
    let rho = Realization::new(t, variant);
    let mut cases = enumerate_cases(t);
    if let Some(keep) = filter {
        cases.retain(|c| keep.contains(&c.relation));
    }
    let mut outcomes: Vec<CaseOutcome> = cases
        .par_iter()
        .map(|case| verify_case(&rho, &tables, case))
        .collect();
    outcomes.sort_by(|a, b| {
        (a.relation, &a.indices, &a.signs).cmp(&(b.relation, &b.indices, &b.signs))
    });
    let pass = outcomes.iter().filter(|o| o.status == Status::Pass).count();
    let fail = outcomes.len() - pass;
    Ok(Report {
        type_token: t.family().token().to_string(),
        n: t.n(),
        variant: variant.token().to_string(),
        cases: outcomes,
        summary: Summary {
            pass,
            fail,
            elapsed_ms: started.elapsed().as_millis(),
        },
    })
}

/// [`verify`] over the whole catalog.
pub fn verify_all(t: AlgebraType, variant: Variant) -> Result<Report, Error> {
    verify(t, variant, None)
}
