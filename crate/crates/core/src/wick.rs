//! The commutator calculus for normal-ordered quadratic fields.
//!
//! # The product formula
//!
//! For conjugate-pair oscillators the commutator of two mixed normal-ordered
//! quadratics is
//!
//! ```text
//! [:a(z) b*(z):, :u(w) v*(w):] = <a, v*> :b*(z) u(z): d(z-w)
//!                              + <b*, u> :a(z) v*(z): d(z-w)
//!                              + <a, v*> <b*, u> d'_w(z-w)
//! ```
//!
//! with `<,>` the antisymmetric pairing. Summing this over the entries of
//! two coefficient matrices `M`, `N` collapses to matrix arithmetic: writing
//! `G` for the diagonal gram matrix of the oscillator directions and
//! `X * Y` for `X G Y`,
//!
//! ```text
//! field part   = (M * N - N * M)(z),
//! central part = -tr(M * N * G).
//! ```
//!
//! [`bracket`] evaluates that closed form; an integration test drives the
//! literal four-index expansion of the product formula against it on random
//! matrices. The field part rides a plain delta `d(z-w)`, the scalar part a
//! derivative delta in the second argument's variable.
//!
//! # Iterated adjoint actions
//!
//! [`ad_chain`] forms `[g_k(v_k), [... [g_1(v_1), seed(v_0)] ...]]` for
//! ladder generators, tracking the delta chains each step creates and
//! canonicalizing eagerly. Scalar payloads commute with everything, so each
//! step keeps only the bracket of the incoming generator with the surviving
//! field payloads.

use crate::error::Error;
use crate::fields::{DeltaFactor, DistExpr, DistTerm, FieldQuadratic, Payload, VarId};
use crate::realization::{GeneratorSymbol, Realization};
use crate::scalar::Scalar;

/// Outcome of one bracket of quadratics `[A(z), B(w)]`: `field` is the
/// coefficient of `d(z-w)` (a quadratic evaluated at `z`), `central` the
/// coefficient of `d'_w(z-w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketResult {
    pub field: FieldQuadratic,
    pub central: Scalar,
}

/// The gram-weighted composition `(X G Y)[p][t] = sum_q X[p][q] g_q Y[q][t]`.
///
/// Every stored index has gram weight one (the isotropic direction is
/// projected away at construction), so the weight only gates the sum.
fn compose(x: &FieldQuadratic, y: &FieldQuadratic) -> FieldQuadratic {
    let mut out = FieldQuadratic::zero(x.n());
    for ((p, q), a) in x.entries() {
        if q.gram_weight() == 0 {
            continue;
        }
        for ((_, t), b) in y.row(*q) {
            out.add_entry(*p, *t, &(a * b));
        }
    }
    out
}

/// The commutator `[A(z), B(w)]` of two quadratic fields in closed form.
pub fn bracket(a: &FieldQuadratic, b: &FieldQuadratic) -> Result<BracketResult, Error> {
    if a.n() != b.n() {
        return Err(Error::RankMismatch {
            expected: a.n(),
            got: b.n(),
        });
    }
    let field = compose(a, b).sub(&compose(b, a))?;
    // central = -tr(A G B G): both gram weights are one on stored indices.
    let mut central = Scalar::zero();
    for ((p, q), x) in a.entries() {
        if p.gram_weight() == 0 || q.gram_weight() == 0 {
            continue;
        }
        let y = b.get(*q, *p);
        if !y.is_zero() {
            central -= &(x * &y);
        }
    }
    Ok(BracketResult { field, central })
}

/// The iterated adjoint action
/// `[g_k(v_k), [ ... [g_1(v_1), seed(v_seed)] ... ]]`
/// of ladder generators on a ladder seed, as a canonical distribution
/// expression.
///
/// Generators apply in slice order (the first element acts innermost).
/// Every symbol must be a ladder current ([`Error::NonXGenerator`]
/// otherwise) and all variables must be pairwise distinct.
pub fn ad_chain(
    rho: &Realization,
    gens: &[(GeneratorSymbol, VarId)],
    seed: (GeneratorSymbol, VarId),
) -> Result<DistExpr, Error> {
    let seed_field = rho.x_field(seed.0)?;
    let mut vars: Vec<VarId> = gens.iter().map(|(_, v)| *v).collect();
    vars.push(seed.1);
    vars.sort();
    vars.dedup();
    assert!(
        vars.len() == gens.len() + 1,
        "adjoint chain variables must be pairwise distinct"
    );

    let mut expr = DistExpr::new(vec![DistTerm {
        payload: Payload::Field {
            quad: seed_field.clone(),
            at: seed.1,
        },
        chain: Vec::new(),
    }]);
    for (g, var) in gens {
        let gf = rho.x_field(*g)?;
        let mut next = Vec::new();
        for term in expr.terms() {
            // Scalar payloads are annihilated by the next bracket.
            let Payload::Field { quad, at } = &term.payload else {
                continue;
            };
            let r = bracket(gf, quad)?;
            if !r.field.is_zero() {
                let mut chain = term.chain.clone();
                chain.push(DeltaFactor::delta(*var, *at));
                next.push(DistTerm {
                    payload: Payload::Field {
                        quad: r.field,
                        at: *var,
                    },
                    chain,
                });
            }
            if !r.central.is_zero() {
                let mut chain = term.chain.clone();
                chain.push(DeltaFactor::ddelta(*var, *at));
                next.push(DistTerm {
                    payload: Payload::Central(r.central),
                    chain,
                });
            }
        }
        expr = DistExpr::new(next);
    }
    Ok(expr)
}
