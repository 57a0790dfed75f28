//! Normal-ordered quadratic fields and formal distribution expressions.
//!
//! # Quadratic fields
//!
//! A [`FieldQuadratic`] is a finite sum of mixed normal-ordered products
//! `:a(z) b*(z):` of one plain and one starred oscillator field, stored as a
//! sparse matrix: the entry at `(p, q)` is the coefficient of
//! `:e_p(z) e_q*(z):`. Normal symmetry `:a(z) b*(z): = :b*(z) a(z):` is
//! baked in by always filing the plain index as the row, so equal operators
//! have equal matrices.
//!
//! Monomials in the isotropic direction `c` are projected away at
//! construction: `c` contracts to zero with every vector, so its oscillators
//! are central in the whole algebra and a quadratic containing them
//! contributes nothing to any commutator. Dropping them realizes the usual
//! convention that the auxiliary vector `beta` acts through its `e_1`
//! component, and it is exactly what makes the simple-root currents close on
//! the stated relations.
//!
//! # Distribution expressions
//!
//! Commutators of fields live in several formal variables `z, w, z3, z4, z5`
//! and involve the formal delta `d(u-v)` and its derivative. A [`DistExpr`]
//! is a sum of [`DistTerm`]s, each a payload — a quadratic field evaluated
//! at one variable, or a plain coefficient — times a multiset chain of delta
//! factors. Derivative factors `d'` only ever carry coefficient payloads:
//! the product formula emits the surviving field with a plain delta and the
//! double contraction with the derivative one, and iterated brackets drop
//! coefficient payloads at the next step.
//!
//! Expressions are kept in a canonical relabeled form based on the delta
//! substitution rules `F(u) d(u-v) = F(v) d(u-v)` and `d(u-v) d(v-x) =
//! d(u-x) d(v-x)`: within each group of variables linked by plain deltas,
//! payloads are moved to the smallest variable, plain chains are re-rooted
//! as a star around that variable, and derivative factors have their
//! endpoints renamed to class representatives. Terms with identical
//! variable-and-chain shape then merge by adding payloads, so `is_zero` is
//! an honest operator-level zero test for every expression the crate
//! produces.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::lattice::{BasisIndex, CVector};
use crate::scalar::{join_terms, term_string, Scalar};

/// A formal distribution variable tag.
///
/// The first two display as the customary `z` and `w`; the rest keep their
/// indexed names (used by the higher Serre-type relations).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum VarId {
    Z1,
    Z2,
    Z3,
    Z4,
    Z5,
}

impl VarId {
    /// Alias: the conventional first bracket variable `z`.
    pub const Z: VarId = VarId::Z1;
    /// Alias: the conventional second bracket variable `w`.
    pub const W: VarId = VarId::Z2;

    pub fn name(self) -> &'static str {
        match self {
            VarId::Z1 => "z",
            VarId::Z2 => "w",
            VarId::Z3 => "z3",
            VarId::Z4 => "z4",
            VarId::Z5 => "z5",
        }
    }

    fn ord(self) -> usize {
        match self {
            VarId::Z1 => 0,
            VarId::Z2 => 1,
            VarId::Z3 => 2,
            VarId::Z4 => 3,
            VarId::Z5 => 4,
        }
    }

    const ALL: [VarId; 5] = [VarId::Z1, VarId::Z2, VarId::Z3, VarId::Z4, VarId::Z5];
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A sparse quadratic field: entry `(p, q)` is the coefficient of
/// `:e_p(z) e_q*(z):`. Zero entries are never stored and the isotropic
/// index never occurs, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldQuadratic {
    n: u32,
    entries: BTreeMap<(BasisIndex, BasisIndex), Scalar>,
}

impl FieldQuadratic {
    /// The zero field in rank context `n`.
    pub fn zero(n: u32) -> Self {
        FieldQuadratic {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Iterates nonzero entries in row-major basis order.
    pub fn entries(&self) -> impl Iterator<Item = (&(BasisIndex, BasisIndex), &Scalar)> {
        self.entries.iter()
    }

    /// Entry at `(p, q)` (zero when absent).
    pub fn get(&self, p: BasisIndex, q: BasisIndex) -> Scalar {
        self.entries
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Nonzero entries of row `p`.
    pub fn row(
        &self,
        p: BasisIndex,
    ) -> impl Iterator<Item = (&(BasisIndex, BasisIndex), &Scalar)> {
        self.entries
            .range((p, BasisIndex::C)..=(p, BasisIndex::EpsBar(u32::MAX)))
    }

    /// Adds `coeff` at `(p, q)`, pruning zeros. Monomials touching the
    /// isotropic direction are projected away (see the module docs).
    pub(crate) fn add_entry(&mut self, p: BasisIndex, q: BasisIndex, coeff: &Scalar) {
        if coeff.is_zero() || p == BasisIndex::C || q == BasisIndex::C {
            return;
        }
        let slot = self.entries.entry((p, q)).or_insert_with(Scalar::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.entries.remove(&(p, q));
        }
    }

    pub fn add(&self, other: &FieldQuadratic) -> Result<FieldQuadratic, Error> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut out = self.clone();
        for ((p, q), coeff) in other.entries.iter() {
            out.add_entry(*p, *q, coeff);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FieldQuadratic) -> Result<FieldQuadratic, Error> {
        self.add(&other.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> FieldQuadratic {
        if s.is_zero() {
            return FieldQuadratic::zero(self.n);
        }
        FieldQuadratic {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (*k, v * s))
                .collect(),
        }
    }

    pub fn neg(&self) -> FieldQuadratic {
        self.scale(&-&Scalar::one())
    }

    /// Matrix transpose (swaps the plain and starred factor labels).
    pub fn transpose(&self) -> FieldQuadratic {
        let mut out = FieldQuadratic::zero(self.n);
        for ((p, q), coeff) in self.entries.iter() {
            out.add_entry(*q, *p, coeff);
        }
        out
    }

    /// Entrywise complex conjugation of the coefficients.
    pub fn conj(&self) -> FieldQuadratic {
        FieldQuadratic {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (*k, v.conj()))
                .collect(),
        }
    }

    /// Whether every entry sits on the diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(p, q)| p == q)
    }

    /// Whether every entry is a rational integer.
    pub fn has_integer_entries(&self) -> bool {
        self.entries.values().all(|v| v.as_integer().is_some())
    }
}

impl fmt::Display for FieldQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(self.entries.iter().map(|((p, q), coeff)| {
            let token = format!(":e({}) e*({}):", p.field_token(), q.field_token());
            term_string(coeff, &token)
        }));
        f.write_str(&rendered)
    }
}

/// Builds a quadratic field from weighted normal-ordered pairs
/// `coeff * :x y:` of conjugate-pair vectors.
///
/// Each expanded basis monomial must mix one plain and one starred factor;
/// the two factor slots may come in either order (`:a b*:` or `:b* a:`),
/// and the normal symmetry of mixed products makes the reordering exact.
///
/// # Errors
///
/// [`Error::UnsupportedQuadraticShape`] when a term would expand to a
/// plain/plain or starred/starred monomial, [`Error::RankMismatch`] when the
/// vectors disagree with the rank context `n`.
pub fn make_quadratic(
    n: u32,
    terms: &[(Scalar, CVector, CVector)],
) -> Result<FieldQuadratic, Error> {
    let mut out = FieldQuadratic::zero(n);
    for (coeff, x, y) in terms {
        for v in [x, y] {
            if v.n() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    got: v.n(),
                });
            }
        }
        if coeff.is_zero() {
            continue;
        }
        // A mixed product must not expand to plain/plain or starred/starred
        // monomials.
        if !x.plus().is_zero() && !y.plus().is_zero() {
            return Err(Error::UnsupportedQuadraticShape);
        }
        if !x.star().is_zero() && !y.star().is_zero() {
            return Err(Error::UnsupportedQuadraticShape);
        }
        // Plain factor from x, starred from y: rows from x, columns from y.
        for (p, a) in x.plus().coords() {
            for (q, b) in y.star().coords() {
                out.add_entry(*p, *q, &(&(a * b) * coeff));
            }
        }
        // Starred factor from x, plain from y: :b* u: = :u b*:.
        for (q, b) in x.star().coords() {
            for (p, a) in y.plus().coords() {
                out.add_entry(*p, *q, &(&(a * b) * coeff));
            }
        }
    }
    Ok(out)
}

/// One delta factor of a chain.
///
/// `Delta` is the formal delta `d(a-b)`, symmetric in its arguments and
/// stored with `a < b`; `DDelta` is the derivative `d/d(at)` of
/// `d(other-at)`. The two endpoints are always distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DeltaFactor {
    Delta { a: VarId, b: VarId },
    DDelta { at: VarId, other: VarId },
}

impl DeltaFactor {
    /// The plain delta `d(u-v)` (argument order is immaterial).
    pub fn delta(u: VarId, v: VarId) -> DeltaFactor {
        assert!(u != v, "delta factor requires two distinct variables");
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        DeltaFactor::Delta { a, b }
    }

    /// The derivative delta `d/d(at) d(other-at)`.
    pub fn ddelta(other: VarId, at: VarId) -> DeltaFactor {
        assert!(other != at, "delta factor requires two distinct variables");
        DeltaFactor::DDelta { at, other }
    }
}

impl fmt::Display for DeltaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaFactor::Delta { a, b } => write!(f, "d({a}-{b})"),
            DeltaFactor::DDelta { at, other } => write!(f, "d'_{at}({other}-{at})"),
        }
    }
}

/// Payload of a distribution term: a quadratic field evaluated at one
/// variable, or a central coefficient.
#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Field { quad: FieldQuadratic, at: VarId },
    Central(Scalar),
}

/// A payload times a multiset of delta factors.
#[derive(Clone, Debug, PartialEq)]
pub struct DistTerm {
    pub payload: Payload,
    pub chain: Vec<DeltaFactor>,
}

impl fmt::Display for DistTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Field { quad, at } => {
                let body = quad.to_string();
                if body.contains(" + ") || body.contains(" - ") {
                    write!(f, "({body})({at})")?;
                } else {
                    write!(f, "{body}({at})")?;
                }
            }
            Payload::Central(s) => {
                let body = s.pretty();
                if body.contains(' ') {
                    write!(f, "({body})")?;
                } else {
                    write!(f, "{body}")?;
                }
            }
        }
        for factor in &self.chain {
            write!(f, " {factor}")?;
        }
        Ok(())
    }
}

/// A canonical sum of distribution terms. Always stored relabeled, merged
/// and sorted, so structural equality is semantic equality for everything
/// the bracket machinery produces.
#[derive(Clone, Debug, PartialEq)]
pub struct DistExpr {
    terms: Vec<DistTerm>,
}

impl DistExpr {
    pub fn zero() -> Self {
        DistExpr { terms: Vec::new() }
    }

    /// Canonicalizes and merges an arbitrary list of terms.
    pub fn new(terms: Vec<DistTerm>) -> Self {
        let mut fields: BTreeMap<(VarId, Vec<DeltaFactor>), FieldQuadratic> = BTreeMap::new();
        let mut centrals: BTreeMap<Vec<DeltaFactor>, Scalar> = BTreeMap::new();
        for term in terms {
            let term = relabel_term(term);
            match term.payload {
                Payload::Field { quad, at } => {
                    if quad.is_zero() {
                        continue;
                    }
                    match fields.entry((at, term.chain)) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(quad);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            let sum = e
                                .get()
                                .add(&quad)
                                .expect("merged field payloads share one rank context");
                            *e.get_mut() = sum;
                        }
                    }
                }
                Payload::Central(s) => {
                    if s.is_zero() {
                        continue;
                    }
                    let slot = centrals.entry(term.chain).or_insert_with(Scalar::zero);
                    *slot += &s;
                }
            }
        }
        let mut out = Vec::new();
        for ((at, chain), quad) in fields {
            if !quad.is_zero() {
                out.push(DistTerm {
                    payload: Payload::Field { quad, at },
                    chain,
                });
            }
        }
        for (chain, s) in centrals {
            if !s.is_zero() {
                out.push(DistTerm {
                    payload: Payload::Central(s),
                    chain,
                });
            }
        }
        DistExpr { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[DistTerm] {
        &self.terms
    }

    /// Sum of two expressions (re-canonicalized).
    pub fn add(&self, other: &DistExpr) -> DistExpr {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        DistExpr::new(terms)
    }

    pub fn negate(&self) -> DistExpr {
        let terms = self
            .terms
            .iter()
            .map(|t| DistTerm {
                payload: match &t.payload {
                    Payload::Field { quad, at } => Payload::Field {
                        quad: quad.neg(),
                        at: *at,
                    },
                    Payload::Central(s) => Payload::Central(-s),
                },
                chain: t.chain.clone(),
            })
            .collect();
        DistExpr::new(terms)
    }
}

impl fmt::Display for DistExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let bodies: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        f.write_str(&bodies.join(" + "))
    }
}

/// Canonical relabeling of a whole expression. [`DistExpr::new`] already
/// canonicalizes, so this is idempotent; it is exposed for direct use on
/// hand-built terms.
pub fn relabel(expr: &DistExpr) -> DistExpr {
    DistExpr::new(expr.terms.clone())
}

/// Tiny union-find over the five variable tags.
struct VarClasses {
    parent: [usize; 5],
}

impl VarClasses {
    fn new() -> Self {
        VarClasses {
            parent: [0, 1, 2, 3, 4],
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Attach the larger root so the class minimum is the find result's
            // minimum after the representative pass below.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Smallest variable of the class of `v`.
    fn rep(&mut self, v: VarId) -> VarId {
        VarId::ALL[self.find(v.ord())]
    }
}

fn relabel_term(term: DistTerm) -> DistTerm {
    // Group variables linked by plain deltas.
    let mut classes = VarClasses::new();
    for factor in &term.chain {
        if let DeltaFactor::Delta { a, b } = factor {
            classes.union(a.ord(), b.ord());
        }
    }

    // Rebuild the chain: per class, a star of plain deltas rooted at the
    // class minimum (extra multiset copies, which the bracket machinery never
    // produces, duplicate the last star edge); derivative factors get their
    // endpoints renamed to class representatives when that keeps them
    // two-variable.
    let mut members: BTreeMap<VarId, Vec<VarId>> = BTreeMap::new();
    let mut edge_count: BTreeMap<VarId, usize> = BTreeMap::new();
    let mut chain: Vec<DeltaFactor> = Vec::with_capacity(term.chain.len());
    for factor in &term.chain {
        match factor {
            DeltaFactor::Delta { a, b } => {
                let root = classes.rep(*a);
                *edge_count.entry(root).or_insert(0) += 1;
                let entry = members.entry(root).or_default();
                for v in [*a, *b] {
                    if v != root && !entry.contains(&v) {
                        entry.push(v);
                    }
                }
            }
            DeltaFactor::DDelta { at, other } => {
                let (rat, rother) = (classes.rep(*at), classes.rep(*other));
                if rat != rother {
                    chain.push(DeltaFactor::ddelta(rother, rat));
                } else {
                    chain.push(*factor);
                }
            }
        }
    }
    for (root, mut vars) in members {
        vars.sort();
        let edges = edge_count[&root];
        for v in &vars {
            chain.push(DeltaFactor::delta(*v, root));
        }
        let last = *vars.last().expect("a class with edges has a non-root member");
        for _ in vars.len()..edges {
            chain.push(DeltaFactor::delta(last, root));
        }
    }
    chain.sort();

    let payload = match term.payload {
        Payload::Field { quad, at } => Payload::Field {
            quad,
            at: classes.rep(at),
        },
        central => central,
    };
    DistTerm { payload, chain }
}
