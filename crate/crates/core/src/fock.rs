//! Truncated polynomial-state oracle for mode-level verification.
//!
//! The symbolic machinery verifies relations between *series*; this module
//! provides the independent counterpart at the level of individual modes
//! acting on concrete states. States live in the polynomial space spanned
//! by finite products of creation operators `e_p(m)`, `e_p*(m)` with
//! negative mode `m` applied to a vacuum; the oscillator algebra is
//! `[a(k), b(l)] = <a, b> delta_{k,-l}` with the antisymmetric pairing, so
//! annihilation acts as a pairing-weighted derivation.
//!
//! Modes `m` range over the half-integers (scheme [`ModeScheme::Half`],
//! the default — the vacuum then admits no zero modes) or the integers
//! ([`ModeScheme::Int`]). All modes are stored doubled (`mode2 = 2m`) so
//! both schemes fit in plain integers. A quadratic field `F` yields, for
//! each integer `k`, the operator
//!
//! ```text
//! F_k = sum_m F[p][q] :e_p(m) e_q*(k-m):
//! ```
//!
//! where normal ordering puts annihilators on the right and under the
//! integer scheme symmetrizes the `m = 0` branch. On any polynomial state
//! only a finite mode window contributes, so the action is exact.
//!
//! The integer scheme's zero modes have no specified action on the vacuum
//! (the state space carries no zero-mode factor). The default convention
//! [`ZeroMode::Unspecified`] makes any zero-mode action an error;
//! [`ZeroMode::Annihilate`] — an explicit opt-in — treats zero modes as
//! annihilators of every state. Acceptance-grade checks use the
//! half-integer scheme, where the question never arises.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::fields::FieldQuadratic;
use crate::lattice::{AlgebraType, BasisIndex};
use crate::realization::{Realization, Variant};
use crate::relations::{enumerate_cases, CaseOutcome, RelationCase, Status, Summary};
use crate::scalar::{join_terms, term_string, Scalar};
use crate::wick::{bracket, BracketResult};

/// Which lattice of modes the oscillators carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeScheme {
    /// Modes in `Z + 1/2` (doubled modes odd). The default: no zero modes.
    Half,
    /// Modes in `Z` (doubled modes even). Zero modes need a convention.
    Int,
}

impl ModeScheme {
    pub fn token(self) -> &'static str {
        match self {
            ModeScheme::Half => "half",
            ModeScheme::Int => "int",
        }
    }

    /// Whether a doubled mode belongs to this scheme.
    pub fn admits(self, mode2: i64) -> bool {
        match self {
            ModeScheme::Half => mode2.rem_euclid(2) == 1,
            ModeScheme::Int => mode2.rem_euclid(2) == 0,
        }
    }
}

impl fmt::Display for ModeScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Convention for zero-mode actions under the integer scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroMode {
    /// No convention chosen: acting with a zero mode is an error.
    Unspecified,
    /// Zero modes act as annihilators of every state.
    Annihilate,
}

/// One oscillator mode `e_index(mode2/2)` (plain) or `e_index*(mode2/2)`
/// (starred). Doubled modes keep both schemes integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModeKey {
    pub index: BasisIndex,
    pub starred: bool,
    pub mode2: i64,
}

impl ModeKey {
    pub fn new(index: BasisIndex, starred: bool, mode2: i64) -> Self {
        ModeKey {
            index,
            starred,
            mode2,
        }
    }
}

impl fmt::Display for ModeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = if self.starred { "*" } else { "" };
        write!(f, "e({}){}(", self.index.field_token(), star)?;
        if self.mode2 % 2 == 0 {
            write!(f, "{})", self.mode2 / 2)
        } else {
            write!(f, "{}/2)", self.mode2)
        }
    }
}

/// A commuting product of creation modes, as sorted `(key, exponent)`
/// pairs; the empty product is the vacuum.
type Monomial = Vec<(ModeKey, u32)>;

fn monomial_string(mono: &Monomial) -> String {
    let mut parts: Vec<String> = Vec::with_capacity(mono.len() + 1);
    for (key, exp) in mono {
        if *exp == 1 {
            parts.push(key.to_string());
        } else {
            parts.push(format!("{key}^{exp}"));
        }
    }
    parts.push("|0>".to_string());
    parts.join(" ")
}

/// An exact finite linear combination of creation monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct FockState {
    n: u32,
    scheme: ModeScheme,
    zero_mode: ZeroMode,
    terms: BTreeMap<Monomial, Scalar>,
}

impl FockState {
    /// The vacuum state (zero-mode convention unspecified).
    pub fn vacuum(n: u32, scheme: ModeScheme) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Scalar::one());
        FockState {
            n,
            scheme,
            zero_mode: ZeroMode::Unspecified,
            terms,
        }
    }

    /// The zero state.
    pub fn zero(n: u32, scheme: ModeScheme) -> Self {
        FockState {
            n,
            scheme,
            zero_mode: ZeroMode::Unspecified,
            terms: BTreeMap::new(),
        }
    }

    /// Selects the zero-mode convention (relevant only under the integer
    /// scheme).
    pub fn with_zero_mode(mut self, zero_mode: ZeroMode) -> Self {
        self.zero_mode = zero_mode;
        self
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn scheme(&self) -> ModeScheme {
        self.scheme
    }

    pub fn zero_mode(&self) -> ZeroMode {
        self.zero_mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies the whole state by a creation mode (`mode2 < 0`),
    /// producing the state with one more factor on each monomial.
    pub fn created_by(&self, key: ModeKey) -> Self {
        assert!(key.mode2 < 0, "created_by requires a creation mode");
        assert!(
            self.scheme.admits(key.mode2),
            "mode does not belong to the state's scheme"
        );
        let mut out = self.empty_like();
        for (mono, coeff) in &self.terms {
            out.add_term(multiply_in(mono, key), coeff.clone());
        }
        out
    }

    fn empty_like(&self) -> Self {
        FockState {
            n: self.n,
            scheme: self.scheme,
            zero_mode: self.zero_mode,
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, mono: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(slot) => {
                *slot += &coeff;
                if slot.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn add(&self, other: &FockState) -> FockState {
        assert!(
            self.n == other.n && self.scheme == other.scheme,
            "states live in the same space"
        );
        let mut out = self.clone();
        for (mono, coeff) in &other.terms {
            out.add_term(mono.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockState) -> FockState {
        self.add(&other.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> FockState {
        let mut out = self.empty_like();
        if s.is_zero() {
            return out;
        }
        for (mono, coeff) in &self.terms {
            out.terms.insert(mono.clone(), coeff * s);
        }
        out
    }

    /// Largest annihilator depth that can touch this state: the maximal
    /// `-mode2` over all creation factors (0 for the vacuum).
    pub fn max_depth2(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|mono| mono.iter().map(|(k, _)| -k.mode2))
            .max()
            .unwrap_or(0)
    }

    /// Doubled total mode degree of a homogeneous state, when it is one:
    /// the common value of `sum exp * (-mode2)` over its monomials.
    pub fn homogeneous_degree2(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|mono| {
            mono.iter()
                .map(|(k, e)| -k.mode2 * i64::from(*e))
                .sum::<i64>()
        });
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(
            self.terms
                .iter()
                .map(|(mono, coeff)| term_string(coeff, &monomial_string(mono))),
        );
        f.write_str(&rendered)
    }
}

fn multiply_in(mono: &Monomial, key: ModeKey) -> Monomial {
    let mut out = mono.clone();
    match out.binary_search_by(|(k, _)| k.cmp(&key)) {
        Ok(pos) => out[pos].1 += 1,
        Err(pos) => out.insert(pos, (key, 1)),
    }
    out
}

/// The contraction weight `<op, partner>` of an acting mode against a
/// creation factor with the same index and opposite star: `-1` when the
/// operator is plain, `+1` when starred; isotropic factors pair to zero.
fn contraction_weight(op: ModeKey) -> i64 {
    if op.index == BasisIndex::C {
        return 0;
    }
    if op.starred {
        1
    } else {
        -1
    }
}

/// Applies one oscillator mode to a state.
///
/// Negative modes multiply; positive modes act as the pairing-weighted
/// derivation (each matching creation factor contributes its exponent
/// times the contraction weight). Zero modes follow the scheme and the
/// state's [`ZeroMode`] convention.
pub fn apply_mode(op: ModeKey, state: &FockState) -> Result<FockState, Error> {
    if op.mode2 == 0 {
        return match (state.scheme, state.zero_mode) {
            (ModeScheme::Half, _) => Err(Error::ZeroModeUnderHalf),
            (ModeScheme::Int, ZeroMode::Unspecified) => Err(Error::ZeroModeUnspecified),
            (ModeScheme::Int, ZeroMode::Annihilate) => Ok(state.empty_like()),
        };
    }
    assert!(
        state.scheme.admits(op.mode2),
        "mode does not belong to the state's scheme"
    );
    if op.mode2 < 0 {
        return Ok(state.created_by(op));
    }
    let mut out = state.empty_like();
    let weight = contraction_weight(op);
    if weight == 0 {
        return Ok(out);
    }
    let partner_mode2 = -op.mode2;
    for (mono, coeff) in &state.terms {
        for (pos, (key, exp)) in mono.iter().enumerate() {
            if key.mode2 != partner_mode2 || key.index != op.index || key.starred == op.starred
            {
                continue;
            }
            let mut reduced = mono.clone();
            if reduced[pos].1 == 1 {
                reduced.remove(pos);
            } else {
                reduced[pos].1 -= 1;
            }
            out.add_term(reduced, coeff.scale_int(weight * i64::from(*exp)));
        }
    }
    Ok(out)
}

/// The pairing-weighted derivative of a monomial by one annihilating
/// mode: `None` when no factor contracts, else the reduced monomial and
/// the integer contraction weight (exponent times pairing sign).
fn derived(op: ModeKey, mono: &Monomial) -> Option<(Monomial, i64)> {
    let weight = contraction_weight(op);
    if weight == 0 {
        return None;
    }
    let partner = ModeKey::new(op.index, !op.starred, -op.mode2);
    let pos = mono.binary_search_by(|(k, _)| k.cmp(&partner)).ok()?;
    let exp = mono[pos].1;
    let mut reduced = mono.clone();
    if exp == 1 {
        reduced.remove(pos);
    } else {
        reduced[pos].1 -= 1;
    }
    Some((reduced, weight * i64::from(exp)))
}

/// Applies the mode-`k` component of a quadratic field:
/// `F_k = sum_m F[p][q] :e_p(m) e_q*(k-m):` (doubled modes `m2` and
/// `2k - m2`). Only the finite window that can act nontrivially on the
/// state is expanded; normal ordering applies annihilators first and the
/// integer scheme's `m = 0` branch symmetrizes the two orders.
pub fn quad_mode(f: &FieldQuadratic, k: i64, state: &FockState) -> Result<FockState, Error> {
    if f.n() != state.n {
        return Err(Error::RankMismatch {
            expected: f.n(),
            got: state.n,
        });
    }
    let mut out = state.empty_like();
    if state.is_zero() || f.is_zero() {
        return Ok(out);
    }
    let m2max = state.max_depth2();
    let mut m2 = 2 * k - m2max;
    if !state.scheme.admits(m2) {
        m2 += 1;
    }
    while m2 <= m2max {
        let n2 = 2 * k - m2;
        for ((p, q), coeff) in f.entries() {
            let plain = ModeKey::new(*p, false, m2);
            let starred = ModeKey::new(*q, true, n2);
            if m2 == 0 || n2 == 0 {
                // Zero modes route through `apply_mode` so the scheme and
                // convention checks apply.
                let contribution = if m2 == 0 {
                    let forward = apply_mode(plain, &apply_mode(starred, state)?)?;
                    let backward = apply_mode(starred, &apply_mode(plain, state)?)?;
                    forward.add(&backward).scale(&Scalar::from_ratio(1, 2))
                } else if m2 < 0 {
                    apply_mode(plain, &apply_mode(starred, state)?)?
                } else {
                    apply_mode(starred, &apply_mode(plain, state)?)?
                };
                for (mono, c) in &contribution.terms {
                    out.add_term(mono.clone(), c * coeff);
                }
                continue;
            }
            for (mono, c) in &state.terms {
                // Normal ordering: annihilators (positive modes) act
                // first; pure creations commute, so any order serves.
                if m2 > 0 {
                    let Some((reduced, w1)) = derived(plain, mono) else {
                        continue;
                    };
                    if n2 > 0 {
                        let Some((reduced, w2)) = derived(starred, &reduced) else {
                            continue;
                        };
                        out.add_term(reduced, (c * coeff).scale_int(w1 * w2));
                    } else {
                        out.add_term(multiply_in(&reduced, starred), (c * coeff).scale_int(w1));
                    }
                } else if n2 > 0 {
                    let Some((reduced, w2)) = derived(starred, mono) else {
                        continue;
                    };
                    out.add_term(multiply_in(&reduced, plain), (c * coeff).scale_int(w2));
                } else {
                    let created = multiply_in(&multiply_in(mono, starred), plain);
                    out.add_term(created, c * coeff);
                }
            }
        }
        m2 += 2;
    }
    Ok(out)
}

/// The commutator `[A_k, B_l]` applied to a state.
pub fn commutator(
    a: &FieldQuadratic,
    k: i64,
    b: &FieldQuadratic,
    l: i64,
    state: &FockState,
) -> Result<FockState, Error> {
    let ab = quad_mode(a, k, &quad_mode(b, l, state)?)?;
    let ba = quad_mode(b, l, &quad_mode(a, k, state)?)?;
    Ok(ab.sub(&ba))
}

/// What a symbolic bracket outcome predicts for `[A_k, B_l]` on a state:
/// the field part's `(k+l)`-mode plus, when `l = -k`, the central weight
/// scaled by `k`.
pub fn predicted(
    r: &BracketResult,
    k: i64,
    l: i64,
    state: &FockState,
) -> Result<FockState, Error> {
    let mut out = quad_mode(&r.field, k + l, state)?;
    if k + l == 0 && k != 0 {
        out = out.add(&state.scale(&r.central.scale_int(k)));
    }
    Ok(out)
}

/// Outcome of an oracle comparison.
#[derive(Clone, Debug, PartialEq)]
pub enum OracleOutcome {
    Match,
    /// The first mismatching state, with both sides rendered.
    Mismatch(String),
}

impl OracleOutcome {
    pub fn is_match(&self) -> bool {
        matches!(self, OracleOutcome::Match)
    }
}

/// Checks `[A_k, B_l] v = predicted(expected, k, l, v)` exactly for every
/// state in the list, reporting the first mismatch.
pub fn oracle_check(
    a: &FieldQuadratic,
    b: &FieldQuadratic,
    expected: &BracketResult,
    k: i64,
    l: i64,
    states: &[FockState],
) -> Result<OracleOutcome, Error> {
    for (idx, v) in states.iter().enumerate() {
        let lhs = commutator(a, k, b, l, v)?;
        let rhs = predicted(expected, k, l, v)?;
        if lhs != rhs {
            return Ok(OracleOutcome::Mismatch(format!(
                "state #{idx} = {v}: commutator gives {lhs}, prediction gives {rhs} (k={k}, l={l})"
            )));
        }
    }
    Ok(OracleOutcome::Match)
}

/// Deterministic basis states: every creation monomial of total degree at
/// most `depth` in the non-isotropic oscillators with mode numbers among
/// the `modes` lowest of the scheme, ordered by degree and then
/// lexicographically.
///
/// Isotropic (`c`-direction) factors are excluded: their modes pair to
/// zero with everything, so they generate inert tensor factors that no
/// quadratic here can see.
pub fn basis_states(n: u32, scheme: ModeScheme, modes: u32, depth: u32) -> Vec<FockState> {
    let mut keys = Vec::new();
    for i in 1..=(n + 2) {
        for index in [BasisIndex::Eps(i), BasisIndex::EpsBar(i)] {
            for starred in [false, true] {
                for j in 1..=i64::from(modes) {
                    let mode2 = match scheme {
                        ModeScheme::Half => -(2 * j - 1),
                        ModeScheme::Int => -2 * j,
                    };
                    keys.push(ModeKey::new(index, starred, mode2));
                }
            }
        }
    }
    keys.sort();
    let mut out = Vec::new();
    let mut stack: Vec<ModeKey> = Vec::new();
    fn build(
        n: u32,
        scheme: ModeScheme,
        keys: &[ModeKey],
        start: usize,
        remaining: u32,
        stack: &mut Vec<ModeKey>,
        out: &mut Vec<FockState>,
    ) {
        let mut state = FockState::vacuum(n, scheme);
        for key in stack.iter() {
            state = state.created_by(*key);
        }
        out.push(state);
        if remaining == 0 {
            return;
        }
        for pos in start..keys.len() {
            stack.push(keys[pos]);
            build(n, scheme, keys, pos, remaining - 1, stack, out);
            stack.pop();
        }
    }
    build(n, scheme, &keys, 0, depth, &mut stack, &mut out);
    // The recursion emits prefixes in lexicographic order; re-rank by
    // degree first, keeping the lexicographic order within each degree.
    out.sort_by_key(|s| {
        (
            s.homogeneous_degree2().unwrap_or(0),
            s.terms.keys().next().cloned(),
        )
    });
    out
}

/// Settings for a full mode-level sweep.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// How many of the scheme's lowest mode values the basis states use.
    pub modes: u32,
    /// Maximal creation depth of the basis states.
    pub depth: u32,
    /// Bound on the swept component modes: all `|k|, |l| <=` this value.
    pub mode_bound: i64,
    pub scheme: ModeScheme,
    pub zero_mode: ZeroMode,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            modes: 2,
            depth: 2,
            mode_bound: 2,
            scheme: ModeScheme::Half,
            zero_mode: ZeroMode::Unspecified,
        }
    }
}

/// Result of a mode-level sweep over the bracket relations.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    #[serde(rename = "type")]
    pub type_token: String,
    pub n: u32,
    pub variant: String,
    pub scheme: String,
    pub modes: u32,
    pub depth: u32,
    pub mode_bound: i64,
    pub cases: Vec<CaseOutcome>,
    pub summary: Summary,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }
}

/// The two fields whose commutator a bracket-relation case tests.
fn case_pair<'a>(
    rho: &'a Realization,
    case: &RelationCase,
) -> Result<(&'a FieldQuadratic, &'a FieldQuadratic), Error> {
    let pick = |sign: char, i: usize| {
        if sign == '+' {
            rho.x_plus(i)
        } else {
            rho.x_minus(i)
        }
    };
    match case.relation {
        1..=3 => Ok((rho.alpha(case.indices[0])?, rho.alpha(case.indices[1])?)),
        4 => {
            let sign = case.signs.chars().next().unwrap_or('+');
            Ok((rho.alpha(case.indices[0])?, pick(sign, case.indices[1])?))
        }
        5 => {
            let sign = case.signs.chars().next().unwrap_or('+');
            let x = pick(sign, case.indices[0])?;
            Ok((x, x))
        }
        6 => Ok((
            rho.x_plus(case.indices[0])?,
            rho.x_minus(case.indices[1])?,
        )),
        _ => Err(Error::IndexOutOfRange {
            what: "bracket-relation number",
            index: i64::from(case.relation),
            n: 6,
        }),
    }
}

/// Sweeps one case: every state against every mode pair within the bound,
/// comparing the commutator to the symbolic bracket's prediction.
fn oracle_case(
    rho: &Realization,
    case: &RelationCase,
    states: &[FockState],
    bound: i64,
) -> CaseOutcome {
    let outcome = |status: Status, detail: String| CaseOutcome {
        relation: case.relation,
        indices: case.indices.clone(),
        signs: case.signs.clone(),
        status,
        detail,
    };
    let run = || -> Result<Result<(), String>, Error> {
        let (a, b) = case_pair(rho, case)?;
        let expected = bracket(a, b)?;
        let window = (2 * bound + 1) as usize;
        for v in states {
            let av: Result<Vec<FockState>, Error> =
                (-bound..=bound).map(|k| quad_mode(a, k, v)).collect();
            let av = av?;
            let bv: Result<Vec<FockState>, Error> =
                (-bound..=bound).map(|l| quad_mode(b, l, v)).collect();
            let bv = bv?;
            let pred: Result<Vec<FockState>, Error> = (-2 * bound..=2 * bound)
                .map(|s| quad_mode(&expected.field, s, v))
                .collect();
            let pred = pred?;
            for ki in 0..window {
                let k = ki as i64 - bound;
                for li in 0..window {
                    let l = li as i64 - bound;
                    let lhs = quad_mode(a, k, &bv[li])?.sub(&quad_mode(b, l, &av[ki])?);
                    let mut rhs = pred[(k + l + 2 * bound) as usize].clone();
                    if l == -k && k != 0 {
                        rhs = rhs.add(&v.scale(&expected.central.scale_int(k)));
                    }
                    if lhs != rhs {
                        return Ok(Err(format!(
                            "on state {v} at modes (k, l) = ({k}, {l}): \
                             commutator gives {lhs}; prediction gives {rhs}"
                        )));
                    }
                }
            }
        }
        Ok(Ok(()))
    };
    match run() {
        Ok(Ok(())) => outcome(Status::Pass, String::new()),
        Ok(Err(msg)) => outcome(Status::Fail, msg),
        Err(e) => outcome(Status::Fail, e.to_string()),
    }
}

/// Runs the mode-level counterpart of every bracket relation (1)–(6) of
/// one algebra type: each case's commutator is applied to every basis
/// state for every mode pair within the bound and compared exactly to the
/// symbolic bracket's prediction. An optional relation filter restricts
/// the sweep. Cases run in parallel; the report order is deterministic.
pub fn oracle_sweep(
    t: AlgebraType,
    variant: Variant,
    config: &OracleConfig,
    filter: Option<&[u8]>,
) -> Result<OracleReport, Error> {
    let start = Instant::now();
    let rho = Realization::new(t, variant);
    let states: Vec<FockState> = basis_states(t.n(), config.scheme, config.modes, config.depth)
        .into_iter()
        .map(|s| s.with_zero_mode(config.zero_mode))
        .collect();
    let cases: Vec<RelationCase> = enumerate_cases(t)
        .into_iter()
        .filter(|c| c.relation <= 6)
        .filter(|c| filter.map_or(true, |keep| keep.contains(&c.relation)))
        .collect();
    let outcomes: Vec<CaseOutcome> = cases
        .par_iter()
        .map(|case| oracle_case(&rho, case, &states, config.mode_bound))
        .collect();
    let pass = outcomes
        .iter()
        .filter(|o| o.status == Status::Pass)
        .count();
    let fail = outcomes.len() - pass;
    Ok(OracleReport {
        type_token: t.family().token().to_string(),
        n: t.n(),
        variant: variant.token().to_string(),
        scheme: config.scheme.token().to_string(),
        modes: config.modes,
        depth: config.depth,
        mode_bound: config.mode_bound,
        cases: outcomes,
        summary: Summary {
            pass,
            fail,
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Family;

    fn e(i: u32) -> BasisIndex {
        BasisIndex::Eps(i)
    }

    fn single(n: u32, key: ModeKey) -> FockState {
        FockState::vacuum(n, ModeScheme::Half).created_by(key)
    }

    #[test]
    fn annihilators_kill_the_vacuum() {
        let vac = FockState::vacuum(3, ModeScheme::Half);
        let out = apply_mode(ModeKey::new(e(1), false, 1), &vac).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn contraction_signs_follow_the_pairing() {
        // e_1(1/2) against e_1*(-1/2)|0> contracts to <e_1, e_1*> = -1.
        let n = 3;
        let state = single(n, ModeKey::new(e(1), true, -1));
        let out = apply_mode(ModeKey::new(e(1), false, 1), &state).unwrap();
        assert_eq!(out, FockState::vacuum(n, ModeScheme::Half).scale(&Scalar::from_int(-1)));
        // The starred operator contracts with weight +1.
        let state = single(n, ModeKey::new(e(1), false, -1));
        let out = apply_mode(ModeKey::new(e(1), true, 1), &state).unwrap();
        assert_eq!(out, FockState::vacuum(n, ModeScheme::Half));
        // Mismatched indices annihilate.
        let state = single(n, ModeKey::new(e(2), true, -1));
        let out = apply_mode(ModeKey::new(e(1), false, 1), &state).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn exponents_weight_the_derivation() {
        // e_1(1/2) on e_1*(-1/2)^3 |0> gives -3 e_1*(-1/2)^2 |0>.
        let n = 2;
        let key = ModeKey::new(e(1), true, -1);
        let state = single(n, key).created_by(key).created_by(key);
        let out = apply_mode(ModeKey::new(e(1), false, 1), &state).unwrap();
        let expected = single(n, key).created_by(key).scale(&Scalar::from_int(-3));
        assert_eq!(out, expected);
    }

    #[test]
    fn zero_modes_follow_scheme_and_convention() {
        let half = FockState::vacuum(2, ModeScheme::Half);
        assert_eq!(
            apply_mode(ModeKey::new(e(1), false, 0), &half).unwrap_err(),
            Error::ZeroModeUnderHalf
        );
        let int = FockState::vacuum(2, ModeScheme::Int);
        assert_eq!(
            apply_mode(ModeKey::new(e(1), false, 0), &int).unwrap_err(),
            Error::ZeroModeUnspecified
        );
        let int = int.with_zero_mode(ZeroMode::Annihilate);
        assert!(apply_mode(ModeKey::new(e(1), false, 0), &int)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn head_pair_components_reproduce_the_central_constant_on_the_vacuum() {
        // [alpha_0(1), alpha_0(-1)] |0> = k1 * level |0> = -4 |0> for the
        // smallest odd A type.
        let t = AlgebraType::new(Family::AOdd, 3).unwrap();
        let rho = Realization::new(t, Variant::Theorem);
        let vac = FockState::vacuum(t.n(), ModeScheme::Half);
        let a0 = rho.alpha(0).unwrap();
        let out = commutator(a0, 1, a0, -1, &vac).unwrap();
        assert_eq!(out, vac.scale(&Scalar::from_int(-4)));
    }

    #[test]
    fn positive_quadratic_modes_kill_the_vacuum_under_half() {
        let t = AlgebraType::new(Family::D4, 2).unwrap();
        let rho = Realization::new(t, Variant::Theorem);
        let vac = FockState::vacuum(t.n(), ModeScheme::Half);
        for k in [1, 2, 5] {
            for f in [rho.alpha(0).unwrap(), rho.x_plus(1).unwrap()] {
                assert!(quad_mode(f, k, &vac).unwrap().is_zero(), "k = {k}");
            }
        }
    }

    #[test]
    fn ladder_pair_zero_modes_match_the_diagonal_current_on_a_state() {
        // [X(alpha_1)_0, X(-alpha_1)_0] v = (alpha_1)_0 v on a one-particle
        // state (the central term carries a factor k = 0).
        let t = AlgebraType::new(Family::AOdd, 3).unwrap();
        let rho = Realization::new(t, Variant::Theorem);
        let v = single(t.n(), ModeKey::new(e(1), true, -1));
        let lhs = commutator(
            rho.x_plus(1).unwrap(),
            0,
            rho.x_minus(1).unwrap(),
            0,
            &v,
        )
        .unwrap();
        let rhs = quad_mode(rho.alpha(1).unwrap(), 0, &v).unwrap();
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero(), "the comparison must be non-vacuous");
    }

    #[test]
    fn quadratic_modes_shift_the_grading_by_their_mode() {
        let t = AlgebraType::new(Family::AOdd, 3).unwrap();
        let rho = Realization::new(t, Variant::Theorem);
        let f = rho.x_minus(0).unwrap();
        let v = single(t.n(), ModeKey::new(e(2), false, -3))
            .created_by(ModeKey::new(e(1), true, -1));
        assert_eq!(v.homogeneous_degree2(), Some(4));
        for k in [-2i64, -1, 0, 1] {
            let out = quad_mode(f, k, &v).unwrap();
            if !out.is_zero() {
                assert_eq!(
                    out.homogeneous_degree2(),
                    Some(4 - 2 * k),
                    "degree after mode {k}"
                );
            }
        }
    }

    #[test]
    fn oracle_check_validates_a_central_tail_pair() {
        // Relation (3) at the (n-1, n) pair of the smallest odd A type:
        // [alpha_2(1), alpha_3(-1)] |0> = 2 |0>.
        let t = AlgebraType::new(Family::AOdd, 3).unwrap();
        let rho = Realization::new(t, Variant::Theorem);
        let a = rho.alpha(2).unwrap();
        let b = rho.alpha(3).unwrap();
        let expected = bracket(a, b).unwrap();
        assert_eq!(expected.central, Scalar::from_int(2));
        let states = basis_states(t.n(), ModeScheme::Half, 1, 1);
        let verdict = oracle_check(a, b, &expected, 1, -1, &states).unwrap();
        assert!(verdict.is_match());
        // Mode pairs with k + l != 0 see no central contribution.
        let vac = FockState::vacuum(t.n(), ModeScheme::Half);
        let out = commutator(a, 2, b, 3, &vac).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn oracle_check_reports_wrong_predictions() {
        let t = AlgebraType::new(Family::AOdd, 3).unwrap();
        let rho = Realization::new(t, Variant::Theorem);
        let a = rho.alpha(2).unwrap();
        let b = rho.alpha(3).unwrap();
        let mut expected = bracket(a, b).unwrap();
        expected.central = Scalar::from_int(5);
        let states = vec![FockState::vacuum(t.n(), ModeScheme::Half)];
        let verdict = oracle_check(a, b, &expected, 1, -1, &states).unwrap();
        match verdict {
            OracleOutcome::Mismatch(msg) => {
                assert!(msg.contains("state #0"), "message: {msg}");
            }
            OracleOutcome::Match => panic!("a wrong prediction must be reported"),
        }
    }

    #[test]
    fn basis_state_enumeration_is_deterministic_and_counted() {
        // 4 symbols x {plain, starred} x 1 mode = 16 keys at n = 2.
        let states = basis_states(2, ModeScheme::Half, 1, 1);
        assert_eq!(states.len(), 17);
        assert_eq!(states[0], FockState::vacuum(2, ModeScheme::Half));
        // Depth 2: 1 + 16 + C(17, 2) = 153.
        let states = basis_states(2, ModeScheme::Half, 1, 2);
        assert_eq!(states.len(), 1 + 16 + 136);
        // Two mode values double the key count.
        let states = basis_states(2, ModeScheme::Half, 2, 1);
        assert_eq!(states.len(), 33);
        let again = basis_states(2, ModeScheme::Half, 2, 1);
        assert_eq!(states, again);
    }

    #[test]
    fn oracle_sweep_validates_filtered_relations_on_a_small_window() {
        let t = AlgebraType::new(Family::AEven, 2).unwrap();
        let config = OracleConfig {
            modes: 1,
            depth: 1,
            mode_bound: 1,
            ..OracleConfig::default()
        };
        let report = oracle_sweep(t, Variant::Theorem, &config, Some(&[1, 6])).unwrap();
        assert!(report.passed(), "small sweep must pass");
        // The head pair plus the 3x3 raising/lowering grid.
        assert_eq!(report.cases.len(), 10);
        assert!(report
            .cases
            .iter()
            .all(|c| c.relation == 1 || c.relation == 6));
        assert_eq!(report.scheme, "half");
    }

    #[test]
    fn oracle_sweep_under_int_without_convention_reports_the_gap() {
        let t = AlgebraType::new(Family::AEven, 2).unwrap();
        let config = OracleConfig {
            modes: 1,
            depth: 1,
            mode_bound: 1,
            scheme: ModeScheme::Int,
            zero_mode: ZeroMode::Unspecified,
        };
        let report = oracle_sweep(t, Variant::Theorem, &config, Some(&[1])).unwrap();
        assert!(!report.passed());
        assert!(
            report.cases[0].detail.contains("convention"),
            "detail: {}",
            report.cases[0].detail
        );
    }

    #[test]
    fn state_rendering_names_modes_as_fractions_under_half() {
        let v = single(2, ModeKey::new(BasisIndex::EpsBar(1), true, -1));
        assert_eq!(v.to_string(), "e(b1)*(-1/2) |0>");
        let w = v.scale(&Scalar::from_int(-2));
        assert_eq!(w.to_string(), "-2*e(b1)*(-1/2) |0>");
        let vac = FockState::vacuum(2, ModeScheme::Int);
        assert_eq!(vac.to_string(), "|0>");
    }
}
