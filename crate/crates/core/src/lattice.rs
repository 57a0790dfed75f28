//! The ambient quadratic space of the realization.
//!
//! For a twisted type of rank data `n` the construction uses an orthonormal
//! family `e_1, ..., e_{n+2}`, a second "barred" orthonormal copy
//! `eb_1, ..., eb_{n+2}` orthogonal to the first, and one isotropic
//! direction `c` that pairs to zero with everything (including itself). The
//! symmetric form is therefore diagonal with
//!
//! ```text
//! (c|c) = 0,   (e_i|e_j) = (eb_i|eb_j) = delta_ij,   (e_i|eb_j) = 0.
//! ```
//!
//! Oscillators come in conjugate pairs: to every lattice vector `a` belong a
//! plain generating field `a(z)` and a starred one `a*(z)`, and the only
//! nonvanishing contractions are the mixed ones,
//!
//! ```text
//! <a, b*> = -(a|b),        <b*, a> = (a|b),
//! ```
//!
//! which is the antisymmetric pairing [`pairing`] on pairs
//! ([`CVector`] = plain part + starred part) used by the Wick calculus.
//!
//! The module also fixes the distinguished vectors of each algebra type: the
//! simple roots `alpha_0, ..., alpha_n` (with `alpha_0 = c - theta0`), the
//! auxiliary vectors `beta` and `betabar` through which `alpha_0`-type
//! currents are built, and the symmetrizer constants `d_0, ..., d_n`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::scalar::{join_terms, term_string, Scalar};

/// The four twisted families handled by the verifier.
///
/// `n` constraints: `AOdd` needs `n >= 3`, `AEven` and `DSeries` need
/// `n >= 2`, and `D4` (the triality case) forces `n = 2`. The twist order is
/// 2 except for `D4`, where it is 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// Type `A_{2n-1}` with the order-2 diagram twist.
    AOdd,
    /// Type `A_{2n}` with the order-2 diagram twist.
    AEven,
    /// Type `D_{n+1}` with the order-2 diagram twist.
    DSeries,
    /// Type `D_4` with the order-3 (triality) twist.
    D4,
}

impl Family {
    /// Stable lowercase token used by the command line and reports.
    pub fn token(self) -> &'static str {
        match self {
            Family::AOdd => "a-odd",
            Family::AEven => "a-even",
            Family::DSeries => "d-series",
            Family::D4 => "d4",
        }
    }

    /// Minimal admissible `n` for the family.
    pub fn min_n(self) -> u32 {
        match self {
            Family::AOdd => 3,
            Family::AEven | Family::DSeries | Family::D4 => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A validated (family, n) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraType {
    family: Family,
    n: u32,
}

impl AlgebraType {
    /// Validates the rank datum for the family.
    pub fn new(family: Family, n: u32) -> Result<Self, Error> {
        let ok = match family {
            Family::AOdd => n >= 3,
            Family::AEven | Family::DSeries => n >= 2,
            Family::D4 => n == 2,
        };
        if ok {
            Ok(AlgebraType { family, n })
        } else {
            Err(Error::InvalidRank {
                family: family.token(),
                min: family.min_n(),
                got: n,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    /// The rank datum `n`; simple roots are indexed `0..=n`.
    pub fn n(self) -> u32 {
        self.n
    }

    /// Order of the diagram twist: 3 for the triality case, else 2.
    pub fn r(self) -> u32 {
        if self.family == Family::D4 {
            3
        } else {
            2
        }
    }

    /// Largest index of an `e`/`eb` basis symbol (`n + 2`).
    pub fn max_symbol(self) -> u32 {
        self.n + 2
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.family, self.n)
    }
}

/// One symbol of the diagonal basis: the isotropic direction `c`, an
/// unbarred `e_i` or a barred `eb_i` (`1 <= i <= n + 2`).
///
/// The derived ordering (`c`, then `e_1, ..., e_{n+2}`, then
/// `eb_1, ..., eb_{n+2}`) is the iteration and display order everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasisIndex {
    C,
    Eps(u32),
    EpsBar(u32),
}

impl BasisIndex {
    /// Diagonal entry of the symmetric form at this symbol.
    pub fn gram_weight(self) -> i64 {
        match self {
            BasisIndex::C => 0,
            BasisIndex::Eps(_) | BasisIndex::EpsBar(_) => 1,
        }
    }

    /// Short token without decoration, e.g. `"c"`, `"e3"`, `"eb1"`.
    pub fn token(self) -> String {
        match self {
            BasisIndex::C => "c".to_string(),
            BasisIndex::Eps(i) => format!("e{i}"),
            BasisIndex::EpsBar(i) => format!("eb{i}"),
        }
    }

    /// Index token used inside normal-ordered field notation, e.g. `"3"` for
    /// `e_3` and `"b3"` for `eb_3`.
    pub fn field_token(self) -> String {
        match self {
            BasisIndex::C => "c".to_string(),
            BasisIndex::Eps(i) => format!("{i}"),
            BasisIndex::EpsBar(i) => format!("b{i}"),
        }
    }

    fn validate(self, n: u32) -> Result<Self, Error> {
        match self {
            BasisIndex::C => Ok(self),
            BasisIndex::Eps(i) | BasisIndex::EpsBar(i) => {
                if (1..=n + 2).contains(&i) {
                    Ok(self)
                } else {
                    Err(Error::IndexOutOfRange {
                        what: "basis symbol",
                        index: i as i64,
                        n,
                    })
                }
            }
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// A finitely supported vector over the diagonal basis, with exact
/// coefficients. Zero coefficients are never stored, so equality is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVector {
    n: u32,
    coords: BTreeMap<BasisIndex, Scalar>,
}

impl LatticeVector {
    /// The zero vector in rank context `n`.
    pub fn zero(n: u32) -> Self {
        LatticeVector {
            n,
            coords: BTreeMap::new(),
        }
    }

    /// A single basis vector.
    pub fn basis(n: u32, idx: BasisIndex) -> Result<Self, Error> {
        idx.validate(n)?;
        let mut coords = BTreeMap::new();
        coords.insert(idx, Scalar::one());
        Ok(LatticeVector { n, coords })
    }

    /// Rank context the vector lives in.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coefficient at a symbol (zero when absent).
    pub fn get(&self, idx: BasisIndex) -> Scalar {
        self.coords.get(&idx).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Iterates the nonzero coordinates in basis order.
    pub fn coords(&self) -> impl Iterator<Item = (&BasisIndex, &Scalar)> {
        self.coords.iter()
    }

    /// Adds `coeff * basis(idx)` in place, pruning a resulting zero.
    pub fn add_term(&mut self, idx: BasisIndex, coeff: &Scalar) -> Result<(), Error> {
        idx.validate(self.n)?;
        if coeff.is_zero() {
            return Ok(());
        }
        let slot = self.coords.entry(idx).or_insert_with(Scalar::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coords.remove(&idx);
        }
        Ok(())
    }

    pub fn add(&self, other: &LatticeVector) -> Result<LatticeVector, Error> {
        check_rank(self.n, other.n)?;
        let mut out = self.clone();
        for (idx, coeff) in other.coords.iter() {
            out.add_term(*idx, coeff)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LatticeVector) -> Result<LatticeVector, Error> {
        self.add(&other.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> LatticeVector {
        if s.is_zero() {
            return LatticeVector::zero(self.n);
        }
        let coords = self
            .coords
            .iter()
            .map(|(idx, c)| (*idx, c * s))
            .collect();
        LatticeVector { n: self.n, coords }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(
            self.coords
                .iter()
                .map(|(idx, c)| term_string(c, &idx.token())),
        );
        f.write_str(&rendered)
    }
}

fn check_rank(expected: u32, got: u32) -> Result<(), Error> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, got })
    }
}

/// The symmetric form. Diagonal: `c` is isotropic and pairs to zero with
/// everything; the `e_i` and `eb_i` together are orthonormal.
pub fn gram(u: &LatticeVector, v: &LatticeVector) -> Result<Scalar, Error> {
    check_rank(u.n, v.n)?;
    let mut acc = Scalar::zero();
    for (idx, a) in u.coords.iter() {
        if idx.gram_weight() == 0 {
            continue;
        }
        if let Some(b) = v.coords.get(idx) {
            acc += &(a * b);
        }
    }
    Ok(acc)
}

/// A conjugate pair of lattice data: the `plus` part labels plain
/// oscillators `a(z)`, the `star` part labels starred oscillators `a*(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CVector {
    plus: LatticeVector,
    star: LatticeVector,
}

impl CVector {
    /// A purely plain vector `a(z)`.
    pub fn plus_of(v: LatticeVector) -> Self {
        let n = v.n;
        CVector {
            plus: v,
            star: LatticeVector::zero(n),
        }
    }

    /// A purely starred vector `a*(z)`.
    pub fn star_of(v: LatticeVector) -> Self {
        let n = v.n;
        CVector {
            plus: LatticeVector::zero(n),
            star: v,
        }
    }

    /// General pair; both parts must share the rank context.
    pub fn new(plus: LatticeVector, star: LatticeVector) -> Result<Self, Error> {
        check_rank(plus.n, star.n)?;
        Ok(CVector { plus, star })
    }

    pub fn plus(&self) -> &LatticeVector {
        &self.plus
    }

    pub fn star(&self) -> &LatticeVector {
        &self.star
    }

    pub fn n(&self) -> u32 {
        self.plus.n
    }
}

/// The antisymmetric contraction pairing:
/// `<a, b*> = -(a|b)`, `<b*, a> = (a|b)`, and plain/plain as well as
/// starred/starred pairs contract to zero.
pub fn pairing(x: &CVector, y: &CVector) -> Result<Scalar, Error> {
    check_rank(x.n(), y.n())?;
    let plus_star = gram(&x.plus, &y.star)?;
    let star_plus = gram(&x.star, &y.plus)?;
    Ok(&star_plus - &plus_star)
}

/// Convenience: the basis vector `e_i` in the rank context of `t`.
pub fn eps(t: AlgebraType, i: u32) -> Result<LatticeVector, Error> {
    LatticeVector::basis(t.n(), BasisIndex::Eps(i))
}

/// Convenience: the barred basis vector `eb_i` in the rank context of `t`.
pub fn epsbar(t: AlgebraType, i: u32) -> Result<LatticeVector, Error> {
    LatticeVector::basis(t.n(), BasisIndex::EpsBar(i))
}

/// The highest-weight companion `theta0` entering `alpha_0 = c - theta0`.
pub fn theta0(t: AlgebraType) -> LatticeVector {
    let mut v = LatticeVector::zero(t.n());
    let half_sqrt2 = Scalar::sqrt2().scale_rational(&num_rational::BigRational::new(
        num_bigint::BigInt::from(1),
        num_bigint::BigInt::from(2),
    ));
    match t.family() {
        Family::AOdd => {
            // (e_1 + e_2) / sqrt2
            v.add_term(BasisIndex::Eps(1), &half_sqrt2).unwrap();
            v.add_term(BasisIndex::Eps(2), &half_sqrt2).unwrap();
        }
        Family::AEven => {
            v.add_term(BasisIndex::Eps(1), &Scalar::sqrt2()).unwrap();
        }
        Family::DSeries => {
            v.add_term(BasisIndex::Eps(1), &Scalar::one()).unwrap();
        }
        Family::D4 => {
            // (e_1 - e_3) / sqrt3
            let third_sqrt3 = Scalar::sqrt3().scale_rational(&num_rational::BigRational::new(
                num_bigint::BigInt::from(1),
                num_bigint::BigInt::from(3),
            ));
            v.add_term(BasisIndex::Eps(1), &third_sqrt3).unwrap();
            v.add_term(BasisIndex::Eps(3), &(-&third_sqrt3)).unwrap();
        }
    }
    v
}

/// The auxiliary vector `beta`: a multiple of `c` plus `e_1`, normalized so
/// that `alpha_0` is expressible through it (see the tests for the exact
/// identities).
pub fn beta(t: AlgebraType) -> LatticeVector {
    beta_with(t, BasisIndex::Eps(1))
}

/// Barred companion of [`beta`]: same `c` multiple, but `eb_1` instead of
/// `e_1`.
pub fn betabar(t: AlgebraType) -> LatticeVector {
    beta_with(t, BasisIndex::EpsBar(1))
}

fn beta_with(t: AlgebraType, one: BasisIndex) -> LatticeVector {
    let mut v = LatticeVector::zero(t.n());
    let c_coeff = match t.family() {
        Family::AOdd => -&Scalar::sqrt2(),
        Family::AEven => {
            // -(1/sqrt2) = -sqrt2/2
            Scalar::sqrt2().scale_rational(&num_rational::BigRational::new(
                num_bigint::BigInt::from(-1),
                num_bigint::BigInt::from(2),
            ))
        }
        Family::DSeries => -&Scalar::one(),
        Family::D4 => -&Scalar::sqrt3(),
    };
    v.add_term(BasisIndex::C, &c_coeff).unwrap();
    v.add_term(one, &Scalar::one()).unwrap();
    v
}

/// The simple roots `alpha_0, ..., alpha_n` of the twisted type, with
/// `alpha_0 = c - theta0`.
pub fn alpha_root(t: AlgebraType, i: usize) -> Result<LatticeVector, Error> {
    let n = t.n() as usize;
    if i > n {
        return Err(Error::IndexOutOfRange {
            what: "root index",
            index: i as i64,
            n: t.n(),
        });
    }
    if i == 0 {
        let mut v = theta0(t).scale(&-&Scalar::one());
        v.add_term(BasisIndex::C, &Scalar::one())?;
        return Ok(v);
    }
    let i = i as u32;
    let mut v = LatticeVector::zero(t.n());
    let half_sqrt2 = Scalar::sqrt2().scale_rational(&num_rational::BigRational::new(
        num_bigint::BigInt::from(1),
        num_bigint::BigInt::from(2),
    ));
    match t.family() {
        Family::AOdd => {
            if i < t.n() {
                v.add_term(BasisIndex::Eps(i), &half_sqrt2)?;
                v.add_term(BasisIndex::Eps(i + 1), &(-&half_sqrt2))?;
            } else {
                v.add_term(BasisIndex::Eps(i), &Scalar::sqrt2())?;
            }
        }
        Family::AEven => {
            if i < t.n() {
                v.add_term(BasisIndex::Eps(i), &half_sqrt2)?;
                v.add_term(BasisIndex::Eps(i + 1), &(-&half_sqrt2))?;
            } else {
                v.add_term(BasisIndex::Eps(i), &half_sqrt2)?;
            }
        }
        Family::DSeries => {
            if i < t.n() {
                v.add_term(BasisIndex::Eps(i), &Scalar::one())?;
                v.add_term(BasisIndex::Eps(i + 1), &(-&Scalar::one()))?;
            } else {
                v.add_term(BasisIndex::Eps(i), &Scalar::one())?;
            }
        }
        Family::D4 => {
            let third_sqrt3 = Scalar::sqrt3().scale_rational(&num_rational::BigRational::new(
                num_bigint::BigInt::from(1),
                num_bigint::BigInt::from(3),
            ));
            if i == 1 {
                // (e_1 - e_2) / sqrt3
                v.add_term(BasisIndex::Eps(1), &third_sqrt3)?;
                v.add_term(BasisIndex::Eps(2), &(-&third_sqrt3))?;
            } else {
                // (-e_1 + 2 e_2 - e_3) / sqrt3
                v.add_term(BasisIndex::Eps(1), &(-&third_sqrt3))?;
                v.add_term(BasisIndex::Eps(2), &third_sqrt3.scale_int(2))?;
                v.add_term(BasisIndex::Eps(3), &(-&third_sqrt3))?;
            }
        }
    }
    Ok(v)
}

/// The symmetrizer constants `d_0, ..., d_n` (one half of the root norms).
pub fn d_const(t: AlgebraType, i: usize) -> Result<Scalar, Error> {
    let n = t.n() as usize;
    if i > n {
        return Err(Error::IndexOutOfRange {
            what: "root index",
            index: i as i64,
            n: t.n(),
        });
    }
    let q = match t.family() {
        Family::AOdd => {
            if i == n {
                (1, 1)
            } else {
                (1, 2)
            }
        }
        Family::AEven => {
            if i == 0 {
                (1, 1)
            } else if i == n {
                (1, 4)
            } else {
                (1, 2)
            }
        }
        Family::DSeries => {
            if i == 0 || i == n {
                (1, 2)
            } else {
                (1, 1)
            }
        }
        Family::D4 => {
            if i == n {
                (1, 1)
            } else {
                (1, 3)
            }
        }
    };
    Ok(Scalar::from_ratio(q.0, q.1))
}

/// All four families at their smallest admissible rank, in a fixed order.
/// Useful for sweeping tests.
pub fn smallest_types() -> Vec<AlgebraType> {
    vec![
        AlgebraType::new(Family::AOdd, 3).unwrap(),
        AlgebraType::new(Family::AEven, 2).unwrap(),
        AlgebraType::new(Family::DSeries, 2).unwrap(),
        AlgebraType::new(Family::D4, 2).unwrap(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<AlgebraType> {
        vec![
            AlgebraType::new(Family::AOdd, 3).unwrap(),
            AlgebraType::new(Family::AOdd, 5).unwrap(),
            AlgebraType::new(Family::AEven, 2).unwrap(),
            AlgebraType::new(Family::AEven, 4).unwrap(),
            AlgebraType::new(Family::DSeries, 2).unwrap(),
            AlgebraType::new(Family::DSeries, 4).unwrap(),
            AlgebraType::new(Family::D4, 2).unwrap(),
        ]
    }

    #[test]
    fn rank_validation_rejects_small_and_wrong_n() {
        assert!(AlgebraType::new(Family::AOdd, 2).is_err());
        assert!(AlgebraType::new(Family::AEven, 1).is_err());
        assert!(AlgebraType::new(Family::DSeries, 1).is_err());
        assert!(AlgebraType::new(Family::D4, 3).is_err());
        assert!(AlgebraType::new(Family::D4, 2).is_ok());
    }

    #[test]
    fn twist_order_is_three_only_for_triality() {
        for t in all_types() {
            let expected = if t.family() == Family::D4 { 3 } else { 2 };
            assert_eq!(t.r(), expected);
        }
    }

    #[test]
    fn c_is_isotropic_and_pairs_to_zero_with_everything() {
        let t = AlgebraType::new(Family::AOdd, 3).unwrap();
        let c = LatticeVector::basis(t.n(), BasisIndex::C).unwrap();
        assert!(gram(&c, &c).unwrap().is_zero());
        for i in 1..=t.max_symbol() {
            assert!(gram(&c, &eps(t, i).unwrap()).unwrap().is_zero());
            assert!(gram(&c, &epsbar(t, i).unwrap()).unwrap().is_zero());
        }
        assert!(gram(&c, &beta(t)).unwrap().is_zero());
    }

    #[test]
    fn unbarred_and_barred_copies_are_orthonormal_and_orthogonal() {
        let t = AlgebraType::new(Family::DSeries, 2).unwrap();
        for i in 1..=t.max_symbol() {
            for j in 1..=t.max_symbol() {
                let ee = gram(&eps(t, i).unwrap(), &eps(t, j).unwrap()).unwrap();
                let bb = gram(&epsbar(t, i).unwrap(), &epsbar(t, j).unwrap()).unwrap();
                let eb = gram(&eps(t, i).unwrap(), &epsbar(t, j).unwrap()).unwrap();
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(ee, expected);
                assert_eq!(bb, expected);
                assert!(eb.is_zero());
            }
        }
    }

    #[test]
    fn pairing_signs_and_antisymmetry() {
        let t = AlgebraType::new(Family::AOdd, 3).unwrap();
        let e1 = eps(t, 1).unwrap();
        let plain = CVector::plus_of(e1.clone());
        let starred = CVector::star_of(e1);
        // <a, a*> = -(a|a) = -1 and <a*, a> = +1.
        assert_eq!(pairing(&plain, &starred).unwrap(), Scalar::from_int(-1));
        assert_eq!(pairing(&starred, &plain).unwrap(), Scalar::from_int(1));
        // Plain/plain and starred/starred contract to zero.
        assert!(pairing(&plain, &plain).unwrap().is_zero());
        assert!(pairing(&starred, &starred).unwrap().is_zero());
    }

    #[test]
    fn pairing_is_antisymmetric_on_mixed_pairs() {
        let t = AlgebraType::new(Family::D4, 2).unwrap();
        let x = CVector::new(beta(t), epsbar(t, 2).unwrap()).unwrap();
        let y = CVector::new(eps(t, 1).unwrap(), betabar(t)).unwrap();
        let xy = pairing(&x, &y).unwrap();
        let yx = pairing(&y, &x).unwrap();
        assert_eq!(xy, -&yx);
    }

    #[test]
    fn theta0_norms_match_the_tables() {
        let expect = [
            (Family::AOdd, 3, Scalar::from_int(1)),
            (Family::AEven, 2, Scalar::from_int(2)),
            (Family::DSeries, 2, Scalar::from_int(1)),
            (Family::D4, 2, Scalar::from_ratio(2, 3)),
        ];
        for (family, n, norm) in expect {
            let t = AlgebraType::new(family, n).unwrap();
            let th = theta0(t);
            assert_eq!(gram(&th, &th).unwrap(), norm, "theta0 norm for {t}");
        }
    }

    #[test]
    fn beta_recovers_alpha0_by_the_family_identity() {
        // alpha_0 = c - theta0 must agree with its beta expression:
        //   AOdd:    alpha_0 = -(beta + e_2) / sqrt2
        //   AEven:   alpha_0 = -sqrt2 * beta
        //   DSeries: alpha_0 = -beta
        //   D4:      alpha_0 = -(beta - e_3) / sqrt3
        let half_sqrt2 = Scalar::sqrt2().scale_rational(&num_rational::BigRational::new(
            num_bigint::BigInt::from(1),
            num_bigint::BigInt::from(2),
        ));
        let third_sqrt3 = Scalar::sqrt3().scale_rational(&num_rational::BigRational::new(
            num_bigint::BigInt::from(1),
            num_bigint::BigInt::from(3),
        ));

        let t = AlgebraType::new(Family::AOdd, 4).unwrap();
        let lhs = alpha_root(t, 0).unwrap();
        let rhs = beta(t)
            .add(&eps(t, 2).unwrap())
            .unwrap()
            .scale(&(-&half_sqrt2));
        assert_eq!(lhs, rhs);

        let t = AlgebraType::new(Family::AEven, 3).unwrap();
        let lhs = alpha_root(t, 0).unwrap();
        let rhs = beta(t).scale(&(-&Scalar::sqrt2()));
        assert_eq!(lhs, rhs);

        let t = AlgebraType::new(Family::DSeries, 3).unwrap();
        let lhs = alpha_root(t, 0).unwrap();
        let rhs = beta(t).scale(&(-&Scalar::one()));
        assert_eq!(lhs, rhs);

        let t = AlgebraType::new(Family::D4, 2).unwrap();
        let lhs = alpha_root(t, 0).unwrap();
        let rhs = beta(t)
            .sub(&eps(t, 3).unwrap())
            .unwrap()
            .scale(&(-&third_sqrt3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetrizers_are_half_the_root_norms() {
        for t in all_types() {
            for i in 0..=t.n() as usize {
                let a = alpha_root(t, i).unwrap();
                let norm = gram(&a, &a).unwrap();
                let twice_d = d_const(t, i).unwrap().scale_int(2);
                assert_eq!(norm, twice_d, "norm of alpha_{i} for {t}");
            }
        }
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let a = LatticeVector::zero(5);
        let b = LatticeVector::zero(6);
        match gram(&a, &b) {
            Err(Error::RankMismatch { expected: 5, got: 6 }) => {}
            other => panic!("expected rank mismatch, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_symbols_are_rejected() {
        let t = AlgebraType::new(Family::AEven, 2).unwrap();
        assert!(LatticeVector::basis(t.n(), BasisIndex::Eps(5)).is_err());
        assert!(LatticeVector::basis(t.n(), BasisIndex::EpsBar(0)).is_err());
        assert!(alpha_root(t, 3).is_err());
        assert!(d_const(t, 7).is_err());
    }

    #[test]
    fn vector_display_uses_radical_coefficients() {
        let t = AlgebraType::new(Family::AOdd, 3).unwrap();
        assert_eq!(beta(t).to_string(), "-sqrt2*c + e1");
        assert_eq!(
            alpha_root(t, 0).unwrap().to_string(),
            "c - 1/2*sqrt2*e1 - 1/2*sqrt2*e2"
        );
        assert_eq!(LatticeVector::zero(3).to_string(), "0");
    }
}
