//! The free-field images of the distinguished generators.
//!
//! For each algebra type this module fixes a quadratic field for every
//! diagonal current `alpha_i` and every ladder current `X(±alpha_i)`,
//! `0 <= i <= n`, together with the scalar the central element acts by.
//! The tables are what the verification machinery is checked against: the
//! commutators of these concrete fields must reproduce the defining
//! relations of the presented algebra.
//!
//! Two equivalent forms of the tail ladder currents circulate for the
//! tail-folded families (even `A` and the `D` series): the auxiliary
//! `(n+1)`-indexed oscillator in `X(±alpha_n)` can be taken plain or
//! barred. Both choices are implemented as [`Variant`]s and both are
//! expected to verify; the other two families ignore the variant.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::fields::{make_quadratic, FieldQuadratic};
use crate::lattice::{
    beta, betabar, eps, epsbar, AlgebraType, BasisIndex, CVector, Family, LatticeVector,
};
use crate::scalar::Scalar;

/// Names a distinguished generator of the presented algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GeneratorSymbol {
    /// The central element.
    Central,
    /// Diagonal current `alpha_i`, `0 <= i <= n`.
    Alpha(usize),
    /// Raising current `X(alpha_i)`.
    XPlus(usize),
    /// Lowering current `X(-alpha_i)`.
    XMinus(usize),
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSymbol::Central => f.write_str("central"),
            GeneratorSymbol::Alpha(i) => write!(f, "alpha{i}"),
            GeneratorSymbol::XPlus(i) => write!(f, "x+{i}"),
            GeneratorSymbol::XMinus(i) => write!(f, "x-{i}"),
        }
    }
}

/// Which form of the tail ladder currents to realize.
///
/// `Theorem` uses the plain auxiliary oscillator `e_{n+1}` in
/// `X(±alpha_n)`, `Proof` the barred one `e_{b(n+1)}`. The two differ only
/// in the tail-folded families (even `A` and the `D` series); elsewhere the
/// tables coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Theorem,
    Proof,
}

impl Variant {
    pub fn token(self) -> &'static str {
        match self {
            Variant::Theorem => "theorem",
            Variant::Proof => "proof",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// The image of one generator: a scalar for the central element, a
/// quadratic field for everything else.
#[derive(Clone, Copy, Debug)]
pub enum Image<'a> {
    Level(&'a Scalar),
    Field(&'a FieldQuadratic),
}

/// The scalar the central element acts by: `-1` for the `A` families,
/// `-2` for the `D` families.
pub fn level(t: AlgebraType) -> Scalar {
    match t.family() {
        Family::AOdd | Family::AEven => Scalar::from_int(-1),
        Family::DSeries | Family::D4 => Scalar::from_int(-2),
    }
}

/// The full generator table of one algebra type in one variant.
#[derive(Clone, Debug)]
pub struct Realization {
    t: AlgebraType,
    variant: Variant,
    level: Scalar,
    alphas: Vec<FieldQuadratic>,
    xplus: Vec<FieldQuadratic>,
    xminus: Vec<FieldQuadratic>,
}

/// Shorthand constructors used only by the fixed tables below, where every
/// index is within the rank window and every monomial is mixed.
fn pe(t: AlgebraType, i: u32) -> CVector {
    CVector::plus_of(eps(t, i).expect("table index within rank window"))
}
fn se(t: AlgebraType, i: u32) -> CVector {
    CVector::star_of(eps(t, i).expect("table index within rank window"))
}
fn pb(t: AlgebraType, i: u32) -> CVector {
    CVector::plus_of(epsbar(t, i).expect("table index within rank window"))
}
fn sb(t: AlgebraType, i: u32) -> CVector {
    CVector::star_of(epsbar(t, i).expect("table index within rank window"))
}
fn q(t: AlgebraType, terms: Vec<(Scalar, CVector, CVector)>) -> FieldQuadratic {
    make_quadratic(t.n(), &terms).expect("generator tables use valid mixed monomials")
}

/// `alpha_i` for `1 <= i <= n-1`, shared by every family except the
/// triality one: `:e_i e_i*: - :e_{i+1} e_{i+1}*: - :eb_i eb_i*: +
/// :eb_{i+1} eb_{i+1}*:`.
fn mid_alpha(t: AlgebraType, i: u32) -> FieldQuadratic {
    q(
        t,
        vec![
            (Scalar::one(), pe(t, i), se(t, i)),
            (-&Scalar::one(), pe(t, i + 1), se(t, i + 1)),
            (-&Scalar::one(), pb(t, i), sb(t, i)),
            (Scalar::one(), pb(t, i + 1), sb(t, i + 1)),
        ],
    )
}

/// `X(alpha_i)` for `1 <= i <= n-1`: `:e_i e_{i+1}*: + :eb_{i+1} eb_i*:`.
fn mid_x_plus(t: AlgebraType, i: u32) -> FieldQuadratic {
    q(
        t,
        vec![
            (Scalar::one(), pe(t, i), se(t, i + 1)),
            (Scalar::one(), pb(t, i + 1), sb(t, i)),
        ],
    )
}

/// `X(-alpha_i)` for `1 <= i <= n-1`: `:e_i* e_{i+1}: + :eb_{i+1}* eb_i:`.
fn mid_x_minus(t: AlgebraType, i: u32) -> FieldQuadratic {
    q(
        t,
        vec![
            (Scalar::one(), se(t, i), pe(t, i + 1)),
            (Scalar::one(), sb(t, i + 1), pb(t, i)),
        ],
    )
}

/// The auxiliary oscillator of the tail ladder currents: plain `e_{n+1}`
/// in the `Theorem` variant, barred in the `Proof` variant.
fn tail_aux(t: AlgebraType, variant: Variant) -> LatticeVector {
    let n = t.n();
    match variant {
        Variant::Theorem => eps(t, n + 1).expect("n+1 within rank window"),
        Variant::Proof => epsbar(t, n + 1).expect("n+1 within rank window"),
    }
}

/// `X(alpha_n)` in the tail-folded families:
/// `sqrt(2) (:e_n aux*: - :aux eb_n*:)`.
fn tail_x_plus(t: AlgebraType, variant: Variant) -> FieldQuadratic {
    let n = t.n();
    let aux = tail_aux(t, variant);
    let s2 = Scalar::sqrt2();
    q(
        t,
        vec![
            (s2.clone(), pe(t, n), CVector::star_of(aux.clone())),
            (-&s2, CVector::plus_of(aux), sb(t, n)),
        ],
    )
}

/// `X(-alpha_n)` in the tail-folded families:
/// `sqrt(2) (:e_n* aux: - :aux* eb_n:)`.
fn tail_x_minus(t: AlgebraType, variant: Variant) -> FieldQuadratic {
    let n = t.n();
    let aux = tail_aux(t, variant);
    let s2 = Scalar::sqrt2();
    q(
        t,
        vec![
            (s2.clone(), se(t, n), CVector::plus_of(aux.clone())),
            (-&s2, CVector::star_of(aux), pb(t, n)),
        ],
    )
}

impl Realization {
    /// Builds the generator table for `t` in the given variant.
    pub fn new(t: AlgebraType, variant: Variant) -> Realization {
        let n = t.n();
        let one = Scalar::one();
        let two = Scalar::from_int(2);

        let (alphas, xplus, xminus) = match t.family() {
            Family::AOdd => {
                let mut alphas = vec![q(
                    t,
                    vec![
                        (-&one, CVector::plus_of(beta(t)), CVector::star_of(beta(t))),
                        (-&one, pe(t, 2), se(t, 2)),
                        (one.clone(), pb(t, 1), sb(t, 1)),
                        (one.clone(), pb(t, 2), sb(t, 2)),
                    ],
                )];
                let mut xplus = vec![q(
                    t,
                    vec![
                        (one.clone(), pb(t, 2), CVector::star_of(beta(t))),
                        (one.clone(), pb(t, 1), se(t, 2)),
                    ],
                )];
                let mut xminus = vec![q(
                    t,
                    vec![
                        (one.clone(), sb(t, 2), CVector::plus_of(beta(t))),
                        (one.clone(), sb(t, 1), pe(t, 2)),
                    ],
                )];
                for i in 1..n {
                    alphas.push(mid_alpha(t, i));
                    xplus.push(mid_x_plus(t, i));
                    xminus.push(mid_x_minus(t, i));
                }
                alphas.push(q(
                    t,
                    vec![
                        (one.clone(), pe(t, n), se(t, n)),
                        (-&one, pb(t, n), sb(t, n)),
                    ],
                ));
                xplus.push(q(t, vec![(one.clone(), pe(t, n), sb(t, n))]));
                xminus.push(q(t, vec![(one.clone(), se(t, n), pb(t, n))]));
                (alphas, xplus, xminus)
            }
            Family::AEven => {
                let mut alphas = vec![q(
                    t,
                    vec![
                        (one.clone(), pb(t, 1), sb(t, 1)),
                        (-&one, CVector::plus_of(beta(t)), CVector::star_of(beta(t))),
                    ],
                )];
                let mut xplus =
                    vec![q(t, vec![(one.clone(), CVector::star_of(beta(t)), pb(t, 1))])];
                let mut xminus =
                    vec![q(t, vec![(one.clone(), CVector::plus_of(beta(t)), sb(t, 1))])];
                for i in 1..n {
                    alphas.push(mid_alpha(t, i));
                    xplus.push(mid_x_plus(t, i));
                    xminus.push(mid_x_minus(t, i));
                }
                alphas.push(q(
                    t,
                    vec![
                        (two.clone(), pe(t, n), se(t, n)),
                        (-&two, pb(t, n), sb(t, n)),
                    ],
                ));
                xplus.push(tail_x_plus(t, variant));
                xminus.push(tail_x_minus(t, variant));
                (alphas, xplus, xminus)
            }
            Family::DSeries => {
                let s2 = Scalar::sqrt2();
                let mut alphas = vec![q(
                    t,
                    vec![
                        (two.clone(), pb(t, 1), sb(t, 1)),
                        (-&two, CVector::plus_of(beta(t)), CVector::star_of(beta(t))),
                    ],
                )];
                let mut xplus = vec![q(
                    t,
                    vec![
                        (s2.clone(), CVector::star_of(beta(t)), pe(t, n + 2)),
                        (-&s2, se(t, n + 2), pb(t, 1)),
                    ],
                )];
                let mut xminus = vec![q(
                    t,
                    vec![
                        (s2.clone(), CVector::plus_of(beta(t)), se(t, n + 2)),
                        (-&s2, pe(t, n + 2), sb(t, 1)),
                    ],
                )];
                for i in 1..n {
                    alphas.push(mid_alpha(t, i));
                    xplus.push(mid_x_plus(t, i));
                    xminus.push(mid_x_minus(t, i));
                }
                alphas.push(q(
                    t,
                    vec![
                        (two.clone(), pe(t, n), se(t, n)),
                        (-&two, pb(t, n), sb(t, n)),
                    ],
                ));
                xplus.push(tail_x_plus(t, variant));
                xminus.push(tail_x_minus(t, variant));
                (alphas, xplus, xminus)
            }
            Family::D4 => {
                let w = Scalar::omega();
                let w2 = Scalar::omega2();
                let alphas = vec![
                    q(
                        t,
                        vec![
                            (two.clone(), pb(t, 1), sb(t, 1)),
                            (-&two, CVector::plus_of(beta(t)), CVector::star_of(beta(t))),
                            (one.clone(), pb(t, 2), sb(t, 2)),
                            (-&one, pe(t, 2), se(t, 2)),
                            (one.clone(), pb(t, 3), sb(t, 3)),
                            (-&one, pe(t, 3), se(t, 3)),
                        ],
                    ),
                    q(
                        t,
                        vec![
                            (one.clone(), pe(t, 1), se(t, 1)),
                            (-&one, pb(t, 1), sb(t, 1)),
                            (-&one, pe(t, 2), se(t, 2)),
                            (one.clone(), pb(t, 2), sb(t, 2)),
                            (two.clone(), pe(t, 3), se(t, 3)),
                            (-&two, pb(t, 3), sb(t, 3)),
                        ],
                    ),
                    q(
                        t,
                        vec![
                            (one.clone(), pe(t, 2), se(t, 2)),
                            (-&one, pb(t, 2), sb(t, 2)),
                            (-&one, pe(t, 3), se(t, 3)),
                            (one.clone(), pb(t, 3), sb(t, 3)),
                        ],
                    ),
                ];
                let xplus = vec![
                    q(
                        t,
                        vec![
                            (one.clone(), CVector::star_of(beta(t)), pe(t, 4)),
                            (-&one, sb(t, 4), CVector::plus_of(betabar(t))),
                            (w2.clone(), se(t, 2), pb(t, 3)),
                            (-&w2, se(t, 3), pb(t, 2)),
                            (w.clone(), se(t, 1), pb(t, 4)),
                            (-&w, se(t, 4), pb(t, 1)),
                        ],
                    ),
                    q(
                        t,
                        vec![
                            (one.clone(), pe(t, 1), se(t, 2)),
                            (-&one, pb(t, 2), sb(t, 1)),
                            (one.clone(), pe(t, 3), se(t, 4)),
                            (-&one, pb(t, 4), sb(t, 3)),
                            (one.clone(), pe(t, 3), sb(t, 4)),
                            (-&one, pe(t, 4), sb(t, 3)),
                        ],
                    ),
                    q(
                        t,
                        vec![
                            (one.clone(), pe(t, 2), se(t, 3)),
                            (-&one, pb(t, 3), sb(t, 2)),
                        ],
                    ),
                ];
                let xminus = vec![
                    q(
                        t,
                        vec![
                            (one.clone(), CVector::plus_of(beta(t)), se(t, 4)),
                            (-&one, pb(t, 4), CVector::star_of(betabar(t))),
                            (w.clone(), pe(t, 2), sb(t, 3)),
                            (-&w, pe(t, 3), sb(t, 2)),
                            (w2.clone(), pe(t, 1), sb(t, 4)),
                            (-&w2, pe(t, 4), sb(t, 1)),
                        ],
                    ),
                    q(
                        t,
                        vec![
                            (one.clone(), se(t, 1), pe(t, 2)),
                            (-&one, sb(t, 2), pb(t, 1)),
                            (one.clone(), se(t, 3), pe(t, 4)),
                            (-&one, sb(t, 4), pb(t, 3)),
                            (one.clone(), se(t, 3), pb(t, 4)),
                            (-&one, se(t, 4), pb(t, 3)),
                        ],
                    ),
                    q(
                        t,
                        vec![
                            (one.clone(), se(t, 2), pe(t, 3)),
                            (-&one, sb(t, 3), pb(t, 2)),
                        ],
                    ),
                ];
                (alphas, xplus, xminus)
            }
        };

        Realization {
            t,
            variant,
            level: level(t),
            alphas,
            xplus,
            xminus,
        }
    }

    pub fn algebra(&self) -> AlgebraType {
        self.t
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The scalar image of the central element.
    pub fn level(&self) -> &Scalar {
        &self.level
    }

    fn check_index(&self, i: usize) -> Result<(), Error> {
        if i > self.t.n() as usize {
            return Err(Error::IndexOutOfRange {
                what: "generator index",
                index: i as i64,
                n: self.t.n(),
            });
        }
        Ok(())
    }

    pub fn alpha(&self, i: usize) -> Result<&FieldQuadratic, Error> {
        self.check_index(i)?;
        Ok(&self.alphas[i])
    }

    pub fn x_plus(&self, i: usize) -> Result<&FieldQuadratic, Error> {
        self.check_index(i)?;
        Ok(&self.xplus[i])
    }

    pub fn x_minus(&self, i: usize) -> Result<&FieldQuadratic, Error> {
        self.check_index(i)?;
        Ok(&self.xminus[i])
    }

    /// The image of any generator symbol.
    pub fn image(&self, g: GeneratorSymbol) -> Result<Image<'_>, Error> {
        match g {
            GeneratorSymbol::Central => Ok(Image::Level(&self.level)),
            GeneratorSymbol::Alpha(i) => Ok(Image::Field(self.alpha(i)?)),
            GeneratorSymbol::XPlus(i) => Ok(Image::Field(self.x_plus(i)?)),
            GeneratorSymbol::XMinus(i) => Ok(Image::Field(self.x_minus(i)?)),
        }
    }

    /// The field of a ladder generator; diagonal and central symbols are
    /// rejected (iterated adjoint actions are formed from ladder currents
    /// only).
    pub fn x_field(&self, g: GeneratorSymbol) -> Result<&FieldQuadratic, Error> {
        match g {
            GeneratorSymbol::XPlus(i) => self.x_plus(i),
            GeneratorSymbol::XMinus(i) => self.x_minus(i),
            _ => Err(Error::NonXGenerator),
        }
    }

    /// Every generator symbol of this type, in display order.
    pub fn generators(&self) -> Vec<GeneratorSymbol> {
        let n = self.t.n() as usize;
        let mut out = vec![GeneratorSymbol::Central];
        out.extend((0..=n).map(GeneratorSymbol::Alpha));
        out.extend((0..=n).map(GeneratorSymbol::XPlus));
        out.extend((0..=n).map(GeneratorSymbol::XMinus));
        out
    }

    /// A primitive-integer basis of the kernel of
    /// `(lambda_0, ..., lambda_n) -> sum_i lambda_i alpha_i` on the
    /// diagonal current images. The realization collapses exactly the
    /// one imaginary-root direction, so this has a single element.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let n = self.t.n();
        let mut positions = Vec::new();
        for i in 1..=(n + 2) {
            positions.push(BasisIndex::Eps(i));
            positions.push(BasisIndex::EpsBar(i));
        }
        // Rows: one per diagonal position; columns: the n+1 diagonal currents.
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for p in positions {
            let row: Vec<BigRational> = self
                .alphas
                .iter()
                .map(|a| {
                    a.get(p, p)
                        .as_rational()
                        .expect("diagonal currents have rational entries")
                })
                .collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
        kernel_of(rows, self.alphas.len())
    }

    pub fn kernel_dimension(&self) -> usize {
        self.kernel_basis().len()
    }
}

/// Kernel of a small rational matrix, as primitive integer vectors with
/// positive leading entry.
fn kernel_of(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..cols {
                    let delta = &f * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -rows[r][free].clone();
        }
        basis.push(primitive_integer(&v));
    }
    basis
}

/// Scales a rational vector to coprime integers with positive leading entry.
fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let mut scale = BigInt::one();
    for x in v {
        scale = num_integer::lcm(scale, x.denom().clone());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&scale / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.abs());
    }
    if !g.is_zero() && !g.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
    }
    ints
}
