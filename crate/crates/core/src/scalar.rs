//! Exact arithmetic in the coefficient field of the realization.
//!
//! Every structure constant the verifier touches lies in the cyclotomic field
//! generated over the rationals by a primitive 24th root of unity `z`: the
//! square roots of 2, 3 and 6 and the primitive cube root of unity `w` all
//! live there, and nothing else is ever needed. The field has degree 8, with
//! power basis `1, z, ..., z^7` and reduction rule
//!
//! ```text
//! z^8 = z^4 - 1        (the 24th cyclotomic polynomial is x^8 - x^4 + 1)
//! ```
//!
//! A [`Scalar`] stores the eight rational coordinates in that basis; the
//! representation is canonical, so equality is coordinate-wise equality and
//! `is_zero` is exact. All arithmetic is big-rational and never overflows or
//! rounds.
//!
//! Distinguished elements, written in the power basis:
//!
//! ```text
//! sqrt2 = z + z^3 - z^5          sqrt3 = 2 z^2 - z^6
//! sqrt6 = z + z^3 + z^5 - 2 z^7  w     = z^4 - 1   (so w^2 = -z^4 = -1 - w)
//! ```
//!
//! Two renderings are provided: the raw power-basis polynomial in `z`, and a
//! "radical" form over the basis `1, sqrt2, sqrt3, sqrt6, w, sqrt2*w,
//! sqrt3*w, sqrt6*w`, which is also a rational basis of the field and is how
//! the coefficients are usually written by hand.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Degree of the field over the rationals.
const DIM: usize = 8;

/// An element of the degree-8 cyclotomic coefficient field, stored as exact
/// rational coordinates in the power basis `1, z, ..., z^7`.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    c: [BigRational; DIM],
}

fn zero_coords() -> [BigRational; DIM] {
    std::array::from_fn(|_| BigRational::zero())
}

impl Scalar {
    /// The additive identity.
    pub fn zero() -> Self {
        Scalar { c: zero_coords() }
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// Embeds a rational integer.
    pub fn from_int(k: i64) -> Self {
        let mut c = zero_coords();
        c[0] = BigRational::from_integer(BigInt::from(k));
        Scalar { c }
    }

    /// Embeds the rational `num / den`.
    ///
    /// # Panics
    ///
    /// Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        let mut c = zero_coords();
        c[0] = BigRational::new(BigInt::from(num), BigInt::from(den));
        Scalar { c }
    }

    /// Embeds an arbitrary big rational.
    pub fn from_rational(q: BigRational) -> Self {
        let mut c = zero_coords();
        c[0] = q;
        Scalar { c }
    }

    /// The generator `z` itself (a primitive 24th root of unity).
    pub fn zeta() -> Self {
        let mut c = zero_coords();
        c[1] = BigRational::one();
        Scalar { c }
    }

    /// `sqrt(2)`, i.e. `z + z^3 - z^5`.
    pub fn sqrt2() -> Self {
        let mut c = zero_coords();
        c[1] = BigRational::one();
        c[3] = BigRational::one();
        c[5] = -BigRational::one();
        Scalar { c }
    }

    /// `sqrt(3)`, i.e. `2 z^2 - z^6`.
    pub fn sqrt3() -> Self {
        let mut c = zero_coords();
        c[2] = BigRational::from_integer(BigInt::from(2));
        c[6] = -BigRational::one();
        Scalar { c }
    }

    /// `sqrt(6) = sqrt(2) * sqrt(3)`, i.e. `z + z^3 + z^5 - 2 z^7`.
    pub fn sqrt6() -> Self {
        let mut c = zero_coords();
        c[1] = BigRational::one();
        c[3] = BigRational::one();
        c[5] = BigRational::one();
        c[7] = BigRational::from_integer(BigInt::from(-2));
        Scalar { c }
    }

    /// The primitive cube root of unity `w = z^4 - 1`.
    pub fn omega() -> Self {
        let mut c = zero_coords();
        c[0] = -BigRational::one();
        c[4] = BigRational::one();
        Scalar { c }
    }

    /// `w^2 = -z^4`, the other primitive cube root of unity.
    pub fn omega2() -> Self {
        let mut c = zero_coords();
        c[4] = -BigRational::one();
        Scalar { c }
    }

    /// Exact zero test (the representation is canonical).
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|q| q.is_zero())
    }

    /// Exact test against the multiplicative identity.
    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|q| q.is_zero())
    }

    /// The eight power-basis coordinates (coefficients of `1, z, ..., z^7`).
    pub fn coords(&self) -> &[BigRational; DIM] {
        &self.c
    }

    /// Returns the underlying rational if the element is rational, else
    /// `None`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|q| q.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Returns the underlying integer if the element is a rational integer,
    /// else `None`.
    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    fn is_rational_only(&self) -> bool {
        self.c[1..].iter().all(|q| q.is_zero())
    }

    /// Multiplies by a plain rational (fast path, no convolution).
    pub fn scale_rational(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Scalar::zero();
        }
        let mut c = zero_coords();
        for (out, x) in c.iter_mut().zip(self.c.iter()) {
            if !x.is_zero() {
                *out = x * q;
            }
        }
        Scalar { c }
    }

    /// Multiplies by a rational integer (fast path).
    pub fn scale_int(&self, k: i64) -> Self {
        self.scale_rational(&BigRational::from_integer(BigInt::from(k)))
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugation, the field automorphism fixing `sqrt2` and
    /// `sqrt3` and exchanging `w` with `w^2` (it sends `z` to `z^23`).
    pub fn conj(&self) -> Self {
        let c = &self.c;
        let mut o = zero_coords();
        o[0] = &c[0] + &c[4];
        o[1] = c[3].clone();
        o[2] = c[2].clone();
        o[3] = c[1].clone();
        o[4] = -c[4].clone();
        o[5] = -(&c[3] + &c[7]);
        o[6] = -(&c[2] + &c[6]);
        o[7] = -(&c[1] + &c[5]);
        Scalar { c: o }
    }

    /// Exact multiplicative inverse.
    ///
    /// # Errors
    ///
    /// Returns [`Error::DivisionByZero`] when `self` is zero.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Column j of the multiplication matrix holds the coordinates of
        // self * z^j; inverting means solving M x = e_0.
        let mut cols: Vec<[BigRational; DIM]> = Vec::with_capacity(DIM);
        cols.push(self.c.clone());
        for j in 1..DIM {
            cols.push(shift_by_zeta(&cols[j - 1]));
        }
        let mut rhs = zero_coords();
        rhs[0] = BigRational::one();
        let sol = solve8(&cols, rhs).ok_or(Error::DivisionByZero)?;
        Ok(Scalar { c: sol })
    }

    /// Coordinates in the radical basis `1, sqrt2, sqrt3, sqrt6, w,
    /// sqrt2*w, sqrt3*w, sqrt6*w` (also a rational basis of the field).
    pub fn radical_coordinates(&self) -> [BigRational; DIM] {
        let cols: Vec<[BigRational; DIM]> = RADICAL_BASIS_POWER_COORDS
            .iter()
            .map(|col| std::array::from_fn(|i| BigRational::from_integer(BigInt::from(col[i]))))
            .collect();
        solve8(&cols, self.c.clone())
            .expect("the radical basis spans the field, so the change of basis is invertible")
    }

    /// Rendering over the radical basis, e.g. `"sqrt2"`, `"-2*w"`,
    /// `"1/2 + 1/2*sqrt3*w"`. This is the form coefficients usually take in
    /// the realization tables.
    pub fn pretty(&self) -> String {
        let coords = self.radical_coordinates();
        let tokens = ["", "sqrt2", "sqrt3", "sqrt6", "w", "sqrt2*w", "sqrt3*w", "sqrt6*w"];
        render_linear_combination(coords.iter().zip(tokens.iter().copied()))
    }

    /// Numerical embedding with `z = exp(i pi / 12)`, returned as
    /// `(re, im)`. Only for diagnostics and cross-checks; the verifier never
    /// branches on floating point.
    pub fn eval(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let x = q.to_f64().expect("rational coordinate converts to f64");
            let theta = std::f64::consts::PI * (k as f64) / 12.0;
            re += x * theta.cos();
            im += x * theta.sin();
        }
        (re, im)
    }
}

/// Radical basis vectors written in the power basis (integer coordinates).
/// Order: `1, sqrt2, sqrt3, sqrt6, w, sqrt2*w, sqrt3*w, sqrt6*w`.
const RADICAL_BASIS_POWER_COORDS: [[i64; DIM]; DIM] = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, -1, 0, 0],
    [0, 0, 2, 0, 0, 0, -1, 0],
    [0, 1, 0, 1, 0, 1, 0, -2],
    [-1, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, -1, 0, 1, 0, 1],
    [0, 0, -1, 0, 0, 0, 2, 0],
    [0, -2, 0, 1, 0, 1, 0, 1],
];

/// Multiplies a coordinate vector by `z`, applying `z^8 = z^4 - 1`.
fn shift_by_zeta(c: &[BigRational; DIM]) -> [BigRational; DIM] {
    let mut out = zero_coords();
    for k in 1..DIM {
        out[k] = c[k - 1].clone();
    }
    // The former z^7 coefficient lands on z^8 = z^4 - 1.
    if !c[DIM - 1].is_zero() {
        out[0] -= &c[DIM - 1];
        out[4] += &c[DIM - 1];
    }
    out
}

/// Solves the 8x8 system whose columns are `cols` against `rhs` by exact
/// Gaussian elimination. Returns `None` when the matrix is singular.
fn solve8(cols: &[[BigRational; DIM]], rhs: [BigRational; DIM]) -> Option<[BigRational; DIM]> {
    // Assemble the augmented row-major matrix.
    let mut a: Vec<Vec<BigRational>> = (0..DIM)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|col| col[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for col in 0..DIM {
        let pivot = (col..DIM).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col][col..].iter_mut() {
            *x /= &p;
        }
        for r in 0..DIM {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c2 in col..=DIM {
                    let delta = &a[col][c2] * &f;
                    a[r][c2] -= delta;
                }
            }
        }
    }
    Some(std::array::from_fn(|i| a[i][DIM].clone()))
}

/// Renders a linear combination of labeled basis elements, joining the terms
/// with signs and dropping unit coefficients in front of nontrivial labels.
fn render_linear_combination<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (&'a BigRational, &'a str)>,
{
    let mut out = String::new();
    for (q, token) in terms {
        if q.is_zero() {
            continue;
        }
        let mag = q.abs();
        let body = if token.is_empty() {
            format!("{mag}")
        } else if mag.is_one() {
            token.to_string()
        } else {
            format!("{mag}*{token}")
        };
        if out.is_empty() {
            if q.is_negative() {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if q.is_negative() { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders `coeff * token` with the coefficient in radical form, wrapping
/// multi-term coefficients in parentheses and dropping unit coefficients.
/// Used by the vector and field displays across the crate.
pub(crate) fn term_string(coeff: &Scalar, token: &str) -> String {
    let p = coeff.pretty();
    if token.is_empty() {
        return p;
    }
    match p.as_str() {
        "1" => token.to_string(),
        "-1" => format!("-{token}"),
        _ if p.contains(' ') => format!("({p})*{token}"),
        _ => format!("{p}*{token}"),
    }
}

/// Joins pre-rendered terms into a signed sum, or `"0"` when empty.
pub(crate) fn join_terms<I: IntoIterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for body in terms {
        if out.is_empty() {
            out.push_str(&body);
        } else if let Some(rest) = body.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Scalar {
    /// Power-basis polynomial rendering, e.g. `"1/2*z + 1/2*z^3 - 1/2*z^5"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = ["", "z", "z^2", "z^3", "z^4", "z^5", "z^6", "z^7"];
        let rendered = render_linear_combination(self.c.iter().zip(labels.iter().copied()));
        f.write_str(&rendered)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let c = std::array::from_fn(|i| &self.c[i] + &rhs.c[i]);
        Scalar { c }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let c = std::array::from_fn(|i| &self.c[i] - &rhs.c[i]);
        Scalar { c }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let c = std::array::from_fn(|i| -self.c[i].clone());
        Scalar { c }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        // Rational factors need no convolution.
        if self.is_rational_only() {
            return rhs.scale_rational(&self.c[0]);
        }
        if rhs.is_rational_only() {
            return self.scale_rational(&rhs.c[0]);
        }
        // Degree-14 convolution, skipping zero coordinates.
        let mut acc: Vec<BigRational> = vec![BigRational::zero(); 2 * DIM - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] += a * b;
            }
        }
        // Fold the overflow degrees down with z^d = z^{d-4} - z^{d-8}.
        for d in (DIM..2 * DIM - 1).rev() {
            if acc[d].is_zero() {
                continue;
            }
            let top = std::mem::replace(&mut acc[d], BigRational::zero());
            acc[d - 4] += &top;
            acc[d - 8] -= &top;
        }
        let c = std::array::from_fn(|i| acc[i].clone());
        Scalar { c }
    }
}

// Owned-value conveniences delegating to the reference implementations.
impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}
impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}
impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}
impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if b.is_zero() {
                continue;
            }
            if a.is_zero() {
                *a = b.clone();
            } else {
                *a += b;
            }
        }
    }
}
impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if b.is_zero() {
                continue;
            }
            if a.is_zero() {
                *a = -b.clone();
            } else {
                *a -= b;
            }
        }
    }
}
