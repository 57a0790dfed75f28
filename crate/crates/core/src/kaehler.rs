//! One-forms modulo exact forms over the two-variable Laurent ring.
//!
//! For `R = C[s^{±1}, t^{±1}]`, the space of degree-one differentials
//! modulo exact forms has a canonical basis consisting of
//!
//! * `Sds(j, m)` — the class of `s^{j-1} t^m ds` with `m != 0`,
//! * `Tdt(j)` — the class of `s^j t^{-1} dt`,
//! * `C0` — the class of `s^{-1} ds`,
//!
//! every other monomial form being either exact or reducible to these by
//! `d(s^a t^b) = a s^{a-1} t^b ds + b s^a t^{b-1} dt ≡ 0`. The central
//! extension of the double-loop algebra pairs `[x s^p t^q, y s^k t^m]`
//! with the class of `s^p t^q d(s^k t^m)`, which [`reduce`] computes in
//! this basis. Exactness of `d(fg)` makes the assignment antisymmetric.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{join_terms, term_string, Scalar};

/// A canonical basis class of one-forms modulo exact forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum KBasis {
    /// The class of `s^{-1} ds` — the distinguished central direction.
    C0,
    /// The class of `s^{j-1} t^m ds`; only `m != 0` is a basis class.
    Sds { j: i64, m: i64 },
    /// The class of `s^j t^{-1} dt`.
    Tdt { j: i64 },
}

impl fmt::Display for KBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn power(f: &mut fmt::Formatter<'_>, symbol: char, exponent: i64) -> fmt::Result {
            match exponent {
                0 => Ok(()),
                1 => write!(f, "{symbol} "),
                e => write!(f, "{symbol}^{e} "),
            }
        }
        match self {
            KBasis::C0 => write!(f, "[s^-1 ds]"),
            KBasis::Sds { j, m } => {
                write!(f, "[")?;
                power(f, 's', j - 1)?;
                power(f, 't', *m)?;
                write!(f, "ds]")
            }
            KBasis::Tdt { j } => {
                write!(f, "[")?;
                power(f, 's', *j)?;
                write!(f, "t^-1 dt]")
            }
        }
    }
}

/// An exact linear combination of basis classes.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct KForm {
    terms: BTreeMap<KBasis, Scalar>,
}

impl KForm {
    pub fn zero() -> Self {
        KForm::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<KBasis, Scalar> {
        &self.terms
    }

    pub fn get(&self, basis: KBasis) -> Scalar {
        self.terms.get(&basis).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, basis: KBasis, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        if let KBasis::Sds { m: 0, .. } = basis {
            panic!("Sds with m = 0 is not a basis class");
        }
        match self.terms.get_mut(&basis) {
            Some(slot) => {
                *slot += &coeff;
                if slot.is_zero() {
                    self.terms.remove(&basis);
                }
            }
            None => {
                self.terms.insert(basis, coeff);
            }
        }
    }

    pub fn add(&self, other: &KForm) -> KForm {
        let mut out = self.clone();
        for (basis, coeff) in &other.terms {
            out.add_term(*basis, coeff.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> KForm {
        let mut out = KForm::zero();
        if s.is_zero() {
            return out;
        }
        for (basis, coeff) in &self.terms {
            out.terms.insert(*basis, coeff * s);
        }
        out
    }

    pub fn negate(&self) -> KForm {
        self.scale(&-&Scalar::one())
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(
            self.terms
                .iter()
                .map(|(basis, coeff)| term_string(coeff, &basis.to_string())),
        );
        f.write_str(&rendered)
    }
}

/// The class of the ds-monomial `coeff * s^x t^y ds`.
fn ds_class(coeff: Scalar, x: i64, y: i64) -> KForm {
    let mut out = KForm::zero();
    if coeff.is_zero() {
        return out;
    }
    if y != 0 {
        out.add_term(KBasis::Sds { j: x + 1, m: y }, coeff);
    } else if x == -1 {
        out.add_term(KBasis::C0, coeff);
    }
    // s^x ds with x != -1 is exact: d(s^{x+1}) / (x+1).
    out
}

/// The class of the dt-monomial `coeff * s^x t^y dt`.
fn dt_class(coeff: Scalar, x: i64, y: i64) -> KForm {
    if y == -1 {
        let mut out = KForm::zero();
        out.add_term(KBasis::Tdt { j: x }, coeff);
        return out;
    }
    // d(s^x t^{y+1}) = x s^{x-1} t^{y+1} ds + (y+1) s^x t^y dt, so the
    // monomial trades for a ds-form with coefficient -x/(y+1).
    let traded = &coeff * &Scalar::from_ratio(-x, y + 1);
    ds_class(traded, x - 1, y + 1)
}

/// The canonical class of `s^p t^q d(s^k t^m)` — the one-form attached to
/// the bracket of loop elements with torus degrees `(p, q)` and `(k, m)`.
pub fn reduce(p: i64, q: i64, k: i64, m: i64) -> KForm {
    // s^p t^q d(s^k t^m) = k s^{p+k-1} t^{q+m} ds + m s^{p+k} t^{q+m-1} dt.
    let ds_part = ds_class(Scalar::from_int(k), p + k - 1, q + m);
    let dt_part = dt_class(Scalar::from_int(m), p + k, q + m - 1);
    ds_part.add(&dt_part)
}

/// Whether the class of `s^p t^q d(s^k t^m)` lies in the index-`r`
/// component of the twisted form space: its total `t`-degree `q + m` must
/// be divisible by `r`.
pub fn in_k(p: i64, q: i64, k: i64, m: i64, r: i64) -> bool {
    let _ = (p, k);
    assert!(r > 0, "the twist order is positive");
    (q + m).rem_euclid(r) == 0
}
