//! Generalized Cartan matrices and the constant tables of the relation
//! catalog.
//!
//! The Cartan entries come straight out of the lattice data:
//!
//! ```text
//! a_ij = (alpha_i | alpha_j) / d_i,
//! ```
//!
//! and must be integers — a non-integer quotient would mean that the root
//! vectors and the symmetrizers `d_i` contradict each other, so it is
//! reported as an internal consistency error rather than silently rounded.
//!
//! [`ConstantTables`] packages the right-hand-side constants of the
//! commutation relations:
//!
//! * `k1` — the coefficient of the derivative-delta central term in the
//!   `[alpha_0, alpha_0]` relation,
//! * `k23(i, j)` — the analogous coefficient for a general alpha pair. The
//!   written catalog states constants only for ordered pairs `(i, j)` with
//!   `1 <= j`, `i <= j`; the remaining pairs are fixed by the antisymmetry of
//!   the bracket, which forces the extension to be symmetric.
//! * `c6(i)` — the derivative-delta coefficient of `[X(+a_i), X(-a_i)]`.

use crate::error::Error;
use crate::lattice::{alpha_root, d_const, gram, AlgebraType, Family};
use crate::scalar::Scalar;

/// One entry of the generalized Cartan matrix, as an exact integer.
pub fn cartan_entry(t: AlgebraType, i: usize, j: usize) -> Result<i64, Error> {
    let ai = alpha_root(t, i)?;
    let aj = alpha_root(t, j)?;
    let di = d_const(t, i)?;
    let quotient = &gram(&ai, &aj)? * &di.inv()?;
    let int = quotient
        .as_integer()
        .ok_or(Error::NonIntegerCartanEntry { i, j })?;
    i64::try_from(int).map_err(|_| Error::NonIntegerCartanEntry { i, j })
}

/// The full `(n+1) x (n+1)` generalized Cartan matrix, rows and columns
/// indexed `0..=n`.
pub fn cartan_matrix(t: AlgebraType) -> Result<Vec<Vec<i64>>, Error> {
    let n = t.n() as usize;
    (0..=n)
        .map(|i| (0..=n).map(|j| cartan_entry(t, i, j)).collect())
        .collect()
}

/// Right-hand-side constants of the relation catalog for one algebra type.
#[derive(Clone, Debug)]
pub struct ConstantTables {
    t: AlgebraType,
    gcm: Vec<Vec<i64>>,
}

impl ConstantTables {
    pub fn new(t: AlgebraType) -> Result<Self, Error> {
        Ok(ConstantTables {
            t,
            gcm: cartan_matrix(t)?,
        })
    }

    pub fn algebra(&self) -> AlgebraType {
        self.t
    }

    /// The generalized Cartan matrix.
    pub fn gcm(&self) -> &[Vec<i64>] {
        &self.gcm
    }

    /// Cartan entry as a plain integer (indices already validated at
    /// construction).
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.gcm[i][j]
    }

    /// Central coefficient of the `[alpha_0(z), alpha_0(w)]` relation:
    /// twice the twist order, except `2` for the `A_even` family.
    pub fn k1(&self) -> Scalar {
        let v = match self.t.family() {
            Family::AEven => 2,
            _ => 2 * self.t.r() as i64,
        };
        Scalar::from_int(v)
    }

    /// Whether `(i, j)` is one of the two distinguished tail pairs
    /// `(n-1, n)` and `(n, n)` that carry their own stated constant.
    pub fn is_tail_pair(&self, i: usize, j: usize) -> bool {
        let n = self.t.n() as usize;
        (i == n - 1 && j == n) || (i == n && j == n)
    }

    /// Whether the catalog states a constant for the ordered pair `(i, j)`
    /// directly (as opposed to fixing it through antisymmetry).
    pub fn is_stated_alpha_pair(&self, i: usize, j: usize) -> bool {
        j >= 1 && i <= j
    }

    /// Constant stated for an ordered alpha pair in the catalog's own
    /// domain; `None` outside it.
    fn k23_stated(&self, i: usize, j: usize) -> Option<Scalar> {
        if !self.is_stated_alpha_pair(i, j) {
            return None;
        }
        let a = self.a(i, j);
        let factor = if self.is_tail_pair(i, j) {
            match self.t.family() {
                Family::AOdd | Family::D4 => 1,
                Family::AEven => 4,
                Family::DSeries => 2,
            }
        } else {
            match self.t.family() {
                Family::AOdd | Family::AEven | Family::D4 => self.t.r() as i64,
                Family::DSeries => 1,
            }
        };
        Some(Scalar::from_int(factor * a))
    }

    /// Central coefficient of `[alpha_i(z), alpha_j(w)]` for `(i, j)` other
    /// than `(0, 0)`: the stated constant on the catalog's own domain,
    /// extended to the remaining ordered pairs by symmetry (which is what
    /// antisymmetry of the bracket forces).
    pub fn k23(&self, i: usize, j: usize) -> Result<Scalar, Error> {
        let n = self.t.n() as usize;
        if i > n || j > n || (i == 0 && j == 0) {
            return Err(Error::IndexOutOfRange {
                what: "alpha-pair constant",
                index: j as i64,
                n: self.t.n(),
            });
        }
        Ok(self
            .k23_stated(i, j)
            .or_else(|| self.k23_stated(j, i))
            .expect("every pair other than (0,0) has a stated orientation"))
    }

    /// Central coefficient of `[X(+a_i), X(-a_i)]`.
    pub fn c6(&self, i: usize) -> Result<Scalar, Error> {
        let n = self.t.n() as usize;
        if i > n {
            return Err(Error::IndexOutOfRange {
                what: "root index",
                index: i as i64,
                n: self.t.n(),
            });
        }
        let r = self.t.r() as i64;
        let v = match self.t.family() {
            Family::AOdd | Family::D4 => {
                if i == n {
                    1
                } else {
                    r
                }
            }
            Family::AEven => {
                if i == n {
                    r * r
                } else if i == 0 {
                    r - (r - 1)
                } else {
                    r
                }
            }
            Family::DSeries => {
                if i == 0 || i == n {
                    r
                } else {
                    1
                }
            }
        };
        Ok(Scalar::from_int(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::smallest_types;

    fn tables(family: Family, n: u32) -> ConstantTables {
        ConstantTables::new(AlgebraType::new(family, n).unwrap()).unwrap()
    }

    #[test]
    fn cartan_matrices_at_smallest_ranks_match_hand_computation() {
        assert_eq!(
            cartan_matrix(AlgebraType::new(Family::AOdd, 3).unwrap()).unwrap(),
            vec![
                vec![2, 0, -1, 0],
                vec![0, 2, -1, 0],
                vec![-1, -1, 2, -2],
                vec![0, 0, -1, 2],
            ]
        );
        assert_eq!(
            cartan_matrix(AlgebraType::new(Family::AEven, 2).unwrap()).unwrap(),
            vec![vec![2, -1, 0], vec![-2, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(
            cartan_matrix(AlgebraType::new(Family::DSeries, 2).unwrap()).unwrap(),
            vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(
            cartan_matrix(AlgebraType::new(Family::D4, 2).unwrap()).unwrap(),
            vec![vec![2, -1, 0], vec![-1, 2, -3], vec![0, -1, 2]]
        );
    }

    #[test]
    fn gcm_is_symmetrizable_with_the_d_constants() {
        for t in sweep() {
            let gcm = cartan_matrix(t).unwrap();
            for i in 0..=t.n() as usize {
                for j in 0..=t.n() as usize {
                    let di = d_const(t, i).unwrap();
                    let dj = d_const(t, j).unwrap();
                    let lhs = di.scale_int(gcm[i][j]);
                    let rhs = dj.scale_int(gcm[j][i]);
                    assert_eq!(lhs, rhs, "d_i a_ij != d_j a_ji at ({i},{j}) for {t}");
                    // And both equal the root pairing itself.
                    let ip = gram(&alpha_root(t, i).unwrap(), &alpha_root(t, j).unwrap()).unwrap();
                    assert_eq!(lhs, ip, "d_i a_ij != (a_i|a_j) at ({i},{j}) for {t}");
                }
            }
        }
    }

    #[test]
    fn gcm_shape_diagonal_two_and_bounded_off_diagonal() {
        for t in sweep() {
            let gcm = cartan_matrix(t).unwrap();
            for i in 0..=t.n() as usize {
                assert_eq!(gcm[i][i], 2);
                for j in 0..=t.n() as usize {
                    if i != j {
                        let a = gcm[i][j];
                        assert!(
                            (-3..=0).contains(&a),
                            "off-diagonal entry {a} out of range at ({i},{j}) for {t}"
                        );
                        if a == -3 {
                            assert_eq!(
                                t.family(),
                                Family::D4,
                                "entry -3 may only occur in the triality case"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triality_case_has_an_entry_minus_three() {
        let gcm = cartan_matrix(AlgebraType::new(Family::D4, 2).unwrap()).unwrap();
        assert_eq!(gcm[1][2], -3);
    }

    #[test]
    fn k1_values() {
        assert_eq!(tables(Family::AOdd, 3).k1(), Scalar::from_int(4));
        assert_eq!(tables(Family::AEven, 2).k1(), Scalar::from_int(2));
        assert_eq!(tables(Family::DSeries, 2).k1(), Scalar::from_int(4));
        assert_eq!(tables(Family::D4, 2).k1(), Scalar::from_int(6));
    }

    #[test]
    fn c6_values_at_smallest_ranks() {
        let expect: [(Family, &[i64]); 4] = [
            (Family::AOdd, &[2, 2, 2, 1]),
            (Family::AEven, &[1, 2, 4]),
            (Family::DSeries, &[2, 1, 2]),
            (Family::D4, &[3, 3, 1]),
        ];
        for (family, values) in expect {
            let t = tables(family, if family == Family::AOdd { 3 } else { 2 });
            for (i, v) in values.iter().enumerate() {
                assert_eq!(t.c6(i).unwrap(), Scalar::from_int(*v), "c6({i}) for {family}");
            }
        }
    }

    #[test]
    fn k23_is_symmetric_and_matches_spot_values() {
        for t in sweep() {
            let tab = ConstantTables::new(t).unwrap();
            for i in 0..=t.n() as usize {
                for j in 0..=t.n() as usize {
                    if i == 0 && j == 0 {
                        continue;
                    }
                    assert_eq!(
                        tab.k23(i, j).unwrap(),
                        tab.k23(j, i).unwrap(),
                        "k23 not symmetric at ({i},{j}) for {t}"
                    );
                }
            }
        }
        // The symmetric extension is forced even where the raw formula would
        // disagree: for the A_even family, r*a_10 = -4 but the stated (0,1)
        // constant is r*a_01 = -2, and antisymmetry requires the latter.
        let tab = tables(Family::AEven, 2);
        assert_eq!(tab.k23(0, 1).unwrap(), Scalar::from_int(-2));
        assert_eq!(tab.k23(1, 0).unwrap(), Scalar::from_int(-2));
        // Tail pairs take the family's own tail factor.
        assert_eq!(tables(Family::AOdd, 3).k23(2, 3).unwrap(), Scalar::from_int(-2));
        assert_eq!(tables(Family::AEven, 2).k23(2, 2).unwrap(), Scalar::from_int(8));
        assert_eq!(tables(Family::DSeries, 2).k23(1, 2).unwrap(), Scalar::from_int(-2));
        assert_eq!(tables(Family::D4, 2).k23(1, 2).unwrap(), Scalar::from_int(-3));
        assert_eq!(tables(Family::D4, 2).k23(2, 2).unwrap(), Scalar::from_int(2));
        assert_eq!(tables(Family::D4, 2).k23(0, 1).unwrap(), Scalar::from_int(-3));
    }

    #[test]
    fn k23_rejects_the_origin_pair_and_bad_indices() {
        let tab = tables(Family::AOdd, 3);
        assert!(tab.k23(0, 0).is_err());
        assert!(tab.k23(0, 4).is_err());
        assert!(tab.c6(4).is_err());
    }

    fn sweep() -> Vec<AlgebraType> {
        let mut v = smallest_types();
        v.push(AlgebraType::new(Family::AOdd, 5).unwrap());
        v.push(AlgebraType::new(Family::AEven, 4).unwrap());
        v.push(AlgebraType::new(Family::DSeries, 4).unwrap());
        v
    }
}
