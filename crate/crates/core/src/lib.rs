//! Exact symbolic verifier for a bosonic free-field realization of twisted
//! 2-toroidal Lie algebras of types `A_{2n-1}`, `A_{2n}`, `D_{n+1}` and `D_4`
//! (the triality case).
//!
//! The library assigns to each Chevalley-style generator a normal-ordered
//! quadratic expression in lattice vertex operators, computes commutators of
//! those quadratics symbolically (Wick contraction of mixed normal-ordered
//! pairs), and checks the results against the defining current-algebra
//! relations — coefficients, delta-function calculus and central terms — with
//! no floating point anywhere: every coefficient lives in the degree-8
//! cyclotomic field generated by a primitive 24th root of unity.
//!
//! An independent cross-check evaluates the same commutators as operators on
//! a truncated oscillator (Fock) module, mode by mode, so that the symbolic
//! delta-calculus and the concrete operator algebra validate each other.
//!
//! Module map:
//!
//! * [`scalar`] — the coefficient field: exact arithmetic in the cyclotomic
//!   field containing `sqrt(2)`, `sqrt(3)` and a primitive cube root of unity.
//! * [`lattice`] — the ambient quadratic space, its distinguished vectors and
//!   the symplectic-style pairing driving all contractions.
//! * [`cartan`] — generalized Cartan matrices, symmetrizers and the constant
//!   tables appearing on the right-hand sides of the relations.
//! * [`fields`] — normal-ordered quadratic fields and formal distribution
//!   expressions (delta chains, canonical relabeling).
//! * [`wick`] — the two-term-plus-central commutator of quadratic fields and
//!   iterated adjoint actions.
//! * [`realization`] — the generator-to-field assignment being verified.
//! * [`relations`] — the relation catalog, per-case verification and reports.
//! * [`fock`] — the truncated oscillator module used as an independent oracle.
//! * [`kaehler`] — reduction of differentials in the Kähler quotient that
//!   bookkeeps the two-variable central directions.

pub mod cartan;
pub mod error;
pub mod fields;
pub mod fock;
pub mod kaehler;
pub mod lattice;
pub mod realization;
pub mod relations;
pub mod scalar;
pub mod wick;

pub use error::Error;
pub use lattice::{AlgebraType, BasisIndex, CVector, Family, LatticeVector};
pub use scalar::Scalar;
