//! Exact (R,p,q)-deformed calculus.
//!
//! A deformation is a function R(x,y) with R(1,1) = 0; its values at powers of
//! two positive rational parameters define the deformed numbers
//! `[n] = R(p^n, q^n)`, from which factorials, binomial coefficients,
//! Rogers-Szego polynomials `H_n(z) = sum_k [n choose k] z^k`, continuous
//! Hermite polynomials, and a deformed oscillator algebra
//! `{A, A-dagger, N}` are all built. Everything outside the float matrix
//! representation is computed in exact rational arithmetic, so every identity
//! check in this crate is an equality of canonical rationals, never a
//! tolerance comparison.
//!
//! Four deformation schemes are built in:
//! - [`Scheme::Js`] — `R(x,y) = (x-y)/(p-q)`, the two-parameter (p,q)-numbers
//! - [`Scheme::Cj`] — `R(x,y) = (1-xy)/((1/p-q)x)`, the (1/p,q)-numbers
//! - [`Scheme::Quesne`] — `R(x,y) = (xy-1)/((q-1/p)y)`
//! - [`Scheme::Hk`] — `R(x,y) = h(p,q) (y^nu/x^mu) (xy-1)/((q-1/p)y)`
//!
//! plus [`Scheme::Custom`] for user-supplied rational deformation functions.
//!
//! Module map:
//! - [`rational`], [`bivariate`] — exact scalars and bivariate Laurent
//!   polynomials / rational functions (the coefficient layer)
//! - [`scheme`] — deformation schemes, parameters, phi triples
//! - [`numbers`] — deformed numbers, factorials, binomials, shifted factorials
//! - [`identities`] — machine verification of the number/binomial identity
//!   families and of the three-term-recurrence premises
//! - [`qcalculus`] — the polynomial ring in z and the operators P, Q,
//!   the (p,q)-derivative and the (R,p,q)-derivative
//! - [`rogers_szego`] — Rogers-Szego polynomials by direct sum and by
//!   three-term recurrence, and the difference-equation check
//! - [`hermite`] — continuous Hermite polynomials as Laurent polynomials in
//!   `u = e^{i theta}`
//! - [`oscillator`] — ladder operators on the Rogers-Szego basis, algebra
//!   relation checks, and the truncated float matrix representation

#![no_std]

extern crate alloc;

pub mod bivariate;
pub mod error;
pub mod hermite;
pub mod identities;
pub mod numbers;
pub mod oscillator;
pub mod qcalculus;
pub mod rational;
pub mod rogers_szego;
pub mod scheme;

pub use bivariate::{term_triples, BivariateLaurentPoly, BivariateRationalFunction};
pub use error::{Error, Result};
pub use hermite::{hermite_cosine_form, hermite_from_rs, hermite_recurrence, HermiteFamily, UPoly};
pub use identities::{
    verify_binomial_identities, verify_number_identities, verify_theorem_premises,
    IdentityFailure, IdentityReport,
};
pub use numbers::{gaussian_binomial, shifted_factorial};
pub use oscillator::{
    check_general_algebra, check_scheme_algebra, matrix_rep, FloatMatrixRep, LadderAction,
    LadderOperator, MatrixResiduals,
};
pub use qcalculus::{
    apply_operator, number_operator, phi_operator, pq_derivative, rpq_derivative,
    rpq_derivative_factored_post, rpq_derivative_factored_pre, scale, OperatorSpec, ZPoly,
};
pub use rational::{parse_rational, rat, rat_int, rat_pow, Rational};
pub use rogers_szego::{rs_difference_check, rs_direct, rs_recurrence, RsFamily};
pub use scheme::{default_sample_points, Params, PhiTriple, Scheme};
