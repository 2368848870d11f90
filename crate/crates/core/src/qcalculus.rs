//! The polynomial ring in z and the deformed operators acting on it.
//!
//! All operators are implemented through their diagonal monomial action:
//! the scaling operators P and Q send `z^k` to `p^k z^k` and `q^k z^k`, the
//! (p,q)-derivative sends `z^k` to `[k]_{p,q} z^{k-1}`, and the
//! (R,p,q)-derivative sends `z^k` to `[k]_{R,p,q} z^{k-1}` (constants to
//! zero, the limit value of the divided difference). The two factorized
//! operator forms of the (R,p,q)-derivative are provided as independent
//! routes for cross-checking.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::bivariate::BivariateRationalFunction;
use crate::error::{Error, Result};
use crate::numbers::js_number;
use crate::rational::{rat_pow, Rational};
use crate::scheme::{Params, Scheme};

/// A polynomial in z with exact rational coefficients, stored sparsely with
/// no zero coefficients. Equality is coefficient-map equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZPoly {
    coeffs: BTreeMap<usize, Rational>,
}

impl ZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::from_integer(1.into()))
    }

    /// `c * z^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    /// Dense constructor from ascending coefficients `[c_0, c_1, ...]`.
    pub fn from_coeffs<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        let mut poly = Self::zero();
        for (k, c) in iter.into_iter().enumerate() {
            poly.add_term(k, c);
        }
        poly
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(iter: I) -> Self {
        let mut poly = Self::zero();
        for (k, c) in iter {
            poly.add_term(k, c);
        }
        poly
    }

    fn add_term(&mut self, k: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterate `(degree, coefficient)` pairs in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale_coeffs(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiply by `z^shift`.
    pub fn shift_up(&self, shift: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k + shift, v.clone())).collect(),
        }
    }

    /// Apply a diagonal operator: `c_k -> f(k) * c_k`.
    pub fn map_diagonal<F: FnMut(usize) -> Result<Rational>>(&self, mut f: F) -> Result<Self> {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            out.add_term(k, f(k)? * c);
        }
        Ok(out)
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in rhs.terms() {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} z")?,
                _ => write!(f, "{c} z^{k}")?,
            }
        }
        Ok(())
    }
}

/// One of the deformed operators on z-polynomials.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorSpec {
    /// P: z -> pz.
    ScaleP,
    /// Q: z -> qz.
    ScaleQ,
    /// P^-1: z -> z/p.
    ScaleInvP,
    /// Q^-1: z -> z/q.
    ScaleInvQ,
    /// The (p,q)-divided difference.
    PqDerivative,
    /// The (R,p,q)-derivative of the ambient scheme.
    RpqDerivative,
    /// phi(P,Q) acting by monomial eigenvalues phi(p,q)^k.
    PhiOperator(BivariateRationalFunction),
    /// N = z d/dz: z^k -> k z^k.
    NumberOp,
}

/// Apply an operator; `scheme` is consulted only by
/// [`OperatorSpec::RpqDerivative`].
pub fn apply_operator(
    op: &OperatorSpec,
    poly: &ZPoly,
    scheme: &Scheme,
    par: &Params,
) -> Result<ZPoly> {
    match op {
        OperatorSpec::ScaleP => Ok(scale(poly, par.p())),
        OperatorSpec::ScaleQ => Ok(scale(poly, par.q())),
        OperatorSpec::ScaleInvP => Ok(scale(poly, &par.p_pow(-1))),
        OperatorSpec::ScaleInvQ => Ok(scale(poly, &par.q_pow(-1))),
        OperatorSpec::PqDerivative => Ok(pq_derivative(poly, par)),
        OperatorSpec::RpqDerivative => rpq_derivative(poly, scheme, par),
        OperatorSpec::PhiOperator(phi) => phi_operator(poly, phi, par),
        OperatorSpec::NumberOp => Ok(number_operator(poly)),
    }
}

/// The substitution `z -> factor * z`, i.e. `c_k -> c_k factor^k`.
pub fn scale(poly: &ZPoly, factor: &Rational) -> ZPoly {
    poly.map_diagonal(|k| Ok(rat_pow(factor, k as i64)))
        .expect("diagonal scaling cannot fail")
}

/// The (p,q)-derivative `z^k -> [k]_{p,q} z^(k-1)`, constants to zero.
///
/// Computed through the sum form of `[k]_{p,q}`, so it stays exact at
/// p = q where the divided-difference quotient is 0/0.
pub fn pq_derivative(poly: &ZPoly, par: &Params) -> ZPoly {
    lower_degree(poly, |k| Ok(js_number(par.p(), par.q(), k as i64)))
        .expect("(p,q)-derivative cannot fail")
}

/// The (R,p,q)-derivative `z^k -> [k]_{R,p,q} z^(k-1)`, constants to zero
/// (forced by R(1,1) = 0).
pub fn rpq_derivative(poly: &ZPoly, scheme: &Scheme, par: &Params) -> Result<ZPoly> {
    lower_degree(poly, |k| scheme.number(par, k as i64))
}

fn lower_degree<F: FnMut(usize) -> Result<Rational>>(poly: &ZPoly, mut eigen: F) -> Result<ZPoly> {
    let mut out = ZPoly::zero();
    for (k, c) in poly.terms() {
        if k == 0 {
            continue;
        }
        out.add_term(k - 1, eigen(k)? * c);
    }
    Ok(out)
}

/// `phi(P,Q)` acting by its monomial eigenvalues: `c_k -> c_k phi(p,q)^k`.
///
/// Requires `phi(p,q)` to be defined and nonzero.
pub fn phi_operator(
    poly: &ZPoly,
    phi: &BivariateRationalFunction,
    par: &Params,
) -> Result<ZPoly> {
    let value = phi.eval(par.p(), par.q())?;
    if value.is_zero() {
        return Err(Error::ZeroPhi);
    }
    poly.map_diagonal(|k| Ok(rat_pow(&value, k as i64)))
}

/// The number operator `N = z d/dz`: `z^k -> k z^k`.
pub fn number_operator(poly: &ZPoly) -> ZPoly {
    poly.map_diagonal(|k| Ok(Rational::from_integer((k as i64).into())))
        .expect("number operator cannot fail")
}

/// Factorized form with R acting first:
/// apply `R(P,Q)`, then `(p-q)/(P-Q)`, then the (p,q)-derivative.
///
/// The middle factor is singular on degrees with `p^k = q^k`, but `R(P,Q)`
/// kills the constant term first (R(1,1) = 0), so for p != q the composite
/// is total. An independent route to [`rpq_derivative`].
pub fn rpq_derivative_factored_post(
    poly: &ZPoly,
    scheme: &Scheme,
    par: &Params,
) -> Result<ZPoly> {
    let r = scheme.r_function(par)?;
    let after_r = poly.map_diagonal(|k| r.eval(&par.p_pow(k as i64), &par.q_pow(k as i64)))?;
    let p_minus_q = par.p() - par.q();
    let after_middle = after_r.map_diagonal(|k| {
        let den = par.p_pow(k as i64) - par.q_pow(k as i64);
        if den.is_zero() {
            return Err(Error::SingularParameters);
        }
        Ok(&p_minus_q / den)
    })?;
    Ok(pq_derivative(&after_middle, par))
}

/// Factorized form with R acting last:
/// apply the (p,q)-derivative, then `R(pP,qQ)`, then `(p-q)/(pP-qQ)`.
pub fn rpq_derivative_factored_pre(
    poly: &ZPoly,
    scheme: &Scheme,
    par: &Params,
) -> Result<ZPoly> {
    let r = scheme.r_function(par)?;
    let derived = pq_derivative(poly, par);
    let after_r = derived.map_diagonal(|k| {
        r.eval(&par.p_pow(k as i64 + 1), &par.q_pow(k as i64 + 1))
    })?;
    let p_minus_q = par.p() - par.q();
    after_r.map_diagonal(|k| {
        let den = par.p_pow(k as i64 + 1) - par.q_pow(k as i64 + 1);
        if den.is_zero() {
            return Err(Error::SingularParameters);
        }
        Ok(&p_minus_q / den)
    })
}
