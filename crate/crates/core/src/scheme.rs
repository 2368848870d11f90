//! Deformation schemes and their parameters.
//!
//! A scheme is a concrete choice of deformation function R(x,y) together
//! with the phi triple that drives its three-term recurrence. The four
//! built-in schemes carry their phi triples; custom schemes must supply one
//! to unlock the recurrence-based operations.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::bivariate::{BivariateLaurentPoly, BivariateRationalFunction};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, rat, rat_int, rat_pow, Rational};

/// The deformation parameters `p` and `q`, both strictly positive.
///
/// The classical domain `0 < q < p` is reported by
/// [`Params::in_paper_domain`] but not enforced: every identity verified by
/// this crate is a rational-function identity that holds wherever the
/// denominators are nonzero, so probing outside the domain is deliberate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    p: Rational,
    q: Rational,
}

impl Params {
    pub fn new(p: Rational, q: Rational) -> Result<Self> {
        if !p.is_positive() || !q.is_positive() {
            return Err(Error::InvalidParameters("p and q must be positive"));
        }
        Ok(Self { p, q })
    }

    /// Parse `p` and `q` from `"a/b"` literals.
    pub fn from_strs(p: &str, q: &str) -> Result<Self> {
        Self::new(parse_rational(p)?, parse_rational(q)?)
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// `p^n` for signed `n`.
    pub fn p_pow(&self, n: i64) -> Rational {
        rat_pow(&self.p, n)
    }

    /// `q^n` for signed `n`.
    pub fn q_pow(&self, n: i64) -> Rational {
        rat_pow(&self.q, n)
    }

    /// True iff `0 < q < p`.
    pub fn in_paper_domain(&self) -> bool {
        self.q < self.p
    }
}

/// The default verification grid: five (p, q) pairs probing q < p, q > p,
/// and near-degenerate combinations (pq = 1 is singular for the CJ, Quesne
/// and HK families and is reported as a skip by the drivers).
pub fn default_sample_points() -> Vec<Params> {
    let pairs = [
        (rat_int(2), rat(1, 2)),
        (rat_int(3), rat_int(2)),
        (rat_int(2), rat(1, 3)),
        (rat(5, 2), rat(3, 2)),
        (rat_int(7), rat(1, 5)),
    ];
    pairs
        .into_iter()
        .map(|(p, q)| Params::new(p, q).expect("grid points are positive"))
        .collect()
}

/// The functions phi_1, phi_2, phi_3 of the three-term recurrence premises.
///
/// They are only ever used through pointwise evaluation at (p, q); phi_1 and
/// phi_2 additionally act on monomials through their eigenvalues
/// `phi_i(p,q)^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiTriple {
    pub phi1: BivariateRationalFunction,
    pub phi2: BivariateRationalFunction,
    pub phi3: BivariateRationalFunction,
}

impl PhiTriple {
    /// Evaluate all three functions at (p, q).
    pub fn eval(&self, par: &Params) -> Result<[Rational; 3]> {
        Ok([
            self.phi1.eval(par.p(), par.q())?,
            self.phi2.eval(par.p(), par.q())?,
            self.phi3.eval(par.p(), par.q())?,
        ])
    }
}

/// A deformation scheme: the choice of R(x,y) and, for the built-ins, the
/// associated phi triple.
#[derive(Clone, Debug, PartialEq)]
pub enum Scheme {
    /// Jagannathan-Srinivasa: `R(x,y) = (x-y)/(p-q)`, phi = (x, x, x-y).
    Js,
    /// Chakrabarty-Jagannathan: `R(x,y) = (1-xy)/((1/p-q)x)`; everything is
    /// the JS family with p replaced by 1/p, phi = (1/x, 1/x, 1/x - y).
    Cj,
    /// Quesne: `R(x,y) = (xy-1)/((q-1/p)y)`, phi = (x, x, y - 1/x).
    Quesne,
    /// Hounkonnou-Kyemba generalization: `R(x,y) = h(p,q) y^nu/x^mu *
    /// (xy-1)/((q-1/p)y)` with integer exponents mu, nu and a rational
    /// auxiliary factor h normalized by h(1,1) = 1.
    ///
    /// phi = (x^(1-mu) y^nu, x^(1-mu) y^nu, (y - 1/x)/h). The first two
    /// components are equal: that assignment is the one under which the
    /// three-term binomial rule of this family actually closes.
    Hk {
        mu: i32,
        nu: i32,
        h: BivariateRationalFunction,
    },
    /// A user-supplied finite rational deformation function with
    /// R(1,1) = 0, plus an optional phi triple for the recurrence-based
    /// operations.
    Custom {
        r: BivariateRationalFunction,
        phi: Option<PhiTriple>,
    },
}

impl Scheme {
    /// HK scheme with validation of `h(1,1) = 1`.
    pub fn hk(mu: i32, nu: i32, h: BivariateRationalFunction) -> Result<Self> {
        match h.eval(&Rational::one(), &Rational::one()) {
            Ok(v) if v.is_one() => Ok(Self::Hk { mu, nu, h }),
            Ok(_) => Err(Error::InvalidScheme("h(1,1) must equal 1")),
            Err(_) => Err(Error::InvalidScheme("h must be defined at (1,1)")),
        }
    }

    /// HK scheme with the constant factor h = 1.
    pub fn hk_unit(mu: i32, nu: i32) -> Self {
        Self::Hk {
            mu,
            nu,
            h: BivariateRationalFunction::one(),
        }
    }

    /// Custom scheme with validation of `R(1,1) = 0`.
    pub fn custom(r: BivariateRationalFunction, phi: Option<PhiTriple>) -> Result<Self> {
        match r.eval(&Rational::one(), &Rational::one()) {
            Ok(v) if v.is_zero() => Ok(Self::Custom { r, phi }),
            Ok(_) => Err(Error::InvalidScheme("R(1,1) must equal 0")),
            Err(_) => Err(Error::InvalidScheme("R must be defined at (1,1)")),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Self::Js => "js",
            Self::Cj => "cj",
            Self::Quesne => "quesne",
            Self::Hk { .. } => "hk",
            Self::Custom { .. } => "custom",
        }
    }

    pub fn is_builtin(&self) -> bool {
        !matches!(self, Self::Custom { .. })
    }

    /// The deformation function R(x,y) as a rational function, materialized
    /// for the given parameters (the JS/CJ/Quesne/HK denominators carry
    /// parameter-level scalars).
    ///
    /// Fails with [`Error::SingularParameters`] when the scalar factor
    /// vanishes: p = q for JS, pq = 1 for CJ, Quesne and HK.
    pub fn r_function(&self, par: &Params) -> Result<BivariateRationalFunction> {
        let x = BivariateLaurentPoly::var_x;
        let y = BivariateLaurentPoly::var_y;
        let one = BivariateLaurentPoly::one;
        match self {
            Self::Js => {
                let scalar = par.p() - par.q();
                if scalar.is_zero() {
                    return Err(Error::SingularParameters);
                }
                BivariateRationalFunction::new(
                    &x() - &y(),
                    BivariateLaurentPoly::constant(scalar),
                )
            }
            Self::Cj => {
                let scalar = par.p_pow(-1) - par.q();
                if scalar.is_zero() {
                    return Err(Error::SingularParameters);
                }
                BivariateRationalFunction::new(&one() - &(&x() * &y()), x().scale(&scalar))
            }
            Self::Quesne => {
                let scalar = par.q() - par.p_pow(-1);
                if scalar.is_zero() {
                    return Err(Error::SingularParameters);
                }
                BivariateRationalFunction::new(&(&x() * &y()) - &one(), y().scale(&scalar))
            }
            Self::Hk { mu, nu, h } => {
                let scalar = par.q() - par.p_pow(-1);
                if scalar.is_zero() {
                    return Err(Error::SingularParameters);
                }
                // h enters R as the frozen scalar h(p,q), exactly like the
                // 1/(q - 1/p) factor; it is not composed over (x, y).
                let h_value = h.eval(par.p(), par.q())?;
                let quesne = BivariateRationalFunction::new(
                    &(&x() * &y()) - &one(),
                    y().scale(&scalar),
                )?;
                let monomial = BivariateRationalFunction::from_poly(
                    BivariateLaurentPoly::monomial(-mu, *nu, h_value),
                );
                Ok(monomial.mul(&quesne))
            }
            Self::Custom { r, .. } => Ok(r.clone()),
        }
    }

    /// The scheme's phi triple, or [`Error::MissingPhiTriple`] for a custom
    /// scheme constructed without one.
    pub fn phi_triple(&self) -> Result<PhiTriple> {
        let x = BivariateLaurentPoly::var_x;
        let y = BivariateLaurentPoly::var_y;
        let xinv = || BivariateLaurentPoly::monomial(-1, 0, rat_int(1));
        let poly = BivariateRationalFunction::from_poly;
        match self {
            Self::Js => Ok(PhiTriple {
                phi1: poly(x()),
                phi2: poly(x()),
                phi3: poly(&x() - &y()),
            }),
            Self::Cj => Ok(PhiTriple {
                phi1: poly(xinv()),
                phi2: poly(xinv()),
                phi3: poly(&xinv() - &y()),
            }),
            Self::Quesne => Ok(PhiTriple {
                phi1: poly(x()),
                phi2: poly(x()),
                phi3: poly(&y() - &xinv()),
            }),
            Self::Hk { mu, nu, h } => {
                let leading = poly(BivariateLaurentPoly::monomial(1 - mu, *nu, rat_int(1)));
                let phi3 = BivariateRationalFunction::from_poly(&y() - &xinv()).mul(&h.recip()?);
                Ok(PhiTriple {
                    phi1: leading.clone(),
                    phi2: leading,
                    phi3,
                })
            }
            Self::Custom { phi, .. } => phi.clone().ok_or(Error::MissingPhiTriple),
        }
    }

    /// True iff the parameters lie in the domain the underlying family was
    /// stated for: `0 < q < p` everywhere, plus `0 < pq < 1`, `p^mu <
    /// q^(nu-1)` and `p > 1` for the HK family.
    pub fn in_paper_domain(&self, par: &Params) -> bool {
        let base = par.in_paper_domain();
        match self {
            Self::Hk { mu, nu, .. } => {
                let pq = par.p() * par.q();
                base && pq.is_positive()
                    && pq < Rational::one()
                    && par.p_pow(i64::from(*mu)) < par.q_pow(i64::from(*nu) - 1)
                    && par.p() > &Rational::one()
            }
            _ => base,
        }
    }
}
