//! Bivariate Laurent polynomials and rational functions in two formal
//! variables (x, y).
//!
//! These house the deformation function R(x,y), the auxiliary factor h(p,q)
//! of the HK scheme, and the phi triples that drive the three-term
//! recurrences. Exponents may be negative down to a finite bound; the only
//! use the calculus makes of these objects is pointwise evaluation at
//! rational points, so no normal form beyond zero-stripping is kept.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{rat_pow, Rational};

/// A finite Laurent polynomial `sum r_{ij} x^i y^j` with exact rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariateLaurentPoly {
    terms: BTreeMap<(i32, i32), Rational>,
}

impl BivariateLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(Rational::from_integer(1.into()))
    }

    /// `c * x^i y^j`.
    pub fn monomial(i: i32, j: i32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// The variable `x`.
    pub fn var_x() -> Self {
        Self::monomial(1, 0, Rational::from_integer(1.into()))
    }

    /// The variable `y`.
    pub fn var_y() -> Self {
        Self::monomial(0, 1, Rational::from_integer(1.into()))
    }

    /// Accumulate `(i, j, coefficient)` triples; repeated exponent pairs add.
    pub fn from_terms<I: IntoIterator<Item = (i32, i32, Rational)>>(iter: I) -> Self {
        let mut poly = Self::zero();
        for (i, j, c) in iter {
            poly.add_term(i, j, c);
        }
        poly
    }

    fn add_term(&mut self, i: i32, j: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i32, j: i32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Exact value at `(x, y)`.
    ///
    /// Negative exponents require the corresponding base to be nonzero;
    /// otherwise the isolated singularity at zero has been hit and the
    /// evaluation reports [`Error::ZeroDenominator`].
    pub fn eval(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            if (i < 0 && x.is_zero()) || (j < 0 && y.is_zero()) {
                return Err(Error::ZeroDenominator);
            }
            acc += c * rat_pow(x, i64::from(i)) * rat_pow(y, i64::from(j));
        }
        Ok(acc)
    }
}

impl Add for &BivariateLaurentPoly {
    type Output = BivariateLaurentPoly;
    fn add(self, rhs: &BivariateLaurentPoly) -> BivariateLaurentPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariateLaurentPoly {
    type Output = BivariateLaurentPoly;
    fn sub(self, rhs: &BivariateLaurentPoly) -> BivariateLaurentPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BivariateLaurentPoly {
    type Output = BivariateLaurentPoly;
    fn mul(self, rhs: &BivariateLaurentPoly) -> BivariateLaurentPoly {
        let mut out = BivariateLaurentPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariateLaurentPoly {
    type Output = BivariateLaurentPoly;
    fn neg(self) -> BivariateLaurentPoly {
        BivariateLaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for BivariateLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if i != 0 {
                write!(f, "*x^{i}")?;
            }
            if j != 0 {
                write!(f, "*y^{j}")?;
            }
        }
        Ok(())
    }
}

/// A ratio of two finite Laurent polynomials. The denominator is never the
/// zero polynomial; pointwise evaluation is defined wherever the denominator
/// does not vanish.
///
/// Equality is decided by cross-multiplication (`a/b == c/d` iff
/// `a*d == c*b`), which avoids multivariate gcd machinery and suffices for
/// every check in the crate.
#[derive(Clone, Debug)]
pub struct BivariateRationalFunction {
    num: BivariateLaurentPoly,
    den: BivariateLaurentPoly,
}

impl BivariateRationalFunction {
    pub fn new(num: BivariateLaurentPoly, den: BivariateLaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(num: BivariateLaurentPoly) -> Self {
        Self {
            num,
            den: BivariateLaurentPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(BivariateLaurentPoly::constant(c))
    }

    pub fn one() -> Self {
        Self::constant(Rational::from_integer(1.into()))
    }

    pub fn num(&self) -> &BivariateLaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &BivariateLaurentPoly {
        &self.den
    }

    /// Exact value `num(x,y) / den(x,y)`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        let den = self.den.eval(x, y)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(x, y)? / den)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    /// Reciprocal; fails when the numerator is the zero polynomial.
    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl PartialEq for BivariateRationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for BivariateRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Collect the terms of a Laurent polynomial as `(i, j, coefficient)`
/// triples in lexicographic exponent order (the wire order used by the
/// JSON scheme documents).
pub fn term_triples(poly: &BivariateLaurentPoly) -> Vec<(i32, i32, Rational)> {
    poly.terms().map(|(&(i, j), c)| (i, j, c.clone())).collect()
}
