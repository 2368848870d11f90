//! Continuous (R,p,q)-Hermite polynomials.
//!
//! `Herm_n(cos theta) = u^n H_n(u^-2)` with `u = e^{i theta}` is a
//! palindromic Laurent polynomial `sum_k [n choose k] u^(n-2k)` whose
//! exponents all share the parity of n. The three-term recurrence is run
//! entirely over integer exponents: on a term `c u^(n-2k)` of `Herm_n`,
//! the first recurrence term contributes `phi1^k c` at exponent `n+1-2k`,
//! the second contributes `phi2^(n-k) c` at exponent `n-1-2k`, and the third
//! subtracts `phi3 [n]` times `Herm_{n-1}`. The half-integer powers of the
//! operator formulation never materialize, so all arithmetic stays rational.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qcalculus::ZPoly;
use crate::rational::{rat_pow, Rational};
use crate::rogers_szego::rs_direct;
use crate::scheme::{Params, Scheme};

/// A Laurent polynomial in `u = e^{i theta}` whose exponents all share one
/// parity. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    parity: u8,
    terms: BTreeMap<i64, Rational>,
}

impl UPoly {
    /// The constant 1 (parity 0).
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0, Rational::from_integer(1.into()));
        Self { parity: 0, terms }
    }

    /// The zero polynomial of the given parity.
    pub fn zero(parity: u8) -> Self {
        Self {
            parity: parity & 1,
            terms: BTreeMap::new(),
        }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add.
    /// Fails with [`Error::ParityMismatch`] when nonzero terms mix parities.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Result<Self> {
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(m).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&m);
            }
        }
        let mut parities = terms.keys().map(|m| (m.rem_euclid(2)) as u8);
        let parity = parities.next().unwrap_or(0);
        if parities.any(|p| p != parity) {
            return Err(Error::ParityMismatch);
        }
        Ok(Self { parity, terms })
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: i64) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterate `(exponent, coefficient)` pairs in ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    /// Largest exponent, or `None` when zero.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True iff `coeff(m) == coeff(-m)` for every exponent.
    pub fn is_palindromic(&self) -> bool {
        self.terms
            .iter()
            .all(|(&m, c)| self.coeff(-m) == *c)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match m {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} u")?,
                _ => write!(f, "{c} u^{m}")?,
            }
        }
        Ok(())
    }
}

/// `Herm_n` by substitution from the Rogers-Szego polynomial: the
/// coefficient of `u^(n-2k)` is the deformed binomial `[n choose k]`.
pub fn hermite_from_rs(scheme: &Scheme, par: &Params, n: i64) -> Result<UPoly> {
    if n < 0 {
        return Err(Error::NegativeArgument);
    }
    let h = rs_direct(scheme, par, n)?;
    upoly_from_zpoly(&h, n)
}

fn upoly_from_zpoly(h: &ZPoly, n: i64) -> Result<UPoly> {
    UPoly::from_terms(h.terms().map(|(k, c)| (n - 2 * (k as i64), c.clone())))
}

/// A memoized continuous Hermite family built by the integer-exponent
/// three-term recurrence, mirroring [`crate::rogers_szego::RsFamily`].
#[derive(Clone, Debug)]
pub struct HermiteFamily {
    scheme: Scheme,
    params: Params,
    phi: [Rational; 3],
    cache: Vec<UPoly>,
}

impl HermiteFamily {
    /// Requires a phi triple with `phi1(p,q) != 0` and `phi2(p,q) != 0`.
    pub fn new(scheme: Scheme, params: Params) -> Result<Self> {
        let phi = scheme.phi_triple()?.eval(&params)?;
        if phi[0].is_zero() || phi[1].is_zero() {
            return Err(Error::ZeroPhi);
        }
        let cache = alloc::vec![UPoly::one()];
        Ok(Self {
            scheme,
            params,
            phi,
            cache,
        })
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// `Herm_n` by recurrence, memoized.
    pub fn polynomial(&mut self, n: usize) -> Result<&UPoly> {
        while self.cache.len() <= n {
            let next = self.step()?;
            self.cache.push(next);
        }
        Ok(&self.cache[n])
    }

    fn step(&self) -> Result<UPoly> {
        let n = (self.cache.len() - 1) as i64; // building Herm_{n+1}
        let curr = &self.cache[n as usize];
        let [phi1, phi2, phi3] = &self.phi;

        let mut terms: Vec<(i64, Rational)> = Vec::new();
        for (m, c) in curr.terms() {
            let k = (n - m) / 2;
            terms.push((m + 1, rat_pow(phi1, k) * c));
            terms.push((m - 1, rat_pow(phi2, n - k) * c));
        }
        if n >= 1 {
            let factor = phi3 * &self.scheme.number(&self.params, n)?;
            for (m, c) in self.cache[(n - 1) as usize].terms() {
                terms.push((m, -(&factor * c)));
            }
        }
        UPoly::from_terms(terms)
    }
}

/// `Herm_n` by recurrence, one-shot.
pub fn hermite_recurrence(scheme: &Scheme, par: &Params, n: i64) -> Result<UPoly> {
    if n < 0 {
        return Err(Error::NegativeArgument);
    }
    let mut family = HermiteFamily::new(scheme.clone(), par.clone())?;
    family.polynomial(n as usize).cloned()
}

/// Regroup conjugate exponents into cosines: returns `(m, c_m)` pairs in
/// descending `m >= 0` such that the polynomial equals
/// `sum_{m>0} c_m * 2cos(m theta)` plus, for even parity, the constant
/// `c_0`. Requires the input to be palindromic.
pub fn hermite_cosine_form(h: &UPoly) -> Result<Vec<(i64, Rational)>> {
    if !h.is_palindromic() {
        return Err(Error::NotPalindromic);
    }
    let mut pairs: Vec<(i64, Rational)> = h
        .terms()
        .filter(|(m, _)| *m >= 0)
        .map(|(m, c)| (m, c.clone()))
        .collect();
    pairs.reverse();
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn par(p: Rational, q: Rational) -> Params {
        Params::new(p, q).unwrap()
    }

    fn u_terms(pairs: &[(i64, Rational)]) -> UPoly {
        UPoly::from_terms(pairs.iter().cloned()).unwrap()
    }

    #[test]
    fn first_three_js_polynomials_match_the_worked_chain() {
        let params = par(rat_int(2), rat(1, 2));
        let (p, q) = (rat_int(2), rat(1, 2));
        // Herm_1 = u + 1/u = 2 cos theta
        let h1 = u_terms(&[(1, rat_int(1)), (-1, rat_int(1))]);
        assert_eq!(hermite_from_rs(&Scheme::Js, &params, 1).unwrap(), h1);
        assert_eq!(hermite_recurrence(&Scheme::Js, &params, 1).unwrap(), h1);
        // Herm_2 = u^2 + (p+q) + u^-2 = 2 cos 2theta + p + q
        let h2 = u_terms(&[
            (2, rat_int(1)),
            (0, &p + &q),
            (-2, rat_int(1)),
        ]);
        assert_eq!(hermite_from_rs(&Scheme::Js, &params, 2).unwrap(), h2);
        assert_eq!(hermite_recurrence(&Scheme::Js, &params, 2).unwrap(), h2);
        // Herm_3 = u^3 + (p^2+pq+q^2)(u + 1/u) + u^-3
        let mid = &(&p * &p) + &(&(&p * &q) + &(&q * &q));
        let h3 = u_terms(&[
            (3, rat_int(1)),
            (1, mid.clone()),
            (-1, mid),
            (-3, rat_int(1)),
        ]);
        assert_eq!(hermite_from_rs(&Scheme::Js, &params, 3).unwrap(), h3);
        assert_eq!(hermite_recurrence(&Scheme::Js, &params, 3).unwrap(), h3);
    }

    #[test]
    fn recurrence_matches_direct_for_all_builtins() {
        let cases = [
            (Scheme::Js, par(rat_int(2), rat(1, 2))),
            (Scheme::Cj, par(rat_int(3), rat_int(2))),
            (Scheme::Quesne, par(rat_int(2), rat_int(3))),
            (Scheme::hk_unit(1, 2), par(rat_int(2), rat(1, 3))),
        ];
        for (scheme, params) in cases {
            let mut family = HermiteFamily::new(scheme.clone(), params.clone()).unwrap();
            for n in 0..=12 {
                assert_eq!(
                    family.polynomial(n).unwrap(),
                    &hermite_from_rs(&scheme, &params, n as i64).unwrap(),
                    "{} at n = {n}",
                    scheme.kind_name()
                );
            }
        }
    }

    #[test]
    fn palindromic_and_parity_bookkeeping() {
        let params = par(rat(5, 2), rat(3, 2));
        for n in 0..=10i64 {
            let h = hermite_from_rs(&Scheme::Js, &params, n).unwrap();
            assert!(h.is_palindromic());
            assert_eq!(h.parity(), (n % 2) as u8);
            assert_eq!(h.max_exponent(), Some(n));
        }
    }

    #[test]
    fn cosine_form_regroups_conjugates() {
        // u + 1/u -> [(1, 1)]
        let h1 = u_terms(&[(1, rat_int(1)), (-1, rat_int(1))]);
        assert_eq!(hermite_cosine_form(&h1).unwrap(), [(1, rat_int(1))]);
        // u^2 + (p+q) + u^-2 -> [(2, 1), (0, p+q)]
        let params = par(rat_int(2), rat(1, 2));
        let h2 = hermite_from_rs(&Scheme::Js, &params, 2).unwrap();
        assert_eq!(
            hermite_cosine_form(&h2).unwrap(),
            [(2, rat_int(1)), (0, rat(5, 2))]
        );
        // Herm_3: [(3, 1), (1, p^2+pq+q^2)]
        let h3 = hermite_from_rs(&Scheme::Js, &params, 3).unwrap();
        assert_eq!(
            hermite_cosine_form(&h3).unwrap(),
            [(3, rat_int(1)), (1, rat(21, 4))]
        );
    }

    #[test]
    fn cosine_form_rejects_non_palindromic_input() {
        let crooked = u_terms(&[(2, rat_int(1)), (-2, rat_int(3))]);
        assert_eq!(
            hermite_cosine_form(&crooked).unwrap_err(),
            Error::NotPalindromic
        );
    }

    #[test]
    fn mixed_parity_is_rejected() {
        assert_eq!(
            UPoly::from_terms([(0, rat_int(1)), (1, rat_int(1))]).unwrap_err(),
            Error::ParityMismatch
        );
    }

    #[test]
    fn q_limit_matches_single_parameter_recurrence() {
        // p = 1: Herm_{n+1} = (u + 1/u) Herm_n - (1 - q^n) Herm_{n-1}.
        let params = par(rat_int(1), rat(1, 2));
        let q = params.q().clone();
        let mut prev = UPoly::one();
        let mut curr = UPoly::one();
        for n in 0..=10i64 {
            assert_eq!(
                hermite_recurrence(&Scheme::Js, &params, n).unwrap(),
                curr,
                "n = {n}"
            );
            let mut terms: Vec<(i64, Rational)> = Vec::new();
            for (m, c) in curr.terms() {
                terms.push((m + 1, c.clone()));
                terms.push((m - 1, c.clone()));
            }
            if n >= 1 {
                let factor = rat_int(1) - rat_pow(&q, n);
                for (m, c) in prev.terms() {
                    terms.push((m, -(&factor * c)));
                }
            }
            let next = UPoly::from_terms(terms).unwrap();
            prev = core::mem::replace(&mut curr, next);
        }
    }
}
