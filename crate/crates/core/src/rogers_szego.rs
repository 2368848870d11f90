//! (R,p,q)-Rogers-Szego polynomials.
//!
//! `H_n(z) = sum_{k=0}^n [n choose k] z^k` is generated two independent
//! ways: directly from the deformed binomials ([`rs_direct`]) and through
//! the three-term recurrence driven by the scheme's phi triple
//! ([`RsFamily`], [`rs_recurrence`]). The phi-triple premises guarantee the
//! routes agree exactly, and the test suites pin that equality down. The
//! difference equation `d_{R,p,q} H_n = [n] H_{n-1}` is checked by
//! [`rs_difference_check`].

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::identities::IdentityReport;
use crate::qcalculus::{rpq_derivative, scale, ZPoly};
use crate::rational::{rat_pow, Rational};
use crate::scheme::{Params, Scheme};

/// `H_n` from the binomial sum.
pub fn rs_direct(scheme: &Scheme, par: &Params, n: i64) -> Result<ZPoly> {
    if n < 0 {
        return Err(Error::NegativeArgument);
    }
    let mut poly = ZPoly::zero();
    for k in 0..=n {
        poly = &poly + &ZPoly::monomial(k as usize, scheme.binomial(par, n, k)?);
    }
    Ok(poly)
}

/// A memoized Rogers-Szego family built by the three-term recurrence
///
/// `H_{n+1}(z) = H_n(phi1 z) + z phi2^n H_n(z / phi2)
///              - z phi3 [n] H_{n-1}(z)`
///
/// with `H_{-1} = 0`, `H_0 = 1`. The cache is append-only; completed
/// prefixes are never mutated.
#[derive(Clone, Debug)]
pub struct RsFamily {
    scheme: Scheme,
    params: Params,
    phi: [Rational; 3],
    cache: Vec<ZPoly>,
}

impl RsFamily {
    /// Requires a phi triple (so custom schemes must carry one) with
    /// `phi2(p,q) != 0`, which the inverse-scale term needs.
    pub fn new(scheme: Scheme, params: Params) -> Result<Self> {
        let phi = scheme.phi_triple()?.eval(&params)?;
        if phi[1].is_zero() {
            return Err(Error::ZeroPhi);
        }
        let cache = alloc::vec![ZPoly::one()];
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

    /// The evaluated phi triple `(phi1(p,q), phi2(p,q), phi3(p,q))`.
    pub fn phi_values(&self) -> &[Rational; 3] {
        &self.phi
    }

    /// `H_n` by recurrence, memoized.
    pub fn polynomial(&mut self, n: usize) -> Result<&ZPoly> {
        while self.cache.len() <= n {
            let next = self.step()?;
            self.cache.push(next);
        }
        Ok(&self.cache[n])
    }

    fn step(&mut self) -> Result<ZPoly> {
        let n = self.cache.len() - 1; // building H_{n+1}
        let h_n = &self.cache[n];
        let [phi1, phi2, phi3] = &self.phi;

        let term1 = scale(h_n, phi1);
        let term2 = scale(h_n, &rat_pow(phi2, -1))
            .scale_coeffs(&rat_pow(phi2, n as i64))
            .shift_up(1);
        let mut next = &term1 + &term2;
        if n >= 1 {
            let number_n = self.scheme.number(&self.params, n as i64)?;
            let term3 = self.cache[n - 1]
                .scale_coeffs(&(phi3 * &number_n))
                .shift_up(1);
            next = &next - &term3;
        }
        Ok(next)
    }
}

/// `H_n` by recurrence, one-shot.
pub fn rs_recurrence(scheme: &Scheme, par: &Params, n: i64) -> Result<ZPoly> {
    if n < 0 {
        return Err(Error::NegativeArgument);
    }
    let mut family = RsFamily::new(scheme.clone(), par.clone())?;
    family.polynomial(n as usize).cloned()
}

/// Verify the difference equation `d_{R,p,q} H_n = [n] H_{n-1}` exactly for
/// `1 <= n <= nmax`.
///
/// `H_n` comes from the recurrence family when the scheme carries a phi
/// triple (so the derivative route and the recurrence route are independent)
/// and from the binomial sum otherwise.
pub fn rs_difference_check(scheme: &Scheme, par: &Params, nmax: i64) -> Result<IdentityReport> {
    let mut report = IdentityReport::new();
    let mut family = match RsFamily::new(scheme.clone(), par.clone()) {
        Ok(f) => Some(f),
        Err(Error::MissingPhiTriple) => None,
        Err(e) => return Err(e),
    };
    let mut polynomial = |n: i64| -> Result<ZPoly> {
        match family.as_mut() {
            Some(f) => f.polynomial(n as usize).cloned(),
            None => rs_direct(scheme, par, n),
        }
    };
    let mut prev = polynomial(0)?;
    for n in 1..=nmax {
        let h_n = polynomial(n)?;
        let lhs = rpq_derivative(&h_n, scheme, par)?;
        let rhs = prev.scale_coeffs(&scheme.number(par, n)?);
        report.check_zpoly("difference-equation", n, &lhs, &rhs);
        prev = h_n;
    }
    Ok(report)
}
