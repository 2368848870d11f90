//! Machine verification of the number and binomial identity families of the
//! four deformation schemes, and of the three-term-recurrence premises.
//!
//! Every check compares two exact rationals computed along different routes;
//! mismatches are collected into an [`IdentityReport`] rather than thrown,
//! so a verification run always reports the complete failure set.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numbers::gaussian_binomial;
use crate::numbers::shifted_factorial;
use crate::qcalculus::ZPoly;
use crate::rational::{rat_pow, Rational};
use crate::scheme::{Params, Scheme};

/// One failed check: the identity's name, the indices it was instantiated
/// at, and both exactly-computed sides.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub n: i64,
    pub m: Option<i64>,
    pub k: Option<i64>,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Outcome of an identity suite: how many instances were checked and which
/// failed. `failures` is empty iff every checked identity held exactly.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct IdentityReport {
    pub checked: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record one comparison.
    pub fn check(
        &mut self,
        identity: &'static str,
        n: i64,
        m: Option<i64>,
        k: Option<i64>,
        lhs: Rational,
        rhs: Rational,
    ) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(IdentityFailure {
                identity,
                n,
                m,
                k,
                lhs,
                rhs,
            });
        }
    }

    /// Record a nonzero assertion (used for the phi premises; the stored
    /// `rhs` of 1 stands for "any nonzero value").
    pub fn check_nonzero(&mut self, identity: &'static str, index: i64, value: Rational) {
        self.checked += 1;
        if value.is_zero() {
            self.failures.push(IdentityFailure {
                identity,
                n: index,
                m: None,
                k: None,
                lhs: value,
                rhs: Rational::from_integer(1.into()),
            });
        }
    }

    /// Compare two z-polynomials coefficient by coefficient; on mismatch the
    /// first differing degree is recorded in `k`.
    pub fn check_zpoly(&mut self, identity: &'static str, n: i64, lhs: &ZPoly, rhs: &ZPoly) {
        self.checked += 1;
        if lhs == rhs {
            return;
        }
        let top = lhs.degree().unwrap_or(0).max(rhs.degree().unwrap_or(0));
        for deg in 0..=top {
            let (lc, rc) = (lhs.coeff(deg), rhs.coeff(deg));
            if lc != rc {
                self.failures.push(IdentityFailure {
                    identity,
                    n,
                    m: None,
                    k: Some(deg as i64),
                    lhs: lc,
                    rhs: rc,
                });
                return;
            }
        }
    }

    /// Deterministic in-order merge of another report.
    pub fn merge(&mut self, other: IdentityReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// `q^a / p^b`.
fn qp(par: &Params, qe: i64, pe: i64) -> Rational {
    par.q_pow(qe) / par.p_pow(pe)
}

/// Factorials `[0]!, ..., [top]!` of one scheme, computed once so the
/// binomial suites are table lookups instead of repeated products.
struct FactorialTable {
    fact: Vec<Rational>,
}

impl FactorialTable {
    fn new(scheme: &Scheme, par: &Params, top: i64) -> Result<Self> {
        let mut fact = Vec::with_capacity(top.max(0) as usize + 1);
        let mut acc = Rational::from_integer(1.into());
        fact.push(acc.clone());
        for j in 1..=top.max(0) {
            acc *= scheme.number(par, j)?;
            fact.push(acc.clone());
        }
        Ok(Self { fact })
    }

    fn factorial(&self, n: i64) -> Rational {
        self.fact[n as usize].clone()
    }

    /// Binomial with the out-of-range-is-zero convention.
    fn binomial(&self, n: i64, k: i64) -> Result<Rational> {
        if n < 0 || k < 0 || k > n {
            return Ok(Rational::zero());
        }
        let den = &self.fact[k as usize] * &self.fact[(n - k) as usize];
        if den.is_zero() {
            return Err(Error::SingularParameters);
        }
        Ok(&self.fact[n as usize] / den)
    }
}

/// Check the full number-identity family of a built-in scheme for all
/// `0 <= n, m <= nmax` (closed-form cross-checks also cover negative
/// indices).
///
/// JS carries the two-parameter addition/negation/subtraction/two-term
/// rules; CJ inherits them with p -> 1/p; Quesne and HK have their own
/// families, HK additionally the bridge to the Quesne numbers checked
/// through an independent evaluation of its R function.
pub fn verify_number_identities(
    scheme: &Scheme,
    par: &Params,
    nmax: i64,
) -> Result<IdentityReport> {
    let mut report = IdentityReport::new();
    match scheme {
        Scheme::Js | Scheme::Cj => js_number_suite(&mut report, scheme, par, nmax)?,
        Scheme::Quesne => quesne_number_suite(&mut report, scheme, par, nmax)?,
        Scheme::Hk { mu, nu, h } => {
            hk_number_suite(&mut report, scheme, par, nmax, *mu, *nu, h.eval(par.p(), par.q())?)?
        }
        Scheme::Custom { .. } => return Err(Error::UnsupportedScheme),
    }
    Ok(report)
}

fn js_number_suite(
    report: &mut IdentityReport,
    scheme: &Scheme,
    par: &Params,
    nmax: i64,
) -> Result<()> {
    // CJ is the JS family at p -> 1/p.
    let p = if matches!(scheme, Scheme::Cj) {
        par.p_pow(-1)
    } else {
        par.p().clone()
    };
    let q = par.q().clone();
    let num = |n: i64| scheme.number(par, n);

    if p != q {
        let den = &p - &q;
        for n in -nmax..=nmax {
            let quotient = (rat_pow(&p, n) - rat_pow(&q, n)) / den.clone();
            report.check("number-closed-form", n, None, None, num(n)?, quotient);
        }
    }
    for m in 0..=nmax {
        let rhs = -(rat_pow(&(&p * &q), -m) * num(m)?);
        report.check("number-negation", -m, Some(m), None, num(-m)?, rhs);
    }
    for n in 0..=nmax {
        for m in 0..=nmax {
            let (a, b) = (num(n)?, num(m)?);
            report.check(
                "number-addition",
                n,
                Some(m),
                None,
                num(n + m)?,
                rat_pow(&q, m) * &a + rat_pow(&p, n) * &b,
            );
            report.check(
                "number-addition-alt",
                n,
                Some(m),
                None,
                num(n + m)?,
                rat_pow(&p, m) * &a + rat_pow(&q, n) * &b,
            );
            report.check(
                "number-subtraction",
                n,
                Some(m),
                None,
                num(n - m)?,
                rat_pow(&q, -m) * &a - rat_pow(&q, -m) * rat_pow(&p, n - m) * &b,
            );
            report.check(
                "number-subtraction-alt",
                n,
                Some(m),
                None,
                num(n - m)?,
                rat_pow(&p, -m) * &a - rat_pow(&q, n - m) * rat_pow(&p, -m) * &b,
            );
        }
    }
    let two = num(2)?;
    for n in 0..=nmax {
        let rhs = &two * num(n - 1)? - &p * &q * num(n - 2)?;
        report.check("number-two-term", n, None, None, num(n)?, rhs);
    }
    Ok(())
}

fn quesne_number_suite(
    report: &mut IdentityReport,
    scheme: &Scheme,
    par: &Params,
    nmax: i64,
) -> Result<()> {
    let num = |n: i64| scheme.number(par, n);
    let (p, q) = (par.p(), par.q());

    // Independent route: evaluate the materialized R(x,y) at (p^n, q^n).
    let r = scheme.r_function(par)?;
    for n in -nmax..=nmax {
        let direct = r.eval(&par.p_pow(n), &par.q_pow(n))?;
        report.check("number-r-eval", n, None, None, num(n)?, direct);
    }
    for m in 0..=nmax {
        let rhs = -(par.p_pow(-m) * par.q_pow(m) * num(m)?);
        report.check("number-negation", -m, Some(m), None, num(-m)?, rhs);
    }
    for n in 0..=nmax {
        for m in 0..=nmax {
            let (a, b) = (num(n)?, num(m)?);
            report.check(
                "number-addition",
                n,
                Some(m),
                None,
                num(n + m)?,
                par.q_pow(-m) * &a + par.p_pow(n) * &b,
            );
            report.check(
                "number-addition-alt",
                n,
                Some(m),
                None,
                num(n + m)?,
                par.p_pow(m) * &a + par.q_pow(-n) * &b,
            );
            report.check(
                "number-subtraction",
                n,
                Some(m),
                None,
                num(n - m)?,
                par.q_pow(m) * &a - par.p_pow(n - m) * par.q_pow(m) * &b,
            );
            report.check(
                "number-subtraction-alt",
                n,
                Some(m),
                None,
                num(n - m)?,
                par.p_pow(-m) * &a - par.p_pow(-m) * par.q_pow(m - n) * &b,
            );
        }
    }
    // [n] = (q - 1/p)/(p - 1/q) [2][n-1] - (p/q)[n-2]
    let scale = (q - &par.p_pow(-1)) / (p - &par.q_pow(-1));
    let two = num(2)?;
    for n in 0..=nmax {
        let rhs = &scale * &two * num(n - 1)? - p * par.q_pow(-1) * num(n - 2)?;
        report.check("number-two-term", n, None, None, num(n)?, rhs);
    }
    Ok(())
}

fn hk_number_suite(
    report: &mut IdentityReport,
    scheme: &Scheme,
    par: &Params,
    nmax: i64,
    mu: i32,
    nu: i32,
    h: Rational,
) -> Result<()> {
    let num = |n: i64| scheme.number(par, n);
    let (mu, nu) = (i64::from(mu), i64::from(nu));
    let quesne = Scheme::Quesne;

    let r = scheme.r_function(par)?;
    for n in -nmax..=nmax {
        let direct = r.eval(&par.p_pow(n), &par.q_pow(n))?;
        report.check("number-r-eval", n, None, None, num(n)?, direct);
        // Bridge to the Quesne family: [n] = h (q^nu/p^mu)^n [n]^Q.
        let bridged = &h * qp(par, nu * n, mu * n) * quesne.number(par, n)?;
        report.check("number-bridge", n, None, None, num(n)?, bridged);
    }
    for m in 0..=nmax {
        let rhs = -(qp(par, -2 * nu * m + m, -2 * mu * m + m) * num(m)?);
        report.check("number-negation", -m, Some(m), None, num(-m)?, rhs);
    }
    for n in 0..=nmax {
        for m in 0..=nmax {
            let (a, b) = (num(n)?, num(m)?);
            report.check(
                "number-addition",
                n,
                Some(m),
                None,
                num(n + m)?,
                qp(par, nu * m - m, mu * m) * &a + qp(par, nu * n, mu * n - n) * &b,
            );
            report.check(
                "number-addition-alt",
                n,
                Some(m),
                None,
                num(n + m)?,
                qp(par, nu * m, mu * m - m) * &a + qp(par, nu * n - n, mu * n) * &b,
            );
            report.check(
                "number-subtraction",
                n,
                Some(m),
                None,
                num(n - m)?,
                qp(par, -nu * m + m, -mu * m) * &a
                    - qp(par, nu * (n - 2 * m) + m, mu * (n - 2 * m) - n + m) * &b,
            );
            report.check(
                "number-subtraction-alt",
                n,
                Some(m),
                None,
                num(n - m)?,
                qp(par, -nu * m, -mu * m + m) * &a
                    - qp(par, nu * (n - 2 * m) - n + m, mu * (n - 2 * m) + m) * &b,
            );
        }
    }
    // [n] = (q-1/p)/(p-1/q) (q^-nu/p^-mu) h^-1 [2][n-1] - (q^(2nu-1)/p^(2mu-1))[n-2]
    let scale = (par.q() - &par.p_pow(-1)) / (par.p() - &par.q_pow(-1));
    let two = num(2)?;
    for n in 0..=nmax {
        let rhs = &scale * qp(par, -nu, -mu) / &h * &two * num(n - 1)?
            - qp(par, 2 * nu - 1, 2 * mu - 1) * num(n - 2)?;
        report.check("number-two-term", n, None, None, num(n)?, rhs);
    }
    Ok(())
}

/// Check the binomial identity family of a built-in scheme for
/// `0 <= k <= n <= nmax`: symmetry, the base-change to the one-parameter
/// Gaussian binomial, both Pascal-type rules (with out-of-range binomials
/// read as zero), the shifted-factorial form, and the scheme-specific
/// bridges.
pub fn verify_binomial_identities(
    scheme: &Scheme,
    par: &Params,
    nmax: i64,
) -> Result<IdentityReport> {
    let mut report = IdentityReport::new();
    match scheme {
        Scheme::Js | Scheme::Cj => js_binomial_suite(&mut report, scheme, par, nmax)?,
        Scheme::Quesne => quesne_binomial_suite(&mut report, scheme, par, nmax)?,
        Scheme::Hk { mu, nu, h } => hk_binomial_suite(
            &mut report,
            scheme,
            par,
            nmax,
            i64::from(*mu),
            i64::from(*nu),
            h.eval(par.p(), par.q())?,
        )?,
        Scheme::Custom { .. } => return Err(Error::UnsupportedScheme),
    }
    Ok(report)
}

fn js_binomial_suite(
    report: &mut IdentityReport,
    scheme: &Scheme,
    par: &Params,
    nmax: i64,
) -> Result<()> {
    let p = if matches!(scheme, Scheme::Cj) {
        par.p_pow(-1)
    } else {
        par.p().clone()
    };
    let q = par.q().clone();
    let eff = Params::new(p.clone(), q.clone())?;
    let table = FactorialTable::new(scheme, par, nmax + 1)?;
    let bin = |n: i64, k: i64| table.binomial(n, k);
    let base = &q / &p;

    for n in 0..=nmax {
        for k in 0..=n {
            report.check(
                "binomial-symmetry",
                n,
                None,
                Some(k),
                bin(n, k)?,
                bin(n, n - k)?,
            );
            report.check(
                "binomial-gauss-base-change",
                n,
                None,
                Some(k),
                bin(n, k)?,
                rat_pow(&p, k * (n - k)) * gaussian_binomial(&base, n, k),
            );
        }
        for k in 0..=n + 1 {
            report.check(
                "binomial-pascal",
                n,
                None,
                Some(k),
                bin(n + 1, k)?,
                rat_pow(&p, k) * bin(n, k)? + rat_pow(&q, n + 1 - k) * bin(n, k - 1)?,
            );
            report.check(
                "binomial-three-term",
                n,
                None,
                Some(k),
                bin(n + 1, k)?,
                rat_pow(&p, k) * bin(n, k)? + rat_pow(&p, n + 1 - k) * bin(n, k - 1)?
                    - (rat_pow(&p, n) - rat_pow(&q, n)) * bin(n - 1, k - 1)?,
            );
        }
    }
    // [n k] = ((p,q);(p,q))_n / (((p,q);(p,q))_k ((p,q);(p,q))_{n-k});
    // the factors vanish identically at p = q, where the form is skipped.
    if p != q {
        let sf = |j: i64| shifted_factorial(&p, &q, &eff, j);
        for n in 0..=nmax {
            for k in 0..=n {
                report.check(
                    "binomial-shifted-form",
                    n,
                    None,
                    Some(k),
                    bin(n, k)?,
                    sf(n)? / (sf(k)? * sf(n - k)?),
                );
            }
        }
    }
    // ((a,b);(p,q))_n = sum_k [n k] (-1)^k p^((n-k)(n-k-1)/2) q^(k(k-1)/2) a^(n-k) b^k
    let samples = [
        (Rational::from_integer(2.into()), Rational::from_integer(1.into())),
        (Rational::from_integer(1.into()), Rational::from_integer(3.into())),
        (crate::rational::rat(5, 2), crate::rational::rat(1, 2)),
    ];
    for (a, b) in &samples {
        for n in 0..=nmax {
            let mut sum = Rational::zero();
            for k in 0..=n {
                let sign = if k % 2 == 0 {
                    Rational::from_integer(1.into())
                } else {
                    Rational::from_integer((-1).into())
                };
                sum += sign
                    * bin(n, k)?
                    * rat_pow(&p, (n - k) * (n - k - 1) / 2)
                    * rat_pow(&q, k * (k - 1) / 2)
                    * rat_pow(a, n - k)
                    * rat_pow(b, k);
            }
            report.check(
                "shifted-factorial-expansion",
                n,
                None,
                None,
                shifted_factorial(a, b, &eff, n)?,
                sum,
            );
        }
    }
    Ok(())
}

fn quesne_binomial_suite(
    report: &mut IdentityReport,
    scheme: &Scheme,
    par: &Params,
    nmax: i64,
) -> Result<()> {
    let table = FactorialTable::new(scheme, par, nmax + 1)?;
    let bin = |n: i64, k: i64| table.binomial(n, k);
    let (p, q) = (par.p(), par.q());
    let base = rat_pow(&(p * q), -1);
    // (( p, 1/q ); ( p, 1/q ))_j drives the shifted-factorial form.
    let inv_q_params = Params::new(p.clone(), par.q_pow(-1))?;
    let sf = |j: i64| shifted_factorial(p, &par.q_pow(-1), &inv_q_params, j);

    for n in 0..=nmax {
        for k in 0..=n {
            report.check(
                "binomial-symmetry",
                n,
                None,
                Some(k),
                bin(n, k)?,
                bin(n, n - k)?,
            );
            report.check(
                "binomial-gauss-base-change",
                n,
                None,
                Some(k),
                bin(n, k)?,
                rat_pow(p, k * (n - k)) * gaussian_binomial(&base, n, k),
            );
            report.check(
                "binomial-shifted-form",
                n,
                None,
                Some(k),
                bin(n, k)?,
                sf(n)? / (sf(k)? * sf(n - k)?),
            );
        }
        for k in 0..=n + 1 {
            report.check(
                "binomial-pascal",
                n,
                None,
                Some(k),
                bin(n + 1, k)?,
                rat_pow(p, k) * bin(n, k)? + rat_pow(q, k - n - 1) * bin(n, k - 1)?,
            );
            report.check(
                "binomial-three-term",
                n,
                None,
                Some(k),
                bin(n + 1, k)?,
                rat_pow(p, k) * bin(n, k)? + rat_pow(p, n + 1 - k) * bin(n, k - 1)?
                    - (rat_pow(p, n) - rat_pow(q, -n)) * bin(n - 1, k - 1)?,
            );
        }
    }
    Ok(())
}

fn hk_binomial_suite(
    report: &mut IdentityReport,
    scheme: &Scheme,
    par: &Params,
    nmax: i64,
    mu: i64,
    nu: i64,
    h: Rational,
) -> Result<()> {
    let table = FactorialTable::new(scheme, par, nmax + 1)?;
    let bin = |n: i64, k: i64| table.binomial(n, k);
    let quesne_table = FactorialTable::new(&Scheme::Quesne, par, nmax + 1)?;

    for n in 0..=nmax {
        for k in 0..=n {
            report.check(
                "binomial-symmetry",
                n,
                None,
                Some(k),
                bin(n, k)?,
                bin(n, n - k)?,
            );
            // [n k] = (q^nu/p^mu)^(k(n-k)) [n k]^Q
            report.check(
                "binomial-quesne-bridge",
                n,
                None,
                Some(k),
                bin(n, k)?,
                qp(par, nu * k * (n - k), mu * k * (n - k)) * quesne_table.binomial(n, k)?,
            );
        }
        for k in 0..=n + 1 {
            report.check(
                "binomial-pascal",
                n,
                None,
                Some(k),
                bin(n + 1, k)?,
                qp(par, nu * k, (mu - 1) * k) * bin(n, k)?
                    + qp(par, (nu - 1) * (n + 1 - k), mu * (n + 1 - k)) * bin(n, k - 1)?,
            );
            report.check(
                "binomial-three-term",
                n,
                None,
                Some(k),
                bin(n + 1, k)?,
                qp(par, nu * k, (mu - 1) * k) * bin(n, k)?
                    + qp(par, nu * (n + 1 - k), (mu - 1) * (n + 1 - k)) * bin(n, k - 1)?
                    - (par.p_pow(n) - par.q_pow(-n)) * qp(par, nu * n, mu * n)
                        * bin(n - 1, k - 1)?,
            );
        }
        // [n]! = h^n (q^nu/p^mu)^(n(n+1)/2) [n]!^Q
        report.check(
            "factorial-bridge",
            n,
            None,
            None,
            table.factorial(n),
            rat_pow(&h, n)
                * qp(par, nu * n * (n + 1) / 2, mu * n * (n + 1) / 2)
                * quesne_table.factorial(n),
        );
    }
    Ok(())
}

/// Check the three-term-recurrence premises: each phi_i is nonzero at
/// (p, q), and the binomial relation
/// `[n+1 k] = phi1^k [n k] + phi2^(n+1-k) [n k-1] - phi3 [n] [n-1 k-1]`
/// holds exactly for `1 <= k <= n <= nmax`. (The monomial-eigenvalue
/// premise holds by construction of the operator actions.)
pub fn verify_theorem_premises(scheme: &Scheme, par: &Params, nmax: i64) -> Result<IdentityReport> {
    let mut report = IdentityReport::new();
    let phi = scheme.phi_triple()?;
    let [f1, f2, f3] = phi.eval(par)?;
    report.check_nonzero("premise-phi-nonzero", 1, f1.clone());
    report.check_nonzero("premise-phi-nonzero", 2, f2.clone());
    report.check_nonzero("premise-phi-nonzero", 3, f3.clone());

    let table = FactorialTable::new(scheme, par, nmax + 1)?;
    for n in 1..=nmax {
        let number_n = scheme.number(par, n)?;
        for k in 1..=n {
            let lhs = table.binomial(n + 1, k)?;
            let rhs = rat_pow(&f1, k) * table.binomial(n, k)?
                + rat_pow(&f2, n + 1 - k) * table.binomial(n, k - 1)?
                - &f3 * &number_n * table.binomial(n - 1, k - 1)?;
            report.check("premise-three-term", n, None, Some(k), lhs, rhs);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn par(p: Rational, q: Rational) -> Params {
        Params::new(p, q).unwrap()
    }

    #[test]
    fn js_number_identities_hold() {
        let report =
            verify_number_identities(&Scheme::Js, &par(rat_int(2), rat(1, 2)), 8).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert!(report.checked > 0);
    }

    #[test]
    fn quesne_number_identities_hold() {
        let report =
            verify_number_identities(&Scheme::Quesne, &par(rat_int(2), rat_int(3)), 8).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn corrupted_rule_is_detected() {
        // Feed the checker a deliberately wrong addition rule: the detector
        // must record the mismatch.
        let params = par(rat_int(2), rat(1, 2));
        let mut report = IdentityReport::new();
        let lhs = Scheme::Js.number(&params, 5).unwrap();
        let rhs = params.q_pow(2) * Scheme::Js.number(&params, 3).unwrap()
            + params.p_pow(3) * Scheme::Js.number(&params, 2).unwrap()
            + rat_int(1);
        report.check("number-addition", 3, Some(2), None, lhs, rhs);
        assert_eq!(report.failures.len(), 1);
    }

    #[test]
    fn reports_merge_in_order() {
        let mut left = IdentityReport::new();
        left.check("a", 1, None, None, rat_int(1), rat_int(2));
        let mut right = IdentityReport::new();
        right.check("b", 2, None, None, rat_int(3), rat_int(3));
        right.check("c", 3, None, None, rat_int(4), rat_int(5));
        left.merge(right);
        assert_eq!(left.checked, 3);
        assert_eq!(left.failures.len(), 2);
        assert_eq!(left.failures[0].identity, "a");
        assert_eq!(left.failures[1].identity, "c");
    }

    #[test]
    fn js_binomial_identities_hold() {
        let report =
            verify_binomial_identities(&Scheme::Js, &par(rat_int(3), rat_int(2)), 8).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn hk_binomial_identities_hold() {
        let report = verify_binomial_identities(
            &Scheme::hk_unit(1, 2),
            &par(rat_int(2), rat(1, 3)),
            6,
        )
        .unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn hk_identities_hold_with_nonconstant_h() {
        use crate::bivariate::{BivariateLaurentPoly, BivariateRationalFunction};
        let h = BivariateRationalFunction::new(
            &BivariateLaurentPoly::var_x() + &BivariateLaurentPoly::var_y(),
            BivariateLaurentPoly::constant(rat_int(2)),
        )
        .unwrap();
        let scheme = Scheme::hk(1, 2, h).unwrap();
        let params = par(rat_int(2), rat(1, 3));
        let numbers = verify_number_identities(&scheme, &params, 6).unwrap();
        assert!(numbers.passed(), "failures: {:?}", numbers.failures);
        let binomials = verify_binomial_identities(&scheme, &params, 6).unwrap();
        assert!(binomials.passed(), "failures: {:?}", binomials.failures);
        let premises = verify_theorem_premises(&scheme, &params, 8).unwrap();
        assert!(premises.passed(), "failures: {:?}", premises.failures);
    }

    #[test]
    fn theorem_premises_hold_for_js_and_quesne() {
        let report =
            verify_theorem_premises(&Scheme::Js, &par(rat_int(2), rat(1, 2)), 10).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        let report =
            verify_theorem_premises(&Scheme::Quesne, &par(rat_int(2), rat_int(3)), 10).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn premises_fail_at_p_equal_q() {
        // phi3 = p - q vanishes for JS at p = q.
        let report =
            verify_theorem_premises(&Scheme::Js, &par(rat_int(2), rat_int(2)), 4).unwrap();
        assert!(!report.passed());
        assert!(report
            .failures
            .iter()
            .any(|f| f.identity == "premise-phi-nonzero"));
    }
}
