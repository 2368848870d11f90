//! Deformed numbers `[n] = R(p^n, q^n)`, factorials, binomial coefficients
//! and shifted factorials.
//!
//! The JS family (and CJ, which is JS with p -> 1/p) is computed by the sum
//! form `[n] = sum_{k=0}^{n-1} p^(n-1-k) q^k`, which stays finite at p = q
//! where the quotient form (p^n - q^n)/(p - q) is 0/0; the quotient form is
//! kept as a cross-check in the identity suites. Negative indices follow the
//! reflection rules of the respective number families.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_pow, Rational};
use crate::scheme::{Params, Scheme};

/// `[n]_{p,q}` by the sum form; total for all p, q > 0 and all signed n.
pub(crate) fn js_number(p: &Rational, q: &Rational, n: i64) -> Rational {
    if n < 0 {
        // [-m] = -(pq)^{-m} [m]
        let reflected = js_number(p, q, -n);
        return -(rat_pow(&(p * q), n) * reflected);
    }
    let mut acc = Rational::zero();
    for k in 0..n {
        acc += rat_pow(p, n - 1 - k) * rat_pow(q, k);
    }
    acc
}

/// `[n]^Q_{p,q} = (p^n - q^{-n})/(q - 1/p)`; singular at pq = 1.
pub(crate) fn quesne_number(p: &Rational, q: &Rational, n: i64) -> Result<Rational> {
    let den = q - &rat_pow(p, -1);
    if den.is_zero() {
        return Err(Error::SingularParameters);
    }
    Ok((rat_pow(p, n) - rat_pow(q, -n)) / den)
}

impl Scheme {
    /// The deformed number `[n] = R(p^n, q^n)`, for any signed `n`.
    ///
    /// Built-in families use their closed forms (which extend to negative
    /// `n`); custom schemes evaluate R at `(p^n, q^n)` directly.
    pub fn number(&self, par: &Params, n: i64) -> Result<Rational> {
        match self {
            Self::Js => Ok(js_number(par.p(), par.q(), n)),
            Self::Cj => Ok(js_number(&par.p_pow(-1), par.q(), n)),
            Self::Quesne => quesne_number(par.p(), par.q(), n),
            Self::Hk { mu, nu, h } => {
                let hv = h.eval(par.p(), par.q())?;
                let ratio = par.q_pow(i64::from(*nu)) / par.p_pow(i64::from(*mu));
                Ok(hv * rat_pow(&ratio, n) * quesne_number(par.p(), par.q(), n)?)
            }
            Self::Custom { r, .. } => r
                .eval(&par.p_pow(n), &par.q_pow(n))
                .map_err(|_| Error::SingularParameters),
        }
    }

    /// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
    pub fn factorial(&self, par: &Params, n: i64) -> Result<Rational> {
        if n < 0 {
            return Err(Error::NegativeArgument);
        }
        let mut acc = Rational::one();
        for k in 1..=n {
            acc *= self.number(par, k)?;
        }
        Ok(acc)
    }

    /// The deformed binomial coefficient `[n]! / ([k]! [n-k]!)`.
    ///
    /// Requires `0 <= k <= n`; symmetric in `k <-> n-k` by construction.
    pub fn binomial(&self, par: &Params, n: i64, k: i64) -> Result<Rational> {
        if k < 0 || k > n {
            return Err(Error::OutOfRange);
        }
        let den = self.factorial(par, k)? * self.factorial(par, n - k)?;
        if den.is_zero() {
            return Err(Error::SingularParameters);
        }
        Ok(self.factorial(par, n)? / den)
    }

}

/// The (p,q)-shifted factorial
/// `((a,b);(p,q))_n = (a-b)(ap-bq)...(ap^{n-1}-bq^{n-1})`, with the empty
/// product 1 at n = 0.
pub fn shifted_factorial(a: &Rational, b: &Rational, par: &Params, n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::NegativeArgument);
    }
    let mut acc = Rational::one();
    for j in 0..n {
        acc *= a * par.p_pow(j) - b * par.q_pow(j);
    }
    Ok(acc)
}

/// The one-parameter Gaussian binomial `[n choose k]_t`, computed by the
/// q-Pascal recurrence `[n k] = [n-1 k] + t^{n-k} [n-1 k-1]`. Total in t
/// (at t = 1 it degenerates to the ordinary binomial coefficient); used as
/// the independent route for the base-change identities.
pub fn gaussian_binomial(t: &Rational, n: i64, k: i64) -> Rational {
    if k < 0 || k > n {
        return Rational::zero();
    }
    if k == 0 || k == n {
        return Rational::one();
    }
    gaussian_binomial(t, n - 1, k) + rat_pow(t, n - k) * gaussian_binomial(t, n - 1, k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn par(p: (i64, i64), q: (i64, i64)) -> Params {
        Params::new(rat(p.0, p.1), rat(q.0, q.1)).unwrap()
    }

    #[test]
    fn js_number_matches_quotient_oracle() {
        // Oracle: (p^n - q^n)/(p - q) by direct rational arithmetic.
        let par = par((2, 1), (1, 1));
        assert_eq!(Scheme::Js.number(&par, 3).unwrap(), rat_int(7));
    }

    #[test]
    fn every_scheme_has_zero_at_n_zero() {
        let par = par((2, 1), (1, 3));
        for scheme in [Scheme::Js, Scheme::Cj, Scheme::Quesne, Scheme::hk_unit(1, 2)] {
            assert!(scheme.number(&par, 0).unwrap().is_zero());
        }
    }

    #[test]
    fn quesne_number_oracle() {
        // (p^2 - q^-2)/(q - 1/p) = p(pq+1)/q^2 at p=2, q=3 -> 14/9.
        let par = par((2, 1), (3, 1));
        assert_eq!(Scheme::Quesne.number(&par, 2).unwrap(), rat(14, 9));
    }

    #[test]
    fn js_at_p_one_is_heine() {
        // (1 - q^n)/(1 - q) at q = 1/2, n = 3 -> 7/4.
        let par = par((1, 1), (1, 2));
        assert_eq!(Scheme::Js.number(&par, 3).unwrap(), rat(7, 4));
    }

    #[test]
    fn js_survives_p_equal_q() {
        // Sum form gives n p^{n-1} where the quotient form is 0/0.
        let par = par((3, 2), (3, 2));
        assert_eq!(Scheme::Js.number(&par, 4).unwrap(), rat_int(4) * rat_pow(&rat(3, 2), 3));
    }

    #[test]
    fn quesne_singular_at_pq_one() {
        let par = par((2, 1), (1, 2));
        assert_eq!(
            Scheme::Quesne.number(&par, 1).unwrap_err(),
            Error::SingularParameters
        );
    }

    #[test]
    fn factorial_base_cases_and_products() {
        let p21 = par((2, 1), (1, 1));
        assert_eq!(Scheme::Js.factorial(&p21, 0).unwrap(), rat_int(1));
        // 1 * 3 * 7 = 21
        assert_eq!(Scheme::Js.factorial(&p21, 3).unwrap(), rat_int(21));
        // p=1, q=1/2: (1)(1 + q) = 3/2
        let heine = par((1, 1), (1, 2));
        assert_eq!(Scheme::Js.factorial(&heine, 2).unwrap(), rat(3, 2));
        assert_eq!(
            Scheme::Js.factorial(&heine, -1).unwrap_err(),
            Error::NegativeArgument
        );
    }

    #[test]
    fn binomial_examples() {
        let par14 = par((1, 1), (2, 1));
        // Gaussian binomial (1+q^2)(1+q+q^2) at q=2 -> 35.
        assert_eq!(Scheme::Js.binomial(&par14, 4, 2).unwrap(), rat_int(35));
        let par2 = par((2, 1), (1, 2));
        // [2]_{p,q} = p + q = 5/2.
        assert_eq!(Scheme::Js.binomial(&par2, 2, 1).unwrap(), rat(5, 2));
        assert_eq!(Scheme::Js.binomial(&par2, 5, 0).unwrap(), rat_int(1));
        assert_eq!(
            Scheme::Js.binomial(&par2, 2, 3).unwrap_err(),
            Error::OutOfRange
        );
    }

    #[test]
    fn shifted_factorial_examples() {
        let par23 = par((2, 1), (3, 1));
        assert_eq!(
            shifted_factorial(&rat_int(5), &rat_int(4), &par23, 1).unwrap(),
            rat_int(1)
        );
        // (2-1)(2*2 - 1*3) = 1
        assert_eq!(
            shifted_factorial(&rat_int(2), &rat_int(1), &par23, 2).unwrap(),
            rat_int(1)
        );
        // a=b=1 and p=q: first factor vanishes.
        let diag = par((3, 1), (3, 1));
        assert!(shifted_factorial(&rat_int(1), &rat_int(1), &diag, 3)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn gaussian_binomial_oracle_values() {
        let q = rat_int(2);
        assert_eq!(gaussian_binomial(&q, 2, 1), rat_int(3)); // 1 + q
        assert_eq!(gaussian_binomial(&q, 4, 2), rat_int(35)); // (1+q^2)(1+q+q^2)
        assert_eq!(gaussian_binomial(&rat_int(1), 5, 2), rat_int(10)); // ordinary
    }

    #[test]
    fn negative_index_reflections() {
        let par = par((2, 1), (1, 3));
        // JS: [-m] = -(pq)^{-m}[m]
        let m = 3;
        let lhs = Scheme::Js.number(&par, -m).unwrap();
        let rhs = -(rat_pow(&(par.p() * par.q()), -m) * Scheme::Js.number(&par, m).unwrap());
        assert_eq!(lhs, rhs);
        // Quesne: [-m] = -p^{-m} q^m [m]
        let lhs = Scheme::Quesne.number(&par, -m).unwrap();
        let rhs = -(par.p_pow(-m) * par.q_pow(m) * Scheme::Quesne.number(&par, m).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hk_number_via_r_evaluation() {
        let par = par((2, 1), (1, 3));
        let scheme = Scheme::hk_unit(1, 2);
        let r = scheme.r_function(&par).unwrap();
        for n in -4..=6 {
            assert_eq!(
                scheme.number(&par, n).unwrap(),
                r.eval(&par.p_pow(n), &par.q_pow(n)).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn hk_r_function_freezes_h_at_the_parameters() {
        // h = (x + y)/2 enters R as the scalar h(p, q), so the R-evaluation
        // route must agree with the closed form even though h varies.
        use crate::bivariate::{BivariateLaurentPoly, BivariateRationalFunction};
        let h = BivariateRationalFunction::new(
            &BivariateLaurentPoly::var_x() + &BivariateLaurentPoly::var_y(),
            BivariateLaurentPoly::constant(rat_int(2)),
        )
        .unwrap();
        let scheme = Scheme::hk(1, 2, h).unwrap();
        let par = par((2, 1), (1, 3));
        let r = scheme.r_function(&par).unwrap();
        for n in -4..=6 {
            assert_eq!(
                scheme.number(&par, n).unwrap(),
                r.eval(&par.p_pow(n), &par.q_pow(n)).unwrap(),
                "n = {n}"
            );
        }
        // and the frozen scalar is (p + q)/2 = 7/6 times the unit-h number
        assert_eq!(
            scheme.number(&par, 1).unwrap(),
            rat(7, 6) * Scheme::hk_unit(1, 2).number(&par, 1).unwrap()
        );
    }
}
