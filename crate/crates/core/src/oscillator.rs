//! Ladder operators on the Rogers-Szego basis and the deformed oscillator
//! algebra.
//!
//! On the unnormalized basis `{H_n}` the operators act as
//! `A H_n = [n] H_{n-1}`, `Adag H_n = H_{n+1}`, `N H_n = n H_n`, all
//! computed operationally: A is the (R,p,q)-derivative, Adag is
//! `phi1(P,Q) + z phi2(p,q)^N phi2^{-1}(P,Q) - z phi3(p,q) d_{R,p,q}`,
//! and N (together with the `phi2^N` factor on general polynomials) acts
//! diagonally in the H-basis through an exact triangular basis expansion.
//! The normalized basis `H_n / sqrt([n]!)` would leave the rational field,
//! so square roots appear only in the float matrix representation
//! ([`matrix_rep`]); every algebra relation is verified exactly on the
//! unnormalized basis, where the relations are scalar identities.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::identities::IdentityReport;
use crate::qcalculus::{rpq_derivative, scale, ZPoly};
use crate::rational::{rat_pow, Rational};
use crate::rogers_szego::RsFamily;
use crate::scheme::{Params, Scheme};

/// Which ladder operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderOperator {
    /// A, the lowering operator (the (R,p,q)-derivative).
    Lowering,
    /// A-dagger, the raising operator.
    Raising,
    /// N, the number operator (diagonal on the H-basis).
    Number,
}

/// The ladder-operator realization on a memoized Rogers-Szego family.
#[derive(Clone, Debug)]
pub struct LadderAction {
    family: RsFamily,
}

impl LadderAction {
    pub fn new(scheme: Scheme, params: Params) -> Result<Self> {
        Ok(Self {
            family: RsFamily::new(scheme, params)?,
        })
    }

    pub fn scheme(&self) -> &Scheme {
        self.family.scheme()
    }

    pub fn params(&self) -> &Params {
        self.family.params()
    }

    /// The basis polynomial `H_n`.
    pub fn basis(&mut self, n: usize) -> Result<ZPoly> {
        self.family.polynomial(n).cloned()
    }

    /// Apply one ladder operator to the basis element `H_n`.
    pub fn apply(&mut self, op: LadderOperator, n: usize) -> Result<ZPoly> {
        let h_n = self.basis(n)?;
        match op {
            LadderOperator::Lowering => self.lower(&h_n),
            LadderOperator::Raising => self.raise(&h_n),
            LadderOperator::Number => self.number_action(&h_n),
        }
    }

    /// `A f = d_{R,p,q} f`.
    pub fn lower(&self, f: &ZPoly) -> Result<ZPoly> {
        rpq_derivative(f, self.family.scheme(), self.family.params())
    }

    /// `Adag f = phi1(P,Q) f + z phi2^N phi2^{-1}(P,Q) f - z phi3 d f`.
    ///
    /// The `phi2^N` factor is a function of the number operator and is
    /// evaluated through the H-basis expansion of `f`: on the component
    /// along `H_m` it is the scalar `phi2(p,q)^m`. Every other factor is
    /// local in the monomial basis.
    pub fn raise(&mut self, f: &ZPoly) -> Result<ZPoly> {
        let [phi1, phi2, phi3] = self.family.phi_values().clone();
        let term1 = scale(f, &phi1);

        let components = self.expand_in_basis(f)?;
        let mut middle = ZPoly::zero();
        for (m, c) in &components {
            let h_m = self.family.polynomial(*m)?;
            let scaled = scale(h_m, &rat_pow(&phi2, -1));
            middle = &middle + &scaled.scale_coeffs(&(c * rat_pow(&phi2, *m as i64)));
        }
        let term2 = middle.shift_up(1);

        let term3 = self.lower(f)?.scale_coeffs(&phi3).shift_up(1);
        Ok(&(&term1 + &term2) - &term3)
    }

    /// `N f`: expand in the H-basis and scale the component along `H_m`
    /// by m.
    pub fn number_action(&mut self, f: &ZPoly) -> Result<ZPoly> {
        let components = self.expand_in_basis(f)?;
        let mut out = ZPoly::zero();
        for (m, c) in components {
            let h_m = self.family.polynomial(m)?.clone();
            out = &out + &h_m.scale_coeffs(&(c * Rational::from_integer((m as i64).into())));
        }
        Ok(out)
    }

    /// Exact expansion of `f` in the basis `{H_m}` by leading-term
    /// elimination (each `H_m` is monic of degree m, so the system is
    /// triangular). Returns the nonzero components in ascending m.
    pub fn expand_in_basis(&mut self, f: &ZPoly) -> Result<Vec<(usize, Rational)>> {
        let mut rest = f.clone();
        let mut components = Vec::new();
        while let Some(deg) = rest.degree() {
            let c = rest.coeff(deg);
            let h = self.family.polynomial(deg)?;
            rest = &rest - &h.scale_coeffs(&c);
            debug_assert!(rest.degree().is_none_or(|d| d < deg));
            components.push((deg, c));
        }
        components.reverse();
        Ok(components)
    }
}

/// Verify the general oscillator algebra on the basis elements
/// `H_0 ... H_nmax`, all sides computed operationally:
/// `A Adag H_n = [n+1] H_n`, `Adag A H_n = [n] H_n`,
/// `(NA - AN) H_n = -A H_n`, `(N Adag - Adag N) H_n = Adag H_n`.
pub fn check_general_algebra(act: &mut LadderAction, nmax: usize) -> Result<IdentityReport> {
    let mut report = IdentityReport::new();
    for n in 0..=nmax {
        let h_n = act.basis(n)?;
        let scheme = act.scheme().clone();
        let params = act.params().clone();

        let raised = act.raise(&h_n)?;
        let lowered = act.lower(&h_n)?;

        let lhs = act.lower(&raised)?;
        let rhs = h_n.scale_coeffs(&scheme.number(&params, n as i64 + 1)?);
        report.check_zpoly("algebra-lower-raise", n as i64, &lhs, &rhs);

        let lhs = act.raise(&lowered)?;
        let rhs = h_n.scale_coeffs(&scheme.number(&params, n as i64)?);
        report.check_zpoly("algebra-raise-lower", n as i64, &lhs, &rhs);

        let n_of_h = act.number_action(&h_n)?;

        let n_of_lowered = act.number_action(&lowered)?;
        let lowered_of_n = act.lower(&n_of_h)?;
        let lhs = &n_of_lowered - &lowered_of_n;
        report.check_zpoly("algebra-number-lowering", n as i64, &lhs, &(-&lowered));

        let n_of_raised = act.number_action(&raised)?;
        let raised_of_n = act.raise(&n_of_h)?;
        let lhs = &n_of_raised - &raised_of_n;
        report.check_zpoly("algebra-number-raising", n as i64, &lhs, &raised);
    }
    Ok(report)
}

/// Verify the scheme-specific q-commutator pair on the basis elements,
/// with the operator side computed operationally and the function of N
/// interpreted through its eigenvalue on `H_n`:
///
/// - JS:     `AAdag - p AdagA = q^N`       and `AAdag - q AdagA = p^N`
/// - CJ:     `AAdag - p^-1 AdagA = q^N`    and `AAdag - q AdagA = p^-N`
/// - Quesne: `p^-1 AAdag - AdagA = q^(-N-1)` and `q AAdag - AdagA = p^(N+1)`
/// - HK:     `p^-1 AAdag - (q^nu/p^mu) AdagA = h (q^(nu-1)/p^mu)^(N+1)`
///   and `q AAdag - (q^nu/p^mu) AdagA = h (q^nu/p^(mu-1))^(N+1)`
///
/// Custom schemes have no paper-given algebra and report
/// [`Error::UnsupportedScheme`].
pub fn check_scheme_algebra(act: &mut LadderAction, nmax: usize) -> Result<IdentityReport> {
    let params = act.params().clone();
    let one = Rational::from_integer(1.into());
    let (p, q) = (params.p().clone(), params.q().clone());

    // (alpha * AAdag - beta * AdagA) H_n = gamma(n) H_n
    type Gamma = alloc::boxed::Box<dyn Fn(i64) -> Rational>;
    let relations: [(Rational, Rational, Gamma); 2] = match act.scheme() {
        Scheme::Js => {
            let qa = q.clone();
            let pb = p.clone();
            [
                (one.clone(), p.clone(), alloc::boxed::Box::new(move |n| rat_pow(&qa, n))),
                (one.clone(), q.clone(), alloc::boxed::Box::new(move |n| rat_pow(&pb, n))),
            ]
        }
        Scheme::Cj => {
            let qa = q.clone();
            let pb = p.clone();
            [
                (
                    one.clone(),
                    rat_pow(&p, -1),
                    alloc::boxed::Box::new(move |n| rat_pow(&qa, n)),
                ),
                (
                    one.clone(),
                    q.clone(),
                    alloc::boxed::Box::new(move |n| rat_pow(&pb, -n)),
                ),
            ]
        }
        Scheme::Quesne => {
            let qa = q.clone();
            let pb = p.clone();
            [
                (
                    rat_pow(&p, -1),
                    one.clone(),
                    alloc::boxed::Box::new(move |n| rat_pow(&qa, -n - 1)),
                ),
                (
                    q.clone(),
                    one.clone(),
                    alloc::boxed::Box::new(move |n| rat_pow(&pb, n + 1)),
                ),
            ]
        }
        Scheme::Hk { mu, nu, h } => {
            let hv = h.eval(&p, &q)?;
            let ratio = params.q_pow(i64::from(*nu)) / params.p_pow(i64::from(*mu));
            let base_a = params.q_pow(i64::from(*nu) - 1) / params.p_pow(i64::from(*mu));
            let base_b = params.q_pow(i64::from(*nu)) / params.p_pow(i64::from(*mu) - 1);
            let (ha, hb) = (hv.clone(), hv);
            [
                (
                    rat_pow(&p, -1),
                    ratio.clone(),
                    alloc::boxed::Box::new(move |n| &ha * rat_pow(&base_a, n + 1)),
                ),
                (
                    q.clone(),
                    ratio,
                    alloc::boxed::Box::new(move |n| &hb * rat_pow(&base_b, n + 1)),
                ),
            ]
        }
        Scheme::Custom { .. } => return Err(Error::UnsupportedScheme),
    };

    let mut report = IdentityReport::new();
    let names = ["scheme-algebra-first", "scheme-algebra-second"];
    for n in 0..=nmax {
        let h_n = act.basis(n)?;
        let raised = act.raise(&h_n)?;
        let lowered = act.lower(&h_n)?;
        let aadag = act.lower(&raised)?;
        let adaga = act.raise(&lowered)?;
        for ((alpha, beta, gamma), name) in relations.iter().zip(names) {
            let lhs = &aadag.scale_coeffs(alpha) - &adaga.scale_coeffs(beta);
            let rhs = h_n.scale_coeffs(&gamma(n as i64));
            report.check_zpoly(name, n as i64, &lhs, &rhs);
        }
    }
    Ok(report)
}

/// Residual max-norms of the algebra relations in the truncated float
/// representation. The `lower_raise` residual excludes the last row and
/// column, where truncation necessarily breaks `A Adag`.
#[derive(Clone, Copy, Debug, Default)]
pub struct MatrixResiduals {
    /// max `|(A Adag - diag([n+1]))_ij|` over the interior.
    pub lower_raise: f64,
    /// max `|(Adag A - diag([n]))_ij|` over the interior.
    pub raise_lower: f64,
    /// max |([N, A] + A)_{ij}|.
    pub number_lowering: f64,
    /// max |([N, Adag] - Adag)_{ij}|.
    pub number_raising: f64,
}

/// Dense double-precision matrices of A, A-dagger and N on the normalized
/// basis `H_n / sqrt([n]!)`, truncated to `dimension` states, stored
/// row-major.
#[derive(Clone, Debug)]
pub struct FloatMatrixRep {
    pub dimension: usize,
    pub lowering: Vec<f64>,
    pub raising: Vec<f64>,
    pub number: Vec<f64>,
    pub residuals: MatrixResiduals,
}

impl FloatMatrixRep {
    pub fn entry(&self, matrix: &[f64], i: usize, j: usize) -> f64 {
        matrix[i * self.dimension + j]
    }
}

/// Build the truncated normalized representation: `A[n-1, n] = sqrt([n])`,
/// `Adag = transpose(A)`, `N = diag(0..dimension-1)`.
///
/// Requires `cutoff >= 2` and `[n] > 0` for `1 <= n <= cutoff`
/// ([`Error::NonPositiveSpectrum`] otherwise: the parameters are outside
/// the positivity domain and the normalization square roots do not exist).
pub fn matrix_rep(scheme: &Scheme, par: &Params, cutoff: usize) -> Result<FloatMatrixRep> {
    if cutoff < 2 {
        return Err(Error::OutOfRange);
    }
    let mut numbers = vec![0.0_f64; cutoff + 1];
    for (n, slot) in numbers.iter_mut().enumerate().skip(1) {
        let value = scheme.number(par, n as i64)?;
        if !value.is_positive() {
            return Err(Error::NonPositiveSpectrum);
        }
        *slot = value.to_f64().unwrap_or(f64::NAN);
    }

    let dim = cutoff;
    let idx = |i: usize, j: usize| i * dim + j;
    let mut lowering = vec![0.0_f64; dim * dim];
    let mut raising = vec![0.0_f64; dim * dim];
    let mut number = vec![0.0_f64; dim * dim];
    for n in 1..dim {
        let root = libm::sqrt(numbers[n]);
        lowering[idx(n - 1, n)] = root;
        raising[idx(n, n - 1)] = root;
    }
    for n in 0..dim {
        number[idx(n, n)] = n as f64;
    }

    let matmul = |a: &[f64], b: &[f64]| {
        let mut out = vec![0.0_f64; dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let aik = a[idx(i, k)];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..dim {
                    out[idx(i, j)] += aik * b[idx(k, j)];
                }
            }
        }
        out
    };

    let aadag = matmul(&lowering, &raising);
    let adaga = matmul(&raising, &lowering);
    let mut residuals = MatrixResiduals::default();
    for i in 0..dim - 1 {
        for j in 0..dim - 1 {
            let expected = if i == j { numbers[i + 1] } else { 0.0 };
            residuals.lower_raise =
                residuals.lower_raise.max(libm::fabs(aadag[idx(i, j)] - expected));
            let expected = if i == j { numbers[i] } else { 0.0 };
            residuals.raise_lower =
                residuals.raise_lower.max(libm::fabs(adaga[idx(i, j)] - expected));
        }
    }
    // N is diagonal, so [N, X][i,j] = (i - j) X[i,j] identically.
    for i in 0..dim {
        for j in 0..dim {
            let weight = i as f64 - j as f64;
            let comm_a = weight * lowering[idx(i, j)] + lowering[idx(i, j)];
            residuals.number_lowering = residuals.number_lowering.max(libm::fabs(comm_a));
            let comm_ad = weight * raising[idx(i, j)] - raising[idx(i, j)];
            residuals.number_raising = residuals.number_raising.max(libm::fabs(comm_ad));
        }
    }

    Ok(FloatMatrixRep {
        dimension: dim,
        lowering,
        raising,
        number,
        residuals,
    })
}
