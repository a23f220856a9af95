//! Closed forms for `D^k(x_n)` and for the Cayley elements `x0^(n-1) sigma(x_n)`
//! of both Chebyshev derivations.
//!
//! Every closed form here is checked against the Dixmier route in
//! [`crate::derivation`]; see [`crate::errata`] for the points where the
//! closed forms differ from their commonly printed statements.

use rayon::prelude::*;

use crate::derivation::{dixmier_sigma, make_derivation};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, binomial_rat, factorial, falling_factorial, Rational};
use crate::multipoly::{Monomial, MultiPoly};
use crate::Kind;

/// Where a Cayley element came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CayleySource {
    ClosedForm,
    DixmierOracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyElement {
    pub n: usize,
    pub kind: Kind,
    pub poly: MultiPoly,
    pub source: CayleySource,
}

impl CayleyElement {
    /// Homogeneous of degree `n` with unit coefficient on `x_n x0^(n-1)`.
    ///
    /// Only meaningful for `n >= 2`: for `n = 1` both elements vanish, since
    /// `x1` is itself the slice that defines `lambda`.
    pub fn is_normalized(&self) -> bool {
        let mut exps = vec![0; self.n + 1];
        exps[self.n] = 1;
        exps[0] += self.n as i32 - 1;
        self.poly.is_homogeneous_of(self.n as i64) && self.poly.coeff(&exps).is_one()
    }
}

fn q(v: usize) -> Rational {
    Rational::from(v as i64)
}

/// Exponent vector `x_a * x1^b * x0^c` in `nvars` variables.
fn mono(nvars: usize, a: usize, b: usize, c: i32) -> Monomial {
    let mut exps = vec![0; nvars];
    exps[a] += 1;
    exps[1] += b as i32;
    exps[0] += c;
    Monomial::new(exps)
}

fn check_order(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::OrderOutOfRange { n, k });
    }
    Ok(())
}

/// `D_T^k(x_n)` in closed form:
///
/// ```text
/// 2^k n sum_{i=0}^{(n-k)/2} (n-i-1)^(k-1 falling) C(k+i-1, k-1) x_{n-k-2i}
///   - [n-k even] n 2^(k-1) h^(k-1 falling) C(h, k-1) x0,     h = (n+k)/2 - 1
/// ```
pub fn dk_closed_t(n: usize, k: usize) -> Result<MultiPoly> {
    check_order(n, k)?;
    let nvars = n + 1;
    let mut out = MultiPoly::zero(nvars);
    if k == 0 {
        return Ok(MultiPoly::var(nvars, n));
    }
    let lead = Rational::from(2).pow(k as u32) * q(n);
    for i in 0..=(n - k) / 2 {
        let c = &lead
            * falling_factorial(&(q(n) - q(i) - Rational::one()), k - 1)
            * binomial((k + i - 1) as i64, (k - 1) as i64);
        let mut exps = vec![0; nvars];
        exps[n - k - 2 * i] = 1;
        out.add_term(Monomial::new(exps), c);
    }
    // Parity gate first: h is an integer exactly when n - k is even.
    if (n - k).is_multiple_of(2) {
        let h = q((n + k) / 2 - 1);
        let c = q(n)
            * Rational::from(2).pow(k as u32 - 1)
            * falling_factorial(&h, k - 1)
            * binomial_rat(&h, k - 1);
        let mut exps = vec![0; nvars];
        exps[0] = 1;
        out.add_term(Monomial::new(exps), -c);
    }
    Ok(out)
}

/// `D_U^k(x_n)` in closed form:
///
/// ```text
/// 2^k sum_{i=0}^{(n-k)/2} (n-i)^(k-1 falling) C(k+i-1, k-1) (n-k-2i+1) x_{n-k-2i}
/// ```
pub fn dk_closed_u(n: usize, k: usize) -> Result<MultiPoly> {
    check_order(n, k)?;
    let nvars = n + 1;
    if k == 0 {
        return Ok(MultiPoly::var(nvars, n));
    }
    let mut out = MultiPoly::zero(nvars);
    let lead = Rational::from(2).pow(k as u32);
    for i in 0..=(n - k) / 2 {
        let c = &lead
            * falling_factorial(&(q(n) - q(i)), k - 1)
            * binomial((k + i - 1) as i64, (k - 1) as i64)
            * q(n - k - 2 * i + 1);
        let mut exps = vec![0; nvars];
        exps[n - k - 2 * i] = 1;
        out.add_term(Monomial::new(exps), c);
    }
    Ok(out)
}

pub fn dk_closed(kind: Kind, n: usize, k: usize) -> Result<MultiPoly> {
    match kind {
        Kind::First => dk_closed_t(n, k),
        Kind::Second => dk_closed_u(n, k),
    }
}

/// Closed-form Cayley element of `D_T`, without the oracle check:
///
/// ```text
/// x_n x0^(n-1) + sum_{k=1}^{n} (-2)^k n / k! (
///     sum_i (n-i-1)^(k-1 falling) C(k+i-1, k-1) x_{n-k-2i} x1^k x0^(n-1-k)
///   - (1+(-1)^(n-k))/4 h^(k-1 falling) C(h, k-1) x1^k x0^(n-k) )
/// ```
pub fn cayley_t_closed(n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("Cayley elements need n >= 1".into()));
    }
    let nvars = n + 1;
    let mut out = MultiPoly::zero(nvars);
    out.add_term(mono(nvars, n, 0, n as i32 - 1), Rational::one());
    for k in 1..=n {
        let outer = Rational::from(-2).pow(k as u32) * q(n) / factorial(k);
        for i in 0..=(n - k) / 2 {
            let c = &outer
                * falling_factorial(&q(n - i - 1), k - 1)
                * binomial((k + i - 1) as i64, (k - 1) as i64);
            out.add_term(mono(nvars, n - k - 2 * i, k, n as i32 - 1 - k as i32), c);
        }
        if (n - k).is_multiple_of(2) {
            let h = q((n + k) / 2 - 1);
            let c = &outer
                * Rational::new(1, 2)
                * falling_factorial(&h, k - 1)
                * binomial_rat(&h, k - 1);
            let mut exps = vec![0; nvars];
            exps[1] = k as i32;
            exps[0] = (n - k) as i32;
            out.add_term(Monomial::new(exps), -c);
        }
    }
    if out.has_negative_exponents() {
        return Err(Error::ResidualNegativeExponent { n });
    }
    Ok(out)
}

/// Closed-form Cayley element of `D_U`, without the oracle check:
///
/// ```text
/// x_n x0^(n-1) + sum_{k=1}^{n} (-1)^k / k!
///     sum_i (n-i)^(k-1 falling) C(k+i-1, k-1) (n-k-2i+1) x_{n-k-2i} x1^k x0^(n-1-k)
/// ```
pub fn cayley_u_closed(n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("Cayley elements need n >= 1".into()));
    }
    let nvars = n + 1;
    let mut out = MultiPoly::zero(nvars);
    out.add_term(mono(nvars, n, 0, n as i32 - 1), Rational::one());
    for k in 1..=n {
        let outer = Rational::sign_pow(k as i64) / factorial(k);
        for i in 0..=(n - k) / 2 {
            let c = &outer
                * falling_factorial(&q(n - i), k - 1)
                * binomial((k + i - 1) as i64, (k - 1) as i64)
                * q(n - k - 2 * i + 1);
            out.add_term(mono(nvars, n - k - 2 * i, k, n as i32 - 1 - k as i32), c);
        }
    }
    if out.has_negative_exponents() {
        return Err(Error::ResidualNegativeExponent { n });
    }
    Ok(out)
}

fn reconciled(kind: Kind, n: usize, closed: MultiPoly) -> Result<CayleyElement> {
    let oracle = dixmier_sigma(kind, n)?.value;
    if closed != oracle {
        return Err(Error::OracleMismatch {
            n,
            closed: Box::new(closed),
            oracle: Box::new(oracle),
        });
    }
    Ok(CayleyElement {
        n,
        kind,
        poly: closed,
        source: CayleySource::ClosedForm,
    })
}

/// Closed-form `C_T(x0, ..., xn)`, verified against the Dixmier oracle.
pub fn cayley_t(n: usize) -> Result<CayleyElement> {
    reconciled(Kind::First, n, cayley_t_closed(n)?)
}

/// Closed-form `C_U(x0, ..., xn)`, verified against the Dixmier oracle.
pub fn cayley_u(n: usize) -> Result<CayleyElement> {
    reconciled(Kind::Second, n, cayley_u_closed(n)?)
}

/// The Cayley element by the chosen route.
pub fn cayley(kind: Kind, n: usize, source: CayleySource) -> Result<CayleyElement> {
    match source {
        CayleySource::ClosedForm => match kind {
            Kind::First => cayley_t(n),
            Kind::Second => cayley_u(n),
        },
        CayleySource::DixmierOracle => Ok(CayleyElement {
            n,
            kind,
            poly: dixmier_sigma(kind, n)?.value,
            source: CayleySource::DixmierOracle,
        }),
    }
}

/// Cayley elements for `1..=n_max`, computed in parallel, in order of `n`.
pub fn cayley_sweep(kind: Kind, n_max: usize, source: CayleySource) -> Result<Vec<CayleyElement>> {
    (1..=n_max)
        .into_par_iter()
        .map(|n| cayley(kind, n, source))
        .collect()
}

/// True when the element is annihilated by the matching derivation.
pub fn in_kernel(c: &CayleyElement) -> Result<bool> {
    make_derivation(c.kind, c.n).is_in_kernel(&c.poly)
}
