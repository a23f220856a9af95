//! Chebyshev polynomials of both kinds and Jacobi polynomials, built by their
//! three-term recurrences, plus checks of the generating functions and the
//! derivative expansions.

use crate::error::{Error, Result};
use crate::exactnum::{binomial, Rational};
use crate::unipoly::UniPoly;
use crate::Kind;

/// `T_0, ..., T_n` from `T_{m+1} = 2x T_m - T_{m-1}`.
pub fn chebyshev_t_table(n: usize) -> Vec<UniPoly> {
    recurrence_table(UniPoly::x(), n)
}

/// `U_0, ..., U_n` from `U_{m+1} = 2x U_m - U_{m-1}`.
pub fn chebyshev_u_table(n: usize) -> Vec<UniPoly> {
    recurrence_table(UniPoly::from_ints(&[0, 2]), n)
}

pub fn family_table(kind: Kind, n: usize) -> Vec<UniPoly> {
    match kind {
        Kind::First => chebyshev_t_table(n),
        Kind::Second => chebyshev_u_table(n),
    }
}

fn recurrence_table(p1: UniPoly, n: usize) -> Vec<UniPoly> {
    let two_x = UniPoly::from_ints(&[0, 2]);
    let mut table = vec![UniPoly::one(), p1];
    while table.len() <= n {
        let m = table.len();
        let next = two_x.mul(&table[m - 1]).sub(&table[m - 2]);
        table.push(next);
    }
    table.truncate(n + 1);
    table
}

pub fn chebyshev_t(n: usize) -> UniPoly {
    chebyshev_t_table(n).pop().unwrap()
}

pub fn chebyshev_u(n: usize) -> UniPoly {
    chebyshev_u_table(n).pop().unwrap()
}

/// `T_n = sum_k C(n, 2k) (x^2 - 1)^k x^(n-2k)`.
pub fn chebyshev_t_explicit(n: usize) -> UniPoly {
    let x2m1 = UniPoly::from_ints(&[-1, 0, 1]);
    (0..=n / 2)
        .map(|k| {
            x2m1.pow(k)
                .mul(&UniPoly::monomial(Rational::one(), n - 2 * k))
                .scale(&binomial(n as i64, 2 * k as i64))
        })
        .fold(UniPoly::zero(), |acc, t| acc.add(&t))
}

/// Jacobi polynomial `P_n^(alpha, beta)` by the standard recurrence
///
/// ```text
/// 2m(m+a+b)(2m+a+b-2) P_m = (2m+a+b-1)((2m+a+b)(2m+a+b-2) x + a^2 - b^2) P_{m-1}
///                          - 2(m+a-1)(m+b-1)(2m+a+b) P_{m-2}
/// ```
///
/// with `P_0 = 1` and `P_1 = (a+1) + (a+b+2)(x-1)/2`.
pub fn jacobi_p(n: usize, alpha: &Rational, beta: &Rational) -> Result<UniPoly> {
    let minus_one = -Rational::one();
    if alpha <= &minus_one || beta <= &minus_one {
        return Err(Error::InvalidArgument(format!(
            "Jacobi parameters must exceed -1 (got {alpha}, {beta})"
        )));
    }
    let one = Rational::one();
    let two = Rational::from(2);
    let ab = alpha + beta;
    let p0 = UniPoly::one();
    if n == 0 {
        return Ok(p0);
    }
    let half_slope = (&ab + &two) / &two;
    let p1 = UniPoly::new(vec![alpha + &one - &half_slope, half_slope]);
    let (mut prev, mut cur) = (p0, p1);
    for m in 2..=n {
        let m_r = Rational::from(m as i64);
        let s = &two * &m_r + &ab; // 2m + a + b
        let denom = &two * &m_r * (&m_r + &ab) * (&s - &two);
        let inv = denom
            .recip()
            .ok_or(Error::DegenerateRecurrence { degree: m })?;
        let lin = &s - &one;
        let x_coeff = &lin * &s * (&s - &two);
        let c_coeff = &lin * (alpha * alpha - beta * beta);
        let back = &two * (&m_r + alpha - &one) * (&m_r + beta - &one) * &s;
        let next = UniPoly::new(vec![c_coeff, x_coeff])
            .mul(&cur)
            .sub(&prev.scale(&back))
            .scale(&inv);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Power series in `t` with polynomial coefficients, truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<UniPoly>,
}

impl TruncatedSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<UniPoly>) -> Self {
        coeffs.resize(order + 1, UniPoly::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(other.order);
        let mut out = vec![UniPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { order, coeffs: out }
    }

    /// True when the two agree on every coefficient below `t^m`.
    pub fn agrees_below(&self, other: &TruncatedSeries, m: usize) -> bool {
        (0..m).all(|j| {
            let a = self.coeffs.get(j).cloned().unwrap_or_default();
            let b = other.coeffs.get(j).cloned().unwrap_or_default();
            a == b
        })
    }
}

/// Checks `(1 - 2xt + t^2) * sum_{n<=M} P_n t^n` against the generating
/// function numerator (`1 - xt` for the first kind, `1` for the second)
/// modulo `t^(M-1)`.
pub fn verify_genfun(kind: Kind, order: usize) -> Result<bool> {
    if order < 2 {
        return Err(Error::InvalidArgument(format!(
            "generating-function order must be at least 2 (got {order})"
        )));
    }
    let series = TruncatedSeries::new(order, family_table(kind, order));
    let denom = TruncatedSeries::new(
        order,
        vec![UniPoly::one(), UniPoly::from_ints(&[0, -2]), UniPoly::one()],
    );
    let numer = match kind {
        Kind::First => vec![UniPoly::one(), UniPoly::from_ints(&[0, -1])],
        Kind::Second => vec![UniPoly::one()],
    };
    let numer = TruncatedSeries::new(order, numer);
    Ok(denom.mul(&series).agrees_below(&numer, order - 1))
}

/// Right-hand side of the derivative expansion of `T_n'` or `U_n'` in terms of
/// the family itself.
///
/// First kind: `n (sum_{k=1}^{n-1} (1-(-1)^k) T_{n-k} + (1-(-1)^n)/2 T_0)`.
/// Second kind: `sum_{k=0}^{n/2} 2(n-2k) U_{n-2k-1}`, with `U_{-1} = 0`.
pub fn derivative_expansion(kind: Kind, n: usize) -> UniPoly {
    let table = family_table(kind, n);
    match kind {
        Kind::First => {
            let mut acc = UniPoly::zero();
            for k in (1..n).filter(|k| k % 2 == 1) {
                acc = acc.add(&table[n - k].scale(&Rational::from(2)));
            }
            if n % 2 == 1 {
                acc = acc.add(&table[0]);
            }
            acc.scale(&Rational::from(n as i64))
        }
        Kind::Second => {
            let mut acc = UniPoly::zero();
            for k in 0..=n / 2 {
                let weight = n - 2 * k;
                if weight == 0 {
                    continue;
                }
                acc = acc.add(&table[weight - 1].scale(&Rational::from(2 * weight as i64)));
            }
            acc
        }
    }
}

pub fn verify_derivative_expansion(kind: Kind, n: usize) -> bool {
    let p = family_table(kind, n).pop().unwrap();
    p.derivative() == derivative_expansion(kind, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{binomial_rat, cheb_constant, factorial, pochhammer};

    #[test]
    fn t_examples() {
        assert_eq!(chebyshev_t(1), UniPoly::x());
        assert_eq!(chebyshev_t(0), UniPoly::one());
        assert_eq!(chebyshev_t(4), UniPoly::from_ints(&[1, 0, -8, 0, 8]));
    }

    #[test]
    fn t_explicit_examples() {
        assert_eq!(chebyshev_t_explicit(2), UniPoly::from_ints(&[-1, 0, 2]));
        assert_eq!(chebyshev_t_explicit(0), UniPoly::one());
        assert_eq!(chebyshev_t_explicit(6), chebyshev_t(6));
    }

    #[test]
    fn u_examples() {
        assert_eq!(chebyshev_u(1), UniPoly::from_ints(&[0, 2]));
        assert_eq!(chebyshev_u(0), UniPoly::one());
        assert_eq!(chebyshev_u(3), UniPoly::from_ints(&[0, -4, 0, 8]));
    }

    #[test]
    fn leading_coefficients() {
        for n in 1..=20 {
            assert_eq!(
                chebyshev_t(n).leading_coeff().unwrap(),
                &Rational::from(2).pow(n as u32 - 1)
            );
            assert_eq!(
                chebyshev_u(n).leading_coeff().unwrap(),
                &Rational::from(2).pow(n as u32)
            );
        }
    }

    #[test]
    fn jacobi_examples() {
        let h = Rational::new(1, 2);
        let mh = -h.clone();
        assert_eq!(
            jacobi_p(1, &mh, &mh).unwrap(),
            UniPoly::new(vec![Rational::zero(), h.clone()])
        );
        assert_eq!(jacobi_p(0, &Rational::from(3), &h).unwrap(), UniPoly::one());
        let want =
            chebyshev_u(2).scale(&(binomial_rat(&Rational::new(5, 2), 2) / Rational::from(3)));
        assert_eq!(jacobi_p(2, &h, &h).unwrap(), want);
    }

    #[test]
    fn jacobi_rejects_out_of_range_parameters() {
        let bad = Rational::from(-1);
        assert!(jacobi_p(3, &bad, &Rational::zero()).is_err());
    }

    #[test]
    fn jacobi_general_parameters_match_legendre() {
        // alpha = beta = 0 gives Legendre: P_2 = (3x^2 - 1)/2.
        let z = Rational::zero();
        let want = UniPoly::new(vec![Rational::new(-1, 2), z.clone(), Rational::new(3, 2)]);
        assert_eq!(jacobi_p(2, &z, &z).unwrap(), want);
    }

    #[test]
    fn special_values() {
        let t = chebyshev_t_table(40);
        let u = chebyshev_u_table(40);
        for n in 0..=40 {
            assert_eq!(t[n].eval(&Rational::zero()), cheb_constant(n));
            assert_eq!(u[n].eval(&Rational::zero()), cheb_constant(n));
            assert_eq!(t[n].eval(&Rational::one()), Rational::one());
            assert_eq!(u[n].eval(&Rational::one()), Rational::from(n as i64 + 1));
        }
    }

    #[test]
    fn jacobi_conversions_small() {
        let h = Rational::new(1, 2);
        for n in 0..=6 {
            let lhs = jacobi_p(n, &-h.clone(), &-h.clone())
                .unwrap()
                .scale(&factorial(n));
            assert_eq!(lhs, chebyshev_t(n).scale(&pochhammer(&h, n)));
        }
    }

    #[test]
    fn genfun_examples() {
        assert!(verify_genfun(Kind::Second, 5).unwrap());
        assert!(verify_genfun(Kind::First, 2).unwrap());
        assert!(verify_genfun(Kind::First, 20).unwrap());
        assert!(verify_genfun(Kind::First, 1).is_err());
    }

    #[test]
    fn genfun_detects_a_wrong_family() {
        // Swapping in U for the first-kind numerator must fail.
        let order = 6;
        let series = TruncatedSeries::new(order, chebyshev_u_table(order));
        let denom = TruncatedSeries::new(
            order,
            vec![UniPoly::one(), UniPoly::from_ints(&[0, -2]), UniPoly::one()],
        );
        let numer = TruncatedSeries::new(order, vec![UniPoly::one(), UniPoly::from_ints(&[0, -1])]);
        assert!(!denom.mul(&series).agrees_below(&numer, order - 1));
    }

    #[test]
    fn derivative_expansion_examples() {
        assert!(verify_derivative_expansion(Kind::First, 3));
        assert_eq!(
            derivative_expansion(Kind::First, 3),
            UniPoly::from_ints(&[-3, 0, 12])
        );
        assert!(verify_derivative_expansion(Kind::First, 0));
        assert!(verify_derivative_expansion(Kind::Second, 4));
        assert!(verify_derivative_expansion(Kind::Second, 0));
    }
}
