#![allow(dead_code)]

pub mod props;

use chebder::{MultiPoly, Rational, UniPoly};

/// Parses sums like `-2*x1^2 + x2*x0` or `3/2*x1*x0^-1` into a polynomial in
/// `nvars` variables. Term order is irrelevant.
pub fn parse_poly(nvars: usize, src: &str) -> MultiPoly {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);

    let mut acc = MultiPoly::zero(nvars);
    for term in terms {
        let (sign, body) = match term.as_bytes()[0] {
            b'-' => (-1, &term[1..]),
            b'+' => (1, &term[1..]),
            _ => (1, term),
        };
        let mut coeff = Rational::from(sign);
        let mut exps = vec![0i32; nvars];
        for factor in body.split('*') {
            if let Some(var) = factor.strip_prefix('x') {
                let (idx, e) = match var.split_once('^') {
                    Some((i, e)) => (i.parse::<usize>().unwrap(), e.parse::<i32>().unwrap()),
                    None => (var.parse::<usize>().unwrap(), 1),
                };
                exps[idx] += e;
            } else {
                coeff = coeff * factor.parse::<Rational>().unwrap();
            }
        }
        acc = acc
            .add(&MultiPoly::monomial(nvars, exps, coeff).unwrap())
            .unwrap();
    }
    acc
}

/// Binomial with an arbitrary integer top and the falling-product definition:
/// `C(-1, 0) = 1`, `C(a, k) = 0` for `k < 0`.
pub fn gbinom(top: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut r = Rational::one();
    for j in 0..k {
        r = r * Rational::new(top - j, j + 1);
    }
    r
}

fn x_pow_scaled(c: Rational, e: usize) -> UniPoly {
    UniPoly::monomial(c, e)
}

/// `sum_i (-2)^(n-k-2i) / (n-i) * C(n-i, k+i) * C(n-k-i-1, i) * x^(n-k-2i)`.
pub fn brute_inner_t(n: usize, k: usize) -> UniPoly {
    let (n, k) = (n as i64, k as i64);
    let mut acc = UniPoly::zero();
    let mut i = 0;
    while k + 2 * i <= n {
        let e = n - k - 2 * i;
        let c = Rational::from(-2).pow(e as u32)
            * Rational::new(1, n - i)
            * gbinom(n - i, k + i)
            * gbinom(n - k - i - 1, i);
        acc = acc.add(&x_pow_scaled(c, e as usize));
        i += 1;
    }
    acc
}

/// `sum_i (-1)^(n-2i-k) (k+1)/(i+k+1) C(n-i, k+i) C(n-k-i-1, i) (2x)^(n-k-2i)`.
pub fn brute_inner_u(n: usize, k: usize) -> UniPoly {
    let (n, k) = (n as i64, k as i64);
    let mut acc = UniPoly::zero();
    let mut i = 0;
    while k + 2 * i <= n {
        let e = n - k - 2 * i;
        let c = Rational::from(-2).pow(e as u32)
            * Rational::new(k + 1, i + k + 1)
            * gbinom(n - i, k + i)
            * gbinom(n - k - i - 1, i);
        acc = acc.add(&x_pow_scaled(c, e as usize));
        i += 1;
    }
    acc
}

/// `cos(pi n / 2)` by period.
pub fn cos_half_pi(n: usize) -> Rational {
    Rational::from([1, 0, -1, 0][n % 4])
}

/// `(1/2)_n / n! = (2n)! / (4^n n!^2)`.
pub fn half_rising_over_factorial(n: usize) -> Rational {
    let f = |m: usize| (1..=m).fold(Rational::one(), |a, j| a * Rational::from(j as i64));
    f(2 * n) / (Rational::from(4).pow(n as u32) * f(n) * f(n))
}

/// `C(n + 1/2, n) = prod_{j=1}^n (j + 1/2) / j`.
pub fn binom_n_plus_half(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |a, j| a * Rational::new(2 * j + 1, 2 * j))
}

/// Chebyshev tables by the three-term recurrence.
pub fn cheb_table(second: bool, n: usize) -> Vec<UniPoly> {
    let two_x = UniPoly::from_ints(&[0, 2]);
    let mut t = vec![
        UniPoly::one(),
        UniPoly::from_ints(&[0, if second { 2 } else { 1 }]),
    ];
    while t.len() <= n {
        let m = t.len();
        let next = two_x.mul(&t[m - 1]).sub(&t[m - 2]);
        t.push(next);
    }
    t.truncate(n + 1);
    t
}
