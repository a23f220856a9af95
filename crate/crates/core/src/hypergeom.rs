//! Terminating hypergeometric sums built from a first term and a term ratio,
//! and the two `4F3` forms of the second identities.
//!
//! For fixed `(n, k)` the inner sums of the second identities are
//! `a_0 * 4F3(...; 4/x^2)`. The sums are expanded here by the ratio
//! `a_{i+1}/a_i = r_i / x^2`, where `r_i` is rational:
//!
//! ```text
//! first kind:  r_i = (k+2i+1-n)^2 (k+2i-n) (k+2i+2-n) / (4 (i+1-n) (k+i+1) (k+i+1-n) (i+1))
//! second kind: r_i = (k+2i+1-n)^2 (k+2i-n) (k+2i+2-n) / (4 (i-n)   (k+i+2) (k+i+1-n) (i+1))
//! ```
//!
//! The squared factor is why the upper parameter `(k-n)/2 + 1/2` appears
//! twice in the `4F3` array.

use crate::error::{Error, Result};
use crate::exactnum::{binomial, pochhammer, Rational};
use crate::families::family_table;
use crate::identities::{t_ii_gated_sum, IdentityId, IdentityReport};
use crate::unipoly::UniPoly;
use crate::Kind;

/// `a_0 + a_1 + ...` with `a_{i+1} = ratio(i) * a_i / x^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermRatioSeries {
    kind: Kind,
    n: usize,
    k: usize,
    first_term: UniPoly,
    num_terms: usize,
}

fn q(v: i64) -> Rational {
    Rational::from(v)
}

impl TermRatioSeries {
    fn build(kind: Kind, n: usize, k: usize) -> Result<Self> {
        if n == 0 || k > n {
            return Err(Error::InvalidArgument(format!(
                "series needs 0 <= k <= n and n >= 1 (got n={n}, k={k})"
            )));
        }
        let minus_2x_pow = UniPoly::from_ints(&[0, -2]).pow(n - k);
        let mut c = binomial(n as i64, k as i64);
        if kind == Kind::First {
            c = c / q(n as i64);
        }
        let series = TermRatioSeries {
            kind,
            n,
            k,
            first_term: minus_2x_pow.scale(&c),
            num_terms: (n - k) / 2 + 1,
        };
        for i in 0..series.num_terms - 1 {
            series.ratio(i)?;
        }
        Ok(series)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn first_term(&self) -> &UniPoly {
        &self.first_term
    }

    pub fn num_terms(&self) -> usize {
        self.num_terms
    }

    /// Rational part of `a_{i+1} / a_i` (the full ratio carries `x^-2`).
    pub fn ratio(&self, i: usize) -> Result<Rational> {
        let (n, k, i) = (self.n as i64, self.k as i64, i as i64);
        let s = k + 2 * i - n;
        let num = q(s + 1).pow(2) * q(s) * q(s + 2);
        let den = match self.kind {
            Kind::First => 4 * (i + 1 - n) * (k + i + 1) * (k + i + 1 - n) * (i + 1),
            Kind::Second => 4 * (i - n) * (k + i + 2) * (k + i + 1 - n) * (i + 1),
        };
        if den == 0 {
            return Err(Error::VanishingRatio { index: i as usize });
        }
        Ok(num / q(den))
    }

    /// The `4F3` upper and lower parameters for this `(n, k)`.
    pub fn pfq_parameters(&self) -> (Vec<Rational>, Vec<Rational>) {
        let (n, k) = (self.n as i64, self.k as i64);
        let base = Rational::new(k - n, 2);
        let half = Rational::new(1, 2);
        let upper = vec![
            base.clone(),
            &base + Rational::one(),
            &base + &half,
            &base + &half,
        ];
        let lower = match self.kind {
            Kind::First => vec![q(1 - n), q(k + 1), q(1 - n + k)],
            Kind::Second => vec![q(-n), q(k + 2), q(1 - n + k)],
        };
        (upper, lower)
    }
}

/// Inner sum of first-kind identity (ii) for `T_k`, with `T_1 = x`.
pub fn build_series_t(n: usize, k: usize) -> Result<TermRatioSeries> {
    TermRatioSeries::build(Kind::First, n, k)
}

/// Inner sum of second-kind identity (ii) for `U_k`, with `U_1 = 2x`.
pub fn build_series_u(n: usize, k: usize) -> Result<TermRatioSeries> {
    TermRatioSeries::build(Kind::Second, n, k)
}

pub fn expand_series(s: &TermRatioSeries) -> Result<UniPoly> {
    let mut term = s.first_term.clone();
    let mut acc = term.clone();
    for i in 0..s.num_terms - 1 {
        term = term
            .scale(&s.ratio(i)?)
            .div_x_pow(2)
            .ok_or(Error::InexactDivision { index: i })?;
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `sum_k n * expand(T-series(n, k)) T_k - n * (gated sum)`; reduces to
/// `cos(pi n / 2)`.
pub fn hypergeom_t_residual(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "identities are stated for n >= 1".into(),
        ));
    }
    let t = family_table(Kind::First, n);
    let nq = q(n as i64);
    let mut lhs = UniPoly::zero();
    for (k, tk) in t.iter().enumerate() {
        lhs = lhs.add(&expand_series(&build_series_t(n, k)?)?.mul(tk));
    }
    Ok(lhs.sub(&t_ii_gated_sum(n, &t[1])).scale(&nq))
}

/// `sum_k expand(U-series(n, k)) U_k`; reduces to `cos(pi n / 2)`.
pub fn hypergeom_u_residual(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "identities are stated for n >= 1".into(),
        ));
    }
    let u = family_table(Kind::Second, n);
    let mut lhs = UniPoly::zero();
    for (k, uk) in u.iter().enumerate() {
        lhs = lhs.add(&expand_series(&build_series_u(n, k)?)?.mul(uk));
    }
    Ok(lhs)
}

pub fn verify_hypergeom_t(n: usize) -> Result<IdentityReport> {
    Ok(IdentityReport::new(
        IdentityId::HgT,
        n,
        hypergeom_t_residual(n)?,
    ))
}

pub fn verify_hypergeom_u(n: usize) -> Result<IdentityReport> {
    Ok(IdentityReport::new(
        IdentityId::HgU,
        n,
        hypergeom_u_residual(n)?,
    ))
}

/// Exact `pFq(upper; lower; z)` for a terminating series.
///
/// Summation stops at the first index where an upper parameter factor
/// vanishes, or after `max_terms` terms when given. A vanishing lower factor
/// before that point is a pole.
pub fn pfq_terminating(
    upper: &[Rational],
    lower: &[Rational],
    z: &Rational,
    max_terms: Option<usize>,
) -> Result<Rational> {
    let terminates = upper
        .iter()
        .any(|u| u.is_integer() && (u.is_negative() || u.is_zero()));
    if !terminates && max_terms.is_none() {
        return Err(Error::NonTerminating { limit: 0 });
    }
    let mut term = Rational::one();
    let mut acc = Rational::zero();
    let mut j = 0usize;
    loop {
        if max_terms.is_some_and(|m| j >= m) {
            break;
        }
        acc += &term;
        let jq = Rational::from(j as i64);
        let num: Rational = upper.iter().map(|u| u + &jq).product();
        if num.is_zero() {
            break;
        }
        let den: Rational = lower.iter().map(|l| l + &jq).product();
        if den.is_zero() {
            return Err(Error::LowerParameterPole { term: j + 1 });
        }
        term = term * num / den * z / Rational::from(j as i64 + 1);
        j += 1;
    }
    Ok(acc)
}

/// Term `j` of a pFq from Pochhammer products directly; `None` at a pole.
pub fn pfq_term(
    upper: &[Rational],
    lower: &[Rational],
    z: &Rational,
    j: usize,
) -> Option<Rational> {
    let num: Rational = upper.iter().map(|u| pochhammer(u, j)).product();
    let den: Rational = lower.iter().map(|l| pochhammer(l, j)).product();
    if den.is_zero() {
        return None;
    }
    let fact: Rational = (1..=j).map(|m| Rational::from(m as i64)).product();
    Some(num * z.pow(j as u32) / den / fact)
}
