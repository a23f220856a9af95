//! The polynomial identities generated by the Cayley elements.
//!
//! Each verifier assembles its left-hand side directly from the identity's
//! own summation formula (not from the substituted Cayley element) and
//! reports the residual, which must reduce to the stated constant.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, binomial_rat, cheb_constant, factorial, falling_factorial, pochhammer, Rational,
};
use crate::families::{family_table, jacobi_p};
use crate::hypergeom;
use crate::multipoly::{MultiPoly, Substitution};
use crate::unipoly::UniPoly;
use crate::Kind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    TI,
    TII,
    TIII,
    UI,
    UII,
    UIII,
    HgT,
    HgU,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::TI,
        IdentityId::TII,
        IdentityId::TIII,
        IdentityId::UI,
        IdentityId::UII,
        IdentityId::UIII,
        IdentityId::HgT,
        IdentityId::HgU,
    ];

    /// Report label, e.g. `T_ii`.
    pub fn label(self) -> &'static str {
        match self {
            IdentityId::TI => "T_i",
            IdentityId::TII => "T_ii",
            IdentityId::TIII => "T_iii",
            IdentityId::UI => "U_i",
            IdentityId::UII => "U_ii",
            IdentityId::UIII => "U_iii",
            IdentityId::HgT => "HG_T",
            IdentityId::HgU => "HG_U",
        }
    }

    /// Command-line spelling, e.g. `t-ii`.
    pub fn cli_name(self) -> &'static str {
        match self {
            IdentityId::TI => "t-i",
            IdentityId::TII => "t-ii",
            IdentityId::TIII => "t-iii",
            IdentityId::UI => "u-i",
            IdentityId::UII => "u-ii",
            IdentityId::UIII => "u-iii",
            IdentityId::HgT => "hg-t",
            IdentityId::HgU => "hg-u",
        }
    }

    /// The constant the left side must reduce to.
    pub fn expected_constant(self, n: usize) -> Rational {
        let c = cheb_constant(n);
        let nq = Rational::from(n as i64);
        match self {
            IdentityId::TII => c / nq,
            IdentityId::TIII => pochhammer(&Rational::new(1, 2), n) / factorial(n) * c,
            IdentityId::UIII => binomial_rat(&(nq + Rational::new(1, 2)), n) * c,
            _ => c,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.cli_name() == s || id.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// Outcome of checking one identity at one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub n: usize,
    /// `None` when the residual is not constant.
    pub computed: Option<Rational>,
    pub expected: Rational,
    pub pass: bool,
    /// Left side minus the non-constant right-hand terms.
    pub residual: UniPoly,
}

impl IdentityReport {
    pub fn new(identity: IdentityId, n: usize, residual: UniPoly) -> Self {
        let computed = residual.as_constant();
        let expected = identity.expected_constant(n);
        let pass = computed.as_ref() == Some(&expected);
        IdentityReport {
            identity,
            n,
            computed,
            expected,
            pass,
            residual,
        }
    }

    pub fn computed_text(&self) -> String {
        match &self.computed {
            Some(c) => c.to_string(),
            None => "non-constant".to_string(),
        }
    }

    /// One line: `T_iii n=2 constant=-3/8 expected=-3/8 PASS`.
    pub fn to_line(&self) -> String {
        let mut line = format!(
            "{} n={} constant={} expected={} {}",
            self.identity,
            self.n,
            self.computed_text(),
            self.expected,
            if self.pass { "PASS" } else { "FAIL" }
        );
        if !self.pass {
            line.push_str(&format!(" residual={}", self.residual));
        }
        line
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st =
            serializer.serialize_struct("IdentityReport", if self.pass { 5 } else { 6 })?;
        st.serialize_field("identity", self.identity.label())?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("computed", &self.computed_text())?;
        st.serialize_field("expected", &self.expected)?;
        st.serialize_field("pass", &self.pass)?;
        if !self.pass {
            st.serialize_field("residual", &self.residual)?;
        }
        st.end()
    }
}

fn q(v: usize) -> Rational {
    Rational::from(v as i64)
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "identities are stated for n >= 1".into(),
        ));
    }
    Ok(())
}

/// Substitutes `x_i = T_i(x)` (first kind) or `x_i = U_i(x)` (second kind).
pub fn substitute_family(f: &MultiPoly, kind: Kind) -> Result<UniPoly> {
    let n = f.nvars().saturating_sub(1);
    f.substitute(&Substitution::new(family_table(kind, n)))
}

/// Parity-gated term `n (-2)^k / k! (1/2) h^(k-1 falling) C(h, k-1) T_1^k`
/// summed over `k` with `n - k` even, `h = (n+k)/2 - 1`.
fn t_i_gated_sum(n: usize, t1: &UniPoly) -> UniPoly {
    let mut acc = UniPoly::zero();
    for k in (1..=n).filter(|k| (n - k).is_multiple_of(2)) {
        let h = q((n + k) / 2 - 1);
        let c = q(n) * Rational::from(-2).pow(k as u32) / factorial(k)
            * Rational::new(1, 2)
            * falling_factorial(&h, k - 1)
            * binomial_rat(&h, k - 1);
        acc = acc.add(&t1.pow(k).scale(&c));
    }
    acc
}

/// Residual of the first-kind identity (i):
///
/// ```text
/// T_n + n sum_k (-2 T_1)^k sum_i 1/(n-i) C(n-i, k) C(k+i-1, k-1) T_{n-k-2i}
///     - n sum_k (-2)^k/k! (1+(-1)^(n-k))/4 h^(k-1 falling) C(h, k-1) T_1^k
/// ```
pub fn t_i_residual(n: usize) -> Result<UniPoly> {
    require_positive(n)?;
    let t = family_table(Kind::First, n);
    let minus_2t1 = t[1].scale(&Rational::from(-2));
    let mut lhs = t[n].clone();
    for k in 1..=n {
        let mut inner = UniPoly::zero();
        for i in 0..=(n - k) / 2 {
            let c = binomial((n - i) as i64, k as i64) / q(n - i)
                * binomial((k + i - 1) as i64, (k - 1) as i64);
            inner = inner.add(&t[n - k - 2 * i].scale(&c));
        }
        lhs = lhs.add(&minus_2t1.pow(k).mul(&inner).scale(&q(n)));
    }
    Ok(lhs.sub(&t_i_gated_sum(n, &t[1])))
}

/// Right-hand gated sum of identity (ii):
/// `sum_k (1+(-1)^(n-k)) k (-2)^k / (n+k)^2 C((n+k)/2, k)^2 T_1^k`.
pub(crate) fn t_ii_gated_sum(n: usize, t1: &UniPoly) -> UniPoly {
    let mut acc = UniPoly::zero();
    for k in (0..=n).filter(|k| (n - k).is_multiple_of(2)) {
        let b = binomial(((n + k) / 2) as i64, k as i64);
        let c =
            Rational::from(2) * q(k) * Rational::from(-2).pow(k as u32) / q(n + k).pow(2) * &b * &b;
        acc = acc.add(&t1.pow(k).scale(&c));
    }
    acc
}

/// Inner coefficient of identity (ii) (first kind) for `T_k`, summed directly:
/// `sum_i (-2)^(n-k-2i) / (n-i) C(n-i, k+i) C(n-k-i-1, i) T_1^(n-k-2i)`.
fn t_ii_inner(n: usize, k: usize, t1: &UniPoly) -> UniPoly {
    let mut acc = UniPoly::zero();
    for i in 0..=(n - k) / 2 {
        let e = n - k - 2 * i;
        let c = Rational::from(-2).pow(e as u32) / q(n - i)
            * binomial((n - i) as i64, (k + i) as i64)
            * binomial_rat(&(Rational::from(n as i64 - k as i64 - i as i64 - 1)), i);
        acc = acc.add(&t1.pow(e).scale(&c));
    }
    acc
}

pub fn t_ii_residual(n: usize) -> Result<UniPoly> {
    require_positive(n)?;
    let t = family_table(Kind::First, n);
    let mut lhs = UniPoly::zero();
    for k in 0..=n {
        lhs = lhs.add(&t_ii_inner(n, k, &t[1]).mul(&t[k]));
    }
    Ok(lhs.sub(&t_ii_gated_sum(n, &t[1])))
}

/// `P^(-1/2,-1/2)_n + sum_k (-x)^k (n+k-1)! / (k! 2^k (n-1)!) P^(k-1/2,k-1/2)_{n-k}`.
pub fn t_iii_residual(n: usize) -> Result<UniPoly> {
    require_positive(n)?;
    let half = Rational::new(1, 2);
    let mut lhs = jacobi_p(n, &-half.clone(), &-half.clone())?;
    let minus_x = UniPoly::from_ints(&[0, -1]);
    for k in 1..=n {
        let a = q(k) - &half;
        let c = factorial(n + k - 1)
            / (factorial(k) * Rational::from(2).pow(k as u32) * factorial(n - 1));
        let p = jacobi_p(n - k, &a, &a)?;
        lhs = lhs.add(&minus_x.pow(k).mul(&p).scale(&c));
    }
    Ok(lhs)
}

/// `U_n + sum_k (-U_1)^k / k sum_i C(n-i, k-1) C(k+i-1, k-1) (n-k-2i+1) U_{n-k-2i}`.
pub fn u_i_residual(n: usize) -> Result<UniPoly> {
    require_positive(n)?;
    let u = family_table(Kind::Second, n);
    let minus_u1 = u[1].scale(&-Rational::one());
    let mut lhs = u[n].clone();
    for k in 1..=n {
        let mut inner = UniPoly::zero();
        for i in 0..=(n - k) / 2 {
            let c = binomial((n - i) as i64, (k - 1) as i64)
                * binomial((k + i - 1) as i64, (k - 1) as i64)
                * q(n - k - 2 * i + 1);
            inner = inner.add(&u[n - k - 2 * i].scale(&c));
        }
        lhs = lhs.add(&minus_u1.pow(k).mul(&inner).scale(&(Rational::one() / q(k))));
    }
    Ok(lhs)
}

/// `sum_k (sum_i (-1)^(n-k-2i) (k+1)/(i+k+1) C(n-i, k+i) C(n-k-i-1, i) U_1^(n-k-2i)) U_k`.
pub fn u_ii_residual(n: usize) -> Result<UniPoly> {
    require_positive(n)?;
    let u = family_table(Kind::Second, n);
    let mut lhs = UniPoly::zero();
    for k in 0..=n {
        let mut inner = UniPoly::zero();
        for i in 0..=(n - k) / 2 {
            let e = n - k - 2 * i;
            let c = Rational::sign_pow(e as i64) * q(k + 1) / q(i + k + 1)
                * binomial((n - i) as i64, (k + i) as i64)
                * binomial_rat(&Rational::from(n as i64 - k as i64 - i as i64 - 1), i);
            inner = inner.add(&u[1].pow(e).scale(&c));
        }
        lhs = lhs.add(&inner.mul(&u[k]));
    }
    Ok(lhs)
}

/// `(n+1) P^(1/2,1/2)_n + sum_k (-x)^k (n+k+1)! / (k! 2^k n!) P^(k+1/2,k+1/2)_{n-k}`.
pub fn u_iii_residual(n: usize) -> Result<UniPoly> {
    require_positive(n)?;
    let half = Rational::new(1, 2);
    let mut lhs = jacobi_p(n, &half, &half)?.scale(&q(n + 1));
    let minus_x = UniPoly::from_ints(&[0, -1]);
    for k in 1..=n {
        let a = q(k) + &half;
        let c =
            factorial(n + k + 1) / (factorial(k) * Rational::from(2).pow(k as u32) * factorial(n));
        let p = jacobi_p(n - k, &a, &a)?;
        lhs = lhs.add(&minus_x.pow(k).mul(&p).scale(&c));
    }
    Ok(lhs)
}

pub fn residual(id: IdentityId, n: usize) -> Result<UniPoly> {
    match id {
        IdentityId::TI => t_i_residual(n),
        IdentityId::TII => t_ii_residual(n),
        IdentityId::TIII => t_iii_residual(n),
        IdentityId::UI => u_i_residual(n),
        IdentityId::UII => u_ii_residual(n),
        IdentityId::UIII => u_iii_residual(n),
        IdentityId::HgT => hypergeom::hypergeom_t_residual(n),
        IdentityId::HgU => hypergeom::hypergeom_u_residual(n),
    }
}

pub fn verify(id: IdentityId, n: usize) -> Result<IdentityReport> {
    Ok(IdentityReport::new(id, n, residual(id, n)?))
}

pub fn verify_t_i(n: usize) -> Result<IdentityReport> {
    verify(IdentityId::TI, n)
}

pub fn verify_t_ii(n: usize) -> Result<IdentityReport> {
    verify(IdentityId::TII, n)
}

pub fn verify_t_iii(n: usize) -> Result<IdentityReport> {
    verify(IdentityId::TIII, n)
}

pub fn verify_u_i(n: usize) -> Result<IdentityReport> {
    verify(IdentityId::UI, n)
}

pub fn verify_u_ii(n: usize) -> Result<IdentityReport> {
    verify(IdentityId::UII, n)
}

pub fn verify_u_iii(n: usize) -> Result<IdentityReport> {
    verify(IdentityId::UIII, n)
}

/// Runs every `(identity, n)` pair in parallel; reports come back sorted by
/// identity, then `n`.
pub fn sweep(ids: &[IdentityId], n_from: usize, n_to: usize) -> Result<Vec<IdentityReport>> {
    let mut jobs: Vec<(IdentityId, usize)> = ids
        .iter()
        .flat_map(|&id| (n_from..=n_to).map(move |n| (id, n)))
        .collect();
    jobs.sort();
    jobs.dedup();
    jobs.into_par_iter().map(|(id, n)| verify(id, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley;

    fn constant(r: &IdentityReport) -> String {
        assert!(r.pass, "{}", r.to_line());
        r.computed_text()
    }

    #[test]
    fn t_i_examples() {
        assert_eq!(constant(&verify_t_i(2).unwrap()), "-1");
        assert_eq!(constant(&verify_t_i(3).unwrap()), "0");
        assert_eq!(constant(&verify_t_i(4).unwrap()), "1");
    }

    #[test]
    fn t_ii_examples() {
        assert_eq!(constant(&verify_t_ii(2).unwrap()), "-1/2");
        assert_eq!(constant(&verify_t_ii(5).unwrap()), "0");
        assert_eq!(constant(&verify_t_ii(8).unwrap()), "1/8");
    }

    #[test]
    fn t_iii_examples() {
        assert_eq!(constant(&verify_t_iii(1).unwrap()), "0");
        assert_eq!(constant(&verify_t_iii(2).unwrap()), "-3/8");
        assert_eq!(constant(&verify_t_iii(7).unwrap()), "0");
    }

    #[test]
    fn u_i_examples() {
        assert_eq!(constant(&verify_u_i(2).unwrap()), "-1");
        assert_eq!(constant(&verify_u_i(3).unwrap()), "0");
        assert_eq!(constant(&verify_u_i(6).unwrap()), "-1");
    }

    #[test]
    fn u_ii_examples() {
        assert_eq!(constant(&verify_u_ii(1).unwrap()), "0");
        assert_eq!(constant(&verify_u_ii(4).unwrap()), "1");
        assert_eq!(constant(&verify_u_ii(2).unwrap()), "-1");
    }

    #[test]
    fn u_iii_examples() {
        assert_eq!(constant(&verify_u_iii(1).unwrap()), "0");
        assert_eq!(constant(&verify_u_iii(2).unwrap()), "-15/8");
        assert_eq!(constant(&verify_u_iii(5).unwrap()), "0");
    }

    #[test]
    fn substitute_family_examples() {
        let c3 = cayley::cayley_t(3).unwrap().poly;
        assert!(substitute_family(&c3, Kind::First).unwrap().is_zero());
        let x0 = MultiPoly::var(1, 0);
        assert_eq!(substitute_family(&x0, Kind::First).unwrap(), UniPoly::one());
        let c4 = cayley::cayley_u(4).unwrap().poly;
        assert_eq!(
            substitute_family(&c4, Kind::Second).unwrap(),
            UniPoly::one()
        );
    }

    #[test]
    fn t_i_is_the_substituted_cayley_element() {
        for n in 1..=10 {
            let via_cayley =
                substitute_family(&cayley::cayley_t(n).unwrap().poly, Kind::First).unwrap();
            assert_eq!(t_i_residual(n).unwrap(), via_cayley);
        }
    }

    #[test]
    fn uncorrected_t_i_right_side_is_not_constant() {
        // Without the (-2)^k / k! weight on the gated sum the residual keeps x-terms.
        let n = 4;
        let t = family_table(Kind::First, n);
        let lhs = t_i_residual(n).unwrap().add(&t_i_gated_sum(n, &t[1]));
        let mut bare = UniPoly::zero();
        for k in (1..=n).filter(|k| (n - k).is_multiple_of(2)) {
            let h = q((n + k) / 2 - 1);
            let c =
                q(n) * Rational::new(1, 2) * falling_factorial(&h, k - 1) * binomial_rat(&h, k - 1);
            bare = bare.add(&t[1].pow(k).scale(&c));
        }
        assert!(lhs.sub(&bare).as_constant().is_none());
    }

    #[test]
    fn failing_report_keeps_residual() {
        let r = IdentityReport::new(IdentityId::TI, 2, UniPoly::x());
        assert!(!r.pass);
        assert_eq!(r.computed, None);
        assert!(r.to_line().contains("residual=x"));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"residual\""));
        assert!(json.contains("\"computed\":\"non-constant\""));
    }

    #[test]
    fn n_zero_is_rejected() {
        for id in IdentityId::ALL {
            assert!(verify(id, 0).is_err(), "{id}");
        }
    }

    #[test]
    fn id_parsing() {
        assert_eq!("t-iii".parse::<IdentityId>().unwrap(), IdentityId::TIII);
        assert_eq!("hg-u".parse::<IdentityId>().unwrap(), IdentityId::HgU);
        assert_eq!("U_ii".parse::<IdentityId>().unwrap(), IdentityId::UII);
        assert!("t-iv".parse::<IdentityId>().is_err());
    }

    #[test]
    fn sweep_is_sorted() {
        let reports = sweep(&[IdentityId::UI, IdentityId::TI], 1, 4).unwrap();
        let keys: Vec<_> = reports.iter().map(|r| (r.identity, r.n)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(|r| r.pass));
    }
}
