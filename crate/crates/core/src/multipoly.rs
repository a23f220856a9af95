//! Sparse multivariate polynomials in `x0, ..., x_{nvars-1}`, with negative
//! powers allowed on `x0` only (the localization at `x0`).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::unipoly::UniPoly;

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically: first by total degree, then by the
/// exponent of the highest-index variable, then the next one down.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[i32]>);

impl Monomial {
    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial in `x0` and polynomial in `x1..`.
///
/// No stored coefficient is zero, so equality of values is equality of term
/// maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// Images of the generators under a ring map into `Q[x]`; `images[i]` is the
/// image of `x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub images: Vec<UniPoly>,
}

impl Substitution {
    pub fn new(images: Vec<UniPoly>) -> Self {
        Substitution { images }
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    /// The generator `x_i`. Panics if `i >= nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "x{i} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        MultiPoly::monomial(nvars, exps, Rational::one()).expect("valid exponent vector")
    }

    /// `c * x^exps`, validating length and the sign restriction.
    pub fn monomial(nvars: usize, exps: Vec<i32>, c: Rational) -> Result<Self> {
        if exps.len() != nvars {
            return Err(Error::NvarsMismatch {
                left: nvars,
                right: exps.len(),
            });
        }
        if exps.iter().skip(1).any(|&e| e < 0) {
            return Err(Error::InvalidArgument(
                "only x0 may carry a negative exponent".into(),
            ));
        }
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::new(exps), c);
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[i32]) -> Rational {
        self.terms
            .get(&Monomial::new(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_nvars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-Rational::one())
    }

    /// Multiplies by `x0^e` (any sign).
    pub fn shift_x0(&self, e: i32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.0.to_vec();
                    exps[0] += e;
                    (Monomial::new(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Maximum total degree over the terms.
    pub fn total_degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// True when every term has total degree `d`. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    pub fn min_x0_exponent(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.0[0]).min()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.min_x0_exponent().is_some_and(|e| e < 0)
    }

    /// Largest variable index that occurs with a nonzero exponent.
    pub fn max_var_used(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|m| m.0.iter().rposition(|&e| e != 0))
            .max()
    }

    /// Formal partial derivative with respect to `x_i`; the power rule covers
    /// negative powers of `x0`.
    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        if i >= self.nvars {
            return out;
        }
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from(e as i64));
        }
        out
    }

    /// Re-embeds into a ring with `nvars` variables. Fails if a dropped
    /// variable is in use.
    pub fn with_nvars(&self, nvars: usize) -> Result<MultiPoly> {
        if let Some(top) = self.max_var_used() {
            if top >= nvars {
                return Err(Error::NvarsMismatch {
                    left: self.nvars,
                    right: nvars,
                });
            }
        }
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; nvars];
            let k = nvars.min(self.nvars);
            exps[..k].copy_from_slice(&m.0[..k]);
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Evaluates the ring map `x_i -> images[i]`.
    ///
    /// Negative powers of `x0` are cleared by multiplying through with the
    /// image of `x0`, then divided back out exactly; a nonzero remainder is an
    /// error.
    pub fn substitute(&self, s: &Substitution) -> Result<UniPoly> {
        if s.images.len() < self.nvars {
            return Err(Error::SubstitutionArity {
                supplied: s.images.len(),
                needed: self.nvars,
            });
        }
        let shift = (-self.min_x0_exponent().unwrap_or(0)).max(0);
        let mut powers: Vec<Vec<UniPoly>> = vec![vec![UniPoly::one()]; self.nvars];
        let mut numerator = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut term = UniPoly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = if i == 0 { e + shift } else { e } as usize;
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e {
                    let next = cache.last().unwrap().mul(&s.images[i]);
                    cache.push(next);
                }
                term = term.mul(&cache[e]);
            }
            numerator = numerator.add(&term);
        }
        if shift == 0 {
            return Ok(numerator);
        }
        let divisor = s.images[0].pow(shift as usize);
        if divisor.is_zero() {
            return Err(Error::NonPolynomial);
        }
        numerator.div_exact(&divisor).ok_or(Error::NonPolynomial)
    }

    pub fn to_text(&self) -> String {
        crate::render::multipoly_text(self)
    }

    pub fn to_latex(&self) -> String {
        crate::render::multipoly_latex(self)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    coeff: Rational,
    exps: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawMultiPoly {
    nvars: usize,
    terms: Vec<RawTerm>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawMultiPoly {
            nvars: self.nvars,
            terms: self
                .terms_desc()
                .map(|(m, c)| RawTerm {
                    coeff: c.clone(),
                    exps: m.0.to_vec(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = RawMultiPoly::deserialize(deserializer)?;
        let mut p = MultiPoly::zero(raw.nvars);
        for t in raw.terms {
            let term = MultiPoly::monomial(raw.nvars, t.exps, t.coeff)
                .map_err(serde::de::Error::custom)?;
            p = p.add(&term).map_err(serde::de::Error::custom)?;
        }
        Ok(p)
    }
}
