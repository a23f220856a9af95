//! Dense univariate polynomials over [`Rational`] in the indeterminate `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;

/// Degree of a polynomial. The zero polynomial has degree minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`. Trailing zeros
/// are always stripped, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "RawUniPoly")]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawUniPoly {
    coeffs: Vec<Rational>,
}

impl From<RawUniPoly> for UniPoly {
    fn from(raw: RawUniPoly) -> Self {
        UniPoly::new(raw.coeffs)
    }
}

impl UniPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c x^e`.
    pub fn monomial(c: Rational, e: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = c;
        UniPoly::new(coeffs)
    }

    /// Builds from small integer coefficients, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        UniPoly::new(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            l => Degree::Finite(l - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// The constant value when `deg <= 0`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Exact quotient `self / x^e`, or `None` if a low coefficient is nonzero.
    pub fn div_x_pow(&self, e: usize) -> Option<UniPoly> {
        if self.coeffs.iter().take(e).any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::new(self.coeffs.iter().skip(e).cloned().collect()))
    }

    /// Exact quotient by a nonzero divisor; `None` on a nonzero remainder.
    pub(crate) fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let lead = divisor.leading_coeff()?.recip()?;
        let dl = divisor.coeffs.len();
        if self.coeffs.len() < dl {
            return if self.is_zero() {
                Some(UniPoly::zero())
            } else {
                None
            };
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dl + 1];
        for qi in (0..quot.len()).rev() {
            let c = &rem[qi + dl - 1] * &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[qi + j] -= &(&c * d);
            }
            quot[qi] = c;
        }
        if rem.iter().all(Rational::is_zero) {
            Some(UniPoly::new(quot))
        } else {
            None
        }
    }

    /// Plain-text rendering, highest degree first: `8*x^4 - 8*x^2 + 1`.
    pub fn to_text(&self) -> String {
        crate::render::unipoly_text(self)
    }

    pub fn to_latex(&self) -> String {
        crate::render::unipoly_latex(self)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.to_text())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::add(self, rhs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::sub(self, rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::mul(self, rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(&-Rational::one())
    }
}
