//! Derivations of `Q[x0, ..., xn]` (extended to the localization at `x0`),
//! the two Chebyshev derivations, and the Dixmier map.

use crate::error::{Error, Result};
use crate::exactnum::{factorial, Rational};
use crate::multipoly::{Monomial, MultiPoly};
use crate::Kind;

/// A derivation, determined by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    nvars: usize,
    images: Vec<MultiPoly>,
}

impl Derivation {
    /// Panics if an image lives in a ring with a different number of
    /// variables than `images.len()`.
    pub fn new(images: Vec<MultiPoly>) -> Self {
        let nvars = images.len();
        assert!(images.iter().all(|p| p.nvars() == nvars));
        Derivation { nvars, images }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `D(x_i)`.
    pub fn image(&self, i: usize) -> &MultiPoly {
        &self.images[i]
    }

    pub fn images(&self) -> &[MultiPoly] {
        &self.images
    }

    /// `D(x_i)` involves only `x_j` with `j < i`, for every `i`.
    pub fn is_triangular(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, img)| img.max_var_used().is_none_or(|j| j < i))
    }

    /// `D(f) = sum_i (df/dx_i) D(x_i)`.
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.nvars() != self.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: f.nvars(),
            });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let d = f.partial(i);
            if d.is_zero() {
                continue;
            }
            out = out.add(&d.mul(img)?)?;
        }
        Ok(out)
    }

    /// `D^k(f)`.
    pub fn apply_power(&self, f: &MultiPoly, k: usize) -> Result<MultiPoly> {
        let mut cur = f.clone();
        for _ in 0..k {
            if cur.is_zero() {
                break;
            }
            cur = self.apply(&cur)?;
        }
        Ok(cur)
    }

    pub fn is_in_kernel(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.apply(f)?.is_zero())
    }
}

/// `D_T` on `x0..xn`:
/// `D_T(x_m) = m (sum_{k=1}^{m-1} (1-(-1)^k) x_{m-k} + (1-(-1)^m)/2 x0)`.
pub fn make_derivation_t(n: usize) -> Derivation {
    let nvars = n + 1;
    let images = (0..=n)
        .map(|m| {
            let mut img = MultiPoly::zero(nvars);
            // only odd k survive (1 - (-1)^k)
            for k in (1..m).filter(|k| k % 2 == 1) {
                img = img
                    .add(&MultiPoly::var(nvars, m - k).scale(&Rational::from(2)))
                    .unwrap();
            }
            if m % 2 == 1 {
                img = img.add(&MultiPoly::var(nvars, 0)).unwrap();
            }
            img.scale(&Rational::from(m as i64))
        })
        .collect();
    Derivation::new(images)
}

/// `D_U` on `x0..xn`:
/// `D_U(x_m) = sum_{k=0}^{m-1} (1+(-1)^(m-k+1)) (k+1) x_k`.
pub fn make_derivation_u(n: usize) -> Derivation {
    let nvars = n + 1;
    let images = (0..=n)
        .map(|m| {
            let mut img = MultiPoly::zero(nvars);
            for k in (0..m).filter(|k| (m - k) % 2 == 1) {
                img = img
                    .add(&MultiPoly::var(nvars, k).scale(&Rational::from(2 * (k as i64 + 1))))
                    .unwrap();
            }
            img
        })
        .collect();
    Derivation::new(images)
}

pub fn make_derivation(kind: Kind, n: usize) -> Derivation {
    match kind {
        Kind::First => make_derivation_t(n),
        Kind::Second => make_derivation_u(n),
    }
}

/// The local slice `lambda` with `D(lambda) = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaKind {
    /// `-x1/x0`, for `D_T`.
    MinusX1OverX0,
    /// `-x1/(2 x0)`, for `D_U`.
    MinusX1OverTwoX0,
}

impl LambdaKind {
    pub fn for_kind(kind: Kind) -> Self {
        match kind {
            Kind::First => LambdaKind::MinusX1OverX0,
            Kind::Second => LambdaKind::MinusX1OverTwoX0,
        }
    }

    /// `c` in `lambda = -x1 / (c x0)`.
    pub fn scale(self) -> i64 {
        match self {
            LambdaKind::MinusX1OverX0 => 1,
            LambdaKind::MinusX1OverTwoX0 => 2,
        }
    }

    /// `lambda^k / k!` as a single Laurent monomial.
    fn power_over_factorial(self, nvars: usize, k: usize) -> MultiPoly {
        let c = Rational::sign_pow(k as i64)
            / (Rational::from(self.scale()).pow(k as u32) * factorial(k));
        let mut exps = vec![0; nvars];
        exps[0] = -(k as i32);
        exps[1] = k as i32;
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::new(exps), c);
        p
    }
}

/// `x0^(n-1) sigma(x_n)`, the cleared Dixmier image of `x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DixmierElement {
    pub n: usize,
    pub kind: Kind,
    pub lambda: LambdaKind,
    pub value: MultiPoly,
}

/// `sigma(x_n) = sum_{k=0}^{n} D^k(x_n) lambda^k / k!` in the localization at
/// `x0`. The sum is finite because `D^{n+1}(x_n) = 0`.
pub fn sigma_laurent(kind: Kind, n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the Dixmier map needs n >= 1".into(),
        ));
    }
    let d = make_derivation(kind, n);
    let lambda = LambdaKind::for_kind(kind);
    let nvars = n + 1;
    let mut acc = MultiPoly::zero(nvars);
    let mut dk = MultiPoly::var(nvars, n);
    for k in 0..=n {
        acc = acc.add(&dk.mul(&lambda.power_over_factorial(nvars, k))?)?;
        dk = d.apply(&dk)?;
    }
    Ok(acc)
}

pub fn dixmier_sigma(kind: Kind, n: usize) -> Result<DixmierElement> {
    let value = sigma_laurent(kind, n)?.shift_x0(n as i32 - 1);
    if value.has_negative_exponents() {
        return Err(Error::ResidualNegativeExponent { n });
    }
    Ok(DixmierElement {
        n,
        kind,
        lambda: LambdaKind::for_kind(kind),
        value,
    })
}

/// `D(lambda) = -1`, checked as `x0 D(x1) - x1 D(x0) = c x0^2`.
pub fn check_lambda_normalization(kind: Kind, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("lambda needs x1, so n >= 1".into()));
    }
    let d = make_derivation(kind, n);
    let nvars = n + 1;
    let x0 = MultiPoly::var(nvars, 0);
    let x1 = MultiPoly::var(nvars, 1);
    let lhs = x0.mul(d.image(1))?.sub(&x1.mul(d.image(0))?)?;
    let c = Rational::from(LambdaKind::for_kind(kind).scale());
    Ok(lhs == x0.mul(&x0)?.scale(&c))
}
