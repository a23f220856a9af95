//! Exact computer algebra for the Chebyshev derivations.
//!
//! The Chebyshev derivation of the first (second) kind acts on
//! `Q[x0, ..., xn]` so that substituting `x_i = T_i(x)` (`U_i(x)`) turns it
//! into `d/dx`. Every element of its kernel therefore becomes a polynomial
//! identity for the family. This crate builds the derivations, produces their
//! Cayley kernel elements both by closed form and through the Dixmier map,
//! and checks the resulting identities (including the Jacobi and
//! hypergeometric forms) in exact rational arithmetic.
//!
//! ```
//! use chebder::{cayley, identities, Kind};
//!
//! let c = cayley::cayley_t(2).unwrap();
//! assert_eq!(c.poly.to_text(), "x2*x0 - 2*x1^2");
//! let value = identities::substitute_family(&c.poly, Kind::First).unwrap();
//! assert_eq!(value.as_constant().unwrap().to_string(), "-1");
//! ```

pub mod cayley;
pub mod cli;
pub mod derivation;
pub mod errata;
pub mod error;
pub mod exactnum;
pub mod families;
pub mod hypergeom;
pub mod identities;
pub mod multipoly;
pub mod render;
pub mod unipoly;

use std::fmt;

pub use error::{Error, Result};
pub use exactnum::Rational;
pub use multipoly::{MultiPoly, Substitution};
pub use unipoly::UniPoly;

/// Which Chebyshev family (and matching derivation) is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// `T_n`, derivation `D_T`.
    First,
    /// `U_n`, derivation `D_U`.
    Second,
}

impl Kind {
    pub const BOTH: [Kind; 2] = [Kind::First, Kind::Second];

    pub fn name(self) -> &'static str {
        match self {
            Kind::First => "first",
            Kind::Second => "second",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
