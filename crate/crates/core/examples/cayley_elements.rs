//! Cayley elements from the closed forms, cross-checked against the Dixmier
//! map, in text and LaTeX.
//!
//!     cargo run --example cayley_elements -- 6

use chebder::cayley::{cayley, CayleySource};
use chebder::derivation::dixmier_sigma;
use chebder::identities::substitute_family;
use chebder::Kind;

fn main() -> chebder::Result<()> {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);

    for kind in Kind::BOTH {
        println!("== {kind} kind");
        for n in 2..=n_max {
            let c = cayley(kind, n, CayleySource::ClosedForm)?;
            let sigma = dixmier_sigma(kind, n)?;
            assert_eq!(c.poly, sigma.value);
            let at_family = substitute_family(&c.poly, kind)?;
            println!("C({n}) = {}", c.poly);
            println!("    latex: {}", c.poly.to_latex());
            println!(
                "    terms: {}, normalized: {}",
                c.poly.num_terms(),
                c.is_normalized()
            );
            println!("    at the family: {at_family}");
        }
    }
    Ok(())
}
