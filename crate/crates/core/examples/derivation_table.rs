//! Images of x_0..x_n under both Chebyshev derivations, and a check that
//! each derivation kills its own Cayley elements.
//!
//!     cargo run --example derivation_table -- 8

use chebder::cayley::{cayley_sweep, in_kernel, CayleySource};
use chebder::derivation::make_derivation;
use chebder::Kind;

fn main() -> chebder::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);

    for kind in Kind::BOTH {
        let d = make_derivation(kind, n);
        println!("{kind} kind (triangular: {})", d.is_triangular());
        for (m, img) in d.images().iter().enumerate() {
            println!("  D(x{m}) = {img}");
        }
    }

    println!();
    for kind in Kind::BOTH {
        let all = cayley_sweep(kind, n, CayleySource::ClosedForm)?;
        let killed = all
            .iter()
            .map(in_kernel)
            .collect::<chebder::Result<Vec<_>>>()?;
        println!(
            "{kind} kind: D(C_n) = 0 for n = 1..{n}: {}",
            killed.iter().all(|&b| b)
        );
    }
    Ok(())
}
