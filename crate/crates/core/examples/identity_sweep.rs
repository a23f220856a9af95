//! Sweep the eight identities and print one line per (identity, n).
//!
//!     cargo run --example identity_sweep -- 12

use chebder::identities::{sweep, IdentityId};

fn main() -> chebder::Result<()> {
    let n_to: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let reports = sweep(&IdentityId::ALL, 1, n_to)?;
    for r in &reports {
        println!("{}", r.to_line());
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} checks, {failed} failed", reports.len());
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}
