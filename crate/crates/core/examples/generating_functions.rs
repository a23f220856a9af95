//! Truncated generating functions and derivative expansions.

use chebder::families::{
    derivative_expansion, family_table, verify_derivative_expansion, verify_genfun,
};
use chebder::Kind;

fn main() -> chebder::Result<()> {
    let order = 20;
    for kind in Kind::BOTH {
        println!(
            "{kind} kind: (1 - 2xt + t^2) sum P_n t^n agrees through t^{}: {}",
            order - 2,
            verify_genfun(kind, order)?
        );
        let table = family_table(kind, 6);
        for (n, p) in table.iter().enumerate() {
            println!(
                "  n={n}  P = {p}   P' = {}   expansion ok: {}",
                derivative_expansion(kind, n),
                verify_derivative_expansion(kind, n)
            );
        }
    }
    Ok(())
}
