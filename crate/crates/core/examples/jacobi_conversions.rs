//! Chebyshev polynomials as normalized Jacobi polynomials with
//! alpha = beta = -1/2 and alpha = beta = 1/2.

use chebder::exactnum::{binomial_rat, factorial, pochhammer};
use chebder::families::{chebyshev_t, chebyshev_u, jacobi_p};
use chebder::Rational;

fn main() -> chebder::Result<()> {
    let minus_half = Rational::new(-1, 2);
    let half = Rational::new(1, 2);
    for n in 0..=10usize {
        let p = jacobi_p(n, &minus_half, &minus_half)?;
        let lhs = p.scale(&factorial(n));
        let rhs = chebyshev_t(n).scale(&pochhammer(&half, n));
        let q = jacobi_p(n, &half, &half)?;
        let lhs_u = q.scale(&Rational::from(n as i64 + 1));
        let rhs_u = chebyshev_u(n).scale(&binomial_rat(&(Rational::from(n as i64) + &half), n));
        println!(
            "n={n:2}  P(-1/2,-1/2) = {p}\n       T ok: {}  U ok: {}",
            lhs == rhs,
            lhs_u == rhs_u
        );
    }
    Ok(())
}
