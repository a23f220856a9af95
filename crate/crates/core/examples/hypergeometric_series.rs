//! The inner sums of the second identities as term-ratio series, and the
//! same sums as 4F3 values at a rational point.

use chebder::hypergeom::{
    build_series_t, build_series_u, expand_series, pfq_terminating, verify_hypergeom_t,
    verify_hypergeom_u,
};
use chebder::identities::IdentityId;
use chebder::Rational;

fn main() -> chebder::Result<()> {
    let n = 6;
    for k in 0..=n {
        let s = build_series_t(n, k)?;
        let (upper, lower) = s.pfq_parameters();
        let x = Rational::from(3);
        let z = Rational::from(4) / (&x * &x);
        let via_ratio = expand_series(&s)?.eval(&x);
        let via_pfq = s.first_term().eval(&x) * pfq_terminating(&upper, &lower, &z, None)?;
        assert_eq!(via_ratio, via_pfq);
        println!(
            "T-series n={n} k={k}: {} terms, sum = {}  [4F3 at x=3: {via_pfq}]",
            s.num_terms(),
            expand_series(&s)?
        );
    }
    for k in 0..=n {
        println!(
            "U-series n={n} k={k}: sum = {}",
            expand_series(&build_series_u(n, k)?)?
        );
    }

    println!();
    for n in 1..=8 {
        let t = verify_hypergeom_t(n)?;
        let u = verify_hypergeom_u(n)?;
        println!("{}\n{}", t.to_line(), u.to_line());
        assert_eq!(t.expected, IdentityId::HgT.expected_constant(n));
    }
    Ok(())
}
