//! Randomized property checks with a fixed seed, shared by the `properties`
//! and `acceptance` targets.

use chebder::cayley::{cayley, CayleySource};
use chebder::derivation::make_derivation;
use chebder::exactnum::{cheb_constant, falling_factorial, pochhammer};
use chebder::families::family_table;
use chebder::{Kind, MultiPoly, Rational, Substitution, UniPoly};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub const SEED: u64 = 0x5eed_c0de;

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

fn check<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    TestRunner::new(config(cases))
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub fn rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, b)| Rational::new(a, b))
}

pub fn unipoly() -> impl Strategy<Value = UniPoly> {
    vec(rat(), 0..5).prop_map(UniPoly::new)
}

pub fn multipoly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    vec((vec(0i32..3, nvars), rat()), 0..5).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(MultiPoly::zero(nvars), |acc, (e, c)| {
                acc.add(&MultiPoly::monomial(nvars, e, c).unwrap()).unwrap()
            })
    })
}

fn kind() -> impl Strategy<Value = Kind> {
    prop_oneof![Just(Kind::First), Just(Kind::Second)]
}

pub fn unipoly_ring() -> Result<(), String> {
    check(128, (unipoly(), unipoly(), unipoly()), |(a, b, c)| {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&UniPoly::zero()), a.clone());
        prop_assert_eq!(a.mul(&UniPoly::one()), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(
            a.mul(&b).derivative(),
            a.derivative().mul(&b).add(&a.mul(&b.derivative()))
        );
        Ok(())
    })
}

pub fn multipoly_ring() -> Result<(), String> {
    check(
        96,
        (multipoly(3), multipoly(3), multipoly(3)),
        |(a, b, c)| {
            let add = |p: &MultiPoly, q: &MultiPoly| p.add(q).unwrap();
            let mul = |p: &MultiPoly, q: &MultiPoly| p.mul(q).unwrap();
            prop_assert_eq!(add(&a, &b), add(&b, &a));
            prop_assert_eq!(mul(&a, &b), mul(&b, &a));
            prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
            prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
            prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
            prop_assert_eq!(mul(&a, &MultiPoly::one(3)), a.clone());
            prop_assert!(a.sub(&a).unwrap().is_zero());
            Ok(())
        },
    )
}

pub fn partials() -> Result<(), String> {
    check(
        96,
        (multipoly(3), multipoly(3), 0usize..3, 0usize..3),
        |(f, g, i, j)| {
            let lhs = f.mul(&g).unwrap().partial(i);
            let rhs = f
                .partial(i)
                .mul(&g)
                .unwrap()
                .add(&f.mul(&g.partial(i)).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(f.partial(i).partial(j), f.partial(j).partial(i));
            Ok(())
        },
    )
}

pub fn derivation_leibniz() -> Result<(), String> {
    check(
        96,
        (kind(), multipoly(6), multipoly(6), rat()),
        |(kind, f, g, c)| {
            let d = make_derivation(kind, 5);
            let lhs = d.apply(&f.mul(&g).unwrap()).unwrap();
            let rhs = d
                .apply(&f)
                .unwrap()
                .mul(&g)
                .unwrap()
                .add(&f.mul(&d.apply(&g).unwrap()).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
            let lin = d.apply(&f.scale(&c).add(&g).unwrap()).unwrap();
            prop_assert_eq!(
                lin,
                d.apply(&f)
                    .unwrap()
                    .scale(&c)
                    .add(&d.apply(&g).unwrap())
                    .unwrap()
            );
            Ok(())
        },
    )
}

pub fn substitution_homomorphism() -> Result<(), String> {
    check(96, (kind(), multipoly(4), multipoly(4)), |(kind, f, g)| {
        let s = Substitution::new(family_table(kind, 3));
        let sub = |p: &MultiPoly| p.substitute(&s).unwrap();
        prop_assert_eq!(sub(&f.mul(&g).unwrap()), sub(&f).mul(&sub(&g)));
        prop_assert_eq!(sub(&f.add(&g).unwrap()), sub(&f).add(&sub(&g)));
        prop_assert_eq!(sub(&MultiPoly::one(4)), UniPoly::one());
        Ok(())
    })
}

pub fn factorial_recursions() -> Result<(), String> {
    check(128, (rat(), 0usize..12, 0usize..200), |(a, m, n)| {
        let mq = Rational::from(m as i64);
        prop_assert_eq!(
            falling_factorial(&a, m + 1),
            falling_factorial(&a, m) * (&a - &mq)
        );
        prop_assert_eq!(pochhammer(&a, m + 1), pochhammer(&a, m) * (&a + &mq));
        prop_assert_eq!(cheb_constant(n + 4), cheb_constant(n));
        prop_assert_eq!(cheb_constant(n + 2), -cheb_constant(n));
        Ok(())
    })
}

pub fn cayley_shape() -> Result<(), String> {
    check(24, (kind(), 2usize..=16), |(kind, n)| {
        let c = cayley(kind, n, CayleySource::ClosedForm).unwrap();
        prop_assert!(c.poly.is_homogeneous_of(n as i64));
        let mut lead = vec![0; n + 1];
        lead[n] = 1;
        lead[0] = n as i32 - 1;
        prop_assert!(c.poly.coeff(&lead).is_one());
        // x_n occurs only in the leading monomial.
        let with_xn = c
            .poly
            .terms_desc()
            .filter(|(m, _)| m.exps()[n] != 0)
            .count();
        prop_assert_eq!(with_xn, 1);
        prop_assert!(!c.poly.has_negative_exponents());
        Ok(())
    })
}

fn run_cli(args: &[String]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = chebder::cli::run(
        std::iter::once("chebder".to_string()).chain(args.iter().cloned()),
        &mut out,
        &mut err,
    );
    (code, out)
}

pub fn cli_determinism() -> Result<(), String> {
    let format = prop_oneof![Just("text"), Just("latex"), Just("json")];
    let kind = prop_oneof![Just("first"), Just("second")];
    let method = prop_oneof![Just("closed"), Just("dixmier")];
    check(
        32,
        (kind, 1usize..=8, format, method),
        |(kind, n, format, method)| {
            let args: Vec<String> = [
                "cayley",
                "--kind",
                kind,
                "--n",
                &n.to_string(),
                "--format",
                format,
                "--method",
                method,
            ]
            .iter()
            .map(|s| s.to_string())
            .collect();
            let first = run_cli(&args);
            let second = run_cli(&args);
            prop_assert_eq!(first.0, 0);
            prop_assert_eq!(&first, &second);
            if format == "json" {
                let text = String::from_utf8(first.1).unwrap();
                let p: MultiPoly = serde_json::from_str(text.trim()).unwrap();
                prop_assert_eq!(serde_json::to_string(&p).unwrap(), text.trim());
            }
            Ok(())
        },
    )
}

pub fn json_round_trip() -> Result<(), String> {
    check(96, (unipoly(), multipoly(3)), |(u, m)| {
        let su = serde_json::to_string(&u).unwrap();
        let back: UniPoly = serde_json::from_str(&su).unwrap();
        prop_assert_eq!(&back, &u);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), su);
        let sm = serde_json::to_string(&m).unwrap();
        let back: MultiPoly = serde_json::from_str(&sm).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), sm);
        Ok(())
    })
}

pub type Property = (&'static str, fn() -> Result<(), String>);

pub const ALL: &[Property] = &[
    ("unipoly ring axioms", unipoly_ring),
    ("multipoly ring axioms", multipoly_ring),
    ("partial derivatives", partials),
    ("derivation Leibniz rule", derivation_leibniz),
    ("substitution homomorphism", substitution_homomorphism),
    ("factorial recursions", factorial_recursions),
    ("cayley homogeneity and leading term", cayley_shape),
    ("cli determinism", cli_determinism),
    ("json round trip", json_round_trip),
];
