//! Corrections to published closed forms, as established by the Dixmier and
//! iterated-derivation routes.
//!
//! Each entry names the formula, the published shape, and the shape the crate
//! implements. The test suite checks every entry: the corrected form agrees
//! with the oracle and, where it can be stated as code, the published form
//! does not.

/// Bumped whenever an entry is added or changed.
pub const ERRATA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub id: &'static str,
    pub formula: &'static str,
    pub published: &'static str,
    pub corrected: &'static str,
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        id: "du-lower-bound",
        formula: "D_U(x_n)",
        published: "sum_{k=1}^{n-1} (1+(-1)^(n-k+1)) (k+1) x_k",
        corrected: "sum_{k=0}^{n-1} (1+(-1)^(n-k+1)) (k+1) x_k  (keeps the x0 term; D_U(x1) = 2 x0)",
    },
    Erratum {
        id: "du-derivative-expansion",
        formula: "d/dx U_n",
        published: "sum_{k=0}^{[n/2]} (n-2k) U_{n-2k-1}",
        corrected: "sum_{k=0}^{[n/2]} 2 (n-2k) U_{n-2k-1}",
    },
    Erratum {
        id: "dkt-missing-n",
        formula: "D_T^k(x_n)",
        published: "2^k sum_i ... x_{n-k-2i} - [n-k even] 2^(k-1) h^(k-1 falling) C(h,k-1) x0",
        corrected: "n 2^k sum_i ... x_{n-k-2i} - [n-k even] n 2^(k-1) h^(k-1 falling) C(h,k-1) x0",
    },
    Erratum {
        id: "sigma-t-extra-n",
        formula: "x0^(n-1) sigma(x_n), first kind, intermediate form",
        published: "gated term carries an extra factor n inside the k-sum",
        corrected: "no extra factor: (-2)^k n/k! ( ... - (1+(-1)^(n-k))/4 h^(k-1 falling) C(h,k-1) x1^k x0^(n-k) )",
    },
    Erratum {
        id: "cu-falling-factorial",
        formula: "C_U(x0..xn)",
        published: "(n-i-1)^(k-1 falling)",
        corrected: "(n-i)^(k-1 falling), matching the k-th derivative formula for D_U",
    },
    Erratum {
        id: "cu5-extra-x1",
        formula: "C_U(x0..x5) listed example",
        published: "2 x0^2 x1 x1^3 (degree 6)",
        corrected: "2 x0^2 x1^3",
    },
    Erratum {
        id: "ti-gated-weight",
        formula: "first-kind identity (i), right-hand side",
        published: "n sum_k (1+(-1)^(n-k))/4 h^(k-1 falling) C(h,k-1) T_1^k + cos(pi n/2)",
        corrected: "n sum_k (-2)^k/k! (1+(-1)^(n-k))/4 h^(k-1 falling) C(h,k-1) T_1^k + cos(pi n/2)",
    },
];

/// Markdown rendering of the table.
pub fn to_markdown() -> String {
    let mut out = format!("# Errata (version {ERRATA_VERSION})\n\n");
    out.push_str("| id | formula | published | corrected |\n|---|---|---|---|\n");
    for e in ERRATA {
        out.push_str(&format!(
            "| `{}` | {} | `{}` | `{}` |\n",
            e.id, e.formula, e.published, e.corrected
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley;
    use crate::derivation::{dixmier_sigma, make_derivation};
    use crate::exactnum::{binomial, falling_factorial, Rational};
    use crate::families::chebyshev_u_table;
    use crate::multipoly::MultiPoly;
    use crate::unipoly::UniPoly;
    use crate::Kind;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = ERRATA.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), ERRATA.len());
        assert!(to_markdown().contains("cu-falling-factorial"));
    }

    #[test]
    fn published_du_misses_x0() {
        // k starting at 1 would leave D_U(x1) = 0.
        let d = make_derivation(Kind::Second, 3);
        assert_eq!(d.image(1), &MultiPoly::var(4, 0).scale(&Rational::from(2)));
    }

    #[test]
    fn published_u_expansion_is_off_by_two() {
        let u = chebyshev_u_table(6);
        let n = 5;
        let published = (0..=n / 2)
            .filter(|k| n - 2 * k > 0)
            .map(|k| u[n - 2 * k - 1].scale(&Rational::from((n - 2 * k) as i64)))
            .fold(UniPoly::zero(), |a, p| a.add(&p));
        assert_ne!(published, u[n].derivative());
        assert_eq!(published.scale(&Rational::from(2)), u[n].derivative());
    }

    #[test]
    fn published_dkt_is_off_by_n() {
        let d = make_derivation(Kind::First, 4);
        let oracle = d.apply(&MultiPoly::var(5, 4)).unwrap();
        let published = cayley::dk_closed_t(4, 1)
            .unwrap()
            .scale(&Rational::new(1, 4));
        assert_ne!(published, oracle);
    }

    #[test]
    fn published_cu_falling_factorial_disagrees() {
        let n = 4usize;
        let nvars = n + 1;
        let mut alt = MultiPoly::var(nvars, n).shift_x0(n as i32 - 1);
        for k in 1..=n {
            let outer = Rational::sign_pow(k as i64) / crate::exactnum::factorial(k);
            for i in 0..=(n - k) / 2 {
                let c = &outer
                    * falling_factorial(&Rational::from((n - i - 1) as i64), k - 1)
                    * binomial((k + i - 1) as i64, (k - 1) as i64)
                    * Rational::from((n - k - 2 * i + 1) as i64);
                let mut exps = vec![0; nvars];
                exps[n - k - 2 * i] += 1;
                exps[1] += k as i32;
                exps[0] += n as i32 - 1 - k as i32;
                alt = alt
                    .add(&MultiPoly::monomial(nvars, exps, c).unwrap())
                    .unwrap();
            }
        }
        assert_ne!(alt, dixmier_sigma(Kind::Second, n).unwrap().value);
        assert_eq!(
            cayley::cayley_u_closed(n).unwrap(),
            dixmier_sigma(Kind::Second, n).unwrap().value
        );
    }

    #[test]
    fn cu5_is_homogeneous() {
        let c = cayley::cayley_u(5).unwrap();
        assert!(c.poly.is_homogeneous_of(5));
        assert_eq!(c.poly.coeff(&[2, 3, 0, 0, 0, 0]), Rational::from(2));
    }
}
