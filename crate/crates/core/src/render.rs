//! Text and LaTeX rendering of polynomials.
//!
//! Both formats list terms in descending graded-lex order and write the
//! variables of a monomial from the highest index down, e.g.
//! `x2*x0 - 2*x1^2` / `x_{2}x_{0} - 2x_{1}^{2}`.

use crate::exactnum::Rational;
use crate::multipoly::MultiPoly;
use crate::unipoly::UniPoly;

fn join_signed<I>(terms: I, mono_text: impl Fn(&Rational, &str) -> String) -> String
where
    I: IntoIterator<Item = (Rational, String)>,
{
    let mut out = String::new();
    for (c, mono) in terms {
        let body = mono_text(&c.abs(), &mono);
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn text_term(c: &Rational, mono: &str) -> String {
    match (mono.is_empty(), c.is_one()) {
        (true, _) => c.to_string(),
        (false, true) => mono.to_string(),
        (false, false) => format!("{c}*{mono}"),
    }
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_term(c: &Rational, mono: &str) -> String {
    match (mono.is_empty(), c.is_one()) {
        (true, _) => latex_rational(c),
        (false, true) => mono.to_string(),
        (false, false) => format!("{}{mono}", latex_rational(c)),
    }
}

fn mono_text(exps: &[i32]) -> String {
    exps.iter()
        .enumerate()
        .rev()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{i}")
            } else {
                format!("x{i}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn mono_latex(exps: &[i32]) -> String {
    exps.iter()
        .enumerate()
        .rev()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x_{{{i}}}")
            } else {
                format!("x_{{{i}}}^{{{e}}}")
            }
        })
        .collect()
}

pub fn multipoly_text(p: &MultiPoly) -> String {
    join_signed(
        p.terms_desc()
            .map(|(m, c)| (c.clone(), mono_text(m.exps()))),
        text_term,
    )
}

pub fn multipoly_latex(p: &MultiPoly) -> String {
    join_signed(
        p.terms_desc()
            .map(|(m, c)| (c.clone(), mono_latex(m.exps()))),
        latex_term,
    )
}

fn uni_terms(p: &UniPoly, latex: bool) -> Vec<(Rational, String)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let mono = match (i, latex) {
                (0, _) => String::new(),
                (1, _) => "x".to_string(),
                (_, false) => format!("x^{i}"),
                (_, true) => format!("x^{{{i}}}"),
            };
            (c.clone(), mono)
        })
        .collect()
}

pub fn unipoly_text(p: &UniPoly) -> String {
    join_signed(uni_terms(p, false), text_term)
}

pub fn unipoly_latex(p: &UniPoly) -> String {
    join_signed(uni_terms(p, true), latex_term)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipoly_formats() {
        let f = MultiPoly::monomial(3, vec![1, 0, 1], Rational::one())
            .unwrap()
            .add(&MultiPoly::monomial(3, vec![0, 2, 0], Rational::from(-2)).unwrap())
            .unwrap();
        assert_eq!(multipoly_text(&f), "x2*x0 - 2*x1^2");
        assert_eq!(multipoly_latex(&f), "x_{2}x_{0} - 2x_{1}^{2}");
        assert_eq!(multipoly_text(&MultiPoly::zero(2)), "0");
        let g = MultiPoly::monomial(2, vec![-1, 1], Rational::new(-3, 2)).unwrap();
        assert_eq!(multipoly_text(&g), "-3/2*x1*x0^-1");
        assert_eq!(multipoly_latex(&g), "-\\frac{3}{2}x_{1}x_{0}^{-1}");
    }

    #[test]
    fn unipoly_formats() {
        let t4 = UniPoly::from_ints(&[1, 0, -8, 0, 8]);
        assert_eq!(unipoly_text(&t4), "8*x^4 - 8*x^2 + 1");
        assert_eq!(unipoly_latex(&t4), "8x^{4} - 8x^{2} + 1");
        assert_eq!(unipoly_text(&UniPoly::from_ints(&[-1, -1])), "-x - 1");
        assert_eq!(unipoly_text(&UniPoly::zero()), "0");
    }
}
