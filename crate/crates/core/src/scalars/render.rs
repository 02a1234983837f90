//! Textual rendering of field elements in a form the expression parser reads back.

use super::poly::Poly;
use super::radical::RadicalSymbol;
use super::ratfunc::RatFunc;
use super::FieldElement;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// How the base variable is printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum VarStyle {
    /// Powers of `q` where every exponent of `s` is even, otherwise powers of `s`.
    #[default]
    Q,
    /// The Jordanian parameter `h`.
    H,
}

/// One `c * var^e` term, `c` nonzero.
struct Mono {
    coeff: BigRational,
    var: &'static str,
    exp: i64,
}

impl Mono {
    fn body(&self) -> String {
        let c = self.coeff.abs();
        if self.exp == 0 {
            return c.to_string();
        }
        let v = if self.exp == 1 {
            self.var.to_string()
        } else {
            format!("{}^{}", self.var, self.exp)
        };
        if c.is_one() {
            v
        } else {
            format!("{c}*{v}")
        }
    }
}

fn join_signed(monos: &[Mono]) -> String {
    let mut out = String::new();
    for (i, m) in monos.iter().enumerate() {
        let neg = m.coeff.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&m.body());
    }
    out
}

/// Terms of `var^shift * p`, highest exponent first.
fn monos(p: &Poly, shift: i64, style: VarStyle, even: bool) -> Vec<Mono> {
    let (var, div) = match style {
        VarStyle::H => ("h", 1),
        VarStyle::Q if even => ("q", 2),
        VarStyle::Q => ("s", 1),
    };
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| Mono {
            coeff: c.clone(),
            var,
            exp: (i as i64 + shift) / div,
        })
        .collect()
}

pub(crate) fn render_ratfunc(r: &RatFunc, style: VarStyle) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let even = r.is_even();
    let num = monos(r.num(), r.shift(), style, even);
    if r.is_laurent() {
        return join_signed(&num);
    }
    let den = monos(r.den(), 0, style, even);
    let num_s = if num.len() == 1 {
        join_signed(&num)
    } else {
        format!("({})", join_signed(&num))
    };
    format!("{num_s}/({})", join_signed(&den))
}

/// True when a rational function prints as a single product without a sum.
fn is_product(r: &RatFunc) -> bool {
    r.is_monomial()
}

pub(crate) fn render_field(x: &FieldElement, style: VarStyle) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (m, r) in x.terms() {
        if m.ids().is_empty() {
            // the unit monomial sorts first, so its own signs print as-is
            parts.push((false, render_ratfunc(r, style)));
            continue;
        }
        let rad = m
            .ids()
            .iter()
            .map(|&id| RadicalSymbol(id).name())
            .collect::<Vec<_>>()
            .join("*");
        let (neg, body) = if r.is_one() {
            (false, rad)
        } else if is_product(r) {
            let neg = r.is_negative_leading();
            let abs = if neg { r.neg() } else { r.clone() };
            if abs.is_one() {
                (neg, rad)
            } else {
                (neg, format!("{}*{rad}", render_ratfunc(&abs, style)))
            }
        } else if r.is_negative_leading() {
            (true, format!("({})*{rad}", render_ratfunc(&r.neg(), style)))
        } else {
            (false, format!("({})*{rad}", render_ratfunc(r, style)))
        };
        parts.push((neg, body));
    }
    let mut out = String::new();
    for (i, (neg, body)) in parts.iter().enumerate() {
        if i == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push_str(if *neg { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}
