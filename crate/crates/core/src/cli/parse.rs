//! Expression syntax: `expr = ['-'] tterm (('+' | '-') tterm)*`,
//! `tterm = product ("(x)" product)*`, `product = power (('*' | '/') power)*`,
//! `power = atom ['^' ['-'] int]`, `atom = int | ident | '(' expr ')'`.

use crate::error::Error;
use crate::ncalg::{NCPolynomial, NcError, RewriteSystem};
use crate::reps::rho;
use crate::scalars::{sqrt_rational, FieldElement, RadicalSymbol};
use crate::tensor::{TensorAlgebra, TensorElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Tensor,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier {s}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Tensor => "'(x)'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, Error> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' if chars[i..].starts_with(&['(', 'x', ')']) => {
                i += 3;
                Tok::Tensor
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                i += 1;
                match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                }
            }
            _ if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                Tok::Ident(chars[start..i].iter().collect())
            }
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    expected: "a token".into(),
                    found: format!("'{c}'"),
                })
            }
        };
        out.push((start, tok));
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

/// A parsed expression: a polynomial, or a sum of pure tensors with `slots` factors.
#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Poly(NCPolynomial),
    Tensor { slots: usize, value: TensorElement },
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    rs: &'a RewriteSystem,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, Error> {
        Err(Error::Parse {
            pos: self.pos(),
            expected: expected.into(),
            found: self.peek().describe(),
        })
    }

    /// Signed sum of tensor terms, each a list of slot polynomials.
    fn sum(&mut self) -> Result<Vec<Vec<NCPolynomial>>, Error> {
        let mut terms = Vec::new();
        let mut negate = false;
        if *self.peek() == Tok::Minus {
            self.bump();
            negate = true;
        }
        loop {
            let mut t = self.tterm()?;
            if negate {
                t[0] = t[0].neg();
            }
            terms.push(t);
            match self.peek() {
                Tok::Plus => negate = false,
                Tok::Minus => negate = true,
                _ => return Ok(terms),
            }
            self.bump();
        }
    }

    fn tterm(&mut self) -> Result<Vec<NCPolynomial>, Error> {
        let mut slots = vec![self.product()?];
        while *self.peek() == Tok::Tensor {
            self.bump();
            slots.push(self.product()?);
        }
        Ok(slots)
    }

    fn product(&mut self) -> Result<NCPolynomial, Error> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.free_mul(&self.power()?);
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.power()?;
                    let c = d.as_scalar().filter(|c| !c.is_zero()).ok_or_else(|| Error::Parse {
                        pos,
                        expected: "a nonzero scalar divisor".into(),
                        found: "a polynomial".into(),
                    })?;
                    acc = acc.scale(&c.inv()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<NCPolynomial, Error> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        let Tok::Int(n) = self.peek().clone() else {
            return self.fail("an integer exponent");
        };
        self.bump();
        let e = n.to_i64().filter(|e| *e <= 10_000).ok_or_else(|| Error::Parse {
            pos,
            expected: "an exponent of at most 10000".into(),
            found: n.to_string(),
        })?;
        let e = if neg { -e } else { e };
        if let Some(c) = base.as_scalar() {
            return Ok(NCPolynomial::scalar(c.powi(e)?));
        }
        if e < 0 {
            return Err(Error::Parse {
                pos,
                expected: "a nonnegative exponent on a noncommutative factor".into(),
                found: e.to_string(),
            });
        }
        Ok((0..e).fold(NCPolynomial::one(), |acc, _| acc.free_mul(&base)))
    }

    fn atom(&mut self) -> Result<NCPolynomial, Error> {
        let (pos, save) = (self.pos(), self.at);
        match self.bump() {
            Tok::Int(n) => Ok(NCPolynomial::scalar(FieldElement::from_rational(BigRational::from_integer(n)))),
            Tok::Ident(name) => self.ident(&name),
            Tok::LParen => {
                let terms = self.sum()?;
                if *self.peek() != Tok::RParen {
                    return self.fail("')'");
                }
                self.bump();
                if terms.iter().any(|t| t.len() > 1) {
                    return Err(Error::Parse {
                        pos,
                        expected: "a polynomial inside parentheses".into(),
                        found: "a tensor product".into(),
                    });
                }
                Ok(terms.into_iter().fold(NCPolynomial::zero(), |acc, t| acc.add(&t[0])))
            }
            _ => {
                self.at = save;
                self.fail("an integer, identifier or '('")
            }
        }
    }

    fn ident(&self, name: &str) -> Result<NCPolynomial, Error> {
        if let Some(g) = self.rs.index_of(name) {
            return Ok(NCPolynomial::word(&[g]));
        }
        let scalar = match name {
            "q" => Some(FieldElement::q()),
            "s" => Some(FieldElement::s()),
            "h" => Some(FieldElement::h()),
            _ => scalar_radical(name)?,
        };
        scalar
            .map(NCPolynomial::scalar)
            .ok_or_else(|| Error::Nc(NcError::UnknownGenerator(name.to_string())))
    }
}

/// `rhoN`, `sqrtN` or an already registered radical.
fn scalar_radical(name: &str) -> Result<Option<FieldElement>, Error> {
    let index = |prefix: &str| name.strip_prefix(prefix).and_then(|d| d.parse::<u32>().ok());
    if let Some(n) = index("rho") {
        return Ok(Some(rho(n)));
    }
    if let Some(n) = index("sqrt") {
        return Ok(Some(sqrt_rational(&BigRational::from_integer(n.into()))?));
    }
    Ok(RadicalSymbol::lookup(name).map(|r| r.element()))
}

/// Parses `src` over the generators of `rs`. Nothing is normalized.
pub fn parse(src: &str, rs: &RewriteSystem) -> Result<Parsed, Error> {
    let mut p = Parser { toks: lex(src)?, at: 0, rs };
    let terms = p.sum()?;
    if *p.peek() != Tok::End {
        return p.fail("an operator or end of input");
    }
    let slots = terms[0].len();
    if slots == 1 && terms.iter().all(|t| t.len() == 1) {
        return Ok(Parsed::Poly(terms.into_iter().fold(NCPolynomial::zero(), |acc, t| acc.add(&t[0]))));
    }
    if let Some(bad) = terms.iter().find(|t| t.len() != slots) {
        return Err(Error::Parse {
            pos: 0,
            expected: format!("{slots} tensor factors in every term"),
            found: format!("{} factors", bad.len()),
        });
    }
    let value = terms
        .iter()
        .fold(TensorElement::zero(), |acc, t| acc.add(&TensorElement::pure(t)));
    Ok(Parsed::Tensor { slots, value })
}

/// Parses and normal-orders; tensors are normalized slot by slot.
pub fn normalize(src: &str, rs: &RewriteSystem) -> Result<String, Error> {
    match parse(src, rs)? {
        Parsed::Poly(p) => Ok(rs.render(&rs.normal_form(&p)?)),
        Parsed::Tensor { slots, value } => {
            let ta = TensorAlgebra::power(rs, slots);
            let mut out = TensorElement::zero();
            for (words, c) in value.terms() {
                let parts: Vec<NCPolynomial> = words
                    .iter()
                    .map(|w| rs.normal_form(&NCPolynomial::monomial(w.clone(), FieldElement::one())))
                    .collect::<Result<_, _>>()?;
                out = out.add(&TensorElement::pure(&parts).scale(c));
            }
            Ok(crate::tensor::Ring::render(&ta, &out))
        }
    }
}
