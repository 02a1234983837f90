//! Exact arithmetic in `Q(s)` with finitely many adjoined square roots.
//!
//! The base variable `s` stands for `q^(1/2)`, so every power of `sqrt(q)` is a
//! Laurent monomial. The same machinery serves the Jordanian field `Q(h)`; only
//! the rendering differs (see [`VarStyle`]).
//!
//! A [`FieldElement`] is a finite sum `sum_m f_m(s) * rho^m` over square-free
//! radical monomials `rho^m`, each `f_m` a canonical rational function. Products
//! reduce `rho_k^2` to its registered square immediately, so two elements are
//! equal exactly when their canonical term maps are equal.

mod poly;
mod radical;
mod ratfunc;
mod render;

pub use radical::{adjoin_radical, RadicalSymbol};
pub use render::VarStyle;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use ratfunc::RatFunc;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot invert an element with {0} radical terms")]
    UnsupportedRadicalInverse(usize),
    #[error("pole at q = 1")]
    PoleAtOne,
    #[error("pole at {0}")]
    Pole(String),
    #[error("radical {0} has no rational value in the limit")]
    IrrationalRadicalLimit(String),
    #[error("radical {0} has a negative square in the limit")]
    NegativeRadicalLimit(String),
    #[error("radical {0} is already defined with a different square")]
    ConflictingDefinition(String),
    #[error("invalid radical {0}: {1}")]
    InvalidRadical(String, String),
    #[error("radical {0} is not invariant under q -> 1/q")]
    NotInversionSymmetric(String),
}

/// Sorted list of distinct radical ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct RadicalMonomial(Vec<u32>);

impl RadicalMonomial {
    fn single(id: u32) -> Self {
        RadicalMonomial(vec![id])
    }

    fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn ids(&self) -> &[u32] {
        &self.0
    }

    /// Product as a monomial plus the ids that appeared twice.
    fn mul(&self, other: &RadicalMonomial) -> (RadicalMonomial, Vec<u32>) {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut shared = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    shared.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        (RadicalMonomial(out), shared)
    }
}

/// Element of `Q(s)[rho_1, ..., rho_k] / (rho_i^2 - f_i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldElement {
    terms: BTreeMap<RadicalMonomial, RatFunc>,
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement::default()
    }

    pub fn one() -> Self {
        FieldElement::from_ratfunc(RatFunc::one())
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        FieldElement::from_ratfunc(RatFunc::constant(r))
    }

    /// `p / r` as a constant.
    pub fn ratio(p: i64, r: i64) -> Self {
        FieldElement::from_rational(BigRational::new(p.into(), r.into()))
    }

    /// The base variable (`s = q^(1/2)`, or `h` in the Jordanian setting).
    pub fn var() -> Self {
        FieldElement::var_pow(1)
    }

    /// `var^k` for any integer `k`.
    pub fn var_pow(k: i64) -> Self {
        FieldElement::from_ratfunc(RatFunc::monomial(BigRational::one(), k))
    }

    pub fn s() -> Self {
        FieldElement::var()
    }

    pub fn q() -> Self {
        FieldElement::var_pow(2)
    }

    /// `q^k = s^(2k)`.
    pub fn q_pow(k: i64) -> Self {
        FieldElement::var_pow(2 * k)
    }

    pub fn h() -> Self {
        FieldElement::var()
    }

    /// Laurent polynomial `sum c * var^e` from `(e, c)` pairs.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        FieldElement::from_ratfunc(RatFunc::laurent(terms))
    }

    pub(crate) fn from_ratfunc(r: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(RadicalMonomial::default(), r);
        }
        FieldElement { terms }
    }

    pub(crate) fn from_radical(sym: RadicalSymbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(RadicalMonomial::single(sym.0), RatFunc::one());
        FieldElement { terms }
    }

    pub(crate) fn as_ratfunc(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&RadicalMonomial::default()).cloned(),
            _ => None,
        }
    }

    pub(crate) fn terms(&self) -> impl Iterator<Item = (&RadicalMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_ratfunc().is_some_and(|r| r.is_one())
    }

    /// Number of distinct radical monomials carried.
    pub fn radical_term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_radical_free(&self) -> bool {
        self.terms.keys().all(|m| m.is_unit())
    }

    /// A single `c * var^k * rho^m` term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|r| r.is_monomial())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_ratfunc().and_then(|r| r.as_constant())
    }

    /// Integer `k` when the element is exactly `var^k`.
    pub fn as_var_power(&self) -> Option<i64> {
        let r = self.as_ratfunc()?;
        (r.is_monomial() && r.num().leading().is_one()).then_some(r.shift())
    }

    /// Sign of the first rendered term.
    pub fn leading_is_negative(&self) -> bool {
        self.terms.values().next().is_some_and(|r| r.is_negative_leading())
    }

    fn add_term(&mut self, m: RadicalMonomial, r: RatFunc) {
        if r.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(r);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&r);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> FieldElement {
        if c.is_zero() {
            return FieldElement::zero();
        }
        FieldElement {
            terms: self.terms.iter().map(|(m, r)| (m.clone(), r.scale(c))).collect(),
        }
    }

    fn mul_ref(&self, other: &FieldElement) -> FieldElement {
        let mut out = FieldElement::zero();
        for (m1, r1) in &self.terms {
            for (m2, r2) in &other.terms {
                let (m, shared) = m1.mul(m2);
                let mut c = r1.mul(r2);
                for id in shared {
                    c = c.mul(&radical::square_of(id));
                }
                out.add_term(m, c);
            }
        }
        out
    }

    /// Multiplicative inverse of a single-term element.
    pub fn inv(&self) -> Result<FieldElement, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.terms.len() > 1 {
            return Err(ScalarError::UnsupportedRadicalInverse(self.terms.len()));
        }
        let (m, r) = self.terms.iter().next().expect("nonempty");
        // 1/(r rho^m) = rho^m / (r * prod f_k)
        let mut denom = r.clone();
        for &id in m.ids() {
            denom = denom.mul(&radical::square_of(id));
        }
        let inv = denom.inv().ok_or(ScalarError::DivisionByZero)?;
        let mut terms = BTreeMap::new();
        terms.insert(m.clone(), inv);
        Ok(FieldElement { terms })
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        if let Some(r) = self.as_ratfunc() {
            return FieldElement::from_ratfunc(r.pow(e));
        }
        let mut acc = FieldElement::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power; negative exponents need an invertible element.
    pub fn powi(&self, e: i64) -> Result<FieldElement, ScalarError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow((-e) as u32))
        }
    }

    /// Substitutes `var = point`, keeping radicals whose limit is irrational as
    /// constant square roots of primes.
    pub fn specialize(&self, point: &BigRational) -> Result<FieldElement, ScalarError> {
        let mut out = FieldElement::zero();
        for (m, r) in &self.terms {
            let v = r.eval(point).ok_or_else(|| ScalarError::Pole(point.to_string()))?;
            if v.is_zero() {
                continue;
            }
            let mut term = FieldElement::from_rational(v);
            for &id in m.ids() {
                let sym = RadicalSymbol(id);
                let sq = radical::square_of(id)
                    .eval(point)
                    .ok_or_else(|| ScalarError::Pole(point.to_string()))?;
                if sq.is_negative() {
                    return Err(ScalarError::NegativeRadicalLimit(sym.name()));
                }
                term = &term * &sqrt_rational(&sq)?;
            }
            out += term;
        }
        Ok(out)
    }

    /// Value at `q = 1` (`s = 1`).
    pub fn classical_limit(&self) -> Result<BigRational, ScalarError> {
        // radicals with a vanishing coefficient at s = 1 must not trigger errors
        let mut total = BigRational::zero();
        for (m, r) in &self.terms {
            let v = r.eval(&BigRational::one()).ok_or(ScalarError::PoleAtOne)?;
            if v.is_zero() {
                continue;
            }
            let mut value = v;
            for &id in m.ids() {
                let sym = RadicalSymbol(id);
                let sq = radical::square_of(id).eval(&BigRational::one()).ok_or(ScalarError::PoleAtOne)?;
                if sq.is_negative() {
                    return Err(ScalarError::NegativeRadicalLimit(sym.name()));
                }
                let root = rational_sqrt(&sq).ok_or_else(|| ScalarError::IrrationalRadicalLimit(sym.name()))?;
                value *= root;
            }
            total += value;
        }
        Ok(total)
    }

    /// `f(1/var)`; radicals must have inversion-symmetric squares.
    pub fn invert_variable(&self) -> Result<FieldElement, ScalarError> {
        let mut out = FieldElement::zero();
        for (m, r) in &self.terms {
            for &id in m.ids() {
                let sq = radical::square_of(id);
                if sq.invert_variable() != sq {
                    return Err(ScalarError::NotInversionSymmetric(RadicalSymbol(id).name()));
                }
            }
            out.add_term(m.clone(), r.invert_variable());
        }
        Ok(out)
    }

    /// Rational value at `var = point`, if one exists.
    pub fn evaluate(&self, point: &BigRational) -> Result<BigRational, ScalarError> {
        let v = self.specialize(point)?;
        v.as_rational().ok_or_else(|| {
            let name = v
                .terms
                .keys()
                .flat_map(|m| m.ids().iter().copied())
                .next()
                .map(|id| RadicalSymbol(id).name())
                .unwrap_or_default();
            ScalarError::IrrationalRadicalLimit(name)
        })
    }

    pub fn render(&self, style: VarStyle) -> String {
        render::render_field(self, style)
    }

    /// Floating-point value at `var = s`, for display only. `None` at a pole or
    /// where a radical's square is negative.
    pub fn approx(&self, s: f64) -> Option<f64> {
        let mut total = 0.0;
        for (m, r) in self.terms() {
            let mut v = approx_ratfunc(r, s)?;
            for &id in m.ids() {
                let sq = approx_ratfunc(&radical::square_of(id), s)?;
                if sq < 0.0 {
                    return None;
                }
                v *= sq.sqrt();
            }
            total += v;
        }
        Some(total)
    }
}

fn approx_poly(p: &poly::Poly, s: f64) -> f64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * s + c.to_f64().unwrap_or(f64::NAN))
}

fn approx_ratfunc(r: &RatFunc, s: f64) -> Option<f64> {
    let den = approx_poly(r.den(), s);
    if den == 0.0 || (s == 0.0 && r.shift() < 0) {
        return None;
    }
    Some(approx_poly(r.num(), s) * s.powi(r.shift() as i32) / den)
}

/// Exact square root of a nonnegative rational, if rational.
pub fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    (&n * &n == *c.numer() && &d * &d == *c.denom()).then(|| BigRational::new(n, d))
}

/// `sqrt(c)` for a nonnegative rational, written over square roots of primes
/// (`sqrt2`, `sqrt3`, ...).
pub fn sqrt_rational(c: &BigRational) -> Result<FieldElement, ScalarError> {
    if c.is_negative() {
        return Err(ScalarError::NegativeRadicalLimit(c.to_string()));
    }
    if c.is_zero() {
        return Ok(FieldElement::zero());
    }
    // sqrt(a/b) = sqrt(a b) / b
    let m: BigInt = c.numer() * c.denom();
    let mut out = FieldElement::from_rational(BigRational::new(BigInt::one(), c.denom().clone()));
    let (square_part, primes) = squarefree_split(&m);
    out = out.scale_rational(&BigRational::from_integer(square_part));
    for p in primes {
        let name = format!("sqrt{p}");
        let sym = adjoin_radical(&name, &FieldElement::from_rational(BigRational::from_integer(p)))?;
        out = &out * &sym.element();
    }
    Ok(out)
}

/// `m = k^2 * p_1 * ... * p_r` with distinct primes; large cofactors are kept whole.
fn squarefree_split(m: &BigInt) -> (BigInt, Vec<BigInt>) {
    let mut rest = m.clone();
    let mut k = BigInt::one();
    let mut primes = Vec::new();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1u64 << 20);
    while &p * &p <= rest && p < limit {
        let mut count = 0;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            count += 1;
        }
        for _ in 0..count / 2 {
            k *= &p;
        }
        if count % 2 == 1 {
            primes.push(p.clone());
        }
        p += 1;
    }
    if rest > BigInt::one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            k *= r;
        } else {
            primes.push(rest);
        }
    }
    primes.sort();
    (k, primes)
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(VarStyle::Q))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(VarStyle::Q))
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl From<BigRational> for FieldElement {
    fn from(r: BigRational) -> Self {
        FieldElement::from_rational(r)
    }
}

impl<'a> Add<&'a FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, other: &'a FieldElement) -> FieldElement {
        let mut out = self.clone();
        for (m, r) in &other.terms {
            out.add_term(m.clone(), r.clone());
        }
        out
    }
}

impl<'a> Sub<&'a FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, other: &'a FieldElement) -> FieldElement {
        let mut out = self.clone();
        for (m, r) in &other.terms {
            out.add_term(m.clone(), r.neg());
        }
        out
    }
}

impl<'a> Mul<&'a FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, other: &'a FieldElement) -> FieldElement {
        self.mul_ref(other)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            terms: self.terms.iter().map(|(m, r)| (m.clone(), r.neg())).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, other: FieldElement) -> FieldElement {
                (&self).$method(&other)
            }
        }
        impl<'a> $trait<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, other: &'a FieldElement) -> FieldElement {
                (&self).$method(other)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, other: FieldElement) -> FieldElement {
                self.$method(&other)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<FieldElement> for FieldElement {
    fn add_assign(&mut self, other: FieldElement) {
        for (m, r) in other.terms {
            self.add_term(m, r);
        }
    }
}

impl<'a> AddAssign<&'a FieldElement> for FieldElement {
    fn add_assign(&mut self, other: &'a FieldElement) {
        for (m, r) in &other.terms {
            self.add_term(m.clone(), r.clone());
        }
    }
}

impl<'a> SubAssign<&'a FieldElement> for FieldElement {
    fn sub_assign(&mut self, other: &'a FieldElement) {
        for (m, r) in &other.terms {
            self.add_term(m.clone(), r.neg());
        }
    }
}

impl<'a> MulAssign<&'a FieldElement> for FieldElement {
    fn mul_assign(&mut self, other: &'a FieldElement) {
        *self = self.mul_ref(other);
    }
}

/// `n!` as a field constant.
pub fn factorial(n: u32) -> FieldElement {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    FieldElement::from_rational(BigRational::from_integer(acc))
}

pub(crate) fn to_i64(r: &BigRational) -> Option<i64> {
    r.is_integer().then(|| r.numer().to_i64()).flatten()
}
