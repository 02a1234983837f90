//! Rational functions in one formal variable, kept in a canonical form.

use super::poly::Poly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `var^shift * num / den` with `num(0) != 0`, `den(0) != 0`, `gcd(num, den) = 1`
/// and `den` monic. Zero is `num = 0, shift = 0, den = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct RatFunc {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            shift: 0,
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatFunc::monomial(c, 0)
    }

    /// `c * var^k`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            shift: k,
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    /// Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(RatFunc::zero(), |acc, &(e, c)| {
            acc.add(&RatFunc::monomial(BigRational::from_integer(BigInt::from(c)), e))
        })
    }

    pub fn from_parts(shift: i64, num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let nv = num.valuation();
        let dv = den.valuation();
        let mut num = num.shift_down(nv);
        let mut den = den.shift_down(dv);
        let shift = shift + nv as i64 - dv as i64;
        if !den.is_constant() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.divrem(&g).0;
                den = den.divrem(&g).0;
            }
        }
        let l = den.leading();
        if !l.is_one() {
            let inv = BigRational::one() / l;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// A single `c * var^k` term.
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.coeffs().len() == 1
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.shift == 0 && self.den.is_one() && self.num.is_constant() {
            return Some(self.num.leading());
        }
        None
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            shift: self.shift,
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let m = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - m) as usize);
        let b = other.num.shift_up((other.shift - m) as usize);
        if self.den == other.den {
            return RatFunc::from_parts(m, a.add(&b), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let d1 = self.den.divrem(&g).0;
        let d2 = other.den.divrem(&g).0;
        let num = a.mul(&d2).add(&b.mul(&d1));
        RatFunc::from_parts(m, num, d1.mul(&other.den))
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc {
                shift: self.shift + other.shift,
                num: self.num.mul(&other.num),
                den: Poly::one(),
            };
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.divrem(&g1).0;
        let d2 = other.den.divrem(&g1).0;
        let n2 = other.num.divrem(&g2).0;
        let d1 = self.den.divrem(&g2).0;
        RatFunc::from_parts(self.shift + other.shift, n1.mul(&n2), d1.mul(&d2))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::from_parts(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, mut e: u32) -> RatFunc {
        let mut base = self.clone();
        let mut acc = RatFunc::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Value at `var = x`; `None` on a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        let n = self.num.eval(x);
        if x.is_zero() {
            return match self.shift {
                0 => Some(n / d),
                k if k > 0 => Some(BigRational::zero()),
                _ => None,
            };
        }
        let p = if self.shift >= 0 {
            num_traits::pow(x.clone(), self.shift as usize)
        } else {
            BigRational::one() / num_traits::pow(x.clone(), (-self.shift) as usize)
        };
        Some(p * n / d)
    }

    /// `f(1/var)`.
    pub fn invert_variable(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let shift = -self.shift - self.num.degree() as i64 + self.den.degree() as i64;
        RatFunc::from_parts(shift, self.num.reversed(), self.den.reversed())
    }

    /// True when every exponent (numerator, denominator, shift) is even.
    pub fn is_even(&self) -> bool {
        self.shift % 2 == 0 && self.num.is_even() && self.den.is_even()
    }

    /// The leading numerator coefficient is negative.
    pub fn is_negative_leading(&self) -> bool {
        self.num.leading().is_negative()
    }
}
