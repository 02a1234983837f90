//! q-numbers, q-factorials, q-shifted factorials and truncated basic hypergeometric series.

use crate::error::Error;
use crate::scalars::FieldElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QNumberConvention {
    /// `[n]_q = (1 - q^n)/(1 - q)`.
    Heine,
    /// `[[n]]_q = (q^n - q^-n)/(q - q^-1)`.
    Symmetric,
}

/// `[n]_b = 1 + b + ... + b^(n-1)` for an arbitrary base `b`; `[-n]_b = -b^-n [n]_b`.
pub fn heine_number_base(n: i64, base: &FieldElement) -> FieldElement {
    let m = n.unsigned_abs();
    let mut acc = FieldElement::zero();
    let mut p = FieldElement::one();
    for _ in 0..m {
        acc += &p;
        p = &p * base;
    }
    if n >= 0 {
        acc
    } else {
        let binv = base.inv().expect("q-number base is a nonzero monomial");
        -(acc * binv.pow(m as u32))
    }
}

pub fn q_number(n: i64, conv: QNumberConvention) -> FieldElement {
    match conv {
        QNumberConvention::Heine => heine_number_base(n, &FieldElement::q()),
        QNumberConvention::Symmetric => {
            // q^(n-1) + q^(n-3) + ... + q^(1-n)
            let m = n.unsigned_abs() as i64;
            let mut acc = FieldElement::zero();
            for k in 0..m {
                acc += FieldElement::q_pow(m - 1 - 2 * k);
            }
            if n >= 0 {
                acc
            } else {
                -acc
            }
        }
    }
}

/// `[[n]]_q`.
pub fn sym(n: i64) -> FieldElement {
    q_number(n, QNumberConvention::Symmetric)
}

pub fn q_factorial(n: u32, conv: QNumberConvention) -> FieldElement {
    (1..=n as i64).fold(FieldElement::one(), |acc, k| acc * q_number(k, conv))
}

/// `[n]_b!` in base `b`.
pub fn heine_factorial_base(n: u32, base: &FieldElement) -> FieldElement {
    (1..=n as i64).fold(FieldElement::one(), |acc, k| acc * heine_number_base(k, base))
}

/// `(x; q)_n = prod_{k<n} (1 - x q^k)`.
pub fn q_shifted_factorial(x: &FieldElement, n: u32) -> FieldElement {
    (0..n as i64).fold(FieldElement::one(), |acc, k| acc * (FieldElement::one() - x * &FieldElement::q_pow(k)))
}

/// `(x_1, ..., x_m; q)_n = prod_i (x_i; q)_n`.
pub fn q_shifted_factorial_multi(xs: &[FieldElement], n: u32) -> FieldElement {
    xs.iter().fold(FieldElement::one(), |acc, x| acc * q_shifted_factorial(x, n))
}

/// Coefficients of `z^n`, `n <= big_n`, in the basic hypergeometric series with
/// upper parameters `a` and lower parameters `b`.
pub fn basic_hypergeometric_coefficients(
    a: &[FieldElement],
    b: &[FieldElement],
    big_n: u32,
) -> Result<Vec<FieldElement>, Error> {
    let e = 1 + b.len() as i64 - a.len() as i64;
    let mut out = Vec::with_capacity(big_n as usize + 1);
    for n in 0..=big_n {
        let den = q_shifted_factorial(&FieldElement::q(), n) * q_shifted_factorial_multi(b, n);
        if den.is_zero() {
            return Err(Error::PoleInLowerParameter(n as usize));
        }
        let sign = if n % 2 == 1 { -FieldElement::one() } else { FieldElement::one() };
        let nn = n as i64;
        let factor = (sign * FieldElement::q_pow(nn * (nn - 1) / 2)).powi(e)?;
        let num = q_shifted_factorial_multi(a, n) * factor;
        out.push(num.checked_div(&den)?);
    }
    Ok(out)
}

/// Evaluates `sum c_n z^n`.
pub fn eval_series(coeffs: &[FieldElement], z: &FieldElement) -> FieldElement {
    coeffs.iter().rev().fold(FieldElement::zero(), |acc, c| acc * z + c)
}

pub fn basic_hypergeometric_partial(
    a: &[FieldElement],
    b: &[FieldElement],
    z: &FieldElement,
    big_n: u32,
) -> Result<FieldElement, Error> {
    Ok(eval_series(&basic_hypergeometric_coefficients(a, b, big_n)?, z))
}

/// Coefficients `1/[n]_q!` of the q-exponential.
pub fn q_exponential_coefficients(big_n: u32) -> Vec<FieldElement> {
    (0..=big_n)
        .map(|n| {
            q_factorial(n, QNumberConvention::Heine)
                .inv()
                .expect("q-factorials are radical-free and nonzero")
        })
        .collect()
}

pub fn q_exponential_partial(z: &FieldElement, big_n: u32) -> FieldElement {
    eval_series(&q_exponential_coefficients(big_n), z)
}

/// Coefficients of `1phi0(0; -; q, (1-q) z)` in powers of `z`.
pub fn phi10_exponential_coefficients(big_n: u32) -> Result<Vec<FieldElement>, Error> {
    let c = basic_hypergeometric_coefficients(&[FieldElement::zero()], &[], big_n)?;
    let one_minus_q = FieldElement::one() - FieldElement::q();
    Ok(c.into_iter()
        .enumerate()
        .map(|(n, x)| x * one_minus_q.pow(n as u32))
        .collect())
}
