//! Dense univariate polynomials in `x` over the rationals.
//!
//! These are the coefficient ring when a bivariate polynomial is viewed as a
//! polynomial in `y`, and double as truncated power series rows for jets.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rational::ExactRational;

/// Coefficients in ascending order of degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<ExactRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^n`
    pub fn monomial(c: ExactRational, n: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); n + 1];
        coeffs[n] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(ExactRational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(ExactRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> ExactRational {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> ExactRational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Largest `l` with `x^l` dividing `self`; `None` for zero.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &ExactRational::from_integer(i as i64))
                .collect(),
        )
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// Product with all terms of degree above `n` discarded.
    pub fn mul_trunc(&self, other: &Self, n: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(n + 1);
        let mut out = vec![ExactRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// `self += c * a`, dropping terms of degree above `n`.
    pub fn add_scaled(&mut self, a: &Self, c: &ExactRational, n: usize) {
        if c.is_zero() {
            return;
        }
        let len = a.coeffs.len().min(n + 1);
        if self.coeffs.len() < len {
            self.coeffs.resize(len, ExactRational::zero());
        }
        for (i, v) in a.coeffs.iter().take(len).enumerate() {
            if !v.is_zero() {
                self.coeffs[i] += &(v * c);
            }
        }
        self.trim();
    }

    /// `self += a * b`, dropping terms of degree above `n`.
    pub fn add_product(&mut self, a: &Self, b: &Self, n: usize) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = (a.coeffs.len() + b.coeffs.len() - 1).min(n + 1);
        if self.coeffs.len() < len {
            self.coeffs.resize(len, ExactRational::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate().take(len - i) {
                if !y.is_zero() {
                    self.coeffs[i + j] += &(x * y);
                }
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(ExactRational::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Shifts down by `x^k`; the low terms must already be zero.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Euclidean division; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![ExactRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + i] -= &(&c * b);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient, or `None` when `divisor` is zero or does not divide.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        // Monic remainders keep the rational coefficients small.
        while !b.is_zero() {
            if b.is_constant() {
                return Self::one();
            }
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        self.mul_trunc(rhs, self.coeffs.len() + rhs.coeffs.len())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = crate::poly::Poly::from_x_poly(self);
        write!(f, "{p}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(c.iter().map(|&v| ExactRational::from_integer(v)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) / (x - 1) = x + 1
        let (q, r) = up(&[-1, 0, 1]).div_rem(&up(&[-1, 1])).unwrap();
        assert_eq!(q, up(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(up(&[0, 0, 2]).gcd(&up(&[0, 3])), up(&[0, 1]));
        assert_eq!(up(&[5]).gcd(&up(&[0, 1])), up(&[1]));
        assert!(up(&[1, 1]).exact_div(&up(&[0, 1])).is_none());
        assert_eq!(up(&[0, 0, 3, 1]).order_at_zero(), Some(2));
    }

    #[test]
    fn truncated_product() {
        let a = up(&[1, 1]);
        let b = up(&[1, -1]);
        assert_eq!(a.mul_trunc(&b, 1), up(&[1]));
        assert_eq!(&a * &b, up(&[1, 0, -1]));
    }
}
