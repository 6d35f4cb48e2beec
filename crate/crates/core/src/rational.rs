//! Exact rational numbers.
//!
//! Values that fit in a pair of machine words are kept inline and operated on
//! with checked 128-bit intermediates; anything larger is promoted to a
//! [`BigRational`]. The representation is canonical (reduced, positive
//! denominator, inline whenever it fits), so structural equality is value
//! equality.

use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub struct ExactRational(Repr);

#[derive(Clone)]
enum Repr {
    /// numerator, denominator; denominator > 0, reduced, numerator != i64::MIN
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            core::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            core::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if a == 1 || b == 1 {
        return 1;
    }
    gcd_u64(a.unsigned_abs(), b.unsigned_abs()) as i64
}

fn fits(v: i128) -> Option<i64> {
    if v > i64::MIN as i128 && v <= i64::MAX as i128 {
        Some(v as i64)
    } else {
        None
    }
}

impl ExactRational {
    pub fn zero() -> Self {
        ExactRational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        ExactRational(Repr::Small(1, 1))
    }

    pub fn from_integer(n: i64) -> Self {
        if n == i64::MIN {
            return Self::from_big(BigRational::from_integer(BigInt::from(n)));
        }
        ExactRational(Repr::Small(n, 1))
    }

    /// `n / d`; `None` when `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Option<Self> {
        if d == 0 {
            return None;
        }
        Some(Self::from_i128(n as i128, d as i128))
    }

    /// `n / d` for arbitrary-precision parts; `None` when `d == 0`.
    pub fn new(n: BigInt, d: BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        Some(Self::from_big(BigRational::new(n, d)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        debug_assert!(d != 0);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if d == 1 {
            return match fits(n) {
                Some(n) => ExactRational(Repr::Small(n, 1)),
                None => ExactRational(Repr::Big(BigRational::from_integer(BigInt::from(n)))),
            };
        }
        let (un, ud) = (n.unsigned_abs(), d as u128);
        let g = if un <= u64::MAX as u128 && ud <= u64::MAX as u128 {
            gcd_u64(un as u64, ud as u64) as i128
        } else {
            gcd_u128(un, ud) as i128
        };
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (fits(n), fits(d)) {
            (Some(n), Some(d)) => ExactRational(Repr::Small(n, d)),
            _ => ExactRational(Repr::Big(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN && d != i64::MIN {
                return ExactRational(Repr::Small(n, d));
            }
        }
        ExactRational(Repr::Big(r))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(r) => {
                if r.is_negative() {
                    -1
                } else if r.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn checked_recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(r) => Some(Self::from_big(r.recip())),
        }
    }

    /// Multiplicative inverse. Panics on zero, like integer division.
    pub fn recip(&self) -> Self {
        self.checked_recip().expect("reciprocal of zero")
    }

    pub fn pow(&self, exp: i32) -> Self {
        if exp < 0 {
            return self.recip().pow(-exp);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// The exact value of a finite float; `None` for NaN and infinities.
    pub fn from_f64(v: f64) -> Option<Self> {
        BigRational::from_float(v).map(Self::from_big)
    }

    /// `n!` as an exact value.
    pub fn factorial(n: u32) -> Self {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= k;
        }
        Self::from_bigint(acc)
    }

    /// The exact `n`-th root when it is rational. Even roots of negative
    /// values are `None`.
    pub fn nth_root_exact(&self, n: u32) -> Option<Self> {
        if n == 0 {
            return None;
        }
        if n == 1 || self.is_zero() {
            return Some(self.clone());
        }
        let neg = self.is_negative();
        if neg && n % 2 == 0 {
            return None;
        }
        let num = self.numer().abs();
        let den = self.denom();
        let rn = num.nth_root(n);
        let rd = den.nth_root(n);
        if num_traits::pow(rn.clone(), n as usize) != num
            || num_traits::pow(rd.clone(), n as usize) != den
        {
            return None;
        }
        let root = Self::new(rn, rd)?;
        Some(if neg { -root } else { root })
    }

    fn add_ref(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    Self::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    Self::from_i128(
                        *a as i128 * *d as i128 + *c as i128 * *b as i128,
                        *b as i128 * *d as i128,
                    )
                }
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&-other)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Self::zero(),
            (Repr::Small(a, 1), Repr::Small(c, 1)) => Self::from_i128(*a as i128 * *c as i128, 1),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let g1 = gcd_i64(*a, *d);
                let g2 = gcd_i64(*c, *b);
                let n = (*a / g1) as i128 * (*c / g2) as i128;
                let m = (*b / g2) as i128 * (*d / g1) as i128;
                match (fits(n), fits(m)) {
                    (Some(n), Some(m)) => ExactRational(Repr::Small(n, m)),
                    _ => ExactRational(Repr::Big(BigRational::new_raw(
                        BigInt::from(n),
                        BigInt::from(m),
                    ))),
                }
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    fn div_ref(&self, other: &Self) -> Self {
        self.mul_ref(&other.recip())
    }
}

impl Default for ExactRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<i32> for ExactRational {
    fn from(n: i32) -> Self {
        Self::from_integer(n as i64)
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl PartialEq for ExactRational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(r), Repr::Big(s)) => r == s,
            _ => false,
        }
    }
}

impl Eq for ExactRational {}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl core::hash::Hash for ExactRational {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(r) => r.hash(state),
        }
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        match &self.0 {
            Repr::Small(n, d) => ExactRational(Repr::Small(-n, *d)),
            Repr::Big(r) => ExactRational::from_big(-r.clone()),
        }
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                self.$imp(rhs)
            }
        }
        impl $trait<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                (&self).$imp(&rhs)
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                (&self).$imp(rhs)
            }
        }
        impl $trait<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&ExactRational> for ExactRational {
    fn sub_assign(&mut self, rhs: &ExactRational) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        *self = self.mul_ref(rhs);
    }
}

impl Zero for ExactRational {
    fn zero() -> Self {
        ExactRational::zero()
    }
    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }
}

impl One for ExactRational {
    fn one() -> Self {
        ExactRational::one()
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, v| acc + v)
    }
}

impl<'a> Sum<&'a ExactRational> for ExactRational {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, v| acc + v)
    }
}

impl Product for ExactRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, v| acc * v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::from_ratio(n, d).unwrap()
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(q(2, -4), q(-1, 2));
        assert_eq!(q(0, -7), ExactRational::zero());
        assert_eq!(q(6, 3).to_string(), "2");
        assert_eq!(q(-3, 9).to_string(), "-1/3");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = ExactRational::from_integer(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let sum = &big + &big;
        assert_eq!(&sum - &big, big);
        let min = ExactRational::from_integer(i64::MIN);
        assert_eq!(-(-&min), min);
        assert!(min < ExactRational::zero());
    }

    #[test]
    fn ordering_and_roots() {
        assert!(q(1, 3) < q(1, 2));
        assert!(q(-1, 2) < q(-1, 3));
        assert_eq!(q(8, 27).nth_root_exact(3), Some(q(2, 3)));
        assert_eq!(q(-8, 27).nth_root_exact(3), Some(q(-2, 3)));
        assert_eq!(q(2, 1).nth_root_exact(2), None);
        assert_eq!(q(-4, 1).nth_root_exact(2), None);
        assert_eq!(ExactRational::factorial(6), q(720, 1));
        assert_eq!(q(2, 3).pow(-2), q(9, 4));
    }
}
