//! Reduced quotients of bivariate polynomials.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::poly::{Poly, PolyError};
use crate::rational::ExactRational;

/// `num / den` with `gcd(num, den) = 1` and `den` a primitive integer
/// polynomial with positive leading coefficient. A polynomial has `den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction2 {
    num: Poly,
    den: Poly,
}

impl RationalFunction2 {
    pub fn new(num: Poly, den: Poly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.constant_term().recip();
            return Self::from_poly(num.scale(&c));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let normal = den.normalized();
        let (_, lead_old) = den.leading_term().expect("nonzero denominator");
        let (_, lead_new) = normal.leading_term().expect("nonzero denominator");
        let s = lead_new / lead_old;
        if normal.is_constant() {
            // normal is 1 here
            return Self::from_poly(num.scale(&s));
        }
        RationalFunction2 {
            num: num.scale(&s),
            den: normal,
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction2 {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction2 {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Some(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, exp: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        RationalFunction2 {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    pub fn partial_x(&self) -> Self {
        self.quotient_rule(self.num.partial_x(), self.den.partial_x())
    }

    pub fn partial_y(&self) -> Self {
        self.quotient_rule(self.num.partial_y(), self.den.partial_y())
    }

    fn quotient_rule(&self, dn: Poly, dd: Poly) -> Self {
        if self.is_polynomial() {
            return Self::from_poly(dn);
        }
        let top = &(&dn * &self.den) - &(&self.num * &dd);
        Self::reduce(top, self.den.pow(2))
    }

    /// `None` when the denominator vanishes at the point.
    pub fn eval(&self, x: &ExactRational, y: &ExactRational) -> Option<ExactRational> {
        let d = self.den.eval(x, y);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x, y) / d)
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.num.eval_f64(x, y) / self.den.eval_f64(x, y)
    }

    /// Substitutes `q(x, y)` for `y`.
    pub fn compose_y(&self, q: &Poly) -> Self {
        Self::reduce(self.num.compose_y(q), self.den.compose_y(q))
    }
}

impl From<Poly> for RationalFunction2 {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction2 {
    type Output = RationalFunction2;
    fn add(self, rhs: &RationalFunction2) -> RationalFunction2 {
        if self.is_polynomial() && rhs.is_polynomial() {
            return RationalFunction2::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RationalFunction2::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction2::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction2 {
    type Output = RationalFunction2;
    fn sub(self, rhs: &RationalFunction2) -> RationalFunction2 {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction2 {
    type Output = RationalFunction2;
    fn mul(self, rhs: &RationalFunction2) -> RationalFunction2 {
        if self.is_polynomial() && rhs.is_polynomial() {
            return RationalFunction2::from_poly(&self.num * &rhs.num);
        }
        RationalFunction2::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction2 {
    type Output = RationalFunction2;
    fn neg(self) -> RationalFunction2 {
        RationalFunction2 {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction2 {
    type Output = RationalFunction2;
    fn neg(self) -> RationalFunction2 {
        -&self
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<RationalFunction2> for RationalFunction2 {
            type Output = RationalFunction2;
            fn $method(self, rhs: RationalFunction2) -> RationalFunction2 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction2> for RationalFunction2 {
            type Output = RationalFunction2;
            fn $method(self, rhs: &RationalFunction2) -> RationalFunction2 {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RationalFunction2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
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
    fn reduces_common_factors_and_normalizes_denominator() {
        let x = Poly::x();
        let y = Poly::y();
        let r = RationalFunction2::new(y.clone(), y.pow(2)).unwrap();
        assert_eq!(r.num(), &Poly::one());
        assert_eq!(r.den(), &y);

        let r = RationalFunction2::new(&x.pow(2) - &y.pow(2), &x - &y).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &(&x + &y));

        // 1 / (-2y - 4x) = (-1/2) / (2x + y)
        let d = &y.scale(&q(-2, 1)) - &x.scale(&q(4, 1));
        let r = RationalFunction2::new(Poly::one(), d).unwrap();
        assert_eq!(r.den(), &(&x.scale(&q(2, 1)) + &y));
        assert_eq!(r.num(), &Poly::constant(q(-1, 2)));
        assert_eq!(r.to_string(), "(-1/2)/(2*x + y)");

        assert_eq!(
            RationalFunction2::new(Poly::one(), Poly::zero()),
            Err(PolyError::ZeroDenominator)
        );
    }

    #[test]
    fn quotient_rule() {
        let y = Poly::y();
        let r = RationalFunction2::new(Poly::one(), y.clone()).unwrap();
        let d = r.partial_y();
        assert_eq!(d, RationalFunction2::new(Poly::integer(-1), y.pow(2)).unwrap());
        assert!(r.partial_x().is_zero());
    }

    #[test]
    fn sums_cancel() {
        let y = Poly::y();
        let a = RationalFunction2::new(Poly::one(), y.clone()).unwrap();
        let b = RationalFunction2::new(Poly::one(), &y + &Poly::one()).unwrap();
        let s = &a - &b;
        // 1/y - 1/(y+1) = 1/(y^2+y)
        assert_eq!(s, RationalFunction2::new(Poly::one(), &y.pow(2) + &y).unwrap());
        assert!((&s - &s).is_zero());
        assert_eq!(s.eval(&q(1, 1), &q(1, 1)), Some(q(1, 2)));
        assert_eq!(s.eval(&q(1, 1), &q(0, 1)), None);
    }
}
