//! Sparse bivariate polynomials in `x`, `y` with exact rational coefficients.
//!
//! Terms are kept in a map ordered graded-lexicographically with `x > y`,
//! which fixes both the leading term and the canonical textual rendering:
//! descending order, explicit `^` and `*`, rational coefficients as `p/q`.
//!
//! Divisibility and GCD treat a polynomial as univariate in `y` over
//! `Q[x]` (with fraction field `Q(x)` where needed).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::ExactRational;
use crate::univariate::UniPoly;

/// Exponent pair `x^x * y^y`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: Poly },
    #[error("shear coefficient b must be nonzero")]
    InvalidShear,
    #[error("polynomial depends on y: {0}")]
    NotUnivariate(Poly),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Order of vanishing at zero.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ZeroOrder {
    Finite(u32),
    Infinite,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, ExactRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(ExactRational::from_integer(n))
    }

    /// `c * x^i * y^j`
    pub fn monomial(c: ExactRational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(i, j), c);
        }
        Poly { terms }
    }

    pub fn x() -> Self {
        Self::monomial(ExactRational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(ExactRational::one(), 0, 1)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, ExactRational)>,
    {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Embeds a polynomial in `x`.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(i as u32, 0), c.clone())),
        )
    }

    /// Embeds a polynomial in one variable as a polynomial in `y`.
    pub fn from_y_poly(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| (Monomial::new(0, j as u32), c.clone())),
        )
    }

    fn add_term(&mut self, m: Monomial, c: &ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> ExactRational {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn constant_term(&self) -> ExactRational {
        self.coeff(0, 0)
    }

    pub fn leading_term(&self) -> Option<(Monomial, &ExactRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).max()
    }

    pub fn depends_on_x(&self) -> bool {
        self.terms.keys().any(|m| m.x > 0)
    }

    pub fn depends_on_y(&self) -> bool {
        self.terms.keys().any(|m| m.y > 0)
    }

    /// `Some(n)` when every term has total degree `n`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplies by `x^i * y^j`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Monomial::new(m.x + i, m.y + j), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
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

    pub fn partial_x(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.x > 0).map(|(m, c)| {
            (
                Monomial::new(m.x - 1, m.y),
                c * &ExactRational::from_integer(m.x as i64),
            )
        }))
    }

    pub fn partial_y(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.y > 0).map(|(m, c)| {
            (
                Monomial::new(m.x, m.y - 1),
                c * &ExactRational::from_integer(m.y as i64),
            )
        }))
    }

    pub fn eval(&self, x: &ExactRational, y: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for (m, c) in &self.terms {
            acc += &(c * &x.pow(m.x as i32) * y.pow(m.y as i32));
        }
        acc
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| c.to_f64() * powi(x, m.x) * powi(y, m.y))
            .sum()
    }

    /// `p(x, q(x, y))`.
    pub fn compose_y(&self, q: &Poly) -> Self {
        let rows = self.to_y_coeffs();
        // Horner in y.
        let mut acc = Poly::zero();
        for row in rows.iter().rev() {
            acc = &(&acc * q) + &Poly::from_x_poly(row);
        }
        acc
    }

    /// `p(x, a*x + b*y)`; an invertible change of the second coordinate.
    pub fn shear_substitute(&self, a: &ExactRational, b: &ExactRational) -> Result<Self, PolyError> {
        if b.is_zero() {
            return Err(PolyError::InvalidShear);
        }
        let lin = &Poly::x().scale(a) + &Poly::y().scale(b);
        Ok(self.compose_y(&lin))
    }

    /// The polynomial in `x` when `self` does not involve `y`.
    pub fn as_x_poly(&self) -> Result<UniPoly, PolyError> {
        if self.depends_on_y() {
            return Err(PolyError::NotUnivariate(self.clone()));
        }
        Ok(self.to_y_coeffs().into_iter().next().unwrap_or_default())
    }

    /// `g(0, y)` as a polynomial in one variable.
    pub fn restrict_x_zero(&self) -> UniPoly {
        let deg = self.degree_y().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![ExactRational::zero(); deg];
        for (m, c) in &self.terms {
            if m.x == 0 {
                coeffs[m.y as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Largest `l` with `x^l | p` for `p` free of `y`.
    pub fn order_at_zero_x(&self) -> Result<ZeroOrder, PolyError> {
        let p = self.as_x_poly()?;
        Ok(match p.order_at_zero() {
            Some(l) => ZeroOrder::Finite(l as u32),
            None => ZeroOrder::Infinite,
        })
    }

    /// Order of vanishing of `g(0, y)` at `y = 0`.
    pub fn y_order_at_origin(&self) -> ZeroOrder {
        match self.restrict_x_zero().order_at_zero() {
            Some(l) => ZeroOrder::Finite(l as u32),
            None => ZeroOrder::Infinite,
        }
    }

    /// `p(y, x)`
    pub fn swap_xy(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x), c.clone()))
                .collect(),
        }
    }

    /// Largest `(i, j)` with `x^i y^j` dividing `self`.
    pub fn monomial_content(&self) -> (u32, u32) {
        let i = self.terms.keys().map(|m| m.x).min().unwrap_or(0);
        let j = self.terms.keys().map(|m| m.y).min().unwrap_or(0);
        (i, j)
    }

    /// Divides by `x^i y^j`, which must divide `self`.
    pub fn unshift(&self, i: u32, j: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Monomial::new(m.x - i, m.y - j), v.clone()))
                .collect(),
        }
    }

    pub fn x_multiplicity(&self) -> u32 {
        self.terms.keys().map(|m| m.x).min().unwrap_or(0)
    }

    /// Coefficients of `y^0, y^1, ...` as polynomials in `x`.
    pub fn to_y_coeffs(&self) -> Vec<UniPoly> {
        let Some(dy) = self.degree_y() else {
            return Vec::new();
        };
        let mut rows: Vec<Vec<ExactRational>> = vec![Vec::new(); dy as usize + 1];
        for (m, c) in &self.terms {
            let row = &mut rows[m.y as usize];
            if row.len() <= m.x as usize {
                row.resize(m.x as usize + 1, ExactRational::zero());
            }
            row[m.x as usize] = c.clone();
        }
        rows.into_iter().map(UniPoly::from_coeffs).collect()
    }

    pub fn from_y_coeffs(rows: &[UniPoly]) -> Self {
        Self::from_terms(rows.iter().enumerate().flat_map(|(j, row)| {
            row.coeffs()
                .iter()
                .enumerate()
                .map(move |(i, c)| (Monomial::new(i as u32, j as u32), c.clone()))
        }))
    }

    /// Scalar multiple with integer coefficients of gcd 1 and the same signs
    /// as `self`.
    pub fn positive_primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut lcm = BigInt::one();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            lcm = lcm.lcm(&c.denom());
        }
        for c in self.terms.values() {
            let v = c.numer() * (&lcm / c.denom());
            g = g.gcd(&v);
        }
        self.scale(&ExactRational::new(lcm, g).expect("nonzero content"))
    }

    /// Primitive integer multiple with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.positive_primitive();
        match p.leading_term() {
            Some((_, c)) if c.is_negative() => -&p,
            _ => p,
        }
    }

    /// Exact quotient `self / divisor` in `Q[x, y]`.
    ///
    /// On failure the error carries the remainder of dividing by `divisor`
    /// as polynomials in `y` over `Q(x)`, multiplied by the smallest monic
    /// polynomial in `x` that clears its denominators. When that remainder
    /// is zero the roles of `x` and `y` are exchanged, so the witness is
    /// never zero.
    /// Quotient when `divisor` divides `self` exactly, without computing a
    /// remainder otherwise.
    pub fn checked_div(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if divisor.is_constant() {
            return Some(self.scale(&divisor.constant_term().recip()));
        }
        divide_in_y(&self.to_y_coeffs(), &divisor.to_y_coeffs()).map(|q| Poly::from_y_coeffs(&q))
    }

    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if divisor.is_constant() {
            return Ok(self.scale(&divisor.constant_term().recip()));
        }
        let b = divisor.to_y_coeffs();
        match divide_in_y(&self.to_y_coeffs(), &b) {
            Some(q) => Ok(Poly::from_y_coeffs(&q)),
            None => {
                let mut remainder = cleared_remainder(self, &b);
                if remainder.is_zero() {
                    // Divisible over Q(x); the obstruction is a factor in x alone.
                    let swapped = divisor.swap_xy().to_y_coeffs();
                    remainder = cleared_remainder(&self.swap_xy(), &swapped).swap_xy();
                }
                Err(PolyError::NotDivisible { remainder })
            }
        }
    }

    /// Greatest common divisor, normalized primitive with positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    /// `true` when `gcd(self, other)` is proven free of `y`; `false` is
    /// inconclusive.
    pub(crate) fn coprime_in_y(&self, other: &Poly) -> bool {
        coprime_by_specialization(&self.to_y_coeffs(), &other.to_y_coeffs())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        // x and y are prime: split off the monomial parts first.
        let (sx, sy) = self.monomial_content();
        let (ox, oy) = other.monomial_content();
        if sx + sy + ox + oy > 0 {
            let core = self.unshift(sx, sy).gcd(&other.unshift(ox, oy));
            return core.shift(sx.min(ox), sy.min(oy));
        }
        if !self.depends_on_x() && !other.depends_on_x() {
            let g = self.restrict_x_zero().gcd(&other.restrict_x_zero());
            return Poly::from_y_poly(&g).normalized();
        }
        if !self.depends_on_y() && !other.depends_on_y() {
            let g = self.as_x_poly().expect("free of y").gcd(&other.as_x_poly().expect("free of y"));
            return Poly::from_x_poly(&g).normalized();
        }
        let a = self.to_y_coeffs();
        let b = other.to_y_coeffs();
        let ca = content(&a);
        let cb = content(&b);
        let c = ca.gcd(&cb);
        let mut u = primitive_part(&a, &ca);
        let mut v = primitive_part(&b, &cb);
        if coprime_by_specialization(&u, &v) {
            return Poly::from_x_poly(&c).normalized();
        }
        if u.len() < v.len() {
            core::mem::swap(&mut u, &mut v);
        }
        // Primitive remainder sequence in y.
        while v.len() > 1 {
            let r = pseudo_remainder(&u, &v);
            u = v;
            if r.is_empty() {
                v = Vec::new();
                break;
            }
            let cr = content(&r);
            v = primitive_part(&r, &cr);
        }
        let g = if v.is_empty() {
            u
        } else {
            // v is a nonzero polynomial in x alone; the primitive parts are coprime.
            vec![UniPoly::one()]
        };
        let g = Poly::from_y_coeffs(&g);
        (&g * &Poly::from_x_poly(&c)).normalized()
    }
}

fn powi(base: f64, exp: u32) -> f64 {
    let mut acc = 1.0;
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= b;
        }
        e >>= 1;
        b *= b;
    }
    acc
}

fn trim(mut rows: Vec<UniPoly>) -> Vec<UniPoly> {
    while rows.last().is_some_and(UniPoly::is_zero) {
        rows.pop();
    }
    rows
}

/// Exact division in `Q[x][y]`: every step needs the leading coefficient of
/// the divisor to divide the current leading coefficient in `Q[x]`, which is
/// necessary and sufficient for divisibility.
fn divide_in_y(a: &[UniPoly], b: &[UniPoly]) -> Option<Vec<UniPoly>> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut rem = trim(a.to_vec());
    if rem.len() <= db {
        return rem.is_empty().then(Vec::new);
    }
    let mut quot = vec![UniPoly::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = rem.last().expect("nonempty").exact_div(lb)?;
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] = &rem[k + i] - &(&c * bi);
        }
        quot[k] = c;
        rem = trim(rem);
    }
    rem.is_empty().then_some(quot)
}

/// `lc(b)^e * a mod b` with `e = deg a - deg b + 1`.
fn pseudo_remainder(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut rem = trim(a.to_vec());
    if rem.len() <= db {
        return rem;
    }
    let mut e = rem.len() - db;
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let lr = rem.last().expect("nonempty").clone();
        for r in rem.iter_mut() {
            *r = &*r * lb;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] = &rem[k + i] - &(&lr * bi);
        }
        rem = trim(rem);
        e -= 1;
    }
    let scale = (0..e).fold(UniPoly::one(), |acc, _| &acc * lb);
    rem.iter().map(|r| r * &scale).collect::<Vec<_>>()
}

/// `true` when `u(x0, y)` and `v(x0, y)` are coprime for one of a few integers
/// `x0` keeping both leading coefficients nonzero; specialization can only
/// raise the degree of a gcd, so this proves coprimality in `Q[x][y]` up to
/// factors in `x` alone. `false` is inconclusive.
fn coprime_by_specialization(u: &[UniPoly], v: &[UniPoly]) -> bool {
    if u.len() <= 1 || v.len() <= 1 {
        return true;
    }
    let (lu, lv) = (&u[u.len() - 1], &v[v.len() - 1]);
    for x0 in [1i64, -1, 2, -2, 3, 5, 7] {
        let x0 = ExactRational::from_integer(x0);
        if lu.eval(&x0).is_zero() || lv.eval(&x0).is_zero() {
            continue;
        }
        let su = UniPoly::from_coeffs(u.iter().map(|r| r.eval(&x0)).collect());
        let sv = UniPoly::from_coeffs(v.iter().map(|r| r.eval(&x0)).collect());
        if su.gcd(&sv).is_constant() {
            return true;
        }
    }
    false
}

fn content(rows: &[UniPoly]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for r in rows {
        acc = acc.gcd(r);
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
    }
    acc
}

fn primitive_part(rows: &[UniPoly], content: &UniPoly) -> Vec<UniPoly> {
    rows.iter()
        .map(|r| r.exact_div(content).expect("content divides every coefficient"))
        .collect()
}

fn cleared_remainder(a: &Poly, b: &[UniPoly]) -> Poly {
    let rows = a.to_y_coeffs();
    let db = b.len() - 1;
    let e = (rows.len()).saturating_sub(db);
    let prem = pseudo_remainder(&rows, b);
    if prem.is_empty() {
        return Poly::zero();
    }
    // prem = lc(b)^e * r over Q(x); return r * monic(D / gcd(D, content(prem))).
    let d = (0..e).fold(UniPoly::one(), |acc, _| &acc * &b[db]);
    let g = d.gcd(&content(&prem));
    let reduced = d.exact_div(&g).expect("gcd divides");
    let divisor = g.scale(&reduced.leading_coeff());
    let rem: Vec<UniPoly> = prem
        .iter()
        .map(|r| r.exact_div(&divisor).expect("divisor divides the pseudo-remainder"))
        .collect();
    Poly::from_y_coeffs(&rem)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(Monomial::new(m1.x + m2.x, m1.y + m2.y), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x", m.x), ("y", m.y)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
