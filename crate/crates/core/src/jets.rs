//! Bivariate jets at the origin and normalization of a polynomial `g` in its
//! second coordinate.
//!
//! Normalization writes `g = κ w^p + c_{p-2}(x) w^{p-2} + ... + c_0(x)` with
//! `w = y + ...` and `c_i(0) = 0`, for `p = 2` (Morse in `y`) and `p = 3`
//! (cubic in `y`). The unknown `w` is expanded in powers of `x`,
//! `w = w_0(y) + x w_1(y) + x^2 w_2(y) + ...`, and the coefficient of `x^n`
//! of the identity is linear in `w_n`, `c_i[n]`; so the rows are solved one
//! at a time.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::{Monomial, Poly};
use crate::rational::ExactRational;
use crate::univariate::UniPoly;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum JetError {
    #[error("jet orders differ: {left} and {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("constant term is zero")]
    NonUnitConstantTerm,
    #[error("g(0, y) does not vanish to order exactly 2 at y = 0")]
    NotMorseInY,
    #[error("g(0, y) does not vanish to order exactly 3 at y = 0")]
    NotCubicInY,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Axis {
    X,
    Y,
}

/// Power series in `x`, `y` truncated above total degree `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Jet2 {
    order: u32,
    // Row i holds the coefficients of x^i y^0 .. x^i y^(order - i).
    coeffs: Vec<ExactRational>,
}

impl Jet2 {
    fn len_for(order: u32) -> usize {
        let n = order as usize + 1;
        n * (n + 1) / 2
    }

    fn offset(&self, i: u32) -> usize {
        let (i, n) = (i as usize, self.order as usize);
        i * (n + 1) - i * i.saturating_sub(1) / 2
    }

    pub fn zero(order: u32) -> Self {
        Jet2 {
            order,
            coeffs: vec![ExactRational::zero(); Self::len_for(order)],
        }
    }

    pub fn constant(c: ExactRational, order: u32) -> Self {
        let mut j = Self::zero(order);
        j.coeffs[0] = c;
        j
    }

    pub fn one(order: u32) -> Self {
        Self::constant(ExactRational::one(), order)
    }

    pub fn from_poly(p: &Poly, order: u32) -> Self {
        let mut j = Self::zero(order);
        for (m, c) in p.terms() {
            if m.degree() <= order {
                j.set(m.x, m.y, c.clone());
            }
        }
        j
    }

    /// Jet of `x^i * r_i(y)` summed over the given rows.
    pub fn from_x_rows(rows: &[UniPoly], order: u32) -> Self {
        let mut j = Self::zero(order);
        for (i, row) in rows.iter().enumerate().take(order as usize + 1) {
            for (k, c) in row.coeffs().iter().enumerate() {
                if i + k <= order as usize {
                    j.set(i as u32, k as u32, c.clone());
                }
            }
        }
        j
    }

    pub fn to_poly(&self) -> Poly {
        let mut terms = Vec::new();
        for i in 0..=self.order {
            for k in 0..=(self.order - i) {
                let c = &self.coeffs[self.offset(i) + k as usize];
                if !c.is_zero() {
                    terms.push((Monomial::new(i, k), c.clone()));
                }
            }
        }
        Poly::from_terms(terms)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, i: u32, j: u32) -> ExactRational {
        if i + j > self.order {
            return ExactRational::zero();
        }
        self.coeffs[self.offset(i) + j as usize].clone()
    }

    fn coeff_ref(&self, i: u32, j: u32) -> &ExactRational {
        &self.coeffs[self.offset(i) + j as usize]
    }

    fn set(&mut self, i: u32, j: u32, c: ExactRational) {
        let k = self.offset(i) + j as usize;
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ExactRational::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), JetError> {
        if self.order != other.order {
            return Err(JetError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        Ok(Jet2 {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        Ok(Jet2 {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        let n = self.order;
        let mut out = Self::zero(n);
        for i1 in 0..=n {
            for j1 in 0..=(n - i1) {
                let a = self.coeff_ref(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=(n - i1 - j1) {
                    for j2 in 0..=(n - i1 - j1 - i2) {
                        let b = other.coeff_ref(i2, j2);
                        if !b.is_zero() {
                            let k = out.offset(i1 + i2) + (j1 + j2) as usize;
                            out.coeffs[k] += &(a * b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Jet2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Partial derivative; the result is known one order lower.
    pub fn derivative(&self, axis: Axis) -> Self {
        let order = self.order.saturating_sub(1);
        let mut out = Self::zero(order);
        if self.order == 0 {
            return out;
        }
        for i in 0..=order {
            for j in 0..=(order - i) {
                let (src, factor) = match axis {
                    Axis::X => (self.coeff_ref(i + 1, j), i + 1),
                    Axis::Y => (self.coeff_ref(i, j + 1), j + 1),
                };
                out.set(i, j, src * &ExactRational::from_integer(factor as i64));
            }
        }
        out
    }

    /// Multiplicative inverse to the same order.
    pub fn reciprocal(&self) -> Result<Self, JetError> {
        let a0 = self.coeff_ref(0, 0);
        let inv0 = a0.checked_recip().ok_or(JetError::NonUnitConstantTerm)?;
        let n = self.order;
        let mut out = Self::zero(n);
        out.set(0, 0, inv0.clone());
        // Solve (a * b)[i, j] = 0 in order of total degree.
        for d in 1..=n {
            for i in 0..=d {
                let j = d - i;
                let mut s = ExactRational::zero();
                for i1 in 0..=i {
                    for j1 in 0..=j {
                        if i1 == 0 && j1 == 0 {
                            continue;
                        }
                        let a = self.coeff_ref(i1, j1);
                        if !a.is_zero() {
                            s += &(a * out.coeff_ref(i - i1, j - j1));
                        }
                    }
                }
                out.set(i, j, -(s * &inv0));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if p.is_zero() {
            write!(f, "O({})", self.order + 1)
        } else {
            write!(f, "{p} + O({})", self.order + 1)
        }
    }
}

impl fmt::Debug for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Values compared by [`verify_root_derivatives`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootDerivativeCheck {
    pub k: u32,
    pub c: ExactRational,
    /// `d^{2k}/dy^{2k} (1 / (y^2 + c))` at `y = 0`.
    pub even_value: ExactRational,
    /// `(-1)^k (2k)! / c^{k+1}`
    pub even_expected: ExactRational,
    /// `d^{2k+1}/dy^{2k+1} (y / (y^2 + c))` at `y = 0`.
    pub odd_value: ExactRational,
    /// `(-1)^k (2k+1)! / c^{k+1}`
    pub odd_expected: ExactRational,
    pub holds: bool,
}

/// Derivatives of `1/(y^2 + c)` and `y/(y^2 + c)` at zero, computed by jet
/// arithmetic and compared with the closed forms.
pub fn verify_root_derivatives(k: u32, c: &ExactRational) -> Result<RootDerivativeCheck, JetError> {
    let order = 2 * k + 2;
    let y = Jet2::from_poly(&Poly::y(), order);
    let denom = Jet2::from_poly(&(&Poly::y().pow(2) + &Poly::constant(c.clone())), order);
    let inv = denom.reciprocal()?;
    let odd = y.checked_mul(&inv)?;

    let mut even_d = inv;
    for _ in 0..2 * k {
        even_d = even_d.derivative(Axis::Y);
    }
    let mut odd_d = odd;
    for _ in 0..2 * k + 1 {
        odd_d = odd_d.derivative(Axis::Y);
    }
    let sign = if k % 2 == 0 {
        ExactRational::one()
    } else {
        -ExactRational::one()
    };
    let c_pow = c.pow(k as i32 + 1);
    let even_expected = &sign * &ExactRational::factorial(2 * k) / &c_pow;
    let odd_expected = &sign * &ExactRational::factorial(2 * k + 1) / &c_pow;
    let even_value = even_d.coeff(0, 0);
    let odd_value = odd_d.coeff(0, 0);
    let holds = even_value == even_expected && odd_value == odd_expected;
    Ok(RootDerivativeCheck {
        k,
        c: c.clone(),
        even_value,
        even_expected,
        odd_value,
        odd_expected,
        holds,
    })
}

/// Second coordinate `ỹ = radicand^(1/root) * base` with `base = y + ...`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YSubstitution {
    pub base: Jet2,
    pub radicand: ExactRational,
    pub root: u32,
}

impl YSubstitution {
    fn new(base: Jet2, radicand: ExactRational, root: u32) -> Self {
        match radicand.nth_root_exact(root) {
            Some(r) => YSubstitution {
                base: base.scale(&r),
                radicand: ExactRational::one(),
                root: 1,
            },
            None => YSubstitution {
                base,
                radicand,
                root,
            },
        }
    }

    /// `∂ỹ/∂y (0, 0) ≠ 0`
    pub fn is_invertible(&self) -> bool {
        !self.base.coeff(0, 1).is_zero()
    }

    /// `true` when the scale factor is rational.
    pub fn is_rational(&self) -> bool {
        self.root == 1
    }

    pub fn is_identity(&self) -> bool {
        self.is_rational() && self.base.to_poly() == Poly::y()
    }
}

impl fmt::Display for YSubstitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}^(1/{})*({})", self.radicand, self.root, self.base)
        }
    }
}

/// `g = kappa * w^p + Σ_{i ≤ p-2} coeffs[i](x) * w^i` through order `order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YNormalization {
    pub power: u32,
    pub kappa: ExactRational,
    pub coeffs: Vec<UniPoly>,
    pub w: Jet2,
    /// Highest power of `x` solved; equals the order unless stopped early.
    pub solved_through: u32,
}

impl YNormalization {
    /// `kappa * W^p + Σ c_i(x) W^i` with `W`, `c_i` taken as polynomials.
    pub fn recompose(&self) -> Poly {
        let w = self.w.to_poly();
        let mut acc = w.pow(self.power).scale(&self.kappa);
        let mut w_pow = Poly::one();
        for c in &self.coeffs {
            acc = &acc + &(&Poly::from_x_poly(c) * &w_pow);
            w_pow = &w_pow * &w;
        }
        acc
    }

    /// The identity holds exactly with polynomial `w` and `c_i`.
    pub fn is_exact_for(&self, g: &Poly) -> bool {
        &self.recompose() == g
    }

    /// The identity holds through total degree `order`.
    pub fn holds_to_order(&self, g: &Poly) -> bool {
        let diff = g - &self.recompose();
        let order = self.w.order();
        let ok = diff.terms().all(|(m, _)| m.degree() > order);
        ok
    }
}

/// `u^alpha` for a series with `u(0) = 1`, through degree `n`.
pub fn series_pow(u: &UniPoly, alpha: &ExactRational, n: usize) -> UniPoly {
    debug_assert!(u.coeff(0).is_one());
    let alpha1 = alpha + &ExactRational::one();
    let nonzero: Vec<(usize, &ExactRational)> = u
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut v = vec![ExactRational::one()];
    for m in 1..=n {
        let mut s = ExactRational::zero();
        for &(k, uk) in &nonzero {
            if k > m {
                break;
            }
            let f = &(&alpha1 * &ExactRational::from_integer(k as i64))
                - &ExactRational::from_integer(m as i64);
            s += &(&(&f * uk) * &v[m - k]);
        }
        v.push(s / ExactRational::from_integer(m as i64));
    }
    UniPoly::from_coeffs(v)
}

/// Rows `[x^n] g` as polynomials in `y`, for `n ≤ order`.
fn x_rows(g: &Poly, order: usize) -> Vec<UniPoly> {
    let mut rows: Vec<Vec<ExactRational>> = vec![Vec::new(); order + 1];
    for (m, c) in g.terms() {
        let i = m.x as usize;
        if i > order {
            continue;
        }
        let row = &mut rows[i];
        if row.len() <= m.y as usize {
            row.resize(m.y as usize + 1, ExactRational::zero());
        }
        row[m.y as usize] = c.clone();
    }
    rows.into_iter().map(UniPoly::from_coeffs).collect()
}

/// Solves for `w` and `c_i` row by row. `keep_going(n, coeffs)` is called
/// after each row with the coefficients known so far; returning `false`
/// stops early.
pub fn normalize_in_y<F>(
    g: &Poly,
    power: u32,
    order: u32,
    mut keep_going: F,
) -> Option<YNormalization>
where
    F: FnMut(usize, &[Vec<ExactRational>]) -> bool,
{
    let p = power as usize;
    let n_max = order as usize;
    let g0 = g.restrict_x_zero();
    if power < 2 || g0.order_at_zero() != Some(p) {
        return None;
    }
    let kappa = g0.coeff(p);
    // Rows need extra depth in y: c_{p-2}[1] couples row n to row n - 1
    // one order of y higher.
    let depth = |n: usize| (n_max - n + 1) * (p - 1);
    let max_depth = depth(0);

    let pe = ExactRational::from_integer(p as i64);
    let u = g0.shift_down(p).scale(&kappa.recip()).truncate(max_depth);
    let is_pure = u.is_constant();
    let (w0, inv) = if is_pure {
        (UniPoly::x(), UniPoly::one())
    } else {
        let v = series_pow(&u, &pe.recip(), max_depth);
        let inv_exp = -(&(&pe - &ExactRational::one()) / &pe);
        (v.shift_up(1).truncate(max_depth), series_pow(&u, &inv_exp, max_depth))
    };
    let mut w0_pows = vec![UniPoly::one()];
    for k in 1..=p {
        let next = w0_pows[k - 1].mul_trunc(&w0, max_depth);
        w0_pows.push(next);
    }

    let rows = x_rows(g, n_max);
    // pows[k][n] = [x^n] w^k
    let mut pows: Vec<Vec<UniPoly>> = (0..=p).map(|k| vec![w0_pows[k].clone()]).collect();
    let mut w: Vec<UniPoly> = vec![w0.clone()];
    let mut coeffs: Vec<Vec<ExactRational>> = vec![vec![ExactRational::zero()]; p - 1];
    let scale = (&pe * &kappa).recip();
    let mut solved = 0;

    for n in 1..=n_max {
        let d = depth(n);
        pows[0].push(UniPoly::zero());
        pows[1].push(UniPoly::zero());
        for k in 2..=p {
            let mut s = pows[k - 1][n].mul_trunc(&w[0], d);
            for a in 1..n {
                s.add_product(&pows[k - 1][a], &w[n - a], d);
            }
            pows[k].push(s);
        }
        let mut r = rows[n].truncate(d);
        r.add_scaled(&pows[p][n], &-&kappa, d);
        for (i, ci) in coeffs.iter().enumerate() {
            for a in 1..n {
                if !ci[a].is_zero() {
                    r.add_scaled(&pows[i][n - a], &-&ci[a], d);
                }
            }
        }
        for (i, ci) in coeffs.iter_mut().enumerate() {
            let c = r.coeff(i);
            if !c.is_zero() {
                r.add_scaled(&w0_pows[i], &-&c, d);
            }
            ci.push(c);
        }
        let shifted = r.shift_down(p - 1).scale(&scale);
        let wn = if is_pure {
            shifted.truncate(d - (p - 1))
        } else {
            shifted.mul_trunc(&inv, d - (p - 1))
        };
        pows[1][n] = wn.clone();
        for k in 2..=p {
            let kw = wn.scale(&ExactRational::from_integer(k as i64));
            pows[k][n].add_product(&w0_pows[k - 1], &kw, d);
        }
        w.push(wn);
        solved = n;
        if !keep_going(n, &coeffs) {
            break;
        }
    }

    let w_rows: Vec<UniPoly> = w
        .iter()
        .enumerate()
        .map(|(n, row)| row.truncate(n_max - n))
        .collect();
    Some(YNormalization {
        power,
        kappa,
        coeffs: coeffs.into_iter().map(UniPoly::from_coeffs).collect(),
        w: Jet2::from_x_rows(&w_rows, order),
        solved_through: solved as u32,
    })
}

/// `g = sign * ỹ^2 + τ(x)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MorseNormalForm {
    pub sign: i32,
    pub sub: YSubstitution,
    pub tau: UniPoly,
    pub raw: YNormalization,
}

/// `g = ỹ^3 + τ(x) ỹ + β(x)`; `tau` is `None` when it is an irrational
/// multiple of `sigma`, the coefficient of `w` in `κ w^3 + σ w + β`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicNormalForm {
    pub sub: YSubstitution,
    pub sigma: UniPoly,
    pub tau: Option<UniPoly>,
    pub beta: UniPoly,
    pub raw: YNormalization,
}

pub fn morse_form(raw: YNormalization) -> MorseNormalForm {
    let sign = raw.kappa.signum();
    let sub = YSubstitution::new(raw.w.clone(), raw.kappa.abs(), 2);
    MorseNormalForm {
        sign,
        sub,
        tau: raw.coeffs[0].clone(),
        raw,
    }
}

pub fn cubic_form(raw: YNormalization) -> CubicNormalForm {
    let cube_root = raw.kappa.nth_root_exact(3);
    let sigma = raw.coeffs[1].clone();
    let tau = match &cube_root {
        Some(r) => Some(sigma.scale(&r.recip())),
        None if sigma.is_zero() => Some(UniPoly::zero()),
        None => None,
    };
    let sub = YSubstitution::new(raw.w.clone(), raw.kappa.clone(), 3);
    CubicNormalForm {
        sub,
        sigma,
        tau,
        beta: raw.coeffs[0].clone(),
        raw,
    }
}

/// Requires `g(0,0) = g_y(0,0) = 0 ≠ g_yy(0,0)`.
pub fn morse_normalize_y(g: &Poly, order: u32) -> Result<MorseNormalForm, JetError> {
    normalize_in_y(g, 2, order, |_, _| true)
        .map(morse_form)
        .ok_or(JetError::NotMorseInY)
}

/// Requires `g`, `g_y`, `g_yy` to vanish at the origin and `g_yyy(0,0) ≠ 0`.
pub fn cubic_normalize_y(g: &Poly, order: u32) -> Result<CubicNormalForm, JetError> {
    normalize_in_y(g, 3, order, |_, _| true)
        .map(cubic_form)
        .ok_or(JetError::NotCubicInY)
}
