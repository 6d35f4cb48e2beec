//! Operators with trace `x` rebuilt from their determinant or discriminant,
//! and the decision whether a polynomial `g` is the discriminant of such a
//! Nijenhuis operator.
//!
//! With trace `x` and discriminant `g`, vanishing torsion forces
//!
//! ```text
//! L = [[x/2 + g_x, g_y], [-(g_x^2 - g)/g_y, x/2 - g_x]]
//! ```
//!
//! so `g` is admissible when `g_y ≢ 0` and `(g_x^2 - g)/g_y` is smooth, or
//! when `g_y ≡ 0` and `g` is `0` or `(x/2 - α)^2`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Float;

use crate::operator::OperatorField2;
use crate::poly::{Poly, PolyError};
use crate::ratfunc::RationalFunction2;
use crate::rational::ExactRational;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum DiscriminantError {
    #[error("the determinant does not depend on y")]
    DetIndependentOfY,
    #[error("the discriminant does not depend on y")]
    DiscIndependentOfY,
}

/// A rebuilt operator; `entry21_polynomial` is `false` when the lower-left
/// entry is a true rational function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reconstruction {
    pub operator: OperatorField2,
    pub entry21_polynomial: bool,
}

fn half_x() -> Poly {
    Poly::x().scale(&ExactRational::from_ratio(1, 2).expect("nonzero"))
}

/// Operator with trace `x` and determinant `f`:
/// `[[x - f_x, -f_y], [(f_x (x - f_x) - f)/(-f_y), f_x]]`.
pub fn reconstruct_from_det(f: &Poly) -> Result<Reconstruction, DiscriminantError> {
    let fy = f.partial_y();
    if fy.is_zero() {
        return Err(DiscriminantError::DetIndependentOfY);
    }
    let fx = f.partial_x();
    let x_minus_fx = &Poly::x() - &fx;
    let top = &(&fx * &x_minus_fx) - f;
    let c = RationalFunction2::new(top, -&fy).expect("f_y is nonzero");
    let entry21_polynomial = c.is_polynomial();
    Ok(Reconstruction {
        operator: OperatorField2::new(x_minus_fx.into(), (-&fy).into(), c, fx.into()),
        entry21_polynomial,
    })
}

/// Operator with trace `x` and discriminant `g`.
pub fn reconstruct_from_disc(g: &Poly) -> Result<Reconstruction, DiscriminantError> {
    let gy = g.partial_y();
    if gy.is_zero() {
        return Err(DiscriminantError::DiscIndependentOfY);
    }
    let gx = g.partial_x();
    let h = &gx.pow(2) - g;
    let c = -RationalFunction2::new(h, gy.clone()).expect("g_y is nonzero");
    let entry21_polynomial = c.is_polynomial();
    let hx = half_x();
    Ok(Reconstruction {
        operator: OperatorField2::new((&hx + &gx).into(), gy.into(), c, (&hx - &gx).into()),
        entry21_polynomial,
    })
}

/// Admissible discriminants that do not depend on `y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DegenerateFamily {
    /// `g ≡ 0`
    Zero,
    /// `g = (x/2 - alpha)^2`
    Square { alpha: ExactRational },
}

impl fmt::Display for DegenerateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegenerateFamily::Zero => f.write_str("g = 0"),
            DegenerateFamily::Square { alpha } => write!(f, "g = (x/2 - alpha)^2, alpha = {alpha}"),
        }
    }
}

/// Where smoothness of `(g_x^2 - g)/g_y` is tested when the division is
/// not exact.
#[derive(Clone, PartialEq, Debug)]
pub enum TestRegion {
    /// Germ at the origin: the reduced denominator must not vanish there.
    Germ,
    /// The square `[-h, h]^2`, scanned on a grid.
    Box { half_width: f64 },
}

impl Default for TestRegion {
    fn default() -> Self {
        TestRegion::Box { half_width: 1.0 }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum AdmissibilityVerdict {
    /// `g_x^2 - g = quotient * g_y` in `Q[x, y]`.
    AdmissibleExact { quotient: Poly },
    AdmissibleDegenerateFamily(DegenerateFamily),
    /// `witness` is nonzero: a division remainder, or `g_x^2 - g` when
    /// `g_y ≡ 0`.
    NotAdmissible { witness: Poly },
    /// The reduced fraction has no pole on the square of the given half
    /// width, found by a grid scan (or is smooth at the origin for a germ
    /// test, with the largest clean square recorded when one was found).
    NumericOnly {
        fraction: RationalFunction2,
        half_width: Option<f64>,
    },
}

impl AdmissibilityVerdict {
    pub fn is_admissible(&self) -> bool {
        !matches!(self, AdmissibilityVerdict::NotAdmissible { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            AdmissibilityVerdict::AdmissibleExact { .. } => "admissible-exact",
            AdmissibilityVerdict::AdmissibleDegenerateFamily(_) => "admissible-degenerate-family",
            AdmissibilityVerdict::NotAdmissible { .. } => "not-admissible",
            AdmissibilityVerdict::NumericOnly { .. } => "numeric-only",
        }
    }
}

/// Recognizes `0` and `x^2/4 - alpha x + alpha^2` among polynomials in `x`.
pub fn degenerate_family(g: &Poly) -> Option<DegenerateFamily> {
    if g.is_zero() {
        return Some(DegenerateFamily::Zero);
    }
    let alpha = -g.coeff(1, 0);
    let candidate = (&half_x() - &Poly::constant(alpha.clone())).pow(2);
    (&candidate == g).then_some(DegenerateFamily::Square { alpha })
}

/// Decides admissibility on the default region, the square `[-1, 1]^2`.
pub fn admissible_check(g: &Poly) -> AdmissibilityVerdict {
    admissible_check_on(g, &TestRegion::default())
}

pub fn admissible_check_on(g: &Poly, region: &TestRegion) -> AdmissibilityVerdict {
    let gy = g.partial_y();
    let h = &g.partial_x().pow(2) - g;
    let not_admissible = || AdmissibilityVerdict::NotAdmissible {
        witness: if gy.is_zero() {
            h.clone()
        } else {
            match h.exact_div(&gy) {
                Err(PolyError::NotDivisible { remainder }) => remainder,
                other => unreachable!("division already failed: {other:?}"),
            }
        },
    };
    match decide(g, &gy, &h, region) {
        Decision::Family(family) => AdmissibilityVerdict::AdmissibleDegenerateFamily(family),
        Decision::Exact(quotient) => AdmissibilityVerdict::AdmissibleExact { quotient },
        Decision::Reject => not_admissible(),
        Decision::Smooth => {
            let fraction = RationalFunction2::new(h.clone(), gy.clone()).expect("g_y is nonzero");
            let half_width = match region {
                TestRegion::Germ => clean_half_width(fraction.den()),
                TestRegion::Box { half_width } => Some(*half_width),
            };
            AdmissibilityVerdict::NumericOnly { fraction, half_width }
        }
    }
}

/// Whether the reduced denominator of `h / g_y` is nonzero at the origin.
/// With `h = x^a y^b h0` and `g_y = x^c y^d q0` (monomial parts split off),
/// that denominator is `x^(c-min) y^(d-min) q0 / gcd(h0, q0)`, and a gcd is
/// needed only when both `h0` and `q0` vanish at the origin.
fn germ_smooth(h: &Poly, gy: &Poly) -> bool {
    let (a, b) = h.monomial_content();
    let (c, d) = gy.monomial_content();
    if c > a || d > b {
        return false;
    }
    let h0 = h.unshift(a, b);
    let q0 = gy.unshift(c, d);
    if !q0.constant_term().is_zero() {
        return true;
    }
    if !h0.constant_term().is_zero() {
        return false;
    }
    // x does not divide q0, so a common factor free of y is a unit at the
    // origin and cannot cancel the zero of q0 there.
    if h0.coprime_in_y(&q0) {
        return false;
    }
    let den = q0.checked_div(&h0.gcd(&q0)).expect("gcd divides");
    !den.constant_term().is_zero()
}

/// The verdict of [`admissible_check_on`] without building certificates.
pub fn is_admissible_on(g: &Poly, region: &TestRegion) -> bool {
    let gy = g.partial_y();
    let h = &g.partial_x().pow(2) - g;
    match region {
        // Divisibility implies a smooth quotient, so the local test alone decides.
        TestRegion::Germ if !gy.is_zero() => germ_smooth(&h, &gy),
        _ => !matches!(decide(g, &gy, &h, region), Decision::Reject),
    }
}

enum Decision {
    Family(DegenerateFamily),
    Exact(Poly),
    /// Not divisible, but the reduced fraction is smooth on the region.
    Smooth,
    Reject,
}

fn decide(g: &Poly, gy: &Poly, h: &Poly, region: &TestRegion) -> Decision {
    if gy.is_zero() {
        return degenerate_family(g).map_or(Decision::Reject, Decision::Family);
    }
    if let Some(quotient) = h.checked_div(gy) {
        return Decision::Exact(quotient);
    }
    let smooth = match region {
        TestRegion::Germ => germ_smooth(h, gy),
        TestRegion::Box { half_width } => {
            if gy.constant_term().is_zero() && !h.constant_term().is_zero() {
                return Decision::Reject;
            }
            let den = gy.checked_div(&h.gcd(gy)).expect("gcd divides g_y");
            !den.constant_term().is_zero() && !vanishes_on_square(&den, *half_width)
        }
    };
    if smooth {
        Decision::Smooth
    } else {
        Decision::Reject
    }
}

const SCAN_NODES: usize = 65;

/// Grid scan of `[-h, h]^2`: a node where `p` is zero, or a sign change
/// between neighbouring nodes, counts as vanishing.
pub fn vanishes_on_square(p: &Poly, h: f64) -> bool {
    let terms: Vec<(u32, u32, f64)> = p.terms().map(|(m, c)| (m.x, m.y, c.to_f64())).collect();
    let eval = |x: f64, y: f64| -> f64 {
        terms
            .iter()
            .map(|&(i, j, c)| c * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    };
    let n = SCAN_NODES;
    let step = 2.0 * h / (n - 1) as f64;
    let mut prev_row: Vec<f64> = Vec::with_capacity(n);
    for r in 0..n {
        let y = -h + step * r as f64;
        let mut row: Vec<f64> = Vec::with_capacity(n);
        for c in 0..n {
            let x = -h + step * c as f64;
            let v = eval(x, y);
            if v == 0.0 || !v.is_finite() {
                return true;
            }
            if c > 0 && v.signum() != row[c - 1].signum() {
                return true;
            }
            if r > 0 && v.signum() != Float::signum(prev_row[c]) {
                return true;
            }
            row.push(v);
        }
        prev_row = row;
    }
    false
}

/// Largest of `1, 1/2, ..., 1/256` on whose square `p` does not vanish.
fn clean_half_width(p: &Poly) -> Option<f64> {
    let mut h = 1.0;
    for _ in 0..9 {
        if !vanishes_on_square(p, h) {
            return Some(h);
        }
        h *= 0.5;
    }
    None
}

/// Trace-`x` families whose discriminant does not depend on `y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum YIndependentKind {
    /// `[[x - alpha, 0], [c, alpha]]`, determinant `alpha x - alpha^2`.
    Diagonalizable(ExactRational),
    /// `[[x/2, 0], [c, x/2]]`, determinant `x^2/4`.
    ScalarNilpotent,
}

pub fn y_independent_operators(kind: &YIndependentKind, c: &Poly) -> OperatorField2 {
    match kind {
        YIndependentKind::Diagonalizable(alpha) => {
            let a = Poly::constant(alpha.clone());
            OperatorField2::from_polys(&Poly::x() - &a, Poly::zero(), c.clone(), a)
        }
        YIndependentKind::ScalarNilpotent => {
            OperatorField2::from_polys(half_x(), Poly::zero(), c.clone(), half_x())
        }
    }
}

/// `(x - f') f' - f` for a determinant `f(x)`.
pub fn y_independent_ode_residual(f: &Poly) -> Result<Poly, PolyError> {
    if f.depends_on_y() {
        return Err(PolyError::NotUnivariate(f.clone()));
    }
    let fp = f.partial_x();
    Ok(&(&(&Poly::x() - &fp) * &fp) - f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;
    use alloc::string::ToString;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn entries(r: &Reconstruction) -> [alloc::string::String; 4] {
        r.operator.entries().map(|e| e.to_string())
    }

    #[test]
    fn from_det_examples() {
        let r = reconstruct_from_det(&p("y")).unwrap();
        assert_eq!(entries(&r), ["x", "-1", "y", "0"]);
        let r = reconstruct_from_det(&p("-y^2")).unwrap();
        assert_eq!(entries(&r), ["x", "2*y", "1/2*y", "0"]);
        assert!(r.entry21_polynomial);
        let r = reconstruct_from_det(&p("x*y")).unwrap();
        assert!(!r.entry21_polynomial);
        assert_eq!(
            reconstruct_from_det(&p("x^2")),
            Err(DiscriminantError::DetIndependentOfY)
        );
    }

    #[test]
    fn from_disc_examples() {
        let r = reconstruct_from_disc(&p("y^3 + x^2/4")).unwrap();
        assert_eq!(entries(&r), ["x", "3*y^2", "1/3*y", "0"]);
        let r = reconstruct_from_disc(&p("-y^2")).unwrap();
        assert_eq!(entries(&r), ["1/2*x", "-2*y", "1/2*y", "1/2*x"]);
        assert!(r.operator.is_nijenhuis());
        let r = reconstruct_from_disc(&p("y^2 + 2*x*y")).unwrap();
        assert!(!r.entry21_polynomial);
        let r = reconstruct_from_disc(&p("y")).unwrap();
        assert_eq!(entries(&r), ["1/2*x", "1", "y", "1/2*x"]);
    }

    #[test]
    fn admissibility_examples() {
        assert_eq!(
            admissible_check(&p("x^2/4")),
            AdmissibilityVerdict::AdmissibleDegenerateFamily(DegenerateFamily::Square {
                alpha: ExactRational::zero()
            })
        );
        assert_eq!(
            admissible_check(&p("y^3")),
            AdmissibilityVerdict::AdmissibleExact { quotient: p("-y/3") }
        );
        assert_eq!(
            admissible_check(&p("y^2 + x^3")),
            AdmissibilityVerdict::NotAdmissible { witness: p("9*x^4 - x^3") }
        );
        assert_eq!(
            admissible_check(&p("x^2/4 - 2*x + 4")),
            AdmissibilityVerdict::AdmissibleDegenerateFamily(DegenerateFamily::Square {
                alpha: ExactRational::from_integer(2)
            })
        );
        assert!(!admissible_check(&p("3*x - 9")).is_admissible());
    }

    #[test]
    fn fallback_depends_on_region() {
        // The pole of (g_x^2 - g)/g_y sits at y = -2/3.
        let g = p("y^2 + y^3");
        assert!(!admissible_check(&g).is_admissible());
        assert!(admissible_check_on(&g, &TestRegion::Germ).is_admissible());
        assert!(admissible_check_on(&g, &TestRegion::Box { half_width: 0.5 }).is_admissible());
        // Pole on the line x = -1.
        let g = p("y + x*y");
        match admissible_check(&g) {
            AdmissibilityVerdict::NotAdmissible { witness } => assert!(!witness.is_zero()),
            other => panic!("unexpected {other:?}"),
        }
        assert!(admissible_check_on(&g, &TestRegion::Germ).is_admissible());
        // Pole through the origin.
        assert!(!admissible_check_on(&p("x*y"), &TestRegion::Germ).is_admissible());
        assert!(!admissible_check_on(&p("x*y^3"), &TestRegion::Germ).is_admissible());
    }

    #[test]
    fn y_independent_examples() {
        let two = ExactRational::from_integer(2);
        let op = y_independent_operators(&YIndependentKind::Diagonalizable(two.clone()), &p("x + y"));
        assert_eq!(op.to_string(), "[[x - 2, 0], [x + y, 2]]");
        assert!(op.is_nijenhuis());
        let op = y_independent_operators(&YIndependentKind::ScalarNilpotent, &Poly::one());
        assert_eq!(op.to_string(), "[[1/2*x, 0], [1, 1/2*x]]");
        assert!(y_independent_ode_residual(&p("2*x - 4")).unwrap().is_zero());
        assert!(y_independent_ode_residual(&p("x^2/4")).unwrap().is_zero());
        assert_eq!(y_independent_ode_residual(&p("x^3")).unwrap(), p("2*x^3 - 9*x^4"));
        assert!(y_independent_ode_residual(&p("x*y")).is_err());
    }
}
