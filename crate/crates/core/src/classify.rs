//! Classification of a candidate discriminant `g` at the origin.
//!
//! Dispatch order: `g_y(0,0) ≠ 0` (non-degenerate), `g_y ≡ 0`, then the
//! structural families (`g` depends on `y` only, `g = a(x) + b(x) y`,
//! homogeneous of degree other than 2), then the order of `g(0, y)` at zero
//! (2: Morse, 3: cubic). Anything else is undecided. The germ-level
//! divisibility verdict is always computed alongside as a cross-check.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::discriminant::{
    admissible_check_on, reconstruct_from_disc, y_independent_operators, AdmissibilityVerdict,
    DegenerateFamily, Reconstruction, TestRegion, YIndependentKind,
};
use crate::jets::{cubic_form, JetError, morse_form, normalize_in_y, series_pow, Jet2, YNormalization, YSubstitution};
use crate::operator::OperatorField2;
use crate::poly::{Poly, ZeroOrder};
use crate::ratfunc::RationalFunction2;
use crate::rational::ExactRational;
use crate::univariate::UniPoly;

pub const DEFAULT_JET_ORDER: u32 = 12;

/// `(τ')^2 - τ`
pub fn morse_residual(tau: &UniPoly) -> UniPoly {
    let d = tau.derivative();
    &(&d * &d) - tau
}

/// `(3τ'β' - τ, -τ(τ')^2 + 3(β')^2 - 3β)` for `g = ỹ^3 + τ ỹ + β`.
pub fn cubic_ode_residuals(tau: &UniPoly, beta: &UniPoly) -> (UniPoly, UniPoly) {
    cubic_residuals_scaled(tau, beta, &ExactRational::one())
}

/// The same system for `g = κ w^3 + σ w + β`, where `τ = σ / κ^(1/3)`;
/// the first residual is `κ^(1/3)` times the unscaled one.
fn cubic_residuals_scaled(sigma: &UniPoly, beta: &UniPoly, kappa: &ExactRational) -> (UniPoly, UniPoly) {
    let three = ExactRational::from_integer(3);
    let ds = sigma.derivative();
    let db = beta.derivative();
    let r1 = &(&ds * &db).scale(&three) - sigma;
    let r2 = &(&(&db * &db).scale(&three) - &beta.scale(&three))
        - &(&(sigma * &ds) * &ds).scale(&kappa.recip());
    (r1, r2)
}

/// Which test produced a verdict.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Path {
    NonDegenerate,
    YIndependent,
    Morse,
    Cubic,
    YOnly,
    LinearInY,
    Homogeneous,
    Divisibility,
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Path::NonDegenerate => "non-degenerate",
            Path::YIndependent => "y-independent",
            Path::Morse => "morse",
            Path::Cubic => "cubic",
            Path::YOnly => "y-only",
            Path::LinearInY => "linear-in-y",
            Path::Homogeneous => "homogeneous",
            Path::Divisibility => "divisibility",
        })
    }
}

/// A named nonzero expression certifying a negative verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub label: &'static str,
    pub value: Poly,
}

#[derive(Clone, PartialEq, Debug)]
pub enum Branch {
    /// `g_y(0,0) ≠ 0`
    NonDegenerate,
    /// `g_y ≡ 0` and `g` is `0` or `(x/2 - α)^2`.
    YIndependent(DegenerateFamily),
    /// `g = sign * ỹ^2 + τ`, `τ` either `x^2/4` (`with_quarter`) or `0`.
    Morse { sign: i32, with_quarter: bool },
    /// `g = ỹ^3 + β`, `β` either `x^2/4` or `0`.
    Cubic { with_quarter: bool },
    /// `g = sign * ỹ^k`
    YOnly { k: u32, sign: i32 },
    /// `g = a(x) + b(x) y` with `ord a = m ≥ ord b = k ≥ 2`; `m = None`
    /// when `a ≡ 0`.
    LinearInY { m: Option<u32>, k: u32 },
    /// `g = sign * x^m (a x + b y)^k`; `a`, `b` are `None` when `b` would be
    /// an irrational `k`-th root.
    Homogeneous {
        sign: i32,
        m: u32,
        k: u32,
        a: Option<ExactRational>,
        b: Option<ExactRational>,
    },
    NotAdmissible { path: Path, witnesses: Vec<Witness> },
    Undecided { reason: String },
}

impl Branch {
    pub fn tag(&self) -> &'static str {
        match self {
            Branch::NonDegenerate => "non-degenerate",
            Branch::YIndependent(_) => "y-independent",
            Branch::Morse { .. } => "morse",
            Branch::Cubic { .. } => "cubic",
            Branch::YOnly { .. } => "y-only",
            Branch::LinearInY { .. } => "linear-in-y",
            Branch::Homogeneous { .. } => "homogeneous",
            Branch::NotAdmissible { .. } => "not-admissible",
            Branch::Undecided { .. } => "undecided",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Admissible,
    NotAdmissible,
    Undecided,
}

/// The second coordinate `ỹ` in which the normal form holds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coordinates {
    Identity,
    Polynomial(Poly),
    Rational(RationalFunction2),
    Jet(YSubstitution),
}

impl fmt::Display for Coordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coordinates::Identity => f.write_str("y"),
            Coordinates::Polynomial(p) => write!(f, "{p}"),
            Coordinates::Rational(r) => write!(f, "{r}"),
            Coordinates::Jet(s) => write!(f, "{s}"),
        }
    }
}

/// How strongly the normal form is established.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Certificate {
    /// The identity holds exactly as polynomials or rational functions.
    Exact,
    /// The identity is checked through the given total order only.
    JetOrder(u32),
    None,
}

#[derive(Clone, PartialEq, Debug)]
pub struct ClassificationResult {
    pub branch: Branch,
    pub coordinates: Coordinates,
    /// Normal form in `(x, ỹ)`, written with `y` standing for `ỹ`.
    pub normal_form: Option<Poly>,
    /// Canonical operator in `(x, ỹ)`.
    pub operator: Option<OperatorField2>,
    /// Operator with trace `x` and discriminant `g` in the input coordinates.
    pub reconstructed: Option<Reconstruction>,
    pub certificate: Certificate,
    /// Germ-level divisibility verdict, always computed.
    pub raw: AdmissibilityVerdict,
    pub notes: Vec<String>,
}

impl ClassificationResult {
    pub fn verdict(&self) -> Verdict {
        match self.branch {
            Branch::NotAdmissible { .. } => Verdict::NotAdmissible,
            Branch::Undecided { .. } => Verdict::Undecided,
            _ => Verdict::Admissible,
        }
    }

    fn new(branch: Branch, raw: AdmissibilityVerdict) -> Self {
        ClassificationResult {
            branch,
            coordinates: Coordinates::Identity,
            normal_form: None,
            operator: None,
            reconstructed: None,
            certificate: Certificate::None,
            raw,
            notes: Vec::new(),
        }
    }

    fn with_normal_form(mut self, normal_form: Poly) -> Self {
        self.operator = reconstruct_from_disc(&normal_form).ok().map(|r| r.operator);
        self.normal_form = Some(normal_form);
        self
    }
}

/// Light outcome of a normalization path, without operators.
#[derive(Clone, PartialEq, Debug)]
pub struct PathDecision {
    pub admissible: bool,
    /// Low-order normalization that fixes the candidate normal form.
    pub normalization: YNormalization,
    /// `τ` or `β` of the normal form when admissible.
    pub tail: Option<UniPoly>,
    /// Why the germ is not admissible: nonzero residuals truncated to the
    /// orders where they are determined, or a polynomial lacking the
    /// required repeated factor.
    pub witnesses: Vec<Witness>,
}

fn coeff_at(c: &[ExactRational], i: usize) -> ExactRational {
    c.get(i).cloned().unwrap_or_default()
}

/// Coefficient `x^i` of the derivative of the series with coefficients `c`.
fn deriv_at(c: &[ExactRational], i: usize) -> ExactRational {
    match c.get(i + 1) {
        Some(v) if !v.is_zero() => v * &ExactRational::from_integer(i as i64 + 1),
        _ => ExactRational::zero(),
    }
}

/// Coefficient `x^n` of `a * b` given coefficient closures.
fn product_at<A, B>(n: usize, a: A, b: B) -> ExactRational
where
    A: Fn(usize) -> ExactRational,
    B: Fn(usize) -> ExactRational,
{
    let mut acc = ExactRational::zero();
    for i in 0..=n {
        let ai = a(i);
        if !ai.is_zero() {
            let bj = b(n - i);
            if !bj.is_zero() {
                acc += &(&ai * &bj);
            }
        }
    }
    acc
}

/// Coefficient `x^n` of `(τ')^2 - τ`.
fn morse_residual_at(tau: &[ExactRational], n: usize) -> ExactRational {
    product_at(n, |i| deriv_at(tau, i), |j| deriv_at(tau, j)) - coeff_at(tau, n)
}

/// Whether coefficient `x^n` of both scaled cubic residuals vanishes.
fn cubic_residuals_vanish_at(sigma: &[ExactRational], beta: &[ExactRational], kappa: &ExactRational, n: usize) -> bool {
    let r1 = product_at(n, |i| deriv_at(sigma, i), |j| deriv_at(beta, j)) * ExactRational::from_integer(3)
        - coeff_at(sigma, n);
    if !r1.is_zero() {
        return false;
    }
    let beta_sq = product_at(n, |i| deriv_at(beta, i), |j| deriv_at(beta, j));
    let sigma_term = product_at(
        n,
        |i| coeff_at(sigma, i),
        |m| product_at(m, |i| deriv_at(sigma, i), |j| deriv_at(sigma, j)),
    );
    let r2 = (beta_sq - coeff_at(beta, n)) * ExactRational::from_integer(3) - sigma_term / kappa.clone();
    r2.is_zero()
}

/// Enough rows to pin the `x^2` coefficient of `τ` or `β`.
const PROBE_ORDER: u32 = 3;

/// Whether `p = u f^k` near the origin with `f(0, 0) = 0` and `u(0, 0) ≠ 0`,
/// given that `p(0, y)` has order exactly `k`. Any irreducible `f` through the
/// origin dividing `p, p_y, …, p_y^(k-1)` has `f_y ≢ 0`, so `f^k | p`.
fn has_power_factor_at_origin(p: &Poly, k: u32) -> bool {
    let mut common = p.clone();
    let mut d = p.clone();
    for _ in 1..k {
        d = d.partial_y();
        common = common.gcd(&d);
        if !common.constant_term().is_zero() {
            return false;
        }
    }
    true
}

/// `c x^2` for `c` in `{0, 1/4}`, read off a series.
fn quarter_square(s: &UniPoly) -> Option<UniPoly> {
    let c = s.coeff(2);
    let quarter = ExactRational::from_ratio(1, 4).expect("nonzero");
    (c.is_zero() || c == quarter).then(|| UniPoly::monomial(c, 2))
}

/// Settles a candidate that passed the low-order residuals: `g - tail` must
/// be a unit times a `k`-th power of a smooth germ.
fn confirm(g: &Poly, k: u32, series: &UniPoly, labels: [&'static str; 2]) -> (Option<UniPoly>, Vec<Witness>) {
    let Some(tail) = quarter_square(series) else {
        let witness = Witness {
            label: labels[0],
            value: Poly::from_x_poly(&series.truncate(2)),
        };
        return (None, vec![witness]);
    };
    let rest = g - &Poly::from_x_poly(&tail);
    if has_power_factor_at_origin(&rest, k) {
        (Some(tail), Vec::new())
    } else {
        (None, vec![Witness { label: labels[1], value: rest }])
    }
}

/// Decides `g` with `g(0, y)` of order exactly 2 at zero, or `None` when the
/// hypothesis fails.
pub fn morse_decision(g: &Poly) -> Option<PathDecision> {
    // Coefficient x^(n-1) of the residual needs τ through x^n.
    let mut failed = false;
    let norm = normalize_in_y(g, 2, PROBE_ORDER, |n, c| {
        failed = !morse_residual_at(&c[0], n - 1).is_zero();
        !failed
    })?;
    let (tail, witnesses) = if failed {
        let valid = norm.solved_through.saturating_sub(1) as usize;
        let witness = Witness {
            label: "(tau')^2 - tau",
            value: Poly::from_x_poly(&morse_residual(&norm.coeffs[0]).truncate(valid)),
        };
        (None, vec![witness])
    } else {
        confirm(
            g,
            2,
            &norm.coeffs[0],
            ["tau through x^2, neither 0 nor x^2/4", "g - tau, without a squared factor at the origin"],
        )
    };
    Some(PathDecision {
        admissible: tail.is_some(),
        normalization: norm,
        tail,
        witnesses,
    })
}

/// Decides `g` with `g(0, y)` of order exactly 3 at zero.
pub fn cubic_decision(g: &Poly) -> Option<PathDecision> {
    let kappa = g.coeff(0, 3);
    let mut failed = false;
    let norm = normalize_in_y(g, 3, PROBE_ORDER, |n, c| {
        failed = !cubic_residuals_vanish_at(&c[1], &c[0], &kappa, n - 1);
        !failed
    })?;
    if !failed {
        let (tail, witnesses) = confirm(
            g,
            3,
            &norm.coeffs[0],
            ["beta through x^2, neither 0 nor x^2/4", "g - beta, without a cubed factor at the origin"],
        );
        return Some(PathDecision {
            admissible: tail.is_some(),
            normalization: norm,
            tail,
            witnesses,
        });
    }
    let valid = norm.solved_through.saturating_sub(1) as usize;
    let (sigma, beta) = (&norm.coeffs[1], &norm.coeffs[0]);
    let (r1, r2, labels) = match kappa.nth_root_exact(3) {
        Some(root) => {
            let (r1, r2) = cubic_ode_residuals(&sigma.scale(&root.recip()), beta);
            (r1, r2, ["3 tau' beta' - tau", "-tau (tau')^2 + 3 (beta')^2 - 3 beta"])
        }
        None => {
            let (r1, r2) = cubic_residuals_scaled(sigma, beta, &kappa);
            (r1, r2, ["3 sigma' beta' - sigma", "-sigma (sigma')^2 / kappa + 3 (beta')^2 - 3 beta"])
        }
    };
    let witnesses = labels
        .into_iter()
        .zip([r1, r2])
        .map(|(label, r)| (label, r.truncate(valid)))
        .filter(|(_, r)| !r.is_zero())
        .map(|(label, r)| Witness {
            label,
            value: Poly::from_x_poly(&r),
        })
        .collect();
    Some(PathDecision {
        admissible: false,
        normalization: norm,
        tail: None,
        witnesses,
    })
}

/// Full result for `g` of `y`-order 2 at the origin.
pub fn morse_path(g: &Poly, order: u32) -> Result<ClassificationResult, JetError> {
    let d = morse_decision(g).ok_or(JetError::NotMorseInY)?;
    let raw = admissible_check_on(g, &TestRegion::Germ);
    Ok(finish_morse(g, d, order, raw))
}

/// Full result for `g` of `y`-order 3 at the origin.
pub fn cubic_path(g: &Poly, order: u32) -> Result<ClassificationResult, JetError> {
    let d = cubic_decision(g).ok_or(JetError::NotCubicInY)?;
    let raw = admissible_check_on(g, &TestRegion::Germ);
    Ok(finish_cubic(g, d, order, raw))
}

fn raw_witnesses(raw: &AdmissibilityVerdict) -> Vec<Witness> {
    match raw {
        AdmissibilityVerdict::NotAdmissible { witness } => vec![Witness {
            label: "remainder",
            value: witness.clone(),
        }],
        _ => Vec::new(),
    }
}

pub fn classify(g: &Poly, jet_order: u32) -> ClassificationResult {
    let raw = admissible_check_on(g, &TestRegion::Germ);
    let gy = g.partial_y();
    let mut result = if !gy.constant_term().is_zero() {
        ClassificationResult::new(Branch::NonDegenerate, raw).with_normal_form(g.clone())
    } else if gy.is_zero() {
        classify_y_independent(g, raw)
    } else if !g.depends_on_x() {
        classify_y_only(g, jet_order, raw)
    } else if g.degree_y() == Some(1) {
        classify_linear_in_y(g, raw)
    } else if g.homogeneous_degree().is_some_and(|d| d != 2) {
        classify_homogeneous(g, raw)
    } else {
        classify_by_y_order(g, jet_order, raw)
    };
    if result.certificate == Certificate::None && result.verdict() == Verdict::Admissible {
        result.certificate = Certificate::Exact;
    }
    if !gy.is_zero() {
        result.reconstructed = reconstruct_from_disc(g).ok();
    }
    if result.verdict() == Verdict::Admissible && !result.raw.is_admissible() {
        result.notes.push(String::from("divisibility cross-check disagrees"));
    }
    result
}

fn classify_y_independent(g: &Poly, raw: AdmissibilityVerdict) -> ClassificationResult {
    match &raw {
        AdmissibilityVerdict::AdmissibleDegenerateFamily(family) => {
            let kind = match family {
                DegenerateFamily::Zero => YIndependentKind::ScalarNilpotent,
                DegenerateFamily::Square { alpha } => YIndependentKind::Diagonalizable(alpha.clone()),
            };
            let family = family.clone();
            let mut r = ClassificationResult::new(Branch::YIndependent(family), raw);
            r.operator = Some(y_independent_operators(&kind, &Poly::one()));
            r.normal_form = Some(g.clone());
            r
        }
        _ => {
            let witness = Witness {
                label: "g_x^2 - g",
                value: &g.partial_x().pow(2) - g,
            };
            ClassificationResult::new(
                Branch::NotAdmissible {
                    path: Path::YIndependent,
                    witnesses: vec![witness],
                },
                raw,
            )
        }
    }
}

/// `g = G(y)` with `G(0) = 0` and a zero of finite order `k ≥ 2`.
fn classify_y_only(g: &Poly, jet_order: u32, raw: AdmissibilityVerdict) -> ClassificationResult {
    let big_g = g.restrict_x_zero();
    let k = match big_g.order_at_zero() {
        Some(k) if k >= 2 => k,
        _ => return undecided(raw, "g depends on y only but does not vanish at the origin"),
    };
    let lead = big_g.coeff(k);
    let sign = lead.signum();
    // G = c y^k F, F(0) = 1, so ±ỹ^k = G with ỹ = |c|^(1/k) y F^(1/k).
    let unit = big_g.shift_down(k).scale(&lead.recip());
    let root = series_pow(&unit, &ExactRational::from_ratio(1, k as i64).expect("k > 0"), jet_order as usize);
    let base = Jet2::from_x_rows(&[root.shift_up(1)], jet_order);
    let radicand = lead.abs();
    let normal = Poly::monomial(ExactRational::from_integer(sign as i64), 0, k as u32);
    let mut r = ClassificationResult::new(Branch::YOnly { k: k as u32, sign }, raw)
        .with_normal_form(normal);
    match (unit.is_constant(), radicand.nth_root_exact(k as u32)) {
        (true, Some(s)) => {
            let ytilde = Poly::y().scale(&s);
            r.coordinates = if ytilde == Poly::y() {
                Coordinates::Identity
            } else {
                Coordinates::Polynomial(ytilde)
            };
            r.certificate = Certificate::Exact;
        }
        _ => {
            r.coordinates = Coordinates::Jet(YSubstitution {
                base,
                radicand,
                root: k as u32,
            });
            r.certificate = Certificate::JetOrder(jet_order);
        }
    }
    r
}

fn order_of(p: &UniPoly) -> Option<u32> {
    p.order_at_zero().map(|o| o as u32)
}

/// Checks `g = a(x) + b(x) y`, `ord a ≥ ord b ≥ 2`.
pub fn linear_in_y_check(a: &UniPoly, b: &UniPoly) -> Result<ClassificationResult, OrderViolation> {
    let k = order_of(b).ok_or(OrderViolation { m: order_of(a), k: None })?;
    let m = order_of(a);
    if k < 2 || m.is_some_and(|m| m < k) {
        return Err(OrderViolation { m, k: Some(k) });
    }
    let g = &Poly::from_x_poly(a) + &(&Poly::from_x_poly(b) * &Poly::y());
    let raw = admissible_check_on(&g, &TestRegion::Germ);
    Ok(linear_in_y_result(a, b, m, k, raw))
}

/// Order hypotheses of the linear-in-`y` family fail; `None` is infinite.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("order conditions fail: ord a = {m:?}, ord b = {k:?}")]
pub struct OrderViolation {
    pub m: Option<u32>,
    pub k: Option<u32>,
}

fn linear_in_y_result(
    a: &UniPoly,
    b: &UniPoly,
    m: Option<u32>,
    k: u32,
    raw: AdmissibilityVerdict,
) -> ClassificationResult {
    let pa = Poly::from_x_poly(a);
    let pb = Poly::from_x_poly(b);
    let da = pa.partial_x();
    let db = pb.partial_x();
    let fractions = [
        ("(b')^2/b", db.pow(2)),
        ("a'b'/b", &da * &db),
        ("b/b", pb.clone()),
        ("(a')^2/b", da.pow(2)),
        ("a/b", pa.clone()),
    ];
    let mut r = ClassificationResult::new(Branch::LinearInY { m, k }, raw);
    let mut all_polynomial = true;
    for (label, top) in fractions {
        let q = RationalFunction2::new(top, pb.clone()).expect("b is nonzero");
        if !q.is_polynomial() {
            all_polynomial = false;
            let smooth = !q.den().constant_term().is_zero();
            r.notes.push(format!(
                "{label} = {q} is {}",
                if smooth { "smooth at the origin" } else { "singular at the origin" }
            ));
        }
    }
    if all_polynomial {
        r.notes.push(String::from("all five fractions are polynomial"));
    }
    let shift = RationalFunction2::new(pa, pb.clone()).expect("b is nonzero");
    let ytilde = &shift + &RationalFunction2::from_poly(Poly::y());
    r.coordinates = match ytilde.as_poly() {
        Some(p) if *p == Poly::y() => Coordinates::Identity,
        Some(p) => Coordinates::Polynomial(p.clone()),
        None => Coordinates::Rational(ytilde),
    };
    // In (x, ỹ) the discriminant is b(x) ỹ.
    r.with_normal_form(&pb * &Poly::y())
}

fn classify_linear_in_y(g: &Poly, raw: AdmissibilityVerdict) -> ClassificationResult {
    let rows = g.to_y_coeffs();
    let a = rows[0].clone();
    let b = rows[1].clone();
    match linear_in_y_check(&a, &b) {
        Ok(mut r) => {
            r.raw = raw;
            r
        }
        Err(v) => routed_to_raw(raw, Path::LinearInY, &format!("{v}")),
    }
}

fn routed_to_raw(raw: AdmissibilityVerdict, path: Path, why: &str) -> ClassificationResult {
    if raw.is_admissible() {
        undecided(raw, &format!("{why}; divisibility says admissible"))
    } else {
        let witnesses = raw_witnesses(&raw);
        let mut r = ClassificationResult::new(Branch::NotAdmissible { path, witnesses }, raw);
        r.notes.push(String::from(why));
        r
    }
}

fn undecided(raw: AdmissibilityVerdict, reason: &str) -> ClassificationResult {
    ClassificationResult::new(
        Branch::Undecided {
            reason: String::from(reason),
        },
        raw,
    )
}

/// Homogeneous `g` of degree other than 2 with `g_y ≢ 0`: admissible iff
/// `g = c x^m (y + r x)^k` with `m ≠ 1`.
pub fn homogeneous_classify(g: &Poly) -> ClassificationResult {
    classify_homogeneous(g, admissible_check_on(g, &TestRegion::Germ))
}

/// `g` with `g_y ≡ 0`.
pub fn y_independent_check(g: &Poly) -> ClassificationResult {
    classify_y_independent(g, admissible_check_on(g, &TestRegion::Germ))
}

/// `g = G(y)` with a zero of order `k ≥ 2` at the origin.
pub fn y_only_check(g: &Poly, jet_order: u32) -> Result<ClassificationResult, YOnlyError> {
    if g.depends_on_x() {
        return Err(YOnlyError::DependsOnX);
    }
    match g.restrict_x_zero().order_at_zero() {
        Some(k) if k >= 2 => Ok(classify_y_only(g, jet_order, admissible_check_on(g, &TestRegion::Germ))),
        k => Err(YOnlyError::OrderTooLow(k.map(|k| k as u32))),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum YOnlyError {
    #[error("g depends on x")]
    DependsOnX,
    /// `None` for `g ≡ 0`.
    #[error("order of the zero at the origin is {0:?}, need at least 2")]
    OrderTooLow(Option<u32>),
}

fn classify_homogeneous(g: &Poly, raw: AdmissibilityVerdict) -> ClassificationResult {
    let m = g.x_multiplicity();
    let q = g.exact_div(&Poly::monomial(ExactRational::one(), m, 0)).expect("x^m divides g");
    let k = q.degree_y().expect("q is nonzero");
    let c = q.coeff(0, k);
    let r_coef = &q.coeff(1, k - 1) / &(&c * &ExactRational::from_integer(k as i64));
    let shifted = &Poly::y() + &Poly::x().scale(&r_coef);
    let matches = q == shifted.pow(k).scale(&c);
    if !matches {
        return routed_to_raw(raw, Path::Homogeneous, "not of the form c x^m (y + r x)^k");
    }
    if m == 1 {
        let witnesses = raw_witnesses(&raw);
        let mut r = ClassificationResult::new(
            Branch::NotAdmissible {
                path: Path::Homogeneous,
                witnesses,
            },
            raw,
        );
        r.notes.push(String::from("x-multiplicity m = 1"));
        return r;
    }
    // ±b^k = c
    let (sign, b) = if k % 2 == 1 {
        (1, c.nth_root_exact(k))
    } else {
        (c.signum(), c.abs().nth_root_exact(k))
    };
    let a = b.as_ref().map(|b| &r_coef * b);
    let xm = Poly::monomial(ExactRational::one(), m, 0);
    let mut res = ClassificationResult::new(
        Branch::Homogeneous {
            sign,
            m,
            k,
            a: a.clone(),
            b: b.clone(),
        },
        raw,
    );
    match (a, b) {
        (Some(a), Some(b)) => {
            let ytilde = &Poly::x().scale(&a) + &Poly::y().scale(&b);
            res.coordinates = if ytilde == Poly::y() {
                Coordinates::Identity
            } else {
                Coordinates::Polynomial(ytilde)
            };
            let normal = (&xm * &Poly::y().pow(k)).scale(&ExactRational::from_integer(sign as i64));
            res.with_normal_form(normal)
        }
        _ => {
            res.coordinates = Coordinates::Polynomial(shifted);
            res.notes.push(format!(
                "{c} has no rational {k}-th root; normal form keeps the coefficient"
            ));
            res.with_normal_form((&xm * &Poly::y().pow(k)).scale(&c))
        }
    }
}

fn classify_by_y_order(g: &Poly, jet_order: u32, raw: AdmissibilityVerdict) -> ClassificationResult {
    if !g.constant_term().is_zero() {
        return undecided(raw, "g does not vanish at the origin");
    }
    match g.y_order_at_origin() {
        ZeroOrder::Finite(2) => {
            let d = morse_decision(g).expect("order 2 in y");
            finish_morse(g, d, jet_order, raw)
        }
        ZeroOrder::Finite(3) => {
            let d = cubic_decision(g).expect("order 3 in y");
            finish_cubic(g, d, jet_order, raw)
        }
        ZeroOrder::Finite(k) => undecided(raw, &format!("g(0, y) vanishes to order {k} with x-dependence")),
        ZeroOrder::Infinite => undecided(raw, "g(0, y) vanishes identically"),
    }
}

fn substitution_coordinates(
    sub: &YSubstitution,
    exact: bool,
    jet_order: u32,
) -> (Coordinates, Certificate) {
    if exact && sub.is_rational() {
        let p = sub.base.to_poly();
        let coords = if p == Poly::y() {
            Coordinates::Identity
        } else {
            Coordinates::Polynomial(p)
        };
        (coords, Certificate::Exact)
    } else if exact {
        (Coordinates::Jet(sub.clone()), Certificate::Exact)
    } else {
        (Coordinates::Jet(sub.clone()), Certificate::JetOrder(jet_order))
    }
}

const FACTOR_NOTE: &str =
    "normal form confirmed by an exact repeated-factor test; coordinates are a truncated jet";

fn finish_morse(g: &Poly, d: PathDecision, jet_order: u32, raw: AdmissibilityVerdict) -> ClassificationResult {
    if !d.admissible {
        return ClassificationResult::new(
            Branch::NotAdmissible {
                path: Path::Morse,
                witnesses: d.witnesses,
            },
            raw,
        );
    }
    let tail = d.tail.expect("admissible decisions carry the tail");
    let norm = normalize_in_y(g, 2, jet_order.max(PROBE_ORDER), |_, _| true).expect("order 2 in y");
    let exact = norm.is_exact_for(g);
    let form = morse_form(norm);
    let with_quarter = !tail.is_zero();
    let normal = &Poly::y().pow(2).scale(&ExactRational::from_integer(form.sign as i64))
        + &Poly::from_x_poly(&tail);
    let mut r = ClassificationResult::new(
        Branch::Morse {
            sign: form.sign,
            with_quarter,
        },
        raw,
    )
    .with_normal_form(normal);
    (r.coordinates, r.certificate) = substitution_coordinates(&form.sub, exact, jet_order);
    if !exact {
        r.notes.push(String::from(FACTOR_NOTE));
    }
    r
}

fn finish_cubic(g: &Poly, d: PathDecision, jet_order: u32, raw: AdmissibilityVerdict) -> ClassificationResult {
    if !d.admissible {
        return ClassificationResult::new(
            Branch::NotAdmissible {
                path: Path::Cubic,
                witnesses: d.witnesses,
            },
            raw,
        );
    }
    let tail = d.tail.expect("admissible decisions carry the tail");
    let norm = normalize_in_y(g, 3, jet_order.max(PROBE_ORDER), |_, _| true).expect("order 3 in y");
    let exact = norm.is_exact_for(g);
    let form = cubic_form(norm);
    let with_quarter = !tail.is_zero();
    let normal = &Poly::y().pow(3) + &Poly::from_x_poly(&tail);
    let mut r = ClassificationResult::new(Branch::Cubic { with_quarter }, raw).with_normal_form(normal);
    (r.coordinates, r.certificate) = substitution_coordinates(&form.sub, exact, jet_order);
    if !exact {
        r.notes.push(String::from(FACTOR_NOTE));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;
    use alloc::string::ToString;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn up(s: &str) -> UniPoly {
        p(s).as_x_poly().unwrap()
    }

    fn ops(r: &ClassificationResult) -> String {
        r.operator.as_ref().unwrap().to_string()
    }

    #[test]
    fn dispatch_examples() {
        let r = classify(&p("y^2 - x^2*y"), 12);
        assert!(matches!(r.branch, Branch::Morse { .. } | Branch::NotAdmissible { path: Path::Morse, .. }));
        let r = classify(&p("3*x - 9"), 12);
        assert!(matches!(r.branch, Branch::NotAdmissible { path: Path::YIndependent, .. }));
        let r = classify(&p("y"), 12);
        assert_eq!(r.branch, Branch::NonDegenerate);
        assert_eq!(ops(&r), "[[1/2*x, 1], [y, 1/2*x]]");
    }

    #[test]
    fn morse_examples() {
        let r = classify(&p("y^2 + x^2/4"), 12);
        assert_eq!(r.branch, Branch::Morse { sign: 1, with_quarter: true });
        assert_eq!(ops(&r), "[[x, 2*y], [1/2*y, 0]]");
        assert_eq!(r.certificate, Certificate::Exact);

        let r = classify(&p("y^2 + 2*x*y"), 12);
        match &r.branch {
            Branch::NotAdmissible { path: Path::Morse, witnesses } => {
                assert_eq!(witnesses[0].value, p("5*x^2"))
            }
            other => panic!("unexpected {other:?}"),
        }
        let r = classify(&p("-y^2 - x*y^2"), 12);
        assert_eq!(r.branch, Branch::Morse { sign: -1, with_quarter: false });
        assert_eq!(ops(&r), "[[1/2*x, -2*y], [1/2*y, 1/2*x]]");
        assert!(matches!(r.coordinates, Coordinates::Jet(_)));

        // Admissible at the origin without a polynomial quotient.
        let r = classify(&p("y^2 + y^3 + x^2/4"), 12);
        assert_eq!(r.verdict(), Verdict::Admissible);
        assert!(matches!(r.certificate, Certificate::JetOrder(12)));
        assert!(r.raw.is_admissible());
    }

    #[test]
    fn cubic_examples() {
        let r = classify(&p("y^3 + x*y^2 + x^2/4"), 12);
        assert_eq!(r.verdict(), Verdict::NotAdmissible);
        let r = classify(&p("y^3 + x^2/4 + x^2*y"), 12);
        assert_eq!(r.verdict(), Verdict::NotAdmissible);
        let r = classify(&p("y^3 + x*y"), 12);
        assert!(matches!(r.branch, Branch::NotAdmissible { path: Path::Cubic, .. }));
        let r = classify(&p("(y + x)^3 + x^2/4"), 12);
        assert_eq!(r.branch, Branch::Cubic { with_quarter: true });
        assert_eq!(r.coordinates, Coordinates::Polynomial(p("x + y")));
        assert_eq!(ops(&r), "[[x, 3*y^2], [1/3*y, 0]]");
    }

    #[test]
    fn cubic_residual_system() {
        let (r1, r2) = cubic_ode_residuals(&UniPoly::zero(), &up("x^2/4"));
        assert!(r1.is_zero() && r2.is_zero());
        let (r1, r2) = cubic_ode_residuals(&UniPoly::zero(), &UniPoly::zero());
        assert!(r1.is_zero() && r2.is_zero());
        let (r1, r2) = cubic_ode_residuals(&UniPoly::zero(), &up("x^2/8"));
        assert!(r1.is_zero() && !r2.is_zero());
        assert_eq!(morse_residual(&up("-x^2")), up("5*x^2"));
    }

    #[test]
    fn y_only_examples() {
        let r = classify(&p("y^4"), 12);
        assert_eq!(r.branch, Branch::YOnly { k: 4, sign: 1 });
        assert_eq!(ops(&r), "[[1/2*x, 4*y^3], [1/4*y, 1/2*x]]");
        let r = classify(&p("y^2 + y^3"), 12);
        assert_eq!(r.branch, Branch::YOnly { k: 2, sign: 1 });
        let rec = r.reconstructed.as_ref().unwrap();
        assert_eq!(rec.operator.c().to_string(), "(y^2 + y)/(3*y + 2)");
        assert!(r.raw.is_admissible());
    }

    #[test]
    fn linear_in_y_examples() {
        for (a, b) in [("x^4", "x^2"), ("0", "x^3"), ("x^3", "x^2")] {
            let r = linear_in_y_check(&up(a), &up(b)).unwrap();
            assert_eq!(r.verdict(), Verdict::Admissible);
            assert!(r.operator.as_ref().unwrap().is_nijenhuis());
        }
        assert_eq!(
            linear_in_y_check(&up("x"), &up("x^2")),
            Err(OrderViolation { m: Some(1), k: Some(2) })
        );
        let r = classify(&p("x^4 + x^2*y"), 12);
        assert_eq!(r.branch, Branch::LinearInY { m: Some(4), k: 2 });
        assert_eq!(r.coordinates, Coordinates::Polynomial(p("x^2 + y")));
    }

    #[test]
    fn homogeneous_examples() {
        let r = classify(&p("x^2*y^3"), 12);
        assert_eq!(
            r.branch,
            Branch::Homogeneous {
                sign: 1,
                m: 2,
                k: 3,
                a: Some(ExactRational::zero()),
                b: Some(ExactRational::one())
            }
        );
        let r = classify(&p("x*y^3"), 12);
        assert!(matches!(r.branch, Branch::NotAdmissible { path: Path::Homogeneous, .. }));
        let r = classify(&p("(x + 2*y)^3"), 12);
        assert!(matches!(r.branch, Branch::Homogeneous { m: 0, k: 3, .. }));
        let r = classify(&p("2*x^2*y^2"), 12);
        assert!(matches!(r.branch, Branch::Homogeneous { a: None, b: None, .. }));
        assert!(r.operator.as_ref().unwrap().is_nijenhuis());
    }

    #[test]
    fn direct_entry_points() {
        assert_eq!(y_only_check(&p("y"), 12), Err(YOnlyError::OrderTooLow(Some(1))));
        assert_eq!(y_only_check(&p("x*y^2"), 12), Err(YOnlyError::DependsOnX));
        assert!(y_only_check(&p("y^2 + y^3"), 12).unwrap().operator.unwrap().is_nijenhuis());
        assert_eq!(morse_path(&p("y^3"), 12), Err(JetError::NotMorseInY));
        let r = cubic_path(&p("y^3"), 12).unwrap();
        assert_eq!(r.branch, Branch::Cubic { with_quarter: false });
        assert_eq!(ops(&r), "[[1/2*x, 3*y^2], [1/3*y, 1/2*x]]");
        let r = morse_path(&p("-y^2"), 12).unwrap();
        assert_eq!(r.branch, Branch::Morse { sign: -1, with_quarter: false });
        assert_eq!(ops(&r), "[[1/2*x, -2*y], [1/2*y, 1/2*x]]");
    }

    #[test]
    fn undecided_at_high_y_order() {
        let r = classify(&p("y^4 + x*y^5"), 12);
        assert_eq!(r.verdict(), Verdict::Undecided);
    }
}
