//! Command results as a JSON value, a text rendering and an exit outcome.
//!
//! JSON objects carry `"schema": 1`; every expression is a string that
//! parses back to the same polynomial or rational function. Keys come out
//! sorted because serde_json's map is ordered.

use std::fmt::Write as _;

use nijenhuis_core::classify::{Branch, Certificate, ClassificationResult, Verdict};
use nijenhuis_core::discriminant::{
    degenerate_family, y_independent_operators, AdmissibilityVerdict, DegenerateFamily, Reconstruction,
    TestRegion, YIndependentKind,
};
use nijenhuis_core::jets::RootDerivativeCheck;
use nijenhuis_core::{ExactRational, OperatorField2, Poly, PolyError, RationalFunction2};
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Outcome {
    Positive,
    Negative,
    InputError,
    Undecided,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Positive => 0,
            Outcome::Negative => 1,
            Outcome::InputError => 2,
            Outcome::Undecided => 3,
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Positive
        } else {
            Outcome::Negative
        }
    }
}

/// ANSI color for verdict words only.
#[derive(Copy, Clone, Default, Debug)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(self, word: &str, outcome: Outcome) -> String {
        if !self.color {
            return word.to_string();
        }
        let code = match outcome {
            Outcome::Positive => "32",
            Outcome::Negative | Outcome::InputError => "31",
            Outcome::Undecided => "33",
        };
        format!("\x1b[1;{code}m{word}\x1b[0m")
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub outcome: Outcome,
}

fn envelope(command: &str, body: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, body) {
        dst.extend(src);
    }
    v
}

fn entries_json(op: &OperatorField2) -> Value {
    Value::Array(op.entries().iter().map(|e| Value::String(e.to_string())).collect())
}

fn entries_text(out: &mut String, op: &OperatorField2) {
    let [a, b, c, d] = op.entries();
    let _ = writeln!(out, "L11 = {a}");
    let _ = writeln!(out, "L12 = {b}");
    let _ = writeln!(out, "L21 = {c}");
    let _ = writeln!(out, "L22 = {d}");
}

pub fn torsion(op: &OperatorField2, style: Style) -> Report {
    let t = op.torsion_components();
    let ok = t.is_zero();
    let outcome = Outcome::from_bool(ok);
    let word = if ok { "NIJENHUIS" } else { "NOT NIJENHUIS" };
    let text = format!("L = {op}\nn1 = {}, n2 = {}, {}\n", t.n1, t.n2, style.paint(word, outcome));
    let json = envelope(
        "torsion",
        json!({
            "operator": entries_json(op),
            "n1": t.n1.to_string(),
            "n2": t.n2.to_string(),
            "nijenhuis": ok,
        }),
    );
    Report { json, text, outcome }
}

pub fn region_json(region: &TestRegion) -> Value {
    match region {
        TestRegion::Germ => json!({ "kind": "germ" }),
        TestRegion::Box { half_width } => json!({ "kind": "box", "half_width": half_width }),
    }
}

fn region_text(region: &TestRegion) -> String {
    match region {
        TestRegion::Germ => "germ at the origin".to_string(),
        TestRegion::Box { half_width } => format!("square [-{half_width}, {half_width}]^2"),
    }
}

fn family_json(fam: &DegenerateFamily) -> Value {
    match fam {
        DegenerateFamily::Zero => json!({ "family": "zero" }),
        DegenerateFamily::Square { alpha } => json!({ "family": "square", "alpha": alpha.to_string() }),
    }
}

pub fn admissibility_json(v: &AdmissibilityVerdict) -> Value {
    let mut out = json!({ "status": v.status(), "admissible": v.is_admissible() });
    let extra = match v {
        AdmissibilityVerdict::AdmissibleExact { quotient } => json!({ "quotient": quotient.to_string() }),
        AdmissibilityVerdict::AdmissibleDegenerateFamily(fam) => family_json(fam),
        AdmissibilityVerdict::NotAdmissible { witness } => json!({ "witness": witness.to_string() }),
        AdmissibilityVerdict::NumericOnly { fraction, half_width } => {
            json!({ "fraction": fraction.to_string(), "clean_half_width": half_width })
        }
    };
    if let (Value::Object(dst), Value::Object(src)) = (&mut out, extra) {
        dst.extend(src);
    }
    out
}

fn admissibility_text(out: &mut String, v: &AdmissibilityVerdict) {
    match v {
        AdmissibilityVerdict::AdmissibleExact { quotient } => {
            let _ = writeln!(out, "quotient: {quotient}");
        }
        AdmissibilityVerdict::AdmissibleDegenerateFamily(fam) => {
            let _ = writeln!(out, "family: {fam}");
        }
        AdmissibilityVerdict::NotAdmissible { witness } => {
            let _ = writeln!(out, "witness: {witness}");
        }
        AdmissibilityVerdict::NumericOnly { fraction, half_width } => {
            let _ = writeln!(out, "fraction: {fraction}");
            match half_width {
                Some(h) => {
                    let _ = writeln!(out, "no pole found on [-{h}, {h}]^2");
                }
                None => out.push_str("smooth at the origin; no clean square found\n"),
            }
        }
    }
}

pub fn check(g: &Poly, region: &TestRegion, verdict: &AdmissibilityVerdict, style: Style) -> Report {
    let outcome = Outcome::from_bool(verdict.is_admissible());
    let mut text = format!("g = {g}\nregion: {}\n", region_text(region));
    let _ = writeln!(text, "verdict: {}", style.paint(verdict.status(), outcome));
    admissibility_text(&mut text, verdict);
    let json = envelope(
        "check",
        json!({
            "g": g.to_string(),
            "region": region_json(region),
            "verdict": admissibility_json(verdict),
        }),
    );
    Report { json, text, outcome }
}

/// `(g_x^2 - g) mod g_y`, zero exactly when the lower-left entry is a polynomial.
fn division_remainder(g: &Poly) -> Option<Poly> {
    let h = &g.partial_x().pow(2) - g;
    match h.exact_div(&g.partial_y()) {
        Ok(_) => None,
        Err(PolyError::NotDivisible { remainder }) => Some(remainder),
        Err(_) => None,
    }
}

/// `g = x^2/4 - f`
pub fn disc_of_det(f: &Poly) -> Poly {
    let quarter = ExactRational::from_ratio(1, 4).expect("nonzero");
    &Poly::x().pow(2).scale(&quarter) - f
}

/// `source` is `"g"` or `"f"`; `g` is the discriminant in either case.
pub fn reconstruct(source: &str, input: &Poly, g: &Poly, rec: &Reconstruction, style: Style) -> Report {
    let exact = rec.entry21_polynomial;
    let outcome = Outcome::from_bool(exact);
    let remainder = division_remainder(g);
    let mut text = format!("{source} = {input}\n");
    entries_text(&mut text, &rec.operator);
    let _ = writeln!(text, "L21 polynomial: {}", if exact { "yes" } else { "no" });
    if let Some(r) = &remainder {
        let _ = writeln!(text, "remainder of (g_x^2 - g) / g_y: {r}");
    }
    let status = if exact { "admissible-exact" } else { "rational-entry" };
    let _ = writeln!(text, "verdict: {}", style.paint(status, outcome));
    let json = envelope(
        "reconstruct",
        json!({
            "input": { source: input.to_string() },
            "g": g.to_string(),
            "operator": entries_json(&rec.operator),
            "entry21_polynomial": exact,
            "remainder": remainder.map(|r| r.to_string()),
            "status": status,
        }),
    );
    Report { json, text, outcome }
}

/// Report for a discriminant free of `y`: either one of the two admissible
/// families, with their operators, or a rejection with `g_x^2 - g`.
pub fn y_independent_family(source: &str, input: &Poly, g: &Poly, style: Style) -> Report {
    let mut text = format!("{source} = {input}\ng = {g} does not depend on y\n");
    let fam = degenerate_family(g);
    let (outcome, body) = match &fam {
        Some(fam) => {
            let kind = match fam {
                DegenerateFamily::Zero => YIndependentKind::ScalarNilpotent,
                DegenerateFamily::Square { alpha } => YIndependentKind::Diagonalizable(alpha.clone()),
            };
            let op = y_independent_operators(&kind, &Poly::zero());
            let [a, b, _, d] = op.entries();
            let shape = format!("[[{a}, {b}], [c(x), {d}]]");
            let _ = writeln!(text, "family: {fam}");
            let _ = writeln!(text, "operators: {shape} for any c(x)");
            let _ = writeln!(text, "verdict: {}", style.paint("admissible-degenerate-family", Outcome::Positive));
            let entries = json!([a.to_string(), b.to_string(), "c(x)", d.to_string()]);
            (
                Outcome::Positive,
                json!({ "family": family_json(fam), "operators": entries, "status": "admissible-degenerate-family" }),
            )
        }
        None => {
            let witness = &g.partial_x().pow(2) - g;
            let _ = writeln!(text, "witness g_x^2 - g: {witness}");
            let _ = writeln!(text, "verdict: {}", style.paint("not-admissible", Outcome::Negative));
            (
                Outcome::Negative,
                json!({ "family": Value::Null, "witness": witness.to_string(), "status": "not-admissible" }),
            )
        }
    };
    let mut json = envelope(
        "reconstruct",
        json!({ "input": { source: input.to_string() }, "g": g.to_string(), "y_independent": true }),
    );
    if let (Value::Object(dst), Value::Object(src)) = (&mut json, body) {
        dst.extend(src);
    }
    Report { json, text, outcome }
}

fn sign_str(sign: i32) -> &'static str {
    if sign < 0 {
        "-"
    } else {
        "+"
    }
}

pub fn branch_json(branch: &Branch) -> Value {
    let mut v = json!({ "tag": branch.tag() });
    let extra = match branch {
        Branch::NonDegenerate => json!({}),
        Branch::YIndependent(fam) => family_json(fam),
        Branch::Morse { sign, with_quarter } => json!({ "sign": sign, "with_quarter": with_quarter }),
        Branch::Cubic { with_quarter } => json!({ "with_quarter": with_quarter }),
        Branch::YOnly { k, sign } => json!({ "k": k, "sign": sign }),
        Branch::LinearInY { m, k } => json!({ "m": m, "k": k }),
        Branch::Homogeneous { sign, m, k, a, b } => json!({
            "sign": sign,
            "m": m,
            "k": k,
            "a": a.as_ref().map(ToString::to_string),
            "b": b.as_ref().map(ToString::to_string),
        }),
        Branch::NotAdmissible { path, witnesses } => json!({
            "path": path.to_string(),
            "witnesses": witnesses
                .iter()
                .map(|w| json!({ "label": w.label, "value": w.value.to_string() }))
                .collect::<Vec<_>>(),
        }),
        Branch::Undecided { reason } => json!({ "reason": reason }),
    };
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, extra) {
        dst.extend(src);
    }
    v
}

fn branch_text(branch: &Branch) -> String {
    let tail = |q: bool| if q { "x^2/4" } else { "0" };
    match branch {
        Branch::NonDegenerate => "non-degenerate (g_y(0,0) != 0)".to_string(),
        Branch::YIndependent(fam) => format!("y-independent, {fam}"),
        Branch::Morse { sign, with_quarter } => {
            format!("morse, {}y^2 + {}", sign_str(*sign), tail(*with_quarter))
        }
        Branch::Cubic { with_quarter } => format!("cubic, y^3 + {}", tail(*with_quarter)),
        Branch::YOnly { k, sign } => format!("y-only, {}y^{k}", sign_str(*sign)),
        Branch::LinearInY { m, k } => match m {
            Some(m) => format!("linear in y, ord a = {m}, ord b = {k}"),
            None => format!("linear in y, a = 0, ord b = {k}"),
        },
        Branch::Homogeneous { sign, m, k, a, b } => match (a, b) {
            (Some(a), Some(b)) => format!("homogeneous, {}x^{m}*({a}*x + {b}*y)^{k}", sign_str(*sign)),
            _ => format!("homogeneous, {}x^{m}*(a*x + b*y)^{k}, b irrational", sign_str(*sign)),
        },
        Branch::NotAdmissible { path, .. } => format!("not admissible ({path} test)"),
        Branch::Undecided { reason } => format!("undecided: {reason}"),
    }
}

fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::Exact => json!({ "kind": "exact" }),
        Certificate::JetOrder(n) => json!({ "kind": "jet-order", "order": n }),
        Certificate::None => json!({ "kind": "none" }),
    }
}

fn certificate_text(c: &Certificate) -> String {
    match c {
        Certificate::Exact => "exact".to_string(),
        Certificate::JetOrder(n) => format!("through total order {n}"),
        Certificate::None => "none".to_string(),
    }
}

pub fn verdict_outcome(v: Verdict) -> Outcome {
    match v {
        Verdict::Admissible => Outcome::Positive,
        Verdict::NotAdmissible => Outcome::Negative,
        Verdict::Undecided => Outcome::Undecided,
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Admissible => "admissible",
        Verdict::NotAdmissible => "not-admissible",
        Verdict::Undecided => "undecided",
    }
}

pub fn classify(g: &Poly, jet_order: u32, r: &ClassificationResult, style: Style) -> Report {
    let verdict = r.verdict();
    let outcome = verdict_outcome(verdict);
    let mut text = format!("g = {g}\n");
    let _ = writeln!(text, "verdict: {}", style.paint(verdict_str(verdict), outcome));
    let _ = writeln!(text, "branch: {}", branch_text(&r.branch));
    if let Branch::NotAdmissible { witnesses, .. } = &r.branch {
        for w in witnesses {
            let _ = writeln!(text, "  {}: {}", w.label, w.value);
        }
    }
    if verdict == Verdict::Admissible {
        let _ = writeln!(text, "y~ = {}", r.coordinates);
    }
    if let Some(nf) = &r.normal_form {
        let _ = writeln!(text, "normal form (y for y~): {nf}");
    }
    if let Some(op) = &r.operator {
        let _ = writeln!(text, "operator in (x, y~): {op}");
    }
    if let Some(rec) = &r.reconstructed {
        let _ = writeln!(text, "operator in (x, y): {}", rec.operator);
    }
    let _ = writeln!(text, "certificate: {}", certificate_text(&r.certificate));
    let _ = writeln!(text, "divisibility at the origin: {}", r.raw.status());
    for note in &r.notes {
        let _ = writeln!(text, "note: {note}");
    }
    let json = envelope(
        "classify",
        json!({
            "g": g.to_string(),
            "jet_order": jet_order,
            "verdict": verdict_str(verdict),
            "branch": branch_json(&r.branch),
            "coordinates": r.coordinates.to_string(),
            "normal_form": r.normal_form.as_ref().map(ToString::to_string),
            "operator": r.operator.as_ref().map(entries_json),
            "reconstructed": r.reconstructed.as_ref().map(|rec| json!({
                "operator": entries_json(&rec.operator),
                "entry21_polynomial": rec.entry21_polynomial,
            })),
            "certificate": certificate_json(&r.certificate),
            "divisibility": admissibility_json(&r.raw),
            "notes": r.notes,
        }),
    );
    Report { json, text, outcome }
}

/// A polynomial `p` with `{disc < 0} = {p < 0}` away from poles, scaled to
/// coprime integer coefficients without changing sign.
pub fn complex_region_poly(disc: &RationalFunction2) -> Poly {
    let den = disc.den();
    let p = if den.is_constant() {
        if den.constant_term().is_negative() {
            -disc.num()
        } else {
            disc.num().clone()
        }
    } else {
        disc.num() * den
    };
    p.positive_primitive()
}

fn repeated_part(p: &Poly) -> Poly {
    p.gcd(&p.partial_x()).gcd(&p.partial_y())
}

fn quotient(a: &Poly, b: &Poly) -> Poly {
    a.exact_div(b).expect("gcd divides")
}

/// Writes `p = c * s1 * s2^2 * s3^3 * ...` with squarefree, pairwise coprime
/// `s_k`, and keeps `s_k` for odd `k` and `s_k^2` for even `k`. The result
/// has the same sign as `p` off the zero set of `p`, and the same zero set.
pub fn sign_reduced(p: &Poly) -> Poly {
    if p.is_constant() {
        return p.positive_primitive();
    }
    let mut reduced = Poly::one();
    // cur = prod f_i^(e_i - k + 1), all = prod_{e_i >= k} f_i
    let mut cur = p.clone();
    let mut rep = repeated_part(&cur);
    let mut all = quotient(&cur, &rep);
    let mut k = 1u32;
    while !all.is_constant() {
        cur = rep;
        rep = repeated_part(&cur);
        let next = quotient(&cur, &rep);
        let exactly_k = quotient(&all, &next);
        reduced = &reduced * &exactly_k.pow(if k % 2 == 1 { 1 } else { 2 });
        all = next;
        k += 1;
    }
    // p / reduced is c times a square, so its sign is the ratio of leading
    // coefficients under the multiplicative monomial order.
    let lc = |q: &Poly| q.leading_term().map_or(0, |(_, c)| c.signum());
    if lc(&reduced) != lc(p) {
        reduced = -&reduced;
    }
    reduced.positive_primitive()
}

/// Whether `{a < 0}` and `{b < 0}` are the same set. Decided exactly when
/// the sign-reduced forms are positive multiples of each other; other
/// pairs are reported as different.
pub fn same_region(a: &Poly, b: &Poly) -> bool {
    sign_reduced(a) == sign_reduced(b)
}

pub fn region_inequality(p: &Poly) -> String {
    if p.is_zero() {
        "none (the discriminant vanishes identically)".to_string()
    } else {
        format!("{p} < 0")
    }
}

pub struct PlotSummary<'a> {
    pub operator: &'a OperatorField2,
    pub region: &'a Poly,
    pub expected: Option<&'a Poly>,
    pub nodes: usize,
    pub complex_nodes: usize,
    pub masked_nodes: usize,
    pub levels: &'a [f64],
    pub polylines: usize,
    pub outputs: &'a [String],
    pub notes: &'a [String],
}

pub fn plot(s: &PlotSummary<'_>, style: Style) -> Report {
    let mut text = format!("L = {}\n", s.operator);
    let _ = writeln!(text, "complex region: {}", region_inequality(s.region));
    let expected = s.expected.map(|e| {
        let agrees = same_region(e, s.region);
        let e = e.positive_primitive();
        if agrees {
            let _ = writeln!(text, "expected region {} matches", region_inequality(&e));
        } else {
            let _ = writeln!(
                text,
                "expected region {} {} from the computed one",
                region_inequality(&e),
                style.paint("differs", Outcome::Undecided)
            );
        }
        json!({ "inequality": region_inequality(&e), "agrees": agrees })
    });
    let _ = writeln!(
        text,
        "nodes: {} ({} complex, {} masked)",
        s.nodes, s.complex_nodes, s.masked_nodes
    );
    let _ = writeln!(text, "levels: {}, polylines: {}", s.levels.len(), s.polylines);
    for note in s.notes {
        let _ = writeln!(text, "note: {note}");
    }
    for o in s.outputs {
        let _ = writeln!(text, "wrote {o}");
    }
    let json = envelope(
        "plot",
        json!({
            "operator": entries_json(s.operator),
            "complex_region": region_inequality(s.region),
            "complex_region_poly": s.region.to_string(),
            "expected_region": expected,
            "nodes": s.nodes,
            "complex_nodes": s.complex_nodes,
            "masked_nodes": s.masked_nodes,
            "levels": s.levels,
            "polylines": s.polylines,
            "outputs": s.outputs,
            "notes": s.notes,
        }),
    );
    Report { json, text, outcome: Outcome::Positive }
}

pub fn verify_derivatives(checks: &[RootDerivativeCheck], style: Style) -> Report {
    let ok = checks.iter().all(|c| c.holds);
    let outcome = Outcome::from_bool(ok);
    let mut text = String::from("k  c      d^2k/dy^2k 1/(y^2+c)  d^(2k+1)/dy^(2k+1) y/(y^2+c)  holds\n");
    for c in checks {
        let _ = writeln!(
            text,
            "{:<2} {:<6} {:<26} {:<35} {}",
            c.k,
            c.c.to_string(),
            c.even_value.to_string(),
            c.odd_value.to_string(),
            if c.holds { "yes" } else { "no" }
        );
    }
    let word = if ok { "all hold" } else { "FAILED" };
    let _ = writeln!(text, "{}", style.paint(word, outcome));
    let rows: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "k": c.k,
                "c": c.c.to_string(),
                "even_value": c.even_value.to_string(),
                "even_expected": c.even_expected.to_string(),
                "odd_value": c.odd_value.to_string(),
                "odd_expected": c.odd_expected.to_string(),
                "holds": c.holds,
            })
        })
        .collect();
    let json = envelope("verify-derivatives", json!({ "checks": rows, "all_hold": ok }));
    Report { json, text, outcome }
}

/// Input errors: the message, plus the offending input with a caret line
/// under `span` (byte offsets) when there is one.
pub fn input_error(message: &str, source: Option<(&str, &str, usize, usize)>, style: Style) -> Report {
    let mut text = format!("{}: {message}\n", style.paint("error", Outcome::InputError));
    let mut span_json = Value::Null;
    if let Some((flag, input, start, end)) = source {
        let start = start.min(input.len());
        let end = end.clamp(start, input.len());
        let col = input.get(..start).map_or(start, |s| s.chars().count());
        let width = input.get(start..end).map_or(1, |s| s.chars().count()).max(1);
        let prefix = format!("  {flag} ");
        let _ = writeln!(text, "{prefix}{input}");
        let _ = writeln!(text, "{}{}", " ".repeat(prefix.chars().count() + col), "^".repeat(width));
        span_json = json!({ "flag": flag, "input": input, "start": start, "end": end });
    }
    let json = envelope("error", json!({ "error": { "message": message, "span": span_json } }));
    Report { json, text, outcome: Outcome::InputError }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nijenhuis_core::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn region_poly_keeps_sign() {
        let disc = RationalFunction2::from_poly(p("y^3 + x^2/4"));
        let r = complex_region_poly(&disc);
        assert_eq!(r, p("x^2 + 4*y^3"));
        assert!(!same_region(&r, &p("x^2 + 16*y^3")));
        assert!(same_region(&r, &p("3*x^2 + 12*y^3")));
        let neg = RationalFunction2::from_poly(p("-y^2 + x^2/4"));
        assert_eq!(complex_region_poly(&neg), p("x^2 - 4*y^2"));
        let rational = RationalFunction2::new(p("x"), p("-2")).unwrap();
        assert_eq!(complex_region_poly(&rational), p("-x"));
    }

    #[test]
    fn sign_reduction_keeps_parity() {
        assert_eq!(sign_reduced(&p("y^3")), p("y"));
        assert_eq!(sign_reduced(&p("-5*x^2*y")), p("-x^2*y"));
        assert_eq!(sign_reduced(&p("x^3*y^2")), p("x*y^2"));
        assert_eq!(sign_reduced(&p("-(x + y)^4*(x - y^2)^3")), p("-(x + y)^2*(x - y^2)"));
        assert_eq!(sign_reduced(&p("-3")), p("-1"));
        assert!(same_region(&p("y"), &p("2*y^3")));
        assert!(!same_region(&p("y"), &p("y^2")));
        assert!(!same_region(&p("x^2 + 4*y^3"), &p("x^2 + 16*y^3")));
    }

    #[test]
    fn caret_sits_under_the_span() {
        let r = input_error("bad", Some(("--g", "y^2 +* x", 5, 6)), Style::default());
        let lines: Vec<&str> = r.text.lines().collect();
        assert_eq!(lines[1], "  --g y^2 +* x");
        assert_eq!(lines[2], "           ^");
        assert_eq!(r.outcome.code(), 2);
    }

    #[test]
    fn color_only_when_asked() {
        let op = nijenhuis_core::parse_operator(["x", "2*y", "y/2", "0"]).unwrap();
        assert!(!torsion(&op, Style::default()).text.contains('\x1b'));
        assert!(torsion(&op, Style { color: true }).text.contains("\x1b[1;32mNIJENHUIS"));
    }
}
