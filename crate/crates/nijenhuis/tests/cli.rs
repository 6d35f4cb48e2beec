use std::process::{Command, Output};

use nijenhuis::cli::{render, run_from, Format};
use nijenhuis::Style;
use nijenhuis_core::parser::{parse_poly, parse_rational};
use nijenhuis_core::{classify, ExactRational, Monomial, Poly};
use proptest::prelude::*;
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nijenhuis"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = bin(&full);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).expect("valid JSON"))
}

#[test]
fn torsion_examples() {
    let o = bin(&["torsion", "--L", "x", "2*y", "y/2", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n1 = 0, n2 = 0, NIJENHUIS"));

    let (code, v) = json_of(&["torsion", "--L", "y", "0", "0", "x"]);
    assert_eq!(code, 1);
    assert_eq!(v["nijenhuis"], false);
    // Symbolic torsion of diag(y, x): both components are y - x.
    assert_eq!(parse_poly(v["n1"].as_str().unwrap()).unwrap(), parse_poly("y - x").unwrap());
    assert_eq!(parse_poly(v["n2"].as_str().unwrap()).unwrap(), parse_poly("y - x").unwrap());

    assert_eq!(bin(&["torsion", "--L", "1", "0", "0", "1"]).status.code(), Some(0));
}

#[test]
fn reconstruct_examples() {
    let (code, v) = json_of(&["reconstruct", "--g", "y^3 + x^2/4"]);
    assert_eq!(code, 0);
    let entries: Vec<&str> = v["operator"].as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect();
    let want = ["x", "3*y^2", "y/3", "0"];
    for (got, want) in entries.iter().zip(want) {
        assert_eq!(parse_rational(got).unwrap(), parse_rational(want).unwrap());
    }
    assert_eq!(v["entry21_polynomial"], true);

    let (code, v) = json_of(&["reconstruct", "--g", "y^2 + 2*x*y"]);
    assert_eq!(code, 1);
    assert_eq!(v["entry21_polynomial"], false);
    assert_eq!(parse_poly(v["remainder"].as_str().unwrap()).unwrap(), parse_poly("5*x^2").unwrap());

    let (code, v) = json_of(&["reconstruct", "--g", "x^2/4"]);
    assert_eq!(code, 0);
    assert_eq!(v["y_independent"], true);
    assert_eq!(v["family"]["family"], "square");

    // det [[x, 3y^2], [y/3, 0]] = -y^3
    let (code, v) = json_of(&["reconstruct", "--f", "-y^3"]);
    assert_eq!(code, 0);
    assert_eq!(parse_poly(v["g"].as_str().unwrap()).unwrap(), parse_poly("x^2/4 + y^3").unwrap());
    // (g_x^2 - g)/g_y = y^2/(-x) for f = x*y
    let (code, v) = json_of(&["reconstruct", "--f", "x*y"]);
    assert_eq!(code, 1);
    assert_eq!(v["entry21_polynomial"], false);
}

#[test]
fn classify_examples_and_exit_codes() {
    let (code, v) = json_of(&["classify", "--g", "y^2 + x^2/4"]);
    assert_eq!(code, 0);
    assert_eq!(v["branch"]["tag"], "morse");
    assert_eq!(v["branch"]["sign"], 1);
    assert_eq!(v["branch"]["with_quarter"], true);

    let (code, v) = json_of(&["classify", "--g", "x^2*y^3"]);
    assert_eq!(code, 0);
    assert_eq!((v["branch"]["m"].as_u64(), v["branch"]["k"].as_u64()), (Some(2), Some(3)));

    let (code, v) = json_of(&["classify", "--g", "y^4 + x*y^5"]);
    assert_eq!(code, 3);
    assert_eq!(v["verdict"], "undecided");
    assert!(v["divisibility"]["status"].is_string());

    let (code, v) = json_of(&["classify", "--g", "y^2 + 2*x*y"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "not-admissible");
}

#[test]
fn check_region_flag() {
    assert_eq!(bin(&["check", "--g", "x*y^3"]).status.code(), Some(1));
    assert_eq!(bin(&["check", "--g", "y^3 + x^2/4"]).status.code(), Some(0));
    let (code, v) = json_of(&["check", "--g", "y^2 + x^3", "--region", "germ"]);
    assert_eq!(code, 1);
    assert_eq!(v["region"]["kind"], "germ");
    assert_eq!(bin(&["check", "--g", "y", "--half-width", "-1"]).status.code(), Some(2));
}

#[test]
fn parse_errors_point_at_the_input() {
    let o = bin(&["classify", "--g", "y^2 +* x"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    let lines: Vec<&str> = err.lines().collect();
    assert!(lines[0].starts_with("error: "), "{err}");
    let caret = lines[2].find('^').unwrap();
    assert_eq!(&lines[1][caret..caret + 1], "*");

    let (code, v) = json_of(&["torsion", "--L", "x", "y", "(1", "0"]);
    assert_eq!(code, 2);
    assert!(v["error"]["span"]["flag"].as_str().unwrap().contains("entry 3"));

    assert_eq!(bin(&["classify"]).status.code(), Some(2));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}

#[test]
fn plot_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("c.csv");
    let o = bin(&["plot", "--L", "1", "0", "0", "1", "--out", csv.to_str().unwrap(), "--nx", "2", "--ny", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().skip(1).all(|l| l.contains(",coincident,")));

    let bad = dir.path().join("c.png");
    assert_eq!(bin(&["plot", "--g", "y", "--out", bad.to_str().unwrap()]).status.code(), Some(2));

    let svg = dir.path().join("f2.svg");
    let (code, v) = json_of(&["plot", "--g", "-y^2 + x^2/4", "--out", svg.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(parse_poly(v["complex_region_poly"].as_str().unwrap()).unwrap(), parse_poly("x^2 - 4*y^2").unwrap());
    assert_eq!(v["levels"].as_array().unwrap().len(), 21);
    let body = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(body.matches("<path ").count(), v["polylines"].as_u64().unwrap() as usize);
}

#[test]
fn identical_flags_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let mut runs = Vec::new();
    for _ in 0..2 {
        let svg = dir.path().join("p.svg");
        let csv = dir.path().join("p.csv");
        let o = bin(&[
            "plot", "--g", "y^2 + x^2/4", "--out", svg.to_str().unwrap(), "--out", csv.to_str().unwrap(),
            "--nx", "61", "--ny", "41",
        ]);
        runs.push((o.stdout, std::fs::read(&svg).unwrap(), std::fs::read(&csv).unwrap()));
    }
    assert_eq!(runs[0], runs[1]);
    for args in [
        &["classify", "--g", "y^3 + x*y^2 + x^3", "--format", "json"][..],
        &["verify-derivatives", "--format", "json"],
        &["reconstruct", "--g", "x*y^3"],
    ] {
        assert_eq!(bin(args).stdout, bin(args).stdout);
    }
}

#[test]
fn no_color_means_plain_text() {
    let o = bin(&["torsion", "--L", "x", "2*y", "y/2", "0"]);
    assert!(!stdout(&o).contains('\x1b'));
}

#[test]
fn verify_derivatives_sweep() {
    let (code, v) = json_of(&["verify-derivatives"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 30);
    assert_eq!(v["all_hold"], true);
    assert_eq!(bin(&["verify-derivatives", "--c", "x"]).status.code(), Some(2));
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..=3u32, 0..=4u32, -3i64..=3, 1i64..=2), 1..=4).prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|(i, j, n, d)| (Monomial::new(i, j), ExactRational::from_ratio(n, d).unwrap())),
        )
    })
}

fn classify_json(g: &Poly) -> Value {
    let text = g.to_string();
    let (report, format) =
        run_from(["nijenhuis", "classify", "--g", text.as_str(), "--format", "json"], Style::default()).unwrap();
    assert_eq!(format, Format::Json);
    let (out, _) = render(&report, format);
    serde_json::from_str(&out).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Every expression in a classify report parses back to the object the
    /// library returns.
    #[test]
    fn classify_json_round_trips(g in poly_strategy()) {
        let v = classify_json(&g);
        prop_assert_eq!(v["schema"].as_u64(), Some(1));
        prop_assert_eq!(parse_poly(v["g"].as_str().unwrap()).unwrap(), g.clone());
        let r = classify(&g, 12);
        match &r.normal_form {
            Some(nf) => prop_assert_eq!(&parse_poly(v["normal_form"].as_str().unwrap()).unwrap(), nf),
            None => prop_assert!(v["normal_form"].is_null()),
        }
        if let Some(rec) = &r.reconstructed {
            let got: Vec<_> = v["reconstructed"]["operator"].as_array().unwrap().iter()
                .map(|e| parse_rational(e.as_str().unwrap()).unwrap())
                .collect();
            let want: Vec<_> = rec.operator.entries().iter().map(|e| (*e).clone()).collect();
            prop_assert_eq!(got, want);
        }
        if let Some(q) = v["divisibility"]["quotient"].as_str() {
            let h = &g.partial_x().pow(2) - &g;
            prop_assert_eq!(&parse_poly(q).unwrap() * &g.partial_y(), h);
        }
    }
}
