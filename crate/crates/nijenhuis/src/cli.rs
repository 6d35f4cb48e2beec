use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use nijenhuis_core::classify::classify;
use nijenhuis_core::discriminant::{
    admissible_check_on, degenerate_family, reconstruct_from_det, reconstruct_from_disc, y_independent_operators,
    DegenerateFamily, TestRegion, YIndependentKind,
};
use nijenhuis_core::jets::verify_root_derivatives;
use nijenhuis_core::numeric::{eval_eigenfield, extract_levels, GridSpec, Region};
use nijenhuis_core::parser::OperatorParseError;
use nijenhuis_core::{parse_operator, parse_poly, OperatorField2, ParseError, Poly};

use crate::report::{self, Outcome, PlotSummary, Report, Style};
use crate::{svg, table};

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "nijenhuis", version, about = "Torsion, reconstruction and classification of 2x2 operator fields")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Nijenhuis torsion of [[A, B], [C, D]].
    Torsion {
        #[arg(long = "L", num_args = 4, value_names = ["A", "B", "C", "D"], required = true, allow_hyphen_values = true)]
        entries: Vec<String>,
    },
    /// Whether (g_x^2 - g)/g_y is polynomial, or smooth on the test region.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum, default_value_t = RegionKind::Box)]
        region: RegionKind,
        /// Half width of the square used by `--region box`.
        #[arg(long, default_value_t = 1.0)]
        half_width: f64,
    },
    /// Operator with trace x and the given discriminant or determinant.
    Reconstruct {
        #[command(flatten)]
        source: DiscOrDet,
    },
    /// Local normal form of a discriminant at the origin.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=40))]
        jet_order: u32,
    },
    /// Eigenvalue level lines and the complex-eigenvalue region.
    Plot {
        #[arg(long = "L", num_args = 4, value_names = ["A", "B", "C", "D"], allow_hyphen_values = true, conflicts_with = "g", required_unless_present = "g")]
        entries: Option<Vec<String>>,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        /// `.svg` or `.csv`; repeat for several files.
        #[arg(long, required = true)]
        out: Vec<PathBuf>,
        #[command(flatten)]
        grid: GridArgs,
        /// Number of evenly spaced levels across the eigenvalue range.
        #[arg(long, default_value_t = 21)]
        levels: usize,
        /// Compare the computed region {disc < 0} with {EXPR < 0}.
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        expect_region: Option<String>,
    },
    /// Derivatives at y = 0 of 1/(y^2 + c) and y/(y^2 + c) against the closed forms.
    VerifyDerivatives {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(0..=20))]
        k_max: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,2,3,-1,1/2")]
        c: Vec<String>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum RegionKind {
    Germ,
    Box,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct DiscOrDet {
    /// Discriminant tr^2/4 - det.
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<String>,
    /// Determinant.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
}

#[derive(Args, Debug)]
pub struct GridArgs {
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    pub y_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub y_max: f64,
    #[arg(long, default_value_t = 201)]
    pub nx: usize,
    #[arg(long, default_value_t = 201)]
    pub ny: usize,
}

fn parse_flag(flag: &str, text: &str, style: Style) -> Result<Poly, Report> {
    parse_poly(text).map_err(|e| parse_failure(flag, text, &e, style))
}

fn parse_failure(flag: &str, text: &str, e: &ParseError, style: Style) -> Report {
    let span = e.span();
    report::input_error(&e.to_string(), Some((flag, text, span.start, span.end)), style)
}

fn parse_entries(flag: &str, entries: &[String], style: Style) -> Result<OperatorField2, Report> {
    let texts: [&str; 4] = std::array::from_fn(|k| entries[k].as_str());
    parse_operator(texts).map_err(|OperatorParseError { entry, error }| {
        let label = format!("{flag} [entry {}]", entry + 1);
        parse_failure(&label, texts[entry], &error, style)
    })
}

fn failure(message: &str, style: Style, outcome: Outcome) -> Report {
    let mut r = report::input_error(message, None, style);
    r.outcome = outcome;
    r
}

fn family_operator(fam: &DegenerateFamily) -> OperatorField2 {
    let kind = match fam {
        DegenerateFamily::Zero => YIndependentKind::ScalarNilpotent,
        DegenerateFamily::Square { alpha } => YIndependentKind::Diagonalizable(alpha.clone()),
    };
    y_independent_operators(&kind, &Poly::zero())
}

pub fn execute(command: &Command, style: Style) -> Report {
    match run_command(command, style) {
        Ok(r) | Err(r) => r,
    }
}

fn run_command(command: &Command, style: Style) -> Result<Report, Report> {
    match command {
        Command::Torsion { entries } => {
            let op = parse_entries("--L", entries, style)?;
            Ok(report::torsion(&op, style))
        }
        Command::Check { g, region, half_width } => {
            let g = parse_flag("--g", g, style)?;
            let region = match region {
                RegionKind::Germ => TestRegion::Germ,
                RegionKind::Box => {
                    if !(half_width.is_finite() && *half_width > 0.0) {
                        return Err(failure("--half-width must be positive and finite", style, Outcome::InputError));
                    }
                    TestRegion::Box { half_width: *half_width }
                }
            };
            let verdict = admissible_check_on(&g, &region);
            Ok(report::check(&g, &region, &verdict, style))
        }
        Command::Reconstruct { source } => {
            let (name, input, g) = match (&source.g, &source.f) {
                (Some(text), _) => {
                    let g = parse_flag("--g", text, style)?;
                    ("g", g.clone(), g)
                }
                (None, Some(text)) => {
                    let f = parse_flag("--f", text, style)?;
                    let g = report::disc_of_det(&f);
                    ("f", f, g)
                }
                (None, None) => return Err(failure("one of --g or --f is required", style, Outcome::InputError)),
            };
            let rec = if name == "g" { reconstruct_from_disc(&g) } else { reconstruct_from_det(&input) };
            Ok(match rec {
                Ok(rec) => report::reconstruct(name, &input, &g, &rec, style),
                Err(_) => report::y_independent_family(name, &input, &g, style),
            })
        }
        Command::Classify { g, jet_order } => {
            let g = parse_flag("--g", g, style)?;
            let r = classify(&g, *jet_order);
            Ok(report::classify(&g, *jet_order, &r, style))
        }
        Command::Plot { entries, g, out, grid, levels, expect_region } => {
            plot(entries.as_deref(), g.as_deref(), out, grid, *levels, expect_region.as_deref(), style)
        }
        Command::VerifyDerivatives { k_max, c } => {
            let mut checks = Vec::new();
            for text in c {
                let p = parse_flag("--c", text, style)?;
                if !p.is_constant() {
                    return Err(failure(&format!("--c {text}: expected a rational constant"), style, Outcome::InputError));
                }
                let cv = p.constant_term();
                for k in 0..=*k_max {
                    let check = verify_root_derivatives(k, &cv)
                        .map_err(|e| failure(&format!("--c {text}: {e}"), style, Outcome::InputError))?;
                    checks.push(check);
                }
            }
            Ok(report::verify_derivatives(&checks, style))
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum OutKind {
    Svg,
    Csv,
}

fn out_kind(path: &Path) -> Option<OutKind> {
    match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
        "svg" => Some(OutKind::Svg),
        "csv" => Some(OutKind::Csv),
        _ => None,
    }
}

fn plot(
    entries: Option<&[String]>,
    g: Option<&str>,
    out: &[PathBuf],
    grid: &GridArgs,
    levels: usize,
    expect_region: Option<&str>,
    style: Style,
) -> Result<Report, Report> {
    let mut kinds = Vec::with_capacity(out.len());
    for path in out {
        let kind = out_kind(path).ok_or_else(|| {
            failure(&format!("--out {}: expected a .svg or .csv path", path.display()), style, Outcome::InputError)
        })?;
        kinds.push(kind);
    }
    let mut notes = Vec::new();
    let op = match (entries, g) {
        (Some(entries), _) => parse_entries("--L", entries, style)?,
        (None, Some(text)) => {
            let g = parse_flag("--g", text, style)?;
            match reconstruct_from_disc(&g) {
                Ok(rec) => rec.operator,
                Err(_) => match degenerate_family(&g) {
                    Some(fam) => {
                        notes.push("g does not depend on y; plotting the family member with c(x) = 0".to_string());
                        family_operator(&fam)
                    }
                    None => {
                        return Err(failure(
                            &format!("no operator with trace x has discriminant {g}"),
                            style,
                            Outcome::Negative,
                        ))
                    }
                },
            }
        }
        (None, None) => return Err(failure("one of --L or --g is required", style, Outcome::InputError)),
    };
    let expected = match expect_region {
        Some(text) => Some(parse_flag("--expect-region", text, style)?),
        None => None,
    };
    let grid_spec = GridSpec::new((grid.x_min, grid.x_max), (grid.y_min, grid.y_max), grid.nx, grid.ny)
        .map_err(|e| failure(&e.to_string(), style, Outcome::InputError))?;
    let field = eval_eigenfield(&op, &grid_spec).map_err(|e| failure(&e.to_string(), style, Outcome::Negative))?;
    let level_values = field.default_levels(levels);
    let contours = extract_levels(&field, &level_values);
    let region = report::complex_region_poly(&op.characteristic_data().disc);

    let mut description = vec![
        format!("L = {op}"),
        format!("complex region: {}", report::region_inequality(&region)),
    ];
    if let Some(e) = &expected {
        let verb = if report::same_region(e, &region) { "matches" } else { "differs from the computed one" };
        description.push(format!("expected region {} {verb}", report::region_inequality(&e.positive_primitive())));
    }
    let mut written = Vec::with_capacity(out.len());
    for (path, kind) in out.iter().zip(kinds) {
        let result = match kind {
            OutKind::Svg => svg::write_svg(&field, &contours, &description, path),
            OutKind::Csv => table::write_csv(&field, path),
        };
        result.map_err(|e| failure(&format!("{}: {e}", path.display()), style, Outcome::InputError))?;
        written.push(path.display().to_string());
    }
    let count = |r: Region| field.nodes.iter().filter(|n| n.region == r).count();
    let summary = PlotSummary {
        operator: &op,
        region: &region,
        expected: expected.as_ref(),
        nodes: field.nodes.len(),
        complex_nodes: count(Region::Complex),
        masked_nodes: count(Region::Masked),
        levels: &level_values,
        polylines: contours.polylines.len(),
        outputs: &written,
        notes: &notes,
    };
    Ok(report::plot(&summary, style))
}

/// Parses `args` (program name first) and runs the command. Help and
/// version requests come back as `Err` with exit code 0.
pub fn run_from<I, T>(args: I, style: Style) -> Result<(Report, Format), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    Ok((execute(&cli.command, style), cli.format))
}

/// Text reports go to stdout, input errors to stderr; JSON always goes to
/// stdout as one pretty-printed document.
pub fn render(report: &Report, format: Format) -> (String, String) {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
            s.push('\n');
            (s, String::new())
        }
        Format::Text if report.outcome == Outcome::InputError => (String::new(), report.text.clone()),
        Format::Text => (report.text.clone(), String::new()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn negative_expressions_are_values() {
        let (r, _) = run_from(["nijenhuis", "classify", "--g", "-y^2 + x^2/4"], Style::default()).unwrap();
        assert_eq!(r.outcome, Outcome::Positive);
        let (r, _) = run_from(["nijenhuis", "torsion", "--L", "x/2", "-2*y", "y/2", "x/2"], Style::default()).unwrap();
        assert_eq!(r.outcome, Outcome::Positive);
    }
}
