//! Node-per-row CSV dump of an eigenvalue field.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use nijenhuis_core::numeric::EigenField;

pub const HEADER: &str = "x,y,disc,region,lambda_plus,lambda_minus";

/// `{:.16e}` gives 17 significant digits, enough to round-trip an `f64`.
fn num(out: &mut String, v: f64) {
    if v.is_nan() {
        out.push_str("nan");
    } else {
        let _ = write!(out, "{v:.16e}");
    }
}

fn opt(out: &mut String, v: Option<f64>) {
    if let Some(v) = v {
        num(out, v);
    }
}

/// One row per node, `y` outer. Masked nodes have `nan` in `disc`; missing
/// eigenvalues are empty fields.
pub fn render_csv(field: &EigenField) -> String {
    let mut out = String::with_capacity(96 * (field.nodes.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for n in &field.nodes {
        num(&mut out, n.x);
        out.push(',');
        num(&mut out, n.y);
        out.push(',');
        num(&mut out, n.disc);
        out.push(',');
        out.push_str(n.region.as_str());
        out.push(',');
        opt(&mut out, n.lambda_plus);
        out.push(',');
        opt(&mut out, n.lambda_minus);
        out.push('\n');
    }
    out
}

pub fn write_csv(field: &EigenField, path: &Path) -> io::Result<()> {
    std::fs::write(path, render_csv(field))
}
