//! Floating-point sampling of operator fields on rectangular grids.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

// Newer toolchains provide these methods on f64 in core.
#[allow(unused_imports)]
use num_traits::Float;

use crate::operator::OperatorField2;
use crate::poly::Poly;
use crate::ratfunc::RationalFunction2;

#[derive(Clone, PartialEq, Debug, thiserror::Error)]
pub enum NumericError {
    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),
    #[error("invalid finite-difference step {0}")]
    InvalidStep(f64),
    #[error("every grid node hits a vanishing denominator")]
    AllNodesMasked,
    #[error("denominator vanishes at ({x}, {y})")]
    SingularOnGrid { x: f64, y: f64 },
}

/// Uniform grid on `[x0, x1] × [y0, y1]` with `nx × ny` nodes.
#[derive(Copy, Clone, PartialEq, Debug)]
pub struct GridSpec {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    nx: usize,
    ny: usize,
}

impl GridSpec {
    pub fn new(x_range: (f64, f64), y_range: (f64, f64), nx: usize, ny: usize) -> Result<Self, NumericError> {
        let (x0, x1) = x_range;
        let (y0, y1) = y_range;
        if ![x0, x1, y0, y1].iter().all(|v| v.is_finite()) {
            return Err(NumericError::InvalidGrid("ranges must be finite"));
        }
        if x0 >= x1 || y0 >= y1 {
            return Err(NumericError::InvalidGrid("ranges must be increasing"));
        }
        if nx < 2 || ny < 2 {
            return Err(NumericError::InvalidGrid("resolution must be at least 2 x 2"));
        }
        Ok(GridSpec { x0, x1, y0, y1, nx, ny })
    }

    /// `[-1, 1]^2` with `n × n` nodes.
    pub fn unit_square(n: usize) -> Result<Self, NumericError> {
        Self::new((-1.0, 1.0), (-1.0, 1.0), n, n)
    }

    pub fn x_range(&self) -> (f64, f64) {
        (self.x0, self.x1)
    }

    pub fn y_range(&self) -> (f64, f64) {
        (self.y0, self.y1)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn x(&self, i: usize) -> f64 {
        lerp(self.x0, self.x1, i, self.nx)
    }

    pub fn y(&self, j: usize) -> f64 {
        lerp(self.y0, self.y1, j, self.ny)
    }

    pub fn dx(&self) -> f64 {
        (self.x1 - self.x0) / (self.nx - 1) as f64
    }

    pub fn dy(&self) -> f64 {
        (self.y1 - self.y0) / (self.ny - 1) as f64
    }

    /// Row-major index, `y` outer.
    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }
}

// Endpoints are hit exactly and the grid is symmetric when the range is.
fn lerp(a: f64, b: f64, i: usize, n: usize) -> f64 {
    let m = (n - 1) as f64;
    let i = i as f64;
    if 2.0 * i <= m {
        a + (b - a) * (i / m)
    } else {
        b - (b - a) * ((m - i) / m)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Region {
    RealDistinct,
    Complex,
    Coincident,
    /// An entry is undefined at the node.
    Masked,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::RealDistinct => "real-distinct",
            Region::Complex => "complex",
            Region::Coincident => "coincident",
            Region::Masked => "masked",
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Region::RealDistinct | Region::Coincident)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Nodes with `|disc| <= COINCIDENT_BAND * scale` are coincident, where
/// `scale = 1 + ((a - d)/2)^2 + |b c|`.
pub const COINCIDENT_BAND: f64 = 1e-12;

#[derive(Copy, Clone, PartialEq, Debug)]
pub struct EigenNode {
    pub x: f64,
    pub y: f64,
    pub trace: f64,
    pub det: f64,
    /// `trace^2 / 4 - det`
    pub disc: f64,
    pub region: Region,
    pub lambda_plus: Option<f64>,
    pub lambda_minus: Option<f64>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct EigenField {
    pub grid: GridSpec,
    /// Row-major, `y` outer.
    pub nodes: Vec<EigenNode>,
}

impl EigenField {
    pub fn node(&self, i: usize, j: usize) -> &EigenNode {
        &self.nodes[self.grid.index(i, j)]
    }

    /// `(min λ₋, max λ₊)` over the real region.
    pub fn lambda_range(&self) -> Option<(f64, f64)> {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for n in &self.nodes {
            if let (Some(p), Some(m)) = (n.lambda_plus, n.lambda_minus) {
                lo = lo.min(m);
                hi = hi.max(p);
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// `count` evenly spaced levels across [`lambda_range`](Self::lambda_range).
    pub fn default_levels(&self, count: usize) -> Vec<f64> {
        let Some((lo, hi)) = self.lambda_range() else {
            return Vec::new();
        };
        match count {
            0 => Vec::new(),
            1 => vec![(lo + hi) / 2.0],
            _ => (0..count)
                .map(|k| lo + (hi - lo) * k as f64 / (count - 1) as f64)
                .collect(),
        }
    }
}

/// Polynomial with coefficients converted once for repeated evaluation.
#[derive(Clone, Debug)]
struct FloatPoly(Vec<(f64, u32, u32)>);

impl FloatPoly {
    fn new(p: &Poly) -> Self {
        FloatPoly(p.terms().map(|(m, c)| (c.to_f64(), m.x, m.y)).collect())
    }

    fn eval(&self, x: f64, y: f64) -> f64 {
        self.0.iter().map(|&(c, i, j)| c * x.powi(i as i32) * y.powi(j as i32)).sum()
    }
}

#[derive(Clone, Debug)]
struct FloatRational {
    num: FloatPoly,
    den: FloatPoly,
}

impl FloatRational {
    fn new(r: &RationalFunction2) -> Self {
        FloatRational {
            num: FloatPoly::new(r.num()),
            den: FloatPoly::new(r.den()),
        }
    }

    fn eval(&self, x: f64, y: f64) -> Option<f64> {
        let d = self.den.eval(x, y);
        let v = self.num.eval(x, y) / d;
        (d != 0.0 && v.is_finite()).then_some(v)
    }
}

struct FloatOperator([FloatRational; 4]);

impl FloatOperator {
    fn new(op: &OperatorField2) -> Self {
        let [a, b, c, d] = op.entries();
        FloatOperator([
            FloatRational::new(a),
            FloatRational::new(b),
            FloatRational::new(c),
            FloatRational::new(d),
        ])
    }

    fn eval(&self, x: f64, y: f64) -> Option<[f64; 4]> {
        let [a, b, c, d] = &self.0;
        Some([a.eval(x, y)?, b.eval(x, y)?, c.eval(x, y)?, d.eval(x, y)?])
    }

    fn denominators(&self) -> impl Iterator<Item = &FloatPoly> {
        self.0.iter().map(|r| &r.den)
    }
}

pub fn eval_eigenfield(op: &OperatorField2, grid: &GridSpec) -> Result<EigenField, NumericError> {
    let f = FloatOperator::new(op);
    let mut nodes = Vec::with_capacity(grid.len());
    let mut any = false;
    for j in 0..grid.ny {
        let y = grid.y(j);
        for i in 0..grid.nx {
            let x = grid.x(i);
            let node = match f.eval(x, y) {
                Some(m) => {
                    any = true;
                    eigen_node(x, y, m)
                }
                None => EigenNode {
                    x,
                    y,
                    trace: f64::NAN,
                    det: f64::NAN,
                    disc: f64::NAN,
                    region: Region::Masked,
                    lambda_plus: None,
                    lambda_minus: None,
                },
            };
            nodes.push(node);
        }
    }
    if !any {
        return Err(NumericError::AllNodesMasked);
    }
    Ok(EigenField { grid: *grid, nodes })
}

fn eigen_node(x: f64, y: f64, [a, b, c, d]: [f64; 4]) -> EigenNode {
    let trace = a + d;
    let det = a * d - b * c;
    let half_diff = (a - d) / 2.0;
    let bc = b * c;
    // Same value as trace^2/4 - det without the cancellation.
    let disc = half_diff * half_diff + bc;
    let scale = 1.0 + half_diff * half_diff + bc.abs();
    let half = trace / 2.0;
    let (region, plus, minus) = if disc.abs() <= COINCIDENT_BAND * scale {
        (Region::Coincident, Some(half), Some(half))
    } else if disc < 0.0 {
        (Region::Complex, None, None)
    } else {
        let r = disc.sqrt();
        // Larger-magnitude root first, then the other from the product.
        let big = if half >= 0.0 { half + r } else { half - r };
        let small = if big != 0.0 { det / big } else { 0.0 };
        let (p, m) = if big >= small { (big, small) } else { (small, big) };
        (Region::RealDistinct, Some(p), Some(m))
    };
    EigenNode {
        x,
        y,
        trace,
        det,
        disc,
        region,
        lambda_plus: plus,
        lambda_minus: minus,
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum EigenBranch {
    Plus,
    Minus,
}

impl EigenBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            EigenBranch::Plus => "plus",
            EigenBranch::Minus => "minus",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Polyline {
    pub branch: EigenBranch,
    pub level: f64,
    pub points: Vec<(f64, f64)>,
    pub closed: bool,
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct ContourSet {
    pub polylines: Vec<Polyline>,
}

impl ContourSet {
    pub fn is_empty(&self) -> bool {
        self.polylines.is_empty()
    }
}

/// Level lines of `λ₊` then `λ₋`, each level in the given order. Cells
/// touching a complex or masked node are skipped.
pub fn extract_levels(field: &EigenField, levels: &[f64]) -> ContourSet {
    let mut out = ContourSet::default();
    for branch in [EigenBranch::Plus, EigenBranch::Minus] {
        let values: Vec<Option<f64>> = field
            .nodes
            .iter()
            .map(|n| match branch {
                EigenBranch::Plus => n.lambda_plus,
                EigenBranch::Minus => n.lambda_minus,
            })
            .collect();
        for &level in levels {
            if !level.is_finite() {
                continue;
            }
            for (points, closed) in march(&field.grid, &values, level) {
                out.polylines.push(Polyline {
                    branch,
                    level,
                    points,
                    closed,
                });
            }
        }
    }
    out
}

/// Cell edge: `(vertical, i, j)`; horizontal edges join `(i, j)`–`(i+1, j)`,
/// vertical ones `(i, j)`–`(i, j+1)`.
type EdgeKey = (bool, usize, usize);

fn march(grid: &GridSpec, values: &[Option<f64>], level: f64) -> Vec<(Vec<(f64, f64)>, bool)> {
    let (nx, ny) = (grid.nx, grid.ny);
    let mut segments: Vec<(EdgeKey, EdgeKey)> = Vec::new();
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let corners = [
                values[grid.index(i, j)],
                values[grid.index(i + 1, j)],
                values[grid.index(i + 1, j + 1)],
                values[grid.index(i, j + 1)],
            ];
            let [Some(v0), Some(v1), Some(v2), Some(v3)] = corners else {
                continue;
            };
            let vs = [v0, v1, v2, v3];
            let case = vs
                .iter()
                .enumerate()
                .fold(0u8, |acc, (k, &v)| acc | (u8::from(v >= level) << k));
            let bottom = (false, i, j);
            let right = (true, i + 1, j);
            let top = (false, i, j + 1);
            let left = (true, i, j);
            let center_above = (v0 + v1 + v2 + v3) / 4.0 >= level;
            let pairs: &[(EdgeKey, EdgeKey)] = match case {
                0 | 15 => &[],
                1 | 14 => &[(left, bottom)],
                2 | 13 => &[(bottom, right)],
                3 | 12 => &[(left, right)],
                4 | 11 => &[(right, top)],
                6 | 9 => &[(bottom, top)],
                7 | 8 => &[(top, left)],
                5 if center_above => &[(bottom, right), (top, left)],
                5 => &[(left, bottom), (right, top)],
                10 if center_above => &[(left, bottom), (right, top)],
                _ => &[(bottom, right), (top, left)],
            };
            segments.extend_from_slice(pairs);
        }
    }
    chain(&segments)
        .into_iter()
        .map(|(keys, closed)| {
            let pts = keys.iter().map(|k| edge_point(grid, values, *k, level)).collect();
            (pts, closed)
        })
        .collect()
}

fn edge_point(grid: &GridSpec, values: &[Option<f64>], (vertical, i, j): EdgeKey, level: f64) -> (f64, f64) {
    let (i1, j1) = if vertical { (i, j + 1) } else { (i + 1, j) };
    let a = values[grid.index(i, j)].unwrap_or(level);
    let b = values[grid.index(i1, j1)].unwrap_or(level);
    let t = if a == b { 0.5 } else { ((level - a) / (b - a)).clamp(0.0, 1.0) };
    let (x0, y0) = (grid.x(i), grid.y(j));
    let (x1, y1) = (grid.x(i1), grid.y(j1));
    (x0 + t * (x1 - x0), y0 + t * (y1 - y0))
}

/// Joins segments sharing edge points into maximal chains, open chains
/// first from their lowest-numbered free end, then loops.
fn chain(segments: &[(EdgeKey, EdgeKey)]) -> Vec<(Vec<EdgeKey>, bool)> {
    use alloc::collections::BTreeMap;
    let mut incident: BTreeMap<EdgeKey, Vec<usize>> = BTreeMap::new();
    for (s, (a, b)) in segments.iter().enumerate() {
        incident.entry(*a).or_default().push(s);
        incident.entry(*b).or_default().push(s);
    }
    let mut used = vec![false; segments.len()];
    let mut out = Vec::new();

    let walk = |start_seg: usize, start_key: EdgeKey, used: &mut Vec<bool>| {
        let mut keys = vec![start_key];
        let mut seg = start_seg;
        let mut at = start_key;
        loop {
            used[seg] = true;
            let (a, b) = segments[seg];
            let next = if a == at { b } else { a };
            keys.push(next);
            at = next;
            match incident[&at].iter().find(|&&s| !used[s]) {
                Some(&s) => seg = s,
                None => break,
            }
        }
        keys
    };

    for s in 0..segments.len() {
        if used[s] {
            continue;
        }
        let (a, b) = segments[s];
        let free = |k: &EdgeKey| incident[k].len() == 1;
        if free(&a) || free(&b) {
            let start = if free(&a) { a } else { b };
            out.push((walk(s, start, &mut used), false));
        }
    }
    for s in 0..segments.len() {
        if !used[s] {
            let keys = walk(s, segments[s].0, &mut used);
            let closed = keys.first() == keys.last();
            out.push((keys, closed));
        }
    }
    out
}

/// Central-difference torsion: `max |N¹₁₂| + max |N²₁₂|` over interior
/// nodes. Nodes within `margin` of a denominator zero are skipped, judged by
/// a sign change or zero among denominator samples at distance `margin`.
pub fn fd_torsion_residual(
    op: &OperatorField2,
    grid: &GridSpec,
    h: f64,
    margin: f64,
) -> Result<f64, NumericError> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(NumericError::InvalidStep(h));
    }
    let f = FloatOperator::new(op);
    let dens: Vec<&FloatPoly> = f.denominators().filter(|d| !is_constant(d)).collect();
    let near_pole = |x: f64, y: f64| {
        if margin <= 0.0 {
            return false;
        }
        dens.iter().any(|d| {
            let c = d.eval(x, y);
            let offsets = [
                (margin, 0.0),
                (-margin, 0.0),
                (0.0, margin),
                (0.0, -margin),
                (margin, margin),
                (margin, -margin),
                (-margin, margin),
                (-margin, -margin),
            ];
            c == 0.0
                || offsets.iter().any(|&(ox, oy)| {
                    let v = d.eval(x + ox, y + oy);
                    v == 0.0 || v.signum() != c.signum()
                })
        })
    };
    let at = |x: f64, y: f64| f.eval(x, y).ok_or(NumericError::SingularOnGrid { x, y });

    let mut max1: f64 = 0.0;
    let mut max2: f64 = 0.0;
    for j in 1..grid.ny - 1 {
        let y = grid.y(j);
        for i in 1..grid.nx - 1 {
            let x = grid.x(i);
            if near_pole(x, y) {
                continue;
            }
            let [a, b, c, d] = at(x, y)?;
            let [ax1, bx1, cx1, dx1] = at(x + h, y)?;
            let [ax0, bx0, cx0, dx0] = at(x - h, y)?;
            let [ay1, by1, cy1, dy1] = at(x, y + h)?;
            let [ay0, by0, cy0, dy0] = at(x, y - h)?;
            let dx = |p: f64, m: f64| (p - m) / (2.0 * h);
            let a_y = dx(ay1, ay0);
            let d_x = dx(dx1, dx0);
            let bc_x = dx(bx1 * cx1, bx0 * cx0);
            let bc_y = dx(by1 * cy1, by0 * cy0);
            let tr_x = dx(ax1 + dx1, ax0 + dx0);
            let tr_y = dx(ay1 + dy1, ay0 + dy0);
            let n1 = a_y * (a - d) + bc_y - tr_x * b;
            let n2 = d_x * (a - d) - bc_x + tr_y * c;
            if !(n1.is_finite() && n2.is_finite()) {
                return Err(NumericError::SingularOnGrid { x, y });
            }
            max1 = max1.max(n1.abs());
            max2 = max2.max(n2.abs());
        }
    }
    Ok(max1 + max2)
}

fn is_constant(p: &FloatPoly) -> bool {
    p.0.iter().all(|&(_, i, j)| i == 0 && j == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_operator;

    fn unit(n: usize) -> GridSpec {
        GridSpec::unit_square(n).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new((1.0, 0.0), (0.0, 1.0), 3, 3).is_err());
        assert!(GridSpec::new((0.0, 1.0), (0.0, 1.0), 1, 3).is_err());
        assert!(GridSpec::new((0.0, f64::NAN), (0.0, 1.0), 3, 3).is_err());
        let g = unit(201);
        assert_eq!(g.x(0), -1.0);
        assert_eq!(g.x(100), 0.0);
        assert_eq!(g.x(200), 1.0);
        assert_eq!(g.x(30), -g.x(170));
    }

    #[test]
    fn identity_is_coincident() {
        let op = parse_operator(["1", "0", "0", "1"]).unwrap();
        let f = eval_eigenfield(&op, &unit(5)).unwrap();
        assert!(f.nodes.iter().all(|n| n.region == Region::Coincident));
        assert!(f.nodes.iter().all(|n| n.lambda_plus == Some(1.0) && n.lambda_minus == Some(1.0)));
        assert!(extract_levels(&f, &[0.5, 2.0]).is_empty());
    }

    #[test]
    fn masked_nodes() {
        let op = parse_operator(["1/x", "0", "0", "1"]).unwrap();
        let f = eval_eigenfield(&op, &unit(3)).unwrap();
        assert_eq!(f.node(1, 0).region, Region::Masked);
        assert_eq!(f.node(0, 0).region, Region::RealDistinct);
        let op = parse_operator(["1/(x - x)", "0", "0", "1"]);
        assert!(op.is_err());
    }

    #[test]
    fn saddle_and_chaining() {
        // λ± of [[x, 0], [0, -x]] are ±|x|; level 0.5 gives two vertical lines.
        let op = parse_operator(["x", "0", "0", "-x"]).unwrap();
        let f = eval_eigenfield(&op, &unit(11)).unwrap();
        let c = extract_levels(&f, &[0.5]);
        let plus: Vec<_> = c.polylines.iter().filter(|p| p.branch == EigenBranch::Plus).collect();
        assert_eq!(plus.len(), 2);
        for p in plus {
            assert_eq!(p.points.len(), 11);
            assert!(p.points.iter().all(|&(x, _)| (x.abs() - 0.5).abs() < 1e-12));
        }
    }

    #[test]
    fn residual_examples() {
        let g = unit(101);
        let op = parse_operator(["x", "2*y", "y/2", "0"]).unwrap();
        assert!(fd_torsion_residual(&op, &g, 1e-4, 0.0).unwrap() < 1e-6);
        let op = parse_operator(["3", "-1", "2", "5"]).unwrap();
        assert!(fd_torsion_residual(&op, &g, 1e-4, 0.0).unwrap() < 1e-12);
        let op = parse_operator(["y", "0", "0", "x"]).unwrap();
        let r = fd_torsion_residual(&op, &g, 1e-4, 0.0).unwrap();
        assert!((r - 3.92).abs() < 1e-6, "{r}");
        assert!(fd_torsion_residual(&op, &g, 0.0, 0.0).is_err());
        let op = parse_operator(["1/x", "0", "0", "1"]).unwrap();
        assert!(fd_torsion_residual(&op, &g, 1e-4, 0.0).is_err());
        assert!(fd_torsion_residual(&op, &g, 1e-4, 1e-2).is_ok());
    }
}
