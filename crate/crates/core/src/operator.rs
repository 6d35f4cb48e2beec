//! 2x2 operator fields `L = [[a, b], [c, d]]` on the plane.

use alloc::boxed::Box;
use core::fmt;

use crate::ratfunc::RationalFunction2;
use crate::rational::ExactRational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OperatorField2 {
    a: RationalFunction2,
    b: RationalFunction2,
    c: RationalFunction2,
    d: RationalFunction2,
}

/// The two components `N^1_{12}` and `N^2_{12}` of the torsion. The others
/// vanish or follow by antisymmetry in the lower indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsionComponents {
    pub n1: RationalFunction2,
    pub n2: RationalFunction2,
}

impl TorsionComponents {
    pub fn is_zero(&self) -> bool {
        self.n1.is_zero() && self.n2.is_zero()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacteristicData {
    pub trace: RationalFunction2,
    pub det: RationalFunction2,
    /// `trace^2 / 4 - det`
    pub disc: RationalFunction2,
}

/// Pointwise conjugacy class of a real 2x2 matrix.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum AlgebraicType {
    JordanBlock,
    RealDiagonalDistinct,
    ComplexPair,
    ScalarType,
}

impl fmt::Display for AlgebraicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraicType::JordanBlock => "jordan-block",
            AlgebraicType::RealDiagonalDistinct => "real-diagonal-distinct",
            AlgebraicType::ComplexPair => "complex-pair",
            AlgebraicType::ScalarType => "scalar-type",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum OperatorError {
    /// `[x, y]`, boxed to keep results small.
    #[error("an entry has a vanishing denominator at ({}, {})", .0[0], .0[1])]
    UndefinedAtPoint(Box<[ExactRational; 2]>),
}

/// Constant matrix `[[a, b], [c, d]]`.
pub type Matrix2 = [[ExactRational; 2]; 2];

/// Classifies a constant matrix by the sign of `trace^2/4 - det`.
pub fn algebraic_type_of_matrix(m: &Matrix2) -> AlgebraicType {
    let [[a, b], [c, d]] = m;
    let half_diff = (a - d) / ExactRational::from_integer(2);
    let disc = &half_diff * &half_diff + b * c;
    if disc.is_positive() {
        AlgebraicType::RealDiagonalDistinct
    } else if disc.is_negative() {
        AlgebraicType::ComplexPair
    } else if b.is_zero() && c.is_zero() && a == d {
        AlgebraicType::ScalarType
    } else {
        AlgebraicType::JordanBlock
    }
}

impl OperatorField2 {
    pub fn new(
        a: RationalFunction2,
        b: RationalFunction2,
        c: RationalFunction2,
        d: RationalFunction2,
    ) -> Self {
        OperatorField2 { a, b, c, d }
    }

    pub fn from_polys(
        a: crate::poly::Poly,
        b: crate::poly::Poly,
        c: crate::poly::Poly,
        d: crate::poly::Poly,
    ) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn a(&self) -> &RationalFunction2 {
        &self.a
    }

    pub fn b(&self) -> &RationalFunction2 {
        &self.b
    }

    pub fn c(&self) -> &RationalFunction2 {
        &self.c
    }

    pub fn d(&self) -> &RationalFunction2 {
        &self.d
    }

    /// Row-major entries.
    pub fn entries(&self) -> [&RationalFunction2; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn torsion_components(&self) -> TorsionComponents {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let a_minus_d = a - d;
        let tr = a + d;
        let bc = b * c;
        let n1 = &(&(&a.partial_y() * &a_minus_d) + &bc.partial_y()) - &(&tr.partial_x() * b);
        let n2 = &(&(&d.partial_x() * &a_minus_d) - &bc.partial_x()) + &(&tr.partial_y() * c);
        TorsionComponents { n1, n2 }
    }

    pub fn is_nijenhuis(&self) -> bool {
        self.torsion_components().is_zero()
    }

    pub fn trace(&self) -> RationalFunction2 {
        &self.a + &self.d
    }

    pub fn det(&self) -> RationalFunction2 {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn characteristic_data(&self) -> CharacteristicData {
        let trace = self.trace();
        let det = self.det();
        let half = ExactRational::from_ratio(1, 2).expect("nonzero");
        let half_trace = trace.scale(&half);
        let disc = &(&half_trace * &half_trace) - &det;
        CharacteristicData { trace, det, disc }
    }

    /// Jacobian determinant of `(trace, det)` with respect to `(x, y)`.
    pub fn differential_degeneracy(&self) -> RationalFunction2 {
        let tr = self.trace();
        let det = self.det();
        &(&tr.partial_x() * &det.partial_y()) - &(&tr.partial_y() * &det.partial_x())
    }

    pub fn eval_at(&self, x: &ExactRational, y: &ExactRational) -> Result<Matrix2, OperatorError> {
        let ev = |r: &RationalFunction2| {
            r.eval(x, y)
                .ok_or_else(|| OperatorError::UndefinedAtPoint(Box::new([x.clone(), y.clone()])))
        };
        Ok([[ev(&self.a)?, ev(&self.b)?], [ev(&self.c)?, ev(&self.d)?]])
    }

    pub fn algebraic_type_at_point(
        &self,
        x: &ExactRational,
        y: &ExactRational,
    ) -> Result<AlgebraicType, OperatorError> {
        Ok(algebraic_type_of_matrix(&self.eval_at(x, y)?))
    }
}

impl fmt::Display for OperatorField2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
