use nijenhuis_core::classify::{classify, Verdict};
use nijenhuis_core::discriminant::{is_admissible_on, reconstruct_from_det, reconstruct_from_disc, TestRegion};
use nijenhuis_core::jets::verify_root_derivatives;
use nijenhuis_core::operator::algebraic_type_of_matrix;
use nijenhuis_core::parser::parse_poly;
use nijenhuis_core::{ExactRational, Monomial, OperatorField2, Poly, RationalFunction2};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::from_ratio(n, d).unwrap()
}

fn p(s: &str) -> Poly {
    parse_poly(s).unwrap()
}

fn poly_strategy(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -6i64..=6, 1i64..=3), 0..=max_terms).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(i, j, n, d)| (Monomial::new(i, j), q(n, d))))
    })
}

/// All components `N^i_{jk}` from
/// `L^l_j ∂_l L^i_k - L^l_k ∂_l L^i_j - L^i_l (∂_j L^l_k - ∂_k L^l_j)`,
/// with `L^i_j` the entry in row `i`, column `j`.
fn full_torsion(op: &OperatorField2) -> [[[RationalFunction2; 2]; 2]; 2] {
    let [a, b, c, d] = op.entries();
    let l = [[a.clone(), b.clone()], [c.clone(), d.clone()]];
    let partial = |f: &RationalFunction2, axis: usize| if axis == 0 { f.partial_x() } else { f.partial_y() };
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                let mut acc = RationalFunction2::zero();
                for m in 0..2 {
                    acc = &acc + &(&l[m][j] * &partial(&l[i][k], m));
                    acc = &acc - &(&l[m][k] * &partial(&l[i][j], m));
                    let bracket = &partial(&l[m][k], j) - &partial(&l[m][j], k);
                    acc = &acc - &(&l[i][m] * &bracket);
                }
                acc
            })
        })
    })
}

fn assert_torsion_matches_oracle(op: &OperatorField2) {
    let t = op.torsion_components();
    let n = full_torsion(op);
    for row in &n {
        assert!(row[0][0].is_zero() && row[1][1].is_zero(), "diagonal components vanish");
        assert_eq!(row[0][1], -&row[1][0], "antisymmetry in the lower indices");
    }
    assert_eq!(t.n1, n[0][0][1]);
    assert_eq!(t.n2, n[1][0][1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn torsion_agrees_with_index_formula(
        a in poly_strategy(2, 3),
        b in poly_strategy(2, 3),
        c in poly_strategy(2, 3),
        d in poly_strategy(2, 3),
    ) {
        assert_torsion_matches_oracle(&OperatorField2::from_polys(a, b, c, d));
    }

    #[test]
    fn reconstruction_round_trip(g in poly_strategy(4, 5)) {
        prop_assume!(g.depends_on_y());
        let rec = reconstruct_from_disc(&g).unwrap();
        let data = rec.operator.characteristic_data();
        prop_assert_eq!(data.trace, RationalFunction2::from_poly(Poly::x()));
        prop_assert_eq!(data.disc, RationalFunction2::from_poly(g.clone()));
        // The construction solves the torsion equations identically.
        prop_assert!(rec.operator.is_nijenhuis());
    }

    #[test]
    fn det_and_disc_reconstructions_agree(f in poly_strategy(4, 5)) {
        prop_assume!(f.depends_on_y());
        let from_det = reconstruct_from_det(&f).unwrap();
        let data = from_det.operator.characteristic_data();
        prop_assert_eq!(&data.det, &RationalFunction2::from_poly(f.clone()));
        prop_assert!(from_det.operator.is_nijenhuis());
        // g = x^2/4 - f
        let g = &Poly::x().pow(2).scale(&q(1, 4)) - &f;
        let from_disc = reconstruct_from_disc(&g).unwrap();
        prop_assert_eq!(from_disc.operator.characteristic_data().det, data.det);
    }

    /// Planted germs `sign * ỹ^2 + τ0` and `ỹ^3 + β0` with `ỹ = y + h(x, y)`.
    #[test]
    fn planted_normal_forms_classify_admissible(
        h in poly_strategy(2, 3),
        sign in prop_oneof![Just(1i64), Just(-1i64)],
        quarter in any::<bool>(),
        cubic in any::<bool>(),
    ) {
        let h = &h - &Poly::constant(h.constant_term());
        let h = &h - &Poly::monomial(h.coeff(0, 1), 0, 1);
        let yt = &Poly::y() + &h;
        let tail = if quarter { Poly::x().pow(2).scale(&q(1, 4)) } else { Poly::zero() };
        let g = if cubic {
            &yt.pow(3) + &tail
        } else {
            &yt.pow(2).scale(&q(sign, 1)) + &tail
        };
        let r = classify(&g, 8);
        prop_assert_eq!(r.verdict(), Verdict::Admissible, "{} -> {:?}", g, r.branch);
        prop_assert!(r.raw.is_admissible());
        prop_assert!(r.operator.as_ref().unwrap().is_nijenhuis());
        prop_assert!(r.reconstructed.as_ref().unwrap().operator.is_nijenhuis());
    }

    #[test]
    fn germ_verdict_is_shear_invariant(g in poly_strategy(3, 4), an in -2i64..=2, bn in prop_oneof![Just(-2i64), Just(1i64), Just(3i64)]) {
        let g = &g - &Poly::constant(g.constant_term());
        let sheared = g.shear_substitute(&q(an, 1), &q(bn, 1)).unwrap();
        prop_assert_eq!(
            is_admissible_on(&g, &TestRegion::Germ),
            is_admissible_on(&sheared, &TestRegion::Germ)
        );
    }

    #[test]
    fn algebraic_type_is_conjugation_invariant(
        m in prop::array::uniform4(-4i64..=4),
        s in prop::array::uniform4(-3i64..=3),
    ) {
        let det_s = s[0] * s[3] - s[1] * s[2];
        prop_assume!(det_s != 0);
        let mat = [[q(m[0], 1), q(m[1], 1)], [q(m[2], 1), q(m[3], 1)]];
        let sm = [[q(s[0], 1), q(s[1], 1)], [q(s[2], 1), q(s[3], 1)]];
        let inv_det = q(1, det_s);
        let inv = [
            [&sm[1][1] * &inv_det, -&(&sm[0][1] * &inv_det)],
            [-&(&sm[1][0] * &inv_det), &sm[0][0] * &inv_det],
        ];
        let mul = |a: &[[ExactRational; 2]; 2], b: &[[ExactRational; 2]; 2]| {
            let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
            [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
        };
        let conj = mul(&mul(&sm, &mat), &inv);
        prop_assert_eq!(algebraic_type_of_matrix(&mat), algebraic_type_of_matrix(&conj));
    }
}

#[test]
fn torsion_oracle_on_named_operators() {
    for entries in [
        ["x", "1", "y", "0"],
        ["y", "0", "0", "x"],
        ["x", "2*y", "y/2", "0"],
        ["x/2", "-2*y", "y/2", "x/2"],
        ["x", "3*y^2", "y/3", "0"],
        ["x", "y", "x*y/(1 + y^2)", "x^2"],
    ] {
        let op = nijenhuis_core::parse_operator(entries).unwrap();
        assert_torsion_matches_oracle(&op);
    }
}

/// `d^n/dy^n` at `y = 0` by repeated symbolic differentiation.
fn symbolic_derivative_at_zero(f: RationalFunction2, n: u32) -> ExactRational {
    let mut f = f;
    for _ in 0..n {
        f = f.partial_y();
    }
    f.eval(&ExactRational::zero(), &ExactRational::zero()).unwrap()
}

#[test]
fn root_derivatives_match_symbolic_differentiation() {
    for c in [q(1, 1), q(2, 1), q(3, 1), q(-1, 1), q(1, 2)] {
        let denom = &Poly::y().pow(2) + &Poly::constant(c.clone());
        for k in 0..=5u32 {
            let check = verify_root_derivatives(k, &c).unwrap();
            assert!(check.holds, "k={k} c={c}");
            let even = RationalFunction2::new(Poly::one(), denom.clone()).unwrap();
            let odd = RationalFunction2::new(Poly::y(), denom.clone()).unwrap();
            assert_eq!(check.even_value, symbolic_derivative_at_zero(even, 2 * k));
            assert_eq!(check.odd_value, symbolic_derivative_at_zero(odd, 2 * k + 1));
        }
    }
}

#[test]
fn classify_examples() {
    let cases = [
        ("y", "non-degenerate"),
        ("y^2 + x^2/4", "morse"),
        ("y^2 + 2*x*y", "not-admissible"),
        ("y^3", "y-only"),
        ("y^3 + x^2/4", "cubic"),
        ("y^3 + x*y", "not-admissible"),
        ("x^2*y^3", "homogeneous"),
        ("x*y^3", "not-admissible"),
        ("(x + 2*y)^3", "homogeneous"),
        ("y^4 + x*y^5", "undecided"),
        ("x^4 + x^2*y", "linear-in-y"),
        ("x^2/4", "y-independent"),
    ];
    for (g, tag) in cases {
        let r = classify(&p(g), 12);
        assert_eq!(r.branch.tag(), tag, "{g}");
        if r.verdict() == Verdict::Admissible {
            assert!(r.operator.unwrap().is_nijenhuis(), "{g}");
        }
    }
}
