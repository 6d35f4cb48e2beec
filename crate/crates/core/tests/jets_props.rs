use nijenhuis_core::jets::{cubic_normalize_y, morse_normalize_y, series_pow, Jet2};
use nijenhuis_core::parser::parse_poly;
use nijenhuis_core::univariate::UniPoly;
use nijenhuis_core::{ExactRational, Monomial, Poly};
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

/// `g` with the required vanishing at the origin and leading `y^power` term.
fn germ_strategy(power: u32) -> impl Strategy<Value = Poly> {
    (poly_strategy(4, 5), prop_oneof![Just(-2i64), Just(-1), Just(1), Just(3)]).prop_map(move |(h, lead)| {
        let rest = Poly::from_terms(
            h.terms()
                .filter(|(m, _)| m.x > 0 || m.y > power)
                .map(|(m, c)| (*m, c.clone())),
        );
        &rest + &Poly::monomial(q(lead, 1), 0, power)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reciprocal_inverts(a in poly_strategy(3, 4), c in prop_oneof![-3i64..=-1, 1i64..=3], n in 1u32..=6) {
        let unit = &(&a - &Poly::constant(a.constant_term())) + &Poly::integer(c);
        let j = Jet2::from_poly(&unit, n);
        let prod = j.checked_mul(&j.reciprocal().unwrap()).unwrap();
        prop_assert_eq!(prod, Jet2::one(n));
    }

    #[test]
    fn series_power_inverts_integer_power(coeffs in prop::collection::vec(-4i64..=4, 1..5), k in 2i64..=4) {
        let mut cs = vec![ExactRational::one()];
        cs.extend(coeffs.into_iter().map(|v| q(v, 1)));
        let u = UniPoly::from_coeffs(cs);
        let n = 8;
        let root = series_pow(&u, &q(1, k), n);
        let mut back = UniPoly::one();
        for _ in 0..k {
            back = back.mul_trunc(&root, n);
        }
        prop_assert_eq!(back, u.truncate(n));
    }

    #[test]
    fn morse_normalization_holds_to_order(g in germ_strategy(2), order in 3u32..=7) {
        let form = morse_normalize_y(&g, order).unwrap();
        prop_assert!(form.raw.holds_to_order(&g));
        prop_assert!(form.tau.coeff(0).is_zero());
        prop_assert!(form.sub.is_invertible());
    }

    #[test]
    fn cubic_normalization_holds_to_order(g in germ_strategy(3), order in 3u32..=6) {
        let form = cubic_normalize_y(&g, order).unwrap();
        prop_assert!(form.raw.holds_to_order(&g));
        prop_assert!(form.sub.is_invertible());
    }
}

#[test]
fn jet_examples() {
    let j = |s: &str, n| Jet2::from_poly(&p(s), n);
    assert_eq!(j("1 + y", 3).checked_mul(&j("1 - y", 3)).unwrap(), j("1 - y^2", 3));
    assert_eq!(j("y^2", 3).checked_mul(&j("y^2", 3)).unwrap(), Jet2::zero(3));
    assert_eq!(j("1 + y", 3).reciprocal().unwrap(), j("1 - y + y^2 - y^3", 3));
    assert_eq!(j("y^2 + 1", 4).reciprocal().unwrap(), j("1 - y^2 + y^4", 4));
    assert_eq!(j("1/2", 2).reciprocal().unwrap(), j("2", 2));
}

#[test]
fn normal_form_examples() {
    let form = morse_normalize_y(&p("y^2 + 2*x*y"), 6).unwrap();
    assert_eq!(form.sign, 1);
    assert_eq!(form.sub.base.to_poly(), p("y + x"));
    assert_eq!(Poly::from_x_poly(&form.tau), p("-x^2"));

    let form = morse_normalize_y(&p("-y^2 + x^2/4"), 6).unwrap();
    assert_eq!(form.sign, -1);
    assert_eq!(Poly::from_x_poly(&form.tau), p("x^2/4"));

    let form = cubic_normalize_y(&p("y^3 + x^2/4"), 6).unwrap();
    assert_eq!(form.sub.base.to_poly(), Poly::y());
    assert_eq!(Poly::from_x_poly(&form.beta), p("x^2/4"));
    assert!(form.sigma.is_zero());

    let form = cubic_normalize_y(&p("(y + x)^3"), 6).unwrap();
    assert_eq!(form.sub.base.to_poly(), p("y + x"));
    assert!(form.beta.is_zero() && form.sigma.is_zero());

    let form = cubic_normalize_y(&p("y^3 + x*y^2"), 6).unwrap();
    assert_eq!(form.sub.base.to_poly(), p("y + x/3"));
    assert_eq!(Poly::from_x_poly(form.tau.as_ref().unwrap()), p("-x^2/3"));
    assert_eq!(Poly::from_x_poly(&form.beta), p("2*x^3/27"));
}
