mod common;

use common::{matrix, nilpotent, poly, rational};
use num_complex::Complex64;
use proptest::prelude::*;
use uhsl2_core::matrix::analytic::{analytic_series, AnalyticFn};
use uhsl2_core::represent::Generator;
use uhsl2_core::verify::{relation_checks, VerificationReport};
use uhsl2_core::{build_irrep, Epsilon, HPoly, HalfInt, PolyMatrix, Rational};

fn abs_bound(p: &HPoly, r: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * r + c.to_f64().abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn additive_group(a in poly(8), b in poly(8), c in poly(8)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a + &HPoly::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplicative_monoid(a in poly(8), b in poly(8), c in poly(8)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &HPoly::one(), a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn degree_is_additive(a in poly(8), b in poly(8)) {
        let p = &a * &b;
        match (a.degree(), b.degree()) {
            (Some(x), Some(y)) => prop_assert_eq!(p.degree(), Some(x + y)),
            _ => prop_assert!(p.is_zero()),
        }
    }

    #[test]
    fn rationals_stay_reduced(n in -1000i64..1000, d in 1i64..1000) {
        let r = Rational::new(n, d);
        prop_assert_eq!(r.normalized(), r.clone());
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn evaluation_is_multiplicative(a in poly(16), b in poly(16), re in -1.0f64..1.0, im in -1.0f64..1.0) {
        let h0 = Complex64::new(re, im);
        let lhs = (&a * &b).eval(h0);
        let rhs = a.eval(h0) * b.eval(h0);
        let scale = abs_bound(&a, h0.norm()) * abs_bound(&b, h0.norm());
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn exact_evaluation_is_a_homomorphism(a in poly(6), b in poly(6), x in rational()) {
        prop_assert_eq!((&a * &b).eval_rational(&x), &a.eval_rational(&x) * &b.eval_rational(&x));
        prop_assert_eq!((&a + &b).eval_rational(&x), &a.eval_rational(&x) + &b.eval_rational(&x));
    }

    #[test]
    fn kron_keeps_triangularity(a in nilpotent(3, 2), b in nilpotent(3, 2)) {
        let ua = a.add(&PolyMatrix::identity(a.rows())).unwrap();
        let ub = b.add(&PolyMatrix::identity(b.rows())).unwrap();
        let k = ua.kron(&ub).unwrap();
        prop_assert!(k.is_upper_triangular());
        prop_assert!(k.diagonal().iter().all(HPoly::is_one));
        prop_assert!(a.kron(&ub).unwrap().is_strictly_upper_triangular());
    }

    #[test]
    fn kron_mixed_product(a in matrix(2, 3, 2), c in matrix(3, 2, 2), b in matrix(2, 2, 2), d in matrix(2, 1, 2)) {
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sqrt1p_squares_back(n in nilpotent(5, 2)) {
        let s = analytic_series(&n, AnalyticFn::Sqrt1p).unwrap();
        prop_assert_eq!(s.mul(&s).unwrap(), PolyMatrix::identity(n.rows()).add(&n).unwrap());
    }

    #[test]
    fn tanh_inverts_arctanh(n in nilpotent(5, 2)) {
        let a = analytic_series(&n, AnalyticFn::Arctanh).unwrap();
        prop_assert_eq!(analytic_series(&a, AnalyticFn::Tanh).unwrap(), n);
    }

    #[test]
    fn geom_inv_inverts(n in nilpotent(5, 2)) {
        let g = analytic_series(&n, AnalyticFn::GeomInv).unwrap();
        let one_plus = PolyMatrix::identity(n.rows()).add(&n).unwrap();
        prop_assert!(g.mul(&one_plus).unwrap().is_identity());
    }

    #[test]
    fn exp_of_log1p(n in nilpotent(4, 2)) {
        let l = analytic_series(&n, AnalyticFn::Log1p).unwrap();
        let e = analytic_series(&l, AnalyticFn::Exp).unwrap();
        prop_assert_eq!(e, PolyMatrix::identity(n.rows()).add(&n).unwrap());
    }

    #[test]
    fn matrix_json_round_trip(m in matrix(3, 2, 4)) {
        let text = serde_json::to_string(&m).unwrap();
        let back: PolyMatrix = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn single_entry_mutations_are_detected(
        twice in 0u32..=5,
        minus in any::<bool>(),
        g in 0usize..4,
        row in 0usize..8,
        col in 0usize..8,
        delta in rational().prop_filter("nonzero", |r| !r.is_zero()),
        power in 0usize..=3,
    ) {
        let eps = if minus { Epsilon::Minus } else { Epsilon::Plus };
        let r = build_irrep(HalfInt::from_twice(twice), eps).unwrap();
        let n = r.dim();
        let g = [Generator::H, Generator::T, Generator::TInv, Generator::Y][g];
        let (row, col) = (row % n, col % n);
        let value = r.generator(g).get(row, col) + &HPoly::monomial(delta, power);
        let mut report = VerificationReport::new("mutation");
        relation_checks(&mut report, &r.with_entry(g, row, col, value));
        prop_assert!(!report.passed);
    }
}
