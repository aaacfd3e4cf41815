use std::sync::Arc;

use proptest::prelude::*;

use hopfkit::arith::{
    factor_rational, is_algebraic_integer, min_poly_scalar, rat, CycScalar, CyclotomicField, Field, Poly, Rational,
};
use hopfkit::builders::{builtin_group, function_algebra, group_algebra};
use hopfkit::hopf::{convolve, dualize, hit_act_alg_on_dual, pair, parse_hopf, write_hopf, DualVector, HopfData};
use hopfkit::linalg::{coordinates_in, kernel_basis, Matrix};
use hopfkit::wedderburn::primitive_idempotents;

const ORDERS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn scalar_in(field: Arc<CyclotomicField>) -> impl Strategy<Value = CycScalar> {
    let len = field.degree();
    prop::collection::vec(rational(), len).prop_map(move |c| CycScalar::from_coords(&field, c))
}

fn field() -> impl Strategy<Value = Arc<CyclotomicField>> {
    prop::sample::select(ORDERS.to_vec()).prop_map(|n| CyclotomicField::new(n).unwrap())
}

fn triple() -> impl Strategy<Value = (CycScalar, CycScalar, CycScalar)> {
    field().prop_flat_map(|f| (scalar_in(f.clone()), scalar_in(f.clone()), scalar_in(f)))
}

fn small_poly() -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(-4i64..=4, 2..7)
        .prop_filter("nonzero leading coefficient", |c| *c.last().unwrap() != 0)
        .prop_map(|c| Poly::from_ints(&c))
}

fn algebra() -> impl Strategy<Value = HopfData> {
    (prop::sample::select(vec!["C2", "C3", "S3", "Q8"]), any::<bool>()).prop_map(|(name, dual)| {
        let g = builtin_group(name).unwrap();
        if dual {
            function_algebra(&g)
        } else {
            group_algebra(&g)
        }
    })
}

fn dual_vectors(h: &HopfData, count: usize) -> impl Strategy<Value = Vec<DualVector>> {
    let d = h.dim();
    prop::collection::vec(
        prop::collection::vec(-3i64..=3, d)
            .prop_map(|v| DualVector::new(v.into_iter().map(CycScalar::from_int).collect())),
        count,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert_eq!(a.minus(&a), CycScalar::zero_in(a.field()));
        if let Some(inv) = a.inverse() {
            prop_assert!(a.times(&inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn minimal_polynomial_vanishes((a, _, _) in triple()) {
        let p = min_poly_scalar(&a);
        prop_assert!(p.is_monic());
        prop_assert!(p.map(|c| CycScalar::rational(c.clone())).eval(&a).is_zero());
        prop_assert!(p.degree().unwrap() <= a.field().degree());
        prop_assert!(is_algebraic_integer(&a).replay());
    }

    #[test]
    fn rational_roots_of_unity_integrality(m in -12i64..=12, n in 1i64..=6, k in 0i64..12, order in prop::sample::select(ORDERS.to_vec())) {
        // oracle: (m/n) ζ^k is an algebraic integer iff n divides m
        let f = CyclotomicField::new(order).unwrap();
        let x = CycScalar::zeta_power(&f, k).times(&CycScalar::rational(rat(m, n)));
        prop_assert_eq!(is_algebraic_integer(&x).is_integer, m % n == 0);
    }

    #[test]
    fn factorization_round_trips(p in small_poly()) {
        let f = factor_rational(&p).unwrap();
        prop_assert_eq!(f.expand(), p);
        for (q, _) in &f.factors {
            prop_assert!(q.is_monic());
            prop_assert_eq!(factor_rational(q).unwrap().factors.len(), 1);
        }
    }

    #[test]
    fn kernel_and_coordinates(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..5)) {
        let m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect();
        let a = Matrix::from_rows(&m);
        let kernel = kernel_basis(&a);
        prop_assert_eq!(kernel.len() + a.rank(), 5);
        for v in &kernel {
            prop_assert!(a.mul_vec(v).iter().all(Field::is_zero));
        }
        let target: Vec<Rational> = (0..5).map(|j| m.iter().fold(rat(0, 1), |s, r| s + &r[j])).collect();
        let coords = coordinates_in(&m, &target);
        prop_assert!(coords.is_some());
    }

    #[test]
    fn convolution_is_associative((h, v) in algebra().prop_flat_map(|h| { let s = dual_vectors(&h, 3); (Just(h), s) })) {
        let lhs = convolve(&convolve(&v[0], &v[1], &h), &v[2], &h);
        let rhs = convolve(&v[0], &convolve(&v[1], &v[2], &h), &h);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hit_action_is_adjoint((h, v) in algebra().prop_flat_map(|h| { let s = dual_vectors(&h, 3); (Just(h), s) })) {
        // ⟨x ⇀ φ, y⟩ = ⟨φ, y x⟩
        let x: Vec<CycScalar> = v[1].coords.clone();
        let y: Vec<CycScalar> = v[2].coords.clone();
        let lhs = pair(&hit_act_alg_on_dual(&x, &v[0], &h), &y);
        prop_assert_eq!(lhs, pair(&v[0], &h.multiply(&y, &x)));
    }

    #[test]
    fn file_format_round_trips(h in algebra()) {
        let back = parse_hopf(&write_hopf(&h)).unwrap();
        prop_assert_eq!(back.tensors(), h.tensors());
        let dual = dualize(&dualize(&h));
        prop_assert_eq!(dual.tensors(), h.tensors());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn blocks_do_not_depend_on_seed(seed in any::<u64>()) {
        let h = group_algebra(&builtin_group("D4").unwrap());
        let a = primitive_idempotents(&h, 4, seed).unwrap();
        let b = primitive_idempotents(&h, 4, 0).unwrap();
        prop_assert_eq!(a.idempotents(), b.idempotents());
    }
}
