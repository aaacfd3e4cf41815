use super::*;
use crate::arith::CycScalar;

fn c(n: i64) -> CycScalar {
    CycScalar::from_int(n)
}

/// Group algebra of `Z/n` written out by hand: `b_i b_j = b_{i+j}`.
fn cyclic_group_algebra(n: usize) -> HopfData {
    let mut t = HopfTensors::zeros(n);
    for i in 0..n {
        for j in 0..n {
            t.mult[(i * n + j) * n + (i + j) % n] = c(1);
        }
        t.comult[(i * n + i) * n + i] = c(1);
        t.counit[i] = c(1);
        t.antipode[((n - i) % n) * n + i] = c(1);
    }
    t.unit[0] = c(1);
    HopfData::new(format!("kC{n}"), n, CyclotomicField::new(n as u32).unwrap(), t).unwrap()
}

fn sample_vectors(d: usize) -> Vec<Vec<CycScalar>> {
    let mut out: Vec<Vec<CycScalar>> = (0..d).map(|i| unit_vector(d, i)).collect();
    out.push((0..d).map(|i| c(i as i64 * 2 - 1)).collect());
    out.push((0..d).map(|i| CycScalar::rational(crate::arith::rat(1, i as i64 + 2))).collect());
    out
}

#[test]
fn kc2_structure_and_axioms() {
    let h = cyclic_group_algebra(2);
    assert!(check_axioms(&h).all_pass());
    assert!(h.is_rational());
    assert_eq!(h.multiply(&unit_vector(2, 1), &unit_vector(2, 1)), unit_vector(2, 0));
    assert_eq!(h.left_trace(&unit_vector(2, 0)), c(2));
    assert_eq!(h.left_trace(&unit_vector(2, 1)), c(0));
}

#[test]
fn dual_of_kc2_is_diagonal_after_base_change() {
    let h = cyclic_group_algebra(2);
    let hd = dualize(&h);
    assert!(check_axioms(&hd).all_pass());
    assert_eq!(hd.name(), "kC2*");
    // δ-basis functionals δ_e, δ_g are orthogonal idempotents summing to ε of H*
    let e = DualVector::basis(2, 0);
    let g = DualVector::basis(2, 1);
    assert_eq!(hd.multiply(&e.coords, &e.coords), e.coords);
    assert_eq!(hd.multiply(&e.coords, &g.coords), vec![c(0), c(0)]);
    assert_eq!(hd.unit(), &[c(1), c(1)]);
}

#[test]
fn biduality_is_exact() {
    for n in [1, 2, 3, 4] {
        let h = cyclic_group_algebra(n);
        let back = dualize(&dualize(&h));
        assert_eq!(back, h);
        assert_eq!(back.name(), h.name());
    }
}

#[test]
fn convolution_is_associative_with_counit_unit() {
    let h = cyclic_group_algebra(3);
    let eps = DualVector::new(h.counit().to_vec());
    let vs: Vec<DualVector> = sample_vectors(3).into_iter().map(DualVector::new).collect();
    for a in &vs {
        assert_eq!(convolve(&eps, a, &h), *a);
        assert_eq!(convolve(a, &eps, &h), *a);
        for b in &vs {
            for d in &vs {
                assert_eq!(convolve(&convolve(a, b, &h), d, &h), convolve(a, &convolve(b, d, &h), &h));
            }
        }
    }
}

#[test]
fn convolution_of_group_algebra_duals_is_pointwise() {
    // on kG, Δ(g) = g ⊗ g, so (φψ)(g) = φ(g)ψ(g)
    let h = cyclic_group_algebra(3);
    let phi = DualVector::new(vec![c(2), c(3), c(5)]);
    let psi = DualVector::new(vec![c(7), c(-1), c(4)]);
    assert_eq!(convolve(&phi, &psi, &h).coords, vec![c(14), c(-3), c(20)]);
}

#[test]
fn hit_actions_are_module_actions() {
    let h = cyclic_group_algebra(3);
    let vs = sample_vectors(3);
    let phi = DualVector::new(vec![c(1), c(-2), c(5)]);
    for x in &vs {
        for y in &vs {
            let xy = h.multiply(x, y);
            assert_eq!(
                hit_act_alg_on_dual(&xy, &phi, &h),
                hit_act_alg_on_dual(x, &hit_act_alg_on_dual(y, &phi, &h), &h)
            );
        }
    }
    let psis: Vec<DualVector> = vs.iter().cloned().map(DualVector::new).collect();
    let x = vec![c(3), c(0), c(-1)];
    for a in &psis {
        for b in &psis {
            let ab = convolve(a, b, &h);
            assert_eq!(hit_act_dual_on_alg(&ab, &x, &h), hit_act_dual_on_alg(a, &hit_act_dual_on_alg(b, &x, &h), &h));
        }
    }
}

#[test]
fn hit_action_adjunction() {
    // ⟨h ⇀ φ, h'⟩ = ⟨φ, h' h⟩ and ⟨ψ, φ ⇀ h⟩ = ⟨ψφ, h⟩
    let h = cyclic_group_algebra(4);
    let vs = sample_vectors(4);
    let phi = DualVector::new(vec![c(1), c(2), c(-3), c(4)]);
    for x in &vs {
        for y in &vs {
            assert_eq!(pair(&hit_act_alg_on_dual(x, &phi, &h), y), pair(&phi, &h.multiply(y, x)));
            let psi = DualVector::new(y.clone());
            assert_eq!(pair(&psi, &hit_act_dual_on_alg(&phi, x, &h)), pair(&convolve(&psi, &phi, &h), x));
        }
    }
}

#[test]
fn dual_on_alg_matches_alg_on_dual_of_dual() {
    let h = cyclic_group_algebra(3);
    let hd = dualize(&h);
    let phi = DualVector::new(vec![c(1), c(-1), c(2)]);
    for x in sample_vectors(3) {
        let direct = hit_act_dual_on_alg(&phi, &x, &h);
        let via_dual = hit_act_alg_on_dual(&phi.coords, &DualVector::new(x.clone()), &hd);
        assert_eq!(direct, via_dual.coords);
    }
}

#[test]
fn antipode_and_dual_antipode() {
    let h = cyclic_group_algebra(3);
    assert_eq!(h.apply_antipode(&unit_vector(3, 1)), unit_vector(3, 2));
    let phi = DualVector::new(vec![c(5), c(6), c(7)]);
    for x in sample_vectors(3) {
        assert_eq!(pair(&h.dual_antipode(&phi), &x), pair(&phi, &h.apply_antipode(&x)));
    }
}

#[test]
fn broken_coassociativity_is_reported() {
    let h = cyclic_group_algebra(2);
    let mut t = h.tensors();
    // Δ(b1) = b0 ⊗ b1 is not coassociative together with the rest
    t.comult[(2 + 1) * 2 + 1] = c(0);
    t.comult[2 + 1] = c(1);
    let broken = HopfData::new("broken", 2, h.field().clone(), t).unwrap();
    let report = check_axioms(&broken);
    assert!(!report.all_pass());
    let failing: Vec<_> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    assert!(failing.contains(&"counit"), "{failing:?}");
    assert!(report.checks.iter().filter(|c| !c.passed).all(|c| c.witness.is_some()));
}

#[test]
fn non_coassociative_comultiplication() {
    // Δ(b1) = b1 ⊗ b1 + b0 ⊗ b0 breaks coassociativity on kC2's basis
    let h = cyclic_group_algebra(2);
    let mut t = h.tensors();
    t.comult[1] = c(1);
    let broken = HopfData::new("broken", 2, h.field().clone(), t).unwrap();
    let report = check_axioms(&broken);
    assert!(!report.get("coassociativity").unwrap().passed);
    assert!(report.get("associativity").unwrap().passed);
}

#[test]
fn shape_errors() {
    let mut t = HopfTensors::zeros(2);
    t.unit.pop();
    assert!(matches!(HopfData::new("x", 2, CyclotomicField::rationals(), t), Err(Error::DimensionMismatch(_))));
}

#[test]
fn format_roundtrip() {
    for n in [2, 3, 4] {
        let h = cyclic_group_algebra(n);
        let text = write_hopf(&h);
        let back = parse_hopf(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(back.name(), h.name());
        assert_eq!(back.field().order(), h.field().order());
        let hd = dualize(&h);
        assert_eq!(parse_hopf(&write_hopf(&hd)).unwrap(), hd);
    }
}

#[test]
fn format_accepts_comments_and_cyclotomic_scalars() {
    let text = "# twisted sample\nhopf t\ndim 1\ncyclotomic 3\nMULT\n0 0 0 1 # b0 b0\nUNIT\n0 1\nCOMULT\n0 0 0 1\nCOUNIT\n0 1\nANTIPODE\n0 0 z + z^2 + 2\n";
    let h = parse_hopf(text).unwrap();
    assert_eq!(h.antipode_coeff(0, 0), &c(1));
    assert!(check_axioms(&h).all_pass());
}

#[test]
fn format_errors_carry_positions() {
    let bad_index = "hopf x\ndim 2\nMULT\n0 0 5 1\n";
    match parse_hopf(bad_index) {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 5)),
        other => panic!("unexpected {other:?}"),
    }
    let bad_scalar = "hopf x\ndim 2\nUNIT\n0 1/0\n";
    assert!(matches!(parse_hopf(bad_scalar), Err(Error::Parse { line: 4, .. })));
    let no_dim = "hopf x\nMULT\n";
    assert!(matches!(parse_hopf(no_dim), Err(Error::Parse { line: 2, .. })));
    let unknown = "hopf x\ndim 1\nbogus 3\n";
    assert!(matches!(parse_hopf(unknown), Err(Error::Parse { line: 3, column: 1, .. })));
    let z_in_rational = "hopf x\ndim 1\nUNIT\n0 z\n";
    assert!(matches!(parse_hopf(z_in_rational), Err(Error::Parse { line: 4, .. })));
}
