use num_integer::Integer;

use super::GroupTable;
use crate::arith::{CycScalar, CyclotomicField, Field};
use crate::hopf::{HopfData, HopfTensors};

fn one() -> CycScalar {
    CycScalar::from_int(1)
}

fn field_for(g: &GroupTable) -> std::sync::Arc<CyclotomicField> {
    CyclotomicField::new(g.exponent()).expect("exponent is positive")
}

/// `kG`: group elements as basis, `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupTable) -> HopfData {
    let n = g.order();
    let mut t = HopfTensors::zeros(n);
    for a in 0..n {
        for b in 0..n {
            t.mult[(a * n + b) * n + g.mul(a, b)] = one();
        }
        t.comult[(a * n + a) * n + a] = one();
        t.counit[a] = one();
        t.antipode[g.inverse(a) * n + a] = one();
    }
    t.unit[g.identity()] = one();
    HopfData::new(format!("k{}", g.name()), n, field_for(g), t).expect("shapes match")
}

/// `k^G`, functions on `G` in the basis of point masses `δ_g`.
pub fn function_algebra(g: &GroupTable) -> HopfData {
    let n = g.order();
    let mut t = HopfTensors::zeros(n);
    for a in 0..n {
        t.mult[(a * n + a) * n + a] = one();
        t.unit[a] = one();
        for b in 0..n {
            t.comult[(a * n + b) * n + g.mul(a, b)] = one();
        }
        t.antipode[g.inverse(a) * n + a] = one();
    }
    t.counit[g.identity()] = one();
    HopfData::new(format!("k{}*", g.name()), n, field_for(g), t).expect("shapes match")
}

/// The Drinfeld double `D(G)` on the basis `δ_g ⊗ h`, stored at index
/// `g * |G| + h`.
pub fn drinfeld_double(g: &GroupTable) -> HopfData {
    let n = g.order();
    let d = n * n;
    let idx = |x: usize, h: usize| x * n + h;
    let mut t = HopfTensors::zeros(d);
    for x in 0..n {
        for h in 0..n {
            let i = idx(x, h);
            // (δ_x ⊗ h)(δ_y ⊗ k) = [x = h y h⁻¹] δ_x ⊗ hk
            for k in 0..n {
                let y = g.conjugate(x, g.inverse(h));
                t.mult[(i * d + idx(y, k)) * d + idx(x, g.mul(h, k))] = one();
            }
            for a in 0..n {
                let b = g.mul(g.inverse(a), x);
                t.comult[(idx(a, h) * d + idx(b, h)) * d + i] = one();
            }
            if x == g.identity() {
                t.counit[i] = one();
            }
            let hi = g.inverse(h);
            let s = idx(g.conjugate(g.inverse(x), hi), hi);
            t.antipode[s * d + i] = one();
        }
        t.unit[idx(x, g.identity())] = one();
    }
    HopfData::new(format!("D({})", g.name()), d, field_for(g), t).expect("shapes match")
}

/// `H1 ⊗ H2` with basis `b_i ⊗ b'_j` at index `i * dim(H2) + j`, over the
/// compositum of the two coefficient fields.
pub fn tensor_product(h1: &HopfData, h2: &HopfData) -> HopfData {
    let (d1, d2) = (h1.dim(), h2.dim());
    let d = d1 * d2;
    let order = h1.field().order().lcm(&h2.field().order());
    let field = CyclotomicField::new(order).expect("positive order");
    let mut t = HopfTensors::zeros(d);
    let ix = |i1: usize, i2: usize| i1 * d2 + i2;
    for i1 in 0..d1 {
        for i2 in 0..d2 {
            let i = ix(i1, i2);
            t.unit[i] = h1.unit()[i1].times(&h2.unit()[i2]);
            t.counit[i] = h1.counit()[i1].times(&h2.counit()[i2]);
            for j1 in 0..d1 {
                for j2 in 0..d2 {
                    let j = ix(j1, j2);
                    t.antipode[i * d + j] = h1.antipode_coeff(i1, j1).times(h2.antipode_coeff(i2, j2));
                    for (k1, c1) in h1.mult_terms(i1, j1) {
                        for (k2, c2) in h2.mult_terms(i2, j2) {
                            t.mult[(i * d + j) * d + ix(*k1, *k2)] = c1.times(c2);
                        }
                    }
                }
            }
            // Δ(b_k1 ⊗ b'_k2) = Σ (b_a ⊗ b'_c) ⊗ (b_b ⊗ b'_e)
            for (a, b, c1) in h1.comult_terms(i1) {
                for (c, e, c2) in h2.comult_terms(i2) {
                    t.comult[(ix(*a, *c) * d + ix(*b, *e)) * d + i] = c1.times(c2);
                }
            }
        }
    }
    let name = format!("{} ⊗ {}", h1.name(), h2.name());
    HopfData::new(name, d, field, t).expect("shapes match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::builtin_group;
    use crate::hopf::{check_axioms, dualize, parse_hopf, write_hopf};

    fn zero_one_only(h: &HopfData) -> bool {
        let t = h.tensors();
        [t.mult, t.unit, t.comult, t.counit, t.antipode].iter().flatten().all(|c| c.is_zero() || c.is_one())
    }

    #[test]
    fn group_algebras_pass_axioms() {
        for name in crate::builders::BUILTIN_GROUPS {
            let g = builtin_group(name).unwrap();
            let h = group_algebra(&g);
            assert!(check_axioms(&h).all_pass(), "{name}");
            assert!(zero_one_only(&h));
            assert_eq!(h.field().order(), g.exponent());
        }
    }

    #[test]
    fn function_algebra_is_dual_of_group_algebra() {
        for name in crate::builders::BUILTIN_GROUPS {
            let g = builtin_group(name).unwrap();
            let f = function_algebra(&g);
            assert!(check_axioms(&f).all_pass(), "{name}");
            assert_eq!(f, dualize(&group_algebra(&g)));
            assert_eq!(f.name(), dualize(&group_algebra(&g)).name());
        }
    }

    #[test]
    fn doubles_pass_axioms() {
        for name in ["C2", "C3", "S3"] {
            let g = builtin_group(name).unwrap();
            let h = drinfeld_double(&g);
            assert_eq!(h.dim(), g.order() * g.order());
            assert!(zero_one_only(&h));
            let report = check_axioms(&h);
            assert!(report.all_pass(), "{name}: {report:?}");
        }
    }

    #[test]
    fn double_of_c2_is_commutative_and_cocommutative() {
        let h = drinfeld_double(&builtin_group("C2").unwrap());
        let d = h.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    assert_eq!(h.mult_coeff(i, j, k), h.mult_coeff(j, i, k));
                    assert_eq!(h.comult_coeff(i, j, k), h.comult_coeff(j, i, k));
                }
            }
        }
    }

    #[test]
    fn tensor_products() {
        let c2 = group_algebra(&builtin_group("C2").unwrap());
        let k4 = group_algebra(&builtin_group("C2xC2").unwrap());
        let t = tensor_product(&c2, &c2);
        assert!(check_axioms(&t).all_pass());
        // index 2a + b with a, b in C2 matches the XOR table of C2xC2
        assert_eq!(t.tensors().mult, k4.tensors().mult);
        let s3 = builtin_group("S3").unwrap();
        let mixed = tensor_product(&group_algebra(&s3), &function_algebra(&builtin_group("C2").unwrap()));
        assert_eq!(mixed.dim(), 12);
        assert!(check_axioms(&mixed).all_pass());
        assert_eq!(dualize(&tensor_product(&c2, &k4)), tensor_product(&dualize(&c2), &dualize(&k4)));
    }

    #[test]
    fn tensor_over_compositum() {
        let c3 = group_algebra(&builtin_group("C3").unwrap());
        let c4 = group_algebra(&builtin_group("C4").unwrap());
        let t = tensor_product(&c3, &c4);
        assert_eq!(t.field().order(), 12);
        assert!(check_axioms(&t).all_pass());
    }

    #[test]
    fn built_algebras_roundtrip_through_text() {
        let s3 = builtin_group("S3").unwrap();
        for h in [group_algebra(&s3), function_algebra(&s3), drinfeld_double(&builtin_group("C3").unwrap())] {
            let back = parse_hopf(&write_hopf(&h)).unwrap();
            assert_eq!(back, h);
            assert_eq!(back.name(), h.name());
        }
    }
}
