//! Normalized integrals `Λ ∈ H` and `λ ∈ H*`.

use serde::Serialize;

use crate::arith::{CycScalar, Field};
use crate::error::{Error, Result};
use crate::hopf::{convolve, dualize, pair, unit_vector, DualVector, HopfData};
use crate::linalg::{kernel_basis, Matrix};

/// The integrals of a semisimple, cosemisimple Hopf algebra, normalized by
/// `⟨λ, 1⟩ = 1` and `⟨λ, Λ⟩ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralPair {
    /// `λ ∈ H*`.
    pub dual_integral: DualVector,
    /// `Λ ∈ H`.
    pub integral: Vec<CycScalar>,
    /// `Λ' = Λ / dim H`, the idempotent integral.
    pub integral_scaled: Vec<CycScalar>,
    pub semisimple: bool,
    pub cosemisimple: bool,
    /// Whether `Λ h = ε(h) Λ` also holds for every basis element.
    pub two_sided: bool,
}

/// One named identity with its outcome.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntegralCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub pass: bool,
}

/// Basis of the left integrals `{x : b_i x = ε(b_i) x for all i}`.
pub fn left_integrals(h: &HopfData) -> Vec<Vec<CycScalar>> {
    let d = h.dim();
    let mut rows = Vec::with_capacity(d * d);
    for i in 0..d {
        let e = &h.counit()[i];
        let block = h.left_mult_matrix(&unit_vector(d, i));
        for r in 0..d {
            let mut row = block.row(r).to_vec();
            row[r] = row[r].minus(e);
            rows.push(row);
        }
    }
    kernel_basis(&Matrix::from_rows(&rows))
}

fn one_dimensional(mut space: Vec<Vec<CycScalar>>, side: &'static str) -> Result<Vec<CycScalar>> {
    if space.len() != 1 {
        return Err(Error::IntegralSpace { side, found: space.len() });
    }
    Ok(space.pop().expect("length checked"))
}

/// Computes and normalizes both integrals.
pub fn compute_integrals(h: &HopfData) -> Result<IntegralPair> {
    let d = h.dim();
    let raw_integral = one_dimensional(left_integrals(h), "left integrals of H")?;
    let raw_dual = one_dimensional(left_integrals(&dualize(h)), "left integrals of H*")?;

    let eps_lambda = h.counit_of(&raw_integral);
    let semisimple = !eps_lambda.is_zero();
    let lambda_one = pair(&DualVector::new(raw_dual.clone()), h.unit());
    let cosemisimple = !lambda_one.is_zero();
    if !semisimple {
        return Err(Error::NotSemisimple("ε(Λ) = 0, so H is not semisimple".into()));
    }
    if !cosemisimple {
        return Err(Error::NotSemisimple("λ(1) = 0, so H is not cosemisimple".into()));
    }

    let inv = lambda_one.inverse().expect("nonzero");
    let lambda = DualVector::new(raw_dual.iter().map(|c| c.times(&inv)).collect());
    let pairing = pair(&lambda, &raw_integral);
    let inv = pairing
        .inverse()
        .ok_or_else(|| Error::NotSemisimple("⟨λ, Λ⟩ = 0, so the integrals cannot be normalized".into()))?;
    let integral: Vec<CycScalar> = raw_integral.iter().map(|c| c.times(&inv)).collect();
    let dim = CycScalar::from_int(d as i64);
    let eps = h.counit_of(&integral);
    if eps != dim {
        return Err(Error::Verification(format!("ε(Λ) = {eps} after normalization, expected {d}")));
    }
    let inv_dim = dim.inverse().expect("positive dimension");
    let integral_scaled = integral.iter().map(|c| c.times(&inv_dim)).collect();
    let two_sided = (0..d).all(|i| {
        let right = h.multiply(&integral, &unit_vector(d, i));
        right.iter().zip(&integral).all(|(a, b)| *a == b.times(&h.counit()[i]))
    });
    Ok(IntegralPair { dual_integral: lambda, integral, integral_scaled, semisimple, cosemisimple, two_sided })
}

impl IntegralPair {
    /// Re-checks the normalizations and the integral equations exactly.
    pub fn checks(&self, h: &HopfData) -> Vec<IntegralCheck> {
        let d = h.dim();
        let one = CycScalar::from_int(1);
        let lambda_one = pair(&self.dual_integral, h.unit()) == one;
        let lambda_integral = pair(&self.dual_integral, &self.integral) == one;
        let eps = h.counit_of(&self.integral) == CycScalar::from_int(d as i64);
        let left = (0..d).all(|i| {
            let lhs = h.multiply(&unit_vector(d, i), &self.integral);
            lhs.iter().zip(&self.integral).all(|(a, b)| *a == b.times(&h.counit()[i]))
        });
        let dual_left = (0..d).all(|j| {
            let phi = DualVector::basis(d, j);
            let lhs = convolve(&phi, &self.dual_integral, h);
            let phi_one = pair(&phi, h.unit());
            lhs == self.dual_integral.scale(&phi_one)
        });
        vec![
            IntegralCheck { id: "lambda-unit", statement: "⟨λ, 1⟩ = 1", pass: lambda_one },
            IntegralCheck { id: "lambda-Lambda", statement: "⟨λ, Λ⟩ = 1", pass: lambda_integral },
            IntegralCheck { id: "counit-Lambda", statement: "⟨ε, Λ⟩ = dim H", pass: eps },
            IntegralCheck { id: "left-integral", statement: "hΛ = ε(h)Λ for every basis h", pass: left },
            IntegralCheck {
                id: "dual-left-integral", statement: "φλ = φ(1)λ for every dual basis φ", pass: dual_left
            },
            IntegralCheck { id: "two-sided", statement: "Λh = ε(h)Λ for every basis h", pass: self.two_sided },
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{builtin_group, drinfeld_double, function_algebra, group_algebra};
    use crate::hopf::HopfTensors;

    fn c(n: i64) -> CycScalar {
        CycScalar::from_int(n)
    }

    #[test]
    fn kc2_integrals() {
        let h = group_algebra(&builtin_group("C2").unwrap());
        let ip = compute_integrals(&h).unwrap();
        assert_eq!(ip.integral, vec![c(1), c(1)]);
        assert_eq!(ip.dual_integral.coords, vec![c(1), c(0)]);
        assert!(ip.checks(&h).iter().all(|k| k.pass));
    }

    #[test]
    fn ks3_integral_is_sum_of_elements() {
        // oracle: g Σ x = Σ x for every g
        let g = builtin_group("S3").unwrap();
        let h = group_algebra(&g);
        let ip = compute_integrals(&h).unwrap();
        assert_eq!(ip.integral, vec![c(1); 6]);
        assert_eq!(ip.dual_integral, DualVector::basis(6, g.identity()));
        assert_eq!(h.counit_of(&ip.integral), c(6));
        assert!(ip.two_sided);
    }

    #[test]
    fn function_algebra_integrals() {
        // oracle: δ_g Λ = [g = e] Λ forces Λ ∝ δ_e; the left integral of kG
        // is Σ g, and ⟨Σ g, Σ δ_h⟩ = 6 gives λ = (1/6) Σ g, hence Λ = 6 δ_e
        let g = builtin_group("S3").unwrap();
        let h = function_algebra(&g);
        let ip = compute_integrals(&h).unwrap();
        let sixth = CycScalar::rational(crate::arith::rat(1, 6));
        assert_eq!(ip.dual_integral.coords, vec![sixth; 6]);
        let mut expect = vec![c(0); 6];
        expect[g.identity()] = c(6);
        assert_eq!(ip.integral, expect);
        assert!(ip.checks(&h).iter().all(|k| k.pass));
    }

    #[test]
    fn double_integral_normalization() {
        let h = drinfeld_double(&builtin_group("C3").unwrap());
        let ip = compute_integrals(&h).unwrap();
        assert_eq!(h.counit_of(&ip.integral), c(9));
        assert!(ip.checks(&h).iter().all(|k| k.pass));
    }

    /// Sweedler's four-dimensional algebra: `g² = 1`, `x² = 0`, `xg = -gx`,
    /// `Δ(x) = x ⊗ 1 + g ⊗ x`, on the basis `1, g, x, gx`.
    fn sweedler() -> HopfData {
        let idx = |a: usize, b: usize| a + 2 * b;
        let mut t = HopfTensors::zeros(4);
        for a in 0..2 {
            for b in 0..2 {
                for cc in 0..2 {
                    for d in 0..2 {
                        if b + d >= 2 {
                            continue;
                        }
                        let sign = if b * cc == 1 { -1 } else { 1 };
                        t.mult[(idx(a, b) * 4 + idx(cc, d)) * 4 + idx((a + cc) % 2, b + d)] = c(sign);
                    }
                }
            }
        }
        t.unit[0] = c(1);
        let mut put = |i: usize, j: usize, k: usize| t.comult[(i * 4 + j) * 4 + k] = c(1);
        put(0, 0, 0);
        put(1, 1, 1);
        put(2, 0, 2);
        put(1, 2, 2);
        put(3, 1, 3);
        put(0, 3, 3);
        t.counit[0] = c(1);
        t.counit[1] = c(1);
        t.antipode[0] = c(1);
        t.antipode[4 + 1] = c(1);
        t.antipode[3 * 4 + 2] = c(-1);
        t.antipode[2 * 4 + 3] = c(1);
        HopfData::new("sweedler", 4, crate::arith::CyclotomicField::rationals(), t).unwrap()
    }

    #[test]
    fn non_semisimple_is_named() {
        let h = sweedler();
        assert!(crate::hopf::check_axioms(&h).all_pass());
        match compute_integrals(&h) {
            Err(Error::NotSemisimple(m)) => assert!(m.contains("ε(Λ) = 0"), "{m}"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
