//! Factorization of rational polynomials over a cyclotomic field by Trager's
//! norm method.
//!
//! For an irreducible `q` over `Q` and a shift `s`, the norm of
//! `q(x - s*z)` from `Q(z)[x]` down to `Q[x]` is the characteristic
//! polynomial of `t + s*z` acting on `Q[t]/q (x) Q(z)`. When that norm is
//! squarefree, its rational factors `R_j` give the factors of `q` over
//! `Q(z)` as `gcd(q(x), R_j(x + s*z))`.

use std::sync::Arc;

use super::{factor_rational, CycScalar, CyclotomicField, Field, Poly, Rational};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, Matrix};

const MAX_SHIFT: i64 = 64;

/// Monic irreducible factors of a squarefree rational `p` over `Q(z_N)`.
pub fn factor_over_cyclotomic(p: &Poly<Rational>, field: &Arc<CyclotomicField>) -> Result<Vec<Poly<CycScalar>>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::InvalidInput(format!("factor_over_cyclotomic needs a squarefree input, got {p}")));
    }
    let mut out = Vec::new();
    for (q, _) in factor_rational(p)?.factors {
        out.extend(split_irreducible(&q, field)?);
    }
    out.sort_by(compare_polys);
    Ok(out)
}

fn embed(q: &Poly<Rational>, field: &Arc<CyclotomicField>) -> Poly<CycScalar> {
    q.map(|c| CycScalar::rational_in(field, c.clone()))
}

fn split_irreducible(q: &Poly<Rational>, field: &Arc<CyclotomicField>) -> Result<Vec<Poly<CycScalar>>> {
    let n = q.degree().expect("nonzero");
    if n <= 1 || field.degree() == 1 {
        return Ok(vec![embed(q, field)]);
    }
    let companion_q = companion(q);
    let companion_z = companion(&field.modulus());
    let m = field.degree();
    for shift in 1..=MAX_SHIFT {
        let s = Rational::from_integer(shift.into());
        // t (x) 1 + s * (1 (x) z) on the basis t^a z^b, index a*m + b
        let action = Matrix::from_fn(n * m, n * m, |row, col| {
            let (ra, rb) = (row / m, row % m);
            let (ca, cb) = (col / m, col % m);
            let mut v = <Rational as Field>::zero();
            if rb == cb {
                v = v.plus(companion_q.get(ra, ca));
            }
            if ra == ca {
                v = v.plus(&companion_z.get(rb, cb).times(&s));
            }
            v
        });
        let norm = char_poly(&action);
        if !norm.is_squarefree() {
            continue;
        }
        let zeta = CycScalar::zeta_power(field, 1);
        let shift_back = Poly::new(vec![zeta.times(&CycScalar::rational(s.clone())), CycScalar::from_int(1)]);
        let q_embedded = embed(q, field);
        let mut factors = Vec::new();
        for (r, _) in factor_rational(&norm)?.factors {
            let shifted = embed(&r, field).compose(&shift_back);
            let g = Poly::gcd(&q_embedded, &shifted);
            if g.degree().unwrap_or(0) > 0 {
                factors.push(g);
            }
        }
        let product = factors.iter().fold(Poly::one(), |acc, f| &acc * f);
        debug_assert_eq!(product, q_embedded.monic(), "factors multiply back to q");
        return Ok(factors);
    }
    Err(Error::Algorithm(format!("no squarefree norm found for {q} within {MAX_SHIFT} shifts")))
}

/// Companion matrix of a monic polynomial, acting on `1, t, ..., t^(n-1)`.
fn companion(p: &Poly<Rational>) -> Matrix<Rational> {
    let p = p.monic();
    let n = p.degree().expect("nonconstant");
    Matrix::from_fn(n, n, |i, j| {
        if j + 1 == n {
            p.coeff(i).negated()
        } else if i == j + 1 {
            <Rational as Field>::one()
        } else {
            <Rational as Field>::zero()
        }
    })
}

/// Deterministic ordering: by degree, then coefficient coordinates.
pub fn compare_polys(a: &Poly<CycScalar>, b: &Poly<CycScalar>) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            let o = x.canonical_cmp(y);
            if o.is_ne() {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}
