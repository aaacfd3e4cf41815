//! Minimal polynomials of cyclotomic scalars and algebraic-integer
//! certificates.

use serde::Serialize;

use super::{CycScalar, Field, Poly, Rational};
use crate::linalg::IncrementalSpan;

/// Witness that a scalar is (or is not) an algebraic integer: its monic
/// minimal polynomial over `Q`, and whether that polynomial has integer
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityCertificate {
    pub subject: CycScalar,
    pub minimal_polynomial: Poly<Rational>,
    pub is_integer: bool,
}

impl IntegralityCertificate {
    /// Re-checks the certificate: the polynomial is monic, vanishes at the
    /// subject, and `is_integer` matches its coefficients.
    pub fn replay(&self) -> bool {
        let lifted = self.minimal_polynomial.map(|c| CycScalar::rational(c.clone()));
        self.minimal_polynomial.is_monic()
            && lifted.eval(&self.subject).is_zero()
            && self.is_integer == self.minimal_polynomial.coeffs().iter().all(|c| c.is_integer())
    }

    pub fn summary(&self) -> CertificateSummary {
        CertificateSummary {
            value: self.subject.to_string(),
            minimal_polynomial: self.minimal_polynomial.to_string(),
            algebraic_integer: self.is_integer,
        }
    }
}

/// Serializable view of a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateSummary {
    pub value: String,
    pub minimal_polynomial: String,
    pub algebraic_integer: bool,
}

/// The monic minimal polynomial of `a` over `Q`, found as the first linear
/// dependency among `1, a, a^2, ...` in the power-basis coordinates.
pub fn min_poly_scalar(a: &CycScalar) -> Poly<Rational> {
    let mut span = IncrementalSpan::new();
    let mut power = CycScalar::rational_in(a.field(), <Rational as Field>::one());
    loop {
        let coords = power.lift_to(a.field()).coords().to_vec();
        if let Err(relation) = span.insert(coords) {
            return Poly::new(relation);
        }
        power = power.times(a);
    }
}

pub fn is_algebraic_integer(a: &CycScalar) -> IntegralityCertificate {
    let minimal_polynomial = min_poly_scalar(a);
    let is_integer = minimal_polynomial.coeffs().iter().all(|c| c.is_integer());
    IntegralityCertificate { subject: a.clone(), minimal_polynomial, is_integer }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, CyclotomicField};

    #[test]
    fn rational_min_polys() {
        let five = CycScalar::from_int(5);
        assert_eq!(min_poly_scalar(&five), Poly::from_ints(&[-5, 1]));
        let c = is_algebraic_integer(&CycScalar::from_int(3));
        assert!(c.is_integer);
        assert_eq!(c.minimal_polynomial, Poly::from_ints(&[-3, 1]));
        let half = is_algebraic_integer(&CycScalar::rational(rat(1, 2)));
        assert!(!half.is_integer);
        assert_eq!(half.minimal_polynomial, Poly::new(vec![rat(-1, 2), int(1)]));
    }

    #[test]
    fn cube_root_of_unity() {
        let k = CyclotomicField::new(3).unwrap();
        let w = CycScalar::zeta_power(&k, 1);
        assert_eq!(min_poly_scalar(&w), Poly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn one_plus_zeta3() {
        // oracle: a = 1 + w, conj = 1 + w^2; a + conj = 2 + (w + w^2) = 1,
        // a * conj = 1 + (w + w^2) + w^3 = 1, so x^2 - x + 1
        let k = CyclotomicField::new(3).unwrap();
        let a = &CycScalar::from_int(1) + &CycScalar::zeta_power(&k, 1);
        let conj = a.conjugate();
        assert_eq!(&a + &conj, CycScalar::from_int(1));
        assert_eq!(&a * &conj, CycScalar::from_int(1));
        assert_eq!(min_poly_scalar(&a), Poly::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn golden_ratio_conjugate() {
        // a = z + z^4 in Q(z_5); a and its conjugate a' = z^2 + z^3 satisfy
        // a + a' = -1 and a a' = z^3 + z^4 + z^6 + z^7 = -1
        let k = CyclotomicField::new(5).unwrap();
        let a = &CycScalar::zeta_power(&k, 1) + &CycScalar::zeta_power(&k, 4);
        let b = &CycScalar::zeta_power(&k, 2) + &CycScalar::zeta_power(&k, 3);
        assert_eq!(&a + &b, CycScalar::from_int(-1));
        assert_eq!(&a * &b, CycScalar::from_int(-1));
        let cert = is_algebraic_integer(&a);
        assert!(cert.is_integer);
        assert_eq!(cert.minimal_polynomial, Poly::from_ints(&[-1, 1, 1]));
        assert!(cert.replay());
    }
}
