//! Exact scalars: rationals, cyclotomic field elements, polynomials over
//! them, prime fields, and the factorization and integrality kernels.

mod cyclotomic;
pub mod factor;
mod field;
mod integrality;
mod literal;
pub mod modp;
mod poly;
mod trager;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycScalar, CyclotomicField};
pub use factor::{factor_rational, rational_reconstruction, rational_reconstruction_bounded, Factorization};
pub use field::{int, is_nonneg_integer, rat, Field};
pub use integrality::{is_algebraic_integer, min_poly_scalar, CertificateSummary, IntegralityCertificate};
pub use literal::parse_rational;
pub use poly::Poly;
pub use trager::{compare_polys, factor_over_cyclotomic};
