//! Elements of cyclotomic fields `Q(z)`, `z` a primitive `N`-th root of unity.
//!
//! An element is stored by its coordinates over the power basis
//! `1, z, ..., z^(phi(N)-1)`, reduced modulo the `N`-th cyclotomic
//! polynomial. This is a canonical form, so equality is coordinate equality
//! once both sides live in the same field.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock, Mutex};

use num_integer::Integer;

use super::{Field, Poly, Rational};
use crate::error::{Error, Result};

/// `Q(z_N)`, together with the tables needed to reduce products.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<Rational>,
    /// `powers[k]` holds the coordinates of `z^k` for `0 <= k < order`.
    powers: Vec<Vec<Rational>>,
}

static RATIONALS: LazyLock<Arc<CyclotomicField>> = LazyLock::new(|| Arc::new(CyclotomicField::build(1)));

static FIELDS: LazyLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = LazyLock::new(Default::default);

impl CyclotomicField {
    /// Constructs `Q(z_N)`; `N = 1` gives the rationals.
    pub fn new(order: u32) -> Result<Arc<CyclotomicField>> {
        if order == 0 {
            return Err(Error::InvalidInput("cyclotomic order must be positive".into()));
        }
        if order == 1 {
            return Ok(RATIONALS.clone());
        }
        let mut cache = FIELDS.lock().unwrap_or_else(|e| e.into_inner());
        Ok(cache.entry(order).or_insert_with(|| Arc::new(CyclotomicField::build(order))).clone())
    }

    /// The field `Q` viewed as `Q(z_1)`.
    pub fn rationals() -> Arc<CyclotomicField> {
        RATIONALS.clone()
    }

    fn build(order: u32) -> CyclotomicField {
        let modulus = cyclotomic_polynomial(order).into_coeffs();
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut current = vec![Rational::zero(); degree];
        current[0] = Rational::one();
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by z and reduce with the monic modulus
            let carry = current[degree - 1].clone();
            for i in (1..degree).rev() {
                current[i] = current[i - 1].clone();
            }
            current[0] = Rational::zero();
            if !carry.is_zero() {
                for (c, m) in current.iter_mut().zip(&modulus) {
                    *c -= &carry * m;
                }
            }
        }
        CyclotomicField { order, modulus, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `phi(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// The defining cyclotomic polynomial, low-to-high.
    pub fn modulus(&self) -> Poly<Rational> {
        Poly::new(self.modulus.clone())
    }
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `Phi_n`, via `x^n - 1 = prod_{d | n} Phi_d` and exact long division.
pub fn cyclotomic_polynomial(n: u32) -> Poly<Rational> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    let mut numerator = Poly::<Rational>::monomial(Rational::one(), n as usize);
    numerator = &numerator - &Poly::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            numerator = numerator.exact_div(&cyclotomic_polynomial(d)).expect("Phi_d divides x^n - 1");
        }
    }
    numerator
}

/// An exact element of a cyclotomic field.
#[derive(Clone)]
pub struct CycScalar {
    field: Arc<CyclotomicField>,
    coords: Vec<Rational>,
}

impl CycScalar {
    pub fn from_coords(field: &Arc<CyclotomicField>, coords: Vec<Rational>) -> CycScalar {
        assert_eq!(coords.len(), field.degree(), "coordinate count must equal phi(N)");
        CycScalar { field: field.clone(), coords }
    }

    pub fn rational(q: Rational) -> CycScalar {
        CycScalar { field: CyclotomicField::rationals(), coords: vec![q] }
    }

    /// A rational embedded in the given field.
    pub fn rational_in(field: &Arc<CyclotomicField>, q: Rational) -> CycScalar {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = q;
        CycScalar { field: field.clone(), coords }
    }

    pub fn from_int(n: i64) -> CycScalar {
        CycScalar::rational(super::int(n))
    }

    pub fn zero_in(field: &Arc<CyclotomicField>) -> CycScalar {
        CycScalar::rational_in(field, Rational::zero())
    }

    /// `z^k` for the field's primitive root `z`.
    pub fn zeta_power(field: &Arc<CyclotomicField>, k: i64) -> CycScalar {
        let idx = k.rem_euclid(field.order as i64) as usize;
        CycScalar { field: field.clone(), coords: field.powers[idx].clone() }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Field::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    /// Re-expresses `self` in `Q(z_M)`; requires `N | M`.
    pub fn lift_to(&self, target: &Arc<CyclotomicField>) -> CycScalar {
        if Arc::ptr_eq(&self.field, target) || self.field.order == target.order {
            return CycScalar { field: target.clone(), coords: self.coords.clone() };
        }
        if self.is_rational() {
            return CycScalar::rational_in(target, self.coords[0].clone());
        }
        assert!(
            target.order.is_multiple_of(self.field.order),
            "cannot lift from order {} to order {}",
            self.field.order,
            target.order
        );
        let step = (target.order / self.field.order) as usize;
        let mut coords = vec![Rational::zero(); target.degree()];
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = &target.powers[(i * step) % target.order as usize];
            for (acc, p) in coords.iter_mut().zip(power) {
                if !p.is_zero() {
                    *acc += c * p;
                }
            }
        }
        CycScalar { field: target.clone(), coords }
    }

    /// Brings two scalars into a common field.
    fn aligned(&self, other: &CycScalar) -> (CycScalar, CycScalar) {
        if self.field.order == other.field.order {
            return (self.clone(), other.clone());
        }
        if self.field.degree() == 1 || (self.is_rational() && other.field.order > self.field.order) {
            return (self.lift_to(&other.field), other.clone());
        }
        if other.field.degree() == 1 || (other.is_rational() && self.field.order > other.field.order) {
            return (self.clone(), other.lift_to(&self.field));
        }
        let lcm = self.field.order.lcm(&other.field.order);
        let field = CyclotomicField::new(lcm).expect("positive order");
        (self.lift_to(&field), other.lift_to(&field))
    }

    fn zip_with(&self, other: &CycScalar, op: impl Fn(&Rational, &Rational) -> Rational) -> CycScalar {
        if self.field.order == other.field.order {
            let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| op(a, b)).collect();
            return CycScalar { field: self.field.clone(), coords };
        }
        let (a, b) = self.aligned(other);
        a.zip_with(&b, op)
    }

    fn scaled(&self, q: &Rational) -> CycScalar {
        CycScalar { field: self.field.clone(), coords: self.coords.iter().map(|c| c * q).collect() }
    }

    fn product(&self, other: &CycScalar) -> CycScalar {
        if self.field.order != other.field.order {
            let (a, b) = self.aligned(other);
            return a.product(&b);
        }
        if self.is_rational() {
            return other.scaled(&self.coords[0]);
        }
        if other.is_rational() {
            return self.scaled(&other.coords[0]);
        }
        let field = &self.field;
        let n = field.degree();
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut coords: Vec<Rational> = raw[..n].to_vec();
        for (k, c) in raw.iter().enumerate().skip(n) {
            if c.is_zero() {
                continue;
            }
            let power = &field.powers[k % field.order as usize];
            for (acc, p) in coords.iter_mut().zip(power) {
                if !p.is_zero() {
                    *acc += c * p;
                }
            }
        }
        CycScalar { field: field.clone(), coords }
    }

    fn invert(&self) -> Option<CycScalar> {
        if self.is_rational() {
            let q = &self.coords[0];
            if q.is_zero() {
                return None;
            }
            return Some(CycScalar::rational_in(&self.field, q.recip()));
        }
        let element = Poly::new(self.coords.clone());
        let (g, s, _) = Poly::ext_gcd(&element, &self.field.modulus());
        debug_assert!(g.is_one_poly(), "cyclotomic modulus is irreducible");
        let s = s.rem(&self.field.modulus());
        let mut coords = s.into_coeffs();
        coords.resize(self.field.degree(), Rational::zero());
        Some(CycScalar { field: self.field.clone(), coords })
    }

    /// Total order used only for canonical sorting: by order, then coordinates.
    pub fn canonical_cmp(&self, other: &CycScalar) -> Ordering {
        let (a, b) = self.aligned(other);
        a.coords.cmp(&b.coords)
    }

    /// Complex conjugate, `z -> z^-1`.
    pub fn conjugate(&self) -> CycScalar {
        let mut acc = CycScalar::zero_in(&self.field);
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                let term = CycScalar::zeta_power(&self.field, -(i as i64)).scaled(c);
                acc = acc.plus(&term);
            }
        }
        acc
    }

    /// Parses the scalar literal grammar, e.g. `3/2*z^2 - 1`.
    pub fn parse(text: &str, field: &Arc<CyclotomicField>) -> Result<CycScalar> {
        super::literal::parse_scalar(text, field)
    }
}

impl Poly<Rational> {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeffs()[0].is_one()
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &CycScalar) -> bool {
        if self.field.order == other.field.order {
            return self.coords == other.coords;
        }
        let (a, b) = self.aligned(other);
        a.coords == b.coords
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar[{}]({})", self.field.order, self)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::literal::format_coords(&self.coords))
    }
}

impl Field for CycScalar {
    fn zero() -> Self {
        CycScalar::rational(Rational::zero())
    }
    fn one() -> Self {
        CycScalar::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Field::is_zero)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a + b)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a - b)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
    fn negated(&self) -> Self {
        CycScalar { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
    fn inverse(&self) -> Option<Self> {
        self.invert()
    }
    fn from_rational(q: &Rational) -> Self {
        CycScalar::rational(q.clone())
    }
    fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.is_rational()
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.times(b);
        if self.field.order == p.field.order {
            for (x, y) in self.coords.iter_mut().zip(&p.coords) {
                if !y.is_zero() {
                    *x += y;
                }
            }
        } else {
            *self = self.plus(&p);
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $impl_fn:ident) => {
        impl $tr<&CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                Field::$impl_fn(self, rhs)
            }
        }
        impl $tr for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                Field::$impl_fn(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);
forward_binop!(Div, div, divided_by);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        self.negated()
    }
}

impl From<Rational> for CycScalar {
    fn from(q: Rational) -> Self {
        CycScalar::rational(q)
    }
}

impl From<i64> for CycScalar {
    fn from(n: i64) -> Self {
        CycScalar::from_int(n)
    }
}
