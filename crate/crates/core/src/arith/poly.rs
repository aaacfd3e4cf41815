//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Field;

/// A polynomial stored low-to-high with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(F::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x - root`.
    pub fn linear_root(root: &F) -> Self {
        Poly::new(vec![root.negated(), F::one()])
    }

    /// Builds a polynomial from integer coefficients, low-to-high.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn eval(&self, at: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(at).plus(c);
        }
        acc
    }

    /// `self(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &Poly<F>) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.times(&F::from_int(i as i64))).collect())
    }

    /// Euclidean division; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly<F>) -> (Poly<F>, Poly<F>) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].times(&lc_inv);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i - dd + j] = rem[i - dd + j].minus(&q.times(d));
                }
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Poly<F>) -> Option<Poly<F>> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn rem(&self, divisor: &Poly<F>) -> Poly<F> {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(a: &Poly<F>, b: &Poly<F>) -> (Poly<F>, Poly<F>, Poly<F>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.inverse().expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly<F> {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !Poly::gcd(self, &self.derivative()).degree().is_some_and(|d| d > 0)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).plus(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).minus(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_product(a, b);
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| c.negated()).collect())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = text[1..].contains(['+', '-']);
            let monomial = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let mut term = if k == 0 {
                if compound {
                    format!("({text})")
                } else {
                    text
                }
            } else if text == "1" {
                monomial
            } else if text == "-1" {
                format!("-{monomial}")
            } else if compound {
                format!("({text})*{monomial}")
            } else {
                format!("{text}*{monomial}")
            };
            if !first {
                if let Some(rest) = term.strip_prefix('-') {
                    term = format!(" - {rest}");
                } else {
                    term = format!(" + {term}");
                }
            }
            f.write_str(&term)?;
            first = false;
        }
        Ok(())
    }
}
