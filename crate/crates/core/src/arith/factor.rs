//! Factorization of univariate polynomials over `Q`.
//!
//! Pipeline: squarefree decomposition over `Q`, factorization modulo a word
//! prime above `2^30`, linear Hensel lifting past a coefficient bound, then
//! recombination of lifted modular factors. Candidate factors are recovered
//! from their residues by rational reconstruction and confirmed by exact
//! division, so a wrong combination can never be accepted.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{next_prime, PolyP, PrimeField};
use super::{Poly, Rational};
use crate::error::{Error, Result};

/// `unit * prod factor^multiplicity`, factors monic and irreducible over `Q`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Poly<Rational>, usize)>,
}

impl Factorization {
    /// Multiplies everything back together.
    pub fn expand(&self) -> Poly<Rational> {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

const PRIME_FLOOR: u64 = 1 << 30;

/// Factors a nonzero polynomial into monic irreducibles over `Q`.
pub fn factor_rational(p: &Poly<Rational>) -> Result<Factorization> {
    let Some(lc) = p.leading().cloned() else {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    };
    let mut factors = Vec::new();
    if p.degree() == Some(0) {
        return Ok(Factorization { unit: lc, factors });
    }
    for (part, mult) in squarefree_decomposition(&p.monic()) {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())).then(ma.cmp(mb))
    });
    Ok(Factorization { unit: lc, factors })
}

/// Yun's algorithm on a monic polynomial: `(part, multiplicity)` pairs with
/// squarefree, pairwise coprime, monic parts.
pub fn squarefree_decomposition(f: &Poly<Rational>) -> Vec<(Poly<Rational>, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = Poly::gcd(f, &df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = Poly::gcd(&b, &d);
        let nb = b.exact_div(&a).expect("gcd divides");
        let nc = d.exact_div(&a).expect("gcd divides");
        d = &nc - &nb.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    out
}

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
pub fn primitive_integer_part(f: &Poly<Rational>) -> Vec<BigInt> {
    let denom_lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * &denom_lcm).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

fn reduce_mod(f: &[BigInt], fp: &PrimeField) -> PolyP {
    let p = BigInt::from(fp.modulus());
    fp.trim(f.iter().map(|c| c.mod_floor(&p).to_u64().expect("residue fits")).collect())
}

/// Factors a monic squarefree rational polynomial.
fn factor_squarefree(a: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let n = a.degree().expect("nonzero");
    if n <= 1 {
        return vec![a.clone()];
    }
    let f = primitive_integer_part(a);
    let lc = f.last().expect("nonzero").clone();

    // first prime above 2^30 keeping f squarefree and of full degree
    let mut prime = PRIME_FLOOR;
    let (fp, fbar) = loop {
        prime = next_prime(prime);
        if (&lc % BigInt::from(prime)).is_zero() {
            continue;
        }
        let fp = PrimeField::new(prime);
        let fbar = reduce_mod(&f, &fp);
        let g = fp.poly_gcd(&fbar, &fp.poly_derivative(&fbar));
        if g.len() == 1 {
            break (fp, fbar);
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(prime);
    let modular = fp.factor_squarefree(&fp.poly_monic(&fbar), &mut rng);
    if modular.len() == 1 {
        return vec![a.clone()];
    }

    // monic factor coefficients are n/d with |n| <= B and d <= |lc|
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm_sq.sqrt() + 1u32);
    let height = bound.clone().max(lc.abs());
    let needed = BigInt::from(2u32) * &height * &height;
    let p_big = BigInt::from(prime);
    let mut exponent = 1u32;
    let mut modulus = p_big.clone();
    while modulus <= needed {
        modulus *= &p_big;
        exponent += 1;
    }

    let lc_inv = BigInt::from(fp.inv((&lc % &p_big).to_u64().unwrap()));
    let target = monic_mod(&f, &lc, &lc_inv, &p_big, exponent);
    let lifted = hensel_lift(&target, &modular, &fp, exponent);
    recombine(a, lifted, &modulus)
}

/// `f / lc(f)` modulo `p^k`, computed through a lifted inverse of `lc`.
fn monic_mod(f: &[BigInt], lc: &BigInt, inv_mod_p: &BigInt, p: &BigInt, k: u32) -> Vec<BigInt> {
    let m = p.pow(k);
    // Newton iteration for lc^{-1} mod p^k
    let mut inv = inv_mod_p.clone();
    let mut prec = p.clone();
    while prec < m {
        prec = (&prec * &prec).min(m.clone());
        inv = (&inv * (BigInt::from(2u32) - lc * &inv)).mod_floor(&prec);
    }
    f.iter().map(|c| (c * &inv).mod_floor(&m)).collect()
}

fn to_big(f: &[u64]) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

fn big_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter_mut().for_each(|c| *c = c.mod_floor(m));
    out
}

/// Lifts `target ≡ prod factors (mod p)` (all monic) to `mod p^k`.
fn hensel_lift(target: &[BigInt], factors: &[PolyP], fp: &PrimeField, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![target.to_vec()];
    }
    let mid = factors.len() / 2;
    let a0 = factors[..mid].iter().fold(vec![1u64], |acc, g| fp.poly_mul(&acc, g));
    let b0 = factors[mid..].iter().fold(vec![1u64], |acc, g| fp.poly_mul(&acc, g));
    let (a, b) = lift_pair(target, &a0, &b0, fp, k);
    let mut out = hensel_lift(&a, &factors[..mid], fp, k);
    out.extend(hensel_lift(&b, &factors[mid..], fp, k));
    out
}

/// Linear two-factor Hensel lifting of `target ≡ a0*b0 (mod p)`.
fn lift_pair(target: &[BigInt], a0: &PolyP, b0: &PolyP, fp: &PrimeField, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = BigInt::from(fp.modulus());
    let (g, s, t) = fp.poly_ext_gcd(a0, b0);
    debug_assert_eq!(g, vec![1], "modular factors are coprime");
    let _ = s;
    let mut a = to_big(a0);
    let mut b = to_big(b0);
    let mut pj = p.clone();
    for _ in 1..k {
        let next = &pj * &p;
        let prod = big_mul(&a, &b, &next);
        let len = target.len().max(prod.len());
        let err: Vec<BigInt> = (0..len)
            .map(|i| {
                let d = target.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default();
                d.mod_floor(&next)
            })
            .collect();
        let e: PolyP = fp.trim(
            err.iter()
                .map(|c| {
                    debug_assert!((c % &pj).is_zero(), "lifting invariant");
                    (c / &pj).mod_floor(&p).to_u64().unwrap()
                })
                .collect(),
        );
        if !e.is_empty() {
            let alpha = fp.poly_rem(&fp.poly_mul(&t, &e), a0);
            let (beta, rem) = fp.poly_divrem(&fp.poly_sub(&e, &fp.poly_mul(&alpha, b0)), a0);
            debug_assert!(rem.is_empty(), "correction divides exactly");
            add_scaled(&mut a, &alpha, &pj);
            add_scaled(&mut b, &beta, &pj);
        }
        pj = next;
    }
    (a, b)
}

fn add_scaled(target: &mut Vec<BigInt>, delta: &PolyP, scale: &BigInt) {
    if target.len() < delta.len() {
        target.resize(delta.len(), BigInt::zero());
    }
    for (t, &d) in target.iter_mut().zip(delta) {
        *t += scale * BigInt::from(d);
    }
}

/// Tries subsets of lifted factors, smallest first, removing each true factor
/// as it is found.
fn recombine(a: &Poly<Rational>, mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Poly<Rational>> {
    let mut found = Vec::new();
    let mut rest = a.clone();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let product = combo.iter().fold(vec![BigInt::one()], |acc, &i| big_mul(&acc, &lifted[i], modulus));
            if let Some(candidate) = reconstruct_poly(&product, modulus) {
                if let Some(quotient) = rest.exact_div(&candidate) {
                    found.push(candidate);
                    rest = quotient;
                    for &i in combo.iter().rev() {
                        lifted.remove(i);
                    }
                    continue 'outer;
                }
            }
            if !next_combination(&mut combo, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        found.push(rest);
    }
    found
}

fn reconstruct_poly(residues: &[BigInt], modulus: &BigInt) -> Option<Poly<Rational>> {
    let coeffs = residues.iter().map(|r| rational_reconstruction(r, modulus)).collect::<Option<Vec<_>>>()?;
    Some(Poly::new(coeffs))
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Recovers `n/d` from `n ≡ residue * d (mod modulus)` with
/// `|n|, d <= sqrt(modulus / 2)`; `None` when no such pair exists.
pub fn rational_reconstruction(residue: &BigInt, modulus: &BigInt) -> Option<Rational> {
    assert!(modulus > &BigInt::one(), "modulus must exceed 1");
    let bound = (modulus / BigInt::from(2u32)).sqrt();
    rational_reconstruction_bounded(residue, modulus, &bound, &bound)
}

/// Rational reconstruction with separate numerator and denominator bounds.
/// The answer is unique when `2 * num_bound * den_bound < modulus`.
pub fn rational_reconstruction_bounded(
    residue: &BigInt,
    modulus: &BigInt,
    num_bound: &BigInt,
    den_bound: &BigInt,
) -> Option<Rational> {
    let (mut r0, mut r1) = (modulus.clone(), residue.mod_floor(modulus));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > num_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > den_bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    let (num, den) = if t1.sign() == Sign::Minus { (-r1, -t1) } else { (r1, t1) };
    Some(Rational::new(num, den))
}

/// Magnitude of the largest coefficient, used in diagnostics.
pub fn height(f: &[BigInt]) -> BigUint {
    f.iter().map(|c| c.magnitude().clone()).max().unwrap_or_default()
}
