//! Prime fields `F_p` for word-sized `p < 2^32`, and dense polynomials over
//! them. This is the modular half of rational factorization: distinct-degree
//! and equal-degree splitting happen here before lifting.

use num_bigint::BigUint;
use rand::Rng;

/// A dense polynomial over `F_p`, low-to-high, trimmed.
pub type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> PrimeField {
        assert!((2..(1 << 32)).contains(&p), "prime must fit in 32 bits");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut f: PolyP) -> PolyP {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let out = (0..n).map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect();
        self.trim(out)
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let out = (0..n).map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect();
        self.trim(out)
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(out)
    }

    pub fn poly_scale(&self, a: &[u64], c: u64) -> PolyP {
        self.trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn poly_monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.poly_scale(a, self.inv(lc)),
        }
    }

    pub fn poly_divrem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a.to_vec());
        }
        let lc_inv = self.inv(b[db]);
        let mut rem = a.to_vec();
        let mut quot = vec![0u64; a.len() - db];
        for i in (db..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = self.mul(c, lc_inv);
            quot[i - db] = q;
            for (j, &bj) in b.iter().enumerate() {
                rem[i - db + j] = self.sub(rem[i - db + j], self.mul(q, bj));
            }
        }
        rem.truncate(db);
        (self.trim(quot), self.trim(rem))
    }

    pub fn poly_rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.poly_divrem(a, b).1
    }

    pub fn poly_gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        while !y.is_empty() {
            let r = self.poly_rem(&x, &y);
            x = y;
            y = r;
        }
        self.poly_monic(&x)
    }

    /// `(g, s, t)` with `s*a + t*b = g` monic.
    pub fn poly_ext_gcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("nonzero gcd"));
        (self.poly_scale(&r0, inv), self.poly_scale(&s0, inv), self.poly_scale(&t0, inv))
    }

    pub fn poly_derivative(&self, a: &[u64]) -> PolyP {
        let out = a.iter().enumerate().skip(1).map(|(i, &c)| self.mul(c, i as u64 % self.p)).collect();
        self.trim(out)
    }

    /// `base^e mod modulus` for an arbitrary-size exponent.
    pub fn poly_powmod(&self, base: &[u64], e: &BigUint, modulus: &[u64]) -> PolyP {
        let mut acc = vec![1u64];
        let base = self.poly_rem(base, modulus);
        for i in (0..e.bits()).rev() {
            acc = self.poly_rem(&self.poly_mul(&acc, &acc), modulus);
            if e.bit(i) {
                acc = self.poly_rem(&self.poly_mul(&acc, &base), modulus);
            }
        }
        self.poly_rem(&acc, modulus)
    }

    /// Distinct-degree factorization of a monic squarefree `f`: pairs
    /// `(g_d, d)` where `g_d` is the product of all irreducible factors of
    /// degree `d`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x = vec![0u64, 1];
        let p = BigUint::from(self.p);
        let mut h = x.clone();
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((rest, deg));
                return out;
            }
            h = self.poly_powmod(&h, &p, &rest);
            let g = self.poly_gcd(&rest, &self.poly_sub(&h, &x));
            if g.len() > 1 {
                rest = self.poly_divrem(&rest, &g).0;
                h = self.poly_rem(&h, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Cantor–Zassenhaus equal-degree splitting of a monic squarefree `f`
    /// whose irreducible factors all have degree `d`. `p` must be odd.
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let exponent = (BigUint::from(self.p).pow(d as u32) - 1u32) >> 1;
        loop {
            let a: PolyP = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let g = self.poly_gcd(f, &a);
            let split = if g.len() > 1 && g.len() < f.len() {
                g
            } else {
                let b = self.poly_powmod(&a, &exponent, f);
                let g = self.poly_gcd(f, &self.poly_sub(&b, &[1]));
                if g.len() <= 1 || g.len() >= f.len() {
                    continue;
                }
                g
            };
            let other = self.poly_divrem(f, &split).0;
            let mut out = self.equal_degree(&split, d, rng);
            out.extend(self.equal_degree(&other, d, rng));
            return out;
        }
    }

    /// All monic irreducible factors of a monic squarefree `f`.
    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<PolyP> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out.sort();
        out
    }
}

/// Deterministic primality for the small moduli used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn first_prime_above_two_to_thirty() {
        // 2^30 + 3 is the first prime above 2^30
        assert_eq!(next_prime(1 << 30), (1 << 30) + 3);
    }

    #[test]
    fn splits_x4_minus_1_mod_13() {
        let fp = PrimeField::new(13);
        let f = vec![12u64, 0, 0, 0, 1];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let factors = fp.factor_squarefree(&f, &mut rng);
        assert_eq!(factors.len(), 4);
        let prod = factors.iter().fold(vec![1u64], |acc, g| fp.poly_mul(&acc, g));
        assert_eq!(prod, f);
    }

    #[test]
    fn irreducible_quadratic_mod_7() {
        // x^2 + 1 has no roots mod 7
        let fp = PrimeField::new(7);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(fp.factor_squarefree(&[1, 0, 1], &mut rng), vec![vec![1, 0, 1]]);
    }

    #[test]
    fn ext_gcd_bezout() {
        let fp = PrimeField::new(101);
        let a = vec![3u64, 0, 1];
        let b = vec![5u64, 1];
        let (g, s, t) = fp.poly_ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(fp.poly_add(&fp.poly_mul(&s, &a), &fp.poly_mul(&t, &b)), vec![1]);
    }
}
