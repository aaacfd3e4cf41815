//! The center `Z(H)`, its primitive idempotents over `Q(z_N)`, and the
//! degrees of the matching simple blocks.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{factor_over_cyclotomic, CycScalar, CyclotomicField, Field, Poly, Rational};
use crate::error::{Error, Result};
use crate::hopf::{add, is_zero_vec, scale, sub, unit_vector, HopfData};
use crate::linalg::{kernel_basis, IncrementalSpan, Matrix};

/// Attempts allowed when drawing a splitting element.
pub const MAX_SPLITTING_ATTEMPTS: usize = 32;

/// One simple block: its centrally primitive idempotent and `dim V`.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub label: String,
    pub idempotent: Vec<CycScalar>,
    pub degree: usize,
    /// The eigenvalue of the splitting element on this block.
    pub eigenvalue: CycScalar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BlockDecomposition {
    pub center_basis: Vec<Vec<CycScalar>>,
    pub blocks: Vec<Block>,
    pub splitting_element: Vec<CycScalar>,
    /// Minimal polynomial of the splitting element over `Q`.
    pub splitting_polynomial: Poly<Rational>,
    pub attempts: usize,
    pub field: Arc<CyclotomicField>,
}

/// Outcome of one exact identity on a decomposition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.degree).collect()
    }

    pub fn idempotents(&self) -> Vec<Vec<CycScalar>> {
        self.blocks.iter().map(|b| b.idempotent.clone()).collect()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.blocks.iter().map(|b| b.label.as_str()).collect()
    }

    /// Renames the blocks `{prefix}1, {prefix}2, ...` in their current order.
    pub fn with_prefix(mut self, prefix: &str) -> BlockDecomposition {
        for (i, b) in self.blocks.iter_mut().enumerate() {
            b.label = format!("{prefix}{}", i + 1);
        }
        self
    }

    /// Re-verifies every identity of the decomposition exactly.
    pub fn checks(&self, h: &HopfData) -> Vec<BlockCheck> {
        let d = h.dim();
        let mut out = Vec::new();
        let mut push = |id, statement, witness: Option<String>| {
            out.push(BlockCheck { id, statement, pass: witness.is_none(), witness });
        };

        let mut orth = None;
        'outer: for (i, a) in self.blocks.iter().enumerate() {
            for (j, b) in self.blocks.iter().enumerate() {
                let prod = h.multiply(&a.idempotent, &b.idempotent);
                let ok = if i == j { prod == a.idempotent } else { is_zero_vec(&prod) };
                if !ok {
                    orth = Some(format!("{} {} = {}", a.label, b.label, show(&prod)));
                    break 'outer;
                }
            }
        }
        push("orthogonal-idempotents", "e_V e_W = [V = W] e_V", orth);

        let total = self.blocks.iter().fold(vec![CycScalar::from_int(0); d], |acc, b| add(&acc, &b.idempotent));
        let sum = (total != h.unit()).then(|| format!("Σ e_V = {}", show(&total)));
        push("sum-to-unit", "Σ_V e_V = 1", sum);

        let mut central = None;
        'c: for b in &self.blocks {
            for k in 0..d {
                let basis = unit_vector(d, k);
                let comm = sub(&h.multiply(&b.idempotent, &basis), &h.multiply(&basis, &b.idempotent));
                if !is_zero_vec(&comm) {
                    central = Some(format!("{} does not commute with b{k}", b.label));
                    break 'c;
                }
            }
        }
        push("central", "each e_V is central", central);

        let count = (self.blocks.len() != self.center_basis.len())
            .then(|| format!("{} blocks, dim Z(H) = {}", self.blocks.len(), self.center_basis.len()));
        push("block-count", "number of blocks = dim Z(H)", count);

        let squares: usize = self.blocks.iter().map(|b| b.degree * b.degree).sum();
        let dims = (squares != d).then(|| format!("Σ (dim V)² = {squares}, dim H = {d}"));
        push("sum-of-squares", "Σ_V (dim V)² = dim H", dims);

        let mut traces = None;
        for b in &self.blocks {
            let t = h.left_trace(&b.idempotent);
            if t != CycScalar::from_int((b.degree * b.degree) as i64) {
                traces = Some(format!("tr(e_{}) = {t}, degree {}", b.label, b.degree));
                break;
            }
        }
        push("block-trace", "trace of left multiplication by e_V = (dim V)²", traces);
        out
    }
}

fn show(v: &[CycScalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Basis of `Z(H) = {z : z b_i = b_i z for all i}`.
pub fn center(h: &HopfData) -> Vec<Vec<CycScalar>> {
    let d = h.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for k in 0..d {
            let row: Vec<CycScalar> = (0..d).map(|j| h.mult_coeff(j, i, k).minus(h.mult_coeff(i, j, k))).collect();
            if !is_zero_vec(&row) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return (0..d).map(|j| unit_vector(d, j)).collect();
    }
    kernel_basis(&Matrix::from_rows(&rows))
}

/// Powers `1, z, ..., z^(m-1)` of `z` together with the minimal
/// polynomial of `z` in `H`.
fn powers_and_min_poly(h: &HopfData, z: &[CycScalar]) -> (Vec<Vec<CycScalar>>, Poly<CycScalar>) {
    let mut span = IncrementalSpan::new();
    let mut powers = Vec::new();
    let mut current = h.unit().to_vec();
    loop {
        if let Err(relation) = span.insert(current.clone()) {
            return (powers, Poly::new(relation));
        }
        let next = h.multiply(&current, z);
        powers.push(current);
        current = next;
    }
}

fn to_rational_poly(p: &Poly<CycScalar>) -> Option<Poly<Rational>> {
    let coeffs: Option<Vec<Rational>> = p.coeffs().iter().map(CycScalar::to_rational).collect();
    coeffs.map(Poly::new)
}

type Splitting = (Vec<CycScalar>, Vec<Vec<CycScalar>>, Poly<Rational>, usize);

/// Finds a central element whose minimal polynomial is squarefree of degree
/// `dim Z(H)`. Each draw `w` has coefficients in `[-3, 3]` on the center
/// basis; it replaces the current candidate `z` by `z + t w` for the
/// smallest `t >= 1` that increases the number of distinct eigenvalues.
fn splitting_element(h: &HopfData, center_basis: &[Vec<CycScalar>], seed: u64) -> Result<Splitting> {
    let c = center_basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        center_basis.iter().fold(vec![CycScalar::from_int(0); h.dim()], |acc, v| {
            let k: i64 = rng.gen_range(-3..=3);
            add(&acc, &scale(v, &CycScalar::from_int(k)))
        })
    };
    let evaluate = |z: &[CycScalar]| -> Result<(Vec<Vec<CycScalar>>, Poly<Rational>)> {
        let (powers, min_poly) = powers_and_min_poly(h, z);
        let p = to_rational_poly(&min_poly).expect("rational algebra gives a rational minimal polynomial");
        if !p.is_squarefree() {
            return Err(Error::NotSemisimple(format!("central element with non-squarefree minimal polynomial {p}")));
        }
        Ok((powers, p))
    };
    let mut z = if c == 1 { center_basis[0].clone() } else { draw(&mut rng) };
    let (mut powers, mut p) = evaluate(&z)?;
    let mut attempts = 1;
    // pairs of blocks that t can fail to separate bound the number of bad t
    let t_max = (c * (c - 1) / 2 + 1) as i64;
    while p.degree() != Some(c) {
        if attempts == MAX_SPLITTING_ATTEMPTS {
            return Err(Error::RetriesExhausted(MAX_SPLITTING_ATTEMPTS));
        }
        attempts += 1;
        let w = draw(&mut rng);
        for t in 1..=t_max {
            let candidate = add(&z, &scale(&w, &CycScalar::from_int(t)));
            let (cand_powers, cand_p) = evaluate(&candidate)?;
            if cand_p.degree() > p.degree() {
                z = candidate;
                powers = cand_powers;
                p = cand_p;
                break;
            }
        }
    }
    Ok((z, powers, p, attempts))
}

/// Splits `Z(H)` over `Q(z_N)` into centrally primitive idempotents.
pub fn primitive_idempotents(h: &HopfData, order: u32, seed: u64) -> Result<BlockDecomposition> {
    if !h.is_rational() {
        return Err(Error::InvalidInput("splitting the center needs rational structure constants".into()));
    }
    let field = CyclotomicField::new(order)?;
    let center_basis = center(h);
    let c = center_basis.len();
    let (z, powers, p, attempts) = splitting_element(h, &center_basis, seed)?;

    let factors = factor_over_cyclotomic(&p, &field)?;
    if let Some(bad) = factors.iter().find(|f| f.degree() != Some(1)) {
        return Err(Error::FieldTooSmall(format!(
            "the factor {bad} of the splitting polynomial {p} does not split over Q(z_{order})"
        )));
    }
    let roots: Vec<CycScalar> = factors.iter().map(|f| f.coeff(0).negated()).collect();
    let traces: Vec<CycScalar> = (0..h.dim()).map(|j| h.left_trace(&unit_vector(h.dim(), j))).collect();

    let mut blocks = Vec::with_capacity(c);
    for (i, mu) in roots.iter().enumerate() {
        let mut numerator = Poly::one();
        let mut denominator = CycScalar::from_int(1);
        for (j, nu) in roots.iter().enumerate() {
            if i != j {
                numerator = &numerator * &Poly::linear_root(nu);
                denominator = denominator.times(&mu.minus(nu));
            }
        }
        let lagrange = numerator.scale(&denominator.inverse().expect("distinct roots"));
        let mut e = vec![CycScalar::zero_in(&field); h.dim()];
        for (k, coeff) in lagrange.coeffs().iter().enumerate() {
            if !coeff.is_zero() {
                for (x, y) in e.iter_mut().zip(&powers[k]) {
                    x.add_product(coeff, y);
                }
            }
        }
        let mut t = CycScalar::from_int(0);
        for (x, tr) in e.iter().zip(&traces) {
            t.add_product(x, tr);
        }
        let degree = square_root_degree(&t)?;
        blocks.push(Block { label: String::new(), idempotent: e, degree, eigenvalue: mu.clone() });
    }
    blocks.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| compare_vectors(&a.idempotent, &b.idempotent)));
    let decomposition =
        BlockDecomposition { center_basis, blocks, splitting_element: z, splitting_polynomial: p, attempts, field }
            .with_prefix("V");
    if let Some(failed) = decomposition.checks(h).into_iter().find(|c| !c.pass) {
        return Err(Error::Verification(format!("{}: {}", failed.statement, failed.witness.unwrap_or_default())));
    }
    Ok(decomposition)
}

fn compare_vectors(a: &[CycScalar], b: &[CycScalar]) -> Ordering {
    a.iter().zip(b).map(|(x, y)| x.canonical_cmp(y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

/// `dim V` from the trace `t = (dim V)²` of left multiplication by `e_V`.
fn square_root_degree(t: &CycScalar) -> Result<usize> {
    let bad = || Error::NonSquareTrace(t.to_string());
    let q = t.to_rational().ok_or_else(bad)?;
    if !q.is_integer() || q.is_negative() {
        return Err(bad());
    }
    let n = q.to_integer();
    let r = n.sqrt();
    if &r * &r != n || num_traits::Zero::is_zero(&r) {
        return Err(bad());
    }
    r.to_usize().ok_or_else(bad)
}

/// Degrees of verified idempotents, from traces of left multiplication.
pub fn block_degrees(h: &HopfData, idempotents: &[Vec<CycScalar>]) -> Result<Vec<usize>> {
    idempotents.iter().map(|e| square_root_degree(&h.left_trace(e))).collect()
}
