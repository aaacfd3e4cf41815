//! Irreducible characters from centrally primitive idempotents, the fusion
//! ring they span, central decompositions in `Z(H*)`, and `f(φ) = φ ⇀ Λ`.

use num_traits::{Signed, ToPrimitive};

use crate::arith::{CycScalar, Field, Poly, Rational};
use crate::error::{Error, Result};
use crate::hopf::{convolve, hit_act_alg_on_dual, hit_act_dual_on_alg, pair, DualVector, HopfData};
use crate::integrals::IntegralPair;
use crate::linalg::{char_poly, coordinates_in, Matrix};
use crate::wedderburn::BlockDecomposition;

/// Characters `χ_V ∈ H*`, aligned with the blocks they come from.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    pub labels: Vec<String>,
    pub characters: Vec<DualVector>,
    pub degrees: Vec<usize>,
    /// `dual_pairing[v][w] = ⟨χ_V, e_W⟩`.
    pub dual_pairing: Vec<Vec<CycScalar>>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    /// Characters as coordinate vectors.
    pub fn vectors(&self) -> Vec<Vec<CycScalar>> {
        self.characters.iter().map(|c| c.coords.clone()).collect()
    }

    /// Coordinates of `phi` in the character basis, if it lies in `C(H)`.
    pub fn coordinates(&self, phi: &DualVector) -> Option<Vec<CycScalar>> {
        coordinates_in(&self.vectors(), &phi.coords)
    }

    pub fn index_of(&self, phi: &DualVector) -> Option<usize> {
        self.characters.iter().position(|c| c == phi)
    }
}

/// `χ_V = (dim H / dim V) (e_V ⇀ λ)`, checked against `⟨χ_V, 1⟩ = dim V` and
/// `⟨χ_V, e_W⟩ = [V = W] dim V`.
pub fn irreducible_characters(
    h: &HopfData,
    blocks: &BlockDecomposition,
    integrals: &IntegralPair,
) -> Result<CharacterTable> {
    let d = h.dim() as i64;
    let mut characters = Vec::with_capacity(blocks.len());
    for b in &blocks.blocks {
        let factor = CycScalar::rational(Rational::new(d.into(), (b.degree as i64).into()));
        characters.push(hit_act_alg_on_dual(&b.idempotent, &integrals.dual_integral, h).scale(&factor));
    }
    let mut dual_pairing = Vec::with_capacity(blocks.len());
    for (v, (chi, b)) in characters.iter().zip(&blocks.blocks).enumerate() {
        let deg = CycScalar::from_int(b.degree as i64);
        let at_one = pair(chi, h.unit());
        if at_one != deg {
            return Err(Error::Verification(format!("⟨χ_{}, 1⟩ = {at_one}, expected {deg}", b.label)));
        }
        let row: Vec<CycScalar> = blocks.blocks.iter().map(|w| pair(chi, &w.idempotent)).collect();
        for (w, value) in row.iter().enumerate() {
            let expected = if v == w { deg.clone() } else { CycScalar::from_int(0) };
            if *value != expected {
                return Err(Error::Verification(format!(
                    "⟨χ_{}, e_{}⟩ = {value}, expected {expected}",
                    b.label, blocks.blocks[w].label
                )));
            }
        }
        dual_pairing.push(row);
    }
    Ok(CharacterTable {
        labels: blocks.blocks.iter().map(|b| b.label.clone()).collect(),
        characters,
        degrees: blocks.degrees(),
        dual_pairing,
    })
}

/// Whether `χ` commutes with every dual basis vector under convolution,
/// i.e. `χ ∈ Z(H*)`.
pub fn is_central_character(chi: &DualVector, h: &HopfData) -> bool {
    (0..h.dim()).all(|j| {
        let phi = DualVector::basis(h.dim(), j);
        convolve(chi, &phi, h) == convolve(&phi, chi, h)
    })
}

/// The Grothendieck ring spanned by the irreducible characters.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionRing {
    pub labels: Vec<String>,
    /// `coefficients[v][w][u]` is the multiplicity of `χ_U` in `χ_V χ_W`.
    pub coefficients: Vec<Vec<Vec<u64>>>,
    /// `dual[v]` is the index of `V*`, from `S* χ_V = χ_{V*}`.
    pub dual: Vec<usize>,
    /// Index of the trivial character `ε`.
    pub unit: usize,
    /// Characteristic polynomial of left multiplication by `χ_V`.
    pub polynomials: Vec<Poly<Rational>>,
    /// Whether that polynomial annihilates `χ_V` under convolution.
    pub annihilated: Vec<bool>,
}

impl FusionRing {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Left multiplication by `χ_V` on the character basis, column `w`
    /// holding the coordinates of `χ_V χ_W`.
    pub fn fusion_matrix(&self, v: usize) -> Matrix<Rational> {
        let n = self.rank();
        Matrix::from_fn(n, n, |u, w| Rational::from_integer(self.coefficients[v][w][u].into()))
    }
}

fn as_count(c: &CycScalar) -> Option<u64> {
    let q = c.to_rational()?;
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    q.to_integer().to_u64()
}

/// `p(φ)` in `H*` under convolution, with `φ⁰ = ε`.
pub fn eval_convolution_poly(p: &Poly<Rational>, phi: &DualVector, h: &HopfData) -> DualVector {
    let mut acc = DualVector::zero(h.dim());
    for c in p.coeffs().iter().rev() {
        acc = convolve(&acc, phi, h).add(&DualVector::new(h.counit().to_vec()).scale(&CycScalar::rational(c.clone())));
    }
    acc
}

/// Decomposes every product `χ_V χ_W`, finds the duality permutation and
/// the monic integer polynomial annihilating each character.
pub fn fusion_ring(table: &CharacterTable, h: &HopfData) -> Result<FusionRing> {
    let n = table.len();
    let basis = table.vectors();
    let mut coefficients = vec![vec![vec![0u64; n]; n]; n];
    for v in 0..n {
        for w in 0..n {
            let product = convolve(&table.characters[v], &table.characters[w], h);
            let coords = coordinates_in(&basis, &product.coords).ok_or_else(|| {
                Error::Verification(format!("χ_{} χ_{} is not in the character span", table.labels[v], table.labels[w]))
            })?;
            for (u, c) in coords.iter().enumerate() {
                coefficients[v][w][u] = as_count(c).ok_or_else(|| {
                    Error::Verification(format!(
                        "fusion coefficient of χ_{} in χ_{} χ_{} is {c}, not a non-negative integer",
                        table.labels[u], table.labels[v], table.labels[w]
                    ))
                })?;
            }
        }
    }
    let mut dual = Vec::with_capacity(n);
    for (v, chi) in table.characters.iter().enumerate() {
        let image = h.dual_antipode(chi);
        let u = table
            .index_of(&image)
            .ok_or_else(|| Error::Verification(format!("S* χ_{} is not an irreducible character", table.labels[v])))?;
        dual.push(u);
    }
    let eps = DualVector::new(h.counit().to_vec());
    let unit =
        table.index_of(&eps).ok_or_else(|| Error::Verification("the counit is not among the characters".into()))?;
    let mut ring = FusionRing {
        labels: table.labels.clone(),
        coefficients,
        dual,
        unit,
        polynomials: Vec::with_capacity(n),
        annihilated: Vec::with_capacity(n),
    };
    for v in 0..n {
        let p = char_poly(&ring.fusion_matrix(v));
        let annihilated = eval_convolution_poly(&p, &table.characters[v], h).is_zero();
        ring.polynomials.push(p);
        ring.annihilated.push(annihilated);
    }
    Ok(ring)
}

/// Coordinates `f_i(ζ)` with `ζ = Σ_i f_i(ζ) δ_i`, `δ_i` the primitive
/// idempotents of `Z(H*)` given by a decomposition of `H*`.
pub fn central_decomposition(zeta: &DualVector, dual_blocks: &BlockDecomposition) -> Result<Vec<CycScalar>> {
    let basis = dual_blocks.idempotents();
    let values = coordinates_in(&basis, &zeta.coords)
        .ok_or_else(|| Error::Verification("element is not in the span of the central idempotents of H*".into()))?;
    let mut rebuilt = vec![CycScalar::from_int(0); zeta.dim()];
    for (f, delta) in values.iter().zip(&basis) {
        for (x, y) in rebuilt.iter_mut().zip(delta) {
            x.add_product(f, y);
        }
    }
    if rebuilt != zeta.coords {
        return Err(Error::Verification("central decomposition does not reproduce its input".into()));
    }
    Ok(values)
}

/// `f(φ) = φ ⇀ Λ`.
pub fn f_map(phi: &DualVector, integrals: &IntegralPair, h: &HopfData) -> Vec<CycScalar> {
    hit_act_dual_on_alg(phi, &integrals.integral, h)
}

/// Matrix of `f` with column `j` equal to `f(δ_j)`.
pub fn f_matrix(integrals: &IntegralPair, h: &HopfData) -> Matrix<CycScalar> {
    let d = h.dim();
    let columns: Vec<Vec<CycScalar>> = (0..d).map(|j| f_map(&DualVector::basis(d, j), integrals, h)).collect();
    Matrix::from_columns(&columns, d)
}
