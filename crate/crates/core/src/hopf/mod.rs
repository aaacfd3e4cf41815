//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! With basis `b_0..b_{d-1}`:
//!
//! * `b_i b_j = sum_k mult[i][j][k] b_k`
//! * `1 = sum_k unit[k] b_k`
//! * `Δ(b_k) = sum_{i,j} comult[i][j][k] b_i ⊗ b_j`
//! * `ε(b_k) = counit[k]`
//! * `S(b_j) = sum_i antipode[i][j] b_i`
//!
//! Elements of `H` are coordinate slices; elements of `H*` are
//! [`DualVector`]s in the dual basis.

mod axioms;
mod format;

use std::sync::Arc;

pub use axioms::{check_axioms, AxiomCheck, AxiomReport};
pub use format::{parse_hopf, write_hopf};

use crate::arith::{CycScalar, CyclotomicField, Field};
use crate::error::{Error, Result};

/// A linear form on `H`, stored in the dual basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DualVector {
    pub coords: Vec<CycScalar>,
}

impl DualVector {
    pub fn new(coords: Vec<CycScalar>) -> Self {
        DualVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        DualVector { coords: vec![CycScalar::from_int(0); dim] }
    }

    /// The dual basis functional `δ_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        DualVector { coords: unit_vector(dim, i) }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        DualVector { coords: scale(&self.coords, c) }
    }

    pub fn add(&self, other: &DualVector) -> Self {
        DualVector { coords: add(&self.coords, &other.coords) }
    }

    pub fn sub(&self, other: &DualVector) -> Self {
        DualVector { coords: sub(&self.coords, &other.coords) }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Field::is_zero)
    }
}

impl From<Vec<CycScalar>> for DualVector {
    fn from(coords: Vec<CycScalar>) -> Self {
        DualVector { coords }
    }
}

/// Dense structure tensors of a Hopf algebra, plus sparse views used by
/// the contraction loops.
#[derive(Clone, Debug)]
pub struct HopfData {
    name: String,
    dim: usize,
    field: Arc<CyclotomicField>,
    mult: Vec<CycScalar>,
    unit: Vec<CycScalar>,
    comult: Vec<CycScalar>,
    counit: Vec<CycScalar>,
    antipode: Vec<CycScalar>,
    /// `mult_nz[i * d + j]` lists the nonzero `(k, mult[i][j][k])`.
    mult_nz: Vec<Vec<(usize, CycScalar)>>,
    /// `comult_nz[k]` lists the nonzero `(i, j, comult[i][j][k])`.
    comult_nz: Vec<Vec<(usize, usize, CycScalar)>>,
}

impl PartialEq for HopfData {
    fn eq(&self, other: &HopfData) -> bool {
        self.dim == other.dim
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

/// Raw structure constants for [`HopfData::new`].
#[derive(Clone, Debug, PartialEq)]
pub struct HopfTensors {
    pub mult: Vec<CycScalar>,
    pub unit: Vec<CycScalar>,
    pub comult: Vec<CycScalar>,
    pub counit: Vec<CycScalar>,
    pub antipode: Vec<CycScalar>,
}

impl HopfTensors {
    /// All-zero tensors of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        let z = CycScalar::from_int(0);
        HopfTensors {
            mult: vec![z.clone(); dim * dim * dim],
            unit: vec![z.clone(); dim],
            comult: vec![z.clone(); dim * dim * dim],
            counit: vec![z.clone(); dim],
            antipode: vec![z; dim * dim],
        }
    }
}

impl HopfData {
    /// Wraps structure constants. Only shapes are validated here; the Hopf
    /// axioms are checked by [`check_axioms`].
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        field: Arc<CyclotomicField>,
        mut t: HopfTensors,
    ) -> Result<HopfData> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("dimension must be at least 1".into()));
        }
        let cube = dim * dim * dim;
        let shapes = [
            ("MULT", t.mult.len(), cube),
            ("UNIT", t.unit.len(), dim),
            ("COMULT", t.comult.len(), cube),
            ("COUNIT", t.counit.len(), dim),
            ("ANTIPODE", t.antipode.len(), dim * dim),
        ];
        for (what, got, want) in shapes {
            if got != want {
                return Err(Error::DimensionMismatch(format!("{what} has {got} entries, expected {want}")));
            }
        }
        for tensor in [&mut t.mult, &mut t.unit, &mut t.comult, &mut t.counit, &mut t.antipode] {
            for c in tensor.iter_mut() {
                if c.order() == field.order() {
                    continue;
                }
                if !field.order().is_multiple_of(c.order()) && !c.is_rational() {
                    return Err(Error::InvalidInput(format!(
                        "scalar {c} of Q(z_{}) does not embed in Q(z_{})",
                        c.order(),
                        field.order()
                    )));
                }
                *c = c.lift_to(&field);
            }
        }
        let mut mult_nz = vec![Vec::new(); dim * dim];
        for (idx, c) in t.mult.iter().enumerate() {
            if !c.is_zero() {
                mult_nz[idx / dim].push((idx % dim, c.clone()));
            }
        }
        let mut comult_nz = vec![Vec::new(); dim];
        for (idx, c) in t.comult.iter().enumerate() {
            if !c.is_zero() {
                let (i, j, k) = (idx / (dim * dim), (idx / dim) % dim, idx % dim);
                comult_nz[k].push((i, j, c.clone()));
            }
        }
        Ok(HopfData {
            name: name.into(),
            dim,
            field,
            mult: t.mult,
            unit: t.unit,
            comult: t.comult,
            counit: t.counit,
            antipode: t.antipode,
            mult_nz,
            comult_nz,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> HopfData {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The cyclotomic field the structure constants (and default
    /// computations) live in.
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> &CycScalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn comult_coeff(&self, i: usize, j: usize, k: usize) -> &CycScalar {
        &self.comult[(i * self.dim + j) * self.dim + k]
    }

    pub fn antipode_coeff(&self, i: usize, j: usize) -> &CycScalar {
        &self.antipode[i * self.dim + j]
    }

    pub fn unit(&self) -> &[CycScalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[CycScalar] {
        &self.counit
    }

    pub fn tensors(&self) -> HopfTensors {
        HopfTensors {
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }

    pub(crate) fn mult_terms(&self, i: usize, j: usize) -> &[(usize, CycScalar)] {
        &self.mult_nz[i * self.dim + j]
    }

    pub(crate) fn comult_terms(&self, k: usize) -> &[(usize, usize, CycScalar)] {
        &self.comult_nz[k]
    }

    /// `true` when every structure constant is rational.
    pub fn is_rational(&self) -> bool {
        [&self.mult, &self.unit, &self.comult, &self.counit, &self.antipode]
            .iter()
            .all(|t| t.iter().all(CycScalar::is_rational))
    }

    fn check_len(&self, v: &[CycScalar], what: &str) {
        assert_eq!(v.len(), self.dim, "{what} has length {}, algebra has dimension {}", v.len(), self.dim);
    }

    /// Product `a b` in `H`.
    pub fn multiply(&self, a: &[CycScalar], b: &[CycScalar]) -> Vec<CycScalar> {
        self.check_len(a, "left factor");
        self.check_len(b, "right factor");
        let mut out = vec![CycScalar::from_int(0); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.times(y);
                for (k, c) in self.mult_terms(i, j) {
                    out[*k].add_product(&xy, c);
                }
            }
        }
        out
    }

    /// `ε(h)`.
    pub fn counit_of(&self, h: &[CycScalar]) -> CycScalar {
        pair(&DualVector::new(self.counit.clone()), h)
    }

    /// `S(h)`.
    pub fn apply_antipode(&self, h: &[CycScalar]) -> Vec<CycScalar> {
        self.check_len(h, "argument");
        (0..self.dim)
            .map(|i| {
                let mut acc = CycScalar::from_int(0);
                for (j, x) in h.iter().enumerate() {
                    acc.add_product(self.antipode_coeff(i, j), x);
                }
                acc
            })
            .collect()
    }

    /// `S*(φ) = φ ∘ S`.
    pub fn dual_antipode(&self, phi: &DualVector) -> DualVector {
        self.check_len(&phi.coords, "functional");
        let coords = (0..self.dim)
            .map(|j| {
                let mut acc = CycScalar::from_int(0);
                for (i, x) in phi.coords.iter().enumerate() {
                    acc.add_product(self.antipode_coeff(i, j), x);
                }
                acc
            })
            .collect();
        DualVector { coords }
    }

    /// Matrix of left multiplication by `a`, as `(row k, column j)` entries
    /// `coefficient of b_k in a b_j`.
    pub fn left_mult_matrix(&self, a: &[CycScalar]) -> crate::linalg::Matrix<CycScalar> {
        let d = self.dim;
        let columns: Vec<Vec<CycScalar>> = (0..d).map(|j| self.multiply(a, &unit_vector(d, j))).collect();
        crate::linalg::Matrix::from_columns(&columns, d)
    }

    /// Trace of left multiplication by `a` on `H`.
    pub fn left_trace(&self, a: &[CycScalar]) -> CycScalar {
        self.check_len(a, "argument");
        let mut acc = CycScalar::from_int(0);
        for (j, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                acc.add_product(x, self.mult_coeff(j, i, i));
            }
        }
        acc
    }
}

/// `H*` as a Hopf algebra in the dual basis: multiplication and
/// comultiplication trade places, unit and counit trade places, and the
/// antipode is transposed. Applying this twice returns the input exactly.
pub fn dualize(h: &HopfData) -> HopfData {
    let d = h.dim;
    let antipode = (0..d * d).map(|idx| h.antipode[(idx % d) * d + idx / d].clone()).collect();
    let t = HopfTensors {
        mult: h.comult.clone(),
        unit: h.counit.clone(),
        comult: h.mult.clone(),
        counit: h.unit.clone(),
        antipode,
    };
    let name = match h.name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{}*", h.name),
    };
    HopfData::new(name, d, h.field.clone(), t).expect("shapes are preserved")
}

/// `⟨φ, h⟩`.
pub fn pair(phi: &DualVector, h: &[CycScalar]) -> CycScalar {
    assert_eq!(phi.coords.len(), h.len(), "pairing needs matching dimensions");
    let mut acc = CycScalar::from_int(0);
    for (a, b) in phi.coords.iter().zip(h) {
        acc.add_product(a, b);
    }
    acc
}

/// Convolution product in `H*`: `(φψ)(h) = Σ φ(h₁) ψ(h₂)`.
pub fn convolve(phi: &DualVector, psi: &DualVector, h: &HopfData) -> DualVector {
    h.check_len(&phi.coords, "left functional");
    h.check_len(&psi.coords, "right functional");
    let coords = (0..h.dim)
        .map(|k| {
            let mut acc = CycScalar::from_int(0);
            for (i, j, c) in h.comult_terms(k) {
                let (a, b) = (&phi.coords[*i], &psi.coords[*j]);
                if !a.is_zero() && !b.is_zero() {
                    acc.add_product(c, &a.times(b));
                }
            }
            acc
        })
        .collect();
    DualVector { coords }
}

/// `h ⇀ φ`, defined by `⟨h ⇀ φ, h'⟩ = ⟨φ, h' h⟩`.
pub fn hit_act_alg_on_dual(x: &[CycScalar], phi: &DualVector, h: &HopfData) -> DualVector {
    h.check_len(x, "algebra element");
    h.check_len(&phi.coords, "functional");
    let coords = (0..h.dim)
        .map(|l| {
            let mut acc = CycScalar::from_int(0);
            for (j, xj) in x.iter().enumerate() {
                if xj.is_zero() {
                    continue;
                }
                for (k, c) in h.mult_terms(l, j) {
                    let p = &phi.coords[*k];
                    if !p.is_zero() {
                        acc.add_product(&xj.times(c), p);
                    }
                }
            }
            acc
        })
        .collect();
    DualVector { coords }
}

/// `φ ⇀ h = Σ h₁ ⟨φ, h₂⟩`, so that `⟨ψ, φ ⇀ h⟩ = ⟨ψφ, h⟩`.
pub fn hit_act_dual_on_alg(phi: &DualVector, x: &[CycScalar], h: &HopfData) -> Vec<CycScalar> {
    h.check_len(x, "algebra element");
    h.check_len(&phi.coords, "functional");
    let mut out = vec![CycScalar::from_int(0); h.dim];
    for (k, xk) in x.iter().enumerate() {
        if xk.is_zero() {
            continue;
        }
        for (i, j, c) in h.comult_terms(k) {
            let p = &phi.coords[*j];
            if !p.is_zero() {
                out[*i].add_product(&xk.times(c), p);
            }
        }
    }
    out
}

/// Standard basis vector `b_i` of length `dim`.
pub fn unit_vector(dim: usize, i: usize) -> Vec<CycScalar> {
    let mut v = vec![CycScalar::from_int(0); dim];
    v[i] = CycScalar::from_int(1);
    v
}

pub fn add(a: &[CycScalar], b: &[CycScalar]) -> Vec<CycScalar> {
    a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()
}

pub fn sub(a: &[CycScalar], b: &[CycScalar]) -> Vec<CycScalar> {
    a.iter().zip(b).map(|(x, y)| x.minus(y)).collect()
}

pub fn scale(a: &[CycScalar], c: &CycScalar) -> Vec<CycScalar> {
    a.iter().map(|x| x.times(c)).collect()
}

pub fn is_zero_vec(a: &[CycScalar]) -> bool {
    a.iter().all(Field::is_zero)
}

#[cfg(test)]
mod tests;
