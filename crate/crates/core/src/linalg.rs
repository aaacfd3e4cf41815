//! Dense exact linear algebra over any [`Field`].

use std::fmt;

use crate::arith::{Field, Poly};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Returned by [`rref_solve`] when `A x = B` has no solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inconsistent;

impl fmt::Display for Inconsistent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("linear system is inconsistent")
    }
}

impl std::error::Error for Inconsistent {}

/// One solution of `A X = B` together with a basis of `ker A`.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<F> {
    pub particular: Matrix<F>,
    pub kernel: Vec<Vec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn diagonal(entries: &[F]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data: Vec<F> = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().cloned()
            })
            .collect();
        Matrix { rows: rows.len(), cols, data }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<F>], rows: usize) -> Self {
        let cols = columns.len();
        let mut m = Matrix::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m.data[i * cols + j] = v.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j].add_product(a, rhs.get(k, j));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_product(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.times(c)).collect() }
    }

    /// Gauss–Jordan reduction restricted to the first `pivot_cols` columns.
    /// Returns the reduced matrix and the pivot columns.
    pub fn rref_partial(&self, pivot_cols: usize) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols.min(cols) {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..cols {
                    m.data.swap(p * cols + k, r * cols + k);
                }
            }
            let inv = m.data[r * cols + c].inverse().expect("pivot is nonzero");
            if !inv.is_one() {
                for k in c..cols {
                    let v = m.data[r * cols + k].times(&inv);
                    m.data[r * cols + k] = v;
                }
            }
            let pivot_row: Vec<F> = m.data[r * cols..(r + 1) * cols].to_vec();
            let support: Vec<usize> = (c..cols).filter(|&k| !pivot_row[k].is_zero()).collect();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                for &k in &support {
                    let v = m.data[i * cols + k].minus(&factor.times(&pivot_row[k]));
                    m.data[i * cols + k] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        self.rref_partial(self.cols)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn augment(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, rhs.rows, "row counts differ");
        let cols = self.cols + rhs.cols;
        Matrix::from_fn(self.rows, cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Solves `A X = B` exactly.
pub fn rref_solve<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Solution<F>, Inconsistent> {
    assert_eq!(a.rows, b.rows, "A and B must have the same number of rows");
    let (r, pivots) = a.augment(b).rref_partial(a.cols);
    let rank = pivots.len();
    for i in rank..r.rows {
        if (a.cols..r.cols).any(|k| !r.get(i, k).is_zero()) {
            return Err(Inconsistent);
        }
    }
    let mut particular = Matrix::zeros(a.cols, b.cols);
    for (i, &c) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            particular.set(c, j, r.get(i, a.cols + j).clone());
        }
    }
    Ok(Solution { particular, kernel: kernel_from_rref(&r, &pivots, a.cols) })
}

fn kernel_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize], cols: usize) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, f).negated();
            }
            v
        })
        .collect()
}

/// Basis of the right null space.
pub fn kernel_basis<F: Field>(a: &Matrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = a.rref();
    kernel_from_rref(&r, &pivots, a.cols)
}

pub fn trace<F: Field>(a: &Matrix<F>) -> F {
    assert!(a.is_square(), "trace of a non-square matrix");
    let mut acc = F::zero();
    for i in 0..a.rows {
        acc = acc.plus(a.get(i, i));
    }
    acc
}

/// Characteristic polynomial via reduction to upper Hessenberg form.
pub fn char_poly<F: Field>(a: &Matrix<F>) -> Poly<F> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows;
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
            continue;
        };
        if i != m {
            for k in 0..n {
                h.data.swap(i * n + k, m * n + k);
            }
            for k in 0..n {
                h.data.swap(k * n + i, k * n + m);
            }
        }
        let pivot_inv = h.get(m, m - 1).inverse().expect("nonzero pivot");
        for j in m + 1..n {
            let entry = h.get(j, m - 1).clone();
            if entry.is_zero() {
                continue;
            }
            let u = entry.times(&pivot_inv);
            for k in 0..n {
                let v = h.get(j, k).minus(&u.times(h.get(m, k)));
                h.set(j, k, v);
            }
            for k in 0..n {
                let v = h.get(k, m).plus(&u.times(h.get(k, j)));
                h.set(k, m, v);
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Poly<F>> = vec![Poly::one()];
    for m in 0..n {
        let mut next = &Poly::linear_root(h.get(m, m)) * &polys[m];
        let mut t = F::one();
        for i in (0..m).rev() {
            t = t.times(h.get(i + 1, i));
            if t.is_zero() {
                break;
            }
            let coeff = h.get(i, m).times(&t);
            if !coeff.is_zero() {
                next = &next - &polys[i].scale(&coeff);
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 polynomials")
}

/// Minimal polynomial: the first linear dependency among `I, A, A^2, ...`.
pub fn min_poly<F: Field>(a: &Matrix<F>) -> Poly<F> {
    assert!(a.is_square(), "minimal polynomial of a non-square matrix");
    let mut span = IncrementalSpan::new();
    let mut power = Matrix::identity(a.rows);
    loop {
        if let Err(dependency) = span.insert(power.data.clone()) {
            return Poly::new(dependency);
        }
        power = power.mul(a);
    }
}

pub fn char_min_poly<F: Field>(a: &Matrix<F>) -> (Poly<F>, Poly<F>) {
    (char_poly(a), min_poly(a))
}

/// `p(A)` by Horner's rule.
pub fn eval_poly_at_matrix<F: Field>(p: &Poly<F>, a: &Matrix<F>) -> Matrix<F> {
    let n = a.rows;
    let mut acc = Matrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(a).add(&Matrix::identity(n).scale(c));
    }
    acc
}

/// Rank of a family of vectors of equal length.
pub fn rank_of<F: Field>(vectors: &[Vec<F>]) -> usize {
    let mut span = IncrementalSpan::new();
    vectors.iter().filter(|v| span.insert((*v).clone()).is_ok()).count()
}

/// Exact equality of the spans of two vector families.
pub fn same_span<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    let ra = rank_of(a);
    let rb = rank_of(b);
    let joint: Vec<Vec<F>> = a.iter().chain(b).cloned().collect();
    ra == rb && rank_of(&joint) == ra
}

/// Coordinates of `target` in terms of `basis` (assumed independent).
pub fn coordinates_in<F: Field>(basis: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let rows = target.len();
    let a = Matrix::from_columns(basis, rows);
    let b = Matrix::from_columns(&[target.to_vec()], rows);
    let sol = rref_solve(&a, &b).ok()?;
    Some(sol.particular.column(0))
}

/// A growing echelon basis that reports the first linear dependency.
///
/// Each stored row remembers how it was formed from the inserted vectors,
/// so a vector that reduces to zero yields an explicit relation whose last
/// coefficient (the newly inserted vector) is one.
#[derive(Clone, Debug, Default)]
pub struct IncrementalSpan<F> {
    rows: Vec<(Vec<F>, usize, Vec<F>)>,
    inserted: usize,
}

impl<F: Field> IncrementalSpan<F> {
    pub fn new() -> Self {
        IncrementalSpan { rows: Vec::new(), inserted: 0 }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Adds `v`; on dependency returns the relation `sum c_i v_i = 0` over
    /// every inserted vector, with `c_new = 1`, and leaves the span unchanged.
    pub fn insert(&mut self, mut v: Vec<F>) -> Result<(), Vec<F>> {
        let k = self.inserted;
        let mut combo = vec![F::zero(); k + 1];
        combo[k] = F::one();
        for (row, pivot, row_combo) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.minus(&c.times(y));
                }
            }
            for (x, y) in combo.iter_mut().zip(row_combo) {
                if !y.is_zero() {
                    *x = x.minus(&c.times(y));
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => Err(combo),
            Some(pivot) => {
                let inv = v[pivot].inverse().expect("nonzero");
                let v: Vec<F> = v.iter().map(|x| x.times(&inv)).collect();
                let combo: Vec<F> = combo.iter().map(|x| x.times(&inv)).collect();
                // keep earlier rows reduced against the new pivot
                for (row, _, row_combo) in &mut self.rows {
                    let c = row[pivot].clone();
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in row.iter_mut().zip(&v) {
                        *x = x.minus(&c.times(y));
                    }
                    row_combo.resize(k + 1, F::zero());
                    for (x, y) in row_combo.iter_mut().zip(&combo) {
                        *x = x.minus(&c.times(y));
                    }
                }
                self.rows.push((v, pivot, combo));
                self.inserted += 1;
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, CycScalar, CyclotomicField, Rational};

    type M = Matrix<Rational>;

    fn m(rows: &[&[i64]]) -> M {
        M::from_rows(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn solve_identity() {
        let sol = rref_solve(&M::identity(2), &m(&[&[1], &[2]])).unwrap();
        assert_eq!(sol.particular, m(&[&[1], &[2]]));
        assert!(sol.kernel.is_empty());
    }

    #[test]
    fn solve_inconsistent() {
        assert_eq!(rref_solve(&m(&[&[1, 1], &[2, 2]]), &m(&[&[1], &[3]])), Err(Inconsistent));
    }

    #[test]
    fn solve_with_kernel() {
        let a = m(&[&[1, 1], &[2, 2]]);
        let b = m(&[&[1], &[2]]);
        let sol = rref_solve(&a, &b).unwrap();
        assert_eq!(a.mul(&sol.particular), b);
        assert_eq!(sol.kernel.len(), 1);
        assert!(a.mul_vec(&sol.kernel[0]).iter().all(|x| x == &int(0)));
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&M::identity(3)).is_empty());
        assert_eq!(kernel_basis(&M::zeros(2, 2)).len(), 2);
        assert_eq!(kernel_basis(&m(&[&[1, -1]])), vec![vec![int(1), int(1)]]);
    }

    #[test]
    fn char_and_min_polys() {
        let (c, mn) = char_min_poly(&M::identity(2));
        assert_eq!(c, Poly::from_ints(&[1, -2, 1]));
        assert_eq!(mn, Poly::from_ints(&[-1, 1]));
        let (c, mn) = char_min_poly(&m(&[&[1, 0], &[0, 2]]));
        assert_eq!(c, Poly::from_ints(&[2, -3, 1]));
        assert_eq!(mn, c);
        let (c, mn) = char_min_poly(&m(&[&[0, 1], &[0, 0]]));
        assert_eq!(c, Poly::from_ints(&[0, 0, 1]));
        assert_eq!(mn, c);
    }

    #[test]
    fn traces() {
        assert_eq!(trace(&M::identity(5)), int(5));
        assert_eq!(trace(&M::zeros(3, 3)), int(0));
        let k = CyclotomicField::new(3).unwrap();
        let d = Matrix::diagonal(&[CycScalar::zeta_power(&k, 1), CycScalar::zeta_power(&k, 2)]);
        assert_eq!(trace(&d), CycScalar::from_int(-1));
    }

    #[test]
    fn cayley_hamilton_dense() {
        let a = m(&[&[2, -1, 0, 3], &[1, 0, 4, -2], &[0, 5, 1, 1], &[-3, 2, 2, 0]]);
        let p = char_poly(&a);
        assert_eq!(p.degree(), Some(4));
        assert!(eval_poly_at_matrix(&p, &a).is_zero());
        assert!(eval_poly_at_matrix(&min_poly(&a), &a).is_zero());
    }

    #[test]
    fn span_relation() {
        let mut s = IncrementalSpan::<Rational>::new();
        s.insert(vec![int(1), int(0), int(1)]).unwrap();
        s.insert(vec![int(0), int(1), int(1)]).unwrap();
        let rel = s.insert(vec![int(2), int(3), int(5)]).unwrap_err();
        assert_eq!(rel, vec![int(-2), int(-3), int(1)]);
    }
}
