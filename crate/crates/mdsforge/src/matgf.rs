//! Exact dense linear algebra over a [`FieldCtx`].
//!
//! Everything here is a pure value operation: determinant, rank, reduced row
//! echelon form, null space and products, with first-nonzero pivoting so
//! results are deterministic. This is the substrate every parity-check
//! verification and every minors oracle sits on.

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// Dense row-major matrix over one finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct MatGF {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl MatGF {
    pub fn new(field: &FieldCtx, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|&e| !field.owns(e)) {
            return Err(Error::FieldMismatch);
        }
        Ok(MatGF {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: &FieldCtx, rows: usize, cols: usize) -> Self {
        MatGF {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &FieldCtx, rows: &[Vec<FieldElem>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<FieldElem> = rows.iter().flatten().copied().collect();
        Self::new(field, r, c, data)
    }

    /// Rows `points[j]^e` for each exponent `e`, with the 0^0 = 1 convention.
    pub fn power_rows(field: &FieldCtx, points: &[FieldElem], exponents: &[usize]) -> Self {
        let mut data = Vec::with_capacity(exponents.len() * points.len());
        for &e in exponents {
            for &x in points {
                data.push(field.pow(x, e as i64));
            }
        }
        MatGF {
            field: field.clone(),
            rows: exponents.len(),
            cols: points.len(),
            data,
        }
    }

    /// Square Vandermonde on the given points (rows are powers 0..n-1).
    pub fn vandermonde(field: &FieldCtx, points: &[FieldElem]) -> Self {
        let exps: Vec<usize> = (0..points.len()).collect();
        Self::power_rows(field, points, &exps)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| self.field.is_zero(e))
    }

    /// First nonzero entry in row-major scan order, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|&e| !self.field.is_zero(e))
            .map(|i| (i / self.cols, i % self.cols))
    }

    pub fn transpose(&self) -> MatGF {
        let mut out = MatGF::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn mat_mul(&self, other: &MatGF) -> Result<MatGF> {
        if !self.field.same_field(&other.field) {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = MatGF::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(l, j))));
                }
            }
        }
        Ok(out)
    }

    /// Keeps the selected columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> MatGF {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c));
            }
        }
        MatGF {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Exact determinant by Gaussian elimination with first-nonzero pivoting
    /// and sign tracking.
    pub fn det(&self) -> Result<FieldElem> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut a = self.data.clone();
        Ok(det_in_place(&self.field, &mut a, self.rows))
    }

    /// Reduced row echelon form together with the pivot column list.
    pub fn rref(&self) -> (MatGF, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = match (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) {
                Some(r) => r,
                None => continue,
            };
            if pivot_row != row {
                for c in 0..m.cols {
                    let tmp = m.get(row, c);
                    m.set(row, c, m.get(pivot_row, c));
                    m.set(pivot_row, c, tmp);
                }
            }
            let pinv = f.inv(m.get(row, col));
            for c in col..m.cols {
                m.set(row, c, f.mul(pinv, m.get(row, c)));
            }
            for r in 0..m.rows {
                if r == row || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col);
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per row; empty matrix (0 x
    /// cols) for full column rank. Satisfies `self * x^T = 0` for every row x.
    pub fn null_space(&self) -> MatGF {
        let f = self.field.clone();
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return MatGF::zeros(&f, 0, self.cols);
        }
        let mut rows: Vec<Vec<FieldElem>> = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (pi, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = f.neg(r.get(pi, fc));
            }
            rows.push(v);
        }
        MatGF::from_rows(&f, &rows).expect("null-space rows are rectangular")
    }

    /// Scales column j by the j-th multiplier.
    pub fn scale_columns(&self, v: &[FieldElem]) -> Result<MatGF> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} multipliers for {} columns",
                v.len(),
                self.cols
            )));
        }
        if let Some(i) = v.iter().position(|&x| self.field.is_zero(x)) {
            return Err(Error::ZeroMultiplier(i));
        }
        let f = &self.field;
        let mut out = self.clone();
        for r in 0..self.rows {
            for (c, &scale) in v.iter().enumerate() {
                out.set(r, c, f.mul(self.get(r, c), scale));
            }
        }
        Ok(out)
    }

    /// Appends extra columns (each of height `rows`).
    pub fn append_columns(&self, cols: &[Vec<FieldElem>]) -> Result<MatGF> {
        for col in cols {
            if col.len() != self.rows {
                return Err(Error::DimensionMismatch(format!(
                    "extension column of height {} on a {}-row matrix",
                    col.len(),
                    self.rows
                )));
            }
        }
        let new_cols = self.cols + cols.len();
        let mut out = MatGF::zeros(&self.field, self.rows, new_cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for (j, col) in cols.iter().enumerate() {
                out.set(r, self.cols + j, col[r]);
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &MatGF) -> Result<MatGF> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("stack width mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        MatGF::new(&self.field, self.rows + other.rows, self.cols, data)
    }

    /// True when the two matrices span the same row space.
    pub fn same_row_space(&self, other: &MatGF) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let ra = self.rank();
        let rb = other.rank();
        if ra != rb {
            return false;
        }
        match self.stack(other) {
            Ok(s) => s.rank() == ra,
            Err(_) => false,
        }
    }

    pub fn render(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|&e| self.field.format_elem(e))
                    .collect()
            })
            .collect()
    }
}

/// Determinant of the n x n matrix stored row-major in `a`, destroying `a`.
/// Shared by [`MatGF::det`] and the minors oracle, which reuses one scratch
/// buffer across millions of submatrices.
pub(crate) fn det_in_place(f: &FieldCtx, a: &mut [FieldElem], n: usize) -> FieldElem {
    debug_assert_eq!(a.len(), n * n);
    let mut det = f.one();
    let mut negate = false;
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !f.is_zero(a[r * n + col])) {
            Some(r) => r,
            None => return f.zero(),
        };
        if pivot_row != col {
            for c in 0..n {
                a.swap(col * n + c, pivot_row * n + c);
            }
            negate = !negate;
        }
        let pivot = a[col * n + col];
        det = f.mul(det, pivot);
        let pinv = f.inv(pivot);
        for r in col + 1..n {
            let factor = f.mul(a[r * n + col], pinv);
            if f.is_zero(factor) {
                continue;
            }
            for c in col..n {
                let v = f.sub(a[r * n + c], f.mul(factor, a[col * n + c]));
                a[r * n + c] = v;
            }
        }
    }
    if negate {
        f.neg(det)
    } else {
        det
    }
}

impl std::fmt::Debug for MatGF {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "MatGF {}x{} over GF({})",
            self.rows,
            self.cols,
            self.field.order()
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.render()[r].join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::new(p, 1, None).unwrap()
    }

    /// Independent oracle: the Vandermonde product formula.
    fn vandermonde_det_product(f: &FieldCtx, pts: &[FieldElem]) -> FieldElem {
        let mut acc = f.one();
        for j in 0..pts.len() {
            for i in 0..j {
                acc = f.mul(acc, f.sub(pts[j], pts[i]));
            }
        }
        acc
    }

    #[test]
    fn det_2x2_vandermonde() {
        let f = gf(7);
        let (a, b) = (f.elem(2), f.elem(5));
        let m = MatGF::vandermonde(&f, &[a, b]);
        assert_eq!(m.det().unwrap(), f.sub(b, a));
    }

    #[test]
    fn det_vandermonde_gf7_points_123() {
        let f = gf(7);
        let pts = [f.elem(1), f.elem(2), f.elem(3)];
        // Oracle: (2-1)(3-1)(3-2) = 2.
        assert_eq!(vandermonde_det_product(&f, &pts), f.elem(2));
        let m = MatGF::vandermonde(&f, &pts);
        assert_eq!(m.det().unwrap(), f.elem(2));
    }

    #[test]
    fn det_singular_on_repeated_column() {
        let f = gf(7);
        let pts = [f.elem(4), f.elem(4), f.elem(1)];
        let m = MatGF::vandermonde(&f, &pts);
        assert_eq!(m.det().unwrap(), f.zero());
    }

    #[test]
    fn det_matches_product_formula_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for f in [gf(7), gf(11), gf(17), FieldCtx::new(2, 4, None).unwrap()] {
            for _ in 0..500 {
                let n = 2 + (rng.next_u64() % 4) as usize;
                let mut pts: Vec<FieldElem> = Vec::new();
                while pts.len() < n {
                    let e = f.random_elem(&mut rng);
                    if !pts.contains(&e) {
                        pts.push(e);
                    }
                }
                let m = MatGF::vandermonde(&f, &pts);
                assert_eq!(m.det().unwrap(), vandermonde_det_product(&f, &pts));
            }
        }
    }

    #[test]
    fn rank_of_vandermonde_rows() {
        let f = gf(17);
        let pts: Vec<FieldElem> = [0u64, 2, 3, 4, 5, 7, 9, 10]
            .iter()
            .map(|&x| f.elem(x))
            .collect();
        for k in 1..=6 {
            let exps: Vec<usize> = (0..k).collect();
            let m = MatGF::power_rows(&f, &pts, &exps);
            assert_eq!(m.rank(), k);
        }
    }

    #[test]
    fn null_space_of_ones_over_gf2() {
        let f = gf(2);
        let m = MatGF::from_rows(&f, &[vec![f.one(), f.one()]]).unwrap();
        let ns = m.null_space();
        assert_eq!(ns.rows(), 1);
        assert_eq!(ns.row(0), &[f.one(), f.one()]);
    }

    #[test]
    fn rank_nullity_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for f in [gf(7), gf(17), FieldCtx::new(5, 2, None).unwrap()] {
            for _ in 0..300 {
                let rows = 1 + (rng.next_u64() % 5) as usize;
                let cols = 1 + (rng.next_u64() % 6) as usize;
                let data: Vec<FieldElem> =
                    (0..rows * cols).map(|_| f.random_elem(&mut rng)).collect();
                let m = MatGF::new(&f, rows, cols, data).unwrap();
                let ns = m.null_space();
                assert_eq!(m.rank() + ns.rows(), cols);
                if ns.rows() > 0 {
                    let prod = m.mat_mul(&ns.transpose()).unwrap();
                    assert!(prod.is_zero());
                    assert_eq!(ns.rank(), ns.rows());
                }
            }
        }
    }

    #[test]
    fn rref_is_idempotent_and_canonical() {
        let f = gf(7);
        let data: Vec<FieldElem> = [1u64, 2, 3, 2, 4, 6, 0, 1, 5]
            .iter()
            .map(|&x| f.elem(x))
            .collect();
        let m = MatGF::new(&f, 3, 3, data).unwrap();
        let (r, pivots) = m.rref();
        let (r2, pivots2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(pivots, pivots2);
        assert_eq!(m.rank(), 2); // row 2 = 2 * row 1
    }

    #[test]
    fn shape_errors() {
        let f = gf(7);
        let m = MatGF::zeros(&f, 2, 3);
        assert!(matches!(m.det(), Err(Error::NotSquare { .. })));
        let n = MatGF::zeros(&f, 2, 3);
        assert!(m.mat_mul(&n).is_err());
        assert!(matches!(
            m.scale_columns(&[f.one(), f.zero(), f.one()]),
            Err(Error::ZeroMultiplier(1))
        ));
    }
}
