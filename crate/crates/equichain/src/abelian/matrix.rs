use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix with arbitrary-precision entries, row-major.
///
/// Everything downstream (boundary maps, Smith form, presentations) is exact;
/// intermediate entries during elimination can blow up far past machine words,
/// which is why the entries are `BigInt` and not `i64`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    /// Build from machine-integer rows; panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        assert!(cols.iter().all(|col| col.len() == rows), "column length mismatch");
        IntMatrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<BigInt>> + '_ {
        (0..self.cols).map(|j| self.column(j))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Side-by-side concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        IntMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { other.get(i, j - self.cols).clone() }
        })
    }

    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "vstack col mismatch");
        IntMatrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self.get(i, j).clone() } else { other.get(i - self.rows, j).clone() }
        })
    }

    /// Rows `lo..hi` as a new matrix.
    pub fn row_slice(&self, lo: usize, hi: usize) -> IntMatrix {
        assert!(lo <= hi && hi <= self.rows);
        IntMatrix::from_fn(hi - lo, self.cols, |i, j| self.get(lo + i, j).clone())
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn map(&self, mut f: impl FnMut(&BigInt) -> BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += m * row[src]
    pub fn row_add(&mut self, dst: usize, src: usize, m: &BigInt) {
        if m.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * m;
            let idx = dst * self.cols + j;
            self.entries[idx] += v;
        }
    }

    /// col[dst] += m * col[src]
    pub fn col_add(&mut self, dst: usize, src: usize, m: &BigInt) {
        if m.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * m;
            let idx = i * self.cols + dst;
            self.entries[idx] += v;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            let v = -&self.entries[idx];
            self.entries[idx] = v;
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + c;
            let v = -&self.entries[idx];
            self.entries[idx] = v;
        }
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or_else(BigInt::zero)
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_i64()).collect())
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
