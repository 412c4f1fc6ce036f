//! Exact linear algebra over the prime field Z/p. Entries live in `u64`
//! (reduced representatives), which is exact for any prime that fits; the
//! arbitrary-precision machinery is only needed on the integral side.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matrix::IntMatrix;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on i128; p prime, a != 0 mod p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible mod p");
    (t.rem_euclid(p as i128)) as u64
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModMatrix {
    pub p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        ModMatrix { p, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = ModMatrix::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_int(a: &IntMatrix, p: u64) -> Self {
        let bp = BigInt::from(p);
        ModMatrix::from_fn(p, a.rows(), a.cols(), |i, j| {
            a.get(i, j).mod_floor(&bp).to_u64().expect("reduced residue fits u64")
        })
    }

    pub fn from_fn(p: u64, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j) % p);
            }
        }
        ModMatrix { p, rows, cols, entries }
    }

    /// Lift to an integer matrix with entries in 0..p.
    pub fn lift(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| BigInt::from(self.get(i, j)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.cols + j] = v % self.p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p;
        let mut out = ModMatrix::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.entries[idx] = (out.entries[idx] + a * other.get(k, j)) % p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc: u64 = 0;
                for j in 0..self.cols {
                    acc = (acc + self.get(i, j) * (v[j] % self.p)) % self.p;
                }
                acc
            })
            .collect()
    }

    pub fn hstack(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.p, other.p);
        ModMatrix::from_fn(self.p, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self.get(i, j) } else { other.get(i, j - self.cols) }
        })
    }

    pub fn vstack(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        ModMatrix::from_fn(self.p, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self.get(i, j) } else { other.get(i - self.rows, j) }
        })
    }

    pub fn row_slice(&self, lo: usize, hi: usize) -> ModMatrix {
        assert!(lo <= hi && hi <= self.rows);
        ModMatrix::from_fn(self.p, hi - lo, self.cols, |i, j| self.get(lo + i, j))
    }

    pub fn neg(&self) -> ModMatrix {
        ModMatrix::from_fn(self.p, self.rows, self.cols, |i, j| (self.p - self.get(i, j)) % self.p)
    }

    pub fn sub(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ModMatrix::from_fn(self.p, self.rows, self.cols, |i, j| {
            (self.p + self.get(i, j) - other.get(i, j)) % self.p
        })
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    /// Deterministic: pivots are the first nonzero entry scanning top to bottom.
    pub fn rref(&self) -> (ModMatrix, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else { continue };
            for j in 0..m.cols {
                m.entries.swap(row * m.cols + j, pr * m.cols + j);
            }
            let inv = inv_mod(m.get(row, col), p);
            for j in 0..m.cols {
                let idx = row * m.cols + j;
                m.entries[idx] = m.entries[idx] * inv % p;
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col) == 0 {
                    continue;
                }
                let f = m.get(r, col);
                for j in 0..m.cols {
                    let sub = f * m.get(row, j) % p;
                    let idx = r * m.cols + j;
                    m.entries[idx] = (m.entries[idx] + p - sub) % p;
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

    /// Basis of the null space; one column per free variable, in column order.
    pub fn kernel(&self) -> ModMatrix {
        let p = self.p;
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(row, &col)| (col, row)).collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains_key(c)).collect();
        let mut out = ModMatrix::zeros(p, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, 1);
            for (&pc, &prow) in &pivot_set {
                let v = r.get(prow, f);
                if v != 0 {
                    out.set(pc, k, p - v);
                }
            }
        }
        out
    }

    /// Solve `self * X = B`; `None` if inconsistent. Free variables set to 0.
    pub fn solve(&self, b: &ModMatrix) -> Option<ModMatrix> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = ModMatrix::zeros(self.p, self.cols, b.cols());
        for (row, &col) in pivots.iter().enumerate() {
            for j in 0..b.cols() {
                x.set(col, j, r.get(row, self.cols + j));
            }
        }
        Some(x)
    }
}

/// Incremental forward-elimination span tracker over Z/p. Feeding vectors in a
/// fixed order yields a deterministic choice of representatives: `insert`
/// answers whether the vector enlarged the span.
#[derive(Clone)]
pub struct SpanBuilder {
    p: u64,
    dim: usize,
    /// reduced vectors, each with its leading index
    rows: Vec<(usize, Vec<u64>)>,
}

impl SpanBuilder {
    pub fn new(p: u64, dim: usize) -> Self {
        SpanBuilder { p, dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut Vec<u64>) {
        for (lead, row) in &self.rows {
            let c = v[*lead];
            if c != 0 {
                for i in 0..self.dim {
                    v[i] = (v[i] + (self.p - c) * row[i]) % self.p;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w: Vec<u64> = v.iter().map(|x| x % self.p).collect();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Returns true iff the vector was independent of the current span.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut w: Vec<u64> = v.iter().map(|x| x % self.p).collect();
        self.reduce(&mut w);
        let Some(lead) = (0..self.dim).find(|&i| w[i] != 0) else { return false };
        let inv = inv_mod(w[lead], self.p);
        for x in w.iter_mut() {
            *x = *x * inv % self.p;
        }
        self.rows.push((lead, w));
        true
    }

    pub fn insert_columns(&mut self, m: &ModMatrix) {
        for j in 0..m.cols() {
            self.insert(&m.column(j));
        }
    }
}

/// Rank of the column span of `m` (shorthand used by the spectral machinery).
pub fn col_rank(m: &ModMatrix) -> usize {
    let mut s = SpanBuilder::new(m.p, m.rows());
    s.insert_columns(m);
    s.rank()
}
