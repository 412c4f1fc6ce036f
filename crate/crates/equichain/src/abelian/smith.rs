use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Smith normal form `U * A * V = D` with `D` diagonal, `d1 | d2 | ... | dk`,
/// all pivots positive, zero rows/columns trailing. `U`, `V` are unimodular and
/// their inverses are tracked alongside so that solving and preimage selection
/// are cheap back-substitutions instead of fresh eliminations.
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// The nonzero diagonal entries, in divisibility order.
    pub pivots: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Position of the entry with smallest nonzero absolute value in the trailing
/// submatrix starting at (k, k); row-major scan so ties go to the lowest index.
/// This fixed rule is what makes every downstream presentation deterministic.
fn pivot_position(b: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in k..b.rows() {
        for j in k..b.cols() {
            let e = b.get(i, j);
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            match &best {
                Some((m, _, _)) if *m <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut b = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut u_inv = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut v_inv = IntMatrix::identity(n);

    let mut k = 0;
    while k < m.min(n) {
        let Some((pi, pj)) = pivot_position(&b, k) else { break };
        // Move chosen pivot to (k, k); mirror every operation on the trackers.
        b.swap_rows(k, pi);
        u.swap_rows(k, pi);
        u_inv.swap_cols(k, pi);
        b.swap_cols(k, pj);
        v.swap_cols(k, pj);
        v_inv.swap_rows(k, pj);

        loop {
            let mut dirty = false;
            // Clear column k below the pivot; floor-division remainders < |pivot| stay behind.
            for i in k + 1..m {
                if b.get(i, k).is_zero() {
                    continue;
                }
                let q = -b.get(i, k).div_floor(b.get(k, k));
                b.row_add(i, k, &q);
                u.row_add(i, k, &q);
                u_inv.col_add(k, i, &-&q);
                if !b.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            // Clear row k to the right of the pivot.
            for j in k + 1..n {
                if b.get(k, j).is_zero() {
                    continue;
                }
                let q = -b.get(k, j).div_floor(b.get(k, k));
                b.col_add(j, k, &q);
                v.col_add(j, k, &q);
                v_inv.row_add(k, j, &-&q);
                if !b.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Pivot must divide the whole trailing submatrix, so that the
                // diagonal comes out in divisibility order; if not, fold the
                // offending row in and keep reducing.
                let mut fixed = true;
                'scan: for i in k + 1..m {
                    for j in k + 1..n {
                        if !b.get(i, j).mod_floor(b.get(k, k)).is_zero() {
                            let one = BigInt::one();
                            b.row_add(k, i, &one);
                            u.row_add(k, i, &one);
                            u_inv.col_add(i, k, &-&one);
                            fixed = false;
                            break 'scan;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
            // Re-select: some entry now has smaller absolute value than the pivot.
            let (pi, pj) = pivot_position(&b, k).expect("nonzero entry survives reduction");
            b.swap_rows(k, pi);
            u.swap_rows(k, pi);
            u_inv.swap_cols(k, pi);
            b.swap_cols(k, pj);
            v.swap_cols(k, pj);
            v_inv.swap_rows(k, pj);
        }
        if b.get(k, k).is_negative() {
            b.negate_row(k);
            u.negate_row(k);
            u_inv.negate_col(k);
        }
        k += 1;
    }

    let pivots: Vec<BigInt> = (0..k).map(|i| b.get(i, i).clone()).collect();
    debug_assert!(pivots.windows(2).all(|w| w[1].mod_floor(&w[0]).is_zero()));
    SmithForm { d: b, u, u_inv, v, v_inv, pivots }
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank()
}

/// Basis of `ker(A)` over the integers. The columns are the trailing columns
/// of the unimodular `V`, hence a *saturated* lattice basis: any integer cycle
/// is an integer (not merely rational) combination of them.
pub fn kernel_basis_z(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let r = s.rank();
    IntMatrix::from_fn(a.cols(), a.cols() - r, |i, j| s.v.get(i, r + j).clone())
}

/// Solve `A X = B` column by column, exactly over ℤ. `None` if any column has
/// no integral solution. Free coordinates are set to zero, which together with
/// the fixed pivot rule makes the returned preimage deterministic.
pub fn solve_columns(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(a.rows(), b.rows(), "solve dimension mismatch");
    let s = smith_normal_form(a);
    let r = s.rank();
    let y = s.u.mul(b);
    let mut x = IntMatrix::zeros(a.cols(), b.cols());
    for c in 0..b.cols() {
        for i in 0..a.rows() {
            let yi = y.get(i, c);
            if i < r {
                let (q, rem) = yi.div_mod_floor(&s.pivots[i]);
                if !rem.is_zero() {
                    return None;
                }
                if i < a.cols() {
                    x.set(i, c, q);
                }
            } else if !yi.is_zero() {
                return None;
            }
        }
    }
    Some(s.v.mul(&x))
}

/// Does `col-span(span)` contain every column of `vectors`?
pub fn lattice_contains(span: &IntMatrix, vectors: &IntMatrix) -> bool {
    solve_columns(span, vectors).is_some()
}

/// Generators of the lattice `{ x : M x ∈ col-span(span) }`, obtained by
/// projecting the kernel of `[M | -span]` onto the first block of coordinates.
/// The columns generate the preimage lattice; they need not be independent.
pub fn preimage_generators(m: &IntMatrix, span: &IntMatrix) -> IntMatrix {
    assert_eq!(m.rows(), span.rows(), "preimage dimension mismatch");
    let stacked = m.hstack(&span.neg());
    let ker = kernel_basis_z(&stacked);
    ker.row_slice(0, m.cols())
}
