//! Hypercohomology of a prime-order action: the first-quadrant-below-the-
//! axis double complex with columns C_s(X) and rows built from the
//! 2-periodic resolution of the cyclic group, its total complex, the graded
//! groups S_n(G,X), and the cohomology of cyclic-group modules that
//! identifies the rows.

pub mod pages;

pub use pages::{collapse_check, e_infinity, page, Filtration, SpectralPage};

use num_traits::Zero;

use crate::abelian::{
    kernel_basis_z, lattice_contains, preimage_generators, subquotient_of_lattices, AbelianGroup,
    IntMatrix, Subquotient,
};
use crate::complexes::EquivariantChainComplex;
use crate::error::{Error, Result};
use crate::homology::Coeff;

/// The double complex: block (s, t) for 0 <= s <= d and t <= 0 holds
/// C_s(X), the horizontal differential is the boundary, and the vertical
/// differential out of row t is (g - 1) for t even and the norm
/// N = 1 + g + ... + g^{p-1} for t odd, with the Koszul sign (-1)^s folded
/// into the total differential.
pub(crate) struct Tower {
    pub d: i64,
    pub cells: Vec<usize>,
    boundaries: Vec<IntMatrix>,
    /// per dimension: g - 1 and N for the designated generator
    v_even: Vec<IntMatrix>,
    v_odd: Vec<IntMatrix>,
}

impl Tower {
    pub fn new(x: &EquivariantChainComplex) -> Result<Tower> {
        let (p, g) = x.group().prime_order_generator()?;
        let d = x.top_dim();
        let mut cells = Vec::new();
        let mut boundaries = Vec::new();
        let mut v_even = Vec::new();
        let mut v_odd = Vec::new();
        for s in 0..=d.max(-1) {
            let n = x.cells(s);
            cells.push(n);
            boundaries.push(x.boundary(s));
            let a = x.action_matrix(g, s as usize);
            let id = IntMatrix::identity(n);
            v_even.push(a.sub(&id));
            let mut norm = IntMatrix::zeros(n, n);
            let mut power = id;
            for _ in 0..p {
                norm = norm.add(&power);
                power = power.mul(&a);
            }
            v_odd.push(norm);
        }
        Ok(Tower { d, cells, boundaries, v_even, v_odd })
    }

    /// column indices s present in Tot_n, ascending
    pub fn blocks(&self, n: i64) -> Vec<i64> {
        if n > self.d {
            return vec![];
        }
        (n.max(0)..=self.d).collect()
    }

    pub fn block_sizes(&self, n: i64) -> Vec<usize> {
        self.blocks(n).iter().map(|&s| self.cells[s as usize]).collect()
    }

    pub fn tot_size(&self, n: i64) -> usize {
        self.block_sizes(n).iter().sum()
    }

    fn offsets(sizes: &[usize]) -> Vec<usize> {
        let mut off = vec![0];
        for s in sizes {
            off.push(off.last().unwrap() + s);
        }
        off
    }

    /// the total differential Tot_n -> Tot_{n-1}
    pub fn boundary(&self, n: i64) -> IntMatrix {
        let src = self.blocks(n);
        let tgt = self.blocks(n - 1);
        let src_sizes = self.block_sizes(n);
        let tgt_sizes = self.block_sizes(n - 1);
        let src_off = Self::offsets(&src_sizes);
        let tgt_off = Self::offsets(&tgt_sizes);
        let pos = |s: i64, list: &[i64]| list.iter().position(|&x| x == s);

        let mut m = IntMatrix::zeros(tgt_sizes.iter().sum(), src_sizes.iter().sum());
        let put = |m: &mut IntMatrix, r0: usize, c0: usize, b: &IntMatrix, negate: bool| {
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    let v = b.get(r, c);
                    if !v.is_zero() {
                        m.set(r0 + r, c0 + c, if negate { -v.clone() } else { v.clone() });
                    }
                }
            }
        };
        for (bi, &s) in src.iter().enumerate() {
            let t = n - s;
            let c0 = src_off[bi];
            // horizontal: ∂_s into column s-1, same row
            if s >= 1 {
                if let Some(tj) = pos(s - 1, &tgt) {
                    put(&mut m, tgt_off[tj], c0, &self.boundaries[s as usize], false);
                }
            }
            // vertical: row t -> t-1 in the same column, signed by (-1)^s
            if let Some(tj) = pos(s, &tgt) {
                let v = if t.rem_euclid(2) == 0 {
                    &self.v_even[s as usize]
                } else {
                    &self.v_odd[s as usize]
                };
                put(&mut m, tgt_off[tj], c0, v, s.rem_euclid(2) == 1);
            }
        }
        m
    }
}

/// The hypercohomology groups S_n(G, X) for n in `lo..=hi`, computed as the
/// homology of the total complex. Coefficients: Z or Z/p.
pub fn s_groups(
    x: &EquivariantChainComplex,
    coeff: Coeff,
    lo: i64,
    hi: i64,
) -> Result<Vec<(i64, AbelianGroup)>> {
    if coeff == Coeff::Q {
        return Err(Error::BadParameter(
            "rational coefficients are not supported for hypercohomology".into(),
        ));
    }
    let tower = Tower::new(x)?;
    let mut out = Vec::new();
    for n in lo..=hi {
        if tower.tot_size(n) == 0 {
            out.push((n, AbelianGroup::trivial()));
            continue;
        }
        let dn = tower.boundary(n);
        let dn1 = tower.boundary(n + 1);
        let group = match coeff {
            Coeff::Z => {
                let cycles = kernel_basis_z(&dn);
                Subquotient::new(cycles, &dn1, None)?.group
            }
            Coeff::Zp(p) => {
                let cycles = crate::abelian::ModMatrix::from_int(&dn, p).kernel().lift();
                Subquotient::new(cycles, &dn1, Some(p))?.group
            }
            Coeff::Q => unreachable!(),
        };
        out.push((n, group));
    }
    Ok(out)
}

/// Cohomology of a cyclic group with coefficients in a finitely generated
/// module: the module is presented by `rels` on `gens` generators, the
/// designated generator acts through `a`, and `order` is the group order.
/// Degree 0 is the invariants; positive even degrees are
/// ker(g-1)/im(N); odd degrees are ker(N)/im(g-1).
pub fn cyclic_cohomology(
    gens: usize,
    rels: &IntMatrix,
    a: &IntMatrix,
    order: u64,
    k: i64,
) -> Result<AbelianGroup> {
    if k < 0 {
        return Err(Error::BadParameter(format!("cohomological degree {k} is negative")));
    }
    if a.rows() != gens || a.cols() != gens || rels.rows() != gens {
        return Err(Error::BadParameter("module action has the wrong shape".into()));
    }
    // the action must preserve the relations and have the stated order
    if !lattice_contains(rels, &a.mul(rels)) {
        return Err(Error::NotAnAutomorphism(
            "the action does not preserve the module relations".into(),
        ));
    }
    let mut power = IntMatrix::identity(gens);
    let mut norm = IntMatrix::zeros(gens, gens);
    for _ in 0..order {
        norm = norm.add(&power);
        power = power.mul(a);
    }
    let diff = power.sub(&IntMatrix::identity(gens));
    if !lattice_contains(rels, &diff) {
        return Err(Error::NotAnAutomorphism(format!(
            "the action does not have order dividing {order} on the module"
        )));
    }

    let g_minus_1 = a.sub(&IntMatrix::identity(gens));
    let ker = |m: &IntMatrix| preimage_generators(m, rels);
    let group = if k == 0 {
        subquotient_of_lattices(&ker(&g_minus_1), rels)
    } else if k % 2 == 0 {
        subquotient_of_lattices(&ker(&g_minus_1), &norm.hstack(rels))
    } else {
        subquotient_of_lattices(&ker(&norm), &g_minus_1.hstack(rels))
    };
    Ok(group)
}

/// The integral first page, row by row: the degree-0 row is the invariant
/// chains, odd rows vanish, and even rows below the axis are the norm
/// cokernels D_s; taking horizontal homology then gives H_s(G,X;Z) on the
/// axis and H_s(X^G;Z/p) on the even rows below it.
pub struct RowIdentifications {
    pub p: u64,
    /// E^1(s, 0) = invariant chains: one rank per column
    pub row_zero_ranks: Vec<usize>,
    pub odd_rows_vanish: bool,
    /// E^1(s, t) for even t < 0, per column: the groups D_s
    pub even_rows: Vec<AbelianGroup>,
    /// E^2(s, 0) = H_s(G, X; Z)
    pub row_zero_homology: Vec<AbelianGroup>,
    /// E^2(s, t) for even t < 0 = H_s(X^G; Z/p)
    pub even_row_homology: Vec<AbelianGroup>,
}

pub fn integral_row_identifications(x: &EquivariantChainComplex) -> Result<RowIdentifications> {
    let (p, g) = x.group().prime_order_generator()?;
    let d = x.top_dim();
    let mut row_zero_ranks = Vec::new();
    let mut odd_rows_vanish = true;
    let mut even_rows = Vec::new();
    for s in 0..=d {
        let n = x.cells(s);
        let a = x.action_matrix(g, s as usize);
        let none = IntMatrix::zeros(n, 0);
        let inv = cyclic_cohomology(n, &none, &a, p, 0)?;
        row_zero_ranks.push(inv.free_rank());
        let odd = cyclic_cohomology(n, &none, &a, p, 1)?;
        if !odd.is_trivial() {
            odd_rows_vanish = false;
        }
        even_rows.push(cyclic_cohomology(n, &none, &a, p, 2)?);
    }
    let row_zero_homology = crate::homology::equivariant_homology(x, Coeff::Z)?.groups();
    let even_row_homology = crate::homology::fixed_homology(x, Coeff::Zp(p))?.groups();
    Ok(RowIdentifications {
        p,
        row_zero_ranks,
        odd_rows_vanish,
        even_rows,
        row_zero_homology,
        even_row_homology,
    })
}

/// `true` when the even rows of the first page match the norm cokernels
/// computed by the quotient functor, degree by degree.
pub fn rows_match_norm_cokernels(x: &EquivariantChainComplex) -> Result<bool> {
    let rows = integral_row_identifications(x)?;
    let dq = crate::functors::quotient_d(x)?;
    Ok(rows.even_rows == dq.groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::tests::reflection_circle;
    use num_bigint::BigInt;
    use crate::complexes::{ChainComplex, EquivariantChainComplex, FiniteGroup};
    use crate::functors::tests::{reflection_sphere, rotation_circle};

    fn point(p: usize) -> EquivariantChainComplex {
        EquivariantChainComplex::with_trivial_action(
            FiniteGroup::cyclic(p),
            ChainComplex::new(vec![1], vec![]).unwrap(),
        )
    }

    fn groups(v: &[(i64, AbelianGroup)]) -> Vec<AbelianGroup> {
        v.iter().map(|(_, g)| g.clone()).collect()
    }

    #[test]
    fn total_differential_squares_to_zero() {
        for x in [reflection_circle(), reflection_sphere(), rotation_circle(3)] {
            let t = Tower::new(&x).unwrap();
            for n in -4..=x.top_dim() + 1 {
                let prod = t.boundary(n).mul(&t.boundary(n + 1));
                assert!(prod.is_zero(), "D^2 != 0 at n = {n}");
            }
        }
    }

    #[test]
    fn point_recovers_group_cohomology_of_z() {
        // S_{-m}(Z/p, pt) = H^m(Z/p; Z): Z, 0, Z/p, 0, Z/p, ...
        for p in [2u64, 3] {
            let x = point(p as usize);
            let s = s_groups(&x, Coeff::Z, -6, 1).unwrap();
            let lookup = |n: i64| s.iter().find(|(m, _)| *m == n).unwrap().1.clone();
            assert_eq!(lookup(1), AbelianGroup::trivial());
            assert_eq!(lookup(0), AbelianGroup::free(1));
            for m in [-1i64, -3, -5] {
                assert_eq!(lookup(m), AbelianGroup::trivial(), "degree {m}");
            }
            for m in [-2i64, -4, -6] {
                assert_eq!(lookup(m), AbelianGroup::cyclic(p), "degree {m}");
            }
        }
    }

    #[test]
    fn point_mod_p_is_nonzero_in_every_nonpositive_degree() {
        let x = point(3);
        let s = s_groups(&x, Coeff::Zp(3), -4, 0).unwrap();
        for (_, g) in s {
            assert_eq!(g, AbelianGroup::vector_space(3, 1));
        }
    }

    #[test]
    fn s_groups_vanish_above_the_dimension() {
        let x = reflection_circle();
        let s = s_groups(&x, Coeff::Z, 2, 4).unwrap();
        assert!(groups(&s).iter().all(|g| g.is_trivial()));
    }

    #[test]
    fn s_groups_are_two_periodic_below_minus_one() {
        for x in [reflection_circle(), rotation_circle(3)] {
            let s = s_groups(&x, Coeff::Z, -7, -1).unwrap();
            let lookup = |n: i64| s.iter().find(|(m, _)| *m == n).unwrap().1.clone();
            for n in [-1i64, -2, -3] {
                assert_eq!(lookup(n), lookup(n - 2), "S_{n} vs S_{}", n - 2);
            }
        }
    }

    #[test]
    fn cyclic_cohomology_of_trivial_z_module() {
        // H^k(Z/p; Z) = Z, 0, Z/p, 0, Z/p, ...
        let a = IntMatrix::identity(1);
        let rels = IntMatrix::zeros(1, 0);
        for p in [2u64, 5] {
            assert_eq!(cyclic_cohomology(1, &rels, &a, p, 0).unwrap(), AbelianGroup::free(1));
            assert_eq!(cyclic_cohomology(1, &rels, &a, p, 1).unwrap(), AbelianGroup::trivial());
            assert_eq!(cyclic_cohomology(1, &rels, &a, p, 2).unwrap(), AbelianGroup::cyclic(p));
            assert_eq!(cyclic_cohomology(1, &rels, &a, p, 7).unwrap(), AbelianGroup::trivial());
            assert_eq!(cyclic_cohomology(1, &rels, &a, p, 8).unwrap(), AbelianGroup::cyclic(p));
        }
    }

    #[test]
    fn cyclic_cohomology_of_sign_module() {
        // Z with g = -1, order 2: invariants 0, odd degrees Z/2, even 0
        let a = IntMatrix::from_rows(&[vec![-1]]);
        let rels = IntMatrix::zeros(1, 0);
        assert_eq!(cyclic_cohomology(1, &rels, &a, 2, 0).unwrap(), AbelianGroup::trivial());
        assert_eq!(cyclic_cohomology(1, &rels, &a, 2, 1).unwrap(), AbelianGroup::cyclic(2));
        assert_eq!(cyclic_cohomology(1, &rels, &a, 2, 2).unwrap(), AbelianGroup::trivial());
        assert_eq!(cyclic_cohomology(1, &rels, &a, 2, 3).unwrap(), AbelianGroup::cyclic(2));
    }

    #[test]
    fn cyclic_cohomology_of_mod_p_trivial_module() {
        // Z/p with the trivial action: Z/p in every degree
        for p in [2u64, 3] {
            let a = IntMatrix::identity(1);
            let rels = IntMatrix::from_rows(&[vec![p as i64]]);
            for k in 0..5 {
                assert_eq!(
                    cyclic_cohomology(1, &rels, &a, p, k).unwrap(),
                    AbelianGroup::cyclic(p),
                    "degree {k}"
                );
            }
        }
    }

    #[test]
    fn cyclic_cohomology_rejects_bad_actions() {
        // doubling is injective but not an automorphism of order 2 on Z
        let a = IntMatrix::from_rows(&[vec![2]]);
        let rels = IntMatrix::zeros(1, 0);
        assert!(matches!(
            cyclic_cohomology(1, &rels, &a, 2, 0),
            Err(Error::NotAnAutomorphism(_))
        ));
        // the action must preserve relations: x -> x+y on Z ⊕ Z/2 with rels <2y>
        let a = IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]);
        let rels = IntMatrix::from_rows(&[vec![0], vec![2]]);
        // g(2y) = 2y is fine; g^2(x) = x + 2y = x in the module: actually valid
        assert!(cyclic_cohomology(2, &rels, &a, 2, 0).is_ok());
    }

    #[test]
    fn row_identifications_on_the_reflection_circle() {
        let x = reflection_circle();
        let rows = integral_row_identifications(&x).unwrap();
        assert!(rows.odd_rows_vanish);
        // invariant chains: two vertex orbits, one edge orbit
        assert_eq!(rows.row_zero_ranks, vec![2, 1]);
        // even rows: Z/2 per fixed cell
        assert_eq!(rows.even_rows[0], AbelianGroup::vector_space(2, 2));
        assert_eq!(rows.even_rows[1], AbelianGroup::trivial());
        // second-page rows
        assert_eq!(
            rows.row_zero_homology,
            vec![
                AbelianGroup::new(1, vec![BigInt::from(2)]),
                AbelianGroup::trivial()
            ]
        );
        assert_eq!(rows.even_row_homology, vec![AbelianGroup::vector_space(2, 2), AbelianGroup::trivial()]);
        assert!(rows_match_norm_cokernels(&x).unwrap());
    }

    #[test]
    fn row_identifications_on_free_and_sphere_examples() {
        for x in [rotation_circle(5), reflection_sphere()] {
            let rows = integral_row_identifications(&x).unwrap();
            assert!(rows.odd_rows_vanish);
            assert!(rows_match_norm_cokernels(&x).unwrap());
        }
        // free action: all even rows vanish
        let rows = integral_row_identifications(&rotation_circle(5)).unwrap();
        assert!(rows.even_rows.iter().all(|g| g.is_trivial()));
    }
}
