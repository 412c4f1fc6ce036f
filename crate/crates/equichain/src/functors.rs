//! The derived complexes of a group action: invariant subcomplex (orbit-sum
//! basis), coinvariant complex (the chains of the quotient), fixed
//! subcomplex, the norm map between coinvariants and invariants, and its
//! cokernel — which for a prime-order group is the mod-p chain complex of
//! the fixed subcomplex.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abelian::{AbelianGroup, IntMatrix, ModMatrix, Presentation};
use crate::complexes::{ChainComplex, ChainMap, EquivariantChainComplex};
use crate::error::{Error, Result};

/// One orbit of cells in a fixed dimension. Signs are relative to the
/// representative (which is the smallest cell index in the orbit and always
/// carries +1). On an admissible complex the sign of each cell is
/// independent of the group element used to reach it; when that fails,
/// `stabilizer_sign_ok` is false and the orbit supports no invariant chain.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub rep: usize,
    /// (cell, sign) pairs in discovery order (group-element order), rep first.
    pub cells: Vec<(usize, i64)>,
    /// one group element per entry of `cells`, carrying rep there.
    pub coset_reps: Vec<usize>,
    pub stabilizer_order: usize,
    pub stabilizer_sign_ok: bool,
}

impl Orbit {
    pub fn is_fixed_cell(&self) -> bool {
        self.cells.len() == 1
    }
}

/// Orbits per dimension, with a reverse index from cells to orbits.
#[derive(Clone, Debug)]
pub struct OrbitBasis {
    pub per_dim: Vec<Vec<Orbit>>,
    /// lookup[k][cell] = (orbit index, sign of cell relative to its rep)
    lookup: Vec<Vec<(usize, i64)>>,
}

impl OrbitBasis {
    pub fn counts(&self) -> Vec<usize> {
        self.per_dim.iter().map(|v| v.len()).collect()
    }

    pub fn orbits(&self, k: i64) -> &[Orbit] {
        if k < 0 || k >= self.per_dim.len() as i64 {
            &[]
        } else {
            &self.per_dim[k as usize]
        }
    }

    pub fn orbit_of(&self, k: usize, cell: usize) -> (usize, i64) {
        self.lookup[k][cell]
    }

    /// Indices of the orbits that are single G-fixed cells, ascending.
    pub fn fixed_orbit_indices(&self, k: i64) -> Vec<usize> {
        self.orbits(k)
            .iter()
            .enumerate()
            .filter(|(_, o)| o.is_fixed_cell())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Partition every dimension's cells into orbits, tracking signs.
pub fn orbit_basis(x: &EquivariantChainComplex) -> OrbitBasis {
    let d = x.top_dim();
    let n = x.group().order();
    let mut per_dim = Vec::new();
    let mut lookup = Vec::new();
    for k in 0..=d {
        let k = k as usize;
        let cells = x.cells(k as i64);
        let mut orbits: Vec<Orbit> = Vec::new();
        let mut cell_lookup = vec![(usize::MAX, 0i64); cells];
        let mut visited = vec![false; cells];
        for c in 0..cells {
            if visited[c] {
                continue;
            }
            let mut orbit = Orbit {
                rep: c,
                cells: Vec::new(),
                coset_reps: Vec::new(),
                stabilizer_order: 0,
                stabilizer_sign_ok: true,
            };
            let mut sign_of = vec![None::<i64>; cells];
            for g in 0..n {
                let (img, s) = x.apply(g, k, c);
                match sign_of[img] {
                    None => {
                        sign_of[img] = Some(s);
                        visited[img] = true;
                        orbit.cells.push((img, s));
                        orbit.coset_reps.push(g);
                    }
                    Some(prev) => {
                        if prev != s {
                            // some element stabilizes a cell of this orbit
                            // with sign -1 (inadmissible)
                            orbit.stabilizer_sign_ok = false;
                        }
                    }
                }
            }
            orbit.stabilizer_order = n / orbit.cells.len();
            let idx = orbits.len();
            for &(cell, s) in &orbit.cells {
                cell_lookup[cell] = (idx, s);
            }
            orbits.push(orbit);
        }
        per_dim.push(orbits);
        lookup.push(cell_lookup);
    }
    OrbitBasis { per_dim, lookup }
}

/// The invariant subcomplex in its orbit-sum basis, with the inclusion into
/// the ambient chains (one column per orbit sum).
#[derive(Clone, Debug)]
pub struct InvariantComplex {
    pub complex: ChainComplex,
    pub basis: OrbitBasis,
    /// inclusion[k]: ambient cells x orbits
    pub inclusion: Vec<IntMatrix>,
}

pub fn invariant_complex(x: &EquivariantChainComplex) -> InvariantComplex {
    let basis = orbit_basis(x);
    let d = x.top_dim();
    if d < 0 {
        return InvariantComplex {
            complex: ChainComplex::empty(),
            basis,
            inclusion: vec![],
        };
    }
    let mut inclusion = Vec::new();
    let mut counts = Vec::new();
    for k in 0..=d {
        let orbits: Vec<&Orbit> = basis
            .orbits(k)
            .iter()
            .filter(|o| o.stabilizer_sign_ok)
            .collect();
        let mut m = IntMatrix::zeros(x.cells(k), orbits.len());
        for (j, o) in orbits.iter().enumerate() {
            for &(cell, sign) in &o.cells {
                m.set(cell, j, BigInt::from(sign));
            }
        }
        counts.push(orbits.len());
        inclusion.push(m);
    }
    // boundary in the orbit-sum basis: an invariant chain's coordinate on an
    // orbit sum is its coefficient at the orbit representative.
    let mut boundaries = Vec::new();
    for k in 1..=d {
        let ambient = x.boundary(k).mul(&inclusion[k as usize]);
        let lower: Vec<&Orbit> = basis
            .orbits(k - 1)
            .iter()
            .filter(|o| o.stabilizer_sign_ok)
            .collect();
        let mut b = IntMatrix::zeros(lower.len(), counts[k as usize]);
        for (i, o) in lower.iter().enumerate() {
            for j in 0..b.cols() {
                b.set(i, j, ambient.get(o.rep, j).clone());
            }
        }
        boundaries.push(b);
    }
    InvariantComplex {
        complex: ChainComplex::new(counts, boundaries).expect("orbit basis shapes agree"),
        basis,
        inclusion,
    }
}

/// The coinvariant complex: free on orbits, with the signed projection from
/// the ambient chains. For an unsigned action this is literally the cellular
/// chain complex of the quotient space.
#[derive(Clone, Debug)]
pub struct CoinvariantComplex {
    pub complex: ChainComplex,
    pub basis: OrbitBasis,
    /// ambient -> quotient chain map
    pub projection: ChainMap,
}

pub fn coinvariant_complex(x: &EquivariantChainComplex) -> Result<CoinvariantComplex> {
    let basis = orbit_basis(x);
    let d = x.top_dim();
    if d < 0 {
        return Ok(CoinvariantComplex {
            complex: ChainComplex::empty(),
            basis,
            projection: ChainMap::new(ChainComplex::empty(), ChainComplex::empty(), vec![])?,
        });
    }
    for k in 0..=d {
        for o in basis.orbits(k) {
            if !o.stabilizer_sign_ok {
                return Err(Error::SignedOrbit(format!(
                    "orbit of dim-{k} cell {} is stabilized with sign -1; its coinvariant class is torsion, not a quotient cell",
                    x.label(k as usize, o.rep)
                )));
            }
        }
    }
    let mut proj = Vec::new();
    let mut counts = Vec::new();
    for k in 0..=d {
        let orbits = basis.orbits(k);
        let mut m = IntMatrix::zeros(orbits.len(), x.cells(k));
        for (i, o) in orbits.iter().enumerate() {
            for &(cell, sign) in &o.cells {
                m.set(i, cell, BigInt::from(sign));
            }
        }
        counts.push(orbits.len());
        proj.push(m);
    }
    let mut boundaries = Vec::new();
    for k in 1..=d {
        let orbits = basis.orbits(k);
        let mut b = IntMatrix::zeros(counts[(k - 1) as usize], orbits.len());
        let ambient = x.boundary(k);
        for (j, o) in orbits.iter().enumerate() {
            // boundary of the orbit generator = projected boundary of its rep
            for r in 0..ambient.rows() {
                let v = ambient.get(r, o.rep);
                if !v.is_zero() {
                    let (oi, s) = basis.orbit_of((k - 1) as usize, r);
                    b.set(oi, j, b.get(oi, j) + BigInt::from(s) * v);
                }
            }
        }
        boundaries.push(b);
    }
    let quotient = ChainComplex::new(counts, boundaries)?;
    let projection = ChainMap::new(x.complex().clone(), quotient.clone(), proj)?;
    if let Some(k) = projection.boundary_violation() {
        return Err(Error::Internal(format!(
            "coinvariant projection fails to be a chain map at dim {k}"
        )));
    }
    Ok(CoinvariantComplex { complex: quotient, basis, projection })
}

/// The subcomplex of cells fixed (with sign +1) by every group element.
#[derive(Clone, Debug)]
pub struct FixedComplex {
    pub complex: ChainComplex,
    /// ambient indices of the fixed cells, per dimension, ascending
    pub cells: Vec<Vec<usize>>,
    /// inclusion[k]: ambient cells x fixed cells
    pub inclusion: Vec<IntMatrix>,
}

pub fn fixed_complex(x: &EquivariantChainComplex) -> Result<FixedComplex> {
    let d = x.top_dim();
    if d < 0 {
        return Ok(FixedComplex { complex: ChainComplex::empty(), cells: vec![], inclusion: vec![] });
    }
    let n = x.group().order();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for k in 0..=d {
        let k = k as usize;
        let fixed: Vec<usize> = (0..x.cells(k as i64))
            .filter(|&c| (0..n).all(|g| x.apply(g, k, c) == (c, 1)))
            .collect();
        cells.push(fixed);
    }
    let mut counts = Vec::new();
    let mut inclusion = Vec::new();
    for (k, fixed) in cells.iter().enumerate() {
        counts.push(fixed.len());
        let mut m = IntMatrix::zeros(x.cells(k as i64), fixed.len());
        for (j, &c) in fixed.iter().enumerate() {
            m.set(c, j, BigInt::from(1));
        }
        inclusion.push(m);
    }
    let mut boundaries = Vec::new();
    for k in 1..=d {
        let ambient = x.boundary(k);
        let (lo, hi) = (&cells[(k - 1) as usize], &cells[k as usize]);
        let in_lo: std::collections::HashSet<usize> = lo.iter().copied().collect();
        let mut b = IntMatrix::zeros(lo.len(), hi.len());
        for (j, &c) in hi.iter().enumerate() {
            for r in 0..ambient.rows() {
                let v = ambient.get(r, c);
                if !v.is_zero() && !in_lo.contains(&r) {
                    return Err(Error::InvalidComplex(format!(
                        "boundary of G-fixed cell {} meets the non-fixed cell {}; the complex is not the chain shadow of a G-CW structure",
                        x.label(k as usize, c),
                        x.label((k - 1) as usize, r)
                    )));
                }
            }
            for (i, &r) in lo.iter().enumerate() {
                b.set(i, j, ambient.get(r, c).clone());
            }
        }
        boundaries.push(b);
    }
    Ok(FixedComplex { complex: ChainComplex::new(counts, boundaries)?, cells, inclusion })
}

/// The norm map N: coinvariants -> invariants, sending an orbit generator to
/// the sum of its full G-translate: diagonal with entry |G_σ| on each orbit.
#[derive(Clone, Debug)]
pub struct NormMap {
    pub coinvariants: CoinvariantComplex,
    pub invariants: InvariantComplex,
    /// coinvariants -> invariants
    pub map: ChainMap,
}

pub fn norm_map(x: &EquivariantChainComplex) -> Result<NormMap> {
    let coinv = coinvariant_complex(x)?;
    let inv = invariant_complex(x);
    // with no signed-stabilizer orbits (coinvariant construction guarantees
    // it), both complexes are indexed by the same orbit lists.
    let d = x.top_dim();
    let mut mats = Vec::new();
    for k in 0..=d {
        let orbits = inv.basis.orbits(k);
        let mut m = IntMatrix::zeros(orbits.len(), orbits.len());
        for (i, o) in orbits.iter().enumerate() {
            m.set(i, i, BigInt::from(o.stabilizer_order as i64));
        }
        mats.push(m);
    }
    let map = ChainMap::new(coinv.complex.clone(), inv.complex.clone(), mats)?;
    if let Some(k) = map.boundary_violation() {
        return Err(Error::Internal(format!("norm map fails to be a chain map at dim {k}")));
    }
    Ok(NormMap { coinvariants: coinv, invariants: inv, map })
}

/// Cokernel of the norm map, degreewise: one cyclic summand Z/|G_σ| per
/// orbit (free orbits contribute nothing), with the boundary induced from
/// the invariant complex.
#[derive(Clone, Debug)]
pub struct QuotientD {
    /// D_k as an abelian group
    pub groups: Vec<AbelianGroup>,
    /// presentation on the orbit generators (relations = the norm diagonal)
    pub presentations: Vec<Presentation>,
    /// boundary on the orbit generators (the invariant-complex boundary)
    pub boundary: Vec<IntMatrix>,
}

pub fn quotient_d(x: &EquivariantChainComplex) -> Result<QuotientD> {
    let nm = norm_map(x)?;
    let d = x.top_dim();
    let mut groups = Vec::new();
    let mut presentations = Vec::new();
    for k in 0..=d {
        let rels = nm.map.map(k);
        let pres = Presentation::new(rels.rows(), rels);
        groups.push(pres.group());
        presentations.push(pres);
    }
    let boundary = (1..=d).map(|k| nm.invariants.complex.boundary(k)).collect();
    Ok(QuotientD { groups, presentations, boundary })
}

/// The Lemma-2.4-style comparison for prime-order groups: the nonzero part
/// of D lives on the fixed-cell orbits, and on those coordinates its
/// boundary must equal the fixed subcomplex's boundary mod p — an exact
/// matrix equality between two independently assembled complexes.
#[derive(Clone, Debug)]
pub struct DComparison {
    pub p: u64,
    /// per dimension: (D's fixed-orbit boundary block mod p, fixed complex boundary mod p)
    pub pairs: Vec<(ModMatrix, ModMatrix)>,
    pub dims_agree: bool,
    pub boundaries_agree: bool,
}

impl DComparison {
    pub fn is_isomorphism(&self) -> bool {
        self.dims_agree && self.boundaries_agree
    }
}

pub fn compare_d_to_fixed_mod_p(x: &EquivariantChainComplex) -> Result<DComparison> {
    let (p, _) = x.group().prime_order_generator()?;
    let dq = quotient_d(x)?;
    let inv = invariant_complex(x);
    let fixed = fixed_complex(x)?;
    let d = x.top_dim();

    let mut dims_agree = true;
    let mut pairs = Vec::new();
    for k in 0..=d {
        let fixed_orbits = inv.basis.fixed_orbit_indices(k);
        // D_k must be (Z/p)^{#fixed cells}
        let expect = AbelianGroup::vector_space(p, fixed.complex.cells(k));
        if dq.groups[k as usize] != expect || fixed_orbits.len() != fixed.complex.cells(k) {
            dims_agree = false;
        }
    }
    let mut boundaries_agree = dims_agree;
    if dims_agree {
        for k in 1..=d {
            let hi = inv.basis.fixed_orbit_indices(k);
            let lo = inv.basis.fixed_orbit_indices(k - 1);
            let full = inv.complex.boundary(k);
            let mut block = IntMatrix::zeros(lo.len(), hi.len());
            for (i, &oi) in lo.iter().enumerate() {
                for (j, &oj) in hi.iter().enumerate() {
                    block.set(i, j, full.get(oi, oj).clone());
                }
            }
            let left = ModMatrix::from_int(&block, p);
            let right = ModMatrix::from_int(&fixed.complex.boundary(k), p);
            if left != right {
                boundaries_agree = false;
            }
            pairs.push((left, right));
        }
    }
    Ok(DComparison { p, pairs, dims_agree, boundaries_agree })
}

/// The invariants of the mod-p chains, computed honestly as the simultaneous
/// kernel of (g - 1) over every group element — not by reducing the integral
/// orbit-sum basis. Both must span the same subspace; that agreement is a
/// standing regression check, not an assumption.
#[derive(Clone, Debug)]
pub struct ModPInvariants {
    pub p: u64,
    /// bases[k]: ambient cells x dim, columns a GF(p)-basis of the invariants
    pub bases: Vec<ModMatrix>,
    /// boundary expressed in those bases
    pub boundaries: Vec<ModMatrix>,
}

pub fn invariant_complex_mod_p(x: &EquivariantChainComplex, p: u64) -> Result<ModPInvariants> {
    if !crate::abelian::is_prime(p) {
        return Err(Error::CompositeModulus(p));
    }
    let d = x.top_dim();
    let n = x.group().order();
    let mut bases = Vec::new();
    for k in 0..=d {
        let cells = x.cells(k);
        let mut stacked = ModMatrix::zeros(p, 0, cells);
        for g in 1..n {
            let pg = ModMatrix::from_int(&x.action_matrix(g, k as usize), p);
            let mut diff = pg;
            for c in 0..cells {
                let v = diff.get(c, c);
                diff.set(c, c, (v + p - 1) % p);
            }
            stacked = stacked.vstack(&diff);
        }
        bases.push(stacked.kernel());
    }
    let mut boundaries = Vec::new();
    for k in 1..=d {
        let db = ModMatrix::from_int(&x.boundary(k), p).mul(&bases[k as usize]);
        let y = bases[(k - 1) as usize]
            .solve(&db)
            .ok_or_else(|| Error::Internal("boundary leaves the invariant subspace".into()))?;
        boundaries.push(y);
    }
    Ok(ModPInvariants { p, bases, boundaries })
}

/// Do the mod-p reductions of the orbit sums span exactly the honest mod-p
/// invariants? (Provably yes for prime-order groups; checked, not assumed.)
pub fn mod_p_paths_agree(x: &EquivariantChainComplex, p: u64) -> Result<bool> {
    let honest = invariant_complex_mod_p(x, p)?;
    let inv = invariant_complex(x);
    for k in 0..=x.top_dim() {
        let reduced = ModMatrix::from_int(&inv.inclusion[k as usize], p);
        let a = honest.bases[k as usize].rank();
        let b = reduced.rank();
        let joint = honest.bases[k as usize].hstack(&reduced).rank();
        if !(a == b && joint == a) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::complexes::{FiniteGroup, SignedAction};

    fn reflection_circle() -> EquivariantChainComplex {
        crate::complexes::tests::reflection_circle()
    }

    /// p-gon with free rotation: ∂ e_i = v_{i+1} - v_i.
    pub fn rotation_circle(p: usize) -> EquivariantChainComplex {
        let mut b = IntMatrix::zeros(p, p);
        for i in 0..p {
            b.set((i + 1) % p, i, BigInt::from(1));
            b.set(i, i, b.get(i, i) - 1);
        }
        let complex = ChainComplex::new(vec![p, p], vec![b]).unwrap();
        let maps: Vec<_> = (0..p)
            .map(|g| {
                let perm: Vec<(usize, i64)> = (0..p).map(|c| ((c + g) % p, 1)).collect();
                vec![perm.clone(), perm]
            })
            .collect();
        let x = EquivariantChainComplex::new(
            FiniteGroup::cyclic(p),
            complex,
            SignedAction::new(maps),
            None,
        )
        .unwrap();
        assert!(x.validate().is_empty());
        x
    }

    /// one vertex, one edge with ∂e = 0, two faces f± with ∂f± = e, and the
    /// involution swapping the faces — the reflection 2-sphere.
    pub fn reflection_sphere() -> EquivariantChainComplex {
        let complex = ChainComplex::new(
            vec![1, 1, 2],
            vec![
                IntMatrix::zeros(1, 1),
                IntMatrix::from_rows(&[vec![1, 1]]),
            ],
        )
        .unwrap();
        let action = SignedAction::new(vec![
            vec![vec![(0, 1)], vec![(0, 1)], vec![(0, 1), (1, 1)]],
            vec![vec![(0, 1)], vec![(0, 1)], vec![(1, 1), (0, 1)]],
        ]);
        let x = EquivariantChainComplex::new(
            FiniteGroup::cyclic(2),
            complex,
            action,
            Some(vec![vec!["v".into()], vec!["e".into()], vec!["f+".into(), "f-".into()]]),
        )
        .unwrap();
        assert!(x.validate().is_empty());
        x
    }

    #[test]
    fn reflection_circle_invariants_are_the_golden_basis() {
        let inv = invariant_complex(&reflection_circle());
        assert_eq!(inv.complex.cell_counts(), &[2, 1]);
        // the single dim-1 orbit sum is e+ + e-
        assert_eq!(inv.inclusion[1].column(0), vec![BigInt::from(1), BigInt::from(1)]);
        // ∂(e+ + e-) = 2 v_{+1} - 2 v_{-1}
        assert_eq!(
            inv.complex.boundary(1),
            IntMatrix::from_rows(&[vec![-2], vec![2]])
        );
    }

    #[test]
    fn rotation_circle_invariants_are_full_sums() {
        let inv = invariant_complex(&rotation_circle(5));
        assert_eq!(inv.complex.cell_counts(), &[1, 1]);
        assert_eq!(inv.inclusion[1].column(0), vec![BigInt::from(1); 5]);
        // the full edge sum is a cycle
        assert!(inv.complex.boundary(1).is_zero());
    }

    #[test]
    fn trivial_action_invariants_are_everything() {
        let x = reflection_circle().restrict_action(&[0]).unwrap();
        let inv = invariant_complex(&x);
        assert_eq!(inv.complex.cell_counts(), x.complex().cell_counts());
        assert_eq!(inv.complex.boundary(1), x.boundary(1));
    }

    #[test]
    fn coinvariants_of_reflection_circle_form_an_interval() {
        let co = coinvariant_complex(&reflection_circle()).unwrap();
        assert_eq!(co.complex.cell_counts(), &[2, 1]);
        assert_eq!(
            co.complex.boundary(1),
            IntMatrix::from_rows(&[vec![-1], vec![1]])
        );
        assert!(co.projection.is_chain_map());
    }

    #[test]
    fn coinvariants_of_rotation_form_a_circle() {
        let co = coinvariant_complex(&rotation_circle(3)).unwrap();
        assert_eq!(co.complex.cell_counts(), &[1, 1]);
        assert!(co.complex.boundary(1).is_zero());
    }

    #[test]
    fn signed_stabilizer_orbit_is_rejected() {
        // invalid complex (fails validate): one cell sent to minus itself
        let complex = ChainComplex::new(vec![1], vec![]).unwrap();
        let action = SignedAction::new(vec![vec![vec![(0, 1)]], vec![vec![(0, -1)]]]);
        let x = EquivariantChainComplex::new(FiniteGroup::cyclic(2), complex, action, None)
            .unwrap();
        assert!(matches!(coinvariant_complex(&x), Err(Error::SignedOrbit(_))));
        // the invariant complex simply skips the orbit
        assert_eq!(invariant_complex(&x).complex.cell_counts(), &[0]);
    }

    #[test]
    fn fixed_complex_of_reflection_sphere_is_a_circle() {
        let f = fixed_complex(&reflection_sphere()).unwrap();
        assert_eq!(f.complex.cell_counts(), &[1, 1, 0]);
        assert!(f.complex.boundary(1).is_zero());
    }

    #[test]
    fn fixed_complex_of_free_action_is_empty() {
        let f = fixed_complex(&rotation_circle(3)).unwrap();
        assert!(f.complex.is_empty());
    }

    #[test]
    fn fixed_complex_rejects_boundary_leakage() {
        // edge fixed, endpoints swapped: ∂(fixed cell) hits moving cells.
        // equivariance forces ∂e to be symmetric: ∂e = v0 + v1.
        let complex =
            ChainComplex::new(vec![2, 1], vec![IntMatrix::from_rows(&[vec![1], vec![1]])]).unwrap();
        let action = SignedAction::new(vec![
            vec![vec![(0, 1), (1, 1)], vec![(0, 1)]],
            vec![vec![(1, 1), (0, 1)], vec![(0, 1)]],
        ]);
        let x = EquivariantChainComplex::new(FiniteGroup::cyclic(2), complex, action, None)
            .unwrap();
        assert!(x.validate().is_empty(), "{:?}", x.validate());
        assert!(matches!(fixed_complex(&x), Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn norm_is_the_stabilizer_diagonal() {
        let nm = norm_map(&reflection_circle()).unwrap();
        assert_eq!(
            nm.map.map(0),
            IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]])
        );
        assert_eq!(nm.map.map(1), IntMatrix::identity(1));
        assert!(nm.map.is_chain_map());
        let free = norm_map(&rotation_circle(5)).unwrap();
        assert_eq!(free.map.map(0), IntMatrix::identity(1));
        assert_eq!(free.map.map(1), IntMatrix::identity(1));
    }

    #[test]
    fn quotient_d_matches_fixed_cells() {
        // sphere: D = Z/2 in dims 0 and 1, zero in dim 2
        let dq = quotient_d(&reflection_sphere()).unwrap();
        assert_eq!(dq.groups[0], AbelianGroup::cyclic(2));
        assert_eq!(dq.groups[1], AbelianGroup::cyclic(2));
        assert_eq!(dq.groups[2], AbelianGroup::trivial());
        // free action: D = 0
        let free = quotient_d(&rotation_circle(3)).unwrap();
        assert!(free.groups.iter().all(|g| g.is_trivial()));
        // point with trivial Z/p action: D = Z/p in dim 0
        let point = EquivariantChainComplex::with_trivial_action(
            FiniteGroup::cyclic(5),
            ChainComplex::new(vec![1], vec![]).unwrap(),
        );
        let dq = quotient_d(&point).unwrap();
        assert_eq!(dq.groups[0], AbelianGroup::cyclic(5));
    }

    #[test]
    fn d_comparison_is_an_isomorphism_on_examples() {
        for x in [reflection_circle(), reflection_sphere(), rotation_circle(3)] {
            let cmp = compare_d_to_fixed_mod_p(&x).unwrap();
            assert!(cmp.is_isomorphism());
        }
        // non-prime group order is refused
        let x4 = rotation_circle(4);
        assert!(matches!(compare_d_to_fixed_mod_p(&x4), Err(Error::NotPrimeOrder)));
    }

    #[test]
    fn honest_mod_p_invariants_agree_with_orbit_sums() {
        for (x, p) in [
            (reflection_circle(), 2),
            (reflection_sphere(), 2),
            (rotation_circle(3), 3),
            (rotation_circle(5), 5),
        ] {
            assert!(mod_p_paths_agree(&x, p).unwrap());
        }
        // explicit dimension check on the reflection circle
        let honest = invariant_complex_mod_p(&reflection_circle(), 2).unwrap();
        assert_eq!(honest.bases[0].cols(), 2);
        assert_eq!(honest.bases[1].cols(), 1);
    }

    #[test]
    fn restricting_then_taking_invariants_grows_the_subcomplex() {
        // invariants over the full group embed in invariants over a subgroup
        let x = rotation_circle(4);
        let full = invariant_complex(&x);
        let half = invariant_complex(&x.restrict_action(&[0, 2]).unwrap());
        for k in 0..=1i64 {
            let a = full.inclusion[k as usize].clone();
            let joint = half.inclusion[k as usize].hstack(&a);
            // columns of the full-group invariants lie in the span of the
            // subgroup invariants: stacking adds no rank
            let r_half = crate::abelian::smith::rank(&half.inclusion[k as usize]);
            assert_eq!(crate::abelian::smith::rank(&joint), r_half);
        }
    }
}
