//! Homology of chain complexes over Z, Q, and GF(p), with generator
//! representatives, projections of cycles onto homology classes, and the
//! maps induced by chain maps — enough to chase explicit elements through
//! exact sequences, not just read off isomorphism types.

use std::fmt;

use num_bigint::BigInt;

use crate::abelian::{
    kernel_basis_z, preimage_generators, subquotient_of_lattices, AbelianGroup, GroupHom,
    IntMatrix, ModMatrix, Presentation, Subquotient,
};
use crate::complexes::{ChainComplex, ChainMap, EquivariantChainComplex};
use crate::error::{Error, Result};
use crate::functors::{coinvariant_complex, fixed_complex, invariant_complex, norm_map};

/// Coefficient ring for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coeff {
    Z,
    Q,
    Zp(u64),
}

impl Coeff {
    /// Accepts `z`, `q`, `zp:P` (case-insensitive).
    pub fn parse(s: &str) -> Result<Coeff> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "z" => Ok(Coeff::Z),
            "q" => Ok(Coeff::Q),
            _ => {
                if let Some(rest) = t.strip_prefix("zp:") {
                    let p: u64 = rest
                        .parse()
                        .map_err(|_| Error::BadParameter(format!("coefficient modulus `{rest}`")))?;
                    if !crate::abelian::is_prime(p) {
                        return Err(Error::CompositeModulus(p));
                    }
                    Ok(Coeff::Zp(p))
                } else {
                    Err(Error::BadParameter(format!(
                        "coefficient `{s}` (expected z, q, or zp:P)"
                    )))
                }
            }
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Coeff::Zp(p) => Some(*p),
            _ => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Z => write!(f, "Z"),
            Coeff::Q => write!(f, "Q"),
            Coeff::Zp(p) => write!(f, "Z/{p}"),
        }
    }
}

/// Homology in a single degree: the abstract group, plus the subquotient
/// data needed to produce representative cycles and to project cycles onto
/// canonical coordinates.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    pub group: AbelianGroup,
    sq: Subquotient,
    /// rational coefficients: only the free part of the integral subquotient
    /// is the group, and projections truncate away torsion coordinates.
    rational: bool,
}

impl HomologyGroup {
    fn trivial() -> Self {
        HomologyGroup {
            group: AbelianGroup::trivial(),
            sq: Subquotient::new(IntMatrix::zeros(0, 0), &IntMatrix::zeros(0, 0), None)
                .expect("empty subquotient"),
            rational: false,
        }
    }

    pub fn num_generators(&self) -> usize {
        self.group.num_generators()
    }

    pub fn presentation(&self) -> Presentation {
        Presentation::canonical(&self.group)
    }

    /// A representative cycle (in chain coordinates) of the i-th canonical
    /// generator.
    pub fn rep(&self, i: usize) -> Vec<BigInt> {
        self.sq.reps.column(i)
    }

    /// Canonical homology coordinates of a cycle.
    pub fn project(&self, cycle: &[BigInt]) -> Result<Vec<BigInt>> {
        let mut y = self.sq.project(cycle)?;
        if self.rational {
            y.truncate(self.group.free_rank());
        }
        Ok(y)
    }
}

/// Homology in all degrees 0..=top.
#[derive(Clone, Debug)]
pub struct GradedGroup {
    pub coeff: Coeff,
    per_degree: Vec<HomologyGroup>,
}

impl GradedGroup {
    pub fn top_dim(&self) -> i64 {
        self.per_degree.len() as i64 - 1
    }

    pub fn group(&self, k: i64) -> AbelianGroup {
        if k < 0 || k > self.top_dim() {
            AbelianGroup::trivial()
        } else {
            self.per_degree[k as usize].group.clone()
        }
    }

    /// Degree-k data; a trivial group out of range.
    pub fn at(&self, k: i64) -> HomologyGroup {
        if k < 0 || k > self.top_dim() {
            HomologyGroup::trivial()
        } else {
            self.per_degree[k as usize].clone()
        }
    }

    pub fn groups(&self) -> Vec<AbelianGroup> {
        self.per_degree.iter().map(|h| h.group.clone()).collect()
    }

    /// `H_d = ..., H_{d-1} = ..., H_0 = ...` in descending degree.
    pub fn notation_line(&self) -> String {
        if self.per_degree.is_empty() {
            return "H_* = 0".into();
        }
        let mut parts = Vec::new();
        for k in (0..=self.top_dim()).rev() {
            parts.push(format!("H_{} = {}", k, self.group(k).notation()));
        }
        parts.join(", ")
    }
}

/// Homology of a chain complex with the chosen coefficients. Rational
/// homology is extracted from the integral computation (free part); GF(p)
/// homology reduces boundaries mod p and works in the vector space of
/// mod-p cycles.
pub fn homology(c: &ChainComplex, coeff: Coeff) -> Result<GradedGroup> {
    let d = c.top_dim();
    let mut per_degree = Vec::new();
    for k in 0..=d {
        let sq = match coeff {
            Coeff::Z | Coeff::Q => {
                let cycles = kernel_basis_z(&c.boundary(k));
                Subquotient::new(cycles, &c.boundary(k + 1), None)?
            }
            Coeff::Zp(p) => {
                let cycles = ModMatrix::from_int(&c.boundary(k), p).kernel().lift();
                Subquotient::new(cycles, &c.boundary(k + 1), Some(p))?
            }
        };
        let (group, rational) = match coeff {
            Coeff::Q => (AbelianGroup::free(sq.group.free_rank()), true),
            _ => (sq.group.clone(), false),
        };
        per_degree.push(HomologyGroup { group, sq, rational });
    }
    Ok(GradedGroup { coeff, per_degree })
}

/// The map on homology induced by a chain-level matrix in one degree.
pub fn induced_map(matrix: &IntMatrix, src: &HomologyGroup, tgt: &HomologyGroup) -> Result<GroupHom> {
    let mut cols = Vec::new();
    for i in 0..src.num_generators() {
        let image = matrix.mul_vec(&src.rep(i));
        cols.push(tgt.project(&image)?);
    }
    let m = IntMatrix::from_columns(tgt.num_generators(), &cols);
    Ok(GroupHom::new(src.presentation(), tgt.presentation(), m))
}

/// Degreewise induced maps of a chain map.
pub fn chain_map_induced(
    f: &ChainMap,
    src: &GradedGroup,
    tgt: &GradedGroup,
) -> Result<Vec<GroupHom>> {
    let top = src.top_dim().max(tgt.top_dim());
    let mut out = Vec::new();
    for k in 0..=top {
        out.push(induced_map(&f.map(k), &src.at(k), &tgt.at(k))?);
    }
    Ok(out)
}

/// Homology of the invariant chains H_*(G, X) — the central object.
pub fn equivariant_homology(x: &EquivariantChainComplex, coeff: Coeff) -> Result<GradedGroup> {
    homology(&invariant_complex(x).complex, coeff)
}

/// Homology of the coinvariant complex — for honest actions, H_*(X/G).
pub fn quotient_homology(x: &EquivariantChainComplex, coeff: Coeff) -> Result<GradedGroup> {
    homology(&coinvariant_complex(x)?.complex, coeff)
}

/// Homology of the fixed subcomplex.
pub fn fixed_homology(x: &EquivariantChainComplex, coeff: Coeff) -> Result<GradedGroup> {
    homology(&fixed_complex(x)?.complex, coeff)
}

/// The action induced on the homology of the ambient complex, one
/// automorphism per element of a deterministic generating set.
#[derive(Clone, Debug)]
pub struct HomologyAction {
    pub homology: GradedGroup,
    pub generators: Vec<usize>,
    /// maps[i][k] = action of generators[i] on degree-k homology
    pub maps: Vec<Vec<GroupHom>>,
}

pub fn homology_action(x: &EquivariantChainComplex, coeff: Coeff) -> Result<HomologyAction> {
    let h = homology(x.complex(), coeff)?;
    let generators = x.group().generating_set();
    let mut maps = Vec::new();
    for &g in &generators {
        let mut per_degree = Vec::new();
        for k in 0..=h.top_dim() {
            let hg = h.at(k);
            per_degree.push(induced_map(&x.action_matrix(g, k as usize), &hg, &hg)?);
        }
        maps.push(per_degree);
    }
    Ok(HomologyAction { homology: h, generators, maps })
}

/// The G-invariant subgroup of each homology group of the ambient complex:
/// simultaneous kernel of (g - 1) over the generating set.
pub fn invariant_homology(x: &EquivariantChainComplex, coeff: Coeff) -> Result<Vec<AbelianGroup>> {
    let action = homology_action(x, coeff)?;
    let h = &action.homology;
    let mut out = Vec::new();
    for k in 0..=h.top_dim() {
        let pres = h.at(k).presentation();
        let t = pres.gens;
        if action.generators.is_empty() {
            out.push(h.group(k));
            continue;
        }
        let mut stacked = IntMatrix::zeros(0, t);
        for maps in &action.maps {
            let diff = maps[k as usize].matrix.sub(&IntMatrix::identity(t));
            stacked = stacked.vstack(&diff);
        }
        // block-diagonal relations: each (g-1) must land in the relator span
        let m = action.maps.len();
        let r = pres.rels.cols();
        let mut rel_block = IntMatrix::zeros(t * m, r * m);
        for i in 0..m {
            for rr in 0..t {
                for cc in 0..r {
                    rel_block.set(i * t + rr, i * r + cc, pres.rels.get(rr, cc).clone());
                }
            }
        }
        let lattice = preimage_generators(&stacked, &rel_block);
        out.push(subquotient_of_lattices(&lattice, &pres.rels));
    }
    Ok(out)
}

/// The map H_*(G, X) -> H_*(X) induced by including invariant chains.
pub struct InclusionMaps {
    pub source: GradedGroup,
    pub target: GradedGroup,
    pub maps: Vec<GroupHom>,
}

pub fn i_star(x: &EquivariantChainComplex, coeff: Coeff) -> Result<InclusionMaps> {
    let inv = invariant_complex(x);
    let source = homology(&inv.complex, coeff)?;
    let target = homology(x.complex(), coeff)?;
    let mut maps = Vec::new();
    for k in 0..=source.top_dim().max(target.top_dim()) {
        let m = if (k as usize) < inv.inclusion.len() {
            inv.inclusion[k as usize].clone()
        } else {
            IntMatrix::zeros(0, 0)
        };
        maps.push(induced_map(&m, &source.at(k), &target.at(k))?);
    }
    Ok(InclusionMaps { source, target, maps })
}

/// Maps induced by the norm (coinvariants -> invariants) on homology.
pub struct NormInduced {
    pub coinvariant_homology: GradedGroup,
    pub invariant_homology: GradedGroup,
    pub maps: Vec<GroupHom>,
}

pub fn norm_induced(x: &EquivariantChainComplex, coeff: Coeff) -> Result<NormInduced> {
    let nm = norm_map(x)?;
    let src = homology(&nm.coinvariants.complex, coeff)?;
    let tgt = homology(&nm.invariants.complex, coeff)?;
    let maps = chain_map_induced(&nm.map, &src, &tgt)?;
    Ok(NormInduced { coinvariant_homology: src, invariant_homology: tgt, maps })
}

/// Universal-coefficient consistency: over GF(p) the dimension in degree k
/// must equal rank H_k(Z) + #p-torsion of H_k(Z) + #p-torsion of H_{k-1}(Z).
pub fn uct_consistent(hz: &GradedGroup, hp: &GradedGroup, p: u64) -> bool {
    let top = hz.top_dim().max(hp.top_dim());
    (0..=top).all(|k| {
        let expect =
            hz.group(k).free_rank() + hz.group(k).p_torsion_count(p) + hz.group(k - 1).p_torsion_count(p);
        hp.group(k).dim_over(p) == Some(expect)
    })
}

/// Rank consistency: rational dimensions must equal integral free ranks.
pub fn rank_consistent(hz: &GradedGroup, hq: &GradedGroup) -> bool {
    let top = hz.top_dim().max(hq.top_dim());
    (0..=top).all(|k| hq.group(k) == AbelianGroup::free(hz.group(k).free_rank()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{FiniteGroup, SignedAction};

    fn circle() -> ChainComplex {
        ChainComplex::new(vec![1, 1], vec![IntMatrix::zeros(1, 1)]).unwrap()
    }

    /// one cell in each dimension 0..=2 with ∂2 = (2): the real projective
    /// plane's cellular complex.
    fn rp2() -> ChainComplex {
        ChainComplex::new(
            vec![1, 1, 1],
            vec![IntMatrix::zeros(1, 1), IntMatrix::from_rows(&[vec![2]])],
        )
        .unwrap()
    }

    #[test]
    fn circle_homology() {
        let h = homology(&circle(), Coeff::Z).unwrap();
        assert_eq!(h.group(0), AbelianGroup::free(1));
        assert_eq!(h.group(1), AbelianGroup::free(1));
        assert_eq!(h.notation_line(), "H_1 = Z, H_0 = Z");
    }

    #[test]
    fn projective_plane_homology_over_three_rings() {
        let c = rp2();
        let hz = homology(&c, Coeff::Z).unwrap();
        assert_eq!(hz.group(0), AbelianGroup::free(1));
        assert_eq!(hz.group(1), AbelianGroup::cyclic(2));
        assert_eq!(hz.group(2), AbelianGroup::trivial());

        let h2 = homology(&c, Coeff::Zp(2)).unwrap();
        for k in 0..=2 {
            assert_eq!(h2.group(k), AbelianGroup::vector_space(2, 1));
        }
        let h3 = homology(&c, Coeff::Zp(3)).unwrap();
        assert_eq!(h3.group(0), AbelianGroup::vector_space(3, 1));
        assert_eq!(h3.group(1), AbelianGroup::trivial());

        let hq = homology(&c, Coeff::Q).unwrap();
        assert_eq!(hq.group(0), AbelianGroup::free(1));
        assert_eq!(hq.group(1), AbelianGroup::trivial());

        assert!(uct_consistent(&hz, &h2, 2));
        assert!(uct_consistent(&hz, &h3, 3));
        assert!(rank_consistent(&hz, &hq));
    }

    #[test]
    fn reflection_circle_invariant_homology_is_the_golden_value() {
        let x = crate::complexes::tests::reflection_circle();
        let h = equivariant_homology(&x, Coeff::Z).unwrap();
        assert_eq!(h.group(1), AbelianGroup::trivial());
        assert_eq!(h.group(0), AbelianGroup::new(1, vec![BigInt::from(2)]));
        assert_eq!(h.notation_line(), "H_1 = 0, H_0 = Z + Z/2");
        // quotient is an interval
        let hq = quotient_homology(&x, Coeff::Z).unwrap();
        assert_eq!(hq.notation_line(), "H_1 = 0, H_0 = Z");
    }

    #[test]
    fn rotation_norm_maps_are_isomorphisms() {
        // free rotation of the triangle: H_*(X/G) -> H_*(G,X) via the norm
        // is an isomorphism in both degrees
        let x = rotation(3);
        let n = norm_induced(&x, Coeff::Z).unwrap();
        assert_eq!(n.invariant_homology.group(0), AbelianGroup::free(1));
        assert_eq!(n.invariant_homology.group(1), AbelianGroup::free(1));
        for k in 0..=1 {
            assert!(n.maps[k].is_well_defined());
            assert!(n.maps[k].is_isomorphism(), "degree {k}");
        }
    }

    fn rotation(p: usize) -> EquivariantChainComplex {
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
        EquivariantChainComplex::new(FiniteGroup::cyclic(p), complex, SignedAction::new(maps), None)
            .unwrap()
    }

    #[test]
    fn reflection_acts_by_minus_one_on_top_homology() {
        let x = crate::complexes::tests::reflection_circle();
        let act = homology_action(&x, Coeff::Z).unwrap();
        assert_eq!(act.generators, vec![1]);
        // H_1(S^1) = Z and the reflection reverses orientation
        let m = &act.maps[0][1];
        assert_eq!(m.matrix, IntMatrix::from_rows(&[vec![-1]]));
        // so the invariant subgroup vanishes in degree 1, and is Z in degree 0
        let inv = invariant_homology(&x, Coeff::Z).unwrap();
        assert_eq!(inv[1], AbelianGroup::trivial());
        assert_eq!(inv[0], AbelianGroup::free(1));
    }

    #[test]
    fn invariant_homology_mod_two_of_reflection() {
        let x = crate::complexes::tests::reflection_circle();
        let inv = invariant_homology(&x, Coeff::Zp(2)).unwrap();
        // mod 2 the orientation reversal is invisible
        assert_eq!(inv[1], AbelianGroup::vector_space(2, 1));
        assert_eq!(inv[0], AbelianGroup::vector_space(2, 1));
    }

    #[test]
    fn trivial_group_invariant_homology_is_everything() {
        let x = crate::complexes::tests::reflection_circle().restrict_action(&[0]).unwrap();
        let inv = invariant_homology(&x, Coeff::Z).unwrap();
        assert_eq!(inv[0], AbelianGroup::free(1));
        assert_eq!(inv[1], AbelianGroup::free(1));
    }

    #[test]
    fn inclusion_kernel_is_killed_by_group_order() {
        for x in [
            crate::complexes::tests::reflection_circle(),
            rotation(3),
            rotation(5),
            crate::functors::tests::reflection_sphere(),
        ] {
            let order = BigInt::from(x.group().order() as i64);
            let inc = i_star(&x, Coeff::Z).unwrap();
            for (k, m) in inc.maps.iter().enumerate() {
                assert!(m.is_well_defined(), "degree {k}");
                let ker = m.analyze().kernel;
                if let Some(e) = ker.exponent() {
                    assert!(
                        (&order % &e) == BigInt::from(0),
                        "degree {k}: kernel exponent {e} does not divide {order}"
                    );
                } else {
                    panic!("degree {k}: infinite kernel");
                }
            }
        }
    }

    #[test]
    fn induced_maps_respect_composition() {
        // doubling the circle: the degree-2 self-map z -> z^2 on chain level
        let c = circle();
        let h = homology(&c, Coeff::Z).unwrap();
        let double = IntMatrix::from_rows(&[vec![2]]);
        let m = induced_map(&double, &h.at(1), &h.at(1)).unwrap();
        let twice = m.compose(&m);
        assert_eq!(twice.matrix, IntMatrix::from_rows(&[vec![4]]));
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!(Coeff::parse("z").unwrap(), Coeff::Z);
        assert_eq!(Coeff::parse("Q").unwrap(), Coeff::Q);
        assert_eq!(Coeff::parse("zp:5").unwrap(), Coeff::Zp(5));
        assert!(matches!(Coeff::parse("zp:6"), Err(Error::CompositeModulus(6))));
        assert!(matches!(Coeff::parse("r"), Err(Error::BadParameter(_))));
    }

    #[test]
    fn uct_on_random_two_stage_complexes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let n0 = rng.gen_range(1..5);
            let n1 = rng.gen_range(1..5);
            let b1 = IntMatrix::from_fn(n0, n1, |_, _| BigInt::from(rng.gen_range(-2..3)));
            // ∂2 factors through the kernel of ∂1, so ∂1∂2 = 0 by construction
            let k = kernel_basis_z(&b1);
            let n2 = rng.gen_range(1..4);
            let mix = IntMatrix::from_fn(k.cols(), n2, |_, _| BigInt::from(rng.gen_range(-2..3)));
            let b2 = k.mul(&mix);
            let c = ChainComplex::new(vec![n0, n1, n2], vec![b1, b2]).unwrap();
            assert!(c.d_squared_violation().is_none());
            let hz = homology(&c, Coeff::Z).unwrap();
            let hq = homology(&c, Coeff::Q).unwrap();
            assert!(rank_consistent(&hz, &hq));
            for p in [2u64, 3, 5] {
                let hp = homology(&c, Coeff::Zp(p)).unwrap();
                assert!(uct_consistent(&hz, &hp, p));
            }
        }
    }
}
