use super::group::{cokernel, subquotient_of_lattices, AbelianGroup, Presentation};
use super::matrix::IntMatrix;
use super::smith::{lattice_contains, preimage_generators};

/// A homomorphism between presented abelian groups, as an integer matrix on
/// the chosen generators. Well-definedness (relations map into relations) is
/// a property to check, not an assumption.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub domain: Presentation,
    pub codomain: Presentation,
    /// codomain.gens x domain.gens
    pub matrix: IntMatrix,
}

/// Kernel, image and cokernel of a hom, each in invariant-factor form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomAnalysis {
    pub kernel: AbelianGroup,
    pub image: AbelianGroup,
    pub cokernel: AbelianGroup,
}

impl GroupHom {
    pub fn new(domain: Presentation, codomain: Presentation, matrix: IntMatrix) -> Self {
        assert_eq!(matrix.rows(), codomain.gens, "matrix rows must match codomain generators");
        assert_eq!(matrix.cols(), domain.gens, "matrix cols must match domain generators");
        GroupHom { domain, codomain, matrix }
    }

    pub fn identity(p: &Presentation) -> Self {
        GroupHom {
            domain: p.clone(),
            codomain: p.clone(),
            matrix: IntMatrix::identity(p.gens),
        }
    }

    pub fn zero(domain: Presentation, codomain: Presentation) -> Self {
        let m = IntMatrix::zeros(codomain.gens, domain.gens);
        GroupHom { domain, codomain, matrix: m }
    }

    /// Relations of the domain must land in relations of the codomain.
    pub fn is_well_defined(&self) -> bool {
        let mapped = self.matrix.mul(&self.domain.rels);
        lattice_contains(&self.codomain.rels, &mapped)
    }

    /// `self` after `earlier`: the composite `self ∘ earlier`.
    pub fn compose(&self, earlier: &GroupHom) -> GroupHom {
        assert_eq!(earlier.codomain.gens, self.domain.gens, "composition mismatch");
        GroupHom {
            domain: earlier.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(&earlier.matrix),
        }
    }

    pub fn is_zero_map(&self) -> bool {
        lattice_contains(&self.codomain.rels, &self.matrix)
    }

    /// Kernel, image, cokernel — one Smith reduction each.
    pub fn analyze(&self) -> HomAnalysis {
        let ker_gens = preimage_generators(&self.matrix, &self.codomain.rels);
        let kernel = subquotient_of_lattices(&ker_gens, &self.domain.rels);
        let with_rels = self.matrix.hstack(&self.codomain.rels);
        let image = subquotient_of_lattices(&with_rels, &self.codomain.rels);
        let coker = cokernel(&with_rels);
        HomAnalysis { kernel, image, cokernel: coker }
    }

    pub fn is_isomorphism(&self) -> bool {
        if !self.is_well_defined() {
            return false;
        }
        let a = self.analyze();
        a.kernel.is_trivial() && a.cokernel.is_trivial()
    }
}

/// Exactness data at the middle of `A --f--> B --g--> C`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JunctionCheck {
    /// whether g ∘ f = 0
    pub composite_zero: bool,
    /// ker(g) / im(f); trivial iff exact (given composite_zero)
    pub homology: AbelianGroup,
}

impl JunctionCheck {
    pub fn is_exact(&self) -> bool {
        self.composite_zero && self.homology.is_trivial()
    }
}

/// Check exactness at B for `A --f--> B --g--> C`.
pub fn junction(f: &GroupHom, g: &GroupHom) -> JunctionCheck {
    assert_eq!(f.codomain.gens, g.domain.gens, "junction mismatch");
    let composite_zero = g.compose(f).is_zero_map();
    let ker_gens = preimage_generators(&g.matrix, &g.codomain.rels);
    let im_and_rels = f.matrix.hstack(&f.codomain.rels);
    let homology = subquotient_of_lattices(&ker_gens, &im_and_rels);
    JunctionCheck { composite_zero, homology }
}

impl std::fmt::Display for HomAnalysis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ker = {}, im = {}, coker = {}",
            self.kernel, self.image, self.cokernel
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn multiplication_by_two_on_z() {
        let z = Presentation::free(1);
        let two = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[vec![2]]));
        assert!(two.is_well_defined());
        let a = two.analyze();
        assert_eq!(a.kernel, AbelianGroup::trivial());
        assert_eq!(a.image, AbelianGroup::free(1));
        assert_eq!(a.cokernel, AbelianGroup::cyclic(2));
        assert!(!two.is_isomorphism());
    }

    #[test]
    fn projection_z_to_z_mod_2() {
        let z = Presentation::free(1);
        let z2 = Presentation::canonical(&AbelianGroup::cyclic(2));
        let proj = GroupHom::new(z, z2, IntMatrix::from_rows(&[vec![1]]));
        assert!(proj.is_well_defined());
        let a = proj.analyze();
        assert_eq!(a.kernel, AbelianGroup::free(1));
        assert_eq!(a.image, AbelianGroup::cyclic(2));
        assert_eq!(a.cokernel, AbelianGroup::trivial());
    }

    #[test]
    fn ill_defined_map_detected() {
        // Z/2 -> Z by 1 is not a homomorphism of presented groups.
        let z2 = Presentation::canonical(&AbelianGroup::cyclic(2));
        let z = Presentation::free(1);
        let bad = GroupHom::new(z2, z, IntMatrix::from_rows(&[vec![1]]));
        assert!(!bad.is_well_defined());
    }

    #[test]
    fn kernel_of_quotient_by_torsion() {
        // Z/4 -> Z/2 by reduction: kernel Z/2, image Z/2, cokernel 0.
        let z4 = Presentation::canonical(&AbelianGroup::cyclic(4));
        let z2 = Presentation::canonical(&AbelianGroup::cyclic(2));
        let red = GroupHom::new(z4, z2, IntMatrix::from_rows(&[vec![1]]));
        assert!(red.is_well_defined());
        let a = red.analyze();
        assert_eq!(a.kernel, AbelianGroup::cyclic(2));
        assert_eq!(a.image, AbelianGroup::cyclic(2));
        assert_eq!(a.cokernel, AbelianGroup::trivial());
    }

    #[test]
    fn exact_junction_z_mod_2_sequence() {
        // 0 -> Z --2--> Z --1--> Z/2 -> 0 is exact at the middle Z.
        let z = Presentation::free(1);
        let z2 = Presentation::canonical(&AbelianGroup::cyclic(2));
        let two = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[vec![2]]));
        let proj = GroupHom::new(z.clone(), z2, IntMatrix::from_rows(&[vec![1]]));
        let j = junction(&two, &proj);
        assert!(j.composite_zero);
        assert!(j.homology.is_trivial());
        assert!(j.is_exact());
    }

    #[test]
    fn inexact_junction_reports_homology() {
        // Z --4--> Z --1--> Z/2: composite zero but ker/im = Z/2 at middle.
        let z = Presentation::free(1);
        let z2 = Presentation::canonical(&AbelianGroup::cyclic(2));
        let four = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[vec![4]]));
        let proj = GroupHom::new(z.clone(), z2, IntMatrix::from_rows(&[vec![1]]));
        let j = junction(&four, &proj);
        assert!(j.composite_zero);
        assert_eq!(j.homology, AbelianGroup::cyclic(2));
        assert!(!j.is_exact());
    }

    #[test]
    fn nonzero_composite_detected() {
        let z = Presentation::free(1);
        let one = GroupHom::identity(&z);
        let j = junction(&one, &one);
        assert!(!j.composite_zero);
        assert!(!j.is_exact());
    }

    #[test]
    fn isomorphism_with_torsion() {
        // Z/2 + Z/4 -> Z/2 + Z/4 by an invertible matrix respecting the chain.
        let g = AbelianGroup::new(0, vec![big(2), big(4)]);
        let p = Presentation::canonical(&g);
        // (x, y) -> (x + 2y mod 2 ... ) keep it simple: swap-free unimodular
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![0, 1]]);
        let h = GroupHom::new(p.clone(), p.clone(), m);
        assert!(h.is_well_defined());
        assert!(h.is_isomorphism());
    }

    #[test]
    fn zero_map_analysis() {
        let z = Presentation::free(2);
        let h = GroupHom::zero(z.clone(), z.clone());
        assert!(h.is_zero_map());
        let a = h.analyze();
        assert_eq!(a.kernel, AbelianGroup::free(2));
        assert_eq!(a.image, AbelianGroup::trivial());
        assert_eq!(a.cokernel, AbelianGroup::free(2));
    }
}
