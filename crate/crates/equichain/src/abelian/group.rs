use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::modp::{is_prime, ModMatrix};
use super::smith::{kernel_basis_z, preimage_generators, smith_normal_form, solve_columns};
use crate::error::{Error, Result};

/// A finitely generated abelian group in invariant-factor form:
/// `Z^free_rank + Z/t1 + ... + Z/tk` with `t1 | t2 | ... | tk`, all `ti >= 2`.
/// Two values are equal iff the groups are isomorphic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        assert!(torsion.iter().all(|t| *t >= BigInt::from(2)), "torsion entries must be >= 2");
        assert!(
            torsion.windows(2).all(|w| w[1].mod_floor(&w[0]).is_zero()),
            "torsion must form a divisibility chain"
        );
        AbelianGroup { free_rank, torsion }
    }

    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, torsion: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 2);
        AbelianGroup { free_rank: 0, torsion: vec![BigInt::from(n)] }
    }

    /// (Z/p)^dim — what homology over the field Z/p produces.
    pub fn vector_space(p: u64, dim: usize) -> Self {
        AbelianGroup { free_rank: 0, torsion: vec![BigInt::from(p); dim] }
    }

    /// Cokernel of a matrix with `rows` ambient generators and the given
    /// Smith pivots.
    pub fn from_pivots(rows: usize, pivots: &[BigInt]) -> Self {
        let torsion: Vec<BigInt> = pivots.iter().filter(|p| **p > BigInt::one()).cloned().collect();
        AbelianGroup { free_rank: rows - pivots.len(), torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    /// Smallest `e >= 1` with `e * x = 0` for all `x`; `None` when infinite.
    pub fn exponent(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.last().cloned().unwrap_or_else(BigInt::one))
    }

    /// Dimension as a Z/p-vector space if the group is one, else `None`.
    pub fn dim_over(&self, p: u64) -> Option<usize> {
        let bp = BigInt::from(p);
        if self.free_rank == 0 && self.torsion.iter().all(|t| *t == bp) {
            Some(self.torsion.len())
        } else {
            None
        }
    }

    /// Number of invariant factors divisible by `p` — the p-torsion corank
    /// that universal coefficients sees.
    pub fn p_torsion_count(&self, p: u64) -> usize {
        let bp = BigInt::from(p);
        self.torsion.iter().filter(|t| t.mod_floor(&bp).is_zero()).count()
    }

    /// Drop one Z summand (reduced homology in degree zero of a connected
    /// complex). Panics if there is none to drop.
    pub fn drop_free_summand(&self) -> Self {
        assert!(self.free_rank >= 1, "no free summand to drop");
        AbelianGroup { free_rank: self.free_rank - 1, torsion: self.torsion.clone() }
    }

    /// Canonical notation: "0", "Z", "Z^2 + Z/2 + Z/4", ...
    pub fn notation(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.notation())
    }
}

/// `Z^rows / col-span(a)` in invariant-factor form.
pub fn cokernel(a: &IntMatrix) -> AbelianGroup {
    let s = smith_normal_form(a);
    AbelianGroup::from_pivots(a.rows(), &s.pivots)
}

/// A group given by generators and relations: `Z^gens / col-span(rels)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    pub gens: usize,
    /// gens x r matrix whose columns are the relators.
    pub rels: IntMatrix,
}

impl Presentation {
    pub fn free(gens: usize) -> Self {
        Presentation { gens, rels: IntMatrix::zeros(gens, 0) }
    }

    pub fn new(gens: usize, rels: IntMatrix) -> Self {
        assert_eq!(rels.rows(), gens);
        Presentation { gens, rels }
    }

    /// The canonical presentation of `Z^free + Z/t1 + ...`: free generators
    /// first, then one torsion generator per invariant factor.
    pub fn canonical(group: &AbelianGroup) -> Self {
        let free = group.free_rank();
        let k = group.torsion().len();
        let mut rels = IntMatrix::zeros(free + k, k);
        for (i, t) in group.torsion().iter().enumerate() {
            rels.set(free + i, i, t.clone());
        }
        Presentation { gens: free + k, rels }
    }

    pub fn group(&self) -> AbelianGroup {
        cokernel(&self.rels)
    }

    pub fn is_trivial_group(&self) -> bool {
        self.group().is_trivial()
    }
}

/// `span(num) / (span(num) ∩ span(den))` for integer lattices given by
/// generating sets (columns). When `span(den) ⊆ span(num)` this is the honest
/// subquotient; generators need not be independent.
pub fn subquotient_of_lattices(num: &IntMatrix, den: &IntMatrix) -> AbelianGroup {
    assert_eq!(num.rows(), den.rows());
    let rels = preimage_generators(num, den);
    cokernel(&rels)
}

/// A subquotient `span(gens)/span(boundaries)` of an ambient `Z^n` or
/// `(Z/p)^n`, retaining enough of the Smith data to map arbitrary ambient
/// elements of the subgroup to canonical coordinates. This is what lets
/// chain-level cycles become homology classes, and chain maps become
/// homomorphisms on the computed groups.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub group: AbelianGroup,
    /// ambient x t spanning set of the subgroup ("cycles").
    gens: IntMatrix,
    modulus: Option<u64>,
    /// Smith data of the full relation matrix on the t generators.
    u: IntMatrix,
    pivots: Vec<BigInt>,
    /// indices into y = U*w coordinates
    free_idx: Vec<usize>,
    torsion_idx: Vec<usize>,
    /// ambient representatives of the canonical generators (free, then torsion)
    pub reps: IntMatrix,
}

impl Subquotient {
    /// `gens`: ambient x t columns spanning the subgroup; `boundaries`:
    /// ambient x b columns spanning the subgroup to kill. Errors with
    /// `NotASubgroup` when a boundary is not in the span of the generators.
    pub fn new(gens: IntMatrix, boundaries: &IntMatrix, modulus: Option<u64>) -> Result<Self> {
        if let Some(p) = modulus {
            if !is_prime(p) {
                return Err(Error::CompositeModulus(p));
            }
        }
        assert_eq!(gens.rows(), boundaries.rows(), "ambient dimension mismatch");
        let t = gens.cols();

        // Express boundaries in the generators, then add generator
        // dependencies (and p-multiples mod p) as relations.
        let rels = match modulus {
            None => {
                let x = solve_columns(&gens, boundaries).ok_or_else(|| {
                    Error::NotASubgroup("boundary outside the cycle span".into())
                })?;
                let dep = kernel_basis_z(&gens);
                x.hstack(&dep)
            }
            Some(p) => {
                let gp = ModMatrix::from_int(&gens, p);
                let bp = ModMatrix::from_int(boundaries, p);
                let x = gp.solve(&bp).ok_or_else(|| {
                    Error::NotASubgroup("boundary outside the cycle span mod p".into())
                })?;
                let dep = gp.kernel();
                let mut pid = IntMatrix::zeros(t, t);
                for i in 0..t {
                    pid.set(i, i, BigInt::from(p));
                }
                x.lift().hstack(&dep.lift()).hstack(&pid)
            }
        };

        let s = smith_normal_form(&rels);
        let k = s.pivots.len();
        let mut free_idx = Vec::new();
        let mut torsion_idx = Vec::new();
        for i in 0..t {
            if i >= k {
                free_idx.push(i);
            } else if s.pivots[i] > BigInt::one() {
                torsion_idx.push(i);
            }
        }
        let torsion: Vec<BigInt> = torsion_idx.iter().map(|&i| s.pivots[i].clone()).collect();
        let group = AbelianGroup::new(free_idx.len(), torsion);

        // Ambient representatives of the canonical generators: gens * U^-1 e_i.
        let mut rep_cols: Vec<Vec<BigInt>> = Vec::new();
        for &i in free_idx.iter().chain(torsion_idx.iter()) {
            let w = s.u_inv.column(i);
            let mut amb = gens.mul_vec(&w);
            if let Some(p) = modulus {
                let bp = BigInt::from(p);
                for e in amb.iter_mut() {
                    *e = e.mod_floor(&bp);
                }
            }
            rep_cols.push(amb);
        }
        let reps = IntMatrix::from_columns(gens.rows(), &rep_cols);

        Ok(Subquotient {
            group,
            gens,
            modulus,
            u: s.u,
            pivots: s.pivots,
            free_idx,
            torsion_idx,
            reps,
        })
    }

    /// The whole lattice spanned by a basis, killed by boundaries — the usual
    /// homology situation where `gens` is a kernel basis.
    pub fn presentation(&self) -> Presentation {
        Presentation::canonical(&self.group)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    /// Canonical coordinates of an ambient element of the subgroup:
    /// free coordinates first, then torsion coordinates reduced into `0..t_i`.
    /// Errors if the vector is not in the span of the generators.
    pub fn project(&self, ambient: &[BigInt]) -> Result<Vec<BigInt>> {
        let col = IntMatrix::from_columns(self.gens.rows(), &[ambient.to_vec()]);
        let w = match self.modulus {
            None => solve_columns(&self.gens, &col)
                .ok_or_else(|| Error::Internal("projected vector outside subgroup".into()))?,
            Some(p) => {
                let gp = ModMatrix::from_int(&self.gens, p);
                gp.solve(&ModMatrix::from_int(&col, p))
                    .ok_or_else(|| Error::Internal("projected vector outside subgroup mod p".into()))?
                    .lift()
            }
        };
        let y = self.u.mul(&w);
        let mut out = Vec::with_capacity(self.free_idx.len() + self.torsion_idx.len());
        for &i in &self.free_idx {
            out.push(y.get(i, 0).clone());
        }
        for &i in &self.torsion_idx {
            out.push(y.get(i, 0).mod_floor(&self.pivots[i]));
        }
        if let Some(p) = self.modulus {
            let bp = BigInt::from(p);
            for e in out.iter_mut() {
                *e = e.mod_floor(&bp);
            }
        }
        Ok(out)
    }
}
