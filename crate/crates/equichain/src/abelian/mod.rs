//! Exact linear algebra over Z and Z/p: big-integer matrices, Smith normal
//! form with unimodular change-of-basis trackers, lattice arithmetic
//! (preimages, subquotients), finitely generated abelian groups in
//! invariant-factor form, and homomorphisms between presented groups.

pub mod group;
pub mod hom;
pub mod matrix;
pub mod modp;
pub mod smith;

pub use group::{cokernel, subquotient_of_lattices, AbelianGroup, Presentation, Subquotient};
pub use hom::{junction, GroupHom, HomAnalysis, JunctionCheck};
pub use matrix::IntMatrix;
pub use modp::{col_rank, is_prime, ModMatrix, SpanBuilder};
pub use smith::{
    kernel_basis_z, lattice_contains, preimage_generators, smith_normal_form, solve_columns,
    SmithForm,
};

use crate::error::{Error, Result};

/// Kernel basis of an integer matrix over Z (modulus `None`) or over the
/// field Z/p (modulus `Some(p)`, p prime). Columns of the result span the
/// kernel; over Z/p entries are lifted to `0..p`.
pub fn kernel_basis(a: &IntMatrix, modulus: Option<u64>) -> Result<IntMatrix> {
    match modulus {
        None => Ok(kernel_basis_z(a)),
        Some(p) => {
            if !is_prime(p) {
                return Err(Error::CompositeModulus(p));
            }
            Ok(ModMatrix::from_int(a, p).kernel().lift())
        }
    }
}
