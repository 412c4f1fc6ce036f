//! Equivariant homology doesn't care how finely a simplicial complex is
//! triangulated. Each catalog entry is barycentrically subdivided (the group
//! action carries over to the subdivision) and three chain models are
//! compared degree by degree.
//! Run with: cargo run --example subdivision_invariance

use equichain::complexes::EquivariantChainComplex;
use equichain::homology::{
    equivariant_homology, fixed_homology, quotient_homology, Coeff, GradedGroup,
};
use equichain::spaces::simplicial_catalog;

type Model = fn(&EquivariantChainComplex, Coeff) -> equichain::Result<GradedGroup>;

fn main() -> equichain::Result<()> {
    let models: [(&str, Model); 3] = [
        ("invariant", equivariant_homology),
        ("quotient", quotient_homology),
        ("fixed", fixed_homology),
    ];

    for (name, s) in simplicial_catalog() {
        let coarse = s.to_chain_complex()?;
        let fine = s.barycentric_subdivision().to_chain_complex()?;

        print!(
            "{name}: {} -> {} cells;",
            coarse.complex().total_cells(),
            fine.complex().total_cells()
        );
        for (label, model) in models {
            let a = model(&coarse, Coeff::Z)?;
            let b = model(&fine, Coeff::Z)?;
            let top = a.top_dim().max(b.top_dim());
            let agree = (0..=top).all(|k| a.group(k) == b.group(k));
            print!(" {label} {}", if agree { "agrees" } else { "DISAGREES" });
        }
        println!();
    }
    Ok(())
}
