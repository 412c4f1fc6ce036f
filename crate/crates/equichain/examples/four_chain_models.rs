//! The four chain models of one action, side by side: the total complex of
//! X, the invariant chains, the quotient complex, and the fixed subcomplex.
//! Run with: cargo run --example four_chain_models

use equichain::homology::{
    equivariant_homology, fixed_homology, homology, quotient_homology, Coeff,
};
use equichain::spaces;

fn main() -> equichain::Result<()> {
    let x = spaces::circle_reflection();
    println!("space: circle with the arc-swapping involution");
    println!("cells: {:?}\n", x.complex().cell_counts());

    for coeff in [Coeff::Z, Coeff::Zp(2)] {
        println!("coefficients {coeff}:");
        println!("  total     {}", homology(x.complex(), coeff)?.notation_line());
        println!("  invariant {}", equivariant_homology(&x, coeff)?.notation_line());
        println!("  quotient  {}", quotient_homology(&x, coeff)?.notation_line());
        println!("  fixed     {}", fixed_homology(&x, coeff)?.notation_line());
        println!();
    }

    // the torsion class in degree 0 is the difference of the two fixed
    // vertices: invisible in the space, born in the invariant complex
    let hz = equivariant_homology(&x, Coeff::Z)?;
    println!("H_0 of the invariant complex: {}", hz.group(0).notation());
    println!("(the circle itself has H_0 = Z; the Z/2 remembers the two fixed points)");
    Ok(())
}
