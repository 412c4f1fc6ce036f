//! When a finite group acts freely on a complex, the norm map identifies
//! coinvariant and invariant chains, so H(G, X) agrees with H(X/G). The lens
//! space S^3 / (Z/3) and the torus with Z/2 translation both demonstrate it;
//! a reflection (which fixes points) fails the freeness check.
//! Run with: cargo run --example free_actions

use equichain::homology::{norm_induced, Coeff};
use equichain::spaces;
use equichain::theorems::free_action_check;

fn main() -> equichain::Result<()> {
    for (label, x) in [
        ("lens_sphere(3)", spaces::lens_sphere(3)?),
        ("torus_diagonal(2)", spaces::torus_diagonal(2)?),
    ] {
        let n = norm_induced(&x, Coeff::Z)?;
        println!("{label}:");
        println!("  H(G,X)  {}", n.invariant_homology.notation_line());
        println!("  H(X/G)  {}", n.coinvariant_homology.notation_line());
        for (k, m) in n.maps.iter().enumerate() {
            println!(
                "  norm in degree {k}: {}",
                if m.is_isomorphism() { "isomorphism" } else { "NOT an isomorphism" }
            );
        }
        let report = free_action_check(&x)?;
        println!("  free_action_check: {}", if report.passed() { "pass" } else { "fail" });
    }

    println!();
    match free_action_check(&spaces::circle_reflection()) {
        Ok(_) => println!("circle_reflection: unexpectedly accepted"),
        Err(e) => println!("circle_reflection rejected: {e}"),
    }
    Ok(())
}
