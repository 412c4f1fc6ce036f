//! Quotients of acyclic complexes are acyclic. The check verifies the
//! quotient directly, then cross-examines the graded groups S_n (which must
//! look like the cohomology of the group) and the invariant-chain homology
//! (concentrated in degree 0).
//! Run with: cargo run --example acyclic_quotients

use equichain::spaces;
use equichain::theorems::conner_check;

fn main() -> equichain::Result<()> {
    for name in [
        "cone_of(circle_rotation(2))",
        "cone_of(circle_rotation(5))",
        "cone_of(cross_polytope_sphere(2))",
    ] {
        let x = spaces::builtin(name)?;
        let report = conner_check(&x)?;
        println!("{name}: {}", if report.passed() { "pass" } else { "FAIL" });
        for item in &report.checks {
            println!("  {} -- {}", item.name, item.detail);
        }
        println!();
    }

    // a sphere is not acyclic: the hypothesis is refused up front
    let sphere = spaces::sphere_reflection();
    match conner_check(&sphere) {
        Err(e) => println!("sphere_reflection: {e}"),
        Ok(_) => println!("sphere_reflection: unexpectedly accepted"),
    }
    Ok(())
}
