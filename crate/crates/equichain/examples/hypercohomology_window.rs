//! The graded groups S_n of the action double complex. For a point they are
//! the cohomology of the group; in general they interpolate between the
//! homology of X (far right) and 2-periodic group-cohomology behaviour
//! (far left).
//! Run with: cargo run --example hypercohomology_window

use equichain::homology::Coeff;
use equichain::hyper::s_groups;
use equichain::spaces;

fn main() -> equichain::Result<()> {
    for name in ["point(3)", "sphere_reflection", "circle_rotation(5)"] {
        let x = spaces::builtin(name)?;
        let d = x.top_dim();
        let groups = s_groups(&x, Coeff::Z, -6, d)?;
        println!("{name}:");
        for (n, g) in groups.iter().rev() {
            println!("  S_{n} = {g}");
        }
        println!();
    }
    println!("for the free rotation every negative degree vanishes: the");
    println!("action has no isotropy, so nothing survives below degree 0.");
    Ok(())
}
