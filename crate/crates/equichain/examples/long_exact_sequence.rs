//! The long exact sequence linking quotient homology, invariant-chain
//! homology, and the mod-p homology of the fixed set, printed with an
//! exactness verdict at every junction.
//! Run with: cargo run --example long_exact_sequence

use equichain::les::{build_les, check_exact};
use equichain::spaces;

fn main() -> equichain::Result<()> {
    for name in ["sphere_reflection", "circle_reflection", "circle_rotation(3)"] {
        let x = spaces::builtin(name)?;
        let les = build_les(&x, x.top_dim() + 1)?;
        println!("{name} (p = {}):", les.p);
        for line in les.lines() {
            println!("  {line}");
        }
        let report = check_exact(&les);
        println!(
            "  exact at every junction: {}\n",
            if report.passed() { "yes" } else { "NO" }
        );
    }
    Ok(())
}
