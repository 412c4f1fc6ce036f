//! Smith theory at desk scale: a prime-order action on a mod-p homology
//! sphere fixes the empty set or a smaller mod-p homology sphere, and on a
//! mod-p acyclic complex it fixes a nonempty mod-p acyclic set.
//! Run with: cargo run --example smith_fixed_points

use equichain::spaces;
use equichain::theorems::smith_check;

fn main() -> equichain::Result<()> {
    let cases = [
        "sphere_reflection",          // fixed circle: m = 1
        "circle_reflection",          // two fixed points: m = 0
        "circle_rotation(3)",         // free: empty fixed set
        "cross_polytope_sphere(3)",   // antipodal: empty fixed set
        "lens_sphere(5)",             // free on S^3
        "cone_of(circle_rotation(3))", // acyclic: the apex alone
    ];
    for name in cases {
        let x = spaces::builtin(name)?;
        let report = smith_check(&x)?;
        println!("{name}:");
        for line in report.render_text().lines() {
            if line.starts_with("command") || line.starts_with("input") {
                continue;
            }
            println!("  {line}");
        }
        println!();
    }
    Ok(())
}
