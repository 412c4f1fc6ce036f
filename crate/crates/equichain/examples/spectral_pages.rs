//! Spectral pages of the double complex, and the collapse theorem: for the
//! filtration by complex degree, E^2 already equals E^infinity over Z/p.
//! Run with: cargo run --example spectral_pages

use equichain::hyper::{collapse_check, e_infinity, page, Filtration};
use equichain::spaces;

fn show(title: &str, sp: &equichain::hyper::SpectralPage) {
    println!("  {title}:");
    for (&(q, t), &dim) in &sp.entries {
        println!("    ({q},{t}) -> dimension {dim}");
    }
}

fn main() -> equichain::Result<()> {
    let x = spaces::sphere_reflection();
    let p = 2;

    let e2 = page(&x, Filtration::I, 2, p)?;
    let einf = e_infinity(&x, Filtration::I, p)?;
    println!("sphere_reflection, filtration I, p = {p}");
    show("E^2", &e2);
    show("E^infinity (from the filtration of the total homology)", &einf);

    let report = collapse_check(&x)?;
    println!("\ncollapse at the second page: {}", if report.passed() { "yes" } else { "NO" });

    // the other filtration does move: its d_1 is the group differential
    let e1 = page(&x, Filtration::II, 1, p)?;
    let e2b = page(&x, Filtration::II, 2, p)?;
    println!("\nfiltration II sizes, E^1 vs E^2:");
    println!(
        "  E^1 total dimension {}",
        e1.entries.values().sum::<usize>()
    );
    println!(
        "  E^2 total dimension {}",
        e2b.entries.values().sum::<usize>()
    );
    Ok(())
}
