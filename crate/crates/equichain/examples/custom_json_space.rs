//! Bring your own space: the JSON document format the CLI reads. Here an
//! interval is folded in half — Z/2 swaps the endpoints and the two half
//! edges, fixing the midpoint.
//! Run with: cargo run --example custom_json_space

use equichain::cli::document::ComplexDocument;
use equichain::homology::{equivariant_homology, fixed_homology, Coeff};

const FOLDED_INTERVAL: &str = r#"{
  "group": { "cyclic": 2 },
  "cells": [3, 2],
  "boundaries": [
    [ [-1,  0],
      [ 0, -1],
      [ 1,  1] ]
  ],
  "action": [
    [ [[0, 1], [1, 1], [2, 1]], [[0, 1], [1, 1]] ],
    [ [[1, 1], [0, 1], [2, 1]], [[1, 1], [0, 1]] ]
  ],
  "labels": [ ["v0", "v1", "mid"], ["a", "b"] ]
}"#;

fn main() -> equichain::Result<()> {
    let doc = ComplexDocument::parse(FOLDED_INTERVAL)?;
    let x = doc.to_complex()?;

    let violations = x.validate();
    println!("validate: {}", if violations.is_empty() { "ok" } else { "FAILED" });
    for v in &violations {
        println!("  {v}");
    }

    println!(
        "invariant homology: {}",
        equivariant_homology(&x, Coeff::Z)?.notation_line()
    );
    println!(
        "fixed set mod 2:    {}",
        fixed_homology(&x, Coeff::Zp(2))?.notation_line()
    );

    // the same document can be written to disk and fed to the CLI:
    //   equichain homology folded.json --which invariant --coeff z
    println!("\ncanonical form:\n{}", ComplexDocument::from_complex(&x)?.render());
    Ok(())
}
