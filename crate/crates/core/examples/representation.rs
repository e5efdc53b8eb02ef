//! Recovers a time frame from tense operators: builds G and H on Ł3 × Ł3
//! from a relation on the coordinates, then synthesizes `R_G` from the
//! MV-morphisms and checks the diagram squares exactly.
//!
//! ```text
//! cargo run --example representation
//! ```

use qtense::algebra::library;
use qtense::representation::{enumerate_mv_morphisms, frame_operators_on_chain_product, verify_tense_representation};
use qtense::tense::Frame;

fn main() -> qtense::Result<()> {
    let lengths = [3, 3];
    let alg = library::chain_product(&lengths)?;
    let generator = Frame::from_pairs(2, 2, &[(1, 1), (0, 1)])?;
    let (g, h) = frame_operators_on_chain_product(&alg, &lengths, &generator)?;

    let states = enumerate_mv_morphisms(&alg)?;
    println!("{} MV-morphisms", states.len());
    for s in states.iter() {
        println!("  {:?}", s.values.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    }

    let out = verify_tense_representation(&alg, &g, &h, None)?;
    println!("{}", out.report.to_text());
    if let Some(f) = out.frame {
        println!("synthesized relation: {:?}", f.frame.pairs());
    }
    Ok(())
}
