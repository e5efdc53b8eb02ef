//! Galois connections between finite posets: a powerset pair from a
//! relation, the right adjoint of a monotone map, and a connection between
//! chains that fails to transport q and d.
//!
//! ```text
//! cargo run --example galois_connections
//! ```

use qtense::algebra::{library, AlgebraMap};
use qtense::tense::{check_galois_connection, check_q_transport, powerset_galois, right_adjoint, PowersetPoset, Scope};

fn main() -> qtense::Result<()> {
    let a = PowersetPoset::with_size(2)?;
    let b = PowersetPoset::with_size(3)?;
    let rel = vec![vec![true, false, true], vec![false, true, false]];
    let (pair, report) = powerset_galois(&a, &b, &rel);
    println!("powerset pair: connection {}, conditions agree {}", report.is_connection(), report.agree());
    println!("  f = {:?}\n  g = {:?}", pair.f.table(), pair.g.table());

    // L3 embeds in L5; floor is its right adjoint
    let l3 = library::lukasiewicz_chain(3)?;
    let l5 = library::lukasiewicz_chain(5)?;
    let f = AlgebraMap::new(vec![0, 2, 4]);
    let g = right_adjoint(&l3, &l5, &f).expect("the embedding is residuated");
    println!("right adjoint of the embedding: {:?}", g.table());
    let report = check_galois_connection(&l3, &l5, &f, &g, &Scope::Exhaustive);
    println!("  connection {}", report.is_connection());
    let (gq1, gq2) = check_q_transport(&l3, &l5, &f, &g, &Scope::Exhaustive);
    println!("  f commutes with q, d: {gq1}\n  g commutes with q, d: {gq2}");

    let twist = AlgebraMap::new(vec![1, 0, 2]);
    println!("right adjoint of a non-monotone map: {:?}", right_adjoint(&l3, &l3, &twist).map(|g| g.table().to_vec()));
    Ok(())
}
