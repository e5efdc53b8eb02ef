//! Validates the eleven-element q-effect algebra shipped in `data/fig1.alg`
//! and prints its q/d table, order class and Riesz decomposition status.
//!
//! ```text
//! cargo run --example fig1_algebra
//! ```

use qtense::algebra::{check_rdp, classify, FinitePoset, QEffect};
use qtense::io::parse_algebra;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig1.alg"))?;
    let doc = parse_algebra(&text)?;
    let (alg, q_report) = doc.load()?;

    println!("{:>5} {:>5} {:>5}", "x", "q(x)", "d(x)");
    for x in 0..alg.size() {
        println!("{:>5} {:>5} {:>5}", alg.name(x), alg.name(alg.q(x)), alg.name(alg.d(x)));
    }

    if q_report.passed() {
        println!("(Q1)-(Q5) hold");
    } else {
        println!("(Q1)-(Q5) fail:");
        for v in &q_report.violations {
            println!("  {v}");
        }
    }

    let c = classify(&alg);
    println!("lattice: {} ({:?})", c.is_lattice, c.lattice_witness);
    match check_rdp(&alg) {
        None => println!("Riesz decomposition holds"),
        Some(w) => println!("Riesz decomposition fails: {} <= {} + {}", w.x, w.y1, w.y2),
    }
    Ok(())
}
