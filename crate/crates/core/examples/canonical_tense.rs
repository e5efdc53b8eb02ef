//! Canonical tense operators on `M^S` for a time frame `(S, R)` and a finite
//! Łukasiewicz chain `M`, with the frame-property corollaries.
//!
//! ```text
//! cargo run --example canonical_tense
//! ```

use qtense::algebra::{library, FinitePoset};
use qtense::tense::{canonical_tense, CertifyOptions, Frame};

fn main() -> qtense::Result<()> {
    let m = library::lukasiewicz_chain(3)?;
    // a preorder on three instants
    let frame = Frame::from_pairs(3, 3, &[(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)])?;
    let t = canonical_tense(&m, &frame, &CertifyOptions::default())?;
    println!("M^S has {} elements", t.power.size());
    for c in &t.tense.axioms {
        println!("{}: {}", c.name, c.verdict);
    }
    println!("verdict: {}", t.verdict());
    for (property, item) in [
        ("reflexive", &t.corollary.reflexive),
        ("symmetric", &t.corollary.symmetric),
        ("transitive", &t.corollary.transitive),
    ] {
        match item {
            Some(v) => println!("R {property}: corollary {v}"),
            None => println!("R not {property}"),
        }
    }

    let x = t.power.encode(&[2, 1, 0]);
    let show = |p: usize| format!("{:?}", (0..3).map(|i| t.power.component(p, i)).collect::<Vec<_>>());
    println!("p = {}: G p = {}, H p = {}, P p = {}, F p = {}", show(x), show(t.g.apply(x)), show(t.h.apply(x)), show(t.p.apply(x)), show(t.f.apply(x)));
    Ok(())
}
