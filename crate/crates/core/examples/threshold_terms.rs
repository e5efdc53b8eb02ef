//! Builds the threshold term for a dyadic `r` and checks on the 1/2^k grid
//! that it takes the value 1 exactly on `[r, 1]`.
//!
//! ```text
//! cargo run --example threshold_terms -- 5/8 6
//! ```

use qtense::rational::{DyadicRational, UnitRational};
use qtense::terms::{threshold_term, verify_threshold};

fn main() -> qtense::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let r: UnitRational = args.first().map(String::as_str).unwrap_or("5/8").parse()?;
    let k: u32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(6);

    let r = DyadicRational::new(r)?;
    let t = threshold_term(&r);
    println!("t_{} = {t}", r.value());
    for i in 0..=(1u64 << 3) {
        let x = UnitRational::dyadic(i, 3)?;
        println!("  t({x}) = {}", t.eval_std(&x));
    }

    let report = verify_threshold(k)?;
    println!(
        "grid 1/2^{k}: {} pairs, {} failures, {} proposition failures",
        report.pairs_checked,
        report.failures.len(),
        report.proposition_failures.len()
    );
    Ok(())
}
