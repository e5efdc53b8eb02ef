//! Ideals of a q-effect algebra, the Riesz property of each, and the
//! quotient by a Riesz ideal with its induced q and d when they exist.
//!
//! ```text
//! cargo run --example ideals_quotients
//! ```

use qtense::algebra::{check_riesz, enumerate_ideals, library, quotient};

fn main() -> qtense::Result<()> {
    let alg = library::boolean_cube(2)?;
    for ideal in enumerate_ideals(&alg) {
        let names: Vec<&str> = ideal.members.iter().map(|&x| alg.name(x)).collect();
        let riesz = check_riesz(&alg, &ideal);
        print!("ideal {{{}}} Riesz {riesz}", names.join(", "));
        if riesz {
            match quotient(&alg, &ideal) {
                Ok(quot) => {
                    let q = quot.q_algebra(&alg).is_some();
                    print!(", quotient has {} classes, q/d induced {q}", quot.classes.len());
                }
                Err(e) => print!(", no quotient: {e}"),
            }
        }
        println!();
    }
    Ok(())
}
