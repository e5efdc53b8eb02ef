//! Enumerates the extreme q-states of each small bundled algebra and shows
//! the meet of two of them as a Jauch-Piron q-semi-state.
//!
//! ```text
//! cargo run --example q_states
//! ```

use qtense::algebra::{library, FinitePoset};
use qtense::states::{check_semi_state, enumerate_extreme_q_states, meet_semistates, SemiLevel};

fn show(values: &[qtense::rational::UnitRational]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() -> qtense::Result<()> {
    for (name, alg) in library::bundled_examples() {
        if alg.size() > 12 {
            continue;
        }
        let states = enumerate_extreme_q_states(&alg)?;
        println!("{name}: {} extreme q-state(s)", states.len());
        for s in states.iter() {
            println!("  ({})", show(&s.values));
        }
        if states.len() >= 2 {
            let meet = meet_semistates(alg.size(), &states.members[..2]);
            let rep = check_semi_state(&alg, &meet.vector.values, SemiLevel::JauchPiron);
            println!(
                "  meet of the first two: ({}) q-semi {}, Jauch-Piron {:?}",
                show(&meet.vector.values),
                rep.q_semi,
                rep.jauch_piron
            );
        }
    }
    Ok(())
}
