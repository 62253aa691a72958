//! Checks isotropy at the representative points of the Spin(7) and Spin(6)
//! orbit decompositions.
//!
//! Usage: cargo run --example orbit_geometry -- [SEED]

use octoverify::actions::{check_orbit_geometry, verify_proof_steps, Lemma, ORBIT_RANDOM_WORDS};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let results = check_orbit_geometry(seed, ORBIT_RANDOM_WORDS)
        .into_iter()
        .chain(verify_proof_steps(Lemma::ThreeComponents));
    for r in results {
        println!("{:<8} {}", r.status, r.name);
    }
}
