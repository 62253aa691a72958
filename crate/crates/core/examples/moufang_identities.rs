//! Evaluates the three Moufang residuals on seeded random rational octonions.
//!
//! Usage: cargo run --example moufang_identities -- [SEED]

use octoverify::octonion::{associator, moufang_residuals};
use octoverify::sampling::{random_octonion, seeded_rng};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let mut rng = seeded_rng(seed);
    for trial in 0..4 {
        let x = random_octonion(&mut rng);
        let y = random_octonion(&mut rng);
        let z = random_octonion(&mut rng);
        let res = moufang_residuals(&x, &y, &z).expect("octonions are flexible");
        println!("trial {trial}");
        println!("  x = {x:?}");
        println!("  y = {y:?}");
        println!("  z = {z:?}");
        // Nonzero in general: the algebra is not associative.
        println!("  [x,y,z]           = {:?}", associator(&x, &y, &z));
        for (name, r) in ["m1", "m2", "m3"].iter().zip(&res) {
            println!("  {name} residual      = {r:?}");
        }
    }
}
