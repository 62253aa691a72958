//! Replays the step-by-step argument for equivariance of the fields
//! p -> p i_m, one exact check per step.

use octoverify::actions::{check_a_vs_b, check_mixed_identity, verify_proof_steps, Lemma};

fn main() {
    for r in verify_proof_steps(Lemma::Field) {
        println!("{:<8} {}", r.status, r.name);
        if let Some(w) = &r.witness {
            println!(
                "         {}: got {}, expected {}",
                w.input, w.got, w.expected
            );
        }
    }
    let ab = check_a_vs_b();
    println!("\n{:<8} {}", ab.status, ab.name);
    for k in 1..=6 {
        let r = check_mixed_identity(k).expect("k in 1..=6");
        println!("{:<8} {}", r.status, r.name);
    }
}
