//! Builds the octonionic matrix representations and checks their Clifford
//! relations, then looks at the even generators of the 16x16 one.

use octoverify::clifford::{build_rep, check_clifford_relations, RepName};
use octoverify::octonion::{left_mult_matrix, Octonion};

fn main() {
    for name in [RepName::Gamma6, RepName::Gamma7, RepName::Gamma8] {
        let rep = build_rep(name);
        let sig = rep.signature();
        let r = check_clifford_relations(&rep);
        println!(
            "{name}: {} generators, {}x{}, Cl({},{}) -> {}",
            rep.matrices().len(),
            rep.size(),
            rep.size(),
            sig.p(),
            sig.q(),
            r.status
        );
    }

    let g = build_rep(RepName::Gamma8);
    let m = &g.matrices();
    let g0g1 = m[0].mat_mul(&m[1]).expect("16x16");
    let l1 = left_mult_matrix(&Octonion::basis(1));
    let upper_is_minus_l1 = (0..8).all(|r| (0..8).all(|c| *g0g1.get(r, c) == -l1.get(r, c)));
    println!("\nΓ0 Γ1 upper-left block equals -L(i1): {upper_is_minus_l1}");
}
