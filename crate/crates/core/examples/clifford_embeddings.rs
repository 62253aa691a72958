//! Maps generators of Cl(0,7) into the even subalgebra of Cl(0,8) and
//! Cl(8,0), and checks the defining relations on the images.

use octoverify::clifford::{check_embedding_hom, embed_even, EmbedVariant, Multivector, Signature};

fn main() {
    let sig = Signature::new(0, 7).expect("small signature");
    for variant in [EmbedVariant::RaiseQ, EmbedVariant::RaiseP] {
        let target = variant.target(sig).expect("fits");
        println!(
            "{}: Cl(0,7) -> Cl^0({},{})",
            variant.name(),
            target.p(),
            target.q()
        );
        for k in [1, 2, 7] {
            let e = Multivector::generator(sig, k).expect("in range");
            let img = embed_even(&e, variant).expect("embeds");
            let sq = img.geo_mul(&img).expect("same signature");
            println!("  e{k} -> {img}   (square {sq})");
        }
        let r = check_embedding_hom(0, 7, variant).expect("fits");
        println!("  {}: {}\n", r.name, r.status);
    }

    // A mixed signature: positive and negative generators trade places.
    let mixed = Signature::new(2, 1).expect("small signature");
    let target = EmbedVariant::RaiseP.target(mixed).expect("fits");
    println!("raise_p on Cl(2,1) -> Cl^0({},{})", target.p(), target.q());
    for k in 1..=3 {
        let (a, b) = EmbedVariant::RaiseP.generator_image(mixed, k);
        println!("  e{k} -> e{a}e{b}");
    }
}
