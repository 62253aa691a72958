//! The frame p -> (p i_1, ..., p i_7) is orthogonal and tangent at every p.

use octoverify::actions::check_parallelizability;
use octoverify::exact::{gram, Rational};
use octoverify::octonion::Octonion;

fn main() {
    let p = &Octonion::basis(0).scale(&Rational::new(3, 5))
        + &Octonion::basis(2).scale(&Rational::new(4, 5));
    let frame: Vec<_> = (0..8)
        .map(|k| (&p * &Octonion::basis(k)).to_vector())
        .collect();
    let g = gram(&frame).expect("eight 8-vectors");
    println!("p = {p:?}, |p|^2 = {}", p.norm_sq());
    println!(
        "Gram matrix of p i_0, ..., p i_7 is identity: {}",
        g.is_identity()
    );

    let q = Octonion::from_integers([1, -2, 0, 3, 0, 0, 5, 1]);
    let r = check_parallelizability(&q).expect("nonzero");
    println!("q = {q:?}: {}", r.status);
}
