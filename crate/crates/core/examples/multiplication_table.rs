//! Prints the octonion basis multiplication table and a non-associativity witness.

use octoverify::octonion::{associator, mult_table, Octonion};

fn main() {
    let table = mult_table();
    println!("row k, column l holds i_k i_l\n");
    print!("      ");
    for l in 0..8 {
        print!("{:>5}", format!("i{l}"));
    }
    println!();
    for k in 0..8 {
        print!("{:>5} ", format!("i{k}"));
        for l in 0..8 {
            let e = table.entry(k, l);
            let sign = if e.sign < 0 { "-" } else { " " };
            print!("{:>5}", format!("{sign}i{}", e.target));
        }
        println!();
    }

    let (x, y, z) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(4));
    println!("\n[i1, i2, i4] = {:?}", associator(&x, &y, &z));
}
