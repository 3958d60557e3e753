use plonka::algebra::find_irregularity_witness;
use plonka::fixtures::{b2, b4, join_semilattice_2};

fn main() {
    let cases = [
        ("B2", b2(), 2),
        ("B4", b4(), 2),
        ("join-semilattice", join_semilattice_2(), 3),
    ];
    for (name, a, depth) in cases {
        match find_irregularity_witness(&a, depth) {
            Some(t) => println!("{name}: {t} = x holds identically"),
            None => println!("{name}: no term t(x, y) = x up to depth {depth}"),
        }
    }
}
