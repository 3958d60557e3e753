//! Every homomorphism between sums of Boolean algebras maps fibers into
//! fibers, and the induced index map is a semilattice homomorphism.

use plonka::algebra::enumerate_homomorphisms;
use plonka::fixtures::ex22;
use plonka::plonka::plonka_sum;
use plonka::random::gen_random_system;
use plonka::systems::{check_fibre_preservation, fibre_map_of_hom};

fn main() {
    let p = plonka_sum(&ex22());
    for h in enumerate_homomorphisms(p.carrier(), p.carrier()).unwrap() {
        let phi = fibre_map_of_hom(&h, &p, &p).unwrap();
        println!(
            "{h}  preserves fibres: {}  index map: {phi:?}",
            check_fibre_preservation(&h, &p, &p)
        );
    }

    let (s, t) = (
        gen_random_system(11, 2, 2).unwrap(),
        gen_random_system(12, 3, 2).unwrap(),
    );
    let (ps, pt) = (plonka_sum(&s), plonka_sum(&t));
    let homs = enumerate_homomorphisms(ps.carrier(), pt.carrier()).unwrap();
    let preserved = homs
        .iter()
        .filter(|h| check_fibre_preservation(h, &ps, &pt))
        .count();
    println!(
        "random pair: {preserved}/{} homomorphisms preserve fibres",
        homs.len()
    );
}
