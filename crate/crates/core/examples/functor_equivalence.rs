//! Systems to sums and back. `F` decomposes an algebra along a partition
//! term, `G` takes sums; both composites are isomorphic to the identity.

use plonka::algebra::ElementMap;
use plonka::fixtures::{absorption_term, ex22};
use plonka::random::corpus_system;
use plonka::systems::{
    functor_f, functor_f_morphism, functor_g, roundtrip_equivalence_check, sum_of_morphism,
    DirectSystemMorphism,
};

fn main() {
    let t = absorption_term();
    let sys = ex22();
    let report = roundtrip_equivalence_check(&sys, &t).unwrap();
    println!("F(G(S)) ≅ S via {}", report.system_iso);
    println!("G(F(A)) ≅ A via {}", report.algebra_iso);

    // on morphisms: fold the j-fiber down onto i through the transition
    let folding = DirectSystemMorphism {
        phi: vec![0, 0],
        components: vec![ElementMap::new(vec![0, 3, 0, 3]), ElementMap::identity(4)],
    };
    let h = sum_of_morphism(&sys, &sys, &folding).unwrap();
    println!("G(folding) = {h}");
    let a = functor_g(&sys).into_carrier();
    let d = functor_f(&a, &t).unwrap();
    let back = functor_f_morphism(&a, &d, &a, &d, &h).unwrap();
    println!("F(G(folding)) = {back:?}");

    let ok = (0..20)
        .filter(|&s| roundtrip_equivalence_check(&corpus_system(s), &t).is_ok())
        .count();
    println!("{ok}/20 random systems round-trip");
}
