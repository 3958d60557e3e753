//! Seed-driven property tests over generated systems.

mod oracle;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use plonka::fixtures::absorption_term;
use plonka::io::{parse_document, Document};
use plonka::plonka::{decompose, plonka_sum, validate_direct_system};
use plonka::random::{gen_random_system, random_direct_morphism, FIBER_SIZES};
use plonka::stone::{dualize_direct_system, primalize_inverse_system};
use plonka::systems::{
    find_direct_system_isomorphism, find_inverse_system_isomorphism, sum_of_morphism, DirectSystemMorphism,
};
use plonka::terms::{enumerate_terms, parse_term, Signature};

fn shape() -> impl Strategy<Value = (u64, usize, usize)> {
    (
        any::<u64>(),
        1usize..=3,
        prop::sample::select(FIBER_SIZES.to_vec()),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_systems_validate((seed, count, size) in shape()) {
        let sys = gen_random_system(seed, count, size).unwrap();
        prop_assert!(validate_direct_system(sys.index().clone(), sys.fibers().to_vec(), sys.transitions().clone()).is_ok());
        prop_assert_eq!(sys.total_size(), count * size);
        prop_assert_eq!(&sys, &gen_random_system(seed, count, size).unwrap());
    }

    #[test]
    fn sums_decompose_back((seed, count, size) in shape()) {
        let sys = gen_random_system(seed, count, size).unwrap();
        let sum = plonka_sum(&sys);
        let d = decompose(sum.carrier(), &absorption_term()).unwrap();
        prop_assert!(find_direct_system_isomorphism(&d.system, &sys).is_some());
        // the recovered fibers are the source fibers, element for element
        for e in 0..sum.size() {
            prop_assert_eq!(d.tags[e].element, sum.tag(e).element);
        }
    }

    #[test]
    fn dual_and_primal_invert((seed, count, size) in shape()) {
        let sys = gen_random_system(seed, count, size).unwrap();
        let inv = dualize_direct_system(&sys).unwrap();
        prop_assert!(inv.objects().iter().all(|&n| 1usize << n == size));
        let back = primalize_inverse_system(&inv).unwrap();
        prop_assert!(find_direct_system_isomorphism(&back, &sys).is_some());
        let again = dualize_direct_system(&back).unwrap();
        prop_assert!(find_inverse_system_isomorphism(&again, &inv).is_some());
    }

    #[test]
    fn documents_are_byte_stable((seed, count, size) in shape()) {
        let sys = gen_random_system(seed, count, size).unwrap();
        for doc in [Document::System(sys.clone()), Document::InverseSystem(dualize_direct_system(&sys).unwrap())] {
            let text = doc.to_json();
            let back = parse_document(&text).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn sum_maps_compose(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = gen_random_system(seed, 2, 2).unwrap();
        let b = gen_random_system(seed ^ 1, 2, 4).unwrap();
        let c = gen_random_system(seed ^ 2, 3, 2).unwrap();
        let m1 = random_direct_morphism(&mut rng, &a, &b, true).unwrap();
        let m2 = random_direct_morphism(&mut rng, &b, &c, true).unwrap();
        let h1 = sum_of_morphism(&a, &b, &m1).unwrap();
        let h2 = sum_of_morphism(&b, &c, &m2).unwrap();
        let h = sum_of_morphism(&a, &c, &m1.then(&m2)).unwrap();
        prop_assert_eq!(&h, &h1.then(&h2));
        prop_assert_eq!(sum_of_morphism(&a, &a, &DirectSystemMorphism::identity(&a)).unwrap().map, (0..a.total_size()).collect::<Vec<_>>());
        prop_assert!(oracle::is_hom(plonka_sum(&a).carrier(), plonka_sum(&c).carrier(), &oracle::map_of(&h)));
    }

    #[test]
    fn printed_terms_reparse(k in 0usize..410) {
        let sig = Signature::boolean();
        let terms = enumerate_terms(&sig, &["x", "y"], 2);
        let t = &terms[k];
        let spaced = t.to_string().replace(", ", " ,  ");
        prop_assert_eq!(&parse_term(&spaced, &sig).unwrap(), t);
    }
}
