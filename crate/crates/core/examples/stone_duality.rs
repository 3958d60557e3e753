//! Finite Stone duality on systems: Boolean algebras become their atom
//! sets, homomorphisms become maps of atoms running the other way.

use plonka::fixtures::ex22;
use plonka::io::Document;
use plonka::stone::{atoms, duality_roundtrip_check, dualize_direct_system, primalize_inverse_system};

fn main() {
    let sys = ex22();
    for (i, f) in sys.fibers().iter().enumerate() {
        let names: Vec<&str> = atoms(f).unwrap().into_iter().map(|e| f.name(e)).collect();
        println!("atoms of fiber {i}: {}", names.join(", "));
    }
    let inv = dualize_direct_system(&sys).unwrap();
    print!("dual:\n{}", Document::InverseSystem(inv.clone()).to_json());

    let primal = primalize_inverse_system(&inv).unwrap();
    println!("primal fibers: {}", primal.fiber(0).names().join(" "));
    let report = duality_roundtrip_check(&sys, &[]).unwrap();
    println!("primal(dual(S)) ≅ S via {}", report.primal_iso);
    println!("dual(primal(X)) ≅ X via {}", report.dual_iso);
}
