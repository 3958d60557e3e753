//! Terms and identities in the text grammar: symbols of the signature are
//! operations, nullary ones written bare, anything else is a variable.

use plonka::algebra::{assignment, evaluate};
use plonka::fixtures::b4;
use plonka::terms::{enumerate_terms, parse_identity, parse_term, Signature};

fn main() {
    let sig = Signature::boolean();
    let t = parse_term("or(and(x, not(y)), zero)", &sig).unwrap();
    println!("{t}: depth {}, variables {:?}", t.depth(), t.variables());

    let a = b4();
    let asg = assignment(&[("x", a.element("a").unwrap()), ("y", a.element("a'").unwrap())]);
    println!("value at x=a, y=a': {}", a.name(evaluate(&a, &t, &asg).unwrap()));

    for s in ["and(x, or(x, y)) = x", "not(not(x)) = x"] {
        let id = parse_identity(s, &sig).unwrap();
        println!("{id}: regular {}", id.is_regular());
    }
    for bad in ["and(x)", "one()", "f(x", ""] {
        println!("{bad:?}: {}", parse_term(bad, &sig).unwrap_err());
    }
    for d in 0..=2 {
        println!(
            "terms in x, y up to depth {d}: {}",
            enumerate_terms(&sig, &["x", "y"], d).len()
        );
    }
}
