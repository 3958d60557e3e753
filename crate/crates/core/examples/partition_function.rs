//! Checks the partition-function axioms for `x ∧ (x ∨ y)` on the sum, then
//! recovers the system from the sum alone.

use plonka::fixtures::{absorption_term, b4, p22};
use plonka::plonka::{decompose, verify_partition_function};
use plonka::terms::parse_term;

fn main() {
    let sum = p22();
    let t = absorption_term();
    match verify_partition_function(&sum, &t) {
        Ok(()) => println!("{t} is a partition function on the sum"),
        Err(v) => println!("{t} fails: {v}"),
    }

    let d = decompose(&sum, &t).expect("decomposes");
    println!("recovered {}", d.system.index());
    for (i, fiber) in d.system.fibers().iter().enumerate() {
        println!("  fiber {i}: {}", fiber.names().join(" "));
    }
    for (&(i, j), f) in d.system.transitions() {
        println!("  transition {i} -> {j}: {f}");
    }

    // plain meet on a Boolean algebra is not a partition function
    let b = b4();
    let meet = parse_term("and(x, y)", b.signature()).unwrap();
    println!(
        "and(x, y) on B4: {}",
        verify_partition_function(&b, &meet).unwrap_err()
    );
}
