//! Builds the sum of two four-element Boolean algebras over the chain
//! `i < j` and prints a few products across fibers.

use plonka::fixtures::ex22;
use plonka::plonka::plonka_sum;

fn main() {
    let sys = ex22();
    println!("{}", sys.index());
    let sum = plonka_sum(&sys);
    let a = sum.carrier();
    println!("{} elements: {}", a.size(), a.names().join(" "));

    for (x, y) in [("a", "a'"), ("a'", "b"), ("a", "b'"), ("1_i", "0_j")] {
        let (ex, ey) = (a.element(x).unwrap(), a.element(y).unwrap());
        let meet = a.op("and", &[ex, ey]);
        let join = a.op("or", &[ex, ey]);
        println!("{x} ∧ {y} = {:4}  {x} ∨ {y} = {}", a.name(meet), a.name(join));
    }
    // constants come from the bottom fiber
    println!(
        "zero = {}, one = {}",
        a.name(a.constant("zero").unwrap()),
        a.name(a.constant("one").unwrap())
    );
}
