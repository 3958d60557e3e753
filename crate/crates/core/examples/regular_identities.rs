//! Regular identities survive the passage to a sum; irregular ones break.

use plonka::fixtures::{ex22, twelve_laws};
use plonka::plonka::{identity_transfer_report, plonka_sum};

fn main() {
    let sys = ex22();
    let sum = plonka_sum(&sys);
    let rows = identity_transfer_report(&sys, &twelve_laws()).unwrap();
    for r in rows {
        let verdict = if r.sum_satisfies { "holds" } else { "fails" };
        let kind = if r.regular { "regular" } else { "irregular" };
        print!("{:<45} {kind:<9} {verdict}", r.identity.to_string());
        if let Some(c) = r.sum_counterexample {
            print!("  ({})", c.describe(sum.carrier()));
        }
        println!();
    }
}
