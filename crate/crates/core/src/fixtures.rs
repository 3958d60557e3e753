//! Small named algebras and systems used across tests, examples and the
//! bundled fixture files.

use std::collections::BTreeMap;

use crate::algebra::{ElementMap, FiniteAlgebra};
use crate::plonka::{plonka_sum, DirectSystem};
use crate::semilattice::Semilattice;
use crate::terms::{parse_identity, parse_term, Identity, Signature, Term};

fn names(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// The Boolean algebra of subsets of a `bits`-element set, elements encoded
/// as bitmasks, with the given names.
pub fn bitmask_boolean_algebra(bits: usize, names: Vec<String>) -> FiniteAlgebra {
    let full = (1usize << bits) - 1;
    FiniteAlgebra::from_fn(Signature::boolean(), names, |op, args| match op {
        "and" => args[0] & args[1],
        "or" => args[0] | args[1],
        "not" => full & !args[0],
        "zero" => 0,
        "one" => full,
        _ => unreachable!(),
    })
    .expect("bitmask tables are well-formed")
}

/// The two-element Boolean algebra `{0, 1}`.
pub fn b2() -> FiniteAlgebra {
    bitmask_boolean_algebra(1, names(&["0", "1"]))
}

/// The four-element Boolean algebra `{0, a, a', 1}`.
pub fn b4() -> FiniteAlgebra {
    b4_named(["0", "a", "a'", "1"])
}

pub fn b4_named(labels: [&str; 4]) -> FiniteAlgebra {
    bitmask_boolean_algebra(2, names(&labels))
}

/// The two-element join-semilattice `{0, 1}` over the signature `{or:2}`.
pub fn join_semilattice_2() -> FiniteAlgebra {
    let sig = Signature::new([("or", 2)]).expect("static signature");
    FiniteAlgebra::from_fn(sig, names(&["0", "1"]), |_, args| args[0].max(args[1])).expect("static table")
}

/// The two-element chain read as a Boolean-signature algebra with
/// `and = or = max`, `not = id`, `zero = 0`, `one = 1`.
pub fn padded_join_chain() -> FiniteAlgebra {
    FiniteAlgebra::from_fn(Signature::boolean(), names(&["0", "1"]), |op, args| match op {
        "and" | "or" => args[0].max(args[1]),
        "not" => args[0],
        "zero" => 0,
        "one" => 1,
        _ => unreachable!(),
    })
    .expect("static table")
}

/// The two four-element Boolean algebras over the chain `i < j`, with
/// transition `0_i ↦ 0_j, a ↦ 1_j, a' ↦ 0_j, 1_i ↦ 1_j`.
pub fn ex22() -> DirectSystem {
    let index = Semilattice::chain(2).with_names(names(&["i", "j"]));
    let fibers = vec![
        b4_named(["0_i", "a", "a'", "1_i"]),
        b4_named(["0_j", "b", "b'", "1_j"]),
    ];
    let mut transitions = BTreeMap::new();
    transitions.insert((0, 1), ElementMap::new(vec![0, 3, 0, 3]));
    DirectSystem::new(index, fibers, transitions).expect("fixture system is valid")
}

/// The eight-element sum of [`ex22`].
pub fn p22() -> FiniteAlgebra {
    plonka_sum(&ex22()).carrier().clone()
}

/// A direct system with a single fiber over the one-point semilattice.
pub fn single_fiber(fiber: FiniteAlgebra) -> DirectSystem {
    DirectSystem::new(
        Semilattice::chain(1).with_names(names(&["i"])),
        vec![fiber],
        BTreeMap::new(),
    )
    .expect("single-fiber systems are valid")
}

/// The absorption term `and(x, or(x, y))`.
pub fn absorption_term() -> Term {
    parse_term("and(x, or(x, y))", &Signature::boolean()).expect("static term")
}

/// Twelve Boolean-algebra laws: commutativity, associativity, idempotence and
/// De Morgan (each for both operations), double negation, distributivity,
/// absorption and excluded middle.
pub const TWELVE_LAWS: [&str; 12] = [
    "and(x, y) = and(y, x)",
    "or(x, y) = or(y, x)",
    "and(x, and(y, z)) = and(and(x, y), z)",
    "or(x, or(y, z)) = or(or(x, y), z)",
    "and(x, x) = x",
    "or(x, x) = x",
    "not(and(x, y)) = or(not(x), not(y))",
    "not(or(x, y)) = and(not(x), not(y))",
    "not(not(x)) = x",
    "and(x, or(y, z)) = or(and(x, y), and(x, z))",
    "and(x, or(x, y)) = x",
    "or(x, not(x)) = one",
];

/// The irregular Boolean laws: both absorption forms and both
/// complementation laws.
pub const IRREGULAR_LAWS: [&str; 4] = [
    "and(x, or(x, y)) = x",
    "or(x, and(x, y)) = x",
    "and(x, not(x)) = zero",
    "or(x, not(x)) = one",
];

pub fn twelve_laws() -> Vec<Identity> {
    TWELVE_LAWS
        .iter()
        .map(|s| parse_identity(s, &Signature::boolean()).expect("static identity"))
        .collect()
}
