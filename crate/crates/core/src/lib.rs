//! Finite Płonka sums, partition functions, semilattice systems of algebras
//! and finite Stone duality.

pub mod algebra;
pub mod fixtures;
pub mod io;
pub mod plonka;
pub mod random;
pub mod semilattice;
pub mod stone;
pub mod systems;
pub mod terms;
