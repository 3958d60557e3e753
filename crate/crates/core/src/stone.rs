//! Finite Stone duality: finite Boolean algebras against finite sets (atoms
//! one way, powersets the other), lifted to direct systems of Boolean
//! algebras and inverse systems of finite sets over the same index.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{
    check_homomorphism, satisfies, AlgebraError, Counterexample, ElementMap, FiniteAlgebra, HomError,
};
use crate::fixtures::bitmask_boolean_algebra;
use crate::plonka::{DirectSystem, SystemError};
use crate::systems::{
    find_direct_system_isomorphism, find_inverse_system_isomorphism, validate_inverse_morphism,
    DirectSystemMorphism, InverseSystem, InverseSystemError, InverseSystemMorphism, MorphismError, SystemIso,
};
use crate::terms::{parse_identity, Identity, Signature};

/// Boolean-algebra axioms checked by [`validate_boolean_algebra`].
pub const BOOLEAN_AXIOMS: [&str; 10] = [
    "and(x, y) = and(y, x)",
    "or(x, y) = or(y, x)",
    "and(x, and(y, z)) = and(and(x, y), z)",
    "or(x, or(y, z)) = or(or(x, y), z)",
    "and(x, or(x, y)) = x",
    "or(x, and(x, y)) = x",
    "and(x, or(y, z)) = or(and(x, y), and(x, z))",
    "or(x, and(y, z)) = and(or(x, y), or(x, z))",
    "and(x, not(x)) = zero",
    "or(x, not(x)) = one",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanAlgebraCheck {
    pub verdict: bool,
    /// the first failing axiom and its counterexample
    pub failure: Option<(Identity, Counterexample)>,
}

pub fn validate_boolean_algebra(a: &FiniteAlgebra) -> Result<BooleanAlgebraCheck, AlgebraError> {
    if a.signature() != &Signature::boolean() {
        return Err(AlgebraError::SignatureMismatch);
    }
    for axiom in BOOLEAN_AXIOMS {
        let id = parse_identity(axiom, a.signature()).expect("static axiom");
        if let Some(cex) = satisfies(a, &id)? {
            return Ok(BooleanAlgebraCheck {
                verdict: false,
                failure: Some((id, cex)),
            });
        }
    }
    Ok(BooleanAlgebraCheck {
        verdict: true,
        failure: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("not a Boolean algebra")]
    NotBoolean,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{found} atoms in an algebra of size {size}")]
    AtomCount { size: usize, found: usize },
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(HomError),
    #[error("atom {atom} of the target lies below {found} source atom images")]
    AtomImage { atom: usize, found: usize },
    #[error("fiber {0} is not a Boolean algebra")]
    FiberNotBoolean(usize),
    #[error(transparent)]
    Inverse(#[from] InverseSystemError),
    #[error(transparent)]
    System(#[from] SystemError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("the primal of the dual is not isomorphic to the system")]
    PrimalRoundTrip,
    #[error("the dual of the primal is not isomorphic to the inverse system")]
    DualRoundTrip,
    #[error("duals of a composite and of its factors disagree at pair {0}")]
    Contravariance(usize),
}

fn meet_leq(a: &FiniteAlgebra, x: usize, y: usize) -> bool {
    a.op("and", &[x, y]) == x
}

/// Atoms (minimal non-zero elements) in element order; their number is
/// checked against `log2 |A|`.
pub fn atoms(a: &FiniteAlgebra) -> Result<Vec<usize>, DualityError> {
    let zero = a.constant("zero").ok_or(DualityError::NotBoolean)?;
    let n = a.size();
    let atoms: Vec<usize> = (0..n)
        .filter(|&u| u != zero)
        .filter(|&u| !(0..n).any(|v| v != zero && v != u && meet_leq(a, v, u)))
        .collect();
    if !n.is_power_of_two() || 1usize << atoms.len() != n {
        return Err(DualityError::AtomCount {
            size: n,
            found: atoms.len(),
        });
    }
    Ok(atoms)
}

/// The dual of `h: A → B`: each atom `beta` of `B` goes to the unique atom
/// `alpha` of `A` with `beta <= h(alpha)`. Atoms are numbered by their
/// position in [`atoms`].
pub fn dualize_boolean_hom(
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
    h: &ElementMap,
) -> Result<ElementMap, DualityError> {
    check_homomorphism(src, dst, h).map_err(DualityError::NotHomomorphism)?;
    let (sa, da) = (atoms(src)?, atoms(dst)?);
    let map = da
        .iter()
        .enumerate()
        .map(|(k, &beta)| {
            let hits: Vec<usize> = (0..sa.len())
                .filter(|&p| meet_leq(dst, beta, h.apply(sa[p])))
                .collect();
            match hits[..] {
                [p] => Ok(p),
                _ => Err(DualityError::AtomImage {
                    atom: k,
                    found: hits.len(),
                }),
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(ElementMap::new(map))
}

/// The Boolean algebra of all subsets of an `n`-point set; subset `S` is the
/// element whose bitmask is `S`.
pub fn primal_powerset_algebra(n: usize) -> FiniteAlgebra {
    let names = (0..1usize << n)
        .map(|mask| {
            let pts: Vec<String> = (0..n)
                .filter(|p| mask >> p & 1 == 1)
                .map(|p| p.to_string())
                .collect();
            format!("{{{}}}", pts.join(","))
        })
        .collect();
    bitmask_boolean_algebra(n, names)
}

/// Preimage map `P(Y) → P(X)`, `S ↦ g⁻¹(S)`, of `g: X → Y` where `X` has
/// `g.len()` points and `Y` has `target` points.
pub fn primal_of_function(g: &ElementMap, target: usize) -> ElementMap {
    let map = (0..1usize << target)
        .map(|s| {
            (0..g.len())
                .filter(|&x| s >> g.apply(x) & 1 == 1)
                .fold(0, |acc, x| acc | 1 << x)
        })
        .collect();
    ElementMap::new(map)
}

fn boolean_fibers(sys: &DirectSystem) -> Result<Vec<Vec<usize>>, DualityError> {
    sys.fibers()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let check = validate_boolean_algebra(f).map_err(|_| DualityError::FiberNotBoolean(i))?;
            if !check.verdict {
                return Err(DualityError::FiberNotBoolean(i));
            }
            atoms(f)
        })
        .collect()
}

/// Same index; atoms of each fiber; transitions dualized and reversed.
pub fn dualize_direct_system(sys: &DirectSystem) -> Result<InverseSystem, DualityError> {
    let atom_sets = boolean_fibers(sys)?;
    let mut transitions = BTreeMap::new();
    for (&(i, j), f) in sys.transitions() {
        let dual = dualize_boolean_hom(sys.fiber(i), sys.fiber(j), f)?;
        transitions.insert((j, i), dual);
    }
    let objects = atom_sets.iter().map(Vec::len).collect();
    Ok(InverseSystem::new(sys.index().clone(), objects, transitions)?)
}

/// Dual of a direct morphism `(phi, f_i): A → B`, an inverse morphism
/// `dual(B) → dual(A)` with the same `phi` and components `dual(f_i)`.
pub fn dualize_direct_morphism(
    src: &DirectSystem,
    dst: &DirectSystem,
    m: &DirectSystemMorphism,
) -> Result<InverseSystemMorphism, DualityError> {
    crate::systems::validate_direct_morphism(src, dst, m)?;
    let components = m
        .components
        .iter()
        .enumerate()
        .map(|(i, f)| dualize_boolean_hom(src.fiber(i), dst.fiber(m.phi[i]), f))
        .collect::<Result<_, _>>()?;
    let dual = InverseSystemMorphism {
        phi: m.phi.clone(),
        components,
    };
    let (dual_src, dual_dst) = (dualize_direct_system(dst)?, dualize_direct_system(src)?);
    validate_inverse_morphism(&dual_src, &dual_dst, &dual)?;
    Ok(dual)
}

/// Same index; powerset algebras; transitions are preimage maps.
pub fn primalize_inverse_system(inv: &InverseSystem) -> Result<DirectSystem, DualityError> {
    let fibers = inv
        .objects()
        .iter()
        .map(|&n| primal_powerset_algebra(n))
        .collect();
    let mut transitions = BTreeMap::new();
    for (&(upper, lower), p) in inv.transitions() {
        transitions.insert((lower, upper), primal_of_function(p, inv.object(lower)));
    }
    Ok(DirectSystem::new(inv.index().clone(), fibers, transitions)?)
}

/// Primal of an inverse morphism `(phi, f_j): X → Y`, a direct morphism
/// `primal(Y) → primal(X)`.
pub fn primalize_inverse_morphism(
    src: &InverseSystem,
    dst: &InverseSystem,
    m: &InverseSystemMorphism,
) -> Result<DirectSystemMorphism, DualityError> {
    validate_inverse_morphism(src, dst, m)?;
    let components = m
        .components
        .iter()
        .enumerate()
        .map(|(j, f)| primal_of_function(f, dst.object(j)))
        .collect();
    let primal = DirectSystemMorphism {
        phi: m.phi.clone(),
        components,
    };
    crate::systems::validate_direct_morphism(
        &primalize_inverse_system(dst)?,
        &primalize_inverse_system(src)?,
        &primal,
    )?;
    Ok(primal)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    /// from `primal(dual(sys))` to `sys`
    pub primal_iso: SystemIso,
    /// from `dual(primal(dual(sys)))` to `dual(sys)`
    pub dual_iso: SystemIso,
    /// composable pairs checked for `dual(m2 ∘ m1) = dual(m1) ∘ dual(m2)`
    pub pairs_checked: usize,
}

/// A composable pair `a --first--> b --second--> c` of direct morphisms.
pub struct ComposablePair<'a> {
    pub a: &'a DirectSystem,
    pub b: &'a DirectSystem,
    pub c: &'a DirectSystem,
    pub first: &'a DirectSystemMorphism,
    pub second: &'a DirectSystemMorphism,
}

/// Checks both object round trips for `sys` and contravariance of the dual
/// on the given morphism pairs.
pub fn duality_roundtrip_check(
    sys: &DirectSystem,
    pairs: &[ComposablePair<'_>],
) -> Result<DualityReport, DualityError> {
    let inv = dualize_direct_system(sys)?;
    let primal = primalize_inverse_system(&inv)?;
    let primal_iso = find_direct_system_isomorphism(&primal, sys).ok_or(DualityError::PrimalRoundTrip)?;
    let dual_again = dualize_direct_system(&primal)?;
    let dual_iso = find_inverse_system_isomorphism(&dual_again, &inv).ok_or(DualityError::DualRoundTrip)?;
    for (k, pair) in pairs.iter().enumerate() {
        let composite = pair.first.then(pair.second);
        let whole = dualize_direct_morphism(pair.a, pair.c, &composite)?;
        let d1 = dualize_direct_morphism(pair.a, pair.b, pair.first)?;
        let d2 = dualize_direct_morphism(pair.b, pair.c, pair.second)?;
        if whole != d2.then(&d1) {
            return Err(DualityError::Contravariance(k));
        }
    }
    Ok(DualityReport {
        primal_iso,
        dual_iso,
        pairs_checked: pairs.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_homomorphisms, find_isomorphism};
    use crate::fixtures::{b2, b4, ex22, p22, padded_join_chain, single_fiber};
    use crate::semilattice::Semilattice;

    #[test]
    fn boolean_validation() {
        assert!(validate_boolean_algebra(&b4()).unwrap().verdict);
        assert!(!validate_boolean_algebra(&padded_join_chain()).unwrap().verdict);
        let p = p22();
        let check = validate_boolean_algebra(&p).unwrap();
        let (id, cex) = check.failure.unwrap();
        assert_eq!(id.to_string(), "and(x, or(x, y)) = x");
        let named: Vec<&str> = cex.assignment.iter().map(|(_, e)| p.name(*e)).collect();
        assert_eq!(named, ["0_i", "0_j"]);
    }

    #[test]
    fn atoms_of_small_algebras() {
        let a = b4();
        assert_eq!(
            atoms(&a).unwrap(),
            vec![a.element("a").unwrap(), a.element("a'").unwrap()]
        );
        assert_eq!(atoms(&b2()).unwrap(), vec![1]);
        let p8 = primal_powerset_algebra(3);
        assert_eq!(atoms(&p8).unwrap(), vec![1, 2, 4]);
        assert!(matches!(atoms(&p22()), Err(DualityError::AtomCount { .. })));
    }

    #[test]
    fn duals_of_homomorphisms() {
        let a = b4();
        assert_eq!(
            dualize_boolean_hom(&a, &a, &ElementMap::identity(4)).unwrap(),
            ElementMap::identity(2)
        );
        // p: a ↦ 1, a' ↦ 0 sends both atoms of the target to a
        let p = ElementMap::new(vec![0, 3, 0, 3]);
        assert_eq!(
            dualize_boolean_hom(&a, &a, &p).unwrap(),
            ElementMap::new(vec![0, 0])
        );
        let unique = enumerate_homomorphisms(&b2(), &a).unwrap();
        assert_eq!(
            dualize_boolean_hom(&b2(), &a, &unique[0]).unwrap(),
            ElementMap::new(vec![0, 0])
        );
    }

    #[test]
    fn powersets_and_preimages() {
        assert!(find_isomorphism(&primal_powerset_algebra(1), &b2()).is_some());
        assert!(find_isomorphism(&primal_powerset_algebra(2), &b4()).is_some());
        // constant g: {β, β'} → {α, α'} at α; under atoms α = {0} = a and
        // α' = {1} = a', the preimage map is the ex22 transition
        let g = ElementMap::new(vec![0, 0]);
        assert_eq!(primal_of_function(&g, 2), ElementMap::new(vec![0, 3, 0, 3]));
        let pa = primal_powerset_algebra(2);
        assert!(crate::algebra::is_homomorphism(
            &pa,
            &pa,
            &primal_of_function(&g, 2)
        ));
    }

    #[test]
    fn dual_of_ex22() {
        let inv = dualize_direct_system(&ex22()).unwrap();
        assert_eq!(inv.objects(), &[2, 2]);
        assert_eq!(inv.transition(0, 1), ElementMap::new(vec![0, 0]));
        let single = dualize_direct_system(&single_fiber(b2())).unwrap();
        assert_eq!(single.objects(), &[1]);
        assert!(single.transitions().is_empty());
    }

    #[test]
    fn dual_of_the_collapsing_morphism() {
        let sys = ex22();
        let m = DirectSystemMorphism {
            phi: vec![1, 1],
            components: vec![ElementMap::new(vec![0, 3, 0, 3]), ElementMap::identity(4)],
        };
        let dual = dualize_direct_morphism(&sys, &sys, &m).unwrap();
        assert_eq!(dual.phi, vec![1, 1]);
        assert_eq!(
            dual.components,
            vec![ElementMap::new(vec![0, 0]), ElementMap::identity(2)]
        );
    }

    #[test]
    fn primal_of_inverse_systems() {
        let inv = dualize_direct_system(&ex22()).unwrap();
        let back = primalize_inverse_system(&inv).unwrap();
        assert!(find_direct_system_isomorphism(&back, &ex22()).is_some());

        let one = InverseSystem::new(Semilattice::chain(1), vec![1], BTreeMap::new()).unwrap();
        let sys = primalize_inverse_system(&one).unwrap();
        assert!(find_isomorphism(sys.fiber(0), &b2()).is_some());

        let mut tr = BTreeMap::new();
        tr.insert((1, 0), ElementMap::identity(2));
        let chain = InverseSystem::new(Semilattice::chain(2), vec![2, 2], tr).unwrap();
        let sys = primalize_inverse_system(&chain).unwrap();
        assert_eq!(sys.transition(0, 1), ElementMap::identity(4));
    }

    #[test]
    fn round_trip_on_fixtures() {
        assert!(duality_roundtrip_check(&ex22(), &[]).is_ok());
        assert!(duality_roundtrip_check(&single_fiber(b2()), &[]).is_ok());
        let sys = ex22();
        let m = DirectSystemMorphism {
            phi: vec![1, 1],
            components: vec![ElementMap::new(vec![0, 3, 0, 3]), ElementMap::identity(4)],
        };
        let pair = ComposablePair {
            a: &sys,
            b: &sys,
            c: &sys,
            first: &m,
            second: &m,
        };
        assert_eq!(duality_roundtrip_check(&sys, &[pair]).unwrap().pairs_checked, 1);
    }

    #[test]
    fn non_boolean_fibers_are_rejected() {
        let sys = single_fiber(padded_join_chain());
        assert_eq!(dualize_direct_system(&sys), Err(DualityError::FiberNotBoolean(0)));
    }
}
