//! Morphisms of direct and inverse semilattice systems, the passage between
//! systems and their sums in both directions, and isomorphism search for
//! systems.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{
    check_homomorphism, check_shape, enumerate_isomorphisms, find_isomorphism, ElementMap, FiniteAlgebra,
    HomError,
};
use crate::plonka::{decompose, plonka_sum, DecomposeError, Decomposition, DirectSystem, PlonkaAlgebra};
use crate::semilattice::{
    is_semilattice_homomorphism, join_violation, permutations, semilattice_isomorphisms, Semilattice,
};
use crate::terms::Term;

/// A morphism of direct systems: an index map `phi: I → J` and components
/// `f_i: A_i → B_phi(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSystemMorphism {
    pub phi: Vec<usize>,
    pub components: Vec<ElementMap>,
}

impl DirectSystemMorphism {
    pub fn identity(sys: &DirectSystem) -> Self {
        DirectSystemMorphism {
            phi: (0..sys.index().size()).collect(),
            components: sys
                .fibers()
                .iter()
                .map(|f| ElementMap::identity(f.size()))
                .collect(),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &DirectSystemMorphism) -> DirectSystemMorphism {
        DirectSystemMorphism {
            phi: self.phi.iter().map(|&j| next.phi[j]).collect(),
            components: self
                .components
                .iter()
                .zip(&self.phi)
                .map(|(f, &j)| f.then(&next.components[j]))
                .collect(),
        }
    }
}

/// One failed condition of a system morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismViolation {
    IndexMapShape,
    IndexMapNotJoinPreserving {
        a: usize,
        b: usize,
    },
    ComponentCount {
        expected: usize,
        found: usize,
    },
    Component {
        index: usize,
        error: HomError,
    },
    /// the square for `lower <= upper` fails at `element`
    Square {
        lower: usize,
        upper: usize,
        element: usize,
    },
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use MorphismViolation::*;
        match self {
            IndexMapShape => write!(f, "index map has the wrong domain or range"),
            IndexMapNotJoinPreserving { a, b } => {
                write!(f, "index map does not preserve the join of {a} and {b}")
            }
            ComponentCount { expected, found } => {
                write!(f, "{found} components, expected {expected}")
            }
            Component { index, error } => write!(f, "component {index}: {error}"),
            Square {
                lower,
                upper,
                element,
            } => {
                write!(
                    f,
                    "square {lower} <= {upper} does not commute at element {element}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid morphism: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct MorphismError(pub Vec<MorphismViolation>);

fn check_index_map(
    from: &Semilattice,
    to: &Semilattice,
    phi: &[usize],
    errs: &mut Vec<MorphismViolation>,
) -> bool {
    if phi.len() != from.size() || phi.iter().any(|&v| v >= to.size()) {
        errs.push(MorphismViolation::IndexMapShape);
        return false;
    }
    if let Some((a, b)) = join_violation(from, to, phi) {
        errs.push(MorphismViolation::IndexMapNotJoinPreserving { a, b });
    }
    true
}

/// Checks that `phi` preserves joins, each `f_i` is a homomorphism
/// `A_i → B_phi(i)`, and `f_i' ∘ p_ii' = q_phi(i)phi(i') ∘ f_i` for `i <= i'`.
pub fn validate_direct_morphism(
    src: &DirectSystem,
    dst: &DirectSystem,
    m: &DirectSystemMorphism,
) -> Result<(), MorphismError> {
    let mut errs = Vec::new();
    if !check_index_map(src.index(), dst.index(), &m.phi, &mut errs) {
        return Err(MorphismError(errs));
    }
    if m.components.len() != src.index().size() {
        errs.push(MorphismViolation::ComponentCount {
            expected: src.index().size(),
            found: m.components.len(),
        });
        return Err(MorphismError(errs));
    }
    let mut typed = true;
    for (i, f) in m.components.iter().enumerate() {
        if let Err(error) = check_homomorphism(src.fiber(i), dst.fiber(m.phi[i]), f) {
            typed &= !matches!(error, HomError::Domain { .. } | HomError::Range { .. });
            errs.push(MorphismViolation::Component { index: i, error });
        }
    }
    // squares only make sense once every component has the right type and
    // phi is monotone on the pair
    if typed {
        for (lower, upper) in src.index().strict_pairs() {
            let (pl, pu) = (m.phi[lower], m.phi[upper]);
            if !dst.index().leq(pl, pu) {
                continue;
            }
            let bad = (0..src.fiber(lower).size()).find(|&x| {
                m.components[upper].apply(src.push(lower, upper, x))
                    != dst.push(pl, pu, m.components[lower].apply(x))
            });
            if let Some(element) = bad {
                errs.push(MorphismViolation::Square {
                    lower,
                    upper,
                    element,
                });
            }
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(MorphismError(errs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseViolation {
    ObjectCount {
        expected: usize,
        found: usize,
    },
    /// a transition listed from a lower to a higher index
    WrongDirection {
        from: usize,
        to: usize,
    },
    NotStrictPair {
        from: usize,
        to: usize,
    },
    MissingTransition {
        from: usize,
        to: usize,
    },
    BadMap {
        from: usize,
        to: usize,
    },
    /// `p_ii' ∘ p_i'i'' != p_ii''` at a point of `X_i''`
    Composition {
        i: usize,
        j: usize,
        k: usize,
        point: usize,
    },
}

impl fmt::Display for InverseViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use InverseViolation::*;
        match self {
            ObjectCount { expected, found } => {
                write!(f, "{found} objects for an index of size {expected}")
            }
            WrongDirection { from, to } => write!(
                f,
                "transition {from} -> {to} points upwards; inverse transitions map X_i' to X_i for i < i'"
            ),
            NotStrictPair { from, to } => write!(f, "{to} < {from} does not hold"),
            MissingTransition { from, to } => write!(f, "no transition {from} -> {to}"),
            BadMap { from, to } => write!(
                f,
                "transition {from} -> {to} is not a function between the objects"
            ),
            Composition { i, j, k, point } => {
                write!(f, "p_{i}{j} . p_{j}{k} != p_{i}{k} at point {point}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid inverse system: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct InverseSystemError(pub Vec<InverseViolation>);

/// Finite sets `X_i = {0, ..., n_i - 1}` over a semilattice with maps
/// `p_ii': X_i' → X_i` for `i < i'`. Transitions are keyed `(from, to)` =
/// `(i', i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSystem {
    index: Semilattice,
    objects: Vec<usize>,
    transitions: BTreeMap<(usize, usize), ElementMap>,
}

impl InverseSystem {
    pub fn new(
        index: Semilattice,
        objects: Vec<usize>,
        transitions: BTreeMap<(usize, usize), ElementMap>,
    ) -> Result<Self, InverseSystemError> {
        let mut errs = Vec::new();
        let n = index.size();
        if objects.len() != n {
            errs.push(InverseViolation::ObjectCount {
                expected: n,
                found: objects.len(),
            });
            return Err(InverseSystemError(errs));
        }
        for (&(from, to), map) in &transitions {
            if from >= n || to >= n {
                errs.push(InverseViolation::NotStrictPair { from, to });
            } else if index.lt(from, to) {
                errs.push(InverseViolation::WrongDirection { from, to });
            } else if !index.lt(to, from) {
                errs.push(InverseViolation::NotStrictPair { from, to });
            } else if map.len() != objects[from] || !map.maps_into(objects[to]) {
                errs.push(InverseViolation::BadMap { from, to });
            }
        }
        for (lower, upper) in index.strict_pairs() {
            if !transitions.contains_key(&(upper, lower)) {
                errs.push(InverseViolation::MissingTransition {
                    from: upper,
                    to: lower,
                });
            }
        }
        if !errs.is_empty() {
            return Err(InverseSystemError(errs));
        }
        let sys = InverseSystem {
            index,
            objects,
            transitions,
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !(sys.index.lt(i, j) && sys.index.lt(j, k)) {
                        continue;
                    }
                    if let Some(point) =
                        (0..sys.objects[k]).find(|&x| sys.pull(i, j, sys.pull(j, k, x)) != sys.pull(i, k, x))
                    {
                        errs.push(InverseViolation::Composition { i, j, k, point });
                    }
                }
            }
        }
        if errs.is_empty() {
            Ok(sys)
        } else {
            Err(InverseSystemError(errs))
        }
    }

    pub fn index(&self) -> &Semilattice {
        &self.index
    }

    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn object(&self, i: usize) -> usize {
        self.objects[i]
    }

    /// Stored transitions keyed `(from, to)` with `to < from`.
    pub fn transitions(&self) -> &BTreeMap<(usize, usize), ElementMap> {
        &self.transitions
    }

    /// `p_{lower, upper}(x)` for `lower <= upper` and `x` in `X_upper`.
    #[inline]
    pub fn pull(&self, lower: usize, upper: usize, x: usize) -> usize {
        if lower == upper {
            x
        } else {
            self.transitions[&(upper, lower)].map[x]
        }
    }

    pub fn transition(&self, lower: usize, upper: usize) -> ElementMap {
        if lower == upper {
            ElementMap::identity(self.objects[lower])
        } else {
            self.transitions[&(upper, lower)].clone()
        }
    }
}

pub fn validate_inverse_system(
    index: Semilattice,
    objects: Vec<usize>,
    transitions: BTreeMap<(usize, usize), ElementMap>,
) -> Result<InverseSystem, InverseSystemError> {
    InverseSystem::new(index, objects, transitions)
}

/// A morphism of inverse systems `X → Y` over `I` and `J`: an index map
/// `phi: J → I` and components `f_j: X_phi(j) → Y_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSystemMorphism {
    pub phi: Vec<usize>,
    pub components: Vec<ElementMap>,
}

impl InverseSystemMorphism {
    pub fn identity(sys: &InverseSystem) -> Self {
        InverseSystemMorphism {
            phi: (0..sys.index().size()).collect(),
            components: sys.objects().iter().map(|&n| ElementMap::identity(n)).collect(),
        }
    }

    /// `next ∘ self`, for `self: X → Y` and `next: Y → Z`.
    pub fn then(&self, next: &InverseSystemMorphism) -> InverseSystemMorphism {
        InverseSystemMorphism {
            phi: next.phi.iter().map(|&j| self.phi[j]).collect(),
            components: next
                .components
                .iter()
                .zip(&next.phi)
                .map(|(g, &j)| self.components[j].then(g))
                .collect(),
        }
    }
}

/// Checks `phi: J → I` preserves joins, each `f_j` maps `X_phi(j)` into
/// `Y_j`, and `q_jj' ∘ f_j' = f_j ∘ p_phi(j)phi(j')` for `j <= j'`.
pub fn validate_inverse_morphism(
    src: &InverseSystem,
    dst: &InverseSystem,
    m: &InverseSystemMorphism,
) -> Result<(), MorphismError> {
    let mut errs = Vec::new();
    if !check_index_map(dst.index(), src.index(), &m.phi, &mut errs) {
        return Err(MorphismError(errs));
    }
    if m.components.len() != dst.index().size() {
        errs.push(MorphismViolation::ComponentCount {
            expected: dst.index().size(),
            found: m.components.len(),
        });
        return Err(MorphismError(errs));
    }
    let mut typed = true;
    for (j, f) in m.components.iter().enumerate() {
        if let Err(error) = check_shape(f, src.object(m.phi[j]), dst.object(j)) {
            typed = false;
            errs.push(MorphismViolation::Component { index: j, error });
        }
    }
    if typed {
        for (lower, upper) in dst.index().strict_pairs() {
            let (pl, pu) = (m.phi[lower], m.phi[upper]);
            if !src.index().leq(pl, pu) {
                continue;
            }
            let bad = (0..src.object(pu)).find(|&x| {
                dst.pull(lower, upper, m.components[upper].apply(x))
                    != m.components[lower].apply(src.pull(pl, pu, x))
            });
            if let Some(element) = bad {
                errs.push(MorphismViolation::Square {
                    lower,
                    upper,
                    element,
                });
            }
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(MorphismError(errs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SumMorphismError {
    #[error(transparent)]
    Invalid(#[from] MorphismError),
    #[error("index map sends the bottom {0} to a non-bottom, so constants are not preserved")]
    BottomNotPreserved(usize),
    #[error("induced map on sums is not a homomorphism: {0}")]
    NotHomomorphism(HomError),
}

/// The map of sums `h(a) = f_i(a)` for `a` in fiber `i`, re-checked to be a
/// homomorphism. Sum elements are indexed as laid out by [`plonka_sum`].
/// Constants live in the bottom fiber, so with constants in the signature
/// `phi` must also send bottom to bottom.
pub fn sum_of_morphism(
    src: &DirectSystem,
    dst: &DirectSystem,
    m: &DirectSystemMorphism,
) -> Result<ElementMap, SumMorphismError> {
    validate_direct_morphism(src, dst, m)?;
    if src.signature().has_constants() {
        let (a, b) = (src.index().bottom(), dst.index().bottom());
        if let (Some(a), Some(b)) = (a, b) {
            if m.phi[a] != b {
                return Err(SumMorphismError::BottomNotPreserved(a));
            }
        }
    }
    let offsets = |sys: &DirectSystem| {
        sys.fibers()
            .iter()
            .scan(0, |acc, f| {
                let start = *acc;
                *acc += f.size();
                Some(start)
            })
            .collect::<Vec<_>>()
    };
    let dst_offsets = offsets(dst);
    let mut map = Vec::with_capacity(src.total_size());
    for (i, f) in m.components.iter().enumerate() {
        map.extend(f.map.iter().map(|&y| dst_offsets[m.phi[i]] + y));
    }
    let h = ElementMap::new(map);
    let (a, b) = (plonka_sum(src), plonka_sum(dst));
    check_homomorphism(a.carrier(), b.carrier(), &h).map_err(SumMorphismError::NotHomomorphism)?;
    Ok(h)
}

/// True iff every fiber of `src` is mapped by `h` into a single fiber of
/// `dst`.
pub fn check_fibre_preservation(h: &ElementMap, src: &PlonkaAlgebra, dst: &PlonkaAlgebra) -> bool {
    fibre_images(h, src, dst).is_ok()
}

fn fibre_images(h: &ElementMap, src: &PlonkaAlgebra, dst: &PlonkaAlgebra) -> Result<Vec<usize>, usize> {
    (0..src.index().size())
        .map(|i| {
            let mut images = src
                .fiber_elements(i)
                .into_iter()
                .map(|e| dst.fiber_of(h.apply(e)));
            let first = images.next().ok_or(i)?;
            images.all(|j| j == first).then_some(first).ok_or(i)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibreMapError {
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(HomError),
    #[error("fiber {0} is split across several target fibers")]
    NotFibrePreserving(usize),
    #[error("induced index map does not preserve the join of {0} and {1}")]
    NotJoinPreserving(usize, usize),
}

/// The index map `phi_h` with `h(A_i) ⊆ B_phi_h(i)`, checked to preserve
/// joins.
pub fn fibre_map_of_hom(
    h: &ElementMap,
    src: &PlonkaAlgebra,
    dst: &PlonkaAlgebra,
) -> Result<Vec<usize>, FibreMapError> {
    check_homomorphism(src.carrier(), dst.carrier(), h).map_err(FibreMapError::NotHomomorphism)?;
    let phi = fibre_images(h, src, dst).map_err(FibreMapError::NotFibrePreserving)?;
    if let Some((a, b)) = join_violation(src.index(), dst.index(), &phi) {
        return Err(FibreMapError::NotJoinPreserving(a, b));
    }
    Ok(phi)
}

/// Object part of the functor from algebras to systems: the decomposition
/// along the partition term `t`.
pub fn functor_f(a: &FiniteAlgebra, t: &Term) -> Result<Decomposition, DecomposeError> {
    decompose(a, t)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    FibreMap(#[from] FibreMapError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// Morphism part: `h ↦ (phi_h, h restricted to each fiber)`, validated as a
/// system morphism between the two decompositions.
pub fn functor_f_morphism(
    a: &FiniteAlgebra,
    da: &Decomposition,
    b: &FiniteAlgebra,
    db: &Decomposition,
    h: &ElementMap,
) -> Result<DirectSystemMorphism, FunctorError> {
    let (va, vb) = (da.view(a), db.view(b));
    let phi = fibre_map_of_hom(h, &va, &vb)?;
    let components = (0..da.system.index().size())
        .map(|i| {
            ElementMap::new(
                va.fiber_elements(i)
                    .into_iter()
                    .map(|e| vb.tag(h.apply(e)).element)
                    .collect(),
            )
        })
        .collect();
    let m = DirectSystemMorphism { phi, components };
    validate_direct_morphism(&da.system, &db.system, &m)?;
    Ok(m)
}

/// Object part of the functor from systems to algebras.
pub fn functor_g(sys: &DirectSystem) -> PlonkaAlgebra {
    plonka_sum(sys)
}

/// Morphism part: [`sum_of_morphism`].
pub fn functor_g_morphism(
    src: &DirectSystem,
    dst: &DirectSystem,
    m: &DirectSystemMorphism,
) -> Result<ElementMap, SumMorphismError> {
    sum_of_morphism(src, dst, m)
}

/// An isomorphism of systems: an index isomorphism `sigma` and, for each
/// index `i`, a bijection from the `i`-th object onto the `sigma(i)`-th,
/// commuting with all transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemIso {
    pub index_map: Vec<usize>,
    pub components: Vec<ElementMap>,
}

impl fmt::Display for SystemIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "index {:?}", self.index_map)?;
        for (i, c) in self.components.iter().enumerate() {
            write!(f, "; fiber {i}: {c}")?;
        }
        Ok(())
    }
}

/// Commutation test used by [`search_system_iso`].
type Commutes<'a> = dyn Fn(&[usize], &[Option<ElementMap>], usize, usize) -> bool + 'a;

/// Backtracking over index isomorphisms and then over per-index candidate
/// bijections, assigned bottom-up; `commutes(sigma, comps, lower, upper)` is
/// asked once both ends of a strict pair have components.
fn search_system_iso(
    a: &Semilattice,
    b: &Semilattice,
    candidates: &dyn Fn(usize, usize) -> Vec<ElementMap>,
    commutes: &Commutes,
) -> Option<SystemIso> {
    let order = a.linear_extension();
    for sigma in semilattice_isomorphisms(a, b) {
        let cands: Vec<Vec<ElementMap>> = (0..a.size()).map(|i| candidates(i, sigma[i])).collect();
        if cands.iter().any(Vec::is_empty) {
            continue;
        }
        let mut chosen = vec![None; a.size()];
        if assign(a, &order, 0, &sigma, &cands, &mut chosen, commutes) {
            return Some(SystemIso {
                index_map: sigma,
                components: chosen.into_iter().map(Option::unwrap).collect(),
            });
        }
    }
    None
}

fn assign(
    a: &Semilattice,
    order: &[usize],
    pos: usize,
    sigma: &[usize],
    cands: &[Vec<ElementMap>],
    chosen: &mut Vec<Option<ElementMap>>,
    commutes: &Commutes,
) -> bool {
    let Some(&i) = order.get(pos) else {
        return true;
    };
    for c in &cands[i] {
        chosen[i] = Some(c.clone());
        let ok = (0..a.size())
            .filter(|&l| a.lt(l, i))
            .all(|l| commutes(sigma, chosen, l, i));
        if ok && assign(a, order, pos + 1, sigma, cands, chosen, commutes) {
            return true;
        }
    }
    chosen[i] = None;
    false
}

/// An isomorphism of direct systems `s → t`, if one exists.
pub fn find_direct_system_isomorphism(s: &DirectSystem, t: &DirectSystem) -> Option<SystemIso> {
    if s.signature() != t.signature() {
        return None;
    }
    search_system_iso(
        s.index(),
        t.index(),
        &|i, j| enumerate_isomorphisms(s.fiber(i), t.fiber(j)),
        &|sigma, chosen, lo, hi| {
            let (psi_lo, psi_hi) = (chosen[lo].as_ref().unwrap(), chosen[hi].as_ref().unwrap());
            (0..s.fiber(lo).size())
                .all(|x| psi_hi.apply(s.push(lo, hi, x)) == t.push(sigma[lo], sigma[hi], psi_lo.apply(x)))
        },
    )
}

/// An isomorphism of inverse systems `s → t`, if one exists.
pub fn find_inverse_system_isomorphism(s: &InverseSystem, t: &InverseSystem) -> Option<SystemIso> {
    search_system_iso(
        s.index(),
        t.index(),
        &|i, j| {
            if s.object(i) != t.object(j) {
                return Vec::new();
            }
            let mut all = Vec::new();
            permutations(s.object(i), &mut |p| all.push(ElementMap::new(p.to_vec())));
            all
        },
        &|sigma, chosen, lo, hi| {
            let (psi_lo, psi_hi) = (chosen[lo].as_ref().unwrap(), chosen[hi].as_ref().unwrap());
            (0..s.object(hi))
                .all(|x| psi_lo.apply(s.pull(lo, hi, x)) == t.pull(sigma[lo], sigma[hi], psi_hi.apply(x)))
        },
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error("the decomposition of the sum is not isomorphic to the original system")]
    SystemRoundTrip,
    #[error("the sum of the decomposition is not isomorphic to the sum")]
    AlgebraRoundTrip,
}

/// Both round trips between a system and its sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// from the decomposition of the sum to the original system
    pub system_iso: SystemIso,
    /// from the sum of that decomposition to the original sum
    pub algebra_iso: ElementMap,
}

/// Decomposes the sum of `sys` along `t` and checks that this recovers
/// `sys` up to isomorphism, and that summing again recovers the sum.
pub fn roundtrip_equivalence_check(
    sys: &DirectSystem,
    t: &Term,
) -> Result<EquivalenceReport, EquivalenceError> {
    let sum = functor_g(sys);
    let decomposition = functor_f(sum.carrier(), t)?;
    let system_iso = find_direct_system_isomorphism(&decomposition.system, sys)
        .ok_or(EquivalenceError::SystemRoundTrip)?;
    let again = functor_g(&decomposition.system);
    let algebra_iso =
        find_isomorphism(again.carrier(), sum.carrier()).ok_or(EquivalenceError::AlgebraRoundTrip)?;
    Ok(EquivalenceReport {
        system_iso,
        algebra_iso,
    })
}

/// True iff `phi` is join-preserving between the given indices.
pub fn is_index_homomorphism(from: &Semilattice, to: &Semilattice, phi: &[usize]) -> bool {
    is_semilattice_homomorphism(from, to, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_homomorphisms;
    use crate::fixtures::{absorption_term, b2, b4, ex22, single_fiber};

    /// ex22 → ex22 sending both fibers to j, the i-fiber through p.
    pub(crate) fn collapsing() -> DirectSystemMorphism {
        DirectSystemMorphism {
            phi: vec![1, 1],
            components: vec![ElementMap::new(vec![0, 3, 0, 3]), ElementMap::identity(4)],
        }
    }

    /// `phi = i` everywhere, `f_i = p`, `f_j = id`; keeps the bottom fixed.
    pub(crate) fn folding() -> DirectSystemMorphism {
        DirectSystemMorphism {
            phi: vec![0, 0],
            components: vec![ElementMap::new(vec![0, 3, 0, 3]), ElementMap::identity(4)],
        }
    }

    #[test]
    fn direct_morphism_validation() {
        let sys = ex22();
        assert_eq!(
            validate_direct_morphism(&sys, &sys, &DirectSystemMorphism::identity(&sys)),
            Ok(())
        );
        assert_eq!(validate_direct_morphism(&sys, &sys, &collapsing()), Ok(()));
        let mut bad = collapsing();
        bad.components[0] = ElementMap::identity(4);
        let err = validate_direct_morphism(&sys, &sys, &bad).unwrap_err();
        assert!(matches!(
            err.0[..],
            [MorphismViolation::Square {
                lower: 0,
                upper: 1,
                element: 1
            }]
        ));
        let swap = DirectSystemMorphism {
            phi: vec![1, 0],
            components: vec![ElementMap::identity(4), ElementMap::identity(4)],
        };
        let err = validate_direct_morphism(&sys, &sys, &swap).unwrap_err();
        assert!(matches!(
            err.0[0],
            MorphismViolation::IndexMapNotJoinPreserving { .. }
        ));
    }

    #[test]
    fn sums_of_morphisms() {
        let sys = ex22();
        let id = sum_of_morphism(&sys, &sys, &DirectSystemMorphism::identity(&sys)).unwrap();
        assert_eq!(id, ElementMap::identity(8));
        let h = sum_of_morphism(&sys, &sys, &folding()).unwrap();
        assert_eq!(h.map, vec![0, 3, 0, 3, 0, 1, 2, 3]);
        assert_eq!(
            sum_of_morphism(&sys, &sys, &collapsing()),
            Err(SumMorphismError::BottomNotPreserved(0))
        );
        // the induced map of the collapsing morphism respects every operation
        // except the constants, which sit in the bottom fiber
        let p = plonka_sum(&sys);
        let raw = ElementMap::new(vec![4, 7, 4, 7, 4, 5, 6, 7]);
        match check_homomorphism(p.carrier(), p.carrier(), &raw) {
            Err(HomError::NotPreserved { op, args, .. }) => {
                assert!(args.is_empty());
                assert!(op == "zero" || op == "one");
            }
            other => panic!("unexpected {other:?}"),
        }
        let mut bad = collapsing();
        bad.components[0] = ElementMap::identity(4);
        assert!(matches!(
            sum_of_morphism(&sys, &sys, &bad),
            Err(SumMorphismError::Invalid(_))
        ));
    }

    #[test]
    fn fibre_preservation() {
        let sys = ex22();
        let p = plonka_sum(&sys);
        assert!(check_fibre_preservation(&ElementMap::identity(8), &p, &p));
        let homs = enumerate_homomorphisms(p.carrier(), p.carrier()).unwrap();
        assert!(!homs.is_empty());
        for h in &homs {
            assert!(check_fibre_preservation(h, &p, &p));
            let phi = fibre_map_of_hom(h, &p, &p).unwrap();
            assert!(is_semilattice_homomorphism(p.index(), p.index(), &phi));
        }
        // a -> b, a' -> 0_i splits fiber i
        let split = ElementMap::new(vec![0, 5, 0, 3, 4, 5, 6, 7]);
        assert!(!check_fibre_preservation(&split, &p, &p));
        assert!(matches!(
            fibre_map_of_hom(&split, &p, &p),
            Err(FibreMapError::NotHomomorphism(_))
        ));
    }

    #[test]
    fn fibre_maps() {
        let sys = ex22();
        let p = plonka_sum(&sys);
        assert_eq!(fibre_map_of_hom(&ElementMap::identity(8), &p, &p), Ok(vec![0, 1]));
        let h = sum_of_morphism(&sys, &sys, &folding()).unwrap();
        assert_eq!(fibre_map_of_hom(&h, &p, &p), Ok(vec![0, 0]));
        // B4 → B2 homomorphisms over one-point indices
        let (s, t) = (plonka_sum(&single_fiber(b4())), plonka_sum(&single_fiber(b2())));
        for h in enumerate_homomorphisms(s.carrier(), t.carrier()).unwrap() {
            assert_eq!(fibre_map_of_hom(&h, &s, &t), Ok(vec![0]));
        }
    }

    #[test]
    fn functor_f_on_objects_and_morphisms() {
        let sys = ex22();
        let p = plonka_sum(&sys).into_carrier();
        let t = absorption_term();
        let d = functor_f(&p, &t).unwrap();
        assert!(find_direct_system_isomorphism(&d.system, &sys).is_some());
        let id = functor_f_morphism(&p, &d, &p, &d, &ElementMap::identity(8)).unwrap();
        assert_eq!(id, DirectSystemMorphism::identity(&d.system));
        let h = sum_of_morphism(&sys, &sys, &folding()).unwrap();
        assert_eq!(functor_f_morphism(&p, &d, &p, &d, &h).unwrap(), folding());
    }

    #[test]
    fn functoriality_on_a_composable_pair() {
        let sys = ex22();
        let m = folding();
        let mm = m.then(&m);
        assert_eq!(validate_direct_morphism(&sys, &sys, &mm), Ok(()));
        let g = |m: &DirectSystemMorphism| sum_of_morphism(&sys, &sys, m).unwrap();
        assert_eq!(g(&mm), g(&m).then(&g(&m)));
        let p = plonka_sum(&sys).into_carrier();
        let d = functor_f(&p, &absorption_term()).unwrap();
        let f = |h: &ElementMap| functor_f_morphism(&p, &d, &p, &d, h).unwrap();
        let h = g(&m);
        assert_eq!(f(&h.then(&h)), f(&h).then(&f(&h)));
    }

    #[test]
    fn equivalence_round_trips() {
        let t = absorption_term();
        let report = roundtrip_equivalence_check(&ex22(), &t).unwrap();
        assert_eq!(report.system_iso.index_map, vec![0, 1]);
        assert!(roundtrip_equivalence_check(&single_fiber(b4()), &t).is_ok());
    }

    fn chain_inverse(
        p01: Vec<usize>,
        p12: Vec<usize>,
        p02: Vec<usize>,
    ) -> Result<InverseSystem, InverseSystemError> {
        let mut tr = BTreeMap::new();
        tr.insert((1, 0), ElementMap::new(p01));
        tr.insert((2, 1), ElementMap::new(p12));
        tr.insert((2, 0), ElementMap::new(p02));
        InverseSystem::new(Semilattice::chain(3), vec![2, 2, 2], tr)
    }

    #[test]
    fn inverse_system_validation() {
        assert!(chain_inverse(vec![0, 0], vec![1, 0], vec![0, 0]).is_ok());
        let err = chain_inverse(vec![0, 1], vec![1, 0], vec![0, 1]).unwrap_err();
        assert_eq!(
            err.0,
            vec![InverseViolation::Composition {
                i: 0,
                j: 1,
                k: 2,
                point: 0
            }]
        );
        let mut tr = BTreeMap::new();
        tr.insert((0, 1), ElementMap::new(vec![0, 0]));
        let err = InverseSystem::new(Semilattice::chain(2), vec![2, 2], tr).unwrap_err();
        assert_eq!(
            err.0,
            vec![
                InverseViolation::WrongDirection { from: 0, to: 1 },
                InverseViolation::MissingTransition { from: 1, to: 0 }
            ]
        );
    }

    #[test]
    fn inverse_morphisms() {
        let x = chain_inverse(vec![0, 0], vec![1, 0], vec![0, 0]).unwrap();
        let id = InverseSystemMorphism::identity(&x);
        assert_eq!(validate_inverse_morphism(&x, &x, &id), Ok(()));
        let mut bad = id.clone();
        bad.components[2] = ElementMap::new(vec![1, 0]);
        let err = validate_inverse_morphism(&x, &x, &bad).unwrap_err();
        assert!(err
            .0
            .iter()
            .any(|v| matches!(v, MorphismViolation::Square { .. })));
        assert_eq!(id.then(&id), id);
    }

    #[test]
    fn inverse_isomorphism_search() {
        let x = chain_inverse(vec![0, 0], vec![1, 0], vec![0, 0]).unwrap();
        let y = chain_inverse(vec![1, 1], vec![1, 0], vec![1, 1]).unwrap();
        let iso = find_inverse_system_isomorphism(&x, &y).unwrap();
        assert_eq!(iso.components[0], ElementMap::new(vec![1, 0]));
        let z = chain_inverse(vec![0, 1], vec![0, 0], vec![0, 0]).unwrap();
        assert!(find_inverse_system_isomorphism(&x, &z).is_none());
    }
}
