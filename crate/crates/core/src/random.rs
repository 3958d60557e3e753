//! Seeded generators for Boolean-fiber direct systems and their morphisms.
//! Everything is driven by a `ChaCha8Rng`, so output depends only on the
//! seed and parameters.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{enumerate_homomorphisms, ElementMap, FiniteAlgebra};
use crate::fixtures::bitmask_boolean_algebra;
use crate::plonka::DirectSystem;
use crate::semilattice::{labelled_semilattices, semilattice_homomorphisms, Semilattice};
use crate::systems::DirectSystemMorphism;

pub const FIBER_SIZES: [usize; 3] = [2, 4, 8];
pub const MAX_FIBERS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("fiber size must be 2, 4 or 8, got {0}")]
    FiberSize(usize),
    #[error("fiber count must be between 1 and {MAX_FIBERS}, got {0}")]
    FiberCount(usize),
}

/// A random Boolean-fiber direct system. The index is drawn from the
/// catalog of labelled semilattices with a bottom; each fiber is the
/// Boolean algebra of the given size with shuffled element labels;
/// transitions are drawn uniformly from all homomorphisms along covers and
/// composed for the remaining pairs.
pub fn gen_random_system(seed: u64, fiber_count: usize, fiber_size: usize) -> Result<DirectSystem, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_system(&mut rng, fiber_count, fiber_size)
}

pub fn random_system(
    rng: &mut impl Rng,
    fiber_count: usize,
    fiber_size: usize,
) -> Result<DirectSystem, GenError> {
    if !FIBER_SIZES.contains(&fiber_size) {
        return Err(GenError::FiberSize(fiber_size));
    }
    if fiber_count == 0 || fiber_count > MAX_FIBERS {
        return Err(GenError::FiberCount(fiber_count));
    }
    let catalog: Vec<Semilattice> = labelled_semilattices(fiber_count)
        .into_iter()
        .filter(|s| s.bottom().is_some())
        .collect();
    let index = catalog
        .choose(rng)
        .expect("a chain is always in the catalog")
        .clone()
        .with_names((0..fiber_count).map(|k| format!("k{k}")).collect());
    let bits = fiber_size.trailing_zeros() as usize;
    let fibers: Vec<FiniteAlgebra> = (0..fiber_count)
        .map(|k| {
            let names = (0..fiber_size).map(|m| format!("e{m}_{k}")).collect();
            let mut perm: Vec<usize> = (0..fiber_size).collect();
            perm.shuffle(rng);
            bitmask_boolean_algebra(bits, names).relabel(&perm)
        })
        .collect();
    loop {
        if let Some(transitions) = sample_transitions(rng, &index, &fibers) {
            return Ok(DirectSystem::new(index, fibers, transitions).expect("generated systems are coherent"));
        }
    }
}

/// Chooses `f_ck` for each cover `c < k` in linear-extension order, keeping
/// only candidates that agree with composites already fixed through other
/// covers. `None` when some cover has no consistent candidate.
fn sample_transitions(
    rng: &mut impl Rng,
    index: &Semilattice,
    fibers: &[FiniteAlgebra],
) -> Option<BTreeMap<(usize, usize), ElementMap>> {
    let n = index.size();
    let mut tr: BTreeMap<(usize, usize), ElementMap> = BTreeMap::new();
    for k in index.linear_extension() {
        for c in (0..n).filter(|&c| index.covers(c, k)) {
            let candidates: Vec<ElementMap> = enumerate_homomorphisms(&fibers[c], &fibers[k])
                .expect("Boolean fibers share a signature and are small")
                .into_iter()
                .filter(|f| {
                    (0..n).filter(|&a| index.lt(a, c)).all(|a| match tr.get(&(a, k)) {
                        Some(fixed) => tr[&(a, c)].then(f) == *fixed,
                        None => true,
                    })
                })
                .collect();
            let f = candidates.choose(rng)?.clone();
            for a in (0..n).filter(|&a| index.lt(a, c)) {
                if !tr.contains_key(&(a, k)) {
                    let composite = tr[&(a, c)].then(&f);
                    tr.insert((a, k), composite);
                }
            }
            tr.insert((c, k), f);
        }
    }
    Some(tr)
}

/// Fiber count and size used for the `seed`-th member of the standard test
/// corpus: counts cycle through 1..=3 and sizes through 2, 4, 8.
pub fn corpus_parameters(seed: u64) -> (usize, usize) {
    let count = 1 + (seed % 3) as usize;
    let size = FIBER_SIZES[(seed / 3 % 3) as usize];
    (count, size)
}

pub fn corpus_system(seed: u64) -> DirectSystem {
    let (count, size) = corpus_parameters(seed);
    gen_random_system(seed, count, size).expect("corpus parameters are in range")
}

/// A random morphism `src → dst`: index maps are tried in random order, and
/// components are found by backtracking over shuffled homomorphisms. With
/// `keep_bottom` only bottom-preserving index maps are used. `None` when no
/// morphism exists.
pub fn random_direct_morphism(
    rng: &mut impl Rng,
    src: &DirectSystem,
    dst: &DirectSystem,
    keep_bottom: bool,
) -> Option<DirectSystemMorphism> {
    let mut phis = semilattice_homomorphisms(src.index(), dst.index());
    if keep_bottom {
        if let (Some(a), Some(b)) = (src.index().bottom(), dst.index().bottom()) {
            phis.retain(|phi| phi[a] == b);
        }
    }
    phis.shuffle(rng);
    let order = src.index().linear_extension();
    for phi in phis {
        let options: Vec<Vec<ElementMap>> = (0..src.index().size())
            .map(|i| {
                let mut homs = enumerate_homomorphisms(src.fiber(i), dst.fiber(phi[i])).ok()?;
                homs.shuffle(rng);
                Some(homs)
            })
            .collect::<Option<_>>()?;
        let mut chosen: Vec<Option<ElementMap>> = vec![None; src.index().size()];
        if components(src, dst, &phi, &order, &options, 0, &mut chosen) {
            return Some(DirectSystemMorphism {
                phi,
                components: chosen.into_iter().map(|c| c.expect("all assigned")).collect(),
            });
        }
    }
    None
}

fn components(
    src: &DirectSystem,
    dst: &DirectSystem,
    phi: &[usize],
    order: &[usize],
    options: &[Vec<ElementMap>],
    depth: usize,
    chosen: &mut Vec<Option<ElementMap>>,
) -> bool {
    let Some(&i) = order.get(depth) else {
        return true;
    };
    for f in &options[i] {
        let commutes = (0..src.index().size())
            .filter(|&l| src.index().lt(l, i))
            .all(|l| {
                let fl = chosen[l].as_ref().expect("lower indices come first");
                src.transition(l, i).then(f) == fl.then(&dst.transition(phi[l], phi[i]))
            });
        if commutes {
            chosen[i] = Some(f.clone());
            if components(src, dst, phi, order, options, depth + 1, chosen) {
                return true;
            }
        }
    }
    chosen[i] = None;
    false
}

/// Systems `a, b, c` with morphisms `a → b → c`, all drawn from `seed`.
pub struct ComposableChain {
    pub systems: [DirectSystem; 3],
    pub first: DirectSystemMorphism,
    pub second: DirectSystemMorphism,
}

pub fn random_composable_chain(seed: u64) -> ComposableChain {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let systems = [0, 1, 2].map(|_| {
            let count = rng.gen_range(1..=MAX_FIBERS);
            let size = FIBER_SIZES[rng.gen_range(0..2)];
            random_system(&mut rng, count, size).expect("parameters are in range")
        });
        let first = random_direct_morphism(&mut rng, &systems[0], &systems[1], false);
        let second = random_direct_morphism(&mut rng, &systems[1], &systems[2], false);
        if let (Some(first), Some(second)) = (first, second) {
            return ComposableChain {
                systems,
                first,
                second,
            };
        }
    }
}
