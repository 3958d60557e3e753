//! Semilattice direct systems of algebras, their Płonka sums, partition
//! functions and the decomposition of an algebra along a partition function.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{
    advance, check_homomorphism, satisfies, AlgebraError, CompiledTerm, Counterexample, ElementMap,
    FiniteAlgebra, HomError,
};
use crate::semilattice::{Semilattice, SemilatticeError};
use crate::terms::{Identity, Signature, Term};

/// One problem found while validating a direct system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemViolation {
    FiberCount {
        expected: usize,
        found: usize,
    },
    FiberSignature {
        fiber: usize,
    },
    NoOperations,
    MissingBottom,
    NotStrictPair {
        from: usize,
        to: usize,
    },
    MissingTransition {
        from: usize,
        to: usize,
    },
    BadTransition {
        from: usize,
        to: usize,
        error: HomError,
    },
    Coherence {
        i: usize,
        j: usize,
        k: usize,
        element: usize,
    },
}

impl fmt::Display for SystemViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SystemViolation::*;
        match self {
            FiberCount { expected, found } => {
                write!(f, "{found} fibers for an index of size {expected}")
            }
            FiberSignature { fiber } => write!(f, "fiber {fiber} has a different signature"),
            NoOperations => write!(f, "signature has no operation of positive arity"),
            MissingBottom => write!(f, "signature has constants but the index has no bottom"),
            NotStrictPair { from, to } => {
                write!(
                    f,
                    "transition {from} -> {to} given for a pair that is not strictly comparable"
                )
            }
            MissingTransition { from, to } => write!(f, "no transition {from} -> {to}"),
            BadTransition { from, to, error } => {
                write!(f, "transition {from} -> {to} is not a homomorphism: {error}")
            }
            Coherence { i, j, k, element } => write!(
                f,
                "f_{i}{k} != f_{j}{k} . f_{i}{j} at element {element} of fiber {i}"
            ),
        }
    }
}

/// All violations found in a candidate system.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid system: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct SystemError(pub Vec<SystemViolation>);

/// A semilattice direct system: fibers indexed by a join-semilattice with a
/// homomorphism `f_ij` for every pair `i < j`. The maps `f_ii` are identities
/// and are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSystem {
    index: Semilattice,
    fibers: Vec<FiniteAlgebra>,
    transitions: BTreeMap<(usize, usize), ElementMap>,
}

impl DirectSystem {
    /// Validates a candidate system, collecting every violation.
    pub fn new(
        index: Semilattice,
        fibers: Vec<FiniteAlgebra>,
        transitions: BTreeMap<(usize, usize), ElementMap>,
    ) -> Result<Self, SystemError> {
        let mut errs = Vec::new();
        if fibers.len() != index.size() {
            errs.push(SystemViolation::FiberCount {
                expected: index.size(),
                found: fibers.len(),
            });
            return Err(SystemError(errs));
        }
        let sig = fibers[0].signature();
        for (k, fiber) in fibers.iter().enumerate() {
            if fiber.signature() != sig {
                errs.push(SystemViolation::FiberSignature { fiber: k });
            }
        }
        if !errs.is_empty() {
            return Err(SystemError(errs));
        }
        if !sig.has_non_constant() {
            errs.push(SystemViolation::NoOperations);
        }
        if sig.has_constants() && index.bottom().is_none() {
            errs.push(SystemViolation::MissingBottom);
        }
        for &(from, to) in transitions.keys() {
            if from >= index.size() || to >= index.size() || !index.lt(from, to) {
                errs.push(SystemViolation::NotStrictPair { from, to });
            }
        }
        for (from, to) in index.strict_pairs() {
            match transitions.get(&(from, to)) {
                None => errs.push(SystemViolation::MissingTransition { from, to }),
                Some(map) => {
                    if let Err(error) = check_homomorphism(&fibers[from], &fibers[to], map) {
                        errs.push(SystemViolation::BadTransition { from, to, error });
                    }
                }
            }
        }
        if !errs.is_empty() {
            return Err(SystemError(errs));
        }
        let sys = DirectSystem {
            index,
            fibers,
            transitions,
        };
        let n = sys.index.size();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let strict = sys.index.lt(i, j) && sys.index.lt(j, k);
                    if !strict {
                        continue;
                    }
                    if let Some(element) = (0..sys.fibers[i].size())
                        .find(|&e| sys.push(i, k, e) != sys.push(j, k, sys.push(i, j, e)))
                    {
                        errs.push(SystemViolation::Coherence { i, j, k, element });
                    }
                }
            }
        }
        if errs.is_empty() {
            Ok(sys)
        } else {
            Err(SystemError(errs))
        }
    }

    pub fn index(&self) -> &Semilattice {
        &self.index
    }

    pub fn fibers(&self) -> &[FiniteAlgebra] {
        &self.fibers
    }

    pub fn fiber(&self, i: usize) -> &FiniteAlgebra {
        &self.fibers[i]
    }

    pub fn signature(&self) -> &Signature {
        self.fibers[0].signature()
    }

    /// Stored transitions, keyed by strictly comparable pairs.
    pub fn transitions(&self) -> &BTreeMap<(usize, usize), ElementMap> {
        &self.transitions
    }

    /// The transition `f_ij` for `i <= j` as a map.
    pub fn transition(&self, i: usize, j: usize) -> ElementMap {
        if i == j {
            ElementMap::identity(self.fibers[i].size())
        } else {
            self.transitions[&(i, j)].clone()
        }
    }

    /// `f_ij(e)` for `i <= j`.
    #[inline]
    pub fn push(&self, i: usize, j: usize, e: usize) -> usize {
        if i == j {
            e
        } else {
            self.transitions[&(i, j)].map[e]
        }
    }

    pub fn total_size(&self) -> usize {
        self.fibers.iter().map(FiniteAlgebra::size).sum()
    }
}

pub fn validate_direct_system(
    index: Semilattice,
    fibers: Vec<FiniteAlgebra>,
    transitions: BTreeMap<(usize, usize), ElementMap>,
) -> Result<DirectSystem, SystemError> {
    DirectSystem::new(index, fibers, transitions)
}

/// An element of a sum, tagged with its fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SumElement {
    pub fiber: usize,
    pub element: usize,
}

/// An algebra together with a partition of its universe into fibers indexed
/// by a semilattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlonkaAlgebra {
    carrier: FiniteAlgebra,
    index: Semilattice,
    tags: Vec<SumElement>,
    source: Option<DirectSystem>,
}

impl PlonkaAlgebra {
    /// Wraps an algebra with an externally computed fiber tagging.
    pub fn from_parts(carrier: FiniteAlgebra, index: Semilattice, tags: Vec<SumElement>) -> Self {
        assert_eq!(carrier.size(), tags.len());
        PlonkaAlgebra {
            carrier,
            index,
            tags,
            source: None,
        }
    }

    pub fn carrier(&self) -> &FiniteAlgebra {
        &self.carrier
    }

    pub fn into_carrier(self) -> FiniteAlgebra {
        self.carrier
    }

    pub fn index(&self) -> &Semilattice {
        &self.index
    }

    pub fn source(&self) -> Option<&DirectSystem> {
        self.source.as_ref()
    }

    pub fn fiber_of(&self, e: usize) -> usize {
        self.tags[e].fiber
    }

    pub fn tag(&self, e: usize) -> SumElement {
        self.tags[e]
    }

    /// The carrier element with the given tag.
    pub fn element(&self, tag: SumElement) -> Option<usize> {
        self.tags.iter().position(|&t| t == tag)
    }

    /// Carrier elements of fiber `i`, in fiber order.
    pub fn fiber_elements(&self, i: usize) -> Vec<usize> {
        let mut els: Vec<usize> = (0..self.tags.len())
            .filter(|&e| self.tags[e].fiber == i)
            .collect();
        els.sort_by_key(|&e| self.tags[e].element);
        els
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }
}

/// The Płonka sum. Fibers are laid out in index order, elements in fiber
/// order. An operation of positive arity pushes its arguments to the join of
/// their fibers and is computed there; constants are read in the bottom
/// fiber.
pub fn plonka_sum(sys: &DirectSystem) -> PlonkaAlgebra {
    let mut tags = Vec::with_capacity(sys.total_size());
    let mut offsets = Vec::with_capacity(sys.fibers.len());
    for (i, fiber) in sys.fibers.iter().enumerate() {
        offsets.push(tags.len());
        tags.extend((0..fiber.size()).map(|element| SumElement { fiber: i, element }));
    }
    let mut all_names = std::collections::HashSet::new();
    let unique = sys
        .fibers
        .iter()
        .flat_map(|f| f.names())
        .all(|n| all_names.insert(n));
    let names = tags
        .iter()
        .map(|t| {
            let name = sys.fibers[t.fiber].name(t.element);
            if unique {
                name.to_string()
            } else {
                format!("{}@{}", name, sys.index.name(t.fiber))
            }
        })
        .collect();
    let bottom = sys.index.bottom();
    let mut local = Vec::new();
    let carrier = crate::algebra::FiniteAlgebra::from_fn(sys.signature().clone(), names, |op, args| {
        if args.is_empty() {
            let b = bottom.expect("validated systems with constants have a bottom");
            return offsets[b] + sys.fibers[b].op(op, &[]);
        }
        let j = sys
            .index
            .join_all(args.iter().map(|&a| tags[a].fiber))
            .expect("positive arity");
        local.clear();
        local.extend(args.iter().map(|&a| sys.push(tags[a].fiber, j, tags[a].element)));
        offsets[j] + sys.fibers[j].op(op, &local)
    })
    .expect("sum tables are well-formed");
    PlonkaAlgebra {
        carrier,
        index: sys.index.clone(),
        tags,
        source: Some(sys.clone()),
    }
}

/// The first failed partition-function axiom, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionViolation {
    #[error("term cannot be used as a binary operation: {0}")]
    Term(AlgebraError),
    #[error("axiom 1 fails: {a} . {a} != {a}")]
    Idempotence { a: usize },
    #[error("axiom 2 fails: {a} . ({b} . {c}) != ({a} . {b}) . {c}")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("axiom 3 fails: {a} . ({b} . {c}) != {a} . ({c} . {b})")]
    Commutation { a: usize, b: usize, c: usize },
    #[error("axiom 4 fails for {op} at {args:?} with b = {b}")]
    Distribution { op: String, args: Vec<usize>, b: usize },
    #[error("axiom 5 fails for {op} at {args:?} with b = {b}")]
    Absorption { op: String, args: Vec<usize>, b: usize },
}

impl PartitionViolation {
    /// Number of the failed axiom, 0 for an unusable term.
    pub fn axiom(&self) -> u8 {
        match self {
            PartitionViolation::Term(_) => 0,
            PartitionViolation::Idempotence { .. } => 1,
            PartitionViolation::Associativity { .. } => 2,
            PartitionViolation::Commutation { .. } => 3,
            PartitionViolation::Distribution { .. } => 4,
            PartitionViolation::Absorption { .. } => 5,
        }
    }
}

/// The table of `a . b = t(a, b)`.
pub fn dot_table(a: &FiniteAlgebra, t: &Term) -> Result<Vec<usize>, AlgebraError> {
    let vars = ["x".to_string(), "y".to_string()];
    let code = CompiledTerm::new(t, a, &vars)?;
    let n = a.size();
    let mut stack = Vec::new();
    Ok((0..n * n)
        .map(|k| code.eval(a, &[k / n, k % n], &mut stack))
        .collect())
}

/// Checks the five partition-function axioms for `a . b = t(a, b)`:
///
/// 1. `a . a = a`
/// 2. `a . (b . c) = (a . b) . c`
/// 3. `a . (b . c) = a . (c . b)`
/// 4. `g(a_1, ..., a_n) . b = g(a_1 . b, ..., a_n . b)`
/// 5. `b . g(a_1, ..., a_n) = ((b . a_1) . a_2) ... . a_n`
///
/// where `g` ranges over operations of positive arity.
pub fn verify_partition_function(a: &FiniteAlgebra, t: &Term) -> Result<(), PartitionViolation> {
    let n = a.size();
    let table = dot_table(a, t).map_err(PartitionViolation::Term)?;
    let dot = |x: usize, y: usize| table[x * n + y];
    if let Some(x) = (0..n).find(|&x| dot(x, x) != x) {
        return Err(PartitionViolation::Idempotence { a: x });
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if dot(x, dot(y, z)) != dot(dot(x, y), z) {
                    return Err(PartitionViolation::Associativity { a: x, b: y, c: z });
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if dot(x, dot(y, z)) != dot(x, dot(z, y)) {
                    return Err(PartitionViolation::Commutation { a: x, b: y, c: z });
                }
            }
        }
    }
    let mut pushed = Vec::new();
    for op in (0..a.op_count()).filter(|&op| a.arity_of(op) >= 1) {
        let mut args = vec![0; a.arity_of(op)];
        loop {
            let g = a.apply(op, &args);
            for b in 0..n {
                pushed.clear();
                pushed.extend(args.iter().map(|&x| dot(x, b)));
                if dot(g, b) != a.apply(op, &pushed) {
                    return Err(PartitionViolation::Distribution {
                        op: a.op_name(op).to_string(),
                        args: args.clone(),
                        b,
                    });
                }
            }
            if !advance(&mut args, n) {
                break;
            }
        }
    }
    for op in (0..a.op_count()).filter(|&op| a.arity_of(op) >= 1) {
        let mut args = vec![0; a.arity_of(op)];
        loop {
            let g = a.apply(op, &args);
            for b in 0..n {
                let folded = args.iter().fold(b, |acc, &x| dot(acc, x));
                if dot(b, g) != folded {
                    return Err(PartitionViolation::Absorption {
                        op: a.op_name(op).to_string(),
                        args: args.clone(),
                        b,
                    });
                }
            }
            if !advance(&mut args, n) {
                break;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("not a partition function: {0}")]
    NotPartition(PartitionViolation),
    #[error("fiber relation is not transitive at ({0}, {1}, {2})")]
    NotEquivalence(usize, usize, usize),
    #[error("fiber {fiber} is not closed under {op} at {args:?}")]
    NotClosed {
        fiber: usize,
        op: String,
        args: Vec<usize>,
    },
    #[error("fiber order is not a partial order at ({0}, {1})")]
    NotPartialOrder(usize, usize),
    #[error("fibers {0} and {1} have no least upper bound")]
    MissingJoin(usize, usize),
    #[error("derived join table is not a semilattice: {0}")]
    Semilattice(SemilatticeError),
    #[error("transition {from} -> {to} depends on the anchor: x = {x}, anchors {b} and {c}")]
    ChoiceDependent {
        from: usize,
        to: usize,
        x: usize,
        b: usize,
        c: usize,
    },
    #[error("constant {0} does not lie in the bottom fiber")]
    ConstantOutsideBottom(String),
    #[error("decomposed system is invalid: {0}")]
    System(SystemError),
    #[error("sum of the decomposition differs from the input at {op} {args:?}")]
    Mismatch { op: String, args: Vec<usize> },
}

/// A direct system recovered from an algebra, with the tagging of the
/// algebra's elements by fiber and position within the fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub system: DirectSystem,
    pub tags: Vec<SumElement>,
}

impl Decomposition {
    /// The input algebra viewed as a sum over the recovered system.
    pub fn view(&self, a: &FiniteAlgebra) -> PlonkaAlgebra {
        PlonkaAlgebra::from_parts(a.clone(), self.system.index().clone(), self.tags.clone())
    }
}

/// Splits `a` into fibers along the partition function `t(x, y)` and
/// rebuilds the direct system, checking each step:
///
/// * `a ~ b` iff `a . b = a` and `b . a = b` is an equivalence whose blocks
///   are closed under the operations;
/// * blocks are ordered by `i <= j` iff `b . a = b` for some `a` in `i`, `b`
///   in `j`, and this order has all binary joins;
/// * `f_ij(x) = x . b` does not depend on the choice of `b` in block `j`;
/// * the sum of the resulting system reproduces `a` exactly.
///
/// Blocks are numbered by their least element; elements within a block keep
/// their order in `a`.
pub fn decompose(a: &FiniteAlgebra, t: &Term) -> Result<Decomposition, DecomposeError> {
    verify_partition_function(a, t).map_err(DecomposeError::NotPartition)?;
    let n = a.size();
    let table = dot_table(a, t).map_err(|e| DecomposeError::NotPartition(PartitionViolation::Term(e)))?;
    let dot = |x: usize, y: usize| table[x * n + y];
    let same = |x: usize, y: usize| dot(x, y) == x && dot(y, x) == y;

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if same(x, y) && same(y, z) && !same(x, z) {
                    return Err(DecomposeError::NotEquivalence(x, y, z));
                }
            }
        }
    }
    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if block_of[x] == usize::MAX {
            let members: Vec<usize> = (x..n).filter(|&y| same(x, y)).collect();
            for &y in &members {
                block_of[y] = blocks.len();
            }
            blocks.push(members);
        }
    }
    let mut tags = vec![SumElement { fiber: 0, element: 0 }; n];
    for (fiber, members) in blocks.iter().enumerate() {
        for (element, &x) in members.iter().enumerate() {
            tags[x] = SumElement { fiber, element };
        }
    }
    let m = blocks.len();

    // index order and joins
    let leq = |i: usize, j: usize| {
        blocks[i]
            .iter()
            .any(|&x| blocks[j].iter().any(|&y| dot(y, x) == y))
    };
    let rel: Vec<Vec<bool>> = (0..m).map(|i| (0..m).map(|j| leq(i, j)).collect()).collect();
    for i in 0..m {
        if !rel[i][i] {
            return Err(DecomposeError::NotPartialOrder(i, i));
        }
        for j in 0..m {
            if i != j && rel[i][j] && rel[j][i] {
                return Err(DecomposeError::NotPartialOrder(i, j));
            }
            for k in 0..m {
                if rel[i][j] && rel[j][k] && !rel[i][k] {
                    return Err(DecomposeError::NotPartialOrder(i, k));
                }
            }
        }
    }
    let mut rows = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            let uppers: Vec<usize> = (0..m).filter(|&u| rel[i][u] && rel[j][u]).collect();
            let least = uppers
                .iter()
                .copied()
                .find(|&u| uppers.iter().all(|&v| rel[u][v]))
                .ok_or(DecomposeError::MissingJoin(i, j))?;
            rows[i][j] = least;
        }
    }
    let index = Semilattice::new((0..m).map(|k| format!("A{k}")).collect(), &rows)
        .map_err(DecomposeError::Semilattice)?;

    // fibers as subalgebras; constants of fiber k are pushed up from wherever
    // the algebra's constant lives
    let mut fibers = Vec::with_capacity(m);
    for (k, members) in blocks.iter().enumerate() {
        let names = members.iter().map(|&x| a.name(x).to_string()).collect();
        let anchor = members[0];
        let mut constant_error = None;
        let sub = a.restrict(members, names, |op| {
            let c = dot(a.constant(op).expect("nullary"), anchor);
            if block_of[c] != k {
                constant_error = Some(op.to_string());
            }
            tags[c].element
        });
        if let Some(op) = constant_error {
            return Err(DecomposeError::ConstantOutsideBottom(op));
        }
        match sub {
            Some(sub) => fibers.push(sub),
            None => return Err(closure_failure(a, k, members, &block_of)),
        }
    }
    let bottom = index.bottom();
    for (op, arity) in a.signature().ops() {
        if arity == 0 {
            let c = a.constant(op).expect("nullary");
            if bottom != Some(block_of[c]) {
                return Err(DecomposeError::ConstantOutsideBottom(op.to_string()));
            }
        }
    }

    // transitions x ↦ x . b, checked against every anchor b
    let mut transitions = BTreeMap::new();
    for (from, to) in index.strict_pairs() {
        let b = blocks[to][0];
        for &x in &blocks[from] {
            if let Some(&c) = blocks[to].iter().find(|&&c| dot(x, c) != dot(x, b)) {
                return Err(DecomposeError::ChoiceDependent { from, to, x, b, c });
            }
        }
        let map = blocks[from].iter().map(|&x| tags[dot(x, b)].element).collect();
        transitions.insert((from, to), ElementMap::new(map));
    }
    let system = DirectSystem::new(index, fibers, transitions).map_err(DecomposeError::System)?;

    // reconstruction: the sum, read through the tagging, must be `a`
    let sum = plonka_sum(&system);
    let to_sum: Vec<usize> = tags
        .iter()
        .map(|&tag| sum.element(tag).expect("tag present in sum"))
        .collect();
    for op in 0..a.op_count() {
        let mut args = vec![0; a.arity_of(op)];
        let mut mapped = Vec::new();
        loop {
            mapped.clear();
            mapped.extend(args.iter().map(|&x| to_sum[x]));
            if sum.carrier().apply(op, &mapped) != to_sum[a.apply(op, &args)] {
                return Err(DecomposeError::Mismatch {
                    op: a.op_name(op).to_string(),
                    args,
                });
            }
            if !advance(&mut args, n) {
                break;
            }
        }
    }
    Ok(Decomposition { system, tags })
}

fn closure_failure(a: &FiniteAlgebra, k: usize, members: &[usize], block_of: &[usize]) -> DecomposeError {
    for op in (0..a.op_count()).filter(|&op| a.arity_of(op) >= 1) {
        let arity = a.arity_of(op);
        let mut idx = vec![0; arity];
        loop {
            let args: Vec<usize> = idx.iter().map(|&p| members[p]).collect();
            if block_of[a.apply(op, &args)] != k {
                return DecomposeError::NotClosed {
                    fiber: k,
                    op: a.op_name(op).to_string(),
                    args,
                };
            }
            if !advance(&mut idx, members.len()) {
                break;
            }
        }
    }
    unreachable!("restriction failed without a closure violation")
}

/// Whether the sum's verdict on an identity agrees with the prediction that
/// exactly the regular identities true in every fiber hold in the sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    Consistent,
    Inconsistent,
    /// the system has a single fiber, so no prediction is made
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferRow {
    pub identity: Identity,
    pub regular: bool,
    pub fibers_satisfy: bool,
    pub sum_satisfies: bool,
    pub sum_counterexample: Option<Counterexample>,
    pub consistency: Consistency,
}

/// For each identity: is it regular, does it hold in every fiber, does it
/// hold in the sum, and does the sum's verdict match `regular && fibers`.
pub fn identity_transfer_report(
    sys: &DirectSystem,
    ids: &[Identity],
) -> Result<Vec<TransferRow>, AlgebraError> {
    let sum = plonka_sum(sys);
    ids.iter()
        .map(|id| {
            let regular = id.is_regular();
            let mut fibers_satisfy = true;
            for fiber in sys.fibers() {
                fibers_satisfy &= satisfies(fiber, id)?.is_none();
            }
            let sum_counterexample = satisfies(sum.carrier(), id)?;
            let sum_satisfies = sum_counterexample.is_none();
            let consistency = if sys.index().size() < 2 {
                Consistency::NotApplicable
            } else if sum_satisfies == (regular && fibers_satisfy) {
                Consistency::Consistent
            } else {
                Consistency::Inconsistent
            };
            Ok(TransferRow {
                identity: id.clone(),
                regular,
                fibers_satisfy,
                sum_satisfies,
                sum_counterexample,
                consistency,
            })
        })
        .collect()
}
