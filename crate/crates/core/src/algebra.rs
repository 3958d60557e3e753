//! Finite algebras given by operation tables.
//!
//! Elements are the indices `0..size`; names are display metadata only.
//! Tables are stored flat in row-major order, so the entry for
//! `g(a_1, ..., a_k)` sits at `a_1 * n^(k-1) + ... + a_k`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::terms::{enumerate_terms, for_each_tuple, Identity, Signature, Term};

/// Default bound on the source size accepted by [`enumerate_homomorphisms`].
pub const DEFAULT_HOM_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra must have at least one element")]
    EmptyUniverse,
    #[error("expected {expected} element names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("no table for operation {0:?}")]
    MissingTable(String),
    #[error("table given for undeclared operation {0:?}")]
    UnknownTable(String),
    #[error("table for {op:?} has {found} entries, expected {expected}")]
    TableShape {
        op: String,
        expected: usize,
        found: usize,
    },
    #[error("table for {op:?} has entry {value} outside [0, {size})")]
    TableValue { op: String, value: usize, size: usize },
    #[error("signature mismatch")]
    SignatureMismatch,
    #[error("term uses {0:?}, which is not an operation of this algebra")]
    UnknownSymbol(String),
    #[error("operation {symbol:?} applied to {found} arguments, expects {expected}")]
    Arity {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("variable {0:?} is unassigned")]
    Unassigned(String),
    #[error("element {value} assigned to {var:?} is outside [0, {size})")]
    BadAssignment { var: String, value: usize, size: usize },
    #[error("source algebra has {size} elements, above the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
}

/// An algebra on `{0, ..., size - 1}` with one table per operation symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    sig: Signature,
    names: Vec<String>,
    /// one flat table per symbol, in signature (name) order
    tables: Vec<Vec<usize>>,
    arities: Vec<usize>,
}

impl FiniteAlgebra {
    /// Builds an algebra from flat row-major tables keyed by symbol.
    pub fn new(
        sig: Signature,
        names: Vec<String>,
        mut tables: BTreeMap<String, Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::EmptyUniverse);
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name) {
                return Err(AlgebraError::DuplicateName(name.clone()));
            }
        }
        let mut flat = Vec::with_capacity(sig.len());
        let mut arities = Vec::with_capacity(sig.len());
        for (op, arity) in sig.ops() {
            let table = tables
                .remove(op)
                .ok_or_else(|| AlgebraError::MissingTable(op.to_string()))?;
            let expected = n.pow(arity as u32);
            if table.len() != expected {
                return Err(AlgebraError::TableShape {
                    op: op.to_string(),
                    expected,
                    found: table.len(),
                });
            }
            if let Some(&value) = table.iter().find(|&&v| v >= n) {
                return Err(AlgebraError::TableValue {
                    op: op.to_string(),
                    value,
                    size: n,
                });
            }
            flat.push(table);
            arities.push(arity);
        }
        if let Some(extra) = tables.into_keys().next() {
            return Err(AlgebraError::UnknownTable(extra));
        }
        Ok(FiniteAlgebra {
            sig,
            names,
            tables: flat,
            arities,
        })
    }

    /// Builds an algebra by evaluating `f(symbol, args)` on every tuple.
    pub fn from_fn(
        sig: Signature,
        names: Vec<String>,
        mut f: impl FnMut(&str, &[usize]) -> usize,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        let mut tables = BTreeMap::new();
        for (op, arity) in sig.ops() {
            let mut table = Vec::with_capacity(n.pow(arity as u32));
            for_each_tuple(n, arity, |args| table.push(f(op, args)));
            tables.insert(op.to_string(), table);
        }
        FiniteAlgebra::new(sig, names, tables)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: usize) -> &str {
        &self.names[e]
    }

    /// Index of the element called `name`.
    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn op_count(&self) -> usize {
        self.tables.len()
    }

    pub fn arity_of(&self, op: usize) -> usize {
        self.arities[op]
    }

    pub fn op_name(&self, op: usize) -> &str {
        self.sig.ops().nth(op).map(|(s, _)| s).expect("operation index")
    }

    pub fn op_index(&self, symbol: &str) -> Option<usize> {
        self.sig.position(symbol)
    }

    pub fn table(&self, op: usize) -> &[usize] {
        &self.tables[op]
    }

    /// Applies operation number `op` to `args`.
    #[inline]
    pub fn apply(&self, op: usize, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arities[op]);
        let n = self.size();
        let idx = args.iter().fold(0, |acc, &a| acc * n + a);
        self.tables[op][idx]
    }

    /// Applies the operation named `symbol`; panics on an unknown symbol.
    pub fn op(&self, symbol: &str, args: &[usize]) -> usize {
        let op = self
            .op_index(symbol)
            .unwrap_or_else(|| panic!("no operation {symbol}"));
        self.apply(op, args)
    }

    /// Value of the nullary symbol `symbol`, if declared.
    pub fn constant(&self, symbol: &str) -> Option<usize> {
        let op = self.op_index(symbol)?;
        (self.arities[op] == 0).then(|| self.tables[op][0])
    }

    /// Same algebra with elements renamed.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, AlgebraError> {
        if names.len() != self.size() {
            return Err(AlgebraError::NameCount {
                expected: self.size(),
                found: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    /// Transports the algebra along the bijection `perm`: element `e` of
    /// `self` becomes element `perm[e]` of the result.
    pub fn relabel(&self, perm: &[usize]) -> FiniteAlgebra {
        let n = self.size();
        let mut inverse = vec![0; n];
        for (e, &p) in perm.iter().enumerate() {
            inverse[p] = e;
        }
        let mut names = vec![String::new(); n];
        for (e, &p) in perm.iter().enumerate() {
            names[p] = self.names[e].clone();
        }
        FiniteAlgebra::from_fn(self.sig.clone(), names, |op, args| {
            let pre: Vec<usize> = args.iter().map(|&a| inverse[a]).collect();
            perm[self.op(op, &pre)]
        })
        .expect("relabelling keeps tables well-formed")
    }

    /// Restriction to `elements`, which must be closed under every operation
    /// of positive arity. `constant(symbol)` gives the position in `elements`
    /// interpreting each nullary symbol.
    pub fn restrict(
        &self,
        elements: &[usize],
        names: Vec<String>,
        mut constant: impl FnMut(&str) -> usize,
    ) -> Option<FiniteAlgebra> {
        let mut local = vec![usize::MAX; self.size()];
        for (k, &e) in elements.iter().enumerate() {
            local[e] = k;
        }
        let mut closed = true;
        let sub = FiniteAlgebra::from_fn(self.sig.clone(), names, |op, args| {
            if args.is_empty() {
                return constant(op);
            }
            let global: Vec<usize> = args.iter().map(|&a| elements[a]).collect();
            let r = local[self.op(op, &global)];
            if r == usize::MAX {
                closed = false;
                0
            } else {
                r
            }
        })
        .ok()?;
        closed.then_some(sub)
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra of size {}: {}", self.size(), self.names.join(" "))?;
        for op in 0..self.op_count() {
            let name = self.op_name(op);
            match self.arities[op] {
                0 => writeln!(f, "  {name} = {}", self.names[self.tables[op][0]])?,
                1 => {
                    let row: Vec<&str> = self.tables[op].iter().map(|&v| self.name(v)).collect();
                    writeln!(f, "  {name}: {}", row.join(" "))?;
                }
                2 => {
                    writeln!(f, "  {name}:")?;
                    for row in self.tables[op].chunks(self.size()) {
                        let row: Vec<&str> = row.iter().map(|&v| self.name(v)).collect();
                        writeln!(f, "    {}", row.join(" "))?;
                    }
                }
                k => writeln!(f, "  {name}: {k}-ary table")?,
            }
        }
        Ok(())
    }
}

/// A total map between element indices. Which algebras (or sets) it runs
/// between is supplied by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementMap {
    pub map: Vec<usize>,
}

impl ElementMap {
    pub fn new(map: Vec<usize>) -> Self {
        ElementMap { map }
    }

    pub fn identity(n: usize) -> Self {
        ElementMap {
            map: (0..n).collect(),
        }
    }

    pub fn apply(&self, e: usize) -> usize {
        self.map[e]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &ElementMap) -> ElementMap {
        ElementMap::new(self.map.iter().map(|&e| other.map[e]).collect())
    }

    pub fn is_bijective_onto(&self, target_size: usize) -> bool {
        if self.map.len() != target_size {
            return false;
        }
        let mut seen = vec![false; target_size];
        self.map
            .iter()
            .all(|&v| v < target_size && !std::mem::replace(&mut seen[v], true))
    }

    pub fn inverse(&self) -> Option<ElementMap> {
        let n = self.map.len();
        if !self.is_bijective_onto(n) {
            return None;
        }
        let mut inv = vec![0; n];
        for (e, &v) in self.map.iter().enumerate() {
            inv[v] = e;
        }
        Some(ElementMap::new(inv))
    }

    pub fn maps_into(&self, target_size: usize) -> bool {
        self.map.iter().all(|&v| v < target_size)
    }
}

impl fmt::Display for ElementMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.map)
    }
}

/// A term resolved against a signature, evaluated on a stack.
#[derive(Debug, Clone)]
pub(crate) struct CompiledTerm {
    code: Vec<Instr>,
}

#[derive(Debug, Clone, Copy)]
enum Instr {
    Var(usize),
    Op(usize, usize),
}

impl CompiledTerm {
    pub(crate) fn new(t: &Term, a: &FiniteAlgebra, vars: &[String]) -> Result<Self, AlgebraError> {
        let mut code = Vec::new();
        compile_into(t, a, vars, &mut code)?;
        Ok(CompiledTerm { code })
    }

    pub(crate) fn eval(&self, a: &FiniteAlgebra, values: &[usize], stack: &mut Vec<usize>) -> usize {
        stack.clear();
        for &ins in &self.code {
            match ins {
                Instr::Var(k) => stack.push(values[k]),
                Instr::Op(op, arity) => {
                    let at = stack.len() - arity;
                    let r = a.apply(op, &stack[at..]);
                    stack.truncate(at);
                    stack.push(r);
                }
            }
        }
        stack[0]
    }
}

fn compile_into(
    t: &Term,
    a: &FiniteAlgebra,
    vars: &[String],
    code: &mut Vec<Instr>,
) -> Result<(), AlgebraError> {
    match t {
        Term::Var(v) => {
            let k = vars
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| AlgebraError::Unassigned(v.clone()))?;
            code.push(Instr::Var(k));
        }
        Term::App(s, args) => {
            let op = a
                .op_index(s)
                .ok_or_else(|| AlgebraError::UnknownSymbol(s.clone()))?;
            if a.arity_of(op) != args.len() {
                return Err(AlgebraError::Arity {
                    symbol: s.clone(),
                    expected: a.arity_of(op),
                    found: args.len(),
                });
            }
            for arg in args {
                compile_into(arg, a, vars, code)?;
            }
            code.push(Instr::Op(op, args.len()));
        }
    }
    Ok(())
}

/// Builds a variable assignment from `(name, element)` pairs.
pub fn assignment(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Value of `t` in `a` under `asg`.
pub fn evaluate(a: &FiniteAlgebra, t: &Term, asg: &BTreeMap<String, usize>) -> Result<usize, AlgebraError> {
    let vars: Vec<String> = asg.keys().cloned().collect();
    let values: Vec<usize> = asg.values().copied().collect();
    for (var, &value) in asg {
        if value >= a.size() {
            return Err(AlgebraError::BadAssignment {
                var: var.clone(),
                value,
                size: a.size(),
            });
        }
    }
    let compiled = CompiledTerm::new(t, a, &vars)?;
    Ok(compiled.eval(a, &values, &mut Vec::new()))
}

/// An assignment under which the two sides of an identity differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// variables in name order with their values
    pub assignment: Vec<(String, usize)>,
    pub lhs: usize,
    pub rhs: usize,
}

impl Counterexample {
    pub fn describe(&self, a: &FiniteAlgebra) -> String {
        let asg: Vec<String> = self
            .assignment
            .iter()
            .map(|(v, e)| format!("{v}={}", a.name(*e)))
            .collect();
        format!(
            "{}: lhs = {}, rhs = {}",
            asg.join(", "),
            a.name(self.lhs),
            a.name(self.rhs)
        )
    }
}

/// Checks `id` on all assignments. Returns `Ok(None)` when it holds and the
/// lexicographically first counterexample otherwise (variables in name order,
/// first variable most significant).
pub fn satisfies(a: &FiniteAlgebra, id: &Identity) -> Result<Option<Counterexample>, AlgebraError> {
    let mut found = None;
    scan_counterexamples(a, id, |c| {
        found = Some(c);
        false
    })?;
    Ok(found)
}

/// Every counterexample to `id`, in the order used by [`satisfies`].
pub fn counterexamples(a: &FiniteAlgebra, id: &Identity) -> Result<Vec<Counterexample>, AlgebraError> {
    let mut all = Vec::new();
    scan_counterexamples(a, id, |c| {
        all.push(c);
        true
    })?;
    Ok(all)
}

fn scan_counterexamples(
    a: &FiniteAlgebra,
    id: &Identity,
    mut visit: impl FnMut(Counterexample) -> bool,
) -> Result<(), AlgebraError> {
    let vars = id.variables();
    let lhs = CompiledTerm::new(&id.lhs, a, &vars)?;
    let rhs = CompiledTerm::new(&id.rhs, a, &vars)?;
    let mut stack = Vec::new();
    let mut values = vec![0usize; vars.len()];
    loop {
        let l = lhs.eval(a, &values, &mut stack);
        let r = rhs.eval(a, &values, &mut stack);
        if l != r {
            let c = Counterexample {
                assignment: vars.iter().cloned().zip(values.iter().copied()).collect(),
                lhs: l,
                rhs: r,
            };
            if !visit(c) {
                return Ok(());
            }
        }
        if !advance(&mut values, a.size()) {
            return Ok(());
        }
    }
}

/// Lexicographic successor in `[0, n)^k`; false once exhausted.
pub(crate) fn advance(idx: &mut [usize], n: usize) -> bool {
    for pos in (0..idx.len()).rev() {
        idx[pos] += 1;
        if idx[pos] < n {
            return true;
        }
        idx[pos] = 0;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("source and target have different signatures")]
    SignatureMismatch,
    #[error("map has {found} entries for a source of size {expected}")]
    Domain { expected: usize, found: usize },
    #[error("map sends {element} to {value}, outside the target of size {size}")]
    Range {
        element: usize,
        value: usize,
        size: usize,
    },
    #[error("{op} not preserved at {args:?}: h({op}(args)) = {image} but {op}(h(args)) = {expected}")]
    NotPreserved {
        op: String,
        args: Vec<usize>,
        image: usize,
        expected: usize,
    },
}

/// Checks that `map` commutes with every operation, constants included.
pub fn check_homomorphism(
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
    map: &ElementMap,
) -> Result<(), HomError> {
    if src.signature() != dst.signature() {
        return Err(HomError::SignatureMismatch);
    }
    check_shape(map, src.size(), dst.size())?;
    let mut image_args = Vec::new();
    for op in 0..src.op_count() {
        let k = src.arity_of(op);
        let mut args = vec![0usize; k];
        loop {
            image_args.clear();
            image_args.extend(args.iter().map(|&x| map.map[x]));
            let image = map.map[src.apply(op, &args)];
            let expected = dst.apply(op, &image_args);
            if image != expected {
                return Err(HomError::NotPreserved {
                    op: src.op_name(op).to_string(),
                    args,
                    image,
                    expected,
                });
            }
            if !advance(&mut args, src.size()) {
                break;
            }
        }
    }
    Ok(())
}

pub(crate) fn check_shape(map: &ElementMap, src: usize, dst: usize) -> Result<(), HomError> {
    if map.len() != src {
        return Err(HomError::Domain {
            expected: src,
            found: map.len(),
        });
    }
    if let Some((element, &value)) = map.map.iter().enumerate().find(|(_, &v)| v >= dst) {
        return Err(HomError::Range {
            element,
            value,
            size: dst,
        });
    }
    Ok(())
}

pub fn is_homomorphism(src: &FiniteAlgebra, dst: &FiniteAlgebra, map: &ElementMap) -> bool {
    check_homomorphism(src, dst, map).is_ok()
}

/// Backtracking search for homomorphisms with closure propagation: once the
/// arguments of some operation are mapped, the image of the result is forced.
struct HomSearch<'a> {
    src: &'a FiniteAlgebra,
    dst: &'a FiniteAlgebra,
    injective: bool,
    allowed: Option<Vec<Vec<bool>>>,
}

impl HomSearch<'_> {
    /// Extends `map` with every forced value; false on a contradiction.
    fn propagate(&self, map: &mut [Option<usize>], used: &mut [bool]) -> bool {
        let n = self.src.size();
        let mut args = Vec::new();
        let mut image = Vec::new();
        loop {
            let mut changed = false;
            for op in 0..self.src.op_count() {
                let k = self.src.arity_of(op);
                args.clear();
                args.resize(k, 0);
                loop {
                    image.clear();
                    image.extend(args.iter().filter_map(|&x| map[x]));
                    if image.len() == k {
                        let r = self.src.apply(op, &args);
                        let v = self.dst.apply(op, &image);
                        match map[r] {
                            Some(w) if w != v => return false,
                            Some(_) => {}
                            None => {
                                if !self.admissible(r, v, used) {
                                    return false;
                                }
                                map[r] = Some(v);
                                used[v] = true;
                                changed = true;
                            }
                        }
                    }
                    if !advance(&mut args, n) {
                        break;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn admissible(&self, e: usize, v: usize, used: &[bool]) -> bool {
        if self.injective && used[v] {
            return false;
        }
        self.allowed.as_ref().is_none_or(|allowed| allowed[e][v])
    }

    /// Depth-first search, smallest unassigned element first, values in
    /// increasing order; `visit` returns false to stop.
    fn run(&self, mut visit: impl FnMut(ElementMap) -> bool) {
        let map = vec![None; self.src.size()];
        let used = vec![false; self.dst.size()];
        self.dfs(map, used, &mut visit);
    }

    fn dfs(
        &self,
        mut map: Vec<Option<usize>>,
        mut used: Vec<bool>,
        visit: &mut dyn FnMut(ElementMap) -> bool,
    ) -> bool {
        if !self.propagate(&mut map, &mut used) {
            return true;
        }
        let Some(e) = map.iter().position(Option::is_none) else {
            return visit(ElementMap::new(map.into_iter().map(Option::unwrap).collect()));
        };
        for v in 0..self.dst.size() {
            if !self.admissible(e, v, &used) {
                continue;
            }
            let mut next = map.clone();
            let mut next_used = used.clone();
            next[e] = Some(v);
            next_used[v] = true;
            if !self.dfs(next, next_used, visit) {
                return false;
            }
        }
        true
    }
}

/// All homomorphisms `a → b` in lexicographic order of their value vectors,
/// with the default source-size bound.
pub fn enumerate_homomorphisms(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
) -> Result<Vec<ElementMap>, AlgebraError> {
    enumerate_homomorphisms_bounded(a, b, DEFAULT_HOM_BOUND)
}

pub fn enumerate_homomorphisms_bounded(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    bound: usize,
) -> Result<Vec<ElementMap>, AlgebraError> {
    if a.signature() != b.signature() {
        return Err(AlgebraError::SignatureMismatch);
    }
    if a.size() > bound {
        return Err(AlgebraError::BoundExceeded {
            size: a.size(),
            bound,
        });
    }
    let mut out = Vec::new();
    HomSearch {
        src: a,
        dst: b,
        injective: false,
        allowed: None,
    }
    .run(|m| {
        out.push(m);
        true
    });
    Ok(out)
}

/// Isomorphism-invariant data about one element, used to prune the search.
fn profile(a: &FiniteAlgebra, e: usize) -> Vec<usize> {
    let n = a.size();
    let mut p = Vec::new();
    for op in 0..a.op_count() {
        match a.arity_of(op) {
            0 => p.push((a.apply(op, &[]) == e) as usize),
            1 => {
                let once = a.apply(op, &[e]);
                p.push((once == e) as usize);
                p.push((a.apply(op, &[once]) == e) as usize);
            }
            2 => {
                p.push((a.apply(op, &[e, e]) == e) as usize);
                p.push((0..n).filter(|&x| a.apply(op, &[e, x]) == e).count());
                p.push((0..n).filter(|&x| a.apply(op, &[x, e]) == e).count());
                p.push((0..n).filter(|&x| a.apply(op, &[e, x]) == x).count());
            }
            k => p.push((a.apply(op, &vec![e; k]) == e) as usize),
        }
    }
    p
}

fn iso_search<'a>(a: &'a FiniteAlgebra, b: &'a FiniteAlgebra) -> Option<HomSearch<'a>> {
    if a.signature() != b.signature() || a.size() != b.size() {
        return None;
    }
    let pa: Vec<_> = (0..a.size()).map(|e| profile(a, e)).collect();
    let pb: Vec<_> = (0..b.size()).map(|e| profile(b, e)).collect();
    let allowed = pa.iter().map(|p| pb.iter().map(|q| p == q).collect()).collect();
    Some(HomSearch {
        src: a,
        dst: b,
        injective: true,
        allowed: Some(allowed),
    })
}

/// The first isomorphism `a → b` in lexicographic order, if any. The inverse
/// is re-checked to be a homomorphism.
pub fn find_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<ElementMap> {
    let mut found = None;
    iso_search(a, b)?.run(|m| {
        found = Some(m);
        false
    });
    let iso = found?;
    let inverse = iso.inverse()?;
    (is_homomorphism(a, b, &iso) && is_homomorphism(b, a, &inverse)).then_some(iso)
}

/// Every isomorphism `a → b`, in lexicographic order.
pub fn enumerate_isomorphisms(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Vec<ElementMap> {
    let mut out = Vec::new();
    if let Some(search) = iso_search(a, b) {
        search.run(|m| {
            out.push(m);
            true
        });
    }
    out
}

/// Searches for a binary term `t(x, y)`, with both variables occurring, such
/// that `t(u, v) = u` for all elements `u`, `v`. Terms are tried in canonical
/// enumeration order up to `max_depth`.
pub fn find_irregularity_witness(a: &FiniteAlgebra, max_depth: usize) -> Option<Term> {
    let vars = ["x".to_string(), "y".to_string()];
    let n = a.size();
    let mut stack = Vec::new();
    enumerate_terms(a.signature(), &["x", "y"], max_depth)
        .into_iter()
        .filter(|t| t.contains_var("x") && t.contains_var("y"))
        .find(|t| {
            let Ok(code) = CompiledTerm::new(t, a, &vars) else {
                return false;
            };
            (0..n).all(|u| (0..n).all(|v| code.eval(a, &[u, v], &mut stack) == u))
        })
}
