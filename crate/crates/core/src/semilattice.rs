//! Finite join-semilattices given by their join table.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemilatticeError {
    #[error("semilattice must have at least one element")]
    Empty,
    #[error("join table is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("join entry {value} outside [0, {size})")]
    OutOfRange { value: usize, size: usize },
    #[error("expected {expected} element names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("idempotence fails at {0}: {0} v {0} != {0}")]
    Idempotence(usize),
    #[error("commutativity fails at ({0}, {1})")]
    Commutativity(usize, usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
}

/// A validated join-semilattice on `{0, ..., size - 1}` with the order
/// `a <= b` iff `a v b = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semilattice {
    names: Vec<String>,
    join: Vec<usize>,
    bottom: Option<usize>,
}

impl Semilattice {
    /// Validates a join table given as rows, reporting the first failing
    /// element, pair or triple in lexicographic order.
    pub fn new(names: Vec<String>, rows: &[Vec<usize>]) -> Result<Self, SemilatticeError> {
        let n = rows.len();
        if n == 0 {
            return Err(SemilatticeError::Empty);
        }
        if names.len() != n {
            return Err(SemilatticeError::NameCount {
                expected: n,
                found: names.len(),
            });
        }
        let mut join = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(SemilatticeError::NotSquare {
                    row,
                    expected: n,
                    found: entries.len(),
                });
            }
            if let Some(&value) = entries.iter().find(|&&v| v >= n) {
                return Err(SemilatticeError::OutOfRange { value, size: n });
            }
            join.extend_from_slice(entries);
        }
        let j = |a: usize, b: usize| join[a * n + b];
        if let Some(a) = (0..n).find(|&a| j(a, a) != a) {
            return Err(SemilatticeError::Idempotence(a));
        }
        for a in 0..n {
            for b in 0..n {
                if j(a, b) != j(b, a) {
                    return Err(SemilatticeError::Commutativity(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if j(j(a, b), c) != j(a, j(b, c)) {
                        return Err(SemilatticeError::Associativity(a, b, c));
                    }
                }
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|a| j(b, a) == a));
        Ok(Semilattice { names, join, bottom })
    }

    /// Same as [`Semilattice::new`] with names `"0"`, `"1"`, ...
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, SemilatticeError> {
        Semilattice::new((0..rows.len()).map(|k| k.to_string()).collect(), rows)
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
        Semilattice::from_rows(&rows).expect("chains are semilattices")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.size());
        self.names = names;
        self
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    /// Join of a non-empty list of indices.
    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> Option<usize> {
        items.into_iter().reduce(|a, b| self.join(a, b))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.join(a, b) == b
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// The least element, when there is one.
    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    /// The join of everything.
    pub fn top(&self) -> usize {
        self.join_all(0..self.size()).expect("non-empty")
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.join.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    /// Pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.lt(a, b))
            .collect()
    }

    /// `b` covers `a`: `a < b` with nothing strictly between.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && !(0..self.size()).any(|c| self.lt(a, c) && self.lt(c, b))
    }

    /// Indices sorted so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&a| ((0..self.size()).filter(|&b| self.leq(b, a)).count(), a));
        order
    }
}

impl fmt::Display for Semilattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .strict_pairs()
            .into_iter()
            .filter(|&(a, b)| self.covers(a, b))
            .map(|(a, b)| format!("{} < {}", self.name(a), self.name(b)))
            .collect();
        write!(f, "semilattice {{{}}}", self.names.join(", "))?;
        if !pairs.is_empty() {
            write!(f, " with {}", pairs.join(", "))?;
        }
        Ok(())
    }
}

pub fn validate_semilattice(rows: &[Vec<usize>]) -> Result<Semilattice, SemilatticeError> {
    Semilattice::from_rows(rows)
}

/// First pair `(a, b)` with `map(a v b) != map(a) v map(b)`, if any.
pub fn join_violation(s: &Semilattice, t: &Semilattice, map: &[usize]) -> Option<(usize, usize)> {
    if map.len() != s.size() || map.iter().any(|&v| v >= t.size()) {
        return Some((0, 0));
    }
    (0..s.size())
        .flat_map(|a| (0..s.size()).map(move |b| (a, b)))
        .find(|&(a, b)| map[s.join(a, b)] != t.join(map[a], map[b]))
}

/// True iff `map` is total on `s`, lands in `t` and preserves joins.
pub fn is_semilattice_homomorphism(s: &Semilattice, t: &Semilattice, map: &[usize]) -> bool {
    join_violation(s, t, map).is_none()
}

/// Every join-preserving map `s → t`, in lexicographic order.
pub fn semilattice_homomorphisms(s: &Semilattice, t: &Semilattice) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut map = vec![0; s.size()];
    loop {
        if is_semilattice_homomorphism(s, t, &map) {
            out.push(map.clone());
        }
        if !crate::algebra::advance(&mut map, t.size()) {
            return out;
        }
    }
}

/// Every bijective semilattice homomorphism `s → t`, in lexicographic order.
pub fn semilattice_isomorphisms(s: &Semilattice, t: &Semilattice) -> Vec<Vec<usize>> {
    if s.size() != t.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    permutations(s.size(), &mut |perm| {
        if is_semilattice_homomorphism(s, t, perm) {
            out.push(perm.to_vec());
        }
    });
    out
}

/// Calls `f` on every permutation of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], f: &mut dyn FnMut(&[usize])) {
        if prefix.len() == used.len() {
            f(prefix);
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, f);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n], f);
}

/// All join-semilattices on `{0, ..., n-1}` (labelled), in lexicographic
/// order of their tables. Practical for `n <= 4`.
pub fn labelled_semilattices(n: usize) -> Vec<Semilattice> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut choice = vec![0; pairs.len()];
    let mut out = Vec::new();
    loop {
        let mut rows = vec![vec![0; n]; n];
        for (a, row) in rows.iter_mut().enumerate() {
            row[a] = a;
        }
        for (&(a, b), &v) in pairs.iter().zip(&choice) {
            rows[a][b] = v;
            rows[b][a] = v;
        }
        if let Ok(s) = Semilattice::from_rows(&rows) {
            out.push(s);
        }
        if !crate::algebra::advance(&mut choice, n) {
            return out;
        }
    }
}
