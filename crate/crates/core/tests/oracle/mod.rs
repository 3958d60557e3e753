//! Brute-force reference implementations used to check library results.
//! They read tables through `FiniteAlgebra::op` and share no search code
//! with the library.

#![allow(dead_code)]

use plonka::algebra::{ElementMap, FiniteAlgebra};
use plonka::terms::Term;

/// Every tuple in `[0, n)^k`, lexicographically.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn ops(a: &FiniteAlgebra) -> Vec<(String, usize)> {
    a.signature().ops().map(|(s, k)| (s.to_string(), k)).collect()
}

/// `h` commutes with every operation on every tuple.
pub fn is_hom(a: &FiniteAlgebra, b: &FiniteAlgebra, h: &[usize]) -> bool {
    h.len() == a.size()
        && h.iter().all(|&v| v < b.size())
        && ops(a).iter().all(|(s, k)| {
            tuples(a.size(), *k).iter().all(|t| {
                let image: Vec<usize> = t.iter().map(|&x| h[x]).collect();
                h[a.op(s, t)] == b.op(s, &image)
            })
        })
}

/// All homomorphisms, by assigning elements in order and rejecting a
/// partial map as soon as a fully assigned tuple fails.
pub fn homs(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Vec<Vec<usize>> {
    let checks: Vec<(String, Vec<usize>, usize)> = ops(a)
        .iter()
        .flat_map(|(s, k)| tuples(a.size(), *k).into_iter().map(move |t| (s.clone(), t)))
        .map(|(s, t)| {
            let last = t.iter().copied().max().unwrap_or(0).max(a.op(&s, &t));
            (s, t, last)
        })
        .collect();
    let mut out = Vec::new();
    let mut partial = Vec::new();
    extend(a, b, &checks, &mut partial, &mut out);
    out
}

fn extend(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    checks: &[(String, Vec<usize>, usize)],
    partial: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if partial.len() == a.size() {
        out.push(partial.clone());
        return;
    }
    let e = partial.len();
    for v in 0..b.size() {
        partial.push(v);
        let ok = checks.iter().filter(|(_, _, last)| *last == e).all(|(s, t, _)| {
            let image: Vec<usize> = t.iter().map(|&x| partial[x]).collect();
            partial[a.op(s, t)] == b.op(s, &image)
        });
        if ok {
            extend(a, b, checks, partial, out);
        }
        partial.pop();
    }
}

/// Value of a term in variables `x`, `y`.
pub fn eval(a: &FiniteAlgebra, t: &Term, x: usize, y: usize) -> usize {
    match t {
        Term::Var(v) if v == "x" => x,
        Term::Var(v) if v == "y" => y,
        Term::Var(v) => panic!("unexpected variable {v}"),
        Term::App(s, args) => {
            let vals: Vec<usize> = args.iter().map(|u| eval(a, u, x, y)).collect();
            a.op(s, &vals)
        }
    }
}

/// `t(u, v) = u` everywhere.
pub fn is_left_projection(a: &FiniteAlgebra, t: &Term) -> bool {
    (0..a.size()).all(|u| (0..a.size()).all(|v| eval(a, t, u, v) == u))
}

pub fn map_of(m: &ElementMap) -> Vec<usize> {
    (0..m.len()).map(|e| m.apply(e)).collect()
}
