//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod oracle;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plonka::algebra::{
    enumerate_homomorphisms, find_irregularity_witness, satisfies, ElementMap, FiniteAlgebra,
};
use plonka::fixtures::{absorption_term, b2, b4, ex22, join_semilattice_2, p22, twelve_laws, IRREGULAR_LAWS};
use plonka::io::{parse_document, Document};
use plonka::plonka::{
    decompose, identity_transfer_report, plonka_sum, verify_partition_function, Consistency, DirectSystem,
};
use plonka::random::{corpus_system, gen_random_system, random_composable_chain, random_direct_morphism};
use plonka::semilattice::is_semilattice_homomorphism;
use plonka::stone::{
    duality_roundtrip_check, dualize_direct_morphism, dualize_direct_system, ComposablePair,
};
use plonka::systems::{
    check_fibre_preservation, fibre_map_of_hom, find_direct_system_isomorphism, roundtrip_equivalence_check,
    sum_of_morphism, validate_inverse_morphism,
};
use plonka::terms::{enumerate_terms, parse_identity, parse_term, Signature};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn name_of(a: &FiniteAlgebra, e: usize) -> &str {
    a.name(e)
}

fn criterion_1() -> Check {
    let p = plonka_sum(&ex22());
    let a = p.carrier();
    let e = |s: &str| a.element(s).ok_or(format!("no element {s}"));
    let meet1 = a.op("and", &[e("a")?, e("a'")?]);
    let meet2 = a.op("and", &[e("a'")?, e("b")?]);
    ensure(name_of(a, meet1) == "0_i", || {
        format!("a ∧ a' = {}", name_of(a, meet1))
    })?;
    ensure(name_of(a, meet2) == "0_j", || {
        format!("a' ∧ b = {}", name_of(a, meet2))
    })?;
    Ok("a ∧ a' = 0_i, a' ∧ b = 0_j".into())
}

/// The five partition-function axioms, checked directly on the term.
fn oracle_partition(a: &FiniteAlgebra) -> Result<usize, String> {
    let t = absorption_term();
    let n = a.size();
    let dot = |x: usize, y: usize| oracle::eval(a, &t, x, y);
    let mut checked = 0;
    for x in 0..n {
        ensure(dot(x, x) == x, || format!("axiom 1 at {x}"))?;
        checked += 1;
    }
    for t3 in oracle::tuples(n, 3) {
        let (x, y, z) = (t3[0], t3[1], t3[2]);
        ensure(dot(x, dot(y, z)) == dot(dot(x, y), z), || {
            format!("axiom 2 at {t3:?}")
        })?;
        ensure(dot(x, dot(y, z)) == dot(x, dot(z, y)), || {
            format!("axiom 3 at {t3:?}")
        })?;
        checked += 2;
    }
    for (g, k) in a.signature().ops().filter(|&(_, k)| k >= 1) {
        for args in oracle::tuples(n, k) {
            for b in 0..n {
                let pushed: Vec<usize> = args.iter().map(|&x| dot(x, b)).collect();
                ensure(dot(a.op(g, &args), b) == a.op(g, &pushed), || {
                    format!("axiom 4 at {g}{args:?}, {b}")
                })?;
                let folded = args.iter().fold(b, |acc, &x| dot(acc, x));
                ensure(dot(b, a.op(g, &args)) == folded, || {
                    format!("axiom 5 at {g}{args:?}, {b}")
                })?;
                checked += 2;
            }
        }
    }
    Ok(checked)
}

fn criterion_2() -> Check {
    let a = p22();
    verify_partition_function(&a, &absorption_term()).map_err(|v| v.to_string())?;
    let checked = oracle_partition(&a)?;
    Ok(format!("library and oracle agree, {checked} instances"))
}

fn criterion_3() -> Check {
    let a = p22();
    let d = decompose(&a, &absorption_term()).map_err(|e| e.to_string())?;
    let sys = &d.system;
    ensure(
        sys.index().size() == 2 && sys.index().strict_pairs().len() == 1,
        || "index is not a 2-chain".into(),
    )?;
    ensure(sys.fibers().iter().all(|f| f.size() == 4), || {
        "fibers are not 4-element".into()
    })?;
    ensure(
        sys.fibers()
            .iter()
            .all(|f| oracle::homs(&b4(), f).iter().any(|h| is_permutation(h))),
        || "a fiber is not a four-element Boolean algebra".into(),
    )?;
    let (lo, hi) = sys.index().strict_pairs()[0];
    let view = d.view(&a);
    let tag_a = view.tag(a.element("a").unwrap());
    ensure(tag_a.fiber == lo, || "a is not in the lower fiber".into())?;
    let image = sys.transition(lo, hi).apply(tag_a.element);
    let image_name = a.name(
        view.element(plonka::plonka::SumElement {
            fiber: hi,
            element: image,
        })
        .unwrap(),
    );
    ensure(image_name == "1_j", || format!("a ↦ {image_name}"))?;
    find_direct_system_isomorphism(sys, &ex22()).ok_or("no system isomorphism to EX22")?;
    Ok("2-chain, B4 fibers, a ↦ 1_j, isomorphic to EX22".into())
}

fn criterion_4() -> Check {
    let sys = ex22();
    let sum = plonka_sum(&sys);
    let ids = twelve_laws();
    let rows = identity_transfer_report(&sys, &ids).map_err(|e| e.to_string())?;
    ensure(rows.len() == 12, || format!("{} rows", rows.len()))?;
    for r in &rows {
        ensure(r.consistency == Consistency::Consistent, || {
            format!("{} inconsistent", r.identity)
        })?;
        let regular = r.identity.lhs.variables() == r.identity.rhs.variables();
        let holds = oracle::tuples(sum.size(), 3).iter().all(|t| {
            let asg = |v: &str| t[["x", "y", "z"].iter().position(|&w| w == v).unwrap()];
            eval3(sum.carrier(), &r.identity.lhs, &asg) == eval3(sum.carrier(), &r.identity.rhs, &asg)
        });
        ensure(holds == regular, || {
            format!("{}: regular {regular} but holds {holds}", r.identity)
        })?;
        ensure(r.sum_satisfies == holds, || {
            format!("{}: report disagrees with oracle", r.identity)
        })?;
    }
    for law in IRREGULAR_LAWS {
        let id = parse_identity(law, &Signature::boolean()).map_err(|e| e.to_string())?;
        ensure(!id.is_regular(), || format!("{law} is regular"))?;
        let fails = satisfies(sum.carrier(), &id)
            .map_err(|e| e.to_string())?
            .is_some();
        ensure(fails, || format!("{law} holds in P22"))?;
    }
    let irregular = rows.iter().filter(|r| !r.regular).count();
    Ok(format!(
        "12/12 consistent ({irregular} irregular in list); all 4 irregular laws fail in P22"
    ))
}

fn eval3(a: &FiniteAlgebra, t: &plonka::terms::Term, asg: &dyn Fn(&str) -> usize) -> usize {
    match t {
        plonka::terms::Term::Var(v) => asg(v),
        plonka::terms::Term::App(s, args) => {
            let vals: Vec<usize> = args.iter().map(|u| eval3(a, u, asg)).collect();
            a.op(s, &vals)
        }
    }
}

/// Shapes whose sums have at most 12 elements.
const SMALL_SHAPES: [(usize, usize); 7] = [(1, 2), (1, 4), (1, 8), (2, 2), (2, 4), (3, 2), (3, 4)];

fn fibre_suite(s: &DirectSystem, t: &DirectSystem) -> Result<usize, String> {
    let (ps, pt) = (plonka_sum(s), plonka_sum(t));
    let homs = enumerate_homomorphisms(ps.carrier(), pt.carrier()).map_err(|e| e.to_string())?;
    let naive = oracle::homs(ps.carrier(), pt.carrier());
    let listed: Vec<Vec<usize>> = homs.iter().map(oracle::map_of).collect();
    ensure(listed == naive, || {
        format!("{} homs listed, oracle finds {}", listed.len(), naive.len())
    })?;
    for h in &homs {
        ensure(check_fibre_preservation(h, &ps, &pt), || {
            format!("{h} splits a fiber")
        })?;
        let phi = fibre_map_of_hom(h, &ps, &pt).map_err(|e| e.to_string())?;
        ensure(is_semilattice_homomorphism(ps.index(), pt.index(), &phi), || {
            format!("phi {phi:?}")
        })?;
    }
    Ok(homs.len())
}

fn criterion_5() -> Check {
    let mut total = fibre_suite(&ex22(), &ex22())?;
    let p22_count = total;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..20u64 {
        let (c1, s1) = SMALL_SHAPES[rng.gen_range(0..SMALL_SHAPES.len())];
        let (c2, s2) = SMALL_SHAPES[rng.gen_range(0..SMALL_SHAPES.len())];
        let s = gen_random_system(1000 + 2 * k, c1, s1).unwrap();
        let t = gen_random_system(1001 + 2 * k, c2, s2).unwrap();
        total += fibre_suite(&s, &t).map_err(|e| format!("pair {k}: {e}"))?;
    }
    Ok(format!(
        "{p22_count} homs P22 → P22, {total} homs in all, every one fibre-preserving"
    ))
}

fn criterion_6() -> Check {
    let t = absorption_term();
    roundtrip_equivalence_check(&ex22(), &t).map_err(|e| format!("EX22: {e}"))?;
    for seed in 0..50 {
        let sys = corpus_system(seed);
        let report = roundtrip_equivalence_check(&sys, &t).map_err(|e| format!("seed {seed}: {e}"))?;
        let sum = plonka_sum(&sys);
        let iso = oracle::map_of(&report.algebra_iso);
        ensure(
            oracle::is_hom(sum.carrier(), sum.carrier(), &iso) && is_permutation(&iso),
            || format!("seed {seed}: algebra isomorphism does not check"),
        )?;
    }
    Ok("EX22 and 50/50 random systems".into())
}

fn is_permutation(m: &[usize]) -> bool {
    let mut seen = vec![false; m.len()];
    m.iter()
        .all(|&v| v < m.len() && !std::mem::replace(&mut seen[v], true))
}

/// Atoms of a Boolean algebra from its `and` table and `zero`.
fn oracle_atoms(a: &FiniteAlgebra) -> Vec<usize> {
    let zero = a.op("zero", &[]);
    let below = |x: usize, y: usize| a.op("and", &[x, y]) == x;
    (0..a.size())
        .filter(|&u| u != zero && (0..a.size()).all(|v| v == zero || v == u || !below(v, u)))
        .collect()
}

/// `g` is the dual of `h`: atom `beta` of the target lies below the image of
/// atom `g(beta)` of the source.
fn is_dual(src: &FiniteAlgebra, dst: &FiniteAlgebra, h: &ElementMap, g: &ElementMap) -> bool {
    let (sa, da) = (oracle_atoms(src), oracle_atoms(dst));
    da.iter()
        .enumerate()
        .all(|(k, &beta)| dst.op("and", &[beta, h.apply(sa[g.apply(k)])]) == beta)
}

fn criterion_7() -> Check {
    for seed in 0..50 {
        let sys = corpus_system(seed);
        duality_roundtrip_check(&sys, &[]).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    for seed in 0..20 {
        let chain = random_composable_chain(seed);
        let [a, b, c] = &chain.systems;
        let pair = ComposablePair {
            a,
            b,
            c,
            first: &chain.first,
            second: &chain.second,
        };
        duality_roundtrip_check(a, &[pair]).map_err(|e| format!("pair {seed}: {e}"))?;
        for (src, dst, m) in [(a, b, &chain.first), (b, c, &chain.second)] {
            let dual = dualize_direct_morphism(src, dst, m).map_err(|e| e.to_string())?;
            let (ds, dd) = (
                dualize_direct_system(dst).unwrap(),
                dualize_direct_system(src).unwrap(),
            );
            validate_inverse_morphism(&ds, &dd, &dual).map_err(|e| format!("pair {seed}: {e}"))?;
            for (i, f) in m.components.iter().enumerate() {
                ensure(
                    is_dual(src.fiber(i), dst.fiber(m.phi[i]), f, &dual.components[i]),
                    || format!("pair {seed}: component {i} is not the atom dual"),
                )?;
            }
        }
        // dual(second ∘ first) at k is dual(first)_k after dual(second)_{phi1(k)}
        let whole = dualize_direct_morphism(a, c, &chain.first.then(&chain.second)).unwrap();
        let d1 = dualize_direct_morphism(a, b, &chain.first).unwrap();
        let d2 = dualize_direct_morphism(b, c, &chain.second).unwrap();
        for k in 0..a.index().size() {
            let expect: Vec<usize> = (0..whole.components[k].len())
                .map(|x| d1.components[k].apply(d2.components[chain.first.phi[k]].apply(x)))
                .collect();
            ensure(oracle::map_of(&whole.components[k]) == expect, || {
                format!("pair {seed}: index {k}")
            })?;
        }
    }
    Ok("50/50 systems, 20/20 composable pairs".into())
}

fn criterion_8() -> Check {
    for (name, a) in [("B2", b2()), ("B4", b4())] {
        let t = find_irregularity_witness(&a, 2).ok_or(format!("no witness for {name}"))?;
        ensure(t.contains_var("y") && oracle::is_left_projection(&a, &t), || {
            format!("{name}: {t} fails")
        })?;
    }
    let j = join_semilattice_2();
    ensure(find_irregularity_witness(&j, 3).is_none(), || {
        "witness found for the join-semilattice".into()
    })?;
    let candidates: Vec<_> = enumerate_terms(j.signature(), &["x", "y"], 3)
        .into_iter()
        .filter(|t| t.contains_var("x") && t.contains_var("y"))
        .collect();
    ensure(
        candidates.iter().all(|t| !oracle::is_left_projection(&j, t)),
        || "oracle finds a witness".into(),
    )?;
    Ok(format!(
        "B2, B4 witnessed; none among {} join terms",
        candidates.len()
    ))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for k in 0..30u64 {
        let (s, t) = (corpus_system(200 + k), corpus_system(300 + k));
        let m = random_direct_morphism(&mut rng, &s, &t, true).ok_or(format!("morphism {k}: none found"))?;
        let h = sum_of_morphism(&s, &t, &m).map_err(|e| format!("morphism {k}: {e}"))?;
        let (ps, pt) = (plonka_sum(&s), plonka_sum(&t));
        ensure(
            oracle::is_hom(ps.carrier(), pt.carrier(), &oracle::map_of(&h)),
            || format!("morphism {k}: sum map is not a homomorphism"),
        )?;
    }
    Ok("30/30 sum maps are homomorphisms".into())
}

fn criterion_10() -> Check {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut files = 0;
    for entry in std::fs::read_dir(&dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let once = parse_document(&text)
            .map_err(|e| format!("{}: {e}", path.display()))?
            .to_json();
        let twice = parse_document(&once).unwrap().to_json();
        ensure(once == text && twice == once, || {
            format!("{} not byte-stable", path.display())
        })?;
        files += 1;
    }
    for seed in 0..20 {
        let (count, size) = (1 + seed as usize % 3, [2, 4, 8][seed as usize % 3]);
        let text = Document::System(gen_random_system(seed, count, size).unwrap()).to_json();
        let again = parse_document(&text).map_err(|e| e.to_string())?.to_json();
        ensure(again == text, || {
            format!("generated system {seed} not byte-stable")
        })?;
    }
    let sig = Signature::boolean();
    let terms = enumerate_terms(&sig, &["x", "y"], 2);
    for t in &terms {
        let back = parse_term(&t.to_string(), &sig).map_err(|e| format!("{t}: {e}"))?;
        ensure(&back == t, || format!("{t} reparsed as {back}"))?;
    }
    Ok(format!(
        "{files} fixtures, 20 generated systems, {} terms",
        terms.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("sum arithmetic on EX22", criterion_1, Duration::from_secs(1)),
        (
            "partition-function axioms on P22",
            criterion_2,
            Duration::from_secs(1),
        ),
        ("decomposition of P22", criterion_3, Duration::from_secs(1)),
        ("identity transfer on EX22", criterion_4, Duration::from_secs(5)),
        (
            "fibre preservation of homomorphisms",
            criterion_5,
            Duration::from_secs(60),
        ),
        ("equivalence round trips", criterion_6, Duration::from_secs(60)),
        ("duality round trips", criterion_7, Duration::from_secs(60)),
        ("irregularity witnesses", criterion_8, Duration::from_secs(10)),
        ("sums of morphisms", criterion_9, Duration::from_secs(10)),
        ("format round trips", criterion_10, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (k, (title, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = result.and_then(|detail| {
            if took <= *limit {
                Ok(detail)
            } else {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(detail) => println!("criterion {}: PASS  {title} ({detail}; {took:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title} ({why}; {took:.2?})", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
