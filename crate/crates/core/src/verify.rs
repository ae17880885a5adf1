//! Bounded verification suites. Each check recomputes its values with the
//! library and compares against exact expectations or independent oracles.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::alphabet::{derived_independence, DerivedAlphabet, IndependenceAlphabet, Letter, LetterSet};
use crate::elimination::{
    beta_generators, bounded_code_check, condition_ii_check, in_beta_monoid, is_tfsa, is_tfsa_by_closure,
};
use crate::error::{Error, Result};
use crate::factorization::ElimPlan;
use crate::graphs::{all_small_graphs, random_graph};
use crate::group::{
    alpha_injectivity_witness, bounded_classes, extend_alphabet, group_inverse, group_mul, reduce_trace, retract,
    semidirect_split, DoubledAlphabet, Injectivity, ReducedTrace, RewritingOracle,
};
use crate::lie::{basis_is_valid, degree_profile, lazard_split_check, lie_basis, lie_dimensions, obstruction_identity};
use crate::series::{characteristic_series, mobius_of_derived, mobius_polynomial, witt_dimensions, TracePolynomial};
use crate::trace::{enumerate_traces, Trace};

/// Outcome of one criterion.
#[derive(Clone, Debug)]
pub struct Report {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {}: {} ({:.2?})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed
        )
    }
}

/// Names of the criteria, indexed from 1.
pub const CRITERIA: [&str; 11] = [
    "code examples",
    "non-TFSA example",
    "TFSA example",
    "path factorization",
    "Lie basis",
    "series identities",
    "Witt dimensions",
    "TFSA tri-equivalence",
    "Lazard split",
    "group layer",
    "runtime budget",
];

/// Wall-clock budget for the whole suite.
pub const BUDGET: Duration = Duration::from_secs(300);

type Check = Result<String>;

fn fail(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

fn alpha(text: &str) -> IndependenceAlphabet {
    IndependenceAlphabet::parse(text).expect("built-in alphabet")
}

fn ab_c() -> IndependenceAlphabet {
    alpha("letters a b c\nedge a b")
}

fn p3() -> IndependenceAlphabet {
    alpha("letters a b c\nedge a b\nedge b c")
}

fn p4() -> IndependenceAlphabet {
    alpha("letters a b c d\nedge a b\nedge b c\nedge c d")
}

const PATH_PLAN: &str = "c;acc;b;d;ac;a";

fn traces(a: &IndependenceAlphabet, words: &[&str]) -> Result<Vec<Trace>> {
    words.iter().map(|w| Trace::parse(a, w)).collect()
}

fn show_factorization(f: &[Trace]) -> String {
    f.iter().map(|g| format!("({g})")).collect()
}

fn product(a: &IndependenceAlphabet, f: &[Trace]) -> Trace {
    f.iter().fold(Trace::empty(a), |acc, g| acc.concat_unchecked(g))
}

fn criterion_1() -> Check {
    let h = ab_c();
    let code = derived_independence(&h, &traces(&h, &["c", "cb", "ca"])?)?;
    ensure(bounded_code_check(&code, 6).is_code, || "{c,cb,ca} rejected".into())?;
    let not_code = derived_independence(&h, &traces(&h, &["b", "a", "ca", "cb"])?)?;
    let check = bounded_code_check(&not_code, 6);
    let (u, v) = check.witness.ok_or_else(|| fail("{b,a,ca,cb} accepted"))?;
    ensure(product(&h, &u) == product(&h, &v) && u != v, || "witness does not collide".into())?;
    Ok(format!(
        "{{c,cb,ca}} is a code; {{b,a,ca,cb}}: {} = {}",
        show_factorization(&u),
        show_factorization(&v)
    ))
}

fn criterion_2() -> Check {
    let h = ab_c();
    let c = h.letter_set(&["c"])?;
    let v = is_tfsa(&h, &c);
    let path = v.witness_text(&h).unwrap_or_default();
    ensure(!v.is_tfsa && path == "a - c - b", || format!("verdict {v}, witness {path:?}"))?;
    let beta = beta_generators(&h, &c, 6)?;
    for g in traces(&h, &["a", "b", "ac", "bc"])? {
        ensure(beta.position(&g).is_some(), || format!("{g} missing from β"))?;
    }
    let (u, w) = bounded_code_check(&beta, 6)
        .witness
        .ok_or_else(|| fail("β accepted as a code"))?;
    let (su, sw) = (show_factorization(&u), show_factorization(&w));
    ensure(su == "(a)(bc)" && sw == "(b)(ac)", || format!("witness {su} = {sw}"))?;
    Ok(format!("witness path {path}; {su} = {sw}"))
}

fn criterion_3() -> Check {
    let g = p3();
    let c = g.letter_set(&["c"])?;
    ensure(is_tfsa(&g, &c).is_tfsa, || "B = {c} rejected".into())?;
    let beta = beta_generators(&g, &c, 5)?;
    let shown: Vec<String> = beta.generators().iter().map(|x| x.to_string()).collect();
    ensure(shown == ["a", "b", "ac", "acc", "accc", "acccc"], || format!("β = {shown:?}"))?;
    let b = beta.position(&Trace::parse(&g, "b")?).expect("b");
    let expected: BTreeSet<(usize, usize)> = (0..beta.len()).filter(|&i| i != b).map(|i| (i.min(b), i.max(b))).collect();
    ensure(beta.relation() == expected, || format!("θ_β = {:?}", beta.relation()))?;

    // The displayed series identity at length 6.
    let n = 6;
    let beta6 = beta_generators(&g, &c, n)?;
    let mut expected_p = TracePolynomial::one(&g);
    expected_p = &expected_p - &TracePolynomial::from_trace(&Trace::parse(&g, "b")?);
    let a = Trace::parse(&g, "a")?;
    let bt = Trace::parse(&g, "b")?;
    let ct = Trace::parse(&g, "c")?;
    for k in 0..n {
        let ack = a.concat(&ct.power(k))?;
        expected_p = &expected_p - &TracePolynomial::from_trace(&ack);
        if k + 2 <= n {
            expected_p = &expected_p + &TracePolynomial::from_trace(&bt.concat(&ack)?);
        }
    }
    let p = mobius_of_derived(&beta6).truncate(n);
    ensure(p == expected_p.truncate(n), || format!("P(θ_β) = {p}"))?;
    let s = p.invert_truncated(n)?;
    let mut checked = 0;
    for t in enumerate_traces(&g, n) {
        let coeff = s.coefficient(&t);
        let indicator = in_beta_monoid(&t, &c);
        ensure(
            (indicator && coeff.is_one()) || (!indicator && coeff.is_zero()),
            || format!("coefficient of {t} is {coeff}"),
        )?;
        checked += 1;
    }
    Ok(format!("β = {{{}}}; series matches ⟨β⟩ on {checked} traces", shown.join(",")))
}

fn criterion_4() -> Check {
    let g = p4();
    let plan = ElimPlan::parse(&g, PATH_PLAN, 5)?;
    ensure(plan.steps().iter().all(|s| s.verdict.is_tfsa), || "a step is not TFSA".into())?;
    let f = plan.factorization();
    let check = f.verify(5)?;
    ensure(check.ok, || format!("counterexample {:?}", check.counterexample))?;
    Ok(format!("{} steps TFSA; unique decompositions up to length 5", plan.steps().len()))
}

fn criterion_5() -> Check {
    let g = p4();
    let plan = ElimPlan::parse(&g, PATH_PLAN, 3)?;
    let basis = lie_basis(&plan, 3)?;
    let profile = degree_profile(&basis, 3);
    let dims = lie_dimensions(&g, 3);
    ensure(basis.len() == 15 && profile == [4, 3, 8], || format!("{} elements, profile {profile:?}", basis.len()))?;
    ensure(dims == [4, 3, 8], || format!("oracle dimensions {dims:?}"))?;
    ensure(basis_is_valid(&g, &basis, 3), || "basis is not independent or does not span".into())?;
    Ok(format!("15 elements, profile {profile:?}, oracle {dims:?}"))
}

fn series_ok(g: &IndependenceAlphabet, n: usize) -> Result<()> {
    let s = characteristic_series(g, n);
    let all = enumerate_traces(g, n);
    ensure(s.len() == all.len(), || format!("{g:?}: {} terms vs {} traces", s.len(), all.len()))?;
    for t in &all {
        ensure(s.coefficient(t).is_one(), || format!("{g:?}: coefficient of {t}"))?;
    }
    let one = mobius_polynomial(g).mul_truncated(&s, n);
    ensure(one == TracePolynomial::one(g), || format!("{g:?}: P·(1/P) = {one}"))
}

fn criterion_6(seed: u64) -> Check {
    let fixed = [
        ab_c(),
        p3(),
        p4(),
        alpha("letters a b c"),
        alpha("letters a b c\nedge a b\nedge a c\nedge b c"),
    ];
    let n = 8;
    for g in &fixed {
        series_ok(g, n)?;
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..20 {
        let k = rng.gen_range(1..=5);
        series_ok(&random_graph(&mut rng, k), n)?;
    }
    Ok(format!("5 fixed + 20 random graphs agree with enumeration to length {n}"))
}

fn criterion_7() -> Check {
    let graphs = all_small_graphs(4);
    for g in &graphs {
        let w: Vec<usize> = witt_dimensions(g, 5)?.into_iter().map(|d| d as usize).collect();
        let o = lie_dimensions(g, 5);
        ensure(w == o, || format!("{g:?}: Witt {w:?} vs rank {o:?}"))?;
    }
    Ok(format!("{} graphs (all up to isomorphism on ≤4 letters), degrees 1-5", graphs.len()))
}

/// Tri-equivalence on one graph; returns the number of subsets checked.
pub fn tri_equivalence(g: &IndependenceAlphabet) -> Result<usize> {
    let n = g.len();
    let mut count = 0;
    for mask in 0..(1u32 << n) - 1 {
        let b: LetterSet = g.letters().filter(|&l| mask >> l & 1 == 1).collect();
        let path = is_tfsa(g, &b).is_tfsa;
        let closure = is_tfsa_by_closure(g, &b);
        let code = bounded_code_check(&beta_generators(g, &b, 6)?, 6).is_code;
        let exchange = condition_ii_check(g, &b, 5)?.holds;
        ensure(path == closure && path == code && path == exchange, || {
            format!("{g:?}, B = {b:?}: path {path}, closure {closure}, code {code}, exchange {exchange}")
        })?;
        count += 1;
    }
    Ok(count)
}

fn criterion_8() -> Check {
    let graphs = all_small_graphs(6);
    let mut subsets = 0;
    for g in &graphs {
        subsets += tri_equivalence(g)?;
    }
    Ok(format!("{} graphs up to isomorphism, {subsets} proper subsets, no disagreement", graphs.len()))
}

fn criterion_9() -> Check {
    let cases: [(IndependenceAlphabet, &str); 10] = [
        (p3(), "c"),
        (p3(), "b"),
        (p3(), "a c"),
        (ab_c(), "c"),
        (ab_c(), "a"),
        (p4(), "c"),
        (p4(), "b c"),
        (alpha("letters a b c"), "a"),
        (alpha("letters a b c d\nedge a c\nedge b d"), "a b"),
        (alpha("letters a b c d\nedge a b\nedge a c\nedge a d"), "a"),
    ];
    for (g, b) in &cases {
        let b = g.parse_letter_set(b)?;
        for d in lazard_split_check(g, &b, 4)? {
            ensure(d.holds(), || format!("{g:?}, B = {b:?}: {d:?}"))?;
        }
    }
    let h = ab_c();
    let (lhs, rhs) = obstruction_identity(&h, &h.letter_set(&["c"])?)?.ok_or_else(|| fail("a−b c, {c} is TFSA"))?;
    ensure(lhs == rhs && !lhs.is_zero(), || format!("[a,[b,c]] = {lhs}, [b,[a,c]] = {rhs}"))?;
    Ok(format!("10 splits hold to degree 4; [a,[b,c]] = [b,[a,c]] = {lhs}"))
}

fn random_group_word<R: Rng>(rng: &mut R, dbl: &DoubledAlphabet, max: usize) -> ReducedTrace {
    let len = rng.gen_range(0..=max);
    let n = dbl.alphabet().len() as Letter;
    let w: Vec<Letter> = (0..len).map(|_| rng.gen_range(0..n)).collect();
    dbl.reduce_word(&w)
}

fn criterion_10(seed: u64) -> Check {
    // Confluence and minimality on every graph with 3 letters.
    let mut words = 0;
    for g in crate::graphs::graphs_up_to_isomorphism(3) {
        let dbl = extend_alphabet(&g);
        let classes = bounded_classes(&dbl, 6);
        let mut oracle = RewritingOracle::new(&dbl);
        for t in enumerate_traces(dbl.alphabet(), 6) {
            let r = reduce_trace(&t);
            let rw = r.trace().word().to_vec();
            let terminals = oracle.terminals(t.word());
            ensure(terminals.len() == 1 && terminals.contains(&rw), || {
                format!("{g:?}: {t} has terminals {terminals:?}, reduce gives {r}")
            })?;
            let minima = &classes[t.word()];
            ensure(minima.len() == 1 && minima[0] == rw, || {
                format!("{g:?}: {t} class minima {minima:?}, reduce gives {r}")
            })?;
            words += 1;
        }
    }
    // w̄zw is reduced exactly when zw ∈ β_Z(B̃).
    let mut conjugate_cases = 0;
    for g in crate::graphs::graphs_up_to_isomorphism(3) {
        let dbl = extend_alphabet(&g);
        let da = dbl.alphabet();
        for mask in 0..(1u32 << g.len()) - 1 {
            let b: LetterSet = g.letters().filter(|&l| mask >> l & 1 == 1).collect();
            let lifted = dbl.lift(&b);
            let b_alpha_words: Vec<Trace> = enumerate_traces(da, 3)
                .into_iter()
                .filter(|t| t.alph().is_subset(&lifted) && crate::group::is_reduced(t))
                .collect();
            for z in g.complement(&b) {
                let zt = Trace::letter(da, 2 * z);
                for w in &b_alpha_words {
                    let zw = zt.concat(w)?;
                    let in_beta = zw.initial_alphabet() == BTreeSet::from([2 * z]);
                    let mut raw: Vec<Letter> = w.word().iter().rev().map(|&l| l ^ 1).collect();
                    raw.push(2 * z);
                    raw.extend(w.word());
                    let reduced_len = dbl.reduce_word(&raw).len();
                    ensure((reduced_len == 2 * w.len() + 1) == in_beta, || {
                        format!("{g:?}: z = {}, w = {w}: |red| = {reduced_len}, in β = {in_beta}", g.name(z))
                    })?;
                    conjugate_cases += 1;
                }
            }
        }
    }
    // Semidirect splitting on random words.
    let mut rng = StdRng::seed_from_u64(seed);
    let graphs = crate::graphs::all_small_graphs(4);
    for _ in 0..500 {
        let g = &graphs[rng.gen_range(0..graphs.len())];
        let dbl = extend_alphabet(g);
        let b: LetterSet = g.letters().filter(|_| rng.gen_bool(0.5)).collect();
        let x = random_group_word(&mut rng, &dbl, 10);
        let y = random_group_word(&mut rng, &dbl, 10);
        let (bp, hp) = semidirect_split(&dbl, &x, &b);
        ensure(group_mul(&bp, &hp) == x, || format!("{g:?}: split of {x} does not recombine"))?;
        ensure(retract(&dbl, &hp, &b).is_empty(), || format!("{g:?}: h-part of {x} not in the kernel"))?;
        let lifted = dbl.lift(&b);
        ensure(bp.trace().alph().is_subset(&lifted), || format!("{g:?}: b-part of {x} leaves B̃"))?;
        let xy = group_mul(&x, &y);
        ensure(
            retract(&dbl, &xy, &b) == group_mul(&retract(&dbl, &x, &b), &retract(&dbl, &y, &b)),
            || format!("{g:?}: retraction is not multiplicative on {x}, {y}"),
        )?;
        ensure(group_mul(&x, &group_inverse(&x)).is_empty(), || format!("{x} times its inverse"))?;
    }
    // Injectivity of α and its failure.
    let xyc = extend_alphabet(&alpha("letters x y c\nedge x y"));
    let witness = match alpha_injectivity_witness(&xyc, &xyc.base().letter_set(&["c"])?, 4)? {
        Injectivity::Witness(a, b) => format!("({}, {})", a.zw, b.zw),
        other => return Err(fail(format!("no witness: {other:?}"))),
    };
    ensure(witness == "(x c, y c)", || format!("witness {witness}"))?;
    let d3 = extend_alphabet(&p3());
    let agrees = match alpha_injectivity_witness(&d3, &d3.base().letter_set(&["c"])?, 4)? {
        Injectivity::Agrees {
            generators,
            commuting_pairs,
        } => format!("{generators} generators, {commuting_pairs} commuting pairs"),
        other => return Err(fail(format!("unexpected witness {other:?}"))),
    };
    Ok(format!(
        "{words} words confluent and minimal; conjugate criterion on {conjugate_cases} cases; 500 splits; witness {witness}; TFSA case {agrees}"
    ))
}

fn timed(id: usize, f: impl FnOnce() -> Check) -> Report {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f));
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(Ok(d)) => (true, d),
        Ok(Err(e)) => (false, e.to_string()),
        Err(_) => (false, "panicked".to_string()),
    };
    Report {
        id,
        name: CRITERIA[id - 1],
        passed,
        detail,
        elapsed,
    }
}

/// Runs criterion `id` (1–10; 11 is derived from a full run).
pub fn run_criterion(id: usize, seed: u64) -> Option<Report> {
    let f: Box<dyn FnOnce() -> Check> = match id {
        1 => Box::new(criterion_1),
        2 => Box::new(criterion_2),
        3 => Box::new(criterion_3),
        4 => Box::new(criterion_4),
        5 => Box::new(criterion_5),
        6 => Box::new(move || criterion_6(seed)),
        7 => Box::new(criterion_7),
        8 => Box::new(criterion_8),
        9 => Box::new(criterion_9),
        10 => Box::new(move || criterion_10(seed)),
        _ => return None,
    };
    Some(timed(id, f))
}

/// Runs every criterion in order, calling `progress` after each, and ends
/// with the runtime budget check over the whole run.
pub fn run_all(seed: u64, mut progress: impl FnMut(&Report)) -> Vec<Report> {
    let start = Instant::now();
    let mut out = Vec::new();
    for id in 1..=10 {
        let r = run_criterion(id, seed).expect("known criterion");
        progress(&r);
        out.push(r);
    }
    let total = start.elapsed();
    let r = Report {
        id: 11,
        name: CRITERIA[10],
        passed: total < BUDGET,
        detail: format!("suite took {total:.2?} (budget {}s)", BUDGET.as_secs()),
        elapsed: total,
    };
    progress(&r);
    out.push(r);
    out
}

/// Letters of a derived level as strings, for reports.
pub fn generator_list(level: &DerivedAlphabet) -> String {
    level
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
