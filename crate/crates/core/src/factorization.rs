//! Ordered factorizations of trace monoids built from transitive bisections.
//!
//! Levels are stored left to right in product order: a trace decomposes as
//! `m₁·m₂·…·m_k` with `mᵢ ∈ ⟨levels[i]⟩`. An [`ElimPlan`] eliminates, at each
//! step, a set of generators `T` of the current level; the step splits the
//! level as `⟨T⟩·⟨β⟩` and the next level is `β`. The factorization of a plan
//! with steps `T₁, …, T_k` is `T₁*·T₂*·…·T_k*·R` where `R` is the last `β`.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::alphabet::{DerivedAlphabet, IndependenceAlphabet, Letter, LetterSet};
use crate::elimination::{beta_words, is_tfsa, TfsaVerdict};
use crate::error::{Error, Result};
use crate::trace::{enumerate_traces, Trace};

/// How a generator of a step's right level is built from the previous
/// level: `head · tail[0] · tail[1] · …` (indices into the previous level).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub head: usize,
    pub tail: Vec<usize>,
}

/// One transitive bisection of a level.
#[derive(Clone, Debug)]
pub struct ElimStep {
    /// The level being split.
    pub level: DerivedAlphabet,
    /// Indices of the eliminated generators in `level`.
    pub eliminated: BTreeSet<usize>,
    pub verdict: TfsaVerdict,
    /// The eliminated generators with their induced relation.
    pub left: DerivedAlphabet,
    /// `β` over the remaining generators, enumerated to the plan's bound.
    pub right: DerivedAlphabet,
    /// One entry per generator of `right`.
    pub derivations: Vec<Derivation>,
}

/// Splits `level` by eliminating the generators indexed by `eliminated`.
///
/// The level's generators are treated as abstract letters with relation
/// `θ_X`; the right part is `β` over them, each new generator stored as its
/// expansion in the base monoid, complete up to total length `maxlen`.
pub fn eliminate_step(level: &DerivedAlphabet, eliminated: &BTreeSet<usize>, maxlen: usize) -> Result<ElimStep> {
    if eliminated.is_empty() || eliminated.len() >= level.len() {
        return Err(Error::Precondition(
            "eliminated set must be a nonempty proper subset of the level".into(),
        ));
    }
    if let Some(&bad) = eliminated.iter().find(|&&i| i >= level.len()) {
        return Err(Error::LevelOutOfRange {
            index: bad,
            len: level.len(),
        });
    }
    let abstract_alpha = level.as_alphabet();
    let t_set: LetterSet = eliminated.iter().map(|&i| i as Letter).collect();
    let verdict = is_tfsa(&abstract_alpha, &t_set);
    if !verdict.is_tfsa {
        return Err(Error::NotTfsa(verdict));
    }
    let base = level.base();
    let gens = level.generators();
    let heads: Vec<Letter> = abstract_alpha.complement(&t_set).into_iter().collect();
    let in_t: Vec<bool> = (0..level.len()).map(|i| eliminated.contains(&i)).collect();
    let (words, complete) = beta_words(&abstract_alpha, &heads, &in_t, &level.weights(), maxlen, &|_| true);

    let mut built: Vec<(Trace, Derivation)> = words
        .into_iter()
        .map(|w| {
            let trace = w
                .iter()
                .fold(Trace::empty(base), |acc, &g| acc.concat_unchecked(&gens[g as usize]));
            let derivation = Derivation {
                head: w[0] as usize,
                tail: w[1..].iter().map(|&g| g as usize).collect(),
            };
            (trace, derivation)
        })
        .collect();
    built.sort_by(|a, b| a.0.cmp(&b.0));
    let traces: Vec<Trace> = built.iter().map(|(t, _)| t.clone()).collect();
    let right = DerivedAlphabet::new(base, traces, complete && level.is_complete())?;
    if right.len() != built.len() {
        return Err(Error::Internal("two β words expand to the same trace".into()));
    }
    let left_gens: Vec<Trace> = eliminated.iter().map(|&i| gens[i].clone()).collect();
    let left = DerivedAlphabet::new(base, left_gens, true)?;
    Ok(ElimStep {
        level: level.clone(),
        eliminated: eliminated.clone(),
        verdict,
        left,
        right,
        derivations: built.into_iter().map(|(_, d)| d).collect(),
    })
}

/// A finite sequence of transitive bisections starting at the letters.
#[derive(Clone, Debug)]
pub struct ElimPlan {
    base: IndependenceAlphabet,
    maxlen: usize,
    steps: Vec<ElimStep>,
}

impl ElimPlan {
    /// Builds a plan; each step lists generators (as traces) of the current
    /// level to eliminate.
    pub fn build(base: &IndependenceAlphabet, steps: &[Vec<Trace>], maxlen: usize) -> Result<Self> {
        let mut level = DerivedAlphabet::letters_of(base);
        let mut out = Vec::with_capacity(steps.len());
        for step in steps {
            let mut eliminated = BTreeSet::new();
            for g in step {
                if g.alphabet() != base {
                    return Err(Error::AlphabetMismatch);
                }
                let i = level
                    .position(g)
                    .ok_or_else(|| Error::NotAGenerator(g.to_string()))?;
                eliminated.insert(i);
            }
            let s = eliminate_step(&level, &eliminated, maxlen)?;
            level = s.right.clone();
            out.push(s);
        }
        Ok(ElimPlan {
            base: base.clone(),
            maxlen,
            steps: out,
        })
    }

    /// Parses `c;acc;b` style plans: steps separated by `;`, several
    /// generators in one step separated by `,`. Blank text is the empty plan.
    pub fn parse(base: &IndependenceAlphabet, text: &str, maxlen: usize) -> Result<Self> {
        Self::build(base, &parse_plan_steps(base, text)?, maxlen)
    }

    pub fn base(&self) -> &IndependenceAlphabet {
        &self.base
    }

    /// Every level is complete up to this length.
    pub fn maxlen(&self) -> usize {
        self.maxlen
    }

    pub fn steps(&self) -> &[ElimStep] {
        &self.steps
    }

    /// The level left after the last step (the letters for an empty plan).
    pub fn residual(&self) -> DerivedAlphabet {
        match self.steps.last() {
            Some(s) => s.right.clone(),
            None => DerivedAlphabet::letters_of(&self.base),
        }
    }

    pub fn factorization(&self) -> Factorization {
        let mut levels: Vec<DerivedAlphabet> = self.steps.iter().map(|s| s.left.clone()).collect();
        levels.push(self.residual());
        Factorization {
            levels,
            bound: self.maxlen,
            plan: Some(self.clone()),
        }
    }
}

/// Splits plan text into per-step generator traces.
pub fn parse_plan_steps(base: &IndependenceAlphabet, text: &str) -> Result<Vec<Vec<Trace>>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|step| {
            let gens: Vec<Trace> = step
                .split(',')
                .map(|w| {
                    if w.trim().is_empty() {
                        return Err(Error::BadWord(step.trim().to_string()));
                    }
                    let t = Trace::parse(base, w.trim())?;
                    if t.is_empty() {
                        return Err(Error::EmptyTrace);
                    }
                    Ok(t)
                })
                .collect::<Result<_>>()?;
            Ok(gens)
        })
        .collect()
}

/// An ordered factorization, levels in product order.
#[derive(Clone, Debug)]
pub struct Factorization {
    levels: Vec<DerivedAlphabet>,
    /// Levels are known to list every generator of length at most `bound`.
    bound: usize,
    plan: Option<ElimPlan>,
}

impl Factorization {
    /// `bound`: length up to which every level lists all its generators.
    pub fn new(levels: Vec<DerivedAlphabet>, bound: usize) -> Result<Self> {
        if let Some(first) = levels.first() {
            if levels.iter().any(|l| l.base() != first.base()) {
                return Err(Error::AlphabetMismatch);
            }
        }
        Ok(Factorization {
            levels,
            bound,
            plan: None,
        })
    }

    /// The bisection `M(B,θ_B)·⟨β_Z(B)⟩` with `β` enumerated to `maxlen`.
    pub fn bisection(alpha: &IndependenceAlphabet, subset: &LetterSet, maxlen: usize) -> Result<Self> {
        let left_gens: Vec<Trace> = subset.iter().map(|&b| Trace::letter(alpha, b)).collect();
        let left = DerivedAlphabet::new(alpha, left_gens, true)?;
        let right = crate::elimination::beta_generators(alpha, subset, maxlen)?;
        Self::new(vec![left, right], maxlen)
    }

    pub fn levels(&self) -> &[DerivedAlphabet] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn plan(&self) -> Option<&ElimPlan> {
        self.plan.as_ref()
    }

    /// Replaces level `k` by the levels of `inner`, a factorization of
    /// `⟨levels[k]⟩`.
    pub fn compose(&self, inner: &Factorization, k: usize) -> Result<Factorization> {
        if k >= self.levels.len() {
            return Err(Error::LevelOutOfRange {
                index: k,
                len: self.levels.len(),
            });
        }
        let target = Membership::new(&self.levels[k]);
        for level in &inner.levels {
            if level.base() != self.levels[k].base() {
                return Err(Error::AlphabetMismatch);
            }
            if let Some(g) = level.generators().iter().find(|g| !target.contains(g)) {
                return Err(Error::NoDecomposition(g.to_string()));
            }
        }
        let mut levels = self.levels[..k].to_vec();
        levels.extend(inner.levels.iter().cloned());
        levels.extend(self.levels[k + 1..].iter().cloned());
        Ok(Factorization {
            levels,
            bound: self.bound.min(inner.bound),
            plan: None,
        })
    }

    /// The levels whose generators all lie in `⟨X⟩`, in order.
    pub fn restrict_to(&self, x: &DerivedAlphabet) -> Factorization {
        let member = Membership::new(x);
        let levels = self
            .levels
            .iter()
            .filter(|l| l.generators().iter().all(|g| member.contains(g)))
            .cloned()
            .collect();
        Factorization {
            levels,
            bound: self.bound,
            plan: None,
        }
    }

    /// Whether level `i` meets both sides of the bisection defined by `B`.
    ///
    /// A nonempty element of `⟨Yᵢ⟩` with letters in `B` forces a generator
    /// with letters in `B`; one with `IA ⊆ A − B` forces its first generator
    /// to have `IA ⊆ A − B`. Both tests therefore only inspect generators.
    pub fn is_cut(&self, i: usize, subset: &LetterSet) -> Result<bool> {
        let level = self.levels.get(i).ok_or(Error::LevelOutOfRange {
            index: i,
            len: self.levels.len(),
        })?;
        let left = level.generators().iter().any(|g| g.alph().is_subset(subset));
        let right = level
            .generators()
            .iter()
            .any(|g| g.initial_alphabet().is_disjoint(subset));
        Ok(left && right)
    }

    /// Whether the levels split as a prefix inside `M(B,θ_B)` followed by a
    /// suffix inside `⟨β_Z(B)⟩`, i.e. `F` refines the bisection defined by
    /// `B` (tested on the listed generators).
    pub fn is_finer_than_bisection(&self, subset: &LetterSet) -> bool {
        let in_left = |l: &DerivedAlphabet| l.generators().iter().all(|g| g.alph().is_subset(subset));
        let in_right = |l: &DerivedAlphabet| {
            l.generators()
                .iter()
                .all(|g| g.initial_alphabet().is_disjoint(subset))
        };
        let k = self.levels.iter().take_while(|l| in_left(l)).count();
        self.levels[k..].iter().all(in_right)
    }

    /// Decomposes `t` as factors `(level index, factor)` with strictly
    /// increasing level indices, taking the longest admissible factor first
    /// and backtracking if the rest cannot be decomposed.
    pub fn decompose(&self, t: &Trace) -> Result<Vec<(usize, Trace)>> {
        if t.len() > self.bound {
            return Err(Error::Precondition(format!(
                "length {} exceeds the factorization bound {}",
                t.len(),
                self.bound
            )));
        }
        let members: Vec<Membership> = self.levels.iter().map(Membership::new).collect();
        let mut out = Vec::new();
        if self.search(&members, 0, t, &mut out) {
            Ok(out)
        } else {
            Err(Error::NoDecomposition(t.to_string()))
        }
    }

    fn search(&self, members: &[Membership], from: usize, t: &Trace, out: &mut Vec<(usize, Trace)>) -> bool {
        if t.is_empty() {
            return true;
        }
        for (i, member) in members.iter().enumerate().skip(from) {
            let mut divisors: Vec<Trace> = t
                .left_divisors()
                .into_iter()
                .filter(|u| !u.is_empty() && member.contains(u))
                .collect();
            divisors.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
            for u in divisors {
                let rest = t.left_divide_by(&u).expect("left divisor");
                out.push((i, u));
                if self.search(members, i + 1, &rest, out) {
                    return true;
                }
                out.pop();
            }
        }
        false
    }

    /// Counts decompositions of every nonempty trace of length at most `n`
    /// by exhaustive search; the result is the least trace whose count is
    /// not exactly one.
    pub fn verify(&self, n: usize) -> Result<FactorizationCheck> {
        if n > self.bound {
            return Err(Error::Precondition(format!(
                "bound {n} exceeds the factorization bound {}",
                self.bound
            )));
        }
        let alpha = match self.levels.first() {
            Some(l) => l.base().clone(),
            None => {
                return Ok(FactorizationCheck {
                    ok: n == 0,
                    counterexample: None,
                })
            }
        };
        let members: Vec<Membership> = self.levels.iter().map(Membership::new).collect();
        let mut memo: HashMap<(usize, Vec<Letter>), usize> = HashMap::new();
        for t in enumerate_traces(&alpha, n).into_iter().skip(1) {
            let c = count_decompositions(&members, 0, &t, &mut memo);
            if c != 1 {
                return Ok(FactorizationCheck {
                    ok: false,
                    counterexample: Some((t, c)),
                });
            }
        }
        Ok(FactorizationCheck {
            ok: true,
            counterexample: None,
        })
    }

    /// Short label of level `i`, e.g. `c*`, `(acc)*` or `{a,ab,…}*`.
    pub fn level_label(&self, i: usize) -> String {
        let gens = self.levels[i].generators();
        match gens {
            [g] if g.len() == 1 => format!("{g}*"),
            [g] => format!("({g})*"),
            _ => {
                let shown: Vec<String> = gens.iter().take(4).map(|g| g.to_string()).collect();
                let more = if gens.len() > 4 { ",…" } else { "" };
                format!("{{{}{more}}}*", shown.join(","))
            }
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.levels.len()).map(|i| self.level_label(i)).collect();
        f.write_str(&labels.join("."))
    }
}

/// Outcome of [`Factorization::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationCheck {
    pub ok: bool,
    /// A trace with zero or several decompositions, with the count (capped
    /// at 2).
    pub counterexample: Option<(Trace, usize)>,
}

fn count_decompositions(
    members: &[Membership],
    from: usize,
    t: &Trace,
    memo: &mut HashMap<(usize, Vec<Letter>), usize>,
) -> usize {
    if t.is_empty() {
        return 1;
    }
    let key = (from, t.word().to_vec());
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let mut total = 0;
    'outer: for (i, member) in members.iter().enumerate().skip(from) {
        for u in t.left_divisors() {
            if u.is_empty() || !member.contains(&u) {
                continue;
            }
            let rest = t.left_divide_by(&u).expect("left divisor");
            total += count_decompositions(members, i + 1, &rest, memo);
            if total >= 2 {
                total = 2;
                break 'outer;
            }
        }
    }
    memo.insert(key, total);
    total
}

/// Memoized membership test for a generated submonoid `⟨X⟩`.
pub struct Membership<'a> {
    level: &'a DerivedAlphabet,
    cache: RefCell<HashMap<Vec<Letter>, bool>>,
}

impl<'a> Membership<'a> {
    pub fn new(level: &'a DerivedAlphabet) -> Self {
        Membership {
            level,
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Whether `t ∈ ⟨X⟩`, given that `X` lists its generators up to `|t|`.
    pub fn contains(&self, t: &Trace) -> bool {
        if t.is_empty() {
            return true;
        }
        if let Some(&r) = self.cache.borrow().get(t.word()) {
            return r;
        }
        let r = self
            .level
            .generators()
            .iter()
            .take_while(|g| g.len() <= t.len())
            .any(|g| t.left_divide_by(g).is_some_and(|rest| self.contains(&rest)));
        self.cache.borrow_mut().insert(t.word().to_vec(), r);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> IndependenceAlphabet {
        IndependenceAlphabet::parse("letters a b c d\nedge a b\nedge b c\nedge c d").unwrap()
    }

    fn gen_strings(d: &DerivedAlphabet) -> Vec<String> {
        d.generators().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn first_steps_of_the_path_plan() {
        let g = p4();
        let base = DerivedAlphabet::letters_of(&g);
        let c = base.position(&Trace::parse(&g, "c").unwrap()).unwrap();
        let s = eliminate_step(&base, &BTreeSet::from([c]), 3).unwrap();
        assert!(s.verdict.is_tfsa);
        assert_eq!(gen_strings(&s.right), vec!["a", "b", "d", "ac", "acc"]);
        let acc = s.right.position(&Trace::parse(&g, "acc").unwrap()).unwrap();
        let s2 = eliminate_step(&s.right, &BTreeSet::from([acc]), 3).unwrap();
        assert!(s2.verdict.is_tfsa);
        // acc commutes with b only
        let b = s.right.position(&Trace::parse(&g, "b").unwrap()).unwrap();
        let rel: Vec<usize> = (0..s.right.len()).filter(|&j| s.right.related(acc, j)).collect();
        assert_eq!(rel, vec![b]);
    }

    #[test]
    fn non_tfsa_step_is_rejected() {
        let g = IndependenceAlphabet::parse("letters a b c\nedge a b").unwrap();
        let base = DerivedAlphabet::letters_of(&g);
        match eliminate_step(&base, &BTreeSet::from([2]), 3) {
            Err(Error::NotTfsa(v)) => assert_eq!(v.witness_text(&g).unwrap(), "a - c - b"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(eliminate_step(&base, &BTreeSet::new(), 3), Err(Error::Precondition(_))));
        assert!(matches!(eliminate_step(&base, &BTreeSet::from([0, 1, 2]), 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn path_plan_verifies() {
        let g = p4();
        let plan = ElimPlan::parse(&g, "c;acc;b;d;ac;a", 5).unwrap();
        let f = plan.factorization();
        assert_eq!(f.len(), 7);
        assert_eq!(&f.to_string()[..25], "c*.(acc)*.b*.d*.(ac)*.a*.");
        assert_eq!(f.verify(5).unwrap(), FactorizationCheck { ok: true, counterexample: None });
        let r = plan.residual();
        let short: Vec<String> = r.generators().iter().filter(|x| x.len() <= 3).map(|x| x.to_string()).collect();
        assert_eq!(short, vec!["ad", "db", "aac", "acd", "ada", "add", "dab", "dbb", "dbd"]);
        // the residual is free: no two generators commute
        assert!(r.relation().is_empty());
    }

    #[test]
    fn decompose_examples() {
        let g = p4();
        let f = ElimPlan::parse(&g, "c;acc;b;d;ac;a", 5).unwrap().factorization();
        let t = |s: &str| Trace::parse(&g, s).unwrap();
        let show = |d: Vec<(usize, Trace)>| d.into_iter().map(|(i, x)| format!("{i}:{x}")).collect::<Vec<_>>();
        assert_eq!(show(f.decompose(&t("ca")).unwrap()), vec!["0:c", "5:a"]);
        assert_eq!(show(f.decompose(&t("ac")).unwrap()), vec!["4:ac"]);
        assert!(f.decompose(&t("1")).unwrap().is_empty());
        for x in enumerate_traces(&g, 5) {
            let d = f.decompose(&x).unwrap();
            let back = d.iter().fold(Trace::empty(&g), |acc, (_, u)| acc.concat(u).unwrap());
            assert_eq!(back, x);
        }
    }

    #[test]
    fn swapped_bisection_fails() {
        let g = IndependenceAlphabet::parse("letters a b c\nedge a b\nedge b c").unwrap();
        let c = g.letter_set(&["c"]).unwrap();
        let f = Factorization::bisection(&g, &c, 5).unwrap();
        assert!(f.verify(5).unwrap().ok);
        let swapped = Factorization::new(vec![f.levels()[1].clone(), f.levels()[0].clone()], 5).unwrap();
        let check = swapped.verify(5).unwrap();
        assert!(!check.ok);
        let (t, count) = check.counterexample.unwrap();
        assert_eq!((t.to_string(), count), ("ac".to_string(), 2));
    }

    #[test]
    fn compose_examples() {
        let g = p4();
        let c = g.letter_set(&["c"]).unwrap();
        let f = Factorization::bisection(&g, &c, 5).unwrap();
        let identity = f.compose(&Factorization::new(vec![f.levels()[0].clone()], 5).unwrap(), 0).unwrap();
        assert_eq!(identity.to_string(), f.to_string());
        let beta = &f.levels()[1];
        let acc = beta.position(&Trace::parse(&g, "acc").unwrap()).unwrap();
        let s = eliminate_step(beta, &BTreeSet::from([acc]), 5).unwrap();
        let inner = Factorization::new(vec![s.left.clone(), s.right.clone()], 5).unwrap();
        let composed = f.compose(&inner, 1).unwrap();
        assert_eq!(composed.len(), 3);
        assert!(composed.to_string().starts_with("c*.(acc)*.{"));
        assert!(composed.verify(5).unwrap().ok);
        assert!(matches!(f.compose(&inner, 0), Err(Error::NoDecomposition(_))));
        assert!(matches!(f.compose(&inner, 2), Err(Error::LevelOutOfRange { .. })));
    }

    #[test]
    fn restriction_to_a_and_c() {
        let g = p4();
        let f = ElimPlan::parse(&g, "c;acc;b;d;ac;a", 5).unwrap().factorization();
        let ac = crate::alphabet::derived_independence(
            &g,
            &[Trace::parse(&g, "a").unwrap(), Trace::parse(&g, "c").unwrap()],
        )
        .unwrap();
        let r = f.restrict_to(&ac);
        assert_eq!(r.to_string(), "c*.(acc)*.(ac)*.a*");
        let empty = DerivedAlphabet::new(&g, vec![], true).unwrap();
        assert!(f.restrict_to(&empty).is_empty());
    }

    #[test]
    fn cut_levels_for_the_listed_bisections() {
        let g = p4();
        let f = ElimPlan::parse(&g, "c;acc;b;d;ac;a", 5).unwrap().factorization();
        let sets = ["a c", "b c", "b d", "a b c", "a c d", "b c d", "a b d"];
        let mut cuts = Vec::new();
        for s in sets {
            let b = g.parse_letter_set(s).unwrap();
            assert!(is_tfsa(&g, &b).is_tfsa);
            let cut: Vec<usize> = (0..f.len()).filter(|&i| f.is_cut(i, &b).unwrap()).collect();
            cuts.push(cut);
        }
        // at most one level is cut by each, yet none is a coarsening of F
        assert_eq!(cuts, vec![vec![6], vec![], vec![6], vec![6], vec![], vec![6], vec![]]);
        for s in sets {
            let b = g.parse_letter_set(s).unwrap();
            assert!(!f.is_finer_than_bisection(&b));
        }
        let c = g.letter_set(&["c"]).unwrap();
        assert!(f.is_finer_than_bisection(&c));
    }

    #[test]
    fn plan_parse_errors() {
        let g = p4();
        assert!(matches!(ElimPlan::parse(&g, "c;zz", 3), Err(Error::BadWord(_))));
        assert!(matches!(ElimPlan::parse(&g, "c;ca", 3), Err(Error::NotAGenerator(_))));
        assert!(matches!(ElimPlan::parse(&g, "c;;a", 3), Err(Error::BadWord(_))));
        assert_eq!(ElimPlan::parse(&g, "  ", 3).unwrap().steps().len(), 0);
        assert_eq!(ElimPlan::parse(&g, "a,c", 3).unwrap().steps()[0].eliminated.len(), 2);
    }
}
