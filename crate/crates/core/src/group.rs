//! Free partially commutative groups.
//!
//! Group elements are traces over the doubled alphabet `Ã = A ∪ Ā` with
//! `θ̃` relating `x, y` whenever their underlying letters commute, reduced
//! by cancelling `x … x̄` pairs whose interior commutes with `x`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::alphabet::{IndependenceAlphabet, Letter, LetterSet};
use crate::elimination::{beta_words, is_tfsa};
use crate::error::{Error, Result};
use crate::trace::{normalize_word, Trace};

/// `Ã` over a base alphabet. Letter `2i` is the base letter `i`, `2i+1` its
/// inverse, written with a trailing apostrophe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledAlphabet {
    base: IndependenceAlphabet,
    doubled: IndependenceAlphabet,
}

/// The formal inverse letter.
pub fn bar(l: Letter) -> Letter {
    l ^ 1
}

/// The underlying base letter.
pub fn base_letter(l: Letter) -> Letter {
    l >> 1
}

/// Builds `Ã` and `θ̃`.
pub fn extend_alphabet(alpha: &IndependenceAlphabet) -> DoubledAlphabet {
    let names: Vec<String> = alpha
        .letters()
        .flat_map(|l| [alpha.name(l).to_string(), format!("{}'", alpha.name(l))])
        .collect();
    let mut pairs = Vec::new();
    for (a, b) in alpha.edges() {
        for x in [2 * a, 2 * a + 1] {
            for y in [2 * b, 2 * b + 1] {
                pairs.push((x, y));
            }
        }
    }
    DoubledAlphabet {
        base: alpha.clone(),
        doubled: IndependenceAlphabet::from_parts(names, &pairs),
    }
}

impl DoubledAlphabet {
    pub fn base(&self) -> &IndependenceAlphabet {
        &self.base
    }

    pub fn alphabet(&self) -> &IndependenceAlphabet {
        &self.doubled
    }

    /// `{b, b̄ : b ∈ B}`.
    pub fn lift(&self, subset: &LetterSet) -> LetterSet {
        subset.iter().flat_map(|&b| [2 * b, 2 * b + 1]).collect()
    }

    /// Parses a group word such as `c' a c` (`1` is the identity).
    pub fn parse_word(&self, text: &str) -> Result<Vec<Letter>> {
        self.doubled.parse_word(text)
    }

    /// Parses and reduces a group word.
    pub fn parse(&self, text: &str) -> Result<ReducedTrace> {
        let w = self.parse_word(text)?;
        Ok(self.reduce_word(&w))
    }

    pub fn reduce_word(&self, word: &[Letter]) -> ReducedTrace {
        reduce_trace(&Trace::normalize(&self.doubled, word).expect("letters of Ã"))
    }

    pub fn identity(&self) -> ReducedTrace {
        ReducedTrace(Trace::empty(&self.doubled))
    }
}

/// A reduced trace over `Ã`: the normal form of a group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedTrace(Trace);

impl ReducedTrace {
    pub fn trace(&self) -> &Trace {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ReducedTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.alphabet().format_word_spaced(self.0.word()))
    }
}

/// Least `(i, j)` with `w[j] = w̄[i]` and every letter strictly between
/// commuting with `w[i]`.
fn cancellable_pair(alpha: &IndependenceAlphabet, w: &[Letter]) -> Option<(usize, usize)> {
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[j] == bar(w[i]) {
                return Some((i, j));
            }
            if !alpha.commute(w[i], w[j]) {
                break;
            }
        }
    }
    None
}

/// Whether a trace over `Ã` has no cancellable pair.
pub fn is_reduced(t: &Trace) -> bool {
    cancellable_pair(t.alphabet(), t.word()).is_none()
}

/// Cancels pairs until none is left, always the least pair first.
pub fn reduce_trace(t: &Trace) -> ReducedTrace {
    let alpha = t.alphabet();
    let mut w = t.word().to_vec();
    while let Some((i, j)) = cancellable_pair(alpha, &w) {
        w.remove(j);
        w.remove(i);
        w = normalize_word(alpha, &w);
    }
    ReducedTrace(Trace::normalize(alpha, &w).expect("letters of Ã"))
}

pub fn group_mul(u: &ReducedTrace, v: &ReducedTrace) -> ReducedTrace {
    reduce_trace(&u.0.concat_unchecked(&v.0))
}

/// Reverse the word and invert every letter.
pub fn group_inverse(u: &ReducedTrace) -> ReducedTrace {
    let alpha = u.0.alphabet();
    let w: Vec<Letter> = u.0.word().iter().rev().map(|&l| bar(l)).collect();
    ReducedTrace(Trace::normalize(alpha, &w).expect("letters of Ã"))
}

/// Equality in the group of two words over `Ã`.
pub fn group_equal(dbl: &DoubledAlphabet, u: &[Letter], v: &[Letter]) -> Result<bool> {
    let n = dbl.alphabet().len();
    if let Some(&bad) = u.iter().chain(v).find(|&&l| l as usize >= n) {
        return Err(Error::UnknownLetter(format!("#{bad}")));
    }
    Ok(dbl.reduce_word(u) == dbl.reduce_word(v))
}

/// A generator `zw` of `β_Z^R(B̃)` with its conjugate `w̄zw`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoGenerator {
    pub zw: ReducedTrace,
    pub conj: ReducedTrace,
}

/// `zw ∈ β_Z(B̃)` reduced, `|zw| ≤ maxlen`, with `ρ(zw) = w̄zw`; each
/// conjugate is checked to be reduced as written.
pub fn rho_generators(dbl: &DoubledAlphabet, subset: &LetterSet, maxlen: usize) -> Result<Vec<RhoGenerator>> {
    let alpha = dbl.base();
    let heads: Vec<Letter> = alpha.complement(subset).into_iter().map(|z| 2 * z).collect();
    if heads.is_empty() {
        return Err(Error::EmptyComplement);
    }
    let dalpha = dbl.alphabet();
    let lifted = dbl.lift(subset);
    let in_b: Vec<bool> = dalpha.letters().map(|l| lifted.contains(&l)).collect();
    let weights = vec![1; dalpha.len()];
    let (words, _) = beta_words(dalpha, &heads, &in_b, &weights, maxlen, &|w: &[Letter]| {
        cancellable_pair(dalpha, w).is_none()
    });
    let mut out: Vec<RhoGenerator> = words
        .into_iter()
        .map(|w| {
            let zw = ReducedTrace(Trace::from_normal_form(dalpha, w.clone()));
            let tail = &w[1..];
            let mut raw: Vec<Letter> = tail.iter().rev().map(|&l| bar(l)).collect();
            raw.extend_from_slice(&w);
            let raw = Trace::normalize(dalpha, &raw).expect("letters of Ã");
            if !is_reduced(&raw) {
                return Err(Error::Internal(format!("conjugate of {zw} is not reduced")));
            }
            Ok(RhoGenerator {
                zw,
                conj: ReducedTrace(raw),
            })
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.zw.cmp(&b.zw));
    Ok(out)
}

/// `g = b·h` with `b` over `B̃` (the image of `g` after deleting the letters
/// of `Z`) and `h` in the kernel of that retraction.
pub fn semidirect_split(dbl: &DoubledAlphabet, g: &ReducedTrace, subset: &LetterSet) -> (ReducedTrace, ReducedTrace) {
    let b_part = retract(dbl, g, subset);
    let h_part = group_mul(&group_inverse(&b_part), g);
    (b_part, h_part)
}

/// Image under the morphism sending every letter of `Z` to 1.
pub fn retract(dbl: &DoubledAlphabet, g: &ReducedTrace, subset: &LetterSet) -> ReducedTrace {
    let kept: Vec<Letter> = g
        .trace()
        .word()
        .iter()
        .copied()
        .filter(|&l| subset.contains(&base_letter(l)))
        .collect();
    dbl.reduce_word(&kept)
}

/// Pairs `i < j` of `ρ` generators whose conjugates commute in the group.
pub fn commutation_closure(gens: &[RhoGenerator]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (x, y) = (&gens[i].conj, &gens[j].conj);
            if group_mul(x, y) == group_mul(y, x) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Pairs `i < j` of generators with `Alph(zwᵢ) × Alph(zwⱼ) ⊆ θ̃`.
pub fn theta_beta_relation(gens: &[RhoGenerator]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (x, y) = (gens[i].zw.trace(), gens[j].zw.trace());
            let alpha = x.alphabet();
            if x.word().iter().all(|&a| y.word().iter().all(|&b| alpha.commute(a, b))) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Outcome of the injectivity test of `α : F(β, θ̃_β) → H_Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Injectivity {
    /// `B` is TFSA and the commutation relation of the conjugates equals
    /// `θ̃_β` on all generators up to the bound.
    Agrees { generators: usize, commuting_pairs: usize },
    /// Two generators that do not commute whose images do.
    Witness(RhoGenerator, RhoGenerator),
}

/// Builds, for non-TFSA `B`, the pair `(r₁c, r₂c)` from a shortest witness
/// path `z₁ … c … z₂` split at an interior letter `c`; otherwise compares
/// the two relations on `ρ` generators of length ≤ `maxlen`.
pub fn alpha_injectivity_witness(dbl: &DoubledAlphabet, subset: &LetterSet, maxlen: usize) -> Result<Injectivity> {
    let alpha = dbl.base();
    let verdict = is_tfsa(alpha, subset);
    match verdict.witness {
        Some(path) => {
            let interior = &path[1..path.len() - 1];
            let k = (interior.len() - 1) / 2;
            let c = interior[k];
            let mut r1: Vec<Letter> = vec![path[0]];
            r1.extend(&interior[..k]);
            r1.push(c);
            let mut r2: Vec<Letter> = vec![*path.last().expect("path")];
            r2.extend(interior[k + 1..].iter().rev());
            r2.push(c);
            let make = |word: &[Letter]| -> Result<RhoGenerator> {
                let lifted: Vec<Letter> = word.iter().map(|&l| 2 * l).collect();
                let zw = dbl.reduce_word(&lifted);
                let mut raw: Vec<Letter> = lifted[1..].iter().rev().map(|&l| bar(l)).collect();
                raw.extend(&lifted);
                let conj = dbl.reduce_word(&raw);
                if conj.len() != raw.len() {
                    return Err(Error::Internal(format!("conjugate of {zw} is not reduced")));
                }
                Ok(RhoGenerator { zw, conj })
            };
            let (g1, g2) = (make(&r1)?, make(&r2)?);
            if group_mul(&g1.conj, &g2.conj) != group_mul(&g2.conj, &g1.conj) {
                return Err(Error::Internal("witness images do not commute".into()));
            }
            Ok(Injectivity::Witness(g1, g2))
        }
        None => {
            let gens = rho_generators(dbl, subset, maxlen)?;
            let closure = commutation_closure(&gens);
            let theta = theta_beta_relation(&gens);
            if closure != theta {
                let extra = closure.symmetric_difference(&theta).next().expect("differ");
                return Err(Error::Internal(format!(
                    "commutation of ρ images differs from θ̃_β at ({}, {})",
                    gens[extra.0].zw, gens[extra.1].zw
                )));
            }
            Ok(Injectivity::Agrees {
                generators: gens.len(),
                commuting_pairs: closure.len(),
            })
        }
    }
}

/// Independent reduction oracle over explicit words.
///
/// For a trace, every linearization is enumerated; deleting an adjacent
/// `x x̄` in any of them gives a one-step reduct. `terminals` returns the
/// irreducible traces reachable this way.
pub struct RewritingOracle<'a> {
    alpha: &'a IndependenceAlphabet,
    memo: HashMap<Vec<Letter>, BTreeSet<Vec<Letter>>>,
}

impl<'a> RewritingOracle<'a> {
    pub fn new(dbl: &'a DoubledAlphabet) -> Self {
        RewritingOracle {
            alpha: dbl.alphabet(),
            memo: HashMap::new(),
        }
    }

    /// All words equivalent to `w` under adjacent commutations.
    pub fn linearizations(&self, w: &[Letter]) -> BTreeSet<Vec<Letter>> {
        let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::from([w.to_vec()]);
        let mut stack = vec![w.to_vec()];
        while let Some(u) = stack.pop() {
            for i in 0..u.len().saturating_sub(1) {
                if self.alpha.commute(u[i], u[i + 1]) {
                    let mut v = u.clone();
                    v.swap(i, i + 1);
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
        }
        seen
    }

    /// One-step reducts of the trace with normal form `w`.
    pub fn successors(&self, w: &[Letter]) -> BTreeSet<Vec<Letter>> {
        let mut out = BTreeSet::new();
        for u in self.linearizations(w) {
            for i in 0..u.len().saturating_sub(1) {
                if u[i + 1] == bar(u[i]) {
                    let mut v = u.clone();
                    v.drain(i..i + 2);
                    out.insert(normalize_word(self.alpha, &v));
                }
            }
        }
        out
    }

    pub fn terminals(&mut self, w: &[Letter]) -> BTreeSet<Vec<Letter>> {
        let w = normalize_word(self.alpha, w);
        if let Some(t) = self.memo.get(&w) {
            return t.clone();
        }
        let succ = self.successors(&w);
        let out = if succ.is_empty() {
            BTreeSet::from([w.clone()])
        } else {
            let mut acc = BTreeSet::new();
            for s in succ {
                acc.extend(self.terminals(&s));
            }
            acc
        };
        self.memo.insert(w, out.clone());
        out
    }
}

/// Groups all traces over `Ã` of length ≤ n into classes connected by
/// insertion/deletion of adjacent inverse pairs (within the bound) and
/// returns, for each trace, the minimum-length members of its class.
pub fn bounded_classes(dbl: &DoubledAlphabet, n: usize) -> BTreeMap<Vec<Letter>, Vec<Vec<Letter>>> {
    let oracle = RewritingOracle::new(dbl);
    let traces = crate::trace::enumerate_traces(dbl.alphabet(), n);
    let index: HashMap<Vec<Letter>, usize> = traces
        .iter()
        .enumerate()
        .map(|(i, t)| (t.word().to_vec(), i))
        .collect();
    let mut parent: Vec<usize> = (0..traces.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, t) in traces.iter().enumerate() {
        for s in oracle.successors(t.word()) {
            let j = index[&s];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut minima: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..traces.len() {
        let r = find(&mut parent, i);
        let entry = minima.entry(r).or_default();
        match entry.first() {
            Some(&m) if traces[m].len() < traces[i].len() => {}
            Some(&m) if traces[m].len() > traces[i].len() => *entry = vec![i],
            _ => entry.push(i),
        }
    }
    let mut out = BTreeMap::new();
    for i in 0..traces.len() {
        let r = find(&mut parent, i);
        out.insert(
            traces[i].word().to_vec(),
            minima[&r].iter().map(|&m| traces[m].word().to_vec()).collect(),
        );
    }
    out
}
