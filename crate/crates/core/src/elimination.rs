//! Bisections `M(A,θ) = M(B,θ_B)·⟨β_Z(B)⟩` and transitively factorizing
//! subalphabets.
//!
//! With `Z = A − B`, the right factor of the bisection is generated by
//! `β_Z(B) = { z·w : z ∈ Z, w ∈ M(B,θ_B), IA(z·w) = {z} }`, which is
//! infinite in general; every enumeration here takes a length bound.
//!
//! `B` is a TFSA when `β_Z(B)` is a partially commutative code. Three
//! characterizations are implemented and cross-checked:
//! * path search in the dependence graph ([`is_tfsa`], and [`b_closure`]),
//! * bounded unique factorization over `β_Z(B)` ([`bounded_code_check`]),
//! * the exchange condition on pairs of generators ([`condition_ii_check`]).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::alphabet::{DerivedAlphabet, IndependenceAlphabet, Letter, LetterSet};
use crate::error::{Error, Result};
use crate::series::Key;
use crate::trace::{appends_in_order, concat_words, Trace};

/// Outcome of the TFSA decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TfsaVerdict {
    pub is_tfsa: bool,
    /// A shortest dependence path `z − b₁ − … − bₙ − z′` with independent
    /// endpoints in `Z` and interior in `B`; present iff not TFSA.
    pub witness: Option<Vec<Letter>>,
}

impl TfsaVerdict {
    pub fn tfsa() -> Self {
        TfsaVerdict {
            is_tfsa: true,
            witness: None,
        }
    }

    /// `a - c - b` style rendering of the witness path.
    pub fn witness_text(&self, alpha: &IndependenceAlphabet) -> Option<String> {
        self.witness.as_ref().map(|p| {
            p.iter()
                .map(|&l| alpha.name(l))
                .collect::<Vec<_>>()
                .join(" - ")
        })
    }
}

impl fmt::Display for TfsaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_tfsa {
            f.write_str("TFSA")
        } else {
            f.write_str("NOT TFSA")
        }
    }
}

fn check_subset(alpha: &IndependenceAlphabet, subset: &LetterSet) -> Result<()> {
    match subset.iter().find(|&&l| l as usize >= alpha.len()) {
        Some(bad) => Err(Error::UnknownLetter(format!("#{bad}"))),
        None => Ok(()),
    }
}

/// Which side the sub-alphabet's monoid sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `t = w·m` with `Alph(w) ⊆ B`, `IA(m) ⊆ A − B`.
    Left,
    /// `t = m·w` with `Alph(w) ⊆ B`, `TA(m) ⊆ A − B`.
    Right,
}

/// Splits `t` along the bisection defined by `B`. Returns `(w, m)` where `w`
/// is the `B`-part and `m` the remainder; see [`Side`] for the order.
pub fn factor_bisection(t: &Trace, subset: &LetterSet, side: Side) -> (Trace, Trace) {
    let alpha = t.alphabet();
    let word = t.word();
    let n = word.len();
    let mut taken = vec![false; n];
    match side {
        Side::Left => {
            for i in 0..n {
                taken[i] = subset.contains(&word[i])
                    && (0..i).all(|j| taken[j] || alpha.commute(word[j], word[i]));
            }
        }
        Side::Right => {
            for i in (0..n).rev() {
                taken[i] = subset.contains(&word[i])
                    && (i + 1..n).all(|j| taken[j] || alpha.commute(word[j], word[i]));
            }
        }
    }
    let part: Vec<Letter> = (0..n).filter(|&i| taken[i]).map(|i| word[i]).collect();
    let rest: Vec<Letter> = (0..n).filter(|&i| !taken[i]).map(|i| word[i]).collect();
    (
        Trace::normalize(alpha, &part).expect("letters of t"),
        Trace::normalize(alpha, &rest).expect("letters of t"),
    )
}

/// One `β` generator as an abstract word: the head letter followed by the
/// normal form of the tail over `B`.
pub(crate) type BetaWord = Vec<Letter>;

/// Enumerates `z·w` with `z ∈ heads`, `w` a normal form over the letters
/// flagged in `in_b`, `IA(z·w) = {z}` and total weight at most `maxlen`.
///
/// `keep` prunes a word and all its extensions. The second result is
/// `false` when some generator exceeds the bound by a one-letter extension
/// of an enumerated one.
pub(crate) fn beta_words(
    alpha: &IndependenceAlphabet,
    heads: &[Letter],
    in_b: &[bool],
    weights: &[usize],
    maxlen: usize,
    keep: &dyn Fn(&[Letter]) -> bool,
) -> (Vec<BetaWord>, bool) {
    struct Walk<'a> {
        alpha: &'a IndependenceAlphabet,
        b_letters: Vec<Letter>,
        weights: &'a [usize],
        maxlen: usize,
        keep: &'a dyn Fn(&[Letter]) -> bool,
        out: Vec<BetaWord>,
        complete: bool,
    }

    impl Walk<'_> {
        fn go(&mut self, word: &mut Vec<Letter>, weight: usize) {
            let z = word[0];
            for bi in 0..self.b_letters.len() {
                let v = self.b_letters[bi];
                if !appends_in_order(self.alpha, &word[1..], v) {
                    continue;
                }
                // v becomes initial in the tail iff it commutes with all of it;
                // then it must not commute with z.
                let initial_in_tail = word[1..].iter().all(|&x| self.alpha.commute(x, v));
                if initial_in_tail && self.alpha.commute(z, v) {
                    continue;
                }
                let w = weight + self.weights[v as usize];
                if w > self.maxlen {
                    self.complete = false;
                    continue;
                }
                word.push(v);
                if (self.keep)(word) {
                    self.out.push(word.clone());
                    self.go(word, w);
                }
                word.pop();
            }
        }
    }

    let b_letters: Vec<Letter> = alpha.letters().filter(|&l| in_b[l as usize]).collect();
    let mut walk = Walk {
        alpha,
        b_letters,
        weights,
        maxlen,
        keep,
        out: Vec::new(),
        complete: true,
    };
    for &z in heads {
        let wz = weights[z as usize];
        if wz > maxlen {
            walk.complete = false;
            continue;
        }
        let mut word = vec![z];
        if keep(&word) {
            walk.out.push(word.clone());
            walk.go(&mut word, wz);
        }
    }
    (walk.out, walk.complete)
}

/// `β_Z(B)` up to length `maxlen`, with `θ_β` and a completeness flag.
pub fn beta_generators(alpha: &IndependenceAlphabet, subset: &LetterSet, maxlen: usize) -> Result<DerivedAlphabet> {
    check_subset(alpha, subset)?;
    let heads: Vec<Letter> = alpha.complement(subset).into_iter().collect();
    if heads.is_empty() {
        return Err(Error::EmptyComplement);
    }
    let in_b: Vec<bool> = alpha.letters().map(|l| subset.contains(&l)).collect();
    let weights = vec![1; alpha.len()];
    let (words, complete) = beta_words(alpha, &heads, &in_b, &weights, maxlen, &|_| true);
    let gens = words
        .into_iter()
        .map(|w| Trace::from_normal_form(alpha, w))
        .collect();
    DerivedAlphabet::new(alpha, gens, complete)
}

/// Lexicographically least among the shortest dependence paths from `from`
/// to `to` whose interior lies in `B`.
fn least_shortest_path(alpha: &IndependenceAlphabet, in_b: &[bool], from: Letter, to: Letter) -> Option<Vec<Letter>> {
    let n = alpha.len();
    // Distance from each B letter to `to`, moving only through B.
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for b in alpha.letters() {
        if in_b[b as usize] && !alpha.commute(b, to) {
            dist[b as usize] = 1;
            queue.push_back(b);
        }
    }
    while let Some(x) = queue.pop_front() {
        for y in alpha.letters() {
            if in_b[y as usize] && y != x && !alpha.commute(x, y) && dist[y as usize] == usize::MAX {
                dist[y as usize] = dist[x as usize] + 1;
                queue.push_back(y);
            }
        }
    }
    let first = alpha
        .letters()
        .filter(|&b| in_b[b as usize] && !alpha.commute(from, b) && dist[b as usize] != usize::MAX)
        .min_by_key(|&b| (dist[b as usize], b))?;
    let mut path = vec![from, first];
    let mut cur = first;
    while dist[cur as usize] > 1 {
        let d = dist[cur as usize];
        cur = alpha
            .letters()
            .filter(|&y| in_b[y as usize] && y != cur && !alpha.commute(cur, y) && dist[y as usize] == d - 1)
            .min()
            .expect("BFS predecessor");
        path.push(cur);
    }
    path.push(to);
    Some(path)
}

/// Decides whether `B` is a transitively factorizing subalphabet: no two
/// independent letters of `Z` are joined by a dependence path through `B`.
pub fn is_tfsa(alpha: &IndependenceAlphabet, subset: &LetterSet) -> TfsaVerdict {
    let in_b: Vec<bool> = alpha.letters().map(|l| subset.contains(&l)).collect();
    let z: Vec<Letter> = alpha.letters().filter(|l| !subset.contains(l)).collect();
    let mut best: Option<Vec<Letter>> = None;
    for (i, &z1) in z.iter().enumerate() {
        for &z2 in &z[i + 1..] {
            if !alpha.commute(z1, z2) {
                continue;
            }
            if let Some(p) = least_shortest_path(alpha, &in_b, z1, z2) {
                let better = match &best {
                    None => true,
                    Some(b) => (p.len(), &p) < (b.len(), b),
                };
                if better {
                    best = Some(p);
                }
            }
        }
    }
    TfsaVerdict {
        is_tfsa: best.is_none(),
        witness: best,
    }
}

/// `B_z`: letters of `B` reachable from `z` by a dependence path whose inner
/// points lie in `B`.
pub fn b_closure(alpha: &IndependenceAlphabet, subset: &LetterSet, z: Letter) -> Result<LetterSet> {
    check_subset(alpha, subset)?;
    if subset.contains(&z) {
        return Err(Error::NotInComplement(alpha.name(z).to_string()));
    }
    let mut seen = LetterSet::new();
    let mut queue: VecDeque<Letter> = VecDeque::new();
    for &b in subset {
        if !alpha.commute(z, b) {
            seen.insert(b);
            queue.push_back(b);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in subset {
            if y != x && !alpha.commute(x, y) && seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// TFSA via closures: for all independent `z, z′ ∈ Z`,
/// `({z} ∪ B_z) × ({z′} ∪ B_{z′}) ⊆ θ`.
pub fn is_tfsa_by_closure(alpha: &IndependenceAlphabet, subset: &LetterSet) -> bool {
    let z: Vec<Letter> = alpha.complement(subset).into_iter().collect();
    let closures: Vec<LetterSet> = z
        .iter()
        .map(|&x| {
            let mut c = b_closure(alpha, subset, x).expect("z outside B");
            c.insert(x);
            c
        })
        .collect();
    for i in 0..z.len() {
        for j in (i + 1)..z.len() {
            if alpha.commute(z[i], z[j])
                && !closures[i]
                    .iter()
                    .all(|&x| closures[j].iter().all(|&y| alpha.commute(x, y)))
            {
                return false;
            }
        }
    }
    true
}

/// Result of a bounded code check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeCheck {
    pub is_code: bool,
    /// Two factorizations over `X`, distinct modulo `θ_X`, of one trace.
    pub witness: Option<(Vec<Trace>, Vec<Trace>)>,
}

/// Every trace of length at most `maxlen` in `⟨X⟩` has at most one
/// factorization over `X` up to commutation of `θ_X`-independent factors.
///
/// Factorizations modulo `θ_X` are exactly traces of `M(X, θ_X)`; the check
/// enumerates their normal forms by weight and looks for two with the same
/// image in `M(A, θ)`. The witness is the least such image in (length, lex)
/// order with its two least factorizations.
pub fn bounded_code_check(level: &DerivedAlphabet, maxlen: usize) -> CodeCheck {
    let base = level.base();
    let abstract_alpha = level.as_alphabet();
    let gens = level.generators();
    // image → two least abstract words mapping to it
    type Images = HashMap<Vec<Letter>, (Vec<Letter>, Option<Vec<Letter>>)>;
    let mut images: Images = HashMap::new();
    let mut collisions: BTreeSet<Key> = BTreeSet::new();

    #[allow(clippy::too_many_arguments)]
    fn walk(
        base: &IndependenceAlphabet,
        abstract_alpha: &IndependenceAlphabet,
        gens: &[Trace],
        maxlen: usize,
        word: &mut Vec<Letter>,
        image: &[Letter],
        images: &mut Images,
        collisions: &mut BTreeSet<Key>,
    ) {
        for (g, gen) in gens.iter().enumerate() {
            let g = g as Letter;
            if image.len() + gen.len() > maxlen || !appends_in_order(abstract_alpha, word, g) {
                continue;
            }
            word.push(g);
            let img = concat_words(base, image, gen.word());
            match images.get_mut(&img) {
                None => {
                    images.insert(img.clone(), (word.clone(), None));
                }
                Some((first, second)) => {
                    let w = word.clone();
                    if w < *first {
                        *second = Some(std::mem::replace(first, w));
                    } else if second.as_ref().is_none_or(|s| w < *s) {
                        *second = Some(w);
                    }
                    collisions.insert(Key(img.clone()));
                }
            }
            walk(base, abstract_alpha, gens, maxlen, word, &img, images, collisions);
            word.pop();
        }
    }

    walk(
        base,
        &abstract_alpha,
        gens,
        maxlen,
        &mut Vec::new(),
        &[],
        &mut images,
        &mut collisions,
    );
    match collisions.into_iter().next() {
        None => CodeCheck {
            is_code: true,
            witness: None,
        },
        Some(Key(img)) => {
            let (first, second) = images.remove(&img).expect("collision recorded");
            let expand = |w: &[Letter]| w.iter().map(|&g| gens[g as usize].clone()).collect();
            CodeCheck {
                is_code: false,
                witness: Some((expand(&first), expand(&second.expect("two factorizations")))),
            }
        }
    }
}

/// A violation of the exchange condition:
/// `z₁w₁·z₂w₂ = z₂w′₂·z₁w′₁` with `(w₁, w₂) ≠ (w′₁, w′₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub z1: Letter,
    pub w1: Trace,
    pub z2: Letter,
    pub w2: Trace,
    pub w2_prime: Trace,
    pub w1_prime: Trace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionIiCheck {
    pub holds: bool,
    pub witness: Option<ExchangeWitness>,
}

/// Scans all `z₁ ≠ z₂ ∈ Z` and `B`-words with `|zᵢwᵢ| ≤ maxlen` and
/// `IA(zᵢwᵢ) = {zᵢ}` for a violated exchange equation.
///
/// Only independent `z₁, z₂` can satisfy the equation (otherwise `z₁` would
/// have to commute past `z₂`), so only those pairs are scanned.
pub fn condition_ii_check(alpha: &IndependenceAlphabet, subset: &LetterSet, maxlen: usize) -> Result<ConditionIiCheck> {
    check_subset(alpha, subset)?;
    let heads: Vec<Letter> = alpha.complement(subset).into_iter().collect();
    let in_b: Vec<bool> = alpha.letters().map(|l| subset.contains(&l)).collect();
    let weights = vec![1; alpha.len()];
    let (words, _) = beta_words(alpha, &heads, &in_b, &weights, maxlen, &|_| true);
    let mut by_head: HashMap<Letter, Vec<&BetaWord>> = HashMap::new();
    for w in &words {
        by_head.entry(w[0]).or_default().push(w);
    }
    let empty = Vec::new();
    let products = |first: Letter, second: Letter| -> HashMap<Vec<Letter>, Vec<(usize, usize)>> {
        let mut m: HashMap<Vec<Letter>, Vec<(usize, usize)>> = HashMap::new();
        let f = by_head.get(&first).unwrap_or(&empty);
        let s = by_head.get(&second).unwrap_or(&empty);
        for (i, g1) in f.iter().enumerate() {
            for (j, g2) in s.iter().enumerate() {
                m.entry(concat_words(alpha, g1, g2)).or_default().push((i, j));
            }
        }
        m
    };
    let mut best: Option<(Key, ExchangeWitness)> = None;
    for (i, &z1) in heads.iter().enumerate() {
        for &z2 in &heads[i + 1..] {
            if !alpha.commute(z1, z2) {
                continue;
            }
            let lhs = products(z1, z2);
            let rhs = products(z2, z1);
            let g1s = by_head.get(&z1).unwrap_or(&empty);
            let g2s = by_head.get(&z2).unwrap_or(&empty);
            for (img, left_pairs) in &lhs {
                let Some(right_pairs) = rhs.get(img) else { continue };
                if best.as_ref().is_some_and(|(k, _)| Key(img.clone()) >= *k) {
                    continue;
                }
                // least violating (w1, w2, w2', w1') for this image
                let mut candidate: Option<(usize, usize, usize, usize)> = None;
                for &(a, b) in left_pairs {
                    for &(c, d) in right_pairs {
                        // right pair is (z2-generator c, z1-generator d)
                        if (a, b) != (d, c) {
                            let tuple = (a, b, c, d);
                            if candidate.is_none_or(|x| tuple < x) {
                                candidate = Some(tuple);
                            }
                        }
                    }
                }
                if let Some((a, b, c, d)) = candidate {
                    let tail = |w: &BetaWord| Trace::from_normal_form(alpha, w[1..].to_vec());
                    best = Some((
                        Key(img.clone()),
                        ExchangeWitness {
                            z1,
                            w1: tail(g1s[a]),
                            z2,
                            w2: tail(g2s[b]),
                            w2_prime: tail(g2s[c]),
                            w1_prime: tail(g1s[d]),
                        },
                    ));
                }
            }
        }
    }
    Ok(ConditionIiCheck {
        holds: best.is_none(),
        witness: best.map(|(_, w)| w),
    })
}

/// Whether `t` lies in `⟨β_Z(B)⟩`, i.e. `IA(t) ⊆ Z`.
pub fn in_beta_monoid(t: &Trace, subset: &LetterSet) -> bool {
    t.initial_alphabet().is_disjoint(subset)
}
