//! Traces: elements of the free partially commutative monoid `M(A, θ)`.
//!
//! A trace is stored as the lexicographically least word of its class
//! (w.r.t. the alphabet's letter order). Appending a letter to a normal
//! form only ever inserts it into the suffix of letters it commutes with,
//! which gives linear-time products.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::alphabet::{IndependenceAlphabet, Letter, LetterSet};
use crate::error::{Error, Result};

/// Inserts `a` into the normal form `nf`, producing the normal form of `nf·a`.
pub(crate) fn push_letter(alpha: &IndependenceAlphabet, nf: &mut Vec<Letter>, a: Letter) {
    let mut k = nf.len();
    while k > 0 && alpha.commute(nf[k - 1], a) {
        k -= 1;
    }
    let pos = (k..nf.len()).find(|&p| nf[p] > a).unwrap_or(nf.len());
    nf.insert(pos, a);
}

/// Whether `nf·a` is already in normal form with `a` last.
pub(crate) fn appends_in_order(alpha: &IndependenceAlphabet, nf: &[Letter], a: Letter) -> bool {
    for &c in nf.iter().rev() {
        if !alpha.commute(c, a) {
            return true;
        }
        if c > a {
            return false;
        }
    }
    true
}

pub(crate) fn normalize_word(alpha: &IndependenceAlphabet, word: &[Letter]) -> Vec<Letter> {
    let mut nf = Vec::with_capacity(word.len());
    for &a in word {
        push_letter(alpha, &mut nf, a);
    }
    nf
}

/// Normal form of the product of two normal forms.
pub(crate) fn concat_words(alpha: &IndependenceAlphabet, left: &[Letter], right: &[Letter]) -> Vec<Letter> {
    let mut nf = Vec::with_capacity(left.len() + right.len());
    nf.extend_from_slice(left);
    for &a in right {
        push_letter(alpha, &mut nf, a);
    }
    nf
}

/// Initial letters of a normal form, in increasing order.
pub(crate) fn initial_letters(alpha: &IndependenceAlphabet, nf: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::new();
    for (i, &x) in nf.iter().enumerate() {
        if nf[..i].iter().all(|&y| alpha.commute(x, y)) {
            out.push(x);
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn terminal_letters(alpha: &IndependenceAlphabet, nf: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::new();
    for (i, &x) in nf.iter().enumerate() {
        if nf[i + 1..].iter().all(|&y| alpha.commute(x, y)) {
            out.push(x);
        }
    }
    out.sort_unstable();
    out
}

/// Removes an initial occurrence of `a`, if there is one.
pub(crate) fn left_divide_word(alpha: &IndependenceAlphabet, nf: &[Letter], a: Letter) -> Option<Vec<Letter>> {
    let i = nf.iter().position(|&x| x == a)?;
    if !nf[..i].iter().all(|&y| alpha.commute(a, y)) {
        return None;
    }
    let rest: Vec<Letter> = nf[..i].iter().chain(&nf[i + 1..]).copied().collect();
    Some(normalize_word(alpha, &rest))
}

pub(crate) fn right_divide_word(alpha: &IndependenceAlphabet, nf: &[Letter], a: Letter) -> Option<Vec<Letter>> {
    let i = nf.iter().rposition(|&x| x == a)?;
    if !nf[i + 1..].iter().all(|&y| alpha.commute(a, y)) {
        return None;
    }
    let rest: Vec<Letter> = nf[..i].iter().chain(&nf[i + 1..]).copied().collect();
    Some(normalize_word(alpha, &rest))
}

/// An element of `M(A, θ)`, held in lexicographic normal form.
#[derive(Clone)]
pub struct Trace {
    alphabet: IndependenceAlphabet,
    word: Vec<Letter>,
}

impl Trace {
    pub fn empty(alpha: &IndependenceAlphabet) -> Self {
        Trace {
            alphabet: alpha.clone(),
            word: Vec::new(),
        }
    }

    pub fn letter(alpha: &IndependenceAlphabet, l: Letter) -> Self {
        assert!((l as usize) < alpha.len(), "letter out of range");
        Trace {
            alphabet: alpha.clone(),
            word: vec![l],
        }
    }

    /// Normal form of an arbitrary word.
    pub fn normalize(alpha: &IndependenceAlphabet, word: &[Letter]) -> Result<Self> {
        if let Some(&bad) = word.iter().find(|&&l| l as usize >= alpha.len()) {
            return Err(Error::UnknownLetter(format!("#{bad}")));
        }
        Ok(Trace {
            alphabet: alpha.clone(),
            word: normalize_word(alpha, word),
        })
    }

    /// Trusts that `word` is already a normal form over `alpha`.
    pub(crate) fn from_normal_form(alpha: &IndependenceAlphabet, word: Vec<Letter>) -> Self {
        debug_assert_eq!(normalize_word(alpha, &word), word);
        Trace {
            alphabet: alpha.clone(),
            word,
        }
    }

    /// Parses the textual trace syntax (see [`IndependenceAlphabet::parse_word`]).
    pub fn parse(alpha: &IndependenceAlphabet, text: &str) -> Result<Self> {
        let word = alpha.parse_word(text)?;
        Self::normalize(alpha, &word)
    }

    pub fn alphabet(&self) -> &IndependenceAlphabet {
        &self.alphabet
    }

    /// The canonical representative word.
    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `Alph(t)`.
    pub fn alph(&self) -> LetterSet {
        self.word.iter().copied().collect()
    }

    pub fn concat(&self, other: &Trace) -> Result<Trace> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &Trace) -> Trace {
        Trace {
            alphabet: self.alphabet.clone(),
            word: concat_words(&self.alphabet, &self.word, &other.word),
        }
    }

    /// `IA(t)`: letters that begin some representative.
    pub fn initial_alphabet(&self) -> LetterSet {
        initial_letters(&self.alphabet, &self.word).into_iter().collect()
    }

    /// `TA(t)`: letters that end some representative.
    pub fn terminal_alphabet(&self) -> LetterSet {
        terminal_letters(&self.alphabet, &self.word).into_iter().collect()
    }

    /// The unique `w` with `t = a·w`, if `a ∈ IA(t)`.
    pub fn left_divide(&self, a: Letter) -> Option<Trace> {
        left_divide_word(&self.alphabet, &self.word, a).map(|word| Trace {
            alphabet: self.alphabet.clone(),
            word,
        })
    }

    /// The unique `w` with `t = w·a`, if `a ∈ TA(t)`.
    pub fn right_divide(&self, a: Letter) -> Option<Trace> {
        right_divide_word(&self.alphabet, &self.word, a).map(|word| Trace {
            alphabet: self.alphabet.clone(),
            word,
        })
    }

    /// The unique `w` with `t = u·w`, if `u` is a left divisor of `t`.
    pub fn left_divide_by(&self, u: &Trace) -> Option<Trace> {
        let mut rest = self.word.clone();
        for &a in &u.word {
            rest = left_divide_word(&self.alphabet, &rest, a)?;
        }
        Some(Trace {
            alphabet: self.alphabet.clone(),
            word: rest,
        })
    }

    /// Every left divisor of `t` (including `1` and `t`), ordered by
    /// (length, normal form).
    pub fn left_divisors(&self) -> Vec<Trace> {
        let mut seen: HashSet<Vec<Letter>> = HashSet::new();
        let mut frontier: Vec<(Vec<Letter>, Vec<Letter>)> = vec![(Vec::new(), self.word.clone())];
        seen.insert(Vec::new());
        while let Some((prefix, rest)) = frontier.pop() {
            for a in initial_letters(&self.alphabet, &rest) {
                let mut p = prefix.clone();
                push_letter(&self.alphabet, &mut p, a);
                if seen.insert(p.clone()) {
                    let r = left_divide_word(&self.alphabet, &rest, a).expect("initial letter");
                    frontier.push((p, r));
                }
            }
        }
        let mut out: Vec<Trace> = seen
            .into_iter()
            .map(|word| Trace {
                alphabet: self.alphabet.clone(),
                word,
            })
            .collect();
        out.sort();
        out
    }

    pub fn power(&self, k: usize) -> Trace {
        let mut out = Trace::empty(&self.alphabet);
        for _ in 0..k {
            out = out.concat_unchecked(self);
        }
        out
    }
}

impl PartialEq for Trace {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word && self.alphabet == other.alphabet
    }
}

impl Eq for Trace {}

impl std::hash::Hash for Trace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl Ord for Trace {
    /// Shorter traces first, then lexicographic normal form.
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Trace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.format_word(&self.word))
    }
}

impl fmt::Debug for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trace({self})")
    }
}

/// Independent equality test for words: `u ≡_θ v` iff the words have the
/// same letter counts and agree on every projection onto a pair of
/// dependent letters. Only used to cross-check [`Trace::normalize`].
pub fn equivalent(alpha: &IndependenceAlphabet, u: &[Letter], v: &[Letter]) -> Result<bool> {
    for &l in u.iter().chain(v) {
        if l as usize >= alpha.len() {
            return Err(Error::UnknownLetter(format!("#{l}")));
        }
    }
    if u.len() != v.len() {
        return Ok(false);
    }
    for a in alpha.letters() {
        if u.iter().filter(|&&x| x == a).count() != v.iter().filter(|&&x| x == a).count() {
            return Ok(false);
        }
    }
    for (a, b) in alpha.dependence_graph() {
        let pu: Vec<Letter> = u.iter().copied().filter(|&x| x == a || x == b).collect();
        let pv: Vec<Letter> = v.iter().copied().filter(|&x| x == a || x == b).collect();
        if pu != pv {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All traces of length at most `n`, each once, ordered by (length, lex).
pub fn enumerate_traces(alpha: &IndependenceAlphabet, n: usize) -> Vec<Trace> {
    let mut out = vec![Trace::empty(alpha)];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for a in alpha.letters() {
                if appends_in_order(alpha, w, a) {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().map(|w| Trace::from_normal_form(alpha, w.clone())));
        layer = next;
    }
    out
}

/// Witness of Levi's lemma for `w·t = w₂·t₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviFactors {
    pub p: Trace,
    pub q: Trace,
    pub r: Trace,
    pub s: Trace,
}

/// Given `w·t = w₂·t₂`, finds `p, q, r, s` with `w = p·s`, `t = r·q`,
/// `w₂ = p·r`, `t₂ = s·q` and `Alph(r) × Alph(s) ⊆ θ`.
///
/// Peels the least initial letter of `w` and locates it in `w₂` or `t₂`.
pub fn levi_factor(w: &Trace, t: &Trace, w2: &Trace, t2: &Trace) -> Result<LeviFactors> {
    let alpha = w.alphabet().clone();
    if [t, w2, t2].iter().any(|x| x.alphabet() != &alpha) {
        return Err(Error::AlphabetMismatch);
    }
    if w.concat_unchecked(t) != w2.concat_unchecked(t2) {
        return Err(Error::Precondition("w·t differs from w2·t2".into()));
    }
    let mut prefix_p: Vec<Letter> = Vec::new(); // letters peeled into p
    let mut prefix_s: Vec<Letter> = Vec::new(); // letters peeled into s
    let mut w = w.clone();
    let mut w2 = w2.clone();
    let mut t2 = t2.clone();
    while let Some(&x) = w.initial_alphabet().iter().next() {
        w = w.left_divide(x).expect("initial letter");
        if let Some(rest) = w2.left_divide(x) {
            w2 = rest;
            prefix_p.push(x);
        } else {
            t2 = t2
                .left_divide(x)
                .ok_or_else(|| Error::Internal("Levi peel lost a letter".into()))?;
            prefix_s.push(x);
        }
    }
    // Base case: w = 1, so p = s = 1 there, r = w2, q = t2.
    let p = Trace::normalize(&alpha, &prefix_p)?;
    let s = Trace::normalize(&alpha, &prefix_s)?;
    Ok(LeviFactors { p, q: t2, r: w2, s })
}

/// The letters of a set of traces, as a set.
pub fn alph_of_all<'a>(traces: impl IntoIterator<Item = &'a Trace>) -> BTreeSet<Letter> {
    traces.into_iter().flat_map(|t| t.word().iter().copied()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alpha(text: &str) -> IndependenceAlphabet {
        IndependenceAlphabet::parse(text).unwrap()
    }

    fn p3() -> IndependenceAlphabet {
        alpha("letters a b c\nedge a b\nedge b c")
    }

    fn p4() -> IndependenceAlphabet {
        alpha("letters a b c d\nedge a b\nedge b c\nedge c d")
    }

    fn ab_c() -> IndependenceAlphabet {
        alpha("letters a b c\nedge a b")
    }

    fn t(a: &IndependenceAlphabet, s: &str) -> Trace {
        Trace::parse(a, s).unwrap()
    }

    /// Brute-force closure of a word under adjacent commutations.
    fn class_of(a: &IndependenceAlphabet, w: &[Letter]) -> BTreeSet<Vec<Letter>> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![w.to_vec()];
        seen.insert(w.to_vec());
        while let Some(cur) = stack.pop() {
            for i in 0..cur.len().saturating_sub(1) {
                if a.commute(cur[i], cur[i + 1]) {
                    let mut next = cur.clone();
                    next.swap(i, i + 1);
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn normalize_examples() {
        let g = alpha("letters a b\nedge a b");
        assert_eq!(t(&g, "ba").to_string(), "ab");
        let p3 = p3();
        let cba = t(&p3, "cba");
        let class = class_of(&p3, &[2, 1, 0]);
        assert_eq!(
            class.iter().map(|w| p3.format_word(w)).collect::<Vec<_>>(),
            vec!["bca", "cab", "cba"]
        );
        assert_eq!(cba.to_string(), "bca");
        assert_eq!(t(&p3, "c").to_string(), "c");
    }

    #[test]
    fn normal_form_is_least_in_class_exhaustively() {
        for g in [p3(), ab_c(), p4()] {
            for n in 0..=5 {
                let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
                for _ in 0..n {
                    words = words
                        .into_iter()
                        .flat_map(|w| {
                            g.letters().map(move |l| {
                                let mut v = w.clone();
                                v.push(l);
                                v
                            })
                        })
                        .collect();
                }
                for w in words {
                    let least = class_of(&g, &w).into_iter().next().unwrap();
                    assert_eq!(Trace::normalize(&g, &w).unwrap().word(), &least[..]);
                }
            }
        }
    }

    #[test]
    fn concat_examples() {
        let g = alpha("letters a b\nedge a b");
        assert_eq!(t(&g, "b").concat(&t(&g, "a")).unwrap().to_string(), "ab");
        let x = t(&g, "ab");
        assert_eq!(x.concat(&Trace::empty(&g)).unwrap(), x);
        let h = ab_c();
        let left = t(&h, "a").concat(&t(&h, "bc")).unwrap();
        let right = t(&h, "b").concat(&t(&h, "ac")).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.to_string(), "abc");
        assert_eq!(t(&g, "a").concat(&t(&h, "a")), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn equivalent_examples() {
        let g = alpha("letters a b\nedge a b");
        assert!(equivalent(&g, &[0, 1], &[1, 0]).unwrap());
        assert!(!equivalent(&g, &[0, 1], &[0, 1, 0]).unwrap());
        let h = ab_c();
        assert!(equivalent(&h, &[0, 1, 2], &[1, 0, 2]).unwrap());
        assert!(!equivalent(&h, &[0, 2, 1], &[0, 1, 2]).unwrap());
        assert!(equivalent(&h, &[0, 9], &[0, 9]).is_err());
    }

    #[test]
    fn normalize_agrees_with_projection_oracle() {
        // All words of length <= 6 over every graph on at most 4 letters is
        // covered by the acceptance suite; here a sample of graphs.
        for g in [p3(), ab_c(), p4()] {
            let words: Vec<Vec<Letter>> = all_words(&g, 4);
            for u in &words {
                let nu = Trace::normalize(&g, u).unwrap();
                for v in words.iter().filter(|v| v.len() == u.len()) {
                    let nv = Trace::normalize(&g, v).unwrap();
                    assert_eq!(nu == nv, equivalent(&g, u, v).unwrap());
                }
            }
        }
    }

    fn all_words(g: &IndependenceAlphabet, n: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &layer {
                for l in g.letters() {
                    let mut v: Vec<Letter> = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn initial_and_terminal_alphabets() {
        let g = p3();
        assert_eq!(t(&g, "bc").initial_alphabet(), [1, 2].into_iter().collect());
        assert_eq!(t(&g, "ac").initial_alphabet(), [0].into_iter().collect());
        assert_eq!(t(&g, "ac").terminal_alphabet(), [2].into_iter().collect());
        assert!(Trace::empty(&g).initial_alphabet().is_empty());
    }

    #[test]
    fn left_divide_examples() {
        let g = alpha("letters a b\nedge a b");
        assert_eq!(t(&g, "ab").left_divide(1), Some(t(&g, "a")));
        let p3 = p3();
        assert_eq!(t(&p3, "ac").left_divide(2), None);
        assert_eq!(Trace::empty(&p3).left_divide(0), None);
    }

    #[test]
    fn enumerate_counts() {
        let h = ab_c();
        assert_eq!(enumerate_traces(&h, 2).len(), 12);
        let free = alpha("letters a b c");
        assert_eq!(enumerate_traces(&free, 2).len(), 13);
        let p4 = p4();
        let all = enumerate_traces(&p4, 3);
        let counts: Vec<usize> = (0..=3).map(|k| all.iter().filter(|x| x.len() == k).count()).collect();
        assert_eq!(counts, vec![1, 4, 13, 40]);
        // Recurrence from 1/(1 - 4t + 3t^2).
        let mut c = vec![1i64, 4];
        for k in 2..=6 {
            let next = 4 * c[k - 1] - 3 * c[k - 2];
            c.push(next);
        }
        let all6 = enumerate_traces(&p4, 6);
        for (k, &expected) in c.iter().enumerate() {
            assert_eq!(all6.iter().filter(|x| x.len() == k).count() as i64, expected);
        }
    }

    #[test]
    fn enumerate_is_sorted_unique_and_closed_under_left_division() {
        let g = p4();
        let all = enumerate_traces(&g, 5);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let set: BTreeSet<Trace> = all.iter().cloned().collect();
        for x in &all {
            for a in x.initial_alphabet() {
                assert!(set.contains(&x.left_divide(a).unwrap()));
            }
        }
    }

    #[test]
    fn levi_examples() {
        let g = ab_c();
        let w = t(&g, "ab");
        let x = t(&g, "c");
        let f = levi_factor(&w, &x, &w, &x).unwrap();
        assert_eq!((f.p.clone(), f.s.is_empty(), f.r.is_empty(), f.q.clone()), (w.clone(), true, true, x.clone()));

        let f = levi_factor(&t(&g, "a"), &t(&g, "bc"), &t(&g, "b"), &t(&g, "ac")).unwrap();
        assert!(f.p.is_empty());
        assert_eq!(f.s, t(&g, "a"));
        assert_eq!(f.r, t(&g, "b"));
        assert_eq!(f.q, t(&g, "c"));

        let e = Trace::empty(&g);
        let f = levi_factor(&e, &t(&g, "abc"), &t(&g, "a"), &t(&g, "bc")).unwrap();
        assert!(f.p.is_empty() && f.s.is_empty());
        assert_eq!(f.r, t(&g, "a"));
        assert_eq!(f.q, t(&g, "bc"));

        assert!(matches!(
            levi_factor(&t(&g, "a"), &e, &t(&g, "b"), &e),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn left_divisors_of_commuting_pair() {
        let g = alpha("letters a b\nedge a b");
        let d: Vec<String> = t(&g, "ab").left_divisors().iter().map(|x| x.to_string()).collect();
        assert_eq!(d, vec!["1", "a", "b", "ab"]);
    }

    fn graph_and_words() -> impl Strategy<Value = (IndependenceAlphabet, Vec<Letter>, Vec<Letter>, Vec<Letter>)> {
        (2usize..=4)
            .prop_flat_map(|n| {
                let pairs = n * (n - 1) / 2;
                (
                    Just(n),
                    proptest::collection::vec(any::<bool>(), pairs),
                    proptest::collection::vec(0..n as Letter, 0..6),
                    proptest::collection::vec(0..n as Letter, 0..6),
                    proptest::collection::vec(0..n as Letter, 0..6),
                )
            })
            .prop_map(|(n, bits, u, v, w)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        if bits[k] {
                            edges.push((i as Letter, j as Letter));
                        }
                        k += 1;
                    }
                }
                let names = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
                (IndependenceAlphabet::from_parts(names, &edges), u, v, w)
            })
    }

    proptest! {
        #[test]
        fn monoid_laws((g, u, v, w) in graph_and_words()) {
            let (u, v, w) = (
                Trace::normalize(&g, &u).unwrap(),
                Trace::normalize(&g, &v).unwrap(),
                Trace::normalize(&g, &w).unwrap(),
            );
            let uv = u.concat(&v).unwrap();
            prop_assert_eq!(uv.concat(&w).unwrap(), u.concat(&v.concat(&w).unwrap()).unwrap());
            prop_assert_eq!(uv.len(), u.len() + v.len());
            let mut alph = u.alph();
            alph.extend(v.alph());
            prop_assert_eq!(uv.alph(), alph);
            let e = Trace::empty(&g);
            prop_assert_eq!(e.concat(&u).unwrap(), u.clone());
        }

        #[test]
        fn left_division_matches_initial_alphabet((g, u, _v, _w) in graph_and_words()) {
            let u = Trace::normalize(&g, &u).unwrap();
            let ia = u.initial_alphabet();
            for a in g.letters() {
                let d = u.left_divide(a);
                prop_assert_eq!(d.is_some(), ia.contains(&a));
                if let Some(d) = d {
                    prop_assert_eq!(Trace::letter(&g, a).concat(&d).unwrap(), u.clone());
                }
            }
            for &a in &ia {
                for &b in &ia {
                    prop_assert!(a == b || g.commute(a, b));
                }
            }
        }

        #[test]
        fn levi_recombines((g, u, v, w) in graph_and_words()) {
            // Split one product two ways.
            let whole: Vec<Letter> = u.iter().chain(&v).chain(&w).copied().collect();
            let cut1 = u.len();
            let cut2 = u.len() + v.len();
            let w1 = Trace::normalize(&g, &whole[..cut1]).unwrap();
            let t1 = Trace::normalize(&g, &whole[cut1..]).unwrap();
            let w2 = Trace::normalize(&g, &whole[..cut2]).unwrap();
            let t2 = Trace::normalize(&g, &whole[cut2..]).unwrap();
            let f = levi_factor(&w1, &t1, &w2, &t2).unwrap();
            prop_assert_eq!(f.p.concat(&f.s).unwrap(), w1.clone());
            prop_assert_eq!(f.r.concat(&f.q).unwrap(), t1.clone());
            prop_assert_eq!(f.p.concat(&f.r).unwrap(), w2.clone());
            prop_assert_eq!(f.s.concat(&f.q).unwrap(), t2.clone());
            for a in f.r.alph() {
                for b in f.s.alph() {
                    prop_assert!(g.commute(a, b));
                }
            }
            let psrq = f.p.concat(&f.s).unwrap().concat(&f.r).unwrap().concat(&f.q).unwrap();
            let prsq = f.p.concat(&f.r).unwrap().concat(&f.s).unwrap().concat(&f.q).unwrap();
            prop_assert_eq!(psrq.clone(), prsq);
            prop_assert_eq!(psrq, w1.concat(&t1).unwrap());
        }
    }
}
