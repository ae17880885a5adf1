//! Independence alphabets `(A, θ)` and the relations derived from them.
//!
//! An [`IndependenceAlphabet`] is a cheap, shareable handle: cloning it
//! clones an `Arc`. The declaration order of the letters is the total order
//! used for every normal form and every tie-break in the crate.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::trace::Trace;

/// Index of a letter inside its alphabet.
pub type Letter = u16;

/// A set of letters of one alphabet.
pub type LetterSet = BTreeSet<Letter>;

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    names: Vec<String>,
    index: HashMap<String, Letter>,
    /// Row-major `n × n` independence matrix.
    indep: Vec<bool>,
}

/// A finite alphabet with an antireflexive, symmetric independence relation.
#[derive(Clone)]
pub struct IndependenceAlphabet {
    inner: Arc<Inner>,
}

impl PartialEq for IndependenceAlphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for IndependenceAlphabet {}

impl fmt::Debug for IndependenceAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", self.name(a), self.name(b)))
            .collect();
        f.debug_struct("IndependenceAlphabet")
            .field("letters", &self.inner.names)
            .field("theta", &edges)
            .finish()
    }
}

/// Names must survive the text formats: no whitespace, no apostrophe (group
/// inverses), no quote, no separators used by plans and comments.
pub fn valid_letter_name(name: &str) -> bool {
    !name.is_empty()
        && name != "1"
        && name
            .chars()
            .all(|c| !c.is_whitespace() && !c.is_control() && !"'\"#;,".contains(c))
}

impl IndependenceAlphabet {
    /// Builds an alphabet from letter names (in order) and independence edges.
    pub fn new<S: AsRef<str>>(letters: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut names = Vec::with_capacity(letters.len());
        let mut index = HashMap::new();
        for l in letters {
            let l = l.as_ref();
            if !valid_letter_name(l) {
                return Err(Error::InvalidLetterName(l.to_string()));
            }
            if index.insert(l.to_string(), names.len() as Letter).is_some() {
                return Err(Error::DuplicateLetter(l.to_string()));
            }
            names.push(l.to_string());
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::UnknownLetter(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownLetter(b.to_string()))?;
            if ia == ib {
                return Err(Error::LoopEdge(a.to_string()));
            }
            pairs.push((ia, ib));
        }
        Ok(Self::from_parts(names, &pairs))
    }

    /// Builds an alphabet without validating names. Pairs must not be loops.
    pub(crate) fn from_parts(names: Vec<String>, pairs: &[(Letter, Letter)]) -> Self {
        let n = names.len();
        let mut indep = vec![false; n * n];
        for &(a, b) in pairs {
            debug_assert_ne!(a, b);
            indep[a as usize * n + b as usize] = true;
            indep[b as usize * n + a as usize] = true;
        }
        Self::from_matrix(names, indep)
    }

    /// Builds an alphabet from a symmetric row-major independence matrix
    /// with a false diagonal, without validating names.
    pub(crate) fn from_matrix(names: Vec<String>, indep: Vec<bool>) -> Self {
        assert!(names.len() <= Letter::MAX as usize, "alphabet too large");
        debug_assert_eq!(indep.len(), names.len() * names.len());
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as Letter))
            .collect();
        IndependenceAlphabet {
            inner: Arc::new(Inner { names, index, indep }),
        }
    }

    /// Reads the line-oriented alphabet file format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters: Option<Vec<String>> = None;
        let mut edges: Vec<(String, String)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap_or_default();
            let args: Vec<&str> = words.collect();
            let parse_err = |message: String| Error::Parse { line: line_no, message };
            match keyword {
                "letters" => {
                    if letters.is_some() {
                        return Err(parse_err("second `letters` line".into()));
                    }
                    if args.is_empty() {
                        return Err(parse_err("`letters` needs at least one letter".into()));
                    }
                    letters = Some(args.iter().map(|s| s.to_string()).collect());
                }
                "edge" => {
                    if letters.is_none() {
                        return Err(parse_err("`letters` must come first".into()));
                    }
                    if args.len() != 2 {
                        return Err(parse_err(format!(
                            "`edge` takes two letters, got {}",
                            args.len()
                        )));
                    }
                    edges.push((args[0].to_string(), args[1].to_string()));
                }
                other => return Err(parse_err(format!("unknown keyword `{other}`"))),
            }
        }
        let letters = letters.ok_or(Error::Parse {
            line: 0,
            message: "missing `letters` line".into(),
        })?;
        Self::new(&letters, &edges)
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.inner.names[l as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.inner.index.get(name).copied()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(|i| i as Letter)
    }

    /// `(a, b) ∈ θ`.
    #[inline]
    pub fn commute(&self, a: Letter, b: Letter) -> bool {
        self.inner.indep[a as usize * self.len() + b as usize]
    }

    /// The independence edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(Letter, Letter)> {
        let mut out = Vec::new();
        for a in self.letters() {
            for b in (a + 1)..self.len() as Letter {
                if self.commute(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Pairs of distinct letters that do NOT commute, `(a, b)` with `a < b`.
    pub fn dependence_graph(&self) -> Vec<(Letter, Letter)> {
        let mut out = Vec::new();
        for a in self.letters() {
            for b in (a + 1)..self.len() as Letter {
                if !self.commute(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Resolves a list of letter names.
    pub fn letter_set<S: AsRef<str>>(&self, names: &[S]) -> Result<LetterSet> {
        names
            .iter()
            .map(|n| {
                self.letter(n.as_ref())
                    .ok_or_else(|| Error::UnknownLetter(n.as_ref().to_string()))
            })
            .collect()
    }

    /// Parses a subset given as letters separated by commas and/or spaces.
    pub fn parse_letter_set(&self, text: &str) -> Result<LetterSet> {
        let names: Vec<&str> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        self.letter_set(&names)
    }

    /// `A − B`.
    pub fn complement(&self, set: &LetterSet) -> LetterSet {
        self.letters().filter(|l| !set.contains(l)).collect()
    }

    /// The sub-alphabet `(B, θ ∩ B×B)`, letters in inherited order.
    ///
    /// The result is a new alphabet; letter indices are renumbered.
    pub fn restrict(&self, subset: &LetterSet) -> Result<Self> {
        if let Some(&bad) = subset.iter().find(|&&l| l as usize >= self.len()) {
            return Err(Error::UnknownLetter(format!("#{bad}")));
        }
        let kept: Vec<Letter> = subset.iter().copied().collect();
        let names = kept.iter().map(|&l| self.name(l).to_string()).collect();
        let mut pairs = Vec::new();
        for (i, &a) in kept.iter().enumerate() {
            for (j, &b) in kept.iter().enumerate().skip(i + 1) {
                if self.commute(a, b) {
                    pairs.push((i as Letter, j as Letter));
                }
            }
        }
        Ok(Self::from_parts(names, &pairs))
    }

    /// All pairwise independent letter subsets (∅ included), ordered by size
    /// then lexicographically.
    pub fn independent_cliques(&self) -> Vec<Vec<Letter>> {
        fn extend(
            alpha: &IndependenceAlphabet,
            current: &mut Vec<Letter>,
            start: Letter,
            out: &mut Vec<Vec<Letter>>,
        ) {
            out.push(current.clone());
            for l in start..alpha.len() as Letter {
                if current.iter().all(|&c| alpha.commute(c, l)) {
                    current.push(l);
                    extend(alpha, current, l + 1, out);
                    current.pop();
                }
            }
        }
        let mut out = Vec::new();
        extend(self, &mut Vec::new(), 0, &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Splits text into letters. Whitespace separates tokens; inside a token
    /// letters are concatenated. The token `1` denotes the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" && self.letter("1").is_none() {
                continue;
            }
            out.extend(self.segment(token)?);
        }
        Ok(out)
    }

    fn segment(&self, token: &str) -> Result<Vec<Letter>> {
        let bytes = token.as_bytes();
        let n = bytes.len();
        // ways[i]: number of segmentations of token[i..] (capped at 2);
        // choice[i]: letter starting a segmentation at i.
        let mut ways = vec![0u8; n + 1];
        let mut choice: Vec<Option<(Letter, usize)>> = vec![None; n + 1];
        ways[n] = 1;
        for i in (0..n).rev() {
            if !token.is_char_boundary(i) {
                continue;
            }
            for (l, name) in self.inner.names.iter().enumerate() {
                let end = i + name.len();
                if end <= n && token.is_char_boundary(end) && &token[i..end] == name && ways[end] > 0 {
                    ways[i] = (ways[i] + ways[end]).min(2);
                    if choice[i].is_none() {
                        choice[i] = Some((l as Letter, end));
                    }
                }
            }
        }
        match ways[0] {
            0 => Err(Error::BadWord(token.to_string())),
            1 => {
                let mut out = Vec::new();
                let mut i = 0;
                while i < n {
                    let (l, end) = choice[i].expect("segmentation recorded");
                    out.push(l);
                    i = end;
                }
                Ok(out)
            }
            _ => Err(Error::AmbiguousWord(token.to_string())),
        }
    }

    /// Renders a word: concatenated when every letter name is one character,
    /// space separated otherwise. The empty word renders as `1`.
    pub fn format_word(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let sep = if word.iter().all(|&l| self.name(l).chars().count() == 1) {
            ""
        } else {
            " "
        };
        word.iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Renders a word with letters always separated by spaces.
    pub fn format_word_spaced(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for IndependenceAlphabet {
    /// Writes the alphabet in its file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "letters")?;
        for name in &self.inner.names {
            write!(f, " {name}")?;
        }
        writeln!(f)?;
        for (a, b) in self.edges() {
            writeln!(f, "edge {} {}", self.name(a), self.name(b))?;
        }
        Ok(())
    }
}

/// A set of generator traces `X` with the induced relation `θ_X`:
/// `x₁ θ_X x₂` iff every letter of `x₁` commutes with every letter of `x₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedAlphabet {
    base: IndependenceAlphabet,
    generators: Vec<Trace>,
    /// Generators are grouped by their letter sets; `θ_X` only depends on
    /// the groups.
    class_of: Vec<usize>,
    class_indep: Vec<Vec<bool>>,
    /// Whether the generator set is known to contain every generator, not
    /// just those up to the enumeration bound.
    complete: bool,
}

impl DerivedAlphabet {
    /// Builds the derived alphabet over `generators`, sorting them by
    /// (length, normal form) and dropping duplicates.
    pub fn new(base: &IndependenceAlphabet, generators: Vec<Trace>, complete: bool) -> Result<Self> {
        let mut generators = generators;
        for g in &generators {
            if g.alphabet() != base {
                return Err(Error::AlphabetMismatch);
            }
            if g.is_empty() {
                return Err(Error::EmptyTrace);
            }
        }
        generators.sort();
        generators.dedup();
        let mut classes: Vec<LetterSet> = Vec::new();
        let mut lookup: HashMap<LetterSet, usize> = HashMap::new();
        let class_of: Vec<usize> = generators
            .iter()
            .map(|g| {
                *lookup.entry(g.alph()).or_insert_with_key(|k| {
                    classes.push(k.clone());
                    classes.len() - 1
                })
            })
            .collect();
        let class_indep: Vec<Vec<bool>> = classes
            .iter()
            .map(|x| {
                classes
                    .iter()
                    .map(|y| x.iter().all(|&a| y.iter().all(|&b| base.commute(a, b))))
                    .collect()
            })
            .collect();
        Ok(DerivedAlphabet {
            base: base.clone(),
            generators,
            class_of,
            class_indep,
            complete,
        })
    }

    /// The base letters as a derived alphabet.
    pub fn letters_of(base: &IndependenceAlphabet) -> Self {
        let gens = base.letters().map(|l| Trace::letter(base, l)).collect();
        Self::new(base, gens, true).expect("letters are nonempty traces")
    }

    pub fn base(&self) -> &IndependenceAlphabet {
        &self.base
    }

    pub fn generators(&self) -> &[Trace] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Pairs `(i, j)`, `i < j`, of independent generators.
    pub fn relation(&self) -> BTreeSet<(usize, usize)> {
        let n = self.generators.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.related(i, j))
            .collect()
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        i != j && self.class_indep[self.class_of[i]][self.class_of[j]]
    }

    /// No two generators commute.
    pub fn is_free(&self) -> bool {
        let n = self.class_indep.len();
        // a class is never independent of itself (it has letters), so only
        // distinct classes can hold related generators
        (0..n).all(|i| (0..n).all(|j| !self.class_indep[i][j]))
    }

    /// Every two distinct generators commute.
    pub fn is_commutative(&self) -> bool {
        let n = self.generators.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.related(i, j)))
    }

    pub fn position(&self, t: &Trace) -> Option<usize> {
        self.generators.binary_search(t).ok()
    }

    /// Generators whose length does not exceed `maxlen`.
    pub fn truncate(&self, maxlen: usize) -> Self {
        let gens = self
            .generators
            .iter()
            .filter(|g| g.len() <= maxlen)
            .cloned()
            .collect();
        let complete = self.complete && self.generators.iter().all(|g| g.len() <= maxlen);
        Self::new(&self.base, gens, complete).expect("subset of valid generators")
    }

    /// The generators viewed as abstract letters: an independence alphabet
    /// whose letter `i` is generator `i` and whose relation is `θ_X`.
    pub fn as_alphabet(&self) -> IndependenceAlphabet {
        let names = self.generators.iter().map(|g| g.to_string()).collect();
        let n = self.generators.len();
        let indep = (0..n * n).map(|k| self.related(k / n, k % n)).collect();
        IndependenceAlphabet::from_matrix(names, indep)
    }

    /// Base length of each generator, indexed like the generators.
    pub fn weights(&self) -> Vec<usize> {
        self.generators.iter().map(Trace::len).collect()
    }
}

/// `θ_X` for a finite set of nonempty traces.
pub fn derived_independence(alpha: &IndependenceAlphabet, traces: &[Trace]) -> Result<DerivedAlphabet> {
    DerivedAlphabet::new(alpha, traces.to_vec(), true)
}
