//! Trace polynomials over the rationals, the Möbius polynomial of `(A, θ)`,
//! truncated characteristic series and graded Lie algebra dimensions.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::alphabet::{DerivedAlphabet, IndependenceAlphabet, Letter};
use crate::error::{Error, Result};
use crate::trace::{concat_words, Trace};

/// Exact coefficient type.
pub type Rational = BigRational;

/// A normal-form word ordered by (length, lex).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Key(pub(crate) Vec<Letter>);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of traces with rational coefficients:
/// an element of `K⟨A, θ⟩`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TracePolynomial {
    alphabet: IndependenceAlphabet,
    terms: BTreeMap<Key, Rational>,
}

impl TracePolynomial {
    pub fn zero(alpha: &IndependenceAlphabet) -> Self {
        TracePolynomial {
            alphabet: alpha.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alpha: &IndependenceAlphabet) -> Self {
        Self::monomial(&Trace::empty(alpha), Rational::one())
    }

    pub fn monomial(t: &Trace, coeff: Rational) -> Self {
        let mut p = Self::zero(t.alphabet());
        p.add_term(t.word().to_vec(), coeff);
        p
    }

    pub fn from_trace(t: &Trace) -> Self {
        Self::monomial(t, Rational::one())
    }

    pub fn letter(alpha: &IndependenceAlphabet, l: Letter) -> Self {
        Self::from_trace(&Trace::letter(alpha, l))
    }

    pub(crate) fn from_terms(alpha: &IndependenceAlphabet, terms: impl IntoIterator<Item = (Vec<Letter>, Rational)>) -> Self {
        let mut p = Self::zero(alpha);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, word: Vec<Letter>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = Key(word);
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn alphabet(&self) -> &IndependenceAlphabet {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in (length, lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (Trace, &Rational)> + '_ {
        self.terms
            .iter()
            .map(|(k, c)| (Trace::from_normal_form(&self.alphabet, k.0.clone()), c))
    }

    pub(crate) fn raw_terms(&self) -> impl Iterator<Item = (&[Letter], &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (k.0.as_slice(), c))
    }

    pub fn coefficient(&self, t: &Trace) -> Rational {
        self.terms
            .get(&Key(t.word().to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Largest length of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|k| k.0.len())
    }

    /// Smallest length of a term.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().next().map(|k| k.0.len())
    }

    /// Whether all terms have length `m`.
    pub fn is_homogeneous_of(&self, m: usize) -> bool {
        self.terms.keys().all(|k| k.0.len() == m)
    }

    /// The terms of length exactly `k`.
    pub fn homogeneous_part(&self, k: usize) -> Self {
        TracePolynomial {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| key.0.len() == k)
                .map(|(key, c)| (key.clone(), c.clone()))
                .collect(),
        }
    }

    /// The terms of length at most `n`.
    pub fn truncate(&self, n: usize) -> Self {
        TracePolynomial {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| key.0.len() <= n)
                .map(|(key, c)| (key.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        TracePolynomial {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.0.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_truncated(other, usize::MAX))
    }

    /// Product keeping only terms of length at most `n`.
    pub fn mul_truncated(&self, other: &Self, n: usize) -> Self {
        let mut acc: HashMap<Vec<Letter>, Rational> = HashMap::new();
        for (ka, ca) in &self.terms {
            if ka.0.len() > n {
                break;
            }
            for (kb, cb) in &other.terms {
                if ka.0.len() + kb.0.len() > n {
                    break;
                }
                let w = concat_words(&self.alphabet, &ka.0, &kb.0);
                *acc.entry(w).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        let mut out = Self::zero(&self.alphabet);
        out.terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (Key(w), c))
            .collect();
        out
    }

    /// Inverse as a power series, truncated at length `n`. The constant
    /// term must be nonzero.
    pub fn invert_truncated(&self, n: usize) -> Result<Self> {
        let c0 = self.coefficient(&Trace::empty(&self.alphabet));
        if c0.is_zero() {
            return Err(Error::Precondition("constant term is zero".into()));
        }
        let inv_c0 = c0.recip();
        let parts: Vec<Self> = (0..=n).map(|k| self.homogeneous_part(k)).collect();
        // P·S = 1 graded: c0·S_k = −Σ_{j≥1} P_j·S_{k−j}.
        let mut layers: Vec<Self> = vec![Self::monomial(&Trace::empty(&self.alphabet), inv_c0.clone())];
        for k in 1..=n {
            let mut acc = Self::zero(&self.alphabet);
            for j in 1..=k {
                if parts[j].is_zero() {
                    continue;
                }
                let prod = parts[j].mul_truncated(&layers[k - j], usize::MAX);
                for (key, c) in prod.terms {
                    acc.add_term(key.0, c);
                }
            }
            layers.push(acc.scale(&(-inv_c0.clone())));
        }
        let mut out = Self::zero(&self.alphabet);
        for layer in layers {
            out.terms.extend(layer.terms);
        }
        Ok(out)
    }

    /// Coefficients as tab-separated `coefficient\ttrace` records.
    pub fn machine_format(&self) -> String {
        self.terms()
            .map(|(t, c)| format!("{c}\t{t}"))
            .collect::<Vec<_>>()
            .join("\t")
    }
}

impl fmt::Display for TracePolynomial {
    /// `ac - 2*cac + cca`: terms in (length, lex) order, unit coefficients
    /// elided, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let word = self.alphabet.format_word(&key.0);
            if key.0.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&word)?;
            } else {
                write!(f, "{magnitude}*{word}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TracePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TracePolynomial({self})")
    }
}

impl Add for &TracePolynomial {
    type Output = TracePolynomial;
    fn add(self, rhs: Self) -> TracePolynomial {
        self.try_add(rhs).expect("alphabet mismatch")
    }
}

impl Sub for &TracePolynomial {
    type Output = TracePolynomial;
    fn sub(self, rhs: Self) -> TracePolynomial {
        self.try_sub(rhs).expect("alphabet mismatch")
    }
}

impl Mul for &TracePolynomial {
    type Output = TracePolynomial;
    fn mul(self, rhs: Self) -> TracePolynomial {
        self.try_mul(rhs).expect("alphabet mismatch")
    }
}

impl Neg for &TracePolynomial {
    type Output = TracePolynomial;
    fn neg(self) -> TracePolynomial {
        self.scale(&-Rational::one())
    }
}

/// `P(θ) = Σ_C (−1)^{|C|} C` over the independent cliques `C` of `(A, θ)`.
pub fn mobius_polynomial(alpha: &IndependenceAlphabet) -> TracePolynomial {
    let terms = alpha.independent_cliques().into_iter().map(|c| {
        let sign = if c.len() % 2 == 0 { 1 } else { -1 };
        (c, Rational::from_integer(BigInt::from(sign)))
    });
    TracePolynomial::from_terms(alpha, terms)
}

/// The Möbius polynomial of a derived alphabet `(X, θ_X)`, with every
/// clique expanded as a product of its generator traces in the base monoid.
pub fn mobius_of_derived(level: &DerivedAlphabet) -> TracePolynomial {
    let abstract_alpha = level.as_alphabet();
    let base = level.base();
    let mut p = TracePolynomial::zero(base);
    for clique in abstract_alpha.independent_cliques() {
        let mut w: Vec<Letter> = Vec::new();
        for &g in &clique {
            w = concat_words(base, &w, level.generators()[g as usize].word());
        }
        let sign = if clique.len() % 2 == 0 { 1 } else { -1 };
        p.add_term(w, Rational::from_integer(BigInt::from(sign)));
    }
    p
}

/// Degree-`≤ n` truncation of the characteristic series `Σ t` of
/// `M(A, θ)`, computed by inverting the Möbius polynomial.
pub fn characteristic_series(alpha: &IndependenceAlphabet, n: usize) -> TracePolynomial {
    mobius_polynomial(alpha)
        .invert_truncated(n)
        .expect("Möbius polynomial has constant term 1")
}

/// Number of traces of each length `0..=n`, read off the characteristic
/// series.
pub fn trace_counts(alpha: &IndependenceAlphabet, n: usize) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); n + 1];
    for (t, c) in characteristic_series(alpha, n).terms() {
        counts[t.len()] += c.to_integer();
    }
    counts
}

fn mobius_mu(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Graded dimensions `d_1..d_n` of the free partially commutative Lie
/// algebra, from `1/p(t) = ∏_m (1 − t^m)^{−d_m}` where
/// `p(t) = Σ_C (−1)^{|C|} t^{|C|}` is the length image of the Möbius
/// polynomial.
pub fn witt_dimensions(alpha: &IndependenceAlphabet, n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Precondition("degree bound must be at least 1".into()));
    }
    let mut p = vec![BigInt::zero(); n + 1];
    for c in alpha.independent_cliques() {
        if c.len() <= n {
            let sign = if c.len() % 2 == 0 { 1 } else { -1 };
            p[c.len()] += sign;
        }
    }
    // r = 1/p, then q = −t·p'·r, so q_k = Σ_{m|k} m·d_m.
    let mut r = vec![BigInt::zero(); n + 1];
    r[0] = BigInt::one();
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for j in 1..=k {
            acc -= &p[j] * &r[k - j];
        }
        r[k] = acc;
    }
    let mut q = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for j in 1..=k {
            acc -= BigInt::from(j) * &p[j] * &r[k - j];
        }
        q[k] = acc;
    }
    let mut dims = Vec::with_capacity(n);
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for e in (1..=m).filter(|e| m % e == 0) {
            acc += BigInt::from(mobius_mu(m / e)) * &q[e];
        }
        let m_big = BigInt::from(m);
        if (&acc % &m_big) != BigInt::zero() || acc.is_negative() {
            return Err(Error::Internal(format!(
                "graded dimension at degree {m} is not a nonnegative integer ({acc}/{m})"
            )));
        }
        let d: BigInt = acc / m_big;
        dims.push(u64::try_from(d).map_err(|_| Error::Internal("dimension overflow".into()))?);
    }
    Ok(dims)
}
