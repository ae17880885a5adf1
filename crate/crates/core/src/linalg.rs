//! Exact rank computations over the rationals.
//!
//! Rows are sparse integer vectors; elimination is fraction-free with the
//! content of every row divided out to keep entries small.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::series::{Key, TracePolynomial};

/// Sparse row indexed by an ordered column type.
pub type SparseRow<C> = BTreeMap<C, BigInt>;

/// Incrementally maintained echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct Echelon<C: Ord + Clone> {
    pivots: BTreeMap<C, SparseRow<C>>,
}

impl<C: Ord + Clone> Default for Echelon<C> {
    fn default() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }
}

fn make_primitive<C: Ord>(row: &mut SparseRow<C>) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let negate = row.values().next().is_some_and(|v| v.is_negative());
    if g > BigInt::one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
    if negate {
        for v in row.values_mut() {
            *v = -&*v;
        }
    }
}

impl<C: Ord + Clone> Echelon<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current basis; the result is zero iff the
    /// row lies in the span.
    pub fn reduce(&self, mut row: SparseRow<C>) -> SparseRow<C> {
        row.retain(|_, v| !v.is_zero());
        let mut floor: Option<C> = None;
        loop {
            let lead = match &floor {
                None => row.keys().next().cloned(),
                Some(f) => row
                    .range((std::ops::Bound::Excluded(f.clone()), std::ops::Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(col) = lead else { return row };
            match self.pivots.get(&col) {
                None => floor = Some(col),
                Some(p) => {
                    let pc = &p[&col];
                    let rc = row[&col].clone();
                    let g = pc.gcd(&rc);
                    let (mp, mr) = (pc / &g, &rc / &g);
                    for v in row.values_mut() {
                        *v *= &mp;
                    }
                    for (k, v) in p {
                        let e = row.entry(k.clone()).or_insert_with(BigInt::zero);
                        *e -= &mr * v;
                        if e.is_zero() {
                            row.remove(k);
                        }
                    }
                    make_primitive(&mut row);
                }
            }
        }
    }

    /// Adds `row` to the basis; returns whether it was independent.
    pub fn insert(&mut self, row: SparseRow<C>) -> bool {
        let mut r = self.reduce(row);
        let Some(col) = r.keys().next().cloned() else {
            return false;
        };
        make_primitive(&mut r);
        self.pivots.insert(col, r);
        true
    }

    pub fn contains(&self, row: SparseRow<C>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Integer row of a polynomial (coefficients cleared of denominators).
pub(crate) fn polynomial_row(p: &TracePolynomial) -> SparseRow<Key> {
    let lcm = p
        .raw_terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    p.raw_terms()
        .map(|(w, c)| (Key(w.to_vec()), (c * &num_rational::BigRational::from(lcm.clone())).to_integer()))
        .collect()
}

/// Rank of a family of polynomials.
pub fn polynomial_rank<'a>(family: impl IntoIterator<Item = &'a TracePolynomial>) -> usize {
    let mut e: Echelon<Key> = Echelon::new();
    for p in family {
        e.insert(polynomial_row(p));
    }
    e.rank()
}

/// Whether the polynomials are linearly independent.
pub fn independent<'a>(family: impl IntoIterator<Item = &'a TracePolynomial>) -> bool {
    let mut e: Echelon<Key> = Echelon::new();
    family.into_iter().all(|p| e.insert(polynomial_row(p)))
}
