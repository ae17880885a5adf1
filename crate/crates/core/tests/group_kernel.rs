//! Bounded generation of the retraction kernel by the conjugates `w̄zw`.

use std::collections::BTreeSet;

use pcelim::group::{extend_alphabet, group_inverse, group_mul, is_reduced, retract, rho_generators, ReducedTrace};
use pcelim::trace::enumerate_traces;
use pcelim::IndependenceAlphabet;

/// Every reduced kernel element of length `≤ n` is a product of at most
/// `factors` conjugates or their inverses.
fn kernel_is_generated(text: &str, subset: &str, n: usize, factors: usize) {
    let alpha = IndependenceAlphabet::parse(text).unwrap();
    let dbl = extend_alphabet(&alpha);
    let b = alpha.parse_letter_set(subset).unwrap();
    let gens = rho_generators(&dbl, &b, 2 * n + 1).unwrap();
    let mut letters: Vec<ReducedTrace> = Vec::new();
    for g in &gens {
        letters.push(g.conj.clone());
        letters.push(group_inverse(&g.conj));
    }
    let mut reached: BTreeSet<ReducedTrace> = BTreeSet::from([dbl.identity()]);
    let mut frontier = reached.clone();
    for _ in 0..factors {
        let mut next = BTreeSet::new();
        for x in &frontier {
            for l in &letters {
                let y = group_mul(x, l);
                // products that grow far past the target length cannot come back
                if y.len() <= 3 * n && reached.insert(y.clone()) {
                    next.insert(y);
                }
            }
        }
        frontier = next;
    }
    for t in enumerate_traces(dbl.alphabet(), n) {
        if !is_reduced(&t) {
            continue;
        }
        let g = dbl.reduce_word(t.word());
        if retract(&dbl, &g, &b).is_empty() {
            assert!(reached.contains(&g), "{g} not reached on {text:?}");
        }
    }
}

#[test]
fn tfsa_path() {
    kernel_is_generated("letters a b c\nedge a b\nedge b c\n", "c", 4, 4);
}

#[test]
fn non_tfsa_example() {
    kernel_is_generated("letters x y c\nedge x y\n", "c", 4, 4);
}
