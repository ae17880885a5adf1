//! Small independence alphabets for exhaustive and randomized checks.

use rand::Rng;

use crate::alphabet::{IndependenceAlphabet, Letter};

/// Letter names `a, b, c, …` for `n ≤ 26`.
pub fn letter_names(n: usize) -> Vec<String> {
    assert!(n <= 26, "at most 26 generated letters");
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Alphabet on `a, b, …` whose independence edges are the pairs selected by
/// `mask` in the order `(0,1), (0,2), …, (1,2), …`.
pub fn from_edge_mask(n: usize, mask: u64) -> IndependenceAlphabet {
    let pairs: Vec<(Letter, Letter)> = pair_list(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, (i, j))| (i as Letter, j as Letter))
        .collect();
    IndependenceAlphabet::from_parts(letter_names(n), &pairs)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices (the least edge mask of its class).
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<IndependenceAlphabet> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 letters");
    let pairs = pair_list(n);
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = k;
        index[j][i] = k;
    }
    let perms = permutations(n);
    let total = 1u64 << pairs.len();
    let mut seen = vec![false; total as usize];
    let mut out = Vec::new();
    for mask in 0..total {
        if seen[mask as usize] {
            continue;
        }
        for p in &perms {
            let mut image = 0u64;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << index[p[i]][p[j]];
                }
            }
            seen[image as usize] = true;
        }
        out.push(from_edge_mask(n, mask));
    }
    out
}

/// All isomorphism classes on `1..=max_letters` letters.
pub fn all_small_graphs(max_letters: usize) -> Vec<IndependenceAlphabet> {
    (1..=max_letters).flat_map(graphs_up_to_isomorphism).collect()
}

/// A uniformly random graph on `n` letters (each edge with probability ½).
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> IndependenceAlphabet {
    let bits = pair_list(n).len();
    let mask = if bits == 0 { 0 } else { rng.gen::<u64>() & ((1u64 << bits) - 1) };
    from_edge_mask(n, mask)
}
