//! Canonical labeling of small graphs.
//!
//! Colour refinement followed by individualization of one vertex at a time in the first
//! non-singleton cell. Among vertices with the same neighbourhood (twins) only one is tried,
//! since swapping twins is an automorphism. The canonical code is the smallest upper-triangle
//! adjacency bit string over all leaves of the search.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Largest order handled by the bitmask representation.
pub const MAX_ORDER: usize = 16;

/// Adjacency rows as bitmasks.
pub(crate) fn masks(g: &Graph) -> Vec<u16> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | (1 << w)))
        .collect()
}

/// Re-ranks `colour` by `(colour, sorted neighbour colours)` until stable.
fn refine(adj: &[u16], colour: &mut [u32]) {
    let n = adj.len();
    let mut classes = distinct(colour);
    loop {
        let mut keyed: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colour[w])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb, v)
            })
            .collect();
        keyed.sort_unstable();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (keyed[i].0 != keyed[i - 1].0 || keyed[i].1 != keyed[i - 1].1) {
                rank += 1;
            }
            colour[keyed[i].2] = rank;
        }
        let now = rank as usize + 1;
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn distinct(colour: &[u32]) -> usize {
    let mut c = colour.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn code_of(adj: &[u16], colour: &[u32]) -> u128 {
    let n = adj.len();
    let mut at = vec![0usize; n];
    for v in 0..n {
        at[colour[v] as usize] = v;
    }
    let mut code = 0u128;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[at[i]] >> at[j] & 1 == 1 {
                code |= 1u128 << bit;
            }
            bit += 1;
        }
    }
    code
}

fn search(adj: &[u16], colour: &mut Vec<u32>, best: &mut Option<(u128, Vec<u32>)>) {
    refine(adj, colour);
    let n = adj.len();
    if distinct(colour) == n {
        let code = code_of(adj, colour);
        if best.as_ref().map_or(true, |(b, _)| code < *b) {
            *best = Some((code, colour.clone()));
        }
        return;
    }
    let mut size = vec![0usize; n];
    for &c in colour.iter() {
        size[c as usize] += 1;
    }
    let target = (0..n).find(|&c| size[c] > 1).unwrap() as u32;
    let cell: Vec<usize> = (0..n).filter(|&v| colour[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        let twin = tried
            .iter()
            .any(|&u| adj[u] & !(1 << v) == adj[v] & !(1 << u));
        if twin {
            continue;
        }
        tried.push(v);
        let mut c: Vec<u32> = colour
            .iter()
            .enumerate()
            .map(|(w, &k)| 2 * k + u32::from(k == target && w != v))
            .collect();
        search(adj, &mut c, best);
    }
}

/// Canonical code and the canonical position of each vertex.
pub fn canonical_labeling(g: &Graph) -> (u128, Vec<usize>) {
    assert!(
        g.order() <= MAX_ORDER,
        "canonical labeling is limited to {MAX_ORDER} vertices"
    );
    let adj = masks(g);
    if adj.is_empty() {
        return (0, Vec::new());
    }
    let mut colour: Vec<u32> = (0..adj.len()).map(|v| adj[v].count_ones()).collect();
    let mut best = None;
    search(&adj, &mut colour, &mut best);
    let (code, pos) = best.unwrap();
    (code, pos.into_iter().map(|p| p as usize).collect())
}

/// Canonical code: two graphs of the same order are isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> u128 {
    canonical_labeling(g).0
}

/// The graph on `n` vertices whose upper-triangle adjacency bits are `code`.
pub fn decode(n: usize, code: u128) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    g
}

/// Relabels `g` canonically.
pub fn canonical_form(g: &Graph) -> Graph {
    let (code, _) = canonical_labeling(g);
    decode(g.order(), code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_simple, FamilySpec};

    #[test]
    fn relabeling_does_not_change_the_code() {
        let g = build_simple(&FamilySpec::HShape(1, 3, 2)).unwrap();
        let c = canonical_code(&g);
        let n = g.order();
        for shift in 1..n {
            let perm: Vec<usize> = (0..n).map(|v| (v + shift) % n).collect();
            assert_eq!(canonical_code(&g.permuted(&perm)), c);
        }
        let rev: Vec<usize> = (0..n).rev().collect();
        assert_eq!(canonical_code(&g.permuted(&rev)), c);
    }

    #[test]
    fn decode_inverts_canonical_form() {
        let g = build_simple(&FamilySpec::Cycle(7)).unwrap();
        let f = canonical_form(&g);
        assert_eq!(canonical_code(&f), canonical_code(&g));
        assert_eq!(f.size(), 7);
    }

    #[test]
    fn distinguishes_cospectral_pair() {
        // K_{1,4} and C_4 + K_1 are cospectral; same order, different codes.
        let star = build_simple(&FamilySpec::Star(4)).unwrap();
        let c4k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_ne!(canonical_code(&star), canonical_code(&c4k1));
    }

    #[test]
    fn symmetric_graphs_finish() {
        let k = build_simple(&FamilySpec::Complete(12)).unwrap();
        assert_eq!(canonical_code(&k).count_ones(), 66);
        let cube = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 3),
                (3, 2),
                (2, 0),
                (4, 5),
                (5, 7),
                (7, 6),
                (6, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        let perm = [3, 6, 0, 5, 1, 7, 2, 4];
        assert_eq!(canonical_code(&cube), canonical_code(&cube.permuted(&perm)));
    }
}
