//! Isomorph-free generation of connected graphs and trees.
//!
//! Every connected graph on `n + 1` vertices arises from a connected graph on `n` vertices
//! by adding a vertex joined to a non-empty set of old vertices (remove any vertex that is
//! not a cut vertex). Candidates are deduplicated by canonical code. Trees grow by leaves.
//! Results are sorted by canonical code, so the order is deterministic.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::canon::{canonical_code, decode, masks};
use crate::error::{param, Result};
use crate::graph::Graph;

/// Largest order for [`connected_codes`].
pub const MAX_CONNECTED: usize = 9;
/// Largest order for [`tree_codes`].
pub const MAX_TREE: usize = 14;
/// Largest order for [`hereditary_codes`].
pub const MAX_HEREDITARY: usize = 14;

fn with_vertex(g: &Graph, subset: u32) -> Graph {
    let n = g.order();
    let mut h = g.clone();
    let v = h.add_vertex();
    for u in 0..n {
        if subset >> u & 1 == 1 {
            h.add_edge(u, v);
        }
    }
    h
}

/// Grows every parent by one vertex in all ways allowed by `degrees` (bounds on the new
/// vertex's degree), keeping children accepted by `keep`.
fn grow(
    parents: &[u128],
    n: usize,
    degrees: core::ops::RangeInclusive<u32>,
    mut keep: impl FnMut(&Graph) -> bool,
) -> Vec<u128> {
    let mut seen = BTreeSet::new();
    let mut rejected = BTreeSet::new();
    for &code in parents {
        let g = decode(n, code);
        for subset in 1u32..(1 << n) {
            if !degrees.contains(&subset.count_ones()) {
                continue;
            }
            let h = with_vertex(&g, subset);
            let c = canonical_code(&h);
            if seen.contains(&c) || rejected.contains(&c) {
                continue;
            }
            if keep(&h) {
                seen.insert(c);
            } else {
                rejected.insert(c);
            }
        }
    }
    seen.into_iter().collect()
}

/// Canonical codes of all connected graphs on `n` vertices, ascending.
pub fn connected_codes(n: usize) -> Result<Vec<u128>> {
    if n == 0 || n > MAX_CONNECTED {
        return Err(param(format!(
            "connected graphs are enumerated for 1 <= n <= {MAX_CONNECTED}"
        )));
    }
    let mut level = alloc::vec![0u128];
    for k in 1..n {
        level = grow(&level, k, 1..=k as u32, |_| true);
    }
    Ok(level)
}

/// Canonical codes of all trees on `n` vertices, ascending.
pub fn tree_codes(n: usize) -> Result<Vec<u128>> {
    if n == 0 || n > MAX_TREE {
        return Err(param(format!(
            "trees are enumerated for 1 <= n <= {MAX_TREE}"
        )));
    }
    let mut level = alloc::vec![0u128];
    for k in 1..n {
        level = grow(&level, k, 1..=1, |_| true);
    }
    Ok(level)
}

/// Canonical codes of the connected graphs on `n` vertices satisfying `keep`, for a
/// property inherited by connected induced subgraphs (such as a bound on the adjacency
/// index). Codes for every order `1..=n` are returned, indexed by order minus one.
///
/// The new vertex's degree is capped at `max_degree` and so must every graph's be.
pub fn hereditary_codes(
    n: usize,
    max_degree: usize,
    mut keep: impl FnMut(&Graph) -> bool,
) -> Result<Vec<Vec<u128>>> {
    if n == 0 || n > MAX_HEREDITARY {
        return Err(param(format!(
            "hereditary classes are enumerated for 1 <= n <= {MAX_HEREDITARY}"
        )));
    }
    let mut out = alloc::vec![alloc::vec![0u128]];
    for k in 1..n {
        let cap = max_degree.min(k) as u32;
        let next = grow(&out[k - 1], k, 1..=cap, |h| {
            masks(h)
                .iter()
                .all(|m| m.count_ones() as usize <= max_degree)
                && keep(h)
        });
        out.push(next);
    }
    Ok(out)
}

/// All connected graphs on `n` vertices, one per isomorphism class.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(connected_codes(n)?.into_iter().map(move |c| decode(n, c)))
}

/// All trees on `n` vertices, one per isomorphism class.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(tree_codes(n)?.into_iter().map(move |c| decode(n, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::adjacency_radius;

    #[test]
    fn connected_counts() {
        let want = [1, 1, 2, 6, 21, 112, 853];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(connected_codes(i + 1).unwrap().len(), w, "n = {}", i + 1);
        }
        assert!(connected_codes(10).is_err());
        assert!(connected_codes(0).is_err());
    }

    #[test]
    fn tree_counts() {
        let want = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(tree_codes(i + 1).unwrap().len(), w, "n = {}", i + 1);
        }
    }

    #[test]
    fn streams_are_connected_and_sorted() {
        let gs: Vec<Graph> = enumerate_connected(5).unwrap().collect();
        assert!(gs.iter().all(Graph::is_connected));
        let codes = connected_codes(5).unwrap();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        assert!(enumerate_trees(6).unwrap().all(|t| t.is_tree()));
    }

    #[test]
    fn hereditary_class_matches_filtered_sweep() {
        let bound = |g: &Graph| adjacency_radius(g) < 2.0 - 1e-9;
        let levels = hereditary_codes(7, 3, bound).unwrap();
        for n in 1..=7 {
            let direct = connected_codes(n)
                .unwrap()
                .into_iter()
                .filter(|&c| bound(&decode(n, c)))
                .count();
            assert_eq!(levels[n - 1].len(), direct, "n = {n}");
        }
    }
}
