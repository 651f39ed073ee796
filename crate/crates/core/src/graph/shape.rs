//! Structural recognizers for the named tree and unicyclic shapes.

use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::error::Result;

/// Which named shapes a connected graph has. Flags are computed independently.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ShapeReport {
    pub path: bool,
    pub cycle: bool,
    pub star: bool,
    /// Leg lengths of a three-legged spider, ascending.
    pub t_shape: Option<[usize; 3]>,
    /// Parameters `(a, b, c)` of a two-centre tree Q_{a,b,c}, with `a <= c`.
    pub h_shape: Option<[usize; 3]>,
    /// `n` when the graph is the double snake W_n.
    pub double_snake: Option<usize>,
    pub open_quipu: bool,
    pub closed_quipu: bool,
    /// Length of the path when the graph is a claw joined to the end of a path.
    pub dagger: Option<usize>,
    pub caterpillar: bool,
}

impl ShapeReport {
    /// True when no named shape applies.
    pub fn none(&self) -> bool {
        *self == ShapeReport::default()
    }
}

/// Lengths of the branches hanging off `center`, where each branch must be a path.
/// Returns `None` if some branch is not a bare path.
fn branch_lengths(g: &Graph, center: usize) -> Option<Vec<usize>> {
    let mut lens = Vec::new();
    for &start in g.neighbors(center) {
        let (mut prev, mut cur, mut len) = (center, start, 1);
        loop {
            match g.degree(cur) {
                1 => break,
                2 => {
                    let next = g.neighbors(cur).iter().copied().find(|&w| w != prev)?;
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                _ => return None,
            }
        }
        lens.push(len);
    }
    Some(lens)
}

/// Walks from `from` along `first` through degree-2 vertices until a vertex of another
/// degree; returns `(endpoint, steps)`.
fn walk(g: &Graph, from: usize, first: usize) -> (usize, usize) {
    let (mut prev, mut cur, mut steps) = (from, first, 1);
    while g.degree(cur) == 2 {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .unwrap();
        prev = cur;
        cur = next;
        steps += 1;
    }
    (cur, steps)
}

/// Repeatedly strips degree-1 vertices not in `keep`; returns the survivors' mask
/// and their degrees inside the remaining subgraph.
fn prune_leaves(g: &Graph, keep: &[bool]) -> (Vec<bool>, Vec<usize>) {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1 && !keep[v]).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 && !keep[w] {
                    stack.push(w);
                }
            }
        }
    }
    (alive, deg)
}

fn t_shape(g: &Graph) -> Option<[usize; 3]> {
    let deg3: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    if deg3.len() != 1 || g.degree(deg3[0]) != 3 {
        return None;
    }
    let mut l = branch_lengths(g, deg3[0])?;
    l.sort_unstable();
    Some([l[0], l[1], l[2]])
}

fn h_shape(g: &Graph) -> Option<[usize; 3]> {
    let big: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    if big.len() != 2 || big.iter().any(|&v| g.degree(v) != 3) {
        return None;
    }
    let (x, y) = (big[0], big[1]);
    let mut bar = None;
    let mut arms = [Vec::new(), Vec::new()];
    for (side, &c) in [x, y].iter().enumerate() {
        for &w in g.neighbors(c) {
            let (end, steps) = walk(g, c, w);
            if end == x || end == y {
                bar = Some(steps);
            } else {
                arms[side].push(steps);
            }
        }
    }
    let b = bar?;
    let mut legs = [0; 2];
    for (side, a) in arms.iter_mut().enumerate() {
        a.sort_unstable();
        if a.len() != 2 || a[0] != 1 {
            return None;
        }
        legs[side] = a[1];
    }
    let (a, c) = (legs[0].min(legs[1]), legs[0].max(legs[1]));
    Some([a, b, c])
}

fn dagger(g: &Graph) -> Option<usize> {
    let big: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    if big.len() != 1 || g.degree(big[0]) != 4 {
        return None;
    }
    let mut l = branch_lengths(g, big[0])?;
    l.sort_unstable();
    (l[0] == 1 && l[1] == 1 && l[2] == 1).then_some(l[3])
}

/// Classifies a connected graph into the named shapes.
pub fn recognize_shape(g: &Graph) -> Result<ShapeReport> {
    g.require_connected()?;
    let n = g.order();
    let m = g.size();
    let tree = m + 1 == n;
    let delta = g.max_degree();
    let mut r = ShapeReport::default();

    if tree {
        r.path = delta <= 2;
        r.star = n >= 2 && (0..n).any(|v| g.degree(v) == n - 1);
        r.t_shape = t_shape(g);
        r.h_shape = h_shape(g);
        if let Some([1, b, 1]) = r.h_shape {
            r.double_snake = Some(b + 5);
        }
        r.dagger = dagger(g);
        // The non-leaf vertices of a tree form a subtree; it must be a path.
        r.caterpillar = (0..n)
            .filter(|&v| g.degree(v) >= 2)
            .all(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 2).count() <= 2);
        if delta <= 3 {
            let keep: Vec<bool> = (0..n).map(|v| g.degree(v) == 3).collect();
            let (alive, deg) = prune_leaves(g, &keep);
            r.open_quipu = (0..n).filter(|&v| alive[v]).all(|v| deg[v] <= 2);
        }
    } else if m == n {
        r.cycle = delta == 2;
        if delta <= 3 {
            let (alive, _) = prune_leaves(g, &vec![false; n]);
            r.closed_quipu = (0..n).filter(|&v| g.degree(v) == 3).all(|v| alive[v]);
        }
    }
    Ok(r)
}

/// Largest shortest-path distance between two vertices.
pub fn diameter(g: &Graph) -> Result<usize> {
    g.require_connected()?;
    Ok((0..g.order())
        .map(|s| g.distances_from(s).into_iter().max().unwrap_or(0))
        .max()
        .unwrap_or(0))
}
