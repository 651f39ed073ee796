//! Graph types: simple, signed, mixed and oriented graphs.
//!
//! Vertices are dense indices `0..n`. Every constructor documents its labeling so that
//! downstream matrices are deterministic.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{param, structure, Result};

mod family;
mod ops;
mod shape;

pub use family::{build_family, build_simple, Family, FamilySpec};
pub use ops::{compound, join_graphs, subdivide_edge, xy_bridge, CompoundKind};
pub use shape::{diameter, recognize_shape, ShapeReport};

/// Undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

#[inline]
pub(crate) fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(param(format!(
                "edge ({u},{v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(param(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(param(format!("repeated edge ({u},{v})")));
        }
        let iu = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(iu, v);
        let iv = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(iv, u);
        Ok(())
    }

    /// Adds an edge; panics on an invalid edge. Used by the family constructors,
    /// which only produce valid edges.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v)
            .expect("constructor produced an invalid edge");
    }

    /// Appends a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(structure("graph is not connected"))
        }
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced on `keep` (in the given order); vertex `keep[i]` becomes `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` deleted; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Graph with the edge `{u, v}` deleted.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(param(format!("no edge ({u},{v})")));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        let off = self.n;
        for _ in 0..other.n {
            g.add_vertex();
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }
}

/// Sign of an edge in a signed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A graph together with a signature on its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SignedGraph {
    base: Graph,
    signs: BTreeMap<(usize, usize), Sign>,
}

impl SignedGraph {
    /// The all-positive signature σ⁺.
    pub fn all_positive(base: Graph) -> Self {
        Self::uniform(base, Sign::Plus)
    }

    /// The all-negative signature σ⁻.
    pub fn all_negative(base: Graph) -> Self {
        Self::uniform(base, Sign::Minus)
    }

    fn uniform(base: Graph, sign: Sign) -> Self {
        let signs = base.edges().map(|e| (e, sign)).collect();
        SignedGraph { base, signs }
    }

    /// Signature given per edge; must cover exactly the edges of `base`.
    pub fn new(base: Graph, signs: BTreeMap<(usize, usize), Sign>) -> Result<Self> {
        let normalized: BTreeMap<_, _> = signs
            .into_iter()
            .map(|((u, v), s)| (edge_key(u, v), s))
            .collect();
        if normalized.len() != base.size() || base.edges().any(|e| !normalized.contains_key(&e)) {
            return Err(param(
                "signature must be defined on exactly the edges of the graph",
            ));
        }
        Ok(SignedGraph {
            base,
            signs: normalized,
        })
    }

    pub fn from_signed_edges(n: usize, edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let plain: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let base = Graph::from_edges(n, &plain)?;
        let signs = edges.iter().map(|&(u, v, s)| (edge_key(u, v), s)).collect();
        Ok(SignedGraph { base, signs })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.signs.get(&edge_key(u, v)).copied()
    }

    /// `(u, v, sign)` with `u < v`.
    pub fn signed_edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.signs.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    pub(crate) fn set_sign(&mut self, u: usize, v: usize, s: Sign) {
        self.signs.insert(edge_key(u, v), s);
    }
}

/// Mixed graph (digraph) given by its arc set; a digon is a pair of opposite arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MixedGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl MixedGraph {
    pub fn new(n: usize) -> Self {
        MixedGraph {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = MixedGraph::new(n);
        for &(u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Adds the arc `u → v`. Adding an arc that already exists is an error.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(param(format!(
                "arc ({u},{v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(param(format!("self-arc at vertex {u}")));
        }
        if !self.arcs.insert((u, v)) {
            return Err(param(format!("repeated arc ({u},{v})")));
        }
        Ok(())
    }

    /// Adds both arcs `u → v` and `v → u`.
    pub fn add_digon(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_arc(u, v)?;
        self.add_arc(v, u)
    }

    /// The all-digon mixed graph of an undirected graph.
    pub fn from_graph(g: &Graph) -> Self {
        let mut m = MixedGraph::new(g.order());
        for (u, v) in g.edges() {
            m.arcs.insert((u, v));
            m.arcs.insert((v, u));
        }
        m
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn is_digon(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn underlying(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for &(u, v) in &self.arcs {
            if !g.has_edge(u, v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Reverses every arc that is not part of a digon.
    pub fn converse(&self) -> MixedGraph {
        let arcs = self
            .arcs
            .iter()
            .map(|&(u, v)| if self.is_digon(u, v) { (u, v) } else { (v, u) })
            .collect();
        MixedGraph { n: self.n, arcs }
    }

    pub(crate) fn from_arc_set(n: usize, arcs: BTreeSet<(usize, usize)>) -> Self {
        MixedGraph { n, arcs }
    }
}

/// A graph with an orientation of every edge.
///
/// The orientation stores, for each edge `{i, j}`, the chosen vertex σ̃(ij) ∈ {i, j}.
/// When σ̃(ij) = j the edge is oriented `i → j`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OrientedGraph {
    base: Graph,
    head: BTreeMap<(usize, usize), usize>,
}

impl OrientedGraph {
    /// Builds an oriented graph from arcs `(tail, head)`.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let plain: Vec<(usize, usize)> = arcs.to_vec();
        let base = Graph::from_edges(n, &plain)?;
        let head = arcs.iter().map(|&(t, h)| (edge_key(t, h), h)).collect();
        Ok(OrientedGraph { base, head })
    }

    /// Orients every edge from the smaller to the larger endpoint.
    pub fn ascending(base: Graph) -> Self {
        let head = base.edges().map(|(u, v)| ((u, v), v)).collect();
        OrientedGraph { base, head }
    }

    /// Orientation given per edge as the chosen endpoint.
    pub fn new(base: Graph, head: BTreeMap<(usize, usize), usize>) -> Result<Self> {
        let normalized: BTreeMap<_, _> = head
            .into_iter()
            .map(|((u, v), h)| (edge_key(u, v), h))
            .collect();
        if normalized.len() != base.size() {
            return Err(param(
                "orientation must be defined on exactly the edges of the graph",
            ));
        }
        for (&(u, v), &h) in &normalized {
            if !base.has_edge(u, v) || (h != u && h != v) {
                return Err(param(format!(
                    "invalid orientation entry for edge ({u},{v})"
                )));
            }
        }
        Ok(OrientedGraph {
            base,
            head: normalized,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The chosen endpoint σ̃(uv), if `{u, v}` is an edge.
    pub fn head(&self, u: usize, v: usize) -> Option<usize> {
        self.head.get(&edge_key(u, v)).copied()
    }

    /// Arcs as `(tail, head)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.head
            .iter()
            .map(|(&(u, v), &h)| if h == v { (u, v) } else { (v, u) })
    }

    /// The mixed-graph view; it contains no digons.
    pub fn as_mixed(&self) -> MixedGraph {
        MixedGraph::from_arc_set(self.base.order(), self.arcs().collect())
    }

    pub(crate) fn set_head(&mut self, u: usize, v: usize, h: usize) {
        self.head.insert(edge_key(u, v), h);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_repeats_and_out_of_range() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(MixedGraph::from_arcs(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn components_and_trees() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!g.is_connected());
        let t = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(t.is_tree());
        assert!(t.is_bipartite());
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_bipartite());
    }

    #[test]
    fn signature_must_match_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let mut s = BTreeMap::new();
        s.insert((0, 1), Sign::Minus);
        assert!(SignedGraph::new(g.clone(), s.clone()).is_err());
        s.insert((2, 1), Sign::Plus);
        let sg = SignedGraph::new(g, s).unwrap();
        assert_eq!(sg.sign(1, 2), Some(Sign::Plus));
    }

    #[test]
    fn converse_keeps_digons() {
        let mut m = MixedGraph::new(3);
        m.add_arc(0, 1).unwrap();
        m.add_digon(1, 2).unwrap();
        let c = m.converse();
        assert!(c.has_arc(1, 0) && !c.has_arc(0, 1));
        assert!(c.is_digon(1, 2));
        assert_eq!(c.converse(), m);
    }

    #[test]
    fn oriented_arcs_follow_head() {
        let o = OrientedGraph::from_arcs(3, &[(0, 1), (2, 1)]).unwrap();
        let arcs: Vec<_> = o.arcs().collect();
        assert_eq!(arcs, vec![(0, 1), (2, 1)]);
        assert_eq!(o.head(1, 0), Some(1));
        assert_eq!(o.as_mixed().arc_count(), 2);
    }
}
