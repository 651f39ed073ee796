//! Graph compositions used by the compound-graph limits.

use alloc::format;

use super::Graph;
use crate::error::{param, Result};

fn check_vertex(g: &Graph, v: usize, what: &str) -> Result<()> {
    if v < g.order() {
        Ok(())
    } else {
        Err(param(format!("{what} vertex {v} outside 0..{}", g.order())))
    }
}

/// Disjoint union of `g1` and `g2` plus the edge `u v`. Vertices of `g2` come after `g1`.
pub fn join_graphs(g1: &Graph, u: usize, g2: &Graph, v: usize) -> Result<Graph> {
    check_vertex(g1, u, "first")?;
    check_vertex(g2, v, "second")?;
    let mut g = g1.disjoint_union(g2);
    g.add_edge(u, g1.order() + v);
    Ok(g)
}

/// How many pendant paths [`compound`] attaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CompoundKind {
    OnePath,
    TwoPaths,
}

/// Attaches one or two pendant paths of `n` vertices at `u`.
///
/// New vertices are appended path by path, each path starting at the vertex adjacent to `u`.
pub fn compound(g: &Graph, u: usize, kind: CompoundKind, n: usize) -> Result<Graph> {
    check_vertex(g, u, "attachment")?;
    if n == 0 {
        return Err(param("pendant paths need at least one vertex"));
    }
    let copies = match kind {
        CompoundKind::OnePath => 1,
        CompoundKind::TwoPaths => 2,
    };
    let mut out = g.clone();
    for _ in 0..copies {
        let mut prev = u;
        for _ in 0..n {
            let w = out.add_vertex();
            out.add_edge(prev, w);
            prev = w;
        }
    }
    Ok(out)
}

/// Joins `x` in `X` to `y` in `Y` by a path with `n` internal vertices.
///
/// Labels: `X` first, then the internal vertices from the `x` side, then `Y`.
pub fn xy_bridge(xg: &Graph, x: usize, yg: &Graph, y: usize, n: usize) -> Result<Graph> {
    check_vertex(xg, x, "first")?;
    check_vertex(yg, y, "second")?;
    let mut g = xg.clone();
    let mut prev = x;
    for _ in 0..n {
        let w = g.add_vertex();
        g.add_edge(prev, w);
        prev = w;
    }
    let off = g.order();
    let mut g = g.disjoint_union(yg);
    g.add_edge(prev, off + y);
    Ok(g)
}

/// Replaces the edge `u v` by a path `u w v` through a new vertex `w = n`.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let mut out = g.remove_edge(u, v)?;
    let w = out.add_vertex();
    out.add_edge(u, w);
    out.add_edge(w, v);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::build_simple;
    use crate::graph::FamilySpec;
    use alloc::vec;

    fn path(n: usize) -> Graph {
        build_simple(&FamilySpec::Path(n)).unwrap()
    }

    #[test]
    fn joins_build_paths() {
        assert_eq!(join_graphs(&path(1), 0, &path(1), 0).unwrap(), path(2));
        assert_eq!(join_graphs(&path(2), 1, &path(2), 0).unwrap(), path(4));
        assert!(join_graphs(&path(2), 2, &path(1), 0).is_err());
    }

    #[test]
    fn claw_join_path_is_dagger() {
        let claw = build_simple(&FamilySpec::Star(3)).unwrap();
        let g = join_graphs(&claw, 0, &path(3), 0).unwrap();
        assert_eq!(g, build_simple(&FamilySpec::Dagger(3)).unwrap());
    }

    #[test]
    fn compound_sizes() {
        let k2 = path(2);
        assert_eq!(compound(&k2, 1, CompoundKind::OnePath, 3).unwrap(), path(5));
        let claw = build_simple(&FamilySpec::Star(3)).unwrap();
        assert_eq!(
            compound(&claw, 0, CompoundKind::OnePath, 1).unwrap(),
            build_simple(&FamilySpec::Star(4)).unwrap()
        );
        let g = compound(&path(3), 1, CompoundKind::TwoPaths, 1).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.degree_sequence(), vec![4, 1, 1, 1, 1]);
        let g = compound(&claw, 1, CompoundKind::TwoPaths, 4).unwrap();
        assert_eq!(g.order(), 4 + 8);
    }

    #[test]
    fn bridges() {
        let k1 = path(1);
        assert_eq!(xy_bridge(&k1, 0, &k1, 0, 0).unwrap(), path(2));
        assert_eq!(xy_bridge(&k1, 0, &k1, 0, 3).unwrap(), path(5));
        let claw = build_simple(&FamilySpec::Star(3)).unwrap();
        let g = xy_bridge(&claw, 0, &claw, 0, 2).unwrap();
        assert_eq!((g.order(), g.size()), (10, 9));
    }

    #[test]
    fn subdivision_adds_a_vertex() {
        let c = build_simple(&FamilySpec::Cycle(4)).unwrap();
        let s = subdivide_edge(&c, 0, 1).unwrap();
        assert_eq!(
            s,
            build_simple(&FamilySpec::Cycle(5))
                .unwrap()
                .permuted(&[0, 4, 1, 2, 3])
        );
        assert!(subdivide_edge(&c, 0, 2).is_err());
    }
}
