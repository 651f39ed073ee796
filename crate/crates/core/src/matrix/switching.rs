//! Spectrum-preserving transformations: signed and oriented switching, four-way switching,
//! the converse of a mixed graph, and the bipartite double of an oriented graph.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{param, Error, Result};
use crate::graph::{MixedGraph, OrientedGraph, SignedGraph};

/// Negates the sign of every edge with exactly one endpoint in `u_set`.
pub fn switch_signed(s: &SignedGraph, u_set: &[usize]) -> Result<SignedGraph> {
    let inside = membership(s.base().order(), u_set)?;
    let mut out = s.clone();
    for (u, v, sign) in s.signed_edges() {
        if inside[u] != inside[v] {
            out.set_sign(u, v, sign.flip());
        }
    }
    Ok(out)
}

/// Reverses the orientation of every edge with exactly one endpoint in `u_set`.
pub fn switch_oriented(o: &OrientedGraph, u_set: &[usize]) -> Result<OrientedGraph> {
    let inside = membership(o.base().order(), u_set)?;
    let mut out = o.clone();
    for (t, h) in o.arcs() {
        if inside[t] != inside[h] {
            out.set_head(t, h, t);
        }
    }
    Ok(out)
}

fn membership(n: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(param(format!("vertex {v} outside 0..{n}")));
        }
        inside[v] = true;
    }
    Ok(inside)
}

/// The converse: every arc outside a digon is reversed.
pub fn converse(g: &MixedGraph) -> MixedGraph {
    g.converse()
}

/// Class of a vertex in a four-way partition, labelled by a fourth root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Quarter {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Quarter {
    /// Exponent `k` with the label equal to `i^k`.
    fn exp(self) -> u8 {
        match self {
            Quarter::One => 0,
            Quarter::I => 1,
            Quarter::MinusOne => 2,
            Quarter::MinusI => 3,
        }
    }

    pub fn from_exponent(k: u8) -> Quarter {
        match k % 4 {
            0 => Quarter::One,
            1 => Quarter::I,
            2 => Quarter::MinusOne,
            _ => Quarter::MinusI,
        }
    }

    /// The label as `(re, im)`.
    pub fn value(self) -> (f64, f64) {
        match self {
            Quarter::One => (1.0, 0.0),
            Quarter::I => (0.0, 1.0),
            Quarter::MinusOne => (-1.0, 0.0),
            Quarter::MinusI => (0.0, -1.0),
        }
    }
}

/// Partition `V = V_1 ∪ V_{-1} ∪ V_i ∪ V_{-i}`, stored as one label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FourWayPartition {
    class: Vec<Quarter>,
}

impl FourWayPartition {
    pub fn from_labels(class: Vec<Quarter>) -> Self {
        FourWayPartition { class }
    }

    /// Builds the partition from the four parts, which must be disjoint and cover `0..n`.
    pub fn from_sets(
        n: usize,
        v_one: &[usize],
        v_minus_one: &[usize],
        v_i: &[usize],
        v_minus_i: &[usize],
    ) -> Result<Self> {
        let mut class: Vec<Option<Quarter>> = vec![None; n];
        let parts = [
            (v_one, Quarter::One),
            (v_minus_one, Quarter::MinusOne),
            (v_i, Quarter::I),
            (v_minus_i, Quarter::MinusI),
        ];
        for (set, q) in parts {
            for &v in set {
                if v >= n {
                    return Err(param(format!("vertex {v} outside 0..{n}")));
                }
                if class[v].replace(q).is_some() {
                    return Err(param(format!("vertex {v} appears in two parts")));
                }
            }
        }
        let class = class
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| param(format!("vertex {v} is in no part"))))
            .collect::<Result<_>>()?;
        Ok(FourWayPartition { class })
    }

    pub fn class(&self, v: usize) -> Quarter {
        self.class[v]
    }

    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    /// Checks conditions (a) and (b) against `g`.
    pub fn check_admissible(&self, g: &MixedGraph) -> Result<()> {
        self.switched_arcs(g).map(|_| ())
    }

    fn switched_arcs(&self, g: &MixedGraph) -> Result<BTreeSet<(usize, usize)>> {
        if self.class.len() != g.order() {
            return Err(param("partition size does not match the graph"));
        }
        let mut out = BTreeSet::new();
        for (x, y) in g.arcs() {
            let digon = g.has_arc(y, x);
            if digon && y < x {
                continue;
            }
            let (cx, cy) = (self.class[x], self.class[y]);
            // Steps from the tail's class to the head's class, in quarter turns.
            let d = (cy.exp() + 4 - cx.exp()) % 4;
            match (digon, d) {
                (_, 0) => {
                    out.insert((x, y));
                    if digon {
                        out.insert((y, x));
                    }
                }
                (true, 2) => {
                    return Err(Error::Inadmissible {
                        condition: 'a',
                        detail: format!("digon {x}-{y} of type ({cx:?}, {cy:?})"),
                    })
                }
                // Rules (ii) and (iii): the digon becomes one arc, from the class j to the
                // class j·i.
                (true, 1) => {
                    out.insert((x, y));
                }
                (true, _) => {
                    out.insert((y, x));
                }
                // Rule (i): reverse.
                (false, 2) => {
                    out.insert((y, x));
                }
                (false, 1) => {
                    return Err(Error::Inadmissible {
                        condition: 'b',
                        detail: format!("arc {x}->{y} of type ({cx:?}, {cy:?}) is not in a digon"),
                    })
                }
                // Rule (iv): the arc becomes a digon.
                (false, _) => {
                    out.insert((x, y));
                    out.insert((y, x));
                }
            }
        }
        Ok(out)
    }
}

/// Applies the four-way switching of `p` to `g`. The partition must be admissible.
pub fn four_way_switch(g: &MixedGraph, p: &FourWayPartition) -> Result<MixedGraph> {
    let arcs = p.switched_arcs(g)?;
    Ok(MixedGraph::from_arc_set(g.order(), arcs))
}

/// Bipartite double: vertex `(i, k)` becomes `2i + k`, and `(i, k) → (j, l)` is an arc iff
/// `i → j` is an arc and `k ≠ l`.
pub fn bipartite_double(o: &OrientedGraph) -> OrientedGraph {
    let n = o.base().order();
    let mut arcs = Vec::new();
    for (t, h) in o.arcs() {
        arcs.push((2 * t, 2 * h + 1));
        arcs.push((2 * t + 1, 2 * h));
    }
    OrientedGraph::from_arcs(2 * n, &arcs).expect("doubling preserves simplicity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec, Sign};
    use crate::matrix::{adjacency, hermitian_adjacency, skew_adjacency};

    #[test]
    fn identity_partition_changes_nothing() {
        let g = build_family(&FamilySpec::BoxABCD(2, 1, 0, 1))
            .unwrap()
            .mixed()
            .unwrap();
        let p = FourWayPartition::from_labels(vec![Quarter::One; g.order()]);
        assert_eq!(four_way_switch(&g, &p).unwrap(), g);
    }

    #[test]
    fn switching_is_diagonal_similarity() {
        // Path 0 = 1 (digon), 2 -> 1, 3 -> 2 (arcs); labels chosen to be admissible.
        let mut g = MixedGraph::new(4);
        g.add_digon(0, 1).unwrap();
        g.add_arc(2, 1).unwrap();
        g.add_arc(3, 2).unwrap();
        let labels = vec![Quarter::One, Quarter::I, Quarter::MinusOne, Quarter::One];
        let p = FourWayPartition::from_labels(labels.clone());
        let s = four_way_switch(&g, &p).unwrap();
        let h = hermitian_adjacency(&g);
        let hs = hermitian_adjacency(&s);
        for x in 0..4 {
            for y in 0..4 {
                let (a, b) = labels[x].value();
                let (c, d) = labels[y].value();
                let (hr, hi) = h.get(x, y);
                // conj(j_x) * h * j_y
                let (pr, pi) = (a * hr + b * hi, a * hi - b * hr);
                let (qr, qi) = (pr * c - pi * d, pr * d + pi * c);
                assert_eq!(hs.get(x, y), (qr, qi), "entry {x},{y}");
            }
        }
    }

    #[test]
    fn inadmissible_partitions_name_the_condition() {
        let mut g = MixedGraph::new(2);
        g.add_digon(0, 1).unwrap();
        let p = FourWayPartition::from_labels(vec![Quarter::One, Quarter::MinusOne]);
        assert!(matches!(
            four_way_switch(&g, &p),
            Err(Error::Inadmissible { condition: 'a', .. })
        ));
        let g = MixedGraph::from_arcs(2, &[(0, 1)]).unwrap();
        let p = FourWayPartition::from_labels(vec![Quarter::I, Quarter::MinusOne]);
        assert!(matches!(
            four_way_switch(&g, &p),
            Err(Error::Inadmissible { condition: 'b', .. })
        ));
    }

    #[test]
    fn partition_sets_must_cover_disjointly() {
        assert!(FourWayPartition::from_sets(3, &[0], &[1], &[2], &[]).is_ok());
        assert!(FourWayPartition::from_sets(3, &[0, 1], &[1], &[2], &[]).is_err());
        assert!(FourWayPartition::from_sets(3, &[0], &[], &[2], &[]).is_err());
    }

    #[test]
    fn signed_switch_flips_the_cut() {
        let c3 = build_family(&FamilySpec::Cycle(3))
            .unwrap()
            .simple()
            .unwrap();
        let s = SignedGraph::all_negative(c3);
        let t = switch_signed(&s, &[0]).unwrap();
        assert_eq!(t.sign(0, 1), Some(Sign::Plus));
        assert_eq!(t.sign(0, 2), Some(Sign::Plus));
        assert_eq!(t.sign(1, 2), Some(Sign::Minus));
    }

    #[test]
    fn oriented_switch_reverses_the_cut() {
        let o = OrientedGraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        let t = switch_oriented(&o, &[1]).unwrap();
        let arcs: Vec<_> = t.arcs().collect();
        assert_eq!(arcs, vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn double_of_an_arc_is_kronecker() {
        let o = OrientedGraph::from_arcs(2, &[(0, 1)]).unwrap();
        let bd = bipartite_double(&o);
        let k2 = adjacency(
            &build_family(&FamilySpec::Path(2))
                .unwrap()
                .simple()
                .unwrap(),
        );
        assert_eq!(
            skew_adjacency(&bd).real_part(),
            skew_adjacency(&o).kron(&k2).real_part()
        );
        assert_eq!(converse(&converse(&o.as_mixed())), o.as_mixed());
    }
}
