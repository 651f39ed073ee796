//! Mixed graphs with Hermitian index below 2.
//!
//! Matching works on gains. Walking a cycle, a digon contributes 1, an arc traversed
//! forward contributes `i` and one traversed backward `-i`; the product is the cycle's gain.
//! A mixed graph whose underlying graph is a tree has the adjacency spectrum of that tree,
//! and one with a single cycle is determined spectrally by the gain of the cycle up to
//! conjugation (taking the converse). Families are matched on these invariants.

use alloc::vec;
use alloc::vec::Vec;

use super::{assemble, band, tag, ClassificationResult, Coverage, FamilyTag, Region};
use crate::error::Result;
use crate::graph::{recognize_shape, Graph, MixedGraph};
use crate::spectra::{spectral_radius, Model};

/// Exponent `k` (mod 4) with gain `i^k` along the closed walk `cycle[0] … cycle[m-1]`.
///
/// Returns `None` if two consecutive vertices are not joined by an arc.
pub fn cycle_gain(g: &MixedGraph, cycle: &[usize]) -> Option<u8> {
    let m = cycle.len();
    let mut k = 0u8;
    for i in 0..m {
        let (u, v) = (cycle[i], cycle[(i + 1) % m]);
        let step = match (g.has_arc(u, v), g.has_arc(v, u)) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 3,
            (false, false) => return None,
        };
        k = (k + step) % 4;
    }
    Some(k)
}

/// Vertices of the unique cycle of a connected unicyclic graph, in cyclic order.
fn unique_cycle(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = (0..n)
        .find(|&v| alive[v])
        .expect("unicyclic graph has a cycle");
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| alive[w] && w != prev)
            .unwrap();
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}

/// Length of the pendant path hanging from cycle vertex `c`, or `None` if what hangs
/// there is not a single path.
fn pendant_path(g: &Graph, on_cycle: &[bool], c: usize) -> Option<usize> {
    let off: Vec<usize> = g
        .neighbors(c)
        .iter()
        .copied()
        .filter(|&w| !on_cycle[w])
        .collect();
    match off.as_slice() {
        [] => Some(0),
        [first] => {
            let (mut prev, mut cur, mut len) = (c, *first, 1);
            loop {
                match g.degree(cur) {
                    1 => return Some(len),
                    2 => {
                        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev)?;
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    _ => return None,
                }
            }
        }
        _ => None,
    }
}

fn matches_pm(k: u8, e: usize) -> bool {
    let e = (e % 4) as u8;
    k == e || k == (4 - e) % 4
}

/// The quadrangle-with-tails lists: `(a, 0, c, 0)` with `a >= c`, and six sporadic members.
fn box_listed(p: [usize; 4]) -> bool {
    const SPORADIC: [[usize; 4]; 6] = [
        [3, 1, 0, 0],
        [2, 1, 1, 0],
        [2, 1, 0, 0],
        [1, 1, 1, 1],
        [1, 1, 1, 0],
        [1, 1, 0, 0],
    ];
    dihedral(p)
        .into_iter()
        .any(|q| (q[1] == 0 && q[3] == 0 && q[0] >= q[2]) || SPORADIC.contains(&q))
}

fn dihedral(p: [usize; 4]) -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(8);
    for r in 0..4 {
        let q = [p[r], p[(r + 1) % 4], p[(r + 2) % 4], p[(r + 3) % 4]];
        out.push(q);
        out.push([q[0], q[3], q[2], q[1]]);
    }
    out
}

fn match_cycle_family(n: usize, k: u8) -> (FamilyTag, bool) {
    if matches_pm(k, n) {
        (FamilyTag::new("D", &[n]), n % 4 != 0)
    } else if matches_pm(k, n + 2) {
        (FamilyTag::new("CTilde", &[n]), n % 4 != 2)
    } else if matches_pm(k, n + 3) {
        (FamilyTag::new("CTilde1", &[n]), n % 4 != 3)
    } else {
        (FamilyTag::new("CTilde2", &[n]), n % 4 != 1)
    }
}

fn families(g: &MixedGraph, u: &Graph) -> Result<(Option<FamilyTag>, Option<Region>)> {
    let lt2 = Region::below(2.0);
    let n = u.order();
    if u.is_tree() {
        let s = recognize_shape(u)?;
        return Ok(match s.t_shape {
            _ if s.path => (tag("P", &[n]), Some(lt2)),
            Some(t @ [1, 1, _]) => (tag("T", &t), Some(lt2)),
            Some(t @ [1, 2, c]) if c <= 4 => (tag("T", &t), Some(lt2)),
            _ => (None, None),
        });
    }
    if u.size() != n {
        return Ok((None, None));
    }
    let cycle = unique_cycle(u);
    let k = cycle_gain(g, &cycle).expect("cycle edges carry arcs");
    let m = cycle.len();
    if m == n {
        let (family, listed) = match_cycle_family(n, k);
        let r = if listed { lt2 } else { Region::equal(2.0) };
        return Ok((Some(family), Some(r)));
    }
    let mut on_cycle = vec![false; n];
    for &v in &cycle {
        on_cycle[v] = true;
    }
    if m == 3 && n == 4 && k % 2 == 1 {
        return Ok((tag("TriangleTail", &[]), Some(lt2)));
    }
    if m == 4 && k == 2 {
        let mut p = [0; 4];
        for (slot, &c) in p.iter_mut().zip(&cycle) {
            match pendant_path(u, &on_cycle, c) {
                Some(len) => *slot = len,
                None => return Ok((None, None)),
            }
        }
        let canon = dihedral(p).into_iter().max().unwrap();
        let expected = box_listed(p).then_some(lt2);
        return Ok((tag("Box", &canon), expected));
    }
    Ok((None, None))
}

/// Hermitian-adjacency classification around 2.
///
/// The graph is matched, on gain invariants, to paths, small spiders, directed cycles and
/// their three one-arc variants, quadrangles with pendant paths, and the directed triangle
/// with a pendant arc. `agreement` requires a match.
pub fn classify_mixed(g: &MixedGraph) -> Result<ClassificationResult> {
    let u = g.underlying();
    u.require_connected()?;
    let radius = spectral_radius(g, Model::Hermitian)?;
    let (family, expected) = families(g, &u)?;
    let bands = [
        band(Region::below(2.0), Coverage::Partial),
        band(Region::equal(2.0), Coverage::None),
        band(Region::above(2.0), Coverage::None),
    ];
    let mut r = assemble(Model::Hermitian, radius, &bands, family, expected, false);
    r.agreement &= r.family.is_some();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    fn m(spec: FamilySpec) -> MixedGraph {
        build_family(&spec).unwrap().mixed().unwrap()
    }

    #[test]
    fn directed_cycles() {
        let r = classify_mixed(&m(FamilySpec::DirectedCycle(5))).unwrap();
        assert_eq!(r.family, Some(FamilyTag::new("D", &[5])));
        assert_eq!(r.region, Region::below(2.0));
        assert!(r.agreement);
        let r = classify_mixed(&m(FamilySpec::DirectedCycle(4))).unwrap();
        assert_eq!(r.region, Region::equal(2.0));
        assert!(r.agreement);
    }

    #[test]
    fn family_gains() {
        for n in 3..12 {
            let g = |s| cycle_gain(&m(s), &(0..n).collect::<Vec<_>>()).unwrap() as usize;
            assert_eq!(g(FamilySpec::DirectedCycle(n)), n % 4);
            assert_eq!(g(FamilySpec::CTilde(n)), (n + 2) % 4);
            assert_eq!(g(FamilySpec::CTildePrime(n)), (n + 3) % 4);
            assert_eq!(g(FamilySpec::CTildeDoublePrime(n)), (n + 1) % 4);
        }
    }

    #[test]
    fn converse_matches_the_same_family() {
        let g = m(FamilySpec::CTilde(7));
        let a = classify_mixed(&g).unwrap();
        let b = classify_mixed(&g.converse()).unwrap();
        assert_eq!(a.family, b.family);
        assert!((a.radius - b.radius).abs() < 1e-12);
    }

    #[test]
    fn boxes_and_triangle() {
        let r = classify_mixed(&m(FamilySpec::BoxABCD(2, 0, 1, 0))).unwrap();
        assert_eq!(r.family, Some(FamilyTag::new("Box", &[2, 0, 1, 0])));
        assert!(
            r.agreement && r.region == Region::below(2.0),
            "{}",
            r.radius
        );
        let r = classify_mixed(&m(FamilySpec::BoxABCD(3, 1, 0, 0))).unwrap();
        assert!(r.agreement, "{}", r.radius);
        let r = classify_mixed(&m(FamilySpec::TriangleTail)).unwrap();
        assert!(r.agreement && r.region == Region::below(2.0));
    }

    #[test]
    fn trees_follow_the_adjacency_lists() {
        let mut g = MixedGraph::new(5);
        for (u, v) in [(0, 1), (2, 1), (1, 3), (4, 3)] {
            g.add_arc(u, v).unwrap();
        }
        let r = classify_mixed(&g).unwrap();
        assert_eq!(r.family, Some(FamilyTag::new("T", &[1, 1, 2])));
        assert!(r.agreement);
    }
}
