//! Named graph families.
//!
//! Labelings used by [`build_family`]:
//!
//! - `Path(n)`: `0 - 1 - … - n-1`.
//! - `Cycle(n)`: the path plus the edge `{n-1, 0}`.
//! - `Complete(n)`: every pair.
//! - `Star(k)`: centre `0`, leaves `1..=k`.
//! - `TShape(a, b, c)`: centre `0`, then each leg in turn walking outward from the centre.
//! - `HShape(a, b, c)`: bar `0 - 1 - … - b` with ends `x = 0`, `y = b`; then a leaf on `x`,
//!   an arm of `a` vertices on `x`, a leaf on `y`, an arm of `c` vertices on `y`.
//! - `DoubleSnake(n)`: spine `0 … n-5`, two leaves on vertex `0`, then two leaves on `n-5`.
//! - `Caterpillar(legs)`: spine `0 … m-1`, then the pendant leaves of each spine vertex in order.
//! - `Dagger(n)`: claw centre `0` with leaves `1, 2, 3`, then a path `4 … n+3` with `4` adjacent to `0`.
//! - `DirectedCycle(n)`: arcs `i → i+1 (mod n)`.
//! - `CTilde(n)`: the directed cycle with the arc `n-1 → 0` reversed.
//! - `CTildePrime(n)`: the directed cycle with the arc `n-1 → 0` replaced by a digon.
//! - `CTildeDoublePrime(n)`: the directed cycle with `n-2 → n-1` replaced by a digon and
//!   `n-1 → 0` reversed.
//! - `BoxABCD(a, b, c, d)`: negative quadrangle `0 → 1 → 2 → 3` with the arc `0 → 3`,
//!   then directed paths of `a, b, c, d` arcs leaving vertices `0, 1, 2, 3` in that order.
//! - `TriangleTail`: directed triangle `0 → 1 → 2 → 0` plus the arc `3 → 0`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{Graph, MixedGraph};
use crate::error::{param, Error, Result};

/// A named family member with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Star with the given number of leaves.
    Star(usize),
    /// Spider with three legs of the given lengths.
    TShape(usize, usize, usize),
    /// Two-centre tree Q_{a,b,c}; see the module docs for the labeling.
    HShape(usize, usize, usize),
    DoubleSnake(usize),
    /// Caterpillar given by the number of pendant leaves on each spine vertex.
    Caterpillar(Vec<usize>),
    /// Claw joined by an edge to the end of a path on `n` vertices.
    Dagger(usize),
    DirectedCycle(usize),
    CTilde(usize),
    CTildePrime(usize),
    CTildeDoublePrime(usize),
    BoxABCD(usize, usize, usize, usize),
    TriangleTail,
}

/// Output of [`build_family`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Simple(Graph),
    Mixed(MixedGraph),
}

impl Family {
    pub fn simple(self) -> Option<Graph> {
        match self {
            Family::Simple(g) => Some(g),
            Family::Mixed(_) => None,
        }
    }

    pub fn mixed(self) -> Option<MixedGraph> {
        match self {
            Family::Mixed(m) => Some(m),
            Family::Simple(_) => None,
        }
    }
}

impl FamilySpec {
    /// True for the digraph families.
    pub fn is_mixed(&self) -> bool {
        matches!(
            self,
            FamilySpec::DirectedCycle(_)
                | FamilySpec::CTilde(_)
                | FamilySpec::CTildePrime(_)
                | FamilySpec::CTildeDoublePrime(_)
                | FamilySpec::BoxABCD(..)
                | FamilySpec::TriangleTail
        )
    }

    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(param(format!("{self}: {what}")));
        match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if n < 1 => bad("needs n >= 1"),
            FamilySpec::Cycle(n) if n < 3 => bad("needs n >= 3"),
            FamilySpec::Star(k) if k < 1 => bad("needs at least one leaf"),
            FamilySpec::TShape(a, b, c) if a.min(b).min(c) < 1 => bad("legs must be >= 1"),
            FamilySpec::HShape(a, b, c) if a < 1 || b < 1 || c < a => {
                bad("needs c >= a >= 1 and b >= 1")
            }
            FamilySpec::DoubleSnake(n) if n < 6 => bad("needs n >= 6"),
            FamilySpec::Caterpillar(ref legs) if legs.is_empty() => bad("empty spine"),
            FamilySpec::Dagger(n) if n < 1 => bad("needs n >= 1"),
            FamilySpec::DirectedCycle(n)
            | FamilySpec::CTilde(n)
            | FamilySpec::CTildePrime(n)
            | FamilySpec::CTildeDoublePrime(n)
                if n < 3 =>
            {
                bad("needs n >= 3")
            }
            _ => Ok(()),
        }
    }

    /// Number of vertices of the family member.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::DoubleSnake(n)
            | FamilySpec::DirectedCycle(n)
            | FamilySpec::CTilde(n)
            | FamilySpec::CTildePrime(n)
            | FamilySpec::CTildeDoublePrime(n) => n,
            FamilySpec::Star(k) => k + 1,
            FamilySpec::TShape(a, b, c) => a + b + c + 1,
            FamilySpec::HShape(a, b, c) => b + 1 + a + c + 2,
            FamilySpec::Caterpillar(ref legs) => legs.len() + legs.iter().sum::<usize>(),
            FamilySpec::Dagger(n) => n + 4,
            FamilySpec::BoxABCD(a, b, c, d) => 4 + a + b + c + d,
            FamilySpec::TriangleTail => 4,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::TShape(a, b, c) => write!(f, "tshape:{a},{b},{c}"),
            FamilySpec::HShape(a, b, c) => write!(f, "hshape:{a},{b},{c}"),
            FamilySpec::DoubleSnake(n) => write!(f, "snake:{n}"),
            FamilySpec::Caterpillar(legs) => {
                f.write_str("caterpillar:")?;
                for (i, l) in legs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{l}")?;
                }
                Ok(())
            }
            FamilySpec::Dagger(n) => write!(f, "dagger:{n}"),
            FamilySpec::DirectedCycle(n) => write!(f, "dicycle:{n}"),
            FamilySpec::CTilde(n) => write!(f, "ctilde:{n}"),
            FamilySpec::CTildePrime(n) => write!(f, "ctilde1:{n}"),
            FamilySpec::CTildeDoublePrime(n) => write!(f, "ctilde2:{n}"),
            FamilySpec::BoxABCD(a, b, c, d) => write!(f, "box:{a},{b},{c},{d}"),
            FamilySpec::TriangleTail => f.write_str("triangletail"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `name:p1,p2,…`, e.g. `tshape:1,2,4` or `path:7`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n.trim(), r.trim()),
            None => (s.trim(), ""),
        };
        let nums: Vec<usize> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Input(format!("bad family parameter '{p}' in '{s}'")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Input(format!(
                    "family '{name}' takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "path" => arity(1).map(|_| FamilySpec::Path(nums[0]))?,
            "cycle" => arity(1).map(|_| FamilySpec::Cycle(nums[0]))?,
            "complete" => arity(1).map(|_| FamilySpec::Complete(nums[0]))?,
            "star" => arity(1).map(|_| FamilySpec::Star(nums[0]))?,
            "tshape" => arity(3).map(|_| FamilySpec::TShape(nums[0], nums[1], nums[2]))?,
            "hshape" => arity(3).map(|_| FamilySpec::HShape(nums[0], nums[1], nums[2]))?,
            "snake" | "doublesnake" => arity(1).map(|_| FamilySpec::DoubleSnake(nums[0]))?,
            "caterpillar" => FamilySpec::Caterpillar(nums.clone()),
            "dagger" => arity(1).map(|_| FamilySpec::Dagger(nums[0]))?,
            "dicycle" => arity(1).map(|_| FamilySpec::DirectedCycle(nums[0]))?,
            "ctilde" => arity(1).map(|_| FamilySpec::CTilde(nums[0]))?,
            "ctilde1" => arity(1).map(|_| FamilySpec::CTildePrime(nums[0]))?,
            "ctilde2" => arity(1).map(|_| FamilySpec::CTildeDoublePrime(nums[0]))?,
            "box" => arity(4).map(|_| FamilySpec::BoxABCD(nums[0], nums[1], nums[2], nums[3]))?,
            "triangletail" => arity(0).map(|_| FamilySpec::TriangleTail)?,
            other => return Err(Error::Input(format!("unknown family '{other}'"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn path_on(g: &mut Graph, from: usize, len: usize) {
    let mut prev = from;
    for _ in 0..len {
        let v = g.add_vertex();
        g.add_edge(prev, v);
        prev = v;
    }
}

fn directed_path_on(m: &mut MixedGraph, from: usize, len: usize) {
    let mut prev = from;
    for _ in 0..len {
        let v = m.n;
        m.n += 1;
        m.arcs.insert((prev, v));
        prev = v;
    }
}

fn directed_cycle(n: usize) -> MixedGraph {
    let mut m = MixedGraph::new(n);
    for i in 0..n {
        m.arcs.insert((i, (i + 1) % n));
    }
    m
}

/// Builds the named family member. See the module docs for labelings.
pub fn build_family(spec: &FamilySpec) -> Result<Family> {
    spec.validate()?;
    let out = match *spec {
        FamilySpec::Path(n) => {
            let mut g = Graph::empty(1);
            path_on(&mut g, 0, n - 1);
            Family::Simple(g)
        }
        FamilySpec::Cycle(n) => {
            let mut g = Graph::empty(1);
            path_on(&mut g, 0, n - 1);
            g.add_edge(n - 1, 0);
            Family::Simple(g)
        }
        FamilySpec::Complete(n) => {
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            Family::Simple(g)
        }
        FamilySpec::Star(k) => {
            let mut g = Graph::empty(1);
            for _ in 0..k {
                path_on(&mut g, 0, 1);
            }
            Family::Simple(g)
        }
        FamilySpec::TShape(a, b, c) => {
            let mut g = Graph::empty(1);
            for len in [a, b, c] {
                path_on(&mut g, 0, len);
            }
            Family::Simple(g)
        }
        FamilySpec::HShape(a, b, c) => {
            let mut g = Graph::empty(1);
            path_on(&mut g, 0, b);
            path_on(&mut g, 0, 1);
            path_on(&mut g, 0, a);
            path_on(&mut g, b, 1);
            path_on(&mut g, b, c);
            Family::Simple(g)
        }
        FamilySpec::DoubleSnake(n) => {
            let mut g = Graph::empty(1);
            let end = n - 5;
            path_on(&mut g, 0, end);
            path_on(&mut g, 0, 1);
            path_on(&mut g, 0, 1);
            path_on(&mut g, end, 1);
            path_on(&mut g, end, 1);
            Family::Simple(g)
        }
        FamilySpec::Caterpillar(ref legs) => {
            let mut g = Graph::empty(1);
            path_on(&mut g, 0, legs.len() - 1);
            for (i, &k) in legs.iter().enumerate() {
                for _ in 0..k {
                    path_on(&mut g, i, 1);
                }
            }
            Family::Simple(g)
        }
        FamilySpec::Dagger(n) => {
            let mut g = Graph::empty(1);
            for _ in 0..3 {
                path_on(&mut g, 0, 1);
            }
            path_on(&mut g, 0, n);
            Family::Simple(g)
        }
        FamilySpec::DirectedCycle(n) => Family::Mixed(directed_cycle(n)),
        FamilySpec::CTilde(n) => {
            let mut m = directed_cycle(n);
            m.arcs.remove(&(n - 1, 0));
            m.arcs.insert((0, n - 1));
            Family::Mixed(m)
        }
        FamilySpec::CTildePrime(n) => {
            let mut m = directed_cycle(n);
            m.arcs.insert((0, n - 1));
            Family::Mixed(m)
        }
        FamilySpec::CTildeDoublePrime(n) => {
            let mut m = directed_cycle(n);
            m.arcs.insert((n - 1, n - 2));
            m.arcs.remove(&(n - 1, 0));
            m.arcs.insert((0, n - 1));
            Family::Mixed(m)
        }
        FamilySpec::BoxABCD(a, b, c, d) => {
            let mut m = MixedGraph::new(4);
            for arc in [(0, 1), (1, 2), (2, 3), (0, 3)] {
                m.arcs.insert(arc);
            }
            for (v, len) in [a, b, c, d].into_iter().enumerate() {
                directed_path_on(&mut m, v, len);
            }
            Family::Mixed(m)
        }
        FamilySpec::TriangleTail => {
            let mut m = directed_cycle(3);
            m.n = 4;
            m.arcs.insert((3, 0));
            Family::Mixed(m)
        }
    };
    Ok(out)
}

/// Builds a simple-graph family member, rejecting digraph families.
pub fn build_simple(spec: &FamilySpec) -> Result<Graph> {
    build_family(spec)?
        .simple()
        .ok_or_else(|| param(format!("{spec} is a mixed graph")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn simple(spec: FamilySpec) -> Graph {
        build_simple(&spec).unwrap()
    }

    #[test]
    fn sizes_match_definitions() {
        assert_eq!(simple(FamilySpec::Path(1)).size(), 0);
        let p = simple(FamilySpec::Path(7));
        assert_eq!((p.order(), p.size()), (7, 6));
        let c = simple(FamilySpec::Cycle(5));
        assert_eq!((c.order(), c.size()), (5, 5));
        let w = simple(FamilySpec::DoubleSnake(9));
        assert_eq!(w.order(), 9);
        assert!(w.is_tree());
        assert_eq!(w.max_degree(), 3);
        assert_eq!(w.degree_sequence().iter().filter(|&&d| d == 3).count(), 2);
        let k4 = simple(FamilySpec::Complete(4));
        assert_eq!(k4.size(), 6);
    }

    #[test]
    fn smallest_double_snake_has_two_pendants_per_end() {
        let w = simple(FamilySpec::DoubleSnake(6));
        assert_eq!(w.degree(0), 3);
        assert_eq!(w.degree(1), 3);
        assert_eq!(w.degree_sequence(), vec![3, 3, 1, 1, 1, 1]);
    }

    #[test]
    fn claw_is_unit_t_shape() {
        let t = simple(FamilySpec::TShape(1, 1, 1));
        assert_eq!(t, simple(FamilySpec::Star(3)));
    }

    #[test]
    fn order_matches_construction() {
        let specs = [
            FamilySpec::HShape(2, 5, 3),
            FamilySpec::Caterpillar(vec![2, 0, 1]),
            FamilySpec::Dagger(3),
            FamilySpec::BoxABCD(1, 2, 0, 3),
            FamilySpec::TShape(1, 2, 5),
        ];
        for s in specs {
            let n = match build_family(&s).unwrap() {
                Family::Simple(g) => g.order(),
                Family::Mixed(m) => m.order(),
            };
            assert_eq!(n, s.order(), "{s}");
        }
    }

    #[test]
    fn mixed_variants_differ_on_one_or_two_arcs() {
        let d = build_family(&FamilySpec::DirectedCycle(5))
            .unwrap()
            .mixed()
            .unwrap();
        let c1 = build_family(&FamilySpec::CTildePrime(5))
            .unwrap()
            .mixed()
            .unwrap();
        let c2 = build_family(&FamilySpec::CTildeDoublePrime(5))
            .unwrap()
            .mixed()
            .unwrap();
        assert_eq!(d.arc_count(), 5);
        assert_eq!(c1.arc_count(), 6);
        assert!(c1.is_digon(4, 0));
        assert!(c2.is_digon(3, 4) && c2.has_arc(0, 4) && !c2.has_arc(4, 0));
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(build_family(&FamilySpec::DoubleSnake(5)).is_err());
        assert!(build_family(&FamilySpec::Cycle(2)).is_err());
        assert!(build_family(&FamilySpec::HShape(2, 3, 1)).is_err());
        assert!(build_family(&FamilySpec::TShape(0, 1, 1)).is_err());
    }

    #[test]
    fn literal_round_trip() {
        for s in [
            "path:7",
            "tshape:1,2,4",
            "hshape:1,1,2",
            "box:1,0,2,0",
            "caterpillar:1,0,2",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("tshape:1,2".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("snake:4".parse::<FamilySpec>().is_err());
    }
}
