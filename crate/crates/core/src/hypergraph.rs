//! Uniform hypergraphs and the spectral radius of their adjacency tensor.
//!
//! For an r-uniform hypergraph the adjacency tensor has entry `1/(r-1)!` at every ordering
//! of every edge. Its spectral radius is the maximum of
//! `f_H(x) = r Σ_{e ∈ E} Π_{i ∈ e} x_i` over the unit sphere of the r-norm, and it is found
//! here by power iteration on the shifted map `x ↦ (A x^{r-1} + x^{r-1})^{1/(r-1)}`, which
//! is primitive on connected hypergraphs.
//!
//! Family labelings: hyperpaths and hypercycles number their edges `0, 1, …` with
//! consecutive edges sharing one vertex; attached hyperpaths start at the attachment vertex.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{param, structure, Error, Result};
use crate::limits::LimitReport;
use crate::math::powf;

/// An r-uniform hypergraph on vertices `0..n`. Repeated edges are allowed, since reducing a
/// hypergraph can produce them.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl UniformHypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(param(format!("uniformity must be at least 2, got {r}")));
        }
        if edges.is_empty() {
            return Err(param("a hypergraph needs at least one edge"));
        }
        let mut out = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e.len() != r {
                return Err(param(format!("edge {e:?} does not have {r} vertices")));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(param(format!("edge {e:?} repeats a vertex")));
            }
            if e[r - 1] >= n {
                return Err(param(format!("edge {e:?} has a vertex outside 0..{n}")));
            }
            out.push(e);
        }
        Ok(UniformHypergraph { n, r, edges: out })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    /// Edges with their vertices in ascending order.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// Vertex sets of the connected components, including isolated vertices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for e in &self.edges {
            let a = find(&mut parent, e[0]);
            for &v in &e[1..] {
                let b = find(&mut parent, v);
                parent[b] = a;
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let root = find(&mut parent, v);
            if slot[root] == usize::MAX {
                slot[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[root]].push(v);
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Sub-hypergraph on the edges inside `keep`, relabeled in the order of `keep`.
    fn restrict(&self, keep: &[usize]) -> Option<UniformHypergraph> {
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            label[v] = i;
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| label[e[0]] != usize::MAX)
            .map(|e| e.iter().map(|&v| label[v]).collect())
            .collect();
        UniformHypergraph::new(keep.len(), self.r, edges).ok()
    }
}

fn check_len(h: &UniformHypergraph, x: &[f64]) -> Result<()> {
    if x.len() != h.n {
        return Err(param(format!(
            "vector has length {}, hypergraph has {} vertices",
            x.len(),
            h.n
        )));
    }
    Ok(())
}

/// `f_H(x) = r Σ_e Π_{i ∈ e} x_i`.
pub fn f_h(h: &UniformHypergraph, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    let s: f64 = h
        .edges
        .iter()
        .map(|e| e.iter().map(|&v| x[v]).product::<f64>())
        .sum();
    Ok(h.r as f64 * s)
}

/// `y_j = Σ_{e ∋ j} Π_{i ∈ e, i ≠ j} x_i`, the tensor applied to `x^{r-1}`.
pub fn tensor_apply(h: &UniformHypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_len(h, x)?;
    let mut y = vec![0.0; h.n];
    for e in &h.edges {
        for (k, &j) in e.iter().enumerate() {
            let p: f64 = e
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &v)| x[v])
                .product();
            y[j] += p;
        }
    }
    Ok(y)
}

/// A converged eigenpair of the adjacency tensor.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TensorIterate {
    /// Positive eigenvector with unit r-norm.
    pub x: Vec<f64>,
    pub value: f64,
    /// `max_j |y_j - λ x_j^{r-1}|`.
    pub residual: f64,
    pub iterations: usize,
    /// Bounds `min_j y_j / x_j^{r-1} ≤ ρ ≤ max_j y_j / x_j^{r-1}`.
    pub bounds: (f64, f64),
}

/// Iteration cap for [`tensor_eigenpair`].
pub const MAX_ITERATIONS: usize = 100_000;
/// Residual at which the iteration stops.
pub const TARGET_RESIDUAL: f64 = 1e-11;
/// Largest residual accepted as converged.
pub const ACCEPT_RESIDUAL: f64 = 1e-9;

fn normalize(x: &mut [f64], r: usize) {
    let s: f64 = x.iter().map(|&v| powf(v, r as f64)).sum();
    let k = powf(s, 1.0 / r as f64);
    for v in x.iter_mut() {
        *v /= k;
    }
}

fn measure(h: &UniformHypergraph, x: &[f64]) -> (f64, f64, (f64, f64), Vec<f64>) {
    let y = tensor_apply(h, x).expect("lengths match");
    let r1 = (h.r - 1) as f64;
    let value: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
    let mut residual = 0.0f64;
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for (&xj, &yj) in x.iter().zip(&y) {
        let p = powf(xj, r1);
        residual = residual.max((yj - value * p).abs());
        let q = yj / p;
        lo = lo.min(q);
        hi = hi.max(q);
    }
    (value, residual, (lo, hi), y)
}

/// Perron eigenpair of a connected hypergraph, starting from `start` (positive entries).
pub fn tensor_eigenpair_from(h: &UniformHypergraph, start: &[f64]) -> Result<TensorIterate> {
    check_len(h, start)?;
    if !h.is_connected() {
        return Err(structure(
            "the power iteration needs a connected hypergraph",
        ));
    }
    if start.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
        return Err(param("the starting vector must be positive"));
    }
    let inv = 1.0 / (h.r - 1) as f64;
    let r1 = (h.r - 1) as f64;
    let mut x = start.to_vec();
    normalize(&mut x, h.r);
    let mut best = measure(h, &x);
    let mut it = 0;
    while best.1 > TARGET_RESIDUAL && it < MAX_ITERATIONS {
        let y = &best.3;
        for (xj, &yj) in x.iter_mut().zip(y) {
            *xj = powf(yj + powf(*xj, r1), inv);
        }
        normalize(&mut x, h.r);
        best = measure(h, &x);
        it += 1;
    }
    let (value, residual, bounds, _) = best;
    if residual > ACCEPT_RESIDUAL {
        return Err(Error::NoConvergence {
            iterations: it,
            residual,
        });
    }
    Ok(TensorIterate {
        x,
        value,
        residual,
        iterations: it,
        bounds,
    })
}

/// Perron eigenpair of a connected hypergraph from the uniform start.
pub fn tensor_eigenpair(h: &UniformHypergraph) -> Result<TensorIterate> {
    tensor_eigenpair_from(h, &vec![1.0; h.n])
}

/// Spectral radius of the adjacency tensor: the largest over components.
pub fn tensor_radius(h: &UniformHypergraph) -> Result<LimitReport> {
    let mut best: Option<TensorIterate> = None;
    for comp in h.components() {
        let Some(sub) = h.restrict(&comp) else {
            continue;
        };
        let it = tensor_eigenpair(&sub)?;
        if best.as_ref().map_or(true, |b| it.value > b.value) {
            best = Some(it);
        }
    }
    let b = best.expect("a hypergraph has an edge");
    Ok(LimitReport {
        value: b.value,
        equation: String::from("A x^(r-1) = lambda x^[r-1]"),
        bracket: (b.bounds.0.min(b.value), b.bounds.1.max(b.value)),
        iterations: b.iterations,
        residual: b.residual,
        degenerate: false,
    })
}

/// Adds a fresh vertex to every edge, raising the uniformity by one.
pub fn extend(h: &UniformHypergraph) -> UniformHypergraph {
    let edges = h
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut e = e.clone();
            e.push(h.n + i);
            e
        })
        .collect();
    UniformHypergraph {
        n: h.n + h.edges.len(),
        r: h.r + 1,
        edges,
    }
}

/// Removes one degree-1 vertex from every edge (the largest-numbered one), lowering the
/// uniformity by one. The remaining vertices keep their relative order.
pub fn reduce(h: &UniformHypergraph) -> Result<UniformHypergraph> {
    if h.r == 2 {
        return Err(structure("a 2-uniform hypergraph cannot be reduced"));
    }
    let mut deg = vec![0usize; h.n];
    for e in &h.edges {
        for &v in e {
            deg[v] += 1;
        }
    }
    let mut removed = vec![false; h.n];
    for e in &h.edges {
        let leaf = e
            .iter()
            .rev()
            .copied()
            .find(|&v| deg[v] == 1)
            .ok_or_else(|| structure(format!("edge {e:?} has no vertex of degree 1")))?;
        removed[leaf] = true;
    }
    let mut label = vec![usize::MAX; h.n];
    let mut next = 0;
    for v in 0..h.n {
        if !removed[v] {
            label[v] = next;
            next += 1;
        }
    }
    let edges = h
        .edges
        .iter()
        .map(|e| {
            e.iter()
                .filter(|&&v| !removed[v])
                .map(|&v| label[v])
                .collect()
        })
        .collect();
    UniformHypergraph::new(next, h.r - 1, edges)
}

/// Named hypergraph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum HyperFamily {
    /// A single edge.
    Edge { r: usize },
    /// Hyperpath A_m with `m` edges.
    Path { r: usize, m: usize },
    /// Hypercycle C_m with `m` edges. For `m = 2` the two edges share two vertices.
    Cycle { r: usize, m: usize },
    /// E_{i,j,k}: three hyperpaths of `i`, `j`, `k` edges from one vertex.
    Star {
        r: usize,
        i: usize,
        j: usize,
        k: usize,
    },
    /// F_{i,j,k}: hyperpaths of `i`, `j`, `k` edges on three vertices of one edge.
    EdgeStar {
        r: usize,
        i: usize,
        j: usize,
        k: usize,
    },
    /// G_{i,j:k:l,t}: a hyperpath of `k + 2` edges with hyperpaths of `i`, `j` edges on two
    /// free vertices of its first edge and `l`, `t` edges on two free vertices of its last.
    DoubleFork {
        r: usize,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        t: usize,
    },
}

impl fmt::Display for HyperFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HyperFamily::Edge { r } => write!(f, "edge:{r}"),
            HyperFamily::Path { r, m } => write!(f, "hpath:{r},{m}"),
            HyperFamily::Cycle { r, m } => write!(f, "hcycle:{r},{m}"),
            HyperFamily::Star { r, i, j, k } => write!(f, "estar:{r},{i},{j},{k}"),
            HyperFamily::EdgeStar { r, i, j, k } => write!(f, "fedge:{r},{i},{j},{k}"),
            HyperFamily::DoubleFork { r, i, j, k, l, t } => {
                write!(f, "gfork:{r},{i},{j},{k},{l},{t}")
            }
        }
    }
}

impl FromStr for HyperFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = args
            .split(',')
            .filter(|a| !a.trim().is_empty())
            .map(|a| {
                a.trim()
                    .parse()
                    .map_err(|_| Error::Input(format!("bad number {a:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Input(format!(
                    "{name} takes {k} parameters, got {}",
                    nums.len()
                )))
            }
        };
        let fam = match name.trim().to_ascii_lowercase().as_str() {
            "edge" => {
                want(1)?;
                HyperFamily::Edge { r: nums[0] }
            }
            "hpath" => {
                want(2)?;
                HyperFamily::Path {
                    r: nums[0],
                    m: nums[1],
                }
            }
            "hcycle" => {
                want(2)?;
                HyperFamily::Cycle {
                    r: nums[0],
                    m: nums[1],
                }
            }
            "estar" => {
                want(4)?;
                HyperFamily::Star {
                    r: nums[0],
                    i: nums[1],
                    j: nums[2],
                    k: nums[3],
                }
            }
            "fedge" => {
                want(4)?;
                HyperFamily::EdgeStar {
                    r: nums[0],
                    i: nums[1],
                    j: nums[2],
                    k: nums[3],
                }
            }
            "gfork" => {
                want(6)?;
                let (r, i, j, k, l, t) = (nums[0], nums[1], nums[2], nums[3], nums[4], nums[5]);
                HyperFamily::DoubleFork { r, i, j, k, l, t }
            }
            other => return Err(Error::Input(format!("unknown hypergraph family {other:?}"))),
        };
        Ok(fam)
    }
}

struct Builder {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Builder {
    fn new(r: usize, n: usize) -> Self {
        Builder {
            r,
            n,
            edges: Vec::new(),
        }
    }

    fn fresh(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Adds an edge containing `start`; returns its vertices other than `start`.
    fn edge_from(&mut self, start: usize) -> Vec<usize> {
        let rest: Vec<usize> = (1..self.r).map(|_| self.fresh()).collect();
        let mut e = rest.clone();
        e.push(start);
        self.edges.push(e);
        rest
    }

    /// Attaches a hyperpath of `len` edges starting at `start`; returns the far end.
    fn path_from(&mut self, start: usize, len: usize) -> usize {
        let mut cur = start;
        for _ in 0..len {
            cur = *self.edge_from(cur).last().unwrap();
        }
        cur
    }

    fn finish(self) -> Result<UniformHypergraph> {
        UniformHypergraph::new(self.n, self.r, self.edges)
    }
}

/// Builds a named hypergraph; see the module docs for labelings.
pub fn build_hyperfamily(fam: HyperFamily) -> Result<UniformHypergraph> {
    let r = match fam {
        HyperFamily::Edge { r }
        | HyperFamily::Path { r, .. }
        | HyperFamily::Cycle { r, .. }
        | HyperFamily::Star { r, .. }
        | HyperFamily::EdgeStar { r, .. }
        | HyperFamily::DoubleFork { r, .. } => r,
    };
    if r < 2 {
        return Err(param(format!("uniformity must be at least 2, got {r}")));
    }
    match fam {
        HyperFamily::Edge { r } => UniformHypergraph::new(r, r, vec![(0..r).collect()]),
        HyperFamily::Path { m, .. } => {
            if m == 0 {
                return Err(param("a hyperpath needs at least one edge"));
            }
            let mut b = Builder::new(r, 1);
            b.path_from(0, m);
            b.finish()
        }
        HyperFamily::Cycle { m, .. } => {
            if m < 2 || (m == 2 && r < 3) {
                return Err(param(format!(
                    "no hypercycle with {m} edges and uniformity {r}"
                )));
            }
            if m == 2 {
                let e1: Vec<usize> = (0..r).collect();
                let mut e2 = vec![0, 1];
                e2.extend(r..2 * r - 2);
                return UniformHypergraph::new(2 * r - 2, r, vec![e1, e2]);
            }
            let n = m * (r - 1);
            let edges = (0..m)
                .map(|k| (0..r).map(|i| (k * (r - 1) + i) % n).collect())
                .collect();
            UniformHypergraph::new(n, r, edges)
        }
        HyperFamily::Star { i, j, k, .. } => {
            if i + j + k == 0 {
                return Err(param("the star needs at least one edge"));
            }
            let mut b = Builder::new(r, 1);
            for len in [i, j, k] {
                b.path_from(0, len);
            }
            b.finish()
        }
        HyperFamily::EdgeStar { i, j, k, .. } => {
            if r < 3 {
                return Err(param("attaching at three vertices of an edge needs r >= 3"));
            }
            let mut b = Builder::new(r, r);
            b.edges.push((0..r).collect());
            for (v, len) in [i, j, k].into_iter().enumerate() {
                b.path_from(v, len);
            }
            b.finish()
        }
        HyperFamily::DoubleFork { i, j, k, l, t, .. } => {
            if r < 3 {
                return Err(param("the fork ends need r >= 3"));
            }
            let mut b = Builder::new(r, 1);
            let first = b.edge_from(0);
            let mut cur = *first.last().unwrap();
            let mut last = first.clone();
            for _ in 0..k + 1 {
                last = b.edge_from(cur);
                cur = *last.last().unwrap();
            }
            // Free vertices of the first edge: 0 and first[0]; of the last: its first two.
            let ends = [(0, i), (first[0], j), (last[0], l), (last[1], t)];
            for (v, len) in ends {
                b.path_from(v, len);
            }
            b.finish()
        }
    }
}
