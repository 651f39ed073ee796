//! Dense matrices and the graph matrix models.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{param, Error, Result};
use crate::graph::{Graph, MixedGraph, OrientedGraph, SignedGraph};

mod switching;

pub use switching::{
    bipartite_double, converse, four_way_switch, switch_oriented, switch_signed, FourWayPartition,
    Quarter,
};

/// Declared symmetry of a [`DenseMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Symmetry {
    Symmetric,
    Hermitian,
    SkewSymmetric,
    General,
}

/// Square matrix with real or complex entries, stored row-major.
///
/// The imaginary part is empty for real matrices.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DenseMatrix {
    n: usize,
    re: Vec<f64>,
    im: Vec<f64>,
    symmetry: Symmetry,
}

impl DenseMatrix {
    pub fn zeros(n: usize, symmetry: Symmetry) -> Self {
        DenseMatrix {
            n,
            re: vec![0.0; n * n],
            im: Vec::new(),
            symmetry,
        }
    }

    /// Real matrix from row-major data.
    pub fn from_real(n: usize, re: Vec<f64>, symmetry: Symmetry) -> Result<Self> {
        if re.len() != n * n {
            return Err(param(format!(
                "expected {} entries, got {}",
                n * n,
                re.len()
            )));
        }
        Ok(DenseMatrix {
            n,
            re,
            im: Vec::new(),
            symmetry,
        })
    }

    /// Complex matrix from row-major real and imaginary parts.
    pub fn from_complex(n: usize, re: Vec<f64>, im: Vec<f64>, symmetry: Symmetry) -> Result<Self> {
        if re.len() != n * n || im.len() != n * n {
            return Err(param(format!("expected {} entries per part", n * n)));
        }
        Ok(DenseMatrix {
            n,
            re,
            im,
            symmetry,
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    #[inline]
    pub fn is_real(&self) -> bool {
        self.im.is_empty()
    }

    #[inline]
    pub fn re(&self, i: usize, j: usize) -> f64 {
        self.re[i * self.n + j]
    }

    #[inline]
    pub fn im(&self, i: usize, j: usize) -> f64 {
        if self.im.is_empty() {
            0.0
        } else {
            self.im[i * self.n + j]
        }
    }

    /// Entry as `(re, im)`.
    pub fn get(&self, i: usize, j: usize) -> (f64, f64) {
        (self.re(i, j), self.im(i, j))
    }

    pub fn real_part(&self) -> &[f64] {
        &self.re
    }

    /// Imaginary part; all zeros for a real matrix.
    pub fn imag_part(&self) -> Vec<f64> {
        if self.im.is_empty() {
            vec![0.0; self.n * self.n]
        } else {
            self.im.clone()
        }
    }

    fn set(&mut self, i: usize, j: usize, re: f64, im: f64) {
        self.re[i * self.n + j] = re;
        if im != 0.0 && self.im.is_empty() {
            self.im = vec![0.0; self.n * self.n];
        }
        if !self.im.is_empty() {
            self.im[i * self.n + j] = im;
        }
    }

    /// Checks the declared symmetry entrywise with exact equality.
    pub fn symmetry_holds(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (a, b) = self.get(i, j);
                let (c, d) = self.get(j, i);
                match self.symmetry {
                    Symmetry::Symmetric => a == c && b == d,
                    Symmetry::Hermitian => a == c && b == -d,
                    Symmetry::SkewSymmetric => a == -c && b == -d,
                    Symmetry::General => true,
                }
            })
        })
    }

    pub fn all_finite(&self) -> bool {
        self.re.iter().chain(self.im.iter()).all(|x| x.is_finite())
    }

    /// The principal submatrix with row and column `v` removed.
    pub fn delete(&self, v: usize) -> DenseMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != v).collect();
        self.principal(&keep)
    }

    /// The principal submatrix on the given indices.
    pub fn principal(&self, keep: &[usize]) -> DenseMatrix {
        let m = keep.len();
        let mut out = DenseMatrix::zeros(m, self.symmetry);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let (re, im) = self.get(i, j);
                out.set(a, b, re, im);
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`. Symmetry of the result is taken from `self`.
    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let (n, m) = (self.n, other.n);
        let mut out = DenseMatrix::zeros(n * m, self.symmetry);
        for i in 0..n {
            for j in 0..n {
                let (a, b) = self.get(i, j);
                if a == 0.0 && b == 0.0 {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let (c, d) = other.get(k, l);
                        out.set(i * m + k, j * m + l, a * c - b * d, a * d + b * c);
                    }
                }
            }
        }
        out
    }

    /// `self - other`, entrywise.
    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.n != other.n {
            return Err(param("dimension mismatch"));
        }
        let mut out = DenseMatrix::zeros(self.n, Symmetry::General);
        for i in 0..self.n {
            for j in 0..self.n {
                let (a, b) = self.get(i, j);
                let (c, d) = other.get(i, j);
                out.set(i, j, a - c, b - d);
            }
        }
        Ok(out)
    }

    /// Rows of `(re, im)` pairs.
    pub fn rows(&self) -> Vec<Vec<(f64, f64)>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() {
        return Err(Error::Input(format!("alpha must be finite, got {alpha}")));
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(param(format!("alpha must lie in [0,1], got {alpha}")));
    }
    Ok(())
}

/// `c_d D + c_a A` for a simple graph.
fn degree_adjacency(g: &Graph, cd: f64, ca: f64) -> DenseMatrix {
    let n = g.order();
    let mut m = DenseMatrix::zeros(n, Symmetry::Symmetric);
    for v in 0..n {
        m.re[v * n + v] = cd * g.degree(v) as f64;
    }
    for (u, v) in g.edges() {
        m.re[u * n + v] = ca;
        m.re[v * n + u] = ca;
    }
    m
}

/// Adjacency matrix A(G).
pub fn adjacency(g: &Graph) -> DenseMatrix {
    degree_adjacency(g, 0.0, 1.0)
}

/// Laplacian L(G) = D - A.
pub fn laplacian(g: &Graph) -> DenseMatrix {
    degree_adjacency(g, 1.0, -1.0)
}

/// Signless Laplacian Q(G) = D + A.
pub fn signless_laplacian(g: &Graph) -> DenseMatrix {
    degree_adjacency(g, 1.0, 1.0)
}

/// A_α(G) = αD + (1-α)A for α in [0, 1].
pub fn a_alpha(g: &Graph, alpha: f64) -> Result<DenseMatrix> {
    check_alpha(alpha)?;
    Ok(degree_adjacency(g, alpha, 1.0 - alpha))
}

/// Signed adjacency matrix with entries σ(ij).
pub fn signed_adjacency(s: &SignedGraph) -> DenseMatrix {
    let n = s.base().order();
    let mut m = DenseMatrix::zeros(n, Symmetry::Symmetric);
    for (u, v, sign) in s.signed_edges() {
        m.re[u * n + v] = sign.value();
        m.re[v * n + u] = sign.value();
    }
    m
}

/// Hermitian adjacency matrix: 1 on digons, `i` for an arc `u → v` at `(u, v)` and `-i` at `(v, u)`.
pub fn hermitian_adjacency(g: &MixedGraph) -> DenseMatrix {
    let n = g.order();
    let mut m = DenseMatrix::zeros(n, Symmetry::Hermitian);
    for (u, v) in g.arcs() {
        if g.has_arc(v, u) {
            m.set(u, v, 1.0, 0.0);
        } else {
            m.set(u, v, 0.0, 1.0);
            m.set(v, u, 0.0, -1.0);
        }
    }
    m
}

/// Skew adjacency matrix: for an arc `i → j`, `s_ij = -1` and `s_ji = 1`.
pub fn skew_adjacency(g: &OrientedGraph) -> DenseMatrix {
    let n = g.base().order();
    let mut m = DenseMatrix::zeros(n, Symmetry::SkewSymmetric);
    for (t, h) in g.arcs() {
        m.re[t * n + h] = -1.0;
        m.re[h * n + t] = 1.0;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec, Sign};

    fn graph(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap().simple().unwrap()
    }

    #[test]
    fn k2_models() {
        let k2 = graph(FamilySpec::Path(2));
        assert_eq!(a_alpha(&k2, 0.0).unwrap(), adjacency(&k2));
        assert_eq!(
            a_alpha(&k2, 0.5).unwrap().real_part(),
            &[0.5, 0.5, 0.5, 0.5]
        );
        assert!(a_alpha(&k2, 1.5).is_err());
        assert!(a_alpha(&k2, f64::NAN).is_err());
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let l = laplacian(&graph(FamilySpec::Path(3)));
        for i in 0..3 {
            assert_eq!((0..3).map(|j| l.re(i, j)).sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn constructed_symmetries_hold() {
        let c = build_family(&FamilySpec::CTildeDoublePrime(6))
            .unwrap()
            .mixed()
            .unwrap();
        let h = hermitian_adjacency(&c);
        assert!(h.symmetry_holds() && !h.is_real());
        let o = OrientedGraph::ascending(graph(FamilySpec::Cycle(5)));
        let s = skew_adjacency(&o);
        assert!(s.symmetry_holds());
        let sg = SignedGraph::all_negative(graph(FamilySpec::Cycle(3)));
        assert!(signed_adjacency(&sg).symmetry_holds());
        assert_eq!(sg.sign(0, 2), Some(Sign::Minus));
    }

    #[test]
    fn digon_forest_has_adjacency_matrix() {
        let p = graph(FamilySpec::Path(3));
        let h = hermitian_adjacency(&MixedGraph::from_graph(&p));
        assert!(h.is_real());
        assert_eq!(h.real_part(), adjacency(&p).real_part());
    }

    #[test]
    fn oriented_edge_entries() {
        let o = OrientedGraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(skew_adjacency(&o).real_part(), &[0.0, -1.0, 1.0, 0.0]);
    }

    #[test]
    fn principal_submatrix_and_kron() {
        let a = adjacency(&graph(FamilySpec::Path(3)));
        let d = a.delete(0);
        assert_eq!(d.real_part(), &[0.0, 1.0, 1.0, 0.0]);
        let k = d.kron(&d);
        assert_eq!(k.dim(), 4);
        assert_eq!(k.re(0, 3), 1.0);
        assert_eq!(k.re(0, 0), 0.0);
    }
}
