//! Dense eigenvalues and spectral radii.
//!
//! Real symmetric matrices are reduced to tridiagonal form by Householder reflections and
//! diagonalized by the implicit QL method with Wilkinson-type shifts. A Hermitian matrix
//! `X + iY` is handled through the real symmetric matrix `[[X, -Y], [Y, X]]`, whose spectrum
//! is that of `X + iY` with every multiplicity doubled. A real skew-symmetric `S` is handled
//! through the Hermitian matrix `iS`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{param, Error, Result};
use crate::graph::{Graph, MixedGraph, OrientedGraph, SignedGraph};
use crate::math::hypot;
use crate::matrix::{self, DenseMatrix, Symmetry};

/// Matrix model used for a spectral radius.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Model {
    A,
    L,
    Q,
    AAlpha(f64),
    Signed,
    Hermitian,
    Skew,
}

/// Eigenvalues in ascending order.
///
/// For a skew-symmetric matrix the eigenvalues are `iμ`; `values` then holds the real
/// numbers `μ` and `imaginary` is set.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub imaginary: bool,
    pub radius: f64,
}

impl Spectrum {
    fn new(values: Vec<f64>, imaginary: bool) -> Self {
        let radius = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Spectrum {
            values,
            imaginary,
            radius,
        }
    }

    /// Largest eigenvalue (largest `μ` for skew matrices).
    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }
}

/// Eigenvalues of a real symmetric matrix given row-major; ascending.
pub fn symmetric_eigenvalues(n: usize, a: &[f64]) -> Result<Vec<f64>> {
    if a.len() != n * n {
        return Err(param("matrix data has the wrong length"));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = a.to_vec();
    let (mut d, mut e) = tridiagonalize(n, &mut a);
    tql(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Householder reduction to tridiagonal form (values only). Returns the diagonal and the
/// subdiagonal, with `e[i]` coupling `i` and `i + 1`.
fn tridiagonalize(n: usize, a: &mut [f64]) -> (Vec<f64>, Vec<f64>) {
    let idx = |i: usize, j: usize| i * n + j;
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[idx(i, k)].abs()).sum();
            if scale == 0.0 {
                e[i] = a[idx(i, l)];
            } else {
                for k in 0..=l {
                    a[idx(i, k)] /= scale;
                    h += a[idx(i, k)] * a[idx(i, k)];
                }
                let f = a[idx(i, l)];
                let g = if f >= 0.0 {
                    -libm::sqrt(h)
                } else {
                    libm::sqrt(h)
                };
                e[i] = scale * g;
                h -= f * g;
                a[idx(i, l)] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[idx(j, k)] * a[idx(i, k)];
                    }
                    for k in j + 1..=l {
                        g += a[idx(k, j)] * a[idx(i, k)];
                    }
                    e[j] = g / h;
                    f += e[j] * a[idx(i, j)];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[idx(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[idx(j, k)] -= f * e[k] + g * a[idx(i, k)];
                    }
                }
            }
        } else {
            e[i] = a[idx(i, l)];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[idx(i, i)];
    }
    // Shift so that e[i] couples i and i+1.
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    (d, e)
}

/// Implicit QL iteration on a symmetric tridiagonal matrix; eigenvalues overwrite `d`.
fn tql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::NoConvergence {
                    iterations: iter,
                    residual: e[l].abs(),
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues of a Hermitian matrix `re + i·im` given row-major; ascending.
fn hermitian_eigenvalues(n: usize, re: &[f64], im: &[f64]) -> Result<Vec<f64>> {
    let m = 2 * n;
    let mut big = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (re[i * n + j], im[i * n + j]);
            big[i * m + j] = x;
            big[(i + n) * m + (j + n)] = x;
            big[i * m + (j + n)] = -y;
            big[(i + n) * m + j] = y;
        }
    }
    let doubled = symmetric_eigenvalues(m, &big)?;
    Ok(doubled.into_iter().step_by(2).collect())
}

/// All eigenvalues of a symmetric, Hermitian or skew-symmetric matrix.
pub fn eigenvalues(m: &DenseMatrix) -> Result<Spectrum> {
    if !m.all_finite() {
        return Err(Error::Input("matrix has non-finite entries".into()));
    }
    let n = m.dim();
    match m.symmetry() {
        Symmetry::Symmetric if m.is_real() => Ok(Spectrum::new(
            symmetric_eigenvalues(n, m.real_part())?,
            false,
        )),
        Symmetry::Symmetric | Symmetry::Hermitian => {
            let vals = if m.is_real() {
                symmetric_eigenvalues(n, m.real_part())?
            } else {
                hermitian_eigenvalues(n, m.real_part(), &m.imag_part())?
            };
            Ok(Spectrum::new(vals, false))
        }
        Symmetry::SkewSymmetric => {
            // i(X + iY) = -Y + iX.
            let im = m.imag_part();
            let re: Vec<f64> = im.iter().map(|y| -y).collect();
            let vals = hermitian_eigenvalues(n, &re, m.real_part())?;
            Ok(Spectrum::new(vals, true))
        }
        Symmetry::General => Err(Error::Unsupported(
            "eigenvalues of a general matrix are not supported".into(),
        )),
    }
}

/// A graph of any flavour, for [`spectral_radius`].
#[derive(Debug, Clone, Copy)]
pub enum GraphRef<'a> {
    Simple(&'a Graph),
    Signed(&'a SignedGraph),
    Mixed(&'a MixedGraph),
    Oriented(&'a OrientedGraph),
}

impl<'a> From<&'a Graph> for GraphRef<'a> {
    fn from(g: &'a Graph) -> Self {
        GraphRef::Simple(g)
    }
}

impl<'a> From<&'a SignedGraph> for GraphRef<'a> {
    fn from(g: &'a SignedGraph) -> Self {
        GraphRef::Signed(g)
    }
}

impl<'a> From<&'a MixedGraph> for GraphRef<'a> {
    fn from(g: &'a MixedGraph) -> Self {
        GraphRef::Mixed(g)
    }
}

impl<'a> From<&'a OrientedGraph> for GraphRef<'a> {
    fn from(g: &'a OrientedGraph) -> Self {
        GraphRef::Oriented(g)
    }
}

/// The matrix of `model` for `g`.
///
/// A simple graph is accepted by every real model and by `Signed` (all-positive signature)
/// and `Hermitian` (all digons). Signed, mixed and oriented graphs only accept their own model.
pub fn model_matrix<'a>(g: impl Into<GraphRef<'a>>, model: Model) -> Result<DenseMatrix> {
    let g = g.into();
    match (g, model) {
        (GraphRef::Simple(g), Model::A) => Ok(matrix::adjacency(g)),
        (GraphRef::Simple(g), Model::L) => Ok(matrix::laplacian(g)),
        (GraphRef::Simple(g), Model::Q) => Ok(matrix::signless_laplacian(g)),
        (GraphRef::Simple(g), Model::AAlpha(a)) => matrix::a_alpha(g, a),
        (GraphRef::Simple(g), Model::Signed) => Ok(matrix::adjacency(g)),
        (GraphRef::Simple(g), Model::Hermitian) => Ok(matrix::adjacency(g)),
        (GraphRef::Signed(s), Model::Signed) => Ok(matrix::signed_adjacency(s)),
        (GraphRef::Mixed(m), Model::Hermitian) => Ok(matrix::hermitian_adjacency(m)),
        (GraphRef::Oriented(o), Model::Skew) => Ok(matrix::skew_adjacency(o)),
        (g, model) => Err(param(format!(
            "model {model:?} does not apply to {}",
            flavour(&g)
        ))),
    }
}

fn flavour(g: &GraphRef<'_>) -> &'static str {
    match g {
        GraphRef::Simple(_) => "a simple graph",
        GraphRef::Signed(_) => "a signed graph",
        GraphRef::Mixed(_) => "a mixed graph",
        GraphRef::Oriented(_) => "an oriented graph",
    }
}

/// Spectrum of `g` under `model`.
pub fn spectrum<'a>(g: impl Into<GraphRef<'a>>, model: Model) -> Result<Spectrum> {
    eigenvalues(&model_matrix(g, model)?)
}

/// ρ_M(G): the largest modulus of an eigenvalue of the model matrix.
pub fn spectral_radius<'a>(g: impl Into<GraphRef<'a>>, model: Model) -> Result<f64> {
    Ok(spectrum(g, model)?.radius)
}

/// ρ_A(G), for callers that already know the graph is simple.
pub fn adjacency_radius(g: &Graph) -> f64 {
    symmetric_eigenvalues(g.order(), matrix::adjacency(g).real_part())
        .map(|v| v.last().copied().unwrap_or(0.0))
        .unwrap_or(f64::NAN)
}

/// det(λI - M) for a real matrix, by Gaussian elimination with partial pivoting.
pub fn charpoly_eval(m: &DenseMatrix, lambda: f64) -> Result<f64> {
    if !m.is_real() {
        return Err(Error::Unsupported(
            "characteristic polynomial needs a real matrix".into(),
        ));
    }
    let n = m.dim();
    let mut a: Vec<f64> = m.real_part().iter().map(|x| -x).collect();
    for i in 0..n {
        a[i * n + i] += lambda;
    }
    Ok(determinant(n, &mut a))
}

/// Determinant of a row-major matrix; destroys `a`.
pub(crate) fn determinant(n: usize, a: &mut [f64]) -> f64 {
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r, &s| a[r * n + col].abs().total_cmp(&a[s * n + col].abs()))
            .unwrap();
        if a[pivot * n + col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for r in col + 1..n {
            let f = a[r * n + col] / p;
            if f != 0.0 {
                for k in col..n {
                    a[r * n + k] -= f * a[col * n + k];
                }
            }
        }
    }
    det
}
