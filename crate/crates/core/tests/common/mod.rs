//! Shared test helpers: an independent eigen oracle and random graph generators.
#![allow(dead_code)]

use nalgebra::{Complex, DMatrix};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use speclim_core::{DenseMatrix, Graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Eigenvalues of a Hermitian (or real symmetric) matrix via nalgebra, ascending.
pub fn oracle_eigenvalues(m: &DenseMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut v: Vec<f64> = if m.is_real() {
        DMatrix::from_fn(n, n, |i, j| m.re(i, j))
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect()
    } else {
        DMatrix::from_fn(n, n, |i, j| Complex::new(m.re(i, j), m.im(i, j)))
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect()
    };
    v.sort_by(f64::total_cmp);
    v
}

/// Largest eigenvalue of a real symmetric matrix by nalgebra.
pub fn oracle_radius(m: &DenseMatrix) -> f64 {
    oracle_eigenvalues(m)
        .into_iter()
        .fold(0.0f64, |a, b| a.max(b.abs()))
}

/// Determinant of `λI - M` for a real matrix, via LU.
pub fn oracle_charpoly(m: &DenseMatrix, lambda: f64) -> f64 {
    let n = m.dim();
    DMatrix::from_fn(n, n, |i, j| {
        let d = if i == j { lambda } else { 0.0 };
        d - m.re(i, j)
    })
    .determinant()
}

pub fn assert_spectra_close(a: &[f64], b: &[f64], tol: f64) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        assert!((x - y).abs() < tol, "{a:?} vs {b:?}");
    }
}

/// G(n, p) with a fixed seed.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.try_add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A random connected graph: a random spanning tree plus extra edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.try_add_edge(order[i], order[j]).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(extra) {
                g.try_add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    random_connected(rng, n, 0.0)
}
