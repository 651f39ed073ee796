//! A_α characteristic polynomials of paths, their truncations and cycles, evaluated at a point.
//!
//! Notation: φ(M) = det(λI - M). `P_n` is A_α of the path on `n` vertices, `B_n` is A_α(P_{n+1})
//! with one end row/column removed, `H_n` is A_α(P_{n+2}) with both end rows/columns removed.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{param, Error, Result};
use crate::graph::{join_graphs, Graph};
use crate::math::{powi, sqrt};
use crate::matrix::a_alpha;
use crate::spectra::charpoly_eval;

/// Evaluation point `(λ, α)` with `α ∈ [0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AlphaPoint {
    pub lambda: f64,
    pub alpha: f64,
}

impl AlphaPoint {
    pub fn new(lambda: f64, alpha: f64) -> Result<Self> {
        if !lambda.is_finite() || !alpha.is_finite() {
            return Err(Error::Input("lambda and alpha must be finite".into()));
        }
        if !(0.0..1.0).contains(&alpha) {
            return Err(param(format!("alpha must lie in [0,1), got {alpha}")));
        }
        Ok(AlphaPoint { lambda, alpha })
    }

    fn beta2(&self) -> f64 {
        let b = 1.0 - self.alpha;
        b * b
    }
}

/// φ(P_n), with φ(P_0) = (1-2α)/(1-α)².
pub fn phi_path(n: usize, p: AlphaPoint) -> f64 {
    let (l, a) = (p.lambda, p.alpha);
    let p0 = (1.0 - 2.0 * a) / p.beta2();
    if n == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, l);
    for _ in 1..n {
        let next = (l - 2.0 * a) * cur - p.beta2() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// φ(B_n), with φ(B_0) = 1 and φ(B_1) = λ - α.
///
/// φ(B_n) = φ(P_n) - αφ(B_{n-1}) also holds, but iterating it amplifies rounding by
/// α per step; the three-term path recurrence is used instead.
pub fn phi_b(n: usize, p: AlphaPoint) -> f64 {
    let (l, a) = (p.lambda, p.alpha);
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, l - a);
    for _ in 1..n {
        let next = (l - 2.0 * a) * cur - p.beta2() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// φ(H_n), with φ(H_0) = 1 and φ(H_1) = λ - 2α.
pub fn phi_h(n: usize, p: AlphaPoint) -> f64 {
    let c = p.lambda - 2.0 * p.alpha;
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, c);
    for _ in 1..n {
        let next = c * cur - p.beta2() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// φ(C_m) for the cycle on `m >= 3` vertices.
pub fn phi_cycle(m: usize, p: AlphaPoint) -> Result<f64> {
    if m < 3 {
        return Err(param(format!("cycles need at least 3 vertices, got {m}")));
    }
    let n = m - 2;
    let a = p.alpha;
    let sign = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(
        (p.lambda - 2.0 * a) * phi_h(n + 1, p) - 2.0 * p.beta2() * phi_h(n, p)
            + 2.0 * sign * powi(a - 1.0, (n + 2) as u32),
    )
}

/// Δ, h, s, t at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClosedForms {
    pub delta: f64,
    pub h: f64,
    pub s: f64,
    pub t: f64,
}

/// Δ = √((λ-4α+2)(λ-2)), h = (λ-Δ)/(2α(λ-2)+2), s, t = (λ-2α ± Δ)/2.
pub fn closed_forms(p: AlphaPoint) -> Result<ClosedForms> {
    let (l, a) = (p.lambda, p.alpha);
    let disc = (l - 4.0 * a + 2.0) * (l - 2.0);
    if disc < 0.0 {
        return Err(Error::Domain(format!("(λ-4α+2)(λ-2) = {disc} is negative")));
    }
    let delta = sqrt(disc);
    let h = (l - delta) / (2.0 * a * (l - 2.0) + 2.0);
    Ok(ClosedForms {
        delta,
        h,
        s: (l - 2.0 * a + delta) / 2.0,
        t: (l - 2.0 * a - delta) / 2.0,
    })
}

fn nonzero_delta(p: AlphaPoint) -> Result<ClosedForms> {
    let cf = closed_forms(p)?;
    if cf.delta == 0.0 {
        return Err(Error::Domain("Δ vanishes at this point".into()));
    }
    Ok(cf)
}

/// φ(H_n) = Δ⁻¹(s^{n+1} - t^{n+1}).
pub fn phi_h_closed(n: usize, p: AlphaPoint) -> Result<f64> {
    let ClosedForms { delta, s, t, .. } = nonzero_delta(p)?;
    let k = (n + 1) as u32;
    Ok((powi(s, k) - powi(t, k)) / delta)
}

/// φ(P_{n+1}) = Δ⁻¹((s+α)²sⁿ - (t+α)²tⁿ).
pub fn phi_path_closed(n: usize, p: AlphaPoint) -> Result<f64> {
    let ClosedForms { delta, s, t, .. } = nonzero_delta(p)?;
    let a = p.alpha;
    let k = n as u32;
    Ok(((s + a) * (s + a) * powi(s, k) - (t + a) * (t + a) * powi(t, k)) / delta)
}

/// φ(B_{n+1}) in closed form; needs `α ∈ (0, 1)`.
pub fn phi_b_closed(n: usize, p: AlphaPoint) -> Result<f64> {
    let ClosedForms { delta, s, t, .. } = nonzero_delta(p)?;
    let a = p.alpha;
    if a == 0.0 {
        return Err(Error::Domain(
            "the closed form for B needs alpha > 0".into(),
        ));
    }
    let c = p.beta2() / a;
    let k = n as u32;
    let lead = a / (a * (p.lambda - 2.0) + 1.0);
    Ok(
        lead * ((s + a) * (s + a) * (s + c) * powi(s, k)
            - (t + a) * (t + a) * (t + c) * powi(t, k))
            / delta,
    )
}

/// Ratios φ(B_{n-1})/φ(P_n) and φ(H_{n-2})/φ(B_{n-1}) at `n = n_max`, against h(λ)_α.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RatioReport {
    pub n: usize,
    pub h: f64,
    pub b_over_p: f64,
    pub h_over_b: f64,
    pub b_over_p_error: f64,
    pub h_over_b_error: f64,
}

/// Computes the ratio sequences with a common rescaling so that long runs neither
/// overflow nor underflow.
pub fn ratio_limits(p: AlphaPoint, n_max: usize) -> Result<RatioReport> {
    if p.lambda <= 2.0 {
        return Err(Error::Domain(format!(
            "ratios need λ > 2, got {}",
            p.lambda
        )));
    }
    if n_max < 2 {
        return Err(param("n_max must be at least 2"));
    }
    let h = closed_forms(p)?.h;
    let a = p.alpha;
    let c = p.lambda - 2.0 * a;
    let b2 = p.beta2();
    // Sequences indexed from 0.
    let mut ps: Vec<f64> = Vec::with_capacity(n_max + 1);
    let mut bs: Vec<f64> = Vec::with_capacity(n_max + 1);
    let mut hs: Vec<f64> = Vec::with_capacity(n_max + 1);
    ps.push((1.0 - 2.0 * a) / b2);
    bs.push(1.0);
    hs.push(1.0);
    for k in 1..=n_max {
        let pk = if k == 1 {
            p.lambda
        } else {
            c * ps[k - 1] - b2 * ps[k - 2]
        };
        let hk = if k == 1 {
            c
        } else {
            c * hs[k - 1] - b2 * hs[k - 2]
        };
        let bk = if k == 1 {
            p.lambda - a
        } else {
            c * bs[k - 1] - b2 * bs[k - 2]
        };
        ps.push(pk);
        hs.push(hk);
        bs.push(bk);
        let mag = pk.abs().max(hk.abs());
        if mag > 1e150 || (mag < 1e-150 && mag > 0.0) {
            let scale = 1.0 / mag;
            for v in ps.iter_mut().chain(bs.iter_mut()).chain(hs.iter_mut()) {
                *v *= scale;
            }
        }
    }
    let n = n_max;
    let b_over_p = bs[n - 1] / ps[n];
    let h_over_b = hs[n - 2] / bs[n - 1];
    Ok(RatioReport {
        n,
        h,
        b_over_p,
        h_over_b,
        b_over_p_error: (b_over_p - h).abs(),
        h_over_b_error: (h_over_b - h).abs(),
    })
}

/// φ(G) for A_α(G).
pub fn phi_graph(g: &Graph, p: AlphaPoint) -> f64 {
    let m = a_alpha(g, p.alpha).expect("alpha validated by AlphaPoint");
    charpoly_eval(&m, p.lambda).expect("A_alpha is real")
}

/// φ(G)_u: the characteristic polynomial of A_α(G) with row and column `u` removed.
pub fn phi_graph_deleted(g: &Graph, u: usize, p: AlphaPoint) -> f64 {
    let m = a_alpha(g, p.alpha)
        .expect("alpha validated by AlphaPoint")
        .delete(u);
    charpoly_eval(&m, p.lambda).expect("A_alpha is real")
}

/// φ of the graph obtained by joining `u ∈ G1` to `v ∈ G2`, via
/// φ1φ2 - αφ1_uφ2 - αφ1φ2_v + (2α-1)φ1_uφ2_v.
pub fn join_phi(g1: &Graph, u: usize, g2: &Graph, v: usize, p: AlphaPoint) -> Result<f64> {
    // Validates the indices.
    join_graphs(g1, u, g2, v)?;
    let a = p.alpha;
    let (f1, f1u) = (phi_graph(g1, p), phi_graph_deleted(g1, u, p));
    let (f2, f2v) = (phi_graph(g2, p), phi_graph_deleted(g2, v, p));
    Ok(f1 * f2 - a * f1u * f2 - a * f1 * f2v + (2.0 * a - 1.0) * f1u * f2v)
}
