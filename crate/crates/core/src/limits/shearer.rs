//! Caterpillars whose adjacency radii increase toward a prescribed value λ ≥ √(2+√5).
//!
//! Each step appends a spine vertex and then gives it as many pendant leaves as possible
//! while the caterpillar, continued by an infinite path from its last spine vertex, still
//! has λI - A positive semidefinite. That test uses the pivots of a leaf-first LDLᵀ
//! elimination:
//!
//! ```text
//! p_1 = λ - k_1/λ,   p_i = λ - k_i/λ - 1/p_{i-1},   all p_i > 0,   p_m ≥ t,
//! ```
//!
//! where `k_i` counts the leaves on spine vertex `i` and `t = (λ - √(λ²-4))/2` is what an
//! infinite path contributes. Since an empty step keeps `p ≥ t`, the rule never gets stuck
//! and every emitted caterpillar has radius below λ.

use alloc::format;
use alloc::vec::Vec;

use super::constants;
use crate::error::{param, Result};
use crate::graph::{build_family, FamilySpec};
use crate::math::sqrt;
use crate::spectra::adjacency_radius;

/// One caterpillar of the sequence.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ShearerStep {
    /// Leaves per spine vertex.
    pub legs: Vec<usize>,
    pub radius: f64,
}

impl ShearerStep {
    pub fn spec(&self) -> FamilySpec {
        FamilySpec::Caterpillar(self.legs.clone())
    }
}

/// Gap below which the sequence is considered converged and emission stops.
pub const CONVERGED_GAP: f64 = 1e-9;

/// Up to `steps` nested caterpillars with increasing radii approaching `target`.
///
/// Stops early once `target - ρ` drops below [`CONVERGED_GAP`]; beyond that point the
/// increments are below what double precision resolves.
pub fn shearer_approach(target: f64, steps: usize) -> Result<Vec<ShearerStep>> {
    let rho1 = constants().rho1;
    if !target.is_finite() || target < rho1 - 1e-9 {
        return Err(param(format!(
            "target {target} is below sqrt(2+sqrt(5)) = {rho1}"
        )));
    }
    let lam = target;
    let t = (lam - sqrt((lam * lam - 4.0).max(0.0))) / 2.0;
    let mut legs: Vec<usize> = Vec::new();
    let mut last: Option<f64> = None;
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        let pivot = |k: usize| lam - k as f64 / lam - last.map_or(0.0, |p| 1.0 / p);
        let mut k = 0;
        loop {
            let p = pivot(k + 1);
            if p > 0.0 && p >= t {
                k += 1;
            } else {
                break;
            }
        }
        last = Some(pivot(k));
        legs.push(k);
        let g = build_family(&FamilySpec::Caterpillar(legs.clone()))?
            .simple()
            .expect("caterpillars are simple graphs");
        let radius = adjacency_radius(&g);
        out.push(ShearerStep {
            legs: legs.clone(),
            radius,
        });
        if lam - radius < CONVERGED_GAP {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn increasing_and_bounded() {
        for &lam in &[2.1, 2.2, 2.5, 3.0] {
            let seq = shearer_approach(lam, 60).unwrap();
            for w in seq.windows(2) {
                assert!(w[0].radius < w[1].radius);
                assert_eq!(&w[1].legs[..w[0].legs.len()], &w[0].legs[..]);
            }
            let last = seq.last().unwrap();
            assert!(
                last.radius <= lam && lam - last.radius < 0.01,
                "lambda {lam}"
            );
        }
    }

    #[test]
    fn below_threshold_is_rejected() {
        assert!(shearer_approach(2.05, 5).is_err());
        assert!(shearer_approach(constants().rho1, 5).is_ok());
    }
}
