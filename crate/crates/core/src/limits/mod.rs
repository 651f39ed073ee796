//! Limit points of spectral radii, computed by root finding.
//!
//! Every root comes with its bracket and a scaled residual: the value of the defining
//! equation divided by the sum of the magnitudes of its terms.

use alloc::format;
use alloc::string::String;

use crate::error::{param, Error, Result};
use crate::math::{bisect, cbrt, largest_root, powi, smallest_root, sqrt};

mod compound;
mod shearer;

pub use compound::{chi2_u, chi_u, xy_limit};
pub use shearer::{shearer_approach, ShearerStep};

/// A computed limit value.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LimitReport {
    pub value: f64,
    /// Short description of the defining equation.
    pub equation: String,
    /// Bracket on `value`, `lo <= value <= hi`.
    pub bracket: (f64, f64),
    pub iterations: usize,
    /// Scaled residual of the defining equation at the root.
    pub residual: f64,
    /// Set when the limit is the trivial value 2 rather than a root.
    pub degenerate: bool,
}

/// The named constants.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Constants {
    /// Golden ratio (√5+1)/2.
    pub tau: f64,
    /// √(2+√5).
    pub rho1: f64,
    /// (3/2)√2.
    pub rho2: f64,
    /// Real root of x³ = x² + x + 1, from the cube-root formula.
    pub omega: f64,
    /// ((54-6√33)^{1/3} + (54+6√33)^{1/3}) / 3.
    pub epsilon: f64,
    /// 2 + √5.
    pub tau1: f64,
    /// 2 + ε.
    pub tau2: f64,
}

pub fn constants() -> Constants {
    let r33 = sqrt(33.0);
    let omega = (cbrt(19.0 + 3.0 * r33) + cbrt(19.0 - 3.0 * r33) + 1.0) / 3.0;
    let epsilon = (cbrt(54.0 - 6.0 * r33) + cbrt(54.0 + 6.0 * r33)) / 3.0;
    Constants {
        tau: (sqrt(5.0) + 1.0) / 2.0,
        rho1: sqrt(2.0 + sqrt(5.0)),
        rho2: 1.5 * sqrt(2.0),
        omega,
        epsilon,
        tau1: 2.0 + sqrt(5.0),
        tau2: 2.0 + epsilon,
    }
}

/// Evaluates Σ c_k x^k (coefficients from the highest degree) by Horner, returning the
/// value and Σ |c_k| x^k for scaling.
fn horner(coeffs: &[f64], x: f64) -> (f64, f64) {
    let (mut v, mut m) = (0.0, 0.0);
    for &c in coeffs {
        v = v * x + c;
        m = m * x.abs() + c.abs();
    }
    (v, m)
}

fn scaled(value: f64, magnitude: f64) -> f64 {
    if magnitude == 0.0 {
        value.abs()
    } else {
        value.abs() / magnitude
    }
}

fn shift(x: f64) -> f64 {
    let r = sqrt(x);
    r + 1.0 / r
}

/// η_n = √β_n + 1/√β_n, where β_n is the positive root of x^{n+1} - (1 + x + … + x^{n-1}).
pub fn hoffman_eta(n: usize) -> Result<LimitReport> {
    if n == 0 {
        return Err(param("the sequence starts at n = 1"));
    }
    let mut coeffs = alloc::vec![-1.0; n + 2];
    coeffs[0] = 1.0;
    coeffs[1] = 0.0;
    let mut f = |x: f64| horner(&coeffs, x).0;
    let root = bisect(&mut f, 1.0, 2.0, 1e-15);
    let beta = root.value;
    let (v, m) = horner(&coeffs, beta);
    Ok(LimitReport {
        value: shift(beta),
        equation: format!("x^{} - (1 + ... + x^{})", n + 1, n - 1),
        bracket: (shift(root.lo), shift(root.hi)),
        iterations: root.iterations,
        residual: scaled(v, m),
        degenerate: false,
    })
}

/// Evaluates f_n(x) = x^{n+1} - (1 + … + x^{n-1})(√x + 1)² and its term magnitude.
fn guo_poly(n: usize, x: f64) -> (f64, f64) {
    let geo: f64 = (0..n).map(|k| powi(x, k as u32)).sum();
    let sq = (sqrt(x) + 1.0) * (sqrt(x) + 1.0);
    let lead = powi(x, (n + 1) as u32);
    (lead - geo * sq, lead + geo * sq)
}

/// α_n = 2 + √β_n + 1/√β_n, where β_0 = 1 and β_n is the largest positive root of
/// x^{n+1} - (1 + x + … + x^{n-1})(√x + 1)².
pub fn guo_alpha(n: usize) -> Result<LimitReport> {
    if n == 0 {
        return Ok(LimitReport {
            value: 4.0,
            equation: "beta_0 = 1".into(),
            bracket: (4.0, 4.0),
            iterations: 0,
            residual: 0.0,
            degenerate: false,
        });
    }
    let root = largest_root(|x| guo_poly(n, x).0, 1.0, 4.0, 3000, 1e-15).ok_or_else(|| {
        Error::NoConvergence {
            iterations: 3000,
            residual: f64::NAN,
        }
    })?;
    let (v, m) = guo_poly(n, root.value);
    Ok(LimitReport {
        value: 2.0 + shift(root.value),
        equation: format!("x^{} - (1 + ... + x^{})(sqrt(x) + 1)^2", n + 1, n - 1),
        bracket: (2.0 + shift(root.lo), 2.0 + shift(root.hi)),
        iterations: root.iterations,
        residual: scaled(v, m),
        degenerate: false,
    })
}

/// The A_α thresholds.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Thresholds {
    pub s1: f64,
    pub s2: LimitReport,
    pub s3: LimitReport,
    pub s4: LimitReport,
}

/// s_1(n) = 4 / (n + 1 + √((n+1)² - 16)) for `n >= 4`.
pub fn s1(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(param(format!("s1 needs n >= 4, got {n}")));
    }
    let m = (n + 1) as f64;
    Ok(4.0 / (m + sqrt(m * m - 16.0)))
}

fn cubic_root(coeffs: [f64; 4], name: &str) -> Result<LimitReport> {
    let root = smallest_root(|x| horner(&coeffs, x).0, 0.0, 1.0, 1000, 1e-16).ok_or_else(|| {
        Error::NoConvergence {
            iterations: 1000,
            residual: f64::NAN,
        }
    })?;
    let (v, m) = horner(&coeffs, root.value);
    Ok(LimitReport {
        value: root.value,
        equation: name.into(),
        bracket: (root.lo, root.hi),
        iterations: root.iterations,
        residual: scaled(v, m),
        degenerate: false,
    })
}

pub fn s2() -> Result<LimitReport> {
    cubic_root([2.0, -11.0, 16.0, -3.0], "2a^3 - 11a^2 + 16a - 3")
}

pub fn s3() -> Result<LimitReport> {
    cubic_root([1.0, -6.0, 9.0, -1.0], "a^3 - 6a^2 + 9a - 1")
}

pub fn s4() -> Result<LimitReport> {
    cubic_root([2.0, -13.0, 20.0, -1.0], "2a^3 - 13a^2 + 20a - 1")
}

pub fn aalpha_thresholds(n: usize) -> Result<Thresholds> {
    Ok(Thresholds {
        s1: s1(n)?,
        s2: s2()?,
        s3: s3()?,
        s4: s4()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_agree() {
        let c = constants();
        assert!((c.epsilon - (c.omega + 1.0 / c.omega)).abs() < 1e-12);
        let w = c.omega;
        assert!((w * w * w - w * w - w - 1.0).abs() < 1e-12);
        assert!((c.omega - 1.839_286_755_2).abs() < 1e-10);
        assert!((c.rho1 - 2.058_171_027_271_492).abs() < 1e-12);
        assert!((c.rho1 - (sqrt(c.tau) + 1.0 / sqrt(c.tau))).abs() < 1e-14);
    }

    #[test]
    fn first_terms() {
        let e1 = hoffman_eta(1).unwrap();
        assert_eq!(e1.value, 2.0);
        assert!(e1.residual < 1e-12);
        let e2 = hoffman_eta(2).unwrap();
        // Plastic number.
        let beta = 1.324_717_957_244_746;
        assert!((e2.value - (sqrt(beta) + 1.0 / sqrt(beta))).abs() < 1e-12);
        assert!(hoffman_eta(0).is_err());
        assert_eq!(guo_alpha(0).unwrap().value, 4.0);
        let a1 = guo_alpha(1).unwrap();
        assert!((a1.value - (2.0 + sqrt(5.0))).abs() < 1e-12);
        assert!(a1.bracket.0 <= a1.value && a1.value <= a1.bracket.1);
    }

    #[test]
    fn thresholds_match_prefixes() {
        let t = aalpha_thresholds(4).unwrap();
        assert_eq!(t.s1, 0.5);
        assert!(t.s2.value > 0.2192 && t.s2.value < 0.2193);
        assert!(t.s3.value > 0.1206 && t.s3.value < 0.1207);
        assert!(t.s4.value > 0.0517 && t.s4.value < 0.0518);
        for r in [&t.s2, &t.s3, &t.s4] {
            assert!(r.residual < 1e-12);
        }
        assert!(s1(3).is_err());
    }
}
