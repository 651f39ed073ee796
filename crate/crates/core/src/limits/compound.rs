//! Limits of ρ_{A_α} along graphs with growing pendant paths.

use alloc::format;
use alloc::string::String;

use super::LimitReport;
use crate::charpoly::{closed_forms, phi_graph, phi_graph_deleted, AlphaPoint};
use crate::error::{param, Result};
use crate::graph::Graph;
use crate::math::largest_root;

const SCAN_STEPS: usize = 4000;
const ROOT_TOL: f64 = 1e-14;
// The open end of the search interval (2, upper].
const LOWER: f64 = 2.0 + 1e-9;

fn check(g: &Graph, u: usize, alpha: f64) -> Result<()> {
    AlphaPoint::new(3.0, alpha)?;
    if u >= g.order() {
        return Err(param(format!("vertex {u} outside 0..{}", g.order())));
    }
    g.require_connected()
}

fn degenerate(equation: &str) -> LimitReport {
    LimitReport {
        value: 2.0,
        equation: format!("{equation} (degenerate)"),
        bracket: (2.0, 2.0),
        iterations: 0,
        residual: 0.0,
        degenerate: true,
    }
}

/// Solves `terms(λ) = (a, b)` with `a - b = 0` for its largest root in `(2, upper]`.
fn solve(equation: &str, upper: f64, mut terms: impl FnMut(f64) -> (f64, f64)) -> LimitReport {
    let root = largest_root(
        |l| {
            let (a, b) = terms(l);
            a - b
        },
        LOWER,
        upper,
        SCAN_STEPS,
        ROOT_TOL,
    );
    match root {
        None => degenerate(equation),
        Some(r) => {
            let (a, b) = terms(r.value);
            let mag = a.abs() + b.abs();
            LimitReport {
                value: r.value,
                equation: String::from(equation),
                bracket: (r.lo, r.hi),
                iterations: r.iterations,
                residual: if mag == 0.0 { 0.0 } else { (a - b).abs() / mag },
                degenerate: false,
            }
        }
    }
}

fn h_at(lambda: f64, alpha: f64) -> f64 {
    closed_forms(AlphaPoint { lambda, alpha })
        .map(|c| c.h)
        .unwrap_or(f64::NAN)
}

/// χ_u(G): the limit of ρ_{A_α}(G_u(P_n)) as n grows.
///
/// The largest root in (2, Δ(G)+1] of (1 - αh)φ(G) - (α - (2α-1)h)φ(G)_u, with h = h(λ)_α.
/// When G_u(P_n) is a path, or no root exists above 2, the limit is 2.
pub fn chi_u(g: &Graph, u: usize, alpha: f64) -> Result<LimitReport> {
    check(g, u, alpha)?;
    const EQ: &str = "(1 - a h) phi(G) - (a - (2a - 1) h) phi(G)_u";
    if g.max_degree() <= 2 && g.is_tree() && g.degree(u) <= 1 {
        return Ok(degenerate(EQ));
    }
    let upper = g.max_degree() as f64 + 1.0;
    Ok(solve(EQ, upper, |lambda| {
        let p = AlphaPoint { lambda, alpha };
        let h = h_at(lambda, alpha);
        let a = (1.0 - alpha * h) * phi_graph(g, p);
        let b = (alpha - (2.0 * alpha - 1.0) * h) * phi_graph_deleted(g, u, p);
        (a, b)
    }))
}

/// χ'_u(G): the limit of ρ_{A_α}(G_u(P_n, P_n)) as n grows.
///
/// The largest root in (2, Δ(G)+2] of
/// (1 - αh)(φ(G)(1 - αh) - 2αφ(G)_u + 2(2α-1)φ(G)_u h). The limit is 2 for G = K_1.
pub fn chi2_u(g: &Graph, u: usize, alpha: f64) -> Result<LimitReport> {
    check(g, u, alpha)?;
    const EQ: &str = "(1 - a h)(phi(G)(1 - a h) - 2a phi(G)_u + 2(2a - 1) phi(G)_u h)";
    if g.order() == 1 {
        return Ok(degenerate(EQ));
    }
    let upper = g.max_degree() as f64 + 2.0;
    Ok(solve(EQ, upper, |lambda| {
        let p = AlphaPoint { lambda, alpha };
        let h = h_at(lambda, alpha);
        let w = 1.0 - alpha * h;
        let phi = phi_graph(g, p);
        let phu = phi_graph_deleted(g, u, p);
        let a = w * (phi * w + 2.0 * (2.0 * alpha - 1.0) * phu * h);
        let b = w * 2.0 * alpha * phu;
        (a, b)
    }))
}

/// Limit of ρ_{A_α} for `X` and `Y` joined by a growing path: max(χ_x(X), χ_y(Y)).
pub fn xy_limit(xg: &Graph, x: usize, yg: &Graph, y: usize, alpha: f64) -> Result<LimitReport> {
    let a = chi_u(xg, x, alpha)?;
    let b = chi_u(yg, y, alpha)?;
    Ok(if b.value > a.value { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};
    use crate::math::sqrt;

    fn graph(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap().simple().unwrap()
    }

    #[test]
    fn claw_centre_closed_form() {
        let claw = graph(FamilySpec::Star(3));
        for k in 0..10 {
            let a = k as f64 / 10.0;
            let want = (5.0 * a + 3.0 * sqrt(2.0 - 4.0 * a + 3.0 * a * a)) / 2.0;
            let got = chi_u(&claw, 0, a).unwrap();
            assert!(
                (got.value - want).abs() < 1e-9,
                "alpha {a}: {} vs {want}",
                got.value
            );
            assert!(got.residual < 1e-12);
        }
    }

    #[test]
    fn degenerate_cases() {
        let k1 = graph(FamilySpec::Path(1));
        assert!(chi_u(&k1, 0, 0.0).unwrap().degenerate);
        assert!(chi2_u(&k1, 0, 0.0).unwrap().degenerate);
        let p3 = graph(FamilySpec::Path(3));
        assert!(chi_u(&p3, 0, 0.3).unwrap().degenerate);
        // T_{1,1,n}: limit 2 at alpha = 0 without being a path.
        assert_eq!(chi_u(&p3, 1, 0.0).unwrap().value, 2.0);
    }

    #[test]
    fn two_paths_dominate_one() {
        let claw = graph(FamilySpec::Star(3));
        let one = chi_u(&claw, 0, 0.0).unwrap().value;
        let two = chi2_u(&claw, 0, 0.0).unwrap().value;
        assert!(two >= one);
    }

    #[test]
    fn bridge_limit_is_the_larger_side() {
        let claw = graph(FamilySpec::Star(3));
        let k1 = graph(FamilySpec::Path(1));
        let r = xy_limit(&claw, 0, &k1, 0, 0.0).unwrap();
        assert!((r.value - 1.5 * sqrt(2.0)).abs() < 1e-10);
        assert_eq!(xy_limit(&k1, 0, &k1, 0, 0.0).unwrap().value, 2.0);
        assert!(chi_u(&claw, 0, 1.0).is_err());
    }
}
