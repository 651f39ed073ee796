//! Exhaustive sweeps that check the classifiers' lists against computed spectra.
//!
//! A sweep is split into cases (one graph each) and a per-case check, so that callers can
//! run the checks in parallel; [`verify_theorem`] runs them in order.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::canon::decode;
use super::enumerate::{connected_codes, hereditary_codes, MAX_CONNECTED, MAX_HEREDITARY};
use crate::classify::{
    classify_a, classify_aalpha, classify_l, classify_mixed, classify_q, ClassificationResult,
    Region,
};
use crate::error::{param, Error, Result};
use crate::graph::{
    build_family, build_simple, diameter, recognize_shape, FamilySpec, Graph, MixedGraph,
};
use crate::limits::{constants, s1, s2, s3, s4};
use crate::spectra::adjacency_radius;

/// The checks [`verify_theorem`] can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TheoremId {
    /// Adjacency index below 2 iff path or small spider.
    ALt2,
    /// Adjacency index 2 iff cycle, double snake, K_{1,4} or one of three spiders.
    AEq2,
    /// Adjacency index in (2, √(2+√5)) iff one of the listed spiders or two-centre trees.
    AMid,
    /// Adjacency index in (√(2+√5), (3/2)√2) forces an open quipu, closed quipu or dagger.
    AQuipu,
    /// Open quipus with index below (3/2)√2 on n ≥ 6 vertices have diameter ≥ (2n-2)/3.
    ADiameter,
    /// Listed family members land in their adjacency band.
    AFamilies,
    /// The two-centre tree convention puts the five sporadic members in (2, √(2+√5)).
    HShapeConvention,
    QLt4,
    QEq4,
    /// Signless Laplacian index in (4, 2+√5].
    QTau1,
    /// Signless Laplacian index in (2+√5, 2+ε].
    QTau2,
    LLt4,
    LEq4,
    /// Laplacian families with a textual description land in their bands.
    LUpper,
    /// A_α index against 2 on a grid of α around the thresholds.
    AAlpha,
    /// Directed cycles and their one-arc variants against 2.
    HCycles,
}

const ALL: [(TheoremId, &str); 16] = [
    (TheoremId::ALt2, "A_lt2"),
    (TheoremId::AEq2, "A_eq2"),
    (TheoremId::AMid, "A_mid"),
    (TheoremId::AQuipu, "A_quipu"),
    (TheoremId::ADiameter, "A_diameter"),
    (TheoremId::AFamilies, "A_families"),
    (TheoremId::HShapeConvention, "Q_convention"),
    (TheoremId::QLt4, "Q_lt4"),
    (TheoremId::QEq4, "Q_eq4"),
    (TheoremId::QTau1, "Q_tau1"),
    (TheoremId::QTau2, "Q_tau2"),
    (TheoremId::LLt4, "L_lt4"),
    (TheoremId::LEq4, "L_eq4"),
    (TheoremId::LUpper, "L_upper"),
    (TheoremId::AAlpha, "Aalpha"),
    (TheoremId::HCycles, "H_cycles"),
];

impl TheoremId {
    pub fn all() -> impl Iterator<Item = TheoremId> {
        ALL.iter().map(|&(t, _)| t)
    }

    pub fn name(self) -> &'static str {
        ALL.iter().find(|&&(t, _)| t == self).unwrap().1
    }

    /// Default and largest order for the sweep.
    pub fn size_limits(self) -> (usize, usize) {
        match self {
            TheoremId::AQuipu | TheoremId::ADiameter => (12, MAX_HEREDITARY),
            TheoremId::AFamilies | TheoremId::LUpper => (14, 40),
            TheoremId::HShapeConvention => (14, 14),
            TheoremId::AAlpha => (8, MAX_CONNECTED),
            TheoremId::HCycles => (16, 64),
            _ => (9, MAX_CONNECTED),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL.iter()
            .find(|&&(_, name)| name.eq_ignore_ascii_case(s.trim()))
            .map(|&(t, _)| t)
            .ok_or_else(|| {
                let names: Vec<&str> = ALL.iter().map(|&(_, n)| n).collect();
                Error::Input(format!(
                    "unknown theorem id {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// A graph whose computed behaviour contradicts the checked statement.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Mismatch {
    /// Edge list, e.g. `n=4 0-1 1-2 2-3`, or a family literal.
    pub graph: String,
    pub expected: String,
    pub observed: String,
}

/// Outcome of a sweep.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub n_min: usize,
    pub n_max: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// One unit of work in a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum Case {
    Simple(Graph),
    /// A named family member.
    Family(FamilySpec),
    Mixed(FamilySpec, MixedGraph),
}

/// Text form of a graph for reports.
pub fn describe(g: &Graph) -> String {
    let mut s = format!("n={}", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!(" {u}-{v}"));
    }
    s
}

/// The α values checked for graphs on `n` vertices.
pub fn alpha_grid(n: usize) -> Result<Vec<f64>> {
    const DELTA: f64 = 1e-4;
    let mut grid = vec![0.0, 0.5, 1.0];
    let mut around = vec![s2()?.value, s3()?.value, s4()?.value];
    if n >= 4 {
        around.push(s1(n)?);
    }
    for s in around {
        grid.extend([s - DELTA, s, s + DELTA]);
    }
    grid.sort_by(f64::total_cmp);
    Ok(grid)
}

fn mid_region() -> Region {
    Region::between(2.0, false, constants().rho1, false)
}

fn tau_regions() -> (Region, Region) {
    let c = constants();
    (
        Region::between(4.0, false, c.tau1, true),
        Region::between(c.tau1, false, c.tau2, true),
    )
}

/// Structural membership of the band must coincide with spectral membership.
fn band_check(r: &ClassificationResult, band: Region, g: &str) -> Option<Mismatch> {
    let spectral = r.region == band;
    let structural = r.expected == Some(band);
    (spectral != structural).then(|| Mismatch {
        graph: g.into(),
        expected: match (&r.family, structural) {
            (Some(f), true) => format!("{f} in {band}"),
            (Some(f), false) => format!("{f} outside {band}"),
            (None, _) => format!("unlisted, outside {band}"),
        },
        observed: format!("radius {:.12} in {}", r.radius, r.region),
    })
}

/// Listed family members must land where the list puts them.
fn family_check(r: &ClassificationResult, g: &str) -> Option<Mismatch> {
    match r.expected {
        Some(e) if e != r.region => Some(Mismatch {
            graph: g.into(),
            expected: format!(
                "{} in {e}",
                r.family.as_ref().map_or(String::new(), |f| f.to_string())
            ),
            observed: format!("radius {:.12} in {}", r.radius, r.region),
        }),
        _ => None,
    }
}

fn family_cases(n_max: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(Case::Family(FamilySpec::Path(n)));
        if n >= 3 {
            out.push(Case::Family(FamilySpec::Cycle(n)));
        }
        if n >= 6 {
            out.push(Case::Family(FamilySpec::DoubleSnake(n)));
        }
    }
    for a in 1..n_max {
        for b in a..n_max {
            for c in b..n_max {
                if a + b + c < n_max {
                    out.push(Case::Family(FamilySpec::TShape(a, b, c)));
                }
            }
        }
    }
    for a in 1..n_max {
        for c in a..n_max {
            for b in 1..n_max {
                if a + b + c + 3 <= n_max {
                    out.push(Case::Family(FamilySpec::HShape(a, b, c)));
                }
            }
        }
    }
    out.push(Case::Family(FamilySpec::Star(4)));
    out.push(Case::Family(FamilySpec::Complete(4)));
    out
}

fn simple_cases(codes_by_n: Vec<(usize, Vec<u128>)>) -> Vec<Case> {
    codes_by_n
        .into_iter()
        .flat_map(|(n, codes)| codes.into_iter().map(move |c| Case::Simple(decode(n, c))))
        .collect()
}

/// The cases of a sweep over orders `n_min..=n_max`.
pub fn cases(id: TheoremId, n_min: usize, n_max: usize) -> Result<Vec<Case>> {
    let (_, limit) = id.size_limits();
    if n_max > limit || n_min == 0 || n_min > n_max {
        return Err(param(format!(
            "{id} runs for 1 <= n_min <= n_max <= {limit}"
        )));
    }
    Ok(match id {
        TheoremId::AQuipu | TheoremId::ADiameter => {
            let rho2 = constants().rho2;
            let levels = hereditary_codes(n_max, 4, |g| adjacency_radius(g) < rho2 - 1e-12)?;
            simple_cases(
                levels
                    .into_iter()
                    .enumerate()
                    .skip(n_min - 1)
                    .map(|(i, c)| (i + 1, c))
                    .collect(),
            )
        }
        TheoremId::AFamilies | TheoremId::LUpper => family_cases(n_max)
            .into_iter()
            .filter(|c| order_of(c) >= n_min)
            .collect(),
        TheoremId::HShapeConvention => [[1, 1, 2], [2, 4, 2], [2, 5, 3], [3, 7, 3], [3, 8, 4]]
            .into_iter()
            .map(|[a, b, c]| Case::Family(FamilySpec::HShape(a, b, c)))
            .filter(|c| (n_min..=n_max).contains(&order_of(c)))
            .collect(),
        TheoremId::HCycles => {
            let mut out = Vec::new();
            for n in n_min.max(3)..=n_max {
                for spec in [
                    FamilySpec::DirectedCycle(n),
                    FamilySpec::CTilde(n),
                    FamilySpec::CTildePrime(n),
                    FamilySpec::CTildeDoublePrime(n),
                ] {
                    let g = build_family(&spec)?.mixed().expect("digraph family");
                    out.push(Case::Mixed(spec, g));
                }
            }
            out
        }
        _ => {
            let mut by_n = Vec::new();
            for n in n_min..=n_max {
                by_n.push((n, connected_codes(n)?));
            }
            simple_cases(by_n)
        }
    })
}

fn order_of(c: &Case) -> usize {
    match c {
        Case::Simple(g) => g.order(),
        Case::Family(s) => s.order(),
        Case::Mixed(_, g) => g.order(),
    }
}

/// Checks one case.
pub fn check_case(id: TheoremId, case: &Case) -> Result<Vec<Mismatch>> {
    let (g, label) = match case {
        Case::Simple(g) => (g.clone(), describe(g)),
        Case::Family(spec) => (build_simple(spec)?, spec.to_string()),
        Case::Mixed(spec, m) => {
            let r = classify_mixed(m)?;
            return Ok(family_check(&r, &spec.to_string()).into_iter().collect());
        }
    };
    let (tau1, tau2) = tau_regions();
    let one = |m: Option<Mismatch>| Ok(m.into_iter().collect());
    match id {
        TheoremId::ALt2 => one(band_check(&classify_a(&g)?, Region::below(2.0), &label)),
        TheoremId::AEq2 => one(band_check(&classify_a(&g)?, Region::equal(2.0), &label)),
        TheoremId::AMid => one(band_check(&classify_a(&g)?, mid_region(), &label)),
        TheoremId::AQuipu => {
            let c = constants();
            let rho = adjacency_radius(&g);
            let s = recognize_shape(&g)?;
            let ok = !(rho > c.rho1 && rho < c.rho2)
                || s.open_quipu
                || s.closed_quipu
                || s.dagger.is_some();
            one((!ok).then(|| Mismatch {
                graph: label,
                expected: "open quipu, closed quipu or dagger".into(),
                observed: format!("radius {rho:.12}, none of the shapes"),
            }))
        }
        TheoremId::ADiameter => {
            let n = g.order();
            let s = recognize_shape(&g)?;
            let d = diameter(&g)?;
            let bound = (2 * n - 2) as f64 / 3.0;
            if s.open_quipu && n >= 6 {
                one((3 * d < 2 * n - 2).then(|| Mismatch {
                    graph: label,
                    expected: format!("open quipu, diameter >= {bound:.3}"),
                    observed: format!("diameter {d}"),
                }))
            } else if s.closed_quipu && n >= 13 {
                one((3 * d <= n || 3 * d > 2 * n - 2).then(|| Mismatch {
                    graph: label,
                    expected: format!(
                        "closed quipu, diameter in ({:.3}, {bound:.3}]",
                        n as f64 / 3.0
                    ),
                    observed: format!("diameter {d}"),
                }))
            } else {
                Ok(Vec::new())
            }
        }
        TheoremId::AFamilies | TheoremId::HShapeConvention => {
            let r = classify_a(&g)?;
            if id == TheoremId::HShapeConvention && r.region != mid_region() {
                return one(Some(Mismatch {
                    graph: label,
                    expected: format!("in {}", mid_region()),
                    observed: format!("radius {:.12} in {}", r.radius, r.region),
                }));
            }
            let mut out: Vec<Mismatch> = family_check(&r, &label).into_iter().collect();
            out.extend(family_check(&classify_q(&g)?, &label));
            Ok(out)
        }
        TheoremId::QLt4 => one(band_check(&classify_q(&g)?, Region::below(4.0), &label)),
        TheoremId::QEq4 => one(band_check(&classify_q(&g)?, Region::equal(4.0), &label)),
        TheoremId::QTau1 => one(band_check(&classify_q(&g)?, tau1, &label)),
        TheoremId::QTau2 => one(band_check(&classify_q(&g)?, tau2, &label)),
        TheoremId::LLt4 => one(band_check(&classify_l(&g)?, Region::below(4.0), &label)),
        TheoremId::LEq4 => one(band_check(&classify_l(&g)?, Region::equal(4.0), &label)),
        TheoremId::LUpper => one(family_check(&classify_l(&g)?, &label)),
        TheoremId::AAlpha => {
            let mut out = Vec::new();
            for alpha in alpha_grid(g.order())? {
                let r = classify_aalpha(&g, alpha)?;
                if !r.agreement {
                    out.push(Mismatch {
                        graph: format!("{label} alpha={alpha:.12}"),
                        expected: format!(
                            "{} {}",
                            r.family
                                .as_ref()
                                .map_or("unlisted".to_string(), |f| f.to_string()),
                            r.expected.map_or(String::new(), |e| e.to_string())
                        ),
                        observed: format!("radius {:.12} in {}", r.radius, r.region),
                    });
                }
            }
            Ok(out)
        }
        TheoremId::HCycles => Err(param("H_cycles runs on digraph cases")),
    }
}

/// Runs a whole sweep sequentially.
pub fn verify_theorem(id: TheoremId, n_min: usize, n_max: usize) -> Result<VerificationReport> {
    let cs = cases(id, n_min, n_max)?;
    let mut mismatches = Vec::new();
    for c in &cs {
        mismatches.extend(check_case(id, c)?);
    }
    Ok(VerificationReport {
        theorem: id,
        n_min,
        n_max,
        checked: cs.len(),
        mismatches,
    })
}
