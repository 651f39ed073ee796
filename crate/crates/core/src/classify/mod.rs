//! Membership of connected graphs in the characterized spectral bands.
//!
//! Each classifier computes the spectral radius, places it in a band, and independently
//! matches the graph against the named families known to live in each band. Where the
//! families of a band are listed completely, a graph in that band must match one of them.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::error::{param, Result};
use crate::graph::{recognize_shape, Graph, ShapeReport};
use crate::limits::{constants, s1, s2, s3, s4};
use crate::spectra::{spectral_radius, Model};

mod mixed;

pub use mixed::{classify_mixed, cycle_gain};

/// Tolerance for placing a spectral radius on a band boundary.
pub const BOUNDARY_TOL: f64 = 1e-8;

/// Distance below which a radius is taken to equal a threshold regardless of structure.
pub const EXACT_TOL: f64 = 1e-12;

/// An interval of the real line; `None` bounds are unbounded.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Region {
    pub lo: Option<f64>,
    pub lo_closed: bool,
    pub hi: Option<f64>,
    pub hi_closed: bool,
}

impl Region {
    pub fn below(x: f64) -> Self {
        Region {
            lo: None,
            lo_closed: false,
            hi: Some(x),
            hi_closed: false,
        }
    }

    pub fn equal(x: f64) -> Self {
        Region {
            lo: Some(x),
            lo_closed: true,
            hi: Some(x),
            hi_closed: true,
        }
    }

    pub fn between(lo: f64, lo_closed: bool, hi: f64, hi_closed: bool) -> Self {
        Region {
            lo: Some(lo),
            lo_closed,
            hi: Some(hi),
            hi_closed,
        }
    }

    pub fn above(x: f64) -> Self {
        Region {
            lo: Some(x),
            lo_closed: false,
            hi: None,
            hi_closed: false,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo.is_some() && self.lo == self.hi
    }

    /// Membership with closed ends widened by `tol` and open ends narrowed by it.
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        let lo_ok = match self.lo {
            None => true,
            Some(l) if self.lo_closed => x >= l - tol,
            Some(l) => x > l + tol,
        };
        let hi_ok = match self.hi {
            None => true,
            Some(h) if self.hi_closed => x <= h + tol,
            Some(h) => x < h - tol,
        };
        lo_ok && hi_ok
    }

    /// Like [`contains`](Self::contains) but with every end widened by `tol`.
    fn near(&self, x: f64, tol: f64) -> bool {
        self.lo.map_or(true, |l| x >= l - tol) && self.hi.map_or(true, |h| x <= h + tol)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lo, self.hi) {
            (Some(l), Some(h)) if l == h => write!(f, "={}", short(l)),
            (None, Some(h)) => write!(f, "<{}{}", if self.hi_closed { "=" } else { "" }, short(h)),
            (Some(l), None) => write!(f, ">{}{}", if self.lo_closed { "=" } else { "" }, short(l)),
            (Some(l), Some(h)) => write!(
                f,
                "{}{}, {}{}",
                if self.lo_closed { '[' } else { '(' },
                short(l),
                short(h),
                if self.hi_closed { ']' } else { ')' }
            ),
            (None, None) => write!(f, "all"),
        }
    }
}

fn short(x: f64) -> String {
    if x == (x as i64) as f64 {
        format!("{}", x as i64)
    } else {
        format!("{x:.6}")
    }
}

/// A named family member, e.g. `T(1,2,4)` or `C(7)`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FamilyTag {
    pub name: String,
    pub params: Vec<usize>,
}

impl FamilyTag {
    pub fn new(name: &str, params: &[usize]) -> Self {
        FamilyTag {
            name: name.into(),
            params: params.to_vec(),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if !self.params.is_empty() {
            f.write_str("(")?;
            for (i, p) in self.params.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// What is known structurally about the graphs of a band.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Coverage {
    /// Every graph of the band belongs to one of the listed families.
    Complete,
    /// Some families of the band are only known pictorially and cannot be matched.
    Partial,
    /// Only a shape constraint is known (quipu or dagger).
    ShapeOnly,
    /// Nothing is claimed.
    None,
}

/// Outcome of a classifier.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassificationResult {
    pub model: Model,
    pub radius: f64,
    /// Band containing `radius`.
    pub region: Region,
    pub coverage: Coverage,
    /// Listed family the graph was matched to.
    pub family: Option<FamilyTag>,
    /// Band the listed families place this graph in.
    pub expected: Option<Region>,
    /// Whether the structural side confirms the spectral band. Always true for a correct
    /// classification in a completely covered band.
    pub agreement: bool,
}

struct Band {
    region: Region,
    coverage: Coverage,
}

fn band(region: Region, coverage: Coverage) -> Band {
    Band { region, coverage }
}

/// Picks the band of `radius`, snapping to a point band within [`BOUNDARY_TOL`] and
/// preferring the structurally expected band when the radius is within tolerance of it.
/// A radius that hits a point band to rounding level ([`EXACT_TOL`]) always lands there.
fn locate<'a>(bands: &'a [Band], radius: f64, expected: Option<Region>) -> &'a Band {
    let exact = bands
        .iter()
        .find(|b| b.region.is_point() && b.region.contains(radius, EXACT_TOL));
    if let Some(b) = exact {
        return b;
    }
    if let Some(e) = expected {
        if e.near(radius, BOUNDARY_TOL) {
            if let Some(b) = bands.iter().find(|b| b.region == e) {
                return b;
            }
        }
    }
    bands
        .iter()
        .find(|b| b.region.is_point() && b.region.contains(radius, BOUNDARY_TOL))
        .or_else(|| {
            bands
                .iter()
                .find(|b| !b.region.is_point() && b.region.contains(radius, 0.0))
        })
        .unwrap_or(&bands[bands.len() - 1])
}

fn assemble(
    model: Model,
    radius: f64,
    bands: &[Band],
    family: Option<FamilyTag>,
    expected: Option<Region>,
    shape_claim: bool,
) -> ClassificationResult {
    let b = locate(bands, radius, expected);
    let agreement = match (expected, b.coverage) {
        (Some(e), _) => e == b.region,
        (None, Coverage::Complete | Coverage::Partial) => false,
        (None, Coverage::ShapeOnly) => shape_claim,
        (None, Coverage::None) => true,
    };
    ClassificationResult {
        model,
        radius,
        region: b.region,
        coverage: b.coverage,
        family,
        expected,
        agreement,
    }
}

fn tag(name: &str, params: &[usize]) -> Option<FamilyTag> {
    Some(FamilyTag::new(name, params))
}

fn tags_t(t: [usize; 3]) -> Option<FamilyTag> {
    tag("T", &t)
}

fn is_quipu(s: &ShapeReport) -> bool {
    s.open_quipu || s.closed_quipu
}

/// `b*(a, c)` for the two-centre trees with adjacency index in (2, √(2+√5)).
pub fn b_star(a: usize, c: usize) -> usize {
    match a {
        1 => c,
        2 => c + 3,
        _ => a + c + 2,
    }
}

const Q_SPORADIC: [[usize; 3]; 5] = [[1, 1, 2], [2, 4, 2], [2, 5, 3], [3, 7, 3], [3, 8, 4]];

fn a_bands() -> Vec<Band> {
    let c = constants();
    vec![
        band(Region::below(2.0), Coverage::Complete),
        band(Region::equal(2.0), Coverage::Complete),
        band(
            Region::between(2.0, false, c.rho1, false),
            Coverage::Complete,
        ),
        band(
            Region::between(c.rho1, true, c.rho2, false),
            Coverage::ShapeOnly,
        ),
        band(
            Region {
                lo: Some(c.rho2),
                lo_closed: true,
                hi: None,
                hi_closed: false,
            },
            Coverage::None,
        ),
    ]
}

fn a_families(g: &Graph, s: &ShapeReport) -> (Option<FamilyTag>, Option<Region>) {
    let c = constants();
    let lt2 = Region::below(2.0);
    let eq2 = Region::equal(2.0);
    let mid = Region::between(2.0, false, c.rho1, false);
    let n = g.order();
    if s.path {
        return (tag("P", &[n]), Some(lt2));
    }
    if s.cycle {
        return (tag("C", &[n]), Some(eq2));
    }
    if s.star && n == 5 {
        return (tag("K1,", &[4]), Some(eq2));
    }
    if let Some(w) = s.double_snake {
        return (tag("W", &[w]), Some(eq2));
    }
    if let Some(t) = s.t_shape {
        let region = match t {
            [1, 1, _] => Some(lt2),
            [1, 2, c] if c <= 4 => Some(lt2),
            [1, 2, 5] | [2, 2, 2] | [1, 3, 3] => Some(eq2),
            [1, 2, _] => Some(mid),
            [1, b, c] if b >= 3 && c >= 4 => Some(mid),
            [2, 2, _] | [2, 3, 3] => Some(mid),
            _ => None,
        };
        return (region.and(tags_t(t)), region);
    }
    if let Some(q) = s.h_shape {
        let [a, b, c] = q;
        if Q_SPORADIC.contains(&q) || ((a, c) != (1, 1) && b >= b_star(a, c)) {
            return (tag("Q", &q), Some(mid));
        }
    }
    (None, None)
}

/// Adjacency classification: below 2, equal to 2, (2, √(2+√5)) by complete lists, and
/// [√(2+√5), (3/2)√2) by the quipu/dagger shape constraint.
pub fn classify_a(g: &Graph) -> Result<ClassificationResult> {
    let s = recognize_shape(g)?;
    let radius = spectral_radius(g, Model::A)?;
    let (family, expected) = a_families(g, &s);
    let shape_claim = is_quipu(&s) || s.dagger.is_some();
    Ok(assemble(
        Model::A,
        radius,
        &a_bands(),
        family,
        expected,
        shape_claim,
    ))
}

fn q_like_bands(partial: Coverage) -> Vec<Band> {
    let c = constants();
    vec![
        band(Region::below(4.0), Coverage::Complete),
        band(Region::equal(4.0), Coverage::Complete),
        band(Region::between(4.0, false, c.tau1, true), partial),
        band(Region::between(c.tau1, false, c.tau2, true), partial),
        band(
            Region::between(c.tau2, false, 4.5, true),
            Coverage::ShapeOnly,
        ),
        band(Region::above(4.5), Coverage::None),
    ]
}

/// Families shared by the Q and L lists above 4.
fn upper_families(s: &ShapeReport) -> (Option<FamilyTag>, Option<Region>) {
    let c = constants();
    if let Some(t) = s.t_shape {
        match t {
            [1, 1, k] if k >= 2 => {
                return (tags_t(t), Some(Region::between(4.0, false, c.tau1, true)));
            }
            [1, b, _] if b >= 2 => {
                return (
                    tags_t(t),
                    Some(Region::between(c.tau1, false, c.tau2, true)),
                );
            }
            _ => {}
        }
    }
    if let Some(q @ [a, b, cc]) = s.h_shape {
        if b > a + cc {
            return (
                tag("Q", &q),
                Some(Region::between(c.tau1, false, c.tau2, true)),
            );
        }
    }
    (None, None)
}

/// Signless Laplacian classification up to 2 + ε by complete lists, then quipus up to 4.5.
pub fn classify_q(g: &Graph) -> Result<ClassificationResult> {
    let s = recognize_shape(g)?;
    let radius = spectral_radius(g, Model::Q)?;
    let n = g.order();
    let (family, expected) = if s.path {
        (tag("P", &[n]), Some(Region::below(4.0)))
    } else if s.cycle {
        (tag("C", &[n]), Some(Region::equal(4.0)))
    } else if s.t_shape == Some([1, 1, 1]) {
        (tag("K1,", &[3]), Some(Region::equal(4.0)))
    } else {
        upper_families(&s)
    };
    Ok(assemble(
        Model::Q,
        radius,
        &q_like_bands(Coverage::Complete),
        family,
        expected,
        is_quipu(&s),
    ))
}

/// The four-vertex graphs with Laplacian index 4 other than C_4.
fn small_l4(g: &Graph) -> Option<FamilyTag> {
    if g.order() != 4 {
        return None;
    }
    match (g.size(), g.degree_sequence().as_slice()) {
        (3, [3, 1, 1, 1]) => tag("K1,", &[3]),
        (4, [3, 2, 2, 1]) => tag("K1,3+e", &[]),
        (5, _) => tag("K4-e", &[]),
        (6, _) => tag("K", &[4]),
        _ => None,
    }
}

/// Laplacian classification. Below 4 and at 4 the lists are complete; above 4 only the
/// families with a textual description are matched.
pub fn classify_l(g: &Graph) -> Result<ClassificationResult> {
    let s = recognize_shape(g)?;
    let radius = spectral_radius(g, Model::L)?;
    let c = constants();
    let n = g.order();
    let (family, expected) = if s.path {
        (tag("P", &[n]), Some(Region::below(4.0)))
    } else if s.cycle {
        let r = if n % 2 == 1 {
            Region::below(4.0)
        } else {
            Region::equal(4.0)
        };
        (tag("C", &[n]), Some(r))
    } else if let Some(t) = small_l4(g) {
        (Some(t), Some(Region::equal(4.0)))
    } else if let Some(w) = s.double_snake.filter(|&w| w >= 8) {
        (
            tag("W", &[w]),
            Some(Region::between(c.tau1, false, c.tau2, true)),
        )
    } else {
        upper_families(&s)
    };
    Ok(assemble(
        Model::L,
        radius,
        &q_like_bands(Coverage::Partial),
        family,
        expected,
        is_quipu(&s),
    ))
}

fn same(alpha: f64, s: f64) -> bool {
    (alpha - s).abs() <= 1e-12
}

fn against(alpha: f64, s: f64) -> Region {
    if same(alpha, s) {
        Region::equal(2.0)
    } else if alpha < s {
        Region::below(2.0)
    } else {
        Region::above(2.0)
    }
}

/// A_α classification around 2, following the threshold values s_1(n), s_2, s_3, s_4.
///
/// Every connected graph not listed has A_α-index above 2. P_1 and P_2 have index 0 and 1
/// at α = 1 and are placed below 2.
pub fn classify_aalpha(g: &Graph, alpha: f64) -> Result<ClassificationResult> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(param(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    let s = recognize_shape(g)?;
    let radius = spectral_radius(g, Model::AAlpha(alpha))?;
    let n = g.order();
    let lt2 = Region::below(2.0);
    let eq2 = Region::equal(2.0);
    let gt2 = Region::above(2.0);
    let at_zero = if alpha == 0.0 { eq2 } else { gt2 };
    let (family, expected) = if s.path {
        let r = if alpha < 1.0 || n <= 2 { lt2 } else { eq2 };
        (tag("P", &[n]), r)
    } else if s.cycle {
        (tag("C", &[n]), eq2)
    } else if let Some(w) = s.double_snake {
        (tag("W", &[w]), at_zero)
    } else if s.star && n == 5 {
        (tag("K1,", &[4]), at_zero)
    } else {
        match s.t_shape {
            Some(t @ [1, 1, _]) => (tags_t(t), against(alpha, s1(n)?)),
            Some(t @ [1, 2, 2]) => (tags_t(t), against(alpha, s2()?.value)),
            Some(t @ [1, 2, 3]) => (tags_t(t), against(alpha, s3()?.value)),
            Some(t @ [1, 2, 4]) => (tags_t(t), against(alpha, s4()?.value)),
            Some(t @ ([1, 3, 3] | [1, 2, 5] | [2, 2, 2])) => (tags_t(t), at_zero),
            _ => (None, gt2),
        }
    };
    let bands = [
        band(lt2, Coverage::Complete),
        band(eq2, Coverage::Complete),
        band(gt2, Coverage::Complete),
    ];
    Ok(assemble(
        Model::AAlpha(alpha),
        radius,
        &bands,
        family,
        Some(expected),
        false,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    fn g(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap().simple().unwrap()
    }

    #[test]
    fn adjacency_examples() {
        let r = classify_a(&g(FamilySpec::TShape(1, 2, 4))).unwrap();
        assert_eq!(r.region, Region::below(2.0));
        assert!(r.agreement);
        let r = classify_a(&g(FamilySpec::TShape(2, 2, 2))).unwrap();
        assert_eq!(r.region, Region::equal(2.0));
        assert!(r.agreement);
        let r = classify_a(&g(FamilySpec::TShape(2, 3, 3))).unwrap();
        assert_eq!(
            r.region,
            Region::between(2.0, false, constants().rho1, false)
        );
        assert!(r.agreement);
        for q in Q_SPORADIC {
            let r = classify_a(&g(FamilySpec::HShape(q[0], q[1], q[2]))).unwrap();
            assert!(r.agreement, "Q{q:?} at {}", r.radius);
        }
    }

    #[test]
    fn graphs_beyond_the_lists() {
        // K_3 with a pendant vertex has index about 2.17, beyond every claim.
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let r = classify_a(&paw).unwrap();
        assert_eq!(r.coverage, Coverage::None);
        assert!(r.agreement && r.family.is_none());
        // The same radius claimed by a wrong list entry is flagged.
        let bands = a_bands();
        let wrong = assemble(
            Model::A,
            r.radius,
            &bands,
            None,
            Some(Region::below(2.0)),
            false,
        );
        assert!(!wrong.agreement);
    }

    #[test]
    fn signless_and_laplacian_examples() {
        assert_eq!(
            classify_q(&g(FamilySpec::Path(9))).unwrap().region,
            Region::below(4.0)
        );
        let r = classify_q(&g(FamilySpec::Cycle(7))).unwrap();
        assert_eq!(r.region, Region::equal(4.0));
        assert!(r.agreement);
        let r = classify_q(&g(FamilySpec::TShape(1, 1, 4))).unwrap();
        assert_eq!(r.region.hi, Some(constants().tau1));
        assert!(r.agreement);
        assert_eq!(
            classify_l(&g(FamilySpec::Cycle(9))).unwrap().region,
            Region::below(4.0)
        );
        let r = classify_l(&g(FamilySpec::Complete(4))).unwrap();
        assert_eq!(r.region, Region::equal(4.0));
        assert!(r.agreement);
        let r = classify_l(&g(FamilySpec::TShape(1, 1, 2))).unwrap();
        assert!(r.agreement && r.region.lo == Some(4.0));
    }

    #[test]
    fn a_alpha_examples() {
        let r = classify_aalpha(&g(FamilySpec::Cycle(5)), 0.7).unwrap();
        assert_eq!(r.region, Region::equal(2.0));
        let r = classify_aalpha(&g(FamilySpec::DoubleSnake(8)), 0.0).unwrap();
        assert!(r.agreement && r.region == Region::equal(2.0));
        let r = classify_aalpha(&g(FamilySpec::TShape(1, 2, 2)), 0.1).unwrap();
        assert!(r.agreement && r.region == Region::below(2.0));
        let s = s2().unwrap().value;
        let r = classify_aalpha(&g(FamilySpec::TShape(1, 2, 2)), s).unwrap();
        assert!(
            r.agreement && r.region == Region::equal(2.0),
            "{}",
            r.radius
        );
        let r = classify_aalpha(&g(FamilySpec::Path(2)), 1.0).unwrap();
        assert!(r.agreement);
        assert!(classify_aalpha(&g(FamilySpec::Path(2)), 1.5).is_err());
    }

    #[test]
    fn region_display() {
        assert_eq!(format!("{}", Region::below(2.0)), "<2");
        assert_eq!(format!("{}", Region::equal(4.0)), "=4");
        assert_eq!(
            format!("{}", Region::between(4.0, false, 4.5, true)),
            "(4, 4.500000]"
        );
        assert_eq!(format!("{}", FamilyTag::new("T", &[1, 2, 4])), "T(1,2,4)");
    }
}
