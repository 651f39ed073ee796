use speclim_core::classify::{classify_aalpha, Region};
use speclim_core::graph::{build_simple, compound, CompoundKind, FamilySpec};
use speclim_core::limits::{chi2_u, chi_u, constants, guo_alpha, hoffman_eta, s1, s2, s3, s4};
use speclim_core::spectra::{adjacency_radius, spectral_radius, Model};

#[test]
fn hoffman_sequence_increases_below_rho1() {
    let rho1 = constants().rho1;
    let etas: Vec<f64> = (1..=20).map(|n| hoffman_eta(n).unwrap().value).collect();
    assert!(etas.windows(2).all(|w| w[0] < w[1]));
    assert!(etas.iter().all(|&e| e < rho1));
    // η_n is the limit of ρ_A(T_{1,n,m}) as m grows
    // η_1 = 2 is approached polynomially, the others geometrically
    for (n, tol) in [(1, 1e-4), (2, 1e-9), (3, 1e-9), (4, 1e-9)] {
        let t = build_simple(&FamilySpec::TShape(1, n, 400)).unwrap();
        assert!((adjacency_radius(&t) - etas[n - 1]).abs() < tol, "n = {n}");
    }
}

#[test]
fn guo_sequence_increases() {
    let v: Vec<f64> = (0..=20).map(|n| guo_alpha(n).unwrap().value).collect();
    assert_eq!(v[0], 4.0);
    assert!(v.windows(2).all(|w| w[0] < w[1]));
    assert!(v[20] < constants().tau2);
}

#[test]
fn pendant_path_radii_converge_to_chi() {
    let claw = build_simple(&FamilySpec::Star(3)).unwrap();
    for a in [0.0, 0.3, 0.6] {
        let chi = chi_u(&claw, 0, a).unwrap().value;
        let chi2 = chi2_u(&claw, 0, a).unwrap().value;
        let mut last_gap = f64::INFINITY;
        for n in [5, 10, 20, 50, 100, 200] {
            let g = compound(&claw, 0, CompoundKind::OnePath, n).unwrap();
            let x = spectral_radius(&g, Model::AAlpha(a)).unwrap();
            let gap = (chi - x).abs();
            // once at rounding level the gap stops shrinking
            assert!(gap < last_gap || gap < 1e-13, "alpha {a}, n {n}");
            last_gap = gap;
        }
        assert!(last_gap < 1e-4);
        let g2 = compound(&claw, 0, CompoundKind::TwoPaths, 200).unwrap();
        let x2 = spectral_radius(&g2, Model::AAlpha(a)).unwrap();
        assert!((chi2 - x2).abs() < 1e-4, "alpha {a}: {chi2} vs {x2}");
    }
}

#[test]
fn thresholds_split_the_spiders() {
    let below = Region::below(2.0);
    let equal = Region::equal(2.0);
    let above = Region::above(2.0);
    let cases = [
        (FamilySpec::TShape(1, 2, 2), s2().unwrap().value),
        (FamilySpec::TShape(1, 2, 3), s3().unwrap().value),
        (FamilySpec::TShape(1, 2, 4), s4().unwrap().value),
    ]
    .into_iter()
    .chain((5..=10).map(|n| (FamilySpec::TShape(1, 1, n - 3), s1(n).unwrap())));
    for (spec, s) in cases {
        let g = build_simple(&spec).unwrap();
        let at = spectral_radius(&g, Model::AAlpha(s)).unwrap();
        assert!((at - 2.0).abs() < 1e-8, "{spec}: {at}");
        for (a, want) in [(s - 1e-3, below), (s, equal), (s + 1e-3, above)] {
            let r = classify_aalpha(&g, a).unwrap();
            assert_eq!(r.region, want, "{spec} at {a}");
            assert!(r.agreement);
        }
    }
}
