mod common;

use common::{g, EXACT_NU};
use hodelta::oracle::{
    fd_eigenvalue, fd_ground_epsilon, rayleigh_quotient, GridSpec, TrialFamily, TrialFunction,
};
use hodelta::Error;

fn exact_epsilon(coupling: f64) -> f64 {
    if coupling == 0.0 {
        return 0.5;
    }
    EXACT_NU
        .iter()
        .find(|r| r.0 == coupling)
        .map(|r| r.1 + 0.5)
        .unwrap()
}

fn fd(coupling: f64, points: usize) -> f64 {
    fd_ground_epsilon(g(coupling), &GridSpec::new(12.0, points).unwrap())
        .unwrap()
        .epsilon
}

#[test]
fn error_shrinks_as_grid_refines() {
    for coupling in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        let exact = exact_epsilon(coupling);
        let errors: Vec<f64> = [1201, 2401, 4801]
            .iter()
            .map(|&n| (fd(coupling, n) - exact).abs())
            .collect();
        assert!(
            errors[1] < errors[0] && errors[2] < errors[1],
            "g = {coupling}: {errors:?}"
        );
    }
}

#[test]
fn richardson_extrapolation_lands_on_exact() {
    // three-level Aitken estimate of the h -> 0 limit
    for coupling in [-1.0, 1.0] {
        let (a, b, c) = (fd(coupling, 1201), fd(coupling, 2401), fd(coupling, 4801));
        let ratio = (a - b) / (b - c);
        let limit = c - (b - c) / (ratio - 1.0);
        assert!((limit - exact_epsilon(coupling)).abs() < (c - exact_epsilon(coupling)).abs());
    }
}

#[test]
fn default_grid_within_tolerances() {
    let cases = [
        (0.0, 1e-5),
        (1.0, 2e-3),
        (-1.0, 5e-3),
        (2.0, 5e-3),
        (-2.0, 5e-3),
    ];
    for (coupling, tol) in cases {
        let got = fd(coupling, 4801);
        assert!(
            (got - exact_epsilon(coupling)).abs() < tol,
            "g = {coupling}: {got}"
        );
    }
}

#[test]
fn odd_levels_ignore_the_delta() {
    let grid = GridSpec::default();
    for coupling in [-2.0, 0.0, 3.0] {
        let odd = fd_eigenvalue(g(coupling), &grid, 1).unwrap();
        assert!((odd - 1.5).abs() < 1e-4, "g = {coupling}: {odd}");
    }
}

#[test]
fn narrow_grid_warns() {
    let s = fd_ground_epsilon(g(0.0), &GridSpec::new(2.5, 201).unwrap()).unwrap();
    assert!(s.warning.is_some() && s.boundary_ratio > 1e-6);
    let s = fd_ground_epsilon(g(0.0), &GridSpec::default()).unwrap();
    assert!(s.warning.is_none());
}

#[test]
fn grid_validation() {
    assert!(matches!(
        GridSpec::new(12.0, 100),
        Err(Error::InvalidGrid(_))
    ));
    assert!(matches!(
        GridSpec::new(0.0, 101),
        Err(Error::InvalidGrid(_))
    ));
    assert!(fd_eigenvalue(g(0.0), &GridSpec::new(1.0, 5).unwrap(), 5).is_err());
}

#[test]
fn rayleigh_quotient_spot_values() {
    let psi = TrialFunction::new(TrialFamily::ExponentialCusp, 1.0, 0.0).unwrap();
    assert!((rayleigh_quotient(&psi, g(0.0)).unwrap() - 0.5).abs() < 1e-9);
    let psi = TrialFunction::new(TrialFamily::ExponentialCusp, 0.861, -0.5).unwrap();
    assert!((rayleigh_quotient(&psi, g(-0.5)).unwrap() - 0.15608987).abs() < 1e-7);
    let psi = TrialFunction::new(TrialFamily::LinearCusp, 1.077488, 1.0).unwrap();
    assert!((rayleigh_quotient(&psi, g(1.0)).unwrap() - 0.894997).abs() < 1e-6);
    let psi = TrialFunction::new(TrialFamily::OddExponential, 1.0, 0.0).unwrap();
    assert!((rayleigh_quotient(&psi, g(5.0)).unwrap() - 1.5).abs() < 1e-9);
}

#[test]
fn rayleigh_quotient_bounds_fd_ground() {
    for coupling in [-2.0, -1.0, 1.0, 2.0] {
        let exact = exact_epsilon(coupling);
        for k in 0..12 {
            let alpha = 0.4 + 0.1 * k as f64;
            for family in [TrialFamily::ExponentialCusp, TrialFamily::LinearCusp] {
                let psi = TrialFunction::new(family, alpha, coupling).unwrap();
                assert!(rayleigh_quotient(&psi, g(coupling)).unwrap() >= exact - 1e-9);
            }
        }
    }
}
