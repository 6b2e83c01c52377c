// Success paths only: building a JsError needs a wasm host.

use hodelta_wasm::{energy_curve, ground_state, nu_sweep};

#[test]
fn ground_state_fields() {
    let s = ground_state(-0.5).unwrap();
    assert_eq!(s.family(), "attractive");
    assert!((s.alpha_min - 0.860948).abs() < 1e-6);
    assert!(s.nu_variational >= s.nu_exact);
    assert_eq!(ground_state(1.0).unwrap().family(), "repulsive");
}

#[test]
fn curve_is_interleaved() {
    let c = energy_curve(0.0, 0.5, 1.5, 3).unwrap();
    assert_eq!(c.len(), 6);
    assert_eq!((c[2], c[3]), (1.0, 0.5));
}

#[test]
fn sweep_rows() {
    let s = nu_sweep(-1.0, 1.0, 5).unwrap();
    assert_eq!(s.len(), 15);
    assert!(s.chunks(3).all(|r| r[2] >= r[1] - 1e-9));
}
