use simplexnet_core::experiments::scan4::{run_scan4, Scan4Evaluator, ScanConfig};

#[test]
fn scan_is_bit_for_bit_reproducible() {
    let config = ScanConfig {
        grid: 4,
        seed: 11,
        restarts: 1,
        max_passes: 20,
    };
    let a = run_scan4(&config).unwrap();
    let b = run_scan4(&config).unwrap();
    assert_eq!(
        a.best.coeffs.map(f64::to_bits),
        b.best.coeffs.map(f64::to_bits)
    );
    assert_eq!(a.best.entropy.to_bits(), b.best.entropy.to_bits());
    assert_eq!(a.trace.len(), b.trace.len());
    assert!(a.trace.iter().all(|p| p.entropy <= a.best.entropy + 1e-12));
}

#[test]
fn product_point_has_zero_entropy() {
    let e = Scan4Evaluator::square_network();
    assert!(e.entropy([1.0, 0.0, 0.0, 0.0, 0.0]).unwrap().abs() < 1e-12);
}
