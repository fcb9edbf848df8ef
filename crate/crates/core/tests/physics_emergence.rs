use infocog_core::emergence::*;
use infocog_core::physical::*;
use proptest::prelude::*;

fn sys(e: f64, s: f64, r: f64) -> PhysicalSystem {
    PhysicalSystem {
        energy_j: e,
        entropy_jk: s,
        radius_m: r,
        mass_kg: None,
    }
}

proptest! {
    #[test]
    fn limits_are_linear(e in 0.0f64..1e20, s in 0.0f64..1e3, r in 1e-6f64..1e6, scale in 0.0f64..1e6) {
        let base = sys(e, s, r);
        let scaled = sys(e * scale, s * scale, r);
        let ops = max_ops_per_sec(&base).unwrap();
        let bits = max_bits(&base).unwrap();
        prop_assert!(ops >= 0.0 && bits >= 0.0 && max_io_rate(&base).unwrap() >= 0.0);
        let tol = |x: f64| 1e-12 * x.abs().max(f64::MIN_POSITIVE);
        prop_assert!((max_ops_per_sec(&scaled).unwrap() - scale * ops).abs() <= tol(scale * ops));
        prop_assert!((max_bits(&scaled).unwrap() - scale * bits).abs() <= tol(scale * bits));
    }

    #[test]
    fn capacity_at_least_size(m in 1e-3f64..1e6, eta in 1e-12f64..=1.0) {
        prop_assert!(capacity_exponent(eta) >= 0.0);
        prop_assert!(emergent_capacity(EmergenceInput::new(m, eta).unwrap()).unwrap() >= m);
    }
}

#[test]
fn laptop_bound() {
    let e = mass_energy(1.0).unwrap();
    let ops = max_ops_per_sec(&sys(e, 0.0, 1.0)).unwrap();
    assert!((5.42e50..=5.43e50).contains(&ops), "{ops}");
}

#[test]
fn capacity_unimodal_on_grid() {
    let inv_e = (-1.0f64).exp();
    let n = 10_000;
    let grid: Vec<f64> = (1..=n).map(|i| i as f64 / n as f64).collect();
    let cap = |eta| emergent_capacity(EmergenceInput::new(1.0, eta).unwrap()).unwrap();
    for w in grid.windows(2) {
        if w[1] < inv_e {
            assert!(cap(w[1]) > cap(w[0]), "rising at {}", w[1]);
        } else if w[0] > inv_e {
            assert!(cap(w[1]) < cap(w[0]), "falling at {}", w[1]);
        }
    }
    assert_eq!(cap(1.0), 1.0);
}

#[test]
fn capacity_limit_at_zero() {
    let m = 250.0;
    let c = emergent_capacity(EmergenceInput::new(m, 1e-9).unwrap()).unwrap();
    assert!(((c - m) / m).abs() <= 1e-6);
}

#[test]
fn stonier_is_log_linear() {
    let (i0, k) = (3.5, 1.7);
    let pts: Vec<(f64, f64)> = (0..100)
        .map(|i| {
            let s = i as f64 * 0.1;
            (
                s,
                stonier_information(StonierParams::new(i0, k, s).unwrap()).ln(),
            )
        })
        .collect();
    // ordinary least squares
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    assert!((slope + 1.0 / k).abs() < 1e-10);
    assert!((intercept - i0.ln()).abs() < 1e-10);
    for (x, y) in pts {
        assert!((y - (intercept + slope * x)).abs() < 1e-10);
    }
}
