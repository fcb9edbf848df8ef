//! Stonier's exponential information and the emergent-capacity curve.
//!
//! The capacity of a system of size `m` at normalized entropy `η` is
//! `m · exp(η log2(1/η))`. The exponent vanishes at both ends of `(0, 1]`
//! and peaks at `η = 1/e`, so capacity is maximal at intermediate randomness.

use core::f64::consts::LN_2;

use crate::math::{exp, ln, log2};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StonierParams {
    /// Information at zero entropy.
    pub i0: f64,
    /// Decay scale. Treated as a free positive parameter.
    pub k: f64,
    /// Entropy input.
    pub s: f64,
}

impl StonierParams {
    pub fn new(i0: f64, k: f64, s: f64) -> Result<Self> {
        if i0.is_nan() || i0 < 0.0 {
            return Err(Error::domain("stonier_i0", i0, "[0, inf)"));
        }
        if !(k > 0.0) {
            return Err(Error::domain("stonier_k", k, "(0, inf)"));
        }
        if s.is_nan() || s < 0.0 {
            return Err(Error::domain("stonier_s", s, "[0, inf)"));
        }
        Ok(Self { i0, k, s })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmergenceInput {
    pub size: f64,
    pub eta: f64,
}

impl EmergenceInput {
    pub fn new(size: f64, eta: f64) -> Result<Self> {
        if !(size > 0.0) {
            return Err(Error::domain("m", size, "(0, inf)"));
        }
        check_eta(eta)?;
        Ok(Self { size, eta })
    }
}

fn check_eta(eta: f64) -> Result<()> {
    if eta > 0.0 && eta <= 1.0 {
        Ok(())
    } else {
        Err(Error::domain("eta", eta, "(0, 1]"))
    }
}

/// `I0 · exp(-S/K)`.
pub fn stonier_information(p: StonierParams) -> f64 {
    p.i0 * exp(-p.s / p.k)
}

/// Exponent of the capacity curve, `η log2(1/η)`, extended by 0 at `η = 0`.
pub fn capacity_exponent(eta: f64) -> f64 {
    if eta == 0.0 {
        0.0
    } else {
        -eta * log2(eta)
    }
}

/// Capacity multiplier `exp(η log2(1/η))`.
pub fn capacity_gain(eta: f64) -> Result<f64> {
    check_eta(eta)?;
    Ok(exp(capacity_exponent(eta)))
}

/// `m · exp(η log2(1/η))` for `η ∈ (0, 1]`.
pub fn emergent_capacity(e: EmergenceInput) -> Result<f64> {
    Ok(e.size * capacity_gain(e.eta)?)
}

/// Capacity with the continuous extension `η = 0 ↦ m`, for measured
/// entropies that can be exactly zero.
pub fn emergent_capacity_or_limit(size: f64, eta: f64) -> Result<f64> {
    if eta == 0.0 {
        if !(size > 0.0) {
            return Err(Error::domain("m", size, "(0, inf)"));
        }
        return Ok(size);
    }
    emergent_capacity(EmergenceInput::new(size, eta)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityPeak {
    pub eta_star: f64,
    pub gain_star: f64,
}

/// Interior maximizer of the capacity curve.
///
/// A coarse scan brackets the sign change of the exponent's derivative,
/// `-(ln η + 1)/ln 2`, then bisection narrows the bracket. Working on the
/// derivative keeps full precision in `η`; the curve itself is too flat near
/// the top to locate the maximum beyond about 1e-8 by comparing values.
pub fn capacity_peak() -> CapacityPeak {
    let slope = |eta: f64| -(ln(eta) + 1.0) / LN_2;
    const GRID: usize = 1000;
    let mut lo = 0.0;
    let mut hi = 1.0;
    let mut prev = 1.0 / GRID as f64;
    for i in 2..=GRID {
        let eta = i as f64 / GRID as f64;
        if slope(prev) > 0.0 && slope(eta) <= 0.0 {
            lo = prev;
            hi = eta;
            break;
        }
        prev = eta;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if slope(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let eta_star = 0.5 * (lo + hi);
    CapacityPeak {
        eta_star,
        gain_star: exp(capacity_exponent(eta_star)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stonier() {
        let p = StonierParams::new(5.0, 2.0, 0.0).unwrap();
        assert_eq!(stonier_information(p), 5.0);
        let at_k = stonier_information(StonierParams::new(5.0, 2.0, 2.0).unwrap());
        assert!((at_k - 5.0 * 0.36787944117144233).abs() < 1e-14);
        let at_2k = stonier_information(StonierParams::new(5.0, 2.0, 4.0).unwrap());
        assert!(at_2k < at_k);
        assert!(StonierParams::new(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn capacity_values() {
        let c = |m, eta| emergent_capacity(EmergenceInput::new(m, eta).unwrap()).unwrap();
        assert_eq!(c(100.0, 1.0), 100.0);
        assert!((c(100.0, 0.5) - 164.87212707001282).abs() < 1e-10);
        assert!((c(1.0, (-1.0f64).exp()) - 1.7001863206231418).abs() < 1e-12);
    }

    #[test]
    fn eta_domain() {
        for bad in [0.0, -0.1, 1.0000001, f64::NAN] {
            assert!(matches!(
                EmergenceInput::new(1.0, bad),
                Err(Error::Domain { field: "eta", .. })
            ));
        }
        assert_eq!(emergent_capacity_or_limit(256.0, 0.0).unwrap(), 256.0);
    }

    #[test]
    fn peak_is_inverse_e() {
        let p = capacity_peak();
        let inv_e = (-1.0f64).exp();
        assert!((p.eta_star - inv_e).abs() <= 1e-12, "{}", p.eta_star);
        assert!((p.gain_star - 1.7001863206231418).abs() <= 1e-12);
        let m = 37.5;
        let at_peak = emergent_capacity(EmergenceInput::new(m, p.eta_star).unwrap()).unwrap();
        assert!((at_peak - m * p.gain_star).abs() <= 1e-12 * m);
    }
}
