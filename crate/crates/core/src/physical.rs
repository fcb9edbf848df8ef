//! Physical limits of computation for a system described by its energy,
//! thermodynamic entropy and size.
//!
//! All constants are the CODATA 2018 values, kept in [`PhysicalConstants::CODATA_2018`].

use core::f64::consts::{LN_2, PI};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
    /// Speed of light in vacuum, m/s.
    pub c: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        hbar: 1.054_571_817e-34,
        k_b: 1.380_649e-23,
        c: 299_792_458.0,
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PhysicalSystem {
    /// Average energy above the ground state, J.
    pub energy_j: f64,
    /// Thermodynamic entropy, J/K.
    pub entropy_jk: f64,
    /// Radius, m.
    pub radius_m: f64,
    /// Rest mass, kg, when the energy is derived from it.
    pub mass_kg: Option<f64>,
}

fn nonnegative(field: &'static str, value: f64) -> Result<f64> {
    if value.is_nan() || value < 0.0 {
        Err(Error::domain(field, value, "[0, inf)"))
    } else {
        Ok(value)
    }
}

/// Margolus–Levitin bound, `2E / (π ħ)` operations per second.
pub fn max_ops_per_sec(sys: &PhysicalSystem) -> Result<f64> {
    let e = nonnegative("energy_j", sys.energy_j)?;
    Ok(2.0 * e / (PI * PhysicalConstants::CODATA_2018.hbar))
}

/// Bits a system can register, `S / (k_B ln 2)`.
pub fn max_bits(sys: &PhysicalSystem) -> Result<f64> {
    let s = nonnegative("entropy_jk", sys.entropy_jk)?;
    Ok(s / (PhysicalConstants::CODATA_2018.k_b * LN_2))
}

/// Rate at which information can leave a system of radius `R`, `c S / (k_B R)`.
///
/// This is the formula exactly as stated; moving all `S / (k_B ln 2)` bits out
/// at light speed would instead give `c S / (k_B R ln 2)`.
pub fn max_io_rate(sys: &PhysicalSystem) -> Result<f64> {
    let s = nonnegative("entropy_jk", sys.entropy_jk)?;
    if !(sys.radius_m > 0.0) {
        return Err(Error::domain("radius_m", sys.radius_m, "(0, inf)"));
    }
    let k = PhysicalConstants::CODATA_2018;
    Ok(k.c * s / (k.k_b * sys.radius_m))
}

/// Rest energy `m c²`.
pub fn mass_energy(mass_kg: f64) -> Result<f64> {
    let m = nonnegative("mass_kg", mass_kg)?;
    let c = PhysicalConstants::CODATA_2018.c;
    Ok(m * c * c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn energy(e: f64) -> PhysicalSystem {
        PhysicalSystem {
            energy_j: e,
            ..Default::default()
        }
    }

    fn entropy(s: f64, r: f64) -> PhysicalSystem {
        PhysicalSystem {
            entropy_jk: s,
            radius_m: r,
            ..Default::default()
        }
    }

    fn rel(a: f64, b: f64, tol: f64) {
        assert!(((a - b) / b).abs() <= tol, "{a} vs {b}");
    }

    const HBAR: f64 = 1.054571817e-34;
    const KB: f64 = 1.380649e-23;

    #[test]
    fn ops_per_sec() {
        rel(
            max_ops_per_sec(&energy(PI * HBAR / 2.0)).unwrap(),
            1.0,
            1e-15,
        );
        rel(
            max_ops_per_sec(&energy(1.0)).unwrap(),
            6.036760722267447e33,
            1e-12,
        );
        let e = mass_energy(1.0).unwrap();
        rel(
            max_ops_per_sec(&energy(e)).unwrap(),
            5.425569961932879e50,
            1e-12,
        );
        assert!(max_ops_per_sec(&energy(-1.0)).is_err());
    }

    #[test]
    fn bits() {
        rel(max_bits(&entropy(KB * LN_2, 1.0)).unwrap(), 1.0, 1e-15);
        assert_eq!(max_bits(&entropy(0.0, 1.0)).unwrap(), 0.0);
        rel(
            max_bits(&entropy(1.0, 1.0)).unwrap(),
            1.044939764479577e23,
            1e-12,
        );
    }

    #[test]
    fn io_rate() {
        rel(
            max_io_rate(&entropy(KB * LN_2, 1.0)).unwrap(),
            207800297.01583582,
            1e-12,
        );
        let r1 = max_io_rate(&entropy(3.0, 1.5)).unwrap();
        let r2 = max_io_rate(&entropy(3.0, 3.0)).unwrap();
        rel(r2, r1 / 2.0, 1e-15);
        assert_eq!(max_io_rate(&entropy(0.0, 2.0)).unwrap(), 0.0);
        assert!(matches!(
            max_io_rate(&entropy(1.0, 0.0)),
            Err(Error::Domain {
                field: "radius_m",
                ..
            })
        ));
    }

    #[test]
    fn rest_energy() {
        assert_eq!(mass_energy(0.0).unwrap(), 0.0);
        assert_eq!(mass_energy(1.0).unwrap(), 89875517873681764.0);
        assert_eq!(mass_energy(2.0).unwrap(), 2.0 * mass_energy(1.0).unwrap());
        assert!(mass_energy(-0.1).is_err());
    }
}
