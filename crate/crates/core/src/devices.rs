//! Textbook storage devices: particle in a 1-d box, harmonic oscillator and
//! the hydrogen atom's principal levels.
//!
//! Each device is prepared in the minimum-energy distribution over its
//! levels at the requested entropy; the energy and surface columns are the
//! usual order-of-magnitude expressions built from the resulting moments of
//! `n`, so only the scaling of the products is meaningful.

use std::f64::consts::PI;

use crate::bound::HBAR;
use crate::error::{invalid, Error, Result};
use crate::lemma::{min_energy_at_entropy, FiniteSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeviceKind {
    Box,
    Oscillator,
    Hydrogen,
}

impl DeviceKind {
    pub fn name(self) -> &'static str {
        match self {
            DeviceKind::Box => "box",
            DeviceKind::Oscillator => "oscillator",
            DeviceKind::Hydrogen => "hydrogen",
        }
    }

    /// Spatial degrees of freedom the device stores information in.
    pub fn dof(self) -> f64 {
        match self {
            DeviceKind::Box | DeviceKind::Oscillator => 1.0,
            DeviceKind::Hydrogen => 3.0,
        }
    }

    fn first_n(self) -> u64 {
        match self {
            DeviceKind::Oscillator => 0,
            DeviceKind::Box | DeviceKind::Hydrogen => 1,
        }
    }

    /// Level energy in device units, shifted so the ground level is 0.
    fn shifted_energy(self, n: u64) -> f64 {
        let x = n as f64;
        match self {
            DeviceKind::Box => x * x - 1.0,
            DeviceKind::Oscillator => x,
            DeviceKind::Hydrogen => 1.0 - 1.0 / (x * x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviceSpec {
    pub kind: DeviceKind,
    /// kg.
    pub mass: f64,
    /// Box width L (m), oscillator angular frequency ω (1/s), or the
    /// Coulomb coupling e²/(4πε₀) (J·m) for hydrogen.
    pub scale: f64,
    pub level_cap: u64,
}

impl DeviceSpec {
    pub fn new(kind: DeviceKind, mass: f64, scale: f64, level_cap: u64) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(invalid(format!("mass must be positive, got {mass}")));
        }
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(invalid(format!("scale must be positive, got {scale}")));
        }
        if level_cap < 2 {
            return Err(invalid("level cap must be at least 2"));
        }
        Ok(Self {
            kind,
            mass,
            scale,
            level_cap,
        })
    }

    fn quantum_numbers(&self) -> impl Iterator<Item = u64> {
        let first = self.kind.first_n();
        first..first + self.level_cap
    }

    fn spectrum(&self) -> Result<FiniteSpectrum> {
        let e: Vec<f64> = self
            .quantum_numbers()
            .map(|n| self.kind.shifted_energy(n))
            .collect();
        FiniteSpectrum::from_energies(&e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Moments {
    pub n: f64,
    pub n2: f64,
    pub n4: f64,
    /// `⟨1/n²⟩`; absent for the oscillator, whose levels start at `n = 0`.
    pub inv_n2: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviceCost {
    pub kind: DeviceKind,
    pub entropy: f64,
    /// J.
    pub mean_energy: f64,
    /// m².
    pub mean_surface: f64,
    /// J·m².
    pub product: f64,
    pub moments: Moments,
}

pub fn device_cost(spec: &DeviceSpec, s_target: f64) -> Result<DeviceCost> {
    let max = (spec.level_cap as f64).ln();
    if !(s_target >= 0.0) || s_target > max {
        return Err(Error::EntropyOutOfRange {
            target: s_target,
            min: 0.0,
            max,
        });
    }
    let min = min_energy_at_entropy(&spec.spectrum()?, s_target)?;
    let p = min.distribution.per_state();

    let mut m = Moments::default();
    let mut inv = 0.0;
    for (&w, n) in p.iter().zip(spec.quantum_numbers()) {
        let x = n as f64;
        m.n += w * x;
        m.n2 += w * x * x;
        m.n4 += w * x * x * x * x;
        if n > 0 {
            inv += w / (x * x);
        }
    }
    let mass = spec.mass;
    let (mean_energy, mean_surface) = match spec.kind {
        DeviceKind::Box => {
            let l = spec.scale;
            (HBAR * HBAR * PI * PI / (mass * l * l) * m.n2, l * l)
        }
        DeviceKind::Oscillator => {
            let w = spec.scale;
            (HBAR * w * m.n, HBAR / (mass * w) * m.n)
        }
        DeviceKind::Hydrogen => {
            let e2 = spec.scale;
            let hartree = e2 * e2 * mass / (HBAR * HBAR);
            let bohr = HBAR * HBAR / (mass * e2);
            // ground-state energy shifted to zero: ⟨1 − 1/n²⟩
            (hartree * (1.0 - inv), bohr * bohr * m.n4)
        }
    };
    if spec.kind != DeviceKind::Oscillator {
        m.inv_n2 = Some(inv);
    }
    Ok(DeviceCost {
        kind: spec.kind,
        entropy: s_target,
        mean_energy,
        mean_surface,
        product: mean_energy * mean_surface,
        moments: m,
    })
}

/// Costs along an ascending list of entropies.
pub fn growth_scan(spec: &DeviceSpec, s_values: &[f64]) -> Result<Vec<DeviceCost>> {
    if s_values.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(invalid("entropies must be strictly ascending"));
    }
    s_values.iter().map(|&s| device_cost(spec, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::{COULOMB_COUPLING, ELECTRON_MASS};

    fn box_spec(l: f64, cap: u64) -> DeviceSpec {
        DeviceSpec::new(DeviceKind::Box, ELECTRON_MASS, l, cap).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(DeviceSpec::new(DeviceKind::Box, 0.0, 1.0, 4).is_err());
        assert!(DeviceSpec::new(DeviceKind::Box, 1.0, -1.0, 4).is_err());
        assert!(DeviceSpec::new(DeviceKind::Box, 1.0, 1.0, 1).is_err());
    }

    #[test]
    fn entropy_range() {
        let s = box_spec(1e-9, 4);
        assert!(device_cost(&s, 4f64.ln() + 1e-6).is_err());
        assert!(device_cost(&s, -0.1).is_err());
        assert!(device_cost(&s, 4f64.ln()).is_ok());
    }

    #[test]
    fn box_ground_state_baseline() {
        let c = device_cost(&box_spec(1e-9, 16), 0.0).unwrap();
        assert!((c.moments.n2 - 1.0).abs() < 1e-15);
        let unit = HBAR * HBAR / ELECTRON_MASS;
        assert!((c.product / unit - PI * PI).abs() < 1e-12);
    }

    #[test]
    fn box_uniform_at_max_entropy() {
        // four levels at s = ln 4: uniform, <n^2> = (1 + 4 + 9 + 16) / 4
        let c = device_cost(&box_spec(1e-9, 4), 4f64.ln()).unwrap();
        assert!((c.moments.n2 - 7.5).abs() < 1e-12);
        assert!((c.moments.n - 2.5).abs() < 1e-12);
    }

    #[test]
    fn oscillator_product_form() {
        let spec = DeviceSpec::new(DeviceKind::Oscillator, ELECTRON_MASS, 1e15, 200).unwrap();
        let c = device_cost(&spec, 1.0).unwrap();
        let unit = HBAR * HBAR / ELECTRON_MASS;
        assert!((c.product / unit - c.moments.n * c.moments.n).abs() < 1e-12);
        assert!(c.moments.inv_n2.is_none());
    }

    #[test]
    fn hydrogen_ground_costs_nothing() {
        let spec =
            DeviceSpec::new(DeviceKind::Hydrogen, ELECTRON_MASS, COULOMB_COUPLING, 50).unwrap();
        let c = device_cost(&spec, 0.0).unwrap();
        assert_eq!(c.mean_energy, 0.0);
        // Bohr radius squared
        assert!((c.mean_surface.sqrt() - 5.29177e-11).abs() < 1e-15);
    }

    #[test]
    fn scan_rejects_unsorted() {
        assert!(growth_scan(&box_spec(1e-9, 8), &[1.0, 0.5]).is_err());
        let out = growth_scan(&box_spec(1e-9, 8), &[0.5, 1.0, 1.5]).unwrap();
        assert!(out.windows(2).all(|w| w[1].product > w[0].product));
    }
}
