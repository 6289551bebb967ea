//! The product bound `⟨E⟩⟨r²⟩ ≥ (ħ²/2m) d² (e^{S/d} − 1)²` in SI units.

use std::f64::consts::LN_2;

use crate::error::{invalid, Result};
use crate::spectrum::Dimension;

/// Reduced Planck constant, J·s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Electron volt, J.
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;
/// Electron mass, kg.
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
/// Unified atomic mass unit, kg.
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;
/// `e²/(4πε₀)`, J·m.
pub const COULOMB_COUPLING: f64 = 2.307_077_552e-28;

/// Converts J·m² to eV·nm².
pub fn joule_m2_to_ev_nm2(x: f64) -> f64 {
    x / ELECTRON_VOLT * 1e18
}

pub fn nats_to_bits(s: f64) -> f64 {
    s / LN_2
}

pub fn bits_to_nats(s: f64) -> f64 {
    s * LN_2
}

/// Degrees of freedom for the bound.
///
/// Unlike [`Dimension`] this is real-valued and admits `d ≥ 1`: macroscopic
/// devices carry ~10²⁶ degrees of freedom and single-coordinate toy devices
/// have `d = 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Dof(f64);

impl Dof {
    pub fn new(d: f64) -> Result<Self> {
        if !(d >= 1.0) || !d.is_finite() {
            return Err(invalid(format!("degrees of freedom must be >= 1, got {d}")));
        }
        Ok(Self(d))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl From<Dimension> for Dof {
    fn from(d: Dimension) -> Self {
        Self(d.as_f64())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundQuery {
    /// Entropy in nats.
    pub s_total: f64,
    pub d: Dof,
    /// Particle mass, kg.
    pub mass: f64,
}

impl BoundQuery {
    pub fn new(s_total: f64, d: Dof, mass: f64) -> Result<Self> {
        if !(s_total >= 0.0) || !s_total.is_finite() {
            return Err(invalid(format!("entropy must be >= 0, got {s_total}")));
        }
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(invalid(format!("mass must be positive, got {mass}")));
        }
        Ok(Self { s_total, d, mass })
    }

    pub fn from_bits(s_bits: f64, d: Dof, mass: f64) -> Result<Self> {
        Self::new(bits_to_nats(s_bits), d, mass)
    }

    /// `A = ħ d (e^{S/d} − 1) / √m`, the coefficient of `√κ` in the
    /// sum-form lower bound.
    pub fn lemma_side(&self) -> f64 {
        let d = self.d.get();
        HBAR * d * (self.s_total / d).exp_m1() / self.mass.sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalBound {
    /// J·m².
    pub product_bound: f64,
    /// J/m², present when a spatial extent was supplied.
    pub kappa_star: Option<f64>,
    pub hbar: f64,
}

pub fn product_bound(query: &BoundQuery) -> PhysicalBound {
    let d = query.d.get();
    let x = d * (query.s_total / d).exp_m1();
    PhysicalBound {
        product_bound: HBAR * HBAR / (2.0 * query.mass) * x * x,
        kappa_star: None,
        hbar: HBAR,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaOptimum {
    pub kappa_star: f64,
    /// Objective value at `κ*`; equals `A²/2` whatever `⟨r²⟩` is.
    pub bound: f64,
    /// Whether every sampled `κ` on the check grid scored no higher than `κ*`.
    pub grid_verified: bool,
}

/// `f(κ) = √κ (A − (√κ/2)⟨r²⟩) ⟨r²⟩`, the lower bound on `⟨H⟩⟨r²⟩` at a
/// given `κ`.
pub fn kappa_objective(kappa: f64, a: f64, r_squared: f64) -> f64 {
    let sk = kappa.sqrt();
    sk * (a - 0.5 * sk * r_squared) * r_squared
}

/// Maximises [`kappa_objective`] over `κ > 0`.
pub fn kappa_optimize(a: f64, r_squared: f64) -> Result<KappaOptimum> {
    if !(a > 0.0) || !(r_squared > 0.0) || !a.is_finite() || !r_squared.is_finite() {
        return Err(invalid(
            "kappa optimisation needs positive finite A and <r^2>",
        ));
    }
    let sk = a / r_squared;
    let kappa_star = sk * sk;
    let bound = kappa_objective(kappa_star, a, r_squared);
    // κ*·10^{-3..3}; the peak is strict so sampled points may tie only to rounding
    let slack = 4.0 * f64::EPSILON * bound.abs();
    let grid_verified = (0..=600)
        .map(|i| kappa_star * 10f64.powf(-3.0 + i as f64 / 100.0))
        .all(|k| kappa_objective(k, a, r_squared) <= bound + slack);
    Ok(KappaOptimum {
        kappa_star,
        bound,
        grid_verified,
    })
}

/// κ-optimum for a query and a supplied spatial extent (m²).
pub fn kappa_for_query(query: &BoundQuery, r_squared: f64) -> Result<PhysicalBound> {
    let opt = kappa_optimize(query.lemma_side(), r_squared)?;
    Ok(PhysicalBound {
        product_bound: opt.bound,
        kappa_star: Some(opt.kappa_star),
        hbar: HBAR,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Capacity {
    pub nats: f64,
    pub bits: f64,
    pub nats_per_dof: f64,
    pub bits_per_dof: f64,
}

/// Largest entropy compatible with `E · ⟨r²⟩`:
/// `S = d ln(1 + √(2 m E ⟨r²⟩) / (ħ d))`.
pub fn invert_bound(energy: f64, r_squared: f64, mass: f64, d: Dof) -> Result<Capacity> {
    if !(energy >= 0.0) || !energy.is_finite() {
        return Err(invalid(format!("energy must be >= 0, got {energy}")));
    }
    if !(r_squared > 0.0) || !(mass > 0.0) {
        return Err(invalid("<r^2> and mass must be positive"));
    }
    let d = d.get();
    let per_dof = ((2.0 * mass * energy * r_squared).sqrt() / (HBAR * d)).ln_1p();
    let nats = d * per_dof;
    Ok(Capacity {
        nats,
        bits: nats_to_bits(nats),
        nats_per_dof: per_dof,
        bits_per_dof: nats_to_bits(per_dof),
    })
}
