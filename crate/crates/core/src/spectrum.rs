//! Levels of the dimensionless optimal Hamiltonian
//! `H = ½ Σ(−∂²/∂q_i²) − W/q² + q²` at the critical coupling `W = (1 − d/2)²`.
//!
//! Eigenstates are labelled by a radial number `n` and an angular number `l`,
//! with `E(n, l) = 2n + √(l(l + d − 2))` and the multiplicity of the
//! `l`-th hyperspherical harmonic in `d` dimensions.

use crate::error::{Error, Result};
use crate::numeric::ln_binomial;

/// Default ceiling on the number of levels [`enumerate_levels`] will build.
pub const DEFAULT_MAX_LEVELS: usize = 5_000_000;

/// Number of degrees of freedom of the device, `d ≥ 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dimension(u64);

impl Dimension {
    pub fn new(d: u64) -> Result<Self> {
        if d < 3 {
            return Err(Error::Dimension(d));
        }
        Ok(Self(d))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64
    }
}

impl TryFrom<u64> for Dimension {
    type Error = Error;

    fn try_from(d: u64) -> Result<Self> {
        Self::new(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    pub n: u64,
    pub l: u64,
}

impl QuantumNumbers {
    pub fn new(n: u64, l: u64) -> Self {
        Self { n, l }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub qn: QuantumNumbers,
    pub energy: f64,
    pub log_degeneracy: f64,
}

/// Angular part `√(l(l + d − 2))` of the energy.
pub fn angular_energy(l: u64, d: Dimension) -> f64 {
    let l = l as f64;
    (l * (l + d.as_f64() - 2.0)).sqrt()
}

/// `E(n, l) = 2n + √(l(l + d − 2))`.
pub fn energy(qn: QuantumNumbers, d: Dimension) -> f64 {
    2.0 * qn.n as f64 + angular_energy(qn.l, d)
}

/// Natural log of `g(l) = (d + 2l − 2)(d + l − 3)! / (l! (d − 2)!)`.
///
/// Uses `g(l) = (d + 2l − 2)/(d − 2) · C(d + l − 3, l)` so nothing is
/// materialised as a factorial; `d` and `l` in the millions are fine.
pub fn log_degeneracy(l: u64, d: Dimension) -> f64 {
    if l == 0 {
        return 0.0;
    }
    let d = d.get();
    let ratio = (d + 2 * l - 2) as f64 / (d - 2) as f64;
    ratio.ln() + ln_binomial(d + l - 3, l)
}

/// Exact integer degeneracy, or `None` if it does not fit in a `u64`.
pub fn degeneracy(l: u64, d: Dimension) -> Option<u64> {
    let d = d.get();
    let n = (d + l - 3) as u128;
    let k = l.min(d - 3) as u128;
    // C(n, k) by the multiplicative formula; each partial product is itself
    // a binomial coefficient, so the division is exact.
    let mut binom: u128 = 1;
    for i in 1..=k {
        binom = binom.checked_mul(n - k + i)? / i;
    }
    let g = binom.checked_mul((d + 2 * l - 2) as u128)? / (d - 2) as u128;
    u64::try_from(g).ok()
}

/// All `(n, l)` with `E(n, l) ≤ energy_cap`, ascending by energy, ties
/// broken by `(n, l)`.
pub fn enumerate_levels(d: Dimension, energy_cap: f64) -> Result<Vec<EnergyLevel>> {
    enumerate_levels_with_limit(d, energy_cap, DEFAULT_MAX_LEVELS)
}

pub fn enumerate_levels_with_limit(
    d: Dimension,
    energy_cap: f64,
    max_levels: usize,
) -> Result<Vec<EnergyLevel>> {
    if !(energy_cap > 0.0) || !energy_cap.is_finite() {
        return Err(crate::error::invalid(format!(
            "energy cap must be positive and finite, got {energy_cap}"
        )));
    }
    let mut levels = Vec::new();
    let mut l = 0u64;
    while angular_energy(l, d) <= energy_cap {
        let log_degeneracy = log_degeneracy(l, d);
        let mut n = 0u64;
        loop {
            let qn = QuantumNumbers::new(n, l);
            let e = energy(qn, d);
            if e > energy_cap {
                break;
            }
            if levels.len() == max_levels {
                return Err(Error::TooManyLevels { limit: max_levels });
            }
            levels.push(EnergyLevel {
                qn,
                energy: e,
                log_degeneracy,
            });
            n += 1;
        }
        l += 1;
    }
    levels.sort_by(|a, b| a.energy.total_cmp(&b.energy).then(a.qn.cmp(&b.qn)));
    Ok(levels)
}
