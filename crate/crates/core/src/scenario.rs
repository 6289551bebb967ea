//! Flat `key=value` scenario files for the capacity estimate.

use std::f64::consts::PI;

use crate::bound::{invert_bound, Capacity, Dof, ATOMIC_MASS_UNIT, ELECTRON_VOLT};
use crate::error::{invalid, Error, Result};

pub const DEFAULT_SCENARIO: &str = include_str!("../scenarios/default.txt");

/// Quoted reference figures the estimate is compared against.
pub const REFERENCE_BITS_PER_ATOM: f64 = 20.0;
pub const REFERENCE_TOTAL_BITS: f64 = 1e31;

const KEYS: [&str; 5] = [
    "mass_kg",
    "volume_m3",
    "energy_per_atom_eV",
    "atom_mass_amu",
    "dof_per_atom",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub mass_kg: f64,
    pub volume_m3: f64,
    pub energy_per_atom_ev: f64,
    pub atom_mass_amu: f64,
    pub dof_per_atom: f64,
}

impl Scenario {
    pub fn default_scenario() -> Self {
        Self::parse(DEFAULT_SCENARIO).expect("bundled scenario parses")
    }

    /// Parses `key=value` lines; `#` starts a comment. All five keys are
    /// required exactly once.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values: [Option<f64>; 5] = [None; 5];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |reason: String| Error::Parse {
                line: i + 1,
                reason,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| parse_err(format!("expected key=value, got {line:?}")))?;
            let key = key.trim();
            let slot = KEYS
                .iter()
                .position(|k| *k == key)
                .ok_or_else(|| parse_err(format!("unknown key {key:?}")))?;
            if values[slot].is_some() {
                return Err(parse_err(format!("duplicate key {key:?}")));
            }
            let v: f64 = value
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("bad number {:?}", value.trim())))?;
            if !v.is_finite() || v < 0.0 {
                return Err(parse_err(format!("{key} must be finite and >= 0")));
            }
            values[slot] = Some(v);
        }
        let get = |i: usize| values[i].ok_or_else(|| invalid(format!("missing key {}", KEYS[i])));
        let s = Self {
            mass_kg: get(0)?,
            volume_m3: get(1)?,
            energy_per_atom_ev: get(2)?,
            atom_mass_amu: get(3)?,
            dof_per_atom: get(4)?,
        };
        for (name, v) in [
            ("mass_kg", s.mass_kg),
            ("volume_m3", s.volume_m3),
            ("atom_mass_amu", s.atom_mass_amu),
            ("dof_per_atom", s.dof_per_atom),
        ] {
            if v <= 0.0 {
                return Err(invalid(format!("{name} must be positive")));
            }
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub atoms: f64,
    pub dof: f64,
    /// J.
    pub energy: f64,
    /// m.
    pub radius: f64,
    /// m², uniform ball.
    pub r_squared: f64,
    pub capacity: Capacity,
}

impl Estimate {
    pub fn total_ratio(&self) -> f64 {
        REFERENCE_TOTAL_BITS / self.capacity.bits
    }
}

pub fn estimate(s: &Scenario) -> Result<Estimate> {
    let atoms = s.mass_kg / (s.atom_mass_amu * ATOMIC_MASS_UNIT);
    let dof = atoms * s.dof_per_atom;
    let energy = atoms * s.energy_per_atom_ev * ELECTRON_VOLT;
    let radius = (3.0 * s.volume_m3 / (4.0 * PI)).cbrt();
    let r_squared = 0.6 * radius * radius;
    let capacity = invert_bound(energy, r_squared, s.mass_kg, Dof::new(dof)?)?;
    Ok(Estimate {
        atoms,
        dof,
        energy,
        radius,
        r_squared,
        capacity,
    })
}
