//! Report and CSV rendering behind the `membound` binary.
//!
//! Every function here is deterministic in its arguments and returns the
//! full output text, so the binary is a thin argument-parsing shell.
//! Floating-point values are printed with 17 significant digits.

use std::fmt::Write;

use crate::bound::{
    bits_to_nats, joule_m2_to_ev_nm2, nats_to_bits, product_bound, BoundQuery, Dof, HBAR,
};
use crate::devices::{growth_scan, DeviceKind, DeviceSpec};
use crate::error::{invalid, Error, Result};
use crate::lemma::{challenge, FiniteSpectrum};
use crate::numeric::log_grid;
use crate::scenario::{estimate, Scenario, REFERENCE_BITS_PER_ATOM, REFERENCE_TOTAL_BITS};
use crate::spectrum::Dimension;
use crate::thermo::{z_l_log_direct, z_l_log_steepest, Beta, DirectOptions, Stop};

/// Exit status for a failed lemma challenge.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit status for invalid arguments or input files.
pub const EXIT_USAGE: i32 = 2;

pub const SCAN_HEADER: &str = "beta,log_z_direct,log_z_approx,error,status";
pub const DEVICES_HEADER: &str = "device,entropy,energy,surface,product";

/// Lossless decimal rendering (17 significant digits).
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntropyUnits {
    Bits,
    #[default]
    Nats,
}

impl EntropyUnits {
    pub fn to_nats(self, s: f64) -> f64 {
        match self {
            EntropyUnits::Bits => bits_to_nats(s),
            EntropyUnits::Nats => s,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EntropyUnits::Bits => "bits",
            EntropyUnits::Nats => "nats",
        }
    }
}

pub fn bound_report(entropy: f64, d: f64, mass: f64, units: EntropyUnits) -> Result<String> {
    let s = units.to_nats(entropy);
    let query = BoundQuery::new(s, Dof::new(d)?, mass)?;
    let pb = product_bound(&query);
    let mut out = String::new();
    let _ = writeln!(out, "entropy_input: {} {}", num(entropy), units.name());
    let _ = writeln!(out, "entropy_nats: {}", num(s));
    let _ = writeln!(out, "entropy_bits: {}", num(nats_to_bits(s)));
    let _ = writeln!(out, "dof: {}", num(d));
    let _ = writeln!(out, "mass_kg: {}", num(mass));
    let _ = writeln!(out, "hbar_J_s: {}", num(pb.hbar));
    let _ = writeln!(out, "product_bound_J_m2: {}", num(pb.product_bound));
    let _ = writeln!(
        out,
        "product_bound_eV_nm2: {}",
        num(joule_m2_to_ev_nm2(pb.product_bound))
    );
    Ok(out)
}

/// Direct vs steepest-descent `ln Z_l` on a log-spaced `β` grid.
///
/// Rows where the direct sum fails are kept and flagged in the `status`
/// column (`ok`, `term_cap` or `not_converged`).
pub fn scan_csv(
    d: u64,
    beta_min: f64,
    beta_max: f64,
    steps: usize,
    max_terms: usize,
) -> Result<String> {
    let d = Dimension::new(d)?;
    if !(beta_min > 0.0 && beta_max > beta_min && beta_max.is_finite()) {
        return Err(invalid("need 0 < beta_min < beta_max"));
    }
    if steps < 2 {
        return Err(invalid("steps must be at least 2"));
    }
    if max_terms == 0 {
        return Err(invalid("max_terms must be at least 1"));
    }
    let opts = DirectOptions {
        max_terms,
        ..DirectOptions::default()
    };
    let mut out = String::new();
    let _ = writeln!(out, "{SCAN_HEADER}");
    for b in log_grid(beta_min, beta_max, steps) {
        let beta = Beta::new(b)?;
        let approx = z_l_log_steepest(beta, d);
        let (direct, status) = match z_l_log_direct(beta, d, &opts) {
            Ok(s) if s.stop == Stop::Converged => (s.log_z, "ok"),
            Ok(s) => (s.log_z, "term_cap"),
            Err(Error::NotConverged { .. }) => (f64::NAN, "not_converged"),
            Err(e) => return Err(e),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{status}",
            num(b),
            num(direct),
            num(approx),
            num(direct - approx)
        );
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumSource {
    /// Truncated optimal-Hamiltonian spectrum.
    OptimalHamiltonian { d: u64, cap: f64 },
    /// Contents of a spectrum file.
    Text(String),
}

/// One level per line: `energy` or `energy,degeneracy` (comma or
/// whitespace separated); blank lines and `#` comments are skipped.
pub fn parse_spectrum(text: &str) -> Result<FiniteSpectrum> {
    let mut levels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |reason: String| Error::Parse {
            line: i + 1,
            reason,
        };
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let (e, g) = match fields.as_slice() {
            [e] => (*e, "1"),
            [e, g] => (*e, *g),
            _ => return Err(err(format!("expected 1 or 2 fields, got {}", fields.len()))),
        };
        let e: f64 = e.parse().map_err(|_| err(format!("bad energy {e:?}")))?;
        let g: u64 = g
            .parse()
            .map_err(|_| err(format!("bad degeneracy {g:?}")))?;
        levels.push((e, g));
    }
    FiniteSpectrum::new(levels)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LemmaOutcome {
    pub report: String,
    pub passed: bool,
}

pub fn verify_lemma(
    source: &SpectrumSource,
    entropy: f64,
    units: EntropyUnits,
    trials: usize,
    seed: u64,
) -> Result<LemmaOutcome> {
    let (label, spectrum) = match source {
        SpectrumSource::OptimalHamiltonian { d, cap } => (
            format!("optimal-hamiltonian d={d} cap={}", num(*cap)),
            FiniteSpectrum::optimal_hamiltonian(Dimension::new(*d)?, *cap)?,
        ),
        SpectrumSource::Text(t) => ("file".to_string(), parse_spectrum(t)?),
    };
    let s = units.to_nats(entropy);
    let r = challenge(&spectrum, s, trials, seed)?;
    let mut out = String::new();
    let _ = writeln!(out, "spectrum: {label}");
    let _ = writeln!(out, "levels: {}", spectrum.level_count());
    let _ = writeln!(out, "states: {}", spectrum.state_count());
    let _ = writeln!(out, "entropy_nats: {}", num(s));
    let _ = writeln!(out, "trials: {trials}");
    let _ = writeln!(out, "seed: {seed}");
    let _ = writeln!(
        out,
        "candidates: {}",
        if r.per_state {
            "per-state"
        } else {
            "per-level"
        }
    );
    let _ = writeln!(out, "boltzmann_beta: {}", num(r.boltzmann_beta));
    let _ = writeln!(out, "boltzmann_mean_energy: {}", num(r.boltzmann_energy));
    let _ = writeln!(out, "worst_violation: {}", num(r.worst_violation));
    let _ = writeln!(out, "result: {}", if r.passed() { "pass" } else { "fail" });
    Ok(LemmaOutcome {
        report: out,
        passed: r.passed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviceScales {
    pub mass: f64,
    pub box_width: f64,
    pub omega: f64,
    pub coulomb: f64,
    pub level_cap: u64,
}

impl Default for DeviceScales {
    fn default() -> Self {
        Self {
            mass: crate::bound::ELECTRON_MASS,
            box_width: 1e-9,
            omega: 1e15,
            coulomb: crate::bound::COULOMB_COUPLING,
            level_cap: 64,
        }
    }
}

pub fn devices_csv(entropies: &[f64], scales: &DeviceScales) -> Result<String> {
    let mut out = String::new();
    let _ = writeln!(out, "{DEVICES_HEADER}");
    for (kind, scale) in [
        (DeviceKind::Box, scales.box_width),
        (DeviceKind::Oscillator, scales.omega),
        (DeviceKind::Hydrogen, scales.coulomb),
    ] {
        let spec = DeviceSpec::new(kind, scales.mass, scale, scales.level_cap)?;
        for c in growth_scan(&spec, entropies)? {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                kind.name(),
                num(c.entropy),
                num(c.mean_energy),
                num(c.mean_surface),
                num(c.product)
            );
        }
    }
    Ok(out)
}

pub fn estimate_report(scenario: &Scenario) -> Result<String> {
    let e = estimate(scenario)?;
    let c = e.capacity;
    let mut out = String::new();
    let _ = writeln!(out, "mass_kg: {}", num(scenario.mass_kg));
    let _ = writeln!(out, "volume_m3: {}", num(scenario.volume_m3));
    let _ = writeln!(
        out,
        "energy_per_atom_eV: {}",
        num(scenario.energy_per_atom_ev)
    );
    let _ = writeln!(out, "atom_mass_amu: {}", num(scenario.atom_mass_amu));
    let _ = writeln!(out, "dof_per_atom: {}", num(scenario.dof_per_atom));
    let _ = writeln!(out, "hbar_J_s: {}", num(HBAR));
    let _ = writeln!(out, "atoms: {}", num(e.atoms));
    let _ = writeln!(out, "dof: {}", num(e.dof));
    let _ = writeln!(out, "energy_J: {}", num(e.energy));
    let _ = writeln!(out, "radius_m: {}", num(e.radius));
    let _ = writeln!(out, "r_squared_m2: {}", num(e.r_squared));
    let _ = writeln!(out, "nats_per_dof: {}", num(c.nats_per_dof));
    let _ = writeln!(out, "bits_per_dof: {}", num(c.bits_per_dof));
    let _ = writeln!(
        out,
        "reference_bits_per_atom: {}",
        num(REFERENCE_BITS_PER_ATOM)
    );
    let _ = writeln!(out, "total_bits: {}", num(c.bits));
    let _ = writeln!(out, "reference_total_bits: {}", num(REFERENCE_TOTAL_BITS));
    let _ = writeln!(out, "reference_over_computed: {}", num(e.total_ratio()));
    Ok(out)
}
