//! Partition function of the optimal Hamiltonian and the canonical
//! quantities of its two uncoupled subsystems.
//!
//! Because `E(n, l) = 2n + √(l(l + d − 2))` separates, `Z = Z_n · Z_l` with
//! `Z_n = Σ e^{−2βn}` (geometric, closed form) and
//! `Z_l = Σ g(l) e^{−β√(l(l+d−2))}` (summed numerically or replaced by its
//! steepest-descent estimate `2 β^{−(d−1)}`).

use std::f64::consts::LN_2;

use crate::error::{invalid, Error, Result};
use crate::numeric::LogSumExp;
use crate::spectrum::{angular_energy, log_degeneracy, Dimension};

/// Relative step for the central difference `−∂ ln Z_l / ∂β`.
pub const FD_REL_STEP: f64 = 1e-5;

/// Inverse temperature, positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Beta(f64);

impl Beta {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(invalid(format!(
                "beta must be positive and finite, got {beta}"
            )));
        }
        Ok(Self(beta))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Numerical summation of `Z_l`.
    Direct,
    /// Steepest-descent closed forms for the `l` subsystem.
    Asymptotic,
}

impl Method {
    /// Asymptotic formulas at `d ≥ 50`, direct summation below.
    pub fn default_for(d: Dimension) -> Self {
        if d.get() >= 50 {
            Method::Asymptotic
        } else {
            Method::Direct
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectOptions {
    pub max_terms: usize,
    /// Stop once the current term falls below `tail_tol` times the running sum.
    pub tail_tol: f64,
}

impl Default for DirectOptions {
    fn default() -> Self {
        Self {
            max_terms: 1600,
            tail_tol: 1e-15,
        }
    }
}

impl DirectOptions {
    /// Term budget large enough that only the tail criterion stops the sum
    /// for any `β` down to about `1e-4` at moderate `d`.
    pub fn unbounded() -> Self {
        Self {
            max_terms: 50_000_000,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stop {
    /// Past the peak and the tail criterion was met.
    Converged,
    /// Past the peak but the term budget ran out first.
    TermCap,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LSum {
    pub log_z: f64,
    pub terms: usize,
    pub stop: Stop,
}

/// `ln Z_n = −ln(1 − e^{−2β})`.
pub fn z_n_log(beta: Beta) -> f64 {
    let x = 2.0 * beta.get();
    if x > LN_2 {
        -(-(-x).exp()).ln_1p()
    } else {
        -(-(-x).exp_m1()).ln()
    }
}

/// `U_n = 2 / (e^{2β} − 1)`.
pub fn u_n_exact(beta: Beta) -> f64 {
    2.0 / (2.0 * beta.get()).exp_m1()
}

/// `S_n = ln(1 + U_n/2) + (U_n/2) ln(1 + 2/U_n)`; zero at `U_n = 0`.
///
/// Returns NaN for negative input.
pub fn s_n_exact(u_n: f64) -> f64 {
    if u_n == 0.0 {
        return 0.0;
    }
    if u_n < 0.0 {
        return f64::NAN;
    }
    let half = 0.5 * u_n;
    half.ln_1p() + half * (2.0 / u_n).ln_1p()
}

/// `ln Z_l` by in-order log-sum-exp over `l = 0, 1, 2, …`.
pub fn z_l_log_direct(beta: Beta, d: Dimension, opts: &DirectOptions) -> Result<LSum> {
    if opts.max_terms == 0 {
        return Err(invalid("max_terms must be at least 1"));
    }
    let ln_tol = opts.tail_tol.ln();
    let b = beta.get();
    let mut acc = LogSumExp::new();
    let mut prev = f64::NEG_INFINITY;
    let mut past_peak = false;
    for l in 0..opts.max_terms as u64 {
        let t = log_degeneracy(l, d) - b * angular_energy(l, d);
        acc.push(t);
        if l > 0 && t < prev {
            past_peak = true;
        }
        prev = t;
        if past_peak && t - acc.value() < ln_tol {
            return Ok(LSum {
                log_z: acc.value(),
                terms: l as usize + 1,
                stop: Stop::Converged,
            });
        }
    }
    if !past_peak {
        return Err(Error::NotConverged {
            terms: opts.max_terms,
        });
    }
    Ok(LSum {
        log_z: acc.value(),
        terms: opts.max_terms,
        stop: Stop::TermCap,
    })
}

/// Steepest-descent estimate `ln(2 β^{−(d−1)})`.
pub fn z_l_log_steepest(beta: Beta, d: Dimension) -> f64 {
    LN_2 - (d.as_f64() - 1.0) * beta.get().ln()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoState {
    pub beta: Beta,
    pub d: Dimension,
    pub log_z_n: f64,
    pub log_z_l: f64,
    pub u_n: f64,
    pub u_l: f64,
    pub s_n: f64,
    pub s_l: f64,
    pub method: Method,
}

impl ThermoState {
    pub fn energy(&self) -> f64 {
        self.u_n + self.u_l
    }

    pub fn entropy(&self) -> f64 {
        self.s_n + self.s_l
    }
}

pub fn thermo_state(beta: Beta, d: Dimension, method: Method) -> Result<ThermoState> {
    thermo_state_with(beta, d, method, &DirectOptions::default())
}

/// Canonical state at `β`.
///
/// The asymptotic `l`-subsystem uses `U_l = (d−1)/β` and
/// `S_l = (d−1)(ln(U_l/(d−1)) + 1)`; these are only meaningful for `β ≪ 1`
/// (`S_l` turns negative past `β = e`). The direct method differentiates the
/// summed `ln Z_l` numerically and closes with `S_l = β U_l + ln Z_l`.
pub fn thermo_state_with(
    beta: Beta,
    d: Dimension,
    method: Method,
    opts: &DirectOptions,
) -> Result<ThermoState> {
    let b = beta.get();
    let u_n = u_n_exact(beta);
    let s_n = s_n_exact(u_n);
    let log_z_n = z_n_log(beta);
    let (log_z_l, u_l, s_l) = match method {
        Method::Asymptotic => {
            let dm1 = d.as_f64() - 1.0;
            let u_l = dm1 / b;
            let s_l = dm1 * ((u_l / dm1).ln() + 1.0);
            (z_l_log_steepest(beta, d), u_l, s_l)
        }
        Method::Direct => {
            let h = FD_REL_STEP * b;
            let center = z_l_log_direct(beta, d, opts)?.log_z;
            let up = z_l_log_direct(Beta::new(b + h)?, d, opts)?.log_z;
            let down = z_l_log_direct(Beta::new(b - h)?, d, opts)?.log_z;
            // Clamp tiny negative noise at very large beta where U_l underflows.
            let u_l = (-(up - down) / (2.0 * h)).max(0.0);
            let s_l = (b * u_l + center).max(0.0);
            (center, u_l, s_l)
        }
    };
    Ok(ThermoState {
        beta,
        d,
        log_z_n,
        log_z_l,
        u_n,
        u_l,
        s_n,
        s_l,
        method,
    })
}
