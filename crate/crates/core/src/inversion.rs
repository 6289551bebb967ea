//! Entropy-to-β inversion and the sum-form cost.
//!
//! At fixed total entropy `S = S_n + S_l` the cheapest state of the optimal
//! Hamiltonian is canonical at some `β`. The dimensionless sum-form cost is
//! then its internal energy `U_n + U_l` (physical value: times `ħ√(κ/m)`).

use crate::error::{invalid, Error, Result};
use crate::spectrum::Dimension;
use crate::thermo::{thermo_state_with, Beta, DirectOptions, Method, ThermoState};

/// Absolute entropy tolerance targeted by the bisection.
pub const ENTROPY_TOL: f64 = 1e-10;

const BRACKET_LO: f64 = 1e-6;
const BRACKET_HI: f64 = 1e2;
const BETA_FLOOR: f64 = 1e-300;
const BETA_CEIL: f64 = 1e300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyTarget {
    pub s_total: f64,
    pub d: Dimension,
}

impl EntropyTarget {
    pub fn new(s_total: f64, d: Dimension) -> Result<Self> {
        if !(s_total >= 0.0) || !s_total.is_finite() {
            return Err(invalid(format!(
                "entropy must be finite and non-negative, got {s_total}"
            )));
        }
        Ok(Self { s_total, d })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumCost {
    pub beta_solution: Beta,
    /// `C̃ / (ħ√(κ/m)) = U_n + U_l`.
    pub c_tilde_dimensionless: f64,
    /// `d (e^{S/d} − 1)`.
    pub lemma_value: f64,
    pub method: Method,
    pub state: ThermoState,
}

impl SumCost {
    pub fn ratio(&self) -> f64 {
        self.c_tilde_dimensionless / self.lemma_value
    }
}

fn options_for(method: Method) -> DirectOptions {
    match method {
        Method::Direct => DirectOptions::unbounded(),
        Method::Asymptotic => DirectOptions::default(),
    }
}

fn entropy_at(beta: f64, d: Dimension, method: Method, opts: &DirectOptions) -> Result<f64> {
    Ok(thermo_state_with(Beta::new(beta)?, d, method, opts)?.entropy())
}

pub fn beta_for_entropy(target: EntropyTarget, method: Method) -> Result<Beta> {
    beta_for_entropy_with(target, method, &options_for(method))
}

/// Bisection in `ln β` for `S(β) = s_total`, using that `S` decreases in `β`.
///
/// The asymptotic entropy is cheap everywhere, so its bracket starts at
/// `[1e-6, 1e2]`. Direct summation at `β = 1e-6` would need ~10⁸ terms, so
/// the direct bracket is seeded at the asymptotic root and widened by
/// factors of two instead.
pub fn beta_for_entropy_with(
    target: EntropyTarget,
    method: Method,
    opts: &DirectOptions,
) -> Result<Beta> {
    if target.s_total <= 0.0 {
        return Err(invalid("entropy must be positive to solve for beta"));
    }
    let s = target.s_total;
    let d = target.d;
    let f = |b: f64| entropy_at(b, d, method, opts);

    let (mut lo, mut hi, grow) = match method {
        Method::Asymptotic => (BRACKET_LO, BRACKET_HI, 10.0),
        Method::Direct => {
            let seed = beta_for_entropy_with(target, Method::Asymptotic, opts)?.get();
            // the asymptotic seed can be far off at tiny entropy; keep it sane
            let seed = seed.clamp(1e-4, 50.0);
            (seed / 2.0, seed * 2.0, 2.0)
        }
    };
    let mut s_lo = f(lo)?;
    while s_lo < s {
        hi = lo;
        lo /= grow;
        if lo < BETA_FLOOR {
            return Err(Error::BracketExhausted { target: s });
        }
        s_lo = f(lo)?;
    }
    let mut s_hi = f(hi)?;
    while s_hi > s {
        lo = hi;
        s_lo = s_hi;
        hi *= grow;
        if hi > BETA_CEIL {
            return Err(Error::BracketExhausted { target: s });
        }
        s_hi = f(hi)?;
    }

    for _ in 0..400 {
        if hi - lo <= 2.0 * f64::EPSILON * lo {
            break;
        }
        let mid = (lo * hi).sqrt().clamp(lo, hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let s_mid = f(mid)?;
        if (s_mid - s).abs() <= 0.01 * ENTROPY_TOL {
            return Beta::new(mid);
        }
        if s_mid > s {
            lo = mid;
            s_lo = s_mid;
        } else {
            hi = mid;
            s_hi = s_mid;
        }
    }
    let best = if (s_lo - s).abs() <= (s_hi - s).abs() {
        lo
    } else {
        hi
    };
    Beta::new(best)
}

pub fn sum_cost(target: EntropyTarget, method: Method) -> Result<SumCost> {
    sum_cost_with(target, method, &options_for(method))
}

pub fn sum_cost_with(
    target: EntropyTarget,
    method: Method,
    opts: &DirectOptions,
) -> Result<SumCost> {
    let beta = beta_for_entropy_with(target, method, opts)?;
    let state = thermo_state_with(beta, target.d, method, opts)?;
    let d = target.d.as_f64();
    Ok(SumCost {
        beta_solution: beta,
        c_tilde_dimensionless: state.energy(),
        lemma_value: d * (target.s_total / d).exp_m1(),
        method,
        state,
    })
}
