//! Brute-force checks that, on a finite spectrum, the Boltzmann distribution
//! minimises mean energy among all distributions with the same Shannon
//! entropy.
//!
//! A [`FiniteSpectrum`] is a list of levels with integer multiplicities. A
//! [`Distribution`] assigns one probability per *state*; states inside a
//! degenerate level are stored once with a multiplicity, so very large
//! degeneracies (the optimal-Hamiltonian spectrum reaches 10¹⁷ states per
//! level) never have to be materialised.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::numeric::LogSumExp;
use crate::spectrum::{degeneracy, enumerate_levels, Dimension};

/// Operations that need one entry per state refuse spectra larger than this.
pub const MAX_EXPANDED_STATES: u128 = 10_000;
/// Entropy tolerance used by [`min_energy_at_entropy`].
pub const ENTROPY_TOL: f64 = 1e-10;
/// A challenger beating Boltzmann by more than this counts as a violation.
pub const VIOLATION_TOL: f64 = 1e-9;

const SORTED_CHECK_SHUFFLES: usize = 10_000;
const SORTED_CHECK_SEED: u64 = 0x5eed_0fab_1e00;

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSpectrum {
    energies: Vec<f64>,
    degeneracies: Vec<u64>,
}

impl FiniteSpectrum {
    /// Levels as `(energy, degeneracy)`; energies ascending from 0.
    pub fn new(levels: Vec<(f64, u64)>) -> Result<Self> {
        if levels.is_empty() {
            return Err(invalid("spectrum has no levels"));
        }
        if levels[0].0 != 0.0 {
            return Err(invalid("ground level must have energy 0"));
        }
        for (i, &(e, g)) in levels.iter().enumerate() {
            if !e.is_finite() || e < 0.0 {
                return Err(invalid(format!("level {i}: bad energy {e}")));
            }
            if g == 0 {
                return Err(invalid(format!("level {i}: zero degeneracy")));
            }
            if i > 0 && e < levels[i - 1].0 {
                return Err(invalid(format!("level {i}: energies not ascending")));
            }
        }
        let (energies, degeneracies): (Vec<_>, Vec<_>) = levels.into_iter().unzip();
        let spec = Self {
            energies,
            degeneracies,
        };
        if spec.state_count() < 2 {
            return Err(invalid("spectrum needs at least two states"));
        }
        Ok(spec)
    }

    /// Non-degenerate spectrum from a list of state energies.
    pub fn from_energies(energies: &[f64]) -> Result<Self> {
        Self::new(energies.iter().map(|&e| (e, 1)).collect())
    }

    /// Truncated spectrum of the optimal Hamiltonian, `E ≤ energy_cap`.
    pub fn optimal_hamiltonian(d: Dimension, energy_cap: f64) -> Result<Self> {
        let levels = enumerate_levels(d, energy_cap)?;
        let mut out = Vec::with_capacity(levels.len());
        for lv in levels {
            let g = degeneracy(lv.qn.l, d)
                .ok_or_else(|| invalid(format!("degeneracy of l = {} overflows u64", lv.qn.l)))?;
            out.push((lv.energy, g));
        }
        Self::new(out)
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn degeneracies(&self) -> &[u64] {
        &self.degeneracies
    }

    pub fn level_count(&self) -> usize {
        self.energies.len()
    }

    pub fn state_count(&self) -> u128 {
        self.degeneracies.iter().map(|&g| g as u128).sum()
    }

    pub fn max_entropy(&self) -> f64 {
        (self.state_count() as f64).ln()
    }

    /// Smallest entropy a Boltzmann distribution reaches (`ln g₀`).
    pub fn min_entropy(&self) -> f64 {
        (self.degeneracies[0] as f64).ln()
    }

    /// One entry per state, each degenerate level repeated.
    pub fn expanded(&self) -> Result<Vec<f64>> {
        let count = self.state_count();
        if count > MAX_EXPANDED_STATES {
            return Err(Error::TooManyStates {
                count,
                limit: MAX_EXPANDED_STATES,
            });
        }
        Ok(self
            .energies
            .iter()
            .zip(&self.degeneracies)
            .flat_map(|(&e, &g)| std::iter::repeat_n(e, g as usize))
            .collect())
    }

    fn expand_to_spectrum(&self) -> Result<Self> {
        Self::from_energies(&self.expanded()?)
    }
}

/// Probability per state, grouped: entry `i` is the probability of *each*
/// of the `multiplicity[i]` states it stands for.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    per_state: Vec<f64>,
    multiplicity: Vec<u64>,
}

impl Distribution {
    /// Explicit state probabilities, validated to sum to 1 within 1e−12.
    pub fn from_states(p: Vec<f64>) -> Result<Self> {
        if p.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) {
            return Err(invalid("probabilities must be finite and non-negative"));
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(invalid(format!("probabilities sum to {total}, not 1")));
        }
        let multiplicity = vec![1; p.len()];
        Ok(Self {
            per_state: p,
            multiplicity,
        })
    }

    pub fn per_state(&self) -> &[f64] {
        &self.per_state
    }

    pub fn multiplicity(&self) -> &[u64] {
        &self.multiplicity
    }

    pub fn total(&self) -> f64 {
        self.per_state
            .iter()
            .zip(&self.multiplicity)
            .map(|(&p, &g)| g as f64 * p)
            .sum()
    }

    /// Shannon entropy in nats, `0 ln 0 = 0`.
    pub fn entropy(&self) -> f64 {
        grouped_entropy(&self.per_state, &self.multiplicity)
    }

    /// `ln N − S`, the divergence from the uniform distribution, evaluated
    /// without the cancellation of subtracting two nearly equal numbers.
    pub fn entropy_deficit(&self) -> f64 {
        let n: f64 = self.multiplicity.iter().map(|&g| g as f64).sum();
        grouped_deficit(&self.per_state, &self.multiplicity, n)
    }

    /// `Σ g_i p_i E_i` for energies aligned with the entries.
    pub fn mean_energy(&self, energies: &[f64]) -> f64 {
        debug_assert_eq!(energies.len(), self.per_state.len());
        self.per_state
            .iter()
            .zip(&self.multiplicity)
            .zip(energies)
            .map(|((&p, &g), &e)| g as f64 * p * e)
            .sum()
    }

    /// Fully expanded state probabilities.
    pub fn states(&self) -> Result<Vec<f64>> {
        let count: u128 = self.multiplicity.iter().map(|&g| g as u128).sum();
        if count > MAX_EXPANDED_STATES {
            return Err(Error::TooManyStates {
                count,
                limit: MAX_EXPANDED_STATES,
            });
        }
        Ok(self
            .per_state
            .iter()
            .zip(&self.multiplicity)
            .flat_map(|(&p, &g)| std::iter::repeat_n(p, g as usize))
            .collect())
    }
}

fn grouped_entropy(per_state: &[f64], multiplicity: &[u64]) -> f64 {
    per_state
        .iter()
        .zip(multiplicity)
        .filter(|(&p, _)| p > 0.0)
        .map(|(&p, &g)| -(g as f64) * p * p.ln())
        .sum()
}

/// `(1 + r) ln(1 + r) − r ≥ 0`, accurate for small `r`.
fn divergence_term(r: f64) -> f64 {
    if r.abs() < 1e-3 {
        let r2 = r * r;
        r2 * (0.5 - r / 6.0 + r2 / 12.0 - r2 * r / 20.0)
    } else if r <= -1.0 {
        1.0
    } else {
        (1.0 + r) * r.ln_1p() - r
    }
}

/// `Σ u_i f(w_i/u_i − 1)` over states, with `u = 1/N`. Every term is
/// non-negative, so the sum does not cancel near the uniform point.
fn grouped_deficit(per_state: &[f64], multiplicity: &[u64], states: f64) -> f64 {
    per_state
        .iter()
        .zip(multiplicity)
        .map(|(&p, &g)| g as f64 / states * divergence_term(p * states - 1.0))
        .sum()
}

/// Signed distance of a distribution's entropy from a target, measured on
/// whichever scale is accurate there: `S` itself in the lower half of
/// `[0, ln N]`, the deficit `ln N − S` in the upper half.
#[derive(Debug, Clone, Copy)]
struct EntropyGauge {
    target: f64,
    use_deficit: bool,
    target_deficit: f64,
}

impl EntropyGauge {
    fn new(s_target: f64, max_entropy: f64) -> Self {
        Self {
            target: s_target,
            use_deficit: s_target > 0.5 * max_entropy,
            target_deficit: (max_entropy - s_target).max(0.0),
        }
    }

    /// Positive when the entropy exceeds the target.
    fn excess(&self, entropy: impl FnOnce() -> f64, deficit: impl FnOnce() -> f64) -> f64 {
        if self.use_deficit {
            self.target_deficit - deficit()
        } else {
            entropy() - self.target
        }
    }
}

/// `p ∝ e^{−βE}` per state. `β = ∞` puts all mass on the ground level.
pub fn boltzmann(spectrum: &FiniteSpectrum, beta: f64) -> Result<Distribution> {
    if !(beta >= 0.0) {
        return Err(invalid(format!("beta must be >= 0, got {beta}")));
    }
    let e = &spectrum.energies;
    let g = &spectrum.degeneracies;
    let per_state = if beta.is_infinite() {
        let g0: u64 = e
            .iter()
            .zip(g)
            .filter(|(&x, _)| x == 0.0)
            .map(|(_, &g)| g)
            .sum();
        e.iter()
            .map(|&x| if x == 0.0 { 1.0 / g0 as f64 } else { 0.0 })
            .collect()
    } else {
        let mut z = LogSumExp::new();
        for (&x, &m) in e.iter().zip(g) {
            z.push((m as f64).ln() - beta * x);
        }
        let log_z = z.value();
        e.iter().map(|&x| (-beta * x - log_z).exp()).collect()
    };
    Ok(Distribution {
        per_state,
        multiplicity: g.clone(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimizer {
    /// `f64::INFINITY` for the ground-state endpoint.
    pub beta: f64,
    pub distribution: Distribution,
    pub mean_energy: f64,
}

/// Lowest mean energy at Shannon entropy `s_target`, by bisection on `β`.
///
/// Feasible targets for the canonical family are `[ln g₀, ln N]`; with a
/// non-degenerate ground level that is the full `[0, ln N]`.
pub fn min_energy_at_entropy(spectrum: &FiniteSpectrum, s_target: f64) -> Result<Minimizer> {
    let (s_min, s_max) = (spectrum.min_entropy(), spectrum.max_entropy());
    let slack = 1e-12 * s_max.max(1.0);
    if !(s_target >= s_min - slack && s_target <= s_max + slack) {
        return Err(Error::EntropyOutOfRange {
            target: s_target,
            min: s_min,
            max: s_max,
        });
    }
    let energies = spectrum.energies();
    let done = |beta: f64, dist: Distribution| {
        let mean_energy = dist.mean_energy(energies);
        Ok(Minimizer {
            beta,
            distribution: dist,
            mean_energy,
        })
    };
    if s_target <= s_min + slack {
        return done(f64::INFINITY, boltzmann(spectrum, f64::INFINITY)?);
    }
    if s_target >= s_max - slack {
        return done(0.0, boltzmann(spectrum, 0.0)?);
    }

    let gauge = EntropyGauge::new(s_target, s_max);
    let excess = |b: f64| -> Result<f64> {
        let p = boltzmann(spectrum, b)?;
        Ok(gauge.excess(|| p.entropy(), || p.entropy_deficit()))
    };
    let mut lo = 0.0;
    let mut hi = 1.0;
    while excess(hi)? > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e300 {
            return Err(Error::BracketExhausted { target: s_target });
        }
    }
    let mut best = (hi, excess(hi)?);
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let x = excess(mid)?;
        if x.abs() < best.1.abs() {
            best = (mid, x);
        }
        if x.abs() <= 1e-3 * ENTROPY_TOL {
            break;
        }
        if x > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    done(best.0, boltzmann(spectrum, best.0)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChallengeReport {
    /// `min over trials of (candidate mean energy − Boltzmann mean energy)`.
    pub worst_violation: f64,
    pub boltzmann_energy: f64,
    pub boltzmann_beta: f64,
    pub trials: usize,
    /// Whether candidates were drawn per state or per level (uniform within
    /// each level) because the spectrum was too large to expand.
    pub per_state: bool,
}

impl ChallengeReport {
    pub fn passed(&self) -> bool {
        self.worst_violation >= -VIOLATION_TOL
    }
}

/// Random-search refutation attempt of Boltzmann minimality.
///
/// Each trial draws a random point on the simplex, then slides it toward the
/// uniform distribution (to raise entropy) or toward the ground-state point
/// mass (to lower it) until its entropy matches `s_target`. Trials use
/// independent streams derived from `seed`, so the result does not depend on
/// how work is split across threads.
pub fn challenge(
    spectrum: &FiniteSpectrum,
    s_target: f64,
    trials: usize,
    seed: u64,
) -> Result<ChallengeReport> {
    if trials == 0 {
        return Err(invalid("trials must be positive"));
    }
    let reference = min_energy_at_entropy(spectrum, s_target)?;
    let (work, per_state) = match spectrum.expand_to_spectrum() {
        Ok(flat) => (flat, true),
        Err(Error::TooManyStates { .. }) => (spectrum.clone(), false),
        Err(e) => return Err(e),
    };
    let worst = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let cand = entropy_matched_candidate(&work, s_target, &mut rng);
            cand.mean_energy(work.energies()) - reference.mean_energy
        })
        .reduce(|| f64::INFINITY, f64::min);
    Ok(ChallengeReport {
        worst_violation: worst,
        boltzmann_energy: reference.mean_energy,
        boltzmann_beta: reference.beta,
        trials,
        per_state,
    })
}

/// Random level masses with the requested entropy; level masses are spread
/// uniformly over each level's states.
fn entropy_matched_candidate<R: Rng>(
    spectrum: &FiniteSpectrum,
    s_target: f64,
    rng: &mut R,
) -> Distribution {
    let g = spectrum.degeneracies();
    let n = g.len();
    // exponent > 1 concentrates the Dirichlet(1) draw, < 1 flattens it
    let shape = [0.5, 1.0, 2.0, 4.0][rng.gen_range(0..4)];
    let raw: Vec<f64> = (0..n)
        .map(|_| (-(1.0 - rng.gen::<f64>()).ln()).powf(shape))
        .collect();
    let total: f64 = raw.iter().sum();
    let start: Vec<f64> = raw.iter().map(|x| x / total).collect();

    let states = spectrum.state_count() as f64;
    let uniform: Vec<f64> = g.iter().map(|&m| m as f64 / states).collect();
    let mut ground = vec![0.0; n];
    ground[0] = 1.0;

    let entropy_of = |mass: &[f64]| -> f64 {
        mass.iter()
            .zip(g)
            .filter(|(&w, _)| w > 0.0)
            .map(|(&w, &m)| -w * (w / m as f64).ln())
            .sum()
    };
    let gauge = EntropyGauge::new(s_target, states.ln());
    let raising = gauge.excess(
        || entropy_of(&start),
        || deficit_from_uniform(&start, &uniform, 1.0),
    ) < 0.0;
    let toward = if raising { &uniform } else { &ground };
    let mix = |t: f64| -> Vec<f64> {
        start
            .iter()
            .zip(toward)
            .map(|(&a, &b)| (1.0 - t) * a + t * b)
            .collect()
    };
    let excess = |t: f64| -> f64 {
        gauge.excess(
            || entropy_of(&mix(t)),
            || {
                if raising {
                    deficit_from_uniform(&start, &uniform, 1.0 - t)
                } else {
                    let m = mix(t);
                    let r: Vec<f64> = m.iter().zip(&uniform).map(|(&w, &u)| w / u - 1.0).collect();
                    r.iter()
                        .zip(&uniform)
                        .map(|(&r, &u)| u * divergence_term(r))
                        .sum()
                }
            },
        )
    };
    // S(mix(t)) is concave in t; lo stays on the start side of the crossing
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let x = excess(mid);
        let before_crossing = if raising { x < 0.0 } else { x > 0.0 };
        if before_crossing {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = if excess(lo).abs() < excess(hi).abs() {
        lo
    } else {
        hi
    };
    let mass = mix(t);
    Distribution {
        per_state: mass.iter().zip(g).map(|(&w, &m)| w / m as f64).collect(),
        multiplicity: g.to_vec(),
    }
}

/// Deficit of `u + scale (start − u)` from `u`, with `r` formed exactly.
fn deficit_from_uniform(start: &[f64], uniform: &[f64], scale: f64) -> f64 {
    start
        .iter()
        .zip(uniform)
        .map(|(&a, &u)| u * divergence_term(scale * (a - u) / u))
        .sum()
}

/// Rearrangement check: pairing descending probabilities with ascending
/// energies gives the lowest mean energy among all pairings.
///
/// Exhaustive over permutations for up to 8 states, otherwise a fixed-seed
/// sample of random permutations.
pub fn sorted_assignment_check(spectrum: &FiniteSpectrum, probabilities: &[f64]) -> Result<bool> {
    let energies = spectrum.expanded()?;
    if probabilities.len() != energies.len() {
        return Err(invalid(format!(
            "{} probabilities for {} states",
            probabilities.len(),
            energies.len()
        )));
    }
    Distribution::from_states(probabilities.to_vec())?;
    let mut desc = probabilities.to_vec();
    desc.sort_by(|a, b| b.total_cmp(a));
    let dot = |p: &[f64]| -> f64 { p.iter().zip(&energies).map(|(a, b)| a * b).sum() };
    let sorted = dot(&desc);
    let tol = 1e-12 * (1.0 + sorted.abs());
    if energies.len() <= 8 {
        Ok(desc
            .iter()
            .copied()
            .permutations(desc.len())
            .all(|perm| sorted <= dot(&perm) + tol))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SORTED_CHECK_SEED);
        let mut perm = desc.clone();
        Ok((0..SORTED_CHECK_SHUFFLES).all(|_| {
            perm.shuffle(&mut rng);
            sorted <= dot(&perm) + tol
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(e: &[f64]) -> FiniteSpectrum {
        FiniteSpectrum::from_energies(e).unwrap()
    }

    #[test]
    fn spectrum_validation() {
        assert!(FiniteSpectrum::from_energies(&[]).is_err());
        assert!(FiniteSpectrum::from_energies(&[0.0]).is_err());
        assert!(FiniteSpectrum::from_energies(&[0.5, 1.0]).is_err());
        assert!(FiniteSpectrum::from_energies(&[0.0, 2.0, 1.0]).is_err());
        assert!(FiniteSpectrum::new(vec![(0.0, 1), (1.0, 0)]).is_err());
        assert!(FiniteSpectrum::new(vec![(0.0, 2)]).is_ok());
    }

    #[test]
    fn boltzmann_examples() {
        let s = spec(&[0.0, 1.0]);
        let p = boltzmann(&s, 0.0).unwrap();
        assert_eq!(p.per_state(), &[0.5, 0.5]);
        let p = boltzmann(&s, 3f64.ln()).unwrap();
        assert!((p.per_state()[0] - 0.75).abs() < 1e-15);
        assert!((p.per_state()[1] - 0.25).abs() < 1e-15);
        let p = boltzmann(&s, f64::INFINITY).unwrap();
        assert_eq!(p.per_state(), &[1.0, 0.0]);
        let p = boltzmann(&spec(&[0.0, 0.3, 1.0, 2.0]), 1e6).unwrap();
        assert!((p.per_state()[0] - 1.0).abs() < 1e-14);
        assert!(boltzmann(&s, -1.0).is_err());
    }

    #[test]
    fn boltzmann_normalised_with_degeneracy() {
        let s = FiniteSpectrum::new(vec![(0.0, 1), (1.0, 3), (2.5, 1_000_000)]).unwrap();
        for b in [0.0, 0.1, 1.0, 10.0] {
            let p = boltzmann(&s, b).unwrap();
            assert!((p.total() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn endpoints() {
        let m = min_energy_at_entropy(&spec(&[0.0, 1.0]), 0.0).unwrap();
        assert_eq!(m.distribution.per_state(), &[1.0, 0.0]);
        assert_eq!(m.mean_energy, 0.0);
        let m = min_energy_at_entropy(&spec(&[0.0, 1.0, 2.0]), 3f64.ln()).unwrap();
        assert!((m.mean_energy - 1.0).abs() < 1e-14);
        assert!(min_energy_at_entropy(&spec(&[0.0, 1.0]), 1.0).is_err());
        assert!(min_energy_at_entropy(&spec(&[0.0, 1.0]), -0.1).is_err());
    }

    #[test]
    fn interior_entropy_is_hit() {
        let s = spec(&[0.0, 0.4, 1.0, 3.0]);
        let m = min_energy_at_entropy(&s, 0.9).unwrap();
        assert!((m.distribution.entropy() - 0.9).abs() <= ENTROPY_TOL);
    }

    #[test]
    fn challenge_two_level_is_pinned() {
        let r = challenge(&spec(&[0.0, 1.0]), 2f64.ln(), 100, 1).unwrap();
        assert!(r.worst_violation.abs() < 1e-9, "{r:?}");
        assert!(r.passed());
    }

    #[test]
    fn challenge_is_reproducible() {
        let s = spec(&[0.0, 0.5, 0.7, 2.0, 3.0]);
        let a = challenge(&s, 1.0, 500, 9).unwrap();
        let b = challenge(&s, 1.0, 500, 9).unwrap();
        assert_eq!(a, b);
        assert!(a.passed());
        assert!(a.per_state);
    }

    #[test]
    fn challenge_on_large_degenerate_spectrum() {
        let s = FiniteSpectrum::new(vec![(0.0, 1), (1.0, 50_000), (2.0, 90_000)]).unwrap();
        let r = challenge(&s, 5.0, 200, 3).unwrap();
        assert!(!r.per_state);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn sorted_assignment_examples() {
        let s = spec(&[0.0, 1.0, 2.0]);
        assert!(sorted_assignment_check(&s, &[0.2, 0.5, 0.3]).unwrap());
        let desc = [0.5, 0.3, 0.2];
        let u: f64 = desc.iter().zip([0.0, 1.0, 2.0]).map(|(p, e)| p * e).sum();
        assert!((u - 0.7).abs() < 1e-15);
        assert!(sorted_assignment_check(&s, &[1.0 / 3.0; 3]).unwrap());
        assert!(sorted_assignment_check(&spec(&[0.0, 1.0]), &[0.1, 0.9]).unwrap());
        assert!(sorted_assignment_check(&s, &[0.5, 0.5]).is_err());
        assert!(sorted_assignment_check(&s, &[0.5, 0.5, 0.5]).is_err());
    }

    #[test]
    fn sorted_assignment_sampled_path() {
        let e: Vec<f64> = (0..12).map(|i| i as f64 * 0.3).collect();
        let p: Vec<f64> = (1..=12).map(|i| i as f64 / 78.0).collect();
        assert!(sorted_assignment_check(&spec(&e), &p).unwrap());
    }

    #[test]
    fn optimal_hamiltonian_truncation() {
        let d = Dimension::new(3).unwrap();
        let s = FiniteSpectrum::optimal_hamiltonian(d, 2.0).unwrap();
        assert_eq!(s.degeneracies(), &[1, 3, 1]);
        assert_eq!(s.state_count(), 5);
    }
}
