//! Small log-space helpers shared by the summation and oracle code.

/// Streaming `ln Σ exp(t_i)` with a running maximum.
///
/// Terms are folded in the order they are pushed, so the result is
/// deterministic for a fixed input sequence.
#[derive(Debug, Clone, Copy)]
pub struct LogSumExp {
    max: f64,
    scaled: f64,
}

impl Default for LogSumExp {
    fn default() -> Self {
        Self::new()
    }
}

impl LogSumExp {
    pub fn new() -> Self {
        Self {
            max: f64::NEG_INFINITY,
            scaled: 0.0,
        }
    }

    pub fn push(&mut self, t: f64) {
        if t == f64::NEG_INFINITY {
            return;
        }
        if t > self.max {
            self.scaled = self.scaled * (self.max - t).exp() + 1.0;
            self.max = t;
        } else {
            self.scaled += (t - self.max).exp();
        }
    }

    pub fn value(&self) -> f64 {
        if self.max == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else {
            self.max + self.scaled.ln()
        }
    }
}

pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let mut acc = LogSumExp::new();
    for &x in xs {
        acc.push(x);
    }
    acc.value()
}

/// `ln C(n, k)` for `k ≤ n`.
///
/// Small `min(k, n-k)` is evaluated as a product of exact ratios; larger
/// arguments fall back to log-gamma differences.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    if k == 0 {
        return 0.0;
    }
    if k <= 32 {
        let base = (n - k) as f64;
        let mut prod = 1.0_f64;
        for i in 1..=k {
            prod *= (base + i as f64) / i as f64;
        }
        return prod.ln();
    }
    libm::lgamma(n as f64 + 1.0) - libm::lgamma(k as f64 + 1.0) - libm::lgamma((n - k) as f64 + 1.0)
}

/// Log-spaced grid with exact endpoints.
pub fn log_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    debug_assert!(steps >= 2 && lo > 0.0 && hi > lo);
    let (a, b) = (lo.ln(), hi.ln());
    (0..steps)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == steps - 1 {
                hi
            } else {
                (a + (b - a) * i as f64 / (steps - 1) as f64).exp()
            }
        })
        .collect()
}
