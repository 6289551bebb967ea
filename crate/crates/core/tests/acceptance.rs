//! Acceptance gate: one test per criterion, each printing a single
//! `criterion N: PASS|FAIL` line. Run with `--nocapture` to see them.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use membound::bound::{
    invert_bound, kappa_for_query, product_bound, BoundQuery, Dof, ELECTRON_MASS,
};
use membound::cli::{scan_csv, DeviceScales};
use membound::devices::{growth_scan, DeviceKind, DeviceSpec};
use membound::inversion::{sum_cost, EntropyTarget};
use membound::lemma::{challenge, min_energy_at_entropy, sorted_assignment_check, FiniteSpectrum};
use membound::scenario::{estimate, Scenario};
use membound::spectrum::Dimension;
use membound::thermo::{s_n_exact, u_n_exact, z_n_log, Beta, Method};

fn verdict(n: u32, ok: bool, detail: &str) {
    println!(
        "criterion {n}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} failed: {detail}");
}

#[test]
fn criterion_01_steepest_descent_scan() {
    let start = Instant::now();
    let csv = scan_csv(10, 0.05, 0.5, 40, 1600).unwrap();
    let elapsed = start.elapsed();

    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.unwrap();
        let beta: f64 = rec[0].parse().unwrap();
        let err: f64 = rec[3].parse().unwrap();
        rows.push((beta, err, rec[4].to_string()));
    }
    let all_ok = rows.iter().all(|(_, _, s)| s == "ok");
    let within = rows.iter().all(|&(b, e, _)| e.abs() <= 1.5 * b);
    let worst = rows
        .iter()
        .map(|&(b, e, _)| e.abs() / b)
        .fold(0.0, f64::max);
    let (first, last) = (rows[0].1.abs(), rows[rows.len() - 1].1.abs());
    let ok =
        rows.len() == 40 && all_ok && within && first < last && elapsed < Duration::from_secs(5);
    verdict(
        1,
        ok,
        &format!(
            "rows={} max|err|/beta={worst:.4} err(0.05)={first:.3e} err(0.5)={last:.3e} time={elapsed:.2?}",
            rows.len()
        ),
    );
}

#[test]
fn criterion_02_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst_fd = 0.0f64;
    let mut worst_id = 0.0f64;
    for _ in 0..1000 {
        let b: f64 = 5.0 * (1.0 - rng.gen::<f64>());
        let h = 1e-5 * b;
        let fd =
            -(z_n_log(Beta::new(b + h).unwrap()) - z_n_log(Beta::new(b - h).unwrap())) / (2.0 * h);
        let u = u_n_exact(Beta::new(b).unwrap());
        worst_fd = worst_fd.max((fd - u).abs() / u);
    }
    for i in 0..=1000 {
        let b = 0.01 * 1000f64.powf(i as f64 / 1000.0);
        let beta = Beta::new(b).unwrap();
        let u = u_n_exact(beta);
        worst_id = worst_id.max((s_n_exact(u) - (b * u + z_n_log(beta))).abs());
    }
    verdict(
        2,
        worst_fd <= 1e-8 && worst_id <= 1e-10,
        &format!("fd rel={worst_fd:.2e} identity abs={worst_id:.2e}"),
    );
}

fn random_spectrum(rng: &mut ChaCha8Rng) -> FiniteSpectrum {
    let levels = rng.gen_range(2..=8);
    let mut e: Vec<f64> = (1..levels).map(|_| rng.gen_range(0.01..=5.0)).collect();
    e.push(0.0);
    e.sort_by(f64::total_cmp);
    e.dedup();
    FiniteSpectrum::from_energies(&e).unwrap()
}

fn lemma_suite() -> Vec<FiniteSpectrum> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    (0..20).map(|_| random_spectrum(&mut rng)).collect()
}

const ENTROPY_FRACTIONS: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

#[test]
fn criterion_03_lemma_oracle() {
    let start = Instant::now();
    let mut worst = f64::INFINITY;
    let mut runs = 0;
    for (i, spec) in lemma_suite().iter().enumerate() {
        for (j, f) in ENTROPY_FRACTIONS.iter().enumerate() {
            let s = f * spec.max_entropy();
            let r = challenge(spec, s, 10_000, (100 * i + j) as u64).unwrap();
            worst = worst.min(r.worst_violation);
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        3,
        worst >= -1e-9 && elapsed < Duration::from_secs(60),
        &format!("runs={runs} worst_violation={worst:.3e} time={elapsed:.2?}"),
    );
}

#[test]
fn criterion_04_rearrangement() {
    let mut checked = 0;
    let mut ok = true;
    for spec in lemma_suite() {
        assert!(spec.state_count() <= 8);
        for f in ENTROPY_FRACTIONS {
            let m = min_energy_at_entropy(&spec, f * spec.max_entropy()).unwrap();
            let p = m.distribution.states().unwrap();
            ok &= sorted_assignment_check(&spec, &p).unwrap();
            checked += 1;
        }
    }
    verdict(4, ok, &format!("exhaustive checks={checked}"));
}

#[test]
fn criterion_05_lemma_asymptotics() {
    let d = Dimension::new(50).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for x in [2.0, 3.0, 4.0, 5.0] {
        let c = sum_cost(EntropyTarget::new(50.0 * x, d).unwrap(), Method::Direct).unwrap();
        let r = c.ratio();
        ok &= (1.0..=1.05).contains(&r);
        parts.push(format!("S/d={x}: ratio={r:.4}"));
    }
    verdict(5, ok, &parts.join(", "));
}

#[test]
fn criterion_06_bound_properties() {
    let m = ELECTRON_MASS;
    let q = |s: f64, d: f64, m: f64| BoundQuery::new(s, Dof::new(d).unwrap(), m).unwrap();

    let zero = product_bound(&q(0.0, 10.0, m)).product_bound == 0.0;

    let mut monotone = true;
    let mut prev = 0.0;
    for i in 1..=500 {
        let p = product_bound(&q(0.5 * i as f64, 10.0, m)).product_bound;
        monotone &= p > prev;
        prev = p;
    }

    let mut scale_err = 0.0f64;
    for s in [1.0, 10.0, 100.0] {
        let a = product_bound(&q(s, 7.0, m)).product_bound;
        let b = product_bound(&q(s, 7.0, 2.0 * m)).product_bound;
        scale_err = scale_err.max((a / b - 2.0).abs() / 2.0);
    }

    let mut trip_err = 0.0f64;
    for i in 0..10 {
        let s = 10.0 * 100f64.powf(i as f64 / 9.0);
        for j in 0..10 {
            let d = 3.0 * (1000.0f64 / 3.0).powf(j as f64 / 9.0);
            let p = product_bound(&q(s, d, m)).product_bound;
            let c = invert_bound(p, 1.0, m, Dof::new(d).unwrap()).unwrap();
            trip_err = trip_err.max((c.nats - s).abs() / s);
        }
    }

    verdict(
        6,
        zero && monotone && scale_err <= 1e-15 && trip_err <= 1e-10,
        &format!(
            "zero={zero} monotone={monotone} mass_scaling_rel={scale_err:.1e} round_trip_rel={trip_err:.1e}"
        ),
    );
}

#[test]
fn criterion_07_kappa_elimination() {
    let query = BoundQuery::new(60.0, Dof::new(20.0).unwrap(), ELECTRON_MASS).unwrap();
    let reference = product_bound(&query).product_bound;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for _ in 0..1000 {
        let r2 = 10f64.powf(rng.gen_range(-30.0..10.0));
        let b = kappa_for_query(&query, r2).unwrap().product_bound;
        lo = lo.min(b);
        hi = hi.max(b);
    }
    let spread = (hi - lo) / reference;
    let offset = ((hi - reference).abs()).max((lo - reference).abs()) / reference;
    verdict(
        7,
        spread < 1e-12 && offset < 1e-12,
        &format!("spread={spread:.1e} offset_from_product_bound={offset:.1e}"),
    );
}

#[test]
fn criterion_08_devices() {
    let s = [0.5, 1.0, 1.5, 2.0];
    let base = DeviceScales::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for (kind, scale) in [
        (DeviceKind::Box, base.box_width),
        (DeviceKind::Oscillator, base.omega),
        (DeviceKind::Hydrogen, base.coulomb),
    ] {
        let spec = DeviceSpec::new(kind, base.mass, scale, base.level_cap).unwrap();
        let rows = growth_scan(&spec, &s).unwrap();
        let increasing = rows.windows(2).all(|w| w[1].product > w[0].product);
        let min_ratio = rows
            .iter()
            .map(|c| {
                let q =
                    BoundQuery::new(c.entropy, Dof::new(kind.dof()).unwrap(), base.mass).unwrap();
                c.product / product_bound(&q).product_bound
            })
            .fold(f64::INFINITY, f64::min);
        ok &= increasing && min_ratio >= 0.1;
        parts.push(format!(
            "{}: increasing={increasing} min(product/bound)={min_ratio:.3}",
            kind.name()
        ));
    }
    for (kind, scales) in [
        (DeviceKind::Oscillator, [1e13, 1e15, 1e17]),
        (DeviceKind::Box, [1e-10, 1e-9, 1e-8]),
    ] {
        let mut spread = 0.0f64;
        for &x in &s {
            let p: Vec<f64> = scales
                .iter()
                .map(|&sc| {
                    let spec = DeviceSpec::new(kind, base.mass, sc, base.level_cap).unwrap();
                    growth_scan(&spec, &[x]).unwrap()[0].product
                })
                .collect();
            for v in &p[1..] {
                spread = spread.max((v - p[0]).abs() / p[0]);
            }
        }
        ok &= spread <= 1e-12;
        parts.push(format!("{} scale spread={spread:.1e}", kind.name()));
    }
    verdict(8, ok, &parts.join(", "));
}

#[test]
fn criterion_09_conclusion_estimate() {
    let e = estimate(&Scenario::default_scenario()).unwrap();
    let bpd = e.capacity.bits_per_dof;
    verdict(
        9,
        (10.0..=40.0).contains(&bpd),
        &format!(
            "bits_per_dof={bpd:.3} total_bits={:.3e} reference/computed={:.3e} (ratio informational)",
            e.capacity.bits,
            e.total_ratio()
        ),
    );
}

fn run_twice(dir: &Path, name: &str, args: &[&str]) -> bool {
    let bin = env!("CARGO_BIN_EXE_membound");
    let mut outputs = Vec::new();
    for k in 0..2 {
        let path = dir.join(format!("{name}-{k}.out"));
        let st = Command::new(bin)
            .args(args)
            .arg("--output")
            .arg(&path)
            .status()
            .unwrap();
        let stdout = Command::new(bin).args(args).output().unwrap();
        assert!(st.success() && stdout.status.success(), "{name} failed");
        outputs.push((std::fs::read(&path).unwrap(), stdout.stdout));
    }
    outputs[0] == outputs[1] && outputs[0].0 == outputs[0].1
}

#[test]
fn criterion_10_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let spectrum = dir.path().join("spectrum.txt");
    std::fs::write(&spectrum, "0\n0.7,2\n1.9\n3.2 3\n").unwrap();
    let spectrum = spectrum.to_str().unwrap();
    let cases: [(&str, Vec<&str>); 6] = [
        (
            "bound",
            vec![
                "bound",
                "--entropy",
                "100",
                "--dof",
                "100",
                "--mass",
                "9.1093837015e-31",
            ],
        ),
        ("scan", vec!["scan", "--steps", "12"]),
        (
            "verify-file",
            vec![
                "verify-lemma",
                "--spectrum-file",
                spectrum,
                "--entropy",
                "1.2",
                "--trials",
                "3000",
            ],
        ),
        (
            "verify-hopt",
            vec![
                "verify-lemma",
                "--hopt-dof",
                "5",
                "--cap",
                "12",
                "--entropy-per-dof",
                "1.0",
                "--trials",
                "2000",
                "--seed",
                "9",
            ],
        ),
        ("devices", vec!["devices"]),
        ("estimate", vec!["estimate"]),
    ];
    let mut ok = true;
    let mut bad = Vec::new();
    for (name, args) in &cases {
        if !run_twice(dir.path(), name, args) {
            ok = false;
            bad.push(*name);
        }
    }
    verdict(
        10,
        ok,
        &format!("commands={} nondeterministic={bad:?}", cases.len()),
    );
}
