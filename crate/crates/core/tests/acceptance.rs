//! Acceptance report: one PASS/FAIL line per criterion, with the measured
//! figures underneath. Run with `cargo test --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use fracflow::analytic::{shear, shear_newtonian, shear_sgf, velocity, velocity_field, velocity_newtonian, velocity_sgf};
use fracflow::fd::{gl_derivative, simulate, Grid};
use fracflow::oracle::{stehfest_invert, velocity_via_inversion};
use fracflow::quadrature::GaussLegendre;
use fracflow::special::{bessel_j1_zeros, g_function, gamma, j0, j1, j1_prime, j2, GFunctionParams, ModeBasis};
use fracflow::{FlowConfig, FluidParams};

struct Check {
    label: String,
    ok: bool,
}

struct Report {
    checks: Vec<Check>,
}

impl Report {
    fn new() -> Self {
        Report { checks: Vec::new() }
    }

    /// Records `measured <= bound` under `label`.
    fn bound(&mut self, label: &str, measured: f64, bound: f64) {
        self.checks.push(Check {
            label: format!("{label}: {measured:.3e} (limit {bound:.0e})"),
            ok: measured <= bound,
        });
    }

    fn holds(&mut self, label: &str, ok: bool) {
        self.checks.push(Check { label: label.to_owned(), ok });
    }

    fn runtime(&mut self, elapsed: Duration, budget: Duration) {
        self.checks.push(Check {
            label: format!("runtime {:.2} s (limit {} s)", elapsed.as_secs_f64(), budget.as_secs()),
            ok: elapsed <= budget,
        });
    }

    fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn setup(alpha: f64, beta: f64) -> (FluidParams, FlowConfig, ModeBasis) {
    let fp = FluidParams::new(1.0, alpha, 1.0, beta).unwrap();
    let fc = FlowConfig::new(1.0, 1.0).unwrap();
    let basis = bessel_j1_zeros(fc.radius, fc.n_modes).unwrap();
    (fp, fc, basis)
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

/// Deterministic points spread over (lo, hi) by the golden-ratio sequence.
fn spread(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let phi = 0.5 * (5.0_f64.sqrt() - 1.0);
    (1..=n).map(|k| lo + (hi - lo) * (k as f64 * phi).fract()).collect()
}

fn g(a: f64, b: f64, c: f64, d: f64, t: f64) -> f64 {
    g_function(&GFunctionParams::new(a, b, c, d, t), 1e-15).unwrap().value
}

fn boundary(rep: &mut Report) {
    let (fp, fc, basis) = setup(0.5, 0.5);
    let err = max_of((0..20).map(|k| {
        let t = 2.0 * k as f64 / 19.0;
        let v = velocity(&fp, &fc, &basis, 1.0, t).unwrap().value;
        let scale = fc.radius * fc.omega * t;
        if scale == 0.0 {
            if v == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (v - scale).abs() / scale
        }
    }));
    rep.bound("max |w(R,t) - R Omega t| / (R Omega t), 20 times in [0, 2]", err, 1e-12);
}

fn initial_rest(rep: &mut Report) {
    let mut worst: f64 = 0.0;
    for beta in [0.3, 0.5, 0.8] {
        let (fp, fc, basis) = setup(0.5, beta);
        for k in 0..=10 {
            let r = k as f64 / 10.0;
            worst = worst.max(velocity(&fp, &fc, &basis, r, 0.0).unwrap().value.abs());
            worst = worst.max(shear(&fp, &fc, &basis, r, 0.0).unwrap().value.abs());
        }
    }
    rep.holds(&format!("velocity and stress at t = 0, beta in {{0.3, 0.5, 0.8}}, 11 radii: max |value| = {worst:e}"), worst == 0.0);
}

fn newtonian(rep: &mut Report) {
    let (fp, fc, basis) = setup(0.0, 0.7);
    let (radii, times) = ([0.2, 0.4, 0.6, 0.8], [0.1, 0.5, 1.0, 2.0]);
    let mut identical = true;
    let mut devs = Vec::new();
    for r in radii {
        for t in times {
            let exact = velocity_newtonian(&fp, &fc, &basis, r, t).unwrap().value;
            identical &= velocity(&fp, &fc, &basis, r, t).unwrap().value == exact;
            identical &= shear(&fp, &fc, &basis, r, t).unwrap().value == shear_newtonian(&fp, &fc, &basis, r, t).unwrap().value;
            devs.push((r, t, rel(velocity_via_inversion(&fp, &fc, &basis, r, t).unwrap().value, exact)));
        }
    }
    rep.holds("general velocity and stress at alpha = 0 equal the Newtonian forms bit for bit", identical);
    let (r, t, worst) = devs.iter().copied().fold((0.0, 0.0, 0.0), |m, d| if d.2 > m.2 { d } else { m });
    rep.bound(&format!("Newtonian series vs Stehfest (N = {}), r in {radii:?}, t in {times:?}; worst at r = {r}, t = {t}", fc.stehfest_n), worst, 1e-5);
}

fn unit_order(rep: &mut Report) {
    let times = [0.1, 0.5, 1.0, 2.0];
    let mut gap: f64 = 0.0;
    for alpha in [0.2, 0.5, 1.0] {
        let (near, fc, basis) = setup(alpha, 0.999);
        let one = near.with_beta(1.0).unwrap();
        for r in [0.25, 0.5, 0.75] {
            for t in times {
                let general = velocity(&near, &fc, &basis, r, t).unwrap().value;
                gap = gap.max(rel(general, velocity_sgf(&one, &fc, &basis, r, t).unwrap().value));
            }
        }
    }
    rep.bound(&format!("beta = 0.999 series vs beta = 1 closed form, alpha in {{0.2, 0.5, 1}}, t in {times:?}"), gap, 1e-3);

    let (fp, fc, basis) = setup(0.0, 1.0);
    let mut reduction: f64 = 0.0;
    for r in [0.25, 0.5, 0.75] {
        for t in times {
            reduction = reduction.max(rel(velocity_sgf(&fp, &fc, &basis, r, t).unwrap().value, velocity_newtonian(&fp, &fc, &basis, r, t).unwrap().value));
            reduction = reduction.max(rel(shear_sgf(&fp, &fc, &basis, r, t).unwrap().value, shear_newtonian(&fp, &fc, &basis, r, t).unwrap().value));
        }
    }
    rep.bound("second grade closed forms at alpha = 0 vs Newtonian forms", reduction, 1e-12);

    let mut power: f64 = 0.0;
    let mut sum: f64 = 0.0;
    for x in [0.5_f64, 1.0, 2.0] {
        for s in [0.1_f64, 1.0] {
            for k in 0..8 {
                let expect = s.powi(k) / gamma(k as f64 + 1.0).unwrap() / (1.0 + x).powi(k + 1);
                power = power.max(rel(g(0.0, -(k as f64) - 1.0, k as f64 + 1.0, -x, s), expect));
            }
            for c in [0.5_f64, 1.0] {
                let series: f64 = (0..60).map(|k| (-c).powi(k) * g(0.0, -(k as f64) - 1.0, k as f64 + 1.0, -x, s)).sum();
                sum = sum.max(rel(series, (-c * s / (1.0 + x)).exp() / (1.0 + x)));
            }
        }
    }
    rep.bound("G_{0,-k-1,k+1}(-x, s) = s^k / (k! (1+x)^(k+1))", power, 1e-9);
    rep.bound("sum_k (-c)^k G_{0,-k-1,k+1}(-x, s) = exp(-c s / (1+x)) / (1+x)", sum, 1e-9);
    let mut expo: f64 = 0.0;
    for i in 0..=40 {
        for j in 0..=40 {
            let (d, t) = (-10.0 * i as f64 / 40.0, 5.0 * j as f64 / 40.0);
            expo = expo.max(rel(g(1.0, 0.0, 1.0, d, t), (d * t).exp()));
        }
    }
    rep.bound("G_{1,0,1}(d, t) = exp(d t), d in [-10, 0], t in [0, 5]", expo, 1e-10);
}

/// (r, t, velocity) from 25-digit Talbot inversion of the exact transform, 50 modes.
const TALBOT: [(f64, f64, f64); 9] = [
    (0.25, 0.2, 0.035972871353748694),
    (0.25, 0.5, 0.10643366271203838),
    (0.25, 1.0, 0.2286113430050395),
    (0.5, 0.2, 0.07726472930985125),
    (0.5, 0.5, 0.22015276583075094),
    (0.5, 1.0, 0.465709794360843),
    (0.75, 0.2, 0.1296848837739965),
    (0.75, 0.5, 0.34868119399684444),
    (0.75, 1.0, 0.7198983840391107),
];

fn three_stacks(rep: &mut Report) {
    let (fp, fc, basis) = setup(0.5, 0.5);
    let field = simulate(&fp, &fc, &Grid::until(201, 1e-5, 1.0, fc.radius).unwrap()).unwrap();
    let (mut oracle, mut fd, mut talbot): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for (r, t, reference) in TALBOT {
        let series = velocity(&fp, &fc, &basis, r, t).unwrap().value;
        oracle = oracle.max(rel(series, velocity_via_inversion(&fp, &fc, &basis, r, t).unwrap().value));
        fd = fd.max(rel(series, field.sample(r, t).unwrap()));
        talbot = talbot.max(rel(series, reference));
    }
    rep.bound("series vs Stehfest oracle, r in {0.25, 0.5, 0.75}, t in {0.2, 0.5, 1}", oracle, 1e-3);
    rep.bound("series vs FD (nr = 201, dt = 1e-5)", fd, 2e-2);
    rep.bound("series vs 25-digit Talbot reference", talbot, 1e-3);
}

/// Velocity of the fractional case on r +- h and t = 0, dt, ..., 1.
struct Samples {
    radii: [f64; 3],
    h: f64,
    dt: f64,
    /// `w[i][k][n]`: radius i, offset k in {-h, 0, +h}, time n.
    w: Vec<[Vec<f64>; 3]>,
}

fn samples(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis) -> Samples {
    let (radii, h, dt) = ([0.25, 0.5, 0.75], 1e-2, 1e-3);
    let r_samples: Vec<f64> = radii.iter().flat_map(|&r| [r - h, r, r + h]).collect();
    let t_samples: Vec<f64> = (0..=1000).map(|n| n as f64 * dt).collect();
    let f = velocity_field(fp, fc, basis, &r_samples, &t_samples).unwrap();
    let w = (0..3).map(|i| [f.values[3 * i].clone(), f.values[3 * i + 1].clone(), f.values[3 * i + 2].clone()]).collect();
    Samples { radii, h, dt, w }
}

fn constitutive(rep: &mut Report, fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, s: &Samples) {
    let mut worst: f64 = 0.0;
    for (i, &r) in s.radii.iter().enumerate() {
        let [lo, mid, hi] = &s.w[i];
        let strain: Vec<f64> = (0..mid.len()).map(|n| (hi[n] - lo[n]) / (2.0 * s.h) - mid[n] / r).collect();
        let memory = gl_derivative(&strain, fp.beta(), s.dt);
        for t in [0.1, 0.2, 0.5, 1.0] {
            let n = (t / s.dt).round() as usize;
            let rebuilt = fp.mu() * strain[n] + fp.alpha1() * memory[n];
            worst = worst.max(rel(rebuilt, shear(fp, fc, basis, r, t).unwrap().value));
        }
    }
    rep.bound("(mu + alpha1 D^beta)(d/dr - 1/r) w vs stress, r in {0.25, 0.5, 0.75}, t in {0.1, 0.2, 0.5, 1}", worst, 1e-2);
}

fn residual(rep: &mut Report, fp: &FluidParams, s: &Samples) {
    let (mut worst, mut rate): (f64, f64) = (0.0, 0.0);
    for (i, &r) in s.radii.iter().enumerate() {
        let [lo, mid, hi] = &s.w[i];
        let h = s.h;
        let lw: Vec<f64> = (0..mid.len())
            .map(|n| (hi[n] - 2.0 * mid[n] + lo[n]) / (h * h) + (hi[n] - lo[n]) / (2.0 * h * r) - mid[n] / (r * r))
            .collect();
        let memory = gl_derivative(&lw, fp.beta(), s.dt);
        for n in 200..mid.len() - 1 {
            let dwdt = (mid[n + 1] - mid[n - 1]) / (2.0 * s.dt);
            rate = rate.max(dwdt.abs());
            worst = worst.max((dwdt - fp.nu() * lw[n] - fp.alpha() * memory[n]).abs());
        }
    }
    rep.bound("max |dw/dt - (nu + alpha D^beta) L w| / max |dw/dt|, t in [0.2, 1]", worst / rate, 2e-2);
}

fn special(rep: &mut Report) {
    let recurrence = max_of(spread(100, 0.1, 50.0).into_iter().map(|x| (2.0 / x * j1(x) - j0(x) - j2(x)).abs()));
    rep.bound("|(2/x) J1 - J0 - J2|, 100 points in (0.1, 50)", recurrence, 1e-11);
    let derivative = max_of(spread(100, 0.01, 80.0).into_iter().map(|x| (x * j1_prime(x) - j1(x) + x * j2(x)).abs()));
    rep.bound("|x J1'(x) - J1(x) + x J2(x)|, 100 points in (0.01, 80)", derivative, 1e-10);

    let basis = bessel_j1_zeros(1.0, 5).unwrap();
    let rule = GaussLegendre::new(20);
    let moment = max_of(basis.zeros().iter().zip(basis.weights()).map(|(&z, &w)| {
        let integral: f64 = (0..16).map(|k| rule.integrate(|r| r * r * j1(r * z), k as f64 / 16.0, (k + 1) as f64 / 16.0)).sum();
        (integral - w / z).abs()
    }));
    rep.bound("|int_0^1 r^2 J1(r r_n) dr - J2(r_n) / r_n|, n = 1..5", moment, 1e-8);

    let pair = max_of([0.5, 1.0, 2.0].map(|t| {
        let inverted = stehfest_invert(|q| q.powf(-0.5) / (q.sqrt() + 1.0), t, 14).unwrap();
        rel(inverted, g(0.5, -0.5, 1.0, -1.0, t))
    }));
    rep.bound("Stehfest of q^-0.5 / (q^0.5 + 1) vs G_{0.5,-0.5,1}(-1, t), t in {0.5, 1, 2}", pair, 1e-4);

    let ramp = stehfest_invert(|q| 1.0 / (q * q), 2.0, 14).unwrap();
    rep.bound("Stehfest N = 14 of 1/q^2 at t = 2, relative error", rel(ramp, 2.0), 1e-8);
    let decay = stehfest_invert(|q| 1.0 / (q + 1.0), 1.0, 14).unwrap();
    rep.bound("Stehfest N = 14 of 1/(q+1) at t = 1, absolute error", (decay - (-1.0_f64).exp()).abs(), 1e-6);
}

fn determinism(rep: &mut Report) {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(
        &cfg,
        "nu=1\nalpha=0.5\nrho=1\nbeta=0.5\nR=1\nOmega=1\nr_samples=0,0.25,0.5,0.75,1\nt_samples=0,0.2,0.5,1\ncompare=oracle,fd\nfd_nr=101\nfd_dt=1e-4\n",
    )
    .unwrap();
    for sub in ["profile", "compare"] {
        let run = || Command::new(env!("CARGO_BIN_EXE_fracflow")).args([sub, cfg.to_str().unwrap()]).output().unwrap();
        let (a, b) = (run(), run());
        rep.holds(
            &format!("`{sub}` twice: {} bytes, identical = {}", a.stdout.len(), a.stdout == b.stdout),
            a.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout,
        );
    }
}

fn main() {
    let criteria: Vec<(&str, u64, Box<dyn Fn(&mut Report)>)> = vec![
        ("boundary condition at the wall", 1, Box::new(boundary)),
        ("fluid at rest initially", 1, Box::new(initial_rest)),
        ("Newtonian reduction", 10, Box::new(newtonian)),
        ("unit-order reduction chain", 30, Box::new(unit_order)),
        ("series, oracle and FD agree", 300, Box::new(three_stacks)),
        (
            "constitutive consistency",
            60,
            Box::new(|rep: &mut Report| {
                let (fp, fc, basis) = setup(0.5, 0.5);
                let s = samples(&fp, &fc, &basis);
                constitutive(rep, &fp, &fc, &basis, &s);
            }),
        ),
        (
            "governing equation residual",
            60,
            Box::new(|rep: &mut Report| {
                let (fp, fc, basis) = setup(0.5, 0.5);
                residual(rep, &fp, &samples(&fp, &fc, &basis));
            }),
        ),
        ("special functions and Stehfest pairs", 10, Box::new(special)),
        ("byte-identical CSV across runs", 600, Box::new(determinism)),
    ];
    let mut passed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let mut rep = Report::new();
        let start = Instant::now();
        run(&mut rep);
        rep.runtime(start.elapsed(), Duration::from_secs(*budget));
        let ok = rep.ok();
        passed += ok as usize;
        println!("criterion {}: {} {name}", i + 1, if ok { "PASS" } else { "FAIL" });
        for c in &rep.checks {
            println!("    [{}] {}", if c.ok { "ok" } else { "FAIL" }, c.label);
        }
    }
    println!("acceptance: {passed}/{} criteria pass", criteria.len());
}
