//! Acceptance suite. Each criterion prints one PASS or FAIL line; the process
//! exits nonzero if any criterion fails.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use common::{comonotone_points, direct_cost, random_discrete, random_measure, rel_gap, seeded};
use copula_ot::cli::{run, EXIT_OK};
use copula_ot::{
    comonotone_expectation, dall_aglio_functional, enumerate_extreme_couplings,
    frechet_hoeffding_bounds, m_copula, minimality_of_m, norm_equivalence_bounds, pi_copula,
    solve_exact, validate_copula, w1_cdf_area, w_lower, wasserstein_1d, wasserstein_shared_copula,
    DiscreteCoupling, Distribution1D, PointMeasure, TransportInstance,
};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn quantile_matches_oracle() -> Outcome {
    let mut rng = seeded(1);
    let mut worst: f64 = 0.0;
    for k in 0..200 {
        let f = random_measure(&mut rng, 12);
        let g = random_measure(&mut rng, 12);
        for p in [1.0, 1.5, 2.0, 3.0] {
            let q = wasserstein_1d(&f, &g, p).unwrap().value_pth_power;
            let inst =
                TransportInstance::from_1d(f.as_discrete().unwrap(), g.as_discrete().unwrap(), p)
                    .unwrap();
            let lp = solve_exact(&inst).unwrap().value;
            let gap = rel_gap(q, lp);
            worst = worst.max(gap);
            ensure(gap <= 1e-9, || {
                format!("pair {k}, p = {p}: quantile {q} vs oracle {lp}")
            })?;
        }
    }
    Ok(format!("800 cases, worst relative gap {worst:.2e}"))
}

fn two_w1_representations() -> Outcome {
    let mut rng = seeded(1);
    let mut worst: f64 = 0.0;
    for k in 0..200 {
        let f = random_measure(&mut rng, 12);
        let g = random_measure(&mut rng, 12);
        let a = wasserstein_1d(&f, &g, 1.0).unwrap().value;
        let b = w1_cdf_area(&f, &g).unwrap().value;
        let gap = rel_gap(a, b);
        worst = worst.max(gap);
        ensure(gap <= 1e-10, || {
            format!("pair {k}: quantile {a} vs cdf area {b}")
        })?;
    }
    Ok(format!("200 pairs, worst relative gap {worst:.2e}"))
}

fn dall_aglio_identity() -> Outcome {
    let mut rng = seeded(3);
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    while checked < 100 {
        let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let f = random_discrete(&mut rng, m, -10.0, 10.0);
        let g = random_discrete(&mut rng, n, -10.0, 10.0);
        let (a, b) = (f.as_discrete().unwrap(), g.as_discrete().unwrap());
        let vertices = enumerate_extreme_couplings(
            &PointMeasure::from_discrete(a),
            &PointMeasure::from_discrete(b),
        )
        .unwrap();
        let pick =
            |rng: &mut rand_chacha::ChaCha8Rng| vertices[rng.gen_range(0..vertices.len())].clone();
        let coupling: DiscreteCoupling = if checked % 2 == 0 {
            pick(&mut rng)
        } else {
            let (h1, h2) = (pick(&mut rng), pick(&mut rng));
            h1.mix(&h2, rng.gen::<f64>()).unwrap()
        };
        for p in [1.5, 2.0, 3.0] {
            let functional = dall_aglio_functional(&coupling, p).unwrap();
            let direct = direct_cost(coupling.mass(), a.atoms(), b.atoms(), p);
            let gap = rel_gap(functional, direct);
            worst = worst.max(gap);
            ensure(gap <= 1e-9, || {
                format!("coupling {checked}, p = {p}: I(H) {functional} vs cost {direct}")
            })?;
        }
        checked += 1;
    }
    Ok(format!(
        "100 couplings × 3 orders, worst relative gap {worst:.2e}"
    ))
}

fn comonotone_plan_is_minimal() -> Outcome {
    let mut rng = seeded(4);
    let mut pairs = 0;
    let mut vertices_seen = 0;
    let mut worst_slack = f64::INFINITY;
    for m in 1..=4 {
        for n in 1..=4 {
            for trial in 0..12 {
                // Every third pair uses equal weights, which makes the vertex set degenerate.
                let (f, g) = if trial % 3 == 0 {
                    let xs: Vec<f64> = (0..m).map(|_| rng.gen_range(-10.0..=10.0)).collect();
                    let ys: Vec<f64> = (0..n).map(|_| rng.gen_range(-10.0..=10.0)).collect();
                    (
                        Distribution1D::uniform_atoms(&xs).unwrap(),
                        Distribution1D::uniform_atoms(&ys).unwrap(),
                    )
                } else {
                    (
                        random_discrete(&mut rng, m, -10.0, 10.0),
                        random_discrete(&mut rng, n, -10.0, 10.0),
                    )
                };
                let (a, b) = (f.as_discrete().unwrap(), g.as_discrete().unwrap());
                let vertices = enumerate_extreme_couplings(
                    &PointMeasure::from_discrete(a),
                    &PointMeasure::from_discrete(b),
                )
                .unwrap();
                vertices_seen += vertices.len();
                for p in [1.5, 2.0, 3.0] {
                    let report = minimality_of_m(&f, &g, p, &vertices).unwrap();
                    let slack = report
                        .trial_values
                        .iter()
                        .map(|v| v - report.comonotone_value)
                        .fold(f64::INFINITY, f64::min);
                    worst_slack = worst_slack.min(slack);
                    ensure(slack >= -1e-9, || {
                        format!("{m}×{n} pair, p = {p}: slack {slack}")
                    })?;
                    let lp = solve_exact(&TransportInstance::from_1d(a, b, p).unwrap())
                        .unwrap()
                        .value;
                    ensure(rel_gap(report.comonotone_value, lp) <= 1e-9, || {
                        format!(
                            "{m}×{n} pair, p = {p}: I(M) {} vs oracle {lp}",
                            report.comonotone_value
                        )
                    })?;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} pairs, {vertices_seen} extreme couplings, worst slack {worst_slack:.2e}"
    ))
}

fn coordinate_additivity() -> Outcome {
    let mut rng = seeded(5);
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for d in [2usize, 3] {
        for _ in 0..25 {
            let fm: Vec<Distribution1D> = (0..d).map(|_| random_measure(&mut rng, 5)).collect();
            let gm: Vec<Distribution1D> = (0..d).map(|_| random_measure(&mut rng, 5)).collect();
            let (pf, pg) = (comonotone_points(&fm), comonotone_points(&gm));
            for p in [1.0, 2.0] {
                let sum: f64 = fm
                    .iter()
                    .zip(&gm)
                    .map(|(a, b)| wasserstein_1d(a, b, p).unwrap().value_pth_power)
                    .sum();
                let lp =
                    solve_exact(&TransportInstance::new(pf.clone(), pg.clone(), p, p).unwrap())
                        .unwrap()
                        .value;
                let lib = wasserstein_shared_copula(&fm, &gm, p, p)
                    .unwrap()
                    .value_pth_power;
                let gap = rel_gap(lp, sum).max(rel_gap(lib, sum));
                worst = worst.max(gap);
                ensure(gap <= 1e-9, || {
                    format!("d = {d}, p = {p}: oracle {lp}, coordinate sum {sum}, library {lib}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases, worst relative gap {worst:.2e}"))
}

fn frechet_sandwich() -> Outcome {
    let mut points = 0;
    for d in [2usize, 3, 4] {
        for c in [m_copula(d).unwrap(), pi_copula(d).unwrap()] {
            let steps = 8usize;
            let total = steps.pow(d as u32);
            for idx in 0..total {
                let u: Vec<f64> = (0..d)
                    .map(|k| ((idx / steps.pow(k as u32)) % steps) as f64 / (steps - 1) as f64)
                    .collect();
                let b = frechet_hoeffding_bounds(&c, &u).unwrap();
                let lower = (u.iter().sum::<f64>() - (d as f64 - 1.0)).max(0.0);
                let upper = u.iter().copied().fold(1.0, f64::min);
                let v = c.eval(&u);
                ensure(b.holds(), || format!("{} at {u:?}: {b:?}", c.label()))?;
                ensure(lower <= v + 1e-12 && v <= upper + 1e-12, || {
                    format!("{} at {u:?}: {v} outside [{lower}, {upper}]", c.label())
                })?;
                points += 1;
            }
        }
    }
    let w3 = validate_copula(&w_lower(3).unwrap(), 8).unwrap();
    ensure(
        !w3.d_increasing.passed && w3.d_increasing.witness.is_some(),
        || "W^3 passed the d-increasing check".into(),
    )?;
    let box_ = w3.d_increasing.witness.unwrap();
    Ok(format!(
        "{points} grid points within bounds; W^3 fails d-increasing at {:?}..{:?} (volume {})",
        box_.lower,
        box_.upper.unwrap_or_default(),
        box_.value
    ))
}

fn comonotone_expectation_is_wp() -> Outcome {
    let mut rng = seeded(7);
    let mut worst: f64 = 0.0;
    for k in 0..50 {
        let f = random_measure(&mut rng, 12);
        let g = random_measure(&mut rng, 12);
        let p = [1.0, 1.5, 2.0, 3.0][k % 4];
        let e = comonotone_expectation(|x, y| (x - y).abs().powf(p), &f, &g).unwrap();
        let w = wasserstein_1d(&f, &g, p).unwrap().value_pth_power;
        let gap = rel_gap(e, w);
        worst = worst.max(gap);
        ensure(gap <= 1e-10, || {
            format!("pair {k}, p = {p}: expectation {e} vs W_p^p {w}")
        })?;
    }
    Ok(format!("50 pairs, worst relative gap {worst:.2e}"))
}

fn norm_equivalence_brackets() -> Outcome {
    let mut rng = seeded(8);
    let mut tightest: f64 = f64::INFINITY;
    for k in 0..50 {
        let fm: Vec<Distribution1D> = (0..2).map(|_| random_measure(&mut rng, 5)).collect();
        let gm: Vec<Distribution1D> = (0..2).map(|_| random_measure(&mut rng, 5)).collect();
        let s: f64 = fm
            .iter()
            .zip(&gm)
            .map(|(a, b)| wasserstein_1d(a, b, 2.0).unwrap().value_pth_power)
            .sum();
        let lp = solve_exact(
            &TransportInstance::new(comonotone_points(&fm), comonotone_points(&gm), 2.0, 1.0)
                .unwrap(),
        )
        .unwrap()
        .value;
        let (lo, hi) = (2f64.powf(-0.5) * s, 2.0 * s);
        let bracket = norm_equivalence_bounds(&fm, &gm, 2.0, 1.0).unwrap();
        ensure(
            rel_gap(bracket.lower, lo) <= 1e-12 && rel_gap(bracket.upper, hi) <= 1e-12,
            || format!("instance {k}: library bracket {bracket:?} vs [{lo}, {hi}]"),
        )?;
        ensure(lo <= lp && lp <= hi, || {
            format!("instance {k}: oracle {lp} outside [{lo}, {hi}]")
        })?;
        tightest = tightest.min((lp - lo).min(hi - lp));
    }
    Ok(format!(
        "50 instances inside the bracket, smallest margin {tightest:.3e}"
    ))
}

fn metric_axioms() -> Outcome {
    let mut rng = seeded(9);
    let mut worst_excess = f64::NEG_INFINITY;
    for k in 0..200 {
        let f = random_measure(&mut rng, 12);
        let g = random_measure(&mut rng, 12);
        let h = random_measure(&mut rng, 12);
        for p in [1.0, 2.0] {
            let w = |a: &Distribution1D, b: &Distribution1D| wasserstein_1d(a, b, p).unwrap().value;
            let (fg, gf, gh, fh) = (w(&f, &g), w(&g, &f), w(&g, &h), w(&f, &h));
            ensure(fg == gf, || {
                format!("triple {k}, p = {p}: W(f,g) = {fg} but W(g,f) = {gf}")
            })?;
            ensure(fg >= 0.0 && gh >= 0.0 && fh >= 0.0, || {
                format!("triple {k}: negative distance")
            })?;
            ensure(w(&f, &f) == 0.0, || format!("triple {k}: W(f,f) ≠ 0"))?;
            let excess = fh - (fg + gh);
            worst_excess = worst_excess.max(excess);
            ensure(excess <= 1e-9, || {
                format!("triple {k}, p = {p}: triangle violated by {excess}")
            })?;
        }
    }
    Ok(format!(
        "200 triples × 2 orders, largest triangle excess {worst_excess:.2e}"
    ))
}

fn cli_json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = vec!["copula-ot"];
    full.extend_from_slice(args);
    let out = run(full, None);
    let doc = serde_json::from_str(&out.stdout).unwrap_or(serde_json::Value::Null);
    (out.code, doc)
}

fn closed_forms() -> Outcome {
    let f = Distribution1D::uniform_atoms(&[0.0, 1.0]).unwrap();
    let g = Distribution1D::uniform_atoms(&[0.0, 2.0]).unwrap();
    let w1 = wasserstein_1d(&f, &g, 1.0).unwrap().value;
    let lp = solve_exact(
        &TransportInstance::from_1d(f.as_discrete().unwrap(), g.as_discrete().unwrap(), 1.0)
            .unwrap(),
    )
    .unwrap()
    .value;
    ensure(
        (w1 - 0.5).abs() <= 1e-12 && (lp - 0.5).abs() <= 1e-12,
        || format!("W_1 = {w1}, oracle {lp}"),
    )?;

    let a = Distribution1D::uniform_atoms(&[0.0, 1.0, 2.0]).unwrap();
    let b = Distribution1D::uniform_atoms(&[1.0, 2.0, 3.0]).unwrap();
    let w2sq = wasserstein_1d(&a, &b, 2.0).unwrap().value_pth_power;
    ensure((w2sq - 1.0).abs() <= 1e-12, || format!("W_2^2 = {w2sq}"))?;

    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        path.to_string_lossy().into_owned()
    };
    let (f01, f02) = (write("a.csv", "x\n0\n1\n"), write("b.csv", "0\n2\n"));
    let (l012, l123) = (write("c.csv", "0\n1\n2\n"), write("d.csv", "1\n2\n3\n"));

    let (code, doc) = cli_json(&["dist1d", &f01, &f02, "--p", "1"]);
    ensure(code == EXIT_OK, || format!("dist1d exited {code}"))?;
    let data = &doc["data"];
    for method in ["quantile_integral", "cdf_area", "oracle"] {
        let v = data["methods"][method]["w_p"].as_f64().unwrap_or(f64::NAN);
        ensure((v - 0.5).abs() <= 1e-12, || {
            format!("dist1d {method} reported {v}")
        })?;
    }

    let (code, doc) = cli_json(&["dist1d", &l012, &l123, "--p", "2"]);
    ensure(code == EXIT_OK, || format!("dist1d exited {code}"))?;
    let v = doc["data"]["w_p_pow_p"].as_f64().unwrap_or(f64::NAN);
    ensure((v - 1.0).abs() <= 1e-12, || {
        format!("dist1d reported W_2^2 = {v}")
    })?;
    Ok("W_1 = 1/2 and W_2^2 = 1 in the library, the oracle and the CLI".into())
}

fn cli_is_deterministic() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        path.to_string_lossy().into_owned()
    };
    let mut rng = seeded(11);
    let sample = |rng: &mut rand_chacha::ChaCha8Rng, n: usize, cols: usize| -> String {
        (0..n)
            .map(|_| {
                (0..cols)
                    .map(|_| format!("{}", rng.gen_range(-5.0..5.0f64)))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .map(|l| l + "\n")
            .collect()
    };
    let a = write("a.csv", &sample(&mut rng, 40, 1));
    let b = write("b.csv", &sample(&mut rng, 30, 1));
    let c = write("c.csv", &sample(&mut rng, 20, 2));
    let d = write("d.csv", &sample(&mut rng, 20, 2));
    let small_a = write("sa.csv", "0\n1\n3\n");
    let small_b = write("sb.csv", "0.5\n2\n2.5\n");

    let runs: Vec<Vec<&str>> = vec![
        vec!["dist1d", &a, &b, "--p", "1.5"],
        vec!["dist1d", &a, "normal:0,1", "--p", "2"],
        vec!["distnd", &c, &d, "--p", "2", "--assume-shared-copula"],
        vec![
            "distnd",
            &c,
            &d,
            "--p",
            "2",
            "--q",
            "1",
            "--assume-shared-copula",
        ],
        vec!["check-copula", "W", "--dim", "3", "--resolution", "4"],
        vec!["oracle-compare", &small_a, &small_b, "--p", "2"],
        vec!["diagnose-tails", &a, "--r", "1", "--grid", "0.5,1,2,4"],
    ];
    let exe = env!("CARGO_BIN_EXE_copula-ot");
    for format in ["json", "csv", "plain"] {
        for args in &runs {
            let once = || {
                Command::new(exe)
                    .args(args)
                    .args(["--format", format])
                    .output()
                    .unwrap()
            };
            let (x, y) = (once(), once());
            ensure(x.status.code() == y.status.code(), || {
                format!("{args:?}: exit codes differ")
            })?;
            ensure(x.stdout == y.stdout, || {
                format!("{args:?} --format {format}: output differs")
            })?;
            if format == "json" {
                let px: serde_json::Value =
                    serde_json::from_slice(&x.stdout).map_err(|e| format!("{args:?}: {e}"))?;
                let py: serde_json::Value = serde_json::from_slice(&y.stdout).unwrap();
                ensure(px["data"].to_string() == py["data"].to_string(), || {
                    format!("{args:?}: data differs")
                })?;
            }
        }
    }
    Ok(format!(
        "{} invocations × 3 formats byte-identical across runs",
        runs.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        (
            "quantile integral equals the exact transport optimum",
            quantile_matches_oracle,
        ),
        (
            "W_1 quantile integral equals the CDF area",
            two_w1_representations,
        ),
        (
            "dall'Aglio functional equals the direct plan cost",
            dall_aglio_identity,
        ),
        (
            "comonotone plan minimizes the functional over extreme couplings",
            comonotone_plan_is_minimal,
        ),
        (
            "coordinate additivity under the shared M-copula",
            coordinate_additivity,
        ),
        (
            "Fréchet–Hoeffding sandwich and W^3 counterexample",
            frechet_sandwich,
        ),
        (
            "comonotone expectation equals W_p^p",
            comonotone_expectation_is_wp,
        ),
        (
            "oracle W_{2,1}^2 lies in the norm-equivalence bracket",
            norm_equivalence_brackets,
        ),
        ("metric axioms", metric_axioms),
        ("closed forms in library and CLI", closed_forms),
        ("CLI output is deterministic", cli_is_deterministic),
    ];
    let mut failures = 0;
    let mut stdout = std::io::stdout();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        let line = match &result {
            Ok(detail) => format!("PASS  {:>2}  {name}: {detail} ({secs:.2}s)", k + 1),
            Err(why) => {
                failures += 1;
                format!("FAIL  {:>2}  {name}: {why} ({secs:.2}s)", k + 1)
            }
        };
        writeln!(stdout, "{line}").unwrap();
    }
    writeln!(
        stdout,
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    )
    .unwrap();
    if failures > 0 {
        std::process::exit(1);
    }
}
