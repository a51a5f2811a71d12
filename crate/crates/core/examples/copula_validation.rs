use copula_ot::copula::CopulaFn;
use copula_ot::{frechet_hoeffding_bounds, validate_copula};

fn main() -> copula_ot::Result<()> {
    for (label, dim) in [("M", 3), ("Pi", 2), ("W", 2), ("W", 3)] {
        let c = CopulaFn::builtin(label, dim)?;
        let report = validate_copula(&c, 8)?;
        print!("{label}^{dim}: ");
        for check in report.checks() {
            print!(
                "{:?}={} ",
                check.axiom,
                if check.passed { "ok" } else { "FAIL" }
            );
        }
        println!();
        if let Some(w) = &report.d_increasing.witness {
            println!(
                "  negative box {:?}..{:?}, volume {}",
                w.lower,
                w.upper.as_deref().unwrap_or(&[]),
                w.value
            );
        }
    }

    // Clayton with theta = 2, supplied by the caller.
    let clayton = CopulaFn::custom(2, |u| {
        if u.iter().any(|&x| x == 0.0) {
            return 0.0;
        }
        (u[0].powf(-2.0) + u[1].powf(-2.0) - 1.0).powf(-0.5)
    })?;
    println!(
        "Clayton(2) valid on the grid: {}",
        validate_copula(&clayton, 16)?.passed()
    );
    let b = frechet_hoeffding_bounds(&clayton, &[0.3, 0.6])?;
    println!(
        "W ≤ C ≤ M at (0.3, 0.6): {} ≤ {} ≤ {}",
        b.lower, b.value, b.upper
    );
    Ok(())
}
