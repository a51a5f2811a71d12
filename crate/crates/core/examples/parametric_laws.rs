use copula_ot::{comonotone_expectation, comonotone_pushforward, wasserstein_1d, Distribution1D};

fn main() -> copula_ot::Result<()> {
    let u = Distribution1D::uniform(0.0, 1.0)?;
    let e = Distribution1D::exponential(2.0)?;

    println!("E|X|^2, X ~ U(0,1): {:.12}", u.p_moment(2.0)?);
    println!(
        "E|X|^3, X ~ Exp(2): {:.9} (exact {})",
        e.p_moment(3.0)?,
        6.0 / 8.0
    );

    // Laplace(0, 1) with a user-supplied quantile and an analytic tail bound.
    let laplace = Distribution1D::parametric(
        "laplace",
        |x| {
            if x < 0.0 {
                0.5 * x.exp()
            } else {
                1.0 - 0.5 * (-x).exp()
            }
        },
        |u| {
            if u < 0.5 {
                (2.0 * u).ln()
            } else {
                -(2.0 * (1.0 - u)).ln()
            }
        },
        f64::INFINITY,
    )?
    .with_tail_bound(|p, eps| {
        // ∫_0^eps |ln(2u)|^p du ≤ eps (1 + |ln(2 eps)|)^p, twice for both ends.
        2.0 * eps * (1.0 + (2.0 * eps).ln().abs()).powf(p)
    });
    println!("E|X|^2, Laplace: {:.9} (exact 2)", laplace.p_moment(2.0)?);

    let w = wasserstein_1d(&u, &e, 2.0)?;
    let direct = comonotone_expectation(|x, y| (x - y).powi(2), &u, &e)?;
    println!(
        "W_2^2(U(0,1), Exp(2)) = {:.9}, comonotone E(X-Y)^2 = {:.9}",
        w.value_pth_power, direct
    );

    println!("first comonotone pairs:");
    for (x, y) in comonotone_pushforward(&u, &e, 5)? {
        println!("  ({x:.4}, {y:.4})");
    }
    Ok(())
}
