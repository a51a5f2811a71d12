//! W_p between measures on the line, by every available route.

use copula_ot::{oracle_distance_1d, w1_cdf_area, wasserstein_1d, Distribution1D, OracleLimits};

fn main() -> copula_ot::Result<()> {
    let f = Distribution1D::discrete([(0.0, 0.2), (1.0, 0.5), (4.0, 0.3)])?;
    let g = Distribution1D::uniform_atoms(&[-1.0, 2.0, 2.5, 3.0])?;

    for p in [1.0, 2.0, 3.0] {
        let q = wasserstein_1d(&f, &g, p)?;
        let lp = oracle_distance_1d(&f, &g, p, OracleLimits::default())?;
        println!("p = {p}: quantile {:.12}  oracle {:.12}", q.value, lp.value);
    }
    println!("W_1 as CDF area: {:.12}", w1_cdf_area(&f, &g)?.value);

    // Continuous laws go through adaptive quadrature.
    let n0 = Distribution1D::normal(0.0, 1.0)?;
    let n1 = Distribution1D::normal(2.0, 3.0)?;
    let r = wasserstein_1d(&n0, &n1, 2.0)?;
    println!(
        "W_2(N(0,1), N(2,9)) = {:.9} (closed form {:.9}, error bound {:.1e})",
        r.value,
        (4.0f64 + 4.0).sqrt(),
        r.error_bound
    );
    Ok(())
}
