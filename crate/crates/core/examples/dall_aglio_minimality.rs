//! The dall'Aglio functional over every extreme coupling of two small margins.
//! The comonotone plan attains the minimum, which is also the LP optimum.

use copula_ot::{
    dall_aglio_functional, enumerate_extreme_couplings, monotone_plan_1d, solve_exact,
    Distribution1D, PointMeasure, TransportInstance,
};

fn main() -> copula_ot::Result<()> {
    let p = 2.0;
    let f = Distribution1D::discrete([(-1.0, 0.3), (0.5, 0.3), (2.0, 0.4)])?;
    let g = Distribution1D::discrete([(0.0, 0.6), (1.0, 0.1), (4.0, 0.3)])?;
    let (a, b) = (f.as_discrete().unwrap(), g.as_discrete().unwrap());

    let m = dall_aglio_functional(&monotone_plan_1d(a, b), p)?;
    let vertices = enumerate_extreme_couplings(
        &PointMeasure::from_discrete(a),
        &PointMeasure::from_discrete(b),
    )?;
    println!("{} extreme couplings", vertices.len());
    for (k, h) in vertices.iter().enumerate() {
        let v = dall_aglio_functional(h, p)?;
        println!(
            "  H{k:<2} I = {v:>10.6}{}",
            if (v - m).abs() < 1e-12 {
                "  <- comonotone"
            } else {
                ""
            }
        );
    }
    let lp = solve_exact(&TransportInstance::from_1d(a, b, p)?)?;
    println!("I(M) = {m:.12}, LP optimum = {:.12}", lp.value);
    Ok(())
}
