//! Distances on R^d between laws that share a copula.

use copula_ot::{
    norm_equivalence_bounds, quantile_vector_integral, solve_exact, wasserstein_shared_copula,
    Distribution1D, PointMeasure, TransportInstance,
};

fn main() -> copula_ot::Result<()> {
    let f = vec![
        Distribution1D::uniform_atoms(&[0.0, 1.0])?,
        Distribution1D::uniform_atoms(&[0.0, 1.0])?,
    ];
    let g = vec![
        Distribution1D::uniform_atoms(&[0.0, 2.0])?,
        Distribution1D::uniform_atoms(&[0.0, 2.0])?,
    ];

    let exact = wasserstein_shared_copula(&f, &g, 2.0, 2.0)?;
    println!(
        "per coordinate {:?}, W_2^2 = {}",
        exact.components, exact.value_pth_power
    );
    println!(
        "single integral over u: {}",
        quantile_vector_integral(&f, &g, 2.0)?
    );

    // Both laws are comonotone: mass 1/2 at (0,0) and at (1,1) or (2,2).
    let joint = |s: f64| PointMeasure::new(vec![vec![0.0, 0.0], vec![s, s]], vec![0.5, 0.5]);
    let lp = solve_exact(&TransportInstance::new(joint(1.0)?, joint(2.0)?, 2.0, 2.0)?)?;
    println!("LP on the joints: {}", lp.value);

    let bracket = norm_equivalence_bounds(&f, &g, 2.0, 1.0)?;
    let lp1 = solve_exact(&TransportInstance::new(joint(1.0)?, joint(2.0)?, 2.0, 1.0)?)?;
    println!(
        "l1 ground norm: {} ≤ {} ≤ {}",
        bracket.lower, lp1.value, bracket.upper
    );
    Ok(())
}
