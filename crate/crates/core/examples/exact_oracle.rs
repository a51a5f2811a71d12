use copula_ot::{
    solve_exact, solve_exact_with, Error, OracleLimits, PointMeasure, TransportInstance,
};

fn main() -> copula_ot::Result<()> {
    let mu = PointMeasure::new(
        vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]],
        vec![0.25, 0.25, 0.5],
    )?;
    let nu = PointMeasure::new(vec![vec![1.0, 1.0], vec![-1.0, 0.5]], vec![0.5, 0.5])?;
    let inst = TransportInstance::new(mu, nu, 2.0, 2.0)?;
    let sol = solve_exact(&inst)?;

    println!("optimal cost {}", sol.value);
    for row in sol.plan.mass() {
        println!("  {row:?}");
    }
    let cert = &sol.certificate;
    println!("u = {:?}", cert.row_potentials);
    println!("v = {:?}", cert.col_potentials);
    println!(
        "dual violation {:.1e}, slackness gap {:.1e}, duality gap {:.1e}, {} pivots",
        cert.max_dual_violation, cert.max_slackness_gap, cert.duality_gap, cert.pivots
    );

    let tight = OracleLimits {
        max_rows: 2,
        max_cols: 2,
    };
    match solve_exact_with(&inst, tight) {
        Err(Error::Capacity(msg)) => println!("guarded: {msg}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
