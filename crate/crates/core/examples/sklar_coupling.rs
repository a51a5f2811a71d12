//! Joining two margins with a copula and reading off the discrete coupling.

use copula_ot::{
    comonotone_joint_2d, coupling_from_joint, pi_copula, sklar_join, w_lower, DiscreteCoupling,
    Distribution1D,
};

fn show(name: &str, c: &DiscreteCoupling) {
    println!("{name} (cost |x-y|^2 = {}):", c.cost(2.0, 2.0));
    for row in c.mass() {
        println!("  {row:?}");
    }
}

fn main() -> copula_ot::Result<()> {
    let f = Distribution1D::uniform_atoms(&[0.0, 1.0, 2.0])?;
    let g = Distribution1D::discrete([(0.0, 0.5), (3.0, 0.5)])?;

    show("M", &coupling_from_joint(&comonotone_joint_2d(&f, &g))?);
    show(
        "Pi",
        &coupling_from_joint(&sklar_join(&pi_copula(2)?, vec![f.clone(), g.clone()])?)?,
    );
    show(
        "W",
        &coupling_from_joint(&sklar_join(&w_lower(2)?, vec![f, g])?)?,
    );
    Ok(())
}
