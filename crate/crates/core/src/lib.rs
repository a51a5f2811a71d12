//! Wasserstein distances on `R` and `R^d` through the comonotonicity copula.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`dist_core`] | measures on R: CDF, generalized inverse, moments, tail diagnostics |
//! | [`copula`] | `M`, `W`, `Π` and custom copulas, grid validation, Sklar composition |
//! | [`wasserstein`] | quantile integral, CDF area, comonotone expectation, dall'Aglio functional, shared-copula sums |
//! | [`oracle`] | exact transportation LP with dual certificate, vertex enumeration |
//! | [`cli`] | the `copula-ot` command line |
//!
//! ```
//! use copula_ot::{wasserstein_1d, w1_cdf_area, Distribution1D};
//!
//! let f = Distribution1D::uniform_atoms(&[0.0, 1.0]).unwrap();
//! let g = Distribution1D::uniform_atoms(&[0.0, 2.0]).unwrap();
//! assert_eq!(wasserstein_1d(&f, &g, 1.0).unwrap().value, 0.5);
//! assert_eq!(w1_cdf_area(&f, &g).unwrap().value, 0.5);
//! ```

pub mod cli;
pub mod copula;
pub mod dist_core;
mod error;
mod extended;
pub mod oracle;
pub mod quadrature;
pub mod wasserstein;

pub use copula::{
    comonotone_joint_2d, coupling_from_joint, frechet_hoeffding_bounds, m_copula, pi_copula,
    sklar_join, validate_copula, w_lower, CopulaFn, CopulaLabel, JointCDF, ValidationReport,
};
pub use dist_core::{
    comonotone_pushforward, DiscreteMeasure, Distribution1D, DistributionKind, TailRow,
};
pub use error::{Error, Result};
pub use extended::ExtendedReal;
pub use oracle::{
    enumerate_extreme_couplings, marginalize, monotone_plan_1d, solve_exact, solve_exact_with,
    DiscreteCoupling, OracleLimits, OracleSolution, PointMeasure, Side, TransportInstance,
};
pub use wasserstein::{
    comonotone_expectation, dall_aglio_functional, minimality_of_m, norm_equivalence_bounds,
    oracle_distance_1d, quantile_vector_integral, w1_cdf_area, wasserstein_1d,
    wasserstein_shared_copula, Bracket, DistanceReport, Method,
};
