//! p-Wasserstein distances through the comonotone coupling.
//!
//! On the line the optimal coupling of `F` and `G` is `min(F(x), G(y))`, the
//! law of `(F⁻¹(U), G⁻¹(U))`, so `W_p^p` is a single integral over `u ∈ (0, 1)`.
//! The same integral appears as an expectation along the comonotone path, as
//! the area between CDFs when `p = 1`, and as the minimum of dall'Aglio's
//! double-integral functional. In `R^d`, measures that share a copula have
//! coordinate-additive `W_p^p` for the `ℓ_p` ground norm.
//!
//! Every report carries both `W_p` and `W_p^p`.

use serde::Serialize;

use crate::dist_core::{comonotone_ladder, DiscreteMeasure, Distribution1D, QUANTILE_TIE_TOL};
use crate::error::{Error, Result};
use crate::oracle::{
    self, monotone_plan_1d, DiscreteCoupling, OracleLimits, PointMeasure, TransportInstance,
    MARGIN_TOL,
};
use crate::quadrature::{self, QuadOptions, QuadResult, ENDPOINT_EPS};

/// Slack allowed when checking that the comonotone plan minimizes `I(H)`.
pub const MINIMALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    QuantileIntegral,
    CdfArea,
    DallAglio,
    SharedCopulaSum,
    OracleLp,
}

/// Sandwich `lower ≤ W_{p,q}^p ≤ upper` around the shared-copula integral `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bracket {
    pub lower: f64,
    pub upper: f64,
    pub s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceReport {
    /// `W_p`.
    pub value: f64,
    /// `W_p^p`.
    pub value_pth_power: f64,
    pub p: f64,
    pub q: f64,
    pub method: Method,
    /// Numerical error estimate on `value_pth_power`; 0 for exact discrete paths.
    pub error_bound: f64,
    /// False when the value is only bracketed (`q ≠ p` in several dimensions);
    /// `value_pth_power` then holds the shared-copula integral `s` of the bracket.
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Bracket>,
    /// Per-coordinate `W_p^p` for shared-copula sums.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<f64>,
}

impl DistanceReport {
    fn from_pth_power(pth: f64, p: f64, q: f64, method: Method, error_bound: f64) -> Self {
        let pth = pth.max(0.0);
        DistanceReport {
            value: pth.powf(1.0 / p),
            value_pth_power: pth,
            p,
            q,
            method,
            error_bound,
            exact: true,
            bracket: None,
            components: Vec::new(),
        }
    }
}

fn check_order(p: f64) -> Result<()> {
    if p >= 1.0 && p.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Wasserstein order p = {p} must be a finite real ≥ 1"
        )))
    }
}

fn check_membership(d: &Distribution1D, p: f64, which: &str) -> Result<()> {
    if d.moment_order() >= p {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{which} is only asserted to have moments up to order {}, not {p}",
            d.moment_order()
        )))
    }
}

fn breakpoints_of(ds: &[&Distribution1D]) -> Vec<f64> {
    ds.iter()
        .filter_map(|d| d.as_discrete())
        .flat_map(|m| m.cumulative().iter().copied())
        .collect()
}

/// `∫ h(u) du` over `(eps, 1 − eps)` with breakpoints at every discrete jump,
/// plus an estimate of what the clipped ends carry. The estimate is added to
/// the value; the error covers the quadrature error and the clipped ends,
/// using `analytic_tails` when available.
fn quantile_space_integral<H>(
    h: H,
    parts: &[&Distribution1D],
    analytic_tails: Option<f64>,
) -> Result<QuadResult>
where
    H: Fn(f64) -> f64,
{
    let body = quadrature::integrate(
        &h,
        ENDPOINT_EPS,
        1.0 - ENDPOINT_EPS,
        &breakpoints_of(parts),
        QuadOptions::default(),
    )?;
    let estimate = match quadrature::unit_interval_tail_estimate(&h, ENDPOINT_EPS) {
        Ok(t) => t,
        Err(_) if analytic_tails.is_some() => 0.0,
        Err(e) => return Err(e),
    };
    let bound = analytic_tails.unwrap_or(0.0).max(estimate.abs());
    Ok(QuadResult {
        value: body.value + estimate,
        error: body.error + bound,
        evals: body.evals,
    })
}

fn pair_tail_bound(f: &Distribution1D, g: &Distribution1D, p: f64) -> Option<f64> {
    // |a − b|^p ≤ 2^(p−1) (|a|^p + |b|^p)
    Some(
        2f64.powf(p - 1.0)
            * (f.analytic_tail_bound(p, ENDPOINT_EPS)? + g.analytic_tail_bound(p, ENDPOINT_EPS)?),
    )
}

/// `W_p^p = ∫₀¹ |F⁻¹(u) − G⁻¹(u)|^p du`.
///
/// Discrete pairs are summed exactly over the merged cumulative-weight
/// ladders; anything else goes through adaptive quadrature.
pub fn wasserstein_1d(f: &Distribution1D, g: &Distribution1D, p: f64) -> Result<DistanceReport> {
    check_order(p)?;
    check_membership(f, p, "first distribution")?;
    check_membership(g, p, "second distribution")?;
    if let (Some(a), Some(b)) = (f.as_discrete(), g.as_discrete()) {
        let pth = discrete_quantile_integral(a, b, p);
        return Ok(DistanceReport::from_pth_power(
            pth,
            p,
            p,
            Method::QuantileIntegral,
            0.0,
        ));
    }
    let integrand = |u: f64| {
        let x = f.quantile_unchecked(u).to_f64();
        let y = g.quantile_unchecked(u).to_f64();
        (x - y).abs().powf(p)
    };
    let r = quantile_space_integral(integrand, &[f, g], pair_tail_bound(f, g, p))?;
    Ok(DistanceReport::from_pth_power(
        r.value,
        p,
        p,
        Method::QuantileIntegral,
        r.error,
    ))
}

pub(crate) fn discrete_quantile_integral(a: &DiscreteMeasure, b: &DiscreteMeasure, p: f64) -> f64 {
    comonotone_ladder(a, b)
        .iter()
        .map(|s| s.mass * (a.atoms()[s.row] - b.atoms()[s.col]).abs().powf(p))
        .sum()
}

/// `W_1 = ∫ |F(x) − G(x)| dx`.
pub fn w1_cdf_area(f: &Distribution1D, g: &Distribution1D) -> Result<DistanceReport> {
    check_membership(f, 1.0, "first distribution")?;
    check_membership(g, 1.0, "second distribution")?;
    if let (Some(a), Some(b)) = (f.as_discrete(), g.as_discrete()) {
        let mut grid: Vec<f64> = a.atoms().iter().chain(b.atoms()).copied().collect();
        grid.sort_by(f64::total_cmp);
        grid.dedup();
        let area = grid
            .windows(2)
            .map(|w| (a.cdf(w[0]) - b.cdf(w[0])).abs() * (w[1] - w[0]))
            .sum();
        return Ok(DistanceReport::from_pth_power(
            area,
            1.0,
            1.0,
            Method::CdfArea,
            0.0,
        ));
    }

    let q = |d: &Distribution1D, u: f64| d.quantile_unchecked(u).to_f64();
    let lo = q(f, ENDPOINT_EPS).min(q(g, ENDPOINT_EPS));
    let hi = q(f, 1.0 - ENDPOINT_EPS).max(q(g, 1.0 - ENDPOINT_EPS));
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::Divergence(
            "quantiles near 0 or 1 are not finite".into(),
        ));
    }
    let atoms: Vec<f64> = [f, g]
        .iter()
        .filter_map(|d| d.as_discrete())
        .flat_map(|m| m.atoms().iter().copied())
        .collect();
    let body = quadrature::integrate(
        |x| (f.cdf(x) - g.cdf(x)).abs(),
        lo,
        hi,
        &atoms,
        QuadOptions::default(),
    )?;
    // Mass outside [lo, hi] is bounded by the quantile tails of both measures.
    let mut tails = 2.0 * ENDPOINT_EPS * (lo.abs() + hi.abs());
    for d in [f, g] {
        tails += match d.analytic_tail_bound(1.0, ENDPOINT_EPS) {
            Some(t) => t,
            None => quadrature::unit_interval_tails(|u| q(d, u).abs(), ENDPOINT_EPS)?,
        };
    }
    Ok(DistanceReport::from_pth_power(
        body.value,
        1.0,
        1.0,
        Method::CdfArea,
        body.error + tails,
    ))
}

/// `E[g(X, Y)]` for the comonotone pair `(X, Y) = (F⁻¹(U), H⁻¹(U))`.
pub fn comonotone_expectation<G>(g_fn: G, f: &Distribution1D, h: &Distribution1D) -> Result<f64>
where
    G: Fn(f64, f64) -> f64,
{
    if let (Some(a), Some(b)) = (f.as_discrete(), h.as_discrete()) {
        return Ok(comonotone_ladder(a, b)
            .iter()
            .map(|s| s.mass * g_fn(a.atoms()[s.row], b.atoms()[s.col]))
            .sum());
    }
    let integrand = |u: f64| {
        g_fn(
            f.quantile_unchecked(u).to_f64(),
            h.quantile_unchecked(u).to_f64(),
        )
    };
    Ok(quantile_space_integral(integrand, &[f, h], None)?.value)
}

/// Sorted, duplicate-free coordinates of both supports and the plan's mass on that grid.
struct PlanGrid {
    z: Vec<f64>,
    /// `cum[k][l] = H(z_k, z_l)`.
    cum: Vec<Vec<f64>>,
}

impl PlanGrid {
    fn new(coupling: &DiscreteCoupling) -> Result<Self> {
        let xs = coupling.mu().atoms_1d()?;
        let ys = coupling.nu().atoms_1d()?;
        let mut z: Vec<f64> = xs.iter().chain(&ys).copied().collect();
        z.sort_by(f64::total_cmp);
        z.dedup();
        let pos = |v: f64| z.partition_point(|&t| t < v);
        let k = z.len();
        let mut cum = vec![vec![0.0; k]; k];
        for (i, row) in coupling.mass().iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                cum[pos(xs[i])][pos(ys[j])] += m;
            }
        }
        for a in 0..k {
            for b in 0..k {
                let mut v = cum[a][b];
                if a > 0 {
                    v += cum[a - 1][b];
                }
                if b > 0 {
                    v += cum[a][b - 1];
                }
                if a > 0 && b > 0 {
                    v -= cum[a - 1][b - 1];
                }
                cum[a][b] = v;
            }
        }
        Ok(PlanGrid { z, cum })
    }
}

/// `-Δ φ` over the rectangle `[x0, x1] × [y0, y1]` for `φ(x, y) = ((x − y)_+)^p`,
/// which equals `p(p − 1) ∫∫ (x − y)_+^{p−2} dx dy` over the rectangle.
fn positive_part_cell(x0: f64, x1: f64, y0: f64, y1: f64, p: f64) -> f64 {
    let phi = |t: f64| if t > 0.0 { t.powf(p) } else { 0.0 };
    -(phi(x1 - y1) - phi(x0 - y1) - phi(x1 - y0) + phi(x0 - y0))
}

/// dall'Aglio's functional `I(H) = ∫∫ |y − x|^p dH` evaluated through the
/// double-integral identity
///
/// `I(H) = p(p−1) ∫∫_{x>y} [G(y) − H(x,y)] (x−y)^{p−2} + p(p−1) ∫∫_{y>x} [F(x) − H(x,y)] (y−x)^{p−2}`.
///
/// For discrete margins both brackets are constant on the cells of the merged
/// atom grid, and each cell integral has a closed form, so the result is exact
/// up to rounding. Requires `p > 1`.
pub fn dall_aglio_functional(coupling: &DiscreteCoupling, p: f64) -> Result<f64> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::Domain(format!(
            "the double-integral identity needs a finite p > 1, got {p}"
        )));
    }
    let rows = coupling.row_sums();
    let cols = coupling.col_sums();
    let row_ok = rows
        .iter()
        .zip(coupling.mu().weights())
        .all(|(a, b)| (a - b).abs() <= MARGIN_TOL);
    let col_ok = cols
        .iter()
        .zip(coupling.nu().weights())
        .all(|(a, b)| (a - b).abs() <= MARGIN_TOL);
    if !(row_ok && col_ok) {
        return Err(Error::Domain(
            "coupling margins do not match its declared measures".into(),
        ));
    }

    let grid = PlanGrid::new(coupling)?;
    let z = &grid.z;
    let k = z.len();
    if k < 2 {
        return Ok(0.0);
    }
    let last = k - 1;
    let mut total = 0.0;
    // Cells beyond the last grid point contribute nothing: there F = 1 and G = 1.
    for a in 0..last {
        let f_x = grid.cum[a][last];
        for b in 0..last {
            let h = grid.cum[a][b];
            let g_y = grid.cum[last][b];
            let (x0, x1, y0, y1) = (z[a], z[a + 1], z[b], z[b + 1]);
            if x1 > y0 {
                let w = g_y - h;
                if w != 0.0 {
                    total += w * positive_part_cell(x0, x1, y0, y1, p);
                }
            }
            if y1 > x0 {
                let w = f_x - h;
                if w != 0.0 {
                    total += w * positive_part_cell(y0, y1, x0, x1, p);
                }
            }
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimalityReport {
    /// `I` of the comonotone plan.
    pub comonotone_value: f64,
    pub trial_values: Vec<f64>,
    /// `min_k I(H_k) − I(M)`; nonnegative up to [`MINIMALITY_TOL`] when the comonotone plan wins.
    pub min_gap: f64,
    pub holds: bool,
}

fn same_margins(c: &DiscreteCoupling, f: &DiscreteMeasure, g: &DiscreteMeasure) -> bool {
    let matches = |pm: &PointMeasure, d: &DiscreteMeasure| {
        pm.len() == d.len()
            && pm
                .atoms()
                .iter()
                .zip(d.atoms())
                .all(|(a, &b)| a.len() == 1 && a[0] == b)
            && pm
                .weights()
                .iter()
                .zip(d.weights())
                .all(|(a, b)| (a - b).abs() <= MARGIN_TOL)
    };
    matches(c.mu(), f) && matches(c.nu(), g)
}

/// Compares `I(M)` for the comonotone plan of `f`, `g` against `I(H)` for each trial plan.
pub fn minimality_of_m(
    f: &Distribution1D,
    g: &Distribution1D,
    p: f64,
    trials: &[DiscreteCoupling],
) -> Result<MinimalityReport> {
    let (a, b) = match (f.as_discrete(), g.as_discrete()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::Domain(
                "minimality checks need discrete margins".into(),
            ))
        }
    };
    if let Some(k) = trials.iter().position(|c| !same_margins(c, a, b)) {
        return Err(Error::Domain(format!(
            "trial coupling {k} does not have the given margins"
        )));
    }
    let comonotone_value = dall_aglio_functional(&monotone_plan_1d(a, b), p)?;
    let trial_values = trials
        .iter()
        .map(|c| dall_aglio_functional(c, p))
        .collect::<Result<Vec<_>>>()?;
    let min_gap = trial_values
        .iter()
        .map(|v| v - comonotone_value)
        .fold(f64::INFINITY, f64::min);
    let min_gap = if trials.is_empty() { 0.0 } else { min_gap };
    Ok(MinimalityReport {
        comonotone_value,
        trial_values,
        min_gap,
        holds: min_gap >= -MINIMALITY_TOL,
    })
}

fn check_margin_lists(f: &[Distribution1D], g: &[Distribution1D]) -> Result<()> {
    if f.is_empty() || f.len() != g.len() {
        return Err(Error::Domain(format!(
            "margin lists must be nonempty and of equal length, got {} and {}",
            f.len(),
            g.len()
        )));
    }
    Ok(())
}

/// `∫₀¹ ‖F⁻¹(u) − G⁻¹(u)‖_p^p du` with the vector quantiles
/// `F⁻¹(u) = (F_1⁻¹(u), …, F_d⁻¹(u))` driven by one common `u`.
///
/// This is the single-integral form of the shared-copula distance; for
/// discrete margins it is summed exactly over the union of all cumulative-weight
/// breakpoints.
pub fn quantile_vector_integral(
    f_margins: &[Distribution1D],
    g_margins: &[Distribution1D],
    p: f64,
) -> Result<f64> {
    check_order(p)?;
    check_margin_lists(f_margins, g_margins)?;
    let gap = |u: f64| -> f64 {
        f_margins
            .iter()
            .zip(g_margins)
            .map(|(a, b)| {
                (a.quantile_unchecked(u).to_f64() - b.quantile_unchecked(u).to_f64())
                    .abs()
                    .powf(p)
            })
            .sum()
    };
    if f_margins
        .iter()
        .chain(g_margins)
        .all(Distribution1D::is_discrete)
    {
        let mut cuts: Vec<f64> = f_margins
            .iter()
            .chain(g_margins)
            .flat_map(|d| d.as_discrete().unwrap().cumulative().iter().copied())
            .collect();
        cuts.push(0.0);
        cuts.sort_by(f64::total_cmp);
        cuts.dedup_by(|b, a| (*b - *a).abs() <= QUANTILE_TIE_TOL);
        return Ok(cuts
            .windows(2)
            .map(|w| (w[1] - w[0]) * gap(0.5 * (w[0] + w[1])))
            .sum());
    }
    let parts: Vec<&Distribution1D> = f_margins.iter().chain(g_margins).collect();
    Ok(quantile_space_integral(gap, &parts, None)?.value)
}

/// `W_p` between two measures on `R^d` that share a copula, from their
/// one-dimensional margins.
///
/// The shared copula is a hypothesis the caller vouches for; it is not (and
/// cannot be) checked from the margins. With ground norm `ℓ_q`, `q = p` gives
/// the exact coordinate sum `Σ_i W_p^p(F_i, G_i)`. For `q ≠ p` in more than one
/// dimension only the norm-equivalence bracket is returned (`exact = false`).
pub fn wasserstein_shared_copula(
    f_margins: &[Distribution1D],
    g_margins: &[Distribution1D],
    p: f64,
    q: f64,
) -> Result<DistanceReport> {
    check_order(p)?;
    if !(q >= 1.0) {
        return Err(Error::Domain(format!("norm order q = {q} must be ≥ 1")));
    }
    check_margin_lists(f_margins, g_margins)?;
    let parts = f_margins
        .iter()
        .zip(g_margins)
        .map(|(a, b)| wasserstein_1d(a, b, p))
        .collect::<Result<Vec<_>>>()?;
    let components: Vec<f64> = parts.iter().map(|r| r.value_pth_power).collect();
    let error_bound = parts.iter().map(|r| r.error_bound).sum();
    let s: f64 = components.iter().sum();

    let mut report = DistanceReport::from_pth_power(s, p, q, Method::SharedCopulaSum, error_bound);
    report.components = components;
    let d = f_margins.len();
    if q != p && d > 1 {
        report.exact = false;
        report.bracket = Some(bracket_from_integral(s, d, p, q));
    }
    Ok(report)
}

fn bracket_from_integral(s: f64, d: usize, p: f64, q: f64) -> Bracket {
    let d = d as f64;
    Bracket {
        lower: d.powf(-1.0 / p) * s,
        upper: d.powf(1.0 / q) * s,
        s,
    }
}

/// `(d^{−1/p} S, d^{1/q} S)` with `S` the shared-copula integral of order `p`.
pub fn norm_equivalence_bounds(
    f_margins: &[Distribution1D],
    g_margins: &[Distribution1D],
    p: f64,
    q: f64,
) -> Result<Bracket> {
    let exact = wasserstein_shared_copula(f_margins, g_margins, p, p)?;
    if !(q >= 1.0) {
        return Err(Error::Domain(format!("norm order q = {q} must be ≥ 1")));
    }
    Ok(bracket_from_integral(
        exact.value_pth_power,
        f_margins.len(),
        p,
        q,
    ))
}

/// Exact `W_p` between two discrete measures on R from the transport LP.
pub fn oracle_distance_1d(
    f: &Distribution1D,
    g: &Distribution1D,
    p: f64,
    limits: OracleLimits,
) -> Result<DistanceReport> {
    check_order(p)?;
    let (a, b) = match (f.as_discrete(), g.as_discrete()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::Domain(
                "the oracle needs discrete distributions".into(),
            ))
        }
    };
    let sol = oracle::solve_exact_with(&TransportInstance::from_1d(a, b, p)?, limits)?;
    Ok(DistanceReport::from_pth_power(
        sol.value,
        p,
        p,
        Method::OracleLp,
        0.0,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::PointMeasure;

    fn disc(pairs: &[(f64, f64)]) -> Distribution1D {
        Distribution1D::discrete(pairs.iter().copied()).unwrap()
    }

    fn two(a: f64, b: f64) -> Distribution1D {
        Distribution1D::uniform_atoms(&[a, b]).unwrap()
    }

    /// Direct expectation `Σ π_ij |x_i − y_j|^p`, independent of the cell integration.
    fn direct_cost(c: &DiscreteCoupling, p: f64) -> f64 {
        let xs = c.mu().atoms_1d().unwrap();
        let ys = c.nu().atoms_1d().unwrap();
        let mut s = 0.0;
        for (i, row) in c.mass().iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                s += m * (xs[i] - ys[j]).abs().powf(p);
            }
        }
        s
    }

    #[test]
    fn wasserstein_1d_examples() {
        let f = disc(&[(0.0, 0.2), (1.5, 0.5), (4.0, 0.3)]);
        let r = wasserstein_1d(&f, &f, 2.0).unwrap();
        assert_eq!((r.value, r.value_pth_power), (0.0, 0.0));

        let a = Distribution1D::dirac(-1.25).unwrap();
        let b = Distribution1D::dirac(2.5).unwrap();
        assert_eq!(wasserstein_1d(&a, &b, 1.0).unwrap().value, 3.75);

        let r = wasserstein_1d(&two(0.0, 1.0), &two(0.0, 2.0), 1.0).unwrap();
        assert_eq!(r.value, 0.5);
        assert_eq!(r.method, Method::QuantileIntegral);
        assert_eq!(r.error_bound, 0.0);

        let third = 1.0 / 3.0;
        let l1 = disc(&[(1.0, third), (2.0, third), (3.0, third)]);
        let l2 = disc(&[(2.0, third), (3.0, third), (4.0, third)]);
        let r = wasserstein_1d(&l1, &l2, 2.0).unwrap();
        assert!((r.value_pth_power - 1.0).abs() < 1e-15);
        assert!((r.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn wasserstein_1d_requires_moment_assertion() {
        let heavy = Distribution1D::parametric("t2", |x| x, |u| u, 1.5).unwrap();
        let z = Distribution1D::normal(0.0, 1.0).unwrap();
        assert!(matches!(
            wasserstein_1d(&heavy, &z, 2.0),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(wasserstein_1d(&z, &z, 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn parametric_closed_forms() {
        // Location shift: W_p = |shift| for every p.
        let a = Distribution1D::normal(0.0, 1.0).unwrap();
        let b = Distribution1D::normal(1.0, 1.0).unwrap();
        let r = wasserstein_1d(&a, &b, 2.0).unwrap();
        assert!((r.value - 1.0).abs() < 1e-6, "{r:?}");
        // W_2² between normals: (Δμ)² + (Δσ)²
        let c = Distribution1D::normal(0.5, 2.0).unwrap();
        let r = wasserstein_1d(&a, &c, 2.0).unwrap();
        assert!((r.value_pth_power - 1.25).abs() < 1e-6, "{r:?}");
        // W_1(U[0,1], U[0,2]) = ∫ u du = 1/2
        let u1 = Distribution1D::uniform(0.0, 1.0).unwrap();
        let u2 = Distribution1D::uniform(0.0, 2.0).unwrap();
        let r = wasserstein_1d(&u1, &u2, 1.0).unwrap();
        assert!((r.value - 0.5).abs() < 1e-8);
        let area = w1_cdf_area(&u1, &u2).unwrap();
        assert!((area.value - 0.5).abs() < 1e-8, "{area:?}");
    }

    #[test]
    fn mixed_discrete_and_continuous() {
        // W_1(δ_0, U[0,1]) = E U = 1/2 by both routes
        let d = Distribution1D::dirac(0.0).unwrap();
        let u = Distribution1D::uniform(0.0, 1.0).unwrap();
        assert!((wasserstein_1d(&d, &u, 1.0).unwrap().value - 0.5).abs() < 1e-9);
        assert!((w1_cdf_area(&d, &u).unwrap().value - 0.5).abs() < 1e-9);
        // W_2²(δ_0, U[0,1]) = E U² = 1/3
        assert!((wasserstein_1d(&d, &u, 2.0).unwrap().value_pth_power - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn cdf_area_examples() {
        let f = disc(&[(0.0, 0.4), (2.0, 0.6)]);
        assert_eq!(w1_cdf_area(&f, &f).unwrap().value, 0.0);
        let a = Distribution1D::dirac(0.0).unwrap();
        let b = Distribution1D::dirac(3.0).unwrap();
        assert_eq!(w1_cdf_area(&a, &b).unwrap().value, 3.0);
        let r = w1_cdf_area(&two(0.0, 1.0), &two(0.0, 2.0)).unwrap();
        assert_eq!(r.value, 0.5);
        assert_eq!(r.method, Method::CdfArea);
    }

    #[test]
    fn comonotone_expectation_examples() {
        let f = disc(&[(0.0, 0.3), (1.0, 0.7)]);
        let h = disc(&[(-2.0, 0.5), (5.0, 0.5)]);
        assert!((comonotone_expectation(|_, _| 1.0, &f, &h).unwrap() - 1.0).abs() < 1e-15);
        let a = Distribution1D::dirac(2.0).unwrap();
        let b = Distribution1D::dirac(5.0).unwrap();
        assert_eq!(
            comonotone_expectation(|x, y| (x - y).abs(), &a, &b).unwrap(),
            3.0
        );
        let p = 2.5;
        let e = comonotone_expectation(|x, y| (x - y).abs().powf(p), &f, &h).unwrap();
        assert!((e - wasserstein_1d(&f, &h, p).unwrap().value_pth_power).abs() < 1e-12);
        // E[U·U] = 1/3 on the diagonal of the unit square
        let u = Distribution1D::uniform(0.0, 1.0).unwrap();
        assert!((comonotone_expectation(|x, y| x * y, &u, &u).unwrap() - 1.0 / 3.0).abs() < 1e-8);
    }

    #[test]
    fn dall_aglio_examples() {
        let a = Distribution1D::dirac(0.0).unwrap();
        let b = Distribution1D::dirac(1.0).unwrap();
        let c = DiscreteCoupling::new_1d(
            a.as_discrete().unwrap(),
            b.as_discrete().unwrap(),
            vec![vec![1.0]],
        )
        .unwrap();
        assert!((dall_aglio_functional(&c, 2.0).unwrap() - 1.0).abs() < 1e-12);

        let f = disc(&[(0.0, 0.25), (1.0, 0.25), (3.0, 0.5)]);
        let fm = f.as_discrete().unwrap();
        let diag = monotone_plan_1d(fm, fm);
        for p in [1.1, 1.5, 2.0, 3.0, 4.5] {
            assert!(dall_aglio_functional(&diag, p).unwrap().abs() < 1e-12);
        }

        let plan = monotone_plan_1d(
            two(0.0, 1.0).as_discrete().unwrap(),
            two(0.0, 2.0).as_discrete().unwrap(),
        );
        assert!((dall_aglio_functional(&plan, 2.0).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn dall_aglio_matches_direct_cost_off_diagonal_and_below_two() {
        let f = PointMeasure::new_1d(&[-1.0, 0.5, 2.0], &[0.2, 0.5, 0.3]).unwrap();
        let g = PointMeasure::new_1d(&[0.0, 0.5, 3.0, 4.0], &[0.1, 0.4, 0.25, 0.25]).unwrap();
        let indep = DiscreteCoupling::independent(f, g).unwrap();
        for p in [1.05, 1.5, 2.0, 2.5, 3.0] {
            let lhs = dall_aglio_functional(&indep, p).unwrap();
            let rhs = direct_cost(&indep, p);
            assert!(
                (lhs - rhs).abs() <= 1e-12 * rhs.max(1.0),
                "p = {p}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn dall_aglio_rejects_p_at_most_one() {
        let plan = monotone_plan_1d(
            two(0.0, 1.0).as_discrete().unwrap(),
            two(0.0, 2.0).as_discrete().unwrap(),
        );
        assert!(matches!(
            dall_aglio_functional(&plan, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            dall_aglio_functional(&plan, 0.5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dall_aglio_rejects_multivariate_supports() {
        let a = PointMeasure::new(vec![vec![0.0, 0.0]], vec![1.0]).unwrap();
        let c = DiscreteCoupling::new(a.clone(), a, vec![vec![1.0]]).unwrap();
        assert!(matches!(
            dall_aglio_functional(&c, 2.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn minimality_examples() {
        let f = two(0.0, 1.0);
        let g = two(0.0, 2.0);
        let pf = PointMeasure::from_discrete(f.as_discrete().unwrap());
        let pg = PointMeasure::from_discrete(g.as_discrete().unwrap());
        let indep = DiscreteCoupling::independent(pf, pg).unwrap();
        let r = minimality_of_m(&f, &g, 2.0, &[indep]).unwrap();
        assert!((r.comonotone_value - 0.5).abs() < 1e-12);
        // (1/4)(0 + 4 + 1 + 1)
        assert!((r.trial_values[0] - 1.5).abs() < 1e-12);
        assert!(r.holds);

        let m = monotone_plan_1d(f.as_discrete().unwrap(), g.as_discrete().unwrap());
        let r = minimality_of_m(&f, &g, 2.0, &[m]).unwrap();
        assert!(r.min_gap.abs() < 1e-15);
    }

    #[test]
    fn minimality_rejects_foreign_trials() {
        let f = two(0.0, 1.0);
        let g = two(0.0, 2.0);
        let other = monotone_plan_1d(f.as_discrete().unwrap(), f.as_discrete().unwrap());
        assert!(matches!(
            minimality_of_m(&f, &g, 2.0, &[other]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn shared_copula_examples() {
        let f = vec![two(0.0, 3.0), disc(&[(1.0, 0.5), (2.0, 0.5)])];
        let r = wasserstein_shared_copula(&f, &f, 2.0, 2.0).unwrap();
        assert_eq!(r.value, 0.0);

        let zeros = vec![
            Distribution1D::dirac(0.0).unwrap(),
            Distribution1D::dirac(0.0).unwrap(),
        ];
        let far = vec![
            Distribution1D::dirac(3.0).unwrap(),
            Distribution1D::dirac(4.0).unwrap(),
        ];
        let r = wasserstein_shared_copula(&zeros, &far, 1.0, 1.0).unwrap();
        assert_eq!(r.value, 7.0);
        assert_eq!(r.components, vec![3.0, 4.0]);

        let f = vec![two(0.0, 1.0), two(0.0, 1.0)];
        let g = vec![two(0.0, 2.0), two(0.0, 2.0)];
        let r = wasserstein_shared_copula(&f, &g, 2.0, 2.0).unwrap();
        assert!((r.value_pth_power - 1.0).abs() < 1e-15);
        assert!(r.exact);
        assert_eq!(r.method, Method::SharedCopulaSum);
        assert!((quantile_vector_integral(&f, &g, 2.0).unwrap() - 1.0).abs() < 1e-15);

        assert!(matches!(
            wasserstein_shared_copula(&f, &g[..1], 2.0, 2.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn shared_copula_with_different_norm_is_bracketed() {
        let f = vec![two(0.0, 1.0), two(0.0, 1.0)];
        let g = vec![two(0.0, 2.0), two(0.0, 2.0)];
        let r = wasserstein_shared_copula(&f, &g, 2.0, 1.0).unwrap();
        assert!(!r.exact);
        let b = r.bracket.unwrap();
        assert!((b.lower - 2f64.powf(-0.5)).abs() < 1e-15);
        assert!((b.upper - 2.0).abs() < 1e-15);
    }

    #[test]
    fn norm_bracket_examples() {
        let f = vec![disc(&[(0.0, 0.5), (5.0, 0.5)])];
        let g = vec![disc(&[(1.0, 0.25), (2.0, 0.75)])];
        let b = norm_equivalence_bounds(&f, &g, 3.0, 1.5).unwrap();
        assert_eq!(b.lower, b.s);
        assert_eq!(b.upper, b.s);

        let f = vec![two(0.0, 1.0), two(0.0, 1.0)];
        let g = vec![two(0.0, 2.0), two(0.0, 2.0)];
        let b = norm_equivalence_bounds(&f, &g, 2.0, 1.0).unwrap();
        assert!((b.s - 1.0).abs() < 1e-15);
        assert!((b.lower - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!((b.upper - 2.0).abs() < 1e-15);

        let same: Vec<_> = (0..4).map(|k| two(k as f64, 10.0)).collect();
        let b = norm_equivalence_bounds(&same, &same, 2.0, 3.0).unwrap();
        assert_eq!((b.lower, b.upper), (0.0, 0.0));
    }

    #[test]
    fn report_value_is_root_of_pth_power() {
        let r = wasserstein_1d(
            &disc(&[(0.0, 0.3), (1.0, 0.7)]),
            &disc(&[(2.0, 0.6), (7.0, 0.4)]),
            3.0,
        )
        .unwrap();
        assert!((r.value - r.value_pth_power.powf(1.0 / 3.0)).abs() <= 1e-12 * r.value);
    }
}
