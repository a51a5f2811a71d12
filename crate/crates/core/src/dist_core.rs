//! Probability measures on the real line, seen through their distribution
//! function `F` and generalized inverse `F⁻¹(u) = inf{x : F(x) ≥ u}`.
//!
//! Discrete and empirical measures are stored as sorted atoms with merged
//! duplicates, so `F` is a step function with strictly increasing jump
//! locations. Parametric measures are black boxes that must supply both `F`
//! and `F⁻¹`; no numerical inversion happens here.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::extended::ExtendedReal;
use crate::quadrature::{self, QuadOptions, ENDPOINT_EPS};

/// Tie tolerance when comparing cumulative weights to a probability level.
pub const QUANTILE_TIE_TOL: f64 = 1e-12;

/// Allowed deviation of a discrete measure's total mass from 1.
pub const MASS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistributionKind {
    Discrete,
    Empirical,
    ParametricQuantile,
}

/// Finitely supported measure: strictly increasing atoms with positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    atoms: Vec<f64>,
    weights: Vec<f64>,
    cumulative: Vec<f64>,
}

impl DiscreteMeasure {
    fn build(mut pairs: Vec<(f64, f64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Construction(
                "a discrete measure needs at least one atom".into(),
            ));
        }
        for &(x, w) in &pairs {
            if !x.is_finite() {
                return Err(Error::Construction(format!("atom {x} is not finite")));
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::Construction(format!(
                    "weight {w} of atom {x} is not strictly positive"
                )));
            }
        }
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

        let mut atoms: Vec<f64> = Vec::with_capacity(pairs.len());
        let mut weights: Vec<f64> = Vec::with_capacity(pairs.len());
        for (x, w) in pairs {
            match atoms.last() {
                Some(&last) if last == x => *weights.last_mut().unwrap() += w,
                _ => {
                    atoms.push(x);
                    weights.push(w);
                }
            }
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > MASS_TOL {
            return Err(Error::Construction(format!(
                "weights sum to {total}, expected 1"
            )));
        }
        let cumulative = weights
            .iter()
            .scan(0.0, |acc, w| {
                *acc += w;
                Some(*acc)
            })
            .collect();
        Ok(DiscreteMeasure {
            atoms,
            weights,
            cumulative,
        })
    }

    pub fn atoms(&self) -> &[f64] {
        &self.atoms
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Cumulative weights `F(atom_i)`; the last entry is within `MASS_TOL` of 1.
    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let k = self.atoms.partition_point(|&a| a <= x);
        if k == 0 {
            0.0
        } else if k == self.atoms.len() {
            1.0
        } else {
            self.cumulative[k - 1]
        }
    }

    /// Index of the smallest atom whose cumulative weight reaches `u - tol`.
    pub fn quantile_index(&self, u: f64) -> Option<usize> {
        let k = self
            .cumulative
            .partition_point(|&c| c < u - QUANTILE_TIE_TOL);
        (k < self.atoms.len()).then_some(k)
    }
}

type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type TailBound = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

#[derive(Clone)]
struct Parametric {
    name: String,
    cdf: Evaluator,
    quantile: Evaluator,
    tail_bound: Option<TailBound>,
}

#[derive(Clone)]
enum Repr {
    Discrete(DiscreteMeasure),
    Parametric(Parametric),
}

/// A probability measure on R.
#[derive(Clone)]
pub struct Distribution1D {
    kind: DistributionKind,
    repr: Repr,
    moment_order: f64,
}

impl fmt::Debug for Distribution1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Discrete(d) => f
                .debug_struct("Distribution1D")
                .field("kind", &self.kind)
                .field("atoms", &d.atoms)
                .field("weights", &d.weights)
                .finish(),
            Repr::Parametric(p) => f
                .debug_struct("Distribution1D")
                .field("kind", &self.kind)
                .field("name", &p.name)
                .field("moment_order", &self.moment_order)
                .finish(),
        }
    }
}

/// One row of [`Distribution1D::tail_decay_diagnostic`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailRow {
    pub x: f64,
    /// `x^r (1 - F(x))`
    pub upper: f64,
    /// `x^r F(-x)`
    pub lower: f64,
}

impl Distribution1D {
    /// Discrete measure from `(atom, weight)` pairs. Duplicate atoms are merged.
    pub fn discrete<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        Ok(Distribution1D {
            kind: DistributionKind::Discrete,
            repr: Repr::Discrete(DiscreteMeasure::build(pairs.into_iter().collect())?),
            moment_order: f64::INFINITY,
        })
    }

    /// Point mass at `a`.
    pub fn dirac(a: f64) -> Result<Self> {
        Self::discrete([(a, 1.0)])
    }

    /// Equal weights on the given atoms (duplicates accumulate weight).
    pub fn uniform_atoms(atoms: &[f64]) -> Result<Self> {
        let w = 1.0 / atoms.len().max(1) as f64;
        Self::discrete(atoms.iter().map(|&a| (a, w)))
    }

    /// Empirical measure of a sample: weight `1/n` per observation, duplicates merged.
    pub fn from_samples(samples: &[f64]) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Construction("empty sample".into()));
        }
        if let Some(bad) = samples.iter().find(|x| !x.is_finite()) {
            return Err(Error::Construction(format!(
                "sample value {bad} is not finite"
            )));
        }
        let mut sorted = samples.to_vec();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len();

        let mut atoms = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        for x in sorted {
            match atoms.last() {
                Some(&last) if last == x => *counts.last_mut().unwrap() += 1,
                _ => {
                    atoms.push(x);
                    counts.push(1);
                }
            }
        }
        // Counts are integers, so k/n is the correctly rounded cumulative weight.
        let mut running = 0usize;
        let mut cumulative = Vec::with_capacity(counts.len());
        for &c in &counts {
            running += c;
            cumulative.push(running as f64 / n as f64);
        }
        let weights = counts.iter().map(|&c| c as f64 / n as f64).collect();
        Ok(Distribution1D {
            kind: DistributionKind::Empirical,
            repr: Repr::Discrete(DiscreteMeasure {
                atoms,
                weights,
                cumulative,
            }),
            moment_order: f64::INFINITY,
        })
    }

    /// Black-box measure given by its CDF and quantile function.
    ///
    /// `moment_order` is the largest `p` for which the caller asserts
    /// `E|X|^p < ∞`; distance computations of order `p` require it to be ≥ `p`.
    pub fn parametric<C, Q>(
        name: impl Into<String>,
        cdf: C,
        quantile: Q,
        moment_order: f64,
    ) -> Result<Self>
    where
        C: Fn(f64) -> f64 + Send + Sync + 'static,
        Q: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if moment_order.is_nan() || moment_order < 0.0 {
            return Err(Error::Construction(format!(
                "invalid moment order {moment_order}"
            )));
        }
        Ok(Distribution1D {
            kind: DistributionKind::ParametricQuantile,
            repr: Repr::Parametric(Parametric {
                name: name.into(),
                cdf: Arc::new(cdf),
                quantile: Arc::new(quantile),
                tail_bound: None,
            }),
            moment_order,
        })
    }

    /// Attaches an analytic bound `(p, eps) ↦ ∫ |F⁻¹(u)|^p du` over `(0, eps) ∪ (1 - eps, 1)`.
    /// Ignored for discrete measures.
    pub fn with_tail_bound<B>(mut self, bound: B) -> Self
    where
        B: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        if let Repr::Parametric(p) = &mut self.repr {
            p.tail_bound = Some(Arc::new(bound));
        }
        self
    }

    /// Uniform law on `[a, b]`.
    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::Construction(format!(
                "invalid uniform support [{a}, {b}]"
            )));
        }
        let width = b - a;
        Self::parametric(
            format!("uniform({a}, {b})"),
            move |x| ((x - a) / width).clamp(0.0, 1.0),
            move |u| a + u * width,
            f64::INFINITY,
        )
        .map(|d| d.with_tail_bound(move |p, eps| eps * (a.abs().max(b.abs())).powf(p) * 2.0))
    }

    /// Exponential law with the given rate.
    pub fn exponential(rate: f64) -> Result<Self> {
        if !(rate.is_finite() && rate > 0.0) {
            return Err(Error::Construction(format!(
                "invalid exponential rate {rate}"
            )));
        }
        Self::parametric(
            format!("exponential({rate})"),
            move |x| if x <= 0.0 { 0.0 } else { -(-rate * x).exp_m1() },
            move |u| -(-u).ln_1p() / rate,
            f64::INFINITY,
        )
    }

    /// Normal law with mean `mean` and standard deviation `sd`.
    pub fn normal(mean: f64, sd: f64) -> Result<Self> {
        let law = Normal::new(mean, sd).map_err(|e| Error::Construction(e.to_string()))?;
        let q = law;
        Self::parametric(
            format!("normal({mean}, {sd})"),
            move |x| law.cdf(x),
            move |u| q.inverse_cdf(u),
            f64::INFINITY,
        )
    }

    pub fn kind(&self) -> DistributionKind {
        self.kind
    }

    /// Largest `p` for which membership in `P_p(R)` is asserted.
    pub fn moment_order(&self) -> f64 {
        self.moment_order
    }

    /// The atoms and weights, for discrete and empirical measures.
    pub fn as_discrete(&self) -> Option<&DiscreteMeasure> {
        match &self.repr {
            Repr::Discrete(d) => Some(d),
            Repr::Parametric(_) => None,
        }
    }

    pub fn is_discrete(&self) -> bool {
        self.as_discrete().is_some()
    }

    pub(crate) fn analytic_tail_bound(&self, p: f64, eps: f64) -> Option<f64> {
        match &self.repr {
            Repr::Discrete(_) => Some(0.0),
            Repr::Parametric(par) => par.tail_bound.as_ref().map(|b| b(p, eps)),
        }
    }

    /// `P(X ≤ x)`. Right-continuous, 0 below and 1 above a discrete support.
    pub fn cdf(&self, x: f64) -> f64 {
        match &self.repr {
            Repr::Discrete(d) => d.cdf(x),
            Repr::Parametric(p) => (p.cdf)(x),
        }
    }

    /// Generalized inverse `inf{x : F(x) ≥ u}` for `u ∈ (0, 1]`.
    pub fn quantile(&self, u: f64) -> Result<ExtendedReal> {
        if !(u > 0.0 && u <= 1.0) {
            return Err(Error::Domain(format!(
                "quantile level {u} is outside (0, 1]"
            )));
        }
        Ok(self.quantile_unchecked(u))
    }

    pub(crate) fn quantile_unchecked(&self, u: f64) -> ExtendedReal {
        match &self.repr {
            Repr::Discrete(d) => match d.quantile_index(u) {
                Some(k) => ExtendedReal::Finite(d.atoms[k]),
                None => ExtendedReal::PosInfinity,
            },
            Repr::Parametric(p) => {
                ExtendedReal::from_f64((p.quantile)(u)).unwrap_or(ExtendedReal::PosInfinity)
            }
        }
    }

    /// `E|X|^p`: an exact weighted sum for discrete measures, a quantile-space
    /// integral `∫₀¹ |F⁻¹(u)|^p du` otherwise.
    pub fn p_moment(&self, p: f64) -> Result<f64> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::Domain(format!(
                "moment order {p} must be a finite real ≥ 1"
            )));
        }
        match &self.repr {
            Repr::Discrete(d) => Ok(d
                .atoms
                .iter()
                .zip(&d.weights)
                .map(|(x, w)| w * x.abs().powf(p))
                .sum()),
            Repr::Parametric(par) => {
                let integrand = |u: f64| (par.quantile)(u).abs().powf(p);
                let body = quadrature::integrate(
                    integrand,
                    ENDPOINT_EPS,
                    1.0 - ENDPOINT_EPS,
                    &[],
                    QuadOptions::default(),
                )?;
                let tails = match quadrature::unit_interval_tails(integrand, ENDPOINT_EPS) {
                    Ok(t) => t,
                    Err(_) if par.tail_bound.is_some() => 0.0,
                    Err(e) => return Err(e),
                };
                Ok(body.value + tails)
            }
        }
    }

    /// Rows `(x, x^r (1 - F(x)), x^r F(-x))` for each grid point. Both tail terms
    /// vanish as `x → ∞` whenever `E|X|^r < ∞`.
    pub fn tail_decay_diagnostic(&self, r: f64, grid: &[f64]) -> Result<Vec<TailRow>> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("tail exponent {r} must be positive")));
        }
        if grid.iter().any(|&x| !(x > 0.0 && x.is_finite())) {
            return Err(Error::Domain(
                "tail grid must contain positive finite reals".into(),
            ));
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain(
                "tail grid must be strictly increasing".into(),
            ));
        }
        Ok(grid
            .iter()
            .map(|&x| {
                let scale = x.powf(r);
                TailRow {
                    x,
                    upper: scale * (1.0 - self.cdf(x)),
                    lower: scale * self.cdf(-x),
                }
            })
            .collect())
    }
}

/// Deterministic comonotone sample `(F⁻¹(u_k), G⁻¹(u_k))` at the midpoints
/// `u_k = (k - 1/2)/n`, `k = 1..=n`.
pub fn comonotone_pushforward(
    f: &Distribution1D,
    g: &Distribution1D,
    n: usize,
) -> Result<Vec<(f64, f64)>> {
    if n == 0 {
        return Err(Error::Domain("need at least one grid point".into()));
    }
    Ok((1..=n)
        .map(|k| {
            let u = (k as f64 - 0.5) / n as f64;
            (
                f.quantile_unchecked(u).to_f64(),
                g.quantile_unchecked(u).to_f64(),
            )
        })
        .collect())
}

/// One piece of the merged cumulative-weight ladders of two discrete measures:
/// on a `u`-interval of length `mass`, `F⁻¹ = atoms_f[row]` and `G⁻¹ = atoms_g[col]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderStep {
    pub mass: f64,
    pub row: usize,
    pub col: usize,
}

/// Merges the cumulative-weight ladders of `f` and `g`. Equal cumulative
/// weights (within the quantile tie tolerance) advance both sides at once, so
/// no zero-width piece is produced.
pub fn comonotone_ladder(f: &DiscreteMeasure, g: &DiscreteMeasure) -> Vec<LadderStep> {
    let (cf, cg) = (&f.cumulative, &g.cumulative);
    let (mut i, mut j) = (0, 0);
    let mut pos = 0.0;
    let mut steps = Vec::with_capacity(cf.len() + cg.len());
    while i < cf.len() && j < cg.len() {
        let last_i = i + 1 == cf.len();
        let last_j = j + 1 == cg.len();
        let (end, advance_i, advance_j) =
            if (cf[i] - cg[j]).abs() <= QUANTILE_TIE_TOL || (last_i && last_j) {
                (cf[i].max(cg[j]), true, true)
            } else if cf[i] < cg[j] && !last_i || last_j {
                (cf[i], true, false)
            } else {
                (cg[j], false, true)
            };
        let mass = end - pos;
        if mass > 0.0 {
            steps.push(LadderStep {
                mass,
                row: i,
                col: j,
            });
            pos = end;
        }
        if advance_i {
            i += 1;
        }
        if advance_j {
            j += 1;
        }
    }
    steps
}
