//! Copulas as black-box evaluators on `[0, 1]^d`, grid validation of the copula
//! axioms, Sklar composition with margins, and extraction of discrete plans
//! from bivariate distribution functions.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::dist_core::Distribution1D;
use crate::error::{Error, Result};
use crate::oracle::{DiscreteCoupling, PointMeasure};

/// Tolerance for groundedness, uniform margins and the Fréchet–Hoeffding sandwich.
pub const AXIOM_TOL: f64 = 1e-12;

/// Most negative C-volume accepted before a box counts as a violation.
pub const VOLUME_TOL: f64 = 1e-12;

pub const MAX_VALIDATION_DIM: usize = 10;

/// Largest number of grid points a validation run will evaluate.
pub const MAX_VALIDATION_POINTS: usize = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CopulaLabel {
    M,
    W,
    Pi,
    Custom,
}

impl fmt::Display for CopulaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CopulaLabel::M => "M",
            CopulaLabel::W => "W",
            CopulaLabel::Pi => "Pi",
            CopulaLabel::Custom => "custom",
        };
        f.write_str(s)
    }
}

type CopulaEval = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A candidate d-copula. Only [`validate_copula`] certifies the axioms.
#[derive(Clone)]
pub struct CopulaFn {
    dim: usize,
    label: CopulaLabel,
    eval: CopulaEval,
}

impl fmt::Debug for CopulaFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CopulaFn")
            .field("dim", &self.dim)
            .field("label", &self.label)
            .finish()
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim < 2 {
        Err(Error::Domain(format!(
            "copula dimension must be at least 2, got {dim}"
        )))
    } else {
        Ok(())
    }
}

/// Comonotonicity copula `M(u) = min u_i`.
pub fn m_copula(dim: usize) -> Result<CopulaFn> {
    check_dim(dim)?;
    Ok(CopulaFn {
        dim,
        label: CopulaLabel::M,
        eval: Arc::new(|u: &[f64]| u.iter().copied().fold(f64::INFINITY, f64::min)),
    })
}

/// Lower Fréchet–Hoeffding bound `W(u) = max(Σ u_i − d + 1, 0)`; a copula only for `d = 2`.
pub fn w_lower(dim: usize) -> Result<CopulaFn> {
    check_dim(dim)?;
    let shift = dim as f64 - 1.0;
    Ok(CopulaFn {
        dim,
        label: CopulaLabel::W,
        eval: Arc::new(move |u: &[f64]| (u.iter().sum::<f64>() - shift).max(0.0)),
    })
}

/// Independence copula `Π(u) = Π u_i`.
pub fn pi_copula(dim: usize) -> Result<CopulaFn> {
    check_dim(dim)?;
    Ok(CopulaFn {
        dim,
        label: CopulaLabel::Pi,
        eval: Arc::new(|u: &[f64]| u.iter().product()),
    })
}

impl CopulaFn {
    /// User-supplied dependence structure.
    pub fn custom<F>(dim: usize, eval: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        check_dim(dim)?;
        Ok(CopulaFn {
            dim,
            label: CopulaLabel::Custom,
            eval: Arc::new(eval),
        })
    }

    /// Built-in copula by label name (`M`, `W` or `Pi`).
    pub fn builtin(label: &str, dim: usize) -> Result<Self> {
        match label {
            "M" | "m" => m_copula(dim),
            "W" | "w" => w_lower(dim),
            "Pi" | "PI" | "pi" => pi_copula(dim),
            other => Err(Error::Domain(format!("unknown copula label {other:?}"))),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> CopulaLabel {
        self.label
    }

    /// Whether the label alone guarantees a genuine copula. `W` qualifies only
    /// in two dimensions; custom evaluators never do.
    pub fn is_known_copula(&self) -> bool {
        match self.label {
            CopulaLabel::M | CopulaLabel::Pi => true,
            CopulaLabel::W => self.dim == 2,
            CopulaLabel::Custom => false,
        }
    }

    pub fn eval(&self, u: &[f64]) -> f64 {
        debug_assert_eq!(u.len(), self.dim);
        (self.eval)(u)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Grounded,
    UniformMargins,
    DIncreasing,
}

/// First offending grid point (or box, given by its two corners) in lexicographic order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub lower: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<f64>>,
    /// Offending value: `C(u)`, `C(u) − u_i`, or the box's C-volume.
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    pub checked: usize,
    pub violations: usize,
    /// Largest deviation seen (most negative volume for d-increasing).
    pub worst: f64,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    fn new(axiom: Axiom) -> Self {
        AxiomCheck {
            axiom,
            passed: true,
            checked: 0,
            violations: 0,
            worst: 0.0,
            witness: None,
        }
    }

    fn record(&mut self, bad: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if bad {
            self.passed = false;
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub label: CopulaLabel,
    pub dim: usize,
    pub resolution: usize,
    pub grounded: AxiomCheck,
    pub uniform_margins: AxiomCheck,
    pub d_increasing: AxiomCheck,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.grounded.passed && self.uniform_margins.passed && self.d_increasing.passed
    }

    pub fn checks(&self) -> [&AxiomCheck; 3] {
        [&self.grounded, &self.uniform_margins, &self.d_increasing]
    }
}

/// Grid intervals per axis used when the caller has no preference.
pub fn default_resolution(dim: usize) -> usize {
    match dim {
        0..=2 => 16,
        3 => 10,
        _ => 6,
    }
}

/// Checks groundedness, uniform margins and d-increasingness on the uniform
/// grid `{0, 1/r, …, 1}^d`, where `r = resolution`.
pub fn validate_copula(c: &CopulaFn, resolution: usize) -> Result<ValidationReport> {
    let d = c.dim;
    if d > MAX_VALIDATION_DIM {
        return Err(Error::Capacity(format!(
            "validation enumerates 2^d corners per box; dimension {d} exceeds {MAX_VALIDATION_DIM}"
        )));
    }
    if resolution < 2 {
        return Err(Error::Domain(format!(
            "grid resolution must be at least 2, got {resolution}"
        )));
    }
    let side = resolution + 1;
    let total = side
        .checked_pow(d as u32)
        .filter(|&t| t <= MAX_VALIDATION_POINTS)
        .ok_or_else(|| {
            Error::Capacity(format!(
                "a {side}^{d} validation grid exceeds {MAX_VALIDATION_POINTS} points"
            ))
        })?;

    let level = |k: usize| k as f64 / resolution as f64;
    let digits = |mut flat: usize| -> Vec<usize> {
        let mut idx = vec![0; d];
        for slot in idx.iter_mut().rev() {
            *slot = flat % side;
            flat /= side;
        }
        idx
    };
    let point = |idx: &[usize]| idx.iter().map(|&k| level(k)).collect::<Vec<f64>>();

    let values: Vec<f64> = (0..total)
        .map(|flat| c.eval(&point(&digits(flat))))
        .collect();
    let strides: Vec<usize> = (0..d).map(|i| side.pow((d - 1 - i) as u32)).collect();

    let mut grounded = AxiomCheck::new(Axiom::Grounded);
    let mut margins = AxiomCheck::new(Axiom::UniformMargins);
    for (flat, &v) in values.iter().enumerate() {
        let idx = digits(flat);
        if idx.contains(&0) {
            grounded.worst = grounded.worst.max(v.abs());
            grounded.record(v.abs() > AXIOM_TOL, || Witness {
                lower: point(&idx),
                upper: None,
                value: v,
            });
        }
        let free: Vec<usize> = (0..d).filter(|&i| idx[i] != resolution).collect();
        if free.len() <= 1 {
            let t = free.first().map_or(1.0, |&i| level(idx[i]));
            let dev = v - t;
            margins.worst = margins.worst.max(dev.abs());
            margins.record(dev.abs() > AXIOM_TOL, || Witness {
                lower: point(&idx),
                upper: None,
                value: dev,
            });
        }
    }

    let mut increasing = AxiomCheck::new(Axiom::DIncreasing);
    let corners: Vec<(usize, f64)> = (0..1usize << d)
        .map(|mask| {
            let offset = (0..d)
                .filter(|&i| mask >> (d - 1 - i) & 1 == 1)
                .map(|i| strides[i])
                .sum();
            let lows = d - mask.count_ones() as usize;
            (offset, if lows % 2 == 0 { 1.0 } else { -1.0 })
        })
        .collect();
    let boxes = resolution.pow(d as u32);
    for b in 0..boxes {
        let mut lo = vec![0; d];
        let mut rest = b;
        for slot in lo.iter_mut().rev() {
            *slot = rest % resolution;
            rest /= resolution;
        }
        let base: usize = lo.iter().zip(&strides).map(|(k, s)| k * s).sum();
        let volume: f64 = corners
            .iter()
            .map(|&(off, sign)| sign * values[base + off])
            .sum();
        increasing.worst = increasing.worst.min(volume);
        increasing.record(volume < -VOLUME_TOL, || {
            let hi: Vec<usize> = lo.iter().map(|k| k + 1).collect();
            Witness {
                lower: point(&lo),
                upper: Some(point(&hi)),
                value: volume,
            }
        });
    }

    Ok(ValidationReport {
        label: c.label,
        dim: d,
        resolution,
        grounded,
        uniform_margins: margins,
        d_increasing: increasing,
    })
}

/// Distribution function `H(x) = C(F_1(x_1), …, F_d(x_d))`.
#[derive(Debug, Clone)]
pub struct JointCDF {
    copula: CopulaFn,
    margins: Vec<Distribution1D>,
}

impl JointCDF {
    pub fn dim(&self) -> usize {
        self.copula.dim
    }

    pub fn copula(&self) -> &CopulaFn {
        &self.copula
    }

    pub fn margins(&self) -> &[Distribution1D] {
        &self.margins
    }

    /// Evaluates `H`; `+∞` in a coordinate integrates that margin out.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim() {
            return Err(Error::Domain(format!(
                "expected {} coordinates, got {}",
                self.dim(),
                x.len()
            )));
        }
        let u: Vec<f64> = x
            .iter()
            .zip(&self.margins)
            .map(|(&xi, m)| if xi == f64::INFINITY { 1.0 } else { m.cdf(xi) })
            .collect();
        Ok(self.copula.eval(&u))
    }
}

/// Composes margins into a copula.
pub fn sklar_join(c: &CopulaFn, margins: Vec<Distribution1D>) -> Result<JointCDF> {
    if margins.len() != c.dim {
        return Err(Error::Domain(format!(
            "copula of dimension {} needs {} margins, got {}",
            c.dim,
            c.dim,
            margins.len()
        )));
    }
    Ok(JointCDF {
        copula: c.clone(),
        margins,
    })
}

/// `H(x, y) = min(F(x), G(y))`, the law of `(F⁻¹(U), G⁻¹(U))`.
pub fn comonotone_joint_2d(f: &Distribution1D, g: &Distribution1D) -> JointCDF {
    JointCDF {
        copula: m_copula(2).expect("dimension 2 is valid"),
        margins: vec![f.clone(), g.clone()],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrechetBounds {
    pub lower: f64,
    pub upper: f64,
    pub value: f64,
}

impl FrechetBounds {
    /// `lower ≤ value ≤ upper` up to [`AXIOM_TOL`].
    pub fn holds(&self) -> bool {
        self.lower <= self.value + AXIOM_TOL && self.value <= self.upper + AXIOM_TOL
    }
}

/// `(W^d(u), M^d(u), C(u))`.
pub fn frechet_hoeffding_bounds(c: &CopulaFn, u: &[f64]) -> Result<FrechetBounds> {
    if u.len() != c.dim {
        return Err(Error::Domain(format!(
            "expected a point in [0,1]^{}, got {} coordinates",
            c.dim,
            u.len()
        )));
    }
    if u.iter().any(|x| !(0.0..=1.0).contains(x)) {
        return Err(Error::Domain(
            "point lies outside the unit hypercube".into(),
        ));
    }
    let shift = c.dim as f64 - 1.0;
    Ok(FrechetBounds {
        lower: (u.iter().sum::<f64>() - shift).max(0.0),
        upper: u.iter().copied().fold(f64::INFINITY, f64::min),
        value: c.eval(u),
    })
}

/// Mass matrix of a bivariate joint over its two discrete margins, obtained by
/// inclusion–exclusion of `H` over the rectangles between consecutive atoms.
/// Round-off negatives are clamped and each row rescaled to its margin weight.
pub fn coupling_from_joint(h: &JointCDF) -> Result<DiscreteCoupling> {
    if h.dim() != 2 {
        return Err(Error::Domain(format!(
            "expected a bivariate joint, got dimension {}",
            h.dim()
        )));
    }
    let (f, g) = match (h.margins[0].as_discrete(), h.margins[1].as_discrete()) {
        (Some(f), Some(g)) => (f, g),
        _ => return Err(Error::Domain("both margins must be discrete".into())),
    };
    let (m, n) = (f.len(), g.len());
    // grid[i][j] = H(x_{i-1}, y_{j-1}) with index 0 standing for −∞.
    let mut grid = vec![vec![0.0; n + 1]; m + 1];
    for i in 0..m {
        for j in 0..n {
            grid[i + 1][j + 1] = h.eval(&[f.atoms()[i], g.atoms()[j]])?;
        }
    }
    let mut mass = vec![vec![0.0; n]; m];
    for i in 0..m {
        for j in 0..n {
            let vol = grid[i + 1][j + 1] - grid[i][j + 1] - grid[i + 1][j] + grid[i][j];
            if vol < -VOLUME_TOL {
                return Err(Error::InvalidJoint(format!(
                    "rectangle at atoms ({}, {}) has volume {vol:e}",
                    f.atoms()[i],
                    g.atoms()[j]
                )));
            }
            mass[i][j] = vol.max(0.0);
        }
    }
    for (row, &w) in mass.iter_mut().zip(f.weights()) {
        let s: f64 = row.iter().sum();
        if s <= 0.0 {
            return Err(Error::InvalidJoint(
                "a row of the joint carries no mass".into(),
            ));
        }
        let scale = w / s;
        row.iter_mut().for_each(|x| *x *= scale);
    }
    DiscreteCoupling::new(
        PointMeasure::from_discrete(f),
        PointMeasure::from_discrete(g),
        mass,
    )
}
