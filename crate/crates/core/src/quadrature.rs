//! Adaptive quadrature on bounded intervals and tail estimates at the ends of (0, 1).
//!
//! Quantile integrands are smooth between the jumps of any discrete ingredient
//! but may grow without bound near 0 and 1. Integration therefore runs on
//! `(eps, 1 - eps)` with caller-supplied breakpoints, and the two clipped ends
//! are estimated separately from the local decay rate of `u * |f(u)|`.

use crate::error::{Error, Result};

/// Clipping distance from 0 and 1 used for every quantile-space integral.
pub const ENDPOINT_EPS: f64 = 1e-9;

/// Reference offset used to measure how fast the integrand's tail decays.
const TAIL_REFERENCE: f64 = 1e-6;

/// Decay exponents below this are treated as non-integrable tails.
const MIN_TAIL_EXPONENT: f64 = 0.05;

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    /// Absolute tolerance for the whole interval.
    pub abs_tol: f64,
    /// Relative tolerance, applied to the running magnitude of the integral.
    pub rel_tol: f64,
    pub max_depth: u32,
    pub max_evals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            abs_tol: 1e-11,
            rel_tol: 1e-12,
            max_depth: 60,
            max_evals: 4_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Sum of the per-panel Richardson error estimates.
    pub error: f64,
    pub evals: usize,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Integrates `f` over `[a, b]`, first splitting at `breakpoints` that fall
/// strictly inside the interval.
///
/// Returns a divergence error if any panel hits the depth or evaluation limit
/// without meeting its share of the tolerance, or if `f` returns a non-finite value.
pub fn integrate<F>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    opts: QuadOptions,
) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::Domain(format!("invalid interval [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error: 0.0,
            evals: 0,
        });
    }

    let mut knots: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&x| x > a && x < b)
        .collect();
    knots.push(a);
    knots.push(b);
    knots.sort_by(f64::total_cmp);
    knots.dedup();

    let evals = std::cell::Cell::new(0usize);
    let eval = |x: f64| -> Result<f64> {
        evals.set(evals.get() + 1);
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::Divergence(format!("integrand is not finite at {x}")))
        }
    };

    let width = b - a;
    let mut stack = Vec::new();
    for w in knots.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let mid = 0.5 * (lo + hi);
        let (fa, fm, fb) = (eval(lo)?, eval(mid)?, eval(hi)?);
        stack.push(Panel {
            a: lo,
            b: hi,
            fa,
            fm,
            fb,
            whole: simpson(lo, hi, fa, fm, fb),
            tol: opts.abs_tol * (hi - lo) / width,
            depth: 0,
        });
    }

    let mut value = 0.0;
    let mut error = 0.0;
    let mut magnitude: f64 = stack.iter().map(|p| p.whole.abs()).sum();
    while let Some(p) = stack.pop() {
        let mid = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + mid);
        let rm = 0.5 * (mid + p.b);
        let flm = eval(lm)?;
        let frm = eval(rm)?;
        let left = simpson(p.a, mid, p.fa, flm, p.fm);
        let right = simpson(mid, p.b, p.fm, frm, p.fb);
        let diff = left + right - p.whole;
        let local_tol = p.tol.max(opts.rel_tol * magnitude * (p.b - p.a) / width);
        if diff.abs() <= 15.0 * local_tol || mid <= p.a || mid >= p.b {
            value += left + right + diff / 15.0;
            error += diff.abs() / 15.0;
            continue;
        }
        if p.depth >= opts.max_depth || evals.get() >= opts.max_evals {
            return Err(Error::Divergence(format!(
                "adaptive quadrature did not converge on [{}, {}] (depth {}, {} evaluations)",
                p.a,
                p.b,
                p.depth,
                evals.get()
            )));
        }
        magnitude += (left.abs() + right.abs() - p.whole.abs()).max(0.0);
        stack.push(Panel {
            a: p.a,
            b: mid,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: left,
            tol: 0.5 * p.tol,
            depth: p.depth + 1,
        });
        stack.push(Panel {
            a: mid,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: right,
            tol: 0.5 * p.tol,
            depth: p.depth + 1,
        });
    }
    Ok(QuadResult {
        value,
        error,
        evals: evals.get(),
    })
}

/// Estimates `∫_0^eps |f(u)| du` from the decay of `t(u) = u |f(u)|` between
/// `u = eps` and a reference offset. A tail where `t` does not shrink toward
/// the endpoint is reported as divergent.
fn one_tail<F>(f: F, eps: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let at_eps = eps * f(eps).abs();
    let at_ref = TAIL_REFERENCE * f(TAIL_REFERENCE).abs();
    if !at_eps.is_finite() || !at_ref.is_finite() {
        return Err(Error::Divergence(
            "integrand is not finite near the endpoint".into(),
        ));
    }
    if at_eps == 0.0 {
        return Ok(0.0);
    }
    if at_ref == 0.0 {
        return Ok(at_eps);
    }
    let exponent = (at_eps / at_ref).ln() / (eps / TAIL_REFERENCE).ln();
    if exponent < MIN_TAIL_EXPONENT {
        return Err(Error::Divergence(format!(
            "u·|f(u)| does not vanish at the endpoint (decay exponent {exponent:.3})"
        )));
    }
    Ok(at_eps / exponent)
}

/// Estimated mass of `|f|` on `(0, eps)` plus `(1 - eps, 1)`.
pub fn unit_interval_tails<F>(f: F, eps: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let lower = one_tail(&f, eps)?;
    let upper = one_tail(|s| f(1.0 - s), eps)?;
    Ok(lower + upper)
}

/// Signed estimate of `∫ f` over `(0, eps) ∪ (1 - eps, 1)`, taking each end's
/// sign from `f` at the clipping point.
pub fn unit_interval_tail_estimate<F>(f: F, eps: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let lower = one_tail(&f, eps)?.copysign(f(eps));
    let upper = one_tail(|s| f(1.0 - s), eps)?.copysign(f(1.0 - eps));
    Ok(lower + upper)
}
