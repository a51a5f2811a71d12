#![allow(dead_code)]

use copula_ot::{Distribution1D, PointMeasure};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random weights on the simplex, normalized to sum to one.
pub fn simplex<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let total: f64 = raw.iter().sum();
    raw.iter().map(|w| w / total).collect()
}

/// Discrete measure with `n` atoms drawn from `[lo, hi]` and simplex weights.
pub fn random_discrete<R: Rng>(rng: &mut R, n: usize, lo: f64, hi: f64) -> Distribution1D {
    let w = simplex(rng, n);
    let pairs: Vec<(f64, f64)> = w.into_iter().map(|w| (rng.gen_range(lo..=hi), w)).collect();
    Distribution1D::discrete(pairs).unwrap()
}

/// Between 1 and `max_atoms` atoms in `[-10, 10]`.
pub fn random_measure<R: Rng>(rng: &mut R, max_atoms: usize) -> Distribution1D {
    let n = rng.gen_range(1..=max_atoms);
    random_discrete(rng, n, -10.0, 10.0)
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// `|a − b| / max(|a|, |b|)`, zero when both vanish.
pub fn rel_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Generalized inverse by linear scan: first atom whose cumulative weight reaches `u`.
pub fn scan_quantile(d: &Distribution1D, u: f64) -> f64 {
    let m = d.as_discrete().unwrap();
    let mut acc = 0.0;
    for (x, w) in m.atoms().iter().zip(m.weights()) {
        acc += w;
        if acc >= u - 1e-14 {
            return *x;
        }
    }
    *m.atoms().last().unwrap()
}

/// Joint law on R^d of `(F_1⁻¹(U), …, F_d⁻¹(U))`: one atom per cell of the
/// merged cumulative-weight ladders, weighted by the cell width.
pub fn comonotone_points(margins: &[Distribution1D]) -> PointMeasure {
    let mut cuts = vec![0.0];
    for d in margins {
        let mut acc = 0.0;
        for w in d.as_discrete().unwrap().weights() {
            acc += w;
            cuts.push(acc.min(1.0));
        }
    }
    cuts.push(1.0);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|b, a| *b - *a <= 1e-13);

    let mut atoms = Vec::new();
    let mut weights = Vec::new();
    for w in cuts.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        atoms.push(
            margins
                .iter()
                .map(|d| scan_quantile(d, mid))
                .collect::<Vec<f64>>(),
        );
        weights.push(w[1] - w[0]);
    }
    PointMeasure::new(atoms, weights).unwrap()
}

/// `Σ π_ij |x_i − y_j|^p` on a 1-D plan.
pub fn direct_cost(mass: &[Vec<f64>], xs: &[f64], ys: &[f64], p: f64) -> f64 {
    let mut total = 0.0;
    for (i, row) in mass.iter().enumerate() {
        for (j, m) in row.iter().enumerate() {
            total += m * (xs[i] - ys[j]).abs().powf(p);
        }
    }
    total
}
