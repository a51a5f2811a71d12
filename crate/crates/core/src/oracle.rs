//! Exact discrete optimal transport.
//!
//! [`solve_exact`] runs the transportation simplex (north-west corner start,
//! MODI pricing, Bland's rule once degenerate pivots pile up) and certifies the
//! final plan with the dual potentials of its basis tree. It exists to provide
//! ground truth for the closed-form distances, so it refuses instances above
//! its capacity guard instead of approximating.

use serde::Serialize;

use crate::dist_core::{comonotone_ladder, DiscreteMeasure};
use crate::error::{Error, Result};

/// Tolerance for coupling margins and total mass.
pub const MARGIN_TOL: f64 = 1e-10;

/// Tolerance for the instance weights summing to one.
pub const WEIGHT_TOL: f64 = 1e-12;

/// Dual feasibility and complementary slackness tolerance, per unit of cost scale.
pub const CERTIFICATE_TOL: f64 = 1e-9;

/// Finitely supported measure on R^d.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointMeasure {
    atoms: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

impl PointMeasure {
    pub fn new(atoms: Vec<Vec<f64>>, weights: Vec<f64>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Construction(
                "a point measure needs at least one atom".into(),
            ));
        }
        if atoms.len() != weights.len() {
            return Err(Error::Construction(format!(
                "{} atoms but {} weights",
                atoms.len(),
                weights.len()
            )));
        }
        let dim = atoms[0].len();
        if dim == 0 || atoms.iter().any(|a| a.len() != dim) {
            return Err(Error::Construction(
                "atoms must share a positive dimension".into(),
            ));
        }
        if atoms.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Construction(
                "atom coordinates must be finite".into(),
            ));
        }
        if weights.iter().any(|&w| !(w.is_finite() && w > 0.0)) {
            return Err(Error::Construction(
                "weights must be strictly positive".into(),
            ));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > WEIGHT_TOL {
            return Err(Error::Domain(format!("weights sum to {total}, expected 1")));
        }
        Ok(PointMeasure { atoms, weights })
    }

    /// Measure on R with the given atoms and weights.
    pub fn new_1d(atoms: &[f64], weights: &[f64]) -> Result<Self> {
        Self::new(atoms.iter().map(|&a| vec![a]).collect(), weights.to_vec())
    }

    pub fn from_discrete(d: &DiscreteMeasure) -> Self {
        PointMeasure {
            atoms: d.atoms().iter().map(|&a| vec![a]).collect(),
            weights: d.weights().to_vec(),
        }
    }

    pub fn atoms(&self) -> &[Vec<f64>] {
        &self.atoms
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.atoms.first().map_or(0, Vec::len)
    }

    /// Coordinates of a one-dimensional measure.
    pub fn atoms_1d(&self) -> Result<Vec<f64>> {
        if self.dim() != 1 {
            return Err(Error::Domain(format!(
                "expected a measure on R, got dimension {}",
                self.dim()
            )));
        }
        Ok(self.atoms.iter().map(|a| a[0]).collect())
    }
}

/// A transport plan: nonnegative mass on the product of two finite supports
/// whose row and column sums match the two margins.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteCoupling {
    mu: PointMeasure,
    nu: PointMeasure,
    mass: Vec<Vec<f64>>,
}

impl DiscreteCoupling {
    /// Checks the shape, sign and margins of `mass` against `mu` and `nu`.
    pub fn new(mu: PointMeasure, nu: PointMeasure, mass: Vec<Vec<f64>>) -> Result<Self> {
        if mass.len() != mu.len() || mass.iter().any(|row| row.len() != nu.len()) {
            return Err(Error::Domain(format!(
                "mass matrix shape does not match {}×{} supports",
                mu.len(),
                nu.len()
            )));
        }
        if mass.iter().flatten().any(|&x| !(x.is_finite() && x >= 0.0)) {
            return Err(Error::Domain(
                "mass entries must be finite and nonnegative".into(),
            ));
        }
        let coupling = DiscreteCoupling { mu, nu, mass };
        let (rows, cols) = (coupling.row_sums(), coupling.col_sums());
        let row_err = rows
            .iter()
            .zip(coupling.mu.weights())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let col_err = cols
            .iter()
            .zip(coupling.nu.weights())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if row_err > MARGIN_TOL || col_err > MARGIN_TOL {
            return Err(Error::Domain(format!(
                "plan margins deviate from the declared measures (rows {row_err:e}, columns {col_err:e})"
            )));
        }
        Ok(coupling)
    }

    /// Plan between two measures on R.
    pub fn new_1d(mu: &DiscreteMeasure, nu: &DiscreteMeasure, mass: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(
            PointMeasure::from_discrete(mu),
            PointMeasure::from_discrete(nu),
            mass,
        )
    }

    /// Product (independence) coupling.
    pub fn independent(mu: PointMeasure, nu: PointMeasure) -> Result<Self> {
        let mass = mu
            .weights()
            .iter()
            .map(|a| nu.weights().iter().map(|b| a * b).collect())
            .collect();
        Self::new(mu, nu, mass)
    }

    pub fn mu(&self) -> &PointMeasure {
        &self.mu
    }

    pub fn nu(&self) -> &PointMeasure {
        &self.nu
    }

    pub fn mass(&self) -> &[Vec<f64>] {
        &self.mass
    }

    pub fn rows(&self) -> usize {
        self.mass.len()
    }

    pub fn cols(&self) -> usize {
        self.nu.len()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.mass.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<f64> {
        (0..self.cols())
            .map(|j| self.mass.iter().map(|r| r[j]).sum())
            .collect()
    }

    /// `Σ π_ij ‖x_i − y_j‖_q^p`.
    pub fn cost(&self, p: f64, q: f64) -> f64 {
        let mut total = 0.0;
        for (i, row) in self.mass.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0.0 {
                    total += m * ground_cost(&self.mu.atoms[i], &self.nu.atoms[j], p, q);
                }
            }
        }
        total
    }

    /// Convex combination `t · self + (1 − t) · other` of two plans over the same margins.
    pub fn mix(&self, other: &DiscreteCoupling, t: f64) -> Result<Self> {
        if self.mu != other.mu || self.nu != other.nu {
            return Err(Error::Domain(
                "plans to mix must share their margins".into(),
            ));
        }
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::Domain(format!("mixing weight {t} outside [0, 1]")));
        }
        let mass = self
            .mass
            .iter()
            .zip(&other.mass)
            .map(|(a, b)| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| t * x + (1.0 - t) * y)
                    .collect()
            })
            .collect();
        DiscreteCoupling::new(self.mu.clone(), self.nu.clone(), mass)
    }
}

/// `‖x − y‖_q^p`; `q = ∞` gives the max norm.
pub fn ground_cost(x: &[f64], y: &[f64], p: f64, q: f64) -> f64 {
    let norm = if x.len() == 1 {
        (x[0] - y[0]).abs()
    } else if q.is_infinite() {
        x.iter()
            .zip(y)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    } else if q == p {
        // ‖v‖_p^p without the root/power round trip
        return x.iter().zip(y).map(|(a, b)| (a - b).abs().powf(p)).sum();
    } else {
        x.iter()
            .zip(y)
            .map(|(a, b)| (a - b).abs().powf(q))
            .sum::<f64>()
            .powf(1.0 / q)
    };
    norm.powf(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Row,
    Col,
}

/// Requested margin of a plan, recomputed from the mass matrix.
pub fn marginalize(plan: &DiscreteCoupling, side: Side) -> PointMeasure {
    match side {
        Side::Row => PointMeasure {
            atoms: plan.mu.atoms.clone(),
            weights: plan.row_sums(),
        },
        Side::Col => PointMeasure {
            atoms: plan.nu.atoms.clone(),
            weights: plan.col_sums(),
        },
    }
}

/// Discrete transport problem with cost `‖x − y‖_q^p`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransportInstance {
    pub mu: PointMeasure,
    pub nu: PointMeasure,
    pub p: f64,
    pub q: f64,
}

impl TransportInstance {
    pub fn new(mu: PointMeasure, nu: PointMeasure, p: f64, q: f64) -> Result<Self> {
        if !(p >= 1.0 && p.is_finite()) {
            return Err(Error::Domain(format!(
                "cost order p = {p} must be a finite real ≥ 1"
            )));
        }
        if !(q >= 1.0) {
            return Err(Error::Domain(format!("norm order q = {q} must be ≥ 1")));
        }
        if mu.dim() != nu.dim() {
            return Err(Error::Domain(format!(
                "measures live in different dimensions ({} vs {})",
                mu.dim(),
                nu.dim()
            )));
        }
        Ok(TransportInstance { mu, nu, p, q })
    }

    /// One-dimensional instance with `q = p`.
    pub fn from_1d(mu: &DiscreteMeasure, nu: &DiscreteMeasure, p: f64) -> Result<Self> {
        Self::new(
            PointMeasure::from_discrete(mu),
            PointMeasure::from_discrete(nu),
            p,
            p,
        )
    }

    pub fn cost_matrix(&self) -> Vec<Vec<f64>> {
        self.mu
            .atoms
            .iter()
            .map(|x| {
                self.nu
                    .atoms
                    .iter()
                    .map(|y| ground_cost(x, y, self.p, self.q))
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleLimits {
    pub max_rows: usize,
    pub max_cols: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_rows: 64,
            max_cols: 64,
        }
    }
}

/// Dual potentials of the optimal basis and the measured optimality residuals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub row_potentials: Vec<f64>,
    pub col_potentials: Vec<f64>,
    /// `max(u_i + v_j − c_ij, 0)` over all cells.
    pub max_dual_violation: f64,
    /// `max |u_i + v_j − c_ij|` over the support of the plan.
    pub max_slackness_gap: f64,
    /// Primal value minus dual value `Σ μ_i u_i + Σ ν_j v_j`.
    pub duality_gap: f64,
    pub pivots: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleSolution {
    pub value: f64,
    pub plan: DiscreteCoupling,
    pub certificate: Certificate,
}

/// Exact optimal transport under the default capacity guard.
pub fn solve_exact(instance: &TransportInstance) -> Result<OracleSolution> {
    solve_exact_with(instance, OracleLimits::default())
}

pub fn solve_exact_with(
    instance: &TransportInstance,
    limits: OracleLimits,
) -> Result<OracleSolution> {
    let (m, n) = (instance.mu.len(), instance.nu.len());
    if m > limits.max_rows || n > limits.max_cols {
        return Err(Error::Capacity(format!(
            "{m}×{n} instance exceeds the oracle guard of {}×{}",
            limits.max_rows, limits.max_cols
        )));
    }
    let cost = instance.cost_matrix();
    let mut tableau = Tableau::north_west(instance.mu.weights(), instance.nu.weights(), cost);
    let pivots = tableau.optimize()?;

    let (u, v) = tableau.potentials();
    let scale = tableau.cost_scale().max(1.0);
    let mut max_dual_violation: f64 = 0.0;
    let mut max_slackness_gap: f64 = 0.0;
    for i in 0..m {
        for j in 0..n {
            let slack = u[i] + v[j] - tableau.cost[i][j];
            max_dual_violation = max_dual_violation.max(slack);
            if tableau.flow[i][j] > 0.0 {
                max_slackness_gap = max_slackness_gap.max(slack.abs());
            }
        }
    }
    if max_dual_violation > CERTIFICATE_TOL * scale || max_slackness_gap > CERTIFICATE_TOL * scale {
        return Err(Error::Certificate(format!(
            "dual violation {max_dual_violation:e}, slackness gap {max_slackness_gap:e}"
        )));
    }

    let value: f64 = tableau
        .flow
        .iter()
        .zip(&tableau.cost)
        .map(|(f, c)| f.iter().zip(c).map(|(a, b)| a * b).sum::<f64>())
        .sum();
    let dual: f64 = u
        .iter()
        .zip(instance.mu.weights())
        .map(|(a, b)| a * b)
        .sum::<f64>()
        + v.iter()
            .zip(instance.nu.weights())
            .map(|(a, b)| a * b)
            .sum::<f64>();
    let plan = DiscreteCoupling::new(instance.mu.clone(), instance.nu.clone(), tableau.flow)?;
    Ok(OracleSolution {
        value,
        plan,
        certificate: Certificate {
            row_potentials: u,
            col_potentials: v,
            max_dual_violation,
            max_slackness_gap,
            duality_gap: value - dual,
            pivots,
        },
    })
}

/// Transportation simplex state: flows plus a spanning-tree basis of `m + n − 1` cells.
struct Tableau {
    cost: Vec<Vec<f64>>,
    flow: Vec<Vec<f64>>,
    basic: Vec<Vec<bool>>,
    m: usize,
    n: usize,
}

impl Tableau {
    fn north_west(supply: &[f64], demand: &[f64], cost: Vec<Vec<f64>>) -> Self {
        let (m, n) = (supply.len(), demand.len());
        let mut flow = vec![vec![0.0; n]; m];
        let mut basic = vec![vec![false; n]; m];
        let mut rs = supply.to_vec();
        let mut cs = demand.to_vec();
        let (mut i, mut j) = (0, 0);
        loop {
            basic[i][j] = true;
            if i + 1 == m && j + 1 == n {
                flow[i][j] = rs[i].max(0.0);
                break;
            }
            let x = rs[i].min(cs[j]).max(0.0);
            flow[i][j] = x;
            rs[i] -= x;
            cs[j] -= x;
            // Exactly one index moves per step, so the basis stays a spanning tree.
            if j + 1 == n || (i + 1 < m && rs[i] <= cs[j]) {
                i += 1;
            } else {
                j += 1;
            }
        }
        Tableau {
            cost,
            flow,
            basic,
            m,
            n,
        }
    }

    fn cost_scale(&self) -> f64 {
        self.cost
            .iter()
            .flatten()
            .fold(0.0, |a: f64, &c| a.max(c.abs()))
    }

    fn basis_adjacency(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut rows = vec![Vec::new(); self.m];
        let mut cols = vec![Vec::new(); self.n];
        for i in 0..self.m {
            for j in 0..self.n {
                if self.basic[i][j] {
                    rows[i].push(j);
                    cols[j].push(i);
                }
            }
        }
        (rows, cols)
    }

    /// Potentials with `u_0 = 0` and `u_i + v_j = c_ij` on the basis.
    fn potentials(&self) -> (Vec<f64>, Vec<f64>) {
        let (rows, cols) = self.basis_adjacency();
        let mut u = vec![f64::NAN; self.m];
        let mut v = vec![f64::NAN; self.n];
        u[0] = 0.0;
        let mut stack = vec![(true, 0usize)];
        while let Some((is_row, k)) = stack.pop() {
            if is_row {
                for &j in &rows[k] {
                    if v[j].is_nan() {
                        v[j] = self.cost[k][j] - u[k];
                        stack.push((false, j));
                    }
                }
            } else {
                for &i in &cols[k] {
                    if u[i].is_nan() {
                        u[i] = self.cost[i][k] - v[k];
                        stack.push((true, i));
                    }
                }
            }
        }
        (u, v)
    }

    /// Basis path from row `r` to column `c`, as cells in walking order.
    fn tree_path(&self, r: usize, c: usize) -> Vec<(usize, usize)> {
        let (rows, cols) = self.basis_adjacency();
        // Nodes: rows are 0..m, columns are m..m+n.
        let total = self.m + self.n;
        let mut parent = vec![usize::MAX; total];
        parent[r] = r;
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(node) = queue.pop_front() {
            let neighbours: Vec<usize> = if node < self.m {
                rows[node].iter().map(|&j| self.m + j).collect()
            } else {
                cols[node - self.m].clone()
            };
            for next in neighbours {
                if parent[next] == usize::MAX {
                    parent[next] = node;
                    queue.push_back(next);
                }
            }
        }
        let mut path = Vec::new();
        let mut node = self.m + c;
        while node != r {
            let prev = parent[node];
            let cell = if node < self.m {
                (node, prev - self.m)
            } else {
                (prev, node - self.m)
            };
            path.push(cell);
            node = prev;
        }
        path.reverse();
        path
    }

    fn optimize(&mut self) -> Result<usize> {
        let scale = self.cost_scale().max(1.0);
        let tol = 1e-12 * scale;
        let max_pivots = 50_000 + 50 * self.m * self.n;
        let bland_after = self.m * self.n + 1;
        let mut degenerate_streak = 0usize;
        let mut pivots = 0usize;

        loop {
            let (u, v) = self.potentials();
            let mut entering: Option<(usize, usize)> = None;
            let mut best = -tol;
            'scan: for i in 0..self.m {
                for j in 0..self.n {
                    if self.basic[i][j] {
                        continue;
                    }
                    let reduced = self.cost[i][j] - u[i] - v[j];
                    if reduced < best {
                        entering = Some((i, j));
                        best = reduced;
                        if degenerate_streak >= bland_after {
                            break 'scan;
                        }
                    }
                }
            }
            let Some((ei, ej)) = entering else {
                return Ok(pivots);
            };
            if pivots >= max_pivots {
                return Err(Error::Certificate(format!(
                    "no optimal basis after {pivots} pivots"
                )));
            }

            let path = self.tree_path(ei, ej);
            // Cells at even positions of the path lose mass, odd positions gain it.
            let mut leave = None;
            let mut theta = f64::INFINITY;
            for &(i, j) in path.iter().step_by(2) {
                let f = self.flow[i][j];
                let better = match leave {
                    None => true,
                    Some((li, lj)) => f < theta || (f == theta && (i, j) < (li, lj)),
                };
                if better {
                    theta = f;
                    leave = Some((i, j));
                }
            }
            let (li, lj) = leave.expect("a basis cycle always has a losing cell");
            for (k, &(i, j)) in path.iter().enumerate() {
                if k % 2 == 0 {
                    self.flow[i][j] = (self.flow[i][j] - theta).max(0.0);
                } else {
                    self.flow[i][j] += theta;
                }
            }
            self.flow[ei][ej] = theta;
            self.flow[li][lj] = 0.0;
            self.basic[li][lj] = false;
            self.basic[ei][ej] = true;

            pivots += 1;
            if theta > 0.0 {
                degenerate_streak = 0;
            } else {
                degenerate_streak += 1;
            }
        }
    }
}

/// Largest margin size accepted by [`enumerate_extreme_couplings`].
pub const MAX_ENUMERATION_SIDE: usize = 4;

/// Every vertex of the transportation polytope with margins `mu`, `nu`.
///
/// Vertices are the feasible plans supported on a spanning tree of the complete
/// bipartite graph; each spanning tree is visited and its unique flow kept when
/// nonnegative. Degenerate vertices reached from several trees appear once.
pub fn enumerate_extreme_couplings(
    mu: &PointMeasure,
    nu: &PointMeasure,
) -> Result<Vec<DiscreteCoupling>> {
    let (m, n) = (mu.len(), nu.len());
    if m > MAX_ENUMERATION_SIDE || n > MAX_ENUMERATION_SIDE {
        return Err(Error::Capacity(format!(
            "vertex enumeration is limited to {MAX_ENUMERATION_SIDE}×{MAX_ENUMERATION_SIDE}, got {m}×{n}"
        )));
    }
    let cells: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut found: Vec<Vec<Vec<f64>>> = Vec::new();
    let mut chosen = Vec::with_capacity(m + n - 1);
    let mut forest = UnionFind::new(m + n);
    spanning_trees(
        &cells,
        0,
        m,
        m + n - 1,
        &mut chosen,
        &mut forest,
        &mut |tree| {
            if let Some(mass) = tree_flow(tree, mu.weights(), nu.weights()) {
                if !found.iter().any(|seen| same_plan(seen, &mass)) {
                    found.push(mass);
                }
            }
        },
    );
    found
        .into_iter()
        .map(|mass| DiscreteCoupling::new(mu.clone(), nu.clone(), mass))
        .collect()
}

fn same_plan(a: &[Vec<f64>], b: &[Vec<f64>]) -> bool {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .all(|(x, y)| (x - y).abs() <= 1e-12)
}

#[derive(Clone)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }
}

fn spanning_trees<F>(
    cells: &[(usize, usize)],
    start: usize,
    m: usize,
    size: usize,
    chosen: &mut Vec<(usize, usize)>,
    forest: &mut UnionFind,
    visit: &mut F,
) where
    F: FnMut(&[(usize, usize)]),
{
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    let needed = size - chosen.len();
    for k in start..cells.len() {
        if cells.len() - k < needed {
            break;
        }
        let (i, j) = cells[k];
        let (a, b) = (forest.find(i), forest.find(m + j));
        if a == b {
            continue;
        }
        let saved = forest.clone();
        forest.parent[a] = b;
        chosen.push((i, j));
        spanning_trees(cells, k + 1, m, size, chosen, forest, visit);
        chosen.pop();
        *forest = saved;
    }
}

/// Unique flow on a spanning tree meeting the margins, found by peeling
/// leaves. `None` when some tree edge would carry negative mass.
fn tree_flow(tree: &[(usize, usize)], supply: &[f64], demand: &[f64]) -> Option<Vec<Vec<f64>>> {
    let (m, n) = (supply.len(), demand.len());
    let mut mass = vec![vec![0.0; n]; m];
    let mut remaining: Vec<f64> = supply.iter().chain(demand).copied().collect();
    let mut degree = vec![0usize; m + n];
    for &(i, j) in tree {
        degree[i] += 1;
        degree[m + j] += 1;
    }
    let mut done = vec![false; tree.len()];
    for _ in 0..tree.len() {
        let (e, leaf) = tree
            .iter()
            .enumerate()
            .filter(|(e, _)| !done[*e])
            .find_map(|(e, &(i, j))| {
                if degree[i] == 1 {
                    Some((e, i))
                } else if degree[m + j] == 1 {
                    Some((e, m + j))
                } else {
                    None
                }
            })?;
        let (i, j) = tree[e];
        let other = if leaf == i { m + j } else { i };
        let x = remaining[leaf];
        if x < -1e-12 {
            return None;
        }
        let x = x.max(0.0);
        mass[i][j] = x;
        remaining[leaf] = 0.0;
        remaining[other] -= x;
        degree[i] -= 1;
        degree[m + j] -= 1;
        done[e] = true;
    }
    Some(mass)
}

/// Comonotone plan on R: pairs the cumulative-weight intervals of `mu` and
/// `nu` in increasing order.
pub fn monotone_plan_1d(mu: &DiscreteMeasure, nu: &DiscreteMeasure) -> DiscreteCoupling {
    let mut mass = vec![vec![0.0; nu.len()]; mu.len()];
    for step in comonotone_ladder(mu, nu) {
        mass[step.row][step.col] += step.mass;
    }
    DiscreteCoupling {
        mu: PointMeasure::from_discrete(mu),
        nu: PointMeasure::from_discrete(nu),
        mass,
    }
}
