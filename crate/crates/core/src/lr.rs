//! Littlewood–Richardson coefficients by two independent routes: skew
//! tableaux with the lattice-word condition, and integer points of the hive
//! polytope. Positivity is decided by LP feasibility of the hive polytope.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::Matrix;
use crate::partitions::Partition;
use crate::polytope::{fit_quasipolynomial, FitOptions, Polytope, QuasiPolynomial};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LrQuery {
    pub alpha: Partition,
    pub beta: Partition,
    pub lambda: Partition,
}

impl LrQuery {
    pub fn new(alpha: Partition, beta: Partition, lambda: Partition) -> LrQuery {
        LrQuery { alpha, beta, lambda }
    }

    pub fn sizes_match(&self) -> bool {
        self.lambda.size() == self.alpha.size() + self.beta.size()
    }

    pub fn scale(&self, k: u32) -> LrQuery {
        LrQuery {
            alpha: self.alpha.scale(k),
            beta: self.beta.scale(k),
            lambda: self.lambda.scale(k),
        }
    }

    /// Side length of the hive triangle.
    pub fn hive_side(&self) -> usize {
        self.alpha.len().max(self.beta.len()).max(self.lambda.len()).max(1)
    }
}

/// Vertex `(i, j)` of the side-`n` triangle (`i + j ≤ n`), numbered row by row.
fn vertex_index(n: usize, i: usize, j: usize) -> usize {
    // rows j = 0..: row j has n + 1 − j vertices
    let before: usize = (0..j).map(|r| n + 1 - r).sum();
    before + i
}

fn partial_sums(p: &Partition, n: usize) -> Vec<i64> {
    let mut acc = 0i64;
    let mut out = vec![0];
    for x in p.padded(n) {
        acc += i64::from(x);
        out.push(acc);
    }
    out
}

/// The hive polytope on a triangle of side `n`. Vertices `(i, j)` with
/// `i + j ≤ n` carry labels; the edge `(0,0)→(n,0)` is fixed to the partial
/// sums of α, the edge `(n,0)→(0,n)` continues with those of β, and the edge
/// `(0,0)→(0,n)` carries those of λ. Every unit rhombus must be concave: the
/// labels at its obtuse corners sum to at least those at its acute corners.
pub fn hive_polytope(q: &LrQuery) -> Result<Polytope> {
    if !q.sizes_match() {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but |α| + |β| = {}",
            q.lambda.size(),
            q.alpha.size() + q.beta.size()
        )));
    }
    let n = q.hive_side();
    let nv = (n + 1) * (n + 2) / 2;
    let v = |i: usize, j: usize| vertex_index(n, i, j);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();

    // acute + acute − obtuse − obtuse ≤ 0
    let mut rhombus = |acute: [usize; 2], obtuse: [usize; 2]| {
        let mut r = vec![int(0); nv];
        for a in acute {
            r[a] += int(1);
        }
        for o in obtuse {
            r[o] -= int(1);
        }
        rows.push(r);
        rhs.push(int(0));
    };
    // one rhombus of each orientation around the down triangle
    // (i+1,j),(i,j+1),(i+1,j+1)
    for j in 0..n.saturating_sub(1) {
        for i in 0..n - 1 - j {
            rhombus([v(i, j), v(i + 1, j + 1)], [v(i + 1, j), v(i, j + 1)]);
            rhombus([v(i, j + 1), v(i + 2, j)], [v(i + 1, j), v(i + 1, j + 1)]);
            rhombus([v(i + 1, j), v(i, j + 2)], [v(i, j + 1), v(i + 1, j + 1)]);
        }
    }

    let alpha = partial_sums(&q.alpha, n);
    let beta = partial_sums(&q.beta, n);
    let lambda = partial_sums(&q.lambda, n);
    let total_alpha = alpha[n];
    let mut fixed: Vec<(usize, i64)> = Vec::new();
    for i in 0..=n {
        fixed.push((v(i, 0), alpha[i]));
    }
    for j in 1..=n {
        fixed.push((v(n - j, j), total_alpha + beta[j]));
    }
    for j in 1..n {
        fixed.push((v(0, j), lambda[j]));
    }
    // the corner (0, n) is fixed twice; the two values agree since sizes match
    for (idx, val) in fixed {
        let mut up = vec![int(0); nv];
        up[idx] = int(1);
        let down: Vec<Rational> = up.iter().map(|x| -x).collect();
        rows.push(up);
        rhs.push(int(val));
        rows.push(down);
        rhs.push(int(-val));
    }
    Polytope::new(Matrix::from_rows(rows)?, rhs)
}

/// Number of Littlewood–Richardson tableaux: semistandard fillings of λ/α
/// with content β whose reverse reading word is a lattice word.
pub fn lr_tableau_count(q: &LrQuery) -> u64 {
    if !q.sizes_match() || !q.alpha.is_contained_in(&q.lambda) {
        return 0;
    }
    let rows = q.lambda.len();
    let alpha: Vec<usize> = q.alpha.padded(rows).iter().map(|&x| x as usize).collect();
    let lambda: Vec<usize> = q.lambda.parts().iter().map(|&x| x as usize).collect();
    // reading order: rows top to bottom, each right to left
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (alpha[i]..lambda[i]).rev().map(move |c| (i, c)))
        .collect();
    let beta: Vec<u32> = q.beta.parts().to_vec();
    let mut grid: Vec<Vec<u32>> = lambda.iter().map(|&l| vec![0; l]).collect();
    let mut used = vec![0u32; beta.len() + 1];
    let mut total = 0;
    lr_fill(0, &cells, &alpha, &beta, &mut grid, &mut used, &mut total);
    total
}

fn lr_fill(
    k: usize,
    cells: &[(usize, usize)],
    alpha: &[usize],
    beta: &[u32],
    grid: &mut Vec<Vec<u32>>,
    used: &mut Vec<u32>,
    total: &mut u64,
) {
    if k == cells.len() {
        *total += 1;
        return;
    }
    let (i, c) = cells[k];
    // weakly increasing rows: bounded by the already placed right neighbour
    let mut hi = beta.len() as u32;
    if c + 1 < grid[i].len() {
        hi = hi.min(grid[i][c + 1]);
    }
    // strictly increasing columns against a skew cell above
    let mut lo = 1;
    if i > 0 && c >= alpha[i - 1] {
        lo = grid[i - 1][c] + 1;
    }
    for val in lo..=hi {
        let vi = val as usize;
        if used[vi] >= beta[vi - 1] {
            continue;
        }
        if vi > 1 && used[vi] + 1 > used[vi - 1] {
            continue;
        }
        used[vi] += 1;
        grid[i][c] = val;
        lr_fill(k + 1, cells, alpha, beta, grid, used, total);
        grid[i][c] = 0;
        used[vi] -= 1;
    }
}

pub fn lr_hive_count(q: &LrQuery) -> Result<u64> {
    lr_hive_count_with(q, Exec::default())
}

pub fn lr_hive_count_with(q: &LrQuery, exec: Exec) -> Result<u64> {
    if !q.sizes_match() {
        return Ok(0);
    }
    hive_polytope(q)?.count_integer_points_with(exec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrCoefficient {
    pub tableau: u64,
    pub hive: u64,
    pub agree: bool,
}

impl LrCoefficient {
    pub fn value(&self) -> u64 {
        self.tableau
    }
}

pub fn lr_coefficient(q: &LrQuery) -> Result<LrCoefficient> {
    lr_coefficient_with(q, Exec::default())
}

/// Computes the coefficient both ways and fails on disagreement.
pub fn lr_coefficient_with(q: &LrQuery, exec: Exec) -> Result<LrCoefficient> {
    let tableau = lr_tableau_count(q);
    let hive = lr_hive_count_with(q, exec)?;
    if tableau != hive {
        return Err(Error::OracleMismatch(format!(
            "c^{}_{{{},{}}}: tableau rule gives {tableau}, hive count gives {hive}",
            q.lambda, q.alpha, q.beta
        )));
    }
    Ok(LrCoefficient {
        tableau,
        hive,
        agree: true,
    })
}

/// Positivity via LP feasibility of the hive polytope, without enumeration.
pub fn lr_positive(q: &LrQuery) -> bool {
    if !q.sizes_match() {
        return false;
    }
    hive_polytope(q).map(|p| p.feasible()).unwrap_or(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StretchSeries {
    pub query: LrQuery,
    /// `values[k-1]` = `c^{kλ}_{kα,kβ}`.
    pub values: Vec<u64>,
    pub fit: Option<QuasiPolynomial>,
}

pub fn lr_stretch(q: &LrQuery, max_k: u32, opts: FitOptions) -> Result<StretchSeries> {
    lr_stretch_with(q, max_k, opts, Exec::default())
}

/// Hive counts at `k = 1..=max_k` plus a quasi-polynomial fit.
pub fn lr_stretch_with(q: &LrQuery, max_k: u32, opts: FitOptions, exec: Exec) -> Result<StretchSeries> {
    if max_k < 4 {
        return Err(Error::Dimension(format!("stretch needs K ≥ 4, got {max_k}")));
    }
    if opts.holdout < 2 {
        return Err(Error::Dimension("stretch fits need at least 2 holdout points".into()));
    }
    let values = if q.sizes_match() {
        let base = hive_polytope(q)?;
        exec.try_map((1..=max_k).collect(), |k| {
            let scaled = hive_polytope(&q.scale(k))?;
            // k-scaled labels give the k-th dilation of the same polytope
            if scaled != base.dilate(&int(i64::from(k))) {
                return Err(Error::Verification(format!("hive at k = {k} is not the k-th dilation")));
            }
            scaled.count_integer_points_with(Exec::Sequential)
        })?
    } else {
        vec![0; max_k as usize]
    };
    let signed: Vec<i64> = values.iter().map(|&v| v as i64).collect();
    let fit = fit_quasipolynomial(&signed, opts)?;
    Ok(StretchSeries {
        query: q.clone(),
        values,
        fit: Some(fit),
    })
}
