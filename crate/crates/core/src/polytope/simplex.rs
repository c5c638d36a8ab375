//! Two-phase tableau simplex over exact rationals with Bland's rule.
//!
//! Solves `min c·x` subject to `Ax ≤ b` with `x` free. Free variables are split
//! as `x = x⁺ − x⁻`; every row gets a slack, and rows with a negative
//! right-hand side get an artificial variable for phase one.

use num_traits::{One, Signed, Zero};

use crate::linalg::Matrix;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Unbounded,
}

/// A feasible basis for `{x : Ax ≤ b}`, ready for any number of objectives.
#[derive(Clone, Debug)]
pub struct Lp {
    n: usize,
    /// Rows of `[B⁻¹A | B⁻¹b]` over the structural and slack columns.
    tableau: Vec<Vec<Rational>>,
    basis: Vec<usize>,
}

impl Lp {
    /// Runs phase one. Returns `None` when the system is infeasible.
    pub fn new(a: &Matrix, b: &[Rational]) -> Option<Lp> {
        let m = a.rows();
        let n = a.cols();
        let structural = 2 * n + m;
        let artificial_rows: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
        let width = structural + artificial_rows.len() + 1;

        let mut tableau = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_art = structural;
        for i in 0..m {
            let mut row = vec![Rational::zero(); width];
            let neg = b[i].is_negative();
            for j in 0..n {
                let v = &a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                row[j] = if neg { -v } else { v.clone() };
                row[n + j] = if neg { v.clone() } else { -v };
            }
            row[2 * n + i] = if neg { -Rational::one() } else { Rational::one() };
            row[width - 1] = b[i].abs();
            if neg {
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            } else {
                basis.push(2 * n + i);
            }
            tableau.push(row);
        }

        let mut t = Tableau { rows: tableau, basis };
        if !artificial_rows.is_empty() {
            let mut cost = vec![Rational::zero(); width - 1];
            for c in cost.iter_mut().skip(structural) {
                *c = Rational::one();
            }
            let value = match t.optimize(&cost, width - 1) {
                Some(v) => v,
                None => unreachable!("phase one objective is bounded below by zero"),
            };
            if !value.is_zero() {
                return None;
            }
            t.expel_artificials(structural);
        }
        let rows = t
            .rows
            .into_iter()
            .map(|mut r| {
                let rhs = r.pop().expect("rhs column");
                r.truncate(structural);
                r.push(rhs);
                r
            })
            .collect();
        Some(Lp {
            n,
            tableau: rows,
            basis: t.basis,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// The basic feasible solution found by phase one.
    pub fn feasible_point(&self) -> Vec<Rational> {
        self.point_of(&self.tableau, &self.basis)
    }

    pub fn minimize(&self, c: &[Rational]) -> LpOutcome {
        assert_eq!(c.len(), self.n, "objective length");
        let width = self.tableau.first().map_or(2 * self.n + 1, Vec::len);
        let mut cost = vec![Rational::zero(); width - 1];
        for j in 0..self.n {
            cost[j] = c[j].clone();
            cost[self.n + j] = -&c[j];
        }
        let mut t = Tableau {
            rows: self.tableau.clone(),
            basis: self.basis.clone(),
        };
        match t.optimize(&cost, width - 1) {
            Some(value) => LpOutcome::Optimal {
                value,
                point: self.point_of(&t.rows, &t.basis),
            },
            None => LpOutcome::Unbounded,
        }
    }

    pub fn maximize(&self, c: &[Rational]) -> LpOutcome {
        let neg: Vec<Rational> = c.iter().map(|v| -v).collect();
        match self.minimize(&neg) {
            LpOutcome::Optimal { value, point } => LpOutcome::Optimal { value: -value, point },
            LpOutcome::Unbounded => LpOutcome::Unbounded,
        }
    }

    fn point_of(&self, rows: &[Vec<Rational>], basis: &[usize]) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.n];
        for (row, &bv) in rows.iter().zip(basis) {
            let rhs = row.last().expect("rhs column");
            if bv < self.n {
                x[bv] += rhs;
            } else if bv < 2 * self.n {
                x[bv - self.n] -= rhs;
            }
        }
        x
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
}

impl Tableau {
    /// Minimizes `cost` over the first `ncols` columns; `None` if unbounded.
    fn optimize(&mut self, cost: &[Rational], ncols: usize) -> Option<Rational> {
        loop {
            let reduced = self.reduced_costs(cost, ncols);
            // Bland: lowest-index improving column
            let Some(enter) = (0..ncols).find(|&j| reduced[j].is_negative()) else {
                return Some(self.objective(cost));
            };
            let leave = self.ratio_test(enter)?;
            self.pivot(leave, enter);
        }
    }

    fn reduced_costs(&self, cost: &[Rational], ncols: usize) -> Vec<Rational> {
        let mut r: Vec<Rational> = cost[..ncols].to_vec();
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[bv];
            if cb.is_zero() {
                continue;
            }
            for j in 0..ncols {
                if !row[j].is_zero() {
                    r[j] -= cb * &row[j];
                }
            }
        }
        r
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.rows
            .iter()
            .zip(&self.basis)
            .fold(Rational::zero(), |acc, (row, &bv)| acc + &cost[bv] * row.last().expect("rhs"))
    }

    fn ratio_test(&self, enter: usize) -> Option<usize> {
        let mut best: Option<(Rational, usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = row.last().expect("rhs") / &row[enter];
            let better = match &best {
                None => true,
                Some((r, _, bv)) => ratio < *r || (ratio == *r && self.basis[i] < *bv),
            };
            if better {
                best = Some((ratio, i, self.basis[i]));
            }
        }
        best.map(|(_, i, _)| i)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Pivots zero-level artificials out of the basis and drops redundant rows.
    fn expel_artificials(&mut self, structural: usize) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= structural {
                match (0..structural).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn system(a: &[Vec<i64>], b: &[i64]) -> (Matrix, Vec<Rational>) {
        (Matrix::from_i64(a), b.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn infeasible_interval() {
        let (a, b) = system(&[vec![1], vec![-1]], &[-1, 0]);
        assert!(Lp::new(&a, &b).is_none());
    }

    #[test]
    fn box_extremes() {
        let (a, b) = system(&[vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]], &[3, -1, 2, 2]);
        let lp = Lp::new(&a, &b).unwrap();
        match lp.minimize(&[int(1), int(1)]) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, int(-1));
                assert_eq!(point, vec![int(1), int(-2)]);
            }
            LpOutcome::Unbounded => panic!("bounded"),
        }
        match lp.maximize(&[int(1), int(0)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(3)),
            LpOutcome::Unbounded => panic!("bounded"),
        }
    }

    #[test]
    fn half_plane_unbounded() {
        let (a, b) = system(&[vec![1, 1]], &[1]);
        let lp = Lp::new(&a, &b).unwrap();
        assert_eq!(lp.minimize(&[int(1), int(0)]), LpOutcome::Unbounded);
    }

    #[test]
    fn fractional_optimum() {
        // 3x ≤ 1, 3x ≥ 1
        let (a, b) = system(&[vec![3], vec![-3]], &[1, -1]);
        let lp = Lp::new(&a, &b).unwrap();
        assert_eq!(lp.feasible_point(), vec![frac(1, 3)]);
    }

    #[test]
    fn degenerate_redundant_equalities() {
        // x + y = 1 written twice, x,y ≥ 0
        let (a, b) = system(
            &[vec![1, 1], vec![-1, -1], vec![1, 1], vec![-1, -1], vec![-1, 0], vec![0, -1]],
            &[1, -1, 1, -1, 0, 0],
        );
        let lp = Lp::new(&a, &b).unwrap();
        match lp.maximize(&[int(1), int(0)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(1)),
            LpOutcome::Unbounded => panic!("bounded"),
        }
    }
}
