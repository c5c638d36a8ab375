//! Depth-first integer-point enumeration with interval propagation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::Matrix;
use crate::rational::{self, Rational};

/// Below this many partial assignments the search stays sequential.
const MIN_FRONTIER: usize = 32;

struct Search {
    n: usize,
    rhs: Vec<i128>,
    /// `(row, coeff)` for every nonzero entry of column `j`.
    by_var: Vec<Vec<(usize, i128)>>,
    /// `suffix_min[j][r]` = Σ_{i ≥ j} min over the box of `a_ri x_i`.
    suffix_min: Vec<Vec<i128>>,
    lo: Vec<i128>,
    hi: Vec<i128>,
}

#[derive(Clone)]
struct State {
    depth: usize,
    /// Σ_{i < depth} a_ri x_i per row.
    partial: Vec<i128>,
}

pub(crate) fn count_points(
    a: &Matrix,
    b: &[Rational],
    bbox: &[(Rational, Rational)],
    exec: Exec,
) -> Result<u64> {
    let n = a.cols();
    let m = a.rows();
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for (l, h) in bbox {
        let l = rational::ceil_i128(l).ok_or(Error::Overflow("integer box"))?;
        let h = rational::floor_i128(h).ok_or(Error::Overflow("integer box"))?;
        if l > h {
            return Ok(0);
        }
        lo.push(l);
        hi.push(h);
    }
    if n == 0 {
        return Ok(u64::from(b.iter().all(|v| !v.is_negative())));
    }

    // scale each row to integer coefficients
    let mut by_var = vec![Vec::new(); n];
    let mut rhs = Vec::with_capacity(m);
    for r in 0..m {
        let row = a.row(r);
        let scale = row
            .iter()
            .chain(std::iter::once(&b[r]))
            .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
        let scale = Rational::from_integer(scale);
        for (j, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let c = to_small(&(v * &scale))?;
            by_var[j].push((r, c));
        }
        rhs.push(to_small(&(&b[r] * &scale))?);
    }

    let mut suffix_min = vec![vec![0i128; m]; n + 1];
    for j in (0..n).rev() {
        suffix_min[j] = suffix_min[j + 1].clone();
        for &(r, c) in &by_var[j] {
            suffix_min[j][r] += (c * lo[j]).min(c * hi[j]);
        }
    }

    let search = Search {
        n,
        rhs,
        by_var,
        suffix_min,
        lo,
        hi,
    };
    let root = State {
        depth: 0,
        partial: vec![0; m],
    };
    if !search.consistent(&root) {
        return Ok(0);
    }

    let mut frontier = vec![root];
    if exec.is_parallel() {
        while frontier.len() < MIN_FRONTIER && frontier.iter().any(|s| s.depth < n) {
            let mut next = Vec::new();
            for s in frontier {
                if s.depth == n {
                    next.push(s);
                } else {
                    search.expand(&s, &mut |child| next.push(child));
                }
            }
            frontier = next;
        }
    }
    let counts = exec.map(frontier, |s| search.count_from(s));
    counts
        .into_iter()
        .try_fold(0u64, |acc, c| acc.checked_add(c))
        .ok_or(Error::Overflow("integer-point count"))
}

fn to_small(v: &Rational) -> Result<i128> {
    debug_assert!(v.is_integer());
    v.to_integer()
        .to_i64()
        .map(i128::from)
        .ok_or(Error::Overflow("constraint coefficients"))
}

impl Search {
    /// Every row must still be satisfiable with the unassigned box minima.
    fn consistent(&self, s: &State) -> bool {
        let mins = &self.suffix_min[s.depth];
        (0..self.rhs.len()).all(|r| s.partial[r] + mins[r] <= self.rhs[r])
    }

    fn range(&self, s: &State) -> (i128, i128) {
        let j = s.depth;
        let mut lo = self.lo[j];
        let mut hi = self.hi[j];
        let rest = &self.suffix_min[j + 1];
        for &(r, c) in &self.by_var[j] {
            let room = self.rhs[r] - s.partial[r] - rest[r];
            if c > 0 {
                hi = hi.min(Integer::div_floor(&room, &c));
            } else {
                lo = lo.max(div_ceil_neg(room, c));
            }
        }
        (lo, hi)
    }

    fn expand(&self, s: &State, push: &mut dyn FnMut(State)) {
        let j = s.depth;
        let (lo, hi) = self.range(s);
        for v in lo..=hi {
            let mut child = s.clone();
            child.depth = j + 1;
            for &(r, c) in &self.by_var[j] {
                child.partial[r] += c * v;
            }
            if self.consistent(&child) {
                push(child);
            }
        }
    }

    fn count_from(&self, s: State) -> u64 {
        if s.depth == self.n {
            return 1;
        }
        let mut total = 0;
        let mut stack = vec![s];
        while let Some(s) = stack.pop() {
            if s.depth == self.n {
                total += 1;
                continue;
            }
            if s.depth + 1 == self.n {
                let (lo, hi) = self.range(&s);
                if hi >= lo {
                    total += (hi - lo + 1) as u64;
                }
                continue;
            }
            self.expand(&s, &mut |c| stack.push(c));
        }
        total
    }
}

/// Least `x` with `c·x ≤ room`, for `c < 0`.
fn div_ceil_neg(room: i128, c: i128) -> i128 {
    debug_assert!(c < 0);
    Integer::div_ceil(&-room, &-c)
}
