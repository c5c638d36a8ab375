//! Rational polyhedra `{x : Ax ≤ b}`: feasibility, vertices, integer-point
//! counting and Ehrhart counting functions of parametrized families.

mod count;
mod quasi;
pub mod simplex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::Matrix;
use crate::rational::{self, Rational};

pub use quasi::{fit_quasipolynomial, FitOptions, QuasiPolynomial};
use simplex::{Lp, LpOutcome};

/// `{x ∈ ℚⁿ : Ax ≤ b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    a: Matrix,
    b: Vec<Rational>,
}

impl Polytope {
    pub fn new(a: Matrix, b: Vec<Rational>) -> Result<Polytope> {
        if a.rows() != b.len() {
            return Err(Error::Dimension(format!(
                "{} constraint rows but {} right-hand sides",
                a.rows(),
                b.len()
            )));
        }
        Ok(Polytope { a, b })
    }

    /// The box `∏ [lo_i, hi_i]`.
    pub fn cube(lo: &[Rational], hi: &[Rational]) -> Polytope {
        let n = lo.len();
        let mut rows = Vec::new();
        let mut b = Vec::new();
        for i in 0..n {
            let mut up = vec![Rational::zero(); n];
            up[i] = Rational::one();
            let down: Vec<Rational> = up.iter().map(|v| -v).collect();
            rows.push(up);
            b.push(hi[i].clone());
            rows.push(down);
            b.push(-&lo[i]);
        }
        let a = if n == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(rows).expect("square rows") };
        Polytope { a, b }
    }

    pub fn dim(&self) -> usize {
        self.a.cols()
    }

    pub fn num_constraints(&self) -> usize {
        self.a.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.b
    }

    /// `kP = {x : Ax ≤ k b}`.
    pub fn dilate(&self, k: &Rational) -> Polytope {
        Polytope {
            a: self.a.clone(),
            b: self.b.iter().map(|v| v * k).collect(),
        }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim()
            && (0..self.a.rows()).all(|i| {
                let lhs = self
                    .a
                    .row(i)
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, v)| acc + a * v);
                lhs <= self.b[i]
            })
    }

    fn lp(&self) -> Option<Lp> {
        Lp::new(&self.a, &self.b)
    }

    pub fn feasible(&self) -> bool {
        self.lp().is_some()
    }

    /// Per-coordinate `[min, max]` by exact LP, or `Unbounded`. `None` if empty.
    pub fn bounding_box(&self) -> Result<Option<Vec<(Rational, Rational)>>> {
        let Some(lp) = self.lp() else {
            return Ok(None);
        };
        let n = self.dim();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            let lo = match lp.minimize(&e) {
                LpOutcome::Optimal { value, .. } => value,
                LpOutcome::Unbounded => return Err(Error::Unbounded),
            };
            let hi = match lp.maximize(&e) {
                LpOutcome::Optimal { value, .. } => value,
                LpOutcome::Unbounded => return Err(Error::Unbounded),
            };
            out.push((lo, hi));
        }
        Ok(Some(out))
    }

    pub fn count_integer_points(&self) -> Result<u64> {
        self.count_integer_points_with(Exec::default())
    }

    /// Exact `#(P ∩ ℤⁿ)`. The polytope must be bounded.
    pub fn count_integer_points_with(&self, exec: Exec) -> Result<u64> {
        let Some(bbox) = self.bounding_box()? else {
            return Ok(0);
        };
        count::count_points(&self.a, &self.b, &bbox, exec)
    }

    /// A vertex: the lexicographically smallest point when every stage of
    /// lexicographic minimization is bounded, otherwise a vertex reached by
    /// walking to tight constraints from a point of the current face.
    pub fn vertex(&self) -> Result<Vec<Rational>> {
        if !self.feasible() {
            return Err(Error::Infeasible);
        }
        let n = self.dim();
        if self.a.rank() < n {
            return Err(Error::NoVertex);
        }
        let mut fixed: Vec<Rational> = Vec::new();
        for i in 0..n {
            let face = self.with_fixed_prefix(&fixed);
            let lp = face.lp().ok_or(Error::Infeasible)?;
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            match lp.minimize(&e) {
                LpOutcome::Optimal { value, .. } => fixed.push(value),
                LpOutcome::Unbounded => {
                    let v = self.purify(lp.feasible_point(), fixed.len())?;
                    return Ok(v);
                }
            }
        }
        debug_assert!(self.contains(&fixed));
        Ok(fixed)
    }

    /// Adds `x_j = values[j]` as paired inequalities.
    fn with_fixed_prefix(&self, values: &[Rational]) -> Polytope {
        let n = self.dim();
        let mut rows = self.a.to_rows();
        let mut b = self.b.clone();
        for (j, v) in values.iter().enumerate() {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            rows.push(e.clone());
            b.push(v.clone());
            rows.push(e.iter().map(|x| -x).collect());
            b.push(-v);
        }
        Polytope {
            a: Matrix::from_rows(rows).expect("uniform rows"),
            b,
        }
    }

    /// Moves `x` along null directions of its tight constraints (and of the
    /// first `frozen` coordinate axes) until the tight set has full rank.
    fn purify(&self, mut x: Vec<Rational>, frozen: usize) -> Result<Vec<Rational>> {
        let n = self.dim();
        loop {
            let slack = self.slacks(&x);
            let mut rows: Vec<Vec<Rational>> = (0..self.a.rows())
                .filter(|&i| slack[i].is_zero())
                .map(|i| self.a.row(i).to_vec())
                .collect();
            for j in 0..frozen {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                rows.push(e);
            }
            let tight = if rows.is_empty() { Matrix::zeros(0, n) } else { Matrix::from_rows(rows).expect("uniform") };
            if tight.rank() == n {
                return Ok(x);
            }
            let d = tight.nullspace().remove(0);
            let step = self.max_step(&x, &slack, &d).map(|t| (t, d.clone())).or_else(|| {
                let neg: Vec<Rational> = d.iter().map(|v| -v).collect();
                self.max_step(&x, &slack, &neg).map(|t| (t, neg))
            });
            let Some((t, dir)) = step else {
                return Err(Error::NoVertex);
            };
            for (xi, di) in x.iter_mut().zip(&dir) {
                *xi += &t * di;
            }
        }
    }

    fn slacks(&self, x: &[Rational]) -> Vec<Rational> {
        let ax = self.a.mul_vec(x).expect("dimension checked");
        self.b.iter().zip(ax).map(|(b, v)| b - v).collect()
    }

    fn max_step(&self, _x: &[Rational], slack: &[Rational], d: &[Rational]) -> Option<Rational> {
        let ad = self.a.mul_vec(d).expect("dimension checked");
        ad.iter()
            .zip(slack)
            .filter(|(r, _)| r.is_positive())
            .map(|(r, s)| s / r)
            .min()
    }

    /// `(k, k·v)` for a vertex `v` and `k` the lcm of its denominators.
    pub fn smallest_integral_dilation(&self) -> Result<(BigInt, Vec<BigInt>)> {
        let v = self.vertex()?;
        Ok(integral_dilation_of(&v))
    }
}

pub fn integral_dilation_of(v: &[Rational]) -> (BigInt, Vec<BigInt>) {
    let k = rational::denominator_lcm(v);
    let kr = Rational::from_integer(k.clone());
    let point = v.iter().map(|x| (x * &kr).to_integer()).collect();
    (k, point)
}

/// `P(k) = {x : Ax ≤ k·b + c}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPolytope {
    a: Matrix,
    b: Vec<Rational>,
    c: Vec<Rational>,
}

impl ParamPolytope {
    pub fn new(a: Matrix, b: Vec<Rational>, c: Vec<Rational>) -> Result<ParamPolytope> {
        if a.rows() != b.len() || b.len() != c.len() {
            return Err(Error::Dimension("A, b and c row counts differ".into()));
        }
        Ok(ParamPolytope { a, b, c })
    }

    /// Dilations of `p` (`c = 0`).
    pub fn dilations_of(p: &Polytope) -> ParamPolytope {
        ParamPolytope {
            a: p.a.clone(),
            c: vec![Rational::zero(); p.b.len()],
            b: p.b.clone(),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    pub fn at(&self, k: u64) -> Polytope {
        let kr = Rational::from_integer(k.into());
        Polytope {
            a: self.a.clone(),
            b: self.b.iter().zip(&self.c).map(|(b, c)| b * &kr + c).collect(),
        }
    }
}

pub fn ehrhart_counts(pp: &ParamPolytope, max_k: u64) -> Result<Vec<u64>> {
    ehrhart_counts_with(pp, max_k, Exec::default())
}

/// Integer-point counts of `P(1), …, P(K)`.
pub fn ehrhart_counts_with(pp: &ParamPolytope, max_k: u64, exec: Exec) -> Result<Vec<u64>> {
    exec.try_map((1..=max_k).collect(), |k| {
        pp.at(k)
            .count_integer_points_with(Exec::Sequential)
            .map_err(|e| match e {
                Error::Unbounded => Error::UnboundedAt(k),
                other => other,
            })
    })
}

/// On-disk form: `{"A": [["p/q", ...]], "b": ["p/q"], "c": ["p/q"]?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeFile {
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    pub b: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<String>>,
}

impl PolytopeFile {
    pub fn from_json(text: &str) -> Result<PolytopeFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("polytope file: {e}")))
    }

    fn parse_parts(&self) -> Result<(Matrix, Vec<Rational>, Option<Vec<Rational>>)> {
        let rows = self
            .a
            .iter()
            .map(|r| r.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let a = Matrix::from_rows(rows)?;
        let b = self.b.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>()?;
        let c = match &self.c {
            Some(c) => Some(c.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        Ok((a, b, c))
    }

    pub fn polytope(&self) -> Result<Polytope> {
        let (a, b, _) = self.parse_parts()?;
        Polytope::new(a, b)
    }

    /// The parametrized family; without `c` this is the dilation family of P.
    pub fn param_polytope(&self) -> Result<ParamPolytope> {
        let (a, b, c) = self.parse_parts()?;
        let c = c.unwrap_or_else(|| vec![Rational::zero(); b.len()]);
        ParamPolytope::new(a, b, c)
    }

    pub fn from_polytope(p: &Polytope) -> PolytopeFile {
        PolytopeFile {
            a: p.a.to_rows().iter().map(|r| r.iter().map(rational::format).collect()).collect(),
            b: p.b.iter().map(rational::format).collect(),
            c: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn poly(a: &[Vec<i64>], b: &[Rational]) -> Polytope {
        Polytope::new(Matrix::from_i64(a), b.to_vec()).unwrap()
    }

    fn unit_cube(n: usize) -> Polytope {
        Polytope::cube(&vec![int(0); n], &vec![int(1); n])
    }

    fn simplex2() -> Polytope {
        poly(&[vec![-1, 0], vec![0, -1], vec![1, 1]], &[int(0), int(0), int(1)])
    }

    #[test]
    fn feasibility_examples() {
        assert!(!poly(&[vec![1], vec![-1]], &[int(-1), int(0)]).feasible());
        assert!(poly(&[vec![1], vec![-1]], &[int(1), int(0)]).feasible());
    }

    #[test]
    fn count_examples() {
        assert_eq!(unit_cube(2).count_integer_points().unwrap(), 4);
        assert_eq!(unit_cube(2).dilate(&int(3)).count_integer_points().unwrap(), 16);
        assert_eq!(simplex2().dilate(&int(2)).count_integer_points().unwrap(), 6);
        assert_eq!(poly(&[vec![1], vec![-1]], &[int(-1), int(0)]).count_integer_points().unwrap(), 0);
    }

    #[test]
    fn unbounded_is_an_error() {
        let half = poly(&[vec![-1, 0], vec![0, -1]], &[int(0), int(0)]);
        assert_eq!(half.count_integer_points(), Err(Error::Unbounded));
    }

    #[test]
    fn vertex_examples() {
        assert_eq!(unit_cube(2).vertex().unwrap(), vec![int(0), int(0)]);
        let point = poly(&[vec![-1], vec![1]], &[frac(-1, 3), frac(1, 3)]);
        assert_eq!(point.vertex().unwrap(), vec![frac(1, 3)]);
        let tri = poly(&[vec![-1, 0], vec![0, -1], vec![1, 1]], &[int(0), int(0), frac(1, 2)]);
        assert_eq!(tri.vertex().unwrap(), vec![int(0), int(0)]);
    }

    #[test]
    fn vertex_errors() {
        assert_eq!(poly(&[vec![1], vec![-1]], &[int(-1), int(0)]).vertex(), Err(Error::Infeasible));
        // a slab contains lines
        assert_eq!(poly(&[vec![1, 0], vec![-1, 0]], &[int(1), int(0)]).vertex(), Err(Error::NoVertex));
    }

    #[test]
    fn vertex_of_pointed_unbounded_cone() {
        // x ≤ 0, y ≤ x: pointed, lexicographic minimum does not exist
        let cone = poly(&[vec![1, 0], vec![-1, 1]], &[int(0), int(0)]);
        assert_eq!(cone.vertex().unwrap(), vec![int(0), int(0)]);
        let shifted = poly(&[vec![1, 0], vec![-1, 1]], &[frac(1, 2), frac(1, 3)]);
        assert_eq!(shifted.vertex().unwrap(), vec![frac(1, 2), frac(5, 6)]);
    }

    #[test]
    fn dilation_examples() {
        let point = poly(&[vec![-1], vec![1]], &[frac(-1, 3), frac(1, 3)]);
        let (k, x) = point.smallest_integral_dilation().unwrap();
        assert_eq!((k, x), (BigInt::from(3), vec![BigInt::from(1)]));
        let (k, x) = unit_cube(2).smallest_integral_dilation().unwrap();
        assert_eq!((k, x), (BigInt::from(1), vec![BigInt::from(0), BigInt::from(0)]));
        let (k, x) = integral_dilation_of(&[frac(1, 2), int(0)]);
        assert_eq!((k, x), (BigInt::from(2), vec![BigInt::from(1), BigInt::from(0)]));
    }

    #[test]
    fn ehrhart_examples() {
        let square = ParamPolytope::dilations_of(&unit_cube(2));
        assert_eq!(ehrhart_counts(&square, 3).unwrap(), vec![4, 9, 16]);
        let half = ParamPolytope::new(Matrix::from_i64(&[vec![1], vec![-1]]), vec![frac(1, 2), int(0)], vec![int(0), int(0)]).unwrap();
        assert_eq!(ehrhart_counts(&half, 6).unwrap(), vec![1, 2, 2, 3, 3, 4]);
        let tri = ParamPolytope::dilations_of(&simplex2());
        assert_eq!(ehrhart_counts(&tri, 3).unwrap(), vec![3, 6, 10]);
    }

    #[test]
    fn ehrhart_unbounded_names_k() {
        let ray = ParamPolytope::new(Matrix::from_i64(&[vec![-1]]), vec![int(0)], vec![int(0)]).unwrap();
        assert_eq!(ehrhart_counts(&ray, 2), Err(Error::UnboundedAt(1)));
    }

    #[test]
    fn file_roundtrip() {
        let text = r#"{"A": [["1","0"],["-1","0"],["0","1"],["0","-1"]], "b": ["1","0","1/1","0"]}"#;
        let f = PolytopeFile::from_json(text).unwrap();
        let p = f.polytope().unwrap();
        assert_eq!(p, unit_cube(2));
        let back = PolytopeFile::from_polytope(&p);
        assert_eq!(back.polytope().unwrap(), p);
        assert!(PolytopeFile::from_json(r#"{"A": [["1"]], "b": ["x"]}"#).unwrap().polytope().is_err());
    }
}
