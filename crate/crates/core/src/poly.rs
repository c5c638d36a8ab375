//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::linalg::Matrix;
use crate::rational::{self, Rational};

/// Terms keyed by exponent vector; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> MultiPoly {
        MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Rational) -> MultiPoly {
        let mut p = MultiPoly::zero(num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn one(num_vars: usize) -> MultiPoly {
        MultiPoly::constant(num_vars, Rational::one())
    }

    pub fn var(num_vars: usize, i: usize) -> MultiPoly {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        MultiPoly::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: Rational) -> MultiPoly {
        let mut p = MultiPoly::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[Rational]) -> MultiPoly {
        let n = coeffs.len();
        let mut p = MultiPoly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        debug_assert_eq!(exponents.len(), self.num_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Rational) {
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero(self.num_vars);
        out.add_scaled(self, c);
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        (0..k).fold(MultiPoly::one(self.num_vars), |acc, _| &acc * self)
    }

    /// Replaces `x_i` by `images[i]`.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.num_vars);
        let target = images.first().map_or(0, MultiPoly::num_vars);
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(p.num_vars)]).collect();
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            out.add_scaled(&term, &Rational::one());
        }
        out
    }

    /// Renders with variable names `{symbol}{row}{col}` for an `n`-column
    /// matrix of variables, e.g. `z11*z22 - z12*z21`. Terms are printed in
    /// decreasing exponent order.
    pub fn to_matrix_string(&self, n: usize, symbol: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.iter().all(|&x| x == 0) {
                factors.push(rational::format(&abs));
            }
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let mut name = String::new();
                let _ = write!(name, "{symbol}{}{}", i / n + 1, i % n + 1);
                if x > 1 {
                    let _ = write!(name, "^{x}");
                }
                factors.push(name);
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = MultiPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(String, &Vec<u32>)> = self.terms.iter().map(|(e, c)| (rational::format(c), e)).collect();
        let mut st = s.serialize_struct("MultiPoly", 2)?;
        st.serialize_field("num_vars", &self.num_vars)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// The `n×n` matrix of variables `x_{ij}` (variable index `i·n + j`).
pub fn symbolic_matrix(n: usize) -> Vec<Vec<MultiPoly>> {
    (0..n)
        .map(|i| (0..n).map(|j| MultiPoly::var(n * n, i * n + j)).collect())
        .collect()
}

/// Product of polynomial matrices.
pub fn poly_matmul(a: &[Vec<MultiPoly>], b: &[Vec<MultiPoly>]) -> Vec<Vec<MultiPoly>> {
    let nv = a[0][0].num_vars();
    (0..a.len())
        .map(|i| {
            (0..b[0].len())
                .map(|j| {
                    let mut acc = MultiPoly::zero(nv);
                    for (k, row) in b.iter().enumerate() {
                        acc.add_scaled(&(&a[i][k] * &row[j]), &Rational::one());
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `X·g` for a polynomial matrix `X` and a constant matrix `g`.
pub fn poly_mul_const(x: &[Vec<MultiPoly>], g: &Matrix) -> Vec<Vec<MultiPoly>> {
    let nv = x[0][0].num_vars();
    (0..x.len())
        .map(|i| {
            (0..g.cols())
                .map(|j| {
                    let mut acc = MultiPoly::zero(nv);
                    for (k, entry) in x[i].iter().enumerate() {
                        acc.add_scaled(entry, &g[(k, j)]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `g·X` for a constant matrix `g` and a polynomial matrix `X`.
pub fn const_mul_poly(g: &Matrix, x: &[Vec<MultiPoly>]) -> Vec<Vec<MultiPoly>> {
    let nv = x[0][0].num_vars();
    (0..g.rows())
        .map(|i| {
            (0..x[0].len())
                .map(|j| {
                    let mut acc = MultiPoly::zero(nv);
                    for (k, row) in x.iter().enumerate() {
                        acc.add_scaled(&row[j], &g[(i, k)]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant by expansion along the first row.
pub fn poly_det(m: &[Vec<MultiPoly>], num_vars: usize) -> MultiPoly {
    let k = m.len();
    if k == 0 {
        return MultiPoly::one(num_vars);
    }
    if k == 1 {
        return m[0][0].clone();
    }
    let mut out = MultiPoly::zero(num_vars);
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][j] * &poly_det(&minor, num_vars);
        let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
        out.add_scaled(&term, &sign);
    }
    out
}

/// Permanent by expansion along the first row.
pub fn poly_perm(m: &[Vec<MultiPoly>], num_vars: usize) -> MultiPoly {
    let k = m.len();
    if k == 0 {
        return MultiPoly::one(num_vars);
    }
    let mut out = MultiPoly::zero(num_vars);
    for j in 0..k {
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        out.add_scaled(&(&m[0][j] * &poly_perm(&minor, num_vars)), &Rational::one());
    }
    out
}
