//! Uniqueness of det and perm among degree-m forms on m×m matrices with the
//! same symmetries.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{poly_det, poly_perm, symbolic_matrix, MultiPoly};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Det,
    Perm,
}

impl FromStr for FormKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<FormKind> {
        match s {
            "det" => Ok(FormKind::Det),
            "perm" => Ok(FormKind::Perm),
            _ => Err(Error::Parse(format!("expected det or perm, got {s:?}"))),
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Det => "det",
            FormKind::Perm => "perm",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub kind: FormKind,
    pub size: usize,
    /// Number of degree-m monomials in m² variables.
    pub form_space_dim: usize,
    /// Monomials surviving the torus condition.
    pub weight_space_dim: usize,
    pub fixed_dim: usize,
    /// The fixed space is the line through det (resp. perm), compared
    /// coefficient by coefficient.
    pub spans_reference: bool,
}

pub fn symmetry_characterization_dim(kind: FormKind, size: usize) -> Result<usize> {
    Ok(symmetry_characterization(kind, size)?.fixed_dim)
}

/// For det: forms killed by the infinitesimal left and right `sl_m` actions
/// and fixed by transposition. The diagonal derivations act on monomials by
/// scalars, so their joint kernel is the span of monomials with equal row
/// degrees and equal column degrees; the off-diagonal derivations and the
/// transpose are then imposed by exact nullspace.
///
/// For perm: the same torus condition (from diagonal pairs with product of
/// entries one), then invariance under row swaps, column swaps and transpose.
pub fn symmetry_characterization(kind: FormKind, m: usize) -> Result<SymmetryReport> {
    if !(2..=3).contains(&m) {
        return Err(Error::Unsupported(format!("symmetry check for size {m} (supported: 2, 3)")));
    }
    let nv = m * m;
    let all = monomials_of_degree(nv, m as u32);
    let balanced: Vec<Vec<u32>> = all.iter().filter(|e| is_balanced(e, m)).cloned().collect();
    let index: HashMap<&Vec<u32>, usize> = balanced.iter().enumerate().map(|(i, e)| (e, i)).collect();

    let mut ops: Vec<Box<dyn Fn(&[u32]) -> MultiPoly>> = Vec::new();
    let var = |i: usize, j: usize| i * m + j;
    match kind {
        FormKind::Det => {
            for i in 0..m {
                for j in 0..m {
                    if i == j {
                        continue;
                    }
                    // left: row i += ε·row j; right: column j += ε·column i
                    let left: Vec<(usize, usize)> = (0..m).map(|k| (var(i, k), var(j, k))).collect();
                    let right: Vec<(usize, usize)> = (0..m).map(|k| (var(k, j), var(k, i))).collect();
                    ops.push(Box::new(move |e| derivation(e, &left)));
                    ops.push(Box::new(move |e| derivation(e, &right)));
                }
            }
        }
        FormKind::Perm => {
            for s in 0..m - 1 {
                let rows: Vec<usize> = (0..nv).map(|v| var(swap(v / m, s), v % m)).collect();
                let cols: Vec<usize> = (0..nv).map(|v| var(v / m, swap(v % m, s))).collect();
                ops.push(Box::new(move |e| permuted_minus_identity(e, &rows)));
                ops.push(Box::new(move |e| permuted_minus_identity(e, &cols)));
            }
        }
    }
    let transpose: Vec<usize> = (0..nv).map(|v| var(v % m, v / m)).collect();
    ops.push(Box::new(move |e| permuted_minus_identity(e, &transpose)));

    // one row per (operator, output monomial)
    let mut rows: HashMap<(usize, Vec<u32>), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
    for (col, e) in balanced.iter().enumerate() {
        for (k, op) in ops.iter().enumerate() {
            for (out, c) in op(e).terms() {
                let next = rows.len();
                let r = *rows.entry((k, out.clone())).or_insert(next);
                entries.push((r, col, c.clone()));
            }
        }
    }
    let mut a = Matrix::zeros(rows.len(), balanced.len());
    for (r, c, v) in entries {
        a[(r, c)] += v;
    }
    let kernel = if rows.is_empty() {
        (0..balanced.len())
            .map(|i| (0..balanced.len()).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        a.nullspace()
    };

    let z = symbolic_matrix(m);
    let reference = match kind {
        FormKind::Det => poly_det(&z, nv),
        FormKind::Perm => poly_perm(&z, nv),
    };
    let spans_reference = kernel.len() == 1 && {
        let mut f = MultiPoly::zero(nv);
        for (i, c) in kernel[0].iter().enumerate() {
            f.add_term(balanced[i].clone(), c.clone());
        }
        proportional(&f, &reference) && reference.terms().keys().all(|e| index.contains_key(e))
    };
    Ok(SymmetryReport {
        kind,
        size: m,
        form_space_dim: all.len(),
        weight_space_dim: balanced.len(),
        fixed_dim: kernel.len(),
        spans_reference,
    })
}

fn swap(x: usize, s: usize) -> usize {
    if x == s {
        s + 1
    } else if x == s + 1 {
        s
    } else {
        x
    }
}

/// All exponent vectors of total degree `d` in `nv` variables.
fn monomials_of_degree(nv: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for x in (0..=left).rev() {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
    }
    let mut out = Vec::new();
    if nv > 0 {
        rec(0, d, &mut vec![0; nv], &mut out);
    }
    out
}

/// Row degrees all equal and column degrees all equal.
fn is_balanced(e: &[u32], m: usize) -> bool {
    let row = |i: usize| (0..m).map(|j| e[i * m + j]).sum::<u32>();
    let col = |j: usize| (0..m).map(|i| e[i * m + j]).sum::<u32>();
    (1..m).all(|i| row(i) == row(0) && col(i) == col(0))
}

/// `Σ x_to ∂/∂x_from` applied to the monomial `x^e`, for each `(from, to)`.
fn derivation(e: &[u32], pairs: &[(usize, usize)]) -> MultiPoly {
    let mut out = MultiPoly::zero(e.len());
    for &(from, to) in pairs {
        if e[from] == 0 {
            continue;
        }
        let mut f = e.to_vec();
        f[from] -= 1;
        f[to] += 1;
        out.add_term(f, Rational::from_integer(e[from].into()));
    }
    out
}

/// `x^e` with variable `v` renamed to `perm[v]`, minus `x^e`.
fn permuted_minus_identity(e: &[u32], perm: &[usize]) -> MultiPoly {
    let mut f = vec![0; e.len()];
    for (v, &x) in e.iter().enumerate() {
        f[perm[v]] += x;
    }
    let mut out = MultiPoly::monomial(f, Rational::one());
    out.add_term(e.to_vec(), -Rational::one());
    out
}

fn proportional(f: &MultiPoly, g: &MultiPoly) -> bool {
    let Some((e, c)) = g.terms().iter().next() else {
        return f.is_zero();
    };
    let fc = f.coeff(e);
    if fc.is_zero() {
        return false;
    }
    let ratio = fc / c;
    *f == g.scale(&ratio)
}
