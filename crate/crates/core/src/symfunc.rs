//! Symmetric polynomials in the monomial-symmetric basis, Schur polynomials,
//! products and plethysm by direct monomial substitution.
//!
//! Everything here is brute force on purpose: it is the reference that the
//! Littlewood–Richardson and plethysm routines are checked against.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::{self, enumerate_ssyt, partitions_of, Partition};
use crate::rational::Rational;

/// A symmetric polynomial `Σ c_κ m_κ(x_1, …, x_N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    num_vars: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SymPoly {
    pub fn zero(num_vars: usize) -> SymPoly {
        SymPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    /// The monomial symmetric polynomial `m_κ`; zero if κ has too many parts.
    pub fn monomial(kappa: Partition, num_vars: usize) -> SymPoly {
        let mut p = SymPoly::zero(num_vars);
        p.add_term(kappa, Rational::one());
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, kappa: &Partition) -> Rational {
        self.terms.get(kappa).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms; `Some(0)` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Partition::size);
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some()
    }

    pub fn add_term(&mut self, kappa: Partition, c: Rational) {
        if kappa.len() > self.num_vars || c.is_zero() {
            return;
        }
        let e = self.terms.entry(kappa).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &SymPoly, c: &Rational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    /// Product, computed coefficient by coefficient: the coefficient of
    /// `x^κ` in `fg` sums `f[a]·g[κ−a]` over all exponent splits `a ≤ κ`.
    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let n = self.num_vars.max(other.num_vars);
        let mut out = SymPoly::zero(n);
        let degs_f: std::collections::BTreeSet<u32> = self.terms.keys().map(Partition::size).collect();
        let degs_g: std::collections::BTreeSet<u32> = other.terms.keys().map(Partition::size).collect();
        let mut totals: std::collections::BTreeSet<u32> = std::collections::BTreeSet::new();
        for &a in &degs_f {
            for &b in &degs_g {
                totals.insert(a + b);
            }
        }
        for total in totals {
            for kappa in partitions_of(total, Some(n)) {
                let target = kappa.padded(n);
                let mut sum = Rational::zero();
                for &df in degs_f.iter().filter(|&&d| d <= total) {
                    let dg = total - df;
                    if !degs_g.contains(&dg) {
                        continue;
                    }
                    let mut split = vec![0u32; n];
                    for_each_split(&target, 0, df, &mut split, &mut |a: &[u32]| {
                        let b: Vec<u32> = target.iter().zip(a).map(|(t, x)| t - x).collect();
                        let fa = self.terms.get(&Partition::from_unsorted(a));
                        let gb = other.terms.get(&Partition::from_unsorted(&b));
                        if let (Some(x), Some(y)) = (fa, gb) {
                            sum += x * y;
                        }
                    });
                }
                out.add_term(kappa, sum);
            }
        }
        out
    }
}

/// Visits every `a` with `0 ≤ a ≤ target` componentwise and `|a| = size`.
fn for_each_split(target: &[u32], i: usize, size: u32, a: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if i == target.len() {
        if size == 0 {
            visit(a);
        }
        return;
    }
    let room: u32 = target[i..].iter().sum();
    if room < size {
        return;
    }
    for v in 0..=target[i].min(size) {
        a[i] = v;
        for_each_split(target, i + 1, size - v, a, visit);
    }
    a[i] = 0;
}

/// `s_λ(x_1, …, x_N)`: the content generating function of SSYT of shape λ,
/// so the coefficient of `m_μ` is the Kostka number `K_{λμ}`.
pub fn schur(shape: &Partition, num_vars: usize) -> SymPoly {
    let mut p = SymPoly::zero(num_vars);
    if shape.len() > num_vars {
        return p;
    }
    for mu in partitions_of(shape.size(), Some(num_vars)) {
        if !shape.dominates(&mu) {
            continue;
        }
        let k = partitions::kostka(shape, mu.parts()).expect("same size");
        p.add_term(mu, Rational::from_integer(k.into()));
    }
    p
}

/// Coefficients of a homogeneous symmetric polynomial in the Schur basis, by
/// peeling off the lexicographically leading term (lex order refines
/// dominance, and `s_κ = m_κ + lower terms`).
pub fn schur_expand(f: &SymPoly) -> Result<BTreeMap<Partition, Rational>> {
    if !f.is_homogeneous() {
        return Err(Error::Unsupported("Schur expansion of a nonhomogeneous polynomial".into()));
    }
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((kappa, c)) = rest.terms.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        let s = schur(&kappa, rest.num_vars);
        rest.add_scaled(&s, &-c.clone());
        debug_assert!(rest.coeff(&kappa).is_zero());
        out.insert(kappa, c);
    }
    Ok(out)
}

fn to_counts(expansion: BTreeMap<Partition, Rational>) -> Result<BTreeMap<Partition, u64>> {
    expansion
        .into_iter()
        .map(|(k, v)| {
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Verification(format!("coefficient {v} of s_{k} is not a nonnegative integer")));
            }
            let c = v.to_integer().to_u64().ok_or(Error::Overflow("Schur coefficient"))?;
            Ok((k, c))
        })
        .collect()
}

/// Schur expansion of `s_α · s_β` in `|α| + |β|` variables: the
/// Littlewood–Richardson coefficients `c^λ_{αβ}`.
pub fn product_expand(alpha: &Partition, beta: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let n = (alpha.size() + beta.size()).max(1) as usize;
    let prod = schur(alpha, n).mul(&schur(beta, n));
    to_counts(schur_expand(&prod)?)
}

pub fn plethysm_expand(outer: &Partition, inner: &Partition, degree_cap: usize) -> Result<BTreeMap<Partition, u64>> {
    plethysm_expand_with(outer, inner, degree_cap, Exec::default())
}

/// Schur expansion of `s_π[s_μ]`: list the monomials of `s_μ` in
/// `N = |π|·|μ|` variables with multiplicity, substitute them for the
/// variables of `s_π`, and expand.
pub fn plethysm_expand_with(
    outer: &Partition,
    inner: &Partition,
    degree_cap: usize,
    exec: Exec,
) -> Result<BTreeMap<Partition, u64>> {
    let degree = outer.size() as usize * inner.size() as usize;
    if degree > degree_cap {
        return Err(Error::DegreeCap { degree, cap: degree_cap });
    }
    let n = degree.max(1);
    let monomials: Vec<Vec<u32>> = enumerate_ssyt(inner, n as u32)
        .iter()
        .map(|t| t.content(n))
        .collect();
    let coeffs = substitute_into_schur(outer, &monomials, n, exec);
    let mut f = SymPoly::zero(n);
    for (kappa, c) in coeffs {
        f.add_term(kappa, Rational::from_integer(c.into()));
    }
    if f.is_zero() {
        return Ok(BTreeMap::new());
    }
    to_counts(schur_expand(&f)?)
}

/// Coefficients of `x^κ` (κ a partition) in `s_π(y_1, …, y_M)` where each
/// `y_i` is the monomial `x^{monomials[i]}`.
fn substitute_into_schur(shape: &Partition, monomials: &[Vec<u32>], n: usize, exec: Exec) -> BTreeMap<Partition, i64> {
    let m = monomials.len();
    if shape.is_empty() {
        return BTreeMap::from([(Partition::empty(), 1)]);
    }
    if shape.len() > m {
        return BTreeMap::new();
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let col_height: Vec<usize> = shape.conjugate().parts().iter().map(|&h| h as usize).collect();
    let first_hi = m - (col_height[0] - 1);
    let partials = exec.map((1..=first_hi).collect(), |first| {
        let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
        let mut expo = vec![0u32; n];
        let mut acc = BTreeMap::new();
        grid[0][0] = first;
        add_into(&mut expo, &monomials[first - 1]);
        fill_cells(1, &cells, &col_height, m, monomials, &mut grid, &mut expo, &mut acc);
        acc
    });
    let mut total = BTreeMap::new();
    for part in partials {
        for (k, v) in part {
            *total.entry(k).or_insert(0) += v;
        }
    }
    total
}

fn add_into(expo: &mut [u32], m: &[u32]) {
    for (e, x) in expo.iter_mut().zip(m) {
        *e += x;
    }
}

fn sub_from(expo: &mut [u32], m: &[u32]) {
    for (e, x) in expo.iter_mut().zip(m) {
        *e -= x;
    }
}

#[allow(clippy::too_many_arguments)]
fn fill_cells(
    k: usize,
    cells: &[(usize, usize)],
    col_height: &[usize],
    m: usize,
    monomials: &[Vec<u32>],
    grid: &mut Vec<Vec<usize>>,
    expo: &mut Vec<u32>,
    acc: &mut BTreeMap<Partition, i64>,
) {
    if k == cells.len() {
        if expo.windows(2).all(|w| w[0] >= w[1]) {
            *acc.entry(Partition::from_padded(expo).expect("weakly decreasing")).or_insert(0) += 1;
        }
        return;
    }
    let (i, j) = cells[k];
    let mut lo = 1;
    if j > 0 {
        lo = lo.max(grid[i][j - 1]);
    }
    if i > 0 {
        lo = lo.max(grid[i - 1][j] + 1);
    }
    let hi = m - (col_height[j] - 1 - i);
    for v in lo..=hi {
        grid[i][j] = v;
        add_into(expo, &monomials[v - 1]);
        fill_cells(k + 1, cells, col_height, m, monomials, grid, expo, acc);
        sub_from(expo, &monomials[v - 1]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn counts(pairs: &[(&str, u64)]) -> BTreeMap<Partition, u64> {
        pairs.iter().map(|(k, v)| (p(k), *v)).collect()
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p("1,1"), 2), SymPoly::monomial(p("1,1"), 2));
        let mut s2 = SymPoly::monomial(p("2"), 2);
        s2.add_term(p("1,1"), int(1));
        assert_eq!(schur(&p("2"), 2), s2);
        assert!(schur(&p("1,1,1"), 2).is_zero());
    }

    #[test]
    fn schur_expand_examples() {
        let e = schur_expand(&SymPoly::monomial(p("1,1"), 2)).unwrap();
        assert_eq!(e, BTreeMap::from([(p("1,1"), int(1))]));
        let e = schur_expand(&schur(&p("2"), 2)).unwrap();
        assert_eq!(e, BTreeMap::from([(p("2"), int(1))]));
        assert!(schur_expand(&SymPoly::zero(3)).unwrap().is_empty());
        let mut mixed = SymPoly::monomial(p("2"), 2);
        mixed.add_term(p("1"), int(1));
        assert!(schur_expand(&mixed).is_err());
    }

    #[test]
    fn monomial_products() {
        // m_1 · m_1 = m_2 + 2 m_11
        let m1 = SymPoly::monomial(p("1"), 3);
        let sq = m1.mul(&m1);
        assert_eq!(sq.coeff(&p("2")), int(1));
        assert_eq!(sq.coeff(&p("1,1")), int(2));
    }

    #[test]
    fn product_examples() {
        assert_eq!(product_expand(&p("1"), &p("1")).unwrap(), counts(&[("2", 1), ("1,1", 1)]));
        assert_eq!(
            product_expand(&p("2,1"), &p("2,1")).unwrap(),
            counts(&[
                ("4,2", 1),
                ("4,1,1", 1),
                ("3,3", 1),
                ("3,2,1", 2),
                ("3,1,1,1", 1),
                ("2,2,2", 1),
                ("2,2,1,1", 1)
            ])
        );
        assert_eq!(product_expand(&p("3,1"), &p("")).unwrap(), counts(&[("3,1", 1)]));
        assert_eq!(product_expand(&p(""), &p("")).unwrap(), counts(&[("", 1)]));
    }

    #[test]
    fn plethysm_examples() {
        assert_eq!(plethysm_expand(&p("2"), &p("2"), 10).unwrap(), counts(&[("4", 1), ("2,2", 1)]));
        assert_eq!(plethysm_expand(&p("1,1"), &p("2"), 10).unwrap(), counts(&[("3,1", 1)]));
        assert_eq!(plethysm_expand(&p("1"), &p("2,1"), 10).unwrap(), counts(&[("2,1", 1)]));
        assert!(matches!(plethysm_expand(&p("3"), &p("4"), 10), Err(Error::DegreeCap { .. })));
    }

    #[test]
    fn plethysm_exec_modes_agree() {
        let a = plethysm_expand_with(&p("3"), &p("2"), 10, Exec::Sequential).unwrap();
        let b = plethysm_expand_with(&p("3"), &p("2"), 10, Exec::Parallel).unwrap();
        assert_eq!(a, b);
        // h_3[h_2] = s_6 + s_42 + s_222
        assert_eq!(a, counts(&[("6", 1), ("4,2", 1), ("2,2,2", 1)]));
    }
}
