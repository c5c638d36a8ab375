//! Symmetric-group characters by Murnaghan–Nakayama and Kronecker
//! coefficients by the character inner product.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::{partitions_of, Partition};
use crate::polytope::{fit_quasipolynomial, FitOptions, QuasiPolynomial};

/// Characters of S_n for one n: `chi[λ][μ]` with λ the irreducible and μ the
/// cycle type, both indexed by position in `partitions_of(n)`.
#[derive(Debug)]
pub struct CharacterTable {
    n: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    chi: Vec<Vec<i64>>,
    class_sizes: Vec<u64>,
}

impl CharacterTable {
    /// Builds the table bottom-up over all sizes ≤ n: removing a border strip
    /// of length μ₁ reduces χ_λ(μ) to characters of smaller symmetric groups
    /// evaluated at μ with its first part dropped.
    pub fn new(n: u32) -> CharacterTable {
        // values[s][(λ, ρ)] for λ, ρ ⊢ s
        let mut values: Vec<HashMap<(Partition, Partition), i64>> = Vec::with_capacity(n as usize + 1);
        let mut base = HashMap::new();
        base.insert((Partition::empty(), Partition::empty()), 1);
        values.push(base);
        for s in 1..=n {
            let parts = partitions_of(s, None);
            let mut level = HashMap::with_capacity(parts.len() * parts.len());
            for lam in &parts {
                for rho in &parts {
                    let r = rho.part(0);
                    let rest = Partition::new(rho.parts()[1..].to_vec()).expect("suffix of a partition");
                    let lower = &values[(s - r) as usize];
                    let chi: i64 = remove_border_strips(lam, r)
                        .into_iter()
                        .map(|(sign, smaller)| sign * lower[&(smaller, rest.clone())])
                        .sum();
                    level.insert((lam.clone(), rho.clone()), chi);
                }
            }
            values.push(level);
        }
        let partitions = partitions_of(n, None);
        let top = &values[n as usize];
        let chi = partitions
            .iter()
            .map(|l| partitions.iter().map(|m| top[&(l.clone(), m.clone())]).collect())
            .collect();
        let class_sizes = partitions.iter().map(|m| class_size(m)).collect();
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharacterTable {
            n,
            partitions,
            index,
            chi,
            class_sizes,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        let i = self.position(lambda)?;
        let j = self.position(mu)?;
        Ok(self.chi[i][j])
    }

    pub fn row(&self, lambda: &Partition) -> Result<&[i64]> {
        Ok(&self.chi[self.position(lambda)?])
    }

    fn position(&self, p: &Partition) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::SizeMismatch(format!("{p} is not a partition of {}", self.n)))
    }
}

/// Shared tables, built at most once per n.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    let mut tables = TABLES.get_or_init(Default::default).lock().unwrap();
    tables.entry(n).or_insert_with(|| Arc::new(CharacterTable::new(n))).clone()
}

/// All ways to remove a border strip of `len` cells, with sign
/// `(−1)^(height)`, read off the beta-set of λ: a strip removal moves one
/// bead down by `len` onto an empty position, and the height is the number
/// of beads jumped over.
fn remove_border_strips(lambda: &Partition, len: u32) -> Vec<(i64, Partition)> {
    let l = lambda.len() as u32;
    let beta: Vec<u32> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let Some(target) = b.checked_sub(len) else { continue };
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = next.iter().enumerate().map(|(k, &x)| x - (l - 1 - k as u32)).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::from_padded(&parts).expect("beta-set gives a partition")));
    }
    out
}

fn factorial(n: u32) -> u64 {
    (1..=u64::from(n)).product()
}

/// `n! / z_μ` with `z_μ = Π i^{m_i} m_i!`.
fn class_size(mu: &Partition) -> u64 {
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    let z: u64 = counts
        .iter()
        .map(|(&i, &m)| u64::from(i).pow(m) * factorial(m))
        .product();
    factorial(mu.size()) / z
}

pub fn sym_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| ≠ |{mu}|")));
    }
    character_table(lambda.size()).character(lambda, mu)
}

/// `(1/n!) Σ_μ |C_μ| χ_λ(μ) χ_μ(μ) χ_ν(μ)`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!("sizes {}, {}, {} differ", n, mu.size(), nu.size())));
    }
    let table = character_table(n);
    let (a, b, c) = (table.row(lambda)?, table.row(mu)?, table.row(nu)?);
    let overflow = Error::Overflow("Kronecker character sum");
    let mut sum: i128 = 0;
    for (k, &size) in table.class_sizes().iter().enumerate() {
        let term = i128::from(size)
            .checked_mul(i128::from(a[k]))
            .and_then(|t| t.checked_mul(i128::from(b[k])))
            .and_then(|t| t.checked_mul(i128::from(c[k])))
            .ok_or(overflow.clone())?;
        sum = sum.checked_add(term).ok_or(overflow.clone())?;
    }
    let order = i128::from(factorial(n));
    if sum % order != 0 || sum < 0 {
        return Err(Error::Verification(format!(
            "character sum {sum} for ({lambda}; {mu}; {nu}) is not a nonnegative multiple of {n}!"
        )));
    }
    Ok((sum / order) as u64)
}

/// Multiplicity of the SL_m × SL_m-trivial representation in `V_λ(GL_{m²})`
/// restricted along `GL_m × GL_m → GL(ℂ^m ⊗ ℂ^m)`; the discrete transpose
/// symmetry is not taken into account.
pub fn det_stabilizer_invariant_mult(lambda: &Partition, m: u32) -> Result<u64> {
    if m == 0 {
        return Err(Error::Dimension("m must be positive".into()));
    }
    if lambda.len() as u64 > u64::from(m) * u64::from(m) {
        return Err(Error::Dimension(format!("length of {lambda} exceeds m² = {}", m * m)));
    }
    if lambda.size() % m != 0 {
        return Ok(0);
    }
    let rect = Partition::new(vec![lambda.size() / m; m as usize])?;
    kronecker(lambda, &rect, &rect)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GStretchSeries {
    pub lambda: Partition,
    pub m: u32,
    /// `values[k-1]` at `kλ`.
    pub values: Vec<u64>,
    pub fit: Option<QuasiPolynomial>,
}

pub fn g_stretch(lambda: &Partition, m: u32, max_k: u32, table_cap: usize, opts: FitOptions) -> Result<GStretchSeries> {
    g_stretch_with(lambda, m, max_k, table_cap, opts, Exec::default())
}

/// `det_stabilizer_invariant_mult(kλ, m)` for `k = 1..=max_k`. A fit is
/// attempted when there are more values than holdout points; a series that
/// does not fit within the bounds is returned without one.
pub fn g_stretch_with(
    lambda: &Partition,
    m: u32,
    max_k: u32,
    table_cap: usize,
    opts: FitOptions,
    exec: Exec,
) -> Result<GStretchSeries> {
    if let Some(k) = (1..=max_k).find(|&k| (k * lambda.size()) as usize > table_cap) {
        return Err(Error::CharacterBudget {
            k: u64::from(k),
            size: (k * lambda.size()) as usize,
            cap: table_cap,
        });
    }
    let values = exec.try_map((1..=max_k).collect(), |k| det_stabilizer_invariant_mult(&lambda.scale(k), m))?;
    let fit = if values.len() > opts.holdout {
        let signed: Vec<i64> = values.iter().map(|&v| v as i64).collect();
        fit_quasipolynomial(&signed, opts).ok()
    } else {
        None
    };
    Ok(GStretchSeries {
        lambda: lambda.clone(),
        m,
        values,
        fit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn character_examples() {
        assert_eq!(sym_character(&p("3"), &p("2,1")).unwrap(), 1);
        assert_eq!(sym_character(&p("1,1"), &p("2")).unwrap(), -1);
        assert_eq!(sym_character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(sym_character(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(sym_character(&p("2,1"), &p("2,1")).unwrap(), 0);
        assert!(sym_character(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn degrees_are_standard_tableau_counts() {
        for n in 1..=8 {
            let t = character_table(n);
            let id = Partition::new(vec![1; n as usize]).unwrap();
            for l in t.partitions() {
                let deg = t.character(l, &id).unwrap();
                assert_eq!(num_bigint::BigUint::from(deg as u64), l.num_standard_tableaux());
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 1..=7 {
            let t = character_table(n);
            let order = i128::from(factorial(n));
            let k = t.partitions().len();
            for a in 0..k {
                for b in 0..k {
                    let s: i128 = (0..k)
                        .map(|c| i128::from(t.class_sizes()[c]) * i128::from(t.chi[a][c]) * i128::from(t.chi[b][c]))
                        .sum();
                    assert_eq!(s, if a == b { order } else { 0 }, "n = {n}");
                }
            }
            assert_eq!(t.class_sizes().iter().sum::<u64>(), factorial(n));
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(&p("1,1"), &p("1,1"), &p("2")).unwrap(), 1);
        assert_eq!(kronecker(&p("2,1"), &p("2,1"), &p("2,1")).unwrap(), 1);
        assert_eq!(kronecker(&p("2,1"), &p("3"), &p("2,1")).unwrap(), 1);
        assert_eq!(kronecker(&p("2,1"), &p("3"), &p("1,1,1")).unwrap(), 0);
        assert_eq!(kronecker(&p(""), &p(""), &p("")).unwrap(), 1);
        assert!(kronecker(&p("2"), &p("2"), &p("1")).is_err());
    }

    #[test]
    fn det_invariant_examples() {
        assert_eq!(det_stabilizer_invariant_mult(&p("3"), 2).unwrap(), 0);
        assert_eq!(det_stabilizer_invariant_mult(&p("2"), 2).unwrap(), 1);
        assert_eq!(det_stabilizer_invariant_mult(&p("1,1"), 2).unwrap(), 0);
        assert!(det_stabilizer_invariant_mult(&p("1,1,1,1,1"), 2).is_err());
    }

    #[test]
    fn g_stretch_examples() {
        let s = g_stretch(&p("2"), 2, 4, 14, FitOptions::default()).unwrap();
        assert_eq!(s.values, vec![1, 1, 1, 1]);
        // odd k gives odd size, not divisible by m = 2
        let s = g_stretch(&p("1"), 2, 4, 14, FitOptions::default()).unwrap();
        assert_eq!(s.values, vec![0, 1, 0, 1]);
        assert_eq!(s.fit.unwrap().period(), 2);
        let s = g_stretch(&p("2,2"), 2, 3, 14, FitOptions::default()).unwrap();
        assert_eq!(s.values.len(), 3);
        // χ_(2,2) = (2, 0, 2, −1, 0) on class sizes (1, 6, 3, 8, 6): (8 + 24 − 8)/24
        assert_eq!(s.values[0], 1);
    }

    #[test]
    fn g_stretch_budget_names_k() {
        let err = g_stretch(&p("3,2"), 2, 4, 14, FitOptions::default()).unwrap_err();
        assert_eq!(err, Error::CharacterBudget { k: 3, size: 15, cap: 14 });
    }
}
