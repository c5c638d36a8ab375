//! Integer partitions, semistandard tableaux, Kostka numbers and Weyl-module
//! dimensions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// allowed and labels the trivial representation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts; the remaining parts must still be weakly decreasing.
    pub fn from_padded(parts: &[u32]) -> Result<Partition> {
        Partition::new(parts.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(parts: &[u32]) -> Partition {
        let mut v: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n` (`n` must be at least `len`).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (0..first)
                .map(|j| self.0.iter().take_while(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    pub fn scale(&self, k: u32) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Cells `(row, col)` of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    pub fn hook_length(&self, i: usize, j: usize) -> u32 {
        let arm = self.part(i) - j as u32 - 1;
        let leg = self.0[i + 1..].iter().filter(|&&p| p as usize > j).count() as u32;
        arm + leg + 1
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn num_standard_tableaux(&self) -> BigUint {
        let mut num: BigUint = (1..=self.size() as u64).product();
        let den: BigUint = self
            .cells()
            .map(|(i, j)| BigUint::from(self.hook_length(i, j)))
            .product();
        num /= den;
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` with at most `max_len` parts, in decreasing
/// lexicographic order.
pub fn partitions_of(n: u32, max_len: Option<usize>) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, len_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_len.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out
}

/// A filling of a Young diagram by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Tableau> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::InvalidPartition("tableau entries must be positive".into()));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    /// Column `j` read top to bottom.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows
            .iter()
            .take_while(|r| r.len() > j)
            .map(|r| r[j])
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.shape.part(0) as usize).map(|j| self.column(j)).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b));
        rows_ok && cols_ok
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each entry `1..=n`.
    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut c = vec![0u32; n.max(self.max_entry() as usize)];
        for &e in self.rows.iter().flatten() {
            c[e as usize - 1] += 1;
        }
        c
    }

    /// Tableau whose `i`-th row holds only `i`s.
    pub fn canonical(shape: &Partition) -> Tableau {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| vec![i as u32 + 1; p as usize])
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Semistandard tableaux of `shape` with entries in `1..=max_entry`, in
/// lexicographic order of the row-major reading word.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.len() > max_entry as usize {
        return out;
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let col_height: Vec<usize> = shape.conjugate().parts().iter().map(|&h| h as usize).collect();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        col_height: &[usize],
        max_entry: u32,
        rows: &mut Vec<Vec<u32>>,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(rows[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        // leave room for the strictly increasing cells below
        let hi = max_entry - (col_height[j] - 1 - i) as u32;
        for v in lo..=hi {
            rows[i][j] = v;
            fill(k + 1, cells, col_height, max_entry, rows, shape, out);
        }
        rows[i][j] = 0;
    }

    fill(0, &cells, &col_height, max_entry, &mut rows, shape, &mut out);
    out
}

/// Number of semistandard tableaux of shape `shape` with the given content.
pub fn kostka(shape: &Partition, content: &[u32]) -> Result<u64> {
    let total: u32 = content.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch(format!(
            "content sums to {total}, shape {shape} has size {}",
            shape.size()
        )));
    }
    let mut memo = HashMap::new();
    Ok(kostka_strips(shape.parts(), content, &mut memo))
}

/// Peels horizontal strips for the largest entry first.
fn kostka_strips(
    shape: &[u32],
    content: &[u32],
    memo: &mut HashMap<(Vec<u32>, usize), u64>,
) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    if shape.len() > content.len() {
        return 0;
    }
    let key = (shape.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut inner = shape.to_vec();
    horizontal_strips(shape, 0, last, &mut inner, &mut |mu: &[u32]| {
        let trimmed: Vec<u32> = mu.iter().copied().take_while(|&p| p > 0).collect();
        total += kostka_strips(&trimmed, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Visits every `mu ⊆ shape` with `shape / mu` a horizontal strip of `size`
/// cells (interlacing: shape[i+1] ≤ mu[i] ≤ shape[i]).
fn horizontal_strips(
    shape: &[u32],
    i: usize,
    size: u32,
    mu: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if i == shape.len() {
        if size == 0 {
            visit(mu);
        }
        return;
    }
    let lo = shape.get(i + 1).copied().unwrap_or(0);
    let hi = shape[i];
    // at most shape[i] cells remain removable from rows i..
    if shape[i] < size {
        return;
    }
    for m in lo..=hi {
        let removed = hi - m;
        if removed > size {
            continue;
        }
        mu[i] = m;
        horizontal_strips(shape, i + 1, size - removed, mu, visit);
    }
    mu[i] = shape[i];
}

/// Dimension of the Weyl module of shape `shape` for GL_n (hook-content
/// formula); zero when the shape has more than `n` rows.
pub fn dim_weyl(shape: &Partition, n: u32) -> u64 {
    if shape.len() > n as usize {
        return 0;
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, j) in shape.cells() {
        num *= BigUint::from(n as u64 + j as u64 - i as u64);
        den *= BigUint::from(shape.hook_length(i, j));
    }
    (num / den).to_u64().expect("Weyl dimension exceeds u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,3,1").conjugate(), p("3,2,2,1"));
        assert_eq!(p("1").conjugate(), p("1"));
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
        assert_eq!(p("").conjugate(), p(""));
    }

    #[test]
    fn evenness() {
        assert!(p("4,2").is_even());
        assert!(!p("3,1").is_even());
        assert!(p("").is_even());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4,2,1").to_string(), "4,2,1");
        assert_eq!(p("").to_string(), "");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        let json = serde_json::to_string(&p("3,1")).unwrap();
        assert_eq!(json, "\"3,1\"");
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p("3,1"));
    }

    #[test]
    fn ssyt_examples() {
        let t = enumerate_ssyt(&p("2"), 2);
        let words: Vec<Vec<u32>> = t.iter().map(|t| t.rows()[0].clone()).collect();
        assert_eq!(words, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        let col = enumerate_ssyt(&p("1,1"), 2);
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].column(0), vec![1, 2]);
        assert!(enumerate_ssyt(&p("1,1,1"), 2).is_empty());
        assert_eq!(enumerate_ssyt(&p(""), 3).len(), 1);
    }

    #[test]
    fn ssyt_order_is_lexicographic() {
        let t = enumerate_ssyt(&p("2,1"), 3);
        let words: Vec<Vec<u32>> = t.iter().map(|t| t.rows().concat()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(words.len(), 8);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("2,1"), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p("4"), &[0, 3, 1]).unwrap(), 1);
        assert_eq!(kostka(&p("4"), &[2, 0, 2]).unwrap(), 1);
        assert_eq!(kostka(&p("1,1"), &[2, 0]).unwrap(), 0);
        assert!(kostka(&p("2"), &[1]).is_err());
        assert_eq!(kostka(&p(""), &[]).unwrap(), 1);
        assert_eq!(kostka(&p("3,2"), &[2, 2, 1]).unwrap(), 2);
    }

    #[test]
    fn dim_weyl_examples() {
        for n in 1..6 {
            assert_eq!(dim_weyl(&p("1"), n), n as u64);
        }
        assert_eq!(dim_weyl(&p("1,1"), 2), 1);
        assert_eq!(dim_weyl(&p("2"), 2), 3);
        assert_eq!(dim_weyl(&p("2,1"), 3), 8);
        assert_eq!(dim_weyl(&p("1,1,1"), 2), 0);
        assert_eq!(dim_weyl(&p(""), 4), 1);
    }

    #[test]
    fn standard_tableaux_count() {
        assert_eq!(p("2,1").num_standard_tableaux(), BigUint::from(2u32));
        assert_eq!(p("3,2,1").num_standard_tableaux(), BigUint::from(16u32));
        assert_eq!(p("").num_standard_tableaux(), BigUint::from(1u32));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_of(4, Some(2)), vec![p("4"), p("3,1"), p("2,2")]);
    }

    #[test]
    fn dominance() {
        assert!(p("3,1").dominates(&p("2,2")));
        assert!(!p("2,2").dominates(&p("3,1")));
        assert!(!p("3,3").dominates(&p("4,1,1")));
        assert!(!p("4,1,1").dominates(&p("3,3")));
    }
}
