//! Magic squares and the permanent-like invariants they index, trace-ring
//! sanity checks, and the explicit family of obstruction certificates
//! `1 ⊗ V_γ(SL_n)` with γ even and `|γ| = 2n`.

use std::collections::{BTreeSet, HashMap};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partitions::Partition;
use crate::poly::{const_mul_poly, poly_matmul, poly_mul_const, symbolic_matrix, MultiPoly};
use crate::rational::{int, Rational};
use crate::sampling;
use crate::weylmod::perm_stabilizer_invariants;

/// Nonnegative integer matrix with every row and column summing to `weight`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MagicSquare {
    entries: Vec<Vec<u32>>,
    weight: u32,
}

impl MagicSquare {
    pub fn new(entries: Vec<Vec<u32>>) -> Result<MagicSquare> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("magic square must be a nonempty square matrix".into()));
        }
        let weight: u32 = entries[0].iter().sum();
        let rows_ok = entries.iter().all(|r| r.iter().sum::<u32>() == weight);
        let cols_ok = (0..n).all(|j| entries.iter().map(|r| r[j]).sum::<u32>() == weight);
        if !rows_ok || !cols_ok {
            return Err(Error::Dimension("row and column sums differ".into()));
        }
        Ok(MagicSquare { entries, weight })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    /// Exponent vector of `x^A = Π x_ij^{a_ij}` (variable index `i·n + j`).
    pub fn exponents(&self) -> Vec<u32> {
        self.entries.iter().flatten().copied().collect()
    }

    /// Every matrix obtained by permuting rows and columns.
    pub fn orbit(&self) -> BTreeSet<Vec<Vec<u32>>> {
        let n = self.n();
        let mut out = BTreeSet::new();
        for rp in permutations(n) {
            for cp in permutations(n) {
                out.insert(
                    (0..n)
                        .map(|i| (0..n).map(|j| self.entries[rp[i]][cp[j]]).collect())
                        .collect(),
                );
            }
        }
        out
    }

    /// Lexicographically least matrix in the orbit: for each column
    /// permutation, sorting the rows gives the best row permutation.
    pub fn canonical(&self) -> MagicSquare {
        let n = self.n();
        let best = permutations(n)
            .into_iter()
            .map(|cp| {
                let mut rows: Vec<Vec<u32>> = self.entries.iter().map(|r| cp.iter().map(|&j| r[j]).collect()).collect();
                rows.sort();
                rows
            })
            .min()
            .expect("at least one permutation");
        MagicSquare {
            entries: best,
            weight: self.weight,
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MagicSquares {
    pub n: usize,
    pub weight: u32,
    pub squares: Vec<MagicSquare>,
    /// Canonical representative of each orbit, sorted.
    pub orbit_representatives: Vec<MagicSquare>,
}

impl MagicSquares {
    pub fn count(&self) -> usize {
        self.squares.len()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit_representatives.len()
    }
}

/// All `n×n` magic squares of weight `r`, rows filled top to bottom with the
/// last row forced by the column sums.
pub fn enumerate_magic_squares(n: usize, r: u32, weight_cap: u32) -> Result<MagicSquares> {
    if n == 0 || n > 4 {
        return Err(Error::Dimension(format!("magic squares need 1 ≤ n ≤ 4, got {n}")));
    }
    if r > weight_cap {
        return Err(Error::WeightCap(format!("weight {r} exceeds cap {weight_cap}")));
    }
    let mut squares = Vec::new();
    let mut rows = Vec::with_capacity(n);
    fill_rows(n, r, &mut vec![0; n], &mut rows, &mut squares);
    let reps: BTreeSet<MagicSquare> = squares.iter().map(MagicSquare::canonical).collect();
    Ok(MagicSquares {
        n,
        weight: r,
        squares,
        orbit_representatives: reps.into_iter().collect(),
    })
}

fn fill_rows(n: usize, r: u32, col_sums: &mut Vec<u32>, rows: &mut Vec<Vec<u32>>, out: &mut Vec<MagicSquare>) {
    if rows.len() + 1 == n {
        let last: Vec<u32> = col_sums.iter().map(|&c| r - c).collect();
        rows.push(last);
        out.push(MagicSquare {
            entries: rows.clone(),
            weight: r,
        });
        rows.pop();
        return;
    }
    for row in compositions_bounded(r, col_sums.iter().map(|&c| r - c).collect()) {
        for (c, x) in col_sums.iter_mut().zip(&row) {
            *c += x;
        }
        rows.push(row);
        fill_rows(n, r, col_sums, rows, out);
        let row = rows.pop().unwrap();
        for (c, x) in col_sums.iter_mut().zip(&row) {
            *c -= x;
        }
    }
}

/// Compositions of `total` with `part[i] ≤ bounds[i]`.
fn compositions_bounded(total: u32, bounds: Vec<u32>) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, bounds: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == bounds.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let room: u32 = bounds[i + 1..].iter().sum();
        let lo = left.saturating_sub(room);
        for x in lo..=left.min(bounds[i]) {
            cur.push(x);
            rec(i + 1, left - x, bounds, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, total, &bounds, &mut Vec::new(), &mut out);
    out
}

/// `p_A(X) = Σ x^{A'}` over the distinct row/column permutations `A'` of `A`.
pub fn basic_invariant_poly(a: &MagicSquare) -> MultiPoly {
    let nv = a.n() * a.n();
    let mut p = MultiPoly::zero(nv);
    for m in a.orbit() {
        p.add_term(m.into_iter().flatten().collect(), Rational::one());
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRingReport {
    pub n: usize,
    pub weight: u32,
    pub orbit_count: usize,
    /// Rank of the `p_A` over orbit representatives.
    pub basic_rank: usize,
    /// Rank of the Reynolds operator of `S_n × S_n` on the torus-invariant
    /// monomials of degree `n·r`.
    pub fixed_dim: usize,
}

/// Compares the `p_A` count with the degree-`nr` invariant dimension found
/// independently: all monomials of that degree, filtered to equal row and
/// column degrees, then averaged over every row and column permutation.
pub fn invariant_ring_dimension_check(n: usize, r: u32, weight_cap: u32) -> Result<InvariantRingReport> {
    if n == 0 || n > 3 {
        return Err(Error::Dimension(format!("invariant ring check needs 1 ≤ n ≤ 3, got {n}")));
    }
    let squares = enumerate_magic_squares(n, r, weight_cap)?;
    let nv = n * n;
    let basic: Vec<MultiPoly> = squares.orbit_representatives.iter().map(basic_invariant_poly).collect();
    let basic_rank = rank_of(&basic, nv);

    let monomials: Vec<Vec<u32>> = monomials_of_degree(nv, n as u32 * r)
        .into_iter()
        .filter(|e| (0..n).all(|i| (0..n).map(|j| e[i * n + j]).sum::<u32>() == r))
        .filter(|e| (0..n).all(|j| (0..n).map(|i| e[i * n + j]).sum::<u32>() == r))
        .collect();
    let index: HashMap<&Vec<u32>, usize> = monomials.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let perms = permutations(n);
    let group_order = int((perms.len() * perms.len()) as i64);
    let mut reynolds = Matrix::zeros(monomials.len(), monomials.len());
    for (c, e) in monomials.iter().enumerate() {
        for rp in &perms {
            for cp in &perms {
                let mut f = vec![0; nv];
                for i in 0..n {
                    for j in 0..n {
                        f[rp[i] * n + cp[j]] = e[i * n + j];
                    }
                }
                reynolds[(index[&f], c)] += Rational::one() / &group_order;
            }
        }
    }
    let fixed_dim = reynolds.rank();

    if basic_rank != squares.orbit_count() || fixed_dim != squares.orbit_count() {
        return Err(Error::Verification(format!(
            "n = {n}, r = {r}: {} orbits, p_A rank {basic_rank}, invariant dimension {fixed_dim}",
            squares.orbit_count()
        )));
    }
    Ok(InvariantRingReport {
        n,
        weight: r,
        orbit_count: squares.orbit_count(),
        basic_rank,
        fixed_dim,
    })
}

fn rank_of(polys: &[MultiPoly], nv: usize) -> usize {
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    for p in polys {
        for e in p.terms().keys() {
            let next = index.len();
            index.entry(e.clone()).or_insert(next);
        }
    }
    let mut m = Matrix::zeros(polys.len(), index.len().max(1));
    for (i, p) in polys.iter().enumerate() {
        for (e, c) in p.terms() {
            m[(i, index[e])] = c.clone();
        }
    }
    debug_assert!(polys.iter().all(|p| p.num_vars() == nv));
    m.rank()
}

fn monomials_of_degree(nv: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nv], &mut out);
    out
}

/// `trace((A X A⁻¹)^j) = trace(X^j)` symbolically in the entries of `X`,
/// for `trials` seeded random invertible `A`.
pub fn trace_like_invariance_check(n: usize, j: u32, trials: usize, seed: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Dimension("n must be positive".into()));
    }
    let nv = n * n;
    let x = symbolic_matrix(n);
    let power_trace = |m: &[Vec<MultiPoly>]| -> MultiPoly {
        let mut p: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| (0..n).map(|k| if i == k { MultiPoly::one(nv) } else { MultiPoly::zero(nv) }).collect())
            .collect();
        for _ in 0..j {
            p = poly_matmul(&p, m);
        }
        let mut t = MultiPoly::zero(nv);
        for (i, row) in p.iter().enumerate() {
            t.add_scaled(&row[i], &Rational::one());
        }
        t
    };
    let expected = power_trace(&x);
    let mut rng = sampling::seeded(seed);
    for _ in 0..trials {
        let a = sampling::random_invertible(&mut rng, n);
        let conj = poly_mul_const(&const_mul_poly(&a, &x), &a.inverse()?);
        if power_trace(&conj) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateChecks {
    pub even: bool,
    pub alpha_neq_beta: bool,
    pub invariant_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub n: usize,
    pub gamma: Partition,
    pub checks: CertificateChecks,
    pub bitlength: u64,
}

impl ObstructionCertificate {
    /// Structural checks filled in; `invariant_dim` left empty.
    pub fn structural(n: usize, gamma: Partition) -> ObstructionCertificate {
        let bitlength = bits(n as u64) + gamma.parts().iter().map(|&p| bits(u64::from(p))).sum::<u64>();
        ObstructionCertificate {
            n,
            checks: CertificateChecks {
                even: gamma.is_even(),
                // the first factor is trivial, so α = ∅ ≠ γ exactly when γ ≠ ∅
                alpha_neq_beta: !gamma.is_empty(),
                invariant_dim: None,
            },
            gamma,
            bitlength,
        }
    }

    pub fn from_json(text: &str) -> Result<ObstructionCertificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn bits(x: u64) -> u64 {
    u64::from((64 - x.leading_zeros()).max(1))
}

/// The certificate for `γ_n = (2n)`. Panics if `2n` does not fit a `u32` part.
pub fn canonical_certificate(n: usize) -> ObstructionCertificate {
    let part = n.checked_mul(2).and_then(|p| u32::try_from(p).ok()).expect("2n fits in a u32 part");
    let gamma = Partition::new(vec![part]).expect("single positive part");
    ObstructionCertificate::structural(n, gamma)
}

/// Certificates for `n = 2..=max_n`, in order.
pub fn emit_obstruction_family(max_n: usize) -> impl Iterator<Item = ObstructionCertificate> {
    (2..=max_n).map(canonical_certificate)
}

/// Recomputes the structural checks and, when `full` and `n ≤ 3`, the
/// dimension of permutation-fixed weight-(2,…,2) vectors in `V_γ(GL_n)`.
pub fn verify_obstruction(cert: &ObstructionCertificate, full: bool, dim_cap: u64) -> Result<ObstructionCertificate> {
    if cert.gamma.size() as usize != 2 * cert.n {
        return Err(Error::SizeMismatch(format!("|{}| ≠ 2·{}", cert.gamma, cert.n)));
    }
    let mut out = ObstructionCertificate::structural(cert.n, cert.gamma.clone());
    if !out.checks.even {
        return Err(Error::NotAnObstruction("even".into()));
    }
    if !out.checks.alpha_neq_beta {
        return Err(Error::NotAnObstruction("alpha_neq_beta".into()));
    }
    if full && cert.n <= 3 {
        let dim = perm_stabilizer_invariants(&cert.gamma, cert.n, dim_cap)?;
        if dim == 0 {
            return Err(Error::NotAnObstruction("invariant_dim".into()));
        }
        out.checks.invariant_dim = Some(dim);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(rows: &[&[u32]]) -> MagicSquare {
        MagicSquare::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn magic_square_examples() {
        let e = enumerate_magic_squares(3, 1, 6).unwrap();
        assert_eq!((e.count(), e.orbit_count()), (6, 1));
        let e = enumerate_magic_squares(2, 3, 6).unwrap();
        // [[a, 3−a], [3−a, a]]: orbits {0,3} and {1,2}
        assert_eq!((e.count(), e.orbit_count()), (4, 2));
        let e = enumerate_magic_squares(2, 0, 6).unwrap();
        assert_eq!((e.count(), e.orbit_count()), (1, 1));
        assert!(matches!(enumerate_magic_squares(2, 7, 6), Err(Error::WeightCap(_))));
        assert!(enumerate_magic_squares(5, 1, 6).is_err());
        assert!(MagicSquare::new(vec![vec![1, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn basic_invariant_examples() {
        assert_eq!(basic_invariant_poly(&ms(&[&[1, 0], &[0, 1]])).to_matrix_string(2, "x"), "x11*x22 + x12*x21");
        assert_eq!(basic_invariant_poly(&ms(&[&[1, 1], &[1, 1]])).to_matrix_string(2, "x"), "x11*x12*x21*x22");
        assert_eq!(
            basic_invariant_poly(&ms(&[&[2, 0], &[0, 2]])).to_matrix_string(2, "x"),
            "x11^2*x22^2 + x12^2*x21^2"
        );
    }

    #[test]
    fn basic_invariants_are_permutation_invariant() {
        let a = ms(&[&[2, 1, 0], &[0, 1, 2], &[1, 1, 1]]);
        let p = basic_invariant_poly(&a);
        let n = 3;
        for s in 0..n - 1 {
            let swap = |x: usize| if x == s { s + 1 } else if x == s + 1 { s } else { x };
            let rows: Vec<MultiPoly> = (0..9).map(|v| MultiPoly::var(9, swap(v / n) * n + v % n)).collect();
            let cols: Vec<MultiPoly> = (0..9).map(|v| MultiPoly::var(9, (v / n) * n + swap(v % n))).collect();
            assert_eq!(p.substitute(&rows), p);
            assert_eq!(p.substitute(&cols), p);
        }
    }

    #[test]
    fn invariant_ring_examples() {
        for (n, r) in [(2, 1), (2, 2), (3, 1)] {
            let rep = invariant_ring_dimension_check(n, r, 6).unwrap();
            assert_eq!(rep.orbit_count, rep.fixed_dim);
        }
        assert_eq!(invariant_ring_dimension_check(3, 1, 6).unwrap().orbit_count, 1);
    }

    #[test]
    fn trace_examples() {
        assert!(trace_like_invariance_check(2, 2, 5, 1).unwrap());
        assert!(trace_like_invariance_check(3, 0, 2, 1).unwrap());
        assert!(trace_like_invariance_check(2, 3, 5, 1).unwrap());
    }

    #[test]
    fn family_examples() {
        let fam: Vec<_> = emit_obstruction_family(4).collect();
        let gammas: Vec<String> = fam.iter().map(|c| c.gamma.to_string()).collect();
        assert_eq!(gammas, ["4", "6", "8"]);
        assert!(fam.iter().all(|c| c.checks.even && c.checks.alpha_neq_beta));
        let full = verify_obstruction(&fam[0], true, 200).unwrap();
        assert!(full.checks.invariant_dim.unwrap() >= 1);
    }

    #[test]
    fn verification_rejects_odd() {
        let bad = ObstructionCertificate::structural(2, "3,1".parse().unwrap());
        assert_eq!(verify_obstruction(&bad, false, 200), Err(Error::NotAnObstruction("even".into())));
        let ok = ObstructionCertificate::structural(3, "4,2".parse().unwrap());
        assert!(verify_obstruction(&ok, false, 200).is_ok());
    }

    #[test]
    fn certificate_json() {
        let c = canonical_certificate(2);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"gamma":"4","checks":{"even":true,"alpha_neq_beta":true,"invariant_dim":null},"bitlength":5}"#
        );
        assert_eq!(ObstructionCertificate::from_json(&s).unwrap(), c);
    }
}
