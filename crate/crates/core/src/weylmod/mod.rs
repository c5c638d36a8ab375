//! Weyl modules `V_λ(GL_n)` realized inside `ℚ[Z]` by products of column
//! minors (one generator per semistandard tableau), with group actions,
//! fixed subspaces, and the stabilizer computations built on them.

mod symmetry;

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::Matrix;
use crate::partitions::{dim_weyl, enumerate_ssyt, Partition, Tableau};
use crate::poly::{poly_det, poly_mul_const, symbolic_matrix, MultiPoly};
use crate::rational::Rational;
use crate::sampling;

pub use symmetry::{symmetry_characterization, symmetry_characterization_dim, FormKind, SymmetryReport};

/// `e_T`: the product over the columns of `T` of the minor of the symbolic
/// `n×n` matrix `Z` on the first `len(column)` rows and the columns named by
/// the column's entries. Zero exactly when a column repeats an entry.
pub fn deruyts_generator(t: &Tableau, n: usize) -> Result<MultiPoly> {
    let z = symbolic_matrix(n);
    generator_of(t, &z, n)
}

/// `e_T` evaluated on an arbitrary matrix of polynomials in `n²` variables.
fn generator_of(t: &Tableau, z: &[Vec<MultiPoly>], n: usize) -> Result<MultiPoly> {
    let nv = n * n;
    let mut out = MultiPoly::one(nv);
    for col in t.columns() {
        if col.iter().any(|&e| e == 0 || e as usize > n) || col.len() > n {
            return Err(Error::Dimension(format!("tableau entries must lie in 1..={n}")));
        }
        let minor: Vec<Vec<MultiPoly>> = (0..col.len())
            .map(|r| col.iter().map(|&c| z[r][c as usize - 1].clone()).collect())
            .collect();
        out = &out * &poly_det(&minor, nv);
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct WeylModule {
    shape: Partition,
    n: usize,
    basis: Vec<(Tableau, MultiPoly)>,
    /// Monomials on which the basis restricts to an invertible square matrix.
    pivot_monomials: Vec<Vec<u32>>,
    /// Inverse of that restriction: coordinates = `pivot_inverse · f|pivots`.
    pivot_inverse: Matrix,
}

impl WeylModule {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(Tableau, MultiPoly)] {
        &self.basis
    }

    /// Coordinates of `f` in the `e_T` basis; fails if `f` is not in the span.
    pub fn coordinates(&self, f: &MultiPoly) -> Result<Vec<Rational>> {
        let restricted: Vec<Rational> = self.pivot_monomials.iter().map(|m| f.coeff(m)).collect();
        let c = self.pivot_inverse.mul_vec(&restricted)?;
        let mut rebuilt = MultiPoly::zero(f.num_vars());
        for (ci, (_, e)) in c.iter().zip(&self.basis) {
            rebuilt.add_scaled(e, ci);
        }
        if &rebuilt != f {
            return Err(Error::Verification(format!(
                "polynomial is not in the span of the V_{}(GL_{}) basis",
                self.shape, self.n
            )));
        }
        Ok(c)
    }

    /// Columns `cols` of the matrix of `f(Z) ↦ f(Z·g)`.
    pub fn action_columns(&self, g: &Matrix, cols: &[usize]) -> Result<Matrix> {
        self.action_columns_with(g, cols, Exec::default())
    }

    pub fn action_columns_with(&self, g: &Matrix, cols: &[usize], exec: Exec) -> Result<Matrix> {
        if g.rows() != self.n || g.cols() != self.n {
            return Err(Error::Dimension(format!("expected a {0}×{0} matrix", self.n)));
        }
        if g.determinant()?.is_zero() {
            return Err(Error::Singular);
        }
        let zg = poly_mul_const(&symbolic_matrix(self.n), g);
        let coords = exec.try_map(cols.to_vec(), |c| {
            let image = generator_of(&self.basis[c].0, &zg, self.n)?;
            self.coordinates(&image)
        })?;
        let mut m = Matrix::zeros(self.dim(), cols.len());
        for (j, col) in coords.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }

    /// Indices of basis vectors whose tableau content equals `weight`.
    pub fn weight_space(&self, weight: &[u32]) -> Vec<usize> {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, (t, _))| t.content(self.n) == weight)
            .map(|(i, _)| i)
            .collect()
    }
}

/// The module spanned by `e_T` over semistandard `T` of shape λ with entries
/// ≤ n. Linear independence is checked by exact rank.
pub fn weyl_module(shape: &Partition, n: usize, dim_cap: u64) -> Result<WeylModule> {
    let dim = dim_weyl(shape, n as u32);
    if dim > dim_cap {
        return Err(Error::DimensionBudget { dim, cap: dim_cap });
    }
    let tableaux = enumerate_ssyt(shape, n as u32);
    let basis = tableaux
        .into_iter()
        .map(|t| {
            let e = deruyts_generator(&t, n)?;
            Ok((t, e))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut monomials: Vec<Vec<u32>> = Vec::new();
    for (_, e) in &basis {
        for m in e.terms().keys() {
            if !index.contains_key(m) {
                index.insert(m.clone(), monomials.len());
                monomials.push(m.clone());
            }
        }
    }
    // rows: basis vectors, columns: monomial coordinates
    let mut coeffs = Matrix::zeros(basis.len(), monomials.len());
    for (i, (_, e)) in basis.iter().enumerate() {
        for (m, c) in e.terms() {
            coeffs[(i, index[m])] = c.clone();
        }
    }
    let pivots = coeffs.clone().rref_in_place();
    if pivots.len() != basis.len() {
        return Err(Error::Verification(format!(
            "e_T for V_{shape}(GL_{n}) have rank {} < {}",
            pivots.len(),
            basis.len()
        )));
    }
    let square = coeffs.select_columns(&pivots).transpose();
    Ok(WeylModule {
        shape: shape.clone(),
        n,
        pivot_monomials: pivots.iter().map(|&p| monomials[p].clone()).collect(),
        pivot_inverse: square.inverse()?,
        basis,
    })
}

pub fn group_action_matrix(m: &WeylModule, g: &Matrix) -> Result<Matrix> {
    let all: Vec<usize> = (0..m.dim()).collect();
    m.action_columns(g, &all)
}

/// Dimension of the vectors in the given weight space (or the whole module)
/// fixed by every generator.
pub fn fixed_subspace_dim(m: &WeylModule, generators: &[Matrix], weight: Option<&[u32]>) -> Result<usize> {
    let cols: Vec<usize> = match weight {
        Some(w) => m.weight_space(w),
        None => (0..m.dim()).collect(),
    };
    if cols.is_empty() {
        return Ok(0);
    }
    let mut blocks = Vec::with_capacity(generators.len());
    for g in generators {
        let mut a = m.action_columns(g, &cols)?;
        for (j, &c) in cols.iter().enumerate() {
            a[(c, j)] -= Rational::one();
        }
        blocks.push(a);
    }
    if blocks.is_empty() {
        return Ok(cols.len());
    }
    Ok(cols.len() - Matrix::vstack(&blocks)?.rank())
}

/// Index of `e_{T₀}` (row `i` of `T₀` filled with `i`). Checked to be an
/// eigenvector of five seeded random upper-triangular matrices, and to span
/// the full space of vectors fixed by their unipotent parts.
pub fn highest_weight_vector(m: &WeylModule) -> Result<usize> {
    if m.dim() == 0 {
        return Err(Error::Dimension(format!("V_{}(GL_{}) is zero", m.shape, m.n)));
    }
    let t0 = Tableau::canonical(&m.shape);
    let idx = m
        .basis
        .iter()
        .position(|(t, _)| *t == t0)
        .ok_or_else(|| Error::Verification("canonical tableau missing from basis".into()))?;
    let mut rng = sampling::seeded(0x4857);
    let mut unipotent_blocks = Vec::new();
    for _ in 0..5 {
        let b = sampling::random_upper_triangular(&mut rng, m.n);
        let col = m.action_columns(&b, &[idx])?;
        if (0..m.dim()).any(|i| i != idx && !col[(i, 0)].is_zero()) {
            return Err(Error::Verification("e_T0 is not a Borel eigenvector".into()));
        }
        let mut u = b.clone();
        for i in 0..m.n {
            u[(i, i)] = Rational::one();
        }
        let mut a = group_action_matrix(m, &u)?;
        for i in 0..m.dim() {
            a[(i, i)] -= Rational::one();
        }
        unipotent_blocks.push(a);
    }
    let fixed = Matrix::vstack(&unipotent_blocks)?.nullspace();
    let unique = fixed.len() == 1 && fixed[0].iter().enumerate().all(|(i, v)| (i == idx) != v.is_zero());
    if !unique {
        return Err(Error::Verification(format!(
            "unipotent-fixed space has dimension {} instead of the line through e_T0",
            fixed.len()
        )));
    }
    Ok(idx)
}

/// Permutation matrix of the transposition `(i i+1)`.
pub fn adjacent_transposition(n: usize, i: usize) -> Matrix {
    let mut g = Matrix::identity(n);
    g[(i, i)] = Rational::zero();
    g[(i + 1, i + 1)] = Rational::zero();
    g[(i, i + 1)] = Rational::one();
    g[(i + 1, i)] = Rational::one();
    g
}

/// Vectors of weight `(2,…,2)` in `V_γ(GL_n)` fixed by every permutation
/// matrix (plain 0/1 matrices; adjacent transpositions generate).
pub fn perm_stabilizer_invariants(gamma: &Partition, n: usize, dim_cap: u64) -> Result<usize> {
    if gamma.size() as usize != 2 * n {
        return Err(Error::SizeMismatch(format!("|{gamma}| = {} but 2n = {}", gamma.size(), 2 * n)));
    }
    if gamma.len() > n {
        return Err(Error::Dimension(format!("{gamma} has more than {n} parts")));
    }
    let module = weyl_module(gamma, n, dim_cap)?;
    let gens: Vec<Matrix> = (0..n.saturating_sub(1)).map(|i| adjacent_transposition(n, i)).collect();
    fixed_subspace_dim(&module, &gens, Some(&vec![2; n]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KempfReport {
    pub n: usize,
    /// Torus characters of the `n²` coordinates are pairwise distinct.
    pub distinct_characters: bool,
    /// `S_n × S_n` acts transitively on the coordinates.
    pub transitive: bool,
    pub degenerate: bool,
    pub stable: bool,
}

/// The coordinate `x_ij` has character `a_i b_j` on the torus
/// `{(diag a, diag b) : Π a_i Π b_j = 1}`; two such characters agree iff
/// their exponent vectors differ by a multiple of the all-ones vector.
pub fn kempf_irreducibility_check(n: usize) -> Result<KempfReport> {
    if n == 0 {
        return Err(Error::Dimension("n must be positive".into()));
    }
    if n == 1 {
        return Ok(KempfReport {
            n,
            distinct_characters: true,
            transitive: true,
            degenerate: true,
            stable: true,
        });
    }
    let character = |i: usize, j: usize| -> Vec<i64> {
        let mut v = vec![0; 2 * n];
        v[i] = 1;
        v[n + j] = 1;
        v
    };
    let coords: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut distinct = true;
    for (p, &(i, j)) in coords.iter().enumerate() {
        for &(k, l) in &coords[p + 1..] {
            let d: Vec<i64> = character(i, j).iter().zip(character(k, l)).map(|(a, b)| a - b).collect();
            if d.iter().all(|&x| x == d[0]) {
                distinct = false;
            }
        }
    }
    // orbit of (0,0) under adjacent row and column swaps
    let mut seen = vec![vec![false; n]; n];
    let mut stack = vec![(0, 0)];
    seen[0][0] = true;
    while let Some((i, j)) = stack.pop() {
        for s in 0..n - 1 {
            let swap = |x: usize| if x == s { s + 1 } else if x == s + 1 { s } else { x };
            for next in [(swap(i), j), (i, swap(j))] {
                if !seen[next.0][next.1] {
                    seen[next.0][next.1] = true;
                    stack.push(next);
                }
            }
        }
    }
    let transitive = seen.iter().flatten().all(|&b| b);
    Ok(KempfReport {
        n,
        distinct_characters: distinct,
        transitive,
        degenerate: false,
        stable: distinct && transitive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(deruyts_generator(&t(&[&[1]]), 2).unwrap().to_matrix_string(2, "z"), "z11");
        assert_eq!(
            deruyts_generator(&t(&[&[1], &[2]]), 2).unwrap().to_matrix_string(2, "z"),
            "z11*z22 - z12*z21"
        );
        assert!(deruyts_generator(&t(&[&[1], &[1]]), 2).unwrap().is_zero());
    }

    #[test]
    fn module_dimensions() {
        let m = weyl_module(&p("1,1"), 2, 200).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.basis()[0].1.to_matrix_string(2, "z"), "z11*z22 - z12*z21");
        assert_eq!(weyl_module(&p("2"), 2, 200).unwrap().dim(), 3);
        assert_eq!(weyl_module(&p("2,1"), 3, 200).unwrap().dim(), 8);
        assert!(matches!(weyl_module(&p("4,2"), 4, 50), Err(Error::DimensionBudget { .. })));
    }

    #[test]
    fn action_examples() {
        let g = Matrix::from_i64(&[vec![2, 1], vec![-1, 3]]);
        let m = weyl_module(&p("2,1"), 3, 200).unwrap();
        assert_eq!(group_action_matrix(&m, &Matrix::identity(3)).unwrap(), Matrix::identity(8));
        // V_(1) is the standard representation in the basis z11, z12
        let std = weyl_module(&p("1"), 2, 200).unwrap();
        assert_eq!(group_action_matrix(&std, &g).unwrap(), g);
        let det = weyl_module(&p("1,1"), 2, 200).unwrap();
        assert_eq!(group_action_matrix(&det, &g).unwrap(), Matrix::from_i64(&[vec![7]]));
        assert_eq!(
            group_action_matrix(&det, &Matrix::from_i64(&[vec![1, 2], vec![2, 4]])),
            Err(Error::Singular)
        );
    }

    #[test]
    fn highest_weight_examples() {
        let m = weyl_module(&p("2"), 2, 200).unwrap();
        let i = highest_weight_vector(&m).unwrap();
        assert_eq!(m.basis()[i].1.to_matrix_string(2, "z"), "z11^2");
        let m = weyl_module(&p("1,1"), 2, 200).unwrap();
        assert_eq!(highest_weight_vector(&m).unwrap(), 0);
        let m = weyl_module(&p("2,1"), 3, 200).unwrap();
        let i = highest_weight_vector(&m).unwrap();
        assert_eq!(m.basis()[i].0, t(&[&[1, 1], &[2]]));
    }

    #[test]
    fn fixed_subspace_examples() {
        let swap = adjacent_transposition(2, 0);
        let m = weyl_module(&p("2,1"), 3, 200).unwrap();
        assert_eq!(fixed_subspace_dim(&m, &[Matrix::identity(3)], None).unwrap(), 8);
        let m = weyl_module(&p("2"), 2, 200).unwrap();
        assert_eq!(fixed_subspace_dim(&m, &[swap.clone()], Some(&[1, 1])).unwrap(), 1);
        let m = weyl_module(&p("1,1"), 2, 200).unwrap();
        assert_eq!(fixed_subspace_dim(&m, &[swap], None).unwrap(), 0);
    }

    #[test]
    fn perm_stabilizer_examples() {
        assert!(perm_stabilizer_invariants(&p("4"), 2, 200).unwrap() >= 1);
        assert_eq!(perm_stabilizer_invariants(&p("3,1"), 2, 200).unwrap(), 0);
        assert!(perm_stabilizer_invariants(&p("2,2,2"), 3, 200).unwrap() >= 1);
        assert!(perm_stabilizer_invariants(&p("3"), 2, 200).is_err());
    }

    #[test]
    fn kempf_examples() {
        for n in 2..=4 {
            let r = kempf_irreducibility_check(n).unwrap();
            assert!(r.stable && r.distinct_characters && r.transitive && !r.degenerate);
        }
        let r = kempf_irreducibility_check(1).unwrap();
        assert!(r.stable && r.degenerate);
    }

    #[test]
    fn diagonal_action_scales_by_content() {
        let m = weyl_module(&p("2,1"), 3, 200).unwrap();
        let mut d = Matrix::identity(3);
        d[(0, 0)] = int(2);
        d[(1, 1)] = int(3);
        d[(2, 2)] = int(5);
        let a = group_action_matrix(&m, &d).unwrap();
        for (i, (tab, _)) in m.basis().iter().enumerate() {
            let c = tab.content(3);
            let expect = int(2i64.pow(c[0]) * 3i64.pow(c[1]) * 5i64.pow(c[2]));
            assert_eq!(a[(i, i)], expect);
        }
    }
}
