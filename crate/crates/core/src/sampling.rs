//! Seeded pseudo-random rational matrices for the randomized exact checks.
//! Everything downstream is exact; randomness only picks test points.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Matrix;
use crate::rational::{frac, Rational};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 4` and `1 ≤ q ≤ 3`.
pub fn small_rational(rng: &mut SeededRng) -> Rational {
    frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn nonzero_rational(rng: &mut SeededRng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_matrix(rng: &mut SeededRng, n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = small_rational(rng);
        }
    }
    m
}

/// Singular draws are rejected and redrawn.
pub fn random_invertible(rng: &mut SeededRng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n);
        if m.determinant().is_ok_and(|d| !d.is_zero()) {
            return m;
        }
    }
}

/// Upper triangular with nonzero diagonal.
pub fn random_upper_triangular(rng: &mut SeededRng, n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = nonzero_rational(rng);
        for j in i + 1..n {
            m[(i, j)] = small_rational(rng);
        }
    }
    m
}
