use proptest::prelude::*;
use repcalc_core::obstructions::{
    basic_invariant_poly, canonical_certificate, emit_obstruction_family, enumerate_magic_squares,
    invariant_ring_dimension_check, trace_like_invariance_check, verify_obstruction, MagicSquare,
};

#[test]
fn magic_square_counts() {
    // (r+1) for 2×2; 1, 6, 21, 55 for 3×3 (Birkhoff polytope dilations)
    for r in 0..=4 {
        assert_eq!(enumerate_magic_squares(2, r, 10).unwrap().count(), r as usize + 1);
    }
    let counts: Vec<usize> = (0..=3).map(|r| enumerate_magic_squares(3, r, 10).unwrap().count()).collect();
    assert_eq!(counts, [1, 6, 21, 55]);
    assert_eq!(enumerate_magic_squares(4, 1, 10).unwrap().count(), 24);
}

#[test]
fn orbits_count_the_invariants() {
    for n in 2..=3 {
        for r in 0..=3 {
            let rep = invariant_ring_dimension_check(n, r, 10).unwrap();
            assert_eq!(rep.orbit_count, rep.fixed_dim, "n = {n}, r = {r}");
            assert_eq!(rep.basic_rank, rep.fixed_dim);
        }
    }
}

#[test]
fn power_traces_are_conjugation_invariant() {
    for (n, j) in [(2, 1), (2, 2), (2, 3), (3, 2)] {
        assert!(trace_like_invariance_check(n, j, 3, 11).unwrap());
    }
}

#[test]
fn emitted_certificates_verify() {
    let certs: Vec<_> = emit_obstruction_family(40).collect();
    assert_eq!(certs.len(), 39);
    for (i, c) in certs.iter().enumerate() {
        assert_eq!(c.n, i + 2);
        assert_eq!(c.gamma.parts(), [2 * c.n as u32]);
        assert_eq!(&verify_obstruction(c, false, 200).unwrap(), c);
    }
    for c in emit_obstruction_family(3) {
        let full = verify_obstruction(&c, true, 200).unwrap();
        assert_eq!(full.checks.invariant_dim, Some(1));
    }
}

#[test]
fn certificate_size_grows_logarithmically() {
    for n in [2usize, 10, 1000, 1 << 20, (1 << 31) - 1] {
        let c = canonical_certificate(n);
        let log = 64 - (n as u64).leading_zeros() as u64;
        assert!(c.bitlength <= 2 * log + 2, "n = {n}: {}", c.bitlength);
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.len() < 120 + 4 * log as usize);
    }
}

fn square() -> impl Strategy<Value = (Vec<Vec<u32>>, Vec<usize>, Vec<usize>)> {
    // sums of two permutation matrices of size 3, plus row and column permutations
    let perm = Just(vec![0usize, 1, 2]).prop_shuffle();
    (perm.clone(), perm.clone(), perm.clone(), perm).prop_map(|(a, b, rows, cols)| {
        let mut m = vec![vec![0u32; 3]; 3];
        for i in 0..3 {
            m[i][a[i]] += 1;
            m[i][b[i]] += 1;
        }
        (m, rows, cols)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Relabelling the variables by a row and column permutation fixes p_A.
    #[test]
    fn basic_invariants_are_fixed((entries, rows, cols) in square()) {
        let a = MagicSquare::new(entries).unwrap();
        let p = basic_invariant_poly(&a);
        let n = a.n();
        let mut moved = std::collections::BTreeMap::new();
        for (exps, c) in p.terms() {
            let mut e = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    e[rows[i] * n + cols[j]] = exps[i * n + j];
                }
            }
            moved.insert(e, c.clone());
        }
        prop_assert_eq!(&moved, p.terms());
        prop_assert_eq!(p.num_terms(), a.orbit().len());
    }
}
