//! The acceptance suite: eleven exact checks with wall-clock limits, shared
//! by the `accept` subcommand and the acceptance test target.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::kronecker::{det_stabilizer_invariant_mult, kronecker};
use crate::lr::{lr_coefficient, lr_positive, lr_stretch, LrQuery};
use crate::obstructions::{emit_obstruction_family, enumerate_magic_squares, invariant_ring_dimension_check, verify_obstruction};
use crate::partitions::{dim_weyl, enumerate_ssyt, partitions_of, Partition};
use crate::polytope::{ehrhart_counts, fit_quasipolynomial, FitOptions, ParamPolytope, Polytope};
use crate::rational::{frac, int};
use crate::symfunc::{plethysm_expand, product_expand};
use crate::weylmod::{kempf_irreducibility_check, perm_stabilizer_invariants, symmetry_characterization, FormKind};

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    run: fn(&Config) -> Result<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({} ms, limit {} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.limit_ms,
            self.detail
        )
    }
}

impl Criterion {
    pub fn run(&self, config: &Config) -> Outcome {
        let start = Instant::now();
        let result = (self.run)(config);
        let elapsed = start.elapsed();
        let (passed, detail) = match result {
            Ok(d) if elapsed <= self.limit => (true, d),
            Ok(d) => (false, format!("{d}; exceeded time limit")),
            Err(e) => (false, e.to_string()),
        };
        Outcome {
            id: self.id,
            name: self.name,
            passed,
            detail,
            elapsed_ms: elapsed.as_millis(),
            limit_ms: self.limit.as_millis(),
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion { id: 1, name: "LR oracle triangle", limit: secs(120), run: lr_triangle },
        Criterion { id: 2, name: "saturation", limit: secs(120), run: saturation },
        Criterion { id: 3, name: "LR stretching quasi-polynomial", limit: secs(300), run: lr_stretching },
        Criterion { id: 4, name: "plethysm oracle", limit: secs(300), run: plethysm_oracle },
        Criterion { id: 5, name: "Kronecker consistency", limit: secs(120), run: kronecker_consistency },
        Criterion { id: 6, name: "even-partition criterion", limit: secs(600), run: even_partitions },
        Criterion { id: 7, name: "symmetry characterization", limit: secs(600), run: symmetry },
        Criterion { id: 8, name: "magic-square basis", limit: secs(300), run: magic_basis },
        Criterion { id: 9, name: "strongly explicit family", limit: secs(1), run: explicit_family },
        Criterion { id: 10, name: "Kempf criterion", limit: secs(1), run: kempf },
        Criterion { id: 11, name: "Ehrhart kernel", limit: secs(60), run: ehrhart_kernel },
    ]
}

pub fn run_all(config: &Config) -> Vec<Outcome> {
    criteria().iter().map(|c| c.run(config)).collect()
}

fn fail(msg: String) -> Error {
    Error::Verification(msg)
}

fn partitions_up_to(max: u32) -> Vec<Partition> {
    (0..=max).flat_map(|n| partitions_of(n, None)).collect()
}

/// `(α, β, λ)` with `|α|, |β| ≤ 4`, `λ ⊢ |α| + |β|`, all lengths ≤ 4,
/// grouped by `(α, β)`.
fn lr_range() -> Vec<(Partition, Partition, Vec<Partition>)> {
    let small = partitions_up_to(4);
    let mut out = Vec::new();
    for a in &small {
        for b in &small {
            out.push((a.clone(), b.clone(), partitions_of(a.size() + b.size(), Some(4))));
        }
    }
    out
}

fn lr_triangle(_: &Config) -> Result<String> {
    let groups = lr_range();
    let counts = Exec::default().try_map(groups, |(a, b, lambdas)| {
        let product = product_expand(&a, &b)?;
        for l in &lambdas {
            let q = LrQuery::new(a.clone(), b.clone(), l.clone());
            let c = lr_coefficient(&q)?;
            let schur = product.get(l).copied().unwrap_or(0);
            if c.tableau != schur || c.hive != schur {
                return Err(fail(format!(
                    "({a}; {b}; {l}): tableau {}, hive {}, Schur product {schur}",
                    c.tableau, c.hive
                )));
            }
        }
        Ok(lambdas.len())
    })?;
    Ok(format!("{} triples agree", counts.iter().sum::<usize>()))
}

fn saturation(_: &Config) -> Result<String> {
    let counts = Exec::default().try_map(lr_range(), |(a, b, lambdas)| {
        let mut positive = 0;
        for l in &lambdas {
            let q = LrQuery::new(a.clone(), b.clone(), l.clone());
            let lp = lr_positive(&q);
            let c1 = lr_coefficient(&q)?.value() > 0;
            let c2 = lr_coefficient(&q.scale(2))?.value() > 0;
            if lp != c1 || c1 != c2 {
                return Err(fail(format!("({a}; {b}; {l}): LP {lp}, c > 0 {c1}, c(2·) > 0 {c2}")));
            }
            positive += usize::from(c1);
        }
        Ok((lambdas.len(), positive))
    })?;
    let total: usize = counts.iter().map(|c| c.0).sum();
    let positive: usize = counts.iter().map(|c| c.1).sum();
    Ok(format!("{total} triples, {positive} positive, all three tests agree"))
}

pub const STRETCH_QUERIES: [(&str, &str, &str); 10] = [
    ("2,1", "2,1", "3,2,1"),
    ("1", "1", "2"),
    ("1", "1", "1,1"),
    ("2,1", "1", "3,1"),
    ("2,1", "1,1", "3,1,1"),
    ("3,1", "2,1", "4,2,1"),
    ("2,2", "2,1", "3,2,1,1"),
    ("2,1,1", "2,1", "3,2,1,1"),
    ("3,1", "3,1", "4,3,1"),
    ("3,2,1", "2,1", "4,3,2"),
];

fn lr_stretching(_: &Config) -> Result<String> {
    let opts = FitOptions {
        max_period: 4,
        max_degree: 6,
        holdout: 2,
        skip_prefix: 0,
    };
    let mut periods = Vec::new();
    for (a, b, l) in STRETCH_QUERIES {
        let q = LrQuery::new(a.parse()?, b.parse()?, l.parse()?);
        let s = lr_stretch(&q, 7, opts)?;
        let fit = s.fit.as_ref().expect("lr_stretch always fits");
        if (a, b, l) == STRETCH_QUERIES[0] {
            let expect: Vec<u64> = (1..=7).map(|k| k + 1).collect();
            if s.values != expect {
                return Err(fail(format!("c^(3,2,1)_(2,1),(2,1) stretch {:?} ≠ k + 1", s.values)));
            }
        }
        periods.push(format!("{l}:{}/{}", fit.period(), fit.degree().map_or(-1, |d| d as i64)));
    }
    Ok(format!("all 10 fit (λ:period/degree) {}", periods.join(" ")))
}

fn expect_map(got: &BTreeMap<Partition, u64>, want: &[(&str, u64)], what: &str) -> Result<()> {
    let want: BTreeMap<Partition, u64> = want.iter().map(|(p, c)| (p.parse().unwrap(), *c)).collect();
    if *got != want {
        return Err(fail(format!("{what}: got {got:?}")));
    }
    Ok(())
}

fn plethysm_oracle(config: &Config) -> Result<String> {
    let cap = config.plethysm_degree_cap;
    expect_map(&plethysm_expand(&"2".parse()?, &"2".parse()?, cap)?, &[("4", 1), ("2,2", 1)], "h2[h2]")?;
    expect_map(&plethysm_expand(&"1,1".parse()?, &"2".parse()?, cap)?, &[("3,1", 1)], "e2[h2]")?;

    let mut pairs = Vec::new();
    for pi in partitions_up_to(8).into_iter().filter(|p| !p.is_empty()) {
        for mu in partitions_up_to(8).into_iter().filter(|p| !p.is_empty()) {
            if pi.size() * mu.size() <= 8 {
                pairs.push((pi.clone(), mu));
            }
        }
    }
    let checked = Exec::default().try_map(pairs, |(pi, mu)| {
        let expansion = plethysm_expand(&pi, &mu, cap)?;
        for n in 1..=3u32 {
            let lhs: u64 = expansion.iter().map(|(nu, a)| a * dim_weyl(nu, n)).sum();
            let alphabet = dim_weyl(&mu, n) as u32;
            let rhs = enumerate_ssyt(&pi, alphabet).len() as u64;
            if lhs != rhs {
                return Err(fail(format!("s_{pi}[s_{mu}] at n = {n}: Σ a·dim = {lhs}, SSYT count {rhs}")));
            }
        }
        Ok(())
    })?;

    // a^{(2k)}_{(k),(2)} for k = 1..4
    let series = (1..=4u32)
        .map(|k| {
            let e = plethysm_expand(&Partition::new(vec![k])?, &"2".parse()?, cap)?;
            Ok(e.get(&Partition::new(vec![2 * k])?).copied().unwrap_or(0) as i64)
        })
        .collect::<Result<Vec<i64>>>()?;
    let fit = fit_quasipolynomial(&series, FitOptions::default())?;
    if fit.components() != [vec![int(1)]] {
        return Err(fail(format!("stretched plethysm {series:?} does not fit the constant 1")));
    }
    Ok(format!("{} (π, μ) pairs satisfy the dimension identity for n ≤ 3; stretched series {series:?} fits", checked.len()))
}

fn kronecker_consistency(_: &Config) -> Result<String> {
    let mut triples = 0;
    for m in 1..=5 {
        let parts = partitions_of(m, None);
        let trivial = Partition::new(vec![m])?;
        for l in &parts {
            for mu in &parts {
                let g = kronecker(&trivial, l, mu)?;
                if g != u64::from(l == mu) {
                    return Err(fail(format!("g((m), {l}, {mu}) = {g}")));
                }
                for nu in &parts {
                    let base = kronecker(l, mu, nu)?;
                    let perms = [
                        kronecker(l, nu, mu)?,
                        kronecker(mu, l, nu)?,
                        kronecker(mu, nu, l)?,
                        kronecker(nu, l, mu)?,
                        kronecker(nu, mu, l)?,
                    ];
                    if perms.iter().any(|&g| g != base) {
                        return Err(fail(format!("g({l}, {mu}, {nu}) not symmetric")));
                    }
                    triples += 1;
                }
            }
        }
    }
    let a = det_stabilizer_invariant_mult(&"2".parse()?, 2)?;
    let b = det_stabilizer_invariant_mult(&"1,1".parse()?, 2)?;
    if (a, b) != (1, 0) {
        return Err(fail(format!("det-stabilizer multiplicities ({a}, {b}) ≠ (1, 0)")));
    }
    Ok(format!("{triples} triples symmetric, Cauchy δ holds, det-invariant (2)→1 (1,1)→0"))
}

fn even_partitions(config: &Config) -> Result<String> {
    let mut cases = Vec::new();
    for n in [2usize, 3] {
        for gamma in partitions_of(2 * n as u32, Some(n)) {
            let dim = perm_stabilizer_invariants(&gamma, n, config.weyl_dim_cap)?;
            if (dim > 0) != gamma.is_even() {
                return Err(fail(format!("n = {n}, γ = {gamma}: invariant dimension {dim}")));
            }
            cases.push(format!("{gamma}:{dim}"));
        }
    }
    Ok(format!("invariant > 0 exactly for even γ [{}]", cases.join(" ")))
}

fn symmetry(_: &Config) -> Result<String> {
    let mut out = Vec::new();
    for kind in [FormKind::Det, FormKind::Perm] {
        for m in [2, 3] {
            let r = symmetry_characterization(kind, m)?;
            if r.fixed_dim != 1 || !r.spans_reference {
                return Err(fail(format!("{kind} m = {m}: fixed dimension {}, spans {kind}: {}", r.fixed_dim, r.spans_reference)));
            }
            out.push(format!("{kind}{m}: 1 of {}", r.form_space_dim));
        }
    }
    Ok(out.join(", "))
}

fn magic_basis(config: &Config) -> Result<String> {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        let ones = enumerate_magic_squares(n, 1, config.magic_weight_cap)?;
        let fact: usize = (1..=n).product();
        if ones.count() != fact || ones.orbit_count() != 1 {
            return Err(fail(format!("n = {n}, r = 1: {} squares, {} orbits", ones.count(), ones.orbit_count())));
        }
        for r in 0..=3 {
            let rep = invariant_ring_dimension_check(n, r, config.magic_weight_cap)?;
            out.push(format!("({n},{r}):{}", rep.orbit_count));
        }
    }
    Ok(format!("orbits = invariant dimension {}", out.join(" ")))
}

fn explicit_family(config: &Config) -> Result<String> {
    let certs: Vec<_> = emit_obstruction_family(50).collect();
    if certs.len() != 49 {
        return Err(fail(format!("{} certificates", certs.len())));
    }
    for c in &certs {
        verify_obstruction(c, false, config.weyl_dim_cap)?;
    }
    let mut dims = Vec::new();
    for c in &certs[..2] {
        let full = verify_obstruction(c, true, config.weyl_dim_cap)?;
        match full.checks.invariant_dim {
            Some(d) if d >= 1 => dims.push(d),
            other => return Err(fail(format!("n = {}: invariant_dim {other:?}", c.n))),
        }
    }
    let max_bits = certs.iter().map(|c| c.bitlength).max().unwrap_or(0);
    Ok(format!("49 certificates verified, max bitlength {max_bits}, full invariant dims {dims:?}"))
}

fn kempf(_: &Config) -> Result<String> {
    for n in 2..=4 {
        if !kempf_irreducibility_check(n)?.stable {
            return Err(fail(format!("n = {n} not stable")));
        }
    }
    Ok("n = 2, 3, 4 stable".into())
}

fn ehrhart_kernel(config: &Config) -> Result<String> {
    for n in 1..=3usize {
        let cube = Polytope::cube(&vec![int(0); n], &vec![int(1); n]);
        let pp = ParamPolytope::dilations_of(&cube);
        if pp.at(0).count_integer_points()? != 1 {
            return Err(fail(format!("cube n = {n} at k = 0")));
        }
        let counts = ehrhart_counts(&pp, 5)?;
        let expect: Vec<u64> = (1..=5u64).map(|k| (k + 1).pow(n as u32)).collect();
        if counts != expect {
            return Err(fail(format!("cube n = {n}: {counts:?}")));
        }
    }
    let half = Polytope::cube(&[int(0)], &[frac(1, 2)]);
    let values: Vec<i64> = ehrhart_counts(&ParamPolytope::dilations_of(&half), 10)?.iter().map(|&v| v as i64).collect();
    let opts = FitOptions {
        max_period: config.max_period,
        max_degree: config.max_degree,
        holdout: 2,
        skip_prefix: 0,
    };
    let fit = fit_quasipolynomial(&values, opts)?;
    // even k: 1 + k/2; odd k: (k + 1)/2
    let expect = [vec![int(1), frac(1, 2)], vec![frac(1, 2), frac(1, 2)]];
    if fit.components() != expect {
        return Err(fail(format!("half interval fit {:?}", fit.components())));
    }
    Ok(format!("cubes (k+1)^n for n ≤ 3, k ≤ 5; half interval {values:?} has period 2"))
}
