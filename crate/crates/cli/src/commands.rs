use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use repcalc_core::acceptance;
use repcalc_core::kronecker::{det_stabilizer_invariant_mult, g_stretch, kronecker};
use repcalc_core::lr::{lr_coefficient, lr_positive, lr_stretch, LrQuery};
use repcalc_core::obstructions::{
    emit_obstruction_family, enumerate_magic_squares, invariant_ring_dimension_check, verify_obstruction,
    ObstructionCertificate,
};
use repcalc_core::polytope::{ehrhart_counts, fit_quasipolynomial, FitOptions, PolytopeFile};
use repcalc_core::symfunc::{plethysm_expand, product_expand};
use repcalc_core::weylmod::{
    highest_weight_vector, kempf_irreducibility_check, perm_stabilizer_invariants, symmetry_characterization,
    weyl_module, FormKind,
};
use repcalc_core::{Config, Error, Partition, Result};
use serde_json::{json, Value};

use crate::args::{
    Command, EhrhartArgs, FitArgs, KronArgs, KronCommand, LrCommand, MagicArgs, ObstructCommand, SymcheckArgs,
    SymfuncCommand, Triple, WeylCommand,
};

/// Payload plus whether the command succeeded (`accept` can fail without a
/// domain error).
pub struct Output {
    pub payload: Value,
    pub ok: bool,
}

impl From<Value> for Output {
    fn from(payload: Value) -> Output {
        Output { payload, ok: true }
    }
}

pub fn run(command: &Command, config: &Config) -> Result<Output> {
    match command {
        Command::Lr(c) => lr(c, config).map(Output::from),
        Command::Symfunc(c) => symfunc(c, config).map(Output::from),
        Command::Ehrhart(a) => ehrhart(a, config).map(Output::from),
        Command::Kron(a) => kron(a, config).map(Output::from),
        Command::Weyl(c) => weyl(c, config).map(Output::from),
        Command::Obstruct(c) => obstruct(c, config).map(Output::from),
        Command::Magic(a) => magic(a, config).map(Output::from),
        Command::Symcheck(a) => symcheck(a).map(Output::from),
        Command::Accept => Ok(accept(config)),
    }
}

fn partition(s: &str) -> Result<Partition> {
    s.parse()
}

fn query(t: &Triple) -> Result<LrQuery> {
    Ok(LrQuery::new(partition(&t.alpha)?, partition(&t.beta)?, partition(&t.lambda)?))
}

fn fit_options(config: &Config, args: &FitArgs) -> FitOptions {
    FitOptions {
        max_period: args.max_period.unwrap_or(config.max_period),
        max_degree: config.max_degree,
        holdout: args.holdout.unwrap_or(config.holdout),
        skip_prefix: 0,
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload types serialize")
}

fn lr(c: &LrCommand, config: &Config) -> Result<Value> {
    match c {
        LrCommand::Coeff(t) => Ok(to_value(&lr_coefficient(&query(t)?)?)),
        LrCommand::Positive(t) => Ok(json!({ "positive": lr_positive(&query(t)?) })),
        LrCommand::Stretch { triple, k, fit } => Ok(to_value(&lr_stretch(&query(triple)?, *k, fit_options(config, fit))?)),
    }
}

fn expansion(map: &BTreeMap<Partition, u64>) -> Value {
    to_value(map)
}

fn symfunc(c: &SymfuncCommand, config: &Config) -> Result<Value> {
    match c {
        SymfuncCommand::Product { alpha, beta } => {
            let (a, b) = (partition(alpha)?, partition(beta)?);
            Ok(json!({ "alpha": a, "beta": b, "expansion": expansion(&product_expand(&a, &b)?) }))
        }
        SymfuncCommand::Plethysm { outer, inner } => {
            let (p, m) = (partition(outer)?, partition(inner)?);
            let e = plethysm_expand(&p, &m, config.plethysm_degree_cap)?;
            Ok(json!({ "outer": p, "inner": m, "expansion": expansion(&e) }))
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn ehrhart(a: &EhrhartArgs, config: &Config) -> Result<Value> {
    let pp = PolytopeFile::from_json(&read(&a.polytope)?)?.param_polytope()?;
    let values = ehrhart_counts(&pp, a.k)?;
    let mut out = json!({
        "k": a.k,
        "count": values.last().copied().unwrap_or(1),
        "values": values,
    });
    if a.k == 0 {
        out["count"] = json!(pp.at(0).count_integer_points()?);
    }
    if a.fit {
        let signed: Vec<i64> = values.iter().map(|&v| v as i64).collect();
        out["fit"] = to_value(&fit_quasipolynomial(&signed, fit_options(config, &a.fit_args))?);
    }
    Ok(out)
}

fn kron(a: &KronArgs, config: &Config) -> Result<Value> {
    match &a.command {
        Some(KronCommand::DetInvariant { lambda, m }) => {
            let l = partition(lambda)?;
            Ok(json!({ "lambda": l, "m": m, "multiplicity": det_stabilizer_invariant_mult(&l, *m)? }))
        }
        Some(KronCommand::GStretch { lambda, m, k, fit }) => {
            let l = partition(lambda)?;
            Ok(to_value(&g_stretch(&l, *m, *k, config.character_table_cap, fit_options(config, fit))?))
        }
        None => {
            let [l, m, n] = &a.partitions[..] else {
                return Err(Error::Parse("kron expects three partitions".into()));
            };
            let (l, m, n) = (partition(l)?, partition(m)?, partition(n)?);
            if l.size() as usize > config.character_table_cap {
                return Err(Error::CharacterBudget {
                    k: 1,
                    size: l.size() as usize,
                    cap: config.character_table_cap,
                });
            }
            let g = kronecker(&l, &m, &n)?;
            Ok(json!({ "lambda": l, "mu": m, "nu": n, "kronecker": g }))
        }
    }
}

fn weyl(c: &WeylCommand, config: &Config) -> Result<Value> {
    match c {
        WeylCommand::Dim { lambda, n, basis } => {
            let l = partition(lambda)?;
            if !basis {
                let dim = repcalc_core::partitions::dim_weyl(&l, *n as u32);
                return Ok(json!({ "lambda": l, "n": n, "dim": dim }));
            }
            let module = weyl_module(&l, *n, config.weyl_dim_cap)?;
            let elems: Vec<Value> = module
                .basis()
                .iter()
                .map(|(t, p)| json!({ "tableau": t.to_string(), "poly": p.to_matrix_string(*n, "z") }))
                .collect();
            let hw = if module.dim() > 0 { Some(highest_weight_vector(&module)?) } else { None };
            Ok(json!({ "lambda": l, "n": n, "dim": module.dim(), "basis": elems, "highest_weight": hw }))
        }
        WeylCommand::Invariants { gamma, n } => {
            let g = partition(gamma)?;
            let dim = perm_stabilizer_invariants(&g, *n, config.weyl_dim_cap)?;
            Ok(json!({ "gamma": g, "n": n, "invariant_dim": dim, "even": g.is_even() }))
        }
        WeylCommand::Symcheck(a) => symcheck(a),
        WeylCommand::Kempf { n } => Ok(to_value(&kempf_irreducibility_check(*n)?)),
    }
}

fn symcheck(a: &SymcheckArgs) -> Result<Value> {
    let kind: FormKind = a.kind.parse()?;
    Ok(to_value(&symmetry_characterization(kind, a.size)?))
}

fn obstruct(c: &ObstructCommand, config: &Config) -> Result<Value> {
    match c {
        ObstructCommand::Emit { max, full } => {
            let certs = emit_obstruction_family(*max)
                .map(|cert| if *full { verify_obstruction(&cert, true, config.weyl_dim_cap) } else { Ok(cert) })
                .collect::<Result<Vec<_>>>()?;
            Ok(json!({ "certificates": certs }))
        }
        ObstructCommand::Verify { file, full } => {
            let text = read(file)?;
            let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let certs: Vec<ObstructionCertificate> = match value {
                Value::Array(_) => serde_json::from_value(value),
                Value::Object(ref o) if o.contains_key("certificates") => serde_json::from_value(o["certificates"].clone()),
                _ => serde_json::from_value(value).map(|c| vec![c]),
            }
            .map_err(|e| Error::Parse(format!("certificate: {e}")))?;
            let verified = certs
                .iter()
                .map(|c| verify_obstruction(c, *full, config.weyl_dim_cap))
                .collect::<Result<Vec<_>>>()?;
            Ok(json!({ "verified": true, "certificates": verified }))
        }
    }
}

fn magic(a: &MagicArgs, config: &Config) -> Result<Value> {
    let squares = enumerate_magic_squares(a.n, a.r, config.magic_weight_cap)?;
    let reps: Vec<&[Vec<u32>]> = squares.orbit_representatives.iter().map(|s| s.entries()).collect();
    let mut out = json!({
        "n": a.n,
        "r": a.r,
        "count": squares.count(),
        "orbit_count": squares.orbit_count(),
        "orbit_representatives": reps,
    });
    if a.check {
        out["invariant_check"] = to_value(&invariant_ring_dimension_check(a.n, a.r, config.magic_weight_cap)?);
    }
    Ok(out)
}

fn accept(config: &Config) -> Output {
    let outcomes = acceptance::run_all(config);
    for o in &outcomes {
        eprintln!("{}", o.line());
    }
    let ok = outcomes.iter().all(|o| o.passed);
    Output {
        payload: json!({ "passed": ok, "criteria": outcomes }),
        ok,
    }
}
