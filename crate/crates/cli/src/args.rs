use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "repcalc", version, about = "Exact representation-theory and polytope computations")]
pub struct Cli {
    /// Emit JSON (the only output format; accepted for explicitness).
    #[arg(long, global = true)]
    pub json: bool,

    /// JSON file overriding computation budgets.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Littlewood–Richardson coefficients.
    #[command(subcommand)]
    Lr(LrCommand),
    /// Schur products and plethysm.
    #[command(subcommand)]
    Symfunc(SymfuncCommand),
    /// Integer-point counts of a parametrized polytope.
    Ehrhart(EhrhartArgs),
    /// Kronecker coefficients and determinant-stabilizer multiplicities.
    Kron(KronArgs),
    /// Explicit Weyl modules and stabilizer invariants.
    #[command(subcommand)]
    Weyl(WeylCommand),
    /// Obstruction certificates.
    #[command(subcommand)]
    Obstruct(ObstructCommand),
    /// Magic squares and their orbits.
    Magic(MagicArgs),
    /// Symmetry characterization of det or perm.
    Symcheck(SymcheckArgs),
    /// Run the acceptance suite and print a pass/fail manifest.
    Accept,
}

#[derive(Debug, Args)]
pub struct Triple {
    pub alpha: String,
    pub beta: String,
    pub lambda: String,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub max_period: Option<usize>,
    #[arg(long)]
    pub holdout: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum LrCommand {
    /// c^λ_{α,β} by tableaux and by hive count, which must agree.
    Coeff(Triple),
    /// Positivity by LP feasibility of the hive polytope.
    Positive(Triple),
    /// c^{kλ}_{kα,kβ} for k = 1..K with a quasi-polynomial fit.
    Stretch {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        fit: FitArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SymfuncCommand {
    /// Schur expansion of s_α·s_β.
    Product { alpha: String, beta: String },
    /// Schur expansion of s_π[s_μ].
    Plethysm { outer: String, inner: String },
}

#[derive(Debug, Args)]
pub struct EhrhartArgs {
    /// Polytope file: {"A": [[...]], "b": [...], "c": [...]}.
    #[arg(long)]
    pub polytope: PathBuf,
    #[arg(long)]
    pub k: u64,
    /// Also fit a quasi-polynomial to the counts at 1..K.
    #[arg(long)]
    pub fit: bool,
    #[command(flatten)]
    pub fit_args: FitArgs,
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
pub struct KronArgs {
    #[command(subcommand)]
    pub command: Option<KronCommand>,
    /// λ μ ν
    #[arg(num_args = 3, value_names = ["LAMBDA", "MU", "NU"])]
    pub partitions: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum KronCommand {
    /// Multiplicity of SL_m×SL_m invariants in V_λ(GL_{m²}).
    DetInvariant {
        lambda: String,
        #[arg(long)]
        m: u32,
    },
    /// The same multiplicity along kλ for k = 1..K.
    GStretch {
        lambda: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        fit: FitArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum WeylCommand {
    /// Dimension (and optionally basis) of V_λ(GL_n).
    Dim {
        lambda: String,
        n: usize,
        /// Include the e_T basis polynomials and the highest weight vector.
        #[arg(long)]
        basis: bool,
    },
    /// Permutation-fixed weight-(2,…,2) vectors in V_γ(GL_n).
    Invariants {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        n: usize,
    },
    /// Symmetry characterization of det or perm.
    Symcheck(SymcheckArgs),
    /// Torus-character and transitivity check for the permanent.
    Kempf {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct SymcheckArgs {
    /// det or perm
    pub kind: String,
    #[arg(long)]
    pub size: usize,
}

#[derive(Debug, Subcommand)]
pub enum ObstructCommand {
    /// Certificates for γ_n = (2n), n = 2..=max.
    Emit {
        #[arg(long)]
        max: usize,
        /// Also compute the invariant dimension for n ≤ 3.
        #[arg(long)]
        full: bool,
    },
    /// Verify a certificate file (one certificate or an array).
    Verify {
        file: PathBuf,
        #[arg(long)]
        full: bool,
    },
}

#[derive(Debug, Args)]
pub struct MagicArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: u32,
    /// Compare the orbit count with the invariant-space dimension (n ≤ 3).
    #[arg(long)]
    pub check: bool,
}
