use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sp4coh::cohomology::ZkMode;
use sp4coh::HighestWeight;

#[derive(Debug, Parser)]
#[command(name = "sp4coh", version, about = "Exact cohomology of Sp4(Z) with coefficients in M_lambda")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// `symbolic`, `assume`, or `set K=V,K=V` with K the cusp-form weight 2*m2+4.
    #[arg(long = "zk-mode", num_args = 1..=2, value_names = ["MODE", "VALUES"], global = true)]
    pub zk_mode: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct WeightArgs {
    #[arg(long)]
    pub m1: u64,
    #[arg(long)]
    pub m2: u64,
}

impl WeightArgs {
    pub fn weight(self) -> HighestWeight {
        HighestWeight::new(self.m1, self.m2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum TableKind {
    EulerSym,
    EulerWeight,
    Cuspidal,
    HTotal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of M_lambda.
    Dim(WeightArgs),
    /// Homological Euler characteristic by torsion sum and by closed form.
    Chi(WeightArgs),
    /// Dimension of cuspidal cohomology.
    Cusp(WeightArgs),
    /// Cohomology dimensions per degree and in total.
    Hq(WeightArgs),
    /// Sweep one quantity over a grid of weights.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Largest k for `euler_sym`.
        #[arg(long, default_value_t = 149)]
        k_max: u64,
        /// Largest even m1 for the weight grids; defaults to 30 for
        /// `euler_weight` and 28 otherwise.
        #[arg(long)]
        m1_max: Option<u64>,
        #[arg(long, default_value_t = 14)]
        m2_max: u64,
        /// Refuse grids reaching beyond this n1 = m1 + m2.
        #[arg(long, default_value_t = 1000)]
        n1_cap: u64,
    },
    /// The 56 torsion classes.
    Torsion,
    /// Fixture comparisons and cross-path identities.
    Verify {
        /// Overrides the embedded tables and SP4COH_FIXTURE_DIR.
        #[arg(long)]
        fixture_dir: Option<PathBuf>,
        /// Sweep bound on n1 for the identity checks.
        #[arg(long, default_value_t = 60)]
        n1_max: u64,
    },
}

/// Parses the `--zk-mode` values.
pub fn parse_zk_mode(parts: &[String]) -> Result<ZkMode, String> {
    match parts {
        [] => Ok(ZkMode::Symbolic),
        [mode] if mode == "symbolic" => Ok(ZkMode::Symbolic),
        [mode] if mode == "assume" => Ok(ZkMode::AssumeNonvanishing),
        [mode, values] if mode == "set" => {
            let mut map = BTreeMap::new();
            for pair in values.split(',').filter(|s| !s.is_empty()) {
                let (k, v) = pair
                    .split_once('=')
                    .ok_or_else(|| format!("expected K=V in --zk-mode set, got {pair:?}"))?;
                let k: u64 = k.trim().parse().map_err(|_| format!("bad weight {k:?}"))?;
                let v: u64 = v.trim().parse().map_err(|_| format!("bad value {v:?}"))?;
                if k < 4 || !k.is_multiple_of(2) {
                    return Err(format!("weight {k} is not of the form 2*m2+4"));
                }
                map.insert(k, v);
            }
            Ok(ZkMode::Explicit(map))
        }
        other => Err(format!("unrecognized --zk-mode {other:?}")),
    }
}
