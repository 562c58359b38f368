//! Run configuration: a flat `key=value` file overridden by flags.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::Args;
use serde::Serialize;

use crate::chevrep::DEFAULT_MAX_DIM;
use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, TypeLetter};

pub const MAX_DIM_ENV: &str = "PWLAB_MAX_DIM";

#[derive(Args, Clone, Debug, Default)]
pub struct Flags {
    /// Type letter A–G.
    #[arg(long = "type")]
    pub type_letter: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Root-lattice coordinates of λ, e.g. "1,1".
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long = "max-degree")]
    pub max_degree: Option<i64>,
    /// 1-based simple root indices, e.g. "1,3".
    #[arg(long)]
    pub subset: Option<String>,
    /// Values α_i(s), one per simple root.
    #[arg(long = "s-params")]
    pub s_params: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// JSON report path (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Census CSV path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// key=value config file; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Record wall-clock milliseconds per check.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    #[serde(rename = "type")]
    pub type_letter: TypeLetter,
    pub rank: usize,
    /// Root-lattice coordinates.
    pub lambda: Vec<i64>,
    pub max_degree: i64,
    /// 0-based; `None` means the command's default.
    #[serde(serialize_with = "one_based")]
    pub subset: Option<Vec<usize>>,
    pub s_params: Option<Vec<i64>>,
    pub seed: u64,
    pub max_dim: usize,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub csv: Option<PathBuf>,
    #[serde(skip)]
    pub timing: bool,
}

fn one_based<S: serde::Serializer>(v: &Option<Vec<usize>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_seq(v.iter().map(|i| i + 1)),
        None => s.serialize_none(),
    }
}

pub fn parse_config_file(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_config_text(&text)
}

pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("line {}: expected key=value", n + 1)))?;
        out.insert(k.trim().replace('_', "-"), v.trim().to_string());
    }
    Ok(out)
}

fn parse_list<T: FromStr>(key: &str, s: &str) -> Result<Vec<T>> {
    let s = s.trim().trim_start_matches(['[', '{']).trim_end_matches([']', '}']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Config(format!("{key}: cannot parse {x:?}")))
        })
        .collect()
}

fn parse_one<T: FromStr>(key: &str, s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Config(format!("{key}: cannot parse {s:?}")))
}

/// Default `λ`: `ρ` when it lies in the root lattice, else `2ρ`.
pub fn default_lambda(rs: &RootSystem) -> Vec<i64> {
    let rho = rs.rho();
    let w = if rho.in_root_lattice {
        rho.coords
    } else {
        rho.coords.iter().map(|c| 2 * c).collect()
    };
    rs.weight_to_root_int(&w).expect("2ρ lies in the root lattice")
}

pub fn default_max_degree(type_letter: TypeLetter, rank: usize) -> i64 {
    match (type_letter, rank) {
        (TypeLetter::A, 1) => 3,
        (_, 2) => 2,
        _ => 1,
    }
}

impl RunConfig {
    /// Merge the config file (if any) with flags; flags win.
    pub fn resolve(flags: &Flags, max_dim_env: Option<&str>) -> Result<Self> {
        let file = match &flags.config {
            Some(p) => parse_config_file(p)?,
            None => BTreeMap::new(),
        };
        let pick = |key: &str, flag: Option<String>| flag.or_else(|| file.get(key).cloned());
        let known = [
            "type", "rank", "lambda", "max-degree", "subset", "s-params", "seed", "out", "csv", "timing",
        ];
        if let Some(k) = file.keys().find(|k| !known.contains(&k.as_str())) {
            return Err(Error::Config(format!("unknown key {k:?}")));
        }

        let type_letter: TypeLetter = parse_one(
            "type",
            &pick("type", flags.type_letter.clone()).ok_or_else(|| Error::Config("missing --type".into()))?,
        )?;
        let rank: usize = match flags.rank {
            Some(r) => r,
            None => parse_one(
                "rank",
                file.get("rank").ok_or_else(|| Error::Config("missing --rank".into()))?,
            )?,
        };
        let rs = RootSystem::new(type_letter, rank)?;
        let lambda = match pick("lambda", flags.lambda.clone()) {
            Some(s) => parse_list("lambda", &s)?,
            None => default_lambda(&rs),
        };
        let max_degree = match flags.max_degree {
            Some(d) => d,
            None => match file.get("max-degree") {
                Some(s) => parse_one("max-degree", s)?,
                None => default_max_degree(type_letter, rank),
            },
        };
        if max_degree < 0 {
            return Err(Error::Config("max-degree must be non-negative".into()));
        }
        let subset = match pick("subset", flags.subset.clone()) {
            Some(s) => {
                let one: Vec<usize> = parse_list("subset", &s)?;
                if one.iter().any(|&i| i == 0 || i > rank) {
                    return Err(Error::InvalidSubset { subset: one, rank });
                }
                let mut zero: Vec<usize> = one.iter().map(|i| i - 1).collect();
                zero.sort_unstable();
                zero.dedup();
                Some(zero)
            }
            None => None,
        };
        let s_params = pick("s-params", flags.s_params.clone())
            .map(|s| parse_list("s-params", &s))
            .transpose()?;
        let seed = match flags.seed {
            Some(s) => s,
            None => file.get("seed").map(|s| parse_one("seed", s)).transpose()?.unwrap_or(0),
        };
        let timing = flags.timing
            || file
                .get("timing")
                .map(|s| parse_one::<bool>("timing", s))
                .transpose()?
                .unwrap_or(false);
        let max_dim = match max_dim_env {
            Some(s) => parse_one(MAX_DIM_ENV, s)?,
            None => DEFAULT_MAX_DIM,
        };
        Ok(RunConfig {
            type_letter,
            rank,
            lambda,
            max_degree,
            subset,
            s_params,
            seed,
            max_dim,
            out: flags.out.clone().or_else(|| file.get("out").map(PathBuf::from)),
            csv: flags.csv.clone().or_else(|| file.get("csv").map(PathBuf::from)),
            timing,
        })
    }
}
