//! Shared command-line options, the key=value config file, and their
//! resolution into validated run parameters. Precedence: explicit flag,
//! then config file entry, then built-in default.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use razavy_core::families::{make_tilde, FamilySpec};
use razavy_core::{Error, PotentialParams};

/// Environment variable supplying the default for `--jobs`.
pub const JOBS_ENV: &str = "RAZAVY_QES_JOBS";

const CONFIG_KEYS: [&str; 7] = ["M", "zeta", "family", "periodic", "format", "output", "jobs"];

/// Failures split by exit code: usage/validation problems exit 1, math
/// disagreements and numerical refusals exit 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Math(Error::InvalidParams(_)) | CliError::Math(Error::InvalidBranch { .. }) => 1,
            CliError::Math(_) => 2,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => msg.clone(),
            CliError::Math(e) => e.to_string(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Which polynomial family a command addresses. `hat+`/`hat-` pick the
/// branch with σ = ±1 (M odd) or η = ±1 (M even).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyChoice {
    Tilde,
    HatPlus,
    HatMinus,
}

impl FamilyChoice {
    pub fn label(self) -> &'static str {
        match self {
            FamilyChoice::Tilde => "tilde",
            FamilyChoice::HatPlus => "hat+",
            FamilyChoice::HatMinus => "hat-",
        }
    }

    fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "tilde" => Ok(FamilyChoice::Tilde),
            "hat+" => Ok(FamilyChoice::HatPlus),
            "hat-" => Ok(FamilyChoice::HatMinus),
            other => Err(CliError::Usage(format!(
                "unknown family {other:?}: expected tilde, hat+ or hat-"
            ))),
        }
    }
}

/// Options common to every subcommand. All of them optional so that a
/// config file can supply defaults; explicit flags win on conflict.
#[derive(Debug, Clone, clap::Args)]
pub struct CommonArgs {
    /// Potential strength parameter M (positive integer)
    #[arg(long = "M", value_name = "INT")]
    pub m: Option<u32>,
    /// Potential coupling ζ (positive real)
    #[arg(long, value_name = "REAL")]
    pub zeta: Option<f64>,
    /// Polynomial family: tilde (default), hat+ or hat-
    #[arg(long, value_name = "NAME")]
    pub family: Option<String>,
    /// Address the periodic potential −(ζ cos 2x − M)² instead of the
    /// hyperbolic double well
    #[arg(long)]
    pub periodic: bool,
    /// Artifact format
    #[arg(long, value_enum, value_name = "FMT")]
    pub format: Option<Format>,
    /// Artifact path (default: razavy-<command>.<json|csv>)
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// key=value file supplying defaults for the options above
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Worker threads for grid sweeps (default: RAZAVY_QES_JOBS, then 1)
    #[arg(long, value_name = "N")]
    pub jobs: Option<usize>,
}

/// Fully resolved run parameters. `zeta` stays optional here because the
/// sweep command supplies its own ζ grid; point commands demand it through
/// [`Resolved::params`].
#[derive(Debug, Clone)]
pub struct Resolved {
    pub m: u32,
    pub zeta: Option<f64>,
    pub family: FamilyChoice,
    pub periodic: bool,
    pub format: Format,
    pub output: PathBuf,
    pub jobs: usize,
}

impl Resolved {
    pub fn params(&self) -> Result<PotentialParams, CliError> {
        let zeta = self
            .zeta
            .ok_or_else(|| CliError::Usage("zeta is required (--zeta or config zeta=...)".into()))?;
        Ok(PotentialParams::new(zeta, self.m)?)
    }

    /// The family spec this run addresses.
    pub fn family_spec(&self) -> Result<FamilySpec, CliError> {
        family_spec(self.params()?, self.family, self.periodic)
    }

    pub fn family_label(&self) -> &'static str {
        self.family.label()
    }
}

pub fn family_spec(
    params: PotentialParams,
    family: FamilyChoice,
    periodic: bool,
) -> Result<FamilySpec, CliError> {
    let spec = match family {
        FamilyChoice::Tilde => make_tilde(params, periodic),
        FamilyChoice::HatPlus | FamilyChoice::HatMinus => {
            let s: i8 = if family == FamilyChoice::HatPlus { 1 } else { -1 };
            let (sigma, eta) = if params.m_int() % 2 == 1 { (s, 0) } else { (0, s) };
            let hat = FamilySpec::hat_branch(params, sigma, eta)?;
            if periodic {
                hat.to_periodic()
            } else {
                hat
            }
        }
    };
    Ok(spec)
}

fn parse_config(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("config line {}: expected key=value", idx + 1))
        })?;
        let key = key.trim();
        if !CONFIG_KEYS.contains(&key) {
            return Err(CliError::Usage(format!(
                "config line {}: unknown key {key:?} (known: {})",
                idx + 1,
                CONFIG_KEYS.join(", ")
            )));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn config_value<T: std::str::FromStr>(
    cfg: &BTreeMap<String, String>,
    key: &str,
) -> Result<Option<T>, CliError> {
    match cfg.get(key) {
        None => Ok(None),
        Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
            CliError::Usage(format!("config key {key}: cannot parse value {raw:?}"))
        }),
    }
}

/// Resolve the common options for a command, reading the config file (if
/// any) and the jobs environment variable.
pub fn resolve(args: &CommonArgs, command: &str) -> Result<Resolved, CliError> {
    let cfg = match &args.config {
        Some(path) => parse_config(path)?,
        None => BTreeMap::new(),
    };

    let m = match args.m {
        Some(v) => v,
        None => config_value::<u32>(&cfg, "M")?
            .ok_or_else(|| CliError::Usage("M is required (--M or config M=...)".into()))?,
    };
    let zeta = match args.zeta {
        Some(v) => Some(v),
        None => config_value::<f64>(&cfg, "zeta")?,
    };

    let family = match &args.family {
        Some(name) => FamilyChoice::parse(name)?,
        None => match cfg.get("family") {
            Some(name) => FamilyChoice::parse(name)?,
            None => FamilyChoice::Tilde,
        },
    };
    let periodic = args.periodic || config_value::<bool>(&cfg, "periodic")?.unwrap_or(false);

    let format = match args.format {
        Some(f) => f,
        None => match cfg.get("format").map(String::as_str) {
            Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            Some(other) => {
                return Err(CliError::Usage(format!(
                    "config key format: expected json or csv, got {other:?}"
                )))
            }
            None => Format::Json,
        },
    };

    let output = match &args.output {
        Some(path) => path.clone(),
        None => match cfg.get("output") {
            Some(path) => PathBuf::from(path),
            None => PathBuf::from(format!("razavy-{command}.{}", format.extension())),
        },
    };

    let jobs = match args.jobs {
        Some(v) => v,
        None => match config_value::<usize>(&cfg, "jobs")? {
            Some(v) => v,
            None => match std::env::var(JOBS_ENV) {
                Ok(raw) => raw.parse::<usize>().map_err(|_| {
                    CliError::Usage(format!("{JOBS_ENV}: cannot parse value {raw:?}"))
                })?,
                Err(_) => 1,
            },
        },
    };
    if jobs == 0 {
        return Err(CliError::Usage("jobs must be at least 1".into()));
    }

    Ok(Resolved { m, zeta, family, periodic, format, output, jobs })
}
