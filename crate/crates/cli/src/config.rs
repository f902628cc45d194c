use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use hodokit::trajectory::Spacing;
use hodokit::{Branch, SystemParams};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BranchArg {
    Auto,
    Positive,
    Negative,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Branch {
        match b {
            BranchArg::Auto => Branch::Auto,
            BranchArg::Positive => Branch::Positive,
            BranchArg::Negative => Branch::Negative,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SpacingArg {
    Uniform,
    GradedFromLow,
    GradedFromHigh,
}

impl From<SpacingArg> for Spacing {
    fn from(s: SpacingArg) -> Spacing {
        match s {
            SpacingArg::Uniform => Spacing::Uniform,
            SpacingArg::GradedFromLow => Spacing::GradedFromLow,
            SpacingArg::GradedFromHigh => Spacing::GradedFromHigh,
        }
    }
}

/// Run configuration, from a JSON file, from flags, or both (flags win).
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Rest mass.
    #[arg(long, allow_negative_numbers = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<f64>,

    /// Coupling constant (negative for attraction).
    #[arg(long, allow_negative_numbers = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,

    /// Angular momentum.
    #[arg(long, allow_negative_numbers = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<f64>,

    /// Total energy.
    #[arg(long = "E", allow_negative_numbers = true)]
    #[serde(rename = "E", skip_serializing_if = "Option::is_none")]
    pub energy: Option<f64>,

    /// Coupling in units of ell; alternative to --kappa.
    #[arg(long = "kappa-over-ell", allow_negative_numbers = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_over_ell: Option<f64>,

    /// Energy in units of m; alternative to --E.
    #[arg(long = "E-over-m", allow_negative_numbers = true)]
    #[serde(rename = "E_over_m", skip_serializing_if = "Option::is_none")]
    pub e_over_m: Option<f64>,

    /// Orientation angle of the orbit.
    #[arg(long, allow_negative_numbers = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta0: Option<f64>,

    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<BranchArg>,

    /// Lower end of the sampling window.
    #[arg(long = "theta-min", allow_negative_numbers = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_min: Option<f64>,

    /// Upper end of the sampling window.
    #[arg(long = "theta-max", allow_negative_numbers = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_max: Option<f64>,

    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,

    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spacing: Option<SpacingArg>,

    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,

    /// Output file; stdout when absent.
    #[arg(long, short)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,

    /// Overrides every verification threshold.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

pub const DEFAULT_SAMPLES: usize = 1000;

impl RunConfig {
    pub fn from_file(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_owned(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| CliError::ConfigJson {
            path: path.to_owned(),
            source,
        })
    }

    /// `self` with every field set in `flags` replaced. A flag for one
    /// spelling of kappa or E drops the file's other spelling.
    pub fn overlay(mut self, flags: &RunConfig) -> Self {
        if flags.kappa.is_some() || flags.kappa_over_ell.is_some() {
            self.kappa = None;
            self.kappa_over_ell = None;
        }
        if flags.energy.is_some() || flags.e_over_m.is_some() {
            self.energy = None;
            self.e_over_m = None;
        }
        macro_rules! take {
            ($($f:ident),*) => { $( if flags.$f.is_some() { self.$f = flags.$f.clone(); } )* };
        }
        take!(m, kappa, ell, energy, kappa_over_ell, e_over_m, theta0, branch, theta_min, theta_max, samples, spacing, format, output, tolerance);
        self
    }

    pub fn params(&self) -> CliResult<SystemParams> {
        let m = self.m.unwrap_or(1.0);
        let ell = self.ell.unwrap_or(1.0);
        let kappa = match (self.kappa, self.kappa_over_ell) {
            (Some(_), Some(_)) => return Err(CliError::Config("give kappa or kappa_over_ell, not both".into())),
            (Some(k), None) => k,
            (None, Some(r)) => r * ell,
            (None, None) => return Err(CliError::Config("missing kappa (or kappa_over_ell)".into())),
        };
        let energy = match (self.energy, self.e_over_m) {
            (Some(_), Some(_)) => return Err(CliError::Config("give E or E_over_m, not both".into())),
            (Some(e), None) => e,
            (None, Some(r)) => r * m,
            (None, None) => return Err(CliError::Config("missing E (or E_over_m)".into())),
        };
        Ok(SystemParams::new(m, kappa, ell, energy)?.with_theta0(self.theta0.unwrap_or(0.0))?)
    }

    pub fn branch(&self) -> Branch {
        self.branch.map(Branch::from).unwrap_or_default()
    }

    pub fn samples(&self) -> CliResult<usize> {
        match self.samples.unwrap_or(DEFAULT_SAMPLES) {
            n if n >= 2 => Ok(n),
            n => Err(CliError::Config(format!("samples must be at least 2, got {n}"))),
        }
    }

    pub fn tolerance(&self) -> CliResult<Option<f64>> {
        match self.tolerance {
            Some(t) if !(t > 0.0 && t.is_finite()) => Err(CliError::Config(format!("tolerance must be positive, got {t}"))),
            t => Ok(t),
        }
    }
}
