//! Sweep configuration files (TOML).

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::homology::is_prime;
use crate::random::Probability;
use crate::ratio::{parse_rational, Rational};

/// Environment variable overriding the worker thread count.
pub const THREADS_ENV: &str = "RANDCOMPLEX_THREADS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    H1Gf2,
    H1Gfq(u64),
    ScCertify,
    Sparse3 { eps: Rational, m: usize, label: String },
    LinkStats,
    Snf,
    GnpConnected,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::H1Gf2 => write!(f, "h1_gf2"),
            Check::H1Gfq(q) => write!(f, "h1_gfq:{q}"),
            Check::ScCertify => write!(f, "sc_certify"),
            Check::Sparse3 { label, .. } => write!(f, "sparse3:{label}"),
            Check::LinkStats => write!(f, "link_stats"),
            Check::Snf => write!(f, "snf"),
            Check::GnpConnected => write!(f, "gnp_connected"),
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("unknown check {s:?}"));
        Ok(match s {
            "h1_gf2" => Check::H1Gf2,
            "sc_certify" => Check::ScCertify,
            "link_stats" => Check::LinkStats,
            "snf" => Check::Snf,
            "gnp_connected" => Check::GnpConnected,
            _ => {
                if let Some(q) = s.strip_prefix("h1_gfq:") {
                    let q: u64 = q.parse().map_err(|_| bad())?;
                    if !is_prime(q) {
                        return Err(Error::BadField(q));
                    }
                    Check::H1Gfq(q)
                } else if let Some(rest) = s.strip_prefix("sparse3:") {
                    let (e, m) = rest.split_once(':').ok_or_else(bad)?;
                    let eps = parse_rational(e)?;
                    let m: usize = m.parse().map_err(|_| bad())?;
                    if m == 0 {
                        return Err(Error::Config("sparse3 needs m >= 1".into()));
                    }
                    Check::Sparse3 { eps, m, label: rest.to_string() }
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    n: Vec<u32>,
    p: Option<Vec<f64>>,
    p_param: Option<Vec<[f64; 2]>>,
    trials: u64,
    seed: u64,
    checks: Vec<String>,
    out: Option<PathBuf>,
    summary: Option<PathBuf>,
    threads: Option<usize>,
    #[serde(default)]
    record_timing: bool,
    #[serde(default)]
    coupled: bool,
    #[serde(default)]
    process: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PGrid {
    Explicit(Vec<Probability>),
    /// `p = c · n^a` for each `(c, a)`.
    Param(Vec<(f64, f64)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n: Vec<u32>,
    pub p: PGrid,
    pub trials: u64,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub out: Option<PathBuf>,
    pub summary: Option<PathBuf>,
    pub threads: Option<usize>,
    /// Fill the `ms` column. Off by default so reruns are byte-identical.
    pub record_timing: bool,
    /// Draw every `p` of a trial from shared uniforms (nested face sets).
    pub coupled: bool,
    /// Also record the `H_1(GF(2))` hitting time of the face process.
    pub process: bool,
}

impl SweepConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let p = match (raw.p, raw.p_param) {
            (Some(ps), None) => PGrid::Explicit(ps.into_iter().map(Probability::new).collect::<Result<_>>()?),
            (None, Some(cs)) => PGrid::Param(cs.into_iter().map(|[c, a]| (c, a)).collect()),
            _ => return Err(Error::Config("give exactly one of `p` and `p_param`".into())),
        };
        let cfg = SweepConfig {
            n: raw.n,
            p,
            trials: raw.trials,
            seed: raw.seed,
            checks: raw.checks.iter().map(|c| c.parse()).collect::<Result<_>>()?,
            out: raw.out,
            summary: raw.summary,
            threads: raw.threads,
            record_timing: raw.record_timing,
            coupled: raw.coupled,
            process: raw.process,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        let empty_p = match &self.p {
            PGrid::Explicit(v) => v.is_empty(),
            PGrid::Param(v) => v.is_empty(),
        };
        if self.n.is_empty() || empty_p {
            return Err(Error::Config("grids must be nonempty".into()));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.checks.is_empty() && !self.process {
            return Err(Error::Config("no checks requested".into()));
        }
        if self.threads == Some(0) {
            return Err(Error::Config("threads must be at least 1".into()));
        }
        for &n in &self.n {
            self.probabilities(n)?;
        }
        Ok(())
    }

    /// The `p` grid at size `n`.
    pub fn probabilities(&self, n: u32) -> Result<Vec<Probability>> {
        match &self.p {
            PGrid::Explicit(v) => Ok(v.clone()),
            PGrid::Param(cs) => cs
                .iter()
                .map(|&(c, a)| {
                    Probability::new(c * libm::pow(n as f64, a))
                        .map_err(|_| Error::Config(format!("p = {c}·{n}^{a} is not in [0, 1]")))
                })
                .collect(),
        }
    }

    /// Thread count: the environment override, then the config value.
    pub fn thread_count(&self) -> Result<Option<usize>> {
        match std::env::var(THREADS_ENV) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(t) if t > 0 => Ok(Some(t)),
                _ => Err(Error::Config(format!("{THREADS_ENV}={v:?} is not a positive integer"))),
            },
            Err(_) => Ok(self.threads),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_example() {
        let cfg = SweepConfig::parse(
            r#"
            n = [20, 50]
            p = [0.02, 0.3]
            trials = 5
            seed = 7
            checks = ["h1_gf2", "h1_gfq:3", "sc_certify", "sparse3:0.15:6", "link_stats", "snf"]
            out = "out.csv"
            "#,
        )
        .unwrap();
        assert_eq!(cfg.checks.len(), 6);
        assert_eq!(cfg.checks[3].to_string(), "sparse3:0.15:6");
        assert_eq!(cfg.probabilities(20).unwrap()[1].as_str(), "0.3");
    }

    #[test]
    fn parametric_grid() {
        let cfg = SweepConfig::parse("n=[100]\np_param=[[1.0,-0.5]]\ntrials=1\nseed=1\nchecks=['h1_gf2']").unwrap();
        assert_eq!(cfg.probabilities(100).unwrap()[0].as_str(), "0.1");
        assert!(SweepConfig::parse("n=[4]\np_param=[[3.0,0.0]]\ntrials=1\nseed=1\nchecks=['h1_gf2']").is_err());
    }

    #[test]
    fn rejects_bad_configs() {
        let base = |extra: &str| format!("n=[10]\np=[0.5]\nseed=1\n{extra}");
        assert!(SweepConfig::parse(&base("trials=0\nchecks=['h1_gf2']")).is_err());
        assert!(SweepConfig::parse(&base("trials=1\nchecks=['nope']")).is_err());
        assert!(SweepConfig::parse(&base("trials=1\nchecks=['h1_gfq:4']")).is_err());
        assert!(SweepConfig::parse(&base("trials=1\nchecks=['h1_gf2']\nbogus=1")).is_err());
        assert!(SweepConfig::parse("n=[]\np=[0.5]\nseed=1\ntrials=1\nchecks=['h1_gf2']").is_err());
        assert!(SweepConfig::parse("n=[5]\np=[1.5]\nseed=1\ntrials=1\nchecks=['h1_gf2']").is_err());
    }
}
