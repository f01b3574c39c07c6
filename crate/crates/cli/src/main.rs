//! `randcomplex`: generate and analyse random 2-complexes.
//!
//! Reports are printed as one JSON object per line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use randcomplex::classify::{collapse_core, homotopy_type, popped_bound_check};
use randcomplex::density::{check_sparse, check_sparse3, density_e_w};
use randcomplex::homology::{betti, h1_integral, Coeff, SNF_DEFAULT_CAP};
use randcomplex::pi1::{
    area_search, certify_id3_noncontractible, certify_simply_connected, evidence_pi1_nontrivial, presentation,
    ScCertificate, AREA_BUDGET_CAP,
};
use randcomplex::random::{gen_y, gen_y_coupled, Probability, RngSpec, GEN_PURPOSE};
use randcomplex::sc2::{read_sc2, write_sc2};
use randcomplex::sweep::{plot_svg, run_sweep, PlotSpec, SweepConfig};
use randcomplex::{parse_rational, Complex2, Edge, LoopWord, Rational};

#[derive(Parser)]
#[command(name = "randcomplex", version, about = "Random 2-complexes in the Linial-Meshulam model")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample Y(n, p) and print it in SC2 format.
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: Probability,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        trial: u64,
        /// Draw one uniform per triple so that samples are nested in p.
        #[arg(long)]
        coupled: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Betti numbers over a field, or integral H_1.
    Homology {
        file: PathBuf,
        /// gf2, gfq:<prime>, q, or z for integral H_1
        #[arg(long, default_value = "gf2")]
        coeff: String,
        /// Same as `--coeff z`.
        #[arg(long)]
        integral: bool,
        #[arg(long, default_value_t = SNF_DEFAULT_CAP)]
        snf_cap: usize,
    },
    /// Exact density e(X), or e_3(X) with --anchor 3.
    Density {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        anchor: u32,
    },
    /// (eps, m)-sparsity, or (eps, m, 3)-sparsity with --anchor 3.
    Sparse {
        file: PathBuf,
        #[arg(long, value_parser = rational)]
        eps: Rational,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        anchor: u32,
    },
    /// Link-intersection certificate of simple connectivity.
    CertifySc {
        file: PathBuf,
        /// Print the per-pair witnesses of a successful certificate.
        #[arg(long)]
        witnesses: bool,
    },
    /// Fundamental group data of one component.
    Pi1 {
        file: PathBuf,
        #[arg(long)]
        presentation: bool,
        #[arg(long, default_value_t = 0)]
        component: usize,
    },
    /// Noncontractibility of the triangle 1-2-3.
    Id3 {
        file: PathBuf,
        /// Also search for a filling with at most this many triangles.
        #[arg(long)]
        area_budget: Option<usize>,
    },
    /// Sparsity evidence (not a proof) for a nontrivial fundamental group.
    Evidence {
        file: PathBuf,
        #[arg(long, value_parser = rational)]
        eps: Rational,
        #[arg(long)]
        m: usize,
    },
    /// Homotopy type of an admissible complex.
    Classify { file: PathBuf },
    /// Collapse to the core; anchor edges keep faces of degree one.
    Collapse {
        file: PathBuf,
        /// File with one `a b` edge per line.
        #[arg(long)]
        anchor_edges: Option<PathBuf>,
        /// Write the core in SC2 format here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check f2 <= (2 chi - 2w + L) / (2 e_w - 1).
    Bound {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        w: u32,
    },
    /// Run a Monte Carlo sweep described by a TOML file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
    /// Plot success frequencies from a sweep CSV as SVG.
    Plot {
        csv: PathBuf,
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        title: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn load(path: &Path) -> Result<Complex2> {
    read_sc2(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(v: serde_json::Value) {
    println!("{v}");
}

fn check_anchor(anchor: u32) -> Result<()> {
    if anchor != 0 && anchor != 3 {
        bail!("--anchor must be 0 or 3");
    }
    Ok(())
}

fn read_edges(path: &Path) -> Result<Vec<Edge>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: Vec<u32> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .with_context(|| format!("line {}: bad integer", i + 1))?;
        match v[..] {
            [a, b] => out.push((a, b)),
            _ => bail!("line {}: expected two vertices", i + 1),
        }
    }
    Ok(out)
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Gen { n, p, seed, trial, coupled, out } => {
            let y = if coupled {
                gen_y_coupled(n, &p, &RngSpec::p_free(seed, GEN_PURPOSE, n as u64, trial))?
            } else {
                gen_y(n, &p, &RngSpec::new(seed, GEN_PURPOSE, n as u64, &p, trial))?
            };
            let text = write_sc2(&y);
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
        }
        Cmd::Homology { file, coeff, integral, snf_cap } => {
            let x = load(&file)?;
            if integral || coeff == "z" {
                emit(json!({ "h1_integral": h1_integral(&x, snf_cap)? }));
            } else {
                let b = betti(&x, coeff.parse::<Coeff>()?)?;
                emit(json!({ "betti": b, "euler": x.euler_characteristic() }));
            }
        }
        Cmd::Density { file, anchor } => {
            check_anchor(anchor)?;
            let x = load(&file)?;
            emit(serde_json::to_value(density_e_w(&x, anchor)?)?);
        }
        Cmd::Sparse { file, eps, m, anchor } => {
            check_anchor(anchor)?;
            if m == 0 {
                bail!("--m must be at least 1");
            }
            let x = load(&file)?;
            let v = if anchor == 3 { check_sparse3(&x, eps, m) } else { check_sparse(&x, eps, m) };
            emit(serde_json::to_value(v)?);
        }
        Cmd::CertifySc { file, witnesses } => {
            let x = load(&file)?;
            let c = certify_simply_connected(&x);
            match (&c, witnesses) {
                (ScCertificate::Certified(ws), false) => {
                    emit(json!({ "outcome": "certified", "pairs": ws.len() }))
                }
                _ => emit(serde_json::to_value(&c)?),
            }
        }
        Cmd::Pi1 { file, presentation: full, component } => {
            let x = load(&file)?;
            let pres = presentation(&x, component)?;
            let ab = pres.abelianization()?;
            if full {
                emit(json!({ "presentation": pres, "abelianization": ab }));
            } else {
                emit(json!({
                    "component": component,
                    "generators": pres.generator_count(),
                    "relators": pres.relators.len(),
                    "abelianization": ab,
                }));
            }
        }
        Cmd::Id3 { file, area_budget } => {
            let x = load(&file)?;
            let cert = certify_id3_noncontractible(&x)?;
            let area = match area_budget {
                Some(b) => {
                    if b > AREA_BUDGET_CAP {
                        bail!("--area-budget is capped at {AREA_BUDGET_CAP}");
                    }
                    Some(area_search(&x, &LoopWord::id3(&x)?, b)?)
                }
                None => None,
            };
            emit(json!({ "id3": cert, "area": area }));
        }
        Cmd::Evidence { file, eps, m } => {
            let x = load(&file)?;
            emit(serde_json::to_value(evidence_pi1_nontrivial(&x, eps, m)?)?);
        }
        Cmd::Classify { file } => {
            let x = load(&file)?;
            emit(serde_json::to_value(homotopy_type(&x)?)?);
        }
        Cmd::Collapse { file, anchor_edges, out } => {
            let x = load(&file)?;
            let keep = match anchor_edges {
                Some(p) => read_edges(&p)?,
                None => Vec::new(),
            };
            let core = collapse_core(&x, &keep)?;
            if let Some(path) = out {
                std::fs::write(path, write_sc2(&core))?;
            }
            emit(json!({ "f_vector": core.f_vector(), "faces": core.faces() }));
        }
        Cmd::Bound { file, w } => {
            let x = load(&file)?;
            emit(serde_json::to_value(popped_bound_check(&x, w)?)?);
        }
        Cmd::Sweep { config } => {
            let cfg = SweepConfig::load(&config).with_context(|| format!("loading {}", config.display()))?;
            let report = run_sweep(&cfg)?;
            if cfg.summary.is_none() {
                for c in &report.summary {
                    emit(serde_json::to_value(c)?);
                }
            }
            if cfg.out.is_none() {
                print!("{}", String::from_utf8(randcomplex::sweep::to_csv(&report.rows)?)?);
            }
        }
        Cmd::Plot { csv, check, title, out } => {
            let text = std::fs::read_to_string(&csv).with_context(|| format!("reading {}", csv.display()))?;
            let mut spec = PlotSpec { check, ..PlotSpec::default() };
            if let Some(t) = title {
                spec.title = t;
            }
            let svg = plot_svg(&text, &spec)?;
            match out {
                Some(path) => std::fs::write(path, svg)?,
                None => print!("{svg}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
