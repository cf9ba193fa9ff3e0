//! The `parahoric` command line.

pub mod cache;
pub mod datum;
pub mod dot;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::checks;
use crate::error::Error;
use crate::iwahori_weyl::{parse_ints, SphericalSubset};
use crate::qbg::TieBreak;
use crate::root_datum::{join, CorootVec, Coweight, RootDatum};
use datum::DatumFile;
use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "parahoric",
    version,
    about = "Admissible sets, parahoric levels and the quantum Bruhat graph"
)]
pub struct Cli {
    /// Print JSON instead of a human-readable table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory for cached group enumerations.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct DatumArg {
    /// Root datum description (JSON).
    #[arg(long, value_name = "FILE")]
    pub datum: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TieArg {
    LexMin,
    LexMax,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Elements of Adm(mu), or its double-coset representatives at level K.
    Adm {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        k: Option<String>,
        /// Print only the number of elements.
        #[arg(long)]
        size: bool,
    },
    /// Irreducible components of the admissible locus at level K.
    Components {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        k: String,
    },
    /// Non-special levels whose coset representatives have proper support.
    Classify {
        #[command(flatten)]
        datum: DatumArg,
    },
    /// Fibers of the map from level K1 to level K2.
    Fibers {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        k1: String,
        #[arg(long)]
        k2: String,
    },
    /// Quantum Bruhat graph statistics and DOT export.
    Qbg {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// The maximal x with wt(x, e) <= gamma.
    Zgamma {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long)]
        gamma: String,
        #[arg(long, value_enum, default_value = "lex-min")]
        tie: TieArg,
    },
    /// Weight of a shortest path in the quantum Bruhat graph.
    Wt {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, value_name = "FILE")]
        datum: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Ctx<'a> {
    json: bool,
    cache_dir: Option<PathBuf>,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, human: impl FnOnce() -> String) -> Result<(), Failure> {
        let text = if self.json {
            serde_json::to_string(value).expect("reports serialize") + "\n"
        } else {
            human()
        };
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string()))
    }

    fn load(&self, path: &Path) -> Result<RootDatum, Failure> {
        let file = DatumFile::read(path).map_err(|e| Failure::Usage(format!("--datum: {e}")))?;
        let spec = file.to_spec().map_err(|e| Failure::Usage(format!("--datum: {e}")))?;
        let d = RootDatum::new(spec).map_err(|e| Failure::Usage(format!("--datum: {e}")))?;
        if let Some(dir) = &self.cache_dir {
            cache::warm(&d, dir, &file.canonical())
                .map_err(|e| Failure::Io(format!("--cache-dir {}: {e}", dir.display())))?;
        }
        Ok(d)
    }
}

fn coweight_flag(d: &RootDatum, flag: &str, s: &str) -> Result<Coweight, Failure> {
    let v = parse_ints(s).map_err(|e| Failure::Usage(format!("{flag}: {e}")))?;
    if v.len() != d.dim() {
        return Err(Failure::Usage(format!(
            "{flag}: expected {} coordinates, got {}",
            d.dim(),
            v.len()
        )));
    }
    Ok(Coweight(v))
}

fn subset_flag(d: &RootDatum, flag: &str, s: &str) -> Result<SphericalSubset, Failure> {
    let s = s.trim();
    let s = if s == "none" || s == "-" { "" } else { s };
    let v = parse_ints(s).map_err(|e| Failure::Usage(format!("{flag}: {e}")))?;
    let labels: Vec<usize> = v
        .iter()
        .map(|&x| usize::try_from(x).map_err(|_| Failure::Usage(format!("{flag}: negative label {x}"))))
        .collect::<Result<_, _>>()?;
    d.spherical(&labels).map_err(|e| Failure::Usage(format!("{flag}: {e}")))
}

/// Parses `argv` and runs one subcommand, returning the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let line: Vec<&str> = text
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            let line = if line.is_empty() {
                "error: usage error".to_string()
            } else {
                line.join(" ")
            };
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        cache_dir: cli.cache_dir,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(ctx: &mut Ctx, cmd: Command) -> Outcome {
    match cmd {
        Command::Adm { datum, mu, k, size } => {
            let d = ctx.load(&datum.datum)?;
            let mu = coweight_flag(&d, "--mu", &mu)?;
            let k = k.map(|k| subset_flag(&d, "--k", &k)).transpose()?;
            let report = AdmJson::new(&d, &mu, k)?;
            if size && !ctx.json {
                writeln!(ctx.out, "{}", report.size).map_err(|e| Failure::Io(e.to_string()))?;
                return Ok(EXIT_OK);
            }
            ctx.emit(&report, || {
                let mut s = format!("size {}\n", report.size);
                for w in &report.elements {
                    s.push_str(w);
                    s.push('\n');
                }
                s
            })?;
        }
        Command::Components { datum, mu, k } => {
            let d = ctx.load(&datum.datum)?;
            let mu = coweight_flag(&d, "--mu", &mu)?;
            let k = subset_flag(&d, "--k", &k)?;
            let r = d.component_reps(&mu, k)?;
            let report = ComponentReportJson::new(&d, &r);
            ctx.emit(&report, || {
                let mut s = format!(
                    "mu={} K={:?} components={} irreducible={}\n",
                    mu, report.k, report.count, report.irreducible
                );
                for c in &report.components {
                    s.push_str(&format!(
                        "  rep={} translation=({}) dimension={}\n",
                        c.rep,
                        join(&c.translation),
                        c.dimension
                    ));
                }
                s
            })?;
        }
        Command::Classify { datum } => {
            let d = ctx.load(&datum.datum)?;
            let rows = ClassJson::all(&d)?;
            let (ty, order) = d.w_short_type();
            ctx.emit(&rows, || {
                let mut s = format!("{}: short-root subgroup {} of order {}\n", d.spec(), ty, order);
                if rows.is_empty() {
                    s.push_str("no non-special level has proper support\n");
                }
                for r in &rows {
                    s.push_str(&format!("K={:?} supp={:?}\n", r.k, r.supp));
                }
                s
            })?;
        }
        Command::Fibers { datum, mu, k1, k2 } => {
            let d = ctx.load(&datum.datum)?;
            let mu = coweight_flag(&d, "--mu", &mu)?;
            let k1 = subset_flag(&d, "--k1", &k1)?;
            let k2 = subset_flag(&d, "--k2", &k2)?;
            let rows = FiberJson::all(&d, &mu, k1, k2)?;
            ctx.emit(&rows, || {
                rows.iter()
                    .map(|f| {
                        format!(
                            "stratum={} x_max={} min_rep={} dimension={}\n",
                            f.stratum, f.x_max, f.min_rep, f.dimension
                        )
                    })
                    .collect()
            })?;
        }
        Command::Qbg { datum, dot } => {
            let d = ctx.load(&datum.datum)?;
            let report = QbgJson::new(&d)?;
            if let Some(path) = dot {
                std::fs::write(&path, dot::qbg_dot(&d)?)
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            ctx.emit(&report, || {
                format!(
                    "vertices {}\nbruhat edges {}\nquantum edges {}\n",
                    report.vertices, report.bruhat_edges, report.quantum_edges
                )
            })?;
        }
        Command::Zgamma { datum, gamma, tie } => {
            let d = ctx.load(&datum.datum)?;
            let g = parse_ints(&gamma).map_err(|e| Failure::Usage(format!("--gamma: {e}")))?;
            if g.len() != d.rank() {
                return Err(Failure::Usage(format!(
                    "--gamma: expected {} coordinates, got {}",
                    d.rank(),
                    g.len()
                )));
            }
            let g = CorootVec(g);
            let tie = match tie {
                TieArg::LexMin => TieBreak::LexMin,
                TieArg::LexMax => TieBreak::LexMax,
            };
            let report = ZGammaJson::new(&d, &g, tie)?;
            ctx.emit(&report, || format!("{}\n", report.word))?;
        }
        Command::Wt { datum, x, y } => {
            let d = ctx.load(&datum.datum)?;
            let xe = d.parse_word(&x).map_err(|e| Failure::Usage(format!("--x: {e}")))?;
            let ye = d.parse_word(&y).map_err(|e| Failure::Usage(format!("--y: {e}")))?;
            let report = WtJson::new(&d, &xe, &ye)?;
            ctx.emit(&report, || format!("{}\n", join(&report.weight)))?;
        }
        Command::Verify { datum, mu } => {
            let results = match datum {
                Some(path) => {
                    let d = ctx.load(&path)?;
                    let mu = mu.map(|m| coweight_flag(&d, "--mu", &m)).transpose()?;
                    if let Some(m) = &mu {
                        d.admissible_set(m)?;
                    }
                    checks::invariants(&d, mu.as_ref())
                }
                None => {
                    if mu.is_some() {
                        return Err(Failure::Usage("--mu: requires --datum".into()));
                    }
                    let mut all = checks::acceptance();
                    for c in checks::standard_suite() {
                        for mut o in checks::invariants(&c.datum, Some(&c.mu)) {
                            o.name = format!("{}: {}", c.name, o.name);
                            all.push(o);
                        }
                    }
                    all
                }
            };
            let ok = results.iter().all(|c| c.passed);
            ctx.emit(&results, || {
                results
                    .iter()
                    .map(|c| {
                        let tag = if c.passed { "PASS" } else { "FAIL" };
                        if c.detail.is_empty() {
                            format!("{tag} {}\n", c.name)
                        } else {
                            format!("{tag} {} ({})\n", c.name, c.detail)
                        }
                    })
                    .collect()
            })?;
            return Ok(if ok { EXIT_OK } else { EXIT_VERIFY });
        }
    }
    Ok(EXIT_OK)
}
