//! The `trigraph` command-line driver.
//!
//! Exit codes: 0 on success, 1 when the input is structurally rejected
//! (disconnected, degenerate, or a failed verification), 2 on usage, parse
//! and I/O errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::antithicken::{laminarity_witness, optimal_antithickening, verify_thickening, AntithickenOptions};
use crate::error::Error;
use crate::format::{parse_map, parse_trigraph, serialize_map, serialize_trigraph};
use crate::gen::{gen_cliques_matching, gen_named, gen_random_laminar_base, NamedFixture};
use crate::oracle::{self, HposcKind};
use crate::schposc::{schposc_traced, Stop};
use crate::trigraph::Trigraph;

#[derive(Debug, Parser)]
#[command(name = "trigraph", version, about = "Trigraph structure tools and optimal antithickenings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report connectivity, claw-freeness, quasi-line and degeneracy flags.
    Classify {
        file: PathBuf,
        /// Also report laminarity.
        #[arg(long)]
        laminar: bool,
    },
    /// Compute the optimal antithickening.
    Antithicken {
        file: PathBuf,
        /// Write the reduced trigraph here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the thickening map here.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Run on degenerate input.
        #[arg(long)]
        force: bool,
        /// Skip re-verifying the map and the laminarity of the result.
        #[arg(long)]
        no_recheck: bool,
    },
    /// Grow the smallest square-connected pair with U and V on one side.
    Schposc { file: PathBuf, u: usize, v: usize },
    /// Decide laminarity, printing a witness pair if there is one.
    Laminar { file: PathBuf },
    /// Check that MAP is a thickening from GP to G.
    Verify { g: PathBuf, gp: PathBuf, map: PathBuf },
    /// Brute-force reference computations for small inputs.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Write a generated trigraph.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Time the full pipeline on a doubling family.
    Bench {
        #[command(subcommand)]
        family: BenchFamily,
    },
}

#[derive(Debug, Subcommand)]
enum OracleQuery {
    /// List homogeneous pairs of strong cliques.
    Hposcs {
        file: PathBuf,
        /// all, deletion-minimal or square-connected
        #[arg(long, default_value = "all")]
        kind: HposcKind,
        #[arg(long, default_value_t = oracle::HPOSC_CAP)]
        cap: usize,
    },
    /// Minimal square-containing pair for every strongly adjacent seed.
    Schposcs {
        file: PathBuf,
        #[arg(long, default_value_t = oracle::HPOSC_CAP)]
        cap: usize,
    },
    /// Laminarity by enumeration.
    Laminar {
        file: PathBuf,
        #[arg(long, default_value_t = oracle::HPOSC_CAP)]
        cap: usize,
    },
    /// List antithickenings.
    Antithickenings {
        file: PathBuf,
        /// Keep one laminar antithickening of maximum size per isomorphism class.
        #[arg(long)]
        optimal: bool,
        #[arg(long, default_value_t = oracle::ANTITHICKENING_CAP)]
        cap: usize,
    },
    /// Decide isomorphism.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = oracle::ISOMORPHISM_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Two strong K-cliques joined by a strong perfect matching.
    CliquesMatching {
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A named fixture: C4S, C6S, C6SEMI, T8, DM8, C4_JOIN_C5 or TRI.
    Named {
        name: NamedFixture,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A seeded random connected, non-degenerate, laminar trigraph.
    Random {
        n: usize,
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum BenchFamily {
    /// Doubles k from KMIN while k <= KMAX.
    CliquesMatching {
        kmin: usize,
        kmax: usize,
        /// Timed runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Disconnected
            | Error::Degenerate(_)
            | Error::DegenerateStructure(_)
            | Error::Postcondition(_)
            | Error::OracleInvariant(_)
            | Error::BudgetExhausted(_) => 1,
            _ => 2,
        };
        let message = match &e {
            Error::Degenerate(c) => format!(
                "degenerate input: {}; rerun with --force to proceed",
                c.failed_criterion().unwrap_or("degenerate")
            ),
            other => other.to_string(),
        };
        Failure { code, message }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn read_trigraph(path: &Path) -> Result<Trigraph, Failure> {
    parse_trigraph(&read_text(path)?).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| io_failure(path, e))
}

/// Writes to `path`, or appends to `out` when no path is given.
fn emit(path: Option<&Path>, text: &str, out: &mut String) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, text),
        None => {
            out.push_str(text);
            Ok(())
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let mut out = String::new();
    let result = execute(cli.command, &mut out);
    let _ = stdout.write_all(out.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Classify { file, laminar } => {
            let g = read_trigraph(&file)?;
            let c = g.classify();
            writeln!(out, "vertices: {}", g.n()).unwrap();
            writeln!(out, "adjacent pairs: {}", g.m()).unwrap();
            writeln!(out, "semiedges: {}", g.semiedges().count()).unwrap();
            for (key, value) in [
                ("connected", c.connected),
                ("claw_free", c.claw_free),
                ("quasi_line", c.quasi_line),
                ("cobipartite", c.cobipartite),
                ("alpha_ge_3", c.alpha_ge_3),
                ("degenerate", c.degenerate),
            ] {
                writeln!(out, "{key}: {value}").unwrap();
            }
            if let Some(why) = c.failed_criterion() {
                writeln!(out, "failed criterion: {why}").unwrap();
            }
            if laminar {
                writeln!(out, "laminar: {}", laminarity_witness(&g).is_none()).unwrap();
            }
            Ok(0)
        }
        Command::Antithicken {
            file,
            output,
            map,
            force,
            no_recheck,
        } => {
            let g = read_trigraph(&file)?;
            let opts = AntithickenOptions {
                force,
                recheck: !no_recheck,
            };
            let r = optimal_antithickening(&g, opts)?;
            let mut report = String::new();
            writeln!(report, "# reduced {} -> {} vertices", g.n(), r.reduced.n()).unwrap();
            for (i, p) in r.contracted_pairs.iter().enumerate() {
                writeln!(report, "# pair {}: {p}", i + 1).unwrap();
            }
            out.push_str(&report);
            emit(output.as_deref(), &serialize_trigraph(&r.reduced), out)?;
            if let Some(path) = map {
                write_file(&path, &serialize_map(&r.map))?;
            }
            Ok(0)
        }
        Command::Schposc { file, u, v } => {
            let g = read_trigraph(&file)?;
            let run = schposc_traced(&g, u, v)?;
            match &run.pair {
                Some(p) => writeln!(out, "{p}").unwrap(),
                None => writeln!(out, "none").unwrap(),
            }
            let stop = match run.stop {
                Stop::Found => "found".to_string(),
                Stop::NoSeedSquare => "no seed square".to_string(),
                Stop::Conflict { vertex } => format!("conflict at vertex {vertex}"),
            };
            writeln!(out, "stop: {stop}").unwrap();
            writeln!(out, "steps: {}", run.steps).unwrap();
            Ok(0)
        }
        Command::Laminar { file } => {
            let g = read_trigraph(&file)?;
            match laminarity_witness(&g) {
                None => writeln!(out, "laminar: true").unwrap(),
                Some(p) => writeln!(out, "laminar: false\nwitness: {p}").unwrap(),
            }
            Ok(0)
        }
        Command::Verify { g, gp, map } => {
            let thick = read_trigraph(&g)?;
            let thin = read_trigraph(&gp)?;
            let m = parse_map(&read_text(&map)?).map_err(|e| Failure {
                code: 2,
                message: format!("{}: {e}", map.display()),
            })?;
            let ok = verify_thickening(&thin, &m, &thick)?;
            writeln!(out, "thickening: {ok}").unwrap();
            Ok(if ok { 0 } else { 1 })
        }
        Command::Oracle { query } => oracle_query(query, out),
        Command::Gen { family } => {
            let (g, output) = match family {
                Family::CliquesMatching { k, output } => (gen_cliques_matching(k)?, output),
                Family::Named { name, output } => (gen_named(name), output),
                Family::Random { n, seed, output } => (gen_random_laminar_base(n, seed)?, output),
            };
            emit(output.as_deref(), &serialize_trigraph(&g), out)?;
            Ok(0)
        }
        Command::Bench {
            family: BenchFamily::CliquesMatching { kmin, kmax, reps },
        } => {
            if kmin < 2 || kmax < kmin {
                return Err(Error::InvalidSpec(format!("need 2 <= KMIN <= KMAX, got {kmin} and {kmax}")).into());
            }
            let opts = AntithickenOptions {
                force: true,
                recheck: false,
            };
            writeln!(out, "k\tn\tm\tseed_steps\tseconds").unwrap();
            let mut k = kmin;
            while k <= kmax {
                let g = gen_cliques_matching(k)?;
                let steps = schposc_traced(&g, 0, 1)?.steps;
                let mut best = f64::INFINITY;
                for _ in 0..reps.max(1) {
                    let start = Instant::now();
                    let r = optimal_antithickening(&g, opts)?;
                    best = best.min(start.elapsed().as_secs_f64());
                    std::hint::black_box(r);
                }
                writeln!(out, "{k}\t{}\t{}\t{steps}\t{best:.6}", g.n(), g.m()).unwrap();
                k *= 2;
            }
            Ok(0)
        }
    }
}

fn oracle_query(query: OracleQuery, out: &mut String) -> Result<i32, Failure> {
    match query {
        OracleQuery::Hposcs { file, kind, cap } => {
            let g = read_trigraph(&file)?;
            let pairs = oracle::enumerate_hposcs(&g, kind, cap)?;
            for p in &pairs {
                writeln!(out, "{p}").unwrap();
            }
            writeln!(out, "count: {}", pairs.len()).unwrap();
        }
        OracleQuery::Schposcs { file, cap } => {
            let g = read_trigraph(&file)?;
            for (u, v) in g.strong_pairs() {
                match oracle::minimal_hposc_containing(&g, u, v, cap)? {
                    Some(p) => writeln!(out, "{u} {v}: {p}").unwrap(),
                    None => writeln!(out, "{u} {v}: none").unwrap(),
                }
            }
        }
        OracleQuery::Laminar { file, cap } => {
            let g = read_trigraph(&file)?;
            writeln!(out, "laminar: {}", oracle::laminar_by_enumeration(&g, cap)?).unwrap();
        }
        OracleQuery::Antithickenings { file, optimal, cap } => {
            let g = read_trigraph(&file)?;
            let list = if optimal {
                oracle::optimal_antithickening_classes(&g, cap)?
            } else {
                oracle::enumerate_antithickenings(&g, cap)?
            };
            for q in &list {
                let parts: Vec<String> = q.map.parts().iter().map(|p| p.to_string()).collect();
                let semis: Vec<String> = q.graph.semiedges().map(|(u, v)| format!("{u}-{v}")).collect();
                writeln!(
                    out,
                    "{} vertices; parts {}; semiedges [{}]",
                    q.graph.n(),
                    parts.join(" "),
                    semis.join(" ")
                )
                .unwrap();
            }
            writeln!(out, "count: {}", list.len()).unwrap();
        }
        OracleQuery::Iso { first, second, cap } => {
            let (g1, g2) = (read_trigraph(&first)?, read_trigraph(&second)?);
            match oracle::find_isomorphism(&g1, &g2, cap)? {
                Some(f) => {
                    let pairs: Vec<String> = f.iter().enumerate().map(|(u, w)| format!("{u}->{w}")).collect();
                    writeln!(out, "isomorphic: true\nmap: {}", pairs.join(" ")).unwrap();
                }
                None => writeln!(out, "isomorphic: false").unwrap(),
            }
        }
    }
    Ok(0)
}
