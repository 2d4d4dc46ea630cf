//! Command-line frontend.
//!
//! Exit codes: 0 success, 1 parameter error, 2 I/O or parse error,
//! 3 verification mismatch, 4 resource refusal.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use egr_core::bounds::{egr_lower_bound, excess_report, BoundQuery};
use egr_core::{constructions, suzuki, Graph};

use crate::ingest::audit::{audit_dir, AuditStatus, Manifest};
use crate::ingest::{self, graph6};
use crate::parallel;
use crate::report::{BoundsReport, OutputMode, Render, VerifyReport};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "egr", version, about = "Build and verify edge-girth-regular graphs")]
pub struct Cli {
    /// Emit JSON reports instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for the cycle census and corpus audit.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub threads: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph in graph6.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Check that every graph in FILE (or `-` for stdin) is egr.
    Verify {
        file: PathBuf,
        /// Expected parameters `v,k,g,lambda`.
        #[arg(long, value_parser = parse_expect)]
        expect: Option<[u64; 4]>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Lower bounds on the order of an egr(v,k,g,lambda) graph.
    Bounds {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        parity: bool,
        /// Report the excess of a graph of this order.
        #[arg(long)]
        order: Option<u64>,
        /// Orders excluded by other evidence, comma separated.
        #[arg(long, value_delimiter = ',', requires = "order")]
        exclude: Vec<u64>,
    },
    /// Audit a directory of graph6 files against a manifest.
    Audit {
        /// Corpus directory; defaults to $EGR_CORPUS_DIR.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Manifest JSON; defaults to the built-in (5,5)-cage manifest.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Print an embedded data file.
    Export {
        #[arg(long, value_enum)]
        fixture: Fixture,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Biaffine {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Special32 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Suzuki {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Graph6,
    Adjlist,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Fixture {
    #[value(name = "special32-appendix")]
    Special32Appendix,
}

fn parse_expect(s: &str) -> std::result::Result<[u64; 4], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err("expected four comma-separated integers v,k,g,lambda".into());
    }
    let mut out = [0u64; 4];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("not a non-negative integer: {p:?}"))?;
    }
    Ok(out)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are not errors
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 1;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match execute(&cli, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn emit(bytes: &[u8], out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(io_err(path)),
        None => stdout.write_all(bytes).map_err(io_err(Path::new("<stdout>"))),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<u8> {
    let mode = if cli.json { OutputMode::Json } else { OutputMode::Text };
    let threads = cli.threads as usize;
    match &cli.command {
        Command::Construct { family } => {
            let (g, out): (Graph, _) = match family {
                Family::Biaffine { q, out } => (constructions::biaffine(*q)?, out),
                Family::Special32 { out } => (constructions::special32(), out),
                Family::Suzuki { q, out } => (suzuki::suzuki_graph(*q)?, out),
            };
            let mut bytes = graph6::write_graph6(&g);
            bytes.push(b'\n');
            emit(&bytes, out.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Verify { file, expect, format } => {
            let (text, label, path) = if file.as_os_str() == "-" {
                let mut s = String::new();
                stdin.read_to_string(&mut s).map_err(io_err(Path::new("<stdin>")))?;
                (s, "<stdin>".to_string(), None)
            } else {
                let s = fs::read_to_string(file).map_err(io_err(file))?;
                (s, file.display().to_string(), Some(file.as_path()))
            };
            let fmt = match format {
                Some(FormatArg::Graph6) => ingest::Format::Graph6,
                Some(FormatArg::Adjlist) => ingest::Format::Adjlist,
                None => ingest::sniff(path, &text),
            };
            let graphs = ingest::parse_graphs(&text, fmt, &label)?;
            let multi = graphs.len() > 1;
            let mut all_match = true;
            let mut reports = Vec::new();
            for (k, g) in graphs.iter().enumerate() {
                let source = if multi { format!("{label}#{}", k + 1) } else { label.clone() };
                let report = if g.girth().finite().is_some() && g.size() > 0 {
                    VerifyReport::new(source, &parallel::is_egr(g, threads)?, *expect)
                } else {
                    VerifyReport::acyclic(source, g, *expect)
                };
                all_match &= report.matches;
                reports.push(report);
            }
            let rendered = match mode {
                OutputMode::Json if !multi => reports[0].render(mode),
                OutputMode::Json => {
                    let mut s = serde_json::to_string_pretty(&reports).expect("report serialises");
                    s.push('\n');
                    s
                }
                OutputMode::Text => reports.iter().map(Render::text).collect::<Vec<_>>().join("\n"),
            };
            emit(rendered.as_bytes(), None, stdout)?;
            Ok(if all_match { 0 } else { 3 })
        }
        Command::Bounds {
            k,
            g,
            lambda,
            bipartite,
            parity,
            order,
            exclude,
        } => {
            let q = BoundQuery::new(*k, *g, *lambda).bipartite(*bipartite).parity(*parity);
            let b = egr_lower_bound(&q)?;
            let report = match order {
                Some(v) => BoundsReport::new(&b, Some((&excess_report(*v, &q, exclude)?, exclude))),
                None => BoundsReport::new(&b, None),
            };
            emit(report.render(mode).as_bytes(), None, stdout)?;
            Ok(0)
        }
        Command::Audit { dir, manifest } => {
            let manifest = match manifest {
                Some(p) => Manifest::load(p)?,
                None => Manifest::builtin_cages55(),
            };
            let dir = dir
                .clone()
                .or_else(|| std::env::var_os(crate::CORPUS_ENV).map(PathBuf::from));
            let audit = audit_dir(dir.as_deref(), &manifest, threads);
            emit(audit.render(mode).as_bytes(), None, stdout)?;
            Ok(match audit.status {
                AuditStatus::Pass | AuditStatus::DataMissing => 0,
                AuditStatus::Fail => 3,
            })
        }
        Command::Export { fixture, out } => {
            let text = match fixture {
                Fixture::Special32Appendix => crate::SPECIAL32_FIXTURE,
            };
            emit(text.as_bytes(), out.as_deref(), stdout)?;
            Ok(0)
        }
    }
}
