//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 infinite-dimensional algebra, 4 cap exceeded, 5 precondition.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::hasse::to_dot;
use crate::paperlab::{
    hard_failures, reproduce_tables, verify_closed_forms, Claim, ExtensionContext, ExtensionLab, FamilyKind, Report,
};
use crate::rep::Catalog;
use crate::tilting::{Limits, TauContext, DEFAULT_CLIQUE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INFINITE: i32 = 3;
pub const EXIT_CAP: i32 = 4;
pub const EXIT_PRECONDITION: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "tautilt", version, about = "Support τ-tilting theory for monomial bound quiver algebras")]
pub struct Cli {
    /// Maximum number of τ-rigid modules visited during enumeration.
    #[arg(long, global = true, env = "TAUTILT_CAP_CLIQUES", default_value_t = DEFAULT_CLIQUE_CAP,
          value_parser = positive)]
    pub cap_cliques: usize,
    /// Maximum τ⁻¹ iterations while building the catalog (default 10·n²).
    #[arg(long, global = true, env = "TAUTILT_CAP_CATALOG", value_parser = positive)]
    pub cap_catalog: Option<usize>,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, env = "TAUTILT_JOBS", value_parser = positive)]
    pub jobs: Option<usize>,
    /// Directory for output files whose path is not given explicitly.
    #[arg(long, global = true, default_value = ".")]
    pub out_dir: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Support τ-tilting pairs.
    Stau,
    /// τ-tilting modules.
    Tau,
    /// Tilting modules.
    Tilt,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse an algebra file and print its path basis.
    Validate { file: PathBuf },
    /// List support τ-tilting pairs, τ-tilting or tilting modules.
    Enumerate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Stau)]
        kind: Kind,
        /// Also write the support τ-tilting pairs as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Build the Hasse quiver of support τ-tilting pairs.
    Hasse {
        file: PathBuf,
        /// DOT output (default `<out-dir>/<stem>.dot`).
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Also write the quiver as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// One-point extension by the simple module at a source.
    Extend {
        file: PathBuf,
        #[arg(long)]
        source: String,
        /// Output file (default `<out-dir>/<stem>-ext.json`).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the extension theorems on `A` and one of its sources.
    Verify {
        file: PathBuf,
        #[arg(long)]
        source: String,
        /// Comma-separated claims (default: all applicable).
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Report file (default `<out-dir>/report.json`).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Enumerate the `A_n²` and `D_n²` count tables and diff them against the printed values.
    PaperTables {
        #[arg(long = "nA", default_value_t = 10)]
        n_a: usize,
        #[arg(long = "nD", default_value_t = 10)]
        n_d: usize,
        /// Also write tables and discrepancies as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the indecomposable modules: index, name, dimension vector.
    Catalog { file: PathBuf },
    /// Write a member of the `A_n²` or `D_n²` family.
    Family {
        kind: String,
        n: usize,
        /// Output file (default: standard output).
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// The exit code an error maps to.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Io(_)
        | Error::UnknownVertex(_)
        | Error::UnknownArrow(_)
        | Error::DuplicateVertex(_)
        | Error::DuplicateArrow(_)
        | Error::NonComposableRelation(_)
        | Error::ShortRelation(_)
        | Error::InvalidDag(_) => EXIT_PARSE,
        Error::InfiniteDimensional => EXIT_INFINITE,
        Error::CatalogCap(_) | Error::CliqueCap(_) => EXIT_CAP,
        Error::NotASource(_) | Error::Precondition(_) | Error::OutOfRange(_) => EXIT_PRECONDITION,
        _ => EXIT_VERIFY,
    }
}

/// Writes `contents` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let parent = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    std::fs::create_dir_all(&parent)?;
    let mut tmp = tempfile::NamedTempFile::new_in(&parent)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

fn load(file: &Path) -> Result<Algebra> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
    Algebra::from_json(&text)
}

fn stem(file: &Path) -> String {
    file.file_stem().map_or_else(|| "algebra".to_string(), |s| s.to_string_lossy().into_owned())
}

fn source_index(alg: &Algebra, source: &str) -> Result<usize> {
    alg.vertex(source).map_err(|_| Error::Precondition(format!("`{source}` is not a vertex")))
}

impl Cli {
    fn limits(&self) -> Limits {
        Limits { clique_cap: self.cap_cliques, catalog_cap: self.cap_catalog }
    }

    fn default_path(&self, name: String) -> PathBuf {
        self.out_dir.join(name)
    }

    /// Runs the command, writing human-readable output to `out`.
    pub fn run(&self, out: &mut String) -> Result<i32> {
        let limits = self.limits();
        match &self.command {
            Command::Validate { file } => {
                let alg = load(file)?;
                let _ = writeln!(out, "vertices {}", alg.num_vertices());
                let _ = writeln!(out, "arrows {}", alg.arrows().len());
                let _ = writeln!(out, "relations {}", alg.relations().len());
                for v in 0..alg.num_vertices() {
                    let _ = writeln!(
                        out,
                        "P{}\tdim {}",
                        alg.vertex_id(v),
                        (0..alg.num_vertices()).map(|w| alg.paths_between(v, w).len()).sum::<usize>()
                    );
                }
                let _ = writeln!(out, "dim {}", alg.dimension());
            }
            Command::Enumerate { file, kind, json } => {
                let tau = TauContext::with_limits(Arc::new(load(file)?), &limits)?;
                let pairs = tau.enumerate_with_cap(limits.clique_cap)?;
                let mut count = 0;
                for p in &pairs {
                    let keep = match kind {
                        Kind::Stau => true,
                        Kind::Tau => p.is_tau_tilting(),
                        Kind::Tilt => p.is_tau_tilting() && tau.is_tilting(&p.module)?,
                    };
                    if keep {
                        count += 1;
                        let g: Vec<String> = p.g.iter().map(ToString::to_string).collect();
                        let _ = writeln!(out, "{}\tg=({})", tau.pair_label(p), g.join(","));
                    }
                }
                if let Some(path) = json {
                    write_atomic(path, &(serde_json::to_string_pretty(&tau.dump(&pairs))? + "\n"))?;
                }
                let _ = writeln!(out, "count {count}");
            }
            Command::Hasse { file, dot, json } => {
                let tau = TauContext::with_limits(Arc::new(load(file)?), &limits)?;
                let pairs = tau.enumerate_with_cap(limits.clique_cap)?;
                let h = tau.hasse(&pairs)?;
                let dot_path = dot.clone().unwrap_or_else(|| self.default_path(format!("{}.dot", stem(file))));
                write_atomic(&dot_path, &to_dot(h.dag()))?;
                if let Some(path) = json {
                    write_atomic(path, &(h.dag().to_json() + "\n"))?;
                }
                let _ = writeln!(out, "vertices {}", h.len());
                let _ = writeln!(out, "arrows {}", h.arrows().len());
                let _ = writeln!(out, "source {}", h.dag().label(h.source()));
                let _ = writeln!(out, "sink {}", h.dag().label(h.sink()));
                let _ = writeln!(out, "dot {}", dot_path.display());
            }
            Command::Extend { file, source, output } => {
                let alg = load(file)?;
                source_index(&alg, source)?;
                let (ext, new_vertex) = alg.one_point_extension(source)?;
                let path = output.clone().unwrap_or_else(|| self.default_path(format!("{}-ext.json", stem(file))));
                write_atomic(&path, &(ext.to_json() + "\n"))?;
                let _ = writeln!(out, "new vertex {new_vertex}");
                let _ = writeln!(out, "wrote {}", path.display());
            }
            Command::Verify { file, source, claims, report } => {
                let alg = load(file)?;
                let i = source_index(&alg, source)?;
                if !alg.is_source(i) {
                    return Err(Error::NotASource(source.clone()));
                }
                let explicit = !claims.is_empty();
                let mut selected: Vec<Claim> = if explicit {
                    claims.iter().map(|c| c.parse()).collect::<Result<_>>()?
                } else {
                    Claim::ALL.to_vec()
                };
                if !explicit && alg.is_sink(i) {
                    selected.retain(|&c| c != Claim::Tilting);
                    let _ = writeln!(out, "note: skipping {} (vertex `{source}` is also a sink)", Claim::Tilting);
                }
                let name = format!("{} at {source}", stem(file));
                let lab = ExtensionLab::new(ExtensionContext::new(name, alg, source)?, &limits)?;
                let mut reports: Vec<Report> = Vec::new();
                for c in selected {
                    reports.extend(c.run(&lab)?);
                }
                let path = report.clone().unwrap_or_else(|| self.default_path("report.json".into()));
                write_atomic(&path, &(serde_json::to_string_pretty(&reports)? + "\n"))?;
                for r in &reports {
                    for (name, contents) in &r.attachments {
                        write_atomic(&path.with_file_name(name), contents)?;
                    }
                    let _ = writeln!(out, "{}", r.summary());
                }
                let failures = hard_failures(&reports);
                let _ = writeln!(out, "hard failures {failures}");
                let _ = writeln!(out, "report {}", path.display());
                if failures > 0 {
                    return Ok(EXIT_VERIFY);
                }
            }
            Command::PaperTables { n_a, n_d, json } => {
                let tables = reproduce_tables(*n_a, *n_d, &limits)?;
                out.push_str(&tables.render());
                let closed = verify_closed_forms(&tables);
                let _ = writeln!(out, "{}", closed.summary());
                for note in &closed.notes {
                    let _ = writeln!(out, "  {note}");
                }
                if let Some(path) = json {
                    let payload = serde_json::json!({
                        "tables": tables,
                        "reports": [tables.report(), closed],
                    });
                    write_atomic(path, &(serde_json::to_string_pretty(&payload)? + "\n"))?;
                }
                let _ = writeln!(out, "warnings {}", tables.warnings());
                if tables.failures() > 0 || closed.is_hard_failure() {
                    let _ = writeln!(out, "failures {}", tables.failures() + usize::from(closed.is_hard_failure()));
                    return Ok(EXIT_VERIFY);
                }
            }
            Command::Catalog { file } => {
                let alg = Arc::new(load(file)?);
                let cap = limits.catalog_cap.unwrap_or_else(|| Catalog::default_cap(&alg));
                let catalog = Catalog::build_with_cap(alg, cap)?;
                out.push_str(&catalog.dump());
                let _ = writeln!(out, "count {}", catalog.len());
            }
            Command::Family { kind, n, output } => {
                let kind: FamilyKind = kind.parse()?;
                let json = crate::paperlab::family(kind, *n)?.to_json() + "\n";
                match output {
                    Some(path) => {
                        write_atomic(path, &json)?;
                        let _ = writeln!(out, "wrote {}", path.display());
                    }
                    None => out.push_str(&json),
                }
            }
        }
        Ok(EXIT_OK)
    }
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return EXIT_PRECONDITION;
        }
    }
    let mut out = String::new();
    let result = cli.run(&mut out);
    print!("{out}");
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
