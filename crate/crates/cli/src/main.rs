//! `acute-cube`: cycle indices, Pólya counts, triangles, the acute simplex
//! census and the Hessenberg family from the command line.
//!
//! Exit status is 0 on success, 1 on a usage or input error and 2 when a
//! requested verification fails.

mod cache;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use acute_cube::acute_enum::enumerate_acute_capped;
use acute_cube::binmat::{canonical_capped, BinaryMatrixRep};
use acute_cube::exactgram::{gram_of_labels, is_acute, is_strictly_ultrametric};
use acute_cube::hessenberg::{enumerate_level, kepler_levels};
use acute_cube::polya::{count_all_in, count_classes_in, count_row_in};
use acute_cube::triangles::{enumerate_triangles, TriangleFilter};
use acute_cube::{DEFAULT_ACUTE_CAP, DEFAULT_DIMENSION_CAP, DEFAULT_FACTORIAL_CAP};
use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "acute-cube", version, about = "Acute 0/1-simplices and symmetry counts in the unit cube")]
struct Cli {
    /// Directory for cached cycle-index tables.
    #[arg(long, env = "ACUTE_CUBE_CACHE", global = true)]
    cache_dir: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cycle index of the hyperoctahedral group acting on the vertices of I^n.
    CycleIndex {
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
        /// Largest dimension accepted.
        #[arg(long, default_value_t = DEFAULT_DIMENSION_CAP)]
        cap: usize,
    },
    /// Number of 0/1-polytopes up to symmetry.
    #[command(group(ArgGroup::new("what").required(true).args(["vertices", "all", "simplices"])))]
    Count {
        n: usize,
        /// Polytopes with exactly this many vertices.
        #[arg(long)]
        vertices: Option<u64>,
        /// All polytopes, summed over every vertex count.
        #[arg(long)]
        all: bool,
        /// One count for each vertex count 1..=n+1.
        #[arg(long)]
        simplices: bool,
        #[arg(long, value_enum, default_value_t = CountFormat::Text)]
        format: CountFormat,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_CAP)]
        cap: usize,
    },
    /// 0/1-triangles up to symmetry.
    #[command(group(ArgGroup::new("kind").args(["acute", "right", "all"])))]
    Triangles {
        n: usize,
        #[arg(long)]
        acute: bool,
        #[arg(long)]
        right: bool,
        /// Both kinds (the default).
        #[arg(long)]
        all: bool,
        /// Print every shape instead of the count.
        #[arg(long)]
        list: bool,
    },
    /// All acute simplices with n + 1 vertices in I^n, in minimal form.
    EnumerateAcute {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = SimplexFormat::Jsonl)]
        format: SimplexFormat,
        #[arg(long, default_value_t = DEFAULT_ACUTE_CAP)]
        cap: usize,
    },
    /// Minimal matrix representation of a 0/1-matrix.
    Canon {
        /// Matrix file in text or JSON format; `-` or absent reads stdin.
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
        /// Largest column count accepted.
        #[arg(long, default_value_t = DEFAULT_FACTORIAL_CAP)]
        cap: usize,
    },
    /// Check a simplex for acuteness and strict ultrametricity.
    Check {
        file: String,
        #[arg(long)]
        acute: bool,
        #[arg(long)]
        ultrametric: bool,
    },
    /// The matrices H_lambda of size n with their determinants.
    Hessenberg {
        n: usize,
        /// Also check structure, ultrametricity and acuteness.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = CountFormat::Text)]
        format: CountFormat,
    },
    /// Levels 0..=depth of the composition tree as JSON lines.
    Kepler {
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CountFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SimplexFormat {
    Jsonl,
    Matrix,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixFormat {
    Text,
    Json,
}

/// Completed, or completed with a failed verification.
enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let cache_dir = if cli.no_cache { None } else { cli.cache_dir.or_else(cache::default_dir) };
    let cache_dir = cache_dir.as_deref();
    let mut out = io::stdout().lock();
    match cli.command {
        Command::CycleIndex { n, format, cap } => {
            let table = cache::cycle_index(cache_dir, n, cap)?;
            match format {
                TableFormat::Table => write!(out, "{}", table.to_text())?,
                TableFormat::Json => writeln!(out, "{}", table.to_json())?,
                TableFormat::Csv => write!(out, "{}", table.to_csv())?,
            }
        }
        Command::Count { n, vertices, all, simplices, format, cap } => {
            let table = cache::cycle_index(cache_dir, n, cap)?;
            let rows: Vec<(String, String)> = if let Some(k) = vertices {
                if n >= 64 || k > 1u64 << n {
                    bail!("I^{n} has only 2^{n} vertices, cannot choose {k}");
                }
                vec![(k.to_string(), count_classes_in(&table, k).to_string())]
            } else if all {
                vec![("all".into(), count_all_in(&table).to_string())]
            } else {
                debug_assert!(simplices);
                let max_k = n + 1;
                let row = count_row_in(&table, max_k);
                (1..=max_k).map(|k| (k.to_string(), row[k].to_string())).collect()
            };
            match format {
                CountFormat::Text if rows.len() == 1 => writeln!(out, "{}", rows[0].1)?,
                CountFormat::Text => {
                    for (k, c) in &rows {
                        writeln!(out, "{k} {c}")?;
                    }
                }
                CountFormat::Csv => {
                    writeln!(out, "n,k,count")?;
                    for (k, c) in &rows {
                        writeln!(out, "{n},{k},{c}")?;
                    }
                }
                CountFormat::Json => {
                    let counts: Vec<_> =
                        rows.iter().map(|(k, c)| serde_json::json!({"k": k, "count": c})).collect();
                    writeln!(out, "{}", serde_json::json!({"n": n, "counts": counts}))?;
                }
            }
        }
        Command::Triangles { n, acute, right, all: _, list } => {
            let filter = match (acute, right) {
                (true, _) => TriangleFilter::Acute,
                (_, true) => TriangleFilter::Right,
                _ => TriangleFilter::All,
            };
            let shapes = enumerate_triangles(n, filter);
            if list {
                for s in shapes {
                    let (x, y) = s.labels();
                    let kind = if s.is_acute() { "acute" } else { "right" };
                    writeln!(out, "{} {} {} {} {kind} nu=0,{x},{y}", s.a, s.b, s.c, s.d)?;
                }
            } else {
                writeln!(out, "{}", shapes.len())?;
            }
        }
        Command::EnumerateAcute { n, out: path, jobs, format, cap } => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
            let census = pool.install(|| enumerate_acute_capped(n, cap))?;
            let mut text = String::new();
            for s in &census.simplices {
                match format {
                    SimplexFormat::Jsonl => {
                        text.push_str(&s.to_json().to_string());
                        text.push('\n');
                    }
                    SimplexFormat::Matrix => {
                        text.push_str(&format!("# det {} hessenberg {}\n", s.abs_det, s.hessenberg));
                        text.push_str(&s.rep.to_text());
                        text.push('\n');
                    }
                }
            }
            match path {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
            eprintln!(
                "{} acute simplices in I^{n}; {} tree nodes; {} candidate-set checks, {} violations",
                census.simplices.len(),
                census.nodes,
                census.one_neighbor_checks,
                census.one_neighbor_violations
            );
            if census.one_neighbor_violations > 0 {
                return Ok(Outcome::Failed);
            }
        }
        Command::Canon { input, format, cap } => {
            let p = read_matrix(input.as_deref().unwrap_or("-"))?;
            let c = canonical_capped(&p, cap)?;
            match format {
                MatrixFormat::Text => write!(out, "{}", c.to_text())?,
                MatrixFormat::Json => writeln!(out, "{}", c.to_json())?,
            }
        }
        Command::Check { file, acute, ultrametric } => {
            let p = read_matrix(&file)?;
            let (acute, ultrametric) = if acute || ultrametric { (acute, ultrametric) } else { (true, true) };
            let mut ok = true;
            if acute {
                let a = is_acute(&p);
                writeln!(out, "acute: {}", yes_no(a))?;
                ok &= a;
            }
            if ultrametric {
                let u = is_strictly_ultrametric(&gram_of_labels(&edge_labels(&p)))?;
                writeln!(out, "ultrametric: {}", yes_no(u))?;
                ok &= u;
            }
            if !ok {
                return Ok(Outcome::Failed);
            }
        }
        Command::Hessenberg { n, verify, format } => {
            let entries = enumerate_level(n)?;
            let mut ok = true;
            if format == CountFormat::Csv {
                writeln!(out, "lambda,det,minimal_candidate,nu")?;
            }
            for e in &entries {
                let m = &e.matrix;
                let parts: Vec<String> = m.lambda().parts().iter().map(usize::to_string).collect();
                let nu: Vec<String> = m.simplex().column_numbers().iter().map(u32::to_string).collect();
                match format {
                    CountFormat::Text => writeln!(
                        out,
                        "<{}> det {} minimal_candidate {} nu={}",
                        parts.join(","),
                        e.abs_det,
                        e.minimal_candidate,
                        nu.join(",")
                    )?,
                    CountFormat::Csv => writeln!(
                        out,
                        "{},{},{},{}",
                        parts.join("+"),
                        e.abs_det,
                        e.minimal_candidate,
                        nu.join(" ")
                    )?,
                    CountFormat::Json => writeln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "lambda": m.lambda().parts(),
                            "det": e.abs_det.to_string(),
                            "minimal_candidate": e.minimal_candidate,
                            "nu": m.simplex().column_numbers(),
                        })
                    )?,
                }
                if verify {
                    let checks = [
                        ("unreduced upper Hessenberg", m.is_unreduced_upper_hessenberg()),
                        ("strictly ultrametric", is_strictly_ultrametric(m.gramian().entries())?),
                        ("acute", is_acute(&m.simplex())),
                    ];
                    for (what, passed) in checks {
                        if !passed {
                            eprintln!("H{} is not {what}", m.lambda());
                            ok = false;
                        }
                    }
                }
            }
            if verify {
                eprintln!("{} matrices checked: {}", entries.len(), if ok { "all passed" } else { "FAILED" });
            }
            if !ok {
                return Ok(Outcome::Failed);
            }
        }
        Command::Kepler { depth } => {
            if depth > 24 {
                bail!("depth {depth} is too large (at most 24)");
            }
            for level in kepler_levels(depth) {
                for node in level {
                    writeln!(out, "{}", node.to_json())?;
                }
            }
        }
    }
    out.flush()?;
    Ok(Outcome::Ok)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Nonzero columns after moving the zero column, or else the first column,
/// to the origin.
fn edge_labels(p: &BinaryMatrixRep) -> Vec<u32> {
    let origin = if p.columns().contains(&0) { 0 } else { p.columns()[0] };
    p.columns().iter().map(|&c| c ^ origin).filter(|&c| c != 0).collect()
}

fn read_matrix(source: &str) -> Result<BinaryMatrixRep> {
    let text = if source == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(source).with_context(|| format!("reading {source}"))?
    };
    Ok(BinaryMatrixRep::parse(&text)?)
}
