use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context as _;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use d2color::discharging::audit;
use d2color::exact_solver::DEFAULT_BUDGET;
use d2color::generators::{named, random_plane, NAMES};
use d2color::reducer::ReduceError;
use d2color::{chi2_exact, color16, detect, validate, Chi2, Coloring, PlaneGraph, SearchBudget};

const OK: u8 = 0;
const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;
const FALSIFIED: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "d2color", version, about = "2-distance coloring of plane graphs with maximum degree 5")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Rotation file, or `-` for stdin.
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Vertex count for `gen`, largest size for `batch`.
    #[arg(long, global = true, default_value_t = 200)]
    n: usize,
    /// Number of random graphs for `gen` and `batch`.
    #[arg(long, global = true, default_value_t = 1)]
    count: u64,
    /// Search node budget for the exact solver.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Directory for falsification artifacts, and for files written by `gen`.
    #[arg(long, global = true, value_name = "DIR")]
    dump: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a coloring against a graph.
    Validate {
        #[arg(long, value_name = "PATH")]
        coloring: PathBuf,
    },
    /// Color with at most 16 colors.
    Color {
        /// Also print one line per reduction step.
        #[arg(long)]
        trace: bool,
    },
    /// Exact 2-distance chromatic number.
    Chi2,
    /// First reducible configuration.
    Detect,
    /// Discharging audit.
    Discharge,
    /// Write a named or random graph in rotation format.
    Gen {
        #[arg(long)]
        name: Option<String>,
    },
    /// Color and audit the corpus plus `--count` random graphs.
    Batch,
}

/// Failure with its exit status.
struct Exit(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Exit {
    fn from(e: E) -> Self {
        Exit(USAGE, e.into())
    }
}

fn read_graph(input: Option<&str>) -> Result<PlaneGraph, Exit> {
    let path = input.context("--in is required")?;
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    Ok(PlaneGraph::from_rotation_text(&text).with_context(|| format!("parsing {path}"))?)
}

fn dump(dir: Option<&Path>, stem: &str, g: &PlaneGraph) -> Result<(), Exit> {
    let dir = dir.unwrap_or(Path::new("."));
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(format!("{stem}.rot"));
    std::fs::write(&path, g.to_rotation_text()).with_context(|| format!("writing {}", path.display()))?;
    eprintln!("dumped {}", path.display());
    Ok(())
}

struct Out {
    format: Format,
    lock: io::StdoutLock<'static>,
}

impl Out {
    fn line(&mut self, json: &str, text: impl FnOnce() -> String) -> Result<(), Exit> {
        match self.format {
            Format::Json => writeln!(self.lock, "{json}"),
            Format::Text => writeln!(self.lock, "{}", text()),
        }
        .context("writing stdout")?;
        Ok(())
    }
}

fn run(cli: Cli) -> Result<u8, Exit> {
    let mut out = Out {
        format: cli.format,
        lock: io::stdout().lock(),
    };
    let dump_dir = cli.dump.as_deref();
    let input = cli.input.as_deref();
    match cli.command {
        Command::Validate { coloring } => {
            let g = read_graph(input)?;
            let text = std::fs::read_to_string(&coloring).with_context(|| format!("reading {}", coloring.display()))?;
            let c = Coloring::from_json(&text).context("parsing coloring")?;
            let r = validate(&g, &c);
            let json = serde_json::to_string(&r).expect("reports serialize");
            out.line(&json, || format!("valid: {}, violations: {}", r.valid, r.violations.len()))?;
            Ok(if r.valid { OK } else { CHECK_FAILED })
        }
        Command::Color { trace } => {
            let g = read_graph(input)?;
            match color16(&g) {
                Ok(res) => {
                    if trace {
                        for t in &res.traces {
                            out.line(&t.to_json_line(), || format!("{} {} deleted {}", t.step, t.rule, t.deleted))?;
                        }
                    }
                    out.line(&res.coloring.to_json(), || {
                        (0..g.vertex_count())
                            .map(|v| format!("{v} {}", res.coloring.get(v).unwrap_or(0)))
                            .collect::<Vec<_>>()
                            .join("\n")
                    })?;
                    for a in &res.anomalies {
                        eprintln!("no configuration at step {} ({} vertices)", a.step, a.vertices);
                        let h = PlaneGraph::from_rotation_text(&a.graph).expect("anomaly graphs are valid");
                        dump(dump_dir, &format!("anomaly-step{}", a.step), &h)?;
                    }
                    if !validate(&g, &res.coloring).valid {
                        return Ok(CHECK_FAILED);
                    }
                    Ok(if res.anomalies.is_empty() { OK } else { FALSIFIED })
                }
                Err(e @ (ReduceError::AnomalyNoConfiguration { .. } | ReduceError::NoAvailableColor { .. })) => {
                    eprintln!("{e}");
                    if let ReduceError::AnomalyNoConfiguration { graph, .. } = &e {
                        let h = PlaneGraph::from_rotation_text(graph).expect("anomaly graphs are valid");
                        dump(dump_dir, "anomaly", &h)?;
                    } else {
                        dump(dump_dir, "no-color", &g)?;
                    }
                    Ok(FALSIFIED)
                }
                Err(ReduceError::Detect(e)) => Err(Exit(USAGE, e.into())),
                Err(e) => Err(Exit(CHECK_FAILED, e.into())),
            }
        }
        Command::Chi2 => {
            let g = read_graph(input)?;
            let r = chi2_exact(&g, SearchBudget::nodes(cli.budget));
            let json = serde_json::to_string(&r).expect("values serialize");
            out.line(&json, || match r {
                Chi2::Exact(k) => k.to_string(),
                Chi2::Unknown => "unknown".into(),
            })?;
            Ok(OK)
        }
        Command::Detect => {
            let g = read_graph(input)?;
            let m = detect(&g)?;
            let json = m.as_ref().map_or("null".to_string(), |m| m.to_json());
            out.line(&json, || match &m {
                Some(m) => format!("{} deleting {}", m.rule, m.deleted().unwrap_or(0)),
                None => "none".into(),
            })?;
            Ok(OK)
        }
        Command::Discharge => {
            let g = read_graph(input)?;
            let a = audit(&g)?;
            out.line(&a.to_json(), || {
                format!(
                    "total {}, negatives {}, transfers {}, falsification {}",
                    a.conservation,
                    a.negatives.len(),
                    a.transfers,
                    a.falsification
                )
            })?;
            if a.falsification {
                dump(dump_dir, "falsification", &g)?;
                return Ok(FALSIFIED);
            }
            Ok(if a.conserved() { OK } else { CHECK_FAILED })
        }
        Command::Gen { name } => {
            let graphs: Vec<(String, PlaneGraph)> = match name {
                Some(name) => vec![(name.clone(), named(&name)?)],
                None => (0..cli.count)
                    .map(|i| {
                        let seed = cli.seed + i;
                        Ok((format!("random-n{}-s{seed}", cli.n), random_plane(cli.n.max(3), seed)?))
                    })
                    .collect::<Result<_, Exit>>()?,
            };
            for (stem, g) in graphs {
                match dump_dir {
                    Some(dir) => {
                        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                        let path = dir.join(format!("{stem}.rot"));
                        std::fs::write(&path, g.to_rotation_text())
                            .with_context(|| format!("writing {}", path.display()))?;
                        eprintln!("wrote {}", path.display());
                    }
                    None => write!(out.lock, "{}", g.to_rotation_text()).context("writing stdout")?,
                }
            }
            Ok(OK)
        }
        Command::Batch => batch(&cli_graphs(cli.n, cli.seed, cli.count)?, dump_dir, &mut out),
    }
}

fn cli_graphs(n: usize, seed: u64, count: u64) -> Result<Vec<(String, PlaneGraph)>, Exit> {
    let mut graphs: Vec<(String, PlaneGraph)> = NAMES.iter().map(|&s| (s.to_string(), named(s).unwrap())).collect();
    let top = n.max(3);
    for i in 0..count {
        let size = 3 + (i as usize * 7919) % (top - 2);
        let s = seed + i;
        graphs.push((format!("random-n{size}-s{s}"), random_plane(size, s)?));
    }
    Ok(graphs)
}

struct Row {
    json: serde_json::Value,
    reductions: usize,
    anomalies: usize,
    colors: u32,
    ok: bool,
    falsified: bool,
}

fn check(index: usize, name: &str, g: &PlaneGraph) -> Row {
    let colored = color16(g);
    let audited = audit(g);
    let (valid, colors, reductions, anomalies) = match &colored {
        Ok(r) => (validate(g, &r.coloring).valid, r.coloring.max_color(), r.traces.len(), r.anomalies.len()),
        Err(_) => (false, 0, 0, 1),
    };
    let (conservation, found, falsification) = match &audited {
        Ok(a) => (a.conservation.clone(), a.configuration.is_some(), a.falsification),
        Err(_) => (String::new(), false, false),
    };
    let found_ok = found || g.vertex_count() == 1;
    let falsified = falsification || anomalies > 0;
    Row {
        json: json!({
            "index": index,
            "name": name,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "valid": valid,
            "colors": colors,
            "reductions": reductions,
            "anomalies": anomalies,
            "conservation": conservation,
            "configuration_found": found,
            "falsification": falsification,
        }),
        reductions,
        anomalies,
        colors,
        ok: valid && conservation == "-8" && found_ok && !falsified,
        falsified,
    }
}

fn batch(graphs: &[(String, PlaneGraph)], dump_dir: Option<&Path>, out: &mut Out) -> Result<u8, Exit> {
    let rows: Vec<Row> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, (name, g))| check(i, name, g))
        .collect();
    for (row, (name, g)) in rows.iter().zip(graphs) {
        out.line(&row.json.to_string(), || {
            format!(
                "{name}: {} colors, {} reductions, {}",
                row.colors,
                row.reductions,
                if row.ok { "ok" } else { "FAILED" }
            )
        })?;
        if row.falsified {
            dump(dump_dir, name, g)?;
        }
    }
    let failures = rows.iter().filter(|r| !r.ok).count();
    let summary = json!({
        "summary": {
            "graphs": rows.len(),
            "reductions": rows.iter().map(|r| r.reductions).sum::<usize>(),
            "anomalies": rows.iter().map(|r| r.anomalies).sum::<usize>(),
            "max_colors": rows.iter().map(|r| r.colors).max().unwrap_or(0),
            "failures": failures,
        }
    });
    out.line(&summary.to_string(), || summary["summary"].to_string())?;
    Ok(if rows.iter().any(|r| r.falsified) {
        FALSIFIED
    } else if failures > 0 {
        CHECK_FAILED
    } else {
        OK
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
