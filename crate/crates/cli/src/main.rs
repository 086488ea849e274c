use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cospec::dot::to_dot;
use cospec::family::{build_pair_with, FamilyParams, Wiring};
use cospec::graph6;
use cospec::report::{certify, match_report, spectrum_report};
use cospec::search::scan_cospectral_pm;
use cospec::switching::{apply_switch, SwitchingPartition};
use cospec::Graph;

#[derive(Parser)]
#[command(name = "cospec")]
#[command(about = "Cospectral regular graph pairs with and without a perfect matching")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build the degree-b graph (or its switched mate)
    Construct {
        #[arg(long)]
        b: usize,
        /// Emit the switched graph, which has a perfect matching
        #[arg(long)]
        switched: bool,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// Also write the layout (blocks, X, W, gadget labels) as JSON here
        #[arg(long)]
        sidecar: Option<PathBuf>,
        /// Use seeded random tie-breaking when wiring the big cycle
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Build a pair and check every claim about it; exits non-zero on failure
    Certify {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Characteristic polynomial of each graph6 line
    Spectrum {
        /// graph6 file, or `-` / nothing for standard input
        input: Option<PathBuf>,
    },
    /// Maximum matching of each graph6 line
    Match { input: Option<PathBuf> },
    /// Godsil-McKay switch with respect to X
    Switch {
        input: Option<PathBuf>,
        /// Comma-separated vertex labels of X
        #[arg(long, value_delimiter = ',', conflicts_with = "partition")]
        x: Option<Vec<usize>>,
        /// JSON file of the form {"X": [...]}
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Scan connected k-regular graphs for cospectral mates that disagree on
    /// having a perfect matching
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 14)]
        n_max: usize,
    },
}

fn wiring(seed: Option<u64>) -> Wiring {
    seed.map_or(Wiring::Balanced, Wiring::Random)
}

fn read_graphs(input: Option<&PathBuf>) -> Result<Vec<Graph>> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            s
        }
    };
    let graphs = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| graph6::decode_str(l).with_context(|| format!("line {}: bad graph6", i + 1)))
        .collect::<Result<Vec<_>>>()?;
    if graphs.is_empty() {
        bail!("no graph6 input");
    }
    Ok(graphs)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    match cli.command {
        Command::Construct {
            b,
            switched,
            format,
            sidecar,
            seed,
        } => {
            let params = FamilyParams::new(b)?;
            let (g, h, layout) = build_pair_with(params, wiring(seed))?;
            let graph = if switched { &h } else { &g };
            if let Some(path) = sidecar {
                let text = serde_json::to_string_pretty(&layout.to_json())?;
                fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
            }
            match format {
                Format::Graph6 => writeln!(out, "{}", graph6::encode(graph))?,
                Format::Dot => write!(out, "{}", to_dot(graph, Some(&layout.vertex_labels())))?,
                Format::Json => {
                    let doc = json!({
                        "graph6": graph6::encode(graph),
                        "switched": switched,
                        "layout": layout.to_json(),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
                }
            }
        }
        Command::Certify { b, seed } => {
            let report = certify(b, wiring(seed))?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            if !report.all_passed {
                let failed: Vec<&str> = report.failed_checks().collect();
                eprintln!("certification failed: {}", failed.join(", "));
                return Ok(ExitCode::from(1));
            }
        }
        Command::Spectrum { input } => {
            for g in read_graphs(input.as_ref())? {
                writeln!(out, "{}", serde_json::to_string(&spectrum_report(&g))?)?;
            }
        }
        Command::Match { input } => {
            for g in read_graphs(input.as_ref())? {
                writeln!(out, "{}", serde_json::to_string(&match_report(&g))?)?;
            }
        }
        Command::Switch { input, x, partition } => {
            let graphs = read_graphs(input.as_ref())?;
            let json = match (&x, &partition) {
                (_, Some(path)) => Some(
                    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
                ),
                (Some(_), None) => None,
                (None, None) => bail!("one of --x or --partition is required"),
            };
            for g in graphs {
                let p = match (&x, &json) {
                    (_, Some(text)) => SwitchingPartition::from_json(g.order(), text)?,
                    (Some(x), None) => SwitchingPartition::from_x(g.order(), x)?,
                    (None, None) => unreachable!(),
                };
                let h = apply_switch(&g, &p)?;
                writeln!(out, "{}", graph6::encode(&h))?;
            }
        }
        Command::Search { k, n_max } => {
            let report = scan_cospectral_pm(k, n_max);
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_errors = matches!(
        cli.command,
        Command::Certify { .. } | Command::Spectrum { .. } | Command::Match { .. } | Command::Search { .. }
    );
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(err) => {
            let msg = format!("{err:#}");
            if json_errors {
                let _ = writeln!(out, "{}", json!({ "error": msg }));
            }
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
