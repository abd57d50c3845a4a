use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use irgraph::constructions::{build_disconnected_source, DisconnectedSourceSpec};
use irgraph::emit::{self, EdgeList};
use irgraph::graph6::{emit_graph6, read_graph6_stream, StreamEntry};
use irgraph::harness::{probe_target, scan_census, Caps, CheckId};
use irgraph::input::parse_graph_arg;
use irgraph::irredundance::IrredundanceReport;
use irgraph::reconfig::IrGraph;
use irgraph::{FamilySpec, Fixture, Graph};

/// Irredundance parameters and IR-graphs of small graphs.
///
/// Graph arguments accept graph6 literals (`A_`, or `g6:A_`), `@file`
/// (graph6 or a JSON edge list), fixture names (`fig1-G`, `fig3-G`,
/// `fig4-F`) and family expressions (`path4`, `doublestar:2,2`,
/// `doublespider:1,1;1,2`, `2k2+k1`, `k2*k2`).
///
/// Exit status: 0 on success, 1 on check violations or unexpected probe
/// results, 2 on usage, input or resource errors (including census lines
/// that do not decode).
#[derive(Parser, Debug)]
#[command(name = "irgraph", version)]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,

    /// Output format.
    #[arg(long, short, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Refuse graphs with more IR-sets than this.
    #[arg(long, global = true, env = "IRGRAPH_MAX_SETS", default_value_t = Caps::default().max_ir_sets,
          value_parser = positive)]
    max_sets: usize,

    /// Largest order accepted by the isomorphism test.
    #[arg(long, global = true, env = "IRGRAPH_ISO_LIMIT", default_value_t = Caps::default().iso_limit,
          value_parser = positive)]
    iso_limit: usize,

    /// Most flip-sets enumerated per IR-set.
    #[arg(long, global = true, env = "IRGRAPH_FLIP_CAP", default_value_t = Caps::default().flip_cap,
          value_parser = positive)]
    flip_cap: usize,

    /// Worker threads for census scans (0 = one per core).
    #[arg(long, global = true, env = "IRGRAPH_WORKERS", default_value_t = 0)]
    workers: usize,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_ir_sets: self.max_sets,
            iso_limit: self.iso_limit,
            flip_cap: self.flip_cap,
            workers: self.workers,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ir, IR and the IR-sets with their private neighbourhoods.
    Compute { graph: String },
    /// The IR-graph (slide model).
    Irgraph { graph: String },
    /// Build a source graph for a prescribed IR-graph.
    #[command(subcommand)]
    Construct(Construct),
    /// Print a fixture graph.
    Fixture { name: String },
    /// Build a graph from a family expression.
    Family { spec: String },
    /// Run the structural checks over a graph6 census (`-` for stdin).
    Check {
        census: String,
        /// Comma-separated subset of checks to run.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<CheckId>>,
        /// Write the findings for each graph as JSON lines instead of the report.
        #[arg(long)]
        jsonl: bool,
        /// Write the IR-graph of every violating source as DOT into this directory.
        #[arg(long)]
        dump_dot: Option<PathBuf>,
    },
    /// Search a graph6 census for sources whose IR-graph is the target.
    Probe {
        #[arg(long)]
        target: String,
        census: String,
        /// Succeed only when at least one match is found.
        #[arg(long)]
        expect_match: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Source whose IR-graph is the given disconnected graph.
    #[command(alias = "disconnected")]
    Thm31 {
        #[arg(long)]
        target: String,
        /// Clique size; defaults to the order of the target.
        #[arg(long = "N")]
        n: Option<usize>,
        /// Which component (by smallest vertex) forms the first part.
        #[arg(long, default_value_t = 0)]
        component: usize,
    },
}

fn read_census(path: &str) -> Result<Vec<StreamEntry>> {
    let entries: io::Result<Vec<StreamEntry>> = if path == "-" {
        read_graph6_stream(io::stdin().lock()).collect()
    } else {
        let file = File::open(path).with_context(|| format!("cannot open census {path}"))?;
        read_graph6_stream(BufReader::new(file)).collect()
    };
    entries.with_context(|| format!("cannot read census {path}"))
}

fn graph_arg(arg: &str) -> Result<Graph> {
    parse_graph_arg(arg).with_context(|| format!("bad graph argument `{arg}`"))
}

fn render_graph(g: &Graph, name: &str, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", emit_graph6(g)),
        Format::Json => format!("{}\n", emit::to_json(g)),
        Format::Dot => emit::to_dot(g, name),
    }
}

fn render_ir_graph(h: &IrGraph, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&h.to_json()).expect("serializes")),
        Format::Dot => h.to_dot(),
        Format::Text => {
            let g = h.source();
            let mut out = format!(
                "IR={} nodes={} edges={}\n",
                h.ir_value(),
                h.node_count(),
                h.swaps().len() / 2
            );
            for (i, set) in h.nodes().iter().enumerate() {
                out += &format!("node {i}: {set}\n");
            }
            for s in h.swaps().iter().filter(|s| s.from < s.to) {
                out += &format!(
                    "edge {} -- {}: {}→{}\n",
                    s.from,
                    s.to,
                    g.display_name(s.out),
                    g.display_name(s.into)
                );
            }
            out
        }
    }
}

/// 1 for a failed check or probe expectation; otherwise 2 when census lines
/// did not decode.
fn exit_code(failed: bool, parse_errors: bool) -> ExitCode {
    if failed {
        ExitCode::from(1)
    } else if parse_errors {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> Result<(String, ExitCode)> {
    let caps = cli.caps.caps();
    let format = cli.format;
    let ok = |s: String| Ok((s, ExitCode::SUCCESS));
    match cli.command {
        Command::Compute { graph } => {
            let g = graph_arg(&graph)?;
            let report = IrredundanceReport::compute_capped(&g, caps.max_ir_sets)?;
            match format {
                Format::Text => ok(format!("{}\n", report.summary())),
                Format::Json => ok(format!("{}\n", serde_json::to_string_pretty(&report)?)),
                Format::Dot => bail!("`compute` has no DOT output; use `irgraph --format dot`"),
            }
        }
        Command::Irgraph { graph } => {
            let g = graph_arg(&graph)?;
            let h = IrGraph::build_capped(&g, caps.max_ir_sets)?;
            ok(render_ir_graph(&h, format))
        }
        Command::Construct(Construct::Thm31 { target, n, component }) => {
            let h = graph_arg(&target)?;
            let mut spec = DisconnectedSourceSpec::new(h).with_component(component);
            if let Some(n) = n {
                spec = spec.with_clique_size(n);
            }
            let src = build_disconnected_source(&spec)?;
            match format {
                Format::Json => {
                    let value = json!({
                        "graph6": emit_graph6(&src.graph),
                        "graph": EdgeList::from_graph(&src.graph),
                        "layout": &src,
                        "IR": src.expected_ir_value(),
                        "ir_sets": src.expected_ir_sets(),
                    });
                    ok(format!("{}\n", serde_json::to_string_pretty(&value)?))
                }
                _ => ok(render_graph(&src.graph, "source", format)),
            }
        }
        Command::Fixture { name } => {
            let f: Fixture = name.parse()?;
            ok(render_graph(&f.graph(), f.name(), format))
        }
        Command::Family { spec } => {
            let spec = FamilySpec::parse(&spec)?;
            ok(render_graph(&spec.build()?, &spec.to_string(), format))
        }
        Command::Check {
            census,
            checks,
            jsonl,
            dump_dot,
        } => {
            let entries = read_census(&census)?;
            let checks = checks.unwrap_or_else(|| CheckId::ALL.to_vec());
            let outcome = scan_census(&entries, &checks, &caps);
            let report = &outcome.report;
            eprintln!(
                "scanned {} graphs in {:.3}s",
                report.scanned,
                outcome.elapsed.as_secs_f64()
            );
            if let Some(dir) = dump_dot {
                dump_violations(&dir, &entries, report, &caps)?;
            }
            let text = if jsonl {
                let mut out = String::new();
                for gf in &report.graphs {
                    out += &serde_json::to_string(gf)?;
                    out.push('\n');
                }
                out
            } else {
                match format {
                    Format::Json => format!("{}\n", report.to_json()),
                    Format::Text => format!("{}\n", report.summary()),
                    Format::Dot => bail!("`check` has no DOT output; use --dump-dot"),
                }
            };
            let code = exit_code(!report.violations.is_empty(), !report.parse_errors.is_empty());
            Ok((text, code))
        }
        Command::Probe {
            target,
            census,
            expect_match,
        } => {
            let target = graph_arg(&target)?;
            let entries = read_census(&census)?;
            let result = probe_target(&target, &entries, &caps)?;
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&result)?),
                Format::Text => {
                    let mut out = format!("{}\n{}\n", result.summary(), result.evidence);
                    for m in &result.matches {
                        out += &format!("match line {}: {}\n", m.line, m.graph);
                    }
                    for s in &result.skipped {
                        out += &format!("skipped line {}: {} ({})\n", s.line, s.graph, s.reason);
                    }
                    for p in &result.parse_errors {
                        out += &format!("parse error line {}: {}\n", p.line, p.error);
                    }
                    out
                }
                Format::Dot => bail!("`probe` has no DOT output"),
            };
            let unexpected = result.matches.is_empty() == expect_match;
            let code = exit_code(unexpected, !result.parse_errors.is_empty());
            Ok((text, code))
        }
    }
}

fn dump_violations(
    dir: &Path,
    entries: &[StreamEntry],
    report: &irgraph::ScanReport,
    caps: &Caps,
) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let mut last = None;
    for v in &report.violations {
        if last == Some(v.index) {
            continue;
        }
        last = Some(v.index);
        let Ok(g) = &entries[v.index].graph else { continue };
        let h = IrGraph::build_capped(g, caps.max_ir_sets)?;
        let path = dir.join(format!("line{}.dot", v.line));
        fs::write(&path, h.to_dot()).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli).and_then(|(text, code)| write_output(output.as_deref(), &text).map(|()| code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
