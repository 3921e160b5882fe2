use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cutlattice::atlas::Atlas;
use cutlattice::cli::report::parse_expected;
use cutlattice::cli::{exit, generate, run_report, Cache, CliError, Config, GenOptions, Graph, ReportOptions};
use cutlattice::embeddings::{
    catalog_embedding, catalog_names, cutcone_decompose, partial_cube, verify, zone_embed, CutSearch, Embedding,
    PartialCube, Verification,
};
use cutlattice::hypermetrics::{find_violation, SearchMode, SearchOptions};
use cutlattice::metrics::{apsp, diameter, girth};
use cutlattice::riemann::{digon_family, enumerate_table2, format_table, lookup, Fraction};
use cutlattice::schlafli::SchlafliSymbol;

#[derive(Parser)]
#[command(name = "cutlattice", version, about = "Skeletons of regular tilings and honeycombs, hypercube embeddings and hypermetric certificates")]
struct Cli {
    /// key = value file with max_tuples, n_max, vertex_cap, max_scale, threads, budget.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Caps worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Tuple budget of a k-gonal search.
    #[arg(long, global = true)]
    max_tuples: Option<u64>,
    /// Largest graph handed to the exact cut search.
    #[arg(long, global = true)]
    n_max: Option<usize>,
    /// Largest tiling patch generated.
    #[arg(long, global = true)]
    vertex_cap: Option<usize>,
    /// Largest scale tried by `embed cutcone`.
    #[arg(long, global = true)]
    max_scale: Option<u32>,
    /// default or tiny.
    #[arg(long, global = true)]
    budget: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Embeddability status of Schläfli symbols.
    Atlas {
        symbols: Vec<String>,
        /// Every stored record.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
        /// Alternate atlas data file.
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// Generates a skeleton or patch from a symbol or graph name.
    Gen {
        target: String,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long)]
        margin: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Bypasses CUTLATTICE_CACHE_DIR.
        #[arg(long)]
        no_cache: bool,
    },
    /// All-pairs distance matrix.
    Dist {
        graph: String,
        #[arg(long)]
        csv: bool,
    },
    /// Length of a shortest cycle.
    Girth {
        graph: String,
        /// Only cycles through core vertices.
        #[arg(long)]
        core: bool,
    },
    /// Largest distance.
    Diam {
        graph: String,
    },
    /// Hypermetric inequality checks.
    Hypermetric {
        #[command(subcommand)]
        command: HypermetricCommand,
    },
    /// Hypercube embeddings.
    Embed {
        #[command(subcommand)]
        command: EmbedCommand,
    },
    /// Densities and genera of the spherical representations of the regular polyhedra.
    Table2 {
        /// Cell and vertex figure, e.g. `5/2 3`.
        #[arg(long, num_args = 2, value_names = ["CELL", "VF"])]
        entry: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
        /// Also list the representations on doubled polygons.
        #[arg(long)]
        digons: bool,
    },
    /// Runs every reproduction check and prints pass/fail lines.
    Report(ReportArgs),
}

#[derive(Subcommand)]
enum HypermetricCommand {
    /// Exits 3 when a violation is found.
    Check {
        graph: String,
        #[arg(long, value_parser = ["5", "7"])]
        k: String,
        #[arg(long, conflicts_with = "all")]
        first: bool,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum EmbedCommand {
    /// Checks an embedding against a graph; exits 3 when invalid.
    Verify {
        graph: String,
        embedding: String,
        #[arg(long)]
        core: bool,
    },
    /// Scale-1 embedding when the graph is a partial cube.
    PartialCube {
        graph: String,
    },
    /// Zone embedding of a patch.
    Zones {
        patch: String,
        #[arg(long, default_value_t = 2)]
        scale: u32,
        /// Print the cut decomposition instead of the labels.
        #[arg(long)]
        cuts: bool,
    },
    /// Exact cut decomposition; without --scale tries 1, 2, 4, ... up to max_scale.
    Cutcone {
        graph: String,
        #[arg(long)]
        scale: Option<u32>,
    },
    /// Built-in embedding of a named graph.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Also write the graph.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ReportArgs {
    /// Writes the JSON document here; the text summary goes to stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Alternate atlas data file.
    #[arg(long)]
    atlas: Option<PathBuf>,
    /// `id = value` lines replacing expected values.
    #[arg(long)]
    expect: Option<PathBuf>,
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

fn read_graph(path: &str) -> Result<Graph, CliError> {
    Graph::from_json(&read_input(path)?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n")).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io(format!("stdout: {e}"))),
                _ => Ok(()),
            }
        }
    }
}

fn print(text: &str) -> Result<(), CliError> {
    write_output(None, text)
}

fn config(cli: &Cli) -> Result<Config, CliError> {
    let mut c = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(v) = cli.threads {
        c.threads = v;
    }
    if let Some(v) = cli.max_tuples {
        c.max_tuples = v;
    }
    if let Some(v) = cli.n_max {
        c.n_max = v;
    }
    if let Some(v) = cli.vertex_cap {
        c.vertex_cap = v;
    }
    if let Some(v) = cli.max_scale {
        c.max_scale = v;
    }
    if let Some(v) = &cli.budget {
        c.budget = v.parse()?;
    }
    Ok(c)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let cfg = config(&cli)?;
    if cfg.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build_global()
            .map_err(|e| CliError::Io(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Atlas { symbols, list, json, data } => {
            let atlas = match data {
                Some(p) => Atlas::parse(&read_input(&p.to_string_lossy())?)?,
                None => Atlas::builtin(),
            };
            let records: Vec<_> = if list {
                atlas.records().cloned().collect()
            } else {
                if symbols.is_empty() {
                    return Err(CliError::Usage("give one or more symbols, or --list".into()));
                }
                symbols.iter().map(|s| Ok(atlas.status(&SchlafliSymbol::parse(s)?))).collect::<Result<_, CliError>>()?
            };
            if json {
                print(&serde_json::to_string_pretty(&records)?)?;
            } else {
                for r in &records {
                    let name = if r.name.is_empty() { String::new() } else { format!(" ({})", r.name) };
                    let note = if r.note.is_empty() { String::new() } else { format!("; {}", r.note) };
                    print(&format!("{}{name}{note}", r.summary()))?;
                }
            }
        }
        Command::Gen { target, radius, margin, output, no_cache } => {
            let opts = GenOptions { radius, margin, vertex_cap: cfg.vertex_cap };
            let text = match Cache::from_env().filter(|_| !no_cache) {
                Some(cache) => cache.load_or_generate(&target, opts)?.0,
                None => generate(&target, opts)?.to_json(),
            };
            write_output(output.as_deref(), &text)?;
        }
        Command::Dist { graph, csv } => {
            let d = apsp(read_graph(&graph)?.skeleton());
            print(if csv { d.to_csv() } else { d.to_json() }.trim_end())?;
        }
        Command::Girth { graph, core } => {
            let g = read_graph(&graph)?;
            print(&girth(g.skeleton(), core).map_or("null".into(), |x| x.to_string()))?;
        }
        Command::Diam { graph } => {
            let g = read_graph(&graph)?;
            print(&diameter(g.skeleton()).map_or("null".into(), |x| x.to_string()))?;
        }
        Command::Hypermetric { command: HypermetricCommand::Check { graph, k, first: _, all } } => {
            let g = read_graph(&graph)?;
            let k: usize = k.parse().expect("validated by clap");
            let mut opts = if all { SearchOptions::all(k) } else { SearchOptions::first(k) };
            opts.budget = cfg.max_tuples;
            let found = find_violation(g.skeleton(), &opts)?;
            if opts.mode == SearchMode::First {
                print(&found.first().map_or("null".into(), |c| c.to_json()))?;
            } else {
                print(&serde_json::to_string_pretty(&found)?)?;
            }
            return Ok(if found.is_empty() { exit::OK } else { exit::VIOLATION });
        }
        Command::Embed { command } => return embed(command, &cfg),
        Command::Table2 { entry, json, digons } => {
            let entries = match entry {
                Some(pair) => {
                    let f = |s: &str| s.parse::<Fraction>();
                    vec![lookup(f(&pair[0])?, f(&pair[1])?)?]
                }
                None => {
                    let mut t = enumerate_table2()?;
                    if digons {
                        t.extend(digon_family()?);
                    }
                    t
                }
            };
            if json {
                print(&serde_json::to_string_pretty(&entries)?)?;
            } else if entries.len() == 1 {
                let e = &entries[0];
                print(&format!(
                    "({}, {}) on the {}: density {}, genus {}",
                    e.cell, e.vertex_figure, e.base, e.density, e.genus
                ))?;
            } else {
                print(format_table(&entries).trim_end())?;
            }
        }
        Command::Report(args) => {
            let atlas = match &args.atlas {
                Some(p) => Atlas::parse(&read_input(&p.to_string_lossy())?)?,
                None => Atlas::builtin(),
            };
            let expected = match &args.expect {
                Some(p) => parse_expected(&read_input(&p.to_string_lossy())?)?,
                None => Default::default(),
            };
            let report = run_report(&ReportOptions { config: cfg, atlas, expected })?;
            if let Some(p) = &args.json {
                write_output(Some(p), &report.to_json())?;
            }
            print(report.to_text().trim_end())?;
            return Ok(report.exit_code());
        }
    }
    Ok(exit::OK)
}

fn embed(command: EmbedCommand, cfg: &Config) -> Result<i32, CliError> {
    match command {
        EmbedCommand::Verify { graph, embedding, core } => {
            let g = read_graph(&graph)?;
            let e = Embedding::from_json(&read_input(&embedding)?)?;
            match verify(g.skeleton(), &e, core)? {
                Verification::Valid => print("valid")?,
                Verification::Invalid { u, v, distance, hamming } => {
                    print(&format!("invalid: vertices {u} {v} at distance {distance}, hamming {hamming}"))?;
                    return Ok(exit::VIOLATION);
                }
            }
        }
        EmbedCommand::PartialCube { graph } => {
            let g = read_graph(&graph)?;
            match partial_cube(g.skeleton())? {
                PartialCube::Embedding { embedding, .. } => print(&embedding.to_json())?,
                PartialCube::NotPartialCube(reason) => {
                    print(&json!({ "partial_cube": false, "reason": reason }).to_string())?
                }
            }
        }
        EmbedCommand::Zones { patch, scale, cuts } => {
            let g = read_graph(&patch)?;
            let p = g.patch().ok_or_else(|| CliError::Usage(format!("{patch} has no rotation system")))?;
            let z = zone_embed(p, scale)?;
            print(&if cuts { z.decomposition.to_json() } else { z.embedding.to_json() })?;
        }
        EmbedCommand::Cutcone { graph, scale } => {
            let g = read_graph(&graph)?;
            let scales = match scale {
                Some(s) => vec![s],
                None => cfg.scales(),
            };
            let mut last = None;
            for s in scales {
                match cutcone_decompose(g.skeleton(), s, cfg.n_max)? {
                    CutSearch::Found(d) => {
                        print(&d.to_json())?;
                        return Ok(exit::OK);
                    }
                    CutSearch::NoneExists { canonical_cuts, convex_cuts } => {
                        last = Some(json!({
                            "none_exists": true,
                            "scale": s,
                            "canonical_cuts": canonical_cuts,
                            "convex_cuts": convex_cuts,
                        }))
                    }
                }
            }
            print(&last.map_or("null".into(), |v| v.to_string()))?;
        }
        EmbedCommand::Catalog { name, list, graph_out } => {
            if list {
                print(&catalog_names().join("\n"))?;
                return Ok(exit::OK);
            }
            let name = name.ok_or_else(|| CliError::Usage("give a catalog name or --list".into()))?;
            let item = catalog_embedding(&name)?;
            if let Some(p) = graph_out {
                write_output(Some(&p), &item.graph.to_json())?;
            }
            print(&item.embedding.to_json())?;
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

