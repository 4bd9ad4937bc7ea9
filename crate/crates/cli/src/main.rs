use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gpetersen::bounds::{bound_report, BoundReport};
use gpetersen::graph::{make_circular_complete, make_cycle, walk_power, write_edge_list, SimpleGraph};
use gpetersen::hom::{
    c5_coloring, clique_embeddings, collapse_pet_to_pb, eta_cycle_power_coloring, interleave_embedding,
    pb_circular_coloring, pet_to_cycle_power, search_hom, SearchOptions, SearchOutcome,
};
use gpetersen::odd_girth::{cell, cross_validate, odd_girth_formula, odd_girth_from_ip, ValidationRow};
use gpetersen::petersen::{build_cycle_power_k, build_pb, build_petersen};
use gpetersen::{Error, GPParams, Rational};
use serde::Serialize;

mod render;

use render::{rational_cells, Table};

const OK: u8 = 0;
const USAGE: u8 = 1;
const INCONSISTENT: u8 = 2;
const NONE: u8 = 3;
const BUDGET: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "gpetersen", version, about = "Odd girth and circular chromatic bounds of generalized Petersen graphs")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "GPETERSEN_FORMAT", default_value = "table")]
    format: Format,
    /// Append a floating-point rendering next to exact values.
    #[arg(long, global = true)]
    decimal: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Tsv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Ip,
    Bfs,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    PetPb,
    PetCnk,
    PbCirc,
    Eta,
    Clique,
    Interleave,
    C5,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Instance {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

impl Instance {
    fn params(&self) -> Result<GPParams, Error> {
        GPParams::new(self.n, self.k)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Odd girth of Pet(n,k) by formula, integer program or BFS.
    Oddgirth {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
    },
    /// Cross-validate the three odd girth methods for every n <= n_max.
    Scan {
        #[arg(long)]
        n_max: usize,
    },
    /// Lower and upper bounds on the circular chromatic number.
    Bounds {
        #[command(flatten)]
        inst: Instance,
    },
    /// Build and verify one of the explicit homomorphisms or embeddings.
    Hom {
        #[arg(value_enum)]
        construction: Construction,
        #[command(flatten)]
        inst: Instance,
        /// Offset bound for `interleave` (default 2k+2).
        #[arg(long)]
        q: Option<usize>,
    },
    /// Exhaustive search for a homomorphism Pet(n,k) -> target.
    Search {
        #[command(flatten)]
        inst: Instance,
        /// c5, c7, cycle:L or circ:p/q
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Write a graph as an edge list.
    Export {
        /// pet, pb, cnk or power:r
        what: String,
        #[command(flatten)]
        inst: Instance,
        /// Destination file; stdout when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Internal(_) => INCONSISTENT,
        Error::BudgetExhausted(_) => BUDGET,
        _ => USAGE,
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, Error> {
    match &cli.command {
        Command::Oddgirth { inst, method } => oddgirth(cli, inst.params()?, *method, out),
        Command::Scan { n_max } => scan(cli, *n_max, out),
        Command::Bounds { inst } => bounds(cli, inst.params()?, out),
        Command::Hom { construction, inst, q } => hom(*construction, inst.params()?, *q, out),
        Command::Search { inst, target, budget } => search(cli, inst.params()?, target, *budget, out),
        Command::Export { what, inst, output } => export(what, inst.params()?, output.as_ref(), out),
    }
}

fn io_err(e: io::Error) -> Error {
    // a closed downstream pipe (`| head`) is not an error
    if e.kind() == io::ErrorKind::BrokenPipe {
        std::process::exit(OK as i32);
    }
    Error::InvalidInput(format!("write failed: {e}"))
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Error> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{s}").map_err(io_err)
}

fn oddgirth(cli: &Cli, p: GPParams, method: Method, out: &mut dyn Write) -> Result<u8, Error> {
    if method == Method::All {
        let row = ValidationRow::compute(p);
        let verdict = if row.matches { "match" } else { "mismatch" };
        match cli.format {
            Format::Json => json_line(out, &row)?,
            Format::Tsv => {
                writeln!(out, "n\tk\tformula\tip\tbfs\tmatch").map_err(io_err)?;
                writeln!(out, "{}\t{}\t{}\t{}\t{}\t{verdict}", p.n(), p.k(), cell(row.formula), cell(row.ip), cell(row.bfs))
                    .map_err(io_err)?
            }
            Format::Table => {
                writeln!(out, "{} {} {} {verdict}", cell(row.formula), cell(row.ip), cell(row.bfs)).map_err(io_err)?
            }
        }
        return Ok(if row.matches { OK } else { INCONSISTENT });
    }
    let value = match method {
        Method::Formula => odd_girth_formula(p).map(|t| t.chosen as usize),
        Method::Ip => odd_girth_from_ip(p),
        _ => gpetersen::graph::odd_girth_bfs(&build_petersen(p)),
    };
    match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                n: usize,
                k: usize,
                method: &'static str,
                odd_girth: Option<usize>,
            }
            let method = match method {
                Method::Formula => "formula",
                Method::Ip => "ip",
                _ => "bfs",
            };
            json_line(out, &Out { n: p.n(), k: p.k(), method, odd_girth: value })?
        }
        Format::Tsv => writeln!(out, "n\tk\todd_girth\n{}\t{}\t{}", p.n(), p.k(), cell(value)).map_err(io_err)?,
        Format::Table => writeln!(out, "{}", cell(value)).map_err(io_err)?,
    }
    Ok(OK)
}

fn scan(cli: &Cli, n_max: usize, out: &mut dyn Write) -> Result<u8, Error> {
    let report = cross_validate(n_max);
    match cli.format {
        Format::Json => json_line(out, &report)?,
        Format::Tsv => report.write_tsv(&mut *out).map_err(io_err)?,
        Format::Table => {
            let mut t = Table::new(["n", "k", "formula", "ip", "bfs", "match"]);
            for r in &report.rows {
                let m = if r.matches { "yes" } else { "no" };
                t.row([r.n.to_string(), r.k.to_string(), cell(r.formula), cell(r.ip), cell(r.bfs), m.to_string()]);
            }
            t.write(out).map_err(io_err)?
        }
    }
    let mismatches = report.mismatches().count();
    let violations = report.bound_violations().count();
    eprintln!("{} instances, {mismatches} mismatches, {violations} bound violations", report.rows.len());
    Ok(if mismatches + violations == 0 { OK } else { INCONSISTENT })
}

fn bounds(cli: &Cli, p: GPParams, out: &mut dyn Write) -> Result<u8, Error> {
    let report = bound_report(p)?;
    match cli.format {
        Format::Json => json_line(out, &report)?,
        Format::Tsv | Format::Table => write_bound_report(cli, p, &report, out).map_err(io_err)?,
    }
    if report.is_consistent() {
        Ok(OK)
    } else {
        eprintln!("best lower bound exceeds best upper bound");
        Ok(INCONSISTENT)
    }
}

fn write_bound_report(cli: &Cli, p: GPParams, r: &BoundReport, out: &mut dyn Write) -> io::Result<()> {
    let mut head = vec!["name", "kind", "value", "mixed"];
    if cli.decimal {
        head.push("decimal");
    }
    head.extend(["applicable", "reason"]);
    let mut t = Table::new(head);
    for b in &r.bounds {
        let kind = if b.kind == gpetersen::bounds::BoundKind::Lower { "lower" } else { "upper" };
        let mut row = vec![b.name.clone(), kind.to_string()];
        row.extend(rational_cells(b.value.as_ref(), cli.decimal));
        row.push(if b.applicable { "yes" } else { "no" }.to_string());
        row.push(b.reason.clone());
        t.row(row);
    }
    if cli.format == Format::Tsv {
        return t.write_tsv(out);
    }
    writeln!(out, "{p}  odd girth {}", r.odd_girth)?;
    t.write(out)?;
    let show = |x: Option<&Rational>| rational_cells(x, cli.decimal).join(" ");
    writeln!(out, "best lower: {}", show(r.best_lower.as_ref()))?;
    writeln!(out, "best upper: {}", show(Some(&r.best_upper)))?;
    writeln!(out, "C5-colorable: {}", if r.c5_colorable { "yes" } else { "no" })
}

fn hom(c: Construction, p: GPParams, q: Option<usize>, out: &mut dyn Write) -> Result<u8, Error> {
    #[derive(Serialize)]
    struct Colored<'a> {
        graph: String,
        #[serde(flatten)]
        coloring: &'a gpetersen::hom::CircularColoring,
        ratio: Rational,
        verified: bool,
    }
    match c {
        Construction::PetPb => json_line(out, &collapse_pet_to_pb(p)?.to_witness())?,
        Construction::PetCnk => json_line(out, &pet_to_cycle_power(p)?.to_witness())?,
        Construction::C5 => json_line(out, &c5_coloring(p)?.to_witness())?,
        Construction::PbCirc => {
            let col = pb_circular_coloring(p)?;
            let graph = build_pb(p).name().unwrap_or_default().to_string();
            json_line(out, &Colored { graph, ratio: col.ratio(), coloring: &col, verified: true })?
        }
        Construction::Eta => {
            let col = eta_cycle_power_coloring(p)?;
            let graph = build_cycle_power_k(p).name().unwrap_or_default().to_string();
            json_line(out, &Colored { graph, ratio: col.ratio(), coloring: &col, verified: true })?
        }
        Construction::Clique => {
            let all = clique_embeddings(p)?;
            // prefer the t > 0 form when both exist
            let Some(first) = all.iter().find(|w| w.solution.t > 0).or(all.first()) else {
                return Err(Error::Domain(format!("{p} is bipartite")));
            };
            json_line(out, first)?;
            let failed: Vec<_> = all.iter().filter(|w| !w.verified).collect();
            for w in &failed {
                eprintln!("clique check failed for {:?}: missing {:?}", w.solution, w.missing_pairs);
            }
            if !failed.is_empty() {
                return Ok(INCONSISTENT);
            }
        }
        Construction::Interleave => {
            let report = interleave_embedding(p, q)?;
            json_line(out, &report)?;
            if !report.verified {
                return Ok(INCONSISTENT);
            }
        }
    }
    Ok(OK)
}

fn parse_target(spec: &str) -> Result<SimpleGraph, Error> {
    let bad = || Error::InvalidInput(format!("unrecognised target '{spec}' (c5, c7, cycle:L, circ:p/q)"));
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match spec.to_ascii_lowercase().as_str() {
        "c5" => make_cycle(5),
        "c7" => make_cycle(7),
        s => {
            if let Some(len) = s.strip_prefix("cycle:") {
                make_cycle(number(len)?)
            } else if let Some(frac) = s.strip_prefix("circ:") {
                let (a, b) = frac.split_once('/').ok_or_else(bad)?;
                make_circular_complete(number(a)?, number(b)?)
            } else {
                Err(bad())
            }
        }
    }
}

fn search(cli: &Cli, p: GPParams, target: &str, budget: u64, out: &mut dyn Write) -> Result<u8, Error> {
    let h = parse_target(target)?;
    let g = build_petersen(p);
    // cycles and circular cliques are vertex-transitive
    let outcome = search_hom(&g, &h, &SearchOptions::with_budget(budget).transitive());
    let (word, code) = match &outcome {
        SearchOutcome::Found(..) => ("found", OK),
        SearchOutcome::None(..) => ("none", NONE),
        SearchOutcome::BudgetExhausted(_) => ("budget", BUDGET),
    };
    let nodes = outcome.stats().nodes;
    match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                result: &'a str,
                nodes: u64,
                #[serde(skip_serializing_if = "Option::is_none")]
                reason: Option<&'a gpetersen::hom::Refutation>,
                #[serde(skip_serializing_if = "Option::is_none")]
                witness: Option<gpetersen::hom::Witness>,
            }
            let (reason, witness) = match &outcome {
                SearchOutcome::Found(m, _) => (None, Some(m.to_witness())),
                SearchOutcome::None(r, _) => (Some(r), None),
                SearchOutcome::BudgetExhausted(_) => (None, None),
            };
            json_line(out, &Out { result: word, nodes, reason, witness })?
        }
        Format::Tsv => writeln!(out, "result\tnodes\n{word}\t{nodes}").map_err(io_err)?,
        Format::Table => {
            writeln!(out, "{word}").map_err(io_err)?;
            match &outcome {
                SearchOutcome::Found(m, _) => {
                    let pairs: Vec<String> =
                        (0..g.vertex_count()).map(|v| format!("{}->{}", g.label(v), m.image(v))).collect();
                    writeln!(out, "{}", pairs.join(" ")).map_err(io_err)?;
                }
                SearchOutcome::None(r, _) => writeln!(out, "reason: {r:?}").map_err(io_err)?,
                SearchOutcome::BudgetExhausted(_) => {}
            }
            eprintln!("{nodes} search nodes");
        }
    }
    Ok(code)
}

fn export(what: &str, p: GPParams, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<u8, Error> {
    let graph = match what {
        "pet" => build_petersen(p),
        "pb" => build_pb(p),
        "cnk" => build_cycle_power_k(p),
        w => match w.strip_prefix("power:").map(str::parse::<usize>) {
            Some(Ok(r)) => walk_power(&build_petersen(p), r)?,
            _ => return Err(Error::InvalidInput(format!("unknown graph '{what}' (pet, pb, cnk, power:r)"))),
        },
    };
    let mut bytes = Vec::new();
    write_edge_list(&graph, &mut bytes).map_err(io_err)?;
    match path {
        Some(path) => std::fs::write(path, &bytes)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?,
        None => out.write_all(&bytes).map_err(io_err)?,
    }
    Ok(OK)
}
