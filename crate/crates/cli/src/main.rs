//! Command-line surface: build, verify, augment, render, and fixture
//! generation.
//!
//! Every subcommand reads ordinary files and writes its main artifact to
//! stdout (or `--output`).  `build` and `augment` additionally print a
//! self-verification report to stderr and only exit 0 when it passes;
//! `verify` prints its report to stdout and exits 0 exactly when the
//! representation realizes the graph.  Any validation failure prints
//! `{"error": {"kind", "detail"}}` to stdout and exits nonzero.

mod render;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use epg_core::verify::verify_against_edges;
use epg_core::{
    add_a1b1_edge, build_representation, error_to_json, label_two_sided, parse_graph,
    peel_outer_vertex, rep_from_json, rep_to_json, report_to_json, represent_planar_no_sep_triangle,
    sample_four_connected, verify_representation, BuildOptions, EmbeddedGraph, EpgRepresentation,
    Error, ParsedGraph, Report, Result, TwoSidedNearTriangulation,
};

#[derive(Parser)]
#[command(name = "epg", about = "Grid-path representations of planar graphs", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a representation of a graph and self-verify it.
    Build {
        /// Graph file (rotation or edge-list format).
        input: PathBuf,
        /// Outer-face labeling as `a1,b1,split`: first corner vertex,
        /// first vertex of the other side, and how many vertices the
        /// first side gets. Tries every labeling when omitted.
        #[arg(long)]
        outer: Option<String>,
        /// Leave out the closing corner edge between the two side ends.
        #[arg(long)]
        no_a1b1: bool,
        /// Audit all structural invariants at every recursion level.
        #[arg(long)]
        audit: bool,
        /// Write the representation here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a representation against a graph and report the differences.
    Verify {
        /// Representation JSON file.
        rep: PathBuf,
        /// Graph file.
        graph: PathBuf,
    },
    /// Represent a planar non-triangulation via its augmentation edges.
    Augment {
        /// Graph file; `augment:` lines supply the completion edges.
        input: PathBuf,
        /// Audit all structural invariants at every recursion level.
        #[arg(long)]
        audit: bool,
        /// Write the representation here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a representation.
    Render {
        /// Representation JSON file.
        rep: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        /// Write the drawing here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate pairwise non-isomorphic 4-connected triangulations.
    Gen {
        /// Number of vertices (at least 6).
        #[arg(long)]
        n: usize,
        /// How many graphs to collect.
        #[arg(long)]
        count: usize,
        /// Random walk seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for the generated files.
        #[arg(long, default_value = "fixtures")]
        dir: PathBuf,
        /// Also write each graph with one outer vertex removed (a
        /// near-triangulation with a polygonal outer face).
        #[arg(long)]
        near: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
    Ascii,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            print!("{}", error_to_json(&e));
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Build { input, outer, no_a1b1, audit, output } => {
            cmd_build(&input, outer.as_deref(), no_a1b1, audit, output.as_deref())
        }
        Cmd::Verify { rep, graph } => cmd_verify(&rep, &graph),
        Cmd::Augment { input, audit, output } => cmd_augment(&input, audit, output.as_deref()),
        Cmd::Render { rep, format, output } => cmd_render(&rep, format, output.as_deref()),
        Cmd::Gen { n, count, seed, dir, near } => cmd_gen(n, count, seed, &dir, near),
    }
}

// ---------------------------------------------------------------------------
// File plumbing
// ---------------------------------------------------------------------------

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })
}

fn emit(output: Option<&Path>, content: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, content).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn exit_for(report: &Report) -> ExitCode {
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

fn cmd_build(
    input: &Path,
    outer: Option<&str>,
    no_a1b1: bool,
    audit: bool,
    output: Option<&Path>,
) -> Result<ExitCode> {
    let parsed = parse_graph(&read_file(input)?)?;
    let opts = BuildOptions { audit };
    let (rep, t) = build_with_labeling(&parsed, outer, &opts, !no_a1b1)?;

    let report = if no_a1b1 {
        let vertices: BTreeSet<usize> = parsed.graph.vertices().collect();
        let mut edges: BTreeSet<(usize, usize)> = parsed
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        let (a1, b1) = (t.a()[0], t.b()[0]);
        edges.remove(&(a1.min(b1), a1.max(b1)));
        verify_against_edges(&rep, &vertices, &edges)
    } else {
        verify_representation(&rep, &parsed.graph)
    };

    emit(output, &rep_to_json(&rep, Some(&parsed.labels)))?;
    eprint!("{}", report_to_json(&report));
    Ok(exit_for(&report))
}

/// Builds with the requested labeling, or with the first labeling (outer
/// rotation × side split) that succeeds when none is given.
fn build_with_labeling(
    parsed: &ParsedGraph,
    outer: Option<&str>,
    opts: &BuildOptions,
    close: bool,
) -> Result<(EpgRepresentation, TwoSidedNearTriangulation)> {
    let g = &parsed.graph;
    let cycle = g.outer().to_vec();
    if cycle.is_empty() {
        return Err(Error::OuterNotAFace);
    }

    let attempt = |start: usize, split: usize| -> Result<(EpgRepresentation, TwoSidedNearTriangulation)> {
        let mut rotated = cycle[start..].to_vec();
        rotated.extend_from_slice(&cycle[..start]);
        let oriented = g.with_outer(rotated)?;
        let t = label_two_sided(&oriented, split)?;
        let mut rep = build_representation(&t, opts)?;
        if close {
            add_a1b1_edge(&mut rep, &t)?;
        }
        Ok((rep, t))
    };

    match outer {
        Some(flag) => {
            let (a1, b1, split) = parse_outer_flag(parsed, flag)?;
            let start = cycle.iter().position(|&v| v == a1).ok_or_else(|| {
                Error::UnknownVertex(format!("{} is not on the outer face", parsed.label(a1)))
            })?;
            let (rep, t) = attempt(start, split)?;
            if t.b()[0] != b1 {
                return Err(Error::InvariantViolation(format!(
                    "the requested labeling starts the second side at {}, not {}",
                    parsed.label(t.b()[0]),
                    parsed.label(b1)
                )));
            }
            Ok((rep, t))
        }
        None => {
            let mut last = Error::NoValidStep;
            for start in 0..cycle.len() {
                for split in 1..cycle.len() {
                    match attempt(start, split) {
                        Ok(done) => return Ok(done),
                        Err(e) => last = e,
                    }
                }
            }
            Err(last)
        }
    }
}

fn parse_outer_flag(parsed: &ParsedGraph, flag: &str) -> Result<(usize, usize, usize)> {
    let parts: Vec<&str> = flag.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Parse {
            line: 0,
            msg: format!("--outer expects `a1,b1,split`, got `{flag}`"),
        });
    }
    let resolve = |name: &str| -> Result<usize> {
        parsed
            .labels
            .iter()
            .find(|(_, l)| l.as_str() == name)
            .map(|(&id, _)| id)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    };
    let split: usize = parts[2].parse().map_err(|_| Error::Parse {
        line: 0,
        msg: format!("--outer split `{}` is not a number", parts[2]),
    })?;
    Ok((resolve(parts[0])?, resolve(parts[1])?, split))
}

// ---------------------------------------------------------------------------
// verify / augment / render / gen
// ---------------------------------------------------------------------------

fn cmd_verify(rep_path: &Path, graph_path: &Path) -> Result<ExitCode> {
    let (rep, _) = rep_from_json(&read_file(rep_path)?)?;
    let parsed = parse_graph(&read_file(graph_path)?)?;
    let report = verify_representation(&rep, &parsed.graph);
    print!("{}", report_to_json(&report));
    Ok(exit_for(&report))
}

fn cmd_augment(input: &Path, audit: bool, output: Option<&Path>) -> Result<ExitCode> {
    let parsed = parse_graph(&read_file(input)?)?;
    let opts = BuildOptions { audit };
    let rep = represent_planar_no_sep_triangle(&parsed.graph, &parsed.augmentation, &opts)?;
    let report = verify_representation(&rep, &parsed.graph);
    emit(output, &rep_to_json(&rep, Some(&parsed.labels)))?;
    eprint!("{}", report_to_json(&report));
    Ok(exit_for(&report))
}

fn cmd_render(rep_path: &Path, format: Format, output: Option<&Path>) -> Result<ExitCode> {
    let (rep, labels) = rep_from_json(&read_file(rep_path)?)?;
    let content = match format {
        Format::Json => rep_to_json(&rep, if labels.is_empty() { None } else { Some(&labels) }),
        Format::Svg => render::svg(&rep, &labels),
        Format::Ascii => render::ascii(&rep),
    };
    emit(output, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(n: usize, count: usize, seed: u64, dir: &Path, near: bool) -> Result<ExitCode> {
    let graphs = sample_four_connected(n, count, seed)?;
    fs::create_dir_all(dir).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot create {}: {e}", dir.display()),
    })?;
    let write = |path: PathBuf, g: &EmbeddedGraph| -> Result<()> {
        fs::write(&path, epg_core::io::write_graph(g, None)).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("cannot write {}: {e}", path.display()),
        })?;
        println!("wrote {}", path.display());
        Ok(())
    };
    for (i, g) in graphs.iter().enumerate() {
        write(dir.join(format!("tri_n{n:02}_s{seed}_{i:03}.g")), g)?;
        if near {
            let peeled = peel_outer_vertex(g)?;
            write(dir.join(format!("near_n{:02}_s{seed}_{i:03}.g", peeled.n())), &peeled)?;
        }
    }
    if graphs.len() < count {
        eprintln!("found {} of {count} requested graphs on {n} vertices", graphs.len());
    }
    Ok(ExitCode::SUCCESS)
}
