//! Command-line front end wiring generation, inspection, verification, and
//! synthesis into reproducible reports.
//!
//! Exit codes: 0 on success/pass, 1 on verification failure, 2 on usage or
//! input errors. The `records` output format is line-oriented key-value text
//! and is byte-identical across identical invocations.

pub mod report;
pub mod verify;

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use poset_forge::complex::CellComplex;
use poset_forge::constructions::{synthesize, xkd, xkd_graph};
use poset_forge::homology::{boundary_matrices, reduced_betti};
use poset_forge::invariants::{
    euler_characteristic, f_vector, h_from_f, h_prime, ns_check, NsReport,
};
use poset_forge::io::{graph_to_dot, parse_input, write_complex, write_graph, InputObject};
use poset_forge::shelling::{is_cw_shelling, is_graphical_shelling, separating_family_min};
use poset_forge::{Color, FieldSpec};

use report::VerificationReport;
use verify::{sweep_reports, verify_xkd, VerifyOptions};

#[derive(Parser, Debug)]
#[command(
    name = "poset-forge",
    version,
    about = "Build and certify simplicial cell complexes encoded by edge-colored multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
enum OutputFormat {
    #[default]
    Human,
    Records,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    FieldSpec::parse_token(s).map_err(|e| format!("{e}; expected q, f2, f3, ..."))
}

#[derive(Args, Debug)]
struct FormatArg {
    /// Output style: human-readable or line-oriented records for diffing
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a family complex and write it to interchange files
    Generate {
        #[command(subcommand)]
        what: GenerateCmd,
    },
    /// Print f-, h-, h'-vectors, Euler characteristic, and the lower-bound report
    Invariants {
        /// Graph or complex interchange file
        file: PathBuf,
        /// Field for Betti numbers: q, f2, f3, ...
        #[arg(long, value_parser = parse_field, default_value = "q")]
        field: FieldSpec,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print reduced Betti numbers of a graph or complex file
    Homology {
        file: PathBuf,
        #[arg(long, value_parser = parse_field, default_value = "q")]
        field: FieldSpec,
        /// Also print the boundary matrices as (row, col, entry) triplets
        #[arg(long)]
        matrices: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Shelling checks
    Shelling {
        #[command(subcommand)]
        what: ShellingCmd,
    },
    /// Verify the advertised properties of a family member
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Glue two complexes by identifying one facet of each
    Glue {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        facet_a: String,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        facet_b: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Realize a Betti vector with the minimal h'-vector by chain-gluing
    Synthesize {
        /// Rank of the complex
        #[arg(long)]
        d: Color,
        /// Comma list of d entries: the Betti numbers in degrees 0..d-1
        #[arg(long)]
        betti: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the full verification matrix for every k <= d-1 <= max-d - 1
    Sweep {
        #[arg(long = "max-d")]
        max_d: Color,
        /// Seed for the randomized gluing/synthesis draws
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Subcommand, Debug)]
enum GenerateCmd {
    /// The complex X(k,d) with one nonzero Betti number
    Xkd {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        d: Color,
        /// Complex interchange output path
        #[arg(long)]
        out: PathBuf,
        /// Also write the encoding graph (k >= 1 only)
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Also write a DOT rendering of the encoding graph (k >= 1 only)
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ShellingCmd {
    /// Check a vertex ordering of a graph for the graphical-shelling property
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated vertex order
        #[arg(long)]
        order: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check a facet ordering of a complex for the CW-shelling property
    VerifyCw {
        #[arg(long)]
        complex: PathBuf,
        /// Comma-separated facet order
        #[arg(long)]
        order: String,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Check the Betti/h' profile, link shellings, and link h-vectors of X(k,d)
    Xkd {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        d: Color,
        /// Restrict to one field (default: rationals and F_2)
        #[arg(long, value_parser = parse_field)]
        field: Option<FieldSpec>,
        #[command(flatten)]
        format: FormatArg,
    },
}

/// Entry point shared by the binary and the tests. Writes normal output to
/// `out` and error messages to `err`; returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<bool, String> {
    match cli.command {
        Command::Generate { what } => generate(what, out),
        Command::Invariants {
            file,
            field,
            format,
        } => invariants_cmd(&file, field, format.format, out),
        Command::Homology {
            file,
            field,
            matrices,
            format,
        } => homology_cmd(&file, field, matrices, format.format, out),
        Command::Shelling { what } => shelling_cmd(what, out),
        Command::Verify { what } => verify_cmd(what, out),
        Command::Glue {
            a,
            facet_a,
            b,
            facet_b,
            out: out_path,
        } => glue_cmd(&a, &facet_a, &b, &facet_b, &out_path, out),
        Command::Synthesize {
            d,
            betti,
            out: out_path,
        } => synth_cmd(d, &betti, &out_path, out),
        Command::Sweep {
            max_d,
            seed,
            format,
        } => sweep_cmd(max_d, seed, format.format, out),
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("file `{}`: {e}", path.display()))
}

fn write_file(path: &Path, content: &str) -> Result<(), String> {
    std::fs::write(path, content).map_err(|e| format!("file `{}`: {e}", path.display()))
}

fn load_complex(path: &Path) -> Result<CellComplex, String> {
    let text = read_file(path)?;
    let obj = parse_input(&text).map_err(|e| format!("file `{}`: {e}", path.display()))?;
    obj.into_complex()
        .map_err(|e| format!("file `{}`: {e}", path.display()))
}

fn out_line(out: &mut dyn Write, line: impl AsRef<str>) -> Result<(), String> {
    writeln!(out, "{}", line.as_ref()).map_err(|e| e.to_string())
}

fn generate(cmd: GenerateCmd, out: &mut dyn Write) -> Result<bool, String> {
    match cmd {
        GenerateCmd::Xkd {
            k,
            d,
            out: out_path,
            graph_out,
            dot,
        } => {
            let p = xkd(k, d).map_err(|e| e.to_string())?;
            write_file(&out_path, &write_complex(&p))?;
            out_line(
                out,
                format!(
                    "generate subject=xkd(k={k},d={d}) facets={} out={}",
                    p.facet_count(),
                    out_path.display()
                ),
            )?;
            if graph_out.is_some() || dot.is_some() {
                let g = xkd_graph(k, d).map_err(|e| e.to_string())?.ok_or_else(|| {
                    format!("xkd(k={k},d={d}) is a disjoint union; it has no encoding graph")
                })?;
                if let Some(path) = graph_out {
                    write_file(&path, &write_graph(&g))?;
                    out_line(out, format!("graph out={}", path.display()))?;
                }
                if let Some(path) = dot {
                    write_file(&path, &graph_to_dot(&g))?;
                    out_line(out, format!("dot out={}", path.display()))?;
                }
            }
            Ok(true)
        }
    }
}

fn ns_slacks(rep: &NsReport) -> String {
    let mut s = String::from("(");
    for (i, v) in rep.slacks.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{v}");
    }
    s.push(')');
    s
}

fn invariants_cmd(
    path: &Path,
    field: FieldSpec,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<bool, String> {
    let p = load_complex(path)?;
    let f = f_vector(&p);
    let h = h_from_f(&f).map_err(|e| e.to_string())?;
    let chi = euler_characteristic(&f);
    let betti = reduced_betti(&p, field).map_err(|e| e.to_string())?;
    let hp = h_prime(&h, &betti).map_err(|e| e.to_string())?;
    let ns = ns_check(&hp, &betti).map_err(|e| e.to_string())?;
    let status = if ns.passed() { "pass" } else { "fail" };
    match format {
        OutputFormat::Records => {
            out_line(
                out,
                format!("invariants d={} field={}", p.d(), field.token()),
            )?;
            out_line(out, format!("f {f}"))?;
            out_line(out, format!("h {h}"))?;
            out_line(out, format!("chi {chi}"))?;
            out_line(out, format!("betti {betti}"))?;
            out_line(out, format!("hprime {hp}"))?;
            out_line(out, format!("ns status={status} slacks={}", ns_slacks(&ns)))?;
        }
        OutputFormat::Human => {
            out_line(out, format!("rank:        {}", p.d()))?;
            out_line(out, format!("facets:      {}", p.facet_count()))?;
            out_line(out, format!("f-vector:    {f}"))?;
            out_line(out, format!("h-vector:    {h}"))?;
            out_line(out, format!("chi~:        {chi}"))?;
            out_line(out, format!("betti ({}):  {betti}", field))?;
            out_line(out, format!("h'-vector:   {hp}"))?;
            out_line(
                out,
                format!("lower bounds: {status} (slacks {})", ns_slacks(&ns)),
            )?;
        }
    }
    Ok(ns.passed())
}

fn homology_cmd(
    path: &Path,
    field: FieldSpec,
    matrices: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<bool, String> {
    let p = load_complex(path)?;
    let betti = reduced_betti(&p, field).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Records => {
            out_line(out, format!("homology d={} field={}", p.d(), field.token()))?;
            out_line(out, format!("betti {betti}"))?;
        }
        OutputFormat::Human => {
            out_line(out, format!("reduced Betti numbers over {field}: {betti}"))?;
        }
    }
    if matrices {
        let cc = boundary_matrices(&p).map_err(|e| e.to_string())?;
        for r in 1..=p.d() {
            let m = cc.boundary(r);
            out_line(
                out,
                format!("matrix r={r} rows={} cols={}", m.rows(), m.cols()),
            )?;
            for (row, col, v) in m.triplets() {
                out_line(out, format!("entry {row} {col} {v}"))?;
            }
        }
    }
    Ok(true)
}

fn shelling_cmd(cmd: ShellingCmd, out: &mut dyn Write) -> Result<bool, String> {
    match cmd {
        ShellingCmd::Verify {
            graph,
            order,
            format,
        } => {
            let text = read_file(&graph)?;
            let g = match parse_input(&text).map_err(|e| e.to_string())? {
                InputObject::Graph(g) => g,
                InputObject::Complex(_) => {
                    return Err(format!(
                        "file `{}` is a complex; shelling verify needs a graph",
                        graph.display()
                    ))
                }
            };
            let order: Vec<String> = order.split(',').map(|s| s.trim().to_string()).collect();
            let cert = is_graphical_shelling(&g, &order).map_err(|e| e.to_string())?;
            if format.format == OutputFormat::Records {
                out_line(out, format!("shelling-verify d={}", g.d()))?;
            }
            match cert {
                Some(cert) => {
                    for (i, (name, r)) in cert.order.iter().zip(&cert.restrictions).enumerate() {
                        out_line(
                            out,
                            format!("step i={} facet={name} r={}", i + 1, r.to_list_string()),
                        )?;
                    }
                    out_line(out, "verdict status=pass")?;
                    Ok(true)
                }
                None => {
                    // locate and report the first failing step
                    let idx: Vec<usize> = order
                        .iter()
                        .map(|n| g.vertex_index(n).expect("checked by is_graphical_shelling"))
                        .collect();
                    for i in 1..=idx.len() {
                        match separating_family_min(&g, &idx, i).map_err(|e| e.to_string())? {
                            Some(r) => out_line(
                                out,
                                format!(
                                    "step i={i} facet={} r={}",
                                    order[i - 1],
                                    r.to_list_string()
                                ),
                            )?,
                            None => {
                                out_line(
                                    out,
                                    format!(
                                        "step i={i} facet={} r=none (no unique minimal separating set)",
                                        order[i - 1]
                                    ),
                                )?;
                                break;
                            }
                        }
                    }
                    out_line(out, "verdict status=fail")?;
                    Ok(false)
                }
            }
        }
        ShellingCmd::VerifyCw {
            complex,
            order,
            format,
        } => {
            let p = load_complex(&complex)?;
            let order: Vec<String> = order.split(',').map(|s| s.trim().to_string()).collect();
            let ok = is_cw_shelling(&p, &order).map_err(|e| e.to_string())?;
            if format.format == OutputFormat::Records {
                out_line(out, format!("shelling-verify-cw d={}", p.d()))?;
            }
            out_line(
                out,
                format!("verdict status={}", if ok { "pass" } else { "fail" }),
            )?;
            Ok(ok)
        }
    }
}

fn budget_from_env() -> Option<usize> {
    std::env::var("POSET_FORGE_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn verify_cmd(cmd: VerifyCmd, out: &mut dyn Write) -> Result<bool, String> {
    match cmd {
        VerifyCmd::Xkd {
            k,
            d,
            field,
            format,
        } => {
            let opts = VerifyOptions {
                fields: match field {
                    Some(f) => vec![f],
                    None => vec![FieldSpec::Rationals, FieldSpec::Prime(2)],
                },
                budget: budget_from_env(),
            };
            let report = verify_xkd(k, d, &opts);
            render_report(&report, format.format, out)?;
            Ok(report.passed())
        }
    }
}

fn render_report(
    report: &VerificationReport,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), String> {
    match format {
        OutputFormat::Records => report.render_records(out),
        OutputFormat::Human => report.render_human(out),
    }
    .map_err(|e| e.to_string())
}

fn glue_cmd(
    a: &Path,
    facet_a: &str,
    b: &Path,
    facet_b: &str,
    out_path: &Path,
    out: &mut dyn Write,
) -> Result<bool, String> {
    let mut pa = load_complex(a)?;
    let mut pb = load_complex(b)?;
    let mut fa = facet_a.to_string();
    let mut fb = facet_b.to_string();
    // generated files reuse facet names (alpha, word strings); disambiguate
    let collide = pb
        .facet_names()
        .iter()
        .any(|n| pa.facet_names().contains(n));
    if collide {
        pa = pa.prefix_facets("a.");
        pb = pb.prefix_facets("b.");
        fa = format!("a.{fa}");
        fb = format!("b.{fb}");
    }
    let q = pa.glue_facets(&fa, &pb, &fb).map_err(|e| e.to_string())?;
    write_file(out_path, &write_complex(&q))?;
    out_line(
        out,
        format!(
            "glue facets={}+{}-1={} renamed={} out={}",
            pa.facet_count(),
            pb.facet_count(),
            q.facet_count(),
            if collide { "a./b." } else { "no" },
            out_path.display()
        ),
    )?;
    Ok(true)
}

fn synth_cmd(d: Color, betti: &str, out_path: &Path, out: &mut dyn Write) -> Result<bool, String> {
    let entries: Vec<u64> = betti
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| format!("betti entry `{s}` is not a nonnegative integer"))
        })
        .collect::<Result<_, String>>()?;
    if entries.len() != d as usize {
        return Err(format!(
            "expected {d} betti entries (degrees 0..{}), got {}",
            d - 1,
            entries.len()
        ));
    }
    let mut full = vec![0u64];
    full.extend(entries);
    let q = synthesize(d, &full).map_err(|e| e.to_string())?;
    write_file(out_path, &write_complex(&q))?;
    let betti_q = reduced_betti(&q, FieldSpec::Rationals).map_err(|e| e.to_string())?;
    let hp = h_prime(
        &h_from_f(&f_vector(&q)).map_err(|e| e.to_string())?,
        &betti_q,
    )
    .map_err(|e| e.to_string())?;
    out_line(
        out,
        format!(
            "synthesize d={d} facets={} betti={betti_q} hprime={hp} out={}",
            q.facet_count(),
            out_path.display()
        ),
    )?;
    Ok(true)
}

fn sweep_cmd(
    max_d: Color,
    seed: u64,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<bool, String> {
    if max_d < 2 {
        return Err("--max-d must be at least 2".into());
    }
    let opts = VerifyOptions {
        fields: vec![FieldSpec::Rationals, FieldSpec::Prime(2)],
        budget: budget_from_env(),
    };
    let reports = sweep_reports(max_d, seed, &opts);
    let mut all = true;
    for report in &reports {
        render_report(report, format, out)?;
        all &= report.passed();
    }
    match format {
        OutputFormat::Records => out_line(
            out,
            format!(
                "sweep status={} reports={}",
                if all { "pass" } else { "fail" },
                reports.len()
            ),
        )?,
        OutputFormat::Human => out_line(
            out,
            format!(
                "sweep: {} ({} reports)",
                if all { "PASS" } else { "FAIL" },
                reports.len()
            ),
        )?,
    }
    Ok(all)
}
