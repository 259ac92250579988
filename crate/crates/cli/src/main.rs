//! `maxsusy`: build, contract and check Lie superalgebras from the shell.
//!
//! Exit status: 0 on success, 1 when a check fails (Jacobi, dimensions,
//! classification, non-empty diff, divergent limit), 2 on usage or I/O errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use maxsusy_core::builders::{build, BuildFamily, BuilderParams};
use maxsusy_core::clifford::{bilinear_symmetry, canonical, check_clifford};
use maxsusy_core::contraction::{
    finite_r_with, run_with, select_scheme, ContractionError, ContractionParams, SchemeKind,
};
use maxsusy_core::superalg::{compare, json, super_jacobi_residual, AlgebraError, Correspondence, SuperAlgebra};
use maxsusy_core::verify::verify_algebra;
use maxsusy_core::Rational;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "maxsusy", version, about = "Exact Maxwell superalgebra contractions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads for the parallel checks (default: all cores).
    #[arg(long, env = "MAXSUSY_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one of the fixed algebras.
    Build(BuildArgs),
    /// Rescale OSp_R(2N-k;2|C) + OSp(k;4) and take R -> infinity.
    Contract(ContractArgs),
    /// Jacobi, mass dimension and supercharge report for an algebra file.
    Verify(InputArgs),
    /// Graded Jacobi check only.
    Jacobi(InputArgs),
    /// Structure-constant differences between two algebra files, matched by label.
    Diff(DiffArgs),
    /// Print the gamma matrices and derived spinor matrices.
    DumpGamma,
}

#[derive(Args, Debug)]
struct BuildArgs {
    /// lorentz, maxwell, maxwell-n1, osp-k4, osp-r2c, osp-r2c-real
    #[arg(long, value_parser = parse_family)]
    family: BuildFamily,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
    /// maxwell-n1: add the chiral charge B_C.
    #[arg(long)]
    chiral_bc: bool,
    /// maxwell-n1: add the central charge B.
    #[arg(long)]
    central_b: bool,
    /// osp-k4: split M_ab into Lorentz M_mn and P_m = M_m4.
    #[arg(long)]
    ads_decomposed: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ContractArgs {
    #[arg(long = "N")]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "1")]
    alpha: Rational,
    #[arg(long, default_value = "1")]
    gamma: Rational,
    #[arg(long, default_value = "2")]
    c0: Rational,
    #[arg(long, default_value = "2")]
    c5: Rational,
    #[arg(long, default_value = "0")]
    alpha_prime: Rational,
    /// Emit the rescaled algebra before the limit.
    #[arg(long = "finite-R")]
    finite_r: bool,
    /// Override the default scheme: n1-k2, n1-k1, k0, case-a, case-b.
    #[arg(long)]
    scheme: Option<SchemeKind>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InputArgs {
    input: PathBuf,
}

#[derive(Args, Debug)]
struct DiffArgs {
    left: PathBuf,
    right: PathBuf,
}

fn parse_family(s: &str) -> Result<BuildFamily, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = BuildFamily::ALL.iter().map(|f| f.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("maxsusy: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("maxsusy: {e:#}");
            if is_divergence(&e) {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn is_divergence(e: &anyhow::Error) -> bool {
    matches!(
        e.downcast_ref::<ContractionError>(),
        Some(ContractionError::Algebra(AlgebraError::Divergent { .. }))
    )
}

fn dispatch(cli: &Cli) -> Result<Status> {
    match &cli.command {
        Command::Build(a) => cmd_build(a, cli.format),
        Command::Contract(a) => cmd_contract(a, cli.format),
        Command::Verify(a) => cmd_verify(&a.input, cli.format),
        Command::Jacobi(a) => cmd_jacobi(&a.input, cli.format),
        Command::Diff(a) => cmd_diff(a, cli.format),
        Command::DumpGamma => cmd_dump_gamma(cli.format),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn render_algebra(alg: &SuperAlgebra, format: Format) -> String {
    match format {
        Format::Json => json::to_json_string(alg),
        Format::Text => {
            let mut s = format!("{} (dim {})\n", alg.name(), alg.dim());
            for (k, v) in alg.params() {
                s += &format!("  {k} = {v}\n");
            }
            for (i, j, lc) in alg.brackets() {
                s += &format!("[{}, {}] = {}\n", alg.label(i), alg.label(j), alg.render(lc));
            }
            s
        }
    }
}

fn read_algebra(path: &Path) -> Result<SuperAlgebra> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    json::from_json_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_build(a: &BuildArgs, format: Format) -> Result<Status> {
    let p = BuilderParams {
        k: a.k,
        r: a.r,
        with_chiral_bc: a.chiral_bc,
        with_central_b: a.central_b,
        ads_decomposed: a.ads_decomposed,
    };
    let alg = build(a.family, &p)?;
    emit(&render_algebra(&alg, format), a.out.as_deref())?;
    Ok(Status::Ok)
}

fn cmd_contract(a: &ContractArgs, format: Format) -> Result<Status> {
    let p = ContractionParams::new(a.n, a.k)
        .with_alpha(a.alpha)
        .with_gamma(a.gamma)
        .with_c(a.c0, a.c5)
        .with_alpha_prime(a.alpha_prime);
    let kind = a.scheme.unwrap_or_else(|| select_scheme(&p));
    let alg = if a.finite_r {
        finite_r_with(&p, kind)?
    } else {
        let rep = run_with(&p, kind)?;
        if !rep.decoupled.is_empty() {
            eprintln!("decoupled: {}", rep.decoupled.join(", "));
        }
        rep.limit
    };
    emit(&render_algebra(&alg, format), a.out.as_deref())?;
    Ok(Status::Ok)
}

fn cmd_verify(path: &Path, format: Format) -> Result<Status> {
    let alg = read_algebra(path)?;
    let report = verify_algebra(&alg);
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&report)?),
        Format::Text => {
            let mut s = format!("{} (dim {})\n", report.name, report.dim);
            s += &format!("jacobi violations: {}\n", report.jacobi_violations.len());
            for v in &report.jacobi_violations {
                s += &format!("  ({}, {}, {}): {}\n", v.a, v.b, v.c, v.residual);
            }
            s += &format!("dimension violations: {}\n", report.dimension_violations.len());
            for v in &report.dimension_violations {
                s += &format!("  {}: {}\n", v.bracket, v.detail);
            }
            match (&report.tally, &report.tally_error) {
                (Some(t), _) => {
                    s += &format!(
                        "supercharges: standard {}, exotic {}, inert {}, maxwell partner {}\n",
                        t.standard, t.exotic, t.inert, t.maxwell_partner
                    )
                }
                (None, Some(e)) => s += &format!("supercharges: {e}\n"),
                (None, None) => {}
            }
            s += &format!("bosonic sector is Maxwell: {}\n", report.bosonic_maxwell);
            s += &format!("result: {}\n", if report.passed() { "ok" } else { "FAILED" });
            s
        }
    };
    emit(&text, None)?;
    Ok(if report.passed() { Status::Ok } else { Status::Failed })
}

fn cmd_jacobi(path: &Path, format: Format) -> Result<Status> {
    let alg = read_algebra(path)?;
    let violations = super_jacobi_residual(&alg);
    let text = match format {
        Format::Json => pretty(&json!({
            "name": alg.name(),
            "dim": alg.dim(),
            "violations": violations,
        })),
        Format::Text => {
            let mut s = format!("{}: {} violations\n", alg.name(), violations.len());
            for v in &violations {
                s += &format!("({}, {}, {}): {}\n", v.a, v.b, v.c, v.residual);
            }
            s
        }
    };
    emit(&text, None)?;
    Ok(if violations.is_empty() {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn cmd_diff(a: &DiffArgs, format: Format) -> Result<Status> {
    let left = read_algebra(&a.left)?;
    let right = read_algebra(&a.right)?;
    let corr = match Correspondence::by_label(&left, &right) {
        Ok(c) if left.dim() == right.dim() => c,
        Ok(_) => return report_mismatch(&left, &right, format, "generator sets differ"),
        Err(e) => return report_mismatch(&left, &right, format, &e.to_string()),
    };
    let diff = compare(&left, &right, &corr)?;
    let text = match format {
        Format::Json => pretty(&json!({ "entries": diff.entries, "generators_match": true })),
        Format::Text => {
            let mut s = format!("{} differing brackets\n", diff.len());
            for e in &diff.entries {
                s += &format!("{}\n  left:  {}\n  right: {}\n", e.bracket, e.left, e.right);
            }
            s
        }
    };
    emit(&text, None)?;
    Ok(if diff.is_empty() { Status::Ok } else { Status::Failed })
}

fn report_mismatch(left: &SuperAlgebra, right: &SuperAlgebra, format: Format, why: &str) -> Result<Status> {
    let only = |a: &SuperAlgebra, b: &SuperAlgebra| -> Vec<String> {
        a.generators()
            .iter()
            .map(|g| g.label())
            .filter(|l| b.index_of(l).is_none())
            .collect()
    };
    let (ol, or) = (only(left, right), only(right, left));
    let text = match format {
        Format::Json => pretty(&json!({
            "generators_match": false,
            "reason": why,
            "only_left": ol,
            "only_right": or,
        })),
        Format::Text => format!(
            "generators differ: {why}\n  only left: {}\n  only right: {}\n",
            ol.join(" "),
            or.join(" ")
        ),
    };
    emit(&text, None)?;
    Ok(Status::Failed)
}

fn cmd_dump_gamma(format: Format) -> Result<Status> {
    let rep = canonical();
    let cert = check_clifford(rep)?;
    let table = bilinear_symmetry(rep)?;
    let mats = rep.named_matrices();
    let text = match format {
        Format::Json => {
            let m: serde_json::Map<String, serde_json::Value> =
                mats.iter().map(|(n, m)| (n.clone(), json!(m.to_string()))).collect();
            pretty(&json!({
                "identities_checked": cert.identities_checked,
                "matrices": m,
                "bilinears": table.entries,
            }))
        }
        Format::Text => {
            let mut s = String::new();
            for (n, m) in &mats {
                s += &format!("{n}\n{m}\n");
            }
            for (n, sym) in &table.entries {
                s += &format!("{n}: {sym:?}\n");
            }
            s += &format!("{} identities checked\n", cert.identities_checked);
            s
        }
    };
    emit(&text, None)?;
    Ok(Status::Ok)
}
