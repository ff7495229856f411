//! Command-line front end.
//!
//! Exit codes: `0` success / verified positive, `1` verified negative
//! (a false predicate, a certified nonexistence, a golden-table
//! mismatch), `2` input or usage error. The `FILIFORM_MAX_N` environment
//! variable (default 24) caps the dimension of every algebra the CLI
//! touches; library callers are not capped.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use filiform::catalog;
use filiform::cohomology::{cohomology, cohomology_block, Coefficients, CohomologyReport};
use filiform::deformation::{
    canonicalize, deformation_residual, massey_obstruction, moduli_deformation,
    moduli_normal_form, orbit_equivalent, tangent_dims, Deformation, ModuliPoint, OrbitAnswer,
};
use filiform::exactla::{format_rational, parse_rational, Rational};
use filiform::io::{
    AlgebraJson, CochainJson, CohomologyReportJson, DeformationJson, ModuliPointJson, OneFormJson,
    TwoFormJson,
};
use filiform::liealg::LieAlgebra;
use filiform::report::ReportBundle;
use filiform::symplectic::{
    central_extension, contact_check, is_closed, nondegenerate, symplectic_decision,
    SymplecticDecision, DEFAULT_TRIALS,
};
use filiform::{dimension_cap, Error, Result};

#[derive(Parser)]
#[command(
    name = "filiform",
    version,
    about = "Exact-arithmetic engine for filiform Lie algebra deformations, \
             cohomology, and symplectic structures"
)]
struct Cli {
    /// Seed for every randomized search (reproducible by construction).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on algebra files.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCmd,
    },
    /// Emit a catalog algebra or cocycle as JSON.
    Catalog(CatalogArgs),
    /// Per-weight cohomology table of an algebra.
    Cohomology(CohomologyArgs),
    /// Deformations of V(n): residuals, canonicalization, moduli orbits.
    Deform {
        #[command(subcommand)]
        command: DeformCmd,
    },
    /// Symplectic existence decisions and verification.
    Symplectic {
        #[command(subcommand)]
        command: SymplecticCmd,
    },
    /// One-dimensional central extension by a closed 2-form.
    Extend(ExtendArgs),
    /// Contact-form test on an odd-dimensional algebra.
    Contact {
        /// Algebra JSON file.
        algebra: PathBuf,
        /// 1-form JSON file ({"n", "terms": [{"i", "c"}]}).
        oneform: PathBuf,
    },
    /// Regenerate the golden tables and diff them against the committed
    /// versions (exit 1 on the first divergent cell).
    PaperTables(PaperTablesArgs),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Check the Jacobi identity; exit 0 iff the residual is empty.
    Verify {
        /// Algebra JSON file.
        file: PathBuf,
    },
}

#[derive(Args)]
struct CatalogArgs {
    /// One of: m0, m1, m2, v, g8, g10, gx, psi.
    name: String,
    /// Dimension for m0/m1/m2/v/gx.
    #[arg(long)]
    dim: Option<usize>,
    /// Rational parameter α for g8/g10 (e.g. "1/3").
    #[arg(long)]
    param: Option<String>,
    /// Four rational coordinates x1,x2,x3,x4 for gx.
    #[arg(long, value_delimiter = ',')]
    x: Option<Vec<String>>,
    /// Dimension n for psi.
    #[arg(long)]
    n: Option<usize>,
    /// Level l ∈ 7..=11 for psi.
    #[arg(long)]
    l: Option<usize>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CohomologyArgs {
    /// Algebra JSON file.
    algebra: PathBuf,
    /// Cochain degree q.
    #[arg(long)]
    deg: usize,
    /// Coefficient module.
    #[arg(long, default_value = "adjoint")]
    coeff: String,
    /// Restrict to a single weight block.
    #[arg(long)]
    weight: Option<i64>,
    /// Print representative cocycles.
    #[arg(long)]
    reps: bool,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum DeformCmd {
    /// Residual of the deformation equation (exit 1 when nonzero).
    Residual {
        /// Deformation JSON or algebra JSON (extracted against V(dim)).
        file: PathBuf,
    },
    /// Canonical five-coordinate moduli point of a deformation.
    Canonicalize {
        /// Deformation JSON or algebra JSON (extracted against V(dim)).
        file: PathBuf,
    },
    /// Weighted-orbit equivalence of two moduli points (exit 1 when not).
    OrbitEq {
        /// First moduli point JSON.
        p: PathBuf,
        /// Second moduli point JSON.
        q: PathBuf,
    },
    /// Canonical orbit representative of a moduli point.
    NormalForm {
        /// Moduli point JSON.
        p: PathBuf,
    },
    /// Kernel, orbit, cocycle, and stabilizer dimensions at a point.
    TangentDims {
        /// Deformation JSON or moduli point JSON.
        file: PathBuf,
    },
    /// Massey obstruction class of a partial deformation at weight k.
    Massey {
        /// Deformation JSON.
        file: PathBuf,
        /// Weight of the obstruction.
        #[arg(long)]
        k: i64,
    },
}

#[derive(Subcommand)]
enum SymplecticCmd {
    /// Decide symplectic existence: witness, certificate, or undecided.
    Decide {
        /// Algebra JSON file.
        algebra: PathBuf,
        /// Override the global seed for the witness search.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random trials before answering Undecided.
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Verify that a 2-form is closed and nondegenerate (exit 1 if not).
    Verify {
        /// Algebra JSON file.
        algebra: PathBuf,
        /// 2-form JSON file ({"n", "terms": [{"i", "j", "c"}]}).
        form: PathBuf,
    },
}

#[derive(Args)]
struct ExtendArgs {
    /// Algebra JSON file.
    algebra: PathBuf,
    /// Closed 2-form JSON file.
    form: PathBuf,
    /// Output file for the extension algebra.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct PaperTablesArgs {
    /// Golden directory (defaults to the crate's committed tables).
    #[arg(long)]
    dir: Option<PathBuf>,
    /// Regenerate the golden files instead of diffing.
    #[arg(long)]
    update: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn check_cap(n: usize) -> Result<()> {
    let cap = dimension_cap();
    if n > cap {
        return Err(Error::UnsupportedDimension(format!(
            "dimension {n} exceeds the FILIFORM_MAX_N cap of {cap}"
        )));
    }
    Ok(())
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::InvalidInput(format!("cannot read {}: {e}", path.display()))
    })?;
    Ok(serde_json::from_str(&text)?)
}

fn load_algebra(path: &Path) -> Result<LieAlgebra> {
    let j: AlgebraJson = read_json(path)?;
    check_cap(j.dim)?;
    j.to_algebra()
}

/// Files accepted where a deformation is expected: a deformation file, a
/// moduli point, or a deformed algebra to extract against `V(dim)`.
#[derive(Deserialize)]
#[serde(untagged)]
enum DeformationInput {
    Deformation(DeformationJson),
    Point(ModuliPointJson),
    Algebra(AlgebraJson),
}

fn load_deformation(path: &Path) -> Result<Deformation> {
    match read_json(path)? {
        DeformationInput::Deformation(d) => {
            check_cap(d.n)?;
            d.to_deformation()
        }
        DeformationInput::Point(p) => {
            check_cap(p.n)?;
            let point = p.to_point()?;
            let g0 = catalog::v(point.n())?;
            Deformation::from_cochain(&g0, &moduli_deformation(point.n(), point.x())?)
        }
        DeformationInput::Algebra(a) => {
            check_cap(a.dim)?;
            let g = a.to_algebra()?;
            let g0 = catalog::v(g.n())?;
            filiform::deformation::extract_deformation(&g, &g0)
        }
    }
}

fn load_point(path: &Path) -> Result<ModuliPoint> {
    let j: ModuliPointJson = read_json(path)?;
    check_cap(j.n)?;
    j.to_point()
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Algebra { command } => match command {
            AlgebraCmd::Verify { file } => algebra_verify(&file),
        },
        Command::Catalog(args) => catalog_cmd(&args),
        Command::Cohomology(args) => cohomology_cmd(&args),
        Command::Deform { command } => deform_cmd(command),
        Command::Symplectic { command } => symplectic_cmd(command, cli.seed),
        Command::Extend(args) => extend_cmd(&args),
        Command::Contact { algebra, oneform } => contact_cmd(&algebra, &oneform),
        Command::PaperTables(args) => paper_tables_cmd(&args, cli.seed),
    }
}

fn algebra_verify(file: &Path) -> Result<u8> {
    let g = load_algebra(file)?;
    let residual = g.jacobi_residual();
    if residual.is_empty() {
        println!(
            "Jacobi identity holds for {} (dim {}, flavor {})",
            g.name(),
            g.n(),
            g.flavor()
        );
        return Ok(0);
    }
    println!(
        "Jacobi identity fails for {} at {} triple(s):",
        g.name(),
        residual.len()
    );
    for ((i, j, k), v) in &residual {
        let terms: Vec<String> = v
            .iter()
            .map(|(t, c)| format!("{} e{t}", format_rational(c)))
            .collect();
        println!("  (e{i}, e{j}, e{k}): {}", terms.join(" + "));
    }
    Ok(1)
}

fn catalog_cmd(args: &CatalogArgs) -> Result<u8> {
    if args.name == "psi" {
        let n = args
            .n
            .ok_or_else(|| Error::InvalidInput("psi requires --n".into()))?;
        let l = args
            .l
            .ok_or_else(|| Error::InvalidInput("psi requires --l".into()))?;
        check_cap(n)?;
        let c = catalog::psi(n, l)?;
        let text = serde_json::to_string_pretty(&CochainJson::from_cochain(&c))?;
        emit(args.out.as_deref(), &text)?;
        return Ok(0);
    }
    if let Some(dim) = args.dim {
        check_cap(dim)?;
    }
    let alpha = match &args.param {
        Some(s) => Some(parse_rational(s)?),
        None => None,
    };
    let x = match &args.x {
        Some(parts) => {
            if parts.len() != 4 {
                return Err(Error::InvalidInput(format!(
                    "--x needs exactly 4 comma-separated rationals, got {}",
                    parts.len()
                )));
            }
            let mut coords: [Rational; 4] = Default::default();
            for (slot, s) in coords.iter_mut().zip(parts) {
                *slot = parse_rational(s)?;
            }
            Some(coords)
        }
        None => None,
    };
    let g = catalog::algebra_by_name(&args.name, args.dim, alpha.as_ref(), x.as_ref())?;
    let text = serde_json::to_string_pretty(&AlgebraJson::from_algebra(&g))?;
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

fn parse_coefficients(s: &str) -> Result<Coefficients> {
    match s {
        "trivial" => Ok(Coefficients::Trivial),
        "adjoint" => Ok(Coefficients::Adjoint),
        other => Err(Error::InvalidInput(format!(
            "unknown coefficients {other:?}; expected trivial or adjoint"
        ))),
    }
}

fn cohomology_cmd(args: &CohomologyArgs) -> Result<u8> {
    let g = load_algebra(&args.algebra)?;
    let coeff = parse_coefficients(&args.coeff)?;
    let report = match args.weight {
        Some(mu) => CohomologyReport {
            degree: args.deg,
            coefficients: coeff,
            weights: vec![cohomology_block(&g, args.deg, mu, coeff)?],
        },
        None => cohomology(&g, args.deg, coeff)?,
    };
    if args.json {
        let j = CohomologyReportJson::from_report(g.name(), &report, args.reps);
        println!("{}", serde_json::to_string_pretty(&j)?);
        return Ok(0);
    }
    println!(
        "H^{} of {} with {} coefficients",
        args.deg, g.name(), args.coeff
    );
    println!("{:>7}  {:>6}  {:>6}  {:>6}  {:>6}", "weight", "dim C", "dim Z", "dim B", "dim H");
    for w in &report.weights {
        let label = match w.weight {
            Some(mu) => mu.to_string(),
            None => "all".to_string(),
        };
        println!(
            "{:>7}  {:>6}  {:>6}  {:>6}  {:>6}",
            label, w.dim_cochains, w.dim_cocycles, w.dim_coboundaries, w.dim_h
        );
        if args.reps {
            for r in &w.representatives {
                println!("         {r}");
            }
        }
    }
    println!("total dim H = {}", report.total_h());
    Ok(0)
}

fn point_json(p: &ModuliPoint) -> Result<String> {
    Ok(serde_json::to_string_pretty(&ModuliPointJson::from_point(p))?)
}

fn deform_cmd(command: DeformCmd) -> Result<u8> {
    match command {
        DeformCmd::Residual { file } => {
            let d = load_deformation(&file)?;
            let g0 = catalog::v(d.n())?;
            let residual = deformation_residual(&g0, &d)?;
            if residual.is_zero() {
                println!("residual = 0 (genuine deformation of {})", g0.name());
                Ok(0)
            } else {
                let weights: Vec<i64> = residual
                    .weight_components(&g0)
                    .keys()
                    .copied()
                    .collect();
                println!(
                    "residual is nonzero in weight(s) {:?}: {residual}",
                    weights
                );
                Ok(1)
            }
        }
        DeformCmd::Canonicalize { file } => {
            let d = load_deformation(&file)?;
            let (point, trail) = canonicalize(&d)?;
            eprintln!(
                "canonical after {} basis change step(s)",
                trail.len()
            );
            println!("{}", point_json(&point)?);
            Ok(0)
        }
        DeformCmd::OrbitEq { p, q } => {
            let p = load_point(&p)?;
            let q = load_point(&q)?;
            match orbit_equivalent(&p, &q)? {
                OrbitAnswer::Any => {
                    println!("equivalent for every nonzero rational alpha");
                    Ok(0)
                }
                OrbitAnswer::Scalars(alphas) => {
                    let list: Vec<String> = alphas.iter().map(format_rational).collect();
                    println!("equivalent for alpha in [{}]", list.join(", "));
                    Ok(0)
                }
                OrbitAnswer::NotEquivalent => {
                    println!("not equivalent");
                    Ok(1)
                }
            }
        }
        DeformCmd::NormalForm { p } => {
            let p = load_point(&p)?;
            println!("{}", point_json(&moduli_normal_form(&p)?)?);
            Ok(0)
        }
        DeformCmd::TangentDims { file } => {
            let d = load_deformation(&file)?;
            let g0 = catalog::v(d.n())?;
            let dims = tangent_dims(&g0, &d.total())?;
            println!("kernel dim on positive-weight 1-cochains = {}", dims.kernel_c1_pos);
            println!("orbit dimension                          = {}", dims.orbit_dim);
            println!("cocycle dim on positive-weight 2-cochains = {}", dims.z2_pos);
            println!("stabilizer dimension                     = {}", dims.stabilizer_dim);
            Ok(0)
        }
        DeformCmd::Massey { file, k } => {
            let d = load_deformation(&file)?;
            let g0 = catalog::v(d.n())?;
            let ob = massey_obstruction(&g0, &d, k)?;
            let coords: Vec<String> = ob.coordinates().iter().map(format_rational).collect();
            println!(
                "weight-{} obstruction class: {} (coordinates [{}])",
                ob.weight(),
                if ob.is_zero() { "zero" } else { "nonzero" },
                coords.join(", ")
            );
            Ok(0)
        }
    }
}

fn symplectic_cmd(command: SymplecticCmd, global_seed: u64) -> Result<u8> {
    match command {
        SymplecticCmd::Decide { algebra, seed, trials } => {
            let g = load_algebra(&algebra)?;
            match symplectic_decision(&g, seed.unwrap_or(global_seed), trials)? {
                SymplecticDecision::Exists(w) => {
                    println!("symplectic form exists:");
                    println!("{}", serde_json::to_string_pretty(&TwoFormJson::from_form(&w)?)?);
                    Ok(0)
                }
                SymplecticDecision::CertifiedNone(cert) => {
                    println!("no symplectic form exists: {cert}");
                    Ok(1)
                }
                SymplecticDecision::Undecided { trials } => {
                    println!("undecided after {trials} random trials");
                    Ok(1)
                }
            }
        }
        SymplecticCmd::Verify { algebra, form } => {
            let g = load_algebra(&algebra)?;
            let omega: TwoFormJson = read_json(&form)?;
            let omega = omega.to_form()?;
            let closed = is_closed(&g, &omega)?;
            let nondeg = nondegenerate(&g, &omega)?;
            println!("closed: {closed}");
            println!("nondegenerate: {nondeg}");
            Ok(if closed && nondeg { 0 } else { 1 })
        }
    }
}

fn extend_cmd(args: &ExtendArgs) -> Result<u8> {
    let g = load_algebra(&args.algebra)?;
    check_cap(g.n() + 1)?;
    let form: TwoFormJson = read_json(&args.form)?;
    let ext = central_extension(&g, &form.to_form()?)?;
    let text = serde_json::to_string_pretty(&AlgebraJson::from_algebra(&ext))?;
    std::fs::write(&args.out, text)?;
    println!(
        "wrote {} (dim {}, flavor {}) to {}",
        ext.name(),
        ext.n(),
        ext.flavor(),
        args.out.display()
    );
    Ok(0)
}

fn contact_cmd(algebra: &Path, oneform: &Path) -> Result<u8> {
    let g = load_algebra(algebra)?;
    let theta: OneFormJson = read_json(oneform)?;
    let theta = theta.to_form()?;
    if contact_check(&g, &theta)? {
        println!("contact form: theta wedge (d theta)^k is nonzero");
        Ok(0)
    } else {
        println!("not a contact form");
        Ok(1)
    }
}

fn paper_tables_cmd(args: &PaperTablesArgs, seed: u64) -> Result<u8> {
    let dir = args
        .dir
        .clone()
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"));
    let bundle = ReportBundle::paper_tables(seed)?;
    if args.update {
        bundle.write_to(&dir)?;
        println!("wrote {} golden sections to {}", bundle.sections().count(), dir.display());
        return Ok(0);
    }
    let diffs = bundle.check_against(&dir)?;
    if diffs.is_empty() {
        println!("all golden tables match ({})", dir.display());
        Ok(0)
    } else {
        for d in &diffs {
            println!("mismatch at {d}");
        }
        Ok(1)
    }
}
