//! `gclink`: great circle links in the three-sphere, from the command line.
//!
//! Subcommands: `classify`, `census`, `dpq`, `project`, `surface`,
//! `twobridge`. All JSON output carries `"schema": "gclink/1"` and is
//! deterministic for identical arguments and seed. Exit codes: 0 success,
//! 1 domain error (machine-readable JSON on stderr), 2 usage error.

use clap::{Args, Parser, Subcommand};
use gclink_core::classify::{census, classify_with_evidence};
use gclink_core::dpq::{
    axis_schedule, build, render_svg, standard_diagram, DpqParams, SvgOptions,
};
use gclink_core::hopf::{configuration, Handedness, HopfBundle};
use gclink_core::jsonio::{link_from_json_str, link_to_json, to_json_string};
use gclink_core::quat::PureUnit;
use gclink_core::twobridge::{certify_vhaken, equivalent, fibered, Fraction, Slope};
use gclink_core::wedge::{coannular_slopes_params, surface_spec, wedge_census};
use serde_json::{json, Value};
use std::io::Read;

const SCHEMA: &str = "gclink/1";

#[derive(Parser)]
#[command(
    name = "gclink",
    about = "Great circle links in S³: classification, dihedral link families, two-bridge knot certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a great circle link (≤ 5 components) from its JSON form.
    Classify(ClassifyArgs),
    /// Randomized classification census for n-component links.
    Census(CensusArgs),
    /// Build the dihedral link D_{p/q}: geometry, diagram, Gauss codes, SVG.
    Dpq(DpqArgs),
    /// Project a link along a Hopf bundle and report the configuration.
    Project(ProjectArgs),
    /// Wedge surface S_{n..n+2p-1} of D_{p/q}: spec, census, coannular slopes.
    Surface(SurfaceArgs),
    /// Two-bridge knot arithmetic: equivalence, fiberedness, certificates.
    Twobridge(TwobridgeArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Link JSON file; `-` reads standard input.
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Args)]
struct CensusArgs {
    /// Component count, 2..=5.
    #[arg(long)]
    n: usize,
    /// Number of random links to classify.
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    /// RNG seed; sample i uses stream i, independent of thread schedule.
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args)]
struct DpqArgs {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
    /// Output format.
    #[arg(long, value_parser = ["json", "gauss", "svg"], default_value = "json")]
    out: String,
}

#[derive(Args)]
struct ProjectArgs {
    /// Link JSON file; `-` reads standard input.
    #[arg(long, default_value = "-")]
    input: String,
    /// Bundle axis as three comma-separated imaginary components.
    #[arg(long, default_value = "1,0,0")]
    axis: String,
    #[arg(long, value_parser = ["right", "left"], default_value = "right")]
    handedness: String,
    /// Comma-separated indices of components that must be fibers.
    #[arg(long, default_value = "")]
    fibers: String,
}

#[derive(Args)]
struct SurfaceArgs {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
    /// Starting component (w-axis ordering).
    #[arg(long, default_value_t = 0)]
    start: i64,
}

#[derive(Args)]
struct TwobridgeArgs {
    #[command(subcommand)]
    op: TwobridgeOp,
}

#[derive(Subcommand)]
enum TwobridgeOp {
    /// Are K_{p1/q1} and K_{p2/q2} the same knot?
    Equiv { f1: String, f2: String },
    /// Is K_{p/q} fibered (all-±2 continued fraction)?
    Fibered { f: String },
    /// Certify a Dehn filling of K_{p/q} as virtually Haken (modulo Λ).
    Certify {
        f: String,
        slope: String,
        /// Emit the full JSON certificate instead of one line.
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    // Census parallelism honors GCLINK_THREADS; determinism is per-sample
    // seeded so the thread count never changes output.
    if let Ok(threads) = std::env::var("GCLINK_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
        }
        Err(e) => {
            let doc = json!({
                "schema": SCHEMA,
                "error": e.to_string(),
                "kind": error_kind(&e),
            });
            eprintln!("{doc}");
            std::process::exit(1);
        }
    }
}

fn error_kind(e: &gclink_core::Error) -> &'static str {
    use gclink_core::Error::*;
    match e {
        NotOrthonormal(_) => "not_orthonormal",
        NotTransverse { .. } => "not_transverse",
        BadLinking(_) => "bad_linking",
        TangentCircles => "tangent_circles",
        DegenerateTriple { .. } => "degenerate_triple",
        UnsupportedSize(_) => "unsupported_size",
        IndeterminateConfiguration(_) => "indeterminate_configuration",
        InvalidParams(_) => "invalid_params",
        RangeError(_) => "range_error",
        PremiseFailure(_) => "premise_failure",
        OddNumerator => "odd_numerator",
        InvalidFraction(_) => "invalid_fraction",
        InvalidInput(_) => "invalid_input",
    }
}

fn run(cli: Cli) -> gclink_core::Result<String> {
    match cli.command {
        Command::Classify(args) => cmd_classify(&args),
        Command::Census(args) => cmd_census(&args),
        Command::Dpq(args) => cmd_dpq(&args),
        Command::Project(args) => cmd_project(&args),
        Command::Surface(args) => cmd_surface(&args),
        Command::Twobridge(args) => cmd_twobridge(&args),
    }
}

fn read_input(path: &str) -> gclink_core::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| gclink_core::Error::InvalidInput(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| gclink_core::Error::InvalidInput(format!("{path}: {e}")))
    }
}

fn cmd_classify(args: &ClassifyArgs) -> gclink_core::Result<String> {
    let link = link_from_json_str(&read_input(&args.input)?)?;
    let (class, evidence) = classify_with_evidence(&link)?;
    let doc = json!({
        "schema": SCHEMA,
        "class": class.to_string(),
        "components": link.len(),
        "evidence": {
            "triple": evidence.triple,
            "handedness": evidence.handedness,
            "configuration": evidence.configuration,
        },
    });
    Ok(format!("{}\n", to_json_string(&doc)?))
}

fn cmd_census(args: &CensusArgs) -> gclink_core::Result<String> {
    let result = census(args.n, args.samples, args.seed)?;
    let doc = json!({
        "schema": SCHEMA,
        "seed": result.seed,
        "n": result.n,
        "samples": result.samples,
        "distinct_classes": result.distinct_classes(),
        "indeterminate": result.indeterminate,
        "classes": result
            .classes
            .iter()
            .map(|(class, count)| json!({"class": class.to_string(), "count": count}))
            .collect::<Vec<_>>(),
    });
    Ok(format!("{}\n", to_json_string(&doc)?))
}

fn cmd_dpq(args: &DpqArgs) -> gclink_core::Result<String> {
    let params = DpqParams::new(args.p, args.q)?;
    match args.out.as_str() {
        "svg" => {
            let diagram = standard_diagram(&params);
            Ok(render_svg(&diagram, &SvgOptions::default()))
        }
        "gauss" => {
            let diagram = standard_diagram(&params);
            Ok(diagram.gauss_code_text())
        }
        _ => {
            let link = build(&params);
            let schedule = axis_schedule(&params);
            let diagram = standard_diagram(&params);
            let mut doc = link_to_json(&link);
            let obj = doc.as_object_mut().expect("link JSON is an object");
            obj.insert("schema".into(), Value::String(SCHEMA.into()));
            obj.insert(
                "params".into(),
                json!({"p": params.p, "q": params.q, "original_p": params.original_p}),
            );
            obj.insert(
                "axis_schedule".into(),
                json!({
                    "units": "pi/q",
                    "z_pairs": schedule.z_pairs,
                    "w_pairs": schedule.w_pairs,
                    "w_label_to_orbit": schedule.w_label_to_orbit,
                }),
            );
            obj.insert(
                "diagram".into(),
                serde_json::to_value(&diagram)
                    .map_err(|e| gclink_core::Error::InvalidInput(e.to_string()))?,
            );
            obj.insert(
                "gauss_codes".into(),
                Value::String(diagram.gauss_code_text()),
            );
            Ok(format!("{}\n", to_json_string(&doc)?))
        }
    }
}

fn cmd_project(args: &ProjectArgs) -> gclink_core::Result<String> {
    let link = link_from_json_str(&read_input(&args.input)?)?;
    let axis_parts: Vec<f64> = args
        .axis
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| gclink_core::Error::InvalidInput(format!("bad axis: {e}")))?;
    if axis_parts.len() != 3 {
        return Err(gclink_core::Error::InvalidInput(
            "axis needs exactly three components".into(),
        ));
    }
    let norm = (axis_parts.iter().map(|x| x * x).sum::<f64>()).sqrt();
    if norm < 1e-12 {
        return Err(gclink_core::Error::InvalidInput("axis must be nonzero".into()));
    }
    let axis = PureUnit::from_imag_unit([
        axis_parts[0] / norm,
        axis_parts[1] / norm,
        axis_parts[2] / norm,
    ])?;
    let bundle = match args.handedness.as_str() {
        "left" => HopfBundle { axis, handedness: Handedness::Left },
        _ => HopfBundle { axis, handedness: Handedness::Right },
    };
    let fibers: Vec<usize> = if args.fibers.is_empty() {
        Vec::new()
    } else {
        args.fibers
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| gclink_core::Error::InvalidInput(format!("bad fiber list: {e}")))?
    };
    let cfg = configuration(&link, &bundle, &fibers)?;
    let doc = json!({
        "schema": SCHEMA,
        "axis": axis.imag(),
        "handedness": args.handedness,
        "configuration": cfg,
    });
    Ok(format!("{}\n", to_json_string(&doc)?))
}

fn cmd_surface(args: &SurfaceArgs) -> gclink_core::Result<String> {
    let params = DpqParams::new(args.p, args.q)?;
    let spec = surface_spec(&params, args.start)?;
    let census = wedge_census(&params).ok();
    let coannular = coannular_slopes_params(&params).ok();
    let doc = json!({
        "schema": SCHEMA,
        "surface": spec,
        "wedge_census": census,
        "coannular": coannular,
    });
    Ok(format!("{}\n", to_json_string(&doc)?))
}

fn parse_fraction(s: &str) -> gclink_core::Result<Fraction> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| gclink_core::Error::InvalidFraction(format!("expected P/Q, got {s}")))?;
    let p = p
        .trim()
        .parse::<i64>()
        .map_err(|e| gclink_core::Error::InvalidFraction(e.to_string()))?;
    let q = q
        .trim()
        .parse::<i64>()
        .map_err(|e| gclink_core::Error::InvalidFraction(e.to_string()))?;
    Fraction::new(p, q)
}

fn parse_slope(s: &str) -> gclink_core::Result<Slope> {
    let (m, l) = s
        .split_once('/')
        .ok_or_else(|| gclink_core::Error::InvalidFraction(format!("expected M/L, got {s}")))?;
    let m = m
        .trim()
        .parse::<i64>()
        .map_err(|e| gclink_core::Error::InvalidFraction(e.to_string()))?;
    let l = l
        .trim()
        .parse::<i64>()
        .map_err(|e| gclink_core::Error::InvalidFraction(e.to_string()))?;
    Slope::new(m, l)
}

fn cmd_twobridge(args: &TwobridgeArgs) -> gclink_core::Result<String> {
    match &args.op {
        TwobridgeOp::Equiv { f1, f2 } => {
            let a = parse_fraction(f1)?;
            let b = parse_fraction(f2)?;
            Ok(format!("{}\n", equivalent(&a, &b)))
        }
        TwobridgeOp::Fibered { f } => {
            let f = parse_fraction(f)?;
            Ok(format!("{}\n", fibered(&f)))
        }
        TwobridgeOp::Certify { f, slope, json: as_json } => {
            let f = parse_fraction(f)?;
            let s = parse_slope(slope)?;
            let cert = certify_vhaken(&f, &s);
            if *as_json {
                let doc = json!({
                    "schema": SCHEMA,
                    "certificate": cert,
                    "lambda_caveat_text": if cert.lambda_caveat {
                        Some(gclink_core::twobridge::LAMBDA_CAVEAT)
                    } else {
                        None
                    },
                });
                Ok(format!("{}\n", to_json_string(&doc)?))
            } else {
                use gclink_core::twobridge::CertStatus;
                let line = match &cert.status {
                    CertStatus::CertifiedModuloLambda => format!(
                        "certified_modulo_lambda: {} filled along {} (lifted {}, delta {} and {})",
                        cert.input,
                        cert.filling,
                        cert.evidence.lifted_slope.expect("lift recorded on success"),
                        cert.evidence.delta_plus.expect("delta recorded"),
                        cert.evidence.delta_minus.expect("delta recorded"),
                    ),
                    CertStatus::NotCertified(reason) => {
                        format!("not_certified: {:?}", reason).to_lowercase()
                    }
                };
                Ok(format!("{line}\n"))
            }
        }
    }
}
