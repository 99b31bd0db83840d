//! Command-line front end for the `virasoro-o` library.

use std::ffi::OsString;
use std::io::Write;

use num_bigint::BigInt;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use virasoro_o::block::{classify, BlockDescriptor, BlockWeight, Boundary, Branch, WeightHC};
use virasoro_o::characters::{simple_character_bgg, verma_character};
use virasoro_o::homology::{
    bgg_resolution, chain_presentation, coideal, emit_dot, ext1_quiver, ext_label, ext_simple_simple, ext_verma_simple,
    nplus_cohomology, truncate, ExtEntry, ExtKind, ExtTable,
};
use virasoro_o::oracle::{build_algebra, ext_table_oracle, hilbert_koszul_identity, koszul_check};
use virasoro_o::{verify, Error};

#[derive(Parser, Debug)]
#[command(name = "virasoro-o", version, about = "Blocks, resolutions and Ext for Virasoro category O")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct WeightArgs {
    /// Conformal weight, as an exact rational `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    h: String,
    /// Central charge, as an exact rational `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value_t = 16)]
    window: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the block containing `(h, c)`.
    Classify {
        #[command(flatten)]
        w: WeightArgs,
    },
    /// BGG resolution of the simple module at a given level and branch.
    Bgg {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        level: i64,
        #[arg(long, default_value = "plain")]
        branch: String,
        #[arg(long, default_value_t = 6)]
        max_length: u64,
    },
    /// Weights of n+-cohomology of L(h, c) in degree k.
    Cohomology {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long)]
        k: u64,
    },
    /// A single Ext dimension between weights addressed as `level/branch`.
    Ext {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        degree: u64,
    },
    /// The Ext^1-quiver of a finite block or of a finite piece of an infinite one.
    Quiver {
        #[command(flatten)]
        w: WeightArgs,
        /// Keep the levels within this distance of the extremal weight.
        #[arg(long)]
        truncate: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build the chain algebra and its Ext table by brute force.
    Oracle {
        #[arg(long)]
        chain: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Koszulity and the Hilbert series identity for the chain algebra.
    Koszul {
        #[arg(long)]
        chain: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Character of L(h, c) up to `q^cutoff`, relative to `h`.
    Char {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long)]
        cutoff: usize,
    },
    /// Run the acceptance battery.
    Verify,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Ml,
    Ll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

enum Failure {
    Parse(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParseRational(_) => Failure::Parse(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

enum Output {
    Json(Value),
    Text(String),
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            report(err, "parse-error", &e.to_string());
            return 2;
        }
    };
    let (code, result) = match execute(cli.command) {
        Ok((code, o)) => (code, o),
        Err(Failure::Parse(msg)) => {
            report(err, "parse-error", &msg);
            return 2;
        }
        Err(Failure::Domain(e)) => {
            report(err, e.tag(), &e.to_string());
            return 1;
        }
    };
    let _ = match result {
        Output::Json(v) => writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable")),
        Output::Text(s) => write!(out, "{s}"),
    };
    code
}

fn report(err: &mut dyn Write, tag: &str, detail: &str) {
    let _ = writeln!(err, "{}", json!({ "error": tag, "detail": detail.trim_end() }));
}

fn block_of(w: &WeightArgs) -> Result<BlockDescriptor, Failure> {
    let hc = WeightHC::parse(&w.h, &w.c)?;
    Ok(classify(&hc, w.window)?)
}

/// The weight of the block at offset 0, i.e. the one given on the command line.
fn base_weight(b: &BlockDescriptor) -> Result<BlockWeight, Failure> {
    b.by_offset(&BigInt::from(0))
        .cloned()
        .ok_or_else(|| Failure::Domain(Error::WindowExhausted(format!("{} is outside the window", b.base))))
}

fn parse_address(b: &BlockDescriptor, text: &str) -> Result<BlockWeight, Failure> {
    let bad = || Failure::Parse(format!("expected level/branch, got {text:?}"));
    let (level, branch) = text.split_once('/').ok_or_else(bad)?;
    let level: i64 = level.parse().map_err(|_| bad())?;
    let branch = Branch::parse(branch).ok_or_else(bad)?;
    Ok(b.find(level, branch)?)
}

fn execute(cmd: Command) -> Result<(i32, Output), Failure> {
    let out = match cmd {
        Command::Classify { w } => Output::Json(block_of(&w)?.to_json()),
        Command::Bgg { w, level, branch, max_length } => {
            let b = block_of(&w)?;
            let branch = Branch::parse(&branch).ok_or_else(|| Failure::Parse(format!("unknown branch {branch:?}")))?;
            let lambda = b.find(level, branch)?;
            Output::Json(bgg_resolution(&b, &lambda, max_length)?.to_json())
        }
        Command::Cohomology { w, k } => {
            let b = block_of(&w)?;
            let mu = base_weight(&b)?;
            let ws = nplus_cohomology(&b, &mu, k)?;
            Output::Json(json!({
                "weight": mu.to_string(),
                "k": k,
                "weights": ws.iter().map(weight_json).collect::<Vec<_>>(),
            }))
        }
        Command::Ext { w, kind, from, to, degree } => {
            let b = block_of(&w)?;
            let (lambda, nu) = (parse_address(&b, &from)?, parse_address(&b, &to)?);
            let kind = match kind {
                KindArg::Ml => ExtKind::VermaToSimple,
                KindArg::Ll => ExtKind::SimpleToSimple,
            };
            let dim = match kind {
                ExtKind::VermaToSimple => ext_verma_simple(&b, &lambda, &nu, degree)?,
                ExtKind::SimpleToSimple => ext_simple_simple(&b, &lambda, &nu, degree)?,
            };
            let table = ExtTable {
                kind,
                entries: vec![ExtEntry { lambda: ext_label(&lambda), nu: ext_label(&nu), n: degree, dim }],
            };
            Output::Json(serde_json::to_value(&table).expect("serializable"))
        }
        Command::Quiver { w, truncate: cut, format } => {
            let b = block_of(&w)?;
            let finite = match (cut, b.boundary) {
                (None, _) | (Some(_), Boundary::Finite) => b,
                (Some(n), Boundary::HasMax) => coideal(&b, n)?.block,
                (Some(n), Boundary::HasMin) => {
                    let top = b.find(-(n as i64), Branch::Plain)?;
                    truncate(&b, &top)?
                }
            };
            let q = ext1_quiver(&finite)?;
            match format {
                Format::Json => Output::Json(q.to_json()),
                Format::Dot => Output::Text(emit_dot(&q)),
            }
        }
        Command::Oracle { chain, max_degree } => {
            let alg = build_algebra(&chain_presentation(chain, &[]))?;
            let mut v = alg.to_json();
            v["ext"] = serde_json::to_value(ext_table_oracle(&alg, max_degree)).expect("serializable");
            Output::Json(v)
        }
        Command::Koszul { chain, max_degree } => {
            let alg = build_algebra(&chain_presentation(chain, &[]))?;
            Output::Json(json!({
                "koszul": koszul_check(&alg, max_degree),
                "hilbert_identity": hilbert_koszul_identity(&alg, max_degree),
            }))
        }
        Command::Char { w, cutoff } => {
            let b = block_of(&w)?;
            let lambda = base_weight(&b)?;
            let ch = simple_character_bgg(&b, &lambda, cutoff)?;
            let mut v = ch.to_json(&lambda.offset);
            v["verma"] = json!(verma_character(cutoff).coeffs.iter().map(ToString::to_string).collect::<Vec<_>>());
            Output::Json(v)
        }
        Command::Verify => {
            let results = verify::run_all();
            let code = if results.iter().all(|r| r.passed) { 0 } else { 1 };
            return Ok((code, Output::Json(serde_json::to_value(&results).expect("serializable"))));
        }
    };
    Ok((0, out))
}

fn weight_json(w: &BlockWeight) -> Value {
    json!({ "offset": w.offset.to_string(), "level": w.level, "branch": w.branch.as_str() })
}
