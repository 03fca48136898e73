//! Command-line frontend: classify, census, verify, construct, catalog.
//!
//! Every command builds one JSON value (with a top-level `"schema": 1` and a
//! `"kind"` discriminator); CSV and table output are derived from that value,
//! so `catalog` can re-render a stored JSON file through the same path.
//!
//! Exit codes: 0 success, 1 failed verdict / empty construction, 2 parse or
//! usage error, 3 bound exceeded, 4 precondition violated.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::construct::{build_chain, find_seed, root_chain_check, ChainRecord, MemberStatus};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::knormal::Classifier;
use crate::num;
use crate::serialize::{
    element_text, field_json, parse_element, parse_poly, poly_hex, poly_text,
};
use crate::theorems::{
    census, compare_with_stored_claims, verify_affine_invariance, verify_trace_n2,
    verify_trace_prime_n, ClaimComparison, Verdict, VerdictReport,
};
use crate::Config;

#[derive(Parser)]
#[command(
    name = "knf",
    version,
    about = "k-normal element classification, exhaustive claim verification, and N1-polynomial chain construction over finite fields"
)]
struct Cli {
    /// Seed for all randomized internals.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Census bound (max field cardinality); overrides the KNF_BOUND env var.
    #[arg(long, global = true)]
    bound: Option<u128>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimId {
    #[value(name = "thm3.2")]
    AffineInvariance,
    #[value(name = "thm3.3")]
    TraceN2,
    #[value(name = "thm3.4")]
    TracePrimeN,
    #[value(name = "cor3.5")]
    ExistenceTable,
    #[value(name = "notation3.6")]
    NamedFields,
    #[value(name = "all")]
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one element of F_{q^n} by k-normality.
    Classify {
        #[command(flatten)]
        field: FieldSpec,
        /// Element as comma-separated coefficients over F_q, low to high
        /// (extension-field coefficients as slash-separated base tuples).
        #[arg(long)]
        elem: String,
    },
    /// Exhaustive per-k census of F_{q^n}.
    Census {
        #[command(flatten)]
        field: FieldSpec,
    },
    /// Brute-force verify a claim; exit 0 on PASS/agrees, 1 on FAIL/disagrees.
    Verify {
        claim: ClaimId,
        /// Base field size q (prime power) where the claim needs one.
        #[arg(long)]
        q: Option<u64>,
        /// Extension degree n where the claim needs one.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Search F_{2^m} for chain seeds and build verified N1-polynomial chains.
    Construct {
        /// Base field is F_{2^m}.
        #[arg(long)]
        m: usize,
        /// Seed polynomial degree (must be even).
        #[arg(long)]
        n: usize,
        /// Number of transform steps per chain.
        #[arg(long, default_value_t = 2)]
        max_u: usize,
        /// Degree above which the per-member N1 check is skipped.
        #[arg(long, default_value_t = 64)]
        verify_cap: usize,
        /// Exit 0 even when the seed search is empty.
        #[arg(long)]
        allow_empty: bool,
    },
    /// Re-render a stored JSON record as CSV or a table.
    Catalog {
        /// Path to a JSON file previously written by this tool.
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Parser)]
struct FieldSpec {
    /// Characteristic (prime).
    #[arg(long)]
    p: u64,
    /// Base field is F_q = F_{p^m}.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Extension degree over F_q.
    #[arg(long)]
    n: usize,
    /// Modulus for F_q over F_p, comma-separated coefficients low to high;
    /// lexicographically-least irreducible when omitted.
    #[arg(long)]
    base_modulus: Option<String>,
    /// Modulus for F_{q^n} over F_q; lexicographically-least when omitted.
    #[arg(long)]
    ext_modulus: Option<String>,
}

impl FieldSpec {
    fn build(&self, seed: u64) -> Result<Field> {
        let prime = Field::prime(self.p)?;
        let base = match (&self.base_modulus, self.m) {
            (None, _) => crate::tower_base(self.p, self.m, seed)?,
            (Some(s), m) if m > 1 => {
                let modulus = parse_poly(&prime, s)?;
                if modulus.degree() != Some(m) {
                    return Err(Error::Parse(format!(
                        "base modulus must have degree {m}"
                    )));
                }
                Field::extension(&prime, &modulus)?
            }
            (Some(_), _) => {
                return Err(Error::Parse("base modulus given but m = 1".into()))
            }
        };
        match &self.ext_modulus {
            None => crate::extend(&base, self.n, seed),
            Some(s) => {
                let modulus = parse_poly(&base, s)?;
                if modulus.degree() != Some(self.n) {
                    return Err(Error::Parse(format!(
                        "extension modulus must have degree {}",
                        self.n
                    )));
                }
                Field::extension(&base, &modulus)
            }
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded(_) => 3,
        _ => 2,
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Vacuous => "VACUOUS",
        Verdict::PreconditionViolated => "PRECONDITION_VIOLATED",
    }
}

fn comparison_str(c: ClaimComparison) -> &'static str {
    match c {
        ClaimComparison::Agrees => "agrees",
        ClaimComparison::Disagrees => "disagrees",
        ClaimComparison::NotApplicable => "n/a",
    }
}

fn report_json(r: &VerdictReport) -> Value {
    json!({
        "claim": r.claim,
        "params": r.params,
        "verdict": verdict_str(r.verdict),
        "comparison": comparison_str(r.comparison),
        "witness": r.witness,
        "note": r.note,
    })
}

/// Exit code for a batch of verdicts: precondition trouble dominates, then
/// any failure, else success.
fn verdicts_exit(reports: &[VerdictReport]) -> i32 {
    if reports
        .iter()
        .any(|r| r.verdict == Verdict::PreconditionViolated)
    {
        4
    } else if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}

fn cmd_classify(field: &FieldSpec, elem: &str, cfg: &Config) -> Result<Value> {
    let ext = field.build(cfg.seed)?;
    if ext.cardinality() > cfg.census_bound {
        return Err(Error::BoundExceeded(format!(
            "cardinality {} exceeds census bound {}",
            ext.cardinality(),
            cfg.census_bound
        )));
    }
    let a = parse_element(&ext, elem)?;
    let cls = Classifier::new(&ext, cfg.seed, cfg.factor_bound)?;
    let rec = cls.classify(&a)?;
    Ok(json!({
        "schema": 1,
        "kind": "classification",
        "field": field_json(&ext),
        "element": element_text(&rec.element),
        "k": rec.k,
        "is_zero": rec.is_zero,
        "sigma_order": poly_text(&rec.sigma_order),
        "proper": rec.proper,
        "primitive": rec.primitive,
        "trace": element_text(&rec.trace),
    }))
}

fn cmd_census(field: &FieldSpec, cfg: &Config) -> Result<Value> {
    let ext = field.build(cfg.seed)?;
    let rec = census(&ext, cfg)?;
    let classes: Vec<Value> = (0..=rec.n)
        .map(|k| {
            json!({
                "k": k,
                "zero_class": k == rec.n,
                "count": rec.per_k[k],
                "proper": rec.proper_per_k[k],
                "primitive": rec.primitive_per_k[k],
                "witness": rec.witnesses[k].as_ref().map(element_text),
            })
        })
        .collect();
    Ok(json!({
        "schema": 1,
        "kind": "census",
        "field": field_json(&ext),
        "q": rec.q.to_string(),
        "n": rec.n,
        "classes": classes,
        "primitive_count": rec.primitive_count,
        "trace_zero_proper": rec.trace_zero_proper,
    }))
}

/// Split q into (p, m) and build F_q; rejects non-prime-powers.
fn base_from_q(q: u64, seed: u64) -> Result<Field> {
    let (p, m) = num::prime_power_split(q)
        .ok_or_else(|| Error::Parse(format!("q = {q} is not a prime power")))?;
    crate::tower_base(p, m as usize, seed)
}

fn need_q(q: Option<u64>) -> Result<u64> {
    q.ok_or_else(|| Error::Parse("this claim requires --q".into()))
}

fn need_n(n: Option<usize>) -> Result<usize> {
    n.ok_or_else(|| Error::Parse("this claim requires --n".into()))
}

fn run_verify(
    claim: ClaimId,
    q: Option<u64>,
    n: Option<usize>,
    cfg: &Config,
) -> Result<Vec<VerdictReport>> {
    match claim {
        ClaimId::AffineInvariance => {
            let base = base_from_q(need_q(q)?, cfg.seed)?;
            Ok(vec![verify_affine_invariance(&base, need_n(n)?, cfg)?])
        }
        ClaimId::TraceN2 => {
            let base = base_from_q(need_q(q)?, cfg.seed)?;
            Ok(vec![verify_trace_n2(&base, cfg)?])
        }
        ClaimId::TracePrimeN => {
            let base = base_from_q(need_q(q)?, cfg.seed)?;
            Ok(vec![verify_trace_prime_n(&base, need_n(n)?, cfg)?])
        }
        ClaimId::ExistenceTable | ClaimId::NamedFields => compare_with_stored_claims(cfg),
        ClaimId::All => {
            let mut out = Vec::new();
            for (q, n) in [(2u64, 4usize), (2, 6), (3, 3)] {
                out.push(verify_affine_invariance(&base_from_q(q, cfg.seed)?, n, cfg)?);
            }
            for q in [3u64, 5, 7] {
                out.push(verify_trace_n2(&base_from_q(q, cfg.seed)?, cfg)?);
            }
            for (q, n) in [(2u64, 5usize), (3, 5)] {
                out.push(verify_trace_prime_n(&base_from_q(q, cfg.seed)?, n, cfg)?);
            }
            out.extend(compare_with_stored_claims(cfg)?);
            Ok(out)
        }
    }
}

fn verdicts_json(reports: &[VerdictReport]) -> Value {
    json!({
        "schema": 1,
        "kind": "verdicts",
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    })
}

fn status_str(s: MemberStatus) -> &'static str {
    match s {
        MemberStatus::Checked => "checked",
        MemberStatus::SkippedAboveCap => "skipped-above-cap",
    }
}

fn chain_json(chain: &ChainRecord, root_chain: &VerdictReport) -> Value {
    let members: Vec<Value> = chain
        .members
        .iter()
        .enumerate()
        .map(|(u, m)| {
            json!({
                "u": u + 1,
                "degree": m.degree,
                "poly": poly_text(&m.poly),
                "poly_hex": poly_hex(&m.poly),
                "irreducible": status_str(m.irreducible),
                "n1": status_str(m.n1),
            })
        })
        .collect();
    json!({
        "f1": poly_text(&chain.seed.f1),
        "delta": element_text(&chain.seed.delta),
        "members": members,
        "root_chain": verdict_str(root_chain.verdict),
    })
}

fn cmd_construct(
    m: usize,
    n: usize,
    max_u: usize,
    cfg: &Config,
) -> Result<(Value, bool)> {
    let base = crate::tower_base(2, m, cfg.seed)?;
    if n % 2 != 0 {
        // Surface the precondition as a usage error with a plain message.
        return Err(Error::Parse("n must be even".into()));
    }
    let search = find_seed(&base, n, cfg)?;
    let mut chains = Vec::new();
    let mut any_verified = false;
    for seed in &search.seeds {
        let chain = build_chain(seed, max_u, cfg)?;
        let rc = root_chain_check(&chain, max_u, cfg)?;
        if rc.verdict == Verdict::Pass {
            any_verified = true;
        }
        chains.push(chain_json(&chain, &rc));
    }
    let value = json!({
        "schema": 1,
        "kind": "catalog",
        "base": field_json(&base),
        "n": n,
        "max_u": max_u,
        "n1_polynomials": search.n1_polynomials,
        "seed_count": search.seeds.len(),
        "diagnostic": search.diagnostic,
        "chains": chains,
    });
    Ok((value, any_verified))
}

// ---- rendering ----------------------------------------------------------

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// CSV-quote a cell when needed (commas appear inside element tuples).
fn csv_cell(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Header + rows for the CSV/table renderings, derived from the JSON value.
fn tabulate(value: &Value) -> Result<(Vec<&'static str>, Vec<Vec<String>>)> {
    let kind = value["kind"].as_str().unwrap_or("");
    match kind {
        "classification" => Ok((
            vec!["element", "k", "is_zero", "sigma_order", "proper", "primitive", "trace"],
            vec![vec![
                cell(&value["element"]),
                cell(&value["k"]),
                cell(&value["is_zero"]),
                cell(&value["sigma_order"]),
                cell(&value["proper"]),
                cell(&value["primitive"]),
                cell(&value["trace"]),
            ]],
        )),
        "census" => {
            let rows = value["classes"]
                .as_array()
                .ok_or_else(|| Error::Parse("census record lacks classes".into()))?
                .iter()
                .map(|c| {
                    vec![
                        cell(&value["q"]),
                        cell(&value["n"]),
                        cell(&c["k"]),
                        cell(&c["count"]),
                        cell(&c["proper"]),
                        cell(&c["primitive"]),
                        cell(&c["witness"]),
                    ]
                })
                .collect();
            Ok((
                vec!["q", "n", "k", "count", "proper", "primitive", "witness"],
                rows,
            ))
        }
        "verdicts" => {
            let rows = value["reports"]
                .as_array()
                .ok_or_else(|| Error::Parse("verdict record lacks reports".into()))?
                .iter()
                .map(|r| {
                    vec![
                        cell(&r["claim"]),
                        cell(&r["params"]),
                        cell(&r["verdict"]),
                        cell(&r["comparison"]),
                        cell(&r["witness"]),
                        cell(&r["note"]),
                    ]
                })
                .collect();
            Ok((
                vec!["claim", "params", "verdict", "comparison", "witness", "note"],
                rows,
            ))
        }
        "catalog" => {
            let mut rows = Vec::new();
            for (i, chain) in value["chains"]
                .as_array()
                .ok_or_else(|| Error::Parse("catalog record lacks chains".into()))?
                .iter()
                .enumerate()
            {
                for m in chain["members"].as_array().unwrap_or(&Vec::new()) {
                    rows.push(vec![
                        i.to_string(),
                        cell(&chain["delta"]),
                        cell(&m["u"]),
                        cell(&m["degree"]),
                        cell(&m["irreducible"]),
                        cell(&m["n1"]),
                        cell(&chain["root_chain"]),
                        cell(&m["poly_hex"]),
                    ]);
                }
            }
            Ok((
                vec!["chain", "delta", "u", "degree", "irreducible", "n1", "root_chain", "poly_hex"],
                rows,
            ))
        }
        other => Err(Error::Parse(format!("unknown record kind {other:?}"))),
    }
}

fn render(value: &Value, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(format!(
            "{}\n",
            serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?
        )),
        Format::Csv => {
            let (header, rows) = tabulate(value)?;
            let mut out = String::new();
            out.push_str(&header.join(","));
            out.push('\n');
            for row in rows {
                let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Table => {
            let (header, rows) = tabulate(value)?;
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &rows {
                for (i, c) in row.iter().enumerate() {
                    widths[i] = widths[i].max(c.len());
                }
            }
            let fmt_row = |cells: &[String]| {
                cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{:w$}", c, w = widths[i]))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let mut out = String::new();
            let header_cells: Vec<String> = header.iter().map(|s| s.to_string()).collect();
            out.push_str(&fmt_row(&header_cells));
            out.push('\n');
            for row in rows {
                out.push_str(&fmt_row(&row));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => Ok(fs::write(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn census_bound(cli_bound: Option<u128>) -> u128 {
    cli_bound
        .or_else(|| {
            std::env::var("KNF_BOUND")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(1 << 20)
}

fn dispatch(cli: &Cli, cfg: &Config) -> Result<i32> {
    let (value, code) = match &cli.command {
        Command::Classify { field, elem } => (cmd_classify(field, elem, cfg)?, 0),
        Command::Census { field } => (cmd_census(field, cfg)?, 0),
        Command::Verify { claim, q, n } => {
            let reports = run_verify(*claim, *q, *n, cfg)?;
            let code = verdicts_exit(&reports);
            (verdicts_json(&reports), code)
        }
        Command::Construct {
            m,
            n,
            max_u,
            verify_cap,
            allow_empty,
        } => {
            let mut cfg = cfg.clone();
            cfg.verify_cap = *verify_cap;
            let (value, any_verified) = cmd_construct(*m, *n, *max_u, &cfg)?;
            (value, if any_verified || *allow_empty { 0 } else { 1 })
        }
        Command::Catalog { input } => {
            let text = fs::read_to_string(input)?;
            let value: Value =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            if value["schema"] != json!(1) {
                return Err(Error::Parse("unsupported schema version".into()));
            }
            (value, 0)
        }
    };
    emit(&render(&value, cli.format)?, &cli.out)?;
    Ok(code)
}

/// Parse argv and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let cfg = Config {
        seed: cli.seed,
        census_bound: census_bound(cli.bound),
        ..Config::default()
    };
    match dispatch(&cli, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
