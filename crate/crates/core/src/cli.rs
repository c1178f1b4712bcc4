//! Command-line front end: file formats, commands and the exit-code contract.
//!
//! Exit codes: `0` computed or verified, `1` a mathematical verification failed,
//! `2` malformed input or usage.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::alphabet::{Alphabet, AlphabetSpec, Element};
use crate::characters::Duality;
use crate::codes::{Code, CodeKind, Limits, Pairing, Word};
use crate::enumerators::{
    enumerate, hamming_we, ocrw, theta, verify_identity, EnumError, KrawtchoukMatrix, LambdaMode, MultiPoly,
    Outcome, Partition, PartitionFile,
};
use crate::graymap::{gray_report, GrayParams};

#[derive(Debug, Parser)]
#[command(name = "macwilliams", version, about = "Weight enumerators and MacWilliams identities for codes over rings and groups")]
pub struct Cli {
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Largest code that may be materialized.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    pub max_words: usize,
    /// Largest ambient space searched for orthogonal codes.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    pub max_space: u128,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alphabet summary, type, size and order classes of a code.
    Info { code: PathBuf },
    /// Print a weight enumerator.
    Enum {
        code: PathBuf,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Brute-force orthogonal code.
    Dual {
        code: PathBuf,
        #[arg(long)]
        duality: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Emit::Type)]
        emit: Emit,
    },
    /// Check the MacWilliams identity against the brute-force dual.
    Macwilliams {
        code: PathBuf,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        duality: Option<PathBuf>,
        /// Custom partition file; replaces --weight.
        #[arg(long)]
        classes: Option<PathBuf>,
    },
    /// Classes, dual partition, reflexivity and Krawtchouk matrix of a partition.
    Partition {
        alphabet: PathBuf,
        #[arg(long, value_enum, conflicts_with = "classes", required_unless_present = "classes")]
        kind: Option<PartitionChoice>,
        #[arg(long)]
        classes: Option<PathBuf>,
        #[arg(long)]
        lambda: Option<usize>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long)]
        duality: Option<PathBuf>,
    },
    /// Gray image, its Hamming enumerator and the chain enumerator substitution.
    Gray {
        code: PathBuf,
        /// List the image vectors.
        #[arg(long)]
        emit_gray: bool,
    },
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(long, value_enum, default_value_t = Weight::Cwe)]
    pub weight: Weight,
    /// Ring element index of λ for the λ-weight.
    #[arg(long)]
    pub lambda: Option<usize>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Weight {
    Cwe,
    Hamming,
    Symmetric,
    Lambda,
    Crw,
    Ocrw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartitionChoice {
    #[value(alias = "cwe")]
    Complete,
    Hamming,
    Symmetric,
    Lambda,
    #[value(alias = "crw")]
    Order,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Single,
    Orbit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Generators,
    Codewords,
    Type,
}

impl From<ModeArg> for LambdaMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Single => LambdaMode::Single,
            ModeArg::Orbit => LambdaMode::Orbit,
        }
    }
}

/// Input or usage problem; always exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{0}")]
    Input(String),
}

macro_rules! input_error {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        })*
    };
}

input_error!(
    crate::alphabet::AlphabetError,
    crate::codes::CodeError,
    crate::characters::DualityError,
    crate::graymap::GrayError,
    EnumError,
    rayon::ThreadPoolBuildError
);

/// Code JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    #[serde(default)]
    pub format: Option<u32>,
    pub alphabet: AlphabetSpec,
    pub kind: CodeKind,
    pub generators: Vec<Vec<usize>>,
    /// Needed only when `generators` is empty.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
}

/// Duality JSON: `M[a][b] = ζ_N^{table[a][b]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DualityFile {
    #[serde(default)]
    pub format: Option<u32>,
    pub root_order: u64,
    pub table: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AlphabetFile {
    Bare(AlphabetSpec),
    Wrapped { alphabet: AlphabetSpec },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

/// Text and JSON renderings of one command's result.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub status: Status,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Failed => 1,
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let shown = path.display().to_string();
    let raw = fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    serde_json::from_str(&raw).map_err(|source| CliError::Json { path: shown, source })
}

fn check_format(format: Option<u32>) -> Result<(), CliError> {
    match format {
        None | Some(1) => Ok(()),
        Some(f) => Err(CliError::Input(format!("unsupported format version {f}"))),
    }
}

pub fn load_code(path: &Path, limits: Limits) -> Result<Code, CliError> {
    let file: CodeFile = read_json(path)?;
    code_from_file(&file, limits)
}

pub fn code_from_file(file: &CodeFile, limits: Limits) -> Result<Code, CliError> {
    check_format(file.format)?;
    let alphabet = Arc::new(Alphabet::build(&file.alphabet)?);
    let length = match (file.length, file.generators.first()) {
        (Some(n), _) => n,
        (None, Some(g)) => g.len(),
        (None, None) => return Err(CliError::Input("\"length\" is required when there are no generators".into())),
    };
    let mut gens = Vec::with_capacity(file.generators.len());
    for g in &file.generators {
        let w: Result<Word, _> = g.iter().map(|&i| alphabet.element(i)).collect();
        gens.push(w?);
    }
    Ok(Code::span(alphabet, length, gens, file.kind, limits)?)
}

pub fn load_duality(path: Option<&Path>, alphabet: &Arc<Alphabet>) -> Result<Duality, CliError> {
    match path {
        None => Ok(Duality::standard(alphabet.clone())),
        Some(p) => {
            let file: DualityFile = read_json(p)?;
            check_format(file.format)?;
            Ok(Duality::validate(alphabet.clone(), file.root_order, &file.table)?)
        }
    }
}

fn load_alphabet(path: &Path) -> Result<Arc<Alphabet>, CliError> {
    let spec = match read_json::<AlphabetFile>(path)? {
        AlphabetFile::Bare(s) | AlphabetFile::Wrapped { alphabet: s } => s,
    };
    Ok(Arc::new(Alphabet::build(&spec)?))
}

fn load_partition(path: &Path, alphabet: &Arc<Alphabet>) -> Result<Partition, CliError> {
    let file: PartitionFile = read_json(path)?;
    Ok(Partition::custom(alphabet.clone(), &file.classes)?)
}

fn lambda_partition(alphabet: &Arc<Alphabet>, lambda: Option<usize>, mode: Option<ModeArg>) -> Result<Partition, CliError> {
    let mode = mode.map(LambdaMode::from).unwrap_or_default();
    let lambda = match (lambda, mode) {
        (Some(i), _) => alphabet.element(i)?,
        (None, LambdaMode::Orbit) => alphabet.one()?,
        (None, LambdaMode::Single) => return Err(CliError::Input("--mode single requires --lambda".into())),
    };
    Ok(Partition::lambda(alphabet.clone(), lambda, mode)?)
}

fn reject_lambda_flags(lambda: Option<usize>, mode: Option<ModeArg>, what: &str) -> Result<(), CliError> {
    if lambda.is_some() || mode.is_some() {
        return Err(CliError::Input(format!("--lambda and --mode apply only to the lambda weight, not {what}")));
    }
    Ok(())
}

fn weight_name(w: Weight) -> &'static str {
    match w {
        Weight::Cwe => "cwe",
        Weight::Hamming => "hamming",
        Weight::Symmetric => "symmetric",
        Weight::Lambda => "lambda",
        Weight::Crw => "crw",
        Weight::Ocrw => "ocrw",
    }
}

/// Partition behind a weight; `None` for the order enumerator, which has no partition.
fn weight_partition(alphabet: &Arc<Alphabet>, args: &WeightArgs) -> Result<Option<Partition>, CliError> {
    if args.weight != Weight::Lambda {
        reject_lambda_flags(args.lambda, args.mode, weight_name(args.weight))?;
    }
    Ok(match args.weight {
        Weight::Cwe => Some(Partition::complete(alphabet.clone())),
        Weight::Hamming => Some(Partition::hamming(alphabet.clone())),
        Weight::Symmetric => Some(Partition::symmetric(alphabet.clone())),
        Weight::Lambda => Some(lambda_partition(alphabet, args.lambda, args.mode)?),
        Weight::Crw => Some(Partition::order(alphabet.clone())?),
        Weight::Ocrw => {
            alphabet.require_chain()?;
            None
        }
    })
}

fn word_text(w: &[Element]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.index().to_string()).collect();
    format!("({})", parts.join(","))
}

/// Index form, followed by the symbolic form when it differs.
fn word_display(alphabet: &Alphabet, w: &[Element]) -> String {
    let plain = word_text(w);
    let parts: Vec<String> = w.iter().map(|&x| alphabet.pretty(x)).collect();
    let pretty = format!("({})", parts.join(","));
    if pretty == plain {
        plain
    } else {
        format!("{plain} = {pretty}")
    }
}

fn word_indices(words: &[Word]) -> Value {
    json!(words.iter().map(|w| w.iter().map(|x| x.index()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn poly_json(p: &MultiPoly<i64>) -> Value {
    json!({
        "variables": p.vars(),
        "text": p.to_string(),
        "terms": p.terms().map(|(e, c)| json!({"exponents": e, "coefficient": c})).collect::<Vec<_>>(),
    })
}

fn classes_json(p: &Partition) -> Value {
    json!(p.to_file().classes)
}

fn code_header(code: &Code) -> String {
    format!(
        "code: {} over {}, length {}, |C|={}",
        match code.kind() {
            CodeKind::Linear => "linear",
            CodeKind::Additive => "additive",
        },
        code.alphabet(),
        code.length(),
        code.size()
    )
}

fn ambient_size(code: &Code) -> u128 {
    (code.alphabet().size() as u128).pow(code.length() as u32)
}

pub fn cmd_info(path: &Path, limits: Limits) -> Result<Report, CliError> {
    let code = load_code(path, limits)?;
    let alphabet = code.alphabet();
    let mut text = String::new();
    let mut out = json!({
        "alphabet": alphabet.name(),
        "alphabet_size": alphabet.size(),
        "kind": code.kind(),
        "length": code.length(),
        "size": code.size(),
    });
    writeln!(text, "alphabet: {} (size {})", alphabet, alphabet.size()).unwrap();
    if let Some(chain) = alphabet.chain() {
        writeln!(text, "chain ring: q={}, e={}, gamma={}", chain.q(), chain.e(), alphabet.pretty(chain.gamma())).unwrap();
        out["chain"] = json!({"q": chain.q(), "e": chain.e()});
    }
    writeln!(text, "{}", code_header(&code)).unwrap();
    let mut status = Status::Ok;
    if code.kind() == CodeKind::Linear && alphabet.chain().is_some() {
        let chain = alphabet.chain().unwrap();
        let sf = code.standard_form()?;
        let filtration = code.filtration()?;
        let counted = filtration.b_sizes();
        let predicted = sf.profile.b_sizes(chain.q());
        let size_ok = sf.profile.cardinality(chain.q()) == code.size() as u128;
        let b_text: Vec<String> = counted.iter().map(u128::to_string).collect();
        writeln!(text, "type {}, |C|={}, |B|=[{}]", sf.profile, code.size(), b_text.join(",")).unwrap();
        writeln!(
            text,
            "|C| from type: {} ({})",
            sf.profile.cardinality(chain.q()),
            if size_ok { "matches" } else { "MISMATCH" }
        )
        .unwrap();
        writeln!(
            text,
            "|B| from type: {}",
            if predicted == counted { "matches" } else { "MISMATCH" }
        )
        .unwrap();
        writeln!(text, "standard form (columns {:?}):", sf.permutation).unwrap();
        for row in &sf.rows {
            writeln!(text, "  {}", word_display(alphabet, row)).unwrap();
        }
        if !size_ok || predicted != counted {
            status = Status::Failed;
        }
        out["type"] = json!({"n": sf.profile.n, "k": sf.profile.k, "k_e": sf.profile.k_e()});
        out["b_sizes"] = json!(counted.iter().map(|b| *b as u64).collect::<Vec<_>>());
        out["standard_form"] = json!({"rows": word_indices(&sf.rows), "permutation": sf.permutation});
    }
    writeln!(text, "generators:").unwrap();
    for g in code.generators() {
        writeln!(text, "  {}", word_display(alphabet, g)).unwrap();
    }
    out["generators"] = word_indices(code.generators());
    Ok(Report { text, json: out, status })
}

pub fn cmd_enum(path: &Path, weight: &WeightArgs, limits: Limits) -> Result<Report, CliError> {
    let code = load_code(path, limits)?;
    let partition = weight_partition(code.alphabet(), weight)?;
    let poly = match (weight.weight, &partition) {
        (Weight::Hamming, _) => hamming_we(&code),
        (Weight::Ocrw, _) => ocrw(&code)?,
        (_, Some(p)) => enumerate(&code, p)?,
        (_, None) => unreachable!("every other weight has a partition"),
    };
    let mut out = json!({"weight": weight_name(weight.weight), "polynomial": poly_json(&poly)});
    if let Some(p) = &partition {
        out["classes"] = classes_json(p);
    }
    Ok(Report { text: format!("{poly}\n"), json: out, status: Status::Ok })
}

pub fn cmd_dual(path: &Path, duality: Option<&Path>, emit: Emit, limits: Limits) -> Result<Report, CliError> {
    let code = load_code(path, limits)?;
    let m = load_duality(duality, code.alphabet())?;
    let dual = code.orthogonal(Pairing::Duality(&m), limits)?;
    let ambient = ambient_size(&code);
    let product_ok = code.size() as u128 * dual.size() as u128 == ambient;
    let mut text = String::new();
    writeln!(text, "{}", code_header(&code)).unwrap();
    writeln!(
        text,
        "pairing: {}",
        if duality.is_some() { "duality from file" } else { "standard duality" }
    )
    .unwrap();
    writeln!(text, "|C*|={}", dual.size()).unwrap();
    writeln!(
        text,
        "|C|*|C*| = {} {} |A|^n = {}",
        code.size() as u128 * dual.size() as u128,
        if product_ok { "=" } else { "!=" },
        ambient
    )
    .unwrap();
    let mut out = json!({
        "size": code.size(),
        "dual_size": dual.size(),
        "ambient_size": ambient as u64,
        "product_check": product_ok,
    });
    let mut status = if product_ok { Status::Ok } else { Status::Failed };
    if code.kind() == CodeKind::Linear && code.alphabet().chain().is_some() {
        let t = code.standard_form()?.profile;
        let td = dual.standard_form()?.profile;
        let predicted = t.dual();
        writeln!(text, "type of C: {t}").unwrap();
        writeln!(text, "type of C*: {td}").unwrap();
        writeln!(text, "dual type from type of C: {predicted} ({})", if predicted == td { "matches" } else { "MISMATCH" })
            .unwrap();
        if predicted != td {
            status = Status::Failed;
        }
        out["type"] = json!(t.k);
        out["dual_type"] = json!(td.k);
        out["predicted_dual_type"] = json!(predicted.k);
    }
    match emit {
        Emit::Type => {}
        Emit::Generators => {
            writeln!(text, "generators:").unwrap();
            for g in dual.generators() {
                writeln!(text, "  {}", word_display(dual.alphabet(), g)).unwrap();
            }
            out["generators"] = word_indices(dual.generators());
        }
        Emit::Codewords => {
            writeln!(text, "codewords:").unwrap();
            for w in dual.words() {
                writeln!(text, "  {}", word_display(dual.alphabet(), w)).unwrap();
            }
            out["codewords"] = word_indices(dual.words());
        }
    }
    Ok(Report { text, json: out, status })
}

pub fn cmd_macwilliams(
    path: &Path,
    weight: &WeightArgs,
    duality: Option<&Path>,
    classes: Option<&Path>,
    limits: Limits,
) -> Result<Report, CliError> {
    let code = load_code(path, limits)?;
    let alphabet = code.alphabet().clone();
    let m = load_duality(duality, &alphabet)?;
    let mut text = String::new();
    writeln!(text, "{}", code_header(&code)).unwrap();

    if classes.is_none() && weight.weight == Weight::Ocrw {
        reject_lambda_flags(weight.lambda, weight.mode, "ocrw")?;
        let chain = alphabet.require_chain()?;
        let dual = code.orthogonal(Pairing::Duality(&m), limits)?;
        let lhs = ocrw(&dual)?;
        let o = ocrw(&code)?;
        let rhs = theta(&o, chain.q(), chain.e() as usize, code.length());
        writeln!(text, "weight: ocrw").unwrap();
        writeln!(text, "enumerator:  {o}").unwrap();
        let (verdict, rhs_json) = match &rhs {
            Ok(r) => {
                writeln!(text, "theta:       {r}").unwrap();
                (*r == lhs, poly_json(r))
            }
            Err(e) => {
                writeln!(text, "theta:       {e}").unwrap();
                (false, json!(e.to_string()))
            }
        };
        writeln!(text, "brute force: {lhs}").unwrap();
        writeln!(text, "{}", if verdict { "VERIFIED" } else { "FAILED" }).unwrap();
        let out = json!({
            "weight": "ocrw",
            "enumerator": poly_json(&o),
            "transform": rhs_json,
            "brute_force": poly_json(&lhs),
            "verified": verdict,
        });
        return Ok(Report { text, json: out, status: if verdict { Status::Ok } else { Status::Failed } });
    }

    let (partition, name) = match classes {
        Some(p) => {
            reject_lambda_flags(weight.lambda, weight.mode, "a partition file")?;
            (load_partition(p, &alphabet)?, "custom")
        }
        None => (weight_partition(&alphabet, weight)?.expect("partition"), weight_name(weight.weight)),
    };
    let report = verify_identity(&code, &partition, &m, limits)?;
    writeln!(text, "|C*|={}", report.dual_size).unwrap();
    writeln!(text, "weight: {name}").unwrap();
    writeln!(text, "classes: {partition}").unwrap();
    writeln!(text, "enumerator:  {}", report.enumerator).unwrap();
    match &report.transform {
        Some(t) => writeln!(text, "transform:   {t}").unwrap(),
        None => writeln!(text, "transform:   unavailable").unwrap(),
    }
    writeln!(text, "brute force: {}", report.brute_force).unwrap();
    let mut out = json!({
        "weight": name,
        "classes": classes_json(&partition),
        "size": report.code_size,
        "dual_size": report.dual_size,
        "enumerator": poly_json(&report.enumerator),
        "transform": report.transform.as_ref().map(poly_json),
        "brute_force": poly_json(&report.brute_force),
        "verified": report.verified(),
    });
    if let Some(sq) = &report.square {
        let theta_text = match &sq.theta_of_psi {
            Ok(t) => t.to_string(),
            Err(e) => e.to_string(),
        };
        writeln!(text, "square: Psi(Omega(CRW)) = {}", sq.psi_of_transform).unwrap();
        writeln!(text, "        theta(Psi(CRW)) = {theta_text}").unwrap();
        writeln!(text, "square {}", if sq.commutes() { "commutes" } else { "does NOT commute" }).unwrap();
        out["square"] = json!({
            "psi_of_transform": sq.psi_of_transform.to_string(),
            "theta_of_psi": theta_text,
            "commutes": sq.commutes(),
        });
    }
    match &report.outcome {
        Outcome::Verified if report.verified() => writeln!(text, "VERIFIED").unwrap(),
        Outcome::Verified | Outcome::Mismatch => writeln!(text, "FAILED: transform differs from brute force").unwrap(),
        Outcome::Failed(e) => {
            writeln!(text, "FAILED: {e}").unwrap();
            out["error"] = json!(e.to_string());
        }
    }
    let status = if report.verified() { Status::Ok } else { Status::Failed };
    Ok(Report { text, json: out, status })
}

pub fn cmd_partition(
    path: &Path,
    kind: Option<PartitionChoice>,
    classes: Option<&Path>,
    lambda: Option<usize>,
    mode: Option<ModeArg>,
    duality: Option<&Path>,
) -> Result<Report, CliError> {
    let alphabet = load_alphabet(path)?;
    let m = load_duality(duality, &alphabet)?;
    if kind != Some(PartitionChoice::Lambda) {
        reject_lambda_flags(lambda, mode, "this partition")?;
    }
    let partition = match (kind, classes) {
        (_, Some(p)) => load_partition(p, &alphabet)?,
        (Some(PartitionChoice::Complete), None) => Partition::complete(alphabet.clone()),
        (Some(PartitionChoice::Hamming), None) => Partition::hamming(alphabet.clone()),
        (Some(PartitionChoice::Symmetric), None) => Partition::symmetric(alphabet.clone()),
        (Some(PartitionChoice::Lambda), None) => lambda_partition(&alphabet, lambda, mode)?,
        (Some(PartitionChoice::Order), None) => Partition::order(alphabet.clone())?,
        (None, None) => return Err(CliError::Input("one of --kind or --classes is required".into())),
    };
    let dual = partition.dual(&m)?;
    let reflexive = partition.is_reflexive(&m)?;
    let autodual = partition.is_autodual(&m)?;
    let mut text = String::new();
    writeln!(text, "alphabet: {alphabet}").unwrap();
    writeln!(text, "classes: {partition}").unwrap();
    writeln!(text, "dual partition: {dual}").unwrap();
    writeln!(text, "reflexive={reflexive} autodual={autodual}").unwrap();
    let mut out = json!({
        "alphabet": alphabet.name(),
        "classes": classes_json(&partition),
        "dual_classes": classes_json(&dual),
        "reflexive": reflexive,
        "autodual": autodual,
    });
    let status = match KrawtchoukMatrix::new(&partition, &m) {
        Ok(k) => {
            writeln!(text, "krawtchouk matrix: {k}").unwrap();
            out["krawtchouk"] = match k.as_integers() {
                Some(ints) => json!(ints),
                None => json!(k.entries().iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()),
            };
            Status::Ok
        }
        Err(e) if e.is_mathematical() => {
            writeln!(text, "krawtchouk matrix: FAILED: {e}").unwrap();
            out["error"] = json!(e.to_string());
            Status::Failed
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Report { text, json: out, status })
}

pub fn cmd_gray(path: &Path, emit_gray: bool, limits: Limits) -> Result<Report, CliError> {
    let code = load_code(path, limits)?;
    let params = GrayParams::new(code.alphabet().clone())?;
    let report = gray_report(&code, &params)?;
    let mut text = String::new();
    writeln!(text, "{}", code_header(&code)).unwrap();
    writeln!(text, "residue field: {}, image length {}", params.residue_field(), code.length() * params.image_length())
        .unwrap();
    writeln!(text, "W of Gray image:  {}", report.image_we).unwrap();
    writeln!(text, "CRW substitution: {}", report.substituted).unwrap();
    writeln!(
        text,
        "isometry: {}/{} codewords with w(Phi(c)) = w_Hom(c)",
        code.size() - report.isometry_failures,
        code.size()
    )
    .unwrap();
    writeln!(text, "injective: {}", report.injective).unwrap();
    let mut out = json!({
        "image_we": poly_json(&report.image_we),
        "crw_substitution": poly_json(&report.substituted),
        "isometry_failures": report.isometry_failures,
        "injective": report.injective,
        "verified": report.verified(),
    });
    if emit_gray {
        writeln!(text, "image:").unwrap();
        for (w, g) in code.words().iter().zip(&report.image) {
            writeln!(text, "  {} -> {}", word_text(w), word_text(g)).unwrap();
        }
        out["image"] = word_indices(&report.image);
    }
    writeln!(text, "{}", if report.verified() { "VERIFIED" } else { "FAILED" }).unwrap();
    let status = if report.verified() { Status::Ok } else { Status::Failed };
    Ok(Report { text, json: out, status })
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let limits = Limits { max_words: cli.max_words, max_space: cli.max_space };
    match &cli.command {
        Command::Info { code } => cmd_info(code, limits),
        Command::Enum { code, weight } => cmd_enum(code, weight, limits),
        Command::Dual { code, duality, emit } => cmd_dual(code, duality.as_deref(), *emit, limits),
        Command::Macwilliams { code, weight, duality, classes } => {
            cmd_macwilliams(code, weight, duality.as_deref(), classes.as_deref(), limits)
        }
        Command::Partition { alphabet, kind, classes, lambda, mode, duality } => {
            cmd_partition(alphabet, *kind, classes.as_deref(), *lambda, *mode, duality.as_deref())
        }
        Command::Gray { code, emit_gray } => cmd_gray(code, *emit_gray, limits),
    }
}

/// Runs a parsed command line, returning the exit code, stdout and stderr.
pub fn execute(cli: &Cli) -> (i32, String, String) {
    let result = match cli.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j as usize)
            .build()
            .map_err(CliError::from)
            .and_then(|pool| pool.install(|| dispatch(cli))),
        None => dispatch(cli),
    };
    match result {
        Ok(report) => {
            let stdout = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&report.json).expect("json"))
            } else {
                report.text.clone()
            };
            (report.exit_code(), stdout, String::new())
        }
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}

/// Parses arguments and runs; usage errors exit with 2.
pub fn run_with_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                (code, String::new(), rendered)
            } else {
                (code, rendered, String::new())
            }
        }
    }
}
