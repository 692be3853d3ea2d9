//! The `metab` command line. [`run`] returns the exit status and both output
//! streams so it can be driven from tests without spawning a process.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use metabelian_core::arith::{coded_mul, decode_element, encode_element};
use metabelian_core::commod::collect;
use metabelian_core::evalhom::{congruent_mod_raw, quotient_presentation, separating_point, separating_point_distinct, EvalPoint};
use metabelian_core::fox::{fox_all, magnus_equal, recover_collected};
use metabelian_core::group::{basis_certificate, BasisVerdict};
use metabelian_core::words::{
    element_to_word, expand_module_expr, parse_element, parse_module_expr, parse_poly, parse_word, print_element,
    print_part,
};
use metabelian_core::{BigInt, BigUint, Element, Error};
use serde_json::{json, Value};

use crate::config::{Config, ConfigError};
use crate::{corpus, harness, json as js};

#[derive(Parser, Debug)]
#[command(name = "metab", version, about = "Exact arithmetic in free metabelian groups")]
struct Cli {
    /// Rank of the free metabelian group (at least 2).
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per randomized check.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Evaluation point, comma separated.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Option<Vec<String>>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an element.
    Nf { element: String },
    /// Decide equality of two words with both deciders.
    Eq { left: String, right: String },
    Mul { left: String, right: String },
    Inv { element: String },
    Pow {
        element: String,
        #[arg(allow_hyphen_values = true)]
        exponent: i64,
    },
    /// `g^-1 h^-1 g h`.
    Comm { left: String, right: String },
    /// Abelianized Fox derivatives of a word.
    Fox {
        word: String,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Collect a module expression `[xi,xj]^(poly) ...`.
    Collect { expr: String },
    /// Normal form of a word recovered from its Fox derivatives.
    Recover { word: String },
    /// A word for a module expression or element.
    Expand { expr: String },
    Encode { element: String },
    Decode { code: String },
    CodedMul { left: String, right: String },
    /// Evaluate a polynomial at `--alpha`.
    Eval {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// A point where none of the polynomials vanish.
    Discriminate {
        #[arg(long = "poly", required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
        /// Separate the polynomials from each other instead.
        #[arg(long)]
        distinct: bool,
    },
    /// Congruence of two module expressions modulo the relators evaluated at `--alpha`.
    QuotientEq { left: String, right: String },
    /// Necessary conditions for `rank` words to form a basis.
    BasisCert {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Randomized property checks at one rank.
    CheckAxioms,
    /// Check a file of `<word> ; <word>` pairs.
    Corpus { file: PathBuf },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Corpus(corpus::CorpusError),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Text and JSON renderings of a result, plus a status for checks that can fail.
struct Out {
    text: String,
    json: Value,
    code: i32,
}

impl Out {
    fn new(text: impl Into<String>, pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Self {
        Out { text: text.into(), json: js::doc(pairs), code: 0 }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.json;
    match execute(cli) {
        Ok(out) => {
            let stdout = if json { format!("{}\n", out.json) } else { format!("{}\n", out.text) };
            Outcome { code: out.code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Io(msg)) => {
            let doc = js::doc([("error", json!({"kind": "Io", "message": msg}))]);
            Outcome { code: 1, stdout: String::new(), stderr: format!("{doc}\n") }
        }
        Err(Failure::Domain(e)) => {
            let code = if e.is_syntax() { 2 } else { 1 };
            Outcome { code, stdout: String::new(), stderr: format!("{}\n", js::error(&e)) }
        }
        Err(Failure::Corpus(e)) => {
            let mut doc = js::error(&e.error);
            doc["error"]["line"] = json!(e.line);
            let code = if e.error.is_syntax() { 2 } else { 1 };
            Outcome { code, stdout: String::new(), stderr: format!("line {}: {}\n{doc}\n", e.line, e.error) }
        }
    }
}

fn parse_alpha(alpha: &Option<Vec<String>>, rank: usize) -> Result<EvalPoint, Failure> {
    let Some(raw) = alpha else {
        return Err(Failure::Usage("--alpha is required for this command".into()));
    };
    let values: Vec<BigInt> = raw
        .iter()
        .map(|s| s.trim().parse::<BigInt>().map_err(|_| Failure::Usage(format!("--alpha: `{s}` is not an integer"))))
        .collect::<Result<_, _>>()?;
    if values.len() != rank {
        return Err(Failure::Usage(format!("--alpha needs {rank} entries, got {}", values.len())));
    }
    Ok(EvalPoint::new(values)?)
}

fn parse_code(s: &str) -> Result<BigUint, Error> {
    s.trim().parse::<BigUint>().map_err(|_| Error::Syntax { pos: 0, message: format!("`{s}` is not a natural number") })
}

fn element_out(g: &Element) -> Out {
    Out::new(print_element(g), [("element", js::element(g)), ("text", json!(print_element(g)))])
}

fn bool_out(key: &'static str, b: bool) -> Out {
    Out::new(b.to_string(), [(key, json!(b))])
}

fn execute(cli: Cli) -> Result<Out, Failure> {
    let rank = cli.rank.ok_or_else(|| Failure::Usage("--rank is required".into()))?;
    let cfg = Config::new(rank, cli.seed, cli.samples, cli.json)?;
    let n = cfg.rank;
    let elem = |s: &str| parse_element(s, n);
    Ok(match &cli.command {
        Command::Nf { element } => element_out(&elem(element)?),
        Command::Eq { left, right } => {
            let (u, v) = (parse_word(left, n)?, parse_word(right, n)?);
            let nf = Element::from_word(&u, n)? == Element::from_word(&v, n)?;
            let fox = magnus_equal(&u, &v, n)?;
            if nf != fox {
                return Err(Error::InternalInconsistency(format!("normal forms say {nf}, Fox oracle says {fox}")).into());
            }
            bool_out("equal", nf)
        }
        Command::Mul { left, right } => element_out(&(elem(left)?.mul(&elem(right)?))?),
        Command::Inv { element } => element_out(&elem(element)?.inv()),
        Command::Pow { element, exponent } => element_out(&elem(element)?.pow(*exponent)),
        Command::Comm { left, right } => element_out(&elem(left)?.commutator(&elem(right)?)?),
        Command::Fox { word, index } => {
            let d = fox_all(&parse_word(word, n)?, n)?;
            match index {
                Some(k) if *k == 0 || *k > n => return Err(Error::BadIndex { index: *k, rank: n }.into()),
                Some(k) => Out::new(d[k - 1].to_string(), [("index", json!(k)), ("fox", js::poly(&d[k - 1]))]),
                None => {
                    let text: Vec<String> = d.iter().enumerate().map(|(k, q)| format!("d{} = {q}", k + 1)).collect();
                    Out::new(text.join("\n"), [("fox", Value::Array(d.iter().map(js::poly).collect()))])
                }
            }
        }
        Command::Collect { expr } => {
            let c = collect(&parse_module_expr(expr, n)?);
            Out::new(print_part(&c), [("part", js::part(&c)), ("text", json!(print_part(&c)))])
        }
        Command::Recover { word } => element_out(&recover_collected(&parse_word(word, n)?, n)?),
        Command::Expand { expr } => {
            let w = match parse_module_expr(expr, n) {
                Ok(e) => expand_module_expr(&e)?,
                Err(_) => element_to_word(&elem(expr)?)?,
            };
            Out::new(w.to_string(), [("word", json!(w.to_string()))])
        }
        Command::Encode { element } => {
            let c = encode_element(&elem(element)?).to_string();
            Out::new(c.clone(), [("code", json!(c))])
        }
        Command::Decode { code } => element_out(&decode_element(&parse_code(code)?, n)?),
        Command::CodedMul { left, right } => {
            let c = coded_mul(&parse_code(left)?, &parse_code(right)?, n)?.to_string();
            Out::new(c.clone(), [("code", json!(c))])
        }
        Command::Eval { poly } => {
            let point = parse_alpha(&cli.alpha, n)?;
            let v = point.eval(&parse_poly(poly, n)?)?;
            Out::new(v.to_string(), [("value", json!(v.to_string())), ("integer", json!(v.is_integer()))])
        }
        Command::Discriminate { polys, distinct } => {
            let ps = polys.iter().map(|p| parse_poly(p, n)).collect::<Result<Vec<_>, _>>()?;
            let point = if *distinct { separating_point_distinct(n, &ps)? } else { separating_point(n, &ps)? };
            let values = ps.iter().map(|p| point.eval(p)).collect::<Result<Vec<_>, _>>()?;
            let alpha: Vec<String> = point.alphas().iter().map(|a| a.to_string()).collect();
            let mut text = vec![format!("alpha = {}", alpha.join(","))];
            for (p, v) in ps.iter().zip(&values) {
                text.push(format!("{p} -> {v}"));
            }
            Out::new(
                text.join("\n"),
                [
                    ("alpha", Value::Array(point.alphas().iter().map(js::int).collect())),
                    ("values", json!(values.iter().map(|v| v.to_string()).collect::<Vec<_>>())),
                ],
            )
        }
        Command::QuotientEq { left, right } => {
            let point = parse_alpha(&cli.alpha, n)?;
            let pres = quotient_presentation(&point);
            let b = congruent_mod_raw(&parse_module_expr(left, n)?, &parse_module_expr(right, n)?, &pres)?;
            let invariants: Vec<Value> = pres.smith.d[..pres.smith.rank].iter().map(js::int).collect();
            Out::new(
                b.to_string(),
                [("congruent", json!(b)), ("free_rank", json!(pres.free_rank())), ("invariants", Value::Array(invariants))],
            )
        }
        Command::BasisCert { words } => {
            let ws = words.iter().map(|w| parse_word(w, n)).collect::<Result<Vec<_>, _>>()?;
            let (name, det) = match basis_certificate(&ws, n)? {
                BasisVerdict::FailAbelianization { det } => ("FailAbelianization", det.to_string()),
                BasisVerdict::FailJacobianUnit { det } => ("FailJacobianUnit", det.to_string()),
                BasisVerdict::PassNecessary { det } => ("PassNecessary", det.to_string()),
            };
            Out::new(format!("{name} det = {det}"), [("verdict", json!(name)), ("det", json!(det))])
        }
        Command::CheckAxioms => {
            let reports = harness::rank_suite(n, cfg.seed, cfg.samples);
            let passed = reports.iter().all(|r| r.passed());
            let text: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            let docs: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id, "title": r.title, "passed": r.passed(), "checks": r.checks,
                        "failed": r.failed, "failures": r.failures, "notes": r.notes,
                    })
                })
                .collect();
            let mut out = Out::new(text.join("\n"), [("reports", Value::Array(docs)), ("passed", json!(passed))]);
            out.code = if passed { 0 } else { 1 };
            out
        }
        Command::Corpus { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Failure::Io(format!("{}: {e}", file.display())))?;
            let verdicts = corpus::run(&text, n).map_err(Failure::Corpus)?;
            let word = |b: bool| if b { "equal" } else { "distinct" };
            let lines: Vec<String> =
                verdicts.iter().map(|v| format!("line {}: {}/{}", v.line, word(v.nf), word(v.fox))).collect();
            let results: Vec<Value> =
                verdicts.iter().map(|v| json!({"line": v.line, "nf": v.nf, "fox": v.fox})).collect();
            let disagreements = verdicts.iter().filter(|v| !v.agrees()).count();
            let mut out = Out::new(
                lines.join("\n"),
                [("results", Value::Array(results)), ("disagreements", json!(disagreements))],
            );
            if disagreements > 0 {
                out.code = 1;
            }
            out
        }
    })
}
