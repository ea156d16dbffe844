//! `nsymkit`: command-line access to the noncommutative symmetric function
//! toolkit.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 verification failure.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nsymkit_core::nsym::{self, MnMethod};
use nsymkit_core::skew::{classify, enumerate_b, SkewShape};
use nsymkit_core::tableaux::enumerate_srct;
use nsymkit_core::verify::{self, Fault, VerifyConfig};
use nsymkit_core::{Basis, Composition, Element};

const DEFAULT_MAX_DEGREE: usize = 12;

#[derive(Parser)]
#[command(name = "nsymkit", version, about = "Exact computations with noncommutative symmetric functions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Rule,
    Connected,
    Full,
    Ribbon,
}

impl From<Method> for MnMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Rule => MnMethod::Rule,
            Method::Connected => MnMethod::Connected,
            Method::Full => MnMethod::Full,
            Method::Ribbon => MnMethod::Ribbon,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutBasis {
    H,
    R,
    S,
}

impl From<OutBasis> for Basis {
    fn from(b: OutBasis) -> Self {
        match b {
            OutBasis::H => Basis::H,
            OutBasis::R => Basis::R,
            OutBasis::S => Basis::S,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Expand Psi_n * s_alpha in the noncommutative Schur basis.
    Mn {
        #[arg(long)]
        n: usize,
        /// Composition such as 2,1,3, or `empty`.
        #[arg(long)]
        alpha: Composition,
        #[arg(long, value_enum, default_value_t = Method::Rule)]
        method: Method,
        /// Evaluate with all four methods and fail on disagreement.
        #[arg(long)]
        check: bool,
    },
    /// List the nc border strips of size n on top of alpha.
    Strips {
        #[arg(long)]
        alpha: Composition,
        #[arg(long)]
        n: usize,
        /// Only strips with no north-east column pair.
        #[arg(long)]
        only_p: bool,
    },
    /// Rewrite an element (JSON file, or - for stdin) in another basis.
    Convert {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        to: OutBasis,
    },
    /// Multiply two elements given as JSON files.
    Mul {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t = OutBasis::S)]
        out_basis: OutBasis,
    },
    /// Standard reverse composition tableaux of shape alpha.
    Srct {
        #[arg(long)]
        alpha: Composition,
        /// Print only the number of tableaux.
        #[arg(long, conflicts_with = "descents")]
        count: bool,
        /// Print the nonzero descent-composition counts.
        #[arg(long)]
        descents: bool,
    },
    /// Run the identity checks over all |alpha| <= max-size, n <= max-n.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Randomized trials per commutation check.
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<nsymkit_core::Error> for Failure {
    fn from(e: nsymkit_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn max_degree() -> Result<usize, Failure> {
    match std::env::var("NSYMKIT_MAX_DEGREE") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Usage(format!("NSYMKIT_MAX_DEGREE must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn check_degree(degree: usize) -> Result<(), Failure> {
    let cap = max_degree()?;
    if degree > cap {
        return Err(Failure::Usage(format!(
            "degree {degree} exceeds the cap {cap} (raise NSYMKIT_MAX_DEGREE to allow it)"
        )));
    }
    Ok(())
}

fn positive_n(n: usize) -> Result<(), Failure> {
    if n == 0 {
        Err(Failure::Usage("--n must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn read_element(path: &str) -> Result<Element, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?;
    }
    Ok(Element::from_json_str(&text)?)
}

fn element_text(e: &Element) -> String {
    let mut out = String::new();
    if e.is_zero() {
        out.push_str("0\n");
    }
    for (alpha, c) in e.terms() {
        let sign = if c.sign() == num_bigint::Sign::Minus { "" } else { "+" };
        let _ = writeln!(out, "{sign}{c} {}_{alpha}", e.basis().symbol());
    }
    out
}

fn render_element(e: &Element, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", e.to_json()),
        Format::Text => element_text(e),
    }
}

fn diagram(shape: &SkewShape) -> String {
    let mut out = String::new();
    for (r, &p) in shape.outer.parts().iter().enumerate() {
        let row: String = (1..=p).map(|c| if shape.boxes.contains(&(r + 1, c)) { '#' } else { '.' }).collect();
        let _ = writeln!(out, "    {row}");
    }
    out
}

fn set_text(s: &Option<std::collections::BTreeSet<usize>>) -> String {
    match s {
        Some(s) => format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")),
        None => "-".into(),
    }
}

fn run_mn(n: usize, alpha: &Composition, method: Method, check: bool, format: Format) -> Result<String, Failure> {
    positive_n(n)?;
    check_degree(alpha.size() + n)?;
    let result = nsym::mn(method.into(), n, alpha)?;
    if check {
        for other in MnMethod::ALL {
            let value = nsym::mn(other, n, alpha)?;
            if value != result {
                return Err(Failure::Verification(format!(
                    "methods disagree on Psi_{n} * s_{alpha}: {} gives {result}, {other} gives {value}",
                    MnMethod::from(method)
                )));
            }
        }
        eprintln!("check: rule, connected, full and ribbon agree");
    }
    Ok(render_element(&result, format))
}

fn run_strips(alpha: &Composition, n: usize, only_p: bool, format: Format) -> Result<String, Failure> {
    positive_n(n)?;
    check_degree(alpha.size() + n)?;
    let mut rows = Vec::new();
    for (beta, shape) in enumerate_b(alpha, n)? {
        let st = classify(&shape);
        let in_p = st.ne.as_ref().is_some_and(|ne| ne.is_empty());
        if only_p && !in_p {
            continue;
        }
        let height = st.height.expect("nc border strips have a height");
        let coeff: i64 = match (in_p, height % 2) {
            (false, _) => 0,
            (true, 0) => 1,
            (true, _) => -1,
        };
        rows.push((beta, shape, st, coeff));
    }
    Ok(match format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(_, shape, st, coeff)| {
                    let mut v = shape.to_json();
                    let obj = v.as_object_mut().expect("shapes serialize to objects");
                    obj.insert("e".into(), json!(st.e));
                    obj.insert("se".into(), json!(st.se));
                    obj.insert("ne".into(), json!(st.ne));
                    obj.insert("height".into(), json!(st.height));
                    obj.insert("coeff".into(), json!(coeff));
                    v
                })
                .collect();
            format!("{}\n", Value::Array(items))
        }
        Format::Text => {
            let mut out = String::new();
            for (beta, shape, st, coeff) in &rows {
                let _ = writeln!(
                    out,
                    "{beta}  E={} SE={} NE={} ht={} coeff={coeff:+}",
                    set_text(&st.e),
                    set_text(&st.se),
                    set_text(&st.ne),
                    st.height.unwrap_or(0)
                );
                out.push_str(&diagram(shape));
            }
            let _ = writeln!(out, "{} strips", rows.len());
            out
        }
    })
}

fn run_srct(alpha: &Composition, count: bool, descents: bool, format: Format) -> Result<String, Failure> {
    check_degree(alpha.size())?;
    if descents {
        let row = nsym::d_matrix_cached(alpha.size()).row(alpha);
        return Ok(match format {
            Format::Json => {
                let terms: Vec<Value> = row.iter().map(|(b, k)| json!({ "comp": b, "count": k })).collect();
                format!("{}\n", json!({ "shape": alpha, "descents": terms }))
            }
            Format::Text => row.iter().map(|(b, k)| format!("{b} {k}\n")).collect(),
        });
    }
    let tableaux = enumerate_srct(alpha);
    if count {
        return Ok(match format {
            Format::Json => format!("{}\n", json!({ "shape": alpha, "count": tableaux.len() })),
            Format::Text => format!("{}\n", tableaux.len()),
        });
    }
    let mut items = Vec::new();
    let mut out = String::new();
    for f in &tableaux {
        let des = f.descent_composition()?;
        match format {
            Format::Json => {
                let mut v = f.to_json();
                v.as_object_mut().expect("fillings serialize to objects").insert("descent".into(), json!(des));
                items.push(v);
            }
            Format::Text => {
                let _ = writeln!(out, "descent composition {des}");
                out.push_str(&f.render());
                out.push('\n');
            }
        }
    }
    Ok(match format {
        Format::Json => format!("{}\n", Value::Array(items)),
        Format::Text => out,
    })
}

fn run_verify(config: VerifyConfig, format: Format) -> Result<String, Failure> {
    if config.max_size == 0 || config.max_n == 0 {
        return Err(Failure::Usage("--max-size and --max-n must be at least 1".into()));
    }
    check_degree(config.max_size + config.max_n)?;
    let report = verify::run(&config)?;
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_value(&report).expect("reports serialize")),
        Format::Text => format!("{report}\n"),
    };
    match report.first_failure() {
        None => Ok(text),
        Some(first) => {
            print!("{text}");
            Err(Failure::Verification(format!("first failing identity: {}", first.name)))
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Mn { n, alpha, method, check } => run_mn(n, &alpha, method, check, format),
        Command::Strips { alpha, n, only_p } => run_strips(&alpha, n, only_p, format),
        Command::Convert { input, to } => {
            let e = read_element(&input)?;
            check_degree(e.max_degree())?;
            Ok(render_element(&nsym::convert(&e, to.into())?, format))
        }
        Command::Mul { left, right, out_basis } => {
            let (a, b) = (read_element(&left)?, read_element(&right)?);
            check_degree(a.max_degree() + b.max_degree())?;
            Ok(render_element(&nsym::mul(&a, &b, out_basis.into())?, format))
        }
        Command::Srct { alpha, count, descents } => run_srct(&alpha, count, descents, format),
        Command::Verify { max_size, max_n, seed, trials, inject_fault } => {
            let fault = inject_fault.then_some(Fault::FlipRuleSign);
            run_verify(VerifyConfig { max_size, max_n, seed, trials, fault }, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
