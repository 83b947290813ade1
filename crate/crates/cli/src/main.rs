use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linkdet::document::DocumentError;
use linkdet::fh::{self, Restriction, SpectrumOptions, DEFAULT_LIMIT};
use linkdet::kauffman::det_via_state_sum;
use linkdet::symmetry::{
    analyze_involution, check_even_component_determinant, check_parity_law,
    is_centrally_symmetric_presentation, Action,
};
use linkdet::{fixtures, Error, GraphDocument, SignedMultigraph};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "linkdet",
    version,
    about = "Link determinants from signed plane Tait graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on the number of edges for exponential sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of the link presented by the graph and its signs.
    Det {
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// FH polynomial in multilinear normal form.
    Poly {
        #[arg(long, value_enum, default_value_t = Form::Explicit)]
        form: Form,
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Distribution of |FH(u)| over all sign vectors u.
    Spectrum {
        #[arg(long, value_enum, default_value_t = FirstBit::None)]
        restrict_first_bit: FirstBit,
        /// Also report the distribution of signed values.
        #[arg(long)]
        signed: bool,
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Number of link components traced through the medial map.
    Components {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Analyse the document's involution and check the parity and determinant predicates.
    Symmetry {
        input: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Trees,
    Fh,
    Bracket,
    Matrix,
    All,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_possible_value().expect("no skipped variants");
        f.write_str(s.get_name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    Explicit,
    Recursive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FirstBit {
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
    None,
}

enum Failure {
    Parse(String),
    Precondition(String),
    Limit(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Limit(_) => 4,
            Failure::Mismatch(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m)
            | Failure::Precondition(m)
            | Failure::Limit(m)
            | Failure::Mismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::LimitExceeded { .. } => {
                Failure::Limit(format!("{msg}; raise it with --limit N"))
            }
            Error::Disconnected | Error::Precondition(_) | Error::ContractLoop(_) => {
                Failure::Precondition(msg)
            }
            _ => Failure::Parse(msg),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Graph(g) => g.into(),
            DocumentError::MissingBlock(_) => Failure::Precondition(e.to_string()),
            _ => Failure::Parse(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn load(input: &str) -> Result<GraphDocument, Failure> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return fixtures::builtin(name).ok_or_else(|| {
            Failure::Parse(format!(
                "unknown builtin `{name}` (available: {})",
                fixtures::BUILTIN_NAMES.join(", ")
            ))
        });
    }
    let path = PathBuf::from(input);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(GraphDocument::parse(&text)?)
}

fn connected_graph(doc: &GraphDocument) -> Result<SignedMultigraph, Failure> {
    let g = doc.graph()?;
    g.require_connected()?;
    Ok(g)
}

fn number(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn det_by(method: Method, g: &SignedMultigraph, limit: usize) -> Result<BigInt, Failure> {
    let s = g.signature();
    let v = match method {
        Method::Trees => g.signed_tree_count(&s)?,
        Method::Fh => fh::det_via_fh(g, &s)?,
        Method::Bracket => det_via_state_sum(g, &s, limit)?,
        Method::Matrix => g.matrix_tree_signed(&s)?,
        Method::All => unreachable!("dispatched per method"),
    };
    Ok(BigInt::from(v.magnitude().clone()))
}

fn cmd_det(method: Method, input: &str, c: &Common) -> Outcome {
    let g = connected_graph(&load(input)?)?;
    let methods = match method {
        Method::All => vec![Method::Trees, Method::Fh, Method::Bracket, Method::Matrix],
        m => vec![m],
    };
    let mut results = Vec::new();
    for m in methods {
        results.push((m, det_by(m, &g, c.limit)?));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);

    if c.json {
        let per: serde_json::Map<String, Value> = results
            .iter()
            .map(|(m, v)| (m.to_string(), number(v)))
            .collect();
        let mut out = json!({ "methods": per, "agree": agree });
        if agree {
            out["det"] = number(&results[0].1);
        }
        println!("{out}");
    } else if results.len() == 1 {
        println!("{}", results[0].1);
    } else {
        for (m, v) in &results {
            println!("{m}: {v}");
        }
    }
    if agree {
        Ok(())
    } else {
        let detail: Vec<String> = results.iter().map(|(m, v)| format!("{m}={v}")).collect();
        Err(Failure::Mismatch(format!(
            "methods disagree: {}",
            detail.join(", ")
        )))
    }
}

fn cmd_poly(form: Form, input: &str, c: &Common) -> Outcome {
    let g = connected_graph(&load(input)?)?;
    let p = match form {
        Form::Explicit => fh::fh_explicit(&g)?,
        Form::Recursive => fh::fh_recursive(&g)?,
    };
    if c.json {
        println!("{}", p.to_json());
    } else {
        println!("{p}");
    }
    Ok(())
}

fn cmd_spectrum(first: FirstBit, signed: bool, input: &str, c: &Common) -> Outcome {
    let g = connected_graph(&load(input)?)?;
    let restriction = match first {
        FirstBit::None => None,
        FirstBit::Zero => Some(Restriction {
            coordinate: 0,
            value: false,
        }),
        FirstBit::One => Some(Restriction {
            coordinate: 0,
            value: true,
        }),
    };
    let opts = SpectrumOptions {
        limit: c.limit,
        restriction,
        signed,
    };
    let report = fh::spectrum(&g, &opts)?;
    if c.json {
        println!("{}", report.to_json());
        return Ok(());
    }
    for (value, count) in &report.counts {
        println!("{value}\t{count}");
    }
    if let Some(signed) = &report.signed {
        println!("signed:");
        for (value, count) in signed {
            println!("{value}\t{count}");
        }
    }
    Ok(())
}

fn cmd_components(input: &str, c: &Common) -> Outcome {
    let map = load(input)?.plane_map()?;
    let k = map.link_components();
    if c.json {
        println!("{}", json!({ "components": k }));
    } else {
        println!("{k}");
    }
    Ok(())
}

fn cmd_symmetry(input: &str, c: &Common) -> Outcome {
    let doc = load(input)?;
    let map = doc.plane_map()?;
    let inv = doc.involution(&map)?;
    let g = doc.graph()?;
    let medial = map.medial();
    let report = analyze_involution(&medial, &inv);
    let symmetric = is_centrally_symmetric_presentation(&medial, &inv);

    let parity = check_parity_law(&medial, &inv).ok();
    let even = (symmetric
        && report.component_count.is_multiple_of(2)
        && report.face_color_action == Action::Preserving)
        .then(|| check_even_component_determinant(&g, &medial, &inv))
        .transpose()?;

    if c.json {
        let out = json!({
            "report": report,
            "centrally_symmetric": symmetric,
            "parity_law": parity,
            "even_component_determinant": even,
        });
        println!("{out}");
        return Ok(());
    }
    let r = &report;
    println!("involution: {}", r.is_involution);
    println!("automorphism: {}", r.is_automorphism);
    println!("orientation: {:?}", r.orientation);
    println!("fixed-point-free: {}", r.fixed_point_free);
    println!("sign action: {:?}", r.sign_action);
    println!("colour action: {:?}", r.face_color_action);
    println!("components: {}", r.component_count);
    println!("black faces: {}", r.black_face_count);
    println!("centrally symmetric: {symmetric}");
    if r.dichotomy_violation {
        println!("warning: fixed-point-free action with mixed colour action");
    }
    match &parity {
        Some(p) => println!("parity law: {}", verdict(p.pass)),
        None => println!("parity law: not applicable"),
    }
    match &even {
        Some(e) => println!(
            "even-component determinant: {} (det {}, {} trees paired)",
            verdict(e.pass),
            e.signed_tree_count,
            e.trees_checked
        ),
        None => println!("even-component determinant: not applicable"),
    }
    Ok(())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Det {
            method,
            input,
            common,
        } => cmd_det(*method, input, common),
        Command::Poly {
            form,
            input,
            common,
        } => cmd_poly(*form, input, common),
        Command::Spectrum {
            restrict_first_bit,
            signed,
            input,
            common,
        } => cmd_spectrum(*restrict_first_bit, *signed, input, common),
        Command::Components { input, common } => cmd_components(input, common),
        Command::Symmetry { input, common } => cmd_symmetry(input, common),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("linkdet: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_codes() {
        let limit = Error::LimitExceeded {
            what: "edges",
            size: 30,
            limit: 24,
        };
        assert_eq!(Failure::from(limit).code(), 4);
        assert_eq!(Failure::from(Error::Disconnected).code(), 3);
        assert_eq!(Failure::from(Error::NotSpherical { euler: 0 }).code(), 2);
        assert_eq!(
            Failure::from(DocumentError::MissingBlock("rotation")).code(),
            3
        );
        assert_eq!(Failure::from(DocumentError::Version(7)).code(), 2);
    }

    #[test]
    fn builtins_load() {
        for name in fixtures::BUILTIN_NAMES {
            assert!(load(&format!("builtin:{name}")).is_ok());
        }
        assert_eq!(load("builtin:").err().map(|f| f.code()), Some(2));
    }
}
