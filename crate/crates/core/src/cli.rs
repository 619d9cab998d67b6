//! Command-line front end.
//!
//! [`run`] takes the full argument list and returns what would be printed
//! together with the exit code, so the binary is a thin wrapper and tests can
//! drive every subcommand in-process. Exit codes: 0 success, 1 domain error,
//! 2 parse or usage error.

use std::fmt::Display;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exponents::ExponentVector;
use crate::gorenstein::SeriesSpec;
use crate::graded::HomogeneousIdeal;
use crate::monomial_ideal::{Antichain, MonomialIdeal};
use crate::staircase::Staircase;
use crate::text::{parse_antichain, parse_ideal, parse_polynomial, ParsedIdeal, VarNames};
use crate::{oracle, Ideal, Poly, Rational, Series, Spec};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "docle", version, about = "Docles, inverse systems and Gorenstein annihilators over Q")]
struct Cli {
    /// Number of variables d.
    #[arg(long, global = true)]
    vars: Option<usize>,

    /// Comma-separated single-letter variable names, e.g. `x,y`.
    #[arg(long, global = true, value_delimiter = ',')]
    vars_names: Option<Vec<String>>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Degree bound for detecting non-artinian input.
    #[arg(long, global = true)]
    max_degree: Option<usize>,

    /// Write the result to FILE instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Exp,
    Geometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Picture {
    Ascii,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximal monomials outside a monomial ideal.
    Docle { ideal: String },
    /// Closure `I(G ∖ D(∂oc(I)))` of a monomial ideal.
    Closure { ideal: String },
    /// Saturation `(I : 𝔪^∞)`.
    Saturate { ideal: String },
    /// Unique `I = J ∩ H` with `J` saturated and `H` zero-dimensional.
    Decompose { ideal: String },
    /// Zero-dimensional monomial ideal with the given docle.
    InverseIdeal { antichain: String },
    /// Minimal generators of the inverse system, in the dual variables.
    InverseSystem { ideal: String },
    /// Intersection of two monomial ideals.
    Intersect { left: String, right: String },
    /// Hilbert function of `R/I`.
    Hilbert { ideal: String },
    /// Socle `(I:𝔪)/I`, per degree.
    Socle { ideal: String },
    /// LEX initial ideal.
    InitialIdeal { ideal: String },
    /// Minimal generators of `((x₁ᵏ,…,x_dᵏ) : p)`.
    ColonPower {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: String,
    },
    /// Minimal generators of `Ann_∂(Q)`.
    Ann {
        #[arg(long)]
        q: String,
    },
    /// The d;k-antipodal polynomial of `p`.
    Antipodal {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: String,
    },
    /// Checks `((x₁ᵏ,…,x_dᵏ) : p) = Ann_∂(p^△)`.
    GorensteinCheck {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: String,
    },
    /// Compares "the ideal is monomial" with "Ann_∂ of the socle monomial is the ideal".
    MonomialIff {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: String,
    },
    /// Checks that `f(Σ tᵢx̄ᵢ)` has annihilator exactly `I`.
    SeriesCheck {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: String,
        /// Coefficients a₀,a₁,… (rationals such as 1/2).
        #[arg(long, value_delimiter = ',', conflicts_with = "series")]
        coeffs: Option<Vec<String>>,
        #[arg(long, value_enum)]
        series: Option<SeriesKind>,
    },
    /// Picture of a monomial ideal in two variables.
    Staircase {
        ideal: String,
        #[arg(long, value_enum, default_value_t = Picture::Ascii)]
        picture: Picture,
    },
    #[command(subcommand, hide = true)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    Docle {
        ideal: String,
        /// Bounding box, e.g. `x1^4*x2^4`.
        #[arg(long = "box")]
        bound: String,
    },
    Hilbert { ideal: String },
    Ann {
        #[arg(long)]
        q: String,
        #[arg(long)]
        max_deg: Option<usize>,
    },
    Colon {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: String,
    },
}

/// Everything a single invocation produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliOutput {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CliOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let body = match cli.format {
                Format::Text => report.text,
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("schema".into(), json!(SCHEMA_VERSION));
                    obj.insert("command".into(), json!(report.command));
                    if let Value::Object(fields) = report.json {
                        obj.extend(fields);
                    }
                    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
                    s.push('\n');
                    s
                }
            };
            match &cli.out {
                Some(path) => match std::fs::write(path, body) {
                    Ok(()) => CliOutput {
                        code: 0,
                        stdout: String::new(),
                        stderr: String::new(),
                    },
                    Err(e) => CliOutput {
                        code: 1,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
                None => CliOutput {
                    code: 0,
                    stdout: body,
                    stderr: String::new(),
                },
            }
        }
        Err(e) => CliOutput {
            code: if e.is_parse() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

struct Report {
    command: &'static str,
    text: String,
    json: Value,
}

impl Report {
    fn new(command: &'static str, text: impl Display, json: Value) -> Self {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Report { command, text, json }
    }
}

struct Context {
    dim: usize,
    input: VarNames,
    output: VarNames,
    dual: VarNames,
    max_degree: Option<usize>,
}

impl Context {
    fn new(cli: &Cli) -> Result<Self> {
        let letters = cli.vars_names.as_ref().map(|n| VarNames::letters(n)).transpose()?;
        let dim = match (cli.vars, &letters) {
            (Some(0), _) => return Err(Error::domain("--vars must be at least 1")),
            (Some(d), Some(names)) if names.len() != d => {
                return Err(Error::domain(format!(
                    "--vars {d} disagrees with {} names in --vars-names",
                    names.len()
                )))
            }
            (Some(d), _) => d,
            (None, Some(names)) if !names.is_empty() => names.len(),
            _ => return Err(Error::domain("--vars or --vars-names is required")),
        };
        let (input, output) = match letters {
            Some(names) => (names.clone(), names),
            None => (VarNames::default_letters(dim), VarNames::indexed("x", dim)),
        };
        Ok(Context {
            dim,
            input,
            output,
            dual: VarNames::indexed("t", dim),
            max_degree: cli.max_degree,
        })
    }

    fn poly(&self, text: &str) -> Result<Poly> {
        parse_polynomial(text, self.dim, &self.input)
    }

    fn parsed(&self, text: &str) -> Result<ParsedIdeal<Rational>> {
        parse_ideal(text, self.dim, &self.input)
    }

    fn monomial(&self, text: &str) -> Result<MonomialIdeal> {
        self.parsed(text)?.into_monomial()
    }

    fn homogeneous(&self, text: &str) -> Result<Ideal> {
        let ideal = self.parsed(text)?.into_homogeneous();
        Ok(self.cutoff(ideal))
    }

    fn cutoff(&self, ideal: Ideal) -> Ideal {
        match self.max_degree {
            Some(c) => ideal.with_degree_cutoff(c),
            None => ideal,
        }
    }

    fn spec(&self, k: u32, p: &str) -> Result<Spec> {
        Spec::new(k, &self.poly(p)?)
    }

    fn ideal_str(&self, i: &MonomialIdeal) -> String {
        i.display_with(&self.output).to_string()
    }

    fn antichain_str(&self, a: &Antichain) -> String {
        a.display_with(&self.output).to_string()
    }

    fn poly_str(&self, p: &Poly) -> String {
        p.display_with(&self.output).to_string()
    }

    fn dual_str(&self, p: &Poly) -> String {
        p.display_with(&self.dual).to_string()
    }

    fn gens_str(&self, gens: &[Poly]) -> String {
        let inner: Vec<_> = gens.iter().map(|g| self.poly_str(g)).collect();
        if inner.is_empty() {
            "(0)".to_string()
        } else {
            format!("({})", inner.join(", "))
        }
    }

    fn mono_str(&self, m: &ExponentVector) -> String {
        m.display_with(&self.output).to_string()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let cx = Context::new(cli)?;
    Ok(match &cli.command {
        Command::Docle { ideal } => {
            let d = cx.monomial(ideal)?.docle()?;
            let s = cx.antichain_str(&d);
            Report::new("docle", &s, json!({ "docle": s, "elems": d.elems() }))
        }
        Command::Closure { ideal } => {
            let c = cx.monomial(ideal)?.closure();
            let s = if c.whole_poset {
                "whole poset".to_string()
            } else {
                cx.ideal_str(&c.ideal)
            };
            Report::new(
                "closure",
                &s,
                json!({ "closure": cx.ideal_str(&c.ideal), "whole_poset": c.whole_poset }),
            )
        }
        Command::Saturate { ideal } => {
            let s = cx.ideal_str(&cx.monomial(ideal)?.saturate()?);
            Report::new("saturate", &s, json!({ "saturation": s }))
        }
        Command::Decompose { ideal } => {
            let (j, h) = cx.monomial(ideal)?.decompose()?;
            let (j, h) = (cx.ideal_str(&j), cx.ideal_str(&h));
            Report::new("decompose", format!("J = {j}\nH = {h}"), json!({ "J": j, "H": h }))
        }
        Command::InverseIdeal { antichain } => {
            let a = parse_antichain(antichain, cx.dim, &cx.input)?;
            let s = cx.ideal_str(&MonomialIdeal::inverse_ideal(&a)?);
            Report::new("inverse-ideal", &s, json!({ "ideal": s }))
        }
        Command::InverseSystem { ideal } => {
            let gens = cx.homogeneous(ideal)?.inverse_system()?;
            let list: Vec<String> = gens.iter().map(|g| cx.dual_str(g)).collect();
            let text = format!("{{{}}}", list.join(", "));
            Report::new("inverse-system", text, json!({ "generators": list }))
        }
        Command::Intersect { left, right } => {
            let s = cx.ideal_str(&cx.monomial(left)?.intersect(&cx.monomial(right)?)?);
            Report::new("intersect", &s, json!({ "intersection": s }))
        }
        Command::Hilbert { ideal } => {
            let h = cx.homogeneous(ideal)?.hilbert_function()?;
            let total: usize = h.iter().sum();
            Report::new(
                "hilbert",
                format!("{h:?}\ndim = {total}"),
                json!({ "hilbert": h, "dimension": total }),
            )
        }
        Command::Socle { ideal } => {
            let comps = cx.homogeneous(ideal)?.socle()?;
            let mut text = String::new();
            let mut arr = Vec::new();
            for c in &comps {
                let basis: Vec<String> = c.basis.iter().map(|b| cx.poly_str(b)).collect();
                text.push_str(&format!("degree {}: {}\n", c.degree, basis.join(", ")));
                arr.push(json!({ "degree": c.degree, "basis": basis }));
            }
            let dim: usize = comps.iter().map(|c| c.basis.len()).sum();
            text.push_str(&format!("socle dimension = {dim}"));
            Report::new("socle", text, json!({ "components": arr, "dimension": dim }))
        }
        Command::InitialIdeal { ideal } => {
            let s = cx.ideal_str(&cx.homogeneous(ideal)?.initial_monomials()?);
            Report::new("initial-ideal", &s, json!({ "initial_ideal": s }))
        }
        Command::ColonPower { k, p } => {
            let i = HomogeneousIdeal::colon_power_ideal(*k, &cx.poly(p)?)?;
            let s = cx.gens_str(i.generators());
            Report::new("colon-power", &s, json!({ "ideal": s }))
        }
        Command::Ann { q } => {
            let i = HomogeneousIdeal::ann_partial(&cx.poly(q)?)?;
            let s = cx.gens_str(i.generators());
            Report::new("ann", &s, json!({ "ideal": s }))
        }
        Command::Antipodal { k, p } => {
            let s = cx.dual_str(&cx.spec(*k, p)?.antipodal());
            Report::new("antipodal", &s, json!({ "antipodal": s }))
        }
        Command::GorensteinCheck { k, p } => {
            let spec = cx.spec(*k, p)?;
            let ok = spec.verify_gorenstein_ann()?;
            let anti = cx.dual_str(&spec.antipodal());
            let ideal = cx.gens_str(spec.ideal().generators());
            Report::new(
                "gorenstein-check",
                format!("I = {ideal}\nantipodal = {anti}\nI = Ann(antipodal): {}", yes_no(ok)),
                json!({ "ideal": ideal, "antipodal": anti, "holds": ok }),
            )
        }
        Command::MonomialIff { k, p } => {
            let r = cx.spec(*k, p)?.monomial_iff_test()?;
            let soc = cx.mono_str(&r.socle_monomial);
            Report::new(
                "monomial-iff",
                format!(
                    "socle monomial = {soc}\nmonomial ideal: {}\nAnn(socle monomial) = I: {}\nagree: {}",
                    yes_no(r.is_monomial_ideal),
                    yes_no(r.ann_of_socle_equals_ideal),
                    yes_no(r.agree())
                ),
                json!({
                    "socle_monomial": soc,
                    "is_monomial_ideal": r.is_monomial_ideal,
                    "ann_of_socle_equals_ideal": r.ann_of_socle_equals_ideal,
                    "agree": r.agree(),
                }),
            )
        }
        Command::SeriesCheck { k, p, coeffs, series } => {
            let spec = cx.spec(*k, p)?;
            let f: Series = match (coeffs, series) {
                (Some(list), _) => SeriesSpec::from_coeffs(
                    list.iter().map(|c| parse_rational(c)).collect::<Result<_>>()?,
                )?,
                (None, Some(SeriesKind::Exp)) => SeriesSpec::exp(spec.top_degree()),
                (None, Some(SeriesKind::Geometric)) | (None, None) => SeriesSpec::geometric(spec.top_degree()),
            };
            let r = spec.series_annihilator_check(&f)?;
            Report::new(
                "series-check",
                format!(
                    "M = {}\nannihilator equals I in every degree: {}\npower nonzero for n <= M: {}\npower zero at n = M+1: {}\npassed: {}",
                    spec.top_degree(),
                    yes_no(r.kernels_match),
                    yes_no(r.nonzero_through_top),
                    yes_no(r.vanishes_above_top),
                    yes_no(r.passed())
                ),
                json!({
                    "M": spec.top_degree(),
                    "kernels_match": r.kernels_match,
                    "nonzero_through_top": r.nonzero_through_top,
                    "vanishes_above_top": r.vanishes_above_top,
                    "passed": r.passed(),
                }),
            )
        }
        Command::Staircase { ideal, picture } => {
            let s = Staircase::new(&cx.monomial(ideal)?)?;
            let body = match picture {
                Picture::Ascii => s.to_ascii(),
                Picture::Svg => s.to_svg(20),
            };
            Report::new("staircase", &body, json!({ "picture": body }))
        }
        Command::Oracle(cmd) => oracle_command(&cx, cmd)?,
    })
}

fn oracle_command(cx: &Context, cmd: &OracleCommand) -> Result<Report> {
    Ok(match cmd {
        OracleCommand::Docle { ideal, bound } => {
            let bound = crate::text::parse_monomial(bound, cx.dim, &cx.input)?;
            let d = oracle::brute_docle(&cx.monomial(ideal)?, &bound)?;
            let s = cx.antichain_str(&d);
            Report::new("oracle-docle", &s, json!({ "docle": s }))
        }
        OracleCommand::Hilbert { ideal } => {
            let gens = cx.homogeneous(ideal)?.generators().to_vec();
            let h = oracle::brute_hilbert(&gens, cx.max_degree.unwrap_or(oracle::MAX_DEGREE))?;
            Report::new("oracle-hilbert", format!("{h:?}"), json!({ "hilbert": h }))
        }
        OracleCommand::Ann { q, max_deg } => {
            let q = cx.poly(q)?;
            let deg = q.degree().unwrap_or(0);
            let ann = oracle::brute_ann(&q, max_deg.unwrap_or(deg + 1))?;
            let dims: Vec<usize> = ann.iter().map(|a| a.kernel_dim).collect();
            Report::new("oracle-ann", format!("{dims:?}"), json!({ "kernel_dims": dims }))
        }
        OracleCommand::Colon { k, p } => {
            let h = oracle::brute_colon_hilbert(*k, &cx.poly(p)?)?;
            Report::new("oracle-colon", format!("{h:?}"), json!({ "hilbert": h }))
        }
    })
}

fn parse_rational(text: &str) -> Result<Rational> {
    let p: Poly = parse_polynomial(text.trim(), 1, &VarNames::indexed("z", 1))?;
    let value = match p.terms().next() {
        None => Ok(Rational::from_integer(0.into())),
        Some((e, c)) if p.num_terms() == 1 && e.is_zero() => Ok(c.clone()),
        _ => Err(Error::syntax(0, format!("`{text}` is not a rational number"))),
    };
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> CliOutput {
        run(std::iter::once("docle").chain(args.iter().copied()))
    }

    #[test]
    fn antipodal_fixture() {
        let out = cli(&["antipodal", "--vars", "2", "--k", "10", "--p", "y^6+x^3*y^3+x^5*y"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "220*t1^9*t2^3 + 924*t1^6*t2^6 + 495*t1^4*t2^8\n");
    }

    #[test]
    fn decompose_json() {
        let out = cli(&["decompose", "--vars", "2", "--format", "json", "(x^2, x*y)"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["J"], "(x1)");
        assert_eq!(v["H"], "(x1^2, x2)");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cli(&["docle", "--vars", "2", "(x^3,"]).code, 2);
        assert_eq!(cli(&["docle", "--vars", "2", "(x^0)"]).code, 1);
        assert_eq!(cli(&["docle", "(x)"]).code, 1);
        assert_eq!(cli(&["frobnicate"]).code, 2);
        assert_eq!(cli(&["--help"]).code, 0);
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-3").unwrap(), Rational::from_integer((-3).into()));
        assert!(parse_rational("z").is_err());
    }
}
