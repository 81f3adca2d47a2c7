use std::fmt::Write as _;
use std::io::Read as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rncbetti_core::{
    greedy_decompose_s, greedy_trace_b, hilbert_numerator, hilbert_polynomial, limit_vector, phi,
    phi_representative, pure_betti_b, pure_betti_s, tot_membership, tot_rays, BettiError, Decomposition,
    Family, PartialDecomposition, PureTypeB, PureTypeS, Rational, SDecomposition, TotalVector,
};
use rncbetti_resolver::{
    minimal_resolution, parse_ideal, random_forms, resolve_over_b, GradedIdeal, ResolutionS, ResolverError,
    Variables,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::format::{parse_table, render, render_m2_body, Format, FormatError, TableDocument};

#[derive(Debug, Parser)]
#[command(name = "rncbetti", version, about = "Betti tables over rational normal curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value = "m2")]
    pub format: Format,
    /// Last column shown for B-tables.
    #[arg(long, default_value_t = 5)]
    pub cols: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pure B-table of type (D0, D1, D2; L).
    Pure {
        #[arg(long)]
        d: u32,
        #[arg(num_args = 3, allow_negative_numbers = true, value_names = ["D0", "D1", "D2"])]
        degrees: Vec<i64>,
        #[arg(long)]
        ell: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Pure S-table of type (E0, E1, E2).
    PureS {
        #[arg(num_args = 3, allow_negative_numbers = true, value_names = ["E0", "E1", "E2"])]
        degrees: Vec<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Greedy decomposition of a B-table along a chain of pure tables.
    Decompose {
        #[arg(long)]
        d: u32,
        /// Table file, or - for standard input.
        #[arg(long)]
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// Greedy decomposition of an S-table.
    DecomposeS {
        #[arg(long)]
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// Minimal resolution of S/I over S = k[x,y].
    Resolve {
        /// Comma-separated homogeneous generators in x and y.
        #[arg(long, required_unless_present = "random_degree")]
        ideal: Option<String>,
        /// Use COUNT random forms of this degree instead of --ideal.
        #[arg(long, conflicts_with = "ideal", requires = "count")]
        random_degree: Option<u32>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also print the generators and syzygies.
        #[arg(long)]
        maps: bool,
        #[command(flatten)]
        out: Output,
    },
    /// B-table of B/I, computed through S.
    Bresolve {
        #[arg(long)]
        d: u32,
        /// Comma-separated generators in a0..ad (or a, b, c, d for d <= 3).
        #[arg(long)]
        ideal_b: String,
        #[arg(long)]
        decompose: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Class invariants of a B-table and its canonical S-representative.
    Phi {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// The cone of total Betti numbers.
    Totcone {
        #[command(subcommand)]
        action: TotconeAction,
        #[arg(long, global = true, default_value_t = 3)]
        d: u32,
    },
    /// Hilbert numerator and Hilbert polynomial of a B-table.
    Hilbert {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        input: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum TotconeAction {
    /// Test a vector "b0,b1,b2,b3" against the four inequalities.
    Check {
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// The four extremal rays.
    Rays,
    /// Normalized totals of a limiting family.
    Limit { family: FamilyArg, t: u32 },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Mt,
    Nt,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{message}")]
    NotInCone { message: String, partial: Value },
    #[error("{0}")]
    NotFiniteColength(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::InvalidArgument(_) => 2,
            CliError::NotInCone { .. } => 3,
            CliError::NotFiniteColength(_) => 4,
            CliError::Other(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let kind = match self {
            CliError::Parse(_) => "ParseError",
            CliError::NotInCone { .. } => "NotInCone",
            CliError::NotFiniteColength(_) => "NotFiniteColength",
            CliError::InvalidArgument(_) => "InvalidArgument",
            CliError::Other(_) => "Error",
        };
        let mut obj = json!({ "error": kind, "message": self.to_string(), "exit_code": self.exit_code() });
        if let CliError::NotInCone { partial, .. } = self {
            obj["partial"] = partial.clone();
        }
        obj
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Betti(b) => b.into(),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<BettiError> for CliError {
    fn from(e: BettiError) -> Self {
        let message = e.to_string();
        match e {
            BettiError::NotInCone { partial, .. } => {
                let partial = match *partial {
                    PartialDecomposition::B(dec) => decomposition_json(&dec),
                    PartialDecomposition::S(dec) => s_decomposition_json(&dec),
                };
                CliError::NotInCone { message, partial }
            }
            BettiError::NotFiniteLength { .. } => CliError::NotFiniteColength(message),
            BettiError::InvalidPureType(_)
            | BettiError::ColumnOutOfRange { .. }
            | BettiError::DegreeTooSmall { .. }
            | BettiError::MismatchedDegree { .. } => CliError::InvalidArgument(message),
            _ => CliError::Other(message),
        }
    }
}

impl From<ResolverError> for CliError {
    fn from(e: ResolverError) -> Self {
        let message = e.to_string();
        match e {
            ResolverError::Betti(b) => b.into(),
            ResolverError::Syntax { .. }
            | ResolverError::UnknownVariable { .. }
            | ResolverError::WrongVariableCount { .. }
            | ResolverError::NotHomogeneous(_) => CliError::Parse(message),
            ResolverError::ZeroIdeal | ResolverError::NotFiniteColength => CliError::NotFiniteColength(message),
            ResolverError::UnsupportedShape { .. } => CliError::Other(message),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Other(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Other(format!("reading {path}: {e}")))
    }
}

fn three(degrees: &[i64]) -> Result<[i64; 3]> {
    <[i64; 3]>::try_from(degrees)
        .map_err(|_| CliError::InvalidArgument(format!("expected 3 degrees, got {}", degrees.len())))
}

fn type_json(p: &PureTypeB) -> Value {
    let [d0, d1, d2] = p.degrees();
    json!({ "degrees": [d0, d1, d2], "ell": p.ell() })
}

fn decomposition_json(dec: &Decomposition) -> Value {
    json!({
        "d": dec.d,
        "terms": dec.terms.iter().map(|(c, p)| json!({ "coefficient": c.to_string(), "type": type_json(p) })).collect::<Vec<_>>(),
        "remainder": serde_json::from_str::<Value>(&render(&TableDocument::from_b(&dec.remainder), Format::Json, 0)).expect("valid json"),
    })
}

fn s_decomposition_json(dec: &SDecomposition) -> Value {
    json!({
        "terms": dec.terms.iter().map(|(c, p)| json!({ "coefficient": c.to_string(), "type": p.degrees() })).collect::<Vec<_>>(),
        "remainder": serde_json::from_str::<Value>(&render(&TableDocument::from_s(&dec.remainder), Format::Json, 0)).expect("valid json"),
    })
}

fn s_decomposition_text(dec: &SDecomposition) -> String {
    let terms: Vec<String> = dec.terms.iter().map(|(c, p)| format!("{c}*{p}")).collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Renders the greedy trace of a B-table: every subtraction followed by the
/// table it leaves.
fn decompose_b_text(doc: TableDocument, d: u32, out: &Output) -> Result<String> {
    let table = doc.to_b(Some(d))?;
    let (dec, steps) = greedy_trace_b(&table)?;
    match out.format {
        Format::Json => {
            let mut v = decomposition_json(&dec);
            v["steps"] = steps
                .iter()
                .map(|s| {
                    json!({
                        "coefficient": s.coefficient.to_string(),
                        "type": type_json(&s.pure_type),
                        "remainder": serde_json::from_str::<Value>(&render(&TableDocument::from_b(&s.remainder), Format::Json, 0)).expect("valid json"),
                    })
                })
                .collect();
            Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")))
        }
        Format::M2 => {
            let mut s = String::new();
            for (n, step) in steps.iter().enumerate() {
                writeln!(s, "step {}: subtract {} * {}", n + 1, step.coefficient, step.pure_type).unwrap();
                s.push_str(&render_m2_body(&TableDocument::from_b(&step.remainder), out.cols));
            }
            writeln!(s, "decomposition: {dec}").unwrap();
            Ok(s)
        }
    }
}

fn ideal_from_args(ideal: &Option<String>, random_degree: Option<u32>, count: Option<usize>, seed: u64) -> Result<GradedIdeal> {
    if let Some(degree) = random_degree {
        let count = count.unwrap_or(1);
        if degree == 0 || count == 0 {
            return Err(CliError::InvalidArgument("random forms need degree >= 1 and count >= 1".into()));
        }
        return Ok(random_forms(degree, count, seed));
    }
    let src = ideal.as_deref().unwrap_or_default();
    let gens = parse_ideal(src, &Variables::xy())?
        .iter()
        .map(|p| p.to_poly2())
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(GradedIdeal::new(gens)?)
}

fn maps_text(res: &ResolutionS) -> String {
    let mut s = String::new();
    let gens: Vec<String> = res.generators.iter().map(|g| g.to_string()).collect();
    writeln!(s, "## generators: [{}]", gens.join(", ")).unwrap();
    for (col, deg) in res.syzygies.iter().zip(&res.syzygy_degrees) {
        let entries: Vec<String> = col.iter().map(|p| p.to_string()).collect();
        writeln!(s, "## syzygy in degree {deg}: [{}]", entries.join(", ")).unwrap();
    }
    s
}

fn parse_vector(src: &str, d: u32) -> Result<TotalVector> {
    let parts: Vec<&str> = src.split(',').map(str::trim).collect();
    let values = parts
        .iter()
        .map(|p| {
            let (num, den) = p.split_once('/').unwrap_or((p, "1"));
            let num: num_bigint::BigInt = num.parse().map_err(|_| CliError::Parse(format!("bad number '{p}'")))?;
            let den: num_bigint::BigInt = den.parse().map_err(|_| CliError::Parse(format!("bad number '{p}'")))?;
            if den == num_bigint::BigInt::from(0) {
                return Err(CliError::Parse(format!("bad number '{p}'")));
            }
            Ok(Rational::new(num, den))
        })
        .collect::<Result<Vec<_>>>()?;
    let b: [Rational; 4] = values
        .try_into()
        .map_err(|_| CliError::Parse(format!("expected four entries in '{src}'")))?;
    Ok(TotalVector::new(d, b))
}

/// Runs one command. `invocation` is recorded in the provenance of every
/// table printed, and heads any other text output.
pub fn run(cli: &Cli, invocation: &str) -> Result<String> {
    let out = execute(cli, invocation)?;
    if out.starts_with('#') || out.starts_with('{') {
        Ok(out)
    } else {
        Ok(format!("# cmd: {invocation}\n{out}"))
    }
}

fn execute(cli: &Cli, invocation: &str) -> Result<String> {
    let tag = |doc: TableDocument| doc.with("cmd", invocation);
    match &cli.command {
        Command::Pure { d, degrees, ell, out } => {
            let [d0, d1, d2] = three(degrees)?;
            let t = pure_betti_b(&PureTypeB::new(*d, d0, d1, d2, *ell)?);
            Ok(render(&tag(TableDocument::from_b(&t)), out.format, out.cols))
        }
        Command::PureS { degrees, out } => {
            let [e0, e1, e2] = three(degrees)?;
            let t = pure_betti_s(&PureTypeS::new(e0, e1, e2)?);
            Ok(render(&tag(TableDocument::from_s(&t)), out.format, out.cols))
        }
        Command::Decompose { d, input, out } => {
            let doc = parse_table(&read_input(input)?, Some(*d))?;
            decompose_b_text(doc, *d, out)
        }
        Command::DecomposeS { input, out } => {
            let table = parse_table(&read_input(input)?, None)?.to_s()?;
            let dec = greedy_decompose_s(&table)?;
            match out.format {
                Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(&s_decomposition_json(&dec)).expect("serializable"))),
                Format::M2 => Ok(format!("decomposition: {}\n", s_decomposition_text(&dec))),
            }
        }
        Command::Resolve { ideal, random_degree, count, seed, maps, out } => {
            let gi = ideal_from_args(ideal, *random_degree, *count, *seed)?;
            let res = minimal_resolution(&gi)?;
            let mut doc = tag(TableDocument::from_s(&res.betti));
            if random_degree.is_some() {
                doc = doc.with("seed", seed.to_string());
            }
            let mut s = render(&doc, out.format, out.cols);
            if *maps {
                s.push_str(&maps_text(&res));
            }
            Ok(s)
        }
        Command::Bresolve { d, ideal_b, decompose, out } => {
            let gens = parse_ideal(ideal_b, &Variables::veronese(*d))?;
            let (_, table) = resolve_over_b(&gens, *d)?;
            let doc = tag(TableDocument::from_b(&table));
            let mut s = render(&doc, out.format, out.cols);
            if *decompose {
                s.push_str(&decompose_b_text(doc, *d, out)?);
            }
            Ok(s)
        }
        Command::Phi { d, input, out } => {
            let table = parse_table(&read_input(input)?, Some(*d))?.to_b(Some(*d))?;
            let class = phi(&table);
            let rep = phi_representative(&class)?;
            match out.format {
                Format::Json => {
                    let v = json!({
                        "d": class.d(),
                        "class": class.class_data().iter().map(|(j, (s0, s1))| json!({ "j": j, "s0": s0.to_string(), "s1": s1.to_string() })).collect::<Vec<_>>(),
                        "representative": serde_json::from_str::<Value>(&render(&TableDocument::from_s(&rep), Format::Json, 0)).expect("valid json"),
                    });
                    Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")))
                }
                Format::M2 => {
                    let mut s = String::new();
                    for (j, (s0, s1)) in class.class_data() {
                        writeln!(s, "j = {j}: s0 = {s0}, s1 = {s1}").unwrap();
                    }
                    s.push_str(&render(&tag(TableDocument::from_s(&rep)), Format::M2, out.cols));
                    Ok(s)
                }
            }
        }
        Command::Totcone { action, d } => match action {
            TotconeAction::Check { vector } => {
                let v = parse_vector(vector, *d)?;
                let m = tot_membership(&v)?;
                let slacks: Vec<String> = m.slacks.iter().map(|s| s.to_string()).collect();
                Ok(format!(
                    "vector: {v}\ninside: {}\nslacks: {}\ntight: {}\n",
                    m.inside,
                    slacks.join(", "),
                    m.tight()
                ))
            }
            TotconeAction::Rays => {
                let rays = tot_rays(*d)?;
                Ok(rays.iter().map(|r| format!("{r}\n")).collect())
            }
            TotconeAction::Limit { family, t } => {
                let fam = match family {
                    FamilyArg::Mt => Family::Mt,
                    FamilyArg::Nt => Family::Nt,
                };
                let p = fam.pure_type(*t, *d)?;
                Ok(format!("type: {p}\nlimit: {}\n", limit_vector(fam, *t, *d)?))
            }
        },
        Command::Hilbert { d, input } => {
            let table = parse_table(&read_input(input)?, Some(*d))?.to_b(Some(*d))?;
            let mut s = format!("numerator: {}\n", hilbert_numerator(&table));
            match hilbert_polynomial(&table) {
                Ok(p) => writeln!(s, "hilbert polynomial: {p}").unwrap(),
                Err(BettiError::NotFiniteLength { .. }) => {
                    writeln!(s, "hilbert polynomial: none (numerator not divisible by (1-t)^2)").unwrap()
                }
                Err(e) => return Err(e.into()),
            }
            Ok(s)
        }
    }
}

/// The command line as it would be typed, for provenance.
pub fn invocation<S: AsRef<str>>(args: &[S]) -> String {
    std::iter::once("rncbetti")
        .chain(args.iter().skip(1).map(AsRef::as_ref))
        .map(quote)
        .collect::<Vec<_>>()
        .join(" ")
}

fn quote(word: &str) -> String {
    let plain = |c: char| c.is_ascii_alphanumeric() || "-_./=,:+@%".contains(c);
    if !word.is_empty() && word.chars().all(plain) {
        word.to_string()
    } else if !word.contains(['"', '$', '`', '\\', '!']) {
        format!("\"{word}\"")
    } else {
        format!("'{}'", word.replace('\'', "'\\''"))
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<S: AsRef<str>>(args: &[S]) -> std::result::Result<String, RunError> {
    let cli = Cli::try_parse_from(args.iter().map(AsRef::as_ref)).map_err(RunError::Usage)?;
    run(&cli, &invocation(args)).map_err(RunError::Command)
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Usage(clap::Error),
    #[error(transparent)]
    Command(CliError),
}
