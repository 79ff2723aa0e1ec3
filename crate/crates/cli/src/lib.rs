//! Command-line frontend for `sqfree-core`.
//!
//! [`run`] parses arguments, reads the problem file, dispatches the
//! subcommand and returns what would be written to stdout and stderr
//! together with the exit code, so the binary and the tests share one path.

pub mod problem;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use sqfree_core::criteria::{self, Certificate, Outcome};
use sqfree_core::frobenius;
use sqfree_core::ideal_ops;
use sqfree_core::parse::parse_polynomial;
use sqfree_core::{Budget, Error, IdealPresentation, MonomialOrder, Polynomial};

pub use problem::{parse_problem, NamedIdeal, ProblemFile};

/// Environment variable holding the default pair budget.
pub const BUDGET_ENV: &str = "SQFREE_BUDGET_PAIRS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "sqfree", version, about = "Gröbner bases, Frobenius splittings and squarefree initial ideal certificates over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Problem file, or `-` for standard input.
    pub file: PathBuf,
    /// Monomial order, overriding the file: lex, grevlex, weight(w1,...,wn; tie=lex|grevlex).
    #[arg(long)]
    pub order: Option<String>,
    /// Weight vector: a name declared in the file or a literal list such as 6,24,6,3,1.
    #[arg(long)]
    pub weight: Option<String>,
    /// Critical pairs processed per Gröbner basis before giving up.
    #[arg(long, env = BUDGET_ENV)]
    pub budget_pairs: Option<u64>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Replay a produced certificate before reporting it.
    #[arg(long)]
    pub verify: bool,
    /// Ideal operand by name (repeatable). Defaults to the first ideal in the file.
    #[arg(long = "ideal")]
    pub ideals: Vec<String>,
    /// Polynomial operand: a name declared in the file or an expression (repeatable).
    #[arg(long = "poly")]
    pub polys: Vec<String>,
    /// Exponent for power, bracket-power and symbolic.
    #[arg(long)]
    pub exp: Option<u32>,
    /// Number of trace iterations for trace and star.
    #[arg(long)]
    pub iterate: Option<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Certificate JSON, bare or as emitted by a `*-cert` subcommand.
    pub file: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis.
    Gb(Common),
    /// Normal form of --poly modulo the ideal.
    Nf(Common),
    /// Minimal generators of the initial ideal.
    Initial(Common),
    /// Ideal membership of --poly.
    Member(Common),
    /// Intersection of two ideals.
    Intersect(Common),
    /// I : f (with --poly) or I : J (with a second --ideal).
    Colon(Common),
    /// I : f^∞ and the exponent at which it stabilizes.
    Saturate(Common),
    /// Ordinary power I^m.
    Power(Common),
    /// Frobenius power I^[p^e].
    BracketPower(Common),
    /// Symbolic power of a prime, using its witness from the file.
    Symbolic(Common),
    /// Weighted homogenization in S[t].
    Homogenize(Common),
    /// Flat degeneration certificate for --weight.
    Fibers(Common),
    /// Krull dimension and height from the initial ideal.
    Dim(Common),
    /// Trace map Tr(g).
    Trace(Common),
    /// (f ★ Tr)(g) for --poly f --poly g.
    Star(Common),
    /// Whether f ★ Tr splits Frobenius.
    IsSplitting(Common),
    /// Basis of I^[p] : I, or membership of --poly in it.
    Fedder(Common),
    /// Whether the ideal is compatible with f ★ Tr.
    Compatible(Common),
    /// Graded Fedder test for F-splitness of S/I.
    Fsplit(Common),
    /// Certificate that in(I) is squarefree from the Fedder colon.
    CharpCert(Common),
    /// Certificate that in(∩P) is squarefree from a symbolic power.
    SymbCert(Common),
    /// Replay a certificate.
    VerifyCert(VerifyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb(_) => "gb",
            Command::Nf(_) => "nf",
            Command::Initial(_) => "initial",
            Command::Member(_) => "member",
            Command::Intersect(_) => "intersect",
            Command::Colon(_) => "colon",
            Command::Saturate(_) => "saturate",
            Command::Power(_) => "power",
            Command::BracketPower(_) => "bracket-power",
            Command::Symbolic(_) => "symbolic",
            Command::Homogenize(_) => "homogenize",
            Command::Fibers(_) => "fibers",
            Command::Dim(_) => "dim",
            Command::Trace(_) => "trace",
            Command::Star(_) => "star",
            Command::IsSplitting(_) => "is-splitting",
            Command::Fedder(_) => "fedder",
            Command::Compatible(_) => "compatible",
            Command::Fsplit(_) => "fsplit",
            Command::CharpCert(_) => "charp-cert",
            Command::SymbCert(_) => "symb-cert",
            Command::VerifyCert(_) => "verify-cert",
        }
    }

    fn json(&self) -> bool {
        match self {
            Command::VerifyCert(v) => v.json,
            Command::Gb(c)
            | Command::Nf(c)
            | Command::Initial(c)
            | Command::Member(c)
            | Command::Intersect(c)
            | Command::Colon(c)
            | Command::Saturate(c)
            | Command::Power(c)
            | Command::BracketPower(c)
            | Command::Symbolic(c)
            | Command::Homogenize(c)
            | Command::Fibers(c)
            | Command::Dim(c)
            | Command::Trace(c)
            | Command::Star(c)
            | Command::IsSplitting(c)
            | Command::Fedder(c)
            | Command::Compatible(c)
            | Command::Fsplit(c)
            | Command::CharpCert(c)
            | Command::SymbCert(c) => c.json,
        }
    }
}

/// Failures of the frontend itself, on top of library errors.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("malformed certificate: {0}")]
    Certificate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::ResourceLimit(_)) => EXIT_RESOURCE,
            CliError::Core(Error::Internal(_)) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(Error::Parse { .. }) => "parse",
            CliError::Core(Error::ResourceLimit(_)) => "resource_limit",
            CliError::Core(Error::Internal(_)) => "internal",
            CliError::Core(Error::Inconsistent(_)) => "inconsistent",
            CliError::Core(Error::WitnessInPrime(_)) => "witness_in_prime",
            CliError::Core(_) => "input",
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
            CliError::Certificate(_) => "certificate",
        }
    }

    fn to_json(&self) -> Value {
        let mut e = Map::new();
        e.insert("kind".into(), json!(self.kind()));
        e.insert("message".into(), json!(self.to_string()));
        if let CliError::Core(Error::Parse { line, column, .. }) = self {
            e.insert("line".into(), json!(line));
            e.insert("column".into(), json!(column));
        }
        Value::Object(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// What a subcommand produced.
pub struct Report {
    pub code: i32,
    pub text: String,
    pub fields: Map<String, Value>,
}

impl Report {
    fn new(code: i32) -> Self {
        Report {
            code,
            text: String::new(),
            fields: Map::new(),
        }
    }

    fn field(mut self, key: &str, value: Value) -> Self {
        self.fields.insert(key.into(), value);
        self
    }

    fn line(mut self, s: impl AsRef<str>) -> Self {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
        self
    }

    fn list(mut self, title: &str, items: &[String]) -> Self {
        let _ = writeln!(self.text, "{title}:");
        for item in items {
            let _ = writeln!(self.text, "  {item}");
        }
        self
    }
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn status(code: i32) -> &'static str {
    match code {
        EXIT_OK => "ok",
        EXIT_NEGATIVE => "negative",
        _ => "error",
    }
}

fn envelope(command: &str, code: i32, fields: Map<String, Value>) -> String {
    let mut obj = Map::new();
    obj.insert("command".into(), json!(command));
    obj.insert("status".into(), json!(status(code)));
    obj.insert("exit_code".into(), json!(code));
    obj.insert("library_version".into(), json!(sqfree_core::VERSION));
    obj.extend(fields);
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Runs one command line (including the program name).
pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Output { code: EXIT_OK, stdout: rendered, stderr: String::new() };
            }
            if args.iter().any(|a| a == "--json") {
                let err = usage(rendered.trim().to_string());
                let mut fields = Map::new();
                fields.insert("error".into(), err.to_json());
                return Output {
                    code: EXIT_INPUT,
                    stdout: envelope("usage", EXIT_INPUT, fields),
                    stderr: String::new(),
                };
            }
            return Output { code: EXIT_INPUT, stdout: String::new(), stderr: rendered };
        }
    };
    let name = cli.command.name();
    let json = cli.command.json();
    match dispatch(&cli.command) {
        Ok(report) => Output {
            code: report.code,
            stdout: if json { envelope(name, report.code, report.fields) } else { report.text },
            stderr: String::new(),
        },
        Err(err) => {
            let code = err.exit_code();
            if json {
                let mut fields = Map::new();
                fields.insert("error".into(), err.to_json());
                Output { code, stdout: envelope(name, code, fields), stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: format!("error: {err}\n") }
            }
        }
    }
}

fn read_input(path: &Path) -> CliResult<String> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

struct Ctx<'a> {
    pf: ProblemFile,
    order: MonomialOrder,
    budget: Budget,
    args: &'a Common,
}

impl<'a> Ctx<'a> {
    fn load(args: &'a Common) -> CliResult<Self> {
        let pf = parse_problem(&read_input(&args.file)?)?;
        let order = match &args.order {
            Some(s) => {
                let o: MonomialOrder = s.parse()?;
                o.check_arity(pf.ring.nvars())?;
                o
            }
            None => pf.order.clone(),
        };
        let mut budget = Budget::default();
        if let Some(n) = args.budget_pairs {
            budget.max_pairs = n;
        }
        Ok(Ctx { pf, order, budget, args })
    }

    fn show(&self, f: &Polynomial) -> String {
        f.display_with(&self.order).to_string()
    }

    fn named_ideal(&self, name: &str) -> CliResult<IdealPresentation> {
        let ideal = self
            .pf
            .ideal(name)
            .ok_or_else(|| usage(format!("no ideal named `{name}` in the problem file")))?;
        Ok(IdealPresentation::new(&self.pf.ring, ideal.generators.clone())?.with_budget(self.budget.clone()))
    }

    /// The k-th ideal operand: from --ideal, else the k-th ideal of the file.
    fn ideal_name(&self, k: usize) -> CliResult<String> {
        if !self.args.ideals.is_empty() {
            return self
                .args
                .ideals
                .get(k)
                .cloned()
                .ok_or_else(|| usage(format!("this subcommand needs {} --ideal operands", k + 1)));
        }
        self.pf
            .ideals
            .get(k)
            .map(|i| i.name.clone())
            .ok_or_else(|| usage(format!("the problem file declares fewer than {} ideals", k + 1)))
    }

    fn ideal(&self, k: usize) -> CliResult<(String, IdealPresentation)> {
        let name = self.ideal_name(k)?;
        let ideal = self.named_ideal(&name)?;
        Ok((name, ideal))
    }

    fn poly(&self, k: usize) -> CliResult<Polynomial> {
        let src = self.args.polys.get(k).ok_or_else(|| usage(format!("this subcommand needs {} --poly operands", k + 1)))?;
        match self.pf.poly(src) {
            Some(f) => Ok(f.clone()),
            None => Ok(parse_polynomial(&self.pf.ring, src)?),
        }
    }

    fn weight(&self) -> CliResult<Vec<u32>> {
        let w = match &self.args.weight {
            Some(s) => match self.pf.weight(s) {
                Some(w) => w.to_vec(),
                None => s
                    .split(',')
                    .map(|x| x.trim().parse::<u32>().map_err(|_| usage(format!("weight `{s}` is neither a declared name nor a list of integers"))))
                    .collect::<CliResult<_>>()?,
            },
            None => self
                .pf
                .weights
                .first()
                .map(|(_, w)| w.clone())
                .ok_or_else(|| usage("no --weight given and the problem file declares none"))?,
        };
        if w.len() != self.pf.ring.nvars() || w.contains(&0) {
            return Err(Error::InvalidWeight { expected: self.pf.ring.nvars() }.into());
        }
        Ok(w)
    }

    fn exp(&self, default: Option<u32>) -> CliResult<u32> {
        self.args.exp.or(default).ok_or_else(|| usage("this subcommand needs --exp"))
    }

    fn basis(&self, i: &IdealPresentation) -> CliResult<Vec<String>> {
        Ok(i.reduced_gb(&self.order)?.display_elements())
    }

    fn ideal_report(&self, title: &str, i: &IdealPresentation) -> CliResult<Report> {
        let basis = self.basis(i)?;
        Ok(Report::new(EXIT_OK)
            .line(format!("order: {}", self.order))
            .list(title, &basis)
            .field("order", json!(self.order.to_string()))
            .field("basis", json!(basis)))
    }
}

fn verdict(b: bool) -> i32 {
    if b {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn dispatch(cmd: &Command) -> CliResult<Report> {
    let c = match cmd {
        Command::VerifyCert(v) => return verify_cert(v),
        Command::Gb(c)
        | Command::Nf(c)
        | Command::Initial(c)
        | Command::Member(c)
        | Command::Intersect(c)
        | Command::Colon(c)
        | Command::Saturate(c)
        | Command::Power(c)
        | Command::BracketPower(c)
        | Command::Symbolic(c)
        | Command::Homogenize(c)
        | Command::Fibers(c)
        | Command::Dim(c)
        | Command::Trace(c)
        | Command::Star(c)
        | Command::IsSplitting(c)
        | Command::Fedder(c)
        | Command::Compatible(c)
        | Command::Fsplit(c)
        | Command::CharpCert(c)
        | Command::SymbCert(c) => c,
    };
    let ctx = Ctx::load(c)?;
    let order = &ctx.order;
    match cmd {
        Command::Gb(_) => {
            let (name, i) = ctx.ideal(0)?;
            Ok(ctx.ideal_report("reduced Gröbner basis", &i)?.field("ideal", json!(name)))
        }
        Command::Nf(_) => {
            let (name, i) = ctx.ideal(0)?;
            let f = ctx.poly(0)?;
            let r = i.reduced_gb(order)?.normal_form(&f)?;
            Ok(Report::new(EXIT_OK)
                .line(format!("normal form: {}", ctx.show(&r)))
                .field("ideal", json!(name))
                .field("order", json!(order.to_string()))
                .field("poly", json!(ctx.show(&f)))
                .field("normal_form", json!(ctx.show(&r))))
        }
        Command::Initial(_) => {
            let (name, i) = ctx.ideal(0)?;
            let init = i.initial_ideal(order)?;
            let gens = init.display_generators(order);
            let sf = init.is_squarefree();
            Ok(Report::new(EXIT_OK)
                .line(format!("order: {order}"))
                .list("minimal generators of the initial ideal", &gens)
                .line(format!("squarefree: {sf}"))
                .field("ideal", json!(name))
                .field("order", json!(order.to_string()))
                .field("generators", json!(gens))
                .field("squarefree", json!(sf)))
        }
        Command::Member(_) => {
            let (name, i) = ctx.ideal(0)?;
            let f = ctx.poly(0)?;
            let m = i.member(&f, order)?;
            Ok(Report::new(verdict(m))
                .line(format!("member: {m}"))
                .field("ideal", json!(name))
                .field("poly", json!(ctx.show(&f)))
                .field("member", json!(m)))
        }
        Command::Intersect(_) => {
            let (a, i) = ctx.ideal(0)?;
            let (b, j) = ctx.ideal(1)?;
            let r = ideal_ops::intersect(&i, &j, order)?;
            Ok(ctx.ideal_report("intersection", &r)?.field("operands", json!([a, b])))
        }
        Command::Colon(_) => {
            let (a, i) = ctx.ideal(0)?;
            if !c.polys.is_empty() {
                let f = ctx.poly(0)?;
                let r = ideal_ops::colon(&i, &f, order)?;
                Ok(ctx.ideal_report("colon ideal", &r)?.field("operands", json!([a, ctx.show(&f)])))
            } else {
                let (b, j) = ctx.ideal(1)?;
                let r = ideal_ops::colon_ideal(&i, &j, order)?;
                Ok(ctx.ideal_report("colon ideal", &r)?.field("operands", json!([a, b])))
            }
        }
        Command::Saturate(_) => {
            let (a, i) = ctx.ideal(0)?;
            let f = ctx.poly(0)?;
            let s = ideal_ops::saturate(&i, &f, order)?;
            Ok(ctx
                .ideal_report("saturation", &s.ideal)?
                .line(format!("stabilized after {} colons", s.exponent))
                .field("operands", json!([a, ctx.show(&f)]))
                .field("exponent", json!(s.exponent)))
        }
        Command::Power(_) | Command::BracketPower(_) | Command::Symbolic(_) => {
            let (a, i) = ctx.ideal(0)?;
            let (r, m, title) = match cmd {
                Command::Power(_) => {
                    let m = ctx.exp(None)?;
                    (ideal_ops::power(&i, m)?, m, "ordinary power")
                }
                Command::BracketPower(_) => {
                    let e = ctx.exp(Some(1))?;
                    (ideal_ops::bracket_power(&i, e)?, e, "Frobenius power")
                }
                _ => {
                    let m = ctx.exp(None)?;
                    let g = ctx
                        .pf
                        .witness(&a)
                        .ok_or_else(|| usage(format!("symbolic needs a `witness {a}:` statement")))?;
                    (ideal_ops::symbolic_power_prime(&i, m, g, order)?, m, "symbolic power")
                }
            };
            Ok(ctx.ideal_report(title, &r)?.field("ideal", json!(a)).field("exp", json!(m)))
        }
        Command::Homogenize(_) => {
            let (a, i) = ctx.ideal(0)?;
            let w = ctx.weight()?;
            let h = ideal_ops::homogenize_w(&i, &w, order)?;
            let display = MonomialOrder::Grevlex;
            let gens: Vec<String> = h.generators().iter().map(|g| g.display_with(&display).to_string()).collect();
            let vars = h.ring().names().to_vec();
            Ok(Report::new(EXIT_OK)
                .line(format!("variables: {}", vars.join(",")))
                .list("homogenized generators", &gens)
                .field("ideal", json!(a))
                .field("weight", json!(w))
                .field("vars", json!(vars))
                .field("generators", json!(gens)))
        }
        Command::Fibers(_) => {
            let (a, i) = ctx.ideal(0)?;
            let w = ctx.weight()?;
            let cert = criteria::deformation_fibers(&i, &w, order)?;
            let code = verdict(cert.all_passed());
            certificate_report(code, &cert, c.verify).map(|r| r.field("ideal", json!(a)))
        }
        Command::Dim(_) => {
            let (a, i) = ctx.ideal(0)?;
            let init = i.initial_ideal(order)?;
            let d = ideal_ops::monomial_dimension(&init)?;
            let h = ctx.pf.ring.nvars() - d;
            Ok(Report::new(EXIT_OK)
                .line(format!("dimension: {d}"))
                .line(format!("height: {h}"))
                .field("ideal", json!(a))
                .field("dimension", json!(d))
                .field("height", json!(h)))
        }
        Command::Trace(_) => {
            let g = ctx.poly(0)?;
            let n = c.iterate.unwrap_or(1);
            let v = frobenius::trace_iterate(&Polynomial::one(&ctx.pf.ring), &g, n)?;
            Ok(Report::new(EXIT_OK)
                .line(format!("trace: {}", ctx.show(&v)))
                .field("poly", json!(ctx.show(&g)))
                .field("iterate", json!(n))
                .field("value", json!(ctx.show(&v))))
        }
        Command::Star(_) => {
            let f = ctx.poly(0)?;
            let g = ctx.poly(1)?;
            let n = c.iterate.unwrap_or(1);
            let v = frobenius::trace_iterate(&f, &g, n)?;
            Ok(Report::new(EXIT_OK)
                .line(format!("value: {}", ctx.show(&v)))
                .field("f", json!(ctx.show(&f)))
                .field("poly", json!(ctx.show(&g)))
                .field("iterate", json!(n))
                .field("value", json!(ctx.show(&v))))
        }
        Command::IsSplitting(_) => {
            let f = ctx.poly(0)?;
            let v = frobenius::is_splitting(&f);
            let mut r = Report::new(verdict(v.is_splitting))
                .line(format!("splitting: {}", v.is_splitting))
                .field("poly", json!(ctx.show(&f)))
                .field("is_splitting", json!(v.is_splitting))
                .field("violation", serde_json::to_value(&v.violation).expect("serializable"));
            if let Some(violation) = &v.violation {
                r = r.line(format!("violation: {}", violation_text(violation)));
            }
            Ok(r)
        }
        Command::Fedder(_) => {
            let (a, i) = ctx.ideal(0)?;
            let colon = frobenius::fedder_colon(&i, order)?;
            let mut r = ctx.ideal_report("I^[p] : I", &colon)?.field("ideal", json!(a));
            if !c.polys.is_empty() {
                let f = ctx.poly(0)?;
                let m = colon.member(&f, order)?;
                r = r
                    .line(format!("member: {m}"))
                    .field("poly", json!(ctx.show(&f)))
                    .field("member", json!(m));
                r.code = verdict(m);
            }
            Ok(r)
        }
        Command::Compatible(_) => {
            let (a, j) = ctx.ideal(0)?;
            let f = ctx.poly(0)?;
            let ok = frobenius::compatible_check(&f, &j, order)?;
            Ok(Report::new(verdict(ok))
                .line(format!("compatible: {ok}"))
                .field("ideal", json!(a))
                .field("poly", json!(ctx.show(&f)))
                .field("compatible", json!(ok)))
        }
        Command::Fsplit(_) => {
            let (a, i) = ctx.ideal(0)?;
            let cert = criteria::fsplit_certificate(&i, order)?;
            let split = cert.witness.contains_key("colon_element");
            Ok(certificate_report(verdict(split), &cert, c.verify)?
                .field("ideal", json!(a))
                .field("split", json!(split)))
        }
        Command::CharpCert(_) => {
            let (a, i) = ctx.ideal(0)?;
            outcome_report(criteria::charp_certificate(&i, order)?, c.verify).map(|r| r.field("ideal", json!(a)))
        }
        Command::SymbCert(_) => {
            let names: Vec<String> = if c.ideals.is_empty() {
                ctx.pf.witnesses.iter().map(|(n, _)| n.clone()).collect()
            } else {
                c.ideals.clone()
            };
            if names.is_empty() {
                return Err(usage("symb-cert needs primes: pass --ideal or declare `witness` statements"));
            }
            let mut primes = Vec::new();
            for n in &names {
                let g = ctx
                    .pf
                    .witness(n)
                    .ok_or_else(|| usage(format!("no witness declared for `{n}`")))?;
                primes.push((ctx.named_ideal(n)?, g.clone()));
            }
            outcome_report(criteria::symb_certificate(&primes, order)?, c.verify).map(|r| r.field("primes", json!(names)))
        }
        Command::VerifyCert(_) => unreachable!("handled above"),
    }
}

fn violation_text(v: &frobenius::SplittingViolation) -> String {
    match v {
        frobenius::SplittingViolation::CornerCoefficient { coefficient } => {
            format!("corner coefficient is {coefficient}, not 1")
        }
        frobenius::SplittingViolation::ExtraMonomial { monomial } => {
            format!("{monomial} has every exponent congruent to -1")
        }
    }
}

fn certificate_text(cert: &Certificate) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "certificate: {:?}", cert.kind);
    let _ = writeln!(s, "ring: p={}; vars={}", cert.ring.p, cert.ring.vars.join(","));
    let _ = writeln!(s, "order: {}", cert.order);
    for (k, v) in &cert.witness {
        let _ = writeln!(s, "witness {k}: {v}");
    }
    for step in &cert.steps {
        let name = serde_json::to_value(&step.check)
            .ok()
            .and_then(|v| v.get("check").and_then(Value::as_str).map(str::to_string))
            .unwrap_or_default();
        let _ = writeln!(s, "  [{}] {name}", if step.passed { "pass" } else { "FAIL" });
    }
    let _ = writeln!(s, "conclusion: {}", cert.conclusion);
    s
}

fn certificate_report(code: i32, cert: &Certificate, verify: bool) -> CliResult<Report> {
    let mut r = Report::new(code);
    r.text = certificate_text(cert);
    r = r.field("certificate", serde_json::to_value(cert).expect("certificates serialize"));
    if verify {
        let ok = cert.verify()?;
        r = r.line(format!("replay: {}", if ok { "verified" } else { "MISMATCH" })).field("verified", json!(ok));
        if !ok {
            return Err(Error::Internal("a freshly produced certificate failed its replay".into()).into());
        }
    }
    Ok(r)
}

fn outcome_report(out: Outcome, verify: bool) -> CliResult<Report> {
    match out {
        Outcome::Found(cert) => Ok(certificate_report(EXIT_OK, &cert, verify)?.field("found", json!(true))),
        Outcome::NotFound(nf) => Ok(Report::new(EXIT_NEGATIVE)
            .line(format!("no certificate ({:?}): {}", nf.kind, nf.reason))
            .list("initial ideal searched", &nf.searched)
            .line("this does not show that the initial ideal is not squarefree")
            .field("found", json!(false))
            .field("kind", serde_json::to_value(nf.kind).expect("serializable"))
            .field("reason", json!(nf.reason))
            .field("searched", json!(nf.searched))),
    }
}

fn verify_cert(v: &VerifyArgs) -> CliResult<Report> {
    let text = read_input(&v.file)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Certificate(e.to_string()))?;
    let value = match value.get("certificate") {
        Some(inner) => inner.clone(),
        None => value,
    };
    let cert: Certificate = serde_json::from_value(value).map_err(|e| CliError::Certificate(e.to_string()))?;
    let replay = cert.replay()?;
    let recorded: Vec<bool> = cert.steps.iter().map(|s| s.passed).collect();
    let ok = replay == recorded && recorded.iter().all(|&b| b);
    let mut r = Report::new(verdict(ok));
    r.text = certificate_text(&cert);
    for (k, (a, b)) in recorded.iter().zip(&replay).enumerate() {
        if a != b {
            r = r.line(format!("step {k}: recorded {a}, replayed {b}"));
        }
    }
    Ok(r.line(format!("replay: {}", if ok { "verified" } else { "REJECTED" }))
        .field("kind", serde_json::to_value(cert.kind).expect("serializable"))
        .field("recorded", json!(recorded))
        .field("replayed", json!(replay))
        .field("verified", json!(ok)))
}
