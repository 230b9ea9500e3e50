//! Command-line front end: argument types, job execution and reports.
//!
//! Exit codes: 0 all verdicts hold, 1 some verdict fails, 2 usage or input
//! error, 3 enumeration budget exceeded, 4 group order divisible by the
//! characteristic, 5 enumeration over an infinite field, 6 group closure
//! cap reached, 7 internal error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use liegal::actions::{close_group, conjugation_matrix, permutation_conjugation, GroupAction, DEFAULT_CAP};
use liegal::galois::{
    codim1_group, galois_group_direct, galois_group_structured, verify_radical_chain, EnumerationOptions,
    GaloisGroup, DEFAULT_BUDGET,
};
use liegal::group::GroupAnalysis;
use liegal::lie::catalog;
use liegal::products::{
    canonical_extending_system, phi_iso_check, single_extension, skew_crossed_product, unified_product, Extension,
    TwistedDerivation,
};
use liegal::{corpus, format, Error, Field, LieAlgebra, Matrix, Parallelism, Scalar, Subspace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MODULAR: i32 = 4;
pub const EXIT_INFINITE: i32 = 5;
pub const EXIT_CAP: i32 = 6;
pub const EXIT_INTERNAL: i32 = 7;

#[derive(Parser, Debug)]
#[command(name = "liegal", version, about = "Galois groups of Lie algebra extensions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit one JSON document instead of `key: value` lines.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jacobi identity and structural predicates, or the axioms of a system file.
    Check(CheckArgs),
    /// Derived algebra, center and centralizer.
    Subspaces(SubArgs),
    /// Derivation algebra and inner derivations.
    Derivations(AlgebraArgs),
    /// Build a product algebra from a system file.
    Product(ProductArgs),
    /// Canonical extending system of an extension.
    Canonical(CanonicalArgs),
    /// Galois group by both enumerators, with analysis and cross-check.
    Galois(GaloisArgs),
    /// Close a group action, report invariants and the Reynolds operator.
    Action(ActionArgs),
    /// Ker t = Im(id - gamma) for a cyclic action.
    Hilbert90(ActionArgs),
    /// Rebuild the algebra from its invariants as a skew crossed product.
    Artin(ActionArgs),
    /// Structure of a cyclic action: h_gamma, gamma-abelian test, product.
    CyclicStructure(ActionArgs),
    /// Codimension-one Galois group of a twisted derivation.
    Codim1(Codim1Args),
    /// Verify a radical chain and the solvability of its Galois group.
    Radical(RadicalArgs),
    /// Print a named algebra in file format, or list the names.
    Catalog(CatalogArgs),
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraArgs {
    /// Named algebra, e.g. `heisenberg:2` or `holomorph:sl:2`.
    #[arg(long, conflicts_with = "file")]
    pub catalog: Option<String>,
    /// Algebra file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Field `Q` or `F<p>`; overrides the file header.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct CheckArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Check an extending system file instead of an algebra.
    #[arg(long, conflicts_with_all = ["catalog", "file"])]
    pub system: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SubArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Subspace for the centralizer: `basis:0,2`, `rows:1,0;0,1`, `derived`, `center`.
    #[arg(long)]
    pub sub: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Unified,
    Skew,
}

#[derive(Args, Debug, Clone)]
pub struct ProductArgs {
    #[arg(long)]
    pub system: PathBuf,
    #[arg(long, value_enum, default_value_t = ProductKind::Unified)]
    pub kind: ProductKind,
    /// Also write the product algebra file here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct CanonicalArgs {
    #[command(flatten)]
    pub ext: ExtArgs,
    /// Also write the system file here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ExtArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Subalgebra `g`: `basis:0,2,4`, `rows:...`, `derived`, `center`.
    #[arg(long, conflicts_with = "extension")]
    pub sub: Option<String>,
    /// Named extension from the built-in corpus, e.g. `h5/h3`.
    #[arg(long)]
    pub extension: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct EnumArgs {
    /// Largest number of candidates an enumerator may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Run enumerations on one thread.
    #[arg(long)]
    pub sequential: bool,
}

impl EnumArgs {
    fn options(&self) -> EnumerationOptions {
        EnumerationOptions {
            budget: self.budget,
            parallelism: if self.sequential {
                Parallelism::Sequential
            } else {
                Parallelism::default()
            },
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct GaloisArgs {
    #[command(flatten)]
    pub ext: ExtArgs,
    #[command(flatten)]
    pub enumeration: EnumArgs,
    /// Skip the brute-force oracle.
    #[arg(long)]
    pub no_direct: bool,
    /// List the group elements `(sigma, r)`.
    #[arg(long)]
    pub elements: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ActionArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Automorphism generator as a matrix `a,b;c,d` (column j = image of e_j).
    #[arg(long = "gen", allow_hyphen_values = true)]
    pub generators: Vec<String>,
    /// Conjugation by a permutation matrix on gl(n), e.g. `1,2,0`.
    #[arg(long = "perm")]
    pub perms: Vec<String>,
    /// Conjugation `x |-> U x U^-1` on gl(n) by the matrix `U`.
    #[arg(long = "conj", allow_hyphen_values = true)]
    pub conjugations: Vec<String>,
    /// Largest group order explored by the closure.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug, Clone)]
pub struct Codim1Args {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// `lambda` as a row of coefficients on the basis of `g`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// `Delta` as a matrix (column j = image of e_j).
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    /// Built-in twisted derivation instead: `t:n`, `b:n` or `fivedim`.
    #[arg(long, conflicts_with_all = ["catalog", "file", "lambda", "delta"])]
    pub preset: Option<String>,
    #[command(flatten)]
    pub enumeration: EnumArgs,
}

#[derive(Args, Debug, Clone)]
pub struct RadicalArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Chain members from `g` upwards, each a subspace spec; `h` is appended.
    #[arg(long = "step", required = true)]
    pub steps: Vec<String>,
    #[command(flatten)]
    pub enumeration: EnumArgs,
}

#[derive(Args, Debug, Clone)]
pub struct CatalogArgs {
    /// Catalog name such as `sl:2`; omit to list names.
    pub name: Option<String>,
    #[arg(long, default_value = "Q")]
    pub field: String,
    /// Also write the algebra file here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A finished job: the report plus its exit status.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub command: String,
    pub field: Option<String>,
    pub inputs: BTreeMap<String, Value>,
    pub verdicts: BTreeMap<String, bool>,
    pub group_order: Option<usize>,
    pub flags: BTreeMap<String, Value>,
    pub values: BTreeMap<String, Value>,
    pub budgets: BTreeMap<String, Value>,
    pub timings: Option<BTreeMap<String, f64>>,
    pub error: Option<String>,
    pub exit_code: i32,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            ..Default::default()
        }
    }

    fn verdict(&mut self, key: &str, v: bool) {
        self.verdicts.insert(key.into(), v);
    }

    fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.into(), v.into());
    }

    fn flag(&mut self, key: &str, v: impl Into<Value>) {
        self.flags.insert(key.into(), v.into());
    }

    fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.into(), v.into());
    }

    pub fn to_json(&self) -> Value {
        let mut doc = json!({
            "command": self.command,
            "field": self.field,
            "inputs": self.inputs,
            "verdicts": self.verdicts,
            "group_order": self.group_order,
            "flags": self.flags,
            "values": self.values,
            "budgets": self.budgets,
            "exit_code": self.exit_code,
        });
        if let Some(t) = &self.timings {
            doc["timings"] = json!(t);
        }
        if let Some(e) = &self.error {
            doc["error"] = json!(e);
        }
        doc
    }

    /// `key: value` lines; nested keys are joined with dots.
    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("command: {}", self.command)];
        if let Some(f) = &self.field {
            lines.push(format!("field: {f}"));
        }
        if let Some(e) = &self.error {
            lines.push(format!("error: {e}"));
        }
        let mut section = |prefix: &str, map: &BTreeMap<String, Value>| {
            for (k, v) in map {
                lines.push(format!("{prefix}{k}: {}", text_value(v)));
            }
        };
        section("input.", &self.inputs);
        let verdicts: BTreeMap<String, Value> = self.verdicts.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        section("verdict.", &verdicts);
        section("", &self.flags);
        section("", &self.values);
        section("budget.", &self.budgets);
        if let Some(o) = self.group_order {
            lines.push(format!("group_order: {o}"));
        }
        if let Some(t) = &self.timings {
            for (k, v) in t {
                lines.push(format!("time.{k}: {v:.6}s"));
            }
        }
        lines.join("\n") + "\n"
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.to_json()).expect("report serializes") + "\n"
        } else {
            self.to_text()
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::String(s) if s.contains('\n') => format!("\n{}", s.trim_end()),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(text_value).collect::<Vec<_>>().join(" | "),
        other => other.to_string(),
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::ModularCase { .. } => EXIT_MODULAR,
        Error::InfiniteField(_) => EXIT_INFINITE,
        Error::GroupTooLarge { .. } => EXIT_CAP,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Runs a parsed command line. Never panics on bad input.
pub fn run(cli: &Cli) -> Report {
    let name = command_name(&cli.command);
    let mut report = Report::new(name);
    let mut clock = Clock::new(cli.timings);
    let result = dispatch(&cli.command, &mut report, &mut clock);
    report.timings = clock.finish();
    match result {
        Ok(()) => {
            report.exit_code = if report.verdicts.values().all(|&v| v) {
                EXIT_OK
            } else {
                EXIT_VERDICT
            };
        }
        Err(e) => {
            report.exit_code = exit_code_for(&e);
            report.error = Some(e.to_string());
        }
    }
    report
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check(_) => "check",
        Command::Subspaces(_) => "subspaces",
        Command::Derivations(_) => "derivations",
        Command::Product(_) => "product",
        Command::Canonical(_) => "canonical",
        Command::Galois(_) => "galois",
        Command::Action(_) => "action",
        Command::Hilbert90(_) => "hilbert90",
        Command::Artin(_) => "artin",
        Command::CyclicStructure(_) => "cyclic-structure",
        Command::Codim1(_) => "codim1",
        Command::Radical(_) => "radical",
        Command::Catalog(_) => "catalog",
    }
}

struct Clock {
    enabled: bool,
    start: Instant,
    marks: BTreeMap<String, f64>,
}

impl Clock {
    fn new(enabled: bool) -> Self {
        Clock {
            enabled,
            start: Instant::now(),
            marks: BTreeMap::new(),
        }
    }

    fn time<T>(&mut self, key: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        self.marks.insert(key.into(), t.elapsed().as_secs_f64());
        out
    }

    fn finish(mut self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then(|| {
            self.marks.insert("total".into(), self.start.elapsed().as_secs_f64());
            self.marks
        })
    }
}

type Res<T> = liegal::Result<T>;

fn parse_field(s: &str) -> Res<Field> {
    s.parse()
}

fn read(path: &PathBuf) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))
}

fn write_out(path: &Option<PathBuf>, text: &str, report: &mut Report) -> Res<()> {
    if let Some(path) = path {
        std::fs::write(path, text)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))?;
        report.input("out", path.display().to_string());
    }
    Ok(())
}

fn load_algebra(args: &AlgebraArgs, report: &mut Report) -> Res<LieAlgebra> {
    let l = match (&args.catalog, &args.file) {
        (Some(spec), _) => {
            let field = parse_field(args.field.as_deref().unwrap_or("Q"))?;
            report.input("catalog", spec.as_str());
            catalog::from_spec(spec, field)?
        }
        (None, Some(path)) => {
            report.input("file", path.display().to_string());
            let mut text = read(path)?;
            if let Some(f) = &args.field {
                let f = parse_field(f)?;
                text = text
                    .lines()
                    .map(|l| {
                        if l.trim_start().starts_with("field ") {
                            format!("field {f}")
                        } else {
                            l.to_string()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
            }
            format::parse_algebra(&text)?
        }
        (None, None) => return Err(Error::InvalidParameter("give --catalog or --file".into())),
    };
    report.field = Some(l.field().to_string());
    Ok(l)
}

/// `basis:0,2,4` (0-based), `rows:1,0,0;0,1,0`, `derived`, `center`, `full`.
pub fn parse_subspace(l: &LieAlgebra, spec: &str) -> Res<Subspace> {
    let field = l.field();
    let n = l.dim();
    let spec = spec.trim();
    if let Some(list) = spec.strip_prefix("basis:") {
        let idx = list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad basis index {s:?}")))
            })
            .collect::<Res<Vec<_>>>()?;
        return Subspace::coordinate(field, n, &idx);
    }
    if let Some(rows) = spec.strip_prefix("rows:") {
        let m = format::parse_matrix(field, rows)?;
        if m.cols() != n {
            return Err(Error::DimensionMismatch(format!("rows have length {}, algebra has dim {n}", m.cols())));
        }
        return Ok(Subspace::from_matrix(&m));
    }
    match spec {
        "derived" => Ok(l.derived_subalgebra()),
        "center" => Ok(l.center()),
        "full" => Ok(l.full_space()),
        "zero" => Ok(Subspace::zero(field, n)),
        _ => Err(Error::InvalidParameter(format!(
            "bad subspace {spec:?}; use basis:i,j,..., rows:..., derived, center, full or zero"
        ))),
    }
}

fn basis_text(s: &Subspace) -> Value {
    json!(s.basis_vectors().iter().map(|v| vector_text(v)).collect::<Vec<_>>())
}

fn vector_text(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
}

fn load_extension(args: &ExtArgs, report: &mut Report) -> Res<Extension> {
    if let Some(name) = &args.extension {
        let field = parse_field(args.algebra.field.as_deref().unwrap_or("Q"))?;
        report.input("extension", name.as_str());
        report.field = Some(field.to_string());
        return corpus::extension(name, field);
    }
    let l = load_algebra(&args.algebra, report)?;
    let spec = args
        .sub
        .as_deref()
        .ok_or_else(|| Error::InvalidParameter("give --sub or --extension".into()))?;
    report.input("sub", spec);
    let sub = parse_subspace(&l, spec)?;
    Extension::new(l, sub)
}

fn record_analysis(report: &mut Report, a: &GroupAnalysis) {
    report.group_order = Some(a.order);
    report.flag("abelian", a.abelian);
    report.flag("cyclic", a.cyclic);
    report.flag("elementary_abelian", a.elementary_abelian);
    report.flag("metabelian", a.metabelian);
    report.flag("solvable", a.solvable);
    report.flag("exponent", a.exponent);
    report.flag("derived_orders", json!(a.derived_orders));
}

fn record_budget(report: &mut Report, e: &EnumArgs) {
    report.budgets.insert("candidates".into(), json!(e.budget.to_string()));
}

fn dispatch(cmd: &Command, report: &mut Report, clock: &mut Clock) -> Res<()> {
    match cmd {
        Command::Check(a) => check(a, report),
        Command::Subspaces(a) => subspaces(a, report),
        Command::Derivations(a) => derivations(a, report),
        Command::Product(a) => product(a, report),
        Command::Canonical(a) => canonical(a, report),
        Command::Galois(a) => galois(a, report, clock),
        Command::Action(a) => action(a, report),
        Command::Hilbert90(a) => hilbert90(a, report),
        Command::Artin(a) => artin(a, report),
        Command::CyclicStructure(a) => cyclic(a, report),
        Command::Codim1(a) => codim1(a, report, clock),
        Command::Radical(a) => radical(a, report, clock),
        Command::Catalog(a) => catalog_cmd(a, report),
    }
}

fn check(a: &CheckArgs, report: &mut Report) -> Res<()> {
    if let Some(path) = &a.system {
        report.input("system", path.display().to_string());
        let sys = format::parse_system(&read(path)?)?;
        report.field = Some(sys.field().to_string());
        report.value("kind", sys.classify().to_string());
        let axioms = sys.check_extending_axioms();
        for c in &axioms.checks {
            report.verdict(&c.axiom.to_string(), c.violation.is_none());
            if let Some(v) = &c.violation {
                report.value(&format!("violation{}", c.axiom), v.as_str());
            }
        }
        if sys.is_skew() {
            for c in sys.check_skew_axioms()?.checks {
                report.value(&format!("skew{}", c.axiom), c.violation.is_none());
            }
        }
        return Ok(());
    }
    let l = load_algebra(&a.algebra, report)?;
    report.verdict("jacobi", true);
    let f = l.flags();
    report.value("dim", l.dim());
    report.flag("abelian", f.abelian);
    report.flag("perfect", f.perfect);
    report.flag("solvable", f.solvable);
    report.flag("complete", f.complete);
    report.flag("sympathetic", f.sympathetic);
    report.flag("center", f.center_dim);
    report.flag("derivations", f.derivation_dim);
    report.flag("inner_derivations", f.inner_derivation_dim);
    report.flag("derived_series", json!(f.derived_series_dims));
    Ok(())
}

fn subspaces(a: &SubArgs, report: &mut Report) -> Res<()> {
    let l = load_algebra(&a.algebra, report)?;
    let derived = l.derived_subalgebra();
    let center = l.center();
    report.value("derived.dim", derived.dim());
    report.value("derived.basis", basis_text(&derived));
    report.value("center.dim", center.dim());
    report.value("center.basis", basis_text(&center));
    if let Some(spec) = &a.sub {
        report.input("sub", spec.as_str());
        let s = parse_subspace(&l, spec)?;
        let c = l.centralizer(&s)?;
        report.value("centralizer.dim", c.dim());
        report.value("centralizer.basis", basis_text(&c));
        report.value("sub.is_subalgebra", l.is_subalgebra(&s)?);
        report.value("sub.is_ideal", l.is_ideal(&s)?);
    }
    Ok(())
}

fn derivations(a: &AlgebraArgs, report: &mut Report) -> Res<()> {
    let l = load_algebra(a, report)?;
    let der = l.derivations();
    let inner = l.inner_derivations();
    report.value("derivations.dim", der.dim());
    report.value("inner.dim", inner.dim());
    report.value("outer.dim", der.dim() - inner.dim());
    let mats: Vec<String> = der
        .basis_vectors()
        .iter()
        .map(|v| format::format_matrix(&liegal::lie::unflatten(l.field(), l.dim(), v)))
        .collect();
    report.value("derivations.basis", json!(mats));
    Ok(())
}

fn product(a: &ProductArgs, report: &mut Report) -> Res<()> {
    report.input("system", a.system.display().to_string());
    let sys = format::parse_system(&read(&a.system)?)?;
    report.field = Some(sys.field().to_string());
    let algebra = match a.kind {
        ProductKind::Unified => {
            report.input("kind", "unified");
            let axioms = sys.check_extending_axioms();
            report.verdict("extending_axioms", axioms.passes());
            if !axioms.passes() {
                return Ok(());
            }
            unified_product(&sys)?
        }
        ProductKind::Skew => {
            report.input("kind", "skew");
            let axioms = sys.check_skew_axioms()?;
            report.verdict("skew_axioms", axioms.passes());
            if !axioms.passes() {
                return Ok(());
            }
            skew_crossed_product(&sys)?
        }
    };
    let text = format::serialize_algebra(&algebra);
    write_out(&a.out, &text, report)?;
    report.value("product", text);
    Ok(())
}

fn canonical(a: &CanonicalArgs, report: &mut Report) -> Res<()> {
    let ext = load_extension(&a.ext, report)?;
    let sys = canonical_extending_system(&ext);
    report.value("kind", sys.classify().to_string());
    let text = format::serialize_system(&sys);
    write_out(&a.out, &text, report)?;
    report.value("system", text);
    report.verdict("extending_axioms", sys.check_extending_axioms().passes());
    let product = unified_product(&sys)?;
    report.verdict("phi_isomorphism", phi_iso_check(&ext, &product));
    Ok(())
}

fn galois(a: &GaloisArgs, report: &mut Report, clock: &mut Clock) -> Res<()> {
    let ext = load_extension(&a.ext, report)?;
    record_budget(report, &a.enumeration);
    report.value("dim_g", ext.g_dim());
    report.value("dim_v", ext.v_dim());
    let opts = a.enumeration.options();
    let structured = clock.time("structured", || galois_group_structured(&ext, &opts))?;
    if !a.no_direct {
        let direct = clock.time("direct", || galois_group_direct(&ext, &opts))?;
        report.verdict("oracles_agree", direct == structured);
    }
    report.verdict("omega_homomorphism", structured.omega_homomorphism_check(&ext));
    let analysis = clock.time("analysis", || structured.analysis())?;
    record_analysis(report, &analysis);
    if a.elements {
        report.value("elements", elements_json(&structured));
    }
    Ok(())
}

fn elements_json(g: &GaloisGroup) -> Value {
    json!(g
        .elements()
        .iter()
        .map(|e| format!("sigma={} r={}", format::format_matrix(&e.sigma), format::format_matrix(&e.r)))
        .collect::<Vec<_>>())
}

fn build_action(a: &ActionArgs, report: &mut Report) -> Res<GroupAction> {
    let l = load_algebra(&a.algebra, report)?;
    let field = l.field();
    let mut gens: Vec<Matrix> = Vec::new();
    for g in &a.generators {
        gens.push(format::parse_matrix(field, g)?);
    }
    for p in &a.perms {
        let perm = p
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad permutation {p:?}")))
            })
            .collect::<Res<Vec<_>>>()?;
        gens.push(permutation_conjugation(field, &perm)?);
    }
    for u in &a.conjugations {
        gens.push(conjugation_matrix(&format::parse_matrix(field, u)?)?);
    }
    if gens.is_empty() {
        return Err(Error::InvalidParameter("give at least one --gen, --perm or --conj".into()));
    }
    report.input(
        "generators",
        json!(gens.iter().map(format::format_matrix).collect::<Vec<_>>()),
    );
    report.budgets.insert("cap".into(), json!(a.cap));
    let action = close_group(&l, &gens, a.cap)?;
    report.group_order = Some(action.order());
    Ok(action)
}

fn action(a: &ActionArgs, report: &mut Report) -> Res<()> {
    let act = build_action(a, report)?;
    let inv = act.invariants();
    report.value("invariants.dim", inv.dim());
    report.value("invariants.basis", basis_text(&inv));
    report.verdict("invariants_consistent", inv == act.invariants_all_elements());
    report.verdict("invariants_subalgebra", act.algebra().is_subalgebra(&inv)?);
    match act.reynolds() {
        Ok(r) => {
            report.verdict("reynolds_image_is_invariants", r.invariants == inv);
            report.value("reynolds.kernel_dim", r.kernel.dim());
        }
        Err(Error::ModularCase { .. }) => report.value("reynolds", "skipped: group order divisible by p"),
        Err(e) => return Err(e),
    }
    let analysis = act.analysis();
    record_analysis(report, &analysis);
    Ok(())
}

fn single_generator(act: &GroupAction) -> Res<usize> {
    match act.generators() {
        [g] => Ok(*g),
        gens => Err(Error::InvalidParameter(format!(
            "a cyclic action needs exactly one generator, got {}",
            gens.len()
        ))),
    }
}

fn hilbert90(a: &ActionArgs, report: &mut Report) -> Res<()> {
    let act = build_action(a, report)?;
    let gamma = single_generator(&act)?;
    let h = act.hilbert90_check(gamma)?;
    report.value("kernel_t.dim", h.kernel.dim());
    report.value("image.dim", h.image.dim());
    report.verdict("hilbert90", h.holds);
    Ok(())
}

fn artin(a: &ActionArgs, report: &mut Report) -> Res<()> {
    let act = build_action(a, report)?;
    let r = act.artin_reconstruct()?;
    report.value("dim_invariants", r.extension.g_dim());
    report.value("dim_kernel", r.extension.v_dim());
    report.value("kind", r.system.classify().to_string());
    report.verdict("matches_canonical", r.matches_canonical);
    report.verdict("skew_axioms", r.skew_axioms.passes());
    report.verdict("phi_isomorphism", r.iso);
    if let Some(fail) = r.skew_axioms.first_failure() {
        report.value("first_failure", format!("{} {}", fail.axiom, fail.violation.clone().unwrap_or_default()));
    }
    Ok(())
}

fn cyclic(a: &ActionArgs, report: &mut Report) -> Res<()> {
    let act = build_action(a, report)?;
    let gamma = single_generator(&act)?;
    let gamma_abelian = act.gamma_abelian_check(gamma)?;
    report.value("gamma_abelian", gamma_abelian);
    let c = act.cyclic_structure(gamma)?;
    report.value("invariants.dim", c.invariants.dim());
    report.value("h_gamma.dim", c.h_gamma.dim());
    report.value("theta_vanishes", c.theta_vanishes);
    report.value("h_gamma_is_ideal", c.h_gamma_is_ideal);
    report.verdict("phi_isomorphism", c.iso);
    if gamma_abelian {
        report.verdict("gamma_abelian_structure", c.theta_vanishes && c.h_gamma_is_ideal);
    }
    Ok(())
}

fn codim1(a: &Codim1Args, report: &mut Report, clock: &mut Clock) -> Res<()> {
    record_budget(report, &a.enumeration);
    let (g, tw) = match &a.preset {
        Some(preset) => {
            let field = parse_field(a.algebra.field.as_deref().unwrap_or("Q"))?;
            report.field = Some(field.to_string());
            report.input("preset", preset.as_str());
            let (name, param) = preset.split_once(':').unwrap_or((preset.as_str(), "1"));
            let n: usize = param
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad preset {preset:?}")))?;
            match name {
                "t" => (catalog::heisenberg(field, n)?, catalog::t_twisted_derivation(field, n)?),
                "b" => (catalog::heisenberg(field, n)?, catalog::b_derivation(field, n)?),
                "fivedim" => {
                    let g = catalog::fivedim_perfect(field)?;
                    let tw = TwistedDerivation::new(&g, vec![field.zero(); 5], catalog::fivedim_derivation(field))?;
                    (g, tw)
                }
                _ => return Err(Error::InvalidParameter(format!("unknown preset {name:?}; use t:n, b:n or fivedim"))),
            }
        }
        None => {
            let g = load_algebra(&a.algebra, report)?;
            let field = g.field();
            let n = g.dim();
            let lambda = match &a.lambda {
                Some(s) => {
                    let m = format::parse_matrix(field, s)?;
                    if m.rows() != 1 || m.cols() != n {
                        return Err(Error::DimensionMismatch(format!("lambda needs {n} coefficients")));
                    }
                    m.row(0).to_vec()
                }
                None => vec![field.zero(); n],
            };
            let delta = match &a.delta {
                Some(s) => format::parse_matrix(field, s)?,
                None => Matrix::zeros(field, n, n),
            };
            report.input("lambda", vector_text(&lambda));
            report.input("delta", format::format_matrix(&delta));
            let tw = TwistedDerivation::new(&g, lambda, delta)?;
            (g, tw)
        }
    };
    report.verdict("twisted_derivation", true);
    let opts = a.enumeration.options();
    let group = clock.time("codim1", || codim1_group(&g, &tw, &opts))?;
    let h = single_extension(&g, &tw, "u")?;
    let ext = Extension::new(h, catalog::leading(g.field(), g.dim() + 1, g.dim()))?;
    let direct = clock.time("direct", || galois_group_direct(&ext, &opts))?;
    report.verdict("agrees_with_direct", direct == group);
    let analysis = group.analysis()?;
    report.verdict("metabelian", analysis.metabelian);
    record_analysis(report, &analysis);
    let pairs: Vec<String> = group
        .codim1_pairs()
        .unwrap_or_default()
        .iter()
        .map(|(u, g0)| format!("({u}, {})", vector_text(g0)))
        .collect();
    report.value("elements", json!(pairs));
    Ok(())
}

fn radical(a: &RadicalArgs, report: &mut Report, clock: &mut Clock) -> Res<()> {
    let h = load_algebra(&a.algebra, report)?;
    record_budget(report, &a.enumeration);
    report.input("steps", json!(a.steps));
    let chain = a
        .steps
        .iter()
        .map(|s| parse_subspace(&h, s))
        .collect::<Res<Vec<_>>>()?;
    let r = clock.time("radical", || verify_radical_chain(&h, &chain, &a.enumeration.options()))?;
    let steps: Vec<String> = r
        .steps
        .iter()
        .map(|s| {
            format!(
                "h{} dim {} |Gal| {} invariant {}",
                s.index,
                s.dim,
                s.group_order,
                if s.invariant { "yes" } else { "no" }
            )
        })
        .collect();
    report.value("steps", json!(steps));
    report.value("radical", r.radical);
    record_analysis(report, &r.analysis);
    if r.radical {
        report.verdict("solvable", r.analysis.solvable);
    }
    Ok(())
}

fn catalog_cmd(a: &CatalogArgs, report: &mut Report) -> Res<()> {
    match &a.name {
        None => {
            report.value("algebras", json!(catalog::CATALOG_NAMES));
            report.value("extensions", json!(corpus::EXTENSION_NAMES));
        }
        Some(name) => {
            let field = parse_field(&a.field)?;
            report.field = Some(field.to_string());
            report.input("catalog", name.as_str());
            let l = catalog::from_spec(name, field)?;
            let text = format::serialize_algebra(&l);
            write_out(&a.out, &text, report)?;
            report.value("algebra", text);
        }
    }
    Ok(())
}
