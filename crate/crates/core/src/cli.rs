//! Command-line front end.
//!
//! Exit codes: 0 success (all checks pass), 1 a verification failed,
//! 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coding::{self, coding_matrix, LinearCode};
use crate::error::{Error, Result};
use crate::io::{int_rows_from_csv, matrix_from_text, matrix_to_csv, matrix_to_json, vector_to_json};
use crate::math::scalar::{format_scalar, parse_scalar, parse_scalar_list};
use crate::math::{DenseMatrix, ExactScalar, TruncatedSeries};
use crate::multivariate::{self, build_multivariate, induced_matrix, transpose_lemma_defect, MultivariateKravchuk};
use crate::operator::{self, BivariatePoly, PolyCoeffs};
use crate::univariate::{self, kravchuk_matrix, KravchukBasis};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "krawtchouk", version, about = "Exact Krawtchouk transforms and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

fn scalar_arg(s: &str) -> std::result::Result<ExactScalar, String> {
    parse_scalar(s).map_err(|e| e.to_string())
}

/// Comma-separated rationals given as one flag value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarList(pub Vec<ExactScalar>);

fn scalar_list_arg(s: &str) -> std::result::Result<ScalarList, String> {
    parse_scalar_list(s).map(ScalarList).map_err(|e| e.to_string())
}

/// Rows separated by `;`, entries by `,`.
fn scalar_rows_arg(s: &str) -> std::result::Result<DenseMatrix, String> {
    let rows = s
        .split(';')
        .enumerate()
        .map(|(i, r)| parse_scalar_list(r).map_err(|e| format!("row {}: {e}", i + 1)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    DenseMatrix::from_rows(rows).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct Instance {
    /// Level N
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Probability p as "num/den"
    #[arg(long, value_parser = scalar_arg)]
    pub p: Option<ExactScalar>,
}

impl Instance {
    fn basis(&self) -> Result<KravchukBasis> {
        kravchuk_matrix(self.level()?, &self.prob()?)
    }

    fn level(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::parse("--N", "flag is required here"))
    }

    fn prob(&self) -> Result<ExactScalar> {
        self.p.clone().ok_or_else(|| Error::parse("--p", "flag is required here"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WorkedExample {
    #[value(name = "two-variable", alias = "5.3.1")]
    TwoVariable,
    #[value(name = "three-variable", alias = "5.3.2")]
    ThreeVariable,
}

/// A multivariate instance: either a worked example or a base matrix file
/// with probabilities and level.
#[derive(Debug, Args)]
pub struct MultiInstance {
    #[arg(long, value_enum)]
    pub example: Option<WorkedExample>,
    /// Base matrix file (JSON or CSV)
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Probabilities p_0,...,p_d
    #[arg(long, value_parser = scalar_list_arg)]
    pub probs: Option<ScalarList>,
    #[arg(long)]
    pub level: Option<usize>,
}

impl MultiInstance {
    fn has_any(&self) -> bool {
        self.example.is_some() || self.matrix.is_some()
    }

    fn base(&self) -> Result<(DenseMatrix, Option<Vec<ExactScalar>>, usize)> {
        if let Some(ex) = self.example {
            let (a, p) = match ex {
                WorkedExample::TwoVariable => multivariate::two_variable_example(),
                WorkedExample::ThreeVariable => multivariate::three_variable_example(),
            };
            return Ok((a, Some(self.probs.clone().map_or(p, |l| l.0)), self.level.unwrap_or(2)));
        }
        let path = self
            .matrix
            .as_ref()
            .ok_or_else(|| Error::parse("--matrix", "give --matrix or --example"))?;
        let a = read_matrix(path)?;
        let level = self.level.ok_or_else(|| Error::parse("--level", "flag is required with --matrix"))?;
        Ok((a, self.probs.clone().map(|l| l.0), level))
    }

    fn build(&self) -> Result<MultivariateKravchuk> {
        let (a, probs, level) = self.base()?;
        let probs = probs.ok_or_else(|| Error::parse("--probs", "flag is required with --matrix"))?;
        build_multivariate(&a, &probs, level)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Orthogonality,
    Inverse,
    Involution,
    Determinant,
    TransposeLemma,
    #[value(alias = "eq3")]
    MultinomialOrthogonality,
    Appell,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Univariate,
    Coding,
    Multivariate,
    Expand,
    Expand2d,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Side {
    /// `Φ · data`
    #[default]
    Left,
    /// `dataᵀ · Φ`
    Right,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit Φ, B and Γ for (N, p)
    Gen {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Emit Φ⁻¹ = B Φᵀ Γ⁻¹
    Inverse {
        #[command(flatten)]
        inst: Instance,
        /// Multiply by 2^N
        #[arg(long)]
        scaled: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check identities and print PASS/FAIL per identity
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        identity: Identity,
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        multi: MultiInstance,
        /// Basis dump written by `gen`; checks the stored matrices
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Apply a transform
    Transform {
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        multi: MultiInstance,
        /// Second level M (expand2d)
        #[arg(long = "M")]
        m: Option<usize>,
        /// Second probability (expand2d); defaults to --p
        #[arg(long, value_parser = scalar_arg)]
        p2: Option<ExactScalar>,
        /// Alphabet size (coding)
        #[arg(long)]
        s: Option<u64>,
        /// Data vector
        #[arg(long = "vec", value_parser = scalar_list_arg)]
        vector: Option<ScalarList>,
        /// Polynomial coefficients, ascending degree (expand)
        #[arg(long, value_parser = scalar_list_arg)]
        poly: Option<ScalarList>,
        /// Bivariate coefficients: row a holds x^a y^0, x^a y^1, ...; rows split by ';'
        #[arg(long, value_parser = scalar_rows_arg)]
        poly2d: Option<DenseMatrix>,
        #[arg(long, value_enum, default_value_t)]
        side: Side,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Induced (symmetric power) matrix of a base matrix
    Sympower {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        level: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Multivariate Krawtchouk system with verification report
    Multi {
        #[command(flatten)]
        multi: MultiInstance,
    },
    /// Coding-theory computations
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    /// Alphabet size / field order
    #[arg(long)]
    pub s: u64,
    /// Generator matrix, CSV of integers
    #[arg(long)]
    pub generator: Option<PathBuf>,
    /// Code words, CSV of integers, one word per line
    #[arg(long)]
    pub words: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CodeAction {
    /// Weight distribution of a linear code and its transform
    Weight(CodeArgs),
    /// Distance enumerator of a code
    Distance(CodeArgs),
    /// Check the dual weight distribution against the transform
    Macwilliams(CodeArgs),
    /// Check nonnegativity of the transformed distance enumerator
    Delsarte(CodeArgs),
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}

fn read_matrix(path: &Path) -> Result<DenseMatrix> {
    matrix_from_text(&read_file(path)?).map_err(|e| match e {
        Error::Parse { position, message } => Error::parse(format!("{}: {position}", path.display()), message),
        other => other,
    })
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { position, message } => Error::parse(format!("{}: {position}", path.display()), message),
        other => other,
    }
}

impl CodeArgs {
    fn code(&self) -> Result<LinearCode> {
        let path = self
            .generator
            .as_ref()
            .ok_or_else(|| Error::parse("--generator", "flag is required"))?;
        let rows = int_rows_from_csv(&read_file(path)?).map_err(|e| in_file(path, e))?;
        let n = rows.first().map_or(0, Vec::len);
        LinearCode::new(self.s, n, rows)
    }

    /// Words from `--words`, or the codewords of `--generator`.
    fn words(&self) -> Result<Vec<Vec<u64>>> {
        if let Some(path) = &self.words {
            let rows = int_rows_from_csv(&read_file(path)?).map_err(|e| in_file(path, e))?;
            return rows
                .into_iter()
                .enumerate()
                .map(|(i, r)| {
                    r.into_iter()
                        .map(|x| {
                            u64::try_from(x)
                                .map_err(|_| Error::parse(format!("{}: row {}", path.display(), i + 1), "negative symbol"))
                        })
                        .collect()
                })
                .collect();
        }
        Ok(self.code()?.codewords()?.to_vec())
    }
}

fn counts_json(v: &[u64]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn basis_json(b: &KravchukBasis) -> Value {
    json!({
        "N": b.level(),
        "p": format_scalar(b.p()),
        "Phi": matrix_to_json(b.phi()),
        "B": matrix_to_json(b.b()),
        "Gamma": matrix_to_json(b.gamma()),
    })
}

fn load_basis(path: &Path) -> Result<KravchukBasis> {
    let text = read_file(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    let field = |k: &str| v.get(k).ok_or_else(|| Error::parse(path.display().to_string(), format!("missing {k:?}")));
    let level = field("N")?
        .as_u64()
        .ok_or_else(|| Error::parse(format!("{}: N", path.display()), "expected an integer"))? as usize;
    let p = field("p")?
        .as_str()
        .ok_or_else(|| Error::parse(format!("{}: p", path.display()), "expected a rational string"))
        .and_then(parse_scalar)?;
    let m = |k: &str| crate::io::matrix_from_json(field(k)?).map_err(|e| in_file(path, e));
    KravchukBasis::from_parts(level, p, m("Phi")?, m("B")?, m("Gamma")?)
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    let s = serde_json::to_string_pretty(v).expect("serializable");
    writeln!(out, "{s}").map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::parse("stdout", e.to_string())
}

fn emit_vector(out: &mut dyn Write, v: &[ExactScalar], format: Format) -> Result<()> {
    match format {
        Format::Json => emit(out, &vector_to_json(v)),
        Format::Csv => {
            let s: Vec<String> = v.iter().map(format_scalar).collect();
            writeln!(out, "{}", s.join(",")).map_err(io_err)
        }
    }
}

fn emit_matrix(out: &mut dyn Write, m: &DenseMatrix, format: Format) -> Result<()> {
    match format {
        Format::Json => emit(out, &matrix_to_json(m)),
        Format::Csv => write!(out, "{}", matrix_to_csv(m)).map_err(io_err),
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub nonzero: usize,
    pub detail: String,
}

impl Check {
    fn from_defect(name: &str, defect: &DenseMatrix) -> Self {
        Check {
            name: name.into(),
            nonzero: defect.count_nonzero(),
            detail: String::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.nonzero == 0
    }
}

fn univariate_checks(b: &KravchukBasis, which: Identity) -> Vec<Check> {
    use Identity::*;
    let mut checks = Vec::new();
    let n1 = b.level() + 1;
    if matches!(which, Orthogonality | All) {
        checks.push(Check::from_defect("orthogonality", &b.orthogonality_defect()));
    }
    if matches!(which, Inverse | All) {
        let inv = b.inverse();
        let id = DenseMatrix::identity(n1);
        let left = &(&inv * b.phi()) - &id;
        let right = &(b.phi() * &inv) - &id;
        let mut c = Check::from_defect("inverse", &left);
        c.nonzero += right.count_nonzero();
        checks.push(c);
    }
    if matches!(which, Involution | All) {
        let inv = b.involution_identity();
        let mut c = Check::from_defect("involution", &inv.defect);
        if !inv.inverse_agrees {
            c.nonzero += 1;
            c.detail = "corollary inverse disagrees".into();
        }
        checks.push(c);
    }
    if matches!(which, Determinant | All) {
        let det = b.determinant();
        let expect = univariate::expected_determinant(b.level());
        checks.push(Check {
            name: "determinant".into(),
            nonzero: usize::from(det != expect),
            detail: format!("det = {det}, expected {expect}"),
        });
    }
    if matches!(which, Appell | All) {
        let order = b.level().max(1);
        let mut nonzero = 0;
        let mut detail = format!("order {order}");
        match univariate::appell_identity_defects(b.p(), b.level(), order) {
            Ok(defects) => {
                nonzero += defects.iter().map(|d| d.coefficients().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count()).sum::<usize>();
                let f = univariate::appell_functions(b.p(), order).expect("validated");
                let vu = f.v.compose(&f.u).expect("U(0) = 0").sub(&TruncatedSeries::variable(order));
                nonzero += vu.coefficients().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count();
            }
            Err(e) => {
                nonzero += 1;
                detail = e.to_string();
            }
        }
        checks.push(Check {
            name: "appell".into(),
            nonzero,
            detail,
        });
    }
    checks
}

fn multi_checks(multi: &MultiInstance, which: Identity) -> Result<Vec<Check>> {
    use Identity::*;
    let mut checks = Vec::new();
    let (a, probs, level) = multi.base()?;
    if matches!(which, TransposeLemma | All) {
        checks.push(Check::from_defect("transpose-lemma", &transpose_lemma_defect(&a, level)?));
    }
    if matches!(which, MultinomialOrthogonality | All) {
        if let Some(probs) = probs {
            let mk = build_multivariate(&a, &probs, level)?;
            checks.push(Check::from_defect("multinomial-orthogonality", &mk.orthogonality_defect()));
        } else if which == MultinomialOrthogonality {
            return Err(Error::parse("--probs", "flag is required for this identity"));
        }
    }
    Ok(checks)
}

fn run_verify(
    identity: Identity,
    inst: &Instance,
    multi: &MultiInstance,
    basis: Option<&Path>,
    out: &mut dyn Write,
) -> Result<bool> {
    use Identity::*;
    let mut checks = Vec::new();
    let univariate_requested = matches!(identity, Orthogonality | Inverse | Involution | Determinant | Appell)
        || (identity == All && (basis.is_some() || inst.n.is_some()));
    if univariate_requested {
        let b = match basis {
            Some(path) => load_basis(path)?,
            None => inst.basis()?,
        };
        checks.extend(univariate_checks(&b, identity));
    }
    let multi_requested = matches!(identity, TransposeLemma | MultinomialOrthogonality) || (identity == All && multi.has_any());
    if multi_requested {
        checks.extend(multi_checks(multi, identity)?);
    }
    if checks.is_empty() {
        return Err(Error::parse("verify", "no instance given: use --N/--p, --basis, --matrix or --example"));
    }
    let mut all = true;
    for c in &checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        all &= c.passed();
        let mut line = format!("{status} {} nonzero_defect_entries={}", c.name, c.nonzero);
        if !c.detail.is_empty() {
            line.push_str(&format!(" ({})", c.detail));
        }
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(all)
}

#[allow(clippy::too_many_arguments)]
fn run_transform(
    mode: Mode,
    inst: &Instance,
    multi: &MultiInstance,
    m: Option<usize>,
    p2: Option<&ExactScalar>,
    s: Option<u64>,
    vector: Option<&[ExactScalar]>,
    poly: Option<&[ExactScalar]>,
    poly2d: Option<&DenseMatrix>,
    side: Side,
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    let need_vec = || vector.ok_or_else(|| Error::parse("--vec", "flag is required for this mode"));
    match mode {
        Mode::Univariate => {
            let b = inst.basis()?;
            let r = match side {
                Side::Left => b.transform(need_vec()?)?,
                Side::Right => b.transform_left(need_vec()?)?,
            };
            emit_vector(out, &r, format)
        }
        Mode::Coding => {
            let s = s.ok_or_else(|| Error::parse("--s", "flag is required for coding mode"))?;
            let ck = coding_matrix(inst.level()?, s)?;
            emit_vector(out, &ck.transform(need_vec()?)?, format)
        }
        Mode::Multivariate => {
            let mk = multi.build()?;
            let r = match side {
                Side::Left => mk.transform(need_vec()?)?,
                Side::Right => mk.transform_left(need_vec()?)?,
            };
            emit_vector(out, &r, format)
        }
        Mode::Expand => {
            let f = PolyCoeffs(poly.ok_or_else(|| Error::parse("--poly", "flag is required for expand mode"))?.to_vec());
            let c = operator::expansion_coefficients(&f, inst.level()?, &inst.prob()?)?;
            emit_vector(out, &c, format)
        }
        Mode::Expand2d => {
            let f = BivariatePoly(
                poly2d
                    .ok_or_else(|| Error::parse("--poly2d", "flag is required for expand2d mode"))?
                    .clone(),
            );
            let m = m.ok_or_else(|| Error::parse("--M", "flag is required for expand2d mode"))?;
            let p1 = inst.prob()?;
            let p2 = p2.cloned().unwrap_or_else(|| p1.clone());
            let c = operator::expansion_coefficients_2d(&f, inst.level()?, m, &p1, &p2)?;
            emit_matrix(out, &c, format)
        }
    }
}

fn run_multi(multi: &MultiInstance, out: &mut dyn Write) -> Result<bool> {
    let mk = multi.build()?;
    let ortho = mk.orthogonality_defect();
    let lemma = transpose_lemma_defect(&mk.a, mk.level)?;
    let ordering: Vec<Value> = mk.ordering.iter().map(|m| json!(m.exponents())).collect();
    let pass = ortho.is_zero() && lemma.is_zero();
    emit(
        out,
        &json!({
            "level": mk.level,
            "ordering": ordering,
            "Phi": matrix_to_json(&mk.phi),
            "BPbar": matrix_to_json(&mk.weights()),
            "BDbar": matrix_to_json(&mk.norms()),
            "verification": {
                "orthogonality_nonzero": ortho.count_nonzero(),
                "transpose_lemma_nonzero": lemma.count_nonzero(),
                "pass": pass,
            },
        }),
    )?;
    Ok(pass)
}

fn run_code(action: &CodeAction, out: &mut dyn Write) -> Result<bool> {
    match action {
        CodeAction::Weight(args) => {
            let code = args.code()?;
            let dist = code.weight_distribution()?;
            let scalars: Vec<ExactScalar> = dist.iter().map(|&x| ExactScalar::from_integer((x as i64).into())).collect();
            let t = coding_matrix(code.length(), args.s)?.transform(&scalars)?;
            emit(out, &json!({ "weight_distribution": counts_json(&dist), "transform": vector_to_json(&t) }))?;
            Ok(true)
        }
        CodeAction::Distance(args) => {
            let words = args.words()?;
            let d = coding::distance_enumerator(&words, args.s)?;
            let t = coding::delsarte_transform(&words, args.s)?;
            emit(out, &json!({ "distance_enumerator": vector_to_json(&d), "transform": vector_to_json(&t) }))?;
            Ok(true)
        }
        CodeAction::Macwilliams(args) => {
            let code = args.code()?;
            let predicted = coding::macwilliams_prediction(&code)?;
            let holds = coding::macwilliams_check(&code)?;
            emit(
                out,
                &json!({
                    "code": counts_json(&code.weight_distribution()?),
                    "dual": counts_json(&code.dual()?.weight_distribution()?),
                    "predicted": vector_to_json(&predicted),
                    "holds": holds,
                }),
            )?;
            Ok(holds)
        }
        CodeAction::Delsarte(args) => {
            let words = args.words()?;
            let t = coding::delsarte_transform(&words, args.s)?;
            let ok = coding::delsarte_check(&words, args.s)?;
            emit(
                out,
                &json!({
                    "distance_enumerator": vector_to_json(&coding::distance_enumerator(&words, args.s)?),
                    "transform": vector_to_json(&t),
                    "nonnegative": ok,
                }),
            )?;
            Ok(ok)
        }
    }
}

/// Execute a parsed command; `Ok(false)` means a verification failed.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Gen { inst, format } => {
            let b = inst.basis()?;
            match format {
                Format::Json => emit(out, &basis_json(&b))?,
                Format::Csv => {
                    for (name, m) in [("Phi", b.phi()), ("B", b.b()), ("Gamma", b.gamma())] {
                        writeln!(out, "# {name}").map_err(io_err)?;
                        write!(out, "{}", matrix_to_csv(m)).map_err(io_err)?;
                    }
                }
            }
            Ok(true)
        }
        Command::Inverse { inst, scaled, format } => {
            let b = inst.basis()?;
            let mut inv = b.inverse();
            if *scaled {
                inv = inv.scale(&crate::math::scalar::pow(&crate::math::scalar::int(2), b.level()));
            }
            emit_matrix(out, &inv, *format)?;
            Ok(true)
        }
        Command::Verify {
            identity,
            inst,
            multi,
            basis,
        } => run_verify(*identity, inst, multi, basis.as_deref(), out),
        Command::Transform {
            mode,
            inst,
            multi,
            m,
            p2,
            s,
            vector,
            poly,
            poly2d,
            side,
            format,
        } => {
            run_transform(
                *mode,
                inst,
                multi,
                *m,
                p2.as_ref(),
                *s,
                vector.as_ref().map(|l| l.0.as_slice()),
                poly.as_ref().map(|l| l.0.as_slice()),
                poly2d.as_ref(),
                *side,
                *format,
                out,
            )?;
            Ok(true)
        }
        Command::Sympower { matrix, level, format } => {
            let a = read_matrix(matrix)?;
            let induced = induced_matrix(&a, *level)?;
            match format {
                Format::Json => {
                    let ordering: Vec<Value> = induced.ordering.iter().map(|m| json!(m.exponents())).collect();
                    emit(
                        out,
                        &json!({ "level": level, "ordering": ordering, "matrix": matrix_to_json(&induced.matrix) }),
                    )?;
                }
                Format::Csv => emit_matrix(out, &induced.matrix, Format::Csv)?,
            }
            Ok(true)
        }
        Command::Multi { multi } => run_multi(multi, out),
        Command::Code { action } => run_code(action, out),
    }
}

/// Parse arguments, run, and return the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("krawtchouk").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn transform_modes() {
        let (c, out, _) = call(&["transform", "--mode", "coding", "--N", "3", "--s", "2", "--vec", "1,0,0,1", "--format", "csv"]);
        assert_eq!((c, out.trim()), (0, "2,0,6,0"));
        let (c, out, _) = call(&["transform", "--mode", "expand", "--N", "1", "--p", "1/2", "--poly", "0,1", "--format", "csv"]);
        assert_eq!((c, out.trim()), (0, "0,1"));
        let (c, out, _) = call(&["transform", "--mode", "univariate", "--N", "2", "--p", "1/2", "--vec", "1,0,0", "--format", "csv"]);
        assert_eq!((c, out.trim()), (0, "1,2,1"));
    }

    #[test]
    fn bad_input_exits_two() {
        let (c, _, err) = call(&["gen", "--N", "2", "--p", "1/x"]);
        assert_eq!(c, EXIT_USAGE);
        assert!(err.contains("--p"));
        let (c, _, err) = call(&["transform", "--mode", "univariate", "--N", "2", "--p", "1/2", "--vec", "1,0"]);
        assert_eq!(c, EXIT_USAGE);
        assert!(err.contains("dimension"));
        let (c, _, err) = call(&["transform", "--mode", "univariate", "--N", "2", "--p", "1/2", "--vec", "1,q,0"]);
        assert_eq!(c, EXIT_USAGE);
        assert!(err.contains("item 2"), "{err}");
        let (c, _, _) = call(&["gen", "--N", "2", "--p", "3/2"]);
        assert_eq!(c, EXIT_USAGE);
        let (c, _, _) = call(&["verify", "--identity", "orthogonality"]);
        assert_eq!(c, EXIT_USAGE);
    }

    #[test]
    fn verify_reports() {
        let (c, out, _) = call(&["verify", "--identity", "involution", "--N", "4", "--p", "1/3"]);
        assert_eq!(c, 0);
        assert!(out.starts_with("PASS involution"));
        let (c, out, _) = call(&["verify", "--identity", "determinant", "--N", "3", "--p", "2/5"]);
        assert_eq!(c, 0);
        assert!(out.contains("det = 64"));
        let (c, out, _) = call(&["verify", "--identity", "eq3", "--example", "5.3.1"]);
        assert_eq!(c, 0, "{out}");
        assert!(out.starts_with("PASS multinomial-orthogonality"));
        let (c, out, _) = call(&["verify", "--N", "5", "--p", "3/4"]);
        assert_eq!(c, 0);
        assert_eq!(out.lines().count(), 5);
        let (c, out, _) = call(&["verify", "--example", "three-variable"]);
        assert_eq!(c, 0);
        assert_eq!(out.lines().count(), 2);
    }
}
