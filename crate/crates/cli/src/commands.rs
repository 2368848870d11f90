//! Command-line definitions and command execution.
//!
//! Exit status: 0 on success (and when every requested verification produced
//! an empty failure list), 1 when some verification failed, 2 on
//! configuration or parse errors (clap uses 2 for usage errors as well).
//! Diagnostics go to stderr; data goes to stdout.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use rpq_core::{
    check_general_algebra, check_scheme_algebra, default_sample_points, hermite_cosine_form,
    hermite_from_rs, hermite_recurrence, matrix_rep, parse_rational, rs_difference_check,
    rs_direct, rs_recurrence, verify_binomial_identities, verify_number_identities,
    verify_theorem_premises, BivariateRationalFunction, Error, IdentityFailure, IdentityReport,
    LadderAction, Params, Scheme, UPoly,
};

use crate::render::{self, Format};
use crate::schemefile;

#[derive(Parser)]
#[command(
    name = "rpq",
    version,
    about = "Exact (R,p,q)-deformed calculus: numbers, binomials, Rogers-Szego and \
             continuous Hermite polynomials, identity verification, oscillator algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the deformed numbers `[0]` .. `[nmax]`
    Numbers(NumbersArgs),
    /// Print the deformed binomial triangle up to row nmax
    Binomials(NumbersArgs),
    /// Print the Rogers-Szego polynomial H_n
    Rs(RsArgs),
    /// Print the continuous Hermite polynomial of degree n in cosine form
    Hermite(HermiteArgs),
    /// Run the identity verification suites and exit 0 iff all pass
    Verify(VerifyArgs),
    /// Run the oscillator algebra checks and exit 0 iff all pass
    Algebra(AlgebraArgs),
    /// Emit the truncated float matrix representation and its residuals
    Matrix(MatrixArgs),
}

#[derive(Args)]
pub struct SchemeArgs {
    /// Scheme kind (use a scheme file for custom deformation functions)
    #[arg(long, value_parser = ["js", "cj", "quesne", "hk", "custom"])]
    pub scheme: Option<String>,

    /// HK exponent mu
    #[arg(long)]
    pub mu: Option<i32>,

    /// HK exponent nu
    #[arg(long)]
    pub nu: Option<i32>,

    /// HK auxiliary factor h as a constant rational (default 1)
    #[arg(long, value_name = "A/B")]
    pub h_const: Option<String>,

    /// JSON scheme document; required for custom schemes, may carry p and q
    #[arg(long, value_name = "FILE")]
    pub scheme_file: Option<PathBuf>,

    /// Deformation parameter p, decimal-free ("2" or "5/2")
    #[arg(short, value_name = "A/B")]
    pub p: Option<String>,

    /// Deformation parameter q, decimal-free
    #[arg(short, value_name = "A/B")]
    pub q: Option<String>,

    /// Reject parameters outside the scheme's stated domain instead of warning
    #[arg(long)]
    pub strict_domain: bool,
}

impl SchemeArgs {
    fn resolve_scheme(&self) -> Result<(Scheme, Option<Params>)> {
        if let Some(path) = &self.scheme_file {
            return schemefile::load_scheme_file(path);
        }
        let kind = self
            .scheme
            .as_deref()
            .ok_or_else(|| anyhow!("pass --scheme or --scheme-file"))?;
        let scheme = match kind {
            "js" => Scheme::Js,
            "cj" => Scheme::Cj,
            "quesne" => Scheme::Quesne,
            "hk" => {
                let mu = self.mu.ok_or_else(|| anyhow!("--scheme hk needs --mu"))?;
                let nu = self.nu.ok_or_else(|| anyhow!("--scheme hk needs --nu"))?;
                let h = match &self.h_const {
                    None => BivariateRationalFunction::one(),
                    Some(text) => {
                        let value = parse_rational(text)
                            .map_err(|e| anyhow!("bad --h-const {text:?}: {e}"))?;
                        BivariateRationalFunction::constant(value)
                    }
                };
                Scheme::hk(mu, nu, h).map_err(|e| anyhow!("invalid HK scheme: {e}"))?
            }
            "custom" => bail!("custom schemes need --scheme-file"),
            other => bail!("unknown scheme {other:?}"),
        };
        Ok((scheme, None))
    }

    /// The scheme plus mandatory parameters (flags override the file).
    fn resolve(&self) -> Result<(Scheme, Params)> {
        let (scheme, file_params) = self.resolve_scheme()?;
        let params = self.resolve_params(file_params)?.ok_or_else(|| {
            anyhow!("parameters required: pass -p and -q (or a scheme file carrying them)")
        })?;
        self.domain_gate(&scheme, &params)?;
        Ok((scheme, params))
    }

    fn resolve_params(&self, file_params: Option<Params>) -> Result<Option<Params>> {
        match (&self.p, &self.q) {
            (Some(p), Some(q)) => Ok(Some(
                Params::from_strs(p, q).map_err(|e| anyhow!("bad parameters: {e}"))?,
            )),
            (None, None) => Ok(file_params),
            _ => bail!("pass both -p and -q, or neither"),
        }
    }

    fn domain_gate(&self, scheme: &Scheme, params: &Params) -> Result<()> {
        if scheme.in_paper_domain(params) {
            return Ok(());
        }
        let message = format!(
            "parameters (p={}, q={}) are outside the stated domain of the {} scheme",
            params.p(),
            params.q(),
            scheme.kind_name()
        );
        if self.strict_domain {
            bail!("{message} (--strict-domain)");
        }
        eprintln!("warning: {message}");
        Ok(())
    }
}

#[derive(Args)]
pub struct NumbersArgs {
    #[command(flatten)]
    pub common: SchemeArgs,
    /// Largest index
    #[arg(long, default_value_t = 10)]
    pub nmax: i64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Args)]
pub struct RsArgs {
    #[command(flatten)]
    pub common: SchemeArgs,
    /// Polynomial degree
    #[arg(short, long)]
    pub n: i64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// In LaTeX output, keep the binomial coefficients symbolic
    #[arg(long)]
    pub symbolic: bool,
}

#[derive(Args)]
pub struct HermiteArgs {
    #[command(flatten)]
    pub common: SchemeArgs,
    /// Polynomial degree
    #[arg(short, long)]
    pub n: i64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: SchemeArgs,
    /// Largest index fed to every suite
    #[arg(long, default_value_t = 10)]
    pub nmax: i64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// JSON file with [p, q] string pairs to verify at (default: built-in grid)
    #[arg(long, value_name = "FILE")]
    pub sample_points: Option<PathBuf>,
    /// Fan the sample points across threads (deterministic ordered merge)
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Args)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub common: SchemeArgs,
    /// Largest basis index checked
    #[arg(long, default_value_t = 10)]
    pub nmax: i64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MatrixSelect {
    /// The lowering operator A
    A,
    /// The raising operator A-dagger
    Adag,
    /// The number operator N
    N,
}

#[derive(Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub common: SchemeArgs,
    /// Truncation dimension (>= 2)
    #[arg(long, default_value_t = 16)]
    pub cutoff: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Which matrix CSV output prints
    #[arg(long, value_enum, default_value_t = MatrixSelect::A)]
    pub which: MatrixSelect,
}

/// Run a parsed command; the returned byte is the process exit status.
pub fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Numbers(args) => numbers(args),
        Command::Binomials(args) => binomials(args),
        Command::Rs(args) => rs(args),
        Command::Hermite(args) => hermite(args),
        Command::Verify(args) => verify(args),
        Command::Algebra(args) => algebra(args),
        Command::Matrix(args) => matrix(args),
    }
}

#[derive(Serialize)]
struct NumbersDoc {
    command: &'static str,
    scheme: &'static str,
    p: String,
    q: String,
    nmax: i64,
    values: Vec<String>,
}

fn numbers(args: NumbersArgs) -> Result<u8> {
    let (scheme, params) = args.common.resolve()?;
    if args.nmax < 0 {
        bail!("--nmax must be nonnegative");
    }
    let mut values = Vec::new();
    for n in 0..=args.nmax {
        values.push(scheme.number(&params, n).map_err(|e| anyhow!("[{n}]: {e}"))?);
    }
    match args.format {
        Format::Plain => {
            for (n, v) in values.iter().enumerate() {
                println!("{n}\t{}", render::rat_str(v));
            }
        }
        Format::Csv => {
            println!("n,value");
            for (n, v) in values.iter().enumerate() {
                println!("{}", render::csv_line(&[n.to_string(), render::rat_str(v)]));
            }
        }
        Format::Json => println!(
            "{}",
            render::to_json(&NumbersDoc {
                command: "numbers",
                scheme: scheme.kind_name(),
                p: render::rat_str(params.p()),
                q: render::rat_str(params.q()),
                nmax: args.nmax,
                values: values.iter().map(render::rat_str).collect(),
            })
        ),
        Format::Latex => {
            let rows: Vec<Vec<String>> = values
                .iter()
                .enumerate()
                .map(|(n, v)| vec![n.to_string(), render::rat_latex(v)])
                .collect();
            println!("{}", render::latex_table(&["$n$", "$[n]$"], &rows));
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct BinomialsDoc {
    command: &'static str,
    scheme: &'static str,
    p: String,
    q: String,
    nmax: i64,
    rows: Vec<Vec<String>>,
}

fn binomials(args: NumbersArgs) -> Result<u8> {
    let (scheme, params) = args.common.resolve()?;
    if args.nmax < 0 {
        bail!("--nmax must be nonnegative");
    }
    let mut rows: Vec<Vec<String>> = Vec::new();
    for n in 0..=args.nmax {
        let mut row = Vec::new();
        for k in 0..=n {
            let value = scheme
                .binomial(&params, n, k)
                .map_err(|e| anyhow!("binomial({n}, {k}): {e}"))?;
            row.push(render::rat_str(&value));
        }
        rows.push(row);
    }
    match args.format {
        Format::Plain => {
            for (n, row) in rows.iter().enumerate() {
                println!("{n}\t{}", row.join(" "));
            }
        }
        Format::Csv => {
            println!("n,k,value");
            for (n, row) in rows.iter().enumerate() {
                for (k, value) in row.iter().enumerate() {
                    println!(
                        "{}",
                        render::csv_line(&[n.to_string(), k.to_string(), value.clone()])
                    );
                }
            }
        }
        Format::Json => println!(
            "{}",
            render::to_json(&BinomialsDoc {
                command: "binomials",
                scheme: scheme.kind_name(),
                p: render::rat_str(params.p()),
                q: render::rat_str(params.q()),
                nmax: args.nmax,
                rows,
            })
        ),
        Format::Latex => {
            let table_rows: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .map(|(n, row)| vec![n.to_string(), row.join(" \\quad ")])
                .collect();
            println!("{}", render::latex_table(&["$n$", "row"], &table_rows));
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct RsDoc {
    command: &'static str,
    scheme: &'static str,
    p: String,
    q: String,
    n: i64,
    coefficients: Vec<String>,
    terms: Vec<(usize, String)>,
}

fn rs(args: RsArgs) -> Result<u8> {
    let (scheme, params) = args.common.resolve()?;
    if args.n < 0 {
        bail!("-n must be nonnegative");
    }
    let poly = rs_direct(&scheme, &params, args.n).map_err(|e| anyhow!("H_{}: {e}", args.n))?;
    match args.format {
        Format::Plain => println!("{}", render::zpoly_plain(&poly)),
        Format::Csv => {
            println!("k,coefficient");
            for k in 0..=args.n as usize {
                println!(
                    "{}",
                    render::csv_line(&[k.to_string(), render::rat_str(&poly.coeff(k))])
                );
            }
        }
        Format::Json => {
            let coefficients = (0..=args.n as usize)
                .map(|k| render::rat_str(&poly.coeff(k)))
                .collect();
            let terms = poly.terms().map(|(k, c)| (k, render::rat_str(c))).collect();
            println!(
                "{}",
                render::to_json(&RsDoc {
                    command: "rs",
                    scheme: scheme.kind_name(),
                    p: render::rat_str(params.p()),
                    q: render::rat_str(params.q()),
                    n: args.n,
                    coefficients,
                    terms,
                })
            );
        }
        Format::Latex => {
            if args.symbolic {
                let mut body = String::new();
                for k in 0..=args.n {
                    if k > 0 {
                        body.push_str(" + ");
                    }
                    body.push_str(&format!(
                        "\\left[\\begin{{smallmatrix}}{}\\\\{}\\end{{smallmatrix}}\\right] ",
                        args.n, k
                    ));
                    match k {
                        0 => {}
                        1 => body.push('z'),
                        _ => body.push_str(&format!("z^{{{k}}}")),
                    }
                }
                println!("H_{{{}}}(z) = {}", args.n, body.trim_end());
            } else {
                println!("H_{{{}}}(z) = {}", args.n, render::zpoly_latex(&poly));
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct HermiteDoc {
    command: &'static str,
    scheme: &'static str,
    p: String,
    q: String,
    n: i64,
    terms: Vec<(i64, String)>,
    cosine: Vec<(i64, String)>,
}

fn hermite(args: HermiteArgs) -> Result<u8> {
    let (scheme, params) = args.common.resolve()?;
    if args.n < 0 {
        bail!("-n must be nonnegative");
    }
    let poly =
        hermite_from_rs(&scheme, &params, args.n).map_err(|e| anyhow!("Herm_{}: {e}", args.n))?;
    let cosine = hermite_cosine_form(&poly).map_err(|e| anyhow!("cosine form: {e}"))?;
    match args.format {
        Format::Plain => println!("{}", render::cosine_plain(&cosine)),
        Format::Csv => {
            println!("m,coefficient");
            for (m, c) in &cosine {
                println!("{}", render::csv_line(&[m.to_string(), render::rat_str(c)]));
            }
        }
        Format::Json => println!(
            "{}",
            render::to_json(&HermiteDoc {
                command: "hermite",
                scheme: scheme.kind_name(),
                p: render::rat_str(params.p()),
                q: render::rat_str(params.q()),
                n: args.n,
                terms: render::upoly_pairs(&poly),
                cosine: cosine
                    .iter()
                    .map(|(m, c)| (*m, render::rat_str(c)))
                    .collect(),
            })
        ),
        Format::Latex => println!(
            "\\mathbb{{H}}_{{{}}}(\\cos\\theta) = {}",
            args.n,
            render::cosine_latex(&cosine)
        ),
    }
    Ok(0)
}

#[derive(Serialize)]
struct FailureDoc {
    identity: String,
    n: i64,
    m: Option<i64>,
    k: Option<i64>,
    lhs: String,
    rhs: String,
}

impl From<&IdentityFailure> for FailureDoc {
    fn from(f: &IdentityFailure) -> Self {
        Self {
            identity: f.identity.to_string(),
            n: f.n,
            m: f.m,
            k: f.k,
            lhs: render::rat_str(&f.lhs),
            rhs: render::rat_str(&f.rhs),
        }
    }
}

#[derive(Serialize)]
struct SuiteDoc {
    name: &'static str,
    status: String,
    checked: usize,
    failures: Vec<FailureDoc>,
}

impl SuiteDoc {
    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Serialize)]
struct PointDoc {
    p: String,
    q: String,
    suites: Vec<SuiteDoc>,
}

#[derive(Serialize)]
struct VerifyDoc {
    command: &'static str,
    scheme: &'static str,
    nmax: i64,
    points: Vec<PointDoc>,
    all_passed: bool,
}

fn suite_outcome(name: &'static str, outcome: Result<IdentityReport, Error>) -> SuiteDoc {
    match outcome {
        Ok(report) => SuiteDoc {
            name,
            status: if report.passed() { "pass" } else { "fail" }.to_string(),
            checked: report.checked,
            failures: report.failures.iter().map(FailureDoc::from).collect(),
        },
        Err(Error::SingularParameters) => SuiteDoc {
            name,
            status: "skipped: singular parameters".to_string(),
            checked: 0,
            failures: Vec::new(),
        },
        Err(Error::MissingPhiTriple) => SuiteDoc {
            name,
            status: "skipped: no phi triple".to_string(),
            checked: 0,
            failures: Vec::new(),
        },
        Err(Error::UnsupportedScheme) => SuiteDoc {
            name,
            status: "skipped: unsupported for this scheme".to_string(),
            checked: 0,
            failures: Vec::new(),
        },
        Err(e) => SuiteDoc {
            name,
            status: format!("skipped: {e}"),
            checked: 0,
            failures: Vec::new(),
        },
    }
}

/// Equality of the two generation routes, recorded through the report
/// machinery so failures carry the first differing coefficient.
fn equivalence_suites(scheme: &Scheme, par: &Params, nmax: i64) -> [SuiteDoc; 2] {
    let rs_outcome = (|| {
        let mut report = IdentityReport::new();
        for n in 0..=nmax {
            let direct = rs_direct(scheme, par, n)?;
            let recurred = rs_recurrence(scheme, par, n)?;
            report.check_zpoly("recurrence-vs-direct", n, &recurred, &direct);
        }
        Ok(report)
    })();
    let hermite_outcome = (|| {
        let mut report = IdentityReport::new();
        for n in 0..=nmax {
            let direct = hermite_from_rs(scheme, par, n)?;
            let recurred = hermite_recurrence(scheme, par, n)?;
            check_upoly(&mut report, "hermite-equivalence", n, &recurred, &direct);
        }
        Ok(report)
    })();
    [
        suite_outcome("recurrence-vs-direct", rs_outcome),
        suite_outcome("hermite-equivalence", hermite_outcome),
    ]
}

fn check_upoly(
    report: &mut IdentityReport,
    name: &'static str,
    n: i64,
    lhs: &UPoly,
    rhs: &UPoly,
) {
    report.checked += 1;
    if lhs == rhs {
        return;
    }
    let support: std::collections::BTreeSet<i64> = lhs
        .terms()
        .map(|(m, _)| m)
        .chain(rhs.terms().map(|(m, _)| m))
        .collect();
    for m in support {
        if lhs.coeff(m) != rhs.coeff(m) {
            report.failures.push(IdentityFailure {
                identity: name,
                n,
                m: None,
                k: Some(m),
                lhs: lhs.coeff(m),
                rhs: rhs.coeff(m),
            });
            return;
        }
    }
}

fn verify_point(scheme: &Scheme, par: &Params, nmax: i64) -> PointDoc {
    let mut suites = Vec::new();
    suites.push(suite_outcome(
        "number-identities",
        verify_number_identities(scheme, par, nmax),
    ));
    suites.push(suite_outcome(
        "binomial-identities",
        verify_binomial_identities(scheme, par, nmax),
    ));
    suites.push(suite_outcome(
        "theorem-premises",
        verify_theorem_premises(scheme, par, nmax),
    ));
    let [rs_suite, hermite_suite] = equivalence_suites(scheme, par, nmax);
    suites.push(rs_suite);
    suites.push(hermite_suite);
    suites.push(suite_outcome(
        "difference-equation",
        rs_difference_check(scheme, par, nmax),
    ));
    PointDoc {
        p: render::rat_str(par.p()),
        q: render::rat_str(par.q()),
        suites,
    }
}

fn verify(args: VerifyArgs) -> Result<u8> {
    let (scheme, file_params) = args.common.resolve_scheme()?;
    let points: Vec<Params> = match args.common.resolve_params(file_params)? {
        Some(single) => vec![single],
        None => match &args.sample_points {
            Some(path) => schemefile::load_sample_points(path)?,
            None => default_sample_points(),
        },
    };
    for par in &points {
        args.common.domain_gate(&scheme, par)?;
    }

    let point_docs: Vec<PointDoc> = if args.parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = points
                .iter()
                .map(|par| scope.spawn(|| verify_point(&scheme, par, args.nmax)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    } else {
        points
            .iter()
            .map(|par| verify_point(&scheme, par, args.nmax))
            .collect()
    };

    let all_passed = point_docs
        .iter()
        .all(|point| point.suites.iter().all(SuiteDoc::passed));
    let doc = VerifyDoc {
        command: "verify",
        scheme: scheme.kind_name(),
        nmax: args.nmax,
        points: point_docs,
        all_passed,
    };
    emit_report(&doc, args.format)?;
    Ok(if all_passed { 0 } else { 1 })
}

fn emit_report(doc: &VerifyDoc, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", render::to_json(doc)),
        Format::Csv => {
            println!("p,q,suite,status,checked,failures");
            for point in &doc.points {
                for suite in &point.suites {
                    println!(
                        "{}",
                        render::csv_line(&[
                            point.p.clone(),
                            point.q.clone(),
                            suite.name.to_string(),
                            suite.status.clone(),
                            suite.checked.to_string(),
                            suite.failures.len().to_string(),
                        ])
                    );
                }
            }
        }
        Format::Plain | Format::Latex => {
            for point in &doc.points {
                for suite in &point.suites {
                    println!(
                        "{} (p={}, q={}) {}: {} ({} checks)",
                        doc.scheme, point.p, point.q, suite.name, suite.status, suite.checked
                    );
                    for failure in &suite.failures {
                        println!(
                            "  mismatch {} at n={} m={} k={}: lhs={} rhs={}",
                            failure.identity,
                            failure.n,
                            failure.m.map_or("-".to_string(), |v| v.to_string()),
                            failure.k.map_or("-".to_string(), |v| v.to_string()),
                            failure.lhs,
                            failure.rhs
                        );
                    }
                }
            }
            println!(
                "{}",
                if doc.all_passed {
                    "all verifications passed"
                } else {
                    "verification FAILED"
                }
            );
        }
    }
    Ok(())
}

fn algebra(args: AlgebraArgs) -> Result<u8> {
    let (scheme, params) = args.common.resolve()?;
    let suites = match LadderAction::new(scheme.clone(), params.clone()) {
        Ok(mut act) => {
            let general = suite_outcome("general-algebra", check_general_algebra(&mut act, args.nmax as usize));
            let specific = suite_outcome("scheme-algebra", check_scheme_algebra(&mut act, args.nmax as usize));
            vec![general, specific]
        }
        Err(e) => vec![
            suite_outcome("general-algebra", Err(e.clone())),
            suite_outcome("scheme-algebra", Err(e)),
        ],
    };
    let all_passed = suites.iter().all(SuiteDoc::passed);
    let doc = VerifyDoc {
        command: "algebra",
        scheme: scheme.kind_name(),
        nmax: args.nmax,
        points: vec![PointDoc {
            p: render::rat_str(params.p()),
            q: render::rat_str(params.q()),
            suites,
        }],
        all_passed,
    };
    emit_report(&doc, args.format)?;
    Ok(if all_passed { 0 } else { 1 })
}

#[derive(Serialize)]
struct ResidualsDoc {
    lower_raise: f64,
    raise_lower: f64,
    number_lowering: f64,
    number_raising: f64,
}

#[derive(Serialize)]
struct MatrixDoc {
    command: &'static str,
    scheme: &'static str,
    p: String,
    q: String,
    dimension: usize,
    lowering: Vec<Vec<f64>>,
    raising: Vec<Vec<f64>>,
    number: Vec<Vec<f64>>,
    residuals: ResidualsDoc,
}

fn matrix(args: MatrixArgs) -> Result<u8> {
    let (scheme, params) = args.common.resolve()?;
    let rep = matrix_rep(&scheme, &params, args.cutoff)
        .map_err(|e| anyhow!("matrix representation: {e}"))?;
    let dim = rep.dimension;
    let rows = |flat: &[f64]| -> Vec<Vec<f64>> {
        (0..dim).map(|i| flat[i * dim..(i + 1) * dim].to_vec()).collect()
    };
    match args.format {
        Format::Plain => {
            println!("dimension: {dim}");
            println!("residual |A Adag - [N+1]| (interior): {:e}", rep.residuals.lower_raise);
            println!("residual |Adag A - [N]| (interior): {:e}", rep.residuals.raise_lower);
            println!("residual |[N, A] + A|: {:e}", rep.residuals.number_lowering);
            println!("residual |[N, Adag] - Adag|: {:e}", rep.residuals.number_raising);
        }
        Format::Csv => {
            let flat = match args.which {
                MatrixSelect::A => &rep.lowering,
                MatrixSelect::Adag => &rep.raising,
                MatrixSelect::N => &rep.number,
            };
            for row in rows(flat) {
                let fields: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
                println!("{}", render::csv_line(&fields));
            }
        }
        Format::Json => println!(
            "{}",
            render::to_json(&MatrixDoc {
                command: "matrix",
                scheme: scheme.kind_name(),
                p: render::rat_str(params.p()),
                q: render::rat_str(params.q()),
                dimension: dim,
                lowering: rows(&rep.lowering),
                raising: rows(&rep.raising),
                number: rows(&rep.number),
                residuals: ResidualsDoc {
                    lower_raise: rep.residuals.lower_raise,
                    raise_lower: rep.residuals.raise_lower,
                    number_lowering: rep.residuals.number_lowering,
                    number_raising: rep.residuals.number_raising,
                },
            })
        ),
        Format::Latex => bail!("matrix output has no LaTeX form; use plain, csv or json"),
    }
    Ok(0)
}
