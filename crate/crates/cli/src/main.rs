use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qpi_core::catalog::{
    self, evaluate, identities, lookup, parse, verify_record, Form, IdentityRecord, Status,
    VerifyReport,
};
use qpi_core::modular::{
    check_atom_series, check_param_series_with_branch, prove_degree3, prove_degree5, ParamReport,
    ProofReport, RhoBranch, DEGREE3_EQUATIONS, DEGREE5_EQUATIONS,
};
use qpi_core::series::Coef;

const EXIT_FALSIFIED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "qpi", version, about = "Exact series and modular-form checks of Pi_q identities")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Series order in t (q = t^4); every coefficient below it is exact.
    #[arg(long, global = true, env = "QPI_ORDER", default_value_t = 200,
          value_parser = clap::value_parser!(i64).range(8..))]
    order: i64,
    /// Emit one JSON object per report.
    #[arg(long, global = true)]
    json: bool,
    /// Only print reports that did not pass.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one registered identity, or user identities written `lhs = rhs`.
    Verify {
        #[arg(long, required_unless_present_any = ["expr", "expr_file"])]
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        expr: Option<String>,
        /// File with one `lhs = rhs` identity per line.
        #[arg(long, conflicts_with = "id")]
        expr_file: Option<PathBuf>,
    },
    /// Verify every registered identity.
    VerifyAll,
    /// Print the t-expansion of an expression.
    Expand {
        #[arg(long, required_unless_present = "expr_file")]
        expr: Option<String>,
        /// File with one expression per line.
        #[arg(long, conflicts_with = "expr")]
        expr_file: Option<PathBuf>,
    },
    /// Replay a modular-equation proof in Q(m)[s].
    ProveModular {
        #[arg(long)]
        theorem: Theorem,
        /// Single goal such as `4-6+` or `2-5`; all goals when omitted.
        #[arg(long)]
        eq: Option<String>,
    },
    /// Check the multiplier parametrization against the theta series.
    CheckParam {
        #[arg(long, value_parser = ["3", "5"])]
        degree: String,
        #[arg(long, value_enum, default_value_t = Branch::Positive)]
        rho_branch: Branch,
        /// Also check every symbolic atom against series roots.
        #[arg(long)]
        atoms: bool,
    },
    /// List the registered identities.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "2.2")]
    Degree3,
    #[value(name = "3.2")]
    Degree5,
}

#[derive(Clone, Copy, ValueEnum)]
enum Branch {
    Positive,
    Negative,
}

#[derive(Serialize)]
struct JsonFailure {
    #[serde(skip_serializing_if = "Option::is_none")]
    exponent: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    component: Option<&'static str>,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct JsonReport {
    id: String,
    status: &'static str,
    order: Option<i64>,
    valid_order: Option<i64>,
    first_failure: Option<JsonFailure>,
    paper_form_match: Option<bool>,
    elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// A failure reported on the diagnostic stream with its exit code.
struct Fail(u8, String);

impl Fail {
    fn usage(msg: impl Into<String>) -> Self {
        Fail(EXIT_USAGE, msg.into())
    }

    fn internal(msg: impl ToString) -> Self {
        Fail(EXIT_INTERNAL, msg.to_string())
    }
}

struct Out {
    json: bool,
    quiet: bool,
    lines: Vec<String>,
    code: u8,
}

impl Out {
    fn report(&mut self, status: Status, text: String, json: JsonReport) {
        self.code = self.code.max(exit_for(status));
        if self.quiet && status == Status::Verified {
            return;
        }
        if self.json {
            self.lines.push(serde_json::to_string(&json).expect("serializable report"));
        } else {
            self.lines.push(text);
        }
    }

    fn summary(&mut self, text: String) {
        if !self.json && !self.quiet {
            self.lines.push(text);
        }
    }
}

fn exit_for(status: Status) -> u8 {
    match status {
        Status::Verified => 0,
        Status::Falsified => EXIT_FALSIFIED,
        Status::Error => EXIT_INTERNAL,
    }
}

fn coef(c: &Coef) -> String {
    c.to_string()
}

fn emit_verify(out: &mut Out, r: &VerifyReport) {
    let mut text = format!("{} {} order={}", r.id, r.status.as_str(), r.order);
    if let Some(v) = r.valid_order {
        text.push_str(&format!(" valid_order={v}"));
    }
    if let Some(f) = &r.first_failure {
        text.push_str(&format!(
            " first_failure=t^{} lhs={} rhs={}",
            f.exponent,
            coef(&f.lhs),
            coef(&f.rhs)
        ));
    }
    if let Some(e) = &r.error {
        text.push_str(&format!(" error: {e}"));
    }
    let json = JsonReport {
        id: r.id.clone(),
        status: r.status.as_str(),
        order: Some(r.order),
        valid_order: r.valid_order,
        first_failure: r.first_failure.as_ref().map(|f| JsonFailure {
            exponent: Some(f.exponent),
            component: None,
            lhs: coef(&f.lhs),
            rhs: coef(&f.rhs),
        }),
        paper_form_match: None,
        elapsed_ms: r.elapsed.as_millis(),
        error: r.error.as_ref().map(|e| e.to_string()),
    };
    out.report(r.status, text, json);
}

fn emit_tally(out: &mut Out, reports: &[VerifyReport]) {
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    out.summary(format!(
        "{} verified, {} falsified, {} errors",
        count(Status::Verified),
        count(Status::Falsified),
        count(Status::Error)
    ));
}

fn read_lines(path: &PathBuf) -> Result<Vec<(usize, String)>, Fail> {
    let text = fs::read_to_string(path)
        .map_err(|e| Fail::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect())
}

fn parse_at(src: &str, what: &str) -> Result<catalog::Expr, Fail> {
    parse(src).map_err(|e| Fail::usage(format!("{what}: {e}")))
}

fn user_identity(id: String, text: &str) -> Result<IdentityRecord, Fail> {
    let Some((lhs, rhs)) = text.split_once('=') else {
        return Err(Fail::usage(format!("{id}: expected `lhs = rhs`")));
    };
    Ok(IdentityRecord {
        lhs: parse_at(lhs, &format!("{id} (left side)"))?,
        rhs: parse_at(rhs, &format!("{id} (right side)"))?,
        id,
        source: "user",
        sign_variant: None,
        form: Form::Pi,
    })
}

fn cmd_verify(
    out: &mut Out,
    order: i64,
    id: Option<String>,
    expr: Option<String>,
    expr_file: Option<PathBuf>,
) -> Result<(), Fail> {
    let mut records = Vec::new();
    if let Some(id) = id {
        records.push(lookup(&id).map_err(|e| Fail::usage(e.to_string()))?.clone());
    }
    if let Some(text) = expr {
        records.push(user_identity("expr".into(), &text)?);
    }
    if let Some(path) = expr_file {
        for (n, line) in read_lines(&path)? {
            records.push(user_identity(format!("{}:{n}", path.display()), &line)?);
        }
    }
    let reports: Vec<_> = records.iter().map(|r| verify_record(r, order)).collect();
    for r in &reports {
        emit_verify(out, r);
    }
    if reports.len() > 1 {
        emit_tally(out, &reports);
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonExpansion {
    expr: String,
    valuation: Option<i64>,
    order: i64,
    coefficients: Vec<(i64, String)>,
}

fn cmd_expand(
    out: &mut Out,
    order: i64,
    expr: Option<String>,
    expr_file: Option<PathBuf>,
) -> Result<(), Fail> {
    let mut sources = Vec::new();
    if let Some(e) = expr {
        sources.push(("expr".to_string(), e));
    }
    if let Some(path) = expr_file {
        for (n, line) in read_lines(&path)? {
            sources.push((format!("{}:{n}", path.display()), line));
        }
    }
    for (name, src) in sources {
        let e = parse_at(&src, &name)?;
        let s = evaluate(&e, order).map_err(Fail::internal)?;
        let valuation = (!s.is_zero()).then(|| s.valuation());
        let coefficients: Vec<(i64, String)> = s.terms().map(|(n, c)| (n, coef(c))).collect();
        if out.json {
            let j = JsonExpansion {
                expr: e.to_string(),
                valuation,
                order: s.order(),
                coefficients,
            };
            out.lines.push(serde_json::to_string(&j).expect("serializable expansion"));
            continue;
        }
        match valuation {
            Some(v) => out.lines.push(format!("{e}: valuation {v}, known below t^{}", s.order())),
            None => out.lines.push(format!("{e}: zero below t^{}", s.order())),
        }
        if !out.quiet {
            for (n, c) in coefficients {
                out.lines.push(format!("t^{n} {c}"));
            }
        }
    }
    Ok(())
}

fn quad_failure(r: &ProofReport) -> Option<JsonFailure> {
    if r.sides_equal {
        return None;
    }
    let (l, rr) = (&r.lhs_canonical, &r.rhs_canonical);
    let (component, lhs, rhs) = if l.a() != rr.a() {
        ("a", l.a().to_string(), rr.a().to_string())
    } else {
        ("b", l.b().to_string(), rr.b().to_string())
    };
    Some(JsonFailure {
        exponent: None,
        component: Some(component),
        lhs,
        rhs,
    })
}

fn cmd_prove(out: &mut Out, theorem: Theorem, eq: Option<String>) -> Result<(), Fail> {
    let (goals, prove): (Vec<&str>, fn(&str) -> _) = match theorem {
        Theorem::Degree3 => (DEGREE3_EQUATIONS.to_vec(), prove_degree3),
        Theorem::Degree5 => (DEGREE5_EQUATIONS.to_vec(), prove_degree5),
    };
    let goals: Vec<String> = match eq {
        Some(e) => vec![e],
        None => goals.into_iter().map(String::from).collect(),
    };
    for goal in goals {
        let start = Instant::now();
        let r = prove(&goal).map_err(|e| match e {
            qpi_core::modular::ProofError::UnknownEquation { .. } => Fail::usage(e.to_string()),
            e => Fail::internal(e),
        })?;
        let status = if r.sides_equal {
            Status::Verified
        } else {
            Status::Falsified
        };
        let failure = quad_failure(&r);
        let mut text = format!("{} sides_equal={}", r.equation, r.sides_equal);
        if let Some(m) = r.paper_form_match {
            text.push_str(&format!(" paper_form_match={m}"));
        }
        if let Some(f) = &failure {
            text.push_str(&format!(" first_failure={} lhs={} rhs={}", f.component.unwrap_or("?"), f.lhs, f.rhs));
        }
        if !out.quiet {
            text.push_str(&format!("\n  common value: {}", r.lhs_canonical));
            for n in &r.notes {
                text.push_str(&format!("\n  note: {n}"));
            }
        }
        let json = JsonReport {
            id: r.equation.clone(),
            status: status.as_str(),
            order: None,
            valid_order: None,
            first_failure: failure,
            paper_form_match: r.paper_form_match,
            elapsed_ms: start.elapsed().as_millis(),
            error: None,
        };
        out.report(status, text, json);
    }
    Ok(())
}

fn emit_param(out: &mut Out, report: &ParamReport, start: Instant) {
    let elapsed_ms = start.elapsed().as_millis();
    for c in &report.checks {
        let status = if c.passed() {
            Status::Verified
        } else {
            Status::Falsified
        };
        let mut text = format!(
            "degree {}: {} {} valid_order={}",
            report.degree,
            c.name,
            status.as_str(),
            c.valid_order
        );
        if let Some((e, l, r)) = &c.first_failure {
            text.push_str(&format!(" first_failure=t^{e} lhs={l} rhs={r}"));
        }
        let json = JsonReport {
            id: format!("degree{}: {}", report.degree, c.name),
            status: status.as_str(),
            order: Some(report.order),
            valid_order: Some(c.valid_order),
            first_failure: c.first_failure.as_ref().map(|(e, l, r)| JsonFailure {
                exponent: Some(*e),
                component: None,
                lhs: coef(l),
                rhs: coef(r),
            }),
            paper_form_match: None,
            elapsed_ms,
            error: None,
        };
        out.report(status, text, json);
    }
}

fn cmd_check_param(
    out: &mut Out,
    order: i64,
    degree: &str,
    branch: Branch,
    atoms: bool,
) -> Result<(), Fail> {
    let degree: u32 = degree.parse().expect("validated by clap");
    let branch = match branch {
        Branch::Positive => RhoBranch::Positive,
        Branch::Negative => RhoBranch::Negative,
    };
    let start = Instant::now();
    let report = check_param_series_with_branch(degree, order, branch).map_err(Fail::internal)?;
    emit_param(out, &report, start);
    if atoms {
        let start = Instant::now();
        let report = check_atom_series(degree, order).map_err(Fail::internal)?;
        emit_param(out, &report, start);
    }
    Ok(())
}

fn cmd_list(out: &mut Out) {
    for r in identities() {
        let form = match r.form {
            Form::Pi => "Pi",
            Form::Psi => "psi",
        };
        if out.json {
            let j = serde_json::json!({
                "id": r.id,
                "label": r.source,
                "form": form,
                "lhs": r.lhs.to_string(),
                "rhs": r.rhs.to_string(),
            });
            out.lines.push(j.to_string());
        } else {
            out.lines.push(format!("{}\t{}\t{} = {}", r.id, form, r.lhs, r.rhs));
        }
    }
}

fn run(cli: Cli) -> Result<Out, Fail> {
    let g = cli.global;
    let mut out = Out {
        json: g.json,
        quiet: g.quiet,
        lines: Vec::new(),
        code: 0,
    };
    match cli.command {
        Command::Verify { id, expr, expr_file } => cmd_verify(&mut out, g.order, id, expr, expr_file)?,
        Command::VerifyAll => {
            let reports = catalog::verify_all(g.order);
            for r in &reports {
                emit_verify(&mut out, r);
            }
            emit_tally(&mut out, &reports);
        }
        Command::Expand { expr, expr_file } => cmd_expand(&mut out, g.order, expr, expr_file)?,
        Command::ProveModular { theorem, eq } => cmd_prove(&mut out, theorem, eq)?,
        Command::CheckParam {
            degree,
            rho_branch,
            atoms,
        } => cmd_check_param(&mut out, g.order, &degree, rho_branch, atoms)?,
        Command::List => cmd_list(&mut out),
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            for l in &out.lines {
                let _ = writeln!(stdout, "{l}");
            }
            ExitCode::from(out.code)
        }
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
