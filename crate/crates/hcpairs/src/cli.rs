//! Command-line front end. `run` returns the exit code and the two output streams so that the
//! binary and the tests share one code path.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::centralizers::{self, CentralizerReport, SuperModel};
use crate::exactla::{FieldCtx, Scalar};
use crate::families::{self, FamilyError, FamilyId};
use crate::hcpair::{unipotent_radical_odd, EvenAlgebra, HCPair};
use crate::homsolve::{self, BracketTensor, EvenTarget, Symmetry};
use crate::isomap::{self, HCMorphism, PmKind};
use crate::rep::{self, GroupKind, WeightModule};
use crate::suite;

#[derive(Debug, Error)]
enum CliError {
    /// Exit 2.
    #[error("{0}")]
    Invalid(String),
    /// Exit 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "hcpairs", version, about = "Exact Harish-Chandra pair computations for SL2 and GL2")]
struct Cli {
    /// Field characteristic, 0 for the rationals.
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also write the output to this file.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family member (or read a pair from JSON) and run the four pair checks.
    VerifyFamily(VerifyArgs),
    /// Dimension and generators of the space of admissible brackets on a module.
    BracketSearch(ModuleArgs),
    /// dim Hom(V(m) x V(n) -> target).
    HomDim(HomArgs),
    /// Socle and radical layers of a module.
    Loewy(ModuleArgs),
    /// Decide an isomorphism between two family members.
    IsoCheck(IsoArgs),
    /// Torus-centralizer table of GL(m|n), SL(m|n) or Q(n).
    Centralizer(CentArgs),
    /// Run the acceptance suite.
    Report,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Family tag: spo21, h02, h3s1, q2, k, s, l, h, pair2prime, pair3prime, z, assembled.
    tag: Option<String>,
    /// Read the pair from an HCPair JSON file instead.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    #[arg(long)]
    r: Option<usize>,
    /// Print the pair JSON as well.
    #[arg(long)]
    emit_pair: bool,
}

#[derive(Debug, Args)]
struct ModuleArgs {
    /// Sum of SL2 terms L(n), V(n) = Sym_n(V)*, S(n) = Sym_n(V), e.g. "L(0)+L(2)".
    #[arg(long)]
    module: Option<String>,
    /// WeightModule JSON file.
    #[arg(long)]
    module_json: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetArg {
    Z,
    Sl2,
    Gl2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SymArg {
    None,
    Sym,
    Alt,
}

#[derive(Debug, Args)]
struct HomArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = TargetArg::Sl2)]
    target: TargetArg,
    /// Restrict to symmetric or alternating maps (needs m = n).
    #[arg(long, value_enum, default_value_t = SymArg::None)]
    symmetry: SymArg,
    /// Use the simple modules L(m), L(n) instead of V(m), V(n).
    #[arg(long)]
    simple: bool,
}

#[derive(Debug, Args)]
struct IsoArgs {
    /// q2, k, s, l or h.
    family: String,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    t2: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
}

#[derive(Debug, Args)]
struct CentArgs {
    /// gl(m|n), sl(m|n) or q(n).
    #[arg(long)]
    model: String,
    /// A root e_i - e_j given as "i,j" (1-based); all roots when omitted.
    #[arg(long)]
    alpha: Option<String>,
}

struct Output {
    text: String,
    code: i32,
}

/// Runs the CLI on argv (argv[0] is the program name). Returns (exit code, stdout, stderr).
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 { (0, msg, String::new()) } else { (2, String::new(), msg) };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &out.text) {
                    return (2, out.text, format!("cannot write {}: {e}\n", path.display()));
                }
            }
            (out.code, out.text, String::new())
        }
        Err(e) => (e.code(), String::new(), format!("error: {e}\n")),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let ctx = FieldCtx::new(cli.characteristic).map_err(|_| invalid(format!("--char must be 0 or an odd prime, got {}", cli.characteristic)))?;
    let f = cli.format;
    match &cli.command {
        Command::VerifyFamily(a) => verify_family(a, ctx, f),
        Command::BracketSearch(a) => bracket_search(a, ctx, f),
        Command::HomDim(a) => hom_dim(a, ctx, f),
        Command::Loewy(a) => loewy(a, ctx, f),
        Command::IsoCheck(a) => iso_check(a, ctx, f),
        Command::Centralizer(a) => centralizer(a, f),
        Command::Report => report(f),
    }
}

fn render(f: Format, v: Value, table: String) -> String {
    match f {
        Format::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
        Format::Table => table,
    }
}

fn scalar(ctx: FieldCtx, s: &Option<String>, name: &str, default: Option<&str>) -> Result<Scalar, CliError> {
    let raw = s.as_deref().or(default).ok_or_else(|| invalid(format!("--{name} is required")))?;
    ctx.parse(raw).map_err(|e| invalid(format!("--{name}: {e}")))
}

fn required<T: Copy>(v: Option<T>, name: &str) -> Result<T, CliError> {
    v.ok_or_else(|| invalid(format!("--{name} is required")))
}

fn family_error(e: FamilyError) -> CliError {
    match e {
        FamilyError::Characteristic(_) | FamilyError::Parameter(_) | FamilyError::Clause(_) => invalid(e),
        other => CliError::Failed(other.to_string()),
    }
}

fn build_family(a: &VerifyArgs, tag: &str, ctx: FieldCtx) -> Result<(HCPair, Value), CliError> {
    let id: FamilyId = tag.parse().map_err(invalid)?;
    let one = Some("1");
    let pair = match id {
        FamilyId::SpO21 => families::spo21(ctx),
        FamilyId::H02 => families::h_0_2(ctx, &scalar(ctx, &a.a, "a", one)?),
        FamilyId::H3s1 => families::h3s1(required(a.s, "s")?, ctx, &scalar(ctx, &a.a, "a", one)?),
        FamilyId::Q2ac => families::q2(&scalar(ctx, &a.a, "a", None)?, &scalar(ctx, &a.c, "c", None)?, ctx),
        FamilyId::KT => families::k_family(required(a.t, "t")?, &scalar(ctx, &a.a, "a", one)?, ctx),
        FamilyId::ST => families::s_family(required(a.t, "t")?, ctx),
        FamilyId::LT => families::l_family(required(a.t, "t")?, ctx),
        FamilyId::HT => families::h_family(required(a.t, "t")?, &scalar(ctx, &a.a, "a", one)?, ctx),
        FamilyId::Pair2Prime => families::pair2prime(required(a.t, "t")?, required(a.r, "r")?, ctx),
        FamilyId::Pair3Prime => families::pair3prime(required(a.t, "t")?, required(a.r, "r")?, ctx),
        FamilyId::ZFamily => {
            let t = required(a.t, "t")?;
            families::z_family(&[(2 * t, rep::det_line(t, ctx))], ctx)
        }
        FamilyId::Assembled => {
            let t = required(a.t, "t")?;
            let core = families::q2(&scalar(ctx, &a.a, "a", one)?, &scalar(ctx, &a.c, "c", Some("0"))?, ctx).map_err(family_error)?;
            families::assemble_graded(Some(&core), &[(2 * t, rep::det_line(t, ctx))], ctx)
        }
    }
    .map_err(family_error)?;
    let params = json!({"s": a.s, "a": a.a, "c": a.c, "t": a.t, "r": a.r});
    Ok((pair, params))
}

fn verify_family(a: &VerifyArgs, ctx: FieldCtx, f: Format) -> Result<Output, CliError> {
    let (pair, label, params) = match (&a.tag, &a.input) {
        (Some(tag), None) => {
            let (p, params) = build_family(a, tag, ctx)?;
            (p, tag.clone(), params)
        }
        (None, Some(path)) => {
            let s = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
            (HCPair::from_json(&s).map_err(invalid)?, path.display().to_string(), Value::Null)
        }
        _ => return Err(invalid("give exactly one of a family tag or --input")),
    };
    let v = pair.verify();
    let rad = unipotent_radical_odd(&pair).dim();
    let mut table = format!("{label} over {}: even part {}, odd dim {}\n", field_name(ctx), pair.even().kind(), pair.odd().dim());
    for (name, ok) in v.named() {
        let _ = writeln!(table, "  {name:<12} {}", if ok { "pass" } else { "FAIL" });
    }
    let passed = v.named().iter().filter(|(_, ok)| *ok).count();
    let _ = writeln!(table, "  {passed} of 4 checks passed; unipotent radical odd dim {rad}");
    let mut doc = json!({
        "family": label,
        "characteristic": ctx.characteristic(),
        "params": params,
        "checks": v.named().iter().map(|(n, ok)| (n.to_string(), json!(ok))).collect::<serde_json::Map<_, _>>(),
        "unipotent_radical_odd_dim": rad,
    });
    if a.emit_pair {
        let pj = pair.to_json_value().map_err(|e| CliError::Failed(e.to_string()))?;
        doc["pair"] = serde_json::to_value(pj).expect("serializable");
        let _ = writeln!(table, "{}", pair.to_json().map_err(|e| CliError::Failed(e.to_string()))?);
    }
    let failures = v.failures();
    let mut text = render(f, doc, table);
    let code = if failures.is_empty() {
        0
    } else {
        let _ = writeln!(text, "verification failed: {}", failures.join(", "));
        1
    };
    Ok(Output { text, code })
}

fn field_name(ctx: FieldCtx) -> String {
    match ctx.characteristic() {
        0 => "Q".into(),
        p => format!("F{p}"),
    }
}

fn parse_module(spec: &str, ctx: FieldCtx) -> Result<WeightModule, CliError> {
    let mut parts = Vec::new();
    for term in spec.split('+').map(str::trim) {
        let (head, rest) = term.split_at(term.find('(').ok_or_else(|| invalid(format!("bad module term {term}")))?);
        let n: usize = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| invalid(format!("bad module term {term}")))?;
        parts.push(match head.trim() {
            "L" => rep::simple_sl2(n as u64, ctx),
            "V" => rep::dual(&rep::sym_power(n, GroupKind::SL2, ctx)),
            "S" => rep::sym_power(n, GroupKind::SL2, ctx),
            h => return Err(invalid(format!("unknown module {h}, expected L, V or S"))),
        });
    }
    match parts.len() {
        0 => Err(invalid("empty module")),
        1 => Ok(parts.pop().expect("one part")),
        _ => rep::direct_sum(&parts.iter().collect::<Vec<_>>()).map_err(invalid),
    }
}

fn load_module(a: &ModuleArgs, ctx: FieldCtx) -> Result<WeightModule, CliError> {
    match (&a.module, &a.module_json) {
        (Some(s), None) => parse_module(s, ctx),
        (None, Some(path)) => {
            let s = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
            let m = WeightModule::from_json(&s).map_err(invalid)?;
            m.check_invariants().map_err(invalid)?;
            Ok(m)
        }
        _ => Err(invalid("give exactly one of --module or --module-json")),
    }
}

fn tensor_json(t: &BracketTensor) -> Value {
    Value::Array(t.entries().into_iter().map(|(i, j, x, v)| json!([i, j, x, v.to_string()])).collect())
}

fn bracket_search(a: &ModuleArgs, ctx: FieldCtx, f: Format) -> Result<Output, CliError> {
    let m = load_module(a, ctx)?;
    let even = match m.kind() {
        GroupKind::SL2 => EvenAlgebra::sl2(m.ctx()),
        GroupKind::GL2 => EvenAlgebra::gl2(m.ctx()),
    };
    let space = homsolve::bracket_search(&even, &m, &[]).map_err(|e| CliError::Failed(e.to_string()))?;
    let dim = space.dim();
    let gens = space.generators();
    let mut table = format!("bracket space on a module of dim {}: ", m.dim());
    match dim {
        Some(d) => {
            let _ = writeln!(table, "dimension {d}");
        }
        None => table.push_str("empty\n"),
    }
    for (k, g) in space.directions.iter().enumerate() {
        let entries: Vec<String> =
            g.entries().into_iter().map(|(i, j, x, v)| format!("[{i},{j}]_{x}={v}")).collect();
        let _ = writeln!(table, "  generator {}: {}", k + 1, entries.join(" "));
    }
    let doc = json!({
        "dimension": dim,
        "particular": space.particular.as_ref().map(tensor_json),
        "directions": space.directions.iter().map(tensor_json).collect::<Vec<_>>(),
        "generator_count": gens.len(),
    });
    Ok(Output { text: render(f, doc, table), code: 0 })
}

fn hom_dim(a: &HomArgs, ctx: FieldCtx, f: Format) -> Result<Output, CliError> {
    let make = |n: usize| {
        if a.simple {
            rep::simple_sl2(n as u64, ctx)
        } else {
            rep::dual(&rep::sym_power(n, GroupKind::SL2, ctx))
        }
    };
    let target = match a.target {
        TargetArg::Z => EvenTarget::Z,
        TargetArg::Sl2 => EvenTarget::Sl2,
        TargetArg::Gl2 => EvenTarget::Gl2,
    };
    let dim = match a.symmetry {
        SymArg::None => homsolve::hom_pair_to_even(&make(a.m), &make(a.n), target),
        sym => {
            if a.m != a.n {
                return Err(invalid(format!("--symmetry requires m = n, got m = {} and n = {}", a.m, a.n)));
            }
            let s = if matches!(sym, SymArg::Sym) { Symmetry::Symmetric } else { Symmetry::Alternating };
            homsolve::hom_square_to_even(&make(a.m), target, s)
        }
    }
    .map_err(|e| CliError::Failed(e.to_string()))?
    .len();
    let doc = json!({"m": a.m, "n": a.n, "characteristic": ctx.characteristic(), "dimension": dim});
    Ok(Output { text: render(f, doc, format!("{dim}\n")), code: 0 })
}

fn layers_json(layers: &[Vec<rep::Weight>]) -> Value {
    json!(layers.iter().map(|l| l.iter().map(|w| w.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn layers_text(layers: &[Vec<rep::Weight>]) -> String {
    layers.iter().map(|l| l.iter().map(|w| format!("L({w})")).collect::<Vec<_>>().join("+")).collect::<Vec<_>>().join(" | ")
}

fn loewy(a: &ModuleArgs, ctx: FieldCtx, f: Format) -> Result<Output, CliError> {
    let m = load_module(a, ctx)?;
    let fail = |e: rep::RepError| CliError::Failed(e.to_string());
    let socle = rep::layer_factors(&m).map_err(fail)?;
    let radical = rep::radical_layer_factors(&m).map_err(fail)?;
    let len = rep::loewy_length(&m).map_err(fail)?;
    let simple = rep::is_simple(&m).map_err(fail)?;
    let table = format!(
        "dim {}, Loewy length {len}, simple {simple}\n  socle layers (bottom first):   {}\n  radical layers (bottom first): {}\n",
        m.dim(),
        layers_text(&socle),
        layers_text(&radical)
    );
    let doc = json!({
        "dim": m.dim(),
        "loewy_length": len,
        "simple": simple,
        "socle_layers": layers_json(&socle),
        "radical_layers": layers_json(&radical),
    });
    Ok(Output { text: render(f, doc, table), code: 0 })
}

fn iso_check(a: &IsoArgs, ctx: FieldCtx, f: Format) -> Result<Output, CliError> {
    let iso_err = |e: isomap::IsoError| match e {
        isomap::IsoError::Family(inner) => family_error(inner),
        other => CliError::Failed(other.to_string()),
    };
    let (label, decision, extra): (String, Option<HCMorphism>, Value) = match a.family.to_ascii_lowercase().as_str() {
        "q2" => {
            let (x, y) = (scalar(ctx, &a.a, "a", None)?, scalar(ctx, &a.c, "c", None)?);
            let (x2, y2) = (scalar(ctx, &a.a2, "a2", None)?, scalar(ctx, &a.c2, "c2", None)?);
            let d = isomap::q2_iso_decide(&x, &y, &x2, &y2, ctx).map_err(iso_err)?;
            let alpha = d.as_ref().map(|(al, _)| al.to_string());
            (format!("q2({x},{y}) vs q2({x2},{y2})"), d.map(|(_, w)| w), json!({"alpha": alpha}))
        }
        "h" => {
            let (t, t2) = (required(a.t, "t")?, required(a.t2, "t2")?);
            let x = scalar(ctx, &a.a, "a", Some("1"))?;
            (format!("h({t}) vs h({t2})"), isomap::h_iso_decide(t, t2, &x, ctx).map_err(iso_err)?, Value::Null)
        }
        other => {
            let kind: PmKind = other.parse().map_err(invalid)?;
            let (t, t2) = (required(a.t, "t")?, required(a.t2, "t2")?);
            (format!("{other}({t}) vs {other}({t2})"), isomap::pm_iso_decide(kind, t, t2, ctx).map_err(iso_err)?, Value::Null)
        }
    };
    let witness = match &decision {
        Some(w) => Some(serde_json::to_value(w.to_json_value().map_err(|e| CliError::Failed(e.to_string()))?).expect("serializable")),
        None => None,
    };
    let verdict = if decision.is_some() { "isomorphic" } else { "not isomorphic" };
    let mut table = format!("{label} over {}: {verdict}\n", field_name(ctx));
    if let Some(w) = &witness {
        let _ = writeln!(table, "witness: {w}");
    }
    let doc = json!({"pairs": label, "isomorphic": decision.is_some(), "witness": witness, "extra": extra});
    Ok(Output { text: render(f, doc, table), code: 0 })
}

fn centralizer(a: &CentArgs, f: Format) -> Result<Output, CliError> {
    let model: SuperModel = a.model.parse().map_err(invalid)?;
    let reports: Vec<CentralizerReport> = match &a.alpha {
        None => centralizers::centralizer_table(model).map_err(invalid)?,
        Some(s) => {
            let idx: Vec<usize> =
                s.split(',').map(|x| x.trim().parse::<usize>()).collect::<Result<_, _>>().map_err(|_| invalid("--alpha expects i,j"))?;
            let amb = model.ambient();
            match idx.as_slice() {
                [i, j] if (1..=amb).contains(i) && (1..=amb).contains(j) && i != j => {
                    vec![centralizers::centralizer_shape(model, &centralizers::epsilon_diff(amb, i - 1, j - 1)).map_err(invalid)?]
                }
                _ => return Err(invalid(format!("--alpha needs distinct indices in 1..={amb}"))),
            }
        }
    };
    let mut table = format!("{model}\n{:<14} {:<10} {:<8} {:<6} {:<10} {}\n", "alpha", "parity", "G", "rank", "odd dims", "centralizer");
    for r in &reports {
        let dims: Vec<String> = r.odd_roots.iter().map(|b| b.dim.to_string()).collect();
        let _ = writeln!(
            table,
            "{:<14} {:<10} {:<8} {:<6} {:<10} {}",
            centralizers::format_weight(&r.alpha),
            format!("{:?}", r.parity),
            r.shape.to_string(),
            r.semisimple_rank,
            if dims.is_empty() { "-".into() } else { dims.join("+") },
            r.kind
        );
    }
    let doc = serde_json::to_value(&reports).expect("serializable");
    Ok(Output { text: render(f, doc, table), code: 0 })
}

fn report(f: Format) -> Result<Output, CliError> {
    let outcomes = suite::run_all();
    let all = outcomes.iter().all(|o| o.pass);
    let mut md = String::from("# Acceptance report\n\n| criterion | check | result | checks | ms |\n|---|---|---|---|---|\n");
    for o in &outcomes {
        let _ = writeln!(md, "| {} | {} | {} | {} | {} |", o.id, o.title, if o.pass { "pass" } else { "fail" }, o.checked, o.elapsed_ms);
    }
    for o in outcomes.iter().filter(|o| !o.pass || !o.note.is_empty()) {
        let _ = writeln!(md, "\n## Criterion {}\n", o.id);
        if !o.note.is_empty() {
            let _ = writeln!(md, "{}\n", o.note);
        }
        for fl in &o.failures {
            let _ = writeln!(md, "- {fl}");
        }
    }
    let doc = json!({"all_passed": all, "criteria": outcomes});
    Ok(Output { text: render(f, doc, md), code: if all { 0 } else { 1 } })
}
