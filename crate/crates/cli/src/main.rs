use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, Parser, Subcommand, ValueEnum};
use llt_core::algebra::lam::DEFAULT_CLASS_CAP;
use llt_core::algebra::relations::{equal_in_quotient_capped, DEFAULT_SPAN_CAP};
use llt_core::llt::{llt_polynomial, qlr_coefficients, spin_llt, DEFAULT_WORD_CAP};
use llt_core::ncsf::{
    check_augmented_commutation, flagged_schur, flagged_schur_lam, technical_instances, verify_main,
    CommutationConjecture, Comparison, FlagSpec,
};
use llt_core::rsst::{enumerate, EnumerationSpec, DEFAULT_READING_CAP};
use llt_core::shapes::partitions_of;
use llt_core::words::{digits, parse_word, Letter, Word};
use llt_core::{
    act_on_partition_spin, act_on_tuple, canonical_form, equivalence_class, CanonicalForm, Error, LamElement,
    LaurentPoly, Partition, RelationSystem, RestrictedShape, Rsst, SkewTuple, SymFunc,
};
use rayon::prelude::*;
use serde_json::{json, Value};

const GUARD_ENV: &str = "LLT_SCHUR_GUARD_CLASS";

#[derive(Parser)]
#[command(name = "llt-schur", version, about = "Ribbon Schur operators, RSST reading words and LLT q-LR coefficients")]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Relation system: lam, lam-le, rot-le or bij.
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// Bijectivization choices as a JSON file mapping "a,b,c" to "knuth" or "rotation".
    #[arg(long, global = true)]
    choices: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 3)]
    k: i32,
    /// Largest equivalence class to enumerate (also set by LLT_SCHUR_GUARD_CLASS).
    #[arg(long, global = true)]
    class_cap: Option<usize>,
    /// Largest number of letters for span-membership checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SPAN_CAP)]
    span_cap: usize,
    /// Largest number of words or readings to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_CAP)]
    word_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// k-core, k-quotient and runner charges of a partition.
    CoreQuot {
        #[arg(long)]
        lambda: String,
    },
    /// Normal form of a word in Lam's quotient.
    Nf {
        #[arg(long)]
        word: String,
    },
    /// The q = 1 equivalence class of a word.
    Class {
        #[arg(long)]
        word: String,
    },
    /// Act by a word on a partition (adding ribbons) or on a k-tuple of partitions.
    Act {
        #[arg(long)]
        word: String,
        /// Starting partition for the ribbon action.
        #[arg(long, default_value = "")]
        nu: String,
        /// Starting k-tuple, components separated by ';' (e.g. "1;1,1;2,1").
        #[arg(long)]
        delta: Option<String>,
        /// Offsets d for the tuple action (default all zero).
        #[arg(long)]
        offsets: Option<String>,
    },
    #[command(subcommand)]
    Rsst(RsstCommand),
    #[command(subcommand)]
    Ncsf(NcsfCommand),
    #[command(subcommand)]
    Llt(LltCommand),
    /// The conjectured commutation identity in the rotation quotient.
    Conjecture {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        x: Letter,
        #[arg(long, default_value = "")]
        ys: String,
        #[arg(long, default_value = "")]
        ns: String,
    },
    /// Recompute every worked example and compare with the recorded values.
    Golden,
}

#[derive(Args)]
struct ShapeArgs {
    /// Row lengths of the outer shape.
    #[arg(long)]
    rows: String,
    /// Cells carved from the top of each column.
    #[arg(long, default_value = "")]
    carved: String,
}

#[derive(Subcommand)]
enum RsstCommand {
    /// All RSST of a shape with column flags or a fixed content.
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, conflicts_with = "content")]
        flags: Option<String>,
        #[arg(long)]
        content: Option<String>,
    },
    /// The square reading word of a tableau given as JSON.
    Sqread {
        #[arg(long)]
        tableau: PathBuf,
        /// Also list every square-respecting reading word.
        #[arg(long)]
        all: bool,
    },
    /// The arrows of a tableau given as JSON.
    Arrows {
        #[arg(long)]
        tableau: PathBuf,
    },
}

#[derive(Subcommand)]
enum NcsfCommand {
    /// Expand a noncommutative flagged Schur function.
    J {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        flags: String,
        /// Reduce in Lam's quotient.
        #[arg(long)]
        reduce: bool,
    },
    /// Compare J with the sum of sqread words, for one shape or a whole sweep.
    VerifyMain {
        #[arg(long, conflicts_with = "max_size")]
        lambda: Option<String>,
        #[arg(long, requires = "lambda")]
        flags: Option<String>,
        #[arg(long, requires = "max_flag")]
        max_size: Option<usize>,
        #[arg(long)]
        max_flag: Option<i64>,
    },
    /// Check the augmented commutation identity, or the column-peeling identity over a shape.
    VerifyLemma {
        #[arg(long, requires_all = ["flags", "j", "x"])]
        alpha: Option<String>,
        #[arg(long)]
        flags: Option<String>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        x: Option<Letter>,
        /// Row lengths for the column-peeling sweep.
        #[arg(long, conflicts_with = "alpha", requires_all = ["max_entry", "max_flag"])]
        lambda: Option<String>,
        #[arg(long)]
        max_entry: Option<i64>,
        #[arg(long)]
        max_flag: Option<i64>,
    },
}

#[derive(Subcommand)]
enum LltCommand {
    /// The LLT polynomial of a tuple of skew shapes.
    Poly {
        #[arg(long)]
        tuple: PathBuf,
        /// Specialise q = 1.
        #[arg(long)]
        q1: bool,
        /// Show the monomial expansion in this many variables.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// The spin LLT polynomial of a ribbon-tileable μ/ν.
    Spin {
        #[arg(long)]
        mu: String,
        #[arg(long, default_value = "")]
        nu: String,
    },
    /// q-LR coefficients of a 3-tuple by counting RSST.
    Qlr {
        #[arg(long)]
        tuple: PathBuf,
        #[arg(long)]
        lambda: Option<String>,
        /// Cross-check against the Schur expansion of the LLT polynomial.
        #[arg(long)]
        oracle: bool,
    },
}

enum Failure {
    Usage(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome<T> = Result<T, Failure>;

struct Report {
    json: Value,
    text: String,
    verified: bool,
}

impl Report {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Report { json, text: text.into(), verified: true }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_ints<T: std::str::FromStr>(s: &str, what: &str) -> Outcome<Vec<T>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(format!("{what}: cannot parse {t:?}"))))
        .collect()
}

fn parse_partition(s: &str) -> Outcome<Partition> {
    Ok(Partition::new(parse_ints(s, "partition")?)?)
}

/// `"2,1,-3"` or the compact form `"8341275"` (one base-36 digit per letter).
fn parse_letters(s: &str) -> Outcome<Word> {
    let s = s.trim();
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric()) {
        Ok(digits(s))
    } else {
        Ok(parse_word(s)?)
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Outcome<T> {
    let raw = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn word_key(w: &[Letter]) -> String {
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn poly_json(c: &LaurentPoly) -> Value {
    serde_json::to_value(c).expect("polynomials serialize")
}

fn expansion_json(m: &BTreeMap<Partition, LaurentPoly>) -> Value {
    Value::Object(m.iter().map(|(l, c)| (word_key_usize(l.parts()), poly_json(c))).collect())
}

fn expansion_text(m: &BTreeMap<Partition, LaurentPoly>) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter().map(|(l, c)| format!("s{l}: {c}")).collect::<Vec<_>>().join("\n")
}

fn word_key_usize(w: &[usize]) -> String {
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn lam_json(e: &LamElement) -> Value {
    Value::Object(e.sorted_terms().iter().map(|(w, c)| (word_key(w), poly_json(c))).collect())
}

fn lam_text(e: &LamElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.sorted_terms().iter().map(|(w, c)| format!("({c}) {}", word_key(w))).collect::<Vec<_>>().join("\n")
}

fn comparison_json(c: &Comparison) -> Value {
    json!({
        "status": if c.equal { "verified" } else { "mismatch" },
        "tableaux": c.tableaux,
        "lhs_terms": c.lhs,
        "rhs_terms": c.rhs,
        "diff": c.diff,
    })
}

struct Context {
    k: i32,
    algebra: Option<String>,
    choices: Option<PathBuf>,
    class_cap: usize,
    span_cap: usize,
    word_cap: usize,
}

impl Context {
    fn system(&self, default: &str) -> Outcome<RelationSystem> {
        let name = self.algebra.as_deref().unwrap_or(default);
        if let Some(path) = &self.choices {
            if name != "bij" {
                return Err(usage("--choices only applies to --algebra bij"));
            }
            let raw = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            return Ok(RelationSystem::bijectivization_from_json(self.k, &raw)?);
        }
        Ok(RelationSystem::from_name(name, self.k)?)
    }

    fn require_lam(&self) -> Outcome<()> {
        match self.algebra.as_deref() {
            None | Some("lam") => Ok(()),
            Some(other) => Err(usage(format!("this command works in Lam's quotient only, not {other:?}"))),
        }
    }

    fn k_usize(&self) -> usize {
        self.k as usize
    }
}

fn core_quot(ctx: &Context, lambda: &str) -> Outcome<Report> {
    let lambda = parse_partition(lambda)?;
    let k = ctx.k_usize();
    let (core, quotient) = lambda.core_and_quotient(k);
    let charges = lambda.runner_charges(k);
    let text = format!(
        "core {core}\nquotient {}\ncharges {charges:?}",
        quotient.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    );
    Ok(Report::ok(json!({"core": core, "quotient": quotient, "charges": charges}), text))
}

fn normal_form(ctx: &Context, word: &str) -> Outcome<Report> {
    ctx.require_lam()?;
    let v = parse_letters(word)?;
    Ok(match canonical_form(&v, ctx.k) {
        CanonicalForm::Zero => Report::ok(json!({"zero": true}), "0"),
        CanonicalForm::Term { rep, power } => Report::ok(
            json!({"zero": false, "rep": rep, "power": power}),
            format!("rep=[{}] power={power}", word_key(&rep)),
        ),
    })
}

fn class(ctx: &Context, word: &str) -> Outcome<Report> {
    ctx.require_lam()?;
    let v = parse_letters(word)?;
    let words = equivalence_class(&v, ctx.k, ctx.class_cap)?;
    let text = words.iter().map(|w| word_key(w)).collect::<Vec<_>>().join("\n");
    Ok(Report::ok(json!({"size": words.len(), "words": words}), text))
}

fn act(ctx: &Context, word: &str, nu: &str, delta: Option<&str>, offsets: Option<&str>) -> Outcome<Report> {
    let v = parse_letters(word)?;
    let k = ctx.k_usize();
    match delta {
        Some(delta) => {
            let comps = delta.split(';').map(parse_partition).collect::<Outcome<Vec<_>>>()?;
            if comps.len() != k {
                return Err(usage(format!("--delta needs {k} components")));
            }
            let d: Vec<i64> = match offsets {
                Some(s) => parse_ints(s, "offsets")?,
                None => vec![0; k],
            };
            if d.len() != k {
                return Err(usage(format!("--offsets needs {k} entries")));
            }
            Ok(match act_on_tuple(&comps, &v, k, &d) {
                None => Report::ok(Value::Null, "0"),
                Some(gamma) => {
                    let text = gamma.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                    Report::ok(json!({"tuple": gamma}), text)
                }
            })
        }
        None => {
            let nu = parse_partition(nu)?;
            Ok(match act_on_partition_spin(&nu, &v, k) {
                None => Report::ok(Value::Null, "0"),
                Some((mu, spin)) => Report::ok(json!({"mu": mu, "spin": spin}), format!("{mu} spin {spin}")),
            })
        }
    }
}

fn restricted_shape(args: &ShapeArgs) -> Outcome<RestrictedShape> {
    let rows = parse_partition(&args.rows)?;
    Ok(RestrictedShape::new(rows.conjugate(), parse_ints(&args.carved, "carved")?)?)
}

fn rsst(ctx: &Context, cmd: &RsstCommand) -> Outcome<Report> {
    match cmd {
        RsstCommand::Enumerate { shape, flags, content } => {
            let spec = EnumerationSpec {
                shape: restricted_shape(shape)?,
                fixed: BTreeMap::new(),
                column_bounds: flags.as_deref().map(|f| parse_ints(f, "flags")).transpose()?,
                content: content.as_deref().map(parse_letters).transpose()?.map(|mut c| {
                    c.sort_unstable();
                    c
                }),
            };
            if spec.column_bounds.is_none() && spec.content.is_none() {
                return Err(usage("give --flags or --content"));
            }
            let tableaux = enumerate(&spec)?;
            let text = tableaux.iter().map(|t| format!("{t}")).collect::<Vec<_>>().join("\n");
            Ok(Report::ok(json!({"count": tableaux.len(), "tableaux": tableaux}), text))
        }
        RsstCommand::Sqread { tableau, all } => {
            let t: Rsst = read_json(tableau)?;
            if !t.validate() {
                return Err(usage("not a restricted semistandard tableau"));
            }
            let w = t.sqread();
            let mut json = json!({"sqread": w, "invi": t.invi3(), "nonzero": t.is_nonzero()});
            let mut text = word_key(&w);
            if *all {
                let readings = t.reading_words(true, ctx.word_cap.min(DEFAULT_READING_CAP))?;
                text = readings.iter().map(|r| word_key(r)).collect::<Vec<_>>().join("\n");
                json["readings"] = json!(readings);
            }
            Ok(Report::ok(json, text))
        }
        RsstCommand::Arrows { tableau } => {
            let t: Rsst = read_json(tableau)?;
            let arrows = t.arrows();
            let text = arrows
                .iter()
                .map(|a| format!("{:?} {} -> {}", a.kind, a.tail, a.head))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report::ok(json!({"arrows": arrows}), text))
        }
    }
}

fn ncsf(ctx: &Context, cmd: &NcsfCommand) -> Outcome<Report> {
    match cmd {
        NcsfCommand::J { alpha, flags, reduce } => {
            let spec = FlagSpec::flagged(&parse_ints(alpha, "alpha")?, &parse_ints(flags, "flags")?)?;
            if *reduce {
                ctx.require_lam()?;
                let e = flagged_schur_lam(&spec, ctx.k);
                Ok(Report::ok(json!({"terms": lam_json(&e)}), lam_text(&e)))
            } else {
                let e = flagged_schur(&spec);
                let terms: BTreeMap<String, Value> = e.terms().map(|(w, c)| (word_key(w), poly_json(c))).collect();
                Ok(Report::ok(json!({"terms": terms}), e.to_string()))
            }
        }
        NcsfCommand::VerifyMain { lambda: Some(lambda), flags, .. } => {
            let flags = flags.as_deref().ok_or_else(|| usage("--flags is required with --lambda"))?;
            let cmp = verify_main(&parse_partition(lambda)?, &parse_ints(flags, "flags")?)?;
            let text = format!("{} ({} tableaux)", if cmp.equal { "verified" } else { "mismatch" }, cmp.tableaux);
            Ok(Report { json: comparison_json(&cmp), text, verified: cmp.equal })
        }
        NcsfCommand::VerifyMain { max_size: Some(max_size), max_flag: Some(max_flag), .. } => {
            main_sweep(*max_size, *max_flag)
        }
        NcsfCommand::VerifyMain { .. } => Err(usage("give --lambda and --flags, or --max-size and --max-flag")),
        NcsfCommand::VerifyLemma { alpha: Some(alpha), flags: Some(flags), j: Some(j), x: Some(x), .. } => {
            let ok = check_augmented_commutation(&parse_ints(alpha, "alpha")?, &parse_ints(flags, "flags")?, *j, *x, ctx.k)?;
            Ok(Report { json: json!({"status": status(ok)}), text: status(ok).into(), verified: ok })
        }
        NcsfCommand::VerifyLemma { lambda: Some(lambda), max_entry: Some(e), max_flag: Some(f), .. } => {
            let instances = technical_instances(&parse_partition(lambda)?, *e, *f)?;
            let checked = AtomicUsize::new(0);
            let failures: Vec<String> = instances
                .par_iter()
                .filter_map(|inst| {
                    checked.fetch_add(1, Ordering::Relaxed);
                    match inst.check() {
                        Ok(c) if c.equal => None,
                        Ok(_) => Some(format!("{}", inst.r)),
                        Err(e) => Some(format!("{}: {e}", inst.r)),
                    }
                })
                .collect();
            sweep_report(instances.len(), failures)
        }
        NcsfCommand::VerifyLemma { .. } => {
            Err(usage("give --alpha, --flags, --j and --x, or --lambda, --max-entry and --max-flag"))
        }
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "verified"
    } else {
        "mismatch"
    }
}

fn weakly_increasing(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let lo = v.last().copied().unwrap_or(0);
                (lo..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn main_sweep(max_size: usize, max_flag: i64) -> Outcome<Report> {
    let cases: Vec<(Partition, Vec<i64>)> = (0..=max_size)
        .flat_map(partitions_of)
        .flat_map(|l| weakly_increasing(l.part(1), max_flag).into_iter().map(move |f| (l.clone(), f)))
        .collect();
    let done = AtomicUsize::new(0);
    let results: Vec<Result<Option<String>, Error>> = cases
        .par_iter()
        .map(|(l, f)| {
            let cmp = verify_main(l, f)?;
            done.fetch_add(1, Ordering::Relaxed);
            Ok((!cmp.equal).then(|| format!("{l} {f:?}")))
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(Some(f)) => failures.push(f),
            Ok(None) => {}
            Err(e) if e.is_guard() => {
                return Err(Failure::Guard(format!(
                    "{e}; {} of {} instances finished",
                    done.load(Ordering::Relaxed),
                    cases.len()
                )))
            }
            Err(e) => return Err(e.into()),
        }
    }
    sweep_report(cases.len(), failures)
}

fn sweep_report(checked: usize, failures: Vec<String>) -> Outcome<Report> {
    let ok = failures.is_empty();
    let text = format!("{}: {checked} instances, {} failures", status(ok), failures.len());
    Ok(Report {
        json: json!({"status": status(ok), "checked": checked, "failures": failures}),
        text,
        verified: ok,
    })
}

fn symfunc_report(f: &SymFunc, q1: bool, vars: Option<usize>) -> Outcome<Report> {
    let expansion = f.schur_expand()?;
    let mut json = json!({"degree": f.degree(), "schur": expansion_json(&expansion)});
    let mut text = expansion_text(&expansion);
    if q1 {
        let at_one: BTreeMap<String, String> =
            expansion.iter().map(|(l, c)| (word_key_usize(l.parts()), c.eval_at_one().to_string())).collect();
        text = at_one.iter().map(|(l, c)| format!("s({l}): {c}")).collect::<Vec<_>>().join("\n");
        json = json!({"degree": f.degree(), "schur_at_q1": at_one});
    }
    if let Some(n) = vars {
        let monomials: BTreeMap<String, Value> =
            f.to_monomials(n).iter().map(|(e, c)| (word_key_usize(e), poly_json(c))).collect();
        text = format!("{text}\n{}", monomials.iter().map(|(e, c)| format!("x^({e}): {c}")).collect::<Vec<_>>().join("\n"));
        json["monomials"] = json!(monomials);
    }
    Ok(Report::ok(json, text))
}

fn llt(ctx: &Context, cmd: &LltCommand) -> Outcome<Report> {
    match cmd {
        LltCommand::Poly { tuple, q1, vars } => {
            let beta: SkewTuple = read_json(tuple)?;
            if beta.k() != ctx.k_usize() {
                return Err(usage(format!("tuple has {} components but --k is {}", beta.k(), ctx.k)));
            }
            symfunc_report(&llt_polynomial(&beta, ctx.word_cap)?, *q1, *vars)
        }
        LltCommand::Spin { mu, nu } => {
            let f = spin_llt(&parse_partition(mu)?, &parse_partition(nu)?, ctx.k_usize(), ctx.word_cap)?;
            symfunc_report(&f, false, None)
        }
        LltCommand::Qlr { tuple, lambda, oracle } => {
            let beta: SkewTuple = read_json(tuple)?;
            let mut coeffs = qlr_coefficients(&beta)?;
            let mut verified = true;
            if *oracle {
                verified = llt_polynomial(&beta, ctx.word_cap)?.schur_expand()? == coeffs;
            }
            if let Some(l) = lambda {
                let l = parse_partition(l)?;
                let c = coeffs.remove(&l).unwrap_or_default();
                coeffs = BTreeMap::from([(l, c)]);
            }
            let mut json = expansion_json(&coeffs);
            let text = match (lambda, coeffs.values().next()) {
                (Some(_), Some(c)) => c.to_string(),
                _ => expansion_text(&coeffs),
            };
            if *oracle {
                json = json!({"coefficients": json, "oracle": status(verified)});
            }
            Ok(Report { json, text, verified })
        }
    }
}

fn conjecture(ctx: &Context, a: i64, m: i64, x: Letter, ys: &str, ns: &str) -> Outcome<Report> {
    let inst = CommutationConjecture { a, m, x, ys: parse_letters(ys)?, ns: parse_ints(ns, "ns")? };
    let (lhs, rhs) = inst.sides()?;
    let system = ctx.system("rot-le")?;
    let ok = equal_in_quotient_capped(&lhs, &rhs, &system, ctx.span_cap)?;
    Ok(Report {
        json: json!({"status": status(ok), "algebra": system.to_string()}),
        text: format!("{} in {system}", status(ok)),
        verified: ok,
    })
}

fn golden() -> Outcome<Report> {
    let checks = llt_core::golden::golden_suite();
    let ok = checks.iter().all(|c| c.passed);
    let text = checks
        .iter()
        .map(|c| {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.passed {
                format!("{mark} {}", c.name)
            } else {
                format!("{mark} {}: expected {}, got {}", c.name, c.expected, c.actual)
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report { json: json!({"status": status(ok), "checks": checks}), text, verified: ok })
}

fn run(cli: &Cli) -> Outcome<Report> {
    let class_cap = match (cli.class_cap, std::env::var(GUARD_ENV)) {
        (Some(c), _) => c,
        (None, Ok(v)) => v.parse().map_err(|_| usage(format!("{GUARD_ENV} must be a positive integer")))?,
        (None, Err(_)) => DEFAULT_CLASS_CAP,
    };
    if class_cap == 0 || cli.span_cap == 0 || cli.word_cap == 0 {
        return Err(usage("guards must be positive"));
    }
    if cli.k < 1 {
        return Err(usage("--k must be at least 1"));
    }
    let ctx = Context {
        k: cli.k,
        algebra: cli.algebra.clone(),
        choices: cli.choices.clone(),
        class_cap,
        span_cap: cli.span_cap,
        word_cap: cli.word_cap,
    };
    if let Some(name) = &ctx.algebra {
        RelationSystem::from_name(name, ctx.k)?;
    }
    match &cli.command {
        Command::CoreQuot { lambda } => core_quot(&ctx, lambda),
        Command::Nf { word } => normal_form(&ctx, word),
        Command::Class { word } => class(&ctx, word),
        Command::Act { word, nu, delta, offsets } => act(&ctx, word, nu, delta.as_deref(), offsets.as_deref()),
        Command::Rsst(cmd) => rsst(&ctx, cmd),
        Command::Ncsf(cmd) => ncsf(&ctx, cmd),
        Command::Llt(cmd) => llt(&ctx, cmd),
        Command::Conjecture { a, m, x, ys, ns } => conjecture(&ctx, *a, *m, *x, ys, ns),
        Command::Golden => golden(),
    }
}

/// 0 verified, 1 verification failure, 2 usage error, 3 guard abort.
fn exit_status(outcome: &Outcome<Report>) -> u8 {
    match outcome {
        Ok(r) if r.verified => 0,
        Ok(_) => 1,
        Err(Failure::Usage(_)) => 2,
        Err(Failure::Guard(_)) => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 || rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().is_err() {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
    }
    let outcome = run(&cli);
    let status = exit_status(&outcome);
    match outcome {
        Ok(report) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("reports serialize"),
                Format::Text => report.text,
            };
            // A closed pipe (e.g. `| head`) is not an error worth a panic.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
        }
        Err(Failure::Usage(msg)) => eprintln!("error: {msg}"),
        Err(Failure::Guard(msg)) => eprintln!("guard: {msg}"),
    }
    ExitCode::from(status)
}
