//! `wreath-chars`: command line access to characters of `Z_k ≀ S_n`, color
//! rule decompositions, the involution audit and the Ehrhart computations.
//!
//! Exit codes: 0 success, 1 failed verification, 2 bad input, 3 budget
//! exceeded.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use wreath_core::characters::CharacterTable;
use wreath_core::color_rules::*;
use wreath_core::ehrhart::*;
use wreath_core::involution::{audit, enumerate_objects, psi};
use wreath_core::selftest;
use wreath_core::shapes::{enumerate_tuples, Partition, PartitionTuple, Tableau};
use wreath_core::wreath::ColoredPermutation;
use wreath_core::{Budget, Error};

const SCHEMA: &str = "wreath-chars/1";
const THREADS_VAR: &str = "WREATH_CHARS_THREADS";

#[derive(Parser)]
#[command(name = "wreath-chars", version, about = "Exact character computations for wreath products Z_k ≀ S_n")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Limits {
    /// Largest n!·kⁿ enumerated element by element.
    #[arg(long, global = true, default_value_t = Budget::default().max_group_order)]
    max_group_order: u128,
    /// Largest cyclotomic order k.
    #[arg(long, global = true, default_value_t = Budget::default().max_order)]
    max_order: u32,
    /// Largest t-degree of a truncated series.
    #[arg(long, global = true, default_value_t = Budget::default().max_degree)]
    max_degree: u32,
    /// Largest number of decorated tableaux built by involution-verify.
    #[arg(long, global = true, default_value_t = Budget::default().max_objects)]
    max_objects: u128,
}

impl Limits {
    fn budget(&self) -> Budget {
        Budget {
            max_group_order: self.max_group_order,
            max_order: self.max_order,
            max_degree: self.max_degree,
            max_objects: self.max_objects,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Character table of Z_k ≀ S_n.
    Chartable {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Multiplicities of the irreducibles in a color rule character.
    Decompose {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        rule: RuleArgs,
        /// Report only this shape, e.g. `3,2` or `3,1|-|2,2`.
        #[arg(long)]
        shape: Option<String>,
        /// Also decompose by brute force over the group and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Decomposition of a power of the defining character against the
    /// predicted support.
    Defining {
        #[command(flatten)]
        group: Group,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Refined Ehrhart polynomials L_d(q) of a lattice polytope.
    Ehrhart {
        #[command(flatten)]
        polytope: PolytopeArgs,
        #[arg(long, default_value_t = 5)]
        dmax: u32,
    },
    /// Bigraded multiplicities of the irreducibles in K[P^{×n}].
    Frobenius {
        #[command(flatten)]
        polytope: PolytopeArgs,
        #[command(flatten)]
        group: Group,
        #[arg(long, default_value_t = 4)]
        tmax: u32,
    },
    /// Euler–Mahonian numerators Σ t^wdes q^wcomaj and the series check.
    EulerMahonian {
        #[command(flatten)]
        group: Group,
        #[arg(long, default_value_t = 8)]
        tmax: u32,
        #[arg(long)]
        shape: Option<String>,
    },
    /// Wreath descents and comajor index of a colored permutation or a
    /// standard tableau.
    Stats {
        #[command(flatten)]
        group: Group,
        /// Cycle notation such as `u0 1 u1 3 | u2 2`, or permutation JSON.
        #[arg(long, conflicts_with = "tableau")]
        perm: Option<String>,
        /// Tableau rows as JSON, e.g. `[[[1,2,6],[5]],[],[[3,7],[4,8]]]`.
        #[arg(long)]
        tableau: Option<String>,
    },
    /// Colored RSK insertion and recording tableaux.
    Rsk {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        perm: String,
    },
    /// Audits the sign-reversing involution for every shape.
    InvolutionVerify {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long)]
        shape: Option<String>,
    },
    /// Runs the acceptance criteria.
    Selftest {
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Args)]
struct Group {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    k: u32,
}

#[derive(Args)]
struct RuleArgs {
    /// fxd, defining, trivial, natural, tabloid, monomial, basis or random.
    #[arg(long, required_unless_present = "rule_file")]
    rule: Option<String>,
    /// Color rule JSON.
    #[arg(long, conflicts_with = "rule")]
    rule_file: Option<PathBuf>,
    /// Tensor power of the rule.
    #[arg(long)]
    m: Option<u32>,
    /// Degree for `natural`, degree list for `monomial`.
    #[arg(long)]
    d: Option<String>,
    /// Partition for `tabloid`, shape for `basis`.
    #[arg(long)]
    mu: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct PolytopeArgs {
    /// simplex:m, cross:m, cube:m or segment.
    #[arg(long, required_unless_present = "polytope_file")]
    polytope: Option<String>,
    /// JSON `{"dim": m, "rows": [[[a1,…,am], b], …]}` for `A·x ≤ b`.
    #[arg(long, conflicts_with = "polytope")]
    polytope_file: Option<PathBuf>,
    /// The weight vector a′, comma separated; all ones by default.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
}

/// The result of one command.
struct Output {
    json: Value,
    text: String,
    /// False when a verification found a mismatch.
    verified: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, verified: true }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget { .. } => 3,
        Error::NonIntegral(_) | Error::Contract(_) => 1,
        _ => 2,
    }
}

fn parse_list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>, Error>
where
    T::Err: std::fmt::Display,
{
    text.split(',')
        .map(|s| s.trim().parse::<T>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
        .collect()
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))
}

fn parse_shape(text: &str, group: &Group) -> Result<PartitionTuple, Error> {
    let g = PartitionTuple::parse(text)?.padded(group.k as usize)?;
    if g.size() != group.n {
        return Err(Error::SizeMismatch(format!("shape {g} has {} cells, n = {}", g.size(), group.n)));
    }
    Ok(g)
}

fn parse_perm(text: &str, group: &Group) -> Result<ColoredPermutation, Error> {
    let sigma = if text.trim_start().starts_with('{') {
        serde_json::from_str::<ColoredPermutation>(text).map_err(|e| Error::Parse(e.to_string()))?
    } else {
        ColoredPermutation::parse_cycles(group.n as usize, group.k, text)?
    };
    if sigma.n() != group.n as usize || sigma.k() != group.k {
        return Err(Error::SizeMismatch(format!(
            "permutation is in Z_{} ≀ S_{}, expected Z_{} ≀ S_{}",
            sigma.k(),
            sigma.n(),
            group.k,
            group.n
        )));
    }
    Ok(sigma)
}

fn build_rule(args: &RuleArgs, group: &Group, budget: &Budget) -> Result<ColorRule, Error> {
    let (n, k) = (group.n, group.k);
    budget.check_order(k)?;
    if let Some(path) = &args.rule_file {
        let rule = ColorRule::from_json(&read_file(path)?)?;
        if rule.n() != n || rule.k() != k {
            return Err(Error::SizeMismatch(format!(
                "rule file is for n = {}, k = {}",
                rule.n(),
                rule.k()
            )));
        }
        return match args.m {
            Some(m) => rule.power(m),
            None => Ok(rule),
        };
    }
    let name = args.rule.as_deref().unwrap_or_default();
    let need = |what: &str, v: &Option<String>| v.clone().ok_or_else(|| bad(format!("--rule {name} needs --{what}")));
    let rule = match name {
        "fxd" | "defining" => return Ok(defining_power(n, k, args.m.unwrap_or(1))),
        "trivial" => trivial_rule(n, k),
        "natural" => {
            let d = need("d", &args.d)?.trim().parse().map_err(|e| Error::Parse(format!("--d: {e}")))?;
            natural_rule(n, k, d)
        }
        "monomial" => {
            if k != 1 {
                return Err(bad("monomial rules are for k = 1"));
            }
            monomial_rule(n, &parse_list(&need("d", &args.d)?)?)
        }
        "tabloid" => {
            if k != 1 {
                return Err(bad("tabloid rules are for k = 1"));
            }
            let mu = Partition::new(parse_list(&need("mu", &args.mu)?)?)?;
            if mu.size() != n {
                return Err(Error::SizeMismatch(format!("--mu has size {}, n = {n}", mu.size())));
            }
            tabloid_rule(n, &mu)
        }
        "basis" => basis_rule(&parse_shape(&need("mu", &args.mu)?, group)?),
        "random" => random_rule(n, k, args.seed),
        other => return Err(bad(format!("unknown rule {other:?}"))),
    };
    match args.m {
        Some(m) => rule.power(m),
        None => Ok(rule),
    }
}

fn build_polytope(args: &PolytopeArgs) -> Result<(HPolytope, Vec<i64>), Error> {
    let p = match (&args.polytope, &args.polytope_file) {
        (Some(spec), _) => HPolytope::parse(spec)?,
        (None, Some(path)) => HPolytope::from_json(&read_file(path)?)?,
        (None, None) => return Err(bad("give --polytope or --polytope-file")),
    };
    let weight = match &args.weight {
        Some(w) => parse_list(w)?,
        None => vec![1; p.dim()],
    };
    if weight.len() != p.dim() {
        return Err(Error::SizeMismatch(format!(
            "weight has {} entries, polytope has dimension {}",
            weight.len(),
            p.dim()
        )));
    }
    Ok((p, weight))
}

fn chartable(n: u32, k: u32, budget: &Budget) -> Result<Output, Error> {
    let table = CharacterTable::build(n, k, budget)?;
    let classes: Vec<String> = table.classes.iter().map(|c| c.to_string()).collect();
    let mut rows = Vec::new();
    let mut text = String::new();
    let width = classes.iter().map(String::len).max().unwrap_or(0).max(8);
    let label = table.shapes.iter().map(|s| s.to_string().len()).max().unwrap_or(0);
    let _ = write!(text, "{:label$}", "");
    for c in &classes {
        let _ = write!(text, "  {c:>width$}");
    }
    text.push('\n');
    for (shape, values) in table.shapes.iter().zip(&table.values) {
        let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        let _ = write!(text, "{:label$}", shape.to_string());
        for v in &vals {
            let _ = write!(text, "  {v:>width$}");
        }
        text.push('\n');
        rows.push(json!({"shape": shape, "values": vals}));
    }
    let sizes: Vec<String> = table.class_sizes.iter().map(|s| s.to_string()).collect();
    let json = json!({"n": n, "k": k, "classes": table.classes, "class_sizes": sizes, "rows": rows});
    Ok(Output::ok(json, text))
}

fn decomposition_text(d: &Decomposition) -> String {
    let mut text = String::new();
    for (g, m) in &d.mults {
        let _ = writeln!(text, "{g}  {m}");
    }
    text
}

fn decompose_cmd(
    group: &Group,
    rule: &RuleArgs,
    shape: Option<&str>,
    verify: bool,
    budget: &Budget,
) -> Result<Output, Error> {
    let rule = build_rule(rule, group, budget)?;
    let shape = shape.map(|s| parse_shape(s, group)).transpose()?;
    let dec = decompose_with(&rule, budget)?;
    let mut verified = true;
    let mut json = Map::new();
    let mut text = String::new();
    if verify {
        let brute = brute_force_decompose(&rule, budget)?;
        verified = brute == dec;
        json.insert("brute_force_agrees".into(), verified.into());
        if !verified {
            let differing = enumerate_tuples(group.n, group.k as usize)
                .into_iter()
                .find(|g| dec.get(g) != brute.get(g))
                .expect("decompositions differ somewhere");
            json.insert(
                "counterexample".into(),
                json!({
                    "shape": differing,
                    "kostka": dec.get(&differing).to_string(),
                    "brute_force": brute.get(&differing).to_string(),
                }),
            );
            let _ = writeln!(
                text,
                "MISMATCH at {differing}: {} vs brute force {}",
                dec.get(&differing),
                brute.get(&differing)
            );
        }
    }
    match shape {
        Some(g) => {
            let m = dec.get(&g);
            let _ = writeln!(text, "{m}");
            json.insert("shape".into(), json!(g));
            json.insert("multiplicity".into(), m.to_string().into());
        }
        None => {
            text.push_str(&decomposition_text(&dec));
            json.insert("multiplicities".into(), dec.to_json());
        }
    }
    json.insert("rule".into(), rule.to_json());
    Ok(Output { json: Value::Object(json), text, verified })
}

fn defining_cmd(group: &Group, m: u32, budget: &Budget) -> Result<Output, Error> {
    budget.check_order(group.k)?;
    let dec = decompose_with(&defining_power(group.n, group.k, m), budget)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut verified = true;
    for g in enumerate_tuples(group.n, group.k as usize) {
        let mult = dec.get(&g);
        let predicted = tensor_support(&g, m as u64);
        let agrees = predicted == !mult.is_zero();
        verified &= agrees;
        let mark = if agrees { "" } else { "  MISMATCH" };
        let _ = writeln!(text, "{g}  {mult}  support predicted: {predicted}{mark}");
        rows.push(json!({"shape": g, "multiplicity": mult.to_string(), "predicted_support": predicted, "agrees": agrees}));
    }
    Ok(Output { json: json!({"n": group.n, "k": group.k, "m": m, "rows": rows}), text, verified })
}

fn ehrhart_cmd(args: &PolytopeArgs, dmax: u32, budget: &Budget) -> Result<Output, Error> {
    budget.check_degree(dmax)?;
    let (p, w) = build_polytope(args)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for d in 0..=dmax {
        let l = refined_ehrhart(&p, &w, d)?;
        let points = lattice_points(&p, d).len();
        let _ = writeln!(text, "d={d}  points={points}  L={l}");
        rows.push(json!({"d": d, "points": points, "L": l.to_string()}));
    }
    Ok(Output::ok(json!({"dim": p.dim(), "weight": w, "series": rows}), text))
}

fn frobenius_cmd(args: &PolytopeArgs, group: &Group, tmax: u32, budget: &Budget) -> Result<Output, Error> {
    let (p, w) = build_polytope(args)?;
    let dec = frobenius_decompose(&p, group.n, group.k, &w, tmax, budget)?;
    let json = json!({"n": group.n, "k": group.k, "tmax": tmax, "weight": w, "multiplicities": dec.to_json()});
    Ok(Output::ok(json, decomposition_text(&dec)))
}

fn euler_mahonian_cmd(group: &Group, tmax: u32, shape: Option<&str>, budget: &Budget) -> Result<Output, Error> {
    budget.check_order(group.k)?;
    budget.check_degree(tmax)?;
    let shapes = match shape {
        Some(s) => vec![parse_shape(s, group)?],
        None => enumerate_tuples(group.n, group.k as usize),
    };
    let mut rows = Map::new();
    let mut text = String::new();
    let mut verified = true;
    for g in shapes {
        let check = verify_euler_mahonian(&g, tmax, budget)?;
        verified &= check.holds();
        let mark = if check.holds() { "ok" } else { "FAILS" };
        let _ = writeln!(text, "{g}  {}  [{mark}]", check.numerator);
        rows.insert(g.to_string(), check.to_json());
    }
    let json = json!({"n": group.n, "k": group.k, "tmax": tmax, "shapes": rows});
    Ok(Output { json, text, verified })
}

fn stats_text(s: &WreathStats) -> String {
    format!("wdes={} wcomaj={} W={:?}\n", s.wdes, s.wcomaj, s.labels)
}

fn stats_cmd(group: &Group, perm: Option<&str>, tableau: Option<&str>) -> Result<Output, Error> {
    match (perm, tableau) {
        (Some(p), _) => {
            let sigma = parse_perm(p, group)?;
            let s = wreath_stats_perm(&sigma);
            Ok(Output::ok(json!({"perm": sigma, "stats": s}), stats_text(&s)))
        }
        (None, Some(t)) => {
            let t: Tableau<u32> = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
            let s = wreath_stats_tableau(&t)?;
            Ok(Output::ok(json!({"tableau": t, "stats": s}), stats_text(&s)))
        }
        (None, None) => Err(bad("give --perm or --tableau")),
    }
}

fn rsk_cmd(group: &Group, perm: &str) -> Result<Output, Error> {
    let sigma = parse_perm(perm, group)?;
    let (p, q) = colored_rsk(&sigma);
    let s = wreath_stats_perm(&sigma);
    let r = wreath_stats_tableau(&q)?;
    let preserved = (s.wdes, s.wcomaj) == (r.wdes, r.wcomaj);
    let rows = |t: &Tableau<u32>| serde_json::to_string(t).expect("serializable");
    let text = format!(
        "shape {}\nP = {}\nQ = {}\nperm: {}Q:    {}",
        p.shape(),
        rows(&p),
        rows(&q),
        stats_text(&s),
        stats_text(&r)
    );
    let json = json!({"perm": sigma, "shape": p.shape(), "P": p, "Q": q, "perm_stats": s, "Q_stats": r, "preserved": preserved});
    Ok(Output { json, text, verified: preserved })
}

fn involution_cmd(group: &Group, rule: &RuleArgs, shape: Option<&str>, budget: &Budget) -> Result<Output, Error> {
    let rule = build_rule(rule, group, budget)?;
    let shapes = match shape {
        Some(s) => vec![parse_shape(s, group)?],
        None => enumerate_tuples(group.n, group.k as usize),
    };
    let mut reports = Vec::new();
    let mut text = String::new();
    let mut failure = None;
    for g in shapes {
        let r = audit(&g, &rule, budget)?;
        let mark = if r.holds() { "ok" } else { "FAILS" };
        let _ = writeln!(
            text,
            "{g}  objects={} psi-fixed={} final={} [{mark}]",
            r.objects, r.psi_fixed, r.final_fixed
        );
        if !r.holds() && failure.is_none() {
            failure = Some((g.clone(), r.to_json()));
        }
        reports.push(r.to_json());
    }
    let mut json = json!({"n": group.n, "k": group.k, "rule": rule.to_json(), "reports": reports});
    let verified = failure.is_none();
    if let Some((g, report)) = failure {
        // the first object on which psi misbehaves, if any
        let object = enumerate_objects(&g, &rule, budget)?.into_iter().find(|p| {
            let q = psi(p);
            psi(&q) != *p || (q != *p && q.weight(&rule).ok() != p.weight(&rule).ok().map(|w| -&w))
        });
        let _ = writeln!(text, "counterexample in {g}:");
        if let Some(p) = &object {
            text.push_str(&p.render(&rule));
        }
        json["counterexample"] = json!({
            "shape": g,
            "report": report,
            "object": object.map(|p| p.to_json(&rule)),
        });
    }
    Ok(Output { json, text, verified })
}

fn selftest_cmd(criterion: Option<u32>, budget: &Budget) -> Result<Output, Error> {
    let reports = match criterion {
        Some(id) => vec![selftest::run_criterion(id, budget).ok_or_else(|| bad(format!("no criterion {id}")))?],
        None => selftest::run_all(budget),
    };
    let verified = reports.iter().all(|r| r.pass);
    let text: String = reports.iter().map(|r| r.line() + "\n").collect();
    // timings vary between runs, so they stay out of the JSON
    let json: Vec<Value> = reports
        .iter()
        .map(|r| json!({"id": r.id, "name": r.name, "pass": r.pass, "checks": r.checks, "failures": r.failures}))
        .collect();
    Ok(Output { json: json!({"criteria": json}), text, verified })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Chartable { .. } => "chartable",
        Command::Decompose { .. } => "decompose",
        Command::Defining { .. } => "defining",
        Command::Ehrhart { .. } => "ehrhart",
        Command::Frobenius { .. } => "frobenius",
        Command::EulerMahonian { .. } => "euler-mahonian",
        Command::Stats { .. } => "stats",
        Command::Rsk { .. } => "rsk",
        Command::InvolutionVerify { .. } => "involution-verify",
        Command::Selftest { .. } => "selftest",
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let budget = cli.limits.budget();
    match &cli.command {
        Command::Chartable { n, k } => chartable(*n, *k, &budget),
        Command::Decompose { group, rule, shape, verify } => {
            decompose_cmd(group, rule, shape.as_deref(), *verify, &budget)
        }
        Command::Defining { group, m } => defining_cmd(group, *m, &budget),
        Command::Ehrhart { polytope, dmax } => ehrhart_cmd(polytope, *dmax, &budget),
        Command::Frobenius { polytope, group, tmax } => frobenius_cmd(polytope, group, *tmax, &budget),
        Command::EulerMahonian { group, tmax, shape } => euler_mahonian_cmd(group, *tmax, shape.as_deref(), &budget),
        Command::Stats { group, perm, tableau } => stats_cmd(group, perm.as_deref(), tableau.as_deref()),
        Command::Rsk { group, perm } => rsk_cmd(group, perm),
        Command::InvolutionVerify { group, rule, shape } => involution_cmd(group, rule, shape.as_deref(), &budget),
        Command::Selftest { criterion } => selftest_cmd(*criterion, &budget),
    }
}

fn configure_threads() -> Result<(), Error> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|e| bad(format!("{THREADS_VAR}={value:?}: {e}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| bad(e.to_string()))
}

/// Writes to stdout; a closed pipe is not an error worth reporting.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let result = configure_threads().and_then(|()| run(&cli));
    match (result, cli.format) {
        (Ok(out), Format::Text) => {
            emit(&out.text);
            ExitCode::from(if out.verified { 0 } else { 1 })
        }
        (Ok(out), Format::Json) => {
            let mut doc = json!({"schema": SCHEMA, "command": name, "verified": out.verified});
            if let (Value::Object(d), Value::Object(body)) = (&mut doc, out.json) {
                d.extend(body);
            }
            emit(&(serde_json::to_string_pretty(&doc).expect("serializable") + "\n"));
            ExitCode::from(if out.verified { 0 } else { 1 })
        }
        (Err(e), format) => {
            let code = exit_code(&e);
            if format == Format::Json {
                let doc = json!({"schema": SCHEMA, "command": name, "error": e.to_string(), "exit_code": code});
                emit(&(serde_json::to_string_pretty(&doc).expect("serializable") + "\n"));
            }
            eprintln!("wreath-chars: {e}");
            ExitCode::from(code)
        }
    }
}
