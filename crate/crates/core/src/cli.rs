//! The `taut` command line: one JSON document per invocation.

use std::io::Read;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::arith::{cf_eval, cf_expand, ContinuedFraction, ExpansionPolicy, Rational};
use crate::cable::{self, CableCaseRow};
use crate::error::{Error, Result};
use crate::foliation::{decide_excellence, decide_horizontal, ExcellenceVerdict, FoliationDecision};
use crate::group::GroupPresentation;
use crate::lo::{self, ObstructionReport, Sign, DEFAULT_GENERATOR_CAP, NONTRIVIALITY_HYPOTHESIS};
use crate::seifert::{H1Order, SeifertInvariants};
use crate::slope::{self, FixedSlopes, Slope, SlopeMap};
use crate::surgery::{fill, fill_mirror, TorusLinkExterior};
use crate::torus_covers::{self, BranchedInvariants, CrossCheck, TorusCoverQuery};

pub const SCHEMA: &str = "taut/1";

#[derive(Parser, Debug)]
#[command(name = "taut", version, about = "Seifert invariants, horizontal foliations and ordering obstructions")]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Continued fractions.
    #[command(subcommand)]
    Cf(CfCommand),
    /// Seifert invariants.
    #[command(subcommand)]
    Seifert(SeifertCommand),
    /// Verdict for the n-fold cyclic branched cover of T(p, q).
    Classify { n: u64, p: u64, q: u64 },
    /// Seifert invariants of the n-fold cyclic branched cover of T(p, q).
    Invariants { n: u64, p: u64, q: u64 },
    /// Compare the classifier with the decider on one query or a sweep.
    Crosscheck {
        n: Option<u64>,
        p: Option<u64>,
        q: Option<u64>,
        #[arg(long, num_args = 3, value_names = ["NMAX", "PMAX", "QMAX"])]
        sweep: Option<Vec<u64>>,
    },
    /// Fill the exterior of T(dr, ds) along one slope per component.
    Surgery {
        d: u64,
        r: u64,
        s: u64,
        #[arg(allow_hyphen_values = true, required = true)]
        slopes: Vec<String>,
        /// Fill the mirror link instead.
        #[arg(long)]
        mirror: bool,
    },
    /// Slope maps between boundary tori.
    #[command(subcommand)]
    Slope(SlopeCommand),
    /// Seifert families of the filled cable pieces.
    #[command(subcommand)]
    Cable(CableCommand),
    /// Print a builtin presentation.
    #[command(subcommand)]
    Present(PresentCommand),
    /// Sign obstruction to left orders.
    #[command(subcommand)]
    Lo(LoCommand),
    /// Surgery description of the two-bridge cover family.
    PretzelSurgery { n: u64, k: u64, l: u64, sign: String },
}

#[derive(Subcommand, Debug)]
pub enum CfCommand {
    /// Value of a bracket expansion such as "[2,-2]".
    Eval { terms: String },
    /// Expansion of a rational.
    Expand {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[arg(long, default_value = "canonical")]
        policy: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum SeifertCommand {
    Normalize { invariants: String },
    Reverse { invariants: String },
    Euler { invariants: String },
    H1 { invariants: String },
    Decide { invariants: String },
}

#[derive(Subcommand, Debug)]
pub enum SlopeCommand {
    /// Apply a map to a slope "a/c".
    Apply {
        map: String,
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Compose maps given in application order.
    Compose {
        #[arg(required = true)]
        maps: Vec<String>,
    },
    /// Integers k such that 1/k is sent to a unit fraction.
    Fixed { map: String },
}

#[derive(Subcommand, Debug)]
pub enum CableCommand {
    /// List the manifest rows.
    List,
    /// Seifert invariants of one row at parameter k.
    Family {
        case: String,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// Decide every k of a range inside the row's predicate.
    Check {
        case: String,
        #[arg(allow_hyphen_values = true)]
        kmin: Option<i64>,
        #[arg(allow_hyphen_values = true)]
        kmax: Option<i64>,
    },
    /// Filling of the companion torus link for winding q with offset c.
    OneQ {
        n: u64,
        q: u64,
        #[arg(allow_hyphen_values = true)]
        c: i64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum PresentCommand {
    /// n-fold cover of the two-bridge knot [2l, -2k].
    Twobridge {
        k: i64,
        l: i64,
        #[arg(default_value_t = 4)]
        n: usize,
    },
    /// Three-fold cover of the pretzel knot P(2k+1, 2l+1, 2m+1).
    Pretzel { k: i64, l: i64, m: i64 },
}

#[derive(Subcommand, Debug)]
pub enum LoCommand {
    /// Check a presentation from a file, "-" for standard input, or
    /// builtin:pretzel:k,l,m or builtin:twobridge:k,l,n.
    Check {
        source: String,
        #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub document: Value,
    pub text: Option<String>,
}

struct Reply {
    payload: Value,
    provenance: Value,
}

fn ok(payload: Value) -> Result<Reply> {
    Ok(Reply {
        payload,
        provenance: Value::Null,
    })
}

fn ok_with(payload: Value, provenance: impl Into<String>) -> Result<Reply> {
    Ok(Reply {
        payload,
        provenance: Value::String(provenance.into()),
    })
}

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn seifert_json(si: &SeifertInvariants) -> Value {
    let fibers: Vec<Value> = si
        .fibers()
        .iter()
        .map(|f| json!({"alpha": int(&f.alpha), "beta": int(&f.beta)}))
        .collect();
    json!({"text": si.to_string(), "b": int(si.b()), "fibers": fibers})
}

pub fn h1_json(h: &H1Order) -> Value {
    match h {
        H1Order::Finite(n) => int(n),
        H1Order::Infinite => json!("infinite"),
    }
}

pub fn decision_json(d: &FoliationDecision) -> Value {
    match d {
        FoliationDecision::Horizontal { condition, witness } => {
            let mut v = json!({"horizontal": true, "condition": condition});
            if let Some(w) = witness {
                v["m"] = int(&w.m);
                v["a"] = int(&w.a);
                v["roles"] = json!([w.first, w.second]);
                v["reversed"] = json!(w.reversed);
            }
            v
        }
        FoliationDecision::NoHorizontal => json!({"horizontal": false}),
        FoliationDecision::Inapplicable(r) => json!({"horizontal": Value::Null, "inapplicable": r.as_str()}),
    }
}

pub fn verdict_json(v: &ExcellenceVerdict) -> Value {
    json!({"verdict": v.kind().to_string(), "reason": v.reason().as_str()})
}

fn obstruction_json(p: &GroupPresentation, rep: &ObstructionReport) -> Value {
    let mut v = json!({
        "generators": p.generators(),
        "relators": (0..p.relators().len()).map(|i| p.render_relator(i)).collect::<Vec<_>>(),
        "hypothesis": NONTRIVIALITY_HYPOTHESIS,
    });
    match rep {
        ObstructionReport::Obstructed { assignments_checked } => {
            v["obstructed"] = json!(true);
            v["assignments_checked"] = json!(assignments_checked);
        }
        ObstructionReport::Survivors { assignments } => {
            v["obstructed"] = json!(false);
            let s: Vec<String> = assignments.iter().map(|a| a.iter().map(Sign::symbol).collect()).collect();
            v["survivors"] = json!(s);
        }
    }
    v
}

fn slope_map_json(f: &SlopeMap) -> Value {
    let m = f.in_order(slope::CoordOrder::MeridianFirst);
    let rows: Vec<Vec<Value>> = m.matrix().iter().map(|r| r.iter().map(int).collect()).collect();
    json!({"matrix": rows, "text": f.to_string(), "determinant": int(&f.det())})
}

fn row_json(row: &CableCaseRow) -> Value {
    json!({
        "label": row.label,
        "n": row.n, "p": row.p, "q": row.q,
        "variant": row.variant,
        "boundaries": row.boundaries,
        "base": row.base.to_string(),
        "filled": row.filled.to_string(),
        "reversed": row.reversed,
        "horizontal_for": row.horizontal.to_string(),
        "status": row.status.as_str(),
    })
}

fn parse_seifert(s: &str) -> Result<SeifertInvariants> {
    s.parse()
}

fn query(n: u64, p: u64, q: u64) -> Result<TorusCoverQuery> {
    TorusCoverQuery::new(n, p, q)
}

// `whitehead`, `cable:p`, `cable-steps:r`, `whitehead-steps` or a literal
// "[[a,b],[c,d]]" in meridian-first order.
fn parse_maps(s: &str) -> Result<Vec<SlopeMap>> {
    let t = s.trim();
    let arg = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad integer in {s:?}")))
    };
    if t == "whitehead" {
        Ok(vec![slope::whitehead_map()])
    } else if t == "whitehead-steps" {
        Ok(slope::whitehead_steps().to_vec())
    } else if let Some(p) = t.strip_prefix("cable:") {
        Ok(vec![slope::cable_map(arg(p)?)])
    } else if let Some(r) = t.strip_prefix("cable-steps:") {
        Ok(slope::cable_steps(arg(r)?).to_vec())
    } else {
        Ok(vec![t.parse()?])
    }
}

fn parse_one_map(s: &str) -> Result<SlopeMap> {
    slope::compose_slope_maps(&parse_maps(s)?)
}

fn builtin_params(spec: &str, what: &str) -> Result<[i64; 3]> {
    let xs: Vec<i64> = spec
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad {what} parameters {spec:?}"))))
        .collect::<Result<_>>()?;
    xs.try_into()
        .map_err(|_| Error::Parse(format!("{what} needs three parameters, got {spec:?}")))
}

fn load_presentation(source: &str) -> Result<GroupPresentation> {
    if let Some(rest) = source.strip_prefix("builtin:pretzel:") {
        let [k, l, m] = builtin_params(rest, "pretzel")?;
        return lo::present_pretzel_sigma3(k, l, m);
    }
    if let Some(rest) = source.strip_prefix("builtin:twobridge:") {
        let [k, l, n] = builtin_params(rest, "twobridge")?;
        if n < 2 {
            return Err(Error::InvalidParameter(format!("cover degree {n}")));
        }
        return if n == 4 {
            lo::present_two_bridge_sigma4(k, l)
        } else {
            lo::present_two_bridge_cover(k, l, n as usize)
        };
    }
    if source.starts_with("builtin:") {
        return Err(Error::InvalidParameter(format!("unknown builtin {source:?}")));
    }
    let text = if source == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidParameter(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(source).map_err(|e| Error::InvalidParameter(format!("{source}: {e}")))?
    };
    text.parse()
}

fn dispatch(cmd: &Command) -> Result<Reply> {
    match cmd {
        Command::Cf(CfCommand::Eval { terms }) => {
            let cf: ContinuedFraction = terms.parse()?;
            let v = cf_eval(&cf)?;
            ok(json!({"terms": cf.to_string(), "value": v.to_string()}))
        }
        Command::Cf(CfCommand::Expand { value, policy }) => {
            let r: Rational = value.parse()?;
            let pol: ExpansionPolicy = policy.parse()?;
            let cf = cf_expand(&r, pol)?;
            let terms: Vec<Value> = cf.terms().iter().map(int).collect();
            ok(json!({"value": r.to_string(), "policy": policy, "terms": terms, "text": cf.to_string()}))
        }
        Command::Seifert(sc) => seifert(sc),
        Command::Classify { n, p, q } => {
            let qr = query(*n, *p, *q)?;
            let c = torus_covers::classify_torus_cover(&qr);
            let reason = match c.exception {
                Some(e) => e.label(),
                None => "infinite fundamental group",
            };
            ok(json!({"n": n, "p": p, "q": q, "verdict": c.verdict.to_string(), "reason": reason}))
        }
        Command::Invariants { n, p, q } => {
            let qr = query(*n, *p, *q)?;
            match torus_covers::branched_invariants(&qr) {
                BranchedInvariants::Known { invariants, source } => {
                    let mut v = seifert_json(&invariants);
                    v["known"] = json!(true);
                    v["euler"] = json!(invariants.euler_number().to_string());
                    v["h1"] = h1_json(&invariants.h1_order());
                    ok_with(v, source.as_str())
                }
                BranchedInvariants::Unsupported => ok(json!({"known": false})),
            }
        }
        Command::Crosscheck { n, p, q, sweep } => crosscheck(*n, *p, *q, sweep.as_deref()),
        Command::Surgery { d, r, s, slopes, mirror } => {
            let ext = TorusLinkExterior::new(*d, *r, *s)?;
            let sl = slopes.iter().map(|x| x.parse::<Slope>()).collect::<Result<Vec<_>>>()?;
            let si = if *mirror { fill_mirror(&ext, &sl)? } else { fill(&ext, &sl)? };
            let mut v = seifert_json(&si);
            v["exterior"] = json!(ext.to_string());
            v["excellence"] = verdict_json(&decide_excellence(&si));
            v["decision"] = decision_json(&decide_horizontal(&si));
            ok(v)
        }
        Command::Slope(sc) => slope_cmd(sc),
        Command::Cable(cc) => cable_cmd(cc),
        Command::Present(pc) => {
            let p = match pc {
                PresentCommand::Twobridge { k, l, n } if *n == 4 => lo::present_two_bridge_sigma4(*k, *l)?,
                PresentCommand::Twobridge { k, l, n } => lo::present_two_bridge_cover(*k, *l, *n)?,
                PresentCommand::Pretzel { k, l, m } => lo::present_pretzel_sigma3(*k, *l, *m)?,
            };
            let rels: Vec<String> = (0..p.relators().len()).map(|i| p.render_relator(i)).collect();
            ok(json!({"generators": p.generators(), "relators": rels, "text": p.to_string()}))
        }
        Command::Lo(LoCommand::Check { source, cap }) => {
            let p = load_presentation(source)?;
            let rep = lo::coarse_obstruction_with_cap(&p, *cap)?;
            ok(obstruction_json(&p, &rep))
        }
        Command::PretzelSurgery { n, k, l, sign } => {
            let sg: Sign = sign.parse()?;
            let d = lo::pretzel_surgery_description(*n, *k, *l, sg)?;
            ok(json!({
                "strands": d.strands,
                "coefficient": d.coefficient.to_string(),
                "orientation_reversed": d.orientation_reversed,
            }))
        }
    }
}

fn seifert(sc: &SeifertCommand) -> Result<Reply> {
    match sc {
        SeifertCommand::Normalize { invariants } => ok(seifert_json(&parse_seifert(invariants)?.normalize())),
        SeifertCommand::Reverse { invariants } => {
            ok(seifert_json(&parse_seifert(invariants)?.reverse_orientation()))
        }
        SeifertCommand::Euler { invariants } => {
            ok(json!({"euler": parse_seifert(invariants)?.euler_number().to_string()}))
        }
        SeifertCommand::H1 { invariants } => {
            let si = parse_seifert(invariants)?;
            ok(json!({"h1": h1_json(&si.h1_order()), "h1_snf": h1_json(&si.h1_order_snf())}))
        }
        SeifertCommand::Decide { invariants } => {
            let si = parse_seifert(invariants)?;
            let mut v = decision_json(&decide_horizontal(&si));
            v["invariants"] = json!(si.to_string());
            v["excellence"] = verdict_json(&decide_excellence(&si));
            ok(v)
        }
    }
}

fn crosscheck(n: Option<u64>, p: Option<u64>, q: Option<u64>, sweep: Option<&[u64]>) -> Result<Reply> {
    if let Some(&[nmax, pmax, qmax]) = sweep {
        let rep = torus_covers::crosscheck_sweep(nmax, pmax, qmax);
        let fmt = |qs: &[TorusCoverQuery]| qs.iter().map(|q| q.to_string()).collect::<Vec<_>>();
        let bad: Vec<String> = rep.inconsistent.iter().map(|(q, _)| q.to_string()).collect();
        return ok(json!({
            "queries": rep.queries,
            "computable": rep.computable,
            "consistent": rep.consistent,
            "inconsistent": bad,
            "not_computable": fmt(&rep.not_computable),
            "total_lspace": fmt(&rep.total_lspace),
        }));
    }
    let (Some(n), Some(p), Some(q)) = (n, p, q) else {
        return Err(Error::InvalidParameter("give n p q or --sweep NMAX PMAX QMAX".into()));
    };
    let qr = query(n, p, q)?;
    match torus_covers::cross_validate(&qr) {
        CrossCheck::Consistent { verdict } => ok(json!({"consistent": true, "verdict": verdict.to_string()})),
        CrossCheck::Inconsistent {
            invariants,
            decided,
            classified,
        } => ok(json!({
            "consistent": false,
            "invariants": invariants.to_string(),
            "decided": decided.to_string(),
            "classified": classified.to_string(),
        })),
        CrossCheck::NotComputable => ok(json!({"consistent": Value::Null, "computable": false})),
    }
}

fn slope_cmd(sc: &SlopeCommand) -> Result<Reply> {
    match sc {
        SlopeCommand::Apply { map, slope } => {
            let f = parse_one_map(map)?;
            let s: Slope = slope.parse()?;
            let img = slope::apply_slope_map(&f, &s);
            ok(json!({"slope": s.to_string(), "image": img.to_string(), "map": slope_map_json(&f)}))
        }
        SlopeCommand::Compose { maps } => {
            let mut all = Vec::new();
            for m in maps {
                all.extend(parse_maps(m)?);
            }
            ok(slope_map_json(&slope::compose_slope_maps(&all)?))
        }
        SlopeCommand::Fixed { map } => {
            let f = parse_one_map(map)?;
            let v = match slope::fixed_unit_fraction_slopes(&f) {
                FixedSlopes::All => json!("all"),
                FixedSlopes::Finite(ks) => json!(ks.iter().map(int).collect::<Vec<_>>()),
            };
            ok(json!({"map": slope_map_json(&f), "fixed": v}))
        }
    }
}

fn cable_cmd(cc: &CableCommand) -> Result<Reply> {
    let rows = cable::builtin_rows();
    match cc {
        CableCommand::List => ok(json!(rows.iter().map(row_json).collect::<Vec<_>>())),
        CableCommand::Family { case, k } => {
            let row = cable::find_row(&rows, case)?;
            let si = cable::cable_family_invariants(row, *k)?;
            let mut v = seifert_json(&si);
            v["k"] = json!(k);
            v["decision"] = decision_json(&decide_horizontal(&si));
            ok_with(v, row.label.clone())
        }
        CableCommand::Check { case, kmin, kmax } => {
            let row = cable::find_row(&rows, case)?;
            let (lo, hi) = row.default_range();
            let (lo, hi) = (kmin.unwrap_or(lo), kmax.unwrap_or(hi));
            let rep = cable::cable_family_check(row, lo, hi);
            let failures: Vec<Value> = rep
                .failures
                .iter()
                .map(|(k, why)| json!({"k": k, "detail": why}))
                .collect();
            ok_with(
                json!({
                    "range": [lo, hi],
                    "horizontal_for": row.horizontal.to_string(),
                    "checked": rep.checked.len(),
                    "skipped": rep.skipped.len(),
                    "passed": rep.passed(),
                    "failures": failures,
                }),
                row.label.clone(),
            )
        }
        CableCommand::OneQ { n, q, c, k } => {
            let si = cable::one_q_family(*n, *q, *c, *k)?;
            let mut v = seifert_json(&si);
            v["excellence"] = verdict_json(&decide_excellence(&si));
            v["negative_range_bound"] = json!(cable::one_q_bound(*n, *q, *c));
            ok(v)
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Cf(CfCommand::Eval { .. }) => "cf eval",
        Command::Cf(CfCommand::Expand { .. }) => "cf expand",
        Command::Seifert(SeifertCommand::Normalize { .. }) => "seifert normalize",
        Command::Seifert(SeifertCommand::Reverse { .. }) => "seifert reverse",
        Command::Seifert(SeifertCommand::Euler { .. }) => "seifert euler",
        Command::Seifert(SeifertCommand::H1 { .. }) => "seifert h1",
        Command::Seifert(SeifertCommand::Decide { .. }) => "seifert decide",
        Command::Classify { .. } => "classify",
        Command::Invariants { .. } => "invariants",
        Command::Crosscheck { .. } => "crosscheck",
        Command::Surgery { .. } => "surgery",
        Command::Slope(SlopeCommand::Apply { .. }) => "slope apply",
        Command::Slope(SlopeCommand::Compose { .. }) => "slope compose",
        Command::Slope(SlopeCommand::Fixed { .. }) => "slope fixed",
        Command::Cable(CableCommand::List) => "cable list",
        Command::Cable(CableCommand::Family { .. }) => "cable family",
        Command::Cable(CableCommand::Check { .. }) => "cable check",
        Command::Cable(CableCommand::OneQ { .. }) => "cable one-q",
        Command::Present(PresentCommand::Twobridge { .. }) => "present twobridge",
        Command::Present(PresentCommand::Pretzel { .. }) => "present pretzel",
        Command::Lo(LoCommand::Check { .. }) => "lo check",
        Command::PretzelSurgery { .. } => "pretzel-surgery",
    }
}

fn envelope(status: &str, command: &str, payload: Value, provenance: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("status".into(), json!(status));
    m.insert("command".into(), json!(command));
    m.insert("payload".into(), payload);
    m.insert("provenance".into(), provenance);
    Value::Object(m)
}

/// Parses and runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion)
                || e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand;
            if informational {
                return CommandOutput {
                    exit_code: if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { 2 } else { 0 },
                    document: envelope("ok", "help", json!({"text": text}), Value::Null),
                    text: Some(text),
                };
            }
            let payload = json!({"code": "cli/usage", "message": text.trim_end()});
            return CommandOutput {
                exit_code: 2,
                document: envelope("error", "usage", payload, Value::Null),
                text: Some(text),
            };
        }
    };
    let name = command_name(&cli.command);
    let (exit_code, document) = match dispatch(&cli.command) {
        Ok(o) => (0, envelope("ok", name, o.payload, o.provenance)),
        Err(e) => {
            let payload = json!({"code": e.code(), "message": e.to_string()});
            (1, envelope("error", name, payload, Value::Null))
        }
    };
    let text = cli.pretty.then(|| render_pretty(&document));
    CommandOutput {
        exit_code,
        document,
        text,
    }
}

fn pretty_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

pub fn render_pretty(doc: &Value) -> String {
    let mut out = format!(
        "{} [{}]\n",
        pretty_value(&doc["command"]),
        pretty_value(&doc["status"])
    );
    match &doc["payload"] {
        Value::Object(m) => {
            let width = m.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in m {
                out.push_str(&format!("  {k:width$}  {}\n", pretty_value(v)));
            }
        }
        Value::Array(xs) => {
            for x in xs {
                out.push_str(&format!("  {}\n", pretty_value(x)));
            }
        }
        other => out.push_str(&format!("  {}\n", pretty_value(other))),
    }
    if let Value::String(p) = &doc["provenance"] {
        out.push_str(&format!("  ({p})\n"));
    }
    out
}

pub fn main_exit() -> i32 {
    use std::io::Write;
    let out = run(std::env::args_os());
    let _ = match &out.text {
        Some(t) if out.exit_code == 2 && out.document["status"] == "error" => std::io::stderr().write_all(t.as_bytes()),
        Some(t) => std::io::stdout().write_all(t.as_bytes()),
        None => writeln!(std::io::stdout(), "{}", out.document),
    };
    out.exit_code
}
