//! Command-line front end. [`run`] parses arguments, writes results to `out` and
//! errors to `err`, and returns the process exit code.
//!
//! Exit codes: `0` success, `1` domain or usage error (JSON on `err`), `2` a
//! verification sweep found a counterexample.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::classical::{in_class, is_special, jord_bp, IntervalStructure, Kind, SignVector};
use crate::duality::{dual_general, dual_via_collapse, dual_via_zeta};
use crate::error::{Error, Result};
use crate::induction::{cup, decompose, dual_tuple, endo_induce, levi_induce, LeviShape};
use crate::multiplicity::{certify, QuadInput};
use crate::partitions::Partition;
use crate::springer::{fam_coords, h_value, required_k, sp_collapse, sp_of_pair, springer_symbol};
use crate::symbols::{symb_b, symb_d, Symbol};
use crate::verify::{run_suites, Bounds, Suite};

#[derive(Debug, Parser)]
#[command(name = "wfcomb", version, about = "Partitions, symbols and wavefront combinatorics for classical groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Class membership, transpose and intervals of a partition.
    Partition {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        /// Restrict to one class and fail if the partition is not in it.
        #[arg(long)]
        kind: Option<Kind>,
    },
    /// Rank, defect, family and dual of a symbol.
    Symbol(SymbolArgs),
    /// The duality `d`, by the symbol, by `λ + ζ(λ)` and by collapse.
    Dual {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        lambda: Partition,
    },
    /// The symbol attached to a partition and a sign vector.
    Springer {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        lambda: Partition,
        /// Signs such as `2:-,4:+`; unlisted values get `+`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        eps: String,
    },
    /// Endoscopic induction (`--l1 --l2`) or Levi induction (`--gl --core`).
    Induce(InduceArgs),
    /// Split an all-even symplectic partition into a regularly inducing pair.
    Decompose {
        #[arg(long)]
        lambda: Partition,
        /// Values such as `2=1,4=0`; unlisted values get `0`.
        #[arg(long, default_value = "")]
        tau: String,
    },
    /// Certificate for a quadratic unipotent parameter with all-even union.
    Wavefront {
        #[arg(long, default_value = "")]
        lp: Partition,
        #[arg(long, default_value = "")]
        lm: Partition,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        ep: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        em: String,
    },
    /// Table of the partitions of a class.
    Enumerate {
        #[arg(long)]
        kind: Kind,
        /// Total size of the partitions.
        #[arg(long)]
        size: u32,
        #[arg(long)]
        special: bool,
    },
    /// Exhaustive verification sweeps.
    Verify {
        /// `all` or a comma separated list of suites.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Rank bound for every sweep.
        #[arg(long, env = "WFCOMB_MAX_N", default_value_t = 4)]
        max_n: u32,
        /// Worker threads; `0` uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Debug, Args)]
struct SymbolArgs {
    /// Rows as `X;Y`, for instance `2,0;1`.
    #[arg(long, conflicts_with_all = ["alpha", "beta"])]
    symbol: Option<Symbol>,
    #[arg(long)]
    alpha: Option<Partition>,
    #[arg(long)]
    beta: Option<Partition>,
    /// Defect of the symbol built from `--alpha/--beta`.
    #[arg(long, default_value_t = 1)]
    defect: u32,
}

#[derive(Debug, Args)]
struct InduceArgs {
    #[arg(long, requires = "l2", conflicts_with_all = ["gl", "core"])]
    l1: Option<Partition>,
    #[arg(long)]
    l2: Option<Partition>,
    /// GL factors separated by `;`, for instance `1;2,1`.
    #[arg(long, requires = "core")]
    gl: Option<String>,
    /// Symplectic (even size) or odd orthogonal core.
    #[arg(long)]
    core: Option<Partition>,
}

enum Output {
    Record(Map<String, Value>),
    Table { meta: Map<String, Value>, rows: Vec<Map<String, Value>> },
}

struct Failure {
    code: i32,
    payload: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::Parse { .. } => "parse",
            Error::Internal(_) => "internal",
            _ => "domain",
        };
        Failure {
            code: 1,
            payload: json!({"error": kind, "message": e.to_string()}),
        }
    }
}

/// Parses `2=1,4:0` into a map.
pub fn parse_tau(s: &str) -> Result<BTreeMap<u32, u8>> {
    let perr = || Error::Parse {
        what: "tau",
        input: s.to_string(),
    };
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (k, v) = item.split_once(['=', ':']).ok_or_else(perr)?;
        let k: u32 = k.trim().parse().map_err(|_| perr())?;
        let v: u8 = v.trim().parse().map_err(|_| perr())?;
        if v > 1 {
            return Err(perr());
        }
        out.insert(k, v);
    }
    Ok(out)
}

fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

fn interval_json(st: &IntervalStructure) -> Value {
    Value::Array(
        st.intervals
            .iter()
            .map(|d| {
                json!({
                    "values": d.values,
                    "j_min": d.j_min,
                    "j_max": d.j_max.to_string(),
                })
            })
            .collect(),
    )
}

fn partition_cmd(lambda: &Partition, kind: Option<Kind>) -> Result<Output> {
    let kinds: Vec<Kind> = match kind {
        Some(k) => {
            crate::classical::check_class(lambda, k)?;
            vec![k]
        }
        None => Kind::ALL.to_vec(),
    };
    let mut classes = Map::new();
    for k in kinds {
        let member = in_class(lambda, k);
        let mut c = Map::new();
        c.insert("member".into(), json!(member));
        if member {
            c.insert("special".into(), json!(is_special(lambda, k)));
            c.insert("jord_bp".into(), json!(jord_bp(lambda, k)));
            c.insert("sp".into(), s(sp_collapse(lambda, k)?));
            if is_special(lambda, k) {
                c.insert("intervals".into(), interval_json(&IntervalStructure::new(lambda, k)?));
            }
        }
        classes.insert(k.to_string(), Value::Object(c));
    }
    Ok(Output::Record(obj(json!({
        "partition": s(lambda),
        "size": lambda.size(),
        "length": lambda.len(),
        "transpose": s(lambda.transpose()),
        "classes": classes,
    }))))
}

fn symbol_cmd(a: &SymbolArgs) -> Result<Output> {
    let sym = match (&a.symbol, &a.alpha, &a.beta) {
        (Some(x), _, _) => x.clone(),
        (None, al, be) => {
            let (al, be) = (al.clone().unwrap_or_default(), be.clone().unwrap_or_default());
            match a.defect {
                1 => symb_b(&al, &be),
                0 => symb_d(&al, &be),
                d => return Err(Error::UnsupportedDefect(d)),
            }
        }
    };
    let n = sym.normalize();
    let (al, be) = n.bipartition()?;
    let key = n.family_key();
    let members: Vec<Value> = n.family_members()?.iter().map(s).collect();
    Ok(Output::Record(obj(json!({
        "symbol": s(&n),
        "rank": n.rank(),
        "defect": n.defect(),
        "bipartition": [s(al), s(be)],
        "special": n.is_special(),
        "family": {"entries": key.entries, "doubled": key.doubled},
        "members": members,
        "special_member": s(n.special_member()),
        "dual": s(n.dual()),
    }))))
}

fn dual_cmd(kind: Kind, lambda: &Partition) -> Result<Output> {
    crate::classical::check_class(lambda, kind)?;
    let sp = sp_collapse(lambda, kind)?;
    let dual = dual_general(lambda, kind)?;
    let zeta = IntervalStructure::new(&sp, kind)?.zeta();
    let via_zeta = dual_via_zeta(&sp, kind)?;
    let via_collapse = dual_via_collapse(lambda, kind)?;
    let back = dual_general(&dual, kind.dual())?;
    Ok(Output::Record(obj(json!({
        "input": s(lambda),
        "kind": s(kind),
        "sp": s(&sp),
        "dual": s(&dual),
        "dual_kind": s(kind.dual()),
        "zeta": zeta.as_slice(),
        "checks": {
            "zeta_route": via_zeta == dual,
            "collapse_route": via_collapse == dual,
            "involution_on_sp": back == sp,
        },
    }))))
}

fn springer_cmd(kind: Kind, lambda: &Partition, eps: &str) -> Result<Output> {
    crate::classical::check_class(lambda, kind)?;
    let keys = jord_bp(lambda, kind);
    let eps = SignVector::parse(eps, kind.modulo_diagonal())?.extended_to(&keys)?;
    let d = springer_symbol(lambda, &eps, kind)?;
    let (al, be) = d.symbol.bipartition()?;
    let mut m = obj(json!({
        "partition": s(lambda),
        "kind": s(kind),
        "eps": s(&d.eps),
        "h": h_value(lambda, &eps, kind),
        "k": d.k,
        "required_k": required_k(kind),
        "lift_flipped": d.lift_flipped,
        "a_sharp": d.a_sharp,
        "b_sharp": d.b_sharp,
        "rows": [d.a, d.b],
        "symbol": s(&d.symbol),
        "bipartition": [s(al), s(be)],
        "sp": s(sp_of_pair(lambda, &eps, kind)?),
    }));
    if is_special(lambda, kind) {
        if let Ok(c) = fam_coords(lambda, &eps, kind) {
            m.insert("fam".into(), json!({"tau": c.tau, "delta": c.delta}));
        }
    }
    Ok(Output::Record(m))
}

fn induce_cmd(a: &InduceArgs) -> Result<Output> {
    if let (Some(l1), Some(l2)) = (&a.l1, &a.l2) {
        let e = endo_induce(l1, l2)?;
        let rel: Vec<Value> = e
            .relative_intervals
            .iter()
            .map(|d| json!({"values": d.values, "j_min": d.j_min, "j_max": d.j_max.to_string()}))
            .collect();
        return Ok(Output::Record(obj(json!({
            "lambda1": s(l1),
            "lambda2": s(l2),
            "j_plus": e.j_plus,
            "j_minus": e.j_minus,
            "xi": e.xi.as_slice(),
            "induced": s(&e.induced),
            "relative_intervals": rel,
            "regular": e.regular,
            "tau_rel": e.tau_rel,
        }))));
    }
    let core = a
        .core
        .clone()
        .ok_or_else(|| Error::Precondition("give --l1 and --l2, or --core with optional --gl".into()))?;
    let gl: Vec<Partition> = match &a.gl {
        Some(t) if !t.trim().is_empty() => t.split(';').map(str::parse).collect::<Result<_>>()?,
        _ => Vec::new(),
    };
    let sizes: Vec<u32> = gl.iter().map(Partition::size).collect();
    let mut parts = gl.clone();
    parts.push(core.clone());
    let show: Vec<Value> = gl.iter().map(s).collect();
    if core.size() % 2 == 1 {
        let shape = LeviShape::new(sizes, (core.size() - 1) / 2)?;
        let ind = levi_induce(&shape, &parts)?;
        return Ok(Output::Record(obj(json!({"gl": show, "core": s(&core), "ind": s(ind)}))));
    }
    let shape = LeviShape::new(sizes, core.size() / 2)?;
    let c = cup(&shape, &parts)?;
    let dc = dual_general(&c, Kind::Symp)?;
    let dt = dual_tuple(&shape, &parts)?;
    let ind = levi_induce(&shape, &dt)?;
    let dts: Vec<Value> = dt.iter().map(s).collect();
    Ok(Output::Record(obj(json!({
        "gl": show,
        "core": s(&core),
        "cup": s(&c),
        "d_cup": s(&dc),
        "d_tuple": dts,
        "ind_d": s(&ind),
        "checks": {"commutes": dc == ind},
    }))))
}

fn decompose_cmd(lambda: &Partition, tau: &str) -> Result<Output> {
    let d = decompose(lambda, &parse_tau(tau)?)?;
    Ok(Output::Record(obj(json!({
        "n1": d.n1,
        "n2": d.n2,
        "lambda1": s(&d.lambda1),
        "lambda2": s(&d.lambda2),
        "checks": d.checks,
    }))))
}

fn wavefront_cmd(lp: &Partition, lm: &Partition, ep: &str, em: &str) -> Result<Output> {
    let q = QuadInput::with_defaults(
        lp.clone(),
        &SignVector::parse(ep, false)?,
        lm.clone(),
        &SignVector::parse(em, false)?,
    )?;
    let c = certify(&q)?;
    let mut m = obj(serde_json::to_value(&c).map_err(|e| Error::Internal(e.to_string()))?);
    m.insert(
        "input".into(),
        json!({"lp": s(&q.lambda_plus), "ep": s(&q.eps_plus), "lm": s(&q.lambda_minus), "em": s(&q.eps_minus)}),
    );
    m.insert("eta1".into(), s(&c.eta1));
    m.insert("eta2".into(), s(&c.eta2));
    m.insert("passed".into(), json!(c.verdicts.first_failure().is_none()));
    Ok(Output::Record(m))
}

fn enumerate_cmd(kind: Kind, size: u32, special: bool) -> Result<Output> {
    let list = if special {
        crate::classical::special_partitions(kind, size)
    } else {
        crate::classical::class_partitions(kind, size)
    };
    let mut rows = Vec::new();
    for p in list {
        let sp = sp_collapse(&p, kind)?;
        rows.push(obj(json!({
            "partition": s(&p),
            "length": p.len(),
            "special": sp == p,
            "sp": s(&sp),
            "dual": s(dual_general(&p, kind)?),
        })));
    }
    Ok(Output::Table {
        meta: obj(json!({"kind": s(kind), "size": size, "count": rows.len()})),
        rows,
    })
}

fn verify_cmd(suite: &str, max_n: u32, jobs: usize) -> std::result::Result<Output, Failure> {
    let suites = Suite::parse_list(suite)?;
    let reports = run_suites(&suites, &Bounds::uniform(max_n), jobs)?;
    let ok = reports.iter().all(|r| r.passed());
    let rows: Vec<Map<String, Value>> = reports
        .iter()
        .map(|r| {
            obj(json!({
                "suite": s(r.suite),
                "checked": r.checked,
                "failed": r.failed,
                "passed": r.passed(),
                "seconds": (r.elapsed.as_secs_f64() * 1000.0).round() / 1000.0,
            }))
        })
        .collect();
    if !ok {
        let bad: Vec<Value> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| json!({"suite": s(r.suite), "counterexamples": r.failures}))
            .collect();
        return Err(Failure {
            code: 2,
            payload: json!({"error": "verification", "suites": rows, "failures": bad}),
        });
    }
    Ok(Output::Table {
        meta: obj(json!({"passed": true})),
        rows,
    })
}

fn config_of(cli: &Cli) -> Value {
    let opt = |p: &Option<Partition>| p.as_ref().map(s).unwrap_or(Value::Null);
    let (name, args) = match &cli.command {
        Command::Partition { lambda, kind } => (
            "partition",
            json!({"lambda": s(lambda), "kind": kind.map(s).unwrap_or(Value::Null)}),
        ),
        Command::Symbol(a) => (
            "symbol",
            json!({
                "symbol": a.symbol.as_ref().map(s).unwrap_or(Value::Null),
                "alpha": opt(&a.alpha),
                "beta": opt(&a.beta),
                "defect": a.defect,
            }),
        ),
        Command::Dual { kind, lambda } => ("dual", json!({"kind": s(kind), "lambda": s(lambda)})),
        Command::Springer { kind, lambda, eps } => {
            ("springer", json!({"kind": s(kind), "lambda": s(lambda), "eps": eps}))
        }
        Command::Induce(a) => (
            "induce",
            json!({"l1": opt(&a.l1), "l2": opt(&a.l2), "gl": a.gl, "core": opt(&a.core)}),
        ),
        Command::Decompose { lambda, tau } => ("decompose", json!({"lambda": s(lambda), "tau": tau})),
        Command::Wavefront { lp, lm, ep, em } => (
            "wavefront",
            json!({"lp": s(lp), "ep": ep, "lm": s(lm), "em": em}),
        ),
        Command::Enumerate { kind, size, special } => (
            "enumerate",
            json!({"kind": s(kind), "size": size, "special": special}),
        ),
        Command::Verify { suite, max_n, jobs } => {
            ("verify", json!({"suite": suite, "max_n": max_n, "jobs": jobs}))
        }
    };
    let format = match cli.format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Text => "text",
    };
    json!({"command": name, "args": args, "format": format})
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(t) => t.clone(),
        other => other.to_string(),
    }
}

fn emit(out: &mut dyn Write, format: Format, config: Value, output: Output) -> std::io::Result<()> {
    match (format, output) {
        (Format::Json, Output::Record(mut m)) => {
            m.insert("config".into(), config);
            writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(m))?)
        }
        (Format::Json, Output::Table { mut meta, rows }) => {
            meta.insert("config".into(), config);
            meta.insert("rows".into(), Value::Array(rows.into_iter().map(Value::Object).collect()));
            writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(meta))?)
        }
        (Format::Text, output) => {
            writeln!(out, "# config: {config}")?;
            let (meta, rows) = match output {
                Output::Record(m) => (m, Vec::new()),
                Output::Table { meta, rows } => (meta, rows),
            };
            for (k, v) in &meta {
                writeln!(out, "{k}: {}", render_value(v))?;
            }
            for r in rows {
                let line: Vec<String> = r.iter().map(|(k, v)| format!("{k}={}", render_value(v))).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
            Ok(())
        }
        (Format::Csv, output) => {
            writeln!(out, "# config: {config}")?;
            let mut buf = Vec::new();
            {
                let mut w = csv::Writer::from_writer(&mut buf);
                match output {
                    Output::Record(m) => {
                        w.write_record(["field", "value"])?;
                        for (k, v) in &m {
                            w.write_record([k.as_str(), &render_value(v)])?;
                        }
                    }
                    Output::Table { rows, .. } => {
                        if let Some(first) = rows.first() {
                            w.write_record(first.keys())?;
                        }
                        for r in &rows {
                            w.write_record(r.values().map(render_value))?;
                        }
                    }
                }
                w.flush()?;
            }
            out.write_all(&buf)
        }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = writeln!(err, "{}", json!({"error": "usage", "message": e.to_string()}));
            return 1;
        }
    };
    let config = config_of(&cli);
    let result: std::result::Result<Output, Failure> = match &cli.command {
        Command::Partition { lambda, kind } => partition_cmd(lambda, *kind).map_err(Failure::from),
        Command::Symbol(a) => symbol_cmd(a).map_err(Failure::from),
        Command::Dual { kind, lambda } => dual_cmd(*kind, lambda).map_err(Failure::from),
        Command::Springer { kind, lambda, eps } => springer_cmd(*kind, lambda, eps).map_err(Failure::from),
        Command::Induce(a) => induce_cmd(a).map_err(Failure::from),
        Command::Decompose { lambda, tau } => decompose_cmd(lambda, tau).map_err(Failure::from),
        Command::Wavefront { lp, lm, ep, em } => wavefront_cmd(lp, lm, ep, em).map_err(Failure::from),
        Command::Enumerate { kind, size, special } => enumerate_cmd(*kind, *size, *special).map_err(Failure::from),
        Command::Verify { suite, max_n, jobs } => verify_cmd(suite, *max_n, *jobs),
    };
    match result {
        Ok(o) => match emit(out, cli.format, config, o) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "{}", json!({"error": "io", "message": e.to_string()}));
                1
            }
        },
        Err(f) => {
            let mut p = f.payload;
            if let Value::Object(m) = &mut p {
                m.insert("config".into(), config);
            }
            let _ = writeln!(err, "{p}");
            f.code
        }
    }
}
