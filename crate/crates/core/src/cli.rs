//! Command-line interface.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::artheory::{fundamental_domain, ArQuiver, FdTag};
use crate::ctquiver::{cluster_tilted_quiver, gabriel_quiver, verify_mutation_class};
use crate::error::{Error, Result};
use crate::exactlin::{Field, DEFAULT_PRIME};
use crate::hmod::{rep_to_json, PathAlgebra};
use crate::quiver::{self, parse_quiver, Quiver};
use crate::tilting::Tilting;
use crate::triplecat::AlgebraInstance;
use crate::verify::verify_all;

#[derive(Parser, Debug)]
#[command(name = "clusterdomain", version, about = "Fundamental domains of cluster categories inside module categories")]
pub struct Cli {
    /// Prime characteristic of the ground field.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    pub field: u32,

    /// Machine-readable output; errors go to stderr as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraKind {
    #[value(name = "H")]
    H,
    #[value(name = "Gamma")]
    Gamma,
    #[value(name = "Lambda")]
    Lambda,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dynkin type and indecomposable counts.
    Info { quiver: PathBuf },
    /// The algebra Gamma: vertices, generators, projectives.
    Gamma { quiver: PathBuf },
    /// The duplicated algebra Lambda.
    Lambda { quiver: PathBuf },
    /// Auslander-Reiten quiver.
    Ar {
        quiver: PathBuf,
        #[arg(long, value_enum, default_value = "Gamma")]
        algebra: AlgebraKind,
        #[arg(long)]
        dot: bool,
    },
    /// Fundamental-domain objects inside mod Gamma.
    Fd { quiver: PathBuf },
    /// Basic tilting modules.
    Tilting {
        quiver: PathBuf,
        #[arg(long, value_enum, default_value = "Gamma")]
        algebra: AlgebraKind,
    },
    /// Cluster-tilting objects as fundamental-domain summands.
    ClusterTilting { quiver: PathBuf },
    /// Quiver of the cluster-tilted algebra of an object.
    CtQuiver {
        quiver: PathBuf,
        /// Comma-separated summand labels, as printed by `cluster-tilting`.
        #[arg(long)]
        object: String,
        /// Also check membership in the mutation class of the input quiver.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Global dimension.
    Gldim {
        quiver: PathBuf,
        #[arg(long, value_enum, default_value = "Lambda")]
        algebra: AlgebraKind,
    },
    /// Run the full property suite.
    Verify { quiver: PathBuf },
}

impl Command {
    fn quiver_path(&self) -> &PathBuf {
        match self {
            Command::Info { quiver }
            | Command::Gamma { quiver }
            | Command::Lambda { quiver }
            | Command::Ar { quiver, .. }
            | Command::Fd { quiver }
            | Command::Tilting { quiver, .. }
            | Command::ClusterTilting { quiver }
            | Command::CtQuiver { quiver, .. }
            | Command::Gldim { quiver, .. }
            | Command::Verify { quiver } => quiver,
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonDynkin(_) | Error::ClassCap(_) => 1,
        Error::Parse { .. } | Error::Field(_) | Error::Invalid(_) => 2,
        Error::Inconsistent(_) => 3,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NonDynkin(_) => "non-dynkin",
        Error::ClassCap(_) => "class-cap",
        Error::Parse { .. } => "parse",
        Error::Field(_) => "field",
        Error::Invalid(_) => "invalid",
        Error::Inconsistent(_) => "inconsistent",
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            if cli.json {
                eprintln!("{}", json!({"error": error_kind(&e), "message": e.to_string()}));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Runs one command, returning its standard output and exit status.
pub fn run(cli: &Cli) -> Result<(String, u8)> {
    let field = Field::new(cli.field)?;
    let path = cli.command.quiver_path();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    let q = parse_quiver(&text)?;
    let j = cli.json;
    match &cli.command {
        Command::Info { .. } => info(&q, field, j).map(ok),
        Command::Gamma { .. } => describe(&AlgebraInstance::gamma(&q, field)?, j).map(ok),
        Command::Lambda { .. } => describe(&AlgebraInstance::lambda(&q, field)?, j).map(ok),
        Command::Ar { algebra, dot, .. } => ar(&q, field, *algebra, *dot, j).map(ok),
        Command::Fd { .. } => fd(&q, field, j).map(ok),
        Command::Tilting { algebra, .. } => tilting(&q, field, *algebra).map(ok),
        Command::ClusterTilting { .. } => cluster_tilting(&q, field).map(ok),
        Command::CtQuiver { object, verify, dot, .. } => ct_quiver(&q, field, object, *verify, *dot, j).map(ok),
        Command::Gldim { algebra, .. } => gldim(&q, field, *algebra, j).map(ok),
        Command::Verify { .. } => {
            let report = verify_all(&q, field);
            let code = if report.passed() { 0 } else { 3 };
            let out = if j {
                format!("{}\n", serde_json::to_string_pretty(&report).expect("report serializes"))
            } else {
                report.to_string()
            };
            Ok((out, code))
        }
    }
}

fn ok(s: String) -> (String, u8) {
    (s, 0)
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json serializes"))
}

fn info(q: &Quiver, field: Field, j: bool) -> Result<String> {
    let types = quiver::component_types(q);
    let names: Vec<String> = types
        .iter()
        .map(|t| t.as_ref().map_or("non-Dynkin".into(), |t| t.to_string()))
        .collect();
    quiver::require_dynkin(q)?;
    let h = PathAlgebra::new(q, field)?;
    let nh = h.indecomposables()?.len();
    let ng = ArQuiver::build(AlgebraInstance::gamma(q, field)?.algebra())?.len();
    let nl = ArQuiver::build(AlgebraInstance::lambda(q, field)?.algebra())?.len();
    if j {
        return Ok(pretty(&json!({
            "type": names,
            "vertices": q.n(),
            "arrows": q.arrows.len(),
            "ind_H": nh,
            "ind_Gamma": ng,
            "ind_Lambda": nl,
            "fd": nh + q.n(),
        })));
    }
    let mut s = String::new();
    writeln!(s, "type: {}", names.join(" + ")).unwrap();
    writeln!(s, "quiver: {}", q.describe()).unwrap();
    writeln!(s, "ind H: {nh}").unwrap();
    writeln!(s, "ind Gamma: {ng}").unwrap();
    writeln!(s, "ind Lambda: {nl}").unwrap();
    writeln!(s, "fundamental domain: {}", nh + q.n()).unwrap();
    Ok(s)
}

fn describe(inst: &AlgebraInstance, j: bool) -> Result<String> {
    let alg = inst.algebra();
    let ar = ArQuiver::build(alg)?;
    let labels = alg.labels();
    let (gq, rel) = gabriel_quiver(alg)?;
    let arrows: Vec<(String, String)> = gq
        .arrows
        .iter()
        .map(|&(a, b)| (labels[a].clone(), labels[b].clone()))
        .collect();
    let mut relations = vec![];
    for (i, row) in rel.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            // rel counts maps P(j) <- ... <- P(i), i.e. paths j -> ... -> i
            if r > 0 {
                relations.push((labels[j].clone(), labels[i].clone(), r));
            }
        }
    }
    let projectives: Vec<String> = (0..alg.n())
        .map(|v| ar.find(alg, alg.projective(v)).map_or("?".into(), |i| ar.labels[i].clone()))
        .collect();
    let gl = alg.gldim();
    if j {
        return Ok(pretty(&json!({
            "vertices": labels,
            "arrows": arrows,
            "relations": relations,
            "projectives": projectives,
            "gldim": gl,
            "indecomposables": ar.len(),
        })));
    }
    let mut s = String::new();
    writeln!(s, "vertices: {}", labels.join(" ")).unwrap();
    for (a, b) in &arrows {
        writeln!(s, "arrow: {a} -> {b}").unwrap();
    }
    for (a, b, r) in &relations {
        writeln!(s, "relations {a} -> {b}: {r}").unwrap();
    }
    for (v, p) in projectives.iter().enumerate() {
        writeln!(s, "P({}) = {p}", labels[v]).unwrap();
    }
    writeln!(s, "gldim: {gl}").unwrap();
    writeln!(s, "indecomposables: {}", ar.len()).unwrap();
    Ok(s)
}

fn instance(q: &Quiver, field: Field, kind: AlgebraKind) -> Result<Option<AlgebraInstance>> {
    Ok(match kind {
        AlgebraKind::H => None,
        AlgebraKind::Gamma => Some(AlgebraInstance::gamma(q, field)?),
        AlgebraKind::Lambda => Some(AlgebraInstance::lambda(q, field)?),
    })
}

fn ar(q: &Quiver, field: Field, kind: AlgebraKind, dot: bool, j: bool) -> Result<String> {
    quiver::require_dynkin(q)?;
    let inst = instance(q, field, kind)?;
    let h;
    let alg: &Algebra = match &inst {
        Some(i) => i.algebra(),
        None => {
            h = PathAlgebra::new(q, field)?;
            h.algebra()
        }
    };
    let ar = ArQuiver::build(alg)?;
    let fd: Vec<usize> = match &inst {
        Some(i) => fundamental_domain(i, &ar)?.iter().map(|o| o.node).collect(),
        None => vec![],
    };
    if dot {
        return Ok(ar.to_dot());
    }
    if j {
        let nodes: Vec<Value> = (0..ar.len())
            .map(|i| {
                json!({
                    "label": ar.labels[i],
                    "module": rep_to_json(&ar.nodes[i], field),
                    "pd": ar.pd[i],
                    "projective": ar.projective[i],
                    "injective": ar.injective[i],
                    "tau": ar.tau[i].map(|t| ar.labels[t].clone()),
                    "fd": fd.contains(&i),
                })
            })
            .collect();
        let arrows: Vec<Value> = ar
            .arrows
            .iter()
            .map(|&(a, b, m)| json!({"from": ar.labels[a], "to": ar.labels[b], "multiplicity": m}))
            .collect();
        return Ok(pretty(&json!({"vertices": alg.labels(), "nodes": nodes, "arrows": arrows})));
    }
    let mut s = String::new();
    for i in 0..ar.len() {
        let mut flags = vec![];
        if ar.projective[i] {
            flags.push("P");
        }
        if ar.injective[i] {
            flags.push("I");
        }
        if fd.contains(&i) {
            flags.push("FD");
        }
        let tau = ar.tau[i].map_or("-".into(), |t| ar.labels[t].clone());
        writeln!(
            s,
            "{:<14} dims {:?} pd {} tau {:<10} {}",
            ar.labels[i],
            ar.nodes[i].dims,
            ar.pd[i],
            tau,
            flags.join(",")
        )
        .unwrap();
    }
    for &(a, b, m) in &ar.arrows {
        let mult = if m > 1 { format!(" x{m}") } else { String::new() };
        writeln!(s, "{} -> {}{mult}", ar.labels[a], ar.labels[b]).unwrap();
    }
    Ok(s)
}

fn tag_name(q: &Quiver, tag: FdTag) -> String {
    match tag {
        FdTag::Module(k) => format!("M{}", k + 1),
        FdTag::Shift(i) => format!("P{}[1]", q.labels[i]),
    }
}

fn fd(q: &Quiver, field: Field, j: bool) -> Result<String> {
    quiver::require_dynkin(q)?;
    let g = AlgebraInstance::gamma(q, field)?;
    let ar = ArQuiver::build(g.algebra())?;
    let fd = fundamental_domain(&g, &ar)?;
    if j {
        let objs: Vec<Value> = fd
            .iter()
            .map(|o| json!({"label": ar.labels[o.node], "dims": ar.nodes[o.node].dims, "object": tag_name(q, o.tag)}))
            .collect();
        return Ok(pretty(&json!(objs)));
    }
    let mut s = String::new();
    for o in &fd {
        writeln!(s, "{:<14} dims {:?} {}", ar.labels[o.node], ar.nodes[o.node].dims, tag_name(q, o.tag)).unwrap();
    }
    Ok(s)
}

fn tilting(q: &Quiver, field: Field, kind: AlgebraKind) -> Result<String> {
    quiver::require_dynkin(q)?;
    let inst = match instance(q, field, kind)? {
        Some(i) => i,
        None => return Err(Error::Invalid("tilting modules are enumerated over Gamma or Lambda".into())),
    };
    let ar = ArQuiver::build(inst.algebra())?;
    let t = Tilting::new(&inst, &ar)?;
    let sets: Vec<Vec<String>> = t.tilting_modules().iter().map(|s| t.labels(&s.summands)).collect();
    Ok(pretty(&json!(sets)))
}

fn cluster_tilting(q: &Quiver, field: Field) -> Result<String> {
    quiver::require_dynkin(q)?;
    let g = AlgebraInstance::gamma(q, field)?;
    let ar = ArQuiver::build(g.algebra())?;
    let t = Tilting::new(&g, &ar)?;
    let sets: Vec<Vec<String>> = t.cluster_tilting_objects()?.iter().map(|c| t.fd_labels(c)).collect();
    Ok(pretty(&json!(sets)))
}

fn ct_quiver(q: &Quiver, field: Field, object: &str, check: bool, dot: bool, j: bool) -> Result<String> {
    quiver::require_dynkin(q)?;
    let g = AlgebraInstance::gamma(q, field)?;
    let ar = ArQuiver::build(g.algebra())?;
    let t = Tilting::new(&g, &ar)?;
    let labels: Vec<&str> = object.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let c = t.parse_object(&labels)?;
    if !t.is_tilting(&t.theta(&c).summands) {
        return Err(Error::Invalid(format!("{object} is not a cluster-tilting object")));
    }
    let qc = cluster_tilted_quiver(g.algebra(), &t, &c)?;
    let in_class = if check {
        let ok = verify_mutation_class(&qc.quiver, q)?;
        if !ok {
            return Err(Error::Inconsistent("quiver is outside the mutation class".into()));
        }
        Some(ok)
    } else {
        None
    };
    if dot {
        return Ok(quiver::to_dot(&qc.quiver));
    }
    if j {
        let arrows: Vec<(String, String)> = qc
            .quiver
            .arrows
            .iter()
            .map(|&(a, b)| (qc.labels[a].clone(), qc.labels[b].clone()))
            .collect();
        return Ok(pretty(&json!({
            "vertices": qc.labels,
            "arrows": arrows,
            "stable": qc.stable,
            "relations": qc.relations,
            "mutation_class": in_class,
        })));
    }
    let mut s = String::new();
    writeln!(s, "vertices: {}", qc.labels.join(" ")).unwrap();
    for &(a, b) in &qc.quiver.arrows {
        let kind = if qc.stable[a][b] > 0 { "stable" } else { "relation" };
        writeln!(s, "{} -> {} ({kind})", qc.labels[a], qc.labels[b]).unwrap();
    }
    if let Some(ok) = in_class {
        writeln!(s, "mutation class: {ok}").unwrap();
    }
    Ok(s)
}

fn gldim(q: &Quiver, field: Field, kind: AlgebraKind, j: bool) -> Result<String> {
    let gl = match instance(q, field, kind)? {
        Some(i) => i.algebra().gldim(),
        None => PathAlgebra::new(q, field)?.algebra().gldim(),
    };
    let reason = (kind == AlgebraKind::Lambda).then_some(match gl {
        1 => "H is semisimple",
        2 => "tau_H^2 = 0 and H is not semisimple",
        _ => "tau_H^2 is nonzero",
    });
    if j {
        return Ok(pretty(&json!({"gldim": gl, "reason": reason})));
    }
    Ok(match reason {
        Some(r) => format!("{gl} ({r})\n"),
        None => format!("{gl}\n"),
    })
}

