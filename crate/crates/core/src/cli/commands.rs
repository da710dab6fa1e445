use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::config::{AlgebraData, Config, ConfigBody};
use crate::cartangraph::{connectivity, explore, is_standard, CartanGraph, GraphViolation};
use crate::error::{Error, Result};
use crate::groupdata::{derive_two_cocycle, AbelianGroup, GroupElement};
use crate::nichols::{nichols_dims, pairing_gram};
use crate::reflect::{cartan_of, CartanMatrix, Catalog};
use crate::titscone::{alcove_tiling_check, classify_cone, ConeType};
use crate::weylroots::{cartan_axioms, real_roots};
use crate::ydmod::{validate, ModuleViolation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Cartan,
    Graph,
    Roots,
    Titscone,
    Hilbert,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Cartan => "cartan",
            Command::Graph => "graph",
            Command::Roots => "roots",
            Command::Titscone => "titscone",
            Command::Hilbert => "hilbert",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    ValidationFailure,
    CapExceeded,
    ParseError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::ValidationFailure => 2,
            Status::CapExceeded => 3,
            Status::ParseError => 4,
        }
    }

    fn of(ok: bool) -> Self {
        if ok {
            Status::Ok
        } else {
            Status::ValidationFailure
        }
    }

    fn of_error(e: &Error) -> Self {
        match e {
            Error::Parse(_) => Status::ParseError,
            Error::CapExceeded { .. } | Error::ReflectionUndefined { .. } | Error::ResourceCap { .. } => {
                Status::CapExceeded
            }
            _ => Status::ValidationFailure,
        }
    }
}

/// Command-line overrides of config values.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub word_bound: Option<usize>,
    pub max_deg: Option<usize>,
    pub module: Option<String>,
}

/// Result of one command: human-readable text, a JSON report and, for
/// commands that build a graph, its DOT rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub text: String,
    pub report: Value,
    pub dot: Option<String>,
}

impl Outcome {
    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn report_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
        s.push('\n');
        s
    }
}

fn word_str(w: &[usize]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.iter().map(|i| format!("r{}", i + 1)).collect()
    }
}

fn error_text(e: &Error) -> String {
    match e {
        Error::CapExceeded { i, j, cap } => format!("cap exceeded at ({},{}): no vanishing level up to {cap}", i + 1, j + 1),
        Error::ReflectionUndefined { sequence, i, j, cap } => format!(
            "cap exceeded at ({},{}) after reflection sequence {}: no vanishing level up to {cap}",
            i + 1,
            j + 1,
            word_str(sequence)
        ),
        other => other.to_string(),
    }
}

fn failure(cmd: Command, e: &Error) -> Outcome {
    let status = Status::of_error(e);
    let text = error_text(e);
    let report = json!({ "command": cmd.name(), "status": status, "error": text });
    Outcome { status, text: format!("{text}\n"), report, dot: None }
}

fn finish(cmd: Command, status: Status, text: String, mut report: Value, dot: Option<String>) -> Outcome {
    report["command"] = json!(cmd.name());
    report["status"] = json!(status);
    Outcome { status, text, report, dot }
}

/// Parses `text` as a config and runs `cmd` on it.
pub fn run_text(cmd: Command, text: &str, opts: &Options) -> Outcome {
    match Config::parse(text) {
        Ok(config) => run(cmd, &config, opts),
        Err(e) => failure(cmd, &e),
    }
}

pub fn run(cmd: Command, config: &Config, opts: &Options) -> Outcome {
    let result = match cmd {
        Command::Validate => do_validate(config),
        Command::Cartan => do_cartan(config),
        Command::Graph => do_graph(config, opts),
        Command::Roots => do_roots(config, opts),
        Command::Titscone => do_titscone(config, opts),
        Command::Hilbert => do_hilbert(config, opts),
    };
    match result {
        Ok((status, text, report, dot)) => finish(cmd, status, text, report, dot),
        Err(e) => failure(cmd, &e),
    }
}

type Raw = (Status, String, Value, Option<String>);

pub fn cmd_validate(config: &Config) -> Outcome {
    run(Command::Validate, config, &Options::default())
}

pub fn cmd_cartan(config: &Config) -> Outcome {
    run(Command::Cartan, config, &Options::default())
}

pub fn cmd_graph(config: &Config, opts: &Options) -> Outcome {
    run(Command::Graph, config, opts)
}

pub fn cmd_roots(config: &Config, opts: &Options) -> Outcome {
    run(Command::Roots, config, opts)
}

pub fn cmd_titscone(config: &Config, opts: &Options) -> Outcome {
    run(Command::Titscone, config, opts)
}

pub fn cmd_hilbert(config: &Config, opts: &Options) -> Outcome {
    run(Command::Hilbert, config, opts)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn triple(g: &AbelianGroup, xs: &[GroupElement]) -> String {
    format!("({})", xs.iter().map(|&x| g.format(x)).collect::<Vec<_>>().join(","))
}

fn module_violation(g: &AbelianGroup, v: &ModuleViolation) -> String {
    match v {
        ModuleViolation::IdentityNotTrivial => "rho(e) is not the identity".into(),
        ModuleViolation::Singular(x) => format!("rho({}) is singular", g.format(*x)),
        ModuleViolation::ProjectiveRule(h, l) => format!(
            "rho({h})rho({l}) != t({h},{l}) rho({hl})",
            h = g.format(*h),
            l = g.format(*l),
            hl = g.format(g.mul(*h, *l))
        ),
    }
}

fn graph_violation(v: &GraphViolation) -> String {
    match v {
        GraphViolation::NotInvolutive { object, index } => format!("r{}(r{}({object})) != {object}", index + 1, index + 1),
        GraphViolation::RowMismatch { object, index } => format!("row {} differs across r{} at {object}", index + 1, index + 1),
    }
}

const VIOLATION_LIMIT: usize = 64;

fn do_validate(config: &Config) -> Result<Raw> {
    match &config.body {
        ConfigBody::Algebra(a) => Ok(validate_algebra(a)),
        ConfigBody::Abstract(g) => {
            let violations: Vec<String> = g.violations().iter().map(graph_violation).collect();
            let ok = violations.is_empty();
            let text = format!("abstract graph: {} objects\nCG1/CG2: {}\nvalidation: {}\n", g.object_count(), pass(ok), pass(ok));
            Ok((Status::of(ok), text, json!({ "objects": g.object_count(), "graph_violations": violations, "passed": ok }), None))
        }
    }
}

fn validate_algebra(a: &AlgebraData) -> Raw {
    let g = a.group();
    let c = &a.cocycle;
    let normalization: Vec<String> = c.normalization_violations().iter().map(|t| triple(g, t)).collect();
    let identity: Vec<String> = c.cocycle_violations(VIOLATION_LIMIT).iter().map(|t| triple(g, t)).collect();
    let mut text = String::new();
    let _ = writeln!(text, "group: {g}");
    let _ = writeln!(text, "normalization: {}", pass(normalization.is_empty()));
    for t in normalization.iter().take(8) {
        let _ = writeln!(text, "  Phi{t} != 1");
    }
    let _ = writeln!(text, "3-cocycle identity: {}", pass(identity.is_empty()));
    for t in identity.iter().take(8) {
        let _ = writeln!(text, "  fails at {t}");
    }
    let mut ok = normalization.is_empty() && identity.is_empty();
    let mut modules = Vec::new();
    for m in &a.modules {
        let report = validate(m);
        let violations: Vec<String> = report.violations.iter().map(|v| module_violation(g, v)).collect();
        let two: Vec<String> = derive_two_cocycle(c, m.degree()).violations().iter().map(|t| triple(g, t)).collect();
        let simple = m.is_simple();
        let passed = violations.is_empty() && two.is_empty() && simple;
        ok &= passed;
        let _ = writeln!(
            text,
            "module {} (degree {}, dim {}): {}{}",
            m.name(),
            g.format(m.degree()),
            m.dim(),
            pass(passed),
            if simple { "" } else { ", not simple" }
        );
        for v in violations.iter().take(8) {
            let _ = writeln!(text, "  {v}");
        }
        for t in two.iter().take(8) {
            let _ = writeln!(text, "  2-cocycle identity fails at {t}");
        }
        modules.push(json!({
            "name": m.name(),
            "degree": g.format(m.degree()),
            "dim": m.dim(),
            "simple": simple,
            "violations": violations,
            "two_cocycle_violations": two,
            "passed": passed,
        }));
    }
    let names: Vec<&str> = a.tuple.iter().map(|&k| a.modules[k].name()).collect();
    let tuple_error = a.tuple().err().map(|e| e.to_string());
    ok &= tuple_error.is_none();
    let _ = writeln!(text, "tuple ({}): {}", names.join(","), tuple_error.as_deref().unwrap_or("ok"));
    let _ = writeln!(text, "validation: {}", pass(ok));
    let report = json!({
        "group": g.factors(),
        "cocycle": {
            "order": c.order(),
            "normalization_violations": normalization,
            "cocycle_violations": identity,
        },
        "modules": modules,
        "tuple": names,
        "tuple_error": tuple_error,
        "passed": ok,
    });
    (Status::of(ok), text, report, None)
}

fn tuple_cartan(config: &Config) -> Result<(Vec<String>, CartanMatrix)> {
    match &config.body {
        ConfigBody::Algebra(a) => {
            let t = a.tuple()?;
            Ok((t.names(), cartan_of(&t, config.caps.nichols())?))
        }
        ConfigBody::Abstract(g) => Ok((vec![g.label(0).to_string()], g.matrix(0).clone())),
    }
}

fn do_cartan(config: &Config) -> Result<Raw> {
    let (names, a) = tuple_cartan(config)?;
    let report = json!({ "tuple": names, "cartan": a });
    Ok((Status::Ok, format!("{a}\n"), report, None))
}

/// The Cartan graph of the config: explored from the tuple, or given.
pub fn build_graph(config: &Config) -> Result<CartanGraph> {
    match &config.body {
        ConfigBody::Algebra(a) => {
            let catalog = Catalog::seeded(a.modules.iter().cloned())?;
            explore(&a.tuple()?, &catalog, config.caps.nichols(), config.caps.max_objects)
        }
        ConfigBody::Abstract(g) => Ok(g.clone()),
    }
}

fn objects_json(g: &CartanGraph) -> Vec<Value> {
    (0..g.object_count())
        .map(|x| {
            json!({
                "id": x,
                "label": g.label(x),
                "cartan": g.matrix(x),
                "r": (0..g.rank()).map(|i| g.reflect(x, i)).collect::<Vec<_>>(),
                "word": word_str(g.word(x)),
            })
        })
        .collect()
}

fn do_graph(config: &Config, opts: &Options) -> Result<Raw> {
    let g = build_graph(config)?;
    let bound = opts.word_bound.unwrap_or(config.caps.word_bound);
    let violations: Vec<String> = g.violations().iter().map(graph_violation).collect();
    let conn = connectivity(&g, bound);
    let ok = g.is_closed() && violations.is_empty();
    let mut text = String::new();
    let _ = writeln!(text, "objects: {}", g.object_count());
    for x in 0..g.object_count() {
        let _ = writeln!(text, "  {x}: {} via {}", g.label(x), word_str(g.word(x)));
    }
    let _ = writeln!(text, "closed: {}", g.is_closed());
    let _ = writeln!(text, "standard: {}", is_standard(&g));
    let _ = writeln!(text, "CG1/CG2: {}", pass(violations.is_empty()));
    for v in &violations {
        let _ = writeln!(text, "  {v}");
    }
    let _ = writeln!(text, "connected: {}", conn.connected);
    match &conn.witness {
        None => {
            let _ = writeln!(text, "simply connected within L={bound}: true");
        }
        Some(w) => {
            let _ = writeln!(
                text,
                "simply connected within L={bound}: false ({} and {} from {} to {} differ)",
                word_str(&w.first),
                word_str(&w.second),
                w.source,
                w.target
            );
        }
    }
    let report = json!({
        "rank": g.rank(),
        "objects": objects_json(&g),
        "closed": g.is_closed(),
        "standard": is_standard(&g),
        "graph_violations": violations,
        "connectivity": conn,
    });
    Ok((Status::of(ok), text, report, Some(g.to_dot())))
}

fn do_roots(config: &Config, opts: &Options) -> Result<Raw> {
    let g = build_graph(config)?;
    let bound = opts.word_bound.unwrap_or(config.caps.word_bound);
    let axioms = cartan_axioms(&g, bound);
    let mut text = String::new();
    let _ = writeln!(text, "word bound: {bound}");
    let mut objects = Vec::new();
    for x in 0..g.object_count() {
        let roots = real_roots(&g, x, bound);
        let positive = roots.roots.iter().filter(|v| v.iter().all(|&c| c >= 0)).count();
        let _ = writeln!(text, "  {}: {} roots ({} positive)", g.label(x), roots.len(), positive);
        objects.push(json!({ "id": x, "label": g.label(x), "roots": roots.roots }));
    }
    let mut ms: Vec<String> = axioms
        .rank2
        .iter()
        .map(|r| r.finite().map_or_else(|| "infinite".to_string(), |m| m.to_string()))
        .collect();
    ms.sort();
    ms.dedup();
    let _ = writeln!(text, "m_ij values: {}", ms.join(", "));
    let _ = writeln!(text, "rank-2 counts consistent: {}", pass(axioms.rank2_consistent()));
    let _ = writeln!(text, "CG3: {}", pass(axioms.cg3.is_empty()));
    let _ = writeln!(text, "CG4: {}", pass(axioms.cg4.is_empty()));
    let _ = writeln!(text, "simple roots: {}", pass(axioms.simple_roots.is_empty()));
    let _ = writeln!(text, "reflection closure: {}", pass(axioms.reflection_closure.is_empty()));
    let _ = writeln!(text, "reduced: {}", pass(axioms.non_reduced.is_empty()));
    let _ = writeln!(text, "axioms: {}", pass(axioms.passed()));
    let ok = axioms.passed();
    let report = json!({ "bound": bound, "objects": objects, "axioms": axioms });
    Ok((Status::of(ok), text, report, Some(g.to_dot())))
}

fn vec_str(v: &[i64]) -> String {
    format!("({})", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
}

fn do_titscone(config: &Config, opts: &Options) -> Result<Raw> {
    let g = build_graph(config)?;
    let bound = opts.word_bound.unwrap_or(config.caps.word_bound);
    let (cone, chambers) = classify_cone(&g, 0, bound)?;
    let mut ok = cone.consistent;
    let mut summary = cone.classification.to_string();
    let mut tiling = None;
    match (&cone.classification, &cone.null_vector) {
        (ConeType::Affine, Some(v)) => {
            let t = alcove_tiling_check(&g, 0, &chambers, v, bound, config.caps.grid())?;
            let violations = t.double_interior.len() + t.uncovered_inside.len() + t.covered_beyond.len();
            let half = cone.half_space_verified();
            ok &= half && t.passed() && cone.sum_invariant == Some(true);
            let _ = write!(
                summary,
                ", v={}, half-space {}, tiling check: {violations} violations",
                vec_str(v),
                if half { "verified" } else { "FAILED" }
            );
            tiling = Some(t);
        }
        _ => {
            let _ = write!(summary, ", chambers: {}, hyperplanes: {}", cone.chambers, cone.hyperplanes);
        }
    }
    if !cone.consistent {
        summary.push_str(", inconsistent with root closure");
    }
    let mut text = format!("{summary}\n");
    let _ = writeln!(text, "word bound: {bound}, chambers: {}", cone.chambers);
    if let Some(t) = &tiling {
        let _ = writeln!(
            text,
            "grid [-{s},{s}]^{dim} at 1/{d}: {} points, {} covered, {} on walls, {} in the outer ring",
            t.points,
            t.covered,
            t.boundary,
            t.uncovered_ring,
            s = t.grid.side,
            d = t.grid.denominator,
            dim = g.rank() - 1
        );
    }
    let report = json!({ "cone": cone, "tiling": tiling });
    Ok((Status::of(ok), text, report, None))
}

fn do_hilbert(config: &Config, opts: &Options) -> Result<Raw> {
    let a = config
        .algebra()
        .ok_or_else(|| Error::Unsupported("hilbert needs modules; the config is an abstract graph".into()))?;
    let m = match &opts.module {
        Some(name) => a.module(name).ok_or_else(|| Error::Parse(format!("--module: unknown module {name:?}")))?,
        None => &a.modules[a.tuple[0]],
    };
    let max_deg = opts.max_deg.unwrap_or(config.caps.max_degree);
    let dims = nichols_dims(&[m.as_ref()], max_deg, config.caps.nichols())?;
    let ranks = (1..=max_deg).map(|n| pairing_gram(m, n).map(|p| p.rank())).collect::<Result<Vec<_>>>()?;
    let ok = dims[1..] == ranks[..];
    let list = |xs: &[usize]| xs.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
    let text = format!(
        "B({}) graded dimensions: {}\npairing ranks (n >= 1): {} ({})\n",
        m.name(),
        list(&dims),
        list(&ranks),
        if ok { "consistent" } else { "MISMATCH" }
    );
    let report = json!({ "module": m.name(), "max_degree": max_deg, "dims": dims, "pairing_ranks": ranks, "consistent": ok });
    Ok((Status::of(ok), text, report, None))
}
