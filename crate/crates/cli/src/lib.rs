//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the process exit status.

pub mod args;

use std::ffi::OsString;
use std::fmt::{self, Write as _};
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use clap::Parser;
use serde_json::{json, Value};

use args::*;
use exclusivity_core::graph::{
    complement, complete, cycle, induced_cycles, is_isomorphic, is_self_complementary,
    is_vertex_transitive, make_circulant, or_power, or_product, strong_power, strong_product,
};
use exclusivity_core::invariants::{
    bound_triple_of_graph, clique_number, enumerate_scvt_circulants, fractional_packing,
    ge_copy_bound, independence_number, shannon_bounds, theta, uniqueness_probe, Uniqueness,
};
use exclusivity_core::rational;
use exclusivity_core::scenario::{
    assignment_value, check_e, chsh_scenario, kcbs_scenario, parse_assignment, parse_scenario,
    pr_box_assignment, product_assignment, product_scenario, Admissibility, ProbabilityAssignment,
    Scenario, Weight,
};
use exclusivity_core::solvers::{Budget, CliqueResult, SearchStatus};
use exclusivity_core::verify::{self, round_sig, CheckResult, ExpectedTriple, Verdict, SCHEMA};
use exclusivity_core::{Config, Error, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Input(_) | Error::Precondition(_) => EXIT_INPUT,
            _ => EXIT_RESOURCE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

enum Body {
    Graph(Graph),
    Scenario(Scenario),
    Assignment(ProbabilityAssignment),
    Report(Value),
    Check(CheckResult),
}

struct Outcome {
    body: Body,
    code: i32,
}

impl Outcome {
    fn ok(body: Body) -> Self {
        Self {
            body,
            code: EXIT_OK,
        }
    }
}

/// Run one command; writes the output and returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}

fn execute(cli: &Cli) -> CliResult<i32> {
    let cfg = config(&cli.global)?;
    let outcome = dispatch(&cli.command, &cfg)?;
    let text = render(&outcome.body, cli.global.format)?;
    emit(&text, cli.global.out.as_deref())?;
    Ok(outcome.code)
}

fn config(g: &GlobalArgs) -> CliResult<Config> {
    if !(g.tol > 0.0 && g.tol.is_finite()) {
        return Err(CliError::input("--tol must be positive"));
    }
    if !(g.budget_secs > 0.0 && g.budget_secs.is_finite()) {
        return Err(CliError::input("--budget-secs must be positive"));
    }
    if g.product_cap == 0 || g.iso_cap == 0 {
        return Err(CliError::input("size caps must be positive"));
    }
    Ok(Config {
        tol: g.tol,
        budget: Budget {
            time_limit: Some(Duration::from_secs_f64(g.budget_secs)),
        },
        product_cap: g.product_cap,
        iso_cap: g.iso_cap,
        ..Config::default()
    })
}

fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    let result = match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    result.map_err(|e| CliError::input(format!("cannot write output: {e}")))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: exclusivity_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    with_path(path, Graph::from_json(&read(path)?))
}

fn load_scenario(path: &Path) -> CliResult<Scenario> {
    with_path(path, parse_scenario(&read(path)?))
}

fn load_assignment(path: &Path) -> CliResult<ProbabilityAssignment> {
    with_path(path, parse_assignment(&read(path)?))
}

fn load_input(input: &GraphInput) -> CliResult<Graph> {
    match (&input.graph, &input.scenario) {
        (Some(g), _) => load_graph(g),
        (None, Some(s)) => Ok(load_scenario(s)?.exclusivity_graph()),
        (None, None) => Err(CliError::input("give --graph or --scenario")),
    }
}

fn dispatch(command: &Command, cfg: &Config) -> CliResult<Outcome> {
    match command {
        Command::Graph(GraphCommand::Make(c)) => cmd_make(c),
        Command::Graph(GraphCommand::Op(c)) => cmd_op(c, cfg),
        Command::Graph(GraphCommand::Test(c)) => cmd_test(c, cfg),
        Command::Scenario(c) => cmd_scenario(c, cfg),
        Command::Assignment(c) => cmd_assignment(c),
        Command::Invariant(c) => cmd_invariant(c, cfg),
        Command::Verify(c) => cmd_verify(c, cfg),
        Command::Enumerate(EnumerateCommand::Scvt { n }) => cmd_enumerate(*n, cfg),
    }
}

fn cmd_make(c: &MakeCommand) -> CliResult<Outcome> {
    let g = match c {
        MakeCommand::Circulant { n, steps } => make_circulant(*n, steps)?,
        MakeCommand::Cycle { n } => cycle(*n)?,
        MakeCommand::Complete { n } => complete(*n),
    };
    Ok(Outcome::ok(Body::Graph(g)))
}

fn cmd_op(c: &OpCommand, cfg: &Config) -> CliResult<Outcome> {
    let g = match c {
        OpCommand::Complement(a) => complement(&load_graph(&a.graph)?),
        OpCommand::OrProduct(a) => or_product(
            &load_graph(&a.graph)?,
            &load_graph(&a.other)?,
            cfg.product_cap,
        )?,
        OpCommand::StrongProduct(a) => strong_product(
            &load_graph(&a.graph)?,
            &load_graph(&a.other)?,
            cfg.product_cap,
        )?,
        OpCommand::OrPower(a) => or_power(&load_graph(&a.graph)?, a.n, cfg.product_cap)?,
        OpCommand::StrongPower(a) => strong_power(&load_graph(&a.graph)?, a.n, cfg.product_cap)?,
    };
    Ok(Outcome::ok(Body::Graph(g)))
}

fn graph_json(g: &Graph) -> Value {
    json!({ "order": g.order(), "edges": g.edges() })
}

fn report(kind: &str, g: Option<&Graph>, fields: Value, start: Instant) -> Value {
    let mut out = json!({ "schema": SCHEMA, "command": kind });
    if let Some(g) = g {
        out["graph"] = graph_json(g);
    }
    if let (Value::Object(dst), Value::Object(src)) = (&mut out, fields) {
        dst.extend(src);
    }
    out["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
    out
}

fn cmd_test(c: &TestCommand, cfg: &Config) -> CliResult<Outcome> {
    let start = Instant::now();
    let value = match c {
        TestCommand::Isomorphic(a) => {
            let (g, h) = (load_graph(&a.graph)?, load_graph(&a.other)?);
            let w = is_isomorphic(&g, &h, cfg.iso_cap)?;
            report(
                "isomorphic",
                None,
                json!({ "isomorphic": w.is_some(), "mapping": w.map(|w| w.mapping) }),
                start,
            )
        }
        TestCommand::VertexTransitive(a) => {
            let g = load_graph(&a.graph)?;
            let t = is_vertex_transitive(&g, cfg.iso_cap)?;
            report(
                "vertex-transitive",
                Some(&g),
                json!({ "vertex_transitive": t.vertex_transitive, "orbits": t.orbits }),
                start,
            )
        }
        TestCommand::SelfComplementary(a) => {
            let g = load_graph(&a.graph)?;
            let sc = is_self_complementary(&g, cfg.iso_cap)?;
            report(
                "self-complementary",
                Some(&g),
                json!({ "self_complementary": sc }),
                start,
            )
        }
        TestCommand::Pentagons(a) => {
            let g = load_graph(&a.graph)?;
            let cycles = induced_cycles(&g, 5, cfg.iso_cap)?;
            let labels: Vec<Vec<String>> = cycles
                .iter()
                .map(|c| c.iter().map(|&v| g.label(v)).collect())
                .collect();
            report(
                "pentagons",
                Some(&g),
                json!({ "count": cycles.len(), "pentagons": cycles, "labels": labels }),
                start,
            )
        }
    };
    Ok(Outcome::ok(Body::Report(value)))
}

fn cmd_scenario(c: &ScenarioCommand, cfg: &Config) -> CliResult<Outcome> {
    let body = match c {
        ScenarioCommand::Build { which } => Body::Scenario(match which {
            Builtin::Kcbs => kcbs_scenario(),
            Builtin::Chsh => chsh_scenario(),
        }),
        ScenarioCommand::FromFile { file } => Body::Scenario(load_scenario(file)?),
        ScenarioCommand::Product { scenario, other } => Body::Scenario(product_scenario(
            &load_scenario(scenario)?,
            &load_scenario(other)?,
            cfg.product_cap,
        )?),
        ScenarioCommand::ExclusivityGraph { scenario } => {
            Body::Graph(load_scenario(scenario)?.exclusivity_graph())
        }
    };
    Ok(Outcome::ok(body))
}

fn weight_json(w: &Weight) -> Value {
    match w {
        Weight::Exact(r) => json!(rational::format(r)),
        Weight::Real(x) => json!(round_sig(*x)),
    }
}

fn cmd_assignment(c: &AssignmentCommand) -> CliResult<Outcome> {
    let start = Instant::now();
    match c {
        AssignmentCommand::PrBox => Ok(Outcome::ok(Body::Assignment(pr_box_assignment()))),
        AssignmentCommand::Product { assignment, other } => Ok(Outcome::ok(Body::Assignment(
            product_assignment(&load_assignment(assignment)?, &load_assignment(other)?),
        ))),
        AssignmentCommand::Value { assignment, subset } => {
            let a = load_assignment(assignment)?;
            let v = assignment_value(&a, subset.as_deref())?;
            let value = report(
                "value",
                None,
                json!({ "subset": subset, "value": weight_json(&v), "exact": v.is_exact() }),
                start,
            );
            Ok(Outcome::ok(Body::Report(value)))
        }
        AssignmentCommand::CheckE {
            assignment,
            scenario,
        } => {
            let a = load_assignment(assignment)?;
            let s = load_scenario(scenario)?;
            let g = s.exclusivity_graph();
            let (fields, code) = match check_e(&a, &s)? {
                Admissibility::Admissible { max_clique_sum } => (
                    json!({ "admissible": true, "max_clique_sum": weight_json(&max_clique_sum) }),
                    EXIT_OK,
                ),
                Admissibility::Violated { clique, sum } => {
                    let labels: Vec<String> = clique.iter().map(|&v| g.label(v)).collect();
                    (
                        json!({
                            "admissible": false,
                            "violated_clique": clique,
                            "violated_labels": labels,
                            "sum": weight_json(&sum),
                        }),
                        EXIT_FAILED,
                    )
                }
            };
            Ok(Outcome {
                body: Body::Report(report("check-e", None, fields, start)),
                code,
            })
        }
    }
}

fn status_code(status: SearchStatus) -> i32 {
    match status {
        SearchStatus::ProvenExact => EXIT_OK,
        SearchStatus::LowerBoundOnly => EXIT_RESOURCE,
    }
}

fn clique_fields(name: &str, r: &CliqueResult) -> Value {
    json!({
        "invariant": name,
        "value": r.size,
        "status": r.status,
        "witness": r.witness,
        "nodes": r.nodes,
    })
}

fn rationals(v: &[exclusivity_core::Rational]) -> Vec<String> {
    v.iter().map(rational::format).collect()
}

fn cmd_invariant(c: &InvariantCommand, cfg: &Config) -> CliResult<Outcome> {
    let start = Instant::now();
    let (g, fields, code) = match c {
        InvariantCommand::Alpha(input) => {
            let g = load_input(input)?;
            let r = independence_number(&g, cfg);
            (g, clique_fields("alpha", &r), status_code(r.status))
        }
        InvariantCommand::Omega(input) => {
            let g = load_input(input)?;
            let r = clique_number(&g, cfg);
            (g, clique_fields("omega", &r), status_code(r.status))
        }
        InvariantCommand::Theta(input) => {
            let g = load_input(input)?;
            let t = theta(&g, cfg)?;
            let (edge, value) = t.check_vectors(&g);
            let fields = json!({
                "invariant": "theta",
                "value": round_sig(t.value),
                "dual_value": round_sig(t.dual_value),
                "gap": t.gap,
                "iterations": t.iterations,
                "edge_residual": edge,
                "value_residual": value,
                "psd_matrix": t.psd_matrix,
                "handle_vector": t.handle_vector,
                "unit_vectors": t.unit_vectors,
            });
            (g, fields, EXIT_OK)
        }
        InvariantCommand::Alphastar(input) => {
            let g = load_input(input)?;
            let p = fractional_packing(&g, cfg)?;
            let fields = json!({
                "invariant": "alphastar",
                "value": rational::format(&p.value),
                "weights": rationals(&p.weights),
                "maximal_cliques": p.cliques,
            });
            (g, fields, EXIT_OK)
        }
        InvariantCommand::Triple(input) => {
            let g = load_input(input)?;
            let t = bound_triple_of_graph(&g, cfg)?;
            let fields = json!({
                "invariant": "triple",
                "classical": t.alpha(),
                "quantum": round_sig(t.theta()),
                "exclusivity": rational::format(t.alpha_star()),
                "ordered": t.is_ordered(cfg.tol),
                "classical_status": t.classical.status,
                "independent_set": t.classical.witness,
                "packing_weights": rationals(&t.exclusivity.weights),
                "theta_psd_matrix": t.quantum.psd_matrix,
            });
            (g, fields, status_code(t.classical.status))
        }
        InvariantCommand::CopyBound { input, n } => {
            let g = load_input(input)?;
            let b = ge_copy_bound(&g, *n, cfg)?;
            let fields = json!({
                "invariant": "copy-bound",
                "n": b.n,
                "omega_power": b.omega_power,
                "p_n": round_sig(b.p_n),
                "bound": round_sig(b.bound),
                "status": b.status,
                "witness": b.witness,
            });
            (g, fields, status_code(b.status))
        }
        InvariantCommand::Capacity { input, max_power } => {
            let g = load_input(input)?;
            let cap = shannon_bounds(&g, *max_power, cfg)?;
            let code = cap
                .per_power
                .iter()
                .map(|p| status_code(p.status))
                .max()
                .unwrap_or(EXIT_OK);
            let fields = json!({
                "invariant": "capacity",
                "interval": [round_sig(cap.lower), round_sig(cap.upper)],
                "per_power": cap.per_power,
            });
            (g, fields, code)
        }
        InvariantCommand::Uniqueness(input) => {
            let g = load_input(input)?;
            let fields = match uniqueness_probe(&g, cfg)? {
                Uniqueness::Unique { weights } => json!({
                    "invariant": "uniqueness",
                    "unique": true,
                    "weights": rationals(&weights),
                }),
                Uniqueness::Multiple {
                    vertex,
                    min,
                    max,
                    at_min,
                    at_max,
                } => json!({
                    "invariant": "uniqueness",
                    "unique": false,
                    "vertex": vertex,
                    "range": [rational::format(&min), rational::format(&max)],
                    "optimum_at_min": rationals(&at_min),
                    "optimum_at_max": rationals(&at_max),
                }),
            };
            (g, fields, EXIT_OK)
        }
    };
    Ok(Outcome {
        body: Body::Report(report("invariant", Some(&g), fields, start)),
        code,
    })
}

fn cmd_verify(c: &VerifyCommand, cfg: &Config) -> CliResult<Outcome> {
    let result = match c {
        VerifyCommand::Kcbs { graph: None } => verify::verify_kcbs_triple(cfg)?,
        VerifyCommand::Kcbs { graph: Some(p) } => verify::verify_triple_with(
            "kcbs-triple",
            &load_graph(p)?,
            &ExpectedTriple::kcbs(),
            cfg,
        )?,
        VerifyCommand::Chsh { graph: None } => verify::verify_chsh_triple(cfg)?,
        VerifyCommand::Chsh { graph: Some(p) } => verify::verify_triple_with(
            "chsh-triple",
            &load_graph(p)?,
            &ExpectedTriple::chsh(),
            cfg,
        )?,
        VerifyCommand::Result1 { graph: None } => verify::verify_result1(cfg)?,
        VerifyCommand::Result1 { graph: Some(p) } => {
            verify::verify_result1_with(&load_graph(p)?, cfg)?
        }
        VerifyCommand::Result2 { n, graph: None } => verify::verify_result2(*n, cfg)?,
        VerifyCommand::Result2 { n, graph: Some(p) } => {
            let g = load_graph(p)?;
            if g.order() != *n {
                return Err(CliError::input(format!(
                    "graph has {} vertices, expected {n}",
                    g.order()
                )));
            }
            verify::verify_result2_graph(&p.display().to_string(), &g, cfg)?
        }
        VerifyCommand::Observation1 {
            scenario,
            assignment,
        } => {
            let s = match scenario {
                Some(p) => load_scenario(p)?,
                None => chsh_scenario(),
            };
            let a = match assignment {
                Some(p) => load_assignment(p)?,
                None => pr_box_assignment(),
            };
            verify::verify_observation1_with(&s, &a, cfg)?
        }
        VerifyCommand::Observation2 {
            max_power,
            chsh_graph,
            capacity_graph,
        } => {
            if *max_power == 0 {
                return Err(CliError::input("--max-power must be at least 1"));
            }
            let chsh = match chsh_graph {
                Some(p) => load_graph(p)?,
                None => chsh_scenario().exclusivity_graph(),
            };
            let cap = match capacity_graph {
                Some(p) => load_graph(p)?,
                None => make_circulant(8, &[1, 2])?,
            };
            verify::verify_observation2_with(&chsh, &cap, *max_power, cfg)?
        }
    };
    let code = match result.verdict {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_FAILED,
        Verdict::Inconclusive => EXIT_RESOURCE,
    };
    Ok(Outcome {
        body: Body::Check(result),
        code,
    })
}

fn cmd_enumerate(n: usize, cfg: &Config) -> CliResult<Outcome> {
    let start = Instant::now();
    let classes = enumerate_scvt_circulants(n, cfg)?;
    let value = report(
        "enumerate-scvt",
        None,
        json!({ "n": n, "classes": classes }),
        start,
    );
    Ok(Outcome::ok(Body::Report(value)))
}

fn render(body: &Body, format: Format) -> CliResult<String> {
    let no_dot = || CliError::input("--format dot applies only to graphs and scenarios");
    let mut text = match (body, format) {
        (Body::Graph(g), Format::Json) => g.to_json(),
        (Body::Graph(g), Format::Dot) => g.to_dot(),
        (Body::Graph(g), Format::Text) => graph_text(g),
        (Body::Scenario(s), Format::Json) => s.to_json(),
        (Body::Scenario(s), Format::Dot) => s.exclusivity_graph().to_dot(),
        (Body::Scenario(s), Format::Text) => scenario_text(s),
        (Body::Assignment(a), Format::Json) => a.to_json(),
        (Body::Assignment(a), Format::Text) => {
            a.weights().iter().map(|w| format!("{w}\n")).collect()
        }
        (Body::Report(v), Format::Json) => serde_json::to_string_pretty(v).expect("json value"),
        (Body::Report(v), Format::Text) => value_text(v),
        (Body::Check(c), Format::Json) => c.to_json(),
        (Body::Check(c), Format::Text) => c.to_text(),
        (Body::Assignment(_) | Body::Report(_) | Body::Check(_), Format::Dot) => {
            return Err(no_dot())
        }
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(text)
}

fn graph_text(g: &Graph) -> String {
    let mut out = format!("order {} edges {}\n", g.order(), g.edge_count());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{} -- {}", g.label(i), g.label(j));
    }
    out
}

fn scenario_text(s: &Scenario) -> String {
    let mut out = format!("{} ({} events)\n", s.name(), s.len());
    for e in s.events() {
        let tests: Vec<String> = e
            .assignments()
            .iter()
            .map(|(t, o)| format!("{}:{}={o}", t.copy, t.test))
            .collect();
        let _ = writeln!(out, "{}  {}", e.label(), tests.join(" "));
    }
    out
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect(),
        other => format!("{other}\n"),
    }
}
