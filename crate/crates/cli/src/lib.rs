//! Command dispatch for the `summand-lab` binary. Every command produces a
//! [`CommandResult`] that is printed as JSON on stdout.

pub mod mapfile;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use summand_lab::catalog::{
    build_named_example, quadric_rank, quintic_grading_report, verify_weyl_relation, ExampleObject, NamedExample,
};
use summand_lab::graded::veronese_presentation;
use summand_lab::groebner::{Ideal, MonomialOrder};
use summand_lab::poly::{PolyRing, Polynomial};
use summand_lab::ringmap::{check_well_defined, is_injective, kernel, RingMap, WellDefinedness};
use summand_lab::splitting::{default_degree_bound, verify_splitting, SplittingOptions, SplittingRegistry, Verdict};
use summand_lab::surface::{cubic_verdict, projective_singular_points};
use summand_lab::torus::{invariant_monomials, monoid_minimal_generators, TorusAction, DEFAULT_INVARIANT_BOUND};
use summand_lab::Error;

#[derive(Parser, Debug)]
#[command(name = "summand-lab", version, about = "Exact certificates for direct-summand questions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis of an ideal.
    Groebner {
        /// Comma-separated variable names.
        #[arg(long)]
        ring: String,
        /// Generators, separated by `;` (may be repeated).
        #[arg(long, required = true)]
        ideal: Vec<String>,
        /// degrevlex, lex, elim:<k> (block order eliminating the first k
        /// variables), or weight:<w1,w2,..> (refined by degrevlex).
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Kernel of a ring map.
    Kernel {
        /// Map spec file, or `example:<key>(params)`.
        #[arg(long)]
        map: String,
    },
    /// Checks the splitting identities of a strategy up to a degree bound.
    VerifySplitting {
        #[arg(long)]
        map: String,
        #[arg(long, default_value = "semigroup")]
        splitting: String,
        #[arg(long)]
        bound: Option<u32>,
        /// Torus weights as a JSON matrix; overrides the map file's action.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Invariant monomials and minimal generators of a diagonal torus action.
    Invariants {
        /// JSON integer matrix, one row per character, one column per variable.
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = DEFAULT_INVARIANT_BOUND)]
        bound: u32,
        /// Variable names; defaults to x0, x1, ...
        #[arg(long)]
        vars: Option<String>,
    },
    /// Singularities and direct-summand verdict for a cubic surface.
    AnalyzeCubic {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "x,y,z,w")]
        vars: String,
    },
    /// Materializes a catalog entry.
    Example {
        key: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
    },
    /// Presentation of a Veronese subring.
    Veronese {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        degree: u32,
        /// Comma-separated positive variable weights; all 1 by default.
        #[arg(long)]
        weights: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Groebner { .. } => "groebner",
            Command::Kernel { .. } => "kernel",
            Command::VerifySplitting { .. } => "verify-splitting",
            Command::Invariants { .. } => "invariants",
            Command::AnalyzeCubic { .. } => "analyze-cubic",
            Command::Example { .. } => "example",
            Command::Veronese { .. } => "veronese",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Refuted,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Refuted => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

impl CommandResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        match (&self.status, &self.error) {
            (_, Some(e)) => format!("{}: error [{}] {}", self.command, e.code, e.message),
            (s, None) => {
                let detail = self.payload.get("summary").and_then(Value::as_str).unwrap_or("");
                format!("{}: {} {}", self.command, serde_json::to_value(s).unwrap().as_str().unwrap(), detail)
            }
        }
    }
}

fn failure(command: &str, code: &str, message: String, payload: Value) -> CommandResult {
    CommandResult {
        command: command.into(),
        status: Status::Error,
        payload,
        error: Some(ErrorInfo { code: code.into(), message }),
    }
}

/// Parses `argv` (including the program name) and runs the command. Help and
/// version requests come back as `Err` for the caller to print.
pub fn dispatch<I, T>(argv: I) -> Result<CommandResult, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                return Err(e);
            }
            return Ok(failure("summand-lab", "usage", e.to_string().trim().to_string(), Value::Null));
        }
    };
    Ok(run(&cli.command))
}

pub fn run(command: &Command) -> CommandResult {
    let name = command.name();
    match execute(command) {
        Ok((status, payload)) => CommandResult { command: name.into(), status, payload, error: None },
        Err(Failure { error, code, payload }) => failure(name, code.unwrap_or(error.code()), error.to_string(), payload),
    }
}

struct Failure {
    error: Box<Error>,
    code: Option<&'static str>,
    payload: Value,
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { error: Box::new(e.into()), code: None, payload: Value::Null }
    }
}

type Outcome = Result<(Status, Value), Failure>;

fn execute(command: &Command) -> Outcome {
    match command {
        Command::Groebner { ring, ideal, order } => groebner_cmd(ring, ideal, order),
        Command::Kernel { map } => kernel_cmd(map),
        Command::VerifySplitting { map, splitting, bound, weights } => verify_cmd(map, splitting, *bound, weights.as_deref()),
        Command::Invariants { weights, bound, vars } => invariants_cmd(weights, *bound, vars.as_deref()),
        Command::AnalyzeCubic { poly, vars } => cubic_cmd(poly, vars),
        Command::Example { key, params } => example_cmd(key, params),
        Command::Veronese { vars, degree, weights } => veronese_cmd(*vars, *degree, weights.as_deref()),
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn parse_order(text: &str, arity: usize) -> Result<MonomialOrder, Error> {
    let t = text.trim();
    match t {
        "degrevlex" | "grevlex" => return Ok(MonomialOrder::DegRevLex),
        "lex" => return Ok(MonomialOrder::Lex),
        _ => {}
    }
    if let Some(k) = t.strip_prefix("elim:") {
        let first_block = k.trim().parse().map_err(|_| Error::Input(format!("bad block size {k:?}")))?;
        return Ok(MonomialOrder::BlockElimination { first_block });
    }
    if let Some(w) = t.strip_prefix("weight:") {
        let weights: Vec<i64> = w
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| Error::Input(format!("bad weight {x:?}"))))
            .collect::<Result<_, _>>()?;
        if weights.len() != arity {
            return Err(Error::Input(format!("{} weights for {arity} variables", weights.len())));
        }
        return Ok(MonomialOrder::WeightRefined { weights, tiebreak: Box::new(MonomialOrder::DegRevLex) });
    }
    Err(Error::Input(format!("unknown order {t:?}; use degrevlex, lex, elim:<k>, or weight:<w,..>")))
}

fn groebner_cmd(ring: &str, ideal: &[String], order: &str) -> Outcome {
    let ring = PolyRing::parse_list(ring)?;
    let gens: Vec<&str> = ideal.iter().flat_map(|s| s.split(';')).map(str::trim).filter(|s| !s.is_empty()).collect();
    let ideal = Ideal::parse(&ring, &gens)?;
    let order = parse_order(order, ring.arity())?;
    let gb = ideal.groebner(&order)?;
    let payload = json!({
        "ring": ring.variables(),
        "order": order.name(),
        "generators": strings(ideal.generators()),
        "basis": strings(gb.basis()),
        "spairs_reduced": gb.spairs_reduced(),
        "is_unit": gb.is_unit(),
        "summary": format!("{} basis elements", gb.basis().len()),
    });
    Ok((Status::Ok, payload))
}

fn map_json(map: &RingMap) -> Value {
    json!({
        "source": map.source().ambient().variables(),
        "source_ideal": strings(map.source().ideal().generators()),
        "target": map.target().ambient().variables(),
        "target_ideal": strings(map.target().ideal().generators()),
        "images": strings(map.images()),
    })
}

fn kernel_cmd(map: &str) -> Outcome {
    let spec = mapfile::load_map(map)?;
    let k = kernel(&spec.map)?;
    let injective = is_injective(&spec.map)?;
    let payload = json!({
        "map": map_json(&spec.map),
        "kernel": strings(k.generators()),
        "injective": injective,
        "summary": format!("kernel has {} generators", k.generators().len()),
    });
    Ok((Status::Ok, payload))
}

fn verify_cmd(map: &str, kind: &str, bound: Option<u32>, weights: Option<&str>) -> Outcome {
    let spec = mapfile::load_map(map)?;
    let bound = bound.unwrap_or_else(default_degree_bound);
    let target_arity = spec.map.target().ambient().arity();
    let action = match weights {
        Some(w) => Some(mapfile::parse_weights(w, target_arity)?),
        None => spec.action.clone(),
    };
    if let WellDefinedness::Counterexample { witness } = check_well_defined(&spec.map)? {
        let payload = json!({
            "map": map_json(&spec.map),
            "witness": witness,
            "summary": format!("map is not well defined: {} -> {}", witness.generator, witness.normal_form),
        });
        return Ok((Status::Refuted, payload));
    }
    let registry = SplittingRegistry::builtin();
    let options = SplittingOptions { degree_bound: bound, action };
    let strategy = registry.build(kind, &spec.map, &options)?;
    let report = verify_splitting(&spec.map, strategy.as_ref(), bound)?;
    let witness = report
        .violations
        .first()
        .map(|v| json!({ "variable": v.variable, "monomial": v.monomial.to_string(), "lhs": v.lhs.to_string(), "rhs": v.rhs.to_string() }))
        .or_else(|| (!report.sigma_of_one.is_one()).then(|| json!({ "sigma_of_one": report.sigma_of_one.to_string() })));
    let mut payload = json!({
        "map": map_json(&spec.map),
        "strategy": kind,
        "description": registry.description(kind),
        "report": report,
        "summary": format!("{} checks to degree {bound} with {}", report.checks, report.kind),
    });
    if let Some(w) = witness {
        payload["witness"] = w;
    }
    match report.verdict {
        Verdict::VerifiedToBound => Ok((Status::Ok, payload)),
        Verdict::Refuted => Ok((Status::Refuted, payload)),
        Verdict::Incomplete => Err(Failure {
            error: Box::new(Error::Input(format!(
                "{} of the spanning elements could not be evaluated; no violation found",
                report.evaluation_failures.len()
            ))),
            code: Some("incomplete_verification"),
            payload,
        }),
    }
}

fn ring_for(vars: Option<&str>, arity: usize) -> Result<PolyRing, Error> {
    let ring = match vars {
        Some(v) => PolyRing::parse_list(v)?,
        None => PolyRing::indexed("x", 0, arity),
    };
    if ring.arity() != arity {
        return Err(Error::Input(format!("{} variable names for {arity} weight columns", ring.arity())));
    }
    Ok(ring)
}

fn invariants_cmd(weights: &str, bound: u32, vars: Option<&str>) -> Outcome {
    let rows: Vec<Vec<i64>> = serde_json::from_str(weights)
        .map_err(|e| Error::Input(format!("weights must be a JSON integer matrix: {e}")))?;
    let arity = rows.first().map(Vec::len).unwrap_or(0);
    let ring = ring_for(vars, arity)?;
    let action = TorusAction::new(rows, arity)?;
    let inv = invariant_monomials(&action, bound);
    let gens = monoid_minimal_generators(&action, bound);
    let payload = json!({
        "variables": ring.variables(),
        "weights": action.grading().weights(),
        "degree_bound": bound,
        "monomials": inv.monomials.iter().map(|m| m.render(&ring)).collect::<Vec<_>>(),
        "minimal_generators": gens.generators.iter().map(|m| m.render(&ring)).collect::<Vec<_>>(),
        "complete_to_bound": gens.complete_to_bound,
        "complete": gens.complete,
        "summary": format!("invariant monomials: {}, generators: {}, degree bound {bound}", inv.len(), gens.generators.len()),
    });
    Ok((Status::Ok, payload))
}

fn cubic_cmd(poly: &str, vars: &str) -> Outcome {
    let ring = PolyRing::parse_list(vars)?;
    let f = ring.parse(poly)?;
    let verdict = cubic_verdict(&f)?;
    let summary = format!("{} ({}, Milnor sum {})", serde_json::to_value(verdict.verdict).unwrap().as_str().unwrap(), verdict.label, verdict.mu_sum);
    let mut payload = serde_json::to_value(&verdict).expect("serializable");
    payload["polynomial"] = json!(f.to_string());
    payload["summary"] = json!(summary);
    Ok((Status::Ok, payload))
}

fn example_json(ex: &NamedExample) -> Result<Value, Error> {
    let mut v = json!({ "key": ex.key, "params": ex.params, "description": ex.description });
    match &ex.object {
        ExampleObject::Ring { ring, expected_configuration } => {
            v["ring"] = json!(ring.ambient().variables());
            v["ideal"] = json!(strings(ring.ideal().generators()));
            if let Some(c) = expected_configuration {
                v["expected_configuration"] = json!(c);
            }
        }
        ExampleObject::Map(m) => {
            v["map"] = map_json(m);
            v["well_defined"] = serde_json::to_value(check_well_defined(m)?).expect("serializable");
        }
        ExampleObject::Weyl(w) => {
            v["map"] = map_json(&w.map);
            v["minors"] = json!(strings(&w.minors));
            v["products"] = json!(strings(&w.products));
            v["well_defined"] = serde_json::to_value(check_well_defined(&w.map)?).expect("serializable");
            v["relation"] = serde_json::to_value(verify_weyl_relation(w.c)?).expect("serializable");
            let n = w.map.source().ambient().arity();
            let last = w.map.source().ambient().var(n - 2);
            let diff = &last - &w.map.source().ambient().var(n - 1);
            let image = w.map.apply(&diff)?;
            v["last_pair_difference"] = json!({
                "element": diff.to_string(),
                "image": image.to_string(),
                "quadratic_rank": quadric_rank(&image)?,
            });
        }
        ExampleObject::QuinticCox(q) => {
            v["variables"] = json!(q.ring.variables());
            let rows: Vec<Vec<String>> =
                (0..5).map(|i| (i + 1..5).map(|j| q.matrix.entry(i, j).to_string()).collect()).collect();
            v["matrix_upper_rows"] = json!(rows);
            v["naive_grading"] = json!(q.naive_grading.weights());
            v["anticanonical_class"] = json!(q.anticanonical_class.entries());
            v["anticanonical_elements"] = json!(strings(&q.anticanonical_elements));
            v["section_variable_weight"] = json!(q.extended_action.grading().column(10));
            v["grading_report"] = serde_json::to_value(quintic_grading_report(q)?).expect("serializable");
        }
        ExampleObject::Surface { form, expected_configuration } => {
            v["form"] = json!(form.to_string());
            v["expected_configuration"] = json!(expected_configuration);
            v["singular_points"] = serde_json::to_value(projective_singular_points(form)?).expect("serializable");
            v["verdict"] = serde_json::to_value(cubic_verdict(form)?).expect("serializable");
        }
    }
    v["summary"] = json!(ex.description);
    Ok(v)
}

fn example_cmd(key: &str, params: &[i64]) -> Outcome {
    let ex = build_named_example(key, params)?;
    Ok((Status::Ok, example_json(&ex)?))
}

fn veronese_cmd(vars: usize, degree: u32, weights: Option<&str>) -> Outcome {
    let weights: Vec<i64> = match weights {
        Some(w) => w
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| Error::Input(format!("bad weight {x:?}"))))
            .collect::<Result<_, _>>()?,
        None => vec![1; vars],
    };
    let (presented, map) = veronese_presentation(vars, &weights, degree)?;
    let gens: Vec<Value> = presented
        .ambient()
        .variables()
        .iter()
        .zip(map.images())
        .map(|(x, im)| json!({ "generator": x, "image": im.to_string() }))
        .collect();
    let payload = json!({
        "variables": map.target().ambient().variables(),
        "weights": weights,
        "degree": degree,
        "generators": gens,
        "relations": strings(presented.ideal().generators()),
        "summary": format!("{} generators, {} relations", gens.len(), presented.ideal().generators().len()),
    });
    Ok((Status::Ok, payload))
}
