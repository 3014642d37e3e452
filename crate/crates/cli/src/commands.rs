use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::Value;

use unref_core::enumeration::{
    self, check_mirror_properties, verify_maximal_subset_proposition, verify_prime_identity, CountsRecord, Family,
    FamilyQuery, Limits,
};
use unref_core::partition::validate;
use unref_core::refinability::{
    brute_force_refinement, build_forbidden_vector, build_forbidden_vector_traced, check_unrefinable_fast,
    extension_lattice, ForbiddenVector, LatticeEdge, RefinementWitness, StepTrace,
};
use unref_core::semigroup::{apery_vs_forbidden, NumericalSemigroup, NumericalSet, Symmetry};
use unref_core::young::{diagram_from_set, hook_grid, render_annotated, semigroup_by_hooks, unrefinable_by_hooks, RenderMode};
use unref_core::{DistinctPartition, Error};

use crate::{CensusArgs, CheckArgs, Criterion, EnumArgs, LatticeArgs, SemigroupArgs, SemigroupQuery, VerifyCommand, YoungArgs};

pub struct Outcome {
    pub result: Value,
    pub diagnostics: Vec<String>,
    /// Replaces the envelope (DOT and ASCII output).
    pub text: Option<String>,
    pub code: u8,
}

impl Outcome {
    fn json(result: impl Serialize, diagnostics: Vec<String>) -> Result<Self, Failure> {
        let result = serde_json::to_value(result).map_err(|e| Failure { message: e.to_string(), code: 3 })?;
        Ok(Self { result, diagnostics, text: None, code: 0 })
    }

    fn with_code(mut self, code: u8) -> Self {
        self.code = code;
        self
    }
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { message: e.to_string(), code: 2 }
    }
}

type Run = Result<Outcome, Failure>;

#[derive(Serialize)]
struct CheckResult {
    partition: Vec<u32>,
    weight: u64,
    mex: u32,
    missing: Vec<u32>,
    mode: &'static str,
    unrefinable: bool,
    fast_unrefinable: Option<bool>,
    oracle_unrefinable: Option<bool>,
    agree: Option<bool>,
    witness: Option<RefinementWitness>,
    forbidden_vector: Option<ForbiddenVector>,
    /// Parts at or above the entry of their residue class.
    blocked_parts: Option<Vec<u32>>,
    trace: Option<Vec<StepTrace>>,
}

pub fn check(a: &CheckArgs) -> Run {
    let p = validate(&a.parts)?;
    let missing = p.missing_parts();
    let (run_fast, run_oracle, mode) = match (a.fast, a.oracle) {
        (true, _) => (true, false, "fast"),
        (_, true) => (false, true, "oracle"),
        _ => (true, true, "both"),
    };
    let mut diagnostics = Vec::new();

    let fast = run_fast.then(|| check_unrefinable_fast(&p)).transpose()?;
    let witness = if run_oracle { brute_force_refinement(&p)? } else { None };
    let oracle = run_oracle.then_some(witness.is_none());

    let (vector, trace) = if run_fast && !missing.is_empty() {
        if a.trace {
            let (v, t) = build_forbidden_vector_traced(&missing)?;
            (Some(v), Some(t))
        } else {
            (Some(build_forbidden_vector(&missing)?), None)
        }
    } else {
        if run_fast {
            diagnostics.push("no missing parts: every part is admissible".to_string());
        }
        (None, None)
    };
    let blocked_parts = vector.as_ref().map(|v| p.parts().iter().copied().filter(|&x| !v.admits(x)).collect());

    let agree = match (fast, oracle) {
        (Some(f), Some(o)) => Some(f == o),
        _ => None,
    };
    let unrefinable = oracle.or(fast).expect("at least one check ran");
    let mut code = 0;
    if agree == Some(false) {
        diagnostics.push(format!("DISAGREEMENT: fast={} oracle={}", fast.unwrap(), oracle.unwrap()));
        eprintln!("error: the forbidden-vector check and the brute-force oracle disagree on {p}");
        code = 3;
    } else if a.assert_unrefinable && !unrefinable {
        diagnostics.push("assertion failed: partition is refinable".to_string());
        code = 1;
    }
    let result = CheckResult {
        partition: p.parts().to_vec(),
        weight: p.weight(),
        mex: p.mex(),
        missing: missing.values().to_vec(),
        mode,
        unrefinable,
        fast_unrefinable: fast,
        oracle_unrefinable: oracle,
        agree,
        witness,
        forbidden_vector: vector,
        blocked_parts,
        trace,
    };
    Ok(Outcome::json(result, diagnostics)?.with_code(code))
}

#[derive(Serialize)]
struct SemigroupInfo {
    display: String,
    gaps: Vec<u32>,
    generators_input: Option<Vec<u32>>,
    frobenius: Option<u32>,
    genus: usize,
    multiplicity: u32,
    semigroup: bool,
    /// First sum of two elements that lands on a gap, for non-semigroups.
    closure_violation: Option<(u32, u32, u32)>,
    symmetry: Option<Symmetry>,
}

fn not_semigroup(set: &NumericalSet) -> Failure {
    let (a, b, s) = set.closure_violation().unwrap_or_default();
    Error::NotSemigroup { left: a, right: b, sum: s }.into()
}

pub fn semigroup(a: &SemigroupArgs) -> Run {
    let (set, generators_input) = match (&a.gaps, &a.generators) {
        (Some(g), _) => (NumericalSet::from_signed_gaps(g)?, None),
        (None, Some(gens)) => {
            let s = NumericalSemigroup::from_signed_generators(gens)?;
            let input = gens.iter().map(|&x| x as u32).collect();
            (s.as_set().clone(), Some(input))
        }
        (None, None) => unreachable!("clap requires one of --gaps, --generators"),
    };
    let semigroup = NumericalSemigroup::try_from(set.clone()).ok();
    match a.query.unwrap_or(SemigroupQuery::Info) {
        SemigroupQuery::Info => {
            let info = SemigroupInfo {
                display: set.to_string(),
                gaps: set.gaps().to_vec(),
                generators_input,
                frobenius: set.frobenius().ok(),
                genus: set.genus(),
                multiplicity: set.multiplicity(),
                semigroup: semigroup.is_some(),
                closure_violation: set.closure_violation(),
                symmetry: semigroup.as_ref().map(|s| s.symmetry()),
            };
            Outcome::json(info, Vec::new())
        }
        SemigroupQuery::Apery { n } => {
            let s = semigroup.ok_or_else(|| not_semigroup(&set))?;
            let ap = s.apery_set(n)?;
            let mut diagnostics = Vec::new();
            if !ap.modulus_in_semigroup {
                diagnostics.push(format!("{n} is not an element of the semigroup"));
            }
            Outcome::json(ap, diagnostics)
        }
        SemigroupQuery::Msg => {
            let s = semigroup.ok_or_else(|| not_semigroup(&set))?;
            let msg = s.minimal_generators();
            #[derive(Serialize)]
            struct Msg<'a> {
                generators: &'a [u32],
                embedding_dimension: usize,
            }
            Outcome::json(Msg { generators: msg.generators(), embedding_dimension: msg.embedding_dimension() }, Vec::new())
        }
        SemigroupQuery::Compare => {
            let s = semigroup.ok_or_else(|| not_semigroup(&set))?;
            Outcome::json(apery_vs_forbidden(&s)?, Vec::new())
        }
    }
}

#[derive(Serialize)]
struct YoungResult {
    gaps: Vec<u32>,
    profile: Vec<u32>,
    rows: usize,
    columns: u32,
    cells: u32,
    hooks: Option<Vec<Vec<u32>>>,
    first_column: Option<Vec<u32>>,
    criterion: Option<CriterionResult>,
}

#[derive(Serialize)]
struct CriterionResult {
    name: &'static str,
    holds: bool,
}

pub fn young(a: &YoungArgs) -> Run {
    let set = NumericalSet::from_signed_gaps(&a.gaps)?;
    let diagram = diagram_from_set(&set)?;
    let criterion = a.criterion.map(|c| match c {
        Criterion::Semigroup => CriterionResult { name: "semigroup", holds: semigroup_by_hooks(&diagram) },
        Criterion::Unrefinable => CriterionResult { name: "unrefinable", holds: unrefinable_by_hooks(&diagram) },
    });
    if a.ascii {
        let mode = if a.hooks { RenderMode::Hooks } else { RenderMode::Outline };
        let mut text = render_annotated(&diagram, mode);
        if let Some(c) = &criterion {
            text.push_str(&format!("\n-- {} criterion: {}", c.name, c.holds));
        }
        text.push('\n');
        return Ok(Outcome { result: Value::Null, diagnostics: Vec::new(), text: Some(text), code: 0 });
    }
    let grid = a.hooks.then(|| hook_grid(&diagram));
    let result = YoungResult {
        gaps: set.gaps().to_vec(),
        profile: diagram.profile().to_vec(),
        rows: diagram.row_count(),
        columns: diagram.column_count(),
        cells: diagram.cell_count(),
        hooks: grid.as_ref().map(|g| g.rows().to_vec()),
        first_column: grid.as_ref().map(|g| g.first_column()),
        criterion,
    };
    Outcome::json(result, vec!["rows are listed top (Frobenius number) first".to_string()])
}

fn cap_note(limits: &Limits) -> String {
    format!("caps: max part {}, max weight {}", limits.max_part, limits.max_weight)
}

pub fn enumerate(a: &EnumArgs, workers: usize) -> Run {
    let limits = Limits::from_env()?;
    let family = match (a.max_part, a.weight) {
        (Some(n), _) => match (a.mex, a.maximal_missing) {
            (None, false) => Family::UMaxPart { max_part: n },
            (None, true) => Family::UBar { max_part: n },
            (Some(mex), false) => Family::UMex { max_part: n, mex },
            (Some(mex), true) => Family::UBarMex { max_part: n, mex },
        },
        (None, Some(w)) if a.maximal => Family::Maximal { weight: w },
        (None, Some(w)) => Family::UWeight { weight: w },
        (None, None) => unreachable!("clap requires --max-part or --weight"),
    };
    let mut query = FamilyQuery::new(family).with_limits(limits).with_workers(workers);
    query.list = a.list;
    let record = enumeration::enumerate(&query)?;
    Outcome::json(record, vec![cap_note(&limits)])
}

pub fn census(a: &CensusArgs) -> Run {
    let limits = Limits::from_env()?;
    let records: Vec<CountsRecord> = a
        .frobenius
        .iter()
        .map(|&f| {
            let family = if a.symmetric { Family::SnsFrobenius { frobenius: f } } else { Family::NsFrobenius { frobenius: f } };
            let mut q = FamilyQuery::new(family).with_limits(limits);
            q.list = a.list;
            enumeration::enumerate(&q)
        })
        .collect::<Result<_, _>>()?;
    Outcome::json(records, vec![cap_note(&limits)])
}

pub fn verify(v: &VerifyCommand, workers: usize) -> Run {
    let limits = Limits::from_env()?;
    match v {
        VerifyCommand::PrimeIdentity { primes, assert_equal } => {
            let report = verify_prime_identity(primes, &limits, workers)?;
            let code = if *assert_equal && !report.all_equal { 1 } else { 0 };
            Ok(Outcome::json(report, vec![cap_note(&limits)])?.with_code(code))
        }
        VerifyCommand::Mirror { max_part } => {
            let report = check_mirror_properties(*max_part, &limits, workers)?;
            Outcome::json(report, vec![cap_note(&limits)])
        }
        VerifyCommand::Maximal { n_max } => {
            let report = verify_maximal_subset_proposition(*n_max, &limits, workers)?;
            let mut diagnostics = vec![cap_note(&limits)];
            for row in report.rows.iter().filter(|r| !r.violations.is_empty()) {
                diagnostics.push(format!("{} (N = {}): {:?} lack the maximal number of missing parts", row.label, row.weight, row.violations));
            }
            Outcome::json(report, diagnostics)
        }
    }
}

#[derive(Serialize)]
struct LatticeResult<'a> {
    base: &'a [u32],
    mex: u32,
    largest: u32,
    node_count: usize,
    edge_count: usize,
    nodes: &'a [BTreeSet<u32>],
    edges: &'a [LatticeEdge],
    maximal: Vec<&'a BTreeSet<u32>>,
}

pub fn lattice(a: &LatticeArgs) -> Run {
    let base: DistinctPartition = validate(&a.parts)?;
    if let Some(w) = brute_force_refinement(&base)? {
        let sum: Vec<String> = w.summands.iter().map(|s| s.to_string()).collect();
        return Err(Failure { message: format!("base partition is refinable: {} = {}", w.part, sum.join("+")), code: 2 });
    }
    let l = extension_lattice(&base);
    if a.dot {
        return Ok(Outcome { result: Value::Null, diagnostics: Vec::new(), text: Some(l.to_dot()), code: 0 });
    }
    let result = LatticeResult {
        base: base.parts(),
        mex: base.mex(),
        largest: base.largest(),
        node_count: l.node_count(),
        edge_count: l.edges().len(),
        nodes: l.nodes(),
        edges: l.edges(),
        maximal: l.maximal_nodes(),
    };
    Outcome::json(result, Vec::new())
}
