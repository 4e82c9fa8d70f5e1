//! One function per subcommand, each returning the echoed inputs and the
//! result payload of its report.

use std::path::Path;

use laman_core::algebra::{qs_solve_with_tol, run_k33, verify_embedding, DistanceAssignment, K33Report};
use laman_core::decomposition::{decompose_unique, qs_classify, reduce_to_terminal};
use laman_core::graph::{is_m_connected, is_planar};
use laman_core::rigidity::{basic_census, is_basic, is_independent, is_laman};
use laman_core::{canonical_form, Edge, Error, Graph};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{rational_string, read_file, read_graph};

/// Largest graph on which `check` still runs the exponential basicness test.
const BASIC_CHECK_LIMIT: usize = 20;

pub struct Outcome {
    pub inputs: Value,
    pub result: Value,
}

fn to_value(x: impl serde::Serialize) -> Value {
    serde_json::to_value(x).expect("report payloads serialize")
}

fn graph_inputs(path: &Path, g: &Graph) -> Value {
    json!({ "graph_file": path.display().to_string(), "graph": g.to_text() })
}

/// `None` for graphs beyond the size limit of a check.
fn within_limit<T>(r: laman_core::Result<T>) -> Result<Option<T>, CliError> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::UnsupportedSize { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn check(path: &Path) -> Result<Outcome, CliError> {
    let g = read_graph(path)?;
    let laman = is_laman(&g);
    let basic = (g.vertex_count() <= BASIC_CHECK_LIMIT || !laman).then(|| is_basic(&g));
    let planar = within_limit(is_planar(&g))?;
    let canonical = within_limit(canonical_form(&g))?.map(|f| f.to_string());
    let result = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "free": g.freedom_number(),
        "independent": is_independent(&g),
        "laman": laman,
        "basic": basic,
        "three_connected": is_m_connected(&g, 3),
        "planar": planar,
        "canonical_form": canonical,
    });
    Ok(Outcome { inputs: graph_inputs(path, &g), result })
}

pub fn census(n: usize) -> Result<Outcome, CliError> {
    let c = basic_census(n)?;
    let catalog = |forms: &[laman_core::CanonicalForm]| -> Vec<Value> {
        forms.iter().map(|f| json!({ "canonical_form": f.to_string(), "graph": f.to_graph().to_line() })).collect()
    };
    let mut result = c.summary();
    result["laman"] = Value::Array(catalog(&c.laman));
    result["basic"] = Value::Array(catalog(&c.basic));
    Ok(Outcome { inputs: json!({ "n": n }), result })
}

pub fn decompose(path: &Path) -> Result<Outcome, CliError> {
    let g = read_graph(path)?;
    let d = decompose_unique(&g)?;
    Ok(Outcome { inputs: graph_inputs(path, &g), result: to_value(d) })
}

pub fn classify(path: &Path) -> Result<Outcome, CliError> {
    let g = read_graph(path)?;
    let c = qs_classify(&g)?;
    Ok(Outcome { inputs: graph_inputs(path, &g), result: to_value(c) })
}

pub fn reduce(path: &Path) -> Result<Outcome, CliError> {
    let g = read_graph(path)?;
    let t = reduce_to_terminal(&g)?;
    Ok(Outcome { inputs: graph_inputs(path, &g), result: to_value(t) })
}

fn k33_summary(r: &K33Report) -> Value {
    let factors: Vec<Value> = r
        .factorization
        .factors
        .iter()
        .map(|f| json!({ "degree": f.polynomial.degree(), "multiplicity": f.multiplicity }))
        .collect();
    let verdicts: Vec<Value> = r
        .certificates
        .iter()
        .map(|c| json!({ "degree": c.polynomial.degree(), "verdict": to_value(c.verdict) }))
        .collect();
    json!({
        "eliminant_degree": r.eliminant_degree,
        "factors": factors,
        "certificates": verdicts,
        "all_not_soluble": r.all_not_soluble(),
        "unit_branch_extends": r.unit_branch.extends,
    })
}

pub fn k33(distances: &[BigRational; 8], prime_bound: u64) -> Result<Outcome, CliError> {
    let inputs = json!({
        "distances": distances.iter().map(rational_string).collect::<Vec<_>>(),
        "prime_bound": prime_bound,
    });
    let report = run_k33(distances, prime_bound)?;
    let mut result = to_value(&report);
    result["summary"] = k33_summary(&report);
    Ok(Outcome { inputs, result })
}

fn distance_list(d: &DistanceAssignment) -> Vec<Value> {
    d.iter().map(|(e, q)| json!({ "edge": [e.lo(), e.hi()], "d": rational_string(q) })).collect()
}

/// Embeddings of `g` with its base edge pinned to `(0,0)-(1,0)`. The base
/// defaults to the smallest edge.
pub fn solve(path: &Path, distance_file: &Path, base: Option<Edge>, tol: f64) -> Result<Outcome, CliError> {
    let g = read_graph(path)?;
    let d = crate::input::parse_distances(&read_file(distance_file)?).map_err(|e| match e {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", distance_file.display())),
        other => other,
    })?;
    let base = match base.or_else(|| g.edges().next()) {
        Some(e) => e,
        None => return Err(Error::Precondition("graph has no edges".into()).into()),
    };
    let mut inputs = graph_inputs(path, &g);
    inputs["distance_file"] = json!(distance_file.display().to_string());
    inputs["distances"] = Value::Array(distance_list(&d));
    inputs["base"] = json!([base.lo(), base.hi()]);
    inputs["tol"] = json!(tol);

    let embeddings = qs_solve_with_tol(&g, &d, base, tol)?;
    let list: Vec<Value> = embeddings
        .iter()
        .map(|emb| {
            json!({
                "coords": emb.coords.iter().map(|(v, &(x, y))| (v.to_string(), json!([x, y]))).collect::<serde_json::Map<_, _>>(),
                "max_residual": emb.max_residual(&g, &d, base),
                "verified": verify_embedding(&g, &d, base, emb, tol),
            })
        })
        .collect();
    let result = json!({ "count": list.len(), "embeddings": list });
    Ok(Outcome { inputs, result })
}
