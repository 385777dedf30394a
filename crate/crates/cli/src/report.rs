//! JSON reports. Exact values are strings; maps serialize with sorted keys.

use serde_json::{json, Map, Value};
use tropigusa::igusa::{IgusaInvariants, TropIgusa};
use tropigusa::metgraph::{AbelianGroup, MetricGraph};
use tropigusa::redtype::{PredicateReading, ReductionVerdict, SkeletonData, WTable};
use tropigusa::torsion::{fmt_vj, EllipticReport, Genus2Report, Genus2TorsionConfig, ScanReport};
use tropigusa::tropfun::{GraphPoint, PiecewiseAffineFunction, TropClassification};
use tropigusa::valfield::ValuedField;
use tropigusa::{BigInt, BigRational};

fn strings<T: ToString>(xs: &[T]) -> Value {
    xs.iter().map(|x| Value::String(x.to_string())).collect()
}

fn rat(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

pub fn field(k: &ValuedField) -> Value {
    match k.residue_char() {
        0 => json!({ "kind": "tadic" }),
        p => json!({ "kind": "padic", "p": p }),
    }
}

pub fn invariants(k: &ValuedField, j: &IgusaInvariants, tv: &TropIgusa) -> Value {
    let values: Map<String, Value> = j
        .named()
        .iter()
        .map(|(n, x)| (n.to_string(), Value::String(x.to_string())))
        .collect();
    json!({
        "field": field(k),
        "invariants": values,
        "valuations": valuations(tv),
    })
}

pub fn valuations(tv: &TropIgusa) -> Value {
    let map: Map<String, Value> = tv
        .named()
        .iter()
        .map(|(n, x)| (n.to_string(), Value::String(x.to_string())))
        .collect();
    Value::Object(map)
}

pub fn wtable(w: &WTable) -> Value {
    let map: Map<String, Value> = w
        .named()
        .into_iter()
        .map(|(n, x)| (n, Value::String(x.to_string())))
        .collect();
    Value::Object(map)
}

fn reading(r: PredicateReading) -> &'static str {
    match r {
        PredicateReading::Strict => "strict",
        PredicateReading::AsPrinted => "as_printed",
    }
}

/// Interpretive choices behind every classification.
pub fn classification_notes(r: PredicateReading) -> Vec<String> {
    let mut notes = vec![
        "chestnut: n = v(I12) - 6 v(J2)".to_string(),
        "two elliptic curves: e = (eps v(J10) - 5 v(I2eps)) / (12 eps)".to_string(),
        "J10 = v0^2 disc(P) / 4096".to_string(),
    ];
    notes.push(match r {
        PredicateReading::Strict => "predicates: w2x > 0 and w3x > 0 (strict)".to_string(),
        PredicateReading::AsPrinted => "predicates: w2x >= 0 and w3x >= 0 (as printed)".to_string(),
    });
    notes
}

pub fn verdict(
    k: &ValuedField,
    v: &ReductionVerdict,
    w: &WTable,
    tv: &TropIgusa,
    eps: i64,
) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("field".into(), field(k));
    m.insert("type".into(), Value::String(v.rtype.name().into()));
    m.insert("type_number".into(), json!(v.rtype.number()));
    m.insert("ambiguous".into(), json!(v.ambiguous));
    m.insert(
        "matched_cases".into(),
        v.matched_cases.iter().map(|t| json!(t.name())).collect(),
    );
    m.insert("reading".into(), json!(reading(v.reading)));
    m.insert("epsilon".into(), json!(eps));
    m.insert("w".into(), wtable(w));
    m.insert("valuations".into(), valuations(tv));
    m.insert("notes".into(), strings(&classification_notes(v.reading)));
    m
}

pub fn group(g: &AbelianGroup) -> Value {
    json!({
        "invariant_factors": strings(g.invariant_factors()),
        "order": g.order().to_string(),
        "group": g.to_string(),
    })
}

pub fn graph(g: &MetricGraph) -> Value {
    let vertices: Vec<Value> = g
        .labels()
        .iter()
        .zip(g.genus_labels())
        .map(|(l, genus)| json!({ "label": l, "genus": genus }))
        .collect();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| json!({ "a": e.a, "b": e.b, "length": rat(&e.length) }))
        .collect();
    json!({ "vertices": vertices, "edges": edges })
}

pub fn skeleton(
    mut base: Map<String, Value>,
    sk: &SkeletonData,
    jac: &AbelianGroup,
    unit: &BigRational,
) -> Value {
    let th: Map<String, Value> = sk
        .thicknesses
        .named()
        .into_iter()
        .map(|(n, x)| (n.to_string(), rat(x)))
        .collect();
    base.insert("thicknesses".into(), Value::Object(th));
    base.insert("component_group".into(), group(&sk.component_group));
    base.insert("graph_jacobian".into(), group(jac));
    base.insert("unit".into(), rat(unit));
    base.insert("integral_over_k".into(), json!(sk.integral_over_k));
    base.insert(
        "extension_degree".into(),
        json!(sk.extension_degree.to_string()),
    );
    base.insert("dual_graph".into(), graph(&sk.dual_graph));
    let mut notes: Vec<Value> = match base.remove("notes") {
        Some(Value::Array(a)) => a,
        _ => vec![],
    };
    for n in &sk.notes {
        let n = Value::String(n.clone());
        if !notes.contains(&n) {
            notes.push(n);
        }
    }
    base.insert("notes".into(), Value::Array(notes));
    Value::Object(base)
}

pub fn graphjac(g: &MetricGraph, jac: &AbelianGroup, unit: &BigRational) -> Value {
    json!({
        "graph": graph(g),
        "unit": rat(unit),
        "betti_number": g.betti_number(),
        "jacobian": group(jac),
    })
}

fn point(g: &MetricGraph, p: &GraphPoint) -> Value {
    Value::String(p.describe(g))
}

fn classification(g: &MetricGraph, c: &TropClassification) -> Value {
    let mut m = Map::new();
    m.insert("verdict".into(), json!(c.verdict.name()));
    m.insert("separated".into(), json!(c.separated));
    m.insert("collapsed_edges".into(), json!(c.collapsed_edges));
    if let Some((a, b)) = &c.witness {
        m.insert("witness".into(), json!([point(g, a), point(g, b)]));
    }
    Value::Object(m)
}

fn function(f: &PiecewiseAffineFunction, divisor: &[BigInt]) -> Value {
    json!({
        "divisor": strings(divisor),
        "heights": strings(f.heights()),
        "slopes": strings(&f.slopes()),
    })
}

pub fn elliptic(r: &EllipticReport, divisors: &[Vec<BigInt>]) -> Value {
    let g = r.functions[0].graph();
    let n = BigRational::from_integer(r.n.into());
    json!({
        "n": r.n,
        "edge_length": fmt_vj(&(-BigRational::from_integer(1.into()) / n)),
        "functions": r
            .functions
            .iter()
            .zip(divisors)
            .map(|(f, d)| function(f, d))
            .collect::<Vec<_>>(),
        "expansions": strings(&r.expansions),
        "length": fmt_vj(&r.length_vj),
        "classification": classification(g, &r.classification),
        "notes": ["heights and positions are in units of the edge length -v(j)/n"],
    })
}

fn config(c: &Genus2TorsionConfig) -> Value {
    let mut m = Map::new();
    m.insert("e1".into(), json!(c.e1));
    m.insert("i".into(), json!(c.i));
    m.insert("j".into(), json!(c.j));
    if let Some(s) = c.second {
        m.insert("second".into(), json!({ "bridge": s.bridge, "e2": s.e2 }));
    }
    Value::Object(m)
}

pub fn genus2(r: &Genus2Report, symmetric: bool) -> Value {
    let g = r.f.graph();
    let mut m = Map::new();
    m.insert("config".into(), config(&r.config));
    m.insert("slopes_F".into(), strings(&r.slopes_f));
    m.insert("slopes_G".into(), strings(&r.slopes_g));
    m.insert("heights_F".into(), strings(r.f.heights()));
    m.insert("heights_G".into(), strings(r.g.heights()));
    m.insert("expansions".into(), strings(&r.expansions));
    m.insert("length".into(), rat(&r.length));
    m.insert("separated".into(), json!(r.separated()));
    m.insert("reflection_symmetric".into(), json!(symmetric));
    if let (Some((a, b)), Some([(fa, ga), (fb, gb)])) = (&r.separation.witness, r.witness_values())
    {
        m.insert(
            "witness".into(),
            json!({
                "points": [point(g, a), point(g, b)],
                "F": [rat(&fa), rat(&fb)],
                "G": [rat(&ga), rat(&gb)],
            }),
        );
    }
    Value::Object(m)
}

pub fn scan(r: &ScanReport) -> Value {
    json!({
        "e1_max": r.e1_max,
        "configurations": r.configurations,
        "separated": r.separated,
        "non_separated": r.non_separated.iter().map(config).collect::<Vec<_>>(),
        "counterexamples": r
            .counterexamples
            .iter()
            .map(|c| json!({ "config": config(&c.config), "edge": c.edge }))
            .collect::<Vec<_>>(),
    })
}
