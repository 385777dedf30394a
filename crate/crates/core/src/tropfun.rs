//! Piecewise affine functions with integer slopes on metric graphs.
//!
//! A function is stored by its vertex heights on a graph whose edges all have
//! the same length `L`; the slope along edge `a → b` is `(h(b) − h(a))/L`.
//! Its divisor follows the Laplacian convention of [`crate::metgraph`]:
//! `D(v) = Σ_{e = vw} (h(v) − h(w))/L`, so `D(v)` is minus the sum of the
//! outgoing slopes at `v`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::metgraph::{self, GraphDivisor, MetGraphError, MetricGraph};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TropFunError {
    #[error("divisor is not principal: no function with integer slopes has it")]
    NotPrincipal,
    #[error("graph edges must all have the same length; subdivide first")]
    NotUniform,
    #[error("functions are defined on different graphs")]
    GraphMismatch,
    #[error("slope on edge {0} is not an integer")]
    NonIntegerSlope(usize),
    #[error("expected {expected} heights, got {got}")]
    WrongHeightCount { expected: usize, got: usize },
    #[error("edge {0} does not exist")]
    UnknownEdge(usize),
    #[error(transparent)]
    Graph(#[from] MetGraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiecewiseAffineFunction {
    graph: MetricGraph,
    heights: Vec<BigRational>,
}

fn edge_unit(g: &MetricGraph) -> Result<BigRational, TropFunError> {
    match g.edges().first() {
        None => Ok(BigRational::one()),
        Some(_) => g.uniform_length().cloned().ok_or(TropFunError::NotUniform),
    }
}

impl PiecewiseAffineFunction {
    pub fn new(graph: MetricGraph, heights: Vec<BigRational>) -> Result<Self, TropFunError> {
        if heights.len() != graph.vertex_count() {
            return Err(TropFunError::WrongHeightCount {
                expected: graph.vertex_count(),
                got: heights.len(),
            });
        }
        let len = edge_unit(&graph)?;
        for (i, e) in graph.edges().iter().enumerate() {
            if !((&heights[e.b] - &heights[e.a]) / &len).is_integer() {
                return Err(TropFunError::NonIntegerSlope(i));
            }
        }
        Ok(PiecewiseAffineFunction { graph, heights })
    }

    pub fn constant(graph: MetricGraph, c: BigRational) -> Result<Self, TropFunError> {
        let n = graph.vertex_count();
        Self::new(graph, vec![c; n])
    }

    pub fn graph(&self) -> &MetricGraph {
        &self.graph
    }

    pub fn heights(&self) -> &[BigRational] {
        &self.heights
    }

    pub fn edge_length(&self) -> BigRational {
        edge_unit(&self.graph).expect("checked at construction")
    }

    /// Slope along edge `i`, oriented from `a` to `b`.
    pub fn slope(&self, i: usize) -> BigInt {
        let e = &self.graph.edges()[i];
        ((&self.heights[e.b] - &self.heights[e.a]) / self.edge_length()).to_integer()
    }

    pub fn slopes(&self) -> Vec<BigInt> {
        (0..self.graph.edges().len())
            .map(|i| self.slope(i))
            .collect()
    }

    /// Subdivides every edge into `k` equal pieces, interpolating heights.
    pub fn refine(&self, k: usize) -> PiecewiseAffineFunction {
        assert!(k >= 1);
        let kq = BigRational::from_integer(k.into());
        let unit = self.edge_length() / &kq;
        let graph = metgraph::subdivide(&self.graph, &unit).expect("uniform lengths divide");
        let mut heights = self.heights.clone();
        for e in self.graph.edges() {
            let (ha, hb) = (&self.heights[e.a], &self.heights[e.b]);
            for s in 1..k {
                let t = BigRational::from_integer(s.into()) / &kq;
                heights.push(ha + (hb - ha) * t);
            }
        }
        PiecewiseAffineFunction { graph, heights }
    }

    /// Image of a point of the graph.
    pub fn eval(&self, p: &GraphPoint) -> BigRational {
        match p {
            GraphPoint::Vertex(v) => self.heights[*v].clone(),
            GraphPoint::OnEdge { edge, t } => {
                let e = &self.graph.edges()[*edge];
                let (ha, hb) = (&self.heights[e.a], &self.heights[e.b]);
                ha + (hb - ha) * t
            }
        }
    }
}

/// Solves `ΔF = D`, normalized so that vertex 0 has height 0.
pub fn solve_function(
    g: &MetricGraph,
    d: &GraphDivisor,
) -> Result<PiecewiseAffineFunction, TropFunError> {
    let len = edge_unit(g)?;
    let phi = metgraph::is_principal(g, d)?.ok_or(TropFunError::NotPrincipal)?;
    let heights = phi
        .into_iter()
        .map(|x| BigRational::from_integer(x) * &len)
        .collect();
    Ok(PiecewiseAffineFunction {
        graph: g.clone(),
        heights,
    })
}

pub fn divisor_of(f: &PiecewiseAffineFunction) -> GraphDivisor {
    let len = f.edge_length();
    let mut d = GraphDivisor::zero(f.graph.vertex_count());
    for e in f.graph.edges() {
        if e.is_loop() {
            continue;
        }
        let diff = ((&f.heights[e.a] - &f.heights[e.b]) / &len).to_integer();
        d.0[e.a] += &diff;
        d.0[e.b] -= &diff;
    }
    d
}

fn check_shared(fs: &[PiecewiseAffineFunction]) -> Result<&MetricGraph, TropFunError> {
    let g = fs
        .first()
        .map(|f| &f.graph)
        .ok_or(TropFunError::GraphMismatch)?;
    if fs.iter().any(|f| &f.graph != g) {
        return Err(TropFunError::GraphMismatch);
    }
    Ok(g)
}

fn edge_set(g: &MetricGraph, edges: Option<&[usize]>) -> Result<Vec<usize>, TropFunError> {
    match edges {
        None => Ok((0..g.edges().len()).collect()),
        Some(es) => {
            if let Some(&bad) = es.iter().find(|&&i| i >= g.edges().len()) {
                return Err(TropFunError::UnknownEdge(bad));
            }
            Ok(es.to_vec())
        }
    }
}

/// `gcd` of the absolute values of the nonzero slopes on edge `i`; `0` when
/// every slope vanishes.
pub fn expansion_factor(i: usize, fs: &[PiecewiseAffineFunction]) -> BigInt {
    fs.iter()
        .map(|f| f.slope(i))
        .fold(BigInt::zero(), |acc, s| acc.gcd(&s))
}

pub fn expansion_factors(fs: &[PiecewiseAffineFunction]) -> Result<Vec<BigInt>, TropFunError> {
    let g = check_shared(fs)?;
    Ok((0..g.edges().len())
        .map(|i| expansion_factor(i, fs))
        .collect())
}

/// `Σ m(e)·ℓ(e)` over the designated edges (all edges by default).
pub fn trop_length(
    fs: &[PiecewiseAffineFunction],
    edges: Option<&[usize]>,
) -> Result<BigRational, TropFunError> {
    let g = check_shared(fs)?;
    let mut total = BigRational::zero();
    for i in edge_set(g, edges)? {
        total += BigRational::from_integer(expansion_factor(i, fs)) * &g.edges()[i].length;
    }
    Ok(total)
}

/// A point of a graph: a vertex, or the point at fraction `t ∈ (0, 1)` along
/// an edge from its first endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphPoint {
    Vertex(usize),
    OnEdge { edge: usize, t: BigRational },
}

impl GraphPoint {
    fn on_edge(g: &MetricGraph, edge: usize, t: BigRational) -> GraphPoint {
        let e = &g.edges()[edge];
        if t.is_zero() {
            GraphPoint::Vertex(e.a)
        } else if t.is_one() {
            GraphPoint::Vertex(e.b)
        } else {
            GraphPoint::OnEdge { edge, t }
        }
    }

    pub fn describe(&self, g: &MetricGraph) -> String {
        match self {
            GraphPoint::Vertex(v) => g.labels()[*v].clone(),
            GraphPoint::OnEdge { edge, t } => {
                let e = &g.edges()[*edge];
                format!(
                    "{}+{}*({}->{})",
                    g.labels()[e.a],
                    metgraph::fmt_rational(t),
                    g.labels()[e.a],
                    g.labels()[e.b]
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub separated: bool,
    /// Two distinct points with the same image, when not separated.
    pub witness: Option<(GraphPoint, GraphPoint)>,
}

type Point = Vec<BigRational>;

fn image(fs: &[PiecewiseAffineFunction], v: usize) -> Point {
    fs.iter().map(|f| f.heights[v].clone()).collect()
}

fn sub(a: &Point, b: &Point) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn is_zero_vec(a: &Point) -> bool {
    a.iter().all(Zero::is_zero)
}

/// `Some(λ)` with `b = λ·a`, for nonzero `a`.
fn ratio_if_parallel(a: &Point, b: &Point) -> Option<BigRational> {
    let k = a.iter().position(|x| !x.is_zero())?;
    let lambda = &b[k] / &a[k];
    a.iter()
        .zip(b)
        .all(|(x, y)| &(x * &lambda) == y)
        .then_some(lambda)
}

/// Solves `s·d1 − u·d2 = r` for linearly independent `d1`, `d2`.
fn solve_independent(d1: &Point, d2: &Point, r: &Point) -> Option<(BigRational, BigRational)> {
    let n = d1.len();
    for i in 0..n {
        for j in i + 1..n {
            let det = &d1[i] * -&d2[j] + &d2[i] * &d1[j];
            if det.is_zero() {
                continue;
            }
            let s = (&r[i] * -&d2[j] + &d2[i] * &r[j]) / &det;
            let u = (&d1[i] * &r[j] - &r[i] * &d1[j]) / &det;
            let ok = (0..n).all(|k| (&d1[k] * &s - &d2[k] * &u) == r[k]);
            return ok.then_some((s, u));
        }
    }
    None
}

fn in_unit(x: &BigRational) -> bool {
    !x.is_negative() && x <= &BigRational::one()
}

/// The vertex at parameter `t ∈ {0, 1}` of edge `i`, if any.
fn endpoint(g: &MetricGraph, i: usize, t: &BigRational) -> Option<usize> {
    let e = &g.edges()[i];
    if t.is_zero() {
        Some(e.a)
    } else if t.is_one() {
        Some(e.b)
    } else {
        None
    }
}

/// Decides injectivity of `x ↦ (F₁(x), …, Fₙ(x))` on the designated edges
/// (all edges by default), extended affinely over each edge.
///
/// Checks, in order: coincident vertex images (first pair in lexicographic
/// order), edges mapped to a point, then every pair of edge segments for an
/// intersection other than the image of a shared endpoint.
pub fn separates_points(
    fs: &[PiecewiseAffineFunction],
    edges: Option<&[usize]>,
) -> Result<Separation, TropFunError> {
    let g = check_shared(fs)?;
    let es = edge_set(g, edges)?;
    let fail = |a: GraphPoint, b: GraphPoint| {
        Ok(Separation {
            separated: false,
            witness: Some((a, b)),
        })
    };

    let mut verts: Vec<usize> = es
        .iter()
        .flat_map(|&i| [g.edges()[i].a, g.edges()[i].b])
        .collect();
    verts.sort_unstable();
    verts.dedup();
    let images: Vec<Point> = verts.iter().map(|&v| image(fs, v)).collect();
    for x in 0..verts.len() {
        for y in x + 1..verts.len() {
            if images[x] == images[y] {
                return fail(GraphPoint::Vertex(verts[x]), GraphPoint::Vertex(verts[y]));
            }
        }
    }

    let seg = |i: usize| {
        let e = &g.edges()[i];
        let p = image(fs, e.a);
        let d = sub(&image(fs, e.b), &p);
        (p, d)
    };
    for &i in &es {
        if is_zero_vec(&seg(i).1) {
            let third = BigRational::new(1.into(), 3.into());
            let two_thirds = BigRational::new(2.into(), 3.into());
            return fail(
                GraphPoint::on_edge(g, i, third),
                GraphPoint::on_edge(g, i, two_thirds),
            );
        }
    }

    for (x, &i) in es.iter().enumerate() {
        let (p, d1) = seg(i);
        for &j in &es[x + 1..] {
            let (q, d2) = seg(j);
            let r = sub(&q, &p);
            let hit = match ratio_if_parallel(&d1, &d2) {
                Some(lambda) => {
                    // Collinear only if q lies on the line through p.
                    if !is_zero_vec(&r) && ratio_if_parallel(&d1, &r).is_none() {
                        continue;
                    }
                    let k = d1.iter().position(|c| !c.is_zero()).unwrap();
                    // q + u·d2 = p + (r_k/d1_k + u·λ)·d1
                    let s0 = &r[k] / &d1[k];
                    let s1 = &s0 + &lambda;
                    let (lo, hi) = if s0 <= s1 { (s0, s1) } else { (s1, s0) };
                    let lo = lo.max(BigRational::zero());
                    let hi = hi.min(BigRational::one());
                    if lo > hi {
                        continue;
                    }
                    if lo < hi {
                        let s = (&lo + &hi) / BigRational::from_integer(2.into());
                        let u = (&s - &(&r[k] / &d1[k])) / &lambda;
                        return fail(GraphPoint::on_edge(g, i, s), GraphPoint::on_edge(g, j, u));
                    }
                    let u = (&lo - &(&r[k] / &d1[k])) / &lambda;
                    (lo, u)
                }
                None => match solve_independent(&d1, &d2, &r) {
                    Some((s, u)) if in_unit(&s) && in_unit(&u) => (s, u),
                    _ => continue,
                },
            };
            let (s, u) = hit;
            let shared = match (endpoint(g, i, &s), endpoint(g, j, &u)) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            };
            if !shared {
                return fail(GraphPoint::on_edge(g, i, s), GraphPoint::on_edge(g, j, u));
            }
        }
    }
    Ok(Separation {
        separated: true,
        witness: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TropVerdict {
    Faithful,
    Scaled,
    NotScaled,
}

impl TropVerdict {
    pub fn name(self) -> &'static str {
        match self {
            TropVerdict::Faithful => "Faithful",
            TropVerdict::Scaled => "Scaled",
            TropVerdict::NotScaled => "NotScaled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropClassification {
    pub verdict: TropVerdict,
    /// Expansion factor of each designated edge, in designated order.
    pub per_edge_expansion: Vec<BigInt>,
    pub separated: bool,
    pub witness: Option<(GraphPoint, GraphPoint)>,
    /// Designated edges with expansion factor 0.
    pub collapsed_edges: Vec<usize>,
}

pub fn classify_trop(
    fs: &[PiecewiseAffineFunction],
    edges: Option<&[usize]>,
) -> Result<TropClassification, TropFunError> {
    let g = check_shared(fs)?;
    let es = edge_set(g, edges)?;
    let per_edge_expansion: Vec<BigInt> = es.iter().map(|&i| expansion_factor(i, fs)).collect();
    let collapsed_edges: Vec<usize> = es
        .iter()
        .zip(&per_edge_expansion)
        .filter(|(_, m)| m.is_zero())
        .map(|(&i, _)| i)
        .collect();
    let sep = separates_points(fs, Some(&es))?;
    let verdict = if !sep.separated || !collapsed_edges.is_empty() {
        TropVerdict::NotScaled
    } else if per_edge_expansion.iter().all(One::is_one) {
        TropVerdict::Faithful
    } else {
        TropVerdict::Scaled
    };
    Ok(TropClassification {
        verdict,
        per_edge_expansion,
        separated: sep.separated,
        witness: sep.witness,
        collapsed_edges,
    })
}

/// CSV of vertex heights: `position,vertex,<name>...`, one row per vertex in
/// index order with `position = index·L`. On a cycle `C₀ … C_{n−1}` a closing
/// row repeats `C₀` at position `n·L`.
pub fn breakpoints_csv(
    names: &[&str],
    fs: &[PiecewiseAffineFunction],
) -> Result<String, TropFunError> {
    let g = check_shared(fs)?;
    assert_eq!(names.len(), fs.len(), "one name per function");
    let len = fs[0].edge_length();
    let n = g.vertex_count();
    let is_cycle = g.edges().len() == n
        && g.edges()
            .iter()
            .enumerate()
            .all(|(i, e)| e.a == i && e.b == (i + 1) % n);
    let mut out = format!("position,vertex,{}\n", names.join(","));
    let rows = if is_cycle { n + 1 } else { n };
    for k in 0..rows {
        let v = k % n;
        let pos = BigRational::from_integer(k.into()) * &len;
        let hs: Vec<String> = fs
            .iter()
            .map(|f| metgraph::fmt_rational(&f.heights[v]))
            .collect();
        let _ = writeln!(
            out,
            "{},{},{}",
            metgraph::fmt_rational(&pos),
            g.labels()[v],
            hs.join(",")
        );
    }
    Ok(out)
}
