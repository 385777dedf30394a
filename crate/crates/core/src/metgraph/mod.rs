//! Metric graphs, divisors, the graph Laplacian and graph Jacobians.
//!
//! Sign convention: the Laplacian of an integer function `φ` is the divisor
//! `Δφ(v) = Σ_{e = vw} (φ(v) − φ(w))`. On an `N`-cycle this reads
//! `aᵢ = 2hᵢ − hᵢ₋₁ − hᵢ₊₁`.

mod smith;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use smith::diagonal_form;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum MetGraphError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("edge {edge} references vertex {vertex}, which does not exist")]
    BadEndpoint { edge: usize, vertex: usize },
    #[error("edge {0} has non-positive length")]
    NonPositiveLength(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge {edge} has length {length}, not a multiple of the unit {unit}")]
    NonCommensurableLengths {
        edge: usize,
        length: String,
        unit: String,
    },
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("divisor has degree {0}, expected 0")]
    NonZeroDegree(BigInt),
    #[error("divisor has {got} coefficients but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
    #[error("subdivision unit must be positive")]
    NonPositiveUnit,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub length: BigRational,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    /// The endpoint opposite `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

/// A connected graph with a genus label per vertex and positive rational edge
/// lengths. Loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetricGraph {
    genus: Vec<u32>,
    labels: Vec<String>,
    edges: Vec<Edge>,
}

impl MetricGraph {
    pub fn new(genus: Vec<u32>, edges: Vec<Edge>) -> Result<Self, MetGraphError> {
        let labels = (0..genus.len()).map(|i| format!("v{i}")).collect();
        Self::with_labels(genus, labels, edges)
    }

    pub fn with_labels(
        genus: Vec<u32>,
        labels: Vec<String>,
        edges: Vec<Edge>,
    ) -> Result<Self, MetGraphError> {
        if genus.is_empty() {
            return Err(MetGraphError::EmptyGraph);
        }
        assert_eq!(genus.len(), labels.len(), "one label per vertex");
        for (i, e) in edges.iter().enumerate() {
            for v in [e.a, e.b] {
                if v >= genus.len() {
                    return Err(MetGraphError::BadEndpoint { edge: i, vertex: v });
                }
            }
            if !e.length.is_positive() {
                return Err(MetGraphError::NonPositiveLength(i));
            }
        }
        let g = MetricGraph {
            genus,
            labels,
            edges,
        };
        if !g.is_connected() {
            return Err(MetGraphError::Disconnected);
        }
        Ok(g)
    }

    /// Convenience constructor from `(a, b, length)` triples.
    pub fn from_triples(
        genus: Vec<u32>,
        edges: &[(usize, usize, BigRational)],
    ) -> Result<Self, MetGraphError> {
        let edges = edges
            .iter()
            .map(|(a, b, l)| Edge {
                a: *a,
                b: *b,
                length: l.clone(),
            })
            .collect();
        Self::new(genus, edges)
    }

    /// The cycle `C₀ - C₁ - … - C_{n−1} - C₀` with genus-0 vertices, edge `i`
    /// joining `Cᵢ` and `Cᵢ₊₁`. For `n = 1` this is a single loop.
    pub fn cycle(n: usize, length: BigRational) -> Result<Self, MetGraphError> {
        if n == 0 {
            return Err(MetGraphError::EmptyGraph);
        }
        let edges = (0..n)
            .map(|i| Edge {
                a: i,
                b: (i + 1) % n,
                length: length.clone(),
            })
            .collect();
        let labels = (0..n).map(|i| format!("C{i}")).collect();
        Self::with_labels(vec![0; n], labels, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.genus.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn genus_labels(&self) -> &[u32] {
        &self.genus
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.genus.len());
        self.labels = labels;
    }

    /// First Betti number `|E| − |V| + 1`.
    pub fn betti_number(&self) -> usize {
        self.edges.len() + 1 - self.genus.len()
    }

    /// `Σ g(v) + b₁(G)`.
    pub fn total_genus(&self) -> usize {
        self.genus.iter().map(|&g| g as usize).sum::<usize>() + self.betti_number()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.genus.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let adj = self.adjacency();
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `(neighbour, edge index)` lists; loops appear once at their vertex.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.genus.len()];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, i));
            if !e.is_loop() {
                adj[e.b].push((e.a, i));
            }
        }
        adj
    }

    /// The common edge length, if all edges have the same length.
    pub fn uniform_length(&self) -> Option<&BigRational> {
        let first = &self.edges.first()?.length;
        self.edges
            .iter()
            .all(|e| &e.length == first)
            .then_some(first)
    }

    /// `1/L` with `L` the lcm of the length denominators: the coarsest unit of
    /// the form `1/n` that makes every length integral. For integral lengths
    /// this is 1, the unit in which thicknesses are counted.
    pub fn default_unit(&self) -> BigRational {
        let l = self
            .edges
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.length.denom()));
        BigRational::new(BigInt::one(), l)
    }

    /// `gcd` of all edge lengths (common denominator, then integer gcd).
    pub fn gcd_length(&self) -> Option<BigRational> {
        let first = self.edges.first()?;
        Some(
            self.edges
                .iter()
                .skip(1)
                .fold(first.length.clone(), |acc, e| {
                    let den = acc.denom().lcm(e.length.denom());
                    let a = (&acc * BigRational::from_integer(den.clone())).to_integer();
                    let b = (&e.length * BigRational::from_integer(den.clone())).to_integer();
                    BigRational::new(a.gcd(&b), den)
                }),
        )
    }

    /// Graphviz rendering: vertices labelled with name and genus, edges with length.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph skeleton {\n");
        for (i, (label, g)) in self.labels.iter().zip(&self.genus).enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{label} (g={g})\"];");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -- n{} [label=\"{}\"];",
                e.a,
                e.b,
                fmt_rational(&e.length)
            );
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Replaces each edge of length `k·unit` by a path of `k` edges of length
/// `unit` through new genus-0 vertices. Original vertices keep their indices;
/// new vertices are appended in edge order.
pub fn subdivide(g: &MetricGraph, unit: &BigRational) -> Result<MetricGraph, MetGraphError> {
    if !unit.is_positive() {
        return Err(MetGraphError::NonPositiveUnit);
    }
    let mut genus = g.genus.clone();
    let mut labels = g.labels.clone();
    let mut edges = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        let k = &e.length / unit;
        if !k.is_integer() {
            return Err(MetGraphError::NonCommensurableLengths {
                edge: i,
                length: fmt_rational(&e.length),
                unit: fmt_rational(unit),
            });
        }
        let k = k
            .to_integer()
            .to_usize()
            .expect("subdivision count fits in usize");
        let mut prev = e.a;
        for step in 1..k {
            let fresh = genus.len();
            genus.push(0);
            labels.push(format!("{}_{}.{}", g.labels[e.a], i, step));
            edges.push(Edge {
                a: prev,
                b: fresh,
                length: unit.clone(),
            });
            prev = fresh;
        }
        edges.push(Edge {
            a: prev,
            b: e.b,
            length: unit.clone(),
        });
    }
    Ok(MetricGraph {
        genus,
        labels,
        edges,
    })
}

/// An integer divisor on the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphDivisor(pub Vec<BigInt>);

impl GraphDivisor {
    pub fn zero(n: usize) -> Self {
        GraphDivisor(vec![BigInt::zero(); n])
    }

    pub fn from_i64(c: &[i64]) -> Self {
        GraphDivisor(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn degree(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Add for &GraphDivisor {
    type Output = GraphDivisor;
    fn add(self, rhs: &GraphDivisor) -> GraphDivisor {
        assert_eq!(self.len(), rhs.len());
        GraphDivisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// `Δφ(v) = Σ_{e = vw} (φ(v) − φ(w))` on the combinatorial graph (edge lengths
/// are ignored, so apply it to a unit subdivision). Loops contribute zero.
pub fn laplacian_apply(g: &MetricGraph, phi: &[BigInt]) -> GraphDivisor {
    assert_eq!(phi.len(), g.vertex_count(), "one value per vertex");
    let mut d = GraphDivisor::zero(g.vertex_count());
    for e in &g.edges {
        if e.is_loop() {
            continue;
        }
        let diff = &phi[e.a] - &phi[e.b];
        d.0[e.a] += &diff;
        d.0[e.b] -= &diff;
    }
    d
}

/// The Laplacian matrix `L` with `Δφ = Lφ`.
pub fn laplacian_matrix(g: &MetricGraph) -> Vec<Vec<BigInt>> {
    let n = g.vertex_count();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for e in &g.edges {
        if e.is_loop() {
            continue;
        }
        m[e.a][e.a] += 1;
        m[e.b][e.b] += 1;
        m[e.a][e.b] -= 1;
        m[e.b][e.a] -= 1;
    }
    m
}

fn reduced_laplacian(g: &MetricGraph) -> Vec<Vec<BigInt>> {
    laplacian_matrix(g)
        .into_iter()
        .skip(1)
        .map(|row| row.into_iter().skip(1).collect())
        .collect()
}

/// A finite abelian group given by invariant factors `d₁ | d₂ | …`, all `> 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    /// Normalizes `⊕ Z/aᵢ` into invariant-factor form. Factors `0` are not
    /// allowed (the group must be finite).
    pub fn from_cyclic(orders: &[BigInt]) -> Self {
        let mut a: Vec<BigInt> = orders.iter().map(|x| x.abs()).collect();
        assert!(a.iter().all(|x| !x.is_zero()), "infinite cyclic factor");
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                let g = a[i].gcd(&a[j]);
                let l = a[i].lcm(&a[j]);
                a[i] = g;
                a[j] = l;
            }
        }
        a.retain(|x| !x.is_one());
        AbelianGroup {
            invariant_factors: a,
        }
    }

    pub fn cyclic(n: i64) -> Self {
        Self::from_cyclic(&[BigInt::from(n)])
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// `Jac(G) = Div⁰(G)/Prin(G)` of the subdivision of `g` into edges of length
/// `unit` (default [`MetricGraph::default_unit`]), from the diagonal form of
/// the reduced Laplacian.
pub fn graph_jacobian(
    g: &MetricGraph,
    unit: Option<&BigRational>,
) -> Result<AbelianGroup, MetGraphError> {
    let unit = unit.cloned().unwrap_or_else(|| g.default_unit());
    let sub = subdivide(g, &unit)?;
    let diag = diagonal_form(reduced_laplacian(&sub));
    debug_assert_eq!(diag.len(), sub.vertex_count() - 1, "connected graph");
    Ok(AbelianGroup::from_cyclic(&diag))
}

/// Number of spanning trees of the combinatorial graph (Kirchhoff), i.e. the
/// determinant of the reduced Laplacian.
pub fn spanning_tree_count(g: &MetricGraph) -> BigInt {
    diagonal_form(reduced_laplacian(g)).iter().product()
}

/// Specialization of a formal sum of points to the vertices they reduce to.
pub fn specialize(
    g: &MetricGraph,
    assignments: &[(i64, usize)],
) -> Result<GraphDivisor, MetGraphError> {
    let mut d = GraphDivisor::zero(g.vertex_count());
    for &(n, v) in assignments {
        if v >= g.vertex_count() {
            return Err(MetGraphError::UnknownVertex(v));
        }
        d.0[v] += n;
    }
    Ok(d)
}

/// Solves `Δφ = D` over the integers on the combinatorial graph.
///
/// Returns `Ok(Some(φ))` with `φ(v₀) = 0` when `D` is principal, `Ok(None)`
/// otherwise. The reduced Laplacian is invertible over `Q` for a connected
/// graph, so `D` is principal iff the unique rational solution is integral.
pub fn is_principal(
    g: &MetricGraph,
    d: &GraphDivisor,
) -> Result<Option<Vec<BigInt>>, MetGraphError> {
    let n = g.vertex_count();
    if d.len() != n {
        return Err(MetGraphError::SizeMismatch {
            expected: n,
            got: d.len(),
        });
    }
    let deg = d.degree();
    if !deg.is_zero() {
        return Err(MetGraphError::NonZeroDegree(deg));
    }
    let size = n - 1;
    let red = reduced_laplacian(g);
    let mut m: Vec<Vec<BigRational>> = red
        .into_iter()
        .zip(d.0.iter().skip(1))
        .map(|(row, rhs)| {
            row.into_iter()
                .chain(std::iter::once(rhs.clone()))
                .map(BigRational::from_integer)
                .collect()
        })
        .collect();
    gauss_jordan(&mut m, size);
    let mut phi = vec![BigInt::zero()];
    for row in &m {
        let x = &row[size];
        if !x.is_integer() {
            return Ok(None);
        }
        phi.push(x.to_integer());
    }
    Ok(Some(phi))
}

/// Membership test for `Prin(G)` with the reduced Laplacian inverted once.
///
/// Stores `adj = det·L₀⁻¹` for the reduced Laplacian `L₀`; a degree-0
/// divisor `D` is principal iff `adj·D₀ ≡ 0 (mod det)`.
#[derive(Clone, Debug)]
pub struct LaplacianImage {
    det: BigInt,
    /// `cols[v]` is column `v` of `adj`, padded with a zero column for `v = 0`.
    cols: Vec<Vec<BigInt>>,
}

impl LaplacianImage {
    pub fn new(g: &MetricGraph) -> Self {
        let red = reduced_laplacian(g);
        let size = red.len();
        let mut m: Vec<Vec<BigRational>> = red
            .into_iter()
            .enumerate()
            .map(|(r, row)| {
                let mut row: Vec<BigRational> =
                    row.into_iter().map(BigRational::from_integer).collect();
                row.extend((0..size).map(|c| {
                    if c == r {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        gauss_jordan(&mut m, size);
        let det = spanning_tree_count(g);
        let detq = BigRational::from_integer(det.clone());
        let mut cols = vec![vec![BigInt::zero(); size]];
        for c in 0..size {
            cols.push(
                (0..size)
                    .map(|r| (&m[r][size + c] * &detq).to_integer())
                    .collect(),
            );
        }
        LaplacianImage { det, cols }
    }

    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// Column `v` of the adjugate (all zero for `v = 0`).
    pub fn column(&self, v: usize) -> &[BigInt] {
        &self.cols[v]
    }

    /// Whether the degree-0 divisor `d` lies in the image of the Laplacian.
    pub fn contains(&self, d: &GraphDivisor) -> bool {
        let size = self.cols.len() - 1;
        (0..size).all(|r| {
            let s: BigInt = d.0.iter().zip(&self.cols).map(|(x, col)| x * &col[r]).sum();
            s.is_multiple_of(&self.det)
        })
    }
}

/// Row-reduces the left `size` columns of `m` to the identity; the matrix must
/// be invertible there.
fn gauss_jordan(m: &mut [Vec<BigRational>], size: usize) {
    let width = m.first().map_or(0, Vec::len);
    for k in 0..size {
        let p = (k..size)
            .find(|&r| !m[r][k].is_zero())
            .expect("reduced Laplacian of a connected graph is invertible");
        m.swap(k, p);
        let inv = m[k][k].recip();
        for x in m[k].iter_mut().skip(k) {
            *x *= &inv;
        }
        let pivot = m[k][k..width].to_vec();
        for (r, row) in m.iter_mut().enumerate().take(size) {
            if r == k || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for (x, p) in row[k..width].iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
        }
    }
}
