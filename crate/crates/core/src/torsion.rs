//! Torsion divisors on cycles: the principality criterion for elliptic
//! torsion, tropicalizations of elliptic curves by pairs of torsion
//! functions, and the genus-2 3-torsion function pair `f`, `g`.
//!
//! Torsion points are given by the components they reduce to: `Pᵢ ↦ Cᵢ`
//! with the origin `O ↦ C₀`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::metgraph::{self, Edge, GraphDivisor, LaplacianImage, MetricGraph};
use crate::tropfun::{
    self, GraphPoint, PiecewiseAffineFunction, Separation, TropClassification, TropFunError,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TorsionError {
    #[error("divisor has degree {0}, expected 0")]
    NonZeroDegree(BigInt),
    #[error("cycle length must be at least 2, got {0}")]
    CycleTooShort(usize),
    #[error("divisor {index} has {got} coefficients, expected {expected}")]
    WrongLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("divisor {0} is not principal on the cycle")]
    NotPrincipal(usize),
    #[error("e1 = {0} is not a positive multiple of 3")]
    E1NotMultipleOf3(usize),
    #[error("component index {index} out of range for e1 = {e1}")]
    IndexOutOfRange { index: usize, e1: usize },
    #[error("i + j = {sum} is not congruent to e1/3 = {third} mod {e1}")]
    InvalidConfig { sum: usize, third: usize, e1: usize },
    #[error(transparent)]
    Trop(#[from] TropFunError),
}

/// A divisor `Σ aᵢCᵢ` on an `N`-cycle of equal edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDivisorSpec {
    pub a: Vec<BigInt>,
    pub edge_length: BigRational,
}

impl CycleDivisorSpec {
    pub fn new(a: Vec<BigInt>) -> Result<Self, TorsionError> {
        if a.len() < 2 {
            return Err(TorsionError::CycleTooShort(a.len()));
        }
        Ok(CycleDivisorSpec {
            a,
            edge_length: BigRational::one(),
        })
    }

    pub fn from_i64(a: &[i64]) -> Result<Self, TorsionError> {
        Self::new(a.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `Σ mₖ Pₖ` with `Pₖ ↦ C_{k mod N}` (`P₀ = O`).
    pub fn from_points(n: usize, points: &[(i64, i64)]) -> Result<Self, TorsionError> {
        let mut a = vec![BigInt::zero(); n];
        for &(m, k) in points {
            a[k.rem_euclid(n as i64) as usize] += m;
        }
        Self::new(a)
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn degree(&self) -> BigInt {
        self.a.iter().sum()
    }

    pub fn divisor(&self) -> GraphDivisor {
        GraphDivisor(self.a.clone())
    }

    pub fn graph(&self) -> MetricGraph {
        MetricGraph::cycle(self.n(), self.edge_length.clone()).expect("n >= 2")
    }
}

/// `Σ i·aᵢ ≡ 0 (mod N)`.
pub fn check_cycle_principal(spec: &CycleDivisorSpec) -> Result<bool, TorsionError> {
    let deg = spec.degree();
    if !deg.is_zero() {
        return Err(TorsionError::NonZeroDegree(deg));
    }
    let moment: BigInt = spec
        .a
        .iter()
        .enumerate()
        .map(|(i, x)| x * BigInt::from(i))
        .sum();
    Ok(moment.is_multiple_of(&BigInt::from(spec.n())))
}

/// Heights on the unit `N`-cycle by the slope recursion
/// `mᵢ = mᵢ₋₁ − aᵢ`, `Σmᵢ = 0`, with `h₀ = 0`; `None` when `m₀` is not an
/// integer. Independent of the general Laplacian solver.
pub fn cycle_recursion_heights(a: &[i64]) -> Option<Vec<i64>> {
    let n = a.len() as i64;
    let weighted: i64 = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &x)| (n - k as i64) * x)
        .sum();
    if weighted % n != 0 {
        return None;
    }
    let mut m = weighted / n;
    let mut h = Vec::with_capacity(a.len());
    let mut cur = 0;
    for (i, &x) in a.iter().enumerate() {
        if i > 0 {
            m -= x;
        }
        h.push(cur);
        cur += m;
    }
    Some(h)
}

/// Formats `c·v(j)` as `"c*v(j)"`, e.g. `"-6/5*v(j)"`.
pub fn fmt_vj(c: &BigRational) -> String {
    format!("{}*v(j)", metgraph::fmt_rational(c))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticReport {
    pub n: usize,
    pub functions: Vec<PiecewiseAffineFunction>,
    pub expansions: Vec<BigInt>,
    /// The cycle length is `length_vj · v(j)`.
    pub length_vj: BigRational,
    pub classification: TropClassification,
}

/// Tropicalization of a Tate curve by functions with the given divisors on
/// the `N`-cycle of edge length `−v(j)/N`.
pub fn elliptic_trop(
    n: usize,
    divisors: &[CycleDivisorSpec],
) -> Result<EllipticReport, TorsionError> {
    if n < 2 {
        return Err(TorsionError::CycleTooShort(n));
    }
    let g = MetricGraph::cycle(n, BigRational::one()).expect("n >= 2");
    let mut functions = Vec::new();
    for (index, spec) in divisors.iter().enumerate() {
        if spec.n() != n {
            return Err(TorsionError::WrongLength {
                index,
                expected: n,
                got: spec.n(),
            });
        }
        if !check_cycle_principal(spec)? {
            return Err(TorsionError::NotPrincipal(index));
        }
        functions.push(tropfun::solve_function(&g, &spec.divisor())?);
    }
    let expansions = tropfun::expansion_factors(&functions)?;
    let combinatorial = tropfun::trop_length(&functions, None)?;
    let length_vj = -combinatorial / BigRational::from_integer(n.into());
    let classification = tropfun::classify_trop(&functions, None)?;
    Ok(EllipticReport {
        n,
        functions,
        expansions,
        length_vj,
        classification,
    })
}

/// Rest of a dumbbell skeleton: a bridge of `bridge` unit edges from `C₀` to
/// a second cycle of `e2` unit edges (`bridge = 0` glues the cycle at `C₀`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SecondPart {
    pub bridge: usize,
    pub e2: usize,
}

/// `P₁ ↦ Cᵢ`, `P₂ ↦ Cⱼ` on the first cycle `C₀ … C_{e1−1}`, `∞ ↦ C₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Genus2TorsionConfig {
    pub e1: usize,
    pub i: usize,
    pub j: usize,
    pub second: Option<SecondPart>,
}

impl Genus2TorsionConfig {
    pub fn new(e1: usize, i: usize, j: usize) -> Result<Self, TorsionError> {
        let cfg = Genus2TorsionConfig {
            e1,
            i,
            j,
            second: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_second(mut self, second: SecondPart) -> Self {
        self.second = Some(second);
        self
    }

    pub fn validate(&self) -> Result<(), TorsionError> {
        let e1 = self.e1;
        if e1 == 0 || !e1.is_multiple_of(3) {
            return Err(TorsionError::E1NotMultipleOf3(e1));
        }
        for index in [self.i, self.j] {
            if index >= e1 {
                return Err(TorsionError::IndexOutOfRange { index, e1 });
            }
        }
        if (self.i + self.j) % e1 != e1 / 3 {
            return Err(TorsionError::InvalidConfig {
                sum: self.i + self.j,
                third: e1 / 3,
                e1,
            });
        }
        Ok(())
    }

    /// All valid `(i, j)` for this `e1`.
    pub fn all_for(e1: usize) -> Vec<Genus2TorsionConfig> {
        (0..e1)
            .filter_map(|i| Genus2TorsionConfig::new(e1, i, (e1 / 3 + e1 - i) % e1).ok())
            .collect()
    }

    /// The skeleton: first cycle on vertices `0..e1` (edges `0..e1`), then the
    /// optional bridge and second cycle.
    pub fn graph(&self) -> MetricGraph {
        let one = BigRational::one();
        let e1 = self.e1;
        let mut genus = vec![0; e1];
        let mut labels: Vec<String> = (0..e1).map(|k| format!("C{k}")).collect();
        let mut edges: Vec<Edge> = (0..e1)
            .map(|k| Edge {
                a: k,
                b: (k + 1) % e1,
                length: one.clone(),
            })
            .collect();
        if let Some(SecondPart { bridge, e2 }) = self.second {
            let mut fresh = |prefix: &str, k: usize, genus: &mut Vec<u32>| {
                genus.push(0);
                labels.push(format!("{prefix}{k}"));
                genus.len() - 1
            };
            let mut prev = 0;
            for k in 1..=bridge {
                let v = fresh("B", k, &mut genus);
                edges.push(Edge {
                    a: prev,
                    b: v,
                    length: one.clone(),
                });
                prev = v;
            }
            let anchor = prev;
            for k in 1..e2 {
                let v = fresh("D", k, &mut genus);
                edges.push(Edge {
                    a: prev,
                    b: v,
                    length: one.clone(),
                });
                prev = v;
            }
            edges.push(Edge {
                a: prev,
                b: anchor,
                length: one.clone(),
            });
        }
        MetricGraph::with_labels(genus, labels, edges).expect("connected by construction")
    }
}

/// `div f = 2P₁ + 2P₂ − σP₁ − σP₂ − 2∞` and
/// `div g = 2σP₁ + 2σP₂ − P₁ − P₂ − 2∞`, specialized with `σPₖ ↦ C₋ₖ`.
pub fn genus2_divisor_pair(
    cfg: &Genus2TorsionConfig,
) -> Result<(CycleDivisorSpec, CycleDivisorSpec), TorsionError> {
    cfg.validate()?;
    let (e1, i, j) = (cfg.e1 as i64, cfg.i as i64, cfg.j as i64);
    let f = CycleDivisorSpec::from_points(
        cfg.e1,
        &[(2, i), (2, j), (-1, e1 - i), (-1, e1 - j), (-2, 0)],
    )?;
    let g = CycleDivisorSpec::from_points(
        cfg.e1,
        &[(2, e1 - i), (2, e1 - j), (-1, i), (-1, j), (-2, 0)],
    )?;
    Ok((f, g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus2Report {
    pub config: Genus2TorsionConfig,
    pub f: PiecewiseAffineFunction,
    pub g: PiecewiseAffineFunction,
    /// Slopes along the first cycle.
    pub slopes_f: Vec<BigInt>,
    pub slopes_g: Vec<BigInt>,
    pub expansions: Vec<BigInt>,
    pub length: BigRational,
    pub separation: Separation,
}

impl Genus2Report {
    pub fn separated(&self) -> bool {
        self.separation.separated
    }

    /// `(F(x), G(x))` for both witness points.
    pub fn witness_values(&self) -> Option<[(BigRational, BigRational); 2]> {
        let (a, b) = self.separation.witness.as_ref()?;
        let at = |p: &GraphPoint| (self.f.eval(p), self.g.eval(p));
        Some([at(a), at(b)])
    }
}

pub fn genus2_trop(cfg: &Genus2TorsionConfig) -> Result<Genus2Report, TorsionError> {
    let (fs, gs) = genus2_divisor_pair(cfg)?;
    let graph = cfg.graph();
    let extend = |s: &CycleDivisorSpec| {
        let mut a = s.a.clone();
        a.resize(graph.vertex_count(), BigInt::zero());
        GraphDivisor(a)
    };
    let f = tropfun::solve_function(&graph, &extend(&fs))?;
    let g = tropfun::solve_function(&graph, &extend(&gs))?;
    let first: Vec<usize> = (0..cfg.e1).collect();
    let pair = [f, g];
    let expansions = first
        .iter()
        .map(|&e| tropfun::expansion_factor(e, &pair))
        .collect();
    let length = tropfun::trop_length(&pair, Some(&first))?;
    let separation = tropfun::separates_points(&pair, Some(&first))?;
    let [f, g] = pair;
    Ok(Genus2Report {
        config: *cfg,
        slopes_f: first.iter().map(|&e| f.slope(e)).collect(),
        slopes_g: first.iter().map(|&e| g.slope(e)).collect(),
        f,
        g,
        expansions,
        length,
        separation,
    })
}

/// `G`'s heights on the first cycle are `F`'s read backwards: `G(Cₖ) = F(C₋ₖ)`.
pub fn reflection_symmetric(report: &Genus2Report) -> bool {
    let e1 = report.config.e1;
    (0..e1).all(|k| report.g.heights()[k] == report.f.heights()[(e1 - k) % e1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeCounterexample {
    pub config: Genus2TorsionConfig,
    pub edge: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub e1_max: usize,
    pub configurations: usize,
    /// Configurations whose `F`, `G` separate points of the first cycle.
    pub separated: usize,
    pub non_separated: Vec<Genus2TorsionConfig>,
    pub counterexamples: Vec<SlopeCounterexample>,
}

/// Checks, for every `e1 ≤ e1_max` divisible by 3 and every valid `(i, j)`,
/// that each edge of the first cycle has a nonzero slope of `F` or `G`.
pub fn nonzero_slope_scan(e1_max: usize) -> Result<ScanReport, TorsionError> {
    let configs: Vec<Genus2TorsionConfig> = (3..=e1_max)
        .step_by(3)
        .flat_map(Genus2TorsionConfig::all_for)
        .collect();
    let results: Vec<Genus2Report> = configs
        .par_iter()
        .map(genus2_trop)
        .collect::<Result<_, _>>()?;
    let mut counterexamples = Vec::new();
    let mut non_separated = Vec::new();
    for r in &results {
        for (edge, m) in r.expansions.iter().enumerate() {
            if m.is_zero() {
                counterexamples.push(SlopeCounterexample {
                    config: r.config,
                    edge,
                });
            }
        }
        if !r.separated() {
            non_separated.push(r.config);
        }
    }
    Ok(ScanReport {
        e1_max,
        configurations: results.len(),
        separated: results.len() - non_separated.len(),
        non_separated,
        counterexamples,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub divisors: u64,
    pub principal: u64,
    /// Divisors on which the three tests disagree (first few only).
    pub disagreements: Vec<Vec<i64>>,
    pub disagreement_count: u64,
}

impl EquivalenceReport {
    fn merge(mut self, other: EquivalenceReport) -> EquivalenceReport {
        self.divisors += other.divisors;
        self.principal += other.principal;
        self.disagreement_count += other.disagreement_count;
        self.disagreements.extend(other.disagreements);
        self.disagreements.truncate(16);
        self
    }
}

struct Walk<'a> {
    n: usize,
    bound: i64,
    det: i64,
    /// `cols[v]`: column `v` of the reduced-Laplacian adjugate.
    cols: &'a [Vec<i64>],
}

impl Walk<'_> {
    fn leaf(&self, a: &[i64], acc: &[i64], moment: i64, out: &mut EquivalenceReport) {
        let criterion = moment.rem_euclid(self.n as i64) == 0;
        let image = acc.iter().all(|x| x % self.det == 0);
        let recursion = cycle_recursion_heights(a).is_some_and(|h| {
            // Δh = a, checked directly.
            (0..self.n).all(|v| {
                let prev = h[(v + self.n - 1) % self.n];
                let next = h[(v + 1) % self.n];
                2 * h[v] - prev - next == a[v]
            })
        });
        out.divisors += 1;
        if criterion {
            out.principal += 1;
        }
        if criterion != image || criterion != recursion {
            out.disagreement_count += 1;
            if out.disagreements.len() < 16 {
                out.disagreements.push(a.to_vec());
            }
        }
    }

    fn go(
        &self,
        a: &mut Vec<i64>,
        acc: &mut Vec<i64>,
        sum: i64,
        moment: i64,
        out: &mut EquivalenceReport,
    ) {
        let k = a.len();
        let remaining = (self.n - k) as i64;
        if k == self.n - 1 {
            let last = -sum;
            if last.abs() > self.bound {
                return;
            }
            a.push(last);
            for (x, c) in acc.iter_mut().zip(&self.cols[k]) {
                *x += last * c;
            }
            self.leaf(a, acc, moment + last * k as i64, out);
            for (x, c) in acc.iter_mut().zip(&self.cols[k]) {
                *x -= last * c;
            }
            a.pop();
            return;
        }
        for x in -self.bound..=self.bound {
            let s = sum + x;
            if s.abs() > self.bound * (remaining - 1) {
                continue;
            }
            a.push(x);
            for (y, c) in acc.iter_mut().zip(&self.cols[k]) {
                *y += x * c;
            }
            self.go(a, acc, s, moment + x * k as i64, out);
            for (y, c) in acc.iter_mut().zip(&self.cols[k]) {
                *y -= x * c;
            }
            a.pop();
        }
    }
}

/// Exhaustively compares, on the `n`-cycle and all degree-0 divisors with
/// `|aᵢ| ≤ bound`: the moment criterion `Σ i·aᵢ ≡ 0 (mod n)`, membership in
/// the Laplacian image, and success of the slope recursion.
pub fn principality_equivalence(n: usize, bound: i64) -> EquivalenceReport {
    assert!(n >= 2);
    let g = MetricGraph::cycle(n, BigRational::one()).expect("n >= 2");
    let img = LaplacianImage::new(&g);
    let to_i64 = |x: &BigInt| x.to_i64().expect("small cycle adjugate fits in i64");
    let det = to_i64(img.det());
    let cols: Vec<Vec<i64>> = (0..n)
        .map(|v| img.column(v).iter().map(to_i64).collect())
        .collect();
    let walk = Walk {
        n,
        bound,
        det,
        cols: &cols,
    };
    (-bound..=bound)
        .into_par_iter()
        .map(|first| {
            let mut out = EquivalenceReport::default();
            let mut a = vec![first];
            let mut acc = vec![0; n - 1];
            walk.go(&mut a, &mut acc, first, 0, &mut out);
            out
        })
        .reduce(EquivalenceReport::default, EquivalenceReport::merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn moment_criterion_examples() {
        let yes = CycleDivisorSpec::from_i64(&[-2, 2, 1, 0, -1]).unwrap();
        assert!(check_cycle_principal(&yes).unwrap());
        let no = CycleDivisorSpec::from_i64(&[1, -1, 0, 0, 0]).unwrap();
        assert!(!check_cycle_principal(&no).unwrap());
        let seven = CycleDivisorSpec::from_i64(&[-1, 1, 1, 1, 1, -1, -2]).unwrap();
        assert!(check_cycle_principal(&seven).unwrap());
        let bad = CycleDivisorSpec::from_i64(&[1, 0, 0]).unwrap();
        assert_eq!(
            check_cycle_principal(&bad),
            Err(TorsionError::NonZeroDegree(BigInt::from(1)))
        );
    }

    #[test]
    fn from_points_specializes() {
        let f = CycleDivisorSpec::from_points(5, &[(2, 1), (1, 2), (-1, 4), (-2, 0)]).unwrap();
        assert_eq!(f.a, ints(&[-2, 2, 1, 0, -1]));
    }

    #[test]
    fn recursion_heights() {
        assert_eq!(
            cycle_recursion_heights(&[-2, 2, 1, 0, -1]),
            Some(vec![0, 2, 2, 1, 0])
        );
        assert_eq!(cycle_recursion_heights(&[1, -1, 0, 0, 0]), None);
    }

    #[test]
    fn elliptic_n5() {
        let f = CycleDivisorSpec::from_points(5, &[(2, 1), (1, 2), (-1, 4), (-2, 0)]).unwrap();
        let g = CycleDivisorSpec::from_points(5, &[(-1, 1), (2, 3), (-1, 0)]).unwrap();
        let r = elliptic_trop(5, &[f, g]).unwrap();
        assert_eq!(r.expansions, ints(&[2, 1, 1, 1, 1]));
        assert_eq!(r.length_vj, q(-6, 5));
        assert_eq!(fmt_vj(&r.length_vj), "-6/5*v(j)");
        assert_eq!(r.functions[1].slopes(), ints(&[0, 1, 1, -1, -1]));
    }

    #[test]
    fn elliptic_rejects_non_principal() {
        let bad = CycleDivisorSpec::from_i64(&[1, -1, 0, 0, 0]).unwrap();
        assert_eq!(elliptic_trop(5, &[bad]), Err(TorsionError::NotPrincipal(0)));
    }

    #[test]
    fn genus2_divisors() {
        let cfg = Genus2TorsionConfig::new(9, 7, 5).unwrap();
        let (f, g) = genus2_divisor_pair(&cfg).unwrap();
        assert_eq!(f.a, ints(&[-2, 0, -1, 0, -1, 2, 0, 2, 0]));
        assert_eq!(g.a, ints(&[-2, 0, 2, 0, 2, -1, 0, -1, 0]));
        let (f, _) = genus2_divisor_pair(&Genus2TorsionConfig::new(9, 8, 4).unwrap()).unwrap();
        assert_eq!(f.a, ints(&[-2, -1, 0, 0, 2, -1, 0, 0, 2]));
    }

    #[test]
    fn genus2_invalid_configs() {
        assert!(matches!(
            Genus2TorsionConfig::new(3, 0, 0),
            Err(TorsionError::InvalidConfig { .. })
        ));
        assert!(matches!(
            Genus2TorsionConfig::new(3, 1, 1),
            Err(TorsionError::InvalidConfig { .. })
        ));
        assert_eq!(
            Genus2TorsionConfig::new(8, 1, 1),
            Err(TorsionError::E1NotMultipleOf3(8))
        );
        assert_eq!(Genus2TorsionConfig::all_for(3).len(), 3);
    }

    #[test]
    fn genus2_separating_example() {
        let r = genus2_trop(&Genus2TorsionConfig::new(9, 7, 5).unwrap()).unwrap();
        assert!(r.separated());
        assert_eq!(r.length, BigRational::from_integer(14.into()));
        assert_eq!(r.slopes_f, ints(&[0, 0, 1, 1, 2, 0, 0, -2, -2]));
        assert_eq!(r.slopes_g, ints(&[2, 2, 0, 0, -2, -1, -1, 0, 0]));
        assert!(reflection_symmetric(&r));
    }

    #[test]
    fn genus2_second_part_is_flat() {
        let cfg = Genus2TorsionConfig::new(9, 7, 5)
            .unwrap()
            .with_second(SecondPart { bridge: 2, e2: 4 });
        let r = genus2_trop(&cfg).unwrap();
        assert_eq!(r.f.graph().total_genus(), 2);
        assert!(r.f.heights()[9..].iter().all(Zero::is_zero));
        assert!(r.separated());
        assert_eq!(r.length, BigRational::from_integer(14.into()));
    }

    #[test]
    fn small_equivalence_scan() {
        for n in 2..=6 {
            let r = principality_equivalence(n, 2);
            assert_eq!(r.disagreement_count, 0, "n = {n}: {:?}", r.disagreements);
            assert!(r.principal > 0);
        }
    }

    #[test]
    fn tiny_slope_scan() {
        let r = nonzero_slope_scan(9).unwrap();
        assert_eq!(r.configurations, 3 + 6 + 9);
        assert!(r.counterexamples.is_empty());
    }
}
