//! Stable reduction types of genus-2 curves from tropical Igusa invariants.
//!
//! [`w_table`] evaluates the weight-0 linear forms, [`classify`] decides the
//! reduction type, [`thickness`] computes edge thicknesses and the component
//! group, and [`skeleton_graph`] builds the metric dual graph.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::igusa::TropIgusa;
use crate::metgraph::{AbelianGroup, Edge, MetricGraph};
use crate::valfield::{ext_combine, ExtRat};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RedTypeError {
    #[error("no reduction type predicate holds")]
    NoCaseMatches,
    #[error("several reduction type predicates hold: {0:?}")]
    Ambiguous(Vec<ReductionType>),
    #[error("thickness {name} = {value} is not positive")]
    NonPositiveThickness { name: &'static str, value: String },
    #[error("thickness {0} is not finite (a required invariant vanishes)")]
    InfiniteThickness(&'static str),
    #[error("v(J10) must be finite")]
    InfiniteDiscriminant,
    #[error("{0:?} expects {1} thicknesses")]
    WrongArity(ReductionType, usize),
}

/// `ε ∈ {1, 3, 4}`, chosen by the residue characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Epsilon {
    One,
    Three,
    Four,
}

impl Epsilon {
    pub fn from_residue_char(p: u64) -> Self {
        match p {
            2 => Epsilon::Four,
            3 => Epsilon::Three,
            _ => Epsilon::One,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Epsilon::One => 1,
            Epsilon::Three => 3,
            Epsilon::Four => 4,
        }
    }

    /// `v(I_{2ε})`: `I2`, `I6` or `I8`.
    pub fn vi2eps(self, tv: &TropIgusa) -> &ExtRat {
        match self {
            Epsilon::One => &tv.vi2,
            Epsilon::Three => &tv.vi6,
            Epsilon::Four => &tv.vi8,
        }
    }
}

pub fn epsilon(residue_char: u64) -> Epsilon {
    Epsilon::from_residue_char(residue_char)
}

/// Linear form with integer coefficients over extended values.
fn lin(terms: &[(i64, &ExtRat)]) -> ExtRat {
    let t: Vec<(BigRational, ExtRat)> = terms
        .iter()
        .map(|(c, v)| (BigRational::from_integer((*c).into()), (*v).clone()))
        .collect();
    ext_combine(&t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WTable {
    /// `w1[i-1] = w_{1,i}` for `i = 1..=5`; likewise for `w2`, `w3`, `w4`.
    pub w1: [ExtRat; 5],
    pub w2: [ExtRat; 5],
    pub w2x: ExtRat,
    pub w3: [ExtRat; 5],
    pub w3x: ExtRat,
    pub w3y1: ExtRat,
    pub w3y2: ExtRat,
    pub w4: [ExtRat; 5],
    pub w2c1: ExtRat,
    pub w2c2: ExtRat,
    pub w2c3: ExtRat,
    pub w5_1: ExtRat,
    pub w5_2: ExtRat,
    pub w6_1: ExtRat,
    pub w6_2: ExtRat,
    pub w7_1: ExtRat,
    pub w7_2: ExtRat,
}

impl WTable {
    /// `(name, value)` pairs in a fixed order.
    pub fn named(&self) -> Vec<(String, &ExtRat)> {
        let mut out = Vec::new();
        for (tag, arr) in [("w1", &self.w1), ("w2", &self.w2)] {
            for (i, v) in arr.iter().enumerate() {
                out.push((format!("{tag}_{}", i + 1), v));
            }
        }
        out.push(("w2x".into(), &self.w2x));
        for (i, v) in self.w3.iter().enumerate() {
            out.push((format!("w3_{}", i + 1), v));
        }
        out.push(("w3x".into(), &self.w3x));
        out.push(("w3y1".into(), &self.w3y1));
        out.push(("w3y2".into(), &self.w3y2));
        for (i, v) in self.w4.iter().enumerate() {
            out.push((format!("w4_{}", i + 1), v));
        }
        for (name, v) in [
            ("w2c1", &self.w2c1),
            ("w2c2", &self.w2c2),
            ("w2c3", &self.w2c3),
            ("w5_1", &self.w5_1),
            ("w5_2", &self.w5_2),
            ("w6_1", &self.w6_1),
            ("w6_2", &self.w6_2),
            ("w7_1", &self.w7_1),
            ("w7_2", &self.w7_2),
        ] {
            out.push((name.into(), v));
        }
        out
    }
}

pub fn w_table(tv: &TropIgusa, eps: Epsilon) -> WTable {
    let e = eps.value();
    let i2e = eps.vi2eps(tv);
    let w1 = std::array::from_fn(|k| lin(&[(5, tv.vj(k + 1)), (-(k as i64 + 1), &tv.vj10)]));
    let w2 = std::array::from_fn(|k| lin(&[(6, tv.vj(k + 1)), (-(k as i64 + 1), &tv.vi12)]));
    let w3: [ExtRat; 5] =
        std::array::from_fn(|k| lin(&[(2, tv.vj(k + 1)), (-(k as i64 + 1), &tv.vi4)]));
    WTable {
        w1,
        w2,
        w2x: lin(&[(6, &tv.vj10), (-5, &tv.vi12)]),
        w4: w3.clone(),
        w3,
        w3x: lin(&[(1, &tv.vi12), (-3, &tv.vi4)]),
        w3y1: lin(&[(1, &tv.vj4), (-1, &tv.vi4)]),
        w3y2: lin(&[(2, &tv.vj6), (-3, &tv.vi4)]),
        w2c1: lin(&[(e, &tv.vi4), (-2, i2e)]),
        w2c2: lin(&[(e, &tv.vj10), (-5, i2e)]),
        w2c3: lin(&[(e, &tv.vi12), (-6, i2e)]),
        w5_1: lin(&[(3 * e, &tv.vi4), (-e, &tv.vj10), (-1, i2e)]),
        w5_2: lin(&[(e, &tv.vi12), (-e, &tv.vj10), (-1, i2e)]),
        w6_1: lin(&[(3, &tv.vi4), (-1, &tv.vi12)]),
        w6_2: lin(&[(e, &tv.vj10), (1, i2e), (-e, &tv.vi12)]),
        w7_1: lin(&[(-3, &tv.vi4), (1, &tv.vi12)]),
        w7_2: lin(&[(e, &tv.vj10), (1, i2e), (-3 * e, &tv.vi4)]),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionType {
    Smooth,
    SingleDoublePoint,
    DoubleDoublePoint,
    Chestnut,
    TwoEllipticCurves,
    EllipticPlusSingularLine,
    TwoSingularLines,
}

impl ReductionType {
    pub const ALL: [ReductionType; 7] = [
        ReductionType::Smooth,
        ReductionType::SingleDoublePoint,
        ReductionType::DoubleDoublePoint,
        ReductionType::Chestnut,
        ReductionType::TwoEllipticCurves,
        ReductionType::EllipticPlusSingularLine,
        ReductionType::TwoSingularLines,
    ];

    /// Type number `1..=7`.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            ReductionType::Smooth => "Smooth",
            ReductionType::SingleDoublePoint => "SingleDoublePoint",
            ReductionType::DoubleDoublePoint => "DoubleDoublePoint",
            ReductionType::Chestnut => "Chestnut",
            ReductionType::TwoEllipticCurves => "TwoEllipticCurves",
            ReductionType::EllipticPlusSingularLine => "EllipticPlusSingularLine",
            ReductionType::TwoSingularLines => "TwoSingularLines",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }

    /// Number of thickness parameters.
    pub fn arity(self) -> usize {
        match self {
            ReductionType::Smooth => 0,
            ReductionType::SingleDoublePoint | ReductionType::TwoEllipticCurves => 1,
            ReductionType::DoubleDoublePoint | ReductionType::EllipticPlusSingularLine => 2,
            ReductionType::Chestnut | ReductionType::TwoSingularLines => 3,
        }
    }
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How the non-strict inequalities on `w2x` and `w3x` are read.
///
/// `AsPrinted` uses `w2x ≥ 0` and `w3x ≥ 0`. Under that reading a curve with
/// good reduction (all valuations 0) also satisfies the single-double-point
/// conditions, and a single node satisfies the double-double-point ones.
/// `Strict` uses `w2x > 0` and `w3x > 0`, which makes the seven cases disjoint
/// on every curve we have tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PredicateReading {
    #[default]
    Strict,
    AsPrinted,
}

fn holds(w: &WTable, t: ReductionType, reading: PredicateReading) -> bool {
    let gap = |x: &ExtRat| match reading {
        PredicateReading::Strict => x.is_pos(),
        PredicateReading::AsPrinted => x.is_nonneg(),
    };
    let two_components = w.w2c1.is_pos() && w.w2c2.is_pos() && w.w2c3.is_pos();
    match t {
        ReductionType::Smooth => w.w1.iter().all(ExtRat::is_nonneg),
        ReductionType::SingleDoublePoint => w.w2.iter().all(ExtRat::is_nonneg) && gap(&w.w2x),
        ReductionType::DoubleDoublePoint => {
            w.w3.iter().all(ExtRat::is_nonneg)
                && w.w3[4].is_pos()
                && gap(&w.w3x)
                && (w.w3y1.is_zero() || w.w3y2.is_zero())
        }
        ReductionType::Chestnut => w.w4[1..].iter().all(ExtRat::is_pos),
        ReductionType::TwoEllipticCurves => {
            two_components && w.w5_1.is_nonneg() && w.w5_2.is_nonneg()
        }
        ReductionType::EllipticPlusSingularLine => {
            two_components && w.w6_1.is_nonneg() && w.w6_2.is_pos()
        }
        ReductionType::TwoSingularLines => two_components && w.w7_1.is_pos() && w.w7_2.is_pos(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub rtype: ReductionType,
    pub matched_cases: Vec<ReductionType>,
    pub ambiguous: bool,
    pub reading: PredicateReading,
}

pub fn classify(w: &WTable) -> Result<ReductionVerdict, RedTypeError> {
    classify_with(w, PredicateReading::default())
}

/// Evaluates every case predicate; the first match in [`ReductionType::ALL`]
/// order is reported and `ambiguous` records whether more than one held.
pub fn classify_with(
    w: &WTable,
    reading: PredicateReading,
) -> Result<ReductionVerdict, RedTypeError> {
    let matched: Vec<ReductionType> = ReductionType::ALL
        .into_iter()
        .filter(|&t| holds(w, t, reading))
        .collect();
    let rtype = *matched.first().ok_or(RedTypeError::NoCaseMatches)?;
    Ok(ReductionVerdict {
        rtype,
        ambiguous: matched.len() != 1,
        matched_cases: matched,
        reading,
    })
}

/// Edge thicknesses, one variant per reduction type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Thicknesses {
    Smooth,
    SingleDoublePoint {
        e: BigRational,
    },
    DoubleDoublePoint {
        e1: BigRational,
        e2: BigRational,
    },
    Chestnut {
        e1: BigRational,
        e2: BigRational,
        e3: BigRational,
    },
    TwoEllipticCurves {
        e: BigRational,
    },
    EllipticPlusSingularLine {
        e0: BigRational,
        e1: BigRational,
    },
    TwoSingularLines {
        e0: BigRational,
        e1: BigRational,
        e2: BigRational,
    },
}

impl Thicknesses {
    /// Builds from a flat list in the order of [`Thicknesses::named`].
    /// Loop and parallel-edge lengths are sorted ascending.
    pub fn from_values(
        t: ReductionType,
        vals: &[BigRational],
    ) -> Result<Thicknesses, RedTypeError> {
        if vals.len() != t.arity() {
            return Err(RedTypeError::WrongArity(t, t.arity()));
        }
        let mut v = vals.to_vec();
        let th = match t {
            ReductionType::Smooth => Thicknesses::Smooth,
            ReductionType::SingleDoublePoint => Thicknesses::SingleDoublePoint { e: v.remove(0) },
            ReductionType::DoubleDoublePoint => {
                v.sort();
                Thicknesses::DoubleDoublePoint {
                    e1: v[0].clone(),
                    e2: v[1].clone(),
                }
            }
            ReductionType::Chestnut => {
                v.sort();
                Thicknesses::Chestnut {
                    e1: v[0].clone(),
                    e2: v[1].clone(),
                    e3: v[2].clone(),
                }
            }
            ReductionType::TwoEllipticCurves => Thicknesses::TwoEllipticCurves { e: v.remove(0) },
            ReductionType::EllipticPlusSingularLine => Thicknesses::EllipticPlusSingularLine {
                e0: v[0].clone(),
                e1: v[1].clone(),
            },
            ReductionType::TwoSingularLines => {
                v[1..].sort();
                Thicknesses::TwoSingularLines {
                    e0: v[0].clone(),
                    e1: v[1].clone(),
                    e2: v[2].clone(),
                }
            }
        };
        for (name, x) in th.named() {
            if !x.is_positive() {
                return Err(RedTypeError::NonPositiveThickness {
                    name,
                    value: x.to_string(),
                });
            }
        }
        Ok(th)
    }

    pub fn rtype(&self) -> ReductionType {
        match self {
            Thicknesses::Smooth => ReductionType::Smooth,
            Thicknesses::SingleDoublePoint { .. } => ReductionType::SingleDoublePoint,
            Thicknesses::DoubleDoublePoint { .. } => ReductionType::DoubleDoublePoint,
            Thicknesses::Chestnut { .. } => ReductionType::Chestnut,
            Thicknesses::TwoEllipticCurves { .. } => ReductionType::TwoEllipticCurves,
            Thicknesses::EllipticPlusSingularLine { .. } => ReductionType::EllipticPlusSingularLine,
            Thicknesses::TwoSingularLines { .. } => ReductionType::TwoSingularLines,
        }
    }

    pub fn named(&self) -> Vec<(&'static str, &BigRational)> {
        match self {
            Thicknesses::Smooth => vec![],
            Thicknesses::SingleDoublePoint { e } | Thicknesses::TwoEllipticCurves { e } => {
                vec![("e", e)]
            }
            Thicknesses::DoubleDoublePoint { e1, e2 } => vec![("e1", e1), ("e2", e2)],
            Thicknesses::Chestnut { e1, e2, e3 } => vec![("e1", e1), ("e2", e2), ("e3", e3)],
            Thicknesses::EllipticPlusSingularLine { e0, e1 } => vec![("e0", e0), ("e1", e1)],
            Thicknesses::TwoSingularLines { e0, e1, e2 } => {
                vec![("e0", e0), ("e1", e1), ("e2", e2)]
            }
        }
    }

    /// lcm of the thickness denominators: the ramification degree needed to
    /// make every thickness integral.
    pub fn extension_degree(&self) -> BigInt {
        self.named()
            .into_iter()
            .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()))
    }

    /// Closed-form component group over the extension of degree
    /// [`extension_degree`](Self::extension_degree).
    pub fn component_group(&self) -> AbelianGroup {
        let d = BigRational::from_integer(self.extension_degree());
        let n = |x: &BigRational| (x * &d).to_integer();
        match self {
            Thicknesses::Smooth | Thicknesses::TwoEllipticCurves { .. } => AbelianGroup::trivial(),
            Thicknesses::SingleDoublePoint { e } => AbelianGroup::from_cyclic(&[n(e)]),
            Thicknesses::EllipticPlusSingularLine { e1, .. } => AbelianGroup::from_cyclic(&[n(e1)]),
            Thicknesses::DoubleDoublePoint { e1, e2 }
            | Thicknesses::TwoSingularLines { e1, e2, .. } => {
                AbelianGroup::from_cyclic(&[n(e1), n(e2)])
            }
            Thicknesses::Chestnut { e1, e2, e3 } => {
                let (a, b, c) = (n(e1), n(e2), n(e3));
                let d1 = a.gcd(&b).gcd(&c);
                let d2 = (&a * &b + &b * &c + &a * &c) / &d1;
                AbelianGroup::from_cyclic(&[d1, d2])
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonData {
    pub thicknesses: Thicknesses,
    pub component_group: AbelianGroup,
    pub dual_graph: MetricGraph,
    pub integral_over_k: bool,
    /// Degree of the extension over which the thicknesses become integral.
    pub extension_degree: BigInt,
    /// Interpretive choices that entered the computation.
    pub notes: Vec<String>,
}

impl SkeletonData {
    pub fn rtype(&self) -> ReductionType {
        self.thicknesses.rtype()
    }
}

fn finite(name: &'static str, x: ExtRat) -> Result<BigRational, RedTypeError> {
    match x {
        ExtRat::Finite(q) => Ok(q),
        _ => Err(RedTypeError::InfiniteThickness(name)),
    }
}

fn scaled(x: ExtRat, num: i64, den: i64) -> ExtRat {
    x.scale(&BigRational::new(num.into(), den.into()))
}

/// Thicknesses and component group of an unambiguous verdict.
pub fn thickness(
    verdict: &ReductionVerdict,
    tv: &TropIgusa,
    eps: Epsilon,
) -> Result<SkeletonData, RedTypeError> {
    if verdict.ambiguous {
        return Err(RedTypeError::Ambiguous(verdict.matched_cases.clone()));
    }
    if !tv.vj10.is_finite() {
        return Err(RedTypeError::InfiniteDiscriminant);
    }
    let w = w_table(tv, eps);
    let e = eps.value();
    let i2e = eps.vi2eps(tv);
    let mut notes = Vec::new();
    let vals: Vec<BigRational> = match verdict.rtype {
        ReductionType::Smooth => vec![],
        ReductionType::SingleDoublePoint => vec![finite("e", scaled(w.w2x, 1, 6))?],
        ReductionType::DoubleDoublePoint => {
            let e1 = finite("e1", w.w3x.clone().min(scaled(w.w3[4].clone(), 1, 4)))?;
            let e2 = finite("e2", scaled(w.w3[4].clone(), 1, 2))? - &e1;
            vec![e1, e2]
        }
        ReductionType::Chestnut => {
            notes.push("chestnut: n = v(I12) - 6 v(J2)".to_string());
            let l = finite("l", lin(&[(1, &tv.vj10), (-5, &tv.vj2)]))?;
            let n = lin(&[(1, &tv.vi12), (-6, &tv.vj2)]);
            let m = lin(&[(1, &tv.vj4), (-2, &tv.vj2)]);
            let l3 = ExtRat::Finite(&l / BigRational::from_integer(3.into()));
            let e1 = finite("e1", l3.min(scaled(n.clone(), 1, 2)).min(m))?;
            let rest = ExtRat::Finite((&l - &e1) / BigRational::from_integer(2.into()));
            let n_minus = ext_combine(&[
                (BigRational::one(), n),
                (-BigRational::one(), ExtRat::Finite(e1.clone())),
            ]);
            let e2 = finite("e2", rest.min(n_minus))?;
            let e3 = &l - &e1 - &e2;
            vec![e1, e2, e3]
        }
        ReductionType::TwoEllipticCurves => {
            notes.push("two elliptic curves: e = (eps v(J10) - 5 v(I2eps)) / (12 eps)".to_string());
            vec![finite("e", scaled(w.w2c2, 1, 12 * e))?]
        }
        ReductionType::EllipticPlusSingularLine => {
            let e0 = finite("e0", scaled(w.w2c3.clone(), 1, 12 * e))?;
            let e1 = finite(
                "e1",
                scaled(lin(&[(e, &tv.vj10), (1, i2e), (-e, &tv.vi12)]), 1, e),
            )?;
            vec![e0, e1]
        }
        ReductionType::TwoSingularLines => {
            let e0 = finite("e0", scaled(w.w2c1.clone(), 1, 4 * e))?;
            let e1 = finite("e1", w.w7_1.clone().min(scaled(w.w7_2.clone(), 1, 2 * e)))?;
            let e2 = finite("e2", scaled(w.w7_2.clone(), 1, e))? - &e1;
            vec![e0, e1, e2]
        }
    };
    let mut data = from_thicknesses(Thicknesses::from_values(verdict.rtype, &vals)?);
    if let PredicateReading::Strict = verdict.reading {
        notes.push("predicates: w2x > 0 and w3x > 0 (strict)".to_string());
    }
    data.notes.extend(notes);
    Ok(data)
}

/// Component group and dual graph for given thicknesses.
pub fn from_thicknesses(th: Thicknesses) -> SkeletonData {
    let d = th.extension_degree();
    let mut notes = Vec::new();
    if !d.is_one() {
        notes.push(format!(
            "thicknesses are integral only after a ramified extension of degree {d}; the component group is computed there"
        ));
    }
    SkeletonData {
        component_group: th.component_group(),
        dual_graph: skeleton_graph(&th),
        integral_over_k: d.is_one(),
        extension_degree: d,
        thicknesses: th,
        notes,
    }
}

/// The metric dual graph of the special fibre.
pub fn skeleton_graph(th: &Thicknesses) -> MetricGraph {
    let edge = |a, b, l: &BigRational| Edge {
        a,
        b,
        length: l.clone(),
    };
    let (genus, labels, edges): (Vec<u32>, Vec<&str>, Vec<Edge>) = match th {
        Thicknesses::Smooth => (vec![2], vec!["C"], vec![]),
        Thicknesses::SingleDoublePoint { e } => (vec![1], vec!["C"], vec![edge(0, 0, e)]),
        Thicknesses::DoubleDoublePoint { e1, e2 } => {
            (vec![0], vec!["C"], vec![edge(0, 0, e1), edge(0, 0, e2)])
        }
        Thicknesses::Chestnut { e1, e2, e3 } => (
            vec![0, 0],
            vec!["L1", "L2"],
            vec![edge(0, 1, e1), edge(0, 1, e2), edge(0, 1, e3)],
        ),
        Thicknesses::TwoEllipticCurves { e } => (vec![1, 1], vec!["E1", "E2"], vec![edge(0, 1, e)]),
        Thicknesses::EllipticPlusSingularLine { e0, e1 } => (
            vec![1, 0],
            vec!["E", "L"],
            vec![edge(0, 1, e0), edge(1, 1, e1)],
        ),
        Thicknesses::TwoSingularLines { e0, e1, e2 } => (
            vec![0, 0],
            vec!["L1", "L2"],
            vec![edge(0, 0, e1), edge(0, 1, e0), edge(1, 1, e2)],
        ),
    };
    let labels = labels.into_iter().map(String::from).collect();
    MetricGraph::with_labels(genus, labels, edges).expect("skeleton graphs are connected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metgraph::graph_jacobian;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn epsilon_cases() {
        assert_eq!(epsilon(7), Epsilon::One);
        assert_eq!(epsilon(3), Epsilon::Three);
        assert_eq!(epsilon(2), Epsilon::Four);
        assert_eq!(epsilon(0), Epsilon::One);
    }

    #[test]
    fn zero_valuations_give_zero_table() {
        let w = w_table(&TropIgusa::zero(), Epsilon::One);
        assert!(w.named().iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn w2x_substitution() {
        let mut tv = TropIgusa::zero();
        tv.vj10 = ExtRat::int(6);
        tv.vi12 = ExtRat::int(5);
        assert_eq!(w_table(&tv, Epsilon::One).w2x, ExtRat::int(11));
    }

    #[test]
    fn infinite_j4_absorbs() {
        let mut tv = TropIgusa::zero();
        tv.vj4 = ExtRat::Infinity;
        let w = w_table(&tv, Epsilon::One);
        assert_eq!(w.w3y1, ExtRat::Infinity);
        assert_eq!(w.w1[1], ExtRat::Infinity);
    }

    #[test]
    fn w7_1_negates_w6_1() {
        let mut tv = TropIgusa::zero();
        tv.vi4 = ExtRat::int(2);
        tv.vi12 = ExtRat::ratio(1, 2);
        let w = w_table(&tv, Epsilon::Three);
        assert_eq!(w.w7_1, lin(&[(-1, &w.w6_1)]));
        assert_eq!(w.w4, w.w3);
    }

    #[test]
    fn good_reduction_is_smooth_only_under_strict_reading() {
        let w = w_table(&TropIgusa::zero(), Epsilon::One);
        let v = classify(&w).unwrap();
        assert_eq!(v.rtype, ReductionType::Smooth);
        assert!(!v.ambiguous);
        let printed = classify_with(&w, PredicateReading::AsPrinted).unwrap();
        assert_eq!(printed.rtype, ReductionType::Smooth);
        assert_eq!(
            printed.matched_cases,
            vec![ReductionType::Smooth, ReductionType::SingleDoublePoint]
        );
        assert!(printed.ambiguous);
    }

    #[test]
    fn single_double_point_thickness() {
        let th = Thicknesses::from_values(ReductionType::SingleDoublePoint, &[q(1)]).unwrap();
        assert!(th.component_group().is_trivial());
        let mut tv = TropIgusa::zero();
        tv.vj10 = ExtRat::int(1);
        let w = w_table(&tv, Epsilon::One);
        assert_eq!(w.w2x, ExtRat::int(6));
        let v = classify(&w).unwrap();
        assert_eq!(v.rtype, ReductionType::SingleDoublePoint);
        let s = thickness(&v, &tv, Epsilon::One).unwrap();
        assert_eq!(s.thicknesses, th);
        assert!(s.integral_over_k);
    }

    #[test]
    fn chestnut_groups() {
        let g = Thicknesses::from_values(ReductionType::Chestnut, &[q(1), q(1), q(1)])
            .unwrap()
            .component_group();
        assert_eq!(g, AbelianGroup::cyclic(3));
        let g = Thicknesses::from_values(ReductionType::Chestnut, &[q(3), q(1), q(2)])
            .unwrap()
            .component_group();
        assert_eq!(g, AbelianGroup::cyclic(11));
    }

    #[test]
    fn from_values_sorts_and_validates() {
        let th =
            Thicknesses::from_values(ReductionType::TwoSingularLines, &[q(5), q(3), q(1)]).unwrap();
        assert_eq!(
            th,
            Thicknesses::TwoSingularLines {
                e0: q(5),
                e1: q(1),
                e2: q(3)
            }
        );
        assert!(matches!(
            Thicknesses::from_values(ReductionType::Chestnut, &[q(1), q(0), q(1)]),
            Err(RedTypeError::NonPositiveThickness { .. })
        ));
        assert!(matches!(
            Thicknesses::from_values(ReductionType::Chestnut, &[q(1)]),
            Err(RedTypeError::WrongArity(..))
        ));
    }

    #[test]
    fn skeleton_shapes() {
        let s = skeleton_graph(&Thicknesses::Smooth);
        assert_eq!(
            (s.vertex_count(), s.edges().len(), s.total_genus()),
            (1, 0, 2)
        );
        let th = Thicknesses::from_values(ReductionType::Chestnut, &[q(1), q(1), q(1)]).unwrap();
        assert_eq!(skeleton_graph(&th).betti_number(), 2);
        let th =
            Thicknesses::from_values(ReductionType::TwoSingularLines, &[q(1), q(2), q(3)]).unwrap();
        let g = skeleton_graph(&th);
        assert_eq!(g.betti_number(), 2);
        assert_eq!(g.total_genus(), 2);
    }

    #[test]
    fn non_integral_thickness_uses_extension() {
        let th = Thicknesses::from_values(
            ReductionType::TwoSingularLines,
            &[q(1), q(1), BigRational::new(3.into(), 2.into())],
        )
        .unwrap();
        let s = from_thicknesses(th);
        assert!(!s.integral_over_k);
        assert_eq!(s.extension_degree, BigInt::from(2));
        assert_eq!(s.component_group, AbelianGroup::cyclic(6));
        assert_eq!(
            graph_jacobian(&s.dual_graph, None).unwrap(),
            s.component_group
        );
    }

    #[test]
    fn closed_forms_match_graph_jacobian_small() {
        for t in &ReductionType::ALL[1..] {
            for a in 1..=3 {
                for b in 1..=3 {
                    for c in 1..=3 {
                        let vals: Vec<BigRational> =
                            [a, b, c][..t.arity()].iter().map(|&x| q(x)).collect();
                        let s = from_thicknesses(Thicknesses::from_values(*t, &vals).unwrap());
                        assert_eq!(
                            graph_jacobian(&s.dual_graph, None).unwrap(),
                            s.component_group,
                            "{t} {vals:?}"
                        );
                    }
                }
            }
        }
    }
}
