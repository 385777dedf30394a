//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use tropigusa::igusa::{igusa_from_quintic, trop_igusa, QuinticModel};
use tropigusa::metgraph::{
    graph_jacobian, is_principal, AbelianGroup, GraphDivisor, LaplacianImage, MetricGraph,
};
use tropigusa::redtype::{
    classify, epsilon, skeleton_graph, thickness, w_table, ReductionType, Thicknesses,
};
use tropigusa::torsion::{
    elliptic_trop, fmt_vj, genus2_trop, nonzero_slope_scan, principality_equivalence,
    CycleDivisorSpec, Genus2TorsionConfig,
};
use tropigusa::tropfun::{solve_function, GraphPoint, TropVerdict};
use tropigusa::valfield::{ExtRat, ValuedField, ValuedScalar};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn spec(n: usize, points: &[(i64, i64)]) -> Result<CycleDivisorSpec, String> {
    CycleDivisorSpec::from_points(n, points).map_err(|e| e.to_string())
}

fn c1() -> Outcome {
    let f = spec(4, &[(1, 1), (1, 2), (-1, 3), (-1, 0)])?;
    let g = spec(4, &[(1, 2), (1, 3), (-1, 1), (-1, 0)])?;
    let r = elliptic_trop(4, &[f, g]).map_err(|e| e.to_string())?;
    ensure!(
        r.classification.verdict == TropVerdict::Faithful,
        "verdict {:?}",
        r.classification.verdict
    );
    ensure!(
        r.length_vj == -BigRational::one(),
        "length {}",
        fmt_vj(&r.length_vj)
    );
    Ok(format!("N=4 Faithful, length {}", fmt_vj(&r.length_vj)))
}

fn c2() -> Outcome {
    let f = spec(5, &[(2, 1), (1, 2), (-1, 4), (-2, 0)])?;
    let g = spec(5, &[(-1, 1), (2, 3), (-1, 0)])?;
    let r = elliptic_trop(5, &[f, g]).map_err(|e| e.to_string())?;
    ensure!(r.length_vj == q(-6, 5), "length {}", fmt_vj(&r.length_vj));
    ensure!(
        r.expansions == ints(&[2, 1, 1, 1, 1]),
        "expansions {:?}",
        r.expansions
    );
    Ok(format!(
        "N=5 length {}, expansions (2,1,1,1,1)",
        fmt_vj(&r.length_vj)
    ))
}

fn c3() -> Outcome {
    let f = CycleDivisorSpec::from_i64(&[-2, -1, -1, 1, 1, 2, 0]).map_err(|e| e.to_string())?;
    let g = CycleDivisorSpec::from_i64(&[-1, 1, 1, 1, 1, -1, -2]).map_err(|e| e.to_string())?;
    let r = elliptic_trop(7, &[f, g]).map_err(|e| e.to_string())?;
    ensure!(r.length_vj == q(-10, 7), "length {}", fmt_vj(&r.length_vj));
    ensure!(
        r.expansions == ints(&[2, 1, 2, 1, 2, 1, 1]),
        "expansions {:?}",
        r.expansions
    );
    Ok(format!(
        "N=7 length {}, expansions (2,1,2,1,2,1,1)",
        fmt_vj(&r.length_vj)
    ))
}

fn c4() -> Outcome {
    let cfg = Genus2TorsionConfig::new(9, 7, 5).map_err(|e| e.to_string())?;
    let r = genus2_trop(&cfg).map_err(|e| e.to_string())?;
    ensure!(r.separated(), "not separated: {:?}", r.separation.witness);
    ensure!(r.length == q(14, 1), "length {}", r.length);
    Ok(format!("e1=9 (7,5) separated, length {}", r.length))
}

fn c5() -> Outcome {
    let cfg = Genus2TorsionConfig::new(9, 8, 4).map_err(|e| e.to_string())?;
    let r = genus2_trop(&cfg).map_err(|e| e.to_string())?;
    ensure!(!r.separated(), "unexpectedly separated");
    let w = r.separation.witness.clone().ok_or("no witness")?;
    ensure!(
        w == (GraphPoint::Vertex(3), GraphPoint::Vertex(6)),
        "witness {:?}",
        w
    );
    let [(f3, g3), (f6, g6)] = r.witness_values().ok_or("no witness values")?;
    ensure!(
        f3 == f6 && f6 == g3 && g3 == g6,
        "values F={f3},{f6} G={g3},{g6}"
    );
    Ok(format!(
        "e1=9 (8,4) not separated, witness (C3, C6), F = G = {f3}"
    ))
}

fn tuples(arity: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=max).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn c6() -> Outcome {
    let mut checked = 0;
    for t in ReductionType::ALL.into_iter().filter(|t| t.number() >= 2) {
        for vals in tuples(t.arity(), 8) {
            let vals: Vec<BigRational> = vals.iter().map(|&x| q(x, 1)).collect();
            let th = Thicknesses::from_values(t, &vals).map_err(|e| e.to_string())?;
            let closed = th.component_group();
            let jac = graph_jacobian(&skeleton_graph(&th), None).map_err(|e| e.to_string())?;
            ensure!(closed == jac, "{t} {vals:?}: closed {closed}, graph {jac}");
            checked += 1;
        }
    }
    let chestnut = Thicknesses::from_values(ReductionType::Chestnut, &[q(1, 1), q(2, 1), q(3, 1)])
        .map_err(|e| e.to_string())?;
    let jac = graph_jacobian(&skeleton_graph(&chestnut), None).map_err(|e| e.to_string())?;
    ensure!(jac == AbelianGroup::cyclic(11), "chestnut (1,2,3): {jac}");
    for e in 1..=8 {
        let g = MetricGraph::cycle(e, BigRational::one()).map_err(|e| e.to_string())?;
        let jac = graph_jacobian(&g, None).map_err(|e| e.to_string())?;
        ensure!(jac == AbelianGroup::cyclic(e as i64), "cycle {e}: {jac}");
    }
    Ok(format!(
        "{checked} thickness tuples agree; chestnut (1,2,3) -> Z/11; cycles -> Z/e"
    ))
}

/// Every degree-0 divisor on the `n`-cycle with entries in `[-bound, bound]`.
fn degree_zero(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(k: usize, sum: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let n = cur.len();
        if k == n - 1 {
            if sum.abs() <= bound {
                cur[k] = -sum;
                out.push(cur.clone());
            }
            return;
        }
        for x in -bound..=bound {
            cur[k] = x;
            rec(k + 1, sum + x, bound, cur, out);
        }
    }
    rec(0, 0, bound, &mut cur, &mut out);
    out
}

fn c7() -> Outcome {
    let mut total = 0;
    for n in 2..=12 {
        let r = principality_equivalence(n, 2);
        ensure!(
            r.disagreement_count == 0,
            "N={n}: {} disagreements, e.g. {:?}",
            r.disagreement_count,
            r.disagreements
        );
        total += r.divisors;
    }
    // The general exact solvers on the smaller cycles.
    let mut general = 0;
    for n in 2..=7 {
        let g = MetricGraph::cycle(n, BigRational::one()).map_err(|e| e.to_string())?;
        let img = LaplacianImage::new(&g);
        for a in degree_zero(n, 2) {
            let moment: i64 = a.iter().enumerate().map(|(i, x)| i as i64 * x).sum();
            let criterion = moment.rem_euclid(n as i64) == 0;
            let d = GraphDivisor::from_i64(&a);
            let solved = solve_function(&g, &d).is_ok();
            let principal = is_principal(&g, &d).map_err(|e| e.to_string())?.is_some();
            let image = img.contains(&d);
            ensure!(
                criterion == solved && solved == principal && principal == image,
                "N={n} {a:?}: moment {criterion}, solver {solved}, principal {principal}, image {image}"
            );
            general += 1;
        }
    }
    Ok(format!(
        "N<=12, |a_i|<=2: {total} divisors, 0 disagreements ({general} also through the general solvers)"
    ))
}

fn c8() -> Outcome {
    let r = nonzero_slope_scan(30).map_err(|e| e.to_string())?;
    ensure!(
        r.counterexamples.is_empty(),
        "{} counterexamples, first {:?}",
        r.counterexamples.len(),
        r.counterexamples.first()
    );
    ensure!(r.configurations > 0, "no configurations scanned");
    Ok(format!(
        "e1<=30: {} configurations, 0 counterexamples ({} non-separated)",
        r.configurations,
        r.non_separated.len()
    ))
}

fn c9() -> Outcome {
    let mut rng = common::rng(9);
    let (mut tadic, mut padic) = (0, 0);
    for n in 0..100 {
        let k = common::field(n);
        if k.residue_char() == 0 {
            tadic += 1;
        } else {
            padic += 1;
        }
        let m = common::quintic(&mut rng, &k);
        let j = igusa_from_quintic(&m).map_err(|e| e.to_string())?;
        ensure!(j.relation().is_zero(), "relation fails on trial {n}");
        let b = common::scalar(&mut rng, &k);
        let jt = igusa_from_quintic(&m.translate(&b)).map_err(|e| e.to_string())?;
        ensure!(
            j == jt,
            "translation by {b} changes invariants on trial {n}"
        );
        let a = common::nonzero_scalar(&mut rng, &k);
        ensure!(
            common::wtable(&m, &k) == common::wtable(&m.scale_x(&a), &k),
            "x-scaling by {a} changes the w-table on trial {n}"
        );
    }
    Ok(format!(
        "100 quintics ({tadic} over Q(t), {padic} p-adic): relation, translation, x-scaling"
    ))
}

fn c10() -> Outcome {
    let k7 = ValuedField::padic(7).map_err(|e| e.to_string())?;
    let m = QuinticModel::from_monomial([0, -1, 0, 0, 0, 1].map(ValuedScalar::int))
        .map_err(|e| e.to_string())?;
    let tv = trop_igusa(&igusa_from_quintic(&m).map_err(|e| e.to_string())?, &k7);
    let v = classify(&w_table(&tv, epsilon(7))).map_err(|e| e.to_string())?;
    ensure!(
        v.rtype == ReductionType::Smooth && !v.ambiguous,
        "x^5 - x over v7: {} ambiguous={}",
        v.rtype,
        v.ambiguous
    );

    let kt = ValuedField::tadic();
    let roots = ["0", "t", "1", "2", "3"].map(|r| kt.parse(r).unwrap());
    let m = QuinticModel::from_roots(ValuedScalar::one(), &roots).map_err(|e| e.to_string())?;
    let tv = trop_igusa(&igusa_from_quintic(&m).map_err(|e| e.to_string())?, &kt);
    let w = w_table(&tv, epsilon(0));
    let v = classify(&w).map_err(|e| e.to_string())?;
    ensure!(
        v.rtype == ReductionType::SingleDoublePoint && !v.ambiguous,
        "nodal family: {} ambiguous={}",
        v.rtype,
        v.ambiguous
    );
    let sk = thickness(&v, &tv, epsilon(0)).map_err(|e| e.to_string())?;
    let e = match &sk.thicknesses {
        Thicknesses::SingleDoublePoint { e } => e.clone(),
        other => return Err(format!("thicknesses {other:?}")),
    };
    let from_w = match &w.w2x {
        ExtRat::Finite(x) => x / q(6, 1),
        other => return Err(format!("w2x = {other}")),
    };
    // v(Δ) straight from the roots: Σ_{i<j} 2·v(r_i − r_j).
    let mut oracle = BigRational::zero();
    for i in 0..5 {
        for j in i + 1..5 {
            match kt.val(&(&roots[i] - &roots[j])) {
                ExtRat::Finite(x) => oracle += x * q(2, 1),
                other => return Err(format!("root difference valuation {other}")),
            }
        }
    }
    ensure!(
        e == from_w && from_w == oracle,
        "thickness {e}, w2x/6 {from_w}, root oracle {oracle}"
    );
    Ok(format!(
        "x^5 - x over v7 Smooth; x(x-t)(x-1)(x-2)(x-3) SingleDoublePoint, e = w2x/6 = v(disc) = {e}"
    ))
}

fn main() -> ExitCode {
    let criteria: [(u8, fn() -> Outcome); 10] = [
        (1, c1),
        (2, c2),
        (3, c3),
        (4, c4),
        (5, c5),
        (6, c6),
        (7, c7),
        (8, c8),
        (9, c9),
        (10, c10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, check) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n:>2}: PASS  {detail} [{secs:.2}s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {detail} [{secs:.2}s]");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 10 criteria fail");
        ExitCode::FAILURE
    }
}
