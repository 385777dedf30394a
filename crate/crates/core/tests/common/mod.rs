#![allow(dead_code)]

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropigusa::igusa::{igusa_from_quintic, trop_igusa, QuinticModel};
use tropigusa::metgraph::MetricGraph;
use tropigusa::redtype::{epsilon, w_table, WTable};
use tropigusa::valfield::{Poly, ValuedField, ValuedScalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut ChaCha8Rng, span: i64, max_den: i64) -> BigRational {
    BigRational::new(
        rng.gen_range(-span..=span).into(),
        rng.gen_range(1..=max_den).into(),
    )
}

/// A random scalar of the field's kind: a rational for p-adic fields, or
/// `t^k · (small polynomial)` for the t-adic field.
pub fn scalar(rng: &mut ChaCha8Rng, field: &ValuedField) -> ValuedScalar {
    if field.residue_char() != 0 {
        let p = field.residue_char() as i64;
        let x = rational(rng, 12, 4);
        let k = rng.gen_range(0..3u32);
        return ValuedScalar::rational(x * BigRational::from_integer(p.pow(k).into()));
    }
    let deg = rng.gen_range(0..2);
    let coeffs = (0..=deg).map(|_| rational(rng, 6, 2)).collect();
    let k = rng.gen_range(0..2);
    ValuedScalar::poly(&Poly::new(coeffs) * &Poly::monomial(BigRational::from_integer(1.into()), k))
}

pub fn nonzero_scalar(rng: &mut ChaCha8Rng, field: &ValuedField) -> ValuedScalar {
    loop {
        let x = scalar(rng, field);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random quintic with nonzero discriminant.
pub fn quintic(rng: &mut ChaCha8Rng, field: &ValuedField) -> QuinticModel {
    loop {
        let mut c: [ValuedScalar; 6] = std::array::from_fn(|_| scalar(rng, field));
        c[5] = nonzero_scalar(rng, field);
        let q = QuinticModel::from_monomial(c).unwrap();
        if igusa_from_quintic(&q).is_ok() {
            return q;
        }
    }
}

/// One field of each kind per index: Q(t) and Q with p ∈ {2, 3, 5, 7}.
pub fn field(index: usize) -> ValuedField {
    match index % 5 {
        0 => ValuedField::tadic(),
        1 => ValuedField::padic(2).unwrap(),
        2 => ValuedField::padic(3).unwrap(),
        3 => ValuedField::padic(5).unwrap(),
        _ => ValuedField::padic(7).unwrap(),
    }
}

pub fn wtable(q: &QuinticModel, field: &ValuedField) -> WTable {
    let tv = trop_igusa(&igusa_from_quintic(q).unwrap(), field);
    w_table(&tv, epsilon(field.residue_char()))
}

/// A random connected graph: a random spanning tree on `vertices` vertices
/// plus extra edges (loops and parallel edges allowed) up to `edges` total.
/// Every edge gets length `length`.
pub fn graph(
    rng: &mut ChaCha8Rng,
    vertices: usize,
    edges: usize,
    length: &BigRational,
) -> MetricGraph {
    assert!(vertices >= 1 && edges + 1 >= vertices);
    let mut triples = Vec::with_capacity(edges);
    for v in 1..vertices {
        triples.push((rng.gen_range(0..v), v, length.clone()));
    }
    while triples.len() < edges {
        let a = rng.gen_range(0..vertices);
        let b = rng.gen_range(0..vertices);
        triples.push((a, b, length.clone()));
    }
    MetricGraph::from_triples(vec![0; vertices], &triples).unwrap()
}
