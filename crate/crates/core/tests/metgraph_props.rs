mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use tropigusa::metgraph::{
    graph_jacobian, is_principal, laplacian_apply, spanning_tree_count, subdivide, AbelianGroup,
    LaplacianImage, MetricGraph,
};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn find(parent: &mut [usize], x: usize) -> usize {
    if parent[x] != x {
        parent[x] = find(parent, parent[x]);
    }
    parent[x]
}

/// Counts edge subsets of size `V - 1` without cycles.
fn brute_force_trees(g: &MetricGraph) -> u64 {
    let n = g.vertex_count();
    let m = g.edges().len();
    let mut count = 0;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        let forest = g.edges().iter().enumerate().all(|(i, e)| {
            if mask & (1 << i) == 0 {
                return true;
            }
            let (a, b) = (find(&mut parent, e.a), find(&mut parent, e.b));
            parent[a] = b;
            a != b
        });
        if forest {
            count += 1;
        }
    }
    count
}

#[test]
fn jacobian_order_counts_spanning_trees() {
    let mut rng = common::rng(11);
    for _ in 0..300 {
        let v = rng.gen_range(1..=6);
        let e = rng.gen_range(v - 1..=8usize.max(v - 1));
        let g = common::graph(&mut rng, v, e, &BigRational::one());
        let trees = BigInt::from(brute_force_trees(&g));
        assert_eq!(spanning_tree_count(&g), trees);
        assert_eq!(graph_jacobian(&g, None).unwrap().order(), trees);
    }
}

#[test]
fn subdividing_first_does_not_change_the_jacobian() {
    let mut rng = common::rng(12);
    for _ in 0..100 {
        let v = rng.gen_range(1..=5);
        let e = rng.gen_range(v - 1..=7usize.max(v - 1));
        let len = q(rng.gen_range(1..=3), 1);
        let g = common::graph(&mut rng, v, e, &len);
        let unit = q(1, rng.gen_range(1..=2));
        let sub = subdivide(&g, &unit).unwrap();
        assert_eq!(
            graph_jacobian(&g, Some(&unit)).unwrap(),
            graph_jacobian(&sub, Some(&unit)).unwrap()
        );
        assert_eq!(sub.betti_number(), g.betti_number());
    }
}

#[test]
fn scaling_lengths_and_unit_together_is_invisible() {
    let mut rng = common::rng(13);
    for _ in 0..100 {
        let v = rng.gen_range(1..=5);
        let e = rng.gen_range(v - 1..=7usize.max(v - 1));
        let g = common::graph(&mut rng, v, e, &BigRational::one());
        let c = q(rng.gen_range(1..=5), rng.gen_range(1..=5));
        let triples: Vec<_> = g
            .edges()
            .iter()
            .map(|e| (e.a, e.b, &e.length * &c))
            .collect();
        let scaled = MetricGraph::from_triples(vec![0; v], &triples).unwrap();
        assert_eq!(
            graph_jacobian(&g, Some(&BigRational::one())).unwrap(),
            graph_jacobian(&scaled, Some(&c)).unwrap()
        );
    }
}

#[test]
fn dumbbell_matches_two_loops() {
    for a in 1..=6 {
        for b in 1..=6 {
            for bridge in 1..=3 {
                let dumbbell = MetricGraph::from_triples(
                    vec![1, 1],
                    &[(0, 0, q(a, 1)), (0, 1, q(bridge, 1)), (1, 1, q(b, 1))],
                )
                .unwrap();
                let bouquet =
                    MetricGraph::from_triples(vec![2], &[(0, 0, q(a, 1)), (0, 0, q(b, 1))])
                        .unwrap();
                let expected = AbelianGroup::from_cyclic(&[BigInt::from(a), BigInt::from(b)]);
                let unit = BigRational::one();
                assert_eq!(graph_jacobian(&dumbbell, Some(&unit)).unwrap(), expected);
                assert_eq!(graph_jacobian(&bouquet, Some(&unit)).unwrap(), expected);
            }
        }
    }
}

#[test]
fn laplacian_images_are_principal() {
    let mut rng = common::rng(14);
    for _ in 0..200 {
        let v = rng.gen_range(2..=8);
        let e = rng.gen_range(v - 1..=12);
        let g = common::graph(&mut rng, v, e, &BigRational::one());
        let phi: Vec<BigInt> = (0..v).map(|_| rng.gen_range(-5..=5).into()).collect();
        let d = laplacian_apply(&g, &phi);
        assert_eq!(d.degree(), BigInt::from(0));
        let back = is_principal(&g, &d).unwrap().expect("image is principal");
        assert_eq!(laplacian_apply(&g, &back), d);
        assert!(LaplacianImage::new(&g).contains(&d));
    }
}
