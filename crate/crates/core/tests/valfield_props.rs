mod common;

use tropigusa::valfield::ExtRat;

#[test]
fn valuation_is_multiplicative_and_ultrametric() {
    let mut rng = common::rng(11);
    for n in 0..200 {
        let k = common::field(n);
        let x = common::scalar(&mut rng, &k);
        let y = common::scalar(&mut rng, &k);
        let (vx, vy) = (k.val(&x), k.val(&y));
        assert_eq!(k.val(&(&x * &y)), vx.clone() + vy.clone());
        let vs = k.val(&(&x + &y));
        let m = vx.clone().min(vy.clone());
        assert!(vs >= m, "{x} + {y}");
        if vx != vy {
            assert_eq!(vs, m);
        }
    }
}

#[test]
fn zero_has_infinite_valuation() {
    for n in 0..5 {
        let k = common::field(n);
        assert_eq!(
            k.val(&tropigusa::valfield::ValuedScalar::zero()),
            ExtRat::Infinity
        );
    }
}

#[test]
fn print_parse_round_trip() {
    let mut rng = common::rng(12);
    for n in 0..200 {
        let k = common::field(n);
        let x = common::scalar(&mut rng, &k);
        let d = common::nonzero_scalar(&mut rng, &k);
        let x = &x / &d;
        let y = k.parse(&x.to_string()).unwrap();
        assert_eq!(k.val(&x), k.val(&y));
        assert!((&x - &y).is_zero());
    }
}
