use equifreq::{
    ap_triple, bf_expand, cascade_to_triple, circle_from_triple, enumerate_pairs,
    identity_to_pairs, pair_to_identity, primitive_normalize, recover_params, triple_from_circle,
    triple_to_cascade, APParams, BFParams, SquareIdentity,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn nondegenerate_identity(r: i64, s: i64, u: i64, v: i64) -> Option<SquareIdentity> {
    let p = BFParams::new(r, s, u, v);
    if p.is_degenerate() {
        return None;
    }
    let id = bf_expand(&p);
    (!id.has_zero_entry() && !id.is_trivial()).then_some(id)
}

#[test]
fn every_small_pair_survives_the_roundtrip() {
    let pairs = enumerate_pairs(100);
    assert!(!pairs.is_empty());
    for pair in &pairs {
        let w = pair_to_identity(pair);
        let back = identity_to_pairs(&w.identity).unwrap();
        assert!(
            back.contains(pair),
            "{pair} not recovered from {}",
            w.identity
        );
        let p = recover_params(&w.identity).unwrap();
        assert_eq!(bf_expand(&p), w.identity);
    }
}

#[test]
fn enumeration_is_ordered_and_canonical() {
    let pairs = enumerate_pairs(120);
    for w in pairs.windows(2) {
        let key =
            |p: &equifreq::TransitionPair| (p.delta().clone(), p.t1().clone(), p.t2().clone());
        assert!(key(&w[0]) < key(&w[1]));
    }
    assert!(pairs.iter().all(|p| p.is_canonical()));
}

proptest! {
    #[test]
    fn identity_pairs_clear_back_to_the_same_identity(
        r in -30i64..30, s in -30i64..30, u in -30i64..30, v in -30i64..30,
    ) {
        let Some(id) = nondegenerate_identity(r, s, u, v) else {
            return Ok(());
        };
        let prim = primitive_normalize(&id).unwrap();
        for pair in identity_to_pairs(&id).unwrap() {
            prop_assert!(pair.is_canonical());
            let cleared = pair_to_identity(&pair).identity;
            prop_assert_eq!(primitive_normalize(&cleared).unwrap(), prim.clone());
        }
    }

    #[test]
    fn cascade_and_circle_views_agree(m in 1i64..200, n in 1i64..200) {
        let Ok(params) = APParams::new(m, n) else {
            return Ok(());
        };
        let triple = ap_triple(&params).unwrap();
        let reduced = triple.reduced();
        let pt = circle_from_triple(&triple).unwrap();
        prop_assert_eq!(triple_from_circle(&pt), reduced.clone());
        if let Ok(c) = triple_to_cascade(&triple) {
            let [x0, x1, x2] = c.levels();
            prop_assert_eq!(cascade_to_triple(x0.clone(), x1.clone(), x2.clone()).unwrap(), reduced);
            let two = BigInt::from(2);
            prop_assert_eq!(x1 * x1 * (x0 * x0 + x2 * x2), two * x0 * x0 * x2 * x2);
        }
    }
}
