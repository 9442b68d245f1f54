mod common;

use std::collections::HashSet;

use common::fixtures;
use num_bigint::BigInt;
use proptest::prelude::*;
use skeinkit::diagram::{CircleCounter, KauffmanState, Smoothing};
use skeinkit::{parse_pd, Diagram};

#[test]
fn every_state_is_enumerated_once() {
    // ⟨D⟩ at A = 1 is (-1)^wr, and each state contributes (-2)^(circles - 1)
    for f in fixtures().iter().filter(|f| f.diagram.crossing_count() <= 10) {
        let c = f.diagram.crossing_count();
        let mut counter = CircleCounter::new(&f.diagram);
        let mut seen = HashSet::new();
        let mut at_one = BigInt::from(0);
        for mask in 0..1u64 << c {
            let s = KauffmanState::from_mask(c, mask);
            let circles = counter.circles(mask);
            assert_eq!(circles, f.diagram.apply_state(&s).unwrap().circles);
            seen.insert(s.choices);
            at_one += BigInt::from(-2).pow(circles as u32 - 1);
        }
        assert_eq!(seen.len(), 1 << c, "{}", f.name);
        let expected = if f.diagram.writhe() % 2 == 0 { 1 } else { -1 };
        assert_eq!(at_one, BigInt::from(expected), "{}", f.name);
    }
}

#[test]
fn all_a_and_all_b_signs() {
    for f in fixtures() {
        let c = f.diagram.crossing_count() as i64;
        assert_eq!(KauffmanState::all(c as usize, Smoothing::A).sign(), c);
        assert_eq!(KauffmanState::all(c as usize, Smoothing::B).sign(), -c);
    }
}

#[test]
fn mirror_swaps_a_and_b() {
    for f in fixtures() {
        let d = &f.diagram;
        let m = d.mirror();
        let (a, am) = (d.adequacy(), m.adequacy());
        assert_eq!(am.v_a, a.v_b, "{}", f.name);
        assert_eq!(am.v_b, a.v_a, "{}", f.name);
        assert_eq!(am.a_adequate, a.b_adequate, "{}", f.name);
        assert_eq!((m.c_plus(), m.c_minus()), (d.c_minus(), d.c_plus()), "{}", f.name);
        assert_eq!(m.mirror().crossings(), d.crossings());
    }
}

#[test]
fn negative_double_of_zero_writhe_adequate_is_b_adequate() {
    let mut checked = 0;
    for f in fixtures().iter().filter(|f| f.adequate && f.diagram.writhe() == 0) {
        let w = f.diagram.whitehead_double(-1, true).unwrap();
        let c = f.diagram.crossing_count();
        assert_eq!(w.crossing_count(), 4 * c + 2, "{}", f.name);
        assert_eq!(w.writhe(), -2, "{}", f.name);
        assert!(w.adequacy().b_adequate, "{}", f.name);
        checked += 1;
    }
    assert!(checked >= 3);
}

#[test]
fn turaev_genus_zero_exactly_when_the_state_counts_saturate() {
    let mut zeros = 0;
    for f in fixtures() {
        let d = &f.diagram;
        let a = d.adequacy();
        let g = d.turaev_genus().unwrap();
        assert_eq!(g == 0, a.v_a + a.v_b == d.crossing_count() + 2, "{}", f.name);
        assert_eq!(2 * g as usize + a.v_a + a.v_b, d.crossing_count() + 2, "{}", f.name);
        zeros += (g == 0) as usize;
    }
    assert!(zeros > 0 && zeros < fixtures().len());
}

#[test]
fn kinks_keep_adequacy_on_the_far_side() {
    for f in fixtures() {
        let neg = f.diagram.add_kink(-1).unwrap();
        let pos = f.diagram.add_kink(1).unwrap();
        assert!(!neg.adequacy().a_adequate, "{}", f.name);
        assert!(!pos.adequacy().b_adequate, "{}", f.name);
        assert_eq!(neg.writhe(), f.diagram.writhe() - 1);
        assert_eq!(pos.writhe(), f.diagram.writhe() + 1);
    }
}

fn shuffled(d: &Diagram, order: &[usize]) -> String {
    let xs = d.crossings();
    order
        .iter()
        .map(|&i| {
            let t = xs[i];
            format!("X({},{},{},{})", t[0], t[1], t[2], t[3])
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn fixture_and_order() -> impl Strategy<Value = (usize, Vec<usize>)> {
    let sizes: Vec<usize> = fixtures().iter().map(|f| f.diagram.crossing_count()).collect();
    (0..sizes.len()).prop_flat_map(move |i| (Just(i), Just((0..sizes[i]).collect::<Vec<_>>()).prop_shuffle()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Listing the crossings in another order changes nothing.
    #[test]
    fn crossing_order_is_irrelevant((idx, order) in fixture_and_order()) {
        let d = &fixtures()[idx].diagram;
        let e = parse_pd(&shuffled(d, &order)).unwrap();
        prop_assert_eq!(e.writhe(), d.writhe());
        prop_assert_eq!(e.adequacy(), d.adequacy());
        prop_assert_eq!(e.turaev_genus().unwrap(), d.turaev_genus().unwrap());
    }
}
