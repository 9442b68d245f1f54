mod common;

use common::{cfg, fixtures};
use skeinkit::laurent::{delta, is_admissible, theta};
use skeinkit::par::Exec;
use skeinkit::skein::program::{projector_closure, theta_program};
use skeinkit::skein::state_sum::DEFAULT_STATE_SUM_CAP;
use skeinkit::skein::{
    bracket_state_sum, bracket_sweep, bracket_sweep_poly, fusion_expand, jones_wenzl, to_slice_program, twist_regions,
    Slice, SliceProgram,
};

#[test]
fn projector_closures_are_quantum_integers() {
    for n in 0..=8 {
        let swept = bracket_sweep(&projector_closure(n), &cfg()).unwrap().to_poly().unwrap();
        assert_eq!(swept, delta(n as i64), "n = {n}");
        if n > 0 {
            assert_eq!(jones_wenzl(n).closure().to_poly().unwrap(), delta(n as i64), "n = {n}");
        }
    }
}

#[test]
fn projectors_are_idempotent_and_killed_by_caps() {
    for n in 1..=6 {
        let f = jones_wenzl(n);
        assert!(f.is_idempotent().unwrap(), "n = {n}");
        assert!(f.is_annihilated().unwrap(), "n = {n}");
    }
}

/// Closes `body` (acting on `n` strands) with `n` nested cups above and caps below.
fn closed(n: usize, body: &[Slice]) -> SliceProgram {
    let mut s: Vec<Slice> = (0..n).map(Slice::Cup).collect();
    s.extend_from_slice(body);
    s.extend((0..n).rev().map(Slice::Cap));
    SliceProgram::new(s)
}

#[test]
fn projector_identities_through_the_sweep() {
    // checked by the sweep, independently of the algebra-side methods above
    for n in 2..=6 {
        let once = bracket_sweep(&closed(n, &[Slice::Jw { n, pos: 0 }]), &cfg()).unwrap();
        let twice = bracket_sweep(&closed(n, &[Slice::Jw { n, pos: 0 }, Slice::Jw { n, pos: 0 }]), &cfg()).unwrap();
        assert!(once.equals(&twice), "n = {n}");
        for i in 0..n - 1 {
            let body = [
                Slice::Jw { n, pos: 0 },
                Slice::Cap(i),
                Slice::Cup(i),
                Slice::Jw { n, pos: 0 },
            ];
            assert!(
                bracket_sweep(&closed(n, &body), &cfg()).unwrap().is_zero(),
                "n = {n}, e_{i}"
            );
        }
        // a smaller projector is absorbed
        for m in 2..n {
            for pos in 0..=n - m {
                let body = [Slice::Jw { n, pos: 0 }, Slice::Jw { n: m, pos }];
                let v = bracket_sweep(&closed(n, &body), &cfg()).unwrap();
                assert!(v.equals(&once), "n = {n}, f_{m} at {pos}");
            }
        }
    }
}

#[test]
fn theta_sweep_matches_closed_form() {
    let mut count = 0;
    for a in 0..=5i64 {
        for b in 0..=5i64 {
            for c in 0..=5i64 {
                if !is_admissible(a, b, c) {
                    assert!(theta_program(a as usize, b as usize, c as usize).is_err());
                    continue;
                }
                let p = theta_program(a as usize, b as usize, c as usize).unwrap();
                let swept = bracket_sweep(&p, &cfg()).unwrap();
                let closed = theta(a, b, c).unwrap();
                assert!(swept.equals(&closed), "theta({a},{b},{c})");
                count += 1;
            }
        }
    }
    assert!(count > 40);
}

#[test]
fn sweep_equals_state_sum_on_fixtures() {
    for f in fixtures().iter().filter(|f| f.diagram.crossing_count() <= 10) {
        let d = &f.diagram;
        let naive = bracket_state_sum(d, DEFAULT_STATE_SUM_CAP, Exec::Sequential).unwrap();
        let p = to_slice_program(d).unwrap();
        assert_eq!(bracket_sweep_poly(&p, &cfg()).unwrap(), naive, "{}", f.name);
        if d.crossing_count() <= 7 {
            for variant in [d.mirror(), d.add_kink(1).unwrap(), d.add_kink(-1).unwrap()] {
                let naive = bracket_state_sum(&variant, DEFAULT_STATE_SUM_CAP, Exec::Sequential).unwrap();
                let swept = bracket_sweep_poly(&to_slice_program(&variant).unwrap(), &cfg()).unwrap();
                assert_eq!(swept, naive, "{} variant", f.name);
            }
        }
    }
}

#[test]
fn state_sum_is_scheduling_independent() {
    for f in fixtures().iter().filter(|f| f.diagram.crossing_count() <= 9) {
        let s = bracket_state_sum(&f.diagram, DEFAULT_STATE_SUM_CAP, Exec::Sequential).unwrap();
        let p = bracket_state_sum(&f.diagram, DEFAULT_STATE_SUM_CAP, Exec::Parallel).unwrap();
        assert_eq!(s, p, "{}", f.name);
    }
}

#[test]
fn fusion_expansion_matches_direct_bracket() {
    let mut regions = 0;
    for f in fixtures().iter().filter(|f| f.diagram.crossing_count() <= 7) {
        let d = &f.diagram;
        let Some(longest) = twist_regions(d, 1).into_iter().max_by_key(|r| r.len()) else {
            continue;
        };
        for n in 1..=3 {
            let e = fusion_expand(d, &longest.crossings, n).unwrap();
            assert_eq!(e.terms.len(), n + 1);
            let direct = bracket_sweep(&e.direct, &cfg()).unwrap();
            let fused = e.evaluate(&cfg()).unwrap();
            assert!(
                fused.equals(&direct),
                "{} n = {n} region {:?}",
                f.name,
                longest.crossings
            );
        }
        regions += 1;
    }
    assert!(regions >= 10);
}
