mod common;

use common::{cfg, figure_eight, fixtures, trefoil};
use skeinkit::jones::{
    colored_jones, colored_jones_chebyshev, colored_jones_with, plain_cable_bracket, reduced, Engine,
};
use skeinkit::laurent::{delta, LaurentPoly};

/// `v^m - v^-m` with `v = A^2`.
fn bracketed(m: i64) -> LaurentPoly {
    &LaurentPoly::monomial(2 * m, 1) - &LaurentPoly::monomial(-2 * m, 1)
}

/// Cyclotomic sum `Σ_k w(k) Π_{j=1..k} {n+j}{n-j}`, with `w(k)` a monomial in `A`.
fn cyclotomic(n: i64, weight: impl Fn(i64) -> LaurentPoly) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    let mut prod = LaurentPoly::one();
    for k in 0..n {
        if k > 0 {
            prod = &(&prod * &bracketed(n + k)) * &bracketed(n - k);
        }
        total += &(&weight(k) * &prod);
    }
    total
}

#[test]
fn figure_eight_matches_cyclotomic_expansion() {
    for n in 2..=5 {
        let j = colored_jones_chebyshev(&figure_eight(), n, &cfg()).unwrap();
        let expected = cyclotomic(n as i64, |_| LaurentPoly::one());
        assert_eq!(reduced(&j).unwrap(), expected, "n = {n}");
    }
}

#[test]
fn trefoil_matches_cyclotomic_expansion_up_to_mirror() {
    for n in 2..=5 {
        let j = reduced(&colored_jones_chebyshev(&trefoil(), n, &cfg()).unwrap()).unwrap();
        // q^(k(k+3)/2) with q = A^4, in either chirality
        let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
        let left = cyclotomic(n as i64, |k| LaurentPoly::monomial(2 * k * (k + 3), sign(k)));
        let right = cyclotomic(n as i64, |k| LaurentPoly::monomial(-2 * k * (k + 3), sign(k)));
        assert!(j == left || j == right, "n = {n}: {j}");
    }
}

#[test]
fn trefoil_jones_in_t() {
    let j = colored_jones(&trefoil(), 2, &cfg()).unwrap();
    assert_eq!(j.to_t_string(), "t^(9/2) - t^(5/2) - t^(3/2) - t^(1/2)");
}

#[test]
fn unknot_gets_quantum_integers() {
    let u = skeinkit::Diagram::unknot();
    for n in 1..=6 {
        let j = colored_jones_chebyshev(&u, n, &cfg()).unwrap();
        assert_eq!(j.poly, delta(n as i64 - 1), "n = {n}");
    }
}

#[test]
fn kinks_do_not_change_the_invariant() {
    for f in fixtures().iter().filter(|f| f.diagram.crossing_count() <= 6) {
        for s in [1, -1] {
            let k = f.diagram.add_kink(s).unwrap();
            for n in 2..=3 {
                let a = colored_jones_chebyshev(&f.diagram, n, &cfg()).unwrap();
                let b = colored_jones_chebyshev(&k, n, &cfg()).unwrap();
                assert_eq!(a.poly, b.poly, "{} kink {s} n = {n}", f.name);
            }
            let a = colored_jones(&f.diagram, 2, &cfg()).unwrap();
            let b = colored_jones(&k, 2, &cfg()).unwrap();
            assert_eq!(a.poly, b.poly, "{} kink {s} direct", f.name);
        }
    }
}

#[test]
fn mirror_flips_degrees() {
    for f in fixtures() {
        let m = f.diagram.mirror();
        for n in 2..=3 {
            let a = colored_jones_chebyshev(&f.diagram, n, &cfg()).unwrap();
            let b = colored_jones_chebyshev(&m, n, &cfg()).unwrap();
            assert_eq!(a.t_max_deg, -b.t_min_deg, "{} n = {n}", f.name);
            assert_eq!(a.poly, b.poly.invert_variable(), "{} n = {n}", f.name);
        }
    }
}

#[test]
fn engines_agree() {
    for f in fixtures().iter().filter(|f| f.diagram.crossing_count() <= 8) {
        let state = colored_jones_with(&f.diagram, 2, Engine::StateSum, &cfg()).unwrap();
        for n in 2..=4 {
            let direct = colored_jones(&f.diagram, n, &cfg()).unwrap();
            let cheb = colored_jones_chebyshev(&f.diagram, n, &cfg()).unwrap();
            assert_eq!(direct.poly, cheb.poly, "{} n = {n}", f.name);
            if n == 2 {
                assert_eq!(state.poly, direct.poly, "{}", f.name);
            }
        }
    }
}

#[test]
fn state_sum_engine_is_only_for_the_plain_polynomial() {
    assert!(colored_jones_with(&trefoil(), 3, Engine::StateSum, &cfg()).is_err());
}

#[test]
fn connected_sum_multiplies_reduced_invariants() {
    let (a, b) = (trefoil(), figure_eight());
    let s = a.connected_sum(&b).unwrap();
    assert_eq!(s.crossing_count(), 7);
    for n in 2..=3 {
        let ra = reduced(&colored_jones_chebyshev(&a, n, &cfg()).unwrap()).unwrap();
        let rb = reduced(&colored_jones_chebyshev(&b, n, &cfg()).unwrap()).unwrap();
        let rs = reduced(&colored_jones(&s, n, &cfg()).unwrap()).unwrap();
        assert_eq!(rs, &ra * &rb, "n = {n}");
    }
}

#[test]
fn three_colour_chebyshev_identity() {
    // the decorated 2-cable equals the plain 2-cable minus one unknotted loop
    for f in fixtures().iter().filter(|f| f.diagram.crossing_count() <= 7) {
        let d = f.diagram.add_kink(1).unwrap();
        let two = plain_cable_bracket(&d, 2, &cfg()).unwrap();
        let one = plain_cable_bracket(&d, 0, &cfg()).unwrap();
        let decorated = skeinkit::jones::decorated_cable_bracket(&d, 2, &cfg()).unwrap();
        assert_eq!(one, LaurentPoly::one());
        assert_eq!(decorated, &two - &one, "{}", f.name);
    }
}

#[test]
fn links_are_rejected_by_the_chebyshev_path() {
    let hopf = skeinkit::parse_pd("X(4,1,3,2) X(2,3,1,4)").unwrap();
    assert_eq!(hopf.component_count(), 2);
    assert!(colored_jones_chebyshev(&hopf, 2, &cfg()).is_err());
}
