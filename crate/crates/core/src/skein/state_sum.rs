//! The naive `2^c` Kauffman state sum. Used as an oracle for the sweep.

use num_bigint::BigInt;

use crate::diagram::CircleCounter;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::par::{fold_range, Exec};

pub const DEFAULT_STATE_SUM_CAP: usize = 24;

/// `Σ_σ A^{a(σ) - b(σ)} δ^{|σ|}` over all Kauffman states, with `⟨∅⟩ = 1`.
pub fn bracket_state_sum(d: &Diagram, cap: usize, exec: Exec) -> Result<LaurentPoly> {
    let c = d.crossing_count();
    if c > cap.min(63) {
        return Err(Error::TooManyCrossings(c, cap.min(63)));
    }
    let rows = 2 * c + d.free_loops() + 1;
    let counter = CircleCounter::new(d);
    // histogram over (number of A choices, number of circles)
    let hist = fold_range(
        exec,
        1u64 << c,
        1 << 12,
        || vec![0u64; (c + 1) * rows],
        |mut h, range| {
            let mut cc = counter.clone();
            for mask in range {
                let circles = cc.circles(mask);
                h[mask.count_ones() as usize * rows + circles] += 1;
            }
            h
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    let delta = LaurentPoly::loop_value();
    let mut pows = vec![LaurentPoly::one()];
    for k in 1..rows {
        pows.push(&pows[k - 1] * &delta);
    }
    let mut total = LaurentPoly::zero();
    for (idx, &count) in hist.iter().enumerate() {
        if count > 0 {
            let (a, circles) = (idx / rows, idx % rows);
            let mono = LaurentPoly::monomial(2 * a as i64 - c as i64, BigInt::from(count));
            total += &mono * &pows[circles];
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn small_values() {
        let d = LaurentPoly::loop_value();
        assert_eq!(bracket_state_sum(&Diagram::unknot(), 24, Exec::Sequential).unwrap(), d);
        assert_eq!(
            bracket_state_sum(&Diagram::free(0), 24, Exec::Sequential).unwrap(),
            LaurentPoly::one()
        );
        let pos = Diagram::unknot().add_kink(1).unwrap();
        let neg = Diagram::unknot().add_kink(-1).unwrap();
        assert_eq!(
            bracket_state_sum(&pos, 24, Exec::Sequential).unwrap(),
            &LaurentPoly::monomial(3, -1) * &d
        );
        assert_eq!(
            bracket_state_sum(&neg, 24, Exec::Sequential).unwrap(),
            &LaurentPoly::monomial(-3, -1) * &d
        );
    }

    #[test]
    fn trefoil_by_hand() {
        // 8 states enumerated by hand for the right-handed trefoil (all crossings positive):
        // all-A has 2 circles, one B gives 1, two B give 2, all-B gives 3
        let t = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let got = bracket_state_sum(&t, 24, Exec::Parallel).unwrap();
        let d = LaurentPoly::loop_value();
        let by_hand = &(&LaurentPoly::a_pow(3) * &d.pow(2))
            + &(&(&LaurentPoly::monomial(1, 3) * &d)
                + &(&(&LaurentPoly::monomial(-1, 3) * &d.pow(2)) + &(&LaurentPoly::a_pow(-3) * &d.pow(3))));
        let (ca, cb) = (t.c_plus(), t.c_minus());
        assert_eq!((ca, cb), (3, 0));
        assert_eq!(got, by_hand);
        // the classical value, times δ for the unnormalised bracket
        assert_eq!(got, "A^7 + A^3 + A^-1 - A^-9".parse().unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let t = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        assert!(matches!(
            bracket_state_sum(&t, 2, Exec::Sequential),
            Err(Error::TooManyCrossings(3, 2))
        ));
    }
}
