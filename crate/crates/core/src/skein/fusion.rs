//! Fusion of the two cabled strands of a twist region and removal of the twist.
//!
//! On the `n`-cable, the two bundles running through a twist region of `r`
//! crossings are fused into one `a`-coloured edge (`a = 0, 2, .., 2n`); each
//! half twist then comes off the trivalent vertex as a monomial. The fusion
//! runs along the twist axis, which is the only direction in which the
//! twist can be absorbed this way.

use super::program::{Slice, SliceProgram};
use super::slicer::{slice_diagram, TwistRegion};
use super::sweep::{bracket_sweep, SweepConfig};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::laurent::{delta, theta, LaurentPoly, LaurentRatio};

/// `I(a, r, n) = (Δ_a / θ(n, n, a)) · ((-1)^{n-a/2} A^{2n-a+n²-a²/2})^r`.
///
/// `r` counts half twists with sign: positive for `x+` slices on the
/// vertically drawn twist, negative for `x-`.
pub fn fusion_coefficient(a: usize, r: i64, n: usize) -> Result<LaurentRatio> {
    let (ai, ni) = (a as i64, n as i64);
    if a % 2 == 1 || a > 2 * n {
        return Err(Error::InadmissibleTriple(ni, ni, ai));
    }
    let th = theta(ni, ni, ai)?;
    let exp = 2 * ni - ai + ni * ni - ai * ai / 2;
    let sign = if (r * (ni - ai / 2)).rem_euclid(2) == 0 { 1 } else { -1 };
    let twist = LaurentPoly::monomial(r * exp, sign);
    // Δ_a / θ, with θ = num/den
    Ok(LaurentRatio::new(&(&delta(ai) * &th.den) * &twist, th.num))
}

#[derive(Clone, Debug)]
pub struct FusionTerm {
    pub a: usize,
    pub coeff: LaurentRatio,
    pub program: SliceProgram,
}

#[derive(Clone, Debug)]
pub struct FusionExpansion {
    /// Signed half-twist count used in the coefficients.
    pub r: i64,
    pub n: usize,
    pub terms: Vec<FusionTerm>,
    /// The decorated cable itself, with the twist left in place.
    pub direct: SliceProgram,
}

impl FusionExpansion {
    /// `Σ I(a) ⟨term_a⟩`.
    pub fn evaluate(&self, cfg: &SweepConfig) -> Result<LaurentRatio> {
        let mut total = LaurentRatio::from_poly(LaurentPoly::zero());
        for t in &self.terms {
            total = total.add(&t.coeff.mul(&bracket_sweep(&t.program, cfg)?));
        }
        Ok(total)
    }
}

/// The fused shape on bundles at `p .. p+n` and `p+n .. p+2n`.
fn fused_slices(n: usize, p: usize, a: usize) -> Vec<Slice> {
    let turn = n - a / 2;
    let mut s = vec![Slice::Jw { n, pos: p }, Slice::Jw { n, pos: p + n }];
    s.extend((0..turn).map(|t| Slice::Cap(p + n - 1 - t)));
    if a > 0 {
        s.push(Slice::Jw { n: a, pos: p });
    }
    s.extend((0..turn).map(|t| Slice::Cup(p + a / 2 + t)));
    s.extend([Slice::Jw { n, pos: p }, Slice::Jw { n, pos: p + n }]);
    s
}

/// Expands the decorated `n`-cable of `d` over the colours of the fused edge
/// through the twist region `region`.
pub fn fusion_expand(d: &Diagram, region: &[usize], n: usize) -> Result<FusionExpansion> {
    if n == 0 {
        return Err(Error::InvalidArgument("cable width must be positive".into()));
    }
    let tr = TwistRegion::new(d, region)?;
    let sliced = slice_diagram(d, Some(&tr))?;
    let (start, pos, positive) = sliced.box_site.expect("twist region is drawn");
    let r = tr.len() as i64 * if positive { 1 } else { -1 };
    let base = &sliced.program;
    let mut terms = Vec::new();
    for a in (0..=2 * n).step_by(2) {
        let insert = fused_slices(n, n * pos, a);
        let program = base.cable_with(n, true, Some((start..start + tr.len(), &insert)));
        terms.push(FusionTerm {
            a,
            coeff: fusion_coefficient(a, r, n)?,
            program,
        });
    }
    Ok(FusionExpansion {
        r,
        n,
        terms,
        direct: base.cable(n, true),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::skein::slicer::twist_regions;

    fn check(d: &Diagram, region: &[usize], n: usize) -> FusionExpansion {
        let cfg = SweepConfig::default();
        let e = fusion_expand(d, region, n).unwrap();
        let direct = bracket_sweep(&e.direct, &cfg).unwrap();
        assert!(e.evaluate(&cfg).unwrap().equals(&direct), "n = {n}, r = {}", e.r);
        e
    }

    #[test]
    fn single_crossing_is_the_skein_relation() {
        for s in [1, -1] {
            let k = Diagram::unknot().add_kink(s).unwrap();
            let e = check(&k, &[0], 1);
            assert_eq!(e.terms.len(), 2);
        }
    }

    #[test]
    fn twist_regions_of_knots() {
        let t = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        for n in 1..=2 {
            check(&t, &[0, 1], n);
            check(&t.mirror(), &[0, 1], n);
        }
        let f8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        for tr in twist_regions(&f8, 1) {
            check(&f8, &tr.crossings, 2);
        }
    }

    #[test]
    fn coefficient_degree() {
        for n in 1..=3usize {
            for r in -2..=2i64 {
                for a in (0..=2 * n).step_by(2) {
                    let (ni, ai) = (n as i64, a as i64);
                    let c = fusion_coefficient(a, r, n).unwrap();
                    let deg = c.max_deg().unwrap();
                    // 2(r-1)n + (1-r)a + rn² - ra²/2
                    let expect = 2 * (r - 1) * ni + (1 - r) * ai + r * ni * ni - r * ai * ai / 2;
                    assert_eq!(deg, expect, "a={a} r={r} n={n}");
                }
            }
        }
    }
}
