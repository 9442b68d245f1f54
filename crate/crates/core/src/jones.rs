//! Coloured Jones polynomials from decorated cables.
//!
//! `J_K(n)` is `((-1)^{n-1} A^{-(n²-1)})^{wr(D)} ⟨D^{n-1}⟩`, where `D^{n-1}`
//! is the blackboard `(n-1)`-cable carrying `f_{n-1}` on every component,
//! and `A = t^{-1/4}`. With this normalisation `J_U(n) = Δ_{n-1}`, which is
//! `(-1)^{n-1} [n]` in `t`, and the right-handed trefoil has `J(2)/J_U(2) = t + t³ - t⁴`.

use num_bigint::BigInt;
use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::laurent::{delta, LaurentPoly};
use crate::par::Exec;
use crate::skein::state_sum::{bracket_state_sum, DEFAULT_STATE_SUM_CAP};
use crate::skein::sweep::{bracket_sweep, SweepConfig};
use crate::skein::to_slice_program;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    /// `2^c` state sum; only for `n = 2`.
    StateSum,
    /// Sweep of the projector-decorated cable.
    Sweep,
    /// Sweep of plain cables combined by the Chebyshev expansion of the projector closure.
    Chebyshev,
}

impl Engine {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "state_sum" => Ok(Engine::StateSum),
            "sweep" | "direct" => Ok(Engine::Sweep),
            "chebyshev" => Ok(Engine::Chebyshev),
            _ => Err(Error::InvalidArgument(format!("unknown engine `{s}`"))),
        }
    }
}

pub(crate) fn ser_ratio<S: Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredJones {
    pub n: usize,
    /// The polynomial in `A`.
    pub poly: LaurentPoly,
    #[serde(serialize_with = "ser_ratio")]
    pub t_max_deg: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub t_min_deg: Rational64,
    pub engine: Engine,
}

impl ColoredJones {
    fn new(n: usize, poly: LaurentPoly, engine: Engine) -> Result<Self> {
        let (lo, hi) = match (poly.min_deg(), poly.max_deg()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::InexactDivision(format!("J({n}) vanished"))),
        };
        Ok(Self {
            n,
            poly,
            t_max_deg: Rational64::new(-lo, 4),
            t_min_deg: Rational64::new(-hi, 4),
            engine,
        })
    }

    /// `4d₊ - 4d₋`.
    pub fn span(&self) -> i64 {
        (self.t_max_deg * 4 - self.t_min_deg * 4).to_integer()
    }

    /// The polynomial written in `t`, highest degree first.
    pub fn to_t_string(&self) -> String {
        format_in_t(&self.poly)
    }
}

/// Writes a polynomial in `A` as one in `t = A^-4`.
pub fn format_in_t(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().iter().enumerate() {
        let exp = Rational64::new(-e, 4);
        let neg = c < &BigInt::from(0);
        let mag = if neg { -c.clone() } else { c.clone() };
        out.push_str(match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let one = mag == BigInt::from(1);
        let monomial = if exp == Rational64::from(0) {
            String::new()
        } else if exp == Rational64::from(1) {
            "t".into()
        } else if exp.is_integer() {
            format!("t^{exp}")
        } else {
            format!("t^({exp})")
        };
        match (one, monomial.is_empty()) {
            (_, true) => out.push_str(&mag.to_string()),
            (true, false) => out.push_str(&monomial),
            (false, false) => out.push_str(&format!("{mag}*{monomial}")),
        }
    }
    out
}

/// `((-1)^{n-1} A^{-(n²-1)})^{wr}`.
pub fn framing_factor(n: usize, writhe: i64) -> LaurentPoly {
    let n = n as i64;
    let sign = if ((n - 1) * writhe).rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::monomial(-(n * n - 1) * writhe, sign)
}

/// `J_U(n) = Δ_{n-1}`.
pub fn unknot_colored_jones(n: usize) -> LaurentPoly {
    delta(n as i64 - 1)
}

/// `⟨D^m⟩`: the `m`-cable with `f_m` on each component.
pub fn decorated_cable_bracket(d: &Diagram, m: usize, cfg: &SweepConfig) -> Result<LaurentPoly> {
    let p = to_slice_program(d)?.cable(m, true);
    bracket_sweep(&p, cfg)?.to_poly()
}

/// The plain blackboard `m`-cable, no projectors.
pub fn plain_cable_bracket(d: &Diagram, m: usize, cfg: &SweepConfig) -> Result<LaurentPoly> {
    let p = to_slice_program(d)?.cable(m, false);
    bracket_sweep(&p, cfg)?.to_poly()
}

/// Integer coefficients of `S_m(z)`: `S_0 = 1`, `S_1 = z`, `S_{k+1} = z S_k - S_{k-1}`.
pub fn chebyshev(m: usize) -> Vec<i64> {
    let mut prev = vec![1i64];
    let mut cur = vec![0, 1];
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let mut next = vec![0i64; cur.len() + 1];
        for (j, &c) in cur.iter().enumerate() {
            next[j + 1] += c;
        }
        for (j, &c) in prev.iter().enumerate() {
            next[j] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn check_color(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("colour n must be at least 1".into()));
    }
    Ok(())
}

/// `J_K(n)` from the projector-decorated cable.
pub fn colored_jones(d: &Diagram, n: usize, cfg: &SweepConfig) -> Result<ColoredJones> {
    colored_jones_with(d, n, Engine::Sweep, cfg)
}

/// `J_K(n)` from plain cables: `⟨D^{n-1}⟩ = Σ_j c_j ⟨D^j⟩` with `S_{n-1} = Σ_j c_j z^j`.
pub fn colored_jones_chebyshev(d: &Diagram, n: usize, cfg: &SweepConfig) -> Result<ColoredJones> {
    colored_jones_with(d, n, Engine::Chebyshev, cfg)
}

pub fn colored_jones_with(d: &Diagram, n: usize, engine: Engine, cfg: &SweepConfig) -> Result<ColoredJones> {
    check_color(n)?;
    let m = n - 1;
    let bracket = match engine {
        Engine::Sweep => decorated_cable_bracket(d, m, cfg)?,
        Engine::StateSum => {
            if n != 2 {
                return Err(Error::InvalidArgument(
                    "the state sum engine only computes n = 2".into(),
                ));
            }
            bracket_state_sum(d, DEFAULT_STATE_SUM_CAP, cfg.exec)?
        }
        Engine::Chebyshev => {
            if d.component_count() != 1 {
                return Err(Error::NotAKnot(d.component_count()));
            }
            let program = to_slice_program(d)?;
            let mut total = LaurentPoly::zero();
            for (j, &c) in chebyshev(m).iter().enumerate() {
                if c != 0 {
                    let b = bracket_sweep(&program.cable(j, false), cfg)?.to_poly()?;
                    total += b.scale(&BigInt::from(c));
                }
            }
            total
        }
    };
    ColoredJones::new(n, &framing_factor(n, d.writhe()) * &bracket, engine)
}

/// `J_K(n) / J_U(n)`, asserted exact.
pub fn reduced(j: &ColoredJones) -> Result<LaurentPoly> {
    j.poly.div_exact(&unknot_colored_jones(j.n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSpan {
    pub n: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub d_plus: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub d_minus: Rational64,
    /// `4d₊ - 4d₋`.
    pub span: i64,
    /// Extreme exponents of `A`.
    pub a_min: i64,
    pub a_max: i64,
}

impl DegreeSpan {
    pub fn of(j: &ColoredJones) -> Self {
        Self {
            n: j.n,
            d_plus: j.t_max_deg,
            d_minus: j.t_min_deg,
            span: j.span(),
            a_min: j.poly.min_deg().unwrap_or(0),
            a_max: j.poly.max_deg().unwrap_or(0),
        }
    }
}

pub fn degree_span(d: &Diagram, n: usize, cfg: &SweepConfig) -> Result<DegreeSpan> {
    Ok(DegreeSpan::of(&colored_jones(d, n, cfg)?))
}

/// Runs `f` for each colour in `ns`, in parallel when allowed; results keep input order.
pub fn for_colors<T: Send>(exec: Exec, ns: &[usize], f: impl Fn(usize) -> Result<T> + Sync + Send) -> Result<Vec<T>> {
    crate::par::map_vec(exec, ns, |&n| f(n)).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn cfg() -> SweepConfig {
        SweepConfig::default()
    }

    #[test]
    fn chebyshev_coefficients() {
        assert_eq!(chebyshev(0), vec![1]);
        assert_eq!(chebyshev(1), vec![0, 1]);
        assert_eq!(chebyshev(2), vec![-1, 0, 1]);
        assert_eq!(chebyshev(3), vec![0, -2, 0, 1]);
    }

    #[test]
    fn unknot_closed_form() {
        for n in 1..=8 {
            let j = colored_jones(&Diagram::unknot(), n, &cfg()).unwrap();
            // (-1)^{n-1} (t^{-n/2} - t^{n/2}) / (t^{-1/2} - t^{1/2}) with t^{1/2} = A^-2
            let num = &LaurentPoly::a_pow(2 * n as i64) - &LaurentPoly::a_pow(-2 * n as i64);
            let den = &LaurentPoly::a_pow(2) - &LaurentPoly::a_pow(-2);
            let mut closed = num.div_exact(&den).unwrap();
            if n % 2 == 0 {
                closed = -closed;
            }
            assert_eq!(j.poly, closed, "n = {n}");
            assert_eq!(j.span(), 4 * n as i64 - 4);
            assert!(reduced(&j).unwrap().is_one());
        }
    }

    #[test]
    fn trefoil_jones() {
        let t = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let j = colored_jones(&t, 2, &cfg()).unwrap();
        assert_eq!(j.poly.len(), 4);
        assert_eq!(j.to_t_string(), "t^(9/2) - t^(5/2) - t^(3/2) - t^(1/2)");
        let r = reduced(&j).unwrap();
        assert_eq!(format_in_t(&r), "-t^4 + t^3 + t");
        let s = colored_jones_with(&t, 2, Engine::StateSum, &cfg()).unwrap();
        assert_eq!(s.poly, j.poly);
    }

    #[test]
    fn engines_agree() {
        let f8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        for n in 1..=4 {
            let a = colored_jones(&f8, n, &cfg()).unwrap();
            let b = colored_jones_chebyshev(&f8, n, &cfg()).unwrap();
            assert_eq!(a.poly, b.poly, "n = {n}");
        }
    }

    #[test]
    fn framing_correction() {
        let f8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        for n in 2..=3 {
            let j = colored_jones(&f8, n, &cfg()).unwrap();
            for s in [1, -1] {
                let k = f8.add_kink(s).unwrap();
                assert_eq!(colored_jones(&k, n, &cfg()).unwrap().poly, j.poly, "n = {n}, kink {s}");
            }
        }
    }
}
