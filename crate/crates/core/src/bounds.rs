//! Closed-form degree predictors and the crossing-number toolkit built on them.
//!
//! Quadratics here are exact: coefficients are `Rational64` and fits are
//! interpolations, never regressions.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::jones::{colored_jones_with, decorated_cable_bracket, ser_ratio, ColoredJones, Engine};
use crate::skein::SweepConfig;

fn r(n: i64) -> Rational64 {
    Rational64::from(n)
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

/// `a2 n² + a1 n + a0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeQuadratic {
    #[serde(serialize_with = "ser_ratio")]
    pub a2: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub a1: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub a0: Rational64,
}

impl DegreeQuadratic {
    pub fn new(a2: Rational64, a1: Rational64, a0: Rational64) -> Self {
        Self { a2, a1, a0 }
    }

    pub fn from_ints(a2: i64, a1: i64, a0: i64) -> Self {
        Self::new(r(a2), r(a1), r(a0))
    }

    pub fn eval(&self, n: i64) -> Rational64 {
        self.a2 * n * n + self.a1 * n + self.a0
    }

    pub fn scale(&self, k: Rational64) -> Self {
        Self::new(self.a2 * k, self.a1 * k, self.a0 * k)
    }
}

impl std::ops::Add for DegreeQuadratic {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a2 + o.a2, self.a1 + o.a1, self.a0 + o.a0)
    }
}

impl std::ops::Sub for DegreeQuadratic {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a2 - o.a2, self.a1 - o.a1, self.a0 - o.a0)
    }
}

impl fmt::Display for DegreeQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, m) in [(self.a2, "n^2"), (self.a1, "n"), (self.a0, "")] {
            if c.is_zero() {
                continue;
            }
            let sign = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mag = c.abs();
            let body = match (mag == r(1), m.is_empty(), mag.is_integer()) {
                (_, true, _) => mag.to_string(),
                (true, false, _) => m.to_string(),
                (false, false, true) => format!("{mag}{m}"),
                (false, false, false) => format!("({mag}){m}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AdequateFormulas {
    /// `4d₋`, valid on A-adequate diagrams.
    pub top: DegreeQuadratic,
    /// `4d₊`, valid on B-adequate diagrams.
    pub bottom: DegreeQuadratic,
}

impl AdequateFormulas {
    pub fn span(&self) -> DegreeQuadratic {
        self.bottom - self.top
    }
}

/// `4d₋ = -2c₋n² + 2(c - v_A)n + 2v_A - 2c₊` and `4d₊ = 2c₊n² + 2(v_B - c)n + 2c₋ - 2v_B`,
/// in the colour `n`.
pub fn adequate_degree_formulas(c_plus: i64, c_minus: i64, v_a: i64, v_b: i64) -> AdequateFormulas {
    let c = c_plus + c_minus;
    AdequateFormulas {
        top: DegreeQuadratic::from_ints(-2 * c_minus, 2 * (c - v_a), 2 * v_a - 2 * c_plus),
        bottom: DegreeQuadratic::from_ints(2 * c_plus, 2 * (v_b - c), 2 * c_minus - 2 * v_b),
    }
}

/// The formulas for a diagram, using its own counts.
pub fn diagram_degree_formulas(d: &Diagram) -> AdequateFormulas {
    let ad = d.adequacy();
    adequate_degree_formulas(d.c_plus() as i64, d.c_minus() as i64, ad.v_a as i64, ad.v_b as i64)
}

/// Upper envelope for `4d₊ - 4d₋`: `2c n² + (4 - 4g_T - 2c) n + 4g_T - 4`, attained on adequate diagrams.
pub fn span_envelope(c: i64, turaev_genus: i64) -> DegreeQuadratic {
    let g = turaev_genus;
    DegreeQuadratic::from_ints(2 * c, 4 - 4 * g - 2 * c, 4 * g - 4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HBound {
    /// `H_n = c n² + 2 v_A n`, the maximal A-degree of the decorated `n`-cable.
    #[serde(rename = "H")]
    pub big_h: i64,
    /// `-H/4 + wr (n² - 1)/4`.
    #[serde(rename = "h", serialize_with = "ser_ratio")]
    pub h: Rational64,
}

pub fn h_and_big_h(d: &Diagram, n: i64) -> HBound {
    let c = d.crossing_count() as i64;
    let v_a = d.adequacy().v_a as i64;
    let big_h = c * n * n + 2 * v_a * n;
    HBound {
        big_h,
        h: Rational64::new(-big_h, 4) + Rational64::new(d.writhe() * (n * n - 1), 4),
    }
}

/// Maximal A-degree of the fusion coefficient `I(a, r, n)`:
/// `2(r-1)n + (1-r)a + rn² - r a²/2`.
pub fn fusion_degree(a: i64, r_: i64, n: i64) -> Result<Rational64> {
    if n < 0 || a < 0 || a % 2 == 1 || a > 2 * n {
        return Err(Error::InadmissibleTriple(n, n, a));
    }
    if r_ == 0 {
        return Err(Error::ZeroTwist);
    }
    Ok(r(2 * (r_ - 1) * n + (1 - r_) * a + r_ * n * n) - Rational64::new(r_ * a * a, 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DoublePrediction {
    pub clasp_sign: i8,
    /// Predicted `d₊` of the double, in `t`.
    pub d_plus: DegreeQuadratic,
    /// Valid for `n` large enough only.
    pub asymptotic: bool,
}

/// Predicts `d₊[J_{W±(K)}(n)]` from `d₊[J_K(n)] = a2 n² + a1 n + a0`.
pub fn bmt_double_predictor(q: DegreeQuadratic, clasp_sign: i8) -> Result<DoublePrediction> {
    let (a2, a1, a0) = (q.a2, q.a1, q.a0);
    if a1 > r(0) {
        return Err(Error::HypothesesViolated(format!("a1 = {a1} > 0")));
    }
    let d_plus = match clasp_sign {
        -1 => {
            if a2 <= r(0) {
                return Err(Error::HypothesesViolated(format!("a2 = {a2} <= 0")));
            }
            DegreeQuadratic::new(a2 * 4, -a2 * 4 + a1 * 2 - half(), a2 - a1 + a0 + half())
        }
        1 => {
            if a2 <= Rational64::new(1, 8) {
                return Err(Error::HypothesesViolated(format!("a2 = {a2} <= 1/8")));
            }
            DegreeQuadratic::new(a2 * 4 + half(), -a2 * 4 + a1 * 2, a2 - a1 + a0 - half())
        }
        s => return Err(Error::InvalidArgument(format!("clasp sign must be ±1, got {s}"))),
    };
    Ok(DoublePrediction {
        clasp_sign,
        d_plus,
        asymptotic: true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Fitted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiameterMode {
    AdequateClosedForm,
    /// Fits `4d₊` and `4d₋` over `points` consecutive colours starting at `start`.
    Fit {
        start: usize,
        points: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeReport {
    /// Leading coefficient of `4d₊`.
    #[serde(serialize_with = "ser_ratio")]
    pub js: Rational64,
    /// Leading coefficient of `4d₋`.
    #[serde(serialize_with = "ser_ratio")]
    pub js_star: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub diameter: Rational64,
    pub provenance: Provenance,
    /// Fitted `4d₊` and `4d₋` quadratics, when fitted.
    pub bottom: Option<DegreeQuadratic>,
    pub top: Option<DegreeQuadratic>,
    pub colors: Vec<usize>,
}

/// Exact quadratic through the first three points; every later point must lie on it.
/// The `n` values must be consecutive.
pub fn fit_quadratic(points: &[(i64, Rational64)]) -> Result<DegreeQuadratic> {
    if points.len() < 3 {
        return Err(Error::InvalidArgument("a quadratic fit needs three points".into()));
    }
    if points.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::InvalidArgument("fit points must be at consecutive n".into()));
    }
    let (n0, y0) = points[0];
    let (y1, y2) = (points[1].1, points[2].1);
    let a2 = (y2 - y1 * 2 + y0) / 2;
    let a1 = (y1 - y0) - a2 * (2 * n0 + 1);
    let a0 = y0 - a2 * n0 * n0 - a1 * n0;
    let q = DegreeQuadratic::new(a2, a1, a0);
    for &(n, y) in &points[3..] {
        if q.eval(n) != y {
            return Err(Error::FitInconsistent(format!(
                "value {y} at n = {n} is off the quadratic {q} (predicted {}); quasi-polynomial suspected, fit unreliable",
                q.eval(n)
            )));
        }
    }
    Ok(q)
}

pub fn jones_diameter(d: &Diagram, mode: DiameterMode, cfg: &SweepConfig) -> Result<SlopeReport> {
    match mode {
        DiameterMode::AdequateClosedForm => {
            let ad = d.adequacy();
            if !ad.adequate() {
                return Err(Error::NotAdequate(format!(
                    "A-adequate: {}, B-adequate: {}",
                    ad.a_adequate, ad.b_adequate
                )));
            }
            let (cp, cm) = (d.c_plus() as i64, d.c_minus() as i64);
            Ok(SlopeReport {
                js: r(2 * cp),
                js_star: r(-2 * cm),
                diameter: r(2 * (cp + cm)),
                provenance: Provenance::ClosedForm,
                bottom: None,
                top: None,
                colors: vec![],
            })
        }
        DiameterMode::Fit { start, points } => {
            if points < 4 {
                return Err(Error::InvalidArgument(
                    "the fit needs a fourth colour as consistency check".into(),
                ));
            }
            let colors: Vec<usize> = (start.max(1)..start.max(1) + points).collect();
            let engine = if d.component_count() == 1 {
                Engine::Chebyshev
            } else {
                Engine::Sweep
            };
            let js: Vec<ColoredJones> = colors
                .iter()
                .map(|&n| colored_jones_with(d, n, engine, cfg))
                .collect::<Result<_>>()?;
            let pts = |f: fn(&ColoredJones) -> Rational64| -> Vec<(i64, Rational64)> {
                js.iter().map(|j| (j.n as i64, f(j) * 4)).collect()
            };
            let bottom = fit_quadratic(&pts(|j| j.t_max_deg))?;
            let top = fit_quadratic(&pts(|j| j.t_min_deg))?;
            Ok(SlopeReport {
                js: bottom.a2,
                js_star: top.a2,
                diameter: (bottom.a2 - top.a2).abs(),
                provenance: Provenance::Fitted,
                bottom: Some(bottom),
                top: Some(top),
                colors,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingVerdict {
    pub determined: bool,
    pub c_k: Option<i64>,
    /// `(lower, upper]` when undetermined.
    #[serde(serialize_with = "ser_interval")]
    pub interval: Option<(Rational64, i64)>,
}

fn ser_interval<S: serde::Serializer>(v: &Option<(Rational64, i64)>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some((lo, hi)) => s.serialize_str(&format!("({lo}, {hi}]")),
        None => s.serialize_none(),
    }
}

/// Pins down `c(K)` from a diagram with `c_d` crossings and the Jones diameter.
/// `adequate` refers to the knot, not just the diagram at hand.
pub fn crossing_number_criterion(c_d: i64, diameter: Rational64, adequate: bool) -> Result<CrossingVerdict> {
    if diameter > r(2 * c_d) || diameter < r(0) {
        return Err(Error::InconsistentInput(format!(
            "diameter {diameter} is outside [0, 2c(D)] = [0, {}]",
            2 * c_d
        )));
    }
    let half_d = diameter / 2;
    if adequate {
        if !half_d.is_integer() {
            return Err(Error::InconsistentInput(format!(
                "adequate knots have even diameter, got {diameter}"
            )));
        }
        return Ok(CrossingVerdict {
            determined: true,
            c_k: Some(half_d.to_integer()),
            interval: None,
        });
    }
    // non-adequate: dj < 2c(K) <= 2c_d
    if diameter == r(2 * c_d) {
        return Err(Error::InconsistentInput(format!(
            "diameter {diameter} = 2c(D) is impossible for a non-adequate knot"
        )));
    }
    let lowest = half_d.floor().to_integer() + 1;
    if lowest == c_d {
        return Ok(CrossingVerdict {
            determined: true,
            c_k: Some(c_d),
            interval: None,
        });
    }
    Ok(CrossingVerdict {
        determined: false,
        c_k: None,
        interval: Some((half_d, c_d)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleBounds {
    pub lower: i64,
    pub upper: i64,
    pub exact: Option<i64>,
}

/// `4c + 1 <= c(W±(K)) <= 4c + 2 + 2|wr|`, exact when `wr = 0`.
pub fn double_crossing_bounds(c_k: i64, wr_k: i64) -> DoubleBounds {
    DoubleBounds {
        lower: 4 * c_k + 1,
        upper: 4 * c_k + 2 + 2 * wr_k.abs(),
        exact: (wr_k == 0).then_some(4 * c_k + 2),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumTarget {
    /// `-4d₋` or `4d₊`; both obey the same rule.
    Degree,
    /// `d₊ - d₋`, in `t`.
    Span,
}

/// Degree quadratic of `K₁ # K₂` from those of the summands. Follows from
/// multiplicativity of the reduced polynomial and `±4d∓[J_U(n)] = 2n - 2`.
pub fn connected_sum_degree(q1: DegreeQuadratic, q2: DegreeQuadratic, which: SumTarget) -> DegreeQuadratic {
    let unknot = match which {
        SumTarget::Degree => DegreeQuadratic::from_ints(0, 2, -2),
        SumTarget::Span => DegreeQuadratic::from_ints(0, 1, -1),
    };
    q1 + q2 - unknot
}

/// `b` copies of `⌈k/s⌉` then `s - b` copies of `⌊k/s⌋`, where `k = μs + b`.
pub fn minimal_partition(k: usize, s: usize) -> Result<Vec<usize>> {
    if s == 0 {
        return Err(Error::InvalidArgument("at least one part is needed".into()));
    }
    let (mu, b) = (k / s, k % s);
    Ok((0..s).map(|i| if i < b { mu + 1 } else { mu }).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GapRow {
    pub n: usize,
    #[serde(rename = "H")]
    pub big_h: i64,
    /// Maximal A-degree of the decorated `n`-cable.
    pub degree: i64,
    pub gap: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub a_adequate: bool,
    pub rows: Vec<GapRow>,
}

impl GapReport {
    pub fn positive(&self) -> bool {
        self.rows.iter().all(|r| r.gap > 0)
    }

    pub fn strictly_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].gap > w[0].gap)
    }
}

/// `H_n - deg⟨𝐃ⁿ⟩` for `n = 1..=n_max`.
pub fn gap_report(d: &Diagram, n_max: usize, cfg: &SweepConfig) -> Result<GapReport> {
    let rows = crate::jones::for_colors(cfg.exec, &(1..=n_max).collect::<Vec<_>>(), |n| {
        let b = decorated_cable_bracket(d, n, cfg)?;
        let degree = b
            .max_deg()
            .ok_or_else(|| Error::InexactDivision(format!("decorated {n}-cable vanished")))?;
        let big_h = h_and_big_h(d, n as i64).big_h;
        Ok(GapRow {
            n,
            big_h,
            degree,
            gap: big_h - degree,
        })
    })?;
    Ok(GapReport {
        a_adequate: d.adequacy().a_adequate,
        rows,
    })
}

/// `(c₊, c₋, v_B)` of the untwisted negative double built from a zero-writhe
/// diagram with `c` crossings and `v_B` all-B circles: every crossing becomes
/// two positive and two negative ones, and the clasp adds two negative crossings
/// and one all-B circle.
pub fn negative_double_counts(c: i64, v_b: i64) -> (i64, i64, i64) {
    (2 * c, 2 * c + 2, 2 * v_b + 1)
}

/// `4d₊` of the negative double from the bottom formula applied to [`negative_double_counts`].
pub fn negative_double_bottom(c: i64, v_b: i64) -> DegreeQuadratic {
    let (cp, cm, vb) = negative_double_counts(c, v_b);
    adequate_degree_formulas(cp, cm, 0, vb).bottom
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhiteheadChain {
    pub clasp_sign: i8,
    pub c_k: i64,
    pub wr_k: i64,
    pub double_pd: String,
    pub double_crossings: i64,
    pub double_adequacy: crate::diagram::Adequacy,
    pub double_c_plus: i64,
    pub double_c_minus: i64,
    pub bounds: DoubleBounds,
    /// Predicted `d₊` of the double.
    pub d_plus: DoublePrediction,
    /// Predicted `-d₋` of the double, as `d₊` of the opposite double of the mirror.
    pub neg_d_minus: DoublePrediction,
    /// `4(d₂ of d₊) + 4(d₂ of -d₋)`.
    #[serde(serialize_with = "ser_ratio")]
    pub diameter: Rational64,
    /// The exact formula on the constructed diagram, in `t`, for the side the predictor covers:
    /// `d₊` for a negative clasp, `-d₋` for a positive one.
    pub exact_on_double: Option<DegreeQuadratic>,
    pub predictor_matches_exact: bool,
    /// Only issued when the double is certified non-adequate (zero-writhe adequate companion).
    pub verdict: Option<CrossingVerdict>,
}

/// Builds `W±(K)` from an adequate diagram of `K` and runs the degree and crossing-number chain.
pub fn whitehead_chain(d: &Diagram, clasp_sign: i8) -> Result<WhiteheadChain> {
    let ad = d.adequacy();
    if !ad.adequate() {
        return Err(Error::NotAdequate("the companion diagram must be adequate".into()));
    }
    let w = d.whitehead_double(clasp_sign, true)?;
    let quarter = Rational64::new(1, 4);
    let k = diagram_degree_formulas(d);
    let k_star = diagram_degree_formulas(&d.mirror());
    // d₊ of K and of K*, in t
    let (dp, dp_star) = (k.bottom.scale(quarter), k_star.bottom.scale(quarter));
    let d_plus = bmt_double_predictor(dp, clasp_sign)?;
    let neg_d_minus = bmt_double_predictor(dp_star, -clasp_sign)?;
    let diameter = (d_plus.d_plus.a2 + neg_d_minus.d_plus.a2) * 4;
    let wad = w.adequacy();
    let wf = diagram_degree_formulas(&w);
    let exact_on_double = match clasp_sign {
        -1 if wad.b_adequate => Some(wf.bottom.scale(quarter)),
        1 if wad.a_adequate => Some(wf.top.scale(-quarter)),
        _ => None,
    };
    let predicted = if clasp_sign < 0 {
        d_plus.d_plus
    } else {
        neg_d_minus.d_plus
    };
    let (c_k, wr_k) = (d.crossing_count() as i64, d.writhe());
    let verdict = if wr_k == 0 {
        Some(crossing_number_criterion(w.crossing_count() as i64, diameter, false)?)
    } else {
        None
    };
    Ok(WhiteheadChain {
        clasp_sign,
        c_k,
        wr_k,
        double_pd: w.to_pd_string(),
        double_crossings: w.crossing_count() as i64,
        double_adequacy: wad,
        double_c_plus: w.c_plus() as i64,
        double_c_minus: w.c_minus() as i64,
        bounds: double_crossing_bounds(c_k, wr_k),
        d_plus,
        neg_d_minus,
        diameter,
        predictor_matches_exact: exact_on_double == Some(predicted),
        exact_on_double,
        verdict,
    })
}
