//! The fixture-wide invariant matrix behind `skeinkit verify`.

use num_rational::Rational64;
use serde_json::{json, Value};

use super::fixtures::{load_fixtures, FixtureRecord};
use super::{Assertion, Context, Report};
use crate::bounds::{self, DiameterMode, SumTarget};
use crate::diagram::Diagram;
use crate::error::Result;
use crate::jones::{self, ColoredJones, Engine};
use crate::par;
use crate::skein::state_sum::{bracket_state_sum, DEFAULT_STATE_SUM_CAP};
use crate::skein::{bracket_sweep_poly, to_slice_program};

struct Checks {
    prefix: String,
    out: Vec<Assertion>,
}

impl Checks {
    fn new(prefix: &str) -> Self {
        Self {
            prefix: prefix.into(),
            out: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.out
            .push(Assertion::new(format!("{}/{name}", self.prefix), pass, detail));
    }

    /// Records an error as a failed assertion instead of aborting the run.
    fn attempt<T>(&mut self, name: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.push(name, false, e.to_string());
                None
            }
        }
    }
}

fn q(n: i64) -> Rational64 {
    Rational64::from(n)
}

fn check_record(rec: &FixtureRecord, n_max: usize, ctx: &Context) -> Vec<Assertion> {
    let mut ck = Checks::new(&rec.name);
    let Some(d) = ck.attempt("load", rec.diagram()) else {
        return ck.out;
    };
    ck.push("load", true, "declared values match");
    let cfg = &ctx.cfg;
    let c = d.crossing_count() as i64;
    let ad = d.adequacy();

    if c <= 10 {
        let sweep = to_slice_program(&d).and_then(|p| bracket_sweep_poly(&p, cfg));
        let naive = bracket_state_sum(&d, DEFAULT_STATE_SUM_CAP, cfg.exec);
        if let (Some(a), Some(b)) = (ck.attempt("bracket_oracle", sweep), ck.attempt("bracket_oracle", naive)) {
            ck.push("bracket_oracle", a == b, "sweep bracket equals the state sum");
        }
    }

    let colors: Vec<usize> = (2..=n_max).collect();
    let direct = jones::for_colors(cfg.exec, &colors, |n| jones::colored_jones(&d, n, cfg));
    let cheb = jones::for_colors(cfg.exec, &colors, |n| jones::colored_jones_chebyshev(&d, n, cfg));
    let (Some(direct), Some(cheb)) = (ck.attempt("jones", direct), ck.attempt("jones", cheb)) else {
        return ck.out;
    };
    let same = direct.iter().zip(&cheb).all(|(a, b)| a.poly == b.poly);
    ck.push(
        "strategy_equivalence",
        same,
        format!("direct and Chebyshev agree for n = 2..{n_max}"),
    );
    let reduced_ok = cheb.iter().all(|j| jones::reduced(j).is_ok());
    ck.push("reduced_exact", reduced_ok, "J_K(n) / J_U(n) divides exactly");

    let f = bounds::diagram_degree_formulas(&d);
    let g = d.turaev_genus().unwrap_or(0) as i64;
    let env = bounds::span_envelope(c, g);
    let mut top_ok = true;
    let mut bottom_ok = true;
    let mut env_ok = true;
    for j in &cheb {
        let n = j.n as i64;
        if ad.a_adequate {
            top_ok &= j.t_min_deg * 4 == f.top.eval(n);
        }
        if ad.b_adequate {
            bottom_ok &= j.t_max_deg * 4 == f.bottom.eval(n);
        }
        let span = q(j.span());
        env_ok &= if ad.adequate() {
            span == env.eval(n)
        } else {
            span < env.eval(n)
        };
    }
    if ad.a_adequate {
        ck.push("degree_formula_top", top_ok, format!("4d- = {}", f.top));
    }
    if ad.b_adequate {
        ck.push("degree_formula_bottom", bottom_ok, format!("4d+ = {}", f.bottom));
    }
    let rel = if ad.adequate() { "equals" } else { "is strictly below" };
    ck.push("span_envelope", env_ok, format!("span {rel} {env}"));

    let mirror = d.mirror();
    let mj = jones::for_colors(cfg.exec, &colors, |n| jones::colored_jones_chebyshev(&mirror, n, cfg));
    if let Some(mj) = ck.attempt("mirror_duality", mj) {
        let ok = cheb.iter().zip(&mj).all(|(a, b)| a.t_max_deg == -b.t_min_deg);
        ck.push("mirror_duality", ok, "d+[K] = -d-[K*]");
    }

    for s in [1i8, -1] {
        let name = format!("framing_kink_{}", if s > 0 { "pos" } else { "neg" });
        let k = d.add_kink(s);
        let kj = k.and_then(|k| {
            jones::for_colors(cfg.exec, &colors[..colors.len().min(2)], |n| {
                jones::colored_jones_chebyshev(&k, n, cfg)
            })
        });
        if let Some(kj) = ck.attempt(&name, kj) {
            let ok = kj.iter().zip(&cheb).all(|(a, b)| a.poly == b.poly);
            ck.push(&name, ok, "J unchanged by a kink");
        }
    }

    let gaps = bounds::gap_report(&d, 3, cfg);
    if let Some(gr) = ck.attempt("h_bound", gaps) {
        let ok = gr
            .rows
            .iter()
            .all(|r| if ad.a_adequate { r.gap == 0 } else { r.gap >= 0 });
        let what = if ad.a_adequate {
            "deg<D^n> = H_n"
        } else {
            "deg<D^n> <= H_n"
        };
        ck.push("h_bound", ok, format!("{what} for n = 1..3"));
    }
    let kinked = d.add_kink(-1).and_then(|k| bounds::gap_report(&k, 3, cfg));
    if let Some(gr) = ck.attempt("kink_gap", kinked) {
        let gaps: Vec<i64> = gr.rows.iter().map(|r| r.gap).collect();
        let ok = !gr.a_adequate && gr.positive() && gr.strictly_increasing();
        ck.push("kink_gap", ok, format!("gaps {gaps:?} positive and increasing"));
    }

    if ad.adequate() && n_max >= 4 {
        let fit = bounds::jones_diameter(
            &d,
            DiameterMode::Fit {
                start: 1,
                points: n_max,
            },
            cfg,
        );
        if let Some(fit) = ck.attempt("diameter_fit", fit) {
            ck.push(
                "diameter_fit",
                fit.diameter == q(2 * c),
                format!("fitted diameter {} = 2c(D)", fit.diameter),
            );
        }
    }

    if ad.adequate() && d.writhe() == 0 && d.c_plus() > 0 {
        if let Some(ch) = ck.attempt("whitehead_chain", bounds::whitehead_chain(&d, -1)) {
            let (cp, cm, vb) = bounds::negative_double_counts(c, ad.v_b as i64);
            let counts = (ch.double_c_plus, ch.double_c_minus, ch.double_adequacy.v_b as i64) == (cp, cm, vb);
            let verdict = ch.verdict.as_ref().and_then(|v| v.c_k) == Some(4 * c + 2);
            ck.push(
                "whitehead_chain",
                counts && ch.double_adequacy.b_adequate && ch.predictor_matches_exact && verdict,
                format!(
                    "W-: {} crossings, predictor d+ = {}",
                    ch.double_crossings, ch.d_plus.d_plus
                ),
            );
        }
    }
    ck.out
}

fn find(records: &[FixtureRecord], name: &str) -> Option<Diagram> {
    records.iter().find(|r| r.name == name).and_then(|r| r.diagram().ok())
}

fn global_checks(records: &[FixtureRecord], ctx: &Context) -> Vec<Assertion> {
    let mut ck = Checks::new("global");
    let cfg = &ctx.cfg;
    if let (Some(a), Some(b)) = (find(records, "3_1"), find(records, "4_1")) {
        let sum = a.connected_sum(&b);
        let res: Result<Vec<(ColoredJones, ColoredJones, ColoredJones)>> = sum.and_then(|s| {
            [2usize, 3]
                .iter()
                .map(|&n| {
                    Ok((
                        jones::colored_jones_chebyshev(&a, n, cfg)?,
                        jones::colored_jones_chebyshev(&b, n, cfg)?,
                        jones::colored_jones_chebyshev(&s, n, cfg)?,
                    ))
                })
                .collect()
        });
        if let Some(rows) = ck.attempt("connected_sum", res) {
            let mult = rows.iter().all(
                |(x, y, s)| match (jones::reduced(x), jones::reduced(y), jones::reduced(s)) {
                    (Ok(x), Ok(y), Ok(s)) => &x * &y == s,
                    _ => false,
                },
            );
            ck.push(
                "connected_sum_multiplicative",
                mult,
                "reduced J(3_1 # 4_1) = reduced J(3_1) reduced J(4_1), n = 2, 3",
            );
            let fa = bounds::diagram_degree_formulas(&a);
            let fb = bounds::diagram_degree_formulas(&b);
            let quarter = Rational64::new(1, 4);
            let span_q =
                bounds::connected_sum_degree(fa.span().scale(quarter), fb.span().scale(quarter), SumTarget::Span);
            let ok = rows.iter().all(|(x, _, s)| q(s.span()) / 4 == span_q.eval(x.n as i64));
            ck.push("connected_sum_span", ok, format!("span/4 of the sum = {span_q}"));
            let s = a.connected_sum(&b).expect("built above");
            let dj = bounds::jones_diameter(&s, DiameterMode::AdequateClosedForm, cfg);
            let da = bounds::jones_diameter(&a, DiameterMode::AdequateClosedForm, cfg);
            let db = bounds::jones_diameter(&b, DiameterMode::AdequateClosedForm, cfg);
            if let (Some(s), Some(a), Some(b)) = (
                ck.attempt("dj_additive", dj),
                ck.attempt("dj_additive", da),
                ck.attempt("dj_additive", db),
            ) {
                ck.push(
                    "dj_additive",
                    s.diameter == a.diameter + b.diameter,
                    format!("{} = {} + {}", s.diameter, a.diameter, b.diameter),
                );
            }
        }
    }
    let mut part_ok = true;
    for k in 0..=12usize {
        for s in 1..=12usize {
            let p = bounds::minimal_partition(k, s).expect("s >= 1");
            let sq: usize = p.iter().map(|x| x * x).sum();
            part_ok &= p.iter().sum::<usize>() == k && sq <= min_square_sum(k, s);
        }
    }
    ck.push("minimal_partition", part_ok, "minimal square sum for k, s <= 12");
    ck.out
}

/// Smallest `Σ k_i²` over all ways to write `k` as `s` nonnegative parts, by dynamic programming.
fn min_square_sum(k: usize, s: usize) -> usize {
    let mut best = vec![usize::MAX; k + 1];
    best[0] = 0;
    for _ in 0..s {
        let mut next = vec![usize::MAX; k + 1];
        for (total, slot) in next.iter_mut().enumerate() {
            for part in 0..=total {
                if best[total - part] != usize::MAX {
                    *slot = (*slot).min(best[total - part] + part * part);
                }
            }
        }
        best = next;
    }
    best[k]
}

pub fn cmd_verify(csv_text: &str, n_max: usize, ctx: &Context) -> Result<Report> {
    let set = load_fixtures(csv_text.as_bytes())?;
    for w in &set.warnings {
        eprintln!("warning: {w}");
    }
    let per: Vec<Vec<Assertion>> = par::map_vec(ctx.cfg.exec, &set.records, |r| check_record(r, n_max, ctx));
    let mut assertions: Vec<Assertion> = per.into_iter().flatten().collect();
    assertions.extend(global_checks(&set.records, ctx));
    let names: Vec<&str> = set.records.iter().map(|r| r.name.as_str()).collect();
    let failed = assertions.iter().filter(|a| !a.pass).count();
    let result: Value = json!({
        "records": names.len(),
        "assertions": assertions.len(),
        "failed": failed,
        "warnings": set.warnings,
    });
    Ok(Report::new(
        "verify",
        Engine::Chebyshev,
        json!({ "fixtures": names, "n_max": n_max }),
        result,
        assertions,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_sums() {
        assert_eq!(min_square_sum(5, 3), 9);
        assert_eq!(min_square_sum(0, 4), 0);
        assert_eq!(min_square_sum(7, 1), 49);
    }
}
