//! Top-to-bottom evaluation of a slice program. The state is a sparse map
//! from crossingless matchings of the current row to Laurent coefficients;
//! a matching is keyed by its Dyck word (bit `j` set when point `j` opens an arc).

use std::collections::HashMap;

use super::jw::jones_wenzl;
use super::program::{Slice, SliceProgram};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, LaurentRatio};
use crate::par::{fold_range, Exec};

/// Default cap on the number of matchings of the widest row: Catalan(12).
pub const DEFAULT_WIDTH_BUDGET: u64 = 208_012;
const MAX_WIDTH: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest admissible Catalan(w/2) over the row widths `w` of the program.
    pub budget: u64,
    pub exec: Exec,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_WIDTH_BUDGET,
            exec: Exec::default(),
        }
    }
}

pub fn catalan(k: usize) -> u64 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

type Key = u64;
type State = HashMap<Key, LaurentPoly>;

fn decode(key: Key, w: usize) -> Vec<u8> {
    let mut partner = vec![0u8; w];
    let mut stack = Vec::with_capacity(w / 2);
    for j in 0..w {
        if key >> j & 1 == 1 {
            stack.push(j);
        } else {
            let o = stack.pop().expect("valid Dyck word");
            partner[j] = o as u8;
            partner[o] = j as u8;
        }
    }
    partner
}

fn encode(partner: &[u8]) -> Key {
    partner
        .iter()
        .enumerate()
        .filter(|&(j, &q)| q as usize > j)
        .fold(0, |k, (j, _)| k | 1 << j)
}

/// Removes points `i`, `i+1`; returns the new matching and whether they closed a loop.
fn cap(p: &[u8], i: usize) -> (Vec<u8>, bool) {
    let (a, b) = (p[i] as usize, p[i + 1] as usize);
    let closed = a == i + 1;
    let mut q = p.to_vec();
    if !closed {
        q[a] = b as u8;
        q[b] = a as u8;
    }
    q.drain(i..i + 2);
    for v in q.iter_mut() {
        if *v as usize > i + 1 {
            *v -= 2;
        }
    }
    (q, closed)
}

/// Inserts a new arc on points `i`, `i+1`.
fn cup(p: &[u8], i: usize) -> Vec<u8> {
    let mut q: Vec<u8> = p.iter().map(|&v| if v as usize >= i { v + 2 } else { v }).collect();
    q.splice(i..i, [(i + 1) as u8, i as u8]);
    q
}

fn times_delta(c: &LaurentPoly) -> LaurentPoly {
    -(&c.shift(2) + &c.shift(-2))
}

/// A projector numerator as a list of (top-to-bottom matching, coefficient).
struct JwBox {
    n: usize,
    terms: Vec<(Vec<u8>, LaurentPoly)>,
}

impl JwBox {
    fn new(n: usize) -> Self {
        let f = jones_wenzl(n);
        let terms = f
            .num
            .terms()
            .map(|(m, c)| ((0..2 * n).map(|p| m.partner(p) as u8).collect(), c.clone()))
            .collect();
        Self { n, terms }
    }

    /// Glues the box below the row points `pos .. pos+n`.
    fn apply(&self, p: &[u8], pos: usize, coeff: &LaurentPoly, out: &mut State) {
        let n = self.n;
        let inside = |v: usize| v >= pos && v < pos + n;
        // an arc with both ends on the box is a turnback, which the projector kills
        if (pos..pos + n).any(|j| inside(p[j] as usize)) {
            return;
        }
        for (m, c) in &self.terms {
            let mut q = p.to_vec();
            for t in 0..n {
                let u = m[t] as usize;
                if u < n {
                    q[p[pos + t] as usize] = p[pos + u];
                }
            }
            for b in 0..n {
                let target = m[n + b] as usize;
                let v = if target >= n {
                    pos + target - n
                } else {
                    p[pos + target] as usize
                };
                q[pos + b] = v as u8;
                q[v] = (pos + b) as u8;
            }
            *out.entry(encode(&q)).or_default() += &(coeff * c);
        }
    }
}

fn merge(mut a: State, b: State) -> State {
    let (mut a, b) = if a.len() >= b.len() {
        (a, b)
    } else {
        (b, std::mem::take(&mut a))
    };
    for (k, v) in b {
        let slot = a.entry(k).or_default();
        *slot += &v;
    }
    a.retain(|_, v| !v.is_zero());
    a
}

fn step(state: State, w: usize, s: &Slice, boxes: &HashMap<usize, JwBox>, exec: Exec) -> State {
    let items: Vec<(Key, LaurentPoly)> = state.into_iter().collect();
    let apply = |mut out: State, range: std::ops::Range<u64>| {
        for idx in range {
            let (key, c) = &items[idx as usize];
            let p = decode(*key, w);
            match *s {
                Slice::Cup(i) => {
                    *out.entry(encode(&cup(&p, i))).or_default() += c;
                }
                Slice::Cap(i) => {
                    let (q, closed) = cap(&p, i);
                    let v = if closed { times_delta(c) } else { c.clone() };
                    *out.entry(encode(&q)).or_default() += &v;
                }
                Slice::Cross { pos, positive } => {
                    // x+ = A·(turnback) + A^-1·(identity); x- swaps the two
                    let (e_exp, id_exp) = if positive { (1, -1) } else { (-1, 1) };
                    *out.entry(*key).or_default() += &c.shift(id_exp);
                    let (q, closed) = cap(&p, pos);
                    let v = if closed {
                        times_delta(&c.shift(e_exp))
                    } else {
                        c.shift(e_exp)
                    };
                    *out.entry(encode(&cup(&q, pos))).or_default() += &v;
                }
                Slice::Jw { n, pos } => boxes[&n].apply(&p, pos, c, &mut out),
            }
        }
        out
    };
    let chunk = (items.len() as u64 / 64).clamp(16, 4096);
    let mut out = fold_range(exec, items.len() as u64, chunk, State::new, apply, merge);
    out.retain(|_, v| !v.is_zero());
    out
}

/// Checks the program against the width budget; returns its maximum width.
pub fn check_budget(p: &SliceProgram, budget: u64) -> Result<usize> {
    let width = p.validate()?;
    let states = catalan(width / 2);
    if width > MAX_WIDTH || states > budget {
        return Err(Error::WidthExceeded { width, states, budget });
    }
    Ok(width)
}

/// Bracket of the closed diagram described by `p`. Projector denominators
/// are collected into the ratio's denominator.
pub fn bracket_sweep(p: &SliceProgram, cfg: &SweepConfig) -> Result<LaurentRatio> {
    check_budget(p, cfg.budget)?;
    let mut boxes = HashMap::new();
    let mut den = LaurentPoly::one();
    for s in &p.slices {
        if let Slice::Jw { n, .. } = *s {
            boxes.entry(n).or_insert_with(|| JwBox::new(n));
            den = &den * &jones_wenzl(n).den;
        }
    }
    let mut state = State::new();
    state.insert(0, LaurentPoly::one());
    let widths = p.widths()?;
    for (k, s) in p.slices.iter().enumerate() {
        state = step(state, widths[k], s, &boxes, cfg.exec);
        if state.is_empty() {
            break;
        }
    }
    let num = state.remove(&0).unwrap_or_default();
    Ok(LaurentRatio::new(num, den))
}

/// As [`bracket_sweep`] for programs whose value is a Laurent polynomial.
pub fn bracket_sweep_poly(p: &SliceProgram, cfg: &SweepConfig) -> Result<LaurentPoly> {
    bracket_sweep(p, cfg)?.to_poly()
}
