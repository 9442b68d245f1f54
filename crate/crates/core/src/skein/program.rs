//! Slice programs: a closed diagram read top to bottom as a word in cups,
//! caps, crossings and projector boxes acting on a row of strand positions.
//!
//! Text form, one slice per line:
//!
//! ```text
//! cup i     two new points at i, i+1 joined by an arc
//! cap i     points i, i+1 joined and removed
//! x+ i      crossing on i, i+1, the strand from the upper left is over
//! x- i      crossing on i, i+1, the strand from the upper right is over
//! jw n i    projector f_n on the points i .. i+n-1
//! #@mark k i   (annotation) a decoration site at position i after k slices
//! ```
//!
//! Other lines starting with `#` are comments.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    Cup(usize),
    Cap(usize),
    Cross { pos: usize, positive: bool },
    Jw { n: usize, pos: usize },
}

impl Slice {
    pub fn is_projector(&self) -> bool {
        matches!(self, Slice::Jw { .. })
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Slice::Cup(i) => write!(f, "cup {i}"),
            Slice::Cap(i) => write!(f, "cap {i}"),
            Slice::Cross { pos, positive: true } => write!(f, "x+ {pos}"),
            Slice::Cross { pos, positive: false } => write!(f, "x- {pos}"),
            Slice::Jw { n, pos } => write!(f, "jw {n} {pos}"),
        }
    }
}

/// A site where a component's cable receives its projector: position `pos`
/// of the row after the first `after` slices have run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mark {
    pub after: usize,
    pub pos: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SliceProgram {
    pub slices: Vec<Slice>,
    pub marks: Vec<Mark>,
}

impl SliceProgram {
    pub fn new(slices: Vec<Slice>) -> Self {
        Self {
            slices,
            marks: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    /// Row width before the first slice and after each one.
    pub fn widths(&self) -> Result<Vec<usize>> {
        let bad =
            |k: usize, s: &Slice, w: usize| Error::MalformedProgram(format!("slice {k} `{s}` does not fit width {w}"));
        let mut w = 0usize;
        let mut out = vec![0];
        for (k, s) in self.slices.iter().enumerate() {
            w = match *s {
                Slice::Cup(i) if i <= w => w + 2,
                Slice::Cap(i) if i + 2 <= w => w - 2,
                Slice::Cross { pos, .. } if pos + 2 <= w => w,
                Slice::Jw { n, pos } if n >= 1 && pos + n <= w => w,
                _ => return Err(bad(k, s, w)),
            };
            out.push(w);
        }
        Ok(out)
    }

    /// Checks that every slice fits and the row closes up; returns the maximum width.
    pub fn validate(&self) -> Result<usize> {
        let ws = self.widths()?;
        if *ws.last().unwrap() != 0 {
            return Err(Error::MalformedProgram(format!(
                "program ends with {} open points",
                ws.last().unwrap()
            )));
        }
        for m in &self.marks {
            if m.after > self.slices.len() || m.pos >= ws[m.after] {
                return Err(Error::MalformedProgram(format!(
                    "mark at {} after {} slices is off the row",
                    m.pos, m.after
                )));
            }
        }
        Ok(ws.into_iter().max().unwrap_or(0))
    }

    pub fn max_width(&self) -> Result<usize> {
        Ok(self.widths()?.into_iter().max().unwrap_or(0))
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| matches!(s, Slice::Cross { .. })).count()
    }

    pub fn projector_count(&self) -> usize {
        self.slices.iter().filter(|s| s.is_projector()).count()
    }

    /// The blackboard-parallel `n`-cable. With `decorate`, a projector `f_n` is
    /// placed on the cable at every mark.
    pub fn cable(&self, n: usize, decorate: bool) -> SliceProgram {
        self.cable_with(n, decorate, None)
    }

    /// As [`cable`](Self::cable), but the slices `range` of the original are
    /// replaced by `insert` (already in cabled coordinates).
    pub(crate) fn cable_with(
        &self,
        n: usize,
        decorate: bool,
        replace: Option<(std::ops::Range<usize>, &[Slice])>,
    ) -> SliceProgram {
        if n == 0 {
            return SliceProgram::default();
        }
        let mut out = Vec::new();
        let mut marks = Vec::new();
        let emit_marks = |k: usize, out: &mut Vec<Slice>, marks: &mut Vec<Mark>| {
            for m in self.marks.iter().filter(|m| m.after == k) {
                if decorate && n > 1 {
                    out.push(Slice::Jw { n, pos: n * m.pos });
                }
                marks.push(Mark {
                    after: out.len(),
                    pos: n * m.pos,
                });
            }
        };
        for k in 0..=self.slices.len() {
            emit_marks(k, &mut out, &mut marks);
            if k == self.slices.len() {
                break;
            }
            if let Some((range, insert)) = &replace {
                if range.start == k {
                    out.extend_from_slice(insert);
                }
                if range.contains(&k) {
                    continue;
                }
            }
            match self.slices[k] {
                Slice::Cup(i) => out.extend((0..n).map(|j| Slice::Cup(n * i + j))),
                Slice::Cap(i) => out.extend((0..n).rev().map(|j| Slice::Cap(n * i + j))),
                Slice::Cross { pos, positive } => {
                    let base = n * pos;
                    for r in 0..n {
                        for p in (base + r..base + n + r).rev() {
                            out.push(Slice::Cross { pos: p, positive });
                        }
                    }
                }
                Slice::Jw { n: m, pos } => out.push(Slice::Jw { n: n * m, pos: n * pos }),
            }
        }
        SliceProgram { slices: out, marks }
    }

    /// The same program with every projector replaced by the identity.
    pub fn replace_projectors_with_identity(&self) -> SliceProgram {
        let mut kept = Vec::new();
        let mut new_index = vec![0; self.slices.len() + 1];
        for (k, s) in self.slices.iter().enumerate() {
            new_index[k] = kept.len();
            if !s.is_projector() {
                kept.push(*s);
            }
        }
        new_index[self.slices.len()] = kept.len();
        let marks = self
            .marks
            .iter()
            .map(|m| Mark {
                after: new_index[m.after],
                pos: m.pos,
            })
            .collect();
        SliceProgram { slices: kept, marks }
    }

    /// The disjoint union of `self` with `k` plain circles placed on the left.
    pub fn with_free_loops(&self, k: usize) -> SliceProgram {
        let mut slices = Vec::new();
        let mut marks = Vec::new();
        for _ in 0..k {
            slices.push(Slice::Cup(0));
            marks.push(Mark {
                after: slices.len(),
                pos: 0,
            });
            slices.push(Slice::Cap(0));
        }
        let off = slices.len();
        slices.extend_from_slice(&self.slices);
        marks.extend(self.marks.iter().map(|m| Mark {
            after: m.after + off,
            pos: m.pos,
        }));
        SliceProgram { slices, marks }
    }
}

impl fmt::Display for SliceProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in self.marks.iter().filter(|m| m.after == 0) {
            writeln!(f, "#@mark 0 {}", m.pos)?;
        }
        for (k, s) in self.slices.iter().enumerate() {
            writeln!(f, "{s}")?;
            for m in self.marks.iter().filter(|m| m.after == k + 1) {
                writeln!(f, "#@mark {} {}", m.after, m.pos)?;
            }
        }
        Ok(())
    }
}

impl FromStr for SliceProgram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = SliceProgram::default();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            let bad = || Error::MalformedProgram(format!("line {}: `{line}`", ln + 1));
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |w: &str| w.parse::<usize>().map_err(|_| bad());
            if let Some(rest) = line.strip_prefix("#@mark") {
                let v: Vec<&str> = rest.split_whitespace().collect();
                if v.len() != 2 {
                    return Err(bad());
                }
                p.marks.push(Mark {
                    after: num(v[0])?,
                    pos: num(v[1])?,
                });
                continue;
            }
            if line.starts_with('#') {
                continue;
            }
            let s = match words.as_slice() {
                ["cup", i] => Slice::Cup(num(i)?),
                ["cap", i] => Slice::Cap(num(i)?),
                ["x+", i] => Slice::Cross {
                    pos: num(i)?,
                    positive: true,
                },
                ["x-", i] => Slice::Cross {
                    pos: num(i)?,
                    positive: false,
                },
                ["jw", n, i] => Slice::Jw {
                    n: num(n)?,
                    pos: num(i)?,
                },
                _ => return Err(bad()),
            };
            p.slices.push(s);
        }
        p.widths()?;
        Ok(p)
    }
}

/// `k` nested cups whose innermost pair sits at `at`.
fn nested_cups(at: usize, k: usize) -> impl Iterator<Item = Slice> {
    (0..k).map(move |j| Slice::Cup(at + j))
}

/// The closure of `f_n`: its bracket is `Δ_n`.
pub fn projector_closure(n: usize) -> SliceProgram {
    let mut s: Vec<Slice> = nested_cups(0, n).collect();
    if n > 0 {
        s.push(Slice::Jw { n, pos: 0 });
    }
    s.extend((0..n).rev().map(Slice::Cap));
    SliceProgram::new(s)
}

/// The theta graph with edges coloured `a`, `b`, `c`, one projector per edge.
pub fn theta_program(a: usize, b: usize, c: usize) -> Result<SliceProgram> {
    if !crate::laurent::is_admissible(a as i64, b as i64, c as i64) {
        return Err(Error::InadmissibleTriple(a as i64, b as i64, c as i64));
    }
    let x = (a + c - b) / 2;
    let y = (b + c - a) / 2;
    let z = (a + b - c) / 2;
    // z outer arcs around an x nest followed by a y nest
    let mut cups: Vec<Slice> = nested_cups(0, z).collect();
    cups.extend(nested_cups(z, x));
    cups.extend(nested_cups(z + 2 * x, y));
    let mut s = cups.clone();
    for (n, pos) in [(a, 0), (c, a), (b, a + c)] {
        if n > 0 {
            s.push(Slice::Jw { n, pos });
        }
    }
    s.extend(cups.iter().rev().map(|c| match c {
        Slice::Cup(i) => Slice::Cap(*i),
        _ => unreachable!(),
    }));
    Ok(SliceProgram::new(s))
}
