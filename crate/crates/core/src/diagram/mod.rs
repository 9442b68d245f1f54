//! Oriented knot and link diagrams in planar-diagram (PD) notation.
//!
//! Conventions (the KnotInfo / Knot Atlas ones):
//!
//! ```text
//!            2
//!            ^
//!            |
//!      3 ----|----> 1      positive: over strand runs 3 -> 1
//!            |
//!            |
//!            0  (incoming under-strand)
//! ```
//!
//! `X(i,j,k,l)` lists the four edge labels met counterclockwise, starting at
//! the incoming under-strand, so the under-strand runs `i -> k`. The crossing
//! is positive when the over-strand enters at the fourth slot and leaves at
//! the second. On ingest every tuple is rotated (if needed) so that slot 0 is
//! the incoming under-strand under an orientation found by walking the
//! components; the sign follows from where the over-strand enters.
//!
//! Crossing-free components are carried as a count of free loops.

mod parse;
mod state;
mod surgery;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub use parse::parse_pd;
pub use state::{Adequacy, CircleCounter, KauffmanState, Smoothing, StateGraph};

pub type Label = i64;

#[derive(Clone, Debug)]
pub struct Diagram {
    crossings: Vec<[Label; 4]>,
    signs: Vec<i8>,
    free_loops: usize,
    components: usize,
    partner: Vec<usize>,
    port_component: Vec<usize>,
    pub name: Option<String>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings && self.signs == other.signs && self.free_loops == other.free_loops
    }
}

impl Eq for Diagram {}

/// Port id of slot `p` at crossing `x`.
#[inline]
pub fn port(x: usize, p: usize) -> usize {
    4 * x + p
}

impl Diagram {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self::free(1)
    }

    /// `k` disjoint crossingless circles.
    pub fn free(k: usize) -> Self {
        Self {
            crossings: Vec::new(),
            signs: Vec::new(),
            free_loops: k,
            components: k,
            partner: Vec::new(),
            port_component: Vec::new(),
            name: None,
        }
    }

    /// Builds a diagram from raw tuples whose slots 0 and 2 carry the
    /// under-strand. `hint(x, p)` may say whether slot `p` of crossing `x`
    /// should be incoming; components are oriented from the first hinted
    /// port met, else from slot 0 of their first crossing.
    pub fn from_tuples<F>(tuples: Vec<[Label; 4]>, free_loops: usize, hint: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Option<bool>,
    {
        let c = tuples.len();
        let mut seen: BTreeMap<Label, Vec<usize>> = BTreeMap::new();
        for (x, t) in tuples.iter().enumerate() {
            for (p, &l) in t.iter().enumerate() {
                seen.entry(l).or_default().push(port(x, p));
            }
        }
        for (l, ports) in &seen {
            if ports.len() != 2 {
                return Err(Error::BadArcMultiplicity(format!(
                    "label {l} occurs {} time(s)",
                    ports.len()
                )));
            }
        }
        let mut partner = vec![0usize; 4 * c];
        for ports in seen.values() {
            partner[ports[0]] = ports[1];
            partner[ports[1]] = ports[0];
        }

        // incoming[port]: orientation found by walking
        let mut incoming: Vec<Option<bool>> = vec![None; 4 * c];
        let mut walks = 0;
        let walk = |start: usize, incoming: &mut Vec<Option<bool>>| {
            let mut e = start;
            loop {
                incoming[e] = Some(true);
                let exit = (e & !3) | ((e + 2) & 3);
                incoming[exit] = Some(false);
                e = partner[exit];
                if e == start {
                    break;
                }
            }
        };
        let mut starts: Vec<usize> = Vec::new();
        for x in 0..c {
            for p in 0..4 {
                match hint(x, p) {
                    Some(true) => starts.push(port(x, p)),
                    Some(false) => starts.push(port(x, (p + 2) % 4)),
                    None => {}
                }
            }
        }
        starts.extend((0..c).map(|x| port(x, 0)));
        starts.extend((0..c).map(|x| port(x, 1)));
        for s in starts {
            if incoming[s].is_none() {
                walk(s, &mut incoming);
                walks += 1;
            }
        }

        let mut crossings = tuples;
        let mut signs = Vec::with_capacity(c);
        for (x, t) in crossings.iter_mut().enumerate() {
            let mut inc = [false; 4];
            for p in 0..4 {
                inc[p] = incoming[port(x, p)].unwrap();
            }
            if !inc[0] {
                t.rotate_left(2);
                inc.rotate_left(2);
            }
            signs.push(if inc[3] { 1 } else { -1 });
        }
        let mut d = Self {
            crossings,
            signs,
            free_loops,
            components: walks + free_loops,
            partner: Vec::new(),
            port_component: Vec::new(),
            name: None,
        };
        d.index_ports();
        Ok(d)
    }

    fn index_ports(&mut self) {
        let c = self.crossings.len();
        let mut at: BTreeMap<Label, Vec<usize>> = BTreeMap::new();
        for (x, t) in self.crossings.iter().enumerate() {
            for (p, &l) in t.iter().enumerate() {
                at.entry(l).or_default().push(port(x, p));
            }
        }
        self.partner = vec![0; 4 * c];
        for v in at.values() {
            self.partner[v[0]] = v[1];
            self.partner[v[1]] = v[0];
        }
        self.port_component = vec![usize::MAX; 4 * c];
        let mut comp = 0;
        for x in 0..c {
            for p in [0, 1] {
                let start = port(x, p);
                if self.port_component[start] != usize::MAX {
                    continue;
                }
                let mut e = start;
                loop {
                    let exit = (e & !3) | ((e + 2) & 3);
                    self.port_component[e] = comp;
                    self.port_component[exit] = comp;
                    e = self.partner[exit];
                    if e == start {
                        break;
                    }
                }
                comp += 1;
            }
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[[Label; 4]] {
        &self.crossings
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn c_plus(&self) -> usize {
        self.signs.iter().filter(|&&s| s > 0).count()
    }

    pub fn c_minus(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn partner(&self, port: usize) -> usize {
        self.partner[port]
    }

    pub fn label(&self, port: usize) -> Label {
        self.crossings[port / 4][port % 4]
    }

    /// Index of the link component through a port (free loops not included).
    pub fn component_of_port(&self, port: usize) -> usize {
        self.port_component[port]
    }

    pub fn is_incoming(&self, port: usize) -> bool {
        match port % 4 {
            0 => true,
            2 => false,
            1 => self.signs[port / 4] < 0,
            _ => self.signs[port / 4] > 0,
        }
    }

    /// All edge labels, ascending.
    pub fn labels(&self) -> Vec<Label> {
        let set: BTreeSet<Label> = self.crossings.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn max_label(&self) -> Label {
        self.crossings.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Oriented endpoints `(tail_port, head_port)` of an edge.
    pub fn edge_ports(&self, label: Label) -> Result<(usize, usize)> {
        let mut found = Vec::with_capacity(2);
        for (x, t) in self.crossings.iter().enumerate() {
            for (p, &l) in t.iter().enumerate() {
                if l == label {
                    found.push(port(x, p));
                }
            }
        }
        if found.len() != 2 {
            return Err(Error::ArcNotFound(label));
        }
        if self.is_incoming(found[0]) {
            Ok((found[1], found[0]))
        } else {
            Ok((found[0], found[1]))
        }
    }

    /// True when the underlying 4-valent graph (plus free loops) is connected.
    pub fn is_connected(&self) -> bool {
        let c = self.crossings.len();
        if c == 0 {
            return self.free_loops <= 1;
        }
        if self.free_loops > 0 {
            return false;
        }
        let mut dsu = crate::util::Dsu::new(c);
        for pt in 0..4 * c {
            dsu.union(pt / 4, self.partner[pt] / 4);
        }
        dsu.classes() == 1
    }

    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Relabels edges `1..=2c` in order of first appearance.
    pub fn relabeled(&self) -> Self {
        let mut map: BTreeMap<Label, Label> = BTreeMap::new();
        let mut next = 1;
        let tuples: Vec<[Label; 4]> = self
            .crossings
            .iter()
            .map(|t| {
                t.map(|l| {
                    *map.entry(l).or_insert_with(|| {
                        next += 1;
                        next - 1
                    })
                })
            })
            .collect();
        let mut d = self.clone();
        d.crossings = tuples;
        d.index_ports();
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_signs() {
        let d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe().abs(), 3);
        assert_eq!(d.component_count(), 1);
        // rule: positive iff j - l == 1 or l - j > 1
        for t in d.crossings() {
            let (j, l) = (t[1], t[3]);
            let s = if j - l == 1 || l - j > 1 { 1 } else { -1 };
            assert_eq!(s, 1);
        }
    }

    #[test]
    fn figure_eight_zero_writhe() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.c_plus(), 2);
        assert!(d.is_connected());
    }

    #[test]
    fn edge_orientation() {
        let d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let (tail, head) = d.edge_ports(1).unwrap();
        assert!(d.is_incoming(head) && !d.is_incoming(tail));
        assert_eq!(head, port(0, 0));
        assert!(matches!(d.edge_ports(99), Err(Error::ArcNotFound(99))));
    }

    #[test]
    fn relabel_is_stable() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let r = d.relabeled();
        assert_eq!(r.writhe(), d.writhe());
        assert_eq!(r.relabeled(), r);
        assert_eq!(r.labels(), (1..=8).collect::<Vec<_>>());
    }
}
