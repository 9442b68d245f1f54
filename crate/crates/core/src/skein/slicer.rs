//! Turns a diagram into a slice program by sweeping a row of dangling edges
//! across the crossings. Each row entry is the unprocessed far end (a port)
//! of an edge whose near end is already drawn; read left to right the row
//! runs counterclockwise around the drawn part.

use std::collections::BTreeSet;

use super::program::{Mark, Slice, SliceProgram};
use crate::diagram::{port, Diagram, Label};
use crate::error::{Error, Result};

/// A chain of crossings joined by bigons, drawn as a vertical twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistRegion {
    /// Crossings from one end of the chain to the other.
    pub crossings: Vec<usize>,
    /// Outer ports counterclockwise `[in_left, out_left, out_right, in_right]`
    /// with the chain running top to bottom.
    ports: [usize; 4],
    /// Slice type of every crossing in that picture.
    pub positive: bool,
}

impl TwistRegion {
    /// Orders `set` into a bigon chain and checks all its crossings twist the same way.
    pub fn new(d: &Diagram, set: &[usize]) -> Result<Self> {
        let bad = |why: &str| Error::NotATwistRegion(why.to_string());
        let set: BTreeSet<usize> = set.iter().copied().collect();
        if set.is_empty() {
            return Err(bad("empty crossing set"));
        }
        if set.iter().any(|&x| x >= d.crossing_count()) {
            return Err(bad("crossing index out of range"));
        }
        let shared =
            |x: usize, y: usize| -> Vec<usize> { (0..4).filter(|&p| d.partner(port(x, p)) / 4 == y).collect() };
        let nbrs = |x: usize| -> Vec<usize> {
            set.iter()
                .copied()
                .filter(|&y| y != x && !shared(x, y).is_empty())
                .collect()
        };
        let ends: Vec<usize> = set.iter().copied().filter(|&x| nbrs(x).len() <= 1).collect();
        if set.len() > 1 && ends.len() != 2 {
            return Err(bad("crossings do not form a chain"));
        }
        let mut chain = vec![ends[0]];
        while chain.len() < set.len() {
            let last = *chain.last().unwrap();
            let next: Vec<usize> = nbrs(last).into_iter().filter(|y| !chain.contains(y)).collect();
            if next.len() != 1 {
                return Err(bad("crossings do not form a chain"));
            }
            chain.push(next[0]);
        }
        // slot at the first crossing whose next two slots lead down the chain
        let first = chain[0];
        let s0 = if chain.len() == 1 {
            0
        } else {
            let sh = shared(first, chain[1]);
            if sh.len() != 2 {
                return Err(bad("consecutive crossings must share exactly two edges"));
            }
            let (a, b) = (sh[0], sh[1]);
            match (a, b) {
                _ if (a + 1) % 4 == b => (a + 3) % 4,
                _ if (b + 1) % 4 == a => (b + 3) % 4,
                _ => return Err(bad("shared edges are not adjacent")),
            }
        };
        let mut s = s0;
        let in_left = port(first, s0);
        let in_right = port(first, (s0 + 3) % 4);
        let positive = s0 % 2 == 1;
        for w in chain.windows(2) {
            let (x, y) = (w[0], w[1]);
            let l = d.partner(port(x, (s + 1) % 4));
            let r = d.partner(port(x, (s + 2) % 4));
            if l / 4 != y || r / 4 != y || (l % 4 + 3) % 4 != r % 4 {
                return Err(bad("consecutive crossings do not bound a bigon"));
            }
            s = l % 4;
            if (s % 2 == 1) != positive {
                return Err(bad("crossings twist in opposite directions"));
            }
        }
        let last = *chain.last().unwrap();
        let ports = [in_left, port(last, (s + 1) % 4), port(last, (s + 2) % 4), in_right];
        Ok(Self {
            crossings: chain,
            ports,
            positive,
        })
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    /// `[top_left, bottom_left, bottom_right, top_right]`.
    pub fn ports(&self) -> [usize; 4] {
        self.ports
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }
}

/// Maximal bigon chains of length at least `min_len`.
pub fn twist_regions(d: &Diagram, min_len: usize) -> Vec<TwistRegion> {
    let c = d.crossing_count();
    let bigon = |x: usize, y: usize| -> bool { x != y && TwistRegion::new(d, &[x, y]).is_ok() };
    let mut seen = vec![false; c];
    let mut out = Vec::new();
    for x in 0..c {
        if seen[x] {
            continue;
        }
        let mut comp = vec![x];
        seen[x] = true;
        let mut k = 0;
        while k < comp.len() {
            let a = comp[k];
            for (y, s) in seen.iter_mut().enumerate() {
                if !*s && bigon(a, y) {
                    *s = true;
                    comp.push(y);
                }
            }
            k += 1;
        }
        if comp.len() >= min_len {
            if let Ok(t) = TwistRegion::new(d, &comp) {
                out.push(t);
            }
        }
    }
    out
}

/// A vertex of the sweep: one crossing or one contracted twist region.
#[derive(Clone, Debug)]
struct Node {
    ports: [usize; 4],
    /// Twist boxes may only be drawn with the chain running vertically.
    even_only: bool,
    /// Number of crossing slices and their type for local rotation 0.
    count: usize,
    positive_at_zero: bool,
}

#[derive(Clone, Debug)]
struct Sweep {
    row: Vec<usize>,
    done: Vec<bool>,
    slices: Vec<Slice>,
    marks: Vec<Mark>,
    marked: Vec<bool>,
    width: usize,
    box_site: Option<(usize, usize, bool)>,
}

struct Slicer<'a> {
    d: &'a Diagram,
    nodes: Vec<Node>,
    /// (node, local slot) for each outer port.
    at: Vec<Option<(usize, usize)>>,
    /// Component index of each mark label, by edge label.
    mark_labels: Vec<(Label, usize)>,
    box_node: Option<usize>,
    budget: u64,
    spent: u64,
}

/// What processing a node does to the row.
struct Move {
    node: usize,
    start: usize,
    consumed: usize,
    r: usize,
    /// Slices relative to `start`: cups before, the node, caps after.
    pre_cups: Vec<usize>,
    node_pos: usize,
    post_caps: Vec<usize>,
    /// New row entries (local slots whose partners enter the row) replacing the consumed run.
    new_slots: Vec<usize>,
}

impl<'a> Slicer<'a> {
    fn moves(&self, st: &Sweep) -> Vec<Move> {
        let mut out = Vec::new();
        for (v, node) in self.nodes.iter().enumerate() {
            if st.done[v] {
                continue;
            }
            let pos: Vec<usize> = (0..st.row.len())
                .filter(|&j| matches!(self.at[st.row[j]], Some((u, _)) if u == v))
                .collect();
            let k = pos.len();
            if k == 0 {
                continue;
            }
            if pos[k - 1] - pos[0] + 1 != k {
                continue;
            }
            let y: Vec<usize> = pos.iter().map(|&j| self.at[st.row[j]].unwrap().1).collect();
            if y.windows(2).any(|w| (w[1] + 1) % 4 != w[0]) {
                continue;
            }
            let i = pos[0];
            let y1 = y[0];
            let mut variants: Vec<Move> = Vec::new();
            let mv = |r: usize, pre: Vec<usize>, np: usize, post: Vec<usize>, new: Vec<usize>| Move {
                node: v,
                start: i,
                consumed: k,
                r,
                pre_cups: pre,
                node_pos: np,
                post_caps: post,
                new_slots: new.into_iter().map(|q| (q + r) % 4).collect(),
            };
            match k {
                1 => {
                    variants.push(mv(y1, vec![i + 1], i, vec![], vec![1, 2, 3]));
                    variants.push(mv((y1 + 1) % 4, vec![i], i + 1, vec![], vec![0, 1, 2]));
                }
                2 => {
                    variants.push(mv(y1, vec![], i, vec![], vec![1, 2]));
                    variants.push(mv((y1 + 3) % 4, vec![i + 2], i + 1, vec![i], vec![2, 3]));
                }
                3 => {
                    variants.push(mv(y1, vec![], i, vec![i + 1], vec![1]));
                    variants.push(mv((y1 + 3) % 4, vec![], i + 1, vec![i], vec![2]));
                }
                4 => {
                    variants.push(mv(y1, vec![], i, vec![i + 1, i], vec![]));
                    variants.push(mv((y1 + 3) % 4, vec![], i + 1, vec![i + 2, i], vec![]));
                }
                _ => unreachable!(),
            }
            if let Some(m) = variants.into_iter().find(|m| !node.even_only || m.r % 2 == 0) {
                out.push(m);
            }
        }
        out
    }

    fn opening_move(&self, v: usize) -> Move {
        Move {
            node: v,
            start: 0,
            consumed: 0,
            r: 0,
            pre_cups: vec![0, 2],
            node_pos: 1,
            post_caps: vec![],
            new_slots: vec![0, 1, 2, 3],
        }
    }

    fn record_marks(&self, st: &mut Sweep) {
        for (j, &t) in st.row.iter().enumerate() {
            let label = self.d.label(t);
            for &(l, comp) in &self.mark_labels {
                if l == label && !st.marked[comp] {
                    st.marked[comp] = true;
                    st.marks.push(Mark {
                        after: st.slices.len(),
                        pos: j,
                    });
                }
            }
        }
    }

    /// Closes adjacent row entries that are the two ends of one edge.
    fn close_loops(&self, st: &mut Sweep) -> bool {
        loop {
            let j = (0..st.row.len().saturating_sub(1)).find(|&j| st.row[j] == self.d.partner(st.row[j + 1]));
            match j {
                Some(j) => {
                    self.record_marks(st);
                    st.slices.push(Slice::Cap(j));
                    st.row.drain(j..j + 2);
                }
                None => break,
            }
        }
        // an edge with both ends drawn but not adjacent cannot be closed
        let drawn = |t: usize| matches!(self.at[t], Some((u, _)) if st.done[u]);
        !st.row.iter().any(|&t| drawn(t))
    }

    fn apply(&self, st: &Sweep, m: &Move) -> Option<Sweep> {
        let mut st = st.clone();
        let node = &self.nodes[m.node];
        let mut w = st.row.len();
        for &c in &m.pre_cups {
            st.slices.push(Slice::Cup(c));
            w += 2;
            st.width = st.width.max(w);
        }
        let positive = (m.r % 2 == 1) != node.positive_at_zero;
        if Some(m.node) == self.box_node {
            st.box_site = Some((st.slices.len(), m.node_pos, positive));
        }
        for _ in 0..node.count {
            st.slices.push(Slice::Cross {
                pos: m.node_pos,
                positive,
            });
        }
        st.done[m.node] = true;
        let span = self.span_after_node(m);
        st.row.splice(m.start..m.start + m.consumed, span);
        self.record_marks(&mut st);
        for &c in &m.post_caps {
            st.slices.push(Slice::Cap(c));
            st.row.drain(c..c + 2);
        }
        if !self.close_loops(&mut st) {
            return None;
        }
        self.record_marks(&mut st);
        Some(st)
    }

    /// Row entries over the node's span right after its crossing slices.
    fn span_after_node(&self, m: &Move) -> Vec<usize> {
        let own = |q: usize| self.nodes[m.node].ports[(q + m.r) % 4];
        let far = |q: usize| self.d.partner(own(q));
        // an edge leaving slot q has far end far(q); a consumed edge arriving at q has far end own(q)
        match (m.consumed, m.node_pos == m.start) {
            (2, false) => vec![own(1), far(1), far(2), far(3)],
            (3, true) => vec![far(1), far(2), own(2)],
            (3, false) => vec![own(1), far(1), far(2)],
            (4, true) => vec![far(1), far(2), own(2), own(1)],
            (4, false) => vec![own(1), far(1), far(2), own(2)],
            _ => m
                .new_slots
                .iter()
                .map(|&q| self.d.partner(self.nodes[m.node].ports[q]))
                .collect(),
        }
    }

    fn search(&mut self, st: Sweep, best: &mut Option<Sweep>) {
        if self.spent >= self.budget {
            return;
        }
        self.spent += 1;
        if let Some(b) = best {
            if st.width >= b.width {
                return;
            }
        }
        if st.done.iter().all(|&x| x) {
            *best = Some(st);
            return;
        }
        let mut moves = self.moves(&st);
        if moves.is_empty() {
            if !st.row.is_empty() {
                return;
            }
            // start (or restart, for a split diagram) at the lowest undrawn node
            let v = st.done.iter().position(|&x| !x).unwrap();
            moves.push(self.opening_move(v));
        }
        // greedy order: narrowest resulting row first, then most consumed
        let w = st.row.len();
        moves.sort_by_key(|m| (w + m.new_slots.len() - m.consumed, usize::MAX - m.consumed, m.node));
        for m in &moves {
            if let Some(next) = self.apply(&st, m) {
                self.search(next, best);
                if best.is_some() && self.spent >= self.budget {
                    return;
                }
            }
        }
    }
}

/// Result of slicing: the program (with one mark per component) and, when a
/// twist region was contracted, where its crossings were emitted.
#[derive(Clone, Debug)]
pub struct Sliced {
    pub program: SliceProgram,
    /// Index of the first twist slice, its row position and its slice type.
    pub box_site: Option<(usize, usize, bool)>,
}

/// Search effort for exact minimisation; beyond it the best slicing found is kept.
const NODE_BUDGET: u64 = 20_000;

pub fn to_slice_program(d: &Diagram) -> Result<SliceProgram> {
    Ok(slice_diagram(d, None)?.program)
}

/// Slices `d`, drawing `twist` (if given) as one vertical run of crossing slices.
pub fn slice_diagram(d: &Diagram, twist: Option<&TwistRegion>) -> Result<Sliced> {
    let c = d.crossing_count();
    let mut at = vec![None; 4 * c];
    let mut nodes = Vec::new();
    let mut boxed = vec![false; c];
    let mut box_node = None;
    if let Some(t) = twist {
        for &x in &t.crossings {
            boxed[x] = true;
        }
        box_node = Some(0);
        nodes.push(Node {
            ports: t.ports,
            even_only: t.len() > 1,
            count: t.len(),
            positive_at_zero: t.positive,
        });
    }
    for x in (0..c).filter(|&x| !boxed[x]) {
        nodes.push(Node {
            ports: [0, 1, 2, 3].map(|p| port(x, p)),
            even_only: false,
            count: 1,
            positive_at_zero: false,
        });
    }
    for (v, n) in nodes.iter().enumerate() {
        for (q, &p) in n.ports.iter().enumerate() {
            at[p] = Some((v, q));
        }
    }
    // lowest label per component among edges visible to the sweep
    let mut mark_labels: Vec<(Label, usize)> = Vec::new();
    for p in 0..4 * c {
        if at[p].is_none() || at[d.partner(p)].is_none() {
            continue;
        }
        let comp = d.component_of_port(p);
        let l = d.label(p);
        match mark_labels.iter_mut().find(|(_, k)| *k == comp) {
            Some(e) => e.0 = e.0.min(l),
            None => mark_labels.push((l, comp)),
        }
    }
    let comps = d.component_count() - d.free_loops();
    let mut s = Slicer {
        d,
        nodes,
        at,
        mark_labels,
        box_node,
        budget: NODE_BUDGET,
        spent: 0,
    };
    let start = Sweep {
        row: Vec::new(),
        done: vec![false; s.nodes.len()],
        slices: Vec::new(),
        marks: Vec::new(),
        marked: vec![false; comps.max(1)],
        width: 0,
        box_site: None,
    };
    let mut best: Option<Sweep> = None;
    if c == 0 {
        best = Some(start);
    } else {
        // try every opening node, keeping the narrowest result
        for v in 0..s.nodes.len() {
            let first = s.opening_move(v);
            if let Some(st) = s.apply(&start, &first) {
                s.spent = 0;
                s.search(st, &mut best);
            }
            if c > 12 && best.is_some() && v >= 3 {
                break;
            }
        }
    }
    let best = best.ok_or_else(|| Error::SlicingFailed(format!("no planar sweep found for {c} crossings")))?;
    let mut program = SliceProgram {
        slices: best.slices,
        marks: best.marks,
    };
    program.marks.sort();
    let k = d.free_loops();
    let box_site = best.box_site.map(|(i, p, t)| (i + 2 * k, p, t));
    let program = program.with_free_loops(k);
    program.validate()?;
    Ok(Sliced { program, box_site })
}
