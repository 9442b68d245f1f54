use serde::Serialize;

use super::{port, Diagram};
use crate::error::{Error, Result};
use crate::util::Dsu;

/// Resolution at one crossing. With slots counterclockwise and slot 0 the
/// incoming under-strand, `A` joins slots 0-1 and 2-3, `B` joins 1-2 and 3-0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Smoothing {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KauffmanState {
    pub choices: Vec<Smoothing>,
}

impl KauffmanState {
    pub fn all(c: usize, s: Smoothing) -> Self {
        Self { choices: vec![s; c] }
    }

    /// Bit `x` set means an `A` choice at crossing `x`.
    pub fn from_mask(c: usize, mask: u64) -> Self {
        Self {
            choices: (0..c)
                .map(|x| if mask >> x & 1 == 1 { Smoothing::A } else { Smoothing::B })
                .collect(),
        }
    }

    pub fn c_a(&self) -> usize {
        self.choices.iter().filter(|&&s| s == Smoothing::A).count()
    }

    pub fn c_b(&self) -> usize {
        self.choices.len() - self.c_a()
    }

    pub fn sign(&self) -> i64 {
        self.c_a() as i64 - self.c_b() as i64
    }
}

/// State circles and one edge per crossing between the circles it touches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateGraph {
    pub circles: usize,
    pub edges: Vec<(usize, usize)>,
}

impl StateGraph {
    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    pub fn has_loop(&self) -> bool {
        self.loop_count() > 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Adequacy {
    pub a_adequate: bool,
    pub b_adequate: bool,
    pub v_a: usize,
    pub v_b: usize,
}

impl Adequacy {
    pub fn adequate(&self) -> bool {
        self.a_adequate && self.b_adequate
    }
}

/// Precomputed edge indices for fast circle counting over many states.
#[derive(Clone, Debug)]
pub struct CircleCounter {
    pub(crate) slots: Vec<[u32; 4]>,
    edges: usize,
    free_loops: usize,
    dsu: Dsu,
}

impl CircleCounter {
    pub fn new(d: &Diagram) -> Self {
        let c = d.crossing_count();
        let mut edge_of = vec![u32::MAX; 4 * c];
        let mut next = 0u32;
        for pt in 0..4 * c {
            if edge_of[pt] == u32::MAX {
                edge_of[pt] = next;
                edge_of[d.partner(pt)] = next;
                next += 1;
            }
        }
        let slots = (0..c).map(|x| [0, 1, 2, 3].map(|p| edge_of[port(x, p)])).collect();
        Self {
            slots,
            edges: next as usize,
            free_loops: d.free_loops(),
            dsu: Dsu::new(next as usize),
        }
    }

    /// Circle count of the state whose `A` crossings are the set bits of `mask`.
    pub fn circles(&mut self, mask: u64) -> usize {
        self.dsu.reset();
        let mut merges = 0;
        for (x, s) in self.slots.iter().enumerate() {
            let (s0, s1, s2, s3) = (s[0] as usize, s[1] as usize, s[2] as usize, s[3] as usize);
            if mask >> x & 1 == 1 {
                merges += self.dsu.union(s0, s1) as usize;
                merges += self.dsu.union(s2, s3) as usize;
            } else {
                merges += self.dsu.union(s1, s2) as usize;
                merges += self.dsu.union(s3, s0) as usize;
            }
        }
        self.edges - merges + self.free_loops
    }
}

impl Diagram {
    pub fn apply_state(&self, s: &KauffmanState) -> Result<StateGraph> {
        let c = self.crossing_count();
        if s.choices.len() != c {
            return Err(Error::StateLengthMismatch {
                expected: c,
                got: s.choices.len(),
            });
        }
        let counter = CircleCounter::new(self);
        let mut dsu = Dsu::new(counter.edges);
        for (sl, ch) in counter.slots.iter().zip(&s.choices) {
            let e = sl.map(|v| v as usize);
            match ch {
                Smoothing::A => {
                    dsu.union(e[0], e[1]);
                    dsu.union(e[2], e[3]);
                }
                Smoothing::B => {
                    dsu.union(e[1], e[2]);
                    dsu.union(e[3], e[0]);
                }
            }
        }
        let mut ids = vec![usize::MAX; counter.edges];
        let mut circles = 0;
        for e in 0..counter.edges {
            let r = dsu.find(e);
            if ids[r] == usize::MAX {
                ids[r] = circles;
                circles += 1;
            }
        }
        // slots 0 and 2 always lie on the two arcs of the resolution
        let edges = counter
            .slots
            .iter()
            .map(|sl| {
                let a = ids[dsu.find(sl[0] as usize)];
                let b = ids[dsu.find(sl[2] as usize)];
                (a.min(b), a.max(b))
            })
            .collect();
        Ok(StateGraph {
            circles: circles + self.free_loops(),
            edges,
        })
    }

    pub fn all_a_graph(&self) -> StateGraph {
        self.apply_state(&KauffmanState::all(self.crossing_count(), Smoothing::A))
            .unwrap()
    }

    pub fn all_b_graph(&self) -> StateGraph {
        self.apply_state(&KauffmanState::all(self.crossing_count(), Smoothing::B))
            .unwrap()
    }

    pub fn adequacy(&self) -> Adequacy {
        let ga = self.all_a_graph();
        let gb = self.all_b_graph();
        Adequacy {
            a_adequate: !ga.has_loop(),
            b_adequate: !gb.has_loop(),
            v_a: ga.circles,
            v_b: gb.circles,
        }
    }

    /// `(2 - v_A - v_B + c) / 2`; the numerator must be a nonnegative even integer.
    pub fn turaev_genus(&self) -> Result<u64> {
        let ad = self.adequacy();
        let num = 2 - ad.v_a as i64 - ad.v_b as i64 + self.crossing_count() as i64;
        if num < 0 || num % 2 != 0 {
            return Err(Error::NonplanarSuspect(format!(
                "2 - v_A - v_B + c = {num} (v_A = {}, v_B = {})",
                ad.v_a, ad.v_b
            )));
        }
        Ok((num / 2) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn fig8() -> Diagram {
        parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap()
    }

    #[test]
    fn figure_eight_states() {
        let d = fig8();
        assert_eq!(d.all_a_graph().circles, 3);
        assert_eq!(d.all_b_graph().circles, 3);
        let ad = d.adequacy();
        assert!(ad.a_adequate && ad.b_adequate);
        assert_eq!(ad.v_a + ad.v_b, d.crossing_count() + 2);
        assert_eq!(d.turaev_genus().unwrap(), 0);
    }

    #[test]
    fn trefoil_adequacy() {
        let d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let ad = d.adequacy();
        assert!(ad.adequate());
        assert_eq!(ad.v_a + ad.v_b, 5);
        // right-handed trefoil: the A-state has two circles
        assert_eq!(ad.v_a, 2);
    }

    #[test]
    fn state_length_checked() {
        let d = fig8();
        let e = d.apply_state(&KauffmanState::all(3, Smoothing::A)).unwrap_err();
        assert_eq!(e, Error::StateLengthMismatch { expected: 4, got: 3 });
    }

    #[test]
    fn counter_matches_graph() {
        let d = fig8();
        let mut cc = CircleCounter::new(&d);
        for mask in 0..16u64 {
            let s = KauffmanState::from_mask(4, mask);
            assert_eq!(cc.circles(mask), d.apply_state(&s).unwrap().circles);
            assert_eq!(s.c_a() + s.c_b(), 4);
        }
        assert_eq!(KauffmanState::all(4, Smoothing::A).sign(), 4);
        assert_eq!(KauffmanState::all(4, Smoothing::B).sign(), -4);
    }
}
