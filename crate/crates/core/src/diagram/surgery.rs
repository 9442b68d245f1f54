//! Diagram surgeries: mirror, connected sum, kinks, blackboard cables and
//! untwisted Whitehead doubles.

use std::collections::BTreeMap;

use super::{port, Diagram, Label};
use crate::error::{Error, Result};

/// Label slots of a small 2-strand tangle inserted into a cable band.
/// West is the end at the band's first occurrence, east the other end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    WestTop,
    WestBottom,
    EastTop,
    EastBottom,
    Inner(usize),
}

type BandBox = Vec<[Slot; 4]>;

use Slot::{EastBottom as EB, EastTop as ET, Inner, WestBottom as WB, WestTop as WT};

/// A full twist of the two band strands; `flip` picks the other handedness.
fn twist_box(flip: bool) -> BandBox {
    let (m1, m2) = (Inner(0), Inner(1));
    if flip {
        vec![[m2, m1, WT, WB], [EB, ET, m1, m2]]
    } else {
        vec![[WB, m2, m1, WT], [m2, EB, ET, m1]]
    }
}

/// The clasp: the west strands are hooked to each other, as are the east ones.
fn clasp_box(flip: bool) -> BandBox {
    let (a1, b1) = (Inner(0), Inner(1));
    if flip {
        vec![[a1, ET, WT, b1], [EB, a1, b1, WB]]
    } else {
        vec![[b1, a1, ET, WT], [WB, EB, a1, b1]]
    }
}

enum Orient {
    /// keep the cable strands parallel to the original orientation
    Parallel,
    /// orient by walking from the first crossing
    Walk,
}

impl Diagram {
    pub fn mirror(&self) -> Diagram {
        let tuples = self
            .crossings
            .iter()
            .map(|t| {
                let mut t = *t;
                t.rotate_left(1);
                t
            })
            .collect();
        let mut d = Diagram::from_tuples(tuples, self.free_loops, |x, p| {
            Some(self.is_incoming(port(x, (p + 1) % 4)))
        })
        .expect("mirror preserves validity");
        d.name = self.name.as_ref().map(|n| format!("{n}*"));
        d
    }

    /// Connected sum along the lowest-labeled edge of each summand.
    pub fn connected_sum(&self, other: &Diagram) -> Result<Diagram> {
        let l1 = self.labels().first().copied();
        let l2 = other.labels().first().copied();
        match (l1, l2) {
            (Some(a), Some(b)) => self.connected_sum_at(a, other, b),
            _ => self.connected_sum_at(l1.unwrap_or(0), other, l2.unwrap_or(0)),
        }
    }

    /// Connected sum cutting edge `l1` of `self` and `l2` of `other`. A
    /// crossingless summand must be a single free loop and is absorbed.
    pub fn connected_sum_at(&self, l1: Label, other: &Diagram, l2: Label) -> Result<Diagram> {
        for (d, l) in [(self, l1), (other, l2)] {
            if d.crossing_count() > 0 {
                d.edge_ports(l)?;
            } else if d.free_loops == 0 {
                return Err(Error::ArcNotFound(l));
            }
        }
        if self.crossing_count() == 0 || other.crossing_count() == 0 {
            let (empty, full) = if self.crossing_count() == 0 {
                (self, other)
            } else {
                (other, self)
            };
            let mut d = full.clone();
            d.free_loops += empty.free_loops - 1;
            d.components += empty.free_loops - 1;
            return Ok(d);
        }
        let (_, h1) = self.edge_ports(l1)?;
        let (_, h2) = other.edge_ports(l2)?;
        let c1 = self.crossing_count();
        let off = self.max_label() - other.crossings.iter().flatten().copied().min().unwrap() + 1;
        let mut tuples: Vec<[Label; 4]> = self.crossings.clone();
        tuples.extend(other.crossings.iter().map(|t| t.map(|l| l + off)));
        let l2o = l2 + off;
        let h2g = h2 + 4 * c1;
        tuples[h2g / 4][h2g % 4] = l1;
        tuples[h1 / 4][h1 % 4] = l2o;
        let incoming = |x: usize, p: usize| {
            if x < c1 {
                Some(self.is_incoming(port(x, p)))
            } else {
                Some(other.is_incoming(port(x - c1, p)))
            }
        };
        let mut d = Diagram::from_tuples(tuples, self.free_loops + other.free_loops, incoming)?;
        if let (Some(a), Some(b)) = (&self.name, &other.name) {
            d.name = Some(format!("{a}#{b}"));
        }
        Ok(d)
    }

    /// Adds a Reidemeister-I kink of the given sign on the lowest-labeled edge.
    pub fn add_kink(&self, sign: i8) -> Result<Diagram> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidArgument(format!("kink sign {sign}")));
        }
        let u = self.max_label() + 1;
        let v = self.max_label() + 2;
        let c = self.crossing_count();
        let mut tuples = self.crossings.clone();
        let mut free = self.free_loops;
        let e = if c == 0 {
            if free == 0 {
                return Err(Error::InvalidArgument("empty diagram".into()));
            }
            free -= 1;
            v
        } else {
            let l = self.labels()[0];
            let (_, head) = self.edge_ports(l)?;
            tuples[head / 4][head % 4] = v;
            l
        };
        // strand enters slot 0, leaves slot 2, loops back through the over slots
        tuples.push(if sign > 0 { [e, v, u, u] } else { [e, u, u, v] });
        let d = Diagram::from_tuples(tuples, free, |x, p| {
            if x < c {
                Some(self.is_incoming(port(x, p)))
            } else {
                (p == 0).then_some(true)
            }
        })?;
        debug_assert_eq!(d.signs[c], sign);
        Ok(Diagram {
            name: self.name.clone(),
            ..d
        })
    }

    /// Blackboard `n`-cable: every crossing becomes an `n × n` grid.
    pub fn cable(&self, n: usize) -> Result<Diagram> {
        if n == 0 {
            return Err(Error::InvalidArgument("cable width must be positive".into()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        self.cable_with(n, None, Orient::Parallel)
    }

    /// Untwisted (or blackboard-framed) Whitehead double with a clasp of the
    /// given sign, built on the band of the lowest-labeled edge.
    pub fn whitehead_double(&self, clasp_sign: i8, untwisted: bool) -> Result<Diagram> {
        if clasp_sign != 1 && clasp_sign != -1 {
            return Err(Error::InvalidArgument(format!("clasp sign {clasp_sign}")));
        }
        if self.component_count() != 1 {
            return Err(Error::NotAKnot(self.component_count()));
        }
        if self.crossing_count() == 0 {
            return Err(Error::InvalidArgument("double of a crossingless diagram".into()));
        }
        let band = self.labels()[0];
        let wr = self.writhe();
        let twists = if untwisted { wr.unsigned_abs() as usize } else { 0 };
        let mut boxes: Vec<BandBox> = Vec::new();
        if twists > 0 {
            // pick the twist handedness that unlinks the two parallel strands
            let mut chosen = None;
            for flip in [false, true] {
                let trial = vec![twist_box(flip); twists];
                let link = self.cable_with(2, Some((band, trial.clone())), Orient::Parallel)?;
                if link.linking_number() == 0 {
                    chosen = Some(trial);
                    break;
                }
            }
            boxes = chosen.expect("one twist handedness cancels the framing");
        }
        for flip in [false, true] {
            let mut bs = boxes.clone();
            bs.push(clasp_box(flip));
            let d = self.cable_with(2, Some((band, bs)), Orient::Walk)?;
            let c = d.crossing_count();
            if d.signs[c - 2] == clasp_sign && d.signs[c - 1] == clasp_sign {
                let tag = if clasp_sign < 0 { "W-" } else { "W+" };
                let name = self.name.as_ref().map(|n| format!("{tag}({n})"));
                return Ok(Diagram { name, ..d.relabeled() });
            }
        }
        unreachable!("the two clasp variants have opposite signs")
    }

    /// Sum of signs over crossings between distinct components, halved.
    pub fn linking_number(&self) -> i64 {
        let total: i64 = (0..self.crossing_count())
            .filter(|&x| self.component_of_port(port(x, 0)) != self.component_of_port(port(x, 1)))
            .map(|x| self.signs[x] as i64)
            .sum();
        total / 2
    }

    fn cable_with(&self, n: usize, band: Option<(Label, Vec<BandBox>)>, orient: Orient) -> Result<Diagram> {
        let c = self.crossing_count();
        let labels = self.labels();
        let index: BTreeMap<Label, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut next: Label = (labels.len() * n) as Label + 1;
        let mut fresh = || {
            next += 1;
            next - 1
        };
        let strand = |l: Label, k: usize| (index[&l] * n + k) as Label;

        // band end labels: west end at the first occurrence of the band edge
        let mut band_ends: Option<(Label, usize, [Label; 2], [Label; 2])> = None;
        let mut extra: Vec<[Label; 4]> = Vec::new();
        if let Some((bl, boxes)) = &band {
            if n != 2 {
                return Err(Error::InvalidArgument("band inserts need a 2-cable".into()));
            }
            let (a, b) = self.edge_ports(*bl)?;
            let first = a.min(b);
            let west = [fresh(), fresh()]; // [bottom, top]
            let mut cur = west;
            for bx in boxes {
                let east = [fresh(), fresh()];
                let inner: Vec<Label> = (0..2).map(|_| fresh()).collect();
                for t in bx {
                    extra.push(t.map(|s| match s {
                        WB => cur[0],
                        WT => cur[1],
                        EB => east[0],
                        ET => east[1],
                        Inner(i) => inner[i],
                    }));
                }
                cur = east;
            }
            band_ends = Some((*bl, first, west, cur));
        }
        // boundary label at slot (x, side) with counterclockwise index k in 1..=n
        let boundary = |x: usize, side: usize, k: usize| -> Label {
            let l = self.crossings[x][side];
            let pt = port(x, side);
            let other = self.partner(pt);
            let at_first = pt < other;
            if let Some((bl, first, west, east)) = &band_ends {
                if l == *bl {
                    return if pt == *first {
                        west[k - 1]
                    } else {
                        // east end: index 1 is the top strand
                        east[2 - k]
                    };
                }
            }
            if at_first {
                strand(l, k)
            } else {
                strand(l, n + 1 - k)
            }
        };
        let mut vert = vec![0 as Label; c * n * n];
        let mut horiz = vec![0 as Label; c * n * n];
        for v in vert.iter_mut().chain(horiz.iter_mut()) {
            *v = fresh();
        }
        let vi = |x: usize, i: usize, j: usize| vert[(x * n + (i - 1)) * n + (j - 1)];
        let hi = |x: usize, i: usize, j: usize| horiz[(x * n + (i - 1)) * n + (j - 1)];
        let mut tuples = Vec::with_capacity(c * n * n + extra.len());
        let mut grid_sign = Vec::with_capacity(c * n * n);
        for x in 0..c {
            for j in 1..=n {
                for i in 1..=n {
                    let s = if j == 1 { boundary(x, 0, i) } else { vi(x, i, j - 1) };
                    let nn = if j == n { boundary(x, 2, n + 1 - i) } else { vi(x, i, j) };
                    let w = if i == 1 {
                        boundary(x, 3, n + 1 - j)
                    } else {
                        hi(x, i - 1, j)
                    };
                    let e = if i == n { boundary(x, 1, j) } else { hi(x, i, j) };
                    tuples.push([s, e, nn, w]);
                    grid_sign.push(self.signs[x]);
                }
            }
        }
        let g = tuples.len();
        tuples.extend(extra);
        let d = match orient {
            Orient::Parallel => Diagram::from_tuples(tuples, self.free_loops * n, |x, p| {
                if x >= g {
                    return None;
                }
                let s = grid_sign[x];
                Some(p == 0 || (p == 3 && s > 0) || (p == 1 && s < 0))
            })?,
            Orient::Walk => {
                Diagram::from_tuples(tuples, self.free_loops * n, |x, p| (x == 0 && p == 0).then_some(true))?
            }
        };
        Ok(Diagram {
            name: self.name.as_ref().map(|nm| format!("{nm}^{n}")),
            ..d
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn trefoil() -> Diagram {
        parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap()
    }

    fn fig8() -> Diagram {
        parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap()
    }

    #[test]
    fn mirror_involution() {
        for d in [trefoil(), fig8()] {
            let m = d.mirror();
            assert_eq!(m.writhe(), -d.writhe());
            assert_eq!(m.c_plus(), d.c_minus());
            assert_eq!(m.adequacy().v_a, d.adequacy().v_b);
            assert_eq!(m.mirror(), d);
        }
    }

    #[test]
    fn kinks() {
        for d in [trefoil(), fig8(), Diagram::unknot()] {
            for s in [1, -1] {
                let k = d.add_kink(s).unwrap();
                assert_eq!(k.writhe(), d.writhe() + s as i64);
                assert_eq!(k.crossing_count(), d.crossing_count() + 1);
                assert_eq!(k.component_count(), 1);
                assert_eq!(k.turaev_genus().unwrap(), d.turaev_genus().unwrap());
            }
        }
        // exactly one of the two adequacies fails on a kinked unknot
        for s in [1, -1] {
            let ad = Diagram::unknot().add_kink(s).unwrap().adequacy();
            assert!(ad.a_adequate != ad.b_adequate);
        }
    }

    #[test]
    fn connected_sums() {
        let (t, f) = (trefoil(), fig8());
        let s = t.connected_sum(&f).unwrap();
        assert_eq!(s.crossing_count(), 7);
        assert_eq!(s.writhe(), 3);
        assert_eq!(s.component_count(), 1);
        assert_eq!(s.turaev_genus().unwrap(), 0);
        assert!(s.adequacy().adequate());
        let u = t.connected_sum(&Diagram::unknot()).unwrap();
        assert_eq!(u, t);
        assert!(matches!(t.connected_sum_at(42, &f, 1), Err(Error::ArcNotFound(42))));
    }

    #[test]
    fn cables() {
        let t = trefoil();
        assert_eq!(t.cable(1).unwrap(), t);
        for n in 2..=3 {
            let c = t.cable(n).unwrap();
            assert_eq!(c.crossing_count(), n * n * 3);
            assert_eq!(c.writhe(), (n * n) as i64 * 3);
            assert_eq!(c.component_count(), n);
            let (cm, mc) = (c.mirror(), t.mirror().cable(n).unwrap());
            assert_eq!(cm.writhe(), mc.writhe());
            assert_eq!(cm.adequacy(), mc.adequacy());
        }
        let f = fig8().cable(2).unwrap();
        assert_eq!(f.linking_number(), 0);
        assert_eq!(t.cable(2).unwrap().linking_number(), 3);
        assert_eq!(Diagram::unknot().cable(3).unwrap().component_count(), 3);
    }

    #[test]
    fn whitehead_doubles() {
        let w = fig8().whitehead_double(-1, true).unwrap();
        assert_eq!(w.crossing_count(), 18);
        assert_eq!(w.component_count(), 1);
        assert_eq!(w.c_plus(), 8);
        let t = trefoil().whitehead_double(-1, true).unwrap();
        assert_eq!(t.crossing_count(), 20);
        let p = fig8().whitehead_double(1, true).unwrap();
        assert_eq!(p.c_minus(), 8);
        assert!(w.turaev_genus().is_ok() && t.turaev_genus().is_ok());
    }
}
