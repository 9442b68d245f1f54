//! Temperley-Lieb algebra TL_n over Z[A, A^-1] in the crossingless matching basis.
//!
//! A matching on `2n` points numbers the top row `0..n` and the bottom row
//! `n..2n`, both left to right. Products stack the left factor on top.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    n: usize,
    partner: Vec<u8>,
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<_> = self.pairs().collect();
        write!(f, "Matching{}{:?}", self.n, pairs)
    }
}

impl Matching {
    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0u8; 2 * n];
        for i in 0..n {
            partner[i] = (n + i) as u8;
            partner[n + i] = i as u8;
        }
        Self { n, partner }
    }

    /// The generator `e_i` (1-based) of TL_n: a cap over `i, i+1` on top and a cup below.
    pub fn e(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "e_{i} not in TL_{n}");
        let mut m = Self::identity(n);
        let (a, b) = (i - 1, i);
        m.partner[a] = b as u8;
        m.partner[b] = a as u8;
        m.partner[n + a] = (n + b) as u8;
        m.partner[n + b] = (n + a) as u8;
        m
    }

    /// Builds from point pairs; rejects imperfect or crossing pairings.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![u8::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || a == b || partner[a] != u8::MAX || partner[b] != u8::MAX {
                return Err(Error::InvalidArgument(format!("bad pair ({a}, {b}) for TL_{n}")));
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        if partner.contains(&u8::MAX) {
            return Err(Error::InvalidArgument("pairing is not perfect".into()));
        }
        let m = Self { n, partner };
        if !m.is_planar() {
            return Err(Error::InvalidArgument("pairing is not planar".into()));
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..2 * self.n)
            .filter(move |&p| (self.partner[p] as usize) > p)
            .map(move |p| (p, self.partner[p] as usize))
    }

    /// Position around the disk: top left to right, then bottom right to left.
    fn cyclic(&self, p: usize) -> usize {
        if p < self.n {
            p
        } else {
            3 * self.n - 1 - p
        }
    }

    pub fn is_planar(&self) -> bool {
        let mut by_pos = vec![0usize; 2 * self.n];
        for p in 0..2 * self.n {
            by_pos[self.cyclic(p)] = p;
        }
        let mut stack = Vec::new();
        for &p in &by_pos {
            let q = self.partner[p] as usize;
            if self.cyclic(q) > self.cyclic(p) {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Number of top-to-bottom arcs.
    pub fn through_strands(&self) -> usize {
        (0..self.n).filter(|&p| self.partner[p] as usize >= self.n).count()
    }

    /// `self ⊗ 1`: one more through strand on the right.
    pub fn tensor_id(&self) -> Self {
        let n = self.n;
        let map = |p: usize| if p < n { p } else { p + 1 };
        let mut partner = vec![0u8; 2 * (n + 1)];
        for p in 0..2 * n {
            partner[map(p)] = map(self.partner[p] as usize) as u8;
        }
        partner[n] = (2 * n + 1) as u8;
        partner[2 * n + 1] = n as u8;
        Self { n: n + 1, partner }
    }

    /// Stacks `self` on top of `other`; returns the product and the number of closed loops.
    pub fn compose(&self, other: &Self) -> (Self, usize) {
        let n = self.n;
        assert_eq!(n, other.n);
        let mut out = vec![u8::MAX; 2 * n];
        let mut seen = vec![false; n];
        // walk from an outer point until another outer point is reached
        let trace = |start_top: bool, i: usize, seen: &mut Vec<bool>| -> usize {
            let (mut upper, mut p) = if start_top { (true, i) } else { (false, n + i) };
            loop {
                if upper {
                    let q = self.partner[p] as usize;
                    if q < n {
                        return q;
                    }
                    seen[q - n] = true;
                    upper = false;
                    p = q - n;
                } else {
                    let q = other.partner[p] as usize;
                    if q >= n {
                        return q;
                    }
                    seen[q] = true;
                    upper = true;
                    p = n + q;
                }
            }
        };
        for i in 0..n {
            if out[i] == u8::MAX {
                let j = trace(true, i, &mut seen);
                out[i] = j as u8;
                out[j] = i as u8;
            }
            if out[n + i] == u8::MAX {
                let j = trace(false, i, &mut seen);
                out[n + i] = j as u8;
                out[j] = (n + i) as u8;
            }
        }
        let mut loops = 0;
        for m in 0..n {
            if seen[m] {
                continue;
            }
            loops += 1;
            let mut cur = m;
            loop {
                seen[cur] = true;
                let below = self.partner[n + cur] as usize - n;
                seen[below] = true;
                let next = other.partner[below] as usize;
                if next == m {
                    break;
                }
                cur = next;
            }
        }
        (Self { n, partner: out }, loops)
    }

    /// Loops formed when top point `i` is joined around the side to bottom point `i`.
    pub fn closure_loops(&self) -> usize {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            loop {
                seen[p] = true;
                let q = self.partner[p] as usize;
                seen[q] = true;
                let r = if q < n { q + n } else { q - n };
                if r == s {
                    break;
                }
                p = r;
            }
        }
        loops
    }
}

/// A linear combination of matchings; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<Matching, LaurentPoly>,
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Matching::identity(n))
    }

    pub fn e(n: usize, i: usize) -> Self {
        Self::basis(Matching::e(n, i))
    }

    pub fn basis(m: Matching) -> Self {
        let n = m.n;
        let mut terms = BTreeMap::new();
        terms.insert(m, LaurentPoly::one());
        Self { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Matching) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Matching, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::monomial(0, -1)))
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// `self · other`, with `self` stacked on top.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let delta = LaurentPoly::loop_value();
        let mut pows = vec![LaurentPoly::one()];
        let mut acc: BTreeMap<Matching, LaurentPoly> = BTreeMap::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let (w, loops) = u.compose(v);
                while pows.len() <= loops {
                    let next = pows.last().unwrap() * &delta;
                    pows.push(next);
                }
                let c = &(cu * cv) * &pows[loops];
                *acc.entry(w).or_default() += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { n: self.n, terms: acc })
    }

    pub fn tensor_id(&self) -> Self {
        Self {
            n: self.n + 1,
            terms: self.terms.iter().map(|(m, c)| (m.tensor_id(), c.clone())).collect(),
        }
    }

    /// Bracket of the closure (top joined to bottom around the right side).
    pub fn closure(&self) -> LaurentPoly {
        let delta = LaurentPoly::loop_value();
        self.terms
            .iter()
            .map(|(m, c)| c * &delta.pow(m.closure_loops() as u32))
            .sum()
    }
}
