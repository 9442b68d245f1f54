//! Slice-program builders shared by the lemma tests and the acceptance run.

use skeinkit::diagram::Diagram;
use skeinkit::skein::{Slice, SliceProgram, TwistRegion};

/// The `n`-cable of one crossing in TL_{2n}: bundle `1..n` crosses bundle `n+1..2n`,
/// written as the braid word `Π_i (σ_{n-i} ... σ_{2n-1-i})`.
pub fn cabled_crossing_word(n: usize) -> Vec<usize> {
    (0..n).flat_map(|i| (n - i)..(2 * n - i)).collect()
}

/// Interprets a random op list as a valid closed program of width at most 10.
pub fn build(ops: &[(u8, usize, usize)], crossings: bool) -> SliceProgram {
    let mut w = 0usize;
    let mut s = Vec::new();
    for &(kind, x, m) in ops {
        match kind % 4 {
            0 if w + 2 <= 10 => {
                s.push(Slice::Cup(x % (w + 1)));
                w += 2;
            }
            1 if w >= 2 => {
                s.push(Slice::Cap(x % (w - 1)));
                w -= 2;
            }
            2 if w >= 2 => {
                let n = 2 + m % 3;
                let n = n.min(w);
                s.push(Slice::Jw {
                    n,
                    pos: x % (w - n + 1),
                });
            }
            3 if crossings && w >= 2 => s.push(Slice::Cross {
                pos: x % (w - 1),
                positive: m % 2 == 0,
            }),
            _ => {}
        }
    }
    while w > 0 {
        s.push(Slice::Cap(0));
        w -= 2;
    }
    SliceProgram::new(s)
}

/// All-A state: `x+` resolves to `e_i`, `x-` to the identity.
pub fn all_a(p: &SliceProgram) -> (SliceProgram, usize) {
    let mut out = Vec::new();
    let mut c = 0;
    for s in &p.slices {
        match *s {
            Slice::Cross { pos, positive } => {
                c += 1;
                if positive {
                    out.extend([Slice::Cap(pos), Slice::Cup(pos)]);
                }
            }
            other => out.push(other),
        }
    }
    (SliceProgram::new(out), c)
}

/// The fused shape on bundles at `p .. p+n` and `p+n .. p+2n`.
pub fn fused(n: usize, p: usize, a: usize) -> Vec<Slice> {
    let turn = n - a / 2;
    let mut s = vec![Slice::Jw { n, pos: p }, Slice::Jw { n, pos: p + n }];
    s.extend((0..turn).map(|t| Slice::Cap(p + n - 1 - t)));
    if a > 0 {
        s.push(Slice::Jw { n: a, pos: p });
    }
    s.extend((0..turn).map(|t| Slice::Cup(p + a / 2 + t)));
    s.extend([Slice::Jw { n, pos: p }, Slice::Jw { n, pos: p + n }]);
    s
}

/// A fused edge coloured `a` in a disk where the inner `n - k` strands of each
/// bundle turn back into the other bundle and only `k` on each side pass
/// around; closed off arbitrarily below.
pub fn disk(n: usize, k: usize, a: usize) -> SliceProgram {
    let mut s: Vec<Slice> = (0..k).map(|_| Slice::Cup(0)).collect();
    s.extend((0..n - k).map(|_| Slice::Cup(2 * k)));
    s.extend((0..k).map(|_| Slice::Cup(2 * n)));
    s.extend(fused(n, k, a));
    s.extend((0..n + k).map(|_| Slice::Cap(0)));
    SliceProgram::new(s)
}

/// The kink crossing, and whether its loop joins the two top or the two bottom
/// ports of the crossing. A loop on one side passes every strand of a cable
/// through the disk; one across the top or bottom turns them all back.
pub fn kink(d: &Diagram) -> (usize, bool) {
    for x in 0..d.crossing_count() {
        for p in 0..4 {
            let q = d.partner(4 * x + p);
            if q / 4 == x {
                let [tl, bl, br, tr] = TwistRegion::new(d, &[x]).unwrap().ports();
                let mut ends = [4 * x + p, q];
                ends.sort();
                let mut top = [tl, tr];
                top.sort();
                let mut bottom = [bl, br];
                bottom.sort();
                return (x, ends == top || ends == bottom);
            }
        }
    }
    panic!("no kink")
}
