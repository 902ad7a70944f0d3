//! Biquandle colorings of a diagram.
//!
//! At every crossing the pair entering the S map is (u_in, o_out) for a
//! positive crossing and (u_out, o_in) for a negative one:
//!
//! ```text
//!   positive:  S(u_in, o_out)  = (o_in,  u_out)
//!   negative:  S(u_out, o_in)  = (o_out, u_in)
//! ```
//!
//! i.e. u_out = u_in ▷ o_out, o_in = o_out ▷̄ u_in at a positive crossing
//! and u_in = u_out ▷ o_in, o_out = o_in ▷̄ u_out at a negative one. This is
//! the reading under which the exchange laws are exactly the third
//! Reidemeister move; for quandles it is the usual rule.

use crate::biquandle::{partial_inverse_maps, FiniteBiquandle, InverseMaps};
use crate::diagram::{Crossing, LinkDiagram};
use crate::Error;

const NONE: usize = usize::MAX;

/// Colors indexed by dense semiarc index, elements 0-indexed.
pub type Coloring = Vec<usize>;

#[derive(Clone, Debug)]
pub struct Homset {
    pub colorings: Vec<Coloring>,
}

impl Homset {
    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }
}

// (p, q, r, s) with S(p, q) = (r, s)
#[inline]
fn s_slots(c: &Crossing) -> (usize, usize, usize, usize) {
    if c.sign > 0 {
        (c.u_in, c.o_out, c.o_in, c.u_out)
    } else {
        (c.u_out, c.o_in, c.o_out, c.u_in)
    }
}

/// Whether `col` satisfies the relation at `c`.
pub fn crossing_ok(b: &FiniteBiquandle, c: &Crossing, col: &[usize]) -> bool {
    let (p, q, r, s) = s_slots(c);
    b.s_map(col[p], col[q]) == (col[r], col[s])
}

pub fn is_coloring(d: &LinkDiagram, b: &FiniteBiquandle, col: &[usize]) -> bool {
    col.len() == d.semiarc_count()
        && col.iter().all(|&x| x < b.size())
        && d.crossings().iter().all(|c| crossing_ok(b, c, col))
}

struct Search<'a> {
    d: &'a LinkDiagram,
    b: &'a FiniteBiquandle,
    inv: InverseMaps,
    out: Vec<Coloring>,
}

impl<'a> Search<'a> {
    // fills forced colors; false on contradiction
    fn propagate(&self, col: &mut [usize]) -> bool {
        let set = |col: &mut [usize], e: usize, v: usize| -> Option<bool> {
            if col[e] == NONE {
                col[e] = v;
                Some(true)
            } else if col[e] == v {
                Some(false)
            } else {
                None
            }
        };
        loop {
            let mut changed = false;
            for c in self.d.crossings() {
                let (p, q, r, s) = s_slots(c);
                let known = (col[p] != NONE, col[q] != NONE, col[r] != NONE, col[s] != NONE);
                let (vp, vq) = match known {
                    (true, true, _, _) => (col[p], col[q]),
                    (_, _, true, true) => self.inv.inv_s(col[r], col[s]),
                    // r = q ▷̄ p
                    (true, _, true, _) => (col[p], self.inv.inv_alpha(col[p], col[r])),
                    // s = p ▷ q
                    (_, true, _, true) => (self.inv.inv_beta(col[q], col[s]), col[q]),
                    _ => continue,
                };
                if vp == NONE || vq == NONE {
                    // no unique preimage; only tables that are not biquandles get here
                    continue;
                }
                let (vr, vs) = self.b.s_map(vp, vq);
                for (e, v) in [(p, vp), (q, vq), (r, vr), (s, vs)] {
                    match set(col, e, v) {
                        None => return false,
                        Some(ch) => changed |= ch,
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn branch_slot(&self, col: &[usize]) -> Option<usize> {
        // prefer a semiarc at a crossing where something is already known
        let mut best: Option<(usize, usize)> = None;
        for c in self.d.crossings() {
            let (p, q, r, s) = s_slots(c);
            let k = [p, q, r, s].iter().filter(|&&e| col[e] != NONE).count();
            if k == 0 || k == 4 {
                continue;
            }
            let e = [p, q, r, s].into_iter().filter(|&e| col[e] == NONE).min().unwrap();
            if best.is_none_or(|(bk, be)| k > bk || (k == bk && e < be)) {
                best = Some((k, e));
            }
        }
        best.map(|(_, e)| e).or_else(|| col.iter().position(|&v| v == NONE))
    }

    fn rec(&mut self, mut col: Vec<usize>) {
        if !self.propagate(&mut col) {
            return;
        }
        match self.branch_slot(&col) {
            None => {
                debug_assert!(is_coloring(self.d, self.b, &col));
                self.out.push(col);
            }
            Some(e) => {
                for v in 0..self.b.size() {
                    let mut next = col.clone();
                    next[e] = v;
                    self.rec(next);
                }
            }
        }
    }
}

/// All colorings, in lexicographic order of the assignment vector.
///
/// Any pair of operation tables is accepted; for tables that are not
/// biquandles the search falls back to branching where an inverse is
/// missing or ambiguous.
pub fn enumerate_colorings(d: &LinkDiagram, b: &FiniteBiquandle) -> Result<Homset, Error> {
    let inv = partial_inverse_maps(b);
    let mut s = Search { d, b, inv, out: Vec::new() };
    s.rec(vec![NONE; d.semiarc_count()]);
    let mut colorings = s.out;
    colorings.sort();
    colorings.dedup();
    Ok(Homset { colorings })
}

pub fn counting_invariant(d: &LinkDiagram, b: &FiniteBiquandle) -> Result<usize, Error> {
    Ok(enumerate_colorings(d, b)?.len())
}

/// Every assignment checked against every crossing; for testing.
pub fn brute_force_colorings(d: &LinkDiagram, b: &FiniteBiquandle) -> Vec<Coloring> {
    let (n, s) = (b.size(), d.semiarc_count());
    let total = n.pow(s as u32);
    let mut out = Vec::new();
    let mut col = vec![0usize; s];
    for mut k in 0..total {
        for i in (0..s).rev() {
            col[i] = k % n;
            k /= n;
        }
        if is_coloring(d, b, &col) {
            out.push(col.clone());
        }
    }
    out
}
