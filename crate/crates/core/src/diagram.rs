//! Oriented link diagrams as lists of crossings with four semiarc slots.
//!
//! Virtual crossings are not vertices: a semiarc runs through them
//! undivided, so a virtual diagram is just a crossing list that need not be
//! planar.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{parse_err, Error};

/// One classical crossing. Slots hold dense semiarc indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: i8,
    pub u_in: usize,
    pub o_in: usize,
    pub u_out: usize,
    pub o_out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    /// external id of each dense semiarc index
    labels: Vec<usize>,
    /// dense indices of semiarcs on crossing-free components
    free: Vec<usize>,
    component: Vec<usize>,
    n_components: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RouteKind {
    Complete,
    Through,
    Crooked,
}

impl RouteKind {
    pub fn name(&self) -> &'static str {
        match self {
            RouteKind::Complete => "complete",
            RouteKind::Through => "through",
            RouteKind::Crooked => "crooked",
        }
    }
}

/// Consecutive semiarcs meeting head-to-tail; `negatives` counts the
/// negative crossings inside the route.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Route {
    pub edges: Vec<usize>,
    pub negatives: u32,
}

impl Route {
    pub fn sign(&self) -> i64 {
        if self.negatives.is_multiple_of(2) { 1 } else { -1 }
    }
}

struct Raw {
    line: usize,
    sign: i8,
    slots: [usize; 4],
}

impl LinkDiagram {
    /// Builds a diagram from crossings given in external ids
    /// `(sign, u_in, o_in, u_out, o_out)` plus crossing-free semiarcs.
    pub fn from_crossings(crossings: &[(i8, usize, usize, usize, usize)], free: &[usize]) -> Result<Self, Error> {
        let raws: Vec<Raw> = crossings.iter().enumerate()
            .map(|(i, &(s, a, b, c, d))| Raw { line: i + 1, sign: s, slots: [a, b, c, d] })
            .collect();
        let free: Vec<(usize, usize)> = free.iter().map(|&f| (0, f)).collect();
        Self::build(raws, free)
    }

    fn build(raws: Vec<Raw>, free: Vec<(usize, usize)>) -> Result<Self, Error> {
        let mut ins: BTreeMap<usize, usize> = BTreeMap::new();
        let mut outs: BTreeMap<usize, usize> = BTreeMap::new();
        for r in &raws {
            if r.sign != 1 && r.sign != -1 {
                return Err(parse_err(r.line, "crossing sign must be + or -"));
            }
            for (k, &e) in r.slots.iter().enumerate() {
                if e == 0 {
                    return Err(parse_err(r.line, "semiarc ids must be positive"));
                }
                let (map, what) = if k < 2 { (&mut ins, "input") } else { (&mut outs, "output") };
                if map.insert(e, r.line).is_some() {
                    return Err(parse_err(r.line, format!("semiarc {} used twice as {}", e, what)));
                }
            }
        }
        for (&e, &line) in &ins {
            if !outs.contains_key(&e) {
                return Err(parse_err(line, format!("semiarc {} enters a crossing but never leaves one", e)));
            }
        }
        for (&e, &line) in &outs {
            if !ins.contains_key(&e) {
                return Err(parse_err(line, format!("semiarc {} leaves a crossing but never enters one", e)));
            }
        }
        let mut seen_free = BTreeSet::new();
        for &(line, f) in &free {
            if f == 0 {
                return Err(parse_err(line, "semiarc ids must be positive"));
            }
            if ins.contains_key(&f) || !seen_free.insert(f) {
                return Err(parse_err(line, format!("semiarc {} declared free but already used", f)));
            }
        }

        let mut labels: Vec<usize> = ins.keys().copied().collect();
        let n_bound = labels.len();
        labels.extend(free.iter().map(|&(_, f)| f));
        let index: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let crossings: Vec<Crossing> = raws.iter()
            .map(|r| Crossing {
                sign: r.sign,
                u_in: index[&r.slots[0]],
                o_in: index[&r.slots[1]],
                u_out: index[&r.slots[2]],
                o_out: index[&r.slots[3]],
            })
            .collect();
        let free_idx: Vec<usize> = (n_bound..labels.len()).collect();

        // components: follow each strand through its head crossing
        let mut next = vec![usize::MAX; n_bound];
        for c in &crossings {
            next[c.u_in] = c.u_out;
            next[c.o_in] = c.o_out;
        }
        let mut component = vec![usize::MAX; labels.len()];
        let mut nc = 0;
        for s in 0..n_bound {
            if component[s] != usize::MAX {
                continue;
            }
            let mut e = s;
            while component[e] == usize::MAX {
                component[e] = nc;
                e = next[e];
            }
            nc += 1;
        }
        for &f in &free_idx {
            component[f] = nc;
            nc += 1;
        }
        Ok(LinkDiagram { crossings, labels, free: free_idx, component, n_components: nc })
    }

    /// Parses `X <sign> <u_in> <o_in> <u_out> <o_out>` and `O <semiarc>`
    /// lines; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut raws = Vec::new();
        let mut free = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let ln = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let id = |t: &str| t.parse::<usize>().map_err(|_| parse_err(ln, format!("bad semiarc id `{}`", t)));
            match toks[0] {
                "X" => {
                    if toks.len() != 6 {
                        return Err(parse_err(ln, "crossing line needs a sign and four semiarcs"));
                    }
                    let sign = match toks[1] {
                        "+" => 1,
                        "-" => -1,
                        s => return Err(parse_err(ln, format!("bad sign `{}`", s))),
                    };
                    raws.push(Raw { line: ln, sign, slots: [id(toks[2])?, id(toks[3])?, id(toks[4])?, id(toks[5])?] });
                }
                "O" => {
                    if toks.len() != 2 {
                        return Err(parse_err(ln, "unknot line needs one semiarc id"));
                    }
                    free.push((ln, id(toks[1])?));
                }
                t => return Err(parse_err(ln, format!("unknown record `{}`", t))),
            }
        }
        Self::build(raws, free)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.crossings {
            s += &format!(
                "X {} {} {} {} {}\n",
                if c.sign > 0 { '+' } else { '-' },
                self.labels[c.u_in], self.labels[c.o_in], self.labels[c.u_out], self.labels[c.o_out]
            );
        }
        for &f in &self.free {
            s += &format!("O {}\n", self.labels[f]);
        }
        s
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn semiarc_count(&self) -> usize {
        self.labels.len()
    }

    /// External id of a dense semiarc index.
    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.component[i]
    }

    pub fn component_count(&self) -> usize {
        self.n_components
    }

    pub fn free_semiarcs(&self) -> &[usize] {
        &self.free
    }

    pub fn crossing_free_components(&self) -> usize {
        self.free.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Mirror image: over and under strands trade places, signs flip.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for c in d.crossings.iter_mut() {
            *c = Crossing { sign: -c.sign, u_in: c.o_in, o_in: c.u_in, u_out: c.o_out, o_out: c.u_out };
        }
        d
    }

    /// Every component reversed; signs are unchanged.
    pub fn reverse(&self) -> Self {
        let mut d = self.clone();
        for c in d.crossings.iter_mut() {
            *c = Crossing { sign: c.sign, u_in: c.u_out, o_in: c.o_out, u_out: c.u_in, o_out: c.o_in };
        }
        d
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Routes of order 1 (single semiarcs on crossing-bearing components) or
/// order 2 (a step through one crossing of the requested kind).
pub fn routes(d: &LinkDiagram, order: usize, kind: RouteKind) -> Result<Vec<Route>, Error> {
    match order {
        1 => {
            let bound = d.semiarc_count() - d.free.len();
            Ok((0..bound).map(|e| Route { edges: vec![e], negatives: 0 }).collect())
        }
        2 => {
            let mut out = Vec::with_capacity(4 * d.crossings.len());
            for c in &d.crossings {
                let neg = (c.sign < 0) as u32;
                let through = [(c.u_in, c.u_out), (c.o_in, c.o_out)];
                let crooked = [(c.u_in, c.o_out), (c.o_in, c.u_out)];
                let steps: Vec<(usize, usize)> = match kind {
                    RouteKind::Through => through.to_vec(),
                    RouteKind::Crooked => crooked.to_vec(),
                    RouteKind::Complete => through.iter().chain(&crooked).copied().collect(),
                };
                out.extend(steps.into_iter().map(|(a, b)| Route { edges: vec![a, b], negatives: neg }));
            }
            Ok(out)
        }
        n => Err(Error::Unsupported(format!("routes of order {}", n))),
    }
}

pub fn crossing_free_components(d: &LinkDiagram) -> usize {
    d.crossing_free_components()
}

/// Converts `PD X(a,b,c,d)` lines (or a bare list of quadruples).
///
/// Each quadruple is listed counterclockwise from the incoming under-edge,
/// so the under strand runs a → c. The over strand direction is fixed by
/// requiring every edge to enter exactly one crossing and leave exactly
/// one; where that leaves a choice, the over strand runs from the lower to
/// the next label along its component. Over strand d → b gives a positive
/// crossing, b → d a negative one.
pub fn pd_to_diagram(text: &str) -> Result<LinkDiagram, Error> {
    let quads = parse_pd(text)?;
    if quads.is_empty() {
        return Err(Error::Input("PD code has no crossings".into()));
    }
    let n = quads.len();
    let mut ins: BTreeSet<usize> = quads.iter().map(|q| q[0]).collect();
    let mut outs: BTreeSet<usize> = quads.iter().map(|q| q[2]).collect();
    if ins.len() != n || outs.len() != n {
        return Err(Error::Input("PD code repeats an under-strand edge".into()));
    }
    // over direction per crossing: true means b -> d
    let mut dir: Vec<Option<bool>> = vec![None; n];
    let mut changed = true;
    while changed {
        changed = false;
        for (i, q) in quads.iter().enumerate() {
            if dir[i].is_some() {
                continue;
            }
            let (b, d) = (q[1], q[3]);
            let bd = if ins.contains(&b) || outs.contains(&d) {
                false
            } else if ins.contains(&d) || outs.contains(&b) {
                true
            } else {
                continue;
            };
            dir[i] = Some(bd);
            let (oi, oo) = if bd { (b, d) } else { (d, b) };
            ins.insert(oi);
            outs.insert(oo);
            changed = true;
        }
        if !changed {
            // fall back to label order along the component for one crossing
            if let Some(i) = dir.iter().position(|d| d.is_none()) {
                let succ = label_successors(&quads);
                let (b, d) = (quads[i][1], quads[i][3]);
                let bd = succ.get(&b) == Some(&d);
                dir[i] = Some(bd);
                let (oi, oo) = if bd { (b, d) } else { (d, b) };
                ins.insert(oi);
                outs.insert(oo);
                changed = true;
            }
        }
    }
    let crossings: Vec<(i8, usize, usize, usize, usize)> = quads.iter().zip(&dir)
        .map(|(q, d)| {
            let [a, b, c, dd] = *q;
            if d.unwrap() { (-1, a, b, c, dd) } else { (1, a, dd, c, b) }
        })
        .collect();
    LinkDiagram::from_crossings(&crossings, &[])
        .map_err(|e| Error::Input(format!("PD code does not close up: {}", e)))
}

// successor of each label within its component, components from the
// strand pairings a~c and b~d, labels cyclically ordered
fn label_successors(quads: &[[usize; 4]]) -> BTreeMap<usize, usize> {
    let labels: BTreeSet<usize> = quads.iter().flatten().copied().collect();
    let mut parent: BTreeMap<usize, usize> = labels.iter().map(|&l| (l, l)).collect();
    fn find(p: &mut BTreeMap<usize, usize>, x: usize) -> usize {
        let mut r = x;
        while p[&r] != r {
            r = p[&r];
        }
        p.insert(x, r);
        r
    }
    for q in quads {
        for (x, y) in [(q[0], q[2]), (q[1], q[3])] {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent.insert(rx, ry);
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &l in &labels {
        let r = find(&mut parent, l);
        comps.entry(r).or_default().push(l);
    }
    let mut succ = BTreeMap::new();
    for ls in comps.values() {
        for (i, &l) in ls.iter().enumerate() {
            succ.insert(l, ls[(i + 1) % ls.len()]);
        }
    }
    succ
}

fn parse_pd(text: &str) -> Result<Vec<[usize; 4]>, Error> {
    let mut quads = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let body = line.strip_prefix("PD").unwrap_or(line);
        // every X(...) or [..] group on the line
        let nums: Vec<Vec<usize>> = body
            .split([')', ']', '}'])
            .filter_map(|chunk| {
                let start = chunk.rfind(['(', '[', '{'])?;
                Some(chunk[start + 1..].split(',').map(|t| t.trim()).filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>()).collect::<Result<Vec<_>, _>>())
            })
            .collect::<Result<_, _>>()
            .map_err(|_| parse_err(i + 1, "bad PD label"))?;
        for v in nums {
            if v.is_empty() {
                continue;
            }
            if v.len() != 4 {
                return Err(parse_err(i + 1, "PD crossing needs four labels"));
            }
            quads.push([v[0], v[1], v[2], v[3]]);
        }
    }
    Ok(quads)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X + 1 4 2 5\nX + 3 6 4 1\nX + 5 2 6 3\n";

    #[test]
    fn trefoil_parses() {
        let d = LinkDiagram::parse(TREFOIL).unwrap();
        assert_eq!(d.semiarc_count(), 6);
        assert_eq!(d.component_count(), 1);
        assert_eq!(crossing_free_components(&d), 0);
    }

    #[test]
    fn unknot_without_crossings() {
        let d = LinkDiagram::parse("# unknot\nO 1\n").unwrap();
        assert_eq!(d.semiarc_count(), 1);
        assert_eq!(d.crossings().len(), 0);
        assert_eq!(crossing_free_components(&d), 1);
        assert!(routes(&d, 1, RouteKind::Complete).unwrap().is_empty());
    }

    #[test]
    fn split_union_counts_free() {
        let d = LinkDiagram::parse(&format!("{}O 7\n", TREFOIL)).unwrap();
        assert_eq!(crossing_free_components(&d), 1);
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn malformed_inputs() {
        match LinkDiagram::parse("X + 1 2 3 4\nX + 3 4 5 2\n") {
            Err(Error::Parse { .. }) => {}
            r => panic!("expected parse error, got {:?}", r),
        }
        assert!(LinkDiagram::parse("X + 1 1 2 2\n").is_err());
        assert!(LinkDiagram::parse("X * 1 2 1 2\n").is_err());
        assert!(LinkDiagram::parse("X + 1 2 1 2\nO 2\n").is_err());
    }

    #[test]
    fn route_counts() {
        let d = LinkDiagram::parse(TREFOIL).unwrap();
        assert_eq!(routes(&d, 1, RouteKind::Complete).unwrap().len(), 6);
        assert_eq!(routes(&d, 2, RouteKind::Complete).unwrap().len(), 12);
        assert_eq!(routes(&d, 2, RouteKind::Through).unwrap().len(), 6);
        assert_eq!(routes(&d, 2, RouteKind::Crooked).unwrap().len(), 6);
        assert!(routes(&d, 3, RouteKind::Complete).is_err());
    }

    #[test]
    fn pd_trefoil() {
        let d = pd_to_diagram("PD X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        assert_eq!(d.crossings().len(), 3);
        assert_eq!(d.component_count(), 1);
        assert!(d.crossings().iter().all(|c| c.sign == d.crossings()[0].sign));
        // the same code in list form
        let e = pd_to_diagram("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").unwrap();
        assert_eq!(d, e);
    }

    #[test]
    fn mirror_and_reverse_stay_valid() {
        let d = LinkDiagram::parse(TREFOIL).unwrap();
        let m = d.mirror();
        assert_eq!(m.writhe(), -d.writhe());
        assert_eq!(LinkDiagram::parse(&m.to_text()).unwrap(), m);
        let r = d.reverse();
        assert_eq!(LinkDiagram::parse(&r.to_text()).unwrap().component_count(), 1);
    }
}
