//! Fares: functions on colored routes that sum to a Reidemeister-invariant
//! total, and the multiset / polynomial invariants they define.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::biquandle::FiniteBiquandle;
use crate::diagram::{routes, LinkDiagram, RouteKind};
use crate::homset::{enumerate_colorings, Coloring};
use crate::zmodlinalg::{self, CoeffGroup, GroupElement, KernelDescription};
use crate::{parse_err, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FareKind {
    /// order 1
    Plain,
    Complete,
    Through,
    Crooked,
}

impl FareKind {
    pub fn name(&self) -> &'static str {
        match self {
            FareKind::Plain => "plain",
            FareKind::Complete => "complete",
            FareKind::Through => "through",
            FareKind::Crooked => "crooked",
        }
    }

    pub fn route_kind(&self) -> RouteKind {
        match self {
            FareKind::Plain | FareKind::Complete => RouteKind::Complete,
            FareKind::Through => RouteKind::Through,
            FareKind::Crooked => RouteKind::Crooked,
        }
    }

    fn check_order(&self, order: usize) -> Result<(), Error> {
        match (order, self) {
            (1, FareKind::Plain) => Ok(()),
            (2, FareKind::Complete | FareKind::Through | FareKind::Crooked) => Ok(()),
            _ => Err(Error::Unsupported(format!("fares of order {} and kind {}", order, self.name()))),
        }
    }
}

impl FromStr for FareKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "plain" => Ok(FareKind::Plain),
            "complete" => Ok(FareKind::Complete),
            "through" => Ok(FareKind::Through),
            "crooked" => Ok(FareKind::Crooked),
            _ => Err(Error::Input(format!("unknown fare kind `{}`", s))),
        }
    }
}

/// A map X → A (order 1) or X² → A (order 2), stored densely; index of
/// (x, y) is x·n + y with 0-indexed elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FareTable {
    pub order: usize,
    pub kind: FareKind,
    pub group: CoeffGroup,
    pub n: usize,
    pub values: Vec<GroupElement>,
}

impl FareTable {
    pub fn new(order: usize, kind: FareKind, group: CoeffGroup, n: usize, values: Vec<GroupElement>) -> Result<Self, Error> {
        kind.check_order(order)?;
        if values.len() != n.pow(order as u32) {
            return Err(Error::Input(format!("fare table needs {} values, got {}", n.pow(order as u32), values.len())));
        }
        for v in &values {
            group.element(v.0.clone())?;
        }
        Ok(FareTable { order, kind, group, n, values })
    }

    /// Cyclic-group convenience: order-2 table given as rows, `rows[x][y]`
    /// is φ(x+1, y+1).
    pub fn from_rows(kind: FareKind, m: u64, rows: &[Vec<u64>]) -> Result<Self, Error> {
        let n = rows.len();
        let vals = rows.iter().flatten().map(|&v| GroupElement(vec![v % m])).collect();
        FareTable::new(2, kind, CoeffGroup::cyclic(m), n, vals)
    }

    pub fn zero(order: usize, kind: FareKind, group: CoeffGroup, n: usize) -> Result<Self, Error> {
        let z = group.zero();
        FareTable::new(order, kind, group, n, vec![z; n.pow(order as u32)])
    }

    /// Value on the 0-indexed tuple.
    pub fn value(&self, tuple: &[usize]) -> &GroupElement {
        let idx = tuple.iter().fold(0, |acc, &x| acc * self.n + x);
        &self.values[idx]
    }

    pub fn add(&self, other: &FareTable, kind: FareKind) -> Result<FareTable, Error> {
        if self.group != other.group || self.n != other.n || self.order != other.order {
            return Err(Error::Input("fare tables have different shapes".into()));
        }
        let vals = self.values.iter().zip(&other.values).map(|(a, b)| self.group.add(a, b)).collect();
        FareTable::new(self.order, kind, self.group.clone(), self.n, vals)
    }

    /// Residues of component `c` as one vector over all tuples.
    pub fn component(&self, c: usize) -> Vec<u64> {
        self.values.iter().map(|v| v.0[c]).collect()
    }

    pub fn header(&self) -> String {
        format!("fare order={} kind={} group={} n={}", self.order, self.kind.name(), self.group, self.n)
    }

    pub fn to_text(&self) -> String {
        let mut s = self.header() + "\n";
        for (i, v) in self.values.iter().enumerate() {
            let res: Vec<String> = v.0.iter().map(|r| r.to_string()).collect();
            let tuple = if self.order == 1 {
                format!("{}", i + 1)
            } else {
                format!("{} {}", i / self.n + 1, i % self.n + 1)
            };
            s += &format!("{} -> ({})\n", tuple, res.join(","));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| Error::Input("empty fare file".into()))?;
        let mut toks = header.split_whitespace();
        if toks.next() != Some("fare") {
            return Err(parse_err(hl, "fare file must start with `fare`"));
        }
        let mut fields = BTreeMap::new();
        for t in toks {
            let (k, v) = t.split_once('=').ok_or_else(|| parse_err(hl, format!("bad header field `{}`", t)))?;
            fields.insert(k, v);
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(|| parse_err(hl, format!("header lacks `{}`", k)));
        let order: usize = get("order")?.parse().map_err(|_| parse_err(hl, "bad order"))?;
        let kind: FareKind = get("kind")?.parse()?;
        let group: CoeffGroup = get("group")?.parse()?;
        let n: usize = get("n")?.parse().map_err(|_| parse_err(hl, "bad n"))?;
        kind.check_order(order)?;
        if n == 0 {
            return Err(parse_err(hl, "n must be positive"));
        }
        let size = n.pow(order as u32);
        let mut vals: Vec<Option<GroupElement>> = vec![None; size];
        for (ln, l) in lines {
            let (lhs, rhs) = l.split_once("->").ok_or_else(|| parse_err(ln, "expected `->`"))?;
            let tuple = lhs.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| parse_err(ln, format!("bad element `{}`", t))))
                .collect::<Result<Vec<_>, _>>()?;
            if tuple.len() != order || tuple.iter().any(|&x| x < 1 || x > n) {
                return Err(parse_err(ln, "tuple has wrong length or element out of range"));
            }
            let rhs = rhs.trim();
            let inner = rhs.strip_prefix('(').and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| parse_err(ln, "value must be parenthesized"))?;
            let res = inner.split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|_| parse_err(ln, format!("bad residue `{}`", t))))
                .collect::<Result<Vec<_>, _>>()?;
            let el = group.element(res).map_err(|e| parse_err(ln, e.to_string()))?;
            let idx = tuple.iter().fold(0, |acc, &x| acc * n + x - 1);
            if vals[idx].replace(el).is_some() {
                return Err(parse_err(ln, "tuple listed twice"));
            }
        }
        let values = vals.into_iter().enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::Input(format!("fare file lacks a value for tuple #{}", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        FareTable::new(order, kind, group, n, values)
    }
}

impl fmt::Display for FareTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

// --- axiom systems ---

struct Rows {
    ncols: usize,
    rows: Vec<Vec<i64>>,
}

impl Rows {
    fn eq(&mut self, lhs: &[usize], rhs: &[usize]) {
        let mut r = vec![0i64; self.ncols];
        for &i in lhs {
            r[i] += 1;
        }
        for &i in rhs {
            r[i] -= 1;
        }
        self.rows.push(r);
    }
}

/// The homogeneous integer system whose solutions are the fares.
///
/// One row per instance of conditions (i) over x, (ii) over (x, y) and
/// (iii) over (x, y, z), degenerate tuples included. Columns are φ(x)
/// (order 1) or φ(x, y) at index x·n + y. Coefficients accumulate when
/// terms collapse onto the same unknown.
///
/// The third condition is the all-positive third Reidemeister move: with
/// `cross(a, b)` the contribution of a positive crossing whose S-input is
/// (a, b),
///
/// ```text
///   cross(x,y) + cross(y,z) + cross(x▷y, z▷̄y)
///     = cross(x,z) + cross(y▷̄x, z▷̄x) + cross(x▷z, y▷z)
/// ```
pub fn axiom_system(b: &FiniteBiquandle, order: usize, kind: FareKind) -> Result<Vec<Vec<i64>>, Error> {
    kind.check_order(order)?;
    let n = b.size();
    let u = |x, y| b.under(x, y);
    let o = |x, y| b.over(x, y);
    let mut sys = Rows { ncols: n.pow(order as u32), rows: Vec::new() };

    if order == 1 {
        for x in 0..n {
            sys.eq(&[u(x, x), x], &[]);
        }
        for x in 0..n {
            for y in 0..n {
                sys.eq(&[x, y, u(x, y), o(y, x)], &[]);
            }
        }
        let cross = |a: usize, c: usize| [a, o(c, a)];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let l = [cross(x, y), cross(y, z), cross(u(x, y), o(z, y))].concat();
                    let r = [cross(x, z), cross(o(y, x), o(z, x)), cross(u(x, z), u(y, z))].concat();
                    sys.eq(&l, &r);
                }
            }
        }
    } else {
        let p = |x: usize, y: usize| x * n + y;
        for x in 0..n {
            let xx = u(x, x);
            match kind {
                FareKind::Complete => sys.eq(&[p(x, x), p(x, xx), p(xx, x), p(xx, xx)], &[]),
                _ => sys.eq(&[p(x, xx), p(xx, x)], &[]),
            }
        }
        let through = |a: usize, c: usize| vec![p(a, u(a, c)), p(o(c, a), c)];
        let crooked = |a: usize, c: usize| vec![p(a, c), p(o(c, a), u(a, c))];
        let cross = |a: usize, c: usize| -> Vec<usize> {
            match kind {
                FareKind::Through => through(a, c),
                FareKind::Crooked => crooked(a, c),
                _ => [through(a, c), crooked(a, c)].concat(),
            }
        };
        // a positive and a negative crossing sharing the pair (x, y)
        let neg = |a: usize, c: usize| -> Vec<usize> {
            let (s, t) = (u(a, c), o(c, a));
            let th = vec![p(s, a), p(c, t)];
            let ck = vec![p(c, a), p(s, t)];
            match kind {
                FareKind::Through => th,
                FareKind::Crooked => ck,
                _ => [ck, th].concat(),
            }
        };
        for x in 0..n {
            for y in 0..n {
                sys.eq(&cross(x, y), &neg(x, y));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let l = [cross(x, y), cross(y, z), cross(u(x, y), o(z, y))].concat();
                    let r = [cross(x, z), cross(o(y, x), o(z, x)), cross(u(x, z), u(y, z))].concat();
                    sys.eq(&l, &r);
                }
            }
        }
    }
    Ok(sys.rows)
}

fn dedup_rows(rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = rows.into_iter().filter(|r| r.iter().any(|&v| v != 0)).collect();
    rows.sort();
    rows.dedup();
    rows
}

/// Per-component solution kernels of the axiom system.
pub fn fare_kernels(b: &FiniteBiquandle, order: usize, kind: FareKind, g: &CoeffGroup) -> Result<Vec<KernelDescription>, Error> {
    let rows = dedup_rows(axiom_system(b, order, kind)?);
    Ok(zmodlinalg::kernels_over_group(&rows, b.size().pow(order as u32), g))
}

/// Failed equations of the system under direct substitution.
pub fn axiom_violations(b: &FiniteBiquandle, phi: &FareTable) -> Result<Vec<usize>, Error> {
    if phi.n != b.size() {
        return Err(Error::Input(format!("fare is on {} elements, biquandle on {}", phi.n, b.size())));
    }
    let rows = axiom_system(b, phi.order, phi.kind)?;
    let mut bad = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut acc = phi.group.zero();
        for (j, &c) in r.iter().enumerate() {
            if c != 0 {
                acc = phi.group.add(&acc, &phi.group.scale(c, &phi.values[j]));
            }
        }
        if !acc.is_zero() {
            bad.push(i);
        }
    }
    Ok(bad)
}

pub fn is_fare(b: &FiniteBiquandle, phi: &FareTable) -> Result<bool, Error> {
    Ok(axiom_violations(b, phi)?.is_empty())
}

/// Every fare of the given order and kind, each exactly once.
pub struct FareEnumeration {
    order: usize,
    kind: FareKind,
    group: CoeffGroup,
    n: usize,
    inner: zmodlinalg::GroupSolutions,
}

impl FareEnumeration {
    pub fn size(&self) -> u128 {
        self.inner.size()
    }
}

impl Iterator for FareEnumeration {
    type Item = FareTable;

    fn next(&mut self) -> Option<FareTable> {
        let values = self.inner.next()?;
        Some(FareTable { order: self.order, kind: self.kind, group: self.group.clone(), n: self.n, values })
    }
}

pub fn enumerate_fares(b: &FiniteBiquandle, order: usize, kind: FareKind, g: &CoeffGroup) -> Result<FareEnumeration, Error> {
    let kernels = fare_kernels(b, order, kind, g)?;
    Ok(FareEnumeration {
        order,
        kind,
        group: g.clone(),
        n: b.size(),
        inner: zmodlinalg::GroupSolutions::new(kernels),
    })
}

pub fn count_fares(b: &FiniteBiquandle, order: usize, kind: FareKind, g: &CoeffGroup) -> Result<u128, Error> {
    Ok(fare_kernels(b, order, kind, g)?.iter().map(|k| k.size()).product())
}

// --- evaluation ---

/// Signed sum of `phi` over the routes of the given order and kind,
/// regardless of `phi.kind`.
pub fn route_sum(d: &LinkDiagram, col: &Coloring, phi: &FareTable, kind: RouteKind) -> Result<GroupElement, Error> {
    let g = &phi.group;
    let mut acc = g.zero();
    for r in routes(d, phi.order, kind)? {
        let tuple: Vec<usize> = r.edges.iter().map(|&e| col[e]).collect();
        acc = g.add(&acc, &g.scale(r.sign(), phi.value(&tuple)));
    }
    Ok(acc)
}

/// Total fare of one coloring.
pub fn total_fare(d: &LinkDiagram, col: &Coloring, phi: &FareTable) -> Result<GroupElement, Error> {
    route_sum(d, col, phi, phi.kind.route_kind())
}

/// Multiset of values, kept as sorted (element, multiplicity) pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FareMultiset {
    pub entries: BTreeMap<GroupElement, usize>,
}

impl FareMultiset {
    pub fn from_values(vals: impl IntoIterator<Item = GroupElement>) -> Self {
        let mut entries = BTreeMap::new();
        for v in vals {
            *entries.entry(v).or_insert(0) += 1;
        }
        FareMultiset { entries }
    }

    pub fn cardinality(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, g: &GroupElement) -> usize {
        self.entries.get(g).copied().unwrap_or(0)
    }

    /// `{2×(1,1), 1×(0,0)}` style, ascending.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|(g, k)| format!("{}×{}", k, g)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for FareMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

pub fn fare_multiset(d: &LinkDiagram, b: &FiniteBiquandle, phi: &FareTable) -> Result<FareMultiset, Error> {
    let h = enumerate_colorings(d, b)?;
    let vals = h.colorings.iter().map(|c| total_fare(d, c, phi)).collect::<Result<Vec<_>, _>>()?;
    Ok(FareMultiset::from_values(vals))
}

/// Same as [`fare_multiset`], evaluating colorings on the rayon pool.
pub fn fare_multiset_par(d: &LinkDiagram, b: &FiniteBiquandle, phi: &FareTable) -> Result<FareMultiset, Error> {
    let h = enumerate_colorings(d, b)?;
    let vals = h.colorings.par_iter().map(|c| total_fare(d, c, phi)).collect::<Result<Vec<_>, _>>()?;
    Ok(FareMultiset::from_values(vals))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyForm {
    Additive,
    Multiplicative,
}

impl FromStr for PolyForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "additive" | "+" => Ok(PolyForm::Additive),
            "multiplicative" | "x" => Ok(PolyForm::Multiplicative),
            _ => Err(Error::Input(format!("unknown polynomial form `{}`", s))),
        }
    }
}

fn pow_suffix(k: usize) -> String {
    if k == 1 { String::new() } else { format!("^{}", k) }
}

/// Σ x^φ(f) or Π (x − φ(f)), terms ascending.
pub fn render_polynomial(m: &FareMultiset, form: PolyForm) -> Result<String, Error> {
    match form {
        PolyForm::Additive => {
            if m.entries.is_empty() {
                return Ok("0".into());
            }
            let terms: Vec<String> = m.entries.iter()
                .map(|(g, &k)| {
                    let coef = if k == 1 { String::new() } else { k.to_string() };
                    if g.is_zero() {
                        k.to_string()
                    } else if g.0.len() == 1 {
                        format!("{}x{}", coef, pow_suffix(g.0[0] as usize))
                    } else {
                        format!("{}x^{}", coef, g)
                    }
                })
                .collect();
            Ok(terms.join("+"))
        }
        PolyForm::Multiplicative => {
            if m.entries.keys().any(|g| g.0.len() != 1) {
                return Err(Error::Unsupported("multiplicative form needs a cyclic coefficient group".into()));
            }
            if m.entries.is_empty() {
                return Ok("1".into());
            }
            Ok(m.entries.iter()
                .map(|(g, &k)| {
                    if g.is_zero() {
                        format!("x{}", pow_suffix(k))
                    } else {
                        format!("(x-{}){}", g.0[0], pow_suffix(k))
                    }
                })
                .collect())
        }
    }
}

// --- decomposition ---

/// A through fare and a crooked fare summing to `phi`, if they exist.
///
/// Membership in the subgroup sum is decided per cyclic component by
/// reducing against the Howell basis of the stacked kernels.
pub fn decompose(b: &FiniteBiquandle, phi: &FareTable) -> Result<Option<(FareTable, FareTable)>, Error> {
    if phi.order != 2 || phi.kind != FareKind::Complete {
        return Err(Error::Input("decomposition applies to complete 2-fares".into()));
    }
    let g = &phi.group;
    let kt = fare_kernels(b, 2, FareKind::Through, g)?;
    let kc = fare_kernels(b, 2, FareKind::Crooked, g)?;
    let mut tv = vec![Vec::new(); phi.values.len()];
    let mut cv = vec![Vec::new(); phi.values.len()];
    for c in 0..g.moduli().len() {
        let target = phi.component(c);
        match zmodlinalg::split_in_sum(&target, &kt[c], &kc[c]) {
            None => return Ok(None),
            Some((a, bb)) => {
                for i in 0..target.len() {
                    tv[i].push(a[i]);
                    cv[i].push(bb[i]);
                }
            }
        }
    }
    let t = FareTable::new(2, FareKind::Through, g.clone(), phi.n, tv.into_iter().map(GroupElement).collect())?;
    let k = FareTable::new(2, FareKind::Crooked, g.clone(), phi.n, cv.into_iter().map(GroupElement).collect())?;
    Ok(Some((t, k)))
}

pub fn is_decomposable(b: &FiniteBiquandle, phi: &FareTable) -> Result<bool, Error> {
    if phi.order != 2 || phi.kind != FareKind::Complete {
        return Err(Error::Input("decomposition applies to complete 2-fares".into()));
    }
    let g = &phi.group;
    let kt = fare_kernels(b, 2, FareKind::Through, g)?;
    let kc = fare_kernels(b, 2, FareKind::Crooked, g)?;
    Ok((0..g.moduli().len()).all(|c| zmodlinalg::in_subgroup_sum(&phi.component(c), &kt[c], &kc[c])))
}

/// Sizes of the complete kernel and of through + crooked, per component.
pub fn decomposition_ranks(b: &FiniteBiquandle, g: &CoeffGroup) -> Result<Vec<(u128, u128)>, Error> {
    let kt = fare_kernels(b, 2, FareKind::Through, g)?;
    let kc = fare_kernels(b, 2, FareKind::Crooked, g)?;
    let kk = fare_kernels(b, 2, FareKind::Complete, g)?;
    Ok((0..g.moduli().len())
        .map(|c| (kk[c].size(), zmodlinalg::subgroup_sum(&kt[c], &kc[c]).size()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(v: &[(u64, usize)]) -> FareMultiset {
        FareMultiset { entries: v.iter().map(|&(g, k)| (GroupElement(vec![g]), k)).collect() }
    }

    #[test]
    fn polynomial_rendering() {
        let m = ms(&[(0, 4), (1, 6), (4, 6)]);
        assert_eq!(render_polynomial(&m, PolyForm::Multiplicative).unwrap(), "x^4(x-1)^6(x-4)^6");
        assert_eq!(render_polynomial(&ms(&[(0, 16)]), PolyForm::Additive).unwrap(), "16");
        assert_eq!(render_polynomial(&ms(&[(0, 2), (2, 2)]), PolyForm::Additive).unwrap(), "2+2x^2");
        assert_eq!(render_polynomial(&ms(&[(0, 1), (1, 1)]), PolyForm::Additive).unwrap(), "1+x");
        let k = FareMultiset::from_values(vec![GroupElement(vec![1, 1]), GroupElement(vec![0, 0])]);
        assert!(render_polynomial(&k, PolyForm::Multiplicative).is_err());
        assert_eq!(render_polynomial(&k, PolyForm::Additive).unwrap(), "1+x^(1,1)");
    }

    #[test]
    fn fare_file_round_trip() {
        let phi = FareTable::from_rows(FareKind::Complete, 5, &[vec![0, 4], vec![4, 2]]).unwrap();
        let back = FareTable::parse(&phi.to_text()).unwrap();
        assert_eq!(back, phi);
        let missing = "fare order=2 kind=complete group=5 n=2\n1 1 -> (0)\n";
        assert!(FareTable::parse(missing).is_err());
        let klein = "fare order=1 kind=plain group=2x2 n=3\n1 -> (1,0)\n2 -> (0,1)\n3 -> (1,0)\n";
        let k = FareTable::parse(klein).unwrap();
        assert_eq!(k.value(&[1]), &GroupElement(vec![0, 1]));
    }

    #[test]
    fn zero_fare_always_solves() {
        let b = FiniteBiquandle::from_fn(3, |x, _| x, |x, _| x);
        for (order, kind) in [(1, FareKind::Plain), (2, FareKind::Complete), (2, FareKind::Through), (2, FareKind::Crooked)] {
            let z = FareTable::zero(order, kind, CoeffGroup::cyclic(2), 3).unwrap();
            assert!(is_fare(&b, &z).unwrap());
            assert!(enumerate_fares(&b, order, kind, &CoeffGroup::cyclic(2)).unwrap().any(|f| f == z));
        }
        assert!(axiom_system(&b, 1, FareKind::Crooked).is_err());
    }

    #[test]
    fn equation_count() {
        let b = FiniteBiquandle::from_fn(3, |x, _| x, |x, _| x);
        assert_eq!(axiom_system(&b, 1, FareKind::Plain).unwrap().len(), 3 + 9 + 27);
        assert_eq!(axiom_system(&b, 2, FareKind::Through).unwrap().len(), 3 + 9 + 27);
    }
}
