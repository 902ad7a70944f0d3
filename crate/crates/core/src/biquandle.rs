//! Finite biquandles given by operation tables.
//!
//! Elements are `0..n` internally and `1..=n` in every file, report and
//! display. `under(x, y)` is x ▷ y, `over(x, y)` is x ▷̄ y.

use std::fmt;

use crate::{parse_err, Error};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBiquandle {
    n: usize,
    under: Vec<usize>,
    over: Vec<usize>,
}

impl FiniteBiquandle {
    /// Builds from 1-indexed tables; row x lists x ▷ 1, ..., x ▷ n.
    pub fn from_tables(under: &[Vec<usize>], over: &[Vec<usize>]) -> Result<Self, Error> {
        let n = under.len();
        if n == 0 {
            return Err(Error::Input("biquandle must have at least one element".into()));
        }
        if over.len() != n {
            return Err(Error::Input(format!("under table has {} rows, over table {}", n, over.len())));
        }
        let mut flat = [Vec::with_capacity(n * n), Vec::with_capacity(n * n)];
        for (k, t) in [under, over].iter().enumerate() {
            for (x, row) in t.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Input(format!("row {} has {} entries, expected {}", x + 1, row.len(), n)));
                }
                for &v in row {
                    if v < 1 || v > n {
                        return Err(Error::Input(format!("entry {} out of range 1..{}", v, n)));
                    }
                    flat[k].push(v - 1);
                }
            }
        }
        let [under, over] = flat;
        Ok(FiniteBiquandle { n, under, over })
    }

    /// Builds from 0-indexed operation closures.
    pub fn from_fn(n: usize, under: impl Fn(usize, usize) -> usize, over: impl Fn(usize, usize) -> usize) -> Self {
        let mut u = Vec::with_capacity(n * n);
        let mut o = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                u.push(under(x, y));
                o.push(over(x, y));
            }
        }
        FiniteBiquandle { n, under: u, over: o }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn under(&self, x: usize, y: usize) -> usize {
        self.under[x * self.n + y]
    }

    #[inline]
    pub fn over(&self, x: usize, y: usize) -> usize {
        self.over[x * self.n + y]
    }

    /// S(x, y) = (y ▷̄ x, x ▷ y).
    pub fn s_map(&self, x: usize, y: usize) -> (usize, usize) {
        (self.over(y, x), self.under(x, y))
    }

    pub fn under_rows(&self) -> Vec<Vec<usize>> {
        self.under.chunks(self.n).map(|r| r.iter().map(|v| v + 1).collect()).collect()
    }

    pub fn over_rows(&self) -> Vec<Vec<usize>> {
        self.over.chunks(self.n).map(|r| r.iter().map(|v| v + 1).collect()).collect()
    }

    /// Parses the text format: `n`, n rows of the under table, a blank
    /// line, n rows of the over table.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let lines: Vec<(usize, &str)> = text.lines().enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.starts_with('#'))
            .collect();
        let mut it = lines.iter().skip_while(|(_, l)| l.is_empty());
        let &(ln, first) = it.next().ok_or_else(|| Error::Input("empty biquandle file".into()))?;
        let n: usize = first.parse().map_err(|_| parse_err(ln, format!("expected size, got `{}`", first)))?;
        if n == 0 {
            return Err(parse_err(ln, "size must be positive"));
        }
        let mut read_table = |name: &str| -> Result<Vec<Vec<usize>>, Error> {
            let mut rows = Vec::with_capacity(n);
            for &(ln, l) in it.by_ref() {
                if l.is_empty() {
                    if rows.is_empty() { continue; }
                    break;
                }
                let row = l.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| parse_err(ln, format!("bad entry `{}`", t))))
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != n {
                    return Err(parse_err(ln, format!("{} row has {} entries, expected {}", name, row.len(), n)));
                }
                if let Some(v) = row.iter().find(|&&v| v < 1 || v > n) {
                    return Err(parse_err(ln, format!("entry {} out of range 1..{}", v, n)));
                }
                rows.push(row);
                if rows.len() == n { break; }
            }
            if rows.len() != n {
                return Err(Error::Input(format!("{} table has {} rows, expected {}", name, rows.len(), n)));
            }
            Ok(rows)
        };
        let under = read_table("under")?;
        let over = read_table("over")?;
        if let Some(&(ln, l)) = it.find(|(_, l)| !l.is_empty()) {
            return Err(parse_err(ln, format!("trailing content `{}`", l)));
        }
        FiniteBiquandle::from_tables(&under, &over)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        let rows = |t: Vec<Vec<usize>>| -> String {
            t.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ") + "\n").collect()
        };
        s += &rows(self.under_rows());
        s += "\n";
        s += &rows(self.over_rows());
        s
    }
}

impl fmt::Display for FiniteBiquandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// x ▷ x = x ▷̄ x
    Diagonal,
    /// β_y = (· ▷ y) is a bijection
    BetaBijective,
    /// α_y = (· ▷̄ y) is a bijection
    AlphaBijective,
    /// S is a bijection on pairs
    SBijective,
    /// (x▷y)▷(z▷y) = (x▷z)▷(y▷̄z)
    Exchange1,
    /// (x▷y)▷̄(z▷y) = (x▷̄z)▷(y▷̄z)
    Exchange2,
    /// (x▷̄y)▷̄(z▷̄y) = (x▷̄z)▷̄(y▷z)
    Exchange3,
}

impl Axiom {
    pub fn label(&self) -> &'static str {
        match self {
            Axiom::Diagonal => "i",
            Axiom::BetaBijective => "ii.beta",
            Axiom::AlphaBijective => "ii.alpha",
            Axiom::SBijective => "ii.S",
            Axiom::Exchange1 => "iii.1",
            Axiom::Exchange2 => "iii.2",
            Axiom::Exchange3 => "iii.3",
        }
    }
}

/// One failed axiom instance; the witness is 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|v| v.to_string()).collect();
        write!(f, "axiom {} fails at ({})", self.axiom.label(), w.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every axiom instance and collects all violations.
pub fn verify(b: &FiniteBiquandle) -> AxiomReport {
    let n = b.n;
    let mut v = Vec::new();
    let mut bad = |axiom, w: &[usize]| v.push(Violation { axiom, witness: w.iter().map(|x| x + 1).collect() });

    for x in 0..n {
        if b.under(x, x) != b.over(x, x) {
            bad(Axiom::Diagonal, &[x]);
        }
    }
    for y in 0..n {
        for (axiom, op) in [(Axiom::BetaBijective, 0), (Axiom::AlphaBijective, 1)] {
            let mut first: Vec<Option<usize>> = vec![None; n];
            for x in 0..n {
                let img = if op == 0 { b.under(x, y) } else { b.over(x, y) };
                match first[img] {
                    Some(x0) => bad(axiom, &[y, x0, x]),
                    None => first[img] = Some(x),
                }
            }
        }
    }
    let mut seen: Vec<Option<(usize, usize)>> = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            let (a, c) = b.s_map(x, y);
            match seen[a * n + c] {
                Some((x0, y0)) => bad(Axiom::SBijective, &[x0, y0, x, y]),
                None => seen[a * n + c] = Some((x, y)),
            }
        }
    }
    let (u, o) = (|p, q| b.under(p, q), |p, q| b.over(p, q));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)) {
                    bad(Axiom::Exchange1, &[x, y, z]);
                }
                if o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)) {
                    bad(Axiom::Exchange2, &[x, y, z]);
                }
                if o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)) {
                    bad(Axiom::Exchange3, &[x, y, z]);
                }
            }
        }
    }
    AxiomReport { violations: v }
}

pub fn is_quandle(b: &FiniteBiquandle) -> bool {
    (0..b.n).all(|x| (0..b.n).all(|y| b.over(x, y) == x))
}

/// Inverses of β_y, α_y and S, 0-indexed.
#[derive(Clone, Debug)]
pub struct InverseMaps {
    n: usize,
    inv_beta: Vec<usize>,
    inv_alpha: Vec<usize>,
    inv_s: Vec<(usize, usize)>,
}

impl InverseMaps {
    /// The x with x ▷ y = w.
    pub fn inv_beta(&self, y: usize, w: usize) -> usize {
        self.inv_beta[y * self.n + w]
    }

    /// The x with x ▷̄ y = w.
    pub fn inv_alpha(&self, y: usize, w: usize) -> usize {
        self.inv_alpha[y * self.n + w]
    }

    /// The (x, y) with S(x, y) = (a, c).
    pub fn inv_s(&self, a: usize, c: usize) -> (usize, usize) {
        self.inv_s[a * self.n + c]
    }
}

pub fn inverse_maps(b: &FiniteBiquandle) -> Result<InverseMaps, Error> {
    let m = partial_inverse_maps(b);
    let none = usize::MAX;
    if m.inv_beta.contains(&none) || m.inv_alpha.contains(&none) || m.inv_s.contains(&(none, none)) {
        return Err(Error::Semantic("operation maps are not invertible".into()));
    }
    Ok(m)
}

/// Like [`inverse_maps`], for arbitrary tables: an entry is `usize::MAX`
/// unless its preimage exists and is unique.
pub fn partial_inverse_maps(b: &FiniteBiquandle) -> InverseMaps {
    let n = b.n;
    let none = usize::MAX;
    let mut ib = vec![none; n * n];
    let mut ia = vec![none; n * n];
    let mut is = vec![(none, none); n * n];
    let mut hits = vec![[0u32; 3]; n * n];
    for y in 0..n {
        for x in 0..n {
            ib[y * n + b.under(x, y)] = x;
            hits[y * n + b.under(x, y)][0] += 1;
            ia[y * n + b.over(x, y)] = x;
            hits[y * n + b.over(x, y)][1] += 1;
            let (a, c) = b.s_map(x, y);
            is[a * n + c] = (x, y);
            hits[a * n + c][2] += 1;
        }
    }
    for (i, h) in hits.iter().enumerate() {
        if h[0] != 1 {
            ib[i] = none;
        }
        if h[1] != 1 {
            ia[i] = none;
        }
        if h[2] != 1 {
            is[i] = (none, none);
        }
    }
    InverseMaps { n, inv_beta: ib, inv_alpha: ia, inv_s: is }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// x ▷ y = tx + (s−t)y, x ▷̄ y = sx on Z_m.
pub fn alexander_biquandle(m: u64, t: u64, s: u64) -> Result<FiniteBiquandle, Error> {
    if m < 2 {
        return Err(Error::Input("modulus must be at least 2".into()));
    }
    let (t, s) = (t % m, s % m);
    if gcd(t, m) != 1 || gcd(s, m) != 1 {
        return Err(Error::Input(format!("t={} and s={} must both be units mod {}", t, s, m)));
    }
    let st = (s + m - t) % m;
    Ok(FiniteBiquandle::from_fn(
        m as usize,
        |x, y| ((t * x as u64 + st * y as u64) % m) as usize,
        |x, _| ((s * x as u64) % m) as usize,
    ))
}

/// Multiplication table of a finite group, 0-indexed.
#[derive(Clone, Debug)]
pub struct GroupTable {
    n: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Input("group table must be square with entries in range".into()));
        }
        let mul: Vec<usize> = table.into_iter().flatten().collect();
        let m = |a: usize, b: usize| mul[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::Input("group table is not associative".into()));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::Input("group table has no identity".into()))?;
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| m(a, b) == identity)
                .ok_or_else(|| Error::Input("group table has a non-invertible element".into()))?;
            inv.push(b);
        }
        Ok(GroupTable { n, mul, identity, inv })
    }

    pub fn cyclic(n: usize) -> Self {
        GroupTable::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
            .expect("cyclic group")
    }

    /// The symmetric group on k letters, elements in lexicographic order.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
        // lexicographic successor
        loop {
            let mut p = perms.last().unwrap().clone();
            let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else { break };
            let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            perms.push(p);
        }
        let idx = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table = perms.iter()
            .map(|a| perms.iter().map(|b| idx(&(0..k).map(|i| a[b[i]]).collect())).collect())
            .collect();
        GroupTable::new(table).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }
}

/// x ▷ y = y^{-k} x y^k, x ▷̄ y = x.
pub fn conjugation_biquandle(g: &GroupTable, k: i64) -> FiniteBiquandle {
    FiniteBiquandle::from_fn(
        g.order(),
        |x, y| g.mul(g.mul(g.pow(y, -k), x), g.pow(y, k)),
        |x, _| x,
    )
}

/// x ▷ y = y^{-1} x y^{-1}, x ▷̄ y = x^{-1}.
pub fn wada_biquandle(g: &GroupTable) -> FiniteBiquandle {
    FiniteBiquandle::from_fn(
        g.order(),
        |x, y| g.mul(g.mul(g.inv(y), x), g.inv(y)),
        |x, _| g.inv(x),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_example() -> FiniteBiquandle {
        FiniteBiquandle::from_tables(
            &[vec![2, 2, 2], vec![1, 1, 1], vec![3, 3, 3]],
            &[vec![2, 3, 1], vec![3, 1, 2], vec![1, 2, 3]],
        ).unwrap()
    }

    fn trivial(n: usize) -> FiniteBiquandle {
        FiniteBiquandle::from_fn(n, |x, _| x, |x, _| x)
    }

    #[test]
    fn trefoil_example_is_valid() {
        let b = trefoil_example();
        assert!(verify(&b).valid(), "{:?}", verify(&b));
        assert!(!is_quandle(&b));
    }

    #[test]
    fn trivial_is_valid_quandle() {
        let b = trivial(3);
        assert!(verify(&b).valid());
        assert!(is_quandle(&b));
        let inv = inverse_maps(&b).unwrap();
        for y in 0..3 {
            for x in 0..3 {
                assert_eq!(inv.inv_beta(y, x), x);
                assert_eq!(inv.inv_alpha(y, x), x);
            }
        }
    }

    #[test]
    fn broken_column_reports_beta() {
        let mut u = trefoil_example().under_rows();
        u[1][0] = 2; // column 1 now hits 2 twice
        let b = FiniteBiquandle::from_tables(&u, &trefoil_example().over_rows()).unwrap();
        let r = verify(&b);
        assert!(!r.valid());
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::BetaBijective));
    }

    #[test]
    fn inverse_beta_of_transposition() {
        let b = trefoil_example();
        let inv = inverse_maps(&b).unwrap();
        // β_1 swaps 1 and 2
        assert_eq!(inv.inv_beta(0, 0), 1);
        assert_eq!(inv.inv_beta(0, 1), 0);
        assert_eq!(inv.inv_beta(0, 2), 2);
        for a in 0..3 {
            for c in 0..3 {
                let (x, y) = inv.inv_s(a, c);
                assert_eq!(b.s_map(x, y), (a, c));
            }
        }
    }

    #[test]
    fn alexander_cases() {
        let b = alexander_biquandle(2, 1, 1).unwrap();
        assert!(verify(&b).valid());
        assert!((0..2).all(|x| (0..2).all(|y| b.under(x, y) == x)));
        assert!(verify(&alexander_biquandle(3, 2, 1).unwrap()).valid());
        assert!(alexander_biquandle(4, 3, 2).is_err());
        assert!(verify(&alexander_biquandle(4, 3, 3).unwrap()).valid());
    }

    #[test]
    fn group_constructions() {
        let z2 = conjugation_biquandle(&GroupTable::cyclic(2), 1);
        assert_eq!(z2, trivial(2));
        let s3 = conjugation_biquandle(&GroupTable::symmetric(3), 1);
        assert_eq!(s3.size(), 6);
        assert!(verify(&s3).valid());
        assert!(is_quandle(&s3));
    }

    #[test]
    fn text_round_trip() {
        let b = trefoil_example();
        assert_eq!(FiniteBiquandle::parse(&b.to_text()).unwrap(), b);
        assert!(FiniteBiquandle::parse("2\n1 2\n2 1\n\n1 1\n2 3\n").is_err());
        assert!(FiniteBiquandle::parse("3\n1 2\n2 1\n\n1 1\n2 2\n").is_err());
    }
}
