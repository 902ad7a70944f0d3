//! Linear algebra over Z/mZ for composite m, and over finite direct sums
//! of cyclic groups.
//!
//! Kernels are parametrized through the Howell normal form, which gives a
//! duplicate-free enumeration even when m has zero divisors.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Finite abelian group Z_{m1} + ... + Z_{mk}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffGroup {
    moduli: Vec<u64>,
}

impl CoeffGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self, Error> {
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::Input(format!("modulus {} is below 2", m)));
        }
        Ok(CoeffGroup { moduli })
    }

    pub fn cyclic(m: u64) -> Self {
        CoeffGroup::new(vec![m]).expect("modulus >= 2")
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u128 {
        self.moduli.iter().map(|&m| m as u128).product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.moduli.len() == 1
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.moduli.len()])
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            self.moduli.iter().enumerate()
                .map(|(i, &m)| (a.0[i] + b.0[i]) % m)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            self.moduli.iter().enumerate()
                .map(|(i, &m)| (m - a.0[i] % m) % m)
                .collect(),
        )
    }

    /// `k * a` for a signed integer k.
    pub fn scale(&self, k: i64, a: &GroupElement) -> GroupElement {
        GroupElement(
            self.moduli.iter().enumerate()
                .map(|(i, &m)| mulmod(reduce(k, m), a.0[i], m))
                .collect(),
        )
    }

    pub fn element(&self, residues: Vec<u64>) -> Result<GroupElement, Error> {
        if residues.len() != self.moduli.len() {
            return Err(Error::Input(format!(
                "element has {} residues, group has {} components",
                residues.len(), self.moduli.len()
            )));
        }
        for (r, m) in residues.iter().zip(&self.moduli) {
            if r >= m {
                return Err(Error::Input(format!("residue {} out of range for Z_{}", r, m)));
            }
        }
        Ok(GroupElement(residues))
    }
}

impl fmt::Display for CoeffGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for CoeffGroup {
    type Err = Error;

    /// Parses `m1[xm2...]`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Input("empty group spec".into()));
        }
        let moduli = s.split('x')
            .map(|p| p.trim().parse::<u64>()
                .map_err(|_| Error::Input(format!("bad group spec `{}`", s))))
            .collect::<Result<Vec<_>, _>>()?;
        CoeffGroup::new(moduli)
    }
}

/// Residue sequence; component i lives in Z_{m_i}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<u64>);

impl GroupElement {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for GroupElement {
    /// Cyclic elements print bare (`3`), others as tuples (`(1,0)`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

pub(crate) fn reduce(k: i64, m: u64) -> u64 {
    k.rem_euclid(m as i64) as u64
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

// (g, s, t) with s*a + t*b = g over Z
fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = xgcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

// a unit u of Z_m with u*a = gcd(a, m)
fn normalizing_unit(a: u64, m: u64) -> u64 {
    let g = gcd(a, m);
    let (a1, m1) = (a / g, m / g);
    if m1 == 1 {
        return 1;
    }
    let (_, s, _) = xgcd(a1 as i128, m1 as i128);
    let u0 = s.rem_euclid(m1 as i128) as u64;
    let mut u = u0;
    while gcd(u, m) != 1 {
        u += m1;
    }
    u
}

/// Dense matrix with entries reduced mod m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrixModM {
    rows: usize,
    cols: usize,
    m: u64,
    data: Vec<u64>,
}

impl IntMatrixModM {
    pub fn zeros(rows: usize, cols: usize, m: u64) -> Self {
        assert!(m >= 2, "modulus must be at least 2");
        IntMatrixModM { rows, cols, m, data: vec![0; rows * cols] }
    }

    /// Builds from integer rows, reducing every entry mod m.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize, m: u64) -> Self {
        let mut a = IntMatrixModM::zeros(rows.len(), cols, m);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {} has wrong length", i);
            for (j, &v) in r.iter().enumerate() {
                a.data[i * cols + j] = reduce(v, m);
            }
        }
        a
    }

    pub fn identity(n: usize, m: u64) -> Self {
        let mut a = IntMatrixModM::zeros(n, n, m);
        for i in 0..n {
            a.data[i * n + i] = 1 % m;
        }
        a
    }

    pub fn rows(&self) -> usize { self.rows }
    pub fn cols(&self) -> usize { self.cols }
    pub fn modulus(&self) -> u64 { self.m }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn from_row_vecs(rs: Vec<Vec<u64>>, cols: usize, m: u64) -> Self {
        let rows = rs.len();
        IntMatrixModM { rows, cols, m, data: rs.into_iter().flatten().collect() }
    }

    /// M x mod m.
    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(x)
                    .fold(0u64, |acc, (&a, &b)| (acc + mulmod(a, b, self.m)) % self.m)
            })
            .collect()
    }
}

fn row_combine(p: &[u64], q: &[u64], s: u64, t: u64, m: u64) -> Vec<u64> {
    p.iter().zip(q)
        .map(|(&a, &b)| (mulmod(s, a, m) + mulmod(t, b, m)) % m)
        .collect()
}

fn row_scale(p: &[u64], s: u64, m: u64) -> Vec<u64> {
    p.iter().map(|&a| mulmod(s, a, m)).collect()
}

/// Howell normal form of the row span of `a`.
///
/// Rows are in echelon form, every pivot divides m, entries above a pivot
/// are reduced into `[0, pivot)`, and the rows of the result with zeros in
/// the first j columns span every element of the row span with that
/// property. Zero rows are dropped.
pub fn howell_form(a: &IntMatrixModM) -> IntMatrixModM {
    let m = a.m;
    let cols = a.cols;
    let mut pool: Vec<Vec<u64>> = (0..a.rows)
        .map(|i| a.row(i).to_vec())
        .filter(|r| r.iter().any(|&v| v != 0))
        .collect();
    let mut out: Vec<(usize, Vec<u64>)> = Vec::new();

    for j in 0..cols {
        let (mut hit, rest): (Vec<_>, Vec<_>) = pool.into_iter().partition(|r| r[j] != 0);
        pool = rest;
        if hit.is_empty() {
            continue;
        }
        let mut p = hit.swap_remove(0);
        for q in hit {
            // unimodular 2x2 step: p <- s p + t q, q <- (b/g) p - (a/g) q
            let (av, bv) = (p[j] as i128, q[j] as i128);
            let (g, s, t) = xgcd(av, bv);
            let s_ = s.rem_euclid(m as i128) as u64;
            let t_ = t.rem_euclid(m as i128) as u64;
            let np = row_combine(&p, &q, s_, t_, m);
            let c1 = ((bv / g).rem_euclid(m as i128)) as u64;
            let c2 = ((-av / g).rem_euclid(m as i128)) as u64;
            let nq = row_combine(&p, &q, c1, c2, m);
            debug_assert_eq!(nq[j], 0);
            p = np;
            if nq.iter().any(|&v| v != 0) {
                pool.push(nq);
            }
        }
        if p[j] == 0 {
            if p.iter().any(|&v| v != 0) {
                pool.push(p);
            }
            continue;
        }
        let u = normalizing_unit(p[j], m);
        p = row_scale(&p, u, m);
        let g = p[j];
        // annihilator row keeps the span's intersection with later columns
        let ann = row_scale(&p, m / g, m);
        if ann.iter().any(|&v| v != 0) {
            pool.push(ann);
        }
        out.push((j, p));
    }

    // reduce above pivots
    for i in 0..out.len() {
        let (j, g) = (out[i].0, out[i].1[out[i].0]);
        let piv = out[i].1.clone();
        for k in 0..i {
            let v = out[k].1[j];
            let q = v / g;
            if q != 0 {
                let neg = (m - q % m) % m;
                out[k].1 = row_combine(&out[k].1, &piv, 1, neg, m);
            }
        }
    }

    IntMatrixModM::from_row_vecs(out.into_iter().map(|(_, r)| r).collect(), cols, m)
}

fn pivot_col(r: &[u64]) -> Option<usize> {
    r.iter().position(|&v| v != 0)
}

/// Generators in Howell form together with their additive orders; every
/// kernel element is `sum c_i g_i` for exactly one choice `0 <= c_i < order_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDescription {
    pub modulus: u64,
    pub dim: usize,
    pub generators: Vec<Vec<u64>>,
    pub orders: Vec<u64>,
}

impl KernelDescription {
    pub fn size(&self) -> u128 {
        self.orders.iter().map(|&o| o as u128).product()
    }

    /// The trivial subgroup of Z_m^dim.
    pub fn trivial(dim: usize, modulus: u64) -> Self {
        KernelDescription { modulus, dim, generators: vec![], orders: vec![] }
    }

    pub fn iter(&self) -> KernelIter<'_> {
        enumerate_kernel(self)
    }

    /// Membership by reduction against the Howell basis.
    pub fn contains(&self, v: &[u64]) -> bool {
        reduces_to_zero(&self.generators, v, self.modulus)
    }
}

/// Kernel of x -> M x over Z_m.
///
/// Computed from the Howell form of `[M^T | I]`: its rows with zero left
/// block span exactly `{(0, x) : M x = 0}`.
pub fn kernel(a: &IntMatrixModM) -> KernelDescription {
    let (r, c, m) = (a.rows, a.cols, a.m);
    let w = r + c;
    let mut aug = IntMatrixModM::zeros(c, w, m);
    for j in 0..c {
        for i in 0..r {
            aug.data[j * w + i] = a.get(i, j);
        }
        aug.data[j * w + r + j] = 1 % m;
    }
    let h = howell_form(&aug);
    let mut gens = Vec::new();
    let mut orders = Vec::new();
    for i in 0..h.rows {
        let row = h.row(i);
        match pivot_col(row) {
            Some(p) if p >= r => {
                let g = row[p];
                gens.push(row[r..].to_vec());
                orders.push(m / g);
            }
            _ => {}
        }
    }
    KernelDescription { modulus: m, dim: c, generators: gens, orders }
}

/// Streams kernel elements in odometer order over the coefficients.
pub struct KernelIter<'a> {
    k: &'a KernelDescription,
    coeffs: Vec<u64>,
    cur: Vec<u64>,
    done: bool,
}

pub fn enumerate_kernel(k: &KernelDescription) -> KernelIter<'_> {
    KernelIter { k, coeffs: vec![0; k.generators.len()], cur: vec![0; k.dim], done: false }
}

impl<'a> Iterator for KernelIter<'a> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let m = self.k.modulus;
        // advance the odometer; the last generator turns fastest
        let mut i = self.coeffs.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            let g = &self.k.generators[i];
            self.coeffs[i] += 1;
            if self.coeffs[i] < self.k.orders[i] {
                for (c, &v) in self.cur.iter_mut().zip(g) {
                    *c = (*c + v) % m;
                }
                break;
            }
            // wrapped: order_i * g_i = 0, so the running sum is already back
            self.coeffs[i] = 0;
            for (c, &v) in self.cur.iter_mut().zip(g) {
                *c = (*c + v) % m;
            }
        }
        Some(out)
    }
}

/// Solves `M x = 0` over each cyclic factor of `g` and returns the
/// per-component kernels.
pub fn kernels_over_group(rows: &[Vec<i64>], cols: usize, g: &CoeffGroup) -> Vec<KernelDescription> {
    g.moduli().iter()
        .map(|&m| kernel(&IntMatrixModM::from_rows(rows, cols, m)))
        .collect()
}

/// Every solution `x in A^cols` of the integer system `M x = 0`, where A is
/// the direct sum `g`. Components are solved independently and recombined.
pub fn solve_over_group(
    rows: &[Vec<i64>],
    cols: usize,
    g: &CoeffGroup,
) -> GroupSolutions {
    GroupSolutions::new(kernels_over_group(rows, cols, g))
}

/// Product stream over per-component kernels.
pub struct GroupSolutions {
    kernels: Vec<KernelDescription>,
    elems: Vec<Vec<Vec<u64>>>,
    idx: Vec<usize>,
    done: bool,
}

impl GroupSolutions {
    pub fn new(kernels: Vec<KernelDescription>) -> Self {
        // materialize all but the first component; the first streams
        let elems: Vec<Vec<Vec<u64>>> = kernels.iter().map(|k| k.iter().collect()).collect();
        let n = kernels.len();
        GroupSolutions { kernels, elems, idx: vec![0; n], done: false }
    }

    pub fn size(&self) -> u128 {
        self.kernels.iter().map(|k| k.size()).product()
    }
}

impl Iterator for GroupSolutions {
    type Item = Vec<GroupElement>;

    fn next(&mut self) -> Option<Vec<GroupElement>> {
        if self.done {
            return None;
        }
        let dim = self.kernels.first().map(|k| k.dim).unwrap_or(0);
        let out = (0..dim)
            .map(|j| GroupElement(self.idx.iter().enumerate().map(|(c, &i)| self.elems[c][i][j]).collect()))
            .collect();
        let mut c = self.idx.len();
        loop {
            if c == 0 {
                self.done = true;
                break;
            }
            c -= 1;
            self.idx[c] += 1;
            if self.idx[c] < self.elems[c].len() {
                break;
            }
            self.idx[c] = 0;
        }
        Some(out)
    }
}

fn reduces_to_zero(basis: &[Vec<u64>], v: &[u64], m: u64) -> bool {
    let mut t: Vec<u64> = v.iter().map(|&x| x % m).collect();
    for row in basis {
        let Some(p) = pivot_col(row) else { continue };
        let g = row[p];
        if !t[p].is_multiple_of(g) {
            return false;
        }
        let q = t[p] / g;
        if q != 0 {
            let neg = (m - q % m) % m;
            t = row_combine(&t, row, 1, neg, m);
        }
    }
    t.iter().all(|&x| x == 0)
}

/// Whether `target = a + b` for some `a` in `k1`, `b` in `k2`.
///
/// Decided by putting the stacked generators in Howell form and reducing
/// the target, never by enumerating pairs.
pub fn in_subgroup_sum(target: &[u64], k1: &KernelDescription, k2: &KernelDescription) -> bool {
    assert_eq!(k1.modulus, k2.modulus, "moduli differ");
    assert_eq!(k1.dim, k2.dim, "dimensions differ");
    assert_eq!(target.len(), k1.dim, "target dimension differs");
    let h = subgroup_sum(k1, k2);
    h.contains(target)
}

/// The subgroup `k1 + k2`, in Howell form.
pub fn subgroup_sum(k1: &KernelDescription, k2: &KernelDescription) -> KernelDescription {
    let m = k1.modulus;
    let rows: Vec<Vec<u64>> = k1.generators.iter().chain(&k2.generators).cloned().collect();
    let stacked = IntMatrixModM::from_row_vecs(rows, k1.dim, m);
    let h = howell_form(&stacked);
    let generators: Vec<Vec<u64>> = (0..h.rows).map(|i| h.row(i).to_vec()).collect();
    let orders = generators.iter().map(|r| m / r[pivot_col(r).unwrap()]).collect();
    KernelDescription { modulus: m, dim: k1.dim, generators, orders }
}

/// Splits `target = a + b` with `a in k1`, `b in k2`, if possible.
///
/// Takes the Howell form of `[G1 | I; G2 | I]`, so every basis row carries
/// the generator combination producing it, then reduces the target on the
/// left block while accumulating those combinations.
pub fn split_in_sum(
    target: &[u64],
    k1: &KernelDescription,
    k2: &KernelDescription,
) -> Option<(Vec<u64>, Vec<u64>)> {
    let (m, dim) = (k1.modulus, k1.dim);
    let n1 = k1.generators.len();
    let gens: Vec<&Vec<u64>> = k1.generators.iter().chain(&k2.generators).collect();
    let ng = gens.len();
    let aug: Vec<Vec<u64>> = gens.iter().enumerate()
        .map(|(i, g)| {
            let mut r = g.to_vec();
            r.extend((0..ng).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let h = howell_form(&IntMatrixModM::from_row_vecs(aug, dim + ng, m));
    let mut t: Vec<u64> = target.iter().map(|&x| x % m).collect();
    t.extend(std::iter::repeat_n(0, ng));
    for i in 0..h.rows {
        let row = h.row(i);
        let Some(p) = pivot_col(row) else { continue };
        if p >= dim {
            continue;
        }
        if !t[p].is_multiple_of(row[p]) {
            return None;
        }
        let q = t[p] / row[p];
        if q != 0 {
            t = row_combine(&t, row, 1, (m - q % m) % m, m);
        }
    }
    if t[..dim].iter().any(|&x| x != 0) {
        return None;
    }
    // t = target - c·[G | I], so the coefficients are -t[dim..]
    let mut a = vec![0u64; dim];
    for i in 0..n1 {
        let c = (m - t[dim + i]) % m;
        for d in 0..dim {
            a[d] = (a[d] + mulmod(c, gens[i][d], m)) % m;
        }
    }
    let b: Vec<u64> = target.iter().zip(&a).map(|(&x, &y)| (x % m + m - y) % m).collect();
    debug_assert!(k1.contains(&a) && k2.contains(&b));
    Some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(a: &IntMatrixModM) -> Vec<Vec<u64>> {
        let (c, m) = (a.cols(), a.modulus());
        let total = (m as usize).pow(c as u32);
        let mut out = Vec::new();
        for mut k in 0..total {
            let mut x = vec![0u64; c];
            for v in x.iter_mut() {
                *v = (k % m as usize) as u64;
                k /= m as usize;
            }
            if a.apply(&x).iter().all(|&v| v == 0) {
                out.push(x);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn identity_is_own_form() {
        let i = IntMatrixModM::identity(2, 6);
        assert_eq!(howell_form(&i), i);
    }

    #[test]
    fn zero_matrix_has_empty_form() {
        let z = IntMatrixModM::zeros(2, 3, 5);
        assert_eq!(howell_form(&z).rows(), 0);
        let k = kernel(&IntMatrixModM::zeros(1, 2, 5));
        assert_eq!(k.size(), 25);
    }

    #[test]
    fn two_mod_six() {
        let a = IntMatrixModM::from_rows(&[vec![2]], 1, 6);
        let h = howell_form(&a);
        assert_eq!(h.row(0), &[2]);
        let k = kernel(&a);
        let mut els: Vec<_> = k.iter().collect();
        els.sort();
        assert_eq!(els, vec![vec![0], vec![3]]);
        assert_eq!(els, brute(&a));
    }

    #[test]
    fn empty_generators_yield_zero() {
        let k = KernelDescription::trivial(3, 5);
        assert_eq!(k.iter().collect::<Vec<_>>(), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn klein_zero_map() {
        let g: CoeffGroup = "2x2".parse().unwrap();
        let sols: Vec<_> = solve_over_group(&[vec![0]], 1, &g).collect();
        assert_eq!(sols.len(), 4);
    }

    #[test]
    fn subgroup_sum_membership() {
        // over Z_4: K1 = <(2,0,0)>, K2 = <(0,1,0)>
        let k1 = KernelDescription { modulus: 4, dim: 3, generators: vec![vec![2, 0, 0]], orders: vec![2] };
        let k2 = KernelDescription { modulus: 4, dim: 3, generators: vec![vec![0, 1, 0]], orders: vec![4] };
        assert!(in_subgroup_sum(&[0, 0, 0], &k1, &k2));
        assert!(in_subgroup_sum(&[2, 3, 0], &k1, &k2));
        assert!(!in_subgroup_sum(&[1, 0, 0], &k1, &k2));
        assert!(!in_subgroup_sum(&[0, 0, 1], &k1, &k2));
        let (a, b) = split_in_sum(&[2, 3, 0], &k1, &k2).unwrap();
        assert!(k1.contains(&a) && k2.contains(&b));
    }

    #[test]
    fn group_parse() {
        let g: CoeffGroup = "2x2".parse().unwrap();
        assert_eq!(g.moduli(), &[2, 2]);
        assert!("1".parse::<CoeffGroup>().is_err());
        assert!("x".parse::<CoeffGroup>().is_err());
        assert_eq!(g.to_string(), "2x2");
    }
}
