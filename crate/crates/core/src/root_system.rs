//! Crystallographic root systems in the simple-root basis.
//!
//! Simple roots are numbered as in Bourbaki. A [`RootSystem`] can also be
//! built from an arbitrary Cartan matrix, which is how semisimple
//! subsystems (Levi factors, reductions) are represented.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exact rational scalar used for weights.
pub type Q = Ratio<i64>;

/// Root coordinates in the simple-root basis.
pub type Root = Vec<i64>;

/// Cartan–Killing family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    /// Parses a single family letter, case-insensitively.
    pub fn parse(s: &str) -> Result<Family> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => return Err(Error::Invalid(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A simple Lie type such as `E6` or `C5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    /// Validates the rank against the family.
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    /// Number of positive roots from the classical table.
    pub fn positive_root_count(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
            Family::E => match r {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![Q::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Weight {
        Weight(v.iter().map(|&x| Q::from_integer(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|x| *x >= Q::zero())
    }
}

impl fmt::Display for Weight {
    /// Formats as a combination of fundamental weights, e.g. `-4w2+4w5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if *c < Q::zero() {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let a = c.abs();
            let coef = if a.is_one() {
                String::new()
            } else {
                a.to_string()
            };
            out.push_str(&format!("{sign}{coef}w{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// A root system with a fixed positive system.
///
/// Positive roots are sorted by height, and within a height by decreasing
/// coordinate vector, so index `i < rank` is the simple root `σ_{i+1}`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: Option<LieType>,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    cartan_inv: Vec<Vec<Q>>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    sums: Vec<(usize, usize, usize)>,
    reflections: Vec<Vec<usize>>,
}

impl RootSystem {
    /// Builds the root system of a simple type with Bourbaki numbering.
    pub fn new(t: LieType) -> Result<RootSystem> {
        let t = LieType::new(t.family, t.rank)?;
        let r = t.rank;
        let mut d = vec![1i64; r];
        let mut bonds: Vec<(usize, usize)> = (1..r).map(|i| (i - 1, i)).collect();
        match t.family {
            Family::A => {}
            Family::B => d[..r - 1].iter_mut().for_each(|x| *x = 2),
            Family::C => d[r - 1] = 2,
            Family::D => {
                bonds.pop();
                bonds.push((r - 3, r - 1));
            }
            Family::E => {
                bonds = vec![(0, 2), (1, 3)];
                bonds.extend((2..r - 1).map(|i| (i, i + 1)));
            }
            Family::F => d = vec![2, 2, 1, 1],
            Family::G => d = vec![1, 3],
        }
        let mut form = vec![vec![0i64; r]; r];
        for i in 0..r {
            form[i][i] = 2 * d[i];
        }
        for &(i, j) in &bonds {
            let b = -d[i].max(d[j]);
            form[i][j] = b;
            form[j][i] = b;
        }
        let cartan = (0..r)
            .map(|i| (0..r).map(|j| form[i][j] / d[j]).collect())
            .collect();
        let mut rs = RootSystem::from_cartan(cartan)?;
        rs.lie_type = Some(t);
        Ok(rs)
    }

    /// Convenience constructor from a family letter and rank.
    pub fn of(family: Family, rank: usize) -> Result<RootSystem> {
        RootSystem::new(LieType::new(family, rank)?)
    }

    /// Builds the root system of a (possibly non-simple) Cartan matrix.
    ///
    /// Uses the convention `A[i][j] = <σ_i, σ_j^∨>`, so row `i` is `σ_i`
    /// in fundamental-weight coordinates.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<RootSystem> {
        let r = cartan.len();
        if r == 0 || cartan.iter().any(|row| row.len() != r) {
            return Err(Error::Invalid(
                "Cartan matrix must be square and nonempty".into(),
            ));
        }
        let sym = symmetrizer(&cartan)?;
        let cartan_inv =
            invert(&cartan).ok_or_else(|| Error::Invalid("Cartan matrix is singular".into()))?;

        // Grow positive roots height by height using root strings.
        let mut positive: Vec<Root> = (0..r)
            .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut index: HashMap<Root, usize> = positive
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut layer: Vec<Root> = positive.clone();
        while !layer.is_empty() {
            let mut next: Vec<Root> = Vec::new();
            for beta in &layer {
                for i in 0..r {
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if index.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !index.contains_key(&up) && !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort_by(|a, b| b.cmp(a));
            for v in &next {
                index.insert(v.clone(), positive.len());
                positive.push(v.clone());
            }
            layer = next;
        }
        if positive.len() > 128 {
            return Err(Error::Invalid("more than 128 positive roots".into()));
        }

        let n = positive.len();
        let mut sums = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let s: Root = positive[a]
                    .iter()
                    .zip(&positive[b])
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(&c) = index.get(&s) {
                    sums.push((a, b, c));
                }
            }
        }

        let mut rs = RootSystem {
            lie_type: None,
            cartan,
            sym,
            cartan_inv,
            positive,
            index,
            sums,
            reflections: Vec::new(),
        };
        rs.reflections = (0..r)
            .map(|i| {
                (0..2 * n)
                    .map(|id| {
                        let v = rs.root_vec(id);
                        let c = rs.coroot_pairing(&v, i);
                        let mut out = v;
                        out[i] -= c;
                        rs.root_id(&out).expect("reflection preserves roots")
                    })
                    .collect()
            })
            .collect();
        Ok(rs)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// The simple type, when the system is irreducible and was built by type.
    pub fn lie_type(&self) -> Option<LieType> {
        self.lie_type
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Half the squared length of each simple root (short roots give 1).
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Dense index of a positive root.
    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Signed root id: `0..N` positive roots, `N..2N` their negatives.
    pub fn root_id(&self, v: &[i64]) -> Option<usize> {
        if let Some(&i) = self.index.get(v) {
            return Some(i);
        }
        let neg: Root = v.iter().map(|x| -x).collect();
        self.index.get(&neg).map(|&i| i + self.positive.len())
    }

    /// Coordinates of a signed root id.
    pub fn root_vec(&self, id: usize) -> Root {
        let n = self.positive.len();
        if id < n {
            self.positive[id].clone()
        } else {
            self.positive[id - n].iter().map(|x| -x).collect()
        }
    }

    /// Signed id of the negative of a root.
    pub fn negate_id(&self, id: usize) -> usize {
        let n = self.positive.len();
        if id < n {
            id + n
        } else {
            id - n
        }
    }

    /// True iff `±v` is a positive root.
    pub fn is_root(&self, v: &[i64]) -> bool {
        v.len() == self.rank() && self.root_id(v).is_some()
    }

    /// All triples `(a, b, c)` of positive indices with `a < b` and
    /// `root a + root b = root c`.
    pub fn positive_sums(&self) -> &[(usize, usize, usize)] {
        &self.sums
    }

    /// True iff the positive-root set is closed under root addition.
    pub fn is_closed(&self, s: RootSet) -> bool {
        self.sums
            .iter()
            .all(|&(a, b, c)| !(s.contains(a) && s.contains(b)) || s.contains(c))
    }

    /// True iff both `s` and its complement in Δ⁺ are closed, i.e. `s` is
    /// the inversion set of a Weyl group element.
    pub fn is_inversion_set(&self, s: RootSet) -> bool {
        self.is_closed(s) && self.is_closed(self.all_positive().minus(s))
    }

    pub fn all_positive(&self) -> RootSet {
        RootSet::full(self.positive.len())
    }

    /// `<v, σ_i^∨>` for `v` in root coordinates.
    pub fn coroot_pairing(&self, v: &[i64], i: usize) -> i64 {
        v.iter().zip(&self.cartan).map(|(x, row)| x * row[i]).sum()
    }

    /// Symmetric invariant form on root coordinates, with `(σ_i, σ_i) = 2 d_i`.
    pub fn form(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (&ui, row) in u.iter().zip(&self.cartan) {
            if ui == 0 {
                continue;
            }
            for ((&vj, &a), &d) in v.iter().zip(row).zip(&self.sym) {
                s += ui * vj * a * d;
            }
        }
        s
    }

    /// Permutation of signed root ids induced by the simple reflection `r_i`.
    pub fn reflection_table(&self, i: usize) -> &[usize] {
        &self.reflections[i]
    }

    /// Root coordinates to fundamental-weight coordinates.
    pub fn weight_of_root(&self, v: &[i64]) -> Weight {
        let r = self.rank();
        Weight(
            (0..r)
                .map(|j| Q::from_integer((0..r).map(|i| v[i] * self.cartan[i][j]).sum()))
                .collect(),
        )
    }

    /// Rational root coordinates to fundamental-weight coordinates.
    pub fn weight_of_root_q(&self, v: &[Q]) -> Weight {
        let r = self.rank();
        Weight(
            (0..r)
                .map(|j| (0..r).map(|i| v[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    /// Fundamental-weight coordinates to (rational) root coordinates.
    pub fn root_of_weight(&self, w: &Weight) -> Vec<Q> {
        let r = self.rank();
        (0..r)
            .map(|j| (0..r).map(|i| w.0[i] * self.cartan_inv[i][j]).sum())
            .collect()
    }

    /// `ϱ`, the sum of the fundamental weights.
    pub fn rho(&self) -> Weight {
        Weight(vec![Q::one(); self.rank()])
    }

    /// The `i`-th fundamental weight (0-based).
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut w = Weight::zero(self.rank());
        w.0[i] = Q::one();
        w
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        (0..self.rank())
            .map(|i| self.fundamental_weight(i))
            .collect()
    }

    /// Invariant form on weights in fundamental coordinates.
    pub fn weight_form(&self, a: &Weight, b: &Weight) -> Q {
        let ra = self.root_of_weight(a);
        let r = self.rank();
        // (x, ω_j) = x_j d_j for x in root coordinates.
        (0..r).map(|j| ra[j] * b.0[j] * self.sym[j]).sum()
    }

    /// Simple reflection on a weight in fundamental coordinates.
    pub fn reflect_weight(&self, i: usize, w: &mut Weight) {
        let c = w.0[i];
        if c.is_zero() {
            return;
        }
        for j in 0..self.rank() {
            w.0[j] -= c * self.cartan[i][j];
        }
    }

    /// Height of a root (sum of coordinates).
    pub fn height(v: &[i64]) -> i64 {
        v.iter().sum()
    }

    /// The highest root, i.e. the last positive root.
    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("nonempty")
    }

    /// Connected components of the Dynkin diagram, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(&self.cartan, &(0..self.rank()).collect::<Vec<_>>())
    }

    /// The root system on a subset of simple roots (Cartan submatrix).
    pub fn subsystem(&self, nodes: &[usize]) -> Result<RootSystem> {
        let cartan = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        let mut sub = RootSystem::from_cartan(cartan)?;
        if sub.components().len() == 1 {
            sub.lie_type = crate::dynkin::identify(&sub.cartan, &sub.sym).map(|(t, _)| t);
        }
        Ok(sub)
    }
}

/// Connected components of the Dynkin graph restricted to `nodes`.
pub(crate) fn components_of(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; cartan.len()];
    let inset: Vec<bool> = (0..cartan.len()).map(|i| nodes.contains(&i)).collect();
    let mut out = Vec::new();
    for &s in nodes {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for v in 0..cartan.len() {
                if inset[v] && !seen[v] && cartan[u][v] != 0 {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let r = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; r];
    for s in 0..r {
        if d[s].is_some() {
            continue;
        }
        d[s] = Some(Q::one());
        let mut stack = vec![s];
        let mut comp = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..r {
                if v == u || cartan[u][v] == 0 {
                    continue;
                }
                if cartan[v][u] == 0 {
                    return Err(Error::Invalid("Cartan matrix is not symmetrizable".into()));
                }
                // A[u][v] d_v = A[v][u] d_u
                let dv = d[u].unwrap() * Q::new(cartan[v][u], cartan[u][v]);
                match d[v] {
                    None => {
                        d[v] = Some(dv);
                        stack.push(v);
                        comp.push(v);
                    }
                    Some(x) if x != dv => {
                        return Err(Error::Invalid("Cartan matrix is not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
        let min = comp.iter().map(|&i| d[i].unwrap()).min().unwrap();
        let scaled: Vec<Q> = comp.iter().map(|&i| d[i].unwrap() / min).collect();
        let lcm = scaled
            .iter()
            .fold(1i64, |acc, q| num_integer::lcm(acc, *q.denom()));
        for (k, &i) in comp.iter().enumerate() {
            d[i] = Some(scaled[k] * lcm);
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// A subset of positive roots, stored as a bitset over dense indices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn full(n: usize) -> RootSet {
        if n >= 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> RootSet {
        RootSet(1u128 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersect(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn minus(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = RootSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Formats a root as a sum of simple roots, e.g. `s3+s4+s5` or `-(2s3+s5)`.
pub fn format_root(v: &[i64]) -> String {
    let neg = v.iter().any(|&x| x < 0);
    let mut parts = Vec::new();
    for (i, &c) in v.iter().enumerate() {
        let c = c.abs();
        if c == 1 {
            parts.push(format!("s{}", i + 1));
        } else if c > 1 {
            parts.push(format!("{c}s{}", i + 1));
        }
    }
    let body = parts.join("+");
    if neg {
        if parts.len() > 1 {
            format!("-({body})")
        } else {
            format!("-{body}")
        }
    } else {
        body
    }
}
