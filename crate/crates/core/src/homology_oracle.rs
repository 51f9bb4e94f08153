//! Brute-force Lie algebra homology.
//!
//! Builds integral Chevalley structure constants, writes the boundary map
//! on `Λ g_−` explicitly and computes exact ranks. The results are compared
//! against the dimensions predicted from `W^φ` and the Weyl dimension
//! formula, which exercises the combinatorial modules end to end.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed, Zero};

use crate::grading::{grade_roots, GradingElement};
use crate::hodge_rep::{dominant_conjugate, weyl_dim};
use crate::root_system::{RootSet, RootSystem, Weight, Q};
use crate::weyl::{self, WeylElement};
use crate::{Error, Result};

const MAX_CHEVALLEY_RANK: usize = 6;
const MAX_HOMOLOGY_ROOTS: usize = 30;
const MAX_HOMOLOGY_DEGREE: usize = 4;
const MAX_IVHS_ROOTS: usize = 24;
const MAX_IVHS_DEGREE: usize = 6;

/// Sparse element of `g`: basis index to coefficient. Indices below `2N`
/// are root vectors by signed root id, the rest are `h_1, …, h_r`.
pub type Element = BTreeMap<usize, i64>;

/// Integral structure constants of a Chevalley basis.
#[derive(Debug, Clone)]
pub struct ChevalleyBasis {
    rank: usize,
    np: usize,
    roots: Vec<Vec<i64>>,
    ids: HashMap<Vec<i64>, usize>,
    constants: HashMap<(usize, usize), i64>,
    coroots: Vec<Vec<i64>>,
    pairings: Vec<Vec<i64>>,
}

impl ChevalleyBasis {
    pub fn dim(&self) -> usize {
        2 * self.np + self.rank
    }

    /// Basis index of `h_i`.
    pub fn cartan_index(&self, i: usize) -> usize {
        2 * self.np + i
    }

    /// `N_{a,b}` with `[x_a, x_b] = N_{a,b} x_{a+b}`; zero when `a + b` is
    /// not a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.constants.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Coefficients of `h_a = [x_a, x_{−a}]` on `h_1, …, h_r`.
    pub fn coroot(&self, a: usize) -> &[i64] {
        &self.coroots[a]
    }

    /// Bracket of two basis vectors.
    pub fn bracket_basis(&self, x: usize, y: usize) -> Element {
        let n = 2 * self.np;
        let mut out = Element::new();
        match (x < n, y < n) {
            (true, true) => {
                if self.neg(x) == y {
                    for (j, &c) in self.coroots[x].iter().enumerate() {
                        if c != 0 {
                            out.insert(n + j, c);
                        }
                    }
                } else if let Some(&c) = self.constants.get(&(x, y)) {
                    out.insert(self.sum(x, y).expect("constant implies a root"), c);
                }
            }
            (false, true) => {
                let c = self.pairings[y][x - n];
                if c != 0 {
                    out.insert(y, c);
                }
            }
            (true, false) => {
                let c = self.pairings[x][y - n];
                if c != 0 {
                    out.insert(x, -c);
                }
            }
            (false, false) => {}
        }
        out
    }

    /// Bilinear extension of [`Self::bracket_basis`].
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (&i, &a) in x {
            for (&j, &b) in y {
                for (k, c) in self.bracket_basis(i, j) {
                    *out.entry(k).or_insert(0) += a * b * c;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn neg(&self, a: usize) -> usize {
        if a < self.np {
            a + self.np
        } else {
            a - self.np
        }
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let v: Vec<i64> = self.roots[a]
            .iter()
            .zip(&self.roots[b])
            .map(|(x, y)| x + y)
            .collect();
        self.ids.get(&v).copied()
    }
}

/// Structure constants by the extraspecial-pair method: roots are ordered
/// by index, each extraspecial pair gets `N = p + 1`, and every other
/// constant follows from the standard three- and four-term relations.
pub fn build_chevalley(rs: &RootSystem) -> Result<ChevalleyBasis> {
    let r = rs.rank();
    if r > MAX_CHEVALLEY_RANK {
        return Err(Error::Guard(format!(
            "Chevalley basis limited to rank {MAX_CHEVALLEY_RANK}, got {r}"
        )));
    }
    let np = rs.num_positive();
    let roots: Vec<Vec<i64>> = (0..2 * np).map(|id| rs.root_vec(id)).collect();
    let ids: HashMap<Vec<i64>, usize> = roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let norm: Vec<i64> = roots.iter().map(|v| rs.form(v, v)).collect();

    let mut by_sum: Vec<Vec<(usize, usize)>> = vec![Vec::new(); np];
    for &(a, b, c) in rs.positive_sums() {
        by_sum[c].push((a.min(b), a.max(b)));
    }
    let mut pos: HashMap<(usize, usize), Q> = HashMap::new();
    let sum = |a: usize, b: usize| -> Option<usize> {
        let v: Vec<i64> = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
        ids.get(&v).copied()
    };
    let neg = |a: usize| if a < np { a + np } else { a - np };
    let ctx = Ctx {
        np,
        norm: &norm,
        sum: &sum,
        neg: &neg,
    };

    for xi in 0..np {
        let pairs = &mut by_sum[xi];
        if pairs.is_empty() {
            continue;
        }
        pairs.sort();
        let (r1, s1) = pairs[0];
        let mut p = 0;
        let mut cur = s1;
        while let Some(next) = sum(cur, neg(r1)) {
            p += 1;
            cur = next;
        }
        let n1 = Q::from_integer(p + 1);
        pos.insert((r1, s1), n1);
        for &(rr, ss) in &pairs[1..] {
            let mut t = Q::zero();
            if let Some(d) = sum(ss, neg(r1)) {
                t += ctx.n(&pos, ss, neg(r1)) * ctx.n(&pos, rr, neg(s1)) / Q::from_integer(norm[d]);
            }
            if let Some(d) = sum(rr, neg(r1)) {
                t += ctx.n(&pos, neg(r1), rr) * ctx.n(&pos, ss, neg(s1)) / Q::from_integer(norm[d]);
            }
            pos.insert((rr, ss), t * Q::from_integer(norm[xi]) / n1);
        }
    }

    let mut constants = HashMap::new();
    for a in 0..2 * np {
        for b in 0..2 * np {
            if a != neg(b) && sum(a, b).is_some() {
                let c = ctx.n(&pos, a, b);
                if !c.is_integer() {
                    return Err(Error::Inconsistent(format!(
                        "non-integral structure constant {c}"
                    )));
                }
                constants.insert((a, b), c.to_integer());
            }
        }
    }

    let d = rs.symmetrizer();
    let coroots = roots
        .iter()
        .zip(&norm)
        .map(|(v, &nn)| {
            let da = nn / 2;
            v.iter()
                .zip(d)
                .map(|(c, dj)| {
                    let x = c * dj;
                    if x % da != 0 {
                        Err(Error::Inconsistent("non-integral coroot".into()))
                    } else {
                        Ok(x / da)
                    }
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let pairings = roots
        .iter()
        .map(|v| (0..r).map(|i| rs.coroot_pairing(v, i)).collect())
        .collect();
    Ok(ChevalleyBasis {
        rank: r,
        np,
        roots,
        ids,
        constants,
        coroots,
        pairings,
    })
}

struct Ctx<'a> {
    np: usize,
    norm: &'a [i64],
    sum: &'a dyn Fn(usize, usize) -> Option<usize>,
    neg: &'a dyn Fn(usize) -> usize,
}

impl Ctx<'_> {
    /// `N_{a,b}` for any roots with `a + b` a nonzero root, from the
    /// constants already fixed on positive pairs.
    fn n(&self, pos: &HashMap<(usize, usize), Q>, a: usize, b: usize) -> Q {
        let np = self.np;
        let c = (self.sum)(a, b).expect("sum must be a root");
        let q = |x: usize| Q::from_integer(self.norm[x]);
        match (a < np, b < np) {
            (true, true) => match pos.get(&(a.min(b), a.max(b))) {
                Some(&v) if a < b => v,
                Some(&v) => -v,
                None => panic!("structure constant requested out of order"),
            },
            (false, false) => -self.n(pos, (self.neg)(a), (self.neg)(b)),
            (true, false) if c < np => -q(c) / q(a) * self.n(pos, (self.neg)(b), c),
            (true, false) => q(c) / q(b) * self.n(pos, (self.neg)(c), a),
            (false, true) => -self.n(pos, b, a),
        }
    }
}

/// Sign of the permutation sorting `c` into `rest`, with the merged wedge,
/// or `None` if `c` already occurs.
fn insert_sorted(c: usize, rest: &[usize]) -> Option<(i64, Vec<usize>)> {
    let pos = match rest.binary_search(&c) {
        Ok(_) => return None,
        Err(p) => p,
    };
    let mut out = Vec::with_capacity(rest.len() + 1);
    out.extend_from_slice(&rest[..pos]);
    out.push(c);
    out.extend_from_slice(&rest[pos..]);
    Some((if pos % 2 == 0 { 1 } else { -1 }, out))
}

/// The boundary map on `Λ^• g_−` for a grading, in the wedge basis of
/// negative-level root vectors.
#[derive(Debug, Clone)]
pub struct ExteriorBoundary {
    /// Signed root ids spanning `g_−`, in increasing order.
    pub roots: Vec<usize>,
    levels: Vec<i64>,
    vectors: Vec<Vec<i64>>,
    table: Vec<Vec<Option<(usize, i64)>>>,
}

impl ExteriorBoundary {
    pub fn new(rs: &RootSystem, cb: &ChevalleyBasis, g: &GradingElement) -> ExteriorBoundary {
        let np = rs.num_positive();
        let roots: Vec<usize> = (np..2 * np)
            .filter(|&id| g.level(&cb.roots[id]) < 0)
            .collect();
        let local: HashMap<usize, usize> =
            roots.iter().enumerate().map(|(k, &id)| (id, k)).collect();
        let table = roots
            .iter()
            .map(|&a| {
                roots
                    .iter()
                    .map(|&b| {
                        let c = cb.structure_constant(a, b);
                        if c == 0 {
                            None
                        } else {
                            Some((local[&cb.sum(a, b).expect("root")], c))
                        }
                    })
                    .collect()
            })
            .collect();
        ExteriorBoundary {
            levels: roots.iter().map(|&id| g.level(&cb.roots[id])).collect(),
            vectors: roots.iter().map(|&id| cb.roots[id].clone()).collect(),
            roots,
            table,
        }
    }

    /// Local indices of the roots of level `−1`.
    pub fn level_one(&self) -> Vec<usize> {
        (0..self.roots.len())
            .filter(|&k| self.levels[k] == -1)
            .collect()
    }

    /// `δ(x_1 ∧ ⋯ ∧ x_ℓ) = Σ_{j<k} (−1)^{j+k+1} [x_j, x_k] ∧ x_1 ∧ ⋯ x̂_j ⋯ x̂_k ⋯ ∧ x_ℓ`
    /// on a sorted wedge of local indices.
    pub fn apply(&self, wedge: &[usize]) -> BTreeMap<Vec<usize>, i64> {
        let mut out = BTreeMap::new();
        for j in 0..wedge.len() {
            for k in j + 1..wedge.len() {
                let Some((c, n)) = self.table[wedge[j]][wedge[k]] else {
                    continue;
                };
                let rest: Vec<usize> = wedge
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j && i != k)
                    .map(|(_, &x)| x)
                    .collect();
                if let Some((s, w)) = insert_sorted(c, &rest) {
                    let sign = if (j + k) % 2 == 0 { -1 } else { 1 };
                    *out.entry(w).or_insert(0) += sign * s * n;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Linear extension of [`Self::apply`].
    pub fn apply_chain(&self, chain: &BTreeMap<Vec<usize>, i64>) -> BTreeMap<Vec<usize>, i64> {
        let mut out = BTreeMap::new();
        for (w, &a) in chain {
            for (u, b) in self.apply(w) {
                *out.entry(u).or_insert(0) += a * b;
            }
        }
        out.retain(|_, c: &mut i64| *c != 0);
        out
    }

    /// Local index of a signed root id, if it spans part of `g_−`.
    pub fn local(&self, id: usize) -> Option<usize> {
        self.roots.binary_search(&id).ok()
    }

    fn weight(&self, wedge: &[usize]) -> Vec<i64> {
        let mut s = vec![0; self.vectors.first().map_or(0, Vec::len)];
        for &k in wedge {
            for (x, y) in s.iter_mut().zip(&self.vectors[k]) {
                *x += y;
            }
        }
        s
    }

    fn blocks(&self, pool: &[usize], l: usize) -> HashMap<Vec<i64>, Vec<Vec<usize>>> {
        let mut out: HashMap<Vec<i64>, Vec<Vec<usize>>> = HashMap::new();
        for w in pool.iter().copied().combinations(l) {
            out.entry(self.weight(&w)).or_default().push(w);
        }
        out
    }

    /// Rank of `δ` on the span of `cols`.
    fn rank(&self, cols: &[Vec<usize>]) -> Result<usize> {
        let mut index: HashMap<Vec<usize>, u32> = HashMap::new();
        let vecs: Vec<Vec<(u32, i64)>> = cols
            .iter()
            .map(|c| {
                let mut v: Vec<(u32, i64)> = self
                    .apply(c)
                    .into_iter()
                    .map(|(w, x)| {
                        let n = index.len() as u32;
                        (*index.entry(w).or_insert(n), x)
                    })
                    .collect();
                v.sort_unstable();
                v
            })
            .collect();
        exact_rank(&vecs)
    }
}

/// Rank over `Q` of sparse integer vectors, by fraction-free elimination in
/// `i128`, repeated with big integers if that overflows.
pub fn exact_rank(vecs: &[Vec<(u32, i64)>]) -> Result<usize> {
    if let Some(r) = rank_in::<i128>(vecs) {
        return Ok(r);
    }
    rank_in::<BigInt>(vecs)
        .ok_or_else(|| Error::Inconsistent("big integer elimination failed".into()))
}

fn rank_in<T>(vecs: &[Vec<(u32, i64)>]) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64>,
{
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    let mut rank = 0;
    for v in vecs {
        let mut v: Vec<(u32, T)> = v.iter().map(|(i, x)| (*i, T::from(*x))).collect();
        while let Some((p, vp)) = v.first().cloned() {
            let Some(u) = pivots.get(&p) else {
                pivots.insert(p, v);
                rank += 1;
                break;
            };
            let up = &u[0].1;
            let g = up.gcd(&vp);
            let (a, b) = (up.div_floor(&g), vp.div_floor(&g));
            v = combine(&a, &v, &b, u)?;
        }
    }
    Some(rank)
}

/// `a·v − b·u` with the content divided out.
fn combine<T>(a: &T, v: &[(u32, T)], b: &T, u: &[(u32, T)]) -> Option<Vec<(u32, T)>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let mut out: Vec<(u32, T)> = Vec::with_capacity(v.len() + u.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < u.len() {
        let take_v = j == u.len() || (i < v.len() && v[i].0 <= u[j].0);
        let take_u = i == v.len() || (j < u.len() && u[j].0 <= v[i].0);
        let idx = if take_v { v[i].0 } else { u[j].0 };
        let mut x = T::zero();
        if take_v {
            x = a.checked_mul(&v[i].1)?;
            i += 1;
        }
        if take_u {
            x = x.checked_sub(&b.checked_mul(&u[j].1)?)?;
            j += 1;
        }
        if !x.is_zero() {
            out.push((idx, x));
        }
    }
    let g = out.iter().fold(T::zero(), |g, (_, x)| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for (_, x) in &mut out {
            *x = x.div_floor(&g);
        }
    }
    Some(out)
}

/// Dimension of the irreducible `m_0^ss`-module with extremal weight `λ`,
/// where `m_0^ss` is generated by the nodes of coefficient zero.
pub fn levi_module_dim(rs: &RootSystem, g: &GradingElement, lambda: &Weight) -> Result<u128> {
    let nodes: Vec<usize> = (0..rs.rank()).filter(|&i| g.coeffs()[i] == 0).collect();
    if nodes.is_empty() {
        return Ok(1);
    }
    let sub = rs.subsystem(&nodes)?;
    let ints = lambda
        .to_ints()
        .ok_or_else(|| Error::Invalid(format!("weight {lambda} is not integral")))?;
    let restricted: Vec<i64> = nodes.iter().map(|&i| ints[i]).collect();
    weyl_dim(
        &sub,
        &Weight::from_ints(&dominant_conjugate(&sub, restricted)),
    )
}

/// Oracle and predicted dimensions of `H_ℓ(g_−)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomologyDims {
    pub degree: usize,
    pub oracle_dim: u128,
    pub predicted_dim: u128,
}

/// `dim H_ℓ(g_−)` by linear algebra, next to the sum of `m_0`-module
/// dimensions with extremal weights `−ϱ_w`, `w ∈ W^φ(ℓ)`.
pub fn kostant_homology_dims(
    rs: &RootSystem,
    g: &GradingElement,
    l: usize,
) -> Result<HomologyDims> {
    let gr = grade_roots(rs, g);
    let n = gr.g_plus().len();
    if n > MAX_HOMOLOGY_ROOTS || l > MAX_HOMOLOGY_DEGREE {
        return Err(Error::Guard(format!(
            "homology needs |Δ(g_−)| ≤ {MAX_HOMOLOGY_ROOTS} and ℓ ≤ {MAX_HOMOLOGY_DEGREE}, got {n} and {l}"
        )));
    }
    let cb = build_chevalley(rs)?;
    let bd = ExteriorBoundary::new(rs, &cb, g);
    let all: Vec<usize> = (0..bd.roots.len()).collect();
    let here = bd.blocks(&all, l);
    let above = bd.blocks(&all, l + 1);
    let mut oracle = 0u128;
    for (mu, cols) in &here {
        let mut dim = cols.len() - bd.rank(cols)?;
        if let Some(up) = above.get(mu) {
            dim -= bd.rank(up)?;
        }
        oracle += dim as u128;
    }
    let predicted = predicted_sum(rs, g, gr.g_plus(), l)?;
    Ok(HomologyDims {
        degree: l,
        oracle_dim: oracle,
        predicted_dim: predicted,
    })
}

fn predicted_sum(rs: &RootSystem, g: &GradingElement, mask: RootSet, l: usize) -> Result<u128> {
    weyl::enumerate_masked(rs, mask, Some(l), usize::MAX)?
        .iter()
        .filter(|w| w.length() == l)
        .map(|w| levi_module_dim(rs, g, &w.rho_w(rs).neg()))
        .sum()
}

/// One weight space of `Λ^ℓ g_{−1}`.
#[derive(Debug, Clone)]
pub struct KernelBlock {
    /// Weight in fundamental coordinates.
    pub weight: Weight,
    pub wedges: usize,
    pub kernel: usize,
}

/// `I_ℓ = ker(δ : Λ^ℓ g_{−1} → g_{−2} ⊗ Λ^{ℓ−1} g_{−1})`.
#[derive(Debug, Clone)]
pub struct IvhsKernel {
    pub degree: usize,
    pub dim: u128,
    /// `Σ_{w ∈ W^φ_I(ℓ)}` of the `m_0`-module dimensions.
    pub predicted_dim: u128,
    /// Nonzero kernel blocks, sorted by weight.
    pub blocks: Vec<KernelBlock>,
}

pub fn ivhs_kernel(rs: &RootSystem, g: &GradingElement, l: usize) -> Result<IvhsKernel> {
    let gr = grade_roots(rs, g);
    let n = gr.g1().len();
    if n > MAX_IVHS_ROOTS || l > MAX_IVHS_DEGREE {
        return Err(Error::Guard(format!(
            "I_ℓ needs |Δ(g_1)| ≤ {MAX_IVHS_ROOTS} and ℓ ≤ {MAX_IVHS_DEGREE}, got {n} and {l}"
        )));
    }
    let cb = build_chevalley(rs)?;
    let bd = ExteriorBoundary::new(rs, &cb, g);
    let mut blocks = Vec::new();
    let mut dim = 0u128;
    for (mu, cols) in bd.blocks(&bd.level_one(), l) {
        let kernel = cols.len() - bd.rank(&cols)?;
        if kernel > 0 {
            dim += kernel as u128;
            blocks.push(KernelBlock {
                weight: rs.weight_of_root(&mu),
                wedges: cols.len(),
                kernel,
            });
        }
    }
    blocks.sort_by(|a, b| a.weight.0.cmp(&b.weight.0));
    let predicted = predicted_sum(rs, g, gr.g1(), l)?;
    Ok(IvhsKernel {
        degree: l,
        dim,
        predicted_dim: predicted,
        blocks,
    })
}

/// The wedge `n̂_w` of the root vectors `x_{−α}`, `α ∈ Δ(w)`, as a chain.
pub fn wedge_of(rs: &RootSystem, bd: &ExteriorBoundary, w: &WeylElement) -> Option<Vec<usize>> {
    let np = rs.num_positive();
    let mut v: Vec<usize> = w
        .inv_set()
        .iter()
        .map(|i| bd.local(i + np))
        .collect::<Option<_>>()?;
    v.sort_unstable();
    Some(v)
}

/// Eigenvalues of `h_1, …, h_r` on a wedge, computed from brackets.
pub fn wedge_weight(cb: &ChevalleyBasis, bd: &ExteriorBoundary, wedge: &[usize]) -> Vec<i64> {
    (0..cb.rank)
        .map(|i| {
            let h = cb.cartan_index(i);
            wedge
                .iter()
                .map(|&k| {
                    let id = bd.roots[k];
                    cb.bracket_basis(h, id).get(&id).copied().unwrap_or(0)
                })
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;

    fn jacobi_holds(cb: &ChevalleyBasis) -> bool {
        let n = cb.dim();
        let e = |i: usize| Element::from([(i, 1)]);
        for x in 0..n {
            for y in 0..n {
                let xy = cb.bracket_basis(x, y);
                for z in 0..n {
                    let mut s = cb.bracket(&e(z), &xy);
                    for (k, c) in cb.bracket(&e(x), &cb.bracket_basis(y, z)) {
                        *s.entry(k).or_insert(0) += c;
                    }
                    for (k, c) in cb.bracket(&e(y), &cb.bracket_basis(z, x)) {
                        *s.entry(k).or_insert(0) += c;
                    }
                    if s.values().any(|&c| c != 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn rank_one_and_two() {
        let a1 = RootSystem::of(Family::A, 1).unwrap();
        let cb = build_chevalley(&a1).unwrap();
        assert_eq!(cb.bracket_basis(0, 1), Element::from([(2, 1)]));
        let a2 = RootSystem::of(Family::A, 2).unwrap();
        let cb = build_chevalley(&a2).unwrap();
        assert_eq!(cb.structure_constant(0, 1).abs(), 1);
    }

    #[test]
    fn jacobi_exhaustive() {
        for (f, r) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::G, 2),
            (Family::D, 4),
        ] {
            let rs = RootSystem::of(f, r).unwrap();
            let cb = build_chevalley(&rs).unwrap();
            assert!(jacobi_holds(&cb), "{f}{r}");
        }
    }

    #[test]
    fn constants_are_root_string_lengths() {
        for (f, r) in [(Family::F, 4), (Family::B, 4), (Family::E, 6)] {
            let rs = RootSystem::of(f, r).unwrap();
            let cb = build_chevalley(&rs).unwrap();
            for (&(a, b), &c) in &cb.constants {
                let mut p = 0;
                let mut cur = b;
                while let Some(next) = cb.sum(cur, cb.neg(a)) {
                    p += 1;
                    cur = next;
                }
                assert_eq!(c.abs(), p + 1);
                assert_eq!(cb.structure_constant(cb.neg(a), cb.neg(b)), -c);
            }
        }
        let big = RootSystem::of(Family::E, 7).unwrap();
        assert!(matches!(build_chevalley(&big), Err(Error::Guard(_))));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let rs = RootSystem::of(Family::B, 3).unwrap();
        let g = GradingElement::new(vec![1, 0, 1]);
        let cb = build_chevalley(&rs).unwrap();
        let bd = ExteriorBoundary::new(&rs, &cb, &g);
        let all: Vec<usize> = (0..bd.roots.len()).collect();
        for l in 2..=4 {
            for w in all.iter().copied().combinations(l) {
                assert!(bd.apply_chain(&bd.apply(&w)).is_empty());
            }
        }
    }

    #[test]
    fn homology_matches_prediction() {
        let a2 = RootSystem::of(Family::A, 2).unwrap();
        let g = GradingElement::new(vec![1, 1]);
        let h = kostant_homology_dims(&a2, &g, 1).unwrap();
        assert_eq!((h.oracle_dim, h.predicted_dim), (2, 2));
        let h = kostant_homology_dims(&a2, &g, 0).unwrap();
        assert_eq!((h.oracle_dim, h.predicted_dim), (1, 1));
        let c3 = RootSystem::of(Family::C, 3).unwrap();
        let g = GradingElement::from_nodes(3, &[0]).unwrap();
        let h = kostant_homology_dims(&c3, &g, 2).unwrap();
        assert_eq!(h.oracle_dim, h.predicted_dim);
    }

    #[test]
    fn schubert_wedges_are_weight_cycles() {
        let rs = RootSystem::of(Family::A, 5).unwrap();
        let g = GradingElement::from_nodes(5, &[1, 3]).unwrap();
        let gr = grade_roots(&rs, &g);
        let cb = build_chevalley(&rs).unwrap();
        let bd = ExteriorBoundary::new(&rs, &cb, &g);
        for w in weyl::enumerate_masked(&rs, gr.g1(), None, 10_000).unwrap() {
            let wedge = wedge_of(&rs, &bd, &w).unwrap();
            assert!(bd.apply(&wedge).is_empty());
            let expect = w.rho_w(&rs).neg().to_ints().unwrap();
            assert_eq!(wedge_weight(&cb, &bd, &wedge), expect);
        }
    }

    #[test]
    fn exact_rank_falls_back() {
        let p = (1i64 << 62) - 1;
        let q = (1i64 << 62) - 3;
        let vecs = vec![
            vec![(0, p), (1, 1)],
            vec![(0, q), (2, 1)],
            vec![(0, 1), (1, p), (2, q)],
        ];
        assert_eq!(rank_in::<i128>(&vecs), None);
        assert_eq!(exact_rank(&vecs).unwrap(), 3);
        assert_eq!(exact_rank(&[vec![(0, 2)], vec![(0, -4)]]).unwrap(), 1);
    }
}
