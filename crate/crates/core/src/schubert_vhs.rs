//! Schubert variations of Hodge structure.
//!
//! For a grading `T`, the Schubert varieties `X_w` that are variations of
//! Hodge structure are indexed by `W^φ_I = {w : Δ(w) ⊂ Δ(g_1)}`. This set is
//! a lower set for the Bruhat order, so it is enumerated breadth-first and
//! its maximal elements are those with no single-root augmentation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::dynkin;
use crate::grading::{GradedRoots, GradingElement};
use crate::root_system::{components_of, Family, Root, RootSet, RootSystem, Weight, Q};
use crate::weyl::{self, WeylElement};
use crate::{Error, Result};

/// A compact Hermitian symmetric space appearing as a factor of `X_w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HSFactor {
    Projective(usize),
    Grassmannian { a: usize, n: usize },
    Lagrangian(usize),
    Quadric(usize),
    Spinor(usize),
    CayleyPlane,
    Freudenthal,
}

impl HSFactor {
    pub fn dim(&self) -> usize {
        match *self {
            HSFactor::Projective(n) => n,
            HSFactor::Grassmannian { a, n } => a * (n - a),
            HSFactor::Lagrangian(n) => n * (n + 1) / 2,
            HSFactor::Quadric(m) => m,
            HSFactor::Spinor(n) => n * (n - 1) / 2,
            HSFactor::CayleyPlane => 16,
            HSFactor::Freudenthal => 27,
        }
    }

    /// Normal form under the standard isomorphisms, e.g. `Gr(3,5) = Gr(2,5)`,
    /// `LG(2,4) = Q^3`, `Q^4 = Gr(2,4)`. `Q^2` splits into two factors.
    pub fn canonical(&self) -> Vec<HSFactor> {
        use HSFactor::*;
        let gr = |a: usize, n: usize| {
            let a = a.min(n - a);
            if a == 1 {
                Projective(n - 1)
            } else {
                Grassmannian { a, n }
            }
        };
        match *self {
            Projective(n) => vec![gr(1, n + 1)],
            Grassmannian { a, n } => vec![gr(a, n)],
            Lagrangian(1) => vec![Projective(1)],
            Lagrangian(2) => vec![Quadric(3)],
            Quadric(1) => vec![Projective(1)],
            Quadric(2) => vec![Projective(1), Projective(1)],
            Quadric(4) => vec![gr(2, 4)],
            Spinor(3) => vec![Projective(3)],
            Spinor(4) => vec![Quadric(6)],
            ref f => vec![f.clone()],
        }
    }
}

impl fmt::Display for HSFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HSFactor::Projective(n) => write!(f, "P^{n}"),
            HSFactor::Grassmannian { a, n } => write!(f, "Gr({a},{n})"),
            HSFactor::Lagrangian(n) => write!(f, "LG({n},{})", 2 * n),
            HSFactor::Quadric(m) => write!(f, "Q^{m}"),
            HSFactor::Spinor(n) => write!(f, "S_{n}"),
            HSFactor::CayleyPlane => f.write_str("E6/P6"),
            HSFactor::Freudenthal => f.write_str("E7/P7"),
        }
    }
}

impl FromStr for HSFactor {
    type Err = Error;

    /// Parses the notation of [`fmt::Display`], also accepting `Gr(a,C^n)`.
    fn from_str(s: &str) -> Result<HSFactor> {
        let bad = || Error::Invalid(format!("unrecognized factor {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.replace("C^", "");
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let pair = |t: &str| -> Result<(usize, usize)> {
            let inner = t.strip_suffix(')').ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        match s.as_str() {
            "E6/P6" | "E6/P1" => return Ok(HSFactor::CayleyPlane),
            "E7/P7" => return Ok(HSFactor::Freudenthal),
            _ => {}
        }
        if let Some(t) = s.strip_prefix("P^") {
            Ok(HSFactor::Projective(num(t)?))
        } else if let Some(t) = s.strip_prefix("Q^") {
            Ok(HSFactor::Quadric(num(t)?))
        } else if let Some(t) = s.strip_prefix("S_") {
            Ok(HSFactor::Spinor(num(t)?))
        } else if let Some(t) = s.strip_prefix("LG(") {
            let (n, m) = pair(t)?;
            if m != 2 * n {
                return Err(bad());
            }
            Ok(HSFactor::Lagrangian(n))
        } else if let Some(t) = s.strip_prefix("Gr(") {
            let (a, n) = pair(t)?;
            if a == 0 || a >= n {
                return Err(bad());
            }
            Ok(HSFactor::Grassmannian { a, n })
        } else {
            Err(bad())
        }
    }
}

/// Parses a product such as `P^2 x Gr(2,4)`.
pub fn parse_factors(s: &str) -> Result<Vec<HSFactor>> {
    s.split(['x', '×']).map(str::parse).collect()
}

/// Sorted multiset of canonical factors, for comparing factorizations.
pub fn canonical_factors(factors: &[HSFactor]) -> Vec<HSFactor> {
    let mut v: Vec<HSFactor> = factors.iter().flat_map(HSFactor::canonical).collect();
    v.sort();
    v
}

/// Formats a product, e.g. `P^2 x Gr(2,4)`.
pub fn format_factors(factors: &[HSFactor]) -> String {
    factors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" x ")
}

/// One inequality `α(T_A) ≤ c`; printed as `=0` when `c = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    /// 0-based nodes.
    pub nodes: Vec<usize>,
    pub bound: u32,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.nodes.iter().map(|i| format!("T{}", i + 1)).collect();
        if self.bound == 0 {
            write!(f, "α({})=0", t.join("+"))
        } else {
            write!(f, "α({})≤{}", t.join("+"), self.bound)
        }
    }
}

/// A description `Δ(w) = {α ∈ Δ(g_1) : all atoms hold}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Condition(pub Vec<Atom>);

impl Condition {
    /// Roots of `Δ(g_1)` satisfying the condition.
    pub fn select(&self, rs: &RootSystem, gr: &GradedRoots) -> RootSet {
        gr.g1()
            .iter()
            .filter(|&i| {
                self.0
                    .iter()
                    .all(|a| atom_holds(a, &rs.positive_roots()[i]))
            })
            .collect()
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(", "))
    }
}

impl FromStr for Condition {
    type Err = Error;

    /// Parses `α(T2+T4)≤1, α(T4)=0`; `<=`, `∧` and a bare `T2+T4<=1` are
    /// accepted too.
    fn from_str(s: &str) -> Result<Condition> {
        let bad = || Error::Invalid(format!("unrecognized condition {s:?}"));
        let mut atoms = Vec::new();
        for part in s.split([',', '∧']) {
            let part: String = part
                .chars()
                .filter(|c| !c.is_whitespace() && !matches!(c, 'α' | '(' | ')'))
                .collect();
            let part = part.replace("<=", "≤");
            let (lhs, bound) = if let Some((l, r)) = part.split_once('≤') {
                (l.to_string(), r.parse::<u32>().map_err(|_| bad())?)
            } else if let Some((l, r)) = part.split_once('=') {
                if r != "0" {
                    return Err(bad());
                }
                (l.to_string(), 0)
            } else {
                return Err(bad());
            };
            let mut nodes = lhs
                .split('+')
                .map(|t| {
                    t.strip_prefix('T')
                        .and_then(|n| n.parse::<usize>().ok())
                        .filter(|&n| n >= 1)
                        .map(|n| n - 1)
                        .ok_or_else(bad)
                })
                .collect::<Result<Vec<_>>>()?;
            nodes.sort_unstable();
            atoms.push(Atom { nodes, bound });
        }
        Ok(Condition(atoms))
    }
}

fn atom_holds(a: &Atom, v: &[i64]) -> bool {
    a.nodes.iter().map(|&i| v[i]).sum::<i64>() <= i64::from(a.bound)
}

/// A Schubert VHS `X_w` with its invariants.
#[derive(Debug, Clone)]
pub struct SchubertDatum {
    pub w: WeylElement,
    pub delta_w: Vec<Root>,
    pub dim: usize,
    pub rho_w: Weight,
    pub is_maximal: bool,
    pub hs_factorization: Option<Vec<HSFactor>>,
    pub condition: Option<Condition>,
}

impl SchubertDatum {
    /// Highest weight `−ϱ_w` of the module `I_w`.
    pub fn ivhs_module_weight(&self) -> Weight {
        self.rho_w.neg()
    }
}

/// Decides `Δ(w) ⊂ Δ(g_1)`, cross-checked against `ϱ_w(T) = |w|`.
pub fn is_schubert_vhs(
    rs: &RootSystem,
    g: &GradingElement,
    gr: &GradedRoots,
    w: &WeylElement,
) -> Result<bool> {
    let by_roots = w.inv_set().is_subset(gr.g1());
    let by_rho = g.eval_weight(rs, &w.rho_w(rs)) == Q::from_integer(w.length() as i64);
    if by_roots != by_rho {
        return Err(Error::Inconsistent(format!(
            "{}: Δ(w) ⊂ Δ(g_1) is {by_roots} but ϱ_w(T) = |w| is {by_rho}",
            w.compact_word()
        )));
    }
    Ok(by_roots)
}

/// True iff no two roots of the set sum to a root.
pub fn check_abelian(rs: &RootSystem, inv: RootSet) -> bool {
    rs.positive_sums()
        .iter()
        .all(|&(a, b, _)| !(inv.contains(a) && inv.contains(b)))
}

/// All of `W^φ`, i.e. `{w : Δ(w) ⊂ Δ(g_+)}`.
pub fn enumerate_wphi(
    rs: &RootSystem,
    gr: &GradedRoots,
    max_length: Option<usize>,
    cap: usize,
) -> Result<Vec<WeylElement>> {
    weyl::enumerate_masked(rs, gr.g_plus(), max_length, cap)
}

/// Options for [`enumerate_wphi_i`].
#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub up_to_length: Option<usize>,
    pub cap: usize,
    /// Search for a describing condition on each maximal element.
    pub conditions: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            up_to_length: None,
            cap: crate::default_cap(),
            conditions: true,
        }
    }
}

/// All of `W^φ_I` with maximal elements flagged, sorted by dimension
/// (descending) and then by canonical word.
pub fn enumerate_wphi_i(
    rs: &RootSystem,
    g: &GradingElement,
    gr: &GradedRoots,
    opts: EnumOptions,
) -> Result<Vec<SchubertDatum>> {
    let elems = weyl::enumerate_masked(rs, gr.g1(), opts.up_to_length, opts.cap)?;
    let mut rows: Vec<SchubertDatum> = elems
        .into_par_iter()
        .map(|w| make_datum(rs, g, gr, w, opts.conditions))
        .collect::<Result<_>>()?;
    rows.sort_by(row_order);
    Ok(rows)
}

/// The maximal elements of `W^φ_I`.
pub fn maximal_schubert_vhs(
    rs: &RootSystem,
    g: &GradingElement,
    gr: &GradedRoots,
    cap: usize,
) -> Result<Vec<SchubertDatum>> {
    let elems = weyl::enumerate_masked(rs, gr.g1(), None, cap)?;
    let maximal: Vec<WeylElement> = elems
        .into_iter()
        .filter(|w| weyl::bruhat_covers(rs, w, gr.g1()).is_empty())
        .collect();
    let mut rows: Vec<SchubertDatum> = maximal
        .into_par_iter()
        .map(|w| make_datum(rs, g, gr, w, true))
        .collect::<Result<_>>()?;
    rows.sort_by(row_order);
    Ok(rows)
}

fn row_order(a: &SchubertDatum, b: &SchubertDatum) -> Ordering {
    b.dim.cmp(&a.dim).then_with(|| a.w.word().cmp(b.w.word()))
}

fn make_datum(
    rs: &RootSystem,
    g: &GradingElement,
    gr: &GradedRoots,
    w: WeylElement,
    conditions: bool,
) -> Result<SchubertDatum> {
    if !is_schubert_vhs(rs, g, gr, &w)? {
        return Err(Error::Inconsistent(format!(
            "{} is not a Schubert VHS",
            w.compact_word()
        )));
    }
    let is_maximal = weyl::bruhat_covers(rs, &w, gr.g1()).is_empty();
    let hs_factorization = hs_factorize(rs, g, &w);
    let condition = if conditions && is_maximal {
        find_condition(rs, gr, w.inv_set())
    } else {
        None
    };
    Ok(SchubertDatum {
        delta_w: w.inversion_set(rs),
        dim: w.length(),
        rho_w: w.rho_w(rs),
        is_maximal,
        hs_factorization,
        condition,
        w,
    })
}

/// Recognizes `X_w` as a product of homogeneously embedded Hermitian
/// symmetric spaces, one per connected component of the support of `Δ(w)`.
pub fn hs_factorize(rs: &RootSystem, g: &GradingElement, w: &WeylElement) -> Option<Vec<HSFactor>> {
    if w.length() == 0 {
        return Some(Vec::new());
    }
    let r = rs.rank();
    let delta = w.inversion_set(rs);
    let supp: Vec<usize> = (0..r)
        .filter(|&i| delta.iter().any(|v| v[i] != 0))
        .collect();
    let expected: RootSet = (0..rs.num_positive())
        .filter(|&k| {
            let v = &rs.positive_roots()[k];
            g.level(v) == 1 && (0..r).all(|i| v[i] == 0 || supp.contains(&i))
        })
        .collect();
    if expected != w.inv_set() {
        return None;
    }
    let prefer_c = rs.lie_type().map(|t| t.family) == Some(Family::C);
    let mut factors = Vec::new();
    for comp in components_of(rs.cartan(), &supp) {
        let marked: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&i| g.coeffs()[i] == 1)
            .collect();
        if marked.len() != 1 || comp.iter().any(|&i| g.coeffs()[i] > 1) {
            return None;
        }
        let sub = rs.subsystem(&comp).ok()?;
        let (t, order) = dynkin::identify_with(sub.cartan(), sub.symmetrizer(), prefer_c)?;
        let local = comp.iter().position(|&i| i == marked[0])?;
        let p = order.iter().position(|&k| k == local)? + 1;
        let n = t.rank;
        let f = match t.family {
            Family::A if p == 1 || p == n => HSFactor::Projective(n),
            Family::A => HSFactor::Grassmannian { a: p, n: n + 1 },
            Family::B if p == 1 => HSFactor::Quadric(2 * n - 1),
            Family::C if p == n => HSFactor::Lagrangian(n),
            Family::D if n == 4 && p != 2 => HSFactor::Quadric(6),
            Family::D if p == 1 => HSFactor::Quadric(2 * n - 2),
            Family::D if p == n - 1 || p == n => HSFactor::Spinor(n),
            Family::E if n == 6 && (p == 1 || p == 6) => HSFactor::CayleyPlane,
            Family::E if n == 7 && p == 7 => HSFactor::Freudenthal,
            _ => return None,
        };
        factors.push(f);
    }
    debug_assert_eq!(factors.iter().map(HSFactor::dim).sum::<usize>(), w.length());
    Some(factors)
}

/// Searches for the simplest condition `α(T_A) ≤ c` (or a conjunction of
/// two) cutting `Δ(w)` out of `Δ(g_1)`. Subsets `A` range over all nodes and
/// `c ∈ {0, 1, 2}`; preference is fewer atoms, then smaller `|A|`, then
/// smaller `c`, then lexicographic `A`.
pub fn find_condition(rs: &RootSystem, gr: &GradedRoots, inv: RootSet) -> Option<Condition> {
    let r = rs.rank();
    let g1: Vec<usize> = gr.g1().iter().collect();
    // Atoms whose solution set contains Δ(w), deduplicated by solution set.
    let mut atoms: Vec<(Atom, RootSet)> = Vec::new();
    let mut subsets: Vec<Vec<usize>> = (1u32..(1 << r))
        .map(|m| (0..r).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for bound in 0..=2u32 {
        for nodes in &subsets {
            let atom = Atom {
                nodes: nodes.clone(),
                bound,
            };
            let sel: RootSet = g1
                .iter()
                .copied()
                .filter(|&i| atom_holds(&atom, &rs.positive_roots()[i]))
                .collect();
            if inv.is_subset(sel) {
                atoms.push((atom, sel));
            }
        }
    }
    let key = |a: &Atom| (a.nodes.len(), a.bound, a.nodes.clone());
    atoms.sort_by_key(|x| key(&x.0));
    if let Some((a, _)) = atoms.iter().find(|(_, s)| *s == inv) {
        return Some(Condition(vec![a.clone()]));
    }
    let mut seen = std::collections::HashSet::new();
    atoms.retain(|(_, s)| seen.insert(*s));
    type PairKey = (usize, u32, Vec<usize>, Vec<usize>);
    let mut best: Option<(PairKey, Condition)> = None;
    for (i, (a, sa)) in atoms.iter().enumerate() {
        for (b, sb) in &atoms[i + 1..] {
            if sa.intersect(*sb) != inv {
                continue;
            }
            let (x, y) = if key(a) <= key(b) { (a, b) } else { (b, a) };
            let k = (
                x.nodes.len() + y.nodes.len(),
                x.bound + y.bound,
                x.nodes.clone(),
                y.nodes.clone(),
            );
            if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
                best = Some((k, Condition(vec![x.clone(), y.clone()])));
            }
        }
    }
    best.map(|(_, c)| c)
}

/// Degree-`2ℓ` invariant characteristic cohomology, indexed by `W^φ_I(ℓ)`.
#[derive(Debug, Clone)]
pub struct IccDegree {
    pub degree: usize,
    pub basis: Vec<WeylElement>,
}

/// Basis indices `W^φ_I(ℓ)` of degree `2ℓ`.
pub fn icc_basis(rs: &RootSystem, gr: &GradedRoots, l: usize, cap: usize) -> Result<IccDegree> {
    let all = weyl::enumerate_masked(rs, gr.g1(), Some(l), cap)?;
    let mut basis: Vec<WeylElement> = all.into_iter().filter(|w| w.length() == l).collect();
    basis.sort_by(|a, b| a.word().cmp(b.word()));
    Ok(IccDegree {
        degree: 2 * l,
        basis,
    })
}

/// Dimensions of the invariant characteristic cohomology in every degree
/// `0..=2 max_dim`; odd degrees vanish.
pub fn icc_dimensions(rs: &RootSystem, gr: &GradedRoots, cap: usize) -> Result<Vec<usize>> {
    let all = weyl::enumerate_masked(rs, gr.g1(), None, cap)?;
    let top = all.iter().map(WeylElement::length).max().unwrap_or(0);
    let mut dims = vec![0; 2 * top + 1];
    for w in &all {
        dims[2 * w.length()] += 1;
    }
    Ok(dims)
}
