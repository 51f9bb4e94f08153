//! Grading elements `T = Σ n_i T_i` and the induced decomposition of roots.

use std::collections::BTreeMap;
use std::fmt;

use crate::root_system::{Root, RootSet, RootSystem, Weight, Q};
use crate::{Error, Result};

/// A grading element with nonnegative integer coefficients, `σ_i(T_j) = δ_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradingElement {
    coeffs: Vec<u32>,
}

impl GradingElement {
    pub fn new(coeffs: Vec<u32>) -> GradingElement {
        GradingElement { coeffs }
    }

    /// `T_I = Σ_{i ∈ I} T_i` from 0-based node indices.
    pub fn from_nodes(rank: usize, nodes: &[usize]) -> Result<GradingElement> {
        let mut coeffs = vec![0; rank];
        for &i in nodes {
            if i >= rank {
                return Err(Error::Invalid(format!(
                    "node {} exceeds rank {rank}",
                    i + 1
                )));
            }
            coeffs[i] = 1;
        }
        Ok(GradingElement { coeffs })
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// 0-based nodes with `n_i = 1`.
    pub fn marked(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.coeffs[i] == 1).collect()
    }

    /// True iff every coefficient is 0 or 1.
    pub fn is_reduced(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 1)
    }

    /// `α(T) = Σ m^a n_a`.
    pub fn level(&self, v: &[i64]) -> i64 {
        v.iter()
            .zip(&self.coeffs)
            .map(|(m, &n)| m * i64::from(n))
            .sum()
    }

    /// `λ(T)` for a weight, via its rational root coordinates.
    pub fn eval_weight(&self, rs: &RootSystem, w: &Weight) -> Q {
        rs.root_of_weight(w)
            .iter()
            .zip(&self.coeffs)
            .map(|(x, &n)| x * Q::from_integer(i64::from(n)))
            .sum()
    }

    /// `H_cpt = 2 Σ T_i` over simple roots of even level.
    pub fn h_compact(&self) -> GradingElement {
        GradingElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|&n| if n % 2 == 0 { 2 } else { 0 })
                .collect(),
        }
    }
}

impl fmt::Display for GradingElement {
    /// Formats as `T2+T5`, `2T1+T3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(i, &n)| {
                if n == 1 {
                    format!("T{}", i + 1)
                } else {
                    format!("{n}T{}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Positive roots sorted by level.
#[derive(Debug, Clone)]
pub struct GradedRoots {
    levels: Vec<i64>,
    by_level: BTreeMap<i64, RootSet>,
    k_max: i64,
}

impl GradedRoots {
    /// Level of a positive root by dense index.
    pub fn level_of(&self, i: usize) -> i64 {
        self.levels[i]
    }

    /// Positive roots of level `l ≥ 0`.
    pub fn level_set(&self, l: i64) -> RootSet {
        self.by_level.get(&l).copied().unwrap_or_default()
    }

    /// `Δ(g_1)`.
    pub fn g1(&self) -> RootSet {
        self.level_set(1)
    }

    /// `Δ(g_+)`, the positive roots of positive level.
    pub fn g_plus(&self) -> RootSet {
        self.by_level
            .iter()
            .filter(|(&l, _)| l > 0)
            .fold(RootSet::EMPTY, |acc, (_, s)| acc.union(*s))
    }

    /// Largest level `k`.
    pub fn k_max(&self) -> i64 {
        self.k_max
    }

    /// `dim_C` of the compact dual, `Σ_{l>0} |Δ(g_l)|`.
    pub fn compact_dual_dim(&self) -> usize {
        self.g_plus().len()
    }

    /// Roots of level `l` (any sign), with `Δ(g_{-l}) = -Δ(g_l)`.
    pub fn roots_at(&self, rs: &RootSystem, l: i64) -> Vec<Root> {
        let mut out: Vec<Root> = self
            .level_set(l.abs())
            .iter()
            .map(|i| rs.positive_roots()[i].clone())
            .collect();
        if l < 0 {
            out.iter_mut()
                .for_each(|v| v.iter_mut().for_each(|x| *x = -*x));
        } else if l == 0 {
            let neg: Vec<Root> = out.iter().map(|v| v.iter().map(|x| -x).collect()).collect();
            out.extend(neg);
        }
        out
    }

    /// Count of positive roots per level.
    pub fn level_counts(&self) -> BTreeMap<i64, usize> {
        self.by_level.iter().map(|(&l, s)| (l, s.len())).collect()
    }
}

/// Assigns every positive root its level `α(T)`.
pub fn grade_roots(rs: &RootSystem, g: &GradingElement) -> GradedRoots {
    let levels: Vec<i64> = rs.positive_roots().iter().map(|v| g.level(v)).collect();
    let mut by_level: BTreeMap<i64, RootSet> = BTreeMap::new();
    for (i, &l) in levels.iter().enumerate() {
        by_level.entry(l).or_default().insert(i);
    }
    let k_max = levels.iter().copied().max().unwrap_or(0);
    GradedRoots {
        levels,
        by_level,
        k_max,
    }
}

/// Splits all roots into compact (even level) and noncompact (odd level).
pub fn compact_noncompact_split(rs: &RootSystem, g: &GradingElement) -> (Vec<Root>, Vec<Root>) {
    let mut compact = Vec::new();
    let mut noncompact = Vec::new();
    for id in 0..2 * rs.num_positive() {
        let v = rs.root_vec(id);
        if g.level(&v) % 2 == 0 {
            compact.push(v);
        } else {
            noncompact.push(v);
        }
    }
    (compact, noncompact)
}

/// The result of reducing a grading to the form `T_I`.
#[derive(Debug, Clone)]
pub struct Reduction {
    /// Root system on the nodes with `n_i ≤ 1`.
    pub sub: RootSystem,
    /// `node_map[k]` is the ambient index of local node `k`.
    pub node_map: Vec<usize>,
    /// `T_I` on the subsystem.
    pub grading: GradingElement,
}

impl Reduction {
    /// Ambient coordinates of a root of the subsystem.
    pub fn embed_root(&self, v: &[i64], ambient_rank: usize) -> Root {
        let mut out = vec![0; ambient_rank];
        for (k, &x) in v.iter().enumerate() {
            out[self.node_map[k]] = x;
        }
        out
    }

    /// Ambient 0-based word of a local word.
    pub fn embed_word(&self, word: &[u8]) -> Vec<u8> {
        word.iter()
            .map(|&i| self.node_map[i as usize] as u8)
            .collect()
    }
}

/// Restricts to the subsystem generated by `{σ_i : n_i ≤ 1}` with grading
/// `T_I`, `I = {i : n_i = 1}`. Level-one roots are unchanged.
pub fn reduce_to_ti(rs: &RootSystem, g: &GradingElement) -> Result<Reduction> {
    if g.rank() != rs.rank() {
        return Err(Error::Invalid(
            "grading rank does not match the root system".into(),
        ));
    }
    let node_map: Vec<usize> = (0..rs.rank()).filter(|&i| g.coeffs[i] <= 1).collect();
    if !node_map.iter().any(|&i| g.coeffs[i] == 1) {
        return Err(Error::TrivialGrading);
    }
    let sub = if node_map.len() == rs.rank() {
        rs.clone()
    } else {
        rs.subsystem(&node_map)?
    };
    let grading = GradingElement::new(node_map.iter().map(|&i| g.coeffs[i]).collect());
    Ok(Reduction {
        sub,
        node_map,
        grading,
    })
}
