//! Hodge decompositions of irreducible representations under a grading.
//!
//! Weight multiplicities come from Freudenthal's recursion on dominant
//! weights, extended to full Weyl orbits. A grading element `T` splits the
//! module into eigenspaces of level `λ(T)`, which give the Hodge numbers.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::grading::GradingElement;
use crate::root_system::{RootSystem, Weight, Q};
use crate::weyl::minus_w0_involution;
use crate::{Error, Result};

/// Integral weight in fundamental coordinates.
pub type IntWeight = Vec<i64>;

/// All weights of an irreducible module with their multiplicities.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    pub highest: IntWeight,
    pub multiplicities: BTreeMap<IntWeight, u64>,
    pub total_dim: u64,
}

impl WeightSystem {
    pub fn multiplicity(&self, w: &[i64]) -> u64 {
        self.multiplicities.get(w).copied().unwrap_or(0)
    }
}

fn dominant_integral(rs: &RootSystem, mu: &Weight) -> Result<IntWeight> {
    if mu.0.len() != rs.rank() {
        return Err(Error::Invalid(
            "weight length does not match the rank".into(),
        ));
    }
    let v = mu
        .to_ints()
        .ok_or_else(|| Error::Invalid(format!("weight {mu} is not integral")))?;
    if v.iter().any(|&x| x < 0) {
        return Err(Error::Invalid(format!("weight {mu} is not dominant")));
    }
    Ok(v)
}

/// Gram matrix `(ω_i, ω_j)`.
fn gram(rs: &RootSystem) -> Vec<Vec<Q>> {
    let r = rs.rank();
    let fw = rs.fundamental_weights();
    (0..r)
        .map(|i| (0..r).map(|j| rs.weight_form(&fw[i], &fw[j])).collect())
        .collect()
}

fn form(g: &[Vec<Q>], a: &[i64], b: &[i64]) -> Q {
    let mut s = Q::zero();
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                s += g[i][j] * (x * y);
            }
        }
    }
    s
}

pub(crate) fn dominant_conjugate(rs: &RootSystem, mut v: IntWeight) -> IntWeight {
    while let Some(i) = v.iter().position(|&x| x < 0) {
        let c = v[i];
        for (j, x) in v.iter_mut().enumerate() {
            *x -= c * rs.cartan()[i][j];
        }
    }
    v
}

/// Weyl orbit of a dominant integral weight.
pub fn orbit(rs: &RootSystem, lambda: &[i64]) -> Vec<IntWeight> {
    let mut seen: HashSet<IntWeight> = HashSet::from([lambda.to_vec()]);
    let mut queue = vec![lambda.to_vec()];
    let mut k = 0;
    while k < queue.len() {
        let v = queue[k].clone();
        k += 1;
        for i in 0..rs.rank() {
            if v[i] > 0 {
                let c = v[i];
                let u: IntWeight = v
                    .iter()
                    .enumerate()
                    .map(|(j, x)| x - c * rs.cartan()[i][j])
                    .collect();
                if seen.insert(u.clone()) {
                    queue.push(u);
                }
            }
        }
    }
    queue
}

/// Weight multiplicities of the irreducible module of highest weight `mu`.
pub fn weight_system(rs: &RootSystem, mu: &Weight, cap: usize) -> Result<WeightSystem> {
    let top = dominant_integral(rs, mu)?;
    let dim = weyl_dim(rs, mu)?;
    if dim > cap as u128 {
        return Err(Error::CapExceeded {
            what: "representation dimension",
            cap,
        });
    }
    let r = rs.rank();
    let roots_fund: Vec<IntWeight> = rs
        .positive_roots()
        .iter()
        .map(|v| {
            (0..r)
                .map(|j| (0..r).map(|i| v[i] * rs.cartan()[i][j]).sum())
                .collect()
        })
        .collect();

    // Dominant weights below `top`, each reached through dominant weights.
    let mut dominant: Vec<IntWeight> = vec![top.clone()];
    let mut seen: HashSet<IntWeight> = HashSet::from([top.clone()]);
    let mut k = 0;
    while k < dominant.len() {
        let v = dominant[k].clone();
        k += 1;
        for a in &roots_fund {
            let u: IntWeight = v.iter().zip(a).map(|(x, y)| x - y).collect();
            if u.iter().all(|&x| x >= 0) && seen.insert(u.clone()) {
                dominant.push(u);
            }
        }
    }
    let depth = |v: &IntWeight| -> Q {
        let diff: Vec<Q> = (0..r).map(|i| Q::from_integer(top[i] - v[i])).collect();
        rs.root_of_weight(&Weight(diff)).iter().sum()
    };
    dominant.sort_by_cached_key(|v| depth(v));

    let g = gram(rs);
    let rho = vec![1i64; r];
    let shifted = |v: &[i64]| -> IntWeight { v.iter().zip(&rho).map(|(x, y)| x + y).collect() };
    let top_norm = form(&g, &shifted(&top), &shifted(&top));
    let mut mult: HashMap<IntWeight, u64> = HashMap::from([(top.clone(), 1)]);
    for lam in dominant.iter().skip(1) {
        let mut num = Q::zero();
        for a in &roots_fund {
            let mut nu = lam.clone();
            loop {
                nu.iter_mut().zip(a).for_each(|(x, y)| *x += y);
                let m = match mult.get(&dominant_conjugate(rs, nu.clone())) {
                    Some(&m) => m,
                    None => break,
                };
                num += form(&g, &nu, a) * (m as i64);
            }
        }
        let den = top_norm - form(&g, &shifted(lam), &shifted(lam));
        let m = num * 2 / den;
        if !m.is_integer() || m < Q::zero() {
            return Err(Error::Inconsistent(format!(
                "non-integral multiplicity {m} at {lam:?}"
            )));
        }
        let m = m.to_integer() as u64;
        if m > 0 {
            mult.insert(lam.clone(), m);
        }
    }

    let mut multiplicities = BTreeMap::new();
    let mut total = 0u64;
    for lam in &dominant {
        let Some(&m) = mult.get(lam) else { continue };
        for v in orbit(rs, lam) {
            total += m;
            multiplicities.insert(v, m);
        }
    }
    if u128::from(total) != dim {
        return Err(Error::Inconsistent(format!(
            "weight multiplicities sum to {total}, Weyl dimension is {dim}"
        )));
    }
    Ok(WeightSystem {
        highest: top,
        multiplicities,
        total_dim: total,
    })
}

/// Weyl dimension formula for a dominant weight of any (semisimple) system.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    if !lambda.is_dominant() {
        return Err(Error::Invalid(format!("weight {lambda} is not dominant")));
    }
    let d = rs.symmetrizer();
    let big = |q: &Q| Ratio::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()));
    let mut prod: Ratio<BigInt> = Ratio::one();
    for v in rs.positive_roots() {
        let mut num: Ratio<BigInt> = Ratio::zero();
        let mut den = BigInt::zero();
        for j in 0..rs.rank() {
            let cd = BigInt::from(v[j] * d[j]);
            num += big(&(lambda.0[j] + 1)) * &cd;
            den += cd;
        }
        prod *= num / den;
    }
    if !prod.is_integer() {
        return Err(Error::Inconsistent(format!(
            "Weyl dimension of {lambda} is not integral"
        )));
    }
    prod.to_integer()
        .to_u128()
        .ok_or_else(|| Error::Guard(format!("dimension of {lambda} overflows")))
}

/// Self-duality class of an irreducible module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rcq {
    Real,
    Complex,
    Quaternionic,
}

impl fmt::Display for Rcq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `μ* = −w_0(μ)`, the highest weight of the dual module.
pub fn dual_weight(rs: &RootSystem, mu: &Weight) -> Weight {
    let pi = minus_w0_involution(rs);
    Weight((0..rs.rank()).map(|j| mu.0[pi[j]]).collect())
}

/// Complex iff `μ ≠ μ*`; otherwise real iff `μ(H_cpt)` is even.
pub fn classify_rcq(rs: &RootSystem, mu: &Weight, g: &GradingElement) -> Result<Rcq> {
    dominant_integral(rs, mu)?;
    if dual_weight(rs, mu) != *mu {
        return Ok(Rcq::Complex);
    }
    let h = g.h_compact().eval_weight(rs, mu);
    if !h.is_integer() {
        return Err(Error::Inconsistent(format!(
            "μ(H_cpt) = {h} is not an integer"
        )));
    }
    Ok(if h.to_integer() % 2 == 0 {
        Rcq::Real
    } else {
        Rcq::Quaternionic
    })
}

/// Level decomposition of `V = U` (real) or `U ⊕ U*` (otherwise).
#[derive(Debug, Clone)]
pub struct HodgeDecomposition {
    /// `dim V_ℓ` for each level `ℓ`.
    pub levels: BTreeMap<Q, u64>,
    /// Twice the top level.
    pub m: Q,
    pub rcq: Rcq,
    /// `h^{p,q}` from the lowest level upward; one entry per level in
    /// `−m/2, −m/2 + 1, …, m/2`, or per occurring level when the levels are
    /// not in `½Z`.
    pub hodge_numbers: Vec<u64>,
    /// Every level lies in `½Z`.
    pub half_integral: bool,
    pub dim_u: u64,
}

impl HodgeDecomposition {
    /// Dimension of the top level `V_{m/2}`.
    pub fn top_dim(&self) -> u64 {
        self.levels.iter().next_back().map_or(0, |(_, &d)| d)
    }

    /// Dimensions `f^p` of the Hodge filtration, as suffix sums of `h`.
    pub fn filtration_dims(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .hodge_numbers
            .iter()
            .rev()
            .scan(0, |acc, &h| {
                *acc += h;
                Some(*acc)
            })
            .collect();
        out.reverse();
        out
    }
}

/// Hodge decomposition of the real Hodge representation built from `U_μ`.
pub fn hodge_decomposition(
    rs: &RootSystem,
    mu: &Weight,
    g: &GradingElement,
    cap: usize,
) -> Result<HodgeDecomposition> {
    let rcq = classify_rcq(rs, mu, g)?;
    let ws = weight_system(rs, mu, cap)?;
    let mut levels: BTreeMap<Q, u64> = BTreeMap::new();
    for (w, &m) in &ws.multiplicities {
        let l = g.eval_weight(rs, &Weight::from_ints(w));
        *levels.entry(l).or_default() += m;
        if rcq != Rcq::Real {
            *levels.entry(-l).or_default() += m;
        }
    }
    let top = *levels.keys().next_back().expect("nonempty");
    let half_integral = levels.keys().all(|l| (*l * 2).is_integer());
    let hodge_numbers = if half_integral {
        let mut h = Vec::new();
        let mut l = -top;
        while l <= top {
            h.push(levels.get(&l).copied().unwrap_or(0));
            l += Q::one();
        }
        h
    } else {
        levels.values().copied().collect()
    };
    Ok(HodgeDecomposition {
        levels,
        m: top * 2,
        rcq,
        hodge_numbers,
        half_integral,
        dim_u: ws.total_dim,
    })
}

/// Outcome of the Calabi–Yau test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyVerdict {
    pub is_cy: bool,
    pub reason: String,
}

/// Calabi–Yau criterion. The top level of `V` is spanned by the highest
/// weight line of `U` or of `Ū`, whichever sits higher; that weight must
/// vanish on every unmarked node. A complex `U` with `μ(T) = μ*(T)` puts both
/// lines on top, and a quaternionic `U` doubles it.
pub fn is_calabi_yau(rs: &RootSystem, mu: &Weight, g: &GradingElement) -> Result<CyVerdict> {
    let rcq = classify_rcq(rs, mu, g)?;
    let top = match rcq {
        Rcq::Real => mu.clone(),
        Rcq::Quaternionic => {
            return Ok(CyVerdict {
                is_cy: false,
                reason: "quaternionic: V = U ⊕ U doubles the top level".into(),
            })
        }
        Rcq::Complex => {
            let dual = dual_weight(rs, mu);
            let a = g.eval_weight(rs, mu);
            let b = g.eval_weight(rs, &dual);
            if a == b {
                return Ok(CyVerdict {
                    is_cy: false,
                    reason: format!("complex with μ(T) = μ*(T) = {a}"),
                });
            }
            if a > b {
                mu.clone()
            } else {
                dual
            }
        }
    };
    let bad: Vec<usize> = (0..rs.rank())
        .filter(|&i| g.coeffs()[i] == 0 && !top.0[i].is_zero())
        .collect();
    if !bad.is_empty() {
        let nodes: Vec<String> = bad.iter().map(|i| (i + 1).to_string()).collect();
        return Ok(CyVerdict {
            is_cy: false,
            reason: format!(
                "top weight {top} is nonzero on the unmarked node(s) {}",
                nodes.join(",")
            ),
        });
    }
    let reason = match rcq {
        Rcq::Real => "real, highest weight line is the top level".to_string(),
        _ => format!("complex, top level is the highest weight line of weight {top}"),
    };
    Ok(CyVerdict {
        is_cy: true,
        reason,
    })
}
