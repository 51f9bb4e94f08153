//! Weyl group elements, inversion sets and minimal coset representatives.
//!
//! A word `(i1 i2 ... il)` denotes `r_i1 r_i2 ... r_il` acting on the left,
//! so `Δ(w) = {σ_i1, r_i1 σ_i2, r_i1 r_i2 σ_i3, ...}` for a reduced word.
//! Elements are identified by their inversion set; the stored word is the
//! lexicographically greatest reduced word.

use std::fmt;

use rayon::prelude::*;

use crate::root_system::{Root, RootSet, RootSystem, Weight};
use crate::{Error, Result};

/// An element of the Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<u8>,
    inv: RootSet,
}

impl WeylElement {
    pub fn identity() -> WeylElement {
        WeylElement {
            word: Vec::new(),
            inv: RootSet::EMPTY,
        }
    }

    /// Element given by a word of 0-based simple-reflection indices. The word
    /// need not be reduced.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
        let n = rs.num_positive();
        let mut inv = RootSet::EMPTY;
        for (k, &i) in word.iter().enumerate() {
            if i >= rs.rank() {
                return Err(Error::Invalid(format!(
                    "simple reflection {} out of range",
                    i + 1
                )));
            }
            let id = act_word(rs, &word[..k], i);
            if id < n {
                inv.insert(id);
            } else {
                inv.remove(id - n);
            }
        }
        Ok(WeylElement::from_valid_inversion_set(rs, inv))
    }

    /// Parses the concatenated 1-based notation used in tables, e.g. `"(2312)"`.
    pub fn from_compact_word(rs: &RootSystem, s: &str) -> Result<WeylElement> {
        let digits: Vec<usize> = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ' ' | ','))
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d >= 1)
                    .map(|d| d as usize - 1)
                    .ok_or_else(|| Error::Invalid(format!("bad word {s:?}")))
            })
            .collect::<Result<_>>()?;
        WeylElement::from_word(rs, &digits)
    }

    /// Element with the given inversion set, if it is one.
    pub fn from_inversion_set(rs: &RootSystem, inv: RootSet) -> Option<WeylElement> {
        rs.is_inversion_set(inv)
            .then(|| WeylElement::from_valid_inversion_set(rs, inv))
    }

    pub(crate) fn from_valid_inversion_set(rs: &RootSystem, inv: RootSet) -> WeylElement {
        WeylElement {
            word: canonical_word(rs, inv),
            inv,
        }
    }

    /// Canonical reduced word, 0-based.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn word_usize(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `Δ(w) = Δ⁺ ∩ wΔ⁻` as a bitset.
    pub fn inv_set(&self) -> RootSet {
        self.inv
    }

    /// `Δ(w)` as explicit roots.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Root> {
        self.inv
            .iter()
            .map(|i| rs.positive_roots()[i].clone())
            .collect()
    }

    /// Image of a signed root id.
    pub fn apply_id(&self, rs: &RootSystem, id: usize) -> usize {
        self.word
            .iter()
            .rev()
            .fold(id, |acc, &i| rs.reflection_table(i as usize)[acc])
    }

    /// Image of a root, or of any vector in root coordinates.
    pub fn apply(&self, rs: &RootSystem, v: &[i64]) -> Root {
        if let Some(id) = rs.root_id(v) {
            return rs.root_vec(self.apply_id(rs, id));
        }
        let mut out = v.to_vec();
        for &i in self.word.iter().rev() {
            let i = i as usize;
            let c = rs.coroot_pairing(&out, i);
            out[i] -= c;
        }
        out
    }

    /// Image of a weight in fundamental coordinates.
    pub fn apply_weight(&self, rs: &RootSystem, w: &Weight) -> Weight {
        let mut out = w.clone();
        for &i in self.word.iter().rev() {
            rs.reflect_weight(i as usize, &mut out);
        }
        out
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let rev: Vec<usize> = self.word.iter().rev().map(|&i| i as usize).collect();
        WeylElement::from_word(rs, &rev).expect("valid indices")
    }

    /// `ϱ_w = ϱ − w(ϱ)`.
    pub fn rho_w(&self, rs: &RootSystem) -> Weight {
        let rho = rs.rho();
        rho.sub(&self.apply_weight(rs, &rho))
    }

    /// Sum of the roots in `Δ(w)`, in root coordinates.
    pub fn inversion_sum(&self, rs: &RootSystem) -> Root {
        let mut s = vec![0; rs.rank()];
        for i in self.inv.iter() {
            for (x, y) in s.iter_mut().zip(&rs.positive_roots()[i]) {
                *x += y;
            }
        }
        s
    }

    /// Concatenated 1-based word, e.g. `(2312)`; `e` for the identity.
    pub fn compact_word(&self) -> String {
        word_string(&self.word)
    }

    /// Explicit product of reflections, e.g. `r2 r3 r1 r2`.
    pub fn explicit_word(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        self.word
            .iter()
            .map(|i| format!("r{}", i + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact_word())
    }
}

/// Concatenated 1-based notation for a 0-based word.
pub fn word_string(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    let sep = if word.iter().any(|&i| i >= 9) {
        ","
    } else {
        ""
    };
    let body: Vec<String> = word.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", body.join(sep))
}

/// `w σ_i` as a signed root id, where `w` is given by a word.
fn act_word<T: Copy + Into<usize>>(rs: &RootSystem, word: &[T], i: usize) -> usize {
    word.iter()
        .rev()
        .fold(i, |acc, &j| rs.reflection_table(j.into())[acc])
}

/// Lexicographically greatest reduced word for an inversion set.
fn canonical_word(rs: &RootSystem, mut inv: RootSet) -> Vec<u8> {
    let mut word = Vec::with_capacity(inv.len());
    while !inv.is_empty() {
        let i = (0..rs.rank())
            .rev()
            .find(|&i| inv.contains(i))
            .expect("a nonempty inversion set contains a simple root");
        word.push(i as u8);
        inv.remove(i);
        let t = rs.reflection_table(i);
        inv = inv.iter().map(|a| t[a]).collect();
    }
    word
}

/// Enumerates `{w : Δ(w) ⊂ mask}` breadth-first by right multiplication.
///
/// With `mask = Δ(g_+)` this is the set of minimal coset representatives,
/// and with `mask = Δ(g_1)` its subset indexing Schubert VHS. Both sets are
/// closed under taking prefixes of reduced words. Results are sorted by
/// `(length, inv_set)`.
pub fn enumerate_masked(
    rs: &RootSystem,
    mask: RootSet,
    max_length: Option<usize>,
    cap: usize,
) -> Result<Vec<WeylElement>> {
    let n = rs.num_positive();
    let mut all: Vec<(RootSet, Vec<u8>)> = vec![(RootSet::EMPTY, Vec::new())];
    let mut frontier = all.clone();
    let mut len = 0;
    while !frontier.is_empty() && max_length.is_none_or(|m| len < m) {
        let mut next: Vec<(RootSet, Vec<u8>)> = frontier
            .par_iter()
            .flat_map_iter(|(inv, word)| {
                (0..rs.rank()).filter_map(move |i| {
                    let id = act_word(rs, word, i);
                    (id < n && mask.contains(id)).then(|| {
                        let mut w = word.clone();
                        w.push(i as u8);
                        let mut s = *inv;
                        s.insert(id);
                        (s, w)
                    })
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup_by(|a, b| a.0 == b.0);
        if all.len() + next.len() > cap {
            return Err(Error::CapExceeded {
                what: "Weyl group enumeration",
                cap,
            });
        }
        all.extend(next.iter().cloned());
        frontier = next;
        len += 1;
    }
    Ok(all
        .into_par_iter()
        .map(|(inv, _)| WeylElement::from_valid_inversion_set(rs, inv))
        .collect())
}

/// The longest element, with `Δ(w_0) = Δ⁺`.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    WeylElement::from_valid_inversion_set(rs, rs.all_positive())
}

/// The diagram involution `−w_0`, as a permutation of 0-based nodes.
pub fn minus_w0_involution(rs: &RootSystem) -> Vec<usize> {
    let w0 = longest_element(rs);
    let n = rs.num_positive();
    (0..rs.rank())
        .map(|i| {
            let id = w0.apply_id(rs, i);
            debug_assert!(id >= n);
            id - n
        })
        .collect()
}

/// Covers of `w` inside the lower set `{v : Δ(v) ⊂ mask}`: the elements `w'`
/// with `Δ(w') = Δ(w) ∪ {α}`, listed with the positive index of `α`.
pub fn bruhat_covers(rs: &RootSystem, w: &WeylElement, mask: RootSet) -> Vec<(usize, WeylElement)> {
    mask.minus(w.inv)
        .iter()
        .filter_map(|a| {
            let mut s = w.inv;
            s.insert(a);
            rs.is_inversion_set(s)
                .then(|| (a, WeylElement::from_valid_inversion_set(rs, s)))
        })
        .collect()
}

/// Order of the Weyl group, `Π (e_i + 1)` over the exponents, which are
/// read off from the number of positive roots of each height.
pub fn weyl_group_order(rs: &RootSystem) -> u128 {
    let mut by_height = std::collections::BTreeMap::<i64, i64>::new();
    for v in rs.positive_roots() {
        *by_height.entry(RootSystem::height(v)).or_default() += 1;
    }
    // The partition dual to the height distribution gives the exponents.
    let mut counts: Vec<i64> = by_height.values().copied().collect();
    let mut exps = Vec::new();
    let r = rs.rank() as i64;
    let mut prev = r;
    for (h, c) in counts.iter_mut().enumerate() {
        for _ in 0..(prev - *c) {
            exps.push(h as u128);
        }
        prev = *c;
    }
    for _ in 0..prev {
        exps.push(counts.len() as u128);
    }
    exps.iter().map(|e| e + 1).product()
}
