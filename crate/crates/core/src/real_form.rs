//! Real forms from gradings, via Vogan diagrams.
//!
//! A grading paints each simple root compact (even level) or noncompact
//! (odd level). A breadth-first search over the Weyl group finds a simple
//! system `wΣ` with at most one noncompact root, and the real form is read
//! from a lookup table keyed by that node.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;

use crate::grading::GradingElement;
use crate::root_system::{Family, LieType, Root, RootSystem};
use crate::weyl::{word_string, WeylElement};
use crate::{Error, Result};

const DEFAULT_TABLE: &str = include_str!("../data/real_forms.txt");

/// Dynkin diagram with its noncompact nodes; the diagram involution is
/// trivial since only inner forms arise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoganDiagram {
    pub lie_type: LieType,
    /// 0-based noncompact nodes of the normalized diagram.
    pub noncompact_nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFormName {
    pub label: String,
}

impl fmt::Display for RealFormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Result of [`identify_real_form`].
#[derive(Debug, Clone)]
pub struct RealFormResult {
    pub witness: WeylElement,
    /// The reduced word found by the search, 0-based.
    pub witness_word: Vec<u8>,
    /// `wσ_j` for every simple root.
    pub images: Vec<Root>,
    pub vogan: VoganDiagram,
    pub name: RealFormName,
}

impl RealFormResult {
    pub fn witness_string(&self) -> String {
        word_string(&self.witness_word)
    }
}

#[derive(Debug, Clone)]
enum NodeSpec {
    Any,
    Less(Expr),
    LessEq(Expr),
    OneOf(Vec<Expr>),
}

/// Integer linear expression in `p` and `r`.
#[derive(Debug, Clone, Default)]
struct Expr {
    c: i64,
    p: i64,
    r: i64,
}

impl Expr {
    fn parse(s: &str) -> Result<Expr> {
        let bad = || Error::Invalid(format!("bad expression {s:?} in real form table"));
        let mut e = Expr::default();
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            let var = body.chars().last().filter(|c| *c == 'p' || *c == 'r');
            let digits = if var.is_some() {
                &body[..body.len() - 1]
            } else {
                body
            };
            let k: i64 = if digits.is_empty() {
                if var.is_none() {
                    return Err(bad());
                }
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            match var {
                Some('p') => e.p += sign * k,
                Some('r') => e.r += sign * k,
                _ => e.c += sign * k,
            }
        }
        Ok(e)
    }

    fn eval(&self, p: i64, r: i64) -> i64 {
        self.c + self.p * p + self.r * r
    }
}

#[derive(Debug, Clone)]
struct Row {
    family: Family,
    rank: Option<usize>,
    node: NodeSpec,
    label: String,
}

/// Lookup table of real-form names.
#[derive(Debug, Clone)]
pub struct RealFormTable {
    pub version: u32,
    rows: Vec<Row>,
}

impl RealFormTable {
    /// The table shipped with the crate, or the file named by the
    /// `HS_REALFORM_TABLE` environment variable when set.
    pub fn load_default() -> Result<RealFormTable> {
        match std::env::var_os("HS_REALFORM_TABLE") {
            Some(p) => RealFormTable::load(Path::new(&p)),
            None => RealFormTable::parse(DEFAULT_TABLE),
        }
    }

    pub fn load(path: &Path) -> Result<RealFormTable> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
        RealFormTable::parse(&text)
    }

    pub fn parse(text: &str) -> Result<RealFormTable> {
        let mut version = 0;
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(v) = line.strip_prefix("version") {
                version = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid("bad table version".into()))?;
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().take(3).collect();
            let rest = line
                .split_whitespace()
                .skip(3)
                .collect::<Vec<_>>()
                .join(" ");
            if fields.len() < 3 || rest.is_empty() {
                return Err(Error::Invalid(format!("malformed table row {line:?}")));
            }
            let family = Family::parse(fields[0])?;
            let rank = if fields[1] == "*" {
                None
            } else {
                Some(
                    fields[1]
                        .parse()
                        .map_err(|_| Error::Invalid(format!("bad rank in {line:?}")))?,
                )
            };
            let n = fields[2];
            let node = if n == "p" {
                NodeSpec::Any
            } else if let Some(e) = n.strip_prefix("p<=") {
                NodeSpec::LessEq(Expr::parse(e)?)
            } else if let Some(e) = n.strip_prefix("p<") {
                NodeSpec::Less(Expr::parse(e)?)
            } else {
                NodeSpec::OneOf(n.split(',').map(Expr::parse).collect::<Result<_>>()?)
            };
            rows.push(Row {
                family,
                rank,
                node,
                label: rest,
            });
        }
        Ok(RealFormTable { version, rows })
    }

    /// Label for type `t` with noncompact node `node` (0-based), or
    /// `compact` when there is none.
    pub fn lookup(&self, t: LieType, node: Option<usize>) -> Result<RealFormName> {
        let Some(node) = node else {
            return Ok(RealFormName {
                label: "compact".into(),
            });
        };
        let p = node as i64 + 1;
        let r = t.rank as i64;
        for row in &self.rows {
            if row.family != t.family || row.rank.is_some_and(|k| k != t.rank) {
                continue;
            }
            let hit = match &row.node {
                NodeSpec::Any => true,
                NodeSpec::Less(e) => p < e.eval(p, r),
                NodeSpec::LessEq(e) => p <= e.eval(p, r),
                NodeSpec::OneOf(es) => es.iter().any(|e| e.eval(p, r) == p),
            };
            if hit {
                return Ok(RealFormName {
                    label: render(&row.label, p, r)?,
                });
            }
        }
        Err(Error::Invalid(format!(
            "no real form entry for {t} node {p}"
        )))
    }
}

fn render(label: &str, p: i64, r: i64) -> Result<String> {
    let mut out = String::new();
    let mut rest = label;
    while let Some(i) = rest.find('{') {
        out.push_str(&rest[..i]);
        let j = rest[i..]
            .find('}')
            .ok_or_else(|| Error::Invalid(format!("unclosed brace in {label:?}")))?;
        out.push_str(&Expr::parse(&rest[i + 1..i + j])?.eval(p, r).to_string());
        rest = &rest[i + j + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

/// Finds `w` such that at most one `wσ_j` has odd level, and names the
/// resulting real form. The search is breadth-first in word length with
/// generators in increasing order, so the witness is reproducible.
pub fn identify_real_form(
    rs: &RootSystem,
    g: &GradingElement,
    table: &RealFormTable,
    cap: usize,
) -> Result<RealFormResult> {
    let t = rs
        .lie_type()
        .ok_or_else(|| Error::Invalid("real forms need a simple root system".into()))?;
    let r = rs.rank();
    let cartan = rs.cartan();
    let odd = |images: &[Root]| -> Vec<usize> {
        (0..r)
            .filter(|&j| g.level(&images[j]).rem_euclid(2) == 1)
            .collect()
    };

    let start: Vec<Root> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut states: Vec<(Vec<Root>, usize, u8)> = vec![(start.clone(), usize::MAX, 0)];
    let mut seen: HashSet<Vec<Root>> = HashSet::from([start]);
    let mut k = 0;
    while k < states.len() {
        let images = states[k].0.clone();
        let nc = odd(&images);
        if nc.len() <= 1 {
            let mut word = Vec::new();
            let mut at = k;
            while states[at].1 != usize::MAX {
                word.push(states[at].2);
                at = states[at].1;
            }
            word.reverse();
            let witness =
                WeylElement::from_word(rs, &word.iter().map(|&i| i as usize).collect::<Vec<_>>())?;
            let name = table.lookup(t, nc.first().copied())?;
            return Ok(RealFormResult {
                witness,
                witness_word: word,
                images,
                vogan: VoganDiagram {
                    lie_type: t,
                    noncompact_nodes: nc,
                },
                name,
            });
        }
        for i in 0..r {
            // (w r_i) σ_j = wσ_j − A_ji wσ_i
            let next: Vec<Root> = (0..r)
                .map(|j| {
                    images[j]
                        .iter()
                        .zip(&images[i])
                        .map(|(a, b)| a - cartan[j][i] * b)
                        .collect()
                })
                .collect();
            if seen.insert(next.clone()) {
                if states.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "real form search",
                        cap,
                    });
                }
                states.push((next, k, i as u8));
            }
        }
        k += 1;
    }
    Err(Error::Inconsistent(
        "no normalized Vogan diagram exists".into(),
    ))
}

/// Dimension of the maximal compact subalgebra `k` of the real form given by
/// a grading: the rank plus twice the number of positive roots of even level.
pub fn compact_dimension(rs: &RootSystem, g: &GradingElement) -> usize {
    rs.rank()
        + 2 * rs
            .positive_roots()
            .iter()
            .filter(|v| g.level(v) % 2 == 0)
            .count()
}

/// Dimension of `k` implied by a table label.
pub fn label_compact_dimension(label: &str) -> Option<usize> {
    let nums = |s: &str| -> Option<Vec<usize>> {
        let inner = s.split_once('(')?.1.strip_suffix(')')?;
        inner.split(',').map(|x| x.trim().parse().ok()).collect()
    };
    let simple = |s: &str| -> Option<usize> {
        let s = s.trim();
        Some(match s {
            "R" => 1,
            "e6" => 78,
            "e7" => 133,
            _ if s.starts_with("su(") => {
                let n = nums(s)?[0];
                n * n - 1
            }
            _ if s.starts_with("so(") => {
                let n = nums(s)?[0];
                n * (n - 1) / 2
            }
            _ => return None,
        })
    };
    let h: HashMap<&str, usize> =
        HashMap::from([("F I", 24), ("F II", 36), ("split G2", 6), ("compact", 0)]);
    if let Some(&d) = h.get(label) {
        return Some(d);
    }
    if let Some((_, k)) = label.split_once("k = ") {
        return k.split('⊕').map(simple).sum();
    }
    if let Some(rest) = label.strip_prefix("so*(") {
        let n: usize = rest.strip_suffix(')')?.parse().ok()?;
        return Some((n / 2) * (n / 2));
    }
    if let Some(n) = label
        .strip_prefix("sp(")
        .and_then(|s| s.strip_suffix(",R)"))
    {
        let n: usize = n.parse().ok()?;
        return Some(n * n);
    }
    let v = nums(label)?;
    if label.starts_with("su(") {
        Some(v[0] * v[0] + v[1] * v[1] - 1)
    } else if label.starts_with("so(") {
        Some(v[0] * (v[0] - 1) / 2 + v[1] * (v[1] - 1) / 2)
    } else if label.starts_with("sp(") {
        Some(v[0] * (2 * v[0] + 1) + v[1] * (2 * v[1] + 1))
    } else {
        None
    }
}
