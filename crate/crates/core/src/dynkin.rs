//! Identification of connected Dynkin diagrams.
//!
//! Given a connected Cartan matrix, recover its type and a Bourbaki
//! numbering of its nodes. Used to name factors of Schubert varieties and
//! to type the Levi subsystems produced by a grading.

use crate::root_system::{Family, LieType};

/// Identifies a connected Cartan matrix. Returns the type and `order`,
/// where `order[k]` is the local index of Bourbaki node `k + 1`.
///
/// A rank-two double bond is reported as `B2`.
pub fn identify(cartan: &[Vec<i64>], sym: &[i64]) -> Option<(LieType, Vec<usize>)> {
    identify_with(cartan, sym, false)
}

/// Like [`identify`], reporting a rank-two double bond as `C2` when
/// `prefer_c` is set.
pub fn identify_with(
    cartan: &[Vec<i64>],
    sym: &[i64],
    prefer_c: bool,
) -> Option<(LieType, Vec<usize>)> {
    let n = cartan.len();
    let t = |f, r| LieType::new(f, r).ok();
    if n == 1 {
        return Some((t(Family::A, 1)?, vec![0]));
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && cartan[i][j] != 0).collect())
        .collect();
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edges != n - 1 {
        return None;
    }
    let mult = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    let branch: Vec<usize> = (0..n).filter(|&i| adj[i].len() >= 3).collect();
    if adj.iter().any(|a| a.len() > 3) || branch.len() > 1 {
        return None;
    }

    if branch.is_empty() {
        let start = (0..n).find(|&i| adj[i].len() == 1)?;
        let mut path = walk(&adj, start, usize::MAX);
        let bonds: Vec<i64> = path.windows(2).map(|w| mult(w[0], w[1])).collect();
        let multiple: Vec<usize> = (0..bonds.len()).filter(|&k| bonds[k] > 1).collect();
        match multiple.as_slice() {
            [] => Some((t(Family::A, n)?, path)),
            [k] if bonds[*k] == 3 => {
                if sym[path[0]] > sym[path[1]] {
                    path.reverse();
                }
                Some((t(Family::G, 2)?, path))
            }
            [k] if bonds[*k] == 2 => {
                if n == 2 {
                    let long_first = sym[path[0]] > sym[path[1]];
                    if long_first == prefer_c {
                        path.reverse();
                    }
                    let f = if prefer_c { Family::C } else { Family::B };
                    return Some((t(f, 2)?, path));
                }
                if n == 4 && *k == 1 {
                    if sym[path[0]] < sym[path[3]] {
                        path.reverse();
                    }
                    return Some((t(Family::F, 4)?, path));
                }
                if *k == 0 {
                    path.reverse();
                } else if *k != n - 2 {
                    return None;
                }
                let last_long = sym[path[n - 1]] > sym[path[n - 2]];
                let f = if last_long { Family::C } else { Family::B };
                Some((t(f, n)?, path))
            }
            _ => None,
        }
    } else {
        let c = branch[0];
        if (0..n).any(|i| adj[i].iter().any(|&j| mult(i, j) != 1)) {
            return None;
        }
        let mut arms: Vec<Vec<usize>> = adj[c].iter().map(|&s| walk(&adj, s, c)).collect();
        // Shorter arms first; ties broken by the smallest end index.
        arms.sort_by_key(|a| (a.len(), *a.last().unwrap()));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        let rev = |a: &Vec<usize>| a.iter().rev().copied().collect::<Vec<_>>();
        match lens.as_slice() {
            [1, 1, k] => {
                let mut order = rev(&arms[2]);
                debug_assert_eq!(order.len(), *k);
                order.push(c);
                order.push(arms[0][0]);
                order.push(arms[1][0]);
                Some((t(Family::D, n)?, order))
            }
            [1, 2, k] if (2..=4).contains(k) => {
                let (a2, ak) = if *k == 2 {
                    // E6: node 1 is the end with the smaller local index.
                    if arms[1][1] < arms[2][1] {
                        (&arms[1], &arms[2])
                    } else {
                        (&arms[2], &arms[1])
                    }
                } else {
                    (&arms[1], &arms[2])
                };
                let mut order = vec![a2[1], arms[0][0], a2[0], c];
                order.extend(ak.iter().copied());
                Some((t(Family::E, n)?, order))
            }
            _ => None,
        }
    }
}

/// Walks a simple path from `start`, never stepping back to `from`.
fn walk(adj: &[Vec<usize>], start: usize, from: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = from;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev && !path.contains(&x)) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}
