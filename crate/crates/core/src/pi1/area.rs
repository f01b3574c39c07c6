//! Bounded search for fillings of a loop by triangle moves.
//!
//! States are cyclic vertex words up to rotation and reversal. A push
//! replaces an edge `ab` by the path `acb` across a face `abc`, a pop does
//! the reverse, and a collapse removes a backtrack `aba -> a` for free.
//! The least number of push and pop moves that reduces the loop to a point
//! bounds the filling area from above.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::complex::{face, Complex2};
use crate::error::{Error, Result};
use crate::loopword::LoopWord;

/// Largest budget accepted by [`area_search`].
pub const AREA_BUDGET_CAP: usize = 16;
/// Default number of distinct words explored before giving up.
pub const AREA_STATE_LIMIT: usize = 500_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Push,
    Pop,
    Collapse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AreaMove {
    pub kind: MoveKind,
    /// Canonical word after the move.
    pub word: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum AreaResult {
    UpperBound { area: usize, trace: Vec<AreaMove> },
    /// No filling within the budget was found. `truncated` is set when the
    /// state limit stopped the search early.
    InconclusiveAtBudget { truncated: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AreaBound {
    #[serde(rename = "loop")]
    pub loop_word: LoopWord,
    pub budget: usize,
    pub states: usize,
    #[serde(flatten)]
    pub result: AreaResult,
}

impl AreaBound {
    pub fn upper_bound(&self) -> Option<usize> {
        match self.result {
            AreaResult::UpperBound { area, .. } => Some(area),
            AreaResult::InconclusiveAtBudget { .. } => None,
        }
    }
}

/// Least rotation of the word or its reverse.
fn canonical(w: &[u32]) -> Vec<u32> {
    let r = w.len();
    if r == 0 {
        return Vec::new();
    }
    // (reversed, offset) of the best rotation so far
    let at = |rev: bool, k: usize, i: usize| {
        let j = (k + i) % r;
        if rev { w[r - 1 - j] } else { w[j] }
    };
    let mut best = (false, 0);
    for rev in [false, true] {
        for k in 0..r {
            let ord = (0..r)
                .map(|i| at(rev, k, i).cmp(&at(best.0, best.1, i)))
                .find(|o| o.is_ne());
            if ord == Some(std::cmp::Ordering::Less) {
                best = (rev, k);
            }
        }
    }
    (0..r).map(|i| at(best.0, best.1, i)).collect()
}

fn third_vertices(x: &Complex2, u: u32, v: u32) -> impl Iterator<Item = u32> + '_ {
    x.incidence()[u as usize].iter().filter_map(move |&i| {
        let f = x.faces()[i as usize];
        f.contains(&v).then(|| f.iter().copied().find(|&c| c != u && c != v).unwrap())
    })
}

fn neighbours(x: &Complex2, w: &[u32], max_len: usize) -> Vec<(MoveKind, Vec<u32>)> {
    let r = w.len();
    let mut out = Vec::new();
    for i in 0..r {
        let prev = w[(i + r - 1) % r];
        let next = w[(i + 1) % r];
        if prev == next {
            let j = (i + 1) % r;
            let kept: Vec<u32> = if r == 2 {
                vec![w[j]]
            } else {
                (0..r).filter(|&k| k != i && k != j).map(|k| w[k]).collect()
            };
            out.push((MoveKind::Collapse, kept));
        } else if r >= 3 && face(prev, w[i], next).is_ok_and(|f| x.has_face(&f)) {
            let mut kept = w.to_vec();
            kept.remove(i);
            out.push((MoveKind::Pop, kept));
        }
    }
    if r < max_len {
        for i in 0..r {
            let (u, v) = (w[i], w[(i + 1) % r]);
            for c in third_vertices(x, u, v) {
                let mut grown = w.to_vec();
                grown.insert(i + 1, c);
                out.push((MoveKind::Push, grown));
            }
        }
    }
    out
}

/// Upper bound on the filling area of `gamma` using at most `budget`
/// triangle moves; words never grow past `|gamma| + budget`.
pub fn area_search(x: &Complex2, gamma: &LoopWord, budget: usize) -> Result<AreaBound> {
    area_search_limited(x, gamma, budget, AREA_STATE_LIMIT)
}

pub fn area_search_limited(
    x: &Complex2,
    gamma: &LoopWord,
    budget: usize,
    state_limit: usize,
) -> Result<AreaBound> {
    if budget > AREA_BUDGET_CAP {
        return Err(Error::BudgetCapExceeded { budget, cap: AREA_BUDGET_CAP });
    }
    // re-validate against this complex
    let gamma = LoopWord::new(x, gamma.vertices().to_vec())?;
    let max_len = gamma.len() + budget;
    let start = canonical(gamma.vertices());
    let mut words: Vec<Vec<u32>> = vec![start.clone()];
    let mut info: Vec<(usize, usize, MoveKind)> = vec![(0, usize::MAX, MoveKind::Collapse)];
    let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(start, 0)]);
    let mut done = vec![false];
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    let mut found = None;
    while let Some(s) = queue.pop_front() {
        if done[s] {
            continue;
        }
        done[s] = true;
        let d = info[s].0;
        if words[s].len() <= 1 {
            found = Some(s);
            break;
        }
        for (kind, w) in neighbours(x, &words[s], max_len) {
            let cost = usize::from(kind != MoveKind::Collapse);
            let nd = d + cost;
            if nd > budget {
                continue;
            }
            let w = canonical(&w);
            let t = match index.get(&w) {
                Some(&t) => t,
                None => {
                    if words.len() >= state_limit {
                        truncated = true;
                        continue;
                    }
                    let t = words.len();
                    index.insert(w.clone(), t);
                    words.push(w);
                    info.push((usize::MAX, usize::MAX, kind));
                    done.push(false);
                    t
                }
            };
            if nd < info[t].0 {
                info[t] = (nd, s, kind);
                if cost == 0 {
                    queue.push_front(t);
                } else {
                    queue.push_back(t);
                }
            }
        }
    }
    let result = match found {
        Some(mut s) => {
            let area = info[s].0;
            let mut trace = Vec::new();
            while info[s].1 != usize::MAX {
                trace.push(AreaMove { kind: info[s].2, word: words[s].clone() });
                s = info[s].1;
            }
            trace.reverse();
            AreaResult::UpperBound { area, trace }
        }
        None => AreaResult::InconclusiveAtBudget { truncated },
    };
    Ok(AreaBound { loop_word: gamma, budget, states: words.len(), result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{k4, rp6, t1, tet, x5};

    #[test]
    fn fixture_areas() {
        let b = area_search(&t1(), &LoopWord::id3(&t1()).unwrap(), 1).unwrap();
        assert_eq!(b.upper_bound(), Some(1));
        let b = area_search(&tet(), &LoopWord::id3(&tet()).unwrap(), 1).unwrap();
        assert_eq!(b.upper_bound(), Some(1));
        let AreaResult::UpperBound { trace, .. } = &b.result else { panic!() };
        assert_eq!(trace.iter().filter(|m| m.kind != MoveKind::Collapse).count(), 1);
        let b = area_search(&k4(), &LoopWord::id3(&k4()).unwrap(), 10).unwrap();
        assert_eq!(b.result, AreaResult::InconclusiveAtBudget { truncated: false });
    }

    #[test]
    fn budget_cap() {
        let g = LoopWord::id3(&t1()).unwrap();
        assert_eq!(
            area_search(&t1(), &g, 17),
            Err(Error::BudgetCapExceeded { budget: 17, cap: AREA_BUDGET_CAP })
        );
    }

    #[test]
    fn square_in_tet_needs_two() {
        let x = tet();
        let g = LoopWord::new(&x, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(area_search(&x, &g, 4).unwrap().upper_bound(), Some(2));
        assert_eq!(area_search(&x, &g, 1).unwrap().upper_bound(), None);
    }

    #[test]
    fn noncontractible_loops_stay_open() {
        let g = LoopWord::id3(&x5()).unwrap();
        assert_eq!(area_search(&x5(), &g, 6).unwrap().upper_bound(), None);
        // the RP^2 triangulation: 1-2-3 is a face, so area one
        let g = LoopWord::id3(&rp6()).unwrap();
        assert_eq!(area_search(&rp6(), &g, 3).unwrap().upper_bound(), Some(1));
    }

    #[test]
    fn invariant_under_rotation_and_reversal() {
        let x = tet();
        let g = LoopWord::new(&x, vec![1, 2, 3, 4]).unwrap();
        let base = area_search(&x, &g, 4).unwrap().upper_bound();
        for k in 0..4 {
            assert_eq!(area_search(&x, &g.rotated(k), 4).unwrap().upper_bound(), base);
            assert_eq!(area_search(&x, &g.rotated(k).reversed(), 4).unwrap().upper_bound(), base);
        }
    }
}
