//! Brute-force oracles shared by the integration tests. None of these call the
//! library's reduction, poset or projection code; they only use the diagram's
//! commutation table and the building's group operations.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use racb_core::building::{Building, Chamber, Residue};
use racb_core::coxeter::{CoxeterDiagram, Gen, GroupElement, Word};

pub type Letters = Vec<u8>;

pub fn commutes(d: &CoxeterDiagram, a: u8, b: u8) -> bool {
    a != b && d.commutes(Gen(a), Gen(b))
}

pub fn to_word(letters: &[u8]) -> Word {
    letters.iter().map(|&x| Gen(x)).collect()
}

pub fn from_word(w: &Word) -> Letters {
    w.letters().iter().map(|g| g.0).collect()
}

/// Every word reachable from `w` by deleting an adjacent `ss` or swapping
/// adjacent commuting letters.
pub fn elementary_closure(d: &CoxeterDiagram, w: &[u8]) -> HashSet<Letters> {
    let mut seen: HashSet<Letters> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(x) = queue.pop_front() {
        for i in 0..x.len().saturating_sub(1) {
            let mut next = None;
            if x[i] == x[i + 1] {
                let mut y = x.clone();
                y.drain(i..i + 2);
                next = Some(y);
            } else if commutes(d, x[i], x[i + 1]) {
                let mut y = x.clone();
                y.swap(i, i + 1);
                next = Some(y);
            }
            if let Some(y) = next {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

/// Shortest words of the closure, least in lexicographic order by generator
/// index.
pub fn oracle_normal_form(d: &CoxeterDiagram, w: &[u8]) -> Letters {
    let closure = elementary_closure(d, w);
    let min = closure.iter().map(Vec::len).min().unwrap();
    closure.into_iter().filter(|x| x.len() == min).min().unwrap()
}

/// Closure of a word under commuting swaps, tracking the original position
/// (0-based) of each letter.
pub fn labelled_swap_closure(d: &CoxeterDiagram, w: &[u8]) -> HashSet<Vec<(u8, usize)>> {
    let start: Vec<(u8, usize)> = w.iter().copied().zip(0..).collect();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        for i in 0..x.len().saturating_sub(1) {
            if commutes(d, x[i].0, x[i + 1].0) {
                let mut y = x.clone();
                y.swap(i, i + 1);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

/// Reduced iff no word reachable by commuting swaps has two equal adjacent
/// letters.
pub fn oracle_is_reduced(d: &CoxeterDiagram, w: &[u8]) -> bool {
    labelled_swap_closure(d, w)
        .iter()
        .all(|x| x.windows(2).all(|p| p[0].0 != p[1].0))
}

/// All reduced representations of a reduced word.
pub fn oracle_reps(d: &CoxeterDiagram, w: &[u8]) -> BTreeSet<Letters> {
    labelled_swap_closure(d, w)
        .into_iter()
        .map(|x| x.into_iter().map(|p| p.0).collect())
        .collect()
}

/// Pairs `(i, j)` (1-based) such that the letter at `i` stands left of the
/// letter at `j` in every reduced representation.
pub fn oracle_relation(d: &CoxeterDiagram, w: &[u8]) -> Vec<(usize, usize)> {
    let reps = labelled_swap_closure(d, w);
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let always = reps.iter().all(|x| {
                let pi = x.iter().position(|p| p.1 == i).unwrap();
                let pj = x.iter().position(|p| p.1 == j).unwrap();
                pi < pj
            });
            if always {
                out.push((i + 1, j + 1));
            }
        }
    }
    out.sort();
    out
}

/// Every reduced representation ends in the same letter.
pub fn oracle_is_firm(d: &CoxeterDiagram, w: &[u8]) -> bool {
    let reps = oracle_reps(d, w);
    let lasts: HashSet<u8> = reps.iter().map(|x| *x.last().unwrap()).collect();
    !w.is_empty() && lasts.len() == 1
}

/// Longest firm prefix over all reduced representations.
pub fn oracle_firmness(d: &CoxeterDiagram, w: &[u8]) -> usize {
    let mut memo: HashMap<Letters, bool> = HashMap::new();
    let mut best = 0;
    for rep in oracle_reps(d, w) {
        for k in (best + 1..=rep.len()).rev() {
            let prefix = rep[..k].to_vec();
            let firm = *memo
                .entry(prefix.clone())
                .or_insert_with(|| oracle_is_firm(d, &prefix));
            if firm {
                best = k;
                break;
            }
        }
    }
    best
}

/// All words over the diagram's generators of length at most `max`.
pub fn all_words(d: &CoxeterDiagram, max: usize) -> Vec<Letters> {
    let r = d.rank() as u8;
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..r {
                let mut x: Letters = w.clone();
                x.push(s);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// All reduced words of length at most `max` (prefixes of reduced words are
/// reduced, so the search prunes).
pub fn reduced_words(d: &CoxeterDiagram, max: usize) -> Vec<Letters> {
    let r = d.rank() as u8;
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Letters> = vec![Vec::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..r {
                let mut x = w.clone();
                x.push(s);
                if oracle_is_reduced(d, &x) {
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Distinct group elements of length at most `max`, one ShortLex word each.
pub fn elements_up_to(d: &CoxeterDiagram, max: usize) -> Vec<Letters> {
    let mut seen = BTreeSet::new();
    for w in reduced_words(d, max) {
        seen.insert(oracle_normal_form(d, &w));
    }
    seen.into_iter().collect()
}

pub fn element(d: &CoxeterDiagram, w: &[u8]) -> GroupElement {
    racb_core::coxeter::reduce(d, &to_word(w)).unwrap()
}

/// All chambers adjacent to `x`.
pub fn neighbours(b: &Building, x: &Chamber) -> Vec<(Gen, Chamber)> {
    let mut out = Vec::new();
    for s in b.diagram().generators() {
        for v in 1..b.thickness(s) {
            out.push((s, b.step(x, s, v)));
        }
    }
    out
}

/// Breadth-first distances from `c0` in the chamber graph, up to `radius`.
pub fn bfs_ball(b: &Building, c0: &Chamber, radius: usize) -> HashMap<Chamber, usize> {
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(c0.clone(), 0);
    queue.push_back(c0.clone());
    while let Some(x) = queue.pop_front() {
        let k = dist[&x];
        if k == radius {
            continue;
        }
        for (_, y) in neighbours(b, &x) {
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), k + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Chambers of a residue by breadth-first search over its colors.
pub fn residue_members(b: &Building, r: &Residue) -> Vec<Chamber> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(r.base.clone());
    queue.push_back(r.base.clone());
    while let Some(x) = queue.pop_front() {
        for (s, y) in neighbours(b, &x) {
            if r.types.contains(s) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Chamber> = seen.into_iter().collect();
    out.sort();
    out
}

/// The unique chamber of `members` nearest to `x`; panics on a tie.
pub fn argmin_projection(b: &Building, members: &[Chamber], x: &Chamber) -> Chamber {
    let best = members.iter().map(|y| b.gallery_distance(x, y)).min().unwrap();
    let at: Vec<&Chamber> = members
        .iter()
        .filter(|y| b.gallery_distance(x, y) == best)
        .collect();
    assert_eq!(at.len(), 1, "projection is not unique");
    at[0].clone()
}

/// Building of a named fixture diagram with uniform thickness.
pub fn building(d: CoxeterDiagram, q: u32) -> Building {
    Building::new(racb_core::fixtures::thick(d, q)).unwrap()
}
