//! Exhaustive searches over reduced increasing sequences.
//!
//! The three quantities here only have existence proofs in general, so every
//! value is the exact maximum (or minimum) for the given diagram, found by
//! search under an explicit cap on visited states.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{firmness, next_sphere, CoxeterDiagram, Gen, GroupElement};
use crate::error::{Error, Result};

/// Default bound on the number of states or canonical forms a search may visit.
pub const DEFAULT_LAB_CAP: usize = 10_000_000;

/// A base element together with a sequence of generators applied on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncreasingSequence {
    pub base: GroupElement,
    pub steps: Vec<Gen>,
}

impl IncreasingSequence {
    /// The elements `base r_1 ... r_i` for `i = 0..=steps.len()`.
    pub fn elements(&self, d: &CoxeterDiagram) -> Result<Vec<GroupElement>> {
        let mut current = self.base.clone();
        let mut out = vec![current.clone()];
        for &r in &self.steps {
            current = current.multiply(d, r)?.0;
            out.push(current.clone());
        }
        Ok(out)
    }
}

/// Whether every step of `steps`, applied to `base`, increases the length.
pub fn is_increasing(d: &CoxeterDiagram, base: &GroupElement, steps: &[Gen]) -> Result<bool> {
    let mut current = base.clone();
    for &r in steps {
        let (next, sign) = current.multiply(d, r)?;
        if sign.value() < 0 {
            return Ok(false);
        }
        current = next;
    }
    Ok(true)
}

/// Length of the longest subsequence whose consecutive members are free
/// (`m = ∞`) pairs, ending at each index.
pub fn free_chain_lengths(d: &CoxeterDiagram, steps: &[Gen]) -> Vec<usize> {
    let mut lengths: Vec<usize> = Vec::with_capacity(steps.len());
    for (j, &r) in steps.iter().enumerate() {
        let best = (0..j)
            .filter(|&i| d.is_free(steps[i], r))
            .map(|i| lengths[i])
            .max()
            .unwrap_or(0);
        lengths.push(best + 1);
    }
    lengths
}

#[derive(Debug, Clone)]
pub struct BoundedChainSequence {
    pub length: usize,
    pub witness: IncreasingSequence,
}

// Search state: the current element plus, per generator, the longest free
// chain ending at a step with that generator.
type ChainState = (GroupElement, Vec<u8>);

struct ChainSearch<'a> {
    d: &'a CoxeterDiagram,
    b: usize,
    cap: usize,
    memo: HashMap<ChainState, usize>,
}

impl ChainSearch<'_> {
    fn moves(&self, state: &ChainState) -> Vec<(Gen, ChainState)> {
        let (g, ends) = state;
        let mut out = Vec::new();
        for r in self.d.generators() {
            if g.is_descent(self.d, r) {
                continue;
            }
            let longest = self
                .d
                .generators()
                .filter(|&t| self.d.is_free(t, r))
                .map(|t| ends[t.index()] as usize)
                .max()
                .unwrap_or(0)
                + 1;
            if longest > self.b {
                continue;
            }
            let mut next_ends = ends.clone();
            let slot = &mut next_ends[r.index()];
            *slot = (*slot).max(longest as u8);
            out.push((r, (g.ascend(self.d, r), next_ends)));
        }
        out
    }

    fn longest(&mut self, state: &ChainState) -> Result<usize> {
        if let Some(&v) = self.memo.get(state) {
            return Ok(v);
        }
        if self.memo.len() >= self.cap {
            return Err(Error::CapExceeded { cap: self.cap });
        }
        let mut best = 0;
        for (_, next) in self.moves(state) {
            best = best.max(1 + self.longest(&next)?);
        }
        self.memo.insert(state.clone(), best);
        Ok(best)
    }
}

/// Longest reduced increasing sequence from the identity in which every
/// subsequence of pairwise consecutive free letters has at most `b`
/// elements, together with one sequence attaining it.
pub fn max_bounded_chain_sequence(
    d: &CoxeterDiagram,
    b: usize,
    cap: usize,
) -> Result<BoundedChainSequence> {
    if b < 1 {
        return Err(Error::InvalidParameter("b must be at least 1".into()));
    }
    if b > u8::MAX as usize {
        return Err(Error::InvalidParameter("b must be at most 255".into()));
    }
    let mut search = ChainSearch { d, b, cap, memo: HashMap::new() };
    let start: ChainState = (GroupElement::identity(), vec![0; d.rank()]);
    let length = search.longest(&start)?;

    let mut steps = Vec::with_capacity(length);
    let mut state = start;
    while steps.len() < length {
        let remaining = length - steps.len();
        let (r, next) = search
            .moves(&state)
            .into_iter()
            .find(|(_, next)| search.memo.get(next).is_some_and(|&v| v + 1 == remaining))
            .expect("memoized optimum is attained by some move");
        steps.push(r);
        state = next;
    }
    Ok(BoundedChainSequence {
        length,
        witness: IncreasingSequence { base: GroupElement::identity(), steps },
    })
}

/// Longest reduced increasing `g`-sequence along which firmness does not rise.
pub fn longest_stall(d: &CoxeterDiagram, g: &GroupElement, cap: usize) -> Result<usize> {
    fn walk(
        d: &CoxeterDiagram,
        h: &GroupElement,
        target: usize,
        cap: usize,
        memo: &mut HashMap<GroupElement, usize>,
    ) -> Result<usize> {
        if let Some(&v) = memo.get(h) {
            return Ok(v);
        }
        if memo.len() >= cap {
            return Err(Error::CapExceeded { cap });
        }
        let mut best = 0;
        for r in d.generators() {
            if h.is_descent(d, r) {
                continue;
            }
            let next = h.ascend(d, r);
            if firmness(d, &next) == target {
                best = best.max(1 + walk(d, &next, target, cap, memo)?);
            }
        }
        memo.insert(h.clone(), best);
        Ok(best)
    }
    let target = firmness(d, g);
    walk(d, g, target, cap, &mut HashMap::new())
}

/// The least `k` such that every reduced increasing `g`-sequence of length
/// `k` strictly raises firmness.
pub fn k_of(d: &CoxeterDiagram, g: &GroupElement, cap: usize) -> Result<usize> {
    Ok(longest_stall(d, g, cap)? + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LengthBound {
    pub n: usize,
    /// Largest length carrying an element of firmness at most `n`.
    pub d: usize,
    /// Every sphere up to this length was enumerated and checked.
    pub checked_up_to_length: usize,
}

/// Enumerates spheres of `W` by length and returns the largest length at
/// which some element has firmness at most `n`.
///
/// Once a whole sphere has firmness above `n`, so has every longer element
/// (ascents never lower firmness), and the search stops. One further sphere
/// is enumerated as a recheck.
pub fn d_of(d: &CoxeterDiagram, n: usize, cap: usize) -> Result<LengthBound> {
    let mut sphere = vec![GroupElement::identity()];
    let mut visited = 1usize;
    let mut length = 0usize;
    loop {
        let all_above = sphere.par_iter().all(|g| firmness(d, g) > n);
        if all_above {
            break;
        }
        sphere = next_sphere(d, &sphere);
        visited += sphere.len();
        if visited > cap {
            return Err(Error::CapExceeded { cap });
        }
        length += 1;
    }
    let stop = length;
    let recheck = next_sphere(d, &sphere);
    if visited + recheck.len() > cap {
        return Err(Error::CapExceeded { cap });
    }
    if let Some(g) = recheck.iter().find(|g| firmness(d, g) <= n) {
        return Err(Error::Inconsistent(format!(
            "element `{}` of length {} has firmness <= {n} past the stopping sphere",
            g.to_text(d),
            stop + 1
        )));
    }
    Ok(LengthBound {
        n,
        d: stop - 1,
        checked_up_to_length: stop + 1,
    })
}
