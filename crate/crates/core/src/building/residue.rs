use std::collections::{HashSet, VecDeque};

use super::{Building, Chamber};
use crate::coxeter::{GenSet, Word};
use crate::error::{Error, Result};

/// The `J`-residue containing `base`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    pub types: GenSet,
    pub base: Chamber,
}

impl Residue {
    pub fn new(types: GenSet, base: Chamber) -> Self {
        Residue { types, base }
    }

    pub fn panel(base: Chamber, s: crate::coxeter::Gen) -> Self {
        Residue { types: GenSet::singleton(s), base }
    }
}

fn uses_only(word: &Word, allowed: GenSet) -> bool {
    word.letters().iter().all(|&s| allowed.contains(s))
}

impl Building {
    pub fn residue_contains(&self, r: &Residue, c: &Chamber) -> bool {
        uses_only(&self.difference(&r.base, c).type_word(), r.types)
    }

    /// Both handles denote the same residue.
    pub fn same_residue(&self, r1: &Residue, r2: &Residue) -> bool {
        r1.types == r2.types && self.residue_contains(r1, &r2.base)
    }

    /// The gate of `c` in `r`: the unique chamber of `r` closest to `c`.
    ///
    /// Writes `base⁻¹ c` in normal form and keeps the largest set of its
    /// syllables that has types in `J` and can be commuted to the front.
    pub fn project(&self, r: &Residue, c: &Chamber) -> Chamber {
        let d = self.diagram();
        let diff = self.difference(&r.base, c);
        let syl = diff.syllables();
        let mut front = vec![false; syl.len()];
        for p in 0..syl.len() {
            if !r.types.contains(syl[p].gen) {
                continue;
            }
            let mask = d.commute_mask(syl[p].gen);
            front[p] = (0..p).all(|q| front[q] || mask & syl[q].gen.bit() != 0);
        }
        let prefix = syl
            .iter()
            .zip(&front)
            .filter(|(_, &f)| f)
            .map(|(x, _)| *x);
        self.normalize(r.base.syllables().iter().copied().chain(prefix))
    }

    /// All chambers of a residue; finite exactly when its type is spherical.
    pub fn residue_chambers(&self, r: &Residue) -> Result<Vec<Chamber>> {
        let mut seen: HashSet<Chamber> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(r.base.clone());
        queue.push_back(r.base.clone());
        while let Some(c) = queue.pop_front() {
            for s in r.types.iter() {
                for v in 1..self.thickness(s) {
                    let next = self.step(&c, s, v);
                    if seen.insert(next.clone()) {
                        if seen.len() > self.cap() {
                            return Err(Error::CapExceeded { cap: self.cap() });
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut out: Vec<Chamber> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Parallel residues: same type, and the bases are joined by a Weyl
    /// distance in `W_{J ∪ J^⊥}`.
    pub fn is_parallel(&self, r1: &Residue, r2: &Residue) -> bool {
        if r1.types != r2.types {
            return false;
        }
        let allowed = r1.types.union(self.diagram().j_perp(r1.types));
        uses_only(&self.difference(&r1.base, &r2.base).type_word(), allowed)
    }
}
