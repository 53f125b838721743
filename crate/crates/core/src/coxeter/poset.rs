use std::collections::BTreeSet;

use super::diagram::CoxeterDiagram;
use super::word::{require_reduced, GroupElement, Word};
use crate::error::{Error, Result};

/// The dependence order on the letter positions of a reduced word.
///
/// `i ≻ j` (written `precedes(i, j)`) holds when the letter at position `i`
/// stands to the left of the letter at position `j` in every reduced
/// representation. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPoset {
    word: Word,
    // 0-based: rel[i][j] iff position i+1 ≻ position j+1
    rel: Vec<Vec<bool>>,
}

impl WordPoset {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn check(&self, pos: usize) -> Result<usize> {
        if pos == 0 || pos > self.len() {
            return Err(Error::PositionOutOfRange { pos, len: self.len() });
        }
        Ok(pos - 1)
    }

    /// `i ≻ j`, 1-based.
    pub fn precedes(&self, i: usize, j: usize) -> Result<bool> {
        let (i, j) = (self.check(i)?, self.check(j)?);
        Ok(self.rel[i][j])
    }

    /// All pairs `(i, j)` with `i ≻ j`, 1-based, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.rel[i][j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// `I_w(i) = { j : j ≻ i }`, 1-based.
    pub fn i_set(&self, i: usize) -> Result<BTreeSet<usize>> {
        let i = self.check(i)?;
        Ok((0..i).filter(|&j| self.rel[j][i]).map(|j| j + 1).collect())
    }

    pub(crate) fn i_set_len(&self, i0: usize) -> usize {
        (0..i0).filter(|&j| self.rel[j][i0]).count()
    }
}

/// Dependence order of a reduced word, computed as the transitive closure of
/// `{ i < j : s_i = s_j or m(s_i, s_j) = ∞ }`.
pub fn word_poset(d: &CoxeterDiagram, w: &Word) -> Result<WordPoset> {
    require_reduced(d, w)?;
    Ok(poset_unchecked(d, w))
}

pub(crate) fn poset_unchecked(d: &CoxeterDiagram, w: &Word) -> WordPoset {
    let letters = w.letters();
    let n = letters.len();
    let direct = |i: usize, j: usize| !d.commutes(letters[i], letters[j]);
    let mut rel = vec![vec![false; n]; n];
    for j in 0..n {
        for i in (0..j).rev() {
            rel[i][j] = direct(i, j) || (i + 1..j).any(|k| rel[i][k] && direct(k, j));
        }
    }
    WordPoset { word: w.clone(), rel }
}

/// Whether `g` has exactly one right descent.
pub fn is_firm(d: &CoxeterDiagram, g: &GroupElement) -> Result<bool> {
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    Ok(g.descents(d).len() == 1)
}

/// The firmness `F#(g) = max_i |I_w(i)| + 1` on the canonical word; `0` for
/// the identity.
pub fn firmness(d: &CoxeterDiagram, g: &GroupElement) -> usize {
    if g.is_identity() {
        return 0;
    }
    let poset = poset_unchecked(d, g.word());
    (0..poset.len())
        .map(|i| poset.i_set_len(i))
        .max()
        .expect("nonempty word")
        + 1
}

/// A reduced representation of `w` starting with the letters at positions
/// `I_w(i)` (in increasing order) followed by the letter at `i`; this prefix
/// is firm. The remaining letters keep their relative order.
pub fn firm_rearrangement(d: &CoxeterDiagram, w: &Word, i: usize) -> Result<Word> {
    let poset = word_poset(d, w)?;
    let prefix = poset.i_set(i)?;
    let letters = w.letters();
    let mut out: Vec<_> = prefix.iter().map(|&j| letters[j - 1]).collect();
    out.push(letters[i - 1]);
    out.extend(
        (1..=letters.len())
            .filter(|p| *p != i && !prefix.contains(p))
            .map(|p| letters[p - 1]),
    );
    Ok(Word::from(out))
}

/// A position maximizing `|I_w(i)|` (the first one), so that
/// `firm_rearrangement` at it exhibits a firm prefix of length `F#`.
pub fn firmness_witness_position(d: &CoxeterDiagram, w: &Word) -> Result<usize> {
    let poset = word_poset(d, w)?;
    if poset.is_empty() {
        return Err(Error::IdentityElement);
    }
    let best = (0..poset.len())
        .max_by_key(|&i| (poset.i_set_len(i), std::cmp::Reverse(i)))
        .expect("nonempty");
    Ok(best + 1)
}
