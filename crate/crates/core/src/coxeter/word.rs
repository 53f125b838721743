use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use super::diagram::{CoxeterDiagram, Gen, GenSet};
use crate::error::{Error, Result};

/// A word over the generators of some diagram.
///
/// Ordered ShortLex: shorter words first, then lexicographically by
/// generator index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Gen>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Gen>> for Word {
    fn from(letters: Vec<Gen>) -> Self {
        Word(letters)
    }
}

impl FromIterator<Gen> for Word {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Gen> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: Gen) {
        self.0.push(s);
    }

    pub fn support(&self) -> GenSet {
        self.0.iter().copied().collect()
    }

    /// Parses space-separated generator names; the empty string is the identity.
    pub fn parse(d: &CoxeterDiagram, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for (column, token) in tokens(text) {
            let s = d.generator(token).map_err(|_| Error::Parse {
                column,
                message: format!("unknown generator `{token}`"),
            })?;
            letters.push(s);
        }
        Ok(Word(letters))
    }

    pub fn validate(&self, d: &CoxeterDiagram) -> Result<()> {
        for &s in &self.0 {
            d.check(s)?;
        }
        Ok(())
    }

    pub fn to_text(&self, d: &CoxeterDiagram) -> String {
        let names: Vec<&str> = self.0.iter().map(|&s| d.name(s)).collect();
        names.join(" ")
    }

    pub fn display<'a>(&'a self, d: &'a CoxeterDiagram) -> impl fmt::Display + 'a {
        DisplayWord { word: self, diagram: d }
    }
}

struct DisplayWord<'a> {
    word: &'a Word,
    diagram: &'a CoxeterDiagram,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        f.write_str(&self.word.to_text(self.diagram))
    }
}

/// Whitespace-separated tokens with their 1-based starting column.
pub(crate) fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let column = text[..offset].chars().count() + 1;
        let token = &trimmed[..end];
        offset += end;
        rest = &trimmed[end..];
        Some((column, token))
    })
}

/// Index of an item with generator `s` that can be commuted to the end of
/// `items`, i.e. every later item commutes with `s`.
pub(crate) fn last_movable<T>(
    d: &CoxeterDiagram,
    items: &[T],
    key: impl Fn(&T) -> Gen,
    s: Gen,
) -> Option<usize> {
    let mask = d.commute_mask(s);
    for (j, item) in items.iter().enumerate().rev() {
        let g = key(item);
        if g == s {
            return Some(j);
        }
        if mask & g.bit() == 0 {
            return None;
        }
    }
    None
}

/// Index of an item with generator `s` that can be commuted to the front.
pub(crate) fn first_movable<T>(
    d: &CoxeterDiagram,
    items: &[T],
    key: impl Fn(&T) -> Gen,
    s: Gen,
) -> Option<usize> {
    let mask = d.commute_mask(s);
    for (j, item) in items.iter().enumerate() {
        let g = key(item);
        if g == s {
            return Some(j);
        }
        if mask & g.bit() == 0 {
            return None;
        }
    }
    None
}

/// Reorders a reduced sequence into its ShortLex-least commutation
/// equivalent: repeatedly take, among items with no unplaced dependency to
/// their left, the one with the smallest generator.
pub(crate) fn shortlex_order<T: Clone>(
    d: &CoxeterDiagram,
    items: &[T],
    key: impl Fn(&T) -> Gen,
) -> Vec<T> {
    let n = items.len();
    if n < 2 {
        return items.to_vec();
    }
    let gens: Vec<Gen> = items.iter().map(&key).collect();
    let mut blockers = vec![0u32; n];
    for p in 0..n {
        let mask = d.commute_mask(gens[p]);
        blockers[p] = gens[..p].iter().filter(|g| mask & g.bit() == 0).count() as u32;
    }
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&p| !placed[p] && blockers[p] == 0)
            .min_by_key(|&p| gens[p])
            .expect("dependency order is acyclic");
        placed[next] = true;
        out.push(items[next].clone());
        let mask = d.commute_mask(gens[next]);
        for p in next + 1..n {
            if !placed[p] && mask & gens[p].bit() == 0 {
                blockers[p] -= 1;
            }
        }
    }
    out
}

/// Whether the length went up or down after right multiplication by a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Ascent,
    Descent,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Ascent => 1,
            Sign::Descent => -1,
        }
    }
}

/// Element of `W`, stored as its ShortLex normal form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    normal: Word,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement::default()
    }

    pub fn is_identity(&self) -> bool {
        self.normal.is_empty()
    }

    pub fn length(&self) -> usize {
        self.normal.len()
    }

    pub fn word(&self) -> &Word {
        &self.normal
    }

    pub fn letters(&self) -> &[Gen] {
        self.normal.letters()
    }

    pub fn parse(d: &CoxeterDiagram, text: &str) -> Result<Self> {
        Ok(reduce_unchecked(d, Word::parse(d, text)?.letters()))
    }

    /// Wraps a word already known to be in ShortLex normal form.
    pub(crate) fn from_canonical(normal: Word) -> Self {
        GroupElement { normal }
    }

    pub fn generator(d: &CoxeterDiagram, s: Gen) -> Result<Self> {
        d.check(s)?;
        Ok(GroupElement { normal: Word(vec![s]) })
    }

    pub fn is_descent(&self, d: &CoxeterDiagram, s: Gen) -> bool {
        last_movable(d, self.letters(), |&g| g, s).is_some()
    }

    /// The right descent set `{ s : l(ws) < l(w) }`.
    pub fn descents(&self, d: &CoxeterDiagram) -> GenSet {
        d.generators().filter(|&s| self.is_descent(d, s)).collect()
    }

    /// Canonical form of `w s` together with the direction of the length change.
    pub fn multiply(&self, d: &CoxeterDiagram, s: Gen) -> Result<(GroupElement, Sign)> {
        d.check(s)?;
        let mut letters = self.normal.0.clone();
        let sign = match last_movable(d, &letters, |&g| g, s) {
            Some(j) => {
                letters.remove(j);
                Sign::Descent
            }
            None => {
                letters.push(s);
                Sign::Ascent
            }
        };
        let normal = Word(shortlex_order(d, &letters, |&g| g));
        Ok((GroupElement { normal }, sign))
    }

    /// `w s` for a generator known to be an ascent; used by sphere enumeration.
    pub(crate) fn ascend(&self, d: &CoxeterDiagram, s: Gen) -> GroupElement {
        let mut letters = self.normal.0.clone();
        letters.push(s);
        GroupElement {
            normal: Word(shortlex_order(d, &letters, |&g| g)),
        }
    }

    pub fn inverse(&self, d: &CoxeterDiagram) -> GroupElement {
        let reversed: Vec<Gen> = self.letters().iter().rev().copied().collect();
        GroupElement {
            normal: Word(shortlex_order(d, &reversed, |&g| g)),
        }
    }

    pub fn mul(&self, d: &CoxeterDiagram, other: &GroupElement) -> GroupElement {
        let mut letters = self.letters().to_vec();
        letters.extend_from_slice(other.letters());
        reduce_unchecked(d, &letters)
    }

    pub fn to_text(&self, d: &CoxeterDiagram) -> String {
        self.normal.to_text(d)
    }
}

pub(crate) fn reduce_unchecked(d: &CoxeterDiagram, letters: &[Gen]) -> GroupElement {
    let mut buf: Vec<Gen> = Vec::with_capacity(letters.len());
    for &s in letters {
        match last_movable(d, &buf, |&g| g, s) {
            Some(j) => {
                buf.remove(j);
            }
            None => buf.push(s),
        }
    }
    GroupElement {
        normal: Word(shortlex_order(d, &buf, |&g| g)),
    }
}

/// Canonical (ShortLex reduced) form of the element represented by `w`.
pub fn reduce(d: &CoxeterDiagram, w: &Word) -> Result<GroupElement> {
    w.validate(d)?;
    Ok(reduce_unchecked(d, w.letters()))
}

pub fn is_reduced(d: &CoxeterDiagram, w: &Word) -> Result<bool> {
    Ok(reduce(d, w)?.length() == w.len())
}

pub(crate) fn require_reduced(d: &CoxeterDiagram, w: &Word) -> Result<()> {
    let g = reduce(d, w)?;
    if g.length() != w.len() {
        return Err(Error::NotReduced {
            word: w.to_text(d),
            reduced: g.to_text(d),
        });
    }
    Ok(())
}

/// All reduced representations of the element represented by the reduced
/// word `w`: the closure of `{w}` under swaps of adjacent commuting letters.
pub fn enumerate_reps(d: &CoxeterDiagram, w: &Word) -> Result<BTreeSet<Word>> {
    require_reduced(d, w)?;
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(current) = queue.pop_front() {
        for i in 0..current.len().saturating_sub(1) {
            let (a, b) = (current.0[i], current.0[i + 1]);
            if d.commutes(a, b) {
                let mut next = current.clone();
                next.0.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The sphere of length `L + 1` computed from the sphere of length `L`:
/// every element of the next sphere is an ascent extension of the current one.
pub fn next_sphere(d: &CoxeterDiagram, sphere: &[GroupElement]) -> Vec<GroupElement> {
    let mut next: HashSet<GroupElement> = HashSet::new();
    for g in sphere {
        for s in d.generators() {
            if !g.is_descent(d, s) {
                next.insert(g.ascend(d, s));
            }
        }
    }
    let mut out: Vec<GroupElement> = next.into_iter().collect();
    out.sort();
    out
}

/// All elements of length at most `max_len`, grouped by length.
pub fn spheres_up_to(d: &CoxeterDiagram, max_len: usize) -> Vec<Vec<GroupElement>> {
    let mut levels = vec![vec![GroupElement::identity()]];
    for _ in 0..max_len {
        let next = next_sphere(d, levels.last().expect("nonempty"));
        levels.push(next);
    }
    levels
}
