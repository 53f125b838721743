//! The semi-regular right-angled building of a diagram with prescribed
//! thickness, modelled as the graph product of cyclic groups `Z/q_s`.
//!
//! Chambers are group elements; `c` and `c'` are `s`-adjacent when
//! `c⁻¹c'` is a single nonzero `s`-syllable, and the Weyl distance is the
//! type word of `c⁻¹c'`.

mod chamber;
mod residue;

use std::collections::HashSet;

pub use chamber::{Chamber, Syllable};
pub use residue::Residue;

use crate::coxeter::{
    first_movable, last_movable, shortlex_order, tokens, CoxeterDiagram, Gen, GenSet, GroupElement,
};
use crate::error::{Error, Result};

/// Default bound on the number of chambers a single enumeration may produce.
pub const DEFAULT_CHAMBER_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Building {
    diagram: CoxeterDiagram,
    q: Vec<u32>,
    cap: usize,
}

impl Building {
    /// Requires a thickness for every generator.
    pub fn new(diagram: CoxeterDiagram) -> Result<Self> {
        let q = match diagram.thickness() {
            Some(q) => q.to_vec(),
            None => {
                let first = diagram.generators().next().map(|s| diagram.name(s).to_owned());
                return Err(Error::MissingThickness(first.unwrap_or_default()));
            }
        };
        Ok(Building { diagram, q, cap: DEFAULT_CHAMBER_CAP })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    #[inline]
    pub fn thickness(&self, s: Gen) -> u32 {
        self.q[s.index()]
    }

    /// Every panel has at least three chambers.
    pub fn is_thick(&self) -> bool {
        self.q.iter().all(|&q| q >= 3)
    }

    /// Canonical form of the product of the given syllables. Values must lie
    /// in `1..q_s`.
    pub fn canonicalize(&self, raw: &[Syllable]) -> Result<Chamber> {
        for x in raw {
            self.diagram.check(x.gen)?;
            let q = self.thickness(x.gen);
            if x.value == 0 || x.value >= q {
                return Err(Error::ValueOutOfRange {
                    name: self.diagram.name(x.gen).to_owned(),
                    value: x.value,
                    q,
                });
            }
        }
        Ok(self.normalize(raw.iter().copied()))
    }

    // Values are taken mod q_s; zero syllables vanish.
    pub(crate) fn normalize(&self, raw: impl IntoIterator<Item = Syllable>) -> Chamber {
        let d = &self.diagram;
        let mut buf: Vec<Syllable> = Vec::new();
        for x in raw {
            let q = self.thickness(x.gen);
            let v = x.value % q;
            if v == 0 {
                continue;
            }
            match last_movable(d, &buf, |y| y.gen, x.gen) {
                Some(j) => {
                    let merged = (buf[j].value + v) % q;
                    if merged == 0 {
                        buf.remove(j);
                    } else {
                        buf[j].value = merged;
                    }
                }
                None => buf.push(Syllable::new(x.gen, v)),
            }
        }
        Chamber { syllables: shortlex_order(d, &buf, |y| y.gen) }
    }

    pub fn mul(&self, a: &Chamber, b: &Chamber) -> Chamber {
        self.normalize(a.syllables.iter().chain(&b.syllables).copied())
    }

    pub fn inverse(&self, c: &Chamber) -> Chamber {
        self.normalize(
            c.syllables
                .iter()
                .rev()
                .map(|x| Syllable::new(x.gen, self.thickness(x.gen) - x.value)),
        )
    }

    /// `c⁻¹ c'`.
    pub fn difference(&self, c: &Chamber, other: &Chamber) -> Chamber {
        let inv = c
            .syllables
            .iter()
            .rev()
            .map(|x| Syllable::new(x.gen, self.thickness(x.gen) - x.value));
        self.normalize(inv.chain(other.syllables.iter().copied()))
    }

    /// `c · (s, v)` with `v` taken mod `q_s`.
    pub fn step(&self, c: &Chamber, s: Gen, v: u32) -> Chamber {
        self.normalize(c.syllables.iter().copied().chain([Syllable::new(s, v)]))
    }

    /// The color of the edge between `c` and `c'`, if they are adjacent.
    pub fn adjacency(&self, c: &Chamber, other: &Chamber) -> Option<Gen> {
        let diff = self.difference(c, other);
        match diff.syllables.as_slice() {
            [x] => Some(x.gen),
            _ => None,
        }
    }

    pub fn weyl_distance(&self, c: &Chamber, other: &Chamber) -> GroupElement {
        let word = self.difference(c, other).type_word();
        GroupElement::from_canonical(word)
    }

    pub fn gallery_distance(&self, c: &Chamber, other: &Chamber) -> usize {
        self.difference(c, other).len()
    }

    /// The chambers of the `s`-panel of `c`: `c · (s, v)` for `v` in `0..q_s`.
    pub fn panel(&self, c: &Chamber, s: Gen) -> Vec<Chamber> {
        let mut out: Vec<Chamber> =
            (0..self.thickness(s)).map(|v| self.step(c, s, v)).collect();
        out.sort();
        out
    }

    /// The chamber `x` of the `s`-panel of `c` written as `c · (s, v)`; the
    /// value `v` in `0..q_s` with `c · (s, v) = x`, if `x` lies in that panel.
    pub fn panel_offset(&self, c: &Chamber, s: Gen, x: &Chamber) -> Option<u32> {
        let diff = self.difference(c, x);
        match diff.syllables.as_slice() {
            [] => Some(0),
            [y] if y.gen == s => Some(y.value),
            _ => None,
        }
    }

    /// Whether `x` lies in the `s`-wing of `c`, i.e. projects onto `c` in
    /// the `s`-panel of `c`.
    pub fn wing_contains(&self, c: &Chamber, s: Gen, x: &Chamber) -> bool {
        let diff = self.difference(c, x);
        first_movable(&self.diagram, &diff.syllables, |y| y.gen, s).is_none()
    }

    /// Offset `v` such that the projection of `x` on the `s`-panel of `c` is
    /// `c · (s, v)`.
    pub fn panel_projection_offset(&self, c: &Chamber, s: Gen, x: &Chamber) -> u32 {
        let diff = self.difference(c, x);
        first_movable(&self.diagram, &diff.syllables, |y| y.gen, s)
            .map_or(0, |j| diff.syllables[j].value)
    }

    /// Chambers at gallery distance exactly `n` from `c0`, grouped by
    /// distance `0..=n`.
    pub fn spheres(&self, c0: &Chamber, n: usize) -> Result<Vec<Vec<Chamber>>> {
        let relative = self.relative_spheres(n)?;
        Ok(relative
            .into_iter()
            .map(|level| {
                let mut out: Vec<Chamber> = level.iter().map(|y| self.mul(c0, y)).collect();
                out.sort();
                out
            })
            .collect())
    }

    /// Spheres around the base chamber, grouped by distance.
    pub(crate) fn relative_spheres(&self, n: usize) -> Result<Vec<Vec<Chamber>>> {
        let d = &self.diagram;
        let mut levels = vec![vec![Chamber::base()]];
        let mut total = 1usize;
        for _ in 0..n {
            let mut next: HashSet<Chamber> = HashSet::new();
            for y in levels.last().expect("nonempty") {
                for s in d.generators() {
                    if last_movable(d, &y.syllables, |x| x.gen, s).is_some() {
                        continue;
                    }
                    for v in 1..self.thickness(s) {
                        next.insert(self.step(y, s, v));
                    }
                }
                if total + next.len() > self.cap {
                    return Err(Error::CapExceeded { cap: self.cap });
                }
            }
            total += next.len();
            let mut level: Vec<Chamber> = next.into_iter().collect();
            level.sort();
            levels.push(level);
        }
        Ok(levels)
    }

    pub fn sphere(&self, c0: &Chamber, n: usize) -> Result<Vec<Chamber>> {
        Ok(self.spheres(c0, n)?.pop().expect("n + 1 levels"))
    }

    /// All chambers within gallery distance `n` of `c0`, sorted.
    pub fn ball(&self, c0: &Chamber, n: usize) -> Result<Vec<Chamber>> {
        let mut out: Vec<Chamber> = self.spheres(c0, n)?.into_iter().flatten().collect();
        out.sort();
        Ok(out)
    }

    /// A minimal gallery from `c` to `other`, following the syllables of
    /// `c⁻¹ other` in canonical order. Includes both endpoints.
    pub fn gallery(&self, c: &Chamber, other: &Chamber) -> Vec<Chamber> {
        let diff = self.difference(c, other);
        let mut out = vec![c.clone()];
        let mut current = c.clone();
        for x in &diff.syllables {
            current = self.step(&current, x.gen, x.value);
            out.push(current.clone());
        }
        out
    }

    /// Parses the text form `"s:1 t:2"`; the empty string is the base chamber.
    pub fn parse_chamber(&self, text: &str) -> Result<Chamber> {
        let mut raw = Vec::new();
        for (column, token) in tokens(text) {
            let (name, value) = token.split_once(':').ok_or_else(|| Error::Parse {
                column,
                message: format!("expected `generator:value`, found `{token}`"),
            })?;
            let gen = self.diagram.generator(name).map_err(|_| Error::Parse {
                column,
                message: format!("unknown generator `{name}`"),
            })?;
            let value: u32 = value.parse().map_err(|_| Error::Parse {
                column: column + name.chars().count() + 1,
                message: format!("invalid syllable value `{value}`"),
            })?;
            raw.push(Syllable::new(gen, value));
        }
        self.canonicalize(&raw)
    }

    pub fn format_chamber(&self, c: &Chamber) -> String {
        let parts: Vec<String> = c
            .syllables
            .iter()
            .map(|x| format!("{}:{}", self.diagram.name(x.gen), x.value))
            .collect();
        parts.join(" ")
    }

    pub fn is_spherical(&self, j: GenSet) -> bool {
        self.diagram.is_spherical(j)
    }
}
