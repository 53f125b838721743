use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Interned generator index into a [`CoxeterDiagram`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Gen(pub u8);

impl Gen {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn bit(self) -> u64 {
        1 << self.0
    }
}

/// A subset of the generators, stored as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn singleton(s: Gen) -> Self {
        GenSet(s.bit())
    }

    #[inline]
    pub fn contains(self, s: Gen) -> bool {
        self.0 & s.bit() != 0
    }

    pub fn insert(&mut self, s: Gen) {
        self.0 |= s.bit();
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Gen> {
        (0..64u8).filter(move |&i| self.0 & (1 << i) != 0).map(Gen)
    }
}

impl FromIterator<Gen> for GenSet {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        let mut set = GenSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

/// An entry of a right-angled Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxeterEntry {
    One,
    Two,
    Infinity,
}

impl fmt::Display for CoxeterEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterEntry::One => f.write_str("1"),
            CoxeterEntry::Two => f.write_str("2"),
            CoxeterEntry::Infinity => f.write_str("inf"),
        }
    }
}

/// Right-angled Coxeter diagram with optional panel thickness.
///
/// Distinct generators either commute (`m = 2`) or are free (`m = ∞`).
/// The declaration order of the generators is the order used by the
/// ShortLex normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    names: Vec<String>,
    /// `commute[s]` has bit `t` set iff `m_st = 2`.
    commute: Vec<u64>,
    thickness: Option<Vec<u32>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramDocument {
    generators: Vec<String>,
    #[serde(default)]
    commuting: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    thickness: Option<BTreeMap<String, u32>>,
}

impl CoxeterDiagram {
    /// Builds a diagram from generator names and the list of commuting pairs.
    /// Every unlisted pair of distinct generators is free.
    pub fn new<S: AsRef<str>>(generators: &[S], commuting: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.as_ref().to_owned()).collect();
        if names.len() > 64 {
            return Err(Error::TooManyGenerators(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyGeneratorName);
            }
            if name.chars().any(|c| c.is_whitespace() || c == ':') {
                return Err(Error::MalformedDiagram(format!(
                    "generator name `{name}` contains whitespace or `:`"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        let mut diagram = CoxeterDiagram {
            commute: vec![0; names.len()],
            names,
            thickness: None,
        };
        for (a, b) in commuting {
            let s = diagram.generator(a.as_ref())?;
            let t = diagram.generator(b.as_ref())?;
            if s == t {
                return Err(Error::SelfCommutingPair(a.as_ref().to_owned()));
            }
            diagram.commute[s.index()] |= t.bit();
            diagram.commute[t.index()] |= s.bit();
        }
        Ok(diagram)
    }

    /// Attaches a thickness `q_s >= 2` to every generator, in declaration order.
    pub fn with_thickness(mut self, thickness: &[u32]) -> Result<Self> {
        if thickness.len() != self.names.len() {
            return Err(Error::MalformedDiagram(format!(
                "expected {} thickness values, got {}",
                self.names.len(),
                thickness.len()
            )));
        }
        for (name, &q) in self.names.iter().zip(thickness) {
            if q < 2 {
                return Err(Error::ThinPanel { name: name.clone(), q });
            }
        }
        self.thickness = Some(thickness.to_vec());
        Ok(self)
    }

    /// Same as [`with_thickness`](Self::with_thickness) with one value for every generator.
    pub fn with_uniform_thickness(self, q: u32) -> Result<Self> {
        let all = vec![q; self.names.len()];
        self.with_thickness(&all)
    }

    /// Parses the JSON diagram document
    /// `{"generators": [..], "commuting": [[a, b], ..], "thickness": {a: q, ..}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DiagramDocument =
            serde_json::from_str(text).map_err(|e| Error::MalformedDiagram(e.to_string()))?;
        let diagram = CoxeterDiagram::new(&doc.generators, &doc.commuting)?;
        match doc.thickness {
            None => Ok(diagram),
            Some(map) => {
                for name in map.keys() {
                    diagram.generator(name)?;
                }
                let mut values = Vec::with_capacity(diagram.rank());
                for name in &diagram.names {
                    match map.get(name) {
                        Some(&q) => values.push(q),
                        None => return Err(Error::MissingThickness(name.clone())),
                    }
                }
                diagram.with_thickness(&values)
            }
        }
    }

    /// Canonical JSON form: generators in declaration order, commuting pairs
    /// sorted by generator index.
    pub fn to_json(&self) -> String {
        let mut commuting = Vec::new();
        for s in self.generators() {
            for t in self.generators() {
                if s < t && self.commutes(s, t) {
                    commuting.push((self.name(s).to_owned(), self.name(t).to_owned()));
                }
            }
        }
        let thickness = self.thickness.as_ref().map(|q| {
            self.names
                .iter()
                .cloned()
                .zip(q.iter().copied())
                .collect::<BTreeMap<_, _>>()
        });
        let doc = DiagramDocument {
            generators: self.names.clone(),
            commuting,
            thickness,
        };
        serde_json::to_string(&doc).expect("diagram document serializes")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + Clone {
        (0..self.names.len() as u8).map(Gen)
    }

    pub fn all(&self) -> GenSet {
        self.generators().collect()
    }

    pub fn name(&self, s: Gen) -> &str {
        &self.names[s.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Gen(i as u8))
            .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
    }

    pub fn check(&self, s: Gen) -> Result<Gen> {
        if s.index() < self.names.len() {
            Ok(s)
        } else {
            Err(Error::GeneratorIndex(s.index()))
        }
    }

    pub fn entry(&self, s: Gen, t: Gen) -> CoxeterEntry {
        if s == t {
            CoxeterEntry::One
        } else if self.commutes(s, t) {
            CoxeterEntry::Two
        } else {
            CoxeterEntry::Infinity
        }
    }

    /// `m_st = 2`. False for `s == t`.
    #[inline]
    pub fn commutes(&self, s: Gen, t: Gen) -> bool {
        self.commute[s.index()] & t.bit() != 0
    }

    /// Mask of the generators commuting with `s` (excluding `s`).
    #[inline]
    pub fn commute_mask(&self, s: Gen) -> u64 {
        self.commute[s.index()]
    }

    /// `m_st = ∞`.
    #[inline]
    pub fn is_free(&self, s: Gen, t: Gen) -> bool {
        s != t && !self.commutes(s, t)
    }

    pub fn thickness(&self) -> Option<&[u32]> {
        self.thickness.as_deref()
    }

    pub fn thickness_of(&self, s: Gen) -> Result<u32> {
        self.thickness
            .as_ref()
            .map(|q| q[s.index()])
            .ok_or_else(|| Error::MissingThickness(self.name(s).to_owned()))
    }

    /// `J^⊥`: generators outside `J` commuting with every member of `J`.
    pub fn j_perp(&self, j: GenSet) -> GenSet {
        self.generators()
            .filter(|&t| !j.contains(t) && j.iter().all(|s| self.commutes(s, t)))
            .collect()
    }

    /// `J` is spherical iff its members pairwise commute.
    pub fn is_spherical(&self, j: GenSet) -> bool {
        j.iter().all(|s| j.iter().all(|t| s == t || self.commutes(s, t)))
    }

    /// The whole diagram is spherical (every pair commutes).
    pub fn is_spherical_diagram(&self) -> bool {
        self.is_spherical(self.all())
    }

    pub fn parse_gen_set(&self, names: &[&str]) -> Result<GenSet> {
        names.iter().map(|n| self.generator(n)).collect()
    }

    pub fn format_gen_set(&self, j: GenSet) -> String {
        let names: Vec<&str> = j.iter().map(|s| self.name(s)).collect();
        format!("{{{}}}", names.join(","))
    }
}
