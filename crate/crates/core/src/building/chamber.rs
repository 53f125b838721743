use std::cmp::Ordering;

use serde::Serialize;

use crate::coxeter::{Gen, Word};

/// One factor `(s, v)` of a chamber, `v` in `1..q_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Syllable {
    pub gen: Gen,
    pub value: u32,
}

impl Syllable {
    pub fn new(gen: Gen, value: u32) -> Self {
        Syllable { gen, value }
    }
}

/// A chamber of the semi-regular building: an element of the graph product of
/// the cyclic groups `Z/q_s`, kept in canonical syllable order.
///
/// Chambers are only meaningful relative to the [`Building`](super::Building)
/// that produced them. Ordered by syllable count first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Chamber {
    pub(crate) syllables: Vec<Syllable>,
}

impl Ord for Chamber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.syllables
            .len()
            .cmp(&other.syllables.len())
            .then_with(|| self.syllables.cmp(&other.syllables))
    }
}

impl PartialOrd for Chamber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Chamber {
    /// The base chamber (identity of the graph product).
    pub fn base() -> Self {
        Chamber::default()
    }

    pub fn is_base(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Number of syllables, i.e. the gallery distance from the base chamber.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The generators of the syllables, in order. This is the ShortLex normal
    /// form of the Weyl distance from the base chamber.
    pub fn type_word(&self) -> Word {
        self.syllables.iter().map(|x| x.gen).collect()
    }

    /// All syllable values equal to 1.
    pub fn in_standard_apartment(&self) -> bool {
        self.syllables.iter().all(|x| x.value == 1)
    }
}
