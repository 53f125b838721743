//! Right-angled Coxeter groups: diagrams, reduced words, the dependence
//! order on letter positions and firmness.

mod diagram;
mod poset;
mod word;

pub use diagram::{CoxeterDiagram, CoxeterEntry, Gen, GenSet};
pub use poset::{
    firm_rearrangement, firmness, firmness_witness_position, is_firm, word_poset, WordPoset,
};
pub use word::{
    enumerate_reps, is_reduced, next_sphere, reduce, spheres_up_to, GroupElement, Sign, Word,
};

pub(crate) use word::{first_movable, last_movable, shortlex_order, tokens};
