//! The small diagrams used throughout the test suites and examples.

use crate::coxeter::CoxeterDiagram;

/// Infinite dihedral group on `{s, t}`.
pub fn d1() -> CoxeterDiagram {
    CoxeterDiagram::new::<&str>(&["s", "t"], &[]).expect("valid diagram")
}

/// `{a, b, c}` with only `a` and `b` commuting.
pub fn d2() -> CoxeterDiagram {
    CoxeterDiagram::new(&["a", "b", "c"], &[("a", "b")]).expect("valid diagram")
}

/// Path `r1 - r2 - r3 - r4 - r5` where consecutive generators are free and
/// all other pairs commute.
pub fn d3() -> CoxeterDiagram {
    let names = ["r1", "r2", "r3", "r4", "r5"];
    let mut commuting = Vec::new();
    for i in 0..names.len() {
        for j in i + 2..names.len() {
            commuting.push((names[i], names[j]));
        }
    }
    CoxeterDiagram::new(&names, &commuting).expect("valid diagram")
}

/// Spherical rank two: `{a, b}` commuting.
pub fn d4() -> CoxeterDiagram {
    CoxeterDiagram::new(&["a", "b"], &[("a", "b")]).expect("valid diagram")
}

/// `d` with every panel of thickness `q`.
pub fn thick(d: CoxeterDiagram, q: u32) -> CoxeterDiagram {
    d.with_uniform_thickness(q).expect("q >= 2")
}
