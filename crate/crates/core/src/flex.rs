//! Firm chambers, closing squares, square closure and the `n`-flex of a
//! chamber.
//!
//! Internally chambers are handled relative to `c0` (as `c0⁻¹ c`), which turns
//! gallery distance from `c0` into syllable count and the Weyl distance from
//! `c0` into the type word.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;

use crate::building::{Building, Chamber};
use crate::coxeter::{firmness, is_firm, last_movable, Gen};
use crate::error::{Error, Result};
use crate::lab::{d_of, DEFAULT_LAB_CAP};

/// Split of a sphere around `c0` into firm and non-firm chambers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpherePartition {
    pub n: usize,
    pub firm: Vec<Chamber>,
    pub not_firm: Vec<Chamber>,
}

/// Whether `δ(c0, c)` has a unique descent.
pub fn is_firm_chamber(b: &Building, c0: &Chamber, c: &Chamber) -> Result<bool> {
    if c0 == c {
        return Err(Error::Precondition("firmness of c0 relative to itself".into()));
    }
    is_firm(b.diagram(), &b.weyl_distance(c0, c))
}

/// `F#(δ(c0, c))`.
pub fn chamber_firmness(b: &Building, c0: &Chamber, c: &Chamber) -> usize {
    firmness(b.diagram(), &b.weyl_distance(c0, c))
}

pub fn partition_sphere(b: &Building, c0: &Chamber, n: usize) -> Result<SpherePartition> {
    let sphere = b.sphere(c0, n)?;
    let mut firm = Vec::new();
    let mut not_firm = Vec::new();
    for c in sphere {
        if n > 0 && is_firm_chamber(b, c0, &c)? {
            firm.push(c);
        } else {
            not_firm.push(c);
        }
    }
    Ok(SpherePartition { n, firm, not_firm })
}

fn expect_distance(b: &Building, c0: &Chamber, c: &Chamber, n: usize, name: &str) -> Result<()> {
    let actual = b.gallery_distance(c0, c);
    if actual != n {
        return Err(Error::Precondition(format!(
            "{name} is at distance {actual} from c0, expected {n}"
        )));
    }
    Ok(())
}

fn expect_adjacent(b: &Building, x: &Chamber, y: &Chamber, names: &str) -> Result<Gen> {
    b.adjacency(x, y)
        .ok_or_else(|| Error::Precondition(format!("{names} are not adjacent")))
}

fn expect_commuting(b: &Building, s: Gen, t: Gen) -> Result<()> {
    if !b.diagram().commutes(s, t) {
        let d = b.diagram();
        return Err(Error::Inconsistent(format!(
            "square with colors {} and {} where m = inf",
            d.name(s),
            d.name(t)
        )));
    }
    Ok(())
}

/// Given `c1, c2` at distance `n` and `c3` at distance `n + 1` with
/// `c1 ~t c3`, `c2 ~s c3`, `s ≠ t`: the chamber `c4` at distance `n - 1`
/// with `c1 ~s c4` and `c2 ~t c4`.
pub fn close_square_down(
    b: &Building,
    c0: &Chamber,
    c1: &Chamber,
    c2: &Chamber,
    c3: &Chamber,
) -> Result<Chamber> {
    let n = b.gallery_distance(c0, c1);
    if n == 0 {
        return Err(Error::Precondition("c1 must differ from c0".into()));
    }
    expect_distance(b, c0, c2, n, "c2")?;
    expect_distance(b, c0, c3, n + 1, "c3")?;
    let t = expect_adjacent(b, c1, c3, "c1 and c3")?;
    let s = expect_adjacent(b, c2, c3, "c2 and c3")?;
    if s == t {
        return Err(Error::Precondition("the two colors must differ".into()));
    }
    expect_commuting(b, s, t)?;
    // c4 = c1 · (c3⁻¹ c2)
    let c4 = b.mul(c1, &b.difference(c3, c2));
    expect_distance(b, c0, &c4, n - 1, "c4")
        .map_err(|e| Error::Inconsistent(e.to_string()))?;
    Ok(c4)
}

/// Given `c1, c2` at distance `n`, `c3` at distance `n - 1` with
/// `c1 ~s c2`, `c2 ~t c3`, `s ≠ t`: the chamber `c4` at distance `n - 1` with
/// `c1 ~t c4` and `c3 ~s c4`.
pub fn close_square_sideways(
    b: &Building,
    c0: &Chamber,
    c1: &Chamber,
    c2: &Chamber,
    c3: &Chamber,
) -> Result<Chamber> {
    let n = b.gallery_distance(c0, c1);
    if n == 0 {
        return Err(Error::Precondition("c1 must differ from c0".into()));
    }
    expect_distance(b, c0, c2, n, "c2")?;
    expect_distance(b, c0, c3, n - 1, "c3")?;
    let s = expect_adjacent(b, c1, c2, "c1 and c2")?;
    let t = expect_adjacent(b, c2, c3, "c2 and c3")?;
    if s == t {
        return Err(Error::Precondition("the two colors must differ".into()));
    }
    expect_commuting(b, s, t)?;
    // c4 = c3 · (c2⁻¹ c1)
    let c4 = b.mul(c3, &b.difference(c2, c1));
    expect_distance(b, c0, &c4, n - 1, "c4")
        .map_err(|e| Error::Inconsistent(e.to_string()))?;
    Ok(c4)
}

/// Given `c4` at distance `n - 1` and `c1, c2` at distance `n` with
/// `c4 ~s c1`, `c4 ~t c2`, `s ≠ t` commuting: the unique `c3` at distance
/// `n + 1` with `c3 ~t c1` and `c3 ~s c2`.
pub fn close_square_up(
    b: &Building,
    c0: &Chamber,
    c4: &Chamber,
    c1: &Chamber,
    c2: &Chamber,
) -> Result<Chamber> {
    let n = b.gallery_distance(c0, c4) + 1;
    expect_distance(b, c0, c1, n, "c1")?;
    expect_distance(b, c0, c2, n, "c2")?;
    let s = expect_adjacent(b, c4, c1, "c4 and c1")?;
    let t = expect_adjacent(b, c4, c2, "c4 and c2")?;
    if s == t {
        return Err(Error::Precondition("the two colors must differ".into()));
    }
    if !b.diagram().commutes(s, t) {
        return Err(Error::Precondition("the two colors must commute".into()));
    }
    let c3 = b.mul(c1, &b.difference(c4, c2));
    expect_distance(b, c0, &c3, n + 1, "c3")
        .map_err(|e| Error::Inconsistent(e.to_string()))?;
    Ok(c3)
}

/// Square closure of `set` with respect to `c0`, refusing to grow past
/// gallery distance `radius_guard`.
pub fn square_closure_within(
    b: &Building,
    c0: &Chamber,
    set: &[Chamber],
    radius_guard: usize,
) -> Result<BTreeSet<Chamber>> {
    let d = b.diagram();
    let c0_inv = b.inverse(c0);
    let mut members: HashSet<Chamber> = HashSet::new();
    let mut queue: VecDeque<Chamber> = VecDeque::new();
    for c in set {
        let y = b.mul(&c0_inv, c);
        if members.insert(y.clone()) {
            queue.push_back(y);
        }
    }
    let is_ascent = |y: &Chamber, s: Gen| last_movable(d, y.syllables(), |x| x.gen, s).is_none();

    while let Some(y) = queue.pop_front() {
        let mut found: Vec<Chamber> = Vec::new();
        // y in the role of the lower corner c4.
        for s in d.generators().filter(|&s| is_ascent(&y, s)) {
            for t in d.generators().filter(|&t| s < t && d.commutes(s, t) && is_ascent(&y, t)) {
                for v in 1..b.thickness(s) {
                    let up_s = b.step(&y, s, v);
                    if !members.contains(&up_s) {
                        continue;
                    }
                    for u in 1..b.thickness(t) {
                        if members.contains(&b.step(&y, t, u)) {
                            found.push(b.step(&up_s, t, u));
                        }
                    }
                }
            }
        }
        // y in the role of a side corner c1, reached from c4 through color s.
        for (j, x) in y.syllables().iter().enumerate() {
            let s = x.gen;
            if last_movable(d, y.syllables(), |z| z.gen, s) != Some(j) {
                continue;
            }
            let c4 = b.step(&y, s, b.thickness(s) - x.value);
            if !members.contains(&c4) {
                continue;
            }
            for t in d.generators().filter(|&t| d.commutes(s, t) && is_ascent(&c4, t)) {
                for u in 1..b.thickness(t) {
                    if members.contains(&b.step(&c4, t, u)) {
                        found.push(b.step(&y, t, u));
                    }
                }
            }
        }
        for c3 in found {
            if members.contains(&c3) {
                continue;
            }
            if c3.len() > radius_guard {
                return Err(Error::RadiusTooSmall {
                    radius: radius_guard,
                    required: c3.len(),
                });
            }
            members.insert(c3.clone());
            queue.push_back(c3);
        }
    }
    Ok(members.iter().map(|y| b.mul(c0, y)).collect())
}

/// Square closure with the radius guard derived from the length bound
/// `d(m)`, where `m` is the largest distance from `c0` within `set`.
pub fn square_closure(b: &Building, c0: &Chamber, set: &[Chamber]) -> Result<BTreeSet<Chamber>> {
    let m = set.iter().map(|c| b.gallery_distance(c0, c)).max().unwrap_or(0);
    let bound = d_of(b.diagram(), m, DEFAULT_LAB_CAP)?;
    square_closure_within(b, c0, set, bound.d.max(m))
}

/// `Flex(c0, n)`: the chambers `c` with `F#(δ(c0, c)) <= n`, found inside
/// `ball(c0, radius)`. Refuses radii below the length bound `d(n)`.
pub fn flex_set(b: &Building, c0: &Chamber, n: usize, radius: usize) -> Result<Vec<Chamber>> {
    let bound = d_of(b.diagram(), n, DEFAULT_LAB_CAP)?;
    if radius < bound.d {
        return Err(Error::RadiusTooSmall { radius, required: bound.d });
    }
    flex_in_ball(b, c0, n, radius)
}

/// Chambers of `ball(c0, radius)` with firmness at most `n`, without the
/// radius check.
pub(crate) fn flex_in_ball(
    b: &Building,
    c0: &Chamber,
    n: usize,
    radius: usize,
) -> Result<Vec<Chamber>> {
    let ball = b.ball(c0, radius)?;
    Ok(ball
        .into_par_iter()
        .filter(|c| chamber_firmness(b, c0, c) <= n)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlexReport {
    pub n: usize,
    pub radius: usize,
    pub equal: bool,
    pub flex_size: usize,
    pub closure_size: usize,
    /// Largest distance from `c0` of a chamber in the flex.
    pub max_distance: usize,
    pub d_of_n: usize,
    /// `Flex(c0, n) ⊆ ball(c0, d(n))`.
    pub within_bound: bool,
    pub only_in_closure: Vec<Chamber>,
    pub only_in_flex: Vec<Chamber>,
}

impl FlexReport {
    pub fn passed(&self) -> bool {
        self.equal && self.within_bound
    }
}

/// Computes the square closure of `ball(c0, n)` and the firmness-defined
/// flex independently and compares them.
pub fn verify_flex_theorem(
    b: &Building,
    c0: &Chamber,
    n: usize,
    radius: usize,
) -> Result<FlexReport> {
    let bound = d_of(b.diagram(), n, DEFAULT_LAB_CAP)?;
    let flex: BTreeSet<Chamber> = flex_set(b, c0, n, radius)?.into_iter().collect();
    let ball = b.ball(c0, n)?;
    let closure = square_closure_within(b, c0, &ball, radius)?;
    let max_distance = flex.iter().map(|c| b.gallery_distance(c0, c)).max().unwrap_or(0);
    Ok(FlexReport {
        n,
        radius,
        equal: flex == closure,
        flex_size: flex.len(),
        closure_size: closure.len(),
        max_distance,
        d_of_n: bound.d,
        within_bound: max_distance <= bound.d,
        only_in_closure: closure.difference(&flex).cloned().collect(),
        only_in_flex: flex.difference(&closure).cloned().collect(),
    })
}
