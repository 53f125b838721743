//! Wing permutations: automorphisms of the building that permute one panel
//! and move each chamber along with its projection onto that panel.
//!
//! For a panel `P = panel(e, s)` and a permutation `theta` of its chambers,
//! a chamber `x` with projection `p = e·(s, v)` on `P` is sent to
//! `theta(p) · p⁻¹ · x`. Chambers projecting onto a `theta`-fixed chamber
//! are fixed.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::building::{Building, Chamber, Syllable};
use crate::coxeter::{firmness_witness_position, is_firm, word_poset, CoxeterDiagram, Gen, GroupElement};
use crate::error::{Error, Result};
use crate::flex::{chamber_firmness, flex_in_ball};
use crate::lab::{d_of, DEFAULT_LAB_CAP};

/// A permutation of the chambers of `panel(base, gen)`, extended to the
/// whole building.
///
/// `theta[v] = w` means `base·(gen, v) ↦ base·(gen, w)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WingPermutation {
    pub base: Chamber,
    pub gen: Gen,
    pub theta: Vec<u32>,
}

impl WingPermutation {
    pub fn is_identity(&self) -> bool {
        self.theta.iter().enumerate().all(|(v, &w)| v as u32 == w)
    }

    pub fn inverse(&self) -> WingPermutation {
        let mut inv = vec![0; self.theta.len()];
        for (v, &w) in self.theta.iter().enumerate() {
            inv[w as usize] = v as u32;
        }
        WingPermutation { base: self.base.clone(), gen: self.gen, theta: inv }
    }

    pub fn apply(&self, b: &Building, x: &Chamber) -> Chamber {
        let q = b.thickness(self.gen);
        let v = b.panel_projection_offset(&self.base, self.gen, x);
        let w = self.theta[v as usize];
        if v == w {
            return x.clone();
        }
        // theta(p) · p⁻¹ = base · (s, w - v) · base⁻¹
        let shift = (w + q - v) % q;
        let moved = b.step(&self.base, self.gen, shift);
        b.mul(&moved, &b.difference(&self.base, x))
    }
}

/// A finite product of wing permutations, applied right to left.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Automorphism {
    pub factors: Vec<WingPermutation>,
}

impl Automorphism {
    pub fn identity() -> Self {
        Automorphism::default()
    }

    pub fn apply(&self, b: &Building, x: &Chamber) -> Chamber {
        self.factors.iter().rev().fold(x.clone(), |y, f| f.apply(b, &y))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Automorphism { factors }
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            factors: self.factors.iter().rev().map(WingPermutation::inverse).collect(),
        }
    }

    /// Whether every chamber of `ball(c0, r)` is fixed.
    pub fn fixes_ball(&self, b: &Building, c0: &Chamber, r: usize) -> Result<bool> {
        Ok(fixes_all(&b.ball(c0, r)?, |x| self.apply(b, x)))
    }
}

impl From<WingPermutation> for Automorphism {
    fn from(w: WingPermutation) -> Self {
        Automorphism { factors: vec![w] }
    }
}

fn fixes_all(xs: &[Chamber], f: impl Fn(&Chamber) -> Chamber + Sync) -> bool {
    xs.par_iter().all(|x| f(x) == *x)
}

/// Extends a permutation of `panel(e, s)` to the building.
///
/// `theta` lists, for each offset `v` in `0..q_s`, the offset of the image of
/// `e·(s, v)`.
pub fn extend_panel_permutation(
    b: &Building,
    e: &Chamber,
    s: Gen,
    theta: &[u32],
) -> Result<Automorphism> {
    Ok(wing_permutation(b, e, s, theta)?.into())
}

/// Validating constructor for a single wing permutation.
pub fn wing_permutation(b: &Building, e: &Chamber, s: Gen, theta: &[u32]) -> Result<WingPermutation> {
    b.diagram().check(s)?;
    let q = b.thickness(s) as usize;
    let mut seen = vec![false; q];
    if theta.len() != q {
        return Err(Error::NotAPermutation(format!(
            "expected {q} images, got {}",
            theta.len()
        )));
    }
    for &w in theta {
        let w = w as usize;
        if w >= q || seen[w] {
            return Err(Error::NotAPermutation(format!("{theta:?} on {q} chambers")));
        }
        seen[w] = true;
    }
    Ok(WingPermutation { base: e.clone(), gen: s, theta: theta.to_vec() })
}

/// Transposition of the offsets `i` and `j` on `q` chambers.
pub fn transposition(q: u32, i: u32, j: u32) -> Vec<u32> {
    (0..q)
        .map(|v| if v == i { j } else if v == j { i } else { v })
        .collect()
}

/// For the root of `W` cut out by the panel `{u, u·s}`: whether `v` lies on
/// the side of `u`, i.e. `l(u⁻¹v) < l(s·u⁻¹v)`.
pub fn root_contains(d: &CoxeterDiagram, u: &GroupElement, s: Gen, v: &GroupElement) -> bool {
    let x = u.inverse(d).mul(d, v);
    // l(s·x) = l(x⁻¹·s), so this asks whether s is a left ascent of x.
    !x.inverse(d).is_descent(d, s)
}

/// Moving witness for a chamber outside the flex: a firm chamber `firm` on a
/// minimal gallery from `c0` to `chamber`, its inward neighbour `gate`, and a
/// wing permutation at `panel(gate, gen)` that fixes `gate`, moves `firm`
/// and fixes `ball(c0, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovingWitness {
    pub chamber: Chamber,
    pub firm: Chamber,
    pub gate: Chamber,
    pub gen: Gen,
    pub theta: Vec<u32>,
    pub image: Chamber,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointReport {
    pub n: usize,
    pub radius: usize,
    /// Panels of `ball(c0, radius)`, counted by their gate.
    pub panels: usize,
    /// Sampled generators of the fixator: transpositions at panels whose
    /// extension fixes `ball(c0, n)`.
    pub generators: usize,
    /// Chambers of `ball(c0, radius)` fixed by every sampled generator.
    pub fixed_set_size: usize,
    pub flex_size: usize,
    pub ball_size: usize,
    /// Every flexible chamber is fixed by every sampled generator.
    pub flex_fixed: bool,
    /// Flexible chambers moved by some sampled generator.
    pub flex_moved: Vec<Chamber>,
    pub witnesses: Vec<MovingWitness>,
    /// Non-flexible chambers whose witness panel has thickness 2.
    pub inapplicable: Vec<Chamber>,
    /// Non-flexible chambers for which the witness construction failed.
    pub missing: Vec<Chamber>,
    pub fixed_equals_flex: bool,
}

impl FixedPointReport {
    pub fn passed(&self) -> bool {
        self.flex_fixed && self.missing.is_empty()
    }

    pub fn applicable(&self) -> bool {
        self.inapplicable.is_empty()
    }
}

/// All panels `panel(g, s)` with gate `g` in `ball(c0, r - 1)`, where `g` is
/// the projection of `c0` (so `s` is an ascent of `δ(c0, g)`).
fn gated_panels(b: &Building, c0: &Chamber, r: usize) -> Result<Vec<(Chamber, Gen)>> {
    if r == 0 {
        return Ok(Vec::new());
    }
    let d = b.diagram();
    let mut out = Vec::new();
    for g in b.ball(c0, r - 1)? {
        for s in d.generators() {
            if !b.weyl_distance(c0, &g).is_descent(d, s) {
                out.push((g.clone(), s));
            }
        }
    }
    Ok(out)
}

fn moving_witness(
    b: &Building,
    c0: &Chamber,
    n: usize,
    c: &Chamber,
) -> Result<std::result::Result<MovingWitness, Chamber>> {
    let d = b.diagram();
    let y = b.difference(c0, c);
    let word = y.type_word();
    let poset = word_poset(d, &word)?;
    let i = firmness_witness_position(d, &word)?;
    let upper = poset.i_set(i)?;
    let syl = y.syllables();
    let prefix: Vec<Syllable> = upper
        .iter()
        .map(|&j| syl[j - 1])
        .chain(std::iter::once(syl[i - 1]))
        .collect();
    let firm = b.mul(c0, &b.canonicalize(&prefix)?);
    let last = syl[i - 1];
    let q = b.thickness(last.gen);
    let gate = b.step(&firm, last.gen, q - last.value);
    let on_gallery =
        b.gallery_distance(c0, &firm) + b.gallery_distance(&firm, c) == b.gallery_distance(c0, c);
    if !on_gallery || !is_firm(d, &b.weyl_distance(c0, &firm))? {
        return Err(Error::Inconsistent(format!(
            "firm prefix {} of {} is not a firm chamber on a minimal gallery",
            b.format_chamber(&firm),
            b.format_chamber(c)
        )));
    }
    if q < 3 {
        return Ok(Err(c.clone()));
    }
    let third = (1..q).find(|&w| w != last.value).expect("q >= 3");
    let theta = transposition(q, last.value, third);
    let w = WingPermutation { base: gate.clone(), gen: last.gen, theta };
    let image = w.apply(b, c);
    let fixes = fixes_all(&b.ball(c0, n)?, |x| w.apply(b, x));
    if !fixes || image == *c {
        return Err(Error::Inconsistent(format!(
            "wing swap at the panel of {} does not separate {} from ball(c0, {n})",
            b.format_chamber(&firm),
            b.format_chamber(c)
        )));
    }
    Ok(Ok(MovingWitness {
        chamber: c.clone(),
        firm,
        gate,
        gen: last.gen,
        theta: w.theta,
        image,
    }))
}

/// Checks, inside `ball(c0, radius)`, that the chambers fixed by the
/// fixator of `ball(c0, n)` are exactly the `n`-flex of `c0`.
///
/// The fixator is sampled by the transpositions at panels of the ball that
/// fix `ball(c0, n)`. Every flexible chamber must be fixed by all of them;
/// every other chamber must be moved by the wing swap at its firm
/// predecessor.
pub fn verify_fixed_point_theorem(
    b: &Building,
    c0: &Chamber,
    n: usize,
    radius: usize,
) -> Result<FixedPointReport> {
    if n < radius {
        let bound = d_of(b.diagram(), n, DEFAULT_LAB_CAP)?;
        if radius < bound.d {
            return Err(Error::RadiusTooSmall { radius, required: bound.d });
        }
    }
    let ball = b.ball(c0, radius)?;
    let inner = b.ball(c0, n.min(radius))?;
    let inner = if n > radius { b.ball(c0, n)? } else { inner };
    let flex: BTreeSet<Chamber> = flex_in_ball(b, c0, n, radius)?.into_iter().collect();

    let panels = gated_panels(b, c0, radius)?;
    let mut generators: Vec<WingPermutation> = Vec::new();
    for (g, s) in &panels {
        let q = b.thickness(*s);
        for i in 0..q {
            for j in i + 1..q {
                let w = WingPermutation { base: g.clone(), gen: *s, theta: transposition(q, i, j) };
                if fixes_all(&inner, |x| w.apply(b, x)) {
                    generators.push(w);
                }
            }
        }
    }

    let fixed: BTreeSet<Chamber> = ball
        .par_iter()
        .filter(|x| generators.iter().all(|w| w.apply(b, x) == **x))
        .cloned()
        .collect();
    let flex_moved: Vec<Chamber> = flex.difference(&fixed).cloned().collect();

    let mut witnesses = Vec::new();
    let mut inapplicable = Vec::new();
    let mut missing = Vec::new();
    for c in ball.iter().filter(|c| !flex.contains(*c)) {
        debug_assert!(chamber_firmness(b, c0, c) > n);
        match moving_witness(b, c0, n, c) {
            Ok(Ok(w)) => witnesses.push(w),
            Ok(Err(c)) => inapplicable.push(c),
            Err(Error::Inconsistent(_)) => missing.push(c.clone()),
            Err(e) => return Err(e),
        }
    }

    Ok(FixedPointReport {
        n,
        radius,
        panels: panels.len(),
        generators: generators.len(),
        fixed_set_size: fixed.len(),
        flex_size: flex.len(),
        ball_size: ball.len(),
        flex_fixed: flex_moved.is_empty(),
        flex_moved,
        witnesses,
        inapplicable,
        missing,
        fixed_equals_flex: fixed == flex,
    })
}

/// Checks that every wing permutation at `panel(e, s)` fixing `e` fixes
/// `ball(c0, r)`.
///
/// Requires `e` in the standard apartment of `c0`, `c0` on the `e`-side of
/// the panel, `δ(c0, e)·s` firm, and the far chamber `e·(s, 1)` at distance
/// greater than `r` from `c0`.
pub fn check_far_wing_fixator(
    b: &Building,
    c0: &Chamber,
    r: usize,
    e: &Chamber,
    s: Gen,
) -> Result<bool> {
    let d = b.diagram();
    d.check(s)?;
    let rel = b.difference(c0, e);
    if !rel.in_standard_apartment() {
        return Err(Error::Precondition("e is not in the standard apartment of c0".into()));
    }
    let u = b.weyl_distance(c0, e);
    if !root_contains(d, &u, s, &GroupElement::identity()) {
        return Err(Error::Precondition("c0 is not on the side of e".into()));
    }
    let far = u.ascend(d, s);
    if !is_firm(d, &far)? {
        return Err(Error::Precondition(format!(
            "{} is not firm",
            far.to_text(d)
        )));
    }
    if far.length() <= r {
        return Err(Error::Precondition(format!(
            "panel at distance {} is within radius {r}",
            far.length()
        )));
    }
    let ball = b.ball(c0, r)?;
    let q = b.thickness(s);
    for theta in permutations_fixing_zero(q) {
        let w = WingPermutation { base: e.clone(), gen: s, theta };
        if !fixes_all(&ball, |x| w.apply(b, x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All permutations of `0..q` fixing 0, in lexicographic order.
fn permutations_fixing_zero(q: u32) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, rest: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    go(&mut vec![0], &mut (1..q).collect(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn ch(b: &Building, text: &str) -> Chamber {
        b.parse_chamber(text).unwrap()
    }

    #[test]
    fn swap_examples() {
        let b = Building::new(thick(d1(), 3)).unwrap();
        let s = b.diagram().generator("s").unwrap();
        let e = Chamber::base();
        let g = extend_panel_permutation(&b, &e, s, &[0, 2, 1]).unwrap();
        assert_eq!(g.apply(&b, &ch(&b, "s:1 t:1")), ch(&b, "s:2 t:1"));
        assert_eq!(g.apply(&b, &ch(&b, "t:2")), ch(&b, "t:2"));
        let id = extend_panel_permutation(&b, &e, s, &[0, 1, 2]).unwrap();
        for x in b.ball(&e, 6).unwrap() {
            assert_eq!(id.apply(&b, &x), x);
        }
        assert!(matches!(
            extend_panel_permutation(&b, &e, s, &[0, 1, 1]),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(
            extend_panel_permutation(&b, &e, s, &[0, 1]),
            Err(Error::NotAPermutation(_))
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let b = Building::new(thick(d2(), 3)).unwrap();
        let (a, c) = (b.diagram().generator("a").unwrap(), b.diagram().generator("c").unwrap());
        let g = extend_panel_permutation(&b, &ch(&b, "c:1"), a, &[1, 2, 0])
            .unwrap()
            .compose(&extend_panel_permutation(&b, &Chamber::base(), c, &[2, 0, 1]).unwrap());
        let h = g.inverse();
        for x in b.ball(&Chamber::base(), 4).unwrap() {
            assert_eq!(h.apply(&b, &g.apply(&b, &x)), x);
        }
    }

    #[test]
    fn fixes_ball_examples() {
        let b = Building::new(thick(d1(), 3)).unwrap();
        let s = b.diagram().generator("s").unwrap();
        let e = Chamber::base();
        // Panel of type s at gate "s:1 t:1", distance 3 from e.
        let gate = ch(&b, "s:1 t:1");
        let far = extend_panel_permutation(&b, &gate, s, &[0, 2, 1]).unwrap();
        assert!(far.fixes_ball(&b, &e, 1).unwrap());
        assert!(far.fixes_ball(&b, &e, 2).unwrap());
        let toward = extend_panel_permutation(&b, &ch(&b, "t:1"), s, &[1, 0, 2]).unwrap();
        assert!(!toward.fixes_ball(&b, &e, 1).unwrap());
        assert!(Automorphism::identity().fixes_ball(&b, &e, 4).unwrap());
    }

    #[test]
    fn root_examples() {
        let d = d1();
        let s = d.generator("s").unwrap();
        let e = GroupElement::identity();
        assert!(root_contains(&d, &e, s, &e));
        assert!(!root_contains(&d, &e, s, &GroupElement::parse(&d, "s t").unwrap()));
        assert!(root_contains(&d, &e, s, &GroupElement::parse(&d, "t s").unwrap()));
    }

    #[test]
    fn fixed_point_examples() {
        let e = Chamber::base();
        let b = Building::new(thick(d2(), 3)).unwrap();
        let r = verify_fixed_point_theorem(&b, &e, 1, 3).unwrap();
        assert!(r.passed() && r.applicable() && r.fixed_equals_flex);
        assert_eq!(r.witnesses.len(), r.ball_size - r.flex_size);

        let b = Building::new(thick(d1(), 3)).unwrap();
        let r = verify_fixed_point_theorem(&b, &e, 1, 3).unwrap();
        assert!(r.passed() && r.fixed_equals_flex);
        let outside: usize = (2..=3).map(|k| b.sphere(&e, k).unwrap().len()).sum();
        assert_eq!(r.witnesses.len(), outside);

        let r = verify_fixed_point_theorem(&b, &e, 3, 3).unwrap();
        assert!(r.passed() && r.witnesses.is_empty());

        let b = Building::new(thick(d1(), 2)).unwrap();
        let r = verify_fixed_point_theorem(&b, &e, 1, 3).unwrap();
        assert!(r.passed() && !r.applicable());
    }

    #[test]
    fn far_wing_examples() {
        let e = Chamber::base();
        let b = Building::new(thick(d1(), 3)).unwrap();
        let s = b.diagram().generator("s").unwrap();
        let t = b.diagram().generator("t").unwrap();
        assert!(check_far_wing_fixator(&b, &e, 1, &ch(&b, "s:1 t:1"), s).unwrap());
        assert!(matches!(
            check_far_wing_fixator(&b, &e, 2, &ch(&b, "s:1"), t),
            Err(Error::Precondition(_))
        ));

        let b = Building::new(thick(d2(), 2)).unwrap();
        let a = b.diagram().generator("a").unwrap();
        let bb = b.diagram().generator("b").unwrap();
        assert!(check_far_wing_fixator(&b, &e, 1, &ch(&b, "a:1 c:1"), bb).unwrap());
        // "c b a" has two descents.
        assert!(matches!(
            check_far_wing_fixator(&b, &e, 1, &ch(&b, "c:1 b:1"), a),
            Err(Error::Precondition(_))
        ));
    }
}
