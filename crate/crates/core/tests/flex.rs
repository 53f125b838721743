mod common;

use std::collections::{BTreeSet, HashMap};

use common::*;
use racb_core::building::{Building, Chamber};
use racb_core::fixtures::{d1, d2, d3};
use racb_core::flex::{
    close_square_down, close_square_up, flex_set, is_firm_chamber, partition_sphere,
    square_closure, square_closure_within, verify_flex_theorem,
};
use racb_core::Error;

fn ch(b: &Building, text: &str) -> Chamber {
    b.parse_chamber(text).unwrap()
}

/// Flex membership decided by brute-force firmness of the Weyl distance.
fn oracle_flex(b: &Building, c0: &Chamber, n: usize, radius: usize) -> BTreeSet<Chamber> {
    bfs_ball(b, c0, radius)
        .into_keys()
        .filter(|c| oracle_firmness(b.diagram(), &from_word(b.weyl_distance(c0, c).word())) <= n)
        .collect()
}

/// Naive square closure: repeatedly scan all triples of the current set.
fn oracle_closure(b: &Building, c0: &Chamber, start: &[Chamber]) -> BTreeSet<Chamber> {
    let mut set: BTreeSet<Chamber> = start.iter().cloned().collect();
    loop {
        let dist: HashMap<&Chamber, usize> = set.iter().map(|c| (c, b.gallery_distance(c0, c))).collect();
        let mut added = Vec::new();
        for c4 in &set {
            for c1 in &set {
                for c2 in &set {
                    if dist[c1] != dist[c4] + 1 || dist[c2] != dist[c4] + 1 || c1 >= c2 {
                        continue;
                    }
                    let (Some(s), Some(t)) = (b.adjacency(c4, c1), b.adjacency(c4, c2)) else {
                        continue;
                    };
                    if s == t || !b.diagram().commutes(s, t) {
                        continue;
                    }
                    // The fourth corner: t-adjacent to c1 and s-adjacent to c2, one step further.
                    for (g, c3) in neighbours(b, c1) {
                        if g == t
                            && b.gallery_distance(c0, &c3) == dist[c4] + 2
                            && b.adjacency(c2, &c3) == Some(s)
                            && !set.contains(&c3)
                        {
                            added.push(c3);
                        }
                    }
                }
            }
        }
        if added.is_empty() {
            return set;
        }
        set.extend(added);
    }
}

#[test]
fn firm_chamber_examples() {
    let e = Chamber::base();
    let b = building(d2(), 2);
    assert!(!is_firm_chamber(&b, &e, &ch(&b, "a:1 b:1")).unwrap());
    assert!(is_firm_chamber(&b, &e, &ch(&b, "a:1 c:1")).unwrap());
    let b = building(d1(), 3);
    for c in b.ball(&e, 4).unwrap().into_iter().filter(|c| !c.is_base()) {
        assert!(is_firm_chamber(&b, &e, &c).unwrap());
    }
}

#[test]
fn partition_matches_oracle() {
    let b = building(d3(), 2);
    let c0 = ch(&b, "r2:1");
    for n in 1..=3 {
        let p = partition_sphere(&b, &c0, n).unwrap();
        for c in &p.firm {
            assert!(oracle_is_firm(b.diagram(), &from_word(b.weyl_distance(&c0, c).word())));
        }
        for c in &p.not_firm {
            assert!(!oracle_is_firm(b.diagram(), &from_word(b.weyl_distance(&c0, c).word())));
        }
    }
}

#[test]
fn close_square_examples_match_brute_force() {
    let b = building(d2(), 2);
    let e = Chamber::base();
    let c4 = close_square_down(&b, &e, &ch(&b, "a:1"), &ch(&b, "b:1"), &ch(&b, "a:1 b:1")).unwrap();
    assert_eq!(c4, e);

    // The same square seen from a shifted base chamber.
    let c0 = ch(&b, "c:1");
    let (c1, c2, c3) = (ch(&b, "c:1 a:1"), ch(&b, "c:1 b:1"), ch(&b, "c:1 a:1 b:1"));
    let lib = close_square_down(&b, &c0, &c1, &c2, &c3).unwrap();
    let brute: Vec<Chamber> = b
        .ball(&c0, 0)
        .unwrap()
        .into_iter()
        .filter(|x| b.adjacency(&c1, x).is_some() && b.adjacency(&c2, x).is_some())
        .collect();
    assert_eq!(vec![lib], brute);

    let up = close_square_up(&b, &e, &e, &ch(&b, "a:1"), &ch(&b, "b:1")).unwrap();
    let brute: Vec<Chamber> = b
        .sphere(&e, 2)
        .unwrap()
        .into_iter()
        .filter(|x| b.adjacency(&ch(&b, "a:1"), x).is_some() && b.adjacency(&ch(&b, "b:1"), x).is_some())
        .collect();
    assert_eq!(vec![up.clone()], brute);
    assert_eq!(close_square_down(&b, &e, &ch(&b, "a:1"), &ch(&b, "b:1"), &up).unwrap(), e);

    let b3 = building(d3(), 2);
    let up = close_square_up(&b3, &e, &e, &ch(&b3, "r1:1"), &ch(&b3, "r3:1")).unwrap();
    assert_eq!(up, ch(&b3, "r1:1 r3:1"));
    assert!(matches!(
        close_square_up(&b3, &e, &e, &ch(&b3, "r1:1"), &ch(&b3, "r2:1")),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn closure_examples_match_naive_closure() {
    let e = Chamber::base();
    let b = building(d1(), 3);
    let ball = b.ball(&e, 2).unwrap();
    let closure = square_closure(&b, &e, &ball).unwrap();
    assert_eq!(closure, ball.iter().cloned().collect());
    let b = building(d2(), 2);
    let start = [e.clone(), ch(&b, "a:1"), ch(&b, "b:1")];
    let closure = square_closure(&b, &e, &start).unwrap();
    assert_eq!(closure, oracle_closure(&b, &e, &start));
    assert_eq!(closure.len(), 4);
    assert!(square_closure(&b, &e, &[]).unwrap().is_empty());

    for (b, n) in [(building(d2(), 2), 1), (building(d3(), 2), 1), (building(d2(), 3), 1)] {
        let ball = b.ball(&e, n).unwrap();
        assert_eq!(square_closure(&b, &e, &ball).unwrap(), oracle_closure(&b, &e, &ball));
    }
    let ball = building(d2(), 2).ball(&e, 1).unwrap();
    assert!(matches!(
        square_closure_within(&building(d2(), 2), &e, &ball, 1),
        Err(Error::RadiusTooSmall { .. })
    ));
}

#[test]
fn flex_examples_match_oracle() {
    let e = Chamber::base();
    let b = building(d2(), 2);
    let flex: BTreeSet<Chamber> = flex_set(&b, &e, 1, 4).unwrap().into_iter().collect();
    let expect: BTreeSet<Chamber> =
        ["", "a:1", "b:1", "c:1", "a:1 b:1"].iter().map(|t| ch(&b, t)).collect();
    assert_eq!(flex, expect);
    assert_eq!(flex, oracle_flex(&b, &e, 1, 4));
    assert_eq!(flex_set(&b, &e, 0, 4).unwrap(), vec![e.clone()]);

    let b = building(d1(), 3);
    let flex = flex_set(&b, &e, 2, 4).unwrap();
    assert_eq!(flex, b.ball(&e, 2).unwrap());
    assert_eq!(flex.len(), 13);
    assert_eq!(flex.into_iter().collect::<BTreeSet<_>>(), oracle_flex(&b, &e, 2, 4));

    let b = building(d3(), 2);
    let flex = flex_set(&b, &e, 1, 4).unwrap();
    assert!(!flex.contains(&ch(&b, "r1:1 r2:1")));
    assert_eq!(flex.into_iter().collect::<BTreeSet<_>>(), oracle_flex(&b, &e, 1, 4));
}

#[test]
fn flex_theorem_examples() {
    let e = Chamber::base();
    for (b, n, size) in [(building(d2(), 2), 1, 5), (building(d1(), 3), 2, 13), (building(d3(), 2), 1, 13)] {
        let r = verify_flex_theorem(&b, &e, n, 4).unwrap();
        assert!(r.equal && r.within_bound, "{r:?}");
        assert_eq!(r.flex_size, size);
    }
    let c0 = ch(&building(d2(), 2), "c:1 a:1");
    let r = verify_flex_theorem(&building(d2(), 2), &c0, 1, 4).unwrap();
    assert!(r.passed());
}

/// Chambers on some minimal gallery from `c0` to `c`.
fn on_minimal_galleries(dist: &HashMap<Chamber, usize>, b: &Building, c: &Chamber) -> Vec<Chamber> {
    let total = dist[c];
    dist.iter()
        .filter(|(x, &k)| k <= total && k + b.gallery_distance(x, c) == total)
        .map(|(x, _)| x.clone())
        .collect()
}

#[test]
fn flex_is_gallery_closed_and_monotone() {
    let e = Chamber::base();
    for b in [building(d2(), 2), building(d3(), 2), building(d2(), 3)] {
        let dist = bfs_ball(&b, &e, 4);
        let mut previous: BTreeSet<Chamber> = BTreeSet::new();
        for n in 0..=2 {
            let flex: BTreeSet<Chamber> = flex_set(&b, &e, n, 4)
                .unwrap()
                .into_iter()
                .filter(|c| dist.contains_key(c))
                .collect();
            for c in &flex {
                for x in on_minimal_galleries(&dist, &b, c) {
                    assert!(flex.contains(&x));
                }
            }
            assert!(previous.is_subset(&flex));
            for c in b.ball(&e, n).unwrap() {
                assert!(flex.contains(&c));
            }
            previous = flex;
        }
    }
}
