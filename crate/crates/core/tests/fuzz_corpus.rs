//! Replays the fuzz seed corpus through the fuzz targets' checks so the
//! seeds stay meaningful on a stable toolchain.

use std::path::PathBuf;

use racb_core::building::Building;
use racb_core::coxeter::{reduce, CoxeterDiagram, Word};
use racb_core::fixtures::{d1, d2, d3, thick};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| std::fs::read_to_string(entry.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn diagram_seeds() {
    let mut parsed = 0;
    for text in seeds("parse_diagram") {
        if let Ok(d) = CoxeterDiagram::from_json(&text) {
            let again = CoxeterDiagram::from_json(&d.to_json()).unwrap();
            assert_eq!(again.to_json(), d.to_json());
            parsed += 1;
        }
    }
    assert!(parsed >= 5);
}

#[test]
fn word_seeds() {
    for text in seeds("parse_word") {
        for d in [d2(), d3()] {
            let Ok(w) = Word::parse(&d, &text) else { continue };
            assert_eq!(Word::parse(&d, &w.to_text(&d)).unwrap(), w);
            assert!(reduce(&d, &w).unwrap().length() <= w.len());
        }
    }
}

#[test]
fn chamber_seeds() {
    for text in seeds("parse_chamber") {
        for d in [thick(d1(), 3), thick(d2(), 3)] {
            let b = Building::new(d).unwrap();
            let Ok(c) = b.parse_chamber(&text) else { continue };
            assert_eq!(b.parse_chamber(&b.format_chamber(&c)).unwrap(), c);
            assert!(b.mul(&c, &b.inverse(&c)).is_base());
        }
    }
}
