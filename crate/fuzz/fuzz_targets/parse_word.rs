#![no_main]

use libfuzzer_sys::fuzz_target;
use racb_core::coxeter::{reduce, word_poset, Word};
use racb_core::fixtures::{d2, d3};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for d in [d2(), d3()] {
        let Ok(w) = Word::parse(&d, text) else { continue };
        assert_eq!(Word::parse(&d, &w.to_text(&d)).unwrap(), w);
        if w.len() <= 64 {
            let g = reduce(&d, &w).unwrap();
            assert!(g.length() <= w.len());
            let _ = word_poset(&d, &w);
        }
    }
});
