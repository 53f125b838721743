#![no_main]

use libfuzzer_sys::fuzz_target;
use racb_core::building::Building;
use racb_core::fixtures::{d1, d2, thick};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for d in [thick(d1(), 3), thick(d2(), 3)] {
        let b = Building::new(d).unwrap();
        let Ok(c) = b.parse_chamber(text) else { continue };
        let back = b.parse_chamber(&b.format_chamber(&c)).unwrap();
        assert_eq!(back, c);
        assert_eq!(b.mul(&c, &b.inverse(&c)).len(), 0);
    }
});
