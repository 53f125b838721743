#![no_main]

use libfuzzer_sys::fuzz_target;
use racb_core::coxeter::CoxeterDiagram;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = CoxeterDiagram::from_json(text) {
        // The canonical form must parse back to the same diagram.
        let again = CoxeterDiagram::from_json(&d.to_json()).expect("canonical json parses");
        assert_eq!(again.to_json(), d.to_json());
    }
});
