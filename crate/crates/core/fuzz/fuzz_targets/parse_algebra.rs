#![no_main]

use libfuzzer_sys::fuzz_target;
use qwalg::format::{parse_bytes, ParsedAlgebra};

fuzz_target!(|data: &[u8]| {
    if let Ok(parsed) = parse_bytes(data) {
        // Anything that parses must be usable.
        match parsed {
            ParsedAlgebra::Implication(a) if a.order() <= 8 => {
                let _ = qwalg::classify(&a);
            }
            ParsedAlgebra::Product(p) if p.order() <= 8 => {
                let _ = qwalg::to_implication(&p);
            }
            _ => {}
        }
    }
});
