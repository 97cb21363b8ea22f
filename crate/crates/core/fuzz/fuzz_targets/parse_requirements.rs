#![no_main]

use libfuzzer_sys::fuzz_target;
use qwalg::axioms::{parse_requirements, OrderRelation};

fuzz_target!(|data: &str| {
    if let Ok(reqs) = parse_requirements(data) {
        for r in reqs {
            assert_eq!(r.name().parse(), Ok(r));
        }
    }
    let _ = data.parse::<OrderRelation>();
});
