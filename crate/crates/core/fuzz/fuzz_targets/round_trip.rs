#![no_main]

use libfuzzer_sys::fuzz_target;
use qwalg::format::{parse, parse_bytes, write};

fuzz_target!(|data: &[u8]| {
    if let Ok(parsed) = parse_bytes(data) {
        let text = write(&parsed);
        let again = parse(&text).expect("written files parse");
        assert_eq!(again, parsed);
        assert_eq!(write(&again), text);
    }
});
