#![no_main]

use libfuzzer_sys::fuzz_target;
use qpi_core::catalog::parse;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Err(e) = parse(s) {
            assert!(e.offset() <= s.len());
            assert!(s.is_char_boundary(e.offset()));
        }
    }
});
