#![no_main]

use libfuzzer_sys::fuzz_target;
use qpi_core::catalog::parse;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(e) = parse(s) {
        let printed = e.to_string();
        let back = parse(&printed).expect("printed expression should parse");
        assert_eq!(back, e, "{s:?} printed as {printed:?}");
        assert_eq!(back.to_string(), printed);
    }
});
