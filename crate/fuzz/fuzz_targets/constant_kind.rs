#![no_main]

use banach_core::ConstantKind;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(kind) = text.parse::<ConstantKind>() else { return };
    let printed = kind.to_string();
    let again: ConstantKind = printed.parse().expect("printed kind re-parses");
    assert_eq!(again, kind, "{printed}");
});
