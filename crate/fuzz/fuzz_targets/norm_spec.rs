#![no_main]

use banach_core::{parse_norm_spec, NormSpec, Vector2};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = parse_norm_spec(text) else { return };
    let printed = spec.to_string();
    let again: NormSpec = printed.parse().expect("printed spec re-parses");
    assert_eq!(again, spec, "{printed}");
    for v in [Vector2::new(1.0, 0.0), Vector2::new(0.3, -0.7), Vector2::new(-2.0, 5.0)] {
        let n = spec.norm(v);
        assert!(n.is_finite() && n > 0.0, "{printed}: ‖{v}‖ = {n}");
    }
});
