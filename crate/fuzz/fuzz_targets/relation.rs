#![no_main]

use banach_core::{parse_relation, Relation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(relation) = parse_relation(text) else { return };
    let printed = relation.to_string();
    let again: Relation = printed.parse().expect("printed relation re-parses");
    assert_eq!(again, relation, "{printed}");
});
