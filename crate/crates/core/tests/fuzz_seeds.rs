//! Replays the checked-in fuzz corpus through the fuzz targets' checks.

use std::path::Path;

#[allow(dead_code)]
#[path = "../../../fuzz/src/lib.rs"]
mod checks;

fn replay(target: &str, check: fn(&[u8])) {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let data = std::fs::read(entry.unwrap().path()).unwrap();
        check(&data);
        seen += 1;
    }
    assert!(seen > 0, "no seeds in {}", dir.display());
}

#[test]
fn alphabet_parse_seeds() {
    replay("alphabet_parse", checks::alphabet_parse);
}

#[test]
fn trace_parse_seeds() {
    replay("trace_parse", checks::trace_parse);
}

#[test]
fn plan_parse_seeds() {
    replay("plan_parse", checks::plan_parse);
}

#[test]
fn group_word_seeds() {
    replay("group_word", checks::group_word);
}

mod random_inputs {
    use super::checks;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn alphabet_text(s in "(letters|edge|#|[abcxy' ]|\n){0,40}") {
            checks::alphabet_parse(s.as_bytes());
        }

        #[test]
        fn trace_text(s in "letters a b c( ab)?\\|edge a b(\\|edge b c)?\n[abc1 ]{0,20}") {
            checks::trace_parse(s.as_bytes());
        }

        #[test]
        fn plan_text(s in "[abcd;,]{0,12}") {
            checks::plan_parse(s.as_bytes());
        }

        #[test]
        fn group_text(s in "[abc' 1]{0,24}") {
            checks::group_word(s.as_bytes());
        }
    }
}
