//! Property checks shared by the fuzz targets and the seed-replay test.

use pcelim::factorization::ElimPlan;
use pcelim::group::{extend_alphabet, group_inverse, group_mul, is_reduced};
use pcelim::trace::equivalent;
use pcelim::{IndependenceAlphabet, Trace};

const PATH4: &str = "letters a b c d\nedge a b\nedge b c\nedge c d\n";
const TRIANGLE_GAP: &str = "letters a b c\nedge a b\n";

pub fn alphabet_parse(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(alpha) = IndependenceAlphabet::parse(text) else {
        return;
    };
    for a in alpha.letters() {
        assert!(!alpha.commute(a, a));
        for b in alpha.letters() {
            assert_eq!(alpha.commute(a, b), alpha.commute(b, a));
        }
    }
    let again = IndependenceAlphabet::parse(&alpha.to_string()).expect("printed alphabet parses");
    assert_eq!(again, alpha);
}

/// First line is an alphabet file with `|` for newlines, the rest a word.
pub fn trace_parse(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let (head, word) = text.split_once('\n').unwrap_or((text, ""));
    let Ok(alpha) = IndependenceAlphabet::parse(&head.replace('|', "\n")) else {
        return;
    };
    let Ok(letters) = alpha.parse_word(word) else {
        return;
    };
    if letters.len() > 64 {
        return;
    }
    let t = Trace::normalize(&alpha, &letters).expect("parsed letters");
    assert_eq!(t.len(), letters.len());
    assert!(equivalent(&alpha, t.word(), &letters).unwrap());
    let again = Trace::parse(&alpha, &alpha.format_word_spaced(t.word())).expect("printed trace parses");
    assert_eq!(again, t);
}

pub fn plan_parse(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 64 {
        return;
    }
    let alpha = IndependenceAlphabet::parse(PATH4).unwrap();
    let Ok(plan) = ElimPlan::parse(&alpha, text, 3) else {
        return;
    };
    for step in plan.steps() {
        assert!(step.verdict.is_tfsa);
        assert_eq!(step.derivations.len(), step.right.len());
    }
    assert!(plan.factorization().verify(3).unwrap().ok);
}

pub fn group_word(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let alpha = IndependenceAlphabet::parse(TRIANGLE_GAP).unwrap();
    let dbl = extend_alphabet(&alpha);
    let Ok(word) = dbl.parse_word(text) else {
        return;
    };
    if word.len() > 64 {
        return;
    }
    let g = dbl.reduce_word(&word);
    assert!(is_reduced(g.trace()));
    assert!(g.len() <= word.len());
    assert!(group_mul(&g, &group_inverse(&g)).is_empty());
}
