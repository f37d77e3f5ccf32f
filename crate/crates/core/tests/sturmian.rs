use brickword::algebra::Algebra;
use brickword::bricks::Checker;
use brickword::fixtures;
use brickword::sturmian::{
    bridge_with, characteristic_prefix, characteristic_window_check, encode_blocks, is_balanced,
    sturmian_window_check, BridgeSide, DirectiveSequence,
};
use brickword::words::{complexity_profile, WordRep};
use proptest::prelude::*;

fn directive() -> impl Strategy<Value = DirectiveSequence> {
    (0u32..4, prop::collection::vec(1u32..4, 1..3))
        .prop_map(|(d1, period)| DirectiveSequence::new(vec![d1], period).unwrap())
}

fn occurs(w: &[u8], needle: &[u8]) -> bool {
    w.windows(needle.len()).any(|x| x == needle)
}

/// `a core a` and `b core b` both occur; on the right-infinite side the
/// left end may stand in for the outer letter of a prefix occurrence.
fn is_violation(w: &[u8], core: &[u8], side: BridgeSide) -> bool {
    let wrap = |c: u8| [&[c][..], core, &[c][..]].concat();
    if occurs(w, &wrap(b'a')) && occurs(w, &wrap(b'b')) {
        return true;
    }
    side == BridgeSide::RightInfinite
        && w.starts_with(core)
        && w.len() > core.len()
        && occurs(w, &wrap(if w[core.len()] == b'a' { b'b' } else { b'a' }))
}

fn lambda3() -> Checker {
    Checker::new(&Algebra::parse(fixtures::LAMBDA3).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prefixes_nest(d in directive(), m in 1usize..200, extra in 0usize..200) {
        let short = characteristic_prefix(&d, m).unwrap();
        let long = characteristic_prefix(&d, m + extra).unwrap();
        prop_assert_eq!(&long.letters[..m], &short.letters[..]);
        prop_assert!(long.certified);
    }

    #[test]
    fn characteristic_prefixes_are_clean(d in directive(), n in 1usize..400) {
        let w = characteristic_prefix(&d, n).unwrap().letters;
        prop_assert!(sturmian_window_check(&w).is_none());
        prop_assert!(characteristic_window_check(&w).is_none());
        prop_assert!(is_balanced(&w, 30));
    }

    #[test]
    fn complexity_is_k_plus_one(d in directive()) {
        let w = characteristic_prefix(&d, 4000).unwrap().letters;
        let profile = complexity_profile(&w, 50).unwrap();
        for (k, p) in (1..).zip(profile) {
            prop_assert_eq!(p, k + 1);
        }
    }

    #[test]
    fn bridge_matches_sturmian_verdicts(
        d in directive(),
        n in 4usize..120,
        skip in 0usize..3,
        flip in prop::option::of(any::<prop::sample::Index>()),
    ) {
        let c = lambda3();
        let mut w = characteristic_prefix(&d, n + skip).unwrap().letters.split_off(skip);
        if let Some(ix) = flip {
            let k = ix.index(w.len());
            w[k] = if w[k] == b'a' { b'b' } else { b'a' };
        }
        for side in [BridgeSide::RightInfinite, BridgeSide::BiInfinite] {
            let r = bridge_with(&c, &w, side, false).unwrap();
            prop_assert_eq!(&r.binary, &encode_blocks(&w));
            prop_assert!(r.consistent());
            if let Some(core) = &r.witness_core {
                prop_assert!(is_violation(&w, core, side));
            }
        }
    }
}

#[test]
fn explicit_violation_maps_back() {
    let c = lambda3();
    let w = b"abaabbab";
    let r = bridge_with(&c, w, BridgeSide::BiInfinite, false).unwrap();
    let v = r.violation.clone().unwrap();
    assert_eq!(r.witness_core.as_deref(), Some(&v.core[..]));
    assert!(v.core.is_empty());
}

#[test]
fn fibonacci_bridge_scales() {
    let c = lambda3();
    let fib = characteristic_prefix(&DirectiveSequence::fibonacci(), 500).unwrap();
    for side in [BridgeSide::RightInfinite, BridgeSide::BiInfinite] {
        let r = bridge_with(&c, &fib.letters, side, true).unwrap();
        assert!(r.brick.verdict, "{side:?}");
        assert!(r.violation.is_none());
    }
    let r = bridge_with(&c, &fib.letters[1..], BridgeSide::RightInfinite, true).unwrap();
    assert!(!r.brick.verdict);
    assert!(r.violation.is_some());
    let r = bridge_with(&c, &fib.letters[1..], BridgeSide::BiInfinite, true).unwrap();
    assert!(r.brick.verdict);
}

#[test]
fn periodic_windows() {
    let w = characteristic_prefix(&"1".parse().unwrap(), 40).unwrap();
    assert!(!w.certified);
    assert!(sturmian_window_check(&w.letters).is_none());
    let rep = WordRep::RightInf {
        prefix: Vec::new(),
        period: b"ab".to_vec(),
    };
    assert_eq!(rep.classify_periodicity(), brickword::words::Periodicity::Periodic);
}

#[test]
fn invalid_bridge_input() {
    let c = lambda3();
    assert!(bridge_with(&c, b"abc", BridgeSide::BiInfinite, false).is_err());
    assert!(bridge_with(&c, b"", BridgeSide::BiInfinite, false).is_err());
    assert!(characteristic_prefix(&DirectiveSequence::fibonacci(), 0).is_err());
}
