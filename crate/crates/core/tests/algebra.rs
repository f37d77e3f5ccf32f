use brickword::algebra::{Algebra, Presentation, Sign};
use brickword::error::Error;
use brickword::fixtures;
use brickword::strings::{enumerate_bands, enumerate_strings, enumerate_strings_capped};

#[test]
fn syntax_errors_carry_lines() {
    let cases = [
        ("vertex v\narrow a v w\n", 2),
        ("vertex v\narrow a v v\nrelation a b\n", 3),
        ("vertex v\nvertex v\n", 2),
        ("vertex v\nfrobnicate\n", 2),
        ("vertex v\nvertex w\narrow a v w\narrow b v w\nrelation a b\n", 5),
    ];
    for (text, line) in cases {
        let err = Presentation::parse(text).unwrap_err();
        let got = match err {
            Error::Syntax { line, .. }
            | Error::UnknownVertex { line, .. }
            | Error::UnknownArrow { line, .. }
            | Error::DuplicateId { line, .. }
            | Error::NonComposable { line, .. } => line,
            other => panic!("{other}"),
        };
        assert_eq!(got, line, "{text}");
    }
}

#[test]
fn printing_roundtrips() {
    for text in [fixtures::LAMBDA3, fixtures::GAMMA, fixtures::FREE_LOOP] {
        let p = Presentation::parse(text).unwrap();
        assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p);
    }
}

#[test]
fn gentle_flags() {
    assert!(Algebra::parse(fixtures::LAMBDA3).unwrap().report().is_gentle);
    assert!(!Algebra::parse(fixtures::GAMMA).unwrap().report().is_gentle);
}

#[test]
fn declared_signs_are_checked() {
    let bad = format!("{}sign a1 +1 +1\nsign b1 +1 -1\nsign a2 +1 -1\nsign b2 -1 +1\n", fixtures::LAMBDA3);
    assert!(matches!(Algebra::parse(&bad), Err(Error::SignConflict { .. })));
    let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
    let a1 = alg.arrow_by_name("a1").unwrap();
    let b1 = alg.arrow_by_name("b1").unwrap();
    assert_eq!(alg.signs().sigma(a1), -alg.signs().sigma(b1));
    assert_eq!(alg.signs().sigma(a1), Sign::Plus);
}

#[test]
fn enumeration_examples() {
    let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
    let bands: Vec<String> = enumerate_bands(&alg, 2)
        .unwrap()
        .iter()
        .map(|b| alg.syllables_text(b.syllables(), " "))
        .collect();
    assert_eq!(bands, ["a1' b1", "a2' b2"]);
    let strings = enumerate_strings(&alg, 1).unwrap();
    assert_eq!(strings.len(), 6 + 8);
    assert!(enumerate_strings_capped(&alg, 20, 16).unwrap_err().is_cap());
}

#[test]
fn string_parsing() {
    let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
    assert!(alg.parse_str("b2 a1").is_err());
    assert!(alg.parse_str("a1 a1'").is_err());
    assert!(alg.parse_str("zz").is_err());
    let z = alg.parse_str("1(v2,+1)").unwrap();
    assert_eq!(z.len(), 0);
    assert_eq!(alg.parse_str(&alg.str_text(&z)).unwrap(), z);
}
