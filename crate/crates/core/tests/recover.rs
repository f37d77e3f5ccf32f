use brickword::algebra::Algebra;
use brickword::construct::StringAutomaton;
use brickword::corpus::random_algebras;
use brickword::fixtures;
use brickword::mia::Mia;
use brickword::recover::{presentations_isomorphic, recover_presentation, same_monomial_ideal};
use brickword::Presentation;

fn roundtrip(alg: &Algebra) {
    let sa = StringAutomaton::build(alg);
    let m = sa.parity(alg).unwrap();
    let rec = recover_presentation(&m).unwrap();
    let p = &rec.presentation;
    assert_eq!(p.vertex_count(), m.initial_states().len() / 2);
    for v in p.vertices() {
        assert!(p.outgoing(v).count() <= 2);
    }
    for r in p.relations() {
        for w in r.windows(2) {
            assert_eq!(p.target(w[0]), p.source(w[1]));
        }
    }
    let q = alg.without_signs();
    let iso = presentations_isomorphic(&q, p).unwrap().expect("isomorphic");
    for a in q.arrows() {
        let b = iso.arrow_map[a.0];
        assert_eq!(iso.vertex_map[q.source(a).0], p.source(b));
        assert_eq!(iso.vertex_map[q.target(a).0], p.target(b));
    }
    let mapped: Vec<_> = q.relations().iter().map(|r| iso.map_path(r)).collect();
    assert!(same_monomial_ideal(&mapped, p.relations()));
    assert!(Algebra::new(p.clone()).is_ok());
}

#[test]
fn fixtures_roundtrip() {
    for text in [fixtures::LAMBDA3, fixtures::GAMMA] {
        roundtrip(&Algebra::parse(text).unwrap());
    }
}

#[test]
fn corpus_roundtrip() {
    for alg in random_algebras(60, 17) {
        roundtrip(&alg);
    }
}

#[test]
fn recovery_from_text() {
    let alg = Algebra::parse(fixtures::GAMMA).unwrap();
    let text = StringAutomaton::build(&alg).parity(&alg).unwrap().to_string();
    let m = Mia::parse(&text).unwrap();
    let rec = recover_presentation(&m).unwrap();
    assert_eq!(rec.presentation.arrow_count(), 7);
    assert_eq!(rec.arrow_states.len(), 7);
    assert_eq!(rec.vertex_states.len(), 6);
}

#[test]
fn recovery_needs_binary() {
    let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
    let m = StringAutomaton::build(&alg);
    assert!(recover_presentation(m.mia()).is_err());
}

#[test]
fn ideal_comparison() {
    let p = Presentation::parse(fixtures::GAMMA).unwrap();
    let r = p.relations().to_vec();
    assert!(same_monomial_ideal(&r, &r));
    let longer: Vec<_> = r.iter().map(|x| [x.clone(), vec![x[0]]].concat()).collect();
    assert!(!same_monomial_ideal(&r[..1], &r));
    assert!(!same_monomial_ideal(&longer, &r[..1]));
}
