//! Acceptance suite: one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use brickword::algebra::{Algebra, Presentation};
use brickword::bricks::{Checker, StringInput};
use brickword::construct::{parity_map, StringAutomaton};
use brickword::corpus::standard_corpus;
use brickword::fixtures;
use brickword::mia::{is_brick_word, is_weak_brick_word, Method};
use brickword::recover::{presentations_isomorphic, recover_presentation, same_monomial_ideal};
use brickword::strings::{enumerate_bands, enumerate_strings, Str};
use brickword::sturmian::{
    bridge_with, characteristic_prefix, sturmian_window_check, BridgeSide, DirectiveSequence,
};
use brickword::words::complexity_profile;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gamma_automaton() -> Outcome {
    let alg = Algebra::parse(fixtures::GAMMA).map_err(|e| e.to_string())?;
    let sa = StringAutomaton::build(&alg);
    let m = sa.mia();
    ensure(m.state_count() == 28, || format!("{} states", m.state_count()))?;
    let initial = m.initial_states().len();
    ensure(initial == 12, || format!("{initial} initial states"))?;
    let state = |id: &str| m.state_by_name(id).ok_or(format!("missing state {id}"));
    let (a3, a3b, b) = (state("a3")?, state("a3.b")?, state("b")?);
    state("c1'.b'")?;
    let letter = |t: &str| m.parse_letter(t).map_err(|e| e.to_string());
    ensure(m.t(a3, letter("b")?) == Some(a3b), || "t(a3, b) != a3b".into())?;
    ensure(m.t(a3b, letter("c1")?).is_none(), || "t(a3b, c1) is defined".into())?;
    ensure(m.t(b, letter("c1")?) == Some(state("c1")?), || "t(b, c1) != c1".into())?;
    ensure(m.t(b, letter("c3'")?) == Some(state("c3'")?), || "t(b, C3) != C3".into())?;
    Ok("28 states, 12 initial, spot transitions hold".into())
}

fn string_triangle(corpus: &[(String, Checker)]) -> Outcome {
    let mut total = 0;
    for (name, c) in corpus {
        for x in enumerate_strings(c.algebra(), 8).map_err(|e| e.to_string())? {
            let input: StringInput = x.clone().into();
            let d = c.string_direct(&input).map_err(|e| e.to_string())?.verdict;
            let a = c.string_automaton(&input).map_err(|e| e.to_string())?.verdict;
            let e = c.string_endo(&x).map_err(|e| e.to_string())?.verdict;
            ensure(d == a && a == e, || {
                format!(
                    "{name}: {} direct={d} automaton={a} endo={e}",
                    c.algebra().str_text(&x)
                )
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} strings over {} algebras, 0 disagreements", corpus.len()))
}

fn band_triangle(corpus: &[(String, Checker)]) -> Outcome {
    let mut total = 0;
    for (name, c) in corpus {
        for b in enumerate_bands(c.algebra(), 8).map_err(|e| e.to_string())? {
            for l in 1..=2 {
                for lambda in 1..=2 {
                    let v = |m: Method| c.band(&b, l, lambda, m).map(|r| r.verdict);
                    let (d, a, e) = (
                        v(Method::Direct).map_err(|e| e.to_string())?,
                        v(Method::Automaton).map_err(|e| e.to_string())?,
                        v(Method::Endo).map_err(|e| e.to_string())?,
                    );
                    let text = c.algebra().syllables_text(b.syllables(), " ");
                    ensure(d == a && a == e, || {
                        format!("{name}: ({text}, {l}, {lambda}) direct={d} automaton={a} endo={e}")
                    })?;
                    ensure(l == 1 || !d, || format!("{name}: ({text}, 2, {lambda}) is a brick"))?;
                    total += 1;
                }
            }
        }
    }
    Ok(format!("{total} band modules, 0 disagreements, l = 2 never a brick"))
}

fn witness_bound(corpus: &[(String, Checker)]) -> Outcome {
    let mut total = 0;
    for (name, c) in corpus {
        for b in enumerate_bands(c.algebra(), 8).map_err(|e| e.to_string())? {
            let short = c.band_direct_bounded(&b, 1, 1, b.len()).map_err(|e| e.to_string())?;
            let long = c.band_direct_bounded(&b, 1, 1, 3 * b.len()).map_err(|e| e.to_string())?;
            ensure(short.witness.is_some() == long.witness.is_some(), || {
                format!("{name}: {}", c.algebra().syllables_text(b.syllables(), " "))
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} bands, bounds |b| and 3|b| agree"))
}

fn named_cases() -> Outcome {
    let alg = Algebra::parse(fixtures::LAMBDA3).map_err(|e| e.to_string())?;
    let c = Checker::new(&alg);
    let s = |t: &str| alg.parse_str(t).map_err(|e| e.to_string());
    let methods = [Method::Direct, Method::Automaton, Method::Endo];
    for m in methods {
        let r = c.string(&s("b1 a1'")?.into(), m).map_err(|e| e.to_string())?;
        ensure(r.verdict, || format!("M(b1 A1) not a brick by {m}"))?;
    }
    let x = s("b1 a1' a2' b2")?;
    for m in methods {
        let r = c.string(&x.clone().into(), m).map_err(|e| e.to_string())?;
        ensure(!r.verdict, || format!("M(b1 A1 A2 b2) a brick by {m}"))?;
        if let Some(w) = &r.witness {
            let (sub, ..) = c.witness_substring(&x, w).ok_or("unreadable witness")?;
            let ok = matches!(sub, Str::Zero { vertex, .. } if alg.vertex_name(vertex) == "v2");
            ensure(ok, || format!("{m} witness is {}", alg.str_text(&sub)))?;
            ensure(c.replay(&x, w), || format!("{m} witness does not replay"))?;
        }
    }
    let band = alg.band(&s("a2' b2")?).map_err(|e| e.to_string())?;
    let aabb = alg
        .band(&s("a1' b1 a1' a2' b2 a2' b2 b1")?)
        .map_err(|e| e.to_string())?;
    for lambda in [1, 2, 5] {
        for m in methods {
            let r = c.band(&band, 1, lambda, m).map_err(|e| e.to_string())?;
            ensure(r.verdict, || format!("B(A2 b2, 1, {lambda}) not a brick by {m}"))?;
            let r = c.band(&aabb, 1, lambda, m).map_err(|e| e.to_string())?;
            ensure(!r.verdict, || format!("B(aabb, 1, {lambda}) a brick by {m}"))?;
        }
    }
    Ok("four named cases agree across all three methods".into())
}

fn sturmian_bridge() -> Outcome {
    let alg = Algebra::parse(fixtures::LAMBDA3).map_err(|e| e.to_string())?;
    let c = Checker::new(&alg);
    let fib = characteristic_prefix(&DirectiveSequence::fibonacci(), 500).map_err(|e| e.to_string())?;
    ensure(sturmian_window_check(&fib.letters).is_none(), || "Fibonacci window violates".into())?;
    let r = bridge_with(&c, &fib.letters, BridgeSide::RightInfinite, true).map_err(|e| e.to_string())?;
    ensure(r.brick.witness.is_none(), || "witness in the Fibonacci window".into())?;
    let shifted = &fib.letters[1..];
    let r = bridge_with(&c, shifted, BridgeSide::RightInfinite, true).map_err(|e| e.to_string())?;
    ensure(r.brick.witness.is_some(), || "no witness after dropping the first letter".into())?;
    let long = characteristic_prefix(&DirectiveSequence::fibonacci(), 2000).map_err(|e| e.to_string())?;
    let profile = complexity_profile(&long.letters, 50).map_err(|e| e.to_string())?;
    let bad = (1..).zip(&profile).find(|&(k, &p)| p != k + 1);
    ensure(bad.is_none(), || format!("complexity at {:?}", bad))?;
    Ok("Fibonacci window clean, shifted window has a witness, complexity k+1 to 50".into())
}

fn invariance() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    let mut words = 0;
    for text in [fixtures::LAMBDA3, fixtures::GAMMA] {
        let alg = Algebra::parse(text).map_err(|e| e.to_string())?;
        let sa = StringAutomaton::build(&alg);
        let full = sa.mia();
        let phi = parity_map(&alg);
        let parity = sa.parity(&alg).map_err(|e| e.to_string())?;
        let mut check = |w: &brickword::PointedWord, label: &str, weak: bool| -> Result<(), String> {
            let test = |m: &brickword::Mia, w: &brickword::PointedWord| {
                if weak {
                    is_weak_brick_word(m, w)
                } else {
                    is_brick_word(m, w)
                }
                .map(|r| r.verdict)
                .map_err(|e| e.to_string())
            };
            let binary = full.transport_forward(w, &phi);
            let back = full.transport_backward(&binary, &phi).map_err(|e| e.to_string())?;
            ensure(back == *w, || format!("{label}: transport roundtrip"))?;
            let v = test(full, w)?;
            ensure(test(&parity, &binary)? == v, || format!("{label}: relabelling changes verdict"))?;
            let (lo, hi) = w.extent();
            for _ in 0..100 {
                let k = match (lo, hi) {
                    (Some(lo), Some(hi)) => rng.gen_range(lo..=hi),
                    _ => rng.gen_range(-40..=40),
                };
                let s = full.shift(w, k).map_err(|e| e.to_string())?;
                ensure(full.equivalent(w, &s), || format!("{label}: shift {k} not equivalent"))?;
                ensure(test(full, &s)? == v, || format!("{label}: shift {k} changes verdict"))?;
                let sb = full.transport_forward(&s, &phi);
                ensure(test(&parity, &sb)? == v, || format!("{label}: shift {k} binary verdict"))?;
            }
            Ok(())
        };
        for x in enumerate_strings(&alg, 6).map_err(|e| e.to_string())? {
            check(&sa.string_to_word(&alg, &x), &alg.str_text(&x), false)?;
            words += 1;
        }
        for b in enumerate_bands(&alg, 6).map_err(|e| e.to_string())? {
            let label = alg.syllables_text(b.syllables(), " ");
            check(&sa.band_word(&alg, &b), &label, true)?;
            words += 1;
        }
    }
    Ok(format!("{words} words, 100 shifts each, verdicts stable"))
}

fn recovery(corpus: &[(String, Checker)]) -> Outcome {
    for (name, c) in corpus {
        let alg = c.algebra();
        let parity = c.automaton().parity(alg).map_err(|e| e.to_string())?;
        let rec = recover_presentation(&parity).map_err(|e| format!("{name}: {e}"))?;
        let p: Presentation = alg.without_signs();
        let iso = presentations_isomorphic(&p, &rec.presentation)
            .map_err(|e| e.to_string())?
            .ok_or(format!("{name}: not isomorphic"))?;
        let mapped: Vec<_> = p.relations().iter().map(|r| iso.map_path(r)).collect();
        ensure(same_monomial_ideal(&mapped, rec.presentation.relations()), || {
            format!("{name}: ideals differ")
        })?;
    }
    Ok(format!("{} algebras recovered up to isomorphism with equal ideals", corpus.len()))
}

fn validation() -> Outcome {
    let l = Algebra::parse(fixtures::LAMBDA3).map_err(|e| e.to_string())?;
    ensure(l.report().is_gentle, || "Lambda3 not gentle".into())?;
    let g = Algebra::parse(fixtures::GAMMA).map_err(|e| e.to_string())?;
    ensure(!g.report().is_gentle, || "Gamma gentle".into())?;
    for (text, code) in [
        (fixtures::LAMBDA3_EXTRA_ARROW, "I"),
        (fixtures::LAMBDA3_TWO_SUCCESSORS, "II"),
        (fixtures::FREE_LOOP, "III"),
    ] {
        let p = Presentation::parse(text).map_err(|e| e.to_string())?;
        let report = p.validate();
        ensure(!report.is_string_algebra, || format!("{code} fixture accepted"))?;
        ensure(report.codes().iter().any(|c| c.code() == code), || {
            format!("{code} fixture reports {:?}", report.codes())
        })?;
        ensure(Algebra::new(p).is_err(), || format!("{code} fixture builds"))?;
    }
    Ok("Lambda3 gentle, Gamma not gentle, counterexamples rejected with I, II, III".into())
}

type Criterion<'a> = (u32, &'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let corpus: Vec<(String, Checker)> = standard_corpus()
        .into_iter()
        .map(|(n, a)| (n, Checker::new(&a)))
        .collect();
    let criteria: Vec<Criterion> = vec![
        (1, "automaton of Gamma", Duration::from_secs(1), Box::new(gamma_automaton)),
        (2, "string oracle triangle", Duration::from_secs(60), Box::new(|| string_triangle(&corpus))),
        (3, "band oracle triangle", Duration::from_secs(120), Box::new(|| band_triangle(&corpus))),
        (4, "witness bound", Duration::from_secs(60), Box::new(|| witness_bound(&corpus))),
        (5, "named cases", Duration::from_secs(60), Box::new(named_cases)),
        (6, "Sturmian bridge", Duration::from_secs(30), Box::new(sturmian_bridge)),
        (7, "transport and shift invariance", Duration::from_secs(120), Box::new(invariance)),
        (8, "recovery roundtrip", Duration::from_secs(30), Box::new(|| recovery(&corpus))),
        (9, "validation fixtures", Duration::from_secs(1), Box::new(validation)),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if took <= limit {
                Ok(msg)
            } else {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS criterion {n} ({name}): {msg} [{took:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): {msg} [{took:.2?}]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
