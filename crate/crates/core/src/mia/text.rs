//! Line-oriented automaton format:
//!
//! ```text
//! state <id> [initial inv=<id>] e=<id>
//! trans <state> <letter> <state>
//! ```
//!
//! Inverse letters carry a trailing `'`. When every letter is `0`, `0'` or
//! `1`, the alphabet is binary with `1 = 0'`.

use std::collections::BTreeSet;

use super::Mia;
use crate::error::{Error, Result};
use crate::words::Letter;

pub(super) fn print(m: &Mia) -> String {
    let mut out = String::new();
    for v in m.states() {
        match m.inverse(v) {
            Some(w) => out.push_str(&format!(
                "state {} initial inv={} e={}\n",
                m.name(v),
                m.name(w),
                m.name(m.e(v))
            )),
            None => out.push_str(&format!("state {} e={}\n", m.name(v), m.name(m.e(v)))),
        }
    }
    for (s, l, t) in m.transitions() {
        out.push_str(&format!(
            "trans {} {} {}\n",
            m.name(s),
            m.letter_name(l),
            m.name(t)
        ));
    }
    out
}

struct StateLine {
    line: usize,
    name: String,
    inv: Option<String>,
    e: String,
}

pub(super) fn parse(text: &str) -> Result<Mia> {
    let mut states = Vec::new();
    let mut trans = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let syntax = |message: String| Error::Syntax { line, message };
        let tokens: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        let Some((&kw, args)) = tokens.split_first() else {
            continue;
        };
        match kw {
            "state" => {
                let Some((&name, rest)) = args.split_first() else {
                    return Err(syntax("expected a state id".into()));
                };
                let mut inv = None;
                let mut e = None;
                let mut initial = false;
                for &tok in rest {
                    if tok == "initial" {
                        initial = true;
                    } else if let Some(x) = tok.strip_prefix("inv=") {
                        inv = Some(x.to_string());
                    } else if let Some(x) = tok.strip_prefix("e=") {
                        e = Some(x.to_string());
                    } else {
                        return Err(syntax(format!("unexpected `{tok}`")));
                    }
                }
                if initial != inv.is_some() {
                    return Err(syntax("`initial` and `inv=` go together".into()));
                }
                let e = e.ok_or_else(|| syntax("missing `e=`".into()))?;
                states.push(StateLine {
                    line,
                    name: name.to_string(),
                    inv,
                    e,
                });
            }
            "trans" => {
                let [s, l, t] = args else {
                    return Err(syntax("expected `trans <state> <letter> <state>`".into()));
                };
                trans.push((line, s.to_string(), l.to_string(), t.to_string()));
            }
            other => return Err(syntax(format!("unknown keyword `{other}`"))),
        }
    }

    let binary = !trans.is_empty()
        && trans
            .iter()
            .all(|(_, _, l, _)| matches!(l.as_str(), "0" | "1" | "0'"));
    let alphabet: Vec<String> = if binary {
        vec!["0".into()]
    } else {
        trans
            .iter()
            .map(|(_, _, l, _)| l.trim_end_matches('\'').to_string())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    };

    let names: Vec<String> = states.iter().map(|s| s.name.clone()).collect();
    let lookup = |line: usize, name: &str| {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Syntax {
                line,
                message: format!("unknown state `{name}`"),
            })
    };
    let mut inv = Vec::with_capacity(states.len());
    let mut e = Vec::with_capacity(states.len());
    for s in &states {
        inv.push(match &s.inv {
            Some(w) => Some(lookup(s.line, w)?),
            None => None,
        });
        e.push(lookup(s.line, &s.e)?);
    }
    let mut edges = Vec::with_capacity(trans.len());
    for (line, s, l, t) in &trans {
        let letter = if binary {
            if l == "0" {
                Letter::ZERO
            } else {
                Letter::ONE
            }
        } else {
            let base = l.trim_end_matches('\'');
            let symbol = alphabet.iter().position(|a| a == base).unwrap() as u32;
            Letter {
                symbol,
                inverse: l.ends_with('\''),
            }
        };
        edges.push((lookup(*line, s)?, letter, lookup(*line, t)?));
    }
    Mia::new(names, alphabet, inv, e, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
state p initial inv=q e=p
state q initial inv=p e=q
state x e=q
trans p 0 x
trans x 1 x
";

    #[test]
    fn roundtrip() {
        let m = Mia::parse(SAMPLE).unwrap();
        assert!(m.is_binary());
        assert_eq!(m.edge_count(), 2);
        assert_eq!(Mia::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn errors_carry_lines() {
        let err = Mia::parse("state p e=p\ntrans p 0 z\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }), "{err}");
    }
}
