//! The automaton `M_Λ` of a string algebra, its binary parity relabelling
//! `M_Λδ`, and the correspondence between strings and pointed words.
//!
//! States are the zero-length strings, the syllables, and the proper left
//! substrings (of length at least two) of relations and of inverse
//! relations. Reading a syllable `b` at state `x` is defined exactly when
//! `xb` is a string, and leads to the longest suffix of `xb` that is a
//! state. Since any relation completed by `b` has its proper left part as
//! a suffix of the current state, this suffix-automaton view checks the
//! whole history.

use std::collections::HashMap;

use crate::algebra::{Algebra, Sign};
use crate::error::{Error, Result};
use crate::mia::{Mia, PointedWord, StateId};
use crate::strings::{Band, Str, Syllable};
use crate::words::{invert_seq, Letter, Window, WindowKind, WordRep};

pub fn letter_of(s: Syllable) -> Letter {
    Letter {
        symbol: s.arrow.0 as u32,
        inverse: s.inverse,
    }
}

pub fn syllable_of(l: Letter) -> Syllable {
    Syllable {
        arrow: crate::algebra::Arrow(l.symbol as usize),
        inverse: l.inverse,
    }
}

pub fn letters_of(s: &[Syllable]) -> Vec<Letter> {
    s.iter().map(|&x| letter_of(x)).collect()
}

/// The parity map `δ`: every arrow goes to the single binary symbol, so
/// direct syllables read `0` and inverse syllables read `1`.
pub fn parity_map(alg: &Algebra) -> Vec<u32> {
    vec![0; alg.arrow_count()]
}

/// `M_Λ` together with the strings its states stand for.
#[derive(Clone, Debug)]
pub struct StringAutomaton {
    states: Vec<Str>,
    index: HashMap<Str, StateId>,
    mia: Mia,
}

impl StringAutomaton {
    pub fn build(alg: &Algebra) -> StringAutomaton {
        let mut states: Vec<Str> = alg.zero_strings();
        states.extend(alg.all_syllables().into_iter().map(|s| Str::Path(vec![s])));
        let mut longer = Vec::new();
        for r in alg.relations() {
            let direct: Vec<Syllable> = r.iter().map(|&a| Syllable::direct(a)).collect();
            let inverse = invert_seq(&direct);
            for k in 2..r.len() {
                longer.push(Str::Path(direct[..k].to_vec()));
                longer.push(Str::Path(inverse[..k].to_vec()));
            }
        }
        longer.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        longer.dedup();
        states.extend(longer);

        let index: HashMap<Str, StateId> =
            states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let max_state = states.iter().map(Str::len).max().unwrap_or(0);

        let mut edges = Vec::new();
        let syllables = alg.all_syllables();
        for (id, x) in states.iter().enumerate() {
            for &b in &syllables {
                let next = match x {
                    Str::Zero { vertex, side } => {
                        (b.source(alg) == *vertex && b.sigma(alg) == -*side)
                            .then(|| index[&Str::Path(vec![b])])
                    }
                    Str::Path(s) => alg.extends(s, b).then(|| {
                        let mut xb = s.clone();
                        xb.push(b);
                        (1..=xb.len().min(max_state))
                            .rev()
                            .find_map(|k| index.get(&Str::Path(xb[xb.len() - k..].to_vec())))
                            .copied()
                            .expect("the last syllable is always a state")
                    }),
                };
                if let Some(t) = next {
                    edges.push((id, letter_of(b), t));
                }
            }
        }

        let e: Vec<StateId> = states
            .iter()
            .map(|x| match x {
                Str::Zero { .. } => index[x],
                _ => index[&Str::Zero {
                    vertex: x.target(alg),
                    side: x.eps(alg),
                }],
            })
            .collect();
        let inv: Vec<Option<StateId>> = states
            .iter()
            .map(|x| match x {
                Str::Zero { .. } => Some(index[&x.inverse()]),
                _ => None,
            })
            .collect();
        let names = states.iter().map(|x| alg.str_id(x)).collect();
        let alphabet = alg.arrows().map(|a| alg.arrow_name(a).to_string()).collect();
        let mia = Mia::new(names, alphabet, inv, e, &edges).expect("construction is consistent");
        StringAutomaton { states, index, mia }
    }

    pub fn mia(&self) -> &Mia {
        &self.mia
    }

    pub fn states(&self) -> &[Str] {
        &self.states
    }

    pub fn state(&self, x: &Str) -> Option<StateId> {
        self.index.get(x).copied()
    }

    pub fn state_str(&self, id: StateId) -> &Str {
        &self.states[id]
    }

    /// `M_Λδ`: the same automaton over `{0, 1}`.
    pub fn parity(&self, alg: &Algebra) -> Result<Mia> {
        if alg.arrow_count() == 0 {
            return Err(Error::Unsupported("the quiver has no arrows".into()));
        }
        self.mia.relabel(&parity_map(alg), vec!["0".into()])
    }

    fn zero_state(&self, vertex: crate::algebra::Vertex, side: Sign) -> StateId {
        self.index[&Str::Zero { vertex, side }]
    }

    /// `(x, 1_(t(x), ε(x)), ε)`; a zero-length string is its own basepoint.
    pub fn string_to_word(&self, alg: &Algebra, x: &Str) -> PointedWord {
        match x {
            Str::Zero { .. } => PointedWord::finite(Vec::new(), self.index[x], Vec::new()),
            Str::Path(s) => PointedWord::finite(
                letters_of(s),
                self.zero_state(x.target(alg), x.eps(alg)),
                Vec::new(),
            ),
        }
    }

    /// Infinite strings keep their shape; the basepoint sits at position 0
    /// (the left end of a right-infinite string, the right end of a
    /// left-infinite one, the core start of a bi-infinite one).
    pub fn infinite_to_word(&self, alg: &Algebra, x: &WordRep<Syllable>) -> Result<PointedWord> {
        let label_before = |s: Syllable| self.zero_state(s.source(alg), -s.sigma(alg));
        let label_after = |s: Syllable| self.zero_state(s.target(alg), s.eps(alg));
        let open_left = || {
            WordRep::Window(Window {
                letters: Vec::new(),
                certified: false,
                origin: "open end".into(),
                kind: WindowKind::LeftInfinite,
            })
        };
        let first = |w: &WordRep<Syllable>| {
            w.letter_at(0)
                .copied()
                .ok_or_else(|| Error::InvalidString("empty word".into()))
        };
        let map = |v: &[Syllable]| letters_of(v);
        Ok(match x {
            WordRep::Finite(s) => {
                let st = alg.make_string(s.clone())?;
                self.string_to_word(alg, &st)
            }
            WordRep::RightInf { prefix, period } => PointedWord {
                left: WordRep::Finite(Vec::new()),
                base: label_before(first(x)?),
                right: WordRep::RightInf {
                    prefix: map(prefix),
                    period: map(period),
                },
            },
            WordRep::LeftInf { period, suffix } => {
                let last = *x.letter_at(-1).unwrap();
                PointedWord {
                    left: WordRep::LeftInf {
                        period: map(period),
                        suffix: map(suffix),
                    },
                    base: label_after(last),
                    right: WordRep::Finite(Vec::new()),
                }
            }
            WordRep::BiInf { left, core, right } => PointedWord {
                left: WordRep::LeftInf {
                    period: map(left),
                    suffix: Vec::new(),
                },
                base: label_before(first(x)?),
                right: WordRep::RightInf {
                    prefix: map(core),
                    period: map(right),
                },
            },
            WordRep::Window(w) => {
                let right = WordRep::Window(Window {
                    letters: map(&w.letters),
                    certified: w.certified,
                    origin: w.origin.clone(),
                    kind: w.kind,
                });
                match w.kind {
                    WindowKind::RightInfinite => PointedWord {
                        left: WordRep::Finite(Vec::new()),
                        base: label_before(first(x)?),
                        right,
                    },
                    WindowKind::BiInfinite => PointedWord {
                        left: open_left(),
                        base: label_before(first(x)?),
                        right,
                    },
                    WindowKind::LeftInfinite => {
                        let last = *w.letters.last().ok_or_else(|| {
                            Error::InvalidString("empty window".into())
                        })?;
                        PointedWord {
                            left: WordRep::Window(Window {
                                letters: map(&w.letters),
                                certified: w.certified,
                                origin: w.origin.clone(),
                                kind: w.kind,
                            }),
                            base: label_after(last),
                            right: WordRep::Finite(Vec::new()),
                        }
                    }
                }
            }
        })
    }

    /// `∞b∞` based at the gap in front of a copy of `b`.
    pub fn band_word(&self, alg: &Algebra, b: &Band) -> PointedWord {
        let s = b.syllables();
        PointedWord {
            left: WordRep::LeftInf {
                period: letters_of(s),
                suffix: Vec::new(),
            },
            base: self.zero_state(s[0].source(alg), -s[0].sigma(alg)),
            right: WordRep::RightInf {
                prefix: Vec::new(),
                period: letters_of(s),
            },
        }
    }

    /// Concatenates the two halves of a finite word over `M_Λ`; an empty
    /// word gives back its basepoint.
    pub fn word_to_string(&self, alg: &Algebra, w: &PointedWord) -> Result<Str> {
        self.mia.check_word(w)?;
        let letters = w
            .underlying()
            .ok_or_else(|| Error::Unsupported("word is not finite".into()))?;
        if letters.is_empty() {
            return Ok(self.states[w.base].clone());
        }
        alg.make_string(letters.into_iter().map(syllable_of).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::strings::enumerate_strings;

    #[test]
    fn gamma_automaton_matches_reference() {
        let alg = Algebra::parse(fixtures::GAMMA).unwrap();
        let sa = StringAutomaton::build(&alg);
        let m = sa.mia();
        assert_eq!(m.state_count(), 28);
        assert_eq!(m.initial_states().len(), 12);
        let mut got: Vec<(String, String, String)> = m
            .transitions()
            .map(|(s, l, t)| (m.name(s).into(), m.letter_name(l), m.name(t).into()))
            .collect();
        got.sort();
        let mut want: Vec<(String, String, String)> = fixtures::GAMMA_EDGES
            .iter()
            .map(|&(s, l, t)| (s.into(), l.into(), t.into()))
            .collect();
        want.sort();
        assert_eq!(got, want);
        assert!(m.validate().is_valid());
    }

    #[test]
    fn lambda3_parity_automaton() {
        let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
        let sa = StringAutomaton::build(&alg);
        assert_eq!(sa.mia().state_count(), 14);
        let p = sa.parity(&alg).unwrap();
        let a1 = sa.state(&alg.parse_str("a1").unwrap()).unwrap();
        let b1i = sa.state(&alg.parse_str("b1'").unwrap()).unwrap();
        assert_eq!(p.t(a1, Letter::ONE), Some(b1i));
    }

    #[test]
    fn transitions_agree_with_string_validity() {
        for text in [fixtures::LAMBDA3, fixtures::GAMMA] {
            let alg = Algebra::parse(text).unwrap();
            let sa = StringAutomaton::build(&alg);
            for (id, x) in sa.states().iter().enumerate() {
                for b in alg.all_syllables() {
                    let defined = sa.mia().t(id, letter_of(b)).is_some();
                    let expected = match x {
                        Str::Zero { .. } => alg
                            .concat(x, &Str::Path(vec![b]))
                            .is_ok(),
                        Str::Path(s) => alg.extends(s, b),
                    };
                    assert_eq!(defined, expected, "{} reading {}", alg.str_text(x), b.text(&alg));
                }
            }
        }
    }

    #[test]
    fn roundtrip_strings() {
        let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
        let sa = StringAutomaton::build(&alg);
        for x in enumerate_strings(&alg, 6).unwrap() {
            let w = sa.string_to_word(&alg, &x);
            assert_eq!(sa.word_to_string(&alg, &w).unwrap(), x);
        }
    }

    #[test]
    fn shifted_words_give_the_same_string() {
        let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
        let sa = StringAutomaton::build(&alg);
        let x = alg.parse_str("b1 a1'").unwrap();
        let v2p = sa
            .state(&alg.parse_str("1(v2,+1)").unwrap())
            .unwrap();
        let w1 = PointedWord::finite(Vec::new(), v2p, letters_of(x.syllables()));
        let w2 = PointedWord::finite(letters_of(x.syllables()), v2p, Vec::new());
        assert!(sa.mia().equivalent(&w1, &w2));
        assert_eq!(sa.word_to_string(&alg, &w1).unwrap(), x);
        assert_eq!(sa.word_to_string(&alg, &w2).unwrap(), x);
    }
}
