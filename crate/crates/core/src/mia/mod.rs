//! Multi-entry inverse automata: deterministic partial automata over a
//! signed alphabet with several initial states, an involution on the
//! initial states, and a projection `e` of every state onto an initial one.

mod brick;
mod text;
mod word;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::Letter;

pub use brick::{
    find_witness, is_brick_word, is_weak_brick_word, labelled_period, periodic_witness, BrickReport, Host, Method,
    Scope, Witness, WitnessSearch,
};
pub use word::{
    classify_occurrence, point, right_window, subword_occurrences, Boundary, GapWord, Occurrence,
    OccurrenceKind, PointedWord,
};

pub type StateId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mia {
    names: Vec<String>,
    alphabet: Vec<String>,
    /// `trans[state][letter.index()]`.
    trans: Vec<Vec<Option<StateId>>>,
    /// The involution, defined exactly on initial states.
    inv: Vec<Option<StateId>>,
    e: Vec<StateId>,
    index: HashMap<String, StateId>,
}

/// One failed axiom, numbered as in the MIA definition: (1) the involution
/// is fixed-point free, (2) `e` fixes initial states, (3) `e` is compatible
/// with transitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiaViolation {
    pub axiom: u8,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MiaReport {
    pub violations: Vec<MiaViolation>,
}

impl MiaReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_axiom(&self, axiom: u8) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl Mia {
    /// Assembles an automaton. Only structural consistency is checked here
    /// (indices in range, involution symmetric, transitions deterministic);
    /// the axioms are checked by [`Mia::validate`].
    pub fn new(
        names: Vec<String>,
        alphabet: Vec<String>,
        inv: Vec<Option<StateId>>,
        e: Vec<StateId>,
        transitions: &[(StateId, Letter, StateId)],
    ) -> Result<Mia> {
        let n = names.len();
        let bad = |m: String| Err(Error::InvalidMia(m));
        if inv.len() != n || e.len() != n {
            return bad("state tables have mismatched lengths".into());
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return bad(format!("duplicate state `{name}`"));
            }
        }
        for (v, w) in inv.iter().enumerate() {
            if let Some(w) = *w {
                if w >= n || inv[w] != Some(v) {
                    return bad(format!("involution is not symmetric at `{}`", names[v]));
                }
            }
        }
        if let Some(&x) = e.iter().find(|&&x| x >= n) {
            return bad(format!("e points at missing state {x}"));
        }
        let width = 2 * alphabet.len();
        let mut trans = vec![vec![None; width]; n];
        for &(s, l, t) in transitions {
            if s >= n || t >= n || l.index() >= width {
                return bad("transition out of range".into());
            }
            match trans[s][l.index()] {
                Some(old) if old != t => {
                    return bad(format!("two transitions from `{}` on one letter", names[s]))
                }
                _ => trans[s][l.index()] = Some(t),
            }
        }
        Ok(Mia {
            names,
            alphabet,
            trans,
            inv,
            e,
            index,
        })
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.names.len()
    }

    pub fn name(&self, v: StateId) -> &str {
        &self.names[v]
    }

    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        self.index.get(name).copied()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet.len() == 1
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..2 * self.alphabet.len()).map(Letter::from_index)
    }

    pub fn is_initial(&self, v: StateId) -> bool {
        self.inv[v].is_some()
    }

    pub fn initial_states(&self) -> Vec<StateId> {
        self.states().filter(|&v| self.is_initial(v)).collect()
    }

    /// The involution on initial states.
    pub fn inverse(&self, v: StateId) -> Option<StateId> {
        self.inv[v]
    }

    pub fn e(&self, v: StateId) -> StateId {
        self.e[v]
    }

    pub fn t(&self, v: StateId, l: Letter) -> Option<StateId> {
        self.trans[v].get(l.index()).copied().flatten()
    }

    /// The extended transition function: `None` once any step is undefined.
    pub fn run(&self, v: StateId, w: &[Letter]) -> Option<StateId> {
        w.iter().try_fold(v, |s, &l| self.t(s, l))
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        self.states().flat_map(move |s| {
            self.trans[s]
                .iter()
                .enumerate()
                .filter_map(move |(i, t)| t.map(|t| (s, Letter::from_index(i), t)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.transitions().count()
    }

    pub fn letter_name(&self, l: Letter) -> String {
        let base = &self.alphabet[l.symbol as usize];
        match (self.is_binary() && base == "0", l.inverse) {
            (true, true) => "1".to_string(),
            (_, true) => format!("{base}'"),
            (_, false) => base.clone(),
        }
    }

    pub fn parse_letter(&self, token: &str) -> Result<Letter> {
        if self.is_binary() && self.alphabet[0] == "0" {
            match token {
                "0" => return Ok(Letter::ZERO),
                "1" | "0'" => return Ok(Letter::ONE),
                _ => {}
            }
        }
        let (base, inverse) = match token.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (token, false),
        };
        let symbol = self
            .alphabet
            .iter()
            .position(|a| a == base)
            .ok_or_else(|| Error::InvalidWord(format!("unknown letter `{token}`")))?;
        Ok(Letter {
            symbol: symbol as u32,
            inverse,
        })
    }

    pub fn word_text(&self, w: &[Letter]) -> String {
        if self.is_binary() {
            crate::words::binary_text(w)
        } else {
            w.iter()
                .map(|&l| self.letter_name(l))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    /// Checks the three axioms over every state and letter.
    pub fn validate(&self) -> MiaReport {
        let mut violations = Vec::new();
        for v in self.states() {
            if self.inv[v] == Some(v) {
                violations.push(MiaViolation {
                    axiom: 1,
                    detail: format!("`{}` is its own inverse", self.names[v]),
                });
            }
            let ev = self.e[v];
            if !self.is_initial(ev) {
                violations.push(MiaViolation {
                    axiom: 2,
                    detail: format!("e(`{}`) is not initial", self.names[v]),
                });
            }
            if self.is_initial(v) && ev != v {
                violations.push(MiaViolation {
                    axiom: 2,
                    detail: format!("e moves initial state `{}`", self.names[v]),
                });
            }
            for l in self.letters() {
                let Some(t) = self.t(v, l) else { continue };
                match self.t(ev, l) {
                    None => violations.push(MiaViolation {
                        axiom: 3,
                        detail: format!(
                            "`{}` reads {} but e(`{}`) does not",
                            self.names[v],
                            self.letter_name(l),
                            self.names[v]
                        ),
                    }),
                    Some(t2) if self.e[t] != self.e[t2] => violations.push(MiaViolation {
                        axiom: 3,
                        detail: format!(
                            "e disagrees after reading {} from `{}`",
                            self.letter_name(l),
                            self.names[v]
                        ),
                    }),
                    _ => {}
                }
            }
        }
        MiaReport { violations }
    }

    /// `φ` maps each base symbol to a symbol of the new alphabet. A local
    /// bijection is injective, at every state, on the letters defined there.
    pub fn check_local_bijection(&self, phi: &[u32], target_size: usize) -> Result<bool> {
        self.check_map(phi, target_size)?;
        for v in self.states() {
            let mut seen = vec![false; 2 * target_size];
            for l in self.letters() {
                if self.t(v, l).is_some() {
                    let img = map_letter(phi, l).index();
                    if std::mem::replace(&mut seen[img], true) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    fn check_map(&self, phi: &[u32], target_size: usize) -> Result<()> {
        if phi.len() != self.alphabet.len() {
            return Err(Error::InvalidMia(format!(
                "alphabet map has {} entries for {} letters",
                phi.len(),
                self.alphabet.len()
            )));
        }
        let mut hit = vec![false; target_size];
        for &x in phi {
            *hit.get_mut(x as usize)
                .ok_or_else(|| Error::InvalidMia(format!("image {x} outside target alphabet")))? = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::InvalidMia("alphabet map is not surjective".into()));
        }
        Ok(())
    }

    /// The automaton `M_φ` over the new alphabet: same states, `e` and
    /// involution, with every transition relabelled through `φ`.
    pub fn relabel(&self, phi: &[u32], target: Vec<String>) -> Result<Mia> {
        if !self.check_local_bijection(phi, target.len())? {
            return Err(Error::InvalidMia("alphabet map is not a local bijection".into()));
        }
        let edges: Vec<_> = self
            .transitions()
            .map(|(s, l, t)| (s, map_letter(phi, l), t))
            .collect();
        Mia::new(
            self.names.clone(),
            target,
            self.inv.clone(),
            self.e.clone(),
            &edges,
        )
    }

    /// The unique letter `b` with `φ^±(b) = image` defined at `v`.
    pub fn preimage(&self, phi: &[u32], v: StateId, image: Letter) -> Option<Letter> {
        self.letters()
            .find(|&l| map_letter(phi, l) == image && self.t(v, l).is_some())
    }

    /// Graphviz rendering; initial states are double circles and inverse
    /// letters are primed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph mia {\n  rankdir=LR;\n");
        for v in self.states() {
            let shape = if self.is_initial(v) {
                "doublecircle"
            } else {
                "circle"
            };
            out.push_str(&format!(
                "  \"{}\" [shape={}];\n",
                escape(&self.names[v]),
                shape
            ));
        }
        for (s, l, t) in self.transitions() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                escape(&self.names[s]),
                escape(&self.names[t]),
                escape(&self.letter_name(l))
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn parse(text: &str) -> Result<Mia> {
        text::parse(text)
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub(crate) fn map_letter(phi: &[u32], l: Letter) -> Letter {
    Letter {
        symbol: phi[l.symbol as usize],
        inverse: l.inverse,
    }
}

impl fmt::Display for Mia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two initial states swapped by the involution and one extra state.
    fn tiny(inv: Vec<Option<StateId>>, e: Vec<StateId>, edges: &[(StateId, Letter, StateId)]) -> Mia {
        Mia::new(
            vec!["p".into(), "q".into(), "x".into()],
            vec!["0".into()],
            inv,
            e,
            edges,
        )
        .unwrap()
    }

    #[test]
    fn axiom_violations_detected() {
        let ok = tiny(vec![Some(1), Some(0), None], vec![0, 1, 1], &[(0, Letter::ZERO, 2)]);
        assert!(ok.validate().is_valid());

        let fixed = Mia::new(
            vec!["p".into()],
            vec!["0".into()],
            vec![Some(0)],
            vec![0],
            &[],
        )
        .unwrap();
        assert!(fixed.validate().has_axiom(1));

        // x reads 0 but e(x) = q does not.
        let bad = tiny(
            vec![Some(1), Some(0), None],
            vec![0, 1, 1],
            &[(0, Letter::ZERO, 2), (2, Letter::ZERO, 2)],
        );
        assert!(bad.validate().has_axiom(3));
    }

    #[test]
    fn run_composes() {
        let m = tiny(
            vec![Some(1), Some(0), None],
            vec![0, 1, 1],
            &[(0, Letter::ZERO, 2), (2, Letter::ONE, 2), (1, Letter::ONE, 2)],
        );
        assert_eq!(m.run(0, &[]), Some(0));
        assert_eq!(m.run(0, &[Letter::ZERO, Letter::ONE]), Some(2));
        assert_eq!(m.run(0, &[Letter::ONE]), None);
    }

    #[test]
    fn local_bijection_collisions() {
        let m = Mia::new(
            vec!["p".into(), "q".into(), "x".into()],
            vec!["a".into(), "b".into()],
            vec![Some(1), Some(0), None],
            vec![0, 1, 1],
            &[(0, Letter::direct(0), 2), (0, Letter::direct(1), 2)],
        )
        .unwrap();
        assert!(m.check_local_bijection(&[0, 1], 2).unwrap());
        assert!(!m.check_local_bijection(&[0, 0], 1).unwrap());
        assert!(m.check_local_bijection(&[0, 0], 2).is_err());
    }
}
