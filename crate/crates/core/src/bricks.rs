//! Brick tests for string and band modules, three ways: the direct
//! factor/image substring criterion, the brick-word criterion on the
//! parity automaton, and endomorphism dimensions over a prime field.

use std::collections::HashMap;

use crate::algebra::{Algebra, Sign, Vertex};
use crate::construct::{letter_of, parity_map, StringAutomaton};
use crate::endo;
use crate::error::{Error, Result};
use crate::mia::{
    find_witness, is_brick_word, is_weak_brick_word, BrickReport, GapWord, Host, Method, Mia,
    PointedWord, Scope, Witness, WitnessSearch,
};
use crate::strings::{Band, Str, Syllable};
use crate::words::{invert_seq, Periodicity, WindowKind, WordRep};

/// A finite string or an infinite one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StringInput {
    Finite(Str),
    Infinite(WordRep<Syllable>),
}

impl From<Str> for StringInput {
    fn from(x: Str) -> StringInput {
        StringInput::Finite(x)
    }
}

impl From<WordRep<Syllable>> for StringInput {
    fn from(w: WordRep<Syllable>) -> StringInput {
        match w {
            WordRep::Finite(s) if !s.is_empty() => StringInput::Finite(Str::Path(s)),
            w => StringInput::Infinite(w),
        }
    }
}

/// Everything the brick tests need for one algebra, built once.
#[derive(Clone, Debug)]
pub struct Checker {
    alg: Algebra,
    automaton: StringAutomaton,
    parity: Option<Mia>,
    prime: u64,
    dim_cap: usize,
}

impl Checker {
    pub fn new(alg: &Algebra) -> Checker {
        let automaton = StringAutomaton::build(alg);
        let parity = automaton.parity(alg).ok();
        Checker {
            alg: alg.clone(),
            automaton,
            parity,
            prime: endo::DEFAULT_PRIME,
            dim_cap: endo::DEFAULT_DIM_CAP,
        }
    }

    /// Runs the automaton method on `M_Λ` itself instead of `M_Λδ`.
    pub fn with_full_automaton(mut self) -> Checker {
        self.parity = None;
        self
    }

    pub fn with_prime(mut self, prime: u64) -> Checker {
        self.prime = prime;
        self
    }

    pub fn with_dim_cap(mut self, cap: usize) -> Checker {
        self.dim_cap = cap;
        self
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn automaton(&self) -> &StringAutomaton {
        &self.automaton
    }

    /// The automaton the word method runs on, and the letter map into it.
    pub fn word_automaton(&self) -> (&Mia, Option<Vec<u32>>) {
        match &self.parity {
            Some(p) => (p, Some(parity_map(&self.alg))),
            None => (self.automaton.mia(), None),
        }
    }

    fn to_word_automaton(&self, w: PointedWord) -> PointedWord {
        match &self.parity {
            Some(_) => self.automaton.mia().transport_forward(&w, &parity_map(&self.alg)),
            None => w,
        }
    }

    pub fn string(&self, x: &StringInput, method: Method) -> Result<BrickReport> {
        match method {
            Method::Direct => self.string_direct(x),
            Method::Automaton => self.string_automaton(x),
            Method::Endo => match x {
                StringInput::Finite(s) => self.string_endo(s),
                StringInput::Infinite(_) => Err(Error::Unsupported(
                    "the endomorphism method needs a finite string".into(),
                )),
            },
        }
    }

    pub fn band(&self, b: &Band, l: usize, lambda: i64, method: Method) -> Result<BrickReport> {
        match method {
            Method::Direct => self.band_direct(b, l, lambda),
            Method::Automaton => self.band_automaton(b, l, lambda),
            Method::Endo => self.band_endo(b, l, lambda),
        }
    }

    pub fn string_direct(&self, x: &StringInput) -> Result<BrickReport> {
        match x {
            StringInput::Finite(s) => {
                self.alg.make_string(s.syllables().to_vec()).or_else(|e| match s {
                    Str::Zero { .. } => Ok(s.clone()),
                    _ => Err(e),
                })?;
                let report = BrickReport::new(Method::Direct, Periodicity::Finite, Scope::Exact);
                Ok(report.with_witness(finite_string_witness(&self.alg, s)))
            }
            StringInput::Infinite(w) => {
                self.alg.check_infinite(w)?;
                let periodicity = w.classify_periodicity();
                let WordRep::Window(win) = w else {
                    return Ok(BrickReport::new(Method::Direct, periodicity, Scope::Exact)
                        .fail("not aperiodic"));
                };
                let g = syllable_gap_word(&self.alg, &win.letters, win.kind)?;
                let inv = label_inverse(&g);
                let witness = [(&g, Host::Word), (&inv, Host::Inverse)]
                    .into_iter()
                    .find_map(|(h, host)| {
                        find_witness(&g, h, host, &WitnessSearch::default()).map(|(len, i, j)| {
                            Witness::String {
                                sub: window_substring(&self.alg, &g, &win.letters, i, len),
                                factor_start: i as i64,
                                image_start: j as i64,
                                host,
                            }
                        })
                    });
                let mut report = BrickReport::new(Method::Direct, periodicity, Scope::Window(g.len()))
                    .with_witness(witness);
                if report.verdict && !win.certified {
                    report.reason = Some("aperiodicity not certified".into());
                }
                Ok(report)
            }
        }
    }

    pub fn string_word(&self, x: &StringInput) -> Result<PointedWord> {
        match x {
            StringInput::Finite(s) => Ok(self.automaton.string_to_word(&self.alg, s)),
            StringInput::Infinite(w) => {
                self.alg.check_infinite(w)?;
                self.automaton.infinite_to_word(&self.alg, w)
            }
        }
    }

    pub fn string_automaton(&self, x: &StringInput) -> Result<BrickReport> {
        if let StringInput::Finite(Str::Path(v)) = x {
            self.alg.make_string(v.clone())?;
        }
        let w = self.to_word_automaton(self.string_word(x)?);
        let (m, _) = self.word_automaton();
        is_brick_word(m, &w)
    }

    pub fn string_endo(&self, x: &Str) -> Result<BrickReport> {
        let rep = endo::string_module(&self.alg, x, self.prime);
        let d = rep.end_dim(&self.alg, self.dim_cap)?;
        Ok(endo_report(d, Periodicity::Finite))
    }

    /// Direct band test scanning witnesses of length up to the band length.
    pub fn band_direct(&self, b: &Band, l: usize, lambda: i64) -> Result<BrickReport> {
        self.band_direct_bounded(b, l, lambda, b.len())
    }

    pub fn band_direct_bounded(&self, b: &Band, l: usize, lambda: i64, bound: usize) -> Result<BrickReport> {
        check_band_args(l, lambda)?;
        let report = BrickReport::new(Method::Direct, Periodicity::Periodic, Scope::Bounded(bound));
        if l > 1 {
            return Ok(report.fail("l must be 1"));
        }
        Ok(report.with_witness(band_witness(&self.alg, b, bound)))
    }

    pub fn band_automaton(&self, b: &Band, l: usize, lambda: i64) -> Result<BrickReport> {
        check_band_args(l, lambda)?;
        if l > 1 {
            return Ok(BrickReport::new(Method::Automaton, Periodicity::Periodic, Scope::Exact)
                .fail("l must be 1"));
        }
        let w = self.to_word_automaton(self.automaton.band_word(&self.alg, b));
        let (m, _) = self.word_automaton();
        is_weak_brick_word(m, &w)
    }

    pub fn band_endo(&self, b: &Band, l: usize, lambda: i64) -> Result<BrickReport> {
        check_band_args(l, lambda)?;
        let rep = endo::band_module(&self.alg, b, l, lambda, self.prime)?;
        let d = rep.end_dim(&self.alg, self.dim_cap)?;
        Ok(endo_report(d, Periodicity::Periodic))
    }

    /// Reads a witness back as a substring of a finite string `x`:
    /// `(substring, factor start, image start, host)` in syllable offsets.
    pub fn witness_substring(&self, x: &Str, w: &Witness) -> Option<(Str, usize, usize, Host)> {
        let n = x.len() as i64;
        match w {
            Witness::String {
                sub,
                factor_start,
                image_start,
                host,
            } => Some((sub.clone(), *factor_start as usize, *image_start as usize, *host)),
            Witness::Word {
                word,
                factor_offset,
                image_offset,
                host,
            } => {
                let len = word.underlying()?.len();
                // A finite string's word is based at its right end; the inverse
                // word is based at its left end.
                let i = (n + factor_offset) as usize;
                let j = match host {
                    Host::Word => (n + image_offset) as usize,
                    Host::Inverse => *image_offset as usize,
                };
                Some((self.alg.substring(x, i, i + len), i, j, *host))
            }
        }
    }

    /// Confirms a witness against the substring definitions on a finite
    /// string.
    pub fn replay(&self, x: &Str, w: &Witness) -> bool {
        let Some((sub, i, j, host)) = self.witness_substring(x, w) else {
            return false;
        };
        let h = match host {
            Host::Word => x.clone(),
            Host::Inverse => x.inverse(),
        };
        let factor = self
            .alg
            .factor_substrings(x)
            .into_iter()
            .any(|o| o.start == i && o.sub == sub);
        let image = self
            .alg
            .image_substrings(&h)
            .into_iter()
            .any(|o| o.start == j && o.sub == sub);
        let trivial = host == Host::Word && i == 0 && j == 0 && sub == *x;
        factor && image && !trivial
    }
}

fn check_band_args(l: usize, lambda: i64) -> Result<()> {
    if l == 0 {
        return Err(Error::Unsupported("l must be positive".into()));
    }
    if lambda == 0 {
        return Err(Error::Unsupported("lambda must be nonzero".into()));
    }
    Ok(())
}

fn endo_report(d: usize, periodicity: Periodicity) -> BrickReport {
    let mut r = BrickReport::new(Method::Endo, periodicity, Scope::Exact);
    r.end_dim = Some(d);
    if d != 1 {
        r = r.fail(&format!("endomorphism ring has dimension {d}"));
    }
    r
}

/// The smallest witness by `(length, factor start, host, image start)`,
/// found by listing all factor and image substrings.
fn finite_string_witness(alg: &Algebra, x: &Str) -> Option<Witness> {
    let mut factors: HashMap<Str, usize> = HashMap::new();
    for o in alg.factor_substrings(x) {
        factors
            .entry(o.sub)
            .and_modify(|s| *s = (*s).min(o.start))
            .or_insert(o.start);
    }
    let mut best: Option<(usize, usize, Host, usize, Str)> = None;
    for (h, host) in [(x.clone(), Host::Word), (x.inverse(), Host::Inverse)] {
        for o in alg.image_substrings(&h) {
            if host == Host::Word && o.clause == crate::strings::Clause::Equal {
                continue;
            }
            if let Some(&i) = factors.get(&o.sub) {
                let key = (o.sub.len(), i, host, o.start, o.sub.clone());
                if best.as_ref().is_none_or(|b| (key.0, key.1, key.2 as u8, key.3) < (b.0, b.1, b.2 as u8, b.3)) {
                    best = Some(key);
                }
            }
        }
    }
    best.map(|(_, i, host, j, sub)| Witness::String {
        sub,
        factor_start: i as i64,
        image_start: j as i64,
        host,
    })
}

/// Band witnesses up to length `bound`, with starts over one period of
/// `∞b∞` and of its inverse.
fn band_witness(alg: &Algebra, b: &Band, bound: usize) -> Option<Witness> {
    let p = b.len();
    let reps = (bound + 2 * p) / p + 3;
    let text: Vec<Syllable> = b.syllables().iter().cycle().take(reps * p).copied().collect();
    let n = text.len();
    let spans = |t: &[Syllable], factor: bool| {
        let mut out = Vec::new();
        for i in p..2 * p {
            if t[i - 1].inverse != factor {
                continue;
            }
            for len in 0..=bound {
                if t[i + len].inverse == factor {
                    continue;
                }
                out.push((len, i));
            }
        }
        out
    };
    let host_str = Str::Path(text.clone());
    let inv_str = Str::Path(invert_seq(&text));
    let mut factors: HashMap<Str, usize> = HashMap::new();
    for (len, i) in spans(&text, true) {
        factors.entry(alg.substring(&host_str, i, i + len)).or_insert(i);
    }
    let mut best: Option<(usize, usize, u8, usize, Str, Host)> = None;
    for (h, host) in [(&host_str, Host::Word), (&inv_str, Host::Inverse)] {
        for (len, j) in spans(h.syllables(), false) {
            let sub = alg.substring(h, j, j + len);
            if let Some(&i) = factors.get(&sub) {
                let key = (len, i, host as u8, j);
                if best.as_ref().is_none_or(|b| key < (b.0, b.1, b.2, b.3)) {
                    best = Some((len, i, host as u8, j, sub, host));
                }
            }
        }
    }
    debug_assert!(2 * p + bound < n);
    best.map(|(_, i, _, j, sub, host)| Witness::String {
        sub,
        factor_start: i as i64 - p as i64,
        image_start: j as i64 - p as i64,
        host,
    })
}

fn zero_code(v: Vertex, side: Sign) -> usize {
    2 * v.0 + (side == Sign::Plus) as usize
}

/// Gap word over syllables with zero-length strings as labels.
fn syllable_gap_word(alg: &Algebra, s: &[Syllable], kind: WindowKind) -> Result<GapWord> {
    let first = s
        .first()
        .ok_or_else(|| Error::InvalidString("empty window".into()))?;
    let mut labels = vec![zero_code(first.source(alg), -first.sigma(alg))];
    labels.extend(s.iter().map(|y| zero_code(y.target(alg), y.eps(alg))));
    Ok(GapWord {
        letters: s.iter().map(|&y| letter_of(y)).collect(),
        labels,
        left_closed: kind == WindowKind::RightInfinite,
        right_closed: kind == WindowKind::LeftInfinite,
        base: 0,
    })
}

fn label_inverse(g: &GapWord) -> GapWord {
    GapWord {
        letters: invert_seq(&g.letters),
        labels: g.labels.iter().rev().map(|&c| c ^ 1).collect(),
        left_closed: g.right_closed,
        right_closed: g.left_closed,
        base: g.len() - g.base,
    }
}

fn window_substring(alg: &Algebra, g: &GapWord, s: &[Syllable], i: usize, len: usize) -> Str {
    if len == 0 {
        let c = g.labels[i];
        alg.zero_string(Vertex(c / 2), if c % 2 == 1 { Sign::Plus } else { Sign::Minus })
    } else {
        Str::Path(s[i..i + len].to_vec())
    }
}

pub fn string_brick_direct(alg: &Algebra, x: &StringInput) -> Result<BrickReport> {
    Checker::new(alg).string_direct(x)
}

pub fn string_brick_automaton(alg: &Algebra, x: &StringInput) -> Result<BrickReport> {
    Checker::new(alg).string_automaton(x)
}

pub fn string_brick_endo(alg: &Algebra, x: &Str) -> Result<BrickReport> {
    Checker::new(alg).string_endo(x)
}

pub fn band_brick_direct(alg: &Algebra, b: &Band, l: usize, lambda: i64) -> Result<BrickReport> {
    Checker::new(alg).band_direct(b, l, lambda)
}

pub fn band_brick_automaton(alg: &Algebra, b: &Band, l: usize, lambda: i64) -> Result<BrickReport> {
    Checker::new(alg).band_automaton(b, l, lambda)
}

pub fn band_brick_endo(alg: &Algebra, b: &Band, l: usize, lambda: i64) -> Result<BrickReport> {
    Checker::new(alg).band_endo(b, l, lambda)
}

/// Finite strings up to `max_len` that are bricks by the given method.
pub fn brick_strings(checker: &Checker, max_len: usize, method: Method) -> Result<Vec<Str>> {
    let mut out = Vec::new();
    for x in crate::strings::enumerate_strings(checker.algebra(), max_len)? {
        if checker.string(&x.clone().into(), method)?.verdict {
            out.push(x);
        }
    }
    Ok(out)
}

/// Bands up to `max_len` whose modules `M(b, 1, λ)` are bricks.
pub fn brick_bands(checker: &Checker, max_len: usize, method: Method) -> Result<Vec<Band>> {
    let mut out = Vec::new();
    for b in crate::strings::enumerate_bands(checker.algebra(), max_len)? {
        if checker.band(&b, 1, 1, method)?.verdict {
            out.push(b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn lambda3() -> Checker {
        Checker::new(&Algebra::parse(fixtures::LAMBDA3).unwrap())
    }

    #[test]
    fn methods_agree_on_small_strings() {
        for text in [fixtures::LAMBDA3, fixtures::GAMMA] {
            let c = Checker::new(&Algebra::parse(text).unwrap());
            for x in crate::strings::enumerate_strings(c.algebra(), 6).unwrap() {
                let input: StringInput = x.clone().into();
                let d = c.string_direct(&input).unwrap();
                let a = c.string_automaton(&input).unwrap();
                let e = c.string_endo(&x).unwrap();
                let t = c.algebra().str_text(&x);
                assert_eq!(d.verdict, a.verdict, "{t}");
                assert_eq!(d.verdict, e.verdict, "{t}");
                for r in [&d, &a] {
                    if let Some(w) = &r.witness {
                        assert!(c.replay(&x, w), "{t}: {w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn bands_of_lambda3_are_bricks() {
        let c = lambda3();
        for text in ["a1' b1", "a2' b2"] {
            let b = c.algebra().band(&c.algebra().parse_str(text).unwrap()).unwrap();
            for m in [Method::Direct, Method::Automaton, Method::Endo] {
                assert!(c.band(&b, 1, 7, m).unwrap().verdict, "{text} {m}");
                assert!(!c.band(&b, 2, 7, m).unwrap().verdict, "{text} {m}");
            }
        }
    }

    #[test]
    fn periodic_strings_are_not_bricks() {
        let c = lambda3();
        let s = c.algebra().parse_syllables("b1 a1'").unwrap();
        let w = WordRep::RightInf {
            prefix: Vec::new(),
            period: s,
        };
        let r = c.string_direct(&w.clone().into()).unwrap();
        assert!(!r.verdict);
        assert!(!c.string_automaton(&w.into()).unwrap().verdict);
    }
}
