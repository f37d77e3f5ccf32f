//! Pointed words over an automaton and their subword occurrences.

use std::collections::HashMap;

use super::{map_letter, Mia, StateId};
use crate::error::{Error, Result};
use crate::words::{invert_seq, Invertible, Letter, Periodicity, Window, WindowKind, WordRep};

/// A word `(left, base, right)`: `left` is finite or left-infinite, `right`
/// finite or right-infinite, and `base` is the initial state at the gap
/// between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedWord {
    pub left: WordRep<Letter>,
    pub base: StateId,
    pub right: WordRep<Letter>,
}

/// A finite stretch of a pointed word with the initial state at every gap.
///
/// `labels[k]` sits between `letters[k-1]` and `letters[k]`. A closed end
/// is a genuine end of the word; an open end is the edge of a window onto
/// a longer word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapWord {
    pub letters: Vec<Letter>,
    pub labels: Vec<StateId>,
    pub left_closed: bool,
    pub right_closed: bool,
    /// Gap index of the basepoint.
    pub base: usize,
}

impl GapWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same stretch read backwards: letters reversed and inverted,
    /// labels reversed and sent through the involution.
    pub fn inverse(&self, m: &Mia) -> GapWord {
        GapWord {
            letters: invert_seq(&self.letters),
            labels: self
                .labels
                .iter()
                .rev()
                .map(|&v| m.inverse(v).expect("gap labels are initial"))
                .collect(),
            left_closed: self.right_closed,
            right_closed: self.left_closed,
            base: self.letters.len() - self.base,
        }
    }

    /// What lies just before gap `i`.
    pub fn before(&self, i: usize) -> Boundary {
        if i == 0 {
            if self.left_closed {
                Boundary::End
            } else {
                Boundary::Open
            }
        } else {
            Boundary::Letter(self.letters[i - 1])
        }
    }

    /// What lies just after gap `i`.
    pub fn after(&self, i: usize) -> Boundary {
        if i == self.letters.len() {
            if self.right_closed {
                Boundary::End
            } else {
                Boundary::Open
            }
        } else {
            Boundary::Letter(self.letters[i])
        }
    }

    /// The finite pointed word occupying letters `start..start + len`,
    /// based at its left end.
    pub fn slice(&self, start: usize, len: usize) -> PointedWord {
        PointedWord {
            left: WordRep::Finite(Vec::new()),
            base: self.labels[start],
            right: WordRep::Finite(self.letters[start..start + len].to_vec()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// The host ends here.
    End,
    /// The host continues beyond what is known.
    Open,
    Letter(Letter),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OccurrenceKind {
    Factor,
    Image,
    Both,
    Neither,
}

impl OccurrenceKind {
    pub fn is_factor(self) -> bool {
        matches!(self, OccurrenceKind::Factor | OccurrenceKind::Both)
    }

    pub fn is_image(self) -> bool {
        matches!(self, OccurrenceKind::Image | OccurrenceKind::Both)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    /// Start of the needle's letters, relative to the host basepoint.
    pub offset: i64,
    pub len: usize,
    pub before: Boundary,
    pub after: Boundary,
    /// Set when the host is periodic and the occurrence repeats with this
    /// period in both directions.
    pub period: Option<usize>,
}

/// Factor: inverse letter (or end) before, direct letter (or end) after.
/// Image: the mirror.
pub fn classify_occurrence(occ: &Occurrence) -> OccurrenceKind {
    let factor = matches!(occ.before, Boundary::End)
        || matches!(occ.before, Boundary::Letter(l) if l.inverse);
    let factor = factor
        && (matches!(occ.after, Boundary::End)
            || matches!(occ.after, Boundary::Letter(l) if !l.inverse));
    let image = matches!(occ.before, Boundary::End)
        || matches!(occ.before, Boundary::Letter(l) if !l.inverse);
    let image = image
        && (matches!(occ.after, Boundary::End)
            || matches!(occ.after, Boundary::Letter(l) if l.inverse));
    match (factor, image) {
        (true, true) => OccurrenceKind::Both,
        (true, false) => OccurrenceKind::Factor,
        (false, true) => OccurrenceKind::Image,
        (false, false) => OccurrenceKind::Neither,
    }
}

fn left_letters_len(w: &WordRep<Letter>) -> Option<usize> {
    match w {
        WordRep::Finite(x) => Some(x.len()),
        WordRep::Window(x) => Some(x.letters.len()),
        _ => None,
    }
}

/// Letter of the left part at position `i < 0` (−1 is next to the base).
fn left_at(w: &WordRep<Letter>, i: i64) -> Option<Letter> {
    match w {
        WordRep::Finite(_) | WordRep::Window(_) => {
            let n = left_letters_len(w).unwrap() as i64;
            w.letter_at(n + i).copied()
        }
        WordRep::LeftInf { .. } => w.letter_at(i).copied(),
        _ => None,
    }
}

fn right_at(w: &WordRep<Letter>, i: i64) -> Option<Letter> {
    match w {
        WordRep::Finite(_) | WordRep::Window(_) | WordRep::RightInf { .. } => {
            w.letter_at(i).copied()
        }
        _ => None,
    }
}

fn is_closed(w: &WordRep<Letter>) -> bool {
    matches!(w, WordRep::Finite(_))
}

/// Longest period and longest finite part of a side, used to size windows.
fn side_scale(w: &WordRep<Letter>) -> (usize, usize) {
    match w {
        WordRep::Finite(x) => (0, x.len()),
        WordRep::Window(x) => (0, x.letters.len()),
        WordRep::RightInf { prefix, period } => (period.len(), prefix.len()),
        WordRep::LeftInf { period, suffix } => (period.len(), suffix.len()),
        WordRep::BiInf { left, core, right } => (left.len().max(right.len()), core.len()),
    }
}

impl PointedWord {
    pub fn finite(left: Vec<Letter>, base: StateId, right: Vec<Letter>) -> PointedWord {
        PointedWord {
            left: WordRep::Finite(left),
            base,
            right: WordRep::Finite(right),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.left.is_finite() && self.right.is_finite()
    }

    /// Letter of the underlying word at position `i`, the basepoint being
    /// the gap before position 0.
    pub fn letter_at(&self, i: i64) -> Option<Letter> {
        if i < 0 {
            left_at(&self.left, i)
        } else {
            right_at(&self.right, i)
        }
    }

    /// First position and one past the last; `None` on an infinite side.
    pub fn extent(&self) -> (Option<i64>, Option<i64>) {
        (
            left_letters_len(&self.left).map(|n| -(n as i64)),
            match &self.right {
                WordRep::Finite(x) => Some(x.len() as i64),
                WordRep::Window(x) => Some(x.letters.len() as i64),
                _ => None,
            },
        )
    }

    /// All letters of a word with finite parts, left to right.
    pub fn underlying(&self) -> Option<Vec<Letter>> {
        let (Some(lo), Some(hi)) = self.extent() else {
            return None;
        };
        (lo..hi).map(|i| self.letter_at(i)).collect()
    }

    /// `(right⁻¹, base⁻¹, left⁻¹)`.
    pub fn inverse(&self, m: &Mia) -> Result<PointedWord> {
        Ok(PointedWord {
            left: self.right.invert(),
            base: m
                .inverse(self.base)
                .ok_or_else(|| Error::InvalidWord("basepoint is not initial".into()))?,
            right: self.left.invert(),
        })
    }

    /// Periodicity of the underlying word `left · right`.
    pub fn periodicity(&self) -> Periodicity {
        let left_inf = matches!(self.left, WordRep::LeftInf { .. });
        let right_inf = matches!(self.right, WordRep::RightInf { .. });
        let window = |w: &WordRep<Letter>| match w {
            WordRep::Window(x) => Some(x.certified),
            _ => None,
        };
        if let Some(c) = window(&self.left).or(window(&self.right)) {
            if left_inf || right_inf {
                return Periodicity::AlmostPeriodic {
                    left: left_inf,
                    right: right_inf,
                };
            }
            return if c {
                Periodicity::AperiodicCertified
            } else {
                Periodicity::UnknownWindow
            };
        }
        match (left_inf, right_inf) {
            (false, false) => Periodicity::Finite,
            (true, true) => {
                if self.pure_period().is_some() {
                    Periodicity::Periodic
                } else {
                    Periodicity::AlmostPeriodic {
                        left: true,
                        right: true,
                    }
                }
            }
            (false, true) => {
                let (WordRep::Finite(l), WordRep::RightInf { prefix, period }) =
                    (&self.left, &self.right)
                else {
                    unreachable!()
                };
                WordRep::RightInf {
                    prefix: l.iter().chain(prefix).copied().collect(),
                    period: period.clone(),
                }
                .classify_periodicity()
            }
            (true, false) => {
                let (WordRep::LeftInf { period, suffix }, WordRep::Finite(r)) =
                    (&self.left, &self.right)
                else {
                    unreachable!()
                };
                WordRep::LeftInf {
                    period: period.clone(),
                    suffix: suffix.iter().chain(r).copied().collect(),
                }
                .classify_periodicity()
            }
        }
    }

    /// Letters of the right part when it is finite or a window.
    pub fn right_letters(&self) -> Vec<Letter> {
        match &self.right {
            WordRep::Finite(x) => x.clone(),
            WordRep::Window(x) => x.letters.clone(),
            _ => Vec::new(),
        }
    }

    /// For a bi-infinite periodic word, its primitive period length.
    pub fn pure_period(&self) -> Option<usize> {
        let (WordRep::LeftInf { period: lp, suffix }, WordRep::RightInf { prefix, period: rp }) =
            (&self.left, &self.right)
        else {
            return None;
        };
        let rep = WordRep::BiInf {
            left: lp.clone(),
            core: suffix.iter().chain(prefix).copied().collect(),
            right: rp.clone(),
        };
        if rep.classify_periodicity() == Periodicity::Periodic {
            Some(crate::words::primitive_root_len(rp))
        } else {
            None
        }
    }
}

/// Takes `k` letters from the front of a right part.
fn split_front(w: &WordRep<Letter>, k: usize) -> Result<(Vec<Letter>, WordRep<Letter>)> {
    let moved = w
        .unfold(0, k as i64)
        .ok_or_else(|| Error::InvalidWord("shift runs past the end".into()))?;
    let rest = match w {
        WordRep::Finite(x) => WordRep::Finite(x[k..].to_vec()),
        WordRep::Window(x) => WordRep::Window(Window {
            letters: x.letters[k..].to_vec(),
            ..x.clone()
        }),
        WordRep::RightInf { prefix, period } => {
            if k <= prefix.len() {
                WordRep::RightInf {
                    prefix: prefix[k..].to_vec(),
                    period: period.clone(),
                }
            } else {
                let mut p = period.clone();
                p.rotate_left((k - prefix.len()) % period.len());
                WordRep::RightInf {
                    prefix: Vec::new(),
                    period: p,
                }
            }
        }
        _ => return Err(Error::Unsupported("right part must be right-infinite".into())),
    };
    Ok((moved, rest))
}

fn append(w: &WordRep<Letter>, extra: &[Letter]) -> Result<WordRep<Letter>> {
    Ok(match w {
        WordRep::Finite(x) => WordRep::Finite(x.iter().chain(extra).copied().collect()),
        WordRep::Window(x) => WordRep::Window(Window {
            letters: x.letters.iter().chain(extra).copied().collect(),
            ..x.clone()
        }),
        WordRep::LeftInf { period, suffix } => WordRep::LeftInf {
            period: period.clone(),
            suffix: suffix.iter().chain(extra).copied().collect(),
        },
        _ => return Err(Error::Unsupported("left part must be left-infinite".into())),
    })
}

impl Mia {
    /// Gap labels for a finite stretch: `take_left` letters of the left part
    /// and `take_right` of the right part (finite parts are taken whole).
    pub fn gap_word(&self, w: &PointedWord, take_left: usize, take_right: usize) -> Result<GapWord> {
        if !self.is_initial(w.base) {
            return Err(Error::InvalidWord(format!(
                "basepoint `{}` is not initial",
                self.name(w.base)
            )));
        }
        let nl = left_letters_len(&w.left).unwrap_or(take_left);
        let nr = match &w.right {
            WordRep::Finite(x) => x.len(),
            WordRep::Window(x) => x.letters.len(),
            _ => take_right,
        };
        let mut letters = Vec::with_capacity(nl + nr);
        for i in -(nl as i64)..nr as i64 {
            letters.push(
                w.letter_at(i)
                    .ok_or_else(|| Error::InvalidWord("word has no letter there".into()))?,
            );
        }
        let mut labels = vec![0; nl + nr + 1];
        labels[nl] = w.base;
        let mut s = w.base;
        for k in 0..nr {
            s = self.t(s, letters[nl + k]).ok_or_else(|| {
                Error::InvalidWord(format!("run from the basepoint stops after {k} letters"))
            })?;
            labels[nl + k + 1] = self.e(s);
        }
        let mut s = self.inverse(w.base).unwrap();
        for k in 1..=nl {
            s = self.t(s, letters[nl - k].inv()).ok_or_else(|| {
                Error::InvalidWord(format!("leftward run stops after {} letters", k - 1))
            })?;
            labels[nl - k] = self.inverse(self.e(s)).unwrap();
        }
        Ok(GapWord {
            letters,
            labels,
            left_closed: is_closed(&w.left),
            right_closed: is_closed(&w.right),
            base: nl,
        })
    }

    /// A stretch long enough to see every state/period combination on each
    /// infinite side.
    pub(crate) fn full_frame(&self, w: &PointedWord) -> Result<GapWord> {
        let (pl, fl) = side_scale(&w.left);
        let (pr, fr) = side_scale(&w.right);
        let reach = |p: usize, f: usize| f + p * (self.state_count() + 2);
        self.gap_word(w, reach(pl, fl), reach(pr, fr))
    }

    /// Checks the word conditions: both runs from the basepoint are defined,
    /// and at every gap to the right of the basepoint the left word read so
    /// far is accepted from the inverse of that gap's label.
    pub fn check_word(&self, w: &PointedWord) -> Result<()> {
        let g = self.full_frame(w)?;
        let mut rev = invert_seq(&g.letters[..g.base]);
        for k in g.base..=g.letters.len() {
            if k > g.base {
                rev.insert(0, g.letters[k - 1].inv());
            }
            let start = self.inverse(g.labels[k]).unwrap();
            if self.run(start, &rev).is_none() {
                return Err(Error::InvalidWord(format!(
                    "left word up to gap {} is not accepted",
                    k as i64 - g.base as i64
                )));
            }
        }
        Ok(())
    }

    /// Moves the basepoint `k` letters to the right (left when negative).
    pub fn shift(&self, w: &PointedWord, k: i64) -> Result<PointedWord> {
        if k >= 0 {
            let (moved, right) = split_front(&w.right, k as usize)?;
            let s = self
                .run(w.base, &moved)
                .ok_or_else(|| Error::InvalidWord("shift leaves the automaton".into()))?;
            Ok(PointedWord {
                left: append(&w.left, &moved)?,
                base: self.e(s),
                right,
            })
        } else {
            let inv = w.inverse(self)?;
            let shifted = self.shift(&inv, -k)?;
            shifted.inverse(self)
        }
    }

    /// Whether `w1 ~ w2`: the same underlying word with basepoints related by
    /// running the automaton across the letters between them.
    pub fn equivalent(&self, w1: &PointedWord, w2: &PointedWord) -> bool {
        let (lo1, hi1) = w1.extent();
        let (lo2, hi2) = w2.extent();
        if lo1.is_some() != lo2.is_some() || hi1.is_some() != hi2.is_some() {
            return false;
        }
        // u2(i) = u1(i + d) for the shift d between basepoints.
        let candidates: Vec<i64> = match (lo1, lo2, hi1, hi2) {
            (Some(a), Some(b), _, _) => vec![a - b],
            (_, _, Some(a), Some(b)) => vec![a - b],
            _ => {
                let (p1, f1) = side_scale(&w1.left);
                let (q1, g1) = side_scale(&w1.right);
                let (p2, f2) = side_scale(&w2.left);
                let (q2, g2) = side_scale(&w2.right);
                let d = (f1 + g1 + f2 + g2 + p1 * p2 + q1 * q2 + 1) as i64;
                (-d..=d).collect()
            }
        };
        let span = {
            let (p1, f1) = side_scale(&w1.left);
            let (q1, g1) = side_scale(&w1.right);
            let (p2, f2) = side_scale(&w2.left);
            let (q2, g2) = side_scale(&w2.right);
            (f1 + g1 + f2 + g2 + 2 * (p1 * p2 + q1 * q2) + 2) as i64
        };
        for d in candidates {
            if let (Some(a), Some(b)) = (hi1, hi2) {
                if a - b != d {
                    continue;
                }
            }
            let lo = lo2.unwrap_or(-span - d.abs());
            let hi = hi2.unwrap_or(span + d.abs());
            if !(lo..hi).all(|i| w2.letter_at(i) == w1.letter_at(i + d)) {
                continue;
            }
            let (from, to, seg): (&PointedWord, &PointedWord, Vec<Letter>) = if d >= 0 {
                let seg = (0..d).map(|i| w1.letter_at(i)).collect::<Option<Vec<_>>>();
                match seg {
                    Some(s) => (w1, w2, s),
                    None => continue,
                }
            } else {
                let seg = (0..-d).map(|i| w2.letter_at(i)).collect::<Option<Vec<_>>>();
                match seg {
                    Some(s) => (w2, w1, s),
                    None => continue,
                }
            };
            if self.run(from.base, &seg).map(|s| self.e(s)) == Some(to.base) {
                return true;
            }
        }
        false
    }

    /// Applies `φ` letterwise; states are unchanged.
    pub fn transport_forward(&self, w: &PointedWord, phi: &[u32]) -> PointedWord {
        let f = |r: &WordRep<Letter>| map_rep(r, |l| map_letter(phi, l));
        PointedWord {
            left: f(&w.left),
            base: w.base,
            right: f(&w.right),
        }
    }

    /// Inverse of [`Mia::transport_forward`]: recovers the letters of `self`
    /// by walking the unique defined preimage at every state.
    pub fn transport_backward(&self, w: &PointedWord, phi: &[u32]) -> Result<PointedWord> {
        let right = self.pull(phi, w.base, &w.right)?;
        let inv_base = self
            .inverse(w.base)
            .ok_or_else(|| Error::InvalidWord("basepoint is not initial".into()))?;
        let left = self.pull(phi, inv_base, &w.left.invert())?.invert();
        Ok(PointedWord {
            left,
            base: w.base,
            right,
        })
    }

    fn pull(&self, phi: &[u32], start: StateId, w: &WordRep<Letter>) -> Result<WordRep<Letter>> {
        let walk = |s: &mut StateId, img: &[Letter]| -> Result<Vec<Letter>> {
            img.iter()
                .map(|&c| {
                    let b = self.preimage(phi, *s, c).ok_or_else(|| {
                        Error::InvalidWord(format!("no preimage of a letter at `{}`", self.name(*s)))
                    })?;
                    *s = self.t(*s, b).unwrap();
                    Ok(b)
                })
                .collect()
        };
        let mut s = start;
        Ok(match w {
            WordRep::Finite(x) => WordRep::Finite(walk(&mut s, x)?),
            WordRep::Window(x) => WordRep::Window(Window {
                letters: walk(&mut s, &x.letters)?,
                ..x.clone()
            }),
            WordRep::RightInf { prefix, period } => {
                let mut pre = walk(&mut s, prefix)?;
                let mut seen: HashMap<StateId, usize> = HashMap::new();
                let mut copies: Vec<Vec<Letter>> = Vec::new();
                while !seen.contains_key(&s) {
                    seen.insert(s, copies.len());
                    copies.push(walk(&mut s, period)?);
                }
                let j = seen[&s];
                for c in &copies[..j] {
                    pre.extend(c);
                }
                let per: Vec<Letter> = copies[j..].concat();
                WordRep::RightInf {
                    prefix: pre,
                    period: per,
                }
                .normalize()?
            }
            _ => return Err(Error::Unsupported("cannot pull back this word shape".into())),
        })
    }
}

fn map_rep(w: &WordRep<Letter>, f: impl Fn(Letter) -> Letter) -> WordRep<Letter> {
    let m = |v: &Vec<Letter>| v.iter().map(|&l| f(l)).collect::<Vec<_>>();
    match w {
        WordRep::Finite(x) => WordRep::Finite(m(x)),
        WordRep::Window(x) => WordRep::Window(Window {
            letters: m(&x.letters),
            ..x.clone()
        }),
        WordRep::RightInf { prefix, period } => WordRep::RightInf {
            prefix: m(prefix),
            period: m(period),
        },
        WordRep::LeftInf { period, suffix } => WordRep::LeftInf {
            period: m(period),
            suffix: m(suffix),
        },
        WordRep::BiInf { left, core, right } => WordRep::BiInf {
            left: m(left),
            core: m(core),
            right: m(right),
        },
    }
}

/// Every placement of the finite `needle` inside `hay` whose gap labels and
/// letters agree. A bi-infinite periodic host reports one period of
/// placements.
pub fn subword_occurrences(m: &Mia, needle: &PointedWord, hay: &PointedWord) -> Result<Vec<Occurrence>> {
    if !needle.is_finite() {
        return Err(Error::Unsupported("needle must be finite".into()));
    }
    let n = m.gap_word(needle, 0, 0)?;
    let period = hay.pure_period();
    let h = match period {
        Some(p) => m.gap_word(hay, 2 * p + n.len(), 2 * p + n.len())?,
        None => match hay.periodicity() {
            Periodicity::Finite | Periodicity::AperiodicCertified | Periodicity::UnknownWindow => {
                m.gap_word(hay, 0, 0)?
            }
            _ => {
                return Err(Error::Unsupported(
                    "host must be finite, a window, or bi-infinite periodic".into(),
                ))
            }
        },
    };
    let len = n.len();
    let mut out = Vec::new();
    if h.len() < len {
        return Ok(out);
    }
    for j in 0..=h.len() - len {
        let rel = j as i64 - h.base as i64;
        if let Some(p) = period {
            if !(0..p as i64).contains(&rel) {
                continue;
            }
        }
        if h.letters[j..j + len] == n.letters[..] && h.labels[j..=j + len] == n.labels[..] {
            out.push(Occurrence {
                offset: rel,
                len,
                before: h.before(j),
                after: h.after(j + len),
                period,
            });
        }
    }
    Ok(out)
}

/// Needle of a zero-length word sitting on `state`.
pub fn point(state: StateId) -> PointedWord {
    PointedWord::finite(Vec::new(), state, Vec::new())
}

/// A right-infinite window with the given letters.
pub fn right_window(letters: Vec<Letter>, certified: bool, origin: &str) -> WordRep<Letter> {
    WordRep::Window(Window {
        letters,
        certified,
        origin: origin.to_string(),
        kind: WindowKind::RightInfinite,
    })
}
