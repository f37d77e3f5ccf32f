//! Brick and weak brick words: searching for a subword that occurs both as
//! a factor subword of a word and as an image subword of it or its inverse.

use std::fmt;
use std::ops::Range;

use super::word::{GapWord, PointedWord};
use super::Mia;
use crate::error::{Error, Result};
use crate::strings::Str;
use crate::words::{for_each_lce, Periodicity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Direct,
    Automaton,
    Endo,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::Automaton => "automaton",
            Method::Endo => "endo",
        })
    }
}

/// How much of the object a verdict covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Exact,
    /// No witness within a window of this many letters.
    Window(usize),
    /// Witness lengths up to this bound were scanned.
    Bounded(usize),
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Exact => f.write_str("exact"),
            Scope::Window(n) => write!(f, "window {n}"),
            Scope::Bounded(b) => write!(f, "witness length <= {b}"),
        }
    }
}

/// Where the image occurrence of a witness lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Host {
    Word,
    Inverse,
}

impl fmt::Display for Host {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Host::Word => "word",
            Host::Inverse => "inverse",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A string that is a factor substring at `factor_start` and an image
    /// substring at `image_start` (syllable offsets in their hosts).
    String {
        sub: Str,
        factor_start: i64,
        image_start: i64,
        host: Host,
    },
    /// The same over an automaton; offsets are relative to the basepoint of
    /// each host.
    Word {
        word: PointedWord,
        factor_offset: i64,
        image_offset: i64,
        host: Host,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrickReport {
    pub verdict: bool,
    pub method: Method,
    pub witness: Option<Witness>,
    pub periodicity: Periodicity,
    pub scope: Scope,
    /// Why the verdict was reached without a witness, when that happens.
    pub reason: Option<String>,
    /// Dimension of the endomorphism ring, for the endomorphism method.
    pub end_dim: Option<usize>,
}

impl BrickReport {
    pub(crate) fn new(method: Method, periodicity: Periodicity, scope: Scope) -> BrickReport {
        BrickReport {
            verdict: true,
            method,
            witness: None,
            periodicity,
            scope,
            reason: None,
            end_dim: None,
        }
    }

    pub(crate) fn fail(mut self, reason: &str) -> BrickReport {
        self.verdict = false;
        self.reason = Some(reason.to_string());
        self
    }

    pub(crate) fn with_witness(mut self, w: Option<Witness>) -> BrickReport {
        if w.is_some() {
            self.verdict = false;
            self.witness = w;
        }
        self
    }
}

/// Limits on a witness search. `None` means unrestricted.
#[derive(Clone, Debug, Default)]
pub struct WitnessSearch {
    pub max_len: Option<usize>,
    pub factor_anchors: Option<Range<usize>>,
    pub image_anchors: Option<Range<usize>>,
}

/// Smallest `(len, i, j)` such that letters `i..i+len` of `x` form a factor
/// subword and letters `j..j+len` of `h` an image subword with identical
/// letters and gap labels.
///
/// For a fixed pair of starts the length is forced: a shorter common
/// stretch is followed by the same letter in both hosts, which cannot be
/// direct and inverse at once. So only the longest common extension is
/// tried, and the whole search is one pass over the extension table.
pub fn find_witness(
    x: &GapWord,
    h: &GapWord,
    host: Host,
    search: &WitnessSearch,
) -> Option<(usize, usize, usize)> {
    let steps = |g: &GapWord| -> Vec<_> {
        g.letters
            .iter()
            .zip(&g.labels[1..])
            .map(|(&l, &s)| (l, s))
            .collect()
    };
    let (sx, sh) = (steps(x), steps(h));
    let (n, m) = (x.len(), h.len());
    let mut best: Option<(usize, usize, usize)> = None;
    for_each_lce(&sx, &sh, |i, j, len| {
        if x.labels[i] != h.labels[j] {
            return;
        }
        if search.max_len.is_some_and(|b| len > b) {
            return;
        }
        if search.factor_anchors.as_ref().is_some_and(|r| !r.contains(&i))
            || search.image_anchors.as_ref().is_some_and(|r| !r.contains(&j))
        {
            return;
        }
        let factor_before = if i == 0 { x.left_closed } else { x.letters[i - 1].inverse };
        let factor_after = if i + len == n { x.right_closed } else { !x.letters[i + len].inverse };
        let image_before = if j == 0 { h.left_closed } else { !h.letters[j - 1].inverse };
        let image_after = if j + len == m { h.right_closed } else { h.letters[j + len].inverse };
        if !(factor_before && factor_after && image_before && image_after) {
            return;
        }
        let trivial = host == Host::Word
            && i == 0
            && j == 0
            && len == n
            && x.left_closed
            && x.right_closed;
        if trivial {
            return;
        }
        if best.is_none_or(|b| (len, i, j) < b) {
            best = Some((len, i, j));
        }
    });
    best
}

fn search_both(m: &Mia, g: &GapWord, search: &WitnessSearch) -> Option<Witness> {
    let inv = g.inverse(m);
    let hosts = [(g, Host::Word), (&inv, Host::Inverse)];
    hosts.iter().find_map(|&(h, host)| {
        find_witness(g, h, host, search).map(|(len, i, j)| Witness::Word {
            word: g.slice(i, len),
            factor_offset: i as i64 - g.base as i64,
            image_offset: j as i64 - h.base as i64,
            host,
        })
    })
}

/// Period of a bi-infinite periodic word together with its gap states:
/// the smallest multiple of the letter period after which the states
/// repeat as well. Relabelling can shorten the letter period, never this.
pub fn labelled_period(m: &Mia, w: &PointedWord) -> Result<usize> {
    let p = w
        .pure_period()
        .ok_or_else(|| Error::Unsupported("word is not bi-infinite periodic".into()))?;
    let span = p * (m.state_count() + 1);
    let g = m.gap_word(w, span, span)?;
    (1..=m.state_count())
        .map(|k| k * p)
        .find(|&q| (0..=g.len() - q).all(|j| g.labels[j] == g.labels[j + q]))
        .ok_or_else(|| Error::InvalidWord("gap states never repeat".into()))
}

/// Witness search over a bi-infinite periodic word, trying lengths up to
/// `bound` with anchors over one labelled period in each host.
pub fn periodic_witness(m: &Mia, w: &PointedWord, bound: usize) -> Result<Option<Witness>> {
    let p = labelled_period(m, w)?;
    let take = 2 * p + bound + 1;
    let g = m.gap_word(w, take, take)?;
    let search = WitnessSearch {
        max_len: Some(bound),
        factor_anchors: Some(p..2 * p),
        image_anchors: Some(p..2 * p),
    };
    Ok(search_both(m, &g, &search))
}

/// Brick word test: the word must be aperiodic and have no common
/// factor/image subword apart from itself by equality.
pub fn is_brick_word(m: &Mia, w: &PointedWord) -> Result<BrickReport> {
    let periodicity = w.periodicity();
    match periodicity {
        Periodicity::Finite => {
            let g = m.gap_word(w, 0, 0)?;
            let report = BrickReport::new(Method::Automaton, periodicity, Scope::Exact);
            Ok(report.with_witness(search_both(m, &g, &WitnessSearch::default())))
        }
        Periodicity::Periodic | Periodicity::AlmostPeriodic { .. } => {
            Ok(BrickReport::new(Method::Automaton, periodicity, Scope::Exact).fail("not aperiodic"))
        }
        Periodicity::AperiodicCertified | Periodicity::UnknownWindow => window_report(m, w, periodicity),
    }
}

fn window_report(m: &Mia, w: &PointedWord, periodicity: Periodicity) -> Result<BrickReport> {
    let g = m.gap_word(w, 0, 0)?;
    let mut report = BrickReport::new(Method::Automaton, periodicity, Scope::Window(g.len()))
        .with_witness(search_both(m, &g, &WitnessSearch::default()));
    if report.verdict && periodicity == Periodicity::UnknownWindow {
        report.reason = Some("aperiodicity not certified".into());
    }
    Ok(report)
}

/// Weak brick word test: like [`is_brick_word`] without aperiodicity, and
/// with witnesses restricted to finite words.
pub fn is_weak_brick_word(m: &Mia, w: &PointedWord) -> Result<BrickReport> {
    let periodicity = w.periodicity();
    match periodicity {
        Periodicity::Finite => {
            let g = m.gap_word(w, 0, 0)?;
            Ok(BrickReport::new(Method::Automaton, periodicity, Scope::Exact)
                .with_witness(search_both(m, &g, &WitnessSearch::default())))
        }
        Periodicity::AperiodicCertified | Periodicity::UnknownWindow => window_report(m, w, periodicity),
        _ => {
            if w.pure_period().is_some() {
                let p = labelled_period(m, w)?;
                let witness = periodic_witness(m, w, p)?;
                return Ok(BrickReport::new(Method::Automaton, periodicity, Scope::Bounded(p))
                    .with_witness(witness));
            }
            // Eventually periodic but not purely periodic: scan a window that
            // covers the finite parts and several periods on each side.
            let g = m.full_frame(w)?;
            Ok(BrickReport::new(Method::Automaton, periodicity, Scope::Bounded(g.len()))
                .with_witness(search_both(m, &g, &WitnessSearch::default())))
        }
    }
}
