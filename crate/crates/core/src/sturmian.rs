//! Characteristic Sturmian prefixes, window-scale Sturmian checks, and the
//! bridge realizing words over `{a, b}` as strings of `Λ₃`.
//!
//! Words over `{a, b}` are byte strings of `b'a'` and `b'b'`. Window
//! verdicts are necessary-condition checks: they only see what fits
//! inside the window.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Algebra;
use crate::bricks::Checker;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::mia::{is_brick_word, BrickReport, PointedWord, Witness};
use crate::strings::Syllable;
use crate::words::{for_each_lce, Letter, Window, WindowKind, WordRep};

/// Largest prefix length [`characteristic_prefix`] will produce.
pub const PREFIX_CAP: usize = 10_000_000;

/// Directive sequence `(d₁, d₂, …)`, finite or eventually periodic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectiveSequence {
    prefix: Vec<u32>,
    period: Vec<u32>,
}

impl DirectiveSequence {
    pub fn new(prefix: Vec<u32>, period: Vec<u32>) -> Result<DirectiveSequence> {
        if prefix.is_empty() && period.is_empty() {
            return Err(Error::Unsupported("directive sequence is empty".into()));
        }
        let bad = prefix.iter().chain(&period).skip(1).any(|&d| d == 0)
            || (prefix.is_empty() && period.first() == Some(&0));
        if bad {
            return Err(Error::Unsupported(
                "directive terms after the first must be at least 1".into(),
            ));
        }
        let p = crate::words::primitive_root_len(&period);
        let (mut prefix, mut period) = (prefix, period[..p].to_vec());
        while !period.is_empty() && prefix.last() == period.last() {
            prefix.pop();
            period.rotate_right(1);
        }
        Ok(DirectiveSequence { prefix, period })
    }

    /// Golden slope, `(1, 1, 1, …)`.
    pub fn fibonacci() -> DirectiveSequence {
        DirectiveSequence::new(Vec::new(), vec![1]).unwrap()
    }

    pub fn is_infinite(&self) -> bool {
        !self.period.is_empty()
    }

    /// `d_k` for `k ≥ 1`.
    pub fn term(&self, k: usize) -> Option<u32> {
        let i = k - 1;
        if i < self.prefix.len() {
            Some(self.prefix[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.prefix.len()) % self.period.len()])
        }
    }
}

impl FromStr for DirectiveSequence {
    type Err = Error;

    /// `1,2,(1,3)`: a comma list with an optional parenthesized period.
    fn from_str(s: &str) -> Result<DirectiveSequence> {
        let bad = |m: &str| Error::Syntax {
            line: 1,
            message: format!("directive `{s}`: {m}"),
        };
        let s = s.trim();
        let (head, tail) = match s.find('(') {
            Some(i) => {
                let rest = s[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| bad("period must close the sequence"))?;
                (&s[..i], Some(rest))
            }
            None => (s, None),
        };
        let nums = |t: &str| -> Result<Vec<u32>> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<u32>().map_err(|_| bad(&format!("`{x}` is not a number"))))
                .collect()
        };
        let prefix = nums(head)?;
        let period = match tail {
            Some(t) => {
                let p = nums(t)?;
                if p.is_empty() {
                    return Err(bad("empty period"));
                }
                p
            }
            None => Vec::new(),
        };
        DirectiveSequence::new(prefix, period)
    }
}

impl fmt::Display for DirectiveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        f.write_str(&join(&self.prefix))?;
        if !self.period.is_empty() {
            if !self.prefix.is_empty() {
                f.write_str(",")?;
            }
            write!(f, "({})", join(&self.period))?;
        }
        Ok(())
    }
}

/// First `n` letters of the limit of `s₋₁ = b`, `s₀ = a`,
/// `s_k = s_{k−1}^{d_k} s_{k−2}`. A finite sequence gives the periodic
/// word of its last standard word, and the window is not certified.
pub fn characteristic_prefix(d: &DirectiveSequence, n: usize) -> Result<Window<u8>> {
    if n == 0 {
        return Err(Error::Unsupported("prefix length must be positive".into()));
    }
    if n > PREFIX_CAP {
        return Err(Error::CapExceeded {
            what: "prefix length".into(),
            cap: PREFIX_CAP,
        });
    }
    let (mut older, mut old) = (b"b".to_vec(), b"a".to_vec());
    let mut k = 1;
    let mut letters = loop {
        let Some(dk) = d.term(k) else {
            break old;
        };
        let mut next = Vec::with_capacity(old.len() * dk as usize + older.len());
        for _ in 0..dk {
            next.extend_from_slice(&old);
        }
        next.extend_from_slice(&older);
        older = old;
        old = next;
        k += 1;
        if k > 2 && old.len() >= n {
            break old;
        }
    };
    if letters.len() < n {
        letters = letters.iter().copied().cycle().take(n).collect();
    }
    letters.truncate(n);
    Ok(Window {
        letters,
        certified: d.is_infinite(),
        origin: format!("characteristic word, directive {d}"),
        kind: WindowKind::RightInfinite,
    })
}

/// A finite word `w′` with both `a w′ a` and `b w′ b` in the window. For the
/// characteristic check, `a_at` or `b_at` may be `None`: the occurrence is
/// a prefix `w′x` of the window standing in for that letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmianViolation {
    pub core: Vec<u8>,
    pub a_at: Option<usize>,
    pub b_at: Option<usize>,
}

/// Looks for `w′` with both `a w′ a` and `b w′ b` inside `w`.
///
/// For a pair of positions following an `a` and a `b`, the only candidate
/// `w′` is their longest common extension; it is a violation when the
/// letters after it again differ as `a`/`b`.
pub fn sturmian_window_check(w: &[u8]) -> Option<SturmianViolation> {
    let n = w.len();
    let mut best: Option<(usize, usize, usize)> = None;
    for_each_lce(w, w, |i, j, len| {
        if i == 0 || j == 0 || i + len >= n || j + len >= n {
            return;
        }
        if w[i - 1] == b'a' && w[j - 1] == b'b' && w[i + len] == b'a' && w[j + len] == b'b' {
            let key = (len, i, j);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
    });
    best.map(|(len, i, j)| SturmianViolation {
        core: w[i..i + len].to_vec(),
        a_at: Some(i - 1),
        b_at: Some(j - 1),
    })
}

/// The characteristic check: a window of a characteristic word also has
/// no prefix `p` with `px` a prefix and `y p y` inside, for `{x, y} = {a, b}`.
pub fn characteristic_window_check(w: &[u8]) -> Option<SturmianViolation> {
    if let Some(v) = sturmian_window_check(w) {
        return Some(v);
    }
    let n = w.len();
    let mut best: Option<(usize, usize)> = None;
    for_each_lce(w, w, |i, j, len| {
        if i != 0 || j == 0 || len >= n || j + len >= n {
            return;
        }
        if w[j - 1] == w[j + len] && w[len] != w[j - 1] {
            let key = (len, j);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
    });
    best.map(|(len, j)| {
        let (a_at, b_at) = if w[j - 1] == b'a' {
            (Some(j - 1), None)
        } else {
            (None, Some(j - 1))
        };
        SturmianViolation {
            core: w[..len].to_vec(),
            a_at,
            b_at,
        }
    })
}

/// Two equal-length subwords never differ by more than one in their count
/// of `a`, for lengths up to `max_len`.
pub fn is_balanced(w: &[u8], max_len: usize) -> bool {
    let mut prefix = vec![0usize; w.len() + 1];
    for (i, &c) in w.iter().enumerate() {
        prefix[i + 1] = prefix[i] + (c == b'a') as usize;
    }
    (1..=max_len.min(w.len())).all(|k| {
        let counts = (0..=w.len() - k).map(|i| prefix[i + k] - prefix[i]);
        let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        hi - lo <= 1
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BridgeSide {
    /// A right-infinite string starting at `v₂`.
    RightInfinite,
    BiInfinite,
}

#[derive(Clone, Debug)]
pub struct BridgeReport {
    /// The `Λ₃` realization.
    pub syllables: Vec<Syllable>,
    /// Its parity image over `{0, 1}`.
    pub binary: Vec<Letter>,
    pub word: PointedWord,
    pub brick: BrickReport,
    /// The Sturmian verdict on the input window (the characteristic check
    /// on the right-infinite side).
    pub violation: Option<SturmianViolation>,
    /// A brick-word witness decoded back to a word over `{a, b}`.
    pub witness_core: Option<Vec<u8>>,
}

impl BridgeReport {
    /// Witness in the window exactly when a Sturmian violation is.
    pub fn consistent(&self) -> bool {
        self.brick.witness.is_some() == self.violation.is_some()
    }
}

/// Realizes `w` over `Λ₃` with `a ↦ b₁A₁`, `b ↦ A₂b₂`, transports it to
/// the parity automaton and runs the windowed brick-word check.
pub fn bridge(w: &[u8], side: BridgeSide, certified: bool) -> Result<BridgeReport> {
    let alg = Algebra::parse(fixtures::LAMBDA3)?;
    bridge_with(&Checker::new(&alg), w, side, certified)
}

/// [`bridge`] with a prebuilt checker for `Λ₃`.
pub fn bridge_with(checker: &Checker, w: &[u8], side: BridgeSide, certified: bool) -> Result<BridgeReport> {
    if w.is_empty() || w.iter().any(|&c| c != b'a' && c != b'b') {
        return Err(Error::InvalidWord("bridge input must be a nonempty word over {a, b}".into()));
    }
    let alg = checker.algebra();
    let block_a = alg.parse_syllables(fixtures::BRIDGE_A)?;
    let block_b = alg.parse_syllables(fixtures::BRIDGE_B)?;
    let syllables: Vec<Syllable> = w
        .iter()
        .flat_map(|&c| if c == b'a' { block_a.clone() } else { block_b.clone() })
        .collect();
    let violation = alg.check_syllables(&syllables);
    assert!(violation.is_none(), "bridge realization is always a string");

    let kind = match side {
        BridgeSide::RightInfinite => WindowKind::RightInfinite,
        BridgeSide::BiInfinite => WindowKind::BiInfinite,
    };
    let rep = WordRep::Window(Window {
        letters: syllables.clone(),
        certified,
        origin: "bridge".into(),
        kind,
    });
    let full = checker.automaton().infinite_to_word(alg, &rep)?;
    let (m, phi) = checker.word_automaton();
    let word = match &phi {
        Some(phi) => checker.automaton().mia().transport_forward(&full, phi),
        None => full,
    };
    let brick = is_brick_word(m, &word)?;
    let binary = word.right_letters();
    let witness_core = brick.witness.as_ref().and_then(|wit| match wit {
        Witness::Word { word, .. } => decode_blocks(&word.underlying()?),
        Witness::String { .. } => None,
    });
    let violation = match side {
        BridgeSide::RightInfinite => characteristic_window_check(w),
        BridgeSide::BiInfinite => sturmian_window_check(w),
    };
    Ok(BridgeReport {
        syllables,
        binary,
        word,
        brick,
        violation,
        witness_core,
    })
}

/// `01 ↦ a`, `10 ↦ b`.
pub fn decode_blocks(letters: &[Letter]) -> Option<Vec<u8>> {
    if !letters.len().is_multiple_of(2) {
        return None;
    }
    letters
        .chunks(2)
        .map(|p| match (p[0].inverse, p[1].inverse) {
            (false, true) => Some(b'a'),
            (true, false) => Some(b'b'),
            _ => None,
        })
        .collect()
}

/// `a ↦ 01`, `b ↦ 10`.
pub fn encode_blocks(w: &[u8]) -> Vec<Letter> {
    w.iter()
        .flat_map(|&c| {
            if c == b'a' {
                [Letter::ZERO, Letter::ONE]
            } else {
                [Letter::ONE, Letter::ZERO]
            }
        })
        .collect()
}
