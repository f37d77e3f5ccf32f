//! Words over signed alphabets `A ⊔ A⁻¹`: finite words, eventually periodic
//! infinite words, and finite windows of generated streams.
//!
//! Positions are integers. A finite word and a right-infinite word start at
//! position 0; a left-infinite word ends at position -1; a bi-infinite word
//! has its core starting at position 0.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Letters that come with a formal inverse.
pub trait Invertible: Clone + Eq {
    fn inv(&self) -> Self;
}

/// A letter of `A ⊔ A⁻¹`: an index into the base alphabet and a direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub symbol: u32,
    pub inverse: bool,
}

impl Letter {
    pub const ZERO: Letter = Letter::direct(0);
    pub const ONE: Letter = Letter::inverted(0);

    pub const fn direct(symbol: u32) -> Letter {
        Letter {
            symbol,
            inverse: false,
        }
    }

    pub const fn inverted(symbol: u32) -> Letter {
        Letter {
            symbol,
            inverse: true,
        }
    }

    /// Position in a table with two columns per base symbol.
    pub fn index(self) -> usize {
        2 * self.symbol as usize + self.inverse as usize
    }

    pub fn from_index(i: usize) -> Letter {
        Letter {
            symbol: (i / 2) as u32,
            inverse: i % 2 == 1,
        }
    }
}

impl Invertible for Letter {
    fn inv(&self) -> Letter {
        Letter {
            symbol: self.symbol,
            inverse: !self.inverse,
        }
    }
}

/// Renders a word over the binary alphabet `{0, 0⁻¹ = 1}`.
pub fn binary_text(letters: &[Letter]) -> String {
    letters
        .iter()
        .map(|l| if l.inverse { '1' } else { '0' })
        .collect()
}

/// Parses a string of `0` and `1` characters over the binary alphabet.
pub fn parse_binary(text: &str) -> Result<Vec<Letter>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(Letter::ZERO),
            '1' => Ok(Letter::ONE),
            _ => Err(Error::InvalidWord(format!("`{c}` is not a binary letter"))),
        })
        .collect()
}

/// Which kind of infinite word a window was cut from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowKind {
    /// The window is a prefix of a right-infinite word.
    RightInfinite,
    /// The window is a suffix of a left-infinite word.
    LeftInfinite,
    /// The window is a factor of a bi-infinite word.
    BiInfinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window<L> {
    pub letters: Vec<L>,
    /// Set when the generator guarantees the full word is aperiodic.
    pub certified: bool,
    pub origin: String,
    pub kind: WindowKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordRep<L> {
    Finite(Vec<L>),
    RightInf { prefix: Vec<L>, period: Vec<L> },
    LeftInf { period: Vec<L>, suffix: Vec<L> },
    BiInf { left: Vec<L>, core: Vec<L>, right: Vec<L> },
    Window(Window<L>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Periodicity {
    Finite,
    Periodic,
    AlmostPeriodic { left: bool, right: bool },
    AperiodicCertified,
    UnknownWindow,
}

impl fmt::Display for Periodicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Periodicity::Finite => f.write_str("finite"),
            Periodicity::Periodic => f.write_str("periodic"),
            Periodicity::AlmostPeriodic { left, right } => match (left, right) {
                (true, true) => f.write_str("almost periodic (left and right)"),
                (true, false) => f.write_str("almost periodic (left)"),
                _ => f.write_str("almost periodic (right)"),
            },
            Periodicity::AperiodicCertified => f.write_str("aperiodic (certified)"),
            Periodicity::UnknownWindow => f.write_str("unknown (window)"),
        }
    }
}

/// Occurrences of a finite needle. Offsets are start positions. On an
/// infinite periodic side, every listed offset in the periodic zone repeats
/// with the stated period in that direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrences {
    pub offsets: Vec<i64>,
    pub left_period: Option<usize>,
    pub right_period: Option<usize>,
}

impl Occurrences {
    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }
}

/// Shortest `q` with `w` a power of `w[..q]`.
pub fn primitive_root_len<L: Eq>(w: &[L]) -> usize {
    let n = w.len();
    (1..=n)
        .find(|&q| n.is_multiple_of(q) && (q..n).all(|i| w[i] == w[i - q]))
        .unwrap_or(n)
}

pub fn is_primitive<L: Eq>(w: &[L]) -> bool {
    !w.is_empty() && primitive_root_len(w) == w.len()
}

pub fn invert_seq<L: Invertible>(w: &[L]) -> Vec<L> {
    w.iter().rev().map(Invertible::inv).collect()
}

fn primitive<L: Clone + Eq>(w: Vec<L>) -> Vec<L> {
    let q = primitive_root_len(&w);
    w[..q].to_vec()
}

impl<L: Clone + Eq> WordRep<L> {
    /// Reduces periods to primitive roots and absorbs finite parts into
    /// the periods without moving any position.
    pub fn normalize(self) -> Result<WordRep<L>> {
        let nonempty = |p: &Vec<L>| {
            if p.is_empty() {
                Err(Error::InvalidWord("period must be nonempty".into()))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            WordRep::RightInf { mut prefix, period } => {
                nonempty(&period)?;
                let mut period = primitive(period);
                while prefix.last().is_some_and(|x| x == period.last().unwrap()) {
                    prefix.pop();
                    period.rotate_right(1);
                }
                WordRep::RightInf { prefix, period }
            }
            WordRep::LeftInf { period, mut suffix } => {
                nonempty(&period)?;
                let mut period = primitive(period);
                while !suffix.is_empty() && suffix[0] == period[0] {
                    suffix.remove(0);
                    period.rotate_left(1);
                }
                WordRep::LeftInf { period, suffix }
            }
            WordRep::BiInf { left, mut core, right } => {
                nonempty(&left)?;
                nonempty(&right)?;
                let left = primitive(left);
                let mut right = primitive(right);
                while core.last().is_some_and(|x| x == right.last().unwrap()) {
                    core.pop();
                    right.rotate_right(1);
                }
                WordRep::BiInf { left, core, right }
            }
            other => other,
        })
    }

    /// Letter at position `i`, if the word has one there.
    pub fn letter_at(&self, i: i64) -> Option<&L> {
        match self {
            WordRep::Finite(w) => usize::try_from(i).ok().and_then(|i| w.get(i)),
            WordRep::Window(w) => usize::try_from(i).ok().and_then(|i| w.letters.get(i)),
            WordRep::RightInf { prefix, period } => {
                let i = usize::try_from(i).ok()?;
                if i < prefix.len() {
                    Some(&prefix[i])
                } else {
                    Some(&period[(i - prefix.len()) % period.len()])
                }
            }
            WordRep::LeftInf { period, suffix } => {
                if i >= 0 {
                    return None;
                }
                let back = (-i) as usize; // 1 is the last letter
                if back <= suffix.len() {
                    Some(&suffix[suffix.len() - back])
                } else {
                    let k = back - suffix.len(); // 1 is the last letter of the period
                    let p = period.len();
                    Some(&period[(p - (k - 1) % p) - 1])
                }
            }
            WordRep::BiInf { left, core, right } => {
                if i < 0 {
                    let k = (-i) as usize;
                    let p = left.len();
                    Some(&left[(p - (k - 1) % p) - 1])
                } else {
                    let i = i as usize;
                    if i < core.len() {
                        Some(&core[i])
                    } else {
                        Some(&right[(i - core.len()) % right.len()])
                    }
                }
            }
        }
    }

    /// First and one-past-last positions; `None` marks an infinite side.
    pub fn bounds(&self) -> (Option<i64>, Option<i64>) {
        match self {
            WordRep::Finite(w) => (Some(0), Some(w.len() as i64)),
            WordRep::Window(w) => (Some(0), Some(w.letters.len() as i64)),
            WordRep::RightInf { .. } => (Some(0), None),
            WordRep::LeftInf { .. } => (None, Some(0)),
            WordRep::BiInf { .. } => (None, None),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, WordRep::Finite(_))
    }

    /// Length of a finite word or window.
    pub fn finite_len(&self) -> Option<usize> {
        match self {
            WordRep::Finite(w) => Some(w.len()),
            WordRep::Window(w) => Some(w.letters.len()),
            _ => None,
        }
    }

    /// The letters at positions `from..to`, which must all exist.
    pub fn unfold(&self, from: i64, to: i64) -> Option<Vec<L>> {
        (from..to).map(|i| self.letter_at(i).cloned()).collect()
    }

    /// A range of positions outside of which the word is periodic on each
    /// infinite side, together with the left and right periods.
    fn periodic_frame(&self) -> (i64, i64, Option<usize>, Option<usize>) {
        match self {
            WordRep::Finite(w) => (0, w.len() as i64, None, None),
            WordRep::Window(w) => (0, w.letters.len() as i64, None, None),
            WordRep::RightInf { prefix, period } => {
                (0, prefix.len() as i64, None, Some(period.len()))
            }
            WordRep::LeftInf { period, suffix } => {
                (-(suffix.len() as i64), 0, Some(period.len()), None)
            }
            WordRep::BiInf { left, core, right } => {
                (0, core.len() as i64, Some(left.len()), Some(right.len()))
            }
        }
    }

    /// Positional equality of the underlying infinite words.
    pub fn same_word(&self, other: &WordRep<L>) -> bool {
        if self.bounds() != other.bounds() {
            return false;
        }
        let (a0, a1, al, ar) = self.periodic_frame();
        let (b0, b1, bl, br) = other.periodic_frame();
        let lp = al.unwrap_or(1) * bl.unwrap_or(1);
        let rp = ar.unwrap_or(1) * br.unwrap_or(1);
        let lo = match self.bounds().0 {
            Some(x) => x,
            None => a0.min(b0) - lp as i64,
        };
        let hi = match self.bounds().1 {
            Some(x) => x,
            None => a1.max(b1) + rp as i64,
        };
        (lo..hi).all(|i| self.letter_at(i) == other.letter_at(i))
    }

    pub fn classify_periodicity(&self) -> Periodicity {
        match self {
            WordRep::Finite(_) => Periodicity::Finite,
            WordRep::Window(w) => {
                if w.certified {
                    Periodicity::AperiodicCertified
                } else {
                    Periodicity::UnknownWindow
                }
            }
            WordRep::RightInf { prefix, period } => {
                let root = primitive_root_len(period);
                let pure = (0..prefix.len() as i64).all(|i| {
                    self.letter_at(i) == self.letter_at(i + root as i64)
                });
                if pure {
                    Periodicity::Periodic
                } else {
                    Periodicity::AlmostPeriodic {
                        left: false,
                        right: true,
                    }
                }
            }
            WordRep::LeftInf { period, suffix } => {
                let root = primitive_root_len(period) as i64;
                let pure = (-(suffix.len() as i64)..0)
                    .all(|i| self.letter_at(i) == self.letter_at(i - root));
                if pure {
                    Periodicity::Periodic
                } else {
                    Periodicity::AlmostPeriodic {
                        left: true,
                        right: false,
                    }
                }
            }
            WordRep::BiInf { left, core, right } => {
                let pl = primitive_root_len(left);
                let pr = primitive_root_len(right);
                // Both tails are periodic, so a global period must equal
                // the common primitive period and only a bounded range needs
                // checking.
                let periodic = pl == pr
                    && (-(pl as i64)..core.len() as i64)
                        .all(|i| self.letter_at(i) == self.letter_at(i + pl as i64));
                if periodic {
                    Periodicity::Periodic
                } else {
                    Periodicity::AlmostPeriodic {
                        left: true,
                        right: true,
                    }
                }
            }
        }
    }
}

impl<L: Invertible> WordRep<L> {
    /// Letterwise inversion with order reversal. Positions map as
    /// `i ↦ -1 - i` for infinite words and `i ↦ n - 1 - i` for finite ones.
    pub fn invert(&self) -> WordRep<L> {
        match self {
            WordRep::Finite(w) => WordRep::Finite(invert_seq(w)),
            WordRep::Window(w) => WordRep::Window(Window {
                letters: invert_seq(&w.letters),
                certified: w.certified,
                origin: w.origin.clone(),
                kind: match w.kind {
                    WindowKind::RightInfinite => WindowKind::LeftInfinite,
                    WindowKind::LeftInfinite => WindowKind::RightInfinite,
                    WindowKind::BiInfinite => WindowKind::BiInfinite,
                },
            }),
            WordRep::RightInf { prefix, period } => WordRep::LeftInf {
                period: invert_seq(period),
                suffix: invert_seq(prefix),
            },
            WordRep::LeftInf { period, suffix } => WordRep::RightInf {
                prefix: invert_seq(suffix),
                period: invert_seq(period),
            },
            WordRep::BiInf { left, core, right } => {
                // Put the new core start at position 0 by moving the old
                // core into the new core verbatim.
                WordRep::BiInf {
                    left: invert_seq(right),
                    core: invert_seq(core),
                    right: invert_seq(left),
                }
            }
        }
    }
}

/// Start positions of `needle` in `hay`.
pub fn find_subword<L: Clone + Eq>(needle: &[L], hay: &WordRep<L>) -> Occurrences {
    let n = needle.len() as i64;
    let matches_at = |o: i64| (0..n).all(|k| hay.letter_at(o + k) == Some(&needle[k as usize]));
    let collect = |lo: i64, hi: i64| -> Vec<i64> { (lo..hi).filter(|&o| matches_at(o)).collect() };
    match hay {
        WordRep::Finite(w) => Occurrences {
            offsets: collect(0, w.len() as i64 - n + 1),
            left_period: None,
            right_period: None,
        },
        WordRep::Window(w) => Occurrences {
            offsets: collect(0, w.letters.len() as i64 - n + 1),
            left_period: None,
            right_period: None,
        },
        WordRep::RightInf { prefix, period } => {
            let p = period.len() as i64;
            Occurrences {
                offsets: collect(0, prefix.len() as i64 + p),
                left_period: None,
                right_period: Some(p as usize),
            }
        }
        WordRep::LeftInf { period, suffix } => {
            let p = period.len() as i64;
            let lo = -(suffix.len() as i64) - n - p + 1;
            Occurrences {
                offsets: collect(lo, -n + 1),
                left_period: Some(p as usize),
                right_period: None,
            }
        }
        WordRep::BiInf { left, core, right } => {
            if hay.classify_periodicity() == Periodicity::Periodic {
                let p = primitive_root_len(left);
                return Occurrences {
                    offsets: collect(0, p as i64),
                    left_period: Some(p),
                    right_period: Some(p),
                };
            }
            let (pl, pr) = (left.len() as i64, right.len() as i64);
            Occurrences {
                offsets: collect(-n - pl + 1, core.len() as i64 + pr),
                left_period: Some(pl as usize),
                right_period: Some(pr as usize),
            }
        }
    }
}

/// Number of distinct length-`k` subwords, for `k = 1..=max_len`.
pub fn complexity_profile<L: Hash + Eq>(window: &[L], max_len: usize) -> Result<Vec<usize>> {
    if window.len() < 4 * max_len {
        return Err(Error::InvalidWord(format!(
            "window of length {} is shorter than 4 x {max_len}",
            window.len()
        )));
    }
    Ok((1..=max_len)
        .map(|k| window.windows(k).collect::<HashSet<_>>().len())
        .collect())
}

/// Longest common extension table for two sequences: `lce(i, j)` is the
/// length of the longest common prefix of `a[i..]` and `b[j..]`.
/// Computed row by row from the back, so memory stays linear.
pub fn for_each_lce<T: Eq>(a: &[T], b: &[T], mut visit: impl FnMut(usize, usize, usize)) {
    let m = b.len();
    let mut next = vec![0usize; m + 1];
    let mut cur = vec![0usize; m + 1];
    for i in (0..=a.len()).rev() {
        for j in (0..=m).rev() {
            cur[j] = if i < a.len() && j < m && a[i] == b[j] {
                next[j + 1] + 1
            } else {
                0
            };
            visit(i, j, cur[j]);
        }
        std::mem::swap(&mut cur, &mut next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(s: &str) -> Vec<Letter> {
        parse_binary(s).unwrap()
    }

    #[test]
    fn invert_finite() {
        let w = WordRep::Finite(bin("011"));
        assert_eq!(w.invert(), WordRep::Finite(bin("001")));
        assert_eq!(w.invert().invert(), w);
    }

    #[test]
    fn invert_right_infinite() {
        let w = WordRep::RightInf {
            prefix: vec![],
            period: bin("01"),
        };
        let v = w.invert();
        assert!(matches!(v, WordRep::LeftInf { .. }));
        let fwd = w.unfold(0, 8).unwrap();
        let back = v.unfold(-8, 0).unwrap();
        assert_eq!(invert_seq(&fwd), back);
    }

    #[test]
    fn subword_search() {
        let occ = find_subword(&bin("01"), &WordRep::Finite(bin("0101")));
        assert_eq!(occ.offsets, vec![0, 2]);
        let alt = WordRep::RightInf {
            prefix: vec![],
            period: bin("01"),
        };
        assert!(find_subword(&bin("11"), &alt).is_empty());
        let bi = WordRep::BiInf {
            left: bin("01"),
            core: vec![],
            right: bin("01"),
        };
        let occ = find_subword(&bin("10"), &bi);
        assert_eq!(occ.offsets, vec![1]);
        assert_eq!(occ.right_period, Some(2));
    }

    #[test]
    fn periodicity_classes() {
        let ab = WordRep::BiInf {
            left: vec!['a', 'b'],
            core: vec![],
            right: vec!['a', 'b'],
        };
        assert_eq!(ab.classify_periodicity(), Periodicity::Periodic);
        let r = WordRep::RightInf {
            prefix: bin("0"),
            period: bin("01"),
        }
        .normalize()
        .unwrap();
        assert_eq!(
            r.classify_periodicity(),
            Periodicity::AlmostPeriodic {
                left: false,
                right: true
            }
        );
    }

    #[test]
    fn period_normalization() {
        let a = WordRep::BiInf {
            left: vec!['a', 'b', 'a', 'b'],
            core: vec![],
            right: vec!['a', 'b', 'a', 'b'],
        }
        .normalize()
        .unwrap();
        let b = WordRep::BiInf {
            left: vec!['a', 'b'],
            core: vec![],
            right: vec!['a', 'b'],
        };
        assert_eq!(a, b);
        assert!(a.same_word(&b));
    }

    #[test]
    fn absorbing_keeps_positions() {
        let w = WordRep::RightInf {
            prefix: vec!['x', 'b', 'a', 'b'],
            period: vec!['a', 'b'],
        };
        let n = w.clone().normalize().unwrap();
        assert_eq!(
            n,
            WordRep::RightInf {
                prefix: vec!['x'],
                period: vec!['b', 'a'],
            }
        );
        assert!(w.same_word(&n));
    }

    #[test]
    fn complexity_examples() {
        let periodic: Vec<char> = "01".repeat(20).chars().collect();
        assert_eq!(complexity_profile(&periodic, 5).unwrap(), vec![2; 5]);
        let constant = vec![0u8; 12];
        assert_eq!(complexity_profile(&constant, 3).unwrap(), vec![1; 3]);
        assert!(complexity_profile(&constant, 4).is_err());
    }

    #[test]
    fn lce_table() {
        let a = b"abab";
        let b = b"bab";
        let mut table = vec![vec![0; 4]; 5];
        for_each_lce(a, b, |i, j, l| table[i][j] = l);
        assert_eq!(table[1][0], 3);
        assert_eq!(table[0][1], 2);
        assert_eq!(table[0][0], 0);
    }
}
