//! Strings and bands over a string algebra, and their factor and image
//! substrings.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Algebra, Arrow, Sign, Vertex};
use crate::error::{Error, Result};
use crate::words::{invert_seq, is_primitive, Invertible, WordRep};

/// Longest strings [`enumerate_strings`] will produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// An arrow or a formal inverse of an arrow. Ordered by arrow, direct first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub arrow: Arrow,
    pub inverse: bool,
}

impl Syllable {
    pub fn direct(arrow: Arrow) -> Syllable {
        Syllable {
            arrow,
            inverse: false,
        }
    }

    pub fn inverted(arrow: Arrow) -> Syllable {
        Syllable {
            arrow,
            inverse: true,
        }
    }

    pub fn source(self, alg: &Algebra) -> Vertex {
        if self.inverse {
            alg.target(self.arrow)
        } else {
            alg.source(self.arrow)
        }
    }

    pub fn target(self, alg: &Algebra) -> Vertex {
        if self.inverse {
            alg.source(self.arrow)
        } else {
            alg.target(self.arrow)
        }
    }

    pub fn sigma(self, alg: &Algebra) -> Sign {
        if self.inverse {
            alg.signs().eps(self.arrow)
        } else {
            alg.signs().sigma(self.arrow)
        }
    }

    pub fn eps(self, alg: &Algebra) -> Sign {
        if self.inverse {
            alg.signs().sigma(self.arrow)
        } else {
            alg.signs().eps(self.arrow)
        }
    }

    pub fn text(self, alg: &Algebra) -> String {
        let name = alg.arrow_name(self.arrow);
        if self.inverse {
            format!("{name}'")
        } else {
            name.to_string()
        }
    }
}

impl Invertible for Syllable {
    fn inv(&self) -> Syllable {
        Syllable {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }
}

/// A finite string: either a zero-length string `1_(v,i)` or a nonempty
/// sequence of syllables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Str {
    Zero { vertex: Vertex, side: Sign },
    Path(Vec<Syllable>),
}

impl Str {
    pub fn len(&self) -> usize {
        match self {
            Str::Zero { .. } => 0,
            Str::Path(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn syllables(&self) -> &[Syllable] {
        match self {
            Str::Zero { .. } => &[],
            Str::Path(s) => s,
        }
    }

    pub fn source(&self, alg: &Algebra) -> Vertex {
        match self {
            Str::Zero { vertex, .. } => *vertex,
            Str::Path(s) => s[0].source(alg),
        }
    }

    pub fn target(&self, alg: &Algebra) -> Vertex {
        match self {
            Str::Zero { vertex, .. } => *vertex,
            Str::Path(s) => s[s.len() - 1].target(alg),
        }
    }

    pub fn sigma(&self, alg: &Algebra) -> Sign {
        match self {
            Str::Zero { side, .. } => -*side,
            Str::Path(s) => s[0].sigma(alg),
        }
    }

    pub fn eps(&self, alg: &Algebra) -> Sign {
        match self {
            Str::Zero { side, .. } => *side,
            Str::Path(s) => s[s.len() - 1].eps(alg),
        }
    }

    /// `1_(v,i)⁻¹ = 1_(v,-i)`; positive-length strings reverse and flip.
    pub fn inverse(&self) -> Str {
        match self {
            Str::Zero { vertex, side } => Str::Zero {
                vertex: *vertex,
                side: -*side,
            },
            Str::Path(s) => Str::Path(invert_seq(s)),
        }
    }
}

/// The clause of the string definition that a syllable sequence breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StringClause {
    Empty,
    Composition,
    Backtrack,
    Relation,
}

impl fmt::Display for StringClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StringClause::Empty => "empty syllable sequence",
            StringClause::Composition => "composition mismatch",
            StringClause::Backtrack => "backtrack",
            StringClause::Relation => "relation violated",
        })
    }
}

/// The first failing clause, reported at the 0-based index of the syllable
/// that completes the violation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StringViolation {
    pub clause: StringClause,
    pub position: usize,
}

/// How a substring occurrence sits inside its host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// The substring is the whole host.
    Equal,
    /// Flush with the left end of the host.
    Left,
    /// Flush with the right end of the host.
    Right,
    /// Bounded by a syllable on both sides.
    Middle,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubstringOcc {
    pub sub: Str,
    /// Occupies syllables `start..end` of the host; `start == end` is a gap.
    pub start: usize,
    pub end: usize,
    pub clause: Clause,
}

/// A band: a cyclic primitive string whose powers are all strings, which
/// starts with an inverse syllable and ends with a direct one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Band {
    syllables: Vec<Syllable>,
}

impl Band {
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn as_str(&self) -> Str {
        Str::Path(self.syllables.clone())
    }

    /// `∞b∞` with `b` starting at position 0.
    pub fn biinfinite(&self) -> WordRep<Syllable> {
        WordRep::BiInf {
            left: self.syllables.clone(),
            core: Vec::new(),
            right: self.syllables.clone(),
        }
    }

    /// Lexicographically least rotation of `b` or `b⁻¹` that still starts
    /// with an inverse and ends with a direct syllable.
    pub fn canonical(&self) -> Band {
        let n = self.syllables.len();
        let inv = invert_seq(&self.syllables);
        let mut best: Option<Vec<Syllable>> = None;
        for base in [&self.syllables, &inv] {
            for r in 0..n {
                let mut rot = base.clone();
                rot.rotate_left(r);
                if rot[0].inverse && !rot[n - 1].inverse && best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        Band {
            syllables: best.expect("a band has at least one admissible rotation"),
        }
    }

    /// All rotations of `b` and `b⁻¹` that are bands themselves.
    pub fn equivalent_forms(&self) -> Vec<Band> {
        let n = self.syllables.len();
        let inv = invert_seq(&self.syllables);
        let mut out = Vec::new();
        for base in [&self.syllables, &inv] {
            for r in 0..n {
                let mut rot = base.clone();
                rot.rotate_left(r);
                if rot[0].inverse && !rot[n - 1].inverse {
                    out.push(Band { syllables: rot });
                }
            }
        }
        out
    }
}

impl Algebra {
    pub fn zero_string(&self, vertex: Vertex, side: Sign) -> Str {
        Str::Zero { vertex, side }
    }

    /// First violated clause of the string definition, if any.
    pub fn check_syllables(&self, s: &[Syllable]) -> Option<StringViolation> {
        if s.is_empty() {
            return Some(StringViolation {
                clause: StringClause::Empty,
                position: 0,
            });
        }
        for j in 0..s.len() {
            if let Some(clause) = self.tail_violation(&s[..=j]) {
                return Some(StringViolation { clause, position: j });
            }
        }
        None
    }

    /// Checks only the conditions involving the last syllable, assuming the
    /// rest is already a string.
    fn tail_violation(&self, s: &[Syllable]) -> Option<StringClause> {
        let j = s.len() - 1;
        if j > 0 {
            if s[j - 1].target(self) != s[j].source(self) {
                return Some(StringClause::Composition);
            }
            if s[j] == s[j - 1].inv() {
                return Some(StringClause::Backtrack);
            }
        }
        for r in self.relations() {
            let k = r.len();
            if k > s.len() {
                continue;
            }
            let w = &s[s.len() - k..];
            let direct = w.iter().zip(r).all(|(x, &a)| !x.inverse && x.arrow == a);
            let inverse = w
                .iter()
                .zip(r.iter().rev())
                .all(|(x, &a)| x.inverse && x.arrow == a);
            if direct || inverse {
                return Some(StringClause::Relation);
            }
        }
        None
    }

    /// True when appending `next` to the string `s` keeps it a string.
    pub fn extends(&self, s: &[Syllable], next: Syllable) -> bool {
        let mut v = s.to_vec();
        v.push(next);
        self.tail_violation(&v).is_none()
    }

    pub fn make_string(&self, syllables: Vec<Syllable>) -> Result<Str> {
        match self.check_syllables(&syllables) {
            None => Ok(Str::Path(syllables)),
            Some(v) => Err(Error::InvalidString(format!(
                "{} at position {}",
                v.clause, v.position
            ))),
        }
    }

    pub fn concat(&self, x: &Str, y: &Str) -> Result<Str> {
        let undefined = |why: String| Err(Error::UndefinedConcat(why));
        if x.target(self) != y.source(self) {
            return undefined(format!(
                "target {} differs from source {}",
                self.vertex_name(x.target(self)),
                self.vertex_name(y.source(self))
            ));
        }
        if y.sigma(self) != -x.eps(self) {
            return undefined("sign condition fails".into());
        }
        match (x, y) {
            (Str::Zero { .. }, _) => Ok(y.clone()),
            (_, Str::Zero { .. }) => Ok(x.clone()),
            (Str::Path(a), Str::Path(b)) => {
                let joined: Vec<_> = a.iter().chain(b).copied().collect();
                self.make_string(joined)
                    .or_else(|e| undefined(e.to_string()))
            }
        }
    }

    /// Zero-length string sitting at gap `i` of `x` (gap `i` precedes
    /// syllable `i`).
    pub fn gap_label(&self, x: &Str, i: usize) -> Str {
        match x {
            Str::Zero { .. } => x.clone(),
            Str::Path(s) => {
                if i == 0 {
                    Str::Zero {
                        vertex: x.source(self),
                        side: -x.sigma(self),
                    }
                } else {
                    Str::Zero {
                        vertex: s[i - 1].target(self),
                        side: s[i - 1].eps(self),
                    }
                }
            }
        }
    }

    /// Substring occupying syllables `start..end`.
    pub fn substring(&self, x: &Str, start: usize, end: usize) -> Str {
        if start == end {
            self.gap_label(x, start)
        } else {
            Str::Path(x.syllables()[start..end].to_vec())
        }
    }

    fn boundary_substrings(&self, x: &Str, factor: bool) -> Vec<SubstringOcc> {
        let s = x.syllables();
        let n = s.len();
        let mut out = Vec::new();
        for i in 0..=n {
            // Syllable before the span must be inverse for factors, direct for images.
            if i > 0 && s[i - 1].inverse != factor {
                continue;
            }
            for j in i..=n {
                if j < n && s[j].inverse == factor {
                    continue;
                }
                let clause = match (i == 0, j == n) {
                    (true, true) => Clause::Equal,
                    (true, false) => Clause::Left,
                    (false, true) => Clause::Right,
                    (false, false) => Clause::Middle,
                };
                out.push(SubstringOcc {
                    sub: self.substring(x, i, j),
                    start: i,
                    end: j,
                    clause,
                });
            }
        }
        out
    }

    /// Every occurrence `u = x`, `uα ⊑_l x`, `β⁻¹u ⊑_r x` or `β⁻¹uα ⊑ x`.
    pub fn factor_substrings(&self, x: &Str) -> Vec<SubstringOcc> {
        self.boundary_substrings(x, true)
    }

    /// Every occurrence `u = x`, `uβ⁻¹ ⊑_l x`, `αu ⊑_r x` or `αuβ⁻¹ ⊑ x`.
    pub fn image_substrings(&self, x: &Str) -> Vec<SubstringOcc> {
        self.boundary_substrings(x, false)
    }

    /// Checks the band clauses, returning every failing one.
    pub fn is_band(&self, x: &Str) -> std::result::Result<Band, Vec<String>> {
        let s = x.syllables();
        if s.is_empty() {
            return Err(vec!["zero-length string".into()]);
        }
        let mut reasons = Vec::new();
        if x.source(self) != x.target(self) {
            reasons.push("not cyclic".into());
        }
        if !is_primitive(s) {
            reasons.push("not primitive".into());
        }
        if !s[0].inverse {
            reasons.push("first syllable is direct".into());
        }
        if s[s.len() - 1].inverse {
            reasons.push("last syllable is inverse".into());
        }
        let square: Vec<_> = s.iter().chain(s).copied().collect();
        if self.check_syllables(&square).is_some() {
            reasons.push("square is not a string".into());
        }
        if reasons.is_empty() {
            Ok(Band {
                syllables: s.to_vec(),
            })
        } else {
            Err(reasons)
        }
    }

    pub fn band(&self, x: &Str) -> Result<Band> {
        self.is_band(x)
            .map_err(|r| Error::InvalidString(format!("not a band: {}", r.join(", "))))
    }

    /// Validates an infinite string by checking windows long enough to hold
    /// every relation across every seam.
    pub fn check_infinite(&self, w: &WordRep<Syllable>) -> Result<()> {
        let reach = self.max_relation_len().max(2) as i64;
        let (lo, hi) = match w {
            WordRep::Finite(s) => (0, s.len() as i64),
            WordRep::Window(win) => (0, win.letters.len() as i64),
            WordRep::RightInf { prefix, period } => {
                (0, (prefix.len() + 2 * period.len()) as i64 + reach)
            }
            WordRep::LeftInf { period, suffix } => {
                (-((suffix.len() + 2 * period.len()) as i64) - reach, 0)
            }
            WordRep::BiInf { left, core, right } => (
                -(2 * left.len() as i64) - reach,
                (core.len() + 2 * right.len()) as i64 + reach,
            ),
        };
        let s = w
            .unfold(lo, hi)
            .ok_or_else(|| Error::InvalidWord("window outside the word".into()))?;
        if s.is_empty() {
            return Err(Error::InvalidString("empty infinite string".into()));
        }
        match self.check_syllables(&s) {
            None => Ok(()),
            Some(v) => Err(Error::InvalidString(format!("{} in unfolded window", v.clause))),
        }
    }

    pub fn parse_syllable(&self, token: &str) -> Result<Syllable> {
        let (name, inverse) = match token.strip_suffix('\'') {
            Some(n) => (n, true),
            None => (token, false),
        };
        let arrow = self
            .arrow_by_name(name)
            .ok_or_else(|| Error::InvalidString(format!("unknown arrow `{name}`")))?;
        Ok(Syllable { arrow, inverse })
    }

    pub fn parse_syllables(&self, text: &str) -> Result<Vec<Syllable>> {
        text.split_whitespace()
            .map(|t| self.parse_syllable(t))
            .collect()
    }

    /// Parses `b1 a1' a2' b2` or a zero-length literal `1(v2,+1)`.
    pub fn parse_str(&self, text: &str) -> Result<Str> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix("1(").and_then(|r| r.strip_suffix(')')) {
            let (v, s) = inner
                .split_once(',')
                .ok_or_else(|| Error::InvalidString(format!("bad literal `{t}`")))?;
            let vertex = self
                .vertex_by_name(v.trim())
                .ok_or_else(|| Error::InvalidString(format!("unknown vertex `{}`", v.trim())))?;
            let side = Sign::parse(s.trim())
                .ok_or_else(|| Error::InvalidString(format!("bad side `{}`", s.trim())))?;
            return Ok(Str::Zero { vertex, side });
        }
        self.make_string(self.parse_syllables(t)?)
    }

    pub fn syllables_text(&self, s: &[Syllable], sep: &str) -> String {
        s.iter()
            .map(|x| x.text(self))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn str_text(&self, x: &Str) -> String {
        match x {
            Str::Zero { vertex, side } => format!("1({},{})", self.vertex_name(*vertex), side),
            Str::Path(s) => self.syllables_text(s, " "),
        }
    }

    /// Whitespace-free rendering used for automaton state names.
    pub fn str_id(&self, x: &Str) -> String {
        match x {
            Str::Zero { .. } => self.str_text(x),
            Str::Path(s) => self.syllables_text(s, "."),
        }
    }

    pub fn all_syllables(&self) -> Vec<Syllable> {
        self.arrows()
            .flat_map(|a| [Syllable::direct(a), Syllable::inverted(a)])
            .collect()
    }

    pub fn zero_strings(&self) -> Vec<Str> {
        self.vertices()
            .flat_map(|v| {
                [Sign::Minus, Sign::Plus].map(|side| Str::Zero { vertex: v, side })
            })
            .collect()
    }
}

/// All strings of length at most `max_len`, zero-length ones first, then by
/// length and syllables.
pub fn enumerate_strings(alg: &Algebra, max_len: usize) -> Result<Vec<Str>> {
    enumerate_strings_capped(alg, max_len, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_strings_capped(alg: &Algebra, max_len: usize, cap: usize) -> Result<Vec<Str>> {
    if max_len > cap {
        return Err(Error::CapExceeded {
            what: format!("string length {max_len}"),
            cap,
        });
    }
    let mut out = alg.zero_strings();
    let syllables = alg.all_syllables();
    let mut layer: Vec<Vec<Syllable>> = if max_len >= 1 {
        syllables.iter().map(|&s| vec![s]).collect()
    } else {
        Vec::new()
    };
    for _ in 1..=max_len {
        out.extend(layer.iter().cloned().map(Str::Path));
        let mut next = Vec::new();
        for s in &layer {
            for &b in &syllables {
                if alg.extends(s, b) {
                    let mut t = s.clone();
                    t.push(b);
                    next.push(t);
                }
            }
        }
        layer = next;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Bands of length at most `max_len`, one canonical form per rotation and
/// inversion class.
pub fn enumerate_bands(alg: &Algebra, max_len: usize) -> Result<Vec<Band>> {
    let strings = enumerate_strings(alg, max_len)?;
    let bands: BTreeSet<Band> = strings
        .iter()
        .filter(|x| !x.is_empty())
        .filter_map(|x| alg.is_band(x).ok())
        .map(|b| b.canonical())
        .collect();
    let mut out: Vec<Band> = bands.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn lambda3() -> Algebra {
        Algebra::parse(fixtures::LAMBDA3).unwrap()
    }

    fn gamma() -> Algebra {
        Algebra::parse(fixtures::GAMMA).unwrap()
    }

    #[test]
    fn make_string_examples() {
        let alg = lambda3();
        let a = alg.parse_str("b1 a1'").unwrap();
        let v2 = alg.vertex_by_name("v2").unwrap();
        assert_eq!((a.source(&alg), a.target(&alg)), (v2, v2));

        let s = alg.parse_syllables("b2 a1").unwrap();
        assert_eq!(
            alg.check_syllables(&s),
            Some(StringViolation {
                clause: StringClause::Relation,
                position: 1
            })
        );
        let s = alg.parse_syllables("a1 a1'").unwrap();
        assert_eq!(alg.check_syllables(&s).unwrap().clause, StringClause::Backtrack);

        let g = gamma();
        let s = g.parse_syllables("a3 b c1").unwrap();
        assert_eq!(g.check_syllables(&s).unwrap().clause, StringClause::Relation);
        let s = g.parse_syllables("c1' b' a3'").unwrap();
        assert_eq!(g.check_syllables(&s).unwrap().clause, StringClause::Relation);
    }

    #[test]
    fn concat_examples() {
        let alg = lambda3();
        let a = alg.parse_str("b1 a1'").unwrap();
        let b = alg.parse_str("a2' b2").unwrap();
        let ab = alg.concat(&a, &b).unwrap();
        assert_eq!(alg.str_text(&ab), "b1 a1' a2' b2");

        let right_unit = Str::Zero {
            vertex: a.target(&alg),
            side: a.eps(&alg),
        };
        assert_eq!(alg.concat(&a, &right_unit).unwrap(), a);
        let wrong_left = Str::Zero {
            vertex: a.source(&alg),
            side: a.sigma(&alg),
        };
        assert!(alg.concat(&wrong_left, &a).is_err());
        let left_unit = Str::Zero {
            vertex: a.source(&alg),
            side: -a.sigma(&alg),
        };
        assert_eq!(alg.concat(&left_unit, &a).unwrap(), a);
    }

    #[test]
    fn factor_substrings_of_a() {
        let alg = lambda3();
        let a = alg.parse_str("b1 a1'").unwrap();
        let subs: BTreeSet<Str> = alg.factor_substrings(&a).into_iter().map(|o| o.sub).collect();
        let v2 = alg.vertex_by_name("v2").unwrap();
        let b1 = alg.parse_syllable("b1").unwrap();
        let a1i = alg.parse_syllable("a1'").unwrap();
        let expected: BTreeSet<Str> = [
            a.clone(),
            Str::Zero {
                vertex: v2,
                side: -b1.sigma(&alg),
            },
            Str::Zero {
                vertex: v2,
                side: a1i.eps(&alg),
            },
        ]
        .into_iter()
        .collect();
        assert_eq!(subs, expected);
    }

    #[test]
    fn factor_substrings_of_ab_include_right_part() {
        let alg = lambda3();
        let ab = alg.parse_str("b1 a1' a2' b2").unwrap();
        let target = alg.parse_str("a2' b2").unwrap();
        assert!(alg
            .factor_substrings(&ab)
            .iter()
            .any(|o| o.sub == target && o.clause == Clause::Right));
    }

    #[test]
    fn zero_string_substrings() {
        let alg = lambda3();
        let z = alg.zero_strings()[0].clone();
        let f = alg.factor_substrings(&z);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].sub, z);
        assert_eq!(f[0].clause, Clause::Equal);
    }

    #[test]
    fn band_examples() {
        let alg = lambda3();
        assert!(alg.is_band(&alg.parse_str("a2' b2").unwrap()).is_ok());
        let r = alg.is_band(&alg.parse_str("b1 a1'").unwrap()).unwrap_err();
        assert!(r.iter().any(|s| s.contains("first")));
        let r = alg.is_band(&alg.parse_str("a1' b1 a1' b1").unwrap()).unwrap_err();
        assert!(r.iter().any(|s| s.contains("primitive")));
    }

    #[test]
    fn enumeration_counts() {
        let alg = lambda3();
        assert_eq!(enumerate_strings(&alg, 0).unwrap().len(), 6);
        assert_eq!(enumerate_strings(&alg, 1).unwrap().len(), 14);
        let bands = enumerate_bands(&alg, 2).unwrap();
        let texts: Vec<String> = bands.iter().map(|b| alg.str_text(&b.as_str())).collect();
        assert_eq!(texts, vec!["a1' b1", "a2' b2"]);
        assert!(enumerate_strings(&alg, DEFAULT_ENUMERATION_CAP + 1)
            .unwrap_err()
            .is_cap());
    }

    #[test]
    fn literal_roundtrip() {
        let alg = lambda3();
        for t in ["b1 a1' a2' b2", "1(v2,+1)", "1(v1,-1)"] {
            assert_eq!(alg.str_text(&alg.parse_str(t).unwrap()), t);
        }
    }
}
