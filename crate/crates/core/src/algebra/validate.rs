use std::collections::HashMap;
use std::fmt;

use super::{Arrow, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// At most two arrows leave and at most two arrows enter each vertex.
    I,
    /// Each arrow has at most one relation-free successor and predecessor.
    II,
    /// Relation-free paths have bounded length.
    III,
    /// Gentle: at most one successor inside and one outside the relations.
    IIa,
    /// Gentle: at most one predecessor inside and one outside the relations.
    IIb,
    /// A relation shorter than two arrows.
    Rel,
}

impl Condition {
    pub fn code(self) -> &'static str {
        match self {
            Condition::I => "I",
            Condition::II => "II",
            Condition::III => "III",
            Condition::IIa => "IIa",
            Condition::IIb => "IIb",
            Condition::Rel => "REL",
        }
    }

    /// Conditions that decide whether the presentation is a string algebra
    /// at all; the remaining ones only affect gentleness.
    pub fn is_structural(self) -> bool {
        !matches!(self, Condition::IIa | Condition::IIb)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub condition: Condition,
    pub locus: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_string_algebra: bool,
    pub is_gentle: bool,
    /// Length of the longest relation-free path, when it exists.
    pub admissibility_bound: Option<usize>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, c: Condition) -> bool {
        self.violations.iter().any(|v| v.condition == c)
    }

    pub fn codes(&self) -> Vec<Condition> {
        let mut codes: Vec<_> = self.violations.iter().map(|v| v.condition).collect();
        codes.dedup();
        codes
    }
}

pub(crate) fn validate(p: &Presentation) -> ValidationReport {
    let mut violations = Vec::new();
    let mut push = |condition, locus: String| violations.push(Violation { condition, locus });

    for v in p.vertices() {
        let name = p.vertex_name(v);
        let out = p.outgoing(v).count();
        let inc = p.incoming(v).count();
        if out > 2 {
            push(Condition::I, format!("{out} arrows leave {name}"));
        }
        if inc > 2 {
            push(Condition::I, format!("{inc} arrows enter {name}"));
        }
    }

    for r in p.relations() {
        if r.len() < 2 {
            push(Condition::Rel, format!("relation `{}` has length {}", p.path_text(r), r.len()));
        }
    }

    for a in p.arrows() {
        let name = p.arrow_name(a);
        let (free_after, bound_after): (Vec<Arrow>, Vec<Arrow>) = p
            .outgoing(p.target(a))
            .partition(|&g| !p.is_relation(&[a, g]));
        let (free_before, bound_before): (Vec<Arrow>, Vec<Arrow>) = p
            .incoming(p.source(a))
            .partition(|&g| !p.is_relation(&[g, a]));
        let names = |xs: &[Arrow]| p.path_text(xs);
        if free_after.len() > 1 {
            let locus = format!("{name} is followed freely by {}", names(&free_after));
            push(Condition::II, locus.clone());
            push(Condition::IIa, locus);
        }
        if bound_after.len() > 1 {
            push(
                Condition::IIa,
                format!("{name} is followed in relations by {}", names(&bound_after)),
            );
        }
        if free_before.len() > 1 {
            let locus = format!("{name} is preceded freely by {}", names(&free_before));
            push(Condition::II, locus.clone());
            push(Condition::IIb, locus);
        }
        if bound_before.len() > 1 {
            push(
                Condition::IIb,
                format!("{name} is preceded in relations by {}", names(&bound_before)),
            );
        }
    }

    let admissibility_bound = match longest_free_path(p) {
        Ok(m) => Some(m),
        Err(cycle) => {
            push(
                Condition::III,
                format!("relation-free path repeats: {}", p.path_text(&cycle)),
            );
            None
        }
    };

    violations.sort();
    violations.dedup();
    let is_string_algebra = violations.iter().all(|v| !v.condition.is_structural());
    let is_gentle = is_string_algebra
        && violations.is_empty()
        && p.relations().iter().all(|r| r.len() == 2);
    ValidationReport {
        is_string_algebra,
        is_gentle,
        admissibility_bound,
        violations,
    }
}

/// Longest path with no contiguous subpath in the relations, or a repeating
/// relation-free cycle of states when no bound exists.
///
/// Whether an extension stays relation-free depends only on the last
/// `max(1, L - 1)` arrows, `L` being the longest relation, so those suffixes
/// are the nodes of a finite graph; the bound exists iff it is acyclic.
fn longest_free_path(p: &Presentation) -> Result<usize, Vec<Arrow>> {
    let keep = p.max_relation_len().saturating_sub(1).max(1);
    let free_extension = |path: &[Arrow], a: Arrow| -> bool {
        let mut ext = path.to_vec();
        ext.push(a);
        (1..=ext.len()).all(|k| !p.is_relation(&ext[ext.len() - k..]))
    };

    #[derive(Clone, Copy)]
    enum Mark {
        Active,
        Done(usize),
    }
    let mut marks: HashMap<Vec<Arrow>, Mark> = HashMap::new();

    // Iterative DFS; each frame holds a node and the index of the next
    // outgoing arrow to try.
    fn successors(p: &Presentation, node: &[Arrow]) -> Vec<Arrow> {
        let last = *node.last().unwrap();
        p.outgoing(p.target(last)).collect()
    }

    let mut best = 0usize;
    for a in p.arrows() {
        if p.is_relation(&[a]) {
            continue;
        }
        let root = vec![a];
        let mut stack: Vec<(Vec<Arrow>, Vec<Arrow>, usize, usize)> = Vec::new();
        if let Some(Mark::Done(d)) = marks.get(&root) {
            best = best.max(*d);
            continue;
        }
        marks.insert(root.clone(), Mark::Active);
        let succ = successors(p, &root);
        stack.push((root, succ, 0, 0));
        while let Some(frame) = stack.last_mut() {
            let (node, succ, next, depth) = frame;
            if *next < succ.len() {
                let b = succ[*next];
                *next += 1;
                if !free_extension(node, b) {
                    continue;
                }
                let mut child = node.clone();
                child.push(b);
                if child.len() > keep {
                    child.remove(0);
                }
                match marks.get(&child) {
                    Some(Mark::Active) => {
                        let start = stack.iter().position(|f| f.0 == child).unwrap_or(0);
                        let cycle = stack[start..]
                            .iter()
                            .map(|f| *f.0.last().unwrap())
                            .chain(std::iter::once(b))
                            .collect();
                        return Err(cycle);
                    }
                    Some(Mark::Done(d)) => {
                        *depth = (*depth).max(*d);
                    }
                    None => {
                        marks.insert(child.clone(), Mark::Active);
                        let s = successors(p, &child);
                        stack.push((child, s, 0, 0));
                    }
                }
            } else {
                let (node, _, _, depth) = stack.pop().unwrap();
                let len = depth + 1;
                marks.insert(node, Mark::Done(len));
                if let Some(parent) = stack.last_mut() {
                    parent.3 = parent.3.max(len);
                } else {
                    best = best.max(len);
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn report(text: &str) -> ValidationReport {
        Presentation::parse(text).unwrap().validate()
    }

    #[test]
    fn lambda3_is_gentle() {
        let r = report(fixtures::LAMBDA3);
        assert!(r.is_string_algebra && r.is_gentle, "{r:?}");
        assert_eq!(r.admissibility_bound, Some(2));
    }

    #[test]
    fn gamma_is_string_not_gentle() {
        let r = report(fixtures::GAMMA);
        assert!(r.is_string_algebra, "{r:?}");
        assert!(!r.is_gentle);
    }

    #[test]
    fn counterexamples_carry_their_codes() {
        let r = report(fixtures::LAMBDA3_EXTRA_ARROW);
        assert!(!r.is_string_algebra && r.has(Condition::I));
        let r = report(fixtures::LAMBDA3_TWO_SUCCESSORS);
        assert!(!r.is_string_algebra && r.has(Condition::II) && r.has(Condition::IIa));
        let r = report(fixtures::FREE_LOOP);
        assert_eq!(r.codes(), vec![Condition::III]);
        assert_eq!(r.admissibility_bound, None);
    }

    #[test]
    fn nilpotent_loop_is_bounded() {
        let r = report("vertex v\narrow l v v\nrelation l l\n");
        assert!(r.is_string_algebra && r.is_gentle);
        assert_eq!(r.admissibility_bound, Some(1));
    }

    #[test]
    fn long_relation_bound() {
        let r = report("vertex v\narrow l v v\nrelation l l l\n");
        assert!(r.is_string_algebra && !r.is_gentle);
        assert_eq!(r.admissibility_bound, Some(2));
    }

    #[test]
    fn short_relation_flagged() {
        let r = report("vertex v\nvertex w\narrow a v w\nrelation a\n");
        assert!(r.has(Condition::Rel));
        assert!(!r.is_string_algebra);
    }

    #[test]
    fn acyclic_quiver_bound_is_longest_path() {
        let r = report("vertex a\nvertex b\nvertex c\narrow x a b\narrow y b c\n");
        assert_eq!(r.admissibility_bound, Some(2));
    }
}
