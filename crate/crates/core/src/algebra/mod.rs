//! Quivers with monomial relations: parsing, validation of the string
//! algebra axioms, and the sign maps used to glue strings together.
//!
//! Relations are stored in traversal order: the first arrow of a relation is
//! the first one walked along. A relation written as a composition of maps
//! (`a1 b2` meaning "first `b2`, then `a1`") has to be reversed before it is
//! written to a presentation file.

mod parse;
mod signs;
mod validate;

use std::collections::HashMap;
use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};

pub use signs::SignMaps;
pub use validate::{Condition, ValidationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn parse(token: &str) -> Option<Sign> {
        match token {
            "+1" | "1" | "+" => Some(Sign::Plus),
            "-1" | "-" => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowInfo {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

/// A finite quiver with a set of monomial relations and, optionally,
/// declared sign maps.
///
/// Always normalized: vertices and arrows are sorted by name, relations are
/// deduplicated, sorted, and no relation contains another as a contiguous
/// subpath.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    vertices: Vec<String>,
    arrows: Vec<ArrowInfo>,
    relations: Vec<Vec<Arrow>>,
    signs: Option<Vec<(Sign, Sign)>>,
    vertex_index: HashMap<String, Vertex>,
    arrow_index: HashMap<String, Arrow>,
}

/// Name-level description of a presentation, before normalization.
#[derive(Clone, Debug, Default)]
pub struct PresentationBuilder {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<Vec<String>>,
    pub signs: Vec<(String, Sign, Sign)>,
}

impl PresentationBuilder {
    pub fn vertex(mut self, name: &str) -> Self {
        self.vertices.push(name.to_string());
        self
    }

    pub fn arrow(mut self, name: &str, source: &str, target: &str) -> Self {
        self.arrows
            .push((name.to_string(), source.to_string(), target.to_string()));
        self
    }

    pub fn relation(mut self, path: &[&str]) -> Self {
        self.relations
            .push(path.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn sign(mut self, arrow: &str, sigma: Sign, eps: Sign) -> Self {
        self.signs.push((arrow.to_string(), sigma, eps));
        self
    }

    pub fn build(self) -> Result<Presentation> {
        Presentation::from_names(self, None)
    }
}

impl Presentation {
    pub fn builder() -> PresentationBuilder {
        PresentationBuilder::default()
    }

    /// Parses the line-oriented presentation format.
    pub fn parse(text: &str) -> Result<Presentation> {
        parse::parse_presentation(text)
    }

    /// `lines` carries source line numbers for error messages when the
    /// builder came from a file: (vertex lines, arrow lines, relation lines, sign lines).
    pub(crate) fn from_names(b: PresentationBuilder, lines: Option<&parse::Lines>) -> Result<Self> {
        let line_of = |kind: usize, i: usize| -> usize {
            lines
                .map(|l| match kind {
                    0 => l.vertices[i],
                    1 => l.arrows[i],
                    2 => l.relations[i],
                    _ => l.signs[i],
                })
                .unwrap_or(0)
        };

        let mut vertex_order: Vec<usize> = (0..b.vertices.len()).collect();
        vertex_order.sort_by(|&x, &y| b.vertices[x].cmp(&b.vertices[y]));
        let mut vertex_index = HashMap::new();
        let mut vertices = Vec::with_capacity(b.vertices.len());
        for &i in &vertex_order {
            let name = &b.vertices[i];
            if vertex_index
                .insert(name.clone(), Vertex(vertices.len()))
                .is_some()
            {
                return Err(Error::DuplicateId {
                    line: line_of(0, i),
                    name: name.clone(),
                });
            }
            vertices.push(name.clone());
        }

        let mut arrow_order: Vec<usize> = (0..b.arrows.len()).collect();
        arrow_order.sort_by(|&x, &y| b.arrows[x].0.cmp(&b.arrows[y].0));
        let mut arrow_index = HashMap::new();
        let mut arrows = Vec::with_capacity(b.arrows.len());
        for &i in &arrow_order {
            let (name, src, dst) = &b.arrows[i];
            if vertex_index.contains_key(name) || arrow_index.contains_key(name) {
                return Err(Error::DuplicateId {
                    line: line_of(1, i),
                    name: name.clone(),
                });
            }
            let lookup = |v: &String| {
                vertex_index.get(v).copied().ok_or_else(|| Error::UnknownVertex {
                    line: line_of(1, i),
                    name: v.clone(),
                })
            };
            let source = lookup(src)?;
            let target = lookup(dst)?;
            arrow_index.insert(name.clone(), Arrow(arrows.len()));
            arrows.push(ArrowInfo {
                name: name.clone(),
                source,
                target,
            });
        }

        let mut relations = Vec::with_capacity(b.relations.len());
        for (i, rel) in b.relations.iter().enumerate() {
            if rel.is_empty() {
                return Err(Error::Syntax {
                    line: line_of(2, i),
                    message: "empty relation".into(),
                });
            }
            let mut path = Vec::with_capacity(rel.len());
            for name in rel {
                let a = arrow_index.get(name).copied().ok_or_else(|| Error::UnknownArrow {
                    line: line_of(2, i),
                    name: name.clone(),
                })?;
                path.push(a);
            }
            if path
                .windows(2)
                .any(|w| arrows[w[0].0].target != arrows[w[1].0].source)
            {
                return Err(Error::NonComposable {
                    line: line_of(2, i),
                    relation: rel.join(" "),
                });
            }
            relations.push(path);
        }
        let relations = minimal_relations(relations);

        let signs = if b.signs.is_empty() {
            None
        } else {
            let mut table: Vec<Option<(Sign, Sign)>> = vec![None; arrows.len()];
            for (i, (name, s, e)) in b.signs.iter().enumerate() {
                let a = arrow_index.get(name).copied().ok_or_else(|| Error::UnknownArrow {
                    line: line_of(3, i),
                    name: name.clone(),
                })?;
                if table[a.0].replace((*s, *e)).is_some() {
                    return Err(Error::DuplicateId {
                        line: line_of(3, i),
                        name: name.clone(),
                    });
                }
            }
            if let Some(missing) = table.iter().position(Option::is_none) {
                return Err(Error::Syntax {
                    line: 0,
                    message: format!(
                        "signs are all-or-none but arrow `{}` has none",
                        arrows[missing].name
                    ),
                });
            }
            Some(table.into_iter().map(Option::unwrap).collect())
        };

        Ok(Presentation {
            vertices,
            arrows,
            relations,
            signs,
            vertex_index,
            arrow_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.vertices.len()).map(Vertex)
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> {
        (0..self.arrows.len()).map(Arrow)
    }

    pub fn vertex_name(&self, v: Vertex) -> &str {
        &self.vertices[v.0]
    }

    pub fn arrow_name(&self, a: Arrow) -> &str {
        &self.arrows[a.0].name
    }

    pub fn arrow_info(&self, a: Arrow) -> &ArrowInfo {
        &self.arrows[a.0]
    }

    pub fn source(&self, a: Arrow) -> Vertex {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: Arrow) -> Vertex {
        self.arrows[a.0].target
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<Vertex> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<Arrow> {
        self.arrow_index.get(name).copied()
    }

    pub fn relations(&self) -> &[Vec<Arrow>] {
        &self.relations
    }

    pub fn declared_signs(&self) -> Option<&[(Sign, Sign)]> {
        self.signs.as_deref()
    }

    pub fn max_relation_len(&self) -> usize {
        self.relations.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_relation(&self, path: &[Arrow]) -> bool {
        self.relations.binary_search_by(|r| r.as_slice().cmp(path)).is_ok()
    }

    pub fn outgoing(&self, v: Vertex) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows().filter(move |&a| self.source(a) == v)
    }

    pub fn incoming(&self, v: Vertex) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows().filter(move |&a| self.target(a) == v)
    }

    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }

    pub fn solve_signs(&self) -> Result<SignMaps> {
        signs::solve(self)
    }

    /// Same quiver and relations with the given sign maps attached.
    pub fn with_signs(&self, signs: &SignMaps) -> Presentation {
        let mut p = self.clone();
        p.signs = Some(self.arrows().map(|a| (signs.sigma(a), signs.eps(a))).collect());
        p
    }

    /// Same quiver and relations with no declared signs.
    pub fn without_signs(&self) -> Presentation {
        let mut p = self.clone();
        p.signs = None;
        p
    }

    pub fn path_text(&self, path: &[Arrow]) -> String {
        path.iter()
            .map(|&a| self.arrow_name(a))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A presentation that passed validation, together with its sign maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    presentation: Presentation,
    signs: SignMaps,
    report: ValidationReport,
}

impl Algebra {
    /// Validates `p` and solves (or verifies) its sign maps.
    pub fn new(p: Presentation) -> Result<Algebra> {
        let report = p.validate();
        if !report.is_string_algebra {
            let detail = report
                .violations
                .iter()
                .filter(|v| v.condition.is_structural())
                .map(|v| format!("{}: {}", v.condition, v.locus))
                .collect::<Vec<_>>()
                .join("; ");
            return Err(Error::NotStringAlgebra(detail));
        }
        let signs = p.solve_signs()?;
        Ok(Algebra {
            presentation: p,
            signs,
            report,
        })
    }

    pub fn parse(text: &str) -> Result<Algebra> {
        Algebra::new(Presentation::parse(text)?)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn signs(&self) -> &SignMaps {
        &self.signs
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }
}

impl std::ops::Deref for Algebra {
    type Target = Presentation;

    fn deref(&self) -> &Presentation {
        &self.presentation
    }
}

/// Drops duplicates and every relation that has another relation as a
/// contiguous subpath; the generated ideal is unchanged.
fn minimal_relations(mut relations: Vec<Vec<Arrow>>) -> Vec<Vec<Arrow>> {
    relations.sort();
    relations.dedup();
    let keep: Vec<bool> = relations
        .iter()
        .map(|r| {
            !relations
                .iter()
                .any(|s| s.len() < r.len() && r.windows(s.len()).any(|w| w == s.as_slice()))
        })
        .collect();
    relations
        .into_iter()
        .zip(keep)
        .filter_map(|(r, k)| k.then_some(r))
        .collect()
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for a in &self.arrows {
            writeln!(
                f,
                "arrow {} {} {}",
                a.name, self.vertices[a.source.0], self.vertices[a.target.0]
            )?;
        }
        for r in &self.relations {
            writeln!(f, "relation {}", self.path_text(r))?;
        }
        if let Some(signs) = &self.signs {
            for (a, (s, e)) in self.arrows.iter().zip(signs) {
                writeln!(f, "sign {} {} {}", a.name, s, e)?;
            }
        }
        Ok(())
    }
}
