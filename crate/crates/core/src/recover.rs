//! Recovering a quiver with relations from a binary automaton, and
//! presentation isomorphism.
//!
//! Vertices are the pairs `{v, v⁻¹}` of initial states. Each initial `v`
//! with a `0`-transition gives an arrow `[v] → [v′]` where
//! `v′ = e(t(v, 0))`. An arrow path is a string when consecutive arrows
//! are aligned (the next arrow starts at exactly the state `v′` the
//! previous one ended on) and the run of `0`s from the first state is
//! defined. Relations are the paths that are not strings while both
//! their maximal proper left and right subpaths are.

use std::collections::HashMap;

use crate::algebra::{Arrow, Presentation, Vertex};
use crate::error::{Error, Result};
use crate::mia::{Mia, StateId};
use crate::words::Letter;

/// Isomorphism search refuses presentations with more vertices.
pub const ISO_VERTEX_CAP: usize = 16;

#[derive(Clone, Debug)]
pub struct RecoveredPresentation {
    pub presentation: Presentation,
    /// For each vertex, its pair of initial states (smaller id first).
    pub vertex_states: Vec<(StateId, StateId)>,
    /// For each arrow, the states `(v, v′)` it was built from.
    pub arrow_states: Vec<(StateId, StateId)>,
}

pub fn recover_presentation(m: &Mia) -> Result<RecoveredPresentation> {
    if !m.is_binary() {
        return Err(Error::InvalidMia("recovery needs a binary automaton".into()));
    }
    let report = m.validate();
    if !report.is_valid() {
        let details: Vec<String> = report.violations.iter().map(|v| v.detail.clone()).collect();
        return Err(Error::InvalidMia(details.join("; ")));
    }

    let mut class_of: HashMap<StateId, usize> = HashMap::new();
    let mut classes = Vec::new();
    for v in m.initial_states() {
        if class_of.contains_key(&v) {
            continue;
        }
        let w = m.inverse(v).unwrap();
        class_of.insert(v, classes.len());
        class_of.insert(w, classes.len());
        classes.push((v.min(w), v.max(w)));
    }

    let mut arrows: Vec<(StateId, StateId)> = Vec::new();
    for v in m.initial_states() {
        if let Some(t) = m.t(v, Letter::ZERO) {
            arrows.push((v, m.e(t)));
        }
    }
    let source = |a: usize| class_of[&arrows[a].0];
    let target = |a: usize| class_of[&arrows[a].1];

    let is_string = |path: &[usize]| {
        path.windows(2).all(|w| arrows[w[1]].0 == arrows[w[0]].1)
            && m.run(arrows[path[0]].0, &vec![Letter::ZERO; path.len()]).is_some()
    };

    // Breadth-first over string paths; each extension that fails to be a
    // string while its right part still is one is a relation.
    let max_len = 2 * m.state_count() + 2;
    let mut relations: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    while !layer.is_empty() {
        if layer[0].len() > max_len {
            return Err(Error::CapExceeded {
                what: "relation-free path length".into(),
                cap: max_len,
            });
        }
        let mut next = Vec::new();
        for p in &layer {
            let end = target(*p.last().unwrap());
            for b in 0..arrows.len() {
                if source(b) != end {
                    continue;
                }
                let mut q = p.clone();
                q.push(b);
                if is_string(&q) {
                    next.push(q);
                } else if is_string(&q[1..]) {
                    relations.push(q);
                }
            }
        }
        layer = next;
    }

    let vname = |c: usize| format!("q{c}");
    let aname = |a: usize| format!("x{a}");
    let mut b = Presentation::builder();
    for c in 0..classes.len() {
        b = b.vertex(&vname(c));
    }
    for a in 0..arrows.len() {
        b = b.arrow(&aname(a), &vname(source(a)), &vname(target(a)));
    }
    for r in &relations {
        let names: Vec<String> = r.iter().map(|&a| aname(a)).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        b = b.relation(&refs);
    }
    let presentation = b.build()?;
    let vertex_states = presentation
        .vertices()
        .map(|v| {
            let c: usize = presentation.vertex_name(v)[1..].parse().unwrap();
            classes[c]
        })
        .collect();
    let arrow_states = presentation
        .arrows()
        .map(|a| {
            let i: usize = presentation.arrow_name(a)[1..].parse().unwrap();
            arrows[i]
        })
        .collect();
    Ok(RecoveredPresentation {
        presentation,
        vertex_states,
        arrow_states,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    /// `vertex_map[v]` in the second presentation for vertex `v` of the first.
    pub vertex_map: Vec<Vertex>,
    pub arrow_map: Vec<Arrow>,
}

impl Isomorphism {
    pub fn map_path(&self, path: &[Arrow]) -> Vec<Arrow> {
        path.iter().map(|a| self.arrow_map[a.0]).collect()
    }
}

struct Search<'a> {
    p: &'a Presentation,
    q: &'a Presentation,
    order: Vec<Arrow>,
    vmap: Vec<Option<Vertex>>,
    vused: Vec<bool>,
    amap: Vec<Option<Arrow>>,
    aused: Vec<bool>,
    qrel: std::collections::HashSet<Vec<Arrow>>,
}

fn degree_profile(p: &Presentation, v: Vertex) -> (usize, usize, usize) {
    let loops = p.outgoing(v).filter(|&a| p.target(a) == v).count();
    (p.outgoing(v).count(), p.incoming(v).count(), loops)
}

impl Search<'_> {
    fn bind(&mut self, v: Vertex, w: Vertex) -> Option<bool> {
        match self.vmap[v.0] {
            Some(x) => (x == w).then_some(false),
            None => {
                if self.vused[w.0] || degree_profile(self.p, v) != degree_profile(self.q, w) {
                    return None;
                }
                self.vmap[v.0] = Some(w);
                self.vused[w.0] = true;
                Some(true)
            }
        }
    }

    fn unbind(&mut self, v: Vertex, fresh: bool) {
        if fresh {
            let w = self.vmap[v.0].take().unwrap();
            self.vused[w.0] = false;
        }
    }

    fn run(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return self.finish();
        }
        let a = self.order[k];
        let (s, t) = (self.p.source(a), self.p.target(a));
        for b in self.q.arrows() {
            if self.aused[b.0] {
                continue;
            }
            let Some(fs) = self.bind(s, self.q.source(b)) else {
                continue;
            };
            let Some(ft) = self.bind(t, self.q.target(b)) else {
                self.unbind(s, fs);
                continue;
            };
            self.amap[a.0] = Some(b);
            self.aused[b.0] = true;
            if self.run(k + 1) {
                return true;
            }
            self.aused[b.0] = false;
            self.amap[a.0] = None;
            self.unbind(t, ft);
            self.unbind(s, fs);
        }
        false
    }

    fn finish(&mut self) -> bool {
        // Remaining vertices are isolated on both sides; pair them in order.
        let mut free = self.q.vertices().filter(|w| !self.vused[w.0]);
        let unmapped: Vec<Vertex> = self.p.vertices().filter(|v| self.vmap[v.0].is_none()).collect();
        for v in &unmapped {
            self.vmap[v.0] = free.next();
        }
        let ok = self.p.relations().iter().all(|r| {
            let img: Vec<Arrow> = r.iter().map(|a| self.amap[a.0].unwrap()).collect();
            self.qrel.contains(&img)
        });
        if !ok {
            for v in unmapped {
                self.vmap[v.0] = None;
            }
        }
        ok
    }
}

/// Bijections on vertices and arrows preserving endpoints and carrying
/// the relation set of `p` onto that of `q`.
pub fn presentations_isomorphic(p: &Presentation, q: &Presentation) -> Result<Option<Isomorphism>> {
    for x in [p, q] {
        if x.vertex_count() > ISO_VERTEX_CAP {
            return Err(Error::CapExceeded {
                what: "vertices for isomorphism search".into(),
                cap: ISO_VERTEX_CAP,
            });
        }
    }
    let lens = |x: &Presentation| {
        let mut l: Vec<usize> = x.relations().iter().map(Vec::len).collect();
        l.sort();
        l
    };
    let profiles = |x: &Presentation| {
        let mut d: Vec<_> = x.vertices().map(|v| degree_profile(x, v)).collect();
        d.sort();
        d
    };
    if p.vertex_count() != q.vertex_count()
        || p.arrow_count() != q.arrow_count()
        || lens(p) != lens(q)
        || profiles(p) != profiles(q)
    {
        return Ok(None);
    }

    // Visit arrows so that each one after the first touches a vertex
    // already seen, which binds vertices early.
    let mut order = Vec::new();
    let mut seen_v = vec![false; p.vertex_count()];
    let mut done = vec![false; p.arrow_count()];
    while order.len() < p.arrow_count() {
        let pick = p
            .arrows()
            .filter(|a| !done[a.0])
            .find(|&a| seen_v[p.source(a).0] || seen_v[p.target(a).0])
            .or_else(|| p.arrows().find(|a| !done[a.0]))
            .unwrap();
        done[pick.0] = true;
        seen_v[p.source(pick).0] = true;
        seen_v[p.target(pick).0] = true;
        order.push(pick);
    }

    let mut s = Search {
        p,
        q,
        order,
        vmap: vec![None; p.vertex_count()],
        vused: vec![false; q.vertex_count()],
        amap: vec![None; p.arrow_count()],
        aused: vec![false; q.arrow_count()],
        qrel: q.relations().iter().cloned().collect(),
    };
    if !s.run(0) {
        return Ok(None);
    }
    Ok(Some(Isomorphism {
        vertex_map: s.vmap.into_iter().map(Option::unwrap).collect(),
        arrow_map: s.amap.into_iter().map(Option::unwrap).collect(),
    }))
}

/// Two monomial relation sets generate the same ideal when each relation
/// of one contains a relation of the other as a contiguous subpath.
pub fn same_monomial_ideal(a: &[Vec<Arrow>], b: &[Vec<Arrow>]) -> bool {
    let covered = |x: &[Vec<Arrow>], y: &[Vec<Arrow>]| {
        x.iter()
            .all(|r| y.iter().any(|s| r.windows(s.len()).any(|w| w == s.as_slice())))
    };
    covered(a, b) && covered(b, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::construct::StringAutomaton;
    use crate::fixtures;

    fn recovered(text: &str) -> (Algebra, RecoveredPresentation) {
        let alg = Algebra::parse(text).unwrap();
        let m = StringAutomaton::build(&alg).parity(&alg).unwrap();
        (alg.clone(), recover_presentation(&m).unwrap())
    }

    #[test]
    fn lambda3_roundtrip() {
        let (alg, r) = recovered(fixtures::LAMBDA3);
        let p = &r.presentation;
        assert_eq!((p.vertex_count(), p.arrow_count()), (3, 4));
        assert_eq!(p.relations().len(), 2);
        assert!(p.relations().iter().all(|x| x.len() == 2));
        let iso = presentations_isomorphic(alg.presentation(), p).unwrap().unwrap();
        let mapped: Vec<Vec<Arrow>> = alg.relations().iter().map(|x| iso.map_path(x)).collect();
        assert!(same_monomial_ideal(&mapped, p.relations()));
    }

    #[test]
    fn gamma_roundtrip() {
        let (alg, r) = recovered(fixtures::GAMMA);
        let p = &r.presentation;
        assert_eq!((p.vertex_count(), p.arrow_count()), (6, 7));
        let mut lens: Vec<usize> = p.relations().iter().map(Vec::len).collect();
        lens.sort();
        assert_eq!(lens, vec![2, 2, 3]);
        assert!(presentations_isomorphic(&alg.without_signs(), p).unwrap().is_some());
        for v in p.vertices() {
            assert!(p.outgoing(v).count() <= 2);
        }
    }

    #[test]
    fn non_isomorphic() {
        let l = Algebra::parse(fixtures::LAMBDA3).unwrap();
        let g = Algebra::parse(fixtures::GAMMA).unwrap();
        assert!(presentations_isomorphic(l.presentation(), g.presentation()).unwrap().is_none());
        let renamed = fixtures::LAMBDA3.replace("a1", "z9").replace("v3", "w0");
        let r = Presentation::parse(&renamed).unwrap();
        assert!(presentations_isomorphic(l.presentation(), &r).unwrap().is_some());
        let two = Presentation::parse(fixtures::LAMBDA3_TWO_SUCCESSORS).unwrap();
        assert!(presentations_isomorphic(l.presentation(), &two).unwrap().is_none());
    }
}
