use std::collections::VecDeque;

use super::{Arrow, Presentation, Sign};
use crate::error::{Error, Result};

/// The maps ς, ε on arrows. Their extension to inverse syllables and
/// zero-length strings lives with the string types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignMaps {
    pairs: Vec<(Sign, Sign)>,
}

impl SignMaps {
    pub fn new(pairs: Vec<(Sign, Sign)>) -> SignMaps {
        SignMaps { pairs }
    }

    pub fn sigma(&self, a: Arrow) -> Sign {
        self.pairs[a.0].0
    }

    pub fn eps(&self, a: Arrow) -> Sign {
        self.pairs[a.0].1
    }

    pub fn pairs(&self) -> &[(Sign, Sign)] {
        &self.pairs
    }

    /// Checks conditions (a), (b), (c) against `p`.
    pub fn verify(&self, p: &Presentation) -> Result<()> {
        if self.pairs.len() != p.arrow_count() {
            return Err(Error::Unsupported(format!(
                "sign table has {} entries for {} arrows",
                self.pairs.len(),
                p.arrow_count()
            )));
        }
        for (kind, x, y) in constraints(p) {
            let (cond, lhs, rhs) = match kind {
                'a' => ('a', self.sigma(x), self.sigma(y)),
                'b' => ('b', self.eps(x), self.eps(y)),
                _ => ('c', self.eps(x), self.sigma(y)),
            };
            if lhs == rhs {
                return Err(Error::SignConflict {
                    condition: cond,
                    first: p.arrow_name(x).to_string(),
                    second: p.arrow_name(y).to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Every pair of arrows forced to carry opposite signs, tagged with the
/// condition that forces it. For (c) the pair is (α, β) with αβ composable
/// and not a relation, constraining ε(α) against ς(β).
fn constraints(p: &Presentation) -> Vec<(char, Arrow, Arrow)> {
    let mut out = Vec::new();
    for x in p.arrows() {
        for y in p.arrows() {
            if x < y && p.source(x) == p.source(y) {
                out.push(('a', x, y));
            }
            if x < y && p.target(x) == p.target(y) {
                out.push(('b', x, y));
            }
            if p.target(x) == p.source(y) && !p.is_relation(&[x, y]) {
                out.push(('c', x, y));
            }
        }
    }
    out
}

/// Unknown index: 2a for ς(a), 2a + 1 for ε(a).
fn unknown_name(p: &Presentation, u: usize) -> String {
    let which = if u.is_multiple_of(2) { "sigma" } else { "eps" };
    format!("{which}({})", p.arrow_name(Arrow(u / 2)))
}

pub(crate) fn solve(p: &Presentation) -> Result<SignMaps> {
    if let Some(declared) = p.declared_signs() {
        let maps = SignMaps::new(declared.to_vec());
        maps.verify(p)?;
        return Ok(maps);
    }

    let n = 2 * p.arrow_count();
    // Spanning forest of the "opposite sign" graph; a constraint closing an
    // odd cycle makes the system infeasible.
    let mut parent: Vec<usize> = (0..n).collect();
    let mut parity = vec![false; n];
    let mut tree: Vec<Vec<(usize, String)>> = vec![Vec::new(); n];

    fn find(parent: &mut [usize], parity: &mut [bool], x: usize) -> (usize, bool) {
        if parent[x] == x {
            return (x, false);
        }
        let (root, par) = find(parent, parity, parent[x]);
        parent[x] = root;
        parity[x] ^= par;
        (root, parity[x])
    }

    for (kind, x, y) in constraints(p) {
        let (u, v) = match kind {
            'a' => (2 * x.0, 2 * y.0),
            'b' => (2 * x.0 + 1, 2 * y.0 + 1),
            _ => (2 * x.0 + 1, 2 * y.0),
        };
        let label = format!(
            "({kind}) {} = -{}",
            unknown_name(p, u),
            unknown_name(p, v)
        );
        let (ru, pu) = find(&mut parent, &mut parity, u);
        let (rv, pv) = find(&mut parent, &mut parity, v);
        if ru == rv {
            if pu == pv {
                let mut cycle = tree_path(&tree, u, v);
                cycle.push(label);
                return Err(Error::SignsInfeasible { cycle });
            }
            continue;
        }
        parent[ru] = rv;
        parity[ru] = !(pu ^ pv);
        tree[u].push((v, label.clone()));
        tree[v].push((u, label));
    }

    // Anchor the smallest unknown of each component at +1; the smallest
    // index is also the lexicographically smallest (arrow name, ς before ε).
    let mut anchor_parity = vec![None; n];
    let mut values = vec![Sign::Plus; n];
    for u in 0..n {
        let (root, par) = find(&mut parent, &mut parity, u);
        let base = *anchor_parity[root].get_or_insert(par);
        values[u] = if par == base { Sign::Plus } else { Sign::Minus };
    }
    let maps = SignMaps::new(
        (0..p.arrow_count())
            .map(|a| (values[2 * a], values[2 * a + 1]))
            .collect(),
    );
    maps.verify(p)?;
    Ok(maps)
}

fn tree_path(tree: &[Vec<(usize, String)>], from: usize, to: usize) -> Vec<String> {
    let mut prev: Vec<Option<(usize, String)>> = vec![None; tree.len()];
    let mut seen = vec![false; tree.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for (y, label) in &tree[x] {
            if !seen[*y] {
                seen[*y] = true;
                prev[*y] = Some((x, label.clone()));
                queue.push_back(*y);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while let Some((x, label)) = prev[cur].take() {
        path.push(label);
        cur = x;
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn arrow(p: &Presentation, name: &str) -> Arrow {
        p.arrow_by_name(name).unwrap()
    }

    #[test]
    fn lambda3_solution_satisfies_constraints() {
        let p = Presentation::parse(fixtures::LAMBDA3).unwrap();
        let s = p.solve_signs().unwrap();
        let (a1, b1, a2, b2) = (arrow(&p, "a1"), arrow(&p, "b1"), arrow(&p, "a2"), arrow(&p, "b2"));
        assert_eq!(s.sigma(a1), -s.sigma(b1));
        assert_eq!(s.eps(a1), -s.eps(b1));
        assert_eq!(s.sigma(a2), -s.sigma(b2));
        assert_eq!(s.eps(a2), -s.eps(b2));
        assert_eq!(s.eps(a2), -s.sigma(a1));
        assert_eq!(s.eps(b2), -s.sigma(b1));
        // Lexicographic anchoring.
        assert_eq!((s.sigma(a1), s.eps(a1)), (Sign::Plus, Sign::Plus));
        assert_eq!((s.sigma(a2), s.eps(a2)), (Sign::Plus, Sign::Minus));
    }

    #[test]
    fn gamma_declared_signs_accepted_verbatim() {
        let p = Presentation::parse(fixtures::GAMMA).unwrap();
        let s = p.solve_signs().unwrap();
        assert_eq!(s.pairs(), p.declared_signs().unwrap());
    }

    #[test]
    fn declared_equal_sources_rejected() {
        let text = format!(
            "{}sign a1 +1 +1\nsign b1 +1 -1\nsign a2 +1 -1\nsign b2 -1 +1\n",
            fixtures::LAMBDA3
        );
        let p = Presentation::parse(&text).unwrap();
        match p.solve_signs() {
            Err(Error::SignConflict { condition: 'a', .. }) => {}
            other => panic!("expected condition (a) conflict, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_system_reports_cycle() {
        let text = "vertex u\nvertex v\nvertex w\narrow x u v\narrow y u v\narrow z v w\n";
        let p = Presentation::parse(text).unwrap();
        match p.solve_signs() {
            Err(Error::SignsInfeasible { cycle }) => assert!(cycle.len() >= 3, "{cycle:?}"),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }
}
