//! Seeded random string algebras for cross-checking.
//!
//! Quivers have at most four vertices and six arrows with at most two
//! arrows in and out of each vertex. Extra successors and predecessors
//! are cut by length-2 relations, a few length-3 relations are sprinkled
//! in, and candidates that fail validation or sign solving are dropped.

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::algebra::{Algebra, Presentation};

pub const MAX_VERTICES: usize = 4;
pub const MAX_ARROWS: usize = 6;

fn candidate(rng: &mut StdRng) -> Option<Presentation> {
    let nv = rng.gen_range(1..=MAX_VERTICES);
    let target_arrows = rng.gen_range(2..=MAX_ARROWS);
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    let mut out = vec![0; nv];
    let mut inc = vec![0; nv];
    for _ in 0..16 * target_arrows {
        if arrows.len() == target_arrows {
            break;
        }
        let (s, t) = (rng.gen_range(0..nv), rng.gen_range(0..nv));
        if out[s] < 2 && inc[t] < 2 {
            out[s] += 1;
            inc[t] += 1;
            arrows.push((s, t));
        }
    }
    if arrows.is_empty() {
        return None;
    }
    let n = arrows.len();
    let mut rel2: HashSet<(usize, usize)> = HashSet::new();

    // At most one relation-free successor per arrow.
    for b in 0..n {
        let mut succ: Vec<usize> = (0..n).filter(|&c| arrows[c].0 == arrows[b].1).collect();
        succ.shuffle(rng);
        if succ.len() == 2 {
            rel2.insert((b, succ[0]));
            if rng.gen_bool(0.3) {
                rel2.insert((b, succ[1]));
            }
        } else if succ.len() == 1 && rng.gen_bool(0.15) {
            rel2.insert((b, succ[0]));
        }
    }
    // At most one relation-free predecessor per arrow.
    for b in 0..n {
        let mut pred: Vec<usize> = (0..n)
            .filter(|&a| arrows[a].1 == arrows[b].0 && !rel2.contains(&(a, b)))
            .collect();
        pred.shuffle(rng);
        for &a in pred.iter().skip(1) {
            rel2.insert((a, b));
        }
    }
    let mut rel3: Vec<[usize; 3]> = Vec::new();
    let free = |a: usize, b: usize| arrows[a].1 == arrows[b].0 && !rel2.contains(&(a, b));
    let paths: Vec<[usize; 3]> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])))
        .filter(|&[a, b, c]| free(a, b) && free(b, c))
        .collect();
    if !paths.is_empty() && rng.gen_bool(0.4) {
        rel3.push(*paths.choose(rng).unwrap());
    }

    let vname = |v: usize| format!("v{v}");
    let aname = |a: usize| format!("a{a}");
    let mut b = Presentation::builder();
    for v in 0..nv {
        b = b.vertex(&vname(v));
    }
    for (i, &(s, t)) in arrows.iter().enumerate() {
        b = b.arrow(&aname(i), &vname(s), &vname(t));
    }
    let mut rel2: Vec<_> = rel2.into_iter().collect();
    rel2.sort();
    for (x, y) in rel2 {
        b = b.relation(&[&aname(x), &aname(y)]);
    }
    for [x, y, z] in rel3 {
        b = b.relation(&[&aname(x), &aname(y), &aname(z)]);
    }
    b.build().ok()
}

/// `count` distinct validated string algebras, deterministic in `seed`.
pub fn random_algebras(count: usize, seed: u64) -> Vec<Algebra> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Some(p) = candidate(&mut rng) else {
            continue;
        };
        let Ok(alg) = Algebra::new(p) else {
            continue;
        };
        if seen.insert(alg.presentation().to_string()) {
            out.push(alg);
        }
    }
    out
}

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_COUNT: usize = 32;

/// `Λ₃`, `Γ` and the default random algebras, with display names.
pub fn standard_corpus() -> Vec<(String, Algebra)> {
    let mut out = vec![
        ("lambda3".to_string(), Algebra::parse(crate::fixtures::LAMBDA3).unwrap()),
        ("gamma".to_string(), Algebra::parse(crate::fixtures::GAMMA).unwrap()),
    ];
    for (i, a) in random_algebras(DEFAULT_COUNT, DEFAULT_SEED).into_iter().enumerate() {
        out.push((format!("random-{i:02}"), a));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_valid() {
        let a = random_algebras(25, 7);
        let b = random_algebras(25, 7);
        assert_eq!(a.len(), 25);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.presentation(), y.presentation());
            assert!(x.report().is_string_algebra);
            assert!(x.vertex_count() <= MAX_VERTICES);
            assert!(x.arrow_count() <= MAX_ARROWS);
            assert!(x.max_relation_len() <= 3);
        }
    }
}
