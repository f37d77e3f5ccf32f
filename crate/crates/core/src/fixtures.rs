//! Reference presentations and automaton data used by tests, benches and
//! the command line.
//!
//! Relations are written in traversal order. The double Kronecker
//! algebra is often drawn with relations in composition order
//! (`a1 b2`, `a2 b1`); reversed, they read `b2 a1` and `a2 b1` below.

/// The double Kronecker algebra Λ₃: two pairs of parallel arrows
/// `v3 ⇉ v2 ⇉ v1`, each pair forbidding the crossed composition.
pub const LAMBDA3: &str = "\
vertex v1
vertex v2
vertex v3
arrow a1 v2 v1
arrow b1 v2 v1
arrow a2 v3 v2
arrow b2 v3 v2
relation b2 a1
relation a2 b1
";

/// A six-vertex string algebra with a length-3 relation, with fixed signs.
pub const GAMMA: &str = "\
vertex v1
vertex v2
vertex v3
vertex v4
vertex v5
vertex v6
arrow a1 v1 v2
arrow a2 v3 v2
arrow a3 v3 v1
arrow b v1 v4
arrow c1 v4 v5
arrow c2 v6 v5
arrow c3 v6 v4
relation a3 b c1
relation a3 a1
relation c3 c1
sign a1 +1 -1
sign a2 +1 +1
sign a3 -1 +1
sign b -1 +1
sign c1 -1 +1
sign c2 +1 -1
sign c3 -1 -1
";

/// Λ₃ with a third arrow `v2 → v1`: three arrows leave `v2`.
pub const LAMBDA3_EXTRA_ARROW: &str = "\
vertex v1
vertex v2
vertex v3
arrow a1 v2 v1
arrow b1 v2 v1
arrow c1 v2 v1
arrow a2 v3 v2
arrow b2 v3 v2
relation b2 a1
relation a2 b1
";

/// Λ₃ without `b2 a1`: `b2` then has two relation-free successors.
pub const LAMBDA3_TWO_SUCCESSORS: &str = "\
vertex v1
vertex v2
vertex v3
arrow a1 v2 v1
arrow b1 v2 v1
arrow a2 v3 v2
arrow b2 v3 v2
relation a2 b1
";

/// One loop and no relations: relation-free paths of every length.
pub const FREE_LOOP: &str = "\
vertex v
arrow l v v
";

/// Transitions of the automaton of [`GAMMA`] as
/// `(state, letter, state)`, states named by their syllables joined with
/// `.` and inverse syllables primed. The drawing of this automaton labels
/// `a3.b` as "ba₃" and `c1'.b'` as "BC₁".
pub const GAMMA_EDGES: [(&str, &str, &str); 32] = [
    ("a3.b", "c3'", "c3'"),
    ("c3'", "c2", "c2"),
    ("1(v6,-1)", "c2", "c2"),
    ("1(v2,+1)", "a1'", "a1'"),
    ("1(v1,+1)", "b", "b"),
    ("c2", "c1'", "c1'"),
    ("1(v3,-1)", "a2", "a2"),
    ("a1'", "b", "b"),
    ("b", "c3'", "c3'"),
    ("b", "c1", "c1"),
    ("c1", "c2'", "c2'"),
    ("1(v4,+1)", "c3'", "c3'"),
    ("1(v4,+1)", "c1", "c1"),
    ("a3", "b", "a3.b"),
    ("1(v3,+1)", "a3", "a3"),
    ("a2", "a1'", "a1'"),
    ("1(v4,-1)", "b'", "b'"),
    ("c2'", "c3", "c3"),
    ("1(v5,+1)", "c2'", "c2'"),
    ("a3'", "a2", "a2"),
    ("c3", "b'", "b'"),
    ("1(v5,-1)", "c1'", "c1'"),
    ("1(v2,-1)", "a2'", "a2'"),
    ("1(v1,-1)", "a3'", "a3'"),
    ("1(v1,-1)", "a1", "a1"),
    ("b'", "a3'", "a3'"),
    ("b'", "a1", "a1"),
    ("1(v6,+1)", "c3", "c3"),
    ("c1'", "b'", "c1'.b'"),
    ("a2'", "a3", "a3"),
    ("a1", "a2'", "a2'"),
    ("c1'.b'", "a1", "a1"),
];

/// [`GAMMA_EDGES`] under the parity map: direct letters become `0`,
/// inverse letters `1`.
pub fn gamma_parity_edges() -> Vec<(&'static str, &'static str, &'static str)> {
    GAMMA_EDGES
        .iter()
        .map(|&(s, l, t)| (s, if l.ends_with('\'') { "1" } else { "0" }, t))
        .collect()
}

/// The two blocks of the Sturmian bridge over [`LAMBDA3`].
pub const BRIDGE_A: &str = "b1 a1'";
pub const BRIDGE_B: &str = "a2' b2";
