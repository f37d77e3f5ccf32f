//! Inputs shared by the benchmarks: fixed strings, bands and Sturmian
//! windows over the reference algebras.

use brickword::algebra::Algebra;
use brickword::bricks::Checker;
use brickword::fixtures;
use brickword::strings::{enumerate_bands, enumerate_strings, Band, Str};
use brickword::sturmian::{characteristic_prefix, DirectiveSequence};

pub fn lambda3() -> Algebra {
    Algebra::parse(fixtures::LAMBDA3).expect("fixture parses")
}

pub fn gamma() -> Algebra {
    Algebra::parse(fixtures::GAMMA).expect("fixture parses")
}

/// The longest strings up to `max_len`, at most `count` of them.
pub fn long_strings(alg: &Algebra, max_len: usize, count: usize) -> Vec<Str> {
    let mut all = enumerate_strings(alg, max_len).expect("enumeration within cap");
    all.sort_by_key(|x| std::cmp::Reverse(x.len()));
    all.truncate(count);
    all
}

/// Bands up to `max_len`.
pub fn bands(alg: &Algebra, max_len: usize) -> Vec<Band> {
    enumerate_bands(alg, max_len).expect("enumeration within cap")
}

/// A prefix of the Fibonacci word.
pub fn fibonacci_prefix(n: usize) -> Vec<u8> {
    characteristic_prefix(&DirectiveSequence::fibonacci(), n)
        .expect("prefix within cap")
        .letters
}

pub fn checker(alg: &Algebra) -> Checker {
    Checker::new(alg)
}
