//! Linear-algebra oracle: string and band modules as quiver representations
//! over a prime field, and the dimension of their endomorphism rings.
//!
//! A module is a brick exactly when its endomorphism ring is the field, so
//! `end_dim == 1` gives an independent brick test.

use crate::algebra::{Algebra, Arrow};
use crate::error::{Error, Result};
use crate::strings::{Band, Str};

pub const DEFAULT_PRIME: u64 = 32003;
pub const ALT_PRIME: u64 = 65521;
pub const DEFAULT_DIM_CAP: usize = 400;

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    /// `self · other`.
    pub fn mul(&self, other: &Matrix, p: u64) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.get(r, c) + a * other.get(k, c)) % p;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// A representation: a space `F_p^{dims[v]}` at each vertex and a matrix
/// `dims[t(a)] × dims[s(a)]` for each arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub prime: u64,
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut e, mut b) = (1u64, p - 2, a % p);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

struct Builder {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Builder {
    fn new(alg: &Algebra, at: &[usize]) -> (Builder, Vec<usize>) {
        let mut dims = vec![0; alg.vertex_count()];
        let local: Vec<usize> = at
            .iter()
            .map(|&v| {
                dims[v] += 1;
                dims[v] - 1
            })
            .collect();
        let maps = alg
            .arrows()
            .map(|a| Matrix::zero(dims[alg.target(a).0], dims[alg.source(a).0]))
            .collect();
        (Builder { dims, maps }, local)
    }
}

/// The string module of `x`: one basis vector per vertex visited, each
/// syllable acting as `1` between consecutive ones in its direction.
pub fn string_module(alg: &Algebra, x: &Str, prime: u64) -> Representation {
    let s = x.syllables();
    let mut at = vec![x.source(alg).0];
    at.extend(s.iter().map(|y| y.target(alg).0));
    let (mut b, local) = Builder::new(alg, &at);
    for (j, y) in s.iter().enumerate() {
        let (from, to) = if y.inverse { (j + 1, j) } else { (j, j + 1) };
        b.maps[y.arrow.0].set(local[to], local[from], 1);
    }
    Representation {
        prime,
        dims: b.dims,
        maps: b.maps,
    }
}

/// The band module `M(b, l, λ)`: an `l`-dimensional block per position on
/// the cycle, identities along the band and a Jordan block `J_l(λ)` on
/// the closing syllable.
pub fn band_module(alg: &Algebra, band: &Band, l: usize, lambda: i64, prime: u64) -> Result<Representation> {
    if l == 0 {
        return Err(Error::Unsupported("l must be positive".into()));
    }
    let lam = reduce(lambda, prime);
    if lam == 0 {
        return Err(Error::Unsupported("lambda must be nonzero in the field".into()));
    }
    let s = band.syllables();
    let n = s.len();
    let at: Vec<usize> = s.iter().map(|y| y.source(alg).0).collect();
    let mut dims = vec![0; alg.vertex_count()];
    let offset: Vec<usize> = at
        .iter()
        .map(|&v| {
            dims[v] += l;
            dims[v] - l
        })
        .collect();
    let mut maps: Vec<Matrix> = alg
        .arrows()
        .map(|a| Matrix::zero(dims[alg.target(a).0], dims[alg.source(a).0]))
        .collect();
    for (j, y) in s.iter().enumerate() {
        let (from, to) = if y.inverse { ((j + 1) % n, j) } else { (j, (j + 1) % n) };
        let m = &mut maps[y.arrow.0];
        for k in 0..l {
            if j == n - 1 {
                m.set(offset[to] + k, offset[from] + k, lam);
                if k + 1 < l {
                    m.set(offset[to] + k, offset[from] + k + 1, 1);
                }
            } else {
                m.set(offset[to] + k, offset[from] + k, 1);
            }
        }
    }
    Ok(Representation { prime, dims, maps })
}

/// Sparse row echelon form, built one row at a time.
struct Echelon {
    p: u64,
    pivots: std::collections::HashMap<usize, Vec<(usize, u64)>>,
}

impl Echelon {
    fn insert(&mut self, mut row: Vec<(usize, u64)>) {
        loop {
            row.retain(|&(_, v)| v != 0);
            let Some(&(lead, v)) = row.first() else {
                return;
            };
            match self.pivots.get(&lead) {
                None => {
                    let s = inv_mod(v, self.p);
                    for e in &mut row {
                        e.1 = e.1 * s % self.p;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
                Some(piv) => {
                    row = axpy(&row, piv, self.p - v, self.p);
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `a + c·b` for sorted sparse rows.
fn axpy(a: &[(usize, u64)], b: &[(usize, u64)], c: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * b[j].1 % p));
            j += 1;
        } else {
            out.push((a[i].0, (a[i].1 + c * b[j].1) % p));
            i += 1;
            j += 1;
        }
    }
    out
}

impl Representation {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, a: Arrow) -> &Matrix {
        &self.maps[a.0]
    }

    /// Every relation acts as zero.
    pub fn satisfies_relations(&self, alg: &Algebra) -> bool {
        alg.relations().iter().all(|r| {
            let mut acc = self.maps[r[0].0].clone();
            for a in &r[1..] {
                acc = self.maps[a.0].mul(&acc, self.prime);
            }
            acc.is_zero()
        })
    }

    /// `dim End(M)`: the solution space of `φ_t M_a = M_a φ_s` over all
    /// arrows, for families of matrices `φ_v`.
    pub fn end_dim(&self, alg: &Algebra, cap: usize) -> Result<usize> {
        let total = self.total_dim();
        if total > cap {
            return Err(Error::CapExceeded {
                what: "module dimension".into(),
                cap,
            });
        }
        let p = self.prime;
        let mut base = Vec::with_capacity(self.dims.len());
        let mut unknowns = 0;
        for &d in &self.dims {
            base.push(unknowns);
            unknowns += d * d;
        }
        let var = |v: usize, r: usize, c: usize| base[v] + r * self.dims[v] + c;
        let mut ech = Echelon {
            p,
            pivots: Default::default(),
        };
        for a in alg.arrows() {
            let (s, t) = (alg.source(a).0, alg.target(a).0);
            let m = &self.maps[a.0];
            for r in 0..self.dims[t] {
                for c in 0..self.dims[s] {
                    let mut row: std::collections::BTreeMap<usize, u64> = Default::default();
                    for k in 0..self.dims[t] {
                        let x = m.get(k, c);
                        if x != 0 {
                            let e = row.entry(var(t, r, k)).or_insert(0);
                            *e = (*e + x) % p;
                        }
                    }
                    for k in 0..self.dims[s] {
                        let x = m.get(r, k);
                        if x != 0 {
                            let e = row.entry(var(s, k, c)).or_insert(0);
                            *e = (*e + p - x) % p;
                        }
                    }
                    ech.insert(row.into_iter().collect());
                }
            }
        }
        Ok(unknowns - ech.rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn band_module_shape() {
        let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
        let b = alg.band(&alg.parse_str("a2' b2").unwrap()).unwrap();
        let m = band_module(&alg, &b, 1, 5, DEFAULT_PRIME).unwrap();
        assert_eq!(m.dims, vec![0, 1, 1]);
        let a2 = alg.arrow_by_name("a2").unwrap();
        let b2 = alg.arrow_by_name("b2").unwrap();
        assert_eq!(m.map(a2).get(0, 0), 1);
        assert_eq!(m.map(b2).get(0, 0), 5);
        assert!(m.satisfies_relations(&alg));
        assert_eq!(m.end_dim(&alg, DEFAULT_DIM_CAP).unwrap(), 1);
        assert!(band_module(&alg, &b, 1, 0, DEFAULT_PRIME).is_err());
    }

    #[test]
    fn string_modules_satisfy_relations() {
        let alg = Algebra::parse(fixtures::GAMMA).unwrap();
        for x in crate::strings::enumerate_strings(&alg, 5).unwrap() {
            let m = string_module(&alg, &x, DEFAULT_PRIME);
            assert_eq!(m.total_dim(), x.len() + 1);
            assert!(m.satisfies_relations(&alg), "{}", alg.str_text(&x));
        }
    }

    #[test]
    fn jordan_blocks_are_not_bricks() {
        let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
        let b = alg.band(&alg.parse_str("a2' b2").unwrap()).unwrap();
        for l in 2..4 {
            let m = band_module(&alg, &b, l, 3, DEFAULT_PRIME).unwrap();
            assert_eq!(m.end_dim(&alg, DEFAULT_DIM_CAP).unwrap(), l);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
        let x = alg.parse_str("b1 a1'").unwrap();
        let m = string_module(&alg, &x, DEFAULT_PRIME);
        assert!(m.end_dim(&alg, 2).unwrap_err().is_cap());
    }
}
