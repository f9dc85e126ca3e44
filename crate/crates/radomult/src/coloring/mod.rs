//! Colorings of F_q^n, t-fixed isomorphism canonicalization, isomorph-free
//! enumeration, and the coloring file format.

mod enumerate;
mod group;
mod io;

pub use enumerate::{enumerate_colorings, orbit_sweep, ColoringFamily, DEFAULT_MEMORY_BUDGET};
pub use group::IsoGroup;
pub use io::{read_coloring, write_coloring};

use crate::error::{Error, Result};
use crate::field::GaloisField;
use crate::space::{Morphism, Space};

/// A total map F_q^n -> {1..c}, stored in point-index order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    q: usize,
    n: usize,
    c: usize,
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(q: usize, n: usize, c: usize, colors: Vec<u8>) -> Result<Coloring> {
        let size = q.checked_pow(n as u32).ok_or_else(|| {
            Error::InvalidParameter(format!("q^n overflows for q={q}, n={n}"))
        })?;
        if colors.len() != size {
            return Err(Error::DimensionMismatch(format!(
                "coloring of F_{q}^{n} needs {size} entries, got {}",
                colors.len()
            )));
        }
        if let Some(&bad) = colors.iter().find(|&&x| x == 0 || x as usize > c) {
            return Err(Error::InvalidParameter(format!(
                "color {bad} out of range 1..={c}"
            )));
        }
        Ok(Coloring { q, n, c, colors })
    }

    pub fn constant(q: usize, n: usize, c: usize, color: u8) -> Result<Coloring> {
        let size = q.pow(n as u32);
        Coloring::new(q, n, c, vec![color; size])
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> usize {
        self.c
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, point: u32) -> u8 {
        self.colors[point as usize]
    }

    /// Points with the given color (the color class).
    pub fn class(&self, color: u8) -> Vec<u32> {
        (0..self.colors.len() as u32)
            .filter(|&p| self.colors[p as usize] == color)
            .collect()
    }

    /// The coloring as a base-c integer, most significant digit at point 0.
    /// Ascending raw index order equals lexicographic order on color arrays.
    pub fn raw_index(&self) -> u64 {
        self.colors
            .iter()
            .fold(0u64, |acc, &x| acc * self.c as u64 + (x - 1) as u64)
    }

    pub fn from_raw_index(q: usize, n: usize, c: usize, mut idx: u64) -> Coloring {
        let size = q.pow(n as u32);
        let mut colors = vec![0u8; size];
        for i in (0..size).rev() {
            colors[i] = (idx % c as u64) as u8 + 1;
            idx /= c as u64;
        }
        Coloring { q, n, c, colors }
    }

    /// The pullback along a morphism: the coloring of the domain with value
    /// `self(phi(x))` at each x.
    pub fn restrict(&self, dom: &Space, cod: &Space, phi: &Morphism) -> Result<Coloring> {
        if phi.n != self.n || cod.dim() != self.n || dom.dim() != phi.k {
            return Err(Error::DimensionMismatch(format!(
                "morphism F^{} -> F^{} does not match coloring of dimension {}",
                phi.k, phi.n, self.n
            )));
        }
        let colors = dom
            .points()
            .map(|x| self.colors[phi.apply(dom, cod, x) as usize])
            .collect();
        Ok(Coloring { q: self.q, n: dom.dim(), c: self.c, colors })
    }

    /// Pullback along a precomputed image table (domain point -> codomain point).
    pub fn restrict_table(&self, table: &[u32]) -> Coloring {
        let colors = table.iter().map(|&p| self.colors[p as usize]).collect();
        let mut n = 0;
        while self.q.pow(n as u32) < table.len() {
            n += 1;
        }
        debug_assert_eq!(self.q.pow(n as u32), table.len());
        Coloring { q: self.q, n, c: self.c, colors }
    }

    /// Apply a point permutation: the coloring x -> self(perm(x)).
    pub fn permute(&self, perm: &[u32]) -> Coloring {
        let colors = perm.iter().map(|&p| self.colors[p as usize]).collect();
        Coloring { q: self.q, n: self.n, c: self.c, colors }
    }

    /// Relabel colors through a permutation `map` (index = old color - 1).
    pub fn permute_colors(&self, map: &[u8]) -> Coloring {
        let colors = self.colors.iter().map(|&x| map[(x - 1) as usize]).collect();
        Coloring { q: self.q, n: self.n, c: self.c, colors }
    }

    pub fn space(&self) -> Space {
        Space::new(GaloisField::new(self.q).expect("validated at construction"), self.n)
    }
}

/// Canonical form of a coloring under the group of t-fixed isomorphisms:
/// the lexicographically minimal color array over the orbit. Equal keys
/// characterize t-fixed isomorphic colorings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    pub q: usize,
    pub n: usize,
    pub c: usize,
    pub t: i32,
    pub colors: Vec<u8>,
}

pub fn canonicalize(gamma: &Coloring, t: i32) -> CanonicalKey {
    let group = IsoGroup::new(gamma.q, gamma.n, t);
    let rep = group.canonical_form(gamma);
    CanonicalKey { q: gamma.q, n: gamma.n, c: gamma.c, t, colors: rep.colors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::enumerate_mon;

    #[test]
    fn constant_coloring_is_canonical_for_all_t() {
        for t in [-1i32, 0, 1] {
            let g = Coloring::constant(3, 2, 3, 2).unwrap();
            let key = canonicalize(&g, t);
            assert_eq!(key.colors, g.colors);
        }
    }

    #[test]
    fn affine_isomorphic_line_colorings_share_keys() {
        // (1,2,2) and (2,1,2) are related by x -> x+1
        let a = Coloring::new(3, 1, 3, vec![1, 2, 2]).unwrap();
        let b = Coloring::new(3, 1, 3, vec![2, 1, 2]).unwrap();
        assert_eq!(canonicalize(&a, -1), canonicalize(&b, -1));
        // under the linear group they differ: x -> 2x fixes 0
        assert_ne!(canonicalize(&a, 0), canonicalize(&b, 0));
    }

    #[test]
    fn linear_classes_of_f3_two_colorings() {
        // (1,2,2) maps to itself under x -> 2x, so (1,2,1) is a distinct class
        let a = Coloring::new(3, 1, 2, vec![1, 2, 2]).unwrap();
        let b = Coloring::new(3, 1, 2, vec![1, 2, 1]).unwrap();
        assert_ne!(canonicalize(&a, 0), canonicalize(&b, 0));
    }

    #[test]
    fn canonicalize_is_idempotent_and_orbit_invariant() {
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for (q, n, c) in [(3usize, 2usize, 3usize), (2, 3, 2), (5, 1, 2)] {
            let size = q.pow(n as u32);
            for t in [-1i32, 0, 1] {
                if t > n as i32 {
                    continue;
                }
                let group = IsoGroup::new(q, n, t);
                for _ in 0..12 {
                    let colors: Vec<u8> =
                        (0..size).map(|_| (rng() % c as u64) as u8 + 1).collect();
                    let g = Coloring::new(q, n, c, colors).unwrap();
                    let key = canonicalize(&g, t);
                    let again = canonicalize(
                        &Coloring::new(q, n, c, key.colors.clone()).unwrap(),
                        t,
                    );
                    assert_eq!(key, again);
                    for perm in group.generators() {
                        assert_eq!(canonicalize(&g.permute(perm), t), key);
                    }
                }
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let s2 = Space::new(GaloisField::new(3).unwrap(), 2);
        let s1 = Space::new(GaloisField::new(3).unwrap(), 1);
        // color only the origin with 2
        let mut colors = vec![1u8; 9];
        colors[0] = 2;
        let g = Coloring::new(3, 2, 2, colors).unwrap();
        // identity restriction
        let id = Morphism::identity(&s2);
        assert_eq!(g.restrict(&s2, &s2, &id).unwrap(), g);
        // a line through the origin sees (2,1,1) up to order
        for rep in enumerate_mon(&s2, 0, 1).unwrap() {
            let r = g.restrict(&s1, &s2, &rep.mono).unwrap();
            let mut cs = r.colors().to_vec();
            cs.sort_unstable();
            assert_eq!(cs, vec![1, 1, 2]);
        }
        // a constant morphism induces a constant coloring
        let const_m = Morphism::new(1, 2, vec![0], 4, -1).unwrap();
        let r = g.restrict(&s1, &s2, &const_m).unwrap();
        assert_eq!(r.colors(), &[1, 1, 1]);
    }

    #[test]
    fn restrict_is_functorial() {
        let f = GaloisField::new(3).unwrap();
        let s1 = Space::new(f.clone(), 1);
        let s2 = Space::new(f.clone(), 2);
        let s3 = Space::new(f.clone(), 3);
        let mut state = 99u64;
        let mut rng = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        let colors: Vec<u8> = (0..27).map(|_| (rng() % 3) as u8 + 1).collect();
        let g = Coloring::new(3, 3, 3, colors).unwrap();
        for outer in enumerate_mon(&s3, -1, 2).unwrap().iter().take(15) {
            for inner in enumerate_mon(&s2, -1, 1).unwrap().iter().take(6) {
                let composed = outer.mono.compose(&inner.mono, &s1, &s2, &s3);
                let direct = g.restrict(&s1, &s3, &composed).unwrap();
                let staged = g
                    .restrict(&s2, &s3, &outer.mono)
                    .unwrap()
                    .restrict(&s1, &s2, &inner.mono)
                    .unwrap();
                assert_eq!(direct, staged);
            }
        }
    }

    #[test]
    fn raw_index_round_trip_is_lexicographic() {
        let mut prev: Option<Coloring> = None;
        for idx in 0..81u64 {
            let g = Coloring::from_raw_index(3, 1, 3, idx % 27);
            assert_eq!(g.raw_index(), idx % 27);
            if idx < 27 {
                if let Some(p) = prev {
                    assert!(p.colors() < g.colors());
                }
                prev = Some(g);
            }
        }
    }
}
