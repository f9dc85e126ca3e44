//! Exact arithmetic in GF(q) for small prime powers q.
//!
//! Addition and multiplication are precomputed into full lookup tables at
//! construction, so every later module treats field operations as O(1).
//! Extension fields use a fixed irreducible polynomial per order so that
//! element indexing is reproducible across runs and file formats:
//! GF(4) = F_2[x]/(x^2+x+1), GF(8) = F_2[x]/(x^3+x+1), GF(9) = F_3[x]/(x^2+1).
//! An element is identified with the base-p digit vector of its index
//! (little-endian), index 0 being the additive and index 1 the
//! multiplicative identity.

use crate::error::{Error, Result};

/// An element of a [`GaloisField`], stored as its index in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub(crate) u8);

impl FieldElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// GF(q) with full operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>, // inv[0] unused
}

const SUPPORTED: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Irreducible polynomial for each supported extension, as coefficients of
/// x^0..x^{k-1} (the monic leading term is implicit).
fn modulus_poly(q: usize) -> Option<(usize, Vec<u8>)> {
    match q {
        4 => Some((2, vec![1, 1])),    // x^2 + x + 1
        8 => Some((2, vec![1, 1, 0])), // x^3 + x + 1
        9 => Some((3, vec![1, 0])),    // x^2 + 1
        _ => None,
    }
}

fn digits(mut v: usize, p: usize, k: usize) -> Vec<u8> {
    let mut d = vec![0u8; k];
    for di in d.iter_mut() {
        *di = (v % p) as u8;
        v /= p;
    }
    d
}

fn undigits(d: &[u8], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * p + x as usize)
}

impl GaloisField {
    pub fn new(q: usize) -> Result<GaloisField> {
        if !SUPPORTED.contains(&q) {
            return Err(Error::UnsupportedField(q as u64));
        }
        let (p, k, poly) = match modulus_poly(q) {
            Some((p, poly)) => (p, poly.len(), poly),
            None => (q, 1, vec![]),
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let da = digits(a, p, k);
                let db = digits(b, p, k);
                let sum: Vec<u8> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| ((x as usize + y as usize) % p) as u8)
                    .collect();
                add[a * q + b] = undigits(&sum, p) as u8;
                // polynomial product, reduced by the modulus
                let mut prod = vec![0usize; 2 * k - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] += x as usize * y as usize;
                    }
                }
                for i in (k..2 * k - 1).rev() {
                    let coef = prod[i] % p;
                    prod[i] = 0;
                    // x^i = x^{i-k} * (-poly)
                    for (j, &pc) in poly.iter().enumerate() {
                        prod[i - k + j] += coef * ((p - pc as usize % p) % p);
                    }
                }
                let red: Vec<u8> = prod[..k].iter().map(|&x| (x % p) as u8).collect();
                mul[a * q + b] = undigits(&red, p) as u8;
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as u8;
                }
                if a != 0 && mul[a * q + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        Ok(GaloisField { q, p, add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn element(&self, index: usize) -> FieldElement {
        assert!(index < self.q, "element index {index} out of range for GF({})", self.q);
        FieldElement(index as u8)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u8).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add_idx(a.0, b.0))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul_idx(a.0, b.0))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(a.0 != 0, "zero has no multiplicative inverse");
        FieldElement(self.inv[a.0 as usize])
    }

    /// The image of an integer under the canonical ring map Z -> GF(q),
    /// i.e. (z mod p) copies of 1. Any integer is accepted; callers that
    /// require coefficients invertible in the field check coprimality
    /// separately.
    pub fn embed_integer(&self, z: i64) -> FieldElement {
        let r = z.rem_euclid(self.p as i64) as u8;
        FieldElement(r)
    }

    #[inline]
    pub(crate) fn add_idx(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }
}
