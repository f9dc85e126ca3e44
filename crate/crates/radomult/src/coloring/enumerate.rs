//! Isomorph-free exhaustive enumeration by orbit-bitmap sweep.
//!
//! The raw space of colorings is swept in ascending raw-index order (which is
//! lexicographic order on color arrays); every index not yet marked starts a
//! new class, and its orbit is explored by BFS over the group generators,
//! marking one bit per raw coloring. The first index reached in each orbit is
//! therefore the lexicographic minimum, i.e. the canonical representative.
//!
//! Colorings with up to 32 points and up to 4 colors are packed into u64
//! words of 2-bit fields; generator application uses per-byte scatter tables.
//! Anything beyond that falls back to a generic sweep for tiny raw spaces and
//! otherwise reports infeasibility (never silent truncation).

use super::{Coloring, IsoGroup};
use crate::error::{Error, Result};

/// Desk-scale default: admits the 2-coloring sweeps of F_5^2 (2^25 raw
/// colorings with a class table) and the optional 2^32-bit sweeps without one.
pub const DEFAULT_MEMORY_BUDGET: usize = 1 << 30;

/// Result of an orbit sweep over an abstract point set.
pub struct SweepResult {
    pub reps: Vec<u64>,
    pub orbit_sizes: Vec<u64>,
    /// raw index -> class index, when it fits the budget
    pub class_of: Option<Vec<u32>>,
}

/// Orbit-bitmap sweep over colorings of `points` abstract points with `c`
/// colors, under the permutation group generated by `perms`.
pub fn orbit_sweep(
    points: usize,
    c: usize,
    perms: &[Vec<u32>],
    budget_bytes: usize,
) -> Result<SweepResult> {
    let total = (c as u64).checked_pow(points as u32).filter(|_| points <= 40);
    if c <= 4 && points <= 32 {
        packed_sweep(points, c, perms, budget_bytes)
    } else if let Some(total) = total.filter(|&t| t <= 1 << 22) {
        generic_sweep(points, c, perms, total)
    } else {
        Err(Error::EnumerationInfeasible {
            space: format!("{c}^{points}"),
            budget: budget_bytes,
        })
    }
}

struct PackedCodec {
    points: usize,
    hi_len: usize,
    hi_table: Vec<u64>,
    lo_table: Vec<u64>,
    byte_tables: Vec<[u64; 256]>,
    c: u64,
}

impl PackedCodec {
    fn new(points: usize, c: usize) -> PackedCodec {
        let lo_len = points / 2;
        let hi_len = points - lo_len;
        let cpow = |e: usize| (c as u64).pow(e as u32);
        // raw index is big-endian base-c: point 0 is the most significant digit
        let mut hi_table = vec![0u64; cpow(hi_len) as usize];
        for (h, entry) in hi_table.iter_mut().enumerate() {
            let mut v = h as u64;
            let mut w = 0u64;
            for i in (0..hi_len).rev() {
                w |= (v % c as u64) << (2 * i);
                v /= c as u64;
            }
            *entry = w;
        }
        let mut lo_table = vec![0u64; cpow(lo_len) as usize];
        for (l, entry) in lo_table.iter_mut().enumerate() {
            let mut v = l as u64;
            let mut w = 0u64;
            // digits big-endian over points hi_len..points-1
            for j in (0..lo_len).rev() {
                w |= (v % c as u64) << (2 * (hi_len + j));
                v /= c as u64;
            }
            *entry = w;
        }
        let nbytes = (2 * points + 7) / 8;
        let mut byte_tables = vec![[0u64; 256]; nbytes];
        for (b, table) in byte_tables.iter_mut().enumerate() {
            for byte in 0..256usize {
                let mut acc = 0u64;
                for slot in 0..4 {
                    let i = 4 * b + slot;
                    if i < points {
                        let v = (byte >> (2 * slot)) & 3;
                        acc += v as u64 * cpow(points - 1 - i);
                    }
                }
                table[byte] = acc;
            }
        }
        PackedCodec { points, hi_len, hi_table, lo_table, byte_tables, c: c as u64 }
    }

    #[inline]
    fn index_to_word(&self, idx: u64) -> u64 {
        let lo_len = self.points - self.hi_len;
        let div = self.c.pow(lo_len as u32);
        self.hi_table[(idx / div) as usize] | self.lo_table[(idx % div) as usize]
    }

    #[inline]
    fn word_to_index(&self, w: u64) -> u64 {
        let mut idx = 0u64;
        for (b, table) in self.byte_tables.iter().enumerate() {
            idx += table[(w >> (8 * b)) as usize & 0xff];
        }
        idx
    }

    fn scatter_tables(&self, perm: &[u32]) -> Vec<[u64; 256]> {
        // out[x] = in[perm[x]]; field of in-point i lands at the unique x with perm[x] = i
        let mut inv = vec![0usize; self.points];
        for (x, &i) in perm.iter().enumerate() {
            inv[i as usize] = x;
        }
        let nbytes = (2 * self.points + 7) / 8;
        let mut tables = vec![[0u64; 256]; nbytes];
        for (b, table) in tables.iter_mut().enumerate() {
            for byte in 0..256usize {
                let mut acc = 0u64;
                for slot in 0..4 {
                    let i = 4 * b + slot;
                    if i < self.points {
                        let v = ((byte >> (2 * slot)) & 3) as u64;
                        acc |= v << (2 * inv[i]);
                    }
                }
                table[byte] = acc;
            }
        }
        tables
    }
}

fn packed_sweep(
    points: usize,
    c: usize,
    perms: &[Vec<u32>],
    budget_bytes: usize,
) -> Result<SweepResult> {
    let total = (c as u64).pow(points as u32);
    let bitmap_bytes = (total as usize + 7) / 8;
    if bitmap_bytes > budget_bytes {
        return Err(Error::EnumerationInfeasible {
            space: format!("{c}^{points} = {total}"),
            budget: budget_bytes,
        });
    }
    let codec = PackedCodec::new(points, c);
    let gen_tables: Vec<Vec<[u64; 256]>> =
        perms.iter().map(|p| codec.scatter_tables(p)).collect();
    let nbytes = (2 * points + 7) / 8;
    let want_class_table = bitmap_bytes + total as usize * 4 <= budget_bytes;
    let mut bitmap = vec![0u64; (total as usize + 63) / 64];
    let mut class_of = if want_class_table {
        Some(vec![0u32; total as usize])
    } else {
        None
    };
    let mut reps = Vec::new();
    let mut orbit_sizes = Vec::new();
    let mut stack: Vec<u64> = Vec::new();
    for idx in 0..total {
        if bitmap[(idx >> 6) as usize] >> (idx & 63) & 1 == 1 {
            continue;
        }
        let class = reps.len() as u32;
        reps.push(idx);
        bitmap[(idx >> 6) as usize] |= 1 << (idx & 63);
        if let Some(t) = class_of.as_mut() {
            t[idx as usize] = class;
        }
        let mut orbit = 1u64;
        stack.push(codec.index_to_word(idx));
        while let Some(w) = stack.pop() {
            for tables in &gen_tables {
                let mut w2 = 0u64;
                for (b, table) in tables.iter().enumerate().take(nbytes) {
                    w2 |= table[(w >> (8 * b)) as usize & 0xff];
                }
                let idx2 = codec.word_to_index(w2);
                if bitmap[(idx2 >> 6) as usize] >> (idx2 & 63) & 1 == 0 {
                    bitmap[(idx2 >> 6) as usize] |= 1 << (idx2 & 63);
                    if let Some(t) = class_of.as_mut() {
                        t[idx2 as usize] = class;
                    }
                    orbit += 1;
                    stack.push(w2);
                }
            }
        }
        orbit_sizes.push(orbit);
    }
    Ok(SweepResult { reps, orbit_sizes, class_of })
}

fn generic_sweep(
    points: usize,
    c: usize,
    perms: &[Vec<u32>],
    total: u64,
) -> Result<SweepResult> {
    let to_digits = |mut idx: u64| {
        let mut d = vec![0u8; points];
        for i in (0..points).rev() {
            d[i] = (idx % c as u64) as u8;
            idx /= c as u64;
        }
        d
    };
    let to_index =
        |d: &[u8]| d.iter().fold(0u64, |acc, &x| acc * c as u64 + x as u64);
    let mut visited = vec![false; total as usize];
    let mut class_of = vec![0u32; total as usize];
    let mut reps = Vec::new();
    let mut orbit_sizes = Vec::new();
    let mut stack: Vec<Vec<u8>> = Vec::new();
    for idx in 0..total {
        if visited[idx as usize] {
            continue;
        }
        let class = reps.len() as u32;
        reps.push(idx);
        visited[idx as usize] = true;
        class_of[idx as usize] = class;
        let mut orbit = 1u64;
        stack.push(to_digits(idx));
        while let Some(d) = stack.pop() {
            for perm in perms {
                let img: Vec<u8> = perm.iter().map(|&p| d[p as usize]).collect();
                let i2 = to_index(&img) as usize;
                if !visited[i2] {
                    visited[i2] = true;
                    class_of[i2] = class;
                    orbit += 1;
                    stack.push(img);
                }
            }
        }
        orbit_sizes.push(orbit);
    }
    Ok(SweepResult { reps, orbit_sizes, class_of: Some(class_of) })
}

/// The set Gamma^t(n) of c-colorings of F_q^n up to t-fixed isomorphism,
/// with canonical (lexicographically minimal) representatives in ascending
/// order.
#[derive(Debug)]
pub struct ColoringFamily {
    q: usize,
    n: usize,
    c: usize,
    t: i32,
    reps: Vec<Coloring>,
    orbit_sizes: Vec<u64>,
    class_of: Option<Vec<u32>>,
}

pub fn enumerate_colorings(
    q: usize,
    n: usize,
    c: usize,
    t: i32,
    budget_bytes: usize,
) -> Result<ColoringFamily> {
    let group = IsoGroup::new(q, n, t);
    let points = q.pow(n as u32);
    let sweep = orbit_sweep(points, c, group.generators(), budget_bytes)?;
    let reps = sweep
        .reps
        .iter()
        .map(|&idx| Coloring::from_raw_index(q, n, c, idx))
        .collect();
    Ok(ColoringFamily {
        q,
        n,
        c,
        t,
        reps,
        orbit_sizes: sweep.orbit_sizes,
        class_of: sweep.class_of,
    })
}

impl ColoringFamily {
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> usize {
        self.c
    }

    pub fn t(&self) -> i32 {
        self.t
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Coloring] {
        &self.reps
    }

    pub fn rep(&self, class: u32) -> &Coloring {
        &self.reps[class as usize]
    }

    pub fn orbit_sizes(&self) -> &[u64] {
        &self.orbit_sizes
    }

    pub fn has_class_table(&self) -> bool {
        self.class_of.is_some()
    }

    /// Class index of an arbitrary raw coloring of the same parameters.
    pub fn class_index(&self, gamma: &Coloring) -> u32 {
        debug_assert_eq!((gamma.q(), gamma.dim(), gamma.num_colors()), (self.q, self.n, self.c));
        if let Some(table) = &self.class_of {
            return table[gamma.raw_index() as usize];
        }
        let group = IsoGroup::new(self.q, self.n, self.t);
        let canon = group.canonical_form(gamma);
        self.reps
            .binary_search(&canon)
            .unwrap_or_else(|_| panic!("canonical form not found in family"))
            as u32
    }

    /// Class index straight from a raw index (requires the class table).
    #[inline]
    pub fn class_of_raw(&self, raw: u64) -> u32 {
        self.class_of.as_ref().expect("class table not materialized")[raw as usize]
    }
}
