//! Groups of t-fixed isomorphisms of F_q^n as point permutations.
//!
//! Only a fixed generating set is materialized; orbits are explored by BFS.
//! The generating sets are fixed (transvections, a basis cycle, one dilation
//! by a primitive element, and for the unfixed group one translation per
//! basis direction) so canonical forms are stable across runs.

use crate::coloring::Coloring;
use crate::field::GaloisField;
use crate::space::Space;
use num::BigUint;
use num::One;
use std::collections::{HashSet, VecDeque};

#[derive(Debug, Clone)]
pub struct IsoGroup {
    q: usize,
    n: usize,
    t: i32,
    gens: Vec<Vec<u32>>,
}

fn primitive_element(f: &GaloisField) -> u8 {
    let q = f.order();
    'outer: for g in 2..q {
        let mut x = f.element(g);
        for _ in 0..q - 2 {
            if x == f.one() {
                continue 'outer;
            }
            x = f.mul(x, f.element(g));
        }
        if x == f.one() {
            return g as u8;
        }
    }
    1
}

impl IsoGroup {
    pub fn new(q: usize, n: usize, t: i32) -> IsoGroup {
        assert!(t >= -1 && t <= n as i32);
        let field = GaloisField::new(q).expect("supported field");
        let space = Space::new(field.clone(), n);
        let g = primitive_element(&field);
        let mut mats: Vec<Vec<u32>> = Vec::new();
        let identity: Vec<u32> = (1..=n).map(|j| space.unit(j)).collect();
        let tp = t.max(0) as usize;
        if t <= 0 {
            if n >= 2 {
                // transvections e_1 -> e_1 + e_2 and e_2 -> e_2 + e_1
                let mut m = identity.clone();
                m[0] = space.add(space.unit(1), space.unit(2));
                mats.push(m);
                let mut m = identity.clone();
                m[1] = space.add(space.unit(2), space.unit(1));
                mats.push(m);
                // basis cycle
                let m: Vec<u32> = (1..=n).map(|j| space.unit(j % n + 1)).collect();
                mats.push(m);
            }
            if g != 1 {
                let mut m = identity.clone();
                m[0] = space.scalar_mul(g, space.unit(1));
                mats.push(m);
            }
        } else {
            // stabilizer of e_1..e_t: elementary operations on free columns only
            for j in tp + 1..=n {
                for i in 1..=n {
                    if i == j {
                        continue;
                    }
                    let mut m = identity.clone();
                    m[j - 1] = space.add(space.unit(j), space.unit(i));
                    mats.push(m);
                }
                if g != 1 {
                    let mut m = identity.clone();
                    m[j - 1] = space.scalar_mul(g, space.unit(j));
                    mats.push(m);
                }
            }
        }
        let mut gens: Vec<Vec<u32>> = mats
            .into_iter()
            .map(|cols| {
                space
                    .points()
                    .map(|x| {
                        let dx = space.digits(x).to_vec();
                        let mut out = 0u32;
                        for (i, &c) in cols.iter().enumerate() {
                            out = space.add(out, space.scalar_mul(dx[i], c));
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        if t == -1 {
            for j in 1..=n {
                let e = space.unit(j);
                gens.push(space.points().map(|x| space.add(x, e)).collect());
            }
        }
        if gens.is_empty() {
            gens.push((0..space.size() as u32).collect());
        }
        IsoGroup { q, n, t, gens }
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn t(&self) -> i32 {
        self.t
    }

    /// Exact group order from the standard formulas.
    pub fn order(&self) -> BigUint {
        let q = BigUint::from(self.q);
        let tp = self.t.max(0) as usize;
        let free = self.n - tp;
        let mut ord = BigUint::one();
        for i in 0..free {
            ord *= q.pow(free as u32) - q.pow(i as u32);
        }
        if self.t >= 1 {
            ord *= q.pow((tp * free) as u32);
        }
        if self.t == -1 {
            ord *= q.pow(self.n as u32);
        }
        ord
    }

    /// Materialize the whole group by BFS closure over the generators.
    /// Intended for small spaces (tests and cross-checks).
    pub fn elements(&self) -> Vec<Vec<u32>> {
        let size = self.q.pow(self.n as u32);
        let identity: Vec<u32> = (0..size as u32).collect();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in &self.gens {
                let comp: Vec<u32> = (0..size).map(|i| g[p[i] as usize]).collect();
                if seen.insert(comp.clone()) {
                    queue.push_back(comp);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Lexicographically minimal color array over the orbit of `gamma`.
    pub fn canonical_form(&self, gamma: &Coloring) -> Coloring {
        assert_eq!(gamma.q(), self.q);
        assert_eq!(gamma.dim(), self.n);
        let mut best = gamma.clone();
        let mut seen: HashSet<Coloring> = HashSet::new();
        seen.insert(gamma.clone());
        let mut queue = VecDeque::from([gamma.clone()]);
        while let Some(g) = queue.pop_front() {
            for perm in &self.gens {
                let img = g.permute(perm);
                if !seen.contains(&img) {
                    if img < best {
                        best = img.clone();
                    }
                    seen.insert(img.clone());
                    queue.push_back(img);
                }
            }
        }
        best
    }

    /// Orbit of a coloring (used by small-scale cross-checks).
    pub fn orbit(&self, gamma: &Coloring) -> HashSet<Coloring> {
        let mut seen: HashSet<Coloring> = HashSet::new();
        seen.insert(gamma.clone());
        let mut queue = VecDeque::from([gamma.clone()]);
        while let Some(g) = queue.pop_front() {
            for perm in &self.gens {
                let img = g.permute(perm);
                if !seen.contains(&img) {
                    seen.insert(img.clone());
                    queue.push_back(img);
                }
            }
        }
        seen
    }
}
