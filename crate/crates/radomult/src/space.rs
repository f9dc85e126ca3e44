//! Points of F_q^n, t-fixed affine morphisms and monomorphisms, and their
//! exact counts.
//!
//! A point is identified with its index `sum_i digit_i * q^i` (little-endian
//! in the coordinate order), a bijection between points and `[0, q^n)` that
//! file formats rely on. `e_0` denotes the zero vector and `e_j` the j-th
//! unit vector.
//!
//! Two counting conventions coexist deliberately: class counts of
//! monomorphism tuples ([`count_mon`], following the Gaussian-multinomial
//! formulas) and raw counts of not-necessarily-injective t-fixed maps
//! ([`count_raw_morphisms`]). Degenerate densities downstream always use raw
//! counts; that convention is what makes blow-up invariance an exact
//! identity.

use crate::error::{Error, Result};
use crate::field::GaloisField;
use num::BigUint;
use num::One;

/// F_q^n with point arithmetic backed by precomputed digit and scalar tables.
#[derive(Debug, Clone)]
pub struct Space {
    field: GaloisField,
    dim: usize,
    size: usize,
    /// digit matrix, size x dim
    digit: Vec<u8>,
    /// scalar multiplication table, q x size
    scalar: Vec<u32>,
}

impl Space {
    pub fn new(field: GaloisField, dim: usize) -> Space {
        let q = field.order();
        let size = q.checked_pow(dim as u32).expect("space too large");
        assert!(size <= (1 << 27), "space of size {size} not supported");
        let mut digit = vec![0u8; size * dim];
        for p in 0..size {
            let mut v = p;
            for d in 0..dim {
                digit[p * dim + d] = (v % q) as u8;
                v /= q;
            }
        }
        let mut scalar = vec![0u32; q * size];
        for s in 0..q {
            for p in 0..size {
                let mut out = 0usize;
                let mut w = 1usize;
                for d in 0..dim {
                    let x = digit[p * dim + d];
                    out += field.mul_idx(s as u8, x) as usize * w;
                    w *= q;
                }
                scalar[s * size + p] = out as u32;
            }
        }
        Space { field, dim, size, digit, scalar }
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn points(&self) -> impl Iterator<Item = u32> {
        0..self.size as u32
    }

    #[inline]
    pub fn digits(&self, p: u32) -> &[u8] {
        &self.digit[p as usize * self.dim..(p as usize + 1) * self.dim]
    }

    pub fn point_from_digits(&self, d: &[u8]) -> u32 {
        debug_assert_eq!(d.len(), self.dim);
        let q = self.q();
        let mut out = 0usize;
        for &x in d.iter().rev() {
            out = out * q + x as usize;
        }
        out as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let q = self.q();
        let mut out = 0usize;
        let mut w = 1usize;
        let da = self.digits(a);
        let db = self.digits(b);
        for d in 0..self.dim {
            out += self.field.add_idx(da[d], db[d]) as usize * w;
            w *= q;
        }
        out as u32
    }

    #[inline]
    pub fn scalar_mul(&self, s: u8, p: u32) -> u32 {
        self.scalar[s as usize * self.size + p as usize]
    }

    pub fn neg(&self, p: u32) -> u32 {
        let minus_one = self.field.neg(self.field.one()).index() as u8;
        self.scalar_mul(minus_one, p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// `e_0` is the zero vector, `e_j` for `1 <= j <= dim` the unit vectors.
    pub fn unit(&self, j: usize) -> u32 {
        assert!(j <= self.dim);
        if j == 0 {
            0
        } else {
            (self.q() as u32).pow(j as u32 - 1)
        }
    }

    /// Rank of the linear span of the given points.
    pub fn rank(&self, pts: &[u32]) -> usize {
        let mut basis: Vec<Vec<u8>> = Vec::new();
        for &p in pts {
            let mut v = self.digits(p).to_vec();
            for b in &basis {
                let lead = b.iter().position(|&x| x != 0).unwrap();
                if v[lead] != 0 {
                    let f = self.field.mul_idx(v[lead], self.field.inv(self.field.element(b[lead] as usize)).index() as u8);
                    for d in 0..self.dim {
                        let s = self.field.mul_idx(f, b[d]);
                        let neg = self.field.neg(self.field.element(s as usize)).index() as u8;
                        v[d] = self.field.add_idx(v[d], neg);
                    }
                }
            }
            if v.iter().any(|&x| x != 0) {
                basis.push(v);
                basis.sort_by_key(|b| b.iter().position(|&x| x != 0).unwrap());
            }
        }
        basis.len()
    }

    /// Points of the canonical t-fixed subspace: the span of e_1..e_t
    /// (just the origin for t = 0, empty for t = -1).
    pub fn fixed_set(&self, t: i32) -> Vec<u32> {
        if t < 0 {
            return Vec::new();
        }
        let t = t as usize;
        assert!(t <= self.dim);
        let q = self.q();
        (0..q.pow(t as u32) as u32).collect()
    }

    pub(crate) fn bitset(&self, pts: &[u32]) -> u128 {
        assert!(self.size <= 128);
        pts.iter().fold(0u128, |acc, &p| acc | (1u128 << p))
    }
}

/// A t-fixed affine map F_q^k -> F_q^n: `x -> sum x_i * col_i + translation`.
///
/// t-fixed means `phi(e_j) = e_j` for `0 <= j <= t`; `t = -1` places no
/// constraint (an arbitrary affine map), `t = 0` forces linearity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub k: usize,
    pub n: usize,
    pub cols: Vec<u32>,
    pub translation: u32,
    pub t: i32,
}

impl Morphism {
    pub fn new(k: usize, n: usize, cols: Vec<u32>, translation: u32, t: i32) -> Result<Morphism> {
        if cols.len() != k {
            return Err(Error::DimensionMismatch(format!(
                "expected {k} columns, got {}",
                cols.len()
            )));
        }
        if t >= 0 && translation != 0 {
            return Err(Error::InvalidParameter(
                "a t-fixed morphism with t >= 0 must fix the origin".into(),
            ));
        }
        if t > k as i32 || t > n as i32 {
            return Err(Error::InvalidParameter(format!(
                "t = {t} exceeds domain or codomain dimension"
            )));
        }
        Ok(Morphism { k, n, cols, translation, t })
    }

    pub fn identity(space: &Space) -> Morphism {
        let cols = (1..=space.dim()).map(|j| space.unit(j)).collect();
        Morphism { k: space.dim(), n: space.dim(), cols, translation: 0, t: space.dim() as i32 }
    }

    /// The unique t-fixed embedding id_{t,n} of F_q^t into F_q^n.
    pub fn canonical_embedding(t: usize, cod: &Space) -> Morphism {
        let cols = (1..=t).map(|j| cod.unit(j)).collect();
        Morphism { k: t, n: cod.dim(), cols, translation: 0, t: t as i32 }
    }

    pub fn apply(&self, dom: &Space, cod: &Space, x: u32) -> u32 {
        debug_assert_eq!(dom.dim(), self.k);
        debug_assert_eq!(cod.dim(), self.n);
        let dx = dom.digits(x);
        let mut out = self.translation;
        for (i, &c) in self.cols.iter().enumerate() {
            out = cod.add(out, cod.scalar_mul(dx[i], c));
        }
        out
    }

    /// Image of every point of the domain, indexed by domain point.
    pub fn image_table(&self, dom: &Space, cod: &Space) -> Vec<u32> {
        dom.points().map(|x| self.apply(dom, cod, x)).collect()
    }

    pub fn is_t_fixed(&self, dom: &Space, cod: &Space, t: i32) -> bool {
        if t < 0 {
            return true;
        }
        (0..=t as usize).all(|j| {
            j <= dom.dim() && j <= cod.dim() && self.apply(dom, cod, dom.unit(j)) == cod.unit(j)
        })
    }

    pub fn is_injective(&self, cod: &Space) -> bool {
        cod.rank(&self.cols) == self.k
    }

    /// `self` after `inner`: the map `x -> self(inner(x))`.
    pub fn compose(&self, inner: &Morphism, dom: &Space, mid: &Space, cod: &Space) -> Morphism {
        debug_assert_eq!(inner.n, self.k);
        let cols = (1..=inner.k)
            .map(|j| {
                let img = inner.apply(dom, mid, dom.unit(j));
                let base = self.apply(mid, cod, img);
                cod.sub(base, self.apply(mid, cod, inner.apply(dom, mid, 0)))
            })
            .collect();
        let translation = self.apply(mid, cod, inner.apply(dom, mid, 0));
        Morphism { k: inner.k, n: self.n, cols, translation, t: self.t.min(inner.t) }
    }
}

fn q_factorial(n: usize, q: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 1..=n {
        // [i]_q = 1 + q + ... + q^{i-1}
        let mut term = BigUint::ZERO;
        let mut pw = BigUint::one();
        for _ in 0..i {
            term += &pw;
            pw *= q;
        }
        acc *= term;
    }
    acc
}

/// Exact Gaussian multinomial `binom(n; k_1, ..., k_m)_q`.
pub fn gaussian_multinomial(n: usize, ks: &[usize], q: usize) -> Result<BigUint> {
    let ksum: usize = ks.iter().sum();
    if ksum > n {
        return Err(Error::InvalidParameter(format!(
            "multinomial parameters sum to {ksum} > n = {n}"
        )));
    }
    let mut denom = q_factorial(n - ksum, q);
    for &k in ks {
        denom *= q_factorial(k, q);
    }
    let num = q_factorial(n, q);
    debug_assert!((&num % &denom) == BigUint::ZERO);
    Ok(num / denom)
}

pub fn gaussian_binomial(n: usize, k: usize, q: usize) -> Result<BigUint> {
    gaussian_multinomial(n, &[k], q)
}

/// `|Mon_t(k_1, ..., k_m; n)|`: tuples of t-fixed monomorphisms overlapping
/// only in the fixed subspace, counted up to t-fixed isomorphisms of the
/// domains.
pub fn count_mon(t: i32, ks: &[usize], n: usize, q: usize) -> Result<BigUint> {
    if t < -1 {
        return Err(Error::InvalidParameter("t must be >= -1".into()));
    }
    let tp = t.max(0) as usize;
    if ks.iter().any(|&k| k < tp) {
        return Err(Error::InvalidParameter(format!("every k_i must be >= t^+ = {tp}")));
    }
    let ksum: usize = ks.iter().sum();
    if t < 0 {
        if n < ksum {
            return Err(Error::InvalidParameter(format!("need n >= {ksum}, got {n}")));
        }
        let mult = gaussian_multinomial(n, ks, q)?;
        Ok(BigUint::from(q).pow((n - ksum) as u32) * mult)
    } else {
        let kprime = ksum - ks.len().saturating_sub(1) * tp;
        if n < kprime {
            return Err(Error::InvalidParameter(format!("need n >= {kprime}, got {n}")));
        }
        let shifted: Vec<usize> = ks.iter().map(|&k| k - tp).collect();
        gaussian_multinomial(n - tp, &shifted, q)
    }
}

/// Raw count of all t-fixed affine maps F_q^k -> F_q^n, injective or not:
/// `(q^n)^(k - t)` for `t >= 0` and `(q^n)^(k + 1)` for `t = -1`.
pub fn count_raw_morphisms(t: i32, k: usize, n: usize, q: usize) -> BigUint {
    let free = if t >= 0 { k - t as usize } else { k + 1 };
    BigUint::from(q).pow((n * free) as u32)
}

/// Canonical representative of a t-fixed k-dimensional subspace: the image
/// point set together with a monomorphism onto it built from a
/// reduced-echelon basis (and, for t = -1, the minimal affine offset).
#[derive(Debug, Clone)]
pub struct SubspaceRep {
    pub k: usize,
    pub t: i32,
    pub mono: Morphism,
    /// image of the monomorphism, sorted ascending
    pub points: Vec<u32>,
    pub(crate) bits: u128,
}

impl SubspaceRep {
    fn from_image(space: &Space, t: i32, k: usize, mut points: Vec<u32>) -> SubspaceRep {
        points.sort_unstable();
        // canonical offset: minimal point of the affine subspace (0 if linear)
        let offset = if t >= 0 { 0 } else { points[0] };
        // reduced echelon basis of { p - offset }
        let mut rows: Vec<Vec<u8>> = points
            .iter()
            .map(|&p| space.digits(space.sub(p, offset)).to_vec())
            .collect();
        let mut basis: Vec<Vec<u8>> = Vec::new();
        let dim = space.dim();
        let f = space.field().clone();
        for col in 0..dim {
            if let Some(pos) = rows.iter().position(|r| {
                r[col] != 0 && r[..col].iter().all(|&x| x == 0)
            }) {
                let mut pivot = rows.swap_remove(pos);
                let inv = f.inv(f.element(pivot[col] as usize)).index() as u8;
                for x in pivot.iter_mut() {
                    *x = f.mul_idx(inv, *x);
                }
                for r in rows.iter_mut().chain(basis.iter_mut()) {
                    if r[col] != 0 {
                        let factor = r[col];
                        for d in 0..dim {
                            let s = f.mul_idx(factor, pivot[d]);
                            let neg = f.neg(f.element(s as usize)).index() as u8;
                            r[d] = f.add_idx(r[d], neg);
                        }
                    }
                }
                basis.push(pivot);
                if basis.len() == k {
                    break;
                }
            }
        }
        // for t >= 1 the fixed unit vectors are in the subspace; reorder the
        // basis so the first t columns of the mono are e_1..e_t
        let mut cols: Vec<u32> = basis.iter().map(|b| space.point_from_digits(b)).collect();
        if t >= 1 {
            for j in 1..=t as usize {
                let e = space.unit(j);
                let pos = cols.iter().position(|&c| c == e).expect("fixed unit not in basis");
                cols.swap(j - 1, pos);
            }
        }
        let bits = space.bitset(&points);
        let mono = Morphism { k, n: dim, cols, translation: offset, t };
        SubspaceRep { k, t, mono, points, bits }
    }

    pub fn contains(&self, p: u32) -> bool {
        self.bits >> p & 1 == 1
    }
}

/// All t-fixed k-dimensional subspaces of the given space, i.e. the images of
/// `Mon_t(k; n)`, each with a canonical representative monomorphism.
pub fn enumerate_mon(space: &Space, t: i32, k: usize) -> Result<Vec<SubspaceRep>> {
    if space.size() > 128 {
        return Err(Error::InvalidParameter(format!(
            "subspace enumeration supported up to 128 points, space has {}",
            space.size()
        )));
    }
    let tp = t.max(0) as usize;
    if k < tp || k > space.dim() {
        return Err(Error::InvalidParameter(format!(
            "k = {k} out of range for t = {t}, n = {}",
            space.dim()
        )));
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    // choose the span first (columns extending e_1..e_t), then the offset
    let mut cols: Vec<u32> = (1..=tp).map(|j| space.unit(j)).collect();
    fn rec(
        space: &Space,
        t: i32,
        k: usize,
        cols: &mut Vec<u32>,
        seen: &mut std::collections::HashSet<Vec<u32>>,
        out: &mut Vec<SubspaceRep>,
    ) {
        if cols.len() == k {
            // enumerate spanned set once
            let dom = Space::new(space.field().clone(), k);
            let offsets: Vec<u32> = if t >= 0 { vec![0] } else { space.points().collect() };
            for b in offsets {
                let m = Morphism { k, n: space.dim(), cols: cols.clone(), translation: b, t };
                let mut img: Vec<u32> = dom.points().map(|x| m.apply(&dom, space, x)).collect();
                img.sort_unstable();
                img.dedup();
                if seen.insert(img.clone()) {
                    out.push(SubspaceRep::from_image(space, t, k, img));
                }
            }
            return;
        }
        for c in space.points() {
            cols.push(c);
            if space.rank(cols) == cols.len() {
                rec(space, t, k, cols, seen, out);
            }
            cols.pop();
        }
    }
    if k == 0 {
        // zero-dimensional subspaces: the origin (t >= 0) or every point (t = -1)
        let offsets: Vec<u32> = if t >= 0 { vec![0] } else { space.points().collect() };
        for b in offsets {
            let m = Morphism { k: 0, n: space.dim(), cols: vec![], translation: b, t };
            out.push(SubspaceRep { k: 0, t, mono: m, points: vec![b], bits: 1u128 << b });
        }
        return Ok(out);
    }
    rec(space, t, k, &mut cols, &mut seen, &mut out);
    out.sort_by(|a, b| a.points.cmp(&b.points));
    Ok(out)
}

/// Tuples from `Mon_t(k_1, ..., k_m; n)`: indices into the per-dimension
/// subspace lists such that images pairwise intersect exactly in the
/// canonical fixed subspace and jointly sit in general position (the span of
/// the union has the maximal dimension `k_1 + ... + k_m - (m-1) t^+`). The
/// general-position requirement is what makes the averaging identities hold;
/// for linear tuples of two subspaces it is implied by the intersection
/// condition, for affine tuples it additionally rules out skew
/// configurations.
pub fn mon_tuples<'a>(
    space: &Space,
    t: i32,
    lists: &'a [Vec<SubspaceRep>],
) -> Vec<Vec<&'a SubspaceRep>> {
    let fixed = space.bitset(&space.fixed_set(t));
    let tp = t.max(0) as usize;
    let mut out = Vec::new();
    let mut cur: Vec<&SubspaceRep> = Vec::new();
    fn span_dim(space: &Space, members: &[&SubspaceRep], t: i32) -> usize {
        let mut pts: Vec<u32> = Vec::new();
        for m in members {
            pts.extend_from_slice(&m.points);
        }
        if t >= 0 {
            space.rank(&pts)
        } else {
            let base = pts[0];
            let diffs: Vec<u32> = pts.iter().map(|&p| space.sub(p, base)).collect();
            space.rank(&diffs)
        }
    }
    fn rec<'a>(
        space: &Space,
        t: i32,
        tp: usize,
        lists: &'a [Vec<SubspaceRep>],
        fixed: u128,
        cur: &mut Vec<&'a SubspaceRep>,
        out: &mut Vec<Vec<&'a SubspaceRep>>,
    ) {
        if cur.len() == lists.len() {
            let full: usize = cur.iter().map(|s| s.k).sum::<usize>()
                - cur.len().saturating_sub(1) * tp;
            if cur.len() < 2 || span_dim(space, cur, t) == full {
                out.push(cur.clone());
            }
            return;
        }
        for s in &lists[cur.len()] {
            if cur.iter().all(|p| p.bits & s.bits == fixed) {
                cur.push(s);
                rec(space, t, tp, lists, fixed, cur, out);
                cur.pop();
            }
        }
    }
    rec(space, t, tp, lists, fixed, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;

    fn space(q: usize, n: usize) -> Space {
        Space::new(GaloisField::new(q).unwrap(), n)
    }

    #[test]
    fn point_encoding_is_bijective() {
        let s = space(5, 2);
        for p in s.points() {
            assert_eq!(s.point_from_digits(s.digits(p)), p);
        }
    }

    #[test]
    fn gaussian_multinomial_examples() {
        // lines through the origin of F_5^2, brute force: (25-1)/(5-1) = 6
        assert_eq!(gaussian_binomial(2, 1, 5).unwrap(), BigUint::from(6u32));
        assert_eq!(gaussian_binomial(3, 0, 7).unwrap(), BigUint::one());
        assert_eq!(gaussian_binomial(3, 1, 3).unwrap(), BigUint::from(13u32));
        // symmetry
        for q in [2usize, 3, 5] {
            for n in 0..=4 {
                for k in 0..=n {
                    assert_eq!(
                        gaussian_binomial(n, k, q).unwrap(),
                        gaussian_binomial(n, n - k, q).unwrap()
                    );
                }
            }
        }
    }

    /// Independent count of lines through the origin by direct orbit pairing.
    #[test]
    fn gaussian_binomial_matches_brute_force_line_count() {
        for (q, n) in [(5usize, 2usize), (3, 2), (3, 3), (2, 4)] {
            let s = space(q, n);
            let mut lines = std::collections::HashSet::new();
            for u in 1..s.size() as u32 {
                let mut line: Vec<u32> = (0..q as u8).map(|x| s.scalar_mul(x, u)).collect();
                line.sort_unstable();
                lines.insert(line);
            }
            assert_eq!(
                BigUint::from(lines.len()),
                gaussian_binomial(n, 1, q).unwrap(),
                "q={q} n={n}"
            );
        }
    }

    #[test]
    fn count_mon_examples() {
        // affine lines in F_5^2: exhaustive count is 30
        assert_eq!(count_mon(-1, &[1], 2, 5).unwrap(), BigUint::from(30u32));
        assert_eq!(count_mon(-1, &[1], 2, 3).unwrap(), BigUint::from(12u32));
        // the whole space is the unique 0-fixed n-dimensional subspace
        for q in [2, 3, 5] {
            for n in 1..=3 {
                assert_eq!(count_mon(0, &[n], n, q).unwrap(), BigUint::one());
            }
        }
    }

    #[test]
    fn count_raw_morphisms_examples() {
        // affine maps F_3 -> F_3: x -> ax + b, 9 of them
        assert_eq!(count_raw_morphisms(-1, 1, 1, 3), BigUint::from(9u32));
        // linear maps F_5 -> F_5^2: one free column
        assert_eq!(count_raw_morphisms(0, 1, 2, 5), BigUint::from(25u32));
        // t = k: only the canonical embedding
        assert_eq!(count_raw_morphisms(2, 2, 3, 3), BigUint::one());
    }

    #[test]
    fn enumerate_mon_sizes_match_count_mon() {
        for (t, k, n, q) in [
            (-1i32, 1usize, 2usize, 5usize),
            (-1, 0, 1, 3),
            (-1, 1, 2, 3),
            (0, 1, 2, 5),
            (0, 1, 2, 3),
            (0, 2, 3, 2),
            (-1, 2, 3, 3),
            (1, 1, 2, 3),
            (1, 2, 3, 2),
        ] {
            let s = space(q, n);
            let subs = enumerate_mon(&s, t, k).unwrap();
            assert_eq!(
                BigUint::from(subs.len()),
                count_mon(t, &[k], n, q).unwrap(),
                "t={t} k={k} n={n} q={q}"
            );
            // distinct point sets
            let sets: std::collections::HashSet<_> =
                subs.iter().map(|r| r.points.clone()).collect();
            assert_eq!(sets.len(), subs.len());
            // representatives are t-fixed monomorphisms onto their image
            let dom = space(q, k);
            for r in &subs {
                assert!(r.mono.is_t_fixed(&dom, &s, t));
                if k > 0 {
                    assert!(r.mono.is_injective(&s));
                }
                let mut img: Vec<u32> =
                    dom.points().map(|x| r.mono.apply(&dom, &s, x)).collect();
                img.sort_unstable();
                img.dedup();
                assert_eq!(img, r.points);
            }
        }
    }

    #[test]
    fn affine_zero_subspaces_are_points() {
        let s = space(3, 1);
        let subs = enumerate_mon(&s, -1, 0).unwrap();
        assert_eq!(subs.len(), 3);
    }

    #[test]
    fn corollary_count_identity() {
        // |Mon_t(ks; n')| |Mon_t(n'; n)| = |Mon_t(ks; n)| binom(n-k', n'-k')_q
        for q in [2usize, 3, 5] {
            for t in [-1i32, 0, 1] {
                let tp = t.max(0) as usize;
                for n in tp..=4 {
                    for nprime in tp..=n {
                        for k1 in tp..=nprime {
                            for k2 in tp..=nprime {
                                let ks = [k1, k2];
                                let kprime = k1 + k2 - tp;
                                if nprime < kprime || (t < 0 && nprime < k1 + k2) {
                                    continue;
                                }
                                let lhs = count_mon(t, &ks, nprime, q).unwrap()
                                    * count_mon(t, &[nprime], n, q).unwrap();
                                let rhs = count_mon(t, &ks, n, q).unwrap()
                                    * gaussian_binomial(n - kprime, nprime - kprime, q).unwrap();
                                assert_eq!(lhs, rhs, "q={q} t={t} n'={nprime} n={n} ks={ks:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mon_tuple_enumeration_matches_direct_counts() {
        // expected values counted directly from the subspace structure:
        // ordered pairs of distinct lines through the origin, and ordered
        // pairs of disjoint coplanar affine lines
        for (t, k1, k2, n, q, expect) in [
            (0i32, 1usize, 1usize, 2usize, 3usize, 4 * 3),
            (0, 1, 1, 2, 5, 6 * 5),
            (-1, 1, 1, 2, 3, 12 * 2), // each affine line has 2 disjoint mates in the plane
            (-1, 1, 1, 3, 2, 28 * 3), // same-direction mates only; skew pairs excluded
            (1, 1, 1, 2, 2, 1), // the canonical line paired with itself: images overlap exactly in the fixed subspace
            (0, 1, 2, 3, 2, 7 * 4),   // line + complementary-position plane
        ] {
            let s = space(q, n);
            let lists = vec![
                enumerate_mon(&s, t, k1).unwrap(),
                enumerate_mon(&s, t, k2).unwrap(),
            ];
            let tuples = mon_tuples(&s, t, &lists);
            assert_eq!(tuples.len(), expect, "t={t} k1={k1} k2={k2} n={n} q={q}");
        }
    }

    #[test]
    fn composition_stays_t_fixed_and_injective() {
        let s2 = space(3, 2);
        let s3 = space(3, 3);
        let inner = enumerate_mon(&s2, 0, 1).unwrap();
        let outer = enumerate_mon(&s3, 0, 2).unwrap();
        let s1 = space(3, 1);
        for o in &outer {
            for i in &inner {
                let c = o.mono.compose(&i.mono, &s1, &s2, &s3);
                assert!(c.is_t_fixed(&s1, &s3, 0));
                assert!(c.is_injective(&s3));
            }
        }
        let n30 = count_mon(0, &[1], 3, 3).unwrap().to_u64().unwrap();
        assert_eq!(n30, 13);
    }
}
