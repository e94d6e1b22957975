//! Dense linear algebra over GF(2) with bit-packed vectors.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> BitVec {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn unit(len: usize, i: usize) -> BitVec {
        let mut v = BitVec::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> BitVec {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Positions of the set bits, in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }
}

/// A subspace kept in echelon form. Each stored row can carry a record of the
/// combination of inserted vectors it came from.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    combos: Vec<BitVec>,
}

impl Echelon {
    pub fn new(len: usize) -> Echelon {
        Echelon { len, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clear every pivot position of `v`, applying the same row operations to `combo`.
    pub fn reduce(&self, v: &mut BitVec, mut combo: Option<&mut BitVec>) {
        for ((row, &p), c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if v.get(p) {
                v.xor_assign(row);
                if let Some(acc) = combo.as_deref_mut() {
                    acc.xor_assign(c);
                }
            }
        }
    }

    /// Insert `v` tagged with `combo`. Returns `None` when `v` was independent,
    /// and otherwise the combination of tags that sums to zero.
    pub fn insert(&mut self, v: BitVec, combo: BitVec) -> Option<BitVec> {
        debug_assert_eq!(v.len(), self.len);
        let mut v = v;
        let mut combo = combo;
        self.reduce(&mut v, Some(&mut combo));
        match v.first_one() {
            None => Some(combo),
            Some(p) => {
                self.rows.push(v);
                self.pivots.push(p);
                self.combos.push(combo);
                None
            }
        }
    }

    pub fn insert_plain(&mut self, v: BitVec) -> bool {
        self.insert(v, BitVec::zeros(0)).is_none()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v, None);
        v.is_zero()
    }
}

/// Echelon form of the rows of `rows`, tagging row `i` with the unit vector `e_i`.
pub fn tagged_echelon(rows: &[BitVec], len: usize) -> (Echelon, Vec<BitVec>) {
    let mut ech = Echelon::new(len);
    let mut kernel = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if let Some(dep) = ech.insert(r.clone(), BitVec::unit(rows.len(), i)) {
            kernel.push(dep);
        }
    }
    (ech, kernel)
}

/// Basis of `{x : x^T M = 0}` for the matrix with the given rows.
pub fn left_kernel(rows: &[BitVec], ncols: usize) -> Vec<BitVec> {
    tagged_echelon(rows, ncols).1
}

pub fn rank(rows: &[BitVec], ncols: usize) -> usize {
    tagged_echelon(rows, ncols).0.rank()
}

/// Solve `x^T M = v` for the matrix with rows `rows`, using a tagged echelon
/// form built by [`tagged_echelon`].
pub fn solve_with(ech: &Echelon, nrows: usize, v: &BitVec) -> Option<BitVec> {
    let mut v = v.clone();
    let mut combo = BitVec::zeros(nrows);
    ech.reduce(&mut v, Some(&mut combo));
    if v.is_zero() {
        Some(combo)
    } else {
        None
    }
}

/// Whether the affine system `A x = b` has a solution; each equation is
/// `(coefficients, right-hand side)` over `nvars` unknowns.
pub fn system_consistent(equations: &[(BitVec, bool)], nvars: usize) -> bool {
    let mut ech = Echelon::new(nvars + 1);
    for (coeffs, rhs) in equations {
        let mut row = BitVec::zeros(nvars + 1);
        for i in coeffs.ones() {
            row.set(i, true);
        }
        row.set(nvars, *rhs);
        let mut reduced = row;
        ech.reduce(&mut reduced, None);
        if reduced.first_one() == Some(nvars) {
            return false;
        }
        ech.insert_plain(reduced);
    }
    true
}
