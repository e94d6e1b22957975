//! Integer lattices in `ℤ^d` kept in reduced row Hermite normal form, with
//! checked `i64` arithmetic.

use crate::error::{Error, Result};

fn overflow() -> Error {
    Error::Resource("lattice coefficient exceeds 64 bits".into())
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or_else(overflow)
}

/// `x - q * y` on whole rows.
fn sub_multiple(x: &mut [i64], q: i64, y: &[i64]) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for (a, &b) in x.iter_mut().zip(y) {
        *a = a.checked_sub(mul(q, b)?).ok_or_else(overflow)?;
    }
    Ok(())
}

/// `(g, x, y)` with `a x + b y = g = gcd(a, b) > 0`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    (r0 as i64, s0 as i64, t0 as i64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteLattice {
    dim: usize,
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl HermiteLattice {
    pub fn new(dim: usize) -> HermiteLattice {
        HermiteLattice { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Integer coordinates of `v` in the row basis, or `None` if `v` is not in the lattice.
    pub fn coordinates(&self, v: &[i64]) -> Result<Option<Vec<i64>>> {
        let mut v = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[..p].iter().any(|&x| x != 0) {
                return Ok(None);
            }
            if v[p] % row[p] != 0 {
                return Ok(None);
            }
            let q = v[p] / row[p];
            sub_multiple(&mut v, q, row)?;
            coords.push(q);
        }
        Ok(if v.iter().all(|&x| x == 0) { Some(coords) } else { None })
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Add `v` to the lattice. Returns whether the lattice grew.
    pub fn insert(&mut self, v: &[i64]) -> Result<bool> {
        if self.contains(v)? {
            return Ok(false);
        }
        let mut v = v.to_vec();
        let mut idx = 0;
        while let Some(lead) = v.iter().position(|&x| x != 0) {
            while idx < self.rows.len() && self.pivots[idx] < lead {
                idx += 1;
            }
            if idx == self.rows.len() || self.pivots[idx] > lead {
                if v[lead] < 0 {
                    for x in v.iter_mut() {
                        *x = -*x;
                    }
                }
                self.rows.insert(idx, v);
                self.pivots.insert(idx, lead);
                break;
            }
            let row = &mut self.rows[idx];
            let (a, b) = (row[lead], v[lead]);
            if b % a == 0 {
                sub_multiple(&mut v, b / a, row)?;
                continue;
            }
            let (g, x, y) = ext_gcd(a, b);
            let mut combined = vec![0i64; self.dim];
            for k in 0..self.dim {
                combined[k] = mul(x, row[k])?
                    .checked_add(mul(y, v[k])?)
                    .ok_or_else(overflow)?;
            }
            let (ag, bg) = (a / g, b / g);
            for k in 0..self.dim {
                v[k] = mul(ag, v[k])?.checked_sub(mul(bg, row[k])?).ok_or_else(overflow)?;
            }
            *row = combined;
        }
        self.reduce_above()?;
        Ok(true)
    }

    fn reduce_above(&mut self) -> Result<()> {
        for j in 0..self.rows.len() {
            let p = self.pivots[j];
            let (head, tail) = self.rows.split_at_mut(j);
            let pivot_row = &tail[0];
            for row in head.iter_mut() {
                let q = row[p].div_euclid(pivot_row[p]);
                sub_multiple(row, q, pivot_row)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_merges_pivots() {
        let mut h = HermiteLattice::new(2);
        assert!(h.insert(&[4, 1]).unwrap());
        assert!(h.insert(&[6, 0]).unwrap());
        // The lattice spanned by (4,1), (6,0) has determinant 6.
        assert_eq!(h.rank(), 2);
        let det: i64 = h.rows().iter().zip(h.pivots()).map(|(r, &p)| r[p]).product();
        assert_eq!(det, 6);
        assert!(h.contains(&[2, 2]).unwrap());
        assert!(!h.contains(&[1, 0]).unwrap());
        assert!(!h.insert(&[10, 1]).unwrap());
    }

    #[test]
    fn coordinates_reconstruct() {
        let mut h = HermiteLattice::new(3);
        for v in [[2, 3, 5], [0, 7, 1], [4, -1, 0]] {
            h.insert(&v).unwrap();
        }
        let target = [6, 9, 6];
        let c = h.coordinates(&target).unwrap().unwrap();
        let mut sum = [0i64; 3];
        for (ci, row) in c.iter().zip(h.rows()) {
            for k in 0..3 {
                sum[k] += ci * row[k];
            }
        }
        assert_eq!(sum, target);
    }

    #[test]
    fn ext_gcd_identity() {
        for (a, b) in [(4, 6), (-3, 9), (7, -5), (12, 18)] {
            let (g, x, y) = ext_gcd(a, b);
            assert!(g > 0);
            assert_eq!(a * x + b * y, g);
        }
    }
}
