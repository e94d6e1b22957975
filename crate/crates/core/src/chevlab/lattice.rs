//! Weyl lattices `𝒰_ℤ v⁺` inside the ambient spaces, their Gram matrices and
//! the mod-2 radical of the invariant form.

use std::collections::VecDeque;

use num_bigint::BigUint;

use super::hnf::HermiteLattice;
use super::space::{Caps, ChevalleyOperator, IntWedgeVector, SpaceFamily, WedgeSpace};
use crate::error::{Error, Result};
use crate::gf2::{left_kernel, BitVec, Echelon};
use crate::rootsys::{weyl_dim, Family, SimpleType, Weight};

#[derive(Debug, Clone)]
pub struct LatticeModule {
    space: WedgeSpace,
    blocks: Vec<HermiteLattice>,
    offsets: Vec<usize>,
    rank: usize,
    /// `gram[b][i][j] = ⟨row i of block b, row j of the opposite block⟩`.
    gram: Vec<Vec<Vec<i64>>>,
    opposite: Vec<Option<usize>>,
    radical: Vec<Echelon>,
    radical_basis: Vec<Vec<BitVec>>,
    insertions: usize,
    closure_checks: usize,
}

/// `C(2l, k) - C(2l, k - 2)` for the symplectic family, and the Weyl
/// dimension of `ω_k + ω_{n-k}` for `SL_n`.
pub fn expected_rank(family: SpaceFamily) -> Result<BigUint> {
    match family {
        SpaceFamily::Symplectic { l, k } => {
            let top = binomial(2 * l, k);
            let sub = if k >= 2 { binomial(2 * l, k - 2) } else { BigUint::default() };
            Ok(top - sub)
        }
        SpaceFamily::SlTensor { n, k } => {
            let ty = SimpleType::new(Family::A, n - 1)?;
            let wt = if n - k == k {
                Weight::fundamental(n - 1, k).scale(2)
            } else {
                Weight::fundamental(n - 1, k).add(&Weight::fundamental(n - 1, n - k))
            };
            weyl_dim(ty, &wt)
        }
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl LatticeModule {
    /// Generate `𝒰_ℤ v⁺` from the highest monomial by closing under every
    /// divided power, then certify closure on the final basis.
    pub fn generate(space: WedgeSpace, caps: &Caps) -> Result<LatticeModule> {
        let mut blocks: Vec<HermiteLattice> =
            space.blocks().iter().map(|b| HermiteLattice::new(b.members.len())).collect();
        let start = space
            .monomial_index(&space.highest_monomial())
            .ok_or_else(|| Error::Internal("highest monomial missing".into()))?;
        let mut queue = VecDeque::new();
        let sb = space.block_of(start);
        let mut v = vec![0i64; blocks[sb].dim()];
        v[space.local_of(start)] = 1;
        blocks[sb].insert(&v)?;
        queue.push_back((sb, v));
        let mut insertions = 1;
        while let Some((b, v)) = queue.pop_front() {
            let sparse = to_sparse(&space, b, &v);
            for op in space.operators() {
                let img = space.apply_sparse(op, &sparse)?;
                let Some(tb) = block_of_image(&space, &img)? else { continue };
                let dense = to_dense(&space, tb, blocks[tb].dim(), &img);
                if blocks[tb].insert(&dense)? {
                    insertions += 1;
                    if insertions > caps.max_insertions {
                        return Err(Error::Resource(format!(
                            "lattice closure exceeded {} insertions",
                            caps.max_insertions
                        )));
                    }
                    queue.push_back((tb, dense));
                }
            }
        }
        LatticeModule::from_blocks(space, blocks, insertions)
    }

    pub(crate) fn from_blocks(
        space: WedgeSpace,
        blocks: Vec<HermiteLattice>,
        insertions: usize,
    ) -> Result<LatticeModule> {
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut rank = 0;
        for b in &blocks {
            offsets.push(rank);
            rank += b.rank();
        }
        let opposite: Vec<Option<usize>> =
            (0..blocks.len()).map(|b| space.opposite_block(b)).collect();
        let mut module = LatticeModule {
            space,
            blocks,
            offsets,
            rank,
            gram: Vec::new(),
            opposite,
            radical: Vec::new(),
            radical_basis: Vec::new(),
            insertions,
            closure_checks: 0,
        };
        module.certify_closure()?;
        module.compute_gram()?;
        module.compute_radical();
        Ok(module)
    }

    fn certify_closure(&mut self) -> Result<()> {
        let mut checks = 0;
        for b in 0..self.blocks.len() {
            for row in self.blocks[b].rows() {
                let sparse = to_sparse(&self.space, b, row);
                for op in self.space.operators() {
                    let img = self.space.apply_sparse(op, &sparse)?;
                    checks += 1;
                    let Some(tb) = block_of_image(&self.space, &img)? else { continue };
                    let dense = to_dense(&self.space, tb, self.blocks[tb].dim(), &img);
                    if !self.blocks[tb].contains(&dense)? {
                        return Err(Error::Internal("generated lattice is not operator-stable".into()));
                    }
                }
            }
        }
        self.closure_checks = checks;
        Ok(())
    }

    fn compute_gram(&mut self) -> Result<()> {
        let space = &self.space;
        let mut gram = Vec::with_capacity(self.blocks.len());
        for b in 0..self.blocks.len() {
            let Some(o) = self.opposite[b] else {
                gram.push(Vec::new());
                continue;
            };
            let members = &space.blocks()[b].members;
            // For each local position in b: the local position of its dual in o and the sign.
            let duals: Vec<(usize, i64)> = members
                .iter()
                .map(|&m| {
                    let (d, s) = space.dual_of(m as usize);
                    (space.local_of(d), s)
                })
                .collect();
            let mut g = Vec::with_capacity(self.blocks[b].rank());
            for u in self.blocks[b].rows() {
                let mut line = Vec::with_capacity(self.blocks[o].rank());
                for w in self.blocks[o].rows() {
                    let mut acc: i128 = 0;
                    for (a, &ua) in u.iter().enumerate() {
                        if ua != 0 {
                            let (d, s) = duals[a];
                            acc += ua as i128 * w[d] as i128 * s as i128;
                        }
                    }
                    line.push(
                        i64::try_from(acc)
                            .map_err(|_| Error::Resource("Gram entry exceeds 64 bits".into()))?,
                    );
                }
                g.push(line);
            }
            gram.push(g);
        }
        self.gram = gram;
        Ok(())
    }

    fn compute_radical(&mut self) {
        let mut radical = Vec::with_capacity(self.blocks.len());
        let mut basis = Vec::with_capacity(self.blocks.len());
        for b in 0..self.blocks.len() {
            let n = self.blocks[b].rank();
            let ncols = self.opposite[b].map_or(0, |o| self.blocks[o].rank());
            let rows: Vec<BitVec> = (0..n)
                .map(|i| {
                    let mut r = BitVec::zeros(ncols);
                    for j in 0..ncols {
                        if self.gram[b][i][j] & 1 == 1 {
                            r.set(j, true);
                        }
                    }
                    r
                })
                .collect();
            let kernel = left_kernel(&rows, ncols);
            let mut ech = Echelon::new(n);
            for k in &kernel {
                ech.insert_plain(k.clone());
            }
            radical.push(ech);
            basis.push(kernel);
        }
        self.radical = radical;
        self.radical_basis = basis;
    }

    pub fn space(&self) -> &WedgeSpace {
        &self.space
    }

    pub fn family(&self) -> SpaceFamily {
        self.space.family()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn insertions(&self) -> usize {
        self.insertions
    }

    /// Number of (basis vector, operator) pairs checked after closure.
    pub fn closure_checks(&self) -> usize {
        self.closure_checks
    }

    pub fn block_lattices(&self) -> &[HermiteLattice] {
        &self.blocks
    }

    pub fn block_offset(&self, b: usize) -> usize {
        self.offsets[b]
    }

    pub fn opposite_block(&self, b: usize) -> Option<usize> {
        self.opposite[b]
    }

    /// `(block, row)` of a global lattice index.
    pub fn locate(&self, g: usize) -> (usize, usize) {
        // The last block starting at or before g; empty blocks share offsets
        // with their successor, so this is the block that holds g.
        let b = self.offsets.partition_point(|&o| o <= g) - 1;
        (b, g - self.offsets[b])
    }

    pub fn gram_block(&self, b: usize) -> &[Vec<i64>] {
        &self.gram[b]
    }

    /// `⟨basis g, basis h⟩` for global lattice indices.
    pub fn gram_entry(&self, g: usize, h: usize) -> i64 {
        let (b, i) = self.locate(g);
        let (c, j) = self.locate(h);
        if self.opposite[b] == Some(c) {
            self.gram[b][i][j]
        } else {
            0
        }
    }

    /// Basis of the mod-2 radical of the form, in global lattice coordinates.
    pub fn radical_basis(&self) -> Vec<BitVec> {
        let mut out = Vec::new();
        for (b, kernel) in self.radical_basis.iter().enumerate() {
            for k in kernel {
                let mut v = BitVec::zeros(self.rank);
                for i in k.ones() {
                    v.set(self.offsets[b] + i, true);
                }
                out.push(v);
            }
        }
        out
    }

    pub fn radical_dim(&self) -> usize {
        self.radical_basis.iter().map(Vec::len).sum()
    }

    pub(crate) fn block_radical(&self, b: usize) -> &Echelon {
        &self.radical[b]
    }

    /// Basis vector `g` as an ambient vector.
    pub fn basis_vector(&self, g: usize) -> IntWedgeVector {
        let (b, i) = self.locate(g);
        let sparse = to_sparse(&self.space, b, &self.blocks[b].rows()[i]);
        self.space.from_sparse(&sparse)
    }

    /// Integer lattice coordinates of a weight vector of the lattice given in
    /// sparse ambient form, as `(global index, coefficient)`.
    pub(crate) fn coords_of_sparse(&self, img: &[(u32, i64)]) -> Result<Vec<(usize, i64)>> {
        let Some(b) = block_of_image(&self.space, img)? else { return Ok(Vec::new()) };
        let dense = to_dense(&self.space, b, self.blocks[b].dim(), img);
        let coords = self.blocks[b]
            .coordinates(&dense)?
            .ok_or_else(|| Error::Internal("operator image left the lattice".into()))?;
        Ok(coords
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .map(|(i, c)| (self.offsets[b] + i, c))
            .collect())
    }

    /// Integer lattice coordinates of `op` applied to basis vector `g`.
    pub fn operator_image(&self, op: &ChevalleyOperator, g: usize) -> Result<Vec<(usize, i64)>> {
        let (b, i) = self.locate(g);
        let sparse = to_sparse(&self.space, b, &self.blocks[b].rows()[i]);
        let img = self.space.apply_sparse(op, &sparse)?;
        self.coords_of_sparse(&img)
    }

    /// Integer lattice coordinates of an ambient vector, or `None` when it is
    /// not in the lattice.
    pub fn coordinates(&self, v: &IntWedgeVector) -> Result<Option<Vec<(usize, i64)>>> {
        let sparse = self.space.to_sparse(v)?;
        let mut per_block: Vec<Vec<(u32, i64)>> = vec![Vec::new(); self.blocks.len()];
        for (i, c) in sparse {
            per_block[self.space.block_of(i as usize)].push((i, c));
        }
        let mut out = Vec::new();
        for (b, part) in per_block.iter().enumerate() {
            if part.is_empty() {
                continue;
            }
            let dense = to_dense(&self.space, b, self.blocks[b].dim(), part);
            match self.blocks[b].coordinates(&dense)? {
                None => return Ok(None),
                Some(c) => out.extend(
                    c.into_iter()
                        .enumerate()
                        .filter(|&(_, x)| x != 0)
                        .map(|(i, x)| (self.offsets[b] + i, x)),
                ),
            }
        }
        Ok(Some(out))
    }

    /// Lattice coordinates mod 2 of an ambient vector whose reduction mod 2
    /// lies in the image of the lattice; `None` otherwise.
    pub fn coordinates_mod2(&self, v: &IntWedgeVector) -> Result<Option<BitVec>> {
        let odd = v.odd_support();
        let mut per_block: Vec<Vec<usize>> = vec![Vec::new(); self.blocks.len()];
        for m in &odd {
            let i = self
                .space
                .monomial_index(m)
                .ok_or_else(|| Error::Input(format!("monomial {m:?} is not in the ambient space")))?;
            per_block[self.space.block_of(i)].push(self.space.local_of(i));
        }
        let mut out = BitVec::zeros(self.rank);
        for (b, locals) in per_block.iter().enumerate() {
            if locals.is_empty() {
                continue;
            }
            let lat = &self.blocks[b];
            let rows: Vec<BitVec> = lat
                .rows()
                .iter()
                .map(|r| BitVec::from_bools(&r.iter().map(|x| x & 1 == 1).collect::<Vec<_>>()))
                .collect();
            let (ech, _) = crate::gf2::tagged_echelon(&rows, lat.dim());
            let mut target = BitVec::zeros(lat.dim());
            for &i in locals {
                target.set(i, true);
            }
            match crate::gf2::solve_with(&ech, rows.len(), &target) {
                None => return Ok(None),
                Some(c) => {
                    for i in c.ones() {
                        out.set(self.offsets[b] + i, true);
                    }
                }
            }
        }
        Ok(Some(out))
    }

    /// `q_ℤ` of the 0/1 lift of `v` in lattice coordinates.
    pub fn q_of_lift(&self, v: &BitVec) -> i128 {
        let mut per_block: Vec<Vec<usize>> = vec![Vec::new(); self.blocks.len()];
        for g in v.ones() {
            let (b, i) = self.locate(g);
            per_block[b].push(i);
        }
        let mut q: i128 = 0;
        for b in 0..self.blocks.len() {
            let Some(o) = self.opposite[b] else { continue };
            for &i in &per_block[b] {
                for &j in &per_block[o] {
                    q += self.gram[b][i][j] as i128;
                }
            }
        }
        q
    }

    /// Ranks of the weight blocks, keyed by weight in `ε` coordinates.
    pub fn weight_multiplicities(&self) -> Vec<(Vec<i8>, usize)> {
        self.space
            .blocks()
            .iter()
            .zip(&self.blocks)
            .filter(|(_, l)| l.rank() > 0)
            .map(|(b, l)| (b.weight.clone(), l.rank()))
            .collect()
    }
}

pub(crate) fn to_sparse(space: &WedgeSpace, b: usize, v: &[i64]) -> Vec<(u32, i64)> {
    let members = &space.blocks()[b].members;
    let mut out: Vec<(u32, i64)> =
        v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(a, &c)| (members[a], c)).collect();
    out.sort_unstable();
    out
}

fn to_dense(space: &WedgeSpace, b: usize, dim: usize, img: &[(u32, i64)]) -> Vec<i64> {
    let mut dense = vec![0i64; dim];
    for &(i, c) in img {
        debug_assert_eq!(space.block_of(i as usize), b);
        dense[space.local_of(i as usize)] = c;
    }
    dense
}

fn block_of_image(space: &WedgeSpace, img: &[(u32, i64)]) -> Result<Option<usize>> {
    let Some(&(first, _)) = img.first() else { return Ok(None) };
    let b = space.block_of(first as usize);
    if img.iter().any(|&(i, _)| space.block_of(i as usize) != b) {
        return Err(Error::Internal("operator image is not a weight vector".into()));
    }
    Ok(Some(b))
}

/// Build the ambient space and generate its Weyl lattice.
pub fn generate_weyl_lattice_c(l: usize, k: usize, caps: &Caps) -> Result<LatticeModule> {
    LatticeModule::generate(WedgeSpace::symplectic(l, k, caps)?, caps)
}

pub fn generate_weyl_lattice_a(n: usize, k: usize, caps: &Caps) -> Result<LatticeModule> {
    if 2 * k > n {
        return Err(Error::Input(format!("need k ≤ n - k, got n = {n}, k = {k}")));
    }
    LatticeModule::generate(WedgeSpace::sl_tensor(n, k, caps)?, caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let caps = Caps::default();
        assert_eq!(generate_weyl_lattice_c(2, 2, &caps).unwrap().rank(), 5);
        assert_eq!(generate_weyl_lattice_c(3, 2, &caps).unwrap().rank(), 14);
        assert_eq!(generate_weyl_lattice_c(4, 3, &caps).unwrap().rank(), 48);
        assert_eq!(generate_weyl_lattice_a(3, 1, &caps).unwrap().rank(), 8);
        assert_eq!(generate_weyl_lattice_a(4, 1, &caps).unwrap().rank(), 15);
    }

    #[test]
    fn locate_round_trips() {
        let m = generate_weyl_lattice_c(3, 2, &Caps::default()).unwrap();
        for g in 0..m.rank() {
            let (b, i) = m.locate(g);
            assert_eq!(m.block_offset(b) + i, g);
            assert!(i < m.block_lattices()[b].rank());
        }
    }
}
