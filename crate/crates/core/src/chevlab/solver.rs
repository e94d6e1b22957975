//! Linear-system orthogonality oracle. On `L = (lattice mod 2)/rad b` it
//! looks for a quadratic form with polarization `b` that is invariant under
//! every root subgroup `x_{±α}(t)` for simple `α`.

use std::collections::HashMap;

use super::lattice::{generate_weyl_lattice_a, generate_weyl_lattice_c, LatticeModule};
use super::space::Caps;
use crate::classify::Verdict;
use crate::error::{Error, Result};
use crate::gf2::{system_consistent, BitVec};

/// `L` with a basis of lattice basis rows, its form and its operators.
struct Quotient<'a> {
    module: &'a LatticeModule,
    /// Per block, local lattice row → quotient index (non-pivots of the radical).
    index: Vec<HashMap<usize, usize>>,
    /// Quotient index → (block, local row).
    reps: Vec<(usize, usize)>,
}

impl<'a> Quotient<'a> {
    fn new(module: &'a LatticeModule) -> Quotient<'a> {
        let nblocks = module.block_lattices().len();
        let mut index = vec![HashMap::new(); nblocks];
        let mut reps = Vec::new();
        for (b, lat) in module.block_lattices().iter().enumerate() {
            let pivots = module.block_radical(b).pivots();
            for i in 0..lat.rank() {
                if !pivots.contains(&i) {
                    index[b].insert(i, reps.len());
                    reps.push((b, i));
                }
            }
        }
        Quotient { module, index, reps }
    }

    fn dim(&self) -> usize {
        self.reps.len()
    }

    fn block(&self, x: usize) -> usize {
        self.reps[x].0
    }

    /// Image in `L` of a lattice vector given by global integer coordinates.
    fn reduce(&self, coords: &[(usize, i64)]) -> Vec<usize> {
        let Some(&(g0, _)) = coords.first() else { return Vec::new() };
        let (b, _) = self.module.locate(g0);
        let lat_rank = self.module.block_lattices()[b].rank();
        let mut v = BitVec::zeros(lat_rank);
        for &(g, c) in coords {
            if c & 1 == 1 {
                v.flip(g - self.module.block_offset(b));
            }
        }
        self.module.block_radical(b).reduce(&mut v, None);
        v.ones().map(|i| self.index[b][&i]).collect()
    }

    fn b(&self, x: usize, y: usize) -> bool {
        let (bx, i) = self.reps[x];
        let (by, j) = self.reps[y];
        self.module.opposite_block(bx) == Some(by) && self.module.gram_block(bx)[i][j] & 1 == 1
    }

    fn b_sets(&self, u: &[usize], v: &[usize]) -> bool {
        let mut acc = false;
        for &x in u {
            for &y in v {
                acc ^= self.b(x, y);
            }
        }
        acc
    }

    /// `Q(Σ_{x ∈ s} x)` as (linear part in the unknowns `Q(x)`, constant).
    fn q_expr(&self, s: &[usize]) -> (Vec<usize>, bool) {
        let mut constant = false;
        for (a, &x) in s.iter().enumerate() {
            for &y in &s[a + 1..] {
                constant ^= self.b(x, y);
            }
        }
        (s.to_vec(), constant)
    }
}

pub fn oracle_solver(module: &LatticeModule) -> Result<Verdict> {
    let quot = Quotient::new(module);
    let space = module.space();
    let n = quot.dim();
    for x in 0..n {
        if quot.b(x, x) {
            return Err(Error::Internal("the induced form is not alternating".into()));
        }
    }
    let roots = space.roots();
    let relevant: Vec<usize> = (0..roots.len())
        .filter(|&ri| {
            roots[ri].simple
                || roots.iter().any(|r| r.simple && r.root.iter().zip(&roots[ri].root).all(|(a, b)| *a == -*b))
        })
        .collect();

    let mut equations: Vec<(BitVec, bool)> = Vec::new();
    for &ri in &relevant {
        let max_power = (1..).take_while(|&m| space.operator(ri, m).is_some()).count();
        // images[m][x] = X^{(m)} x in L.
        let mut images: Vec<Vec<Vec<usize>>> = vec![(0..n).map(|x| vec![x]).collect()];
        for m in 1..=max_power {
            let op = space.operator(ri, m).expect("power counted above");
            let mut level = Vec::with_capacity(n);
            for &(b, i) in &quot.reps {
                let coords = module.operator_image(op, module.block_offset(b) + i)?;
                level.push(quot.reduce(&coords));
            }
            images.push(level);
        }
        for x in 0..n {
            for e in 1..=2 * max_power {
                let mut row = BitVec::zeros(n);
                let mut rhs = false;
                if e % 2 == 0 {
                    let (lin, c) = quot.q_expr(&images[e / 2][x]);
                    for j in lin {
                        row.flip(j);
                    }
                    rhs ^= c;
                }
                for m in 0..=max_power {
                    let mm = e as isize - m as isize;
                    if mm <= m as isize || mm > max_power as isize {
                        continue;
                    }
                    rhs ^= quot.b_sets(&images[m][x], &images[mm as usize][x]);
                }
                if !row.is_zero() || rhs {
                    equations.push((row, rhs));
                }
            }
        }
        check_b_invariance(&quot, ri, &images, max_power)?;
    }
    Ok(if system_consistent(&equations, n) { Verdict::Orthogonal } else { Verdict::SymplecticOnly })
}

/// `b(x_α(t)u, x_α(t)v) = b(u, v)` coefficientwise, for basis vectors `u`, `v`
/// whose weights make the coefficient possibly nonzero.
fn check_b_invariance(quot: &Quotient<'_>, ri: usize, images: &[Vec<Vec<usize>>], max_power: usize) -> Result<()> {
    let space = quot.module.space();
    let root = &space.roots()[ri].root;
    let mut by_block: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..quot.dim() {
        by_block.entry(quot.block(x)).or_default().push(x);
    }
    for x in 0..quot.dim() {
        let wx = &space.blocks()[quot.block(x)].weight;
        for e in 1..=2 * max_power {
            let target: Vec<i8> = wx.iter().zip(root).map(|(a, r)| -(a + e as i8 * r)).collect();
            let Some(tb) = space.block_with_weight(&target) else { continue };
            let Some(ys) = by_block.get(&tb) else { continue };
            for &y in ys {
                let mut acc = false;
                for m in 0..=max_power.min(e) {
                    let mm = e - m;
                    if mm > max_power {
                        continue;
                    }
                    acc ^= quot.b_sets(&images[m][x], &images[mm][y]);
                }
                if acc {
                    return Err(Error::Internal("the induced form is not invariant".into()));
                }
            }
        }
    }
    Ok(())
}

pub fn oracle_solver_c(l: usize, k: usize, caps: &Caps) -> Result<Verdict> {
    oracle_solver(&generate_weyl_lattice_c(l, k, caps)?)
}

pub fn oracle_solver_a(n: usize, k: usize, caps: &Caps) -> Result<Verdict> {
    oracle_solver(&generate_weyl_lattice_a(n, k, caps)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solver_examples() {
        let caps = Caps::default();
        assert_eq!(oracle_solver_c(2, 2, &caps).unwrap(), Verdict::SymplecticOnly);
        assert_eq!(oracle_solver_c(3, 3, &caps).unwrap(), Verdict::Orthogonal);
        assert_eq!(oracle_solver_a(4, 1, &caps).unwrap(), Verdict::Orthogonal);
        assert_eq!(oracle_solver_c(2, 1, &caps).unwrap(), Verdict::SymplecticOnly);
    }
}
