//! The quadratic form `Q = ½ q_ℤ` mod 2, the vectors `γ` that witness a
//! nonzero `Q` on the radical, and the Gram-matrix orthogonality oracle.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::lattice::{generate_weyl_lattice_a, generate_weyl_lattice_c, LatticeModule};
use super::space::{Caps, IntWedgeVector, Monomial, SpaceFamily, WedgeSpace};
use crate::arith::dyadic_offset;
use crate::classify::Verdict;
use crate::error::{Error, Result};
use crate::gf2::{left_kernel, BitVec};

fn subsets_of(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut cur, &mut out);
    out
}

/// `y_{f_1} ∧ ... ∧ y_{f_s}` with `y_i = e_i ∧ e_{-i}`.
pub fn y_wedge(l: usize, f: &[usize]) -> IntWedgeVector {
    let idx: Vec<i32> = f.iter().flat_map(|&i| [i as i32, -(i as i32)]).collect();
    IntWedgeVector::symplectic_wedge(l, &idx)
}

fn check_gamma_hypothesis(x: usize, i: u32, t: usize) -> Result<()> {
    if dyadic_offset(x as u64 + 1, i) != Some(t as u64) {
        return Err(Error::Input(format!(
            "{} is not congruent to 2^{i} + {t} modulo 2^{}",
            x + 1,
            i + 1
        )));
    }
    Ok(())
}

/// `γ = Σ y_F` over the `2^i`-subsets `F` of `[1, l - t]`, an element of
/// `∧^{2^{i+1}} V` for `Sp_{2l}`.
pub fn gamma_vector_c(l: usize, i: u32, t: usize) -> Result<IntWedgeVector> {
    check_gamma_hypothesis(l, i, t)?;
    if l < 1 << (i + 1) {
        return Err(Error::Input(format!("need l ≥ 2^{}, got l = {l}", i + 1)));
    }
    let mut gamma = IntWedgeVector::new();
    let items: Vec<usize> = (1..=l - t).collect();
    for f in subsets_of(&items, 1 << i) {
        gamma.add(&y_wedge(l, &f));
    }
    Ok(gamma)
}

/// `γ = Σ e_F ⊗ e_F^*` over the `2^i`-subsets `F` of `[1, n - t]`.
pub fn gamma_vector_a(n: usize, i: u32, t: usize) -> Result<IntWedgeVector> {
    check_gamma_hypothesis(n, i, t)?;
    if n <= 1 << (i + 1) {
        return Err(Error::Input(format!("need n > 2^{}, got n = {n}", i + 1)));
    }
    let mut gamma = IntWedgeVector::new();
    let items: Vec<usize> = (1..=n - t).collect();
    for f in subsets_of(&items, 1 << i) {
        gamma.add(&IntWedgeVector::sl_tensor(&f, &f));
    }
    Ok(gamma)
}

/// Whether `q_ℤ` is even on the lattice, so that `Q = ½ q_ℤ` makes sense.
pub fn has_even_form(family: SpaceFamily) -> bool {
    match family {
        SpaceFamily::Symplectic { k, .. } => k % 2 == 0,
        SpaceFamily::SlTensor { .. } => true,
    }
}

/// `Q(v) = ½ q_ℤ(v̂) mod 2` where `v̂` is the 0/1 lift of `v` in lattice coordinates.
pub fn q_half_eval(module: &LatticeModule, v: &BitVec) -> Result<bool> {
    if !has_even_form(module.family()) {
        return Err(Error::Input("the form is not even on this lattice".into()));
    }
    if v.len() != module.rank() {
        return Err(Error::Input(format!("expected {} coordinates, got {}", module.rank(), v.len())));
    }
    let q = module.q_of_lift(v);
    if q % 2 != 0 {
        return Err(Error::Internal(format!("q_ℤ = {q} is odd on a lattice vector")));
    }
    Ok((q / 2).rem_euclid(2) == 1)
}

/// `Q` of an ambient vector whose reduction mod 2 lies in the lattice.
pub fn q_half_of_vector(module: &LatticeModule, v: &IntWedgeVector) -> Result<bool> {
    let coords = module
        .coordinates_mod2(v)?
        .ok_or_else(|| Error::Input("vector is not in the lattice mod 2".into()))?;
    q_half_eval(module, &coords)
}

/// The pair `α = e_1 ∧ ... ∧ e_k`, `β` its partner with `⟨α, β⟩ = 1`, so
/// that `q_ℤ(α + β) = 2`.
pub fn evenness_witness(family: SpaceFamily) -> (IntWedgeVector, IntWedgeVector) {
    match family {
        SpaceFamily::Symplectic { l, k } => {
            let pos: Vec<i32> = (1..=k as i32).collect();
            let neg: Vec<i32> = pos.iter().map(|i| -i).collect();
            (IntWedgeVector::symplectic_wedge(l, &pos), IntWedgeVector::symplectic_wedge(l, &neg))
        }
        SpaceFamily::SlTensor { n, k } => {
            let top: Vec<usize> = (1..=k).collect();
            let bottom: Vec<usize> = (n - k + 1..=n).rev().collect();
            (IntWedgeVector::sl_tensor(&top, &bottom), IntWedgeVector::sl_tensor(&bottom, &top))
        }
    }
}

/// Gram-matrix oracle: `L(λ) = V(λ)/rad b_Q` carries a nonzero invariant
/// quadratic form iff `Q` vanishes on the radical.
pub fn oracle_gram(module: &LatticeModule) -> Result<Verdict> {
    if !has_even_form(module.family()) {
        return Err(Error::Input("the Gram oracle needs an even lattice".into()));
    }
    for r in module.radical_basis() {
        if q_half_eval(module, &r)? {
            return Ok(Verdict::SymplecticOnly);
        }
    }
    Ok(Verdict::Orthogonal)
}

pub fn oracle_gram_c(l: usize, r: usize, caps: &Caps) -> Result<Verdict> {
    if r % 2 != 0 || r < 2 || r > l {
        return Err(Error::Input(format!("need even 2 ≤ r ≤ l, got l = {l}, r = {r}")));
    }
    oracle_gram(&generate_weyl_lattice_c(l, r, caps)?)
}

pub fn oracle_gram_a(n: usize, k: usize, caps: &Caps) -> Result<Verdict> {
    oracle_gram(&generate_weyl_lattice_a(n, k, caps)?)
}

/// Sets of `s` disjoint pairs `(j, k)` with `1 ≤ k < j ≤ top`.
fn disjoint_pairs(top: usize, s: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut cur: Vec<(usize, usize)> = Vec::new();
    fn rec(top: usize, s: usize, used: u64, min_k: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for k in min_k..=top {
            if used >> k & 1 == 1 {
                continue;
            }
            for j in k + 1..=top {
                if used >> j & 1 == 1 {
                    continue;
                }
                cur.push((j, k));
                rec(top, s, used | 1 << k | 1 << j, k + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(top, s, 0, 1, &mut cur, &mut out);
    out
}

/// Expand `Π (u_{j_r} - u_{k_r})` into `Σ_f (-1)^{#{r : f_r = k_r}} term(f)`.
fn signed_expansion(pairs: &[(usize, usize)], term: impl Fn(&[usize]) -> IntWedgeVector, minus_on_k: bool) -> IntWedgeVector {
    let mut out = IntWedgeVector::new();
    for mask in 0u32..1 << pairs.len() {
        let f: Vec<usize> = pairs
            .iter()
            .enumerate()
            .map(|(r, &(j, k))| if mask >> r & 1 == 1 { k } else { j })
            .collect();
        let flips = mask.count_ones() as usize;
        let minus = if minus_on_k { flips } else { pairs.len() - flips };
        let mut sorted = f.clone();
        sorted.sort_unstable();
        let v = term(&sorted);
        if minus % 2 == 0 {
            out.add(&v);
        } else {
            out.sub(&v);
        }
    }
    out
}

/// Spanning vectors `(y_{j_1} - y_{k_1}) ∧ ... ∧ (y_{j_s} - y_{k_s})` of the
/// zero weight space of `V(ω_k)_ℤ`, `k = 2s`.
pub fn zero_weight_generators_c(l: usize, k: usize) -> Result<Vec<IntWedgeVector>> {
    if k % 2 != 0 || k == 0 || k > l {
        return Err(Error::Input(format!("need even 2 ≤ k ≤ l, got l = {l}, k = {k}")));
    }
    Ok(disjoint_pairs(l, k / 2)
        .iter()
        .map(|pairs| signed_expansion(pairs, |f| y_wedge(l, f), true))
        .collect())
}

/// Spanning vectors `Σ_f (-1)^{#{r : f_r = j_r}} e_F ⊗ e_F^*` of the zero
/// weight space of `V(ω_k + ω_{n-k})_ℤ`.
pub fn zero_weight_generators_a(n: usize, k: usize) -> Result<Vec<IntWedgeVector>> {
    if k == 0 || 2 * k >= n {
        return Err(Error::Input(format!("need 1 ≤ k < n - k, got n = {n}, k = {k}")));
    }
    Ok(disjoint_pairs(n, k)
        .iter()
        .map(|pairs| signed_expansion(pairs, |f| IntWedgeVector::sl_tensor(f, f), false))
        .collect())
}

/// Dimension over GF(2) of the zero-weight vectors of the ambient space
/// killed by every divided power `X_α^{(m)}`.
pub fn fixed_space_dim(space: &WedgeSpace) -> Result<usize> {
    Ok(fixed_space(space)?.len())
}

/// A basis of the fixed space, as sets of zero-weight monomials.
pub fn fixed_space(space: &WedgeSpace) -> Result<Vec<Vec<Monomial>>> {
    let Some(zb) = space.zero_block() else { return Ok(Vec::new()) };
    let members = &space.blocks()[zb].members;
    let mut columns: HashMap<(usize, u32), usize> = HashMap::new();
    let mut images: Vec<Vec<usize>> = Vec::with_capacity(members.len());
    for &m in members {
        let mut hits = Vec::new();
        for (oi, op) in space.operators().iter().enumerate() {
            for &(j, c) in op.column(m as usize) {
                if c % 2 != 0 {
                    let next = columns.len();
                    hits.push(*columns.entry((oi, j)).or_insert(next));
                }
            }
        }
        images.push(hits);
    }
    let ncols = columns.len();
    let rows: Vec<BitVec> = images
        .iter()
        .map(|hits| {
            let mut r = BitVec::zeros(ncols);
            for &h in hits {
                r.flip(h);
            }
            r
        })
        .collect();
    Ok(left_kernel(&rows, ncols)
        .into_iter()
        .map(|k| k.ones().map(|i| space.monomials()[members[i] as usize]).collect())
        .collect())
}

/// The sum of all `y_F` (symplectic) or `e_F ⊗ e_F^*` (`SL_n`) with `|F| = k/2` or `k`.
pub fn full_gamma(family: SpaceFamily) -> Result<IntWedgeVector> {
    let mut out = IntWedgeVector::new();
    match family {
        SpaceFamily::Symplectic { l, k } => {
            if k % 2 != 0 {
                return Err(Error::Input("no zero weight space for odd degree".into()));
            }
            let items: Vec<usize> = (1..=l).collect();
            for f in subsets_of(&items, k / 2) {
                out.add(&y_wedge(l, &f));
            }
        }
        SpaceFamily::SlTensor { n, k } => {
            let items: Vec<usize> = (1..=n).collect();
            for f in subsets_of(&items, k) {
                out.add(&IntWedgeVector::sl_tensor(&f, &f));
            }
        }
    }
    Ok(out)
}

/// Whether `v` mod 2 pairs to zero with every lattice basis vector.
pub fn in_radical_mod2(module: &LatticeModule, v: &IntWedgeVector) -> Result<bool> {
    let space = module.space();
    let odd = v.odd_support();
    for g in 0..module.rank() {
        let b = module.basis_vector(g);
        let mut acc = BigInt::default();
        for m in &odd {
            let i = space
                .monomial_index(m)
                .ok_or_else(|| Error::Input(format!("monomial {m:?} is not in the ambient space")))?;
            let (d, s) = space.dual_of(i);
            if let Some(c) = b.terms.get(&space.monomials()[d]) {
                acc += c * s;
            }
        }
        if acc % 2 != BigInt::default() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_examples() {
        let g = gamma_vector_c(2, 0, 0).unwrap();
        let mut expect = y_wedge(2, &[1]);
        expect.add(&y_wedge(2, &[2]));
        assert_eq!(g, expect);
        assert_eq!(gamma_vector_c(4, 0, 0).unwrap().terms.len(), 4);
        assert!(gamma_vector_c(3, 0, 0).is_err());
        assert!(gamma_vector_a(2, 0, 0).is_err());
        assert_eq!(gamma_vector_a(6, 0, 0).unwrap().terms.len(), 6);
    }

    #[test]
    fn zero_weight_generator_examples() {
        let gens = zero_weight_generators_c(2, 2).unwrap();
        assert_eq!(gens.len(), 1);
        let mut expect = y_wedge(2, &[2]);
        expect.sub(&y_wedge(2, &[1]));
        assert_eq!(gens[0], expect);
    }

    #[test]
    fn gram_oracle_examples() {
        let caps = Caps::default();
        assert_eq!(oracle_gram_c(2, 2, &caps).unwrap(), Verdict::SymplecticOnly);
        assert_eq!(oracle_gram_c(3, 2, &caps).unwrap(), Verdict::Orthogonal);
        assert_eq!(oracle_gram_c(4, 2, &caps).unwrap(), Verdict::Orthogonal);
    }

    #[test]
    fn q_examples() {
        let caps = Caps::default();
        let m = generate_weyl_lattice_c(2, 2, &caps).unwrap();
        let (a, b) = evenness_witness(m.family());
        let mut ab = a.clone();
        ab.add(&b);
        assert!(q_half_of_vector(&m, &ab).unwrap());
        assert!(q_half_of_vector(&m, &gamma_vector_c(2, 0, 0).unwrap()).unwrap());
        assert!(!q_half_eval(&m, &BitVec::zeros(m.rank())).unwrap());
    }
}
