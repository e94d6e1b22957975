//! Composition factors of small Weyl modules, branching to the next smaller
//! group, and dimensions of the irreducible modules that occur.
//!
//! Type `C_l`: factors of `V(ω_r)` are labelled by `j` with `ω_0 = 0`.
//! Type `A_{n-1}`: a pair `(a, b)` with `0 ≤ a ≤ b ≤ n` stands for
//! `L(ω_a + ω_b)`, where `ω_0 = ω_n = 0`. Branching uses the other common
//! labelling `π_{r,s} = L(ω_r + ω_{n-s})` for `0 ≤ r ≤ n - s ≤ n`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{contains_to_base_p, is_prime, nu_p};
use crate::error::{input, Error, Result};
use crate::rootsys::{weyl_dim, Family, SimpleType, Weight};

fn check_char(p: u64) -> Result<()> {
    if !is_prime(p) {
        return input(format!("characteristic {p} is not prime"));
    }
    Ok(())
}

/// `J_p(r)`: the labels `j` of the composition factors `L(ω_j)` of `V(ω_r)` for `C_l`,
/// in decreasing order.
pub fn comp_factors_c(l: usize, r: usize, p: u64) -> Result<Vec<usize>> {
    check_char(p)?;
    if l < 2 || r == 0 || r > l {
        return input(format!("need 1 ≤ r ≤ l with l ≥ 2, got l = {l}, r = {r}"));
    }
    let mut out = Vec::new();
    for j in (0..=r).rev().step_by(2) {
        if contains_to_base_p((l + 1 - j) as u64, ((r - j) / 2) as u64, p)? {
            out.push(j);
        }
    }
    Ok(out)
}

/// `J_p(r, s)`: the pairs `(a, b)` of the composition factors `L(ω_a + ω_b)` of
/// `V(ω_r + ω_s)` for `SL_n`, starting with `(r, s)`.
pub fn comp_factors_a(n: usize, r: usize, s: usize, p: u64) -> Result<Vec<(usize, usize)>> {
    check_char(p)?;
    if n < 3 || r == 0 || r >= s || s >= n {
        return input(format!("need 1 ≤ r < s ≤ n - 1, got n = {n}, r = {r}, s = {s}"));
    }
    let mut out = Vec::new();
    for k in 0..=r.min(n - s) {
        if contains_to_base_p((s - r + 1 + 2 * k) as u64, k as u64, p)? {
            out.push((r - k, s + k));
        }
    }
    Ok(out)
}

/// Composition factors of `L_{C_l}(ω_r)` restricted to `C_{l-1}`, as
/// `(label, multiplicity)`. Labels outside `0..=l-1` name the zero module and are dropped.
pub fn branch_c(l: usize, r: usize, p: u64) -> Result<Vec<(usize, u32)>> {
    check_char(p)?;
    if l < 3 || r == 0 || r > l {
        return input(format!("need 1 ≤ r ≤ l with l ≥ 3, got l = {l}, r = {r}"));
    }
    let m = (l + 1 - r) as u64;
    let d = nu_p(m, p)?;
    let pd = p.pow(d);
    let eps = if (m + pd) % (pd * p) == 0 { 0 } else { 1 };
    let mut terms: Vec<(i64, u32)> = vec![(r as i64, 1), (r as i64 - 1, 2)];
    for k in 0..d {
        terms.push((r as i64 - 2 * p.pow(k) as i64, 2));
    }
    terms.push((r as i64 - 2 * pd as i64, eps));
    Ok(collect_terms(terms.into_iter().filter(|&(j, mult)| {
        mult > 0 && j >= 0 && (j as usize) < l
    })
    .map(|(j, mult)| (j as usize, mult))))
}

/// Composition factors of `π_{r,s}` for `SL_n` restricted to `SL_{n-1}`, as
/// `((r', s'), multiplicity)` in the `π` labelling for `SL_{n-1}`.
pub fn branch_a(n: usize, r: usize, s: usize, p: u64) -> Result<Vec<((usize, usize), u32)>> {
    check_char(p)?;
    if n < 3 || r + s > n {
        return input(format!("need n ≥ 3 and 0 ≤ r ≤ n - s, got n = {n}, r = {r}, s = {s}"));
    }
    let m = (n + 1 - (r + s)) as u64;
    let d = nu_p(m, p)?;
    let pd = p.pow(d);
    let eps = if (m + pd) % (pd * p) == 0 { 0 } else { 1 };
    let (r, s) = (r as i64, s as i64);
    let mut terms: Vec<((i64, i64), u32)> = vec![((r, s - 1), 1), ((r - 1, s), 1), ((r, s), 1)];
    for k in 0..d {
        let q = p.pow(k) as i64;
        terms.push(((r - q, s - q), 2));
    }
    terms.push(((r - pd as i64, s - pd as i64), eps));
    let n1 = n as i64 - 1;
    Ok(collect_terms(
        terms
            .into_iter()
            .filter(|&((a, b), mult)| mult > 0 && a >= 0 && b >= 0 && a + b <= n1)
            .map(|((a, b), mult)| ((a as usize, b as usize), mult)),
    ))
}

fn collect_terms<K: PartialEq>(terms: impl Iterator<Item = (K, u32)>) -> Vec<(K, u32)> {
    let mut out: Vec<(K, u32)> = Vec::new();
    for (k, m) in terms {
        match out.iter_mut().find(|(key, _)| *key == k) {
            Some(entry) => entry.1 += m,
            None => out.push((k, m)),
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum DimKey {
    C { l: usize, r: usize, p: u64 },
    A { n: usize, a: usize, b: usize, p: u64 },
}

fn dim_cache() -> &'static RwLock<HashMap<DimKey, BigUint>> {
    static CACHE: OnceLock<RwLock<HashMap<DimKey, BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached(key: DimKey, compute: impl FnOnce() -> Result<BigUint>) -> Result<BigUint> {
    if let Some(v) = dim_cache().read().expect("dimension cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let v = compute()?;
    dim_cache()
        .write()
        .expect("dimension cache poisoned")
        .entry(key)
        .or_insert_with(|| v.clone());
    Ok(v)
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `dim L_{C_l}(ω_r)`, with `r = 0` the trivial module.
pub fn irr_dim_c(l: usize, r: usize, p: u64) -> Result<BigUint> {
    check_char(p)?;
    if r == 0 {
        return Ok(BigUint::one());
    }
    // C_1 = SL_2: L(ω_1) is the natural module.
    if l == 1 && r == 1 {
        return Ok(BigUint::from(2u32));
    }
    cached(DimKey::C { l, r, p }, || {
        let ty = SimpleType::new(Family::C, l)?;
        let mut dim = weyl_dim(ty, &Weight::fundamental(l, r))?;
        for j in comp_factors_c(l, r, p)? {
            if j != r {
                let sub = irr_dim_c(l, j, p)?;
                if sub > dim {
                    return Err(Error::Internal(format!("negative dimension for C{l} ω{r}")));
                }
                dim -= sub;
            }
        }
        Ok(dim)
    })
}

/// `dim L_{SL_n}(ω_a + ω_b)` for `0 ≤ a ≤ b ≤ n`, with `ω_0 = ω_n = 0`.
///
/// The case `a = b` is `L(2ω_a)`, a Frobenius twist of `L(ω_a)` in
/// characteristic 2; other characteristics are rejected there.
pub fn irr_dim_a(n: usize, a: usize, b: usize, p: u64) -> Result<BigUint> {
    check_char(p)?;
    if n < 2 || a > b || b > n {
        return input(format!("need 0 ≤ a ≤ b ≤ n, got n = {n}, a = {a}, b = {b}"));
    }
    let (a, b) = match (a, b) {
        (0, b) if b == n => return Ok(BigUint::one()),
        (0, b) => return Ok(binomial(n, b)),
        (a, b) if b == n => return Ok(binomial(n, a)),
        other => other,
    };
    if a == b {
        if p != 2 {
            return input(format!("L(2ω_{a}) is only covered in characteristic 2"));
        }
        return Ok(binomial(n, a));
    }
    cached(DimKey::A { n, a, b, p }, || {
        let ty = SimpleType::new(Family::A, n - 1)?;
        let mut lam = Weight::zero(n - 1);
        lam.0[a - 1] += 1;
        lam.0[b - 1] += 1;
        let mut dim = weyl_dim(ty, &lam)?;
        for (x, y) in comp_factors_a(n, a, b, p)? {
            if (x, y) != (a, b) {
                let sub = irr_dim_a(n, x, y, p)?;
                if sub > dim {
                    return Err(Error::Internal(format!("negative dimension for n = {n}, ({a}, {b})")));
                }
                dim -= sub;
            }
        }
        Ok(dim)
    })
}

/// `dim π_{r,s}` for `SL_n`, that is `dim L(ω_r + ω_{n-s})`.
pub fn irr_dim_pi(n: usize, r: usize, s: usize, p: u64) -> Result<BigUint> {
    if r + s > n {
        return input(format!("π_({r},{s}) is undefined for n = {n}"));
    }
    irr_dim_a(n, r, n - s, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn type_c_factors() {
        assert_eq!(comp_factors_c(2, 2, 2).unwrap(), vec![2, 0]);
        assert_eq!(comp_factors_c(3, 2, 2).unwrap(), vec![2]);
        assert_eq!(comp_factors_c(3, 3, 2).unwrap(), vec![3, 1]);
        assert!(comp_factors_c(3, 4, 2).is_err());
    }

    #[test]
    fn type_a_factors() {
        assert_eq!(comp_factors_a(5, 1, 4, 2).unwrap(), vec![(1, 4)]);
        assert_eq!(comp_factors_a(3, 1, 2, 2).unwrap(), vec![(1, 2)]);
        assert_eq!(comp_factors_a(6, 1, 5, 2).unwrap(), vec![(1, 5), (0, 6)]);
    }

    #[test]
    fn type_c_branching() {
        assert_eq!(branch_c(3, 2, 2).unwrap(), vec![(2, 1), (1, 2), (0, 2)]);
        assert_eq!(branch_c(4, 1, 2).unwrap(), vec![(1, 1), (0, 2)]);
        // L_{C_2}(ω_3) is zero, so only L(ω_2) survives.
        assert_eq!(branch_c(3, 3, 2).unwrap(), vec![(2, 2)]);
    }

    #[test]
    fn type_a_branching() {
        assert_eq!(branch_a(4, 1, 1, 2).unwrap(), vec![((1, 0), 1), ((0, 1), 1), ((1, 1), 1)]);
        assert_eq!(
            branch_a(5, 1, 1, 2).unwrap(),
            vec![((1, 0), 1), ((0, 1), 1), ((1, 1), 1), ((0, 0), 2)]
        );
    }

    #[test]
    fn irreducible_dimensions() {
        assert_eq!(irr_dim_c(2, 2, 2).unwrap(), big(4));
        assert_eq!(irr_dim_c(3, 3, 2).unwrap(), big(8));
        assert_eq!(irr_dim_c(3, 2, 2).unwrap(), big(14));
        assert_eq!(irr_dim_c(3, 0, 2).unwrap(), big(1));
        assert_eq!(irr_dim_a(4, 1, 3, 2).unwrap(), big(14));
        assert_eq!(irr_dim_a(5, 1, 4, 2).unwrap(), big(24));
        assert_eq!(irr_dim_a(5, 0, 2, 2).unwrap(), big(10));
        assert_eq!(irr_dim_a(4, 2, 2, 2).unwrap(), big(6));
    }

    #[test]
    fn branching_preserves_dimension_example() {
        let total: BigUint = branch_c(3, 2, 2)
            .unwrap()
            .into_iter()
            .map(|(j, m)| irr_dim_c(2, j, 2).unwrap() * BigUint::from(m))
            .sum();
        assert_eq!(total, big(14));
    }
}
