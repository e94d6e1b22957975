//! Root data of the simple types, weights in the fundamental-weight basis, and
//! the duality invariants built on them.
//!
//! Simple roots are numbered as in Bourbaki. Positive roots are generated from
//! the Cartan matrix by closing the simple roots under root strings, so none of
//! the root tables are typed in by hand.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => input(format!("unknown family {other:?}")),
        }
    }
}

/// A simple type such as `C6` or `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<SimpleType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return input(format!("{}{} is not a simple type", family.letter(), rank));
        }
        Ok(SimpleType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every simple type of rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SimpleType> {
        let s = s.trim();
        let mut chars = s.chars();
        let family: Family = match chars.next() {
            Some(c) => c.to_string().parse()?,
            None => return input("empty type"),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Input(format!("bad rank in {s:?}")))?;
        SimpleType::new(family, rank)
    }
}

/// A dominant weight, given by its coefficients on the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    /// The fundamental weight ω_i, with `i` counted from 1.
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut w = Weight::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Coefficient of ω_i, with `i` counted from 1.
    pub fn m(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Weight> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Input(format!("bad weight coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

pub(crate) fn check_weight(ty: SimpleType, lambda: &Weight) -> Result<()> {
    if lambda.len() != ty.rank() {
        return input(format!(
            "weight {lambda} has {} coefficients but {ty} has rank {}",
            lambda.len(),
            ty.rank()
        ));
    }
    Ok(())
}

const E8_CARTAN: [[i64; 8]; 8] = [
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
];

const F4_CARTAN: [[i64; 4]; 4] = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]];

const G2_CARTAN: [[i64; 2]; 2] = [[2, -1], [-3, 2]];

/// Cartan matrix with entries `⟨α_i, α_j^∨⟩` (row `i`, column `j`).
pub fn cartan_matrix(ty: SimpleType) -> Vec<Vec<i64>> {
    let l = ty.rank();
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match ty.family() {
        Family::A => chain(&mut a, l),
        Family::B => {
            chain(&mut a, l);
            a[l - 2][l - 1] = -2;
        }
        Family::C => {
            chain(&mut a, l);
            a[l - 1][l - 2] = -2;
        }
        Family::D => {
            chain(&mut a, l - 1);
            a[l - 3][l - 1] = -1;
            a[l - 1][l - 3] = -1;
        }
        Family::E => {
            for i in 0..l {
                for j in 0..l {
                    a[i][j] = E8_CARTAN[i][j];
                }
            }
        }
        Family::F => {
            for i in 0..4 {
                a[i].copy_from_slice(&F4_CARTAN[i]);
            }
        }
        Family::G => {
            for i in 0..2 {
                a[i].copy_from_slice(&G2_CARTAN[i]);
            }
        }
    }
    a
}

/// Half the squared lengths of the simple roots, normalised so short roots give 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // Ratios along edges are 1, 2, 3 or their inverses and a Dynkin diagram has
    // at most one multiple edge, so a start value of 6 keeps everything integral.
    let mut d = vec![0i64; n];
    d[0] = 6;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j] == 0 {
                d[j] = d[i] * cartan[j][i] / cartan[i][j];
                stack.push(j);
            }
        }
    }
    let g = d.iter().fold(0, |g, &x| gcd(g, x));
    d.iter().map(|x| x / g).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Positive roots, coroot pairings and the diagram involution `-w_0` of a simple type.
#[derive(Debug, Clone)]
pub struct RootDatum {
    ty: SimpleType,
    cartan: Vec<Vec<i64>>,
    half_norms: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    minus_w0: Vec<usize>,
}

impl RootDatum {
    pub fn new(ty: SimpleType) -> RootDatum {
        let cartan = cartan_matrix(ty);
        let half_norms = symmetrizer(&cartan);
        let positive_roots = positive_roots(&cartan);
        let coroots = positive_roots
            .iter()
            .map(|beta| {
                let h = half_norm(&cartan, &half_norms, beta);
                beta.iter()
                    .zip(&half_norms)
                    .map(|(b, d)| {
                        assert_eq!((b * d) % h, 0, "coroot of {beta:?} is not integral");
                        b * d / h
                    })
                    .collect()
            })
            .collect();
        RootDatum {
            ty,
            cartan,
            half_norms,
            positive_roots,
            coroots,
            minus_w0: minus_w0_permutation(ty),
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(α_i, α_i)/2` for each simple root.
    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    /// Positive roots in the basis of simple roots.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Row `k` lists `⟨ω_i, α_k^∨⟩` for the `k`-th positive root.
    pub fn coroot_pairings(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// The permutation of fundamental weights induced by `-w_0` (0-based).
    pub fn minus_w0_permutation(&self) -> &[usize] {
        &self.minus_w0
    }

    /// Half the squared length of a root given in simple-root coordinates.
    pub fn half_norm(&self, beta: &[i64]) -> i64 {
        half_norm(&self.cartan, &self.half_norms, beta)
    }

    /// `⟨λ, α^∨⟩` for the `k`-th positive root.
    pub fn pair(&self, lambda: &[i64], k: usize) -> i64 {
        lambda.iter().zip(&self.coroots[k]).map(|(m, c)| m * c).sum()
    }
}

fn half_norm(cartan: &[Vec<i64>], d: &[i64], beta: &[i64]) -> i64 {
    let n = beta.len();
    let mut twice = 0;
    for i in 0..n {
        for j in 0..n {
            twice += beta[i] * beta[j] * cartan[i][j] * d[j];
        }
    }
    twice / 2
}

fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut all = Vec::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    for r in &level {
        known.insert(r.clone());
    }
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                if beta.iter().filter(|&&c| c != 0).count() == 1 && beta[i] == 1 {
                    // Only α_i itself has β - α_i = 0; 2α_i is never a root.
                    continue;
                }
                // p = length of the α_i-string below β.
                let mut p = 0;
                let mut below = beta.clone();
                loop {
                    below[i] -= 1;
                    if below[i] < 0 || !known.contains(&below) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        level = next;
    }
    all
}

fn minus_w0_permutation(ty: SimpleType) -> Vec<usize> {
    let l = ty.rank();
    let mut perm: Vec<usize> = (0..l).collect();
    match ty.family() {
        Family::A => perm.reverse(),
        Family::D if l % 2 == 1 => perm.swap(l - 2, l - 1),
        Family::E if l == 6 => {
            perm.swap(0, 5);
            perm.swap(2, 4);
        }
        _ => {}
    }
    perm
}

/// `-w_0 λ`, which is the highest weight of the dual module `L(λ)^*`.
pub fn minus_w0(ty: SimpleType, lambda: &Weight) -> Result<Weight> {
    check_weight(ty, lambda)?;
    let perm = minus_w0_permutation(ty);
    let mut out = vec![0; lambda.len()];
    for (i, &j) in perm.iter().enumerate() {
        out[j] = lambda.0[i];
    }
    Ok(Weight(out))
}

pub fn is_self_dual(ty: SimpleType, lambda: &Weight) -> Result<bool> {
    Ok(minus_w0(ty, lambda)? == *lambda)
}

/// `d(λ) = Σ_{α>0} ⟨λ, α^∨⟩`.
pub fn d_lambda(ty: SimpleType, lambda: &Weight) -> Result<u128> {
    check_weight(ty, lambda)?;
    let rd = RootDatum::new(ty);
    let mut total: u128 = 0;
    for coroot in rd.coroot_pairings() {
        for (m, c) in lambda.0.iter().zip(coroot) {
            total += *m as u128 * *c as u128;
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DParity {
    Even,
    Odd,
    NotSelfDual,
}

impl DParity {
    fn of(x: u64) -> DParity {
        if x % 2 == 0 {
            DParity::Even
        } else {
            DParity::Odd
        }
    }
}

/// Self-duality and `d(λ) mod 2` from the per-type closed forms.
pub fn d_parity_closed_form(ty: SimpleType, lambda: &Weight) -> Result<DParity> {
    check_weight(ty, lambda)?;
    let l = ty.rank();
    let m = |i: usize| lambda.m(i) as u64;
    let parity = match ty.family() {
        Family::A => {
            if (1..=l).any(|i| m(i) != m(l + 1 - i)) {
                return Ok(DParity::NotSelfDual);
            }
            if l % 2 == 0 {
                0
            } else {
                ((l as u64 + 1) / 2) * m((l + 1) / 2)
            }
        }
        Family::B => match l % 4 {
            0 | 3 => 0,
            _ => m(l),
        },
        Family::C => (1..=l).step_by(2).map(m).sum(),
        Family::D => {
            if l % 2 == 1 && m(l) != m(l - 1) {
                return Ok(DParity::NotSelfDual);
            }
            if l % 4 == 2 {
                m(l) + m(l - 1)
            } else {
                0
            }
        }
        Family::E if l == 6 => {
            if m(1) != m(6) || m(3) != m(5) {
                return Ok(DParity::NotSelfDual);
            }
            0
        }
        Family::E if l == 7 => m(2) + m(5) + m(7),
        _ => 0,
    };
    Ok(DParity::of(parity))
}

/// A basis of the monoid of self-dual dominant weights.
pub fn self_dual_generators(ty: SimpleType) -> Vec<Weight> {
    let l = ty.rank();
    let omega = |i: usize| Weight::fundamental(l, i);
    match ty.family() {
        Family::A => {
            let mut gens: Vec<Weight> = (1..=l / 2).map(|i| omega(i).add(&omega(l + 1 - i))).collect();
            if l % 2 == 1 {
                gens.push(omega((l + 1) / 2));
            }
            gens
        }
        Family::D if l % 2 == 1 => {
            let mut gens: Vec<Weight> = (1..=l - 2).map(omega).collect();
            gens.push(omega(l - 1).add(&omega(l)));
            gens
        }
        Family::E if l == 6 => vec![omega(1).add(&omega(6)), omega(2), omega(3).add(&omega(5)), omega(4)],
        _ => (1..=l).map(omega).collect(),
    }
}

/// Dimension of the Weyl module `V(λ)` by the Weyl dimension formula.
pub fn weyl_dim(ty: SimpleType, lambda: &Weight) -> Result<BigUint> {
    check_weight(ty, lambda)?;
    let rd = RootDatum::new(ty);
    let shifted: Vec<i64> = lambda.0.iter().map(|&m| m as i64 + 1).collect();
    let rho = vec![1i64; ty.rank()];
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for k in 0..rd.positive_roots().len() {
        num *= rd.pair(&shifted, k) as u64;
        den *= rd.pair(&rho, k) as u64;
    }
    Ok(num / den)
}

/// Weight multiplicities of `V(λ)` by Freudenthal's formula, keyed by the
/// weight's coordinates in the fundamental-weight basis.
pub fn weight_multiplicities(ty: SimpleType, lambda: &Weight) -> Result<HashMap<Vec<i64>, u64>> {
    check_weight(ty, lambda)?;
    let rd = RootDatum::new(ty);
    let n = ty.rank();
    let lam: Vec<i64> = lambda.0.iter().map(|&m| m as i64).collect();
    let cartan = rd.cartan();
    // μ = λ - Σ k_i α_i, stored by k.
    let to_omega = |k: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|j| lam[j] - (0..n).map(|i| k[i] * cartan[i][j]).sum::<i64>())
            .collect()
    };
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(vec![0; n], 1);
    let mut level = vec![vec![0i64; n]];
    while !level.is_empty() {
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        let mut seen = HashSet::new();
        for k in &level {
            for i in 0..n {
                let mut next = k.clone();
                next[i] += 1;
                if seen.insert(next.clone()) {
                    candidates.push(next);
                }
            }
        }
        let mut new_level = Vec::new();
        for k in candidates {
            let mu = to_omega(&k);
            let den: i64 = (0..n)
                .map(|i| k[i] * rd.half_norms()[i] * (lam[i] + mu[i] + 2))
                .sum();
            let mut num: i64 = 0;
            for (r, beta) in rd.positive_roots().iter().enumerate() {
                let h = rd.half_norm(beta);
                for j in 1.. {
                    let above: Vec<i64> = k.iter().zip(beta).map(|(a, b)| a - j * b).collect();
                    if above.iter().any(|&a| a < 0) {
                        break;
                    }
                    if let Some(&m) = mult.get(&above) {
                        let nu = to_omega(&above);
                        num += 2 * m as i64 * rd.pair(&nu, r) * h;
                    }
                }
            }
            if den <= 0 {
                if num != 0 {
                    return Err(Error::Internal(format!("Freudenthal recursion broke at {k:?}")));
                }
                continue;
            }
            if num % den != 0 {
                return Err(Error::Internal(format!("non-integral multiplicity at {k:?}")));
            }
            let m = (num / den) as u64;
            if m > 0 {
                mult.insert(k.clone(), m);
                new_level.push(k);
            }
        }
        level = new_level;
    }
    Ok(mult.into_iter().map(|(k, m)| (to_omega(&k), m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn root_counts() {
        let expected = [
            ("A1", 1),
            ("A4", 10),
            ("B3", 9),
            ("C4", 16),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ];
        for (name, count) in expected {
            assert_eq!(RootDatum::new(t(name)).positive_roots().len(), count, "{name}");
        }
    }

    #[test]
    fn highest_roots() {
        let e8 = RootDatum::new(t("E8"));
        assert_eq!(e8.positive_roots().last().unwrap(), &vec![2, 3, 4, 6, 5, 4, 3, 2]);
        let g2 = RootDatum::new(t("G2"));
        assert_eq!(g2.positive_roots().last().unwrap(), &vec![3, 2]);
    }

    #[test]
    fn fundamental_weights_pair_to_delta_on_simple_coroots() {
        for ty in SimpleType::all_up_to(8) {
            let rd = RootDatum::new(ty);
            for (k, beta) in rd.positive_roots().iter().enumerate() {
                if beta.iter().sum::<i64>() == 1 {
                    let i = beta.iter().position(|&c| c == 1).unwrap();
                    let mut delta = vec![0; ty.rank()];
                    delta[i] = 1;
                    assert_eq!(rd.coroot_pairings()[k], delta, "{ty}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_ranks() {
        assert!(SimpleType::new(Family::D, 3).is_err());
        assert!(SimpleType::new(Family::C, 1).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(d_lambda(t("A3"), &w("1,0")).is_err());
    }

    #[test]
    fn duality_examples() {
        assert_eq!(minus_w0(t("A3"), &w("1,0,0")).unwrap(), w("0,0,1"));
        assert_eq!(minus_w0(t("C4"), &w("0,1,0,1")).unwrap(), w("0,1,0,1"));
        assert_eq!(minus_w0(t("E6"), &Weight::fundamental(6, 1)).unwrap(), Weight::fundamental(6, 6));
        assert!(is_self_dual(t("A4"), &w("1,0,0,1")).unwrap());
        assert!(!is_self_dual(t("D5"), &w("0,0,0,1,0")).unwrap());
        assert!(is_self_dual(t("E7"), &Weight::zero(7)).unwrap());
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_lambda(t("A1"), &w("1")).unwrap(), 1);
        assert_eq!(d_lambda(t("E8"), &Weight::zero(8)).unwrap(), 0);
        assert_eq!(d_lambda(t("C2"), &w("1,0")).unwrap() % 2, 1);
        assert_eq!(d_parity_closed_form(t("B5"), &w("0,0,0,0,1")).unwrap(), DParity::Odd);
        assert_eq!(d_parity_closed_form(t("E6"), &w("1,0,0,0,0,0")).unwrap(), DParity::NotSelfDual);
    }

    #[test]
    fn generators_are_self_dual() {
        for ty in SimpleType::all_up_to(8) {
            for g in self_dual_generators(ty) {
                assert!(is_self_dual(ty, &g).unwrap(), "{ty} {g}");
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim(t("C3"), &w("0,0,1")).unwrap(), BigUint::from(14u32));
        assert_eq!(weyl_dim(t("C2"), &w("0,1")).unwrap(), BigUint::from(5u32));
        assert_eq!(weyl_dim(t("A3"), &w("1,0,1")).unwrap(), BigUint::from(15u32));
        assert_eq!(weyl_dim(t("E8"), &Weight::fundamental(8, 8)).unwrap(), BigUint::from(248u32));
        assert_eq!(weyl_dim(t("E7"), &Weight::fundamental(7, 7)).unwrap(), BigUint::from(56u32));
        assert_eq!(weyl_dim(t("G2"), &w("1,0")).unwrap(), BigUint::from(7u32));
        assert_eq!(weyl_dim(t("F4"), &w("0,0,0,1")).unwrap(), BigUint::from(26u32));
    }

    #[test]
    fn freudenthal_sums_to_weyl_dimension() {
        let cases = [("C3", "0,1,0"), ("C4", "0,0,0,1"), ("A3", "1,0,1"), ("G2", "1,1"), ("B3", "0,0,1"), ("F4", "0,0,0,1")];
        for (ty, lam) in cases {
            let mults = weight_multiplicities(t(ty), &w(lam)).unwrap();
            let total: u64 = mults.values().sum();
            assert_eq!(BigUint::from(total), weyl_dim(t(ty), &w(lam)).unwrap(), "{ty} {lam}");
        }
        // The zero weight of the adjoint module of G2 has multiplicity 2.
        let adj = weight_multiplicities(t("G2"), &w("0,1")).unwrap();
        assert_eq!(adj[&vec![0, 0]], 2);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(t("E7").to_string(), "E7");
        assert_eq!(w("[1, 0,2]").to_string(), "[1,0,2]");
        assert!("X3".parse::<SimpleType>().is_err());
    }
}
