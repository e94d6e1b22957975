//! Closed-form decision of whether `L(λ)` carries a non-degenerate invariant
//! quadratic form.
//!
//! In characteristic `p ≠ 2` a self-dual irreducible module carries a unique
//! invariant bilinear form up to scalars, and it is symmetric exactly when
//! `d(λ)` is even. In characteristic 2 every non-trivial self-dual irreducible
//! module is symplectic, and the question is whether the form comes from a
//! quadratic form. Steinberg's tensor product theorem reduces that to
//! 2-restricted weights, which are handled type by type below.

use serde::{Deserialize, Serialize};

use crate::arith::{dyadic_offset, is_prime, log2_exact, upper_quarter};
use crate::error::{input, Result};
use crate::rootsys::{check_weight, d_lambda, is_self_dual, Family, SimpleType, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    NotSelfDual,
    TrivialModule,
    /// Carries a non-degenerate invariant quadratic form. In characteristic 2
    /// such a module is also symplectic.
    Orthogonal,
    /// Self-dual and symplectic, but without an invariant quadratic form.
    SymplecticOnly,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotSelfDual => "NotSelfDual",
            Verdict::TrivialModule => "TrivialModule",
            Verdict::Orthogonal => "Orthogonal",
            Verdict::SymplecticOnly => "SymplecticOnly",
            Verdict::Unknown => "Unknown",
        }
    }

    fn orthogonal_if(cond: bool) -> Verdict {
        if cond {
            Verdict::Orthogonal
        } else {
            Verdict::SymplecticOnly
        }
    }
}

/// Which rule produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    TrivialWeight,
    NotSelfDual,
    OddCharacteristicParity,
    TensorDecomposable,
    FundamentalClassical,
    NaturalSl2,
    TypeAPairedWeight,
    TypeBcLastCoefficient,
    TypeDSpinMismatch,
    TypeDNatural,
    TypeG2,
    TypeF4,
    TypeETable,
    Open,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::TrivialWeight => "trivial-weight",
            Provenance::NotSelfDual => "not-self-dual",
            Provenance::OddCharacteristicParity => "odd-characteristic-parity",
            Provenance::TensorDecomposable => "tensor-decomposable",
            Provenance::FundamentalClassical => "fundamental-classical",
            Provenance::NaturalSl2 => "natural-sl2",
            Provenance::TypeAPairedWeight => "type-a-paired-weight",
            Provenance::TypeBcLastCoefficient => "type-bc-last-coefficient",
            Provenance::TypeDSpinMismatch => "type-d-spin-mismatch",
            Provenance::TypeDNatural => "type-d-natural",
            Provenance::TypeG2 => "type-g2",
            Provenance::TypeF4 => "type-f4",
            Provenance::TypeETable => "type-e-table",
            Provenance::Open => "open",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormClass {
    pub verdict: Verdict,
    pub provenance: Provenance,
}

impl FormClass {
    fn new(verdict: Verdict, provenance: Provenance) -> FormClass {
        FormClass { verdict, provenance }
    }
}

/// Classify `L(λ)` in characteristic `p`, where `p` is 0 or a prime.
pub fn classify(ty: SimpleType, lambda: &Weight, p: u64) -> Result<FormClass> {
    check_weight(ty, lambda)?;
    if p != 0 && !is_prime(p) {
        return input(format!("characteristic {p} is neither 0 nor prime"));
    }
    if lambda.is_zero() {
        return Ok(FormClass::new(Verdict::TrivialModule, Provenance::TrivialWeight));
    }
    if !is_self_dual(ty, lambda)? {
        return Ok(FormClass::new(Verdict::NotSelfDual, Provenance::NotSelfDual));
    }
    if p != 2 {
        let even = d_lambda(ty, lambda)? % 2 == 0;
        return Ok(FormClass::new(Verdict::orthogonal_if(even), Provenance::OddCharacteristicParity));
    }
    // λ = Σ 2^j λ_j. Each λ_j is self-dual because -w_0 only permutes
    // coefficients, so every twisted factor is symplectic and any product of
    // two or more of them is orthogonal.
    let mut parts = steinberg_parts(lambda).into_iter().filter(|w| !w.is_zero());
    let first = parts.next().expect("nonzero weight has a nonzero digit");
    if parts.next().is_some() {
        return Ok(FormClass::new(Verdict::Orthogonal, Provenance::TensorDecomposable));
    }
    classify_restricted(ty, &first)
}

/// The 2-restricted weights `λ_j` with `λ = Σ 2^j λ_j`.
pub fn steinberg_parts(lambda: &Weight) -> Vec<Weight> {
    let mut parts = Vec::new();
    let mut rest: Vec<u32> = lambda.0.clone();
    while rest.iter().any(|&c| c != 0) {
        parts.push(Weight(rest.iter().map(|c| c & 1).collect()));
        rest.iter_mut().for_each(|c| *c >>= 1);
    }
    parts
}

/// `Some(r)` (1-based) when `λ = ω_r`.
fn as_fundamental(lambda: &Weight) -> Option<usize> {
    let mut found = None;
    for (i, &c) in lambda.0.iter().enumerate() {
        match (c, found) {
            (0, _) => {}
            (1, None) => found = Some(i + 1),
            _ => return None,
        }
    }
    found
}

fn support(lambda: &Weight) -> Vec<usize> {
    (1..=lambda.len()).filter(|&i| lambda.m(i) != 0).collect()
}

/// Characteristic 2, `λ` nonzero, 2-restricted and self-dual.
fn classify_restricted(ty: SimpleType, lambda: &Weight) -> Result<FormClass> {
    use Provenance as P;
    let l = ty.rank();
    let open = FormClass::new(Verdict::Unknown, P::Open);
    let fundamental = as_fundamental(lambda);
    let decided = |v: Verdict, p: Provenance| Ok(FormClass::new(v, p));
    match ty.family() {
        Family::A => {
            if l == 1 {
                // SL_2 = Sp_2 acts transitively on nonzero vectors of the
                // natural module, so no nonzero invariant quadratic form exists.
                return decided(Verdict::SymplecticOnly, P::NaturalSl2);
            }
            if let Some(r) = fundamental {
                return decided(fundamental_verdict(Family::A, l, r)?, P::FundamentalClassical);
            }
            let s = support(lambda);
            let n = l + 1;
            if s.len() == 2 && s[0] + s[1] == n {
                return decided(paired_weight_verdict(n, s[0])?, P::TypeAPairedWeight);
            }
            Ok(open)
        }
        Family::B | Family::C => {
            if let Some(r) = fundamental {
                return decided(fundamental_verdict(ty.family(), l, r)?, P::FundamentalClassical);
            }
            if lambda.m(l) == 1 {
                return decided(Verdict::Orthogonal, P::TypeBcLastCoefficient);
            }
            if ty.family() == Family::B {
                // With a_l = 0 the exceptional isogeny identifies the B and C modules.
                return classify_restricted(SimpleType::new(Family::C, l)?, lambda);
            }
            Ok(open)
        }
        Family::D => {
            if lambda.m(l - 1) != lambda.m(l) {
                return decided(Verdict::Orthogonal, P::TypeDSpinMismatch);
            }
            if fundamental == Some(1) {
                return decided(Verdict::Orthogonal, P::TypeDNatural);
            }
            // Restriction from C_l to its long-root subgroup D_l.
            let mut mu = lambda.clone();
            mu.0[l - 1] = 0;
            classify_restricted(SimpleType::new(Family::C, l)?, &mu)
        }
        Family::G => decided(Verdict::orthogonal_if(fundamental != Some(1)), P::TypeG2),
        Family::F => decided(Verdict::Orthogonal, P::TypeF4),
        Family::E => Ok(type_e_lookup(l, lambda).map_or(open, |v| FormClass::new(v, P::TypeETable))),
    }
}

/// Known verdicts for 2-restricted weights of type E.
pub fn type_e_table() -> Vec<(SimpleType, Weight, Verdict)> {
    let e = |rank: usize, idx: &[usize], v: Verdict| {
        let mut w = Weight::zero(rank);
        for &i in idx {
            w.0[i - 1] = 1;
        }
        (SimpleType::new(Family::E, rank).expect("valid E type"), w, v)
    };
    use Verdict::{Orthogonal as O, SymplecticOnly as S};
    vec![
        e(6, &[2], O),
        e(6, &[4], O),
        e(6, &[1, 6], O),
        e(7, &[1], S),
        e(7, &[2], O),
        e(7, &[5], O),
        e(7, &[6], O),
        e(7, &[7], O),
        e(8, &[1], O),
        e(8, &[7], O),
        e(8, &[8], O),
    ]
}

fn type_e_lookup(rank: usize, lambda: &Weight) -> Option<Verdict> {
    type_e_table()
        .into_iter()
        .find(|(t, w, _)| t.rank() == rank && w == lambda)
        .map(|(_, _, v)| v)
}

/// Verdict for the fundamental module `L(ω_r)` of a classical group in characteristic 2.
pub fn fundamental_verdict(family: Family, l: usize, r: usize) -> Result<Verdict> {
    let ty = SimpleType::new(family, l)?;
    if r == 0 || r > l {
        return input(format!("ω_{r} is not a fundamental weight of {ty}"));
    }
    if !is_self_dual(ty, &Weight::fundamental(l, r))? {
        return Ok(Verdict::NotSelfDual);
    }
    let power_rule = || {
        r % 2 == 0
            && log2_exact(r as u64).is_some_and(|j| upper_quarter(l as u64 + 1, j - 1))
    };
    match family {
        Family::A => Ok(if l == 1 { Verdict::SymplecticOnly } else { Verdict::Orthogonal }),
        Family::B | Family::C => Ok(Verdict::orthogonal_if(r != 1 && !power_rule())),
        Family::D => Ok(Verdict::orthogonal_if(l < 6 || !power_rule())),
        _ => input(format!("{ty} is not classical")),
    }
}

/// Verdict for `L(ω_r + ω_{n-r})` of `SL_n` in characteristic 2.
pub fn paired_weight_verdict(n: usize, r: usize) -> Result<Verdict> {
    if n < 3 || r == 0 || 2 * r >= n {
        return input(format!("need n ≥ 3 and 1 ≤ r < n - r, got n = {n}, r = {r}"));
    }
    let bad = log2_exact(r as u64).is_some_and(|i| upper_quarter(n as u64 + 1, i));
    Ok(Verdict::orthogonal_if(!bad))
}

/// Whether `H^1(Sp_{2l}, L(ω_r))` is nonzero in characteristic 2.
pub fn h1_nonzero_c(l: usize, r: usize) -> Result<bool> {
    if l < 2 || r == 0 || r > l {
        return input(format!("need 1 ≤ r ≤ l with l ≥ 2, got l = {l}, r = {r}"));
    }
    Ok(r % 2 == 0
        && log2_exact(r as u64).is_some_and(|j| dyadic_offset(l as u64 + 1, j - 1).is_some()))
}

/// Whether `H^1(SL_n, L(ω_r + ω_s))` is nonzero in characteristic 2.
pub fn h1_nonzero_a(n: usize, r: usize, s: usize) -> Result<bool> {
    if n < 3 || r == 0 || r >= s || s >= n {
        return input(format!("need 1 ≤ r < s ≤ n - 1, got n = {n}, r = {r}, s = {s}"));
    }
    Ok(r + s == n && log2_exact(r as u64).is_some_and(|i| dyadic_offset(n as u64 + 1, i).is_some()))
}

/// Verdict for the symmetric-group module `D^{(n-r, r)}` in characteristic 2.
pub fn symgroup_classify(n: usize, r: usize) -> Result<Verdict> {
    if 2 * r > n {
        return input(format!("need 0 ≤ r ≤ n/2, got n = {n}, r = {r}"));
    }
    let bad = log2_exact(r as u64).is_some_and(|j| {
        let m = n as u64 % (1u64 << (j + 2));
        let lo = (1u64 << (j + 1)) + (1u64 << j) - 1;
        let hi = (1u64 << (j + 2)) - 2;
        r > 0 && (lo..=hi).contains(&m)
    });
    Ok(Verdict::orthogonal_if(!bad))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(ty: &str, lam: &str, p: u64) -> Verdict {
        classify(ty.parse().unwrap(), &lam.parse().unwrap(), p).unwrap().verdict
    }

    use Verdict::*;

    #[test]
    fn characteristic_two_examples() {
        assert_eq!(c("C6", "0,1,0,0,0,0", 2), SymplecticOnly);
        assert_eq!(c("C5", "0,0,0,1,0", 2), SymplecticOnly);
        assert_eq!(c("C3", "0,0,1", 2), Orthogonal);
        assert_eq!(c("C2", "1,0", 2), SymplecticOnly);
        assert_eq!(c("A5", "1,0,0,0,1", 2), SymplecticOnly);
        assert_eq!(c("E7", "1,0,0,0,0,0,0", 2), SymplecticOnly);
        assert_eq!(c("A3", "0,1,0", 2), Orthogonal);
        assert_eq!(c("C3", "2,0,0", 2), SymplecticOnly);
        assert_eq!(c("C3", "1,0,1", 2), Orthogonal);
        assert_eq!(c("B2", "0,1", 2), SymplecticOnly);
        assert_eq!(c("D5", "0,0,0,1,1", 2), SymplecticOnly);
        assert_eq!(c("D4", "1,0,0,0", 2), Orthogonal);
        assert_eq!(c("G2", "1,0", 2), SymplecticOnly);
        assert_eq!(c("G2", "1,1", 2), Orthogonal);
        assert_eq!(c("F4", "0,0,1,1", 2), Orthogonal);
        assert_eq!(c("A1", "1", 2), SymplecticOnly);
        assert_eq!(c("E8", "0,1,0,0,0,0,0,0", 2), Unknown);
        assert_eq!(c("C4", "1,1,0,0", 2), Unknown);
    }

    #[test]
    fn other_characteristics() {
        assert_eq!(c("A3", "0,1,0", 0), Orthogonal);
        assert_eq!(c("C2", "1,0", 3), SymplecticOnly);
        assert_eq!(c("A2", "1,0", 5), NotSelfDual);
        assert_eq!(c("B3", "0,0,0", 7), TrivialModule);
        assert!(classify("A2".parse().unwrap(), &"1,1".parse().unwrap(), 4).is_err());
    }

    #[test]
    fn fundamental_examples() {
        assert_eq!(fundamental_verdict(Family::C, 2, 2).unwrap(), SymplecticOnly);
        assert_eq!(fundamental_verdict(Family::B, 4, 1).unwrap(), SymplecticOnly);
        // For odd l the half-spin modules of D_l are dual to each other.
        assert_eq!(fundamental_verdict(Family::D, 5, 4).unwrap(), NotSelfDual);
        assert_eq!(fundamental_verdict(Family::D, 5, 3).unwrap(), Orthogonal);
        assert_eq!(fundamental_verdict(Family::D, 6, 2).unwrap(), SymplecticOnly);
        assert_eq!(fundamental_verdict(Family::A, 3, 1).unwrap(), NotSelfDual);
        assert_eq!(fundamental_verdict(Family::A, 3, 2).unwrap(), Orthogonal);
    }

    #[test]
    fn paired_weight_examples() {
        assert_eq!(paired_weight_verdict(6, 1).unwrap(), SymplecticOnly);
        assert_eq!(paired_weight_verdict(13, 2).unwrap(), SymplecticOnly);
        assert_eq!(paired_weight_verdict(4, 1).unwrap(), Orthogonal);
        assert!(paired_weight_verdict(4, 2).is_err());
    }

    #[test]
    fn cohomology_examples() {
        assert!(h1_nonzero_c(2, 2).unwrap());
        assert!(!h1_nonzero_c(3, 2).unwrap());
        assert!(!h1_nonzero_c(5, 1).unwrap());
        assert!(h1_nonzero_a(6, 1, 5).unwrap());
        assert!(h1_nonzero_a(6, 2, 4).unwrap());
        assert!(!h1_nonzero_a(5, 1, 3).unwrap());
    }

    #[test]
    fn symmetric_group_examples() {
        assert_eq!(symgroup_classify(5, 1).unwrap(), Orthogonal);
        assert_eq!(symgroup_classify(6, 1).unwrap(), SymplecticOnly);
        assert_eq!(symgroup_classify(9, 2).unwrap(), Orthogonal);
        assert_eq!(symgroup_classify(4, 0).unwrap(), Orthogonal);
    }

    #[test]
    fn verdict_strings_are_stable() {
        assert_eq!(serde_json::to_string(&SymplecticOnly).unwrap(), "\"SymplecticOnly\"");
        assert_eq!(serde_json::to_string(&Provenance::TypeETable).unwrap(), "\"type-e-table\"");
    }
}
