use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

use invforms::arith::*;
use invforms::classify::*;
use invforms::repdata::*;
use invforms::rootsys::*;

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn valuation(mut x: BigUint, p: u64) -> u32 {
    let mut v = 0;
    while (&x % p).is_zero() {
        x /= p;
        v += 1;
    }
    v
}

/// `-w_0 λ` as the dominant weight in the Weyl orbit of `-λ`, found by
/// reflecting until no coefficient is negative.
fn dual_by_reflections(ty: SimpleType, lambda: &Weight) -> Weight {
    let a = cartan_matrix(ty);
    let mut mu: Vec<i64> = lambda.coeffs().iter().map(|&c| -(c as i64)).collect();
    while let Some(i) = mu.iter().position(|&c| c < 0) {
        let mi = mu[i];
        for (j, m) in mu.iter_mut().enumerate() {
            *m -= mi * a[i][j];
        }
    }
    Weight(mu.into_iter().map(|c| c as u32).collect())
}

fn any_type() -> impl Strategy<Value = SimpleType> {
    let all = SimpleType::all_up_to(8);
    (0..all.len()).prop_map(move |i| all[i])
}

fn type_and_weight(max: u32) -> impl Strategy<Value = (SimpleType, Weight)> {
    any_type().prop_flat_map(move |ty| {
        prop::collection::vec(0..=max, ty.rank()).prop_map(move |c| (ty, Weight(c)))
    })
}

proptest! {
    #[test]
    fn dual_weight_matches_reflection_oracle((ty, w) in type_and_weight(4)) {
        prop_assert_eq!(minus_w0(ty, &w).unwrap(), dual_by_reflections(ty, &w));
    }

    #[test]
    fn parity_closed_form_on_random_weights((ty, w) in type_and_weight(5)) {
        let closed = d_parity_closed_form(ty, &w).unwrap();
        if is_self_dual(ty, &w).unwrap() {
            let d = d_lambda(ty, &w).unwrap();
            prop_assert_eq!(closed, if d % 2 == 0 { DParity::Even } else { DParity::Odd });
        } else {
            prop_assert_eq!(closed, DParity::NotSelfDual);
        }
    }

    #[test]
    fn lucas_containment(a in 0u64..300, b in 0u64..300, pi in 0usize..3) {
        // Base 2: containment is exactly Lucas' condition for C(a, b) to be odd.
        // Other bases: containment is stronger than p ∤ C(a, b).
        let p = [2u64, 3, 5][pi];
        prop_assume!(b <= a);
        let nonzero = !(binomial(a, b) % p).is_zero();
        let contains = contains_to_base_p(a, b, p).unwrap();
        if p == 2 {
            prop_assert_eq!(contains, nonzero);
        } else if contains {
            prop_assert!(nonzero);
        }
    }

    #[test]
    fn kummer_carries(a in 0u64..300, b in 0u64..300, pi in 0usize..3) {
        let p = [2u64, 3, 7][pi];
        prop_assume!(b <= a);
        prop_assert_eq!(binom_nu_p(a, b, p).unwrap(), valuation(binomial(a, b), p));
    }

    #[test]
    fn frobenius_twist_keeps_the_verdict((ty, w) in type_and_weight(3)) {
        let twisted = w.scale(2);
        prop_assert_eq!(classify(ty, &w, 2).unwrap().verdict, classify(ty, &twisted, 2).unwrap().verdict);
    }

    #[test]
    fn types_b_and_c_agree(l in 3usize..=8, coeffs in prop::collection::vec(0u32..4, 8)) {
        let w = Weight(coeffs[..l].to_vec());
        let b = classify(SimpleType::new(Family::B, l).unwrap(), &w, 2).unwrap().verdict;
        let c = classify(SimpleType::new(Family::C, l).unwrap(), &w, 2).unwrap().verdict;
        prop_assert_eq!(b, c);
    }

    #[test]
    fn symmetric_group_equivalence(l in 2usize..3000, r in 2usize..3000) {
        prop_assume!(r <= l);
        prop_assert_eq!(
            symgroup_classify(2 * l + 1, r).unwrap(),
            fundamental_verdict(Family::C, l, r).unwrap()
        );
    }

    #[test]
    fn odd_characteristic_factors_are_generic(l in 2usize..=10, r in 1usize..=10) {
        prop_assume!(r <= l);
        // For p > l + 1 no base-p containment beyond j = r can hold.
        let ty = SimpleType::new(Family::C, l).unwrap();
        prop_assert_eq!(comp_factors_c(l, r, 101).unwrap(), vec![r]);
        prop_assert_eq!(irr_dim_c(l, r, 101).unwrap(), weyl_dim(ty, &Weight::fundamental(l, r)).unwrap());
    }
}

#[test]
fn div4_criterion_matches_exact_binomials() {
    for l in 1..=300u64 {
        for i in 0..9u32 {
            let Some(t) = dyadic_offset(l + 1, i) else { continue };
            if l < t + (1 << i) {
                continue;
            }
            let exact = (binomial(l - t, 1 << i) % 4u32).is_zero();
            assert_eq!(binom_div4_criterion(l, i, t).unwrap(), exact, "l={l} i={i}");
            assert_eq!(exact, !upper_quarter(l + 1, i), "l={l} i={i}");
        }
    }
}

#[test]
fn symplectic_only_needs_nonzero_cohomology() {
    for l in 2..=200 {
        for r in 2..=l {
            if fundamental_verdict(Family::C, l, r).unwrap() == Verdict::SymplecticOnly {
                assert!(h1_nonzero_c(l, r).unwrap(), "l={l} r={r}");
            }
        }
    }
    for n in 3..=200 {
        for r in (1..n).filter(|&r| r < n - r) {
            if paired_weight_verdict(n, r).unwrap() == Verdict::SymplecticOnly {
                assert!(h1_nonzero_a(n, r, n - r).unwrap(), "n={n} r={r}");
            }
        }
    }
}

#[test]
fn irreducible_dimensions_never_exceed_weyl_dimensions() {
    for l in 2..=12 {
        let ty = SimpleType::new(Family::C, l).unwrap();
        for r in 1..=l {
            let irr = irr_dim_c(l, r, 2).unwrap();
            assert!(irr > BigUint::zero());
            assert!(irr <= weyl_dim(ty, &Weight::fundamental(l, r)).unwrap());
        }
    }
}

#[test]
fn type_e_table_round_trips_through_classify() {
    for (ty, w, verdict) in type_e_table() {
        let got = classify(ty, &w, 2).unwrap();
        assert_eq!(got.verdict, verdict, "{ty} {w}");
        assert_eq!(got.provenance, Provenance::TypeETable);
    }
}
