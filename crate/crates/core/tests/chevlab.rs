use std::collections::HashMap;

use num_bigint::BigInt;

use invforms::chevlab::cache::{load_or_generate_in, LatticeRecord};
use invforms::chevlab::*;
use invforms::classify::Verdict;
use invforms::rootsys::{weight_multiplicities, Family, SimpleType, Weight};
use invforms::Error;

fn caps() -> Caps {
    Caps::default()
}

#[test]
fn ambient_dimensions() {
    assert_eq!(WedgeSpace::symplectic(2, 2, &caps()).unwrap().dim(), 6);
    assert_eq!(WedgeSpace::sl_tensor(5, 2, &caps()).unwrap().dim(), 100);
}

#[test]
fn long_root_acts_on_a_slot() {
    let sp = WedgeSpace::symplectic(2, 2, &caps()).unwrap();
    let ri = sp.roots().iter().position(|r| r.root == vec![2, 0]).unwrap();
    let x = sp.operator(ri, 1).unwrap();
    let v = IntWedgeVector::symplectic_wedge(2, &[-1, -2]);
    assert_eq!(sp.apply(x, &v).unwrap(), IntWedgeVector::symplectic_wedge(2, &[1, -2]));
}

/// `⟨X u, v⟩ + ⟨u, X v⟩ = 0` for every root vector and basis pair.
fn assert_pairing_invariant(space: &WedgeSpace) {
    for (ri, _) in space.roots().iter().enumerate() {
        let x = space.operator(ri, 1).unwrap();
        for i in 0..space.dim() {
            let xi = space.apply_sparse(x, &[(i as u32, 1)]).unwrap();
            for j in 0..space.dim() {
                let xj = space.apply_sparse(x, &[(j as u32, 1)]).unwrap();
                let lhs: i64 = xi.iter().map(|&(a, c)| c * space.pair_monomials(a as usize, j)).sum();
                let rhs: i64 = xj.iter().map(|&(b, c)| c * space.pair_monomials(i, b as usize)).sum();
                assert_eq!(lhs + rhs, 0, "root {ri}, monomials {i}, {j}");
            }
        }
    }
}

#[test]
fn pairings_are_invariant() {
    assert_pairing_invariant(&WedgeSpace::symplectic(3, 2, &caps()).unwrap());
    assert_pairing_invariant(&WedgeSpace::symplectic(3, 3, &caps()).unwrap());
    assert_pairing_invariant(&WedgeSpace::sl_tensor(4, 2, &caps()).unwrap());
}

fn coroot(family: SpaceFamily, root: &[i8]) -> Vec<i8> {
    match family {
        SpaceFamily::Symplectic { .. } if root.iter().any(|&x| x.abs() == 2) => {
            root.iter().map(|x| x / 2).collect()
        }
        _ => root.to_vec(),
    }
}

fn dot(a: &[i8], b: &[i8]) -> i64 {
    a.iter().zip(b).map(|(x, y)| *x as i64 * *y as i64).sum()
}

fn apply_twice(space: &WedgeSpace, a: &ChevalleyOperator, b: &ChevalleyOperator, i: usize) -> HashMap<u32, i64> {
    let once = space.apply_sparse(b, &[(i as u32, 1)]).unwrap();
    let twice = space.apply_sparse(a, &once).unwrap();
    twice.into_iter().collect()
}

#[test]
fn cartan_commutators() {
    for l in 1..=3 {
        for k in 1..=l {
            let space = WedgeSpace::symplectic(l, k, &caps()).unwrap();
            let family = space.family();
            let roots = space.roots();
            let neg = |ri: usize| {
                let target: Vec<i8> = roots[ri].root.iter().map(|x| -x).collect();
                roots.iter().position(|r| r.root == target).unwrap()
            };
            let weight_of = |i: usize| space.blocks()[space.block_of(i)].weight.clone();
            for ri in 0..roots.len() {
                let h = coroot(family, &roots[ri].root);
                let xp = space.operator(ri, 1).unwrap();
                let xm = space.operator(neg(ri), 1).unwrap();
                for i in 0..space.dim() {
                    // [X_α, X_{-α}] = H_α.
                    let mut comm = apply_twice(&space, xp, xm, i);
                    for (j, c) in apply_twice(&space, xm, xp, i) {
                        *comm.entry(j).or_insert(0) -= c;
                    }
                    comm.retain(|_, c| *c != 0);
                    let eigen = dot(&weight_of(i), &h);
                    let expect: HashMap<u32, i64> =
                        if eigen == 0 { HashMap::new() } else { HashMap::from([(i as u32, eigen)]) };
                    assert_eq!(comm, expect, "C{l} k={k} root {:?} monomial {i}", roots[ri].root);
                    // [H_α, X_β] = ⟨β, α^∨⟩ X_β, with H_α diagonal.
                    for (bi, beta) in roots.iter().enumerate() {
                        let xb = space.operator(bi, 1).unwrap();
                        for (j, c) in space.apply_sparse(xb, &[(i as u32, 1)]).unwrap() {
                            let lhs = c * (dot(&weight_of(j as usize), &h) - eigen);
                            assert_eq!(lhs, c * dot(&beta.root, &h));
                        }
                    }
                }
            }
        }
    }
}

fn epsilon_to_omega(family: SpaceFamily, mu: &[i8]) -> Vec<i64> {
    match family {
        SpaceFamily::Symplectic { l, .. } => (0..l)
            .map(|i| if i + 1 < l { (mu[i] - mu[i + 1]) as i64 } else { mu[i] as i64 })
            .collect(),
        SpaceFamily::SlTensor { n, .. } => (0..n - 1).map(|i| (mu[i] - mu[i + 1]) as i64).collect(),
    }
}

#[test]
fn weight_multiplicities_match_character_data() {
    let mut cases: Vec<(LatticeModule, SimpleType, Weight)> = Vec::new();
    for l in 2..=4 {
        for k in 1..=l {
            let m = generate_weyl_lattice_c(l, k, &caps()).unwrap();
            cases.push((m, SimpleType::new(Family::C, l).unwrap(), Weight::fundamental(l, k)));
        }
    }
    for n in 3..=5 {
        for k in (1..n).filter(|&k| k < n - k) {
            let m = generate_weyl_lattice_a(n, k, &caps()).unwrap();
            let w = Weight::fundamental(n - 1, k).add(&Weight::fundamental(n - 1, n - k));
            cases.push((m, SimpleType::new(Family::A, n - 1).unwrap(), w));
        }
    }
    for (m, ty, w) in cases {
        let expect = weight_multiplicities(ty, &w).unwrap();
        let got: HashMap<Vec<i64>, u64> = m
            .weight_multiplicities()
            .into_iter()
            .map(|(mu, d)| (epsilon_to_omega(m.family(), &mu), d as u64))
            .collect();
        assert_eq!(got, expect, "{ty} {w}");
    }
}

#[test]
fn gram_is_symmetric_or_skew() {
    for (l, k) in [(3, 2), (3, 3), (4, 2)] {
        let m = generate_weyl_lattice_c(l, k, &caps()).unwrap();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for g in 0..m.rank() {
            for h in 0..m.rank() {
                assert_eq!(m.gram_entry(g, h), sign * m.gram_entry(h, g));
            }
        }
    }
}

#[test]
fn oracles_agree_on_type_a() {
    for n in 3..=7 {
        for k in (1..n).filter(|&k| k < n - k) {
            let m = generate_weyl_lattice_a(n, k, &caps()).unwrap();
            assert_eq!(oracle_gram(&m).unwrap(), oracle_solver(&m).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn solver_matches_gram_beyond_acceptance_range() {
    for (l, k) in [(6, 2), (7, 2), (6, 4)] {
        let m = generate_weyl_lattice_c(l, k, &caps()).unwrap();
        assert_eq!(oracle_gram(&m).unwrap(), oracle_solver(&m).unwrap(), "l={l} k={k}");
    }
}

#[test]
fn type_a_gamma_example() {
    let m = generate_weyl_lattice_a(6, 1, &caps()).unwrap();
    let gamma = gamma_vector_a(6, 0, 0).unwrap();
    assert!(q_half_of_vector(&m, &gamma).unwrap());
    assert_eq!(oracle_gram(&m).unwrap(), Verdict::SymplecticOnly);
}

#[test]
fn fixed_space_examples() {
    for space in [
        WedgeSpace::symplectic(2, 2, &caps()).unwrap(),
        WedgeSpace::symplectic(4, 2, &caps()).unwrap(),
        WedgeSpace::sl_tensor(4, 1, &caps()).unwrap(),
    ] {
        assert_eq!(fixed_space_dim(&space).unwrap(), 1);
    }
}

#[test]
fn q_rejects_odd_lattices() {
    let m = generate_weyl_lattice_c(3, 3, &caps()).unwrap();
    let zero = invforms::gf2::BitVec::zeros(m.rank());
    assert!(matches!(q_half_eval(&m, &zero), Err(Error::Input(_))));
    assert!(oracle_gram_c(3, 3, &caps()).is_err());
}

#[test]
fn resource_caps() {
    let tight = Caps { max_ambient: 1000, ..Caps::default() };
    assert!(matches!(generate_weyl_lattice_c(11, 8, &Caps::default()), Err(Error::Resource(_))));
    assert!(matches!(generate_weyl_lattice_a(8, 3, &tight), Err(Error::Resource(_))));
    let few = Caps { max_insertions: 3, ..Caps::default() };
    assert!(matches!(generate_weyl_lattice_c(3, 2, &few), Err(Error::Resource(_))));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let family = SpaceFamily::Symplectic { l: 3, k: 2 };
    let first = load_or_generate_in(dir.path(), family, &caps()).unwrap();
    let second = load_or_generate_in(dir.path(), family, &caps()).unwrap();
    assert_eq!(LatticeRecord::from_module(&first), LatticeRecord::from_module(&second));
    let text = std::fs::read_to_string(invforms::chevlab::cache::cache_path(dir.path(), family)).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["format_version"], 1);
    assert!(json["gram"][0][2].is_string());
}

#[test]
fn corrupted_cache_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let family = SpaceFamily::SlTensor { n: 4, k: 1 };
    let m = load_or_generate_in(dir.path(), family, &caps()).unwrap();
    let mut record = LatticeRecord::from_module(&m);
    record.gram[0].2 = "12345".into();
    let path = invforms::chevlab::cache::cache_path(dir.path(), family);
    std::fs::write(&path, serde_json::to_string(&record).unwrap()).unwrap();
    assert!(load_or_generate_in(dir.path(), family, &caps()).is_err());
}

#[test]
fn witness_pairs_to_one() {
    for family in [SpaceFamily::Symplectic { l: 4, k: 2 }, SpaceFamily::SlTensor { n: 5, k: 2 }] {
        let space = match family {
            SpaceFamily::Symplectic { l, k } => WedgeSpace::symplectic(l, k, &caps()).unwrap(),
            SpaceFamily::SlTensor { n, k } => WedgeSpace::sl_tensor(n, k, &caps()).unwrap(),
        };
        let (a, b) = evenness_witness(family);
        assert_eq!(space.pair(&a, &b).unwrap(), BigInt::from(1));
    }
}
