//! Ambient spaces: `∧^k V` for `Sp(V)` and `∧^k V ⊗ ∧^k V^*` for `SL(V)`,
//! with their Chevalley operators and invariant pairings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size limits for explicit constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_ambient: usize,
    pub max_insertions: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { max_ambient: 20_000, max_insertions: 2_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceFamily {
    /// `∧^k V` with `V` the natural module of `Sp_{2l}`.
    Symplectic { l: usize, k: usize },
    /// `∧^k V ⊗ ∧^k V^*` with `V` the natural module of `SL_n`.
    SlTensor { n: usize, k: usize },
}

impl SpaceFamily {
    pub fn degree(&self) -> usize {
        match *self {
            SpaceFamily::Symplectic { k, .. } | SpaceFamily::SlTensor { k, .. } => k,
        }
    }

    /// Number of `ε` coordinates of a weight.
    pub fn weight_len(&self) -> usize {
        match *self {
            SpaceFamily::Symplectic { l, .. } => l,
            SpaceFamily::SlTensor { n, .. } => n,
        }
    }
}

/// A basis vector of the ambient space. For the symplectic family only `v`
/// is used: bit `b` stands for `e_i` with `i = b - l` when `b < l` and
/// `i = b - l + 1` otherwise, so bit order is the integer order
/// `-l < ... < -1 < 1 < ... < l`. For the `SL_n` family, bit `i - 1` of `v`
/// is `e_i` and bit `i - 1` of `w` is `e_i^*`. A monomial is the wedge of its
/// basis vectors in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub v: u64,
    pub w: u64,
}

impl Monomial {
    /// The signed indices of a symplectic monomial.
    pub fn signed_indices(&self, l: usize) -> Vec<i32> {
        bits(self.v).map(|b| symplectic_index(b, l)).collect()
    }
}

fn bits(x: u64) -> impl Iterator<Item = u32> {
    let mut x = x;
    std::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let b = x.trailing_zeros();
        x &= x - 1;
        Some(b)
    })
}

pub(crate) fn symplectic_bit(i: i32, l: usize) -> u32 {
    let l = l as i32;
    debug_assert!(i != 0 && i.abs() <= l);
    if i < 0 {
        (i + l) as u32
    } else {
        (i + l - 1) as u32
    }
}

fn symplectic_index(b: u32, l: usize) -> i32 {
    let (b, l) = (b as i32, l as i32);
    if b < l {
        b - l
    } else {
        b - l + 1
    }
}

/// Sort a sequence of distinct positions, returning the sign of the sort, or
/// `None` when two positions coincide.
fn sort_sign(seq: &mut [u32]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return None;
            }
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    seq.sort_unstable();
    Some(sign)
}

/// An integer vector in the ambient space.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntWedgeVector {
    pub terms: BTreeMap<Monomial, BigInt>,
}

impl IntWedgeVector {
    pub fn new() -> IntWedgeVector {
        IntWedgeVector::default()
    }

    pub fn monomial(m: Monomial, coeff: i64) -> IntWedgeVector {
        let mut v = IntWedgeVector::new();
        v.add_term(m, BigInt::from(coeff));
        v
    }

    /// `e_{i_1} ∧ ... ∧ e_{i_k}` in the symplectic family, in the given order.
    pub fn symplectic_wedge(l: usize, indices: &[i32]) -> IntWedgeVector {
        let mut seq: Vec<u32> = indices.iter().map(|&i| symplectic_bit(i, l)).collect();
        match sort_sign(&mut seq) {
            None => IntWedgeVector::new(),
            Some(sign) => {
                let v = seq.iter().fold(0u64, |acc, &b| acc | 1 << b);
                IntWedgeVector::monomial(Monomial { v, w: 0 }, sign)
            }
        }
    }

    /// `(e_{i_1} ∧ ... ∧ e_{i_k}) ⊗ (e_{j_1}^* ∧ ... ∧ e_{j_k}^*)` for `SL_n`, in the given orders.
    pub fn sl_tensor(left: &[usize], right: &[usize]) -> IntWedgeVector {
        let mut a: Vec<u32> = left.iter().map(|&i| i as u32 - 1).collect();
        let mut b: Vec<u32> = right.iter().map(|&i| i as u32 - 1).collect();
        match (sort_sign(&mut a), sort_sign(&mut b)) {
            (Some(s), Some(t)) => {
                let v = a.iter().fold(0u64, |acc, &x| acc | 1 << x);
                let w = b.iter().fold(0u64, |acc, &x| acc | 1 << x);
                IntWedgeVector::monomial(Monomial { v, w }, s * t)
            }
            _ => IntWedgeVector::new(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&mut self, other: &IntWedgeVector) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn sub(&mut self, other: &IntWedgeVector) {
        for (m, c) in &other.terms {
            self.add_term(*m, -c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monomials with odd coefficient.
    pub fn odd_support(&self) -> Vec<Monomial> {
        self.terms
            .iter()
            .filter(|(_, c)| (*c % 2u32) != BigInt::zero())
            .map(|(m, _)| *m)
            .collect()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for IntWedgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{c}*({:x},{:x})", m.v, m.w))
            .collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// One matrix unit `coeff · E_{target, source}` acting on a tensor factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unit {
    pub dual: bool,
    pub target: u32,
    pub source: u32,
    pub coeff: i64,
}

/// A Chevalley root vector `X_α` as a sum of matrix units on the natural module(s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootVector {
    /// `α` in `ε` coordinates.
    pub root: Vec<i8>,
    pub units: Vec<Unit>,
    pub simple: bool,
    pub positive: bool,
}

/// The divided power `X_α^{(m)}` as a sparse matrix, stored by columns.
#[derive(Debug, Clone)]
pub struct ChevalleyOperator {
    pub root_index: usize,
    pub power: usize,
    col_start: Vec<u32>,
    entries: Vec<(u32, i64)>,
}

impl ChevalleyOperator {
    /// Image of basis monomial `col`.
    pub fn column(&self, col: usize) -> &[(u32, i64)] {
        &self.entries[self.col_start[col] as usize..self.col_start[col + 1] as usize]
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }
}

/// A block of monomials sharing one weight.
#[derive(Debug, Clone)]
pub struct WeightBlock {
    pub weight: Vec<i8>,
    pub members: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct WedgeSpace {
    family: SpaceFamily,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    block_of: Vec<u32>,
    local_of: Vec<u32>,
    blocks: Vec<WeightBlock>,
    block_index: HashMap<Vec<i8>, u32>,
    dual: Vec<(u32, i8)>,
    roots: Vec<RootVector>,
    operators: Vec<ChevalleyOperator>,
    op_index: HashMap<(usize, usize), usize>,
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut x: u64 = (1u64 << k) - 1;
    while x < (1u64 << n) {
        out.push(x);
        // Gosper's hack: next integer with the same popcount.
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

fn symplectic_roots(l: usize) -> Vec<RootVector> {
    let b = |i: i32| symplectic_bit(i, l);
    let mut roots = Vec::new();
    let unit = |t: i32, s: i32, c: i64| Unit { dual: false, target: b(t), source: b(s), coeff: c };
    for i in 1..=l as i32 {
        for j in 1..=l as i32 {
            if i == j {
                continue;
            }
            let mut root = vec![0i8; l];
            root[i as usize - 1] = 1;
            root[j as usize - 1] = -1;
            roots.push(RootVector {
                root,
                units: vec![unit(i, j, 1), unit(-j, -i, -1)],
                simple: j == i + 1,
                positive: i < j,
            });
        }
    }
    for i in 1..=l as i32 {
        for j in i + 1..=l as i32 {
            for sign in [1i32, -1] {
                let mut root = vec![0i8; l];
                root[i as usize - 1] = sign as i8;
                root[j as usize - 1] = sign as i8;
                roots.push(RootVector {
                    root,
                    units: vec![unit(sign * j, -sign * i, 1), unit(sign * i, -sign * j, 1)],
                    simple: false,
                    positive: sign > 0,
                });
            }
        }
    }
    for i in 1..=l as i32 {
        for sign in [1i32, -1] {
            let mut root = vec![0i8; l];
            root[i as usize - 1] = 2 * sign as i8;
            roots.push(RootVector {
                root,
                units: vec![unit(sign * i, -sign * i, 1)],
                simple: sign > 0 && i == l as i32,
                positive: sign > 0,
            });
        }
    }
    roots
}

fn sl_roots(n: usize) -> Vec<RootVector> {
    let mut roots = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let mut root = vec![0i8; n];
            root[i - 1] = 1;
            root[j - 1] = -1;
            // E_{ij} on V, and -E_{ij}^T on V^*: e_i^* ↦ -e_j^*.
            let units = vec![
                Unit { dual: false, target: (i - 1) as u32, source: (j - 1) as u32, coeff: 1 },
                Unit { dual: true, target: (j - 1) as u32, source: (i - 1) as u32, coeff: -1 },
            ];
            roots.push(RootVector { root, units, simple: j == i + 1, positive: i < j });
        }
    }
    roots
}

/// Apply `X^{(m)}` to a monomial: the sum over `m`-element sets of slots of
/// the product of `X` applied in those slots. Exact because `X^2 = 0` on the
/// natural module(s), which is checked when the space is built.
fn divided_power_on(units: &[Unit], m: usize, mono: Monomial) -> Vec<(Monomial, i64)> {
    let applicable: Vec<&Unit> = units
        .iter()
        .filter(|u| (if u.dual { mono.w } else { mono.v }) >> u.source & 1 == 1)
        .collect();
    let mut out = Vec::new();
    if m > applicable.len() {
        return out;
    }
    for choice in subsets(applicable.len(), m) {
        let chosen: Vec<&Unit> = bits(choice).map(|i| applicable[i as usize]).collect();
        let mut coeff: i64 = chosen.iter().map(|u| u.coeff).product();
        let mut parts = [mono.v, mono.w];
        let mut ok = true;
        for (f, part) in parts.iter_mut().enumerate() {
            let dual = f == 1;
            let mut seq: Vec<u32> = bits(*part)
                .map(|b| {
                    chosen
                        .iter()
                        .find(|u| u.dual == dual && u.source == b)
                        .map_or(b, |u| u.target)
                })
                .collect();
            match sort_sign(&mut seq) {
                Some(s) => {
                    coeff *= s;
                    *part = seq.iter().fold(0u64, |acc, &x| acc | 1 << x);
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.push((Monomial { v: parts[0], w: parts[1] }, coeff));
        }
    }
    out
}

impl WedgeSpace {
    /// `∧^k V` for `Sp_{2l}`.
    pub fn symplectic(l: usize, k: usize, caps: &Caps) -> Result<WedgeSpace> {
        if l < 1 || k < 1 || k > l || 2 * l > 64 {
            return Err(Error::Input(format!("need 1 ≤ k ≤ l ≤ 32, got l = {l}, k = {k}")));
        }
        let ambient = binomial_u128(2 * l, k);
        check_cap(ambient, caps)?;
        let monomials: Vec<Monomial> =
            subsets(2 * l, k).into_iter().map(|v| Monomial { v, w: 0 }).collect();
        WedgeSpace::build(SpaceFamily::Symplectic { l, k }, monomials, symplectic_roots(l))
    }

    /// `∧^k V ⊗ ∧^k V^*` for `SL_n`.
    pub fn sl_tensor(n: usize, k: usize, caps: &Caps) -> Result<WedgeSpace> {
        if n < 2 || k < 1 || k >= n || n > 64 {
            return Err(Error::Input(format!("need 1 ≤ k < n ≤ 64, got n = {n}, k = {k}")));
        }
        let side = binomial_u128(n, k);
        check_cap(side * side, caps)?;
        let sets = subsets(n, k);
        let mut monomials = Vec::with_capacity(sets.len() * sets.len());
        for &v in &sets {
            for &w in &sets {
                monomials.push(Monomial { v, w });
            }
        }
        WedgeSpace::build(SpaceFamily::SlTensor { n, k }, monomials, sl_roots(n))
    }

    fn build(family: SpaceFamily, monomials: Vec<Monomial>, roots: Vec<RootVector>) -> Result<WedgeSpace> {
        for r in &roots {
            for a in &r.units {
                for b in &r.units {
                    if a.dual == b.dual && a.source == b.target {
                        return Err(Error::Internal(format!("root vector {:?} does not square to zero", r.root)));
                    }
                }
            }
        }
        let index: HashMap<Monomial, u32> =
            monomials.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
        let mut blocks: Vec<WeightBlock> = Vec::new();
        let mut block_index: HashMap<Vec<i8>, u32> = HashMap::new();
        let mut block_of = Vec::with_capacity(monomials.len());
        let mut local_of = Vec::with_capacity(monomials.len());
        for (i, m) in monomials.iter().enumerate() {
            let wt = monomial_weight(&family, *m);
            let b = *block_index.entry(wt.clone()).or_insert_with(|| {
                blocks.push(WeightBlock { weight: wt, members: Vec::new() });
                (blocks.len() - 1) as u32
            });
            local_of.push(blocks[b as usize].members.len() as u32);
            blocks[b as usize].members.push(i as u32);
            block_of.push(b);
        }
        let dual = monomials
            .iter()
            .map(|m| {
                let (partner, sign) = dual_monomial(&family, *m);
                (index[&partner], sign)
            })
            .collect();
        let mut operators = Vec::new();
        let mut op_index = HashMap::new();
        for (ri, r) in roots.iter().enumerate() {
            for power in 1..=r.units.len().min(family.degree() * 2) {
                let mut col_start = Vec::with_capacity(monomials.len() + 1);
                let mut entries = Vec::new();
                col_start.push(0u32);
                for m in &monomials {
                    for (img, c) in divided_power_on(&r.units, power, *m) {
                        let j = *index.get(&img).ok_or_else(|| {
                            Error::Internal("operator left the ambient basis".into())
                        })?;
                        entries.push((j, c));
                    }
                    col_start.push(entries.len() as u32);
                }
                op_index.insert((ri, power), operators.len());
                operators.push(ChevalleyOperator { root_index: ri, power, col_start, entries });
            }
        }
        Ok(WedgeSpace {
            family,
            monomials,
            index,
            block_of,
            local_of,
            blocks,
            block_index,
            dual,
            roots,
            operators,
            op_index,
        })
    }

    pub fn family(&self) -> SpaceFamily {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    pub fn blocks(&self) -> &[WeightBlock] {
        &self.blocks
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i] as usize
    }

    pub fn local_of(&self, i: usize) -> usize {
        self.local_of[i] as usize
    }

    pub fn block_with_weight(&self, weight: &[i8]) -> Option<usize> {
        self.block_index.get(weight).map(|&b| b as usize)
    }

    pub fn zero_block(&self) -> Option<usize> {
        self.block_with_weight(&vec![0; self.family.weight_len()])
    }

    /// The block of weight `-μ` for block `b` of weight `μ`.
    pub fn opposite_block(&self, b: usize) -> Option<usize> {
        let neg: Vec<i8> = self.blocks[b].weight.iter().map(|x| -x).collect();
        self.block_with_weight(&neg)
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn operators(&self) -> &[ChevalleyOperator] {
        &self.operators
    }

    pub fn operator(&self, root: usize, power: usize) -> Option<&ChevalleyOperator> {
        self.op_index.get(&(root, power)).map(|&i| &self.operators[i])
    }

    /// The unique monomial pairing nontrivially with monomial `i`, and the value.
    pub fn dual_of(&self, i: usize) -> (usize, i64) {
        let (j, s) = self.dual[i];
        (j as usize, s as i64)
    }

    /// `⟨e_i, e_j⟩` on basis monomials.
    pub fn pair_monomials(&self, i: usize, j: usize) -> i64 {
        let (d, s) = self.dual_of(i);
        if d == j {
            s
        } else {
            0
        }
    }

    /// Apply an operator to a sparse vector given as `(monomial index, coefficient)`.
    pub fn apply_sparse(&self, op: &ChevalleyOperator, v: &[(u32, i64)]) -> Result<Vec<(u32, i64)>> {
        let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
        for &(i, c) in v {
            for &(j, d) in op.column(i as usize) {
                let e = acc.entry(j).or_insert(0);
                *e = c
                    .checked_mul(d)
                    .and_then(|x| e.checked_add(x))
                    .ok_or_else(|| Error::Internal("coefficient overflow".into()))?;
            }
        }
        Ok(acc.into_iter().filter(|&(_, c)| c != 0).collect())
    }

    pub fn apply(&self, op: &ChevalleyOperator, v: &IntWedgeVector) -> Result<IntWedgeVector> {
        let mut out = IntWedgeVector::new();
        for (m, c) in &v.terms {
            let i = self.require(m)?;
            for &(j, d) in op.column(i) {
                out.add_term(self.monomials[j as usize], c * BigInt::from(d));
            }
        }
        Ok(out)
    }

    fn require(&self, m: &Monomial) -> Result<usize> {
        self.monomial_index(m)
            .ok_or_else(|| Error::Input(format!("monomial {m:?} is not in the ambient space")))
    }

    /// The invariant pairing `⟨u, v⟩`.
    pub fn pair(&self, u: &IntWedgeVector, v: &IntWedgeVector) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &u.terms {
            let (d, s) = self.dual_of(self.require(m)?);
            if let Some(e) = v.terms.get(&self.monomials[d]) {
                total += c * e * s;
            }
        }
        Ok(total)
    }

    pub fn to_sparse(&self, v: &IntWedgeVector) -> Result<Vec<(u32, i64)>> {
        let mut out = Vec::with_capacity(v.terms.len());
        for (m, c) in &v.terms {
            let c: i64 = c
                .try_into()
                .map_err(|_| Error::Resource("coefficient exceeds 64 bits".into()))?;
            out.push((self.require(m)? as u32, c));
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn from_sparse(&self, v: &[(u32, i64)]) -> IntWedgeVector {
        let mut out = IntWedgeVector::new();
        for &(i, c) in v {
            out.add_term(self.monomials[i as usize], BigInt::from(c));
        }
        out
    }

    /// The monomial of the highest weight vector generating the Weyl module.
    pub fn highest_monomial(&self) -> Monomial {
        match self.family {
            SpaceFamily::Symplectic { l, k } => {
                let v = (1..=k as i32).fold(0u64, |acc, i| acc | 1 << symplectic_bit(i, l));
                Monomial { v, w: 0 }
            }
            SpaceFamily::SlTensor { n, k } => {
                let v = (1u64 << k) - 1;
                let w = ((1u64 << k) - 1) << (n - k);
                Monomial { v, w }
            }
        }
    }
}

fn check_cap(ambient: u128, caps: &Caps) -> Result<()> {
    if ambient > caps.max_ambient as u128 {
        return Err(Error::Resource(format!(
            "ambient dimension {ambient} exceeds the cap {}",
            caps.max_ambient
        )));
    }
    Ok(())
}

fn monomial_weight(family: &SpaceFamily, m: Monomial) -> Vec<i8> {
    match *family {
        SpaceFamily::Symplectic { l, .. } => {
            let mut wt = vec![0i8; l];
            for i in m.signed_indices(l) {
                wt[i.unsigned_abs() as usize - 1] += i.signum() as i8;
            }
            wt
        }
        SpaceFamily::SlTensor { n, .. } => (0..n)
            .map(|i| ((m.v >> i) & 1) as i8 - ((m.w >> i) & 1) as i8)
            .collect(),
    }
}

fn dual_monomial(family: &SpaceFamily, m: Monomial) -> (Monomial, i8) {
    match *family {
        SpaceFamily::Symplectic { l, k } => {
            // ⟨e_I, e_{-I}⟩ = det: the matching reverses the order, and each
            // negative index contributes (e_{-i}, e_i) = -1.
            let top = 2 * l as u32 - 1;
            let v = bits(m.v).fold(0u64, |acc, b| acc | 1 << (top - b));
            let negatives = (m.v & ((1u64 << l) - 1)).count_ones() as usize;
            let sign = if (k * (k - 1) / 2 + negatives) % 2 == 0 { 1 } else { -1 };
            (Monomial { v, w: 0 }, sign)
        }
        SpaceFamily::SlTensor { .. } => (Monomial { v: m.w, w: m.v }, 1),
    }
}
