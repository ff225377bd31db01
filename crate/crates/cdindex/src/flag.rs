//! The ab-index by three independent methods, flag f̄/h̄ vectors, and the
//! identity checks that tie them together (Dehn–Sommerville relations, the
//! coalgebra identity, Alexander duality, and h̄ symmetry).

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::ncpoly::{
    ab_to_cd, coproduct_delta, AbLetter, AbPoly, CdPoly, NotCdExpressible, TensorSum,
};
use crate::poset::{Poset, PosetError};
use crate::rat::Rat;

/// How to compute the ab-index.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AbIndexMethod {
    /// Direct sum of weights over all chains from bottom to top.
    Chains,
    /// Recursion that splits every chain at its largest proper prefix.
    Recursion,
    /// Recursion driven by the weighted Möbius function.
    Mobius,
}

/// `(a - b)^k`.
pub fn a_minus_b_pow(k: usize) -> AbPoly {
    let a_minus_b = &AbPoly::var(AbLetter::A) - &AbPoly::var(AbLetter::B);
    a_minus_b.pow(k)
}

/// The ab-index of a bounded poset, by the default (recursion) method.
pub fn ab_index(poset: &Poset) -> Result<AbPoly, PosetError> {
    ab_index_via(poset, AbIndexMethod::Recursion)
}

/// The ab-index of a bounded poset by the chosen method. All methods agree;
/// the result is homogeneous of degree `ρ(0̂,1̂) − 1`.
pub fn ab_index_via(poset: &Poset, method: AbIndexMethod) -> Result<AbPoly, PosetError> {
    let (bottom, top) = poset.bounds()?;
    if bottom == top {
        return Ok(AbPoly::one());
    }
    match method {
        AbIndexMethod::Chains => Ok(ab_index_chains(poset, bottom, top)),
        AbIndexMethod::Recursion => Ok(ab_index_recursion(poset, bottom, top)),
        AbIndexMethod::Mobius => Ok(ab_index_mobius(poset, bottom, top)),
    }
}

/// The cd-index: the ab-index rewritten in `c` and `d`.
pub fn cd_index(poset: &Poset) -> Result<CdPoly, CdIndexError> {
    Ok(ab_to_cd(&ab_index(poset)?)?)
}

/// Failure modes of [`cd_index`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CdIndexError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    NotCdExpressible(#[from] NotCdExpressible),
}

/// Weight of one chain: `(a−b)^{ρ₁−1} b (a−b)^{ρ₂−1} b … b (a−b)^{ρ_k−1}`
/// where the ρᵢ are the rank jumps along the chain.
fn chain_weight(poset: &Poset, chain: &[usize]) -> AbPoly {
    let b = AbPoly::var(AbLetter::B);
    let mut weight = AbPoly::one();
    for (i, step) in chain.windows(2).enumerate() {
        if i > 0 {
            weight = &weight * &b;
        }
        let jump = (poset.rank(step[1]) - poset.rank(step[0])) as usize;
        weight = &weight * &a_minus_b_pow(jump - 1);
    }
    weight
}

fn ab_index_chains(poset: &Poset, bottom: usize, top: usize) -> AbPoly {
    let mut psi = AbPoly::zero();
    poset.for_each_chain(bottom, top, &mut |chain| {
        let mut zeta = Rat::one();
        for step in chain.windows(2) {
            zeta *= poset.zeta_bar(step[0], step[1]);
        }
        psi += &chain_weight(poset, chain).scale(&zeta);
    });
    psi
}

/// Elements of `[bottom, top]` in increasing rank order, bottom first.
fn rank_order(poset: &Poset, bottom: usize, top: usize) -> Vec<usize> {
    let mut order = poset.between(bottom, top);
    order.sort_by_key(|&i| poset.rank(i));
    order
}

fn ab_index_recursion(poset: &Poset, bottom: usize, top: usize) -> AbPoly {
    // Ψ([0̂,z]) = ζ̄(0̂,z)·(a−b)^{ρ(z)−1}
    //          + Σ_{0̂<y<z} Ψ([0̂,y])·b·ζ̄(y,z)·(a−b)^{ρ(y,z)−1}
    let b = AbPoly::var(AbLetter::B);
    let mut psi: BTreeMap<usize, AbPoly> = BTreeMap::new();
    psi.insert(bottom, AbPoly::one());
    for z in rank_order(poset, bottom, top) {
        if z == bottom {
            continue;
        }
        let span = (poset.rank(z) - poset.rank(bottom)) as usize;
        let mut acc = a_minus_b_pow(span - 1).scale(&poset.zeta_bar(bottom, z));
        for y in poset.strictly_between(bottom, z) {
            let jump = (poset.rank(z) - poset.rank(y)) as usize;
            let tail = &b * &a_minus_b_pow(jump - 1).scale(&poset.zeta_bar(y, z));
            acc += &(&psi[&y] * &tail);
        }
        psi.insert(z, acc);
    }
    psi.remove(&top).unwrap()
}

fn ab_index_mobius(poset: &Poset, bottom: usize, top: usize) -> AbPoly {
    // Ψ([0̂,z]) = −μ̄(0̂,z)·(a−b)^{ρ(z)−1}
    //          − Σ_{0̂<y<z} Ψ([0̂,y])·a·μ̄(y,z)·(a−b)^{ρ(y,z)−1}
    let a = AbPoly::var(AbLetter::A);
    let mobius = poset.weighted_mobius();
    let mut psi: BTreeMap<usize, AbPoly> = BTreeMap::new();
    psi.insert(bottom, AbPoly::one());
    for z in rank_order(poset, bottom, top) {
        if z == bottom {
            continue;
        }
        let span = (poset.rank(z) - poset.rank(bottom)) as usize;
        let mut acc = a_minus_b_pow(span - 1).scale(&-mobius.get(bottom, z));
        for y in poset.strictly_between(bottom, z) {
            let jump = (poset.rank(z) - poset.rank(y)) as usize;
            let tail = &a * &a_minus_b_pow(jump - 1).scale(&-mobius.get(y, z));
            acc += &(&psi[&y] * &tail);
        }
        psi.insert(z, acc);
    }
    psi.remove(&top).unwrap()
}

/// Flag vector: exact rationals indexed by subsets of `{1,…,n}`, stored as
/// bitmasks with bit `i−1` standing for rank `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    /// Interior rank count: the poset has rank `n + 1`.
    pub n: usize,
    values: BTreeMap<u64, Rat>,
}

impl FlagVector {
    fn new(n: usize) -> Self {
        FlagVector {
            n,
            values: BTreeMap::new(),
        }
    }

    /// Bitmask for a set of ranks.
    pub fn mask_of(set: &BTreeSet<i64>) -> u64 {
        set.iter().map(|&r| 1u64 << (r - 1)).sum()
    }

    /// The set of ranks a bitmask stands for.
    pub fn set_of(mask: u64) -> BTreeSet<i64> {
        (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
    }

    /// Value at a subset given as a bitmask.
    pub fn get_mask(&self, mask: u64) -> Rat {
        self.values.get(&mask).cloned().unwrap_or_else(Rat::zero)
    }

    /// Value at a subset of ranks.
    pub fn get(&self, set: &BTreeSet<i64>) -> Rat {
        self.get_mask(Self::mask_of(set))
    }

    fn add(&mut self, mask: u64, value: Rat) {
        if value.is_zero() {
            return;
        }
        let slot = self.values.entry(mask).or_insert_with(Rat::zero);
        *slot += value;
        if slot.is_zero() {
            self.values.remove(&mask);
        }
    }

    /// Iterates the nonzero entries in mask order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &Rat)> {
        self.values.iter().map(|(&mask, value)| (mask, value))
    }
}

/// The flag f̄-vector: `f̄_S` sums `ζ̄` products over the chains from bottom
/// to top whose interior ranks are exactly `S`.
pub fn flag_f_vector(poset: &Poset) -> Result<FlagVector, PosetError> {
    let (bottom, top) = poset.bounds()?;
    let span = poset.rank(top) - poset.rank(bottom);
    if span < 1 {
        return Err(PosetError::MissingBounds);
    }
    if span > 62 {
        return Err(PosetError::RankTooLarge(span));
    }
    let n = (span - 1) as usize;
    let mut flags = FlagVector::new(n);
    poset.for_each_chain(bottom, top, &mut |chain| {
        let mut zeta = Rat::one();
        for step in chain.windows(2) {
            zeta *= poset.zeta_bar(step[0], step[1]);
        }
        let mut mask = 0u64;
        for &y in &chain[1..chain.len() - 1] {
            mask |= 1 << (poset.rank(y) - 1);
        }
        flags.add(mask, zeta);
    });
    Ok(flags)
}

/// The flag h̄-vector: `h̄_S = Σ_{T⊆S} (−1)^{|S∖T|} f̄_T`.
pub fn flag_h_vector(poset: &Poset) -> Result<FlagVector, PosetError> {
    let f = flag_f_vector(poset)?;
    let mut h = FlagVector::new(f.n);
    for s in 0u64..1 << f.n {
        let mut sum = Rat::zero();
        let mut t = s;
        loop {
            let sign_flips = (s ^ t).count_ones();
            let term = f.get_mask(t);
            if sign_flips % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
        h.add(s, sum);
    }
    Ok(h)
}

/// Rebuilds the ab-index from an h̄-vector: `Ψ = Σ_S h̄_S u_S` with
/// `u_i = b` for `i ∈ S` and `u_i = a` otherwise.
pub fn ab_index_from_flag_h(h: &FlagVector) -> AbPoly {
    let mut psi = AbPoly::zero();
    for (mask, value) in h.iter() {
        let word: Vec<AbLetter> = (0..h.n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    AbLetter::B
                } else {
                    AbLetter::A
                }
            })
            .collect();
        psi.add_term(word, value);
    }
    psi
}

/// A Dehn–Sommerville relation that fails: the subset, the gap ends, and the
/// nonzero alternating sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DsWitness {
    pub s: BTreeSet<i64>,
    pub i: i64,
    pub k: i64,
    pub sum: Rat,
}

/// Checks the generalized Dehn–Sommerville relations on the flag f̄-vector:
/// for every `S ⊆ {1..n}` and every pair `i < k` in `S ∪ {0, n+1}` with no
/// element of `S` strictly between, `Σ_{j=i}^{k} (−1)^j f̄_{S∪{j}} = 0`,
/// where `f̄_{S∪{0}}` and `f̄_{S∪{n+1}}` mean `f̄_S`. Returns the first
/// failing relation, or `None` when all hold.
pub fn dehn_sommerville_witness(poset: &Poset) -> Result<Option<DsWitness>, PosetError> {
    let f = flag_f_vector(poset)?;
    let n = f.n as i64;
    for s in 0u64..1 << f.n {
        let mut points: Vec<i64> = vec![0];
        points.extend((1..=n).filter(|&r| s >> (r - 1) & 1 == 1));
        points.push(n + 1);
        for gap in points.windows(2) {
            let (i, k) = (gap[0], gap[1]);
            let mut sum = Rat::zero();
            for j in i..=k {
                let mask = if j == 0 || j == n + 1 {
                    s
                } else {
                    s | 1 << (j - 1)
                };
                let term = f.get_mask(mask);
                if j % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            if !sum.is_zero() {
                return Ok(Some(DsWitness {
                    s: FlagVector::set_of(s),
                    i,
                    k,
                    sum,
                }));
            }
        }
    }
    Ok(None)
}

/// Checks `Δ(Ψ(P)) = Σ_{0̂<x<1̂} Ψ([0̂,x]) ⊗ Ψ([x,1̂])`.
pub fn check_coalgebra_identity(poset: &Poset) -> Result<bool, PosetError> {
    let (bottom, top) = poset.bounds()?;
    let lhs = coproduct_delta(&ab_index(poset)?);
    let mut rhs = TensorSum::zero();
    for x in poset.strictly_between(bottom, top) {
        let lower = ab_index(&poset.interval(bottom, x)?)?;
        let upper = ab_index(&poset.interval(x, top)?)?;
        rhs.add_product(&lower, &upper);
    }
    Ok(lhs == rhs)
}

/// Checks Alexander duality for a complementary pair of subposets:
/// `(ζ̄|_Q)⁻¹(0̂,1̂) = (−1)^n (ζ̄|_R)⁻¹(0̂,1̂)` where `Q ∪ R = P` and
/// `Q ∩ R = {0̂, 1̂}`, with `n + 1` the rank of the poset.
pub fn check_alexander_duality(
    poset: &Poset,
    q: &BTreeSet<String>,
    r: &BTreeSet<String>,
) -> Result<bool, PosetError> {
    let (bottom, top) = poset.bounds()?;
    let bottom_id = poset.id(bottom).to_string();
    let top_id = poset.id(top).to_string();
    let union_is_all = poset.ids().iter().all(|id| q.contains(id) || r.contains(id));
    let meet: BTreeSet<&String> = q.intersection(r).collect();
    let bounds_only = meet.len() == 2 && meet.contains(&bottom_id) && meet.contains(&top_id);
    if !union_is_all || !bounds_only {
        return Err(PosetError::NotComplementary);
    }
    let n = poset.rank_span()? - 1;
    let lhs = poset.restricted_zeta_inverse(q)?;
    let rhs = poset.restricted_zeta_inverse(r)?;
    Ok(lhs == if n % 2 == 0 { rhs } else { -rhs })
}

/// Checks `h̄_S = h̄_{S̄}` for every subset `S` of `{1,…,n}`.
pub fn check_h_symmetry(poset: &Poset) -> Result<bool, PosetError> {
    let h = flag_h_vector(poset)?;
    let full = (1u64 << h.n) - 1;
    for s in 0..=full {
        if h.get_mask(s) != h.get_mask(full ^ s) {
            return Ok(false);
        }
    }
    Ok(true)
}
