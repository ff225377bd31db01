//! Quasi-graded posets: finite posets with a strictly order-preserving rank
//! function and a rational weighted zeta function on comparable pairs.
//!
//! The weighted zeta defaults to 1 on every strictly comparable pair, is
//! fixed at 1 on the diagonal, and is conceptually 0 on incomparable pairs.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::rat::{frac, Rat};

/// Errors raised while building or transforming posets.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("duplicate element id `{0}`")]
    DuplicateElement(String),
    #[error("unknown element id `{0}`")]
    UnknownElement(String),
    #[error("relation cycle through `{0}`")]
    Cycle(String),
    #[error("rank does not increase from `{lo}` to `{hi}`")]
    RankNotStrict { lo: String, hi: String },
    #[error("zeta override on incomparable pair (`{from}`, `{to}`)")]
    ZetaOnIncomparable { from: String, to: String },
    #[error("zeta on (`{0}`, `{0}`) must be 1")]
    ReflexiveZetaNotOne(String),
    #[error("conflicting zeta overrides for (`{from}`, `{to}`)")]
    DuplicateZeta { from: String, to: String },
    #[error("declared bound `{bound}` is not comparable to `{element}`")]
    BoundNotComparable { bound: String, element: String },
    #[error("operation requires a poset with bottom and top elements")]
    MissingBounds,
    #[error("`{lo}` is not below `{hi}`")]
    NotComparable { lo: String, hi: String },
    #[error("rank selection must stay strictly between the bounds; rank {0} is not allowed")]
    InvalidRankSelection(i64),
    #[error("subposet must contain the bottom and top elements")]
    SubsetMissingBounds,
    #[error("zeta already specified on even-rank-difference pair (`{from}`, `{to}`)")]
    EvenPairSpecified { from: String, to: String },
    #[error("subsets must cover the poset and meet only in the bounds")]
    NotComplementary,
    #[error("rank {0} is larger than flag vectors support")]
    RankTooLarge(i64),
}

/// Plain description of a poset, validated by [`PosetSpec::build`].
#[derive(Clone, Debug, Default)]
pub struct PosetSpec {
    /// Element ids with their ranks.
    pub elements: Vec<(String, i64)>,
    /// Generating relations `x ≤ y`: cover relations or any comparable pairs.
    pub relations: Vec<(String, String)>,
    /// Id of the bottom element, if one is distinguished.
    pub bottom: Option<String>,
    /// Id of the top element, if one is distinguished.
    pub top: Option<String>,
    /// Weighted zeta overrides on strictly comparable pairs.
    pub zeta: Vec<(String, String, Rat)>,
}

/// A validated quasi-graded poset.
///
/// Elements are indexed by position in the sorted id list, so index order is
/// the lexicographic order of ids. Ranks are normalized at build time so the
/// least rank is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    ids: Vec<String>,
    ranks: Vec<i64>,
    leq: Vec<bool>,
    zeta: BTreeMap<(usize, usize), Rat>,
    bottom: Option<usize>,
    top: Option<usize>,
}

impl PosetSpec {
    /// Validates the description and produces a poset.
    pub fn build(self) -> Result<Poset, PosetError> {
        let mut ids: Vec<String> = self.elements.iter().map(|(id, _)| id.clone()).collect();
        ids.sort();
        for pair in ids.windows(2) {
            if pair[0] == pair[1] {
                return Err(PosetError::DuplicateElement(pair[0].clone()));
            }
        }
        let n = ids.len();
        let index: BTreeMap<&str, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();
        let lookup = |id: &str| -> Result<usize, PosetError> {
            index
                .get(id)
                .copied()
                .ok_or_else(|| PosetError::UnknownElement(id.to_string()))
        };

        let mut ranks = vec![0i64; n];
        for (id, rank) in &self.elements {
            ranks[index[id.as_str()]] = *rank;
        }

        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (lo, hi) in &self.relations {
            leq[lookup(lo)? * n + lookup(hi)?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }

        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] {
                    if leq[j * n + i] {
                        return Err(PosetError::Cycle(ids[i].clone()));
                    }
                    if ranks[i] >= ranks[j] {
                        return Err(PosetError::RankNotStrict {
                            lo: ids[i].clone(),
                            hi: ids[j].clone(),
                        });
                    }
                }
            }
        }

        let bottom = match &self.bottom {
            Some(id) => Some(lookup(id)?),
            None => None,
        };
        let top = match &self.top {
            Some(id) => Some(lookup(id)?),
            None => None,
        };
        if let Some(b) = bottom {
            for i in 0..n {
                if !leq[b * n + i] {
                    return Err(PosetError::BoundNotComparable {
                        bound: ids[b].clone(),
                        element: ids[i].clone(),
                    });
                }
            }
        }
        if let Some(t) = top {
            for i in 0..n {
                if !leq[i * n + t] {
                    return Err(PosetError::BoundNotComparable {
                        bound: ids[t].clone(),
                        element: ids[i].clone(),
                    });
                }
            }
        }

        if let Some(least) = ranks.iter().copied().min() {
            if least != 0 {
                for rank in &mut ranks {
                    *rank -= least;
                }
            }
        }

        let mut zeta = BTreeMap::new();
        for (from, to, value) in &self.zeta {
            let i = lookup(from)?;
            let j = lookup(to)?;
            if i == j {
                if !value.is_one() {
                    return Err(PosetError::ReflexiveZetaNotOne(from.clone()));
                }
                continue;
            }
            if !leq[i * n + j] {
                return Err(PosetError::ZetaOnIncomparable {
                    from: from.clone(),
                    to: to.clone(),
                });
            }
            if zeta.insert((i, j), value.clone()).is_some() {
                return Err(PosetError::DuplicateZeta {
                    from: from.clone(),
                    to: to.clone(),
                });
            }
        }

        Ok(Poset {
            ids,
            ranks,
            leq,
            zeta,
            bottom,
            top,
        })
    }
}

impl Poset {
    /// Number of elements.
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    /// True for the empty poset.
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// All element ids in index (= lexicographic) order.
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    /// Id of the element at an index.
    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    /// Index of an id, if present.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    /// Index of an id, or an error naming the missing id.
    pub fn require_index(&self, id: &str) -> Result<usize, PosetError> {
        self.index_of(id)
            .ok_or_else(|| PosetError::UnknownElement(id.to_string()))
    }

    /// Rank of the element at an index.
    pub fn rank(&self, i: usize) -> i64 {
        self.ranks[i]
    }

    /// Whether `i ≤ j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    /// Whether `i < j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Index of the bottom element, if declared.
    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    /// Index of the top element, if declared.
    pub fn top(&self) -> Option<usize> {
        self.top
    }

    /// Bottom and top indices, or an error when either is missing.
    pub fn bounds(&self) -> Result<(usize, usize), PosetError> {
        match (self.bottom, self.top) {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(PosetError::MissingBounds),
        }
    }

    /// Rank distance from bottom to top.
    pub fn rank_span(&self) -> Result<i64, PosetError> {
        let (bottom, top) = self.bounds()?;
        Ok(self.ranks[top] - self.ranks[bottom])
    }

    /// The weighted zeta value of a pair: 1 on the diagonal, the override or
    /// default 1 on strictly comparable pairs, 0 otherwise.
    pub fn zeta_bar(&self, i: usize, j: usize) -> Rat {
        if i == j {
            return Rat::one();
        }
        if !self.leq(i, j) {
            return Rat::zero();
        }
        self.zeta
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rat::one)
    }

    /// Whether the pair carries an explicitly assigned zeta value.
    pub fn has_explicit_zeta(&self, i: usize, j: usize) -> bool {
        self.zeta.contains_key(&(i, j))
    }

    /// Iterates the explicitly assigned zeta values.
    pub fn zeta_overrides(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.zeta.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub(crate) fn set_zeta(&mut self, i: usize, j: usize, value: Rat) {
        self.zeta.insert((i, j), value);
    }

    /// All cover relations `i ⋖ j`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Elements `y` with `x ≤ y ≤ z`, in index order.
    pub fn between(&self, x: usize, z: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| self.leq(x, y) && self.leq(y, z))
            .collect()
    }

    /// Elements `y` with `x < y < z`, in index order.
    pub fn strictly_between(&self, x: usize, z: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| self.lt(x, y) && self.lt(y, z))
            .collect()
    }

    /// Builds the poset on a subset of elements with inherited order and zeta,
    /// ranks shifted by `rank_shift`.
    fn subposet(
        &self,
        keep: &[usize],
        bottom: Option<usize>,
        top: Option<usize>,
        rank_shift: i64,
    ) -> Poset {
        let position: BTreeMap<usize, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let m = keep.len();
        let mut leq = vec![false; m * m];
        for (new_i, &old_i) in keep.iter().enumerate() {
            for (new_j, &old_j) in keep.iter().enumerate() {
                leq[new_i * m + new_j] = self.leq(old_i, old_j);
            }
        }
        let zeta = self
            .zeta
            .iter()
            .filter_map(|(&(i, j), v)| {
                Some(((*position.get(&i)?, *position.get(&j)?), v.clone()))
            })
            .collect();
        Poset {
            ids: keep.iter().map(|&i| self.ids[i].clone()).collect(),
            ranks: keep.iter().map(|&i| self.ranks[i] + rank_shift).collect(),
            leq,
            zeta,
            bottom: bottom.map(|b| position[&b]),
            top: top.map(|t| position[&t]),
        }
    }

    /// The closed interval `[x, z]` as a poset of its own, with ranks shifted
    /// so `x` has rank 0; `x` becomes the bottom and `z` the top.
    pub fn interval(&self, x: usize, z: usize) -> Result<Poset, PosetError> {
        if !self.leq(x, z) {
            return Err(PosetError::NotComparable {
                lo: self.ids[x].clone(),
                hi: self.ids[z].clone(),
            });
        }
        let keep = self.between(x, z);
        Ok(self.subposet(&keep, Some(x), Some(z), -self.ranks[x]))
    }

    /// Keeps the elements whose rank lies in `S`, together with the bottom
    /// and top; order, ranks, and zeta are inherited.
    pub fn rank_selection(&self, selected: &BTreeSet<i64>) -> Result<Poset, PosetError> {
        let (bottom, top) = self.bounds()?;
        let span = self.ranks[top] - self.ranks[bottom];
        for &rank in selected {
            if rank < 1 || rank >= span {
                return Err(PosetError::InvalidRankSelection(rank));
            }
        }
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| i == bottom || i == top || selected.contains(&self.ranks[i]))
            .collect();
        Ok(self.subposet(&keep, Some(bottom), Some(top), 0))
    }

    /// Calls `visit` once per chain `from = t₀ < t₁ < … < t_k = to` whose
    /// elements all satisfy `allow`; endpoints are included in the slice.
    pub fn for_each_chain_where(
        &self,
        from: usize,
        to: usize,
        allow: &dyn Fn(usize) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        fn go(
            poset: &Poset,
            path: &mut Vec<usize>,
            to: usize,
            allow: &dyn Fn(usize) -> bool,
            visit: &mut dyn FnMut(&[usize]),
        ) {
            let last = *path.last().unwrap();
            if last == to {
                visit(path);
                return;
            }
            for next in 0..poset.len() {
                if poset.lt(last, next) && poset.leq(next, to) && allow(next) {
                    path.push(next);
                    go(poset, path, to, allow, visit);
                    path.pop();
                }
            }
        }
        if !self.leq(from, to) || !allow(from) || !allow(to) {
            return;
        }
        go(self, &mut vec![from], to, allow, visit);
    }

    /// Calls `visit` once per chain from `from` to `to`.
    pub fn for_each_chain(&self, from: usize, to: usize, visit: &mut dyn FnMut(&[usize])) {
        self.for_each_chain_where(from, to, &|_| true, visit);
    }

    /// The weighted Möbius function, the incidence-algebra inverse of zeta.
    pub fn weighted_mobius(&self) -> IncidenceFunction {
        let n = self.len();
        let mut values = BTreeMap::new();
        for i in 0..n {
            values.insert((i, i), Rat::one());
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) {
                    pairs.push((i, j));
                }
            }
        }
        pairs.sort_by_key(|&(i, j)| self.ranks[j] - self.ranks[i]);
        for (i, j) in pairs {
            let mut sum = Rat::zero();
            for z in 0..n {
                if self.leq(i, z) && self.lt(z, j) {
                    sum += &values[&(i, z)] * self.zeta_bar(z, j);
                }
            }
            values.insert((i, j), -sum);
        }
        IncidenceFunction { values }
    }

    /// Checks the Eulerian condition on every interval: the alternating
    /// convolution of zeta with itself must be the delta function. Returns
    /// the lexicographically least violating pair, or `None` when Eulerian.
    pub fn eulerian_witness(&self) -> Option<EulerianWitness> {
        let n = self.len();
        let mut by_id: Vec<usize> = (0..n).collect();
        by_id.sort_by_key(|&i| &self.ids[i]);
        for &i in &by_id {
            for &j in &by_id {
                if !self.lt(i, j) {
                    continue;
                }
                let mut sum = Rat::zero();
                for y in 0..n {
                    if self.leq(i, y) && self.leq(y, j) {
                        let term = self.zeta_bar(i, y) * self.zeta_bar(y, j);
                        if (self.ranks[y] - self.ranks[i]) % 2 == 0 {
                            sum += term;
                        } else {
                            sum -= term;
                        }
                    }
                }
                if !sum.is_zero() {
                    return Some(EulerianWitness {
                        x: self.ids[i].clone(),
                        z: self.ids[j].clone(),
                        sum,
                    });
                }
            }
        }
        None
    }

    /// True when every interval satisfies the Eulerian condition.
    pub fn is_eulerian(&self) -> bool {
        self.eulerian_witness().is_none()
    }

    /// Fills the zeta values on even-rank-difference pairs from the values on
    /// odd pairs, producing an Eulerian poset. The even pairs must not carry
    /// explicit values already.
    pub fn complete_eulerian(&self) -> Result<Poset, PosetError> {
        for (&(i, j), _) in &self.zeta {
            if (self.ranks[j] - self.ranks[i]) % 2 == 0 {
                return Err(PosetError::EvenPairSpecified {
                    from: self.ids[i].clone(),
                    to: self.ids[j].clone(),
                });
            }
        }
        let n = self.len();
        let mut out = self.clone();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && (self.ranks[j] - self.ranks[i]) % 2 == 0 {
                    pairs.push((i, j));
                }
            }
        }
        pairs.sort_by_key(|&(i, j)| self.ranks[j] - self.ranks[i]);
        for (i, j) in pairs {
            let mut sum = Rat::zero();
            for y in out.strictly_between(i, j) {
                let term = out.zeta_bar(i, y) * out.zeta_bar(y, j);
                if (out.ranks[y] - out.ranks[i]) % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            out.set_zeta(i, j, sum * frac(-1, 2));
        }
        Ok(out)
    }

    /// Evaluates `(ζ̄|_Q)⁻¹(0̂, 1̂)` by the chain-sum formula over the chains
    /// of `P` that stay inside the subset `Q`.
    pub fn restricted_zeta_inverse(&self, subset: &BTreeSet<String>) -> Result<Rat, PosetError> {
        let (bottom, top) = self.bounds()?;
        let mut keep = BTreeSet::new();
        for id in subset {
            keep.insert(self.require_index(id)?);
        }
        if !keep.contains(&bottom) || !keep.contains(&top) {
            return Err(PosetError::SubsetMissingBounds);
        }
        let mut total = Rat::zero();
        self.for_each_chain_where(bottom, top, &|i| keep.contains(&i), &mut |chain| {
            let mut product = Rat::one();
            for step in chain.windows(2) {
                product *= self.zeta_bar(step[0], step[1]);
            }
            if (chain.len() - 1) % 2 == 1 {
                product = -product;
            }
            total += product;
        });
        Ok(total)
    }

    /// Structural and numerical equality: same ids, ranks, order, and
    /// effective zeta values (explicitness of defaults is ignored).
    pub fn semantic_eq(&self, other: &Poset) -> bool {
        if self.ids != other.ids
            || self.ranks != other.ranks
            || self.leq != other.leq
            || self.bottom != other.bottom
            || self.top != other.top
        {
            return false;
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.leq(i, j) && self.zeta_bar(i, j) != other.zeta_bar(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

/// A pair `x < z` at which the Eulerian condition fails, with the offending
/// alternating sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianWitness {
    pub x: String,
    pub z: String,
    pub sum: Rat,
}

/// Rational-valued function on the comparable pairs of a fixed poset.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IncidenceFunction {
    values: BTreeMap<(usize, usize), Rat>,
}

impl IncidenceFunction {
    /// The delta function on a poset of `n` elements.
    pub fn delta(n: usize) -> Self {
        IncidenceFunction {
            values: (0..n).map(|i| ((i, i), Rat::one())).collect(),
        }
    }

    /// The weighted zeta of a poset as an explicit incidence function.
    pub fn zeta_of(poset: &Poset) -> Self {
        let mut values = BTreeMap::new();
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                if poset.leq(i, j) {
                    values.insert((i, j), poset.zeta_bar(i, j));
                }
            }
        }
        IncidenceFunction { values }
    }

    /// Value on a pair, zero when absent.
    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.values.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Sets the value on a pair.
    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.values.insert((i, j), value);
    }

    /// Convolution over the poset: `(f·g)(x,y) = Σ_{x≤z≤y} f(x,z)·g(z,y)`.
    pub fn convolve(&self, other: &IncidenceFunction, poset: &Poset) -> IncidenceFunction {
        let mut values = BTreeMap::new();
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                if !poset.leq(i, j) {
                    continue;
                }
                let mut sum = Rat::zero();
                for z in poset.between(i, j) {
                    sum += self.get(i, z) * other.get(z, j);
                }
                values.insert((i, j), sum);
            }
        }
        IncidenceFunction { values }
    }

    /// True when the function is the delta of the poset.
    pub fn is_delta(&self, poset: &Poset) -> bool {
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                if !poset.leq(i, j) {
                    continue;
                }
                let expected = if i == j { Rat::one() } else { Rat::zero() };
                if self.get(i, j) != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds the poset of a chain `ids[0] < ids[1] < …` with consecutive ranks.
pub fn chain_poset(ids: &[&str]) -> Result<Poset, PosetError> {
    let spec = PosetSpec {
        elements: ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.to_string(), i as i64))
            .collect(),
        relations: ids
            .windows(2)
            .map(|w| (w[0].to_string(), w[1].to_string()))
            .collect(),
        bottom: ids.first().map(|id| id.to_string()),
        top: ids.last().map(|id| id.to_string()),
        zeta: Vec::new(),
    };
    spec.build()
}
