//! Constructions that build new quasi-graded posets from old ones: dual,
//! Cartesian and Stanley products, pyramid, merging elements with a shared
//! up set, and zipping.

use std::fmt;

use thiserror::Error;

use crate::flag::ab_index;
use crate::ncpoly::{cd_expand, AbLetter, AbPoly, CdLetter, CdPoly};
use crate::poset::{chain_poset, Poset, PosetError, PosetSpec};
use crate::rat::int;

/// Errors raised by poset constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpsError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("cannot merge `{x}` and `{y}`: {reason}")]
    NotMergeable { x: String, y: String, reason: String },
    #[error("(`{z}`; `{x}`, `{y}`) is not a zipper: {reason}")]
    NotAZipper {
        z: String,
        x: String,
        y: String,
        reason: String,
    },
}

/// Reverses the order and flips every zeta override. Ranks are measured down
/// from the maximal rank so the new minimal element again has rank 0, and the
/// bottom and top designations swap.
pub fn dual(p: &Poset) -> Result<Poset, PosetError> {
    let max_rank = (0..p.len()).map(|i| p.rank(i)).max().unwrap_or(0);
    let mut spec = PosetSpec {
        bottom: p.top().map(|t| p.id(t).to_string()),
        top: p.bottom().map(|b| p.id(b).to_string()),
        ..Default::default()
    };
    for i in 0..p.len() {
        spec.elements
            .push((p.id(i).to_string(), max_rank - p.rank(i)));
        for j in 0..p.len() {
            if i != j && p.leq(i, j) {
                spec.relations
                    .push((p.id(j).to_string(), p.id(i).to_string()));
            }
        }
    }
    for (i, j, value) in p.zeta_overrides() {
        spec.zeta
            .push((p.id(j).to_string(), p.id(i).to_string(), value.clone()));
    }
    spec.build()
}

/// Cartesian product: pairs `(x,y)` ordered componentwise, with ranks added
/// and the zeta value of a comparable pair of pairs equal to the product of
/// the factor values. Pair ids are rendered as `(x,y)`; commas and
/// backslashes inside a component are escaped with a backslash so that
/// distinct pairs always get distinct ids.
pub fn cartesian_product(p: &Poset, q: &Poset) -> Result<Poset, PosetError> {
    let escape = |id: &str| id.replace('\\', "\\\\").replace(',', "\\,");
    let pair_id = |i: usize, j: usize| format!("({},{})", escape(p.id(i)), escape(q.id(j)));
    let bottom = match (p.bottom(), q.bottom()) {
        (Some(i), Some(j)) => Some(pair_id(i, j)),
        _ => None,
    };
    let top = match (p.top(), q.top()) {
        (Some(i), Some(j)) => Some(pair_id(i, j)),
        _ => None,
    };
    let mut spec = PosetSpec {
        bottom,
        top,
        ..Default::default()
    };
    for i in 0..p.len() {
        for j in 0..q.len() {
            spec.elements.push((pair_id(i, j), p.rank(i) + q.rank(j)));
        }
    }
    for i1 in 0..p.len() {
        for j1 in 0..q.len() {
            for i2 in 0..p.len() {
                for j2 in 0..q.len() {
                    if (i1, j1) == (i2, j2) || !p.leq(i1, i2) || !q.leq(j1, j2) {
                        continue;
                    }
                    spec.relations.push((pair_id(i1, j1), pair_id(i2, j2)));
                    let value = p.zeta_bar(i1, i2) * q.zeta_bar(j1, j2);
                    if value != int(1) {
                        spec.zeta.push((pair_id(i1, j1), pair_id(i2, j2), value));
                    }
                }
            }
        }
    }
    spec.build()
}

/// Cartesian product with the two-element chain.
///
/// The ab-index of the result is computed three ways and cross-checked:
/// direct chain enumeration over the product, the expansion
/// `b·Ψ(P) + Ψ(P)·a + Σ_x Ψ([0̂,x])·ab·Ψ([x,1̂])` over elements strictly
/// between the bounds, and `Ψ(P)·(a+b) + G(Ψ(P))` with the derivation `G`.
pub fn pyramid(p: &Poset) -> Result<(Poset, AbPoly), PosetError> {
    let (bottom, top) = p.bounds()?;
    let two_chain = chain_poset(&["0", "1"])?;
    let product = cartesian_product(p, &two_chain)?;
    let psi = ab_index(p)?;
    let direct = ab_index(&product)?;

    let a = AbPoly::var(AbLetter::A);
    let b = AbPoly::var(AbLetter::B);
    let ab = &a * &b;
    let mut with_middles = &(&b * &psi) + &(&psi * &a);
    for x in 0..p.len() {
        if x == bottom || x == top {
            continue;
        }
        let lower = ab_index(&p.interval(bottom, x)?)?;
        let upper = ab_index(&p.interval(x, top)?)?;
        with_middles += &(&(&lower * &ab) * &upper);
    }
    let with_derivation = &(&psi * &(&a + &b)) + &psi.derivation_g();

    assert_eq!(direct, with_middles, "pyramid middle-element expansion mismatch");
    assert_eq!(direct, with_derivation, "pyramid derivation expansion mismatch");
    Ok((product, direct))
}

/// Stanley product `P * Q`: `P` minus its top glued below `Q` minus its
/// bottom. Every surviving `P` element lies below every surviving `Q`
/// element, the `Q`-side ranks are lifted by `ρ_P(0̂,1̂) − 1`, and a cross
/// pair gets the zeta value `ζ̄_P(x,1̂)·ζ̄_Q(0̂,y)`. Ids are prefixed with
/// `p:` and `q:`; a single-element factor leaves the other factor untouched.
pub fn stanley_product(p: &Poset, q: &Poset) -> Result<Poset, PosetError> {
    let (pb, pt) = p.bounds()?;
    let (qb, qt) = q.bounds()?;
    if p.len() == 1 {
        return Ok(q.clone());
    }
    if q.len() == 1 {
        return Ok(p.clone());
    }
    let p_id = |i: usize| format!("p:{}", p.id(i));
    let q_id = |j: usize| format!("q:{}", q.id(j));
    let shift = p.rank(pt) - p.rank(pb) - 1;

    let mut spec = PosetSpec {
        bottom: Some(p_id(pb)),
        top: Some(q_id(qt)),
        ..Default::default()
    };
    for i in 0..p.len() {
        if i != pt {
            spec.elements.push((p_id(i), p.rank(i)));
        }
    }
    for j in 0..q.len() {
        if j != qb {
            spec.elements.push((q_id(j), q.rank(j) + shift));
        }
    }
    for i in 0..p.len() {
        for i2 in 0..p.len() {
            if i != i2 && i != pt && i2 != pt && p.leq(i, i2) {
                spec.relations.push((p_id(i), p_id(i2)));
            }
        }
    }
    for j in 0..q.len() {
        for j2 in 0..q.len() {
            if j != j2 && j != qb && j2 != qb && q.leq(j, j2) {
                spec.relations.push((q_id(j), q_id(j2)));
            }
        }
    }
    for i in 0..p.len() {
        if i == pt {
            continue;
        }
        for j in 0..q.len() {
            if j == qb {
                continue;
            }
            spec.relations.push((p_id(i), q_id(j)));
            let value = p.zeta_bar(i, pt) * q.zeta_bar(qb, j);
            if value != int(1) {
                spec.zeta.push((p_id(i), q_id(j), value));
            }
        }
    }
    for (i, j, value) in p.zeta_overrides() {
        if i != pt && j != pt {
            spec.zeta.push((p_id(i), p_id(j), value.clone()));
        }
    }
    for (i, j, value) in q.zeta_overrides() {
        if i != qb && j != qb {
            spec.zeta.push((q_id(i), q_id(j), value.clone()));
        }
    }
    spec.build()
}

fn merged_id(parts: &mut [&str]) -> String {
    parts.sort_unstable();
    format!("w:{}", parts.join("+"))
}

/// Replaces two elements of equal rank that share their up set and their
/// zeta values into it by a single element `w` whose downward zeta values
/// add: `ζ̄_Q(u,w) = ζ̄(u,x) + ζ̄(u,y)` and `ζ̄_Q(w,v) = ζ̄(x,v)`. The
/// ab-index is unchanged.
pub fn merge_equal_upset(p: &Poset, x_id: &str, y_id: &str) -> Result<Poset, OpsError> {
    let x = p.require_index(x_id)?;
    let y = p.require_index(y_id)?;
    let fail = |reason: String| OpsError::NotMergeable {
        x: x_id.to_string(),
        y: y_id.to_string(),
        reason,
    };
    if x == y {
        return Err(fail("the elements must be distinct".into()));
    }
    if p.rank(x) != p.rank(y) {
        return Err(fail("the elements must have equal rank".into()));
    }
    for v in 0..p.len() {
        if p.lt(x, v) != p.lt(y, v) {
            return Err(fail(format!("up sets differ at `{}`", p.id(v))));
        }
        if p.lt(x, v) && p.zeta_bar(x, v) != p.zeta_bar(y, v) {
            return Err(fail(format!("zeta values differ toward `{}`", p.id(v))));
        }
    }

    let w = merged_id(&mut [x_id, y_id]);
    let keep = |i: usize| i != x && i != y;
    let mut spec = PosetSpec {
        bottom: p.bottom().map(|i| p.id(i).to_string()),
        top: p.top().map(|i| p.id(i).to_string()),
        ..Default::default()
    };
    for i in 0..p.len() {
        if keep(i) {
            spec.elements.push((p.id(i).to_string(), p.rank(i)));
        }
    }
    spec.elements.push((w.clone(), p.rank(x)));
    for i in 0..p.len() {
        if !keep(i) {
            continue;
        }
        for j in 0..p.len() {
            if i != j && keep(j) && p.leq(i, j) {
                spec.relations
                    .push((p.id(i).to_string(), p.id(j).to_string()));
            }
        }
        if p.lt(i, x) || p.lt(i, y) {
            spec.relations.push((p.id(i).to_string(), w.clone()));
            let value = p.zeta_bar(i, x) + p.zeta_bar(i, y);
            if value != int(1) {
                spec.zeta.push((p.id(i).to_string(), w.clone(), value));
            }
        }
        if p.lt(x, i) {
            spec.relations.push((w.clone(), p.id(i).to_string()));
            let value = p.zeta_bar(x, i);
            if value != int(1) {
                spec.zeta.push((w.clone(), p.id(i).to_string(), value));
            }
        }
    }
    for (i, j, value) in p.zeta_overrides() {
        if keep(i) && keep(j) {
            spec.zeta
                .push((p.id(i).to_string(), p.id(j).to_string(), value.clone()));
        }
    }
    Ok(spec.build()?)
}

/// A triple of elements ready for zipping: `z` sits one rank below `x` and
/// `y`, is covered by exactly those two, sees both with zeta value 1, the
/// elements `x` and `y` have the same strict up set, and everything
/// strictly above the covering rank carries the same zeta value from `x`,
/// `y`, and `z` alike. With nowhere-zero zeta values the up-set condition
/// is already implied by the zeta agreement; zero values make it a
/// separate requirement, without which zipping can create comparabilities
/// out of thin air and break the ab-index identities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Zipper {
    pub z: String,
    pub x: String,
    pub y: String,
}

impl fmt::Display for Zipper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.z, self.x, self.y)
    }
}

fn zipper_violation(p: &Poset, z: usize, x: usize, y: usize) -> Option<String> {
    if x == y {
        return Some("`x` and `y` must be distinct".to_string());
    }
    if Some(z) == p.bottom() {
        return Some("`z` must lie strictly above the bottom".to_string());
    }
    if p.rank(x) != p.rank(z) + 1 || p.rank(y) != p.rank(z) + 1 {
        return Some("`x` and `y` must sit one rank above `z`".to_string());
    }
    if !p.lt(z, x) || !p.lt(z, y) {
        return Some("`z` must lie below `x` and `y`".to_string());
    }
    for (lo, hi) in p.covers() {
        if lo == z && hi != x && hi != y {
            return Some(format!("`z` is also covered by `{}`", p.id(hi)));
        }
    }
    if p.zeta_bar(z, x) != int(1) || p.zeta_bar(z, y) != int(1) {
        return Some("zeta from `z` to `x` and `y` must be 1".to_string());
    }
    for v in 0..p.len() {
        if p.lt(z, v) && p.rank(v) > p.rank(x) {
            let from_z = p.zeta_bar(z, v);
            if p.zeta_bar(x, v) != from_z || p.zeta_bar(y, v) != from_z {
                return Some(format!("zeta values toward `{}` disagree", p.id(v)));
            }
        }
        if p.lt(x, v) != p.lt(y, v) {
            return Some(format!(
                "`{}` lies above only one of `x` and `y`",
                p.id(v)
            ));
        }
    }
    None
}

/// Lists every zipper, ordered by the ids `(z, x, y)` with `x < y`. A
/// distinguished bottom element is never reported in the `z` position.
pub fn find_zippers(p: &Poset) -> Vec<Zipper> {
    let covers = p.covers();
    let mut out = Vec::new();
    for z in 0..p.len() {
        let mut above: Vec<usize> = covers
            .iter()
            .filter(|&&(lo, _)| lo == z)
            .map(|&(_, hi)| hi)
            .collect();
        if above.len() != 2 {
            continue;
        }
        above.sort_unstable();
        let (x, y) = (above[0], above[1]);
        if zipper_violation(p, z, x, y).is_none() {
            out.push(Zipper {
                z: p.id(z).to_string(),
                x: p.id(x).to_string(),
                y: p.id(y).to_string(),
            });
        }
    }
    out.sort();
    out
}

/// Zips a zipper: `x`, `y`, and `z` collapse to a single element `w` at the
/// rank of `x`, with `ζ̄_Q(u,w) = ζ̄(u,x) + ζ̄(u,y) − ζ̄(u,z)` below and
/// `ζ̄_Q(w,v) = ζ̄(x,v)` above.
///
/// On a bounded poset the ab-index identities are checked before returning:
/// `Ψ(Q) = Ψ(P) − Ψ([0̂,z])·d·Ψ([x,1̂])` and
/// `Ψ_Q([0̂,w]) = Ψ([0̂,x]) + Ψ([0̂,y]) − Ψ([0̂,z])·c`, along with
/// `Ψ([x,1̂]) = Ψ([y,1̂])` and `Ψ_Q([w,1̂]) = Ψ([x,1̂])`.
pub fn zip_zipper(p: &Poset, zipper: &Zipper) -> Result<Poset, OpsError> {
    let z = p.require_index(&zipper.z)?;
    let x = p.require_index(&zipper.x)?;
    let y = p.require_index(&zipper.y)?;
    if let Some(reason) = zipper_violation(p, z, x, y) {
        return Err(OpsError::NotAZipper {
            z: zipper.z.clone(),
            x: zipper.x.clone(),
            y: zipper.y.clone(),
            reason,
        });
    }

    let w = merged_id(&mut [zipper.z.as_str(), zipper.x.as_str(), zipper.y.as_str()]);
    let keep = |i: usize| i != x && i != y && i != z;
    let mut spec = PosetSpec {
        bottom: p.bottom().map(|i| p.id(i).to_string()),
        top: p.top().map(|i| p.id(i).to_string()),
        ..Default::default()
    };
    for i in 0..p.len() {
        if keep(i) {
            spec.elements.push((p.id(i).to_string(), p.rank(i)));
        }
    }
    spec.elements.push((w.clone(), p.rank(x)));
    for i in 0..p.len() {
        if !keep(i) {
            continue;
        }
        for j in 0..p.len() {
            if i != j && keep(j) && p.leq(i, j) {
                spec.relations
                    .push((p.id(i).to_string(), p.id(j).to_string()));
            }
        }
        if p.lt(i, x) || p.lt(i, y) {
            spec.relations.push((p.id(i).to_string(), w.clone()));
            let value = p.zeta_bar(i, x) + p.zeta_bar(i, y) - p.zeta_bar(i, z);
            if value != int(1) {
                spec.zeta.push((p.id(i).to_string(), w.clone(), value));
            }
        }
        if p.lt(x, i) || p.lt(y, i) {
            spec.relations.push((w.clone(), p.id(i).to_string()));
            let value = p.zeta_bar(x, i);
            if value != int(1) {
                spec.zeta.push((w.clone(), p.id(i).to_string(), value));
            }
        }
    }
    for (i, j, value) in p.zeta_overrides() {
        if keep(i) && keep(j) {
            spec.zeta
                .push((p.id(i).to_string(), p.id(j).to_string(), value.clone()));
        }
    }
    let q = spec.build()?;

    if p.bottom().is_some() && p.top().is_some() {
        let (pb, pt) = p.bounds()?;
        let psi_p = ab_index(p)?;
        let psi_q = ab_index(&q)?;
        let below_z = ab_index(&p.interval(pb, z)?)?;
        let above_x = ab_index(&p.interval(x, pt)?)?;
        let above_y = ab_index(&p.interval(y, pt)?)?;
        assert_eq!(above_x, above_y, "intervals above the two zipper tops disagree");
        let d = cd_expand(&CdPoly::var(CdLetter::D));
        assert_eq!(
            psi_q,
            &psi_p - &(&(&below_z * &d) * &above_x),
            "zipped ab-index identity failed"
        );

        let (qb, qt) = q.bounds()?;
        let wq = q.require_index(&w)?;
        let below_w = ab_index(&q.interval(qb, wq)?)?;
        let above_w = ab_index(&q.interval(wq, qt)?)?;
        let below_x = ab_index(&p.interval(pb, x)?)?;
        let below_y = ab_index(&p.interval(pb, y)?)?;
        let c = cd_expand(&CdPoly::var(CdLetter::C));
        assert_eq!(
            below_w,
            &(&below_x + &below_y) - &(&below_z * &c),
            "zipped lower-interval identity failed"
        );
        assert_eq!(above_w, above_x, "interval above the merged element changed");
    }
    Ok(q)
}
