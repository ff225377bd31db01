//! The quasisymmetric function of a bounded quasi-graded poset in the
//! monomial basis, with the quasi-shuffle product, the deconcatenation
//! coproduct, and the collapse back to the ab-index.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};

use crate::flag::a_minus_b_pow;
use crate::ncpoly::{AbLetter, AbPoly};
use crate::ops::cartesian_product;
use crate::poset::{Poset, PosetError};
use crate::rat::{render_rat, Rat};

/// A composition: a finite sequence of positive parts. The empty
/// composition is allowed and has weight 0.
pub type Composition = Vec<i64>;

/// A finitely supported rational combination of monomial quasisymmetric
/// functions, keyed by composition.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QSymElement {
    terms: BTreeMap<Composition, Rat>,
}

impl QSymElement {
    /// The zero element.
    pub fn zero() -> Self {
        QSymElement::default()
    }

    /// The unit: the monomial function of the empty composition.
    pub fn one() -> Self {
        Self::monomial(Vec::new(), Rat::one())
    }

    /// A single scaled monomial function.
    pub fn monomial(alpha: Composition, coeff: Rat) -> Self {
        let mut out = QSymElement::zero();
        out.add_term(alpha, &coeff);
        out
    }

    /// Whether no term is left.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of one composition, zero when absent.
    pub fn coeff(&self, alpha: &[i64]) -> Rat {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    /// All terms in lexicographic composition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Rat)> {
        self.terms.iter()
    }

    /// Adds `coeff` to the composition's coefficient, dropping the term if
    /// it cancels.
    pub fn add_term(&mut self, alpha: Composition, coeff: &Rat) {
        assert!(
            alpha.iter().all(|part| *part >= 1),
            "composition parts must be positive"
        );
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, scalar: &Rat) -> Self {
        let mut out = QSymElement::zero();
        for (alpha, coeff) in &self.terms {
            out.add_term(alpha.clone(), &(coeff * scalar));
        }
        out
    }

    /// The common weight of all terms, if the element is homogeneous.
    pub fn weight(&self) -> Option<i64> {
        let mut weights = self.terms.keys().map(|alpha| alpha.iter().sum::<i64>());
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// Renders terms as `M(parts)` with rational coefficients, compositions
    /// with fewer parts first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ordered: Vec<(&Composition, &Rat)> = self.terms.iter().collect();
        ordered.sort_by_key(|(alpha, _)| (alpha.len(), (*alpha).clone()));
        let mut out = String::new();
        for (i, (alpha, coeff)) in ordered.into_iter().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let magnitude = coeff.abs();
            if !magnitude.is_one() {
                out.push_str(&render_rat(&magnitude));
                out.push('*');
            }
            out.push_str("M(");
            let parts: Vec<String> = alpha.iter().map(|p| p.to_string()).collect();
            out.push_str(&parts.join(","));
            out.push(')');
        }
        out
    }
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &QSymElement {
    type Output = QSymElement;

    fn add(self, rhs: &QSymElement) -> QSymElement {
        let mut out = self.clone();
        for (alpha, coeff) in &rhs.terms {
            out.add_term(alpha.clone(), coeff);
        }
        out
    }
}

impl Sub for &QSymElement {
    type Output = QSymElement;

    fn sub(self, rhs: &QSymElement) -> QSymElement {
        let mut out = self.clone();
        for (alpha, coeff) in &rhs.terms {
            out.add_term(alpha.clone(), &(-coeff));
        }
        out
    }
}

impl Mul for &QSymElement {
    type Output = QSymElement;

    fn mul(self, rhs: &QSymElement) -> QSymElement {
        monomial_product(self, rhs)
    }
}

fn quasi_shuffles(left: &[i64], right: &[i64], out: &mut QSymElement, prefix: &mut Composition, coeff: &Rat) {
    if left.is_empty() {
        let mut alpha = prefix.clone();
        alpha.extend_from_slice(right);
        out.add_term(alpha, coeff);
        return;
    }
    if right.is_empty() {
        let mut alpha = prefix.clone();
        alpha.extend_from_slice(left);
        out.add_term(alpha, coeff);
        return;
    }
    prefix.push(left[0]);
    quasi_shuffles(&left[1..], right, out, prefix, coeff);
    prefix.pop();
    prefix.push(right[0]);
    quasi_shuffles(left, &right[1..], out, prefix, coeff);
    prefix.pop();
    prefix.push(left[0] + right[0]);
    quasi_shuffles(&left[1..], &right[1..], out, prefix, coeff);
    prefix.pop();
}

/// The bilinear extension of the quasi-shuffle of compositions: interleave
/// the parts of the two factors, optionally adding a part of one to a part
/// of the other whenever they land in the same slot.
pub fn monomial_product(x: &QSymElement, y: &QSymElement) -> QSymElement {
    let mut out = QSymElement::zero();
    for (alpha, cx) in x.terms() {
        for (beta, cy) in y.terms() {
            let mut prefix = Vec::new();
            quasi_shuffles(alpha, beta, &mut out, &mut prefix, &(cx * cy));
        }
    }
    out
}

/// A finitely supported sum of tensors of monomial quasisymmetric
/// functions, stored as coefficients on pairs of compositions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QSymTensor {
    terms: BTreeMap<(Composition, Composition), Rat>,
}

impl QSymTensor {
    /// The zero tensor.
    pub fn zero() -> Self {
        QSymTensor::default()
    }

    /// Whether no term is left.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff` on the pair, dropping it if the coefficient cancels.
    pub fn add_term(&mut self, left: Composition, right: Composition, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds the full tensor product of two elements.
    pub fn add_product(&mut self, left: &QSymElement, right: &QSymElement) {
        for (alpha, cl) in left.terms() {
            for (beta, cr) in right.terms() {
                self.add_term(alpha.clone(), beta.clone(), &(cl * cr));
            }
        }
    }

    /// All terms in lexicographic pair order.
    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, Composition), &Rat)> {
        self.terms.iter()
    }

    /// The terms as a list of element pairs, the coefficient folded into
    /// the left factor.
    pub fn pairs(&self) -> Vec<(QSymElement, QSymElement)> {
        self.terms
            .iter()
            .map(|((left, right), coeff)| {
                (
                    QSymElement::monomial(left.clone(), coeff.clone()),
                    QSymElement::monomial(right.clone(), Rat::one()),
                )
            })
            .collect()
    }
}

/// The deconcatenation coproduct: every composition splits into a prefix
/// and a suffix, both possibly empty.
pub fn monomial_coproduct(x: &QSymElement) -> QSymTensor {
    let mut out = QSymTensor::zero();
    for (alpha, coeff) in x.terms() {
        for cut in 0..=alpha.len() {
            out.add_term(alpha[..cut].to_vec(), alpha[cut..].to_vec(), coeff);
        }
    }
    out
}

/// The quasisymmetric function of a bounded poset: one monomial term per
/// chain from bottom to top, keyed by the chain's rank-gap composition and
/// weighted by the product of zeta values along the chain.
pub fn qsym_of_poset(p: &Poset) -> Result<QSymElement, PosetError> {
    let (bottom, top) = p.bounds()?;
    let mut out = QSymElement::zero();
    p.for_each_chain(bottom, top, &mut |chain| {
        let mut weight = Rat::one();
        let mut alpha = Vec::with_capacity(chain.len() - 1);
        for pair in chain.windows(2) {
            weight *= p.zeta_bar(pair[0], pair[1]);
            alpha.push(p.rank(pair[1]) - p.rank(pair[0]));
        }
        out.add_term(alpha, &weight);
    });
    Ok(out)
}

/// Collapses one composition to its ab-word: a run of a-b factors of
/// length part-1 for each part, separated by single b's.
pub fn composition_to_ab(alpha: &[i64]) -> AbPoly {
    let mut out = AbPoly::one();
    for (i, part) in alpha.iter().enumerate() {
        assert!(*part >= 1, "composition parts must be positive");
        if i > 0 {
            out = &out * &AbPoly::var(AbLetter::B);
        }
        out = &out * &a_minus_b_pow((part - 1) as usize);
    }
    out
}

/// Collapses a quasisymmetric element to an ab-polynomial term by term;
/// applied to `qsym_of_poset` this reproduces the ab-index.
pub fn qsym_to_ab(x: &QSymElement) -> AbPoly {
    let mut out = AbPoly::zero();
    for (alpha, coeff) in x.terms() {
        out = &out + &composition_to_ab(alpha).scale(coeff);
    }
    out
}

/// Checks both Hopf identities on a pair of bounded posets: the
/// quasisymmetric function turns Cartesian products into quasi-shuffle
/// products, and its coproduct matches the sum of lower-times-upper
/// interval tensors over all elements, endpoints included.
pub fn check_hopf_identities(p: &Poset, q: &Poset) -> Result<bool, PosetError> {
    let fp = qsym_of_poset(p)?;
    let fq = qsym_of_poset(q)?;
    let product = qsym_of_poset(&cartesian_product(p, q)?)?;
    if product != monomial_product(&fp, &fq) {
        return Ok(false);
    }
    for (poset, f) in [(p, &fp), (q, &fq)] {
        let (bottom, top) = poset.bounds()?;
        let mut expected = QSymTensor::zero();
        for x in 0..poset.len() {
            let lower = qsym_of_poset(&poset.interval(bottom, x)?)?;
            let upper = qsym_of_poset(&poset.interval(x, top)?)?;
            expected.add_product(&lower, &upper);
        }
        if monomial_coproduct(f) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
