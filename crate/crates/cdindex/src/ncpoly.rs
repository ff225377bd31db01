//! Noncommutative polynomials with exact rational coefficients over the
//! alphabets `{a, b}` and `{c, d}`.
//!
//! Words multiply by concatenation. The alphabets are linked by the
//! substitution `c = a + b`, `d = ab + ba`; [`ab_to_cd`] inverts the
//! substitution where possible by solving a linear system per degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::rat::{parse_rat, render_rat, Rat};

/// A variable from one of the two supported alphabets.
pub trait Letter: Copy + Ord + fmt::Debug + 'static {
    /// All letters of the alphabet, in their canonical order.
    const ALPHABET: &'static [Self];

    /// Single-character name of the letter.
    fn symbol(self) -> char;

    /// Looks a letter up by its single-character name.
    fn from_symbol(ch: char) -> Option<Self>;

    /// Contribution of this letter to the degree of a word.
    fn degree(self) -> usize;

    /// Image of the letter under the derivation G, as a polynomial.
    fn g_image(self) -> NcPoly<Self>;
}

/// Letter of the alphabet `{a, b}`; both letters have degree 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum AbLetter {
    A,
    B,
}

/// Letter of the alphabet `{c, d}`; `c` has degree 1 and `d` degree 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum CdLetter {
    C,
    D,
}

impl Letter for AbLetter {
    const ALPHABET: &'static [Self] = &[AbLetter::A, AbLetter::B];

    fn symbol(self) -> char {
        match self {
            AbLetter::A => 'a',
            AbLetter::B => 'b',
        }
    }

    fn from_symbol(ch: char) -> Option<Self> {
        match ch {
            'a' => Some(AbLetter::A),
            'b' => Some(AbLetter::B),
            _ => None,
        }
    }

    fn degree(self) -> usize {
        1
    }

    fn g_image(self) -> NcPoly<Self> {
        match self {
            AbLetter::A => NcPoly::from_word(vec![AbLetter::B, AbLetter::A]),
            AbLetter::B => NcPoly::from_word(vec![AbLetter::A, AbLetter::B]),
        }
    }
}

impl Letter for CdLetter {
    const ALPHABET: &'static [Self] = &[CdLetter::C, CdLetter::D];

    fn symbol(self) -> char {
        match self {
            CdLetter::C => 'c',
            CdLetter::D => 'd',
        }
    }

    fn from_symbol(ch: char) -> Option<Self> {
        match ch {
            'c' => Some(CdLetter::C),
            'd' => Some(CdLetter::D),
            _ => None,
        }
    }

    fn degree(self) -> usize {
        match self {
            CdLetter::C => 1,
            CdLetter::D => 2,
        }
    }

    fn g_image(self) -> NcPoly<Self> {
        match self {
            CdLetter::C => NcPoly::from_word(vec![CdLetter::D]),
            CdLetter::D => NcPoly::from_word(vec![CdLetter::C, CdLetter::D]),
        }
    }
}

/// A word over an alphabet; the empty word is the multiplicative identity.
pub type Word<L> = Vec<L>;

/// Degree of a word, summing the degrees of its letters.
pub fn word_degree<L: Letter>(word: &[L]) -> usize {
    word.iter().map(|l| l.degree()).sum()
}

/// Noncommutative polynomial stored as a word-to-coefficient map; zero
/// coefficients are never kept.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NcPoly<L: Letter> {
    terms: BTreeMap<Word<L>, Rat>,
}

/// Polynomial over `{a, b}`.
pub type AbPoly = NcPoly<AbLetter>;

/// Polynomial over `{c, d}`.
pub type CdPoly = NcPoly<CdLetter>;

impl<L: Letter> NcPoly<L> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1 (the empty word).
    pub fn one() -> Self {
        NcPoly::from_word(Vec::new())
    }

    /// The polynomial consisting of a single word with coefficient 1.
    pub fn from_word(word: Word<L>) -> Self {
        NcPoly::monomial(word, Rat::one())
    }

    /// A single letter as a polynomial.
    pub fn var(letter: L) -> Self {
        NcPoly::from_word(vec![letter])
    }

    /// A single word with the given coefficient.
    pub fn monomial(word: Word<L>, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { terms }
    }

    /// A constant polynomial.
    pub fn constant(value: Rat) -> Self {
        NcPoly::monomial(Vec::new(), value)
    }

    /// True when the polynomial has no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a word, zero when absent.
    pub fn coeff(&self, word: &[L]) -> Rat {
        self.terms.get(word).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterates terms in canonical (lexicographic) word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word<L>, &Rat)> {
        self.terms.iter()
    }

    /// Number of words with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff * word` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, word: Word<L>, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
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
        if scalar.is_zero() {
            return NcPoly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c * scalar))
            .collect();
        NcPoly { terms }
    }

    /// Largest word degree present, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| word_degree(w)).max()
    }

    /// True when all words share one degree (vacuously true for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|w| word_degree(w));
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    /// The sum of the terms of the given degree.
    pub fn homogeneous_component(&self, degree: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| word_degree(w) == degree)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        NcPoly { terms }
    }

    /// `self` raised to a non-negative integer power.
    pub fn pow(&self, exponent: usize) -> Self {
        let mut result = NcPoly::one();
        for _ in 0..exponent {
            result = &result * self;
        }
        result
    }

    /// Reverses every word; an involution and anti-automorphism.
    pub fn star(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut rev = w.clone();
                rev.reverse();
                (rev, c.clone())
            })
            .collect();
        NcPoly { terms }
    }

    /// The derivation G extended to polynomials by linearity and the Leibniz
    /// rule, with `G(a) = ba`, `G(b) = ab` on one alphabet and `G(c) = d`,
    /// `G(d) = cd` on the other.
    pub fn derivation_g(&self) -> Self {
        let mut result = NcPoly::zero();
        for (word, coeff) in &self.terms {
            for i in 0..word.len() {
                let image = word[i].g_image();
                for (mid, mid_coeff) in image.terms() {
                    let mut new_word = Vec::with_capacity(word.len() + mid.len());
                    new_word.extend_from_slice(&word[..i]);
                    new_word.extend_from_slice(mid);
                    new_word.extend_from_slice(&word[i + 1..]);
                    result.add_term(new_word, &(coeff * mid_coeff));
                }
            }
        }
        result
    }

    /// Parses the shared polynomial grammar for this alphabet.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text).parse_poly()
    }

    /// Renders the canonical text form: terms in lexicographic word order,
    /// letter runs compressed with `^`, coefficients as `p` or `p/q`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
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
            if word.is_empty() {
                out.push_str(&render_rat(&magnitude));
            } else {
                if !magnitude.is_one() {
                    out.push_str(&render_rat(&magnitude));
                    out.push('*');
                }
                out.push_str(&render_word(word));
            }
        }
        out
    }
}

fn render_word<L: Letter>(word: &[L]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut run = 1;
        while i + run < word.len() && word[i + run] == word[i] {
            run += 1;
        }
        out.push(word[i].symbol());
        if run > 1 {
            out.push('^');
            out.push_str(&run.to_string());
        }
        i += run;
    }
    out
}

impl<L: Letter> fmt::Display for NcPoly<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<L: Letter> AddAssign<&NcPoly<L>> for NcPoly<L> {
    fn add_assign(&mut self, rhs: &NcPoly<L>) {
        for (word, coeff) in &rhs.terms {
            self.add_term(word.clone(), coeff);
        }
    }
}

impl<L: Letter> SubAssign<&NcPoly<L>> for NcPoly<L> {
    fn sub_assign(&mut self, rhs: &NcPoly<L>) {
        for (word, coeff) in &rhs.terms {
            self.add_term(word.clone(), &(-coeff));
        }
    }
}

impl<L: Letter> Add for &NcPoly<L> {
    type Output = NcPoly<L>;

    fn add(self, rhs: &NcPoly<L>) -> NcPoly<L> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<L: Letter> Sub for &NcPoly<L> {
    type Output = NcPoly<L>;

    fn sub(self, rhs: &NcPoly<L>) -> NcPoly<L> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<L: Letter> Neg for &NcPoly<L> {
    type Output = NcPoly<L>;

    fn neg(self) -> NcPoly<L> {
        self.scale(&-Rat::one())
    }
}

impl<L: Letter> Mul for &NcPoly<L> {
    type Output = NcPoly<L>;

    fn mul(self, rhs: &NcPoly<L>) -> NcPoly<L> {
        let mut out = NcPoly::zero();
        for (left, lc) in &self.terms {
            for (right, rc) in &rhs.terms {
                let mut word = Vec::with_capacity(left.len() + right.len());
                word.extend_from_slice(left);
                word.extend_from_slice(right);
                out.add_term(word, &(lc * rc));
            }
        }
        out
    }
}

impl<L: Letter> Add for NcPoly<L> {
    type Output = NcPoly<L>;

    fn add(self, rhs: NcPoly<L>) -> NcPoly<L> {
        &self + &rhs
    }
}

impl<L: Letter> Sub for NcPoly<L> {
    type Output = NcPoly<L>;

    fn sub(self, rhs: NcPoly<L>) -> NcPoly<L> {
        &self - &rhs
    }
}

impl<L: Letter> Mul for NcPoly<L> {
    type Output = NcPoly<L>;

    fn mul(self, rhs: NcPoly<L>) -> NcPoly<L> {
        &self * &rhs
    }
}

impl<L: Letter> Neg for NcPoly<L> {
    type Output = NcPoly<L>;

    fn neg(self) -> NcPoly<L> {
        -&self
    }
}

impl<L: Letter> Mul<&Rat> for &NcPoly<L> {
    type Output = NcPoly<L>;

    fn mul(self, rhs: &Rat) -> NcPoly<L> {
        self.scale(rhs)
    }
}

/// Substitutes `c = a + b` and `d = ab + ba` into a cd-polynomial.
pub fn cd_expand(p: &CdPoly) -> AbPoly {
    let a = AbLetter::A;
    let b = AbLetter::B;
    let c_expanded = &AbPoly::var(a) + &AbPoly::var(b);
    let d_expanded = &AbPoly::from_word(vec![a, b]) + &AbPoly::from_word(vec![b, a]);
    let mut out = AbPoly::zero();
    for (word, coeff) in p.terms() {
        let mut product = AbPoly::constant(coeff.clone());
        for letter in word {
            let factor = match letter {
                CdLetter::C => &c_expanded,
                CdLetter::D => &d_expanded,
            };
            product = &product * factor;
        }
        out += &product;
    }
    out
}

/// Error raised when an ab-polynomial has no expression in `c` and `d`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not expressible in c and d; residual {residual}")]
pub struct NotCdExpressible {
    /// What remains of the input after subtracting its cd-expressible part.
    pub residual: AbPoly,
}

/// Lists the cd-words of the given degree in lexicographic order.
pub fn cd_words(degree: usize) -> Vec<Word<CdLetter>> {
    fn extend(prefix: &mut Word<CdLetter>, remaining: usize, out: &mut Vec<Word<CdLetter>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        prefix.push(CdLetter::C);
        extend(prefix, remaining - 1, out);
        prefix.pop();
        if remaining >= 2 {
            prefix.push(CdLetter::D);
            extend(prefix, remaining - 2, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), degree, &mut out);
    out
}

/// Rewrites an ab-polynomial in the variables `c` and `d`, solving one exact
/// linear system per degree over the cd-word basis.
pub fn ab_to_cd(p: &AbPoly) -> Result<CdPoly, NotCdExpressible> {
    let mut answer = CdPoly::zero();
    let mut residual = AbPoly::zero();
    let mut degrees: Vec<usize> = p.terms().map(|(w, _)| word_degree(w)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for degree in degrees {
        let component = p.homogeneous_component(degree);
        let (solved, rest) = solve_degree(&component, degree);
        answer += &solved;
        residual += &rest;
    }
    if residual.is_zero() {
        Ok(answer)
    } else {
        Err(NotCdExpressible { residual })
    }
}

/// Expresses one homogeneous component in the cd-word basis, returning the
/// combination found and the irreducible remainder.
fn solve_degree(target: &AbPoly, degree: usize) -> (CdPoly, AbPoly) {
    // Row-reduced basis of the expansions seen so far, keyed by leading word.
    let mut pivots: BTreeMap<Word<AbLetter>, (AbPoly, CdPoly)> = BTreeMap::new();
    for word in cd_words(degree) {
        let mut row = cd_expand(&CdPoly::from_word(word.clone()));
        let mut combo = CdPoly::from_word(word);
        reduce(&mut row, &mut combo, &pivots);
        let lead = row.terms().next().map(|(w, _)| w.clone());
        if let Some(lead) = lead {
            pivots.insert(lead, (row, combo));
        }
    }
    let mut rest = target.clone();
    let mut solution = CdPoly::zero();
    reduce_target(&mut rest, &mut solution, &pivots);
    (solution, rest)
}

/// Eliminates every pivot word from `row`, updating `combo` in step so that
/// `cd_expand(combo) == row` stays true.
fn reduce(
    row: &mut AbPoly,
    combo: &mut CdPoly,
    pivots: &BTreeMap<Word<AbLetter>, (AbPoly, CdPoly)>,
) {
    loop {
        let hit = row
            .terms()
            .find(|(w, _)| pivots.contains_key(*w))
            .map(|(w, c)| (w.clone(), c.clone()));
        let Some((word, coeff)) = hit else { break };
        let (pivot_row, pivot_combo) = &pivots[&word];
        let factor = &coeff / &pivot_row.coeff(&word);
        *row -= &pivot_row.scale(&factor);
        *combo -= &pivot_combo.scale(&factor);
    }
}

/// Like `reduce`, but accumulates the used combination positively so that at
/// the end `target = cd_expand(solution) + row`.
fn reduce_target(
    row: &mut AbPoly,
    solution: &mut CdPoly,
    pivots: &BTreeMap<Word<AbLetter>, (AbPoly, CdPoly)>,
) {
    loop {
        let hit = row
            .terms()
            .find(|(w, _)| pivots.contains_key(*w))
            .map(|(w, c)| (w.clone(), c.clone()));
        let Some((word, coeff)) = hit else { break };
        let (pivot_row, pivot_combo) = &pivots[&word];
        let factor = &coeff / &pivot_row.coeff(&word);
        *row -= &pivot_row.scale(&factor);
        *solution += &pivot_combo.scale(&factor);
    }
}

/// Formal sum of `left ⊗ right` word pairs with collected coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorSum {
    terms: BTreeMap<(Word<AbLetter>, Word<AbLetter>), Rat>,
}

impl TensorSum {
    /// The empty (zero) sum.
    pub fn zero() -> Self {
        TensorSum::default()
    }

    /// True when no pair has a nonzero coefficient.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · (left ⊗ right)` in place.
    pub fn add_term(&mut self, left: Word<AbLetter>, right: Word<AbLetter>, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((left, right));
        match entry {
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

    /// Adds `p ⊗ q`, expanded bilinearly, in place.
    pub fn add_product(&mut self, p: &AbPoly, q: &AbPoly) {
        for (left, lc) in p.terms() {
            for (right, rc) in q.terms() {
                self.add_term(left.clone(), right.clone(), &(lc * rc));
            }
        }
    }

    /// Iterates pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&(Word<AbLetter>, Word<AbLetter>), &Rat)> {
        self.terms.iter()
    }
}

impl AddAssign<&TensorSum> for TensorSum {
    fn add_assign(&mut self, rhs: &TensorSum) {
        for ((l, r), c) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), c);
        }
    }
}

/// The coproduct Δ on ab-polynomials: each word `u₁…u_k` maps to
/// `Σ_i u₁…u_{i−1} ⊗ u_{i+1}…u_k`, extended linearly.
pub fn coproduct_delta(p: &AbPoly) -> TensorSum {
    let mut out = TensorSum::zero();
    for (word, coeff) in p.terms() {
        for i in 0..word.len() {
            out.add_term(word[..i].to_vec(), word[i + 1..].to_vec(), coeff);
        }
    }
    out
}

/// Error produced when polynomial text fails to parse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    /// Byte offset of the offending character.
    pub pos: usize,
    /// Human-readable description.
    pub msg: String,
}

struct Parser<'a, L> {
    bytes: &'a [u8],
    pos: usize,
    _marker: std::marker::PhantomData<L>,
}

impl<'a, L: Letter> Parser<'a, L> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            _marker: std::marker::PhantomData,
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse_poly(&mut self) -> Result<NcPoly<L>, ParseError> {
        let mut result = NcPoly::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return self.error("empty polynomial");
        }
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            self.skip_ws();
            let term = self.parse_term()?;
            if negate {
                result -= &term;
            } else {
                result += &term;
            }
            self.skip_ws();
            match self.peek() {
                None => return Ok(result),
                Some(b'+') => {
                    negate = false;
                    self.pos += 1;
                }
                Some(b'-') => {
                    negate = true;
                    self.pos += 1;
                }
                Some(ch) => return self.error(format!("expected `+` or `-`, found `{}`", ch as char)),
            }
        }
    }

    fn parse_term(&mut self) -> Result<NcPoly<L>, ParseError> {
        let coeff = if self.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            let number = self.parse_rational()?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                // A bare rational is a constant term.
                return Ok(NcPoly::constant(number));
            }
            number
        } else {
            Rat::one()
        };
        let word = self.parse_word()?;
        Ok(NcPoly::monomial(word, coeff))
    }

    fn parse_rational(&mut self) -> Result<Rat, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some(b'/') {
            self.pos += 1;
            if !self.peek().is_some_and(|ch| ch.is_ascii_digit()) {
                return self.error("expected digits after `/`");
            }
            while self.peek().is_some_and(|ch| ch.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        match parse_rat(text) {
            Ok(value) => Ok(value),
            Err(msg) => self.error(msg),
        }
    }

    fn parse_integer(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        match text.parse() {
            Ok(value) => Ok(value),
            Err(_) => self.error(format!("repeat count `{text}` out of range")),
        }
    }

    fn parse_word(&mut self) -> Result<Word<L>, ParseError> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut word = Vec::new();
        loop {
            let Some(ch) = self.peek() else { break };
            if !ch.is_ascii_alphabetic() {
                break;
            }
            let Some(letter) = L::from_symbol(ch as char) else {
                return self.error(format!("unexpected letter `{}`", ch as char));
            };
            self.pos += 1;
            let mut repeat = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                repeat = self.parse_integer()?;
            }
            word.extend(std::iter::repeat(letter).take(repeat));
        }
        if word.is_empty() {
            return self.error("expected a word");
        }
        Ok(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};
    use proptest::prelude::*;

    fn ab(text: &str) -> AbPoly {
        AbPoly::parse(text).unwrap()
    }

    fn cd(text: &str) -> CdPoly {
        CdPoly::parse(text).unwrap()
    }

    #[test]
    fn product_concatenates_words() {
        assert_eq!(&cd("c") * &cd("c"), cd("c^2"));
        assert_eq!(&ab("a - b") * &ab("a - b"), ab("aa - ab - ba + bb"));
    }

    #[test]
    fn linear_combinations_collect() {
        let p = ab("ab + ba");
        assert_eq!(&p.scale(&int(2)) - &p, p);
        assert_eq!(&p - &p, AbPoly::zero());
    }

    #[test]
    fn expand_substitutes_c_and_d() {
        assert_eq!(cd_expand(&cd("d")), ab("ab + ba"));
        assert_eq!(cd_expand(&cd("c^2")), ab("aa + ab + ba + bb"));
        assert_eq!(cd_expand(&cd("c^2 - 2*d")), ab("aa - ab - ba + bb"));
    }

    #[test]
    fn cd_conversion_solves_known_cases() {
        assert_eq!(ab_to_cd(&ab("a^2 + b^2")).unwrap(), cd("c^2 - d"));
        assert_eq!(ab_to_cd(&ab("a + b")).unwrap(), cd("c"));
        assert_eq!(ab_to_cd(&AbPoly::one()).unwrap(), CdPoly::one());
    }

    #[test]
    fn cd_conversion_reports_residual() {
        let err = ab_to_cd(&ab("a")).unwrap_err();
        assert!(!err.residual.is_zero());
        let err = ab_to_cd(&ab("a^3")).unwrap_err();
        assert!(!err.residual.is_zero());
        // The residual is what is left after removing the expressible part.
        let expressible = &ab("a^3") - &err.residual;
        assert!(ab_to_cd(&expressible).is_ok());
    }

    #[test]
    fn star_reverses_words() {
        assert_eq!(ab("ab").star(), ab("ba"));
        assert_eq!(cd("cd").star(), cd("dc"));
        let palindrome = cd("c^2 - d");
        assert_eq!(palindrome.star(), palindrome);
    }

    #[test]
    fn derivation_follows_generator_rules() {
        assert_eq!(ab("a").derivation_g(), ab("ba"));
        assert_eq!(ab("b").derivation_g(), ab("ab"));
        assert_eq!(cd("c").derivation_g(), cd("d"));
        assert_eq!(cd("d").derivation_g(), cd("cd"));
        assert_eq!(AbPoly::one().derivation_g(), AbPoly::zero());
        assert_eq!(cd("c^2 - d").derivation_g(), cd("dc"));
    }

    #[test]
    fn coproduct_on_small_inputs() {
        let mut expected = TensorSum::zero();
        expected.add_term(Vec::new(), Vec::new(), &int(1));
        assert_eq!(coproduct_delta(&ab("a")), expected);
        assert!(coproduct_delta(&AbPoly::one()).is_zero());

        let c_squared = cd_expand(&cd("c^2"));
        let mut expected = TensorSum::zero();
        expected.add_product(&AbPoly::one(), &ab("a + b").scale(&int(2)));
        expected.add_product(&ab("a + b").scale(&int(2)), &AbPoly::one());
        assert_eq!(coproduct_delta(&c_squared), expected);
    }

    #[test]
    fn parse_handles_grammar_forms() {
        assert_eq!(cd("c^2 + 3*d").render(), "c^2 + 3*d");
        assert_eq!(cd("-1/2*cc").coeff(&[CdLetter::C, CdLetter::C]), frac(-1, 2));
        assert_eq!(ab("1"), AbPoly::one());
        assert_eq!(ab("0"), AbPoly::zero());
        assert_eq!(ab("2*1 - 1"), AbPoly::constant(int(1)));
    }

    #[test]
    fn parse_rejects_malformed_text() {
        assert!(AbPoly::parse("").is_err());
        assert!(CdPoly::parse("ca + d").is_err());
        assert!(AbPoly::parse("a +").is_err());
        assert!(AbPoly::parse("a b").is_err());
        assert!(AbPoly::parse("3*").is_err());
        assert!(AbPoly::parse("a^").is_err());
    }

    #[test]
    fn render_canonical_forms() {
        assert_eq!(AbPoly::zero().render(), "0");
        assert_eq!(AbPoly::one().render(), "1");
        assert_eq!(ab("b + a").render(), "a + b");
        assert_eq!(ab("-1*a^2").render(), "-a^2");
        assert_eq!(cd("0 - 1/2*c").render(), "-1/2*c");
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
    }

    fn ab_word(max_len: usize) -> impl Strategy<Value = Word<AbLetter>> {
        prop::collection::vec(
            prop_oneof![Just(AbLetter::A), Just(AbLetter::B)],
            0..=max_len,
        )
    }

    fn cd_word(max_len: usize) -> impl Strategy<Value = Word<CdLetter>> {
        prop::collection::vec(
            prop_oneof![Just(CdLetter::C), Just(CdLetter::D)],
            0..=max_len,
        )
    }

    fn ab_poly(max_terms: usize, max_len: usize) -> impl Strategy<Value = AbPoly> {
        prop::collection::vec((ab_word(max_len), small_rat()), 0..=max_terms).prop_map(|terms| {
            let mut poly = AbPoly::zero();
            for (word, coeff) in terms {
                poly.add_term(word, &coeff);
            }
            poly
        })
    }

    fn cd_poly(max_terms: usize, max_len: usize) -> impl Strategy<Value = CdPoly> {
        prop::collection::vec((cd_word(max_len), small_rat()), 0..=max_terms).prop_map(|terms| {
            let mut poly = CdPoly::zero();
            for (word, coeff) in terms {
                poly.add_term(word, &coeff);
            }
            poly
        })
    }

    proptest! {
        #[test]
        fn cd_round_trips_through_ab(p in cd_poly(5, 5)) {
            prop_assert_eq!(ab_to_cd(&cd_expand(&p)).unwrap(), p);
        }

        #[test]
        fn expressible_part_round_trips(p in ab_poly(6, 6)) {
            match ab_to_cd(&p) {
                Ok(q) => prop_assert_eq!(cd_expand(&q), p),
                Err(e) => {
                    let expressible = &p - &e.residual;
                    let q = ab_to_cd(&expressible).unwrap();
                    prop_assert_eq!(cd_expand(&q), expressible);
                }
            }
        }

        #[test]
        fn star_is_an_involution(p in ab_poly(6, 6)) {
            prop_assert_eq!(p.star().star(), p);
        }

        #[test]
        fn star_is_an_anti_automorphism(p in ab_poly(4, 4), q in ab_poly(4, 4)) {
            prop_assert_eq!((&p * &q).star(), &q.star() * &p.star());
        }

        #[test]
        fn derivation_satisfies_leibniz(p in ab_poly(4, 4), q in ab_poly(4, 4)) {
            let lhs = (&p * &q).derivation_g();
            let rhs = &(&p.derivation_g() * &q) + &(&p * &q.derivation_g());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivation_commutes_with_expansion(p in cd_poly(4, 4)) {
            prop_assert_eq!(cd_expand(&p.derivation_g()), cd_expand(&p).derivation_g());
        }

        #[test]
        fn coproduct_is_coassociative(p in ab_poly(4, 5)) {
            // Apply the deletion rule once more on each tensor leg and
            // compare the resulting triple sums.
            let delta = coproduct_delta(&p);
            let mut left: BTreeMap<(Word<AbLetter>, Word<AbLetter>, Word<AbLetter>), Rat> =
                BTreeMap::new();
            let mut right = left.clone();
            for ((u, v), coeff) in delta.terms() {
                for ((u1, u2), c) in coproduct_delta(&AbPoly::from_word(u.clone())).terms() {
                    let entry = left.entry((u1.clone(), u2.clone(), v.clone())).or_default();
                    *entry += coeff * c;
                }
                for ((v1, v2), c) in coproduct_delta(&AbPoly::from_word(v.clone())).terms() {
                    let entry = right.entry((u.clone(), v1.clone(), v2.clone())).or_default();
                    *entry += coeff * c;
                }
            }
            left.retain(|_, c| !c.is_zero());
            right.retain(|_, c| !c.is_zero());
            prop_assert_eq!(left, right);
        }

        #[test]
        fn text_form_round_trips(p in ab_poly(6, 6)) {
            prop_assert_eq!(AbPoly::parse(&p.render()).unwrap(), p);
        }

        #[test]
        fn cd_text_form_round_trips(p in cd_poly(6, 6)) {
            prop_assert_eq!(CdPoly::parse(&p.render()).unwrap(), p);
        }
    }
}
