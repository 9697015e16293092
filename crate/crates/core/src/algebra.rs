//! The free superalgebra `A_{m|n}` on even generators `x1..xm` and odd
//! generators `y1..yn`.
//!
//! Words carry no signs; Koszul signs only enter through the super
//! commutator, the symmetric product and symmetrization. Letters are stored
//! 0-based: `0..m` are the even `x`'s, `m..m+n` the odd `y`'s, so the natural
//! order on letters is `x1 < .. < xm < y1 < .. < yn`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LcsError, Result};
use crate::linalg::{format_rational, rat, sign_prefix, Rational, SparseVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSet {
    even: usize,
    odd: usize,
}

impl GeneratorSet {
    pub fn new(even: usize, odd: usize) -> Result<Self> {
        if even + odd == 0 {
            return Err(LcsError::NoGenerators { even, odd });
        }
        Ok(Self { even, odd })
    }

    /// Number of even generators (`m`).
    pub fn even(&self) -> usize {
        self.even
    }

    /// Number of odd generators (`n`).
    pub fn odd(&self) -> usize {
        self.odd
    }

    pub fn len(&self) -> usize {
        self.even + self.odd
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_odd(&self, letter: u8) -> bool {
        (letter as usize) >= self.even
    }

    pub fn letter_name(&self, letter: u8) -> String {
        let l = letter as usize;
        if l < self.even {
            format!("x{}", l + 1)
        } else {
            format!("y{}", l - self.even + 1)
        }
    }

    /// Parity of a multidegree: number of odd letters mod 2.
    pub fn parity(&self, d: &MultiDegree) -> u8 {
        (d.0[self.even..].iter().sum::<usize>() % 2) as u8
    }

    pub fn generator(&self, letter: u8) -> AlgebraElement {
        assert!((letter as usize) < self.len(), "letter out of range");
        AlgebraElement::from_word(*self, Word(vec![letter]))
    }

    pub fn unit_degree(&self, letter: usize) -> MultiDegree {
        let mut e = vec![0; self.len()];
        e[letter] = 1;
        MultiDegree(e)
    }

    pub fn zero_degree(&self) -> MultiDegree {
        MultiDegree(vec![0; self.len()])
    }

    /// All multidegrees with total degree at most `max_total`, ordered by
    /// total degree and then reverse-lexicographically.
    pub fn degrees_up_to(&self, max_total: usize) -> Vec<MultiDegree> {
        (0..=max_total)
            .flat_map(|t| MultiDegree::compositions(self.len(), t))
            .collect()
    }
}

/// Exponent vector over the `m + n` generators; the first `m` entries are
/// `u`-degrees, the last `n` are `v`-degrees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiDegree(pub Vec<usize>);

impl MultiDegree {
    pub fn new(exponents: Vec<usize>) -> Self {
        Self(exponents)
    }

    pub fn for_gens(gens: &GeneratorSet, exponents: Vec<usize>) -> Result<Self> {
        if exponents.len() != gens.len() {
            return Err(LcsError::DegreeLength {
                got: exponents,
                expected: gens.len(),
            });
        }
        Ok(Self(exponents))
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    pub fn plus(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` if it stays non-negative.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiDegree)
    }

    pub fn dominates(&self, other: &MultiDegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Every `d'` with `0 <= d' <= self` componentwise.
    pub fn sub_degrees(&self) -> Vec<MultiDegree> {
        let mut out = vec![Vec::with_capacity(self.len())];
        for &e in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=e).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiDegree).collect()
    }

    /// All exponent vectors of length `len` summing to `total`, in
    /// reverse-lexicographic order (`(2,0)`, `(1,1)`, `(0,2)`).
    pub fn compositions(len: usize, total: usize) -> Vec<MultiDegree> {
        fn rec(len: usize, total: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiDegree>) {
            if len == 1 {
                prefix.push(total);
                out.push(MultiDegree(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=total).rev() {
                prefix.push(first);
                rec(len - 1, total - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if len == 0 {
            if total == 0 {
                out.push(MultiDegree(Vec::new()));
            }
            return out;
        }
        rec(len, total, &mut Vec::new(), &mut out);
        out
    }

    /// Number of words with this letter-count vector.
    pub fn multinomial(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut n: u128 = 0;
        for &e in &self.0 {
            for i in 1..=e as u128 {
                n += 1;
                acc = acc * n / i;
            }
        }
        acc
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A word in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self, gens: &GeneratorSet) -> MultiDegree {
        let mut d = vec![0; gens.len()];
        for &l in &self.0 {
            d[l as usize] += 1;
        }
        MultiDegree(d)
    }

    pub fn parity(&self, gens: &GeneratorSet) -> u8 {
        (self.0.iter().filter(|&&l| gens.is_odd(l)).count() % 2) as u8
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn render(&self, gens: &GeneratorSet) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&l| gens.letter_name(l))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// All words with letter-count vector `d`, in lexicographic order.
pub fn word_basis(gens: &GeneratorSet, d: &MultiDegree) -> Vec<Word> {
    assert_eq!(
        d.len(),
        gens.len(),
        "multidegree length must match generator count"
    );
    let mut remaining = d.0.clone();
    let total = d.total();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(total);
    fn rec(remaining: &mut [usize], current: &mut Vec<u8>, total: usize, out: &mut Vec<Word>) {
        if current.len() == total {
            out.push(Word(current.clone()));
            return;
        }
        for l in 0..remaining.len() {
            if remaining[l] > 0 {
                remaining[l] -= 1;
                current.push(l as u8);
                rec(remaining, current, total, out);
                current.pop();
                remaining[l] += 1;
            }
        }
    }
    rec(&mut remaining, &mut current, total, &mut out);
    out
}

/// The monomial basis of one graded component `A[d]` with a reverse index.
#[derive(Clone, Debug)]
pub struct WordBasis {
    degree: MultiDegree,
    parity: u8,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl WordBasis {
    pub fn new(gens: &GeneratorSet, d: &MultiDegree) -> Self {
        let words = word_basis(gens, d);
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Self {
            degree: d.clone(),
            parity: gens.parity(d),
            words,
            index,
        }
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }
}

/// A homogeneous element of `A_{m|n}`: a sparse rational combination of
/// words sharing one multidegree (and hence one parity).
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    gens: GeneratorSet,
    terms: BTreeMap<Word, Rational>,
}

impl AlgebraElement {
    pub fn zero(gens: GeneratorSet) -> Self {
        Self {
            gens,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(gens: GeneratorSet) -> Self {
        Self::from_word(gens, Word::unit())
    }

    pub fn from_word(gens: GeneratorSet, w: Word) -> Self {
        Self::monomial(gens, w, Rational::one())
    }

    pub fn monomial(gens: GeneratorSet, w: Word, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Self { gens, terms }
    }

    /// Builds an element from terms, rejecting mixed multidegrees.
    pub fn from_terms<I>(gens: GeneratorSet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut map: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in terms {
            *map.entry(w).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut degrees = map.keys().map(|w| w.degree(&gens));
        if let Some(first) = degrees.next() {
            if degrees.any(|d| d != first) {
                return Err(LcsError::DegreeInhomogeneous);
            }
        }
        Ok(Self { gens, terms: map })
    }

    /// Reads a coordinate vector over `basis` back into an element.
    pub fn from_vector(gens: GeneratorSet, basis: &WordBasis, v: &SparseVector) -> Self {
        let terms = v
            .iter()
            .map(|(i, c)| (basis.word(i).clone(), c.clone()))
            .collect();
        Self { gens, terms }
    }

    /// Coordinates over `basis`; `None` if a word falls outside it.
    pub fn to_vector(&self, basis: &WordBasis) -> Option<SparseVector> {
        let mut pairs = Vec::with_capacity(self.terms.len());
        for (w, c) in &self.terms {
            pairs.push((basis.index_of(w)?, c.clone()));
        }
        Some(SparseVector::from_pairs(pairs))
    }

    pub fn gens(&self) -> GeneratorSet {
        self.gens
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multidegree of the element; `None` for zero.
    pub fn degree(&self) -> Option<MultiDegree> {
        self.terms.keys().next().map(|w| w.degree(&self.gens))
    }

    /// Parity of the element; `None` for zero, which is homogeneous of both parities.
    pub fn parity(&self) -> Option<u8> {
        self.terms.keys().next().map(|w| w.parity(&self.gens))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.gens);
        }
        Self {
            gens: self.gens,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    fn combine(&self, other: &Self, sign: &Rational) -> Self {
        assert_eq!(self.gens, other.gens, "elements of different algebras");
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            assert_eq!(a, b, "sum of elements of different multidegrees");
        }
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(Rational::zero);
            *entry += c * sign;
            if entry.is_zero() {
                terms.remove(w);
            }
        }
        Self {
            gens: self.gens,
            terms,
        }
    }

    /// Bilinear extension of concatenation.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.gens, other.gens, "elements of different algebras");
        let mut terms: BTreeMap<Word, Rational> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = terms.entry(a.concat(b)).or_insert_with(Rational::zero);
                *e += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self {
            gens: self.gens,
            terms,
        }
    }
}

/// `[a, b] = ab - (-1)^{|a||b|} ba`.
pub fn super_bracket(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    if a.gens != b.gens {
        return Err(LcsError::GeneratorMismatch);
    }
    let pa = homogeneous_parity(a)?;
    let pb = homogeneous_parity(b)?;
    let (Some(pa), Some(pb)) = (pa, pb) else {
        return Ok(AlgebraElement::zero(a.gens));
    };
    let sign = if pa & pb == 1 { rat(-1) } else { rat(1) };
    Ok(a.multiply(b).combine(&b.multiply(a), &-sign))
}

fn homogeneous_parity(a: &AlgebraElement) -> Result<Option<u8>> {
    let mut parities = a.terms.keys().map(|w| w.parity(&a.gens));
    match parities.next() {
        None => Ok(None),
        Some(p) => {
            if parities.all(|q| q == p) {
                Ok(Some(p))
            } else {
                Err(LcsError::ParityInhomogeneous)
            }
        }
    }
}

/// `[a1, [a2, [.., [a_{r-1}, a_r]..]]]`.
pub fn right_nested_bracket(items: &[AlgebraElement]) -> Result<AlgebraElement> {
    let (last, rest) = items.split_last().ok_or(LcsError::EmptyBracket)?;
    let mut acc = last.clone();
    homogeneous_parity(&acc)?;
    for a in rest.iter().rev() {
        acc = super_bracket(a, &acc)?;
    }
    Ok(acc)
}

/// Symmetric product `a * b = (ab + ba) / 2`.
pub fn star(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let sum = a.multiply(b).combine(&b.multiply(a), &rat(1));
    sum.scale(&Rational::new(1.into(), 2.into()))
}

/// Koszul-signed average of all rearrangements of `w`: the image of the
/// corresponding element of `S(V)` in `A`.
pub fn symmetrize(gens: &GeneratorSet, w: &Word) -> AlgebraElement {
    let len = w.len();
    let mut perm: Vec<usize> = (0..len).collect();
    let mut terms: BTreeMap<Word, Rational> = BTreeMap::new();
    let letters = w.letters();
    let mut factorial: u64 = 1;
    for i in 1..=len as u64 {
        factorial *= i;
    }
    loop {
        let word = Word(perm.iter().map(|&i| letters[i]).collect());
        let mut inversions = 0usize;
        for a in 0..len {
            if !gens.is_odd(letters[perm[a]]) {
                continue;
            }
            for b in a + 1..len {
                if perm[a] > perm[b] && gens.is_odd(letters[perm[b]]) {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        *terms.entry(word).or_insert_with(Rational::zero) += rat(sign);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    let inv = Rational::new(1.into(), (factorial as i64).into());
    AlgebraElement {
        gens: *gens,
        terms: terms.into_iter().map(|(w, c)| (w, c * &inv)).collect(),
    }
}

/// Lexicographic successor; false once the last permutation is reached.
pub(crate) fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.combine(rhs, &rat(1))
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.combine(rhs, &rat(-1))
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&rat(-1))
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (sign, abs) = sign_prefix(c, i == 0);
            write!(f, "{sign}")?;
            if abs.is_one() {
                write!(f, "{}", w.render(&self.gens))?;
            } else if w.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), w.render(&self.gens))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn g(m: usize, n: usize) -> GeneratorSet {
        GeneratorSet::new(m, n).unwrap()
    }

    fn w(letters: &[u8]) -> Word {
        Word(letters.to_vec())
    }

    #[test]
    fn generator_set_rejects_empty() {
        assert!(GeneratorSet::new(0, 0).is_err());
    }

    #[test]
    fn word_basis_examples() {
        let basis = word_basis(&g(2, 0), &MultiDegree(vec![1, 1]));
        assert_eq!(basis, vec![w(&[0, 1]), w(&[1, 0])]);
        let basis = word_basis(&g(0, 1), &MultiDegree(vec![2]));
        assert_eq!(basis, vec![w(&[0, 0])]);
        assert_eq!(word_basis(&g(2, 0), &MultiDegree(vec![2, 1])).len(), 3);
    }

    #[test]
    fn word_basis_count_is_multinomial() {
        let gens = g(2, 1);
        for d in gens.degrees_up_to(6) {
            assert_eq!(word_basis(&gens, &d).len() as u128, d.multinomial());
        }
    }

    #[test]
    fn multiply_examples() {
        let gens = g(2, 1);
        let x1 = gens.generator(0);
        let x2x1 = AlgebraElement::from_word(gens, w(&[1, 0]));
        assert_eq!((&x1 * &x2x1).to_string(), "x1*x2*x1");
        assert_eq!(AlgebraElement::one(gens).multiply(&x2x1), x2x1);
        let y1 = gens.generator(2);
        assert_eq!((&y1 * &y1).to_string(), "y1*y1");
    }

    #[test]
    fn bracket_examples() {
        let gens = g(2, 1);
        let (x1, x2, y1) = (gens.generator(0), gens.generator(1), gens.generator(2));
        assert!(super_bracket(&x1, &x1).unwrap().is_zero());
        assert_eq!(super_bracket(&y1, &y1).unwrap().to_string(), "2*y1*y1");
        assert_eq!(
            super_bracket(&x1, &x2).unwrap().to_string(),
            "x1*x2 - x2*x1"
        );
    }

    #[test]
    fn bracket_rejects_mixed_parity() {
        let gens = g(1, 1);
        let mixed = &gens.generator(0) + &AlgebraElement::zero(gens);
        assert!(super_bracket(&mixed, &gens.generator(1)).is_ok());
        let bad = AlgebraElement {
            gens,
            terms: [(w(&[0]), rat(1)), (w(&[1]), rat(1))].into_iter().collect(),
        };
        assert_eq!(
            super_bracket(&bad, &gens.generator(0)),
            Err(LcsError::ParityInhomogeneous)
        );
    }

    #[test]
    fn from_terms_rejects_mixed_degree() {
        let gens = g(2, 0);
        let r = AlgebraElement::from_terms(gens, [(w(&[0]), rat(1)), (w(&[1]), rat(1))]);
        assert_eq!(r, Err(LcsError::DegreeInhomogeneous));
    }

    #[test]
    fn nested_bracket_examples() {
        let gens = g(2, 0);
        let (x1, x2) = (gens.generator(0), gens.generator(1));
        assert_eq!(right_nested_bracket(std::slice::from_ref(&x1)).unwrap(), x1);
        assert_eq!(
            right_nested_bracket(&[x1.clone(), x2.clone()]).unwrap(),
            super_bracket(&x1, &x2).unwrap()
        );
        // [x1,[x2,x1]] = x1x2x1 - x1x1x2 - x2x1x1 + x1x2x1
        let r = right_nested_bracket(&[x1.clone(), x2.clone(), x1.clone()]).unwrap();
        let expected = AlgebraElement::from_terms(
            gens,
            [
                (w(&[0, 1, 0]), rat(2)),
                (w(&[0, 0, 1]), rat(-1)),
                (w(&[1, 0, 0]), rat(-1)),
            ],
        )
        .unwrap();
        assert_eq!(r, expected);
        assert_eq!(right_nested_bracket(&[]), Err(LcsError::EmptyBracket));
    }

    #[test]
    fn star_examples() {
        let gens = g(2, 0);
        let (x1, x2) = (gens.generator(0), gens.generator(1));
        assert_eq!(star(&x1, &x2).to_string(), "1/2*x1*x2 + 1/2*x2*x1");
        assert_eq!(star(&x1, &x1), &x1 * &x1);
        assert_eq!(star(&x1, &AlgebraElement::one(gens)), x1);
    }

    #[test]
    fn symmetrize_examples() {
        let gens = g(2, 0);
        assert_eq!(
            symmetrize(&gens, &w(&[0, 1])),
            star(&gens.generator(0), &gens.generator(1))
        );
        let odd = g(0, 2);
        let s = symmetrize(&odd, &w(&[0, 1]));
        assert_eq!(s.coefficient(&w(&[0, 1])), ratio(1, 2));
        assert_eq!(s.coefficient(&w(&[1, 0])), ratio(-1, 2));
        assert!(symmetrize(&odd, &w(&[0, 0])).is_zero());
    }

    #[test]
    fn vector_round_trip() {
        let gens = g(1, 1);
        let d = MultiDegree(vec![2, 1]);
        let basis = WordBasis::new(&gens, &d);
        let e = super_bracket(
            &gens.generator(1),
            &AlgebraElement::from_word(gens, w(&[0, 0])),
        )
        .unwrap();
        let v = e.to_vector(&basis).unwrap();
        assert_eq!(AlgebraElement::from_vector(gens, &basis, &v), e);
    }

    #[test]
    fn compositions_order() {
        let c = MultiDegree::compositions(2, 2);
        assert_eq!(
            c,
            vec![
                MultiDegree(vec![2, 0]),
                MultiDegree(vec![1, 1]),
                MultiDegree(vec![0, 2])
            ]
        );
        assert_eq!(MultiDegree(vec![1, 2]).sub_degrees().len(), 6);
    }
}
