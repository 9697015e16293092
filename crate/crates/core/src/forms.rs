//! Polynomial super differential forms `Ω(ℂ^{m|n}) = S(V) ⊗ Λ(V)`.
//!
//! Symbols: even `x_i`, `dy_j`; odd `y_j`, `dx_i`. Monomials are kept in the
//! normal order `x-block · dy-block · y-block · dx-block`; the odd symbols are
//! ordered by the key `y_j -> j`, `dx_i -> n + i` and stored as bitmasks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, GeneratorSet, MultiDegree, Word, WordBasis};
use crate::error::Result;
use crate::lcs::{CheckReport, DegreeOutcome, GradedSubspaceFamily};
use crate::linalg::{
    format_rational, kernel, rat, sign_prefix, EchelonSubspace, Rational, SparseVector,
};

/// Ordered by form degree first, then by the exponent data.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormMonomial {
    pub x_exps: Vec<u32>,
    pub dy_exps: Vec<u32>,
    /// bit `j` set iff `y_{j+1}` is a factor
    pub y_set: u64,
    /// bit `i` set iff `dx_{i+1}` is a factor
    pub dx_set: u64,
}

impl FormMonomial {
    pub fn one(gens: &GeneratorSet) -> Self {
        assert!(gens.len() <= 64, "at most 64 generators are supported");
        Self {
            x_exps: vec![0; gens.even()],
            dy_exps: vec![0; gens.odd()],
            y_set: 0,
            dx_set: 0,
        }
    }

    fn n(&self) -> usize {
        self.dy_exps.len()
    }

    fn odd_mask(&self) -> u64 {
        self.y_set | (self.dx_set << self.n())
    }

    /// Form degree `p = |dx| + Σ dy`.
    pub fn form_degree(&self) -> usize {
        self.dx_set.count_ones() as usize + self.dy_exps.iter().map(|&e| e as usize).sum::<usize>()
    }

    /// Koszul parity: number of odd symbols mod 2.
    pub fn kappa(&self) -> u8 {
        (self.odd_mask().count_ones() % 2) as u8
    }

    pub fn degree(&self) -> MultiDegree {
        let u = self
            .x_exps
            .iter()
            .enumerate()
            .map(|(i, &e)| e as usize + ((self.dx_set >> i) & 1) as usize);
        let v = self
            .dy_exps
            .iter()
            .enumerate()
            .map(|(j, &e)| e as usize + ((self.y_set >> j) & 1) as usize);
        MultiDegree(u.chain(v).collect())
    }

    /// `self ∧ other` as a normal-ordered monomial with its sign, or `None`
    /// when an odd symbol repeats.
    pub fn wedge(&self, other: &FormMonomial) -> Option<(FormMonomial, bool)> {
        let (a, b) = (self.odd_mask(), other.odd_mask());
        if a & b != 0 {
            return None;
        }
        let mut inversions = 0u32;
        let mut rest = b;
        while rest != 0 {
            let t = rest.trailing_zeros();
            inversions += (a >> t).count_ones();
            rest &= rest - 1;
        }
        let out = FormMonomial {
            x_exps: self
                .x_exps
                .iter()
                .zip(&other.x_exps)
                .map(|(p, q)| p + q)
                .collect(),
            dy_exps: self
                .dy_exps
                .iter()
                .zip(&other.dy_exps)
                .map(|(p, q)| p + q)
                .collect(),
            y_set: self.y_set | other.y_set,
            dx_set: self.dx_set | other.dx_set,
        };
        Some((out, inversions % 2 == 1))
    }

    /// Exterior derivative as a list of `(monomial, coefficient)`.
    pub fn derivative(&self) -> Vec<(FormMonomial, Rational)> {
        let mut out = Vec::new();
        let rest = FormMonomial {
            x_exps: vec![0; self.x_exps.len()],
            ..self.clone()
        };
        for (i, &e) in self.x_exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut head = FormMonomial {
                x_exps: self.x_exps.clone(),
                dy_exps: vec![0; self.n()],
                y_set: 0,
                dx_set: 1 << i,
            };
            head.x_exps[i] -= 1;
            if let Some((mono, neg)) = head.wedge(&rest) {
                let c = rat(e as i64);
                out.push((mono, if neg { -c } else { c }));
            }
        }
        // the x- and dy-blocks are even, so only earlier y's contribute a sign
        let mut ys = self.y_set;
        let mut before = 0;
        while ys != 0 {
            let j = ys.trailing_zeros() as usize;
            let mut mono = self.clone();
            mono.y_set &= !(1 << j);
            mono.dy_exps[j] += 1;
            out.push((mono, rat(if before % 2 == 0 { 1 } else { -1 })));
            before += 1;
            ys &= ys - 1;
        }
        out
    }

    /// Renders as `x1^2*dy1*y2*dx1`; the empty monomial is `1`.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        let mut push = |name: String, e: u32| match e {
            0 => {}
            1 => parts.push(name),
            _ => parts.push(format!("{name}^{e}")),
        };
        for (i, &e) in self.x_exps.iter().enumerate() {
            push(format!("x{}", i + 1), e);
        }
        for (j, &e) in self.dy_exps.iter().enumerate() {
            push(format!("dy{}", j + 1), e);
        }
        for j in 0..self.n() {
            push(format!("y{}", j + 1), ((self.y_set >> j) & 1) as u32);
        }
        for i in 0..self.x_exps.len() {
            push(format!("dx{}", i + 1), ((self.dx_set >> i) & 1) as u32);
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for FormMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (
            self.form_degree(),
            &self.x_exps,
            &self.dy_exps,
            self.y_set,
            self.dx_set,
        )
            .cmp(&(
                other.form_degree(),
                &other.x_exps,
                &other.dy_exps,
                other.y_set,
                other.dx_set,
            ))
    }
}

impl PartialOrd for FormMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FormMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// All normal-ordered monomials of multidegree `d`, optionally restricted
/// to form degree `p`, in increasing order.
pub fn form_monomials(gens: &GeneratorSet, p: Option<usize>, d: &MultiDegree) -> Vec<FormMonomial> {
    assert_eq!(d.len(), gens.len(), "multidegree length");
    let (m, n) = (gens.even(), gens.odd());
    let e = d.exponents();
    // each u_i either carries dx_i or not; each v_j either carries y_j or not
    let free: Vec<usize> = (0..m + n).filter(|&l| e[l] > 0).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        let mut mono = FormMonomial::one(gens);
        for (bit, &l) in free.iter().enumerate() {
            let chosen = (mask >> bit) & 1 == 1;
            if l < m {
                mono.x_exps[l] = (e[l] - chosen as usize) as u32;
                if chosen {
                    mono.dx_set |= 1 << l;
                }
            } else {
                let j = l - m;
                mono.dy_exps[j] = (e[l] - chosen as usize) as u32;
                if chosen {
                    mono.y_set |= 1 << j;
                }
            }
        }
        if p.is_none_or(|p| mono.form_degree() == p) {
            out.push(mono);
        }
    }
    out.sort();
    out
}

/// `form_monomials` at a fixed form degree.
pub fn form_basis(gens: &GeneratorSet, p: usize, d: &MultiDegree) -> Vec<FormMonomial> {
    form_monomials(gens, Some(p), d)
}

/// An indexed monomial basis of `Ω^p[d]` (or of all of `Ω[d]`).
#[derive(Clone, Debug)]
pub struct FormBasis {
    monomials: Vec<FormMonomial>,
    index: HashMap<FormMonomial, usize>,
}

impl FormBasis {
    pub fn new(gens: &GeneratorSet, p: Option<usize>, d: &MultiDegree) -> Self {
        let monomials = form_monomials(gens, p, d);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self { monomials, index }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[FormMonomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &FormMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// A sparse linear combination of form monomials of one multidegree.
#[derive(Clone, PartialEq, Eq)]
pub struct FormElement {
    gens: GeneratorSet,
    terms: BTreeMap<FormMonomial, Rational>,
}

impl FormElement {
    pub fn zero(gens: GeneratorSet) -> Self {
        Self {
            gens,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(gens: GeneratorSet) -> Self {
        Self::monomial(gens, FormMonomial::one(&gens), Rational::one())
    }

    pub fn monomial(gens: GeneratorSet, m: FormMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { gens, terms }
    }

    fn symbol(gens: GeneratorSet, f: impl FnOnce(&mut FormMonomial)) -> Self {
        let mut m = FormMonomial::one(&gens);
        f(&mut m);
        Self::monomial(gens, m, Rational::one())
    }

    /// `x_{i+1}` (0-based index).
    pub fn x(gens: GeneratorSet, i: usize) -> Self {
        Self::symbol(gens, |m| m.x_exps[i] = 1)
    }

    pub fn y(gens: GeneratorSet, j: usize) -> Self {
        Self::symbol(gens, |m| m.y_set = 1 << j)
    }

    pub fn dx(gens: GeneratorSet, i: usize) -> Self {
        Self::symbol(gens, |m| m.dx_set = 1 << i)
    }

    pub fn dy(gens: GeneratorSet, j: usize) -> Self {
        Self::symbol(gens, |m| m.dy_exps[j] = 1)
    }

    /// Image of a single letter of `A_{m|n}`.
    pub fn letter(gens: GeneratorSet, letter: u8) -> Self {
        let l = letter as usize;
        if l < gens.even() {
            Self::x(gens, l)
        } else {
            Self::y(gens, l - gens.even())
        }
    }

    fn from_pairs(
        gens: GeneratorSet,
        pairs: impl IntoIterator<Item = (FormMonomial, Rational)>,
    ) -> Self {
        let mut terms: BTreeMap<FormMonomial, Rational> = BTreeMap::new();
        for (m, c) in pairs {
            *terms.entry(m).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { gens, terms }
    }

    pub fn from_vector(gens: GeneratorSet, basis: &FormBasis, v: &SparseVector) -> Self {
        Self::from_pairs(
            gens,
            v.iter()
                .map(|(i, c)| (basis.monomials[i].clone(), c.clone())),
        )
    }

    /// Coordinates in `basis`; `None` if some monomial lies outside it.
    pub fn to_vector(&self, basis: &FormBasis) -> Option<SparseVector> {
        let mut pairs = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            pairs.push((basis.index_of(m)?, c.clone()));
        }
        Some(SparseVector::from_pairs(pairs))
    }

    pub fn gens(&self) -> GeneratorSet {
        self.gens
    }

    pub fn terms(&self) -> &BTreeMap<FormMonomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &FormMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<MultiDegree> {
        self.terms.keys().next().map(FormMonomial::degree)
    }

    /// Form degree, if all terms share one.
    pub fn form_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(FormMonomial::form_degree);
        let p = it.next()?;
        it.all(|q| q == p).then_some(p)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_pairs(
            self.gens,
            self.terms.iter().map(|(m, x)| (m.clone(), x * c)),
        )
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        assert_eq!(self.gens, other.gens, "forms on different spaces");
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            assert_eq!(a, b, "sum of forms of different multidegrees");
        }
        let s = rat(sign);
        Self::from_pairs(
            self.gens,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone()))
                .chain(other.terms.iter().map(|(m, c)| (m.clone(), c * &s))),
        )
    }

    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.gens, other.gens, "forms on different spaces");
        let mut pairs = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((m, neg)) = a.wedge(b) {
                    let c = x * y;
                    pairs.push((m, if neg { -c } else { c }));
                }
            }
        }
        Self::from_pairs(self.gens, pairs)
    }

    pub fn d(&self) -> Self {
        Self::from_pairs(
            self.gens,
            self.terms
                .iter()
                .flat_map(|(m, c)| m.derivative().into_iter().map(move |(dm, e)| (dm, e * c))),
        )
    }

    /// Fedosov product `a ∗ b = a ∧ b + (-1)^{κ(a)} da ∧ db`, extended
    /// bilinearly from monomials.
    pub fn fedosov(&self, other: &Self) -> Self {
        assert_eq!(self.gens, other.gens, "forms on different spaces");
        let mut pairs = Vec::new();
        let dother: Vec<_> = other
            .terms
            .iter()
            .map(|(b, y)| (b, y, b.derivative()))
            .collect();
        for (a, x) in &self.terms {
            let da = a.derivative();
            let odd = a.kappa() == 1;
            for (b, y, db) in &dother {
                let c = x * *y;
                if let Some((m, neg)) = a.wedge(b) {
                    pairs.push((m, if neg { -c.clone() } else { c.clone() }));
                }
                for (ma, ca) in &da {
                    for (mb, cb) in db {
                        if let Some((m, neg)) = ma.wedge(mb) {
                            let mut t = &c * ca * cb;
                            if neg != odd {
                                t = -t;
                            }
                            pairs.push((m, t));
                        }
                    }
                }
            }
        }
        Self::from_pairs(self.gens, pairs)
    }
}

impl Add for &FormElement {
    type Output = FormElement;
    fn add(self, rhs: &FormElement) -> FormElement {
        self.combine(rhs, 1)
    }
}

impl Sub for &FormElement {
    type Output = FormElement;
    fn sub(self, rhs: &FormElement) -> FormElement {
        self.combine(rhs, -1)
    }
}

impl Neg for &FormElement {
    type Output = FormElement;
    fn neg(self) -> FormElement {
        self.scale(&rat(-1))
    }
}

impl fmt::Display for FormElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign, abs) = sign_prefix(c, i == 0);
            let body = m.render();
            write!(f, "{sign}")?;
            if abs.is_one() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                write!(f, "{}*{body}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FormElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormElement({self})")
    }
}

/// `φ: A -> (Ω^{ev}, ∗)`, letters to degree-0 forms, with a prefix cache.
#[derive(Debug)]
pub struct PhiMap {
    gens: GeneratorSet,
    cache: HashMap<Word, FormElement>,
}

impl PhiMap {
    pub fn new(gens: GeneratorSet) -> Self {
        let mut cache = HashMap::new();
        cache.insert(Word::unit(), FormElement::one(gens));
        Self { gens, cache }
    }

    pub fn word(&mut self, w: &Word) -> FormElement {
        if let Some(f) = self.cache.get(w) {
            return f.clone();
        }
        let (last, prefix) = w.letters().split_last().expect("unit word is cached");
        let head = self.word(&Word(prefix.to_vec()));
        let f = head.fedosov(&FormElement::letter(self.gens, *last));
        self.cache.insert(w.clone(), f.clone());
        f
    }

    pub fn element(&mut self, a: &AlgebraElement) -> FormElement {
        let mut pairs = Vec::new();
        for (w, c) in a.terms() {
            for (m, x) in self.word(w).terms {
                pairs.push((m, x * c));
            }
        }
        FormElement::from_pairs(self.gens, pairs)
    }
}

/// One-shot `φ` without a persistent cache.
pub fn phi_map(a: &AlgebraElement) -> FormElement {
    PhiMap::new(a.gens()).element(a)
}

fn derivative_images(
    gens: &GeneratorSet,
    source: &FormBasis,
    target: &FormBasis,
) -> Vec<SparseVector> {
    source
        .monomials()
        .iter()
        .map(|m| {
            FormElement::monomial(*gens, m.clone(), Rational::one())
                .d()
                .to_vector(target)
                .expect("d preserves multidegree and raises p by one")
        })
        .collect()
}

/// `d(Ω^{p-1}[d])` in the coordinates of `form_basis(gens, p, d)`.
pub fn exact_subspace(gens: &GeneratorSet, p: usize, d: &MultiDegree) -> EchelonSubspace {
    let target = FormBasis::new(gens, Some(p), d);
    if p == 0 {
        return EchelonSubspace::new(target.dim());
    }
    let source = FormBasis::new(gens, Some(p - 1), d);
    EchelonSubspace::from_vectors(target.dim(), derivative_images(gens, &source, &target))
}

/// `ker(d) ∩ Ω^p[d]` in the coordinates of `form_basis(gens, p, d)`.
pub fn closed_subspace(gens: &GeneratorSet, p: usize, d: &MultiDegree) -> EchelonSubspace {
    let source = FormBasis::new(gens, Some(p), d);
    let target = FormBasis::new(gens, Some(p + 1), d);
    kernel(
        source.dim(),
        target.dim(),
        &derivative_images(gens, &source, &target),
    )
}

/// Per-degree data behind the three Feigin–Shoikhet checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FsDegreeData {
    pub degree: MultiDegree,
    pub dim_a: usize,
    pub dim_m3: usize,
    pub dim_even_forms: usize,
    pub rank_phi: usize,
    pub m3_killed: bool,
    pub dim_phi_l2: usize,
    pub dim_exact_even: usize,
    pub l2_onto_exact: bool,
}

/// Computes the Feigin–Shoikhet data on every component of `lie`.
pub fn fs_data(
    lie: &GradedSubspaceFamily,
    ideals: &GradedSubspaceFamily,
) -> Result<Vec<FsDegreeData>> {
    let gens = lie.gens();
    let bases = lie.bases().clone();
    let degrees = bases.degrees_by_total();
    let mut phi = PhiMap::new(gens);
    let mut images: HashMap<MultiDegree, Vec<FormElement>> = HashMap::new();
    for d in &degrees {
        let imgs = bases.basis(d).words().iter().map(|w| phi.word(w)).collect();
        images.insert(d.clone(), imgs);
    }
    degrees
        .par_iter()
        .map(|d| fs_degree(&gens, d, bases.basis(d), &images[d], lie, ideals))
        .collect()
}

fn fs_degree(
    gens: &GeneratorSet,
    d: &MultiDegree,
    words: &WordBasis,
    images: &[FormElement],
    lie: &GradedSubspaceFamily,
    ideals: &GradedSubspaceFamily,
) -> Result<FsDegreeData> {
    let all = FormBasis::new(gens, None, d);
    let coords: Vec<SparseVector> = images
        .iter()
        .map(|f| f.to_vector(&all).expect("φ preserves multidegree"))
        .collect();
    let apply = |v: &SparseVector| {
        let mut pairs = Vec::new();
        for (i, c) in v.iter() {
            pairs.extend(coords[i].iter().map(|(j, x)| (j, x * c)));
        }
        SparseVector::from_pairs(pairs)
    };
    let m3 = ideals.space(3, d)?;
    let m3_killed = m3.rows().iter().all(|r| apply(r).is_zero());
    let rank_phi = EchelonSubspace::from_vectors(all.dim(), coords.iter().cloned()).dim();
    let dim_even_forms = all
        .monomials()
        .iter()
        .filter(|m| m.form_degree() % 2 == 0)
        .count();

    let l2 = lie.space(2, d)?;
    let phi_l2 = EchelonSubspace::from_vectors(all.dim(), l2.rows().iter().map(apply));
    let odd: Vec<FormMonomial> = all
        .monomials()
        .iter()
        .filter(|m| m.form_degree() % 2 == 1)
        .cloned()
        .collect();
    let exact_even = EchelonSubspace::from_vectors(
        all.dim(),
        odd.into_iter().map(|m| {
            FormElement::monomial(*gens, m, Rational::one())
                .d()
                .to_vector(&all)
                .expect("d preserves multidegree")
        }),
    );
    let l2_onto_exact = phi_l2.dim() == exact_even.dim() && exact_even.contains_space(&phi_l2);
    Ok(FsDegreeData {
        degree: d.clone(),
        dim_a: words.dim(),
        dim_m3: m3.dim(),
        dim_even_forms,
        rank_phi,
        m3_killed,
        dim_phi_l2: phi_l2.dim(),
        dim_exact_even: exact_even.dim(),
        l2_onto_exact,
    })
}

/// The three checks: `φ(M_3) = 0`, `dim A/M_3 = rank φ = dim Ω^{ev}`, and
/// `φ(L_2) = ⊕_{p ≥ 1} Ω^{2p}_{ex}`.
pub fn verify_fs(
    lie: &GradedSubspaceFamily,
    ideals: &GradedSubspaceFamily,
) -> Result<Vec<CheckReport>> {
    let data = fs_data(lie, ideals)?;
    let outcome = |x: &FsDegreeData, holds: bool, witness: String| DegreeOutcome {
        degree: x.degree.clone(),
        holds,
        witness: (!holds).then_some(witness),
    };
    let kill = data
        .iter()
        .map(|x| outcome(x, x.m3_killed, "some row of M3 has nonzero image".into()))
        .collect();
    let rank = data
        .iter()
        .map(|x| {
            let holds = x.rank_phi == x.dim_even_forms && x.dim_a - x.dim_m3 == x.dim_even_forms;
            outcome(
                x,
                holds,
                format!(
                    "rank phi = {}, dim Omega^ev = {}, dim A/M3 = {}",
                    x.rank_phi,
                    x.dim_even_forms,
                    x.dim_a - x.dim_m3
                ),
            )
        })
        .collect();
    let exact = data
        .iter()
        .map(|x| {
            outcome(
                x,
                x.l2_onto_exact,
                format!(
                    "dim phi(L2) = {}, dim exact even = {}",
                    x.dim_phi_l2, x.dim_exact_even
                ),
            )
        })
        .collect();
    Ok(vec![
        CheckReport {
            check: "fs phi(M3)=0".into(),
            outcomes: kill,
        },
        CheckReport {
            check: "fs dim A/M3 = rank phi = dim Omega^ev".into(),
            outcomes: rank,
        },
        CheckReport {
            check: "fs phi(L2) = exact even forms".into(),
            outcomes: exact,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;
    use crate::lcs::{compute_ideals, compute_lcs, DEFAULT_BUDGET};

    fn g(m: usize, n: usize) -> GeneratorSet {
        GeneratorSet::new(m, n).unwrap()
    }

    fn md(v: &[usize]) -> MultiDegree {
        MultiDegree(v.to_vec())
    }

    #[test]
    fn basis_examples() {
        let b = form_basis(&g(0, 1), 2, &md(&[2]));
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].render(), "dy1^2");
        let b = form_basis(&g(2, 0), 2, &md(&[1, 1]));
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].render(), "dx1*dx2");
        for d in 0..6 {
            assert!(form_basis(&g(1, 0), 2, &md(&[d])).is_empty());
        }
    }

    #[test]
    fn wedge_examples() {
        let gs = g(2, 1);
        let (x1, dx1, dx2, dy1) = (
            FormElement::x(gs, 0),
            FormElement::dx(gs, 0),
            FormElement::dx(gs, 1),
            FormElement::dy(gs, 0),
        );
        assert_eq!(x1.wedge(&dx1), dx1.wedge(&x1));
        assert_eq!(dx1.wedge(&dx2), -&dx2.wedge(&dx1));
        assert_eq!(dy1.wedge(&dy1).to_string(), "dy1^2");
        assert!(dx1.wedge(&dx1).is_zero());
        let y1 = FormElement::y(gs, 0);
        assert!(y1.wedge(&y1).is_zero());
        assert_eq!(dx1.wedge(&y1).to_string(), "-y1*dx1");
    }

    #[test]
    fn derivative_examples() {
        let gs = g(2, 1);
        let x1x2 = FormElement::x(gs, 0).wedge(&FormElement::x(gs, 1));
        assert_eq!(x1x2.d().to_string(), "x2*dx1 + x1*dx2");
        assert_eq!(FormElement::y(gs, 0).d(), FormElement::dy(gs, 0));
        assert!(FormElement::dx(gs, 0).d().is_zero());
        let m = FormMonomial {
            x_exps: vec![2, 1],
            dy_exps: vec![1],
            y_set: 1,
            dx_set: 0b10,
        };
        assert_eq!(m.render(), "x1^2*x2*dy1*y1*dx2");
        let f = FormElement::monomial(gs, m, rat(1));
        assert!(f.d().d().is_zero());
    }

    #[test]
    fn fedosov_examples() {
        let gs = g(2, 1);
        let (x1, x2, y1) = (
            FormElement::x(gs, 0),
            FormElement::x(gs, 1),
            FormElement::y(gs, 0),
        );
        assert_eq!(x1.fedosov(&x2).to_string(), "x1*x2 + dx1*dx2");
        // the κ-sign (see README) gives y1 ∗ y1 = -(dy1)^2
        assert_eq!(y1.fedosov(&y1).to_string(), "-dy1^2");
        let one = FormElement::one(gs);
        assert_eq!(one.fedosov(&x1), x1);
        assert_eq!(y1.fedosov(&one), y1);
    }

    #[test]
    fn phi_examples() {
        let gs = g(2, 1);
        let x1 = gs.generator(0);
        let x2 = gs.generator(1);
        assert_eq!(phi_map(&x1), FormElement::x(gs, 0));
        let c = &(&x1 * &x2) - &(&x2 * &x1);
        assert_eq!(phi_map(&c).to_string(), "2*dx1*dx2");
        let y1 = gs.generator(2);
        assert_eq!(phi_map(&(&y1 * &y1)).to_string(), "-dy1^2");
        assert_eq!(phi_map(&AlgebraElement::one(gs)), FormElement::one(gs));
    }

    #[test]
    fn exact_and_closed_examples() {
        let g1 = g(1, 0);
        for d in 1..6 {
            let e = exact_subspace(&g1, 1, &md(&[d]));
            assert_eq!(e.dim(), 1);
        }
        for d in 0..6 {
            assert_eq!(exact_subspace(&g1, 2, &md(&[d])).dim(), 0);
        }
        for gs in [g(2, 0), g(1, 1), g(0, 2)] {
            for d in gs.degrees_up_to(4) {
                for p in 0..=4 {
                    let extra = usize::from(p == 0 && d.total() == 0);
                    assert_eq!(
                        closed_subspace(&gs, p, &d).dim(),
                        exact_subspace(&gs, p, &d).dim() + extra,
                        "{gs:?} p={p} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn fs_passes_on_small_cases() {
        for (m, n, dmax) in [(2, 0, 5), (1, 0, 5), (0, 1, 6), (1, 1, 4)] {
            let lie = compute_lcs(g(m, n), dmax, 3, DEFAULT_BUDGET).unwrap();
            let ideals = compute_ideals(&lie);
            for r in verify_fs(&lie, &ideals).unwrap() {
                assert!(
                    r.passed(),
                    "({m}|{n}) {}: {:?}",
                    r.check,
                    r.failures().collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn even_forms_of_one_odd_generator() {
        let lie = compute_lcs(g(0, 1), 4, 3, DEFAULT_BUDGET).unwrap();
        let data = fs_data(&lie, &compute_ideals(&lie)).unwrap();
        let at2 = data.iter().find(|x| x.degree == md(&[2])).unwrap();
        assert_eq!(at2.dim_even_forms, 1);
    }
}
