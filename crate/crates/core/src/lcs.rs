//! Degree-truncated brute force for the lower central series.
//!
//! `L_1 = A` and `L_{k+1}[d]` is spanned by `[w, b]` for words `w` and rows
//! `b` of `L_k` in complementary degrees. `M_k = A L_k A` is built
//! recursively from `L_k` by multiplying with single letters on either side.
//! All tables are kept per multidegree with total degree at most `D`.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{symmetrize, GeneratorSet, MultiDegree, Word, WordBasis};
use crate::error::{LcsError, Result};
use crate::linalg::{rat, EchelonSubspace, SparseVector};

pub const DEFAULT_BUDGET: usize = 5000;

/// Monomial bases of every component `A[d]` with `total(d) <= D`.
#[derive(Debug)]
pub struct ComponentBases {
    gens: GeneratorSet,
    max_degree: usize,
    bases: BTreeMap<MultiDegree, WordBasis>,
}

impl ComponentBases {
    pub fn new(gens: GeneratorSet, max_degree: usize, budget: usize) -> Result<Self> {
        let mut bases = BTreeMap::new();
        for d in gens.degrees_up_to(max_degree) {
            let dim = d.multinomial();
            if dim > budget as u128 {
                return Err(LcsError::BudgetExceeded {
                    degree: d,
                    dim: dim.min(usize::MAX as u128) as usize,
                    budget,
                });
            }
            let basis = WordBasis::new(&gens, &d);
            bases.insert(d, basis);
        }
        Ok(Self {
            gens,
            max_degree,
            bases,
        })
    }

    pub fn gens(&self) -> GeneratorSet {
        self.gens
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn basis(&self, d: &MultiDegree) -> &WordBasis {
        self.bases
            .get(d)
            .unwrap_or_else(|| panic!("component {d} outside the computed range"))
    }

    pub fn degrees(&self) -> impl Iterator<Item = &MultiDegree> + '_ {
        self.bases.keys()
    }

    /// Degrees sorted by total degree (the order used for reports).
    pub fn degrees_by_total(&self) -> Vec<MultiDegree> {
        self.gens.degrees_up_to(self.max_degree)
    }

    pub fn dim(&self, d: &MultiDegree) -> usize {
        self.basis(d).dim()
    }

    /// Coordinates of `[w, b]` where `w` is a single word and `b` a vector in `A[db]`.
    pub fn bracket_word_vector(
        &self,
        w: &Word,
        dw: &MultiDegree,
        b: &SparseVector,
        db: &MultiDegree,
    ) -> SparseVector {
        let target = self.basis(&dw.plus(db));
        let bb = self.basis(db);
        let sign = if w.parity(&self.gens) & bb.parity() == 1 {
            rat(1)
        } else {
            rat(-1)
        };
        let mut pairs = Vec::with_capacity(2 * b.nnz());
        for (i, c) in b.iter() {
            let u = bb.word(i);
            pairs.push((
                target.index_of(&w.concat(u)).expect("word in target"),
                c.clone(),
            ));
            pairs.push((
                target.index_of(&u.concat(w)).expect("word in target"),
                c * &sign,
            ));
        }
        SparseVector::from_pairs(pairs)
    }

    /// Coordinates of `[a, b]` for vectors in `A[da]` and `A[db]`.
    pub fn bracket_vectors(
        &self,
        a: &SparseVector,
        da: &MultiDegree,
        b: &SparseVector,
        db: &MultiDegree,
    ) -> SparseVector {
        let target = self.basis(&da.plus(db));
        let (ba, bb) = (self.basis(da), self.basis(db));
        let sign = if ba.parity() & bb.parity() == 1 {
            rat(1)
        } else {
            rat(-1)
        };
        let mut pairs = Vec::with_capacity(2 * a.nnz() * b.nnz());
        for (i, x) in a.iter() {
            let wa = ba.word(i);
            for (j, y) in b.iter() {
                let wb = bb.word(j);
                let c = x * y;
                pairs.push((
                    target.index_of(&wb.concat(wa)).expect("word in target"),
                    &c * &sign,
                ));
                pairs.push((target.index_of(&wa.concat(wb)).expect("word in target"), c));
            }
        }
        SparseVector::from_pairs(pairs)
    }

    /// Coordinates of the product `a b`.
    pub fn product_vectors(
        &self,
        a: &SparseVector,
        da: &MultiDegree,
        b: &SparseVector,
        db: &MultiDegree,
    ) -> SparseVector {
        let target = self.basis(&da.plus(db));
        let (ba, bb) = (self.basis(da), self.basis(db));
        let mut pairs = Vec::with_capacity(a.nnz() * b.nnz());
        for (i, x) in a.iter() {
            let wa = ba.word(i);
            for (j, y) in b.iter() {
                pairs.push((
                    target
                        .index_of(&wa.concat(bb.word(j)))
                        .expect("word in target"),
                    x * y,
                ));
            }
        }
        SparseVector::from_pairs(pairs)
    }

    fn letter_times(
        &self,
        letter: u8,
        v: &SparseVector,
        dv: &MultiDegree,
        on_left: bool,
    ) -> SparseVector {
        let dl = self.gens.unit_degree(letter as usize);
        let target = self.basis(&dl.plus(dv));
        let src = self.basis(dv);
        let lw = Word(vec![letter]);
        SparseVector::from_pairs(v.iter().map(|(i, c)| {
            let w = if on_left {
                lw.concat(src.word(i))
            } else {
                src.word(i).concat(&lw)
            };
            (target.index_of(&w).expect("word in target"), c.clone())
        }))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    /// Lie ideals `L_k`.
    Lie,
    /// Two-sided ideals `M_k = A L_k A`.
    Ideal,
    /// One-sided ideals `A L_k`.
    LeftIdeal,
}

/// A table `(k, d) -> subspace of A[d]` for `1 <= k <= depth`.
#[derive(Clone, Debug)]
pub struct GradedSubspaceFamily {
    kind: FamilyKind,
    bases: Arc<ComponentBases>,
    layers: Vec<BTreeMap<MultiDegree, EchelonSubspace>>,
}

impl GradedSubspaceFamily {
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn bases(&self) -> &Arc<ComponentBases> {
        &self.bases
    }

    pub fn gens(&self) -> GeneratorSet {
        self.bases.gens
    }

    pub fn max_degree(&self) -> usize {
        self.bases.max_degree
    }

    /// Largest `k` for which the table is stored.
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// The `k`-th member at degree `d`. Members beyond the stored depth are
    /// known to vanish when `total(d) < k`; otherwise they are an error.
    pub fn space(&self, k: usize, d: &MultiDegree) -> Result<Cow<'_, EchelonSubspace>> {
        assert!(k >= 1, "filtration index starts at 1");
        if let Some(layer) = self.layers.get(k - 1) {
            return Ok(Cow::Borrowed(layer.get(d).unwrap_or_else(|| {
                panic!("component {d} outside the computed range")
            })));
        }
        if d.total() < k {
            return Ok(Cow::Owned(EchelonSubspace::new(self.bases.dim(d))));
        }
        Err(LcsError::DepthExceeded {
            k,
            total: d.total(),
            depth: self.depth(),
        })
    }

    pub fn dim(&self, k: usize, d: &MultiDegree) -> Result<usize> {
        Ok(self.space(k, d)?.dim())
    }
}

/// Computes `L_1, .., L_{k_max}` on all components of total degree `<= max_degree`.
pub fn compute_lcs(
    gens: GeneratorSet,
    max_degree: usize,
    k_max: usize,
    budget: usize,
) -> Result<GradedSubspaceFamily> {
    if k_max == 0 || max_degree == 0 {
        return Err(LcsError::InvalidArgument(
            "k_max and max_degree must be at least 1".into(),
        ));
    }
    let bases = Arc::new(ComponentBases::new(gens, max_degree, budget)?);
    let degrees = bases.degrees_by_total();
    let first: BTreeMap<_, _> = degrees
        .iter()
        .map(|d| (d.clone(), EchelonSubspace::full(bases.dim(d))))
        .collect();
    let mut layers = vec![first];
    for k in 1..k_max {
        let prev = &layers[k - 1];
        let next: BTreeMap<_, _> = degrees
            .par_iter()
            .map(|d| (d.clone(), next_lcs_component(&bases, prev, k, d)))
            .collect();
        layers.push(next);
    }
    Ok(GradedSubspaceFamily {
        kind: FamilyKind::Lie,
        bases,
        layers,
    })
}

/// `L_{k+1}[d]` from the table of `L_k`.
pub fn next_lcs_component(
    bases: &ComponentBases,
    lk: &BTreeMap<MultiDegree, EchelonSubspace>,
    k: usize,
    d: &MultiDegree,
) -> EchelonSubspace {
    let mut space = EchelonSubspace::new(bases.dim(d));
    let total = d.total();
    if total < k + 1 {
        return space;
    }
    let bound = lk[d].dim();
    for dw in d.sub_degrees() {
        let tw = dw.total();
        if tw == 0 || tw > total - k {
            continue;
        }
        let db = d.checked_sub(&dw).expect("sub-degree");
        let rows = lk[&db].rows();
        if rows.is_empty() {
            continue;
        }
        for w in bases.basis(&dw).words() {
            for b in rows {
                space.insert(bases.bracket_word_vector(w, &dw, b, &db));
                if space.dim() == bound {
                    return space;
                }
            }
        }
    }
    space
}

/// The two-sided ideals `M_k = A L_k A` for `k` up to the depth of `lie`.
pub fn compute_ideals(lie: &GradedSubspaceFamily) -> GradedSubspaceFamily {
    build_ideals(lie, true)
}

/// The left ideals `A L_k`, used to test that left multiples already give `M_k`.
pub fn compute_left_ideals(lie: &GradedSubspaceFamily) -> GradedSubspaceFamily {
    build_ideals(lie, false)
}

fn build_ideals(lie: &GradedSubspaceFamily, two_sided: bool) -> GradedSubspaceFamily {
    let bases = lie.bases.clone();
    let gens = bases.gens;
    let max_degree = bases.max_degree;
    let mut layers = Vec::with_capacity(lie.depth());
    for k in 1..=lie.depth() {
        let mut layer: BTreeMap<MultiDegree, EchelonSubspace> = BTreeMap::new();
        for total in 0..=max_degree {
            let degrees = MultiDegree::compositions(gens.len(), total);
            let computed: Vec<_> = degrees
                .par_iter()
                .map(|d| {
                    let lkd = &lie.layers[k - 1][d];
                    let mut space = lkd.clone();
                    if total < k || space.is_full() {
                        return (d.clone(), space);
                    }
                    'letters: for letter in 0..gens.len() {
                        if d.0[letter] == 0 {
                            continue;
                        }
                        let dl = gens.unit_degree(letter);
                        let dr = d.checked_sub(&dl).expect("letter divides degree");
                        for row in layer[&dr].rows() {
                            space.insert(bases.letter_times(letter as u8, row, &dr, true));
                            if two_sided {
                                space.insert(bases.letter_times(letter as u8, row, &dr, false));
                            }
                            if space.is_full() {
                                break 'letters;
                            }
                        }
                    }
                    (d.clone(), space)
                })
                .collect();
            layer.extend(computed);
        }
        layers.push(layer);
    }
    GradedSubspaceFamily {
        kind: if two_sided {
            FamilyKind::Ideal
        } else {
            FamilyKind::LeftIdeal
        },
        bases,
        layers,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SeriesName {
    B(usize),
    N(usize),
    BBar1,
    Z,
    QuotientM3,
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesName::B(k) => write!(f, "B{k}"),
            SeriesName::N(k) => write!(f, "N{k}"),
            SeriesName::BBar1 => write!(f, "Bbar1"),
            SeriesName::Z => write!(f, "Z"),
            SeriesName::QuotientM3 => write!(f, "A/M3"),
        }
    }
}

/// Graded dimensions keyed by series and multidegree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DimensionTable {
    entries: BTreeMap<(SeriesName, MultiDegree), usize>,
}

impl DimensionTable {
    pub fn insert(&mut self, series: SeriesName, d: MultiDegree, dim: usize) {
        self.entries.insert((series, d), dim);
    }

    pub fn get(&self, series: SeriesName, d: &MultiDegree) -> Option<usize> {
        self.entries.get(&(series, d.clone())).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SeriesName, &MultiDegree, usize)> + '_ {
        self.entries.iter().map(|((s, d), v)| (s, d, *v))
    }

    pub fn series_names(&self) -> Vec<SeriesName> {
        let mut names: Vec<_> = self.entries.keys().map(|(s, _)| *s).collect();
        names.dedup();
        names
    }

    /// The multigraded entries of one series.
    pub fn series(&self, series: SeriesName) -> BTreeMap<MultiDegree, usize> {
        self.entries
            .iter()
            .filter(|((s, _), _)| *s == series)
            .map(|((_, d), v)| (d.clone(), *v))
            .collect()
    }

    /// Sums the multigraded entries of one series over equal total degree.
    pub fn by_total_degree(&self, series: SeriesName) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for ((s, d), v) in &self.entries {
            if *s == series {
                *out.entry(d.total()).or_insert(0) += v;
            }
        }
        out
    }

    pub fn merge(&mut self, other: DimensionTable) {
        self.entries.extend(other.entries);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `dim B_k[d] = dim L_k[d] - dim L_{k+1}[d]` wherever both are known.
pub fn bk_dims(lie: &GradedSubspaceFamily) -> DimensionTable {
    quotient_dims(lie, SeriesName::B)
}

/// `dim N_k[d] = dim M_k[d] - dim M_{k+1}[d]` wherever both are known.
pub fn nk_dims(ideals: &GradedSubspaceFamily) -> DimensionTable {
    quotient_dims(ideals, SeriesName::N)
}

fn quotient_dims(family: &GradedSubspaceFamily, name: fn(usize) -> SeriesName) -> DimensionTable {
    let mut table = DimensionTable::default();
    for d in family.bases.degrees_by_total() {
        for k in 1..=family.depth() {
            let (Ok(a), Ok(b)) = (family.dim(k, &d), family.dim(k + 1, &d)) else {
                continue;
            };
            table.insert(name(k), d.clone(), a - b);
        }
    }
    table
}

/// `B̄_1 = A / (L_2 + M_3)`, the image `Z` of `M_3` in `B_1`, and `A/M_3`.
pub fn bbar1_dims(
    lie: &GradedSubspaceFamily,
    ideals: &GradedSubspaceFamily,
) -> Result<DimensionTable> {
    let mut table = DimensionTable::default();
    for d in lie.bases.degrees_by_total() {
        let dim_a = lie.bases.dim(&d);
        let l2 = lie.space(2, &d)?;
        let m3 = ideals.space(3, &d)?;
        let sum = l2.sum(&m3);
        table.insert(SeriesName::BBar1, d.clone(), dim_a - sum.dim());
        table.insert(SeriesName::Z, d.clone(), sum.dim() - l2.dim());
        table.insert(SeriesName::QuotientM3, d.clone(), dim_a - m3.dim());
    }
    Ok(table)
}

/// Checks `sum_k dim B_k[d] = dim A[d]` on every component; returns the
/// offending degrees.
pub fn exhaustion_failures(lie: &GradedSubspaceFamily) -> Result<Vec<MultiDegree>> {
    let mut bad = Vec::new();
    for d in lie.bases.degrees_by_total() {
        let t = d.total();
        let mut sum = 0;
        for k in 1..=t.max(1) {
            sum += lie.dim(k, &d)? - lie.dim(k + 1, &d)?;
        }
        if sum != lie.bases.dim(&d) {
            bad.push(d);
        }
    }
    Ok(bad)
}

/// Degrees where `family_{k+1}[d]` is not inside `family_k[d]`.
pub fn filtration_failures(family: &GradedSubspaceFamily) -> Vec<(usize, MultiDegree)> {
    let mut bad = Vec::new();
    for k in 1..family.depth() {
        for d in family.bases.degrees_by_total() {
            let outer = &family.layers[k - 1][&d];
            let inner = &family.layers[k][&d];
            if !outer.contains_space(inner) {
                bad.push((k, d));
            }
        }
    }
    bad
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeOutcome {
    pub degree: MultiDegree,
    pub holds: bool,
    pub witness: Option<String>,
}

/// Per-degree outcome of one structural check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub outcomes: Vec<DegreeOutcome>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DegreeOutcome> + '_ {
        self.outcomes.iter().filter(|o| !o.holds)
    }
}

fn splits(d: &MultiDegree, min_left: usize, min_right: usize) -> Vec<(MultiDegree, MultiDegree)> {
    d.sub_degrees()
        .into_iter()
        .filter_map(|d1| {
            let d2 = d.checked_sub(&d1)?;
            (d1.total() >= min_left && d2.total() >= min_right).then_some((d1, d2))
        })
        .collect()
}

fn render_vector(bases: &ComponentBases, v: &SparseVector, d: &MultiDegree) -> String {
    crate::algebra::AlgebraElement::from_vector(bases.gens, bases.basis(d), v).to_string()
}

/// `[M_j, L_k] ⊆ L_{j+k}` per degree.
pub fn check_bracket_inclusion(
    lie: &GradedSubspaceFamily,
    ideals: &GradedSubspaceFamily,
    j: usize,
    k: usize,
) -> Result<CheckReport> {
    let bases = &lie.bases;
    let outcomes = bases
        .degrees_by_total()
        .par_iter()
        .map(|d| -> Result<DegreeOutcome> {
            let target = lie.space(j + k, d)?;
            for (d1, d2) in splits(d, j, k) {
                let ms = ideals.space(j, &d1)?;
                let ls = lie.space(k, &d2)?;
                for m in ms.rows() {
                    for l in ls.rows() {
                        let v = bases.bracket_vectors(m, &d1, l, &d2);
                        if !target.contains(&v) {
                            return Ok(DegreeOutcome {
                                degree: d.clone(),
                                holds: false,
                                witness: Some(format!(
                                    "[{}, {}] = {}",
                                    render_vector(bases, m, &d1),
                                    render_vector(bases, l, &d2),
                                    render_vector(bases, &v, d)
                                )),
                            });
                        }
                    }
                }
            }
            Ok(DegreeOutcome {
                degree: d.clone(),
                holds: true,
                witness: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport {
        check: format!("bracket[M{j},L{k}]<=L{}", j + k),
        outcomes,
    })
}

/// `M_j M_k ⊆ M_{j+k-1}` per degree.
pub fn check_product_inclusion(
    ideals: &GradedSubspaceFamily,
    j: usize,
    k: usize,
) -> Result<CheckReport> {
    let bases = &ideals.bases;
    let outcomes = bases
        .degrees_by_total()
        .par_iter()
        .map(|d| -> Result<DegreeOutcome> {
            let target = ideals.space(j + k - 1, d)?;
            for (d1, d2) in splits(d, j, k) {
                let a = ideals.space(j, &d1)?;
                let b = ideals.space(k, &d2)?;
                for x in a.rows() {
                    for y in b.rows() {
                        let v = bases.product_vectors(x, &d1, y, &d2);
                        if !target.contains(&v) {
                            return Ok(DegreeOutcome {
                                degree: d.clone(),
                                holds: false,
                                witness: Some(format!(
                                    "({}) * ({}) not in M{}",
                                    render_vector(bases, x, &d1),
                                    render_vector(bases, y, &d2),
                                    j + k - 1
                                )),
                            });
                        }
                    }
                }
            }
            Ok(DegreeOutcome {
                degree: d.clone(),
                holds: true,
                witness: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport {
        check: format!("product M{j}*M{k}<=M{}", j + k - 1),
        outcomes,
    })
}

fn containment_outcome(
    bases: &ComponentBases,
    d: &MultiDegree,
    lhs: &EchelonSubspace,
    span: &EchelonSubspace,
) -> DegreeOutcome {
    match lhs.rows().iter().find(|r| !span.contains(r)) {
        None => DegreeOutcome {
            degree: d.clone(),
            holds: true,
            witness: None,
        },
        Some(r) => DegreeOutcome {
            degree: d.clone(),
            holds: false,
            witness: Some(format!("{} not reached", render_vector(bases, r, d))),
        },
    }
}

/// `L_k[d] ⊆ span{[w, b] : w a word of length 1 or 2, b ∈ L_{k-1}} + L_{k+1}[d]`.
pub fn check_bmcor(lie: &GradedSubspaceFamily, k: usize) -> Result<CheckReport> {
    if k < 2 {
        return Err(LcsError::InvalidArgument("check_bmcor needs k >= 2".into()));
    }
    let bases = &lie.bases;
    let outcomes = bases
        .degrees_by_total()
        .par_iter()
        .map(|d| -> Result<DegreeOutcome> {
            let lk = lie.space(k, d)?;
            let mut span = lie.space(k + 1, d)?.into_owned();
            if !lk.rows().iter().all(|r| span.contains(r)) {
                for (dw, db) in splits(d, 1, k - 1) {
                    if dw.total() > 2 {
                        continue;
                    }
                    let lb = lie.space(k - 1, &db)?;
                    for w in bases.basis(&dw).words() {
                        for b in lb.rows() {
                            span.insert(bases.bracket_word_vector(w, &dw, b, &db));
                        }
                    }
                }
            }
            Ok(containment_outcome(bases, d, &lk, &span))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport {
        check: format!("bmcor L{k}<=[A<=2,L{}]+L{}", k - 1, k + 1),
        outcomes,
    })
}

/// `L_3[d] ⊆ span{[sym(w), b] : w nonempty, b ∈ L_2} + L_4[d]`, i.e. the
/// bracket `(Ω⁰/C) ⊗ B_2 → B_3` is onto.
pub fn check_f3_surjectivity(lie: &GradedSubspaceFamily) -> Result<CheckReport> {
    let bases = &lie.bases;
    let gens = bases.gens;
    let outcomes = bases
        .degrees_by_total()
        .par_iter()
        .map(|d| -> Result<DegreeOutcome> {
            let l3 = lie.space(3, d)?;
            let mut span = lie.space(4, d)?.into_owned();
            if !l3.rows().iter().all(|r| span.contains(r)) {
                for (dw, db) in splits(d, 1, 2) {
                    let lb = lie.space(2, &db)?;
                    if lb.dim() == 0 {
                        continue;
                    }
                    // every rearrangement of a word symmetrizes to ± the same element
                    let sorted = Word(
                        dw.0.iter()
                            .enumerate()
                            .flat_map(|(l, &e)| std::iter::repeat_n(l as u8, e))
                            .collect(),
                    );
                    let sym = symmetrize(&gens, &sorted);
                    if sym.is_zero() {
                        continue;
                    }
                    let sv = sym
                        .to_vector(bases.basis(&dw))
                        .expect("symmetrized word in its component");
                    for b in lb.rows() {
                        span.insert(bases.bracket_vectors(&sv, &dw, b, &db));
                    }
                }
            }
            Ok(containment_outcome(bases, d, &l3, &span))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport {
        check: "f3 (Omega0/C)xB2->B3 onto".into(),
        outcomes,
    })
}

/// Degrees where the left ideal `A L_k` differs from the two-sided `M_k`.
pub fn two_sidedness_discrepancies(
    left: &GradedSubspaceFamily,
    two_sided: &GradedSubspaceFamily,
) -> Vec<(usize, MultiDegree)> {
    let mut out = Vec::new();
    for k in 1..=left.depth().min(two_sided.depth()) {
        for d in left.bases.degrees_by_total() {
            if left.layers[k - 1][&d] != two_sided.layers[k - 1][&d] {
                out.push((k, d));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(m: usize, n: usize, d: usize, k: usize) -> GradedSubspaceFamily {
        compute_lcs(GeneratorSet::new(m, n).unwrap(), d, k, DEFAULT_BUDGET).unwrap()
    }

    fn md(v: &[usize]) -> MultiDegree {
        MultiDegree(v.to_vec())
    }

    #[test]
    fn one_even_generator_is_commutative() {
        let l = family(1, 0, 6, 3);
        for d in 0..=6 {
            assert_eq!(l.dim(2, &md(&[d])).unwrap(), 0);
        }
    }

    #[test]
    fn two_generator_examples() {
        let l = family(2, 0, 4, 3);
        assert_eq!(l.dim(2, &md(&[1, 1])).unwrap(), 1);
        assert_eq!(l.dim(3, &md(&[2, 1])).unwrap(), 1);
        let m = compute_ideals(&l);
        assert_eq!(m.dim(3, &md(&[1, 1])).unwrap(), 0);
        assert_eq!(m.dim(3, &md(&[2, 1])).unwrap(), 1);
    }

    #[test]
    fn ideals_vanish_for_one_generator() {
        let m = compute_ideals(&family(1, 0, 5, 3));
        for d in 0..=5 {
            assert_eq!(m.dim(2, &md(&[d])).unwrap(), 0);
        }
    }

    #[test]
    fn b2_of_two_generators() {
        let b = bk_dims(&family(2, 0, 4, 3)).by_total_degree(SeriesName::B(2));
        assert_eq!((b[&2], b[&3], b[&4]), (1, 2, 3));
    }

    #[test]
    fn b2_of_one_odd_generator() {
        let b = bk_dims(&family(0, 1, 4, 3)).by_total_degree(SeriesName::B(2));
        assert_eq!((b[&2], b[&3], b[&4]), (1, 0, 1));
    }

    #[test]
    fn bk_vanishes_beyond_b1_for_a1() {
        let t = bk_dims(&family(1, 0, 5, 5));
        for (s, _, v) in t.iter() {
            if let SeriesName::B(k) = s {
                if *k >= 2 {
                    assert_eq!(v, 0);
                }
            }
        }
    }

    #[test]
    fn nk_examples() {
        let l = family(2, 0, 3, 3);
        let n = nk_dims(&compute_ideals(&l));
        assert_eq!(n.get(SeriesName::N(1), &md(&[1, 1])), Some(1));
        assert_eq!(n.get(SeriesName::N(1), &md(&[1, 0])), Some(1));
        let n1 = nk_dims(&compute_ideals(&family(1, 0, 4, 3)));
        for (s, _, v) in n1.iter() {
            if *s != SeriesName::N(1) {
                assert_eq!(v, 0);
            }
        }
    }

    #[test]
    fn bbar1_examples() {
        let l = family(1, 0, 5, 3);
        let t = bbar1_dims(&l, &compute_ideals(&l)).unwrap();
        for d in 0..=5 {
            assert_eq!(t.get(SeriesName::BBar1, &md(&[d])), Some(1));
        }
        let l = family(2, 0, 3, 3);
        let t = bbar1_dims(&l, &compute_ideals(&l)).unwrap();
        assert_eq!(t.get(SeriesName::BBar1, &md(&[1, 1])), Some(1));
        assert_eq!(t.by_total_degree(SeriesName::BBar1)[&2], 3);
    }

    #[test]
    fn depth_errors_are_reported() {
        let l = family(2, 0, 4, 2);
        assert!(l.space(3, &md(&[2, 1])).is_err());
        assert_eq!(l.dim(5, &md(&[2, 1])).unwrap(), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let r = compute_lcs(GeneratorSet::new(3, 0).unwrap(), 6, 2, 50);
        assert!(matches!(r, Err(LcsError::BudgetExceeded { .. })));
    }

    #[test]
    fn trivial_inclusions_hold() {
        let l = family(2, 0, 5, 3);
        let m = compute_ideals(&l);
        assert!(check_bracket_inclusion(&l, &m, 1, 1).unwrap().passed());
        for k in 1..=2 {
            assert!(check_product_inclusion(&m, 1, k).unwrap().passed());
        }
        assert!(check_bmcor(&l, 2).unwrap().passed());
    }

    #[test]
    fn f3_is_vacuous_for_one_generator() {
        let l = family(1, 0, 5, 4);
        assert!(check_f3_surjectivity(&l).unwrap().passed());
    }

    #[test]
    fn left_ideals_match_two_sided() {
        let l = family(1, 1, 5, 4);
        let m = compute_ideals(&l);
        let left = compute_left_ideals(&l);
        let diffs = two_sidedness_discrepancies(&left, &m);
        // k = 1: A·A = A, identical as well
        assert!(diffs.is_empty(), "{diffs:?}");
    }

    #[test]
    fn filtration_and_exhaustion() {
        let l = family(1, 1, 5, 6);
        assert!(filtration_failures(&l).is_empty());
        assert!(filtration_failures(&compute_ideals(&l)).is_empty());
        assert!(exhaustion_failures(&l).unwrap().is_empty());
    }
}
