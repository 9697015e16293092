//! Partitions, supersymmetric (hook) Schur polynomials, and the characters
//! used to decompose LCS quotients.

use std::collections::BTreeMap;
use std::fmt;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::MultiDegree;
use crate::error::{LcsError, Result};
use crate::linalg::{rat, Rational};
use crate::series::{exact_form_series, SeriesKey, SeriesVars, TruncatedSeries};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates weakly decreasing positive parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(LcsError::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        Self(
            (0..cols)
                .map(|c| self.0.iter().filter(|&&p| p > c).count())
                .collect(),
        )
    }

    /// The diagram with its first column deleted.
    pub fn bar(&self) -> Self {
        Self(self.0.iter().filter(|&&p| p > 1).map(|p| p - 1).collect())
    }

    /// `(λ, 1^k)`.
    pub fn with_ones(&self, k: usize) -> Self {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, k));
        Self(parts)
    }

    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Dominance order (for partitions of the same size).
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `total`, in reverse lexicographic order.
    pub fn all_of(total: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(total, total, &mut Vec::new(), &mut out);
        out
    }

    /// True iff the diagram fits the `(m|n)` hook, i.e. `λ_{m+1} <= n`.
    pub fn fits_hook(&self, m: usize, n: usize) -> bool {
        self.part(m) <= n
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn plain(m: usize, n: usize) -> SeriesVars {
    SeriesVars {
        m,
        n,
        with_t: false,
    }
}

fn tvars(m: usize, n: usize) -> SeriesVars {
    SeriesVars { m, n, with_t: true }
}

/// Generating function `Π(1+t v_j)/Π(1-t u_i)` (`dual = false`) or
/// `Π(1+t u_i)/Π(1-t v_j)` (`dual = true`).
fn h_generating(m: usize, n: usize, cutoff: usize, dual: bool) -> TruncatedSeries {
    let vars = tvars(m, n);
    let one = TruncatedSeries::one(vars, cutoff);
    let mut acc = one.clone();
    for i in 0..m {
        let tu = TruncatedSeries::u(vars, cutoff, i, 1);
        acc = acc.multiply(&if dual {
            &one + &tu
        } else {
            TruncatedSeries::geometric(&tu)
        });
    }
    for j in 0..n {
        let tv = TruncatedSeries::v(vars, cutoff, j, 1);
        acc = acc.multiply(&if dual {
            TruncatedSeries::geometric(&tv)
        } else {
            &one + &tv
        });
    }
    acc
}

/// Supersymmetric complete homogeneous function `h_k(u|v)`.
pub fn super_h(k: usize, m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    h_generating(m, n, cutoff, false).t_slice(k)
}

/// Supersymmetric elementary function `e_k(u|v)`.
pub fn super_e(k: usize, m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    h_generating(m, n, cutoff, true).t_slice(k)
}

fn determinant(
    matrix: &[Vec<TruncatedSeries>],
    vars: SeriesVars,
    cutoff: usize,
) -> TruncatedSeries {
    let size = matrix.len();
    if size == 0 {
        return TruncatedSeries::one(vars, cutoff);
    }
    // Laplace expansion along the first row; sizes stay small here.
    fn minor(matrix: &[Vec<TruncatedSeries>], col: usize) -> Vec<Vec<TruncatedSeries>> {
        matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect()
    }
    let mut acc = TruncatedSeries::zero(vars, cutoff);
    for (j, entry) in matrix[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let term = entry.multiply(&determinant(&minor(matrix, j), vars, cutoff));
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Hook Schur polynomial `s_λ(u|v)` by the Jacobi–Trudi determinant in the
/// `h`'s, or its dual in the `e`'s when that matrix is smaller.
pub fn hook_schur(lambda: &Partition, m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    let vars = plain(m, n);
    if lambda.size() > cutoff {
        return TruncatedSeries::zero(vars, cutoff);
    }
    let conj = lambda.conjugate();
    let (shape, dual) = if conj.len() < lambda.len() {
        (conj, true)
    } else {
        (lambda.clone(), false)
    };
    let gen = h_generating(m, n, cutoff, dual);
    let max = shape.part(0) + shape.len();
    let slices: Vec<TruncatedSeries> = (0..=max).map(|k| gen.t_slice(k)).collect();
    let l = shape.len();
    let matrix: Vec<Vec<TruncatedSeries>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = shape.part(i) as isize - i as isize + j as isize;
                    if idx < 0 {
                        TruncatedSeries::zero(vars, cutoff)
                    } else {
                        slices[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix, vars, cutoff)
}

/// Hilbert series of `S(ℂ^{m|n})`: `Π(1+v_j)/Π(1-u_i)`.
pub fn s_series(m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    let vars = plain(m, n);
    let one = TruncatedSeries::one(vars, cutoff);
    let mut acc = one.clone();
    for i in 0..m {
        acc = acc.multiply(&TruncatedSeries::geometric(&TruncatedSeries::u(
            vars, cutoff, i, 0,
        )));
    }
    for j in 0..n {
        acc = acc.multiply(&(&one + &TruncatedSeries::v(vars, cutoff, j, 0)));
    }
    acc
}

/// Character of the tensor field module `𝓕_λ` on `ℂ^n` (variables `u_1..u_n`).
pub fn tensor_field_character(
    lambda: &Partition,
    n: usize,
    cutoff: usize,
) -> Result<TruncatedSeries> {
    if lambda.len() > n {
        return Err(LcsError::TooManyRows {
            parts: lambda.parts().to_vec(),
            rows: n,
        });
    }
    let k = lambda.len();
    if lambda.is_column() && k < n {
        if k == 0 {
            // closed 0-forms are the constants
            return Ok(TruncatedSeries::one(plain(n, 0), cutoff));
        }
        return exact_form_series(n, 0, k, cutoff);
    }
    Ok(hook_schur(lambda, n, 0, cutoff).multiply(&s_series(n, 0, cutoff)))
}

/// `𝒢_λ = S(V) ⊗ ⊕_k 𝕊_{(λ,1^{2k})}(V)`.
pub fn g_lambda_character(
    lambda: &Partition,
    m: usize,
    n: usize,
    cutoff: usize,
) -> TruncatedSeries {
    let mut sum = TruncatedSeries::zero(plain(m, n), cutoff);
    let mut k = 0;
    loop {
        let mu = lambda.with_ones(2 * k);
        if mu.size() > cutoff {
            break;
        }
        sum = &sum + &hook_schur(&mu, m, n, cutoff);
        k += 1;
    }
    sum.multiply(&s_series(m, n, cutoff))
}

/// `S(V) ⊗ ⊕_k 𝕊_{(2,1^{2k+1})}(V)`, the Schur-functor description of `B_3`.
pub fn b3_schur_character(m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    let lambda = Partition(vec![2, 1]);
    g_lambda_character(&lambda, m, n, cutoff)
}

/// Lexicographically greatest monomial of the homogeneous part of `s` of
/// total degree `total`, with its coefficient.
fn leading_term(s: &TruncatedSeries, total: usize) -> Option<(SeriesKey, Rational)> {
    s.terms()
        .filter(|(k, _)| k.degree.total() == total)
        .max_by(|(a, _), (b, _)| a.degree.cmp(&b.degree))
        .map(|(k, c)| (k.clone(), c.clone()))
}

/// A decomposition into basis characters, or the point where it broke down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Decomposition {
    Success(Vec<(Partition, u64)>),
    Failure {
        degree: Vec<usize>,
        coefficient: String,
        reason: String,
        partial: Vec<(Partition, u64)>,
    },
}

impl Decomposition {
    pub fn table(&self) -> Option<&[(Partition, u64)]> {
        match self {
            Decomposition::Success(t) => Some(t),
            Decomposition::Failure { .. } => None,
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, Decomposition::Success(_))
    }
}

fn positive_multiplicity(c: &Rational) -> Option<u64> {
    if c.is_integer() && c.is_positive() {
        c.to_integer().try_into().ok()
    } else {
        None
    }
}

/// Greedy peeling generic over a leading-monomial -> basis-character lookup.
fn peel<F, C>(series: &TruncatedSeries, mut lookup: F, mut character: C) -> Decomposition
where
    F: FnMut(&MultiDegree) -> Option<Partition>,
    C: FnMut(&Partition) -> TruncatedSeries,
{
    let mut residual = series.clone();
    let mut table: BTreeMap<Partition, u64> = BTreeMap::new();
    let finish = |t: &BTreeMap<Partition, u64>| -> Vec<(Partition, u64)> {
        let mut v: Vec<_> = t.iter().map(|(p, c)| (p.clone(), *c)).collect();
        v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then(b.0.cmp(&a.0)));
        v
    };
    for total in 0..=series.cutoff() {
        while let Some((key, c)) = leading_term(&residual, total) {
            let fail = |reason: &str| Decomposition::Failure {
                degree: key.degree.0.clone(),
                coefficient: crate::linalg::format_rational(&c),
                reason: reason.into(),
                partial: finish(&table),
            };
            let Some(mult) = positive_multiplicity(&c) else {
                return fail("leading coefficient is not a positive integer");
            };
            let Some(lambda) = lookup(&key.degree) else {
                return fail("leading monomial is not the leading term of any basis character");
            };
            let ch = character(&lambda);
            residual = &residual - &ch.scale(&rat(mult as i64));
            *table.entry(lambda).or_insert(0) += mult;
        }
    }
    Decomposition::Success(finish(&table))
}

/// Peels `series` (in `u_1..u_n`) into tensor-field characters.
pub fn decompose_tensor_field(series: &TruncatedSeries, n: usize) -> Decomposition {
    assert_eq!(series.vars(), plain(n, 0), "series must be in u_1..u_n");
    let cutoff = series.cutoff();
    peel(
        series,
        |d| Partition::new(d.0.clone()).ok(),
        |lambda| tensor_field_character(lambda, n, cutoff).expect("at most n rows"),
    )
}

/// Builds `Σ m_λ ch(𝓕_λ)` from a table.
pub fn tensor_field_sum(
    table: &[(Partition, u64)],
    n: usize,
    cutoff: usize,
) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::zero(plain(n, 0), cutoff);
    for (lambda, mult) in table {
        acc = &acc + &tensor_field_character(lambda, n, cutoff)?.scale(&rat(*mult as i64));
    }
    Ok(acc)
}

/// Leading monomial of `s_λ(u|v)`: `u_1^{λ_1}..u_m^{λ_m}` times `v^μ` where
/// `μ` is the conjugate of the rows below the `m`-th.
pub fn hook_leading_degree(lambda: &Partition, m: usize, n: usize) -> Option<MultiDegree> {
    if !lambda.fits_hook(m, n) {
        return None;
    }
    let below = Partition(lambda.parts().iter().skip(m).copied().collect()).conjugate();
    let mut e: Vec<usize> = (0..m).map(|i| lambda.part(i)).collect();
    e.extend((0..n).map(|j| below.part(j)));
    Some(MultiDegree(e))
}

/// Peels `series` into `𝒢_λ` characters.
pub fn fit_g_lambda(series: &TruncatedSeries, m: usize, n: usize) -> Decomposition {
    assert_eq!(series.vars(), plain(m, n), "series layout");
    let cutoff = series.cutoff();
    let mut leading: BTreeMap<MultiDegree, Partition> = BTreeMap::new();
    for total in 0..=cutoff {
        for lambda in Partition::all_of(total) {
            if let Some(d) = hook_leading_degree(&lambda, m, n) {
                leading.insert(d, lambda);
            }
        }
    }
    peel(
        series,
        |d| leading.get(d).cloned(),
        |lambda| g_lambda_character(lambda, m, n, cutoff),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaBoundEntry {
    pub lambda: Partition,
    pub size: usize,
    pub bar_size: usize,
    pub size_ok: bool,
    pub bar_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaBoundReport {
    pub k: usize,
    pub n: usize,
    pub size_bound: i64,
    pub bar_bound: i64,
    pub entries: Vec<LambdaBoundEntry>,
}

impl LambdaBoundReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.size_ok && e.bar_ok)
    }

    pub fn flagged(&self) -> impl Iterator<Item = &LambdaBoundEntry> + '_ {
        self.entries.iter().filter(|e| !(e.size_ok && e.bar_ok))
    }
}

/// Tests `|λ| <= 2k - 3 + 2⌊(n-2)/2⌋` and `|λ̄| <= 2k - 5` for every entry.
pub fn check_lambda_bounds(table: &[(Partition, u64)], k: usize, n: usize) -> LambdaBoundReport {
    let floor_half = (n as i64 - 2).div_euclid(2);
    let size_bound = 2 * k as i64 - 3 + 2 * floor_half;
    let bar_bound = 2 * k as i64 - 5;
    let entries = table
        .iter()
        .map(|(lambda, _)| {
            let size = lambda.size();
            let bar_size = lambda.bar().size();
            LambdaBoundEntry {
                lambda: lambda.clone(),
                size,
                bar_size,
                size_ok: size as i64 <= size_bound,
                bar_ok: bar_size as i64 <= bar_bound,
            }
        })
        .collect();
    LambdaBoundReport {
        k,
        n,
        size_bound,
        bar_bound,
        entries,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalityOutcome {
    Numerator(TruncatedSeries),
    Failure {
        /// Nonzero terms inside the band `(D - m - n, D]`.
        band_terms: Vec<(SeriesKey, Rational)>,
    },
}

/// Multiplies by `Π(1-u_i)Π(1-v_j)` and demands that the product vanish in
/// total degrees `(D - m - n, D]`.
pub fn rationality_probe(series: &TruncatedSeries) -> RationalityOutcome {
    let vars = series.vars();
    let cutoff = series.cutoff();
    let one = TruncatedSeries::one(vars, cutoff);
    let mut denom = one.clone();
    for i in 0..vars.m {
        denom = denom.multiply(&(&one - &TruncatedSeries::u(vars, cutoff, i, 0)));
    }
    for j in 0..vars.n {
        denom = denom.multiply(&(&one - &TruncatedSeries::v(vars, cutoff, j, 0)));
    }
    let prod = series.multiply(&denom);
    let low = cutoff.saturating_sub(vars.m + vars.n);
    let band: Vec<_> = prod
        .terms()
        .filter(|(k, _)| k.degree.total() > low)
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect();
    if band.is_empty() {
        RationalityOutcome::Numerator(prod.with_cutoff(low))
    } else {
        RationalityOutcome::Failure { band_terms: band }
    }
}

/// Largest ratio `dim[d] / d^e` over total degrees `1..=D` of a
/// total-degree table.
pub fn growth_constant(totals: &BTreeMap<usize, Rational>, exponent: usize) -> Rational {
    totals
        .iter()
        .filter(|(&d, _)| d >= 1)
        .map(|(&d, c)| c / rat((d as i64).pow(exponent as u32)))
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use crate::series::{b3_closed_form, even_forms_series, validated_closed_forms};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn md(v: &[usize]) -> MultiDegree {
        MultiDegree(v.to_vec())
    }

    fn collapse(s: &TruncatedSeries) -> Vec<Rational> {
        let t = s.by_total_degree();
        (0..=s.cutoff())
            .map(|d| t.get(&d).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    /// Semistandard tableaux count with content `d`, by filling the diagram
    /// letter by letter (horizontal strips).
    fn kostka_like(lambda: &Partition, content: &[usize]) -> i64 {
        fn rec(shape: &[usize], lambda: &[usize], content: &[usize]) -> i64 {
            if content.is_empty() {
                return i64::from(shape == lambda);
            }
            let c = content[0];
            let mut total = 0;
            // add a horizontal strip of size c to `shape`, staying inside lambda
            fn strips(
                i: usize,
                left: usize,
                shape: &[usize],
                lambda: &[usize],
                cur: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if i == lambda.len() {
                    if left == 0 {
                        out.push(cur.clone());
                    }
                    return;
                }
                let base = shape.get(i).copied().unwrap_or(0);
                let upper = if i == 0 {
                    lambda[0]
                } else {
                    (shape[i - 1]).min(lambda[i])
                };
                for add in 0..=left.min(upper.saturating_sub(base)) {
                    cur.push(base + add);
                    strips(i + 1, left - add, shape, lambda, cur, out);
                    cur.pop();
                }
            }
            let mut out = Vec::new();
            strips(0, c, shape, lambda, &mut Vec::new(), &mut out);
            for s in out {
                total += rec(&s, lambda, &content[1..]);
            }
            total
        }
        rec(&vec![0; lambda.len()], lambda.parts(), content)
    }

    #[test]
    fn partition_basics() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1, 1]).bar(), p(&[1]));
        assert!(p(&[3]).dominates(&p(&[2, 1])));
        assert!(!p(&[2, 1]).dominates(&p(&[3])));
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(p(&[2, 1]).to_string(), "(2,1)");
    }

    #[test]
    fn super_h_examples() {
        assert_eq!(super_h(0, 2, 1, 4), TruncatedSeries::one(plain(2, 1), 4));
        let h1 = super_h(1, 1, 1, 4);
        assert_eq!(h1.coefficient(&md(&[1, 0]), 0), rat(1));
        assert_eq!(h1.coefficient(&md(&[0, 1]), 0), rat(1));
        let h2 = super_h(2, 1, 1, 4);
        assert_eq!(h2.coefficient(&md(&[2, 0]), 0), rat(1));
        assert_eq!(h2.coefficient(&md(&[1, 1]), 0), rat(1));
        assert_eq!(h2.coefficient(&md(&[0, 2]), 0), rat(0));
    }

    #[test]
    fn hook_schur_examples() {
        let s1 = hook_schur(&p(&[1]), 2, 1, 4);
        assert_eq!(s1, super_h(1, 2, 1, 4));
        let s11 = hook_schur(&p(&[1, 1]), 1, 1, 4);
        let expected = &super_h(1, 1, 1, 4).pow(2) - &super_h(2, 1, 1, 4);
        assert_eq!(s11, expected);
        assert_eq!(s11.coefficient(&md(&[1, 1]), 0), rat(1));
        assert_eq!(s11.coefficient(&md(&[0, 2]), 0), rat(1));
        assert_eq!(s11.coefficient(&md(&[2, 0]), 0), rat(0));
    }

    #[test]
    fn hook_schur_matches_tableaux() {
        for m in 1..=3 {
            for total in 1..=4 {
                for lambda in Partition::all_of(total) {
                    let s = hook_schur(&lambda, m, 0, 4);
                    for d in MultiDegree::compositions(m, total) {
                        let expected = if lambda.len() > m {
                            0
                        } else {
                            kostka_like(&lambda, &d.0)
                        };
                        assert_eq!(s.coefficient(&d, 0), rat(expected), "{lambda} {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn conjugate_duality() {
        for n in 1..=3 {
            for total in 1..=4 {
                for lambda in Partition::all_of(total) {
                    let s = hook_schur(&lambda, 0, n, 4);
                    let classical = hook_schur(&lambda.conjugate(), n, 0, 4);
                    for d in MultiDegree::compositions(n, total) {
                        assert_eq!(
                            s.coefficient(&d, 0),
                            classical.coefficient(&d, 0),
                            "{lambda} {d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_field_examples() {
        let f21 = tensor_field_character(&p(&[2, 1]), 2, 6).unwrap();
        assert_eq!(collapse(&f21), ints(&[0, 0, 0, 2, 4, 6, 8]));
        let f1 = tensor_field_character(&p(&[1]), 1, 5).unwrap();
        assert_eq!(collapse(&f1), ints(&[0, 1, 1, 1, 1, 1]));
        let f11 = tensor_field_character(&p(&[1, 1]), 2, 5).unwrap();
        for d in MultiDegree::compositions(2, 4) {
            assert_eq!(
                f11.coefficient(&d, 0),
                rat(i64::from(d.0[0] > 0 && d.0[1] > 0))
            );
        }
        assert!(tensor_field_character(&p(&[1, 1, 1]), 2, 5).is_err());
    }

    #[test]
    fn g_lambda_examples() {
        for (m, n) in [(1, 0), (2, 0), (1, 1), (0, 2)] {
            assert_eq!(
                g_lambda_character(&Partition::empty(), m, n, 6),
                even_forms_series(m, n, 6)
            );
        }
        assert_eq!(
            g_lambda_character(&p(&[2, 1]), 2, 0, 6),
            validated_closed_forms(2, 0, 6).b3
        );
        let big = g_lambda_character(&p(&[3, 3]), 2, 0, 5);
        assert!(big.is_zero());
    }

    #[test]
    fn b3_schur_examples() {
        assert_eq!(
            collapse(&b3_schur_character(2, 0, 6)),
            ints(&[0, 0, 0, 2, 4, 6, 8])
        );
        assert!(b3_schur_character(1, 0, 6).is_zero());
        assert_eq!(b3_schur_character(1, 1, 6), b3_closed_form(1, 1, 6));
    }

    #[test]
    fn peeling_round_trip() {
        let f = tensor_field_character(&p(&[2, 1]), 2, 6).unwrap();
        assert_eq!(
            decompose_tensor_field(&f, 2),
            Decomposition::Success(vec![(p(&[2, 1]), 1)])
        );
        let b2 = validated_closed_forms(2, 0, 6).b2;
        assert_eq!(
            decompose_tensor_field(&b2, 2),
            Decomposition::Success(vec![(p(&[1, 1]), 1)])
        );
        let table = vec![(p(&[1]), 2), (p(&[2]), 1), (p(&[2, 1]), 3)];
        let s = tensor_field_sum(&table, 2, 6).unwrap();
        assert_eq!(decompose_tensor_field(&s, 2), Decomposition::Success(table));
        let bad = f.scale(&rat(-1));
        assert!(!decompose_tensor_field(&bad, 2).is_success());
    }

    #[test]
    fn lambda_bounds() {
        let r = check_lambda_bounds(&[(p(&[2, 1]), 1)], 3, 2);
        assert!(r.passed());
        assert_eq!((r.size_bound, r.bar_bound), (3, 1));
        let r = check_lambda_bounds(&[(p(&[3, 3]), 1)], 3, 2);
        assert_eq!(r.flagged().count(), 1);
    }

    #[test]
    fn rationality_examples() {
        let b2 = validated_closed_forms(2, 0, 8).b2;
        match rationality_probe(&b2) {
            RationalityOutcome::Numerator(num) => {
                assert_eq!(num.terms().count(), 1);
                assert_eq!(num.coefficient(&md(&[1, 1]), 0), rat(1));
            }
            other => panic!("{other:?}"),
        }
        let one = TruncatedSeries::one(plain(1, 0), 6);
        match rationality_probe(&one) {
            RationalityOutcome::Numerator(num) => {
                assert_eq!(collapse(&num.with_cutoff(6)), ints(&[1, -1, 0, 0, 0, 0, 0]))
            }
            other => panic!("{other:?}"),
        }
        let u = TruncatedSeries::u(plain(1, 0), 6, 0, 0);
        let sq = TruncatedSeries::geometric(&u).pow(2);
        assert!(matches!(
            rationality_probe(&sq),
            RationalityOutcome::Failure { .. }
        ));
    }

    #[test]
    fn fit_examples() {
        let g = g_lambda_character(&p(&[2, 1]), 2, 1, 6);
        assert_eq!(
            fit_g_lambda(&g, 2, 1),
            Decomposition::Success(vec![(p(&[2, 1]), 1)])
        );
        let half = g.scale(&ratio(1, 2));
        assert!(!fit_g_lambda(&half, 2, 1).is_success());
    }

    #[test]
    fn leading_degrees_are_distinct() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (0, 2)] {
            let mut seen = BTreeMap::new();
            for total in 0..=6 {
                for lambda in Partition::all_of(total) {
                    if let Some(d) = hook_leading_degree(&lambda, m, n) {
                        let s = hook_schur(&lambda, m, n, 6);
                        assert_eq!(s.coefficient(&d, 0), rat(1), "{lambda}");
                        let lead = leading_term(&s, total).unwrap().0.degree;
                        assert_eq!(lead, d, "{lambda} ({m}|{n})");
                        assert!(seen.insert(d, lambda).is_none());
                    } else {
                        assert!(hook_schur(&lambda, m, n, 6).is_zero(), "{lambda} ({m}|{n})");
                    }
                }
            }
        }
    }
}
