//! Exact sparse linear algebra over the rationals.
//!
//! Every subspace is kept in reduced row-echelon form with pivots chosen by
//! smallest basis index, so two subspaces are equal iff their row sets are
//! equal. Basis indices are opaque here: callers own the ambient basis.

use num::{BigRational, One, Signed, Zero};
use std::fmt;

/// Ground field scalar. Always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `num / den` as a rational; `den` must be nonzero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVector {
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Unit vector `e_index`.
    pub fn unit(index: usize) -> Self {
        Self {
            entries: vec![(index, Rational::one())],
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut entries: Vec<(usize, Rational)> = pairs.into_iter().collect();
        entries.sort_by_key(|(i, _)| *i);
        let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match merged.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => merged.push((i, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Self { entries: merged }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, index: usize) -> Option<&Rational> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    /// Smallest index with a nonzero entry.
    pub fn leading_index(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, c) in self.entries.iter_mut() {
            *c *= factor;
        }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: &Rational, other: &SparseVector) -> SparseVector {
        if factor.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, factor * y));
                        b.next();
                    } else {
                        let s = x + factor * y;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, factor * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVector { entries: out }
    }
}

impl fmt::Debug for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(i, c)| (i, c.to_string())))
            .finish()
    }
}

/// A subspace of `Q^ambient_dim` in reduced row-echelon form.
///
/// Invariants: pivots strictly increasing, every pivot entry is 1, and every
/// pivot column is zero in all other rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EchelonSubspace {
    ambient_dim: usize,
    rows: Vec<SparseVector>,
    pivots: Vec<usize>,
}

impl EchelonSubspace {
    pub fn new(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole ambient space, spanned by unit vectors.
    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rows: (0..ambient_dim).map(SparseVector::unit).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_vectors<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseVector>,
    {
        let mut space = Self::new(ambient_dim);
        for v in vectors {
            space.insert(v);
        }
        space
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` modulo the row space: zero iff `v` is contained.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        // Rows vanish on each other's pivots, so the coefficients to eliminate
        // can all be read off `v` before any subtraction.
        let mut coeffs: Vec<(usize, Rational)> = Vec::new();
        let mut p = 0;
        for (i, c) in v.iter() {
            while p < self.pivots.len() && self.pivots[p] < i {
                p += 1;
            }
            if p < self.pivots.len() && self.pivots[p] == i {
                coeffs.push((p, c.clone()));
            }
        }
        let mut out = v.clone();
        for (row, c) in coeffs {
            out = out.add_scaled(&-c, &self.rows[row]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns true iff the dimension went up.
    pub fn insert(&mut self, v: SparseVector) -> bool {
        debug_assert!(v.max_index().is_none_or(|i| i < self.ambient_dim));
        if self.is_full() || v.is_zero() {
            return false;
        }
        let mut r = self.reduce(&v);
        let Some(pivot) = r.leading_index() else {
            return false;
        };
        let lead = r.get(pivot).cloned().expect("leading entry");
        r.scale(&lead.recip());
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(pivot).cloned() {
                *row = row.add_scaled(&-c, &r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, r);
        true
    }

    /// Value-style insert: returns the enlarged space and whether `v` was independent.
    pub fn with_inserted(mut self, v: SparseVector) -> (Self, bool) {
        let grew = self.insert(v);
        (self, grew)
    }

    /// Span of `self` and `other`.
    pub fn sum(&self, other: &EchelonSubspace) -> EchelonSubspace {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "subspaces live in different ambient spaces"
        );
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for row in &small.rows {
            if out.is_full() {
                break;
            }
            out.insert(row.clone());
        }
        out
    }

    /// True iff every row of `other` lies in `self`.
    pub fn contains_space(&self, other: &EchelonSubspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Checks the reduced-echelon invariants; used by tests.
    pub fn is_reduced_echelon(&self) -> bool {
        if self.rows.len() != self.pivots.len() {
            return false;
        }
        if !self.pivots.windows(2).all(|w| w[0] < w[1]) {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.leading_index() != Some(self.pivots[r]) {
                return false;
            }
            if row.get(self.pivots[r]).is_none_or(|c| !c.is_one()) {
                return false;
            }
            for (s, &p) in self.pivots.iter().enumerate() {
                if s != r && row.get(p).is_some() {
                    return false;
                }
            }
            if row.iter().any(|(_, c)| c.is_zero()) {
                return false;
            }
        }
        true
    }
}

/// Kernel of the linear map sending the `i`-th unit vector of a
/// `source_dim`-dimensional space to `images[i]` (which live in a space of
/// dimension `target_dim`).
pub fn kernel(source_dim: usize, target_dim: usize, images: &[SparseVector]) -> EchelonSubspace {
    assert_eq!(
        images.len(),
        source_dim,
        "one image per source basis vector"
    );
    // Row-reduce [image | identity]; rows whose pivot falls in the identity
    // block have a vanishing image part.
    let mut aug = EchelonSubspace::new(target_dim + source_dim);
    for (i, img) in images.iter().enumerate() {
        let mut pairs: Vec<(usize, Rational)> = img.iter().map(|(j, c)| (j, c.clone())).collect();
        pairs.push((target_dim + i, Rational::one()));
        aug.insert(SparseVector::from_pairs(pairs));
    }
    let mut out = EchelonSubspace::new(source_dim);
    for (row, &p) in aug.rows.iter().zip(&aug.pivots) {
        if p >= target_dim {
            out.insert(SparseVector::from_pairs(
                row.iter().map(|(j, c)| (j - target_dim, c.clone())),
            ));
        }
    }
    out
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn sign_prefix(q: &Rational, first: bool) -> (String, Rational) {
    let abs = q.abs();
    let sign = if q.is_negative() {
        if first {
            "-".to_string()
        } else {
            " - ".to_string()
        }
    } else if first {
        String::new()
    } else {
        " + ".to_string()
    };
    (sign, abs)
}
