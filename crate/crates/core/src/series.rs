//! Truncated multivariate power series in `u_1..u_m`, `v_1..v_n` and an
//! optional counter `t`, cut off at total `u,v`-degree `D`, plus the Hilbert
//! series of forms and of the first three LCS quotients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::MultiDegree;
use crate::error::{LcsError, Result};
use crate::linalg::{format_rational, rat, ratio, sign_prefix, Rational};

/// Variable layout of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeriesVars {
    pub m: usize,
    pub n: usize,
    pub with_t: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SeriesKey {
    pub degree: MultiDegree,
    /// Power of `t`; always 0 for series without `t`.
    pub t: usize,
}

/// One line of a rendered coefficient table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub degree: Vec<usize>,
    pub t_power: Option<usize>,
    pub numerator: String,
    pub denominator: String,
}

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: SeriesVars,
    cutoff: usize,
    coeffs: BTreeMap<SeriesKey, Rational>,
}

impl TruncatedSeries {
    pub fn zero(vars: SeriesVars, cutoff: usize) -> Self {
        Self {
            vars,
            cutoff,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(vars: SeriesVars, cutoff: usize, c: Rational) -> Self {
        let zero = MultiDegree(vec![0; vars.m + vars.n]);
        Self::monomial(vars, cutoff, zero, 0, c)
    }

    pub fn one(vars: SeriesVars, cutoff: usize) -> Self {
        Self::constant(vars, cutoff, Rational::one())
    }

    /// `c · t^t · u^d v^d`, or zero if beyond the cutoff.
    pub fn monomial(
        vars: SeriesVars,
        cutoff: usize,
        degree: MultiDegree,
        t: usize,
        c: Rational,
    ) -> Self {
        assert_eq!(degree.len(), vars.m + vars.n, "degree length");
        assert!(vars.with_t || t == 0, "t-power in a series without t");
        let mut s = Self::zero(vars, cutoff);
        if degree.total() <= cutoff && !c.is_zero() {
            s.coeffs.insert(SeriesKey { degree, t }, c);
        }
        s
    }

    /// The variable `u_{i+1}` (0-based), times `t` if `with_t_power`.
    pub fn u(vars: SeriesVars, cutoff: usize, i: usize, t: usize) -> Self {
        let mut e = vec![0; vars.m + vars.n];
        e[i] = 1;
        Self::monomial(vars, cutoff, MultiDegree(e), t, Rational::one())
    }

    pub fn v(vars: SeriesVars, cutoff: usize, j: usize, t: usize) -> Self {
        let mut e = vec![0; vars.m + vars.n];
        e[vars.m + j] = 1;
        Self::monomial(vars, cutoff, MultiDegree(e), t, Rational::one())
    }

    /// Builds a series from a table of coefficients, dropping entries beyond the cutoff.
    pub fn from_coefficients<I>(vars: SeriesVars, cutoff: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (MultiDegree, usize, Rational)>,
    {
        let mut s = Self::zero(vars, cutoff);
        for (d, t, c) in entries {
            assert_eq!(d.len(), vars.m + vars.n, "degree length");
            if d.total() > cutoff {
                continue;
            }
            let e = s
                .coeffs
                .entry(SeriesKey { degree: d, t })
                .or_insert_with(Rational::zero);
            *e += c;
        }
        s.coeffs.retain(|_, c| !c.is_zero());
        s
    }

    /// Series of a graded dimension table.
    pub fn from_dims(
        m: usize,
        n: usize,
        cutoff: usize,
        dims: &BTreeMap<MultiDegree, usize>,
    ) -> Self {
        let vars = SeriesVars {
            m,
            n,
            with_t: false,
        };
        Self::from_coefficients(
            vars,
            cutoff,
            dims.iter().map(|(d, &v)| (d.clone(), 0, rat(v as i64))),
        )
    }

    pub fn vars(&self) -> SeriesVars {
        self.vars
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SeriesKey, &Rational)> + '_ {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, degree: &MultiDegree, t: usize) -> Rational {
        self.coeffs
            .get(&SeriesKey {
                degree: degree.clone(),
                t,
            })
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `u^d v^d` summed over all powers of `t`.
    pub fn coefficient_any_t(&self, degree: &MultiDegree) -> Rational {
        self.coeffs
            .iter()
            .filter(|(k, _)| &k.degree == degree)
            .map(|(_, c)| c.clone())
            .sum()
    }

    pub fn with_cutoff(&self, cutoff: usize) -> Self {
        Self {
            vars: self.vars,
            cutoff,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.degree.total() <= cutoff)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_layout(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "series over different variables");
    }

    fn combined_cutoff(&self, other: &Self) -> usize {
        self.cutoff.min(other.cutoff)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut s = self.clone();
        if c.is_zero() {
            s.coeffs.clear();
        } else {
            for v in s.coeffs.values_mut() {
                *v *= c;
            }
        }
        s
    }

    fn combine(&self, other: &Self, sign: &Rational) -> Self {
        self.check_layout(other);
        let cutoff = self.combined_cutoff(other);
        let mut out = self.with_cutoff(cutoff);
        for (k, c) in &other.coeffs {
            if k.degree.total() > cutoff {
                continue;
            }
            let e = out.coeffs.entry(k.clone()).or_insert_with(Rational::zero);
            *e += c * sign;
            if e.is_zero() {
                out.coeffs.remove(k);
            }
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Self {
        self.check_layout(other);
        let cutoff = self.combined_cutoff(other);
        let mut coeffs: BTreeMap<SeriesKey, Rational> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            let ta = a.degree.total();
            if ta > cutoff {
                continue;
            }
            for (b, y) in &other.coeffs {
                if ta + b.degree.total() > cutoff {
                    continue;
                }
                let key = SeriesKey {
                    degree: a.degree.plus(&b.degree),
                    t: a.t + b.t,
                };
                *coeffs.entry(key).or_insert_with(Rational::zero) += x * y;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self {
            vars: self.vars,
            cutoff,
            coeffs,
        }
    }

    /// Multiplicative inverse. The constant term must be a nonzero scalar
    /// and no other term may have `u,v`-degree 0.
    pub fn inverse(&self) -> Result<Self> {
        let zero = MultiDegree(vec![0; self.vars.m + self.vars.n]);
        let c0 = self.coefficient(&zero, 0);
        if c0.is_zero() || self.coeffs.keys().any(|k| k.degree.total() == 0 && k.t > 0) {
            return Err(LcsError::NotInvertible);
        }
        let inv0 = c0.recip();
        // f = c0 (1 + g) with every term of g of positive degree
        let g = self
            .scale(&inv0)
            .combine(&Self::one(self.vars, self.cutoff), &rat(-1));
        let neg_g = g.scale(&rat(-1));
        let mut acc = Self::one(self.vars, self.cutoff);
        let mut power = Self::one(self.vars, self.cutoff);
        for _ in 0..self.cutoff {
            power = power.multiply(&neg_g);
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(acc.scale(&inv0))
    }

    /// `1 / (1 - x)` for a series `x` without constant term.
    pub fn geometric(x: &Self) -> Self {
        let one = Self::one(x.vars, x.cutoff);
        (&one - x).inverse().expect("x has no constant term")
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.vars, self.cutoff);
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Coefficient of `t^k`, as a series without `t`.
    pub fn t_slice(&self, k: usize) -> Self {
        let vars = SeriesVars {
            with_t: false,
            ..self.vars
        };
        Self::from_coefficients(
            vars,
            self.cutoff,
            self.coeffs
                .iter()
                .filter(|(key, _)| key.t == k)
                .map(|(key, c)| (key.degree.clone(), 0, c.clone())),
        )
    }

    /// Substitutes `t = 1`.
    pub fn at_t_one(&self) -> Self {
        let vars = SeriesVars {
            with_t: false,
            ..self.vars
        };
        Self::from_coefficients(
            vars,
            self.cutoff,
            self.coeffs
                .iter()
                .map(|(k, c)| (k.degree.clone(), 0, c.clone())),
        )
    }

    pub fn max_t_power(&self) -> usize {
        self.coeffs.keys().map(|k| k.t).max().unwrap_or(0)
    }

    /// Sets all variables equal to one variable `u` (and `t = 1`).
    pub fn by_total_degree(&self) -> BTreeMap<usize, Rational> {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, c) in &self.coeffs {
            *out.entry(k.degree.total()).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// The homogeneous part of total `u,v`-degree `total`.
    pub fn homogeneous_part(&self, total: usize) -> Self {
        Self {
            vars: self.vars,
            cutoff: self.cutoff,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.degree.total() == total)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Entries whose coefficient is not an integer.
    pub fn non_integral_terms(&self) -> Vec<(SeriesKey, Rational)> {
        self.coeffs
            .iter()
            .filter(|(_, c)| !c.is_integer())
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect()
    }

    /// True iff every coefficient is a non-negative integer.
    pub fn is_dimension_like(&self) -> bool {
        self.coeffs
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn coefficient_table(&self) -> Vec<CoefficientRow> {
        self.coeffs
            .iter()
            .map(|(k, c)| CoefficientRow {
                degree: k.degree.0.clone(),
                t_power: self.vars.with_t.then_some(k.t),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect()
    }

    fn render_key(&self, k: &SeriesKey) -> String {
        let mut parts = Vec::new();
        if k.t > 0 {
            parts.push(if k.t == 1 {
                "t".to_string()
            } else {
                format!("t^{}", k.t)
            });
        }
        let single_u = self.vars.m == 1;
        let single_v = self.vars.n == 1;
        for (l, &e) in k.degree.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = if l < self.vars.m {
                if single_u {
                    "u".to_string()
                } else {
                    format!("u{}", l + 1)
                }
            } else if single_v {
                "v".to_string()
            } else {
                format!("v{}", l - self.vars.m + 1)
            };
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.combine(rhs, &rat(1))
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.combine(rhs, &rat(-1))
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.multiply(rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&rat(-1))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 + O({})", self.cutoff + 1);
        }
        let mut keys: Vec<_> = self.coeffs.iter().collect();
        keys.sort_by(|(a, _), (b, _)| {
            (a.degree.total(), a.t, std::cmp::Reverse(&a.degree)).cmp(&(
                b.degree.total(),
                b.t,
                std::cmp::Reverse(&b.degree),
            ))
        });
        for (i, (k, c)) in keys.into_iter().enumerate() {
            let (sign, abs) = sign_prefix(c, i == 0);
            let body = self.render_key(k);
            write!(f, "{sign}")?;
            if body == "1" {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{}*{body}", format_rational(&abs))?;
            }
        }
        write!(f, " + O({})", self.cutoff + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

fn plain(m: usize, n: usize) -> SeriesVars {
    SeriesVars {
        m,
        n,
        with_t: false,
    }
}

fn one_plus(x: &TruncatedSeries) -> TruncatedSeries {
    &TruncatedSeries::one(x.vars, x.cutoff) + x
}

fn product(
    factors: impl IntoIterator<Item = TruncatedSeries>,
    vars: SeriesVars,
    cutoff: usize,
) -> TruncatedSeries {
    factors
        .into_iter()
        .fold(TruncatedSeries::one(vars, cutoff), |acc, f| {
            acc.multiply(&f)
        })
}

/// `Π(1+v_j)/Π(1-u_i) · Π(1+t u_i)/Π(1-t v_j)`.
pub fn omega_series(m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    let vars = SeriesVars { m, n, with_t: true };
    let us = (0..m).map(|i| TruncatedSeries::u(vars, cutoff, i, 0));
    let vs = (0..n).map(|j| TruncatedSeries::v(vars, cutoff, j, 0));
    let tus = (0..m).map(|i| TruncatedSeries::u(vars, cutoff, i, 1));
    let tvs = (0..n).map(|j| TruncatedSeries::v(vars, cutoff, j, 1));
    let factors = vs
        .map(|v| one_plus(&v))
        .chain(us.map(|u| TruncatedSeries::geometric(&u)))
        .chain(tus.map(|x| one_plus(&x)))
        .chain(tvs.map(|x| TruncatedSeries::geometric(&x)))
        .collect::<Vec<_>>();
    product(factors, vars, cutoff)
}

/// `h_{Ω^p}`, the `t^p` slice of `omega_series`.
pub fn form_degree_series(m: usize, n: usize, p: usize, cutoff: usize) -> TruncatedSeries {
    omega_series(m, n, cutoff).t_slice(p)
}

/// `Π(1+u_i)/(1-u_i) · Π(1+v_j)/(1-v_j)`.
pub fn p_series(m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    let vars = plain(m, n);
    let vars_iter = (0..m)
        .map(|i| TruncatedSeries::u(vars, cutoff, i, 0))
        .chain((0..n).map(|j| TruncatedSeries::v(vars, cutoff, j, 0)));
    let factors: Vec<_> = vars_iter
        .map(|x| one_plus(&x).multiply(&TruncatedSeries::geometric(&x)))
        .collect();
    product(factors, vars, cutoff)
}

/// `Σ u_i + Σ v_j`.
pub fn variable_sum(m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    let vars = plain(m, n);
    (0..m)
        .map(|i| TruncatedSeries::u(vars, cutoff, i, 0))
        .chain((0..n).map(|j| TruncatedSeries::v(vars, cutoff, j, 0)))
        .fold(TruncatedSeries::zero(vars, cutoff), |acc, x| &acc + &x)
}

/// `Σ u_i/(1-u_i)` and `Σ v_j/(1+v_j)`.
fn middle_sums(m: usize, n: usize, cutoff: usize) -> (TruncatedSeries, TruncatedSeries) {
    let vars = plain(m, n);
    let mut su = TruncatedSeries::zero(vars, cutoff);
    for i in 0..m {
        let u = TruncatedSeries::u(vars, cutoff, i, 0);
        su = &su + &u.multiply(&TruncatedSeries::geometric(&u));
    }
    let mut sv = TruncatedSeries::zero(vars, cutoff);
    for j in 0..n {
        let v = TruncatedSeries::v(vars, cutoff, j, 0);
        sv = &sv + &v.multiply(&TruncatedSeries::geometric(&-&v));
    }
    (su, sv)
}

/// `h_{Ω^p_ex}` by the recursion `h_{Ω^1_ex} = h_{Ω^0} - 1`,
/// `h_{Ω^p_ex} = h_{Ω^{p-1}} - h_{Ω^{p-1}_ex}`.
pub fn exact_form_series(m: usize, n: usize, p: usize, cutoff: usize) -> Result<TruncatedSeries> {
    if p == 0 {
        return Err(LcsError::InvalidArgument(
            "exact forms start in form degree 1".into(),
        ));
    }
    let omega = omega_series(m, n, cutoff);
    let mut ex = &omega.t_slice(0) - &TruncatedSeries::one(plain(m, n), cutoff);
    for q in 2..=p {
        ex = &omega.t_slice(q - 1) - &ex;
    }
    Ok(ex)
}

/// The same series through the alternating sum
/// `Σ_{j<p} (-1)^{p-1-j} h_{Ω^j} + (-1)^p`.
pub fn exact_form_series_alternating(
    m: usize,
    n: usize,
    p: usize,
    cutoff: usize,
) -> Result<TruncatedSeries> {
    if p == 0 {
        return Err(LcsError::InvalidArgument(
            "exact forms start in form degree 1".into(),
        ));
    }
    let omega = omega_series(m, n, cutoff);
    let sign = |e: usize| if e.is_multiple_of(2) { rat(1) } else { rat(-1) };
    let mut acc = TruncatedSeries::constant(plain(m, n), cutoff, sign(p));
    for j in 0..p {
        acc = &acc + &omega.t_slice(j).scale(&sign(p - 1 - j));
    }
    Ok(acc)
}

/// `½(P + 1)`.
pub fn even_forms_series(m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    let p = p_series(m, n, cutoff);
    one_plus(&p).scale(&ratio(1, 2))
}

/// Hilbert series of `B̄_1`, `B_2`, `B_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub bbar1: TruncatedSeries,
    pub b2: TruncatedSeries,
    pub b3: TruncatedSeries,
}

/// `½((Σu + Σv)(P + 1) - (P - 1))`.
pub fn b3_closed_form(m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    let p = p_series(m, n, cutoff);
    let s = variable_sum(m, n, cutoff);
    let one = TruncatedSeries::one(plain(m, n), cutoff);
    (&s.multiply(&(&p + &one)) - &(&p - &one)).scale(&ratio(1, 2))
}

/// `h_{B_3}` with every variable set to one variable `z`, to total degree `cutoff`:
/// `½(N z (P + 1) - (P - 1))` with `P = ((1+z)/(1-z))^N`, `N = m + n`.
pub fn b3_collapsed(m: usize, n: usize, cutoff: usize) -> TruncatedSeries {
    let vars = plain(1, 0);
    let z = TruncatedSeries::u(vars, cutoff, 0, 0);
    let one = TruncatedSeries::one(vars, cutoff);
    let p = one_plus(&z)
        .multiply(&TruncatedSeries::geometric(&z))
        .pow(m + n);
    let s = z.scale(&rat((m + n) as i64));
    (&s.multiply(&(&p + &one)) - &(&p - &one)).scale(&ratio(1, 2))
}

/// The three formulas evaluated literally, with the middle terms
/// `u_i/(2(1-u_i))` and `v_j/(2(1+v_j))`.
pub fn printed_closed_forms(m: usize, n: usize, cutoff: usize) -> ClosedForms {
    let p = p_series(m, n, cutoff);
    let (su, sv) = middle_sums(m, n, cutoff);
    let mid = (&su + &sv).scale(&ratio(1, 2));
    let vars = plain(m, n);
    let quarter = ratio(1, 4);
    let bbar1 = (&(&p + &mid) + &TruncatedSeries::constant(vars, cutoff, rat(3))).scale(&quarter);
    let b2 = (&(&p - &mid) - &TruncatedSeries::one(vars, cutoff)).scale(&quarter);
    ClosedForms {
        bbar1,
        b2,
        b3: b3_closed_form(m, n, cutoff),
    }
}

/// `B_2 = ¼(P - 1) - ½(Σ u_i/(1-u_i) + Σ v_j/(1+v_j))`, `B̄_1 = ½(P+1) - B_2`,
/// and `B_3` as printed.
pub fn validated_closed_forms(m: usize, n: usize, cutoff: usize) -> ClosedForms {
    let p = p_series(m, n, cutoff);
    let (su, sv) = middle_sums(m, n, cutoff);
    let vars = plain(m, n);
    let b2 = &(&p - &TruncatedSeries::one(vars, cutoff)).scale(&ratio(1, 4))
        - &(&su + &sv).scale(&ratio(1, 2));
    let bbar1 = &even_forms_series(m, n, cutoff) - &b2;
    ClosedForms {
        bbar1,
        b2,
        b3: b3_closed_form(m, n, cutoff),
    }
}

/// `B_2 = ⊕_{p ≥ 2 even} Ω^p_ex` and `B̄_1 = Ω^{ev} / B_2`, computed from the
/// exact-form recursion.
pub fn recursion_pipeline(m: usize, n: usize, cutoff: usize) -> (TruncatedSeries, TruncatedSeries) {
    let vars = plain(m, n);
    let mut b2 = TruncatedSeries::zero(vars, cutoff);
    // Ω^p[d] = 0 once p exceeds the total degree
    for p in (2..=cutoff).step_by(2) {
        b2 = &b2 + &exact_form_series(m, n, p, cutoff).expect("p >= 2");
    }
    let bbar1 = &even_forms_series(m, n, cutoff) - &b2;
    (bbar1, b2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[usize]) -> MultiDegree {
        MultiDegree(v.to_vec())
    }

    fn totals(s: &TruncatedSeries) -> Vec<Rational> {
        let t = s.by_total_degree();
        (0..=s.cutoff())
            .map(|d| t.get(&d).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn omega_examples() {
        let o = omega_series(1, 0, 6);
        assert_eq!(o.coefficient(&md(&[0]), 0), rat(1));
        for d in 1..=6 {
            assert_eq!(o.coefficient(&md(&[d]), 0), rat(1));
            assert_eq!(o.coefficient(&md(&[d]), 1), rat(1));
            assert_eq!(o.coefficient(&md(&[d]), 2), rat(0));
        }
        let o = omega_series(0, 1, 6);
        for k in 0..=5 {
            assert_eq!(o.coefficient(&md(&[k]), k), rat(1));
            assert_eq!(o.coefficient(&md(&[k + 1]), k), rat(1));
            assert_eq!(o.coefficient(&md(&[k + 1]), k + 1), rat(1));
        }
        assert_eq!(o.coefficient(&md(&[3]), 1), rat(0));
        assert!(o.max_t_power() <= 6);
    }

    #[test]
    fn p_series_examples() {
        assert_eq!(totals(&p_series(1, 0, 5)), ints(&[1, 2, 2, 2, 2, 2]));
        assert_eq!(p_series(0, 0, 5), TruncatedSeries::one(plain(0, 0), 5));
        let p = p_series(2, 0, 4);
        assert_eq!(
            p.coefficient(&md(&[3, 1]), 0),
            p.coefficient(&md(&[1, 3]), 0)
        );
        assert_eq!(p.coefficient(&md(&[1, 1]), 0), rat(4));
    }

    #[test]
    fn exact_form_examples() {
        let e1 = exact_form_series(1, 0, 1, 6).unwrap();
        assert_eq!(totals(&e1), ints(&[0, 1, 1, 1, 1, 1, 1]));
        assert!(exact_form_series(1, 0, 2, 6).unwrap().is_zero());
        let e2 = exact_form_series(2, 0, 2, 6).unwrap();
        for d in MultiDegree::compositions(2, 4)
            .into_iter()
            .chain(MultiDegree::compositions(2, 5))
        {
            let expected = i64::from(d.0[0] >= 1 && d.0[1] >= 1);
            assert_eq!(e2.coefficient(&d, 0), rat(expected), "{d}");
        }
        assert!(exact_form_series(1, 0, 0, 3).is_err());
    }

    #[test]
    fn alternating_sum_matches_recursion() {
        for (m, n) in [(1, 0), (2, 0), (0, 2), (1, 1), (2, 1)] {
            for p in 1..=6 {
                assert_eq!(
                    exact_form_series(m, n, p, 6).unwrap(),
                    exact_form_series_alternating(m, n, p, 6).unwrap(),
                    "({m}|{n}) p={p}"
                );
            }
        }
    }

    #[test]
    fn even_forms_examples() {
        assert_eq!(
            totals(&even_forms_series(1, 0, 5)),
            ints(&[1, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            even_forms_series(0, 0, 5),
            TruncatedSeries::one(plain(0, 0), 5)
        );
        for (m, n) in [(1, 0), (2, 0), (1, 1), (0, 2)] {
            let o = omega_series(m, n, 5);
            let mut ev = TruncatedSeries::zero(plain(m, n), 5);
            for p in (0..=o.max_t_power()).step_by(2) {
                ev = &ev + &o.t_slice(p);
            }
            assert_eq!(ev, even_forms_series(m, n, 5), "({m}|{n})");
        }
    }

    #[test]
    fn printed_examples() {
        let b3 = printed_closed_forms(2, 0, 6).b3;
        assert_eq!(totals(&b3), ints(&[0, 0, 0, 2, 4, 6, 8]));
        let b2 = printed_closed_forms(1, 0, 5).b2;
        assert_eq!(b2.coefficient(&md(&[1]), 0), ratio(3, 8));
        assert!(!b2.non_integral_terms().is_empty());
        assert!(printed_closed_forms(1, 0, 6).b3.is_zero());
    }

    #[test]
    fn validated_examples() {
        assert!(validated_closed_forms(1, 0, 6).b2.is_zero());
        assert_eq!(
            totals(&validated_closed_forms(0, 1, 6).b2),
            ints(&[0, 0, 1, 0, 1, 0, 1])
        );
        assert_eq!(
            totals(&validated_closed_forms(2, 0, 4).bbar1),
            ints(&[1, 2, 3, 4, 5])
        );
        for (m, n) in [(1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (1, 1), (2, 1)] {
            let v = validated_closed_forms(m, n, 6);
            assert!(
                v.b2.is_dimension_like() && v.bbar1.is_dimension_like() && v.b3.is_dimension_like()
            );
            let (bbar1, b2) = recursion_pipeline(m, n, 6);
            assert_eq!(b2, v.b2, "({m}|{n})");
            assert_eq!(bbar1, v.bbar1, "({m}|{n})");
        }
    }

    #[test]
    fn collapsed_b3_matches_multigraded() {
        for (m, n) in [(1, 0), (2, 0), (1, 1), (2, 1)] {
            let full = b3_closed_form(m, n, 6).by_total_degree();
            let z = b3_collapsed(m, n, 6).by_total_degree();
            assert_eq!(full, z, "({m}|{n})");
        }
    }

    #[test]
    fn inverse_of_geometric() {
        let vars = plain(1, 1);
        let u = TruncatedSeries::u(vars, 6, 0, 0);
        let g = TruncatedSeries::geometric(&u);
        assert_eq!(totals(&g), ints(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(
            g.multiply(&(&TruncatedSeries::one(vars, 6) - &u)),
            TruncatedSeries::one(vars, 6)
        );
        assert!(u.inverse().is_err());
    }

    #[test]
    fn display() {
        let vars = plain(1, 0);
        let u = TruncatedSeries::u(vars, 3, 0, 0);
        assert_eq!(
            TruncatedSeries::geometric(&u).to_string(),
            "1 + u + u^2 + u^3 + O(4)"
        );
        assert_eq!(TruncatedSeries::zero(vars, 2).to_string(), "0 + O(3)");
    }
}
