//! Sparse multivariate polynomials over an exact integer scalar.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector in lexicographic
//! order, so iteration and serialization are deterministic. Coefficients are
//! any [`Coeff`]; the crate-root aliases pin `BigInt`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::num::{binomial_row, Coeff};

/// A fixed-width tuple of natural-number exponents.
///
/// Doubles as a monomial exponent and as a poset element. `Ord` is the
/// lexicographic order used for storage; the componentwise order of the
/// posets is [`ExpVec::leq`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(entries: Vec<u32>) -> Self {
        ExpVec(entries)
    }

    pub fn zeros(width: usize) -> Self {
        ExpVec(vec![0; width])
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Componentwise comparison; the partial order on poset elements.
    pub fn leq(&self, other: &ExpVec) -> bool {
        assert_eq!(self.width(), other.width(), "width mismatch in comparison");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn with_entry(&self, i: usize, value: u32) -> Self {
        let mut v = self.0.clone();
        v[i] = value;
        ExpVec(v)
    }

    pub fn bumped(&self, i: usize, delta: u32) -> Self {
        let mut v = self.0.clone();
        v[i] += delta;
        ExpVec(v)
    }

    /// Predecessor in direction `i`; `None` when the entry is already zero.
    pub fn lowered(&self, i: usize) -> Option<Self> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(ExpVec(v))
    }

    pub fn sum(&self, other: &ExpVec) -> Self {
        assert_eq!(self.width(), other.width(), "width mismatch in sum");
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pad(&self, width: usize) -> Self {
        assert!(width >= self.width());
        let mut v = self.0.clone();
        v.resize(width, 0);
        ExpVec(v)
    }

    /// Drops trailing zeros but keeps at least one entry.
    pub fn trimmed(&self) -> Vec<u32> {
        let mut end = self.0.len();
        while end > 1 && self.0[end - 1] == 0 {
            end -= 1;
        }
        self.0[..end].to_vec()
    }

    /// Compact serialization key, e.g. `"2,1,1,1,1"` (trailing zeros trimmed).
    pub fn key_string(&self) -> String {
        let t = self.trimmed();
        if t.is_empty() {
            return "0".to_string();
        }
        t.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Smallest width that still holds every nonzero entry.
    pub fn support_width(&self) -> usize {
        self.0
            .iter()
            .rposition(|&e| e > 0)
            .map(|i| i + 1)
            .unwrap_or(0)
    }

    pub fn truncated_to(&self, width: usize) -> Self {
        assert!(
            self.support_width() <= width,
            "nonzero entry beyond width {width}"
        );
        ExpVec(self.0[..width].to_vec())
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key_string())
    }
}

/// A finitely supported map from exponent vectors to nonzero coefficients.
///
/// Canonical form: no stored zero coefficient, every key has the polynomial's
/// width.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly<C> {
    width: usize,
    terms: BTreeMap<ExpVec, C>,
}

fn add_term<C: Coeff>(map: &mut BTreeMap<ExpVec, C>, exp: ExpVec, coeff: C) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(exp) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().clone() + coeff;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl<C: Coeff> SparsePoly<C> {
    pub fn zero(width: usize) -> Self {
        SparsePoly {
            width,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(width: usize) -> Self {
        Self::monomial(ExpVec::zeros(width), C::one())
    }

    pub fn constant(width: usize, c: C) -> Self {
        Self::monomial(ExpVec::zeros(width), c)
    }

    pub fn monomial(exp: ExpVec, coeff: C) -> Self {
        let width = exp.width();
        let mut terms = BTreeMap::new();
        add_term(&mut terms, exp, coeff);
        SparsePoly { width, terms }
    }

    /// The variable `x_i` (1-based).
    pub fn variable(width: usize, i: usize) -> Result<Self> {
        if i < 1 || i > width {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: width,
            });
        }
        Ok(Self::monomial(
            ExpVec::zeros(width).with_entry(i - 1, 1),
            C::one(),
        ))
    }

    pub fn from_terms(width: usize, terms: impl IntoIterator<Item = (ExpVec, C)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if e.width() != width {
                return Err(Error::WidthMismatch {
                    left: width,
                    right: e.width(),
                });
            }
            add_term(&mut map, e, c);
        }
        Ok(SparsePoly { width, terms: map })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExpVec) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    /// The set of exponent vectors with nonzero coefficient, in lex order.
    pub fn support(&self) -> Vec<ExpVec> {
        self.terms.keys().cloned().collect()
    }

    fn check_width(&self, other: &Self) -> Result<()> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: other.width,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_width(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e.clone(), c.clone());
        }
        Ok(SparsePoly {
            width: self.width,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            width: self.width,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_width(other)?;
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                add_term(&mut terms, a.sum(b), ca.clone() * cb.clone());
            }
        }
        Ok(SparsePoly {
            width: self.width,
            terms,
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.width);
        }
        SparsePoly {
            width: self.width,
            terms: self
                .terms
                .iter()
                .map(|(e, cc)| (e.clone(), cc.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one(self.width);
        for _ in 0..e {
            out = out.mul(self).expect("widths agree");
        }
        out
    }

    /// Max total degree over the support; undefined for the zero polynomial.
    pub fn degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(|e| e.total_degree())
            .max()
            .ok_or(Error::UndefinedDegree)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(|e| e.total_degree())
            .min()
            .ok_or(Error::UndefinedDegree)
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.min_degree(), self.degree()) {
            (Ok(lo), Ok(hi)) => lo == hi,
            _ => true,
        }
    }

    /// The homogeneous part of minimal total degree (zero stays zero).
    pub fn lowest_degree_component(&self) -> Self {
        let Ok(lo) = self.min_degree() else {
            return Self::zero(self.width);
        };
        SparsePoly {
            width: self.width,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() == lo)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Transposes the exponents of variables `i` and `j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut v = e.entries().to_vec();
            v.swap(i, j);
            terms.insert(ExpVec::new(v), c.clone());
        }
        SparsePoly {
            width: self.width,
            terms,
        }
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})` for 1-based `i`.
    ///
    /// The numerator is antisymmetric in `x_i, x_{i+1}`, so synthetic
    /// division is exact; a nonzero remainder is a bug, not an input error.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        if i < 1 || i >= self.width {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.width.saturating_sub(1),
            });
        }
        let vi = i - 1;
        let vj = i;
        let numerator = self.sub(&self.swap_vars(vi, vj))?;
        if numerator.is_zero() {
            return Ok(Self::zero(self.width));
        }

        // View the numerator as univariate in x_i and divide by (x_i - x_{i+1})
        // with Horner's scheme; multiplying by the "constant" x_{i+1} is an
        // exponent bump.
        let top = numerator
            .terms
            .keys()
            .map(|e| e.get(vi) as usize)
            .max()
            .unwrap();
        let mut buckets = vec![Self::zero(self.width); top + 1];
        for (e, c) in &numerator.terms {
            let k = e.get(vi) as usize;
            add_term(&mut buckets[k].terms, e.with_entry(vi, 0), c.clone());
        }

        let shift_next = |p: &Self| -> Self {
            SparsePoly {
                width: p.width,
                terms: p
                    .terms
                    .iter()
                    .map(|(e, c)| (e.bumped(vj, 1), c.clone()))
                    .collect(),
            }
        };

        let mut quotient = vec![Self::zero(self.width); top];
        quotient[top - 1] = buckets[top].clone();
        for k in (1..top).rev() {
            quotient[k - 1] = buckets[k].add(&shift_next(&quotient[k]))?;
        }
        let remainder = buckets[0].add(&shift_next(&quotient[0]))?;
        assert!(
            remainder.is_zero(),
            "inexact division in divided difference"
        );

        let mut terms = BTreeMap::new();
        for (k, q) in quotient.iter().enumerate() {
            for (e, c) in &q.terms {
                add_term(&mut terms, e.with_entry(vi, k as u32), c.clone());
            }
        }
        Ok(SparsePoly {
            width: self.width,
            terms,
        })
    }

    /// Isobaric divided difference `f -> ∂_i((1 - x_{i+1}) f)`; idempotent.
    pub fn isobaric_divided_difference(&self, i: usize) -> Result<Self> {
        if i < 1 || i >= self.width {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.width.saturating_sub(1),
            });
        }
        let one_minus_next = Self::one(self.width).sub(&Self::variable(self.width, i + 1)?)?;
        one_minus_next.mul(self)?.divided_difference(i)
    }

    /// Substitutes `1 - u_i` for every variable and expands; an involution.
    pub fn substitute_one_minus(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            let mut partial = vec![(ExpVec::zeros(self.width), c.clone())];
            for idx in 0..self.width {
                let e = a.get(idx);
                if e == 0 {
                    continue;
                }
                let row = binomial_row::<C>(e as usize);
                let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
                for (exp, cc) in &partial {
                    for (k, b) in row.iter().enumerate() {
                        let mut coeff = cc.clone() * b.clone();
                        if k % 2 == 1 {
                            coeff = -coeff;
                        }
                        next.push((exp.with_entry(idx, k as u32), coeff));
                    }
                }
                partial = next;
            }
            for (exp, coeff) in partial {
                add_term(&mut terms, exp, coeff);
            }
        }
        SparsePoly {
            width: self.width,
            terms,
        }
    }

    /// Drops every term with some exponent above `d`.
    pub fn truncate(&self, d: usize) -> TruncatedPoly<C> {
        TruncatedPoly::new(self, d)
    }

    pub fn pad_width(&self, width: usize) -> Self {
        assert!(width >= self.width);
        SparsePoly {
            width,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.pad(width), c.clone()))
                .collect(),
        }
    }

    /// Smallest width that still holds the whole support.
    pub fn support_width(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.support_width())
            .max()
            .unwrap_or(0)
    }

    /// Re-keys to a smaller width; every term must fit.
    pub fn truncated_to_width(&self, width: usize) -> Self {
        SparsePoly {
            width,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.truncated_to(width), c.clone()))
                .collect(),
        }
    }

    /// Equality after padding both sides to a common width.
    pub fn eq_padded(&self, other: &Self) -> bool {
        let w = self.width.max(other.width);
        self.pad_width(w) == other.pad_width(w)
    }
}

impl<C: Coeff> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mag = c.abs();
            if e.total_degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "x^{e}")?;
            } else {
                write!(f, "{mag}*x^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    width: usize,
    terms: Vec<TermRepr>,
}

impl<C: Coeff> Serialize for SparsePoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // Coefficients travel as decimal strings so consumers never need
        // native big integers.
        let repr = PolyRepr {
            width: self.width,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: e.entries().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for SparsePoly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for t in repr.terms {
            if t.exp.len() != repr.width {
                return Err(D::Error::custom(format!(
                    "exponent width {} does not match polynomial width {}",
                    t.exp.len(),
                    repr.width
                )));
            }
            let coeff = C::from_str_radix(&t.coeff, 10)
                .map_err(|_| D::Error::custom(format!("invalid coefficient {:?}", t.coeff)))?;
            if coeff.is_zero() {
                return Err(D::Error::custom("zero coefficient in canonical form"));
            }
            if terms.insert(ExpVec::new(t.exp), coeff).is_some() {
                return Err(D::Error::custom("duplicate exponent vector"));
            }
        }
        Ok(SparsePoly {
            width: repr.width,
            terms,
        })
    }
}

/// A polynomial in `Z[x_1..x_n]/(x_1^{d+1}, ..., x_n^{d+1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedPoly<C> {
    base: SparsePoly<C>,
    degree: usize,
}

impl<C: Coeff> TruncatedPoly<C> {
    pub fn new(f: &SparsePoly<C>, degree: usize) -> Self {
        let terms = f
            .terms
            .iter()
            .filter(|(e, _)| e.entries().iter().all(|&x| x as usize <= degree))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        TruncatedPoly {
            base: SparsePoly {
                width: f.width,
                terms,
            },
            degree,
        }
    }

    pub fn base(&self) -> &SparsePoly<C> {
        &self.base
    }

    pub fn truncation_degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.degree, other.degree, "truncation degrees differ");
        Ok(TruncatedPoly::new(&self.base.add(&other.base)?, self.degree))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.degree, other.degree, "truncation degrees differ");
        Ok(TruncatedPoly::new(&self.base.mul(&other.base)?, self.degree))
    }
}

/// Class of an `r`-dimensional linear subspace inside projective `d`-space,
/// written in the hyperplane variable `z`: the alternating binomial sum
/// `sum_i (-1)^i C(d-r, i) z^i`. Internally verified against the expanded
/// power `(1-z)^{d-r}` before being returned.
pub fn structure_sheaf_class<C: Coeff>(r: usize, d: usize) -> Result<SparsePoly<C>> {
    if r > d {
        return Err(Error::RangeError { r, d });
    }
    let k = d - r;
    let row = binomial_row::<C>(k);
    let mut sum = SparsePoly::zero(1);
    for (i, b) in row.iter().enumerate() {
        let mut coeff = b.clone();
        if i % 2 == 1 {
            coeff = -coeff;
        }
        sum = sum.add(&SparsePoly::monomial(ExpVec::new(vec![i as u32]), coeff))?;
    }
    let power = SparsePoly::<C>::one(1)
        .sub(&SparsePoly::variable(1, 1)?)?
        .pow(k);
    assert_eq!(sum, power, "binomial sum disagrees with expanded power");
    Ok(sum)
}

/// The same class in the shifted variable `u = 1 - z`, where it is the plain
/// monomial `u^{d-r}`; checked against the substitution of the z-form.
pub fn structure_sheaf_class_u<C: Coeff>(r: usize, d: usize) -> Result<SparsePoly<C>> {
    let z_form = structure_sheaf_class::<C>(r, d)?;
    let monomial = SparsePoly::monomial(ExpVec::new(vec![(d - r) as u32]), C::one());
    assert_eq!(z_form.substitute_one_minus(), monomial);
    Ok(monomial)
}
