//! Sparse multivariate polynomials with exact complex-rational coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{ExactError, ExactScalar, VarId, DEFAULT_TERM_CAP};

/// A power product of variables. Exponents are always >= 1; the empty map is
/// the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(BTreeMap<VarId, u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, exp: u32) -> Self {
        let mut m = BTreeMap::new();
        if exp > 0 {
            m.insert(v, exp);
        }
        Self(m)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut m = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Self(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, v: &VarId) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&VarId, &u32)> {
        self.0.iter()
    }

    pub fn vars(&self) -> impl Iterator<Item = &VarId> {
        self.0.keys()
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut m = self.0.clone();
        for (v, e) in &rhs.0 {
            *m.entry(*v).or_insert(0) += e;
        }
        Self(m)
    }

    /// Lowers the exponent of `v` by one; `None` if `v` is absent.
    pub fn try_lower(&self, v: &VarId) -> Option<Self> {
        let e = self.exponent(v);
        if e == 0 {
            return None;
        }
        let mut m = self.0.clone();
        if e == 1 {
            m.remove(v);
        } else {
            m.insert(*v, e - 1);
        }
        Some(Self(m))
    }

    /// Toggles the conjugation flag of every variable.
    pub fn conj(&self) -> Self {
        Self(self.0.iter().map(|(v, e)| (v.conj(), *e)).collect())
    }
}

impl Ord for Monomial {
    /// Graded order: lower total degree first, then lexicographic on the
    /// exponent vector in canonical [`VarId`] order (a higher power of the
    /// earliest differing variable sorts first).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.0.iter();
        let mut b = other.0.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    // The monomial owning the earlier variable has a positive
                    // exponent where the other has zero: it sorts first.
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(&VarId, &u32)> = self.0.iter().collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(VarId, u32)>::deserialize(d)?;
        Ok(Self::from_pairs(pairs))
    }
}

/// A sparse polynomial: canonical map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyFunction {
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl PolyFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: VarId) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), ExactScalar::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, ExactScalar)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m`, removing the entry if the result cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> ExactScalar {
        self.terms.get(m).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> ExactScalar {
        self.coefficient(&Monomial::one())
    }

    /// All variables appearing with nonzero exponent.
    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars().copied()).collect()
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Product with an explicit term-pair cap.
    pub fn checked_mul_cap(&self, rhs: &Self, cap: u64) -> Result<Self, ExactError> {
        let pairs = self.terms.len() as u64 * rhs.terms.len() as u64;
        if pairs > cap {
            return Err(ExactError::CapExceeded(pairs, cap));
        }
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Product with the default cap of [`DEFAULT_TERM_CAP`] term pairs.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.checked_mul_cap(rhs, DEFAULT_TERM_CAP)
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: &VarId) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let lowered = m.try_lower(v).expect("exponent checked above");
            out.add_term(lowered, c.clone() * ExactScalar::from_int(e as i64));
        }
        out
    }

    /// Formal complex conjugate: conjugates coefficients and toggles the
    /// conjugation flag on every variable.
    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.conj(), c.conj())).collect(),
        }
    }

    /// Evaluates at a point. Every variable present in the polynomial must be
    /// assigned.
    pub fn eval(&self, point: &BTreeMap<VarId, ExactScalar>) -> Result<ExactScalar, ExactError> {
        let mut acc = ExactScalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.exponents() {
                let value = point.get(v).ok_or(ExactError::UnassignedVariable(*v))?;
                for _ in 0..*e {
                    term = &term * value;
                }
            }
            acc += term;
        }
        Ok(acc)
    }
}

impl Add for &PolyFunction {
    type Output = PolyFunction;
    fn add(self, rhs: &PolyFunction) -> PolyFunction {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PolyFunction {
    type Output = PolyFunction;
    fn sub(self, rhs: &PolyFunction) -> PolyFunction {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &PolyFunction {
    type Output = PolyFunction;
    fn neg(self) -> PolyFunction {
        PolyFunction {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

/// Panics past the default term cap; library paths use [`PolyFunction::checked_mul`].
impl Mul for &PolyFunction {
    type Output = PolyFunction;
    fn mul(self, rhs: &PolyFunction) -> PolyFunction {
        self.checked_mul(rhs).expect("term cap exceeded")
    }
}

fn fmt_coeff(c: &ExactScalar, mon_is_one: bool) -> String {
    if mon_is_one {
        return format!("{c}");
    }
    if c.is_one() {
        return String::new();
    }
    if (-c.clone()).is_one() {
        return "-".to_string();
    }
    let s = c.to_string();
    if c.is_real() || c.re().is_zero() {
        format!("{s} ")
    } else {
        format!("({s}) ")
    }
}

impl fmt::Display for PolyFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let coeff = fmt_coeff(c, m.is_one());
                if m.is_one() {
                    coeff
                } else {
                    format!("{coeff}{m}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl Serialize for PolyFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(&Monomial, &ExactScalar)> = self.terms.iter().collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(Monomial, ExactScalar)>::deserialize(d)?;
        Ok(Self::from_terms(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> VarId {
        VarId::u(1, 1, 1)
    }

    fn y() -> VarId {
        VarId::v(1, 1, 1)
    }

    #[test]
    fn difference_of_squares_expands() {
        let p = &(&PolyFunction::var(x()) - &PolyFunction::var(y()))
            * &(&PolyFunction::var(x()) + &PolyFunction::var(y()));
        let expected = PolyFunction::from_terms([
            (Monomial::var_pow(x(), 2), ExactScalar::one()),
            (Monomial::var_pow(y(), 2), ExactScalar::from_int(-1)),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn eval_covers_all_terms() {
        // x^2 - y^2 at (x, y) = (3, 2) is 5.
        let p = PolyFunction::from_terms([
            (Monomial::var_pow(x(), 2), ExactScalar::one()),
            (Monomial::var_pow(y(), 2), ExactScalar::from_int(-1)),
        ]);
        let mut point = BTreeMap::new();
        point.insert(x(), ExactScalar::from_int(3));
        point.insert(y(), ExactScalar::from_int(2));
        assert_eq!(p.eval(&point).unwrap(), ExactScalar::from_int(5));
    }

    #[test]
    fn eval_of_zero_polynomial_is_zero_everywhere() {
        let p = PolyFunction::zero();
        assert_eq!(p.eval(&BTreeMap::new()).unwrap(), ExactScalar::zero());
    }

    #[test]
    fn eval_rejects_unassigned_variables() {
        let p = PolyFunction::var(x());
        assert!(matches!(
            p.eval(&BTreeMap::new()),
            Err(ExactError::UnassignedVariable(_))
        ));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &PolyFunction::var(x()) - &PolyFunction::var(x());
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
    }

    #[test]
    fn derivative_drops_constants() {
        let p = PolyFunction::from_terms([
            (Monomial::var_pow(x(), 3), ExactScalar::one()),
            (Monomial::one(), ExactScalar::from_int(7)),
        ]);
        let d = p.derivative(&x());
        let expected =
            PolyFunction::from_terms([(Monomial::var_pow(x(), 2), ExactScalar::from_int(3))]);
        assert_eq!(d, expected);
    }

    #[test]
    fn monomial_order_is_graded() {
        let one = Monomial::one();
        let mx = Monomial::var(x());
        let my = Monomial::var(y());
        let mxx = Monomial::var_pow(x(), 2);
        let mxy = Monomial::from_pairs([(x(), 1), (y(), 1)]);
        assert!(one < mx);
        assert!(mx < my);
        assert!(my < mxx);
        assert!(mxx < mxy);
    }

    #[test]
    fn conjugation_is_involutive_on_polynomials() {
        let p = PolyFunction::from_terms([
            (Monomial::var(x()), ExactScalar::i()),
            (Monomial::var_pow(y(), 2), ExactScalar::from_ratio(1, 2)),
        ]);
        assert_eq!(p.conj().conj(), p);
        assert_ne!(p.conj(), p);
    }

    #[test]
    fn term_cap_is_enforced() {
        let p = PolyFunction::from_terms([
            (Monomial::var(x()), ExactScalar::one()),
            (Monomial::var(y()), ExactScalar::one()),
        ]);
        assert!(matches!(
            p.checked_mul_cap(&p, 3),
            Err(ExactError::CapExceeded(4, 3))
        ));
    }
}
