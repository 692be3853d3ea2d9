//! Sparse integer Laurent polynomials in `a1, ..., an`.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`] under the graded
//! lexicographic order, so iteration, printing and coding are deterministic.
//! Zero coefficients are never stored, which makes equality structural.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A monomial `a1^e1 ... an^en` with integer exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn from_exponents(exps: Vec<i64>) -> Self {
        Monomial(exps)
    }

    /// `a_i^e`, with `i` 1-based.
    pub fn var(rank: usize, i: usize, e: i64) -> Self {
        assert!(i >= 1 && i <= rank, "variable a{i} out of range for rank {rank}");
        let mut exps = vec![0; rank];
        exps[i - 1] = e;
        Monomial(exps)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    /// Exponent of `a_i` (1-based).
    pub fn exponent(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn inverse(&self) -> Self {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i64) -> Self {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_rank(self.rank(), other.rank())?;
        Ok(self * other)
    }

    /// Indices (1-based) with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e != 0).map(|(i, _)| i + 1)
    }

    /// Keeps the factors `a_i^e_i` whose (1-based) index satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Monomial {
        Monomial(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &e)| if keep(i + 1) { e } else { 0 })
                .collect(),
        )
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        assert_eq!(self.rank(), rhs.rank(), "monomial rank mismatch");
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "a{}", i + 1)?;
            } else {
                write!(f, "a{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn check_rank(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}

/// An element of `Z[a1^±1, ..., an^±1]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, 1)
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(rank), c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let rank = m.rank();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { rank, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    /// The variable `a_i` (1-based).
    pub fn var(rank: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(rank, i, 1))
    }

    /// Sums the given terms; duplicate monomials are merged.
    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(rank);
        for (m, c) in terms {
            assert_eq!(m.rank(), rank, "monomial rank mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Returns `Some((m, c))` when the polynomial is a single term.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.iter().next().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by a unit monomial; this only relabels terms.
    pub fn shift(&self, m: &Monomial) -> Self {
        assert_eq!(m.rank(), self.rank, "monomial rank mismatch");
        if m.is_one() {
            return self.clone();
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, c)| (k * m, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `(g^delta - 1) / (g - 1)`: `1 + g + ... + g^(delta-1)` for `delta >= 0`
    /// and `-(g^delta + ... + g^-1)` for `delta < 0`.
    pub fn geometric_sum(g: &Monomial, delta: i64) -> Result<Self> {
        if g.is_one() {
            return Err(Error::TrivialBase);
        }
        let rank = g.rank();
        let mut p = Self::zero(rank);
        if delta >= 0 {
            for k in 0..delta {
                p.add_term(g.pow(k), BigInt::one());
            }
        } else {
            for k in delta..0 {
                p.add_term(g.pow(k), -BigInt::one());
            }
        }
        Ok(p)
    }

    /// Per-variable minimum exponent over all terms (0 for the zero polynomial).
    pub fn min_exponents(&self) -> Vec<i64> {
        let mut mins = vec![i64::MAX; self.rank];
        for m in self.terms.keys() {
            for (lo, &e) in mins.iter_mut().zip(m.exponents()) {
                *lo = (*lo).min(e);
            }
        }
        if self.terms.is_empty() {
            mins.iter_mut().for_each(|e| *e = 0);
        }
        mins
    }

    /// Exact quotient `q` with `q * d = self`.
    ///
    /// Both operands are shifted by units so that every variable has minimum
    /// exponent zero, then ordinary division by leading terms is run in the
    /// polynomial ring. Once `d` has no monomial factor, any Laurent quotient is
    /// already a polynomial, so the leading-term test decides divisibility.
    pub fn divide_exact(&self, d: &Self) -> Result<Self> {
        check_rank(self.rank, d.rank)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        let d_shift = Monomial::from_exponents(d.min_exponents()).inverse();
        let p_shift = Monomial::from_exponents(self.min_exponents()).inverse();
        let divisor = d.shift(&d_shift);
        let mut rem = self.shift(&p_shift);
        let (lm_d, lc_d) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut quot = Self::zero(self.rank);
        while let Some((lm, lc)) = rem.leading_term() {
            let qm = lm.exponents().iter().zip(lm_d.exponents()).map(|(a, b)| a - b);
            let qm: Vec<i64> = qm.collect();
            if qm.iter().any(|&e| e < 0) {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = lc.div_rem(&lc_d);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let qm = Monomial::from_exponents(qm);
            rem -= &divisor.shift(&qm).scale(&qc);
            quot.add_term(qm, qc);
        }
        // q' * d' = p'  with d' = d * ds, p' = p * ps  =>  q = q' * ds / ps
        Ok(quot.shift(&(&d_shift * &p_shift.inverse())))
    }

    /// Replaces every monomial by its inverse.
    pub fn involute(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.inverse(), c.clone())).collect(),
        }
    }

    /// Ring retraction sending `a_i -> 1` for every `i` not in `keep` (1-based).
    pub fn retract(&self, keep: &BTreeSet<usize>) -> Self {
        let mut p = Self::zero(self.rank);
        for (m, c) in &self.terms {
            p.add_term(m.restrict(|i| keep.contains(&i)), c.clone());
        }
        p
    }

    /// Exact value at a point with all coordinates nonzero.
    pub fn eval_at(&self, point: &[BigInt]) -> Result<BigRational> {
        check_rank(self.rank, point.len())?;
        if point.iter().any(Zero::is_zero) {
            return Err(Error::ZeroEvaluationPoint);
        }
        let mut num_acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut num = c.clone();
            let mut den = BigInt::one();
            for (alpha, &e) in point.iter().zip(m.exponents()) {
                let p = num_traits::pow(alpha.clone(), e.unsigned_abs() as usize);
                if e >= 0 {
                    num *= p;
                } else {
                    den *= p;
                }
            }
            num_acc += BigRational::new(num, den);
        }
        Ok(num_acc)
    }

    /// `self = P / a^beta` with `P` a polynomial, `beta >= 0` minimal.
    pub fn canonical_fraction(&self) -> (Self, Monomial) {
        let beta: Vec<i64> = self.min_exponents().iter().map(|&e| (-e).max(0)).collect();
        let beta = Monomial::from_exponents(beta);
        (self.shift(&beta), beta)
    }

    /// Indices (1-based) of variables occurring with a nonzero exponent.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|m| m.support()).collect()
    }

    /// Largest variable index in the support, 0 for constants.
    pub fn max_var(&self) -> usize {
        self.terms.keys().flat_map(|m| m.support()).max().unwrap_or(0)
    }

    pub fn has_nonnegative_exponents(&self) -> bool {
        self.terms.keys().all(|m| m.exponents().iter().all(|&e| e >= 0))
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero(0)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.rank, rhs.rank, "polynomial rank mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.rank, rhs.rank, "polynomial rank mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.rank, rhs.rank, "polynomial rank mismatch");
        let mut out = LaurentPoly::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1 * m2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending monomial order, e.g. `a1^2 - 3 + 2*a1^-1*a2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn a(rank: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(rank, i)
    }

    fn c(rank: usize, k: i64) -> LaurentPoly {
        LaurentPoly::constant(rank, k)
    }

    fn mono(exps: &[i64]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn add_examples() {
        let a1 = a(2, 1);
        assert!((&a1 + &-&a1).is_zero());
        assert_eq!(&(&a1 - &c(2, 1)) + &c(2, 1), a1);
        let m = mono(&[1, -1]);
        let p = &LaurentPoly::term(m.clone(), 2) + &LaurentPoly::term(m.clone(), 3);
        assert_eq!(p, LaurentPoly::term(m, 5));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert_eq!(
            a(2, 1).checked_add(&a(3, 1)),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
        assert!(a(2, 1).checked_mul(&a(3, 1)).is_err());
    }

    #[test]
    fn mul_examples() {
        let a1 = a(1, 1);
        let one = c(1, 1);
        assert_eq!(&(&a1 - &one) * &(&a1 + &one), &a1.pow(2) - &one);
        assert_eq!(&a1 * &one, a1);
        let inv = LaurentPoly::monomial(mono(&[-1]));
        assert!((&inv * &a1).is_one());
    }

    /// Brute-force reference: the defining sum written out term by term.
    fn geometric_oracle(g: &Monomial, delta: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero(g.rank());
        if delta >= 0 {
            let mut cur = LaurentPoly::one(g.rank());
            for _ in 0..delta {
                p += &cur;
                cur = &cur * &LaurentPoly::monomial(g.clone());
            }
        } else {
            let ginv = LaurentPoly::monomial(g.inverse());
            let mut cur = ginv.clone();
            for _ in 0..(-delta) {
                p -= &cur;
                cur = &cur * &ginv;
            }
        }
        p
    }

    #[test]
    fn geometric_sum_examples() {
        let a1 = mono(&[1]);
        let s = LaurentPoly::geometric_sum(&a1, 3).unwrap();
        assert_eq!(s.to_string(), "a1^2 + a1 + 1");
        assert!(LaurentPoly::geometric_sum(&a1, 0).unwrap().is_zero());
        let s = LaurentPoly::geometric_sum(&a1, -2).unwrap();
        assert_eq!(s.to_string(), "-a1^-1 - a1^-2");
        // (a1 - 1) * s = a1^-2 - 1
        let check = &s * &(&LaurentPoly::var(1, 1) - &c(1, 1));
        assert_eq!(check, &LaurentPoly::monomial(mono(&[-2])) - &c(1, 1));
        assert_eq!(LaurentPoly::geometric_sum(&mono(&[0, 0]), 2), Err(Error::TrivialBase));
    }

    #[test]
    fn geometric_sum_matches_oracle_and_identity() {
        for g in [mono(&[1, 0]), mono(&[2, -1]), mono(&[0, -3])] {
            let gp = LaurentPoly::monomial(g.clone());
            let gm1 = &gp - &c(2, 1);
            for delta in -8..=8 {
                let s = LaurentPoly::geometric_sum(&g, delta).unwrap();
                assert_eq!(s, geometric_oracle(&g, delta));
                let lhs = &s * &gm1;
                let rhs = &LaurentPoly::monomial(g.pow(delta)) - &c(2, 1);
                assert_eq!(lhs, rhs, "g={g} delta={delta}");
                if delta >= 0 {
                    let next = LaurentPoly::geometric_sum(&g, delta + 1).unwrap();
                    assert_eq!(next, &s + &LaurentPoly::monomial(g.pow(delta)));
                }
            }
        }
    }

    #[test]
    fn divide_exact_examples() {
        let a1 = a(2, 1);
        let a2 = a(2, 2);
        let one = c(2, 1);
        let num = &a1.pow(2) - &one;
        assert_eq!(num.divide_exact(&(&a1 - &one)).unwrap(), &a1 + &one);
        assert_eq!(a1.divide_exact(&a2).unwrap(), LaurentPoly::monomial(mono(&[1, -1])));
        assert_eq!((&a1 + &one).divide_exact(&(&a1 - &one)), Err(Error::NotDivisible));
        assert_eq!(a1.divide_exact(&LaurentPoly::zero(2)), Err(Error::DivisionByZero));
        // a1 + 1 evaluated at a1 = 1 is 2, so a1 - 1 cannot divide it.
        let v = (&a1 + &one).eval_at(&[BigInt::one(), BigInt::from(5)]).unwrap();
        assert_eq!(v, BigRational::from_integer(2.into()));
    }

    #[test]
    fn divide_exact_with_negative_exponents() {
        let p = &LaurentPoly::monomial(mono(&[-3, 2])) - &LaurentPoly::monomial(mono(&[-1, 2]));
        let d = &LaurentPoly::monomial(mono(&[-1, 0])) - &c(2, 1);
        let q = p.divide_exact(&d).unwrap();
        assert_eq!(&q * &d, p);
    }

    #[test]
    fn involute_examples() {
        assert_eq!(a(1, 1).involute(), LaurentPoly::monomial(mono(&[-1])));
        let p = &a(2, 1) + &LaurentPoly::term(mono(&[0, -1]), 2);
        let q = &LaurentPoly::monomial(mono(&[-1, 0])) + &LaurentPoly::term(mono(&[0, 1]), 2);
        assert_eq!(p.involute(), q);
        assert_eq!(p.involute().involute(), p);
    }

    #[test]
    fn retract_examples() {
        let p = LaurentPoly::monomial(mono(&[1, 0, 1]));
        let keep: BTreeSet<usize> = [1, 2].into_iter().collect();
        assert_eq!(p.retract(&keep), a(3, 1));
        let all: BTreeSet<usize> = (1..=3).collect();
        assert_eq!(p.retract(&all), p);
        assert!((&a(3, 1) - &c(3, 1)).retract(&BTreeSet::new()).is_zero());
    }

    #[test]
    fn eval_examples() {
        let p = &a(2, 1) - &a(2, 2);
        let v = p.eval_at(&[1.into(), 2.into()]).unwrap();
        assert_eq!(v, BigRational::from_integer((-1).into()));
        assert!(LaurentPoly::zero(2).eval_at(&[3.into(), 4.into()]).unwrap().is_zero());
        let inv = LaurentPoly::monomial(mono(&[-1, 0]));
        let v = inv.eval_at(&[2.into(), 7.into()]).unwrap();
        assert_eq!(v, BigRational::new(1.into(), 2.into()));
        assert_eq!(inv.eval_at(&[0.into(), 1.into()]), Err(Error::ZeroEvaluationPoint));
    }

    #[test]
    fn canonical_fraction_examples() {
        let q = &LaurentPoly::monomial(mono(&[-1])) + &c(1, 1);
        let (p, beta) = q.canonical_fraction();
        assert_eq!(p, &a(1, 1) + &c(1, 1));
        assert_eq!(beta, mono(&[1]));
        let (p, beta) = a(1, 1).canonical_fraction();
        assert_eq!((p, beta), (a(1, 1), mono(&[0])));
        let q = LaurentPoly::monomial(mono(&[-2, 1]));
        let (p, beta) = q.canonical_fraction();
        assert_eq!(p, a(2, 2));
        assert_eq!(beta, mono(&[2, 0]));
        assert_eq!(p.shift(&beta.inverse()), q);
    }

    #[test]
    fn support_examples() {
        let p = LaurentPoly::monomial(mono(&[1, 0, -1]));
        assert_eq!(p.support().into_iter().collect::<Vec<_>>(), vec![1, 3]);
        assert!(c(3, 7).support().is_empty());
        assert!((&a(3, 2) - &a(3, 2)).support().is_empty());
    }

    #[test]
    fn display_format() {
        let p = &(&LaurentPoly::term(mono(&[-1, 1]), 2) - &c(2, 3)) + &a(2, 1).pow(2);
        assert_eq!(p.to_string(), "a1^2 - 3 + 2*a1^-1*a2");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!((-&a(2, 2)).to_string(), "-a2");
    }

    #[test]
    fn graded_lex_order() {
        assert!(mono(&[0, 0]) < mono(&[1, 0]));
        assert!(mono(&[1, 0]) > mono(&[0, 1]));
        assert!(mono(&[-1, 0]) < mono(&[0, 0]));
        assert!(mono(&[2, -1]) > mono(&[0, 0]));
    }
}
