//! Group arithmetic on normal forms `x1^g1 ... xn^gn * u`, `u` collected.

use alloc::vec;
use alloc::vec::Vec;
use alloc::string::ToString;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::commod::{collect, CollectedPart, CommIndex, RawModuleExpr};
use crate::error::{Error, Result};
use crate::fox;
use crate::laurent::{LaurentPoly, Monomial};
use crate::words::GroupWord;

/// A group element in normal form. Equality is structural, which is sound
/// because normal forms are unique.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element {
    gamma: Vec<i64>,
    part: CollectedPart,
}

impl Element {
    pub fn identity(rank: usize) -> Self {
        Element { gamma: vec![0; rank], part: CollectedPart::zero(rank) }
    }

    /// The generator `x_i` (1-based).
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Self::generator_power(rank, i, 1)
    }

    pub fn generator_power(rank: usize, i: usize, e: i64) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::BadIndex { index: i, rank });
        }
        let mut g = Self::identity(rank);
        g.gamma[i - 1] = e;
        Ok(g)
    }

    pub fn from_parts(gamma: Vec<i64>, part: CollectedPart) -> Result<Self> {
        if gamma.len() != part.rank() {
            return Err(Error::RankMismatch { left: gamma.len(), right: part.rank() });
        }
        Ok(Element { gamma, part })
    }

    /// An element of `G'`.
    pub fn from_part(part: CollectedPart) -> Self {
        Element { gamma: vec![0; part.rank()], part }
    }

    pub fn rank(&self) -> usize {
        self.gamma.len()
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    pub fn part(&self) -> &CollectedPart {
        &self.part
    }

    pub fn into_parts(self) -> (Vec<i64>, CollectedPart) {
        (self.gamma, self.part)
    }

    pub fn is_identity(&self) -> bool {
        self.gamma.iter().all(|&e| e == 0) && self.part.is_zero()
    }

    pub fn in_commutant(&self) -> bool {
        self.gamma.iter().all(|&e| e == 0)
    }

    /// Image in the abelianization, as a monomial.
    pub fn abelianization(&self) -> Monomial {
        Monomial::from_exponents(self.gamma.clone())
    }

    fn check_rank(&self, other: &Element) -> Result<()> {
        if self.rank() == other.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { left: self.rank(), right: other.rank() })
        }
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_rank(other)?;
        let gamma: Vec<i64> = self.gamma.iter().zip(&other.gamma).map(|(a, b)| a + b).collect();
        let mut raw = cross_terms(&self.gamma, &other.gamma);
        let shift = Monomial::from_exponents(other.gamma.clone());
        for (idx, q) in self.part.iter() {
            raw.push(*idx, q.shift(&shift))?;
        }
        let part = collect(&raw).madd(&other.part);
        Ok(Element { gamma, part })
    }

    /// Closed-form inverse: solves `g * h = 1` with `h` in normal form.
    pub fn inv(&self) -> Element {
        let neg: Vec<i64> = self.gamma.iter().map(|e| -e).collect();
        let mut raw = cross_terms(&self.gamma, &neg);
        let shift = Monomial::from_exponents(neg.clone());
        for (idx, q) in self.part.iter() {
            raw.push(*idx, q.shift(&shift)).expect("same rank");
        }
        Element { gamma: neg, part: collect(&raw).mneg() }
    }

    /// Binary powering over [`Element::mul`].
    pub fn pow(&self, m: i64) -> Element {
        if m < 0 {
            return self.inv().pow(m.checked_neg().expect("exponent overflow"));
        }
        if self.in_commutant() {
            return Element::from_part(self.part.mscale(&BigInt::from(m)));
        }
        let mut result = Element::identity(self.rank());
        let mut base = self.clone();
        let mut e = m as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `g^-1 h^-1 g h`.
    pub fn commutator(&self, h: &Element) -> Result<Element> {
        self.check_rank(h)?;
        Ok(&(&self.inv() * &h.inv()) * &(self * h))
    }

    /// `h^-1 g h`.
    pub fn conjugate(&self, h: &Element) -> Result<Element> {
        self.check_rank(h)?;
        Ok(&(&h.inv() * self) * h)
    }

    /// Normal form of a word, multiplying letters left to right.
    pub fn from_word(w: &GroupWord, rank: usize) -> Result<Element> {
        let mut g = Element::identity(rank);
        for &(i, e) in w.letters() {
            let letter = Element::generator_power(rank, i, e)?;
            g = &g * &letter;
        }
        Ok(g)
    }

    /// Action of a ring element on an element of `G'`.
    pub fn act(&self, q: &LaurentPoly) -> Result<Element> {
        if !self.in_commutant() {
            return Err(Error::NotInCommutant);
        }
        Ok(Element::from_part(self.part.mact(q)))
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs).expect("element rank mismatch")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::words::print_element(self))
    }
}

/// The commutators produced by moving `x^delta` left through `x^gamma`:
/// `[xi,xj]^(e_i(gamma_i) e_j(delta_j) prod_{k>i} a_k^gamma_k prod_{k>j} a_k^delta_k)`.
fn cross_terms(gamma: &[i64], delta: &[i64]) -> RawModuleExpr {
    let rank = gamma.len();
    let mut raw = RawModuleExpr::new(rank);
    for i in 2..=rank {
        if gamma[i - 1] == 0 {
            continue;
        }
        let eps_i = LaurentPoly::geometric_sum(&Monomial::var(rank, i, 1), gamma[i - 1])
            .expect("nontrivial base");
        for j in 1..i {
            if delta[j - 1] == 0 {
                continue;
            }
            let eps_j = LaurentPoly::geometric_sum(&Monomial::var(rank, j, 1), delta[j - 1])
                .expect("nontrivial base");
            let mut shift = vec![0i64; rank];
            for k in i + 1..=rank {
                shift[k - 1] += gamma[k - 1];
            }
            for k in j + 1..=rank {
                shift[k - 1] += delta[k - 1];
            }
            let coef = (&eps_i * &eps_j).shift(&Monomial::from_exponents(shift));
            raw.push(CommIndex { i, j }, coef).expect("valid index");
        }
    }
    raw
}

/// `x^gamma * x^delta` for pure generator-power blocks, from the closed form
/// `x^(gamma+delta) * collect(cross terms)`.
pub fn block_product(gamma: &[i64], delta: &[i64]) -> Result<Element> {
    if gamma.len() != delta.len() {
        return Err(Error::RankMismatch { left: gamma.len(), right: delta.len() });
    }
    let sum = gamma.iter().zip(delta).map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow)).collect::<Result<Vec<_>>>()?;
    Element::from_parts(sum, collect(&cross_terms(gamma, delta)))
}

/// Both sides of `[z^gamma, g^delta] = [z,g]^(e_z(gamma) e_g(delta))` for `z, g` outside `G'`.
pub fn power_commutator_sides(z: &Element, g: &Element, gamma: i64, delta: i64) -> Result<(Element, Element)> {
    z.check_rank(g)?;
    let ez = LaurentPoly::geometric_sum(&z.abelianization(), gamma)?;
    let eg = LaurentPoly::geometric_sum(&g.abelianization(), delta)?;
    let lhs = z.pow(gamma).commutator(&g.pow(delta))?;
    let rhs = z.commutator(g)?.act(&(&ez * &eg))?;
    Ok((lhs, rhs))
}

/// `inv(w^m g^m) (w g)^m`, which lies in `G'` for `g` in `G'`.
pub fn power_residue(w: &Element, g: &Element, m: i64) -> Result<Element> {
    w.check_rank(g)?;
    if !g.in_commutant() {
        return Err(Error::NotInCommutant);
    }
    let lhs = (&w.pow(m) * &g.pow(m)).inv();
    let u = &lhs * &(w * g).pow(m);
    if !u.in_commutant() {
        return Err(Error::InternalInconsistency("power residue left the commutant".to_string()));
    }
    Ok(u)
}

/// The polynomial `f` with `(a-1) f = (ab)^d-1/(ab-1) - (b^d-1)/(b-1)`.
pub fn delta_comm_poly(a: &Monomial, b: &Monomial, delta: i64) -> Result<LaurentPoly> {
    let ab = a.checked_mul(b)?;
    if a.is_one() || b.is_one() || ab.is_one() {
        return Err(Error::TrivialBase);
    }
    let num = &LaurentPoly::geometric_sum(&ab, delta)? - &LaurentPoly::geometric_sum(b, delta)?;
    let den = &LaurentPoly::monomial(a.clone()) - &LaurentPoly::one(a.rank());
    num.divide_exact(&den)
}

/// The two sides of `y^-d x^-d (xy)^d = [x,y]^(-f(x̄, ȳ))`.
pub fn delta_commutator_sides(x: &Element, y: &Element, delta: i64) -> Result<(Element, Element)> {
    x.check_rank(y)?;
    let f = delta_comm_poly(&x.abelianization(), &y.abelianization(), delta)?;
    let lhs = &(&y.pow(-delta) * &x.pow(-delta)) * &(x * y).pow(delta);
    let rhs = x.commutator(y)?.act(&-&f)?;
    Ok((lhs, rhs))
}

pub fn delta_commutator_check(x: &Element, y: &Element, delta: i64) -> Result<bool> {
    let (lhs, rhs) = delta_commutator_sides(x, y, delta)?;
    Ok(lhs == rhs)
}

/// Each clause of the exponential-group axioms with integer exponents.
pub fn exp_axiom_clauses(g: &Element, h: &Element, alpha: i64, beta: i64) -> Result<Vec<(&'static str, bool)>> {
    g.check_rank(h)?;
    let rank = g.rank();
    let one = Element::identity(rank);
    let g_alpha = g.pow(alpha);
    let g_beta = g.pow(beta);
    let conj = g.conjugate(h)?;
    let gh_commute = g.commutator(h)?.is_identity();
    let distributive = if gh_commute {
        (g * h).pow(alpha) == &g_alpha * &h.pow(alpha)
    } else {
        true
    };
    Ok(vec![
        ("g^1 = g", g.pow(1) == *g),
        ("g^0 = 1", g.pow(0) == one),
        ("1^a = 1", one.pow(alpha) == one),
        ("g^(a+b) = g^a g^b", g.pow(alpha + beta) == &g_alpha * &g_beta),
        ("g^(ab) = (g^a)^b", g.pow(alpha * beta) == g_alpha.pow(beta)),
        ("(h^-1 g h)^a = h^-1 g^a h", conj.pow(alpha) == g_alpha.conjugate(h)?),
        ("[g,h] = 1 => (gh)^a = g^a h^a", distributive),
    ])
}

pub fn check_exp_axioms(g: &Element, h: &Element, alpha: i64, beta: i64) -> Result<bool> {
    Ok(exp_axiom_clauses(g, h, alpha, beta)?.iter().all(|(_, ok)| *ok))
}

/// Outcome of the necessary-condition test for a candidate basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BasisVerdict {
    /// The abelianization matrix is not unimodular.
    FailAbelianization { det: BigInt },
    /// The Fox Jacobian determinant is not `± monomial`.
    FailJacobianUnit { det: LaurentPoly },
    /// Both necessary conditions hold; this does not prove the words form a basis.
    PassNecessary { det: LaurentPoly },
}

pub fn basis_certificate(z: &[GroupWord], rank: usize) -> Result<BasisVerdict> {
    if z.len() != rank {
        return Err(Error::RankMismatch { left: rank, right: z.len() });
    }
    let mut ab = Vec::with_capacity(rank);
    let mut jac = Vec::with_capacity(rank);
    for w in z {
        let m = fox::abelianization(w, rank)?;
        ab.push(m.exponents().iter().map(|&e| LaurentPoly::constant(1, e)).collect::<Vec<_>>());
        jac.push(fox::fox_all(w, rank)?);
    }
    let det_ab = determinant(ab, 1)?.as_constant().expect("integer matrix");
    if det_ab.abs() != BigInt::one() {
        return Ok(BasisVerdict::FailAbelianization { det: det_ab });
    }
    let det = determinant(jac, rank)?;
    let unit = det.as_term().is_some_and(|(_, c)| c.abs().is_one());
    Ok(if unit {
        BasisVerdict::PassNecessary { det }
    } else {
        BasisVerdict::FailJacobianUnit { det }
    })
}

/// Fraction-free (Bareiss) determinant over the Laurent ring.
pub fn determinant(mut m: Vec<Vec<LaurentPoly>>, rank: usize) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one(rank));
    }
    let mut prev = LaurentPoly::one(rank);
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero(rank)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.divide_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

impl Element {
    pub fn commutator_generator(rank: usize, i: usize, j: usize) -> Result<Element> {
        let idx = CommIndex::new(i, j, rank)?;
        Ok(Element::from_part(CollectedPart::generator(idx, rank)))
    }

    /// `[xi,xj]^q` as an element of `G'`, collected.
    pub fn module_power(rank: usize, idx: CommIndex, q: LaurentPoly) -> Result<Element> {
        let raw = RawModuleExpr::from_factors(rank, [(idx, q)])?;
        Ok(Element::from_part(collect(&raw)))
    }

    pub fn is_zero_gamma(&self) -> bool {
        self.gamma.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fox::magnus_equal;
    use crate::words::{element_to_word, parse_word};

    fn x(rank: usize, i: usize) -> Element {
        Element::generator(rank, i).unwrap()
    }

    fn ci(i: usize, j: usize) -> CommIndex {
        CommIndex { i, j }
    }

    fn word(s: &str, rank: usize) -> Element {
        Element::from_word(&parse_word(s, rank).unwrap(), rank).unwrap()
    }

    /// Independent check: the printed normal form and the reference word agree
    /// under the Fox oracle.
    fn oracle_agrees(g: &Element, reference: &str) {
        let rank = g.rank();
        let w = element_to_word(g).unwrap();
        assert!(magnus_equal(&w, &parse_word(reference, rank).unwrap(), rank).unwrap(), "{g} vs {reference}");
    }

    #[test]
    fn identity_and_generators() {
        let e = Element::identity(3);
        assert_eq!(e.gamma(), &[0, 0, 0]);
        assert!(e.part().is_zero());
        assert_eq!(x(3, 1).gamma(), &[1, 0, 0]);
        assert_eq!(Element::generator(3, 4), Err(Error::BadIndex { index: 4, rank: 3 }));
    }

    #[test]
    fn mul_examples() {
        let g = &x(2, 2) * &x(2, 1);
        assert_eq!(g.gamma(), &[1, 1]);
        assert_eq!(g.part(), &CollectedPart::generator(ci(2, 1), 2));
        oracle_agrees(&g, "x2 x1");
        let h = &x(2, 1) * &x(2, 2);
        assert_eq!(h.gamma(), &[1, 1]);
        assert!(h.part().is_zero());
        oracle_agrees(&h, "x1 x2");
        assert_eq!(&g * &Element::identity(2), g);
        assert!(x(2, 1).mul(&x(3, 1)).is_err());
    }

    #[test]
    fn mul_conjugates_by_later_gamma() {
        // x2 x3 x1 = x1 x2 x3 [x2,x1]^(a3) [x3,x1]
        let g = &(&x(3, 2) * &x(3, 3)) * &x(3, 1);
        oracle_agrees(&g, "x2 x3 x1");
        let raw = RawModuleExpr::from_factors(
            3,
            [(ci(2, 1), LaurentPoly::var(3, 3)), (ci(3, 1), LaurentPoly::one(3))],
        )
        .unwrap();
        assert_eq!(g.part(), &collect(&raw));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Element::identity(2).inv(), Element::identity(2));
        let g = &x(2, 1) * &x(2, 2);
        let gi = g.inv();
        assert_eq!(gi.gamma(), &[-1, -1]);
        let m = Monomial::from_exponents(vec![-1, -1]);
        assert_eq!(gi.part(), &CollectedPart::new(2, [(ci(2, 1), LaurentPoly::monomial(m))]).unwrap());
        assert!((&g * &gi).is_identity());
        let w = word("x3^2 x1^-1 [x2,x3] x2", 3);
        assert_eq!(w.inv().inv(), w);
        assert!((&w * &w.inv()).is_identity());
        assert!((&w.inv() * &w).is_identity());
    }

    #[test]
    fn pow_examples() {
        let g = word("x1 [x2,x1]", 2);
        assert!(g.pow(0).is_identity());
        assert_eq!(g.pow(2), &g * &g);
        let c = Element::commutator_generator(2, 2, 1).unwrap();
        let c5 = c.pow(5);
        assert_eq!(c5.part().get(ci(2, 1)).unwrap(), &LaurentPoly::constant(2, 5));
        let mut acc = Element::identity(2);
        for m in 0..=12 {
            assert_eq!(g.pow(m), acc);
            assert_eq!(g.pow(-m), acc.inv());
            acc = &acc * &g;
        }
    }

    #[test]
    fn commutator_examples() {
        let g = word("x1 x2^2", 2);
        assert!(g.commutator(&g).unwrap().is_identity());
        let c = x(2, 2).commutator(&x(2, 1)).unwrap();
        assert!(c.in_commutant());
        assert_eq!(c.part(), &CollectedPart::generator(ci(2, 1), 2));
        for gamma in -6..=6 {
            for delta in -6..=6 {
                let lhs = x(2, 2).pow(gamma).commutator(&x(2, 1).pow(delta)).unwrap();
                let e2 = LaurentPoly::geometric_sum(&Monomial::var(2, 2, 1), gamma).unwrap();
                let e1 = LaurentPoly::geometric_sum(&Monomial::var(2, 1, 1), delta).unwrap();
                let expected = CollectedPart::new(2, [(ci(2, 1), &e2 * &e1)]).unwrap();
                assert_eq!(lhs.part(), &expected, "gamma={gamma} delta={delta}");
            }
        }
    }

    #[test]
    fn block_product_matches_words() {
        let gamma = [2, -1, 3];
        let delta = [-1, 4, 2];
        let g = block_product(&gamma, &delta).unwrap();
        assert_eq!(g, word("x1^2 x2^-1 x3^3 x1^-1 x2^4 x3^2", 3));
        assert!(block_product(&gamma, &delta[..2]).is_err());
    }

    #[test]
    fn power_commutator_identity() {
        let z = word("x2 x1^-1", 3);
        let g = word("x3 x2^2", 3);
        for gamma in -4..=4 {
            for delta in -4..=4 {
                let (l, r) = power_commutator_sides(&z, &g, gamma, delta).unwrap();
                assert_eq!(l, r, "gamma={gamma} delta={delta}");
            }
        }
        assert_eq!(power_commutator_sides(&Element::identity(3), &g, 1, 1), Err(Error::TrivialBase));
    }

    #[test]
    fn power_residue_examples() {
        let w = word("x1 x2^-1", 2);
        let e = Element::identity(2);
        assert!(power_residue(&w, &e, 3).unwrap().is_identity());
        let c = Element::commutator_generator(2, 2, 1).unwrap();
        let u = power_residue(&x(2, 1), &c, 2).unwrap();
        assert!(u.in_commutant());
        assert!(power_residue(&w, &c, 1).unwrap().is_identity());
        assert_eq!(power_residue(&w, &x(2, 1), 2), Err(Error::NotInCommutant));
    }

    #[test]
    fn delta_comm_poly_examples() {
        let a = Monomial::var(2, 1, 1);
        let b = Monomial::var(2, 2, 1);
        assert!(delta_comm_poly(&a, &b, 1).unwrap().is_zero());
        assert_eq!(delta_comm_poly(&a, &b, 2).unwrap(), LaurentPoly::var(2, 2));
        let b2 = LaurentPoly::monomial(b.pow(2));
        let expected = &(&b2 * &(&LaurentPoly::var(2, 1) + &LaurentPoly::one(2))) + &LaurentPoly::var(2, 2);
        assert_eq!(delta_comm_poly(&a, &b, 3).unwrap(), expected);
        assert_eq!(delta_comm_poly(&Monomial::one(2), &b, 2), Err(Error::TrivialBase));
        assert_eq!(delta_comm_poly(&a, &a.inverse(), 2), Err(Error::TrivialBase));
    }

    #[test]
    fn delta_commutator_examples() {
        let (lhs, rhs) = delta_commutator_sides(&x(2, 1), &x(2, 2), 2).unwrap();
        assert_eq!(lhs, rhs);
        // [x1,x2]^(-a2) = [x2,x1]^(a2)
        let expected = CollectedPart::new(2, [(ci(2, 1), LaurentPoly::var(2, 2))]).unwrap();
        assert_eq!(lhs.part(), &expected);
        for d in [0, 1] {
            let (l, r) = delta_commutator_sides(&x(2, 1), &x(2, 2), d).unwrap();
            assert!(l.is_identity() && r.is_identity());
        }
        for d in -5..=5 {
            assert!(delta_commutator_check(&word("x1 x2", 3), &word("x3^-1 x1", 3), d).unwrap());
        }
    }

    #[test]
    fn exp_axioms_examples() {
        let g = word("x1 x2^2 x1^-1 x3", 3);
        let h = word("x2 x3", 3);
        assert!(check_exp_axioms(&g, &h, 0, 0).unwrap());
        assert!(check_exp_axioms(&g, &h, 3, -2).unwrap());
        let h = g.pow(2);
        let clauses = exp_axiom_clauses(&g, &h, 4, 2).unwrap();
        assert!(clauses.iter().all(|(_, ok)| *ok));
        assert!(g.commutator(&h).unwrap().is_identity());
    }

    #[test]
    fn basis_certificate_examples() {
        let z: Vec<_> = ["x1", "x2", "x3"].iter().map(|s| parse_word(s, 3).unwrap()).collect();
        assert_eq!(basis_certificate(&z, 3).unwrap(), BasisVerdict::PassNecessary { det: LaurentPoly::one(3) });
        let z: Vec<_> = ["x1 x2", "x2"].iter().map(|s| parse_word(s, 2).unwrap()).collect();
        assert_eq!(basis_certificate(&z, 2).unwrap(), BasisVerdict::PassNecessary { det: LaurentPoly::one(2) });
        let z: Vec<_> = ["x1^2", "x2"].iter().map(|s| parse_word(s, 2).unwrap()).collect();
        assert_eq!(basis_certificate(&z, 2).unwrap(), BasisVerdict::FailAbelianization { det: 2.into() });
        // x2^-1 x1 x2, x2 is a basis
        let z: Vec<_> = ["x1 [x1,x2]", "x2"].iter().map(|s| parse_word(s, 2).unwrap()).collect();
        let unit = LaurentPoly::monomial(Monomial::var(2, 2, -1));
        assert_eq!(basis_certificate(&z, 2).unwrap(), BasisVerdict::PassNecessary { det: unit });
        // unimodular abelianization, but the Jacobian is not a unit
        let z: Vec<_> = ["x1 [x1,x2]^2", "x2"].iter().map(|s| parse_word(s, 2).unwrap()).collect();
        assert!(matches!(basis_certificate(&z, 2).unwrap(), BasisVerdict::FailJacobianUnit { .. }));
        assert!(basis_certificate(&z[..1], 2).is_err());
    }

    #[test]
    fn determinant_of_laurent_matrix() {
        let a1 = LaurentPoly::var(2, 1);
        let one = LaurentPoly::one(2);
        let zero = LaurentPoly::zero(2);
        let m = vec![vec![zero.clone(), a1.clone()], vec![one.clone(), zero.clone()]];
        assert_eq!(determinant(m, 2).unwrap(), -&a1);
    }
}
