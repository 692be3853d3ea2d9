//! Evaluation at integer points: separating points for finite sets of
//! polynomials, and congruence of module elements modulo the evaluated
//! Jacobi relators over `Z[1/N]`, `N = |prod alpha_i|`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::commod::{CollectedPart, CommIndex, RawModuleExpr};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};
use crate::smith::{self, Matrix, Smith};

/// A point with all coordinates nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EvalPoint {
    alphas: Vec<BigInt>,
}

impl EvalPoint {
    pub fn new(alphas: Vec<BigInt>) -> Result<Self> {
        if alphas.iter().any(Zero::is_zero) {
            return Err(Error::ZeroEvaluationPoint);
        }
        Ok(EvalPoint { alphas })
    }

    pub fn from_i64(alphas: &[i64]) -> Result<Self> {
        Self::new(alphas.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn ones(rank: usize) -> Self {
        EvalPoint { alphas: vec![BigInt::one(); rank] }
    }

    pub fn rank(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[BigInt] {
        &self.alphas
    }

    /// `N = |prod alpha_i|`.
    pub fn denominator_base(&self) -> BigInt {
        self.alphas.iter().fold(BigInt::one(), |acc, a| acc * a).abs()
    }

    pub fn eval(&self, q: &LaurentPoly) -> Result<BigRational> {
        q.eval_at(&self.alphas)
    }
}

/// A point where no polynomial in `ps` vanishes.
pub fn separating_point(rank: usize, ps: &[LaurentPoly]) -> Result<EvalPoint> {
    let mut prod = LaurentPoly::one(rank);
    for p in ps {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        prod = prod.checked_mul(p)?;
    }
    let (q, _) = prod.canonical_fraction();
    let alphas = nonvanishing(&q, rank);
    let point = EvalPoint::new(alphas)?;
    for p in ps {
        if point.eval(p)?.is_zero() {
            return Err(Error::InternalInconsistency("separating point annihilates an input".to_string()));
        }
    }
    Ok(point)
}

/// A point separating pairwise distinct polynomials, from the product of their differences.
pub fn separating_point_distinct(rank: usize, ps: &[LaurentPoly]) -> Result<EvalPoint> {
    let mut diffs = Vec::new();
    for (k, p) in ps.iter().enumerate() {
        for q in &ps[k + 1..] {
            diffs.push(p.checked_sub(q)?);
        }
    }
    separating_point(rank, &diffs)
}

/// For a nonzero polynomial `q` in `a1..am`: choose `alpha_1..alpha_{m-1}` for its
/// leading coefficient in `a_m`, then `alpha_m` beyond the Cauchy root bound.
fn nonvanishing(q: &LaurentPoly, m: usize) -> Vec<BigInt> {
    if m == 0 {
        return Vec::new();
    }
    let rank = q.rank();
    let deg = q.terms().map(|(mono, _)| mono.exponent(m)).max().unwrap_or(0);
    let mut lead = LaurentPoly::zero(rank);
    for (mono, c) in q.terms() {
        if mono.exponent(m) == deg {
            lead.add_term(mono.restrict(|i| i != m), c.clone());
        }
    }
    let mut alphas = nonvanishing(&lead, m - 1);
    // univariate coefficients after substituting alpha_1..alpha_{m-1}
    let mut uni: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (mono, c) in q.terms() {
        let mut v = c.clone();
        for (k, a) in alphas.iter().enumerate() {
            v *= num_traits::pow(a.clone(), mono.exponent(k + 1) as usize);
        }
        *uni.entry(mono.exponent(m)).or_default() += v;
    }
    let next = if deg == 0 {
        BigInt::one()
    } else {
        uni.values().fold(BigInt::one(), |acc, c| acc + c.abs())
    };
    alphas.push(next);
    alphas
}

/// The evaluated relator lattice `(a_k-1) e_ij - (a_i-1) e_kj + (a_j-1) e_ki`, `j < i < k`.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub point: EvalPoint,
    pub relators: Matrix,
    pub smith: Smith,
    pub denominator_base: BigInt,
}

impl QuotientPresentation {
    pub fn rank(&self) -> usize {
        self.point.rank()
    }

    pub fn columns(&self) -> usize {
        CommIndex::count(self.rank())
    }

    /// Rank of the quotient as an abelian group (tensored with the rationals).
    pub fn free_rank(&self) -> usize {
        self.columns() - self.smith.rank
    }
}

pub fn quotient_presentation(point: &EvalPoint) -> QuotientPresentation {
    let n = point.rank();
    let cols = CommIndex::count(n);
    let a = |i: usize| &point.alphas()[i - 1] - 1;
    let mut relators = Vec::new();
    for k in 3..=n {
        for i in 2..k {
            for j in 1..i {
                let mut row = vec![BigInt::zero(); cols];
                row[CommIndex { i, j }.position()] += a(k);
                row[CommIndex { i: k, j }.position()] -= a(i);
                row[CommIndex { i: k, j: i }.position()] += a(j);
                relators.push(row);
            }
        }
    }
    let smith = smith::smith(&relators, relators.len(), cols);
    QuotientPresentation { point: point.clone(), relators, smith, denominator_base: point.denominator_base() }
}

pub fn module_image(u: &CollectedPart, point: &EvalPoint) -> Result<Vec<BigRational>> {
    module_image_raw(&u.to_raw(), point)
}

pub fn module_image_raw(e: &RawModuleExpr, point: &EvalPoint) -> Result<Vec<BigRational>> {
    if e.rank() != point.rank() {
        return Err(Error::RankMismatch { left: e.rank(), right: point.rank() });
    }
    let mut out = vec![BigRational::zero(); CommIndex::count(e.rank())];
    for (idx, q) in e.factors() {
        out[idx.position()] += point.eval(q)?;
    }
    Ok(out)
}

fn strip(d: &BigInt, n: &BigInt) -> BigInt {
    let mut d = d.abs();
    loop {
        let g = d.gcd(n);
        if g.is_one() || g.is_zero() {
            return d;
        }
        d /= g;
    }
}

/// Whether a rational vector lies in the `Z[1/N]`-span of the relators.
pub fn in_relator_span(x: &[BigRational], pres: &QuotientPresentation) -> Result<bool> {
    let n = &pres.denominator_base;
    let den = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    if !strip(&den, n).is_one() {
        return Err(Error::InternalInconsistency("image denominator not supported on N".to_string()));
    }
    let ints: Vec<BigInt> = x.iter().map(|q| (q * &den).to_integer()).collect();
    let cols = pres.columns();
    let w = smith::row_times(&ints, &pres.smith.v, cols);
    for (k, wk) in w.iter().enumerate() {
        let ok = if k < pres.smith.rank {
            wk.is_multiple_of(&strip(&pres.smith.d[k], n))
        } else {
            wk.is_zero()
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn congruent_mod(u: &CollectedPart, v: &CollectedPart, pres: &QuotientPresentation) -> Result<bool> {
    if u.rank() != v.rank() {
        return Err(Error::RankMismatch { left: u.rank(), right: v.rank() });
    }
    let iu = module_image(u, &pres.point)?;
    let iv = module_image(v, &pres.point)?;
    let diff: Vec<BigRational> = iu.iter().zip(&iv).map(|(a, b)| a - b).collect();
    in_relator_span(&diff, pres)
}

pub fn congruent_mod_raw(u: &RawModuleExpr, v: &RawModuleExpr, pres: &QuotientPresentation) -> Result<bool> {
    let iu = module_image_raw(u, &pres.point)?;
    let iv = module_image_raw(v, &pres.point)?;
    let diff: Vec<BigRational> = iu.iter().zip(&iv).map(|(a, b)| a - b).collect();
    in_relator_span(&diff, pres)
}

/// Necessary condition for `g^P = h` at one point: `g^(P(alpha))` and `h` agree
/// modulo the evaluated relators. Requires `P(alpha)` to be an integer.
pub fn power_action_check(g: &CollectedPart, p: &LaurentPoly, h: &CollectedPart, pres: &QuotientPresentation) -> Result<bool> {
    let value = pres.point.eval(p)?;
    if !value.is_integer() {
        return Err(Error::NonIntegerExponent);
    }
    congruent_mod(&g.mscale(&value.to_integer()), h, pres)
}

/// Two-sided form for Laurent `P = Q / a^b`: with `f = h^(a^b)`, checks both
/// `f == g^(Q(alpha))` and `f == h^((a^b)(alpha))` modulo the relators.
pub fn power_action_check_laurent(
    g: &CollectedPart,
    p: &LaurentPoly,
    h: &CollectedPart,
    pres: &QuotientPresentation,
) -> Result<bool> {
    let (q, beta) = p.canonical_fraction();
    let unit = LaurentPoly::monomial(beta.clone());
    let f = h.mact(&unit);
    let qv = pres.point.eval(&q)?.to_integer();
    let uv = pres.point.eval(&unit)?.to_integer();
    Ok(congruent_mod(&f, &g.mscale(&qv), pres)? && congruent_mod(&f, &h.mscale(&uv), pres)?)
}

/// Convenience: `a^beta` evaluated, as used by the two-sided form.
pub fn monomial_value(m: &Monomial, point: &EvalPoint) -> Result<BigRational> {
    point.eval(&LaurentPoly::monomial(m.clone()))
}
