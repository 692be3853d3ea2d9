//! Natural-number codes for integer tuples, polynomials and group elements.
//!
//! * integers go to naturals by zigzag: `0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...`
//! * pairs use the Cantor pairing `(m+k)(m+k+1)/2 + k`
//! * the empty tuple is `0`; a tuple of length `L >= 1` is `1 + pair(L-1, fold)`,
//!   where `fold` pairs the zigzagged entries along a balanced binary tree
//! * a polynomial `P / a^b` in lowest terms is `pair(tuple(u), tuple(b))` with
//!   `u` listing `(coefficient, exponents...)` per monomial of `P` in ascending order
//! * an element is the tuple of its coordinates `(gamma..., nu(beta_21), nu(beta_31), ...)`

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::commod::{CollectedPart, CommIndex};
use crate::error::{Error, Result};
use crate::group::Element;
use crate::laurent::{LaurentPoly, Monomial};

/// Longest tuple that [`decode_tuple`] will materialize.
pub const MAX_TUPLE_LEN: usize = 1 << 24;

pub fn zigzag(z: &BigInt) -> BigUint {
    let m = z.magnitude();
    if z.is_negative() {
        (m << 1u32) - 1u32
    } else {
        m << 1u32
    }
}

pub fn unzigzag(k: &BigUint) -> BigInt {
    let half = BigInt::from(k >> 1u32);
    if k.bit(0) {
        -half - 1
    } else {
        half
    }
}

pub fn pair(m: &BigUint, k: &BigUint) -> BigUint {
    let s = m + k;
    ((&s * (&s + 1u32)) >> 1u32) + k
}

pub fn unpair(z: &BigUint) -> (BigUint, BigUint) {
    let w = ((z << 3u32) + 1u32).sqrt();
    let w = (w - 1u32) >> 1u32;
    let t = (&w * (&w + 1u32)) >> 1u32;
    let k = z - t;
    let m = w - &k;
    (m, k)
}

fn fold(xs: &[BigUint]) -> BigUint {
    match xs.len() {
        1 => xs[0].clone(),
        len => {
            let (l, r) = xs.split_at(len / 2);
            pair(&fold(l), &fold(r))
        }
    }
}

fn unfold(code: &BigUint, len: usize, out: &mut Vec<BigUint>) {
    if len == 1 {
        out.push(code.clone());
    } else {
        let (l, r) = unpair(code);
        unfold(&l, len / 2, out);
        unfold(&r, len - len / 2, out);
    }
}

/// Bijection from integer tuples of any length onto the naturals.
pub fn encode_tuple(t: &[BigInt]) -> BigUint {
    if t.is_empty() {
        return BigUint::zero();
    }
    let leaves: Vec<BigUint> = t.iter().map(zigzag).collect();
    pair(&BigUint::from(t.len() - 1), &fold(&leaves)) + 1u32
}

pub fn decode_tuple(c: &BigUint) -> Result<Vec<BigInt>> {
    if c.is_zero() {
        return Ok(Vec::new());
    }
    let (l, body) = unpair(&(c - 1u32));
    let len = l
        .to_usize()
        .and_then(|l| l.checked_add(1))
        .filter(|&l| l <= MAX_TUPLE_LEN)
        .ok_or_else(|| Error::TooLarge(format!("tuple of length {l} + 1")))?;
    let mut leaves = Vec::with_capacity(len);
    unfold(&body, len, &mut leaves);
    Ok(leaves.iter().map(unzigzag).collect())
}

pub fn encode_tuple_i64(t: &[i64]) -> BigUint {
    encode_tuple(&t.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

fn to_exponent(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::TooLarge(format!("exponent {x}")))
}

/// The code `nu(q)`.
pub fn encode_poly(q: &LaurentPoly) -> BigUint {
    let (p, beta) = q.canonical_fraction();
    let mut u = Vec::with_capacity(p.len() * (q.rank() + 1));
    for (m, c) in p.terms() {
        u.push(c.clone());
        u.extend(m.exponents().iter().map(|&e| BigInt::from(e)));
    }
    pair(&encode_tuple(&u), &encode_tuple_i64(beta.exponents()))
}

/// Inverse of [`encode_poly`]; `NotACode` outside its image.
pub fn decode_poly(c: &BigUint, rank: usize) -> Result<LaurentPoly> {
    let (cu, cv) = unpair(c);
    let u = decode_tuple(&cu)?;
    let v = decode_tuple(&cv)?;
    if v.len() != rank || v.iter().any(Signed::is_negative) || u.len() % (rank + 1) != 0 {
        return Err(Error::NotACode);
    }
    let beta: Vec<i64> = v.iter().map(to_exponent).collect::<Result<_>>()?;
    let mut p = LaurentPoly::zero(rank);
    let mut prev: Option<Monomial> = None;
    let mut mins = vec![i64::MAX; rank];
    for chunk in u.chunks(rank + 1) {
        if chunk[0].is_zero() {
            return Err(Error::NotACode);
        }
        let exps: Vec<i64> = chunk[1..].iter().map(to_exponent).collect::<Result<_>>()?;
        if exps.iter().any(|&e| e < 0) {
            return Err(Error::NotACode);
        }
        for (lo, &e) in mins.iter_mut().zip(&exps) {
            *lo = (*lo).min(e);
        }
        let m = Monomial::from_exponents(exps);
        if prev.as_ref().is_some_and(|q| *q >= m) {
            return Err(Error::NotACode);
        }
        prev = Some(m.clone());
        p.add_term(m, chunk[0].clone());
    }
    // lowest terms: a variable in the denominator must be absent from some monomial
    let reduced = if p.is_zero() {
        beta.iter().all(|&b| b == 0)
    } else {
        beta.iter().zip(&mins).all(|(&b, &lo)| b == 0 || lo == 0)
    };
    if !reduced {
        return Err(Error::NotACode);
    }
    Ok(p.shift(&Monomial::from_exponents(beta).inverse()))
}

/// `(gamma, nu(beta_21), nu(beta_31), nu(beta_32), ...)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coordinates {
    pub gamma: Vec<i64>,
    pub beta_codes: Vec<BigUint>,
}

pub fn coordinates(g: &Element) -> Coordinates {
    let rank = g.rank();
    Coordinates {
        gamma: g.gamma().to_vec(),
        beta_codes: CommIndex::all(rank).map(|idx| encode_poly(&g.part().coefficient(idx))).collect(),
    }
}

pub fn element_from_coordinates(c: &Coordinates) -> Result<Element> {
    let rank = c.gamma.len();
    if c.beta_codes.len() != CommIndex::count(rank) {
        return Err(Error::BadCoordinates(format!(
            "expected {} commutator codes for rank {rank}, got {}",
            CommIndex::count(rank),
            c.beta_codes.len()
        )));
    }
    let mut beta = Vec::new();
    for (idx, code) in CommIndex::all(rank).zip(&c.beta_codes) {
        beta.push((idx, decode_poly(code, rank)?));
    }
    Element::from_parts(c.gamma.clone(), CollectedPart::new(rank, beta)?)
}

pub fn encode_element(g: &Element) -> BigUint {
    let c = coordinates(g);
    let mut t: Vec<BigInt> = c.gamma.iter().map(|&e| BigInt::from(e)).collect();
    t.extend(c.beta_codes.into_iter().map(|b| BigInt::from_biguint(Sign::Plus, b)));
    encode_tuple(&t)
}

pub fn decode_element(code: &BigUint, rank: usize) -> Result<Element> {
    let t = decode_tuple(code)?;
    if t.len() != rank + CommIndex::count(rank) {
        return Err(Error::NotACode);
    }
    let gamma = t[..rank].iter().map(|x| x.to_i64().ok_or(Error::NotACode)).collect::<Result<_>>()?;
    let beta_codes = t[rank..]
        .iter()
        .map(|x| x.to_biguint().ok_or(Error::NotACode))
        .collect::<Result<_>>()?;
    element_from_coordinates(&Coordinates { gamma, beta_codes }).map_err(|e| match e {
        Error::BadCoordinates(_) => Error::NotACode,
        other => other,
    })
}

pub fn coded_mul(c1: &BigUint, c2: &BigUint, rank: usize) -> Result<BigUint> {
    let g = decode_element(c1, rank)?;
    let h = decode_element(c2, rank)?;
    Ok(encode_element(&(&g * &h)))
}

pub fn coded_inv(c: &BigUint, rank: usize) -> Result<BigUint> {
    Ok(encode_element(&decode_element(c, rank)?.inv()))
}

/// Code of the identity element.
pub fn identity_code(rank: usize) -> BigUint {
    encode_element(&Element::identity(rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_element;
    use crate::words::parse_poly;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn zigzag_examples() {
        assert_eq!(zigzag(&BigInt::zero()), n(0));
        assert_eq!(zigzag(&BigInt::from(-1)), n(1));
        assert_eq!(zigzag(&BigInt::from(1)), n(2));
        assert_eq!(zigzag(&BigInt::from(-3)), n(5));
        for z in -100..=100 {
            assert_eq!(unzigzag(&zigzag(&BigInt::from(z))), BigInt::from(z));
        }
        for k in 0..200u64 {
            assert_eq!(zigzag(&unzigzag(&n(k))), n(k));
        }
    }

    #[test]
    fn pair_examples() {
        assert_eq!(pair(&n(0), &n(0)), n(0));
        assert_eq!(pair(&n(1), &n(2)), n(8));
        for m in 0..=50 {
            for k in 0..=50 {
                assert_eq!(unpair(&pair(&n(m), &n(k))), (n(m), n(k)));
            }
        }
        for z in 0..2000 {
            let (m, k) = unpair(&n(z));
            assert_eq!(pair(&m, &k), n(z));
        }
    }

    #[test]
    fn tuple_examples() {
        assert_eq!(encode_tuple(&[]), n(0));
        let t: Vec<BigInt> = [1, -2, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(decode_tuple(&encode_tuple(&t)).unwrap(), t);
        // every natural decodes, and re-encodes to itself
        for c in 0..3000u64 {
            let t = decode_tuple(&n(c)).unwrap();
            assert_eq!(encode_tuple(&t), n(c));
        }
        let huge = pair(&(n(1) << 40u32), &n(0)) + 1u32;
        assert!(matches!(decode_tuple(&huge), Err(Error::TooLarge(_))));
    }

    #[test]
    fn poly_examples() {
        let zero = LaurentPoly::zero(2);
        assert_eq!(encode_poly(&zero), pair(&n(0), &encode_tuple_i64(&[0, 0])));
        assert_eq!(decode_poly(&encode_poly(&zero), 2).unwrap(), zero);
        let q = parse_poly("a1^-1 + 2", 2).unwrap();
        assert_eq!(decode_poly(&encode_poly(&q), 2).unwrap(), q);
        assert!(decode_poly(&encode_poly(&q), 3).is_err());
    }

    #[test]
    fn poly_decode_rejects_non_image() {
        let rank = 1;
        let code = |u: &[i64], v: &[i64]| pair(&encode_tuple_i64(u), &encode_tuple_i64(v));
        assert_eq!(decode_poly(&code(&[1, 0], &[0]), rank).unwrap(), LaurentPoly::one(1));
        // zero coefficient
        assert_eq!(decode_poly(&code(&[0, 1], &[0]), rank), Err(Error::NotACode));
        // negative exponent in the numerator
        assert_eq!(decode_poly(&code(&[1, -1], &[0]), rank), Err(Error::NotACode));
        // monomials out of order
        assert_eq!(decode_poly(&code(&[1, 2, 1, 1], &[0]), rank), Err(Error::NotACode));
        // not in lowest terms: a1 / a1
        assert_eq!(decode_poly(&code(&[1, 1], &[1]), rank), Err(Error::NotACode));
        // zero with a denominator
        assert_eq!(decode_poly(&code(&[], &[2]), rank), Err(Error::NotACode));
        // wrong lengths
        assert_eq!(decode_poly(&code(&[1], &[0]), rank), Err(Error::NotACode));
        assert_eq!(decode_poly(&code(&[1, 0], &[0, 0]), rank), Err(Error::NotACode));
    }

    #[test]
    fn element_examples() {
        let e = Element::identity(3);
        let c = coordinates(&e);
        assert_eq!(c.gamma, vec![0, 0, 0]);
        assert!(c.beta_codes.iter().all(|b| *b == encode_poly(&LaurentPoly::zero(3))));
        assert_eq!(element_from_coordinates(&c).unwrap(), e);
        let g = parse_element("x3 x1^-2 [x3,x2]^(a1 - a3^-1) x2", 3).unwrap();
        assert_eq!(decode_element(&encode_element(&g), 3).unwrap(), g);
        let mut bad = coordinates(&e);
        bad.beta_codes[0] = encode_poly(&LaurentPoly::var(3, 3));
        assert!(matches!(element_from_coordinates(&bad), Err(Error::BadCoordinates(_))));
    }

    #[test]
    fn coded_group_operations() {
        let g = parse_element("x2 x1 [x2,x1]^(a2)", 2).unwrap();
        let h = parse_element("x1^-1 x2^3", 2).unwrap();
        let (cg, ch) = (encode_element(&g), encode_element(&h));
        assert_eq!(coded_mul(&cg, &identity_code(2), 2).unwrap(), cg);
        assert_eq!(coded_mul(&cg, &ch, 2).unwrap(), encode_element(&(&g * &h)));
        assert_eq!(coded_inv(&coded_inv(&cg, 2).unwrap(), 2).unwrap(), cg);
        assert_eq!(decode_element(&n(0), 2), Err(Error::NotACode));
    }
}
