//! Fox derivatives followed by abelianization, and the Magnus-style word problem.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::commod::{CollectedPart, CommIndex};
use crate::error::{Error, Result};
use crate::group::Element;
use crate::laurent::{LaurentPoly, Monomial};
use crate::words::GroupWord;

/// Abelianized Fox derivatives `(d_1 w, ..., d_n w)`.
pub type FoxVector = Vec<LaurentPoly>;

pub fn abelianization(w: &GroupWord, rank: usize) -> Result<Monomial> {
    w.check_rank(rank)?;
    let mut exps = vec![0i64; rank];
    for &(i, e) in w.letters() {
        exps[i - 1] = exps[i - 1].checked_add(e).ok_or(Error::Overflow)?;
    }
    Ok(Monomial::from_exponents(exps))
}

pub fn fox_all(w: &GroupWord, rank: usize) -> Result<FoxVector> {
    w.check_rank(rank)?;
    let mut d = vec![LaurentPoly::zero(rank); rank];
    let mut prefix = vec![0i64; rank];
    for &(i, e) in w.letters() {
        let a = Monomial::var(rank, i, 1);
        let eps = LaurentPoly::geometric_sum(&a, e)?;
        d[i - 1] += &eps.shift(&Monomial::from_exponents(prefix.clone()));
        prefix[i - 1] = prefix[i - 1].checked_add(e).ok_or(Error::Overflow)?;
    }
    Ok(d)
}

/// `d_k w` for `1 <= k <= rank`.
pub fn fox(w: &GroupWord, k: usize, rank: usize) -> Result<LaurentPoly> {
    if k == 0 || k > rank {
        return Err(Error::BadIndex { index: k, rank });
    }
    Ok(fox_all(w, rank)?.swap_remove(k - 1))
}

/// `sum_k d_k(w) (a_k - 1) = w̄ - 1`.
pub fn main_identity_holds(w: &GroupWord, rank: usize) -> Result<bool> {
    let d = fox_all(w, rank)?;
    let mut lhs = LaurentPoly::zero(rank);
    for (k, dk) in d.iter().enumerate() {
        let ak = &LaurentPoly::var(rank, k + 1) - &LaurentPoly::one(rank);
        lhs += &(dk * &ak);
    }
    let rhs = &LaurentPoly::monomial(abelianization(w, rank)?) - &LaurentPoly::one(rank);
    Ok(lhs == rhs)
}

/// Two words are equal in the group iff their abelianizations and Fox vectors agree.
pub fn magnus_equal(u: &GroupWord, v: &GroupWord, rank: usize) -> Result<bool> {
    Ok(abelianization(u, rank)? == abelianization(v, rank)? && fox_all(u, rank)? == fox_all(v, rank)?)
}

/// `d_k [xi,xj]`.
pub fn commutator_derivative(idx: CommIndex, k: usize, rank: usize) -> LaurentPoly {
    let base = LaurentPoly::monomial(&Monomial::var(rank, idx.i, -1) * &Monomial::var(rank, idx.j, -1));
    let one = LaurentPoly::one(rank);
    if k == idx.i {
        &base * &(&one - &LaurentPoly::var(rank, idx.j))
    } else if k == idx.j {
        &base * &(&LaurentPoly::var(rank, idx.i) - &one)
    } else {
        LaurentPoly::zero(rank)
    }
}

fn fox_of_part(u: &CollectedPart, k: usize) -> LaurentPoly {
    let mut d = LaurentPoly::zero(u.rank());
    for (idx, q) in u.iter() {
        if k == idx.i || k == idx.j {
            d += &(&q.involute() * &commutator_derivative(*idx, k, u.rank()));
        }
    }
    d
}

fn fox_of_gamma(gamma: &[i64], k: usize) -> LaurentPoly {
    let rank = gamma.len();
    let mut prefix = vec![0i64; rank];
    prefix[..k - 1].copy_from_slice(&gamma[..k - 1]);
    LaurentPoly::geometric_sum(&Monomial::var(rank, k, 1), gamma[k - 1])
        .expect("nontrivial base")
        .shift(&Monomial::from_exponents(prefix))
}

/// `d_k` of a normal form, computed from its coordinates.
pub fn fox_of_element(g: &Element, k: usize) -> Result<LaurentPoly> {
    let rank = g.rank();
    if k == 0 || k > rank {
        return Err(Error::BadIndex { index: k, rank });
    }
    let shift = Monomial::from_exponents(g.gamma().to_vec());
    Ok(&fox_of_gamma(g.gamma(), k) + &fox_of_part(g.part(), k).shift(&shift))
}

pub fn fox_all_of_element(g: &Element) -> FoxVector {
    (1..=g.rank()).map(|k| fox_of_element(g, k).expect("index in range")).collect()
}

/// Recovers the normal form of `w` from Fox derivatives alone, one commutator
/// row `[xt, x*]` at a time on the retraction of `w` to `x1..xt`.
pub fn recover_collected(w: &GroupWord, rank: usize) -> Result<Element> {
    let gamma = abelianization(w, rank)?.exponents().to_vec();
    let mut known = CollectedPart::zero(rank);
    for t in 2..=rank {
        let wt = w.retract(|i| i <= t);
        let mut gamma_t = gamma.clone();
        for e in gamma_t.iter_mut().skip(t) {
            *e = 0;
        }
        let partial = Element::from_parts(gamma_t.clone(), known.clone())?;
        let unshift = Monomial::from_exponents(gamma_t.iter().map(|e| -e).collect());
        let mut row = Vec::new();
        for j in 1..t {
            let r = (&fox(&wt, j, rank)? - &fox_of_element(&partial, j)?).shift(&unshift);
            let idx = CommIndex { i: t, j };
            let q = r.divide_exact(&commutator_derivative(idx, j, rank)).map_err(|_| {
                Error::InternalInconsistency(format!("Fox residue for [x{t},x{j}] is not divisible"))
            })?;
            row.push((idx, q.involute()));
        }
        let row = CollectedPart::new(rank, row)
            .map_err(|e| Error::InternalInconsistency(format!("recovered row {t} is not collected: {e}")))?;
        known = known.madd(&row);
    }
    let g = Element::from_parts(gamma, known)?;
    if fox_all_of_element(&g) != fox_all(w, rank)? {
        return Err(Error::InternalInconsistency("recovered element fails the Fox check".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::words::parse_word;

    fn w(s: &str, rank: usize) -> GroupWord {
        parse_word(s, rank).unwrap()
    }

    #[test]
    fn derivatives_of_small_words() {
        let one = LaurentPoly::one(2);
        assert_eq!(fox(&w("x1", 2), 1, 2).unwrap(), one);
        assert!(fox(&w("x1", 2), 2, 2).unwrap().is_zero());
        assert_eq!(fox(&w("x1^-1", 2), 1, 2).unwrap().to_string(), "-a1^-1");
        assert_eq!(fox(&w("x1 x2", 2), 2, 2).unwrap().to_string(), "a1");
        assert_eq!(fox(&w("x1^3", 2), 1, 2).unwrap().to_string(), "a1^2 + a1 + 1");
        let c = w("[x1,x2]", 2);
        assert_eq!(fox(&c, 1, 2).unwrap(), commutator_derivative(CommIndex { i: 1, j: 2 }, 1, 2));
        assert!(fox(&c, 3, 2).is_err());
    }

    #[test]
    fn commutator_derivatives_match_words() {
        for (i, j) in [(2, 1), (3, 1), (3, 2)] {
            let c = GroupWord::commutator(&GroupWord::letter(i, 1), &GroupWord::letter(j, 1));
            for k in 1..=3 {
                assert_eq!(fox(&c, k, 3).unwrap(), commutator_derivative(CommIndex { i, j }, k, 3));
            }
        }
    }

    #[test]
    fn main_identity() {
        for s in ["", "x1", "x2 x1^-3 x3", "[x1,x2] x3^4 (x2 x1)^-2"] {
            assert!(main_identity_holds(&w(s, 3), 3).unwrap());
        }
    }

    #[test]
    fn magnus_word_problem() {
        assert!(magnus_equal(&w("[x1,x2][x3,x1]", 3), &w("[x3,x1][x1,x2]", 3), 3).unwrap());
        assert!(!magnus_equal(&w("x1 x2", 2), &w("x2 x1", 2), 2).unwrap());
        // metabelian law: [[x1,x2],[x3,x1]] = 1
        assert!(magnus_equal(&w("[[x1,x2],[x3,x1]]", 3), &w("", 3), 3).unwrap());
        // [[x1,x2],x3] is nontrivial
        assert!(!magnus_equal(&w("[[x1,x2],x3]", 3), &w("", 3), 3).unwrap());
    }

    #[test]
    fn element_derivatives_match_words() {
        for s in ["x2 x1", "x3 x1^-2 [x2,x3] x2^2", "x1^-1 [x3,x2] x1", "(x1 x2^-1 x3)^3"] {
            let word = w(s, 3);
            let g = Element::from_word(&word, 3).unwrap();
            assert_eq!(fox_all_of_element(&g), fox_all(&word, 3).unwrap(), "{s}");
        }
    }

    #[test]
    fn recovery_matches_collection() {
        for s in ["", "x1", "x2 x1", "x3 x2 x1", "x2^-1 [x3,x1] x2 x1^2", "(x1 x3^-1 x2)^-3 x4 x1"] {
            let word = w(s, 4);
            let g = Element::from_word(&word, 4).unwrap();
            assert_eq!(recover_collected(&word, 4).unwrap(), g, "{s}");
        }
    }
}
