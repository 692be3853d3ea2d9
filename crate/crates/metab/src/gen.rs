//! Seeded random generators for words, polynomials, module expressions and elements.

use metabelian_core::commod::{collect, jacobi_relator, CollectedPart, CommIndex, RawModuleExpr};
use metabelian_core::words::expand_module_expr;
use metabelian_core::{BigInt, Element, GroupWord, LaurentPoly, Monomial};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

/// A generator stream derived from a seed and a stream label.
pub fn rng(seed: u64, stream: u64) -> TestRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn nonzero(rng: &mut impl Rng, max: i64) -> i64 {
    let e = rng.gen_range(1..=max);
    if rng.gen_bool(0.5) {
        -e
    } else {
        e
    }
}

/// Up to `max_len` letters with exponents in `±1..=max_exp`, freely reduced.
pub fn word(rng: &mut impl Rng, rank: usize, max_len: usize, max_exp: i64) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    GroupWord::from_letters((0..len).map(|_| (rng.gen_range(1..=rank), nonzero(rng, max_exp))))
}

/// A word of exactly `len` letters before reduction.
pub fn word_of_len(rng: &mut impl Rng, rank: usize, len: usize, max_exp: i64) -> GroupWord {
    GroupWord::from_letters((0..len).map(|_| (rng.gen_range(1..=rank), nonzero(rng, max_exp))))
}

#[derive(Clone, Copy, Debug)]
pub struct PolyShape {
    pub max_terms: usize,
    pub max_coef: i64,
    pub min_exp: i64,
    pub max_exp: i64,
}

impl PolyShape {
    pub const SMALL: PolyShape = PolyShape { max_terms: 4, max_coef: 3, min_exp: -2, max_exp: 2 };
    pub const POLYNOMIAL: PolyShape = PolyShape { max_terms: 4, max_coef: 3, min_exp: 0, max_exp: 2 };
}

/// A polynomial in `a1..a_{max_var}`; may be zero.
pub fn poly(rng: &mut impl Rng, rank: usize, max_var: usize, shape: PolyShape) -> LaurentPoly {
    let terms = rng.gen_range(0..=shape.max_terms);
    let mut q = LaurentPoly::zero(rank);
    for _ in 0..terms {
        let exps: Vec<i64> = (1..=rank)
            .map(|k| if k <= max_var { rng.gen_range(shape.min_exp..=shape.max_exp) } else { 0 })
            .collect();
        q.add_term(Monomial::from_exponents(exps), BigInt::from(nonzero(rng, shape.max_coef)));
    }
    q
}

pub fn nonzero_poly(rng: &mut impl Rng, rank: usize, max_var: usize, shape: PolyShape) -> LaurentPoly {
    loop {
        let q = poly(rng, rank, max_var, shape);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn comm_index(rng: &mut impl Rng, rank: usize) -> CommIndex {
    let i = rng.gen_range(2..=rank);
    CommIndex { i, j: rng.gen_range(1..i) }
}

/// Up to `max_factors` factors with unrestricted exponents in all variables.
pub fn raw_expr(rng: &mut impl Rng, rank: usize, max_factors: usize, shape: PolyShape) -> RawModuleExpr {
    let n = rng.gen_range(0..=max_factors);
    let mut e = RawModuleExpr::new(rank);
    for _ in 0..n {
        let idx = comm_index(rng, rank);
        e.push(idx, poly(rng, rank, rank, shape)).expect("index within rank");
    }
    e
}

/// A collected part built directly with `beta_ij` in `a1..ai`.
pub fn collected(rng: &mut impl Rng, rank: usize, shape: PolyShape) -> CollectedPart {
    let mut beta = Vec::new();
    for idx in CommIndex::all(rank) {
        if rng.gen_bool(0.5) {
            beta.push((idx, poly(rng, rank, idx.i, shape)));
        }
    }
    CollectedPart::new(rank, beta).expect("support within a1..ai")
}

pub fn element(rng: &mut impl Rng, rank: usize, max_len: usize) -> Element {
    let w = word(rng, rank, max_len, 3);
    let g = Element::from_word(&w, rank).expect("letters within rank");
    if rng.gen_bool(0.5) {
        &g * &Element::from_part(collected(rng, rank, PolyShape::SMALL))
    } else {
        g
    }
}

/// An element outside `G'`.
pub fn element_outside_commutant(rng: &mut impl Rng, rank: usize, max_len: usize) -> Element {
    loop {
        let g = element(rng, rank, max_len);
        if !g.in_commutant() {
            return g;
        }
    }
}

pub fn point(rng: &mut impl Rng, rank: usize, choices: &[i64]) -> Vec<i64> {
    (0..rank).map(|_| *choices.choose(rng).expect("nonempty choices")).collect()
}

/// How a pair of words in a near-miss sample was built.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairKind {
    Independent,
    Rewritten,
    JacobiInserted,
    MetabelianInserted,
    CommutatorInserted,
}

/// A word pair: independent random words, or `p q` against `p r q` where `r`
/// is a Jacobi relator, a double commutator of commutators, or `[c, w]` with
/// `c` a basic commutator.
pub fn word_pair(rng: &mut impl Rng, rank: usize, max_len: usize, kind: PairKind) -> (GroupWord, GroupWord) {
    let p = word(rng, rank, max_len / 2, 3);
    let q = word(rng, rank, max_len / 2, 3);
    let pq = p.concat(&q);
    let insert = |r: &GroupWord| p.concat(r).concat(&q);
    match kind {
        PairKind::Independent => (word(rng, rank, max_len, 5), word(rng, rank, max_len, 5)),
        PairKind::Rewritten => {
            let g = Element::from_word(&pq, rank).expect("letters within rank");
            (pq, metabelian_core::words::element_to_word(&g).expect("small coefficients"))
        }
        PairKind::JacobiInserted if rank >= 3 => {
            let k = rng.gen_range(3..=rank);
            let i = rng.gen_range(2..k);
            let j = rng.gen_range(1..i);
            let delta = nonzero(rng, 3);
            let r = jacobi_relator(i, j, k, delta, rank).expect("valid indices");
            let r = expand_module_expr(&r).expect("small coefficients");
            (pq.clone(), insert(&r))
        }
        PairKind::JacobiInserted | PairKind::MetabelianInserted => {
            let c1 = basic_commutator(rng, rank).conjugate(&word(rng, rank, 3, 2));
            let c2 = basic_commutator(rng, rank).conjugate(&word(rng, rank, 3, 2));
            (pq.clone(), insert(&GroupWord::commutator(&c1, &c2)))
        }
        PairKind::CommutatorInserted => {
            let c = basic_commutator(rng, rank);
            let w = word(rng, rank, 4, 2);
            (pq.clone(), insert(&GroupWord::commutator(&c, &w)))
        }
    }
}

fn basic_commutator(rng: &mut impl Rng, rank: usize) -> GroupWord {
    let idx = comm_index(rng, rank);
    GroupWord::commutator(&GroupWord::letter(idx.i, 1), &GroupWord::letter(idx.j, 1))
}

/// Collects a random raw expression and returns both.
pub fn raw_and_collected(rng: &mut impl Rng, rank: usize) -> (RawModuleExpr, CollectedPart) {
    let e = raw_expr(rng, rank, 3, PolyShape::SMALL);
    let c = collect(&e);
    (e, c)
}
