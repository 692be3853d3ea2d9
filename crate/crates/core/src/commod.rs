//! The commutator subgroup `G'` as a module over the Laurent ring.
//!
//! A [`RawModuleExpr`] is any product `prod [xi,xj]^(Q_ij)` with unrestricted
//! Laurent exponents. [`collect`] rewrites it into a [`CollectedPart`], where the
//! exponent of `[xi,xj]` only involves `a1..ai`. Collected parts are unique, so
//! equality of `CollectedPart` values is equality in `G'`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};

/// The module generator `[xi,xj]` with `1 <= j < i`. Ordered lexicographically by `(i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CommIndex {
    pub i: usize,
    pub j: usize,
}

impl CommIndex {
    pub fn new(i: usize, j: usize, rank: usize) -> Result<Self> {
        if j >= 1 && j < i && i <= rank {
            Ok(CommIndex { i, j })
        } else {
            Err(Error::BadIndices { i, j, rank })
        }
    }

    /// All `n(n-1)/2` generators in coordinate order `(2,1), (3,1), (3,2), (4,1), ...`.
    pub fn all(rank: usize) -> impl Iterator<Item = CommIndex> {
        (2..=rank).flat_map(|i| (1..i).map(move |j| CommIndex { i, j }))
    }

    pub fn count(rank: usize) -> usize {
        rank * rank.saturating_sub(1) / 2
    }

    /// Position of this index in [`CommIndex::all`].
    pub fn position(&self) -> usize {
        (self.i - 1) * (self.i - 2) / 2 + (self.j - 1)
    }
}

/// An uncollected product of module generators raised to Laurent exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RawModuleExpr {
    rank: usize,
    factors: Vec<(CommIndex, LaurentPoly)>,
}

impl RawModuleExpr {
    pub fn new(rank: usize) -> Self {
        RawModuleExpr { rank, factors: Vec::new() }
    }

    pub fn from_factors(
        rank: usize,
        factors: impl IntoIterator<Item = (CommIndex, LaurentPoly)>,
    ) -> Result<Self> {
        let mut e = Self::new(rank);
        for (idx, q) in factors {
            e.push(idx, q)?;
        }
        Ok(e)
    }

    pub fn push(&mut self, idx: CommIndex, q: LaurentPoly) -> Result<()> {
        CommIndex::new(idx.i, idx.j, self.rank)?;
        if q.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: q.rank() });
        }
        self.factors.push((idx, q));
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[(CommIndex, LaurentPoly)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Concatenation (the product in `G'`).
    pub fn extend(&mut self, other: &RawModuleExpr) {
        assert_eq!(self.rank, other.rank, "module expression rank mismatch");
        self.factors.extend(other.factors.iter().cloned());
    }

    pub fn negated(&self) -> Self {
        RawModuleExpr {
            rank: self.rank,
            factors: self.factors.iter().map(|(i, q)| (*i, -q)).collect(),
        }
    }
}

/// The `G'`-component of a normal form: `beta[(i,j)]` only involves `a1..ai`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CollectedPart {
    rank: usize,
    beta: BTreeMap<CommIndex, LaurentPoly>,
}

impl CollectedPart {
    pub fn zero(rank: usize) -> Self {
        CollectedPart { rank, beta: BTreeMap::new() }
    }

    /// Builds a part, rejecting exponents that violate the collected-support constraint.
    pub fn new(rank: usize, beta: impl IntoIterator<Item = (CommIndex, LaurentPoly)>) -> Result<Self> {
        let mut part = Self::zero(rank);
        for (idx, q) in beta {
            CommIndex::new(idx.i, idx.j, rank)?;
            if q.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: q.rank() });
            }
            if q.max_var() > idx.i {
                return Err(Error::BadCoordinates(format!(
                    "exponent of [x{},x{}] involves a{}",
                    idx.i,
                    idx.j,
                    q.max_var()
                )));
            }
            part.add_collected(idx, &q);
        }
        Ok(part)
    }

    /// The single generator `[xi,xj]`.
    pub fn generator(idx: CommIndex, rank: usize) -> Self {
        let mut part = Self::zero(rank);
        part.beta.insert(idx, LaurentPoly::one(rank));
        part
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.beta.is_empty()
    }

    pub fn get(&self, idx: CommIndex) -> Option<&LaurentPoly> {
        self.beta.get(&idx)
    }

    pub fn coefficient(&self, idx: CommIndex) -> LaurentPoly {
        self.beta.get(&idx).cloned().unwrap_or_else(|| LaurentPoly::zero(self.rank))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CommIndex, &LaurentPoly)> {
        self.beta.iter()
    }

    pub fn to_raw(&self) -> RawModuleExpr {
        RawModuleExpr {
            rank: self.rank,
            factors: self.beta.iter().map(|(i, q)| (*i, q.clone())).collect(),
        }
    }

    fn add_collected(&mut self, idx: CommIndex, q: &LaurentPoly) {
        if q.is_zero() {
            return;
        }
        let slot = self
            .beta
            .entry(idx)
            .or_insert_with(|| LaurentPoly::zero(q.rank()));
        *slot += q;
        if slot.is_zero() {
            self.beta.remove(&idx);
        }
    }

    pub fn madd(&self, other: &CollectedPart) -> CollectedPart {
        assert_eq!(self.rank, other.rank, "collected part rank mismatch");
        let mut out = self.clone();
        for (idx, q) in &other.beta {
            out.add_collected(*idx, q);
        }
        out
    }

    pub fn mneg(&self) -> CollectedPart {
        CollectedPart {
            rank: self.rank,
            beta: self.beta.iter().map(|(i, q)| (*i, -q)).collect(),
        }
    }

    pub fn msub(&self, other: &CollectedPart) -> CollectedPart {
        self.madd(&other.mneg())
    }

    /// Integer multiple (the `m`-th power in `G'`).
    pub fn mscale(&self, m: &BigInt) -> CollectedPart {
        let mut out = Self::zero(self.rank);
        for (idx, q) in &self.beta {
            out.add_collected(*idx, &q.scale(m));
        }
        out
    }

    /// Action of a ring element; the products are re-collected.
    pub fn mact(&self, q: &LaurentPoly) -> CollectedPart {
        assert_eq!(self.rank, q.rank(), "collected part rank mismatch");
        if let Some(c) = q.as_constant() {
            return self.mscale(&c);
        }
        let raw = RawModuleExpr {
            rank: self.rank,
            factors: self.beta.iter().map(|(i, b)| (*i, b * q)).collect(),
        };
        collect(&raw)
    }

    /// Image under the endomorphism `x_i -> 1` for `i` not in `keep`.
    pub fn retract_part(&self, keep: &BTreeSet<usize>) -> CollectedPart {
        let mut out = Self::zero(self.rank);
        for (idx, q) in &self.beta {
            if keep.contains(&idx.i) && keep.contains(&idx.j) {
                // support stays inside a1..ai, so no re-collection is needed
                out.add_collected(*idx, &q.retract(keep));
            }
        }
        out
    }

    /// True when every exponent only involves `a1..ai`.
    pub fn is_collected(&self) -> bool {
        self.beta.iter().all(|(idx, q)| q.max_var() <= idx.i && !q.is_zero())
    }
}

/// `[xi,xj]^(a_k^delta - 1) = [xk,xj]^((ai-1) e) [xk,xi]^((1-aj) e)` with
/// `e = (a_k^delta - 1)/(a_k - 1)`, for `j < i < k`.
pub fn jacobi_step(i: usize, j: usize, k: usize, delta: i64, rank: usize) -> Result<RawModuleExpr> {
    if !(1 <= j && j < i && i < k && k <= rank) {
        return Err(Error::BadIndices { i, j, rank });
    }
    let eps = LaurentPoly::geometric_sum(&Monomial::var(rank, k, 1), delta)?;
    let one = LaurentPoly::one(rank);
    let ai_minus_1 = &LaurentPoly::var(rank, i) - &one;
    let one_minus_aj = &one - &LaurentPoly::var(rank, j);
    let mut out = RawModuleExpr::new(rank);
    for (idx, coef) in [
        (CommIndex { i: k, j }, &ai_minus_1 * &eps),
        (CommIndex { i: k, j: i }, &one_minus_aj * &eps),
    ] {
        if !coef.is_zero() {
            out.factors.push((idx, coef));
        }
    }
    Ok(out)
}

/// The Jacobi relator `[xi,xj]^(a_k^delta - 1) * (jacobi_step)^-1`, which is trivial in `G'`.
pub fn jacobi_relator(i: usize, j: usize, k: usize, delta: i64, rank: usize) -> Result<RawModuleExpr> {
    let rhs = jacobi_step(i, j, k, delta, rank)?;
    let lhs_coef = &LaurentPoly::monomial(Monomial::var(rank, k, delta)) - &LaurentPoly::one(rank);
    let mut out = RawModuleExpr::new(rank);
    out.factors.push((CommIndex { i, j }, lhs_coef));
    out.extend(&rhs.negated());
    Ok(out)
}

/// Rewrites an arbitrary product of module generators into collected form.
///
/// A term `c*M` in the exponent of `[xi,xj]` with `M = M1 * ak^d * M2`
/// (`M1` on `a1..ai`, `k > i` the least offending variable, `M2` on variables
/// above `k`) is replaced using one Jacobi step. Generators are processed in
/// increasing `(i, j)` order; every rewrite only feeds generators `[xk, *]` with
/// `k > i`, so the work list drains.
pub fn collect(e: &RawModuleExpr) -> CollectedPart {
    let rank = e.rank;
    let mut work: BTreeMap<CommIndex, LaurentPoly> = BTreeMap::new();
    for (idx, q) in &e.factors {
        let slot = work.entry(*idx).or_insert_with(|| LaurentPoly::zero(rank));
        *slot += q;
    }
    let mut out = CollectedPart::zero(rank);
    while let Some((idx, q)) = work.pop_first() {
        let done = collect_generator(idx, q, rank, &mut work);
        out.add_collected(idx, &done);
    }
    out
}

fn collect_generator(
    idx: CommIndex,
    mut q: LaurentPoly,
    rank: usize,
    work: &mut BTreeMap<CommIndex, LaurentPoly>,
) -> LaurentPoly {
    let CommIndex { i, j } = idx;
    let one = LaurentPoly::one(rank);
    let ai_minus_1 = &LaurentPoly::var(rank, i) - &one;
    let one_minus_aj = &one - &LaurentPoly::var(rank, j);
    let mut done = LaurentPoly::zero(rank);
    loop {
        // residues grouped by the least offending variable and its exponent
        let mut groups: BTreeMap<(usize, i64), LaurentPoly> = BTreeMap::new();
        for (m, c) in q.terms() {
            let offending = m.exponents()[i..].iter().position(|&e| e != 0);
            match offending {
                None => done.add_term(m.clone(), c.clone()),
                Some(off) => {
                    let k = i + off + 1;
                    let delta = m.exponent(k);
                    let rest = m.restrict(|v| v != k);
                    groups
                        .entry((k, delta))
                        .or_insert_with(|| LaurentPoly::zero(rank))
                        .add_term(rest, c.clone());
                }
            }
        }
        if groups.is_empty() {
            return done;
        }
        let mut next = LaurentPoly::zero(rank);
        for ((k, delta), rest) in groups {
            let eps = LaurentPoly::geometric_sum(&Monomial::var(rank, k, 1), delta)
                .expect("offending variable has nonzero exponent");
            let base = &eps * &rest;
            add_work(work, CommIndex { i: k, j }, &ai_minus_1 * &base, rank);
            add_work(work, CommIndex { i: k, j: i }, &one_minus_aj * &base, rank);
            next += &rest;
        }
        q = next;
    }
}

fn add_work(work: &mut BTreeMap<CommIndex, LaurentPoly>, idx: CommIndex, q: LaurentPoly, rank: usize) {
    if q.is_zero() {
        return;
    }
    let slot = work.entry(idx).or_insert_with(|| LaurentPoly::zero(rank));
    *slot += &q;
}

/// Sum of the factors of `e` without collecting, keyed by generator.
pub fn raw_sum(e: &RawModuleExpr) -> BTreeMap<CommIndex, LaurentPoly> {
    let mut out: BTreeMap<CommIndex, LaurentPoly> = BTreeMap::new();
    for (idx, q) in &e.factors {
        let slot = out.entry(*idx).or_insert_with(|| LaurentPoly::zero(e.rank));
        *slot += q;
    }
    out.retain(|_, q| !q.is_zero());
    out
}

impl From<&CollectedPart> for RawModuleExpr {
    fn from(p: &CollectedPart) -> Self {
        p.to_raw()
    }
}
