//! Seeded property checks. The full-size suite backs the acceptance test; the
//! per-rank subset backs `metab check-axioms`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use metabelian_core::arith::{
    coded_mul, decode_element, decode_poly, decode_tuple, encode_element, encode_poly, encode_tuple, pair, unpair,
    unzigzag, zigzag,
};
use metabelian_core::commod::{collect, jacobi_relator, CommIndex};
use metabelian_core::evalhom::{
    power_action_check, quotient_presentation, separating_point, separating_point_distinct, EvalPoint,
};
use metabelian_core::fox::{fox_all, fox_all_of_element, magnus_equal, main_identity_holds, recover_collected};
use metabelian_core::group::{
    block_product, check_exp_axioms, delta_comm_poly, delta_commutator_check, power_commutator_sides, power_residue,
};
use metabelian_core::words::{
    element_to_word, expand_module_expr, parse_element, parse_poly, parse_word, print_element,
};
use metabelian_core::{BigInt, BigUint, CollectedPart, Element, GroupWord, LaurentPoly};
use num_traits::Zero;
use rand::Rng;

use crate::gen::{self, PairKind, PolyShape, TestRng};

/// Outcome of one criterion.
#[derive(Clone, Debug)]
pub struct Report {
    pub id: u32,
    pub title: &'static str,
    pub checks: u64,
    pub failed: u64,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(id: u32, title: &'static str) -> Self {
        Report { id, title, checks: 0, failed: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 20 {
                self.failures.push(what());
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {}: {} ({} checks", self.id, verdict, self.title, self.checks)?;
        if self.failed > 0 {
            write!(f, ", {} failed", self.failed)?;
        }
        write!(f, ")")?;
        for n in &self.notes {
            write!(f, "; {n}")?;
        }
        for fail in self.failures.iter().take(5) {
            write!(f, "\n    {fail}")?;
        }
        Ok(())
    }
}

/// Sample sizes for one run.
#[derive(Clone, Copy, Debug)]
pub struct Sizes {
    pub triples: usize,
    pub pairs: usize,
    pub near_miss_share: f64,
    pub raw_exprs: usize,
    pub blocks: usize,
    pub power_comm_pairs: usize,
    pub residues: usize,
    pub fox_words: usize,
    pub fox_elements: usize,
    pub recoveries: usize,
    pub delta_words: usize,
    pub exp_axioms: usize,
    pub tuples: usize,
    pub polys: usize,
    pub elements: usize,
    pub coded_pairs: usize,
    pub separations: usize,
    pub separation_sets: usize,
    pub action_cases: usize,
    pub action_points: usize,
    pub parser_values: usize,
}

impl Sizes {
    /// The sizes named by the acceptance criteria.
    pub const FULL: Sizes = Sizes {
        triples: 1000,
        pairs: 1000,
        near_miss_share: 0.4,
        raw_exprs: 500,
        blocks: 500,
        power_comm_pairs: 12,
        residues: 300,
        fox_words: 1000,
        fox_elements: 300,
        recoveries: 300,
        delta_words: 40,
        exp_axioms: 500,
        tuples: 10_000,
        polys: 10_000,
        elements: 1000,
        coded_pairs: 500,
        separations: 200,
        separation_sets: 50,
        action_cases: 100,
        action_points: 5,
        parser_values: 1000,
    };

    /// Every count set to `samples` (the power-commutator grid is kept small).
    pub fn uniform(samples: usize) -> Sizes {
        Sizes {
            triples: samples,
            pairs: samples,
            near_miss_share: 0.4,
            raw_exprs: samples,
            blocks: samples,
            power_comm_pairs: samples.clamp(1, 12),
            residues: samples,
            fox_words: samples,
            fox_elements: samples,
            recoveries: samples,
            delta_words: samples.clamp(1, 40),
            exp_axioms: samples,
            tuples: samples,
            polys: samples,
            elements: samples,
            coded_pairs: samples,
            separations: samples,
            separation_sets: samples,
            action_cases: samples,
            action_points: 5,
            parser_values: samples,
        }
    }
}

fn stream(seed: u64, id: u32) -> TestRng {
    gen::rng(seed, id as u64)
}

fn elem(w: &GroupWord, rank: usize) -> Element {
    Element::from_word(w, rank).expect("generated letters are within rank")
}

/// 1. Associativity, identity and inverse laws on random word triples.
pub fn group_axioms(seed: u64, ranks: &[usize], sizes: &Sizes) -> Report {
    let mut r = Report::new(1, "group axioms on random word triples");
    let mut rng = stream(seed, 1);
    for &n in ranks {
        let e = Element::identity(n);
        for _ in 0..sizes.triples {
            let ws: Vec<GroupWord> = (0..3).map(|_| gen::word(&mut rng, n, 20, 5)).collect();
            let [a, b, c] = [elem(&ws[0], n), elem(&ws[1], n), elem(&ws[2], n)];
            r.check(&(&a * &b) * &c == &a * &(&b * &c), || format!("rank {n}: associativity fails for {ws:?}"));
            r.check(&a * &e == a && &e * &a == a, || format!("rank {n}: identity law fails for {}", ws[0]));
            r.check((&a * &a.inv()).is_identity() && (&a.inv() * &a).is_identity(), || {
                format!("rank {n}: inverse law fails for {}", ws[0])
            });
        }
    }
    r
}

/// 2. Normal-form equality agrees with the Fox oracle, including engineered near misses.
pub fn oracle_equivalence(seed: u64, ranks: &[usize], sizes: &Sizes) -> Report {
    let mut r = Report::new(2, "normal-form equality agrees with the Fox oracle");
    let mut rng = stream(seed, 2);
    let near = [PairKind::JacobiInserted, PairKind::MetabelianInserted, PairKind::CommutatorInserted];
    let mut engineered = 0;
    let mut equal = 0;
    for &n in ranks {
        let near_count = (sizes.pairs as f64 * sizes.near_miss_share).ceil() as usize;
        for s in 0..sizes.pairs {
            let kind = if s < near_count {
                engineered += 1;
                near[s % near.len()]
            } else if s % 5 == 0 {
                PairKind::Rewritten
            } else {
                PairKind::Independent
            };
            let (u, v) = gen::word_pair(&mut rng, n, 16, kind);
            let nf = elem(&u, n) == elem(&v, n);
            let fox = magnus_equal(&u, &v, n).expect("generated letters are within rank");
            equal += nf as usize;
            r.check(nf == fox, || format!("rank {n} {kind:?}: nf={nf} fox={fox} for `{u}` vs `{v}`"));
            let expected = match kind {
                PairKind::Rewritten | PairKind::JacobiInserted | PairKind::MetabelianInserted => Some(true),
                _ => None,
            };
            if let Some(e) = expected {
                r.check(nf == e, || format!("rank {n} {kind:?}: expected equal words `{u}` vs `{v}`"));
            }
        }
    }
    r.note(format!("{engineered} engineered near-miss pairs, {equal} equal pairs"));
    if sizes.pairs >= 500 {
        r.check(engineered >= 200, || format!("only {engineered} engineered pairs"));
    }
    r
}

/// 3. Collection output is collected, idempotent and Fox-equivalent; relators collect to zero.
pub fn collection_soundness(seed: u64, ranks: &[usize], sizes: &Sizes) -> Report {
    let mut r = Report::new(3, "collection soundness and Jacobi relators");
    let mut rng = stream(seed, 3);
    for &n in ranks {
        for _ in 0..sizes.raw_exprs {
            let e = gen::raw_expr(&mut rng, n, 3, PolyShape::SMALL);
            let c = collect(&e);
            r.check(c.is_collected(), || format!("rank {n}: collect output not support-constrained: {e:?}"));
            r.check(collect(&c.to_raw()) == c, || format!("rank {n}: collect not idempotent: {e:?}"));
            let w = expand_module_expr(&e).expect("small coefficients");
            let fox_ok = fox_all(&w, n).expect("within rank") == fox_all_of_element(&Element::from_part(c));
            r.check(fox_ok, || format!("rank {n}: collect changes the Fox image of {e:?}"));
        }
    }
    let n = 4;
    for k in 3..=n {
        for i in 2..k {
            for j in 1..i {
                for delta in -4..=4 {
                    let rel = jacobi_relator(i, j, k, delta, n).expect("valid indices");
                    r.check(collect(&rel).is_zero(), || format!("relator ({i},{j},{k}) delta={delta} is nonzero"));
                }
            }
        }
    }
    r
}

/// 4. Closed forms: block products, power commutators and power residues.
pub fn formula_fidelity(seed: u64, ranks: &[usize], sizes: &Sizes) -> Report {
    let mut r = Report::new(4, "block products, power commutators, power residues");
    let mut rng = stream(seed, 4);
    for s in 0..sizes.blocks {
        let n = ranks[s % ranks.len()];
        let gamma: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
        let delta: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
        let w = GroupWord::from_letters(
            gamma.iter().enumerate().chain(delta.iter().enumerate()).map(|(k, &e)| (k + 1, e)),
        );
        let ok = block_product(&gamma, &delta).expect("same rank") == elem(&w, n);
        r.check(ok, || format!("block product {gamma:?} * {delta:?}"));
    }
    for s in 0..sizes.power_comm_pairs {
        let n = ranks[s % ranks.len()];
        let z = gen::element_outside_commutant(&mut rng, n, 6);
        let g = gen::element_outside_commutant(&mut rng, n, 6);
        for gamma in -6..=6 {
            for delta in -6..=6 {
                let (lhs, rhs) = power_commutator_sides(&z, &g, gamma, delta).expect("nontrivial abelianizations");
                r.check(lhs == rhs, || format!("[z^{gamma}, g^{delta}] with z={z}, g={g}"));
            }
        }
    }
    for s in 0..sizes.residues {
        let n = ranks[s % ranks.len()];
        let w = gen::element(&mut rng, n, 8);
        let g = Element::from_part(gen::collected(&mut rng, n, PolyShape::SMALL));
        let m = rng.gen_range(-8..=8);
        let ok = power_residue(&w, &g, m).map(|u| u.in_commutant()).unwrap_or(false);
        r.check(ok, || format!("power residue outside G' for w={w}, g={g}, m={m}"));
    }
    r
}

/// 5. Fox main identity, Fox of normal forms, and the power rule.
pub fn fox_calculus(seed: u64, ranks: &[usize], sizes: &Sizes) -> Report {
    let mut r = Report::new(5, "Fox calculus");
    let mut rng = stream(seed, 5);
    for s in 0..sizes.fox_words {
        let n = ranks[s % ranks.len()];
        let w = gen::word(&mut rng, n, 20, 5);
        r.check(main_identity_holds(&w, n).expect("within rank"), || format!("main identity fails for {w}"));
    }
    for s in 0..sizes.fox_elements {
        let n = ranks[s % ranks.len()];
        let g = gen::element(&mut rng, n, 10);
        let w = element_to_word(&g).expect("small coefficients");
        r.check(fox_all_of_element(&g) == fox_all(&w, n).expect("within rank"), || format!("fox_of_element differs for {g}"));
    }
    for s in 0..sizes.fox_words / 4 {
        let n = ranks[s % ranks.len()];
        let w = gen::word(&mut rng, n, 6, 3);
        let d = fox_all(&w, n).expect("within rank");
        let ab = metabelian_core::fox::abelianization(&w, n).expect("within rank");
        for alpha in -6..=6i64 {
            let factor = if ab.is_one() {
                LaurentPoly::constant(n, alpha)
            } else {
                LaurentPoly::geometric_sum(&ab, alpha).expect("nontrivial base")
            };
            let explicit = fox_all(&w.pow(alpha).expect("short word"), n).expect("within rank");
            let rule: Vec<LaurentPoly> = d.iter().map(|q| &factor * q).collect();
            r.check(explicit == rule, || format!("power rule fails for ({w})^{alpha}"));
        }
    }
    r
}

/// 6. Fox-based recovery agrees with collection.
pub fn recovery(seed: u64, ranks: &[usize], sizes: &Sizes) -> Report {
    let mut r = Report::new(6, "recovery from Fox derivatives agrees with collection");
    let mut rng = stream(seed, 6);
    for s in 0..sizes.recoveries {
        let n = ranks[s % ranks.len()];
        let (e, c) = gen::raw_and_collected(&mut rng, n);
        let w = expand_module_expr(&e).expect("small coefficients");
        let ok = recover_collected(&w, n).map(|g| g == Element::from_part(c.clone()));
        r.check(ok == Ok(true), || format!("rank {n}: recover(expand(raw)) != collect(raw) for {e:?}: {ok:?}"));
        let u = gen::collected(&mut rng, n, PolyShape::SMALL);
        let w = expand_module_expr(&u.to_raw()).expect("small coefficients");
        let ok = recover_collected(&w, n).map(|g| g == Element::from_part(u.clone()));
        r.check(ok == Ok(true), || format!("rank {n}: recover(expand(u)) != u for {u:?}: {ok:?}"));
    }
    r
}

/// 7. The delta-commutator identity and `f(delta = 2) = b`.
pub fn delta_commutator(seed: u64, rank: usize, sizes: &Sizes) -> Report {
    let mut r = Report::new(7, "delta-commutator identity");
    let mut rng = stream(seed, 7);
    let mut xs: Vec<Element> = (1..=rank).map(|i| Element::generator(rank, i).expect("in range")).collect();
    for _ in 0..sizes.delta_words {
        let len = rng.gen_range(1..=4);
        xs.push(elem(&gen::word_of_len(&mut rng, rank, len, 2), rank));
    }
    let mut pairs = 0;
    for x in &xs {
        for y in &xs {
            let (a, b) = (x.abelianization(), y.abelianization());
            let ab = &a * &b;
            if a.is_one() || b.is_one() || ab.is_one() {
                continue;
            }
            pairs += 1;
            for delta in -5..=5 {
                let ok = delta_commutator_check(x, y, delta).unwrap_or(false);
                r.check(ok, || format!("x={x}, y={y}, delta={delta}"));
            }
            r.check(delta_comm_poly(&a, &b, 2) == Ok(LaurentPoly::monomial(b.clone())), || {
                format!("f(delta=2) != b for a={a}, b={b}")
            });
        }
    }
    r.note(format!("{pairs} (x, y) pairs at rank {rank}"));
    r
}

/// 8. Exponential-group axioms with integer exponents.
pub fn exp_axioms(seed: u64, ranks: &[usize], sizes: &Sizes) -> Report {
    let mut r = Report::new(8, "exponential-group axioms");
    let mut rng = stream(seed, 8);
    for s in 0..sizes.exp_axioms {
        let n = ranks[s % ranks.len()];
        let g = gen::element(&mut rng, n, 8);
        let h = if s % 10 == 0 { g.pow(rng.gen_range(-3..=3)) } else { gen::element(&mut rng, n, 8) };
        let (a, b) = (rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        r.check(check_exp_axioms(&g, &h, a, b).unwrap_or(false), || format!("g={g}, h={h}, alpha={a}, beta={b}"));
    }
    r
}

fn random_poly_code_input(rng: &mut TestRng, n: usize) -> LaurentPoly {
    gen::poly(rng, n, n, PolyShape { max_terms: 5, max_coef: 9, min_exp: -3, max_exp: 3 })
}

/// 9. Codec round trips, the coded multiplication square and injectivity of `nu`.
pub fn arithmetization(seed: u64, rank: usize, sizes: &Sizes) -> Report {
    let mut r = Report::new(9, "arithmetization codecs");
    let mut rng = stream(seed, 9);
    for z in -100i64..=100 {
        let z = BigInt::from(z);
        r.check(unzigzag(&zigzag(&z)) == z, || format!("zigzag {z}"));
    }
    for k in 0u64..=200 {
        let k = BigUint::from(k);
        r.check(zigzag(&unzigzag(&k)) == k, || format!("unzigzag {k}"));
    }
    for m in 0u64..=50 {
        for k in 0u64..=50 {
            let (m, k) = (BigUint::from(m), BigUint::from(k));
            r.check(unpair(&pair(&m, &k)) == (m.clone(), k.clone()), || format!("pair {m} {k}"));
        }
    }
    let mut tuple_codes = BTreeSet::new();
    let mut tuples = BTreeSet::new();
    for _ in 0..sizes.tuples {
        let len = rng.gen_range(0..8);
        let t: Vec<BigInt> = (0..len).map(|_| BigInt::from(rng.gen_range(-1000i64..=1000))).collect();
        let c = encode_tuple(&t);
        r.check(decode_tuple(&c).as_ref() == Ok(&t), || format!("tuple {t:?}"));
        tuple_codes.insert(c);
        tuples.insert(t);
    }
    r.check(tuple_codes.len() == tuples.len(), || "encode_tuple not injective".into());
    let mut codes: HashMap<BigUint, LaurentPoly> = HashMap::new();
    let mut distinct = BTreeSet::new();
    for _ in 0..sizes.polys {
        let q = random_poly_code_input(&mut rng, rank);
        let c = encode_poly(&q);
        r.check(decode_poly(&c, rank).as_ref() == Ok(&q), || format!("poly {q}"));
        if let Some(prev) = codes.insert(c, q.clone()) {
            r.check(prev == q, || format!("nu collision: {prev} and {q}"));
        }
        distinct.insert(q.to_string());
    }
    r.note(format!("{} distinct polynomials coded", distinct.len()));
    for _ in 0..sizes.elements {
        let g = gen::element(&mut rng, rank, 10);
        r.check(decode_element(&encode_element(&g), rank).as_ref() == Ok(&g), || format!("element {g}"));
    }
    for _ in 0..sizes.coded_pairs {
        let g = gen::element(&mut rng, rank, 8);
        let h = gen::element(&mut rng, rank, 8);
        let ok = coded_mul(&encode_element(&g), &encode_element(&h), rank) == Ok(encode_element(&(&g * &h)));
        r.check(ok, || format!("coded_mul square for {g} * {h}"));
    }
    r
}

/// 10. Separating points, the quotient at `(1,...,1)`, and finite-sample checks of the power action.
pub fn discrimination(seed: u64, sizes: &Sizes) -> Report {
    let mut r = Report::new(10, "discrimination and congruence");
    let mut rng = stream(seed, 10);
    let shape = PolyShape { max_terms: 8, max_coef: 5, min_exp: -2, max_exp: 3 };
    for s in 0..sizes.separations {
        let n = 1 + s % 4;
        let p = gen::nonzero_poly(&mut rng, n, n, shape);
        let ok = separating_point(n, std::slice::from_ref(&p))
            .and_then(|pt| pt.eval(&p))
            .map(|v| !v.is_zero());
        r.check(ok == Ok(true), || format!("no separating point for {p}: {ok:?}"));
    }
    for s in 0..sizes.separation_sets {
        let n = 1 + s % 3;
        let mut set: Vec<LaurentPoly> = Vec::new();
        while set.len() < 5 {
            let p = gen::poly(&mut rng, n, n, PolyShape::SMALL);
            if !set.contains(&p) {
                set.push(p);
            }
        }
        let ok = separating_point_distinct(n, &set).and_then(|pt| {
            let vals: Vec<_> = set.iter().map(|p| pt.eval(p)).collect::<Result<_, _>>()?;
            Ok(vals.iter().enumerate().all(|(i, v)| vals[i + 1..].iter().all(|w| w != v)))
        });
        r.check(ok == Ok(true), || format!("set not separated: {set:?}"));
    }
    for n in 2..=5 {
        let pres = quotient_presentation(&EvalPoint::ones(n));
        r.check(pres.free_rank() == CommIndex::count(n), || format!("quotient at ones, rank {n}"));
    }
    let choices = [-3, -2, -1, 1, 2, 3];
    let (mut mutated, mut detected) = (0usize, 0usize);
    for s in 0..sizes.action_cases {
        let n = 2 + s % 3;
        let g = gen::collected(&mut rng, n, PolyShape::SMALL);
        let p = gen::poly(&mut rng, n, n, PolyShape::POLYNOMIAL);
        let h = g.mact(&p);
        let delta = loop {
            let d = gen::collected(&mut rng, n, PolyShape::SMALL);
            if !d.is_zero() {
                break d;
            }
        };
        let h_bad = h.madd(&delta);
        let mut caught = false;
        for _ in 0..sizes.action_points {
            let pt = EvalPoint::from_i64(&gen::point(&mut rng, n, &choices)).expect("nonzero entries");
            let pres = quotient_presentation(&pt);
            let ok = power_action_check(&g, &p, &h, &pres);
            r.check(ok == Ok(true), || format!("forward direction fails: g={g:?}, P={p}, point={pt:?}: {ok:?}"));
            caught |= power_action_check(&g, &p, &h_bad, &pres) == Ok(false);
        }
        mutated += 1;
        detected += caught as usize;
        if !caught {
            r.note(format!("undetected mutation: g={}, P={p}, delta={}", part_text(&g), part_text(&delta)));
        }
    }
    let rate = detected as f64 / mutated.max(1) as f64;
    r.note(format!("mutations detected {detected}/{mutated}"));
    r.check(rate >= 0.95, || format!("mutation detection rate {rate:.3} below 0.95"));
    r
}

fn part_text(u: &CollectedPart) -> String {
    metabelian_core::words::print_part(u)
}

/// One golden parser case: `kind`, input text, expected printed form.
pub struct GoldenCase {
    pub kind: &'static str,
    pub rank: usize,
    pub input: String,
    pub printed: String,
}

fn canonical(kind: &str, rank: usize, input: &str) -> Result<String, metabelian_core::Error> {
    Ok(match kind {
        "word" => parse_word(input, rank)?.to_string(),
        "poly" => parse_poly(input, rank)?.to_string(),
        "element" => print_element(&parse_element(input, rank)?),
        _ => unreachable!("unknown golden kind"),
    })
}

/// The deterministic 200-case golden corpus.
pub fn golden_cases() -> Vec<GoldenCase> {
    let mut rng = gen::rng(2024, 11);
    let mut out = Vec::new();
    let fixed: [(&str, usize, &str); 12] = [
        ("word", 2, ""),
        ("word", 2, "1"),
        ("word", 2, "x1 x1^-1"),
        ("word", 3, "[x1, x2] * x3^2"),
        ("word", 3, "(x1 x2^-1)^3"),
        ("word", 4, "[[x1,x2],[x3,x4]]"),
        ("poly", 2, "a1^2 + 2*a1^-1*a2 - 3"),
        ("poly", 2, "(a1 - 1)(a2 + 1)"),
        ("poly", 3, "-a3^-2 + 0*a1"),
        ("element", 2, "x2 x1"),
        ("element", 3, "x3 x2 x1"),
        ("element", 3, "[x1,x3]^(a1 - a1^-1) x2^-1"),
    ];
    for (kind, rank, input) in fixed {
        let printed = canonical(kind, rank, input).expect("fixed golden input parses");
        out.push(GoldenCase { kind, rank, input: input.to_string(), printed });
    }
    while out.len() < 200 {
        let rank = rng.gen_range(2..=4);
        let (kind, input) = match out.len() % 3 {
            0 => {
                let w = gen::word(&mut rng, rank, 8, 4);
                ("word", decorate_word(&mut rng, &w))
            }
            1 => ("poly", gen::poly(&mut rng, rank, rank, PolyShape::SMALL).to_string()),
            _ => ("element", print_element(&gen::element(&mut rng, rank, 6))),
        };
        let printed = canonical(kind, rank, &input).expect("generated golden input parses");
        out.push(GoldenCase { kind, rank, input, printed });
    }
    out
}

/// Re-spells a word with `*`, extra spaces and `^1` so the parser sees variety.
fn decorate_word(rng: &mut TestRng, w: &GroupWord) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for &(i, e) in w.letters() {
        parts.push(match (e, rng.gen_range(0..3)) {
            (1, 0) => format!("x{i}^1"),
            (1, _) => format!("x{i}"),
            (e, 0) => format!("x{i}^{e}"),
            (e, _) => format!("x{i} ^ {e}"),
        });
    }
    let sep = if rng.gen_bool(0.5) { " * " } else { "  " };
    parts.join(sep)
}

pub fn golden_text() -> String {
    let mut s = String::from("# kind\trank\tinput\tprinted\n");
    for c in golden_cases() {
        s.push_str(&format!("{}\t{}\t{}\t{}\n", c.kind, c.rank, c.input, c.printed));
    }
    s
}

/// 11. Parser/printer identities on the golden corpus and on random values.
pub fn parser(seed: u64, golden_file: &str, sizes: &Sizes) -> Report {
    let mut r = Report::new(11, "parser and printer round trips");
    let expected = golden_text();
    r.check(golden_file == expected, || "golden file differs from the generated corpus".into());
    let mut cases = 0;
    for line in golden_file.lines().filter(|l| !l.starts_with('#') && !l.is_empty()) {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            r.check(false, || format!("malformed golden line `{line}`"));
            continue;
        }
        cases += 1;
        let rank: usize = fields[1].parse().unwrap_or(0);
        let (kind, input, printed) = (fields[0], fields[2], fields[3]);
        let got = canonical(kind, rank, input);
        r.check(got.as_deref() == Ok(printed), || format!("print(parse(`{input}`)) = {got:?}, want `{printed}`"));
        let again = canonical(kind, rank, printed);
        r.check(again.as_deref() == Ok(printed), || format!("printed form `{printed}` is not a fixed point"));
    }
    r.check(cases == 200, || format!("golden corpus has {cases} cases"));
    let mut rng = stream(seed, 11);
    for s in 0..sizes.parser_values {
        let n = 2 + s % 3;
        match s % 3 {
            0 => {
                let w = gen::word(&mut rng, n, 12, 5);
                r.check(parse_word(&w.to_string(), n).as_ref() == Ok(&w), || format!("word {w}"));
            }
            1 => {
                let q = gen::poly(&mut rng, n, n, PolyShape::SMALL);
                r.check(parse_poly(&q.to_string(), n).as_ref() == Ok(&q), || format!("poly {q}"));
            }
            _ => {
                let g = gen::element(&mut rng, n, 10);
                let back = parse_element(&print_element(&g), n);
                r.check(back.as_ref() == Ok(&g), || format!("element {g}"));
            }
        }
    }
    r.note(format!("{cases} golden cases"));
    r
}

/// The full acceptance suite in criterion order.
pub fn acceptance_suite(seed: u64, golden_file: &str) -> Vec<Report> {
    let s = Sizes::FULL;
    vec![
        group_axioms(seed, &[2, 3, 4], &s),
        oracle_equivalence(seed, &[2, 3, 4], &s),
        collection_soundness(seed, &[3, 4], &s),
        formula_fidelity(seed, &[2, 3, 4], &s),
        fox_calculus(seed, &[2, 3, 4], &s),
        recovery(seed, &[3, 4], &s),
        delta_commutator(seed, 3, &s),
        exp_axioms(seed, &[2, 3, 4], &s),
        arithmetization(seed, 3, &s),
        discrimination(seed, &s),
        parser(seed, golden_file, &s),
    ]
}

/// Group-level checks at a single rank with `samples` samples each.
pub fn rank_suite(rank: usize, seed: u64, samples: usize) -> Vec<Report> {
    let s = Sizes::uniform(samples);
    let ranks = [rank];
    let mut out = vec![
        group_axioms(seed, &ranks, &s),
        oracle_equivalence(seed, &ranks, &s),
    ];
    if rank >= 3 {
        out.push(collection_soundness(seed, &ranks, &s));
    }
    out.push(formula_fidelity(seed, &ranks, &s));
    out.push(fox_calculus(seed, &ranks, &s));
    if rank >= 3 {
        out.push(recovery(seed, &ranks, &s));
    }
    out.push(delta_commutator(seed, rank, &s));
    out.push(exp_axioms(seed, &ranks, &s));
    out
}
