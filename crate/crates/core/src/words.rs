//! Words in the generators, text parsing and printing.
//!
//! Word syntax: `x3 x1^-2 (x1 x2)^3 [x1, x2^-1] * x4`, with `1` or empty text
//! for the identity. Polynomials use `a1..an`, integers, `+ - * ^` and parens;
//! negative powers are only allowed on `±monomial`. Element text may also carry
//! module factors `[u,v]^(poly)`, as printed by [`print_element`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::commod::{CollectedPart, CommIndex, RawModuleExpr};
use crate::error::{Error, Result};
use crate::group::Element;
use crate::laurent::{LaurentPoly, Monomial};

/// Upper bound on the number of letters built by powering or expansion.
pub const LETTER_LIMIT: usize = 1 << 22;

/// A freely reduced word, stored as letters `(index, nonzero exponent)` with no
/// two neighbours sharing an index.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GroupWord {
    letters: Vec<(usize, i64)>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn letter(i: usize, e: i64) -> Self {
        let mut w = GroupWord::empty();
        w.push(i, e);
        w
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = GroupWord::empty();
        for (i, e) in letters {
            w.push(i, e);
        }
        w
    }

    /// Appends `x_i^e`, merging with the last letter and cancelling.
    pub fn push(&mut self, i: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == i {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((i, e));
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        GroupWord::from_letters(self.letters.iter().rev().map(|&(i, e)| (i, -e)))
    }

    pub fn append(&mut self, other: &GroupWord) {
        for &(i, e) in &other.letters {
            self.push(i, e);
        }
    }

    pub fn concat(&self, other: &GroupWord) -> Self {
        let mut w = self.clone();
        w.append(other);
        w
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs();
        if (base.len() as u128) * (reps as u128) > LETTER_LIMIT as u128 {
            return Err(Error::TooLarge(format!("word power with {reps} repetitions")));
        }
        let mut w = GroupWord::empty();
        for _ in 0..reps {
            w.append(&base);
        }
        Ok(w)
    }

    /// `u^-1 v^-1 u v`.
    pub fn commutator(u: &GroupWord, v: &GroupWord) -> Self {
        let mut w = u.inverse();
        w.append(&v.inverse());
        w.append(u);
        w.append(v);
        w
    }

    /// `t^-1 w t`.
    pub fn conjugate(&self, t: &GroupWord) -> Self {
        let mut w = t.inverse();
        w.append(self);
        w.append(t);
        w
    }

    /// Drops letters whose index is not kept.
    pub fn retract(&self, keep: impl Fn(usize) -> bool) -> Self {
        GroupWord::from_letters(self.letters.iter().copied().filter(|&(i, _)| keep(i)))
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.letters.iter().find(|&&(i, _)| i == 0 || i > rank) {
            Some(&(index, _)) => Err(Error::BadIndex { index, rank }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (n, &(i, e)) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write_letter(f, i, e)?;
        }
        Ok(())
    }
}

fn write_letter(f: &mut impl fmt::Write, i: usize, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "x{i}")
    } else {
        write!(f, "x{i}^{e}")
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Gen(usize),
    Var(usize),
    Int(BigInt),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Star,
    Caret,
    Plus,
    Minus,
    End,
}

struct Token {
    tok: Tok,
    pos: usize,
    text: String,
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax { pos, message: message.into() }
}

fn lex(src: &str, rank: usize) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut p = 0;
    while p < bytes.len() {
        let c = bytes[p];
        if c.is_ascii_whitespace() {
            p += 1;
            continue;
        }
        let start = p;
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b',' => Some(Tok::Comma),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            _ => None,
        };
        if let Some(tok) = single {
            p += 1;
            out.push(Token { tok, pos: start, text: src[start..p].to_string() });
            continue;
        }
        if c == b'x' || c == b'a' {
            p += 1;
            while p < bytes.len() && bytes[p].is_ascii_digit() {
                p += 1;
            }
            let text = src[start..p].to_string();
            if p == start + 1 {
                return Err(syntax(start, format!("expected an index after `{}`", c as char)));
            }
            let index = src[start + 1..p].parse::<usize>().unwrap_or(usize::MAX);
            if index == 0 || index > rank {
                return Err(Error::IndexOutOfRange { token: text, pos: start, rank });
            }
            let tok = if c == b'x' { Tok::Gen(index) } else { Tok::Var(index) };
            out.push(Token { tok, pos: start, text });
            continue;
        }
        if c.is_ascii_digit() {
            while p < bytes.len() && bytes[p].is_ascii_digit() {
                p += 1;
            }
            let n: BigInt = src[start..p].parse().expect("digits");
            out.push(Token { tok: Tok::Int(n), pos: start, text: src[start..p].to_string() });
            continue;
        }
        let ch = src[start..].chars().next().unwrap_or('?');
        return Err(syntax(start, format!("unexpected character `{ch}`")));
    }
    out.push(Token { tok: Tok::End, pos: src.len(), text: String::new() });
    Ok(out)
}

/// A top-level factor of element text.
enum Item {
    Word(GroupWord),
    Act(GroupWord, LaurentPoly),
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    rank: usize,
}

impl Parser {
    fn new(src: &str, rank: usize) -> Result<Self> {
        Ok(Parser { toks: lex(src, rank)?, at: 0, rank })
    }

    fn current(&self) -> &Token {
        &self.toks[self.at.min(self.toks.len() - 1)]
    }

    fn peek(&self) -> &Tok {
        &self.current().tok
    }

    fn pos(&self) -> usize {
        self.current().pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.current().tok.clone();
        self.at += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn unexpected(&self, what: &str) -> Error {
        let tok = self.current();
        if tok.tok == Tok::End {
            syntax(tok.pos, format!("expected {what}, found end of input"))
        } else {
            syntax(tok.pos, format!("expected {what}, found `{}`", tok.text))
        }
    }

    fn finish(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let n = if neg { -n } else { n };
                n.to_i64().ok_or_else(|| syntax(pos, "exponent out of range"))
            }
            _ => {
                self.at -= 1;
                Err(self.unexpected("an integer exponent"))
            }
        }
    }

    fn starts_term(&self) -> bool {
        matches!(self.peek(), Tok::Gen(_) | Tok::Int(_) | Tok::LParen | Tok::LBracket)
    }

    fn items(&mut self, allow_act: bool) -> Result<Vec<Item>> {
        let mut items = Vec::new();
        loop {
            if self.eat(&Tok::Star) {
                if !self.starts_term() {
                    return Err(self.unexpected("a word after `*`"));
                }
            } else if !self.starts_term() {
                break;
            }
            items.push(self.term(allow_act)?);
        }
        Ok(items)
    }

    fn word(&mut self) -> Result<GroupWord> {
        let mut w = GroupWord::empty();
        for item in self.items(false)? {
            match item {
                Item::Word(u) => w.append(&u),
                Item::Act(..) => unreachable!("module factors are not parsed in words"),
            }
        }
        Ok(w)
    }

    fn term(&mut self, allow_act: bool) -> Result<Item> {
        let pos = self.pos();
        let base = match self.bump() {
            Tok::Gen(i) => GroupWord::letter(i, 1),
            Tok::Int(n) if n.is_one() => GroupWord::empty(),
            Tok::Int(_) => return Err(syntax(pos, "only the literal 1 may appear in a word")),
            Tok::LParen => {
                let w = self.word()?;
                self.expect(&Tok::RParen, "`)`")?;
                w
            }
            Tok::LBracket => {
                let u = self.word()?;
                self.expect(&Tok::Comma, "`,`")?;
                let v = self.word()?;
                self.expect(&Tok::RBracket, "`]`")?;
                let c = GroupWord::commutator(&u, &v);
                if *self.peek() == Tok::Caret && self.toks.get(self.at + 1).is_some_and(|t| t.tok == Tok::LParen) {
                    if !allow_act {
                        return Err(syntax(self.toks[self.at + 1].pos, "polynomial exponents are not allowed in words"));
                    }
                    self.bump();
                    self.bump();
                    let q = self.poly()?;
                    self.expect(&Tok::RParen, "`)`")?;
                    return Ok(Item::Act(c, q));
                }
                c
            }
            _ => {
                self.at -= 1;
                return Err(self.unexpected("a word"));
            }
        };
        if self.eat(&Tok::Caret) {
            let k = self.signed_int()?;
            return Ok(Item::Word(base.pow(k)?));
        }
        Ok(Item::Word(base))
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.rank);
        let mut first = true;
        loop {
            let neg = self.eat(&Tok::Minus);
            if !neg && !self.eat(&Tok::Plus) && !first {
                break;
            }
            first = false;
            let t = self.poly_term()?;
            if neg {
                acc -= &t;
            } else {
                acc += &t;
            }
        }
        Ok(acc)
    }

    fn poly_term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.poly_factor()?;
        loop {
            if self.eat(&Tok::Star) || matches!(self.peek(), Tok::Int(_) | Tok::Var(_) | Tok::LParen) {
                acc = &acc * &self.poly_factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_factor(&mut self) -> Result<LaurentPoly> {
        let pos = self.pos();
        let base = match self.bump() {
            Tok::Int(n) => LaurentPoly::constant(self.rank, n),
            Tok::Var(i) => LaurentPoly::var(self.rank, i),
            Tok::LParen => {
                let q = self.poly()?;
                self.expect(&Tok::RParen, "`)`")?;
                q
            }
            Tok::Gen(_) => return Err(syntax(pos, "generators cannot appear in a polynomial")),
            _ => {
                self.at -= 1;
                return Err(self.unexpected("a polynomial"));
            }
        };
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let pos = self.pos();
        let k = self.signed_int()?;
        if k.unsigned_abs() > 1 << 16 {
            return Err(syntax(pos, "power too large"));
        }
        if k >= 0 {
            return Ok(base.pow(k as u32));
        }
        match base.as_term() {
            Some((m, c)) if c.abs().is_one() => {
                let sign = if c.is_negative() && k % 2 != 0 { -1 } else { 1 };
                Ok(LaurentPoly::term(m.pow(k), sign))
            }
            _ => Err(syntax(pos, "negative powers are only allowed on a monomial")),
        }
    }

    /// `[xi,xj]` with optional `^int` or `^(poly)`.
    fn module_factor(&mut self) -> Result<Option<(CommIndex, LaurentPoly)>> {
        self.expect(&Tok::LBracket, "`[`")?;
        let i = self.generator()?;
        self.expect(&Tok::Comma, "`,`")?;
        let j = self.generator()?;
        self.expect(&Tok::RBracket, "`]`")?;
        let mut q = LaurentPoly::one(self.rank);
        if self.eat(&Tok::Caret) {
            if self.eat(&Tok::LParen) {
                q = self.poly()?;
                self.expect(&Tok::RParen, "`)`")?;
            } else {
                q = LaurentPoly::constant(self.rank, self.signed_int()?);
            }
        }
        Ok(match i.cmp(&j) {
            core::cmp::Ordering::Greater => Some((CommIndex { i, j }, q)),
            core::cmp::Ordering::Less => Some((CommIndex { i: j, j: i }, -q)),
            core::cmp::Ordering::Equal => None,
        })
    }

    fn generator(&mut self) -> Result<usize> {
        match self.bump() {
            Tok::Gen(i) => Ok(i),
            _ => {
                self.at -= 1;
                Err(self.unexpected("a generator"))
            }
        }
    }
}

pub fn parse_word(src: &str, rank: usize) -> Result<GroupWord> {
    let mut p = Parser::new(src, rank)?;
    let w = p.word()?;
    p.finish()?;
    Ok(w)
}

pub fn parse_poly(src: &str, rank: usize) -> Result<LaurentPoly> {
    let mut p = Parser::new(src, rank)?;
    if *p.peek() == Tok::End {
        return Err(p.unexpected("a polynomial"));
    }
    let q = p.poly()?;
    p.finish()?;
    Ok(q)
}

/// `[xi,xj]^(q) [xk,xl]^(r) ...`; `[xi,xj]` with `i < j` becomes `[xj,xi]^(-q)`.
pub fn parse_module_expr(src: &str, rank: usize) -> Result<RawModuleExpr> {
    let mut p = Parser::new(src, rank)?;
    let mut e = RawModuleExpr::new(rank);
    if matches!(p.peek(), Tok::Int(n) if n.is_one()) {
        p.bump();
        p.finish()?;
        return Ok(e);
    }
    loop {
        p.eat(&Tok::Star);
        if *p.peek() == Tok::End {
            break;
        }
        if let Some((idx, q)) = p.module_factor()? {
            e.push(idx, q)?;
        }
    }
    Ok(e)
}

/// Element text: words mixed with module factors `[u,v]^(poly)`, multiplied
/// left to right.
pub fn parse_element(src: &str, rank: usize) -> Result<Element> {
    let mut p = Parser::new(src, rank)?;
    let items = p.items(true)?;
    p.finish()?;
    let mut g = Element::identity(rank);
    let mut pending = GroupWord::empty();
    for item in items {
        match item {
            Item::Word(w) => pending.append(&w),
            Item::Act(c, q) => {
                g = &g * &Element::from_word(&pending, rank)?;
                pending = GroupWord::empty();
                g = &g * &Element::from_word(&c, rank)?.act(&q)?;
            }
        }
    }
    Ok(&g * &Element::from_word(&pending, rank)?)
}

pub fn print_word(w: &GroupWord) -> String {
    w.to_string()
}

pub fn print_poly(q: &LaurentPoly) -> String {
    q.to_string()
}

pub fn print_part(u: &CollectedPart) -> String {
    let factors: Vec<String> = u.iter().map(|(idx, q)| format!("[x{},x{}]^({})", idx.i, idx.j, q)).collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join(" ")
    }
}

/// `x1^g1 ... xn^gn [xi,xj]^(beta_ij) ...`, or `1` for the identity.
pub fn print_element(g: &Element) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, &e) in g.gamma().iter().enumerate() {
        if e != 0 {
            let mut s = String::new();
            write_letter(&mut s, k + 1, e).expect("write to string");
            parts.push(s);
        }
    }
    if !g.part().is_zero() {
        parts.push(print_part(g.part()));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

fn monomial_word(m: &Monomial) -> GroupWord {
    GroupWord::from_letters(m.exponents().iter().enumerate().map(|(k, &e)| (k + 1, e)))
}

/// Rewrites each factor `[xi,xj]^(sum c M)` as the word `prod t_M^-1 [xi,xj]^c t_M`,
/// with `t_M = x1^e1 ... xn^en` for `M = a1^e1 ... an^en`.
pub fn expand_module_expr(e: &RawModuleExpr) -> Result<GroupWord> {
    let mut w = GroupWord::empty();
    for (idx, q) in e.factors() {
        let c = GroupWord::commutator(&GroupWord::letter(idx.i, 1), &GroupWord::letter(idx.j, 1));
        for (m, coef) in q.terms() {
            let k = coef
                .to_i64()
                .ok_or_else(|| Error::TooLarge(format!("coefficient {coef}")))?;
            let t = monomial_word(m);
            w.append(&c.pow(k)?.conjugate(&t));
            if w.len() > LETTER_LIMIT {
                return Err(Error::TooLarge("expanded word".to_string()));
            }
        }
    }
    Ok(w)
}

/// A word representing `g`.
pub fn element_to_word(g: &Element) -> Result<GroupWord> {
    let mut w = GroupWord::from_letters(g.gamma().iter().enumerate().map(|(k, &e)| (k + 1, e)));
    w.append(&expand_module_expr(&g.part().to_raw())?);
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn free_reduction() {
        let w = GroupWord::from_letters([(1, 1), (2, 1), (2, -1), (1, 1)]);
        assert_eq!(w.letters(), &[(1, 2)]);
        assert!(GroupWord::from_letters([(1, 3), (1, -3)]).is_empty());
        assert_eq!(w.inverse().letters(), &[(1, -2)]);
    }

    #[test]
    fn parse_words() {
        let w = parse_word("x1 x2^-1 (x3 x1)^2", 3).unwrap();
        assert_eq!(w.letters(), &[(1, 1), (2, -1), (3, 1), (1, 1), (3, 1), (1, 1)]);
        let c = parse_word("[x1,x2]", 2).unwrap();
        assert_eq!(c.letters(), &[(1, -1), (2, -1), (1, 1), (2, 1)]);
        assert!(parse_word("", 2).unwrap().is_empty());
        assert!(parse_word("1", 2).unwrap().is_empty());
        assert_eq!(parse_word("x1*x2", 2).unwrap(), parse_word("x1 x2", 2).unwrap());
        assert_eq!(parse_word("(x1 x2)^-1", 2).unwrap().letters(), &[(2, -1), (1, -1)]);
        assert_eq!(parse_word("x1^+3", 1).unwrap().letters(), &[(1, 3)]);
    }

    #[test]
    fn parse_word_errors() {
        assert!(matches!(parse_word("x3", 2), Err(Error::IndexOutOfRange { pos: 0, rank: 2, .. })));
        assert!(matches!(parse_word("x1 x0", 2), Err(Error::IndexOutOfRange { pos: 3, .. })));
        assert!(matches!(parse_word("x1 y", 2), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_word("(x1", 2), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_word("x1^", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("2", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("x1^99999999999999999999", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("[x1,x2]^(a1)", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("x1 *", 2), Err(Error::Syntax { .. })));
    }

    #[test]
    fn parse_polys() {
        let q = parse_poly("a1^2 + 2*a1^-1*a2 - 3", 2).unwrap();
        assert_eq!(q.to_string(), "a1^2 - 3 + 2*a1^-1*a2");
        assert_eq!(parse_poly("(a1 - 1)(a1 + 1)", 1).unwrap().to_string(), "a1^2 - 1");
        assert_eq!(parse_poly("-a1^-1", 1).unwrap().to_string(), "-a1^-1");
        assert_eq!(parse_poly("(-a1)^-3", 1).unwrap().to_string(), "-a1^-3");
        assert_eq!(parse_poly("2a1 a2", 2).unwrap().to_string(), "2*a1*a2");
        assert_eq!(parse_poly("0", 2).unwrap(), LaurentPoly::zero(2));
        assert!(parse_poly("(a1 + 1)^-1", 1).is_err());
        assert!(parse_poly("2^-1", 1).is_err());
        assert!(parse_poly("", 1).is_err());
        assert!(matches!(parse_poly("a3", 2), Err(Error::IndexOutOfRange { .. })));
        assert!(parse_poly("a1 +", 1).is_err());
    }

    #[test]
    fn parse_module_exprs() {
        let e = parse_module_expr("[x2,x1]^(a1) [x1,x3]^(a2 - 1) [x2,x2] [x3,x2]^-2", 3).unwrap();
        let f = e.factors();
        assert_eq!(f.len(), 3);
        assert_eq!(f[0], (CommIndex { i: 2, j: 1 }, LaurentPoly::var(3, 1)));
        assert_eq!(f[1].0, CommIndex { i: 3, j: 1 });
        assert_eq!(f[1].1.to_string(), "-a2 + 1");
        assert_eq!(f[2], (CommIndex { i: 3, j: 2 }, LaurentPoly::constant(3, -2)));
        assert!(parse_module_expr("", 2).unwrap().is_empty());
        assert!(parse_module_expr("1", 2).unwrap().is_empty());
        assert!(parse_module_expr("[x1 x2,x1]", 2).is_err());
    }

    #[test]
    fn element_round_trip() {
        let g = parse_element("x2 x1", 2).unwrap();
        assert_eq!(print_element(&g), "x1 x2 [x2,x1]^(1)");
        assert_eq!(parse_element(&print_element(&g), 2).unwrap(), g);
        assert_eq!(print_element(&Element::identity(3)), "1");
        let g = parse_element("x3^-2 x1 [x3,x2]^(a1^-1 - a3) x2^5", 3).unwrap();
        assert_eq!(parse_element(&print_element(&g), 3).unwrap(), g);
        let h = parse_element("[x1,x2]^(2)", 2).unwrap();
        assert_eq!(print_element(&h), "[x2,x1]^(-2)");
    }

    #[test]
    fn expansion() {
        let e = parse_module_expr("[x2,x1]^(2 a1 - a2^-1)", 2).unwrap();
        let w = expand_module_expr(&e).unwrap();
        let g = Element::from_word(&w, 2).unwrap();
        assert_eq!(g.part(), &crate::commod::collect(&e));
        assert!(g.in_commutant());
        let big = RawModuleExpr::from_factors(
            2,
            vec![(CommIndex { i: 2, j: 1 }, LaurentPoly::constant(2, BigInt::from(1u64) << 70))],
        )
        .unwrap();
        assert!(matches!(expand_module_expr(&big), Err(Error::TooLarge(_))));
    }
}
