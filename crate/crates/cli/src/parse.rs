//! Parsers for module expressions such as `[V(2,0)] + 2*[P(1)]` and
//! presentation expressions such as `y^2*z - g*X_{2,1/3}`.

use greend4_core::presentation::{nf_mul, PresBase, PresElement, PresMonomial};
use greend4_core::{EtaParam, GreenElement, ModuleLabel, Z2};
use num_bigint::BigInt;
use thiserror::Error;

/// A syntax error; `pos` is a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at column {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Cursor {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        self.error_at(self.pos, message)
    }

    fn error_at<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a non-negative integer");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small_uint(&mut self) -> Result<(usize, u32), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let n = self.uint()?;
        match u32::try_from(n) {
            Ok(n) => Ok((start, n)),
            Err(_) => self.error_at(start, "integer too large"),
        }
    }

    fn index(&mut self, what: &str) -> Result<u32, ParseError> {
        let (start, s) = self.small_uint()?;
        if s == 0 {
            return self.error_at(start, format!("{what} must be at least 1"));
        }
        Ok(s)
    }

    fn r(&mut self) -> Result<Z2, ParseError> {
        let (start, r) = self.small_uint()?;
        if r > 1 {
            return self.error_at(start, format!("r must be 0 or 1, found {r}"));
        }
        Ok(Z2::new(r.into()))
    }

    fn eta(&mut self) -> Result<EtaParam, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_digit() || matches!(c, '-' | '/' | 'o'))
        {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        match text.parse::<EtaParam>() {
            Ok(eta) => Ok(eta),
            Err(_) if text.is_empty() => self.error_at(start, "expected a rational number or 'oo'"),
            Err(e) => self.error_at(start, format!("invalid parameter '{text}': {e}")),
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let w: Vec<char> = word.chars().collect();
        if self.chars[self.pos..].starts_with(&w) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }
}

/// Parses `element := term (('+'|'-') term)*` with
/// `term := [uint '*'] '[' label ']'`. A leading sign and the literal `0`
/// are accepted.
pub fn parse_element(src: &str) -> Result<GreenElement, ParseError> {
    let mut cur = Cursor::new(src);
    if cur.at_end() {
        return cur.error("empty expression");
    }
    let mut out = GreenElement::zero();
    if cur.peek() == Some('0') {
        let save = cur.pos;
        cur.pos += 1;
        if cur.at_end() {
            return Ok(out);
        }
        cur.pos = save;
    }
    let mut sign = if cur.eat('-') { -1 } else { 1 };
    loop {
        let coeff = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = cur.uint()?;
            cur.expect('*')?;
            c
        } else {
            BigInt::from(1)
        };
        cur.expect('[')?;
        let label = label(&mut cur)?;
        cur.expect(']')?;
        out.add_term(coeff * sign, label);
        if cur.eat('+') {
            sign = 1;
        } else if cur.eat('-') {
            sign = -1;
        } else if cur.at_end() {
            return Ok(out);
        } else {
            let c = cur.peek().expect("not at end");
            return cur.error(format!("expected '+', '-' or end of input, found '{c}'"));
        }
    }
}

/// Parses a single label such as `O^-3V(1)`.
pub fn parse_label(src: &str) -> Result<ModuleLabel, ParseError> {
    let mut cur = Cursor::new(src);
    let l = label(&mut cur)?;
    if !cur.at_end() {
        return cur.error("trailing input after label");
    }
    Ok(l)
}

fn label(cur: &mut Cursor) -> Result<ModuleLabel, ParseError> {
    let start = {
        cur.skip_ws();
        cur.pos
    };
    if cur.keyword("V(") {
        let (at, first) = cur.small_uint()?;
        if cur.eat(',') {
            if first != 2 {
                return cur.error_at(at, format!("expected 'V(2,r)', found dimension {first}"));
            }
            let r = cur.r()?;
            cur.expect(')')?;
            return Ok(ModuleLabel::SimpleTwo { r });
        }
        if first > 1 {
            return cur.error_at(at, format!("r must be 0 or 1, found {first}"));
        }
        cur.expect(')')?;
        return Ok(ModuleLabel::SimpleOne {
            r: Z2::new(first.into()),
        });
    }
    if cur.keyword("P(") {
        let r = cur.r()?;
        cur.expect(')')?;
        return Ok(ModuleLabel::Projective { r });
    }
    if cur.keyword("O^") {
        let negative = cur.eat('-');
        let s = cur.index("s")?;
        if !cur.keyword("V(") {
            return cur.error("expected 'V('");
        }
        let r = cur.r()?;
        cur.expect(')')?;
        return Ok(if negative {
            ModuleLabel::Cosyzygy { s, r }
        } else {
            ModuleLabel::Syzygy { s, r }
        });
    }
    if cur.keyword("M_") {
        let s = cur.index("s")?;
        cur.expect('(')?;
        let r = cur.r()?;
        cur.expect(',')?;
        let eta = cur.eta()?;
        cur.expect(')')?;
        return Ok(ModuleLabel::Band { s, r, eta });
    }
    cur.error_at(
        start,
        "expected a label: V(r), V(2,r), P(r), O^sV(r), O^-sV(r) or M_s(r,eta)",
    )
}

/// Parses a polynomial in `g, x, y, z, X_{n,eta}` with integer
/// coefficients, `+`, `-`, `*`, `^` and parentheses, and reduces it to
/// normal form.
pub fn parse_presentation(src: &str) -> Result<PresElement, ParseError> {
    let mut cur = Cursor::new(src);
    if cur.at_end() {
        return cur.error("empty expression");
    }
    let e = pres_expr(&mut cur)?;
    if !cur.at_end() {
        let c = cur.peek().expect("not at end");
        return cur.error(format!("unexpected '{c}'"));
    }
    Ok(e)
}

fn pres_expr(cur: &mut Cursor) -> Result<PresElement, ParseError> {
    let mut neg = cur.eat('-');
    let mut out = PresElement::zero();
    loop {
        let t = pres_term(cur)?;
        out = if neg { &out - &t } else { &out + &t };
        if cur.eat('+') {
            neg = false;
        } else if cur.eat('-') {
            neg = true;
        } else {
            return Ok(out);
        }
    }
}

fn pres_term(cur: &mut Cursor) -> Result<PresElement, ParseError> {
    let mut out = pres_factor(cur)?;
    while cur.eat('*') {
        out = nf_mul(&out, &pres_factor(cur)?);
    }
    Ok(out)
}

fn pres_factor(cur: &mut Cursor) -> Result<PresElement, ParseError> {
    let base = pres_atom(cur)?;
    if cur.eat('^') {
        let (_, n) = cur.small_uint()?;
        return Ok((0..n).fold(PresElement::one(), |acc, _| nf_mul(&acc, &base)));
    }
    Ok(base)
}

fn pres_atom(cur: &mut Cursor) -> Result<PresElement, ParseError> {
    let start = cur.pos;
    match cur.peek() {
        Some('(') => {
            cur.pos += 1;
            let e = pres_expr(cur)?;
            cur.expect(')')?;
            Ok(e)
        }
        Some(c) if c.is_ascii_digit() => {
            let n = cur.uint()?;
            Ok(PresElement::term(n, PresMonomial::one()))
        }
        Some('g') => {
            cur.pos += 1;
            Ok(PresElement::monomial(PresMonomial::new(
                true,
                PresBase::One,
            )))
        }
        Some('x') => {
            cur.pos += 1;
            Ok(PresElement::base(PresBase::X))
        }
        Some('y') => {
            cur.pos += 1;
            Ok(PresElement::base(PresBase::Y(1)))
        }
        Some('z') => {
            cur.pos += 1;
            Ok(PresElement::base(PresBase::Z(1)))
        }
        Some('X') => {
            cur.pos += 1;
            cur.expect('_')?;
            cur.expect('{')?;
            let n = cur.index("n")?;
            cur.expect(',')?;
            let eta = cur.eta()?;
            cur.expect('}')?;
            Ok(PresElement::base(PresBase::Band { n, eta }))
        }
        Some(c) => cur.error_at(cur.pos, format!("unexpected '{c}'")),
        None => cur.error_at(start, "unexpected end of input"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_examples() {
        let e = parse_element("[V(2,0)] + 2*[P(1)]").unwrap();
        assert_eq!(e.coeff(&ModuleLabel::t(0)), BigInt::from(1));
        assert_eq!(e.coeff(&ModuleLabel::p(1)), BigInt::from(2));
        let e = parse_element("[O^-3V(1)]").unwrap();
        assert_eq!(
            e,
            GreenElement::from_label(ModuleLabel::Cosyzygy { s: 3, r: Z2::ONE })
        );
        let e = parse_element("[M_2(0,5/7)] - [M_2(0,oo)]").unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(
            e.coeff(&ModuleLabel::band(2, 0, EtaParam::Infinity)),
            BigInt::from(-1)
        );
        assert_eq!(
            e.coeff(&ModuleLabel::band(2, 0, EtaParam::finite(5, 7))),
            BigInt::from(1)
        );
    }

    #[test]
    fn element_edge_cases() {
        assert!(parse_element("0").unwrap().is_zero());
        assert_eq!(
            parse_element("-2*[V(0)]")
                .unwrap()
                .coeff(&ModuleLabel::v(0)),
            BigInt::from(-2)
        );
        assert!(parse_element("[V(0)] - [V(0)]").unwrap().is_zero());
        assert_eq!(parse_element(" [ M_1 ( 1 , -2 ) ] ").unwrap().len(), 1);
    }

    #[test]
    fn element_errors_have_positions() {
        let e = parse_element("[O^0V(1)]").unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(e.message.contains("at least 1"));
        let e = parse_element("[V(2)]").unwrap_err();
        assert_eq!(e.pos, 4);
        let e = parse_element("[P(0)] + [Q(1)]").unwrap_err();
        assert_eq!(e.pos, 11);
        let e = parse_element("[M_1(0,1/0)]").unwrap_err();
        assert_eq!(e.pos, 8);
        let e = parse_element("[V(0)] [V(1)]").unwrap_err();
        assert_eq!(e.pos, 8);
        assert!(parse_element("").is_err());
        assert!(parse_element("[V(2,3)]").is_err());
    }

    #[test]
    fn presentation_examples() {
        assert_eq!(parse_presentation("y*z").unwrap().to_string(), "1 + 2*x^2");
        assert_eq!(
            parse_presentation("x^3").unwrap().to_string(),
            "2*x + 2*g*x"
        );
        assert_eq!(parse_presentation("g^2 - 1").unwrap().to_string(), "0");
        assert_eq!(
            parse_presentation("-(x + 1)").unwrap().to_string(),
            "-1 - x"
        );
        assert_eq!(
            parse_presentation("X_{2,1/3}").unwrap().to_string(),
            "X_{2,1/3}"
        );
        assert_eq!(parse_presentation("3*y^0").unwrap().to_string(), "3");
    }

    #[test]
    fn presentation_errors() {
        assert_eq!(parse_presentation("y*").unwrap_err().pos, 3);
        assert_eq!(parse_presentation("X_{0,1}").unwrap_err().pos, 4);
        assert_eq!(parse_presentation("w").unwrap_err().pos, 1);
        assert!(parse_presentation("(x").is_err());
    }
}
