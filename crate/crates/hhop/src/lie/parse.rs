//! Text, LaTeX and JSON forms of Lie elements.
//!
//! Expression grammar, whitespace-insensitive:
//!
//! ```text
//! element  := term (('+' | '-') term)*      with an optional leading sign
//! term     := [coeff '*'] monomial
//! coeff    := INT ['/' INT]                 optionally parenthesized
//! monomial := ('s' INT)* NAME | ('s' INT)* '[' element ',' element ']'
//!           | ('s' INT)* '<' element ',' element '>'
//! ```
//!
//! Square brackets are Whitehead brackets. Angle brackets are the graded
//! commutator `<a, b> = (-1)^{|a|} [a, b]` of differential graded Lie algebras.
//!
//! Degeneracy prefixes act right to left, so `s1 s0 x` is `s1(s0 x)`.
//! `0` alone denotes the zero element.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::element::{LieElement, LieMonomial};
use super::symbols::{DegeneracyWord, GeneratorSymbol, Letter, MAX_LEVEL};
use super::Scalar;
use crate::error::{HhopError, Result};

/// Name lookup used by the parser.
pub type SymbolTable = BTreeMap<String, GeneratorSymbol>;

/// Builds a lookup table keyed by generator name.
pub fn symbol_table<'a>(
    gens: impl IntoIterator<Item = &'a GeneratorSymbol>,
) -> Result<SymbolTable> {
    let mut table = SymbolTable::new();
    for g in gens {
        if let Some(prev) = table.insert(g.name().to_string(), g.clone()) {
            if prev != *g {
                return Err(HhopError::Naming(format!(
                    "generator name {} used twice",
                    g.name()
                )));
            }
        }
    }
    Ok(table)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    symbols: &'a SymbolTable,
}

impl<'a> Parser<'a> {
    fn error(&self, at: usize, message: impl Into<String>) -> HhopError {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..at.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        HhopError::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(self.pos, format!("expected '{c}', found '{d}'"))),
            None => Err(self.error(self.pos, format!("expected '{c}', found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse"))
    }

    fn coefficient(&mut self) -> Result<Scalar> {
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
        }
        let at = self.pos;
        let num = self.integer()?;
        let mut c = Scalar::from_integer(num);
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.error(at, "zero denominator"));
            }
            c /= Scalar::from_integer(den);
        }
        if paren {
            self.expect(')')?;
        }
        Ok(c)
    }

    fn element(&mut self) -> Result<LieElement> {
        let mut out = LieElement::zero();
        let mut sign = Scalar::one();
        match self.peek() {
            Some('-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            out += &t.scale(&sign);
            match self.peek() {
                Some('+') => {
                    sign = Scalar::one();
                    self.pos += 1;
                }
                Some('-') => {
                    sign = -Scalar::one();
                    self.pos += 1;
                }
                _ => return Ok(out),
            }
        }
    }

    fn term(&mut self) -> Result<LieElement> {
        let c = match self.peek() {
            Some(d) if d.is_ascii_digit() || d == '(' => {
                let at = self.pos;
                let c = self.coefficient()?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                } else if c.is_zero() {
                    return Ok(LieElement::zero());
                } else {
                    return Err(self.error(at, "coefficient must be followed by '*'"));
                }
                c
            }
            _ => Scalar::one(),
        };
        Ok(self.monomial()?.scale(&c))
    }

    fn identifier(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0;
        while let Some(&c) = self.chars.get(self.pos) {
            let ok = match c {
                '{' => {
                    depth += 1;
                    true
                }
                '}' if depth > 0 => {
                    depth -= 1;
                    true
                }
                ',' => depth > 0,
                c => c.is_ascii_alphanumeric() || "_^'".contains(c),
            };
            if !ok {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.chars.get(start) {
                Some(c) => self.error(start, format!("unexpected '{c}'")),
                None => self.error(start, "unexpected end of input"),
            });
        }
        Ok((start, self.chars[start..self.pos].iter().collect()))
    }

    /// Splits leading `s<digits>` tokens off an identifier.
    fn split_degeneracies(&self, start: usize, ident: &str) -> Result<(Vec<usize>, String)> {
        let bytes = ident.as_bytes();
        let mut i = 0;
        let mut degs = Vec::new();
        while i + 1 < bytes.len() && bytes[i] == b's' && bytes[i + 1].is_ascii_digit() {
            let mut j = i + 1;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            let idx: usize = ident[i + 1..j]
                .parse()
                .map_err(|_| self.error(start + i, "degeneracy index out of range"))?;
            if idx > MAX_LEVEL {
                return Err(self.error(start + i, "degeneracy index out of range"));
            }
            degs.push(idx);
            i = j;
        }
        Ok((degs, ident[i..].to_string()))
    }

    fn monomial(&mut self) -> Result<LieElement> {
        let mut degs: Vec<usize> = Vec::new();
        loop {
            match self.peek() {
                Some(c @ ('[' | '<')) => {
                    let open = self.pos;
                    self.pos += 1;
                    let a = self.element()?;
                    self.expect(',')?;
                    let b = self.element()?;
                    self.expect(if c == '[' { ']' } else { '>' })?;
                    for e in [&a, &b] {
                        if !e.is_homogeneous() {
                            return Err(self.error(open, "bracket argument has mixed degrees"));
                        }
                    }
                    let raw = if c == '[' {
                        LieElement::bracket_raw(&a, &b)
                    } else {
                        LieElement::commutator_raw(&a, &b)
                    };
                    return Ok(raw.apply_degeneracies(&word(&degs)));
                }
                Some(_) => {
                    let (start, ident) = self.identifier()?;
                    let (more, name) = self.split_degeneracies(start, &ident)?;
                    degs.extend(more);
                    if name.is_empty() {
                        continue;
                    }
                    let g = self
                        .symbols
                        .get(&name)
                        .ok_or_else(|| self.error(start, format!("unknown generator {name:?}")))?;
                    let l = Letter::new(word(&degs), g.clone());
                    return Ok(LieElement::from_letter(l));
                }
                None => return Err(self.error(self.pos, "unexpected end of input")),
            }
        }
    }
}

/// The degeneracy `s_{d_0} s_{d_1} ... s_{d_k}` written left to right.
fn word(written: &[usize]) -> DegeneracyWord {
    written
        .iter()
        .rev()
        .fold(DegeneracyWord::empty(), |w, &j| w.apply(j))
}

/// Parses an element expression. The result is not normalized.
pub fn parse_element(text: &str, symbols: &SymbolTable) -> Result<LieElement> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        symbols,
    };
    if p.peek().is_none() {
        return Err(p.error(0, "empty expression"));
    }
    let e = p.element()?;
    if let Some(c) = p.peek() {
        return Err(p.error(p.pos, format!("unexpected '{c}'")));
    }
    Ok(e)
}

fn latex_name(name: &str) -> String {
    const GREEK: &[&str] = &[
        "alpha", "beta", "gamma", "delta", "epsilon", "iota", "omega", "phi", "psi", "sigma",
        "tau", "theta",
    ];
    let split = name
        .find(|c: char| !c.is_ascii_alphabetic())
        .unwrap_or(name.len());
    let (head, tail) = name.split_at(split);
    let head = if GREEK.contains(&head) {
        format!("\\{head}")
    } else {
        head.to_string()
    };
    let tail = tail.strip_prefix('_').unwrap_or(tail);
    if tail.is_empty() {
        head
    } else if let Some(inner) = tail.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        format!("{head}_{{{inner}}}")
    } else {
        format!("{head}_{{{tail}}}")
    }
}

fn latex_monomial(m: &LieMonomial) -> String {
    match m {
        LieMonomial::Leaf(l) => {
            let mut s = String::new();
            for i in l.word.indices().into_iter().rev() {
                s.push_str(&format!("s_{i}"));
            }
            if !s.is_empty() {
                s.push(' ');
            }
            s.push_str(&latex_name(l.generator.name()));
            s
        }
        LieMonomial::Bracket { left, right, .. } => {
            format!("[{}, {}]", latex_monomial(left), latex_monomial(right))
        }
    }
}

/// An alignment fragment with one signed bracket term per line.
pub fn format_latex(e: &LieElement) -> String {
    if e.is_zero() {
        return "& 0".to_string();
    }
    let mut lines = Vec::new();
    for (m, c) in e.terms() {
        let sign = if c.is_negative() { "-" } else { "+" };
        let a = c.abs();
        let coeff = if a.is_one() {
            String::new()
        } else if a.is_integer() {
            format!("{} ", a.numer())
        } else {
            format!("\\tfrac{{{}}}{{{}}} ", a.numer(), a.denom())
        };
        lines.push(format!("& {sign} {coeff}{}", latex_monomial(m)));
    }
    lines.join(" \\\\\n")
}

/// One entry of a JSON term list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub monomial: String,
}

/// The element as a list of `{coeff, monomial}` pairs in term order.
pub fn to_json_terms(e: &LieElement) -> Vec<JsonTerm> {
    e.terms()
        .iter()
        .map(|(m, c)| JsonTerm {
            coeff: c.to_string(),
            monomial: m.to_string(),
        })
        .collect()
}

/// Inverse of [`to_json_terms`].
pub fn from_json_terms(terms: &[JsonTerm], symbols: &SymbolTable) -> Result<LieElement> {
    let mut out = LieElement::zero();
    for t in terms {
        let c: Scalar = t.coeff.parse().map_err(|_| HhopError::Parse {
            line: 1,
            column: 1,
            message: format!("bad coefficient {:?}", t.coeff),
        })?;
        out += &parse_element(&t.monomial, symbols)?.scale(&c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> SymbolTable {
        symbol_table(&[
            GeneratorSymbol::new("x", 1, 1).unwrap(),
            GeneratorSymbol::new("y", 3, 1).unwrap(),
            GeneratorSymbol::new("iota{1,2}", 2, 0).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn round_trip() {
        let t = table();
        for text in [
            "-1/2*[x, y] + s1s0 x",
            "[s0 x, s1 y]",
            "0",
            "3*[iota{1,2}, x]",
        ] {
            let e = parse_element(text, &t).unwrap();
            let again = parse_element(&e.to_string(), &t).unwrap();
            assert_eq!(e, again, "{text}");
        }
    }

    #[test]
    fn degeneracies_compose_right_to_left() {
        let t = table();
        let a = parse_element("s0 s0 x", &t).unwrap();
        let b = parse_element("s1s0x", &t).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "s1s0 x");
    }

    #[test]
    fn errors_carry_positions() {
        let t = table();
        match parse_element("[x + y, x]", &t) {
            Err(HhopError::Parse { column, .. }) => assert_eq!(column, 1),
            other => panic!("{other:?}"),
        }
        match parse_element("x +\n  zz", &t) {
            Err(HhopError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(parse_element("2 x", &t).is_err());
        assert!(parse_element("", &t).is_err());
    }

    #[test]
    fn json_and_latex() {
        let t = table();
        let e = parse_element("-1/2*[x, x] + 2*y", &t).unwrap();
        let back = from_json_terms(&to_json_terms(&e), &t).unwrap();
        assert_eq!(e, back);
        let tex = format_latex(&e);
        assert!(tex.contains("\\tfrac{1}{2} [x, x]"));
        assert_eq!(latex_name("iota{1,2}"), "\\iota_{1,2}");
    }
}
