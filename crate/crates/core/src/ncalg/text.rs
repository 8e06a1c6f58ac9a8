//! Text form of polynomials and tensors.
//!
//! ```text
//! sum    := ['+'|'-'] tterm (('+'|'-') tterm)*
//! tterm  := prod ('⊗' prod)*
//! prod   := power (('*'|'.') power)*
//! power  := atom ('^' INT)?
//! atom   := INT | NAME | '(' sum ')'
//! ```
//! A NAME is a generator of the alphabet or a scalar parameter. Rendering
//! produces this grammar with words written as dotted letters (`x.g.g`).

use super::poly::NCPoly;
use super::tensor::Tensor;
use super::word::Alphabet;
use crate::error::{Error, Result};
use crate::scalars::Coeff;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Name(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Int(t.parse().map_err(|_| Error::Parse(t.clone()))?));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(cs[st..i].iter().collect()));
        } else {
            let c = if c == '−' { '-' } else { c };
            if !"+-*.^()⊗".contains(c) {
                return Err(Error::Parse(format!("unexpected character {:?}", c)));
            }
            out.push(Tok::Sym(c));
            i += 1;
        }
    }
    Ok(out)
}

struct Parser<'a, C> {
    toks: Vec<Tok>,
    pos: usize,
    alph: &'a Alphabet,
    one: &'a C,
    scalar: &'a dyn Fn(&str) -> Option<C>,
}

type Term<C> = Vec<NCPoly<C>>;

impl<'a, C: Coeff> Parser<'a, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Vec<Term<C>>> {
        let mut out = Vec::new();
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let mut t = self.tterm()?;
            if neg {
                t[0] = t[0].neg();
            }
            out.push(t);
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn tterm(&mut self) -> Result<Term<C>> {
        let mut t = vec![self.prod()?];
        while self.eat('⊗') {
            t.push(self.prod()?);
        }
        Ok(t)
    }

    fn prod(&mut self) -> Result<NCPoly<C>> {
        let mut acc = self.power()?;
        while self.eat('*') || self.eat('.') {
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<NCPoly<C>> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) if n >= 0 => {
                    self.pos += 1;
                    return Ok(base.pow(n as usize, self.one));
                }
                _ => return Err(Error::Parse("exponent must be a nonnegative integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NCPoly<C>> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(NCPoly::constant(self.one.int_like(n)))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                if let Some(l) = self.alph.index_of(&name) {
                    Ok(NCPoly::letter(self.alph, l, self.one))
                } else if let Some(c) = (self.scalar)(&name) {
                    Ok(NCPoly::constant(c))
                } else {
                    Err(Error::UnknownName(name))
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                let mut acc = NCPoly::zero();
                for t in inner {
                    if t.len() != 1 {
                        return Err(Error::Parse("tensor inside parentheses".into()));
                    }
                    acc = acc.add(&t[0]);
                }
                Ok(acc)
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

fn parse_terms<C: Coeff>(
    s: &str,
    alph: &Alphabet,
    one: &C,
    scalar: &dyn Fn(&str) -> Option<C>,
) -> Result<Vec<Term<C>>> {
    let mut p = Parser { toks: lex(s)?, pos: 0, alph, one, scalar };
    let out = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {:?}", s)));
    }
    Ok(out)
}

/// Parses a polynomial; `scalar` resolves parameter names.
pub fn parse_poly<C: Coeff>(
    s: &str,
    alph: &Alphabet,
    one: &C,
    scalar: &dyn Fn(&str) -> Option<C>,
) -> Result<NCPoly<C>> {
    let mut acc = NCPoly::zero();
    for t in parse_terms(s, alph, one, scalar)? {
        if t.len() != 1 {
            return Err(Error::Parse(format!("expected a polynomial, found a tensor in {:?}", s)));
        }
        acc = acc.add(&t[0]);
    }
    Ok(acc)
}

/// Parses a tensor whose terms all have `arity` factors.
pub fn parse_tensor<C: Coeff>(
    s: &str,
    alph: &Alphabet,
    one: &C,
    scalar: &dyn Fn(&str) -> Option<C>,
    arity: usize,
) -> Result<Tensor<C>> {
    let mut acc = Tensor::zero(arity);
    for t in parse_terms(s, alph, one, scalar)? {
        if t.len() != arity {
            return Err(Error::ArityMismatch { expected: arity, got: t.len() });
        }
        let refs: Vec<&NCPoly<C>> = t.iter().collect();
        acc = acc.add(&Tensor::pure(&refs))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, ParamPoly, ParamSpace};

    #[test]
    fn round_trip_numeric() {
        let a = Alphabet::new(&["g", "x", "y"], &["g"]).unwrap();
        let one = Fp::one(3);
        let none = |_: &str| None;
        let f = parse_poly("2*x.y.g + g^2 - (x + 1)*y", &a, &one, &none).unwrap();
        let back = parse_poly(&f.render(&a), &a, &one, &none).unwrap();
        assert_eq!(f, back);
        assert_eq!(parse_poly("g.g", &a, &one, &none).unwrap().render(&a), "g.g");
    }

    #[test]
    fn parametric_and_tensor() {
        let sp = ParamSpace::new(3, &["e1", "s"], &["e1"]);
        let a = Alphabet::new(&["g", "x"], &["g"]).unwrap();
        let one = ParamPoly::constant(&sp, 1);
        let sc = |n: &str| ParamPoly::named(&sp, n).ok();
        let f = parse_poly("x.g + e1*g - e1*g.g + (e1 + s)*x", &a, &one, &sc).unwrap();
        let back = parse_poly(&f.render(&a), &a, &one, &sc).unwrap();
        assert_eq!(f, back);
        let t = parse_tensor("x ⊗ 1 + g ⊗ x", &a, &one, &sc, 2).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(parse_tensor(&t.render(&a), &a, &one, &sc, 2).unwrap(), t);
    }
}
