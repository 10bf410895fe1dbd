use crate::algebra::CPoly;
use crate::error::{Error, Result};
use crate::virasoro::{descendant_with, normal_order, ModeWord, Normalizer, PBWVector};

use super::sphere::Insertion;

/// Parses a whitespace-separated list of insertions:
///
/// ```text
/// item  := deriv? state '@' label
/// deriv := 'd' ('^' int)?
/// state := 'T[' int ',' int ']' | 'L[' int (',' int)* ']' | '1'
/// ```
///
/// `L[n1,..,nj]` is the word `L_{n1}..L_{nj}` on the vacuum. The empty
/// string is the empty product.
pub fn parse_insertions(src: &str) -> Result<Vec<Insertion>> {
    let mut p = Parser { src, pos: 0, nz: Normalizer::new() };
    let mut out = Vec::new();
    loop {
        p.skip_ws();
        if p.pos == src.len() {
            return Ok(out);
        }
        out.push(p.item()?);
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    nz: Normalizer,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        self.eat('-');
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        match self.src[start..self.pos].parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("expected an integer")
            }
        }
    }

    fn item(&mut self) -> Result<Insertion> {
        let mut derivs = 0;
        if self.eat('d') {
            derivs = if self.eat('^') { self.int()? } else { 1 };
            if derivs < 0 {
                return self.err("negative derivative order");
            }
        }
        let start = self.pos;
        let mut state = if self.eat('T') {
            self.expect('[')?;
            let k = self.int()?;
            self.expect(',')?;
            let m = self.int()?;
            self.expect(']')?;
            if k < 2 || m < 1 || k > 64 || m > 16 {
                self.pos = start;
                return self.err(format!("T[{k},{m}] needs 2 <= k <= 64 and 1 <= m <= 16"));
            }
            descendant_with(&mut self.nz, k as i32, m as i32)?
        } else if self.eat('L') {
            self.expect('[')?;
            let mut word: ModeWord = vec![self.int()? as i32];
            while self.eat(',') {
                word.push(self.int()? as i32);
            }
            self.expect(']')?;
            normal_order(&[(word, CPoly::one())])
        } else if self.eat('1') {
            PBWVector::vacuum()
        } else {
            return self.err("expected 'T[k,m]', 'L[..]' or '1'");
        };
        for _ in 0..derivs {
            state = self.nz.apply(-1, &state);
        }
        self.expect('@')?;
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.pos += self.peek().unwrap().len_utf8();
        }
        if start == self.pos {
            return self.err("expected a point label");
        }
        Ok(Insertion::new(state, &self.src[start..self.pos]))
    }
}
