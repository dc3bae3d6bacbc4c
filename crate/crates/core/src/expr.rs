//! A small expression language over the octonions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*        left-associative: a*b*c = (a*b)*c
//! unary   := '-' unary | postfix
//! postfix := primary ('^' integer)?
//! primary := number unit? | unit | '(' expr ')' | '[' expr ',' expr ',' expr ']'
//!          | func '(' expr (',' expr)* ')'
//! unit    := i | j | k | kl | jl | il | l | e1 … e8
//! number  := digits ('.' digits)? (('e' | 'E') ('+' | '-') digits)?
//! func    := conj | inv | norm | re | im | assoc | exp
//! ```
//!
//! `x / y` is `x · y⁻¹` and `[x, y, z]` is the associator. Juxtaposition
//! other than `number unit` (as in `3i`) is not multiplication.

use crate::error::{Error, Result};
use crate::octonion::{associator, BasisUnit, Octonion};

pub fn eval(src: &str) -> Result<Octonion> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Octonion> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += self.term()?;
            } else if self.eat(b'-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Octonion> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.unary()?;
            } else if self.eat(b'/') {
                acc = acc * self.unary()?.inverse()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Octonion> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        let base = self.primary()?;
        if self.eat(b'^') {
            let n = self.integer()?;
            return Ok(base.powi(n));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("expected a non-negative integer exponent"))
    }

    fn word(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn unit(name: &str) -> Option<Octonion> {
        if let Some(u) = BasisUnit::from_name(name).filter(|u| u.index() > 1) {
            return Some(u.to_octonion());
        }
        let n: u8 = name.strip_prefix('e')?.parse().ok()?;
        BasisUnit::new(n).map(BasisUnit::to_octonion)
    }

    fn primary(&mut self) -> Result<Octonion> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(b',')?;
                let y = self.expr()?;
                self.expect(b',')?;
                let z = self.expr()?;
                self.expect(b']')?;
                Ok(associator(x, y, z))
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'.')
                {
                    self.pos += 1;
                }
                // `2e8` is twice the unit e8, so an exponent needs an explicit sign: `1e+3`
                let signed_exp = self.src.get(self.pos..self.pos + 2).is_some_and(|w| {
                    matches!(w[0], b'e' | b'E') && matches!(w[1], b'+' | b'-')
                });
                if signed_exp {
                    let save = self.pos;
                    self.pos += 2;
                    let digits = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    if self.pos == digits {
                        self.pos = save;
                    }
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                let r: f64 = text.parse().map_err(|_| self.error("bad number"))?;
                let save = self.pos;
                let name = self.word().to_string();
                if name.is_empty() {
                    return Ok(Octonion::real(r));
                }
                match Self::unit(&name) {
                    Some(u) => Ok(u * r),
                    None => {
                        self.pos = save;
                        Err(self.error(&format!("unknown unit {name:?}")))
                    }
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.word().to_string();
                if let Some(u) = Self::unit(&name) {
                    return Ok(u);
                }
                let args = self.call_args().map_err(|e| match e {
                    Error::Parse(_) if self.pos == start + name.len() => {
                        Error::Parse(format!("unknown name {name:?} at byte {start}"))
                    }
                    e => e,
                })?;
                let one = |args: &[Octonion]| -> Result<Octonion> {
                    match args {
                        [x] => Ok(*x),
                        _ => Err(Error::Parse(format!("{name} takes one argument"))),
                    }
                };
                match name.as_str() {
                    "conj" => Ok(one(&args)?.conj()),
                    "inv" => one(&args)?.inverse(),
                    "norm" => Ok(Octonion::real(one(&args)?.norm())),
                    "re" => Ok(Octonion::real(one(&args)?.real_part())),
                    "im" => Ok(one(&args)?.imag_part()),
                    "exp" => Ok(one(&args)?.exp()),
                    "assoc" => match args.as_slice() {
                        [x, y, z] => Ok(associator(*x, *y, *z)),
                        _ => Err(Error::Parse("assoc takes three arguments".into())),
                    },
                    _ => Err(Error::Parse(format!("unknown function {name:?}"))),
                }
            }
            _ => Err(self.error("expected a value")),
        }
    }

    fn call_args(&mut self) -> Result<Vec<Octonion>> {
        self.expect(b'(')?;
        let mut args = vec![self.expr()?];
        while self.eat(b',') {
            args.push(self.expr()?);
        }
        self.expect(b')')?;
        Ok(args)
    }
}
