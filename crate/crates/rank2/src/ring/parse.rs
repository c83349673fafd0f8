//! Recursive-descent parser for the ring-spec mini-language.
//!
//! ```text
//! spec := "zmod(" INT ")"
//!       | "gf(" INT "," INT "," poly ")"
//!       | "prod(" spec { "," spec } ")"
//!       | "quot(" spec "," poly ")"
//!       | "zsqrt(" INT ")"
//! poly := "[" INT { "," INT } "]"
//! ```
//!
//! Whitespace is insignificant. Polynomial coefficients are listed
//! low-to-high degree and interpreted in the base ring. Semantic validation
//! (primality, irreducibility, monicity, squarefreeness) runs as part of
//! parsing, so the returned spec always builds.

use super::{Ring, RingSpec};
use crate::{Error, Result};

/// Parses the grammar above and returns the canonical spec tree.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input after ring spec"));
    }
    // Semantic validation + canonicalization happen in Ring::from_spec.
    let ring = Ring::from_spec(spec)?;
    Ok(ring.spec().clone())
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, ch: u8) -> Result<()> {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == ch {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", ch as char)))
        }
    }

    fn peek(&mut self, ch: u8) -> bool {
        self.skip_ws();
        self.pos < self.bytes.len() && self.bytes[self.pos] == ch
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.bytes.len() && self.bytes[self.pos] == b'-' {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| self.err("integer out of range"))
    }

    fn uint(&mut self) -> Result<u64> {
        let v = self.int()?;
        if v < 0 {
            return Err(self.err("expected a non-negative integer"));
        }
        Ok(v as u64)
    }

    fn poly(&mut self) -> Result<Vec<i64>> {
        self.expect(b'[')?;
        let mut coeffs = vec![self.int()?];
        while self.peek(b',') {
            self.expect(b',')?;
            coeffs.push(self.int()?);
        }
        self.expect(b']')?;
        Ok(coeffs)
    }

    fn spec(&mut self) -> Result<RingSpec> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident();
        match name.as_str() {
            "zmod" => {
                self.expect(b'(')?;
                let n = self.uint()?;
                self.expect(b')')?;
                Ok(RingSpec::Zmod(n))
            }
            "gf" => {
                self.expect(b'(')?;
                let p = self.uint()?;
                self.expect(b',')?;
                let k = self.uint()?;
                self.expect(b',')?;
                let poly = self.poly()?;
                self.expect(b')')?;
                if k > u32::MAX as u64 {
                    return Err(self.err("extension degree too large"));
                }
                let modulus = poly
                    .into_iter()
                    .map(|c| {
                        if p == 0 {
                            0
                        } else {
                            c.rem_euclid(p as i64) as u64
                        }
                    })
                    .collect();
                Ok(RingSpec::Gf {
                    p,
                    k: k as u32,
                    modulus,
                })
            }
            "prod" => {
                self.expect(b'(')?;
                let mut parts = vec![self.spec()?];
                while self.peek(b',') {
                    self.expect(b',')?;
                    parts.push(self.spec()?);
                }
                self.expect(b')')?;
                Ok(RingSpec::Prod(parts))
            }
            "quot" => {
                self.expect(b'(')?;
                let base = self.spec()?;
                self.expect(b',')?;
                let poly = self.poly()?;
                self.expect(b')')?;
                // reduce into [0, char) later; store non-negative residues now
                let base_ring = Ring::from_spec(base)?;
                let ch = base_ring.characteristic();
                let modulus = poly.into_iter().map(|c| c.rem_euclid(ch as i64) as u64).collect();
                Ok(RingSpec::Quot {
                    base: Box::new(base_ring.spec().clone()),
                    modulus,
                })
            }
            "zsqrt" => {
                self.expect(b'(')?;
                let d = self.int()?;
                self.expect(b')')?;
                Ok(RingSpec::ZSqrt(d))
            }
            _ => {
                self.pos = at;
                Err(self.err("expected one of zmod, gf, prod, quot, zsqrt"))
            }
        }
    }
}
