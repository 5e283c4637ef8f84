//! Holonomy words: the block normal form `unit * prod (A_X * link)`.
//!
//! Text form, tokens separated by spaces:
//!
//! ```text
//! xi=<n> unit=<1|i|-1|-i> A[<curve>;<twist>;<exit>;<entry>] <link> A[...] <link> ...
//! link := O0 | O1 | S[+2] | S[-2]
//! ```
//!
//! `A[c;n;a;b]` stands for A_X with X = -t_c - 2n (crossing curve c with n
//! right turns, leaving through slot a and arriving at slot b), `O0`/`O1` are
//! the connectors and `S[y]` is the scc block `O1 * B_y * O0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::surface::SlotLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Omega {
    O0,
    O1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    /// Zero-based curve index.
    Crossing { curve: usize, twist: i64, exit: SlotLabel, entry: SlotLabel },
    Connector(Omega),
    Scc { y: i64 },
}

impl Token {
    pub fn is_crossing(&self) -> bool {
        matches!(self, Token::Crossing { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyWord {
    pub arity: usize,
    /// Global factor i^unit.
    pub unit: u8,
    pub tokens: Vec<Token>,
}

impl HolonomyWord {
    pub fn new(arity: usize, unit: u8, tokens: Vec<Token>) -> Result<Self> {
        let w = HolonomyWord { arity, unit: unit % 4, tokens };
        w.check()?;
        Ok(w)
    }

    /// Tokens must alternate crossing, link, crossing, link, ...
    pub fn check(&self) -> Result<()> {
        if self.tokens.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !self.tokens.len().is_multiple_of(2) {
            return Err(Error::MalformedWord("odd number of tokens".into()));
        }
        for (k, t) in self.tokens.iter().enumerate() {
            if t.is_crossing() != (k % 2 == 0) {
                return Err(Error::MalformedWord(format!("token {} breaks crossing/link alternation", k + 1)));
            }
            match *t {
                Token::Crossing { curve, .. } if curve >= self.arity => {
                    return Err(Error::MalformedWord(format!("curve {} exceeds arity {}", curve + 1, self.arity)))
                }
                Token::Scc { y } if y != 2 && y != -2 => return Err(Error::MalformedWord(format!("scc shift {y} is not +-2"))),
                _ => {}
            }
        }
        Ok(())
    }

    /// Number of crossings per curve.
    pub fn crossings_per_curve(&self) -> Vec<i64> {
        let mut v = vec![0; self.arity];
        for t in &self.tokens {
            if let Token::Crossing { curve, .. } = t {
                v[*curve] += 1;
            }
        }
        v
    }

    /// Summed twist per curve.
    pub fn twist_per_curve(&self) -> Vec<i64> {
        let mut v = vec![0; self.arity];
        for t in &self.tokens {
            if let Token::Crossing { curve, twist, .. } = t {
                v[*curve] += twist;
            }
        }
        v
    }

    pub fn q(&self) -> i64 {
        self.tokens.iter().filter(|t| t.is_crossing()).count() as i64
    }

    pub fn scc_blocks(&self) -> usize {
        self.tokens.iter().filter(|t| matches!(t, Token::Scc { .. })).count()
    }

    /// Rotates by whole crossing/link pairs.
    pub fn rotate(&self, pairs: usize) -> HolonomyWord {
        let mut tokens = self.tokens.clone();
        let n = tokens.len();
        if n > 0 {
            tokens.rotate_left((2 * pairs) % n);
        }
        HolonomyWord { arity: self.arity, unit: self.unit, tokens }
    }

    /// Link preceding crossing j and link following it (cyclically).
    pub fn links_around(&self, j: usize) -> (Token, Token) {
        let n = self.tokens.len();
        (self.tokens[(2 * j + n - 1) % n], self.tokens[2 * j + 1])
    }
}

fn unit_str(u: u8) -> &'static str {
    ["1", "i", "-1", "-i"][(u % 4) as usize]
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Crossing { curve, twist, exit, entry } => write!(f, "A[{};{};{};{}]", curve + 1, twist, exit, entry),
            Token::Connector(Omega::O0) => write!(f, "O0"),
            Token::Connector(Omega::O1) => write!(f, "O1"),
            Token::Scc { y } => write!(f, "S[{y:+}]"),
        }
    }
}

impl fmt::Display for HolonomyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi={} unit={}", self.arity, unit_str(self.unit))?;
        for t in &self.tokens {
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::MalformedWord(msg.into())
}

fn parse_token(tok: &str) -> Result<Token> {
    match tok {
        "O0" => return Ok(Token::Connector(Omega::O0)),
        "O1" => return Ok(Token::Connector(Omega::O1)),
        _ => {}
    }
    if let Some(inner) = tok.strip_prefix("S[").and_then(|t| t.strip_suffix(']')) {
        let y = inner.parse::<i64>().map_err(|_| bad(format!("bad scc token `{tok}`")))?;
        return Ok(Token::Scc { y });
    }
    if let Some(inner) = tok.strip_prefix("A[").and_then(|t| t.strip_suffix(']')) {
        let parts: Vec<&str> = inner.split(';').collect();
        if parts.len() != 4 {
            return Err(bad(format!("crossing token `{tok}` needs 4 fields")));
        }
        let curve = parts[0].parse::<usize>().ok().filter(|c| *c >= 1).ok_or_else(|| bad(format!("bad curve in `{tok}`")))?;
        let twist = parts[1].parse::<i64>().map_err(|_| bad(format!("bad twist in `{tok}`")))?;
        let exit = parts[2].parse::<SlotLabel>().map_err(bad)?;
        let entry = parts[3].parse::<SlotLabel>().map_err(bad)?;
        return Ok(Token::Crossing { curve: curve - 1, twist, exit, entry });
    }
    Err(bad(format!("unknown token `{tok}`")))
}

impl FromStr for HolonomyWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split_whitespace();
        let arity = it
            .next()
            .and_then(|t| t.strip_prefix("xi="))
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| bad("word must start with xi=<n>"))?;
        let unit = match it.next().and_then(|t| t.strip_prefix("unit=")) {
            Some("1") => 0,
            Some("i") => 1,
            Some("-1") => 2,
            Some("-i") => 3,
            _ => return Err(bad("expected unit=<1|i|-1|-i>")),
        };
        let tokens = it.map(parse_token).collect::<Result<Vec<_>>>()?;
        HolonomyWord::new(arity, unit, tokens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let s = "xi=2 unit=-i A[1;0;inf;inf] S[+2] A[2;-3;0;1] O1";
        let w: HolonomyWord = s.parse().unwrap();
        assert_eq!(w.to_string(), s);
        assert_eq!(w.crossings_per_curve(), vec![1, 1]);
        assert_eq!(w.twist_per_curve(), vec![0, -3]);
    }

    #[test]
    fn malformed() {
        assert!("xi=1 unit=1".parse::<HolonomyWord>().is_err());
        assert!("xi=1 unit=1 O0 A[1;0;0;0]".parse::<HolonomyWord>().is_err());
        assert!("xi=1 unit=1 A[2;0;0;0] O0".parse::<HolonomyWord>().is_err());
        assert!("xi=1 unit=1 A[1;0;0;0] S[+4]".parse::<HolonomyWord>().is_err());
        assert!("xi=1 unit=2 A[1;0;0;0] O0".parse::<HolonomyWord>().is_err());
        assert_eq!(HolonomyWord::new(1, 0, vec![]), Err(Error::EmptyWord));
    }
}
