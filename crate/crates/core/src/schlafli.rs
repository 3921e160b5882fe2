//! Schläfli symbols: parsing, validation, classification and canonical text.
//!
//! Grammar (whitespace-tolerant):
//!
//! ```text
//! symbol := '{' entry (',' entry)* '}'
//! entry  := int | int '/' int | '∞' | "inf"
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchlafliError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid fraction {p}/{q}: {msg}")]
    Constraint { p: u64, q: u64, msg: &'static str },
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A regular polygon `p/q`: `p` vertices, turning number `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction {
    p: u64,
    q: u64,
}

impl Fraction {
    pub fn new(p: u64, q: u64) -> Result<Self, SchlafliError> {
        if p < 2 {
            return Err(SchlafliError::Constraint { p, q, msg: "polygon order must be at least 2" });
        }
        if q == 0 || q >= p {
            return Err(SchlafliError::Constraint { p, q, msg: "turning number must satisfy 1 <= q < p" });
        }
        if gcd(p, q) != 1 {
            return Err(SchlafliError::Constraint { p, q, msg: "p and q must be coprime" });
        }
        Ok(Fraction { p, q })
    }

    /// Convex `p`-gon.
    pub fn convex(p: u64) -> Result<Self, SchlafliError> {
        Fraction::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_convex(&self) -> bool {
        self.q == 1
    }

    /// `q > p/2`: only representable on the sphere.
    pub fn is_large(&self) -> bool {
        2 * self.q > self.p
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Finite(Fraction),
    Infinite,
}

impl Entry {
    pub fn fraction(&self) -> Option<Fraction> {
        match self {
            Entry::Finite(f) => Some(*f),
            Entry::Infinite => None,
        }
    }

    pub fn is_convex(&self) -> bool {
        match self {
            Entry::Finite(f) => f.is_convex(),
            Entry::Infinite => true,
        }
    }

    /// Order of a convex finite entry.
    pub fn convex_order(&self) -> Option<u64> {
        match self {
            Entry::Finite(f) if f.is_convex() => Some(f.p),
            _ => None,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Finite(fr) => fr.fmt(f),
            Entry::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchlafliSymbol {
    entries: Vec<Entry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curvature {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl fmt::Display for Curvature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Curvature::Spherical => "spherical",
            Curvature::Euclidean => "euclidean",
            Curvature::Hyperbolic => "hyperbolic",
        })
    }
}

impl SchlafliSymbol {
    pub fn new(entries: Vec<Entry>) -> Result<Self, SchlafliError> {
        if entries.is_empty() {
            return Err(SchlafliError::Syntax { pos: 0, msg: "empty symbol".into() });
        }
        Ok(SchlafliSymbol { entries })
    }

    /// Symbol made of convex entries; `0` stands for the infinity marker.
    pub fn from_convex(orders: &[u64]) -> Result<Self, SchlafliError> {
        let entries = orders
            .iter()
            .map(|&p| if p == 0 { Ok(Entry::Infinite) } else { Fraction::convex(p).map(Entry::Finite) })
            .collect::<Result<Vec<_>, _>>()?;
        SchlafliSymbol::new(entries)
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_convex(&self) -> bool {
        self.entries.iter().all(Entry::is_convex)
    }

    pub fn has_large_star(&self) -> bool {
        self.entries.iter().any(|e| e.fraction().is_some_and(|f| f.is_large()))
    }

    /// `(p, q)` for a convex length-2 symbol with finite entries.
    pub fn convex_pair(&self) -> Option<(u64, u64)> {
        match self.entries.as_slice() {
            [a, b] => Some((a.convex_order()?, b.convex_order()?)),
            _ => None,
        }
    }

    /// Sign of `1/m + 1/k - 1/2` for a convex length-2 symbol (∞ counts as 1/∞ = 0).
    pub fn classify(&self) -> Option<Curvature> {
        let [a, b] = self.entries.as_slice() else { return None };
        if !a.is_convex() || !b.is_convex() {
            return None;
        }
        // 2k + 2m vs mk, with infinity handled as a limit.
        let ord = match (a.convex_order(), b.convex_order()) {
            (Some(m), Some(k)) => (2 * k + 2 * m).cmp(&(m * k)),
            (Some(m), None) | (None, Some(m)) => 2.cmp(&m),
            (None, None) => std::cmp::Ordering::Less,
        };
        Some(match ord {
            std::cmp::Ordering::Greater => Curvature::Spherical,
            std::cmp::Ordering::Equal => Curvature::Euclidean,
            std::cmp::Ordering::Less => Curvature::Hyperbolic,
        })
    }

    pub fn parse(text: &str) -> Result<Self, SchlafliError> {
        Parser { chars: text.char_indices().collect(), at: 0, len: text.len() }.symbol()
    }
}

impl fmt::Display for SchlafliSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            e.fmt(f)?;
        }
        f.write_str("}")
    }
}

impl FromStr for SchlafliSymbol {
    type Err = SchlafliError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SchlafliSymbol::parse(s)
    }
}

impl Serialize for SchlafliSymbol {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SchlafliSymbol {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        SchlafliSymbol::parse(&s).map_err(serde::de::Error::custom)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |c| c.0)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.at).is_some_and(|c| c.1.is_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|c| c.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SchlafliError> {
        Err(SchlafliError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, want: char) -> Result<(), SchlafliError> {
        match self.peek() {
            Some(c) if c == want => {
                self.at += 1;
                Ok(())
            }
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    fn int(&mut self) -> Result<u64, SchlafliError> {
        self.skip_ws();
        let start = self.at;
        let mut value: u64 = 0;
        while let Some(d) = self.chars.get(self.at).and_then(|c| c.1.to_digit(10)) {
            value = match value.checked_mul(10).and_then(|v| v.checked_add(d as u64)) {
                Some(v) => v,
                None => return self.err("integer overflow"),
            };
            self.at += 1;
        }
        if self.at == start {
            return self.err("expected an integer");
        }
        Ok(value)
    }

    fn entry(&mut self) -> Result<Entry, SchlafliError> {
        match self.peek() {
            Some('∞') => {
                self.at += 1;
                Ok(Entry::Infinite)
            }
            Some('i') => {
                for want in ['i', 'n', 'f'] {
                    if self.chars.get(self.at).map(|c| c.1) != Some(want) {
                        return self.err("expected \"inf\"");
                    }
                    self.at += 1;
                }
                Ok(Entry::Infinite)
            }
            _ => {
                let p = self.int()?;
                let q = if self.peek() == Some('/') {
                    self.at += 1;
                    self.int()?
                } else {
                    1
                };
                Ok(Entry::Finite(Fraction::new(p, q)?))
            }
        }
    }

    fn symbol(mut self) -> Result<SchlafliSymbol, SchlafliError> {
        self.expect('{')?;
        let mut entries = vec![self.entry()?];
        loop {
            match self.peek() {
                Some(',') => {
                    self.at += 1;
                    entries.push(self.entry()?);
                }
                Some('}') => {
                    self.at += 1;
                    break;
                }
                Some(c) => return self.err(format!("unexpected '{c}'")),
                None => return self.err("unterminated symbol"),
            }
        }
        if self.peek().is_some() {
            return self.err("trailing characters");
        }
        SchlafliSymbol::new(entries)
    }
}
