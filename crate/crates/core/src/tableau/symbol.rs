//! Letters of the mixed alphabet `1 < 2 < … < k < ℓ* < … < 2* < 1*`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const STAR_BIT: u32 = 1 << 31;

/// A letter of the mixed alphabet.
///
/// The whole order lives in the integer code: an unstarred `i` is stored as
/// `i`, a starred `j*` as `u32::MAX - j + 1`. Every starred code is above every
/// unstarred one, and `1*` is the largest letter. `Ord` is the derived
/// integer comparison, so call sites never branch on the star flag to compare.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Symbol(u32);

impl Symbol {
    pub const MAX_INDEX: u32 = STAR_BIT - 1;

    /// Unstarred ("row") letter `i`, `i >= 1`.
    pub fn row(i: u32) -> Self {
        assert!((1..=Self::MAX_INDEX).contains(&i), "row symbol index {i} out of range");
        Symbol(i)
    }

    /// Starred ("column") letter `j*`, `j >= 1`.
    pub fn col(j: u32) -> Self {
        assert!(
            (1..=Self::MAX_INDEX).contains(&j),
            "column symbol index {j} out of range"
        );
        Symbol(u32::MAX - j + 1)
    }

    pub fn is_starred(self) -> bool {
        self.0 & STAR_BIT != 0
    }

    /// The index without the star: `3` for both `3` and `3*`.
    pub fn index(self) -> u32 {
        if self.is_starred() {
            u32::MAX - self.0 + 1
        } else {
            self.0
        }
    }

    /// Swaps `i <-> i*` (the dagger map on letters).
    pub fn dagger(self) -> Self {
        if self.is_starred() {
            Symbol::row(self.index())
        } else {
            Symbol::col(self.index())
        }
    }

    /// Whether the letter lies in `A_k ∪ A*_l`.
    pub fn within(self, k: u32, l: u32) -> bool {
        if self.is_starred() {
            self.index() <= l
        } else {
            self.index() <= k
        }
    }

    /// Raw order code, useful for dense indexing in tests and benches.
    pub fn code(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_starred() {
            write!(f, "{}*", self.index())
        } else {
            write!(f, "{}", self.index())
        }
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, starred) = match s.strip_suffix('*') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let bad = |reason: &str| Error::InvalidSymbol {
            symbol: s.to_string(),
            reason: reason.to_string(),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected a positive integer, optionally followed by '*'"));
        }
        let index: u32 = digits.parse().map_err(|_| bad("index too large"))?;
        if index == 0 || index > Self::MAX_INDEX {
            return Err(bad("index must be in 1..2^31"));
        }
        Ok(if starred {
            Symbol::col(index)
        } else {
            Symbol::row(index)
        })
    }
}

impl From<Symbol> for String {
    fn from(s: Symbol) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Symbol {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// All letters of `A_k ∪ A*_l` in increasing order.
pub fn alphabet(k: u32, l: u32) -> Vec<Symbol> {
    (1..=k).map(Symbol::row).chain((1..=l).rev().map(Symbol::col)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_order() {
        let a = alphabet(3, 2);
        let shown: Vec<String> = a.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["1", "2", "3", "2*", "1*"]);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert!(Symbol::row(1_000_000) < Symbol::col(1_000_000));
    }

    #[test]
    fn parse_and_dagger() {
        let s: Symbol = "2*".parse().unwrap();
        assert!(s.is_starred());
        assert_eq!(s.index(), 2);
        assert_eq!(s.dagger(), Symbol::row(2));
        assert_eq!(s.dagger().dagger(), s);
        assert!("0".parse::<Symbol>().is_err());
        assert!("x".parse::<Symbol>().is_err());
        assert!("*".parse::<Symbol>().is_err());
    }

    #[test]
    fn bounds() {
        assert!(Symbol::row(2).within(2, 0));
        assert!(!Symbol::row(3).within(2, 5));
        assert!(Symbol::col(1).within(0, 1));
        assert!(!Symbol::col(2).within(9, 1));
    }
}
