use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::symbol::Symbol;
use crate::error::{Error, Result};

/// A finite word over `A_k ∪ A*_l`, carrying its alphabet bounds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word {
    k: u32,
    l: u32,
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(k: u32, l: u32, symbols: Vec<Symbol>) -> Result<Self> {
        if let Some(bad) = symbols.iter().find(|s| !s.within(k, l)) {
            return Err(Error::Alphabet {
                symbol: bad.to_string(),
                k,
                l,
            });
        }
        Ok(Word { k, l, symbols })
    }

    /// Unstarred word over `A_k`.
    pub fn from_indices(k: u32, indices: &[u32]) -> Result<Self> {
        Word::new(k, 0, indices.iter().map(|&i| Symbol::row(i)).collect())
    }

    pub fn empty(k: u32, l: u32) -> Self {
        Word {
            k,
            l,
            symbols: Vec::new(),
        }
    }

    /// Parses the comma-separated text form and infers the tightest bounds.
    pub fn parse_inferred(text: &str) -> Result<Self> {
        let symbols = parse_symbols(text)?;
        let k = symbols
            .iter()
            .filter(|s| !s.is_starred())
            .map(|s| s.index())
            .max()
            .unwrap_or(0);
        let l = symbols
            .iter()
            .filter(|s| s.is_starred())
            .map(|s| s.index())
            .max()
            .unwrap_or(0);
        Word::new(k, l, symbols)
    }

    pub fn parse_with_bounds(text: &str, k: u32, l: u32) -> Result<Self> {
        Word::new(k, l, parse_symbols(text)?)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_unstarred(&self) -> bool {
        self.symbols.iter().all(|s| !s.is_starred())
    }

    /// `[w]_n`, the initial segment of length `n`.
    pub fn prefix(&self, n: usize) -> Word {
        Word {
            k: self.k,
            l: self.l,
            symbols: self.symbols[..n].to_vec(),
        }
    }

    /// `[w]^m`, the final segment of length `m`.
    pub fn suffix(&self, m: usize) -> Word {
        Word {
            k: self.k,
            l: self.l,
            symbols: self.symbols[self.len() - m..].to_vec(),
        }
    }

    pub fn rev(&self) -> Word {
        Word {
            k: self.k,
            l: self.l,
            symbols: self.symbols.iter().rev().copied().collect(),
        }
    }

    /// `w†`: every `i` becomes `i*` and every `j*` becomes `j`; bounds swap.
    pub fn dagger(&self) -> Word {
        Word {
            k: self.l,
            l: self.k,
            symbols: self.symbols.iter().map(|s| s.dagger()).collect(),
        }
    }

    /// Number of occurrences of each letter of the alphabet, in alphabet order.
    pub fn content(&self) -> Vec<usize> {
        let alphabet = super::symbol::alphabet(self.k, self.l);
        alphabet
            .iter()
            .map(|a| self.symbols.iter().filter(|s| *s == a).count())
            .collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word {
            k: self.k.max(other.k),
            l: self.l.max(other.l),
            symbols,
        }
    }

    pub fn push(&mut self, s: Symbol) -> Result<()> {
        if !s.within(self.k, self.l) {
            return Err(Error::Alphabet {
                symbol: s.to_string(),
                k: self.k,
                l: self.l,
            });
        }
        self.symbols.push(s);
        Ok(())
    }
}

fn parse_symbols(text: &str) -> Result<Vec<Symbol>> {
    let text = text.trim();
    if text.is_empty() || text == "∅" {
        return Ok(Vec::new());
    }
    text.split(',').map(str::parse).collect()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse_inferred(s)
    }
}

/// All words of length `n` over `A_k ∪ A*_l`, lexicographic in the letter order.
pub fn all_words(k: u32, l: u32, n: usize) -> impl Iterator<Item = Word> {
    let alphabet = super::symbol::alphabet(k, l);
    let base = alphabet.len();
    let total = if base == 0 {
        usize::from(n == 0)
    } else {
        base.checked_pow(n as u32).expect("word count overflows usize")
    };
    (0..total).map(move |mut code| {
        let mut symbols = vec![alphabet.first().copied().unwrap_or(Symbol::row(1)); n];
        for slot in symbols.iter_mut().rev() {
            *slot = alphabet[code % base];
            code /= base;
        }
        Word { k, l, symbols }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segments_and_reversal() {
        let w: Word = "1,2,3".parse().unwrap();
        assert_eq!(w.rev().to_string(), "3,2,1");
        assert_eq!(w.prefix(2).to_string(), "1,2");
        assert_eq!(w.suffix(2).to_string(), "2,3");
        assert_eq!(w.prefix(0).len(), 0);
    }

    #[test]
    fn dagger_swaps_bounds() {
        let w = Word::parse_with_bounds("1,2*", 1, 2).unwrap();
        let d = w.dagger();
        assert_eq!(d.to_string(), "1*,2");
        assert_eq!((d.k(), d.l()), (2, 1));
        assert_eq!(d.dagger(), w);
    }

    #[test]
    fn bounds_enforced() {
        assert!(Word::parse_with_bounds("1,3", 2, 0).is_err());
        assert!(Word::parse_with_bounds("1*", 2, 0).is_err());
        assert_eq!(Word::parse_inferred("").unwrap().len(), 0);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let words: Vec<String> = all_words(2, 0, 2).map(|w| w.to_string()).collect();
        assert_eq!(words, ["1,1", "1,2", "2,1", "2,2"]);
        assert_eq!(all_words(1, 1, 3).count(), 8);
        assert_eq!(all_words(3, 0, 0).count(), 1);
    }
}
