//! Alphabets and finite sequences over them.

use std::fmt;

use crate::error::{Error, Result};

/// Default tokens for [`Alphabet::with_size`], in symbol order.
const DEFAULT_TOKENS: &str = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// Largest supported alphabet; symbols are stored as `u8` indices.
pub const MAX_ALPHABET_SIZE: usize = 256;

/// A finite, ordered set of distinct single-character tokens.
///
/// Symbol `i` of a [`Sequence`] is rendered as `symbols()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from its tokens, in order. A single-symbol alphabet is allowed.
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::AlphabetTooSmall { min: 1, got: 0 });
        }
        if symbols.len() > MAX_ALPHABET_SIZE {
            return Err(Error::AlphabetTooLarge(symbols.len()));
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::DuplicateSymbol(*c));
            }
        }
        Ok(Self { symbols })
    }

    /// Parses tokens from a string, one character per symbol.
    pub fn from_tokens(tokens: &str) -> Result<Self> {
        Self::new(tokens.chars())
    }

    /// The alphabet `{0, 1}`.
    pub fn binary() -> Self {
        Self {
            symbols: vec!['0', '1'],
        }
    }

    /// An alphabet of `size` symbols with default tokens `0-9a-zA-Z`, continuing
    /// into the Latin-1 supplement and beyond for larger sizes.
    pub fn with_size(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::AlphabetTooSmall { min: 1, got: 0 });
        }
        if size > MAX_ALPHABET_SIZE {
            return Err(Error::AlphabetTooLarge(size));
        }
        let extra = (0x00C0u32..).filter_map(char::from_u32);
        let symbols = DEFAULT_TOKENS.chars().chain(extra).take(size).collect();
        Ok(Self { symbols })
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index_of(&self, token: char) -> Option<u8> {
        self.symbols
            .iter()
            .position(|&c| c == token)
            .map(|i| i as u8)
    }

    pub fn token(&self, index: u8) -> char {
        self.symbols[index as usize]
    }

    /// Fails unless the alphabet has at least two symbols.
    pub fn require_nontrivial(&self) -> Result<()> {
        require_alphabet_size(self.size())
    }
}

pub(crate) fn require_alphabet_size(size: usize) -> Result<()> {
    if size < 2 {
        return Err(Error::AlphabetTooSmall { min: 2, got: size });
    }
    if size > MAX_ALPHABET_SIZE {
        return Err(Error::AlphabetTooLarge(size));
    }
    Ok(())
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A non-empty sequence `s_1 ... s_n` of alphabet indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequence {
    symbols: Vec<u8>,
    alphabet: Alphabet,
}

impl Sequence {
    /// Wraps symbol indices; every index must be below `alphabet.size()` and
    /// the sequence must be non-empty.
    pub fn new(alphabet: &Alphabet, symbols: Vec<u8>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some((position, &index)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s as usize >= alphabet.size())
        {
            return Err(Error::SymbolOutOfRange {
                index: index as usize,
                position: position + 1,
                size: alphabet.size(),
            });
        }
        Ok(Self {
            symbols,
            alphabet: alphabet.clone(),
        })
    }

    /// Parses a string of tokens. Every character must belong to the alphabet.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for (offset, c) in text.char_indices() {
            match alphabet.index_of(c) {
                Some(i) => symbols.push(i),
                None => {
                    return Err(Error::UnknownSymbol {
                        byte: text.as_bytes()[offset],
                        shown: c,
                        offset,
                        alphabet: alphabet.to_string(),
                    })
                }
            }
        }
        Self::new(alphabet, symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// `S(i, j) = s_i ... s_j` with 1-based inclusive indices; empty when `j < i`.
    ///
    /// # Panics
    ///
    /// Panics if `j >= i` and the range is not inside `1..=n`.
    pub fn substring(&self, i: usize, j: usize) -> &[u8] {
        if j < i {
            return &[];
        }
        assert!(
            i >= 1 && j <= self.len(),
            "S({i}, {j}) out of range for n = {}",
            self.len()
        );
        &self.symbols[i - 1..j]
    }

    /// Renders a slice of this sequence's symbols with the alphabet tokens.
    pub fn render(&self, symbols: &[u8]) -> String {
        symbols.iter().map(|&s| self.alphabet.token(s)).collect()
    }

    /// S followed by one more symbol.
    pub fn appended(&self, symbol: u8) -> Result<Self> {
        let mut symbols = self.symbols.clone();
        symbols.push(symbol);
        Self::new(&self.alphabet, symbols)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&self.symbols))
    }
}

/// True if `needle` occurs as a contiguous run inside `haystack`. The empty
/// string occurs in every string, including the empty one.
pub fn is_substring(needle: &[u8], haystack: &[u8]) -> bool {
    needle.is_empty() || haystack.windows(needle.len()).any(|w| w == needle)
}
