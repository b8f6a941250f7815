//! Turning raw input into a [`Sequence`].

use std::io::Read;
use std::path::PathBuf;

use clap::ValueEnum;
use lz76::{Alphabet, Error, Result, Sequence};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Characters drawn from the declared alphabet; ASCII whitespace is skipped.
    #[default]
    Symbols,
    /// Raw bytes unpacked most-significant bit first into a binary sequence.
    Bits,
    /// Raw bytes, each reduced modulo the alphabet size.
    Bytes,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Inline(String),
    File(PathBuf),
    Stdin,
}

#[derive(Clone, Debug)]
pub struct InputSpec {
    pub source: Source,
    pub format: Format,
    pub alphabet: Alphabet,
}

impl InputSpec {
    /// Reads the source and decodes it.
    pub fn read(&self, stdin: &mut dyn Read) -> Result<Sequence> {
        let raw = match &self.source {
            Source::Inline(text) => text.clone().into_bytes(),
            Source::File(path) => std::fs::read(path)?,
            Source::Stdin => {
                let mut buf = Vec::new();
                stdin.read_to_end(&mut buf)?;
                buf
            }
        };
        decode(&raw, self.format, &self.alphabet)
    }
}

pub fn decode(raw: &[u8], format: Format, alphabet: &Alphabet) -> Result<Sequence> {
    match format {
        Format::Symbols => decode_symbols(raw, alphabet),
        Format::Bits => {
            if alphabet.size() != 2 {
                return Err(Error::Invalid(format!(
                    "bits format needs a binary alphabet, got {} symbols",
                    alphabet.size()
                )));
            }
            Sequence::new(alphabet, unpack_bits(raw))
        }
        Format::Bytes => {
            let alpha = alphabet.size();
            Sequence::new(
                alphabet,
                raw.iter().map(|&b| (b as usize % alpha) as u8).collect(),
            )
        }
    }
}

/// Most-significant bit first: `0xB4` becomes `1 0 1 1 0 1 0 0`.
pub fn unpack_bits(raw: &[u8]) -> Vec<u8> {
    raw.iter()
        .flat_map(|&byte| (0..8).rev().map(move |bit| (byte >> bit) & 1))
        .collect()
}

fn decode_symbols(raw: &[u8], alphabet: &Alphabet) -> Result<Sequence> {
    let text = std::str::from_utf8(raw).map_err(|e| {
        let offset = e.valid_up_to();
        Error::Invalid(format!(
            "invalid UTF-8: byte {:#04x} at offset {offset}",
            raw[offset]
        ))
    })?;
    let mut symbols = Vec::with_capacity(text.len());
    for (offset, c) in text.char_indices() {
        if c.is_ascii_whitespace() && alphabet.index_of(c).is_none() {
            continue;
        }
        match alphabet.index_of(c) {
            Some(index) => symbols.push(index),
            None => {
                return Err(Error::UnknownSymbol {
                    byte: raw[offset],
                    shown: c,
                    offset,
                    alphabet: alphabet.to_string(),
                })
            }
        }
    }
    Sequence::new(alphabet, symbols)
}
