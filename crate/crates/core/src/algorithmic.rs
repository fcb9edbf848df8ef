//! LZ78 parse used as a computable stand-in for algorithmic information.
//!
//! The length of the shortest program producing a string is uncomputable.
//! What we compute instead is the size of one particular description of it,
//! an LZ78 dictionary parse, which is an upper bound up to the constant cost
//! of the decoder. Regular strings parse into few long phrases, random ones
//! into many short phrases.
//!
//! Encoding cost of phrase `j` (1-based) is `ceil(log2 j)` bits for the
//! dictionary index plus `ceil(log2 S)` bits for the literal.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::{Error, Result};

/// One LZ78 phrase: a reference to an earlier phrase (0 for the empty
/// prefix) extended by one literal. Only the final phrase may lack the
/// literal, when the input ends inside a phrase already in the dictionary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Phrase {
    pub prefix: usize,
    pub symbol: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lz78Parse {
    pub phrases: Vec<Phrase>,
    pub alphabet_size: u32,
    pub source_length: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexityEstimate {
    pub phrase_count: usize,
    pub bit_estimate: f64,
}

/// Greedy left-to-right LZ78 parse of a sequence of symbol indices.
pub fn lz78_parse(message: &[u32], alphabet_size: u32) -> Result<Lz78Parse> {
    if alphabet_size == 0 {
        return Err(Error::domain("alphabet_size", 0.0, "[1, inf)"));
    }
    let mut dictionary: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    let mut phrases = Vec::new();
    let mut current = 0usize;
    for (position, &symbol) in message.iter().enumerate() {
        if symbol >= alphabet_size {
            return Err(Error::SymbolOutOfRange {
                position,
                symbol,
                alphabet_size,
            });
        }
        match dictionary.get(&(current, symbol)) {
            Some(&next) => current = next,
            None => {
                phrases.push(Phrase {
                    prefix: current,
                    symbol: Some(symbol),
                });
                dictionary.insert((current, symbol), phrases.len());
                current = 0;
            }
        }
    }
    if current != 0 {
        phrases.push(Phrase {
            prefix: current,
            symbol: None,
        });
    }
    Ok(Lz78Parse {
        phrases,
        alphabet_size,
        source_length: message.len(),
    })
}

/// Reconstructs the source sequence from a parse.
pub fn lz78_decode(parse: &Lz78Parse) -> Result<Vec<u32>> {
    let count = parse.phrases.len();
    let mut out = Vec::with_capacity(parse.source_length);
    let mut scratch = Vec::new();
    for (j, phrase) in parse.phrases.iter().enumerate() {
        if phrase.prefix > j {
            return Err(Error::MalformedParse("prefix refers to a later phrase"));
        }
        if phrase.symbol.is_none() && (j + 1 != count || phrase.prefix == 0) {
            return Err(Error::MalformedParse(
                "literal-free phrase must be a final back-reference",
            ));
        }
        scratch.clear();
        if let Some(s) = phrase.symbol {
            scratch.push(s);
        }
        let mut link = phrase.prefix;
        while link != 0 {
            let parent = &parse.phrases[link - 1];
            // Only literal-bearing phrases are ever referenced.
            scratch.push(
                parent
                    .symbol
                    .ok_or(Error::MalformedParse("reference to a partial phrase"))?,
            );
            link = parent.prefix;
        }
        out.extend(scratch.iter().rev());
    }
    if out.len() != parse.source_length {
        return Err(Error::MalformedParse(
            "decoded length differs from source length",
        ));
    }
    Ok(out)
}

/// `ceil(log2 n)` for `n >= 1`.
pub fn ceil_log2(n: u64) -> u32 {
    debug_assert!(n >= 1);
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

pub fn complexity_estimate(parse: &Lz78Parse) -> ComplexityEstimate {
    let literal_bits = u64::from(ceil_log2(u64::from(parse.alphabet_size.max(1))));
    let bits: u64 = (1..=parse.phrases.len() as u64)
        .map(|j| u64::from(ceil_log2(j)) + literal_bits)
        .sum();
    ComplexityEstimate {
        phrase_count: parse.phrases.len(),
        bit_estimate: bits as f64,
    }
}

/// Maps arbitrary symbols to dense indices in order of first appearance.
/// Returns the index sequence and the resulting alphabet size (at least 1).
pub fn index_symbols<T: Ord + Clone>(message: &[T]) -> (Vec<u32>, u32) {
    let mut table: BTreeMap<T, u32> = BTreeMap::new();
    let indices = message
        .iter()
        .map(|s| {
            let next = table.len() as u32;
            *table.entry(s.clone()).or_insert(next)
        })
        .collect();
    (indices, (table.len() as u32).max(1))
}
