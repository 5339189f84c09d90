//! Suffix sorting of a collection and BWT extraction.
//!
//! Suffixes are compared with every sentinel ranking below every alphabet
//! byte; two suffixes that are equal up to their sentinels are ordered by
//! string index. The sentinels stay implicit: the comparison is realized by
//! sorting an integer-symbol concatenation in which the sentinel of string
//! `i` gets rank `i`, and the output renders all of them as one `$` byte.

use crate::collection::{StringCollection, StringOrdering, SENTINEL};
use crate::error::{Error, Result};
use crate::sais;

/// One suffix: `offset` bytes into string `string_index`, followed by the
/// string's sentinel. `offset == len` denotes the sentinel-only suffix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuffixEntry {
    pub string_index: usize,
    pub offset: usize,
}

/// All suffixes of a collection in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArray {
    entries: Vec<SuffixEntry>,
}

impl SuffixArray {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[SuffixEntry] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &SuffixEntry> {
        self.entries.iter()
    }
}

/// The transform output: a byte string over the alphabet plus `$`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BwtString {
    bytes: Vec<u8>,
}

impl BwtString {
    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        BwtString { bytes }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Number of `$` bytes, i.e. the number of strings of the source collection.
    pub fn sentinel_count(&self) -> usize {
        self.bytes.iter().filter(|&&b| b == SENTINEL).count()
    }

    /// Run-length encoding as ASCII lines `char<TAB>count`.
    pub fn to_rle(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let mut iter = self.bytes.iter().peekable();
        while let Some(&b) = iter.next() {
            let mut count = 1usize;
            while iter.peek() == Some(&&b) {
                iter.next();
                count += 1;
            }
            out.push(b);
            out.extend_from_slice(format!("\t{count}\n").as_bytes());
        }
        out
    }
}

impl std::fmt::Display for BwtString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", String::from_utf8_lossy(&self.bytes))
    }
}

/// Integer-symbol concatenation of a collection:
/// terminator 0, sentinel of string `i` is `1 + i`, byte `b` is `k + 1 + b`.
pub(crate) struct SymbolText {
    pub symbols: Vec<usize>,
    pub sigma: usize,
    /// `starts[i]` is the position of string `i`; one extra final entry.
    pub starts: Vec<usize>,
}

impl SymbolText {
    pub fn new(coll: &StringCollection) -> Self {
        let k = coll.len();
        let n = coll.total_len();
        let mut symbols = Vec::with_capacity(n + 1);
        let mut starts = Vec::with_capacity(k + 1);
        for (i, s) in coll.iter().enumerate() {
            starts.push(symbols.len());
            symbols.extend(s.iter().map(|&b| k + 1 + b as usize));
            symbols.push(1 + i);
        }
        starts.push(symbols.len());
        symbols.push(0);
        SymbolText { symbols, sigma: k + 257, starts }
    }

    pub fn decompose(&self, position: usize) -> SuffixEntry {
        let string_index = self.starts.partition_point(|&s| s <= position) - 1;
        SuffixEntry { string_index, offset: position - self.starts[string_index] }
    }

    pub fn position_of(&self, entry: &SuffixEntry) -> usize {
        self.starts[entry.string_index] + entry.offset
    }
}

/// Builds the suffix array of the collection.
pub fn build_suffix_array(coll: &StringCollection) -> SuffixArray {
    let text = SymbolText::new(coll);
    let sa = sais::suffix_array(&text.symbols, text.sigma);
    // The lone terminator suffix sorts first; the rest is the answer.
    debug_assert_eq!(sa[0], text.symbols.len() - 1);
    let entries = sa[1..].iter().map(|&p| text.decompose(p)).collect();
    SuffixArray { entries }
}

/// Reads off the character circularly preceding each sorted suffix.
pub fn extract_bwt(coll: &StringCollection, sa: &SuffixArray) -> Result<BwtString> {
    if sa.len() != coll.total_len() {
        return Err(Error::LengthMismatch { expected: coll.total_len(), actual: sa.len() });
    }
    let bytes = sa
        .iter()
        .map(|e| {
            if e.offset == 0 {
                SENTINEL
            } else {
                coll.get(e.string_index)[e.offset - 1]
            }
        })
        .collect();
    Ok(BwtString::from_bytes(bytes))
}

/// Reorders the collection, builds its suffix array and extracts the BWT.
pub fn build_bwt(
    coll: &StringCollection,
    ordering: &StringOrdering,
) -> Result<(BwtString, SuffixArray)> {
    let reordered = coll.reorder(ordering)?;
    let sa = build_suffix_array(&reordered);
    let bwt = extract_bwt(&reordered, &sa)?;
    Ok((bwt, sa))
}
