//! String collections: parsing, validation and reordering.
//!
//! A collection is an ordered multiset of byte strings. Every string
//! implicitly ends with its own sentinel, and the sentinels rank below all
//! alphabet bytes and among themselves by string index. The sentinel is
//! rendered as `$` (0x24), so `$` and NUL may not occur inside a string.

use crate::error::{Error, Result};

/// Byte used to render the per-string end markers.
pub const SENTINEL: u8 = b'$';

/// Supported input formats for [`StringCollection::parse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// `>` header lines, sequence possibly wrapped over several lines.
    Fasta,
    /// 4-line records: `@header`, sequence, `+`, qualities (ignored).
    Fastq,
    /// One string per `\n`-terminated line.
    Lines,
}

/// How the strings of a collection are arranged before building the BWT.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StringOrdering {
    /// Keep the order in which the strings were read.
    Input,
    /// Stable lexicographic sort; a proper prefix sorts before its extensions.
    Lex,
    /// Stable sort by the lexicographic order of the reversed strings.
    Colex,
    /// An arbitrary permutation: output slot `i` receives input string `perm[i]`.
    Explicit(Vec<usize>),
}

/// An ordered multiset of non-empty byte strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringCollection {
    strings: Vec<Vec<u8>>,
}

impl StringCollection {
    /// Validates and wraps a list of strings.
    ///
    /// Rejects empty collections, empty strings, and strings containing the
    /// sentinel byte or NUL. Duplicate strings are allowed (multiset
    /// semantics); all other bytes are taken verbatim.
    pub fn new(strings: Vec<Vec<u8>>) -> Result<Self> {
        if strings.is_empty() {
            return Err(Error::EmptyCollection);
        }
        for (idx, s) in strings.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::EmptyRecord { record: idx + 1 });
            }
            if let Some(&byte) = s.iter().find(|&&b| b == SENTINEL || b == 0) {
                return Err(Error::ForbiddenByte { record: idx + 1, byte });
            }
        }
        Ok(StringCollection { strings })
    }

    /// Parses a byte stream in the given format.
    ///
    /// Headers are discarded, FASTA sequence lines are concatenated, FASTQ
    /// quality lines are ignored. Sequence bytes are kept verbatim: no case
    /// folding, no filtering of ambiguity codes.
    pub fn parse(input: &[u8], format: InputFormat) -> Result<Self> {
        let strings = match format {
            InputFormat::Lines => parse_lines(input)?,
            InputFormat::Fasta => parse_fasta(input)?,
            InputFormat::Fastq => parse_fastq(input)?,
        };
        StringCollection::new(strings)
    }

    /// Number of strings `k`.
    pub fn len(&self) -> usize {
        self.strings.len()
    }

    /// A collection is never empty, but clippy insists on the pair.
    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    /// Total length including one sentinel per string.
    pub fn total_len(&self) -> usize {
        self.strings.iter().map(|s| s.len()).sum::<usize>() + self.strings.len()
    }

    pub fn strings(&self) -> &[Vec<u8>] {
        &self.strings
    }

    pub fn get(&self, index: usize) -> &[u8] {
        &self.strings[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> {
        self.strings.iter().map(|s| s.as_slice())
    }

    /// Returns the collection with its strings permuted.
    ///
    /// `Lex` and `Colex` are stable: equal strings keep their input order.
    /// `Input` returns an identical collection.
    pub fn reorder(&self, ordering: &StringOrdering) -> Result<Self> {
        let k = self.len();
        let perm: Vec<usize> = match ordering {
            StringOrdering::Input => return Ok(self.clone()),
            StringOrdering::Lex => {
                let mut idx: Vec<usize> = (0..k).collect();
                idx.sort_by(|&a, &b| self.strings[a].cmp(&self.strings[b]));
                idx
            }
            StringOrdering::Colex => {
                let mut idx: Vec<usize> = (0..k).collect();
                idx.sort_by(|&a, &b| {
                    self.strings[a]
                        .iter()
                        .rev()
                        .cmp(self.strings[b].iter().rev())
                });
                idx
            }
            StringOrdering::Explicit(perm) => {
                let mut seen = vec![false; k];
                let valid = perm.len() == k
                    && perm.iter().all(|&p| {
                        p < k && !std::mem::replace(&mut seen[p], true)
                    });
                if !valid {
                    return Err(Error::InvalidPermutation {
                        len: perm.len(),
                        expected: k,
                    });
                }
                perm.clone()
            }
        };
        let strings = perm.iter().map(|&p| self.strings[p].clone()).collect();
        Ok(StringCollection { strings })
    }

    /// Serializes as one `\n`-terminated line per string.
    pub fn to_lines(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.total_len());
        for s in &self.strings {
            out.extend_from_slice(s);
            out.push(b'\n');
        }
        out
    }

    /// Serializes as FASTA with numbered headers.
    pub fn to_fasta(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.total_len() * 2);
        for (i, s) in self.strings.iter().enumerate() {
            out.extend_from_slice(format!(">s{}\n", i + 1).as_bytes());
            out.extend_from_slice(s);
            out.push(b'\n');
        }
        out
    }
}

/// Splits into lines; a final newline does not produce a trailing empty line.
fn split_lines(input: &[u8]) -> impl Iterator<Item = &[u8]> {
    let body = input.strip_suffix(b"\n").unwrap_or(input);
    let count = if input.is_empty() { 0 } else { usize::MAX };
    body.split(|&b| b == b'\n').take(count)
}

fn parse_lines(input: &[u8]) -> Result<Vec<Vec<u8>>> {
    Ok(split_lines(input).map(|l| l.to_vec()).collect())
}

fn parse_fasta(input: &[u8]) -> Result<Vec<Vec<u8>>> {
    let mut records: Vec<Vec<u8>> = Vec::new();
    let mut in_record = false;
    for (lineno, line) in split_lines(input).enumerate() {
        if line.first() == Some(&b'>') {
            records.push(Vec::new());
            in_record = true;
        } else if in_record {
            records.last_mut().unwrap().extend_from_slice(line);
        } else if !line.is_empty() {
            return Err(Error::MalformedFasta { line: lineno + 1 });
        }
    }
    Ok(records)
}

fn parse_fastq(input: &[u8]) -> Result<Vec<Vec<u8>>> {
    let lines: Vec<&[u8]> = split_lines(input).collect();
    if !lines.len().is_multiple_of(4) {
        return Err(Error::MalformedFastq {
            record: lines.len() / 4 + 1,
            reason: "record is not 4 lines",
        });
    }
    let mut records = Vec::with_capacity(lines.len() / 4);
    for (i, chunk) in lines.chunks_exact(4).enumerate() {
        if chunk[0].first() != Some(&b'@') {
            return Err(Error::MalformedFastq {
                record: i + 1,
                reason: "header does not start with '@'",
            });
        }
        if chunk[2].first() != Some(&b'+') {
            return Err(Error::MalformedFastq {
                record: i + 1,
                reason: "separator does not start with '+'",
            });
        }
        records.push(chunk[1].to_vec());
    }
    Ok(records)
}
