use std::fmt;

/// Errors produced by collection parsing, transform construction and the
/// verification oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input contains no records at all.
    EmptyCollection,
    /// Record `record` (1-based) has an empty sequence.
    EmptyRecord { record: usize },
    /// Record `record` (1-based) contains a byte that is reserved
    /// (the sentinel `$` or NUL).
    ForbiddenByte { record: usize, byte: u8 },
    /// FASTA input does not start with a `>` header line.
    MalformedFasta { line: usize },
    /// FASTQ record `record` (1-based) is structurally broken.
    MalformedFastq { record: usize, reason: &'static str },
    /// An explicit ordering is not a permutation of `0..k`.
    InvalidPermutation { len: usize, expected: usize },
    /// Two arrays that must describe the same BWT have different lengths.
    LengthMismatch { expected: usize, actual: usize },
    /// An operation that needs at least one character got none.
    EmptySequence,
    /// A byte string is not the multidollar BWT of any collection.
    InvalidBwt { reason: &'static str },
    /// The exhaustive search was asked to enumerate more strings than its bound.
    CollectionTooLarge { k: usize, bound: usize },
    /// A parameter of the random generator is out of range.
    InvalidGenerator { reason: &'static str },
    /// A SAP serialization contains a byte other than '0' or '1'.
    InvalidSapByte { position: usize, byte: u8 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyCollection => write!(f, "input contains no records"),
            Error::EmptyRecord { record } => {
                write!(f, "record {record} is empty")
            }
            Error::ForbiddenByte { record, byte } => {
                write!(f, "record {record} contains reserved byte 0x{byte:02x}")
            }
            Error::MalformedFasta { line } => {
                write!(f, "malformed FASTA: line {line} is not a '>' header")
            }
            Error::MalformedFastq { record, reason } => {
                write!(f, "malformed FASTQ record {record}: {reason}")
            }
            Error::InvalidPermutation { len, expected } => {
                write!(
                    f,
                    "explicit ordering is not a permutation of 0..{expected} (length {len})"
                )
            }
            Error::LengthMismatch { expected, actual } => {
                write!(f, "length mismatch: expected {expected}, got {actual}")
            }
            Error::EmptySequence => write!(f, "sequence is empty"),
            Error::InvalidBwt { reason } => {
                write!(f, "not a valid collection BWT: {reason}")
            }
            Error::CollectionTooLarge { k, bound } => {
                write!(f, "collection has {k} strings, exhaustive bound is {bound}")
            }
            Error::InvalidGenerator { reason } => {
                write!(f, "invalid generator parameters: {reason}")
            }
            Error::InvalidSapByte { position, byte } => {
                write!(f, "SAP byte at position {position} is 0x{byte:02x}, expected '0' or '1'")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
