//! Equal-letter run counting and the run-minimal rewrite.
//!
//! Characters can only move within SAP-intervals, so each interval collapses
//! to the multiset of its characters (a Parikh vector) and minimizing runs
//! becomes a tuple ordering problem: arrange each multiset so that, wherever
//! possible, neighboring intervals end and start with the same symbol. The
//! rewrite solves it in one left-to-right scan with a stack of pending
//! vectors; a pending pair always shares at least two distinct symbols, so
//! every border can merge one run and the borders never conflict.
//!
//! Symbols are ranked with the sentinel below every alphabet byte: rank 0 is
//! `$`, any other byte is its own rank (NUL cannot occur in a BWT).

use crate::collection::SENTINEL;
use crate::error::{Error, Result};
use crate::sap::{intervals, SapArray};
use crate::suffix::BwtString;

fn rank_of(byte: u8) -> u8 {
    if byte == SENTINEL {
        0
    } else {
        byte
    }
}

fn byte_of(rank: u8) -> u8 {
    if rank == 0 {
        SENTINEL
    } else {
        rank
    }
}

/// Per-symbol multiplicities of one SAP-interval, sorted by symbol rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParikhVector {
    counts: Vec<(u8, usize)>,
}

impl ParikhVector {
    pub fn from_bytes(slice: &[u8]) -> Self {
        let mut counts: Vec<(u8, usize)> = Vec::new();
        for &b in slice {
            let r = rank_of(b);
            match counts.binary_search_by_key(&r, |&(s, _)| s) {
                Ok(i) => counts[i].1 += 1,
                Err(i) => counts.insert(i, (r, 1)),
            }
        }
        ParikhVector { counts }
    }

    /// Number of distinct symbols.
    pub fn support_size(&self) -> usize {
        self.counts.len()
    }

    /// Total multiplicity, i.e. the interval length.
    pub fn total(&self) -> usize {
        self.counts.iter().map(|&(_, c)| c).sum()
    }

    /// Multiplicity of a byte (`$` for the sentinel class).
    pub fn count(&self, byte: u8) -> usize {
        let r = rank_of(byte);
        self.counts
            .binary_search_by_key(&r, |&(s, _)| s)
            .map(|i| self.counts[i].1)
            .unwrap_or(0)
    }

    /// `(byte, count)` pairs in ascending rank order, sentinel first.
    pub fn iter(&self) -> impl Iterator<Item = (u8, usize)> + '_ {
        self.counts.iter().map(|&(r, c)| (byte_of(r), c))
    }

    fn count_rank(&self, rank: u8) -> usize {
        self.counts
            .binary_search_by_key(&rank, |&(s, _)| s)
            .map(|i| self.counts[i].1)
            .unwrap_or(0)
    }

    /// Removes a symbol entirely, returning its multiplicity.
    fn take_rank(&mut self, rank: u8) -> usize {
        match self.counts.binary_search_by_key(&rank, |&(s, _)| s) {
            Ok(i) => self.counts.remove(i).1,
            Err(_) => 0,
        }
    }

    fn largest_rank(&self) -> u8 {
        self.counts.last().expect("vector is never empty").0
    }

    /// Distinct symbols occurring in both vectors, ascending.
    fn shared_ranks(&self, other: &ParikhVector) -> Vec<u8> {
        let mut shared = Vec::new();
        let (mut a, mut b) = (self.counts.iter().peekable(), other.counts.iter().peekable());
        while let (Some(&&(ra, _)), Some(&&(rb, _))) = (a.peek(), b.peek()) {
            match ra.cmp(&rb) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => {
                    shared.push(ra);
                    a.next();
                    b.next();
                }
            }
        }
        shared
    }
}

/// Length and equal-letter run count of a character sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunStats {
    pub n: usize,
    pub r: usize,
}

impl RunStats {
    /// Average run length `n / r`.
    pub fn mean_run(&self) -> f64 {
        self.n as f64 / self.r as f64
    }
}

/// Counts maximal equal-letter runs. All sentinels are one `$` byte, so they
/// merge into a single run wherever adjacent.
pub fn count_runs(s: &[u8]) -> Result<RunStats> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let r = 1 + s.windows(2).filter(|w| w[0] != w[1]).count();
    Ok(RunStats { n: s.len(), r })
}

/// One Parikh vector per SAP-interval, in interval order.
pub fn tuples_from_sap(bwt: &BwtString, sap: &SapArray) -> Result<Vec<ParikhVector>> {
    let bytes = bwt.as_bytes();
    Ok(intervals(bwt, sap)?
        .into_iter()
        .map(|iv| ParikhVector::from_bytes(&bytes[iv.begin..=iv.end]))
        .collect())
}

fn emit(out: &mut Vec<u8>, rank: u8, count: usize) {
    out.extend(std::iter::repeat_n(byte_of(rank), count));
}

/// Writes out the pending stack bottom-up and returns the last rank emitted.
///
/// `right` is the forced right-border symbol of the stack top (the single
/// symbol it shares with the tuple that triggered the flush), or `None` when
/// nothing constrains it. Walking top-down, each lower border is the
/// smallest symbol shared by the adjacent pair that differs from the border
/// above it; a pending pair shares two or more distinct symbols, so such a
/// choice always exists and no symbol has to straddle both borders of one
/// vector.
fn flush(stack: &mut Vec<ParikhVector>, right: Option<u8>, out: &mut Vec<u8>) -> u8 {
    let m = stack.len();
    debug_assert!(m > 0);
    let mut borders = vec![0u8; m];
    borders[m - 1] = right.unwrap_or_else(|| stack[m - 1].largest_rank());
    for i in (0..m - 1).rev() {
        let shared = stack[i].shared_ranks(&stack[i + 1]);
        borders[i] = shared
            .iter()
            .copied()
            .find(|&s| s != borders[i + 1])
            .expect("pending neighbors share at least two symbols");
    }
    for (i, vector) in stack.iter().enumerate() {
        let left = if i == 0 { None } else { Some(borders[i - 1]) };
        let right = borders[i];
        if let Some(lb) = left {
            emit(out, lb, vector.count_rank(lb));
        }
        for &(rank, count) in &vector.counts {
            if Some(rank) != left && rank != right {
                emit(out, rank, count);
            }
        }
        emit(out, right, vector.count_rank(right));
    }
    stack.clear();
    borders[m - 1]
}

/// Rewrites the BWT to the minimum number of equal-letter runs achievable by
/// permuting characters within SAP-intervals (equivalently, by reordering
/// the input strings).
///
/// Either the plain or the reduced SAP-array works: reduction only splits
/// single-symbol intervals into singleton tuples, which emit identically.
/// The result is deterministic; ties between equally good arrangements are
/// broken toward ascending symbol ranks.
pub fn optimize(bwt: &BwtString, sap: &SapArray) -> Result<BwtString> {
    let mut out = Vec::with_capacity(bwt.len());
    let mut stack: Vec<ParikhVector> = Vec::new();
    let mut last: Option<u8> = None;

    for iv in intervals(bwt, sap)? {
        let mut tuple = ParikhVector::from_bytes(&bwt.as_bytes()[iv.begin..=iv.end]);
        loop {
            if let Some(top) = stack.last() {
                let shared = top.shared_ranks(&tuple);
                if shared.len() >= 2 {
                    stack.push(tuple);
                    break;
                }
                // The top's right border is settled: the lone shared symbol,
                // or its largest symbol when nothing is shared.
                last = Some(flush(&mut stack, shared.first().copied(), &mut out));
                // fall through and reprocess the tuple against the empty stack
            } else if tuple.support_size() == 1 {
                let &(rank, count) = tuple.counts.first().unwrap();
                emit(&mut out, rank, count);
                last = Some(rank);
                break;
            } else {
                if let Some(x) = last {
                    let count = tuple.take_rank(x);
                    emit(&mut out, x, count);
                }
                stack.push(tuple);
                break;
            }
        }
    }
    if !stack.is_empty() {
        flush(&mut stack, None, &mut out);
    }
    debug_assert_eq!(out.len(), bwt.len());
    Ok(BwtString::from_bytes(out))
}

/// The grouping heuristic: within each SAP-interval, all copies of a symbol
/// are gathered at the position of its first occurrence. Positions outside
/// intervals are untouched.
pub fn sap_heuristic(bwt: &BwtString, sap: &SapArray) -> Result<BwtString> {
    let bytes = bwt.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    for iv in intervals(bwt, sap)? {
        let slice = &bytes[iv.begin..=iv.end];
        let mut groups: Vec<(u8, usize)> = Vec::new();
        for &b in slice {
            match groups.iter_mut().find(|(g, _)| *g == b) {
                Some((_, count)) => *count += 1,
                None => groups.push((b, 1)),
            }
        }
        for (b, count) in groups {
            out.extend(std::iter::repeat_n(b, count));
        }
    }
    Ok(BwtString::from_bytes(out))
}
