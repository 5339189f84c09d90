//! SAP-array construction and interval decomposition.
//!
//! `sap[i] = 1` iff the i'th sorted suffix equals the previous one once both
//! sentinels are stripped; two sentinel-only suffixes strip to the empty
//! string and therefore compare equal. A maximal block tied together by
//! 1-bits is a SAP-interval; an interval holding at least two distinct BWT
//! characters is *interesting* — only there can reordering the input strings
//! change the transform.

use crate::collection::StringCollection;
use crate::error::{Error, Result};
use crate::suffix::{BwtString, SuffixArray, SymbolText};

/// One bit per BWT position; `reduced` records whether single-symbol
/// intervals have been cleared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SapArray {
    bits: Vec<bool>,
    reduced: bool,
}

impl SapArray {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// ASCII serialization: one '0' or '1' per position, no separators.
    pub fn to_ascii(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| if b { b'1' } else { b'0' }).collect()
    }

    /// Reads the ASCII form back; a trailing newline is tolerated.
    pub fn from_ascii(input: &[u8]) -> Result<Self> {
        let body = input.strip_suffix(b"\n").unwrap_or(input);
        let bits = body
            .iter()
            .enumerate()
            .map(|(i, &b)| match b {
                b'0' => Ok(false),
                b'1' => Ok(true),
                _ => Err(Error::InvalidSapByte { position: i, byte: b }),
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(SapArray { bits, reduced: false })
    }
}

/// A maximal SAP-tied block of BWT positions, inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SapInterval {
    pub begin: usize,
    pub end: usize,
    /// Whether the interval holds at least two distinct BWT characters.
    pub interesting: bool,
}

impl SapInterval {
    pub fn len(&self) -> usize {
        self.end - self.begin + 1
    }

    /// Intervals always cover at least one position.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Computes the SAP-array of the BWT built from `coll` via `sa`.
///
/// Consecutive sorted suffixes are compared through the LCP array (Kasai's
/// scan over the sentinel-distinct symbol text), so the whole pass is linear.
pub fn build_sap(coll: &StringCollection, sa: &SuffixArray) -> Result<SapArray> {
    let n = coll.total_len();
    if sa.len() != n {
        return Err(Error::LengthMismatch { expected: n, actual: sa.len() });
    }
    let text = SymbolText::new(coll);
    let positions: Vec<usize> = sa.iter().map(|e| text.position_of(e)).collect();
    let lcp = lcp_kasai(&text.symbols[..n], &positions);

    let mut bits = vec![false; n];
    for i in 1..n {
        let prev = sa.entries()[i - 1];
        let cur = sa.entries()[i];
        let prev_len = coll.get(prev.string_index).len() - prev.offset;
        let cur_len = coll.get(cur.string_index).len() - cur.offset;
        bits[i] = prev_len == cur_len && lcp[i] >= cur_len;
    }
    Ok(SapArray { bits, reduced: false })
}

/// Kasai's algorithm; `lcp[i]` is the longest common prefix of the suffixes
/// at `sa[i - 1]` and `sa[i]`.
fn lcp_kasai(text: &[usize], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut rank = vec![0usize; n];
    for (i, &p) in sa.iter().enumerate() {
        rank[p] = i;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for pos in 0..n {
        let r = rank[pos];
        if r == 0 {
            h = 0;
            continue;
        }
        let prev = sa[r - 1];
        while pos + h < n && prev + h < n && text[pos + h] == text[prev + h] {
            h += 1;
        }
        lcp[r] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Clears the 1-bits of every SAP-interval whose characters are all equal.
pub fn reduce_sap(bwt: &BwtString, sap: &SapArray) -> Result<SapArray> {
    let mut bits = sap.bits.clone();
    for iv in intervals(bwt, sap)? {
        if !iv.interesting {
            for bit in &mut bits[iv.begin..=iv.end] {
                *bit = false;
            }
        }
    }
    Ok(SapArray { bits, reduced: true })
}

/// Decomposes the BWT into consecutive SAP-intervals covering every position.
pub fn intervals(bwt: &BwtString, sap: &SapArray) -> Result<Vec<SapInterval>> {
    let n = bwt.len();
    if sap.len() != n {
        return Err(Error::LengthMismatch { expected: n, actual: sap.len() });
    }
    let bytes = bwt.as_bytes();
    let mut out = Vec::new();
    let mut begin = 0usize;
    for i in 1..=n {
        if i == n || !sap.bit(i) {
            let slice = &bytes[begin..i];
            let interesting = slice.iter().any(|&b| b != slice[0]);
            out.push(SapInterval { begin, end: i - 1, interesting });
            begin = i;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collection::{InputFormat, StringOrdering};
    use crate::suffix::{build_bwt, build_suffix_array};

    fn coll(lines: &[u8]) -> StringCollection {
        StringCollection::parse(lines, InputFormat::Lines).unwrap()
    }

    fn sap_string(sap: &SapArray) -> String {
        String::from_utf8(sap.to_ascii()).unwrap()
    }

    fn sample_collection() -> StringCollection {
        coll(b"TCGA\nGGAA\nTCCT\nTTCT\nGCCT\n")
    }

    fn mixed_collection() -> StringCollection {
        coll(b"TGA\nCACAA\nAGAGT\nTAA\nCGAGT\nCCA\nTA\n")
    }

    #[test]
    fn sample_sap_bits() {
        let c = sample_collection();
        let sa = build_suffix_array(&c);
        let sap = build_sap(&c, &sa).unwrap();
        let expected: String = ["01111", "01", "0", "01", "0", "011", "0", "0", "0", "0", "011",
            "0", "0", "0", "0"]
        .concat();
        assert_eq!(sap_string(&sap), expected);
    }

    #[test]
    fn mixed_collection_sap_and_reduction() {
        let c = mixed_collection();
        let (bwt, sa) = build_bwt(&c, &StringOrdering::Input).unwrap();
        let sap = build_sap(&c, &sa).unwrap();
        let expected: String = ["0111111", "01111", "01", "0", "0", "01", "0", "0", "0", "0",
            "0", "0", "01", "01", "01", "0", "0", "0"]
        .concat();
        assert_eq!(sap_string(&sap), expected);

        let reduced = reduce_sap(&bwt, &sap).unwrap();
        let expected_red: String = ["0111111", "01111", "01", "0", "0", "00", "0", "0", "0", "0",
            "0", "0", "01", "00", "00", "0", "0", "0"]
        .concat();
        assert_eq!(sap_string(&reduced), expected_red);
        assert!(reduced.is_reduced());
    }

    #[test]
    fn single_string_sap_is_all_zero() {
        let c = coll(b"A\n");
        let sa = build_suffix_array(&c);
        let sap = build_sap(&c, &sa).unwrap();
        assert_eq!(sap_string(&sap), "00");
    }

    #[test]
    fn reduction_clears_single_symbol_run_interval() {
        let bwt = BwtString::from_bytes(b"AA".to_vec());
        let sap = SapArray::from_ascii(b"01").unwrap();
        let reduced = reduce_sap(&bwt, &sap).unwrap();
        assert_eq!(sap_string(&reduced), "00");
    }

    #[test]
    fn reduction_keeps_all_zero_sap() {
        let bwt = BwtString::from_bytes(b"ACGT".to_vec());
        let sap = SapArray::from_ascii(b"0000").unwrap();
        let reduced = reduce_sap(&bwt, &sap).unwrap();
        assert_eq!(sap_string(&reduced), "0000");
    }

    #[test]
    fn sample_intervals() {
        let c = sample_collection();
        let (bwt, sa) = build_bwt(&c, &StringOrdering::Input).unwrap();
        let sap = build_sap(&c, &sa).unwrap();
        let ivs = intervals(&bwt, &sap).unwrap();
        assert_eq!(ivs.len(), 15);
        assert_eq!(ivs[0], SapInterval { begin: 0, end: 4, interesting: true });
        // first interval holds two A and three T
        let slice = &bwt.as_bytes()[0..=4];
        assert_eq!(slice.iter().filter(|&&b| b == b'A').count(), 2);
        assert_eq!(slice.iter().filter(|&&b| b == b'T').count(), 3);
        // intervals tile the whole BWT
        let mut pos = 0;
        for iv in &ivs {
            assert_eq!(iv.begin, pos);
            pos = iv.end + 1;
        }
        assert_eq!(pos, bwt.len());
    }

    #[test]
    fn all_zero_sap_gives_singleton_intervals() {
        let bwt = BwtString::from_bytes(b"ACGT".to_vec());
        let sap = SapArray::from_ascii(b"0000").unwrap();
        let ivs = intervals(&bwt, &sap).unwrap();
        assert_eq!(ivs.len(), 4);
        assert!(ivs.iter().all(|iv| iv.len() == 1 && !iv.interesting));
    }

    #[test]
    fn mixed_collection_has_18_intervals() {
        let c = mixed_collection();
        let (bwt, sa) = build_bwt(&c, &StringOrdering::Input).unwrap();
        let sap = build_sap(&c, &sa).unwrap();
        assert_eq!(intervals(&bwt, &sap).unwrap().len(), 18);
    }

    #[test]
    fn sap_is_identical_across_orderings() {
        let c = sample_collection();
        let mut seen = Vec::new();
        for ord in [StringOrdering::Input, StringOrdering::Lex, StringOrdering::Colex] {
            let reord = c.reorder(&ord).unwrap();
            let sa = build_suffix_array(&reord);
            seen.push(build_sap(&reord, &sa).unwrap());
        }
        assert_eq!(seen[0], seen[1]);
        assert_eq!(seen[1], seen[2]);
    }

    #[test]
    fn sap_bits_match_direct_suffix_comparison() {
        let c = mixed_collection();
        let sa = build_suffix_array(&c);
        let sap = build_sap(&c, &sa).unwrap();
        for i in 1..sa.len() {
            let a = sa.entries()[i - 1];
            let b = sa.entries()[i];
            let equal = c.get(a.string_index)[a.offset..] == c.get(b.string_index)[b.offset..];
            assert_eq!(sap.bit(i), equal, "position {i}");
        }
        assert!(!sap.bit(0));
    }

    #[test]
    fn mismatched_lengths_are_rejected() {
        let c = sample_collection();
        let sa = build_suffix_array(&c);
        let other = coll(b"AC\n");
        assert!(matches!(
            build_sap(&other, &sa).unwrap_err(),
            Error::LengthMismatch { .. }
        ));
        let bwt = BwtString::from_bytes(b"ACG".to_vec());
        let sap = SapArray::from_ascii(b"00").unwrap();
        assert!(matches!(
            intervals(&bwt, &sap).unwrap_err(),
            Error::LengthMismatch { .. }
        ));
    }

    #[test]
    fn sap_ascii_round_trip() {
        let sap = SapArray::from_ascii(b"01101\n").unwrap();
        assert_eq!(sap.to_ascii(), b"01101");
        assert!(matches!(
            SapArray::from_ascii(b"012").unwrap_err(),
            Error::InvalidSapByte { position: 2, byte: b'2' }
        ));
    }
}
