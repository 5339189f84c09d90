//! Independent verification: BWT inversion, exhaustive minimum-runs search,
//! variant comparison and a seeded test-data generator.

use crate::collection::{StringCollection, StringOrdering, SENTINEL};
use crate::error::{Error, Result};
use crate::runs::{count_runs, optimize, sap_heuristic, RunStats};
use crate::sap::build_sap;
use crate::suffix::{build_bwt, BwtString};

/// Largest `k` the exhaustive search accepts by default (8! rebuilds).
pub const DEFAULT_PERMUTATION_BOUND: usize = 8;

/// Recovers the collection from its multidollar BWT.
///
/// The j'th `$` occurrence stands for the j'th string's end marker, so the
/// first k rows of the (stable) first column are the sentinel-only suffixes
/// in string order. Each string is walked backwards from its row via the
/// LF-mapping; the walks must terminate at a sentinel and visit every
/// position exactly once, otherwise the input is not a collection BWT.
pub fn invert_bwt(bwt: &BwtString) -> Result<StringCollection> {
    let bytes = bwt.as_bytes();
    let n = bytes.len();
    if n == 0 {
        return Err(Error::InvalidBwt { reason: "empty input" });
    }
    if bytes.contains(&0) {
        return Err(Error::InvalidBwt { reason: "contains a NUL byte" });
    }
    let k = bytes.iter().filter(|&&b| b == SENTINEL).count();
    if k == 0 {
        return Err(Error::InvalidBwt { reason: "no sentinel" });
    }

    // Ranks put the sentinel class below every alphabet byte. Within the
    // sentinel class the LF order is the occurrence order, which realizes
    // the distinct implicit end markers.
    let rank = |b: u8| if b == SENTINEL { 0usize } else { b as usize };
    let mut counts = [0usize; 256];
    for &b in bytes {
        counts[rank(b)] += 1;
    }
    let mut first_row = [0usize; 256];
    let mut sum = 0;
    for (slot, &count) in first_row.iter_mut().zip(counts.iter()) {
        *slot = sum;
        sum += count;
    }
    let mut seen = [0usize; 256];
    let mut lf = vec![0usize; n];
    for (i, &b) in bytes.iter().enumerate() {
        let c = rank(b);
        lf[i] = first_row[c] + seen[c];
        seen[c] += 1;
    }

    let mut visited = vec![false; n];
    let mut strings = Vec::with_capacity(k);
    for start in 0..k {
        let mut row = start;
        let mut string = Vec::new();
        loop {
            if visited[row] {
                return Err(Error::InvalidBwt { reason: "LF walk revisited a position" });
            }
            visited[row] = true;
            let b = bytes[row];
            if b == SENTINEL {
                break;
            }
            string.push(b);
            row = lf[row];
        }
        if string.is_empty() {
            return Err(Error::InvalidBwt { reason: "walk yielded an empty string" });
        }
        string.reverse();
        strings.push(string);
    }
    if visited.iter().any(|&v| !v) {
        return Err(Error::InvalidBwt { reason: "positions left unvisited" });
    }
    StringCollection::new(strings)
}

/// Minimum run count over all `k!` input orderings, found exhaustively,
/// together with the lexicographically smallest ordering attaining it.
pub fn brute_force_min_runs(coll: &StringCollection) -> Result<(usize, StringOrdering)> {
    brute_force_min_runs_bounded(coll, DEFAULT_PERMUTATION_BOUND)
}

/// As [`brute_force_min_runs`] with an explicit bound on `k`.
pub fn brute_force_min_runs_bounded(
    coll: &StringCollection,
    bound: usize,
) -> Result<(usize, StringOrdering)> {
    let k = coll.len();
    if k > bound {
        return Err(Error::CollectionTooLarge { k, bound });
    }
    let mut perm: Vec<usize> = (0..k).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    loop {
        let ordering = StringOrdering::Explicit(perm.clone());
        let (bwt, _) = build_bwt(coll, &ordering)?;
        let r = count_runs(bwt.as_bytes())?.r;
        if best.as_ref().is_none_or(|(br, _)| r < *br) {
            best = Some((r, perm.clone()));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let (r, witness) = best.expect("k >= 1 guarantees at least one ordering");
    Ok((r, StringOrdering::Explicit(witness)))
}

/// Advances to the next permutation in lexicographic order; `false` once the
/// sequence wraps around.
fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Run statistics of the five BWT variants of one collection.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub input: RunStats,
    pub dol_e: RunStats,
    pub colex: RunStats,
    pub sap: RunStats,
    pub opt: RunStats,
}

impl ComparisonReport {
    pub fn variants(&self) -> [(&'static str, RunStats); 5] {
        [
            ("input", self.input),
            ("dolE", self.dol_e),
            ("colex", self.colex),
            ("sap", self.sap),
            ("opt", self.opt),
        ]
    }

    /// `r / r_opt`, at least 1 for every variant.
    pub fn factor(&self, stats: RunStats) -> f64 {
        stats.r as f64 / self.opt.r as f64
    }

    /// `(r - r_opt) / r_opt * 100`.
    pub fn percent_increase(&self, stats: RunStats) -> f64 {
        (stats.r as f64 - self.opt.r as f64) / self.opt.r as f64 * 100.0
    }

    /// Aligned plain-text table; variants as columns, metrics as rows.
    pub fn table(&self) -> String {
        let variants = self.variants();
        let rows = [
            ("n", variants.map(|(_, s)| s.n.to_string())),
            ("r", variants.map(|(_, s)| s.r.to_string())),
            ("n/r", variants.map(|(_, s)| format!("{:.4}", s.mean_run()))),
            ("factor", variants.map(|(_, s)| format!("{:.4}", self.factor(s)))),
            ("percent", variants.map(|(_, s)| format!("{:.2}", self.percent_increase(s)))),
        ];
        let mut out = String::new();
        out.push_str(&format!("{:<8}", "metric"));
        for (name, _) in variants {
            out.push_str(&format!("{name:>10}"));
        }
        out.push('\n');
        for (label, cells) in rows {
            out.push_str(&format!("{label:<8}"));
            for cell in cells {
                out.push_str(&format!("{cell:>10}"));
            }
            out.push('\n');
        }
        out
    }

    /// Machine-readable form: one `key=value` line per variant.
    pub fn kv_lines(&self) -> String {
        let mut out = String::new();
        for (name, stats) in self.variants() {
            out.push_str(&format!(
                "variant={name} n={} r={} mean_run={:.4} factor={:.4} percent={:.4}\n",
                stats.n,
                stats.r,
                stats.mean_run(),
                self.factor(stats),
                self.percent_increase(stats),
            ));
        }
        out
    }
}

/// Builds all five variants of the collection and reports their run counts.
///
/// The variants are: the BWT of the input order; of the lexicographic and
/// colexicographic reorderings; the grouping heuristic applied to the input
/// BWT; and the run-minimal rewrite.
pub fn compare(coll: &StringCollection) -> Result<ComparisonReport> {
    let (input_bwt, sa) = build_bwt(coll, &StringOrdering::Input)?;
    let sap = build_sap(coll, &sa)?;
    let sap_bwt = sap_heuristic(&input_bwt, &sap)?;
    let opt_bwt = optimize(&input_bwt, &sap)?;
    let (dol_e_bwt, _) = build_bwt(coll, &StringOrdering::Lex)?;
    let (colex_bwt, _) = build_bwt(coll, &StringOrdering::Colex)?;
    Ok(ComparisonReport {
        input: count_runs(input_bwt.as_bytes())?,
        dol_e: count_runs(dol_e_bwt.as_bytes())?,
        colex: count_runs(colex_bwt.as_bytes())?,
        sap: count_runs(sap_bwt.as_bytes())?,
        opt: count_runs(opt_bwt.as_bytes())?,
    })
}

/// SplitMix64; tiny, seedable and stable across platforms.
pub(crate) struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Generates `k` random strings with lengths uniform in `len_range`
/// (inclusive), reproducibly from `seed`.
pub fn generate(
    k: usize,
    len_range: (usize, usize),
    alphabet: &[u8],
    seed: u64,
) -> Result<StringCollection> {
    let (min_len, max_len) = len_range;
    if k == 0 {
        return Err(Error::InvalidGenerator { reason: "k must be at least 1" });
    }
    if min_len == 0 || min_len > max_len {
        return Err(Error::InvalidGenerator { reason: "length range must satisfy 1 <= min <= max" });
    }
    if alphabet.is_empty() {
        return Err(Error::InvalidGenerator { reason: "alphabet is empty" });
    }
    if alphabet.iter().any(|&b| b == SENTINEL || b == 0) {
        return Err(Error::InvalidGenerator { reason: "alphabet contains a reserved byte" });
    }
    let mut symbols: Vec<u8> = alphabet.to_vec();
    symbols.sort_unstable();
    symbols.dedup();

    let mut rng = Rng::new(seed);
    let strings = (0..k)
        .map(|_| {
            let len = min_len + rng.below(max_len - min_len + 1);
            (0..len).map(|_| symbols[rng.below(symbols.len())]).collect()
        })
        .collect();
    StringCollection::new(strings)
}
