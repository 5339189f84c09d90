//! Suffix array construction by induced sorting (SA-IS) over an integer
//! alphabet.
//!
//! The caller must terminate the text with a unique smallest symbol 0; this
//! lets the induction seed itself without special cases. Symbols are plain
//! `usize` so the alphabet can grow with the number of per-string sentinels
//! without overflowing a byte.

const EMPTY: usize = usize::MAX;

/// Sorts all suffixes of `text` and returns their start positions in
/// ascending suffix order. `sigma` is an exclusive upper bound on the
/// symbol values.
pub(crate) fn suffix_array(text: &[usize], sigma: usize) -> Vec<usize> {
    let n = text.len();
    debug_assert!(n > 0, "text must be non-empty");
    debug_assert_eq!(text[n - 1], 0, "text must end with the 0 terminator");
    debug_assert_eq!(
        text.iter().filter(|&&c| c == 0).count(),
        1,
        "terminator must be unique"
    );
    if n == 1 {
        return vec![0];
    }

    // Suffix types: true = S (smaller than the next suffix), false = L.
    let mut s_type = vec![false; n];
    s_type[n - 1] = true;
    for i in (0..n - 1).rev() {
        s_type[i] = text[i] < text[i + 1] || (text[i] == text[i + 1] && s_type[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && s_type[i] && !s_type[i - 1];

    let mut counts = vec![0usize; sigma];
    for &c in text {
        counts[c] += 1;
    }

    // Pass 1: place LMS suffixes in text order, then induce. Afterwards the
    // LMS positions appear in SA sorted by their LMS substrings.
    let mut sa = vec![EMPTY; n];
    {
        let mut tails = bucket_tails(&counts);
        for i in (1..n).rev() {
            if is_lms(i) {
                tails[text[i]] -= 1;
                sa[tails[text[i]]] = i;
            }
        }
    }
    induce(&mut sa, text, &counts, &s_type);

    // Name the LMS substrings in sorted order; equal substrings share a name.
    let lms_positions: Vec<usize> = (1..n).filter(|&i| is_lms(i)).collect();
    let mut name_of = vec![EMPTY; n];
    let mut name = 0usize;
    let mut prev = EMPTY;
    for &p in sa.iter() {
        if p == EMPTY || !is_lms(p) {
            continue;
        }
        if prev != EMPTY && !lms_substrings_equal(text, &is_lms, prev, p) {
            name += 1;
        }
        name_of[p] = name;
        prev = p;
    }
    let distinct = name + 1;

    // Reduced problem: LMS substring names in text order.
    let reduced: Vec<usize> = lms_positions.iter().map(|&p| name_of[p]).collect();
    let lms_order: Vec<usize> = if distinct == reduced.len() {
        let mut order = vec![0usize; reduced.len()];
        for (i, &nm) in reduced.iter().enumerate() {
            order[nm] = i;
        }
        order
    } else {
        suffix_array(&reduced, distinct)
    };

    // Pass 2: place LMS suffixes in their true order and induce the rest.
    sa.fill(EMPTY);
    {
        let mut tails = bucket_tails(&counts);
        for &ri in lms_order.iter().rev() {
            let p = lms_positions[ri];
            tails[text[p]] -= 1;
            sa[tails[text[p]]] = p;
        }
    }
    induce(&mut sa, text, &counts, &s_type);
    sa
}

fn bucket_heads(counts: &[usize]) -> Vec<usize> {
    let mut heads = Vec::with_capacity(counts.len());
    let mut sum = 0;
    for &c in counts {
        heads.push(sum);
        sum += c;
    }
    heads
}

fn bucket_tails(counts: &[usize]) -> Vec<usize> {
    let mut tails = Vec::with_capacity(counts.len());
    let mut sum = 0;
    for &c in counts {
        sum += c;
        tails.push(sum);
    }
    tails
}

/// Induces L suffixes left-to-right from bucket heads, then S suffixes
/// right-to-left from bucket tails.
fn induce(sa: &mut [usize], text: &[usize], counts: &[usize], s_type: &[bool]) {
    let n = text.len();
    let mut heads = bucket_heads(counts);
    for i in 0..n {
        let p = sa[i];
        if p != EMPTY && p > 0 && !s_type[p - 1] {
            let c = text[p - 1];
            sa[heads[c]] = p - 1;
            heads[c] += 1;
        }
    }
    let mut tails = bucket_tails(counts);
    for i in (0..n).rev() {
        let p = sa[i];
        if p != EMPTY && p > 0 && s_type[p - 1] {
            let c = text[p - 1];
            tails[c] -= 1;
            sa[tails[c]] = p - 1;
        }
    }
}

/// Two LMS substrings are equal iff they match symbol-by-symbol up to and
/// including their terminating LMS positions.
fn lms_substrings_equal(
    text: &[usize],
    is_lms: &impl Fn(usize) -> bool,
    a: usize,
    b: usize,
) -> bool {
    let n = text.len();
    if a == b {
        return true;
    }
    // The terminator suffix is an LMS substring of length 1; nothing equals it.
    if a == n - 1 || b == n - 1 {
        return false;
    }
    if text[a] != text[b] {
        return false;
    }
    let mut d = 1;
    loop {
        let a_end = is_lms(a + d);
        let b_end = is_lms(b + d);
        if a_end != b_end {
            return false;
        }
        if text[a + d] != text[b + d] {
            return false;
        }
        if a_end {
            return true;
        }
        d += 1;
    }
}
