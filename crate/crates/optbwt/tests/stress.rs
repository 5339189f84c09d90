//! Long-running randomized cross-validation; run explicitly with
//! `cargo test -p optbwt --test stress -- --ignored`.

use optbwt::{
    brute_force_min_runs, build_bwt, build_sap, count_runs, generate, invert_bwt, optimize,
    sap_heuristic, StringOrdering,
};

/// Small alphabets force dense SAP-intervals and deep pending stacks in the
/// rewrite, which is exactly where its border bookkeeping could go wrong.
#[test]
#[ignore = "slow exhaustive cross-validation"]
fn optimize_matches_exhaustive_search_on_harsh_alphabets() {
    let cases: &[(&[u8], usize, u64)] = &[
        (b"AB", 2500, 0x1000),
        (b"ABC", 1500, 0x2000),
        (b"ACGT", 1500, 0x3000),
        (b"A", 500, 0x4000),
    ];
    for &(alphabet, count, seed_base) in cases {
        for i in 0..count {
            let k = 2 + i % 6; // 2..=7
            let coll = generate(k, (1, 10), alphabet, seed_base + i as u64).unwrap();
            let (bwt, sa) = build_bwt(&coll, &StringOrdering::Input).unwrap();
            let sap = build_sap(&coll, &sa).unwrap();
            let opt = optimize(&bwt, &sap).unwrap();
            let r_opt = count_runs(opt.as_bytes()).unwrap().r;
            let (min_r, _) = brute_force_min_runs(&coll).unwrap();
            assert_eq!(
                r_opt, min_r,
                "alphabet {:?}, case {i}: {coll:?}",
                String::from_utf8_lossy(alphabet)
            );

            let mut original = coll.strings().to_vec();
            original.sort();
            for rewritten in [opt, sap_heuristic(&bwt, &sap).unwrap()] {
                let mut recovered = invert_bwt(&rewritten).unwrap().strings().to_vec();
                recovered.sort();
                assert_eq!(recovered, original, "inversion after rewrite");
            }
        }
    }
}
