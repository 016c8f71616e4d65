//! Kernel scores against the scalar oracle, plus counter invariants.

use proptest::prelude::*;
use swscan::kernels::{align_lazyf_with, align_scan_with};
use swscan::oracle::{sw_scalar, sw_scalar_score};
use swscan::{align_lazyf, align_scan, Alphabet, QueryProfile, ScoringScheme, VectorSpec};

fn scheme(m: i32, x: i32, go: u32, ge: u32) -> ScoringScheme {
    ScoringScheme::match_mismatch(Alphabet::dna(), m, x, go, ge).unwrap()
}

fn enc(s: &[u8]) -> Vec<u8> {
    Alphabet::dna().encode(s).unwrap()
}

fn profile(q: &[u8], s: &ScoringScheme, p: usize) -> QueryProfile {
    QueryProfile::build(q, s, VectorSpec::new(p).unwrap()).unwrap()
}

/// Scores from all three kernel modes at lane count `p`.
fn kernel_scores(q: &[u8], r: &[u8], s: &ScoringScheme, p: usize) -> [u16; 3] {
    let prof = profile(q, s, p);
    [
        align_lazyf(&prof, r, s, true).unwrap().score,
        align_lazyf(&prof, r, s, false).unwrap().score,
        align_scan(&prof, r, s).unwrap().score,
    ]
}

#[test]
fn trivial_examples() {
    let s = scheme(2, -1, 3, 1);
    for p in [2, 4, 8] {
        assert_eq!(kernel_scores(&enc(b"AAA"), &enc(b"AA"), &s, p), [4; 3]);
        assert_eq!(kernel_scores(&enc(b"ACGT"), &enc(b"AGT"), &s, p), [4; 3]);
    }
}

#[test]
fn every_lane_count_is_supported() {
    let s = scheme(3, -2, 5, 2);
    let q = enc(b"TTGACCATGACCGGTACGATTACAGGCATTAGCCAGTAGGA");
    let r = enc(b"GGACCATGTTACCGGTACGTTACAGGGCATAGCCAGTTA");
    let want = sw_scalar_score(&q, &r, &s).unwrap().0 as u16;
    for p in [2, 4, 8, 16, 32, 64] {
        assert_eq!(kernel_scores(&q, &r, &s, p), [want; 3], "p={p}");
    }
}

#[test]
fn rejects_mismatched_profiles() {
    let s = scheme(2, -1, 3, 1);
    let other = scheme(2, -1, 4, 1);
    let prof = profile(&enc(b"ACGT"), &s, 4);
    assert!(matches!(
        align_scan(&prof, &enc(b"ACG"), &other),
        Err(swscan::Error::ProfileMismatch(_))
    ));
    let mut b8 = swscan::Reference::<8>::new();
    assert!(matches!(
        align_lazyf_with(&mut b8, &prof, &enc(b"ACG"), &s, true),
        Err(swscan::Error::ProfileMismatch(_))
    ));
    assert!(matches!(
        align_scan(&prof, &[0, 1, 9], &s),
        Err(swscan::Error::SymbolOutOfAlphabet { position: 2, .. })
    ));
}

#[test]
fn wildcards_score_as_mismatches() {
    let s = scheme(2, -3, 4, 1);
    let q = enc(b"ACGTNNACGT");
    let r = enc(b"ACGTACACGT");
    let want = sw_scalar(&q, &r, &s).unwrap().0 .0 as u16;
    for p in [2, 4, 8] {
        assert_eq!(kernel_scores(&q, &r, &s, p), [want; 3]);
    }
}

/// Deterministic pseudo-random DNA (xorshift), so instances are fixed.
fn dna_run(len: usize, mut seed: u64) -> Vec<u8> {
    (0..len)
        .map(|_| {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 4) as u8
        })
        .collect()
}

/// The reference lacks a long stretch of the query, so the best alignment
/// carries one vertical gap through several lanes. Only a correct cross-lane
/// correction recovers the flank after the insertion.
#[test]
fn long_insertions_cross_lane_boundaries() {
    let s = scheme(4, -3, 3, 1);
    for (flank, insert) in [(20, 30), (40, 70), (12, 90), (60, 15)] {
        let left = dna_run(flank, 11);
        let right = dna_run(flank, 29);
        let q = [left.clone(), dna_run(insert, 47), right.clone()].concat();
        let r = [left, right].concat();
        let want = sw_scalar_score(&q, &r, &s).unwrap().0 as u16;
        assert!(want as usize > 4 * flank, "instance must need the gap");
        for p in [2, 4, 8, 16, 32, 64] {
            assert_eq!(
                kernel_scores(&q, &r, &s, p),
                [want; 3],
                "p={p} flank={flank}"
            );
        }
    }
}

#[cfg(target_arch = "x86_64")]
#[test]
fn sse2_backend_is_bit_identical() {
    use swscan::vector::Sse2;
    use swscan::Reference;
    let s = scheme(3, -2, 5, 1);
    let q = enc(b"GATTACAGATTACACCGGTTAAGCTAGCTAGGCATCGA");
    let r = enc(b"GATCACAGATTTACACCGTTAAGCTAGCAGGCATCGAA");
    let prof = profile(&q, &s, 8);
    for early_exit in [true, false] {
        let a = align_lazyf_with(&mut Reference::<8>::new(), &prof, &r, &s, early_exit).unwrap();
        let b = align_lazyf_with(&mut Sse2::new(), &prof, &r, &s, early_exit).unwrap();
        assert_eq!(a, b);
    }
    let a = align_scan_with(&mut Reference::<8>::new(), &prof, &r, &s).unwrap();
    let b = align_scan_with(&mut Sse2::new(), &prof, &r, &s).unwrap();
    assert_eq!(a, b);
}

#[test]
fn scan_correction_work_is_input_independent() {
    let s = scheme(2, -3, 5, 2);
    for p in [2, 4, 8, 16, 32, 64] {
        let steps = VectorSpec::new(p).unwrap().scan_steps() as u64;
        for (q, r) in [
            (&b"ACGTTGCA"[..], &b"TTTT"[..]),
            (b"GATTACAGATTACAGATTACA", b"GATTACA"),
            (b"A", b"CCCCCCCCCCCCCCC"),
        ] {
            let res = align_scan(&profile(&enc(q), &s, p), &enc(r), &s).unwrap();
            let col = res
                .correction
                .uniform_column_ops
                .expect("same work every column");
            assert_eq!(
                (col.shifts, col.maxes, col.sat_subs),
                (steps + 1, steps, steps)
            );
            assert_eq!(res.correction.columns, r.len() as u64);
            assert_eq!(res.correction_passes(), 0);
        }
    }
}

#[test]
fn noexit_runs_every_pass() {
    let s = scheme(2, -1, 3, 1);
    let q = enc(b"ACGTACGTACGTACGTAC");
    let r = enc(b"ACGGT");
    for p in [2, 4, 8, 16] {
        let res = align_lazyf(&profile(&q, &s, p), &r, &s, false).unwrap();
        assert_eq!(res.correction.min_column_passes, p as u64);
        assert_eq!(res.correction.max_column_passes, p as u64);
        assert_eq!(res.correction_passes(), (p * r.len()) as u64);
    }
}

#[test]
fn overflow_is_flagged() {
    let s = scheme(100, -1, 3, 1);
    let q = vec![0u8; 700];
    let r = vec![0u8; 700];
    assert!(sw_scalar_score(&q, &r, &s).unwrap().exceeds_score_max());
    let prof = profile(&q, &s, 16);
    assert!(align_scan(&prof, &r, &s).unwrap().overflow);
    assert!(align_lazyf(&prof, &r, &s, true).unwrap().overflow);
}

fn instance() -> impl Strategy<Value = (Vec<u8>, Vec<u8>, ScoringScheme)> {
    (
        prop::collection::vec(0u8..4, 1..120),
        prop::collection::vec(0u8..4, 1..120),
        1i32..=4,
        -4i32..=-1,
        1u32..=8,
    )
        .prop_flat_map(|(q, r, m, x, go)| (Just(q), Just(r), Just(m), Just(x), Just(go), 1..=go))
        .prop_map(|(q, r, m, x, go, ge)| (q, r, scheme(m, x, go, ge)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn kernels_match_oracle((q, r, s) in instance(), p in prop::sample::select(vec![2usize, 4, 8, 16])) {
        let want = sw_scalar_score(&q, &r, &s).unwrap().0 as u16;
        prop_assert_eq!(kernel_scores(&q, &r, &s, p), [want; 3]);
    }

    #[test]
    fn early_exit_only_skips_work((q, r, s) in instance(), p in prop::sample::select(vec![4usize, 8, 16])) {
        let prof = profile(&q, &s, p);
        let lazy = align_lazyf(&prof, &r, &s, true).unwrap();
        let full = align_lazyf(&prof, &r, &s, false).unwrap();
        prop_assert!(lazy.correction.max_column_passes <= p as u64);
        prop_assert!(lazy.correction_passes() <= full.correction_passes());
    }

    #[test]
    fn scan_beats_full_lazyf_on_total_work((q, r, s) in instance(), p in prop::sample::select(vec![4usize, 8, 16, 32, 64])) {
        let prof = profile(&q, &s, p);
        let scan = align_scan(&prof, &r, &s).unwrap();
        let full = align_lazyf(&prof, &r, &s, false).unwrap();
        prop_assert!(scan.vector_ops() < full.vector_ops());
    }
}
