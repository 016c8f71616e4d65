#![no_main]
use libfuzzer_sys::fuzz_target;
use swscan::oracle::sw_scalar_score;
use swscan::{align_lazyf, align_scan, Alphabet, QueryProfile, ScoringScheme, VectorSpec};

// Layout: 5 parameter bytes, then residues; a 0xFF byte splits query from
// reference.
fuzz_target!(|data: &[u8]| {
    let &[lanes, m, x, go, ge, ref rest @ ..] = data else {
        return;
    };
    let p = 2usize << (lanes % 6);
    let go = u32::from(go % 16) + 1;
    let ge = u32::from(ge) % go + 1;
    let Ok(scheme) = ScoringScheme::match_mismatch(
        Alphabet::dna(),
        i32::from(m % 16),
        -i32::from(x % 16),
        go,
        ge,
    ) else {
        return;
    };
    let mut parts = rest.splitn(2, |&b| b == 0xFF);
    let enc = |s: &[u8]| s.iter().take(300).map(|b| b % 5).collect::<Vec<u8>>();
    let query = enc(parts.next().unwrap_or_default());
    let reference = enc(parts.next().unwrap_or_default());
    if query.is_empty() {
        return;
    }

    let want = sw_scalar_score(&query, &reference, &scheme).unwrap();
    let profile = QueryProfile::build(&query, &scheme, VectorSpec::new(p).unwrap()).unwrap();
    for result in [
        align_lazyf(&profile, &reference, &scheme, true).unwrap(),
        align_lazyf(&profile, &reference, &scheme, false).unwrap(),
        align_scan(&profile, &reference, &scheme).unwrap(),
    ] {
        if !result.overflow {
            assert_eq!(i64::from(result.score), want.0);
        } else {
            assert!(want.exceeds_score_max());
        }
    }
});
