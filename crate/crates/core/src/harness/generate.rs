use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;

/// `count` random (query, reference) pairs over the regular symbols of
/// `alphabet` (never the wildcard), lengths uniform in `len_min..=len_max`.
///
/// Driven by ChaCha8 seeded with `seed`, sampling only `u32` ranges, so the
/// output is identical on every platform. Panics if the range is empty.
pub fn generate_pairs(
    alphabet: &Alphabet,
    count: usize,
    len_min: usize,
    len_max: usize,
    seed: u64,
) -> Vec<(Vec<u8>, Vec<u8>)> {
    assert!(
        len_min <= len_max,
        "empty length range {len_min}..={len_max}"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let symbols = alphabet.symbols();
    let sequence = |rng: &mut ChaCha8Rng| {
        let len = rng.random_range(len_min as u32..=len_max as u32) as usize;
        (0..len)
            .map(|_| symbols[rng.random_range(0..symbols.len() as u32) as usize])
            .collect::<Vec<u8>>()
    };
    (0..count)
        .map(|_| {
            let query = sequence(&mut rng);
            let reference = sequence(&mut rng);
            (query, reference)
        })
        .collect()
}
