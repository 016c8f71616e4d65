#![no_main]
use libfuzzer_sys::fuzz_target;
use swscan::harness::parse_fasta;
use swscan::Alphabet;

fuzz_target!(|data: &[u8]| {
    let alphabet = Alphabet::dna();
    if let Ok(records) = parse_fasta(data, &alphabet) {
        for r in records {
            assert!(!r.sequence.is_empty());
            assert!(!r.id.is_empty());
            alphabet
                .encode(&r.sequence)
                .expect("parsed residues encode");
        }
    }
});
