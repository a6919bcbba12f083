//! The built-in token counter stays within 15% of a GPT-2 style BPE
//! tokenizer on a corpus of real source files.

use std::fs;
use std::path::Path;

use apiground::tokens::count_tokens;

#[test]
fn subtoken_counts_track_bpe_counts() {
    let bpe = tiktoken_rs::r50k_base().unwrap();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/token_corpus");
    let mut files: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(files.len() >= 6);
    let (mut ours_total, mut bpe_total) = (0usize, 0usize);
    for path in files {
        let text = fs::read_to_string(&path).unwrap();
        let ours = count_tokens(&text);
        let reference = bpe.encode_ordinary(&text).len();
        let ratio = ours as f64 / reference as f64;
        println!("{}: ours {ours}, bpe {reference}, ratio {ratio:.3}", path.display());
        assert!((ratio - 1.0).abs() <= 0.15, "{}: ratio {ratio:.3}", path.display());
        ours_total += ours;
        bpe_total += reference;
    }
    let ratio = ours_total as f64 / bpe_total as f64;
    assert!((ratio - 1.0).abs() <= 0.15, "corpus ratio {ratio:.3}");
}
