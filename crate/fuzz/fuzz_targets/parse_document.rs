#![no_main]

use libfuzzer_sys::fuzz_target;
use rkdual::Document;

fuzz_target!(|data: &str| {
    if let Ok(doc) = Document::parse(data) {
        assert!(!doc.subjects.is_empty());
        for a in &doc.arrows {
            assert!(a.source < doc.subjects.len() && a.target < doc.subjects.len());
        }
    }
});
