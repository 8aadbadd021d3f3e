#![no_main]

use libfuzzer_sys::fuzz_target;
use rkdual::{parse_cells, render_cells};

fuzz_target!(|data: &str| {
    if let Ok(records) = parse_cells(data) {
        let again = parse_cells(&render_cells(&records)).expect("rendered records parse");
        assert_eq!(again, records);
    }
});
