#![no_main]

use libfuzzer_sys::fuzz_target;
use parametric_mst::format::{read_graph, write_graph};

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 16 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = read_graph(s) {
        let round = read_graph(&write_graph(&g)).expect("own output parses");
        assert_eq!(round, g);
    }
});
