#![no_main]

use cospec::graph6;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = graph6::decode(data) {
        let s = graph6::encode(&g);
        let body = data.strip_prefix(graph6::HEADER).unwrap_or(data);
        assert_eq!(s.as_bytes(), body);
        assert_eq!(graph6::decode_str(&s).unwrap(), g);
    }
});
