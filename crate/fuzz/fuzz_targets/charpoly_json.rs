#![no_main]

use cospec::CharPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<CharPoly>(data) {
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<CharPoly>(&text).unwrap(), p);
        let _ = cospec::spectral::edge_count_from_spectrum(&p);
        let _ = p.to_string();
    }
});
