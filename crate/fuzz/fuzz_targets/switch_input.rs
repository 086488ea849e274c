#![no_main]

use cospec::{apply_switch, char_poly, graph6, validate_switching_set, SwitchingPartition};
use libfuzzer_sys::fuzz_target;

// Input: a graph6 line, a newline, then comma-separated labels of X.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Some((line, xs)) = text.split_once('\n') else {
        return;
    };
    let Ok(g) = graph6::decode_str(line) else {
        return;
    };
    if g.order() > 40 {
        return;
    }
    let Ok(x) = xs.split(',').map(|t| t.trim().parse::<usize>()).collect::<Result<Vec<_>, _>>() else {
        return;
    };
    let Ok(p) = SwitchingPartition::from_x(g.order(), &x) else {
        return;
    };
    let report = validate_switching_set(&g, &p).unwrap();
    match apply_switch(&g, &p) {
        Ok(h) => {
            assert!(report.valid);
            assert_eq!(char_poly(&g), char_poly(&h));
            assert_eq!(apply_switch(&h, &p).unwrap(), g);
        }
        Err(_) => assert!(!report.valid),
    }
});
