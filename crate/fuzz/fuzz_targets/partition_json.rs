#![no_main]

use cospec::SwitchingPartition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = n as usize;
    if let Ok(p) = SwitchingPartition::from_json(n, text) {
        assert_eq!(p.order(), n);
        assert_eq!(p.x().len() + p.y().len(), n);
        assert_eq!(SwitchingPartition::from_json(n, &p.to_json()).unwrap(), p);
    }
});
