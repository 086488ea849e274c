use cospec::matching::{
    check_tutte_violator, deficiency, has_perfect_matching, maximum_matching, verify_matching,
};
use cospec::VertexSet;
use cospec_oracles::{max_matching_exhaustive, random_graph, rng};
use rand::Rng;

#[test]
fn blossom_size_matches_exhaustive_search() {
    let mut r = rng(21);
    for _ in 0..800 {
        let n = r.gen_range(0..=10);
        let density = r.gen_range(0.05..0.7);
        let g = random_graph(&mut r, n, density);
        let m = maximum_matching(&g);
        assert!(verify_matching(&g, &m));
        assert_eq!(m.len(), max_matching_exhaustive(&g), "{g:?}");
    }
}

#[test]
fn deterministic_output() {
    let mut r = rng(22);
    for _ in 0..50 {
        let g = random_graph(&mut r, 30, 0.1);
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }
}

#[test]
fn weak_duality_and_certificate_soundness() {
    let mut r = rng(23);
    let mut violators = 0;
    for _ in 0..400 {
        let n = r.gen_range(1..=10);
        let density = r.gen_range(0.1..0.5);
        let g = random_graph(&mut r, n, density);
        let s = VertexSet::new((0..n).filter(|_| r.gen_bool(0.25)));
        let t = check_tutte_violator(&g, &s).unwrap();
        assert!(deficiency(&g) + t.size >= t.odd_components);
        if t.is_violating() {
            violators += 1;
            assert!(!has_perfect_matching(&g));
        }
    }
    assert!(violators > 50);
}
