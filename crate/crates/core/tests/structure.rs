use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use posetsym_core::measure::{endpoint_measure, is_central};
use posetsym_core::{
    antichain, build_box_poset, build_graph, build_young_poset, chain, generate_group,
    GroupConfig, PosetWindow,
};

fn corpus() -> Vec<PosetWindow> {
    vec![
        build_young_poset(&[2, 1]).unwrap(),
        build_young_poset(&[3, 1]).unwrap(),
        build_young_poset(&[3, 2]).unwrap(),
        build_young_poset(&[2, 2, 1]).unwrap(),
        build_box_poset(&[3, 3]).unwrap(),
        build_box_poset(&[2, 2, 2]).unwrap(),
        chain(6).unwrap(),
        antichain(4).unwrap(),
    ]
}

fn hook_dim(shape: &[u32]) -> u128 {
    let n: u32 = shape.iter().sum();
    let fact: u128 = (1..=n as u128).product();
    let hooks: u128 = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| {
            (0..len).map(move |c| {
                let leg = shape[r + 1..].iter().filter(|&&l| l > c).count() as u128;
                (len - c - 1) as u128 + leg + 1
            })
        })
        .product();
    fact / hooks
}

#[test]
fn young_graph_dimensions_match_hook_formula() {
    let g = build_graph(&build_young_poset(&[1]).unwrap(), 12).unwrap();
    for level in 1..=12 {
        let mut sum_sq = BigUint::from(0u32);
        for v in g.vertices(level) {
            let ids = g.ideal_ids(v).unwrap();
            let mut rows: BTreeMap<u32, u32> = BTreeMap::new();
            for &id in ids.iter().filter(|&&id| id != 0) {
                let c = g.window().poset.element(id).coords.as_ref().unwrap();
                *rows.entry(c[0]).or_default() += 1;
            }
            let shape: Vec<u32> = rows.into_values().collect();
            let d = g.dimension(v).unwrap();
            assert_eq!(*d, BigUint::from(hook_dim(&shape)), "shape {shape:?}");
            sum_sq += d * d;
        }
        let fact: u128 = (1..=level as u128).product();
        assert_eq!(sum_sq, BigUint::from(fact), "level {level}");
    }
}

#[test]
fn orbits_are_exactly_the_endpoint_fibers() {
    for w in corpus() {
        let n = w.poset.len();
        let h = generate_group(&w, n, GroupConfig::default()).unwrap();
        // group paths by endpoint independently of the handle's helper
        let mut fibers: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (k, p) in h.paths().iter().enumerate() {
            let mut s = p.elements().to_vec();
            s.sort();
            fibers.entry(s).or_default().push(k);
        }
        let mut expected: Vec<Vec<usize>> = fibers.into_values().collect();
        expected.sort();
        assert_eq!(h.orbits(), expected, "{}", w.family);
    }
}

#[test]
fn truncated_orbits_are_fibers() {
    for w in corpus() {
        let len = w.poset.len().min(5);
        let h = generate_group(&w, len, GroupConfig::default()).unwrap();
        assert_eq!(h.orbits(), h.fibers(), "{}", w.family);
    }
}

#[test]
fn endpoint_measures_are_central() {
    for w in corpus() {
        let len = w.poset.len().min(7);
        let depth = len - 1;
        let graph = Arc::new(build_graph(&w, depth).unwrap());
        let h = generate_group(&w, len, GroupConfig::default()).unwrap();
        for v in graph.vertices(depth).collect::<Vec<_>>() {
            let k = endpoint_measure(graph.clone(), v).unwrap();
            let masses: Vec<BigRational> = k.path_measure(h.paths()).unwrap();
            let r = is_central(&h, &masses, 0.0).unwrap();
            assert!(r.is_central(), "{} at {v:?}", w.family);
        }
    }
}
