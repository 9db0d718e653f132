mod common;

use std::collections::{BTreeMap, BTreeSet};

use tournaments::census::{census, census_with, enumerate_labeled, CensusOptions};
use tournaments::er::find_indecomposable_extension_pair;
use tournaments::interval::is_indecomposable_in;
use tournaments::iso::canonical_form;
use tournaments::{is_indecomposable, Permutation, Tournament, VertexSet};

#[test]
fn shard_count_does_not_change_the_result() {
    let one = census(6).unwrap();
    for jobs in [2, 3, 8, 64] {
        let many = census_with(6, &CensusOptions { jobs, relabel: None }).unwrap();
        assert_eq!(many, one, "jobs={jobs}");
        assert_eq!(many.summary(), one.summary());
        assert_eq!(many.to_json(), one.to_json());
    }
    assert!(one.coverage_consistent());
}

#[test]
fn relabeling_inputs_does_not_change_the_result() {
    let plain = census(6).unwrap();
    for image in [vec![5, 4, 3, 2, 1, 0], vec![1, 2, 3, 4, 5, 0], vec![2, 0, 5, 1, 4, 3]] {
        let relabel = Some(Permutation::new(image).unwrap());
        assert_eq!(census_with(6, &CensusOptions { jobs: 2, relabel }).unwrap(), plain);
    }
}

#[test]
fn canonical_partition_matches_brute_force_at_order_5() {
    let mut fast: BTreeMap<_, BTreeSet<u64>> = BTreeMap::new();
    let mut slow: BTreeMap<_, BTreeSet<u64>> = BTreeMap::new();
    enumerate_labeled(5, |code, t| {
        fast.entry(canonical_form(t).unwrap()).or_default().insert(code);
        slow.entry(common::canonical(&common::matrix(t))).or_default().insert(code);
    })
    .unwrap();
    assert_eq!(fast.len(), 12);
    let a: BTreeSet<_> = fast.into_values().collect();
    let b: BTreeSet<_> = slow.into_values().collect();
    assert_eq!(a, b);
}

#[test]
fn order_six_classes_match_brute_force() {
    let c = census(6).unwrap();
    let mut by_k: BTreeMap<usize, BTreeSet<Vec<bool>>> = BTreeMap::new();
    let all: Vec<usize> = (0..6).collect();
    enumerate_labeled(6, |_, t| {
        let a = common::matrix(t);
        if common::is_indecomposable(&a, &all) {
            by_k.entry(common::non_critical(&a).len()).or_default().insert(common::canonical(&a));
        }
    })
    .unwrap();
    let oracle: BTreeMap<usize, usize> = by_k.iter().map(|(k, s)| (*k, s.len())).collect();
    let found: BTreeMap<usize, usize> = c.classes.iter().map(|(k, v)| (*k, v.len())).collect();
    assert_eq!(found, oracle);
    for recs in c.classes.values() {
        for r in recs {
            let n = common::factorial(6) / common::automorphisms(&common::matrix(&r.representative())) as u64;
            assert_eq!(r.labeled, n);
        }
    }
}

#[test]
fn json_report_lists_every_class() {
    let c = census(5).unwrap();
    let doc = c.to_json();
    assert_eq!(doc["order"], 5);
    assert_eq!(doc["histogram"]["0"], 264);
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 3);
    for rec in classes {
        let trn = rec["representative"].as_str().unwrap();
        let t = tournaments::format::parse_trn(trn).unwrap();
        assert_eq!(canonical_form(&t).unwrap().to_hex(), rec["canonical"].as_str().unwrap());
    }
}

#[test]
fn extension_pairs_on_sampled_order_seven_tournaments() {
    let mut sampled = 0;
    let mut code = 1u64;
    while sampled < 1000 {
        // multiplicative stride through the 2^21 codes
        code = code * 48271 % ((1 << 21) - 1);
        let t = Tournament::from_code(7, code);
        if !is_indecomposable(&t) {
            continue;
        }
        let Some(x) = (0..1u64 << 7)
            .map(VertexSet::from_bits)
            .filter(|x| (3..=5).contains(&x.len()) && is_indecomposable_in(&t, *x))
            .max_by_key(|x| (x.len(), std::cmp::Reverse(x.bits())))
        else {
            continue;
        };
        let (a, b) = find_indecomposable_extension_pair(&t, x).unwrap();
        let mut grown = x.with(a).with(b).to_vec();
        grown.sort_unstable();
        assert!(common::is_indecomposable(&common::matrix(&t), &grown), "code {code}, base {x}");
        sampled += 1;
    }
}
