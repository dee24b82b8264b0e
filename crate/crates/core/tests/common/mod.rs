#![allow(dead_code)]

use std::sync::Arc;

use plesken_lab::catalog::CATALOG;
use plesken_lab::random::coefficient_pool;
use plesken_lab::{build_group, AlgebraElement, FiniteGroup, GroupSpec};
use proptest::prelude::*;

pub fn grp(s: &str) -> Arc<FiniteGroup> {
    build_group(s.parse().unwrap()).unwrap()
}

pub fn catalog_groups(max_order: usize) -> Vec<(GroupSpec, Arc<FiniteGroup>)> {
    CATALOG
        .iter()
        .filter(|s| s.order().unwrap() <= max_order)
        .map(|&s| (s, build_group(s).unwrap()))
        .collect()
}

/// Elements with support ≤ 5 and coefficients from the fixed pool.
pub fn element(group: Arc<FiniteGroup>) -> impl Strategy<Value = AlgebraElement> {
    let n = group.order();
    let pool = coefficient_pool();
    prop::collection::vec((0..n, 0..pool.len()), 0..=5).prop_map(move |terms| {
        AlgebraElement::from_terms(&group, terms.into_iter().map(|(g, c)| (g, pool[c].clone()))).unwrap()
    })
}

pub fn scalar() -> impl Strategy<Value = plesken_lab::Scalar> {
    let pool = coefficient_pool();
    (0..pool.len()).prop_map(move |i| pool[i].clone())
}

/// All permutations of `0..n` as vectors (test-side oracle, no group tables).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
