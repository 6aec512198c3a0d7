//! Strategies shared by the property tests and the acceptance driver.

use std::collections::BTreeSet;

use proptest::prelude::*;

use super::{naive_comp, naive_is_peak, Grid};

pub const MAX_N: usize = 7;

pub fn parts_from_cuts(n: usize, cuts: u32) -> Vec<usize> {
    let set: BTreeSet<usize> = (1..n).filter(|i| cuts >> (i - 1) & 1 == 1).collect();
    naive_comp(n, &set)
}

pub fn composition() -> impl Strategy<Value = Vec<usize>> {
    (1..=MAX_N).prop_flat_map(|n| (0u32..1 << (n - 1)).prop_map(move |c| parts_from_cuts(n, c)))
}

pub fn peak_composition() -> impl Strategy<Value = Vec<usize>> {
    composition().prop_filter("peak", |p| naive_is_peak(p))
}

/// A filling of a random shape by a random permutation, with random marks.
pub fn filling() -> impl Strategy<Value = Grid> {
    composition().prop_flat_map(|parts| {
        let n: usize = parts.iter().sum();
        (
            Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
            0u32..1 << n,
            Just(parts),
        )
            .prop_map(|(perm, marks, parts)| {
                let mut it = perm.into_iter();
                parts
                    .iter()
                    .map(|&len| {
                        it.by_ref()
                            .take(len)
                            .map(|v| (v, marks >> (v - 1) & 1 == 1))
                            .collect()
                    })
                    .collect()
            })
    })
}

pub fn pick<T: Clone>(items: &[T], index: prop::sample::Index) -> Option<T> {
    (!items.is_empty()).then(|| items[index.index(items.len())].clone())
}
