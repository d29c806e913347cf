//! The order on item subsets and the item-set bookkeeping of instances.

use std::sync::Arc;

use connenum::systems::CisSystem;
use connenum::{itemset_lex_less, ElementSet, Instance, ItemSet, MixedGraph};
use proptest::prelude::*;

fn all_subsets(q: usize) -> Vec<ItemSet> {
    (0u32..1 << q)
        .map(|mask| ItemSet::from_items(q, (1..=q).filter(|&i| mask >> (i - 1) & 1 == 1)).unwrap())
        .collect()
}

fn padded(j: &ItemSet, q: usize, pad: usize) -> Vec<usize> {
    let mut seq = j.to_vec();
    seq.resize(q, pad);
    seq
}

#[test]
fn strict_total_order_up_to_five_items() {
    for q in 1..=5 {
        let sets = all_subsets(q);
        for a in &sets {
            assert!(!itemset_lex_less(a, a));
            for b in &sets {
                if a != b {
                    assert_ne!(itemset_lex_less(a, b), itemset_lex_less(b, a), "{a:?} {b:?}");
                }
                if a.is_subset(b) && a != b {
                    assert!(itemset_lex_less(b, a), "superset {b:?} should precede {a:?}");
                }
                for c in &sets {
                    if itemset_lex_less(a, b) && itemset_lex_less(b, c) {
                        assert!(itemset_lex_less(a, c));
                    }
                }
            }
        }
    }
}

// Padding with an element beyond every item gives an exact match; padding
// with the largest item itself collapses e.g. {1,q} and {1}, so there only
// the forward implication survives.
#[test]
fn agrees_with_padded_sequences() {
    for q in 1..=5 {
        let sets = all_subsets(q);
        for a in &sets {
            for b in &sets {
                let beyond = padded(a, q, q + 1) < padded(b, q, q + 1);
                assert_eq!(itemset_lex_less(a, b), beyond, "{a:?} {b:?}");
                if padded(a, q, q) < padded(b, q, q) {
                    assert!(itemset_lex_less(a, b));
                }
            }
        }
    }
}

#[test]
fn max_padding_ties_are_real() {
    let j = ItemSet::from_items(3, [1, 3]).unwrap();
    let k = ItemSet::from_items(3, [1]).unwrap();
    assert_eq!(padded(&j, 3, 3), padded(&k, 3, 3));
    assert!(itemset_lex_less(&j, &k));
}

fn instance(n: usize, q: usize, lists: &[Vec<usize>]) -> Instance {
    let g = MixedGraph::new(n);
    Instance::from_item_lists(Arc::new(CisSystem::new(&g)), q, lists).unwrap()
}

fn lists_strategy() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (1usize..=5).prop_flat_map(|q| {
        let list = proptest::collection::btree_set(1..=q, 0..=q).prop_map(|s| s.into_iter().collect::<Vec<_>>());
        (Just(q), proptest::collection::vec(list, 1..=8))
    })
}

proptest! {
    #[test]
    fn common_items_shrink_as_sets_grow(
        (q, lists) in lists_strategy(),
        a in any::<u16>(),
        b in any::<u16>(),
    ) {
        let n = lists.len();
        let inst = instance(n, q, &lists);
        let x = ElementSet::from_indices(n, (0..n).filter(|&v| a >> v & 1 == 1));
        let y = x.union(&ElementSet::from_indices(n, (0..n).filter(|&v| b >> v & 1 == 1)));
        prop_assume!(!x.is_empty());
        let ix = inst.common_items(&x).unwrap();
        let iy = inst.common_items(&y).unwrap();
        prop_assert!(iy.is_subset(&ix));
    }

    #[test]
    fn restriction_of_a_union_is_an_intersection(
        (q, lists) in lists_strategy(),
        a in any::<u8>(),
        b in any::<u8>(),
    ) {
        let n = lists.len();
        let inst = instance(n, q, &lists);
        let pick = |mask: u8| ItemSet::from_items(q, (1..=q).filter(|&i| mask >> (i - 1) & 1 == 1)).unwrap();
        let (j1, j2) = (pick(a), pick(b));
        let mut both = j1.clone();
        for i in j2.iter() {
            both.insert(i);
        }
        let want = inst.restrict_items(&j1).intersection(&inst.restrict_items(&j2));
        prop_assert_eq!(inst.restrict_items(&both), want);
    }

    #[test]
    fn restriction_matches_definition((q, lists) in lists_strategy(), a in any::<u8>()) {
        let n = lists.len();
        let inst = instance(n, q, &lists);
        let j = ItemSet::from_items(q, (1..=q).filter(|&i| a >> (i - 1) & 1 == 1)).unwrap();
        let want = ElementSet::from_indices(n, (0..n).filter(|&v| j.iter().all(|i| lists[v].contains(&i))));
        prop_assert_eq!(inst.restrict_items(&j), want);
    }
}
