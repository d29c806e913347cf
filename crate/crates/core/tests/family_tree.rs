//! Parent/children laws of the family tree, checked against solutions found
//! by exhaustive search.

use std::collections::HashMap;
use std::sync::Arc;

use connenum::brute::{brute_solutions, membership};
use connenum::random::{item_sets, mixed_graph};
use connenum::{
    bases, build_system, children, enumerate_solutions, enumerate_solutions_k, itemset_lex_less, parent,
    CoreGuard, ElementSet, Instance, SizeThreshold, SolutionRecord, SystemMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Case {
    inst: Instance,
    solutions: Vec<SolutionRecord>,
}

fn random_case(rng: &mut ChaCha8Rng) -> Case {
    let mode = [SystemMode::Connected, SystemMode::InducedEdge, SystemMode::GlobalEdge][rng.gen_range(0..3)];
    let (n, m, q) = (rng.gen_range(1..=7), rng.gen_range(0..=12), rng.gen_range(1..=5));
    let g = mixed_graph(rng, n, m, 0.2);
    let k = rng.gen_range(1..=2);
    let sigma = item_sets(rng, n, q, 0.6);
    let sys = build_system(&g, mode, k, CoreGuard::default()).unwrap();
    let inst = Instance::new(sys, q, sigma.clone()).unwrap();
    let solutions = brute_solutions(&sigma, q, membership(&g, mode, k).unwrap()).unwrap();
    Case { inst, solutions }
}

fn is_base(case: &Case, s: &SolutionRecord) -> bool {
    bases(&case.inst, s.k).unwrap().iter().any(|b| b.elements == s.elements)
}

/// The lex-min minimal superset solution, by definition.
fn lex_min_parent(case: &Case, s: &SolutionRecord) -> Option<SolutionRecord> {
    let supers: Vec<&SolutionRecord> = case
        .solutions
        .iter()
        .filter(|t| t.k == s.k && t.elements.is_proper_superset(&s.elements))
        .collect();
    let minimal: Vec<&SolutionRecord> = supers
        .iter()
        .filter(|t| !supers.iter().any(|z| t.elements.is_proper_superset(&z.elements)))
        .copied()
        .collect();
    let best = minimal
        .iter()
        .copied()
        .reduce(|a, b| if itemset_lex_less(&b.items, &a.items) { b } else { a })?;
    let ties = minimal.iter().filter(|t| t.items == best.items).count();
    assert_eq!(ties, 1, "lex-min minimal superset solution is not unique");
    Some(best.clone())
}

#[test]
fn parent_is_the_lex_min_minimal_superset_solution() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut checked = 0;
    for _ in 0..150 {
        let case = random_case(&mut rng);
        let q = case.inst.q();
        for s in &case.solutions {
            if s.k == 0 || s.k == q || is_base(&case, s) {
                continue;
            }
            let p = parent(&case.inst, s, s.k).unwrap();
            assert!(p.elements.is_proper_superset(&s.elements));
            assert_eq!(p.k, s.k);
            assert_eq!(Some(p), lex_min_parent(&case, s));
            checked += 1;
        }
    }
    assert!(checked > 100, "only {checked} non-base solutions");
}

#[test]
fn children_invert_parent() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..150 {
        let case = random_case(&mut rng);
        let q = case.inst.q();
        let mut hits: HashMap<ElementSet, usize> = HashMap::new();
        for t in case.solutions.iter().filter(|t| t.k >= 1 && t.k < q) {
            for c in children(&case.inst, t, t.k).unwrap() {
                assert_eq!(parent(&case.inst, &c, t.k).unwrap().elements, t.elements);
                *hits.entry(c.elements).or_default() += 1;
            }
        }
        for s in case.solutions.iter().filter(|s| s.k >= 1 && s.k < q) {
            let expected = usize::from(!is_base(&case, s));
            assert_eq!(hits.get(&s.elements).copied().unwrap_or(0), expected, "{s:?}");
        }
    }
}

#[test]
fn parent_chains_reach_a_base() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..100 {
        let case = random_case(&mut rng);
        let n = case.inst.n();
        let q = case.inst.q();
        for s in case.solutions.iter().filter(|s| s.k >= 1 && s.k < q) {
            let mut cur = s.clone();
            let mut steps = 0;
            while !is_base(&case, &cur) {
                cur = parent(&case.inst, &cur, s.k).unwrap();
                steps += 1;
                assert!(steps <= n);
            }
        }
    }
}

#[test]
fn extreme_classes_are_just_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..100 {
        let case = random_case(&mut rng);
        let q = case.inst.q();
        for k in [0, q] {
            let mut got: Vec<ElementSet> = bases(&case.inst, k).unwrap().into_iter().map(|r| r.elements).collect();
            got.sort();
            let mut want: Vec<ElementSet> =
                case.solutions.iter().filter(|s| s.k == k).map(|s| s.elements.clone()).collect();
            want.sort();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn size_threshold_prunes_exactly_the_small_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for _ in 0..100 {
        let case = random_case(&mut rng);
        let min_size = rng.gen_range(1..=4);
        let inst = case.inst.clone().with_volume(Arc::new(SizeThreshold::at_least(min_size)));
        let mut got: Vec<ElementSet> = enumerate_solutions(&inst).map(|r| r.elements).collect();
        got.sort();
        let mut want: Vec<ElementSet> = case
            .solutions
            .iter()
            .filter(|s| s.elements.len() >= min_size)
            .map(|s| s.elements.clone())
            .collect();
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn traversal_instrumentation_stays_in_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    for _ in 0..150 {
        let case = random_case(&mut rng);
        for k in 0..=case.inst.q() {
            let mut run = enumerate_solutions_k(&case.inst, k).unwrap();
            let emitted = run.by_ref().count() as u64;
            let stats = run.stats();
            assert_eq!(stats.outputs, emitted);
            assert!(stats.max_descendants_gap <= 3, "{stats:?}");
            assert_eq!(stats.depth_violations, 0);
            assert!(stats.max_stack_depth <= case.inst.n() as u64 + 1);
        }
    }
}

#[test]
fn bad_item_class_is_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let case = random_case(&mut rng);
    assert!(enumerate_solutions_k(&case.inst, case.inst.q() + 1).is_err());
}
