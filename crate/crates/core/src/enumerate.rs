//! Family-tree traversal over the solutions of an instance.
//!
//! Solutions with minimum common item `k` form a forest: the roots are the
//! bases (maximal components of `V⟨k⟩` whose minimum common item is `k`) and
//! every other solution hangs below its lex-min minimal superset solution.
//! The traversal keeps an explicit stack of frames; a frame at odd depth
//! emits each child before descending into it and a frame at even depth
//! emits it afterwards, so at most a constant number of frames are opened
//! between two consecutive outputs.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::system::{ElementSet, Instance, ItemSet, TransitiveSystem, VolumeFunction};

/// A solution together with its common item set and minimum item.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionRecord {
    pub elements: ElementSet,
    pub items: ItemSet,
    /// Minimum of `items`, or `0` when `items` is empty.
    pub k: usize,
}

impl SolutionRecord {
    pub fn new(inst: &Instance, elements: ElementSet) -> Result<Self> {
        let items = inst.common_items(&elements)?;
        let k = items.min_item();
        Ok(SolutionRecord { elements, items, k })
    }
}

/// Oracle and traversal counters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TraversalStats {
    pub l1_calls: u64,
    pub l2_calls: u64,
    pub volume_calls: u64,
    pub descendants_calls: u64,
    pub outputs: u64,
    /// Largest number of `Descendants` frames opened between two outputs
    /// (or before the first output of a run).
    pub max_descendants_gap: u64,
    /// Largest number of oracle calls (l1 + l2) between two outputs.
    pub max_oracle_gap: u64,
    /// Sum over all outputs of the oracle calls spent since the previous one.
    pub total_oracle_gap: u64,
    /// Deepest stack of open `Descendants` frames.
    pub max_stack_depth: u64,
    /// Times a frame was opened with `open frames + |S| > n + 1`.
    pub depth_violations: u64,
}

impl TraversalStats {
    pub fn oracle_calls(&self) -> u64 {
        self.l1_calls + self.l2_calls
    }

    pub fn mean_oracle_gap(&self) -> f64 {
        if self.outputs == 0 {
            0.0
        } else {
            self.total_oracle_gap as f64 / self.outputs as f64
        }
    }
}

/// Counting front-end to the instance's oracles.
struct Oracles<'a> {
    inst: &'a Instance,
    stats: &'a mut TraversalStats,
}

impl<'a> Oracles<'a> {
    fn l1(&mut self, x: &ElementSet, y: &ElementSet) -> Option<ElementSet> {
        self.stats.l1_calls += 1;
        self.inst.system().maximal_containing(x, y)
    }

    fn l2(&mut self, y: &ElementSet) -> Vec<ElementSet> {
        if y.is_empty() {
            return Vec::new();
        }
        self.stats.l2_calls += 1;
        self.inst.system().maximal_components(y)
    }

    fn positive(&mut self, x: &ElementSet) -> bool {
        match self.inst.volume() {
            Some(f) => {
                self.stats.volume_calls += 1;
                f.eval_positive(x)
            }
            None => true,
        }
    }

    fn record(&self, elements: ElementSet) -> SolutionRecord {
        SolutionRecord::new(self.inst, elements).expect("components are non-empty")
    }
}

fn check_k(k: usize, lo: usize, hi: usize) -> Result<()> {
    if k < lo || k > hi {
        return Err(Error::BadItemIndex { k, lo, hi: hi.max(lo) });
    }
    Ok(())
}

fn bases_with(or: &mut Oracles<'_>, k: usize) -> Vec<SolutionRecord> {
    let within = or.inst.with_item(k).clone();
    or.l2(&within)
        .into_iter()
        .map(|c| or.record(c))
        .filter(|r| r.k == k)
        .collect()
}

/// Bases of item class `k`: maximal components of `V⟨k⟩` whose minimum
/// common item is exactly `k`.
pub fn bases(inst: &Instance, k: usize) -> Result<Vec<SolutionRecord>> {
    check_k(k, 0, inst.q())?;
    let mut stats = TraversalStats::default();
    Ok(bases_with(&mut Oracles { inst, stats: &mut stats }, k))
}

/// Lex-min minimal superset solution of `s`. Caller guarantees `s` is a
/// non-base solution with minimum common item `k`.
fn parent_with(or: &mut Oracles<'_>, s: &ElementSet, s_items: &ItemSet, k: usize) -> ElementSet {
    let mut within = or.inst.with_item(k).clone();
    for i in s_items.iter().filter(|&i| i > k) {
        let candidate = within.intersection(or.inst.with_item(i));
        if let Some(z) = or.l1(s, &candidate) {
            if z.is_proper_superset(s) {
                within = candidate;
            }
        }
    }
    or.l1(s, &within)
        .expect("a component lies between S and V⟨J⟩ since S itself does")
}

/// Parent of a non-base solution `s` in item class `k ∈ [1, q-1]`.
pub fn parent(inst: &Instance, s: &SolutionRecord, k: usize) -> Result<SolutionRecord> {
    check_k(k, 1, inst.q().saturating_sub(1))?;
    let items = inst.common_items(&s.elements)?;
    if items.min_item() != k {
        return Err(Error::WrongItemClass {
            expected: k,
            actual: items.min_item(),
        });
    }
    let mut stats = TraversalStats::default();
    let mut or = Oracles { inst, stats: &mut stats };
    let up = or.l1(&s.elements, inst.with_item(k));
    if up.as_ref().is_none_or(|z| !z.is_proper_superset(&s.elements)) {
        return Err(Error::IsBase);
    }
    let t = parent_with(&mut or, &s.elements, &items, k);
    Ok(or.record(t))
}

/// Lazy generator of the children of one solution.
#[derive(Debug)]
struct ChildCursor {
    k: usize,
    parent: ElementSet,
    parent_items: ItemSet,
    /// Remaining `j ∈ [k+1, q] ∖ I_σ(T)`, descending so `pop` yields them in
    /// ascending order.
    pending_items: Vec<usize>,
    current_j: usize,
    candidates: std::vec::IntoIter<ElementSet>,
}

impl ChildCursor {
    fn new(inst: &Instance, parent: &SolutionRecord, k: usize) -> Self {
        let mut pending_items: Vec<usize> = (k + 1..=inst.q())
            .filter(|&j| !parent.items.contains(j))
            .collect();
        pending_items.reverse();
        ChildCursor {
            k,
            parent: parent.elements.clone(),
            parent_items: parent.items.clone(),
            pending_items,
            current_j: 0,
            candidates: Vec::new().into_iter(),
        }
    }

    fn next_child(&mut self, or: &mut Oracles<'_>) -> Option<SolutionRecord> {
        loop {
            for c in self.candidates.by_ref() {
                let rec = or.record(c);
                if rec.k != self.k {
                    continue;
                }
                let first_new = rec
                    .items
                    .difference(&self.parent_items)
                    .iter()
                    .find(|&i| i > self.k);
                if first_new != Some(self.current_j) {
                    continue;
                }
                if parent_with(or, &rec.elements, &rec.items, self.k) == self.parent {
                    return Some(rec);
                }
            }
            let j = self.pending_items.pop()?;
            self.current_j = j;
            let within = self.parent.intersection(or.inst.with_item(j));
            self.candidates = or.l2(&within).into_iter();
        }
    }
}

/// All children of `t` in item class `k ∈ [1, q-1]`, in generation order.
pub fn children(inst: &Instance, t: &SolutionRecord, k: usize) -> Result<Vec<SolutionRecord>> {
    check_k(k, 1, inst.q().saturating_sub(1))?;
    let mut stats = TraversalStats::default();
    let mut or = Oracles { inst, stats: &mut stats };
    let mut cursor = ChildCursor::new(inst, t, k);
    let mut out = Vec::new();
    while let Some(c) = cursor.next_child(&mut or) {
        out.push(c);
    }
    Ok(out)
}

#[derive(Debug)]
struct Frame {
    node: SolutionRecord,
    depth: usize,
    emit_on_exit: bool,
    cursor: ChildCursor,
}

/// Streaming enumeration of the ρ-positive solutions of a range of item
/// classes.
pub struct Solutions {
    inst: Instance,
    classes: std::ops::RangeInclusive<usize>,
    k: usize,
    bases: std::vec::IntoIter<SolutionRecord>,
    stack: Vec<Frame>,
    stats: TraversalStats,
    descendants_since_output: u64,
    oracle_mark: u64,
}

impl Solutions {
    fn new(inst: Instance, classes: std::ops::RangeInclusive<usize>) -> Self {
        Solutions {
            inst,
            classes,
            k: 0,
            bases: Vec::new().into_iter(),
            stack: Vec::new(),
            stats: TraversalStats::default(),
            descendants_since_output: 0,
            oracle_mark: 0,
        }
    }

    pub fn stats(&self) -> &TraversalStats {
        &self.stats
    }

    pub fn instance(&self) -> &Instance {
        &self.inst
    }

    fn emit(&mut self, rec: SolutionRecord) -> SolutionRecord {
        let st = &mut self.stats;
        st.outputs += 1;
        st.max_descendants_gap = st.max_descendants_gap.max(self.descendants_since_output);
        let gap = st.oracle_calls() - self.oracle_mark;
        st.max_oracle_gap = st.max_oracle_gap.max(gap);
        st.total_oracle_gap += gap;
        self.oracle_mark = st.oracle_calls();
        self.descendants_since_output = 0;
        rec
    }

    fn open_frame(&mut self, node: SolutionRecord, depth: usize, emit_on_exit: bool) {
        self.stats.descendants_calls += 1;
        self.descendants_since_output += 1;
        let open = self.stack.len() as u64 + 1;
        self.stats.max_stack_depth = self.stats.max_stack_depth.max(open);
        if open + node.elements.len() as u64 > self.inst.n() as u64 + 1 {
            self.stats.depth_violations += 1;
        }
        let cursor = ChildCursor::new(&self.inst, &node, self.k);
        self.stack.push(Frame {
            node,
            depth,
            emit_on_exit,
            cursor,
        });
    }

    /// Advances the traversal by one step; returns an output if the step
    /// produced one, `Err(())` when everything is exhausted.
    fn step(&mut self) -> std::result::Result<Option<SolutionRecord>, ()> {
        let q = self.inst.q();
        if let Some(frame) = self.stack.last_mut() {
            let mut or = Oracles {
                inst: &self.inst,
                stats: &mut self.stats,
            };
            let depth = frame.depth;
            let found = loop {
                match frame.cursor.next_child(&mut or) {
                    Some(c) if or.positive(&c.elements) => break Some(c),
                    Some(_) => continue,
                    None => break None,
                }
            };
            return Ok(match found {
                Some(child) => {
                    let odd = depth % 2 == 1;
                    let early = odd.then(|| child.clone());
                    self.open_frame(child, depth + 1, !odd);
                    early.map(|c| self.emit(c))
                }
                None => {
                    let frame = self.stack.pop().expect("non-empty stack");
                    frame.emit_on_exit.then(|| self.emit(frame.node))
                }
            });
        }
        loop {
            if let Some(base) = self.bases.next() {
                let mut or = Oracles {
                    inst: &self.inst,
                    stats: &mut self.stats,
                };
                if !or.positive(&base.elements) {
                    continue;
                }
                if self.k >= 1 && self.k < q {
                    self.open_frame(base.clone(), 2, false);
                }
                return Ok(Some(self.emit(base)));
            }
            let k = self.classes.next().ok_or(())?;
            self.k = k;
            let mut or = Oracles {
                inst: &self.inst,
                stats: &mut self.stats,
            };
            self.bases = bases_with(&mut or, k).into_iter();
        }
    }
}

impl Iterator for Solutions {
    type Item = SolutionRecord;

    fn next(&mut self) -> Option<SolutionRecord> {
        loop {
            match self.step() {
                Ok(Some(rec)) => return Some(rec),
                Ok(None) => continue,
                Err(()) => return None,
            }
        }
    }
}

/// ρ-positive solutions of item class `k ∈ [0, q]`.
pub fn enumerate_solutions_k(inst: &Instance, k: usize) -> Result<Solutions> {
    check_k(k, 0, inst.q())?;
    Ok(Solutions::new(inst.clone(), k..=k))
}

/// All ρ-positive solutions, item classes in ascending order.
pub fn enumerate_solutions(inst: &Instance) -> Solutions {
    Solutions::new(inst.clone(), 0..=inst.q())
}

/// Instance whose solutions are exactly the components of `system`: element
/// `v` receives every item except `v + 1`.
pub fn component_instance(system: Arc<dyn TransitiveSystem>) -> Result<Instance> {
    let n = system.ground_size();
    let sigma = (0..n)
        .map(|v| {
            let mut s = ItemSet::full(n);
            s.remove(v + 1);
            s
        })
        .collect();
    Instance::new(system, n, sigma)
}

/// Streams the ρ-positive components of a transitive system.
pub struct Components(Solutions);

impl Components {
    pub fn stats(&self) -> &TraversalStats {
        self.0.stats()
    }
}

impl Iterator for Components {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        self.0.next().map(|r| r.elements)
    }
}

pub fn enumerate_components(
    system: Arc<dyn TransitiveSystem>,
    volume: Option<Arc<dyn VolumeFunction>>,
) -> Result<Components> {
    let mut inst = component_instance(system)?;
    if let Some(f) = volume {
        inst = inst.with_volume(f);
    }
    Ok(Components(enumerate_solutions(&inst)))
}
