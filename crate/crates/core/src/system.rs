//! Ground sets, item sets, instances and the oracle contract that every
//! concrete set system implements.
//!
//! Elements are dense indices `0..n`. Items are dense indices `1..=q`; item
//! `0` is never stored and stands for "no common item" when reported as the
//! minimum of an empty item set.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of the ground set, stored as a fixed-capacity bit set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet(FixedBitSet);

impl ElementSet {
    pub fn empty(capacity: usize) -> Self {
        ElementSet(FixedBitSet::with_capacity(capacity))
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        ElementSet(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(capacity: usize, indices: I) -> Self {
        let mut set = Self::empty(capacity);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn singleton(capacity: usize, index: usize) -> Self {
        Self::from_indices(capacity, [index])
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0.set(i, false);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    #[inline]
    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// `self ⊋ other`.
    pub fn is_proper_superset(&self, other: &ElementSet) -> bool {
        other.is_subset(self) && self != other
    }

    pub fn first(&self) -> Option<usize> {
        self.0.minimum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.0.intersect_with(&other.0);
        out
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.0.union_with(&other.0);
        out
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.0.difference_with(&other.0);
        out
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.0.union_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &ElementSet) {
        self.0.difference_with(&other.0);
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Canonical order: lexicographic on the ascending index sequence, so sets
/// sort first by their minimum element.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A subset of the items `[1, q]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ItemSet(FixedBitSet);

impl ItemSet {
    pub fn empty(q: usize) -> Self {
        ItemSet(FixedBitSet::with_capacity(q + 1))
    }

    pub fn full(q: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(q + 1);
        bits.insert_range(1..);
        ItemSet(bits)
    }

    pub fn from_items<I: IntoIterator<Item = usize>>(q: usize, items: I) -> Result<Self> {
        let mut set = Self::empty(q);
        for i in items {
            if i == 0 || i > q {
                return Err(Error::ItemOutOfRange { item: i, q });
            }
            set.0.insert(i);
        }
        Ok(set)
    }

    /// Largest admissible item.
    pub fn q(&self) -> usize {
        self.0.len() - 1
    }

    pub fn insert(&mut self, item: usize) {
        debug_assert!(item >= 1 && item <= self.q());
        self.0.insert(item);
    }

    pub fn remove(&mut self, item: usize) {
        self.0.set(item, false);
    }

    pub fn contains(&self, item: usize) -> bool {
        item < self.0.len() && self.0.contains(item)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_subset(&self, other: &ItemSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Minimum item, or `0` for the empty set.
    pub fn min_item(&self) -> usize {
        self.0.minimum().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn intersect_with(&mut self, other: &ItemSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn difference(&self, other: &ItemSet) -> ItemSet {
        let mut out = self.clone();
        out.0.difference_with(&other.0);
        out
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Strict order `self ≺ other`: the smallest item in the symmetric
    /// difference belongs to `self`.
    pub fn lex_less(&self, other: &ItemSet) -> bool {
        match self.0.symmetric_difference(&other.0).min() {
            Some(i) => self.0.contains(i),
            None => false,
        }
    }
}

impl fmt::Debug for ItemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `J ≺ K` on item subsets.
pub fn itemset_lex_less(j: &ItemSet, k: &ItemSet) -> bool {
    j.lex_less(k)
}

/// Oracle access to a transitive set system over the ground set `0..n`.
///
/// Implementations must be pure: repeated calls with the same arguments
/// return the same answer.
pub trait TransitiveSystem: Send + Sync {
    fn ground_size(&self) -> usize;

    /// The unique maximal component `Z` with `x ⊆ Z ⊆ within`, or `None`
    /// when no component lies between them. `x` is expected to be a
    /// component itself.
    fn maximal_containing(&self, x: &ElementSet, within: &ElementSet) -> Option<ElementSet>;

    /// All maximal components inside `within`, sorted canonically and
    /// without duplicates. Empty for an empty argument.
    fn maximal_components(&self, within: &ElementSet) -> Vec<ElementSet>;

    /// Upper bound on `maximal_components(within).len()`; non-increasing
    /// as `within` shrinks.
    fn size_hint(&self, within: &ElementSet) -> usize;
}

/// A monotone positivity test `ρ(X) > 0` used to prune the enumeration.
pub trait VolumeFunction: Send + Sync {
    fn eval_positive(&self, x: &ElementSet) -> bool;
}

/// `ρ ≡ 1`: every set is positive.
#[derive(Debug, Clone, Copy, Default)]
pub struct AlwaysPositive;

impl VolumeFunction for AlwaysPositive {
    fn eval_positive(&self, _x: &ElementSet) -> bool {
        true
    }
}

/// `ρ(X) = |X| - p`.
#[derive(Debug, Clone, Copy)]
pub struct SizeThreshold {
    pub p: i64,
}

impl SizeThreshold {
    /// Keeps sets with at least `min_size` elements.
    pub fn at_least(min_size: usize) -> Self {
        SizeThreshold {
            p: min_size as i64 - 1,
        }
    }
}

impl VolumeFunction for SizeThreshold {
    fn eval_positive(&self, x: &ElementSet) -> bool {
        x.len() as i64 - self.p > 0
    }
}

/// Positive iff every member is positive. Monotone when every member is.
pub struct AllOf(pub Vec<Arc<dyn VolumeFunction>>);

impl VolumeFunction for AllOf {
    fn eval_positive(&self, x: &ElementSet) -> bool {
        self.0.iter().all(|f| f.eval_positive(x))
    }
}

/// A ground set with an item assignment, a transitive system over it and an
/// optional volume function. Cheap to clone.
#[derive(Clone)]
pub struct Instance {
    n: usize,
    q: usize,
    sigma: Arc<[ItemSet]>,
    /// `by_item[i]` holds `V⟨i⟩`; `by_item[0]` is the whole ground set.
    by_item: Arc<[ElementSet]>,
    system: Arc<dyn TransitiveSystem>,
    volume: Option<Arc<dyn VolumeFunction>>,
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Instance")
            .field("n", &self.n)
            .field("q", &self.q)
            .field("sigma", &self.sigma)
            .finish_non_exhaustive()
    }
}

impl Instance {
    pub fn new(system: Arc<dyn TransitiveSystem>, q: usize, sigma: Vec<ItemSet>) -> Result<Self> {
        let n = system.ground_size();
        if n == 0 || q == 0 {
            return Err(Error::DegenerateInstance { n, q });
        }
        if sigma.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: sigma.len(),
            });
        }
        for s in &sigma {
            if s.q() != q {
                return Err(Error::Invalid(format!(
                    "item set sized for q = {} in an instance with q = {q}",
                    s.q()
                )));
            }
        }
        let mut by_item = Vec::with_capacity(q + 1);
        by_item.push(ElementSet::full(n));
        for i in 1..=q {
            by_item.push(ElementSet::from_indices(
                n,
                (0..n).filter(|&v| sigma[v].contains(i)),
            ));
        }
        Ok(Instance {
            n,
            q,
            sigma: sigma.into(),
            by_item: by_item.into(),
            system,
            volume: None,
        })
    }

    /// Convenience constructor from per-element item lists.
    pub fn from_item_lists(
        system: Arc<dyn TransitiveSystem>,
        q: usize,
        items: &[Vec<usize>],
    ) -> Result<Self> {
        let sigma = items
            .iter()
            .map(|list| ItemSet::from_items(q, list.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(system, q, sigma)
    }

    pub fn with_volume(mut self, volume: Arc<dyn VolumeFunction>) -> Self {
        self.volume = Some(volume);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn sigma(&self, v: usize) -> &ItemSet {
        &self.sigma[v]
    }

    pub fn system(&self) -> &dyn TransitiveSystem {
        self.system.as_ref()
    }

    pub fn volume(&self) -> Option<&dyn VolumeFunction> {
        self.volume.as_deref()
    }

    pub fn is_positive(&self, x: &ElementSet) -> bool {
        self.volume.as_ref().is_none_or(|f| f.eval_positive(x))
    }

    /// `V⟨i⟩` for a single item, with `V⟨0⟩ = V`.
    pub fn with_item(&self, i: usize) -> &ElementSet {
        &self.by_item[i]
    }

    /// `I_σ(X)`, the items shared by every element of `x`.
    pub fn common_items(&self, x: &ElementSet) -> Result<ItemSet> {
        let mut it = x.iter();
        let first = it.next().ok_or(Error::EmptySet)?;
        let mut acc = self.sigma[first].clone();
        for v in it {
            acc.intersect_with(&self.sigma[v]);
        }
        Ok(acc)
    }

    /// `V⟨J⟩ = {v : J ⊆ σ(v)}`; the empty item set yields the whole ground
    /// set.
    pub fn restrict_items(&self, items: &ItemSet) -> ElementSet {
        let mut acc = ElementSet::full(self.n);
        for i in items.iter() {
            acc.intersect_with(&self.by_item[i]);
        }
        acc
    }

    /// `C(X; Y)`: the unique maximal component between `x` and `y`.
    pub fn unique_max_component(&self, x: &ElementSet, y: &ElementSet) -> Result<Option<ElementSet>> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        if !x.is_subset(y) {
            return Err(Error::Invalid("X must be a subset of Y".into()));
        }
        Ok(self.system.maximal_containing(x, y))
    }
}
