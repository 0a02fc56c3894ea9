//! Labelings of ground-set elements by group values, forbidden label sets,
//! and partitions into label or color classes.

use alloc::vec::Vec;

use crate::group::{AbelianGroup, GroupElem, GroupError};
use crate::set::ElemSet;

/// psi: E -> Gamma, one value per element id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    group: AbelianGroup,
    values: Vec<GroupElem>,
}

impl Labeling {
    pub fn new(group: AbelianGroup, values: Vec<GroupElem>) -> Result<Labeling, GroupError> {
        if !values.iter().all(|v| group.contains(v)) {
            return Err(GroupError::NotInGroup);
        }
        Ok(Labeling { group, values })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, e: usize) -> &GroupElem {
        &self.values[e]
    }

    pub fn values(&self) -> &[GroupElem] {
        &self.values
    }

    /// psi(X) = sum of labels over X; the identity for empty X.
    pub fn group_sum(&self, x: ElemSet) -> Result<GroupElem, GroupError> {
        debug_assert!(x.is_subset_of(ElemSet::full(self.values.len())));
        let mut acc = self.group.identity();
        for e in x.iter() {
            acc = self.group.add(&acc, &self.values[e])?;
        }
        Ok(acc)
    }

    /// Partition of the ground set into label classes (fibers of psi), blocks
    /// ordered by first occurrence.
    pub fn label_classes(&self) -> Partition {
        let mut seen: Vec<(&GroupElem, ElemSet)> = Vec::new();
        for (e, v) in self.values.iter().enumerate() {
            match seen.iter_mut().find(|(g, _)| *g == v) {
                Some((_, block)) => *block = block.insert(e),
                None => seen.push((v, ElemSet::singleton(e))),
            }
        }
        Partition { n: self.values.len(), blocks: seen.into_iter().map(|(_, b)| b).collect() }
    }
}

/// Finite set of forbidden labels, deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenSet {
    group: AbelianGroup,
    elements: Vec<GroupElem>,
}

impl ForbiddenSet {
    pub fn new(group: AbelianGroup, elements: Vec<GroupElem>) -> Result<ForbiddenSet, GroupError> {
        if !elements.iter().all(|v| group.contains(v)) {
            return Err(GroupError::NotInGroup);
        }
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        Ok(ForbiddenSet { group, elements })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// The shifted set F - g, used when contractions absorb part of a sum.
    pub fn shifted(&self, g: &GroupElem) -> Result<ForbiddenSet, GroupError> {
        let mut out = Vec::with_capacity(self.elements.len());
        for f in &self.elements {
            out.push(self.group.sub(f, g)?);
        }
        ForbiddenSet::new(self.group.clone(), out)
    }
}

/// True iff psi(X) avoids every forbidden label.
pub fn is_f_avoiding(psi: &Labeling, f: &ForbiddenSet, x: ElemSet) -> Result<bool, GroupError> {
    if psi.group() != f.group() {
        return Err(GroupError::NotInGroup);
    }
    Ok(!f.contains(&psi.group_sum(x)?))
}

/// Partition of 0..n into disjoint nonempty blocks covering everything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    blocks: Vec<ElemSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    EmptyBlock,
    NotDisjoint,
    NotCovering,
}

impl core::fmt::Display for PartitionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PartitionError::EmptyBlock => f.write_str("partition block is empty"),
            PartitionError::NotDisjoint => f.write_str("partition blocks overlap"),
            PartitionError::NotCovering => f.write_str("partition blocks do not cover 0..n"),
        }
    }
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<ElemSet>) -> Result<Partition, PartitionError> {
        let mut seen = ElemSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            if !seen.is_disjoint_from(b) {
                return Err(PartitionError::NotDisjoint);
            }
            seen = seen.union(b);
        }
        if seen != ElemSet::full(n) {
            return Err(PartitionError::NotCovering);
        }
        Ok(Partition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }

    /// Index of the block containing e.
    pub fn block_of(&self, e: usize) -> usize {
        debug_assert!(e < self.n);
        self.blocks.iter().position(|b| b.contains(e)).expect("blocks cover 0..n")
    }

    /// Number of distinct blocks meeting X.
    pub fn blocks_meeting(&self, x: ElemSet) -> usize {
        self.blocks.iter().filter(|b| !b.is_disjoint_from(x)).count()
    }

    /// True iff X is a union of blocks: every block is inside X or disjoint
    /// from it.
    pub fn is_union_of_blocks(&self, x: ElemSet) -> bool {
        debug_assert!(x.is_subset_of(ElemSet::full(self.n)));
        self.blocks.iter().all(|&b| b.is_subset_of(x) || b.is_disjoint_from(x))
    }
}
