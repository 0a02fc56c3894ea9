//! Seeded instance generators for property suites and the command line:
//! sparse paving matroids, group labelings, forbidden sets, and the shaped
//! inputs the window lemmas expect. Everything is a pure function of the
//! supplied generator state, so a seed pins the whole corpus.

use alloc::vec::Vec;

use crate::group::{AbelianGroup, GroupElem};
use crate::labels::{ForbiddenSet, Labeling, Partition};
use crate::matroid::{Matroid, MatroidError};
use crate::multilabel::{BlockSequence, LabelConstraint, MultiError};
use crate::ordering::{OrderingPair, OrderingError};
use crate::rng::Rng;
use crate::set::{subsets_lex, ElemSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    RankOutOfRange { r: usize, n: usize },
    GroundTooLarge { n: usize },
    GroupTooSmall { need: usize },
    SamplingStalled,
    Matroid(MatroidError),
    Ordering(OrderingError),
    Multi(MultiError),
}

impl core::fmt::Display for GenError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GenError::RankOutOfRange { r, n } => {
                write!(f, "rank {r} out of range for ground set of size {n}")
            }
            GenError::GroundTooLarge { n } => {
                write!(f, "ground set of size {n} exceeds the generator guard")
            }
            GenError::GroupTooSmall { need } => {
                write!(f, "group has fewer than {need} usable values")
            }
            GenError::SamplingStalled => f.write_str("rejection sampling made no progress"),
            GenError::Matroid(e) => write!(f, "{e}"),
            GenError::Ordering(e) => write!(f, "{e}"),
            GenError::Multi(e) => write!(f, "{e}"),
        }
    }
}

impl From<MatroidError> for GenError {
    fn from(e: MatroidError) -> GenError {
        GenError::Matroid(e)
    }
}

impl From<OrderingError> for GenError {
    fn from(e: OrderingError) -> GenError {
        GenError::Ordering(e)
    }
}

impl From<MultiError> for GenError {
    fn from(e: MultiError) -> GenError {
        GenError::Multi(e)
    }
}

const GROUND_CAP: usize = 16;
const RETRY_CAP: usize = 1000;

/// Random sparse paving matroid: a shuffled greedy stable set in the
/// Johnson graph becomes the non-basis family. A random target keeps the
/// density varied; everything else stays a basis. The result always passes
/// the exchange check because two distinct near-identical swaps of the same
/// set cannot both be non-bases.
pub fn random_sparse_paving(rng: &mut Rng, r: usize, n: usize) -> Result<Matroid, GenError> {
    if r == 0 || r >= n {
        return Err(GenError::RankOutOfRange { r, n });
    }
    if n > GROUND_CAP {
        return Err(GenError::GroundTooLarge { n });
    }
    let mut all: Vec<ElemSet> = subsets_lex(n, r).collect();
    rng.shuffle(&mut all);
    let target = rng.below_usize(all.len());
    let mut non_bases: Vec<ElemSet> = Vec::new();
    for &cand in &all {
        if non_bases.len() >= target {
            break;
        }
        if non_bases.iter().all(|&nb| nb.inter(cand).len() + 2 <= r) {
            non_bases.push(cand);
        }
    }
    let bases: Vec<ElemSet> =
        all.iter().copied().filter(|s| !non_bases.contains(s)).collect();
    debug_assert!(!bases.is_empty());
    Ok(Matroid::from_bases(n, bases)?)
}

/// Uniformly random basis of m.
pub fn random_basis(rng: &mut Rng, m: &Matroid) -> ElemSet {
    m.bases()[rng.below_usize(m.bases().len())]
}

/// Random permutation of 0..n.
pub fn random_permutation(rng: &mut Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut p);
    p
}

/// Cyclic group of random order in lo..=hi.
pub fn random_cyclic_group(rng: &mut Rng, lo: u64, hi: u64) -> AbelianGroup {
    debug_assert!(2 <= lo && lo <= hi);
    AbelianGroup::Cyclic(lo + rng.below(hi - lo + 1))
}

/// One of the groups the harnesses cover: a cyclic group of order 2..=8,
/// the integers, or a product of two small cyclic groups.
pub fn random_group(rng: &mut Rng) -> AbelianGroup {
    match rng.below(4) {
        0 | 1 => random_cyclic_group(rng, 2, 8),
        2 => AbelianGroup::Integers,
        _ => AbelianGroup::Product(alloc::vec![
            random_cyclic_group(rng, 2, 4),
            random_cyclic_group(rng, 2, 4),
        ]),
    }
}

/// Integer labels stay in a small window so sums never overflow at desk
/// scale.
const INT_LABEL_SPAN: i64 = 4;

pub fn random_group_elem(rng: &mut Rng, group: &AbelianGroup) -> GroupElem {
    match group {
        AbelianGroup::Cyclic(m) => GroupElem::Cyclic(rng.below(*m)),
        AbelianGroup::Integers => {
            GroupElem::Int(rng.below(2 * INT_LABEL_SPAN as u64 + 1) as i64 - INT_LABEL_SPAN)
        }
        AbelianGroup::Product(fs) => {
            GroupElem::Tuple(fs.iter().map(|g| random_group_elem(rng, g)).collect())
        }
    }
}

pub fn random_labeling(rng: &mut Rng, group: &AbelianGroup, n: usize) -> Labeling {
    let values = (0..n).map(|_| random_group_elem(rng, group)).collect();
    Labeling::new(group.clone(), values).expect("sampled values lie in the group")
}

/// Number of distinct values random_group_elem can produce.
fn sample_space(group: &AbelianGroup) -> u64 {
    match group {
        AbelianGroup::Cyclic(m) => *m,
        AbelianGroup::Integers => 2 * INT_LABEL_SPAN as u64 + 1,
        AbelianGroup::Product(fs) => fs.iter().map(sample_space).product(),
    }
}

/// size distinct forbidden values, optionally avoiding one value (so a
/// designated sum stays legal).
pub fn random_forbidden_set(
    rng: &mut Rng,
    group: &AbelianGroup,
    size: usize,
    avoid: Option<&GroupElem>,
) -> Result<ForbiddenSet, GenError> {
    let reserved = avoid.is_some() as u64;
    if sample_space(group) < size as u64 + reserved {
        return Err(GenError::GroupTooSmall { need: size + reserved as usize });
    }
    let mut vals: Vec<GroupElem> = Vec::with_capacity(size);
    let mut attempts = 0;
    while vals.len() < size {
        attempts += 1;
        if attempts > RETRY_CAP {
            return Err(GenError::SamplingStalled);
        }
        let v = random_group_elem(rng, group);
        if avoid == Some(&v) || vals.contains(&v) {
            continue;
        }
        vals.push(v);
    }
    Ok(ForbiddenSet::new(group.clone(), vals).expect("sampled values lie in the group"))
}

/// Shaped input for the prefix-pigeonhole window lemma: disjoint ordered
/// r-tuples on 2r elements, a labeling, and a forbidden set of size r - 1
/// containing the a-side sum but not the b-side sum.
pub fn pigeonhole_instance(
    rng: &mut Rng,
    r: usize,
    group: &AbelianGroup,
) -> Result<(OrderingPair, Labeling, ForbiddenSet), GenError> {
    if r < 2 {
        return Err(GenError::RankOutOfRange { r, n: 2 * r });
    }
    // the forbidden set holds psi(A) plus r - 2 other non-psi(B) values
    if sample_space(group) < r as u64 {
        return Err(GenError::GroupTooSmall { need: r });
    }
    let n = 2 * r;
    for _ in 0..RETRY_CAP {
        let split = random_permutation(rng, n);
        let pair = OrderingPair::new(split[..r].to_vec(), split[r..].to_vec())?;
        let psi = random_labeling(rng, group, n);
        let sum_a = psi.group_sum(pair.a_set()).expect("small sums stay in range");
        let sum_b = psi.group_sum(pair.b_set()).expect("small sums stay in range");
        if sum_a == sum_b {
            continue;
        }
        let mut vals = alloc::vec![sum_a.clone()];
        let mut attempts = 0;
        while vals.len() < r - 1 {
            attempts += 1;
            if attempts > RETRY_CAP {
                break;
            }
            let v = random_group_elem(rng, group);
            if v == sum_b || vals.contains(&v) {
                continue;
            }
            vals.push(v);
        }
        if vals.len() < r - 1 {
            continue;
        }
        let f = ForbiddenSet::new(group.clone(), vals).expect("sampled values lie in the group");
        return Ok((pair, psi, f));
    }
    Err(GenError::SamplingStalled)
}

/// Shaped input for the coloring ordering: disjoint r-sets covering 0..2r
/// and a partition whose block counts on the two sides total at most r + 1.
/// Both sides meet at least one block, so ca ranges over 1..=r and cb over
/// 1..=min(r, r + 1 - ca).
pub fn coloring_instance(
    rng: &mut Rng,
    r: usize,
) -> Result<(ElemSet, ElemSet, Partition), GenError> {
    if r == 0 || 2 * r > GROUND_CAP * 4 {
        return Err(GenError::RankOutOfRange { r, n: 2 * r });
    }
    let n = 2 * r;
    let split = random_permutation(rng, n);
    let (a_ids, b_ids) = split.split_at(r);
    let ca = 1 + rng.below_usize(r);
    let cb = 1 + rng.below_usize(r.min(r + 1 - ca));
    let mut blocks = alloc::vec![ElemSet::EMPTY; ca + cb];
    for (side, ids, lo, count) in [(0, a_ids, 0, ca), (1, b_ids, ca, cb)] {
        let _ = side;
        let mut order: Vec<usize> = ids.to_vec();
        rng.shuffle(&mut order);
        for (i, &e) in order.iter().enumerate() {
            // first `count` elements seed the blocks so none is empty
            let idx = if i < count { lo + i } else { lo + rng.below_usize(count) };
            blocks[idx] = blocks[idx].insert(e);
        }
    }
    let part = Partition::new(n, blocks).expect("seeded blocks cover both sides");
    let a = ElemSet::from_iter(a_ids.iter().copied());
    let b = ElemSet::from_iter(b_ids.iter().copied());
    Ok((a, b, part))
}

/// Shaped input for the multi-constraint window search: a block sequence of
/// length ell with blocks of size 1 or 2, and one constraint per group
/// whose forbidden value differs from the base sum.
pub fn random_block_instance(
    rng: &mut Rng,
    ell: usize,
    groups: &[AbelianGroup],
) -> Result<(BlockSequence, Vec<LabelConstraint>), GenError> {
    if ell == 0 {
        return Err(GenError::RankOutOfRange { r: ell, n: 0 });
    }
    for g in groups {
        if sample_space(g) < 2 {
            return Err(GenError::GroupTooSmall { need: 2 });
        }
    }
    let mut xs = Vec::with_capacity(ell);
    let mut ys = Vec::with_capacity(ell);
    let mut next = 0usize;
    for _ in 0..ell {
        let sz = 1 + rng.below_usize(2);
        xs.push(ElemSet::from_iter(next..next + sz));
        next += sz;
    }
    let base_pad = rng.below_usize(3);
    let base = ElemSet::full(next + base_pad);
    let mut outside = next + base_pad;
    for _ in 0..ell {
        let sz = 1 + rng.below_usize(2);
        ys.push(ElemSet::from_iter(outside..outside + sz));
        outside += sz;
    }
    let blocks = BlockSequence::new(base, xs, ys)?;
    let mut constraints = Vec::with_capacity(groups.len());
    for g in groups {
        let mut attempts = 0;
        loop {
            attempts += 1;
            if attempts > RETRY_CAP {
                return Err(GenError::SamplingStalled);
            }
            let psi = random_labeling(rng, g, outside);
            let sum = psi.group_sum(base).expect("small sums stay in range");
            let f = random_group_elem(rng, g);
            if f == sum {
                continue;
            }
            constraints.push(LabelConstraint::new(psi, f)?);
            break;
        }
    }
    Ok((blocks, constraints))
}
