//! Proximity under several simultaneous label constraints: exact exchange
//! window bounds, the power-of-two lower bound construction, block-sequence
//! window search, closest valid basis, weak base orderability, and uniform
//! minor extraction from sparse paving matroids.

use alloc::vec::Vec;

use crate::group::{AbelianGroup, GroupElem, GroupError};
use crate::labels::Labeling;
use crate::matroid::{Matroid, MatroidError};
use crate::ordering::{windows, Window};
use crate::set::{binom, subsets_lex, ElemSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultiError {
    BoundOutOfRange { k: usize },
    ConstructionOutOfRange { k: usize },
    LabelCount { got: usize, expected: usize },
    ValueNotInGroup,
    NotABasis(ElemSet),
    ElementOutOfRange { e: usize, n: usize },
    BaseConstraintViolated { t: usize },
    BlockLengthMismatch { xs: usize, ys: usize },
    EmptyBlock { index: usize },
    BlockNotInBase { index: usize },
    BlockMeetsBase { index: usize },
    BlocksOverlap { index: usize },
    ZeroParameter,
    SearchSpaceExceeded { spent: u64, cap: u64 },
    NotSparsePaving,
    GroundTooSmall { need: u64, have: usize },
    Matroid(MatroidError),
    Group(GroupError),
}

impl core::fmt::Display for MultiError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MultiError::BoundOutOfRange { k } => {
                write!(f, "window bound for {k} constraints exceeds the integer guard (max 12)")
            }
            MultiError::ConstructionOutOfRange { k } => {
                write!(f, "lower bound construction supports 1..=4 constraints, got {k}")
            }
            MultiError::LabelCount { got, expected } => {
                write!(f, "labeling covers {got} elements, matroid has {expected}")
            }
            MultiError::ValueNotInGroup => f.write_str("forbidden value outside the label group"),
            MultiError::NotABasis(s) => write!(f, "{s:?} is not a basis"),
            MultiError::ElementOutOfRange { e, n } => {
                write!(f, "element {e} outside ground set of size {n}")
            }
            MultiError::BaseConstraintViolated { t } => {
                write!(f, "base set already hits forbidden value of constraint {t}")
            }
            MultiError::BlockLengthMismatch { xs, ys } => {
                write!(f, "{xs} inside blocks vs {ys} outside blocks")
            }
            MultiError::EmptyBlock { index } => write!(f, "block {index} is empty"),
            MultiError::BlockNotInBase { index } => {
                write!(f, "inside block {index} leaves the base set")
            }
            MultiError::BlockMeetsBase { index } => {
                write!(f, "outside block {index} meets the base set")
            }
            MultiError::BlocksOverlap { index } => {
                write!(f, "block {index} overlaps an earlier block")
            }
            MultiError::ZeroParameter => f.write_str("parameters must be positive"),
            MultiError::SearchSpaceExceeded { spent, cap } => {
                write!(f, "block search space {spent} exceeds cap {cap}")
            }
            MultiError::NotSparsePaving => f.write_str("matroid is not sparse paving"),
            MultiError::GroundTooSmall { need, have } => {
                write!(f, "need min(rank, corank) >= {need}, have {have}")
            }
            MultiError::Matroid(e) => write!(f, "{e}"),
            MultiError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl From<MatroidError> for MultiError {
    fn from(e: MatroidError) -> MultiError {
        MultiError::Matroid(e)
    }
}

impl From<GroupError> for MultiError {
    fn from(e: GroupError) -> MultiError {
        MultiError::Group(e)
    }
}

/// One constraint: the label sum of the chosen basis must avoid a single
/// group value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelConstraint {
    psi: Labeling,
    f: GroupElem,
}

impl LabelConstraint {
    pub fn new(psi: Labeling, f: GroupElem) -> Result<LabelConstraint, MultiError> {
        if !psi.group().contains(&f) {
            return Err(MultiError::ValueNotInGroup);
        }
        Ok(LabelConstraint { psi, f })
    }

    pub fn psi(&self) -> &Labeling {
        &self.psi
    }

    pub fn forbidden(&self) -> &GroupElem {
        &self.f
    }

    pub fn satisfied_by(&self, x: ElemSet) -> Result<bool, GroupError> {
        Ok(self.psi.group_sum(x)? != self.f)
    }
}

/// A matroid with k label constraints over possibly different groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiLabelInstance {
    matroid: Matroid,
    constraints: Vec<LabelConstraint>,
}

impl MultiLabelInstance {
    pub fn new(
        matroid: Matroid,
        constraints: Vec<LabelConstraint>,
    ) -> Result<MultiLabelInstance, MultiError> {
        for c in &constraints {
            if c.psi.n() != matroid.n() {
                return Err(MultiError::LabelCount { got: c.psi.n(), expected: matroid.n() });
            }
        }
        Ok(MultiLabelInstance { matroid, constraints })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn constraints(&self) -> &[LabelConstraint] {
        &self.constraints
    }

    pub fn k(&self) -> usize {
        self.constraints.len()
    }

    /// All k constraints hold on x.
    pub fn satisfies(&self, x: ElemSet) -> Result<bool, GroupError> {
        for c in &self.constraints {
            if !c.satisfied_by(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Smallest block count guaranteeing a constraint-satisfying window under k
/// constraints: 1, 2, then sum_{i=0..k} k!/i! - k!/2. The true bound is
/// floor((e - 1/2) k!); the series equals it for k >= 2 because the dropped
/// tail sum_{i>k} k!/i! lies strictly between 0 and 1. Integer arithmetic
/// only, guarded against overflow above k = 12.
pub fn window_bound(k: usize) -> Result<usize, MultiError> {
    if k > 12 {
        return Err(MultiError::BoundOutOfRange { k });
    }
    if k < 2 {
        return Ok(k + 1);
    }
    let fact: u64 = (1..=k as u64).product();
    let mut sum = fact;
    let mut term = fact;
    for i in 1..=k as u64 {
        term /= i;
        sum += term;
    }
    Ok((sum - fact / 2) as usize)
}

/// The derived bounds for k constraints in one place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeBoundSpec {
    pub k: usize,
    pub window_bound: usize,
    pub proximity_bound: usize,
    pub lower_bound: u64,
}

pub fn exchange_bounds(k: usize) -> Result<ExchangeBoundSpec, MultiError> {
    let wb = window_bound(k)?;
    Ok(ExchangeBoundSpec {
        k,
        window_bound: wb,
        proximity_bound: wb - 1,
        lower_bound: (1u64 << k) - 1,
    })
}

/// The tight instance: U_{r,2r} with r = 2^k - 1, A the first r elements,
/// and k constraints forcing the complement of A to be the only valid basis.
/// Constraint i < k lives in Z_{2^i} (A elements carry 2^{i-1} - 1, the rest
/// 2^{i-1}); constraint k lives in Z (A elements carry 2^{k-1} - 1, the rest
/// -2^{k-1}). All forbidden values are 0.
pub fn lower_bound_instance(k: usize) -> Result<(MultiLabelInstance, ElemSet), MultiError> {
    // k = 4 would need U_{15,30} with 155 million explicit bases
    if !(1..=3).contains(&k) {
        return Err(MultiError::ConstructionOutOfRange { k });
    }
    let r = (1usize << k) - 1;
    let n = 2 * r;
    let m = Matroid::make_uniform(r, n)?;
    let a = ElemSet::full(r);
    let mut constraints = Vec::with_capacity(k);
    for i in 1..=k {
        let (group, on_a, off_a) = if i == k {
            let half = 1i64 << (k - 1);
            (AbelianGroup::Integers, GroupElem::Int(half - 1), GroupElem::Int(-half))
        } else {
            let half = 1u64 << (i - 1);
            (
                AbelianGroup::Cyclic(1 << i),
                GroupElem::Cyclic(half - 1),
                GroupElem::Cyclic(half),
            )
        };
        let values: Vec<GroupElem> = (0..n)
            .map(|e| if a.contains(e) { on_a.clone() } else { off_a.clone() })
            .collect();
        let zero = group.identity();
        let psi = Labeling::new(group, values)?;
        constraints.push(LabelConstraint::new(psi, zero)?);
    }
    Ok((MultiLabelInstance::new(m, constraints)?, a))
}

/// True iff b is a basis satisfying every constraint and no other basis
/// does. Full enumeration.
pub fn verify_unique_valid_basis(
    inst: &MultiLabelInstance,
    b: ElemSet,
) -> Result<bool, MultiError> {
    if !inst.matroid.is_basis(b) {
        return Ok(false);
    }
    for &basis in inst.matroid.bases() {
        let valid = inst.satisfies(basis)?;
        if (basis == b) != valid {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pairwise disjoint nonempty exchange blocks: xs inside the base set, ys
/// outside it. Window (i, j) removes blocks x_i..x_j and adds y_i..y_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSequence {
    base: ElemSet,
    xs: Vec<ElemSet>,
    ys: Vec<ElemSet>,
}

impl BlockSequence {
    pub fn new(
        base: ElemSet,
        xs: Vec<ElemSet>,
        ys: Vec<ElemSet>,
    ) -> Result<BlockSequence, MultiError> {
        if xs.len() != ys.len() {
            return Err(MultiError::BlockLengthMismatch { xs: xs.len(), ys: ys.len() });
        }
        let mut seen_x = ElemSet::EMPTY;
        let mut seen_y = ElemSet::EMPTY;
        for (index, (&x, &y)) in xs.iter().zip(ys.iter()).enumerate() {
            if x.is_empty() || y.is_empty() {
                return Err(MultiError::EmptyBlock { index });
            }
            if !x.is_subset_of(base) {
                return Err(MultiError::BlockNotInBase { index });
            }
            if !y.is_disjoint_from(base) {
                return Err(MultiError::BlockMeetsBase { index });
            }
            if !x.is_disjoint_from(seen_x) || !y.is_disjoint_from(seen_y) {
                return Err(MultiError::BlocksOverlap { index });
            }
            seen_x = seen_x.union(x);
            seen_y = seen_y.union(y);
        }
        Ok(BlockSequence { base, xs, ys })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn base(&self) -> ElemSet {
        self.base
    }

    pub fn xs(&self) -> &[ElemSet] {
        &self.xs
    }

    pub fn ys(&self) -> &[ElemSet] {
        &self.ys
    }

    /// (base minus x_i..x_j) plus y_i..y_j, windows 1-based.
    pub fn window_set(&self, w: Window) -> ElemSet {
        debug_assert!(1 <= w.i && w.i <= w.j && w.j <= self.len());
        let mut out = self.base;
        for s in w.i..=w.j {
            out = out.diff(self.xs[s - 1]).union(self.ys[s - 1]);
        }
        out
    }
}

/// Scans the windows in lexicographic (i, j) order for one satisfying every
/// constraint. The base set itself must satisfy them all; a window is
/// guaranteed to exist when the block count reaches window_bound(k).
pub fn find_window_multi(
    blocks: &BlockSequence,
    constraints: &[LabelConstraint],
) -> Result<Option<Window>, MultiError> {
    let mut span = blocks.base;
    for &y in &blocks.ys {
        span = span.union(y);
    }
    for (t, c) in constraints.iter().enumerate() {
        let room = ElemSet::full(c.psi.n());
        if !span.is_subset_of(room) {
            let e = span.diff(room).iter().next().unwrap_or(c.psi.n());
            return Err(MultiError::ElementOutOfRange { e, n: c.psi.n() });
        }
        if !c.satisfied_by(blocks.base)? {
            return Err(MultiError::BaseConstraintViolated { t });
        }
    }
    for w in windows(blocks.len()) {
        let s = blocks.window_set(w);
        let mut ok = true;
        for c in constraints {
            if !c.satisfied_by(s)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// The valid basis minimizing |A \ B|, with that distance. Ties go to the
/// first in stored basis order. None when no basis satisfies the
/// constraints.
pub fn closest_valid_basis(
    inst: &MultiLabelInstance,
    a: ElemSet,
) -> Result<Option<(ElemSet, usize)>, MultiError> {
    if !inst.matroid.is_basis(a) {
        return Err(MultiError::NotABasis(a));
    }
    let mut best: Option<(ElemSet, usize)> = None;
    for &b in inst.matroid.bases() {
        if !inst.satisfies(b)? {
            continue;
        }
        let d = a.diff(b).len();
        if best.as_ref().is_none_or(|&(_, bd)| d < bd) {
            best = Some((b, d));
            if d == 0 {
                break;
            }
        }
    }
    Ok(best)
}

/// How the closest valid basis compares against the 2^k - 1 distance bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PowerBoundVerdict {
    Satisfied { dist: usize, bound: u64 },
    Violated { dist: usize, bound: u64, witness: ElemSet },
    NoValidBasis,
}

pub fn check_power_of_two_bound(
    inst: &MultiLabelInstance,
    a: ElemSet,
) -> Result<PowerBoundVerdict, MultiError> {
    if inst.k() >= 64 {
        return Err(MultiError::BoundOutOfRange { k: inst.k() });
    }
    let bound = (1u64 << inst.k()) - 1;
    Ok(match closest_valid_basis(inst, a)? {
        None => PowerBoundVerdict::NoValidBasis,
        Some((b, dist)) => {
            if dist as u64 <= bound {
                PowerBoundVerdict::Satisfied { dist, bound }
            } else {
                PowerBoundVerdict::Violated { dist, bound, witness: b }
            }
        }
    })
}

const WEAK_SEARCH_CAP: u64 = 100_000_000;

/// Every ordered basis pair (A, B) with |A \ B| >= alpha must admit pairwise
/// disjoint nonempty X_1..X_k inside B \ A and Y_1..Y_k inside A \ B such
/// that removing the X blocks and adding the Y blocks of any combination of
/// indices keeps B a basis. Exhaustive search with a work cap.
pub fn is_weakly_base_orderable(
    m: &Matroid,
    alpha: usize,
    k: usize,
) -> Result<bool, MultiError> {
    if alpha == 0 || k == 0 {
        return Err(MultiError::ZeroParameter);
    }
    let mut spent: u64 = 0;
    for &a in m.bases() {
        for &b in m.bases() {
            let d = a.diff(b).len();
            if d < alpha {
                continue;
            }
            let per_side = (k as u64 + 1).pow(d as u32);
            spent = spent.saturating_add(per_side.saturating_mul(per_side));
            if spent > WEAK_SEARCH_CAP {
                return Err(MultiError::SearchSpaceExceeded { spent, cap: WEAK_SEARCH_CAP });
            }
            if !has_exchange_blocks(m, a, b, k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn has_exchange_blocks(m: &Matroid, a: ElemSet, b: ElemSet, k: usize) -> bool {
    let xs_pool = b.diff(a).to_vec();
    let ys_pool = a.diff(b).to_vec();
    let mut x_blocks = alloc::vec![ElemSet::EMPTY; k];
    let mut y_blocks = alloc::vec![ElemSet::EMPTY; k];
    assign_x(m, b, &xs_pool, &ys_pool, 0, &mut x_blocks, &mut y_blocks, k)
}

// label each pool element with 0 (unused) or a block index; X first, then Y
// constrained to matching block sizes, then all combined exchanges checked
#[allow(clippy::too_many_arguments)]
fn assign_x(
    m: &Matroid,
    b: ElemSet,
    xs_pool: &[usize],
    ys_pool: &[usize],
    pos: usize,
    x_blocks: &mut [ElemSet],
    y_blocks: &mut [ElemSet],
    k: usize,
) -> bool {
    if pos == xs_pool.len() {
        if x_blocks.iter().any(|x| x.is_empty()) {
            return false;
        }
        return assign_y(m, b, ys_pool, 0, x_blocks, y_blocks, k);
    }
    for t in 0..=k {
        if t > 0 {
            x_blocks[t - 1] = x_blocks[t - 1].insert(xs_pool[pos]);
        }
        if assign_x(m, b, xs_pool, ys_pool, pos + 1, x_blocks, y_blocks, k) {
            return true;
        }
        if t > 0 {
            x_blocks[t - 1] = x_blocks[t - 1].remove(xs_pool[pos]);
        }
    }
    false
}

fn assign_y(
    m: &Matroid,
    b: ElemSet,
    ys_pool: &[usize],
    pos: usize,
    x_blocks: &[ElemSet],
    y_blocks: &mut [ElemSet],
    k: usize,
) -> bool {
    if pos == ys_pool.len() {
        if y_blocks.iter().zip(x_blocks).any(|(y, x)| y.len() != x.len()) {
            return false;
        }
        // every nonempty index combination must stay a basis
        for z in 1u32..(1 << k) {
            let mut s = b;
            for t in 0..k {
                if z & (1 << t) != 0 {
                    s = s.diff(x_blocks[t]).union(y_blocks[t]);
                }
            }
            if !m.is_basis(s) {
                return false;
            }
        }
        return true;
    }
    for t in 0..=k {
        if t > 0 {
            if y_blocks[t - 1].len() >= x_blocks[t - 1].len() {
                continue;
            }
            y_blocks[t - 1] = y_blocks[t - 1].insert(ys_pool[pos]);
        }
        if assign_y(m, b, ys_pool, pos + 1, x_blocks, y_blocks, k) {
            return true;
        }
        if t > 0 {
            y_blocks[t - 1] = y_blocks[t - 1].remove(ys_pool[pos]);
        }
    }
    false
}

/// Follows the inductive two-phase construction: grow (X, Y) from (B, B) one
/// step at a time, at each step freeing the smallest safe y in Y (kept by
/// every non-basis inside X meeting the survivors in one extra element) and
/// then adjoining the smallest outside x avoiding every non-basis that
/// contains the contracted part and all but one survivor. Returns (X, Y)
/// with Y inside B inside X and (M|X)/Y uniform of rank k on 2k elements.
pub fn extract_uniform_minor(
    m: &Matroid,
    b: ElemSet,
    k: usize,
) -> Result<(ElemSet, ElemSet), MultiError> {
    if !m.is_sparse_paving() {
        return Err(MultiError::NotSparsePaving);
    }
    if !m.is_basis(b) {
        return Err(MultiError::NotABasis(b));
    }
    let r = m.rank();
    let n = m.n();
    let need = binom(2 * k, k);
    let have = r.min(n - r);
    if (have as u64) < need {
        return Err(MultiError::GroundTooSmall { need, have });
    }
    let ground = ElemSet::full(n);
    let non_bases: Vec<ElemSet> = subsets_lex(n, r).filter(|&s| !m.is_basis(s)).collect();

    let mut x = b;
    let mut y = b;
    for step in 1..=k {
        let survivors = x.diff(y);
        // non-bases inside X that would die when one more Y element is freed
        let mut keep = y;
        for h in &non_bases {
            if h.is_subset_of(x) && h.inter(survivors).len() == step {
                keep = keep.inter(*h);
            }
        }
        let freed = keep.iter().next().expect("counting bound leaves a free contracted element");
        y = y.remove(freed);

        let t = x.diff(y);
        let mut forbidden = ElemSet::EMPTY;
        for h in &non_bases {
            if y.is_subset_of(*h) && h.inter(t).len() == step - 1 {
                forbidden = forbidden.union(*h);
            }
        }
        let adjoin = ground
            .diff(x)
            .diff(forbidden)
            .iter()
            .next()
            .expect("counting bound leaves an admissible outside element");
        x = x.insert(adjoin);
    }
    Ok((x, y))
}

/// Independent check of the extracted minor: every k-subset of the 2k
/// surviving elements, together with the contracted part, is a basis.
pub fn uniform_minor_holds(m: &Matroid, b: ElemSet, k: usize, x: ElemSet, y: ElemSet) -> bool {
    if !(y.is_subset_of(b) && b.is_subset_of(x)) || x.diff(y).len() != 2 * k {
        return false;
    }
    let survivors = x.diff(y).to_vec();
    subsets_lex(survivors.len(), k).all(|local| {
        let z = ElemSet::from_iter(local.iter().map(|i| survivors[i]));
        m.is_basis(z.union(y))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_r10;
    use alloc::vec;

    #[test]
    fn window_bound_series() {
        assert_eq!(window_bound(0), Ok(1));
        assert_eq!(window_bound(1), Ok(2));
        assert_eq!(window_bound(2), Ok(4));
        assert_eq!(window_bound(3), Ok(13));
        assert_eq!(window_bound(13), Err(MultiError::BoundOutOfRange { k: 13 }));
        // cross-check against direct truncation of (e - 1/2) k!
        for k in 2..=10usize {
            let fact: u64 = (1..=k as u64).product();
            let float = (core::f64::consts::E - 0.5) * fact as f64;
            assert_eq!(window_bound(k).unwrap() as u64, float as u64, "k = {k}");
        }
    }

    #[test]
    fn bound_spec_fields() {
        let s = exchange_bounds(2).unwrap();
        assert_eq!((s.window_bound, s.proximity_bound, s.lower_bound), (4, 3, 3));
        let s = exchange_bounds(3).unwrap();
        assert_eq!((s.window_bound, s.proximity_bound, s.lower_bound), (13, 12, 7));
    }

    #[test]
    fn lower_bound_instance_smallest() {
        let (inst, a) = lower_bound_instance(1).unwrap();
        assert_eq!(inst.matroid().n(), 2);
        assert_eq!(inst.k(), 1);
        assert_eq!(a, ElemSet::from_iter([0]));
        let c = &inst.constraints()[0];
        assert_eq!(c.psi().group(), &AbelianGroup::Integers);
        assert_eq!(c.psi().values(), &[GroupElem::Int(0), GroupElem::Int(-1)]);
        assert_eq!(c.forbidden(), &GroupElem::Int(0));
        assert_eq!(verify_unique_valid_basis(&inst, ElemSet::from_iter([1])), Ok(true));
        assert_eq!(verify_unique_valid_basis(&inst, a), Ok(false));
    }

    #[test]
    fn lower_bound_instance_two_constraints() {
        let (inst, a) = lower_bound_instance(2).unwrap();
        assert_eq!(inst.matroid().n(), 6);
        assert_eq!(a, ElemSet::full(3));
        let c1 = &inst.constraints()[0];
        assert_eq!(c1.psi().group(), &AbelianGroup::Cyclic(2));
        assert_eq!(c1.psi().value(0), &GroupElem::Cyclic(0));
        assert_eq!(c1.psi().value(5), &GroupElem::Cyclic(1));
        let c2 = &inst.constraints()[1];
        assert_eq!(c2.psi().group(), &AbelianGroup::Integers);
        assert_eq!(c2.psi().value(0), &GroupElem::Int(1));
        assert_eq!(c2.psi().value(5), &GroupElem::Int(-2));
        let b = ElemSet::full(6).diff(a);
        assert_eq!(verify_unique_valid_basis(&inst, b), Ok(true));
        assert_eq!(lower_bound_instance(0), Err(MultiError::ConstructionOutOfRange { k: 0 }));
        assert_eq!(lower_bound_instance(4), Err(MultiError::ConstructionOutOfRange { k: 4 }));
    }

    #[test]
    fn unique_valid_rejects_non_basis() {
        let (inst, _) = lower_bound_instance(1).unwrap();
        assert_eq!(verify_unique_valid_basis(&inst, ElemSet::from_iter([0, 1])), Ok(false));
    }

    fn int_labeling(values: &[i64]) -> Labeling {
        Labeling::new(
            AbelianGroup::Integers,
            values.iter().map(|&v| GroupElem::Int(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn block_sequence_validation() {
        let base = ElemSet::from_iter([0, 1]);
        let x = vec![ElemSet::from_iter([0])];
        let y = vec![ElemSet::from_iter([2])];
        assert!(BlockSequence::new(base, x.clone(), y.clone()).is_ok());
        assert_eq!(
            BlockSequence::new(base, x.clone(), vec![]),
            Err(MultiError::BlockLengthMismatch { xs: 1, ys: 0 })
        );
        assert_eq!(
            BlockSequence::new(base, vec![ElemSet::EMPTY], y.clone()),
            Err(MultiError::EmptyBlock { index: 0 })
        );
        assert_eq!(
            BlockSequence::new(base, vec![ElemSet::from_iter([2])], y.clone()),
            Err(MultiError::BlockNotInBase { index: 0 })
        );
        assert_eq!(
            BlockSequence::new(base, x.clone(), vec![ElemSet::from_iter([1])]),
            Err(MultiError::BlockMeetsBase { index: 0 })
        );
        assert_eq!(
            BlockSequence::new(
                base,
                vec![ElemSet::from_iter([0]), ElemSet::from_iter([0])],
                vec![ElemSet::from_iter([2]), ElemSet::from_iter([3])]
            ),
            Err(MultiError::BlocksOverlap { index: 1 })
        );
    }

    #[test]
    fn window_sets_compose() {
        let blocks = BlockSequence::new(
            ElemSet::from_iter([0, 1, 2]),
            vec![ElemSet::from_iter([0]), ElemSet::from_iter([1])],
            vec![ElemSet::from_iter([3]), ElemSet::from_iter([4])],
        )
        .unwrap();
        assert_eq!(blocks.window_set(Window::new(1, 2)), ElemSet::from_iter([2, 3, 4]));
        assert_eq!(blocks.window_set(Window::new(2, 2)), ElemSet::from_iter([0, 2, 4]));
    }

    #[test]
    fn window_search_no_constraints() {
        let blocks = BlockSequence::new(
            ElemSet::from_iter([0]),
            vec![ElemSet::from_iter([0])],
            vec![ElemSet::from_iter([1])],
        )
        .unwrap();
        assert_eq!(find_window_multi(&blocks, &[]), Ok(Some(Window::new(1, 1))));
    }

    #[test]
    fn window_search_skips_first_slot() {
        // labels 1, 0 on the base and 0, 0 outside: window (1,1) sums to
        // zero, (1,2) too, so the scan lands on (2,2)
        let psi = int_labeling(&[1, 0, 0, 0]);
        let c = LabelConstraint::new(psi, GroupElem::Int(0)).unwrap();
        let blocks = BlockSequence::new(
            ElemSet::from_iter([0, 1]),
            vec![ElemSet::from_iter([0]), ElemSet::from_iter([1])],
            vec![ElemSet::from_iter([2]), ElemSet::from_iter([3])],
        )
        .unwrap();
        assert_eq!(find_window_multi(&blocks, &[c]), Ok(Some(Window::new(2, 2))));
    }

    #[test]
    fn window_search_precondition() {
        let psi = int_labeling(&[0, 0, 0, 0]);
        let c = LabelConstraint::new(psi, GroupElem::Int(0)).unwrap();
        let blocks = BlockSequence::new(
            ElemSet::from_iter([0, 1]),
            vec![ElemSet::from_iter([0])],
            vec![ElemSet::from_iter([2])],
        )
        .unwrap();
        assert_eq!(
            find_window_multi(&blocks, &[c]),
            Err(MultiError::BaseConstraintViolated { t: 0 })
        );
    }

    #[test]
    fn window_search_checks_coverage() {
        let psi = int_labeling(&[1, 1]);
        let c = LabelConstraint::new(psi, GroupElem::Int(0)).unwrap();
        let blocks = BlockSequence::new(
            ElemSet::from_iter([0, 1]),
            vec![ElemSet::from_iter([0])],
            vec![ElemSet::from_iter([2])],
        )
        .unwrap();
        assert_eq!(find_window_multi(&blocks, &[c]), Err(MultiError::ElementOutOfRange { e: 2, n: 2 }));
    }

    #[test]
    fn telescoping_window_values() {
        // psi(B_{i,j}) = psi(B) + sum over the span of psi(Y_s) - psi(X_s)
        let psi = int_labeling(&[3, -1, 4, 2, 7, -5]);
        let blocks = BlockSequence::new(
            ElemSet::from_iter([0, 1, 2]),
            vec![ElemSet::from_iter([0]), ElemSet::from_iter([1, 2])],
            vec![ElemSet::from_iter([3, 4]), ElemSet::from_iter([5])],
        )
        .unwrap();
        let base_sum = psi.group_sum(blocks.base()).unwrap();
        for w in windows(blocks.len()) {
            let mut expect = base_sum.clone();
            for s in w.i..=w.j {
                let gain = psi.group_sum(blocks.ys()[s - 1]).unwrap();
                let loss = psi.group_sum(blocks.xs()[s - 1]).unwrap();
                expect = AbelianGroup::Integers.add(&expect, &gain).unwrap();
                expect = AbelianGroup::Integers.sub(&expect, &loss).unwrap();
            }
            assert_eq!(psi.group_sum(blocks.window_set(w)).unwrap(), expect);
        }
    }

    #[test]
    fn closest_basis_distances() {
        let (inst, a) = lower_bound_instance(2).unwrap();
        let (b, d) = closest_valid_basis(&inst, a).unwrap().unwrap();
        assert_eq!(d, 3);
        assert_eq!(b, ElemSet::full(6).diff(a));

        // the valid basis itself is at distance zero
        let (b2, d2) = closest_valid_basis(&inst, b).unwrap().unwrap();
        assert_eq!((b2, d2), (b, 0));

        assert_eq!(
            closest_valid_basis(&inst, ElemSet::from_iter([0])),
            Err(MultiError::NotABasis(ElemSet::from_iter([0])))
        );
    }

    #[test]
    fn closest_basis_none_when_all_invalid() {
        let m = Matroid::make_uniform(1, 2).unwrap();
        let psi = int_labeling(&[0, 0]);
        let c = LabelConstraint::new(psi, GroupElem::Int(0)).unwrap();
        let inst = MultiLabelInstance::new(m, vec![c]).unwrap();
        assert_eq!(closest_valid_basis(&inst, ElemSet::from_iter([0])), Ok(None));
    }

    #[test]
    fn power_bound_verdicts() {
        for k in 1..=2 {
            let (inst, a) = lower_bound_instance(k).unwrap();
            match check_power_of_two_bound(&inst, a).unwrap() {
                PowerBoundVerdict::Satisfied { dist, bound } => {
                    assert_eq!(dist as u64, bound);
                    assert_eq!(bound, (1 << k) - 1);
                }
                other => panic!("expected satisfied, got {other:?}"),
            }
        }
        let m = Matroid::make_uniform(1, 2).unwrap();
        let psi = int_labeling(&[0, 0]);
        let c = LabelConstraint::new(psi, GroupElem::Int(0)).unwrap();
        let inst = MultiLabelInstance::new(m, vec![c]).unwrap();
        assert_eq!(
            check_power_of_two_bound(&inst, ElemSet::from_iter([0])),
            Ok(PowerBoundVerdict::NoValidBasis)
        );
    }

    #[test]
    fn instance_validation() {
        let m = Matroid::make_uniform(1, 2).unwrap();
        let psi = int_labeling(&[0, 0, 0]);
        let c = LabelConstraint::new(psi, GroupElem::Int(0)).unwrap();
        assert_eq!(
            MultiLabelInstance::new(m, vec![c]),
            Err(MultiError::LabelCount { got: 3, expected: 2 })
        );
        let bad = LabelConstraint::new(
            int_labeling(&[0, 0]),
            GroupElem::Cyclic(1),
        );
        assert_eq!(bad, Err(MultiError::ValueNotInGroup));
    }

    #[test]
    fn weak_orderability_uniform() {
        let m = Matroid::make_uniform(2, 4).unwrap();
        assert_eq!(is_weakly_base_orderable(&m, 1, 1), Ok(true));
        assert_eq!(is_weakly_base_orderable(&m, 2, 2), Ok(true));
        assert_eq!(is_weakly_base_orderable(&m, 0, 1), Err(MultiError::ZeroParameter));
        assert_eq!(is_weakly_base_orderable(&m, 1, 0), Err(MultiError::ZeroParameter));
    }

    #[test]
    fn weak_orderability_r10() {
        // verdict established by an independent direct subset enumeration;
        // only the 72 disjoint ordered pairs qualify at alpha = 5
        let r10 = make_r10();
        assert_eq!(is_weakly_base_orderable(&r10, 5, 2), Ok(true));
    }

    #[test]
    fn weak_orderability_work_cap() {
        // every qualifying pair search succeeds here, but the a-priori
        // estimate crosses the cap long before the scan completes
        let m = Matroid::make_uniform(6, 12).unwrap();
        assert!(matches!(
            is_weakly_base_orderable(&m, 2, 2),
            Err(MultiError::SearchSpaceExceeded { .. })
        ));
    }

    #[test]
    fn weak_orderability_needs_room() {
        // rank 1: a single swap is the only exchange, so two block pairs
        // cannot both be nonempty
        let m = Matroid::make_uniform(1, 2).unwrap();
        assert_eq!(is_weakly_base_orderable(&m, 1, 2), Ok(false));
    }

    #[test]
    fn minor_extraction_trivial_cases() {
        let m = Matroid::make_uniform(2, 4).unwrap();
        let b = ElemSet::from_iter([0, 1]);
        assert_eq!(extract_uniform_minor(&m, b, 0), Ok((b, b)));
        let (x, y) = extract_uniform_minor(&m, b, 1).unwrap();
        assert_eq!((x, y), (ElemSet::from_iter([0, 1, 2]), ElemSet::from_iter([1])));
        assert!(uniform_minor_holds(&m, b, 1, x, y));
    }

    #[test]
    fn minor_extraction_preconditions() {
        let r10 = make_r10();
        assert_eq!(
            extract_uniform_minor(&r10, ElemSet::from_iter([0, 3, 4, 7, 9]), 1),
            Err(MultiError::NotSparsePaving)
        );
        let m = Matroid::make_uniform(2, 4).unwrap();
        assert_eq!(
            extract_uniform_minor(&m, ElemSet::from_iter([0, 2]), 2),
            Err(MultiError::GroundTooSmall { need: 6, have: 2 })
        );
        assert_eq!(
            extract_uniform_minor(&m, ElemSet::from_iter([0]), 1),
            Err(MultiError::NotABasis(ElemSet::from_iter([0])))
        );
    }

    #[test]
    fn minor_extraction_avoids_non_bases() {
        // sparse paving: two disjoint non-bases on 12 elements, rank 6
        let non1 = ElemSet::full(6);
        let non2 = ElemSet::full(12).diff(non1);
        let bases: Vec<ElemSet> =
            subsets_lex(12, 6).filter(|&s| s != non1 && s != non2).collect();
        let m = Matroid::from_bases(12, bases).unwrap();
        assert!(m.is_sparse_paving());
        let b = ElemSet::from_iter([0, 1, 2, 3, 4, 6]);
        let (x, y) = extract_uniform_minor(&m, b, 2).unwrap();
        assert!(uniform_minor_holds(&m, b, 2, x, y));
        let (mm, _) = m.minor(x, y).unwrap();
        assert_eq!(mm.n(), 4);
        assert_eq!(mm.rank(), 2);
        assert_eq!(mm.bases().len(), 6);
    }

    #[test]
    fn minor_verifier_rejects_bad_shapes() {
        let m = Matroid::make_uniform(2, 4).unwrap();
        let b = ElemSet::from_iter([0, 1]);
        // wrong survivor count
        assert!(!uniform_minor_holds(&m, b, 1, ElemSet::full(4), ElemSet::from_iter([1])));
        // contracted part not inside the basis
        assert!(!uniform_minor_holds(
            &m,
            b,
            1,
            ElemSet::from_iter([0, 1, 2]),
            ElemSet::from_iter([2])
        ));
    }
}
