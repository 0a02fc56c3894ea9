//! F-avoiding basis search, proximity radii, and the constructive lemmas
//! behind the proximity conjecture: pigeonhole windows, reduced
//! counterexample form, and coloring orderings.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::group::GroupError;
use crate::labels::{ForbiddenSet, Labeling, Partition};
use crate::matroid::{Matroid, MatroidError};
use crate::ordering::{window_set, windows, OrderingError, OrderingPair, Window};
use crate::set::ElemSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProximityError {
    LabelCount { got: usize, expected: usize },
    GroupMismatch,
    NotABasis(ElemSet),
    ElementOutOfRange { e: usize, n: usize },
    LengthNotForbiddenPlusOne { r: usize, forbidden: usize },
    StartNotAvoiding,
    NoProperWindow,
    NotSparsePaving,
    WrongSize { got: usize, expected: usize },
    SumForbidden,
    EqualsBasis,
    TooManyBlocks { a_blocks: usize, b_blocks: usize, r: usize },
    Ordering(OrderingError),
    Matroid(MatroidError),
    Group(GroupError),
}

impl fmt::Display for ProximityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProximityError::LabelCount { got, expected } => {
                write!(f, "labeling covers {got} elements, matroid ground has {expected}")
            }
            ProximityError::GroupMismatch => write!(f, "labeling and forbidden set use different groups"),
            ProximityError::NotABasis(s) => write!(f, "{s:?} is not a basis"),
            ProximityError::ElementOutOfRange { e, n } => {
                write!(f, "element {e} outside ground of size {n}")
            }
            ProximityError::LengthNotForbiddenPlusOne { r, forbidden } => {
                write!(f, "ordering length {r} differs from forbidden count {forbidden} plus one")
            }
            ProximityError::StartNotAvoiding => write!(f, "the b-side sum is forbidden"),
            ProximityError::NoProperWindow => {
                write!(f, "every window other than the full one has a forbidden sum")
            }
            ProximityError::NotSparsePaving => write!(f, "matroid is not sparse paving"),
            ProximityError::WrongSize { got, expected } => {
                write!(f, "set has {got} elements, expected {expected}")
            }
            ProximityError::SumForbidden => write!(f, "the set sum is forbidden"),
            ProximityError::EqualsBasis => write!(f, "set coincides with the reference basis"),
            ProximityError::TooManyBlocks { a_blocks, b_blocks, r } => {
                write!(f, "{a_blocks}+{b_blocks} blocks exceed {r}+1")
            }
            ProximityError::Ordering(e) => write!(f, "{e}"),
            ProximityError::Matroid(e) => write!(f, "{e}"),
            ProximityError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroupError> for ProximityError {
    fn from(e: GroupError) -> ProximityError {
        ProximityError::Group(e)
    }
}

impl From<OrderingError> for ProximityError {
    fn from(e: OrderingError) -> ProximityError {
        ProximityError::Ordering(e)
    }
}

impl From<MatroidError> for ProximityError {
    fn from(e: MatroidError) -> ProximityError {
        ProximityError::Matroid(e)
    }
}

/// A matroid together with a labeling of its ground set and a forbidden
/// label set.
#[derive(Clone, Debug)]
pub struct LabeledInstance {
    matroid: Matroid,
    psi: Labeling,
    forbidden: ForbiddenSet,
}

impl LabeledInstance {
    pub fn new(
        matroid: Matroid,
        psi: Labeling,
        forbidden: ForbiddenSet,
    ) -> Result<LabeledInstance, ProximityError> {
        if psi.n() != matroid.n() {
            return Err(ProximityError::LabelCount { got: psi.n(), expected: matroid.n() });
        }
        if psi.group() != forbidden.group() {
            return Err(ProximityError::GroupMismatch);
        }
        Ok(LabeledInstance { matroid, psi, forbidden })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn psi(&self) -> &Labeling {
        &self.psi
    }

    pub fn forbidden(&self) -> &ForbiddenSet {
        &self.forbidden
    }

    pub fn is_avoiding(&self, x: ElemSet) -> Result<bool, GroupError> {
        Ok(!self.forbidden.contains(&self.psi.group_sum(x)?))
    }

    /// One flag per basis, in the matroid's basis order.
    pub fn avoiding_flags(&self) -> Result<Vec<bool>, GroupError> {
        self.matroid.bases().iter().map(|&b| self.is_avoiding(b)).collect()
    }
}

/// Lexicographically smallest basis whose sum avoids the forbidden set.
pub fn find_avoiding_basis(inst: &LabeledInstance) -> Result<Option<ElemSet>, GroupError> {
    if inst.forbidden.is_empty() {
        return Ok(inst.matroid.bases().first().copied());
    }
    for &b in inst.matroid.bases() {
        if inst.is_avoiding(b)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// Minimum |A∖B| over avoiding bases B, or None when no basis avoids.
pub fn proximity_radius(
    inst: &LabeledInstance,
    a: ElemSet,
) -> Result<Option<usize>, ProximityError> {
    if !inst.matroid.is_basis(a) {
        return Err(ProximityError::NotABasis(a));
    }
    if inst.is_avoiding(a)? {
        return Ok(Some(0));
    }
    let mut best: Option<usize> = None;
    for &b in inst.matroid.bases() {
        if !inst.is_avoiding(b)? {
            continue;
        }
        let d = a.diff(b).len();
        if best.is_none_or(|m| d < m) {
            best = Some(d);
            if d == 1 {
                break;
            }
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProximityVerdict {
    Pass { avoiding: usize },
    Fail { witness: ElemSet, radius: usize, bound: usize },
}

impl ProximityVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, ProximityVerdict::Pass { .. })
    }
}

/// Every basis must sit within |F| exchanges of an avoiding basis; vacuous
/// when no avoiding basis exists. Returns the lexicographically smallest
/// failing basis.
pub fn check_proximity_conjecture(
    inst: &LabeledInstance,
) -> Result<ProximityVerdict, GroupError> {
    let flags = inst.avoiding_flags()?;
    let avoiding: Vec<ElemSet> = inst
        .matroid
        .bases()
        .iter()
        .zip(flags.iter())
        .filter(|(_, &ok)| ok)
        .map(|(&b, _)| b)
        .collect();
    if avoiding.is_empty() {
        return Ok(ProximityVerdict::Pass { avoiding: 0 });
    }
    let bound = inst.forbidden.len();
    for (&a, &ok) in inst.matroid.bases().iter().zip(flags.iter()) {
        if ok {
            continue;
        }
        let mut best = usize::MAX;
        for &b in &avoiding {
            let d = a.diff(b).len();
            if d < best {
                best = d;
                if best <= bound {
                    break;
                }
            }
        }
        if best > bound {
            return Ok(ProximityVerdict::Fail { witness: a, radius: best, bound });
        }
    }
    Ok(ProximityVerdict::Pass { avoiding: avoiding.len() })
}

/// Window search when the ordering length exceeds the forbidden count by
/// one: scan prefixes for an avoiding sum, then look for a prefix-sum
/// collision, then fall back to scanning every proper window.
///
/// The collision branch always yields a window summing to the b-side value.
/// When the a-side sum is forbidden one of the first two branches succeeds;
/// otherwise all proper windows can be forbidden and NoProperWindow reports
/// that corner honestly.
pub fn pigeonhole_window(
    pair: &OrderingPair,
    psi: &Labeling,
    f: &ForbiddenSet,
) -> Result<Window, ProximityError> {
    let r = pair.r();
    if r != f.len() + 1 {
        return Err(ProximityError::LengthNotForbiddenPlusOne { r, forbidden: f.len() });
    }
    if psi.group() != f.group() {
        return Err(ProximityError::GroupMismatch);
    }
    for &e in pair.a().iter().chain(pair.b().iter()) {
        if e >= psi.n() {
            return Err(ProximityError::ElementOutOfRange { e, n: psi.n() });
        }
    }
    let g = psi.group();
    let base = psi.group_sum(pair.b_set())?;
    if f.contains(&base) {
        return Err(ProximityError::StartNotAvoiding);
    }

    let mut sums = Vec::with_capacity(r);
    let mut cur = base.clone();
    for k in 1..=r {
        cur = g.sub(&cur, psi.value(pair.b()[k - 1]))?;
        cur = g.add(&cur, psi.value(pair.a()[k - 1]))?;
        if k < r && !f.contains(&cur) {
            return Ok(Window::new(1, k));
        }
        sums.push(cur.clone());
    }

    for k2 in 2..=r {
        for k1 in 1..k2 {
            if sums[k1 - 1] == sums[k2 - 1] {
                return Ok(Window::new(k1 + 1, k2));
            }
        }
    }

    for w in windows(r) {
        if w.i == 1 && w.j == r {
            continue;
        }
        if !f.contains(&psi.group_sum(window_set(pair, w))?) {
            return Ok(w);
        }
    }
    Err(ProximityError::NoProperWindow)
}

/// Clause-by-clause verdict for the reduced counterexample form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReducedFormCheck {
    pub rank_matches: bool,
    pub is_basis: bool,
    pub unique_avoiding: bool,
    pub complement_is_basis: bool,
}

impl ReducedFormCheck {
    pub fn holds(&self) -> bool {
        self.rank_matches && self.is_basis && self.unique_avoiding && self.complement_is_basis
    }
}

/// Reduced form: rank is |F|+1, B is the unique avoiding basis, and E∖B is
/// a basis. Any instance passing all four clauses has a basis at radius
/// rank, beyond the conjectured bound.
pub fn check_reduced_form(
    inst: &LabeledInstance,
    b: ElemSet,
) -> Result<ReducedFormCheck, GroupError> {
    let m = &inst.matroid;
    let flags = inst.avoiding_flags()?;
    let mut avoiding = flags.iter().zip(m.bases().iter()).filter(|(&ok, _)| ok);
    let first = avoiding.next();
    let unique_avoiding = match (first, avoiding.next()) {
        (Some((_, &only)), None) => only == b,
        _ => false,
    };
    Ok(ReducedFormCheck {
        rank_matches: m.rank() == inst.forbidden.len() + 1,
        is_basis: m.is_basis(b),
        unique_avoiding,
        complement_is_basis: m.is_basis(m.ground().diff(b)),
    })
}

pub const REDUCED_SEARCH_CAP: u64 = 1_000_000;

/// A minor instance in reduced form: restrict to X, contract Y, shift the
/// forbidden set by the contracted labels.
#[derive(Clone, Debug)]
pub struct ReducedWitness {
    pub restrict_to: ElemSet,
    pub contracted: ElemSet,
    pub minor: Matroid,
    pub map: Vec<usize>,
    pub psi: Labeling,
    pub forbidden: ForbiddenSet,
    pub basis: ElemSet,
}

#[derive(Clone, Debug)]
pub enum ReducedSearch {
    NotACounterexample { radius: Option<usize>, bound: usize },
    Found(Box<ReducedWitness>),
    NotFound { examined: u64, truncated: bool },
}

/// Search minors for a reduced form, gated on A actually sitting beyond the
/// conjectured radius bound.
pub fn find_reduced_witness(
    inst: &LabeledInstance,
    a: ElemSet,
    cap: u64,
) -> Result<ReducedSearch, ProximityError> {
    let bound = inst.forbidden.len();
    let radius = proximity_radius(inst, a)?;
    match radius {
        Some(d) if d > bound => search_reduced_minor(inst, cap),
        _ => Ok(ReducedSearch::NotACounterexample { radius, bound }),
    }
}

/// Enumerate restrictions X and independent contraction sets Y ⊆ X whose
/// minor has rank |F|+1 and ground size 2(|F|+1), and test each shifted
/// instance for reduced form. Smallest X first, lex within a size.
pub fn search_reduced_minor(
    inst: &LabeledInstance,
    cap: u64,
) -> Result<ReducedSearch, ProximityError> {
    let m = &inst.matroid;
    let n = m.n();
    let rp = inst.forbidden.len() + 1;
    let mut examined: u64 = 0;
    let mut work: u64 = 0;
    if m.rank() < rp || n < 2 * rp {
        return Ok(ReducedSearch::NotFound { examined, truncated: false });
    }
    let max_size = core::cmp::min(n, 2 * rp + (m.rank() - rp));
    for xsize in (2 * rp)..=max_size {
        let ysize = xsize - 2 * rp;
        for x in crate::set::subsets_lex(n, xsize) {
            work += 1;
            if work >= cap {
                return Ok(ReducedSearch::NotFound { examined, truncated: true });
            }
            if m.rank_of(x) != rp + ysize {
                continue;
            }
            let xelems = x.to_vec();
            for ylocal in crate::set::subsets_lex(xsize, ysize) {
                let y = ElemSet::from_iter(ylocal.iter().map(|i| xelems[i]));
                work += 1;
                if work >= cap {
                    return Ok(ReducedSearch::NotFound { examined, truncated: true });
                }
                if m.rank_of(y) != ysize {
                    continue;
                }
                examined += 1;
                let (minor, map) = m.minor(x, y)?;
                debug_assert_eq!(minor.rank(), rp);
                let shift = inst.psi.group_sum(y)?;
                let forbidden = inst.forbidden.shifted(&shift)?;
                let values = map.iter().map(|&e| inst.psi.value(e).clone()).collect();
                let psi = Labeling::new(inst.psi.group().clone(), values)?;
                let sub = LabeledInstance::new(minor.clone(), psi.clone(), forbidden.clone())?;
                let mut avoiding = Vec::new();
                for &bp in minor.bases() {
                    if sub.is_avoiding(bp)? {
                        avoiding.push(bp);
                        if avoiding.len() > 1 {
                            break;
                        }
                    }
                }
                if avoiding.len() == 1 {
                    let bp = avoiding[0];
                    if minor.is_basis(minor.ground().diff(bp)) {
                        debug_assert!(check_reduced_form(&sub, bp)?.holds());
                        return Ok(ReducedSearch::Found(Box::new(ReducedWitness {
                            restrict_to: x,
                            contracted: y,
                            minor,
                            map,
                            psi,
                            forbidden,
                            basis: bp,
                        })));
                    }
                }
            }
        }
    }
    Ok(ReducedSearch::NotFound { examined, truncated: false })
}

fn block_mask(part: &Partition, elems: &[usize]) -> u64 {
    let mut seen = 0u64;
    for &e in elems {
        seen |= 1u64 << part.block_of(e);
    }
    seen
}

fn first_duplicated(part: &Partition, elems: &[usize]) -> Option<usize> {
    elems.iter().position(|&e| {
        elems
            .iter()
            .any(|&o| o != e && part.block_of(o) == part.block_of(e))
    })
}

fn first_uniquely_colored(part: &Partition, elems: &[usize]) -> Option<usize> {
    elems.iter().position(|&e| {
        elems
            .iter()
            .all(|&o| o == e || part.block_of(o) != part.block_of(e))
    })
}

/// Order disjoint equal-size sets so that no proper window is a union of
/// blocks. Requires the block counts of the two sides to total at most r+1.
///
/// Inductive construction: each step fixes (a_i, b_i) so that a same-block
/// mate of a_i survives on the a side or one of b_i survives on the b side.
/// When the block counts still total len+1 one side has a uniquely-colored
/// element and the other a duplicated pair; otherwise the a side has a
/// duplicated pair and b_i is free (smallest id).
pub fn coloring_ordering(
    a: ElemSet,
    b: ElemSet,
    part: &Partition,
) -> Result<OrderingPair, ProximityError> {
    for e in a.union(b).iter() {
        if e >= part.n() {
            return Err(ProximityError::ElementOutOfRange { e, n: part.n() });
        }
    }
    if a.len() != b.len() {
        return Err(ProximityError::Ordering(OrderingError::LengthMismatch));
    }
    if !a.is_disjoint_from(b) {
        return Err(ProximityError::Ordering(OrderingError::NotDisjoint));
    }
    let r = a.len();
    let blocks_a = part.blocks_meeting(a);
    let blocks_b = part.blocks_meeting(b);
    if blocks_a + blocks_b > r + 1 {
        return Err(ProximityError::TooManyBlocks { a_blocks: blocks_a, b_blocks: blocks_b, r });
    }

    let mut rem_a = a.to_vec();
    let mut rem_b = b.to_vec();
    let mut ord_a = Vec::with_capacity(r);
    let mut ord_b = Vec::with_capacity(r);
    while rem_a.len() > 1 {
        let len = rem_a.len();
        let ca = block_mask(part, &rem_a).count_ones() as usize;
        let cb = block_mask(part, &rem_b).count_ones() as usize;
        debug_assert!(ca + cb <= len + 1);
        let (ia, ib) = if ca + cb == len + 1 {
            match (first_duplicated(part, &rem_a), first_uniquely_colored(part, &rem_b)) {
                (Some(ia), Some(ib)) => (ia, ib),
                _ => {
                    let ia = first_uniquely_colored(part, &rem_a).expect("one side has a unique block");
                    let ib = first_duplicated(part, &rem_b).expect("other side has a duplicate");
                    (ia, ib)
                }
            }
        } else {
            (first_duplicated(part, &rem_a).expect("block count below size forces a duplicate"), 0)
        };
        ord_a.push(rem_a.remove(ia));
        ord_b.push(rem_b.remove(ib));
    }
    ord_a.extend(rem_a);
    ord_b.extend(rem_b);
    Ok(OrderingPair::new(ord_a, ord_b)?)
}

/// True iff no window other than (1, r) is a union of blocks.
pub fn check_no_window_is_union(pair: &OrderingPair, part: &Partition) -> bool {
    let r = pair.r();
    for w in windows(r) {
        if w.i == 1 && w.j == r {
            continue;
        }
        if part.is_union_of_blocks(window_set(pair, w)) {
            return false;
        }
    }
    true
}

/// Structure of an avoiding-sum r-set in a sparse paving instance with
/// reference basis B: either X is a union of label classes, or B and X
/// differ by one element, their difference is a full class, and the common
/// part is a union of classes.
pub fn check_avoiding_set_structure(
    inst: &LabeledInstance,
    b: ElemSet,
    x: ElemSet,
) -> Result<bool, ProximityError> {
    let m = &inst.matroid;
    if !m.is_sparse_paving() {
        return Err(ProximityError::NotSparsePaving);
    }
    if !m.is_basis(b) {
        return Err(ProximityError::NotABasis(b));
    }
    if !x.is_subset_of(m.ground()) {
        return Err(ProximityError::ElementOutOfRange { e: x.diff(m.ground()).min_elem().unwrap_or(0), n: m.n() });
    }
    if x.len() != m.rank() {
        return Err(ProximityError::WrongSize { got: x.len(), expected: m.rank() });
    }
    if x == b {
        return Err(ProximityError::EqualsBasis);
    }
    if !inst.is_avoiding(x)? {
        return Err(ProximityError::SumForbidden);
    }
    let classes = inst.psi.label_classes();
    if classes.is_union_of_blocks(x) {
        return Ok(true);
    }
    let second = b.diff(x).len() == 1
        && classes.blocks().contains(&b.symdiff(x))
        && classes.is_union_of_blocks(x.inter(b));
    Ok(second)
}
