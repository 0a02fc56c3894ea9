//! Serial symmetric exchange orderings: window tables, SI-ordering search,
//! whole-matroid certification, Gabow prefix-swap orderings, and the fixed
//! rank-5 pair on which SI-orderings fail.

use alloc::vec::Vec;

use crate::graph::make_r10;
use crate::iso::find_isomorphism_constrained;
use crate::matroid::Matroid;
use crate::ordering::{window_set, windows, OrderingError, OrderingPair, Window};
use crate::set::{permutations, ElemSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SiboError {
    NotABasis(ElemSet),
    RotationOutOfRange { k: usize },
    Ordering(OrderingError),
}

impl core::fmt::Display for SiboError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SiboError::NotABasis(s) => write!(f, "{s:?} is not a basis"),
            SiboError::RotationOutOfRange { k } => {
                write!(f, "rotation index {k} out of range 1..=5")
            }
            SiboError::Ordering(e) => write!(f, "{e}"),
        }
    }
}

impl From<OrderingError> for SiboError {
    fn from(e: OrderingError) -> SiboError {
        SiboError::Ordering(e)
    }
}

/// Basis flags for every window of an ordering pair, stored row-major over
/// the triangular index set 1 <= i <= j <= r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiWindowTable {
    r: usize,
    flags: Vec<bool>,
}

impl SiWindowTable {
    pub fn r(&self) -> usize {
        self.r
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= j && j <= self.r);
        // row i starts after rows 1..i, row t holding r - t + 1 entries
        let before: usize = (1..i).map(|t| self.r - t + 1).sum();
        before + (j - i)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.flags[self.idx(i, j)]
    }

    /// Flags of row i, columns j = i..=r.
    pub fn row(&self, i: usize) -> &[bool] {
        let start = self.idx(i, i);
        &self.flags[start..start + (self.r - i + 1)]
    }

    pub fn all_true(&self) -> bool {
        self.flags.iter().all(|&f| f)
    }

    pub fn false_windows(&self) -> Vec<Window> {
        windows(self.r)
            .zip(self.flags.iter())
            .filter(|(_, &f)| !f)
            .map(|(w, _)| w)
            .collect()
    }
}

/// Evaluates every window of the pair against the basis family.
pub fn si_window_table(m: &Matroid, pair: &OrderingPair) -> Result<SiWindowTable, SiboError> {
    let a_set = pair.a_set();
    if !m.is_basis(a_set) {
        return Err(SiboError::NotABasis(a_set));
    }
    let b_set = pair.b_set();
    if !m.is_basis(b_set) {
        return Err(SiboError::NotABasis(b_set));
    }
    let flags = windows(pair.r())
        .map(|w| m.is_basis(window_set(pair, w)))
        .collect();
    Ok(SiWindowTable { r: pair.r(), flags })
}

/// An SI-ordering of a basis pair. Shared elements do not constrain the
/// windows, so the search runs on the disjoint parts in the contraction by
/// the intersection; the full orderings append the shared elements, smallest
/// id first, to both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiOrdering {
    core: OrderingPair,
    common: Vec<usize>,
}

impl SiOrdering {
    /// Orderings of the disjoint parts A \ B and B \ A.
    pub fn core(&self) -> &OrderingPair {
        &self.core
    }

    /// The shared elements, ascending.
    pub fn common(&self) -> &[usize] {
        &self.common
    }

    pub fn r(&self) -> usize {
        self.core.r() + self.common.len()
    }

    pub fn full_a(&self) -> Vec<usize> {
        let mut out = self.core.a().to_vec();
        out.extend_from_slice(&self.common);
        out
    }

    pub fn full_b(&self) -> Vec<usize> {
        let mut out = self.core.b().to_vec();
        out.extend_from_slice(&self.common);
        out
    }
}

/// Searches for an SI-ordering of the basis pair (a, b). Returns the
/// sequence-lexicographically smallest one (a_1, b_1, a_2, b_2, ...) or None
/// when no ordering works.
pub fn find_si_ordering(
    m: &Matroid,
    a: ElemSet,
    b: ElemSet,
) -> Result<Option<SiOrdering>, SiboError> {
    if !m.is_basis(a) {
        return Err(SiboError::NotABasis(a));
    }
    if !m.is_basis(b) {
        return Err(SiboError::NotABasis(b));
    }
    Ok(si_ordering_for_bases(m, a, b))
}

fn si_ordering_for_bases(m: &Matroid, a: ElemSet, b: ElemSet) -> Option<SiOrdering> {
    let common = a.inter(b);
    if common.is_empty() {
        return search_disjoint(m, a, b).map(|core| SiOrdering { core, common: Vec::new() });
    }
    let (mc, map) = m.contract(common);
    let mut a_core = ElemSet::EMPTY;
    let mut b_core = ElemSet::EMPTY;
    for (new, &old) in map.iter().enumerate() {
        if a.contains(old) {
            a_core = a_core.insert(new);
        } else if b.contains(old) {
            b_core = b_core.insert(new);
        }
    }
    debug_assert!(mc.is_basis(a_core) && mc.is_basis(b_core));
    let found = search_disjoint(&mc, a_core, b_core)?;
    let lift = |ord: &[usize]| ord.iter().map(|&e| map[e]).collect::<Vec<usize>>();
    let core = OrderingPair::new(lift(found.a()), lift(found.b()))
        .expect("relabeling preserves disjointness");
    Some(SiOrdering { core, common: common.to_vec() })
}

fn search_disjoint(m: &Matroid, a_set: ElemSet, b_set: ElemSet) -> Option<OrderingPair> {
    let r = a_set.len();
    let mut a_ord = Vec::with_capacity(r);
    let mut b_ord = Vec::with_capacity(r);
    if dfs_si(m, a_set, b_set, r, &mut a_ord, &mut b_ord) {
        Some(OrderingPair::new(a_ord, b_ord).expect("search keeps the sides disjoint"))
    } else {
        None
    }
}

fn dfs_si(
    m: &Matroid,
    a_set: ElemSet,
    b_set: ElemSet,
    r: usize,
    a_ord: &mut Vec<usize>,
    b_ord: &mut Vec<usize>,
) -> bool {
    if a_ord.len() == r {
        return true;
    }
    let rem_a = a_set.diff(ElemSet::from_iter(a_ord.iter().copied()));
    let rem_b = b_set.diff(ElemSet::from_iter(b_ord.iter().copied()));
    for a_t in rem_a.iter() {
        for b_t in rem_b.iter() {
            a_ord.push(a_t);
            b_ord.push(b_t);
            if windows_hold(m, a_set, b_set, a_ord, b_ord, r)
                && dfs_si(m, a_set, b_set, r, a_ord, b_ord)
            {
                return true;
            }
            a_ord.pop();
            b_ord.pop();
        }
    }
    false
}

// Once positions 1..=t are fixed, the windows (i, t) are determined (the
// window set only replaces b_i..b_t inside B), and so is the suffix window
// (t+1, r) = {b_1..b_t} + the unused part of A. Checking exactly these at
// every step covers all windows by the time the orderings complete.
fn windows_hold(
    m: &Matroid,
    a_set: ElemSet,
    b_set: ElemSet,
    a_ord: &[usize],
    b_ord: &[usize],
    r: usize,
) -> bool {
    let t = a_ord.len();
    let mut w = b_set;
    for i in (0..t).rev() {
        w = w.remove(b_ord[i]).insert(a_ord[i]);
        if !m.is_basis(w) {
            return false;
        }
    }
    if t < r {
        let mut s = a_set;
        for i in 0..t {
            s = s.remove(a_ord[i]).insert(b_ord[i]);
        }
        if !m.is_basis(s) {
            return false;
        }
    }
    true
}

/// Exhaustive r! x r! scan over both orderings, evaluating the full window
/// table of each candidate directly. Kept free of the incremental pruning in
/// the main search so the two can check each other. Disjoint bases only.
pub fn find_si_ordering_bruteforce(
    m: &Matroid,
    a: ElemSet,
    b: ElemSet,
) -> Result<Option<OrderingPair>, SiboError> {
    if !m.is_basis(a) {
        return Err(SiboError::NotABasis(a));
    }
    if !m.is_basis(b) {
        return Err(SiboError::NotABasis(b));
    }
    if !a.is_disjoint_from(b) {
        return Err(SiboError::Ordering(OrderingError::NotDisjoint));
    }
    let r = a.len();
    for pa in permutations(&a.to_vec()) {
        for pb in permutations(&b.to_vec()) {
            let pair = OrderingPair::new(pa.clone(), pb)?;
            if windows(r).all(|w| m.is_basis(window_set(&pair, w))) {
                return Ok(Some(pair));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SiboVerdict {
    Pass,
    Fail { a: ElemSet, b: ElemSet },
}

impl SiboVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, SiboVerdict::Pass)
    }
}

/// Scans every ordered basis pair for an SI-ordering. Fails with the first
/// pair, in the stored basis order, that has none.
pub fn is_sibo(m: &Matroid) -> SiboVerdict {
    for &a in m.bases() {
        for &b in m.bases() {
            if si_ordering_for_bases(m, a, b).is_none() {
                return SiboVerdict::Fail { a, b };
            }
        }
    }
    SiboVerdict::Pass
}

/// Both prefix-swap families: {a_1..a_i, b_{i+1}..b_r} and its mirror, as
/// sets, for i = 1..=r. The orderings may share elements.
pub fn check_gabow_ordering(m: &Matroid, a_ord: &[usize], b_ord: &[usize]) -> bool {
    let r = a_ord.len();
    if b_ord.len() != r {
        return false;
    }
    let a_set = ElemSet::from_iter(a_ord.iter().copied());
    let b_set = ElemSet::from_iter(b_ord.iter().copied());
    if a_set.len() != r || b_set.len() != r {
        return false;
    }
    let mut used_a = ElemSet::EMPTY;
    let mut used_b = ElemSet::EMPTY;
    for i in 0..r {
        used_a = used_a.insert(a_ord[i]);
        used_b = used_b.insert(b_ord[i]);
        if !m.is_basis(used_a.union(b_set.diff(used_b)))
            || !m.is_basis(used_b.union(a_set.diff(used_a)))
        {
            return false;
        }
    }
    true
}

/// Searches for orderings making both prefix-swap families all bases.
/// Returns the sequence-lexicographically smallest orderings or None. The
/// bases may overlap; both families are checked at every prefix length.
#[allow(clippy::type_complexity)]
pub fn find_gabow_ordering(
    m: &Matroid,
    a: ElemSet,
    b: ElemSet,
) -> Result<Option<(Vec<usize>, Vec<usize>)>, SiboError> {
    if !m.is_basis(a) {
        return Err(SiboError::NotABasis(a));
    }
    if !m.is_basis(b) {
        return Err(SiboError::NotABasis(b));
    }
    let r = a.len();
    let mut a_ord = Vec::with_capacity(r);
    let mut b_ord = Vec::with_capacity(r);
    if dfs_gabow(m, a, b, r, &mut a_ord, &mut b_ord) {
        Ok(Some((a_ord, b_ord)))
    } else {
        Ok(None)
    }
}

fn dfs_gabow(
    m: &Matroid,
    a_set: ElemSet,
    b_set: ElemSet,
    r: usize,
    a_ord: &mut Vec<usize>,
    b_ord: &mut Vec<usize>,
) -> bool {
    if a_ord.len() == r {
        return true;
    }
    let used_a = ElemSet::from_iter(a_ord.iter().copied());
    let used_b = ElemSet::from_iter(b_ord.iter().copied());
    for a_t in a_set.diff(used_a).iter() {
        for b_t in b_set.diff(used_b).iter() {
            let na = used_a.insert(a_t);
            let nb = used_b.insert(b_t);
            if m.is_basis(na.union(b_set.diff(nb))) && m.is_basis(nb.union(a_set.diff(na))) {
                a_ord.push(a_t);
                b_ord.push(b_t);
                if dfs_gabow(m, a_set, b_set, r, a_ord, b_ord) {
                    return true;
                }
                a_ord.pop();
                b_ord.pop();
            }
        }
    }
    false
}

// Edge id of v_u v_w under the fixed order (v1v2=0, v1v3=1, ..., v4v5=9),
// vertices 1-based cyclic mod 5.
fn r10_edge(u: usize, w: usize) -> usize {
    let mut x = (u - 1) % 5;
    let mut y = (w - 1) % 5;
    if x > y {
        core::mem::swap(&mut x, &mut y);
    }
    x * (9 - x) / 2 + (y - x - 1)
}

/// The 5-cycle {v_i v_{i+1}} and the pentagram {v_i v_{i+2}}: the disjoint
/// basis pair every other disjoint pair maps onto.
pub fn canonical_r10_pair() -> (ElemSet, ElemSet) {
    let cycle = ElemSet::from_iter((1..=5).map(|i| r10_edge(i, i + 1)));
    let pentagram = ElemSet::from_iter((1..=5).map(|i| r10_edge(i, i + 2)));
    (cycle, pentagram)
}

/// The rotation-k near-SI orderings of the pentagram (a side) against the
/// 5-cycle (b side): every window is a basis except exactly (3, 3), whose
/// two slot entries sweep the 5-cycle and the pentagram once each as k runs
/// over 1..=5.
pub fn r10_near_si_ordering(k: usize) -> Result<OrderingPair, SiboError> {
    if !(1..=5).contains(&k) {
        return Err(SiboError::RotationOutOfRange { k });
    }
    let a = alloc::vec![
        r10_edge(k + 2, k + 4),
        r10_edge(k, k + 2),
        r10_edge(k + 3, k + 5),
        r10_edge(k + 4, k + 6),
        r10_edge(k + 1, k + 3),
    ];
    let b = alloc::vec![
        r10_edge(k, k + 1),
        r10_edge(k + 2, k + 3),
        r10_edge(k + 3, k + 4),
        r10_edge(k + 1, k + 2),
        r10_edge(k + 4, k + 5),
    ];
    Ok(OrderingPair::new(a, b).expect("pentagram and cycle are disjoint"))
}

/// Outcome of mapping every ordered disjoint basis pair onto the canonical
/// pair by an automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTransitivity {
    pub pairs: usize,
    pub unmapped: Option<(ElemSet, ElemSet)>,
}

impl PairTransitivity {
    pub fn holds(&self) -> bool {
        self.unmapped.is_none()
    }
}

/// For each ordered disjoint basis pair (A, B) of the rank-5 counterexample
/// matroid, searches for an automorphism carrying A onto the 5-cycle and B
/// onto the pentagram. Disjointness forces B to be the complement of A, so
/// the pairs are exactly the bases with basis complements.
pub fn verify_r10_pair_transitivity() -> PairTransitivity {
    let m = make_r10();
    let (cycle, pentagram) = canonical_r10_pair();
    let ground = ElemSet::full(m.n());
    let mut pairs = 0;
    let mut unmapped = None;
    for &a in m.bases() {
        let b = ground.diff(a);
        if !m.is_basis(b) {
            continue;
        }
        pairs += 1;
        if unmapped.is_some() {
            continue;
        }
        let allowed: Vec<ElemSet> = (0..m.n())
            .map(|e| if a.contains(e) { cycle } else { pentagram })
            .collect();
        if find_isomorphism_constrained(&m, &m, &allowed).is_none() {
            unmapped = Some((a, b));
        }
    }
    PairTransitivity { pairs, unmapped }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_graphic, Graph};
    use crate::iso::map_basis_family;
    use alloc::vec;

    fn uniform(r: usize, n: usize) -> Matroid {
        Matroid::make_uniform(r, n).unwrap()
    }

    fn k4() -> Matroid {
        let g = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        make_graphic(&g).unwrap()
    }

    #[test]
    fn window_table_uniform_all_true() {
        let m = uniform(2, 4);
        let pair = OrderingPair::new(vec![0, 1], vec![2, 3]).unwrap();
        let table = si_window_table(&m, &pair).unwrap();
        assert!(table.all_true());
        assert!(table.false_windows().is_empty());
        assert_eq!(table.row(1), &[true, true]);
        assert_eq!(table.row(2), &[true]);
    }

    #[test]
    fn window_table_rejects_non_bases() {
        let m = Matroid::from_bases(4, vec![ElemSet::from_iter([0, 1])]).unwrap();
        let pair = OrderingPair::new(vec![0, 2], vec![1, 3]).unwrap();
        assert_eq!(
            si_window_table(&m, &pair),
            Err(SiboError::NotABasis(ElemSet::from_iter([0, 2])))
        );
    }

    #[test]
    fn canonical_pair_shape() {
        let m = make_r10();
        let (cycle, pentagram) = canonical_r10_pair();
        assert_eq!(cycle, ElemSet::from_iter([0, 3, 4, 7, 9]));
        assert_eq!(pentagram, ElemSet::from_iter([1, 2, 5, 6, 8]));
        assert!(m.is_basis(cycle) && m.is_basis(pentagram));
        assert!(cycle.is_disjoint_from(pentagram));
        assert_eq!(cycle.union(pentagram), ElemSet::full(10));
    }

    #[test]
    fn near_si_orderings_fixed_rotation() {
        let pair = r10_near_si_ordering(1).unwrap();
        assert_eq!(pair.a(), &[8, 1, 2, 6, 5]);
        assert_eq!(pair.b(), &[0, 7, 9, 4, 3]);
        assert_eq!(r10_near_si_ordering(0), Err(SiboError::RotationOutOfRange { k: 0 }));
        assert_eq!(r10_near_si_ordering(6), Err(SiboError::RotationOutOfRange { k: 6 }));
    }

    #[test]
    fn near_si_orderings_fail_only_at_center() {
        let m = make_r10();
        let (cycle, pentagram) = canonical_r10_pair();
        let mut third_a = ElemSet::EMPTY;
        let mut third_b = ElemSet::EMPTY;
        for k in 1..=5 {
            let pair = r10_near_si_ordering(k).unwrap();
            assert_eq!(pair.a_set(), pentagram);
            assert_eq!(pair.b_set(), cycle);
            let table = si_window_table(&m, &pair).unwrap();
            assert_eq!(table.false_windows(), vec![Window::new(3, 3)]);
            assert!(!table.get(3, 3));
            third_a = third_a.insert(pair.a()[2]);
            third_b = third_b.insert(pair.b()[2]);
        }
        // the failing slot sweeps both sets, so label sums over the two
        // sides agree rotation by rotation
        assert_eq!(third_a, pentagram);
        assert_eq!(third_b, cycle);
    }

    #[test]
    fn si_ordering_uniform_found() {
        let m = uniform(2, 4);
        let found = find_si_ordering(&m, ElemSet::from_iter([0, 1]), ElemSet::from_iter([2, 3]))
            .unwrap()
            .unwrap();
        assert!(found.common().is_empty());
        assert_eq!(found.full_a(), vec![0, 1]);
        assert_eq!(found.full_b(), vec![2, 3]);
        assert!(si_window_table(&m, found.core()).unwrap().all_true());
    }

    #[test]
    fn si_ordering_validates_inputs() {
        let m = uniform(2, 4);
        assert_eq!(
            find_si_ordering(&m, ElemSet::from_iter([0]), ElemSet::from_iter([2, 3])),
            Err(SiboError::NotABasis(ElemSet::from_iter([0])))
        );
    }

    // every full window (replace b_i..b_j by a_i..a_j inside full B) must be
    // a basis; evaluated directly from the lifted orderings
    fn full_windows_hold(m: &Matroid, full_a: &[usize], full_b: &[usize]) -> bool {
        let r = full_a.len();
        let b_set = ElemSet::from_iter(full_b.iter().copied());
        for i in 1..=r {
            for j in i..=r {
                let mut w = b_set;
                for t in i..=j {
                    w = w.remove(full_b[t - 1]).insert(full_a[t - 1]);
                }
                if !m.is_basis(w) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn si_ordering_overlapping_pair_lifts() {
        let m = uniform(3, 6);
        let a = ElemSet::from_iter([0, 1, 2]);
        let b = ElemSet::from_iter([2, 3, 4]);
        let found = find_si_ordering(&m, a, b).unwrap().unwrap();
        assert_eq!(found.common(), &[2]);
        assert_eq!(found.r(), 3);
        assert_eq!(found.full_a().last(), Some(&2));
        assert_eq!(found.full_b().last(), Some(&2));
        assert!(full_windows_hold(&m, &found.full_a(), &found.full_b()));
    }

    #[test]
    fn si_ordering_equal_pair_is_vacuous() {
        let m = uniform(2, 4);
        let a = ElemSet::from_iter([1, 3]);
        let found = find_si_ordering(&m, a, a).unwrap().unwrap();
        assert_eq!(found.core().r(), 0);
        assert_eq!(found.full_a(), vec![1, 3]);
        assert_eq!(found.full_b(), vec![1, 3]);
    }

    #[test]
    fn canonical_pair_has_no_si_ordering() {
        let m = make_r10();
        let (cycle, pentagram) = canonical_r10_pair();
        assert!(find_si_ordering(&m, cycle, pentagram).unwrap().is_none());
        assert!(find_si_ordering(&m, pentagram, cycle).unwrap().is_none());
    }

    #[test]
    fn graphic_disjoint_pair_found_and_bruteforce_agrees() {
        // K4: two edge-disjoint spanning trees
        let m = k4();
        let a = ElemSet::from_iter([0, 3, 5]);
        let b = ElemSet::from_iter([1, 2, 4]);
        assert!(m.is_basis(a) && m.is_basis(b));
        let found = find_si_ordering(&m, a, b).unwrap();
        assert!(found.is_some());
        assert!(find_si_ordering_bruteforce(&m, a, b).unwrap().is_some());
        let ord = found.unwrap();
        assert!(full_windows_hold(&m, &ord.full_a(), &ord.full_b()));
    }

    #[test]
    fn bruteforce_rejects_overlap() {
        let m = uniform(2, 4);
        assert_eq!(
            find_si_ordering_bruteforce(
                &m,
                ElemSet::from_iter([0, 1]),
                ElemSet::from_iter([1, 2])
            ),
            Err(SiboError::Ordering(OrderingError::NotDisjoint))
        );
    }

    #[test]
    fn sibo_uniform_passes() {
        assert!(is_sibo(&uniform(2, 4)).passed());
        assert!(is_sibo(&uniform(3, 5)).passed());
    }

    #[test]
    fn sibo_counterexample_fails_on_a_disjoint_pair() {
        let m = make_r10();
        match is_sibo(&m) {
            SiboVerdict::Fail { a, b } => {
                assert!(m.is_basis(a) && m.is_basis(b));
                assert!(a.is_disjoint_from(b));
                assert_eq!(b, ElemSet::full(10).diff(a));
                assert!(find_si_ordering(&m, a, b).unwrap().is_none());
            }
            SiboVerdict::Pass => panic!("expected a failing pair"),
        }
    }

    #[test]
    fn gabow_uniform_and_counterexample_found() {
        let m = uniform(2, 4);
        let (a, b) = (ElemSet::from_iter([0, 1]), ElemSet::from_iter([2, 3]));
        let (pa, pb) = find_gabow_ordering(&m, a, b).unwrap().unwrap();
        assert!(check_gabow_ordering(&m, &pa, &pb));

        let r10 = make_r10();
        let (cycle, pentagram) = canonical_r10_pair();
        let (ga, gb) = find_gabow_ordering(&r10, cycle, pentagram).unwrap().unwrap();
        assert!(check_gabow_ordering(&r10, &ga, &gb));
    }

    #[test]
    fn gabow_handles_overlap() {
        let m = uniform(3, 6);
        let a = ElemSet::from_iter([0, 1, 2]);
        let b = ElemSet::from_iter([2, 3, 4]);
        let (pa, pb) = find_gabow_ordering(&m, a, b).unwrap().unwrap();
        assert!(check_gabow_ordering(&m, &pa, &pb));
    }

    #[test]
    fn si_ordering_implies_gabow() {
        let m = k4();
        let a = ElemSet::from_iter([0, 3, 5]);
        let b = ElemSet::from_iter([1, 2, 4]);
        let ord = find_si_ordering(&m, a, b).unwrap().unwrap();
        assert!(check_gabow_ordering(&m, &ord.full_a(), &ord.full_b()));
    }

    #[test]
    fn pair_transitivity_all_mapped() {
        let t = verify_r10_pair_transitivity();
        assert_eq!(t.pairs, 72);
        assert!(t.holds());
    }

    #[test]
    fn constrained_automorphism_maps_swapped_canonical_pair() {
        let m = make_r10();
        let (cycle, pentagram) = canonical_r10_pair();
        let allowed: Vec<ElemSet> = (0..10)
            .map(|e| if pentagram.contains(e) { cycle } else { pentagram })
            .collect();
        let sigma = find_isomorphism_constrained(&m, &m, &allowed).unwrap();
        assert_eq!(map_basis_family(m.bases(), &sigma), m.bases());
        let image = ElemSet::from_iter(pentagram.iter().map(|e| sigma[e]));
        assert_eq!(image, cycle);
    }
}
