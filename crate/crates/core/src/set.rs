//! Bitmask element sets and small combinatorics over ground sets of size <= 64.

use core::cmp::Ordering;

use alloc::vec::Vec;

/// Maximum supported ground-set size.
pub const MAX_N: usize = 64;

/// A set of element ids drawn from 0..64, packed into one machine word.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(e: usize) -> ElemSet {
        debug_assert!(e < MAX_N);
        ElemSet(1 << e)
    }

    /// The full set {0, .., n-1}.
    pub fn full(n: usize) -> ElemSet {
        debug_assert!(n <= MAX_N);
        if n == 64 {
            ElemSet(!0)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_N && self.0 >> e & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(self, e: usize) -> ElemSet {
        debug_assert!(e < MAX_N);
        ElemSet(self.0 | 1 << e)
    }

    pub fn remove(self, e: usize) -> ElemSet {
        debug_assert!(e < MAX_N);
        ElemSet(self.0 & !(1 << e))
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn inter(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn diff(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn symdiff(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over element ids.
    pub fn iter(self) -> ElemIter {
        ElemIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending id lists, e.g. {0,5} < {1,2} and
    /// {0,3} < {0,3,5}. This is the order used for sorted basis families and
    /// "lexicographically smallest" tie-breaking throughout.
    pub fn lex_cmp(self, other: ElemSet) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let m = (self.0 ^ other.0).trailing_zeros();
        let shared_below = self.0 & ((1u64 << m) - 1);
        // All elements below m coincide. If m is in self, self has the smaller
        // element at the first differing list position, unless other has run
        // out (then other is a proper prefix and sorts first).
        if self.0 >> m & 1 == 1 {
            if other.0 >> m == 0 {
                debug_assert!(other.0 == shared_below);
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 >> m == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(ids: I) -> ElemSet {
        let mut s = 0u64;
        for e in ids {
            debug_assert!(e < MAX_N);
            s |= 1 << e;
        }
        ElemSet(s)
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(*other)
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for e in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{}", e)?;
            first = false;
        }
        f.write_str("}")
    }
}

#[derive(Clone)]
pub struct ElemIter(u64);

impl Iterator for ElemIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

/// Binomial coefficient. Values stay within u64 for n <= 64; the running
/// product is widened because the pre-division numerator can spill past it.
pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        // exact at every step: r holds C(n-k+i, i) before multiplying
        r = r * (n - k + i + 1) as u128 / (i + 1) as u128;
    }
    r as u64
}

/// Colexicographic rank of a k-set: sum of C(s_i, i+1) over ascending elements.
pub fn colex_rank(set: ElemSet) -> u64 {
    set.iter()
        .enumerate()
        .map(|(i, e)| binom(e, i + 1))
        .sum()
}

/// Inverse of `colex_rank` for k-subsets.
pub fn colex_unrank(mut rank: u64, k: usize) -> ElemSet {
    let mut out = ElemSet::EMPTY;
    for i in (1..=k).rev() {
        // Largest e with C(e, i) <= rank.
        let mut e = i - 1;
        while binom(e + 1, i) <= rank {
            e += 1;
        }
        rank -= binom(e, i);
        out = out.insert(e);
    }
    out
}

/// Iterator over all k-subsets of {0,..,n-1} in ascending-list lexicographic
/// order ({0,1,2}, {0,1,3}, .., {n-3,n-2,n-1}).
pub fn subsets_lex(n: usize, k: usize) -> SubsetsLex {
    debug_assert!(n <= MAX_N);
    SubsetsLex {
        n,
        k,
        cur: (0..k).collect(),
        done: k > n,
    }
}

pub struct SubsetsLex {
    n: usize,
    k: usize,
    cur: Vec<usize>,
    done: bool,
}

impl Iterator for SubsetsLex {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        if self.done {
            return None;
        }
        let out = ElemSet::from_iter(self.cur.iter().copied());
        if self.k == 0 {
            self.done = true;
            return Some(out);
        }
        // Advance the rightmost index that can still move.
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                return Some(out);
            }
            i -= 1;
            if self.cur[i] != i + self.n - self.k {
                break;
            }
            if i == 0 {
                self.done = true;
                return Some(out);
            }
        }
        self.cur[i] += 1;
        for j in i + 1..self.k {
            self.cur[j] = self.cur[j - 1] + 1;
        }
        Some(out)
    }
}

/// Iterator over all k-subsets of {0,..,n-1} in colexicographic order, which
/// for bitmasks is plain numeric order (Gosper's hack).
pub fn subsets_colex(n: usize, k: usize) -> SubsetsColex {
    debug_assert!(n <= MAX_N);
    let (cur, last) = if k > n {
        (None, 0)
    } else if k == 0 {
        (Some(0), 0)
    } else {
        let lo = (1u64 << (k - 1) << 1).wrapping_sub(1);
        (Some(lo), lo << (n - k))
    };
    SubsetsColex { cur, last }
}

pub struct SubsetsColex {
    cur: Option<u64>,
    last: u64,
}

impl Iterator for SubsetsColex {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        let v = self.cur?;
        self.cur = if v == self.last {
            None
        } else {
            // Gosper: next mask with the same popcount. Never evaluated on the
            // final subset, so v + c cannot overflow.
            let c = v & v.wrapping_neg();
            let r = v + c;
            Some((((v ^ r) >> 2) / c) | r)
        };
        Some(ElemSet(v))
    }
}

/// All permutations of `items` in lexicographic order of the index sequence.
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..items.len()).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next_permutation on idx
        if idx.len() < 2 {
            break;
        }
        let mut i = idx.len() - 1;
        while i > 0 && idx[i - 1] >= idx[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = idx.len() - 1;
        while idx[j] <= idx[i - 1] {
            j -= 1;
        }
        idx.swap(i - 1, j);
        idx[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn lex_order_matches_list_order() {
        // {0,5} < {1,2}, {0,3} < {0,3,5}, prefix sorts first.
        assert_eq!(
            ElemSet::from_iter([0, 5]).lex_cmp(ElemSet::from_iter([1, 2])),
            Ordering::Less
        );
        assert_eq!(
            ElemSet::from_iter([0, 3]).lex_cmp(ElemSet::from_iter([0, 3, 5])),
            Ordering::Less
        );
        assert_eq!(
            ElemSet::from_iter([0, 3, 5]).lex_cmp(ElemSet::from_iter([0, 3])),
            Ordering::Greater
        );
        assert_eq!(
            ElemSet::from_iter([0, 2]).lex_cmp(ElemSet::from_iter([0, 3])),
            Ordering::Less
        );
        assert_eq!(
            ElemSet::from_iter([1]).lex_cmp(ElemSet::from_iter([0, 3])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_order_exhaustive_small() {
        // Cross-check the bit trick against explicit list comparison for all
        // subset pairs of a 6-element ground set.
        let all: Vec<ElemSet> = (0u64..64).map(ElemSet).collect();
        for &a in &all {
            for &b in &all {
                let la = a.to_vec();
                let lb = b.to_vec();
                assert_eq!(a.lex_cmp(b), la.cmp(&lb), "{:?} vs {:?}", a, b);
            }
        }
    }

    #[test]
    fn binom_values() {
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(10, 5), 252);
        assert_eq!(binom(14, 7), 3432);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(64, 32), 1832624140942590534);
    }

    #[test]
    fn colex_round_trip() {
        for r in 1..=5 {
            let n = 2 * r;
            let total = binom(n, r);
            for rank in 0..total {
                let s = colex_unrank(rank, r);
                assert_eq!(s.len(), r);
                assert!(s.is_subset_of(ElemSet::full(n)));
                assert_eq!(colex_rank(s), rank);
            }
        }
    }

    #[test]
    fn colex_rank_examples() {
        // r=2 over [4]: {0,1} is colex-smallest, {2,3} colex-largest.
        assert_eq!(colex_rank(ElemSet::from_iter([0, 1])), 0);
        assert_eq!(colex_rank(ElemSet::from_iter([2, 3])), 5);
    }

    #[test]
    fn subsets_lex_order_and_count() {
        let subs: Vec<ElemSet> = subsets_lex(5, 3).collect();
        assert_eq!(subs.len(), 10);
        assert_eq!(subs[0], ElemSet::from_iter([0, 1, 2]));
        assert_eq!(subs[9], ElemSet::from_iter([2, 3, 4]));
        for w in subs.windows(2) {
            assert_eq!(w[0].lex_cmp(w[1]), Ordering::Less);
        }
        assert_eq!(subsets_lex(4, 0).count(), 1);
        assert_eq!(subsets_lex(4, 5).count(), 0);
    }

    #[test]
    fn subsets_colex_order_and_count() {
        let subs: Vec<ElemSet> = subsets_colex(4, 2).collect();
        assert_eq!(subs.len(), 6);
        // Numeric ascending = colex ascending.
        for w in subs.windows(2) {
            assert!(w[0].0 < w[1].0);
        }
        assert_eq!(subs[0], ElemSet::from_iter([0, 1]));
        assert_eq!(subs[5], ElemSet::from_iter([2, 3]));
        assert_eq!(subsets_colex(10, 5).count(), 252);
        assert_eq!(subsets_colex(3, 0).count(), 1);
    }

    #[test]
    fn subsets_agree_as_sets() {
        use alloc::collections::BTreeSet;
        let a: BTreeSet<u64> = subsets_lex(7, 3).map(|s| s.0).collect();
        let b: BTreeSet<u64> = subsets_colex(7, 3).map(|s| s.0).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 35);
    }

    #[test]
    fn permutations_count_and_order() {
        let ps = permutations(&[3, 5, 9]);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0], vec![3, 5, 9]);
        assert_eq!(ps[5], vec![9, 5, 3]);
        assert_eq!(permutations(&[]).len(), 1);
        assert_eq!(permutations(&[0, 1, 2, 3, 4]).len(), 120);
    }
}
