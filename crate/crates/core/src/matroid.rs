//! Matroids as explicit basis families.
//!
//! A matroid here is a ground set 0..n (n <= 64) plus the sorted list of its
//! bases. Everything downstream (duals, minors, orderings, CNF encodings)
//! works directly on this representation, so constructors validate hard and
//! keep the family in a canonical order.

use alloc::vec::Vec;

use crate::set::{binom, subsets_lex, ElemSet, MAX_N};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidError {
    GroundTooLarge { n: usize },
    InvalidRank { r: usize, n: usize },
    EmptyFamily,
    WrongSetSize { set: ElemSet, expected: usize },
    OutOfRange { set: ElemSet, n: usize },
    ExchangeFailure { b: ElemSet, b_prime: ElemSet, e: usize },
    HyperplanesTooClose { h1: ElemSet, h2: ElemSet },
    NoBases,
    NotNested { contract: ElemSet, restrict: ElemSet },
    TooLargeForSearch { n: usize, limit: usize },
}

impl core::fmt::Display for MatroidError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MatroidError::GroundTooLarge { n } => {
                write!(f, "ground set size {} exceeds the supported maximum {}", n, MAX_N)
            }
            MatroidError::InvalidRank { r, n } => {
                write!(f, "rank {} is invalid for ground set size {}", r, n)
            }
            MatroidError::EmptyFamily => f.write_str("basis family is empty"),
            MatroidError::WrongSetSize { set, expected } => {
                write!(f, "set {:?} does not have the required size {}", set, expected)
            }
            MatroidError::OutOfRange { set, n } => {
                write!(f, "set {:?} leaves the ground set 0..{}", set, n)
            }
            MatroidError::ExchangeFailure { b, b_prime, e } => write!(
                f,
                "exchange axiom fails: no f in {:?} \\ {:?} with B - {} + f in the family",
                b_prime, b, e
            ),
            MatroidError::HyperplanesTooClose { h1, h2 } => write!(
                f,
                "excluded sets {:?} and {:?} intersect in more than r-2 elements",
                h1, h2
            ),
            MatroidError::NoBases => f.write_str("every r-set is excluded, no basis remains"),
            MatroidError::NotNested { contract, restrict } => write!(
                f,
                "contraction set {:?} is not contained in restriction set {:?}",
                contract, restrict
            ),
            MatroidError::TooLargeForSearch { n, limit } => {
                write!(f, "exhaustive search refused for n = {} (limit {})", n, limit)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomVerdict {
    Holds,
    Fails { b: ElemSet, b_prime: ElemSet, e: usize },
}

impl AxiomVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, AxiomVerdict::Holds)
    }
}

/// Checks the basis exchange axiom on a nonempty family of r-subsets of [n]:
/// for all B, B' and e in B \ B' there must be f in B' \ B with B - e + f in
/// the family. Returns the first violation in scan order (family sorted, e
/// ascending) so witnesses are deterministic.
pub fn validate_basis_axiom(n: usize, r: usize, family: &[ElemSet]) -> AxiomVerdict {
    debug_assert!(n <= MAX_N);
    debug_assert!(!family.is_empty());
    debug_assert!(family.iter().all(|b| b.len() == r && b.is_subset_of(ElemSet::full(n))));
    let mut sorted: Vec<ElemSet> = family.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let member = |s: ElemSet| sorted.binary_search(&s).is_ok();
    for &b in &sorted {
        for &bp in &sorted {
            if b == bp {
                continue;
            }
            'elems: for e in b.diff(bp).iter() {
                let base = b.remove(e);
                for f in bp.diff(b).iter() {
                    if member(base.insert(f)) {
                        continue 'elems;
                    }
                }
                return AxiomVerdict::Fails { b, b_prime: bp, e };
            }
        }
    }
    AxiomVerdict::Holds
}

/// Raw data for a sparse paving matroid: the excluded r-sets. Validity means
/// every excluded set has size r and any two intersect in at most r-2
/// elements; the complement family is then automatically a basis family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePavingRep {
    pub n: usize,
    pub r: usize,
    pub hyperplanes: Vec<ElemSet>,
}

impl SparsePavingRep {
    pub fn validate(&self) -> Result<(), MatroidError> {
        if self.n > MAX_N {
            return Err(MatroidError::GroundTooLarge { n: self.n });
        }
        if self.r > self.n {
            return Err(MatroidError::InvalidRank { r: self.r, n: self.n });
        }
        let ground = ElemSet::full(self.n);
        for &h in &self.hyperplanes {
            if h.len() != self.r {
                return Err(MatroidError::WrongSetSize { set: h, expected: self.r });
            }
            if !h.is_subset_of(ground) {
                return Err(MatroidError::OutOfRange { set: h, n: self.n });
            }
        }
        for (i, &h1) in self.hyperplanes.iter().enumerate() {
            for &h2 in &self.hyperplanes[i + 1..] {
                // |H1 cap H2| <= r - 2, kept in unsigned arithmetic.
                if h1.inter(h2).len() + 2 > self.r {
                    return Err(MatroidError::HyperplanesTooClose { h1, h2 });
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    r: usize,
    bases: Vec<ElemSet>,
}

/// Debug-build axiom re-validation is skipped above this family size; the
/// scan is quadratic in the family and would dominate large uniform builds.
const DEBUG_SCAN_LIMIT: usize = 5_000;

impl Matroid {
    /// Validating constructor: checks sizes, range, and the exchange axiom.
    pub fn from_bases(n: usize, bases: Vec<ElemSet>) -> Result<Matroid, MatroidError> {
        if n > MAX_N {
            return Err(MatroidError::GroundTooLarge { n });
        }
        if bases.is_empty() {
            return Err(MatroidError::EmptyFamily);
        }
        let r = bases[0].len();
        let ground = ElemSet::full(n);
        for &b in &bases {
            if b.len() != r {
                return Err(MatroidError::WrongSetSize { set: b, expected: r });
            }
            if !b.is_subset_of(ground) {
                return Err(MatroidError::OutOfRange { set: b, n });
            }
        }
        let mut bases = bases;
        bases.sort_unstable();
        bases.dedup();
        match validate_basis_axiom(n, r, &bases) {
            AxiomVerdict::Holds => Ok(Matroid { n, r, bases }),
            AxiomVerdict::Fails { b, b_prime, e } => {
                Err(MatroidError::ExchangeFailure { b, b_prime, e })
            }
        }
    }

    /// For constructions whose output is a matroid by theorem (uniform
    /// families, excluded-set complements, duals, minors). Debug builds
    /// re-run the axiom scan on desk-scale families anyway.
    pub(crate) fn trusted(n: usize, r: usize, mut bases: Vec<ElemSet>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        debug_assert!(
            bases.len() > DEBUG_SCAN_LIMIT || validate_basis_axiom(n, r, &bases).holds()
        );
        Matroid { n, r, bases }
    }

    /// The uniform matroid U_{r,n}: every r-subset is a basis.
    pub fn make_uniform(r: usize, n: usize) -> Result<Matroid, MatroidError> {
        if n > MAX_N {
            return Err(MatroidError::GroundTooLarge { n });
        }
        if n == 0 || r > n {
            return Err(MatroidError::InvalidRank { r, n });
        }
        let bases: Vec<ElemSet> = subsets_lex(n, r).collect();
        Ok(Matroid::trusted(n, r, bases))
    }

    /// Sparse paving matroid from its excluded r-sets: bases are all r-subsets
    /// except the listed ones. Rejects exclusion lists that are not pairwise
    /// far enough apart or that leave no basis.
    pub fn make_sparse_paving(rep: &SparsePavingRep) -> Result<Matroid, MatroidError> {
        rep.validate()?;
        let mut excluded: Vec<ElemSet> = rep.hyperplanes.clone();
        excluded.sort_unstable();
        excluded.dedup();
        if excluded.len() as u64 >= binom(rep.n, rep.r) {
            return Err(MatroidError::NoBases);
        }
        let bases: Vec<ElemSet> = subsets_lex(rep.n, rep.r)
            .filter(|s| excluded.binary_search(s).is_err())
            .collect();
        Ok(Matroid::trusted(rep.n, rep.r, bases))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn ground(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    /// Sorted, deduplicated basis family.
    pub fn bases(&self) -> &[ElemSet] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, s: ElemSet) -> bool {
        s.len() == self.r && self.bases.binary_search(&s).is_ok()
    }

    /// Rank of a subset: max over bases of |B cap X|.
    pub fn rank_of(&self, x: ElemSet) -> usize {
        debug_assert!(x.is_subset_of(self.ground()));
        self.bases.iter().map(|b| b.inter(x).len()).max().unwrap_or(0)
    }

    /// Dual matroid: bases are the complements of the bases.
    pub fn dual(&self) -> Matroid {
        let ground = self.ground();
        let bases: Vec<ElemSet> = self.bases.iter().map(|b| ground.diff(*b)).collect();
        Matroid::trusted(self.n, self.n - self.r, bases)
    }

    /// Restriction to X, relabeled to a dense ground set 0..|X|. The returned
    /// map sends new ids to old ids and is order-preserving.
    pub fn restrict(&self, x: ElemSet) -> (Matroid, Vec<usize>) {
        debug_assert!(x.is_subset_of(self.ground()));
        let map = x.to_vec();
        let r_new = self.rank_of(x);
        let mut bases: Vec<ElemSet> = self
            .bases
            .iter()
            .map(|b| b.inter(x))
            .filter(|s| s.len() == r_new)
            .map(|s| relabel_dense(s, &map))
            .collect();
        bases.sort_unstable();
        bases.dedup();
        (Matroid::trusted(map.len(), r_new, bases), map)
    }

    /// Contraction of Y, via the dual identity M/Y = (M* | (E \ Y))*. Ground
    /// set relabeled densely; map sends new ids to old ids.
    pub fn contract(&self, y: ElemSet) -> (Matroid, Vec<usize>) {
        debug_assert!(y.is_subset_of(self.ground()));
        let (restricted, map) = self.dual().restrict(self.ground().diff(y));
        (restricted.dual(), map)
    }

    /// Minor (M|X)/Y for Y subseteq X: restrict to X, then contract Y's image.
    /// Map sends the minor's ids to original ids.
    pub fn minor(&self, x: ElemSet, y: ElemSet) -> Result<(Matroid, Vec<usize>), MatroidError> {
        if !x.is_subset_of(self.ground()) {
            return Err(MatroidError::OutOfRange { set: x, n: self.n });
        }
        if !y.is_subset_of(x) {
            return Err(MatroidError::NotNested { contract: y, restrict: x });
        }
        let (restricted, map1) = self.restrict(x);
        let y_image = ElemSet::from_iter(
            map1.iter().enumerate().filter(|(_, &old)| y.contains(old)).map(|(new, _)| new),
        );
        let (contracted, map2) = restricted.contract(y_image);
        let map: Vec<usize> = map2.iter().map(|&mid| map1[mid]).collect();
        Ok((contracted, map))
    }

    /// All r-subsets of the ground set that are not bases, sorted.
    pub fn rank_size_nonbases(&self) -> Vec<ElemSet> {
        subsets_lex(self.n, self.r)
            .filter(|s| self.bases.binary_search(s).is_err())
            .collect()
    }

    /// True iff the r-set non-bases pairwise intersect in at most r-2
    /// elements, i.e. they form a valid excluded-set representation.
    pub fn is_sparse_paving(&self) -> bool {
        let nb = self.rank_size_nonbases();
        for (i, &h1) in nb.iter().enumerate() {
            for &h2 in &nb[i + 1..] {
                if h1.inter(h2).len() + 2 > self.r {
                    return false;
                }
            }
        }
        true
    }

    /// Recovers the excluded-set representation if the matroid is sparse
    /// paving: the sorted list of r-set non-bases.
    pub fn sparse_paving_hyperplanes(&self) -> Option<Vec<ElemSet>> {
        if self.is_sparse_paving() {
            Some(self.rank_size_nonbases())
        } else {
            None
        }
    }
}

impl core::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Matroid(n={}, r={}, {} bases)", self.n, self.r, self.bases.len())
    }
}

fn relabel_dense(s: ElemSet, map: &[usize]) -> ElemSet {
    // map is ascending old ids; position = new id
    ElemSet::from_iter(
        map.iter().enumerate().filter(|(_, &old)| s.contains(old)).map(|(new, _)| new),
    )
}
