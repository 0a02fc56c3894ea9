//! Isomorphism and automorphism search on explicit matroids.
//!
//! Backtracking over element images in id order. Pruning: candidate images
//! must match basis-incidence counts (equivalently non-basis incidence, since
//! n and r are fixed), and every r-set that becomes fully assigned must map
//! basis -> basis and non-basis -> non-basis. Candidates are tried ascending,
//! so found bijections are deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::matroid::{Matroid, MatroidError};
use crate::set::{binom, subsets_lex, ElemSet};

/// Searches for a bijection sigma with sigma(B(m1)) = B(m2).
pub fn find_isomorphism(m1: &Matroid, m2: &Matroid) -> Option<Vec<usize>> {
    let allowed = vec![ElemSet::full(m2.n()); m1.n()];
    find_isomorphism_constrained(m1, m2, &allowed)
}

/// Isomorphism search with per-element image restrictions: sigma(e) must lie
/// in allowed[e]. Used for automorphisms that carry prescribed sets onto
/// prescribed sets.
pub fn find_isomorphism_constrained(
    m1: &Matroid,
    m2: &Matroid,
    allowed: &[ElemSet],
) -> Option<Vec<usize>> {
    let mut search = Search::new(m1, m2, allowed)?;
    search.run(0, false);
    search.first
}

/// Number of bijections fixing the basis family setwise. Exhaustive search,
/// refused above n = 12.
pub fn automorphism_count(m: &Matroid) -> Result<u64, MatroidError> {
    const LIMIT: usize = 12;
    if m.n() > LIMIT {
        return Err(MatroidError::TooLargeForSearch { n: m.n(), limit: LIMIT });
    }
    let allowed = vec![ElemSet::full(m.n()); m.n()];
    let mut search = match Search::new(m, m, &allowed) {
        Some(s) => s,
        None => return Ok(0),
    };
    search.run(0, true);
    Ok(search.count)
}

/// Applies a bijection to every basis; the result is sorted.
pub fn map_basis_family(bases: &[ElemSet], sigma: &[usize]) -> Vec<ElemSet> {
    let mut mapped: Vec<ElemSet> = bases
        .iter()
        .map(|b| ElemSet::from_iter(b.iter().map(|e| sigma[e])))
        .collect();
    mapped.sort_unstable();
    mapped
}

/// Non-basis r-sets become worth bucketing only below this enumeration size.
const NONBASIS_ENUM_LIMIT: u64 = 100_000;

struct Search<'a> {
    n: usize,
    m2: &'a Matroid,
    cand: Vec<Vec<usize>>,
    bases_by_max: Vec<Vec<ElemSet>>,
    nonbases_by_max: Vec<Vec<ElemSet>>,
    sigma: Vec<usize>,
    used: ElemSet,
    count: u64,
    first: Option<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(m1: &'a Matroid, m2: &'a Matroid, allowed: &[ElemSet]) -> Option<Search<'a>> {
        let n = m1.n();
        if n != m2.n() || m1.rank() != m2.rank() || m1.num_bases() != m2.num_bases() {
            return None;
        }
        debug_assert_eq!(allowed.len(), n);

        let inc1 = incidence(m1);
        let inc2 = incidence(m2);
        let mut cand: Vec<Vec<usize>> = Vec::with_capacity(n);
        for e in 0..n {
            let c: Vec<usize> =
                allowed[e].iter().filter(|&f| f < n && inc2[f] == inc1[e]).collect();
            if c.is_empty() {
                return None;
            }
            cand.push(c);
        }

        let mut bases_by_max = vec![Vec::new(); n];
        for &b in m1.bases() {
            if let Some(mx) = b.iter().last() {
                bases_by_max[mx].push(b);
            }
        }
        let mut nonbases_by_max = vec![Vec::new(); n];
        if binom(n, m1.rank()) <= NONBASIS_ENUM_LIMIT {
            for s in subsets_lex(n, m1.rank()) {
                if !m1.is_basis(s) {
                    if let Some(mx) = s.iter().last() {
                        nonbases_by_max[mx].push(s);
                    }
                }
            }
        }

        Some(Search {
            n,
            m2,
            cand,
            bases_by_max,
            nonbases_by_max,
            sigma: vec![usize::MAX; n],
            used: ElemSet::EMPTY,
            count: 0,
            first: None,
        })
    }

    /// Depth-first over elements 0..n. Returns true to stop the search
    /// (find mode succeeded).
    fn run(&mut self, e: usize, count_all: bool) -> bool {
        if e == self.n {
            if count_all {
                self.count += 1;
                return false;
            }
            self.first = Some(self.sigma.clone());
            return true;
        }
        for i in 0..self.cand[e].len() {
            let f = self.cand[e][i];
            if self.used.contains(f) {
                continue;
            }
            self.sigma[e] = f;
            if self.consistent(e) {
                self.used = self.used.insert(f);
                if self.run(e + 1, count_all) {
                    return true;
                }
                self.used = self.used.remove(f);
            }
        }
        self.sigma[e] = usize::MAX;
        false
    }

    /// Every r-set whose largest element is e is now fully assigned; its
    /// image must be on the correct side of the target family.
    fn consistent(&self, e: usize) -> bool {
        for b in &self.bases_by_max[e] {
            if !self.m2.is_basis(self.image(*b)) {
                return false;
            }
        }
        for s in &self.nonbases_by_max[e] {
            if self.m2.is_basis(self.image(*s)) {
                return false;
            }
        }
        true
    }

    fn image(&self, s: ElemSet) -> ElemSet {
        ElemSet::from_iter(s.iter().map(|x| self.sigma[x]))
    }
}

fn incidence(m: &Matroid) -> Vec<usize> {
    let mut inc = vec![0usize; m.n()];
    for b in m.bases() {
        for e in b.iter() {
            inc[e] += 1;
        }
    }
    inc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_r10;

    #[test]
    fn uniform_self_isomorphism() {
        let m = Matroid::make_uniform(2, 4).unwrap();
        let sigma = find_isomorphism(&m, &m).unwrap();
        assert_eq!(sigma, vec![0, 1, 2, 3]);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let m1 = Matroid::make_uniform(2, 4).unwrap();
        let m2 = Matroid::make_uniform(2, 5).unwrap();
        assert!(find_isomorphism(&m1, &m2).is_none());
    }

    #[test]
    fn uniform_automorphism_counts() {
        assert_eq!(automorphism_count(&Matroid::make_uniform(2, 4).unwrap()).unwrap(), 24);
        assert_eq!(automorphism_count(&Matroid::make_uniform(1, 3).unwrap()).unwrap(), 6);
        assert!(automorphism_count(&Matroid::make_uniform(1, 13).unwrap()).is_err());
    }

    #[test]
    fn r10_automorphism_count_regression() {
        // recorded from an independent brute force over all 10! permutations;
        // the group is S6 (10 elements = splits of a 6-set into triple pairs),
        // six times larger than the 120 edge maps induced by K5 itself
        assert_eq!(automorphism_count(&make_r10()).unwrap(), 720);
    }

    #[test]
    fn r10_relabeling_is_found_and_verified() {
        let m = make_r10();
        let perm: [usize; 10] = [7, 2, 9, 4, 0, 5, 1, 8, 3, 6];
        let relabeled = Matroid::from_bases(10, map_basis_family(m.bases(), &perm)).unwrap();
        let sigma = find_isomorphism(&m, &relabeled).expect("relabeling must be found");
        assert_eq!(map_basis_family(m.bases(), &sigma), relabeled.bases());
    }

    #[test]
    fn r10_is_self_dual() {
        let m = make_r10();
        let d = m.dual();
        let sigma = find_isomorphism(&d, &m).expect("dual must be isomorphic");
        assert_eq!(map_basis_family(d.bases(), &sigma), m.bases());
    }

    #[test]
    fn constrained_search_respects_restrictions() {
        let m = Matroid::make_uniform(2, 4).unwrap();
        // force 0 -> 3 and pin the rest to two-element ranges
        let allowed = vec![
            ElemSet::singleton(3),
            ElemSet::from_iter([0, 1]),
            ElemSet::from_iter([1, 2]),
            ElemSet::from_iter([0, 2]),
        ];
        let sigma = find_isomorphism_constrained(&m, &m, &allowed).unwrap();
        assert_eq!(sigma[0], 3);
        for e in 1..4 {
            assert!(allowed[e].contains(sigma[e]));
        }
        let mut image: Vec<usize> = sigma.clone();
        image.sort_unstable();
        assert_eq!(image, vec![0, 1, 2, 3]);
    }
}
