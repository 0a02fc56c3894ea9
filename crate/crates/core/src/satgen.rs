//! CNF encodings whose models are 2r-element rank-r basis families where the
//! two fixed complementary bases admit no SI-ordering, plus DIMACS emission,
//! model decoding, independent model verification, and blocking clauses for
//! model enumeration.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::matroid::Matroid;
use crate::ordering::windows;
use crate::set::{binom, permutations, subsets_colex, ElemSet};
use crate::sibo::find_si_ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatError {
    RankOutOfRange { r: usize },
    WrongSubsetSize { got: usize, expected: usize },
    SubsetOutOfGround { n: usize },
    VarOutOfRange { var: usize, num_vars: usize },
    BadLiteral { lit: i32 },
    EmptyClause,
}

impl core::fmt::Display for SatError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SatError::RankOutOfRange { r } => write!(f, "rank {r} outside supported range 1..=6"),
            SatError::WrongSubsetSize { got, expected } => {
                write!(f, "subset has {got} elements, expected {expected}")
            }
            SatError::SubsetOutOfGround { n } => {
                write!(f, "subset leaves the {n}-element ground set")
            }
            SatError::VarOutOfRange { var, num_vars } => {
                write!(f, "variable {var} outside 1..={num_vars}")
            }
            SatError::BadLiteral { lit } => write!(f, "literal {lit} out of range"),
            SatError::EmptyClause => f.write_str("empty clause"),
        }
    }
}

/// Bijection between the r-subsets of a 2r-element ground set and the DIMACS
/// variables 1..=C(2r, r), by colexicographic rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetVarMap {
    r: usize,
}

impl SubsetVarMap {
    pub fn new(r: usize) -> SubsetVarMap {
        SubsetVarMap { r }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        2 * self.r
    }

    pub fn num_vars(&self) -> usize {
        binom(2 * self.r, self.r) as usize
    }

    pub fn var(&self, s: ElemSet) -> Result<usize, SatError> {
        if s.len() != self.r {
            return Err(SatError::WrongSubsetSize { got: s.len(), expected: self.r });
        }
        if !s.is_subset_of(ElemSet::full(self.n())) {
            return Err(SatError::SubsetOutOfGround { n: self.n() });
        }
        let mut rank = 0u64;
        for (t, e) in s.iter().enumerate() {
            rank += binom(e, t + 1);
        }
        Ok(rank as usize + 1)
    }

    pub fn subset(&self, var: usize) -> Result<ElemSet, SatError> {
        if var == 0 || var > self.num_vars() {
            return Err(SatError::VarOutOfRange { var, num_vars: self.num_vars() });
        }
        let mut rem = (var - 1) as u64;
        let mut out = ElemSet::EMPTY;
        for t in (1..=self.r).rev() {
            // largest e with C(e, t) <= rem
            let mut e = t - 1;
            while binom(e + 1, t) <= rem {
                e += 1;
            }
            rem -= binom(e, t);
            out = out.insert(e);
        }
        Ok(out)
    }
}

/// Clause provenance: which constraint family a clause came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseFamily {
    Exchange,
    FixedBasis,
    NoOrdering,
    SparsePairs,
    Blocking,
}

/// A CNF over variables 1..=num_vars, clauses kept in emission order with a
/// family tag each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
    tags: Vec<ClauseFamily>,
}

impl CnfFormula {
    pub fn new(num_vars: usize) -> CnfFormula {
        CnfFormula { num_vars, clauses: Vec::new(), tags: Vec::new() }
    }

    pub fn add_clause(&mut self, family: ClauseFamily, lits: Vec<i32>) -> Result<(), SatError> {
        if lits.is_empty() {
            return Err(SatError::EmptyClause);
        }
        for &lit in &lits {
            if lit == 0 || lit.unsigned_abs() as usize > self.num_vars {
                return Err(SatError::BadLiteral { lit });
            }
        }
        self.clauses.push(lits);
        self.tags.push(family);
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn family_count(&self, family: ClauseFamily) -> usize {
        self.tags.iter().filter(|&&t| t == family).count()
    }

    pub fn family_clauses(
        &self,
        family: ClauseFamily,
    ) -> impl Iterator<Item = &Vec<i32>> + '_ {
        self.clauses
            .iter()
            .zip(self.tags.iter())
            .filter(move |(_, &t)| t == family)
            .map(|(c, _)| c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CnfOptions {
    /// Also forbid two non-bases meeting in r-1 elements (sparse paving).
    pub sparse_paving: bool,
    /// Propagate the two fixed-basis units: drop clauses satisfied by them
    /// and remove their negations from the rest. Off by default; the raw
    /// emission keeps the conflicting (0, r) literal of the ordering family.
    pub simplify_units: bool,
}

/// Builds the formula over x_B for B an r-subset of [2r] saying: the true
/// variables satisfy basis exchange, [r] and its complement are bases, and
/// no ordering pair of those two bases has every window a basis. Clause
/// families in order: exchange, fixed-basis units, per-permutation ordering
/// clauses, then optionally the sparse pair clauses.
pub fn build_non_sibo_cnf(r: usize, opts: CnfOptions) -> Result<CnfFormula, SatError> {
    if !(1..=6).contains(&r) {
        return Err(SatError::RankOutOfRange { r });
    }
    let map = SubsetVarMap::new(r);
    let n = map.n();
    let mut cnf = CnfFormula::new(map.num_vars());
    let var = |s: ElemSet| map.var(s).expect("r-subset of the ground set") as i32;

    let subsets: Vec<ElemSet> = subsets_colex(n, r).collect();
    for &a in &subsets {
        for &b in &subsets {
            for e in a.diff(b).iter() {
                let mut lits = alloc::vec![-var(a), -var(b)];
                for f in b.diff(a).iter() {
                    lits.push(var(a.remove(e).insert(f)));
                }
                cnf.add_clause(ClauseFamily::Exchange, lits)?;
            }
        }
    }

    let front = ElemSet::full(r);
    let back = ElemSet::full(n).diff(front);
    cnf.add_clause(ClauseFamily::FixedBasis, alloc::vec![var(front)])?;
    cnf.add_clause(ClauseFamily::FixedBasis, alloc::vec![var(back)])?;

    for pa in permutations(&front.to_vec()) {
        for pb in permutations(&back.to_vec()) {
            // windows 0 <= i < j <= r: a-prefix 1..=i, b-segment i+1..=j,
            // a-suffix j+1..=r; (0, r) is the back basis itself
            let mut lits = Vec::with_capacity(r * (r + 1) / 2);
            for w in windows(r) {
                let mut s = ElemSet::EMPTY;
                for t in 1..=r {
                    s = s.insert(if t >= w.i && t <= w.j { pb[t - 1] } else { pa[t - 1] });
                }
                lits.push(-var(s));
            }
            cnf.add_clause(ClauseFamily::NoOrdering, lits)?;
        }
    }

    if opts.sparse_paving {
        for (iu, &s) in subsets.iter().enumerate() {
            for &t in &subsets[iu + 1..] {
                if s.inter(t).len() == r - 1 {
                    cnf.add_clause(ClauseFamily::SparsePairs, alloc::vec![var(s), var(t)])?;
                }
            }
        }
    }

    if opts.simplify_units {
        let units = [var(front), var(back)];
        let mut kept = Vec::new();
        let mut kept_tags = Vec::new();
        for (clause, tag) in cnf.clauses.iter().zip(cnf.tags.iter()) {
            if tag == &ClauseFamily::FixedBasis {
                kept.push(clause.clone());
                kept_tags.push(*tag);
                continue;
            }
            if clause.iter().any(|l| units.contains(l)) {
                continue;
            }
            let reduced: Vec<i32> =
                clause.iter().copied().filter(|l| !units.contains(&-l)).collect();
            if reduced.is_empty() {
                return Err(SatError::EmptyClause);
            }
            kept.push(reduced);
            kept_tags.push(*tag);
        }
        cnf.clauses = kept;
        cnf.tags = kept_tags;
    }

    Ok(cnf)
}

/// Standard DIMACS CNF text: header line, then each clause 0-terminated in
/// stored order. Byte-identical across runs on the same formula.
pub fn emit_dimacs(cnf: &CnfFormula) -> String {
    let mut out = String::with_capacity(16 + cnf.clauses().len() * 8);
    let _ = writeln!(out, "p cnf {} {}", cnf.num_vars(), cnf.clauses().len());
    for clause in cnf.clauses() {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

/// A satisfying assignment read back as a basis family candidate. Decoding
/// performs no validation; verify_model does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedModel {
    pub n: usize,
    pub bases: Vec<ElemSet>,
    pub front: ElemSet,
    pub back: ElemSet,
}

/// Reads the true variables off as r-subsets. assignment[v-1] is the truth
/// value of variable v.
pub fn decode_model(map: &SubsetVarMap, assignment: &[bool]) -> Result<DecodedModel, SatError> {
    if assignment.len() != map.num_vars() {
        return Err(SatError::VarOutOfRange {
            var: assignment.len(),
            num_vars: map.num_vars(),
        });
    }
    let mut bases = Vec::new();
    for (idx, &val) in assignment.iter().enumerate() {
        if val {
            bases.push(map.subset(idx + 1)?);
        }
    }
    bases.sort_unstable();
    let front = ElemSet::full(map.r());
    let back = ElemSet::full(map.n()).diff(front);
    Ok(DecodedModel { n: map.n(), bases, front, back })
}

/// Independent re-check of a decoded model: the true variables must form a
/// valid basis family containing both fixed sets, and the fixed pair must
/// have no SI-ordering. The ordering clauses put the back set in the middle
/// segment, so the pair is checked in that direction. Shares no code with
/// the encoder.
pub fn verify_model(decoded: &DecodedModel) -> bool {
    let m = match Matroid::from_bases(decoded.n, decoded.bases.clone()) {
        Ok(m) => m,
        Err(_) => return false,
    };
    if !m.is_basis(decoded.front) || !m.is_basis(decoded.back) {
        return false;
    }
    matches!(find_si_ordering(&m, decoded.back, decoded.front), Ok(None))
}

/// Appends the clause negating the given full assignment, so the exact model
/// cannot recur.
pub fn block_exact_model(cnf: &mut CnfFormula, assignment: &[bool]) -> Result<(), SatError> {
    let mut lits = Vec::with_capacity(assignment.len());
    for (idx, &val) in assignment.iter().enumerate() {
        let v = (idx + 1) as i32;
        lits.push(if val { -v } else { v });
    }
    cnf.add_clause(ClauseFamily::Blocking, lits)
}

/// Appends one blocking clause per distinct relabeling of the given basis
/// family under all n! ground set permutations, forbidding every isomorphic
/// placement. Relabelings agreeing as families (permutations differing by an
/// automorphism) are deduplicated, so the clause count is n!/|Aut|.
pub fn block_isomorphs(
    cnf: &mut CnfFormula,
    map: &SubsetVarMap,
    m: &Matroid,
) -> Result<usize, SatError> {
    if m.n() != map.n() || m.rank() != map.r() {
        return Err(SatError::WrongSubsetSize { got: m.rank(), expected: map.r() });
    }
    let mut families: BTreeSet<Vec<ElemSet>> = BTreeSet::new();
    let idents: Vec<usize> = (0..m.n()).collect();
    for sigma in permutations(&idents) {
        families.insert(crate::iso::map_basis_family(m.bases(), &sigma));
    }
    let count = families.len();
    for family in families {
        let mut truths = alloc::vec![false; map.num_vars()];
        for b in family {
            truths[map.var(b)? - 1] = true;
        }
        block_exact_model(cnf, &truths)?;
    }
    Ok(count)
}
