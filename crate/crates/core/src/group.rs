//! Abelian groups for element labels: cyclic groups, the integers, and
//! finite products. Integer arithmetic is exact and checked; overflow is an
//! error, never a silent wrap.

use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianGroup {
    /// Z_m, residues 0..m, m >= 1.
    Cyclic(u64),
    /// Z with checked signed 64-bit values.
    Integers,
    /// Direct product; elements are tuples in component order.
    Product(Vec<AbelianGroup>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElem {
    Cyclic(u64),
    Int(i64),
    Tuple(Vec<GroupElem>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    NotInGroup,
    Overflow,
}

impl core::fmt::Display for GroupError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupError::NotInGroup => f.write_str("element does not belong to the group"),
            GroupError::Overflow => f.write_str("integer label arithmetic overflowed"),
        }
    }
}

impl AbelianGroup {
    pub fn identity(&self) -> GroupElem {
        match self {
            AbelianGroup::Cyclic(_) => GroupElem::Cyclic(0),
            AbelianGroup::Integers => GroupElem::Int(0),
            AbelianGroup::Product(parts) => {
                GroupElem::Tuple(parts.iter().map(|p| p.identity()).collect())
            }
        }
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        match (self, g) {
            (AbelianGroup::Cyclic(m), GroupElem::Cyclic(v)) => v < m,
            (AbelianGroup::Integers, GroupElem::Int(_)) => true,
            (AbelianGroup::Product(parts), GroupElem::Tuple(vals)) => {
                parts.len() == vals.len()
                    && parts.iter().zip(vals).all(|(p, v)| p.contains(v))
            }
            _ => false,
        }
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem, GroupError> {
        match (self, a, b) {
            (AbelianGroup::Cyclic(m), GroupElem::Cyclic(x), GroupElem::Cyclic(y)) => {
                debug_assert!(*m >= 1 && x < m && y < m);
                Ok(GroupElem::Cyclic(((*x as u128 + *y as u128) % *m as u128) as u64))
            }
            (AbelianGroup::Integers, GroupElem::Int(x), GroupElem::Int(y)) => {
                x.checked_add(*y).map(GroupElem::Int).ok_or(GroupError::Overflow)
            }
            (AbelianGroup::Product(parts), GroupElem::Tuple(xs), GroupElem::Tuple(ys)) => {
                if parts.len() != xs.len() || parts.len() != ys.len() {
                    return Err(GroupError::NotInGroup);
                }
                let mut out = Vec::with_capacity(parts.len());
                for ((p, x), y) in parts.iter().zip(xs).zip(ys) {
                    out.push(p.add(x, y)?);
                }
                Ok(GroupElem::Tuple(out))
            }
            _ => Err(GroupError::NotInGroup),
        }
    }

    pub fn neg(&self, a: &GroupElem) -> Result<GroupElem, GroupError> {
        match (self, a) {
            (AbelianGroup::Cyclic(m), GroupElem::Cyclic(x)) => {
                debug_assert!(*m >= 1 && x < m);
                Ok(GroupElem::Cyclic(if *x == 0 { 0 } else { m - x }))
            }
            (AbelianGroup::Integers, GroupElem::Int(x)) => {
                x.checked_neg().map(GroupElem::Int).ok_or(GroupError::Overflow)
            }
            (AbelianGroup::Product(parts), GroupElem::Tuple(xs)) => {
                if parts.len() != xs.len() {
                    return Err(GroupError::NotInGroup);
                }
                let mut out = Vec::with_capacity(parts.len());
                for (p, x) in parts.iter().zip(xs) {
                    out.push(p.neg(x)?);
                }
                Ok(GroupElem::Tuple(out))
            }
            _ => Err(GroupError::NotInGroup),
        }
    }

    pub fn sub(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem, GroupError> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    /// Group order; None for anything containing the integers.
    pub fn order(&self) -> Option<u64> {
        match self {
            AbelianGroup::Cyclic(m) => Some(*m),
            AbelianGroup::Integers => None,
            AbelianGroup::Product(parts) => {
                let mut total: u64 = 1;
                for p in parts {
                    total = total.checked_mul(p.order()?)?;
                }
                Some(total)
            }
        }
    }

    /// All elements of a finite group, in a fixed enumeration order. None if
    /// infinite. Callers guard the size via order().
    pub fn elements(&self) -> Option<Vec<GroupElem>> {
        match self {
            AbelianGroup::Cyclic(m) => Some((0..*m).map(GroupElem::Cyclic).collect()),
            AbelianGroup::Integers => None,
            AbelianGroup::Product(parts) => {
                let mut out = alloc::vec![GroupElem::Tuple(Vec::new())];
                for p in parts {
                    let part_elems = p.elements()?;
                    let mut next = Vec::with_capacity(out.len() * part_elems.len());
                    for prefix in &out {
                        for pe in &part_elems {
                            let mut tuple = match prefix {
                                GroupElem::Tuple(t) => t.clone(),
                                _ => unreachable!(),
                            };
                            tuple.push(pe.clone());
                            next.push(GroupElem::Tuple(tuple));
                        }
                    }
                    out = next;
                }
                Some(out)
            }
        }
    }
}

impl core::fmt::Display for GroupElem {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupElem::Cyclic(v) => write!(f, "{}", v),
            GroupElem::Int(v) => write!(f, "{}", v),
            GroupElem::Tuple(vals) => {
                for (i, v) in vals.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", v)?;
                }
                Ok(())
            }
        }
    }
}
