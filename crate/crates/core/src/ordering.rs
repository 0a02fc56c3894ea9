//! Paired orderings of two disjoint sets and the window sets they induce.

use alloc::vec::Vec;

use crate::set::ElemSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingError {
    LengthMismatch,
    RepeatedElement,
    NotDisjoint,
}

impl core::fmt::Display for OrderingError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            OrderingError::LengthMismatch => f.write_str("orderings have different lengths"),
            OrderingError::RepeatedElement => f.write_str("ordering repeats an element"),
            OrderingError::NotDisjoint => f.write_str("the two ordered sets are not disjoint"),
        }
    }
}

/// Orderings (a_1..a_r) of A and (b_1..b_r) of B for disjoint equal-size A, B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingPair {
    a: Vec<usize>,
    b: Vec<usize>,
}

impl OrderingPair {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<OrderingPair, OrderingError> {
        if a.len() != b.len() {
            return Err(OrderingError::LengthMismatch);
        }
        let a_set = ElemSet::from_iter(a.iter().copied());
        let b_set = ElemSet::from_iter(b.iter().copied());
        if a_set.len() != a.len() || b_set.len() != b.len() {
            return Err(OrderingError::RepeatedElement);
        }
        if !a_set.is_disjoint_from(b_set) {
            return Err(OrderingError::NotDisjoint);
        }
        Ok(OrderingPair { a, b })
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn a_set(&self) -> ElemSet {
        ElemSet::from_iter(self.a.iter().copied())
    }

    pub fn b_set(&self) -> ElemSet {
        ElemSet::from_iter(self.b.iter().copied())
    }

    /// The same pair with the roles of the two orderings exchanged.
    pub fn swapped(&self) -> OrderingPair {
        OrderingPair { a: self.b.clone(), b: self.a.clone() }
    }
}

/// 1-based window 1 <= i <= j <= r.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Window {
    pub i: usize,
    pub j: usize,
}

impl Window {
    pub fn new(i: usize, j: usize) -> Window {
        debug_assert!(1 <= i && i <= j);
        Window { i, j }
    }
}

/// All windows of length-r orderings in lexicographic (i, j) order.
pub fn windows(r: usize) -> impl Iterator<Item = Window> {
    (1..=r).flat_map(move |i| (i..=r).map(move |j| Window { i, j }))
}

/// The window set {b_1..b_{i-1}, a_i..a_j, b_{j+1}..b_r}: B with its middle
/// segment replaced by the corresponding segment of A.
pub fn window_set(pair: &OrderingPair, w: Window) -> ElemSet {
    let r = pair.r();
    debug_assert!(1 <= w.i && w.i <= w.j && w.j <= r);
    let mut out = ElemSet::EMPTY;
    for k in 1..=r {
        let e = if k >= w.i && k <= w.j { pair.a[k - 1] } else { pair.b[k - 1] };
        out = out.insert(e);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn validation() {
        assert!(OrderingPair::new(vec![0, 1], vec![2, 3]).is_ok());
        assert_eq!(
            OrderingPair::new(vec![0, 1], vec![2]),
            Err(OrderingError::LengthMismatch)
        );
        assert_eq!(
            OrderingPair::new(vec![0, 0], vec![2, 3]),
            Err(OrderingError::RepeatedElement)
        );
        assert_eq!(
            OrderingPair::new(vec![0, 1], vec![1, 2]),
            Err(OrderingError::NotDisjoint)
        );
    }

    #[test]
    fn window_sets() {
        let pair = OrderingPair::new(vec![10, 11, 12], vec![20, 21, 22]).unwrap();
        // (1, r) is all of A
        assert_eq!(window_set(&pair, Window::new(1, 3)), pair.a_set());
        // (1, 1) swaps only the first slot
        assert_eq!(window_set(&pair, Window::new(1, 1)), ElemSet::from_iter([10, 21, 22]));
        // (2, 3) keeps b_1 and takes a_2, a_3
        assert_eq!(window_set(&pair, Window::new(2, 3)), ElemSet::from_iter([20, 11, 12]));
        assert_eq!(window_set(&pair, Window::new(2, 2)), ElemSet::from_iter([20, 11, 22]));
    }

    #[test]
    fn window_enumeration() {
        let ws: Vec<Window> = windows(3).collect();
        assert_eq!(ws.len(), 6);
        assert_eq!(ws[0], Window::new(1, 1));
        assert_eq!(ws[5], Window::new(3, 3));
        assert_eq!(windows(1).count(), 1);
    }
}
