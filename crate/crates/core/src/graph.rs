//! Graphs, graphic matroids, and the even-cycle matroid of K5.

use alloc::vec;
use alloc::vec::Vec;

use crate::matroid::Matroid;
use crate::set::{subsets_lex, ElemSet, MAX_N};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    LoopEdge { index: usize },
    VertexOutOfRange { index: usize, v: usize },
    TooManyEdges { m: usize },
    Disconnected,
}

impl core::fmt::Display for GraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphError::LoopEdge { index } => write!(f, "edge {} is a loop", index),
            GraphError::VertexOutOfRange { index, v } => {
                write!(f, "edge {} names a vertex outside 0..{}", index, v)
            }
            GraphError::TooManyEdges { m } => {
                write!(f, "{} edges exceed the supported maximum {}", m, MAX_N)
            }
            GraphError::Disconnected => f.write_str("graph is not connected"),
        }
    }
}

/// Undirected graph with a fixed edge order; edge ids index into `edges`.
/// Parallel edges are allowed, loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    pub v: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(v: usize, edges: Vec<(usize, usize)>) -> Result<Graph, GraphError> {
        if edges.len() > MAX_N {
            return Err(GraphError::TooManyEdges { m: edges.len() });
        }
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a == b {
                return Err(GraphError::LoopEdge { index: i });
            }
            if a >= v || b >= v {
                return Err(GraphError::VertexOutOfRange { index: i, v });
            }
        }
        Ok(Graph { v, edges })
    }

    /// True iff the edge subset connects all v vertices.
    fn spans(&self, s: ElemSet) -> bool {
        let mut uf = UnionFind::new(self.v);
        for e in s.iter() {
            let (a, b) = self.edges[e];
            uf.union(a, b);
        }
        (1..self.v).all(|x| uf.find(x) == uf.find(0))
    }
}

/// Graphic matroid of a connected graph: ground set = edge ids, bases =
/// spanning trees.
pub fn make_graphic(g: &Graph) -> Result<Matroid, GraphError> {
    if g.v == 0 || !g.spans(ElemSet::full(g.edges.len())) {
        return Err(GraphError::Disconnected);
    }
    let r = g.v - 1;
    // r edges spanning v vertices are automatically acyclic
    let bases: Vec<ElemSet> = subsets_lex(g.edges.len(), r).filter(|&s| g.spans(s)).collect();
    Ok(Matroid::trusted(g.edges.len(), r, bases))
}

/// Edges of K5 on vertices 0..4 in the fixed order used everywhere in this
/// crate: (0,1), (0,2), (0,3), (0,4), (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
pub const K5_EDGES: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Edge id of {u, v} in K5 under the fixed order.
pub fn k5_edge_id(u: usize, v: usize) -> usize {
    debug_assert!(u < 5 && v < 5 && u != v);
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    // edges with min vertex a precede: 4 + 3 + .. = a*(9-a)/2 of them
    a * (9 - a) / 2 + (b - a - 1)
}

/// The rank-5 even-cycle matroid of K5: a 5-edge subset is a basis iff its
/// subgraph contains exactly one odd cycle and no even cycle.
pub fn make_r10() -> Matroid {
    let g = Graph::new(5, K5_EDGES.to_vec()).expect("K5 is well formed");
    let bases: Vec<ElemSet> = subsets_lex(10, 5)
        .filter(|&s| {
            let (odd, even) = count_cycles(&g, s);
            odd == 1 && even == 0
        })
        .collect();
    Matroid::trusted(10, 5, bases)
}

/// Counts (odd, even) simple cycles among the subsets of the given edge set.
/// A simple cycle is a nonempty edge set that is connected with every touched
/// vertex of degree exactly 2.
fn count_cycles(g: &Graph, s: ElemSet) -> (usize, usize) {
    let mut odd = 0;
    let mut even = 0;
    // walk all nonempty submasks of s
    let mask = s.0;
    let mut sub = mask;
    while sub != 0 {
        let c = ElemSet(sub);
        if is_simple_cycle(g, c) {
            if c.len() % 2 == 1 {
                odd += 1;
            } else {
                even += 1;
            }
        }
        sub = (sub - 1) & mask;
    }
    (odd, even)
}

#[allow(clippy::needless_range_loop)] // x is a vertex id, not just an index
fn is_simple_cycle(g: &Graph, c: ElemSet) -> bool {
    if c.is_empty() {
        return false;
    }
    let mut deg = vec![0usize; g.v];
    let mut uf = UnionFind::new(g.v);
    for e in c.iter() {
        let (a, b) = g.edges[e];
        deg[a] += 1;
        deg[b] += 1;
        uf.union(a, b);
    }
    let mut root: Option<usize> = None;
    for x in 0..g.v {
        if deg[x] == 0 {
            continue;
        }
        if deg[x] != 2 {
            return false;
        }
        let rx = uf.find(x);
        match root {
            None => root = Some(rx),
            Some(r0) if r0 == rx => {}
            Some(_) => return false,
        }
    }
    true
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
