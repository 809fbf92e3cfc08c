//! Small immutable graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` adjacency row. All operations return new
//! graphs; a `Graph` is never mutated after construction, so values can be
//! shared freely between enumeration workers.

mod blocks;
pub mod canon;
pub mod graph6;

use std::fmt;

pub use blocks::BlockDecomposition;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// A set of vertices packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn remove(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph with word-packed adjacency rows.
///
/// Invariants: rows are symmetric, irreflexive and carry no bits at or
/// above `n`; `m` is half the total popcount.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    m: usize,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::OrderOutOfRange(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Builds a graph from adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = VertexSet::full(n).0;
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let bad = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::LoopEdge(v));
            }
            for u in VertexSet(row) {
                if (rows[u] >> v) & 1 == 0 {
                    return Err(Error::InvalidParams(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        let twice: u32 = adj.iter().map(|r| r.count_ones()).sum();
        Graph {
            adj,
            m: (twice / 2) as usize,
        }
    }

    /// Edgeless graph `nK_1`. Panics unless `1 <= n <= 64`.
    pub fn empty(n: usize) -> Graph {
        assert!((1..=MAX_ORDER).contains(&n), "order {n} out of range");
        Graph::from_rows_unchecked(vec![0; n])
    }

    /// Complete graph `K_n`. Panics unless `1 <= n <= 64`.
    pub fn complete(n: usize) -> Graph {
        assert!((1..=MAX_ORDER).contains(&n), "order {n} out of range");
        let all = VertexSet::full(n).0;
        Graph::from_rows_unchecked((0..n).map(|v| all & !(1 << v)).collect())
    }

    /// Path `P_n` on vertices `0 - 1 - .. - n-1`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path order out of range")
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle order out of range")
    }

    /// Star `K_{1,n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges).expect("star order out of range")
    }

    /// Wheel with hub 0 and a rim cycle on `1..=spokes`.
    pub fn wheel(spokes: usize) -> Graph {
        assert!(spokes >= 3);
        let mut edges: Vec<_> = (1..=spokes).map(|v| (0, v)).collect();
        edges.extend((1..=spokes).map(|v| (v, v % spokes + 1)));
        Graph::from_edges(spokes + 1, &edges).expect("wheel order out of range")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &row)| {
            VertexSet(row & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Number of vertex pairs, `n(n-1)/2`.
    #[inline]
    pub fn pair_count(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.pair_count()
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices().0;
        Graph::from_rows_unchecked(
            self.adj
                .iter()
                .enumerate()
                .map(|(v, &row)| !row & all & !(1 << v))
                .collect(),
        )
    }

    /// `self + other`: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n();
        check_order(n1 + other.n())?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << n1));
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// `self ∨ other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n();
        let n2 = other.n();
        check_order(n1 + n2)?;
        let left = VertexSet::full(n1).0;
        let right = VertexSet::full(n2).0 << n1;
        let mut adj: Vec<u64> = self.adj.iter().map(|&r| r | right).collect();
        adj.extend(other.adj.iter().map(|&r| (r << n1) | left));
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// `G[S]`, relabelled to `0..|S|` in increasing vertex order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if !s.is_subset(self.vertices()) {
            let bad = s.difference(self.vertices()).first().unwrap_or(64);
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n(),
            });
        }
        let members = s.to_vec();
        let adj = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.has_edge(v, u))
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// `G - S`.
    pub fn remove_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.induced(self.vertices().difference(s))
    }

    /// `e_G(A, B)`: number of edges with one end in `a` and the other in `b`.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> Result<usize> {
        if !a.is_disjoint(b) {
            return Err(Error::OverlappingSets);
        }
        Ok(a.iter()
            .map(|v| (self.adj[v] & b.0).count_ones() as usize)
            .sum())
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reachable_within(v, rest);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_within(0, self.vertices()) == self.vertices()
    }

    /// Two-colouring of a component, if it has one.
    pub fn is_bipartite_within(&self, comp: VertexSet) -> bool {
        let Some(start) = comp.first() else {
            return true;
        };
        let mut side = [0u64; 2];
        side[0] = 1 << start;
        let mut frontier = side[0];
        let mut parity = 0;
        let mut seen = frontier;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= comp.0;
            if next & side[parity] != 0 {
                return false;
            }
            parity ^= 1;
            side[parity] |= next;
            next &= !seen;
            seen |= next;
            frontier = next;
        }
        side[0] & side[1] == 0
    }

    pub fn with_edges_added(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        let n = self.n();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    pub fn with_edge_removed(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph::from_rows_unchecked(adj)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![0u64; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_rows_unchecked(adj)
    }

    /// True when every edge of `self` is an edge of `other` (same labels).
    pub fn is_edge_subset_of(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    pub fn block_decomposition(&self) -> Result<BlockDecomposition> {
        blocks::decompose(self)
    }

    /// Nonseparable, or connectivity 1 with exactly two end-blocks.
    pub fn is_block_chain(&self) -> Result<bool> {
        let bd = self.block_decomposition()?;
        Ok(bd.cut_vertices.is_empty() || bd.end_block_count == 2)
    }

    /// Connected, at least three vertices and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n() >= 3
            && self.is_connected()
            && self
                .block_decomposition()
                .map(|bd| bd.cut_vertices.is_empty())
                .unwrap_or(false)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        graph6::decode(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {})", self.n(), self.m, self.to_graph6())
    }
}
