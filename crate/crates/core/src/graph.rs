//! Immutable simple undirected graphs on at most 62 vertices.
//!
//! Adjacency is a bitset row per vertex, so every neighborhood fits in
//! one machine word and set operations are single instructions. Graphs
//! are value-immutable: every mutating operation returns a new graph.

use crate::error::{Error, Result};

/// Maximum supported order. Keeps graph6 order encoding in one byte and
/// adjacency rows in one `u64`.
pub const MAX_ORDER: usize = 62;

/// An immutable simple undirected graph with dense vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list. Duplicate edges
    /// collapse; loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    order: n,
                });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::build(n, &[])
    }

    pub(crate) fn from_adj_unchecked(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_ORDER);
        debug_assert!(adj.iter().enumerate().all(|(i, &row)| row >> i & 1 == 0));
        debug_assert!((0..n).all(|i| (0..n).all(|j| adj[i] >> j & 1 == adj[j] >> i & 1)));
        Graph { n, adj }
    }

    /// Order (number of vertices).
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Size (number of edges).
    pub fn size(&self) -> usize {
        let degree_sum: usize = self.adj.iter().map(|row| row.count_ones() as usize).sum();
        degree_sum / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            let mut higher = self.adj[u] >> (u + 1) << (u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    /// New graph with edge `e` removed; the input is untouched.
    pub fn delete_edge(&self, e: (usize, usize)) -> Result<Graph> {
        let (u, v) = e;
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph { n: self.n, adj })
    }

    /// New graph with edge `e` added (endpoints must be distinct,
    /// in range, and non-adjacent).
    pub fn add_edge(&self, e: (usize, usize)) -> Result<Graph> {
        let (u, v) = e;
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                order: self.n,
            });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj })
    }

    /// New graph of order `n + 1` whose fresh vertex (id `n`) is joined
    /// to the vertices in the bitset `attach`.
    pub fn with_new_vertex(&self, attach: u64) -> Result<Graph> {
        if self.n + 1 > MAX_ORDER {
            return Err(Error::OrderTooLarge(self.n + 1));
        }
        debug_assert_eq!(attach >> self.n, 0, "attach set out of range");
        let mut adj = Vec::with_capacity(self.n + 1);
        adj.extend_from_slice(&self.adj);
        for (v, row) in adj.iter_mut().enumerate() {
            if attach >> v & 1 == 1 {
                *row |= 1 << self.n;
            }
        }
        adj.push(attach);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// New graph of order `n - 1` with vertex `v` removed and the
    /// remaining vertices relabeled downward to stay dense.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        debug_assert!(v < self.n);
        let low_mask = (1u64 << v) - 1;
        let adj = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let row = self.adj[u];
                (row & low_mask) | (row >> (v + 1) << v)
            })
            .collect();
        Graph { n: self.n - 1, adj }
    }

    /// Relabels vertices by `perm`, where `perm[v]` is the new id of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start`, as a bitset.
    pub(crate) fn reachable_from(&self, start: usize) -> u64 {
        debug_assert!(start < self.n);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut cursor = frontier;
            while cursor != 0 {
                let v = cursor.trailing_zeros() as usize;
                next |= self.adj[v];
                cursor &= cursor - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// True iff the graph has exactly one component. The trivial graph
    /// is connected; the empty graph is vacuously connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.reachable_from(0).count_ones() as usize == self.n
    }

    /// True iff some edge joins two degree-1 vertices (a `P_2` component).
    pub fn has_isolated_edge(&self) -> bool {
        self.isolated_edge().is_some()
    }

    /// The lexicographically first isolated edge, if any.
    pub fn isolated_edge(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            if self.degree(u) == 1 {
                let v = self.adj[u].trailing_zeros() as usize;
                if u < v && self.degree(v) == 1 {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Non-increasing degree sequence with the two leading entries
    /// exposed as the maximum and second-maximum degree.
    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut sequence = self.degrees();
        sequence.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeProfile { sequence })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Sorted degree data of a nonempty graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    sequence: Vec<usize>,
}

impl DegreeProfile {
    /// Non-increasing degree sequence.
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Maximum degree Δ.
    pub fn delta(&self) -> usize {
        self.sequence[0]
    }

    /// Second maximum degree Δ₂: the largest degree over the vertices
    /// other than one fixed maximum-degree vertex. `None` on K_1.
    pub fn delta2(&self) -> Option<usize> {
        self.sequence.get(1).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn build_k3() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn build_empty_graph() {
        let g = Graph::build(4, &[]).unwrap();
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn build_rejects_loop() {
        assert_eq!(Graph::build(2, &[(0, 0)]), Err(Error::Loop(0)));
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert!(matches!(
            Graph::build(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        ));
        assert!(Graph::build(63, &[]).is_err());
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn handshake() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        let degree_sum: usize = g.degrees().iter().sum();
        assert_eq!(degree_sum, 2 * g.size());
    }

    #[test]
    fn degree_profile_cycle() {
        let c5 = families::cycle(5).unwrap();
        let p = c5.degree_profile().unwrap();
        assert_eq!(p.sequence(), &[2, 2, 2, 2, 2]);
        assert_eq!(p.delta(), 2);
        assert_eq!(p.delta2(), Some(2));
    }

    #[test]
    fn degree_profile_s_prime_5() {
        let g = families::s_prime(5).unwrap();
        let p = g.degree_profile().unwrap();
        assert_eq!(p.sequence(), &[4, 2, 2, 1, 1]);
        assert_eq!(p.delta(), 4);
        assert_eq!(p.delta2(), Some(2));
    }

    #[test]
    fn degree_profile_paw() {
        let paw = Graph::build(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(paw.degree_profile().unwrap().sequence(), &[3, 2, 2, 1]);
    }

    #[test]
    fn degree_profile_rejects_empty() {
        let g = Graph::build(0, &[]).unwrap();
        assert_eq!(g.degree_profile(), Err(Error::EmptyGraph));
    }

    #[test]
    fn connectivity_of_small_graphs() {
        assert!(families::cycle(6).unwrap().is_connected());
        let k3_k2 = families::disjoint_union(
            &families::complete(3).unwrap(),
            &Graph::build(2, &[(0, 1)]).unwrap(),
        )
        .unwrap();
        assert!(!k3_k2.is_connected());
        assert!(Graph::build(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn isolated_edge_detection() {
        let p2_c3 = families::disjoint_union(
            &Graph::build(2, &[(0, 1)]).unwrap(),
            &families::complete(3).unwrap(),
        )
        .unwrap();
        assert!(p2_c3.has_isolated_edge());
        assert!(!families::path(3).unwrap().has_isolated_edge());
        let p2_p2 = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(p2_p2.has_isolated_edge());
    }

    #[test]
    fn delete_edge_k3_gives_p3() {
        let k3 = families::complete(3).unwrap();
        let g = k3.delete_edge((0, 1)).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(k3.size(), 3, "input must stay unchanged");
        let mut seq = g.degrees();
        seq.sort_unstable();
        assert_eq!(seq, vec![1, 1, 2]);
    }

    #[test]
    fn delete_end_edge_of_p5() {
        let p5 = families::path(5).unwrap();
        let g = p5.delete_edge((0, 1)).unwrap();
        assert_eq!(g.size(), 3);
        assert!(!g.is_connected());
        assert_eq!(g.degree(0), 0);
    }

    #[test]
    fn delete_edge_rejects_non_edge() {
        let p3 = families::path(3).unwrap();
        assert_eq!(p3.delete_edge((0, 2)), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn delete_vertex_relabels_densely() {
        let p4 = families::path(4).unwrap();
        let g = p4.delete_vertex(1);
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::build(4, &[(2, 3), (0, 1), (0, 3)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (2, 3)]);
    }
}
