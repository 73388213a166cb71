//! Vertex and edge connectivity via unit-capacity max-flow (Menger).
//!
//! At the orders this crate handles, correctness beats speed: plain
//! Edmonds-Karp on a dense capacity matrix, minimized over pairs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which connectivity a class filter or theorem check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConnectivityMode {
    Vertex,
    Edge,
}

impl std::fmt::Display for ConnectivityMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConnectivityMode::Vertex => write!(f, "vertex"),
            ConnectivityMode::Edge => write!(f, "edge"),
        }
    }
}

impl std::str::FromStr for ConnectivityMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" => Ok(ConnectivityMode::Vertex),
            "edge" => Ok(ConnectivityMode::Edge),
            other => Err(Error::ParamOutOfRange(format!(
                "mode must be vertex or edge, got {other}"
            ))),
        }
    }
}

/// Vertex connectivity κ of a connected graph of order ≥ 2.
///
/// Computed as the minimum over non-adjacent pairs of the vertex-split
/// max-flow; when no non-adjacent pair exists the graph is complete and
/// κ = n − 1 by the "disconnected or trivial" convention.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall(n));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = usize::MAX;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                best = best.min(vertex_flow(g, u, v));
            }
        }
    }
    if best == usize::MAX {
        // Complete graph: only removing all but one vertex trivializes it.
        best = n - 1;
    }
    Ok(best)
}

/// Edge connectivity λ of a connected graph of order ≥ 2: the minimum
/// over sinks of the unit-capacity max-flow from vertex 0.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall(n));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = usize::MAX;
    for t in 1..n {
        best = best.min(edge_flow(g, 0, t));
    }
    Ok(best)
}

/// Max-flow between non-adjacent `s`, `t` in the vertex-split digraph:
/// every vertex becomes an arc of capacity 1, every edge two arcs of
/// effectively unlimited capacity.
fn vertex_flow(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    let inf = n as i32;
    let nodes = 2 * n;
    let mut cap = vec![0i32; nodes * nodes];
    let enter = |v: usize| 2 * v;
    let exit = |v: usize| 2 * v + 1;
    for v in 0..n {
        cap[enter(v) * nodes + exit(v)] = 1;
    }
    for (u, v) in g.edges() {
        cap[exit(u) * nodes + enter(v)] = inf;
        cap[exit(v) * nodes + enter(u)] = inf;
    }
    max_flow(&mut cap, nodes, exit(s), enter(t))
}

fn edge_flow(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    let mut cap = vec![0i32; n * n];
    for (u, v) in g.edges() {
        cap[u * n + v] = 1;
        cap[v * n + u] = 1;
    }
    max_flow(&mut cap, n, s, t)
}

/// Edmonds-Karp on a dense residual matrix.
fn max_flow(cap: &mut [i32], nodes: usize, source: usize, sink: usize) -> usize {
    let mut total = 0usize;
    let mut parent = vec![usize::MAX; nodes];
    loop {
        parent.fill(usize::MAX);
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        'bfs: while let Some(u) = queue.pop_front() {
            for v in 0..nodes {
                if parent[v] == usize::MAX && cap[u * nodes + v] > 0 {
                    parent[v] = u;
                    if v == sink {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return total;
        }
        let mut bottleneck = i32::MAX;
        let mut v = sink;
        while v != source {
            let u = parent[v];
            bottleneck = bottleneck.min(cap[u * nodes + v]);
            v = u;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u * nodes + v] -= bottleneck;
            cap[v * nodes + u] += bottleneck;
            v = u;
        }
        total += bottleneck as usize;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    fn extremal_5_2() -> Graph {
        families::connectivity_extremal(5, 2).unwrap()
    }

    #[test]
    fn complete_graph_convention() {
        assert_eq!(
            vertex_connectivity(&families::complete(4).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            edge_connectivity(&families::complete(4).unwrap()).unwrap(),
            3
        );
    }

    #[test]
    fn cycles_are_2_connected() {
        assert_eq!(
            vertex_connectivity(&families::cycle(6).unwrap()).unwrap(),
            2
        );
        assert_eq!(edge_connectivity(&families::cycle(5).unwrap()).unwrap(), 2);
    }

    #[test]
    fn trees_have_edge_connectivity_1() {
        for n in 2..=7 {
            assert_eq!(edge_connectivity(&families::path(n).unwrap()).unwrap(), 1);
            assert_eq!(edge_connectivity(&families::star(n).unwrap()).unwrap(), 1);
        }
    }

    #[test]
    fn extremal_graph_has_connectivity_two() {
        let g = extremal_5_2();
        assert_eq!(vertex_connectivity(&g).unwrap(), 2);
        assert_eq!(edge_connectivity(&g).unwrap(), 2);
    }

    #[test]
    fn rejects_disconnected_and_trivial() {
        let disconnected = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&disconnected), Err(Error::Disconnected));
        assert_eq!(edge_connectivity(&disconnected), Err(Error::Disconnected));
        let trivial = Graph::build(1, &[]).unwrap();
        assert_eq!(vertex_connectivity(&trivial), Err(Error::OrderTooSmall(1)));
    }

    #[test]
    fn k2_has_connectivity_1() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(vertex_connectivity(&k2).unwrap(), 1);
        assert_eq!(edge_connectivity(&k2).unwrap(), 1);
    }
}
