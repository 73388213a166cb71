//! Isomorph-free exhaustive generation of small graphs.
//!
//! Connected graphs are generated by vertex augmentation with the
//! canonical construction path test: a child is kept only when its new
//! vertex lies in the automorphism orbit of the canonical deletion
//! vertex, and only one attachment set per orbit of the parent's
//! automorphism group is tried. Unicyclic graphs use the same scheme
//! with pendant attachment, seeded by the cycles. Each class is visited
//! exactly once, without cross-level dedup sets.
//!
//! Labeled trees come from Prüfer sequences and serve as the second,
//! independent generator for unicyclic graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalCode};
use crate::connectivity::{edge_connectivity, vertex_connectivity, ConnectivityMode};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Default and `allow_slow` order caps per class; runs stay at desk
/// scale (seconds to a couple of minutes) inside the default cap.
const CONNECTED_CAP: (usize, usize) = (9, 10);
const UNICYCLIC_CAP: (usize, usize) = (12, 12);
const TREES_CAP: (usize, usize) = (9, 10);

/// An ordered, resumable stream of pairwise non-isomorphic graphs:
/// deterministic (lexicographic canonical codes) for a given class and
/// order, and partitionable into independent sub-ranges.
#[derive(Debug, Clone)]
pub struct GraphStream {
    class: String,
    n: usize,
    graphs: Vec<Graph>,
}

impl GraphStream {
    pub(crate) fn from_sorted(class: String, n: usize, graphs: Vec<Graph>) -> Self {
        GraphStream { class, n, graphs }
    }

    /// Class label, e.g. `connected` or `unicyclic;kappa=2`.
    pub fn class(&self) -> &str {
        &self.class
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    /// Splits the stream into `parts` contiguous sub-streams whose
    /// union is the original stream.
    pub fn partition(&self, parts: usize) -> Vec<GraphStream> {
        let parts = parts.max(1);
        let chunk = self.graphs.len().div_ceil(parts).max(1);
        self.graphs
            .chunks(chunk)
            .map(|slice| GraphStream {
                class: self.class.clone(),
                n: self.n,
                graphs: slice.to_vec(),
            })
            .collect()
    }

    /// Cache header line: `>>class=<name>;n=<n>;count=<c>`.
    pub fn header(&self) -> String {
        format!(
            ">>class={};n={};count={}",
            self.class,
            self.n,
            self.graphs.len()
        )
    }

    /// Writes the stream in spool format: header plus one graph6 line
    /// per graph.
    pub fn write_to(&self, w: &mut impl std::io::Write) -> std::io::Result<()> {
        writeln!(w, "{}", self.header())?;
        for g in &self.graphs {
            writeln!(w, "{}", crate::graph6::encode(g))?;
        }
        Ok(())
    }

    /// Reads a spooled stream back, checking the header against the
    /// expected class and order and the body against the stated count.
    pub fn read_from(r: impl std::io::BufRead, class: &str, n: usize) -> Result<GraphStream> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .transpose()
            .map_err(|_| Error::ParamOutOfRange("unreadable stream cache".into()))?
            .ok_or_else(|| Error::ParamOutOfRange("empty stream cache".into()))?;
        let expected = format!(">>class={class};n={n};count=");
        let count: usize = header
            .strip_prefix(&expected)
            .and_then(|rest| rest.parse().ok())
            .ok_or_else(|| Error::ParamOutOfRange(format!("bad stream header: {header}")))?;
        let mut graphs = Vec::with_capacity(count);
        for line in lines {
            let line =
                line.map_err(|_| Error::ParamOutOfRange("unreadable stream cache".into()))?;
            if line.is_empty() {
                continue;
            }
            graphs.push(crate::graph6::decode(&line)?);
        }
        if graphs.len() != count {
            return Err(Error::ParamOutOfRange(format!(
                "stream cache count mismatch: header says {count}, found {}",
                graphs.len()
            )));
        }
        Ok(GraphStream {
            class: class.to_string(),
            n,
            graphs,
        })
    }
}

impl<'a> IntoIterator for &'a GraphStream {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

fn check_cap(
    class: &'static str,
    n: usize,
    lo: usize,
    caps: (usize, usize),
    allow_slow: bool,
) -> Result<()> {
    let cap = if allow_slow { caps.1 } else { caps.0 };
    if n < lo || n > cap {
        return Err(Error::UnsupportedOrder {
            class,
            n,
            cap,
            slow_cap: caps.1,
        });
    }
    Ok(())
}

/// All connected graphs of order `n`, one per isomorphism class,
/// sorted by canonical code. Supported for 3 ≤ n ≤ 9 (10 with
/// `allow_slow`).
pub fn connected_graphs(n: usize, allow_slow: bool) -> Result<GraphStream> {
    check_cap("connected", n, 3, CONNECTED_CAP, allow_slow)?;
    let mut level = vec![Graph::build(1, &[]).unwrap()];
    for _ in 1..n {
        level = grow_connected(&level);
    }
    Ok(GraphStream::from_sorted("connected".into(), n, level))
}

/// All unicyclic graphs (connected, size = order) of order `n`, one
/// per isomorphism class. Supported for 3 ≤ n ≤ 12.
pub fn unicyclic_graphs(n: usize, allow_slow: bool) -> Result<GraphStream> {
    check_cap("unicyclic", n, 3, UNICYCLIC_CAP, allow_slow)?;
    let mut level = vec![crate::families::cycle(3).unwrap()];
    for v in 3..n {
        let mut next = grow_unicyclic(&level);
        next.push(crate::families::cycle(v + 1).unwrap());
        next.sort_by_cached_key(|g| canonical_form(g).code().clone());
        level = next;
    }
    Ok(GraphStream::from_sorted("unicyclic".into(), n, level))
}

/// Keeps the members of `stream` whose vertex (or edge) connectivity
/// is exactly `k`.
pub fn filter_by_connectivity(
    stream: &GraphStream,
    mode: ConnectivityMode,
    k: usize,
) -> GraphStream {
    let graphs: Vec<Graph> = stream
        .graphs
        .par_iter()
        .filter(|g| {
            let value = match mode {
                ConnectivityMode::Vertex => vertex_connectivity(g),
                ConnectivityMode::Edge => edge_connectivity(g),
            };
            value.map(|c| c == k).unwrap_or(false)
        })
        .cloned()
        .collect();
    let tag = match mode {
        ConnectivityMode::Vertex => "kappa",
        ConnectivityMode::Edge => "lambda",
    };
    GraphStream {
        class: format!("{};{}={}", stream.class, tag, k),
        n: stream.n,
        graphs,
    }
}

/// One level of connected-graph augmentation: attach a fresh vertex to
/// every orbit representative of the nonempty attachment sets, keep a
/// child iff its new vertex is in the orbit of the canonical deletion
/// vertex.
fn grow_connected(parents: &[Graph]) -> Vec<Graph> {
    let mut children: Vec<(CanonicalCode, Graph)> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let canon = canonical_form(parent);
            let masks = subset_orbit_representatives(parent.order(), canon.generators());
            let parent = parent.clone();
            masks.into_iter().filter_map(move |mask| {
                let child = parent
                    .with_new_vertex(mask)
                    .expect("order checked by caller");
                accept_child(&child, connected_deletion_candidates)
            })
        })
        .collect();
    children.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(
        children.windows(2).all(|w| w[0].0 != w[1].0),
        "duplicate class emitted"
    );
    children.into_iter().map(|(_, g)| g).collect()
}

/// One level of unicyclic augmentation: attach a pendant vertex to one
/// representative per vertex orbit.
fn grow_unicyclic(parents: &[Graph]) -> Vec<Graph> {
    let mut children: Vec<(CanonicalCode, Graph)> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let canon = canonical_form(parent);
            let mut orbits = canon.orbits();
            let reps = orbits.representatives();
            let attach: Vec<usize> = (0..parent.order()).filter(|&v| reps[v] == v).collect();
            let parent = parent.clone();
            attach.into_iter().filter_map(move |v| {
                let child = parent
                    .with_new_vertex(1 << v)
                    .expect("order checked by caller");
                accept_child(&child, pendant_deletion_candidates)
            })
        })
        .collect();
    children.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(
        children.windows(2).all(|w| w[0].0 != w[1].0),
        "duplicate class emitted"
    );
    children.into_iter().map(|(_, g)| g).collect()
}

/// Canonical construction path test. `candidates` lists the vertices
/// whose deletion reverses one augmentation step; the canonical one is
/// the candidate with the smallest canonical position.
fn accept_child(
    child: &Graph,
    candidates: fn(&Graph) -> Vec<usize>,
) -> Option<(CanonicalCode, Graph)> {
    let new_vertex = child.order() - 1;
    let canon = canonical_form(child);
    let eligible = candidates(child);
    debug_assert!(eligible.contains(&new_vertex));
    let chosen = eligible
        .into_iter()
        .min_by_key(|&v| canon.labeling()[v])
        .expect("new vertex is always a candidate");
    let mut orbits = canon.orbits();
    orbits
        .same(chosen, new_vertex)
        .then(|| (canon.code().clone(), child.clone()))
}

/// Vertices whose removal leaves the graph connected.
fn connected_deletion_candidates(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| connected_without(g, v))
        .collect()
}

/// Pendant vertices (removal reverses a pendant attachment).
fn pendant_deletion_candidates(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) == 1).collect()
}

fn connected_without(g: &Graph, skip: usize) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let exclude = 1u64 << skip;
    let start = if skip == 0 { 1 } else { 0 };
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut cursor = frontier;
        while cursor != 0 {
            let v = cursor.trailing_zeros() as usize;
            next |= g.neighbors(v);
            cursor &= cursor - 1;
        }
        frontier = next & !seen & !exclude;
        seen |= frontier;
    }
    seen.count_ones() as usize == n - 1
}

/// Orbit representatives of the nonempty subsets of `0..n` under the
/// group generated by `gens`, acting on bitsets.
fn subset_orbit_representatives(n: usize, gens: &[Vec<usize>]) -> Vec<u64> {
    let total = 1u64 << n;
    if gens.is_empty() {
        return (1..total).collect();
    }
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    for mask in 1..total {
        if seen[mask as usize] {
            continue;
        }
        reps.push(mask);
        let mut stack = vec![mask];
        seen[mask as usize] = true;
        while let Some(current) = stack.pop() {
            for gen in gens {
                let image = apply_perm_to_mask(current, gen);
                if !seen[image as usize] {
                    seen[image as usize] = true;
                    stack.push(image);
                }
            }
        }
    }
    reps
}

fn apply_perm_to_mask(mask: u64, perm: &[usize]) -> u64 {
    let mut image = 0u64;
    let mut cursor = mask;
    while cursor != 0 {
        let v = cursor.trailing_zeros() as usize;
        cursor &= cursor - 1;
        image |= 1 << perm[v];
    }
    image
}

/// All n^(n−2) labeled trees on `n` vertices by Prüfer decoding, as a
/// lazy stream. Supported for 2 ≤ n ≤ 9 (10 with `allow_slow`).
pub fn labeled_trees(n: usize, allow_slow: bool) -> Result<impl Iterator<Item = Graph>> {
    check_cap("trees", n, 2, TREES_CAP, allow_slow)?;
    Ok(PruferSequences::new(n).map(move |seq| tree_from_prufer(&seq, n)))
}

struct PruferSequences {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl PruferSequences {
    fn new(n: usize) -> Self {
        PruferSequences {
            n,
            seq: vec![0; n.saturating_sub(2)],
            done: false,
        }
    }
}

impl Iterator for PruferSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.seq.clone();
        // Odometer increment in base n.
        let mut pos = self.seq.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.seq[pos] += 1;
            if self.seq[pos] < self.n {
                break;
            }
            self.seq[pos] = 0;
        }
        Some(current)
    }
}

/// Decodes a Prüfer sequence over `0..n` into its labeled tree.
pub fn tree_from_prufer(seq: &[usize], n: usize) -> Graph {
    debug_assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::build(n, &edges).expect("Prüfer decode yields a valid tree")
}

/// Second unicyclic generator: every labeled tree plus one non-tree
/// edge, deduplicated by canonical code. The independent cross-check
/// for the augmentation generator.
pub fn unicyclic_codes_by_prufer(n: usize, allow_slow: bool) -> Result<Vec<CanonicalCode>> {
    check_cap("unicyclic-prufer", n, 3, (8, 8), allow_slow)?;
    let trees: Vec<Graph> = labeled_trees(n, allow_slow)?.collect();
    let mut codes: Vec<CanonicalCode> = trees
        .par_iter()
        .flat_map_iter(|tree| {
            let mut local = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !tree.has_edge(u, v) {
                        local.push(
                            canonical_form(&tree.add_edge((u, v)).unwrap())
                                .code()
                                .clone(),
                        );
                    }
                }
            }
            local
        })
        .collect();
    codes.sort_unstable();
    codes.dedup();
    Ok(codes)
}

/// Deterministic random connected graph: a uniform labeled spanning
/// tree (random Prüfer sequence) plus uniformly chosen extra edges.
pub fn random_connected_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected_graph_with(n, m, &mut rng)
}

pub(crate) fn random_connected_graph_with(n: usize, m: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::ParamOutOfRange(format!("order {n} out of range")));
    }
    let max_m = n * (n - 1) / 2;
    if m + 1 < n || m > max_m {
        return Err(Error::InfeasibleEdgeCount { n, m });
    }
    if n == 1 {
        return Graph::build(1, &[]);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let tree = tree_from_prufer(&seq, n);
    let mut non_edges: Vec<(usize, usize)> = Vec::with_capacity(max_m - (n - 1));
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) {
                non_edges.push((u, v));
            }
        }
    }
    let mut edges = tree.edges();
    let picks = rand::seq::index::sample(rng, non_edges.len(), m - (n - 1));
    edges.extend(picks.into_iter().map(|i| non_edges[i]));
    Graph::build(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    #[test]
    fn connected_counts_small() {
        assert_eq!(connected_graphs(3, false).unwrap().len(), 2);
        assert_eq!(connected_graphs(4, false).unwrap().len(), 6);
        assert_eq!(connected_graphs(5, false).unwrap().len(), 21);
        assert_eq!(connected_graphs(6, false).unwrap().len(), 112);
    }

    #[test]
    fn connected_rejects_out_of_range() {
        assert!(matches!(
            connected_graphs(2, false),
            Err(Error::UnsupportedOrder { .. })
        ));
        assert!(matches!(
            connected_graphs(10, false),
            Err(Error::UnsupportedOrder { .. })
        ));
    }

    #[test]
    fn unicyclic_counts_small() {
        assert_eq!(unicyclic_graphs(3, false).unwrap().len(), 1);
        assert_eq!(unicyclic_graphs(4, false).unwrap().len(), 2);
        assert_eq!(unicyclic_graphs(5, false).unwrap().len(), 5);
        assert_eq!(unicyclic_graphs(6, false).unwrap().len(), 13);
        assert_eq!(unicyclic_graphs(7, false).unwrap().len(), 33);
    }

    #[test]
    fn unicyclic_members_have_m_equal_n() {
        for n in 3..=8 {
            for g in &unicyclic_graphs(n, false).unwrap() {
                assert!(g.is_connected());
                assert_eq!(g.size(), n);
            }
        }
    }

    #[test]
    fn every_connected_member_is_connected_and_sorted() {
        let stream = connected_graphs(6, false).unwrap();
        let codes: Vec<_> = stream.iter().map(canonical_code).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(codes.len(), sorted.len());
        assert_eq!(codes, sorted);
        assert!(stream.iter().all(Graph::is_connected));
    }

    #[test]
    fn prufer_tree_count_and_shape() {
        let trees: Vec<_> = labeled_trees(5, false).unwrap().collect();
        assert_eq!(trees.len(), 125);
        for t in &trees {
            assert!(t.is_connected());
            assert_eq!(t.size(), 4);
        }
        let p3s: Vec<_> = labeled_trees(3, false).unwrap().collect();
        assert_eq!(p3s.len(), 3);
        let code = canonical_code(&crate::families::path(3).unwrap());
        assert!(p3s.iter().all(|t| canonical_code(t) == code));
    }

    #[test]
    fn prufer_and_augmentation_agree_at_small_n() {
        for n in 3..=6 {
            let by_prufer = unicyclic_codes_by_prufer(n, false).unwrap();
            let by_augmentation: Vec<_> = unicyclic_graphs(n, false)
                .unwrap()
                .iter()
                .map(canonical_code)
                .collect();
            assert_eq!(by_prufer, by_augmentation, "n={n}");
        }
    }

    #[test]
    fn filter_partitions_the_stream() {
        let stream = connected_graphs(5, false).unwrap();
        let total: usize = (1..=4)
            .map(|k| filter_by_connectivity(&stream, ConnectivityMode::Vertex, k).len())
            .sum();
        assert_eq!(total, stream.len());
        let only_k4 = filter_by_connectivity(
            &connected_graphs(4, false).unwrap(),
            ConnectivityMode::Vertex,
            3,
        );
        assert_eq!(only_k4.len(), 1);
        assert_eq!(only_k4.graphs()[0].size(), 6);
    }

    #[test]
    fn lambda_one_means_bridge() {
        // Brute force: a graph has λ = 1 iff deleting some single edge
        // disconnects it.
        let stream = connected_graphs(5, false).unwrap();
        let filtered = filter_by_connectivity(&stream, ConnectivityMode::Edge, 1);
        let with_bridge: Vec<&Graph> = stream
            .iter()
            .filter(|g| {
                g.edges()
                    .iter()
                    .any(|&e| !g.delete_edge(e).unwrap().is_connected())
            })
            .collect();
        assert_eq!(filtered.len(), with_bridge.len());
    }

    #[test]
    fn random_graph_edges_and_determinism() {
        let tree = random_connected_graph(10, 9, 1).unwrap();
        assert_eq!(tree.size(), 9);
        assert!(tree.is_connected());
        let k6 = random_connected_graph(6, 15, 7).unwrap();
        assert_eq!(k6.size(), 15);
        assert_eq!(
            random_connected_graph(12, 20, 42).unwrap(),
            random_connected_graph(12, 20, 42).unwrap()
        );
        assert!(matches!(
            random_connected_graph(5, 3, 0),
            Err(Error::InfeasibleEdgeCount { .. })
        ));
    }

    #[test]
    fn partition_union_equals_stream() {
        let stream = connected_graphs(5, false).unwrap();
        for parts in [1, 2, 3, 7, 50] {
            let rejoined: Vec<Graph> = stream
                .partition(parts)
                .into_iter()
                .flat_map(|s| s.graphs().to_vec())
                .collect();
            assert_eq!(rejoined, stream.graphs());
        }
    }

    #[test]
    fn spool_round_trip() {
        let stream = connected_graphs(4, false).unwrap();
        let mut buffer = Vec::new();
        stream.write_to(&mut buffer).unwrap();
        let text = String::from_utf8(buffer.clone()).unwrap();
        assert!(text.starts_with(">>class=connected;n=4;count=6\n"));
        let back = GraphStream::read_from(&buffer[..], "connected", 4).unwrap();
        assert_eq!(back.len(), 6);
        assert!(GraphStream::read_from(&buffer[..], "unicyclic", 4).is_err());
    }
}
