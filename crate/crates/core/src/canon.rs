//! Canonical labeling by equitable partition refinement with
//! backtracking, plus the automorphism data the enumerator needs.
//!
//! The canonical form of a graph is the lexicographically largest
//! upper-triangle bit string over all leaves of the refinement search
//! tree; two graphs are isomorphic iff their canonical codes are equal.
//! The search also collects automorphism generators, from which vertex
//! orbits and the automorphism group order are derived (orbit counts
//! along the first root-to-leaf path, by orbit-stabilizer).

use crate::graph::Graph;
use crate::graph6;

/// Canonical adjacency byte string: the graph6 encoding of the graph
/// under its canonical labeling. Equal codes ⇔ isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    /// The code as canonical graph6 text.
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

/// Full outcome of a canonical search.
#[derive(Debug, Clone)]
pub struct Canonical {
    code: CanonicalCode,
    labeling: Vec<usize>,
    generators: Vec<Vec<usize>>,
    first_path: Vec<usize>,
    n: usize,
}

impl Canonical {
    pub fn code(&self) -> &CanonicalCode {
        &self.code
    }

    /// The canonical labeling: `labeling[v]` is the canonical position
    /// of vertex `v`.
    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    /// Discovered automorphism generators (vertex → vertex maps).
    /// Together they generate the full automorphism group.
    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// Orbit partition of the automorphism group, as a union-find
    /// closure over the generators.
    pub fn orbits(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for gen in &self.generators {
            for (v, &image) in gen.iter().enumerate() {
                uf.union(v, image);
            }
        }
        uf
    }

    /// Automorphism group order via orbit-stabilizer along the first
    /// search path: the product over path vertices of their orbit size
    /// under the generators fixing the preceding path vertices.
    pub fn group_order(&self) -> u128 {
        let mut order: u128 = 1;
        for depth in 0..self.first_path.len() {
            let fixed = &self.first_path[..depth];
            let mut uf = UnionFind::new(self.n);
            for gen in &self.generators {
                if fixed.iter().all(|&v| gen[v] == v) {
                    for (v, &image) in gen.iter().enumerate() {
                        uf.union(v, image);
                    }
                }
            }
            order = order.saturating_mul(uf.orbit_size(self.first_path[depth]) as u128);
        }
        order
    }
}

/// Runs the canonical search on `g`.
pub fn canonical_form(g: &Graph) -> Canonical {
    let mut searcher = Searcher::new(g);
    searcher.run();
    searcher.into_outcome()
}

/// Canonical code only.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_form(g).code
}

/// Isomorphism test through canonical codes.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b)
}

/// Plain union-find over `0..n`.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cursor = v;
        while self.parent[cursor] != root {
            let next = self.parent[cursor];
            self.parent[cursor] = root;
            cursor = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // Keep the smaller index as root so orbit representatives
            // are stable across runs.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn orbit_size(&mut self, v: usize) -> usize {
        let root = self.find(v);
        (0..self.parent.len())
            .filter(|&u| self.find(u) == root)
            .count()
    }

    /// Orbit representative per vertex (smallest member).
    pub fn representatives(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|v| self.find(v)).collect()
    }
}

/// Ordered partition of `0..n` as a permutation plus cell boundaries.
#[derive(Clone)]
struct Partition {
    /// Vertices in partition order; cells are contiguous runs.
    order: Vec<usize>,
    /// Start offset of each cell, ascending; an implicit end at `n`.
    starts: Vec<usize>,
    /// Position of each vertex inside `order`.
    position: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition {
            order: (0..n).collect(),
            starts: if n == 0 { vec![] } else { vec![0] },
            position: (0..n).collect(),
        }
    }

    fn num_cells(&self) -> usize {
        self.starts.len()
    }

    fn cell_bounds(&self, c: usize) -> (usize, usize) {
        let lo = self.starts[c];
        let hi = self.starts.get(c + 1).copied().unwrap_or(self.order.len());
        (lo, hi)
    }

    fn is_discrete(&self) -> bool {
        self.starts.len() == self.order.len()
    }

    fn cell_mask(&self, c: usize) -> u64 {
        let (lo, hi) = self.cell_bounds(c);
        self.order[lo..hi].iter().fold(0u64, |acc, &v| acc | 1 << v)
    }

    /// Splits cell `c` into subcells ordered by ascending key. Returns
    /// true when the cell actually split.
    fn split_by_key(&mut self, c: usize, key: impl Fn(usize) -> usize) -> bool {
        let (lo, hi) = self.cell_bounds(c);
        let segment = &mut self.order[lo..hi];
        let first_key = key(segment[0]);
        if segment.iter().all(|&v| key(v) == first_key) {
            return false;
        }
        segment.sort_by_key(|&v| key(v));
        let mut new_starts = Vec::new();
        for offset in 1..segment.len() {
            if key(segment[offset]) != key(segment[offset - 1]) {
                new_starts.push(lo + offset);
            }
        }
        let insert_at = self.starts.binary_search(&(lo + 1)).unwrap_or_else(|e| e);
        for (k, s) in new_starts.into_iter().enumerate() {
            self.starts.insert(insert_at + k, s);
        }
        for offset in lo..hi {
            self.position[self.order[offset]] = offset;
        }
        true
    }

    /// Moves `v` into a singleton cell placed before the remainder of
    /// its current cell.
    fn individualize(&mut self, v: usize) {
        let pos = self.position[v];
        let cell = match self.starts.binary_search(&pos) {
            Ok(c) => c,
            Err(c) => c - 1,
        };
        let (lo, hi) = self.cell_bounds(cell);
        debug_assert!(hi - lo >= 2);
        self.order.swap(lo, pos);
        self.position[self.order[pos]] = pos;
        self.position[self.order[lo]] = lo;
        let insert_at = self.starts.binary_search(&(lo + 1)).unwrap_or_else(|e| e);
        self.starts.insert(insert_at, lo + 1);
    }
}

/// Relabeled upper-triangle bits in graph6 column order, packed
/// big-endian into words for lexicographic comparison.
fn leaf_image(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut image = Vec::with_capacity(bit_count.div_ceil(64));
    let mut word = 0u64;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | g.has_edge(order[i], order[j]) as u64;
            filled += 1;
            if filled == 64 {
                image.push(word);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        image.push(word << (64 - filled));
    }
    image
}

struct Leaf {
    order: Vec<usize>,
    image: Vec<u64>,
}

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    generators: Vec<Vec<usize>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<usize>,
    first_leaf_seen: bool,
    prefix: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph) -> Self {
        Searcher {
            g,
            n: g.order(),
            generators: Vec::new(),
            first: None,
            best: None,
            first_path: Vec::new(),
            first_leaf_seen: false,
            prefix: Vec::new(),
        }
    }

    fn run(&mut self) {
        let mut root = Partition::unit(self.n);
        self.explore(&mut root);
    }

    fn into_outcome(self) -> Canonical {
        let best = self.best.expect("search always reaches a leaf");
        let mut labeling = vec![0usize; self.n];
        for (position, &v) in best.order.iter().enumerate() {
            labeling[v] = position;
        }
        let relabeled = self.g.relabel(&labeling);
        Canonical {
            code: CanonicalCode(graph6::encode(&relabeled)),
            labeling,
            generators: self.generators,
            first_path: self.first_path,
            n: self.n,
        }
    }

    /// Equitable refinement: repeatedly split cells by neighbor counts
    /// into earlier-scanned cells until stable. Restarting the scan
    /// after every split keeps the procedure label-independent.
    fn refine(&self, p: &mut Partition) {
        'scan: loop {
            for splitter in 0..p.num_cells() {
                let mask = p.cell_mask(splitter);
                for cell in 0..p.num_cells() {
                    let (lo, hi) = p.cell_bounds(cell);
                    if hi - lo < 2 {
                        continue;
                    }
                    let g = self.g;
                    if p.split_by_key(cell, |v| (g.neighbors(v) & mask).count_ones() as usize) {
                        continue 'scan;
                    }
                }
            }
            return;
        }
    }

    /// First cell of minimal size ≥ 2.
    fn target_cell(&self, p: &Partition) -> usize {
        let mut choice = usize::MAX;
        let mut smallest = usize::MAX;
        for cell in 0..p.num_cells() {
            let (lo, hi) = p.cell_bounds(cell);
            let len = hi - lo;
            if len >= 2 && len < smallest {
                smallest = len;
                choice = cell;
            }
        }
        choice
    }

    fn explore(&mut self, p: &mut Partition) {
        self.refine(p);
        if p.is_discrete() {
            self.handle_leaf(p);
            return;
        }
        let cell = self.target_cell(p);
        let (lo, hi) = p.cell_bounds(cell);
        let mut candidates = p.order[lo..hi].to_vec();
        candidates.sort_unstable();

        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if self.pruned_by_orbit(v, &explored) {
                continue;
            }
            if !self.first_leaf_seen {
                self.first_path.push(v);
            }
            self.prefix.push(v);
            let mut child = p.clone();
            child.individualize(v);
            self.explore(&mut child);
            self.prefix.pop();
            explored.push(v);
        }
    }

    /// True when `v` is already known to be automorphic to an explored
    /// sibling under the generators fixing the current prefix.
    fn pruned_by_orbit(&self, v: usize, explored: &[usize]) -> bool {
        if explored.is_empty() || self.generators.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for gen in &self.generators {
            if self.prefix.iter().all(|&f| gen[f] == f) {
                for (u, &image) in gen.iter().enumerate() {
                    uf.union(u, image);
                }
            }
        }
        explored.iter().any(|&u| uf.same(u, v))
    }

    fn handle_leaf(&mut self, p: &Partition) {
        let order = p.order.clone();
        let image = leaf_image(self.g, &order);
        match (&self.first, &self.best) {
            (None, _) => {
                self.first_leaf_seen = true;
                self.best = Some(Leaf {
                    order: order.clone(),
                    image: image.clone(),
                });
                self.first = Some(Leaf { order, image });
            }
            (Some(first), Some(best)) => {
                if image == first.image {
                    self.record_generator(&first.order.clone(), &order);
                } else if image == best.image {
                    self.record_generator(&best.order.clone(), &order);
                }
                if image > self.best.as_ref().unwrap().image {
                    self.best = Some(Leaf { order, image });
                }
            }
            _ => unreachable!(),
        }
    }

    /// Two leaf orders with equal images induce the automorphism
    /// mapping `a[i] ↦ b[i]`.
    fn record_generator(&mut self, a: &[usize], b: &[usize]) {
        let mut gamma = vec![0usize; self.n];
        for (position, &v) in a.iter().enumerate() {
            gamma[v] = b[position];
        }
        if gamma.iter().enumerate().all(|(v, &image)| v == image) {
            return;
        }
        debug_assert!(
            self.g
                .edges()
                .iter()
                .all(|&(u, v)| self.g.has_edge(gamma[u], gamma[v])),
            "recorded map is not an automorphism"
        );
        self.generators.push(gamma);
    }
}
