use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Where a chamber graph came from. Edge labels mean different things per
/// source: a generator index, a wall type, or a lattice rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Coxeter,
    Building,
    Lattice,
    Generic,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Coxeter => "coxeter",
            Provenance::Building => "building",
            Provenance::Lattice => "lattice",
            Provenance::Generic => "generic",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "coxeter" => Some(Provenance::Coxeter),
            "building" => Some(Provenance::Building),
            "lattice" => Some(Provenance::Lattice),
            "generic" => Some(Provenance::Generic),
            _ => None,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub label: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} names, got {got}")]
    NameCount { expected: usize, got: usize },
}

/// A simple undirected graph on chambers `0..n`, optionally edge-labelled.
///
/// Adjacency lists are sorted by vertex id and edges are stored with
/// `a < b` in lexicographic order, so every traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberGraph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    names: Vec<String>,
    complete: bool,
    boundary: Vec<bool>,
    provenance: Provenance,
}

impl ChamberGraph {
    pub fn from_edges<I>(n: usize, edges: I, provenance: Provenance) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Option<u32>)>,
    {
        let mut list = Vec::new();
        for (a, b, label) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            list.push(Edge { a, b, label });
        }
        list.sort();
        for w in list.windows(2) {
            if w[0].a == w[1].a && w[0].b == w[1].b {
                return Err(GraphError::DuplicateEdge(w[0].a, w[0].b));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for e in &list {
            adjacency[e.a].push(e.b);
            adjacency[e.b].push(e.a);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        Ok(ChamberGraph {
            adjacency,
            edges: list,
            names: Vec::new(),
            complete: true,
            boundary: vec![false; n],
            provenance,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GraphError> {
        if names.len() != self.vertex_count() {
            return Err(GraphError::NameCount {
                expected: self.vertex_count(),
                got: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    /// Marks the graph as a truncated ball. `boundary[v]` is true when `v`
    /// has neighbours in the ambient graph that are missing here.
    pub fn truncated(mut self, boundary: Vec<bool>) -> Self {
        assert_eq!(boundary.len(), self.vertex_count());
        self.complete = !boundary.iter().any(|&b| b);
        self.boundary = boundary;
        self
    }

    /// Sets the completeness flag without boundary information, as read from
    /// a file.
    pub fn with_complete_flag(mut self, complete: bool) -> Self {
        self.complete = complete;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.get(v).map(String::as_str)
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary[v]
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    fn find_edge(&self, a: usize, b: usize) -> Option<&Edge> {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by(|e| (e.a, e.b).cmp(&(a, b)))
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn label(&self, a: usize, b: usize) -> Option<u32> {
        self.find_edge(a, b).and_then(|e| e.label)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|a| a.len() == first)
            .then_some(first)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// BFS distances from `src`, skipping vertices flagged in `removed`.
    pub fn distances_avoiding(&self, src: usize, removed: &[bool]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        if removed.get(src).copied().unwrap_or(false) {
            return dist;
        }
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() && !removed.get(w).copied().unwrap_or(false) {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self, src: usize) -> Vec<Option<usize>> {
        self.distances_avoiding(src, &[])
    }

    pub fn distance(&self, a: usize, b: usize) -> Option<usize> {
        self.distances(a)[b]
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }

    /// Connectivity of the graph after deleting `removed` vertices.
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let mut mask = vec![false; self.vertex_count()];
        for &v in removed {
            mask[v] = true;
        }
        let Some(start) = (0..self.vertex_count()).find(|&v| !mask[v]) else {
            return true;
        };
        let dist = self.distances_avoiding(start, &mask);
        (0..self.vertex_count()).all(|v| mask[v] || dist[v].is_some())
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = side[v].unwrap();
                for &w in &self.adjacency[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(x) if x == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    /// Returns the subgraph and the map from new ids to old ids.
    pub fn induced(&self, vertices: &[usize]) -> (ChamberGraph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.a] != usize::MAX && index[e.b] != usize::MAX)
            .map(|e| (index[e.a], index[e.b], e.label));
        let sub = ChamberGraph::from_edges(vertices.len(), edges, self.provenance)
            .expect("induced subgraph of a simple graph is simple");
        (sub, vertices.to_vec())
    }

    /// Vertices all of whose neighbourhoods up to `margin` steps avoid the
    /// boundary of a truncated ball.
    pub fn deep_interior(&self, margin: usize) -> Vec<bool> {
        let n = self.vertex_count();
        let mut dist_to_boundary = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for v in 0..n {
            if self.boundary[v] {
                dist_to_boundary[v] = 0;
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist_to_boundary[w] == usize::MAX {
                    dist_to_boundary[w] = dist_to_boundary[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist_to_boundary.iter().map(|&d| d > margin).collect()
    }
}

/// Small generic graphs used as controls.
pub mod generators {
    use super::{ChamberGraph, Provenance};
    use alloc::vec::Vec;

    pub fn complete(n: usize) -> ChamberGraph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b, None)));
        ChamberGraph::from_edges(n, edges, Provenance::Generic).unwrap()
    }

    pub fn path(n: usize) -> ChamberGraph {
        let edges = (1..n).map(|i| (i - 1, i, None));
        ChamberGraph::from_edges(n, edges, Provenance::Generic).unwrap()
    }

    pub fn cycle(n: usize) -> ChamberGraph {
        assert!(n >= 3);
        let edges = (0..n).map(|i| (i, (i + 1) % n, None));
        ChamberGraph::from_edges(n, edges, Provenance::Generic).unwrap()
    }

    /// Complete ternary tree with `depth` levels below the root.
    pub fn ternary_tree(depth: usize) -> ChamberGraph {
        let mut edges = Vec::new();
        let mut level = alloc::vec![0usize];
        let mut next_id = 1;
        for _ in 0..depth {
            let mut next = Vec::new();
            for &parent in &level {
                for _ in 0..3 {
                    edges.push((parent, next_id, None));
                    next.push(next_id);
                    next_id += 1;
                }
            }
            level = next;
        }
        ChamberGraph::from_edges(next_id, edges, Provenance::Generic).unwrap()
    }

    /// Two copies of `K_{k+1}`, each with a matching of `t` edges removed,
    /// joined by the `2t` edges restoring the degrees. The result is
    /// `k`-regular but has a vertex cut of size `2t`.
    pub fn bridged_blocks(k: usize, t: usize) -> ChamberGraph {
        assert!(2 * t <= k + 1, "matching larger than the block");
        let m = k + 1;
        let mut edges = Vec::new();
        for block in 0..2 {
            let off = block * m;
            for a in 0..m {
                for b in a + 1..m {
                    let removed = a < 2 * t && a % 2 == 0 && b == a + 1;
                    if !removed {
                        edges.push((off + a, off + b, None));
                    }
                }
            }
        }
        for a in 0..2 * t {
            edges.push((a, m + a, None));
        }
        ChamberGraph::from_edges(2 * m, edges, Provenance::Generic).unwrap()
    }
}
