use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::ChamberGraph;

/// Unit-capacity flow network on the vertex-split digraph of a graph.
///
/// Vertex `x` becomes `in(x) = 2x` and `out(x) = 2x + 1` joined by an arc of
/// capacity one; every undirected edge `{a, b}` becomes `out(a) -> in(b)` and
/// `out(b) -> in(a)`. The source is `out(u)` and the sink `in(v)`.
const UNBOUNDED: u32 = u32::MAX / 2;

pub(crate) struct SplitNetwork {
    to: Vec<usize>,
    cap: Vec<u32>,
    full: Vec<u32>,
    arcs: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
    flow: usize,
}

pub(crate) struct FlowResult {
    pub value: usize,
    pub paths: Vec<Vec<usize>>,
    pub cut: Vec<usize>,
    pub direct_edge: bool,
}

impl SplitNetwork {
    pub fn new(graph: &ChamberGraph, u: usize, v: usize) -> Self {
        let n = graph.vertex_count();
        let mut net = SplitNetwork {
            to: Vec::with_capacity(4 * (n + graph.edge_count())),
            cap: Vec::new(),
            full: Vec::new(),
            arcs: vec![Vec::new(); 2 * n],
            source: 2 * u + 1,
            sink: 2 * v,
            flow: 0,
        };
        for x in 0..n {
            if x != u && x != v {
                net.add_arc(2 * x, 2 * x + 1, 1);
            }
            for &y in graph.neighbors(x) {
                // only vertices may be cut, except the direct edge itself
                let cap = if x == u && y == v { 1 } else { UNBOUNDED };
                net.add_arc(2 * x + 1, 2 * y, cap);
            }
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.to.len();
        self.to.push(to);
        self.cap.push(cap);
        self.full.push(cap);
        self.arcs[from].push(id);
        self.to.push(from);
        self.cap.push(0);
        self.full.push(0);
        self.arcs[to].push(id + 1);
    }

    fn augment(&mut self) -> bool {
        let mut parent_arc = vec![usize::MAX; self.arcs.len()];
        let mut seen = vec![false; self.arcs.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        'bfs: while let Some(x) = queue.pop_front() {
            for &a in &self.arcs[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    parent_arc[y] = a;
                    if y == self.sink {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if !seen[self.sink] {
            return false;
        }
        let mut y = self.sink;
        while y != self.source {
            let a = parent_arc[y];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            y = self.to[a ^ 1];
        }
        self.flow += 1;
        true
    }

    /// Pushes flow until the maximum or `limit` is reached.
    pub fn run(&mut self, limit: usize) -> usize {
        while self.flow < limit && self.augment() {}
        self.flow
    }

    fn residual_reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.arcs[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Decomposes the current flow into vertex paths and reads off a minimum
    /// cut. Only meaningful after `run(usize::MAX)`.
    pub fn finish(self, u: usize, v: usize) -> FlowResult {
        let mut used = vec![false; self.to.len()];
        let mut paths = Vec::new();
        // forward arcs have even ids; vertex capacities keep every arc's
        // flow at zero or one
        let carries =
            |a: usize, used: &[bool]| a.is_multiple_of(2) && self.cap[a] < self.full[a] && !used[a];
        for &a in &self.arcs[self.source] {
            if !carries(a, &used) {
                continue;
            }
            used[a] = true;
            let mut path = vec![u];
            let mut node = self.to[a];
            while node != self.sink {
                // node is in(x): take the internal arc, then the next out arc
                let x = node / 2;
                path.push(x);
                let out = 2 * x + 1;
                let next = self.arcs[out]
                    .iter()
                    .copied()
                    .find(|&b| carries(b, &used))
                    .expect("flow conservation at a split vertex");
                used[next] = true;
                node = self.to[next];
            }
            path.push(v);
            paths.push(path);
        }
        let reach = self.residual_reachable();
        let n = self.arcs.len() / 2;
        let cut = (0..n)
            .filter(|&x| x != u && x != v && reach[2 * x] && !reach[2 * x + 1])
            .collect();
        let direct_edge = self.arcs[self.source]
            .iter()
            .any(|&a| a % 2 == 0 && self.to[a] == self.sink);
        FlowResult {
            value: self.flow,
            paths,
            cut,
            direct_edge,
        }
    }
}
